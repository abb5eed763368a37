//! Domain objects built from a problem file at one parameter point.

use super::problem::{Entry, ParseError, Pos, ProblemFile, Section, Value};
use crate::algebra::factorization::MatrixFactorization;
use crate::algebra::module::PresentedModule;
use crate::algebra::parse::{eval_int, to_polynomial, Expr, Params};
use crate::algebra::poly::Polynomial;
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::ring::{HypersurfaceRing, WeightSystem};
use crate::error::Error;
use crate::gauss_manin::{ExactLRSequence, HGenerator, InvariantRingModel};
use crate::lie::{Connection, Derivation, LieRinehartAlgebra};
use std::sync::Arc;

pub const DEFAULT_DEGREE_BOUND: i64 = 64;

/// Why a problem could not be instantiated at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceError {
    /// A template produced a negative exponent.
    NonPolynomial(Pos, String),
    Invalid(Pos, String),
}

impl InstanceError {
    pub fn pos(&self) -> Pos {
        match self {
            InstanceError::NonPolynomial(p, _) | InstanceError::Invalid(p, _) => *p,
        }
    }

    pub fn into_parse_error(self) -> ParseError {
        match self {
            InstanceError::NonPolynomial(p, m) | InstanceError::Invalid(p, m) => ParseError::new(p, m),
        }
    }
}

impl std::fmt::Display for InstanceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InstanceError::NonPolynomial(p, m) => write!(f, "{p}: not polynomial: {m}"),
            InstanceError::Invalid(p, m) => write!(f, "{p}: {m}"),
        }
    }
}

type IResult<T> = std::result::Result<T, InstanceError>;

fn invalid(pos: Pos, m: impl std::fmt::Display) -> InstanceError {
    InstanceError::Invalid(pos, m.to_string())
}

fn eval_err(pos: Pos, m: String) -> InstanceError {
    if m.starts_with("negative exponent") {
        InstanceError::NonPolynomial(pos, m)
    } else {
        InstanceError::Invalid(pos, m)
    }
}

fn expr(v: &Value, pos: Pos) -> IResult<&Expr> {
    match v {
        Value::Expr(e) => Ok(e),
        other => Err(invalid(pos, format!("expected an expression, found '{other}'"))),
    }
}

pub fn int_value(v: &Value, params: &Params, pos: Pos) -> IResult<i64> {
    eval_int(expr(v, pos)?, params).map_err(|m| eval_err(pos, m))
}

fn ident(v: &Value, pos: Pos) -> IResult<String> {
    v.as_ident()
        .map(str::to_string)
        .ok_or_else(|| invalid(pos, format!("expected a name, found '{v}'")))
}

fn required<'a>(s: &'a Section, key: &str) -> IResult<&'a Entry> {
    s.get(key)
        .ok_or_else(|| invalid(s.pos, format!("{} needs '{key}'", s.header())))
}

#[derive(Clone, Debug)]
pub struct TaskOptions {
    pub command: Option<String>,
    pub algebra: Option<String>,
    pub h: Option<String>,
    pub degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub params: Params,
    pub max_degree: Option<i64>,
    pub degree_bound: i64,
    pub task: TaskOptions,
    pub ring: Option<Arc<HypersurfaceRing>>,
    pub algebras: Vec<(String, LieRinehartAlgebra)>,
    pub module: Option<PresentedModule>,
    /// Presentation and companion as written, unreduced.
    pub raw_presentation: Option<PolyMatrix>,
    pub companion: Option<PolyMatrix>,
    connection: Option<ConnectionSpec>,
    sequence: Option<Section>,
    h_sections: Vec<Section>,
}

#[derive(Clone, Debug)]
struct ConnectionSpec {
    algebra: String,
    matrices: Vec<(String, Value, Pos)>,
}

impl Instance {
    pub fn build(file: &ProblemFile, params: &Params, max_degree_override: Option<i64>) -> IResult<Self> {
        let task = file.section("task");
        let opt = |key: &str| task.and_then(|t| t.get(key));
        let max_degree = match max_degree_override {
            Some(d) => Some(d),
            None => opt("max_degree")
                .map(|e| int_value(&e.value, params, e.pos))
                .transpose()?,
        };
        let degree_bound = opt("degree_bound")
            .map(|e| int_value(&e.value, params, e.pos))
            .transpose()?
            .unwrap_or(DEFAULT_DEGREE_BOUND);
        let task_opts = TaskOptions {
            command: opt("command").map(|e| ident(&e.value, e.pos)).transpose()?,
            algebra: opt("algebra").map(|e| ident(&e.value, e.pos)).transpose()?,
            h: opt("h").map(|e| ident(&e.value, e.pos)).transpose()?,
            degree: opt("degree")
                .map(|e| {
                    let d = int_value(&e.value, params, e.pos)?;
                    usize::try_from(d).map_err(|_| invalid(e.pos, "degree must be nonnegative"))
                })
                .transpose()?,
        };
        let mut inst = Instance {
            params: params.clone(),
            max_degree,
            degree_bound,
            task: task_opts,
            ring: None,
            algebras: Vec::new(),
            module: None,
            raw_presentation: None,
            companion: None,
            connection: None,
            sequence: file.section("sequence").cloned(),
            h_sections: file.named("h").cloned().collect(),
        };
        let Some(rs) = file.section("ring") else {
            for kind in ["lie", "module", "connection", "sequence", "h"] {
                if let Some(s) = file.sections.iter().find(|s| s.kind == kind) {
                    return Err(invalid(s.pos, format!("{} needs a [ring] section", s.header())));
                }
            }
            return Ok(inst);
        };
        let ring = Arc::new(build_ring(rs, params)?);
        inst.ring = Some(ring.clone());
        for s in file.named("lie") {
            let name = s.name.clone().expect("lie sections are named");
            let alg = inst.build_lie(s)?;
            inst.algebras.push((name, alg));
        }
        if let Some(ms) = file.section("module") {
            inst.build_module(ms)?;
        }
        if let Some(cs) = file.section("connection") {
            let algebra = match cs.get("algebra") {
                Some(e) => ident(&e.value, e.pos)?,
                None => inst
                    .algebras
                    .first()
                    .map(|(n, _)| n.clone())
                    .ok_or_else(|| invalid(cs.pos, "no [lie] section for the connection"))?,
            };
            let alg = inst.algebra_at(&algebra, cs.pos)?;
            let mut matrices = Vec::new();
            for e in cs.entries.iter().filter(|e| e.key != "algebra") {
                if alg.index_of(&e.key).is_none() {
                    return Err(invalid(
                        e.pos,
                        format!("'{}' is not a generator of {algebra}", e.key),
                    ));
                }
                matrices.push((e.key.clone(), e.value.clone(), e.pos));
            }
            inst.connection = Some(ConnectionSpec {
                algebra,
                matrices,
            });
        }
        Ok(inst)
    }

    pub fn ring(&self) -> Result<&Arc<HypersurfaceRing>, Error> {
        self.ring
            .as_ref()
            .ok_or_else(|| Error::InvalidSequence("problem has no [ring] section".into()))
    }

    fn vars(&self) -> &[String] {
        self.ring.as_ref().expect("ring built").variables()
    }

    fn poly(&self, v: &Value, pos: Pos) -> IResult<Polynomial> {
        to_polynomial(expr(v, pos)?, self.vars(), &self.params).map_err(|m| eval_err(pos, m))
    }

    fn poly_matrix(&self, v: &Value, pos: Pos) -> IResult<PolyMatrix> {
        let nv = self.vars().len();
        let rows: Vec<Vec<Polynomial>> = match v {
            Value::Matrix(rows) => rows
                .iter()
                .map(|r| r.iter().map(|x| self.poly(x, pos)).collect::<IResult<Vec<_>>>())
                .collect::<IResult<_>>()?,
            Value::Diag(d) => {
                let n = d.len();
                let mut rows = vec![vec![Polynomial::zero(nv); n]; n];
                for (i, x) in d.iter().enumerate() {
                    rows[i][i] = self.poly(x, pos)?;
                }
                rows
            }
            Value::Expr(_) => vec![vec![self.poly(v, pos)?]],
            other => return Err(invalid(pos, format!("expected a matrix, found '{other}'"))),
        };
        PolyMatrix::from_rows(rows, nv).map_err(|e| invalid(pos, e))
    }

    fn coefficient_vector(&self, v: &Value, pos: Pos) -> IResult<Vec<Polynomial>> {
        let items: Vec<&Value> = match v {
            Value::Tuple(x) => x.iter().collect(),
            Value::Expr(_) => vec![v],
            other => return Err(invalid(pos, format!("expected a tuple, found '{other}'"))),
        };
        if items.len() != self.vars().len() {
            return Err(invalid(
                pos,
                format!("expected {} coefficients, found {}", self.vars().len(), items.len()),
            ));
        }
        items.into_iter().map(|x| self.poly(x, pos)).collect()
    }

    fn derivation(&self, v: &Value, pos: Pos) -> IResult<Derivation> {
        let coeffs = self.coefficient_vector(v, pos)?;
        Derivation::new(self.ring.clone().expect("ring built"), coeffs).map_err(|e| invalid(pos, e))
    }

    fn build_lie(&self, s: &Section) -> IResult<LieRinehartAlgebra> {
        let ge = required(s, "generators")?;
        let gens = ge
            .value
            .items()
            .into_iter()
            .map(|v| self.derivation(v, ge.pos))
            .collect::<IResult<Vec<_>>>()?;
        let names = match s.get("names") {
            Some(e) => {
                let n = e
                    .value
                    .items()
                    .into_iter()
                    .map(|v| ident(v, e.pos))
                    .collect::<IResult<Vec<_>>>()?;
                if n.len() != gens.len() {
                    return Err(invalid(e.pos, "one name per generator"));
                }
                n
            }
            None => (1..=gens.len()).map(|i| format!("g{i}")).collect(),
        };
        let ring = self.ring.clone().expect("ring built");
        let mut alg = LieRinehartAlgebra::new(ring, names, gens).map_err(|e| invalid(ge.pos, e))?;
        if let Some(e) = s.get("syzygies") {
            let rho = self.poly_matrix(&e.value, e.pos)?;
            alg = alg.with_syzygies(rho).map_err(|x| invalid(e.pos, x))?;
        }
        Ok(alg)
    }

    fn build_module(&mut self, s: &Section) -> IResult<()> {
        let ring = self.ring.clone().expect("ring built");
        let shift = s
            .get("shift")
            .map(|e| int_value(&e.value, &self.params, e.pos))
            .transpose()?
            .unwrap_or(0);
        let pe = required(s, "presentation")?;
        let solve = s
            .get("degrees")
            .map(|e| e.value.as_ident() == Some("solve"))
            .unwrap_or(false);
        let degrees = match s.get("degrees") {
            Some(e) if !solve => Some(
                e.value
                    .items()
                    .into_iter()
                    .map(|v| int_value(v, &self.params, e.pos))
                    .collect::<IResult<Vec<_>>>()?,
            ),
            _ => None,
        };
        let module = if pe.value.as_ident() == Some("free") {
            let degs = degrees.ok_or_else(|| invalid(s.pos, "a free module needs 'degrees'"))?;
            PresentedModule::free(ring, degs, shift)
        } else {
            let pres = self.poly_matrix(&pe.value, pe.pos)?;
            self.raw_presentation = Some(pres.clone());
            match degrees {
                Some(d) => PresentedModule::new(ring, d, pres, shift),
                None => PresentedModule::with_solved_degrees(ring, pres, shift),
            }
            .map_err(|e| invalid(pe.pos, e))?
        };
        if let Some(e) = s.get("companion") {
            self.companion = Some(self.poly_matrix(&e.value, e.pos)?);
        }
        self.module = Some(module);
        Ok(())
    }

    fn algebra_at(&self, name: &str, pos: Pos) -> IResult<&LieRinehartAlgebra> {
        self.algebras
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
            .ok_or_else(|| invalid(pos, format!("no [lie {name}] section")))
    }

    pub fn algebra(&self, name: &str) -> Result<&LieRinehartAlgebra, Error> {
        self.algebra_at(name, Pos::default())
            .map_err(|_| Error::InvalidSequence(format!("no algebra named {name}")))
    }

    pub fn module(&self) -> Result<&PresentedModule, Error> {
        self.module
            .as_ref()
            .ok_or_else(|| Error::InvalidSequence("problem has no [module] section".into()))
    }

    pub fn factorization(&self) -> Result<MatrixFactorization, Error> {
        let ring = self.ring()?;
        let f = ring
            .relation()
            .ok_or_else(|| Error::InvalidSequence("the ring has no relation".into()))?
            .polynomial()
            .clone();
        let phi = self
            .raw_presentation
            .clone()
            .ok_or_else(|| Error::InvalidSequence("module has no presentation matrix".into()))?;
        let psi = self
            .companion
            .clone()
            .ok_or_else(|| Error::InvalidSequence("module has no companion matrix".into()))?;
        MatrixFactorization::new(f, phi, psi)
    }

    pub fn connection_algebra(&self) -> Result<&LieRinehartAlgebra, Error> {
        let spec = self
            .connection
            .as_ref()
            .ok_or_else(|| Error::InvalidSequence("problem has no [connection] section".into()))?;
        self.algebra(&spec.algebra)
    }

    /// Connection matrices by generator; missing ones are zero. A matrix
    /// that fails to instantiate is returned as its error.
    pub fn connection_matrices(&self) -> Result<Vec<IResult<PolyMatrix>>, Error> {
        let alg = self.connection_algebra()?;
        let spec = self.connection.as_ref().expect("checked");
        let n = self.module()?.ngens();
        let nv = self.ring()?.nvars();
        Ok(alg
            .names()
            .iter()
            .map(|g| match spec.matrices.iter().find(|(k, _, _)| k == g) {
                Some((_, v, pos)) => self.poly_matrix(v, *pos),
                None => Ok(PolyMatrix::zeros(n, n, nv)),
            })
            .collect())
    }

    pub fn connection(&self) -> Result<Connection, Error> {
        let alg = self.connection_algebra()?.clone();
        let mats = self
            .connection_matrices()?
            .into_iter()
            .collect::<IResult<Vec<_>>>()
            .map_err(|e| match e {
                InstanceError::NonPolynomial(_, m) => Error::NonPolynomial(m),
                InstanceError::Invalid(_, m) => Error::InvalidSequence(m),
            })?;
        Connection::new(alg, self.module()?.clone(), mats)
    }

    /// The connection restricted to the task algebra, the sequence kernel,
    /// or left over its own algebra, in that order of preference.
    pub fn working_connection(&self) -> Result<Connection, Error> {
        let conn = self.connection()?;
        let target = match (&self.task.algebra, &self.sequence) {
            (Some(a), _) => Some(a.clone()),
            (None, Some(s)) => s.get("kernel").and_then(|e| e.value.as_ident()).map(str::to_string),
            _ => None,
        };
        match target {
            Some(name) if name != self.connection.as_ref().expect("built").algebra => {
                conn.restrict(self.algebra(&name)?, self.degree_bound)
            }
            _ => Ok(conn),
        }
    }

    pub fn sequence(&self) -> Result<ExactLRSequence, Error> {
        let s = self
            .sequence
            .as_ref()
            .ok_or_else(|| Error::InvalidSequence("problem has no [sequence] section".into()))?;
        let conv = |e: InstanceError| Error::InvalidSequence(e.to_string());
        let name = |key: &str| -> Result<String, Error> {
            let e = required(s, key).map_err(conv)?;
            ident(&e.value, e.pos).map_err(conv)
        };
        let kernel = self.algebra(&name("kernel")?)?.clone();
        let algebra = match s.get("algebra") {
            Some(_) => self.algebra(&name("algebra")?)?.clone(),
            None => self.connection_algebra()?.clone(),
        };
        let ie = required(s, "invariants").map_err(conv)?;
        let invs = ie
            .value
            .items()
            .into_iter()
            .map(|v| self.poly(v, ie.pos))
            .collect::<IResult<Vec<_>>>()
            .map_err(conv)?;
        let model = InvariantRingModel::new(&kernel, invs)?;
        let mut gens = Vec::new();
        for h in &self.h_sections {
            let ae = required(h, "action").map_err(conv)?;
            let action = ae
                .value
                .items()
                .into_iter()
                .map(|v| self.poly(v, ae.pos))
                .collect::<IResult<Vec<_>>>()
                .map_err(conv)?;
            let le = required(h, "lift").map_err(conv)?;
            let lift = self.derivation(&le.value, le.pos).map_err(conv)?;
            gens.push(HGenerator {
                name: h.name.clone().expect("h sections are named"),
                action,
                lift,
            });
        }
        ExactLRSequence::new(kernel, algebra, model, gens, self.degree_bound)
    }
}

fn build_ring(s: &Section, params: &Params) -> IResult<HypersurfaceRing> {
    let ve = required(s, "variables")?;
    let vars = ve
        .value
        .items()
        .into_iter()
        .map(|v| ident(v, ve.pos))
        .collect::<IResult<Vec<_>>>()?;
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(invalid(ve.pos, format!("variable '{v}' listed twice")));
        }
    }
    let weights = match s.get("weights") {
        Some(e) => {
            let w = e
                .value
                .items()
                .into_iter()
                .map(|v| int_value(v, params, e.pos))
                .collect::<IResult<Vec<_>>>()?;
            if w.len() != vars.len() {
                return Err(invalid(e.pos, "one weight per variable"));
            }
            WeightSystem::new(&w).map_err(|x| invalid(e.pos, x))?
        }
        None => WeightSystem::standard(vars.len()),
    };
    let Some(re) = s.get("relation") else {
        if let Some(e) = s.get("reduce") {
            return Err(invalid(e.pos, "'reduce' needs a 'relation'"));
        }
        return HypersurfaceRing::polynomial_ring(vars, weights).map_err(|e| invalid(ve.pos, e));
    };
    let f = to_polynomial(expr(&re.value, re.pos)?, &vars, params).map_err(|m| eval_err(re.pos, m))?;
    let de = required(s, "reduce")?;
    let lead = to_polynomial(expr(&de.value, de.pos)?, &vars, params).map_err(|m| eval_err(de.pos, m))?;
    let pure = (lead.len() == 1)
        .then(|| lead.terms().next().expect("one term"))
        .filter(|(m, c)| {
            num_traits::One::is_one(*c) && m.exponents().iter().filter(|&&e| e > 0).count() == 1
        });
    let Some((mono, _)) = pure else {
        return Err(invalid(
            de.pos,
            format!("reduction monomial '{}' is not a pure power of one variable", de.value),
        ));
    };
    let var = mono.exponents().iter().position(|&e| e > 0).expect("pure power");
    HypersurfaceRing::hypersurface(vars, weights, f, var, mono.exponent(var))
        .map_err(|e| invalid(re.pos, e))
}
