//! Command dispatch over the parameter points of a problem.

use super::instance::{int_value, Instance, InstanceError};
use super::problem::{parse_problem, ParseError, Pos, ProblemFile, Value};
use super::report::{self, table, Report, Tree};
use crate::algebra::parse::{eval_int, parse_expr, Expr, Params};
use crate::algebra::rational::{frac, int, Rational};
use crate::brieskorn::{cusp_oracle, cusp_setup, verify_syzygies, Orientation};
use crate::complex::StandardComplex;
use crate::error::{Error, Result};
use crate::gauss_manin::{horizontal_sections, ExactLRSequence, GaussManin, GysinClass, HGenerator, InvariantRingModel};
use crate::lie::connection::{descent_witness, matrix_degree_defects};
use crate::lie::derivation::relation_residual;
use crate::lie::Connection;
use num_traits::Zero;
use rayon::prelude::*;
use std::fmt;

const DEFAULT_MAX_DEGREE: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    VerifyMf,
    VerifySyzygies,
    CheckConnection,
    ComplexCheck,
    Cohomology,
    Horizontal,
    GaussManin,
    Gysin,
    Cusp,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::VerifyMf,
        Command::VerifySyzygies,
        Command::CheckConnection,
        Command::ComplexCheck,
        Command::Cohomology,
        Command::Horizontal,
        Command::GaussManin,
        Command::Gysin,
        Command::Cusp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyMf => "verify-mf",
            Command::VerifySyzygies => "verify-syzygies",
            Command::CheckConnection => "check-connection",
            Command::ComplexCheck => "complex-check",
            Command::Cohomology => "cohomology",
            Command::Horizontal => "horizontal",
            Command::GaussManin => "gauss-manin",
            Command::Gysin => "gysin",
            Command::Cusp => "cusp",
        }
    }

    /// Accepts `verify-mf` and `verify_mf`.
    pub fn parse(s: &str) -> Option<Command> {
        let s = s.replace('_', "-");
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunError {
    Parse(ParseError),
    Usage(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Parse(e) => write!(f, "parse error: {e}"),
            RunError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<ParseError> for RunError {
    fn from(e: ParseError) -> Self {
        RunError::Parse(e)
    }
}

/// A range override, `name = lo..hi`, whose bounds may use earlier names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridRange {
    pub name: String,
    pub lo: Expr,
    pub hi: Expr,
}

/// Parses `m=2..5,n=2..5,k=1..m`.
pub fn parse_grid(spec: &str) -> std::result::Result<Vec<GridRange>, String> {
    spec.split(',')
        .map(|part| {
            let (name, range) = part
                .split_once('=')
                .ok_or_else(|| format!("expected name=lo..hi in '{part}'"))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| format!("expected lo..hi in '{part}'"))?;
            let name = name.trim().to_string();
            if name.is_empty() {
                return Err(format!("missing name in '{part}'"));
            }
            Ok(GridRange {
                name,
                lo: parse_expr(lo).map_err(|e| e.to_string())?,
                hi: parse_expr(hi).map_err(|e| e.to_string())?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub max_degree: Option<i64>,
    pub grid: Vec<GridRange>,
}

/// Parameter points: `[params]` values, then the product of `[grid]`
/// ranges (with overrides) in order.
pub fn grid_points(file: &ProblemFile, overrides: &[GridRange]) -> std::result::Result<(Vec<String>, Vec<Params>), ParseError> {
    let mut base = Params::new();
    if let Some(s) = file.section("params") {
        for e in &s.entries {
            let v = int_value(&e.value, &base, e.pos).map_err(InstanceError::into_parse_error)?;
            base.insert(e.key.clone(), v);
        }
    }
    let mut ranges: Vec<(String, Expr, Expr, Pos)> = Vec::new();
    if let Some(s) = file.section("grid") {
        for e in &s.entries {
            match &e.value {
                Value::Range(a, b) => ranges.push((e.key.clone(), a.clone(), b.clone(), e.pos)),
                other => {
                    return Err(ParseError::new(
                        e.pos,
                        format!("grid entry '{}' must be a range, found '{other}'", e.key),
                    ))
                }
            }
        }
    }
    for o in overrides {
        match ranges.iter_mut().find(|r| r.0 == o.name) {
            Some(r) => {
                r.1 = o.lo.clone();
                r.2 = o.hi.clone();
            }
            None => ranges.push((o.name.clone(), o.lo.clone(), o.hi.clone(), Pos::default())),
        }
    }
    let names = ranges.iter().map(|r| r.0.clone()).collect();
    let mut points = vec![base];
    for (name, lo, hi, pos) in &ranges {
        let mut next = Vec::new();
        for p in &points {
            let lo = eval_int(lo, p).map_err(|m| ParseError::new(*pos, m))?;
            let hi = eval_int(hi, p).map_err(|m| ParseError::new(*pos, m))?;
            for v in lo..=hi {
                let mut q = p.clone();
                q.insert(name.clone(), v);
                next.push(q);
            }
        }
        points = next;
    }
    Ok((names, points))
}

/// Parses and checks that the problem instantiates at its first point.
pub fn load_problem(text: &str) -> std::result::Result<ProblemFile, ParseError> {
    let file = parse_problem(text)?;
    let (_, points) = grid_points(&file, &[])?;
    if let Some(p) = points.first() {
        Instance::build(&file, p, None).map_err(InstanceError::into_parse_error)?;
    }
    Ok(file)
}

pub fn run(command: Command, file: &ProblemFile, opts: &RunOptions) -> std::result::Result<Report, RunError> {
    if let Some(c) = file
        .section("task")
        .and_then(|t| t.get("command"))
        .and_then(|e| e.value.as_ident())
    {
        if Command::parse(c) != Some(command) {
            return Err(RunError::Usage(format!(
                "command {command} does not match the problem's task '{c}'"
            )));
        }
    }
    let (names, points) = grid_points(file, &opts.grid)?;
    let first = points.first().cloned().unwrap_or_default();
    let inst = Instance::build(file, &first, opts.max_degree).map_err(|e| RunError::Parse(e.into_parse_error()))?;
    check_shape(command, &inst)?;
    let trees: Vec<Tree> = points
        .par_iter()
        .map(|p| run_point(command, file, p, opts.max_degree))
        .collect();
    let mut body = Tree::new();
    if names.is_empty() {
        body = trees.into_iter().next().expect("one point");
    } else {
        let failed = trees.iter().filter(|t| !t.all_ok()).count();
        let mut pts = Tree::new();
        for (p, t) in points.iter().zip(&trees) {
            let key = names
                .iter()
                .map(|n| format!("{n}={}", p[n]))
                .collect::<Vec<_>>()
                .join(" ");
            pts.child(key, t.clone());
        }
        let mut summary = Tree::new();
        summary.text("points", points.len()).text("failed", failed);
        if command == Command::VerifySyzygies {
            let mut seen: Vec<String> = Vec::new();
            for t in &trees {
                if let Some(report::Node::Text(o)) = t.get("orientation") {
                    if !seen.contains(o) {
                        seen.push(o.clone());
                    }
                }
            }
            summary
                .text("orientations", seen.join(", "))
                .check("orientation_consistent", seen.len() == 1);
        }
        body.text("grid", names.join(", ")).child("points", pts).child("summary", summary);
    }
    Ok(Report::new(command.name(), body))
}

fn check_shape(command: Command, inst: &Instance) -> std::result::Result<(), RunError> {
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(RunError::Usage(format!("{command} needs {what}")))
        }
    };
    match command {
        Command::Cusp => need(
            inst.params.contains_key("m") && inst.params.contains_key("n"),
            "parameters m and n",
        ),
        Command::VerifyMf => need(
            inst.raw_presentation.is_some() && inst.companion.is_some(),
            "a module with presentation and companion",
        ),
        Command::VerifySyzygies => need(
            inst.algebras.iter().any(|(_, a)| a.syzygies().is_some()),
            "a [lie] section with syzygies",
        ),
        Command::CheckConnection => need(
            inst.connection_algebra().is_ok() && inst.companion.is_some(),
            "a [connection] section and a module with companion",
        ),
        Command::GaussManin => need(
            inst.connection_algebra().is_ok() && inst.sequence().is_ok(),
            "a [connection] section and a valid [sequence]",
        ),
        Command::Horizontal => need(
            inst.connection_algebra().is_ok() && (inst.task.algebra.is_some() || inst.sequence().is_ok()),
            "a [connection] section and a kernel algebra",
        ),
        _ => need(inst.connection_algebra().is_ok(), "a [connection] section"),
    }
}

fn run_point(command: Command, file: &ProblemFile, params: &Params, max_degree: Option<i64>) -> Tree {
    let inst = match Instance::build(file, params, max_degree) {
        Ok(i) => i,
        Err(e) => {
            let mut t = Tree::new();
            let kind = match e {
                InstanceError::NonPolynomial(..) => "non-polynomial",
                InstanceError::Invalid(..) => "invalid",
            };
            t.text("error", &e).text("error_kind", kind).check("instantiated", false);
            return t;
        }
    };
    let out = match command {
        Command::VerifyMf => verify_mf(&inst),
        Command::VerifySyzygies => verify_syz(&inst),
        Command::CheckConnection => check_connection(&inst),
        Command::ComplexCheck => complex_check(&inst),
        Command::Cohomology => cohomology(&inst),
        Command::Horizontal => horizontal(&inst),
        Command::GaussManin => gauss_manin(&inst),
        Command::Gysin => gysin(&inst),
        Command::Cusp => cusp(&inst),
    };
    out.unwrap_or_else(|e| {
        let mut t = Tree::new();
        t.text("error", e).check("completed", false);
        t
    })
}

fn max_degree(inst: &Instance) -> i64 {
    inst.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
}

fn verify_mf(inst: &Instance) -> Result<Tree> {
    let mf = inst.factorization()?;
    let names = inst.ring()?.variables();
    let mut t = Tree::new();
    t.text("size", mf.size()).text("f", mf.f.display(names));
    match mf.verify() {
        Ok(()) => {
            t.check("identity", true);
        }
        Err(f) => {
            t.check("identity", false).text(
                "failure",
                format!(
                    "{} entry ({}, {}) is {}, expected {}",
                    f.product,
                    f.row + 1,
                    f.col + 1,
                    f.found.display(names),
                    f.expected.display(names)
                ),
            );
        }
    }
    Ok(t)
}

fn verify_syz(inst: &Instance) -> Result<Tree> {
    let alg = match &inst.task.algebra {
        Some(n) => inst.algebra(n)?,
        None => &inst
            .algebras
            .iter()
            .find(|(_, a)| a.syzygies().is_some())
            .expect("checked by shape")
            .1,
    };
    let rho = alg
        .syzygies()
        .ok_or_else(|| Error::InvalidSequence("algebra has no syzygies".into()))?;
    let ring = inst.ring()?;
    let mut t = Tree::new();
    let mut valid = Tree::new();
    for (i, g) in alg.generators().iter().enumerate() {
        let r = relation_residual(ring, g.coefficients())?;
        valid.check(alg.name(i), r.is_zero());
    }
    t.child("preserves_relation", valid);
    let rep = verify_syzygies(alg.generators(), rho)?;
    t.text("orientation", rep.orientation.as_str()).check(
        "single_orientation",
        matches!(rep.orientation, Orientation::Rows | Orientation::Columns),
    );
    let show = |res: &[crate::lie::Derivation]| {
        let parts: Vec<String> = res
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| format!("{}: {}", i + 1, d.display()))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("; ")
        }
    };
    t.text("row_residuals", show(&rep.row_residuals))
        .text("column_residuals", show(&rep.column_residuals));
    Ok(t)
}

fn check_connection(inst: &Instance) -> Result<Tree> {
    let alg = inst.connection_algebra()?;
    let mf = inst.factorization()?;
    let module = inst.module()?;
    let ring = inst.ring()?;
    let names = ring.variables();
    let mut t = Tree::new();
    for (g, mat) in inst.connection_matrices()?.into_iter().enumerate() {
        let mut s = Tree::new();
        match mat {
            Err(e) => {
                s.text("error", &e).check("descends", false);
            }
            Ok(a) => {
                let der = alg.generator(g)?;
                let deg = der.degree().value().unwrap_or(0);
                let defects = matrix_degree_defects(module, &a, deg);
                s.check("homogeneous", defects.is_empty());
                if !defects.is_empty() {
                    let d: Vec<String> = defects.iter().map(|(i, j)| format!("({}, {})", i + 1, j + 1)).collect();
                    s.text("degree_defects", d.join(" "));
                }
                match descent_witness(ring, der, &a, &mf)? {
                    Ok(b) => {
                        s.check("descends", true)
                            .text("witness", report::poly_matrix(&b, names));
                    }
                    Err(f) => {
                        s.check("descends", false).text(
                            "remainder",
                            format!("({}, {}): {}", f.row + 1, f.col + 1, f.remainder.display(names)),
                        );
                    }
                }
            }
        }
        t.child(alg.name(g), s);
    }
    if let Ok(conn) = inst.connection() {
        let curved = conn.curved_pairs(inst.degree_bound);
        t.text(
            "curvature",
            match curved {
                Ok(c) => curved_text(&conn, &c),
                Err(e) => format!("not computed: {e}"),
            },
        );
    }
    Ok(t)
}

fn curved_text(conn: &Connection, pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "flat".into();
    }
    let a = conn.algebra();
    let p: Vec<String> = pairs
        .iter()
        .map(|(i, j)| format!("({}, {})", a.name(*i), a.name(*j)))
        .collect();
    format!("nonzero on {}", p.join(" "))
}

fn complex_check(inst: &Instance) -> Result<Tree> {
    let conn = inst.working_connection()?;
    let c = StandardComplex::new(&conn, inst.degree_bound)?;
    let check = c.verify(max_degree(inst))?;
    let mut t = Tree::new();
    t.text("algebra", conn.algebra().names().join(", "))
        .text("degrees", format!("{}..{}", check.min_degree, check.max_degree))
        .check("d_squared_zero", check.ok());
    if let Some((p, d)) = check.first_failure {
        t.text("first_failure", format!("p={p} degree={d}"));
    }
    t.text("curvature", curved_text(&conn, &conn.curved_pairs(inst.degree_bound)?));
    Ok(t)
}

fn cohomology(inst: &Instance) -> Result<Tree> {
    let conn = inst.working_connection()?;
    let c = StandardComplex::new(&conn, inst.degree_bound)?;
    let h = c.cohomology(max_degree(inst))?;
    let mut t = Tree::new();
    t.text("algebra", conn.algebra().names().join(", "))
        .text("degrees", format!("{}..{}", h.min_degree, h.max_degree));
    for p in 0..=h.rank {
        t.text(format!("H{p}"), table(&h.row(p)));
    }
    for p in 0..=h.rank {
        let row: Vec<(i64, usize)> = h.slices.iter().map(|s| (s.degree, s.cochain_dims[p])).collect();
        t.text(format!("C{p}"), table(&row));
    }
    Ok(t)
}

fn horizontal(inst: &Instance) -> Result<Tree> {
    let conn = inst.working_connection()?;
    let hs = horizontal_sections(&conn, max_degree(inst), inst.degree_bound)?;
    let names = conn.ring().variables();
    let mut t = Tree::new();
    t.text("algebra", conn.algebra().names().join(", "))
        .text("dims", table(&hs.dims()));
    let mut basis = Tree::new();
    for (d, b) in &hs.slices {
        if !b.is_empty() {
            let s: Vec<String> = b.iter().map(|w| w.display(names)).collect();
            basis.text(d.to_string(), s.join("; "));
        }
    }
    t.child("basis", basis);
    Ok(t)
}

fn gauss_manin(inst: &Instance) -> Result<Tree> {
    let seq = inst.sequence()?;
    let conn = inst.connection()?;
    let gm = GaussManin::new(&seq, &conn)?;
    let max = max_degree(inst);
    let hs: Vec<usize> = match &inst.task.h {
        Some(n) => vec![seq
            .h_generators()
            .iter()
            .position(|h| &h.name == n)
            .ok_or_else(|| Error::InvalidSequence(format!("no H-generator {n}")))?],
        None => (0..seq.h_generators().len()).collect(),
    };
    let rank = seq.kernel().len();
    let ps: Vec<usize> = match inst.task.degree {
        Some(p) => vec![p],
        None => (0..=rank).collect(),
    };
    let mut t = Tree::new();
    for h in hs {
        let mut ht = Tree::new();
        ht.text("lift", seq.h_generators()[h].lift.display())
            .text("degree", seq.lift_degree(h));
        for &p in &ps {
            let slices = gm.gm_matrices(h, p, max)?;
            let mut pt = Tree::new();
            for s in &slices {
                if s.matrix.rows() > 0 || s.matrix.cols() > 0 {
                    pt.text(
                        format!("{}->{}", s.degree, s.target_degree),
                        report::matrix(&s.matrix),
                    );
                }
            }
            pt.check("well_defined", slices.iter().all(|s| s.ok()));
            ht.child(format!("H{p}"), pt);
        }
        ht.child("sections", section_checks(inst, &seq, &gm, h, max)?);
        t.child(seq.h_generators()[h].name.clone(), ht);
    }
    Ok(t)
}

/// Horizontality, agreement with the cochain action, Leibniz and lift independence on `W^∇`.
fn section_checks(inst: &Instance, seq: &ExactLRSequence, gm: &GaussManin<'_>, h: usize, max: i64) -> Result<Tree> {
    let kconn = gm.kernel_connection();
    let module = kconn.module();
    let ring = kconn.ring().clone();
    let hs = horizontal_sections(kconn, max, inst.degree_bound)?;
    let complex = gm.complex()?;
    let e = seq.lift_degree(h);
    let mut horizontal = true;
    let mut agrees = true;
    let mut leibniz = true;
    let mut independent = true;
    let mut shifts = Vec::new();
    for (s, k) in seq.kernel().generators().iter().enumerate() {
        if let Some(mono) = ring.monomials_of_degree(e - seq.kernel().degree(s)).into_iter().next() {
            let c = crate::algebra::poly::Polynomial::term(int(1), mono);
            shifts.push(seq.with_shifted_lift(h, &k.mul_poly(&c))?);
        }
    }
    let gen = &seq.h_generators()[h];
    for (d, basis) in &hs.slices {
        let act = complex.cochain_basis(0, *d);
        let act = if act.dim() == 0 {
            None
        } else {
            Some(gm.cochain_action(&complex, h, 0, *d)?)
        };
        let src = module.slice(*d);
        let dst = module.slice(d + e);
        for w in basis {
            let out = match gm.induced_action(h, w) {
                Ok(o) => o,
                Err(Error::NotHorizontal(_)) => {
                    horizontal = false;
                    continue;
                }
                Err(x) => return Err(x),
            };
            if let Some(a) = &act {
                agrees &= a.mul_vec(&src.coords(w)?) == dst.coords(&out)?;
            }
            for (j, t) in seq.invariants().generators.iter().enumerate() {
                if d + seq.invariants().degrees[j] > max {
                    continue;
                }
                let tw = w.mul_poly(&ring, t);
                let lhs = gm.induced_action(h, &tw)?;
                let rhs = w.mul_poly(&ring, &gen.action[j]).add(&out.mul_poly(&ring, t));
                leibniz &= module.is_zero_element(&lhs.sub(&rhs))?;
            }
            for other in &shifts {
                let gm2 = GaussManin::new(other, gm.connection())?;
                independent &= module.is_zero_element(&gm2.induced_action(h, w)?.sub(&out))?;
            }
        }
    }
    let mut t = Tree::new();
    t.text("dims", table(&hs.dims()))
        .check("horizontal_preserved", horizontal)
        .check("agrees_with_cochain_action", agrees)
        .check("leibniz", leibniz)
        .check("lift_independent", independent);
    Ok(t)
}

fn gysin(inst: &Instance) -> Result<Tree> {
    let conn = inst.working_connection()?;
    let c = StandardComplex::new(&conn, inst.degree_bound)?;
    let coh = c.cohomology_range(c.min_degree(), max_degree(inst))?;
    let g = GysinClass::from_cohomology(&coh);
    let row: Vec<(i64, i64)> = (g.min_degree..=g.max_degree).map(|d| (d, g.value(d))).collect();
    let mut t = Tree::new();
    t.text("algebra", conn.algebra().names().join(", "))
        .text("class", table(&row))
        .check("euler_identity", g.euler_identity_holds());
    Ok(t)
}

fn cusp(inst: &Instance) -> Result<Tree> {
    let (m, n) = (inst.params["m"], inst.params["n"]);
    let max = inst.max_degree.unwrap_or(6 * m * n);
    let s = cusp_setup(m, n)?;
    let e = m * n - m - n;
    let names = s.ring.variables();
    let mut t = Tree::new();
    t.text("f", s.f.display(names))
        .text("tangent", s.tangent.display())
        .check("tangent_kills_f", s.tangent.apply(&s.f)?.is_zero())
        .text("displayed_field_value", s.displayed_tangent_value.display(names))
        .text(
            "displayed_field_kills_f",
            if s.displayed_tangent_value.is_zero() { "yes" } else { "no" },
        )
        .text("euler", s.euler.display())
        .text("e", e)
        .check(
            "bracket_euler_tangent",
            s.euler.bracket(&s.tangent)? == s.tangent.scale(&int(e)),
        );
    let bound = inst.degree_bound;
    let seq = ExactLRSequence::new(
        s.kernel.clone(),
        s.algebra.clone(),
        InvariantRingModel::new(&s.kernel, vec![s.f.clone()])?,
        vec![HGenerator {
            name: "E".into(),
            action: vec![s.h_action.clone()],
            lift: s.euler.clone(),
        }],
        bound,
    )?;
    let gm = GaussManin::new(&seq, &s.connection)?;
    let complex = gm.complex()?;
    let lo = complex.min_degree();
    let coh = complex.cohomology_range(lo, max)?;
    let (h0, h1) = (coh.row(0), coh.row(1));
    let oracle = cusp_oracle(m, n, max);
    let o0: Vec<(i64, usize)> = oracle.iter().map(|&(d, a, _)| (d, a)).collect();
    let o1: Vec<(i64, usize)> = oracle.iter().map(|&(d, _, b)| (d, b)).collect();
    let pattern = h0
        .iter()
        .all(|&(d, v)| v == usize::from(d > 0 && d % (m * n) == 0));
    t.text("degrees", format!("{lo}..{max}"))
        .text("H0", table(&h0))
        .text("H1", table(&h1))
        .check("h0_matches_oracle", h0 == o0)
        .check("h1_matches_oracle", h1 == o1)
        .check("h0_at_multiples_of_mn", pattern);
    let gms = gm.gm_matrices(0, 1, max)?;
    let by_degree = gms.iter().all(|sl| {
        let k = sl.matrix.rows();
        sl.target_degree == sl.degree
            && sl.matrix.cols() == k
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let want = if i == j { int(sl.degree) } else { Rational::zero() };
                    *sl.matrix.get(i, j) == want
                })
            })
    });
    t.check("euler_action_well_defined", gms.iter().all(|sl| sl.ok()))
        .check("euler_acts_by_degree", by_degree);
    let g0 = gm.generator_counts(0, 0, max)?;
    let g1 = gm.generator_counts(0, 1, max)?;
    let total1: usize = h1.iter().map(|x| x.1).sum();
    let gens0: usize = g0.iter().map(|x| x.1).sum();
    let gens1: usize = g1.iter().map(|x| x.1).sum();
    let formula = frac((n - 2) * (m - 1), 2);
    let comparison = if !formula.is_integer() {
        "formula is not an integer"
    } else if formula == int(gens1 as i64) {
        "matches generator count"
    } else if formula == int(total1 as i64) {
        "matches total dimension"
    } else {
        "discrepancy"
    };
    t.text("H0_generators_over_t", table(&g0))
        .text("H1_generators_over_t", table(&g1))
        .text("H0_generator_total", gens0)
        .text("H1_generator_total", gens1)
        .text("H1_total_dimension", total1)
        .text("formula", report::rational(&formula))
        .text("formula_comparison", comparison);
    Ok(t)
}
