//! The family `A = Q[x,y,z]/(x^m + y^n + z^2)`: matrix factorizations,
//! derivation generators, their syzygies and the connection matrices on
//! `W(φ, ψ) = coker φ`. Also the cusp map `(x, y) ↦ x^m - y^n`.

use crate::algebra::factorization::{FactorizationFailure, MatrixFactorization};
use crate::algebra::linalg::Matrix;
use crate::algebra::module::PresentedModule;
use crate::algebra::poly::{Monomial, Polynomial};
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::rational::{frac, int, Rational};
use crate::algebra::ring::{HypersurfaceRing, WeightSystem, WeightedDegree};
use crate::error::{Error, Result};
use crate::lie::connection::{descent_witness, matrix_degree_defects, DescentFailure};
use crate::lie::derivation::relation_residual;
use crate::lie::{Connection, Derivation, LieRinehartAlgebra};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Arc;

fn xyz() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

/// `c · x^a y^b z^c` in three variables.
fn mono3(c: Rational, a: i64, b: i64, e: i64) -> Polynomial {
    Polynomial::term(
        c,
        Monomial::from_exponents(vec![a as u32, b as u32, e as u32]),
    )
}

fn check_params(m: i64, n: i64, k: i64, l: i64) -> Result<()> {
    if m < 1 || n < 1 || k < 1 || k > m || l < 1 || l > n {
        return Err(Error::ParameterRange(format!(
            "need m,n >= 1, 1 <= k <= m, 1 <= l <= n; got m={m} n={n} k={k} l={l}"
        )));
    }
    Ok(())
}

pub fn relation(m: i64, n: i64) -> Polynomial {
    &(&mono3(int(1), m, 0, 0) + &mono3(int(1), 0, n, 0)) + &mono3(int(1), 0, 0, 2)
}

/// `A_{m,n}` with weights `(2n, 2m, mn)`, reducing `z^2`.
pub fn ring(m: i64, n: i64) -> Result<Arc<HypersurfaceRing>> {
    if m < 1 || n < 1 {
        return Err(Error::ParameterRange(format!("need m,n >= 1; got m={m} n={n}")));
    }
    let w = WeightSystem::new(&[2 * n, 2 * m, m * n])?;
    Ok(Arc::new(HypersurfaceRing::hypersurface(
        xyz(),
        w,
        relation(m, n),
        2,
        2,
    )?))
}

pub fn phi_psi(m: i64, n: i64, k: i64, l: i64) -> Result<MatrixFactorization> {
    check_params(m, n, k, l)?;
    let p = |c: i64, a: i64, b: i64, e: i64| mono3(int(c), a, b, e);
    let zero = Polynomial::zero(3);
    let phi = PolyMatrix::from_rows(
        vec![
            vec![p(1, m - k, 0, 0), p(1, 0, n - l, 0), zero.clone(), p(1, 0, 0, 1)],
            vec![p(1, 0, l, 0), p(-1, k, 0, 0), p(1, 0, 0, 1), zero.clone()],
            vec![p(1, 0, 0, 1), zero.clone(), p(-1, 0, n - l, 0), p(-1, k, 0, 0)],
            vec![zero.clone(), p(1, 0, 0, 1), p(1, m - k, 0, 0), p(-1, 0, l, 0)],
        ],
        3,
    )?;
    let psi = PolyMatrix::from_rows(
        vec![
            vec![p(1, k, 0, 0), p(1, 0, n - l, 0), p(1, 0, 0, 1), zero.clone()],
            vec![p(1, 0, l, 0), p(-1, m - k, 0, 0), zero.clone(), p(1, 0, 0, 1)],
            vec![zero.clone(), p(1, 0, 0, 1), p(-1, 0, l, 0), p(1, k, 0, 0)],
            vec![p(1, 0, 0, 1), zero, p(-1, m - k, 0, 0), p(-1, 0, n - l, 0)],
        ],
        3,
    )?;
    MatrixFactorization::new(relation(m, n), phi, psi)
}

pub fn verify_mf(mf: &MatrixFactorization) -> std::result::Result<(), FactorizationFailure> {
    mf.verify()
}

/// `W(φ, ψ)` over `A`, generator degrees solved with the first one at 0.
pub fn module(m: i64, n: i64, k: i64, l: i64) -> Result<PresentedModule> {
    let mf = phi_psi(m, n, k, l)?;
    PresentedModule::with_solved_degrees(ring(m, n)?, mf.phi, 0)
}

/// Coefficient vectors of `δ_0..δ_3`. `δ_1` is `-n y^{n-1}∂_x + m x^{m-1}∂_y`.
pub fn der_coefficients(m: i64, n: i64) -> [Vec<Polynomial>; 4] {
    let z = || Polynomial::zero(3);
    [
        vec![
            mono3(int(2 * n), 1, 0, 0),
            mono3(int(2 * m), 0, 1, 0),
            mono3(int(m * n), 0, 0, 1),
        ],
        vec![mono3(int(-n), 0, n - 1, 0), mono3(int(m), m - 1, 0, 0), z()],
        vec![mono3(int(-2), 0, 0, 1), z(), mono3(int(m), m - 1, 0, 0)],
        vec![z(), mono3(int(-2), 0, 0, 1), mono3(int(n), 0, n - 1, 0)],
    ]
}

/// `δ_1` in the form `m x^{m-1}∂_y - n y^{n-1}∂_z`.
pub fn printed_delta1(m: i64, n: i64) -> Vec<Polynomial> {
    vec![
        Polynomial::zero(3),
        mono3(int(m), m - 1, 0, 0),
        mono3(int(-n), 0, n - 1, 0),
    ]
}

/// Normal form of `δ(f)` for the printed `δ_1`; nonzero means it is not a derivation of `A`.
pub fn printed_delta1_residual(m: i64, n: i64) -> Result<Polynomial> {
    relation_residual(&*ring(m, n)?, &printed_delta1(m, n))
}

pub fn der_generators(m: i64, n: i64) -> Result<[Derivation; 4]> {
    let a = ring(m, n)?;
    let [c0, c1, c2, c3] = der_coefficients(m, n);
    Ok([
        Derivation::new(a.clone(), c0)?,
        Derivation::new(a.clone(), c1)?,
        Derivation::new(a.clone(), c2)?,
        Derivation::new(a, c3)?,
    ])
}

pub const DER_NAMES: [&str; 4] = ["d0", "d1", "d2", "d3"];

/// `Der(A)` on `δ_0..δ_3`, with `ρ` attached. Not free.
pub fn der_algebra(m: i64, n: i64) -> Result<LieRinehartAlgebra> {
    let gens = der_generators(m, n)?;
    LieRinehartAlgebra::new(
        ring(m, n)?,
        DER_NAMES.iter().map(|s| s.to_string()).collect(),
        gens.to_vec(),
    )?
    .with_syzygies(syzygy_matrix(m, n)?)
}

pub fn syzygy_matrix(m: i64, n: i64) -> Result<PolyMatrix> {
    let p = |c: i64, a: i64, b: i64, e: i64| mono3(int(c), a, b, e);
    let zero = Polynomial::zero(3);
    PolyMatrix::from_rows(
        vec![
            vec![p(1, 0, n - 1, 0), p(1, 0, 0, 1), zero.clone(), p(1, m - 1, 0, 0)],
            vec![p(2, 1, 0, 0), zero.clone(), p(-2, 0, 0, 1), p(-2, 0, 1, 0)],
            vec![zero.clone(), p(n, 1, 0, 0), p(n, 0, n - 1, 0), p(-n, 0, 0, 1)],
            vec![p(-m, 0, 0, 1), p(m, 0, 1, 0), p(-m, m - 1, 0, 0), zero],
        ],
        3,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Rows,
    Columns,
    Both,
    Neither,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Rows => "rows",
            Orientation::Columns => "columns",
            Orientation::Both => "both",
            Orientation::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SyzygyReport {
    pub orientation: Orientation,
    /// `Σ_j ρ_ij δ_j` for each row `i`.
    pub row_residuals: Vec<Derivation>,
    /// `Σ_i ρ_ij δ_i` for each column `j`.
    pub column_residuals: Vec<Derivation>,
}

/// Tests both readings of `ρ` as relations among `gens` in `Der(A)`.
pub fn verify_syzygies(gens: &[Derivation], rho: &PolyMatrix) -> Result<SyzygyReport> {
    let k = gens.len();
    if rho.rows() != k || rho.cols() != k {
        return Err(Error::Dimension(format!("syzygy matrix must be {k}x{k}")));
    }
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::Dimension("no generators".into()))?;
    let combo = |weights: Vec<&Polynomial>| -> Result<Derivation> {
        let mut acc = Derivation::zero(ring.clone());
        for (c, g) in weights.into_iter().zip(gens) {
            acc = acc.add(&g.mul_poly(c))?;
        }
        Ok(acc)
    };
    let rows = (0..k)
        .map(|i| combo((0..k).map(|j| rho.get(i, j)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..k)
        .map(|j| combo((0..k).map(|i| rho.get(i, j)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let r = rows.iter().all(|d| d.is_zero());
    let c = cols.iter().all(|d| d.is_zero());
    Ok(SyzygyReport {
        orientation: match (r, c) {
            (true, true) => Orientation::Both,
            (true, false) => Orientation::Rows,
            (false, true) => Orientation::Columns,
            (false, false) => Orientation::Neither,
        },
        row_residuals: rows,
        column_residuals: cols,
    })
}

/// One entry `scalar · x^a y^b` of a connection matrix, as given by its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub label: &'static str,
    pub generator: usize,
    pub row: usize,
    pub col: usize,
    pub scalar: Rational,
    pub x_exp: i64,
    pub y_exp: i64,
}

impl ClosedForm {
    /// `None` when the scalar is nonzero and an exponent is negative.
    pub fn polynomial(&self) -> Option<Polynomial> {
        if self.scalar.is_zero() {
            return Some(Polynomial::zero(3));
        }
        if self.x_exp < 0 || self.y_exp < 0 {
            return None;
        }
        Some(mono3(self.scalar.clone(), self.x_exp, self.y_exp, 0))
    }
}

/// The matrices `A_0..A_3` of the connection on `W(φ, ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionFamily {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    pub l: i64,
    pub entries: Vec<ClosedForm>,
}

pub fn connection_family(m: i64, n: i64, k: i64, l: i64) -> Result<ConnectionFamily> {
    check_params(m, n, k, l)?;
    let (mn, nk, ml) = (m * n, n * k, m * l);
    // halves and quarters kept exact
    let h = |num: i64| frac(num, 2);
    let q = |num: i64| frac(num, 4);
    let over = |v: Rational, d: i64| v / int(d);
    let e = |label, generator, row, col, scalar, x_exp, y_exp| ClosedForm {
        label,
        generator,
        row,
        col,
        scalar,
        x_exp,
        y_exp,
    };
    let entries = vec![
        e("a1", 0, 0, 0, h(2 * nk + 2 * ml - mn), 0, 0),
        e("a2", 0, 1, 1, h(3 * mn - 2 * ml - 2 * nk), 0, 0),
        e("a3", 0, 2, 2, h(mn + 2 * ml - 2 * nk), 0, 0),
        e("a4", 0, 3, 3, h(mn + 2 * nk - 2 * ml), 0, 0),
        e("b1", 1, 1, 0, q(mn - 2 * nk - 2 * ml), k - 1, l - 1),
        e("b2", 1, 0, 1, q(3 * mn - 2 * ml - 2 * nk), m - k - 1, n - l - 1),
        e("b3", 1, 3, 2, q(2 * nk - mn - 2 * ml), m - k - 1, l - 1),
        e("b4", 1, 2, 3, q(2 * nk - 2 * ml + mn), k - 1, n - l - 1),
        e("c1", 2, 2, 0, over(h(mn - 2 * ml - 2 * nk), n), k - 1, 0),
        e("c2", 2, 3, 1, over(h(3 * mn - 2 * ml - 2 * nk), n), m - k - 1, 0),
        e("c3", 2, 0, 2, over(h(mn + 2 * ml - 2 * nk), n), m - k - 1, 0),
        e("c4", 2, 1, 3, over(h(2 * ml - 2 * nk - mn), n), k - 1, 0),
        e("d1", 3, 3, 0, over(h(mn - 2 * ml - 2 * nk), m), 0, l - 1),
        e("d2", 3, 2, 1, over(h(2 * ml + 2 * nk - 3 * mn), m), 0, n - l - 1),
        e("d3", 3, 1, 2, over(h(mn + 2 * ml - 2 * nk), m), 0, l - 1),
        e("d4", 3, 0, 3, over(h(mn - 2 * ml + 2 * nk), m), 0, n - l - 1),
    ];
    Ok(ConnectionFamily { m, n, k, l, entries })
}

impl ConnectionFamily {
    pub fn entry(&self, label: &str) -> Option<&ClosedForm> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn labels(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.label).collect()
    }

    /// `A_g`, or the label of the first entry that is not a polynomial.
    pub fn matrix(&self, g: usize) -> std::result::Result<PolyMatrix, &'static str> {
        let mut a = PolyMatrix::zeros(4, 4, 3);
        for e in self.entries.iter().filter(|e| e.generator == g) {
            a.set(e.row, e.col, e.polynomial().ok_or(e.label)?);
        }
        Ok(a)
    }

    /// The same family with one scalar shifted by `delta`.
    pub fn mutate(&self, label: &str, delta: &Rational) -> ConnectionFamily {
        let mut out = self.clone();
        for e in out.entries.iter_mut().filter(|e| e.label == label) {
            e.scalar += delta;
        }
        out
    }

    /// `Σ` of the diagonal of `A_0`.
    pub fn trace_a0(&self) -> Rational {
        self.entries
            .iter()
            .filter(|e| e.generator == 0 && e.row == e.col)
            .map(|e| e.scalar.clone())
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentOutcome {
    /// `B_g` with `g(φ) + A_g φ = φ B_g`.
    Descends(PolyMatrix),
    NotDivisible(DescentFailure),
    /// The closed form for this label has a negative exponent.
    NonPolynomial(&'static str),
}

impl DescentOutcome {
    pub fn ok(&self) -> bool {
        matches!(self, DescentOutcome::Descends(_))
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorDescent {
    pub generator: &'static str,
    pub outcome: DescentOutcome,
    /// Entries of `A_g` whose degree is not `r_j - r_i + deg g`.
    pub degree_defects: Vec<(usize, usize)>,
}

/// Descent of `∇_{δ_g} = δ_g + A_g` to `coker φ` for each generator.
pub fn family_descent(family: &ConnectionFamily) -> Result<Vec<GeneratorDescent>> {
    let (m, n, k, l) = (family.m, family.n, family.k, family.l);
    let a = ring(m, n)?;
    let mf = phi_psi(m, n, k, l)?;
    let w = module(m, n, k, l)?;
    let gens = der_generators(m, n)?;
    let mut out = Vec::with_capacity(4);
    for (g, der) in gens.iter().enumerate() {
        let (outcome, defects) = match family.matrix(g) {
            Err(label) => (DescentOutcome::NonPolynomial(label), Vec::new()),
            Ok(mat) => {
                let deg = der.degree().value().expect("generators are homogeneous");
                let defects = matrix_degree_defects(&w, &mat, deg);
                let o = match descent_witness(&a, der, &mat, &mf)? {
                    Ok(b) => DescentOutcome::Descends(b),
                    Err(f) => DescentOutcome::NotDivisible(f),
                };
                (o, defects)
            }
        };
        out.push(GeneratorDescent {
            generator: DER_NAMES[g],
            outcome,
            degree_defects: defects,
        });
    }
    Ok(out)
}

/// `∇ = δ_0 + A_0` on `W(φ, ψ)` over the rank-one algebra `⟨δ_0⟩`.
pub fn euler_connection(m: i64, n: i64, k: i64, l: i64) -> Result<Connection> {
    let family = connection_family(m, n, k, l)?;
    let [d0, ..] = der_generators(m, n)?;
    let alg = LieRinehartAlgebra::new(ring(m, n)?, vec!["d0".into()], vec![d0])?;
    let a0 = family.matrix(0).expect("A_0 is constant");
    Connection::new(alg, module(m, n, k, l)?, vec![a0])
}

/// Data of the cusp map `(x, y) ↦ f = x^m - y^n` over `B = Q[x, y]`.
#[derive(Clone, Debug)]
pub struct CuspSetup {
    pub m: i64,
    pub n: i64,
    pub ring: Arc<HypersurfaceRing>,
    pub f: Polynomial,
    /// Generator of `{δ : δ(f) = 0}`, normalized so its `∂_y` coefficient is `∂f/∂x`.
    pub tangent: Derivation,
    pub euler: Derivation,
    /// `E(f) = mn·f`: the action of the generator `mn t∂_t` of `H` on `t`.
    pub h_action: Polynomial,
    /// `I = (f)`, free on one generator of degree `mn`.
    pub ideal: PresentedModule,
    /// `L = ⟨∂, E⟩`.
    pub algebra: LieRinehartAlgebra,
    /// `K = ⟨∂⟩`.
    pub kernel: LieRinehartAlgebra,
    /// `∇(δ)(b) = δ(b)` on `I` over `L`: `A_∂ = 0`, `A_E = (mn)`.
    pub connection: Connection,
    /// `(mx^{m-1}∂_x + ny^{n-1}∂_y)(f)`, the value of the displayed vector field on `f`.
    pub displayed_tangent_value: Polynomial,
}

pub fn cusp_ring(m: i64, n: i64) -> Result<Arc<HypersurfaceRing>> {
    if m < 2 || n < 2 {
        return Err(Error::ParameterRange(format!("cusp needs m,n >= 2; got m={m} n={n}")));
    }
    Ok(Arc::new(HypersurfaceRing::polynomial_ring(
        vec!["x".into(), "y".into()],
        WeightSystem::new(&[n, m])?,
    )?))
}

fn mono2(c: Rational, a: i64, b: i64) -> Polynomial {
    Polynomial::term(c, Monomial::from_exponents(vec![a as u32, b as u32]))
}

/// Lowest-degree kernel of `δ ↦ δ(f)` on graded derivations of `ring`;
/// errors unless it is one-dimensional.
pub fn annihilator_generator(ring: &Arc<HypersurfaceRing>, f: &Polynomial) -> Result<Derivation> {
    let w = ring.weights();
    let fd = match ring.degree(f) {
        WeightedDegree::Homogeneous(d) => d,
        _ => return Err(Error::Inhomogeneous(f.display(ring.variables()))),
    };
    let partials = (0..ring.nvars())
        .map(|v| f.diff(v))
        .collect::<Result<Vec<_>>>()?;
    let lo = -(0..ring.nvars()).map(|i| w.weight(i)).max().unwrap_or(0);
    for d in lo..=fd {
        let mut unknowns = Vec::new();
        for v in 0..ring.nvars() {
            for mono in ring.monomials_of_degree(d + w.weight(v)) {
                unknowns.push((v, mono));
            }
        }
        if unknowns.is_empty() {
            continue;
        }
        let mut rows: HashMap<Monomial, usize> = HashMap::new();
        let mut cols = Vec::new();
        for (v, mono) in &unknowns {
            let p = partials[*v].mul_monomial(&Rational::one(), mono);
            let mut col = Vec::new();
            for (t, c) in p.terms() {
                let next = rows.len();
                col.push((*rows.entry(t.clone()).or_insert(next), c.clone()));
            }
            cols.push(col);
        }
        let mut mat = Matrix::zeros(rows.len(), unknowns.len());
        for (j, col) in cols.iter().enumerate() {
            for (r, c) in col {
                mat.set(*r, j, c.clone());
            }
        }
        let kernel = mat.nullspace();
        match kernel.len() {
            0 => continue,
            1 => {
                let mut coeffs = vec![ring.zero(); ring.nvars()];
                for ((v, mono), c) in unknowns.iter().zip(&kernel[0]) {
                    coeffs[*v].add_term(c.clone(), mono.clone());
                }
                return Derivation::new(ring.clone(), coeffs);
            }
            k => {
                return Err(Error::Kernel(format!(
                    "annihilator has dimension {k} in its lowest degree {d}"
                )))
            }
        }
    }
    Err(Error::Kernel("annihilator is zero up to deg f".into()))
}

pub fn cusp_setup(m: i64, n: i64) -> Result<CuspSetup> {
    let b = cusp_ring(m, n)?;
    let f = &mono2(int(1), m, 0) - &mono2(int(1), 0, n);
    let raw = annihilator_generator(&b, &f)?;
    // scale so the ∂_y coefficient has x^{m-1} coefficient m
    let target = Monomial::from_exponents(vec![(m - 1) as u32, 0]);
    let c = raw.coefficient(1).coefficient(&target);
    let tangent = if c.is_zero() {
        raw
    } else {
        raw.scale(&(int(m) / c))
    };
    let euler = Derivation::new(b.clone(), vec![mono2(int(n), 1, 0), mono2(int(m), 0, 1)])?;
    let h_action = euler.apply(&f)?;
    let ideal = PresentedModule::free(b.clone(), vec![0], m * n);
    let algebra = LieRinehartAlgebra::new(
        b.clone(),
        vec!["d".into(), "E".into()],
        vec![tangent.clone(), euler.clone()],
    )?;
    let kernel = LieRinehartAlgebra::new(b.clone(), vec!["d".into()], vec![tangent.clone()])?;
    let a_d = PolyMatrix::zeros(1, 1, 2);
    let a_e = PolyMatrix::scalar(1, &b.constant(int(m * n)));
    let connection = Connection::new(algebra.clone(), ideal.clone(), vec![a_d, a_e])?;
    let displayed = Derivation::new(
        b.clone(),
        vec![mono2(int(m), m - 1, 0), mono2(int(n), 0, n - 1)],
    )?;
    let displayed_tangent_value = displayed.apply(&f)?;
    Ok(CuspSetup {
        m,
        n,
        ring: b,
        f,
        tangent,
        euler,
        h_action,
        ideal,
        algebra,
        kernel,
        connection,
        displayed_tangent_value,
    })
}

/// Monomials `x^a y^b` with `n a + m b = d`, listed by increasing `a`.
fn cusp_monomials(m: i64, n: i64, d: i64) -> Vec<(i64, i64)> {
    if d < 0 {
        return Vec::new();
    }
    (0..=d / n)
        .filter(|a| (d - n * a) % m == 0)
        .map(|a| (a, (d - n * a) / m))
        .collect()
}

/// `dim H^0_d` and `dim H^1_d` of the cusp complex `∂: I → I` for
/// `d` from `mn - e` to `max_degree`, where `e = mn - m - n`. Uses
/// `∂(bf) = ∂(b) f`, so only `∂ = n y^{n-1}∂_x + m x^{m-1}∂_y` on `B` is needed.
pub fn cusp_oracle(m: i64, n: i64, max_degree: i64) -> Vec<(i64, usize, usize)> {
    let e = m * n - m - n;
    let mut out = Vec::new();
    for d in (m * n - e).min(m * n)..=max_degree {
        let src = cusp_monomials(m, n, d - m * n);
        let dst = cusp_monomials(m, n, d + e - m * n);
        let index: HashMap<(i64, i64), usize> =
            dst.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut mat = Matrix::zeros(dst.len(), src.len());
        for (j, &(a, b)) in src.iter().enumerate() {
            // n y^{n-1} · a x^{a-1} y^b + m x^{m-1} · b x^a y^{b-1}
            if a > 0 {
                let t = (a - 1, b + n - 1);
                let v = mat.get(index[&t], j) + int(n * a);
                mat.set(index[&t], j, v);
            }
            if b > 0 {
                let t = (a + m - 1, b - 1);
                let v = mat.get(index[&t], j) + int(m * b);
                mat.set(index[&t], j, v);
            }
        }
        let rank = mat.rank();
        out.push((d, src.len() - rank, dst.len() - rank));
    }
    out
}
