//! Induced connections on horizontal sections and on cohomology, and Gysin
//! classes as graded Euler characteristics.
//!
//! For `0 → K → L → H → 0`, an element `h` of `H` acts through a lift `y ∈ L`.
//! On cochains of `K` the lift acts by
//! `(y·φ)(k_1∧…∧k_p) = ∇_y φ(k_1∧…∧k_p) - Σ_s φ(k_1∧…∧[y,k_s]∧…∧k_p)`.

use crate::algebra::linalg::Matrix;
use crate::algebra::module::ModuleElement;
use crate::algebra::poly::Polynomial;
use crate::algebra::rational::Rational;
use crate::algebra::ring::WeightedDegree;
use crate::complex::{insert_sorted, CochainBasis, GradedCohomology, StandardComplex};
use crate::error::{Error, Result};
use crate::lie::{Connection, Derivation, LieRinehartAlgebra};
use num_traits::Zero;
use rayon::prelude::*;

/// Distinguished invariants of `K`, such as `T = x - y` or `t = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRingModel {
    pub generators: Vec<Polynomial>,
    pub degrees: Vec<i64>,
}

impl InvariantRingModel {
    pub fn new(kernel: &LieRinehartAlgebra, generators: Vec<Polynomial>) -> Result<Self> {
        let ring = kernel.ring();
        let mut degrees = Vec::new();
        for t in &generators {
            let t = ring.nf(t)?;
            match ring.degree(&t) {
                WeightedDegree::Homogeneous(d) => degrees.push(d),
                _ => {
                    return Err(Error::InvalidSequence(format!(
                        "invariant {} is not homogeneous and nonzero",
                        t.display(ring.variables())
                    )))
                }
            }
            for (i, k) in kernel.generators().iter().enumerate() {
                if !k.apply(&t)?.is_zero() {
                    return Err(Error::InvalidSequence(format!(
                        "{} does not kill {}",
                        kernel.name(i),
                        t.display(ring.variables())
                    )));
                }
            }
        }
        Ok(InvariantRingModel {
            generators,
            degrees,
        })
    }
}

/// A generator of `H`: its values on the invariants and a lift to `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGenerator {
    pub name: String,
    /// `h(t_j)` for each invariant `t_j`.
    pub action: Vec<Polynomial>,
    pub lift: Derivation,
}

#[derive(Clone, Debug)]
pub struct ExactLRSequence {
    kernel: LieRinehartAlgebra,
    algebra: LieRinehartAlgebra,
    invariants: InvariantRingModel,
    h: Vec<HGenerator>,
    lift_coeffs: Vec<Vec<Polynomial>>,
    /// Per lift, per kernel generator `k_s`: `[y, k_s]` in the kernel generators.
    lift_brackets: Vec<Vec<Vec<Polynomial>>>,
    lift_degrees: Vec<i64>,
    degree_bound: i64,
}

impl ExactLRSequence {
    pub fn new(
        kernel: LieRinehartAlgebra,
        algebra: LieRinehartAlgebra,
        invariants: InvariantRingModel,
        h: Vec<HGenerator>,
        degree_bound: i64,
    ) -> Result<Self> {
        for k in kernel.generators() {
            algebra.express(k, degree_bound).map_err(|e| {
                Error::InvalidSequence(format!("kernel generator {} is not in L: {e}", k.display()))
            })?;
        }
        let ring = kernel.ring().clone();
        let mut lift_coeffs = Vec::new();
        let mut lift_brackets = Vec::new();
        let mut lift_degrees = Vec::new();
        for g in &h {
            if g.action.len() != invariants.generators.len() {
                return Err(Error::InvalidSequence(format!(
                    "{} needs one value per invariant",
                    g.name
                )));
            }
            let deg = g.lift.degree().value().ok_or_else(|| {
                Error::InvalidSequence(format!("lift of {} is not homogeneous", g.name))
            })?;
            lift_degrees.push(deg);
            lift_coeffs.push(algebra.express(&g.lift, degree_bound).map_err(|e| {
                Error::InvalidSequence(format!("lift of {} is not in L: {e}", g.name))
            })?);
            for (t, want) in invariants.generators.iter().zip(&g.action) {
                let got = g.lift.apply(t)?;
                if got != ring.nf(want)? {
                    return Err(Error::InvalidSequence(format!(
                        "lift of {} sends {} to {}, expected {}",
                        g.name,
                        t.display(ring.variables()),
                        got.display(ring.variables()),
                        want.display(ring.variables())
                    )));
                }
            }
            let mut brackets = Vec::new();
            for (s, k) in kernel.generators().iter().enumerate() {
                let b = g.lift.bracket(k)?;
                brackets.push(kernel.express(&b, degree_bound).map_err(|e| {
                    Error::InvalidSequence(format!(
                        "[lift of {}, {}] is not in K: {e}",
                        g.name,
                        kernel.name(s)
                    ))
                })?);
            }
            lift_brackets.push(brackets);
        }
        Ok(ExactLRSequence {
            kernel,
            algebra,
            invariants,
            h,
            lift_coeffs,
            lift_brackets,
            lift_degrees,
            degree_bound,
        })
    }

    pub fn kernel(&self) -> &LieRinehartAlgebra {
        &self.kernel
    }

    pub fn algebra(&self) -> &LieRinehartAlgebra {
        &self.algebra
    }

    pub fn invariants(&self) -> &InvariantRingModel {
        &self.invariants
    }

    pub fn h_generators(&self) -> &[HGenerator] {
        &self.h
    }

    pub fn lift_degree(&self, h: usize) -> i64 {
        self.lift_degrees[h]
    }

    pub fn lift_coefficients(&self, h: usize) -> &[Polynomial] {
        &self.lift_coeffs[h]
    }

    pub fn degree_bound(&self) -> i64 {
        self.degree_bound
    }

    /// Same sequence with the lift of `h` moved by `shift ∈ K`.
    pub fn with_shifted_lift(&self, h: usize, shift: &Derivation) -> Result<ExactLRSequence> {
        if self.kernel.express(shift, self.degree_bound).is_err() {
            return Err(Error::InvalidSequence("shift is not in K".into()));
        }
        let mut gens = self.h.clone();
        gens[h].lift = gens[h].lift.add(shift)?;
        ExactLRSequence::new(
            self.kernel.clone(),
            self.algebra.clone(),
            self.invariants.clone(),
            gens,
            self.degree_bound,
        )
    }
}

/// Graded basis of `W^∇ = {w : ∇_k w = 0 for all k ∈ K}`.
#[derive(Clone, Debug)]
pub struct HorizontalSections {
    pub min_degree: i64,
    pub max_degree: i64,
    /// `(d, basis of W^∇_d)`.
    pub slices: Vec<(i64, Vec<ModuleElement>)>,
}

impl HorizontalSections {
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.slices.iter().map(|(d, b)| (*d, b.len())).collect()
    }
}

/// `conn` is a connection over the kernel algebra.
pub fn horizontal_sections(conn: &Connection, max_degree: i64, degree_bound: i64) -> Result<HorizontalSections> {
    let curved = conn.curved_pairs(degree_bound)?;
    if let Some((i, j)) = curved.first() {
        return Err(Error::NotFlat(format!(
            "curvature on ({}, {}) is nonzero",
            conn.algebra().name(*i),
            conn.algebra().name(*j)
        )));
    }
    let module = conn.module();
    let lo = module.min_degree().unwrap_or(0);
    let slices = (lo..=max_degree)
        .into_par_iter()
        .map(|d| {
            let src = module.slice(d);
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for k in 0..conn.algebra().len() {
                let dst = module.slice(d + conn.algebra().degree(k));
                let images = (0..src.dim())
                    .map(|b| dst.coords(&conn.apply(k, &src.basis_element(b))?))
                    .collect::<Result<Vec<_>>>()?;
                for r in 0..dst.dim() {
                    rows.push(images.iter().map(|col| col[r].clone()).collect());
                }
            }
            let kernel = Matrix::from_rows(rows, src.dim()).nullspace();
            Ok((d, kernel.iter().map(|v| src.element(v)).collect()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HorizontalSections {
        min_degree: lo,
        max_degree,
        slices,
    })
}

/// Induced action of `H` on sections and on the cohomology of `K`.
pub struct GaussManin<'a> {
    seq: &'a ExactLRSequence,
    conn: &'a Connection,
    kconn: Connection,
}

/// The induced map `H^p_d → H^p_{d + deg y}` and its checks.
#[derive(Clone, Debug)]
pub struct GmSlice {
    pub degree: i64,
    pub target_degree: i64,
    /// Rows index target representatives, columns source representatives.
    pub matrix: Matrix,
    pub maps_cocycles_to_cocycles: bool,
    pub maps_coboundaries_to_coboundaries: bool,
    /// `(y·)∘d = d∘(y·)` from `C^p_d`.
    pub commutes_with_d: bool,
}

impl GmSlice {
    pub fn ok(&self) -> bool {
        self.maps_cocycles_to_cocycles && self.maps_coboundaries_to_coboundaries && self.commutes_with_d
    }
}

impl<'a> GaussManin<'a> {
    /// `conn` is a connection over the middle algebra of `seq`.
    pub fn new(seq: &'a ExactLRSequence, conn: &'a Connection) -> Result<Self> {
        if conn.algebra() != seq.algebra() {
            return Err(Error::InvalidSequence(
                "connection is not over the middle algebra".into(),
            ));
        }
        let kconn = conn.restrict(seq.kernel(), seq.degree_bound)?;
        Ok(GaussManin { seq, conn, kconn })
    }

    pub fn connection(&self) -> &'a Connection {
        self.conn
    }

    pub fn kernel_connection(&self) -> &Connection {
        &self.kconn
    }

    pub fn is_horizontal(&self, w: &ModuleElement) -> Result<bool> {
        for k in 0..self.kconn.algebra().len() {
            if !self.kconn.module().is_zero_element(&self.kconn.apply(k, w)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `∇̄(h)(w) = ∇(y)(w)` for the stored lift `y` of `h`.
    pub fn induced_action(&self, h: usize, w: &ModuleElement) -> Result<ModuleElement> {
        if h >= self.seq.h.len() {
            return Err(Error::IndexOutOfRange {
                index: h,
                len: self.seq.h.len(),
            });
        }
        if !self.is_horizontal(w)? {
            return Err(Error::NotHorizontal("input section".into()));
        }
        let out = self.conn.apply_combination(&self.seq.lift_coeffs[h], w)?;
        if !self.is_horizontal(&out)? {
            return Err(Error::NotHorizontal(format!(
                "image under {}",
                self.seq.h[h].name
            )));
        }
        Ok(out)
    }

    pub fn complex(&self) -> Result<StandardComplex<'_>> {
        StandardComplex::new(&self.kconn, self.seq.degree_bound)
    }

    /// Cochain values of `y·φ` from the values of `φ`.
    fn act_values(
        &self,
        h: usize,
        src: &CochainBasis,
        values: &[ModuleElement],
        dst: &CochainBasis,
    ) -> Result<Vec<ModuleElement>> {
        let ring = self.conn.ring();
        let lift = &self.seq.lift_coeffs[h];
        let brackets = &self.seq.lift_brackets[h];
        let mut out = Vec::with_capacity(dst.wedges.len());
        for wedge in &dst.wedges {
            let mut acc = match src.wedges.iter().position(|w| w == wedge) {
                Some(i) if !values[i].is_zero() => self.conn.apply_combination(lift, &values[i])?,
                _ => self.conn.module().zero(),
            };
            for s in 0..wedge.len() {
                let mut rest = wedge.clone();
                rest.remove(s);
                for (j, c) in brackets[wedge[s]].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let Some((sorted, sign)) = insert_sorted(j, &rest) else {
                        continue;
                    };
                    let Some(i) = src.wedges.iter().position(|w| *w == sorted) else {
                        continue;
                    };
                    // k_j sits at position s, not at the front
                    let sign = if s % 2 == 0 { sign } else { -sign };
                    let term = values[i].mul_poly(ring, c);
                    acc = if sign > 0 { acc.sub(&term) } else { acc.add(&term) };
                }
            }
            out.push(acc.nf(ring)?);
        }
        Ok(out)
    }

    /// Matrix of `y·: C^p_d → C^p_{d + deg y}`.
    pub fn cochain_action(&self, complex: &StandardComplex<'_>, h: usize, p: usize, d: i64) -> Result<Matrix> {
        let src = complex.cochain_basis(p, d);
        let dst = complex.cochain_basis(p, d + self.seq.lift_degrees[h]);
        self.action_between(h, &src, &dst)
    }

    fn action_between(&self, h: usize, src: &CochainBasis, dst: &CochainBasis) -> Result<Matrix> {
        let mut m = Matrix::zeros(dst.dim(), src.dim());
        for col in 0..src.dim() {
            let mut e = vec![Rational::zero(); src.dim()];
            e[col] = num_traits::One::one();
            let vals = self.act_values(h, src, &src.values(&e), dst)?;
            for (row, x) in dst.coords(&vals)?.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        Ok(m)
    }

    /// Multiplication by the invariant `t_j` on `C^p_d`.
    pub fn invariant_action(&self, complex: &StandardComplex<'_>, j: usize, p: usize, d: i64) -> Result<Matrix> {
        let t = &self.seq.invariants.generators[j];
        let ring = self.conn.ring();
        let src = complex.cochain_basis(p, d);
        let dst = complex.cochain_basis(p, d + self.seq.invariants.degrees[j]);
        let mut m = Matrix::zeros(dst.dim(), src.dim());
        for col in 0..src.dim() {
            let mut e = vec![Rational::zero(); src.dim()];
            e[col] = num_traits::One::one();
            let vals: Vec<ModuleElement> = src.values(&e).iter().map(|v| v.mul_poly(ring, t)).collect();
            for (row, x) in dst.coords(&vals)?.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        Ok(m)
    }

    /// Induced maps of `h` on `H^p` for each source degree up to `max_degree`.
    pub fn gm_matrices(&self, h: usize, p: usize, max_degree: i64) -> Result<Vec<GmSlice>> {
        let complex = self.complex()?;
        let e = self.seq.lift_degrees[h];
        let lo = complex.min_degree();
        let coh = complex.cohomology_range(lo.min(lo + e), max_degree.max(max_degree + e))?;
        (lo..=max_degree)
            .into_par_iter()
            .map(|d| self.gm_slice(&complex, &coh, h, p, d))
            .collect()
    }

    fn gm_slice(
        &self,
        complex: &StandardComplex<'_>,
        coh: &GradedCohomology,
        h: usize,
        p: usize,
        d: i64,
    ) -> Result<GmSlice> {
        let e = self.seq.lift_degrees[h];
        let src_slice = coh.slice(d).ok_or(Error::Dimension("degree out of range".into()))?;
        let dst_slice = coh
            .slice(d + e)
            .ok_or(Error::Dimension("degree out of range".into()))?;
        let act = self.cochain_action(complex, h, p, d)?;
        let mut cocycles = true;
        let mut cols = Vec::new();
        let d_next = complex.differential_matrix(p, d + e)?;
        for rep in &src_slice.representatives[p] {
            let img = act.mul_vec(rep);
            if d_next.rows() > 0 && d_next.mul_vec(&img).iter().any(|x| !x.is_zero()) {
                cocycles = false;
            }
            match complex.class_coordinates(dst_slice, p, &img)? {
                Some(c) => cols.push(c),
                None => {
                    cocycles = false;
                    cols.push(vec![Rational::zero(); dst_slice.representatives[p].len()]);
                }
            }
        }
        let mut coboundaries = true;
        let mut commutes = true;
        if p > 0 {
            let d_prev = complex.differential_matrix(p - 1, d)?;
            let d_prev_t = complex.differential_matrix(p - 1, d + e)?;
            let act_prev = self.cochain_action(complex, h, p - 1, d)?;
            for j in 0..d_prev.cols() {
                let img = act.mul_vec(&d_prev.column(j));
                if d_prev_t.cols() == 0 {
                    coboundaries &= img.iter().all(|x| x.is_zero());
                } else {
                    coboundaries &= d_prev_t.solve(&img).is_some();
                }
            }
            if act.rows() > 0 && act_prev.cols() > 0 {
                let lhs = act.mul(&d_prev);
                let rhs = d_prev_t.mul(&act_prev);
                commutes &= lhs == rhs;
            }
        }
        if p < complex.rank() {
            let d_here = complex.differential_matrix(p, d)?;
            let act_next = self.cochain_action(complex, h, p + 1, d)?;
            if d_here.rows() > 0 && act.cols() > 0 {
                commutes &= act_next.mul(&d_here) == d_next.mul(&act);
            }
        }
        let nrows = dst_slice.representatives[p].len();
        let matrix = if cols.is_empty() {
            Matrix::zeros(nrows, 0)
        } else {
            Matrix::from_columns(&cols, nrows)
        };
        Ok(GmSlice {
            degree: d,
            target_degree: d + e,
            matrix,
            maps_cocycles_to_cocycles: cocycles,
            maps_coboundaries_to_coboundaries: coboundaries,
            commutes_with_d: commutes,
        })
    }

    /// Per degree `d`, `dim H^p_d - rank(t_j: H^p_{d - deg t_j} → H^p_d)`:
    /// the number of generators over `Q[t_j]` needed in degree `d`.
    pub fn generator_counts(&self, j: usize, p: usize, max_degree: i64) -> Result<Vec<(i64, usize)>> {
        let complex = self.complex()?;
        let lo = complex.min_degree();
        let coh = complex.cohomology_range(lo, max_degree)?;
        let dt = self.seq.invariants.degrees[j];
        (lo..=max_degree)
            .into_par_iter()
            .map(|d| {
                let here = coh.slice(d).expect("in range");
                let dim = here.dims[p];
                let Some(below) = coh.slice(d - dt) else {
                    return Ok((d, dim));
                };
                let t = self.invariant_action(&complex, j, p, d - dt)?;
                let cols = below.representatives[p]
                    .iter()
                    .map(|rep| {
                        complex
                            .class_coordinates(here, p, &t.mul_vec(rep))?
                            .ok_or_else(|| Error::Kernel("t·cocycle is not a cocycle".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let rank = if cols.is_empty() || dim == 0 {
                    0
                } else {
                    Matrix::from_columns(&cols, dim).rank()
                };
                Ok((d, dim - rank))
            })
            .collect()
    }
}

/// `Σ_i (-1)^i dim H^i_d` per degree, with the cochain-level sum alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GysinClass {
    pub min_degree: i64,
    pub max_degree: i64,
    pub values: Vec<i64>,
    pub cochain_values: Vec<i64>,
}

impl GysinClass {
    pub fn from_cohomology(h: &GradedCohomology) -> Self {
        GysinClass {
            min_degree: h.min_degree,
            max_degree: h.max_degree,
            values: h.slices.iter().map(|s| s.euler()).collect(),
            cochain_values: h.slices.iter().map(|s| s.cochain_euler()).collect(),
        }
    }

    pub fn value(&self, d: i64) -> i64 {
        if d < self.min_degree || d > self.max_degree {
            0
        } else {
            self.values[(d - self.min_degree) as usize]
        }
    }

    /// Rank-nullity: the class equals the cochain Euler characteristic.
    pub fn euler_identity_holds(&self) -> bool {
        self.values == self.cochain_values
    }
}

/// Class of `(W, ∇)` over a free kernel algebra, degrees from `lo` to `hi`.
pub fn gysin_class(kconn: &Connection, lo: i64, hi: i64, degree_bound: i64) -> Result<GysinClass> {
    let c = StandardComplex::new(kconn, degree_bound)?;
    Ok(GysinClass::from_cohomology(&c.cohomology_range(lo, hi)?))
}
