use super::algebra::LieRinehartAlgebra;
use super::derivation::{same_ring, Derivation};
use crate::algebra::factorization::MatrixFactorization;
use crate::algebra::module::{ModuleElement, PresentedModule};
use crate::algebra::poly::Polynomial;
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::ring::{HypersurfaceRing, WeightedDegree};
use crate::error::{Error, Result};

/// `∇_g(Σ a_i e_i) = Σ g(a_i) e_i + A_g·a` for each generator `g` of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    algebra: LieRinehartAlgebra,
    module: PresentedModule,
    matrices: Vec<PolyMatrix>,
}

/// The entry of `psi·(g(phi) + A_g·phi)` that `f` does not divide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentFailure {
    pub row: usize,
    pub col: usize,
    pub remainder: Polynomial,
}

impl Connection {
    pub fn new(
        algebra: LieRinehartAlgebra,
        module: PresentedModule,
        matrices: Vec<PolyMatrix>,
    ) -> Result<Self> {
        if !same_ring(algebra.ring(), module.ring()) {
            return Err(Error::RingMismatch);
        }
        if matrices.len() != algebra.len() {
            return Err(Error::Dimension(format!(
                "{} connection matrices for {} generators",
                matrices.len(),
                algebra.len()
            )));
        }
        let ring = module.ring().clone();
        let r = module.generator_degrees();
        let mut reduced = Vec::with_capacity(matrices.len());
        for (g, a) in matrices.iter().enumerate() {
            if a.rows() != module.ngens() || a.cols() != module.ngens() {
                return Err(Error::Dimension(format!(
                    "matrix for {} must be {}x{}",
                    algebra.name(g),
                    module.ngens(),
                    module.ngens()
                )));
            }
            let a = a.nf(&ring)?;
            for (i, j, p) in a.entries() {
                let want = r[j] - r[i] + algebra.degree(g);
                if !ring.degree(p).admits(want) {
                    return Err(Error::InconsistentDegrees(format!(
                        "entry ({}, {}) of the matrix for {} should have degree {want}",
                        i + 1,
                        j + 1,
                        algebra.name(g)
                    )));
                }
            }
            reduced.push(a);
        }
        Ok(Connection {
            algebra,
            module,
            matrices: reduced,
        })
    }

    /// All matrices zero: `∇_g` acts through the anchor on coordinates.
    pub fn trivial(algebra: LieRinehartAlgebra, module: PresentedModule) -> Result<Self> {
        let n = module.ngens();
        let nv = module.ring().nvars();
        let mats = vec![PolyMatrix::zeros(n, n, nv); algebra.len()];
        Self::new(algebra, module, mats)
    }

    pub fn algebra(&self) -> &LieRinehartAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn ring(&self) -> &std::sync::Arc<HypersurfaceRing> {
        self.module.ring()
    }

    pub fn matrices(&self) -> &[PolyMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, g: usize) -> Result<&PolyMatrix> {
        self.matrices.get(g).ok_or(Error::IndexOutOfRange {
            index: g,
            len: self.matrices.len(),
        })
    }

    pub fn apply(&self, g: usize, w: &ModuleElement) -> Result<ModuleElement> {
        let a = self.matrix(g)?;
        let der = self.algebra.generator(g)?;
        apply_with(self.ring(), der, a, w)
    }

    /// `∇_u w` for `u = Σ c_k g_k`.
    pub fn apply_combination(&self, coeffs: &[Polynomial], w: &ModuleElement) -> Result<ModuleElement> {
        if coeffs.len() != self.algebra.len() {
            return Err(Error::Dimension("coefficient vector length".into()));
        }
        let ring = self.ring();
        let mut out = self.module.zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.apply(k, w)?.mul_poly(ring, c));
        }
        Ok(out)
    }

    /// Matrix of `Σ c_k A_k`.
    pub fn matrix_of_combination(&self, coeffs: &[Polynomial]) -> Result<PolyMatrix> {
        let n = self.module.ngens();
        let mut acc = PolyMatrix::zeros(n, n, self.ring().nvars());
        for (c, a) in coeffs.iter().zip(&self.matrices) {
            if !c.is_zero() {
                acc = acc.add(&a.mul_poly(c))?;
            }
        }
        acc.nf(self.ring())
    }

    /// The connection on the same module over `sub`, whose generators must
    /// be combinations of this algebra's generators.
    pub fn restrict(&self, sub: &LieRinehartAlgebra, degree_bound: i64) -> Result<Connection> {
        let mut mats = Vec::with_capacity(sub.len());
        for g in sub.generators() {
            let c = self.algebra.express(g, degree_bound)?;
            mats.push(self.matrix_of_combination(&c)?);
        }
        Connection::new(sub.clone(), self.module.clone(), mats)
    }

    pub fn direct_sum(&self, other: &Connection) -> Result<Connection> {
        if self.algebra != other.algebra {
            return Err(Error::RingMismatch);
        }
        let module = self.module.direct_sum(&other.module)?;
        let mats = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Connection::new(self.algebra.clone(), module, mats)
    }

    /// Module generators renumbered by `perm`, matrices conjugated to match.
    pub fn permute_module(&self, perm: &[usize]) -> Result<Connection> {
        let module = self.module.permute_generators(perm)?;
        let mats = self
            .matrices
            .iter()
            .map(|a| a.conjugate_permutation(perm))
            .collect();
        Connection::new(self.algebra.clone(), module, mats)
    }

    /// Same module and matrices over an algebra with reordered generators.
    pub fn permute_algebra(&self, perm: &[usize]) -> Result<Connection> {
        let algebra = self.algebra.permute(perm)?;
        let mut mats = self.matrices.clone();
        for (i, &p) in perm.iter().enumerate() {
            mats[p] = self.matrices[i].clone();
        }
        Connection::new(algebra, self.module.clone(), mats)
    }

    /// `R(g_i, g_j) = g_i(A_j) - g_j(A_i) + [A_i, A_j] - Σ c_k A_k`
    /// where `[g_i, g_j] = Σ c_k g_k`.
    pub fn curvature(&self, i: usize, j: usize, degree_bound: i64) -> Result<PolyMatrix> {
        let ring = self.ring().clone();
        let (gi, gj) = (self.algebra.generator(i)?, self.algebra.generator(j)?);
        let (ai, aj) = (self.matrix(i)?, self.matrix(j)?);
        let c = self.algebra.structure_constants(i, j, degree_bound)?;
        let gi_aj = aj.try_map(|p| gi.apply(p))?;
        let gj_ai = ai.try_map(|p| gj.apply(p))?;
        let comm = ai.mul(aj)?.sub(&aj.mul(ai)?)?;
        gi_aj
            .sub(&gj_ai)?
            .add(&comm)?
            .sub(&self.matrix_of_combination(&c)?)?
            .nf(&ring)
    }

    /// True when every column of the curvature matrix is zero in the module.
    pub fn curvature_vanishes(&self, i: usize, j: usize, degree_bound: i64) -> Result<bool> {
        let r = self.curvature(i, j, degree_bound)?;
        for col in 0..r.cols() {
            if !self.module.is_zero_element(&ModuleElement(r.column(col)))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pairs `i < j` on which the curvature does not vanish in the module.
    pub fn curved_pairs(&self, degree_bound: i64) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for i in 0..self.algebra.len() {
            for j in i + 1..self.algebra.len() {
                if !self.curvature_vanishes(i, j, degree_bound)? {
                    out.push((i, j));
                }
            }
        }
        Ok(out)
    }

    pub fn is_flat(&self, degree_bound: i64) -> Result<bool> {
        Ok(self.curved_pairs(degree_bound)?.is_empty())
    }

    /// `R(u, v) w = ∇_u ∇_v w - ∇_v ∇_u w - ∇_{[u,v]} w` for elements of the
    /// algebra given by coefficient vectors.
    pub fn curvature_apply(
        &self,
        u: &[Polynomial],
        v: &[Polynomial],
        w: &ModuleElement,
        degree_bound: i64,
    ) -> Result<ModuleElement> {
        let du = self.algebra.combination(u)?;
        let dv = self.algebra.combination(v)?;
        let bracket = self.algebra.express(&du.bracket(&dv)?, degree_bound)?;
        let uvw = self.apply_combination(u, &self.apply_combination(v, w)?)?;
        let vuw = self.apply_combination(v, &self.apply_combination(u, w)?)?;
        Ok(uvw.sub(&vuw).sub(&self.apply_combination(&bracket, w)?))
    }

    /// For each generator, the witness `B_g` with `g(phi) + A_g·phi = phi·B_g`,
    /// or the first entry of `psi·(g(phi) + A_g·phi)` not divisible by `f`.
    pub fn descent_witnesses(
        &self,
        mf: &MatrixFactorization,
    ) -> Result<Vec<std::result::Result<PolyMatrix, DescentFailure>>> {
        (0..self.algebra.len())
            .map(|g| descent_witness(self.ring(), self.algebra.generator(g)?, self.matrix(g)?, mf))
            .collect()
    }
}

fn apply_with(
    ring: &HypersurfaceRing,
    der: &Derivation,
    a: &PolyMatrix,
    w: &ModuleElement,
) -> Result<ModuleElement> {
    if w.len() != a.rows() {
        return Err(Error::Dimension("module element length".into()));
    }
    let mut out = Vec::with_capacity(w.len());
    for i in 0..a.rows() {
        let mut acc = der.apply(&w.0[i])?;
        for j in 0..a.cols() {
            let e = a.get(i, j);
            if !e.is_zero() && !w.0[j].is_zero() {
                acc = &acc + &(e * &w.0[j]);
            }
        }
        out.push(ring.nf(&acc)?);
    }
    Ok(ModuleElement(out))
}

/// The descent test for one generator, computed in the ambient polynomial ring.
pub fn descent_witness(
    ring: &HypersurfaceRing,
    g: &Derivation,
    a: &PolyMatrix,
    mf: &MatrixFactorization,
) -> Result<std::result::Result<PolyMatrix, DescentFailure>> {
    let rel = ring
        .relation()
        .ok_or_else(|| Error::InvalidRelation("descent needs a hypersurface ring".into()))?;
    if rel.polynomial() != &mf.f {
        return Err(Error::RingMismatch);
    }
    let g_phi = mf.phi.try_map(|p| g.apply_raw(p))?;
    let m = g_phi.add(&a.mul(&mf.phi)?)?;
    let top = mf.psi.mul(&m)?;
    let mut witness = PolyMatrix::zeros(top.rows(), top.cols(), ring.nvars());
    for (i, j, p) in top.entries() {
        let (q, r) = ring.div_rem(p)?;
        if !r.is_zero() {
            return Ok(Err(DescentFailure {
                row: i,
                col: j,
                remainder: r,
            }));
        }
        witness.set(i, j, q);
    }
    // phi·B = g(phi) + A·phi follows from phi·psi = f·I; recheck it anyway
    if mf.phi.mul(&witness)? != m {
        return Err(Error::Kernel("witness identity failed".into()));
    }
    Ok(Ok(witness))
}

/// Checks that `matrix` has the degrees a connection matrix of a generator of
/// degree `degree` needs on `module`.
pub fn matrix_degree_defects(
    module: &PresentedModule,
    matrix: &PolyMatrix,
    degree: i64,
) -> Vec<(usize, usize)> {
    let r = module.generator_degrees();
    matrix
        .entries()
        .filter(|(i, j, p)| {
            let d = module.ring().degree(p);
            d != WeightedDegree::Zero && !d.admits(r[*j] - r[*i] + degree)
        })
        .map(|(i, j, _)| (i, j))
        .collect()
}
