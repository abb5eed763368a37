//! Finitely presented graded modules and their degree slices.

use super::linalg::Matrix;
use super::poly::{Monomial, Polynomial};
use super::polymatrix::PolyMatrix;
use super::rational::Rational;
use super::ring::{HypersurfaceRing, WeightedDegree};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

/// A vector of ring elements, one per module generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement(pub Vec<Polynomial>);

impl ModuleElement {
    pub fn zero(ngens: usize, nvars: usize) -> Self {
        ModuleElement(vec![Polynomial::zero(nvars); ngens])
    }

    /// `p · e_i`.
    pub fn basis(ngens: usize, i: usize, p: Polynomial) -> Self {
        let mut v = Self::zero(ngens, p.nvars());
        v.0[i] = p;
        v
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement(self.0.iter().map(|p| p.scale(c)).collect())
    }

    /// `p · self`, reduced.
    pub fn mul_poly(&self, ring: &HypersurfaceRing, p: &Polynomial) -> ModuleElement {
        ModuleElement(self.0.iter().map(|a| ring.mul(p, a)).collect())
    }

    pub fn nf(&self, ring: &HypersurfaceRing) -> Result<ModuleElement> {
        Ok(ModuleElement(
            self.0.iter().map(|p| ring.nf(p)).collect::<Result<_>>()?,
        ))
    }

    pub fn display(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.display(names)).collect();
        format!("({})", parts.join(", "))
    }
}

/// `coker(P^relations → P^generators)`, graded by generator degrees plus a shift.
///
/// Columns of the presentation are the relations. The element `a·e_i`
/// has degree `deg a + degree(i) + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    ring: Arc<HypersurfaceRing>,
    generator_degrees: Vec<i64>,
    presentation: PolyMatrix,
    column_degrees: Vec<Option<i64>>,
    shift: i64,
}

impl PresentedModule {
    pub fn free(ring: Arc<HypersurfaceRing>, generator_degrees: Vec<i64>, shift: i64) -> Self {
        let n = ring.nvars();
        let presentation = PolyMatrix::zeros(generator_degrees.len(), 0, n);
        PresentedModule {
            ring,
            generator_degrees,
            presentation,
            column_degrees: Vec::new(),
            shift,
        }
    }

    pub fn new(
        ring: Arc<HypersurfaceRing>,
        generator_degrees: Vec<i64>,
        presentation: PolyMatrix,
        shift: i64,
    ) -> Result<Self> {
        if presentation.rows() != generator_degrees.len() {
            return Err(Error::Dimension(format!(
                "presentation has {} rows for {} generators",
                presentation.rows(),
                generator_degrees.len()
            )));
        }
        if presentation.nvars() != ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let presentation = presentation.nf(&ring)?;
        let mut column_degrees = Vec::with_capacity(presentation.cols());
        for j in 0..presentation.cols() {
            let mut cd = None;
            for i in 0..presentation.rows() {
                match ring.degree(presentation.get(i, j)) {
                    WeightedDegree::Zero => {}
                    WeightedDegree::Inhomogeneous => {
                        return Err(Error::InconsistentDegrees(format!(
                            "entry ({}, {}) is not homogeneous",
                            i + 1,
                            j + 1
                        )))
                    }
                    WeightedDegree::Homogeneous(e) => {
                        let c = e + generator_degrees[i];
                        match cd {
                            None => cd = Some(c),
                            Some(prev) if prev != c => {
                                return Err(Error::InconsistentDegrees(format!(
                                    "column {} has degrees {} and {}",
                                    j + 1,
                                    prev,
                                    c
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
            column_degrees.push(cd);
        }
        Ok(PresentedModule {
            ring,
            generator_degrees,
            presentation,
            column_degrees,
            shift,
        })
    }

    /// Like [`PresentedModule::new`], with generator degrees solved from the
    /// presentation. The first generator of each connected block gets degree 0.
    pub fn with_solved_degrees(
        ring: Arc<HypersurfaceRing>,
        presentation: PolyMatrix,
        shift: i64,
    ) -> Result<Self> {
        let degrees = solve_generator_degrees(&ring, &presentation)?;
        Self::new(ring, degrees, presentation, shift)
    }

    pub fn ring(&self) -> &Arc<HypersurfaceRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.generator_degrees
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    pub fn column_degrees(&self) -> &[Option<i64>] {
        &self.column_degrees
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_free(&self) -> bool {
        self.presentation.is_zero()
    }

    /// Degree of `e_i` including the shift.
    pub fn generator_degree(&self, i: usize) -> i64 {
        self.generator_degrees[i] + self.shift
    }

    /// Smallest degree in which the module can be nonzero.
    pub fn min_degree(&self) -> Option<i64> {
        (0..self.ngens()).map(|i| self.generator_degree(i)).min()
    }

    pub fn zero(&self) -> ModuleElement {
        ModuleElement::zero(self.ngens(), self.ring.nvars())
    }

    pub fn generator(&self, i: usize) -> ModuleElement {
        ModuleElement::basis(self.ngens(), i, self.ring.one())
    }

    pub fn degree(&self, w: &ModuleElement) -> WeightedDegree {
        let mut out = WeightedDegree::Zero;
        for (i, p) in w.0.iter().enumerate() {
            match self.ring.degree(p) {
                WeightedDegree::Zero => {}
                WeightedDegree::Inhomogeneous => return WeightedDegree::Inhomogeneous,
                WeightedDegree::Homogeneous(e) => {
                    let d = e + self.generator_degree(i);
                    match out {
                        WeightedDegree::Zero => out = WeightedDegree::Homogeneous(d),
                        WeightedDegree::Homogeneous(prev) if prev != d => {
                            return WeightedDegree::Inhomogeneous
                        }
                        _ => {}
                    }
                }
            }
        }
        out
    }

    /// Splits into homogeneous parts keyed by degree.
    pub fn homogeneous_parts(&self, w: &ModuleElement) -> BTreeMap<i64, ModuleElement> {
        let mut out: BTreeMap<i64, ModuleElement> = BTreeMap::new();
        for (i, p) in w.0.iter().enumerate() {
            for (m, c) in p.terms() {
                let d = self.ring.monomial_degree(m) + self.generator_degree(i);
                let e = out.entry(d).or_insert_with(|| self.zero());
                e.0[i].add_term(c.clone(), m.clone());
            }
        }
        out
    }

    /// True if `w` lies in the image of the presentation.
    pub fn is_zero_element(&self, w: &ModuleElement) -> Result<bool> {
        let w = w.nf(&self.ring)?;
        for (d, part) in self.homogeneous_parts(&w) {
            if self.slice(d).coords(&part)?.iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn slice(&self, d: i64) -> GradedSlice {
        GradedSlice::build(self, d)
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.shift != other.shift {
            // fold the shifts into the generator degrees
            let degrees = self
                .generator_degrees
                .iter()
                .map(|d| d + self.shift)
                .chain(other.generator_degrees.iter().map(|d| d + other.shift))
                .collect();
            return PresentedModule::new(
                self.ring.clone(),
                degrees,
                self.presentation.block_diag(&other.presentation),
                0,
            );
        }
        let degrees = self
            .generator_degrees
            .iter()
            .chain(&other.generator_degrees)
            .copied()
            .collect();
        PresentedModule::new(
            self.ring.clone(),
            degrees,
            self.presentation.block_diag(&other.presentation),
            self.shift,
        )
    }

    /// Generator `i` becomes generator `perm[i]`.
    pub fn permute_generators(&self, perm: &[usize]) -> Result<PresentedModule> {
        let n = self.ngens();
        check_permutation(perm, n)?;
        let mut degrees = vec![0; n];
        let mut pres = PolyMatrix::zeros(n, self.presentation.cols(), self.ring.nvars());
        for i in 0..n {
            degrees[perm[i]] = self.generator_degrees[i];
            for j in 0..self.presentation.cols() {
                pres.set(perm[i], j, self.presentation.get(i, j).clone());
            }
        }
        PresentedModule::new(self.ring.clone(), degrees, pres, self.shift)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Dimension("permutation length".into()));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Dimension("not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Row degrees `r` and column degrees `c` with `deg entry(i,j) = c_j - r_i`.
pub fn solve_generator_degrees(ring: &HypersurfaceRing, pres: &PolyMatrix) -> Result<Vec<i64>> {
    let (nr, nc) = (pres.rows(), pres.cols());
    let mut edges: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nr + nc];
    for i in 0..nr {
        for j in 0..nc {
            let p = ring.nf(pres.get(i, j))?;
            match ring.degree(&p) {
                WeightedDegree::Zero => {}
                WeightedDegree::Inhomogeneous => {
                    return Err(Error::InconsistentDegrees(format!(
                        "entry ({}, {}) is not homogeneous",
                        i + 1,
                        j + 1
                    )))
                }
                WeightedDegree::Homogeneous(e) => {
                    // c_j = r_i + e
                    edges[i].push((nr + j, e));
                    edges[nr + j].push((i, -e));
                }
            }
        }
    }
    let mut value: Vec<Option<i64>> = vec![None; nr + nc];
    for start in 0..nr {
        if value[start].is_some() {
            continue;
        }
        value[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let vu = value[u].expect("visited");
            for &(v, e) in &edges[u] {
                let want = vu + e;
                match value[v] {
                    None => {
                        value[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(have) if have != want => {
                        return Err(Error::InconsistentDegrees(format!(
                            "homogeneity constraints conflict ({have} vs {want})"
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(value[..nr].iter().map(|v| v.expect("rows anchored")).collect())
}

/// A basis of one degree slice of a presented module.
///
/// Candidates are pairs (generator, normal monomial) of the right degree,
/// generator-major and then in ascending monomial order. Relations landing in
/// the slice are put in reduced echelon form; candidates that are not pivots
/// form the basis.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    degree: i64,
    ngens: usize,
    nvars: usize,
    candidates: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    reducer: Matrix,
    pivots: Vec<usize>,
    basis: Vec<usize>,
}

impl GradedSlice {
    fn build(module: &PresentedModule, d: i64) -> Self {
        let ring = &module.ring;
        let mut candidates = Vec::new();
        for i in 0..module.ngens() {
            for m in ring.monomials_of_degree(d - module.generator_degree(i)) {
                candidates.push((i, m));
            }
        }
        let index: HashMap<(usize, Monomial), usize> = candidates
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, c)| (c, k))
            .collect();
        let mut rels: Vec<Vec<Rational>> = Vec::new();
        for (j, cd) in module.column_degrees.iter().enumerate() {
            let Some(cd) = cd else { continue };
            for u in ring.monomials_of_degree(d - cd - module.shift) {
                let mut v = vec![Rational::zero(); candidates.len()];
                let mut any = false;
                for i in 0..module.ngens() {
                    let e = module.presentation.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let prod = ring
                        .nf(&e.mul_monomial(&num_traits::One::one(), &u))
                        .expect("same ring");
                    for (m, c) in prod.terms() {
                        let k = index[&(i, m.clone())];
                        v[k] += c;
                        any = true;
                    }
                }
                if any {
                    rels.push(v);
                }
            }
        }
        let ncand = candidates.len();
        let rref = Matrix::from_rows(rels, ncand).rref();
        let rank = rref.pivots.len();
        let mut reducer = Matrix::zeros(rank, ncand);
        for r in 0..rank {
            for c in 0..ncand {
                reducer.set(r, c, rref.matrix.get(r, c).clone());
            }
        }
        let mut is_pivot = vec![false; ncand];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..ncand).filter(|&k| !is_pivot[k]).collect();
        GradedSlice {
            degree: d,
            ngens: module.ngens(),
            nvars: ring.nvars(),
            candidates,
            index,
            reducer,
            pivots: rref.pivots,
            basis,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of generator-monomial pairs before dividing out relations.
    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    /// The `(generator, monomial)` pair of basis element `i`.
    pub fn basis_label(&self, i: usize) -> (usize, &Monomial) {
        let (g, m) = &self.candidates[self.basis[i]];
        (*g, m)
    }

    pub fn basis_element(&self, i: usize) -> ModuleElement {
        let (g, m) = self.basis_label(i);
        ModuleElement::basis(
            self.ngens,
            g,
            Polynomial::term(num_traits::One::one(), m.clone()),
        )
    }

    pub fn basis_elements(&self) -> Vec<ModuleElement> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// The element with the given coordinates.
    pub fn element(&self, coords: &[Rational]) -> ModuleElement {
        let mut w = ModuleElement::zero(self.ngens, self.nvars);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (g, m) = self.basis_label(i);
            w.0[g].add_term(c.clone(), m.clone());
        }
        w
    }

    /// Coordinates of a normal-form element of this degree, modulo relations.
    pub fn coords(&self, w: &ModuleElement) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.candidates.len()];
        for (g, p) in w.0.iter().enumerate() {
            for (m, c) in p.terms() {
                let k = self
                    .index
                    .get(&(g, m.clone()))
                    .ok_or(Error::NotInSlice {
                        degree: self.degree,
                    })?;
                v[*k] += c;
            }
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (c, a) in self.reducer.row(r).iter().enumerate() {
                if !a.is_zero() {
                    v[c] -= &factor * a;
                }
            }
        }
        Ok(self.basis.iter().map(|&k| v[k].clone()).collect())
    }
}
