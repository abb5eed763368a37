//! The standard complex `C^p(L, W) = Hom_A(Λ^p L, W)` of a free Lie-Rinehart
//! algebra, slice by slice.
//!
//! A degree-`d` cochain sends `g_I = g_{i_1}∧…∧g_{i_p}` to an element of `W` of
//! degree `d + deg g_I`. The differential is
//!
//! `dφ(g_0,…,g_p) = Σ_s (-1)^s ∇_{g_s} φ(…ĝ_s…) + Σ_{s<t} (-1)^{s+t} φ([g_s,g_t], …ĝ_s…ĝ_t…)`.

use crate::algebra::linalg::Matrix;
use crate::algebra::module::{GradedSlice, ModuleElement};
use crate::algebra::poly::Polynomial;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::lie::Connection;
use num_traits::Zero;
use rayon::prelude::*;

/// Increasing index sets of size `p` in `0..r`, lexicographic.
pub fn wedges(r: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, r: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(i + 1, r, p, cur, out);
            cur.pop();
        }
    }
    rec(0, r, p, &mut cur, &mut out);
    out
}

/// Sorts `k` into `rest` (which is increasing and does not contain `k`);
/// returns the sorted set and the sign of moving `k` from the front.
pub(crate) fn insert_sorted(k: usize, rest: &[usize]) -> Option<(Vec<usize>, i64)> {
    if rest.contains(&k) {
        return None;
    }
    let pos = rest.iter().filter(|&&r| r < k).count();
    let mut out = rest.to_vec();
    out.insert(pos, k);
    Some((out, if pos % 2 == 0 { 1 } else { -1 }))
}

/// Basis of one slice `C^p_d`: wedge-major, then the module slice basis.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    pub p: usize,
    pub degree: i64,
    pub wedges: Vec<Vec<usize>>,
    pub slices: Vec<GradedSlice>,
    offsets: Vec<usize>,
}

impl CochainBasis {
    pub fn dim(&self) -> usize {
        self.offsets.last().copied().unwrap_or(0)
    }

    /// `(wedge index, slice basis index)` of each basis element, in order.
    pub fn elements(&self) -> Vec<(usize, usize)> {
        (0..self.wedges.len())
            .flat_map(|w| (0..self.slices[w].dim()).map(move |b| (w, b)))
            .collect()
    }

    fn wedge_index(&self, wedge: &[usize]) -> Option<usize> {
        self.wedges.iter().position(|w| w == wedge)
    }

    /// Values `φ(g_I)` of the cochain with these coordinates, one per wedge.
    pub fn values(&self, coords: &[Rational]) -> Vec<ModuleElement> {
        (0..self.wedges.len())
            .map(|w| self.slices[w].element(&coords[self.offsets[w]..self.offsets[w + 1]]))
            .collect()
    }

    /// Coordinates of the cochain with the given values.
    pub fn coords(&self, values: &[ModuleElement]) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(self.dim());
        for (w, v) in values.iter().enumerate() {
            out.extend(self.slices[w].coords(v)?);
        }
        Ok(out)
    }
}

/// The complex of a connection over a free algebra, with its bracket data.
pub struct StandardComplex<'a> {
    conn: &'a Connection,
    rank: usize,
    wedges: Vec<Vec<Vec<usize>>>,
    brackets: Vec<Vec<Vec<Polynomial>>>,
}

impl<'a> StandardComplex<'a> {
    /// `degree_bound` limits the coefficient degrees used to expand brackets.
    pub fn new(conn: &'a Connection, degree_bound: i64) -> Result<Self> {
        let l = conn.algebra();
        if !l.is_free() {
            return Err(Error::NotFree);
        }
        let r = l.len();
        let mut brackets = vec![vec![Vec::new(); r]; r];
        for i in 0..r {
            for j in i + 1..r {
                brackets[i][j] = l.structure_constants(i, j, degree_bound)?;
            }
        }
        Ok(StandardComplex {
            conn,
            rank: r,
            wedges: (0..=r).map(|p| wedges(r, p)).collect(),
            brackets,
        })
    }

    pub fn connection(&self) -> &Connection {
        self.conn
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn wedge_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&i| self.conn.algebra().degree(i)).sum()
    }

    /// Lowest degree with a possibly nonzero cochain.
    pub fn min_degree(&self) -> i64 {
        let m = self.conn.module().min_degree().unwrap_or(0);
        self.wedges
            .iter()
            .flatten()
            .map(|w| m - self.wedge_degree(w))
            .min()
            .unwrap_or(m)
    }

    pub fn cochain_basis(&self, p: usize, d: i64) -> CochainBasis {
        let ws = if p <= self.rank {
            self.wedges[p].clone()
        } else {
            Vec::new()
        };
        let slices: Vec<GradedSlice> = ws
            .iter()
            .map(|w| self.conn.module().slice(d + self.wedge_degree(w)))
            .collect();
        let mut offsets = vec![0];
        for s in &slices {
            offsets.push(offsets.last().unwrap() + s.dim());
        }
        CochainBasis {
            p,
            degree: d,
            wedges: ws,
            slices,
            offsets,
        }
    }

    /// `dφ(g_J)` for a cochain given by its values on the wedges of `src`.
    fn differential_values(
        &self,
        src: &CochainBasis,
        values: &[ModuleElement],
        target: &[usize],
    ) -> Result<ModuleElement> {
        let ring = self.conn.ring();
        let mut acc = self.conn.module().zero();
        for s in 0..target.len() {
            let mut rest = target.to_vec();
            let g = rest.remove(s);
            if let Some(w) = src.wedge_index(&rest) {
                if values[w].is_zero() {
                    continue;
                }
                let t = self.conn.apply(g, &values[w])?;
                acc = if s % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
        }
        for s in 0..target.len() {
            for t in s + 1..target.len() {
                let rest: Vec<usize> = target
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != s && *i != t)
                    .map(|(_, &v)| v)
                    .collect();
                let c = &self.brackets[target[s]][target[t]];
                for (k, ck) in c.iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    let Some((wedge, sign)) = insert_sorted(k, &rest) else {
                        continue;
                    };
                    let Some(w) = src.wedge_index(&wedge) else {
                        continue;
                    };
                    let term = values[w].mul_poly(ring, ck);
                    let sign = sign * if (s + t) % 2 == 0 { 1 } else { -1 };
                    acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
        }
        acc.nf(ring)
    }

    /// Matrix of `d^p: C^p_d → C^{p+1}_d` in the cochain bases.
    pub fn differential_matrix(&self, p: usize, d: i64) -> Result<Matrix> {
        let src = self.cochain_basis(p, d);
        let dst = self.cochain_basis(p + 1, d);
        self.differential_between(&src, &dst)
    }

    fn differential_between(&self, src: &CochainBasis, dst: &CochainBasis) -> Result<Matrix> {
        let mut m = Matrix::zeros(dst.dim(), src.dim());
        if dst.dim() == 0 || src.dim() == 0 {
            return Ok(m);
        }
        for (col, _) in src.elements().iter().enumerate() {
            let mut e = vec![Rational::zero(); src.dim()];
            e[col] = num_traits::One::one();
            let v = self.apply_differential(src, dst, &e)?;
            for (row, x) in v.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        Ok(m)
    }

    /// `d` applied to a cochain in coordinates.
    pub fn apply_differential(
        &self,
        src: &CochainBasis,
        dst: &CochainBasis,
        coords: &[Rational],
    ) -> Result<Vec<Rational>> {
        let values = src.values(coords);
        let mut out = Vec::with_capacity(dst.dim());
        for (w, target) in dst.wedges.iter().enumerate() {
            let v = self.differential_values(src, &values, target)?;
            out.extend(dst.slices[w].coords(&v)?);
        }
        Ok(out)
    }

    /// First `(p, d)` with `d^{p+1}∘d^p ≠ 0`, scanning degrees from the bottom.
    pub fn verify(&self, max_degree: i64) -> Result<ComplexCheck> {
        let lo = self.min_degree();
        let results: Vec<Result<Option<(usize, i64)>>> = (lo..=max_degree)
            .into_par_iter()
            .map(|d| {
                for p in 0..self.rank.saturating_sub(1) {
                    let a = self.differential_matrix(p, d)?;
                    let b = self.differential_matrix(p + 1, d)?;
                    if a.cols() > 0 && b.rows() > 0 && !b.mul(&a).is_zero() {
                        return Ok(Some((p, d)));
                    }
                }
                Ok(None)
            })
            .collect();
        let mut first = None;
        for r in results {
            if let Some(f) = r? {
                first = Some(f);
                break;
            }
        }
        Ok(ComplexCheck {
            min_degree: lo,
            max_degree,
            first_failure: first,
        })
    }

    /// Cohomology slice by slice from `min_degree()` to `max_degree`.
    pub fn cohomology(&self, max_degree: i64) -> Result<GradedCohomology> {
        self.cohomology_range(self.min_degree(), max_degree)
    }

    pub fn cohomology_range(&self, lo: i64, hi: i64) -> Result<GradedCohomology> {
        let slices: Vec<Result<CohomologySlice>> = (lo..=hi)
            .into_par_iter()
            .map(|d| self.cohomology_slice(d))
            .collect();
        Ok(GradedCohomology {
            rank: self.rank,
            min_degree: lo,
            max_degree: hi,
            slices: slices.into_iter().collect::<Result<_>>()?,
        })
    }

    pub fn cohomology_slice(&self, d: i64) -> Result<CohomologySlice> {
        let r = self.rank;
        let bases: Vec<CochainBasis> = (0..=r).map(|p| self.cochain_basis(p, d)).collect();
        let mut diffs = Vec::with_capacity(r);
        for p in 0..r {
            diffs.push(self.differential_between(&bases[p], &bases[p + 1])?);
        }
        for p in 0..r.saturating_sub(1) {
            if diffs[p].cols() > 0 && diffs[p + 1].rows() > 0 && !diffs[p + 1].mul(&diffs[p]).is_zero() {
                return Err(Error::NotAComplex { p, degree: d });
            }
        }
        let mut dims = Vec::with_capacity(r + 1);
        let mut reps = Vec::with_capacity(r + 1);
        for p in 0..=r {
            let n = bases[p].dim();
            let kernel = if p < r {
                diffs[p].nullspace()
            } else {
                identity_vectors(n)
            };
            let image: Vec<Vec<Rational>> = if p > 0 {
                let m = &diffs[p - 1];
                (0..m.cols()).map(|j| m.column(j)).collect()
            } else {
                Vec::new()
            };
            let chosen = complement(&image, &kernel, n);
            dims.push(chosen.len());
            reps.push(chosen);
        }
        Ok(CohomologySlice {
            degree: d,
            cochain_dims: bases.iter().map(|b| b.dim()).collect(),
            dims,
            representatives: reps,
        })
    }

    /// Coordinates of a cocycle in `C^p_d` against the representatives and
    /// the coboundaries: returns the representative part, or `None` when the
    /// vector is not in their span.
    pub fn class_coordinates(
        &self,
        slice: &CohomologySlice,
        p: usize,
        v: &[Rational],
    ) -> Result<Option<Vec<Rational>>> {
        let reps = &slice.representatives[p];
        let mut cols: Vec<Vec<Rational>> = reps.clone();
        if p > 0 {
            let m = self.differential_matrix(p - 1, slice.degree)?;
            cols.extend((0..m.cols()).map(|j| m.column(j)));
        }
        let n = v.len();
        if cols.is_empty() {
            return Ok(v.iter().all(|x| x.is_zero()).then(Vec::new));
        }
        let a = Matrix::from_columns(&cols, n);
        Ok(a.solve(v).map(|x| x[..reps.len()].to_vec()))
    }
}

fn identity_vectors(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = num_traits::One::one();
            v
        })
        .collect()
}

/// Kernel vectors, in order, that enlarge the span of `image`.
fn complement(image: &[Vec<Rational>], kernel: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut span: Vec<Vec<Rational>> = image.to_vec();
    let mut rank = if span.is_empty() {
        0
    } else {
        Matrix::from_rows(span.clone(), n).rank()
    };
    let mut out = Vec::new();
    for k in kernel {
        span.push(k.clone());
        let r = Matrix::from_rows(span.clone(), n).rank();
        if r > rank {
            rank = r;
            out.push(k.clone());
        } else {
            span.pop();
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCheck {
    pub min_degree: i64,
    pub max_degree: i64,
    pub first_failure: Option<(usize, i64)>,
}

impl ComplexCheck {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySlice {
    pub degree: i64,
    pub cochain_dims: Vec<usize>,
    pub dims: Vec<usize>,
    /// Per `p`, cocycles in cochain coordinates spanning a complement of the coboundaries.
    pub representatives: Vec<Vec<Vec<Rational>>>,
}

impl CohomologySlice {
    /// `Σ_p (-1)^p dim H^p`.
    pub fn euler(&self) -> i64 {
        alternating(&self.dims)
    }

    /// `Σ_p (-1)^p dim C^p`.
    pub fn cochain_euler(&self) -> i64 {
        alternating(&self.cochain_dims)
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCohomology {
    pub rank: usize,
    pub min_degree: i64,
    pub max_degree: i64,
    pub slices: Vec<CohomologySlice>,
}

impl GradedCohomology {
    pub fn slice(&self, d: i64) -> Option<&CohomologySlice> {
        if d < self.min_degree || d > self.max_degree {
            return None;
        }
        self.slices.get((d - self.min_degree) as usize)
    }

    /// `dim H^p_d`, zero outside the computed range.
    pub fn dim(&self, p: usize, d: i64) -> usize {
        self.slice(d)
            .and_then(|s| s.dims.get(p).copied())
            .unwrap_or(0)
    }

    /// `(d, dim H^p_d)` over the computed range.
    pub fn row(&self, p: usize) -> Vec<(i64, usize)> {
        self.slices
            .iter()
            .map(|s| (s.degree, s.dims.get(p).copied().unwrap_or(0)))
            .collect()
    }
}
