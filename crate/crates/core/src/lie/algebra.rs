use super::derivation::{same_ring, Derivation};
use crate::algebra::linalg::Matrix;
use crate::algebra::poly::{Monomial, Polynomial};
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::rational::Rational;
use crate::algebra::ring::{HypersurfaceRing, WeightedDegree};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Arc;

/// A Lie-Rinehart algebra given by homogeneous derivations generating it as a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRinehartAlgebra {
    ring: Arc<HypersurfaceRing>,
    names: Vec<String>,
    generators: Vec<Derivation>,
    degrees: Vec<i64>,
    syzygies: Option<PolyMatrix>,
}

impl LieRinehartAlgebra {
    pub fn new(
        ring: Arc<HypersurfaceRing>,
        names: Vec<String>,
        generators: Vec<Derivation>,
    ) -> Result<Self> {
        if names.len() != generators.len() {
            return Err(Error::Dimension(format!(
                "{} names for {} generators",
                names.len(),
                generators.len()
            )));
        }
        let mut degrees = Vec::with_capacity(generators.len());
        for (name, g) in names.iter().zip(&generators) {
            if !same_ring(&ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
            match g.degree() {
                WeightedDegree::Homogeneous(d) => degrees.push(d),
                WeightedDegree::Zero => {
                    return Err(Error::Inhomogeneous(format!("generator {name} is zero")))
                }
                WeightedDegree::Inhomogeneous => {
                    return Err(Error::Inhomogeneous(format!(
                        "generator {name} = {}",
                        g.display()
                    )))
                }
            }
        }
        Ok(LieRinehartAlgebra {
            ring,
            names,
            generators,
            degrees,
            syzygies: None,
        })
    }

    /// Names generators `g1, g2, ...`.
    pub fn from_generators(ring: Arc<HypersurfaceRing>, generators: Vec<Derivation>) -> Result<Self> {
        let names = (1..=generators.len()).map(|i| format!("g{i}")).collect();
        Self::new(ring, names, generators)
    }

    pub fn with_syzygies(mut self, syzygies: PolyMatrix) -> Result<Self> {
        if syzygies.rows() != self.rank_bound() && syzygies.cols() != self.rank_bound() {
            return Err(Error::Dimension(
                "syzygy matrix must have one side per generator".into(),
            ));
        }
        self.syzygies = Some(syzygies);
        Ok(self)
    }

    pub fn ring(&self) -> &Arc<HypersurfaceRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of listed generators.
    pub fn rank_bound(&self) -> usize {
        self.generators.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[Derivation] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Result<&Derivation> {
        self.generators.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.generators.len(),
        })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn syzygies(&self) -> Option<&PolyMatrix> {
        self.syzygies.as_ref()
    }

    /// Anchor of `Σ a_k g_k`.
    pub fn combination(&self, coeffs: &[Polynomial]) -> Result<Derivation> {
        if coeffs.len() != self.len() {
            return Err(Error::Dimension("coefficient vector length".into()));
        }
        let mut out = Derivation::zero(self.ring.clone());
        for (a, g) in coeffs.iter().zip(&self.generators) {
            if !a.is_zero() {
                out = out.add(&g.mul_poly(a))?;
            }
        }
        Ok(out)
    }

    /// Free on the listed generators: some maximal minor of the coefficient
    /// matrix is nonzero in the ring. Over a domain this is exact.
    pub fn is_free(&self) -> bool {
        let r = self.len();
        let n = self.ring.nvars();
        if r > n {
            return false;
        }
        let rows: Vec<Vec<Polynomial>> = self
            .generators
            .iter()
            .map(|g| g.coefficients().to_vec())
            .collect();
        subsets(n, r).into_iter().any(|cols| {
            let minor: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            let det = determinant(&minor, n);
            !self.ring.nf(&det).expect("same ring").is_zero()
        })
    }

    /// Coefficients `a` with `δ = Σ a_k g_k`, each `a_k` homogeneous of degree
    /// `deg δ - deg g_k`. Coefficient degrees above `degree_bound` are not
    /// searched. Free unknowns are set to zero.
    pub fn express(&self, delta: &Derivation, degree_bound: i64) -> Result<Vec<Polynomial>> {
        if !same_ring(&self.ring, delta.ring()) {
            return Err(Error::RingMismatch);
        }
        let d = match delta.degree() {
            WeightedDegree::Zero => return Ok(vec![self.ring.zero(); self.len()]),
            WeightedDegree::Inhomogeneous => {
                return Err(Error::Inhomogeneous(delta.display()))
            }
            WeightedDegree::Homogeneous(d) => d,
        };
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for k in 0..self.len() {
            let e = d - self.degrees[k];
            if e > degree_bound {
                continue;
            }
            for m in self.ring.monomials_of_degree(e) {
                unknowns.push((k, m));
            }
        }
        let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut columns: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(unknowns.len());
        for (k, m) in &unknowns {
            let mut col = Vec::new();
            for v in 0..self.ring.nvars() {
                let c = self.generators[*k].coefficient(v);
                if c.is_zero() {
                    continue;
                }
                let p = self.ring.nf(&c.mul_monomial(&Rational::one(), m))?;
                for (mono, a) in p.terms() {
                    let next = rows.len();
                    let r = *rows.entry((v, mono.clone())).or_insert(next);
                    col.push((r, a.clone()));
                }
            }
            columns.push(col);
        }
        let mut rhs_entries = Vec::new();
        for v in 0..self.ring.nvars() {
            for (mono, a) in delta.coefficient(v).terms() {
                let next = rows.len();
                let r = *rows.entry((v, mono.clone())).or_insert(next);
                rhs_entries.push((r, a.clone()));
            }
        }
        let nrows = rows.len();
        let mut mat = Matrix::zeros(nrows, unknowns.len());
        for (j, col) in columns.iter().enumerate() {
            for (r, a) in col {
                let v = mat.get(*r, j) + a;
                mat.set(*r, j, v);
            }
        }
        let mut rhs = vec![Rational::zero(); nrows];
        for (r, a) in rhs_entries {
            rhs[r] += a;
        }
        let sol = mat.solve(&rhs).ok_or_else(|| {
            Error::NotInSpan(format!(
                "{} within coefficient degree {degree_bound}",
                delta.display()
            ))
        })?;
        let mut out = vec![self.ring.zero(); self.len()];
        for ((k, m), c) in unknowns.into_iter().zip(sol) {
            out[k].add_term(c, m);
        }
        Ok(out)
    }

    /// `[g_i, g_j]` in terms of the generators.
    pub fn structure_constants(&self, i: usize, j: usize, degree_bound: i64) -> Result<Vec<Polynomial>> {
        let b = self.generator(i)?.bracket(self.generator(j)?)?;
        self.express(&b, degree_bound)
    }

    /// Keeps generators listed by index, in the given order.
    pub fn sub_algebra(&self, indices: &[usize]) -> Result<LieRinehartAlgebra> {
        let mut names = Vec::new();
        let mut gens = Vec::new();
        for &i in indices {
            gens.push(self.generator(i)?.clone());
            names.push(self.names[i].clone());
        }
        LieRinehartAlgebra::new(self.ring.clone(), names, gens)
    }

    /// Generator `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<LieRinehartAlgebra> {
        crate::algebra::module::check_permutation(perm, self.len())?;
        let mut inverse = vec![0; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        self.sub_algebra(&inverse)
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// Laplace expansion; the matrices here are at most 3x3.
pub(crate) fn determinant(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(nvars);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &determinant(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{parse_polynomial, Params};
    use crate::algebra::rational::int;
    use crate::algebra::ring::WeightSystem;

    fn plane() -> Arc<HypersurfaceRing> {
        Arc::new(
            HypersurfaceRing::polynomial_ring(
                vec!["x".into(), "y".into()],
                WeightSystem::standard(2),
            )
            .unwrap(),
        )
    }

    fn der(ring: &Arc<HypersurfaceRing>, cs: &[&str]) -> Derivation {
        let cs = cs
            .iter()
            .map(|s| parse_polynomial(s, ring.variables(), &Params::new()).unwrap())
            .collect();
        Derivation::new(ring.clone(), cs).unwrap()
    }

    #[test]
    fn express_and_rejection() {
        let b = plane();
        let euler = der(&b, &["x", "y"]);
        let l = LieRinehartAlgebra::from_generators(b.clone(), vec![euler.clone()]).unwrap();
        assert_eq!(l.express(&euler, 4).unwrap(), vec![b.one()]);
        let dx = der(&b, &["1", "0"]);
        assert!(matches!(l.express(&dx, 4), Err(Error::NotInSpan(_))));
        let twice = euler.mul_poly(&b.var(0));
        assert_eq!(l.express(&twice, 4).unwrap(), vec![b.var(0)]);
        assert!(matches!(l.express(&twice, 0), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn freeness() {
        let b = plane();
        let l = LieRinehartAlgebra::from_generators(
            b.clone(),
            vec![der(&b, &["1", "0"]), der(&b, &["0", "1"])],
        )
        .unwrap();
        assert!(l.is_free());
        let dependent = LieRinehartAlgebra::from_generators(
            b.clone(),
            vec![der(&b, &["x", "y"]), der(&b, &["x^2", "x*y"])],
        )
        .unwrap();
        assert!(!dependent.is_free());
        assert_eq!(dependent.degrees(), &[0, 1]);
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let b = plane();
        let g = der(&b, &["1 + x", "0"]);
        assert!(matches!(
            LieRinehartAlgebra::from_generators(b, vec![g]),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn structure_constants_of_affine_algebra() {
        let b = plane();
        let l = LieRinehartAlgebra::from_generators(
            b.clone(),
            vec![der(&b, &["1", "0"]), der(&b, &["x", "0"])],
        )
        .unwrap();
        // [d_x, x d_x] = d_x
        assert_eq!(
            l.structure_constants(0, 1, 4).unwrap(),
            vec![b.constant(int(1)), b.zero()]
        );
    }
}
