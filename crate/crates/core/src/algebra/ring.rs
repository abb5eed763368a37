//! Weighted polynomial rings and their quotients by one quasi-homogeneous relation.

use super::poly::{Monomial, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Positive integer weight per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem(Vec<u32>);

impl WeightSystem {
    pub fn new(weights: &[i64]) -> Result<Self> {
        weights
            .iter()
            .map(|&w| {
                if w >= 1 && w <= u32::MAX as i64 {
                    Ok(w as u32)
                } else {
                    Err(Error::InvalidWeight(w))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightSystem)
    }

    /// All weights one: the standard grading.
    pub fn standard(nvars: usize) -> Self {
        WeightSystem(vec![1; nvars])
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.0[i] as i64
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Weighted degree of a polynomial. The zero polynomial has its own bottom value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightedDegree {
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

impl WeightedDegree {
    pub fn value(self) -> Option<i64> {
        match self {
            WeightedDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// True for zero or for a homogeneous polynomial of degree `d`.
    pub fn admits(self, d: i64) -> bool {
        match self {
            WeightedDegree::Zero => true,
            WeightedDegree::Homogeneous(e) => e == d,
            WeightedDegree::Inhomogeneous => false,
        }
    }
}

pub fn weighted_degree(p: &Polynomial, w: &WeightSystem) -> WeightedDegree {
    let mut degs = p.terms().map(|(m, _)| m.weighted_degree(w.weights()));
    match degs.next() {
        None => WeightedDegree::Zero,
        Some(d) => {
            if degs.all(|e| e == d) {
                WeightedDegree::Homogeneous(d)
            } else {
                WeightedDegree::Inhomogeneous
            }
        }
    }
}

/// A relation `f` with a designated reduction monomial `var^exponent`.
///
/// `f` is stored monic in `var^exponent`; every other term has a smaller
/// exponent of `var`, so division by `f` is division of polynomials in `var`
/// with monic leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    original: Polynomial,
    tail: Polynomial,
    var: usize,
    exponent: u32,
}

impl Relation {
    pub fn polynomial(&self) -> &Polynomial {
        &self.original
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HypersurfaceRing {
    variables: Vec<String>,
    weights: WeightSystem,
    relation: Option<Relation>,
}

impl HypersurfaceRing {
    pub fn polynomial_ring(variables: Vec<String>, weights: WeightSystem) -> Result<Self> {
        if variables.len() != weights.len() {
            return Err(Error::VariableCount {
                expected: variables.len(),
                found: weights.len(),
            });
        }
        Ok(HypersurfaceRing {
            variables,
            weights,
            relation: None,
        })
    }

    /// The quotient by `relation`, reducing `var^exponent`.
    pub fn hypersurface(
        variables: Vec<String>,
        weights: WeightSystem,
        relation: Polynomial,
        var: usize,
        exponent: u32,
    ) -> Result<Self> {
        let mut ring = Self::polynomial_ring(variables, weights)?;
        relation.check_nvars(ring.nvars())?;
        if var >= ring.nvars() {
            return Err(Error::UnknownVariable(var));
        }
        if exponent == 0 {
            return Err(Error::InvalidRelation(
                "reduction exponent must be positive".into(),
            ));
        }
        if weighted_degree(&relation, &ring.weights).value().is_none() {
            return Err(Error::InvalidRelation(format!(
                "relation {} is not quasi-homogeneous",
                relation.display(&ring.variables)
            )));
        }
        let lead = Monomial::from_exponents(
            (0..ring.nvars())
                .map(|i| if i == var { exponent } else { 0 })
                .collect(),
        );
        let c = relation.coefficient(&lead);
        if c.is_zero() {
            return Err(Error::InvalidRelation(format!(
                "reduction monomial {} does not occur in the relation",
                Polynomial::term(Rational::one(), lead.clone()).display(&ring.variables)
            )));
        }
        let monic = relation.scale(&(Rational::one() / &c));
        let tail = &monic - &Polynomial::term(Rational::one(), lead);
        if tail.degree_in(var) >= exponent {
            return Err(Error::InvalidRelation(format!(
                "{}^{} is not the highest power of {} in the relation",
                ring.variables[var], exponent, ring.variables[var]
            )));
        }
        ring.relation = Some(Relation {
            original: relation,
            tail,
            var,
            exponent,
        });
        Ok(ring)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn relation(&self) -> Option<&Relation> {
        self.relation.as_ref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), i)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::constant(self.nvars(), c)
    }

    pub fn degree(&self, p: &Polynomial) -> WeightedDegree {
        weighted_degree(p, &self.weights)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(self.weights.weights())
    }

    /// Normal form modulo the relation; the identity for a polynomial ring.
    pub fn nf(&self, p: &Polynomial) -> Result<Polynomial> {
        p.check_nvars(self.nvars())?;
        Ok(match &self.relation {
            None => p.clone(),
            Some(rel) => div_rem(p, rel).1,
        })
    }

    /// `(q, r)` with `p = q·f + r` and `r` in normal form. `q = 0` without a relation.
    pub fn div_rem(&self, p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        p.check_nvars(self.nvars())?;
        Ok(match &self.relation {
            None => (self.zero(), p.clone()),
            Some(rel) => {
                let (q, r) = div_rem(p, rel);
                // q was computed against the monic relation
                let c = rel
                    .original
                    .coefficient(&reduction_monomial(self.nvars(), rel));
                (q.scale(&(Rational::one() / c)), r)
            }
        })
    }

    pub fn is_zero_in_quotient(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.nf(p)?.is_zero())
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.nf(&(a * b)).expect("operands share the ring")
    }

    /// Monomials of weighted degree `d`, all of them without a relation,
    /// otherwise only those in normal form. Ascending monomial order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let cap = self
            .relation
            .as_ref()
            .map(|r| (r.var, r.exponent.saturating_sub(1)));
        let mut exps = vec![0u32; self.nvars()];
        enumerate(self.weights.weights(), 0, d, cap, &mut exps, &mut out);
        out.sort();
        out
    }

    pub fn slice_dim(&self, d: i64) -> usize {
        self.monomials_of_degree(d).len()
    }
}

fn reduction_monomial(nvars: usize, rel: &Relation) -> Monomial {
    Monomial::from_exponents(
        (0..nvars)
            .map(|i| if i == rel.var { rel.exponent } else { 0 })
            .collect(),
    )
}

fn enumerate(
    weights: &[u32],
    i: usize,
    remaining: i64,
    cap: Option<(usize, u32)>,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if i == weights.len() {
        if remaining == 0 {
            out.push(Monomial::from_exponents(exps.clone()));
        }
        return;
    }
    let w = weights[i] as i64;
    let mut max = (remaining / w) as u32;
    if let Some((v, c)) = cap {
        if v == i {
            max = max.min(c);
        }
    }
    for e in 0..=max {
        exps[i] = e;
        enumerate(weights, i + 1, remaining - e as i64 * w, cap, exps, out);
    }
    exps[i] = 0;
}

/// Division by the monic relation in its reduction variable.
fn div_rem(p: &Polynomial, rel: &Relation) -> (Polynomial, Polynomial) {
    let nvars = p.nvars();
    let mut quo = Polynomial::zero(nvars);
    let lead = reduction_monomial(nvars, rel);
    let mut work = p.clone();
    loop {
        // pick the term with the largest exponent of the reduction variable
        let next = work
            .terms()
            .filter(|(m, _)| m.exponent(rel.var) >= rel.exponent)
            .max_by_key(|(m, _)| m.exponent(rel.var))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = next else { break };
        let q = m.div(&lead).expect("exponent checked");
        // m = lead·q  ≡  -tail·q
        work.add_term(-c.clone(), m);
        work = &work - &rel.tail.mul_monomial(&c, &q);
        quo.add_term(c, q);
    }
    (quo, work)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// A = Q[x,y,z]/(x^m + y^n + z^2) with weights (2n, 2m, mn).
    fn brieskorn(m: u32, n: u32) -> HypersurfaceRing {
        let f = Polynomial::from_terms(
            3,
            [
                (int(1), vec![m, 0, 0]),
                (int(1), vec![0, n, 0]),
                (int(1), vec![0, 0, 2]),
            ],
        );
        let w = WeightSystem::new(&[2 * n as i64, 2 * m as i64, (m * n) as i64]).unwrap();
        HypersurfaceRing::hypersurface(names(&["x", "y", "z"]), w, f, 2, 2).unwrap()
    }

    #[test]
    fn nf_examples() {
        let a = brieskorn(2, 2);
        let f = a.relation().unwrap().polynomial().clone();
        assert!(a.nf(&f).unwrap().is_zero());
        let x = a.var(0);
        assert_eq!(a.nf(&x).unwrap(), x);
        // z^3 = -x^2 z - y^2 z
        let z3 = a.var(2).pow(3);
        let expected = -(&(&a.var(0).pow(2) * &a.var(2)) + &(&a.var(1).pow(2) * &a.var(2)));
        assert_eq!(a.nf(&z3).unwrap(), expected);
    }

    #[test]
    fn nf_rejects_wrong_arity() {
        let a = brieskorn(2, 2);
        assert!(matches!(
            a.nf(&Polynomial::var(2, 0)),
            Err(Error::VariableCount { .. })
        ));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = brieskorn(3, 2);
        let f = a.relation().unwrap().polynomial().clone();
        let p = &(&a.var(2).pow(5) * &a.var(0)) + &a.var(1).pow(4);
        let (q, r) = a.div_rem(&p).unwrap();
        assert_eq!(&(&q * &f) + &r, p);
        assert!(r.degree_in(2) < 2);
    }

    #[test]
    fn weighted_degree_examples() {
        let (m, n) = (3i64, 4i64);
        let a = brieskorn(m as u32, n as u32);
        let f = a.relation().unwrap().polynomial();
        assert_eq!(a.degree(f), WeightedDegree::Homogeneous(2 * m * n));
        let w = WeightSystem::new(&[1, 2]).unwrap();
        let p = &Polynomial::var(2, 0) + &Polynomial::var(2, 1);
        assert_eq!(weighted_degree(&p, &w), WeightedDegree::Inhomogeneous);
        assert_eq!(
            weighted_degree(&Polynomial::zero(2), &w),
            WeightedDegree::Zero
        );
    }

    #[test]
    fn ring_slice_of_degree_four() {
        let a = brieskorn(2, 2);
        let basis = a.monomials_of_degree(4);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn relation_validation() {
        let w = WeightSystem::standard(2);
        // x*y is not a pure power: caller passes var/exponent so test the "absent" case
        let f = &Polynomial::var(2, 0).pow(2) + &Polynomial::var(2, 1).pow(2);
        assert!(HypersurfaceRing::hypersurface(names(&["x", "y"]), w.clone(), f.clone(), 0, 3).is_err());
        assert!(HypersurfaceRing::hypersurface(names(&["x", "y"]), w.clone(), f, 0, 2).is_ok());
        let g = &Polynomial::var(2, 0).pow(2) + &Polynomial::var(2, 1);
        assert!(matches!(
            HypersurfaceRing::hypersurface(names(&["x", "y"]), w, g, 0, 2),
            Err(Error::InvalidRelation(_))
        ));
    }

    #[test]
    fn negative_weight_rejected() {
        assert_eq!(WeightSystem::new(&[1, 0]), Err(Error::InvalidWeight(0)));
    }
}
