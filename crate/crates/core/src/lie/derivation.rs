use crate::algebra::poly::Polynomial;
use crate::algebra::rational::Rational;
use crate::algebra::ring::{HypersurfaceRing, WeightedDegree};
use crate::error::{Error, Result};
use std::sync::Arc;

pub(crate) fn same_ring(a: &Arc<HypersurfaceRing>, b: &Arc<HypersurfaceRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `Σ c_i ∂_{x_i}` validated against the relation of its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    ring: Arc<HypersurfaceRing>,
    coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(ring: Arc<HypersurfaceRing>, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::VariableCount {
                expected: ring.nvars(),
                found: coeffs.len(),
            });
        }
        let coeffs = coeffs
            .iter()
            .map(|c| ring.nf(c))
            .collect::<Result<Vec<_>>>()?;
        let res = relation_residual(&ring, &coeffs)?;
        if !res.is_zero() {
            return Err(Error::NotADerivation(format!(
                "image of the relation reduces to {}",
                res.display(ring.variables())
            )));
        }
        Ok(Derivation { ring, coeffs })
    }

    /// `∂/∂x_v`. Only valid on a polynomial ring or when it kills the relation.
    pub fn partial(ring: Arc<HypersurfaceRing>, v: usize) -> Result<Self> {
        if v >= ring.nvars() {
            return Err(Error::UnknownVariable(v));
        }
        let coeffs = (0..ring.nvars())
            .map(|i| if i == v { ring.one() } else { ring.zero() })
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn zero(ring: Arc<HypersurfaceRing>) -> Self {
        let coeffs = vec![ring.zero(); ring.nvars()];
        Derivation { ring, coeffs }
    }

    pub fn ring(&self) -> &Arc<HypersurfaceRing> {
        &self.ring
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree as an operator: `D` when every `c_i` has degree `D + w_i`.
    pub fn degree(&self) -> WeightedDegree {
        let w = self.ring.weights();
        let mut out = WeightedDegree::Zero;
        for (i, c) in self.coeffs.iter().enumerate() {
            match self.ring.degree(c) {
                WeightedDegree::Zero => {}
                WeightedDegree::Inhomogeneous => return WeightedDegree::Inhomogeneous,
                WeightedDegree::Homogeneous(e) => {
                    let d = e - w.weight(i);
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

    /// Action in the ambient polynomial ring, without reduction.
    pub fn apply_raw(&self, a: &Polynomial) -> Result<Polynomial> {
        apply_coeffs(&self.coeffs, a)
    }

    pub fn apply(&self, a: &Polynomial) -> Result<Polynomial> {
        a.check_nvars(self.ring.nvars()).map_err(|_| Error::RingMismatch)?;
        self.ring.nf(&self.apply_raw(a)?)
    }

    pub fn bracket(&self, other: &Derivation) -> Result<Derivation> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let coeffs = (0..self.ring.nvars())
            .map(|i| Ok(&self.apply(&other.coeffs[i])? - &other.apply(&self.coeffs[i])?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Derivation {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Derivation) -> Result<Derivation> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `a · self`.
    pub fn mul_poly(&self, a: &Polynomial) -> Derivation {
        Derivation {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|p| self.ring.mul(a, p)).collect(),
        }
    }

    /// Renders as `c_1*d_x + ...` using `d_<var>` for the partials.
    pub fn display(&self) -> String {
        let names = self.ring.variables();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let s = c.display(names);
                if c.len() > 1 {
                    format!("({s})*d_{}", names[i])
                } else if s == "1" {
                    format!("d_{}", names[i])
                } else if s == "-1" {
                    format!("-d_{}", names[i])
                } else {
                    format!("{s}*d_{}", names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

pub(crate) fn apply_coeffs(coeffs: &[Polynomial], a: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero(a.nvars());
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let d = a.diff(i)?;
        if !d.is_zero() {
            out = &out + &(c * &d);
        }
    }
    Ok(out)
}

/// Normal form of `δ(f)` for the relation `f`; zero when there is no relation.
pub fn relation_residual(ring: &HypersurfaceRing, coeffs: &[Polynomial]) -> Result<Polynomial> {
    match ring.relation() {
        None => Ok(ring.zero()),
        Some(rel) => ring.nf(&apply_coeffs(coeffs, rel.polynomial())?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{parse_polynomial, Params};
    use crate::algebra::rational::int;
    use crate::algebra::ring::WeightSystem;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn brieskorn(m: i64, n: i64) -> Arc<HypersurfaceRing> {
        let vars = names(&["x", "y", "z"]);
        let f = parse_polynomial(&format!("x^{m} + y^{n} + z^2"), &vars, &Params::new()).unwrap();
        Arc::new(
            HypersurfaceRing::hypersurface(
                vars,
                WeightSystem::new(&[2 * n, 2 * m, m * n]).unwrap(),
                f,
                2,
                2,
            )
            .unwrap(),
        )
    }

    fn der(ring: &Arc<HypersurfaceRing>, cs: &[&str]) -> Result<Derivation> {
        let cs = cs
            .iter()
            .map(|s| parse_polynomial(s, ring.variables(), &Params::new()).unwrap())
            .collect();
        Derivation::new(ring.clone(), cs)
    }

    #[test]
    fn euler_derivation_scales_by_degree() {
        let (m, n) = (3, 2);
        let a = brieskorn(m, n);
        let d0 = der(&a, &["4x", "6y", "6z"]).unwrap();
        assert_eq!(d0.degree(), WeightedDegree::Homogeneous(0));
        assert_eq!(d0.apply(&a.var(0)).unwrap(), a.var(0).scale(&int(2 * n)));
        let f = a.relation().unwrap().polynomial().clone();
        assert!(d0.apply(&f).unwrap().is_zero());
        assert_eq!(d0.apply_raw(&f).unwrap(), f.scale(&int(2 * m * n)));
    }

    #[test]
    fn validation_rejects_non_derivations() {
        let a = brieskorn(2, 2);
        assert!(matches!(
            Derivation::partial(a.clone(), 0),
            Err(Error::NotADerivation(_))
        ));
        assert!(der(&a, &["-2z", "0", "2x"]).is_ok());
    }

    #[test]
    fn bracket_of_partials_vanishes() {
        let b = Arc::new(
            HypersurfaceRing::polynomial_ring(names(&["x", "y"]), WeightSystem::standard(2))
                .unwrap(),
        );
        let dx = Derivation::partial(b.clone(), 0).unwrap();
        let dy = Derivation::partial(b.clone(), 1).unwrap();
        assert!(dx.bracket(&dy).unwrap().is_zero());
        assert!(dx.apply(&b.one()).unwrap().is_zero());
        assert_eq!(dx.degree(), WeightedDegree::Homogeneous(-1));
        assert_eq!(dx.add(&dy).unwrap().display(), "d_x + d_y");
    }
}
