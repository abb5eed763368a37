use super::poly::Polynomial;
use super::polymatrix::PolyMatrix;
use crate::error::{Error, Result};

/// Square matrices `phi`, `psi` over the ambient polynomial ring with
/// `phi·psi = psi·phi = f·I`, checked by [`MatrixFactorization::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub f: Polynomial,
    pub phi: PolyMatrix,
    pub psi: PolyMatrix,
}

/// First entry where a product differs from `f·I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationFailure {
    /// `"phi*psi"` or `"psi*phi"`.
    pub product: &'static str,
    pub row: usize,
    pub col: usize,
    pub found: Polynomial,
    pub expected: Polynomial,
}

impl MatrixFactorization {
    pub fn new(f: Polynomial, phi: PolyMatrix, psi: PolyMatrix) -> Result<Self> {
        if phi.rows() != phi.cols() || psi.rows() != psi.cols() || phi.rows() != psi.rows() {
            return Err(Error::Dimension(
                "matrix factorization needs square matrices of equal size".into(),
            ));
        }
        Ok(MatrixFactorization { f, phi, psi })
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    /// Exact entrywise check of both products, no reduction.
    pub fn verify(&self) -> std::result::Result<(), FactorizationFailure> {
        let n = self.size();
        let target = PolyMatrix::scalar(n, &self.f);
        for (name, prod) in [
            ("phi*psi", self.phi.mul(&self.psi).expect("square")),
            ("psi*phi", self.psi.mul(&self.phi).expect("square")),
        ] {
            for i in 0..n {
                for j in 0..n {
                    if prod.get(i, j) != target.get(i, j) {
                        return Err(FactorizationFailure {
                            product: name,
                            row: i,
                            col: j,
                            found: prod.get(i, j).clone(),
                            expected: target.get(i, j).clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
