//! Curvature of a connection on the plane and how it breaks `d∘d = 0`.

use lrcoh::algebra::module::PresentedModule;
use lrcoh::algebra::polymatrix::PolyMatrix;
use lrcoh::algebra::ring::{HypersurfaceRing, WeightSystem};
use lrcoh::complex::StandardComplex;
use lrcoh::lie::{Connection, Derivation, LieRinehartAlgebra};
use std::sync::Arc;

fn plane_connection(entry: usize) -> Result<Connection, lrcoh::Error> {
    let b = Arc::new(HypersurfaceRing::polynomial_ring(
        vec!["x".into(), "y".into()],
        WeightSystem::standard(2),
    )?);
    let dx = Derivation::partial(b.clone(), 0)?;
    let dy = Derivation::partial(b.clone(), 1)?;
    let l = LieRinehartAlgebra::new(b.clone(), vec!["dx".into(), "dy".into()], vec![dx, dy])?;
    let w = PresentedModule::free(b.clone(), vec![0, 2], 0);
    let mut a_y = PolyMatrix::zeros(2, 2, 2);
    a_y.set(0, 1, b.var(entry));
    Connection::new(l, w, vec![PolyMatrix::zeros(2, 2, 2), a_y])
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names: Vec<String> = vec!["x".into(), "y".into()];
    for (label, entry) in [("A_y = y E12", 1), ("A_y = x E12", 0)] {
        let conn = plane_connection(entry)?;
        let r = conn.curvature(0, 1, 8)?;
        println!("{label}: R(dx, dy) = {}", r.display(&names));
        let check = StandardComplex::new(&conn, 8)?.verify(6)?;
        match check.first_failure {
            None => println!("  d∘d = 0 through degree 6"),
            Some((p, d)) => println!("  d^{}∘d^{p} ≠ 0 in degree {d}", p + 1),
        }
    }
    let flat = plane_connection(1)?;
    let h = StandardComplex::new(&flat, 8)?.cohomology(6)?;
    for p in 0..=2 {
        println!("H^{p} {:?}", h.row(p));
    }
    Ok(())
}
