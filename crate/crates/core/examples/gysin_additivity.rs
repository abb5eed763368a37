//! Gysin classes of direct sums over a rank-one algebra.

use lrcoh::algebra::module::PresentedModule;
use lrcoh::algebra::polymatrix::PolyMatrix;
use lrcoh::algebra::rational::int;
use lrcoh::algebra::ring::{HypersurfaceRing, WeightSystem};
use lrcoh::gauss_manin::gysin_class;
use lrcoh::lie::{Connection, Derivation, LieRinehartAlgebra};
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Arc::new(HypersurfaceRing::polynomial_ring(
        vec!["x".into(), "y".into()],
        WeightSystem::new(&[1, 2])?,
    )?);
    // x d_y has degree 1 - 2 = -1
    let k = Derivation::new(b.clone(), vec![b.zero(), b.var(0)])?;
    let alg = LieRinehartAlgebra::new(b.clone(), vec!["k".into()], vec![k])?;

    let w1 = PresentedModule::free(b.clone(), vec![0], 0);
    let c1 = Connection::new(alg.clone(), w1, vec![PolyMatrix::scalar(1, &b.constant(int(0)))])?;
    let w2 = PresentedModule::free(b.clone(), vec![0, 1], 0);
    let mut a = PolyMatrix::zeros(2, 2, 2);
    a.set(0, 1, b.constant(int(3)));
    let c2 = Connection::new(alg, w2, vec![a])?;
    let sum = c1.direct_sum(&c2)?;

    let (lo, hi) = (-2, 10);
    let g1 = gysin_class(&c1, lo, hi, 12)?;
    let g2 = gysin_class(&c2, lo, hi, 12)?;
    let gs = gysin_class(&sum, lo, hi, 12)?;
    for d in lo..=hi {
        println!("{d:>3}: {:>3} + {:>3} = {:>3}", g1.value(d), g2.value(d), gs.value(d));
        assert_eq!(g1.value(d) + g2.value(d), gs.value(d));
    }
    println!("Euler identity: {}", gs.euler_identity_holds());
    Ok(())
}
