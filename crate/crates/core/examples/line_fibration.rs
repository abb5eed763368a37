//! `F[x,y]^2` over the line `T = x - y`: invariants, cohomology, and the
//! induced action of `d/dT`.

use lrcoh::algebra::module::{ModuleElement, PresentedModule};
use lrcoh::algebra::rational::{frac, int};
use lrcoh::algebra::ring::{HypersurfaceRing, WeightSystem};
use lrcoh::complex::StandardComplex;
use lrcoh::gauss_manin::{
    gysin_class, horizontal_sections, ExactLRSequence, GaussManin, HGenerator, InvariantRingModel,
};
use lrcoh::lie::{Connection, Derivation, LieRinehartAlgebra};
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Arc::new(HypersurfaceRing::polynomial_ring(
        vec!["x".into(), "y".into()],
        WeightSystem::standard(2),
    )?);
    let field = |a: i64, c: i64| Derivation::new(b.clone(), vec![b.constant(int(a)), b.constant(int(c))]);
    let l = LieRinehartAlgebra::new(b.clone(), vec!["dx".into(), "dy".into()], vec![field(1, 0)?, field(0, 1)?])?;
    let k = LieRinehartAlgebra::new(b.clone(), vec!["k".into()], vec![field(1, 1)?])?;
    let t = &b.var(0) - &b.var(1);
    let e = PresentedModule::free(b.clone(), vec![0, 0], 0);
    let conn = Connection::trivial(l.clone(), e)?;

    let seq = ExactLRSequence::new(
        k.clone(),
        l,
        InvariantRingModel::new(&k, vec![t.clone()])?,
        vec![HGenerator {
            name: "dT".into(),
            action: vec![b.one()],
            lift: field(1, -1)?.scale(&frac(1, 2)),
        }],
        8,
    )?;
    let gm = GaussManin::new(&seq, &conn)?;
    let kconn = gm.kernel_connection();

    let h = StandardComplex::new(kconn, 8)?.cohomology(20)?;
    println!("H^0 {:?}", h.row(0));
    println!("H^1 {:?}", h.row(1));

    let hs = horizontal_sections(kconn, 3, 8)?;
    let names = b.variables().to_vec();
    for (d, basis) in &hs.slices {
        let s: Vec<String> = basis.iter().map(|w| w.display(&names)).collect();
        println!("W^k_{d}: {}", s.join(", "));
    }

    let w = ModuleElement::basis(2, 0, t.pow(3));
    println!("dT acts on {} -> {}", w.display(&names), gm.induced_action(0, &w)?.display(&names));

    let g = gysin_class(kconn, 0, 10, 8)?;
    println!("Gysin class {:?}, Euler identity {}", g.values, g.euler_identity_holds());
    Ok(())
}
