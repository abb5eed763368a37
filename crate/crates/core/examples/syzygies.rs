//! Generators of `Der(A)`, their relations, and the bracket table.

use lrcoh::brieskorn;
use lrcoh::lie::derivation::relation_residual;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, n) = (3, 4);
    let a = brieskorn::ring(m, n)?;
    let names = a.variables().to_vec();
    let der = brieskorn::der_algebra(m, n)?;
    for (i, g) in der.generators().iter().enumerate() {
        println!("{} = {}  (degree {})", der.name(i), g.display(), der.degree(i));
    }

    let printed = brieskorn::printed_delta1(m, n);
    let r = relation_residual(&a, &printed)?;
    println!("m x^(m-1) d_y - n y^(n-1) d_z sends f to {}", r.display(&names));

    let rep = brieskorn::verify_syzygies(der.generators(), der.syzygies().expect("attached"))?;
    println!("relations hold along: {}", rep.orientation.as_str());

    for i in 0..4 {
        for j in i + 1..4 {
            let c = der.structure_constants(i, j, 64)?;
            let c: Vec<String> = c.iter().map(|p| p.display(&names)).collect();
            println!("[{}, {}] = ({})", der.name(i), der.name(j), c.join(", "));
        }
    }
    Ok(())
}
