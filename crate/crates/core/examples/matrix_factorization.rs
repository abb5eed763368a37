//! The 4x4 matrix factorizations of `x^m + y^n + z^2` and their cokernels.

use lrcoh::brieskorn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, n, k, l) = (3, 4, 1, 2);
    let mf = brieskorn::phi_psi(m, n, k, l)?;
    let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    println!("phi = {}", mf.phi.display(&names));
    println!("psi = {}", mf.psi.display(&names));
    println!("identity holds: {}", mf.verify().is_ok());

    let w = brieskorn::module(m, n, k, l)?;
    println!("generator degrees of W: {:?}", w.generator_degrees());
    for d in w.min_degree().unwrap_or(0)..=16 {
        print!("{d}:{} ", w.slice(d).dim());
    }
    println!();

    let mut broken = mf.clone();
    let e = broken.phi.get(0, 0) + &broken.phi.get(1, 1).clone();
    broken.phi.set(0, 0, e);
    match broken.verify() {
        Ok(()) => println!("perturbed pair still factors"),
        Err(f) => println!(
            "perturbed pair fails: {} ({}, {}) = {}",
            f.product,
            f.row + 1,
            f.col + 1,
            f.found.display(&names)
        ),
    }

    let mut total = 0;
    for m in 1..=5 {
        for n in 1..=5 {
            for k in 1..=m {
                for l in 1..=n {
                    assert!(brieskorn::phi_psi(m, n, k, l)?.verify().is_ok());
                    total += 1;
                }
            }
        }
    }
    println!("{total} grid points verified");
    Ok(())
}
