//! Weighted gradings and normal forms in `Q[x,y,z]/(x^3 + y^2 + z^2)`.

use lrcoh::algebra::parse::{parse_polynomial, Params};
use lrcoh::brieskorn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = brieskorn::ring(3, 2)?;
    let vars = a.variables().to_vec();
    println!("weights {:?}", a.weights().weights());

    let p = parse_polynomial("z^4 + x^3*z^2 + 2*y^2*z^2", &vars, &Params::new())?;
    let r = a.nf(&p)?;
    println!("nf({}) = {}", p.display(&vars), r.display(&vars));
    println!("degree {:?}", a.degree(&r).value());
    assert_eq!(a.nf(&r)?, r);

    for d in 0..=12 {
        let basis: Vec<String> = a
            .monomials_of_degree(d)
            .iter()
            .map(|m| lrcoh::algebra::Polynomial::term(lrcoh::algebra::rational::int(1), m.clone()).display(&vars))
            .collect();
        println!("A_{d:<2} dim {}  {}", a.slice_dim(d), basis.join(" "));
    }
    Ok(())
}
