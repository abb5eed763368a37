//! `d_i + A_i` on `coker φ`: witnesses `B_i` with `d_i(φ) + A_i φ = φ B_i`.

use lrcoh::algebra::rational::int;
use lrcoh::brieskorn::{self, DescentOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, n, k, l) = (4, 3, 2, 1);
    let family = brieskorn::connection_family(m, n, k, l)?;
    let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    println!("trace A_0 = {} (2mn = {})", family.trace_a0(), 2 * m * n);

    for g in brieskorn::family_descent(&family)? {
        match &g.outcome {
            DescentOutcome::Descends(b) => println!("{}: B = {}", g.generator, b.display(&names)),
            other => println!("{}: {:?}", g.generator, other),
        }
    }

    for label in ["a2", "b3", "c1", "d4"] {
        let bad = family.mutate(label, &int(1));
        let caught = brieskorn::family_descent(&bad)?.iter().any(|g| !g.outcome.ok());
        println!("{label} + 1 detected: {caught}");
    }

    let conn = brieskorn::euler_connection(m, n, k, l)?;
    println!("Euler part flat: {}", conn.is_flat(16)?);

    let boundary = brieskorn::connection_family(m, n, m, l)?;
    for g in brieskorn::family_descent(&boundary)? {
        if let DescentOutcome::NonPolynomial(label) = g.outcome {
            println!("k = m: entry {label} of A for {} has a negative exponent", g.generator);
        }
    }
    Ok(())
}
