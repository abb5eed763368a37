//! The cusp `t = x^m - y^n`: relative tangents, graded `H^0` and `H^1`,
//! and the Euler action on `H^1`.

use lrcoh::algebra::rational::frac;
use lrcoh::brieskorn::{cusp_oracle, cusp_setup};
use lrcoh::gauss_manin::{ExactLRSequence, GaussManin, HGenerator, InvariantRingModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n, ..] => (m, n),
        _ => (2, 3),
    };
    let s = cusp_setup(m, n)?;
    let names = s.ring.variables().to_vec();
    println!("f = {}", s.f.display(&names));
    println!("tangent {}", s.tangent.display());
    println!(
        "m x^(m-1) d_x + n y^(n-1) d_y sends f to {}",
        s.displayed_tangent_value.display(&names)
    );

    let seq = ExactLRSequence::new(
        s.kernel.clone(),
        s.algebra.clone(),
        InvariantRingModel::new(&s.kernel, vec![s.f.clone()])?,
        vec![HGenerator {
            name: "E".into(),
            action: vec![s.h_action.clone()],
            lift: s.euler.clone(),
        }],
        32,
    )?;
    let gm = GaussManin::new(&seq, &s.connection)?;
    let max = 6 * m * n;
    let complex = gm.complex()?;
    let h = complex.cohomology_range(complex.min_degree(), max)?;
    let oracle = cusp_oracle(m, n, max);
    println!(" d  H0 H1  oracle");
    for ((d, a, b), (d2, a2, b2)) in h
        .row(0)
        .iter()
        .zip(h.row(1).iter())
        .map(|(x, y)| (x.0, x.1, y.1))
        .zip(oracle)
    {
        assert_eq!(d, d2);
        if a + b + a2 + b2 > 0 {
            println!("{d:>3} {a:>3} {b:>2}  {a2} {b2}");
        }
    }
    for sl in gm.gm_matrices(0, 1, 3 * m * n)? {
        if sl.matrix.rows() > 0 {
            println!("E on H^1_{}: {}", sl.degree, sl.matrix.get(0, 0));
        }
    }
    let gens: usize = gm.generator_counts(0, 1, max)?.iter().map(|x| x.1).sum();
    println!(
        "H^1 generators over Q[t] up to degree {max}: {gens}; (n-2)(m-1)/2 = {}",
        frac((n - 2) * (m - 1), 2)
    );
    Ok(())
}
