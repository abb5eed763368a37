//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any criterion fails.

mod common;

use common::{brieskorn_f, brieskorn_pair, cusp_h, mat_mul, shipped_problems, task_command, Poly};
use lrcoh::algebra::module::{ModuleElement, PresentedModule};
use lrcoh::algebra::polymatrix::PolyMatrix;
use lrcoh::algebra::rational::{frac, int, Rational};
use lrcoh::algebra::ring::{HypersurfaceRing, WeightSystem};
use lrcoh::brieskorn::{
    connection_family, cusp_setup, der_coefficients, family_descent, phi_psi, printed_delta1_residual,
    syzygy_matrix, verify_syzygies, der_generators, DescentOutcome, Orientation,
};
use lrcoh::cli::instance::Instance;
use lrcoh::cli::report::Node;
use lrcoh::cli::{grid_points, parse_problem, run, Command, ProblemFile, RunOptions};
use lrcoh::complex::StandardComplex;
use lrcoh::gauss_manin::{gysin_class, horizontal_sections, ExactLRSequence, GaussManin, HGenerator, InvariantRingModel};
use lrcoh::lie::{Connection, Derivation, LieRinehartAlgebra};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command as Process;
use std::sync::Arc;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn grid() -> Vec<(i64, i64, i64, i64)> {
    let mut v = Vec::new();
    for m in 1..=5 {
        for n in 1..=5 {
            for k in 1..=m {
                for l in 1..=n {
                    v.push((m, n, k, l));
                }
            }
        }
    }
    v
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let pts = grid();
    let bad: Vec<_> = pts
        .par_iter()
        .filter(|&&(m, n, k, l)| {
            let (phi, psi) = brieskorn_pair(m, n, k, l);
            let f = brieskorn_f(m, n);
            let want: Vec<Vec<Poly>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { f.clone() } else { Poly::default() }).collect())
                .collect();
            let lib = phi_psi(m, n, k, l).expect("in range");
            let same_input = (0..4).all(|i| {
                (0..4).all(|j| {
                    Poly::from_lib(lib.phi.get(i, j)) == phi[i][j] && Poly::from_lib(lib.psi.get(i, j)) == psi[i][j]
                })
            });
            let oracle = mat_mul(&phi, &psi) == want && mat_mul(&psi, &phi) == want;
            !(same_input && oracle && lib.verify().is_ok())
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < 10.0,
        format!("{} points, {} failures, {secs:.2}s", pts.len(), bad.len()),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let pts = grid();
    let results: Vec<_> = pts
        .par_iter()
        .map(|&(m, n, k, l)| {
            let fam = connection_family(m, n, k, l).expect("in range");
            let trace_ok = fam.trace_a0() == int(2 * m * n);
            let d = family_descent(&fam).expect("descent runs");
            let ok = d.iter().all(|g| g.outcome.ok() && g.degree_defects.is_empty());
            let nonpoly: Vec<&str> = d
                .iter()
                .filter_map(|g| match g.outcome {
                    DescentOutcome::NonPolynomial(label) => Some(label),
                    _ => None,
                })
                .collect();
            // mutants are only meaningful where the unmutated family descends
            let undetected: Vec<&str> = if ok {
                fam.labels()
                    .into_iter()
                    .filter(|lab| {
                        let mutant = fam.mutate(lab, &int(1));
                        family_descent(&mutant).expect("descent runs").iter().all(|g| g.outcome.ok())
                    })
                    .collect()
            } else {
                Vec::new()
            };
            ((m, n, k, l), trace_ok, ok, nonpoly, undetected)
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let failed: Vec<_> = results.iter().filter(|r| !r.2).collect();
    let nonpoly = failed.iter().filter(|r| !r.3.is_empty()).count();
    let interior_failed = failed
        .iter()
        .filter(|r| {
            let (m, n, k, l) = r.0;
            k < m && l < n
        })
        .count();
    let undetected: usize = results.iter().map(|r| r.4.len()).sum();
    let mutated = results.iter().filter(|r| r.2).count() * 16;
    let traces = results.iter().all(|r| r.1);
    let pass = failed.is_empty() && undetected == 0 && traces && secs < 60.0;
    let mut detail = format!(
        "{} of {} points descend for all four generators; {} fail ({} with a negative exponent in a closed form, {} interior); {} of {} single +1 mutants detected; trace(A_0) = 2mn: {}; {secs:.1}s",
        results.len() - failed.len(),
        results.len(),
        failed.len(),
        nonpoly,
        interior_failed,
        mutated - undetected,
        mutated,
        if traces { "yes" } else { "no" },
    );
    if let Some(r) = failed.first() {
        let (m, n, k, l) = r.0;
        detail.push_str(&format!("; first failure m={m} n={n} k={k} l={l} labels {:?}", r.3));
    }
    outcome(pass, detail)
}

/// Test-side reading of the four generators, with the second one in the form
/// that is tangent to `f`.
fn oracle_ders(m: i64, n: i64) -> [[Poly; 3]; 4] {
    let p = |c, a, b, e| Poly::mono(c, &[a, b, e]);
    let o = Poly::default;
    [
        [p(2 * n, 1, 0, 0), p(2 * m, 0, 1, 0), p(m * n, 0, 0, 1)],
        [p(-n, 0, n - 1, 0), p(m, m - 1, 0, 0), o()],
        [p(-2, 0, 0, 1), o(), p(m, m - 1, 0, 0)],
        [o(), p(-2, 0, 0, 1), p(n, 0, n - 1, 0)],
    ]
}

fn apply_der(d: &[Poly; 3], f: &Poly) -> Poly {
    (0..3).fold(Poly::default(), |acc, v| acc.add(&d[v].mul(&f.diff(v))))
}

fn criterion_3() -> Outcome {
    let mut orientations = Vec::new();
    let mut bad = Vec::new();
    let mut printed_nonzero = 0;
    for m in 1..=5 {
        for n in 1..=5 {
            let ders = oracle_ders(m, n);
            let f = brieskorn_f(m, n);
            let lib = der_coefficients(m, n);
            let same = (0..4).all(|i| (0..3).all(|v| Poly::from_lib(&lib[i][v]) == ders[i][v]));
            let scalars = [int(2 * m * n), int(0), int(0), int(0)];
            let in_ideal = (0..4).all(|i| apply_der(&ders[i], &f) == f.scale(&scalars[i]));
            let rho = syzygy_matrix(m, n).expect("rho");
            // independent orientation: which of rho^T d = 0 / rho d = 0 holds mod f
            let combo = |col: bool, idx: usize| -> bool {
                (0..3).all(|v| {
                    let s = (0..4).fold(Poly::default(), |acc, t| {
                        let r = if col { rho.get(t, idx) } else { rho.get(idx, t) };
                        acc.add(&Poly::from_lib(r).mul(&ders[t][v]))
                    });
                    s.reduce_z2(m, n).is_zero()
                })
            };
            let cols = (0..4).all(|j| combo(true, j));
            let rows = (0..4).all(|i| combo(false, i));
            let report = verify_syzygies(&der_generators(m, n).expect("gens"), &rho).expect("syzygies");
            let agrees = match report.orientation {
                Orientation::Columns => cols && !rows,
                Orientation::Rows => rows && !cols,
                Orientation::Both => rows && cols,
                Orientation::Neither => !rows && !cols,
            };
            if !printed_delta1_residual(m, n).expect("residual").is_zero() {
                printed_nonzero += 1;
            }
            if !(same && in_ideal && agrees) {
                bad.push((m, n));
            }
            if !orientations.contains(&report.orientation) {
                orientations.push(report.orientation);
            }
        }
    }
    let single = orientations.len() == 1 && matches!(orientations[0], Orientation::Rows | Orientation::Columns);
    outcome(
        bad.is_empty() && single,
        format!(
            "25 (m,n): delta_i(f) in (f) and oracle agreement failures {:?}; orientations seen {:?}; printed second generator leaves a nonzero residual at {printed_nonzero} points",
            bad,
            orientations.iter().map(|o| o.as_str()).collect::<Vec<_>>()
        ),
    )
}

fn plane(weights: &[i64]) -> Arc<HypersurfaceRing> {
    Arc::new(
        HypersurfaceRing::polynomial_ring(vec!["x".into(), "y".into()], WeightSystem::new(weights).expect("weights"))
            .expect("ring"),
    )
}

fn criterion_4() -> Outcome {
    let b = plane(&[1, 1]);
    let field = |a: i64, c: i64| Derivation::new(b.clone(), vec![b.constant(int(a)), b.constant(int(c))]).expect("field");
    let l = LieRinehartAlgebra::new(b.clone(), vec!["dx".into(), "dy".into()], vec![field(1, 0), field(0, 1)]).expect("L");
    let k = LieRinehartAlgebra::new(b.clone(), vec!["k".into()], vec![field(1, 1)]).expect("K");
    let t = &b.var(0) - &b.var(1);
    let conn = Connection::trivial(l.clone(), PresentedModule::free(b.clone(), vec![0, 0], 0)).expect("conn");
    let seq = ExactLRSequence::new(
        k.clone(),
        l,
        InvariantRingModel::new(&k, vec![t.clone()]).expect("invariants"),
        vec![HGenerator {
            name: "dT".into(),
            action: vec![b.one()],
            lift: field(1, -1).scale(&frac(1, 2)),
        }],
        8,
    )
    .expect("sequence");
    let gm = GaussManin::new(&seq, &conn).expect("gm");
    let kconn = gm.kernel_connection();
    let h = StandardComplex::new(kconn, 8).expect("complex").cohomology_range(0, 20).expect("cohomology");
    let h0_ok = (0..=20).all(|d| h.dim(0, d) == 2);
    let h1_ok = (0..=20).all(|d| h.dim(1, d) == 0);

    // Leibniz: dT(a w) = dT(a) w + a dT(w), a in F[T], w horizontal
    let shifted = seq.with_shifted_lift(0, &field(1, 1).scale(&int(3))).expect("shift");
    let gm2 = GaussManin::new(&shifted, &conn).expect("gm");
    let hs = horizontal_sections(kconn, 4, 8).expect("sections");
    let ring = &*b;
    let mut leibniz = true;
    let mut independent = true;
    let mut checked = 0;
    for (_, basis) in &hs.slices {
        for w in basis {
            for j in 0..=3u32 {
                let a = t.pow(j);
                let da = if j == 0 { b.zero() } else { t.pow(j - 1).scale(&int(j as i64)) };
                let aw = w.mul_poly(ring, &a);
                let lhs = gm.induced_action(0, &aw).expect("action");
                let rhs = w.mul_poly(ring, &da).add(&gm.induced_action(0, w).expect("action").mul_poly(ring, &a));
                leibniz &= lhs.sub(&rhs).nf(ring).expect("nf").is_zero();
                let other = gm2.induced_action(0, &aw).expect("action");
                independent &= lhs.sub(&other).nf(ring).expect("nf").is_zero();
                checked += 1;
            }
        }
    }
    let gm_h0 = gm.gm_matrices(0, 0, 12).expect("gm matrices").iter().all(|s| s.ok());
    let e0 = ModuleElement::basis(2, 0, t.pow(2));
    let sample = gm.induced_action(0, &e0).expect("action") == ModuleElement::basis(2, 0, t.scale(&int(2)));
    outcome(
        h0_ok && h1_ok && leibniz && independent && gm_h0 && sample && checked > 0,
        format!(
            "H0 = 2 on 0..20: {h0_ok}; H1 = 0 on 0..20: {h1_ok}; Leibniz on {checked} products: {leibniz}; lift independence: {independent}; cohomology action well defined: {gm_h0}"
        ),
    )
}

fn cusp_gm(m: i64, n: i64) -> (lrcoh::brieskorn::CuspSetup, ExactLRSequence) {
    let s = cusp_setup(m, n).expect("setup");
    let seq = ExactLRSequence::new(
        s.kernel.clone(),
        s.algebra.clone(),
        InvariantRingModel::new(&s.kernel, vec![s.f.clone()]).expect("invariants"),
        vec![HGenerator {
            name: "E".into(),
            action: vec![s.h_action.clone()],
            lift: s.euler.clone(),
        }],
        64,
    )
    .expect("sequence");
    (s, seq)
}

const CUSPS: [(i64, i64); 3] = [(2, 3), (2, 5), (3, 4)];

fn criterion_5() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (m, n) in CUSPS {
        let start = Instant::now();
        let (s, seq) = cusp_gm(m, n);
        let gm = GaussManin::new(&seq, &s.connection).expect("gm");
        let complex = gm.complex().expect("complex");
        let max = 6 * m * n;
        let lo = complex.min_degree();
        let h = complex.cohomology_range(lo, max).expect("cohomology");
        let h0 = (lo..=max).all(|d| h.dim(0, d) == usize::from(d > 0 && d % (m * n) == 0));
        let mismatches: Vec<i64> = (lo..=max)
            .filter(|&d| {
                let (o0, o1) = cusp_h(m, n, d);
                o0 != h.dim(0, d) || o1 != h.dim(1, d)
            })
            .collect();
        let secs = start.elapsed().as_secs_f64();

        let text = std::fs::read_to_string(common::problems_dir().join(format!("cusp_{m}_{n}.prob"))).expect("problem");
        let file = parse_problem(&text).expect("parse");
        let report = run(Command::Cusp, &file, &RunOptions::default()).expect("run");
        let flag = match report.body.get("formula_comparison") {
            Some(Node::Text(t)) => t.clone(),
            _ => String::new(),
        };
        let gens = match report.body.get("H1_generator_total") {
            Some(Node::Text(t)) => t.clone(),
            _ => String::new(),
        };
        let ok = h0 && mismatches.is_empty() && secs < 60.0 && report.ok() && !flag.is_empty();
        pass &= ok;
        lines.push(format!(
            "({m},{n}) H0 pattern {h0}, H1 oracle mismatches {mismatches:?}, H1 generators over F[t] {gens}, formula {}: {flag}, {secs:.1}s",
            frac((n - 2) * (m - 1), 2)
        ));
    }
    outcome(pass, lines.join("; "))
}

fn without_command(file: &ProblemFile) -> ProblemFile {
    let mut f = file.clone();
    for s in f.sections.iter_mut().filter(|s| s.kind == "task") {
        s.entries.retain(|e| e.key != "command");
    }
    f
}

fn complex_fails(conn: &Connection, max: i64) -> bool {
    let c = StandardComplex::new(conn, 12).expect("complex");
    let check = c.verify(max).expect("verify");
    check.first_failure.is_some()
}

fn criterion_6() -> Outcome {
    let mut flat = Vec::new();
    let mut skipped = Vec::new();
    let mut flat_bad = Vec::new();
    for path in shipped_problems() {
        let text = std::fs::read_to_string(&path).expect("read");
        let file = parse_problem(&text).expect("parse");
        if file.section("connection").is_none() {
            continue;
        }
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        let (_, points) = grid_points(&file, &[]).expect("grid");
        let inst = Instance::build(&file, &points[0], None).expect("instance");
        if !inst.working_connection().expect("connection").algebra().is_free() {
            skipped.push(name);
            continue;
        }
        let r = run(Command::ComplexCheck, &without_command(&file), &RunOptions::default()).expect("run");
        if !r.ok() {
            flat_bad.push(name.clone());
        }
        flat.push(name);
    }

    // cusp connections over <d, E>
    let mut cusp_ok = true;
    for (m, n) in CUSPS {
        let s = cusp_setup(m, n).expect("setup");
        cusp_ok &= !complex_fails(&s.connection, 2 * m * n);
    }

    // A_x = [0, a x + b y], A_y = [0, c x + d y] on degrees (0, 2): R = (c - b) E12
    let b = plane(&[1, 1]);
    let l = LieRinehartAlgebra::new(
        b.clone(),
        vec!["dx".into(), "dy".into()],
        vec![Derivation::partial(b.clone(), 0).unwrap(), Derivation::partial(b.clone(), 1).unwrap()],
    )
    .unwrap();
    let lin = |p: i64, q: i64| &b.var(0).scale(&int(p)) + &b.var(1).scale(&int(q));
    let mut rng = StdRng::seed_from_u64(6);
    let (mut mutants, mut caught, mut controls, mut controls_ok) = (0, 0, 0, 0);
    for i in 0..40 {
        let (a, bb, d) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let c = if i % 2 == 0 { bb } else { bb + [-2, -1, 1, 2][rng.gen_range(0..4)] };
        let mut ax = PolyMatrix::zeros(2, 2, 2);
        ax.set(0, 1, lin(a, bb));
        let mut ay = PolyMatrix::zeros(2, 2, 2);
        ay.set(0, 1, lin(c, d));
        let conn = Connection::new(l.clone(), PresentedModule::free(b.clone(), vec![0, 2], 0), vec![ax, ay]).unwrap();
        let fails = complex_fails(&conn, 6);
        let curved = !conn.is_flat(12).unwrap();
        if c == bb {
            controls += 1;
            controls_ok += usize::from(!fails && !curved);
        } else {
            mutants += 1;
            caught += usize::from(fails && curved);
        }
    }

    // the shipped plane file with its curvature injected in the text
    let text = std::fs::read_to_string(common::problems_dir().join("flat_plane.prob")).unwrap();
    let mut file_mutants = 0;
    let mut file_caught = 0;
    for replacement in ["dy = [0, x; 0, 0]", "dx = [0, y; 0, 0]\ndy = [0, y; 0, 0]", "dy = [0, 2*x + y; 0, 0]"] {
        let mutated = text.replace("dy = [0, y; 0, 0]", replacement);
        assert_ne!(mutated, text);
        let r = run(Command::ComplexCheck, &parse_problem(&mutated).unwrap(), &RunOptions::default()).unwrap();
        file_mutants += 1;
        file_caught += usize::from(!r.ok() && matches!(r.body.get("first_failure"), Some(Node::Text(_))));
    }

    let pass = flat_bad.is_empty()
        && !flat.is_empty()
        && cusp_ok
        && caught == mutants
        && controls_ok == controls
        && file_caught == file_mutants;
    outcome(
        pass,
        format!(
            "shipped flat problems passing: {}/{} ({}), not over a free algebra: {}; cusp connections pass: {cusp_ok}; random mutants caught {caught}/{mutants}, flat controls pass {controls_ok}/{controls}; file mutants caught {file_caught}/{file_mutants}",
            flat.len() - flat_bad.len(),
            flat.len(),
            flat.join(", "),
            skipped.join(", "),
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (m, n) in CUSPS {
        let (s, seq) = cusp_gm(m, n);
        let gm = GaussManin::new(&seq, &s.connection).expect("gm");
        let slices = gm.gm_matrices(0, 1, 6 * m * n).expect("gm matrices");
        let mut nonzero = 0;
        let ok = slices.iter().all(|sl| {
            let k = sl.matrix.rows();
            if k > 0 {
                nonzero += 1;
            }
            sl.ok()
                && sl.target_degree == sl.degree
                && sl.matrix.cols() == k
                && (0..k).all(|i| {
                    (0..k).all(|j| {
                        let want = if i == j { int(sl.degree) } else { Rational::zero() };
                        *sl.matrix.get(i, j) == want
                    })
                })
        });
        pass &= ok && nonzero > 0;
        lines.push(format!("({m},{n}) {nonzero} nonzero slices, E = degree on each: {ok}"));
    }
    outcome(pass, lines.join("; "))
}

/// A random flat connection over `alg` on a free module of the given rank.
fn random_flat(rng: &mut StdRng, b: &Arc<HypersurfaceRing>, alg: &LieRinehartAlgebra, kind: usize, rank: usize) -> Connection {
    let degs: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
    let w = PresentedModule::free(b.clone(), degs.clone(), 0);
    let mut mats = Vec::new();
    for g in 0..alg.len() {
        let mut a = PolyMatrix::zeros(rank, rank, 2);
        // kind 1 is <dx, dy> with A_x = 0 and A_y depending on y only
        if kind == 0 || g == 1 {
            for i in 0..rank {
                for j in 0..rank {
                    let want = degs[j] - degs[i] + alg.degree(g);
                    let monos: Vec<_> = b
                        .monomials_of_degree(want)
                        .into_iter()
                        .filter(|mono| kind == 0 || mono.exponent(0) == 0)
                        .collect();
                    if monos.is_empty() || rng.gen_bool(0.3) {
                        continue;
                    }
                    let mono = monos[rng.gen_range(0..monos.len())].clone();
                    let c = int(rng.gen_range(-3..=3));
                    a.set(i, j, lrcoh::algebra::poly::Polynomial::term(c, mono));
                }
            }
        }
        mats.push(a);
    }
    Connection::new(alg.clone(), w, mats).expect("homogeneous by construction")
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let b = plane(&[1, 2]);
    let der = |c: [lrcoh::algebra::poly::Polynomial; 2]| Derivation::new(b.clone(), c.to_vec()).unwrap();
    let rank_one = [
        der([b.one(), b.zero()]),
        der([b.zero(), b.one()]),
        der([b.zero(), b.var(0)]),
        der([b.var(1), b.zero()]),
        der([b.var(0), b.var(1).scale(&int(2))]),
    ];
    let plane_alg = LieRinehartAlgebra::new(
        b.clone(),
        vec!["dx".into(), "dy".into()],
        vec![der([b.one(), b.zero()]), der([b.zero(), b.one()])],
    )
    .unwrap();
    let (lo, hi) = (-4, 8);
    let mut additive = 0;
    let mut euler = 0;
    let mut flat = 0;
    for _ in 0..20 {
        let kind = rng.gen_range(0..2);
        let alg = if kind == 0 {
            let k = rank_one[rng.gen_range(0..rank_one.len())].clone();
            LieRinehartAlgebra::new(b.clone(), vec!["k".into()], vec![k]).unwrap()
        } else {
            plane_alg.clone()
        };
        let r1 = rng.gen_range(1..=2);
        let r2 = rng.gen_range(1..=3 - r1);
        let c1 = random_flat(&mut rng, &b, &alg, kind, r1);
        let c2 = random_flat(&mut rng, &b, &alg, kind, r2);
        let sum = c1.direct_sum(&c2).unwrap();
        if c1.is_flat(12).unwrap() && c2.is_flat(12).unwrap() && sum.is_flat(12).unwrap() {
            flat += 1;
        }
        let g1 = gysin_class(&c1, lo, hi, 12).unwrap();
        let g2 = gysin_class(&c2, lo, hi, 12).unwrap();
        let gs = gysin_class(&sum, lo, hi, 12).unwrap();
        if (lo..=hi).all(|d| g1.value(d) + g2.value(d) == gs.value(d)) {
            additive += 1;
        }
        if g1.euler_identity_holds() && g2.euler_identity_holds() && gs.euler_identity_holds() {
            euler += 1;
        }
    }
    outcome(
        additive == 20 && euler == 20 && flat == 20,
        format!("20 seeded pairs: flat {flat}, additive {additive}, class = cochain sum {euler}"),
    )
}

fn run_binary(args: &[&str], single_thread: bool) -> Vec<u8> {
    let mut cmd = Process::new(env!("CARGO_BIN_EXE_lrcoh"));
    cmd.args(args);
    if single_thread {
        cmd.env("RAYON_NUM_THREADS", "1");
    }
    let out = cmd.output().expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend(format!("\nexit {:?}", out.status.code()).bytes());
    bytes
}

fn criterion_9() -> Outcome {
    let mut diffs = Vec::new();
    let mut roundtrip_bad = Vec::new();
    let problems = shipped_problems();
    for path in &problems {
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        let text = std::fs::read_to_string(path).unwrap();
        let file = parse_problem(&text).expect("parse");
        let printed = file.print();
        match parse_problem(&printed) {
            Ok(again) if again == file && again.print() == printed => {}
            _ => roundtrip_bad.push(name.clone()),
        }
        let command = Command::parse(&task_command(&text)).expect("known command");
        let a = run(command, &file, &RunOptions::default()).unwrap().render();
        let b = run(command, &file, &RunOptions::default()).unwrap().render();
        let p = path.to_string_lossy().to_string();
        let args = [command.name(), p.as_str()];
        let c1 = run_binary(&args, false);
        let c2 = run_binary(&args, false);
        let c3 = run_binary(&args, true);
        if a != b || c1 != c2 || c1 != c3 || !c1.starts_with(a.as_bytes()) {
            diffs.push(name);
        }
    }
    outcome(
        diffs.is_empty() && roundtrip_bad.is_empty(),
        format!(
            "{} problems: nondeterministic {:?}, round trip failures {:?}",
            problems.len(),
            diffs,
            roundtrip_bad
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("matrix factorization identity", criterion_1),
        ("connection descent and mutation detection", criterion_2),
        ("derivations and syzygy orientation", criterion_3),
        ("line example cohomology and induced action", criterion_4),
        ("cusp cohomology against the cokernel oracle", criterion_5),
        ("d squared zero iff flat", criterion_6),
        ("Euler lift acts by the degree on cusp H1", criterion_7),
        ("Gysin additivity", criterion_8),
        ("CLI determinism and round trip", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        if !o.pass {
            failed += 1;
        }
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
