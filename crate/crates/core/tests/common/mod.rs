//! Test-side oracles, written independently of the library's algebra.

#![allow(dead_code)]

use lrcoh::algebra::poly::Polynomial;
use lrcoh::algebra::rational::Rational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::path::PathBuf;

/// Dense-map polynomial: exponent vector to coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(pub HashMap<Vec<u32>, Rational>);

impl Poly {
    pub fn mono(c: i64, e: &[i64]) -> Poly {
        assert!(e.iter().all(|&x| x >= 0), "negative exponent in oracle");
        let mut m = HashMap::new();
        if c != 0 {
            m.insert(e.iter().map(|&x| x as u32).collect(), Rational::from_integer(c.into()));
        }
        Poly(m)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            let e = m.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v;
        }
        m.retain(|_, v| !v.is_zero());
        Poly(m)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut m: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                let k: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *m.entry(k).or_insert_with(Rational::zero) += x * y;
            }
        }
        m.retain(|_, v| !v.is_zero());
        Poly(m)
    }

    pub fn diff(&self, v: usize) -> Poly {
        let mut m = HashMap::new();
        for (e, c) in &self.0 {
            if e[v] > 0 {
                let mut f = e.clone();
                f[v] -= 1;
                m.insert(f, c * Rational::from_integer(e[v].into()));
            }
        }
        Poly(m)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut m = self.0.clone();
        for v in m.values_mut() {
            *v *= c;
        }
        m.retain(|_, v| !v.is_zero());
        Poly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Normal form modulo `x^m + y^n + z^2`, replacing `z^2` by `-x^m - y^n`.
    pub fn reduce_z2(&self, m: i64, n: i64) -> Poly {
        let sub = Poly::mono(-1, &[m, 0, 0]).add(&Poly::mono(-1, &[0, n, 0]));
        let mut out = Poly::default();
        let mut todo: Vec<(Vec<u32>, Rational)> = self.0.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        while let Some((e, c)) = todo.pop() {
            if e[2] < 2 {
                out = out.add(&Poly([(e, c)].into_iter().collect()));
                continue;
            }
            let rest = Poly::mono(1, &[e[0] as i64, e[1] as i64, e[2] as i64 - 2]).scale(&c);
            for (f, d) in rest.mul(&sub).0 {
                todo.push((f, d));
            }
        }
        out
    }

    pub fn from_lib(p: &Polynomial) -> Poly {
        Poly(
            p.terms()
                .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
                .collect(),
        )
    }

    pub fn to_lib(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.0
                .iter()
                .map(|(e, c)| (c.clone(), e.clone())),
        )
    }
}

pub type PMatrix = Vec<Vec<Poly>>;

pub fn mat_mul(a: &PMatrix, b: &PMatrix) -> PMatrix {
    let n = a.len();
    let k = b[0].len();
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| {
                    (0..b.len()).fold(Poly::default(), |acc, t| acc.add(&a[i][t].mul(&b[t][j])))
                })
                .collect()
        })
        .collect()
}

/// `phi`, `psi` for `x^m + y^n + z^2` as printed, in exponent form.
pub fn brieskorn_pair(m: i64, n: i64, k: i64, l: i64) -> (PMatrix, PMatrix) {
    let p = |c: i64, a: i64, b: i64, e: i64| Poly::mono(c, &[a, b, e]);
    let o = Poly::default;
    let phi = vec![
        vec![p(1, m - k, 0, 0), p(1, 0, n - l, 0), o(), p(1, 0, 0, 1)],
        vec![p(1, 0, l, 0), p(-1, k, 0, 0), p(1, 0, 0, 1), o()],
        vec![p(1, 0, 0, 1), o(), p(-1, 0, n - l, 0), p(-1, k, 0, 0)],
        vec![o(), p(1, 0, 0, 1), p(1, m - k, 0, 0), p(-1, 0, l, 0)],
    ];
    let psi = vec![
        vec![p(1, k, 0, 0), p(1, 0, n - l, 0), p(1, 0, 0, 1), o()],
        vec![p(1, 0, l, 0), p(-1, m - k, 0, 0), o(), p(1, 0, 0, 1)],
        vec![o(), p(1, 0, 0, 1), p(-1, 0, l, 0), p(1, k, 0, 0)],
        vec![p(1, 0, 0, 1), o(), p(-1, m - k, 0, 0), p(-1, 0, n - l, 0)],
    ];
    (phi, psi)
}

pub fn brieskorn_f(m: i64, n: i64) -> Poly {
    Poly::mono(1, &[m, 0, 0])
        .add(&Poly::mono(1, &[0, n, 0]))
        .add(&Poly::mono(1, &[0, 0, 2]))
}

const P: i64 = 2_147_483_647;

fn inv_mod(a: i64) -> i64 {
    let (mut t, mut nt, mut r, mut nr) = (0i64, 1i64, P, a.rem_euclid(P));
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(P)
}

/// Rank over `F_p`, `p = 2^31 - 1`. Equal to the rational rank for the
/// small integer matrices used here.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(P);
        }
    }
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = (*x as i128 * inv as i128 % P as i128) as i64;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = (rows[i][j] as i128 - f as i128 * rows[rank][j] as i128).rem_euclid(P as i128);
                    rows[i][j] = v as i64;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `(dim H^0_d, dim H^1_d)` for `n y^{n-1}∂_x + m x^{m-1}∂_y` acting on
/// `I = f·Q[x, y]`, weights `(n, m)`, `I_d = f·B_{d - mn}`.
pub fn cusp_h(m: i64, n: i64, d: i64) -> (usize, usize) {
    let e = m * n - m - n;
    let monos = |deg: i64| -> Vec<(i64, i64)> {
        let mut v = Vec::new();
        if deg < 0 {
            return v;
        }
        let mut a = 0;
        while n * a <= deg {
            if (deg - n * a) % m == 0 {
                v.push((a, (deg - n * a) / m));
            }
            a += 1;
        }
        v
    };
    let src = monos(d - m * n);
    let dst = monos(d + e - m * n);
    let mut rows = vec![vec![0i64; src.len()]; dst.len()];
    for (j, &(a, b)) in src.iter().enumerate() {
        let mut put = |t: (i64, i64), c: i64| {
            let i = dst.iter().position(|&s| s == t).expect("target monomial has the right degree");
            rows[i][j] += c;
        };
        if a > 0 {
            put((a - 1, b + n - 1), n * a);
        }
        if b > 0 {
            put((a + m - 1, b - 1), m * b);
        }
    }
    let r = rank_mod_p(rows);
    (src.len() - r, dst.len() - r)
}

pub fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("problems")
}

/// Shipped problem files, sorted by name.
pub fn shipped_problems() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(problems_dir())
        .expect("problems directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "prob"))
        .collect();
    v.sort();
    v
}

/// The command named in a problem file's task section.
pub fn task_command(text: &str) -> String {
    text.lines()
        .find_map(|l| l.trim().strip_prefix("command"))
        .and_then(|r| r.trim().strip_prefix('='))
        .map(|c| c.trim().to_string())
        .expect("task command")
}

pub fn one() -> Rational {
    Rational::one()
}
