//! Independent oracles and the shared group sweep.
//!
//! The oracles deliberately avoid the library's own algorithms: cyclotomic
//! polynomials are rebuilt with `i64` long division, series are expanded by
//! plain convolution, and cyclotomic numbers are checked against `f64`
//! complex arithmetic.

#![allow(dead_code)]

use std::collections::HashMap;

use molien::cycarith::{rat, CycNum, Rat, RootOfUnity};
use molien::matgroup::{q_family_generators, Family, Mat2};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

// ---------------------------------------------------------------------------
// Integer polynomials as plain coefficient vectors, lowest degree first.

pub fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Long division by a monic polynomial; `None` unless the remainder is zero.
pub fn div_monic(p: &[i64], d: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(d.last(), Some(&1));
    if p.len() < d.len() {
        return if p.is_empty() { Some(vec![]) } else { None };
    }
    let mut r = p.to_vec();
    let mut q = vec![0i64; p.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + d.len() - 1];
        q[k] = c;
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= c * dj;
        }
    }
    if r.iter().all(|&x| x == 0) {
        Some(trim(q))
    } else {
        None
    }
}

/// Φ_d from `t^d - 1 = ∏_{e | d} Φ_e`, by repeated division.
pub fn phi(d: u64, cache: &mut HashMap<u64, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            let f = phi(e, cache);
            p = div_monic(&p, &f).expect("Φ_e divides t^d - 1");
        }
    }
    cache.insert(d, p.clone());
    p
}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// All roots of `p` by Durand–Kerner iteration.
pub fn complex_roots(p: &[i64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    let lead = p[n] as f64;
    let monic: Vec<Complex64> = p
        .iter()
        .map(|&c| Complex64::new(c as f64 / lead, 0.0))
        .collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * z + c)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Cyclotomic-product oracle: dividing out every Φ_d with `φ(d) ≤ deg p`
/// leaves `±1`, and every Φ_d so removed has all its (simple) roots within
/// `1e-9` of the unit circle.
pub fn oracle_is_cyclotomic(p: &[i64], cache: &mut HashMap<u64, Vec<i64>>) -> bool {
    let p = trim(p.to_vec());
    if p.is_empty() || p[0] == 0 {
        return false;
    }
    let deg = p.len() - 1;
    let mut rest = p;
    for d in 1..=(2 * deg * deg + 2) as u64 {
        if euler_phi(d) > deg as u64 {
            continue;
        }
        let f = phi(d, cache);
        let mut removed = false;
        while let Some(q) = div_monic(&rest, &f) {
            rest = q;
            removed = true;
        }
        if removed && f.len() > 1 {
            let on_circle = complex_roots(&f)
                .iter()
                .all(|z| (z.norm() - 1.0).abs() < 1e-9);
            assert!(on_circle, "oracle Φ_{d} has a root off the unit circle");
        }
    }
    rest == [1] || rest == [-1]
}

pub fn to_i64(p: &molien::polyrat::IntPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("small coefficient"))
        .collect()
}

pub fn from_i64(p: &[i64]) -> molien::polyrat::IntPoly {
    molien::polyrat::IntPoly::from_i64(p)
}

/// A random product of one to four cyclotomic polynomials, times `±1`.
pub fn random_cyclotomic_product(
    rng: &mut impl Rng,
    cache: &mut HashMap<u64, Vec<i64>>,
) -> Vec<i64> {
    let mut p = vec![if rng.gen_bool(0.5) { 1 } else { -1 }];
    for _ in 0..rng.gen_range(1..=4) {
        let d = rng.gen_range(1..=30);
        for _ in 0..rng.gen_range(1..=2) {
            p = mul(&p, &phi(d, cache));
        }
    }
    p
}

/// `p` with one coefficient nudged by a nonzero amount (never to zero).
pub fn perturb(p: &[i64], rng: &mut impl Rng) -> Vec<i64> {
    loop {
        let mut q = p.to_vec();
        let i = rng.gen_range(0..q.len());
        q[i] += [-2, -1, 1, 2][rng.gen_range(0..4)];
        let q = trim(q);
        if !q.is_empty() {
            return q;
        }
    }
}

// ---------------------------------------------------------------------------
// Power series over ℚ.

/// Coefficients of `num/den` through `t^{n-1}` by inverting `den` term by
/// term and convolving with `num`.
pub fn series_by_convolution(num: &[i64], den: &[i64], n: usize) -> Vec<Rat> {
    let d0 = rat(den[0]);
    let mut inv = vec![Rat::zero(); n];
    for k in 0..n {
        let mut acc = if k == 0 { rat(1) } else { Rat::zero() };
        for j in 1..=k.min(den.len() - 1) {
            acc -= rat(den[j]) * &inv[k - j];
        }
        inv[k] = acc / &d0;
    }
    (0..n)
        .map(|k| {
            (0..=k.min(num.len().saturating_sub(1)))
                .map(|i| rat(num[i]) * &inv[k - i])
                .sum()
        })
        .collect()
}

/// Hilbert series coefficients of the ring of invariants of a diagonal
/// group on `k[x_1..x_m]` (all of degree one), by counting fixed monomials.
/// Each generator is given by the exponents `e_i` of `ζ_N^{e_i}` on `x_i`.
pub fn diagonal_invariant_counts(
    order: u64,
    gens: &[Vec<i64>],
    vars: usize,
    max_deg: usize,
) -> Vec<u64> {
    let mut counts = vec![0u64; max_deg + 1];
    let mut exps = vec![0usize; vars];
    fn rec(
        i: usize,
        left: usize,
        exps: &mut Vec<usize>,
        order: u64,
        gens: &[Vec<i64>],
        counts: &mut Vec<u64>,
        deg: usize,
    ) {
        if i == exps.len() {
            let fixed = gens.iter().all(|g| {
                let s: i64 = g.iter().zip(exps.iter()).map(|(e, a)| e * *a as i64).sum();
                s.rem_euclid(order as i64) == 0
            });
            if fixed {
                counts[deg] += 1;
            }
            return;
        }
        for a in 0..=left {
            exps[i] = a;
            rec(i + 1, left - a, exps, order, gens, counts, deg + a);
        }
    }
    rec(0, max_deg, &mut exps, order, gens, &mut counts, 0);
    counts
}

// ---------------------------------------------------------------------------
// Floating-point embedding of cyclotomic expressions.

#[derive(Clone, Debug)]
pub enum Expr {
    Rational(i64, i64),
    Zeta(u64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

pub const ZETA_ORDERS: [u64; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

pub fn random_expr(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.5) {
            Expr::Rational(rng.gen_range(0..=9), rng.gen_range(1..=5))
        } else {
            Expr::Zeta(ZETA_ORDERS[rng.gen_range(0..ZETA_ORDERS.len())])
        };
    }
    let sub = |rng: &mut _| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..5) {
        0 => Expr::Add(sub(rng), sub(rng)),
        1 => Expr::Sub(sub(rng), sub(rng)),
        2 => Expr::Mul(sub(rng), sub(rng)),
        3 => Expr::Neg(sub(rng)),
        // Negative powers only of roots of unity, which are never zero.
        _ => {
            let z = Expr::Zeta(ZETA_ORDERS[rng.gen_range(0..ZETA_ORDERS.len())]);
            if rng.gen_bool(0.5) {
                Expr::Pow(Box::new(z), rng.gen_range(-7..=7))
            } else {
                Expr::Pow(sub(rng), rng.gen_range(0..=3))
            }
        }
    }
}

/// Renders in the CLI expression syntax, fully parenthesized.
pub fn render(e: &Expr) -> String {
    match e {
        Expr::Rational(p, q) => format!("{p}/{q}"),
        Expr::Zeta(n) => format!("zeta({n})"),
        Expr::Add(a, b) => format!("({} + {})", render(a), render(b)),
        Expr::Sub(a, b) => format!("({} - {})", render(a), render(b)),
        Expr::Mul(a, b) => format!("({} * {})", render(a), render(b)),
        Expr::Neg(a) => format!("-({})", render(a)),
        Expr::Pow(a, k) => format!("({})^{k}", render(a)),
    }
}

pub fn eval_float(e: &Expr) -> Complex64 {
    match e {
        Expr::Rational(p, q) => Complex64::new(*p as f64 / *q as f64, 0.0),
        Expr::Zeta(n) => Complex64::from_polar(1.0, std::f64::consts::TAU / *n as f64),
        Expr::Add(a, b) => eval_float(a) + eval_float(b),
        Expr::Sub(a, b) => eval_float(a) - eval_float(b),
        Expr::Mul(a, b) => eval_float(a) * eval_float(b),
        Expr::Neg(a) => -eval_float(a),
        Expr::Pow(a, k) => eval_float(a).powi(*k as i32),
    }
}

/// `Σ c_k ζ_N^k` evaluated at `ζ_N = e^{2πi/N}`.
pub fn embed(x: &CycNum) -> Complex64 {
    let n = x.conductor() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let c = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
            Complex64::from_polar(c, std::f64::consts::TAU * k as f64 / n)
        })
        .sum()
}

// ---------------------------------------------------------------------------
// The sweep of down-up algebras and finite groups.

pub const SWEEP_ALGEBRAS: [(i64, i64); 4] = [(1, 1), (0, 1), (2, -1), (3, -1)];

#[derive(Clone, Debug)]
pub struct SweepGroup {
    pub name: String,
    pub gens: Vec<Mat2>,
}

fn zeta(n: u64, k: i64) -> CycNum {
    RootOfUnity::new(n, k).to_cyc()
}

/// `½[[1+i, 1+i], [-1+i, 1-i]]`, which with the quarter turn and the
/// fourth-root torus generates the binary tetrahedral group.
pub fn tetrahedral_generator() -> Mat2 {
    let half = CycNum::from_rat(molien::cycarith::rat_frac(1, 2));
    let i = zeta(4, 1);
    let one = CycNum::one();
    let e = |x: CycNum| &half * &x;
    Mat2::new(e(&one + &i), e(&one + &i), e(&i - &one), e(&one - &i))
}

/// Q₁–Q₈ with `n ≤ 8` (Q₃ needs odd `n`), the cyclic groups `C_m ⊂ SL₂`
/// with `m ≤ 12`, the binary dihedral groups `BD_{4m}` with `m ≤ 6`, and
/// the binary tetrahedral group.
pub fn sweep_groups() -> Vec<SweepGroup> {
    let mut out = Vec::new();
    let families = [
        Family::Q1,
        Family::Q2,
        Family::Q3,
        Family::Q4,
        Family::Q5,
        Family::Q6,
        Family::Q7,
        Family::Q8,
    ];
    for family in families {
        for n in 1..=8 {
            if let Some(gens) = q_family_generators(family, n) {
                out.push(SweepGroup {
                    name: format!("{}(n={n})", family.name()),
                    gens,
                });
            }
        }
    }
    for m in 1..=12 {
        out.push(SweepGroup {
            name: format!("C{m}"),
            gens: vec![Mat2::torus_primitive(m)],
        });
    }
    for m in 1..=6 {
        out.push(SweepGroup {
            name: format!("BD{}", 4 * m),
            gens: vec![Mat2::quarter_turn(), Mat2::torus_primitive(2 * m)],
        });
    }
    out.push(SweepGroup {
        name: "BT24".into(),
        gens: vec![
            Mat2::quarter_turn(),
            Mat2::torus(RootOfUnity::new(4, 1)),
            tetrahedral_generator(),
        ],
    });
    out
}
