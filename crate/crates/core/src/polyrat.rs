//! Univariate polynomials in `t`, cyclotomic polynomials, and reduced
//! rational functions.
//!
//! [`IntPoly`] is the integer workhorse. [`CycPoly`] holds polynomials whose
//! coefficients are sums of roots of unity; trace functions live there until
//! a group average collapses them back to integers. [`RatFunc`] is always
//! kept reduced.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycarith::{totient, CycNum, Rat, RootOfUnity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator vanishes at t = 0")]
    DenominatorVanishesAtZero,
    #[error("the zero polynomial has no cyclotomic factorization")]
    ZeroPolynomial,
    #[error("the zero function has no leading term")]
    ZeroFunction,
    #[error("coefficient at degree {degree} did not collapse to a rational number")]
    NonRationalCollapse { degree: usize },
    #[error("integer overflow while accumulating cyclotomic coefficients")]
    CoefficientOverflow,
}

/// Integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators: returns `(p, m)` with `p = m·coeffs`, `m > 0`.
    pub fn from_rats(coeffs: &[Rat]) -> (Self, BigInt) {
        let m = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = coeffs
            .iter()
            .map(|c| c.numer() * (&m / c.denom()))
            .collect();
        (Self::new(p), m)
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        &Self::one() - &Self::monomial(BigInt::one(), k)
    }

    /// `1 + t^k`.
    pub fn one_plus_t_pow(k: usize) -> Self {
        &Self::one() + &Self::monomial(BigInt::one(), k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// `t^deg · p(1/t)` with `deg = deg p`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division over `ℤ`; `None` when the divisor does not divide
    /// with an integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_z(divisor)?;
        r.is_zero().then_some(q)
    }

    // Long division that requires each step's quotient to be integral.
    fn div_rem_z(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = std::mem::take(&mut r[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate().take(dd) {
                r[k + j] -= &qk * dj;
            }
            q[k] = qk;
        }
        Some((Self::new(q), Self::new(r)))
    }

    /// Pseudo-remainder: `lc(b)^e · a mod b` for a suitable `e`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lc = b.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let shifted = &Self::monomial(lr, dr - db) * b;
            r = &r.scale(&lc) - &shifted;
        }
        r
    }

    /// Primitive gcd over `ℚ[t]` (content 1, positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Multiplicity of the root `t = 1`, by repeated synthetic division.
    pub fn multiplicity_at_one(&self) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.coeffs.iter().sum::<BigInt>().is_zero() {
            // Synthetic division by (t - 1).
            let n = p.coeffs.len();
            let mut q = vec![BigInt::zero(); n - 1];
            let mut acc = BigInt::zero();
            for i in (1..n).rev() {
                acc += &p.coeffs[i];
                q[i - 1] = acc.clone();
            }
            p = Self::new(q);
            m += 1;
        }
        m
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial `Φ_d`, obtained by dividing `t^d - 1` by
/// `Φ_e` for every proper divisor `e` of `d`. Results are cached.
pub fn cyclotomic_poly(d: u64) -> Arc<IntPoly> {
    assert!(d >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = phi_cache().lock().expect("cache poisoned").get(&d) {
        return Arc::clone(p);
    }
    let mut p = &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
    for e in crate::cycarith::divisors(d) {
        if e < d {
            p = p
                .div_exact(&cyclotomic_poly(e))
                .expect("cyclotomic divisor divides t^d - 1");
        }
    }
    let p = Arc::new(p);
    // Concurrent misses compute the same value, so whichever insert wins is fine.
    phi_cache()
        .lock()
        .expect("cache poisoned")
        .entry(d)
        .or_insert_with(|| Arc::clone(&p));
    p
}

/// `p = unit · ∏ Φ_d^{m_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycFactorization {
    /// `(d, multiplicity)` in increasing `d`.
    pub factors: Vec<(u64, u32)>,
    pub unit: i8,
}

impl CycFactorization {
    pub fn expand(&self) -> IntPoly {
        self.factors.iter().fold(
            IntPoly::constant(BigInt::from(self.unit)),
            |acc, &(d, m)| &acc * &cyclotomic_poly(d).pow(m),
        )
    }
}

/// Decides whether `p = ±∏ Φ_d^{m_d}` and returns the factorization.
///
/// Every `Φ_d` dividing `p` has `φ(d) ≤ deg p`, and `φ(d) ≥ √(d/2)` bounds
/// the search to `d ≤ 2·deg² + 2`.
pub fn is_cyclotomic_product(p: &IntPoly) -> Result<Option<CycFactorization>, PolyError> {
    let deg = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut rest = p.clone();
    let mut factors = Vec::new();
    if deg > 0 {
        let bound = 2 * (deg as u64) * (deg as u64) + 2;
        for d in 1..=bound {
            if rest.degree() == Some(0) {
                break;
            }
            if totient(d) > rest.degree().unwrap_or(0) as u64 {
                continue;
            }
            let phi = cyclotomic_poly(d);
            let mut m = 0;
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                factors.push((d, m));
            }
        }
    }
    if rest.degree() != Some(0) {
        return Ok(None);
    }
    let c = rest.leading();
    if c.is_one() {
        Ok(Some(CycFactorization { factors, unit: 1 }))
    } else if (-&c).is_one() {
        Ok(Some(CycFactorization { factors, unit: -1 }))
    } else {
        Ok(None)
    }
}

/// Multiset of cyclotomic factors `∏ Φ_d^{m_d}`; used for denominators that
/// are products of `(1 - t^k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycMultiset(pub BTreeMap<u64, u32>);

impl CycMultiset {
    /// Factors of `t^k - 1`, which is `-(1 - t^k)`.
    pub fn of_t_pow_minus_one(k: u64) -> Self {
        CycMultiset(
            crate::cycarith::divisors(k)
                .into_iter()
                .map(|d| (d, 1))
                .collect(),
        )
    }

    pub fn add(&mut self, other: &Self, times: u32) {
        for (&d, &m) in &other.0 {
            *self.0.entry(d).or_insert(0) += m * times;
        }
    }

    pub fn lcm_with(&mut self, other: &Self) {
        for (&d, &m) in &other.0 {
            let e = self.0.entry(d).or_insert(0);
            *e = (*e).max(m);
        }
    }

    /// `self / other`, assuming `other ⊆ self`.
    pub fn quotient(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &m) in &other.0 {
            let e = out.0.get_mut(&d).expect("not a sub-multiset");
            *e -= m;
        }
        out.0.retain(|_, m| *m > 0);
        out
    }

    pub fn expand(&self) -> IntPoly {
        self.0.iter().fold(IntPoly::one(), |acc, (&d, &m)| {
            &acc * &cyclotomic_poly(d).pow(m)
        })
    }
}

/// Polynomial with coefficients in `ℤ[ζ_N]`, stored as integer vectors over
/// the exponents `0..N` (not reduced modulo `Φ_N` until collapse).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    order: u64,
    coeffs: Vec<Vec<i128>>,
}

impl CycPoly {
    pub fn one(order: u64) -> Self {
        let mut c = vec![0i128; order as usize];
        c[0] = 1;
        CycPoly {
            order,
            coeffs: vec![c],
        }
    }

    pub fn zero(order: u64) -> Self {
        CycPoly {
            order,
            coeffs: vec![],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by the sparse polynomial `Σ_j c_j ω_j t^{k_j}` given as
    /// `(degree, root, integer coefficient)` terms.
    pub fn mul_terms(&self, terms: &[(usize, RootOfUnity, i128)]) -> Result<Self, PolyError> {
        let n = self.order as usize;
        let max_deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut out = vec![vec![0i128; n]; self.coeffs.len() + max_deg];
        for (deg, row) in self.coeffs.iter().enumerate() {
            for &(k, root, c) in terms {
                let shift = root.exponent_in(self.order) as usize;
                let target = &mut out[deg + k];
                for (e, &v) in row.iter().enumerate() {
                    if v != 0 {
                        let slot = &mut target[(e + shift) % n];
                        *slot = v
                            .checked_mul(c)
                            .and_then(|x| slot.checked_add(x))
                            .ok_or(PolyError::CoefficientOverflow)?;
                    }
                }
            }
        }
        Ok(CycPoly {
            order: self.order,
            coeffs: out,
        })
    }

    /// Multiplies by an integer polynomial.
    pub fn mul_int(&self, p: &IntPoly) -> Result<Self, PolyError> {
        let terms: Vec<(usize, RootOfUnity, i128)> = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                c.to_i128()
                    .map(|c| (k, RootOfUnity::one(), c))
                    .ok_or(PolyError::CoefficientOverflow)
            })
            .collect::<Result<_, _>>()?;
        self.mul_terms(&terms)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<(), PolyError> {
        assert_eq!(self.order, other.order, "mismatched root orders");
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs
                .resize(other.coeffs.len(), vec![0; self.order as usize]);
        }
        for (row, orow) in self.coeffs.iter_mut().zip(&other.coeffs) {
            for (a, b) in row.iter_mut().zip(orow) {
                *a = a.checked_add(*b).ok_or(PolyError::CoefficientOverflow)?;
            }
        }
        Ok(())
    }

    /// Coefficients as cyclotomic numbers of conductor `N`.
    pub fn to_cyc(&self) -> Vec<CycNum> {
        self.coeffs
            .iter()
            .map(|row| {
                CycNum::new(
                    self.order,
                    row.iter()
                        .map(|&v| Rat::from_integer(BigInt::from(v)))
                        .collect(),
                )
                .expect("conductor within cap")
            })
            .collect()
    }

    /// Collapses every coefficient to a rational number, failing with
    /// `NonRationalCollapse` otherwise.
    pub fn collapse(&self) -> Result<Vec<Rat>, PolyError> {
        self.to_cyc()
            .into_iter()
            .enumerate()
            .map(|(degree, c)| c.as_rat().ok_or(PolyError::NonRationalCollapse { degree }))
            .collect()
    }
}

/// Reduced quotient `num/den` of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` over `ℚ`, `den(0) > 0`, and the joint
/// content of `num` and `den` is 1. For every function with an integral
/// power series (all Hilbert series) this makes `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if den.coeff(0).is_zero() {
            return Err(PolyError::DenominatorVanishesAtZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        Ok(Self::normalized(num, den))
    }

    /// `num / den` with rational numerator coefficients and a denominator
    /// given as a cyclotomic multiset (with sign `den_sign`). Cancels by
    /// trial division, which is exact because `den` only has cyclotomic
    /// factors.
    pub(crate) fn from_rat_num_over_cyclotomics(
        num: &[Rat],
        den: &CycMultiset,
        den_sign: i8,
    ) -> Self {
        let (mut n, scale) = IntPoly::from_rats(num);
        let mut remaining = den.clone();
        if !n.is_zero() {
            for (&d, m) in remaining.0.iter_mut() {
                let phi = cyclotomic_poly(d);
                while *m > 0 {
                    match n.div_exact(&phi) {
                        Some(q) => {
                            n = q;
                            *m -= 1;
                        }
                        None => break,
                    }
                }
            }
        } else {
            remaining.0.clear();
        }
        remaining.0.retain(|_, m| *m > 0);
        let den = remaining.expand().scale(&(BigInt::from(den_sign) * scale));
        Self::normalized(n, den)
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if c.is_zero() {
            c = BigInt::one();
        }
        if den.coeff(0).is_negative() {
            c = -c;
        }
        let den = den.div_scalar_exact(&c);
        let num = num.div_scalar_exact(&c);
        if num.is_zero() {
            return RatFunc {
                num,
                den: IntPoly::one(),
            };
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::normalized(p, IntPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    /// `1 / ∏ (1 - t^k)` over the given exponents.
    pub fn inverse_of_one_minus(ks: &[usize]) -> Self {
        let den = ks.iter().fold(IntPoly::one(), |acc, &k| {
            &acc * &IntPoly::one_minus_t_pow(k)
        });
        Self::new(IntPoly::one(), den).expect("nonzero denominator")
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominator")
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.num.scale(r.numer()), self.den.scale(r.denom())).expect("nonzero")
    }

    /// Order of the pole at `t = 1`; negative for a zero.
    pub fn pole_order_at_one(&self) -> i64 {
        self.den.multiplicity_at_one() as i64 - self.num.multiplicity_at_one() as i64
    }

    /// Taylor coefficients `c_0..=c_N` at `t = 0`, by the linear recurrence
    /// `Σ_j den_j c_{k-j} = num_k`.
    pub fn series_coeffs(&self, n: usize) -> Vec<Rat> {
        let d0 = Rat::from_integer(self.den.coeff(0));
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Rat::from_integer(self.num.coeff(k));
            for (j, dj) in self.den.coeffs().iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc -= &out[k - j] * Rat::from_integer(dj.clone());
                }
            }
            out.push(acc / &d0);
        }
        out
    }

    /// Leading term `c·t^e` of the Laurent expansion in `t^{-1}`.
    pub fn laurent_leading_at_infinity(&self) -> Result<(i64, Rat), PolyError> {
        let dn = self.num.degree().ok_or(PolyError::ZeroFunction)?;
        let dd = self.den.degree().expect("nonzero denominator");
        Ok((
            dn as i64 - dd as i64,
            Rat::new(self.num.leading(), self.den.leading()),
        ))
    }

    /// Returns `(σ, l)` when `H(1/t) = σ·t^l·H(t)`.
    ///
    /// With `rev(p) = t^{deg p} p(1/t)`, `H(1/t) = t^{deg den - deg num}
    /// rev(num)/rev(den)`, so the identity holds iff
    /// `rev(num)·den = σ·num·rev(den)`.
    pub fn stanley_gorenstein_test(&self) -> Option<(i8, i64)> {
        let dn = self.num.degree()?;
        let dd = self.den.degree().expect("nonzero denominator");
        let lhs = &self.num.reversed() * &self.den;
        let rhs = &self.num * &self.den.reversed();
        let l = dd as i64 - dn as i64;
        if lhs == rhs {
            Some((1, l))
        } else if lhs == -&rhs {
            Some((-1, l))
        } else {
            None
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
