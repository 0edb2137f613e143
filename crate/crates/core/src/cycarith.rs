//! Exact rationals and elements of cyclotomic fields.
//!
//! A [`CycNum`] carries its own conductor `n` and stores the coordinates of the
//! element in the power basis `1, ζₙ, …, ζₙ^{φ(n)-1}` of `ℚ(ζₙ)`. Binary
//! operations promote both operands to the lcm of their conductors. Nothing is
//! ever reduced to a minimal conductor, so two equal numbers may carry
//! different conductors; equality promotes before comparing.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polyrat::cyclotomic_poly;

pub type Rat = BigRational;

/// Largest conductor a value may be promoted to.
pub const CONDUCTOR_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("promotion to conductor {0} exceeds the cap of {CONDUCTOR_CAP}")]
    PromotionOverflow(u64),
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn lcm_checked(a: u64, b: u64) -> Result<u64, CycError> {
    let l = a.lcm(&b);
    if l > CONDUCTOR_CAP {
        Err(CycError::PromotionOverflow(l))
    } else {
        Ok(l)
    }
}

/// An element of `ℚ(ζₙ)` in the power basis modulo `Φₙ`.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl CycNum {
    /// Builds `Σ coeffs[i]·ζₙ^i` and reduces it into the power basis.
    ///
    /// Any number of coefficients is accepted; exponents are first folded
    /// modulo `n` using `ζₙⁿ = 1`.
    pub fn new(conductor: u64, coeffs: Vec<Rat>) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        if conductor > CONDUCTOR_CAP {
            return Err(CycError::PromotionOverflow(conductor));
        }
        let n = conductor as usize;
        let mut folded = vec![Rat::zero(); n];
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % n] += c;
            }
        }
        Ok(Self::reduce_folded(conductor, folded))
    }

    /// Same as [`CycNum::new`] for integer coefficients.
    pub fn from_ints(conductor: u64, coeffs: &[i64]) -> Result<Self, CycError> {
        Self::new(conductor, coeffs.iter().map(|&c| rat(c)).collect())
    }

    // `folded` has length n and represents Σ folded[i] ζ^i; reduce mod Φₙ.
    fn reduce_folded(conductor: u64, mut folded: Vec<Rat>) -> Self {
        let phi_poly = cyclotomic_poly(conductor);
        let phi = phi_poly.coeffs();
        let deg = phi.len() - 1;
        // Φₙ is monic: eliminate the top coefficients one by one.
        for top in (deg..folded.len()).rev() {
            let c = std::mem::replace(&mut folded[top], Rat::zero());
            if c.is_zero() {
                continue;
            }
            let shift = top - deg;
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if !pj.is_zero() {
                    folded[shift + j] -= &c * Rat::from_integer(pj.clone());
                }
            }
        }
        folded.truncate(deg);
        CycNum {
            conductor,
            coeffs: folded,
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    /// `ζₙ^k`, with `k` taken modulo `n`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::ZeroConductor);
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rat::zero(); e + 1];
        v[e] = Rat::one();
        Self::new(n, v)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates; the length is `φ(conductor)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_one())
    }

    /// The rational value, if this element lies in `ℚ`.
    ///
    /// `1` is the first basis vector for every conductor, so an element is
    /// rational exactly when all higher coordinates vanish.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element over `ℚ(ζₘ)` where `m` is a multiple of the
    /// current conductor.
    pub fn promote(&self, target: u64) -> Result<Self, CycError> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(CycError::ZeroConductor);
        }
        if target > CONDUCTOR_CAP {
            return Err(CycError::PromotionOverflow(target));
        }
        let k = (target / self.conductor) as usize;
        let mut folded = vec![Rat::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                folded[i * k] = c.clone();
            }
        }
        Ok(Self::reduce_folded(target, folded))
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self), CycError> {
        let l = lcm_checked(self.conductor, other.conductor)?;
        Ok((self.promote(l)?, other.promote(l)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycError> {
        let (a, b) = self.aligned(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(CycNum {
            conductor: a.conductor,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycError> {
        if let Some(r) = other.as_rat() {
            return Ok(self.scale(&r));
        }
        if let Some(r) = self.as_rat() {
            return Ok(other.scale(&r));
        }
        let (a, b) = self.aligned(other)?;
        let n = a.conductor as usize;
        let mut folded = vec![Rat::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    folded[(i + j) % n] += x * y;
                }
            }
        }
        Ok(Self::reduce_folded(a.conductor, folded))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, found by solving `x·y = 1` as a linear system
    /// over `ℚ` in the power basis.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(CycNum {
                conductor: self.conductor,
                coeffs: {
                    let mut v = vec![Rat::zero(); self.coeffs.len()];
                    v[0] = r.recip();
                    v
                },
            });
        }
        let d = self.coeffs.len();
        // Column j holds the coordinates of self·ζ^j.
        let mut m: Vec<Vec<Rat>> = vec![vec![Rat::zero(); d + 1]; d];
        for j in 0..d {
            let col = self.try_mul(&CycNum::root_of_unity(self.conductor, j as i64)?)?;
            for (i, c) in col.coeffs.iter().enumerate() {
                m[i][j] = c.clone();
            }
        }
        m[0][d] = Rat::one();
        let sol = solve_augmented(m).ok_or(CycError::DivisionByZero)?;
        Ok(CycNum {
            conductor: self.conductor,
            coeffs: sol,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycError> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Least `m ≥ 1` with `xᵐ = 1`, or `None` when `x` is not a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        self.as_root_of_unity().map(|r| r.order())
    }

    /// Writes a root of unity `x` as `ζₘ^k` with `m` its order and
    /// `0 ≤ k < m`, `gcd(k, m) = 1`.
    ///
    /// Every root of unity in `ℚ(ζₙ)` is a power of `ζ_{lcm(2,n)}`. Small
    /// conductors look the value up in a cached table of those powers;
    /// large ones fall back to repeated squaring.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() {
            return None;
        }
        let bound = self.conductor.lcm(&2);
        if bound <= ROOT_TABLE_LIMIT {
            let x = self.promote(bound).ok()?;
            let k = *root_table(bound).get(&x.coeffs)?;
            return Some(RootOfUnity::new(bound, k as i64));
        }
        if !self.pow(bound as i64).ok()?.is_one() {
            return None;
        }
        let m = divisors(bound)
            .into_iter()
            .find(|&d| self.pow(d as i64).map(|p| p.is_one()).unwrap_or(false))?;
        (0..m)
            .filter(|k| k.gcd(&m) == 1)
            .find(|&k| {
                CycNum::root_of_unity(m, k as i64)
                    .map(|z| &z == self)
                    .unwrap_or(false)
            })
            .map(|k| RootOfUnity::new(m, k as i64))
    }
}

const ROOT_TABLE_LIMIT: u64 = 4096;

type RootTable = HashMap<Vec<Rat>, u64>;

// Power-basis coordinates of ζₙ^k ↦ k, for every k in 0..n.
fn root_table(n: u64) -> Arc<RootTable> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<RootTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let table: RootTable = (0..n)
        .map(|k| {
            let z = CycNum::root_of_unity(n, k as i64).expect("conductor within cap");
            (z.coeffs, k)
        })
        .collect();
    let table = Arc::new(table);
    cache
        .lock()
        .expect("cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    table
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match self.aligned(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for CycNum {}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

// The operator forms panic only when promotion would exceed CONDUCTOR_CAP.
impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.try_add(rhs).expect("conductor overflow")
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.try_sub(rhs).expect("conductor overflow")
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.try_mul(rhs).expect("conductor overflow")
    }
}

impl fmt::Display for CycNum {
    /// Renders in the CLI expression syntax, e.g. `1/2*zeta(8)^3 - zeta(8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    // A bare leading `-` would bind to the base of `^`.
                    write!(f, "{}", if mag.is_one() && i > 1 { "-1*" } else { "-" })?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "zeta({})", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `ζ_order^exp`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    pub fn new(n: u64, k: i64) -> Self {
        assert!(n > 0, "root of unity of order zero");
        let e = k.rem_euclid(n as i64) as u64;
        let g = e.gcd(&n);
        if e == 0 {
            RootOfUnity { order: 1, exp: 0 }
        } else {
            RootOfUnity {
                order: n / g,
                exp: e / g,
            }
        }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exp: 1 }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    /// Exponent of this root with respect to `ζ_n`; `n` must be a multiple
    /// of the order.
    pub fn exponent_in(&self, n: u64) -> u64 {
        debug_assert_eq!(n % self.order, 0);
        self.exp * (n / self.order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = self.order.lcm(&other.order);
        let e = self.exponent_in(l) + other.exponent_in(l);
        RootOfUnity::new(l, e as i64)
    }

    pub fn pow(&self, k: i64) -> Self {
        RootOfUnity::new(self.order, (self.exp as i64) * k)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn to_cyc(&self) -> CycNum {
        CycNum::root_of_unity(self.order, self.exp as i64).expect("valid root of unity")
    }
}

/// Gauss–Jordan on an augmented `d × (d+1)` system; `None` when singular.
fn solve_augmented(mut m: Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let d = m.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let (pivot_row, row) = if r < col {
                    let (a, b) = m.split_at_mut(col);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[col], &mut b[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}
