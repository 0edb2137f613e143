//! Reproducible checks of closed-form Hilbert series, non-cyclotomicity
//! results and homological determinant tables.
//!
//! Every check compares an expected artifact with a computed one by exact
//! equality; there are no tolerances.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cycarith::{rat, CycNum, Rat, RootOfUnity};
use crate::invariants::{
    average_traces, bireflection_subgroup, generated_by_bireflections, hdet_from_trace,
    hypersurface_trace, molien, polyring_molien, AlgebraCtx, InvariantError, MonomialMatrix,
    TraceFn,
};
use crate::matgroup::{close_group, q_family_generators, Family, Mat2, MatGroup};
use crate::polyrat::{is_cyclotomic_product, IntPoly, PolyError, RatFunc};

#[derive(Debug, Error)]
pub enum LabError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<crate::matgroup::GroupError> for LabError {
    fn from(e: crate::matgroup::GroupError) -> Self {
        LabError::Invariant(e.into())
    }
}

/// Something a check compares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Series(RatFunc),
    Poly(IntPoly),
    Flag(bool),
    Int(i64),
    Text(String),
}

pub(crate) fn int_array(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => json!(v),
                None => json!(c.to_string()),
            })
            .collect(),
    )
}

impl Artifact {
    pub fn to_json(&self) -> Value {
        match self {
            Artifact::Series(f) => json!({"num": int_array(f.num()), "den": int_array(f.den())}),
            Artifact::Poly(p) => int_array(p),
            Artifact::Flag(b) => json!(b),
            Artifact::Int(v) => json!(v),
            Artifact::Text(s) => json!(s),
        }
    }
}

impl std::fmt::Display for Artifact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Artifact::Series(r) => write!(f, "{r}"),
            Artifact::Poly(p) => write!(f, "{p}"),
            Artifact::Flag(b) => write!(f, "{b}"),
            Artifact::Int(v) => write!(f, "{v}"),
            Artifact::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check_id: String,
    pub parameters: BTreeMap<String, i64>,
    pub passed: bool,
    pub expected: Artifact,
    pub computed: Artifact,
}

impl CheckResult {
    pub fn new(id: &str, params: &[(&str, i64)], expected: Artifact, computed: Artifact) -> Self {
        CheckResult {
            check_id: id.to_string(),
            parameters: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            passed: expected == computed,
            expected,
            computed,
        }
    }

    /// `id[k=v,...]`.
    pub fn label(&self) -> String {
        if self.parameters.is_empty() {
            return self.check_id.clone();
        }
        let ps: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}[{}]", self.check_id, ps.join(","))
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckResult", 5)?;
        st.serialize_field("check_id", &self.check_id)?;
        st.serialize_field("parameters", &self.parameters)?;
        st.serialize_field("passed", &self.passed)?;
        st.serialize_field("expected", &self.expected.to_json())?;
        st.serialize_field("computed", &self.computed.to_json())?;
        st.end()
    }
}

fn t_pow(k: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), k)
}

fn one_minus(k: usize) -> IntPoly {
    IntPoly::one_minus_t_pow(k)
}

fn one_plus(k: usize) -> IntPoly {
    IntPoly::one_plus_t_pow(k)
}

fn ratio(num: IntPoly, den: IntPoly) -> RatFunc {
    RatFunc::new(num, den).expect("closed forms have nonvanishing denominators")
}

fn q_group(family: Family, n: u64) -> Result<MatGroup, LabError> {
    let gens = q_family_generators(family, n).expect("family has a normal form");
    Ok(close_group(&gens)?)
}

fn downup(alpha: i64, beta: i64) -> AlgebraCtx {
    AlgebraCtx::down_up(rat(alpha), rat(beta)).expect("beta is nonzero")
}

/// `(1+tⁿ+t²ⁿ)(1+t⁴) + 2t^{n+2}`.
pub fn lemma86_family1(n: usize) -> IntPoly {
    let a = &(&IntPoly::one() + &t_pow(n)) + &t_pow(2 * n);
    &(&a * &one_plus(4)) + &IntPoly::monomial(BigInt::from(2), n + 2)
}

/// `(1+t²ⁿ)(1+t⁴) + 4t^{n+2}`.
pub fn lemma86_family2(n: usize) -> IntPoly {
    &(&one_plus(2 * n) * &one_plus(4)) + &IntPoly::monomial(BigInt::from(4), n + 2)
}

/// Cyclic torus group on a down-up algebra.
pub fn check_example82(n: u64, alpha: Rat, beta: Rat) -> Result<CheckResult, LabError> {
    let ctx = AlgebraCtx::down_up(alpha, beta)?;
    let h = q_group(Family::Q1, n)?;
    let k = n as usize;
    let expected = ratio(
        one_minus(2 * k),
        &one_minus(k).pow(2) * &one_minus(2).pow(2),
    );
    Ok(CheckResult::new(
        "example82",
        &[("n", n as i64)],
        Artifact::Series(expected),
        Artifact::Series(molien(&ctx, &h)?),
    ))
}

/// Torus plus sign flip: the series and the two partial sums over the
/// torus elements.
pub fn check_example83(n: u64) -> Result<Vec<CheckResult>, LabError> {
    let k = n as usize;
    let h = q_group(Family::Q2, n)?;
    let expected = ratio(
        &one_minus(4 * k) * &one_plus(4),
        &one_minus(2 * k).pow(2) * &one_minus(4).pow(2),
    );
    let series = CheckResult::new(
        "example83",
        &[("n", n as i64)],
        Artifact::Series(expected),
        Artifact::Series(molien(&downup(1, 1), &h)?),
    );
    // Sums over i < 2n of 1/((1∓εⁱt)(1-ε⁻ⁱt)) with ε of order 2n.
    let partial = |sign: RootOfUnity| -> Result<RatFunc, LabError> {
        let traces: Vec<TraceFn> = (0..2 * n as i64)
            .map(|i| {
                let e = RootOfUnity::new(2 * n, i);
                TraceFn::inverse_product(&[(1, sign.mul(&e)), (1, e.inv())])
            })
            .collect();
        Ok(average_traces(&traces)?.scale(&rat(2 * n as i64)))
    };
    let two_n = BigInt::from(2 * n);
    let s1_expected = ratio(
        one_minus(4 * k).scale(&two_n),
        &one_minus(2 * k).pow(2) * &one_minus(2),
    );
    let s2_expected = ratio(
        &one_minus(4 * k).scale(&two_n) * &one_minus(2),
        &one_minus(2 * k).pow(2) * &one_minus(4),
    );
    Ok(vec![
        series,
        CheckResult::new(
            "example83.s1",
            &[("n", n as i64)],
            Artifact::Series(s1_expected),
            Artifact::Series(partial(RootOfUnity::one())?),
        ),
        CheckResult::new(
            "example83.s2",
            &[("n", n as i64)],
            Artifact::Series(s2_expected),
            Artifact::Series(partial(RootOfUnity::minus_one())?),
        ),
    ])
}

/// Odd torus plus sign flip: displayed series, cyclotomicity only at
/// `n = 1`, and the alternative form at `n = 1`.
pub fn check_lemma84(n: u64) -> Result<Vec<CheckResult>, LabError> {
    assert!(n % 2 == 1, "odd parameter required");
    let k = n as usize;
    let h = q_group(Family::Q3, n)?;
    let computed = molien(&downup(1, 1), &h)?;
    let expected = ratio(lemma86_family1(k), &one_minus(2 * k) * &one_minus(4).pow(2));
    let params = [("n", n as i64)];
    let cyclotomic = is_cyclotomic_product(computed.num())?.is_some();
    let mut out = vec![
        CheckResult::new(
            "lemma84",
            &params,
            Artifact::Series(expected),
            Artifact::Series(computed.clone()),
        ),
        CheckResult::new(
            "lemma84.cyclotomic",
            &params,
            Artifact::Flag(n == 1),
            Artifact::Flag(cyclotomic),
        ),
    ];
    if n == 1 {
        let alt = ratio(
            one_minus(6),
            &(&(&one_minus(1) * &one_minus(2)) * &one_minus(3)) * &one_minus(4),
        );
        out.push(CheckResult::new(
            "lemma84.alternative",
            &params,
            Artifact::Series(alt),
            Artifact::Series(computed),
        ));
    }
    Ok(out)
}

/// Signed torus: displayed series, non-cyclotomic numerator, and a
/// bireflection subgroup of index 2.
pub fn check_lemma87(n: u64) -> Result<Vec<CheckResult>, LabError> {
    let k = n as usize;
    let ctx = downup(1, -1);
    let h = q_group(Family::Q4, n)?;
    let computed = molien(&ctx, &h)?;
    let numerator = lemma86_family2(2 * k);
    let expected = ratio(
        &one_minus(4 * k) * &numerator,
        &one_minus(4 * k).pow(2) * &one_minus(4).pow(2),
    );
    let params = [("n", n as i64)];
    let sub = bireflection_subgroup(&ctx, &h)?;
    Ok(vec![
        CheckResult::new(
            "lemma87",
            &params,
            Artifact::Series(expected),
            Artifact::Series(computed.clone()),
        ),
        CheckResult::new(
            "lemma87.cyclotomic",
            &params,
            Artifact::Flag(false),
            Artifact::Flag(is_cyclotomic_product(computed.num())?.is_some()),
        ),
        CheckResult::new(
            "lemma87.bireflection_index",
            &params,
            Artifact::Int(2),
            Artifact::Int((h.order() / sub.order()) as i64),
        ),
    ])
}

/// Both polynomial families are non-cyclotomic over their stated ranges;
/// family (1) at `n = 1` is the excluded cyclotomic case.
pub fn sweep_lemma86(max_n: u64) -> Result<Vec<CheckResult>, LabError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let k = n as usize;
        let f1 = is_cyclotomic_product(&lemma86_family1(k))?.is_some();
        out.push(CheckResult::new(
            "lemma86.family1",
            &[("n", n as i64)],
            Artifact::Flag(n == 1),
            Artifact::Flag(f1),
        ));
        let f2 = is_cyclotomic_product(&lemma86_family2(k))?.is_some();
        out.push(CheckResult::new(
            "lemma86.family2",
            &[("n", n as i64)],
            Artifact::Flag(false),
            Artifact::Flag(f2),
        ));
    }
    Ok(out)
}

/// The sign involution on the Jordan plane.
pub fn check_case21() -> Result<Vec<CheckResult>, LabError> {
    let ctx = AlgebraCtx::jordan_plane();
    let h = close_group(&[Mat2::from_ints([[-1, 0], [0, -1]])])?;
    let computed = molien(&ctx, &h)?;
    let expected = ratio(one_minus(4), one_minus(2).pow(3));
    Ok(vec![
        CheckResult::new(
            "case21",
            &[],
            Artifact::Series(expected),
            Artifact::Series(computed.clone()),
        ),
        CheckResult::new(
            "case21.stanley",
            &[],
            Artifact::Flag(true),
            Artifact::Flag(computed.stanley_gorenstein_test().is_some()),
        ),
    ])
}

/// Swap of two pairs of variables of degrees `v` and `w`.
pub fn check_example59(v: usize, w: usize) -> Result<Vec<CheckResult>, LabError> {
    let weights = [v, v, w, w];
    let params = [("v", v as i64), ("w", w as i64)];
    let one = RootOfUnity::one();
    let minus = RootOfUnity::minus_one();
    let sign_change = MonomialMatrix::diagonal(vec![one, one, minus, minus]);
    let pair_swap = MonomialMatrix::new(vec![1, 0, 3, 2], vec![one; 4])?;
    let trace1 = sign_change.trace(&weights)?.to_ratfunc()?;
    let trace2 = pair_swap.trace(&weights)?.to_ratfunc()?;
    let average = polyring_molien(&weights, &[pair_swap])?;
    let expected = ratio(
        one_minus(2 * (v + w)),
        &(&(&(&one_minus(v) * &one_minus(w)) * &one_minus(2 * v)) * &one_minus(2 * w))
            * &one_minus(v + w),
    );
    Ok(vec![
        CheckResult::new(
            "example59",
            &params,
            Artifact::Series(expected),
            Artifact::Series(average),
        ),
        CheckResult::new(
            "example59.trace1",
            &params,
            Artifact::Series(ratio(
                IntPoly::one(),
                &one_minus(v).pow(2) * &one_plus(w).pow(2),
            )),
            Artifact::Series(trace1),
        ),
        CheckResult::new(
            "example59.trace2",
            &params,
            Artifact::Series(ratio(IntPoly::one(), &one_minus(2 * v) * &one_minus(2 * w))),
            Artifact::Series(trace2),
        ),
        CheckResult::new(
            "example59.trivial",
            &params,
            Artifact::Series(ratio(
                IntPoly::one(),
                &one_minus(v).pow(2) * &one_minus(w).pow(2),
            )),
            Artifact::Series(polyring_molien(&weights, &[])?),
        ),
    ])
}

/// `t^{2n} + t^{n+2} + tⁿ + 1`.
pub fn remark85_polynomial(n: usize) -> IntPoly {
    &(&(&t_pow(2 * n) + &t_pow(n + 2)) + &t_pow(n)) + &IntPoly::one()
}

/// Molien series of `⟨diag(ε, ε⁻¹, 1), diag(-1, 1, s)⟩` on `k[x, y, z]`
/// with `ε` of order `n`.
pub fn remark85_series(n: u64, third_sign: RootOfUnity) -> Result<RatFunc, LabError> {
    let eps = RootOfUnity::new(n, 1);
    let one = RootOfUnity::one();
    let gens = [
        MonomialMatrix::diagonal(vec![eps, eps.inv(), one]),
        MonomialMatrix::diagonal(vec![RootOfUnity::minus_one(), one, third_sign]),
    ];
    Ok(polyring_molien(&[1, 1, 1], &gens)?)
}

/// The bireflection group `⟨diag(ε, ε⁻¹, 1), diag(-1, 1, -1)⟩`, `n` odd:
/// its invariant ring is not cyclotomic, and neither is the polynomial
/// `t^{2n} + t^{n+2} + tⁿ + 1`.
///
/// That polynomial is not the reduced numerator for this group (it is not
/// palindromic, while the group lies in `SL₃`). It is the numerator over
/// `(1-t)(1-t⁴)(1-t^{2n})` for the reflection variant with third sign
/// `+1`, which is checked separately.
pub fn check_remark85(n: u64) -> Result<Vec<CheckResult>, LabError> {
    let k = n as usize;
    let series = remark85_series(n, RootOfUnity::minus_one())?;
    let variant = remark85_series(n, RootOfUnity::one())?;
    let variant_den = &(&one_minus(1) * &one_minus(4)) * &one_minus(2 * k);
    let variant_num = RatFunc::from_poly(variant_den).mul(&variant);
    let f = remark85_polynomial(k);
    let params = [("n", n as i64)];
    Ok(vec![
        CheckResult::new(
            "remark85.cyclotomic",
            &params,
            Artifact::Flag(false),
            Artifact::Flag(is_cyclotomic_product(series.num())?.is_some()),
        ),
        CheckResult::new(
            "remark85.displayed_cyclotomic",
            &params,
            Artifact::Flag(false),
            Artifact::Flag(is_cyclotomic_product(&f)?.is_some()),
        ),
        CheckResult::new(
            "remark85.reflection_variant",
            &params,
            Artifact::Series(RatFunc::from_poly(f)),
            Artifact::Series(variant_num),
        ),
    ])
}

/// Expected `(cyclotomic, generated by bireflections)` for each family.
fn table4_expectation(family: Family, n: u64) -> (bool, bool) {
    match family {
        Family::Q3 => (n == 1, true),
        Family::Q4 => (false, false),
        _ => (true, true),
    }
}

/// Cyclotomic and bireflection columns for every family. The first four
/// families act on `A(1, 1)`; the rest on `A(3, -1)` and `A(-2, -1)`.
///
/// Parity restrictions in the table are not enforced: families with an
/// "n even" note also run at odd `n`, tagged `in_range = 0`.
pub fn reproduce_table4(max_n: u64) -> Result<Vec<CheckResult>, LabError> {
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
        let algebras: &[(i64, i64)] = match family {
            Family::Q1 | Family::Q2 | Family::Q3 | Family::Q4 => &[(1, 1)],
            _ => &[(3, -1), (-2, -1)],
        };
        for n in 1..=max_n {
            if family == Family::Q3 && n % 2 == 0 {
                continue;
            }
            let in_range = match family {
                Family::Q2 | Family::Q5 | Family::Q7 => n % 2 == 0,
                _ => true,
            };
            let h = q_group(family, n)?;
            for &(a, b) in algebras {
                let ctx = downup(a, b);
                let series = molien(&ctx, &h)?;
                let cyclotomic = is_cyclotomic_product(series.num())?.is_some();
                let generated = generated_by_bireflections(&ctx, &h)?;
                let (ec, eg) = table4_expectation(family, n);
                let render = |c: bool, g: bool| {
                    let yn = |x: bool| if x { "yes" } else { "no" };
                    Artifact::Text(format!("cyclotomic={} bireflections={}", yn(c), yn(g)))
                };
                out.push(CheckResult::new(
                    &format!("table4.{}", family.name()),
                    &[
                        ("n", n as i64),
                        ("alpha", a),
                        ("beta", b),
                        ("in_range", in_range as i64),
                    ],
                    render(ec, eg),
                    render(cyclotomic, generated),
                ));
            }
        }
    }
    Ok(out)
}

/// `(degree, sign)` data of one involution on a hypersurface.
pub struct InvolutionDatum {
    pub case: String,
    pub n: Option<u64>,
    pub steps: Vec<(usize, i8)>,
    pub omega: Option<(usize, i8)>,
}

fn datum(
    case: &str,
    n: Option<u64>,
    steps: &[(usize, i8)],
    omega: Option<(usize, i8)>,
) -> InvolutionDatum {
    InvolutionDatum {
        case: case.to_string(),
        n,
        steps: steps.to_vec(),
        omega,
    }
}

/// The involutions induced on the invariant hypersurfaces of the cyclic,
/// dihedral and exceptional cases.
pub fn involution_data(
    a_range: std::ops::RangeInclusive<u64>,
    d_range: std::ops::RangeInclusive<u64>,
) -> Vec<InvolutionDatum> {
    let mut out = Vec::new();
    for n in a_range {
        let k = n as usize;
        out.push(datum("A1", Some(n), &[(1, -1), (1, 1)], None));
        out.push(datum(
            "A2",
            Some(n),
            &[(2 * k, 1), (2 * k, 1), (2, -1)],
            Some((4 * k, 1)),
        ));
        if n % 2 == 1 {
            out.push(datum(
                "A3",
                Some(n),
                &[(k, -1), (k, 1), (2, -1)],
                Some((2 * k, -1)),
            ));
        }
        out.push(datum(
            "A4",
            Some(n),
            &[(2 * k, -1), (2 * k, -1), (2, -1)],
            Some((4 * k, 1)),
        ));
        out.push(datum(
            "A5",
            Some(n),
            &[(k, 1), (k, -1), (2, 1)],
            Some((2 * k, 1)),
        ));
    }
    for n in d_range {
        let k = n as usize;
        let steps1 = [(2 * (k - 1), 1), (2 * (k - 2), -1), (4, 1)];
        let steps2 = [(2 * (k - 1), -1), (2 * (k - 2), 1), (4, 1)];
        out.push(datum("D1", Some(n), &steps1, Some((4 * (k - 1), 1))));
        out.push(datum("D2", Some(n), &steps2, Some((4 * (k - 1), 1))));
    }
    out.push(datum(
        "E6.1",
        None,
        &[(12, -1), (8, 1), (6, 1)],
        Some((24, 1)),
    ));
    out.push(datum(
        "E6.2",
        None,
        &[(12, 1), (8, 1), (6, -1)],
        Some((24, 1)),
    ));
    out.push(datum(
        "E7",
        None,
        &[(18, -1), (12, 1), (8, 1)],
        Some((36, 1)),
    ));
    out.push(datum(
        "E8",
        None,
        &[(30, -1), (20, 1), (12, 1)],
        Some((60, 1)),
    ));
    out
}

fn sign_root(s: i8) -> RootOfUnity {
    if s < 0 {
        RootOfUnity::minus_one()
    } else {
        RootOfUnity::one()
    }
}

/// Homological determinant `-1` for every involution datum, read off the
/// expanded trace of the two-dimensional invariant ring.
pub fn check_table2_hdet(
    a_range: std::ops::RangeInclusive<u64>,
    d_range: std::ops::RangeInclusive<u64>,
) -> Result<Vec<CheckResult>, LabError> {
    let mut out = Vec::new();
    for d in involution_data(a_range, d_range) {
        let steps: Vec<_> = d.steps.iter().map(|&(k, s)| (k, sign_root(s))).collect();
        let omegas: Vec<_> = d.omega.iter().map(|&(k, s)| (k, sign_root(s))).collect();
        let tr = hypersurface_trace(&steps, &omegas).to_ratfunc()?;
        let hdet = hdet_from_trace(&tr, 2)?;
        let params: Vec<(&str, i64)> = d.n.map(|n| ("n", n as i64)).into_iter().collect();
        out.push(CheckResult::new(
            &format!("table2.{}", d.case),
            &params,
            Artifact::Text(CycNum::from_int(-1).to_string()),
            Artifact::Text(hdet.value.to_string()),
        ));
    }
    Ok(out)
}

pub const SUITES: &[&str] = &[
    "example82",
    "example83",
    "lemma84",
    "lemma87",
    "lemma86",
    "case21",
    "example59",
    "remark85",
    "table4",
    "table2",
];

/// Runs a named suite (or `all`). `max_n` replaces the default upper bound
/// of every parameter sweep.
pub fn run_suite(name: &str, max_n: Option<u64>) -> Result<Vec<CheckResult>, LabError> {
    let bound = |default: u64| max_n.unwrap_or(default);
    let mut out = Vec::new();
    match name {
        "all" => {
            for s in SUITES {
                out.extend(run_suite(s, max_n)?);
            }
        }
        "example82" => {
            for n in 2..=bound(10) {
                out.push(check_example82(n, rat(1), rat(1))?);
            }
            out.push(check_example82(5, rat(0), rat(2))?);
        }
        "example83" => {
            for n in 1..=bound(6) {
                out.extend(check_example83(n)?);
            }
        }
        "lemma84" => {
            for n in (1..=bound(21)).step_by(2) {
                out.extend(check_lemma84(n)?);
            }
        }
        "lemma87" => {
            for n in 1..=bound(10) {
                out.extend(check_lemma87(n)?);
            }
        }
        "lemma86" => out.extend(sweep_lemma86(bound(60))?),
        "case21" => out.extend(check_case21()?),
        "example59" => {
            for (v, w) in [(1, 1), (1, 2), (2, 3)] {
                out.extend(check_example59(v, w)?);
            }
        }
        "remark85" => {
            for n in (3..=bound(21)).step_by(2) {
                out.extend(check_remark85(n)?);
            }
        }
        "table4" => out.extend(reproduce_table4(bound(8))?),
        "table2" => {
            let top = max_n.map_or(8, |m| m.max(4));
            out.extend(check_table2_hdet(1..=bound(6), 4..=top)?)
        }
        other => return Err(LabError::UnknownSuite(other.to_string())),
    }
    Ok(out)
}
