//! Trace functions, Molien averages, homological determinants and the
//! reflection structure of finite automorphism groups of down-up algebras,
//! quantum planes and weighted polynomial rings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cycarith::{CycNum, Rat, RootOfUnity};
use crate::matgroup::{classify, close_group, GroupError, GroupLabel, Mat2, MatGroup};
use crate::polyrat::{
    is_cyclotomic_product, CycFactorization, CycMultiset, CycPoly, IntPoly, PolyError, RatFunc,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("beta must be nonzero for a noetherian down-up algebra")]
    DegenerateAlgebra,
    #[error("matrix {0} is not a graded automorphism of this algebra")]
    NotAnAutomorphism(String),
    #[error("automorphism {0} is not supported on this algebra")]
    UnsupportedAutomorphism(String),
    #[error("matrix is not monomial (one nonzero root of unity per row and column)")]
    NonMonomialMatrix,
    #[error("permutation mixes variables of different degrees")]
    InhomogeneousPermutation,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which matrices act as graded automorphisms of a down-up algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AutShape {
    /// All of `GL₂`.
    FullGL2,
    /// Diagonal and antidiagonal matrices.
    U,
    /// Diagonal matrices only.
    O,
}

impl AutShape {
    pub fn admits(&self, g: &Mat2) -> bool {
        match self {
            AutShape::FullGL2 => true,
            AutShape::U => g.is_diagonal() || g.is_antidiagonal(),
            AutShape::O => g.is_diagonal(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    DownUp { alpha: Rat, beta: Rat },
    SkewPlane { q: CycNum },
    JordanPlane,
    WeightedPoly { weights: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraCtx {
    pub kind: AlgebraKind,
    pub gkdim: usize,
}

impl AlgebraCtx {
    pub fn down_up(alpha: Rat, beta: Rat) -> Result<Self, InvariantError> {
        if beta.is_zero() {
            return Err(InvariantError::DegenerateAlgebra);
        }
        Ok(AlgebraCtx {
            kind: AlgebraKind::DownUp { alpha, beta },
            gkdim: 3,
        })
    }

    pub fn skew_plane(q: CycNum) -> Self {
        AlgebraCtx {
            kind: AlgebraKind::SkewPlane { q },
            gkdim: 2,
        }
    }

    pub fn jordan_plane() -> Self {
        AlgebraCtx {
            kind: AlgebraKind::JordanPlane,
            gkdim: 2,
        }
    }

    pub fn weighted_poly(weights: Vec<usize>) -> Self {
        let gkdim = weights.len();
        AlgebraCtx {
            kind: AlgebraKind::WeightedPoly { weights },
            gkdim,
        }
    }

    /// `α² + 4β` for a down-up algebra.
    pub fn discriminant(&self) -> Option<Rat> {
        match &self.kind {
            AlgebraKind::DownUp { alpha, beta } => {
                Some(alpha * alpha + Rat::from_integer(4.into()) * beta)
            }
            _ => None,
        }
    }

    /// Shape of the graded automorphism group; `None` for non-down-up
    /// algebras.
    pub fn aut_shape(&self) -> Option<AutShape> {
        let AlgebraKind::DownUp { alpha, beta } = &self.kind else {
            return None;
        };
        let one = Rat::one();
        let two = Rat::from_integer(2.into());
        Some(
            if (alpha.is_zero() && *beta == one) || (*alpha == two && *beta == -&one) {
                AutShape::FullGL2
            } else if *beta == -one {
                AutShape::U
            } else {
                AutShape::O
            },
        )
    }
}

/// One factor `(1 - ω t^k)^power` of a trace function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceFactor {
    pub root: RootOfUnity,
    pub degree: usize,
    pub power: i32,
}

/// A trace function in factored form `∏ (1 - ω t^k)^{±m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceFn {
    factors: Vec<TraceFactor>,
}

/// Homological determinant read off a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HdetResult {
    pub value: CycNum,
    /// Exponent `l` of the leading Laurent term `c·tˡ` at infinity.
    pub as_index_exponent: i64,
}

impl TraceFn {
    /// Builds `∏ (1 - ω t^k)^power`, merging equal factors.
    pub fn new(factors: impl IntoIterator<Item = TraceFactor>) -> Self {
        let mut merged: BTreeMap<(RootOfUnity, usize), i32> = BTreeMap::new();
        for f in factors {
            *merged.entry((f.root, f.degree)).or_insert(0) += f.power;
        }
        TraceFn {
            factors: merged
                .into_iter()
                .filter(|&(_, p)| p != 0)
                .map(|((root, degree), power)| TraceFactor {
                    root,
                    degree,
                    power,
                })
                .collect(),
        }
    }

    /// `1 / ∏ (1 - λᵢ t^{kᵢ})`.
    pub fn inverse_product(steps: &[(usize, RootOfUnity)]) -> Self {
        Self::new(steps.iter().map(|&(degree, root)| TraceFactor {
            root,
            degree,
            power: -1,
        }))
    }

    pub fn factors(&self) -> &[TraceFactor] {
        &self.factors
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.factors.iter().chain(&other.factors).copied())
    }

    /// Order of the pole at `t = 1`: only factors with `ω = 1` vanish there.
    pub fn pole_order_at_one(&self) -> i64 {
        -self
            .factors
            .iter()
            .filter(|f| f.root.is_one())
            .map(|f| f.power as i64)
            .sum::<i64>()
    }

    /// Leading term `c·tˡ` at infinity; each factor contributes `(-ω t^k)^power`.
    pub fn laurent_leading_at_infinity(&self) -> (i64, RootOfUnity) {
        self.factors
            .iter()
            .fold((0, RootOfUnity::one()), |(e, c), f| {
                let neg = f.root.mul(&RootOfUnity::minus_one());
                (
                    e + f.power as i64 * f.degree as i64,
                    c.mul(&neg.pow(f.power as i64)),
                )
            })
    }

    /// `hdet = (-1)^d / c` for the leading coefficient `c` at infinity.
    pub fn hdet(&self, gkdim: usize) -> HdetResult {
        let (l, c) = self.laurent_leading_at_infinity();
        let sign = RootOfUnity::minus_one().pow(gkdim as i64);
        HdetResult {
            value: sign.mul(&c.inv()).to_cyc(),
            as_index_exponent: l,
        }
    }

    /// Expands to a rational function with integer coefficients, if the
    /// factors are closed under the relevant Galois conjugation.
    pub fn to_ratfunc(&self) -> Result<RatFunc, PolyError> {
        average_traces(std::slice::from_ref(self))
    }

    fn period(&self) -> u64 {
        self.factors
            .iter()
            .fold(1, |acc, f| acc.lcm(&f.root.order()))
    }

    /// Numerator over `ℤ[ζ_N]` and denominator of the form
    /// `sign·∏(t^K - 1)` after replacing each `1 - ωt^k` in the denominator
    /// by `1 - t^{k·ord ω}` and compensating in the numerator.
    fn lift(&self, n: u64) -> Result<(CycPoly, CycMultiset, bool), PolyError> {
        let mut num = CycPoly::one(n);
        let mut den = CycMultiset::default();
        let mut negate = false;
        for f in &self.factors {
            if f.power > 0 {
                let terms = [(0, RootOfUnity::one(), 1), (f.degree, f.root, -1)];
                for _ in 0..f.power {
                    num = num.mul_terms(&terms)?;
                }
            } else {
                let r = f.root.order();
                let terms: Vec<_> = (0..r)
                    .map(|j| (f.degree * j as usize, f.root.pow(j as i64), 1))
                    .collect();
                let lifted = CycMultiset::of_t_pow_minus_one(f.degree as u64 * r);
                for _ in 0..-f.power {
                    num = num.mul_terms(&terms)?;
                    den.add(&lifted, 1);
                    negate = !negate;
                }
            }
        }
        Ok((num, den, negate))
    }
}

impl fmt::Display for TraceFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |fs: Vec<&TraceFactor>| -> String {
            if fs.is_empty() {
                return "1".into();
            }
            fs.iter()
                .map(|x| {
                    let root = if x.root.is_one() {
                        String::new()
                    } else {
                        format!("{}*", x.root.to_cyc())
                    };
                    let p = x.power.unsigned_abs();
                    let base = format!("(1 - {root}t^{})", x.degree);
                    if p == 1 {
                        base
                    } else {
                        format!("{base}^{p}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let num = render(self.factors.iter().filter(|x| x.power > 0).collect());
        let den = render(self.factors.iter().filter(|x| x.power < 0).collect());
        write!(f, "{num} / ({den})")
    }
}

/// `(1/m) Σ traces` as a reduced rational function, where `m` is the
/// number of traces.
///
/// Traces sharing a lifted denominator are summed first; each class is then
/// brought over the least common cyclotomic denominator, and the total must
/// collapse to rational coefficients.
pub fn average_traces(traces: &[TraceFn]) -> Result<RatFunc, PolyError> {
    if traces.is_empty() {
        return Ok(RatFunc::zero());
    }
    let n = traces.iter().fold(1u64, |acc, t| acc.lcm(&t.period()));
    let mut counts: HashMap<&TraceFn, i128> = HashMap::new();
    for t in traces {
        *counts.entry(t).or_insert(0) += 1;
    }
    let mut classes: BTreeMap<Vec<(u64, u32)>, (CycMultiset, CycPoly)> = BTreeMap::new();
    for (t, count) in counts {
        let (num, den, negate) = t.lift(n)?;
        let c = if negate { -count } else { count };
        let num = num.mul_terms(&[(0, RootOfUnity::one(), c)])?;
        let key: Vec<(u64, u32)> = den.0.iter().map(|(&d, &m)| (d, m)).collect();
        match classes.get_mut(&key) {
            Some((_, acc)) => acc.add_assign(&num)?,
            None => {
                classes.insert(key, (den, num));
            }
        }
    }
    let mut common = CycMultiset::default();
    for (den, _) in classes.values() {
        common.lcm_with(den);
    }
    let mut total = CycPoly::zero(n);
    for (den, num) in classes.values() {
        total.add_assign(&num.mul_int(&common.quotient(den).expand())?)?;
    }
    let size = Rat::from_integer((traces.len() as i64).into());
    let coeffs: Vec<Rat> = total.collapse()?.into_iter().map(|c| c / &size).collect();
    Ok(RatFunc::from_rat_num_over_cyclotomics(&coeffs, &common, 1))
}

fn root_of(x: &CycNum, g: &Mat2) -> Result<RootOfUnity, InvariantError> {
    x.as_root_of_unity()
        .ok_or_else(|| InvariantError::UnsupportedAutomorphism(g.to_string()))
}

/// Trace of `g` on a down-up algebra: `1/((1-λt)(1-μt)(1-λμt²))` for the
/// eigenvalues `λ, μ` of `g`.
pub fn downup_trace(ctx: &AlgebraCtx, g: &Mat2) -> Result<TraceFn, InvariantError> {
    let shape = ctx
        .aut_shape()
        .ok_or_else(|| InvariantError::UnsupportedAutomorphism(g.to_string()))?;
    if !shape.admits(g) {
        return Err(InvariantError::NotAnAutomorphism(g.to_string()));
    }
    let (l, m) = g.eigen_roots()?;
    Ok(TraceFn::inverse_product(&[(1, l), (1, m), (2, l.mul(&m))]))
}

/// Trace of `g` on the skew plane `k_q[x,y]` or on the Jordan plane.
pub fn plane_trace(ctx: &AlgebraCtx, g: &Mat2) -> Result<TraceFn, InvariantError> {
    let unsupported = || InvariantError::UnsupportedAutomorphism(g.to_string());
    match &ctx.kind {
        AlgebraKind::SkewPlane { q } => {
            if g.is_diagonal() {
                let a = root_of(g.entry(0, 0), g)?;
                let b = root_of(g.entry(1, 1), g)?;
                Ok(TraceFn::inverse_product(&[(1, a), (1, b)]))
            } else if q.is_one() {
                let (a, b) = g.eigen_roots()?;
                Ok(TraceFn::inverse_product(&[(1, a), (1, b)]))
            } else if *q == CycNum::from_int(-1) && g.is_antidiagonal() {
                // x ↦ by, y ↦ cx: only x^i y^i contributes, with (-bc)^i.
                let bc = root_of(&(g.entry(0, 1) * g.entry(1, 0)), g)?;
                Ok(TraceFn::inverse_product(&[(
                    2,
                    bc.mul(&RootOfUnity::minus_one()),
                )]))
            } else {
                Err(unsupported())
            }
        }
        AlgebraKind::JordanPlane => {
            if g.is_diagonal() && g.entry(0, 0) == g.entry(1, 1) {
                let a = root_of(g.entry(0, 0), g)?;
                Ok(TraceFn::inverse_product(&[(1, a), (1, a)]))
            } else {
                Err(unsupported())
            }
        }
        _ => Err(unsupported()),
    }
}

/// Trace on an algebra with a normal regular sequence of eigenvectors of
/// the given degrees and eigenvalues.
pub fn normal_sequence_trace(steps: &[(usize, RootOfUnity)]) -> TraceFn {
    TraceFn::inverse_product(steps)
}

/// Trace on the quotient by normal regular elements `Ω` of the given degrees
/// and eigenvalues: the normal-sequence trace times `∏(1 - λ_Ω t^{deg Ω})`.
pub fn hypersurface_trace(
    steps: &[(usize, RootOfUnity)],
    omegas: &[(usize, RootOfUnity)],
) -> TraceFn {
    normal_sequence_trace(steps).mul(&TraceFn::new(omegas.iter().map(|&(degree, root)| {
        TraceFactor {
            root,
            degree,
            power: 1,
        }
    })))
}

/// Homological determinant of `g` acting on a down-up algebra: `(det g)²`.
pub fn hdet_matrix(g: &Mat2) -> CycNum {
    let d = g.det();
    &d * &d
}

/// `hdet = (-1)^d / c` from the leading term `c·tˡ` of `tr` at infinity.
pub fn hdet_from_trace(tr: &RatFunc, gkdim: usize) -> Result<HdetResult, PolyError> {
    let (l, c) = tr.laurent_leading_at_infinity()?;
    let sign = if gkdim.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    };
    Ok(HdetResult {
        value: CycNum::from_rat(sign / c),
        as_index_exponent: l,
    })
}

/// Trace of `g` on whichever algebra `ctx` describes.
pub fn trace_of(ctx: &AlgebraCtx, g: &Mat2) -> Result<TraceFn, InvariantError> {
    match &ctx.kind {
        AlgebraKind::DownUp { .. } => downup_trace(ctx, g),
        AlgebraKind::SkewPlane { .. } | AlgebraKind::JordanPlane => plane_trace(ctx, g),
        AlgebraKind::WeightedPoly { weights } => {
            let entries = (0..2)
                .map(|r| (0..2).map(|c| g.entry(r, c).clone()).collect())
                .collect::<Vec<_>>();
            MonomialMatrix::from_rows(&entries)?.trace(weights)
        }
    }
}

/// Hilbert series of the fixed subring: the group average of traces.
pub fn molien(ctx: &AlgebraCtx, h: &MatGroup) -> Result<RatFunc, InvariantError> {
    let traces = h
        .elements()
        .iter()
        .map(|g| trace_of(ctx, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(average_traces(&traces)?)
}

/// Trace has a pole of order `gkdim - 1` at `t = 1`.
pub fn is_quasi_reflection(ctx: &AlgebraCtx, g: &Mat2) -> Result<bool, InvariantError> {
    Ok(trace_of(ctx, g)?.pole_order_at_one() == ctx.gkdim as i64 - 1)
}

/// Trace has a pole of order `gkdim - 2` at `t = 1`; unless `strict`,
/// quasi-reflections (order `gkdim - 1`) count as well.
pub fn is_bireflection(ctx: &AlgebraCtx, g: &Mat2, strict: bool) -> Result<bool, InvariantError> {
    let p = trace_of(ctx, g)?.pole_order_at_one();
    let d = ctx.gkdim as i64;
    Ok(p == d - 2 || (!strict && p == d - 1))
}

/// Matrix criterion for down-up algebras: `det g = 1` or `g` has
/// eigenvalue 1, for `g ≠ 𝕀`.
pub fn downup_bireflection_by_matrix(g: &Mat2) -> Result<bool, InvariantError> {
    if g.is_identity() {
        return Ok(false);
    }
    let (a, b) = g.eigen_roots()?;
    Ok(g.det().is_one() || a.is_one() || b.is_one())
}

/// Non-identity elements of `H` that are bireflections.
pub fn bireflections(ctx: &AlgebraCtx, h: &MatGroup) -> Result<Vec<Mat2>, InvariantError> {
    let mut out = Vec::new();
    for g in h.elements() {
        if !g.is_identity() && is_bireflection(ctx, g, false)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// Subgroup generated by the bireflections of `H`.
pub fn bireflection_subgroup(ctx: &AlgebraCtx, h: &MatGroup) -> Result<MatGroup, InvariantError> {
    Ok(close_group(&bireflections(ctx, h)?)?)
}

pub fn generated_by_bireflections(ctx: &AlgebraCtx, h: &MatGroup) -> Result<bool, InvariantError> {
    Ok(bireflection_subgroup(ctx, h)?.order() == h.order())
}

/// Everything needed to compare the two computable conditions of the
/// down-up invariant theory equivalence: `C3` (cyclotomic Gorenstein) and
/// `C2` (`C3` plus generation by bireflections).
#[derive(Clone, Debug)]
pub struct Theorem03Report {
    pub algebra: AlgebraCtx,
    pub aut_shape: AutShape,
    pub generators: Vec<Mat2>,
    pub group_order: usize,
    pub group_label: GroupLabel,
    pub hdet_trivial: bool,
    pub gorenstein_by_hdet: bool,
    pub gorenstein_by_stanley: bool,
    /// Exponent `l` of `H(1/t) = ±tˡH(t)` when the functional equation holds.
    pub as_index: Option<i64>,
    pub hilbert_series: RatFunc,
    pub cyclotomic: bool,
    pub cyclotomic_factors: Option<CycFactorization>,
    pub noncyclotomic_witness: Option<IntPoly>,
    pub bireflection_count: usize,
    pub generated_by_bireflections: bool,
    pub c2: bool,
    pub c3: bool,
    pub consistent: bool,
}

impl Theorem03Report {
    /// The two Gorenstein criteria agree.
    pub fn gorenstein_agrees(&self) -> bool {
        self.gorenstein_by_hdet == self.gorenstein_by_stanley
    }
}

pub fn theorem03_report(
    alpha: Rat,
    beta: Rat,
    generators: &[Mat2],
) -> Result<Theorem03Report, InvariantError> {
    let ctx = AlgebraCtx::down_up(alpha, beta)?;
    let shape = ctx.aut_shape().expect("down-up algebra");
    if let Some(g) = generators.iter().find(|g| !shape.admits(g)) {
        return Err(InvariantError::NotAnAutomorphism(g.to_string()));
    }
    let h = close_group(generators)?;
    let group_label = classify(&h)?;
    let hilbert_series = molien(&ctx, &h)?;
    let hdet_trivial = h.elements().iter().all(|g| hdet_matrix(g).is_one());
    let stanley = hilbert_series.stanley_gorenstein_test();
    let cyclotomic_factors = is_cyclotomic_product(hilbert_series.num())?;
    let cyclotomic = cyclotomic_factors.is_some();
    let bireflection_list = bireflections(&ctx, &h)?;
    let generated = close_group(&bireflection_list)?.order() == h.order();
    let c3 = hdet_trivial && cyclotomic;
    let c2 = c3 && generated;
    Ok(Theorem03Report {
        aut_shape: shape,
        generators: generators.to_vec(),
        group_order: h.order(),
        group_label,
        hdet_trivial,
        gorenstein_by_hdet: hdet_trivial,
        gorenstein_by_stanley: stanley.is_some(),
        as_index: stanley.map(|(_, l)| l),
        noncyclotomic_witness: (!cyclotomic).then(|| hilbert_series.num().clone()),
        hilbert_series,
        cyclotomic,
        cyclotomic_factors,
        bireflection_count: bireflection_list.len(),
        generated_by_bireflections: generated,
        c2,
        c3,
        consistent: c2 == c3,
        algebra: ctx,
    })
}

/// An invertible matrix with one nonzero entry, a root of unity, in each
/// row and column: column `j` is `scalars[j]·e_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    scalars: Vec<RootOfUnity>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, scalars: Vec<RootOfUnity>) -> Result<Self, InvariantError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(InvariantError::NonMonomialMatrix);
            }
        }
        if scalars.len() != n {
            return Err(InvariantError::NonMonomialMatrix);
        }
        Ok(MonomialMatrix { perm, scalars })
    }

    pub fn diagonal(scalars: Vec<RootOfUnity>) -> Self {
        MonomialMatrix {
            perm: (0..scalars.len()).collect(),
            scalars,
        }
    }

    /// Reads a square matrix given by rows.
    pub fn from_rows(rows: &[Vec<CycNum>]) -> Result<Self, InvariantError> {
        let n = rows.len();
        let mut perm = vec![usize::MAX; n];
        let mut scalars = vec![RootOfUnity::one(); n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(InvariantError::NonMonomialMatrix);
            }
            let nonzero: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
            let [j] = nonzero[..] else {
                return Err(InvariantError::NonMonomialMatrix);
            };
            perm[j] = i;
            scalars[j] = row[j]
                .as_root_of_unity()
                .ok_or(InvariantError::Group(GroupError::InfiniteOrderSuspected))?;
        }
        Self::new(perm, scalars)
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![RootOfUnity::one(); n])
    }

    /// `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        // (AB)e_j = A(s_j e_{p_j}) = s_j·a_{p_j} e_{q(p_j)}.
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let scalars = other
            .perm
            .iter()
            .zip(&other.scalars)
            .map(|(&p, s)| s.mul(&self.scalars[p]))
            .collect();
        MonomialMatrix { perm, scalars }
    }

    /// `∏_cycles 1/(1 - p_c t^{L·w})` where a cycle of length `L` through
    /// variables of degree `w` has scalar product `p_c`.
    pub fn trace(&self, weights: &[usize]) -> Result<TraceFn, InvariantError> {
        assert_eq!(weights.len(), self.size(), "one weight per variable");
        let mut visited = vec![false; self.size()];
        let mut steps = Vec::new();
        for start in 0..self.size() {
            if visited[start] {
                continue;
            }
            let (mut j, mut len, mut prod) = (start, 0usize, RootOfUnity::one());
            while !visited[j] {
                visited[j] = true;
                if weights[j] != weights[start] {
                    return Err(InvariantError::InhomogeneousPermutation);
                }
                prod = prod.mul(&self.scalars[j]);
                len += 1;
                j = self.perm[j];
            }
            steps.push((len * weights[start], prod));
        }
        Ok(TraceFn::inverse_product(&steps))
    }
}

/// Closes a set of monomial matrices into a group.
pub fn close_monomial_group(
    gens: &[MonomialMatrix],
) -> Result<Vec<MonomialMatrix>, InvariantError> {
    let n = gens.first().map_or(0, MonomialMatrix::size);
    let id = MonomialMatrix::identity(n);
    let mut seen: HashMap<MonomialMatrix, ()> = HashMap::from([(id.clone(), ())]);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for g in gens {
            let p = current.compose(g);
            if seen.insert(p.clone(), ()).is_none() {
                if elements.len() >= crate::matgroup::CLOSURE_CAP {
                    return Err(GroupError::GroupTooLarge.into());
                }
                elements.push(p);
            }
        }
    }
    Ok(elements)
}

/// Molien series of the group generated by monomial matrices acting on a
/// polynomial ring with the given variable degrees.
pub fn polyring_molien(
    weights: &[usize],
    gens: &[MonomialMatrix],
) -> Result<RatFunc, InvariantError> {
    let elements = if gens.is_empty() {
        vec![MonomialMatrix::identity(weights.len())]
    } else {
        close_monomial_group(gens)?
    };
    let traces = elements
        .iter()
        .map(|g| g.trace(weights))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(average_traces(&traces)?)
}
