//! 2×2 matrices over cyclotomic fields, closure of finite groups from
//! generators, and recognition of the standard finite subgroups of `GL₂`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycarith::{CycError, CycNum, Rat, RootOfUnity};

/// Maximum number of elements a closed group may have.
pub const CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group closure exceeded {CLOSURE_CAP} elements")]
    GroupTooLarge,
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("element does not return to the identity within {CLOSURE_CAP} powers")]
    InfiniteOrderSuspected,
    #[error(transparent)]
    Arithmetic(#[from] CycError),
}

/// `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    e: [CycNum; 4],
}

impl Mat2 {
    pub fn new(a11: CycNum, a12: CycNum, a21: CycNum, a22: CycNum) -> Self {
        Mat2 {
            e: [a11, a12, a21, a22],
        }
    }

    pub fn from_ints(a: [[i64; 2]; 2]) -> Self {
        Self::new(
            CycNum::from_int(a[0][0]),
            CycNum::from_int(a[0][1]),
            CycNum::from_int(a[1][0]),
            CycNum::from_int(a[1][1]),
        )
    }

    pub fn diag(a: CycNum, b: CycNum) -> Self {
        Self::new(a, CycNum::zero(), CycNum::zero(), b)
    }

    pub fn antidiag(b: CycNum, c: CycNum) -> Self {
        Self::new(CycNum::zero(), b, c, CycNum::zero())
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    /// `[[0,1],[1,0]]`, swapping the two coordinates.
    pub fn swap() -> Self {
        Self::from_ints([[0, 1], [1, 0]])
    }

    /// `[[0,1],[-1,0]]`, a quarter turn of determinant 1.
    pub fn quarter_turn() -> Self {
        Self::from_ints([[0, 1], [-1, 0]])
    }

    /// `[[0,-1],[1,0]]`, the inverse quarter turn.
    pub fn quarter_turn_inv() -> Self {
        Self::from_ints([[0, -1], [1, 0]])
    }

    /// `diag(-1, 1)`.
    pub fn flip_first() -> Self {
        Self::from_ints([[-1, 0], [0, 1]])
    }

    /// `diag(1, -1)`.
    pub fn flip_second() -> Self {
        Self::from_ints([[1, 0], [0, -1]])
    }

    /// `diag(ε, ε⁻¹)` for a root of unity `ε`.
    pub fn torus(eps: RootOfUnity) -> Self {
        Self::diag(eps.to_cyc(), eps.inv().to_cyc())
    }

    /// `diag(-ε, ε⁻¹)`.
    pub fn signed_torus(eps: RootOfUnity) -> Self {
        Self::diag(-eps.to_cyc(), eps.inv().to_cyc())
    }

    /// `diag(ζ_n, ζ_n⁻¹)`.
    pub fn torus_primitive(n: u64) -> Self {
        Self::torus(RootOfUnity::new(n, 1))
    }

    /// `diag(-ζ_n, ζ_n⁻¹)`.
    pub fn signed_torus_primitive(n: u64) -> Self {
        Self::signed_torus(RootOfUnity::new(n, 1))
    }

    pub fn entry(&self, row: usize, col: usize) -> &CycNum {
        &self.e[2 * row + col]
    }

    pub fn entries(&self) -> &[CycNum; 4] {
        &self.e
    }

    /// Least common conductor of the entries.
    pub fn conductor(&self) -> u64 {
        self.e.iter().fold(1, |acc, x| acc.lcm(&x.conductor()))
    }

    pub fn promote(&self, n: u64) -> Result<Self, CycError> {
        let [a, b, c, d] = &self.e;
        Ok(Self::new(
            a.promote(n)?,
            b.promote(n)?,
            c.promote(n)?,
            d.promote(n)?,
        ))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, CycError> {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Ok(Self::new(
            a.try_mul(p)?.try_add(&b.try_mul(r)?)?,
            a.try_mul(q)?.try_add(&b.try_mul(s)?)?,
            c.try_mul(p)?.try_add(&d.try_mul(r)?)?,
            c.try_mul(q)?.try_add(&d.try_mul(s)?)?,
        ))
    }

    pub fn det(&self) -> CycNum {
        let [a, b, c, d] = &self.e;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> CycNum {
        &self.e[0] + &self.e[3]
    }

    pub fn inverse(&self) -> Result<Self, CycError> {
        let inv_det = self.det().inv()?;
        let [a, b, c, d] = &self.e;
        Ok(Self::new(
            d * &inv_det,
            &(-b) * &inv_det,
            &(-c) * &inv_det,
            a * &inv_det,
        ))
    }

    pub fn pow(&self, k: i64) -> Result<Self, CycError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.e[0].is_one() && self.e[3].is_one()
    }

    pub fn is_diagonal(&self) -> bool {
        self.e[1].is_zero() && self.e[2].is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.e[0].is_zero() && self.e[3].is_zero()
    }

    /// Multiplicative order. Diagonal and antidiagonal matrices are read
    /// off their entries; anything else is multiplied out.
    pub fn order(&self) -> Result<u64, GroupError> {
        if let Some((a, b)) = self.monomial_roots()? {
            return Ok(if self.is_diagonal() {
                a.order().lcm(&b.order())
            } else {
                // g² = (bc)·𝕀 and odd powers stay antidiagonal.
                2 * a.mul(&b).order()
            });
        }
        if self.det().root_of_unity_order().is_none() {
            return Err(GroupError::InfiniteOrderSuspected);
        }
        let mut acc = self.clone();
        for k in 1..=CLOSURE_CAP as u64 {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.try_mul(self)?;
        }
        Err(GroupError::InfiniteOrderSuspected)
    }

    // The two nonzero entries of a diagonal or antidiagonal matrix as roots
    // of unity; `None` for other shapes.
    fn monomial_roots(&self) -> Result<Option<(RootOfUnity, RootOfUnity)>, GroupError> {
        let (x, y) = if self.is_diagonal() {
            (&self.e[0], &self.e[3])
        } else if self.is_antidiagonal() {
            (&self.e[1], &self.e[2])
        } else {
            return Ok(None);
        };
        match (x.as_root_of_unity(), y.as_root_of_unity()) {
            (Some(a), Some(b)) => Ok(Some((a, b))),
            _ => Err(GroupError::InfiniteOrderSuspected),
        }
    }

    /// The two eigenvalues as roots of unity, smaller exponent of `ζ_m`
    /// first where `m` is the order of the matrix.
    ///
    /// Candidates `λ = ζ_mᵏ` are tried in increasing `k` until
    /// `λ + det/λ = trace`.
    pub fn eigen_roots(&self) -> Result<(RootOfUnity, RootOfUnity), GroupError> {
        let m = self.order()?;
        if let Some((a, b)) = self.monomial_roots()? {
            let (lam, mu) = if self.is_diagonal() {
                (a, b)
            } else {
                // λ² = bc and μ = -λ.
                let bc = a.mul(&b);
                let lam = RootOfUnity::new(2 * bc.order(), bc.exp() as i64);
                (lam, lam.mul(&RootOfUnity::minus_one()))
            };
            return Ok(if lam.exponent_in(m) <= mu.exponent_in(m) {
                (lam, mu)
            } else {
                (mu, lam)
            });
        }
        let det = self
            .det()
            .as_root_of_unity()
            .ok_or(GroupError::InfiniteOrderSuspected)?;
        let trace = self.trace();
        for k in 0..m {
            let lam = RootOfUnity::new(m, k as i64);
            let mu = det.mul(&lam.inv());
            if lam.to_cyc().try_add(&mu.to_cyc())? == trace {
                return Ok((lam, mu));
            }
        }
        // Unreachable for matrices of finite order over a field of
        // characteristic zero (they are diagonalizable).
        Err(GroupError::InfiniteOrderSuspected)
    }

    pub fn eigenvalues(&self) -> Result<(CycNum, CycNum), GroupError> {
        let (a, b) = self.eigen_roots()?;
        Ok((a.to_cyc(), b.to_cyc()))
    }

    fn key(&self) -> Vec<Rat> {
        self.e
            .iter()
            .flat_map(|x| x.coeffs().iter().cloned())
            .collect()
    }
}

impl std::ops::Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.try_mul(rhs)
            .expect("conductor overflow in matrix product")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// A finite matrix group with its elements in breadth-first discovery order.
#[derive(Clone, Debug)]
pub struct MatGroup {
    elements: Vec<Mat2>,
    generators: Vec<Mat2>,
    conductor: u64,
}

impl MatGroup {
    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Common conductor of every entry of every element.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn contains(&self, g: &Mat2) -> bool {
        self.elements.iter().any(|h| h == g)
    }

    pub fn is_in_sl2(&self) -> bool {
        self.elements.iter().all(|g| g.det().is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.elements.iter().all(Mat2::is_diagonal)
    }

    /// Every element diagonal or antidiagonal.
    pub fn is_monomial(&self) -> bool {
        self.elements
            .iter()
            .all(|g| g.is_diagonal() || g.is_antidiagonal())
    }

    pub fn is_cyclic(&self) -> Result<bool, GroupError> {
        let n = self.order() as u64;
        for g in &self.elements {
            if g.order()? == n {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Subgroup of the elements satisfying `keep`; the caller guarantees
    /// the subset is closed.
    fn filtered(&self, keep: impl Fn(&Mat2) -> bool) -> MatGroup {
        let elements: Vec<Mat2> = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        MatGroup {
            generators: elements.clone(),
            elements,
            conductor: self.conductor,
        }
    }
}

/// Closes the generators under multiplication, breadth first from the
/// identity. The empty generator list gives the trivial group.
pub fn close_group(generators: &[Mat2]) -> Result<MatGroup, GroupError> {
    let conductor = generators
        .iter()
        .fold(1u64, |acc, g| acc.lcm(&g.conductor()));
    let mut gens = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if g.det().is_zero() {
            return Err(GroupError::SingularGenerator(i));
        }
        g.order()?;
        gens.push(g.promote(conductor)?);
    }
    let id = Mat2::identity().promote(conductor)?;
    let mut seen: HashMap<Vec<Rat>, ()> = HashMap::new();
    seen.insert(id.key(), ());
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for g in &gens {
            let p = current.try_mul(g)?;
            if seen.insert(p.key(), ()).is_none() {
                if elements.len() >= CLOSURE_CAP {
                    return Err(GroupError::GroupTooLarge);
                }
                elements.push(p);
            }
        }
    }
    Ok(MatGroup {
        elements,
        generators: generators.to_vec(),
        conductor,
    })
}

/// Distinct determinants, in order of first appearance.
pub fn det_values(h: &MatGroup) -> Vec<CycNum> {
    let mut out: Vec<CycNum> = Vec::new();
    for g in h.elements() {
        let d = g.det();
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// `{g ∈ H : det g = 1}`.
pub fn sl2_part(h: &MatGroup) -> MatGroup {
    h.filtered(|g| g.det().is_one())
}

/// Whether the determinant maps `H` onto exactly `{1, -1}`.
pub fn det_image_is_sign(h: &MatGroup) -> bool {
    let dets = det_values(h);
    dets.len() == 2 && dets.contains(&CycNum::one()) && dets.contains(&CycNum::from_int(-1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
    Q6,
    Q7,
    Q8,
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// Cyclic-kernel extension types one through five.
    TypeA(u8),
    Dihedral,
    Unrecognized,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Q1 => "Q1".into(),
            Family::Q2 => "Q2".into(),
            Family::Q3 => "Q3".into(),
            Family::Q4 => "Q4".into(),
            Family::Q5 => "Q5".into(),
            Family::Q6 => "Q6".into(),
            Family::Q7 => "Q7".into(),
            Family::Q8 => "Q8".into(),
            Family::Cyclic => "C_n".into(),
            Family::BinaryDihedral => "BD_4n".into(),
            Family::BinaryTetrahedral => "BT_24".into(),
            Family::BinaryOctahedral => "BO_48".into(),
            Family::BinaryIcosahedral => "BI_120".into(),
            Family::TypeA(k) => format!("A_{{n,{k}}}"),
            Family::Dihedral => "D_2n".into(),
            Family::Unrecognized => "Unrecognized".into(),
        }
    }

    fn is_q(&self) -> bool {
        matches!(
            self,
            Family::Q1
                | Family::Q2
                | Family::Q3
                | Family::Q4
                | Family::Q5
                | Family::Q6
                | Family::Q7
                | Family::Q8
        )
    }

    fn is_sl2_type(&self) -> bool {
        matches!(
            self,
            Family::Cyclic
                | Family::BinaryDihedral
                | Family::BinaryTetrahedral
                | Family::BinaryOctahedral
                | Family::BinaryIcosahedral
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMatch {
    pub family: Family,
    pub parameter: Option<u64>,
}

impl fmt::Display for LabelMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(n) => write!(f, "{}(n={n})", self.family.name()),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupLabel {
    pub family: Family,
    pub parameter: Option<u64>,
    pub all_matches: Vec<LabelMatch>,
}

impl GroupLabel {
    pub fn primary(&self) -> LabelMatch {
        LabelMatch {
            family: self.family,
            parameter: self.parameter,
        }
    }

    pub fn has(&self, family: Family) -> bool {
        self.all_matches.iter().any(|m| m.family == family)
    }

    pub fn parameter_of(&self, family: Family) -> Option<u64> {
        self.all_matches
            .iter()
            .find(|m| m.family == family)
            .and_then(|m| m.parameter)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.primary())
    }
}

/// Which of the diagonal families a diagonal group belongs to, with its
/// parameter.
fn diagonal_type(h: &MatGroup) -> Result<Option<(Family, u64)>, GroupError> {
    let order = h.order() as u64;
    if h.is_in_sl2() {
        return Ok(Some((Family::Q1, order)));
    }
    if !det_image_is_sign(h) {
        return Ok(None);
    }
    let kernel = order / 2;
    let has_flip = h.contains(&Mat2::flip_first().promote(h.conductor())?)
        || h.contains(&Mat2::flip_second().promote(h.conductor())?);
    if has_flip {
        if kernel.is_multiple_of(2) {
            return Ok(Some((Family::Q2, kernel / 2)));
        }
        return Ok(Some((Family::Q3, kernel)));
    }
    if order.is_multiple_of(4) && h.is_cyclic()? {
        return Ok(Some((Family::Q4, order / 4)));
    }
    Ok(None)
}

fn q_type(h: &MatGroup) -> Result<Option<(Family, u64)>, GroupError> {
    if !h.is_monomial() {
        return Ok(None);
    }
    if h.is_diagonal() {
        return diagonal_type(h);
    }
    let order = h.order() as u64;
    let diag = h.filtered(Mat2::is_diagonal);
    let dorder = diag.order() as u64;
    Ok(match diagonal_type(&diag)? {
        Some((Family::Q1, _)) => {
            let antidiag_in_sl2 = h
                .elements()
                .iter()
                .any(|g| g.is_antidiagonal() && g.det().is_one());
            if antidiag_in_sl2 {
                dorder.is_multiple_of(2).then_some((Family::Q5, order / 4))
            } else {
                Some((Family::Q6, dorder))
            }
        }
        Some((Family::Q2, n)) if order == 8 * n => Some((Family::Q7, n)),
        Some((Family::Q4, n)) if order == 8 * n => Some((Family::Q8, n)),
        _ => None,
    })
}

fn sl2_type(h: &MatGroup) -> Result<Option<(Family, u64)>, GroupError> {
    if !h.is_in_sl2() {
        return Ok(None);
    }
    let order = h.order() as u64;
    let cyclic = h.is_cyclic()?;
    if cyclic && order != 4 {
        return Ok(Some((Family::Cyclic, order)));
    }
    if order.is_multiple_of(4) {
        let mut has_index_two_cyclic = false;
        for g in h.elements() {
            if g.order()? == order / 2 {
                has_index_two_cyclic = true;
                break;
            }
        }
        if has_index_two_cyclic {
            return Ok(Some((Family::BinaryDihedral, order / 4)));
        }
    }
    Ok(match order {
        24 => Some((Family::BinaryTetrahedral, 24)),
        48 => Some((Family::BinaryOctahedral, 48)),
        120 => Some((Family::BinaryIcosahedral, 120)),
        _ => None,
    })
}

/// Recognizes `H` among the standard families. Groups must be presented in
/// the normal forms generated by the diagonal, antidiagonal and sign
/// matrices; anything else is reported as `Unrecognized`.
pub fn classify(h: &MatGroup) -> Result<GroupLabel, GroupError> {
    let mut matches = Vec::new();
    let mut push = |family, parameter| {
        matches.push(LabelMatch {
            family,
            parameter: Some(parameter),
        })
    };
    if let Some((f, n)) = q_type(h)? {
        push(f, n);
        match f {
            Family::Q2 => push(Family::TypeA(2), n),
            Family::Q3 if n == 1 => push(Family::TypeA(1), n),
            Family::Q3 => push(Family::TypeA(3), n),
            Family::Q4 => push(Family::TypeA(4), n),
            Family::Q6 => {
                push(Family::TypeA(5), n);
                push(Family::Dihedral, n);
            }
            _ => {}
        }
    }
    if let Some((f, n)) = sl2_type(h)? {
        push(f, n);
        if f == Family::BinaryDihedral && n == 1 {
            push(Family::Cyclic, 4);
        }
    } else if h.is_cyclic()? {
        push(Family::Cyclic, h.order() as u64);
    }
    let in_sl2 = h.is_in_sl2();
    let primary = matches
        .iter()
        .filter(|m| m.family.is_q())
        .min_by_key(|m| m.family)
        .or_else(|| matches.iter().find(|m| in_sl2 && m.family.is_sl2_type()))
        .copied();
    Ok(match primary {
        Some(p) => GroupLabel {
            family: p.family,
            parameter: p.parameter,
            all_matches: matches,
        },
        None => {
            matches.insert(
                0,
                LabelMatch {
                    family: Family::Unrecognized,
                    parameter: None,
                },
            );
            GroupLabel {
                family: Family::Unrecognized,
                parameter: None,
                all_matches: matches,
            }
        }
    })
}

/// Generators of the eight diagonal/antidiagonal families in normal form.
pub fn q_family_generators(family: Family, n: u64) -> Option<Vec<Mat2>> {
    let torus = Mat2::torus_primitive;
    let signed = Mat2::signed_torus_primitive;
    Some(match family {
        Family::Q1 => vec![torus(n)],
        Family::Q2 => vec![Mat2::flip_first(), torus(2 * n)],
        Family::Q3 if n % 2 == 1 => vec![Mat2::flip_first(), torus(n)],
        Family::Q4 => vec![signed(4 * n)],
        Family::Q5 => vec![Mat2::quarter_turn(), torus(2 * n)],
        Family::Q6 => vec![Mat2::swap(), torus(n)],
        Family::Q7 => vec![Mat2::flip_first(), Mat2::swap(), torus(2 * n)],
        Family::Q8 => vec![Mat2::swap(), signed(4 * n)],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> CycNum {
        CycNum::root_of_unity(n, k).unwrap()
    }

    fn group(gens: &[Mat2]) -> MatGroup {
        close_group(gens).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(group(&[Mat2::torus_primitive(3)]).order(), 3);
        assert_eq!(
            group(&[Mat2::quarter_turn(), Mat2::torus_primitive(4)]).order(),
            8
        );
        assert_eq!(group(&[Mat2::swap(), Mat2::torus_primitive(3)]).order(), 6);
        assert_eq!(group(&[]).order(), 1);
    }

    #[test]
    fn closure_errors() {
        let singular = Mat2::from_ints([[1, 0], [0, 0]]);
        assert_eq!(
            close_group(&[Mat2::swap(), singular]).unwrap_err(),
            GroupError::SingularGenerator(1)
        );
        let shear = Mat2::from_ints([[1, 1], [0, 1]]);
        assert_eq!(
            close_group(&[shear]).unwrap_err(),
            GroupError::InfiniteOrderSuspected
        );
        let dilation = Mat2::from_ints([[2, 0], [0, 1]]);
        assert_eq!(
            close_group(&[dilation]).unwrap_err(),
            GroupError::InfiniteOrderSuspected
        );
    }

    #[test]
    fn determinants() {
        let q5 = group(&[Mat2::quarter_turn(), Mat2::torus_primitive(4)]);
        assert_eq!(det_values(&q5), vec![CycNum::one()]);
        let q6 = group(&[Mat2::swap(), Mat2::torus_primitive(3)]);
        assert_eq!(det_values(&q6).len(), 2);
        assert!(det_image_is_sign(&q6));
        assert_eq!(sl2_part(&q6).order(), 3);
        let h = group(&[Mat2::diag(zeta(3, 1), CycNum::one())]);
        assert_eq!(det_values(&h), vec![CycNum::one(), zeta(3, 1), zeta(3, 2)]);
        assert!(!det_image_is_sign(&h));
        assert!(!det_image_is_sign(&group(&[Mat2::torus_primitive(5)])));
        assert!(det_image_is_sign(&group(&[
            Mat2::flip_first(),
            Mat2::torus_primitive(4)
        ])));
    }

    #[test]
    fn eigenvalues_of_table_matrices() {
        let (a, b) = Mat2::swap().eigenvalues().unwrap();
        assert_eq!((a, b), (CycNum::one(), CycNum::from_int(-1)));
        let (a, b) = Mat2::quarter_turn().eigenvalues().unwrap();
        assert_eq!((a, b), (zeta(4, 1), zeta(4, 3)));
        let (a, b) = Mat2::diag(zeta(5, 2), zeta(3, 1)).eigenvalues().unwrap();
        assert_eq!(&a * &b, zeta(15, 11));
        assert!((a == zeta(5, 2) && b == zeta(3, 1)) || (a == zeta(3, 1) && b == zeta(5, 2)));
    }

    #[test]
    fn classification_examples() {
        let l = classify(&group(&[Mat2::torus_primitive(6), Mat2::flip_first()])).unwrap();
        assert_eq!((l.family, l.parameter), (Family::Q2, Some(3)));
        let l = classify(&group(&[Mat2::torus_primitive(5), Mat2::flip_first()])).unwrap();
        assert_eq!((l.family, l.parameter), (Family::Q3, Some(5)));
        let l = classify(&group(&[Mat2::quarter_turn()])).unwrap();
        assert_eq!((l.family, l.parameter), (Family::Q5, Some(1)));
        assert_eq!(l.parameter_of(Family::Cyclic), Some(4));
        let l = classify(&group(&[Mat2::flip_first()])).unwrap();
        assert_eq!((l.family, l.parameter), (Family::Q3, Some(1)));
        assert!(l.has(Family::TypeA(1)));
        assert_eq!(l.parameter_of(Family::Cyclic), Some(2));
        let l = classify(&group(&[Mat2::torus_primitive(7)])).unwrap();
        assert_eq!((l.family, l.parameter), (Family::Q1, Some(7)));
        assert_eq!(l.parameter_of(Family::Cyclic), Some(7));
        let l = classify(&group(&[Mat2::diag(zeta(3, 1), CycNum::one())])).unwrap();
        assert_eq!(l.family, Family::Unrecognized);
        assert_eq!(l.parameter_of(Family::Cyclic), Some(3));
    }

    #[test]
    fn every_family_in_normal_form() {
        for n in 1..=6u64 {
            for (family, order) in [
                (Family::Q1, n),
                (Family::Q2, 4 * n),
                (Family::Q4, 4 * n),
                (Family::Q5, 4 * n),
                (Family::Q6, 2 * n),
                (Family::Q7, 8 * n),
                (Family::Q8, 8 * n),
            ] {
                let h = group(&q_family_generators(family, n).unwrap());
                assert_eq!(h.order() as u64, order, "{family:?} n={n}");
                let l = classify(&h).unwrap();
                assert_eq!(
                    (l.family, l.parameter),
                    (family, Some(n)),
                    "{family:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn second_q8_presentation() {
        for n in 1..=4u64 {
            let a = group(&[Mat2::swap(), Mat2::signed_torus_primitive(4 * n)]);
            let b = group(&[Mat2::quarter_turn(), Mat2::signed_torus_primitive(4 * n)]);
            assert_eq!(a.order(), b.order());
            assert_eq!(
                classify(&a).unwrap().primary(),
                classify(&b).unwrap().primary()
            );
        }
    }

    #[test]
    fn sl2_labels() {
        let bd = group(&[Mat2::quarter_turn(), Mat2::torus_primitive(6)]);
        let l = classify(&bd).unwrap();
        assert_eq!(l.parameter_of(Family::BinaryDihedral), Some(3));
        let c = classify(&group(&[Mat2::torus_primitive(12)])).unwrap();
        assert_eq!(c.parameter_of(Family::Cyclic), Some(12));
        assert!(!c.has(Family::BinaryDihedral));
    }

    #[test]
    fn display_round_trip_text() {
        let m = Mat2::signed_torus_primitive(12);
        assert_eq!(m.to_string(), "[[-zeta(12),0],[0,zeta(12) - zeta(12)^3]]");
    }
}
