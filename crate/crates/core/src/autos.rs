//! Linear and antilinear automorphisms of the quaternion algebra.
//!
//! The catalog fixes concrete exact-rational representatives:
//!
//! | name | map                                   | kind       |
//! |------|---------------------------------------|------------|
//! | `id` | identity                              | linear     |
//! | `A1` | 3-cycle `i → j → k → i`               | linear     |
//! | `A2` | quarter turn about `i` (`j → k`)      | linear     |
//! | `A3` | quarter turn about `j` (`k → i`)      | linear     |
//! | `I`  | conjugation `x ↦ x*`                  | antilinear |
//! | `I1` | `A1 ∘ I`                              | antilinear |
//! | `I2` | `A1² ∘ I`                             | antilinear |
//!
//! Every linear entry is inner, `x ↦ q x q⁻¹`, with a rational conjugator.

use std::fmt;

use crate::error::{Error, Result};
use crate::linop::Operator4;
use crate::scalarq::{Quaternion, Rational};

pub const CATALOG_NAMES: [&str; 7] = ["id", "A1", "A2", "A3", "I", "I1", "I2"];

const UNIT_NAMES: [&str; 4] = ["1", "i", "j", "k"];

fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    Quaternion::from_ints(w, x, y, z)
}

/// Fixes 1 and cycles `i → j → k → i`.
pub fn cyclic_op() -> Operator4 {
    Operator4::from_unit_images([q(1, 0, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1), q(0, 1, 0, 0)])
}

pub fn cyclic_sq_op() -> Operator4 {
    cyclic_op().compose(&cyclic_op())
}

/// Fixes 1 and i; `j → k`, `k → −j`.
pub fn rot_i_op() -> Operator4 {
    Operator4::from_unit_images([q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 0, 1), q(0, 0, -1, 0)])
}

/// Fixes 1 and j; `k → i`, `i → −k`.
pub fn rot_j_op() -> Operator4 {
    Operator4::from_unit_images([q(1, 0, 0, 0), q(0, 0, 0, -1), q(0, 0, 1, 0), q(0, 1, 0, 0)])
}

/// Fixes 1 and k; `i → j`, `j → −i`. Not in the named catalog.
pub fn rot_k_op() -> Operator4 {
    Operator4::from_unit_images([q(1, 0, 0, 0), q(0, 0, 1, 0), q(0, -1, 0, 0), q(0, 0, 0, 1)])
}

/// Quaternion conjugation `diag(1, −1, −1, −1)`.
pub fn conj_op() -> Operator4 {
    Operator4::diagonal([1, -1, -1, -1].map(Rational::from))
}

/// `I1 = A1 ∘ I` for `k = 1`, `I2 = A1² ∘ I` for `k = 2`.
pub fn anti_op(k: usize) -> Result<Operator4> {
    match k {
        1 => Ok(cyclic_op().compose(&conj_op())),
        2 => Ok(cyclic_sq_op().compose(&conj_op())),
        _ => Err(Error::IndexOutOfRange { index: k, range: "1..=2" }),
    }
}

/// `x ↦ q x q⁻¹`.
pub fn conjugation_by(q: &Quaternion) -> Result<Operator4> {
    let inv = q.inverse()?;
    Ok(Operator4::left_mul(q).compose(&Operator4::right_mul(&inv)))
}

pub fn catalog(name: &str) -> Result<Operator4> {
    match name {
        "id" => Ok(Operator4::identity()),
        "A1" => Ok(cyclic_op()),
        "A2" => Ok(rot_i_op()),
        "A3" => Ok(rot_j_op()),
        "I" => Ok(conj_op()),
        "I1" => anti_op(1),
        "I2" => anti_op(2),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub fn catalog_description(name: &str) -> Option<&'static str> {
    Some(match name {
        "id" => "identity",
        "A1" => "3-cycle i -> j -> k -> i",
        "A2" => "quarter turn about i: j -> k, k -> -j",
        "A3" => "quarter turn about j: k -> i, i -> -k",
        "I" => "conjugation x -> x*",
        "I1" => "A1 after conjugation",
        "I2" => "A1^2 after conjugation",
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutoKind {
    LinearAutomorphism,
    AntilinearAutomorphism,
    Neither(LawFailure),
}

impl AutoKind {
    pub fn tag(&self) -> &'static str {
        match self {
            AutoKind::LinearAutomorphism => "LinearAutomorphism",
            AutoKind::AntilinearAutomorphism => "AntilinearAutomorphism",
            AutoKind::Neither(_) => "Neither",
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, AutoKind::LinearAutomorphism)
    }
}

/// Why an operator is neither kind of automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawFailure {
    NotUnital { image_of_one: Quaternion },
    NotInvertible,
    /// First ordered basis pairs `(s, t)` where `f(e_s e_t) ≠ f(e_s) f(e_t)`
    /// and where `f(e_s e_t) ≠ f(e_t) f(e_s)`.
    NeitherLaw {
        multiplicative: (usize, usize),
        antimultiplicative: (usize, usize),
    },
}

impl LawFailure {
    /// Human-readable witness, e.g. `1 ↦ 2` or `(i, j)`.
    pub fn witness(&self) -> String {
        match self {
            LawFailure::NotUnital { image_of_one } => format!("1 ↦ {}", image_of_one.to_algebraic()),
            LawFailure::NotInvertible => "det = 0".to_string(),
            LawFailure::NeitherLaw { multiplicative: (s, t), .. } => {
                format!("({}, {})", UNIT_NAMES[*s], UNIT_NAMES[*t])
            }
        }
    }
}

impl fmt::Display for LawFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawFailure::NotUnital { image_of_one } => {
                write!(f, "not unital: 1 ↦ {}", image_of_one.to_algebraic())
            }
            LawFailure::NotInvertible => write!(f, "not invertible: determinant is zero"),
            LawFailure::NeitherLaw { multiplicative: (s, t), antimultiplicative: (u, v) } => write!(
                f,
                "f({a}{b}) ≠ f({a})f({b}) and f({c}{d}) ≠ f({d})f({c})",
                a = UNIT_NAMES[*s],
                b = UNIT_NAMES[*t],
                c = UNIT_NAMES[*u],
                d = UNIT_NAMES[*v],
            ),
        }
    }
}

fn first_failing_pair(images: &[Quaternion; 4], f: &Operator4, reversed: bool) -> Option<(usize, usize)> {
    let units: [Quaternion; 4] = std::array::from_fn(Quaternion::unit);
    for s in 0..4 {
        for t in 0..4 {
            let lhs = f.apply(&(&units[s] * &units[t]));
            let rhs = if reversed { &images[t] * &images[s] } else { &images[s] * &images[t] };
            if lhs != rhs {
                return Some((s, t));
            }
        }
    }
    None
}

/// Decides the automorphism laws on all 16 ordered basis pairs, plus
/// unitality and invertibility.
pub fn classify(f: &Operator4) -> AutoKind {
    let images: [Quaternion; 4] = std::array::from_fn(|t| f.column(t));
    if images[0] != Quaternion::one() {
        return AutoKind::Neither(LawFailure::NotUnital { image_of_one: images[0].clone() });
    }
    if f.determinant().is_zero() {
        return AutoKind::Neither(LawFailure::NotInvertible);
    }
    let Some(multiplicative) = first_failing_pair(&images, f, false) else {
        return AutoKind::LinearAutomorphism;
    };
    let Some(antimultiplicative) = first_failing_pair(&images, f, true) else {
        return AutoKind::AntilinearAutomorphism;
    };
    AutoKind::Neither(LawFailure::NeitherLaw { multiplicative, antimultiplicative })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionViolation {
    UnitNotFixed,
    FirstRowNotClear { col: usize },
    FirstColumnNotClear { row: usize },
    /// `(Qᵀ Q)[row][col]` differs from the identity.
    NotOrthogonal { row: usize, col: usize },
    Reflection,
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::UnitNotFixed => write!(f, "f(1) ≠ 1"),
            ConditionViolation::FirstRowNotClear { col } => write!(f, "entry (0, {col}) is nonzero"),
            ConditionViolation::FirstColumnNotClear { row } => write!(f, "entry ({row}, 0) is nonzero"),
            ConditionViolation::NotOrthogonal { row, col } => {
                write!(f, "rotation block fails QᵀQ = I at ({row}, {col})")
            }
            ConditionViolation::Reflection => write!(f, "rotation block has det Q = -1"),
        }
    }
}

/// Closed-form coordinate conditions for a linear automorphism: `f(1) = 1`,
/// the first row and column vanish off the corner, and the lower-right 3×3
/// block is a rotation (`QᵀQ = I`, `det Q = 1`).
pub fn check_coordinate_conditions(f: &Operator4) -> Result<(), ConditionViolation> {
    if !f.entry(0, 0).is_one() {
        return Err(ConditionViolation::UnitNotFixed);
    }
    if let Some(row) = (1..4).find(|&r| !f.entry(r, 0).is_zero()) {
        return Err(ConditionViolation::FirstColumnNotClear { row });
    }
    if let Some(col) = (1..4).find(|&c| !f.entry(0, c).is_zero()) {
        return Err(ConditionViolation::FirstRowNotClear { col });
    }
    for a in 1..4 {
        for b in 1..4 {
            let dot: Rational = (1..4).map(|r| f.entry(r, a) * f.entry(r, b)).sum();
            let expected = if a == b { Rational::one() } else { Rational::zero() };
            if dot != expected {
                return Err(ConditionViolation::NotOrthogonal { row: a - 1, col: b - 1 });
            }
        }
    }
    let block: Vec<Vec<Rational>> = (1..4).map(|r| (1..4).map(|c| f.entry(r, c).clone()).collect()).collect();
    if !crate::elim::determinant(&block).is_one() {
        return Err(ConditionViolation::Reflection);
    }
    Ok(())
}

/// Nonzero quaternion `q` with `f(x) = q x q⁻¹`, determined up to a nonzero
/// rational factor and kept unnormalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugator {
    q: Quaternion,
}

impl Conjugator {
    pub fn new(q: Quaternion) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(Conjugator { q })
    }

    pub fn quaternion(&self) -> &Quaternion {
        &self.q
    }

    pub fn operator(&self) -> Operator4 {
        conjugation_by(&self.q).expect("conjugator is nonzero")
    }
}

/// Trace-method candidates from the rotation block. For a conjugator `q`,
/// candidate `n` equals `4 q_n q / |q|²`, so at least one is nonzero.
fn conjugator_candidates(f: &Operator4) -> [Quaternion; 4] {
    let r = |s: usize, t: usize| f.entry(s, t).clone();
    let one = Rational::one();
    [
        Quaternion::new(&one + &r(1, 1) + r(2, 2) + r(3, 3), r(3, 2) - r(2, 3), r(1, 3) - r(3, 1), r(2, 1) - r(1, 2)),
        Quaternion::new(r(3, 2) - r(2, 3), &one + &r(1, 1) - r(2, 2) - r(3, 3), r(1, 2) + r(2, 1), r(1, 3) + r(3, 1)),
        Quaternion::new(r(1, 3) - r(3, 1), r(1, 2) + r(2, 1), &one - &r(1, 1) + r(2, 2) - r(3, 3), r(2, 3) + r(3, 2)),
        Quaternion::new(r(2, 1) - r(1, 2), r(1, 3) + r(3, 1), r(2, 3) + r(3, 2), &one - &r(1, 1) - r(2, 2) + r(3, 3)),
    ]
}

pub fn recover_conjugator(f: &Operator4) -> Result<Conjugator> {
    match classify(f) {
        AutoKind::LinearAutomorphism => {}
        AutoKind::AntilinearAutomorphism => {
            return Err(Error::NotAnAutomorphism("operator is antilinear".to_string()))
        }
        AutoKind::Neither(why) => return Err(Error::NotAnAutomorphism(why.to_string())),
    }
    for candidate in conjugator_candidates(f) {
        if candidate.is_zero() {
            continue;
        }
        if conjugation_by(&candidate)? == *f {
            return Conjugator::new(candidate);
        }
    }
    Err(Error::Internal("no trace candidate reproduces the automorphism".to_string()))
}
