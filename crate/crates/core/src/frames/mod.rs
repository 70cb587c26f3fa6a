//! Unique expansion of an R-linear endomorphism against a frame of four base
//! operators with quaternion coefficients.
//!
//! A term with base `B` contributes `x ↦ a·B(x)` (left side) or
//! `x ↦ B(x)·a` (right side). Writing each coefficient `a_t` in the basis
//! `1, i, j, k` turns the expansion into a 16×16 real linear system whose
//! column `4t + s` is the row-major flattening of the term operator for
//! `a_t = e_s`.

mod spec;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::autos;
use crate::elim::{self, Elimination};
use crate::error::{Error, Result};
use crate::linop::Operator4;
use crate::scalarq::{Quaternion, Rational};

pub use spec::{parse_frame, parse_operator, parse_terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn prefix(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameTerm {
    pub side: Side,
    pub base: Operator4,
    /// Name of the base operator as written in a frame spec.
    pub label: String,
}

impl FrameTerm {
    pub fn new(side: Side, base: Operator4, label: impl Into<String>) -> Self {
        FrameTerm { side, base, label: label.into() }
    }

    pub fn left(base: Operator4, label: impl Into<String>) -> Self {
        FrameTerm::new(Side::Left, base, label)
    }

    /// The term operator for coefficient `a`.
    pub fn with_coefficient(&self, a: &Quaternion) -> Operator4 {
        match self.side {
            Side::Left => Operator4::left_mul(a).compose(&self.base),
            Side::Right => Operator4::right_mul(a).compose(&self.base),
        }
    }
}

impl fmt::Display for FrameTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.side.prefix(), self.label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    name: String,
    terms: [FrameTerm; 4],
    matrix: Vec<Vec<Rational>>,
}

impl Frame {
    pub fn new(name: impl Into<String>, terms: Vec<FrameTerm>) -> Result<Self> {
        let n = terms.len();
        let terms: [FrameTerm; 4] = terms
            .try_into()
            .map_err(|_| Error::Parse(format!("a frame needs exactly 4 terms, got {n}")))?;
        let matrix = family_matrix(&terms);
        Ok(Frame { name: name.into(), terms, matrix })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[FrameTerm; 4] {
        &self.terms
    }

    /// Spec-language rendering, e.g. `L:id L:A1 L:A2 L:A3`.
    pub fn spec(&self) -> String {
        terms_spec(&self.terms)
    }

    /// The 16×16 system matrix, built once at construction.
    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        elim::determinant(&self.matrix)
    }
}

pub fn terms_spec(terms: &[FrameTerm]) -> String {
    terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Four quaternion coefficients together with the frame they refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub frame: Frame,
    pub coefficients: [Quaternion; 4],
}

impl Expansion {
    pub fn reconstruct(&self) -> Operator4 {
        self.frame
            .terms
            .iter()
            .zip(&self.coefficients)
            .fold(Operator4::zero(), |acc, (term, a)| &acc + &term.with_coefficient(a))
    }

    /// Indices of the coefficients that are exactly zero.
    pub fn vanishing(&self) -> Vec<usize> {
        (0..4).filter(|&t| self.coefficients[t].is_zero()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub terms: usize,
    /// Real unknowns, four per term.
    pub unknowns: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Per-term coefficients of a nonzero combination that sums to the zero
    /// operator; present exactly when `nullity > 0`.
    pub witness: Option<Vec<Quaternion>>,
}

impl RankReport {
    /// Checks that the witness really is a nonzero kernel element for `terms`.
    pub fn witness_holds(&self, terms: &[FrameTerm]) -> bool {
        match &self.witness {
            None => self.nullity == 0,
            Some(w) => {
                w.len() == terms.len()
                    && w.iter().any(|q| !q.is_zero())
                    && terms
                        .iter()
                        .zip(w)
                        .fold(Operator4::zero(), |acc, (t, a)| &acc + &t.with_coefficient(a))
                        == Operator4::zero()
            }
        }
    }
}

/// 16 × 4n real matrix of the family; see the module docs for the layout.
pub fn family_matrix(terms: &[FrameTerm]) -> Vec<Vec<Rational>> {
    let columns: Vec<[Rational; 16]> = terms
        .iter()
        .flat_map(|term| (0..4).map(move |s| term.with_coefficient(&Quaternion::unit(s)).flatten()))
        .collect();
    (0..16).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect()
}

pub fn frame_matrix(frame: &Frame) -> Vec<Vec<Rational>> {
    frame.matrix().to_vec()
}

fn group_coefficients(x: &[Rational]) -> Vec<Quaternion> {
    x.chunks(4)
        .map(|c| Quaternion::from_coords([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
        .collect()
}

pub fn family_rank(terms: &[FrameTerm]) -> Result<RankReport> {
    if terms.is_empty() {
        return Err(Error::Parse("a family needs at least one term".to_string()));
    }
    let e = Elimination::new(&family_matrix(terms));
    Ok(RankReport {
        terms: terms.len(),
        unknowns: 4 * terms.len(),
        rank: e.rank(),
        nullity: e.nullity(),
        witness: e.kernel_witness().map(|w| group_coefficients(&w)),
    })
}

/// Real dimension of the span of `ops` inside the 16-dimensional operator space.
pub fn operator_rank(ops: &[Operator4]) -> usize {
    let flats: Vec<[Rational; 16]> = ops.iter().map(Operator4::flatten).collect();
    let m: Vec<Vec<Rational>> = (0..16).map(|r| flats.iter().map(|f| f[r].clone()).collect()).collect();
    elim::rank(&m)
}

pub fn expand(f: &Operator4, frame: &Frame) -> Result<Expansion> {
    let rhs: Vec<Vec<Rational>> = f.flatten().into_iter().map(|v| vec![v]).collect();
    let e = Elimination::augmented(frame.matrix(), &rhs);
    let Some(x) = e.solution(0) else {
        let report = RankReport {
            terms: 4,
            unknowns: 16,
            rank: e.rank(),
            nullity: e.nullity(),
            witness: e.kernel_witness().map(|w| group_coefficients(&w)),
        };
        return Err(Error::SingularFrame(Box::new(report)));
    };
    let coefficients: [Quaternion; 4] = group_coefficients(&x).try_into().expect("16 unknowns");
    Ok(Expansion { frame: frame.clone(), coefficients })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinFrame {
    /// `x ↦ x·1, x·i, x·j, x·k`, all left coefficients; realizes H ⊗ H.
    RightUnits,
    /// `id, A1, A2, A3`, all left coefficients.
    Auto,
    /// `id, A1, A1², I`, all left coefficients; singular.
    PaperAttempt,
}

impl BuiltinFrame {
    pub const ALL: [BuiltinFrame; 3] = [BuiltinFrame::RightUnits, BuiltinFrame::Auto, BuiltinFrame::PaperAttempt];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinFrame::RightUnits => "RIGHT_UNITS",
            BuiltinFrame::Auto => "AUTO",
            BuiltinFrame::PaperAttempt => "PAPER_ATTEMPT",
        }
    }

    pub fn frame(self) -> Frame {
        match self {
            BuiltinFrame::RightUnits => right_units_frame(),
            BuiltinFrame::Auto => auto_frame().clone(),
            BuiltinFrame::PaperAttempt => Frame::new(
                self.name(),
                vec![
                    FrameTerm::left(Operator4::identity(), "id"),
                    FrameTerm::left(autos::cyclic_op(), "A1"),
                    FrameTerm::left(autos::cyclic_sq_op(), "A1A1"),
                    FrameTerm::left(autos::conj_op(), "I"),
                ],
            )
            .expect("four terms"),
        }
    }
}

impl FromStr for BuiltinFrame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinFrame::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn right_units_frame() -> Frame {
    let terms = ["1", "i", "j", "k"]
        .iter()
        .enumerate()
        .map(|(t, u)| {
            let label = if t == 0 { "id".to_string() } else { format!("*{u}") };
            FrameTerm::left(Operator4::right_mul(&Quaternion::unit(t)), label)
        })
        .collect();
    Frame::new(BuiltinFrame::RightUnits.name(), terms).expect("four terms")
}

/// AUTO is `id, A1, A2, A3`. Its determinant is checked once; should it
/// vanish, the last term falls back to the quarter turn about `k`.
fn auto_frame() -> &'static Frame {
    static AUTO: OnceLock<Frame> = OnceLock::new();
    AUTO.get_or_init(|| {
        let head = || {
            vec![
                FrameTerm::left(Operator4::identity(), "id"),
                FrameTerm::left(autos::cyclic_op(), "A1"),
                FrameTerm::left(autos::rot_i_op(), "A2"),
            ]
        };
        let mut terms = head();
        terms.push(FrameTerm::left(autos::rot_j_op(), "A3"));
        let frame = Frame::new(BuiltinFrame::Auto.name(), terms).expect("four terms");
        if !frame.determinant().is_zero() {
            return frame;
        }
        let mut terms = head();
        terms.push(FrameTerm::left(autos::rot_k_op(), "[1,0,0,0;0,0,-1,0;0,1,0,0;0,0,0,1]"));
        let fallback = Frame::new(BuiltinFrame::Auto.name(), terms).expect("four terms");
        assert!(!fallback.determinant().is_zero(), "AUTO fallback frame is singular");
        fallback
    })
}

pub fn builtin_frame(name: &str) -> Result<Frame> {
    Ok(name.parse::<BuiltinFrame>()?.frame())
}

/// The sixteen elementary operators `x ↦ e_s x e_t`.
pub fn elementary_operators() -> Vec<Operator4> {
    (0..4)
        .flat_map(|s| {
            (0..4).map(move |t| {
                Operator4::left_mul(&Quaternion::unit(s)).compose(&Operator4::right_mul(&Quaternion::unit(t)))
            })
        })
        .collect()
}
