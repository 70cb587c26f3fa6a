//! R-linear endomorphisms of the quaternion algebra as exact 4×4 matrices.
//!
//! Convention: `y = M · x` on coordinate columns ordered `(w, x, y, z)`, so
//! column `t` of a matrix is the image of the basis unit `e_t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::elim;
use crate::scalarq::{Quaternion, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Operator4 {
    entries: [[Rational; 4]; 4],
}

impl Operator4 {
    pub fn from_rows(entries: [[Rational; 4]; 4]) -> Self {
        Operator4 { entries }
    }

    pub fn from_int_rows(rows: [[i64; 4]; 4]) -> Self {
        Operator4::from_rows(rows.map(|r| r.map(Rational::from)))
    }

    /// The operator sending `e_t` to `images[t]`.
    pub fn from_unit_images(images: [Quaternion; 4]) -> Self {
        let cols = images.map(Quaternion::into_coords);
        let mut entries: [[Rational; 4]; 4] = Default::default();
        for (t, col) in cols.into_iter().enumerate() {
            for (s, v) in col.into_iter().enumerate() {
                entries[s][t] = v;
            }
        }
        Operator4 { entries }
    }

    pub fn zero() -> Self {
        Operator4::default()
    }

    pub fn identity() -> Self {
        Operator4::diagonal([1, 1, 1, 1].map(Rational::from))
    }

    pub fn diagonal(d: [Rational; 4]) -> Self {
        let mut entries: [[Rational; 4]; 4] = Default::default();
        for (s, v) in d.into_iter().enumerate() {
            entries[s][s] = v;
        }
        Operator4 { entries }
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mul(a: &Quaternion) -> Self {
        let [a0, a1, a2, a3] = a.coords();
        Operator4::from_rows([
            [a0.clone(), -a1, -a2, -a3],
            [a1.clone(), a0.clone(), -a3, a2.clone()],
            [a2.clone(), a3.clone(), a0.clone(), -a1],
            [a3.clone(), -a2, a1.clone(), a0.clone()],
        ])
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mul(a: &Quaternion) -> Self {
        let [a0, a1, a2, a3] = a.coords();
        Operator4::from_rows([
            [a0.clone(), -a1, -a2, -a3],
            [a1.clone(), a0.clone(), a3.clone(), -a2],
            [a2.clone(), -a3, a0.clone(), a1.clone()],
            [a3.clone(), a2.clone(), -a1, a0.clone()],
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[[Rational; 4]; 4] {
        &self.entries
    }

    pub fn column(&self, t: usize) -> Quaternion {
        Quaternion::from_coords(std::array::from_fn(|s| self.entries[s][t].clone()))
    }

    pub fn apply(&self, x: &Quaternion) -> Quaternion {
        let xs = x.coords();
        Quaternion::from_coords(std::array::from_fn(|s| {
            self.entries[s].iter().zip(xs).map(|(m, v)| m * v).sum()
        }))
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Operator4) -> Operator4 {
        Operator4::from_rows(std::array::from_fn(|s| {
            std::array::from_fn(|t| (0..4).map(|u| &self.entries[s][u] * &other.entries[u][t]).sum())
        }))
    }

    pub fn scale(&self, c: &Rational) -> Operator4 {
        Operator4::from_rows(self.entries.clone().map(|r| r.map(|v| v * c)))
    }

    pub fn transpose(&self) -> Operator4 {
        Operator4::from_rows(std::array::from_fn(|s| std::array::from_fn(|t| self.entries[t][s].clone())))
    }

    pub fn determinant(&self) -> Rational {
        elim::determinant(&self.to_grid())
    }

    /// `n`-fold self-composition; `power(0)` is the identity.
    pub fn power(&self, n: usize) -> Operator4 {
        (0..n).fold(Operator4::identity(), |acc, _| acc.compose(self))
    }

    /// Smallest `n` in `1..=max` with `self^n = identity`.
    pub fn order(&self, max: usize) -> Option<usize> {
        let id = Operator4::identity();
        let mut acc = self.clone();
        for n in 1..=max {
            if acc == id {
                return Some(n);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Row-major flattening into the 16-dimensional coordinate space.
    pub fn flatten(&self) -> [Rational; 16] {
        std::array::from_fn(|n| self.entries[n / 4][n % 4].clone())
    }

    pub fn from_flat(v: &[Rational]) -> Operator4 {
        assert_eq!(v.len(), 16, "flattened operator must have 16 entries");
        Operator4::from_rows(std::array::from_fn(|s| std::array::from_fn(|t| v[4 * s + t].clone())))
    }

    pub fn to_grid(&self) -> Vec<Vec<Rational>> {
        self.entries.iter().map(|r| r.to_vec()).collect()
    }

    pub fn to_strings(&self) -> [[String; 4]; 4] {
        std::array::from_fn(|s| std::array::from_fn(|t| self.entries[s][t].to_string()))
    }

    pub fn to_f64(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|s| std::array::from_fn(|t| self.entries[s][t].to_f64()))
    }
}

impl fmt::Display for Operator4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (s, row) in cells.iter().enumerate() {
            if s > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (t, c) in row.iter().enumerate() {
                if t > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Operator4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator4{:?}", self.to_strings())
    }
}

impl Add<&Operator4> for &Operator4 {
    type Output = Operator4;
    fn add(self, rhs: &Operator4) -> Operator4 {
        Operator4::from_rows(std::array::from_fn(|s| {
            std::array::from_fn(|t| &self.entries[s][t] + &rhs.entries[s][t])
        }))
    }
}

impl Add for Operator4 {
    type Output = Operator4;
    fn add(self, rhs: Operator4) -> Operator4 {
        &self + &rhs
    }
}

impl Sub<&Operator4> for &Operator4 {
    type Output = Operator4;
    fn sub(self, rhs: &Operator4) -> Operator4 {
        Operator4::from_rows(std::array::from_fn(|s| {
            std::array::from_fn(|t| &self.entries[s][t] - &rhs.entries[s][t])
        }))
    }
}

impl Neg for &Operator4 {
    type Output = Operator4;
    fn neg(self) -> Operator4 {
        self.scale(&Rational::from(-1))
    }
}

/// Composition: `(f * g)(x) = f(g(x))`.
impl Mul<&Operator4> for &Operator4 {
    type Output = Operator4;
    fn mul(self, rhs: &Operator4) -> Operator4 {
        self.compose(rhs)
    }
}
