//! Fraction-free (Bareiss) elimination over exact rationals.
//!
//! Each input row is first scaled by the lcm of its denominators so the
//! working matrix is integral. Every elimination step then divides by the
//! previous pivot exactly, which keeps intermediate entries equal to minors
//! of the scaled matrix instead of letting denominators compound. Rational
//! division happens only once per unknown, during back-substitution.
//!
//! Pivoting is first-nonzero-by-row-index, so results (and kernel
//! witnesses in particular) are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalarq::Rational;

/// Echelon form of a rational matrix, optionally augmented with extra
/// right-hand-side columns that are carried along but never pivoted on.
#[derive(Debug, Clone)]
pub struct Elimination {
    rows: Vec<Vec<BigInt>>,
    row_scales: Vec<BigInt>,
    cols: usize,
    pivot_cols: Vec<usize>,
    swaps: usize,
}

impl Elimination {
    pub fn new(m: &[Vec<Rational>]) -> Self {
        Self::augmented(m, &[])
    }

    /// `rhs[i]` holds the extra columns appended to row `i`.
    pub fn augmented(m: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Self {
        let cols = m.first().map_or(0, Vec::len);
        assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
        assert!(rhs.is_empty() || rhs.len() == m.len(), "rhs row count mismatch");

        let mut row_scales = Vec::with_capacity(m.len());
        let mut rows = Vec::with_capacity(m.len());
        for (i, row) in m.iter().enumerate() {
            let full: Vec<&Rational> = row.iter().chain(rhs.get(i).into_iter().flatten()).collect();
            let scale = full.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            rows.push(
                full.iter()
                    .map(|r| r.numer() * (&scale / r.denom()))
                    .collect::<Vec<_>>(),
            );
            row_scales.push(scale);
        }

        let mut e = Elimination { rows, row_scales, cols, pivot_cols: Vec::new(), swaps: 0 };
        e.eliminate();
        e
    }

    fn eliminate(&mut self) {
        let n = self.rows.len();
        let width = self.rows.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                self.rows.swap(p, r);
                self.row_scales.swap(p, r);
                self.swaps += 1;
            }
            let (upper, lower) = self.rows.split_at_mut(r + 1);
            let pivot_row = &upper[r];
            let pivot = &pivot_row[c];
            for row in lower.iter_mut() {
                let factor = std::mem::take(&mut row[c]);
                for j in c + 1..width {
                    let num = pivot * &row[j] - &factor * &pivot_row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "inexact Bareiss division");
                    row[j] = q;
                }
            }
            prev = pivot.clone();
            self.pivot_cols.push(c);
            r += 1;
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Exact determinant; only meaningful for square coefficient blocks.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows.len(), self.cols, "determinant of a non-square matrix");
        if self.rank() < self.cols {
            return Rational::zero();
        }
        if self.cols == 0 {
            return Rational::one();
        }
        let last = &self.rows[self.cols - 1][self.cols - 1];
        let signed = if self.swaps % 2 == 1 { -last } else { last.clone() };
        let scale: BigInt = self.row_scales.iter().product();
        Rational::new(signed, scale).expect("row scales are positive")
    }

    /// Back-substitutes with the given values for the free columns.
    fn back_substitute(&self, free_values: impl Fn(usize) -> Rational, rhs_col: Option<usize>) -> Vec<Rational> {
        let mut x: Vec<Rational> = (0..self.cols)
            .map(|c| if self.pivot_cols.contains(&c) { Rational::zero() } else { free_values(c) })
            .collect();
        for (r, &c) in self.pivot_cols.iter().enumerate().rev() {
            let row = &self.rows[r];
            let mut acc = match rhs_col {
                Some(k) => Rational::from(row[self.cols + k].clone()),
                None => Rational::zero(),
            };
            for (j, xj) in x.iter().enumerate().skip(c + 1) {
                if !row[j].is_zero() && !xj.is_zero() {
                    acc = acc - Rational::from(row[j].clone()) * xj;
                }
            }
            x[c] = acc.checked_div(&Rational::from(row[c].clone())).expect("pivot is nonzero");
        }
        x
    }

    /// A nonzero kernel vector, or `None` when the columns are independent.
    ///
    /// The witness sets the first free column to one and every other free
    /// column to zero, then is rescaled to a primitive integer vector whose
    /// entry on that free column is positive.
    pub fn kernel_witness(&self) -> Option<Vec<Rational>> {
        let free = (0..self.cols).find(|c| !self.pivot_cols.contains(c))?;
        let x = self.back_substitute(|c| if c == free { Rational::one() } else { Rational::zero() }, None);
        Some(primitive_integer_vector(&x))
    }

    /// Solution of the square system for right-hand-side column `k`, or
    /// `None` when the coefficient block is singular.
    pub fn solution(&self, k: usize) -> Option<Vec<Rational>> {
        if self.rows.len() != self.cols || self.rank() < self.cols {
            return None;
        }
        Some(self.back_substitute(|_| Rational::zero(), Some(k)))
    }
}

fn primitive_integer_vector(x: &[Rational]) -> Vec<Rational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = x.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return x.to_vec();
    }
    ints.into_iter().map(|v| Rational::from(v / &gcd)).collect()
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    Elimination::new(m).determinant()
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    Elimination::new(m).rank()
}

/// Solves `m · x = b` for square nonsingular `m`.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rhs: Vec<Vec<Rational>> = b.iter().map(|v| vec![v.clone()]).collect();
    Elimination::augmented(m, &rhs).solution(0)
}

pub fn mat_vec(m: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}
