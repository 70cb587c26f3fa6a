//! Random generators and independent oracles shared by the integration
//! tests. Nothing here calls the elimination code or the operator matrices
//! it is used to check.

#![allow(dead_code)]

pub mod golden;

use quatlin::{autos, Operator4, Quaternion, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den)).unwrap()
}

pub fn quaternion(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Quaternion {
    Quaternion::from_coords(std::array::from_fn(|_| rational(rng, max_num, max_den)))
}

pub fn nonzero_quaternion(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Quaternion {
    loop {
        let q = quaternion(rng, max_num, max_den);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn operator(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Operator4 {
    Operator4::from_rows(std::array::from_fn(|_| std::array::from_fn(|_| rational(rng, max_num, max_den))))
}

/// A random inner automorphism with one entry shifted by a nonzero rational.
pub fn perturbed_automorphism(rng: &mut impl Rng) -> Operator4 {
    let base = autos::conjugation_by(&nonzero_quaternion(rng, 9, 4)).unwrap();
    let mut rows = base.rows().clone();
    let (s, t) = (rng.gen_range(0..4), rng.gen_range(0..4));
    let delta = loop {
        let d = rational(rng, 5, 3);
        if !d.is_zero() {
            break d;
        }
    };
    rows[s][t] = &rows[s][t] + &delta;
    Operator4::from_rows(rows)
}

/// Product of basis units by table lookup: `e_s e_t = sign · e_unit`.
const TABLE: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

/// Hamilton product expanded termwise through the multiplication table.
pub fn table_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    let mut out: [Rational; 4] = Default::default();
    for s in 0..4 {
        for t in 0..4 {
            let (sign, u) = TABLE[s][t];
            let term = a.coord(s) * b.coord(t) * Rational::from(sign);
            out[u] = &out[u] + &term;
        }
    }
    Quaternion::from_coords(out)
}

/// Applies a matrix given as plain rows, without going through `Operator4::apply`.
pub fn apply_rows(rows: &[[Rational; 4]; 4], x: &Quaternion) -> Quaternion {
    Quaternion::from_coords(std::array::from_fn(|s| {
        (0..4).map(|t| &rows[s][t] * x.coord(t)).fold(Rational::zero(), |a, b| a + b)
    }))
}

/// Gaussian elimination with rational division at every step, returning
/// `(rank, determinant if square)`.
pub fn naive_rank_det(m: &[Vec<Rational>]) -> (usize, Option<Rational>) {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut det = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            det = Rational::zero();
            continue;
        };
        if p != r {
            a.swap(p, r);
            det = -det;
        }
        det = det * &a[r][c];
        let pivot_row = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].checked_div(&pivot_row[c]).unwrap();
            for j in c..cols {
                let v = &row[j] - &(&f * &pivot_row[j]);
                row[j] = v;
            }
        }
        r += 1;
    }
    (r, (rows == cols).then_some(if r < cols { Rational::zero() } else { det }))
}

/// Family matrix built directly from products: column `4t + s` holds the
/// flattened map `x ↦ e_s · base_t(x)` (left) or `x ↦ base_t(x) · e_s`
/// (right), computed by applying the map to each basis unit with `table_mul`.
pub fn oracle_family_matrix(terms: &[(bool, [[Rational; 4]; 4])]) -> Vec<Vec<Rational>> {
    let units: Vec<Quaternion> = (0..4).map(Quaternion::unit).collect();
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for (left, base) in terms {
        for e in &units {
            let images: Vec<Quaternion> = units
                .iter()
                .map(|x| {
                    let bx = apply_rows(base, x);
                    if *left {
                        table_mul(e, &bx)
                    } else {
                        table_mul(&bx, e)
                    }
                })
                .collect();
            // row-major flattening: entry (row, col) = coordinate `row` of image `col`
            cols.push((0..16).map(|n| images[n % 4].coord(n / 4).clone()).collect());
        }
    }
    (0..16).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}
