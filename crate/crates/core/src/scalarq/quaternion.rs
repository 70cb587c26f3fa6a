use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::Rational;
use crate::error::{Error, Result};

/// Real quaternion `w + x i + y j + z k` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn from_coords(c: [Rational; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::from_real(Rational::one())
    }

    pub fn from_real(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Basis unit `e_t` for `t` in `0..4`, i.e. one of `1, i, j, k`.
    pub fn unit(t: usize) -> Self {
        let mut c: [Rational; 4] = Default::default();
        c[t] = Rational::one();
        Quaternion::from_coords(c)
    }

    pub fn i() -> Self {
        Quaternion::unit(1)
    }

    pub fn j() -> Self {
        Quaternion::unit(2)
    }

    pub fn k() -> Self {
        Quaternion::unit(3)
    }

    pub fn coord(&self, t: usize) -> &Rational {
        match t {
            0 => &self.w,
            1 => &self.x,
            2 => &self.y,
            3 => &self.z,
            _ => panic!("quaternion coordinate index {t} out of range"),
        }
    }

    pub fn coords(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn into_coords(self) -> [Rational; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> Rational {
        self.coords().iter().map(|c| *c * *c).sum()
    }

    pub fn scale(&self, r: &Rational) -> Quaternion {
        Quaternion::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    pub fn inverse(&self) -> Result<Quaternion> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::ZeroQuaternion);
        }
        let inv = n.recip()?;
        Ok(self.conj().scale(&inv))
    }

    /// Whether `self` and `other` are real multiples of each other, decided by
    /// the vanishing of every 2×2 cross-determinant.
    pub fn is_collinear(&self, other: &Quaternion) -> bool {
        let a = self.coords();
        let b = other.coords();
        (0..4).all(|s| (s + 1..4).all(|t| a[s] * b[t] == a[t] * b[s]))
    }

    /// Algebraic notation such as `1 - 2i + 3/4k`; zero prints as `0`.
    pub fn to_algebraic(&self) -> String {
        let mut out = String::new();
        for (c, unit) in self.coords().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !(mag.is_one() && !unit.is_empty()) {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [self.w.to_f64(), self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Four comma-separated rationals `w,x,y,z`, optionally wrapped in
/// parentheses or brackets.
impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let parts = inner
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        let coords: [Rational; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("quaternion `{s}` needs exactly 4 coordinates")))?;
        Ok(Quaternion::from_coords(coords))
    }
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;

    fn mul(self, b: &Quaternion) -> Quaternion {
        let a = self;
        Quaternion {
            w: &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            x: &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            y: &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            z: &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, b: Quaternion) -> Quaternion {
        &self * &b
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, b: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &b.w, &self.x + &b.x, &self.y + &b.y, &self.z + &b.z)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, b: Quaternion) -> Quaternion {
        &self + &b
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, b: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &b.w, &self.x - &b.x, &self.y - &b.y, &self.z - &b.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}
