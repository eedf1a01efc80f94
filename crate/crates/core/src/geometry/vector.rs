use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exponent vector in the character lattice `M = Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &LatticePoint) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational vector, computed exactly.
    pub fn pair(&self, q: &RationalVector) -> BigRational {
        self.0
            .iter()
            .zip(q.coords())
            .fold(BigRational::zero(), |acc, (&a, b)| acc + b * BigInt::from(a))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Divides by the gcd of the coordinates. The zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        let g = self.0.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g == 0 {
            return self.clone();
        }
        Self(self.0.iter().map(|c| c / g).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Exact division `self / k`, if every coordinate is divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(Self(self.0.iter().map(|c| c / k).collect()))
    }

    /// Monomial notation `x^2y^3` for dimension at most 3; exponent vector otherwise.
    pub fn monomial(&self) -> String {
        const VARS: [&str; 3] = ["x", "y", "z"];
        if self.dim() > 3 {
            return self.to_string();
        }
        let mut s = String::new();
        for (v, &c) in VARS.iter().zip(&self.0) {
            match c {
                0 => {}
                1 => s.push_str(v),
                _ => s.push_str(&format!("{v}^{c}")),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

/// A point of `M_R` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![BigRational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &RationalVector) -> BigRational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Returns the lattice point if every coordinate is an integer.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(LatticePoint)
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// Homogenized integer vector `(den * x, den)` with `den` the lcm of denominators.
    pub fn homogenize(&self) -> Vec<BigInt> {
        let den = self.denominator_lcm();
        let mut out: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        out.push(den);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Primitive integer representative of a rational direction, preserving sign.
pub fn primitive_bigint(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

pub fn bigint_to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|c| i64::try_from(c).ok()).collect()
}
