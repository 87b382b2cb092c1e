//! Arithmetic in `Z[w]` and `Q(w)`, `w^2 + w + 1 = 0`.
//!
//! Elements are stored in the basis `(1, w)`; products are reduced with
//! `w^2 = -1 - w`. Coordinates are arbitrary precision throughout.

mod factor;
mod rational;
mod text;
mod unit;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::Factorization;
pub use rational::EisensteinRational;
pub use text::parse_element;
pub use unit::EisensteinUnit;

/// An Eisenstein integer `a + b w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// `pi = 1 + 2w`, the prime above 3. `pi^2 = -3`.
    pub fn pi() -> Self {
        Self::new(1, 2)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element lies in `Z`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: `w -> w^2`, i.e. `a + bw -> (a - b) - bw`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// Field norm `a^2 - ab + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.a * k, &self.b * k)
    }

    /// Divides both coordinates by the rational integer `k`, if exact.
    pub fn div_integer(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let (qa, ra) = self.a.div_rem(k);
        let (qb, rb) = self.b.div_rem(k);
        (ra.is_zero() && rb.is_zero()).then(|| Self::new(qa, qb))
    }

    /// Gcd of the two coordinates (the content), non-negative.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }

    /// `self / rhs` when `rhs` divides `self` in `Z[w]`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        (self * &rhs.conj()).div_integer(&rhs.norm())
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        if self.is_zero() {
            return rhs.is_zero();
        }
        rhs.div_exact(self).is_some()
    }

    /// Norm-Euclidean division: `self = q * rhs + r` with `N(r) < N(rhs)`.
    ///
    /// `q` rounds each coordinate of `self / rhs` to a nearest integer
    /// (ties upward), which leaves a remainder of norm at most `3/4 N(rhs)`.
    pub fn divmod(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = rhs.norm();
        let num = self * &rhs.conj();
        let two_n = &n * 2;
        let round = |c: &BigInt| -> BigInt { (c * 2u32 + &n).div_floor(&two_n) };
        let q = Self::new(round(&num.a), round(&num.b));
        let r = self - &(&q * rhs);
        Ok((q, r))
    }

    /// Generator of the ideal `(self, rhs)` in canonical associate form.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let (mut x, mut y) = (self.clone(), rhs.clone());
        while !y.is_zero() {
            let (_, r) = x.divmod(&y)?;
            x = y;
            y = r;
        }
        Ok(x.canonical_associate().1)
    }

    /// Splits off the largest power of `pi`: `self = pi^v * cofactor`.
    pub fn pi_valuation(&self) -> Result<(u32, Self)> {
        if self.is_zero() {
            return Err(Error::UndefinedForZero("pi-adic valuation"));
        }
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_by_pi() {
            cur = next;
            v += 1;
        }
        Ok((v, cur))
    }

    /// `self / pi` if `pi | self`. Uses `1/pi = -pi/3`.
    pub fn div_by_pi(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // pi | a + bw  <=>  3 | a + b, since w = 1 (mod pi).
        if !(&self.a + &self.b).is_multiple_of(&BigInt::from(3)) {
            return None;
        }
        let t = self * &Self::pi();
        Some(Self::new(-(t.a / 3u32), -(t.b / 3u32)))
    }

    pub fn pi_divides(&self) -> bool {
        (&self.a + &self.b).is_multiple_of(&BigInt::from(3))
    }

    /// The canonical associate `c` and unit `u` with `self = u * c`.
    ///
    /// `pi`-power part is fixed as a power of `1 + 2w`; the remaining
    /// cofactor is rotated to the associate with positive first coordinate
    /// and lexicographically least `(a, b)`.
    pub fn canonical_associate(&self) -> (EisensteinUnit, Self) {
        if self.is_zero() {
            return (EisensteinUnit::One, Self::zero());
        }
        let (v, cofactor) = self.pi_valuation().expect("nonzero");
        let (u, c) = cofactor.lex_min_associate();
        let canon = &Self::pi().pow(v) * &c;
        (u, canon)
    }

    fn lex_min_associate(&self) -> (EisensteinUnit, Self) {
        EisensteinUnit::ALL
            .iter()
            .map(|u| (*u, &u.inverse().to_int() * self))
            .filter(|(_, c)| c.a.is_positive())
            .min_by(|(_, x), (_, y)| (&x.a, &x.b).cmp(&(&y.a, &y.b)))
            .expect("some associate has a > 0")
    }
}

impl From<i64> for EisensteinInt {
    fn from(n: i64) -> Self {
        Self::new(n, 0)
    }
}

impl From<BigInt> for EisensteinInt {
    fn from(n: BigInt) -> Self {
        Self::new(n, 0)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        EisensteinRational::from(self.clone()).fmt(f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: &EisensteinInt) -> EisensteinInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<EisensteinInt> for &EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
        let bd = &self.b * &rhs.b;
        EisensteinInt::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-&self.a, -&self.b)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}
