use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::EisensteinInt;
use crate::error::{Error, Result};
use crate::intfactor::exact_cbrt;

/// An element `num / den` of `Q(w)`, always stored reduced with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinRational {
    num: EisensteinInt,
    den: BigInt,
}

impl EisensteinRational {
    pub fn new(num: EisensteinInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: EisensteinInt, den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        let mut g = num.content().gcd(&den);
        if den.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return Self { num, den };
        }
        Self {
            num: num.div_integer(&g).expect("g divides the content"),
            den: den / g,
        }
    }

    /// `x + y w` for rational `x`, `y`.
    pub fn from_coords(x: &BigRational, y: &BigRational) -> Self {
        let den = x.denom().lcm(y.denom());
        let a = x.numer() * (&den / x.denom());
        let b = y.numer() * (&den / y.denom());
        Self::reduced(EisensteinInt::new(a, b), den)
    }

    pub fn from_rational(x: &BigRational) -> Self {
        Self::from_coords(x, &BigRational::zero())
    }

    pub fn zero() -> Self {
        EisensteinInt::zero().into()
    }

    pub fn one() -> Self {
        EisensteinInt::one().into()
    }

    pub fn num(&self) -> &EisensteinInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Coordinate of `1`.
    pub fn x(&self) -> BigRational {
        BigRational::new(self.num.a().clone(), self.den.clone())
    }

    /// Coordinate of `w`.
    pub fn y(&self) -> BigRational {
        BigRational::new(self.num.b().clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.num.is_rational()
    }

    pub fn as_integer(&self) -> Option<&EisensteinInt> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        BigRational::new(self.num.norm(), &self.den * &self.den)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1 / (n / d) = d * conj(n) / N(n)
        Ok(Self::reduced(
            self.num.conj().scale(&self.den),
            self.num.norm(),
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::reduced(self.num.scale(k.numer()), &self.den * k.denom())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::reduced(self.num.pow(exp), self.den.pow(exp))
    }

    /// A cube root in `Q(w)`, if one exists.
    ///
    /// `a = n / d` is a cube exactly when `n d^2` is a cube in `Z[w]`. The
    /// latter is decided from the factorizations of `n` and `d`: every
    /// prime exponent must vanish mod 3 and the leftover unit must be `±1`.
    pub fn cube_root(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // N(b^3) = N(b)^3: a cheap necessary condition.
        let n = self.norm();
        exact_cbrt(n.numer())?;
        exact_cbrt(n.denom())?;

        let num_f = self.num.factor().ok()?;
        let den_f = EisensteinInt::from(self.den.clone()).factor().ok()?;
        let unit = (num_f.unit * den_f.unit.pow(2)).cube_root()?;
        let mut root = unit.to_int();
        for (p, e) in num_f.merged_exponents(&den_f, 2) {
            if e % 3 != 0 {
                return None;
            }
            root = &root * &p.pow(e / 3);
        }
        let candidate = Self::reduced(root, self.den.clone());
        debug_assert_eq!(candidate.pow(3), *self);
        (candidate.pow(3) == *self).then_some(candidate)
    }

    pub fn is_cube(&self) -> bool {
        self.cube_root().is_some()
    }
}

impl From<EisensteinInt> for EisensteinRational {
    fn from(num: EisensteinInt) -> Self {
        Self {
            num,
            den: BigInt::one(),
        }
    }
}

impl From<i64> for EisensteinRational {
    fn from(n: i64) -> Self {
        EisensteinInt::from(n).into()
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_element(f, &self.x(), &self.y())
    }
}

impl Add<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::reduced(
            &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::reduced(
            &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> Self {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> EisensteinRational {
        EisensteinRational::new(EisensteinInt::new(a, b), BigInt::from(d)).unwrap()
    }

    #[test]
    fn stays_reduced() {
        let x = q(4, -6, -8);
        assert_eq!(x.num(), &EisensteinInt::new(-2, 3));
        assert_eq!(x.den(), &BigInt::from(4));
        assert!(EisensteinRational::new(EisensteinInt::one(), BigInt::zero()).is_err());
    }

    #[test]
    fn inverse_of_omega() {
        assert_eq!(q(0, 1, 1).inverse().unwrap(), q(-1, -1, 1));
        assert_eq!(
            EisensteinRational::zero().inverse(),
            Err(Error::DivisionByZero)
        );
        let z = q(3, -7, 5);
        assert_eq!(&z * &z.inverse().unwrap(), EisensteinRational::one());
        assert_eq!(z.checked_div(&z).unwrap(), EisensteinRational::one());
    }

    #[test]
    fn norm_and_conj() {
        assert_eq!(q(1, 2, 1).norm(), BigRational::from_integer(3.into()));
        assert_eq!(q(1, 2, 2).norm(), BigRational::new(3.into(), 4.into()));
        assert_eq!(q(1, 2, 1).conj(), q(-1, -2, 1));
    }

    #[test]
    fn cube_examples() {
        assert_eq!(q(-27, 0, 8).cube_root(), Some(q(-3, 0, 2)));
        assert!(!q(0, 1, 1).is_cube());
        assert!(!q(6, 3, 1).is_cube());
        assert_eq!(
            EisensteinRational::zero().cube_root(),
            Some(EisensteinRational::zero())
        );
        // pi^3 = -3 pi is a cube; so is (2 + w)^3 / 5^3
        let pi3 = EisensteinRational::from(EisensteinInt::pi().pow(3));
        assert_eq!(pi3.cube_root().unwrap().pow(3), pi3);
        let c = q(2, 1, 5).pow(3);
        assert_eq!(c.cube_root().unwrap().pow(3), c);
        // A rational whose norm is a cube but which is not itself a cube.
        let w_times_8 = q(0, 8, 1);
        assert!(!w_times_8.is_cube());
    }
}
