use std::fmt;
use std::ops::Mul;

use super::EisensteinInt;

/// One of the six units `±1, ±w, ±w^2` of `Z[w]`.
///
/// Represented as `sign * w^e` so the group law is index arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EisensteinUnit {
    One,
    NegOne,
    Omega,
    NegOmega,
    OmegaSq,
    NegOmegaSq,
}

impl EisensteinUnit {
    pub const ALL: [EisensteinUnit; 6] = [
        EisensteinUnit::One,
        EisensteinUnit::NegOne,
        EisensteinUnit::Omega,
        EisensteinUnit::NegOmega,
        EisensteinUnit::OmegaSq,
        EisensteinUnit::NegOmegaSq,
    ];

    fn parts(self) -> (bool, u8) {
        use EisensteinUnit::*;
        match self {
            One => (false, 0),
            NegOne => (true, 0),
            Omega => (false, 1),
            NegOmega => (true, 1),
            OmegaSq => (false, 2),
            NegOmegaSq => (true, 2),
        }
    }

    fn from_parts(neg: bool, e: u8) -> Self {
        use EisensteinUnit::*;
        match (neg, e % 3) {
            (false, 0) => One,
            (true, 0) => NegOne,
            (false, 1) => Omega,
            (true, 1) => NegOmega,
            (false, _) => OmegaSq,
            (true, _) => NegOmegaSq,
        }
    }

    pub fn to_int(self) -> EisensteinInt {
        let (neg, e) = self.parts();
        let base = match e {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(0, 1),
            _ => EisensteinInt::new(-1, -1),
        };
        if neg {
            -base
        } else {
            base
        }
    }

    /// Recognizes a unit among Eisenstein integers.
    pub fn from_int(x: &EisensteinInt) -> Option<Self> {
        Self::ALL.into_iter().find(|u| u.to_int() == *x)
    }

    pub fn inverse(self) -> Self {
        let (neg, e) = self.parts();
        Self::from_parts(neg, 3 - e)
    }

    /// Units have norm 1, so conjugation is inversion.
    pub fn conj(self) -> Self {
        self.inverse()
    }

    pub fn pow(self, n: u32) -> Self {
        let (neg, e) = self.parts();
        Self::from_parts(neg && n % 2 == 1, ((e as u32 * n) % 3) as u8)
    }

    /// Cube root within the unit group. Only `±1` are cubes of units.
    pub fn cube_root(self) -> Option<Self> {
        match self {
            EisensteinUnit::One => Some(EisensteinUnit::One),
            EisensteinUnit::NegOne => Some(EisensteinUnit::NegOne),
            _ => None,
        }
    }
}

impl Mul for EisensteinUnit {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (n1, e1) = self.parts();
        let (n2, e2) = rhs.parts();
        Self::from_parts(n1 ^ n2, e1 + e2)
    }
}

impl fmt::Display for EisensteinUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_int().fmt(f)
    }
}
