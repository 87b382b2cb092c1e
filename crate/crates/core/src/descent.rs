//! Descent of specializations of the cubic Kummer cover `t^3 = x`.
//!
//! A point `a` of `Q(w)` descends to `Q` exactly when `a` is a value of
//! `g(x, y) = (x + wy)^2 (x + w^2 y)` with `x, y` rational and `a` is not a
//! cube. Writing `alpha = x + wy`, `g(x, y) = alpha * N(alpha)`, so
//! `N(a) = N(alpha)^3` and `alpha = a / N(a)^(1/3)` is the only candidate
//! preimage; this makes membership decidable without any search.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::eisenstein::{EisensteinInt, EisensteinRational};
use crate::error::{Error, Result};
use crate::intfactor::exact_cbrt;

/// `g(x, y)` for rational `x`, `y`.
pub fn eval_g(x: &BigRational, y: &BigRational) -> EisensteinRational {
    let alpha = EisensteinRational::from_coords(x, y);
    alpha.scale(&alpha.norm())
}

/// `g(x, y)` at integer arguments.
pub fn eval_g_int(x: &BigInt, y: &BigInt) -> EisensteinInt {
    let alpha = EisensteinInt::new(x.clone(), y.clone());
    alpha.scale(&alpha.norm())
}

fn rational_cbrt(r: &BigRational) -> Option<BigRational> {
    Some(BigRational::new(
        exact_cbrt(r.numer())?,
        exact_cbrt(r.denom())?,
    ))
}

/// Rational `(x, y)` with `g(x, y) = a`, if any. Unique for `a != 0`.
pub fn solve_g(a: &EisensteinRational) -> Option<DescentWitness> {
    if a.is_zero() {
        return Some(DescentWitness {
            x: BigRational::zero(),
            y: BigRational::zero(),
        });
    }
    let r = rational_cbrt(&a.norm())?;
    let alpha = a.scale(&r.recip());
    (alpha.norm() == r).then(|| DescentWitness {
        x: alpha.x(),
        y: alpha.y(),
    })
}

/// Rational pair `(x, y)` exhibiting a point as a value of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentWitness {
    x: BigRational,
    y: BigRational,
}

impl DescentWitness {
    /// Builds a witness for `value`, checking `g(x, y) = value`.
    pub fn new(value: &EisensteinRational, x: BigRational, y: BigRational) -> Result<Self> {
        if eval_g(&x, &y) != *value {
            return Err(Error::InvalidWitness {
                x: x.to_string(),
                y: y.to_string(),
                value: value.to_string(),
            });
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    /// `x + wy`.
    pub fn alpha(&self) -> EisensteinRational {
        EisensteinRational::from_coords(&self.x, &self.y)
    }

    pub fn value(&self) -> EisensteinRational {
        eval_g(&self.x, &self.y)
    }
}

impl Serialize for DescentWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DescentWitness", 2)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.end()
    }
}

/// A point of the base: an element of `Q(w)` or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointValue {
    Finite(EisensteinRational),
    Infinity,
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointValue::Finite(a) => a.fmt(f),
            PointValue::Infinity => f.write_str("inf"),
        }
    }
}

impl From<EisensteinRational> for PointValue {
    fn from(a: EisensteinRational) -> Self {
        PointValue::Finite(a)
    }
}

/// Outcome for the specialization of `t^3 = x` at a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DescentClassification {
    /// Connected and descends; `g(witness) = a`.
    Descends(DescentWitness),
    /// `a` is a nonzero cube, so the fiber splits.
    Disconnected,
    /// Connected, but `a` is not a value of `g`.
    NoDescent,
    /// `a` is `0` or infinity, on the branch locus.
    Undefined,
}

impl DescentClassification {
    pub fn label(&self) -> &'static str {
        match self {
            DescentClassification::Descends(_) => "descends",
            DescentClassification::Disconnected => "disconnected",
            DescentClassification::NoDescent => "no-descent",
            DescentClassification::Undefined => "undefined",
        }
    }

    pub fn witness(&self) -> Option<&DescentWitness> {
        match self {
            DescentClassification::Descends(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for DescentClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescentClassification::Descends(w) => write!(f, "descends (x = {}, y = {})", w.x, w.y),
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for DescentClassification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DescentClassification", 2)?;
        st.serialize_field("verdict", self.label())?;
        st.serialize_field("witness", &self.witness())?;
        st.end()
    }
}

pub fn classify(point: &PointValue) -> DescentClassification {
    let a = match point {
        PointValue::Infinity => return DescentClassification::Undefined,
        PointValue::Finite(a) if a.is_zero() => return DescentClassification::Undefined,
        PointValue::Finite(a) => a,
    };
    if a.is_cube() {
        return DescentClassification::Disconnected;
    }
    match solve_g(a) {
        Some(w) => DescentClassification::Descends(w),
        None => DescentClassification::NoDescent,
    }
}

/// Checks `a^2 = conj(a) * (x + wy)^3`, the cube-free form of the statement
/// that `(cbrt(a)^2 / (x + wy))^3 = conj(a)`.
pub fn verify_galois_commute(a: &EisensteinRational, w: &DescentWitness) -> Result<bool> {
    if a.is_zero() || w.value() != *a {
        return Err(Error::InvalidWitness {
            x: w.x.to_string(),
            y: w.y.to_string(),
            value: a.to_string(),
        });
    }
    Ok(a.pow(2) == &a.conj() * &w.alpha().pow(3))
}

/// Integers `(x', y')` with `g(x', y') * pi^3 = g(x, y)`, namely
/// `x' + wy' = -(x + wy) / pi`.
pub fn reduce_by_pi(x: &BigInt, y: &BigInt) -> Result<(BigInt, BigInt)> {
    let alpha = EisensteinInt::new(x.clone(), y.clone());
    // pi | g(x, y) = alpha * N(alpha) iff pi | alpha, as pi | N(alpha) iff 3 | N(alpha).
    let quotient = alpha.div_by_pi().ok_or_else(|| Error::NotDivisibleByPi {
        x: x.to_string(),
        y: y.to_string(),
    })?;
    let reduced = -quotient;
    Ok((reduced.a().clone(), reduced.b().clone()))
}

/// Given `pi | g(x, y)`, reports whether `pi` divides both `x + wy` and `x + w^2 y`.
pub fn check_pi_divides_parts(x: &BigInt, y: &BigInt) -> Result<bool> {
    let g = eval_g_int(x, y);
    if !g.pi_divides() {
        return Err(Error::NotDivisibleByPi {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    let alpha = EisensteinInt::new(x.clone(), y.clone());
    Ok(alpha.pi_divides() && alpha.conj().pi_divides())
}

/// A cover `t^3 = f(z)` given by the coefficients of `f`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicKummerCover {
    coeffs: Vec<EisensteinRational>,
}

impl CubicKummerCover {
    pub fn new(mut coeffs: Vec<EisensteinRational>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::ConstantCover);
        }
        Ok(Self { coeffs })
    }

    /// `t^3 = 3(z^3 + 2)`.
    pub fn three_cube_plus_two() -> Self {
        Self::new(vec![6.into(), 0.into(), 0.into(), 3.into()]).expect("cubic")
    }

    pub fn coeffs(&self) -> &[EisensteinRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: &EisensteinRational) -> EisensteinRational {
        self.coeffs
            .iter()
            .rev()
            .fold(EisensteinRational::zero(), |acc, c| &(&acc * z) + c)
    }

    /// Value of `f` relevant to the fiber over `z0`. At infinity the
    /// homogenized cubic `t^3 = c3 z^3 + ... + c0 u^3` gives `t^3 = c3` at
    /// `u = 0`; other degrees have no value there.
    pub fn value_at(&self, z0: &PointValue) -> PointValue {
        match z0 {
            PointValue::Finite(z) => PointValue::Finite(self.eval(z)),
            PointValue::Infinity if self.degree() == 3 => {
                PointValue::Finite(self.coeffs[3].clone())
            }
            PointValue::Infinity => PointValue::Infinity,
        }
    }

    pub fn specialize(&self, z0: &PointValue) -> DescentClassification {
        classify(&self.value_at(z0))
    }
}

impl fmt::Display for CubicKummerCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
