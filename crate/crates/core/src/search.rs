//! Height-bounded search for points of descent on a cover `t^3 = f(z)`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::descent::{
    verify_galois_commute, CubicKummerCover, DescentClassification, DescentWitness, PointValue,
};
use crate::eisenstein::EisensteinRational;
use crate::error::{Error, Result};
use crate::report::fingerprint;

/// Bound on `max(|p|, q)` for `p/q` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightBound(u64);

impl HeightBound {
    pub fn new(h: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::ZeroHeight);
        }
        Ok(Self(h))
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}

/// Height of a rational in lowest terms.
pub fn height(r: &BigRational) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// All rationals of height exactly `h`, in increasing order.
fn rationals_of_height(h: u64) -> Vec<BigRational> {
    let mut out = Vec::new();
    let h_i = h as i64;
    // q = h with |p| <= h, or |p| = h with q < h.
    for p in -h_i..=h_i {
        if p.unsigned_abs().gcd(&h) == 1 {
            out.push((p, h_i));
        }
    }
    for q in 1..h_i {
        if q.unsigned_abs().gcd(&h) == 1 {
            out.push((h_i, q));
            out.push((-h_i, q));
        }
    }
    out.sort_by(|(p1, q1), (p2, q2)| (p1 * q2).cmp(&(p2 * q1)));
    out.into_iter()
        .map(|(p, q)| BigRational::new(p.into(), q.into()))
        .collect()
}

/// Every rational of height at most `bound`, each once, in nondecreasing
/// height and increasing value within a height. `0` has height 1.
pub fn enumerate_rationals(bound: HeightBound) -> impl Iterator<Item = BigRational> {
    (1..=bound.get()).flat_map(rationals_of_height)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub descends: u64,
    pub disconnected: u64,
    pub no_descent: u64,
    pub undefined: u64,
}

impl ClassCounts {
    fn add(&mut self, c: &DescentClassification) {
        match c {
            DescentClassification::Descends(_) => self.descends += 1,
            DescentClassification::Disconnected => self.disconnected += 1,
            DescentClassification::NoDescent => self.no_descent += 1,
            DescentClassification::Undefined => self.undefined += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.descends + self.disconnected + self.no_descent + self.undefined
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentFinding {
    pub point: String,
    pub value: String,
    pub witness: DescentWitnessText,
    pub galois_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentWitnessText {
    pub x: String,
    pub y: String,
}

impl From<&DescentWitness> for DescentWitnessText {
    fn from(w: &DescentWitness) -> Self {
        Self {
            x: w.x().to_string(),
            y: w.y().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfinityOutcome {
    pub value: String,
    pub classification: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub report: &'static str,
    pub height: u64,
    pub coefficients: Vec<String>,
    pub points_tested: u64,
    pub counts: ClassCounts,
    pub infinity: InfinityOutcome,
    pub descends: Vec<DescentFinding>,
    pub input_fingerprint: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Classifies `f(z0)` for every rational `z0` of height at most `bound`,
/// plus the point at infinity.
pub fn search(cover: &CubicKummerCover, bound: HeightBound) -> SearchReport {
    let start = Instant::now();
    let points: Vec<PointValue> = enumerate_rationals(bound)
        .map(|r| PointValue::Finite(EisensteinRational::from_rational(&r)))
        .chain(std::iter::once(PointValue::Infinity))
        .collect();

    // Order-preserving parallel map; results line up with `points`.
    let outcomes: Vec<(PointValue, DescentClassification)> = points
        .par_iter()
        .map(|z0| {
            let value = cover.value_at(z0);
            let class = crate::descent::classify(&value);
            (value, class)
        })
        .collect();

    let mut counts = ClassCounts::default();
    let mut descends = Vec::new();
    for (z0, (value, class)) in points.iter().zip(&outcomes) {
        counts.add(class);
        if let (DescentClassification::Descends(w), PointValue::Finite(a)) = (class, value) {
            descends.push(DescentFinding {
                point: z0.to_string(),
                value: a.to_string(),
                witness: w.into(),
                galois_identity: verify_galois_commute(a, w).unwrap_or(false),
            });
        }
    }
    let (inf_value, inf_class) = outcomes.last().expect("infinity is always tested");
    let coefficients: Vec<String> = cover.coeffs().iter().map(|c| c.to_string()).collect();
    let input_fingerprint = fingerprint(
        "search",
        &[
            ("coeffs", coefficients.join(",")),
            ("height", bound.get().to_string()),
        ],
    );
    SearchReport {
        report: "search",
        height: bound.get(),
        coefficients,
        points_tested: points.len() as u64,
        counts,
        infinity: InfinityOutcome {
            value: inf_value.to_string(),
            classification: inf_class.label().to_string(),
        },
        descends,
        input_fingerprint,
        elapsed: start.elapsed(),
    }
}
