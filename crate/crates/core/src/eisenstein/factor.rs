use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive};

use super::{EisensteinInt, EisensteinUnit};
use crate::error::{Error, Result};
use crate::intfactor::{exact_sqrt_u128, factorize};

/// `unit * prod(prime^exponent)`, primes canonical and sorted by `(norm, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: EisensteinUnit,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl Factorization {
    pub fn product(&self) -> EisensteinInt {
        self.factors
            .iter()
            .fold(self.unit.to_int(), |acc, (p, e)| &acc * &p.pow(*e))
    }

    /// Exponent of each prime in `self * other^weight`, ordered as factors are.
    pub(crate) fn merged_exponents(&self, other: &Self, weight: u32) -> Vec<(EisensteinInt, u32)> {
        let mut merged: BTreeMap<(BigInt, BigInt, BigInt), (EisensteinInt, u32)> = BTreeMap::new();
        let mut put = |p: &EisensteinInt, e: u32| {
            merged
                .entry(sort_key(p))
                .or_insert_with(|| (p.clone(), 0))
                .1 += e;
        };
        for (p, e) in &self.factors {
            put(p, *e);
        }
        for (p, e) in &other.factors {
            put(p, *e * weight);
        }
        merged.into_values().collect()
    }
}

fn sort_key(p: &EisensteinInt) -> (BigInt, BigInt, BigInt) {
    (p.norm(), p.a().clone(), p.b().clone())
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.unit)?;
        for (p, e) in &self.factors {
            if *e == 1 {
                write!(f, " * ({p})")?;
            } else {
                write!(f, " * ({p})^{e}")?;
            }
        }
        Ok(())
    }
}

/// A prime of norm `p` for a rational prime `p = 1 (mod 3)`: the first
/// solution of `a^2 - ab + b^2 = p` with `0 < a <= ceil(sqrt(4p/3))`.
pub(crate) fn split_prime(p: &BigUint) -> EisensteinInt {
    if let Some(small) = p.to_u64() {
        let p = small as u128;
        let bound = (4 * p / 3).sqrt() + 1;
        for a in 1..=bound {
            // b = (a ± sqrt(4p - 3a^2)) / 2
            let Some(disc) = (4 * p).checked_sub(3 * a * a) else {
                break;
            };
            if let Some(s) = exact_sqrt_u128(disc) {
                if (a + s) % 2 == 0 {
                    return EisensteinInt::new(a as u64, ((a + s) / 2) as u64);
                }
            }
        }
    } else {
        let p = BigInt::from(p.clone());
        let four_p: BigInt = &p * 4;
        let bound: BigInt = (&four_p / 3u32).sqrt() + 1u32;
        let mut a = BigInt::one();
        while a <= bound {
            let disc: BigInt = &four_p - &a * &a * 3u32;
            if disc.is_negative() {
                break;
            }
            let s = disc.sqrt();
            if &s * &s == disc && (&a + &s) % 2 == BigInt::from(0) {
                let b = (&a + &s) / 2;
                return EisensteinInt::new(a, b);
            }
            a += 1;
        }
    }
    panic!("no element of norm {p}: not a prime congruent to 1 mod 3");
}

impl EisensteinInt {
    /// Unique factorization into canonical primes.
    ///
    /// The norm is factored over `Z`; 3 contributes `pi`, primes `2 mod 3`
    /// stay inert with half the norm exponent, and primes `1 mod 3` split
    /// into a conjugate pair whose exponents are found by trial division.
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::UndefinedForZero("factorization"));
        }
        let norm = self.norm().to_biguint().expect("norm is positive");
        let mut rest = self.clone();
        let mut factors = Vec::new();
        for (p, e) in factorize(&norm) {
            let residue = (&p % 3u32).to_u32().unwrap();
            match residue {
                0 => {
                    let (v, cofactor) = rest.pi_valuation()?;
                    factors.push((EisensteinInt::pi(), v));
                    rest = cofactor;
                }
                2 => {
                    let q = EisensteinInt::from(BigInt::from(p));
                    let half = e / 2;
                    rest = rest.div_exact(&q.pow(half)).expect("inert prime divides");
                    factors.push((q, half));
                }
                _ => {
                    let pi_p = split_prime(&p).canonical_associate().1;
                    let pi_bar = pi_p.conj().canonical_associate().1;
                    let mut e1 = 0;
                    while let Some(q) = rest.div_exact(&pi_p) {
                        rest = q;
                        e1 += 1;
                    }
                    let e2 = e - e1;
                    if e2 > 0 {
                        rest = rest.div_exact(&pi_bar.pow(e2)).expect("conjugate divides");
                    }
                    for (q, k) in [(pi_p, e1), (pi_bar, e2)] {
                        if k > 0 {
                            factors.push((q, k));
                        }
                    }
                }
            }
        }
        let unit = EisensteinUnit::from_int(&rest).expect("cofactor of full norm is a unit");
        factors.sort_by_key(|(p, _)| sort_key(p));
        Ok(Factorization { unit, factors })
    }
}
