//! The finite rings `Z[w]/(3^k)` and dense subsets of them.
//!
//! Coordinates are machine words reduced mod `3^k`; products go through
//! `u128`, which is exact for every supported `k <= 19`. Sets are bitsets
//! indexed by `a * 3^k + b`, so membership is O(1) and iteration order is
//! lexicographic in `(a, b)`.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};

/// Largest `k` for which `Z[w]/(3^k)` arithmetic is supported.
pub const MAX_RING_K: u32 = 19;
/// Largest `k` for which dense sets (9^k bits) are built.
pub const MAX_SET_K: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRing {
    k: u32,
    m: u64,
}

impl ResidueRing {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_RING_K {
            return Err(Error::ExponentOutOfRange { k, max: MAX_RING_K });
        }
        Ok(Self { k, m: 3u64.pow(k) })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The modulus `3^k`.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Number of elements, `9^k`.
    pub fn size(&self) -> u64 {
        self.m * self.m
    }

    pub fn element(&self, a: i64, b: i64) -> ResidueElement {
        let m = self.m as i64;
        ResidueElement {
            a: a.rem_euclid(m) as u64,
            b: b.rem_euclid(m) as u64,
            ring: *self,
        }
    }

    pub fn zero(&self) -> ResidueElement {
        self.element(0, 0)
    }

    pub fn one(&self) -> ResidueElement {
        self.element(1, 0)
    }

    /// Coordinatewise reduction, a ring homomorphism `Z[w] -> Z[w]/(3^k)`.
    pub fn reduce(&self, x: &EisensteinInt) -> ResidueElement {
        let m = num_bigint::BigInt::from(self.m);
        let r = |c: &num_bigint::BigInt| -> u64 {
            let v = ((c % &m) + &m) % &m;
            u64::try_from(v).expect("reduced below modulus")
        };
        ResidueElement {
            a: r(x.a()),
            b: r(x.b()),
            ring: *self,
        }
    }

    /// All `9^k` elements, lexicographic in `(a, b)`.
    pub fn elements(&self) -> impl Iterator<Item = ResidueElement> + '_ {
        let ring = *self;
        (0..self.m).flat_map(move |a| (0..ring.m).map(move |b| ResidueElement { a, b, ring }))
    }

    #[inline]
    pub(crate) fn index(&self, (a, b): (u64, u64)) -> usize {
        (a * self.m + b) as usize
    }

    #[inline]
    pub(crate) fn coords(&self, i: usize) -> (u64, u64) {
        let i = i as u64;
        (i / self.m, i % self.m)
    }

    #[inline]
    pub(crate) fn add_raw(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
        ((a + c) % self.m, (b + d) % self.m)
    }

    #[inline]
    pub(crate) fn mul_raw(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
        let m = self.m as u128;
        let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
        let bd = b * d % m;
        let re = (a * c % m + m - bd) % m;
        let im = ((a * d + b * c) % m + m - bd) % m;
        (re as u64, im as u64)
    }

    #[inline]
    pub(crate) fn cube_raw(&self, z: (u64, u64)) -> (u64, u64) {
        self.mul_raw(self.mul_raw(z, z), z)
    }

    /// `g(x, y) = (x + wy)^2 (x + w^2 y)` for rational-integer residues.
    ///
    /// Since `x + w^2 y = (x - y) - yw`, this is `(x + wy) * N(x + wy)`.
    #[inline]
    pub(crate) fn g_raw(&self, x: u64, y: u64) -> (u64, u64) {
        let m = self.m as u128;
        let (xu, yu) = (x as u128, y as u128);
        let n = ((xu * xu % m + yu * yu % m) % m + m - xu * yu % m) % m;
        ((xu * n % m) as u64, (yu * n % m) as u64)
    }

    /// `3(z^3 + 2)`.
    #[inline]
    pub(crate) fn rhs_raw(&self, z: (u64, u64)) -> (u64, u64) {
        let (c0, c1) = self.cube_raw(z);
        let m = self.m as u128;
        (
            ((c0 as u128 + 2) * 3 % m) as u64,
            (c1 as u128 * 3 % m) as u64,
        )
    }

    /// Reduction to a smaller exponent `k' <= k`.
    pub fn project(&self, x: &ResidueElement, target: &ResidueRing) -> Result<ResidueElement> {
        self.check(x)?;
        if target.k > self.k {
            return Err(Error::ExponentOutOfRange {
                k: target.k,
                max: self.k,
            });
        }
        Ok(ResidueElement {
            a: x.a % target.m,
            b: x.b % target.m,
            ring: *target,
        })
    }

    fn check(&self, x: &ResidueElement) -> Result<()> {
        if x.ring != *self {
            return Err(Error::MixedRings(self.k, x.ring.k));
        }
        Ok(())
    }

    fn check_set_size(&self) -> Result<()> {
        if self.k > MAX_SET_K {
            return Err(Error::ExponentOutOfRange {
                k: self.k,
                max: MAX_SET_K,
            });
        }
        Ok(())
    }

    /// Collects `f(i, j)` over `0 <= i, j < 3^k`, splitting rows across
    /// the current rayon pool. Union is associative, so the result does
    /// not depend on the number of workers.
    fn image_of<F>(&self, f: F) -> Result<ResidueSet>
    where
        F: Fn(u64, u64) -> (u64, u64) + Sync,
    {
        self.check_set_size()?;
        let ring = *self;
        let bits = (0..self.m)
            .into_par_iter()
            .fold(
                || Bitset::new(ring.size() as usize),
                |mut acc, i| {
                    for j in 0..ring.m {
                        acc.insert(ring.index(f(i, j)));
                    }
                    acc
                },
            )
            .reduce(|| Bitset::new(ring.size() as usize), Bitset::union);
        Ok(ResidueSet { ring, bits })
    }

    /// `{ g(x, y) : x, y in Z/(3^k) }`.
    pub fn image_of_g(&self) -> Result<ResidueSet> {
        let ring = *self;
        self.image_of(move |x, y| ring.g_raw(x, y))
    }

    /// `{ c^3 : c in Z[w]/(3^k) }`.
    pub fn cube_set(&self) -> Result<ResidueSet> {
        let ring = *self;
        self.image_of(move |a, b| ring.cube_raw((a, b)))
    }

    /// `{ 3(z^3 + 2) : z in Z[w]/(3^k) }`.
    pub fn rhs_set(&self) -> Result<ResidueSet> {
        let ring = *self;
        self.image_of(move |a, b| ring.rhs_raw((a, b)))
    }

    pub fn named_set(&self, name: &str) -> Result<ResidueSet> {
        match name {
            "image-g" => self.image_of_g(),
            "cubes" => self.cube_set(),
            "rhs" => self.rhs_set(),
            _ => Err(Error::Unknown {
                kind: "set",
                name: name.to_string(),
            }),
        }
    }
}

/// Names accepted by [`ResidueRing::named_set`].
pub const SET_NAMES: [&str; 3] = ["image-g", "cubes", "rhs"];

/// An element `a + bw` of `Z[w]/(3^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    a: u64,
    b: u64,
    ring: ResidueRing,
}

impl ResidueElement {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub(crate) fn raw(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    fn with(&self, (a, b): (u64, u64)) -> Self {
        Self {
            a,
            b,
            ring: self.ring,
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ring.check(rhs)?;
        Ok(self.with(self.ring.add_raw(self.raw(), rhs.raw())))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ring.check(rhs)?;
        Ok(self.with(self.ring.mul_raw(self.raw(), rhs.raw())))
    }

    pub fn neg(&self) -> Self {
        let m = self.ring.m;
        self.with(((m - self.a) % m, (m - self.b) % m))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let ring = self.ring;
        let mut base = self.raw();
        let mut acc = (1 % ring.m, 0);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ring.mul_raw(acc, base);
            }
            base = ring.mul_raw(base, base);
            exp >>= 1;
        }
        self.with(acc)
    }

    /// Lift to the representative in `[0, 3^k)^2`.
    pub fn lift(&self) -> EisensteinInt {
        EisensteinInt::new(self.a, self.b)
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lift().fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    fn insert(&mut self, i: usize) -> bool {
        let (w, bit) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    fn union(mut self, other: Self) -> Self {
        for (x, y) in self.words.iter_mut().zip(other.words) {
            *x |= y;
        }
        self
    }

    fn intersection(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(x, y)| x & y)
                .collect(),
        }
    }

    fn len(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

/// A subset of `Z[w]/(3^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSet {
    ring: ResidueRing,
    bits: Bitset,
}

impl ResidueSet {
    pub fn empty(ring: ResidueRing) -> Result<Self> {
        ring.check_set_size()?;
        Ok(Self {
            ring,
            bits: Bitset::new(ring.size() as usize),
        })
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn len(&self) -> u64 {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.words.iter().all(|w| *w == 0)
    }

    pub fn contains(&self, x: &ResidueElement) -> bool {
        x.ring == self.ring && self.bits.contains(self.ring.index(x.raw()))
    }

    #[inline]
    pub(crate) fn contains_raw(&self, x: (u64, u64)) -> bool {
        self.bits.contains(self.ring.index(x))
    }

    /// Inserts `x`, returning whether it was new.
    pub fn insert(&mut self, x: &ResidueElement) -> Result<bool> {
        self.ring.check(x)?;
        Ok(self.bits.insert(self.ring.index(x.raw())))
    }

    pub(crate) fn insert_raw(&mut self, x: (u64, u64)) -> bool {
        self.bits.insert(self.ring.index(x))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring.k, other.ring.k));
        }
        Ok(Self {
            ring: self.ring,
            bits: self.bits.intersection(&other.bits),
        })
    }

    /// Members in lexicographic `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = ResidueElement> + '_ {
        let ring = self.ring;
        self.bits.iter().map(move |i| {
            let (a, b) = ring.coords(i);
            ResidueElement { a, b, ring }
        })
    }

    /// Writes the set as CSV: a `# ring=3^k set=<name>` header, then `a,b` rows.
    pub fn write_csv<W: Write>(&self, name: &str, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# ring=3^{} set={}", self.ring.k, name)?;
        for x in self.iter() {
            writeln!(out, "{},{}", x.a, x.b)?;
        }
        Ok(())
    }
}
