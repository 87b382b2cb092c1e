//! Brute-force oracles shared by the integration suites. Nothing here goes
//! through the library's residue or descent engines.
#![allow(dead_code)]

use eisenstein_descent::{EisensteinInt, EisensteinRational};
use num_bigint::BigInt;

/// `(a + bw)(c + dw)` over `i64` reduced mod `m`, written out from
/// `w^2 = -1 - w` independently of the library.
pub fn mul_mod(m: i64, (a, b): (i64, i64), (c, d): (i64, i64)) -> (i64, i64) {
    let re = a * c - b * d;
    let im = a * d + b * c - b * d;
    (re.rem_euclid(m), im.rem_euclid(m))
}

/// `(x + wy)^2 (x + w^2 y)` with `x + w^2 y = (x - y) - yw`, by two products.
pub fn g_mod(m: i64, x: i64, y: i64) -> (i64, i64) {
    let u = (x, y);
    let v = (x - y, -y);
    mul_mod(m, mul_mod(m, u, u), v)
}

pub fn cube_mod(m: i64, z: (i64, i64)) -> (i64, i64) {
    mul_mod(m, mul_mod(m, z, z), z)
}

/// All `(x, y, z)` with `g(x, y) = 3(z^3 + 2)` mod `m`, by a direct loop.
pub fn naive_no_solution_triples(m: i64) -> Vec<(i64, i64, (i64, i64))> {
    let mut out = Vec::new();
    for x in 0..m {
        for y in 0..m {
            let g = g_mod(m, x, y);
            for za in 0..m {
                for zb in 0..m {
                    let c = cube_mod(m, (za, zb));
                    let rhs = ((3 * (c.0 + 2)).rem_euclid(m), (3 * c.1).rem_euclid(m));
                    if rhs == g {
                        out.push((x, y, (za, zb)));
                    }
                }
            }
        }
    }
    out
}

/// All `(c, x, y)` where `c^3 g(x, y)` is not any `g(x', y')` mod `m`.
pub fn naive_cube_closure_failures(m: i64) -> Vec<((i64, i64), i64, i64)> {
    let mut out = Vec::new();
    for ca in 0..m {
        for cb in 0..m {
            let u = cube_mod(m, (ca, cb));
            for x in 0..m {
                for y in 0..m {
                    let t = mul_mod(m, u, g_mod(m, x, y));
                    let hit = (0..m).any(|x2| (0..m).any(|y2| g_mod(m, x2, y2) == t));
                    if !hit {
                        out.push(((ca, cb), x, y));
                    }
                }
            }
        }
    }
    out
}

/// Searches `(a + bw)/d` with `|a|, |b| <= coord_bound`, `1 <= d <= den_bound`
/// for a cube root of `target`.
pub fn brute_force_cube_root(
    target: &EisensteinRational,
    coord_bound: i64,
    den_bound: i64,
) -> Option<EisensteinRational> {
    for d in 1..=den_bound {
        for a in -coord_bound..=coord_bound {
            for b in -coord_bound..=coord_bound {
                let c = EisensteinRational::new(EisensteinInt::new(a, b), BigInt::from(d)).unwrap();
                if c.pow(3) == *target {
                    return Some(c);
                }
            }
        }
    }
    None
}
