//! The Riemann–Roch dictionary between Chern data on P² and Beilinson
//! dimension vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{gcd, DimVec3};

const TWIST_BOUND: i128 = 1_000_000;

/// Rank and Chern classes `(r, c1, c2)` of a sheaf on P².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernData {
    pub r: i64,
    pub c1: i64,
    pub c2: i64,
}

impl ChernData {
    pub fn new(r: i64, c1: i64, c2: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::RankTooSmall(r));
        }
        Ok(ChernData { r, c1, c2 })
    }

    /// Chern data of `E(j)`.
    pub fn twist(self, j: i64) -> ChernData {
        let (r, c1, c2) = (self.r as i128, self.c1 as i128, self.c2 as i128);
        let j = j as i128;
        // c(E(j)) = Σ c_i(E)(1 + jH)^{r−i}
        let c2j = c2 + (r - 1) * j * c1 + r * (r - 1) / 2 * j * j;
        ChernData {
            r: self.r,
            c1: (c1 + r * j) as i64,
            c2: c2j as i64,
        }
    }

    /// `2χ(E(j))` as a quadratic `A·j² + B·j + C`.
    fn twice_chi_coeffs(&self) -> (i128, i128, i128) {
        let (r, c1, c2) = (self.r as i128, self.c1 as i128, self.c2 as i128);
        (r, 3 * r + 2 * c1, 2 * r + 3 * c1 + c1 * c1 - 2 * c2)
    }
}

/// The normalizing twist `t` (with `χ(E(t−1)) < 0 ≤ χ(E(t))`) and the
/// dimension vector `(χ(E(t)), χ(E(t+1)), χ(E(t+2)))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistNorm {
    pub t: i64,
    pub alpha: DimVec3,
}

/// `χ(E(j)) = r + 3(c1 + jr)/2 + (c1² − 2c2)/2 + j·c1 + j²r/2`.
pub fn chi_twist(ch: &ChernData, j: i64) -> i128 {
    let (a, b, c) = ch.twice_chi_coeffs();
    let j = j as i128;
    (a * j * j + b * j + c) / 2
}

fn twice_chi(ch: &ChernData, j: i128) -> i128 {
    let (a, b, c) = ch.twice_chi_coeffs();
    a * j * j + b * j + c
}

pub fn normalize_twist(ch: &ChernData) -> Result<TwistNorm> {
    let (a, b, c) = ch.twice_chi_coeffs();
    let disc = b * b - 4 * a * c;
    if disc <= 0 {
        return Err(Error::NoValidTwist);
    }
    // The integer minimum of the quadratic sits at the floor or ceiling of
    // the vertex −b/2a.
    let v = num_integer::Integer::div_floor(&(-b), &(2 * a));
    let neg = [v + 1, v]
        .into_iter()
        .find(|&j| twice_chi(ch, j) < 0)
        .ok_or(Error::NoValidTwist)?;
    let s = num_integer::Roots::sqrt(&disc);
    let jump = num_integer::Integer::div_floor(&(-b + s), &(2 * a)) - 1;
    let mut j = neg.max(jump);
    debug_assert!(twice_chi(ch, j) < 0);
    while twice_chi(ch, j + 1) < 0 {
        j += 1;
    }
    let t = j + 1;
    if t.abs() > TWIST_BOUND {
        return Err(Error::TwistOutOfRange);
    }
    let chi = |k: i128| (twice_chi(ch, k) / 2) as u64;
    Ok(TwistNorm {
        t: t as i64,
        alpha: DimVec3::new(chi(t), chi(t + 1), chi(t + 2)),
    })
}

/// Cohomology dimensions `(h⁰, h¹, h²)` of a twist, under the natural
/// cohomology assumption.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

pub fn natural_cohomology(ch: &ChernData, j: i64) -> Result<Cohomology> {
    let t = normalize_twist(ch)?.t;
    let chi = chi_twist(ch, j);
    let mut h = Cohomology { h0: 0, h1: 0, h2: 0 };
    if chi < 0 {
        h.h1 = (-chi) as u64;
    } else if j >= t {
        h.h0 = chi as u64;
    } else {
        h.h2 = chi as u64;
    }
    Ok(h)
}

/// `gcd(a, b, c)`.
pub fn depth_alpha(alpha: DimVec3) -> u64 {
    alpha.gcd()
}

/// `gcd(r, c1, χ(E))`: the largest `h` with `[E]/h` integral in K₀(P²).
pub fn depth_chern(ch: &ChernData) -> u64 {
    let chi = chi_twist(ch, 0).unsigned_abs() as u64;
    gcd(gcd(ch.r as u64, ch.c1.unsigned_abs()), chi)
}

/// Inverse of the dictionary: Chern data of the sheaf `E` whose twist `E(t)`
/// has `χ(E(t+i)) = alpha_i`.
pub fn alpha_to_chern(alpha: DimVec3, t: i64) -> Result<ChernData> {
    let (a, b, c) = (alpha.a as i128, alpha.b as i128, alpha.c as i128);
    let r = a - 2 * b + c;
    if r < 1 {
        return Err(Error::RankTooSmall(r as i64));
    }
    let c1t = b - a - 2 * r;
    let c2t = r + (3 * c1t + c1t * c1t) / 2 - a;
    let twisted = ChernData {
        r: r as i64,
        c1: c1t as i64,
        c2: c2t as i64,
    };
    let chi0 = chi_twist(&twisted, -t);
    let c1 = c1t - r * t as i128;
    let c2 = r + (3 * c1 + c1 * c1) / 2 - chi0;
    Ok(ChernData {
        r: r as i64,
        c1: c1 as i64,
        c2: c2 as i64,
    })
}
