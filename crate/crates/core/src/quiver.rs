//! Dimension vectors and Euler forms for the two quivers in play: the
//! `u`-arrow Kronecker quiver `Q(u)` and the three-vertex Beilinson quiver
//! with its three commutativity relations.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// `gcd(0, 0) = 0` and `gcd(0, n) = n`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Dimension vector `(x y)` of a Kronecker representation; `x` sits at the
/// source vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVec2 {
    pub x: u64,
    pub y: u64,
}

impl DimVec2 {
    pub const fn new(x: u64, y: u64) -> Self {
        DimVec2 { x, y }
    }

    pub fn swap(self) -> Self {
        DimVec2::new(self.y, self.x)
    }

    pub fn gcd(self) -> u64 {
        gcd(self.x, self.y)
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Tits form `x² + y² − u·x·y` of `Q(u)`.
    pub fn tits(self, u: u64) -> i128 {
        let (x, y, u) = (self.x as i128, self.y as i128, u as i128);
        x * x + y * y - u * x * y
    }
}

/// Dimension vector `(a b c)` of a representation of the multiplication
/// `k³ ⊗ k³ → S²(k³)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVec3 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl DimVec3 {
    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        DimVec3 { a, b, c }
    }

    pub fn gcd(self) -> u64 {
        gcd3(self.a, self.b, self.c)
    }

    pub fn total(self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn as_array(self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// Componentwise division; `None` unless `h` divides every entry.
    pub fn div_exact(self, h: u64) -> Option<DimVec3> {
        if h == 0 || self.a % h != 0 || self.b % h != 0 || self.c % h != 0 {
            return None;
        }
        Some(DimVec3::new(self.a / h, self.b / h, self.c / h))
    }
}

impl Add for DimVec2 {
    type Output = DimVec2;
    fn add(self, o: DimVec2) -> DimVec2 {
        DimVec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Mul<DimVec2> for u64 {
    type Output = DimVec2;
    fn mul(self, d: DimVec2) -> DimVec2 {
        DimVec2::new(self * d.x, self * d.y)
    }
}

impl Add for DimVec3 {
    type Output = DimVec3;
    fn add(self, o: DimVec3) -> DimVec3 {
        DimVec3::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Mul<DimVec3> for u64 {
    type Output = DimVec3;
    fn mul(self, d: DimVec3) -> DimVec3 {
        DimVec3::new(self * d.a, self * d.b, self * d.c)
    }
}

impl fmt::Display for DimVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Display for DimVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

fn parse_components<const N: usize>(s: &str) -> Result<[u64; N], Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(Error::Parse(format!("expected {N} comma-separated integers, got {s:?}")));
    }
    let mut out = [0u64; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension component {p:?}")))?;
    }
    Ok(out)
}

impl FromStr for DimVec2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let [x, y] = parse_components::<2>(s)?;
        Ok(DimVec2::new(x, y))
    }
}

impl FromStr for DimVec3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let [a, b, c] = parse_components::<3>(s)?;
        Ok(DimVec3::new(a, b, c))
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(DimVec2);
string_serde!(DimVec3);

/// Euler form of `Q(u)`: `αx·βx + αy·βy − u·αx·βy`.
pub fn euler_kronecker(u: u64, alpha: DimVec2, beta: DimVec2) -> i64 {
    let (ax, ay, bx, by) = (alpha.x as i64, alpha.y as i64, beta.x as i64, beta.y as i64);
    ax * bx + ay * by - u as i64 * ax * by
}

/// Euler form of the Beilinson quiver: three arrows on each of the two
/// layers and three relations from vertex 0 to vertex 2.
pub fn euler_beilinson(alpha: DimVec3, beta: DimVec3) -> i64 {
    let [a0, a1, a2] = alpha.as_array().map(|v| v as i64);
    let [b0, b1, b2] = beta.as_array().map(|v| v as i64);
    a0 * b0 + a1 * b1 + a2 * b2 - 3 * (a0 * b1 + a1 * b2) + 3 * a0 * b2
}

/// Dimension vectors of the indecomposable projectives `P(0)`, `P(1)`, `P(2)`,
/// i.e. of `O`, `O(−1)`, `O(−2)`.
pub const PROJECTIVE_DIMS: [DimVec3; 3] = [
    DimVec3::new(1, 3, 6),
    DimVec3::new(0, 1, 3),
    DimVec3::new(0, 0, 1),
];
