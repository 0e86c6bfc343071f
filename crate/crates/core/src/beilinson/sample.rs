//! Random points of the left (and, by duality, right) general component.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{monomial, BeilinsonRep};
use crate::error::{Error, Result};
use crate::exactlin::{ExactMat, FieldSpec};
use crate::quiver::DimVec3;

/// Draws of `a01` before giving up on finding one of maximal rank.
pub const MAX_RESAMPLES: usize = 8;

/// `(I_a⊗σ, −(φ01⊗I_V)): k^a⊗U⊗V → k^a⊗W ⊕ k^b⊗V`.
///
/// Column `(i·3 + j)·a + v` is `e_v⊗e_i⊗e_j`; rows `m·a + v` index
/// `e_v⊗x^m` and `6a + j·b + w` index `e_w⊗e_j`.
fn left_map(field: FieldSpec, a01: &[ExactMat], a: usize, b: usize) -> ExactMat {
    let mut m = ExactMat::zeros(field, 6 * a + 3 * b, 9 * a);
    let id = ExactMat::identity(field, a);
    for i in 0..3 {
        for j in 0..3 {
            let col = (i * 3 + j) * a;
            m.paste(monomial(i, j) * a, col, &id);
            m.paste(6 * a + j * b, col, &a01[i].neg());
        }
    }
    m
}

/// Whether `alpha` has a left general component: `a ≤ b`, except that for
/// `a = b = 1` the map `Λ² → V` induced by a single vector is the cross
/// product, of rank two everywhere.
pub fn left_feasible(alpha: DimVec3) -> bool {
    alpha.a <= alpha.b && (alpha.a, alpha.b) != (1, 1)
}

/// [`left_feasible`] for the dual vector `(c b a)`.
pub fn right_feasible(alpha: DimVec3) -> bool {
    left_feasible(DimVec3::new(alpha.c, alpha.b, alpha.a))
}

/// Samples a representation from the unique left general component:
/// uniform `a01`, then a uniform map from the cokernel of [`left_map`] to
/// `k^c`, whose two blocks become `a02` and `a12`.
pub fn sample_left_general(alpha: DimVec3, field: FieldSpec, seed: u64) -> Result<BeilinsonRep> {
    let p = field.require_prime("left general sampling needs a prime field")?;
    if !left_feasible(alpha) {
        return Err(Error::DimensionInfeasible(alpha));
    }
    let (a, b, c) = (alpha.a as usize, alpha.b as usize, alpha.c as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RESAMPLES {
        let a01: Vec<ExactMat> = (0..3).map(|_| ExactMat::random(p, b, a, &mut rng)).collect();
        let m = left_map(field, &a01, a, b);
        if m.rank() < 9 * a {
            continue;
        }
        let coker = m.transpose().nullspace().transpose();
        let g = ExactMat::random(p, c, coker.rows(), &mut rng);
        let gq = g.mul(&coker);
        let a02 = (0..6).map(|k| gq.block(0, k * a, c, a)).collect();
        let a12 = (0..3).map(|j| gq.block(0, 6 * a + j * b, c, b)).collect();
        return BeilinsonRep::new(field, alpha, a01, a12, a02);
    }
    Err(Error::GenericityFailure(format!(
        "no maximal-rank a01 for {alpha} after {MAX_RESAMPLES} draws (seed {seed})"
    )))
}

/// The dual of a left general sample of `(c b a)`; needs `c ≤ b`.
pub fn sample_right_general(alpha: DimVec3, field: FieldSpec, seed: u64) -> Result<BeilinsonRep> {
    let flipped = DimVec3::new(alpha.c, alpha.b, alpha.a);
    match sample_left_general(flipped, field, seed) {
        Ok(r) => Ok(r.dual()),
        Err(Error::DimensionInfeasible(_)) => Err(Error::DimensionInfeasible(alpha)),
        Err(e) => Err(e),
    }
}

/// Left general when available, otherwise right general.
pub fn sample_general(alpha: DimVec3, field: FieldSpec, seed: u64) -> Result<BeilinsonRep> {
    if left_feasible(alpha) {
        sample_left_general(alpha, field, seed)
    } else {
        sample_right_general(alpha, field, seed)
    }
}
