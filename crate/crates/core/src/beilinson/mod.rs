//! Representations of the multiplication `σ: k³ ⊗ k³ → S²(k³)`, i.e. of the
//! Beilinson quiver `0 ⇉ 1 ⇉ 2` (three arrows per layer) with the
//! commutativity relations, and the sheaf dictionary on top of them.
//!
//! Basis conventions are fixed once: `U = V = k³` with basis `e₀, e₁, e₂`,
//! `S²(k³)` with the monomial basis `x², xy, xz, y², yz, z²`, and the kernel
//! of `σ` spanned by `e_i⊗e_j − e_j⊗e_i` for `(i, j) ∈ {(0,1), (0,2), (1,2)}`.

mod chern;
mod sample;
mod sheaf;

pub use chern::{
    alpha_to_chern, chi_twist, depth_alpha, depth_chern, natural_cohomology, normalize_twist,
    ChernData, Cohomology, TwistNorm,
};
pub use sample::{
    left_feasible, right_feasible, sample_general, sample_left_general, sample_right_general,
    MAX_RESAMPLES,
};
pub use sheaf::{rep_is_sheaf, sheaf_fiber_maps, SheafCheck};

use crate::error::{Error, Result};
use crate::exactlin::{left_mul_operator, right_mul_operator, ExactMat, FieldSpec};
use crate::kronecker::KroneckerRep;
use crate::quiver::DimVec3;

/// Index of the monomial `x_i·x_j` in `(x², xy, xz, y², yz, z²)`.
pub const fn monomial(i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    match (a, b) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    }
}

/// Index pairs `(i, j)`, `i < j`, of the kernel basis `e_i⊗e_j − e_j⊗e_i`.
pub const KERNEL_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A representation of `σ` with dimension vector `(a b c)`:
/// `a01[i]: k^a → k^b`, `a12[j]: k^b → k^c`, `a02[m]: k^a → k^c`, subject to
/// `a12[j]·a01[i] = a02[monomial(i, j)]` for all `i, j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeilinsonRep {
    field: FieldSpec,
    dim: DimVec3,
    a01: Vec<ExactMat>,
    a12: Vec<ExactMat>,
    a02: Vec<ExactMat>,
}

fn check_blocks(
    field: FieldSpec,
    name: &str,
    mats: &[ExactMat],
    count: usize,
    shape: (usize, usize),
) -> Result<()> {
    if mats.len() != count {
        return Err(Error::ShapeMismatch(format!(
            "{name} has {} matrices, expected {count}",
            mats.len()
        )));
    }
    for m in mats {
        if m.field() != field {
            return Err(Error::FieldMismatch);
        }
        if m.shape() != shape {
            return Err(Error::ShapeMismatch(format!(
                "{name} block is {:?}, expected {:?}",
                m.shape(),
                shape
            )));
        }
    }
    Ok(())
}

impl BeilinsonRep {
    /// Validates shapes and the relation; the only way to build a rep from
    /// arbitrary matrices.
    pub fn new(
        field: FieldSpec,
        dim: DimVec3,
        a01: Vec<ExactMat>,
        a12: Vec<ExactMat>,
        a02: Vec<ExactMat>,
    ) -> Result<Self> {
        let (a, b, c) = (dim.a as usize, dim.b as usize, dim.c as usize);
        check_blocks(field, "a01", &a01, 3, (b, a))?;
        check_blocks(field, "a12", &a12, 3, (c, b))?;
        check_blocks(field, "a02", &a02, 6, (c, a))?;
        let rep = BeilinsonRep {
            field,
            dim,
            a01,
            a12,
            a02,
        };
        rep.check_relation()?;
        Ok(rep)
    }

    /// Re-checks `a12[j]·a01[i] = a02[monomial(i, j)]`, reporting the first
    /// failing pair.
    pub fn check_relation(&self) -> Result<()> {
        for i in 0..3 {
            for j in 0..3 {
                if self.a12[j].mul(&self.a01[i]) != self.a02[monomial(i, j)] {
                    return Err(Error::RelationViolated { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn zero(field: FieldSpec, dim: DimVec3) -> Self {
        let (a, b, c) = (dim.a as usize, dim.b as usize, dim.c as usize);
        BeilinsonRep {
            field,
            dim,
            a01: vec![ExactMat::zeros(field, b, a); 3],
            a12: vec![ExactMat::zeros(field, c, b); 3],
            a02: vec![ExactMat::zeros(field, c, a); 6],
        }
    }

    /// The simple representation at `vertex` (0, 1 or 2).
    pub fn simple(field: FieldSpec, vertex: usize) -> Self {
        let mut d = [0u64; 3];
        d[vertex] = 1;
        Self::zero(field, DimVec3::new(d[0], d[1], d[2]))
    }

    /// The indecomposable projective `P(i)`: `P(0) = O = (k, k³, S²k³)`,
    /// `P(1) = O(−1) = (0, k, k³)`, `P(2) = O(−2) = (0, 0, k)`.
    pub fn projective(field: FieldSpec, i: usize) -> Self {
        let unit = |n: usize, k: usize| ExactMat::from_fn(field, n, 1, |r, _| i64::from(r == k));
        match i {
            0 => {
                let a01 = (0..3).map(|i| unit(3, i)).collect();
                // a12[j] sends e_i to the monomial x_i x_j
                let a12 = (0..3)
                    .map(|j| ExactMat::from_fn(field, 6, 3, |r, i| i64::from(r == monomial(i, j))))
                    .collect();
                let a02 = (0..6).map(|m| unit(6, m)).collect();
                BeilinsonRep {
                    field,
                    dim: DimVec3::new(1, 3, 6),
                    a01,
                    a12,
                    a02,
                }
            }
            1 => {
                let mut r = Self::zero(field, DimVec3::new(0, 1, 3));
                r.a12 = (0..3).map(|j| unit(3, j)).collect();
                r
            }
            2 => Self::simple(field, 2),
            _ => panic!("projective index {i} out of range"),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> DimVec3 {
        self.dim
    }

    pub fn a01(&self) -> &[ExactMat] {
        &self.a01
    }

    pub fn a12(&self) -> &[ExactMat] {
        &self.a12
    }

    pub fn a02(&self) -> &[ExactMat] {
        &self.a02
    }

    pub fn direct_sum(&self, other: &BeilinsonRep) -> Result<BeilinsonRep> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let diag = |x: &ExactMat, y: &ExactMat| {
            let mut m = ExactMat::zeros(self.field, x.rows() + y.rows(), x.cols() + y.cols());
            m.paste(0, 0, x);
            m.paste(x.rows(), x.cols(), y);
            m
        };
        let zip = |xs: &[ExactMat], ys: &[ExactMat]| -> Vec<ExactMat> {
            xs.iter().zip(ys).map(|(x, y)| diag(x, y)).collect()
        };
        Ok(BeilinsonRep {
            field: self.field,
            dim: self.dim + other.dim,
            a01: zip(&self.a01, &other.a01),
            a12: zip(&self.a12, &other.a12),
            a02: zip(&self.a02, &other.a02),
        })
    }

    /// The dual representation, of dimension `(c b a)`. Since `σ` is
    /// symmetric the dual is again a representation of `σ`.
    pub fn dual(&self) -> BeilinsonRep {
        let t = |xs: &[ExactMat]| xs.iter().map(ExactMat::transpose).collect::<Vec<_>>();
        BeilinsonRep {
            field: self.field,
            dim: DimVec3::new(self.dim.c, self.dim.b, self.dim.a),
            a01: t(&self.a12),
            a12: t(&self.a01),
            a02: t(&self.a02),
        }
    }

    /// First differential of `Hom(resolution of R, S)`:
    /// `(f₀, f₁, f₂) ↦ ((f₁·A01_R[i] − A01_S[i]·f₀)_i, (f₂·A12_R[j] − A12_S[j]·f₁)_j)`.
    fn hom_differential(&self, s: &BeilinsonRep) -> ExactMat {
        let f = self.field;
        let (ar, br, cr) = (self.dim.a as usize, self.dim.b as usize, self.dim.c as usize);
        let (as_, bs, cs) = (s.dim.a as usize, s.dim.b as usize, s.dim.c as usize);
        let n0 = as_ * ar;
        let n1 = bs * br;
        let n2 = cs * cr;
        let mut d0 = ExactMat::zeros(f, 3 * bs * ar + 3 * cs * br, n0 + n1 + n2);
        for i in 0..3 {
            let row = i * bs * ar;
            d0.paste(row, 0, &left_mul_operator(&s.a01[i], ar).neg());
            d0.paste(row, n0, &right_mul_operator(&self.a01[i], bs));
        }
        let base = 3 * bs * ar;
        for j in 0..3 {
            let row = base + j * cs * br;
            d0.paste(row, n0, &left_mul_operator(&s.a12[j], br).neg());
            d0.paste(row, n0 + n1, &right_mul_operator(&self.a12[j], cs));
        }
        d0
    }

    /// Second differential: `(g_i, k_j) ↦ (A12_S[j]·g_i + k_j·A01_R[i] −
    /// A12_S[i]·g_j − k_i·A01_R[j])` for each kernel pair `i < j`.
    fn ext_differential(&self, s: &BeilinsonRep) -> ExactMat {
        let f = self.field;
        let (ar, br) = (self.dim.a as usize, self.dim.b as usize);
        let (bs, cs) = (s.dim.b as usize, s.dim.c as usize);
        let g = bs * ar;
        let k = cs * br;
        let block = cs * ar;
        let mut d1 = ExactMat::zeros(f, 3 * block, 3 * g + 3 * k);
        for (r, &(i, j)) in KERNEL_PAIRS.iter().enumerate() {
            let row = r * block;
            d1.paste(row, i * g, &left_mul_operator(&s.a12[j], ar));
            d1.paste(row, j * g, &left_mul_operator(&s.a12[i], ar).neg());
            d1.paste(row, 3 * g + j * k, &right_mul_operator(&self.a01[i], cs));
            d1.paste(row, 3 * g + i * k, &right_mul_operator(&self.a01[j], cs).neg());
        }
        d1
    }

    /// Composition `R(0)⊗K → R(0)⊗U⊗V → R(1)⊗V` as a `3b × 3a` matrix.
    pub fn kernel_composition(&self) -> ExactMat {
        let (a, b) = (self.dim.a as usize, self.dim.b as usize);
        let mut m = ExactMat::zeros(self.field, 3 * b, 3 * a);
        for (k, &(i, j)) in KERNEL_PAIRS.iter().enumerate() {
            m.paste(j * b, k * a, &self.a01[i]);
            m.paste(i * b, k * a, &self.a01[j].neg());
        }
        m
    }

    pub fn end_dim(&self) -> usize {
        hom_dim(self, self).expect("same field")
    }
}

/// `dim Hom(R, S)`.
pub fn hom_dim(r: &BeilinsonRep, s: &BeilinsonRep) -> Result<usize> {
    if r.field != s.field {
        return Err(Error::FieldMismatch);
    }
    Ok(r.hom_differential(s).nullity())
}

/// `(dim Ext¹(R, S), dim Ext²(R, S))`, from `Hom(−, S)` applied to the
/// projective resolution
/// `0 → R(0)⊗Λ²⊗P(2) → R(0)⊗k³⊗P(1) ⊕ R(1)⊗k³⊗P(2) → ⊕ R(i)⊗P(i) → R`.
pub fn ext_dims(r: &BeilinsonRep, s: &BeilinsonRep) -> Result<(usize, usize)> {
    if r.field != s.field {
        return Err(Error::FieldMismatch);
    }
    let d0 = r.hom_differential(s);
    let d1 = r.ext_differential(s);
    let rank0 = d0.rank();
    let rank1 = d1.rank();
    Ok((d1.cols() - rank1 - rank0, d1.rows() - rank1))
}

/// Injectivity of `R(0)⊗K → R(1)⊗V`, which places `R` in the left general
/// component of its dimension vector.
pub fn is_left_general(r: &BeilinsonRep) -> bool {
    r.kernel_composition().rank() == 3 * r.dim.a as usize
}

/// The functor `− ⊗ (S ⊕ S′)` for the reduction pair `((0,1,0), (1,0,0))`:
/// a `Q(3)` representation of dimension `(n m)` becomes a representation of
/// dimension `(n, m, 0)` with the Kronecker matrices as `a01`.
pub fn kronecker_inflate(k: &KroneckerRep) -> Result<BeilinsonRep> {
    if k.arrows() != 3 {
        return Err(Error::ArrowMismatch(k.arrows(), 3));
    }
    let d = k.dim();
    let mut rep = BeilinsonRep::zero(k.field(), DimVec3::new(d.x, d.y, 0));
    rep.a01 = k.mats().to_vec();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::kron_sample;
    use crate::quiver::{euler_beilinson, DimVec2};
    use proptest::prelude::*;

    fn f() -> FieldSpec {
        FieldSpec::prime(1009).unwrap()
    }

    #[test]
    fn sigma_structure() {
        let mut seen = [0; 6];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(monomial(i, j), monomial(j, i));
                seen[monomial(i, j)] += 1;
            }
        }
        // surjective onto S²(k³); off-diagonal monomials hit twice
        assert_eq!(seen, [1, 2, 2, 1, 2, 1]);
    }

    #[test]
    fn canonical_projectives_satisfy_relation() {
        for i in 0..3 {
            BeilinsonRep::projective(f(), i).check_relation().unwrap();
        }
        let o = BeilinsonRep::projective(FieldSpec::Rationals, 0);
        o.check_relation().unwrap();
    }

    #[test]
    fn zero_matrices_are_valid() {
        let d = DimVec3::new(2, 3, 4);
        let z = BeilinsonRep::zero(f(), d);
        BeilinsonRep::new(f(), d, z.a01.clone(), z.a12.clone(), z.a02.clone()).unwrap();
    }

    #[test]
    fn perturbed_structure_violates_relation() {
        let o = BeilinsonRep::projective(f(), 0);
        let mut a02 = o.a02.clone();
        a02[monomial(1, 2)] = ExactMat::from_fn(f(), 6, 1, |r, _| i64::from(r == 0));
        let err = BeilinsonRep::new(f(), o.dim, o.a01.clone(), o.a12.clone(), a02).unwrap_err();
        assert_eq!(err, Error::RelationViolated { i: 1, j: 2 });
    }

    #[test]
    fn shapes_are_checked() {
        let z = BeilinsonRep::zero(f(), DimVec3::new(1, 1, 1));
        let err = BeilinsonRep::new(f(), DimVec3::new(1, 2, 1), z.a01.clone(), z.a12.clone(), z.a02.clone());
        assert!(matches!(err, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn left_generality_examples() {
        assert!(is_left_general(&BeilinsonRep::projective(f(), 0)));
        assert!(!is_left_general(&BeilinsonRep::zero(f(), DimVec3::new(1, 4, 2))));
        assert!(is_left_general(&BeilinsonRep::zero(f(), DimVec3::new(0, 4, 2))));
    }

    #[test]
    fn hom_from_projectives_and_simples() {
        let r = sample_left_general(DimVec3::new(1, 4, 8), f(), 3).unwrap();
        let s0 = BeilinsonRep::simple(f(), 2);
        assert_eq!(hom_dim(&s0, &r).unwrap(), 8);
        for i in 0..3 {
            let p = BeilinsonRep::projective(f(), i);
            assert_eq!(hom_dim(&p, &r).unwrap() as u64, r.dim().as_array()[i]);
            assert_eq!(ext_dims(&p, &r).unwrap(), (0, 0));
        }
        assert_eq!(s0.direct_sum(&s0).unwrap().end_dim(), 4);
    }

    #[test]
    fn ext_between_simples() {
        let s = |v| BeilinsonRep::simple(f(), v);
        assert_eq!(hom_dim(&s(1), &s(2)).unwrap(), 0);
        assert_eq!(ext_dims(&s(1), &s(2)).unwrap(), (3, 0));
        assert_eq!(ext_dims(&s(0), &s(2)).unwrap(), (0, 3));
        assert_eq!(ext_dims(&s(0), &s(1)).unwrap(), (3, 0));
        assert_eq!(ext_dims(&s(2), &s(0)).unwrap(), (0, 0));
    }

    #[test]
    fn a02_equations_are_implied() {
        let r = sample_left_general(DimVec3::new(1, 3, 5), f(), 11).unwrap();
        let s = sample_left_general(DimVec3::new(1, 4, 7), f(), 12).unwrap();
        // add the a02 intertwining rows and check the kernel does not shrink
        let d0 = r.hom_differential(&s);
        let (ar, cs) = (r.dim.a as usize, s.dim.c as usize);
        let n0 = s.dim.a as usize * ar;
        let n1 = s.dim.b as usize * r.dim.b as usize;
        let mut extra = ExactMat::zeros(f(), 6 * cs * ar, d0.cols());
        for m in 0..6 {
            extra.paste(m * cs * ar, 0, &left_mul_operator(&s.a02[m], ar).neg());
            extra.paste(m * cs * ar, n0 + n1, &right_mul_operator(&r.a02[m], cs));
        }
        let full = ExactMat::vstack(f(), d0.cols(), &[&d0, &extra]);
        assert_eq!(full.nullity(), d0.nullity());
    }

    #[test]
    fn inflation_preserves_hom_and_ext() {
        let s1 = kronecker_inflate(&KroneckerRep::zero(f(), 3, DimVec2::new(0, 1))).unwrap();
        assert_eq!(s1.dim(), DimVec3::new(0, 1, 0));
        let s2 = kronecker_inflate(&KroneckerRep::zero(f(), 3, DimVec2::new(1, 0))).unwrap();
        assert_eq!(s2.dim(), DimVec3::new(1, 0, 0));
        for seed in 0..10 {
            let k = kron_sample(3, DimVec2::new(1, 3), f(), seed).unwrap();
            let l = kron_sample(3, DimVec2::new(2, 2), f(), seed + 100).unwrap();
            let (ki, li) = (kronecker_inflate(&k).unwrap(), kronecker_inflate(&l).unwrap());
            assert_eq!(ki.end_dim(), k.end_dim());
            assert_eq!(hom_dim(&ki, &li).unwrap(), k.hom_dim(&l).unwrap());
            assert_eq!(hom_dim(&li, &ki).unwrap(), l.hom_dim(&k).unwrap());
            assert_eq!(ext_dims(&ki, &li).unwrap(), (k.ext_dim(&l).unwrap(), 0));
            assert_eq!(ext_dims(&li, &ki).unwrap(), (l.ext_dim(&k).unwrap(), 0));
        }
        let k2 = kron_sample(2, DimVec2::new(1, 1), f(), 0).unwrap();
        assert_eq!(kronecker_inflate(&k2), Err(Error::ArrowMismatch(2, 3)));
    }

    #[test]
    fn duality_swaps_hom() {
        let r = sample_left_general(DimVec3::new(1, 3, 4), f(), 5).unwrap();
        let s = sample_left_general(DimVec3::new(0, 2, 5), f(), 6).unwrap();
        assert_eq!(r.dual().dim(), DimVec3::new(4, 3, 1));
        r.dual().check_relation().unwrap();
        assert_eq!(hom_dim(&r, &s).unwrap(), hom_dim(&s.dual(), &r.dual()).unwrap());
        assert_eq!(ext_dims(&r, &s).unwrap(), ext_dims(&s.dual(), &r.dual()).unwrap());
    }

    fn small_dim() -> impl Strategy<Value = DimVec3> {
        (0u64..4, 0u64..4, 0u64..5)
            .prop_map(|(a, b, c)| DimVec3::new(a, b, c))
            .prop_filter("samplable", |d| left_feasible(*d) || right_feasible(*d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn euler_consistency(d1 in small_dim(), d2 in small_dim(), seed in any::<u64>(), extra in 0usize..3) {
            let mut r = sample_general(d1, f(), seed).unwrap();
            r = r.direct_sum(&BeilinsonRep::simple(f(), extra)).unwrap();
            let s = sample_general(d2, f(), seed.wrapping_add(1)).unwrap();
            let h = hom_dim(&r, &s).unwrap() as i64;
            let (e1, e2) = ext_dims(&r, &s).unwrap();
            prop_assert_eq!(h - e1 as i64 + e2 as i64, euler_beilinson(r.dim(), s.dim()));
        }

        #[test]
        fn hom_from_s0_is_top_dimension(d in small_dim(), seed in any::<u64>()) {
            let r = sample_general(d, f(), seed).unwrap();
            prop_assert_eq!(hom_dim(&BeilinsonRep::simple(f(), 2), &r).unwrap() as u64, d.c);
        }
    }
}
