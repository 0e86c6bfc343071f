//! Exact arithmetic over the rationals and prime fields, and the dense
//! matrix kernels (rank, nullspace, solve) used throughout the crate.
//!
//! Elimination always pivots on the first nonzero entry scanning columns
//! left to right, so every result is bit-reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated prime modulus `p` with `5 <= p < 2^32`.
///
/// The upper bound keeps products of two residues inside a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Prime> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl Prime {
    pub const DEFAULT: Prime = Prime(1009);

    pub fn new(p: u64) -> Result<Prime> {
        if (5..1 << 32).contains(&p) && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl Default for Prime {
    fn default() -> Self {
        Prime::DEFAULT
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p.get()),
        }
    }

    /// The prime, or `UnsupportedField` when called on the rationals.
    pub fn require_prime(&self, what: &'static str) -> Result<Prime> {
        match self {
            FieldSpec::Prime(p) => Ok(*p),
            FieldSpec::Rationals => Err(Error::UnsupportedField(what)),
        }
    }

    pub fn scalar_from_int(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Fp(reduce_int(v, p.get())),
        }
    }

    /// Parses the text form of one entry: a decimal residue in `[0, p)` or a
    /// `num/den` (or bare integer) rational.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Prime(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
                if v >= p.get() {
                    return Err(Error::Parse(format!("residue {v} not in [0, {p})")));
                }
                Ok(Scalar::Fp(v))
            }
            FieldSpec::Rationals => {
                let bad = || Error::Parse(format!("bad rational {s:?}"));
                let q = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
                };
                Ok(Scalar::Q(q))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn reduce_int(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

/// A single field element, tagged with the kind of field it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(v) => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, e: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

struct ModP(u64);

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, e: &u64) -> bool {
        *e == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        let (mut base, mut exp, mut acc) = (*a, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, e: &BigRational) -> bool {
        e.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref<A: Arith>(ar: &A, rows: usize, cols: usize, data: &mut [A::E]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ar.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&data[r * cols + c]);
        for j in c..cols {
            data[r * cols + j] = ar.mul(&data[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || ar.is_zero(&data[i * cols + c]) {
                continue;
            }
            let f = data[i * cols + c].clone();
            for j in c..cols {
                let t = ar.mul(&f, &data[r * cols + j]);
                data[i * cols + j] = ar.sub(&data[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rank_of<A: Arith>(ar: &A, rows: usize, cols: usize, data: &[A::E]) -> usize {
    let mut work = data.to_vec();
    rref(ar, rows, cols, &mut work).len()
}

fn nullspace_of<A: Arith>(ar: &A, rows: usize, cols: usize, data: &[A::E]) -> (usize, Vec<A::E>) {
    let mut work = data.to_vec();
    let pivots = rref(ar, rows, cols, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let n = free.len();
    let mut out = vec![ar.zero(); cols * n];
    for (k, &f) in free.iter().enumerate() {
        out[f * n + k] = ar.one();
        for (r, &pc) in pivots.iter().enumerate() {
            out[pc * n + k] = ar.neg(&work[r * cols + f]);
        }
    }
    (n, out)
}

fn solve_in<A: Arith>(
    ar: &A,
    rows: usize,
    acols: usize,
    a: &[A::E],
    bcols: usize,
    b: &[A::E],
) -> Option<Vec<A::E>> {
    let cols = acols + bcols;
    let mut work = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        work.extend_from_slice(&a[i * acols..(i + 1) * acols]);
        work.extend_from_slice(&b[i * bcols..(i + 1) * bcols]);
    }
    let pivots = rref(ar, rows, cols, &mut work);
    if pivots.iter().any(|&c| c >= acols) {
        return None;
    }
    let mut x = vec![ar.zero(); acols * bcols];
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..bcols {
            x[pc * bcols + j] = work[r * cols + acols + j].clone();
        }
    }
    Some(x)
}

fn matmul<A: Arith>(ar: &A, l: &[A::E], r: &[A::E], n: usize, k: usize, m: usize) -> Vec<A::E> {
    let mut out = vec![ar.zero(); n * m];
    for i in 0..n {
        for t in 0..k {
            let a = &l[i * k + t];
            if ar.is_zero(a) {
                continue;
            }
            for j in 0..m {
                let p = ar.mul(a, &r[t * m + j]);
                out[i * m + j] = ar.add(&out[i * m + j], &p);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Store {
    Fp(Vec<u64>),
    Q(Vec<BigRational>),
}

/// A dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    store: Store,
}

impl ExactMat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> ExactMat {
        let store = match field {
            FieldSpec::Prime(_) => Store::Fp(vec![0; rows * cols]),
            FieldSpec::Rationals => Store::Q(vec![BigRational::zero(); rows * cols]),
        };
        ExactMat {
            field,
            rows,
            cols,
            store,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> ExactMat {
        Self::scaled_identity(field, n, 1)
    }

    pub fn scaled_identity(field: FieldSpec, n: usize, c: i64) -> ExactMat {
        Self::from_fn(field, n, n, |i, j| if i == j { c } else { 0 })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> ExactMat {
        let ints = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1)));
        let store = match field {
            FieldSpec::Prime(p) => Store::Fp(ints.map(|v| reduce_int(v, p.get())).collect()),
            FieldSpec::Rationals => {
                Store::Q(ints.map(|v| BigRational::from_integer(v.into())).collect())
            }
        };
        ExactMat {
            field,
            rows,
            cols,
            store,
        }
    }

    /// Builds a matrix from integer rows; every row must have the same length.
    pub fn from_rows(field: FieldSpec, rows: &[&[i64]]) -> ExactMat {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(field, rows.len(), cols, |i, j| rows[i][j])
    }

    pub fn from_residues(p: Prime, rows: usize, cols: usize, entries: Vec<u64>) -> ExactMat {
        assert_eq!(entries.len(), rows * cols);
        assert!(entries.iter().all(|&v| v < p.get()));
        ExactMat {
            field: FieldSpec::Prime(p),
            rows,
            cols,
            store: Store::Fp(entries),
        }
    }

    /// A matrix with independent uniform entries in `F_p`.
    pub fn random<R: Rng + ?Sized>(p: Prime, rows: usize, cols: usize, rng: &mut R) -> ExactMat {
        let entries = (0..rows * cols).map(|_| rng.gen_range(0..p.get())).collect();
        Self::from_residues(p, rows, cols, entries)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols);
        let k = i * self.cols + j;
        match &self.store {
            Store::Fp(v) => Scalar::Fp(v[k]),
            Store::Q(v) => Scalar::Q(v[k].clone()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) -> Result<()> {
        assert!(i < self.rows && j < self.cols);
        let k = i * self.cols + j;
        match (&mut self.store, s) {
            (Store::Fp(v), Scalar::Fp(x)) if x < self.field.modulus().unwrap_or(0) => v[k] = x,
            (Store::Q(v), Scalar::Q(x)) => v[k] = x,
            _ => return Err(Error::FieldMismatch),
        }
        Ok(())
    }

    /// Residues of a prime-field matrix, row-major.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.store {
            Store::Fp(v) => Some(v),
            Store::Q(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Fp(v) => v.iter().all(|&x| x == 0),
            Store::Q(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn transpose(&self) -> ExactMat {
        let (r, c) = (self.rows, self.cols);
        let store = match &self.store {
            Store::Fp(v) => Store::Fp((0..r * c).map(|k| v[(k % r) * c + k / r]).collect()),
            Store::Q(v) => Store::Q((0..r * c).map(|k| v[(k % r) * c + k / r].clone()).collect()),
        };
        ExactMat {
            field: self.field,
            rows: c,
            cols: r,
            store,
        }
    }

    fn zip(&self, other: &ExactMat, sub: bool) -> ExactMat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        let store = match (&self.store, &other.store) {
            (Store::Fp(a), Store::Fp(b)) => {
                let ar = ModP(self.field.modulus().unwrap());
                Store::Fp(
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| if sub { ar.sub(x, y) } else { ar.add(x, y) })
                        .collect(),
                )
            }
            (Store::Q(a), Store::Q(b)) => Store::Q(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| if sub { x - y } else { x + y })
                    .collect(),
            ),
            _ => unreachable!(),
        };
        ExactMat {
            store,
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> ExactMat {
        ExactMat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            store: Store::Fp(Vec::new()),
        }
    }

    /// Panics on field or shape mismatch.
    pub fn add(&self, other: &ExactMat) -> ExactMat {
        self.zip(other, false)
    }

    /// Panics on field or shape mismatch.
    pub fn sub(&self, other: &ExactMat) -> ExactMat {
        self.zip(other, true)
    }

    pub fn neg(&self) -> ExactMat {
        ExactMat::zeros(self.field, self.rows, self.cols).sub(self)
    }

    /// Matrix product. Panics on field or inner-dimension mismatch.
    pub fn mul(&self, other: &ExactMat) -> ExactMat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let store = match (&self.store, &other.store) {
            (Store::Fp(a), Store::Fp(b)) => {
                Store::Fp(matmul(&ModP(self.field.modulus().unwrap()), a, b, n, k, m))
            }
            (Store::Q(a), Store::Q(b)) => Store::Q(matmul(&Rat, a, b, n, k, m)),
            _ => unreachable!(),
        };
        ExactMat {
            field: self.field,
            rows: n,
            cols: m,
            store,
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ExactMat) -> ExactMat {
        assert_eq!(self.field, other.field, "field mismatch");
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let rows = r1 * r2;
        let cols = c1 * c2;
        let idx = |k: usize| {
            let (i, j) = (k / cols, k % cols);
            ((i / r2) * c1 + j / c2, (i % r2) * c2 + j % c2)
        };
        let store = match (&self.store, &other.store) {
            (Store::Fp(a), Store::Fp(b)) => {
                let ar = ModP(self.field.modulus().unwrap());
                Store::Fp(
                    (0..rows * cols)
                        .map(|k| {
                            let (x, y) = idx(k);
                            ar.mul(&a[x], &b[y])
                        })
                        .collect(),
                )
            }
            (Store::Q(a), Store::Q(b)) => Store::Q(
                (0..rows * cols)
                    .map(|k| {
                        let (x, y) = idx(k);
                        &a[x] * &b[y]
                    })
                    .collect(),
            ),
            _ => unreachable!(),
        };
        ExactMat {
            field: self.field,
            rows,
            cols,
            store,
        }
    }

    /// Horizontal concatenation; all blocks must share row count and field.
    pub fn hstack(field: FieldSpec, rows: usize, blocks: &[&ExactMat]) -> ExactMat {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = ExactMat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks must share column count and field.
    pub fn vstack(field: FieldSpec, cols: usize, blocks: &[&ExactMat]) -> ExactMat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = ExactMat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.paste(off, 0, b);
            off += b.rows;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMat) {
        assert_eq!(self.field, block.field, "field mismatch");
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        let cols = self.cols;
        match (&mut self.store, &block.store) {
            (Store::Fp(a), Store::Fp(b)) => {
                for i in 0..block.rows {
                    let dst = (r0 + i) * cols + c0;
                    a[dst..dst + block.cols]
                        .copy_from_slice(&b[i * block.cols..(i + 1) * block.cols]);
                }
            }
            (Store::Q(a), Store::Q(b)) => {
                for i in 0..block.rows {
                    let dst = (r0 + i) * cols + c0;
                    a[dst..dst + block.cols]
                        .clone_from_slice(&b[i * block.cols..(i + 1) * block.cols]);
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMat {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let src = self.cols;
        let store = match &self.store {
            Store::Fp(v) => Store::Fp(
                (0..rows * cols)
                    .map(|k| v[(r0 + k / cols) * src + c0 + k % cols])
                    .collect(),
            ),
            Store::Q(v) => Store::Q(
                (0..rows * cols)
                    .map(|k| v[(r0 + k / cols) * src + c0 + k % cols].clone())
                    .collect(),
            ),
        };
        ExactMat {
            field: self.field,
            rows,
            cols,
            store,
        }
    }

    /// Stacks the columns into a single column vector.
    pub fn vec_columns(&self) -> ExactMat {
        let t = self.transpose();
        ExactMat {
            rows: self.rows * self.cols,
            cols: 1,
            ..t
        }
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Fp(v) => rank_of(&ModP(self.field.modulus().unwrap()), self.rows, self.cols, v),
            Store::Q(v) => rank_of(&Rat, self.rows, self.cols, v),
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right kernel, as the columns of the returned matrix.
    pub fn nullspace(&self) -> ExactMat {
        let (n, store) = match &self.store {
            Store::Fp(v) => {
                let (n, out) = nullspace_of(&ModP(self.field.modulus().unwrap()), self.rows, self.cols, v);
                (n, Store::Fp(out))
            }
            Store::Q(v) => {
                let (n, out) = nullspace_of(&Rat, self.rows, self.cols, v);
                (n, Store::Q(out))
            }
        };
        ExactMat {
            field: self.field,
            rows: self.cols,
            cols: n,
            store,
        }
    }

    /// Solves `self · x = b`. `Ok(None)` means the system is inconsistent.
    pub fn solve(&self, b: &ExactMat) -> Result<Option<ExactMat>> {
        if self.field != b.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != b.rows {
            return Err(Error::ShapeMismatch(format!(
                "a has {} rows, b has {}",
                self.rows, b.rows
            )));
        }
        let (acols, bcols) = (self.cols, b.cols);
        let store = match (&self.store, &b.store) {
            (Store::Fp(a), Store::Fp(bv)) => {
                let ar = ModP(self.field.modulus().unwrap());
                solve_in(&ar, self.rows, acols, a, bcols, bv).map(Store::Fp)
            }
            (Store::Q(a), Store::Q(bv)) => solve_in(&Rat, self.rows, acols, a, bcols, bv).map(Store::Q),
            _ => unreachable!(),
        };
        Ok(store.map(|store| ExactMat {
            field: self.field,
            rows: acols,
            cols: bcols,
            store,
        }))
    }

    /// Entries as strings, one inner vector per row.
    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn from_text_rows(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        text: &[Vec<String>],
    ) -> Result<ExactMat> {
        if text.len() != rows || text.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("expected a {rows}x{cols} matrix")));
        }
        let mut out = ExactMat::zeros(field, rows, cols);
        for (i, row) in text.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                out.set(i, j, field.parse_scalar(s)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ExactMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix of `X ↦ B·X` acting on column-stacked `X` with `cols` columns,
/// i.e. `I_cols ⊗ B`.
pub fn left_mul_operator(b: &ExactMat, cols: usize) -> ExactMat {
    ExactMat::identity(b.field(), cols).kron(b)
}

/// Matrix of `X ↦ X·A` acting on column-stacked `X` with `rows` rows,
/// i.e. `Aᵀ ⊗ I_rows`.
pub fn right_mul_operator(a: &ExactMat, rows: usize) -> ExactMat {
    a.transpose().kron(&ExactMat::identity(a.field(), rows))
}

pub fn mat_rank(m: &ExactMat) -> usize {
    m.rank()
}

pub fn mat_nullspace(m: &ExactMat) -> ExactMat {
    m.nullspace()
}

pub fn mat_solve(a: &ExactMat, b: &ExactMat) -> Result<Option<ExactMat>> {
    a.solve(b)
}
