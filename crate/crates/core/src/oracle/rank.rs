//! Exact rank of sparse integer matrices.
//!
//! Rows are reduced into echelon form with integer combinations
//! `p0 * v - v0 * p` followed by division by the row content, so no fractions
//! appear. The `i64` path uses checked arithmetic; on overflow the whole
//! computation is redone with arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse vector: strictly increasing indices with nonzero values.
pub type SparseVec = Vec<(u32, i64)>;

trait Coeff: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// `a * b - c * d`, or `None` on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
    fn zero() -> Self;
}

impl Coeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        *self / *d
    }
    fn zero() -> Self {
        0
    }
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
}

/// Rank over the rationals of the matrix whose rows (or columns) are `vectors`.
pub fn rank(vectors: &[SparseVec]) -> usize {
    if let Some(r) = rank_with::<i64>(vectors.iter().map(|v| v.clone())) {
        return r;
    }
    rank_with::<BigInt>(
        vectors
            .iter()
            .map(|v| v.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()),
    )
    .expect("arbitrary precision cannot overflow")
}

/// Normalizes a nonzero vector: primitive content and positive leading entry.
fn normalize<T: Coeff>(v: &mut [(u32, T)]) {
    let mut g = T::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    let flip = v[0].1.is_negative();
    if !g.is_one() || flip {
        let g = if flip { g.neg() } else { g };
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

/// `pivot_lead * v - v_lead * pivot`, dropping zeros. `None` on overflow.
fn eliminate<T: Coeff>(v: &[(u32, T)], pivot: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let pl = &pivot[0].1;
    let vl = &v[0].1;
    let zero = T::zero();
    let mut out = Vec::with_capacity(v.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < v.len() || j < pivot.len() {
        let (idx, a, b) = match (v.get(i), pivot.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, &x.1, &y.1)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, &x.1, &zero)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, &x.1, &zero)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, &zero, &y.1)
            }
            (None, None) => unreachable!(),
        };
        let val = T::mul_sub(pl, a, vl, b)?;
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    Some(out)
}

fn rank_with<T: Coeff>(vectors: impl Iterator<Item = Vec<(u32, T)>>) -> Option<usize> {
    // pivot rows keyed by leading index
    let mut pivots: std::collections::HashMap<u32, Vec<(u32, T)>> = std::collections::HashMap::new();
    for mut v in vectors {
        while !v.is_empty() {
            normalize(&mut v);
            match pivots.get(&v[0].0) {
                Some(p) => v = eliminate(&v, p)?,
                None => {
                    pivots.insert(v[0].0, v);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}
