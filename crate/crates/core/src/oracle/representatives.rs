//! Explicit nilpotent representatives.
//!
//! Orthogonal representatives are built for the symmetric form `J` with ones
//! on the anti-diagonal. A subset of coordinates closed under the mirror
//! `i ↦ m−1−i` sees `J` restricted to it as an anti-diagonal form again, so
//! representatives are assembled from blocks placed on nested mirror-closed
//! index sets:
//!
//! * two equal parts `(l,l)`: `diag(N, −N)` on `2l` coordinates;
//! * two odd parts `(a,b)`: one `J`-skew Jordan block per part, in a basis
//!   where the form is `J_a ⊕ (−J_b)`, then moved to an anti-diagonal basis by
//!   an explicit rational change of coordinates;
//! * one leftover odd part (only when `m` is odd): a single `J`-skew block in
//!   the middle.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::oracle::matrix::RationalMatrix;
use crate::partitions::{multiplicities, Partition};

/// Nilpotent matrix with Jordan blocks of the given sizes, top to bottom.
pub fn jordan_from_blocks(sizes: &[usize]) -> RationalMatrix {
    let n: usize = sizes.iter().sum();
    let mut m = RationalMatrix::zeros(n, n);
    let mut offset = 0;
    for &size in sizes {
        for i in 0..size.saturating_sub(1) {
            m.set_int(offset + i, offset + i + 1, 1);
        }
        offset += size;
    }
    m
}

pub fn jordan_representative(lambda: &Partition) -> RationalMatrix {
    jordan_from_blocks(lambda.parts())
}

/// Ones on the anti-diagonal.
pub fn antidiagonal_form(m: usize) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(m, m);
    for i in 0..m {
        j.set_int(i, m - 1 - i, 1);
    }
    j
}

/// `Xᵀ J + J X = 0`.
pub fn preserves_form(x: &RationalMatrix, form: &RationalMatrix) -> bool {
    (&(&x.transpose() * form) + &(form * x)).is_zero()
}

/// `rank(X^k)` for `k = 1..=λ₁`, as expected for Jordan type `λ`.
pub fn expected_rank_sequence(lambda: &Partition) -> Vec<usize> {
    let top = lambda.parts().first().copied().unwrap_or(0);
    (1..=top)
        .map(|k| lambda.parts().iter().map(|&p| p.saturating_sub(k)).sum())
        .collect()
}

pub fn rank_sequence(x: &RationalMatrix, len: usize) -> Vec<usize> {
    let mut power = x.clone();
    let mut ranks = Vec::with_capacity(len);
    for _ in 0..len {
        ranks.push(power.rank());
        power = &power * x;
    }
    ranks
}

/// Superdiagonal block of odd size `l` preserving `J_l`: entries `+1` on the
/// first half of the superdiagonal and `−1` on the second.
fn odd_skew_block(l: usize) -> RationalMatrix {
    debug_assert!(l % 2 == 1);
    let mut x = RationalMatrix::zeros(l, l);
    for i in 0..l.saturating_sub(1) {
        x.set_int(i, i + 1, if i < (l - 1) / 2 { 1 } else { -1 });
    }
    x
}

/// `diag(N_l, −N_l)` on `2l` coordinates; Jordan type `(l,l)`.
fn paired_block(l: usize) -> RationalMatrix {
    let mut x = RationalMatrix::zeros(2 * l, 2 * l);
    for i in 0..l.saturating_sub(1) {
        x.set_int(i, i + 1, 1);
        x.set_int(l + i, l + i + 1, -1);
    }
    x
}

/// Jordan type `(a,b)` with `a ≥ b` both odd, preserving `J_{a+b}`.
fn odd_pair_block(a: usize, b: usize) -> RationalMatrix {
    let s = a + b;
    let mut x = RationalMatrix::zeros(s, s);
    let xa = odd_skew_block(a);
    let xb = odd_skew_block(b);
    for i in 0..a {
        for j in 0..a {
            x.set(i, j, xa.get(i, j).clone());
        }
    }
    for i in 0..b {
        for j in 0..b {
            x.set(a + i, a + j, xb.get(i, j).clone());
        }
    }

    // Columns of `basis` are the new basis vectors w_0..w_{s-1}, written in
    // the block coordinates where the form is J_a ⊕ (−J_b). Pair k is
    // (w_k, w_{s-1-k}) with pairing value 1.
    let one = BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut basis = RationalMatrix::zeros(s, s);
    let mut k = 0;
    for i in 0..(a - 1) / 2 {
        basis.set(i, k, one.clone());
        basis.set(a - 1 - i, s - 1 - k, one.clone());
        k += 1;
    }
    for j in 0..(b - 1) / 2 {
        basis.set(a + j, k, one.clone());
        basis.set(a + b - 1 - j, s - 1 - k, -one.clone());
        k += 1;
    }
    let (u, v) = ((a - 1) / 2, a + (b - 1) / 2);
    basis.set(u, k, one.clone());
    basis.set(v, k, one.clone());
    basis.set(u, s - 1 - k, half.clone());
    basis.set(v, s - 1 - k, -half);
    debug_assert_eq!(k + 1, s / 2);

    let inv = basis.inverse().expect("hyperbolic basis is invertible");
    &(&inv * &x) * &basis
}

/// A matrix `X` in `so(m,C)` (for the anti-diagonal form) with Jordan type
/// `λ`. Both postconditions are checked before returning.
pub fn orthogonal_representative(lambda: &Partition, m: usize) -> Result<RationalMatrix> {
    if lambda.total() != m || !lambda.even_parts_have_even_multiplicity() {
        return Err(Error::InvalidOrbit { algebra: format!("so({m},C)"), orbit: lambda.to_string() });
    }

    let mut blocks: Vec<RationalMatrix> = Vec::new();
    for (&value, &count) in multiplicities(lambda).iter().rev() {
        if value % 2 == 0 {
            blocks.extend((0..count / 2).map(|_| paired_block(value)));
        }
    }
    let odd: Vec<usize> = lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect();
    for pair in odd.chunks(2) {
        match *pair {
            [a, b] => blocks.push(odd_pair_block(a, b)),
            [single] => blocks.push(odd_skew_block(single)),
            _ => unreachable!(),
        }
    }
    // The odd-sized block, if any, is the last one and sits in the middle.

    let mut x = RationalMatrix::zeros(m, m);
    let mut half_offset = 0;
    for block in &blocks {
        let s = block.rows();
        let place = |k: usize| {
            if s % 2 == 1 || k < s / 2 {
                half_offset + k
            } else {
                m - 1 - (half_offset + (s - 1 - k))
            }
        };
        for i in 0..s {
            for j in 0..s {
                let value = block.get(i, j);
                if !value.is_zero() {
                    x.set(place(i), place(j), value.clone());
                }
            }
        }
        half_offset += s / 2;
    }

    let form = antidiagonal_form(m);
    if !preserves_form(&x, &form) {
        return Err(Error::Consistency(format!("representative of {lambda} does not preserve the form")));
    }
    let expected = expected_rank_sequence(lambda);
    if rank_sequence(&x, expected.len()) != expected {
        return Err(Error::Consistency(format!("representative of {lambda} has the wrong Jordan type")));
    }
    Ok(x)
}
