use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactpoly::{BigRat, MultiPoly, PolyError};

pub(crate) type Matrix = [[i64; 3]; 3];

const MIXING_STEPS: usize = 48;
const REJECTION_TRIES: usize = 1 << 20;

/// A random integer matrix of determinant ±1 with every entry in `[−bound, bound]`.
///
/// Matrices with no zero entry are drawn by rejection sampling; a zero entry
/// puts the projection centre on a coordinate line, which is exactly where
/// special curves tend to have special points. For large bounds the hit rate
/// collapses and random elementary operations on a signed permutation take
/// over.
pub(crate) fn random_unimodular<R: Rng>(rng: &mut R, bound: i64) -> Matrix {
    let bound = bound.max(2);
    for _ in 0..REJECTION_TRIES {
        let m: Matrix = std::array::from_fn(|_| {
            std::array::from_fn(|_| loop {
                let v = rng.gen_range(-bound..=bound);
                if v != 0 {
                    break v;
                }
            })
        });
        if det_i64(&m).abs() == 1 {
            return m;
        }
    }
    mixed_unimodular(rng, bound)
}

fn det_i64(m: &Matrix) -> i128 {
    let e = |i: usize, j: usize| m[i][j] as i128;
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

fn mixed_unimodular<R: Rng>(rng: &mut R, bound: i64) -> Matrix {
    let mut perm = [0usize, 1, 2];
    perm.shuffle(rng);
    let mut m = [[0i64; 3]; 3];
    for (i, &p) in perm.iter().enumerate() {
        m[i][p] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    for _ in 0..MIXING_STEPS {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        let k = loop {
            let k = rng.gen_range(-bound..=bound);
            if k != 0 {
                break k;
            }
        };
        let mut next = m;
        if rng.gen_bool(0.5) {
            for c in 0..3 {
                next[i][c] += k * m[j][c];
            }
        } else {
            for row in next.iter_mut() {
                row[i] += k * row[j];
            }
        }
        if next.iter().flatten().all(|v| v.abs() <= bound) {
            m = next;
        }
    }
    m
}

/// `p(M·v)` for a unimodular `M`.
pub(crate) fn substitute(p: &MultiPoly, m: &Matrix) -> MultiPoly {
    crate::exactpoly::linear_substitute(p, m).expect("unimodular matrices are invertible")
}

/// `M·v` for a rational vector.
pub(crate) fn apply(m: &Matrix, v: &[BigRat; 3]) -> [BigRat; 3] {
    std::array::from_fn(|i| {
        (0..3)
            .map(|j| BigRat::from_integer(BigInt::from(m[i][j])) * &v[j])
            .sum()
    })
}

/// Scales a nonzero rational vector to coprime integers, first nonzero
/// entry positive.
pub(crate) fn primitive_integer_point(v: &[BigRat; 3]) -> Result<[BigInt; 3], PolyError> {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRat::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let sign = if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        -g
    } else {
        g
    };
    Ok(std::array::from_fn(|i| &ints[i] / &sign))
}
