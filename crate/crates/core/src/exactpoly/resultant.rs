//! Sylvester resultants.
//!
//! `Res(f, g)` is the determinant of the Sylvester matrix whose first
//! `deg g` rows carry the coefficients of `f` (leading coefficient first)
//! and whose last `deg f` rows carry those of `g`. Determinants are taken by
//! fraction-free Bareiss elimination. When a single variable survives the
//! elimination, [`resultant_interpolated`] evaluates the matrix at integer
//! points, takes integer determinants and interpolates instead.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{BigRat, MultiPoly, PolyError, UniPoly};

/// Entries of a matrix that Bareiss elimination can run over: an integral
/// domain with exact division.
pub(crate) trait BareissEntry: Clone {
    fn is_zero_entry(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl BareissEntry for BigInt {
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Self {
        (a * b - c * e) / div
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl BareissEntry for BigRat {
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        BigRat::one()
    }
    fn zero_like(&self) -> Self {
        BigRat::zero()
    }
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Self {
        (a * b - c * e) / div
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl BareissEntry for MultiPoly {
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(self.vars().to_vec(), BigRat::one())
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars().to_vec())
    }
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Self {
        (&(a * b) - &(c * e))
            .div_exact(div)
            .expect("Bareiss step divides exactly")
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Determinant by fraction-free elimination with row pivoting.
pub(crate) fn bareiss_determinant<T: BareissEntry>(mut m: Vec<Vec<T>>, unit: &T) -> T {
    let n = m.len();
    if n == 0 {
        return unit.one_like();
    }
    let mut negate = false;
    let mut prev = unit.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero_entry() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_entry()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return unit.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = T::mul_sub_div(&m[i][j], &m[k][k], &m[i][k], &m[k][j], &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negate()
    } else {
        det
    }
}

/// Sylvester matrix from coefficient lists given lowest degree first.
fn sylvester<T: Clone>(f: &[T], g: &[T], zero: &T) -> Vec<Vec<T>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn coefficient_lists(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
) -> Result<(usize, Vec<MultiPoly>, Vec<MultiPoly>), PolyError> {
    if f.vars() != g.vars() {
        return Err(PolyError::VariableMismatch {
            left: f.vars().to_vec(),
            right: g.vars().to_vec(),
        });
    }
    let idx = f.var_index(var)?;
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok((idx, f.coefficients_in(idx), g.coefficients_in(idx)))
}

/// Resultant of `f` and `g` with respect to `var`, by Bareiss elimination
/// over the remaining variables. The result keeps the input variable list.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    let (_, fc, gc) = coefficient_lists(f, g, var)?;
    let zero = MultiPoly::zero(f.vars().to_vec());
    Ok(bareiss_determinant(sylvester(&fc, &gc, &zero), &zero))
}

/// Resultant of two univariate rational polynomials.
pub fn unipoly_resultant(f: &UniPoly, g: &UniPoly) -> Result<BigRat, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let zero = BigRat::zero();
    Ok(bareiss_determinant(
        sylvester(f.coeffs(), g.coeffs(), &zero),
        &zero,
    ))
}

/// Same value as [`resultant`], computed by evaluation at integer points and
/// Newton interpolation when at most one variable besides `var` occurs.
/// With more free variables it defers to [`resultant`]. `parallel` spreads
/// the point evaluations over the rayon pool; the output does not depend on
/// it.
pub fn resultant_interpolated(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
    parallel: bool,
) -> Result<MultiPoly, PolyError> {
    let (idx, fc, gc) = coefficient_lists(f, g, var)?;
    let free: Vec<usize> = (0..f.nvars())
        .filter(|&i| i != idx && (f.degree_in(i) > Some(0) || g.degree_in(i) > Some(0)))
        .collect();
    if free.len() > 1 {
        return resultant(f, g, var);
    }
    let (m, n) = (fc.len() - 1, gc.len() - 1);

    // Clear denominators: Res(a f, b g) = a^n b^m Res(f, g).
    let a = f.denominator_lcm();
    let b = g.denominator_lcm();
    let scale = num_traits::pow(a.clone(), n) * num_traits::pow(b.clone(), m);
    let to_int = |p: &MultiPoly, s: &BigInt| -> Vec<BigInt> {
        let mut coeffs = Vec::new();
        for (mono, c) in p.terms() {
            let e = free.first().map_or(0, |&x| mono.exponents()[x]) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += (c * BigRat::from_integer(s.clone())).to_integer();
        }
        coeffs
    };
    let fi: Vec<Vec<BigInt>> = fc.iter().map(|p| to_int(p, &a)).collect();
    let gi: Vec<Vec<BigInt>> = gc.iter().map(|p| to_int(p, &b)).collect();

    let max_deg = |cs: &[Vec<BigInt>]| {
        cs.iter()
            .map(|c| c.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    };
    let bound = n * max_deg(&fi) + m * max_deg(&gi);
    let points: Vec<BigInt> = (0..=bound as i64)
        .map(|i| BigInt::from(i - bound as i64 / 2))
        .collect();

    let eval_det = |x: &BigInt| -> BigInt {
        let ev = |cs: &[Vec<BigInt>]| -> Vec<BigInt> {
            cs.iter()
                .map(|c| c.iter().rev().fold(BigInt::zero(), |acc, v| acc * x + v))
                .collect()
        };
        let zero = BigInt::zero();
        bareiss_determinant(sylvester(&ev(&fi), &ev(&gi), &zero), &zero)
    };
    let values: Vec<BigInt> = if parallel {
        points.par_iter().map(eval_det).collect()
    } else {
        points.iter().map(eval_det).collect()
    };

    let interpolated =
        newton_interpolate(&points, &values).scale(&BigRat::new(BigInt::one(), scale));
    Ok(match free.first() {
        Some(&x) => MultiPoly::from_unipoly(f.vars().to_vec(), x, &interpolated),
        None => MultiPoly::constant(f.vars().to_vec(), interpolated.coeff(0)),
    })
}

fn newton_interpolate(xs: &[BigInt], ys: &[BigInt]) -> UniPoly {
    let mut c: Vec<BigRat> = ys.iter().cloned().map(BigRat::from_integer).collect();
    let n = c.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let denom = BigRat::from_integer(&xs[i] - &xs[i - j]);
            c[i] = (&c[i] - &c[i - 1]) / denom;
        }
    }
    let mut p = UniPoly::constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(vec![BigRat::from_integer(-&xs[i]), BigRat::one()]);
        p = &(&p * &lin) + &UniPoly::constant(c[i].clone());
    }
    p
}
