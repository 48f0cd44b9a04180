//! Dense integer polynomials used internally for gcds.
//!
//! Rational gcds are computed on primitive integer representatives: first by
//! the heuristic evaluation gcd, which is verified by trial division, and
//! otherwise by a primitive remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients lowest degree first; empty means zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn normalized(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.0
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        ZPoly(self.0.iter().map(|c| c / &g).collect())
    }

    fn max_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact division over the integers, if it exists.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(ZPoly(Vec::new()));
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let mut rem = self.0.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        let lc = d.lc();
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        rem.iter().all(Zero::is_zero).then(|| ZPoly::normalized(q))
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) · a mod d`.
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let lc = d.lc().clone();
        while rem.len() > dd && !rem.is_empty() {
            let n = rem.len() - 1;
            let top = rem[n].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[n - dd + j] -= &top * dc;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        ZPoly(rem)
    }
}

/// Primitive gcd of two integer polynomials (positive leading coefficient).
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (a, b) = (a.primitive(), b.primitive());
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return ZPoly(vec![BigInt::one()]);
    }
    heuristic_gcd(&a, &b).unwrap_or_else(|| prs_gcd(&a, &b))
}

/// Evaluation gcd: `gcd(a(ξ), b(ξ))` read back in balanced base ξ. Any
/// candidate dividing both inputs is the true gcd.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2 + 29;
    let max_deg = a.degree()?.max(b.degree()?) as u64;
    for _ in 0..6 {
        // Past this size the integer gcd is no cheaper than the remainder sequence.
        if xi.bits() * max_deg > 4_000_000 {
            return None;
        }
        let gamma = a.eval(&xi).gcd(&b.eval(&xi));
        let candidate = from_balanced_digits(gamma, &xi).primitive();
        if !candidate.is_zero()
            && a.div_exact(&candidate).is_some()
            && b.div_exact(&candidate).is_some()
        {
            return Some(candidate);
        }
        xi = xi * 73794u32 / 27011u32;
    }
    None
}

fn from_balanced_digits(mut gamma: BigInt, xi: &BigInt) -> ZPoly {
    let half: BigInt = xi / 2;
    let mut digits = Vec::new();
    while !gamma.is_zero() {
        let mut r = gamma.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        gamma = (gamma - &r) / xi;
        digits.push(r);
    }
    ZPoly::normalized(digits)
}

fn prs_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut p, mut q) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !q.is_zero() {
        let r = p.pseudo_rem(&q).primitive();
        p = q;
        q = r;
    }
    let g = p.primitive();
    if g.0.len() == 1 {
        ZPoly(vec![BigInt::one()])
    } else {
        g
    }
}
