//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors ordered
//! graded-lexicographically, so iteration from the back yields terms from
//! the leading one down. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRat, PolyError, UniPoly};

/// Exponent vector, ordered by total degree and then lexicographically
/// (earlier variables weigh more).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent of `other` is at most ours.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over an ordered list of named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRat>,
}

/// The standard plane-curve variable list.
pub fn xyz() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: BigRat) -> Self {
        let mut p = MultiPoly::zero(vars);
        let one = Monomial::one(p.nvars());
        p.add_term(one, c);
        p
    }

    pub fn from_int(vars: Vec<String>, c: i64) -> Self {
        Self::constant(vars, BigRat::from_integer(BigInt::from(c)))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: Vec<String>, name: &str) -> Result<Self, PolyError> {
        let idx = index_of(&vars, name)?;
        Ok(Self::var_at(vars, idx))
    }

    pub(crate) fn var_at(vars: Vec<String>, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(e), BigRat::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponent vectors are summed.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRat)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.nvars() {
                return Err(PolyError::ExponentLength {
                    expected: p.nvars(),
                    found: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        index_of(&self.vars, name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading (largest graded-lex) term down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRat {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` is the sentinel for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Degree in the variable at `idx`; `None` for the zero polynomial.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[idx]).max()
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same_vars(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(self.vars.clone(), BigRat::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `var`.
    pub fn differentiate(&self, var: &str) -> Result<MultiPoly, PolyError> {
        let idx = self.var_index(var)?;
        Ok(self.differentiate_at(idx))
    }

    pub(crate) fn differentiate_at(&self, idx: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            out.add_term(Monomial(exps), c * BigRat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Substitutes `value` for the variable at `idx`; the variable list is kept.
    pub fn evaluate_var(&self, idx: usize, value: &BigRat) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        let mut powers: Vec<BigRat> = vec![BigRat::one()];
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut exps = m.0.clone();
            exps[idx] = 0;
            out.add_term(Monomial(exps), c * &powers[e]);
        }
        out
    }

    /// Full evaluation at a point.
    pub fn evaluate(&self, point: &[BigRat]) -> Result<BigRat, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ExponentLength {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces every variable by a univariate polynomial and expands.
    pub fn compose_univariate(&self, images: &[UniPoly]) -> Result<UniPoly, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::ExponentLength {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let mut cache: Vec<Vec<UniPoly>> = images
            .iter()
            .map(|p| vec![UniPoly::one(), p.clone()])
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Coefficients of `self` viewed as a polynomial in the variable at
    /// `idx`, lowest power first. The coefficients keep the full variable
    /// list but never involve that variable.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            let mut exps = m.0.clone();
            exps[idx] = 0;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Converts a polynomial in which only the variable at `idx` occurs.
    pub fn to_unipoly(&self, idx: usize) -> Result<UniPoly, PolyError> {
        let mut coeffs = vec![BigRat::zero(); self.degree_in(idx).unwrap_or(0) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != idx && e != 0) {
                return Err(PolyError::NotUnivariate);
            }
            coeffs[m.0[idx] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial as the variable at `idx`.
    pub fn from_unipoly(vars: Vec<String>, idx: usize, p: &UniPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(vars);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; out.nvars()];
            e[idx] = i as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The primitive integer polynomial with the same zeros: denominators
    /// cleared, content divided out, and leading coefficient made positive.
    pub fn primitive_integer_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = BigRat::from_integer(self.denominator_lcm());
        let cleared = self.scale(&lcm);
        let content = cleared
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        let mut scale = BigRat::new(BigInt::one(), content);
        if cleared.leading_term().unwrap().1.is_negative() {
            scale = -scale;
        }
        cleared.scale(&scale)
    }

    /// Exact division; fails unless `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_vars(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Composes with the linear change of coordinates `v ↦ M v`, i.e. the
    /// variable `i` is replaced by `Σ_j M[i][j] · var_j`.
    pub(crate) fn compose_linear(&self, m: &[[BigInt; 3]; 3]) -> MultiPoly {
        debug_assert_eq!(self.nvars(), 3);
        let vars = self.vars.clone();
        let images: Vec<MultiPoly> = (0..3)
            .map(|i| {
                let mut p = MultiPoly::zero(vars.clone());
                for (j, entry) in m[i].iter().enumerate() {
                    let mut e = vec![0; 3];
                    e[j] = 1;
                    p.add_term(Monomial(e), BigRat::from_integer(entry.clone()));
                }
                p
            })
            .collect();
        let mut cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(vars.clone(), BigRat::one()), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(vars.clone());
        for (mono, c) in &self.terms {
            let mut t = MultiPoly::constant(vars.clone(), c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }
}

fn index_of(vars: &[String], name: &str) -> Result<usize, PolyError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    /// Panics if the variable lists differ; see [`MultiPoly::try_add`].
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical printer: terms in descending graded-lex order, explicit `*`
/// between factors, rational coefficients as `p/q`. The output parses back
/// to the same polynomial.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> =
                m.0.iter()
                    .zip(&self.vars)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| {
                        if *e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            let coeff_shown = !abs.is_one() || factors.is_empty();
            if coeff_shown {
                write!(f, "{abs}")?;
            }
            if !factors.is_empty() {
                if coeff_shown {
                    f.write_str("*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
