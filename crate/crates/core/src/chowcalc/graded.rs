use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ChowError, CoeffPoly};

/// The formal degree-one generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    K,
    H,
    E,
    F,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::K, Gen::H, Gen::E, Gen::F];

    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> &'static str {
        ["k", "h", "e", "f"][self.index()]
    }
}

/// Exponents of `k, h, e, f`.
pub type ClassMonomial = [u8; 4];

fn degree(m: &ClassMonomial) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// An element of `ℤ[d, j][k, h, e, f]` with everything above
/// `truncation` degree discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    truncation: u32,
    terms: BTreeMap<ClassMonomial, CoeffPoly>,
}

impl GradedClass {
    pub fn zero(truncation: u32) -> Self {
        GradedClass {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: u32) -> Self {
        Self::constant(CoeffPoly::one(), truncation)
    }

    pub fn constant(c: CoeffPoly, truncation: u32) -> Self {
        Self::monomial([0; 4], c, truncation)
    }

    pub fn generator(g: Gen, truncation: u32) -> Self {
        let mut m = [0; 4];
        m[g.index()] = 1;
        Self::monomial(m, CoeffPoly::one(), truncation)
    }

    pub fn monomial(m: ClassMonomial, c: CoeffPoly, truncation: u32) -> Self {
        let mut out = Self::zero(truncation);
        out.add_term(m, c);
        out
    }

    /// Linear combination `Σ c_i g_i` of generators.
    pub fn linear(parts: &[(CoeffPoly, Gen)], truncation: u32) -> Self {
        parts.iter().fold(Self::zero(truncation), |acc, (c, g)| {
            &acc + &Self::generator(*g, truncation).scale(c)
        })
    }

    fn add_term(&mut self, m: ClassMonomial, c: CoeffPoly) {
        if degree(&m) > self.truncation || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(CoeffPoly::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassMonomial, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ClassMonomial) -> CoeffPoly {
        self.terms.get(m).cloned().unwrap_or_else(CoeffPoly::zero)
    }

    pub fn constant_term(&self) -> CoeffPoly {
        self.coefficient(&[0; 4])
    }

    /// Highest exponent of `g` among the terms.
    pub fn max_power(&self, g: Gen) -> u8 {
        self.terms.keys().map(|m| m[g.index()]).max().unwrap_or(0)
    }

    /// The degree-`n` component.
    pub fn homogeneous_part(&self, n: u32) -> Self {
        GradedClass {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| degree(m) == n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Same class viewed with a different truncation degree.
    pub fn with_truncation(&self, truncation: u32) -> Self {
        let mut out = Self::zero(truncation);
        for (m, c) in &self.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.truncation), |acc, _| &acc * self)
    }

    /// Inverse of a class with constant term 1, via the geometric series
    /// `1/(1 + n) = Σ (−n)^i`, which terminates because `n` is nilpotent.
    pub fn inverse(&self) -> Result<Self, ChowError> {
        if !self.constant_term().is_one() {
            return Err(ChowError::NonUnit);
        }
        let minus_n = &Self::one(self.truncation) - self;
        let mut acc = Self::one(self.truncation);
        let mut power = Self::one(self.truncation);
        for _ in 0..self.truncation {
            power = &power * &minus_n;
            acc = &acc + &power;
        }
        Ok(acc)
    }
}

/// `∏ u_i^{e_i}` for classes `u_i`, negative exponents meaning inverses.
/// Everything is truncated at `truncation`.
pub fn expand_truncated(
    factors: &[(GradedClass, i32)],
    truncation: u32,
) -> Result<GradedClass, ChowError> {
    let mut acc = GradedClass::one(truncation);
    for (u, e) in factors {
        let u = u.with_truncation(truncation);
        let base = if *e < 0 { u.inverse()? } else { u };
        acc = &acc * &base.pow(e.unsigned_abs());
    }
    Ok(acc)
}

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        let mut out = self.with_truncation(self.truncation.min(rhs.truncation));
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self + &(-rhs)
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        GradedClass {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        let mut out = GradedClass::zero(self.truncation.min(rhs.truncation));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let m: ClassMonomial = std::array::from_fn(|i| a[i] + b[i]);
                if degree(&m) <= out.truncation {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }
}

impl fmt::Display for GradedClass {
    /// Terms by increasing degree, e.g. `1 - k + k^2 - k^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| degree(a).cmp(&degree(b)).then(b.cmp(a)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let mono: Vec<String> = Gen::ALL
                .iter()
                .filter(|g| m[g.index()] > 0)
                .map(|g| match m[g.index()] {
                    1 => g.symbol().to_string(),
                    e => format!("{}^{e}", g.symbol()),
                })
                .collect();
            let mono = mono.join("*");
            let negated = -c;
            let (sign, mag) = if c.num_terms() == 1 && c.to_string().starts_with('-') {
                ("-", negated)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = if mag.num_terms() > 1 {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(t: u32) -> GradedClass {
        GradedClass::generator(Gen::K, t)
    }

    #[test]
    fn geometric_series() {
        let u = &GradedClass::one(3) + &k(3);
        let inv = expand_truncated(&[(u.clone(), -1)], 3).unwrap();
        assert_eq!(inv.to_string(), "1 - k + k^2 - k^3");
        assert_eq!(&u * &inv, GradedClass::one(3));
    }

    #[test]
    fn unit_times_inverse() {
        let dh = GradedClass::linear(&[(CoeffPoly::d(), Gen::H)], 3);
        let u = &GradedClass::one(3) + &dh;
        let prod = expand_truncated(&[(u.clone(), 1), (u, -1)], 3).unwrap();
        assert_eq!(prod, GradedClass::one(3));
    }

    #[test]
    fn non_units_rejected() {
        assert_eq!(k(3).inverse(), Err(ChowError::NonUnit));
        let two = GradedClass::constant(CoeffPoly::from_int(2), 3);
        assert_eq!(expand_truncated(&[(two, -1)], 3), Err(ChowError::NonUnit));
    }

    #[test]
    fn truncation_drops_high_degrees() {
        assert!(k(2).pow(3).is_zero());
        let p = (&GradedClass::one(4) + &k(4)).pow(8);
        assert_eq!(p.coefficient(&[4, 0, 0, 0]), CoeffPoly::from_int(70));
        assert_eq!(p.homogeneous_part(2).to_string(), "28*k^2");
    }

    #[test]
    fn display_of_polynomial_coefficients() {
        let c = GradedClass::linear(
            &[
                (CoeffPoly::in_d(&[-6, 2]), Gen::H),
                (CoeffPoly::from_int(-3), Gen::K),
            ],
            3,
        );
        assert_eq!(c.to_string(), "-3*k + (2*d - 6)*h");
    }
}
