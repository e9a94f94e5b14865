//! Integer Laurent polynomials in one variable `t`, with exact big-integer
//! coefficients. Used as the coefficient ring for Burau matrices and as the
//! carrier for Alexander polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_k t^k` over the integers.
///
/// Stored densely as a coefficient vector starting at `min_exp`. The zero
/// polynomial has an empty vector; otherwise the first and last coefficients
/// are nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: k, coeffs: vec![c] }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc = Self::zero();
        for (k, c) in terms {
            acc = acc + Self::monomial(c, k);
        }
        acc
    }

    /// Ordinary polynomial from `coeffs[i] = coefficient of t^i`.
    pub fn from_coeffs<C: Clone + Into<BigInt>>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    /// `t^a - t^b` as a convenience for cyclotomic-style quotients.
    pub fn power_diff(a: i64, b: i64) -> Self {
        Self::monomial(1, a) - Self::monomial(1, b)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Difference between highest and lowest exponent (`None` for zero).
    pub fn span(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if self.is_zero() || k < self.min_exp {
            return BigInt::zero();
        }
        let i = (k - self.min_exp) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
        self
    }

    /// Multiply by `t^k`.
    pub fn shift(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.min_exp += k;
        }
        self
    }

    /// Substitute `t -> t^m` (m >= 1).
    pub fn subst_power(&self, m: i64) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        Self::from_terms(self.terms().map(|(k, c)| (k * m, c.clone())))
    }

    /// Exact division; `None` when `rhs` is zero or does not divide exactly.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().checked_sub(rhs.coeffs.len())? + 1];
        let divisor_lead = rhs.coeffs.last().unwrap();
        // long division from the top coefficient down
        for i in (rhs.coeffs.len() - 1..rem.len()).rev() {
            let top = rem[i].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(top, divisor_lead.clone());
            if !r.is_zero() {
                return None;
            }
            let pos = i + 1 - rhs.coeffs.len();
            for (j, d) in rhs.coeffs.iter().enumerate() {
                let prod = &q * d;
                rem[pos + j] -= prod;
            }
            quot[pos] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(
            LaurentPoly {
                min_exp: self.min_exp - rhs.min_exp,
                coeffs: quot,
            }
            .trim(),
        )
    }

    /// Unit normal form: multiplied by `±t^k` so the lowest exponent is 0 and
    /// the lowest-degree coefficient is positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.min_exp = 0;
        if out.coeffs[0].is_negative() {
            for c in &mut out.coeffs {
                *c = -std::mem::take(c);
            }
        }
        out
    }

    pub fn is_normal_form(&self) -> bool {
        self == &self.normalized()
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Palindromic up to units: reversing the coefficient sequence gives the
    /// same normal form.
    pub fn is_palindromic(&self) -> bool {
        let mut rev = self.coeffs.clone();
        rev.reverse();
        let rev = LaurentPoly { min_exp: 0, coeffs: rev }.trim();
        rev.normalized() == self.normalized()
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        for (k, c) in rhs.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        LaurentPoly { min_exp: lo, coeffs }.trim()
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        (&self).mul(&rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly { min_exp: self.min_exp + rhs.min_exp, coeffs }.trim()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Error from parsing a polynomial in the `1 - t + t^2` text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial text: {0}")]
pub struct PolyParseError(String);

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError("empty input".into()));
        }
        let mut acc = LaurentPoly::zero();
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let term_end = rest
                .char_indices()
                .skip(1)
                .find(|&(i, ch)| (ch == '+' || ch == '-') && !rest[..i].ends_with('^'))
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..term_end];
            acc = acc + parse_term(term, sign).map_err(PolyParseError)?;
            if term_end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[term_end] == b'-' { -1 } else { 1 };
            rest = &rest[term_end + 1..];
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, sign: i64) -> Result<LaurentPoly, String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let (coeff_str, exp) = match term.find('t') {
        None => (term, None),
        Some(i) => {
            let after = &term[i + 1..];
            let exp = if after.is_empty() {
                1
            } else {
                let e = after
                    .strip_prefix('^')
                    .ok_or_else(|| format!("bad exponent in `{term}`"))?;
                e.parse::<i64>().map_err(|_| format!("bad exponent in `{term}`"))?
            };
            (&term[..i], Some(exp))
        }
    };
    let coeff: BigInt = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str
            .trim_end_matches('*')
            .parse()
            .map_err(|_| format!("bad coefficient in `{term}`"))?
    };
    Ok(LaurentPoly::monomial(coeff * sign, exp.unwrap_or(0)))
}
