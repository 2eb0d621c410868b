use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{write_terms, PolyError};

/// Integer polynomial in `x` and `x^-1`: `sum coeffs[i] x^(min_exp + i)`.
///
/// Always trimmed at both ends, so equal polynomials have equal fields.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> LaurentPoly {
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        let mut coeffs = coeffs.into_iter().skip(lead).collect::<Vec<_>>();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> LaurentPoly {
        LaurentPoly::new(e, vec![c])
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> LaurentPoly {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c;
        }
        let (Some(&lo), Some(&hi)) = (acc.keys().next(), acc.keys().next_back()) else {
            return LaurentPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in acc {
            coeffs[(e - lo) as usize] = c;
        }
        LaurentPoly::new(lo, coeffs)
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

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.min_exp;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Exponents where the two sides differ, with both coefficients.
    pub fn diff(&self, other: &LaurentPoly) -> Vec<(i64, BigInt, BigInt)> {
        let exps: Vec<i64> = self.terms().chain(other.terms()).map(|t| t.0).collect();
        let (Some(&lo), Some(&hi)) = (exps.iter().min(), exps.iter().max()) else {
            return Vec::new();
        };
        (lo..=hi)
            .filter_map(|e| {
                let (a, b) = (self.coeff(e), other.coeff(e));
                (a != b).then_some((e, a, b))
            })
            .collect()
    }

    /// `min_exp=e c0 c1 ...`, lowest exponent first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "min_exp=0 0".into();
        }
        let mut s = format!("min_exp={}", self.min_exp);
        for c in &self.coeffs {
            s.push(' ');
            s.push_str(&c.to_string());
        }
        s
    }

    pub fn from_text(s: &str) -> Result<LaurentPoly, PolyError> {
        let mut parts = s.split_whitespace();
        let head = parts
            .next()
            .and_then(|h| h.strip_prefix("min_exp="))
            .ok_or_else(|| PolyError::Parse(format!("{s:?}: missing min_exp= prefix")))?;
        let min_exp: i64 = head
            .parse()
            .map_err(|e| PolyError::Parse(format!("{s:?}: {e}")))?;
        let coeffs: Result<Vec<BigInt>, _> = parts.map(str::parse).collect();
        let coeffs = coeffs.map_err(|e| PolyError::Parse(format!("{s:?}: {e}")))?;
        if coeffs.is_empty() {
            return Err(PolyError::Parse("no coefficients".into()));
        }
        Ok(LaurentPoly::new(min_exp, coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        write_terms(f, terms.into_iter().rev())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()).map(|(e, c)| (e, c.clone())))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, out)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(min, c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn trims_both_ends() {
        let a = l(-3, &[0, 0, 1, 2, 0]);
        assert_eq!(a.min_exp(), Some(-1));
        assert_eq!(a.max_exp(), Some(0));
        assert_eq!(a, l(-1, &[1, 2]));
        assert_eq!(l(5, &[0, 0]), LaurentPoly::zero());
    }

    #[test]
    fn products_and_sums() {
        // (x + 1/x)^2 = x^2 + 2 + x^-2
        let t = l(-1, &[1, 0, 1]);
        assert_eq!(&t * &t, l(-2, &[1, 0, 2, 0, 1]));
        assert_eq!(&t - &t, LaurentPoly::zero());
        assert_eq!((&t + &t).to_string(), "2x + 2x^-1");
    }

    #[test]
    fn text_roundtrip() {
        let a = l(-2, &[3, 0, -1]);
        assert_eq!(a.to_text(), "min_exp=-2 3 0 -1");
        assert_eq!(LaurentPoly::from_text(&a.to_text()).unwrap(), a);
        assert_eq!(
            LaurentPoly::from_text(&LaurentPoly::zero().to_text()).unwrap(),
            LaurentPoly::zero()
        );
        assert!(LaurentPoly::from_text("3 0 -1").is_err());
    }

    #[test]
    fn diff_lists_mismatched_exponents() {
        let a = l(0, &[1, 2, 3]);
        let b = l(1, &[2, 4]);
        let d = a.diff(&b);
        assert_eq!(d, vec![(0, 1.into(), 0.into()), (2, 3.into(), 4.into())]);
        assert!(a.diff(&a).is_empty());
    }
}
