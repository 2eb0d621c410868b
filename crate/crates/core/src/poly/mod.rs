//! Exact integer polynomials and Laurent polynomials.

mod charpoly;
mod laurent;
mod recurrence;
mod sturm;

pub use charpoly::{berkowitz, charpoly, spanning_tree_count, MatrixKind};
pub use laurent::LaurentPoly;
pub use recurrence::{deletion_charpoly, path_poly, to_laurent};
pub(crate) use sturm::rational_to_f64;
pub use sturm::{largest_root_enclosure, roots_above, sturm_count, Bound, SturmChain};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Dense polynomial with big-integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    /// `c * x^d`
    pub fn monomial(c: BigInt, d: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn x() -> IntPoly {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from(c.clone())
            })
    }

    /// Sign of `p(x)` for rational `x`, without building the rational value.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        // sum c_i num^i den^(d-i), with den > 0
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * &num + c * &den_pow;
            den_pow *= &den;
        }
        sign(&acc)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// `p(q(x))`
    pub fn compose(&self, q: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * q) + &IntPoly::constant(c.clone())
        })
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder `|lc(b)|^(deg a - deg b + 1) * a mod b`; the factor
    /// is taken in absolute value so that signs survive.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &b.scale(&lr).shift(dr - db);
            steps += 1;
        }
        let total = match self.degree() {
            Some(da) if da >= db => (da - db + 1) as u32,
            _ => 0,
        };
        let mut r = r.scale(&num_traits::pow(lb.clone(), (total - steps) as usize));
        if lb.is_negative() && total % 2 == 1 {
            r = -&r;
        }
        r
    }

    /// Exact division; fails when `b` does not divide `self` over the integers.
    pub fn div_exact(&self, b: &IntPoly) -> Result<IntPoly, PolyError> {
        let db = b
            .degree()
            .ok_or_else(|| PolyError::Domain("division by zero polynomial".into()))?;
        let lb = b.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return Err(PolyError::Domain("inexact polynomial division".into()));
            }
            r = &r - &b.scale(&quot).shift(dr - db);
            q[dr - db] = quot;
        }
        if !r.is_zero() {
            return Err(PolyError::Domain("inexact polynomial division".into()));
        }
        Ok(IntPoly::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part()
    }

    /// Multiplicity of the root zero.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Space-separated coefficients, lowest degree first; `0` for zero.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        parts.join(" ")
    }

    pub fn from_text(s: &str) -> Result<IntPoly, PolyError> {
        let coeffs: Result<Vec<BigInt>, _> = s.split_whitespace().map(str::parse).collect();
        let coeffs = coeffs.map_err(|e| PolyError::Parse(format!("{s:?}: {e}")))?;
        if coeffs.is_empty() {
            return Err(PolyError::Parse("no coefficients".into()));
        }
        Ok(IntPoly::new(coeffs))
    }
}

pub(crate) fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Display for IntPoly {
    /// Human form in `x`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(i, c)| (i as i64, c)),
        )
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let show_mag = !mag.is_one() || e == 0;
        if show_mag {
            write!(f, "{mag}")?;
        }
        match e {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
