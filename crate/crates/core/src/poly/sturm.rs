use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{sign, IntPoly};

/// Endpoint of a root-counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for Bound {
    fn from(x: BigRational) -> Bound {
        Bound::Finite(x)
    }
}

impl From<i64> for Bound {
    fn from(x: i64) -> Bound {
        Bound::Finite(BigRational::from_integer(x.into()))
    }
}

/// Sturm chain of the squarefree part of a polynomial, built with
/// sign-preserving pseudo-remainders and kept primitive.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> SturmChain {
        let s0 = p.squarefree_part();
        if s0.degree().unwrap_or(0) == 0 {
            return SturmChain { chain: vec![s0] };
        }
        let s1 = s0.derivative().primitive_part();
        let mut chain = vec![s0, s1];
        loop {
            let k = chain.len();
            let r = chain[k - 2].pseudo_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            // primitive_part flips to a positive leading coefficient; undo that
            let c = r.content();
            chain.push(-&IntPoly::new(r.coeffs().iter().map(|a| a / &c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            Bound::Finite(x) => p.sign_at(x),
            Bound::PosInf => p.leading().map_or(0, sign),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Bound, b: &Bound) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    SturmChain::new(p).count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()))
}

/// Distinct real roots of `p` strictly greater than `a`.
pub fn roots_above(p: &IntPoly, a: &BigRational) -> usize {
    SturmChain::new(p).count(&Bound::Finite(a.clone()), &Bound::PosInf)
}

/// Cauchy bound: every root has absolute value below the result.
fn root_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::new(max, lead) + BigRational::one()
}

/// Rational `(lo, hi]` of width at most `tol` containing the largest real root.
pub fn largest_root_enclosure(
    p: &IntPoly,
    tol: &BigRational,
) -> Option<(BigRational, BigRational)> {
    let chain = SturmChain::new(p);
    p.degree().filter(|&d| d > 0)?;
    let bound = root_bound(p);
    let mut lo = -bound.clone();
    let mut hi = bound;
    if chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 0 {
        return None;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if chain.count(&Bound::Finite(mid.clone()), &Bound::Finite(hi.clone())) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo, hi))
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    // scale to keep 60 bits of precision without overflowing f64 parsing
    let scaled = (x * BigRational::from_integer(BigInt::one() << 60u32)).round();
    let n: f64 = scaled.to_integer().to_string().parse().unwrap_or(f64::NAN);
    n / 2f64.powi(60)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};
    use crate::poly::{charpoly, MatrixKind};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn spec_examples() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(sturm_count(&p, &r(0, 1), &r(2, 1)), 1);
        assert_eq!(sturm_count(&p, &r(-2, 1), &r(2, 1)), 2);
        // root on the right end is counted, on the left end it is not
        assert_eq!(sturm_count(&p, &r(-1, 1), &r(1, 1)), 1);
        let star = build_family(&Family::Star(3)).unwrap();
        let lap = charpoly(&star, MatrixKind::Laplacian);
        assert_eq!(sturm_count(&lap, &r(39, 10), &r(41, 10)), 1);
        assert_eq!(sturm_count(&lap, &r(-1, 1), &r(5, 1)), 3);
        let t = build_family(&Family::T4 { p: 1, q: 1, r: 1 }).unwrap();
        assert_eq!(
            roots_above(&charpoly(&t, MatrixKind::Laplacian), &r(5, 1)),
            0
        );
    }

    #[test]
    fn chain_with_negative_leading_coefficients() {
        // -(x-1)(x-2)(x-3)
        let p = -(IntPoly::from_i64(&[-1, 1])
            * IntPoly::from_i64(&[-2, 1])
            * IntPoly::from_i64(&[-3, 1]));
        let c = SturmChain::new(&p);
        assert_eq!(c.count(&Bound::NegInf, &Bound::PosInf), 3);
        assert_eq!(c.count(&Bound::from(1), &Bound::from(3)), 2);
    }

    #[test]
    fn enclosure() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let tol = r(1, 1_000_000_000);
        let (lo, hi) = largest_root_enclosure(&p, &tol).unwrap();
        assert!(&hi - &lo <= tol);
        let sq2 = std::f64::consts::SQRT_2;
        assert!(rational_to_f64(&lo) < sq2 + 1e-9 && rational_to_f64(&hi) > sq2 - 1e-9);
        assert!(largest_root_enclosure(&IntPoly::from_i64(&[1, 0, 1]), &tol).is_none());
    }

    #[test]
    fn counts_match_known_root_sets() {
        // (x+3)(x-1/2 as 2x-1)(x-4)^2
        let p = IntPoly::from_i64(&[3, 1])
            * IntPoly::from_i64(&[-1, 2])
            * IntPoly::from_i64(&[-4, 1]).pow(2);
        let c = SturmChain::new(&p);
        assert_eq!(c.count(&Bound::NegInf, &Bound::PosInf), 3);
        assert_eq!(c.count(&Bound::Finite(r(1, 2)), &Bound::from(4)), 1);
        assert_eq!(c.count(&Bound::Finite(r(0, 1)), &Bound::Finite(r(1, 2))), 1);
    }
}
