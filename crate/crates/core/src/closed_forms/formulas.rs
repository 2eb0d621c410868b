//! Path-polynomial closed forms for `T4(p,q,r)` and its line graph, both as
//! printed and in repaired form. None of these are trusted; every caller
//! compares against a direct characteristic polynomial.

use super::ClosedFormError;
use crate::poly::{path_poly, IntPoly};

fn lam() -> IntPoly {
    IntPoly::x()
}

fn p(k: i64) -> Result<IntPoly, ClosedFormError> {
    Ok(path_poly(k)?)
}

/// `h_k = lambda p_(k-1) (p_2 - 2) - p_2 p_(k-2) - 2 p_(k-1)`, `k >= 0`.
pub fn build_h(k: i64) -> Result<IntPoly, ClosedFormError> {
    if k < 0 {
        return Err(ClosedFormError::Domain(format!(
            "h_k needs k >= 0 (p_(k-2) undefined), got {k}"
        )));
    }
    let p2 = p(2)?;
    let a = &lam() * &(&p(k - 1)? * &(&p2 - &IntPoly::from_i64(&[2])));
    let b = &p2 * &p(k - 2)?;
    let c = p(k - 1)?.scale(&2.into());
    Ok(&(&a - &b) - &c)
}

/// `f(q,r) = h_r (lambda h_(q-1) - h_(q-2)) - h_(q-1) h_r - 1`, as printed.
pub fn build_f_qr(q: i64, r: i64) -> Result<IntPoly, ClosedFormError> {
    let (hq1, hq2, hr) = (build_h(q - 1)?, build_h(q - 2)?, build_h(r)?);
    let head = &hr * &(&(&lam() * &hq1) - &hq2);
    Ok(&(&head - &(&hq1 * &hr)) - &IntPoly::one())
}

/// `f(q,r)` with last term `h_(q-1) h_(r-1)` in place of `h_(q-1) h_r + 1`.
pub fn build_f_qr_repaired(q: i64, r: i64) -> Result<IntPoly, ClosedFormError> {
    let (hq1, hq2, hr, hr1) = (
        build_h(q - 1)?,
        build_h(q - 2)?,
        build_h(r)?,
        build_h(r - 1)?,
    );
    let head = &hr * &(&(&lam() * &hq1) - &hq2);
    Ok(&head - &(&hq1 * &hr1))
}

/// `f_r = lambda (p_(r+1) - p_(r-1))`, `r >= -1`.
pub fn build_f_r(r: i64) -> Result<IntPoly, ClosedFormError> {
    if r < -1 {
        return Err(ClosedFormError::Domain(format!(
            "f_r needs r >= -1, got {r}"
        )));
    }
    Ok(&lam() * &(&p(r + 1)? - &p(r - 1)?))
}

fn check_order(pp: usize, q: usize, r: usize) -> Result<(i64, i64, i64), ClosedFormError> {
    if !(1 <= pp && pp <= q && q <= r) {
        return Err(ClosedFormError::Domain(format!(
            "need 1 <= p <= q <= r, got ({pp},{q},{r})"
        )));
    }
    Ok((pp as i64, q as i64, r as i64))
}

fn line_formula(pp: usize, q: usize, r: usize, repaired: bool) -> Result<IntPoly, ClosedFormError> {
    let (pp, q, r) = check_order(pp, q, r)?;
    if q < 2 {
        return Err(ClosedFormError::CoverageGap(format!(
            "line-graph formula needs h_(q-2) with q >= 2, got q = {q}"
        )));
    }
    let f = if repaired {
        build_f_qr_repaired(q, r)?
    } else {
        build_f_qr(q, r)?
    };
    let (hq1, hq, hr, hr1) = (build_h(q - 1)?, build_h(q)?, build_h(r)?, build_h(r - 1)?);
    let a = &hq1 * &hr;
    let b = &hq * &hr1;
    let c = (&hq1 * &hr1).scale(&2.into());
    if pp >= 2 {
        let bracket = if repaired {
            &(&a + &b) + &c
        } else {
            &(&a - &b) - &c
        };
        let hp1 = build_h(pp - 1)?;
        let tail = &(&lam() * &hp1) - &build_h(pp - 2)?;
        Ok(&(&f * &tail) - &(&hp1 * &bracket))
    } else {
        let p2 = p(2)?;
        let tail = &(&lam() * &p2) - &IntPoly::from_i64(&[2, 2]);
        Ok(&(&f * &tail) - &(&p2 * &(&(&a + &b) + &c)))
    }
}

/// Line-graph characteristic polynomial of `T4(p,q,r)` as printed, with the
/// `p = 1` variant selected when `p = 1`. `q = 1` is a coverage gap.
pub fn formula_line_t4_charpoly(pp: usize, q: usize, r: usize) -> Result<IntPoly, ClosedFormError> {
    line_formula(pp, q, r, false)
}

/// Same with `f(q,r)` repaired and `+` signs in the `2 <= p` bracket.
pub fn formula_line_t4_charpoly_repaired(
    pp: usize,
    q: usize,
    r: usize,
) -> Result<IntPoly, ClosedFormError> {
    line_formula(pp, q, r, true)
}

fn case_formula(pp: usize, q: usize, r: usize, unit: i64) -> Result<IntPoly, ClosedFormError> {
    let (pp, q, r) = check_order(pp, q, r)?;
    let l = lam();
    let l2 = &l * &l;
    // the factor standing for a unit leg: printed p_2, repaired p_3
    let u = p(unit)?;
    let f = build_f_r;
    Ok(if pp == 1 && q == 1 && r == 1 {
        &(&l * &u.pow(3)) - &(&l2 * &u.pow(2)).scale(&3.into())
    } else if pp == 1 && q == 1 {
        let fr = f(r)?;
        let a = &(&l * &(&u * &u)) * &fr;
        let b = (&(&l2 * &u) * &fr).scale(&2.into());
        let c = &(&u * &u) * &f(r - 1)?;
        &(&a - &b) - &c
    } else if pp == 1 {
        let (fq, fr) = (f(q)?, f(r)?);
        let a = &(&(&l * &u) * &fq) * &fr;
        let b = &(&l2 * &fq) * &fr;
        let c = &(&u * &f(q - 1)?) * &fr;
        let d = &(&u * &fq) * &f(r - 1)?;
        &(&(&a - &b) - &c) - &d
    } else {
        let (fp, fq, fr) = (f(pp)?, f(q)?, f(r)?);
        let a = &(&(&l * &fq) * &fp) * &fr;
        let b = &(&f(q - 1)? * &fp) * &fr;
        let c = &(&fq * &f(pp - 1)?) * &fr;
        let d = &(&fq * &fp) * &f(r - 1)?;
        &(&(&a - &b) - &c) - &d
    })
}

/// Characteristic polynomial of `T4(p,q,r)` by the printed four-case display.
pub fn formula_t4_charpoly_cases(
    pp: usize,
    q: usize,
    r: usize,
) -> Result<IntPoly, ClosedFormError> {
    case_formula(pp, q, r, 2)
}

/// The four-case display with `p_2` replaced by `p_3` in the unit-leg cases.
pub fn formula_t4_charpoly_cases_repaired(
    pp: usize,
    q: usize,
    r: usize,
) -> Result<IntPoly, ClosedFormError> {
    case_formula(pp, q, r, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};
    use crate::poly::{charpoly, MatrixKind};

    fn t4(pp: usize, q: usize, r: usize) -> crate::graph::Graph {
        build_family(&Family::T4 { p: pp, q, r }).unwrap()
    }

    #[test]
    fn small_expansions() {
        // f_1 = lambda (lambda^2 - 2)
        assert_eq!(build_f_r(1).unwrap(), IntPoly::from_i64(&[0, -2, 0, 1]));
        // h_1 = lambda (lambda^2 - 3) - 2
        assert_eq!(build_h(1).unwrap(), IntPoly::from_i64(&[-2, -3, 0, 1]));
        // h_0 = lambda p_-1 (p_2 - 2) - p_2 p_-2 - 2 p_-1 = p_2
        assert_eq!(build_h(0).unwrap(), IntPoly::from_i64(&[-1, 0, 1]));
        assert!(build_h(-1).is_err());
        assert!(build_f_qr(1, 1).is_err());
        assert!(build_f_r(-2).is_err());
    }

    #[test]
    fn f_r_is_a_leg_with_tip() {
        // a leg of r vertices ending in two leaves, hung from a deleted vertex
        for r in 1..6 {
            let mut g = crate::graph::Graph::empty(r + 2);
            for i in 0..r - 1 {
                g.add_edge(i, i + 1);
            }
            g.add_edge(r - 1, r);
            g.add_edge(r - 1, r + 1);
            assert_eq!(
                build_f_r(r as i64).unwrap(),
                charpoly(&g, MatrixKind::Adjacency)
            );
        }
    }

    #[test]
    fn general_case_formula_is_exact() {
        for (pp, q, r) in [(2, 2, 2), (2, 3, 4), (3, 3, 5)] {
            let truth = charpoly(&t4(pp, q, r), MatrixKind::Adjacency);
            assert_eq!(formula_t4_charpoly_cases(pp, q, r).unwrap(), truth);
        }
    }

    #[test]
    fn unit_leg_cases_need_the_repair() {
        for (pp, q, r) in [(1, 1, 1), (1, 1, 3), (1, 2, 3)] {
            let truth = charpoly(&t4(pp, q, r), MatrixKind::Adjacency);
            let printed = formula_t4_charpoly_cases(pp, q, r).unwrap();
            assert_ne!(printed, truth);
            assert!(printed.degree() < truth.degree());
            assert_eq!(formula_t4_charpoly_cases_repaired(pp, q, r).unwrap(), truth);
        }
    }

    #[test]
    fn line_formula_printed_and_repaired() {
        for (pp, q, r) in [(2, 2, 2), (2, 3, 4), (1, 2, 2), (1, 2, 3)] {
            let truth = charpoly(&t4(pp, q, r).line_graph(), MatrixKind::Adjacency);
            assert_ne!(formula_line_t4_charpoly(pp, q, r).unwrap(), truth);
            assert_eq!(formula_line_t4_charpoly_repaired(pp, q, r).unwrap(), truth);
        }
        assert!(matches!(
            formula_line_t4_charpoly(1, 1, 2),
            Err(ClosedFormError::CoverageGap(_))
        ));
    }
}
