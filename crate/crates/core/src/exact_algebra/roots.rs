//! Real-root counting with Sturm sequences over ℚ.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{LaurentPolynomial, Rational};
use crate::{Error, Result};

/// Dense ascending coefficients of an ordinary polynomial.
type Dense = Vec<Rational>;

fn to_dense(p: &LaurentPolynomial) -> Dense {
    let c = p.canonicalize();
    match c.high_degree() {
        None => Vec::new(),
        Some(h) => (0..=h).map(|e| c.coeff(e)).collect(),
    }
}

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn dense_rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lead_inv = b.last().expect("nonzero divisor").recip();
    while r.len() >= b.len() {
        let c = r.last().unwrap() * &lead_inv;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            let v = &r[shift + i] - &c * bc;
            r[shift + i] = v;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn dense_derivative(p: &Dense) -> Dense {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
        .collect()
}

fn sign_changes<'a>(signs: impl Iterator<Item = &'a Rational>) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs {
        let cur = if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            continue;
        };
        if prev != 0 && cur != prev {
            changes += 1;
        }
        prev = cur;
    }
    changes
}

/// Canonical square-free part `p / gcd(p, p')`.
pub fn square_free_part(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = p.canonicalize();
    if c.degree() == 0 {
        return Ok(c);
    }
    let g = c.gcd(&c.derivative());
    Ok(c.exact_div(&g)?.canonicalize())
}

/// Yun's square-free decomposition: canonical pairwise-coprime square-free
/// factors `(fᵢ, i)` with `canonicalize(p) = ∏ fᵢ^i`. Constant factors are
/// omitted.
pub fn square_free_decomposition(p: &LaurentPolynomial) -> Result<Vec<(LaurentPolynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.canonicalize();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        if a.degree() > 0 {
            out.push((a.canonicalize(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Sturm sequence of a square-free polynomial, as dense coefficient vectors.
fn sturm_chain(p: &Dense) -> Vec<Dense> {
    let mut chain = vec![p.clone(), dense_derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r = dense_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

/// Number of distinct real roots in the open interval `(0, ∞)`.
pub fn sturm_positive_root_count(p: &LaurentPolynomial) -> Result<usize> {
    let sf = to_dense(&square_free_part(p)?);
    if sf.len() <= 1 {
        return Ok(0);
    }
    // canonical polynomials have a nonzero constant term, so 0 is not a root
    let chain = sturm_chain(&sf);
    let at_zero = sign_changes(chain.iter().map(|q| &q[0]));
    let at_inf = sign_changes(chain.iter().map(|q| q.last().unwrap()));
    Ok(at_zero - at_inf)
}

/// Number of distinct real roots (of any sign, zero excluded).
pub fn sturm_real_root_count(p: &LaurentPolynomial) -> Result<usize> {
    let sf = to_dense(&square_free_part(p)?);
    if sf.len() <= 1 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    let at_neg_inf = sign_changes(
        chain
            .iter()
            .map(|q| if q.len() % 2 == 0 { -q.last().unwrap().clone() } else { q.last().unwrap().clone() })
            .collect::<Vec<_>>()
            .iter(),
    );
    let at_inf = sign_changes(chain.iter().map(|q| q.last().unwrap()));
    Ok(at_neg_inf - at_inf)
}

/// Outcome of [`all_roots_real_positive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCheck {
    pub all_real_positive: bool,
    /// Set when the polynomial is a unit, so the statement holds vacuously.
    pub vacuous: bool,
}

/// Whether every complex root of `p`, counted with multiplicity, is real and
/// positive. Each square-free factor must have as many distinct positive
/// roots as its degree.
pub fn all_roots_real_positive(p: &LaurentPolynomial) -> Result<RootCheck> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.canonicalize().degree() == 0 {
        return Ok(RootCheck { all_real_positive: true, vacuous: true });
    }
    for (factor, _) in square_free_decomposition(p)? {
        if sturm_positive_root_count(&factor)? != factor.degree() {
            return Ok(RootCheck { all_real_positive: false, vacuous: false });
        }
    }
    Ok(RootCheck { all_real_positive: true, vacuous: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_positive_root_count(&p("t^2 - 3*t + 1")).unwrap(), 2);
        // roots (-3 ± √5)/2 are both negative
        assert_eq!(sturm_positive_root_count(&p("t^2 + 3*t + 1")).unwrap(), 0);
        // discriminant -3
        assert_eq!(sturm_positive_root_count(&p("t^2 - t + 1")).unwrap(), 0);
        assert!(matches!(sturm_positive_root_count(&LaurentPolynomial::zero()), Err(Error::ZeroPolynomial)));
        assert_eq!(sturm_positive_root_count(&p("5")).unwrap(), 0);
    }

    #[test]
    fn sturm_counts_distinct_roots_and_ignores_zero() {
        let f = &(&p("t - 1").pow(3) * &p("t - 2")) * &p("t^3");
        assert_eq!(sturm_positive_root_count(&f).unwrap(), 2);
        let g = LaurentPolynomial::from_roots(&[q(1, 3), q(-2, 1), q(7, 5), q(1, 3)]);
        assert_eq!(sturm_positive_root_count(&g).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&g).unwrap(), 3);
        assert_eq!(sturm_real_root_count(&p("t^2 + 1")).unwrap(), 0);
    }

    #[test]
    fn all_roots_examples() {
        assert!(all_roots_real_positive(&p("t^2 - 3*t + 1")).unwrap().all_real_positive);
        assert!(all_roots_real_positive(&p("t - 1").pow(2)).unwrap().all_real_positive);
        assert!(!all_roots_real_positive(&p("t^2 + 1")).unwrap().all_real_positive);
        let unit = all_roots_real_positive(&p("-3*t^4")).unwrap();
        assert!(unit.all_real_positive && unit.vacuous);
        assert!(all_roots_real_positive(&LaurentPolynomial::zero()).is_err());
        // one positive, one negative root
        assert!(!all_roots_real_positive(&p("t^2 - t - 2")).unwrap().all_real_positive);
    }

    #[test]
    fn yun_decomposition() {
        let f = &(&p("t - 1").pow(3) * &p("t + 2").pow(2)) * &p("t^2 + 1");
        let dec = square_free_decomposition(&f).unwrap();
        assert_eq!(dec, vec![(p("t^2 + 1"), 1), (p("t + 2"), 2), (p("t - 1"), 3)]);
        let rebuilt: LaurentPolynomial = dec.iter().map(|(g, m)| g.pow(*m)).product();
        assert_eq!(rebuilt, f.canonicalize());
    }
}
