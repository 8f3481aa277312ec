use serde::Serialize;

use crate::covers::build_cover;
use crate::exact_algebra::{all_roots_real_positive, char_poly, sturm_positive_root_count, LaurentPolynomial, RationalMatrix};
use crate::finite_rep::{FiniteRepresentation, TorusHomomorphism};
use crate::mapping_torus::MappingTorus;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderStatus {
    /// No positive real root, so the group is not bi-orderable.
    ObstructedNotBiorderable,
    /// Every root real and positive, so the group is bi-orderable.
    BiorderableByPerronRolfsen,
    Inconclusive,
}

impl OrderStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ObstructedNotBiorderable => "obstructed_not_biorderable",
            Self::BiorderableByPerronRolfsen => "biorderable_by_perron_rolfsen",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderVerdict {
    pub status: OrderStatus,
    /// Distinct positive real roots.
    pub positive_root_count: usize,
    pub witness: LaurentPolynomial,
}

/// Bi-orderability verdict from the Alexander polynomial of a fibered
/// manifold: no positive real root obstructs, all roots real and positive
/// certifies.
pub fn clay_rolfsen_verdict(p: &LaurentPolynomial) -> Result<OrderVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let witness = p.canonicalize();
    let positive_root_count = sturm_positive_root_count(&witness)?;
    let status = if positive_root_count == 0 {
        OrderStatus::ObstructedNotBiorderable
    } else if all_roots_real_positive(&witness)?.all_real_positive {
        OrderStatus::BiorderableByPerronRolfsen
    } else {
        OrderStatus::Inconclusive
    };
    Ok(OrderVerdict { status, positive_root_count, witness })
}

pub fn has_positive_real_eigenvalue(m: &RationalMatrix) -> Result<bool> {
    Ok(sturm_positive_root_count(&char_poly(m)?)? > 0)
}

/// Classical, twisted and cover polynomials for one homomorphism, with the
/// positive-root comparisons between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub classical: String,
    /// Twisted polynomial of the regular representation.
    pub twisted: String,
    /// Classical polynomial of the cover, in its own variable.
    pub cover: String,
    pub d: i64,
    pub classical_positive_roots: usize,
    pub twisted_positive_roots: usize,
    pub cover_positive_roots: usize,
    /// Twisted has a positive root iff the cover polynomial has one.
    pub existence_agrees: bool,
    /// `r ↦ r^d` matches the positive roots of twisted and cover one to one.
    pub root_sets_correspond: bool,
    /// The twisted polynomial obstructs while the cover polynomial does not.
    pub strengthens: bool,
    /// Twisted has a positive root that is not a root of the classical
    /// polynomial.
    pub gain: bool,
    pub twisted_status: OrderStatus,
    pub cover_status: OrderStatus,
    pub surjective: bool,
}

impl Theorem2Report {
    pub fn holds(&self) -> bool {
        self.existence_agrees && self.root_sets_correspond && !self.strengthens
    }
}

pub fn theorem2_report(m: &MappingTorus, f: &TorusHomomorphism) -> Result<Theorem2Report> {
    let classical = m.classical_alexander()?.polynomial;
    let rep = FiniteRepresentation::regular(m.monodromy(), f)?;
    let twisted = m.twisted_alexander(&rep, 1)?.polynomial;
    let cover = build_cover(m, f)?;
    let lifted = MappingTorus::new(cover.lifted_monodromy.clone(), "")?.classical_alexander()?.polynomial;

    let tw = clay_rolfsen_verdict(&twisted)?;
    let cv = clay_rolfsen_verdict(&lifted)?;
    let cl = clay_rolfsen_verdict(&classical)?;
    // the classical polynomial divides the twisted one, so positive roots of
    // twisted outside the classical set are counted against their gcd
    let shared = sturm_positive_root_count(&twisted.gcd(&classical))?;
    let rescaled = lifted.substitute_power(cover.d)?.canonicalize();
    Ok(Theorem2Report {
        classical: classical.to_string(),
        twisted: twisted.to_string(),
        cover: lifted.to_string(),
        d: cover.d,
        classical_positive_roots: cl.positive_root_count,
        twisted_positive_roots: tw.positive_root_count,
        cover_positive_roots: cv.positive_root_count,
        existence_agrees: (tw.positive_root_count > 0) == (cv.positive_root_count > 0),
        root_sets_correspond: rescaled == twisted && tw.positive_root_count == cv.positive_root_count,
        strengthens: tw.status == OrderStatus::ObstructedNotBiorderable && cv.status != OrderStatus::ObstructedNotBiorderable,
        gain: tw.positive_root_count > shared,
        twisted_status: tw.status,
        cover_status: cv.status,
        surjective: f.is_surjective(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_rep::FiniteGroup;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn verdict_examples() {
        let v = clay_rolfsen_verdict(&p("t^2 - 3t + 1")).unwrap();
        assert_eq!(v.status, OrderStatus::BiorderableByPerronRolfsen);
        assert_eq!(v.positive_root_count, 2);
        let v = clay_rolfsen_verdict(&p("t^2 - t + 1")).unwrap();
        assert_eq!((v.status, v.positive_root_count), (OrderStatus::ObstructedNotBiorderable, 0));
        let v = clay_rolfsen_verdict(&(&p("t - 2") * &p("t + 1"))).unwrap();
        assert_eq!((v.status, v.positive_root_count), (OrderStatus::Inconclusive, 1));
        assert!(matches!(clay_rolfsen_verdict(&LaurentPolynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn verdict_is_unit_invariant() {
        let q = p("t^2 - 3t + 1");
        let u = q.shift(-5).scale(&crate::Rational::new((-3).into(), 7.into()));
        assert_eq!(clay_rolfsen_verdict(&u).unwrap(), clay_rolfsen_verdict(&q).unwrap());
    }

    #[test]
    fn eigenvalue_examples() {
        assert!(has_positive_real_eigenvalue(&RationalMatrix::from_ints(&[[2, 1], [1, 1]])).unwrap());
        assert!(!has_positive_real_eigenvalue(&RationalMatrix::from_ints(&[[0, -1], [1, 0]])).unwrap());
        assert!(has_positive_real_eigenvalue(&RationalMatrix::from_ints(&[[3, 7, -2], [0, 1, 5], [0, 0, 2]])).unwrap());
        assert!(has_positive_real_eigenvalue(&RationalMatrix::from_ints(&[[1, 2, 3]])).is_err());
    }

    #[test]
    fn figure_eight_report() {
        let m = MappingTorus::parse(2, &["aba", "ba"], &["aB", "bbA"], "").unwrap();
        let z2 = FiniteGroup::from_cycle_strings(2, &["(1 2)"]).unwrap();
        let f = TorusHomomorphism::new(m.monodromy(), z2, vec![0, 0], 1).unwrap();
        let r = theorem2_report(&m, &f).unwrap();
        assert!(r.holds());
        assert!(!r.gain);
        assert_eq!(r.twisted_positive_roots, 2);
        assert_eq!(r.classical_positive_roots, 2);
        assert_eq!(r.cover, "t^2 - 7*t + 1");
    }
}
