//! Inputs shared by the benchmarks.

use orderlex::catalog::{battery, cyclic_group};
use orderlex::finite_rep::{FiniteGroup, TorusHomomorphism};
use orderlex::{FreeWord, LaurentPolynomial, MappingTorus, PolynomialMatrix};

/// `tI - A` for the companion-like matrix with ones above the diagonal and
/// `k` on it, a matrix whose Smith form needs real gcd work.
pub fn characteristic_matrix(n: usize) -> PolynomialMatrix {
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let a = if i == j {
                (i + 2) as i64
            } else if j == i + 1 || (i == n - 1 && j == 0) {
                1
            } else {
                0
            };
            let mut p = LaurentPolynomial::from_ints(0, &[-a]);
            if i == j {
                p = &p + &LaurentPolynomial::t();
            }
            entries.push(p);
        }
    }
    PolynomialMatrix::new(n, n, entries).expect("square")
}

pub fn torus(name: &str) -> MappingTorus {
    battery().expect("battery").into_iter().find(|m| m.label() == name).expect("known automorphism")
}

/// `f(x) = 1`, `f(t)` a generator of `ℤ_k`.
pub fn stable_cyclic(m: &MappingTorus, k: usize) -> TorusHomomorphism {
    let g = cyclic_group(k).expect("cyclic group");
    let gen = g.index_of(&g.generators()[0]).expect("generator");
    TorusHomomorphism::new(m.monodromy(), g, vec![0; m.fiber_rank()], gen).expect("well defined")
}

pub fn symmetric3() -> FiniteGroup {
    FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).expect("S3")
}

/// Left-normed commutator `[[[a, b], b], …]` of the given weight.
pub fn deep_commutator(weight: usize) -> FreeWord {
    let (a, b) = (FreeWord::generator(0), FreeWord::generator(1));
    (1..weight).fold(a, |c, _| FreeWord::commutator(&c, &b))
}
