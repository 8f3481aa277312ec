//! Seeded randomized checks of bi-order properties of the Magnus ordering.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::magnus::{magnus_compare, Comparison};
use super::verdict::has_positive_real_eigenvalue;
use crate::exact_algebra::{Rational, RationalMatrix};
use crate::free_group::{FreeWord, Letter};
use crate::Result;

pub const DEFAULT_SEED: u64 = 0x0dd5_eed5;

/// Longest random word the suites draw.
pub const MAX_WORD_LENGTH: usize = 8;

/// Counts from one family of randomized checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub trials: usize,
    pub resolved: usize,
    pub unresolved: usize,
    pub violations: usize,
    /// Trials whose hypotheses did not hold.
    pub skipped: usize,
    pub depth: usize,
    pub seed: u64,
}

impl SuiteReport {
    fn new(trials: usize, depth: usize, seed: u64) -> Self {
        Self { trials, depth, seed, ..Self::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Fraction of non-skipped checks left unresolved.
    pub fn unresolved_rate(&self) -> f64 {
        let total = self.resolved + self.unresolved;
        if total == 0 {
            0.0
        } else {
            self.unresolved as f64 / total as f64
        }
    }

    /// Records whether `got` is `want`, treating unresolved as neither.
    fn expect(&mut self, got: Comparison, want: Comparison) {
        if !got.is_resolved() {
            self.unresolved += 1;
        } else {
            self.resolved += 1;
            if got != want {
                self.violations += 1;
            }
        }
    }
}

/// Uniform length in `0..=max_len`, then uniform letters with no
/// cancellation.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5));
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

/// One report per part of the commutator lemma plus the sandwich bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorReport {
    /// `[a,b] < b` when `b > 1`, `[a,b] > b` when `b < 1`.
    pub part1: SuiteReport,
    /// `[a,b] > a⁻¹` when `a > 1`, `[a,b] < a⁻¹` when `a < 1`.
    pub part2: SuiteReport,
    /// `[aⁿ,bᵐ] > [a,b]` for `2 ≤ n, m ≤ 4` when `[a,b] > 1`.
    pub part3: SuiteReport,
    /// `[a^N,b^N]⁻¹ < [a,b] < [a^N,b^N]` for `2 ≤ N ≤ 4` when `[a,b] > 1`.
    pub sandwich: SuiteReport,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.part1.passed() && self.part2.passed() && self.part3.passed() && self.sandwich.passed()
    }
}

/// Comparison of `x` with the identity.
fn sign(x: &FreeWord, depth: usize) -> Comparison {
    magnus_compare(x, &FreeWord::identity(), depth)
}

pub fn lemma_comm_suite(rank: usize, trials: usize, depth: usize, seed: u64) -> CommutatorReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CommutatorReport {
        part1: SuiteReport::new(trials, depth, seed),
        part2: SuiteReport::new(trials, depth, seed),
        part3: SuiteReport::new(trials, depth, seed),
        sandwich: SuiteReport::new(trials, depth, seed),
    };
    let one = FreeWord::identity();
    for _ in 0..trials {
        let a = random_word(&mut rng, rank, MAX_WORD_LENGTH);
        let b = random_word(&mut rng, rank, MAX_WORD_LENGTH);
        let ab = FreeWord::commutator(&a, &b);

        match sign(&b, depth) {
            Comparison::Equal => report.part1.skipped += 1,
            Comparison::UnresolvedAtDepth => report.part1.unresolved += 1,
            s => report.part1.expect(magnus_compare(&ab, &b, depth), s.reverse()),
        }
        let a_inv = a.inverse();
        match sign(&a, depth) {
            Comparison::Equal => report.part2.skipped += 1,
            Comparison::UnresolvedAtDepth => report.part2.unresolved += 1,
            s => report.part2.expect(magnus_compare(&ab, &a_inv, depth), s),
        }

        // orient the pair so that [a,b] > 1; [b,a] = [a,b]⁻¹
        let (a, b, c) = match magnus_compare(&ab, &one, depth) {
            Comparison::Greater => (a, b, ab),
            Comparison::Less => (b.clone(), a.clone(), FreeWord::commutator(&b, &a)),
            Comparison::Equal => {
                report.part3.skipped += 1;
                report.sandwich.skipped += 1;
                continue;
            }
            Comparison::UnresolvedAtDepth => {
                report.part3.unresolved += 1;
                report.sandwich.unresolved += 1;
                continue;
            }
        };
        for n in 2..=4 {
            for m in 2..=4 {
                let big = FreeWord::commutator(&a.pow(n), &b.pow(m));
                report.part3.expect(magnus_compare(&big, &c, depth), Comparison::Greater);
            }
        }
        for n in 2..=4 {
            let big = FreeWord::commutator(&a.pow(n), &b.pow(n));
            report.sandwich.expect(magnus_compare(&c, &big, depth), Comparison::Less);
            report.sandwich.expect(magnus_compare(&big.inverse(), &c, depth), Comparison::Less);
        }
    }
    report
}

/// Bi-order axioms on random triples `(u, v, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiOrderReport {
    pub antisymmetry: SuiteReport,
    pub transitivity: SuiteReport,
    pub left_invariance: SuiteReport,
    pub right_invariance: SuiteReport,
    /// `u > 1` and `v > 1` imply `uv > 1`.
    pub positive_cone: SuiteReport,
}

impl BiOrderReport {
    pub fn passed(&self) -> bool {
        [&self.antisymmetry, &self.transitivity, &self.left_invariance, &self.right_invariance, &self.positive_cone]
            .iter()
            .all(|r| r.passed())
    }

    pub fn unresolved_rate(&self) -> f64 {
        let parts = [&self.antisymmetry, &self.transitivity, &self.left_invariance, &self.right_invariance];
        let unresolved: usize = parts.iter().map(|r| r.unresolved).sum();
        let total: usize = parts.iter().map(|r| r.unresolved + r.resolved).sum();
        if total == 0 {
            0.0
        } else {
            unresolved as f64 / total as f64
        }
    }
}

/// Ranks are drawn uniformly from `ranks`.
pub fn bi_order_suite(ranks: std::ops::RangeInclusive<usize>, trials: usize, depth: usize, seed: u64) -> BiOrderReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let new = || SuiteReport::new(trials, depth, seed);
    let mut r = BiOrderReport {
        antisymmetry: new(),
        transitivity: new(),
        left_invariance: new(),
        right_invariance: new(),
        positive_cone: new(),
    };
    let one = FreeWord::identity();
    for _ in 0..trials {
        let rank = rng.gen_range(ranks.clone());
        let u = random_word(&mut rng, rank, MAX_WORD_LENGTH);
        let v = random_word(&mut rng, rank, MAX_WORD_LENGTH);
        let w = random_word(&mut rng, rank, MAX_WORD_LENGTH);

        let uv = magnus_compare(&u, &v, depth);
        if uv.is_resolved() {
            r.antisymmetry.expect(magnus_compare(&v, &u, depth), uv.reverse());
            r.left_invariance.expect(magnus_compare(&w.mul(&u), &w.mul(&v), depth), uv);
            r.right_invariance.expect(magnus_compare(&u.mul(&w), &v.mul(&w), depth), uv);
        } else {
            r.antisymmetry.unresolved += 1;
            r.left_invariance.unresolved += 1;
            r.right_invariance.unresolved += 1;
        }

        // transitivity along the sorted triple; an unresolved conclusion
        // from two resolved strict premises counts as a violation
        let vw = magnus_compare(&v, &w, depth);
        let premises = match (uv, vw) {
            (Comparison::Less, Comparison::Less) => Some((&u, &w, Comparison::Less)),
            (Comparison::Greater, Comparison::Greater) => Some((&u, &w, Comparison::Greater)),
            _ => None,
        };
        match premises {
            Some((x, z, want)) => {
                r.transitivity.resolved += 1;
                if magnus_compare(x, z, depth) != want {
                    r.transitivity.violations += 1;
                }
            }
            None if uv.is_resolved() && vw.is_resolved() => r.transitivity.skipped += 1,
            None => r.transitivity.unresolved += 1,
        }

        match (magnus_compare(&u, &one, depth), magnus_compare(&v, &one, depth)) {
            (Comparison::Greater, Comparison::Greater) => {
                r.positive_cone.expect(magnus_compare(&u.mul(&v), &one, depth), Comparison::Greater)
            }
            (a, b) if a.is_resolved() && b.is_resolved() => r.positive_cone.skipped += 1,
            _ => r.positive_cone.unresolved += 1,
        }
    }
    r
}

/// No element with nonzero exponent sum may lie strictly between two
/// commutators. Each trial draws `g` outside `[F,F]` and commutators
/// `c = [x,y]`, `c′ = [x′,y′]`; a resolved `c < g < c′` is a violation.
pub fn convexity_suite(rank: usize, trials: usize, depth: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::new(trials, depth, seed);
    for _ in 0..trials {
        let g = random_word(&mut rng, rank, MAX_WORD_LENGTH);
        if g.exponent_sums(rank).iter().all(|&e| e == 0) {
            r.skipped += 1;
            continue;
        }
        let mut commutator = || {
            let x = random_word(&mut rng, rank, MAX_WORD_LENGTH / 2);
            let y = random_word(&mut rng, rank, MAX_WORD_LENGTH / 2);
            FreeWord::commutator(&x, &y)
        };
        let (c, c2) = (commutator(), commutator());
        let (lo, hi) = (magnus_compare(&c, &g, depth), magnus_compare(&g, &c2, depth));
        if !lo.is_resolved() || !hi.is_resolved() {
            r.unresolved += 1;
            continue;
        }
        r.resolved += 1;
        if lo == Comparison::Less && hi == Comparison::Less {
            r.violations += 1;
        }
    }
    r
}

/// Random integer triangular matrices with positive diagonal, which
/// preserve the lexicographic positive cone, must have a positive real
/// eigenvalue.
pub fn lemma8_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::new(trials, 0, seed);
    for _ in 0..trials {
        let size = rng.gen_range(2..=5);
        let m = random_triangular(&mut rng, size);
        r.resolved += 1;
        if !has_positive_real_eigenvalue(&m)? {
            r.violations += 1;
        }
    }
    Ok(r)
}

/// Upper or lower triangular with diagonal in `1..=5` and other entries in
/// `-5..=5`.
pub fn random_triangular<R: Rng>(rng: &mut R, size: usize) -> RationalMatrix {
    let upper = rng.gen_bool(0.5);
    let mut m = RationalMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            let v: i64 = if i == j {
                rng.gen_range(1..=5)
            } else if (j > i) == upper {
                rng.gen_range(-5..=5)
            } else {
                0
            };
            m[(i, j)] = Rational::from_integer(v.into());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_words_are_reduced_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let w = random_word(&mut rng, 3, 8);
            assert!(w.len() <= 8);
            assert!(w.min_rank() <= 3);
        }
    }

    #[test]
    fn sandwich_for_generators() {
        // a = x, b = y, N = 2: [x,y] = 1 + (XY − YX) + …, [x²,y²] = 1 + 4(XY − YX) + …
        let (x, y) = (FreeWord::generator(0), FreeWord::generator(1));
        let c = FreeWord::commutator(&x, &y);
        let big = FreeWord::commutator(&x.pow(2), &y.pow(2));
        assert_eq!(magnus_compare(&c, &big, 3), Comparison::Less);
        assert_eq!(magnus_compare(&big.inverse(), &c, 3), Comparison::Less);
    }

    #[test]
    fn equal_words_are_skipped() {
        let a = FreeWord::generator(0);
        assert!(FreeWord::commutator(&a, &a).is_identity());
    }

    #[test]
    fn small_runs_pass() {
        assert!(lemma_comm_suite(2, 40, 6, 3).passed());
        assert!(bi_order_suite(2..=3, 60, 6, 3).passed());
        assert!(convexity_suite(2, 60, 6, 3).passed());
        assert!(lemma8_suite(20, 3).unwrap().passed());
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(lemma_comm_suite(2, 20, 6, 9), lemma_comm_suite(2, 20, 6, 9));
    }
}
