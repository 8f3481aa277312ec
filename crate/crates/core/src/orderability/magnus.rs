use std::cmp::Ordering;

use serde::Serialize;

use crate::free_group::FreeWord;

/// Truncation depth used when none is given.
pub const DEFAULT_DEPTH: usize = 6;

const OVERFLOW: &str = "Magnus coefficient exceeds i128";

/// Environment variable overriding [`DEFAULT_DEPTH`].
pub const DEPTH_ENV: &str = "ORDERLEX_DEPTH";

/// [`DEFAULT_DEPTH`] unless `ORDERLEX_DEPTH` holds a positive integer.
pub fn default_depth() -> usize {
    std::env::var(DEPTH_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&d: &usize| d >= 1)
        .unwrap_or(DEFAULT_DEPTH)
}

/// Image of a free group element in `ℤ⟨⟨X₁, …, Xₙ⟩⟩` truncated above
/// degree `depth`, under `xᵢ ↦ 1 + Xᵢ`.
///
/// Layer `k` holds the coefficients of the `n^k` monomials of degree `k`,
/// indexed by reading the variable indices as base-`n` digits, most
/// significant first. Index order within a layer is lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    depth: usize,
    layers: Vec<Vec<i128>>,
}

/// Outcome of comparing two words in the Magnus ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    UnresolvedAtDepth,
}

impl Comparison {
    pub fn reverse(self) -> Self {
        match self {
            Self::Less => Self::Greater,
            Self::Greater => Self::Less,
            other => other,
        }
    }

    pub fn is_resolved(self) -> bool {
        self != Self::UnresolvedAtDepth
    }
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Self::Less,
            Ordering::Greater => Self::Greater,
            Ordering::Equal => Self::Equal,
        }
    }
}

impl MagnusSeries {
    pub fn one(rank: usize, depth: usize) -> Self {
        let rank = rank.max(1);
        let mut layers: Vec<Vec<i128>> = (0..=depth).map(|k| vec![0; rank.pow(k as u32)]).collect();
        layers[0][0] = 1;
        Self { rank, depth, layers }
    }

    pub fn expand(w: &FreeWord, rank: usize, depth: usize) -> Self {
        let mut s = Self::one(rank.max(w.min_rank()), depth);
        // multiply run by run: x^k contributes (1 + X)^k
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let k = (j - i) as i128;
            s.mul_univariate(l.generator, &binomial_series(if l.inverse { -k } else { k }, depth));
            i = j;
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn layer(&self, k: usize) -> &[i128] {
        &self.layers[k]
    }

    /// Coefficient of `X_{m₀} X_{m₁} …`, zero beyond the truncation depth.
    pub fn coefficient(&self, monomial: &[usize]) -> i128 {
        if monomial.len() > self.depth || monomial.iter().any(|&v| v >= self.rank) {
            return 0;
        }
        let idx = monomial.iter().fold(0, |acc, &v| acc * self.rank + v);
        self.layers[monomial.len()][idx]
    }

    /// Right multiplication by `Σ cⱼ Xᵢ^j`.
    fn mul_univariate(&mut self, var: usize, c: &[i128]) {
        let n = self.rank;
        let mut out: Vec<Vec<i128>> = self.layers.iter().map(|l| vec![0; l.len()]).collect();
        for (k, layer) in self.layers.iter().enumerate() {
            let mut stride = 1usize;
            let mut tail = 0usize;
            for (j, &cj) in c.iter().enumerate().take(self.depth - k + 1) {
                if j > 0 {
                    stride *= n;
                    tail = tail * n + var;
                }
                if cj == 0 {
                    continue;
                }
                let target = &mut out[k + j];
                for (idx, &a) in layer.iter().enumerate() {
                    if a != 0 {
                        let slot = &mut target[idx * stride + tail];
                        *slot = cj.checked_mul(a).and_then(|x| slot.checked_add(x)).expect(OVERFLOW);
                    }
                }
            }
        }
        self.layers = out;
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.rank, self.depth), (other.rank, other.depth), "series of different shape");
        let n = self.rank;
        let mut out = Self::one(n, self.depth);
        out.layers[0][0] = 0;
        for (p, a) in self.layers.iter().enumerate() {
            for (q, b) in other.layers.iter().enumerate().take(self.depth - p + 1) {
                let stride = n.pow(q as u32);
                let target = &mut out.layers[p + q];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        let slot = &mut target[i * stride + j];
                        *slot = x.checked_mul(y).and_then(|z| slot.checked_add(z)).expect(OVERFLOW);
                    }
                }
            }
        }
        out
    }

    /// Sign of the first nonzero coefficient above the constant term, in
    /// degree-then-lexicographic order; `None` if all vanish to this depth.
    pub fn leading_sign(&self) -> Option<Ordering> {
        self.layers[1..].iter().flatten().find(|&&c| c != 0).map(|c| c.cmp(&0))
    }
}

/// Coefficients of `(1 + X)^k` up to `X^depth`.
fn binomial_series(k: i128, depth: usize) -> Vec<i128> {
    let mut c = vec![1i128];
    for j in 1..=depth as i128 {
        let prev = *c.last().unwrap();
        c.push(prev.checked_mul(k - j + 1).expect(OVERFLOW) / j);
    }
    c
}

pub fn magnus_expand(w: &FreeWord, rank: usize, depth: usize) -> MagnusSeries {
    MagnusSeries::expand(w, rank, depth)
}

/// Compares `u` and `v` by the leading coefficient of `u v⁻¹`.
pub fn magnus_compare(u: &FreeWord, v: &FreeWord, depth: usize) -> Comparison {
    let diff = u.mul(&v.inverse());
    if diff.is_identity() {
        return Comparison::Equal;
    }
    match MagnusSeries::expand(&diff, 1, depth).leading_sign() {
        Some(o) => o.into(),
        None => Comparison::UnresolvedAtDepth,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s, 3).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let a = magnus_expand(&w("a"), 2, 6);
        assert_eq!(a.coefficient(&[]), 1);
        assert_eq!(a.coefficient(&[0]), 1);
        assert_eq!(a.coefficient(&[0, 0]), 0);

        let inv = magnus_expand(&w("A"), 2, 6);
        for k in 0..=6 {
            assert_eq!(inv.coefficient(&vec![0; k]), if k % 2 == 0 { 1 } else { -1 });
        }

        // [a,b] = 1 + (X₁X₂ − X₂X₁) + …
        let c = magnus_expand(&FreeWord::commutator(&w("a"), &w("b")), 2, 6);
        assert_eq!(c.layer(1), &[0, 0]);
        assert_eq!(c.layer(2), &[0, 1, -1, 0]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_series(3, 4), [1, 3, 3, 1, 0]);
        assert_eq!(binomial_series(-2, 4), [1, -2, 3, -4, 5]);
    }

    #[test]
    fn run_expansion_matches_letter_by_letter() {
        let word = w("aaaBBcAAbbb");
        let mut s = MagnusSeries::one(3, 6);
        for l in word.letters() {
            s = s.mul(&magnus_expand(&FreeWord::from_letter(*l), 3, 6));
        }
        assert_eq!(s, magnus_expand(&word, 3, 6));
    }

    #[test]
    fn comparison_examples() {
        let one = FreeWord::identity();
        assert_eq!(magnus_compare(&w("a"), &one, 6), Comparison::Greater);
        assert_eq!(magnus_compare(&w("ab"), &w("ab"), 6), Comparison::Equal);
        let (a, b) = (w("a"), w("b"));
        assert_eq!(magnus_compare(&b, &one, 6), Comparison::Greater);
        assert_eq!(magnus_compare(&FreeWord::commutator(&a, &b), &b, 6), Comparison::Less);
        let ab = FreeWord::commutator(&a, &b);
        assert_eq!(magnus_compare(&ab, &one, 6), Comparison::Greater);
        let a2b2 = FreeWord::commutator(&a.pow(2), &b.pow(2));
        assert_eq!(magnus_compare(&a2b2, &ab, 6), Comparison::Greater);
    }

    #[test]
    fn deep_commutators_are_unresolved() {
        // a 7-fold commutator has nothing below degree 7
        let mut c = w("a");
        for _ in 0..6 {
            c = FreeWord::commutator(&c, &w("b"));
        }
        assert_eq!(magnus_compare(&c, &FreeWord::identity(), 6), Comparison::UnresolvedAtDepth);
        assert!(magnus_compare(&c, &FreeWord::identity(), 7).is_resolved());
    }
}
