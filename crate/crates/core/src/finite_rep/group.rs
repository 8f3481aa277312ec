use std::collections::{HashMap, VecDeque};

use super::Permutation;
use crate::{Error, Result};

/// Default cap on the number of elements [`FiniteGroup::enumerate`] will
/// produce.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10_000;

/// A permutation group with its elements listed breadth-first from the
/// identity, extending words on the right by generators in the given order.
/// Element `i` is therefore reached by a shortlex-minimal positive word.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `right_mul[i][g]` = index of `elements[i] * generators[g]`
    right_mul: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn enumerate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::enumerate_bounded(degree, generators, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_bounded(degree: usize, generators: Vec<Permutation>, bound: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut right_mul = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for g in &generators {
                let next = elements[i].compose(g);
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= bound {
                            return Err(Error::GroupTooLarge(bound));
                        }
                        let j = elements.len();
                        index.insert(next.clone(), j);
                        elements.push(next);
                        queue.push_back(j);
                        j
                    }
                };
                row.push(j);
            }
            right_mul.push(row);
        }
        Ok(Self { degree, generators, elements, index, right_mul })
    }

    /// Parses generators in cycle notation.
    pub fn from_cycle_strings(degree: usize, generators: &[&str]) -> Result<Self> {
        let parsed = generators.iter().map(|s| Permutation::parse(s, degree)).collect::<Result<Vec<_>>>()?;
        let degree = parsed.iter().map(Permutation::degree).max().unwrap_or(degree).max(degree);
        let parsed = parsed
            .into_iter()
            .map(|p| {
                let mut imgs = p.images().to_vec();
                imgs.extend(imgs.len()..degree);
                Permutation::from_images(imgs)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::enumerate(degree, parsed)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j])]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn pow(&self, i: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(i) } else { i };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    pub fn right_mul_by_generator(&self, i: usize, g: usize) -> usize {
        self.right_mul[i][g]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Subgroup generated by the given elements, enumerated with those
    /// elements as generators (in that order).
    pub fn subgroup(&self, generators: &[usize]) -> Result<Self> {
        Self::enumerate(self.degree, generators.iter().map(|&i| self.elements[i].clone()).collect())
    }

    /// Indices (in `self`) of the elements of the subgroup generated by
    /// `generators`.
    pub fn subgroup_members(&self, generators: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &g in generators {
                let j = self.mul(i, g);
                if !member[j] {
                    member[j] = true;
                    queue.push_back(j);
                }
            }
        }
        member
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive closure: repeatedly multiply every pair until nothing new appears.
    fn naive_closure(gens: &[Permutation]) -> usize {
        let mut set: Vec<Permutation> = vec![Permutation::identity(gens[0].degree())];
        set.extend(gens.iter().cloned());
        loop {
            let mut grew = false;
            for a in set.clone() {
                for b in set.clone() {
                    let c = a.compose(&b);
                    if !set.contains(&c) {
                        set.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return set.len();
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let z2 = FiniteGroup::from_cycle_strings(2, &["(1 2)"]).unwrap();
        assert_eq!(z2.order(), 2);
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.order(), naive_closure(s3.generators()));
        let trivial = FiniteGroup::from_cycle_strings(1, &["()"]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn enumeration_is_shortlex_and_bounded() {
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        // identity, s, r, then words of length 2 in shortlex order
        assert_eq!(s3.element(1).to_string(), "(1 2)");
        assert_eq!(s3.element(2).to_string(), "(1 2 3)");
        assert_eq!(s3.element(3), &s3.element(1).compose(s3.element(2)));
        let s5 = FiniteGroup::enumerate_bounded(
            5,
            vec![Permutation::parse("(1 2)", 5).unwrap(), Permutation::parse("(1 2 3 4 5)", 5).unwrap()],
            100,
        );
        assert!(matches!(s5, Err(Error::GroupTooLarge(100))));
    }

    #[test]
    fn arithmetic() {
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        for i in 0..6 {
            assert_eq!(s3.mul(i, s3.inverse(i)), 0);
        }
        assert_eq!(s3.element_order(2), 3);
        assert_eq!(s3.pow(2, -1), s3.inverse(2));
        assert!(!s3.is_abelian());
        let members = s3.subgroup_members(&[2]);
        assert_eq!(members.iter().filter(|&&m| m).count(), 3);
    }
}
