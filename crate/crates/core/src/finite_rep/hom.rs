use std::collections::VecDeque;

use super::FiniteGroup;
use crate::free_group::{FreeEndomorphism, FreeWord, Letter};
use crate::{Error, Result};

/// Homomorphism from the mapping torus group
/// `⟨x₁, …, xₙ, t | t xᵢ t⁻¹ = θ(xᵢ)⟩` to a finite permutation group,
/// recorded by the images of the generators as element indices.
#[derive(Clone, Debug)]
pub struct TorusHomomorphism {
    target: FiniteGroup,
    fiber_images: Vec<usize>,
    stable_image: usize,
}

impl TorusHomomorphism {
    /// Checks `f(t) f(xᵢ) f(t)⁻¹ = f(θ(xᵢ))` for every fiber generator.
    pub fn new(
        monodromy: &FreeEndomorphism,
        target: FiniteGroup,
        fiber_images: Vec<usize>,
        stable_image: usize,
    ) -> Result<Self> {
        if fiber_images.len() != monodromy.rank() {
            return Err(Error::RankMismatch { expected: monodromy.rank(), found: fiber_images.len() });
        }
        if let Some(&bad) = fiber_images.iter().chain([&stable_image]).find(|&&i| i >= target.order()) {
            return Err(Error::IllDefined(format!("element index {bad} out of range for a group of order {}", target.order())));
        }
        let f = Self { target, fiber_images, stable_image };
        f.check_relations(monodromy)?;
        Ok(f)
    }

    fn check_relations(&self, monodromy: &FreeEndomorphism) -> Result<()> {
        let g = &self.target;
        let t = self.stable_image;
        for (i, &x) in self.fiber_images.iter().enumerate() {
            let lhs = g.mul(g.mul(t, x), g.inverse(t));
            let rhs = self.eval_fiber(&monodromy.images()[i]);
            if lhs != rhs {
                return Err(Error::IllDefined(format!(
                    "f(t) f(x{}) f(t)^-1 = {} but f(theta(x{})) = {}",
                    i + 1,
                    g.element(lhs),
                    i + 1,
                    g.element(rhs)
                )));
            }
        }
        Ok(())
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn fiber_rank(&self) -> usize {
        self.fiber_images.len()
    }

    pub fn fiber_images(&self) -> &[usize] {
        &self.fiber_images
    }

    pub fn stable_image(&self) -> usize {
        self.stable_image
    }

    /// Image of a letter of the fiber group.
    pub fn eval_letter(&self, l: Letter) -> usize {
        let x = self.fiber_images[l.generator];
        if l.inverse {
            self.target.inverse(x)
        } else {
            x
        }
    }

    pub fn eval_fiber(&self, w: &FreeWord) -> usize {
        w.letters().iter().fold(0, |acc, &l| self.target.mul(acc, self.eval_letter(l)))
    }

    /// Evaluates a word over `x₁ … xₙ, t` with `t` at index `fiber_rank`.
    pub fn eval_torus(&self, w: &FreeWord) -> usize {
        let n = self.fiber_rank();
        w.letters().iter().fold(0, |acc, &l| {
            let x = if l.generator == n {
                if l.inverse {
                    self.target.inverse(self.stable_image)
                } else {
                    self.stable_image
                }
            } else {
                self.eval_letter(l)
            };
            self.target.mul(acc, x)
        })
    }

    /// Generator images in the order `x₁, …, xₙ, t`.
    pub fn generator_images(&self) -> Vec<usize> {
        self.fiber_images.iter().copied().chain([self.stable_image]).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.target.subgroup_members(&self.generator_images()).iter().all(|&m| m)
    }

    /// The same map with its target cut down to the image. A surjective map
    /// is returned unchanged, so element order follows the original target.
    pub fn restrict_to_image(&self, monodromy: &FreeEndomorphism) -> Result<Self> {
        if self.is_surjective() {
            return Ok(self.clone());
        }
        let gens = self.generator_images();
        let image = self.target.subgroup(&gens)?;
        // the image is enumerated with generators f(x₁), …, f(xₙ), f(t) in order
        let idx = |k: usize| image.index_of(self.target.element(gens[k])).expect("generator lies in image");
        let fiber = (0..self.fiber_rank()).map(idx).collect();
        let stable = idx(self.fiber_rank());
        Self::new(monodromy, image, fiber, stable)
    }

    /// Right Cayley table of the image on the generators `x₁ … xₙ, t`,
    /// with elements numbered breadth-first. Two homomorphisms have the same
    /// kernel exactly when their signatures agree.
    pub fn kernel_signature(&self) -> Vec<Vec<usize>> {
        let g = &self.target;
        let gens = self.generator_images();
        let mut label = vec![usize::MAX; g.order()];
        label[0] = 0;
        let mut order = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &x in &gens {
                let j = g.mul(i, x);
                if label[j] == usize::MAX {
                    label[j] = order.len();
                    order.push(j);
                    queue.push_back(j);
                }
            }
        }
        order.iter().map(|&i| gens.iter().map(|&x| label[g.mul(i, x)]).collect()).collect()
    }
}

/// Shortlex-minimal words over the fiber letters `x₁ < x₁⁻¹ < x₂ < …`
/// reaching each element of the fiber image `f(F)`, found breadth-first on
/// its Cayley graph.
#[derive(Clone, Debug)]
pub struct FiberCayley {
    /// `words[i]` for element index `i` of the target, `None` outside `f(F)`
    words: Vec<Option<FreeWord>>,
    /// elements of `f(F)` in discovery order
    order: Vec<usize>,
}

impl FiberCayley {
    pub fn new(f: &TorusHomomorphism) -> Self {
        let g = f.target();
        let mut words: Vec<Option<FreeWord>> = vec![None; g.order()];
        words[0] = Some(FreeWord::identity());
        let mut order = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let base = words[i].clone().unwrap();
            for l in Letter::alphabet(f.fiber_rank()) {
                let j = g.mul(i, f.eval_letter(l));
                if words[j].is_none() {
                    words[j] = Some(base.mul(&FreeWord::from_letter(l)));
                    order.push(j);
                    queue.push_back(j);
                }
            }
        }
        Self { words, order }
    }

    pub fn contains(&self, element: usize) -> bool {
        self.words[element].is_some()
    }

    pub fn word(&self, element: usize) -> Option<&FreeWord> {
        self.words[element].as_ref()
    }

    /// Elements of `f(F)` in shortlex order of their words.
    pub fn elements(&self) -> &[usize] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }
}

/// Smallest `d ≥ 1` with `f(t)^d ∈ f(F)`, and the shortlex-minimal fiber
/// word `w` with `f(w) = f(t)^(-d)`, so that `t^d w` lies in the kernel.
pub fn cover_degree(f: &TorusHomomorphism) -> (i64, FreeWord) {
    let g = f.target();
    let cayley = FiberCayley::new(f);
    let mut power = f.stable_image();
    let mut d = 1i64;
    while !cayley.contains(power) {
        power = g.mul(power, f.stable_image());
        d += 1;
    }
    let w = cayley.word(g.inverse(power)).expect("f(F) is a subgroup").clone();
    (d, w)
}

/// Every homomorphism from the mapping torus group to `target`, by
/// exhaustive search over generator images.
pub fn all_homomorphisms(monodromy: &FreeEndomorphism, target: &FiniteGroup) -> Vec<TorusHomomorphism> {
    let n = monodromy.rank();
    let order = target.order();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n + 1];
    loop {
        if let Ok(f) = TorusHomomorphism::new(monodromy, target.clone(), choice[..n].to_vec(), choice[n]) {
            out.push(f);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k > n {
                return out;
            }
            choice[k] += 1;
            if choice[k] < order {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Keeps the first homomorphism for each kernel.
pub fn distinct_kernels(homs: Vec<TorusHomomorphism>) -> Vec<TorusHomomorphism> {
    let mut seen = std::collections::HashSet::new();
    homs.into_iter().filter(|f| seen.insert(f.kernel_signature())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig8() -> FreeEndomorphism {
        FreeEndomorphism::parse(2, &["ab", "bab"], Some(&["aaB", "bA"])).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let s = if n == 1 { "()".to_string() } else { format!("({})", cyc.join(" ")) };
        FiniteGroup::from_cycle_strings(n, &[&s]).unwrap()
    }

    #[test]
    fn relation_check() {
        let z2 = cyclic(2);
        // figure-eight: f(a) = f(b) = 0 forced? f(a)=1,f(b)=0 gives f(θ(a)) = f(ab) = 1, fine;
        // f(θ(b)) = f(bab) = 1 ≠ f(b) = 0, so this is not a homomorphism
        assert!(matches!(TorusHomomorphism::new(&fig8(), z2.clone(), vec![1, 0], 0), Err(Error::IllDefined(_))));
        assert!(TorusHomomorphism::new(&fig8(), z2.clone(), vec![0, 0], 1).is_ok());
        assert!(TorusHomomorphism::new(&fig8(), z2, vec![0, 0, 0], 1).is_err());
    }

    #[test]
    fn cover_degree_examples() {
        let z2 = cyclic(2);
        let f = TorusHomomorphism::new(&fig8(), z2, vec![0, 0], 1).unwrap();
        assert_eq!(cover_degree(&f), (2, FreeWord::identity()));

        let z3 = cyclic(3);
        let f = TorusHomomorphism::new(&fig8(), z3.clone(), vec![0, 0], 1).unwrap();
        assert_eq!(cover_degree(&f), (3, FreeWord::identity()));
        let f = TorusHomomorphism::new(&fig8(), z3, vec![0, 0], 0).unwrap();
        assert_eq!(cover_degree(&f), (1, FreeWord::identity()));
    }

    #[test]
    fn cover_degree_witness_word() {
        // identity monodromy on F₂, Z/3 with f(a) = 1, f(b) = 0, f(t) = 1:
        // f(t) ∈ f(F), so d = 1 and w must satisfy f(w) = f(t)^-1
        let z3 = cyclic(3);
        let id = FreeEndomorphism::identity(2);
        let f = TorusHomomorphism::new(&id, z3.clone(), vec![1, 0], 1).unwrap();
        let (d, w) = cover_degree(&f);
        assert_eq!(d, 1);
        assert_eq!(w, FreeWord::parse("A", 2).unwrap());
        assert_eq!(f.eval_fiber(&w), z3.inverse(1));
    }

    #[test]
    fn restriction_to_image() {
        let z2 = cyclic(2);
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let f = TorusHomomorphism::new(&fig8(), s3, vec![0, 0], 1).unwrap();
        assert!(!f.is_surjective());
        let r = f.restrict_to_image(&fig8()).unwrap();
        assert_eq!(r.target().order(), 2);
        assert_eq!(r.kernel_signature(), f.kernel_signature());
        let g = TorusHomomorphism::new(&fig8(), z2, vec![0, 0], 1).unwrap();
        assert_eq!(g.kernel_signature(), f.kernel_signature());
    }

    #[test]
    fn exhaustive_search_finds_all() {
        let z2 = cyclic(2);
        let homs = all_homomorphisms(&FreeEndomorphism::identity(2), &z2);
        assert_eq!(homs.len(), 8);
        let homs = all_homomorphisms(&fig8(), &z2);
        // abelianization of the figure-eight group is Z, so f(a) = f(b) = 0
        assert_eq!(homs.len(), 2);
        // f(t) = 0 and f(t) = 1 have different kernels
        assert_eq!(distinct_kernels(homs).len(), 2);
        let z3 = cyclic(3);
        // identity on F₁ × ℤ: f(a), f(t) ∈ ℤ/3, 9 maps, kernels: trivial map plus 4 index-3 subgroups
        let homs = all_homomorphisms(&FreeEndomorphism::identity(1), &z3);
        assert_eq!(homs.len(), 9);
        assert_eq!(distinct_kernels(homs).len(), 5);
    }
}
