use std::fmt;

use crate::{Error, Result};

/// Permutation of `{0, …, degree-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse { position: 0, message: format!("{images:?} is not a permutation") });
            }
        }
        Ok(Self { images })
    }

    /// 1-based cycles, e.g. `&[&[1, 2, 3]]` for (1 2 3).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree || std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::Parse { position: 0, message: format!("bad point {p} in cycle {cycle:?}") });
                }
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`; `"()"` is the identity.
    /// Points are 1-based; the degree grows to the largest point if needed.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let flush = |number: &mut String, cur: &mut Option<Vec<usize>>, pos: usize| -> Result<()> {
            if !number.is_empty() {
                let p: usize = number.parse().map_err(|_| Error::Parse { position: pos, message: "bad point".into() })?;
                cur.as_mut()
                    .ok_or(Error::Parse { position: pos, message: "point outside a cycle".into() })?
                    .push(p);
                number.clear();
            }
            Ok(())
        };
        for (pos, c) in s.char_indices() {
            match c {
                '(' if current.is_none() => current = Some(Vec::new()),
                ')' => {
                    flush(&mut number, &mut current, pos)?;
                    let cyc = current.take().ok_or(Error::Parse { position: pos, message: "unmatched ')'".into() })?;
                    cycles.push(cyc);
                }
                c if c.is_ascii_digit() => number.push(c),
                ' ' | ',' => flush(&mut number, &mut current, pos)?,
                c if c.is_whitespace() => {}
                _ => return Err(Error::Parse { position: pos, message: format!("unexpected {c:?} in cycle notation") }),
            }
        }
        if current.is_some() {
            return Err(Error::Parse { position: s.len(), message: "unterminated cycle".into() });
        }
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0).max(degree);
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition as functions: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "permutations of different degree");
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    /// +1 for even permutations, −1 for odd ones.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}
