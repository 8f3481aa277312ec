use std::fmt;

use super::{LaurentPolynomial, Rational, RationalMatrix};
use crate::{Error, Result};

/// Dense row-major matrix over ℚ[t, t⁻¹].
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPolynomial>,
}

impl PolynomialMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPolynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![LaurentPolynomial::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPolynomial::one();
        }
        m
    }

    /// `m · c t^e` for a rational matrix `m`.
    pub fn from_rational(m: &RationalMatrix, c: &Rational, exponent: i64) -> Self {
        let entries = m.entries().iter().map(|x| LaurentPolynomial::monomial(x * c, exponent)).collect();
        Self { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn diagonal(diag: &[LaurentPolynomial]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[LaurentPolynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPolynomial::is_zero)
    }

    /// Adds `block` into the submatrix whose top-left corner is `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &PolynomialMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let b = &block[(i, j)];
                if !b.is_zero() {
                    let cur = &self[(r0 + i, c0 + j)] + b;
                    self[(r0 + i, c0 + j)] = cur;
                }
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self[(i, j)].clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.entries.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.rows {
                self.entries.swap(k * self.cols + i, k * self.cols + j);
            }
        }
    }

    /// `row[target] += f · row[source]`
    fn add_row_multiple(&mut self, target: usize, source: usize, f: &LaurentPolynomial) {
        for k in 0..self.cols {
            let s = &self[(source, k)];
            if !s.is_zero() {
                let v = &self[(target, k)] + &(f * s);
                self[(target, k)] = v;
            }
        }
    }

    /// `col[target] += f · col[source]`
    fn add_col_multiple(&mut self, target: usize, source: usize, f: &LaurentPolynomial) {
        for k in 0..self.rows {
            let s = &self[(k, source)];
            if !s.is_zero() {
                let v = &self[(k, target)] + &(s * f);
                self[(k, target)] = v;
            }
        }
    }

    fn scale_row(&mut self, i: usize, u: &LaurentPolynomial) {
        for k in 0..self.cols {
            let v = &self[(i, k)] * u;
            self[(i, k)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact
    /// division in ℚ[t, t⁻¹].
    pub fn determinant(&self) -> Result<LaurentPolynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPolynomial::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = LaurentPolynomial::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return Ok(LaurentPolynomial::zero());
                };
                a.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(i, j)] * &a[(k, k)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = num.exact_div(&prev)?;
                }
                a[(i, k)] = LaurentPolynomial::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }

    /// Position of the nonzero entry of least span in the trailing block
    /// starting at `(s, s)`, ties broken by smallest `(row, col)`.
    fn min_span_pivot(&self, s: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, (usize, usize))> = None;
        for i in s..self.rows {
            for j in s..self.cols {
                let e = &self[(i, j)];
                if e.is_zero() {
                    continue;
                }
                if best.is_none_or(|(span, _)| e.span() < span) {
                    best = Some((e.span(), (i, j)));
                }
            }
        }
        best.map(|(_, pos)| pos)
    }

    /// Diagonal of the Smith normal form over the Euclidean ring
    /// ℚ[t, t⁻¹]: canonical invariant factors `p₁ | p₂ | …`, followed by
    /// zeros for the rank deficiency. Length is `min(rows, cols)`.
    pub fn smith_normal_form(&self) -> Vec<LaurentPolynomial> {
        let mut a = self.clone();
        let n = self.rows.min(self.cols);
        let mut diag = Vec::with_capacity(n);
        for s in 0..n {
            let mut done = false;
            while !done {
                let Some((pi, pj)) = a.min_span_pivot(s) else {
                    diag.resize(n, LaurentPolynomial::zero());
                    return diag;
                };
                a.swap_rows(s, pi);
                a.swap_cols(s, pj);
                let piv = a[(s, s)].clone();
                let unit = LaurentPolynomial::monomial(
                    piv.leading_coefficient().unwrap().recip(),
                    -piv.low_degree(),
                );
                a.scale_row(s, &unit);
                let piv = a[(s, s)].clone();

                let mut clean = true;
                for i in s + 1..a.rows {
                    if a[(i, s)].is_zero() {
                        continue;
                    }
                    let (q, r) = a[(i, s)].div_rem(&piv).expect("pivot is nonzero");
                    a.add_row_multiple(i, s, &-&q);
                    clean &= r.is_zero();
                }
                for j in s + 1..a.cols {
                    if a[(s, j)].is_zero() {
                        continue;
                    }
                    let (q, r) = a[(s, j)].div_rem(&piv).expect("pivot is nonzero");
                    a.add_col_multiple(j, s, &-&q);
                    clean &= r.is_zero();
                }
                if !clean {
                    continue;
                }
                // the pivot must divide the whole trailing block
                let offender = (s + 1..a.rows).find(|&i| {
                    (s + 1..a.cols).any(|j| !a[(i, j)].div_rem(&piv).expect("nonzero").1.is_zero())
                });
                match offender {
                    Some(i) => a.add_row_multiple(s, i, &LaurentPolynomial::one()),
                    None => done = true,
                }
            }
            diag.push(a[(s, s)].canonicalize());
        }
        diag
    }

    /// Presentation matrix of `ker(outgoing) / im(incoming)` for a chain
    /// complex of row vectors `C_{i+1} --incoming--> C_i --outgoing--> C_{i-1}`
    /// (maps act by right multiplication, so `incoming · outgoing = 0`).
    ///
    /// The rows of the result are relations among a basis of the kernel;
    /// its cokernel is the homology module.
    pub fn homology_presentation(incoming: &Self, outgoing: &Self) -> Result<Self> {
        if incoming.cols != outgoing.rows {
            return Err(Error::DimensionMismatch("incoming and outgoing maps do not compose".into()));
        }
        // Unimodular row operations U bring `outgoing` to echelon form; the
        // rows of U below the rank span its left kernel. `incoming` is
        // carried along as incoming · U⁻¹ by the inverse column operations.
        let mut d = outgoing.clone();
        let mut j = incoming.clone();
        let mut rank = 0;
        for c in 0..d.cols {
            if rank == d.rows {
                break;
            }
            loop {
                let pivot = (rank..d.rows)
                    .filter(|&r| !d[(r, c)].is_zero())
                    .min_by_key(|&r| (d[(r, c)].span(), r));
                let Some(p) = pivot else { break };
                d.swap_rows(rank, p);
                j.swap_cols(rank, p);
                let piv = d[(rank, c)].clone();
                let mut clean = true;
                for r in rank + 1..d.rows {
                    if d[(r, c)].is_zero() {
                        continue;
                    }
                    let (q, rem) = d[(r, c)].div_rem(&piv)?;
                    // row_r -= q row_rank  <=>  col_rank += q col_r on the left factor
                    d.add_row_multiple(r, rank, &-&q);
                    j.add_col_multiple(rank, r, &q);
                    clean &= rem.is_zero();
                }
                if clean {
                    rank += 1;
                    break;
                }
            }
        }
        for r in 0..j.rows {
            for c in 0..rank {
                if !j[(r, c)].is_zero() {
                    return Err(Error::Inconsistent("boundary maps do not compose to zero".into()));
                }
            }
        }
        let rows: Vec<usize> = (0..j.rows).collect();
        let cols: Vec<usize> = (rank..j.cols).collect();
        Ok(j.submatrix(&rows, &cols))
    }
}

/// Free-function form of [`PolynomialMatrix::smith_normal_form`].
pub fn smith_normal_form(m: &PolynomialMatrix) -> Vec<LaurentPolynomial> {
    m.smith_normal_form()
}

impl std::ops::Index<(usize, usize)> for PolynomialMatrix {
    type Output = LaurentPolynomial;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPolynomial {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolynomialMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPolynomial {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for PolynomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
