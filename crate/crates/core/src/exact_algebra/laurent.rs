use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::{Error, Result};

/// An element of ℚ[t, t⁻¹].
///
/// Stored densely as `coeffs[i]` = coefficient of `t^(low + i)`. The first
/// and last stored coefficients are always nonzero; the zero polynomial has
/// no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![c])
    }

    /// Builds `Σ coeffs[i] t^(low + i)`, trimming zeros on both ends.
    pub fn from_coeffs(low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Integer-coefficient shorthand, ascending from `t^low`.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `∏ (t - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(0, vec![-r.clone(), Rational::one()])
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of ℚ[t, t⁻¹] are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Difference between highest and lowest exponent; the Euclidean size
    /// used for division in ℚ[t, t⁻¹].
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Degree as an ordinary polynomial once the minimum exponent is shifted
    /// to zero. Alias of [`span`](Self::span).
    pub fn degree(&self) -> usize {
        self.span()
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        let i = exponent - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn trailing_coefficient(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from_integer((self.low + i as i64).into()))
            .collect();
        Self::from_coeffs(self.low - 1, coeffs)
    }

    /// Evaluates at a rational point. Panics when `x = 0` and the polynomial
    /// has negative exponents.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low >= 0 {
            acc * num_traits::pow(x.clone(), self.low as usize)
        } else {
            assert!(!x.is_zero(), "evaluating a Laurent polynomial with negative exponents at 0");
            acc / num_traits::pow(x.clone(), (-self.low) as usize)
        }
    }

    /// Unit normal form: minimum exponent 0, coprime integer coefficients and
    /// positive leading coefficient. Zero is returned unchanged.
    pub fn canonicalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let denom_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        let coeffs = ints.into_iter().map(|c| Rational::from_integer(c / &content * &sign)).collect();
        Self { low: 0, coeffs }
    }

    /// True when the polynomial equals its canonical form.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// `p(t^d)`.
    pub fn substitute_power(&self, d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::NonPositiveExponent(d));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let du = d as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * du + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * du] = c.clone();
        }
        Ok(Self { low: self.low * d, coeffs })
    }

    /// Euclidean division in ℚ[t, t⁻¹] with respect to [`span`](Self::span):
    /// returns `(q, r)` with `self = q·divisor + r` and either `r = 0` or
    /// `span(r) < span(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let n = divisor.coeffs.len();
        let lead_inv = divisor.coeffs[n - 1].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < n {
            return Ok((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - n + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + n - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &c * dc;
                rem[k + j] = v;
            }
            quot[k] = c;
        }
        rem.truncate(n - 1);
        Ok((
            Self::from_coeffs(self.low - divisor.low, quot),
            Self::from_coeffs(self.low, rem),
        ))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistent(format!("{divisor} does not divide {self}")))
        }
    }

    /// Canonical greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.canonicalize();
        }
        a.canonicalize()
    }

    /// Whether `other = self · r` for some Laurent polynomial `r`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Agreement up to a unit `c·t^k`.
    pub fn associated(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }
}

/// Free-function form of [`LaurentPolynomial::canonicalize`].
pub fn canonicalize(p: &LaurentPolynomial) -> LaurentPolynomial {
    p.canonicalize()
}

/// Free-function form of [`LaurentPolynomial::substitute_power`].
pub fn substitute_power(p: &LaurentPolynomial, d: i64) -> Result<LaurentPolynomial> {
    p.substitute_power(d)
}

/// Free-function form of [`LaurentPolynomial::divides`].
pub fn divides(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<bool> {
    p.divides(q)
}

impl Default for LaurentPolynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }
}

impl From<Rational> for LaurentPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPolynomial::from_coeffs(low, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl std::iter::Product for LaurentPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Descending exponents, explicit `*`, ASCII only: `t^2 - 3*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let var = match e {
                0 => None,
                1 => Some("t".to_string()),
                e => Some(format!("t^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Accepts the rendering grammar: signed terms `c*t^e`, `c*t`, `t^e`,
    /// `t`, `c` with `c` an integer or fraction and `e` a possibly negative
    /// integer. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let mut acc = Self::zero();
        let err = |p: usize, m: &str| Error::Parse {
            position: chars.get(p).map_or(s.len(), |c| c.0),
            message: m.to_string(),
        };
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let read_int = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].1.is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| chars[start..*pos].iter().map(|c| c.1).collect::<String>().parse().unwrap())
        };
        let mut first = true;
        while pos < chars.len() {
            let mut negative = false;
            match chars[pos].1 {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1
                }
                _ if first => {}
                _ => return Err(err(pos, "expected '+' or '-'")),
            }
            first = false;
            let mut coeff = Rational::one();
            let mut saw_coeff = false;
            if let Some(num) = read_int(&mut pos) {
                saw_coeff = true;
                coeff = Rational::from_integer(num);
                if pos < chars.len() && chars[pos].1 == '/' {
                    pos += 1;
                    let den = read_int(&mut pos).ok_or_else(|| err(pos, "expected denominator"))?;
                    if den.is_zero() {
                        return Err(err(pos, "zero denominator"));
                    }
                    coeff = Rational::new(coeff.to_integer(), den);
                }
                if pos < chars.len() && chars[pos].1 == '*' {
                    pos += 1;
                    if pos >= chars.len() || chars[pos].1 != 't' {
                        return Err(err(pos, "expected 't' after '*'"));
                    }
                }
            }
            let mut exponent = 0i64;
            if pos < chars.len() && chars[pos].1 == 't' {
                pos += 1;
                exponent = 1;
                if pos < chars.len() && chars[pos].1 == '^' {
                    pos += 1;
                    let mut neg_exp = false;
                    if pos < chars.len() && chars[pos].1 == '-' {
                        neg_exp = true;
                        pos += 1;
                    }
                    let e = read_int(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                    let e: i64 = e.try_into().map_err(|_| err(pos, "exponent too large"))?;
                    exponent = if neg_exp { -e } else { e };
                }
            } else if !saw_coeff {
                return Err(err(pos, "expected a term"));
            }
            if negative {
                coeff = -coeff;
            }
            acc = &acc + &Self::monomial(coeff, exponent);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(p("3*t^-1 - 9 + 3*t").canonicalize(), p("t^2 - 3*t + 1"));
        assert_eq!(p("t^2 - 3*t + 1").canonicalize(), p("t^2 - 3*t + 1"));
        assert_eq!(p("-2*t^5").canonicalize(), LaurentPolynomial::one());
        assert!(LaurentPolynomial::zero().canonicalize().is_zero());
        assert_eq!(p("1/2*t - 1/3").canonicalize(), p("3*t - 2"));
        assert_eq!(p("-t + 2").canonicalize(), p("t - 2"));
    }

    #[test]
    fn render_and_parse() {
        let q = p("t^2 - 3*t + 1");
        assert_eq!(q.to_string(), "t^2 - 3*t + 1");
        assert_eq!(p("-t^3 + 1/2*t^-1").to_string(), "-t^3 + 1/2*t^-1");
        assert_eq!(p("7").to_string(), "7");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(p("t - t").to_string(), "0");
        assert!("t^".parse::<LaurentPolynomial>().is_err());
        assert!("3 t 4".parse::<LaurentPolynomial>().is_err());
        assert!("".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p("t^2 - 3*t + 1").substitute_power(2).unwrap(), p("t^4 - 3*t^2 + 1"));
        assert_eq!(p("t^2 - 3*t + 1").substitute_power(1).unwrap(), p("t^2 - 3*t + 1"));
        assert_eq!(p("t - 1").substitute_power(3).unwrap(), p("t^3 - 1"));
        assert_eq!(p("t^-1 + 2").substitute_power(2).unwrap(), p("t^-2 + 2"));
        assert!(matches!(p("t").substitute_power(0), Err(Error::NonPositiveExponent(0))));
        assert!(p("t").substitute_power(-2).is_err());
    }

    #[test]
    fn divides_examples() {
        let fig8 = p("t^2 - 3*t + 1");
        let other = p("t^2 + 3*t + 1");
        assert!(fig8.divides(&(&fig8 * &other)).unwrap());
        assert!(!p("t - 1").divides(&p("t^2 + 1")).unwrap());
        assert!(fig8.divides(&LaurentPolynomial::zero()).unwrap());
        assert!(matches!(LaurentPolynomial::zero().divides(&fig8), Err(Error::ZeroPolynomial)));
        // units divide everything
        assert!(p("-3*t^-4").divides(&fig8).unwrap());
    }

    #[test]
    fn division_with_laurent_terms() {
        let a = p("t^-2 + 5*t^3 - t");
        let b = p("2*t^-1 - t");
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.is_zero() || r.span() < b.span());
    }

    #[test]
    fn gcd_is_canonical() {
        let a = &p("t - 1") * &p("t + 2");
        let b = &p("3*t - 3") * &p("t^2 + 1");
        assert_eq!(a.gcd(&b), p("t - 1"));
        assert_eq!(LaurentPolynomial::zero().gcd(&p("-2*t")), LaurentPolynomial::one());
    }

    #[test]
    fn eval_with_negative_exponents() {
        let q = p("t^-1 + t");
        assert_eq!(q.eval(&Rational::from_integer(2.into())), Rational::new(5.into(), 2.into()));
    }
}
