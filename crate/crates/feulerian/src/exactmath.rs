//! Exact rational scalars, Pochhammer machinery and truncated formal power
//! series.
//!
//! This is the numeric substrate for the whole crate: every coefficient,
//! parameter and evaluation is a [`Rational`], arithmetic is exact, and Gamma
//! functions never appear (every Gamma ratio is rewritten as a finite
//! Pochhammer product before it reaches code).

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational scalar.
///
/// `num_rational::BigRational` already maintains the two invariants we rely
/// on: values are stored in lowest terms and the denominator is positive.
pub type Rational = num_rational::BigRational;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d from integer literals.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p" with optional sign. This is the only accepted exact
/// input syntax; float literals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    t.parse::<Rational>()
        .map_err(|_| Error::Parse(t.to_string()))
}

/// Serializes as "p/q", or "p" when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// True iff `r` is an integer <= 0.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// For a non-positive integer `r`, the `k` with `r = -k`.
pub fn nonpositive_integer_negation(r: &Rational) -> Option<usize> {
    if is_nonpositive_integer(r) {
        let k = -r.to_integer();
        usize::try_from(u64::try_from(&k).ok()?).ok()
    } else {
        None
    }
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Integer binomial coefficient as a rational; zero when k > n.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
///
/// Computed by direct product; no factorial shortcuts, so negative rational
/// `a` and large `n` come out with the right sign.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..n {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Product of rising factorials over paired parameter/length vectors.
pub fn vector_pochhammer(f: &[Rational], m: &[usize]) -> Result<Rational> {
    if f.len() != m.len() {
        return Err(Error::LengthMismatch);
    }
    let mut acc = Rational::one();
    for (fi, &mi) in f.iter().zip(m.iter()) {
        acc *= pochhammer(fi, mi);
    }
    Ok(acc)
}

/// Evaluates a terminating generalized hypergeometric sum at unit argument:
/// `sum_{j=0}^{k} prod_i (top_i)_j / (prod_i (bottom_i)_j * j!)` where `-k`
/// is the minimal non-positive integer among the top parameters.
///
/// Errors if no top parameter terminates the series, or if a bottom
/// parameter hits zero before the terminating index.
pub fn terminating_hypergeometric(top: &[Rational], bottom: &[Rational]) -> Result<Rational> {
    let mut k_min: Option<usize> = None;
    for t in top {
        if let Some(k) = nonpositive_integer_negation(t) {
            k_min = Some(match k_min {
                Some(cur) => cur.min(k),
                None => k,
            });
        }
    }
    let k = k_min.ok_or(Error::Divergent)?;
    for b in bottom {
        if let Some(p) = nonpositive_integer_negation(b) {
            // (b)_j vanishes first at j = p + 1; fatal if that happens at or
            // before the terminating index.
            if p < k {
                return Err(Error::BottomPole(format_rational(b)));
            }
        }
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 0..k {
        let jr = rat(j as i64);
        for t in top {
            term *= t + &jr;
        }
        for b in bottom {
            term /= b + &jr;
        }
        term /= rat(j as i64 + 1);
        sum += &term;
    }
    Ok(sum)
}

/// Truncated formal power series over [`Rational`].
///
/// Coefficients are valid through `x^order`; `coeffs.len() == order + 1`
/// always. Any operation combining two series truncates to the smaller
/// order, so precision loss is explicit rather than silent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<Rational>,
}

impl FormalSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        FormalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Series with coefficient f(n) at x^n.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        FormalSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        FormalSeries::from_fn(ord, |n| self.coeff(n) + other.coeff(n))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        FormalSeries::from_fn(ord, |n| self.coeff(n) - other.coeff(n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalSeries::from_fn(self.order(), |n| self.coeff(n) * c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let mut out = vec![Rational::zero(); ord + 1];
        for i in 0..=ord {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(ord - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out[i + j] += prod;
            }
        }
        FormalSeries { coeffs: out }
    }

    /// True iff the two series agree coefficient-wise through `order`.
    pub fn agrees_through(&self, other: &Self, order: usize) -> bool {
        if order > self.order() || order > other.order() {
            return false;
        }
        (0..=order).all(|n| self.coeff(n) == other.coeff(n))
    }

    /// Substitutes x/(x-1) for the series variable, truncating at this
    /// series' order. Exact: x/(x-1) = -x * sum_k x^k.
    pub fn compose_x_over_x_minus_1(&self) -> Self {
        let ord = self.order();
        let mut u = FormalSeries::zero(ord);
        for n in 1..=ord {
            u.coeffs[n] = -Rational::one();
        }
        let mut acc = FormalSeries::zero(ord);
        acc.coeffs[0] = self.coeffs[0].clone();
        let mut upow = FormalSeries::one(ord);
        for k in 1..=ord {
            upow = upow.mul(&u);
            if !self.coeffs[k].is_zero() {
                acc = acc.add(&upow.scale(&self.coeffs[k]));
            }
        }
        acc
    }
}

/// Binomial series of (1-x)^{-s}: coefficient of x^n is (s)_n / n!.
pub fn binomial_series(s: &Rational, order: usize) -> FormalSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for n in 0..order {
        term *= s + rat(n as i64);
        term /= rat(n as i64 + 1);
        coeffs.push(term.clone());
    }
    FormalSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat(3), 0), rat(1));
        assert_eq!(pochhammer(&rat(1), 4), rat(24));
        assert_eq!(pochhammer(&ratio(1, 2), 3), ratio(15, 8));
    }

    #[test]
    fn pochhammer_recurrence() {
        for num in -6..=6i64 {
            let a = ratio(num, 5);
            for n in 0..8usize {
                let lhs = pochhammer(&a, n + 1);
                let rhs = pochhammer(&a, n) * (&a + rat(n as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn pochhammer_swap_identity() {
        // (f+n)_m / (f)_m = (f+m)_n / (f)_n for nonvanishing denominators.
        let fs = [ratio(3, 7), ratio(-5, 3), ratio(11, 10), ratio(1, 2)];
        for f in &fs {
            for n in 0..=8usize {
                for m in 0..=8usize {
                    let lhs_den = pochhammer(f, m);
                    let rhs_den = pochhammer(f, n);
                    assert!(!lhs_den.is_zero() && !rhs_den.is_zero());
                    let lhs = pochhammer(&(f + rat(n as i64)), m) / lhs_den;
                    let rhs = pochhammer(&(f + rat(m as i64)), n) / rhs_den;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn vector_pochhammer_basics() {
        assert_eq!(vector_pochhammer(&[], &[]).unwrap(), rat(1));
        assert_eq!(
            vector_pochhammer(&[rat(2), rat(3)], &[1, 1]).unwrap(),
            rat(6)
        );
        assert_eq!(
            vector_pochhammer(&[ratio(1, 2), rat(1)], &[2, 2]).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(
            vector_pochhammer(&[rat(2)], &[1, 1]),
            Err(Error::LengthMismatch)
        );
    }

    #[test]
    fn binomial_series_values() {
        let geo = binomial_series(&rat(1), 3);
        assert_eq!(geo.coeffs(), &[rat(1), rat(1), rat(1), rat(1)]);
        let d = binomial_series(&rat(2), 3);
        assert_eq!(d.coeffs(), &[rat(1), rat(2), rat(3), rat(4)]);
        let half = binomial_series(&ratio(1, 2), 2);
        assert_eq!(half.coeffs(), &[rat(1), ratio(1, 2), ratio(3, 8)]);
    }

    #[test]
    fn binomial_series_is_multiplicative() {
        let s1 = ratio(2, 3);
        let s2 = ratio(-7, 5);
        let lhs = binomial_series(&s1, 10).mul(&binomial_series(&s2, 10));
        let rhs = binomial_series(&(s1 + s2), 10);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn terminating_hypergeometric_values() {
        assert_eq!(
            terminating_hypergeometric(&[rat(0), rat(5), rat(7)], &[rat(2), rat(3)]).unwrap(),
            rat(1)
        );
        assert_eq!(
            terminating_hypergeometric(&[rat(-1), rat(2)], &[rat(1)]).unwrap(),
            rat(-1)
        );
        assert_eq!(
            terminating_hypergeometric(&[rat(2), rat(3)], &[rat(1)]),
            Err(Error::Divergent)
        );
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1(-k, a2+1+n2; a2+1) = (-n2)_k / (a2+1)_k
        for k in 0..=4usize {
            for n2 in 0..=4i64 {
                let a2 = ratio(1, 2);
                let top = [rat(-(k as i64)), &a2 + rat(1) + rat(n2)];
                let bottom = [&a2 + rat(1)];
                let lhs = terminating_hypergeometric(&top, &bottom).unwrap();
                let rhs = pochhammer(&rat(-n2), k) / pochhammer(&(&a2 + rat(1)), k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn terminating_sum_bottom_pole_detected() {
        // bottom hits zero at j=1 while the top terminates at k=2
        let r = terminating_hypergeometric(&[rat(-2), rat(5)], &[rat(0)]);
        assert!(matches!(r, Err(Error::BottomPole(_))));
        // pole beyond the terminating index is harmless
        let r = terminating_hypergeometric(&[rat(-2), rat(5)], &[rat(-4)]).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn series_compose_with_mobius_involution() {
        // substituting x/(x-1) twice is the identity
        let s = FormalSeries::from_fn(12, |n| ratio(n as i64 + 1, 3));
        let twice = s.compose_x_over_x_minus_1().compose_x_over_x_minus_1();
        assert_eq!(s, twice);
    }

    #[test]
    fn rational_roundtrip() {
        for s in ["3/4", "-11/10", "5", "0", "-7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }
}
