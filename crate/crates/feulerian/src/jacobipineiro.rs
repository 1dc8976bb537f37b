//! Type II Jacobi-Pineiro polynomials built purely from their terminating
//! hypergeometric form, with zero location and interlacing decided by Sturm
//! counts rather than orthogonality. Also carries the connection formulas
//! expressing d-Narayana polynomials as particular Jacobi-Pineiro instances.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    factorial, is_integer, pochhammer, rat, terminating_hypergeometric, Rational,
};
use crate::feulerian::{hatw_direct, EulerianSpec};
use crate::millerparis::{
    bernstein_expansion, first_mp_char_poly, monomial_expansion, pochhammer_block_poly,
};
use crate::narayana::{narayana_sulanke, r_poly, NarayanaParams};
use crate::polyalgebra::{interlace_check, sturm_zone_counts, Poly, ZoneCounts};

/// Weight parameters (alpha_1..alpha_r, beta) and multi-index n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JPParams {
    pub alpha: Vec<Rational>,
    pub beta: Rational,
    pub n_vec: Vec<usize>,
}

impl JPParams {
    pub fn new(alpha: Vec<Rational>, beta: Rational, n_vec: Vec<usize>) -> Result<Self> {
        if alpha.len() != n_vec.len() {
            return Err(Error::LengthMismatch);
        }
        let p = JPParams { alpha, beta, n_vec };
        if p.prefactor_denominator().is_zero() {
            return Err(Error::InvalidSpec(
                "(n + alpha + beta + 1)_n vanishes".into(),
            ));
        }
        Ok(p)
    }

    /// Total degree n.
    pub fn n(&self) -> usize {
        self.n_vec.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.alpha.len()
    }

    /// (n + alpha + beta + 1)_n as a product over components.
    fn prefactor_denominator(&self) -> Rational {
        let n = rat(self.n() as i64);
        self.alpha
            .iter()
            .zip(self.n_vec.iter())
            .map(|(a, &ni)| pochhammer(&(&n + a + &self.beta + Rational::one()), ni))
            .product()
    }

    /// (-1)^n (alpha + 1)_n / (n + alpha + beta + 1)_n.
    pub fn prefactor(&self) -> Rational {
        let mut num: Rational = self
            .alpha
            .iter()
            .zip(self.n_vec.iter())
            .map(|(a, &ni)| pochhammer(&(a + Rational::one()), ni))
            .product();
        if self.n() % 2 == 1 {
            num = -num;
        }
        num / self.prefactor_denominator()
    }

    /// The orthogonality regime: alpha_i > -1, beta > -1, pairwise
    /// alpha-differences non-integer. Non-canonical parameters are allowed
    /// everywhere; this is a flag, not a validity condition.
    pub fn canonical(&self) -> bool {
        let neg_one = -Rational::one();
        if self.beta <= neg_one {
            return false;
        }
        if self.alpha.iter().any(|a| a <= &neg_one) {
            return false;
        }
        for i in 0..self.alpha.len() {
            for j in (i + 1)..self.alpha.len() {
                if is_integer(&(&self.alpha[i] - &self.alpha[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// The generating f-Eulerian data: weight a = -n - beta over blocks
    /// (alpha_i + 1, n_i), skipping empty components.
    pub fn spec(&self) -> Result<EulerianSpec> {
        let a = -rat(self.n() as i64) - &self.beta;
        let blocks: Vec<(Rational, usize)> = self
            .alpha
            .iter()
            .zip(self.n_vec.iter())
            .filter(|(_, &ni)| ni > 0)
            .map(|(al, &ni)| (al + Rational::one(), ni))
            .collect();
        EulerianSpec::new(a, blocks)
    }

    /// Expanded multiset of block points alpha_i + 1, ..., alpha_i + n_i.
    fn expanded_points(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for (a, &ni) in self.alpha.iter().zip(self.n_vec.iter()) {
            for l in 1..=ni {
                out.push(a + rat(l as i64));
            }
        }
        out.sort();
        out
    }
}

/// The degree-n polynomial P_n^{(alpha, beta)} via the f-Eulerian
/// identification: prefactor times the numerator polynomial of the
/// generating series with weight a = -n - beta.
pub fn jp_polynomial(params: &JPParams) -> Result<Poly> {
    let hatw = hatw_direct(&params.spec()?)?;
    let p = hatw.scale(&params.prefactor());
    if p.degree() != Some(params.n()) {
        return Err(Error::InvalidSpec(format!(
            "degree {} instead of n = {}",
            p.degree().map_or(-1i64, |d| d as i64),
            params.n()
        )));
    }
    Ok(p)
}

/// Expected zero pattern for the parameter regime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JpVerdict {
    /// alpha_i > -1, beta > -1: all n zeros in (0,1). Carries whether the
    /// counts confirm it.
    Confined(bool),
    /// alpha_i > -1, -2 < beta <= -1: n-1 zeros in (0,1), one in [1, inf),
    /// exactly at 1 when beta = -1.
    OneEscape(bool),
    /// Parameters outside both regimes; counts only.
    NotApplicable,
}

impl JpVerdict {
    /// False only when a stated regime fails its confirmation.
    pub fn consistent(&self) -> bool {
        !matches!(
            self,
            JpVerdict::Confined(false) | JpVerdict::OneEscape(false)
        )
    }
}

/// Sturm zone counts of the polynomial plus the regime verdict.
pub fn jp_zero_location(params: &JPParams) -> Result<(ZoneCounts, JpVerdict)> {
    let n = params.n();
    let p = jp_polynomial(params)?;
    if n == 0 {
        return Ok((ZoneCounts::default(), JpVerdict::NotApplicable));
    }
    let zc = sturm_zone_counts(&p)?;
    let neg_one = -Rational::one();
    let neg_two = rat(-2);
    let alphas_fine = params.alpha.iter().all(|a| a > &neg_one);
    let verdict = if alphas_fine && params.beta > neg_one {
        JpVerdict::Confined(zc.nonreal == 0 && zc.in_01 == n)
    } else if alphas_fine && neg_two < params.beta && params.beta <= neg_one {
        let mut ok = zc.nonreal == 0 && zc.in_01 == n - 1 && zc.at_one + zc.gt_one == 1;
        if params.beta == neg_one {
            ok = ok && zc.at_one == 1;
        }
        JpVerdict::OneEscape(ok)
    } else {
        JpVerdict::NotApplicable
    };
    Ok((zc, verdict))
}

/// Interlacing of two nested polynomials: requires total degrees differing
/// by one, equal beta, and the expanded block points of the smaller nested
/// inside the larger (the containment under which the interlacing statement
/// holds).
pub fn jp_interlacing_check(p1: &JPParams, p2: &JPParams) -> Result<bool> {
    if p1.n() != p2.n() + 1 {
        return Err(Error::Precondition("need n(p1) = n(p2) + 1".into()));
    }
    if p1.beta != p2.beta {
        return Err(Error::Precondition("beta must agree".into()));
    }
    let mut big_pool = p1.expanded_points();
    let mut missing = p2.expanded_points();
    missing.retain(|x| {
        if let Some(i) = big_pool.iter().position(|y| y == x) {
            big_pool.remove(i);
            false
        } else {
            true
        }
    });
    if !missing.is_empty() {
        return Err(Error::Precondition(
            "expanded points of p2 not contained in p1".into(),
        ));
    }
    let a = jp_polynomial(p1)?;
    let b = jp_polynomial(p2)?;
    if b.degree() == Some(0) {
        return Ok(true);
    }
    interlace_check(&a, &b)
}

/// Monomial expansion through the pivot reduction; must equal
/// [`jp_polynomial`].
pub fn jp_monomial_expansion(params: &JPParams, pivot: usize) -> Result<Poly> {
    let spec = params.spec()?;
    Ok(monomial_expansion(&spec, pivot)?.scale(&params.prefactor()))
}

/// Bernstein coefficients (prefactor included); reconstruction equals
/// [`jp_polynomial`].
pub fn jp_bernstein_expansion(params: &JPParams, pivot: usize) -> Result<Vec<Rational>> {
    let spec = params.spec()?;
    let pre = params.prefactor();
    Ok(bernstein_expansion(&spec, pivot)?
        .into_iter()
        .map(|c| c * &pre)
        .collect())
}

/// The two closed forms of the two-weight reduction polynomial, equal as
/// polynomials in t, verified by exact evaluation at t = 0..n2.
///
/// Pre-transformation form:
/// (a2+1)_{n2} (a1+1+n1+beta+t)_{n2} / (a1+1+n1+beta)_{n2} *
/// 3F2(-n2, -t, -n-beta; -a1-n-beta-t, a2+1).
///
/// Post-transformation form:
/// (-1)^{n2} (a2+1)_{n2} (a2+1-a1)_{n2} / (a1+1+n1+beta)_{n2} *
/// 3F2(-n2, a2+1+t, n+a2+beta+1; a2+1, a2+1-a1).
pub fn rhat_two_weights_check(
    alpha: (&Rational, &Rational),
    beta: &Rational,
    n_vec: (usize, usize),
) -> Result<bool> {
    let (a1, a2) = alpha;
    let (n1, n2) = n_vec;
    let n = n1 + n2;
    let one = Rational::one();
    let base = a1 + &one + rat(n1 as i64) + beta;
    let denom = pochhammer(&base, n2);
    if denom.is_zero() {
        return Err(Error::BottomPole("(alpha1+1+n1+beta)_{n2}".into()));
    }
    let nb = rat(n as i64) + beta;
    for t in 0..=n2 {
        let tr = rat(t as i64);
        let form_a = {
            let hyper = terminating_hypergeometric(
                &[rat(-(n2 as i64)), -&tr, -&nb],
                &[-a1 - &nb - &tr, a2 + &one],
            )?;
            pochhammer(&(a2 + &one), n2) * pochhammer(&(&base + &tr), n2) / &denom * hyper
        };
        let form_b = {
            let hyper = terminating_hypergeometric(
                &[rat(-(n2 as i64)), a2 + &one + &tr, &nb + a2 + &one],
                &[a2 + &one, a2 + &one - a1],
            )?;
            let mut pre =
                pochhammer(&(a2 + &one), n2) * pochhammer(&(a2 + &one - a1), n2) / &denom;
            if n2 % 2 == 1 {
                pre = -pre;
            }
            pre * hyper
        };
        if form_a != form_b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three connection shapes expressing N_{d,m} as a Jacobi-Pineiro
/// polynomial with beta independent of m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NarayanaJpVariant {
    /// beta = 1 - d through the K-basis characteristic polynomial.
    Beta1MinusD,
    /// beta = d - 1 through the M-basis characteristic polynomial.
    BetaDMinus1,
    /// beta = d - 2 through the degree-dropped polynomial (one fewer
    /// weight).
    BetaDMinus2,
}

/// Connection-formula report: the characteristic polynomial encoding the
/// extra weights, its zero structure, the materialized parameters when the
/// roots are rational, and the exact identity verdicts.
#[derive(Clone, Debug)]
pub struct NarayanaJpReport {
    pub variant: NarayanaJpVariant,
    pub beta: Rational,
    pub char_poly: Poly,
    pub char_zones: Option<ZoneCounts>,
    /// Full alpha vector when char_poly(-t) splits rationally at its
    /// nominal degree; None otherwise (the identity is checked either way).
    pub alpha: Option<Vec<Rational>>,
    pub n_vec: Option<Vec<usize>>,
    /// The weighted polynomial identity behind the connection.
    pub identity_holds: bool,
    /// Cross-check through [`jp_polynomial`] when alpha materialized.
    pub jp_cross_check: Option<bool>,
}

/// Rational roots of p with multiplicity, when p factors completely over
/// the rationals; None otherwise. Divisor search over the primitive ends,
/// adequate at desk scale.
pub fn rational_roots_complete(p: &Poly) -> Option<Vec<Rational>> {
    let mut work = p.clone();
    let mut roots = Vec::new();
    let zero = Rational::zero();
    loop {
        match work.degree() {
            None => return None,
            Some(0) => break,
            Some(_) => {}
        }
        let (mult, rest) = work.root_multiplicity(&zero);
        if mult > 0 {
            for _ in 0..mult {
                roots.push(zero.clone());
            }
            work = rest;
            continue;
        }
        let (constant, lead) = integer_content_ends(&work);
        let mut found = None;
        'search: for num in divisors_of(&constant) {
            for den in divisors_of(&lead) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(&num * BigInt::from(sign), den.clone());
                    if work.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let root = found?;
        let (mult, rest) = work.root_multiplicity(&root);
        for _ in 0..mult {
            roots.push(root.clone());
        }
        work = rest;
    }
    roots.sort();
    Some(roots)
}

/// (|lowest nonzero coefficient|, |leading coefficient|) of the primitive
/// integer form, the ends the rational-root candidates divide.
fn integer_content_ends(p: &Poly) -> (BigInt, BigInt) {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let lead = ints.last().expect("nonzero").clone();
    let constant = ints
        .iter()
        .find(|v| !v.is_zero())
        .expect("nonzero polynomial")
        .clone();
    (constant.abs(), lead.abs())
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    // trial division; the candidates here come from desk-scale
    // characteristic polynomials so magnitudes stay modest
    let mut divs = vec![BigInt::one()];
    let mut rest = n.abs();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= rest && p <= limit {
        if (&rest % &p).is_zero() {
            let mut power = BigInt::one();
            let mut extended = Vec::new();
            while (&rest % &p).is_zero() {
                rest /= &p;
                power *= &p;
                for d in &divs {
                    extended.push(d * &power);
                }
            }
            divs.extend(extended);
        }
        p += 1;
    }
    if rest > BigInt::one() {
        let extended: Vec<BigInt> = divs.iter().map(|d| d * &rest).collect();
        divs.extend(extended);
    }
    divs.sort();
    divs.dedup();
    divs
}

/// Builds the variant data and verifies the underlying weighted polynomial
/// identity exactly, without materializing any roots. When the
/// characteristic polynomial factors rationally at its nominal degree, the
/// Jacobi-Pineiro parameters are also returned and cross-checked through
/// [`jp_polynomial`].
pub fn narayana_as_jp(d: usize, m: usize, variant: NarayanaJpVariant) -> Result<NarayanaJpReport> {
    let p = NarayanaParams::new(d, m)?;
    if d > 5 || m > 5 {
        return Err(Error::BudgetExceeded(format!(
            "d={d}, m={m} beyond the 5x5 desk scale"
        )));
    }
    let (k_deg, m_big, l_deg) = (p.k_deg(), p.m_big(), p.l_deg());
    let n_poly = narayana_sulanke(d, m)?;
    // (1-y)^K N(y/(y-1))
    let reflected = n_poly.mobius_reflect(k_deg);
    let one = Rational::one();

    let h_blocks = || -> (Vec<Rational>, Vec<usize>) {
        ((3..=d as i64).map(rat).collect(), vec![m - 1; d - 2])
    };
    let one_minus_y_pow = |e: usize| -> Poly {
        Poly::from_coeffs(vec![one.clone(), -one.clone()]).pow(e)
    };

    let (beta, char_poly, weight_count, identity_holds) = match variant {
        NarayanaJpVariant::Beta1MinusD => {
            let q = if l_deg == 0 {
                Poly::one()
            } else {
                let (nu, ov) = h_blocks();
                first_mp_char_poly(&rat(m as i64 + 1), &rat(2), &nu, &ov)?
            };
            // (1-y)^K N(y/(y-1)) = sum_k (-K)_k (m+d)_k Q(k) y^k / ((2)_k k!)
            let rhs = Poly::from_coeffs(
                (0..=k_deg)
                    .map(|k| {
                        pochhammer(&rat(-(k_deg as i64)), k)
                            * pochhammer(&rat((m + d) as i64), k)
                            * q.eval(&rat(k as i64))
                            / (pochhammer(&rat(2), k) * factorial(k))
                    })
                    .collect(),
            );
            (rat(1 - d as i64), q, l_deg, reflected == rhs)
        }
        NarayanaJpVariant::BetaDMinus1 => {
            let q = if l_deg == 0 {
                Poly::one()
            } else {
                let (nu, ov) = h_blocks();
                first_mp_char_poly(&rat((m + d) as i64), &rat(2), &nu, &ov)?
            };
            // sum_n F'(n) (-M)_n / n! y^n = (1-y)^{d-1} (1-y)^K N(y/(y-1))
            // with F'(t) = (2+t)_{m-1} Q(t) / (2)_{m-1}
            let fprime = pochhammer_block_poly(&[rat(2)], &[m - 1]).mul(&q);
            let lhs = Poly::from_coeffs(
                (0..=m_big)
                    .map(|k| {
                        fprime.eval(&rat(k as i64)) * pochhammer(&rat(-(m_big as i64)), k)
                            / factorial(k)
                    })
                    .collect(),
            );
            let ok = lhs == one_minus_y_pow(d - 1).mul(&reflected);
            (rat(d as i64 - 1), q, l_deg, ok)
        }
        NarayanaJpVariant::BetaDMinus2 => {
            let r = r_poly(d, m)?;
            // sum_k (1-M)_k (m+2)_k R(k) y^k / ((2)_k k!) =
            // (1-y)^{d-2} (1-y)^K N(y/(y-1))
            let lhs = Poly::from_coeffs(
                (0..m_big.max(1))
                    .map(|k| {
                        pochhammer(&rat(1 - m_big as i64), k)
                            * pochhammer(&rat(m as i64 + 2), k)
                            * r.eval(&rat(k as i64))
                            / (pochhammer(&rat(2), k) * factorial(k))
                    })
                    .collect(),
            );
            let ok = lhs == one_minus_y_pow(d - 2).mul(&reflected);
            let weights = if d == 2 { 0 } else { l_deg - 1 };
            (rat(d as i64 - 2), r, weights, ok)
        }
    };

    let char_zones = if char_poly.degree().unwrap_or(0) > 0 {
        Some(sturm_zone_counts(&char_poly)?)
    } else {
        None
    };

    let (alpha, n_vec, jp_cross_check) = materialize_jp_data(
        d, m, variant, &beta, &char_poly, weight_count, &n_poly, k_deg, m_big,
    );

    Ok(NarayanaJpReport {
        variant,
        beta,
        char_poly,
        char_zones,
        alpha,
        n_vec,
        identity_holds,
        jp_cross_check,
    })
}

#[allow(clippy::too_many_arguments)]
fn materialize_jp_data(
    d: usize,
    m: usize,
    variant: NarayanaJpVariant,
    beta: &Rational,
    char_poly: &Poly,
    weight_count: usize,
    n_poly: &Poly,
    k_deg: usize,
    m_big: usize,
) -> (Option<Vec<Rational>>, Option<Vec<usize>>, Option<bool>) {
    if variant == NarayanaJpVariant::BetaDMinus2 && d == 2 {
        // the degree-dropped display does not define a consistent weight
        // system in two dimensions
        return (None, None, None);
    }
    if char_poly.degree() != Some(weight_count) {
        return (None, None, None);
    }
    let Some(roots) = rational_roots_complete(char_poly) else {
        return (None, None, None);
    };
    let (mut alpha, mut n_vec) = match variant {
        NarayanaJpVariant::Beta1MinusD => (vec![Rational::one()], vec![m + d - 2]),
        NarayanaJpVariant::BetaDMinus1 => (vec![Rational::one()], vec![m - 1]),
        NarayanaJpVariant::BetaDMinus2 => (vec![Rational::one()], vec![m]),
    };
    for r in &roots {
        // roots of char_poly(-t) are the negated roots of char_poly
        alpha.push(-r - Rational::one());
        n_vec.push(1);
    }
    let cross = (|| -> Result<bool> {
        let params = JPParams::new(alpha.clone(), beta.clone(), n_vec.clone())?;
        let jp = jp_polynomial(&params)?;
        let power = match variant {
            NarayanaJpVariant::Beta1MinusD => m_big,
            _ => k_deg,
        };
        let expected = n_poly.mobius_reflect(power).scale(&params.prefactor());
        Ok(jp == expected)
    })();
    (Some(alpha), Some(n_vec), cross.ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn legendre_like_values() {
        let p = JPParams::new(vec![rat(0)], rat(0), vec![1]).unwrap();
        assert_eq!(
            jp_polynomial(&p).unwrap(),
            Poly::from_coeffs(vec![ratio(-1, 2), rat(1)])
        );
        let p0 = JPParams::new(vec![rat(0)], rat(0), vec![0]).unwrap();
        assert_eq!(jp_polynomial(&p0).unwrap(), Poly::one());
    }

    #[test]
    fn two_weight_polynomial_confined() {
        let p = JPParams::new(vec![rat(0), ratio(1, 2)], rat(0), vec![1, 1]).unwrap();
        let (zc, verdict) = jp_zero_location(&p).unwrap();
        assert_eq!(zc.in_01, 2);
        assert_eq!(verdict, JpVerdict::Confined(true));
        assert!(p.canonical());
    }

    #[test]
    fn canonical_flags() {
        let p = JPParams::new(vec![rat(0), rat(1)], rat(0), vec![1, 1]).unwrap();
        assert!(!p.canonical()); // integer difference
        let p = JPParams::new(vec![rat(0)], rat(-2), vec![2]).unwrap();
        assert!(!p.canonical());
    }

    #[test]
    fn zero_location_regimes() {
        for n in 1..=3usize {
            let p = JPParams::new(vec![rat(0)], rat(0), vec![n]).unwrap();
            let (zc, verdict) = jp_zero_location(&p).unwrap();
            assert_eq!(zc.in_01, n);
            assert!(matches!(verdict, JpVerdict::Confined(true)));
        }
        // -2 < beta < -1: one zero escapes beyond 1
        let p = JPParams::new(vec![rat(0), ratio(1, 2)], ratio(-3, 2), vec![1, 1]).unwrap();
        let (zc, verdict) = jp_zero_location(&p).unwrap();
        assert_eq!(verdict, JpVerdict::OneEscape(true));
        assert_eq!(zc.in_01, 1);
        assert_eq!(zc.at_one + zc.gt_one, 1);
        // beta = -1 exactly: the escaped zero sits at 1
        let p = JPParams::new(vec![rat(0)], rat(-1), vec![2]).unwrap();
        let (zc, verdict) = jp_zero_location(&p).unwrap();
        assert_eq!(verdict, JpVerdict::OneEscape(true));
        assert_eq!(zc.at_one, 1);
    }

    #[test]
    fn interlacing_nested() {
        let big = JPParams::new(vec![rat(0)], rat(0), vec![2]).unwrap();
        let small = JPParams::new(vec![rat(0)], rat(0), vec![1]).unwrap();
        assert!(jp_interlacing_check(&big, &small).unwrap());
        let big = JPParams::new(vec![rat(0), ratio(1, 2)], rat(0), vec![1, 1]).unwrap();
        let small = JPParams::new(vec![rat(0)], rat(0), vec![1]).unwrap();
        assert!(jp_interlacing_check(&big, &small).unwrap());
        // degenerate: n = 1 vs n = 0
        let big = JPParams::new(vec![rat(0)], rat(0), vec![1]).unwrap();
        let small = JPParams::new(vec![rat(0)], rat(0), vec![0]).unwrap();
        assert!(jp_interlacing_check(&big, &small).unwrap());
        // containment violated
        let big = JPParams::new(vec![rat(0)], rat(0), vec![2]).unwrap();
        let small = JPParams::new(vec![ratio(1, 3)], rat(0), vec![1]).unwrap();
        assert!(jp_interlacing_check(&big, &small).is_err());
    }

    #[test]
    fn monomial_and_bernstein_cross_route() {
        let p = JPParams::new(vec![rat(0), ratio(1, 2)], ratio(1, 3), vec![2, 1]).unwrap();
        let direct = jp_polynomial(&p).unwrap();
        assert_eq!(jp_monomial_expansion(&p, 0).unwrap(), direct);
        let c = jp_bernstein_expansion(&p, 0).unwrap();
        assert_eq!(crate::millerparis::bernstein_reconstruct(&c), direct);
        // pivot independence at equal block sizes
        let p = JPParams::new(vec![rat(0), ratio(1, 2)], ratio(1, 3), vec![1, 1]).unwrap();
        assert_eq!(
            jp_monomial_expansion(&p, 0).unwrap(),
            jp_monomial_expansion(&p, 1).unwrap()
        );
        // r = 1 reduces to the direct sum
        let p = JPParams::new(vec![ratio(1, 4)], ratio(1, 5), vec![3]).unwrap();
        assert_eq!(
            jp_monomial_expansion(&p, 0).unwrap(),
            jp_polynomial(&p).unwrap()
        );
        // n = 0: constant prefactor
        let p = JPParams::new(vec![rat(0)], rat(0), vec![0]).unwrap();
        assert_eq!(jp_polynomial(&p).unwrap(), Poly::one());
    }

    #[test]
    fn rhat_two_forms_agree() {
        assert!(rhat_two_weights_check((&rat(0), &ratio(1, 2)), &ratio(1, 3), (1, 2)).unwrap());
        assert!(rhat_two_weights_check((&rat(0), &ratio(5, 2)), &rat(0), (2, 2)).unwrap());
        assert!(
            rhat_two_weights_check((&ratio(1, 4), &ratio(7, 3)), &ratio(2, 5), (1, 0)).unwrap()
        );
        assert!(rhat_two_weights_check((&ratio(1, 3), &ratio(9, 4)), &ratio(-1, 5), (2, 1)).unwrap());
    }

    #[test]
    fn narayana_connections_small() {
        // d=2, m=3, beta = 1-d: the classical Narayana-Jacobi connection
        let rep = narayana_as_jp(2, 3, NarayanaJpVariant::Beta1MinusD).unwrap();
        assert!(rep.identity_holds);
        assert_eq!(rep.beta, rat(-1));
        assert_eq!(rep.alpha, Some(vec![rat(1)]));
        assert_eq!(rep.n_vec, Some(vec![3]));
        assert_eq!(rep.jp_cross_check, Some(true));
        // d=3, m=2: all three variants verify
        for v in [
            NarayanaJpVariant::Beta1MinusD,
            NarayanaJpVariant::BetaDMinus1,
            NarayanaJpVariant::BetaDMinus2,
        ] {
            let rep = narayana_as_jp(3, 2, v).unwrap();
            assert!(rep.identity_holds, "{v:?}");
        }
    }

    #[test]
    fn rational_root_extraction() {
        let p = Poly::from_roots(&[ratio(1, 2), rat(-3), rat(-3)]);
        let roots = rational_roots_complete(&p).unwrap();
        assert_eq!(roots, vec![rat(-3), rat(-3), ratio(1, 2)]);
        let irr = Poly::from_coeffs(vec![rat(-2), rat(0), rat(1)]);
        assert!(rational_roots_complete(&irr).is_none());
    }
}
