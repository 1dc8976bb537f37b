//! Dense univariate polynomials over exact rationals, with the zero-location
//! machinery the rest of the crate leans on: square-free decomposition
//! (Yun), Sturm chains, exact per-zone root counts with multiplicity, real
//! root isolation and interlacing tests.
//!
//! There is no numerical root refinement anywhere; every verdict is a
//! decidable statement about rational data.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

/// Dense univariate polynomial over [`Rational`], coefficients ascending by
/// degree, trailing zeros trimmed. The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// c * x^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// prod_i (x - r_i).
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = p.mul(&Poly::from_coeffs(vec![-r.clone(), Rational::one()]));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] += prod;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let q = &rem[k] / &lead;
            if !q.is_zero() {
                quot[k - dd] = q.clone();
                for i in 0..=dd {
                    let t = &q * &divisor.coeffs[i];
                    rem[k - dd + i] -= t;
                }
            }
            rem.pop();
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Scales by a positive rational so the coefficients become a primitive
    /// integer vector. Sign is preserved.
    fn primitive_normalize(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        Poly {
            coeffs: ints
                .into_iter()
                .map(|v| Rational::from_integer(v / &g))
                .collect(),
        }
    }

    /// Monic form (zero polynomial stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// Monic gcd via the Euclidean algorithm with primitive renormalization
    /// between steps to keep coefficients small.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_normalize();
        let mut b = other.primitive_normalize();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_normalize();
        }
        a.monic()
    }

    /// Square-free part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return Ok(self.clone());
        }
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero());
        Ok(q)
    }

    /// Yun's square-free decomposition: returns monic pairwise-coprime
    /// factors with multiplicities whose product (times a constant)
    /// reconstructs self.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let g = f.gcd(&fp);
        if g.degree() == Some(0) {
            return Ok(vec![(f, 1)]);
        }
        let (mut a, _) = f.div_rem(&g)?;
        let (mut b, _) = fp.div_rem(&g)?;
        let mut out = Vec::new();
        let mut mult = 1usize;
        loop {
            let c = b.sub(&a.derivative());
            if c.is_zero() {
                if a.degree().unwrap_or(0) > 0 {
                    out.push((a.monic(), mult));
                }
                break;
            }
            let d = a.gcd(&c);
            if d.degree().unwrap_or(0) > 0 {
                out.push((d.clone(), mult));
            }
            let (na, _) = a.div_rem(&d)?;
            let (nb, _) = c.div_rem(&d)?;
            if na.degree() == Some(0) {
                break;
            }
            a = na;
            b = nb;
            mult += 1;
        }
        Ok(out)
    }

    /// Multiplicity of `point` as a root, extracted by repeated exact
    /// division; also returns the deflated polynomial.
    pub fn root_multiplicity(&self, point: &Rational) -> (usize, Poly) {
        let mut p = self.clone();
        let lin = Poly::from_coeffs(vec![-point.clone(), Rational::one()]);
        let mut mult = 0;
        while !p.is_zero() && p.eval(point).is_zero() {
            let (q, r) = p.div_rem(&lin).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            p = q;
            mult += 1;
        }
        (mult, p)
    }

    /// x^deg * p(1/x): the coefficient-reversed polynomial.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// (1-y)^m * p(y/(y-1)), expanded exactly. For deg(p) <= m this equals
    /// sum_k c_k (-1)^k y^k (1-y)^{m-k}, the Bernstein-weighted reflection.
    pub fn mobius_reflect(&self, m: usize) -> Self {
        let one_minus_y = Poly::from_coeffs(vec![Rational::one(), -Rational::one()]);
        let mut acc = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= m, "mobius_reflect needs deg(p) <= m");
            let sign = if k % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            let term = Poly::monomial(sign, k).mul(&one_minus_y.pow(m - k));
            acc = acc.add(&term);
        }
        acc
    }

    /// Newton interpolation through the given points (exact, nodes distinct).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = &coef[i] - &coef[i - 1];
                let den = &points[i].0 - &points[i - j].0;
                coef[i] = num / den;
            }
        }
        let mut acc = Poly::zero();
        let mut basis = Poly::one();
        for i in 0..n {
            acc = acc.add(&basis.scale(&coef[i]));
            basis = basis.mul(&Poly::from_coeffs(vec![
                -points[i].0.clone(),
                Rational::one(),
            ]));
        }
        acc
    }
}

/// Exact root counts (with multiplicity) per zone, plus the non-real count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZoneCounts {
    /// Roots in (-inf, 0).
    pub neg: usize,
    /// Multiplicity of a root at 0.
    pub at_zero: usize,
    /// Roots in (0, 1).
    pub in_01: usize,
    /// Multiplicity of a root at 1.
    pub at_one: usize,
    /// Roots in (1, inf).
    pub gt_one: usize,
    /// Non-real roots (necessarily even).
    pub nonreal: usize,
}

impl ZoneCounts {
    pub fn total(&self) -> usize {
        self.neg + self.at_zero + self.in_01 + self.at_one + self.gt_one + self.nonreal
    }

    pub fn real_total(&self) -> usize {
        self.total() - self.nonreal
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of p: p, p', then negated remainders, each renormalized by a
/// positive scalar (sign-preserving).
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.primitive_normalize()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_normalize());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive_normalize());
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(p) = prev {
            if p != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

fn variations_at(chain: &[Poly], x: &Rational) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_pos_inf(chain: &[Poly]) -> usize {
    variations(chain.iter().map(|p| p.leading().map_or(0, sign)))
}

fn variations_at_neg_inf(chain: &[Poly]) -> usize {
    variations(chain.iter().map(|p| {
        p.leading().map_or(0, |l| {
            let s = sign(l);
            if p.degree().unwrap() % 2 == 0 {
                s
            } else {
                -s
            }
        })
    }))
}

/// Distinct real roots of a square-free `p` in the open interval (lo, hi);
/// `p` must not vanish at either endpoint.
fn count_roots_open(chain: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    variations_at(chain, lo) - variations_at(chain, hi)
}

/// Strict bound B with all real roots of p inside (-B, B) (Cauchy bound).
fn root_bound(p: &Poly) -> Rational {
    let lead = p.leading().expect("nonzero polynomial");
    let mut max = Rational::zero();
    for c in p.coeffs() {
        let m = (c / lead).abs();
        if m > max {
            max = m;
        }
    }
    max + Rational::one()
}

/// Exact root counts per zone, with multiplicity, for a nonzero polynomial.
///
/// Multiplicities at 0 and 1 are peeled off by exact division first, then
/// each square-free factor is counted by Sturm chains on (-inf,0), (0,1) and
/// (1,inf). Non-real roots are whatever degree is left over.
pub fn sturm_zone_counts(p: &Poly) -> Result<ZoneCounts> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let mut zc = ZoneCounts::default();
    let zero = Rational::zero();
    let one = Rational::one();

    let (m0, p) = p.root_multiplicity(&zero);
    zc.at_zero = m0;
    let (m1, p) = p.root_multiplicity(&one);
    zc.at_one = m1;

    if p.degree().unwrap_or(0) > 0 {
        for (factor, mult) in p.squarefree_decomposition()? {
            let chain = sturm_chain(&factor);
            let bound = root_bound(&factor);
            let lo = -&bound;
            let neg_inf = variations_at_neg_inf(&chain);
            let v_lo = variations_at(&chain, &lo);
            debug_assert_eq!(neg_inf, v_lo);
            let v0 = variations_at(&chain, &zero);
            let v1 = variations_at(&chain, &one);
            let pos_inf = variations_at_pos_inf(&chain);
            zc.neg += mult * (neg_inf - v0);
            zc.in_01 += mult * (v0 - v1);
            zc.gt_one += mult * (v1 - pos_inf);
        }
    }
    zc.nonreal = degree - (zc.neg + zc.at_zero + zc.in_01 + zc.at_one + zc.gt_one);
    debug_assert_eq!(zc.total(), degree);
    debug_assert_eq!(zc.nonreal % 2, 0);
    Ok(zc)
}

/// True iff every root of p is real.
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    Ok(sturm_zone_counts(p)?.nonreal == 0)
}

/// Location of one distinct real root: either an exact rational point or an
/// open isolating interval containing exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Rational),
    Interval(Rational, Rational),
}

impl RootLoc {
    fn upper(&self) -> &Rational {
        match self {
            RootLoc::Exact(x) => x,
            RootLoc::Interval(_, hi) => hi,
        }
    }
}

/// Isolates the distinct real roots of a square-free polynomial, returned in
/// ascending order with pairwise disjoint locations.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<RootLoc>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(p);
    let bound = root_bound(p);
    let mut out: Vec<RootLoc> = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots_open(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        if p.eval(&mid).is_zero() {
            // mid is an exact rational root: deflate and restart so the
            // remaining isolation never has to evaluate the chain at a root
            let (mult, q) = p.root_multiplicity(&mid);
            debug_assert_eq!(mult, 1);
            let mut rest = isolate_real_roots(&q)?;
            for loc in &mut rest {
                refine_to_exclude(loc, &q, &mid);
            }
            rest.push(RootLoc::Exact(mid.clone()));
            rest.sort_by(|a, b| loc_order_key(a).cmp(loc_order_key(b)));
            return Ok(rest);
        }
        if n == 1 {
            out.push(RootLoc::Interval(lo, hi));
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|a, b| loc_order_key(a).cmp(loc_order_key(b)));
    Ok(out)
}

fn loc_order_key(loc: &RootLoc) -> &Rational {
    loc.upper()
}

/// Shrinks an isolating interval (by Sturm-preserving bisection) until it no
/// longer contains `point`. The isolated root must differ from `point`.
fn refine_to_exclude(loc: &mut RootLoc, p: &Poly, point: &Rational) {
    let chain = sturm_chain(p);
    loop {
        match loc {
            RootLoc::Exact(_) => return,
            RootLoc::Interval(lo, hi) => {
                if point <= lo || point >= hi {
                    return;
                }
                let mid = (&*lo + &*hi) / rat(2);
                if p.eval(&mid).is_zero() {
                    *loc = RootLoc::Exact(mid);
                    return;
                }
                if count_roots_open(&chain, lo, &mid) == 1 {
                    *hi = mid;
                } else {
                    *lo = mid;
                }
            }
        }
    }
}

/// Weak interlacing: between every pair of consecutive distinct roots of the
/// higher-degree polynomial there is at least one root of the other, with
/// coincident roots allowed. Both inputs must be real-rooted and their
/// degrees may differ by at most one.
pub fn interlace_check(p: &Poly, q: &Poly) -> Result<bool> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    if dp.abs_diff(dq) > 1 {
        return Err(Error::Precondition(format!(
            "degrees differ by {} > 1",
            dp.abs_diff(dq)
        )));
    }
    if !is_real_rooted(p)? || !is_real_rooted(q)? {
        return Err(Error::NotRealRooted);
    }
    let (a, b) = if dp >= dq { (p, q) } else { (q, p) };
    let sa = a.squarefree_part()?;
    let sb = b.squarefree_part()?;
    // distinct roots of the union, in ascending order
    let union = sa.mul(&sb).squarefree_part()?;
    let locs = isolate_real_roots(&union)?;
    let chain_a = sturm_chain(&sa);
    let chain_b = sturm_chain(&sb);
    let tag = |poly: &Poly, chain: &[Poly], loc: &RootLoc| -> bool {
        match loc {
            RootLoc::Exact(x) => poly.eval(x).is_zero(),
            RootLoc::Interval(lo, hi) => count_roots_open(chain, lo, hi) == 1,
        }
    };
    let tags: Vec<(bool, bool)> = locs
        .iter()
        .map(|loc| (tag(&sa, &chain_a, loc), tag(&sb, &chain_b, loc)))
        .collect();
    let a_positions: Vec<usize> = tags
        .iter()
        .enumerate()
        .filter_map(|(i, t)| t.0.then_some(i))
        .collect();
    for w in a_positions.windows(2) {
        let (i, j) = (w[0], w[1]);
        if !(i..=j).any(|k| tags[k].1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[-1, 1]); // x-1
        assert_eq!(a.mul(&b), p(&[-1, -1, 1, 1]));
        let (q, r) = a.mul(&b).div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(a.eval(&rat(2)), rat(9));
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let a = p(&[3, -2, 5]);
        let b = p(&[-7, 0, 1, 2]);
        for t in [-3i64, -1, 0, 2, 5] {
            let t = ratio(t, 3);
            assert_eq!(a.mul(&b).eval(&t), a.eval(&t) * b.eval(&t));
        }
    }

    #[test]
    fn zone_counts_worked_quadratics() {
        // two distinct negative roots
        let zc = sturm_zone_counts(&p(&[121, 78, 1])).unwrap();
        assert_eq!(
            zc,
            ZoneCounts {
                neg: 2,
                ..Default::default()
            }
        );
        // (3x+1)^2: one negative root of multiplicity 2
        let zc = sturm_zone_counts(&p(&[1, 6, 9])).unwrap();
        assert_eq!(zc.neg, 2);
        assert_eq!(zc.nonreal, 0);
        // x^2 + 1: no real roots
        let zc = sturm_zone_counts(&p(&[1, 0, 1])).unwrap();
        assert_eq!(zc.nonreal, 2);
        assert_eq!(zc.real_total(), 0);
    }

    #[test]
    fn zone_counts_constructed_roots() {
        // roots: -2 (x2), 0, 1/2, 1 (x3), 7
        let mut q = Poly::from_roots(&[
            rat(-2),
            rat(-2),
            rat(0),
            ratio(1, 2),
            rat(1),
            rat(1),
            rat(1),
            rat(7),
        ]);
        q = q.scale(&ratio(-3, 7));
        let zc = sturm_zone_counts(&q).unwrap();
        assert_eq!(zc.neg, 2);
        assert_eq!(zc.at_zero, 1);
        assert_eq!(zc.in_01, 1);
        assert_eq!(zc.at_one, 3);
        assert_eq!(zc.gt_one, 1);
        assert_eq!(zc.nonreal, 0);
    }

    #[test]
    fn zone_counts_multiply() {
        let a = Poly::from_roots(&[rat(-1), ratio(1, 3)]);
        let b = p(&[2, 0, 1]); // nonreal pair
        let za = sturm_zone_counts(&a).unwrap();
        let zb = sturm_zone_counts(&b).unwrap();
        let zab = sturm_zone_counts(&a.mul(&b)).unwrap();
        assert_eq!(zab.neg, za.neg + zb.neg);
        assert_eq!(zab.in_01, za.in_01 + zb.in_01);
        assert_eq!(zab.nonreal, za.nonreal + zb.nonreal);
    }

    #[test]
    fn real_rooted() {
        assert!(is_real_rooted(&p(&[-1, 0, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn squarefree_decomposition_shape() {
        // (x+1)^2 (x-3)
        let f = Poly::from_roots(&[rat(-1), rat(-1), rat(3)]);
        let d = f.squarefree_decomposition().unwrap();
        let total: usize = d
            .iter()
            .map(|(g, m)| g.degree().unwrap() * m)
            .sum();
        assert_eq!(total, 3);
        assert!(d.iter().any(|(_, m)| *m == 2));
    }

    #[test]
    fn isolation_finds_all_roots() {
        let f = Poly::from_roots(&[rat(-3), ratio(-1, 2), ratio(1, 4), rat(2)]);
        let locs = isolate_real_roots(&f).unwrap();
        assert_eq!(locs.len(), 4);
    }

    #[test]
    fn isolation_with_exact_hit() {
        // root at 0 will be the first midpoint of (-B, B)
        let f = Poly::from_roots(&[rat(0), rat(1), rat(-1)]);
        let locs = isolate_real_roots(&f).unwrap();
        assert_eq!(locs.len(), 3);
        assert!(locs.iter().any(|l| matches!(l, RootLoc::Exact(x) if x.is_zero())));
    }

    #[test]
    fn interlacing_examples() {
        let one_root = p(&[1, 1]); // x+1
        let two_roots = Poly::from_roots(&[ratio(-1, 2), rat(-2)]);
        assert!(interlace_check(&one_root, &two_roots).unwrap());

        let a = Poly::from_roots(&[rat(-1), rat(-2)]);
        let b = Poly::from_roots(&[rat(-3), rat(-4)]);
        assert!(!interlace_check(&a, &b).unwrap());

        // shared root is fine under weak interlacing
        let c = Poly::from_roots(&[rat(-1), rat(-3)]);
        let d = Poly::from_roots(&[rat(-1), rat(-2)]);
        assert!(interlace_check(&c, &d).unwrap());
    }

    #[test]
    fn interlacing_rejects_bad_inputs() {
        let a = p(&[1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(interlace_check(&a, &b), Err(Error::NotRealRooted));
        let c = p(&[1, 1]);
        let d = Poly::from_roots(&[rat(-1), rat(-2), rat(-3)]);
        assert!(interlace_check(&c, &d).is_err());
    }

    #[test]
    fn interpolation_reproduces_polynomial() {
        let f = p(&[2, -3, 0, 1]);
        let pts: Vec<(Rational, Rational)> =
            (0..=3).map(|k| (rat(k), f.eval(&rat(k)))).collect();
        assert_eq!(Poly::interpolate(&pts), f);
    }

    #[test]
    fn mobius_reflect_involution() {
        // (1-y)^m p(y/(y-1)) applied twice returns p when deg p <= m
        let f = p(&[1, 3, 1]);
        let g = f.mobius_reflect(2).mobius_reflect(2);
        assert_eq!(f, g);
    }

    #[test]
    fn reversed_palindrome() {
        assert_eq!(p(&[1, 3, 1]).reversed(), p(&[1, 3, 1]));
        assert_eq!(p(&[2, 3, 1]).reversed(), p(&[1, 3, 2]));
    }
}
