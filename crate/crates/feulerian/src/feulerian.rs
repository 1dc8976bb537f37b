//! Generalized f-Eulerian polynomials.
//!
//! A spec carries a weight exponent `a` and the block-of-roots form of a
//! degree-m polynomial F with F(0) = 1: the series sum_n F(n) (a)_n / n! x^n
//! equals hatw(x) / (1-x)^{m+a} for a unique polynomial hatw of degree at
//! most m. The module constructs hatw by independent routes (explicit
//! hypergeometric coefficients, an operator recursion, and a truncated-series
//! product), classifies its zeros against the sufficient conditions proved
//! for them, and carries the side results: the quadratic criterion, finite
//! total-positivity windows, Wagner products and the m-Eulerian recursion.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial_series, factorial, is_integer, nonpositive_integer_negation, pochhammer, rat,
    terminating_hypergeometric, FormalSeries, Rational,
};
use crate::polyalgebra::{interlace_check, is_real_rooted, sturm_zone_counts, Poly, ZoneCounts};

/// The pair (a, F_m) in block-of-roots form. Block `(f, m)` stands for the
/// root chain -f, -f-1, ..., -f-m+1 of F; the represented polynomial is
/// normalized so that F(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianSpec {
    a: Rational,
    blocks: Vec<(Rational, usize)>,
}

impl EulerianSpec {
    /// Validates block lengths and the normalization (f_j)_{m_j} != 0.
    pub fn new(a: Rational, blocks: Vec<(Rational, usize)>) -> Result<Self> {
        for (f, m) in &blocks {
            if *m == 0 {
                return Err(Error::InvalidSpec("block length must be >= 1".into()));
            }
            if pochhammer(f, *m).is_zero() {
                return Err(Error::InvalidSpec(format!(
                    "block ({}, {m}) has vanishing normalization",
                    f
                )));
            }
        }
        Ok(EulerianSpec { a, blocks })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn blocks(&self) -> &[(Rational, usize)] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    /// Total degree m of F.
    pub fn m(&self) -> usize {
        self.blocks.iter().map(|(_, m)| m).sum()
    }

    pub fn f_vec(&self) -> Vec<Rational> {
        self.blocks.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn m_vec(&self) -> Vec<usize> {
        self.blocks.iter().map(|(_, m)| *m).collect()
    }

    /// f_j + m_j per block.
    pub fn f_plus_m_vec(&self) -> Vec<Rational> {
        self.blocks
            .iter()
            .map(|(f, m)| f + rat(*m as i64))
            .collect()
    }

    /// The negated roots of F expanded from the blocks, sorted ascending.
    pub fn root_list(&self) -> Vec<Rational> {
        let mut alphas = Vec::with_capacity(self.m());
        for (f, m) in &self.blocks {
            for l in 0..*m {
                alphas.push(f + rat(l as i64));
            }
        }
        alphas.sort();
        alphas
    }

    /// The normalization constant (f)_m = prod_j (f_j)_{m_j}.
    pub fn normalization(&self) -> Rational {
        self.blocks
            .iter()
            .map(|(f, m)| pochhammer(f, *m))
            .product()
    }

    /// Coefficients of the normalized F as a polynomial in t.
    pub fn f_coeffs(&self) -> Vec<Rational> {
        let mut p = Poly::one();
        for alpha in self.root_list() {
            p = p.mul(&Poly::from_coeffs(vec![alpha, Rational::one()]));
        }
        p.scale(&(Rational::one() / self.normalization()))
            .coeffs()
            .to_vec()
    }
}

/// F(t) = prod_j (f_j + t)_{m_j} / (f_j)_{m_j}; always 1 at t = 0.
pub fn f_polynomial_eval(spec: &EulerianSpec, t: &Rational) -> Rational {
    let mut acc = Rational::one();
    for (f, m) in spec.blocks() {
        acc *= pochhammer(&(f + t), *m) / pochhammer(f, *m);
    }
    acc
}

/// Numerator polynomial of sum_n F(n) (a)_n / n! x^n over (1-x)^{deg F + a},
/// for F given by raw coefficients (any scale; the output inherits it).
///
/// Computed as the truncated-series product; the coefficients beyond deg F
/// are asserted to vanish before trimming.
pub fn hatw_from_coeffs(a: &Rational, f_coeffs: &[Rational]) -> Result<Poly> {
    let f = Poly::from_coeffs(f_coeffs.to_vec());
    if f.is_zero() {
        return Err(Error::InvalidSpec("F must be nonzero".into()));
    }
    let m = f.degree().unwrap();
    let order = m + 4;
    let mut an = Rational::one();
    let series = FormalSeries::from_fn(order, |n| {
        if n > 0 {
            an *= a + rat(n as i64 - 1);
            an /= rat(n as i64);
        }
        f.eval(&rat(n as i64)) * &an
    });
    // (1-x)^{m+a} expanded as the binomial series with exponent -(m+a)
    let weight = binomial_series(&-(a + rat(m as i64)), order);
    let product = series.mul(&weight);
    for n in (m + 1)..=order {
        if !product.coeff(n).is_zero() {
            return Err(Error::InvalidSpec(format!(
                "series tail does not vanish at order {n}"
            )));
        }
    }
    Ok(Poly::from_coeffs(product.coeffs()[..=m].to_vec()))
}

/// True iff `a + m` lands on an integer in [0, m-1]. There the explicit
/// coefficient formula degenerates to 0 * infinity and the series route is
/// used instead. In that regime (a)_n terminates, so the product is finite.
fn direct_formula_degenerate(a: &Rational, m: usize) -> bool {
    let s = a + rat(m as i64);
    if !is_integer(&s) {
        return false;
    }
    !s.is_negative() && s < rat(m as i64)
}

/// hatw by the explicit hypergeometric coefficient formula: the coefficient
/// of x^k is ((-m-a)_k / k!) * F(-k, a, f+m; 1+m-k+a, f) evaluated at unit
/// argument, for k = 0..m. Falls back to the series route where the formula
/// degenerates. Output is normalized: hatw(0) = 1 whenever F(0) = 1.
pub fn hatw_direct(spec: &EulerianSpec) -> Result<Poly> {
    let a = spec.a();
    let m = spec.m();
    if direct_formula_degenerate(a, m) {
        return hatw_from_coeffs(a, &spec.f_coeffs());
    }
    let f = spec.f_vec();
    let fm = spec.f_plus_m_vec();
    let mut coeffs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut top = vec![rat(-(k as i64)), a.clone()];
        top.extend(fm.iter().cloned());
        let mut bottom = vec![rat(1 + m as i64 - k as i64) + a];
        bottom.extend(f.iter().cloned());
        let hyper = terminating_hypergeometric(&top, &bottom)?;
        let pre = pochhammer(&(-a - rat(m as i64)), k) / factorial(k);
        coeffs.push(pre * hyper);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Raw operator iterates P_0 = 1 and
/// P_{k+1} = x(1-x)P_k' + (x(s_k - alpha_k) + alpha_k) P_k with s_k = a + k,
/// one step per negated root of F taken in ascending order. The last
/// iterate equals (f)_m * hatw.
pub fn hatw_recursive_iterates(spec: &EulerianSpec) -> Vec<Poly> {
    let mut iterates = vec![Poly::one()];
    let mut s = spec.a().clone();
    let mut p = Poly::one();
    for alpha in spec.root_list() {
        p = operator_step(&p, &s, &alpha);
        iterates.push(p.clone());
        s += Rational::one();
    }
    iterates
}

/// One application of the coefficient-shift operator in numerator form:
/// given P with f = P/(1-x)^s, the numerator of M_alpha f over (1-x)^{s+1}.
pub fn operator_step(p: &Poly, s: &Rational, alpha: &Rational) -> Poly {
    let x_one_minus_x = Poly::from_coeffs(vec![Rational::zero(), Rational::one(), -Rational::one()]);
    let linear = Poly::from_coeffs(vec![alpha.clone(), s - alpha]);
    x_one_minus_x.mul(&p.derivative()).add(&linear.mul(p))
}

/// hatw by recursion: the final iterate divided by (f)_m. Must equal
/// [`hatw_direct`] exactly.
pub fn hatw_recursive(spec: &EulerianSpec) -> Result<Poly> {
    let last = hatw_recursive_iterates(spec)
        .pop()
        .expect("at least the initial iterate");
    Ok(last.scale(&(Rational::one() / spec.normalization())))
}

/// Checks the defining generating relation through x^order: the truncated
/// series sum F(n)(a)_n/n! x^n times the expansion of (1-x)^{m+a} must equal
/// hatw. Requires order >= m.
pub fn series_check(spec: &EulerianSpec, order: usize) -> Result<bool> {
    let m = spec.m();
    if order < m {
        return Err(Error::Precondition(format!("order {order} < m = {m}")));
    }
    let a = spec.a();
    let mut an = Rational::one();
    let series = FormalSeries::from_fn(order, |n| {
        if n > 0 {
            an *= a + rat(n as i64 - 1);
            an /= rat(n as i64);
        }
        f_polynomial_eval(spec, &rat(n as i64)) * &an
    });
    let weight = binomial_series(&-(a + rat(m as i64)), order);
    let product = series.mul(&weight);
    let hatw = hatw_direct(spec)?;
    let expect = FormalSeries::from_fn(order, |n| hatw.coeff(n));
    Ok(product == expect)
}

/// w(a; F | y) = sum_k ((a)_k / k!) F(-k, f+m; f) y^k, the degree-m
/// polynomial whose monomial coefficients are (up to sign) the Bernstein
/// coefficients of hatw: (1-y)^m hatw(y/(y-1)) = w(y).
pub fn w_polynomial(spec: &EulerianSpec) -> Result<Poly> {
    let m = spec.m();
    let f = spec.f_vec();
    let fm = spec.f_plus_m_vec();
    let a = spec.a();
    let mut coeffs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut top = vec![rat(-(k as i64))];
        top.extend(fm.iter().cloned());
        let hyper = terminating_hypergeometric(&top, &f)?;
        coeffs.push(pochhammer(a, k) / factorial(k) * hyper);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// The zero-location statements that can be checked against a spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// a > 0 and the ladder condition holds for all m roots: all zeros
    /// negative.
    NegativeZerosFull,
    /// a > 0 and the ladder condition holds for the first m-1 roots: all
    /// zeros real, at most one positive.
    NegativeZerosAllButOne,
    /// f_j + m_j < a for every block: all zeros negative.
    LargeA,
    /// a + m < 1 and every root positive: all zeros in (0,1).
    ZerosIn01,
    /// 1 <= a + m < 2 and every root positive: all zeros but one in (0,1),
    /// one in [1, inf); exactly at 1 when a + m = 1.
    ZerosIn01OneEscape,
    /// m >= 2 and alpha_j < a < 1 - m: all zeros in (1, inf).
    ZerosBeyondOne,
    /// 1 - m < a < 2 - m and alpha_j < a: all but one in (1, inf), one in
    /// (0,1).
    ZerosBeyondOneOneInside,
}

/// Outcome of testing one theorem against one spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
}

impl TheoremVerdict {
    /// A verdict refutes its theorem iff the hypothesis holds but the
    /// conclusion fails.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }
}

/// Ladder condition on the first p sorted negated roots: all are >= 0 and
/// every lattice point a, a+1, ... strictly below the p-th root appears
/// among them.
fn ladder_condition(a: &Rational, alphas: &[Rational], p: usize) -> bool {
    if p == 0 {
        return true;
    }
    if alphas[..p].iter().any(|al| al.is_negative()) {
        return false;
    }
    let top = &alphas[p - 1];
    let mut point = a.clone();
    while &point < top {
        if !alphas[..p].contains(&point) {
            return false;
        }
        point += Rational::one();
    }
    true
}

/// Sturm zone counts of hatw plus verdicts for every zero-location theorem
/// whose hypothesis can be stated for this spec.
pub fn classify_zeros(spec: &EulerianSpec) -> Result<(ZoneCounts, Vec<TheoremVerdict>)> {
    let hatw = hatw_direct(spec)?;
    let zc = sturm_zone_counts(&hatw)?;
    let degree = hatw.degree().unwrap();
    let alphas = spec.root_list();
    let a = spec.a();
    let m = spec.m();
    let a_plus_m = a + rat(m as i64);
    let one = Rational::one();

    let all_negative = zc.nonreal == 0 && zc.neg == degree;
    let positive_count = zc.in_01 + zc.at_one + zc.gt_one;

    let mut verdicts = Vec::new();
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::NegativeZerosFull,
        hypothesis_holds: a.is_positive() && ladder_condition(a, &alphas, m),
        conclusion_holds: all_negative,
    });
    if m >= 1 {
        verdicts.push(TheoremVerdict {
            theorem: TheoremId::NegativeZerosAllButOne,
            hypothesis_holds: a.is_positive() && ladder_condition(a, &alphas, m - 1),
            conclusion_holds: zc.nonreal == 0 && positive_count <= 1,
        });
    }
    // the large-weight statement inherits the nonnegative-roots hypothesis
    // of its parent theorem; with f < 0 allowed it is false (one zero is
    // pushed into (0,1) by the negative step)
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::LargeA,
        hypothesis_holds: spec
            .blocks()
            .iter()
            .all(|(f, mj)| !f.is_negative() && &(f + rat(*mj as i64)) < a),
        conclusion_holds: all_negative,
    });
    let all_roots_positive = alphas.iter().all(|al| al.is_positive());
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::ZerosIn01,
        hypothesis_holds: a_plus_m < one && all_roots_positive,
        conclusion_holds: zc.nonreal == 0 && zc.in_01 == degree,
    });
    let escape_hyp = one <= a_plus_m && a_plus_m < rat(2) && all_roots_positive;
    let mut escape_ok =
        zc.nonreal == 0 && zc.in_01 + 1 == degree && zc.at_one + zc.gt_one == 1;
    if a_plus_m == one {
        escape_ok = escape_ok && zc.at_one == 1;
    }
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::ZerosIn01OneEscape,
        hypothesis_holds: escape_hyp,
        conclusion_holds: escape_ok,
    });
    let all_roots_below_a = alphas.iter().all(|al| al < a);
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::ZerosBeyondOne,
        hypothesis_holds: m >= 2 && all_roots_below_a && a < &(one.clone() - rat(m as i64)),
        conclusion_holds: zc.nonreal == 0 && zc.gt_one == degree,
    });
    verdicts.push(TheoremVerdict {
        theorem: TheoremId::ZerosBeyondOneOneInside,
        hypothesis_holds: all_roots_below_a
            && &(one.clone() - rat(m as i64)) < a
            && a < &(rat(2) - rat(m as i64)),
        conclusion_holds: zc.nonreal == 0 && zc.gt_one + 1 == degree && zc.in_01 == 1,
    });
    Ok((zc, verdicts))
}

/// Numerator of sum_k (k^2 + b k + c) (a)_k / k! x^k over (1-x)^{a+2}:
/// (a^2 - ab + c) x^2 + (a(b+1) - 2c) x + c.
pub fn quadratic_numerator(a: &Rational, b: &Rational, c: &Rational) -> Poly {
    Poly::from_coeffs(vec![
        c.clone(),
        a * (b + Rational::one()) - rat(2) * c,
        a * a - a * b + c,
    ])
}

/// For a > 0: the four-inequality criterion deciding when the quadratic
/// numerator has only negative real roots. Agrees with the Sturm
/// classification of [`quadratic_numerator`].
pub fn quadratic_negative_root_criterion(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<bool> {
    if !a.is_positive() {
        return Err(Error::Precondition("a must be positive".into()));
    }
    let one = Rational::one();
    let disc = a * (b + &one) * (b + &one) - rat(4) * c * (a + &one);
    Ok(!disc.is_negative()
        && c.is_positive()
        && a * (b + &one) > rat(2) * c
        && (a * a - a * b + c).is_positive())
}

/// Verdict of a finite total-positivity window check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpVerdict {
    Pass,
    Fail {
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: Rational,
    },
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Fraction-free integer determinant (Bareiss); each division is exact.
fn integer_determinant(mut m: Vec<Vec<num_bigint::BigInt>>) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut sign = false;
    let mut prev = BigInt::from(1);
    for k in 0..(n - 1) {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::from(0);
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Examines all minors of order <= max_order of the window x window
/// upper-left block of the Toeplitz matrix T[i][j] = seq[j-i] (zero below
/// the diagonal band). Returns the first negative minor found, scanning
/// orders ascending and index sets lexicographically.
///
/// Denominators are cleared once up front; each minor is then an exact
/// integer determinant rescaled back.
pub fn tp_minor_check(seq: &[Rational], max_order: usize, window: usize) -> Result<TpVerdict> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if max_order == 0 || window < max_order || seq.len() < window {
        return Err(Error::WindowTooSmall);
    }
    let mut lcm = BigInt::from(1);
    for v in &seq[..window] {
        lcm = lcm.lcm(v.denom());
    }
    let ints: Vec<BigInt> = seq[..window]
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let entry = |i: usize, j: usize| -> BigInt {
        if j >= i {
            ints[j - i].clone()
        } else {
            BigInt::from(0)
        }
    };
    for order in 1..=max_order {
        let sets = combinations(window, order);
        let mut scale = Rational::one();
        for _ in 0..order {
            scale *= Rational::from_integer(lcm.clone());
        }
        for rows in &sets {
            for cols in &sets {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| entry(i, j)).collect())
                    .collect();
                let det = integer_determinant(sub);
                if det.is_negative() {
                    return Ok(TpVerdict::Fail {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        value: Rational::from_integer(det) / &scale,
                    });
                }
            }
        }
    }
    Ok(TpVerdict::Pass)
}

/// Values F(0), F(1), ... of the spec's unnormalized root product
/// prod_j (f_j + n)_{m_j}, the natural sequence for total-positivity
/// windows.
pub fn spec_value_sequence(spec: &EulerianSpec, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            spec.blocks()
                .iter()
                .map(|(f, m)| pochhammer(&(f + rat(n as i64)), *m))
                .product()
        })
        .collect()
}

/// Wagner product test for a = 1: both inputs must generate real-rooted
/// negative numerators; the product polynomial must do so as well. Returns
/// false only on a counterexample to the product theorem.
pub fn wagner_product_check(spec_f: &EulerianSpec, spec_g: &EulerianSpec) -> Result<bool> {
    if spec_f.a() != &Rational::one() || spec_g.a() != &Rational::one() {
        return Err(Error::Precondition("product theorem is stated for a = 1".into()));
    }
    for s in [spec_f, spec_g] {
        if s.m() > 0 {
            let hw = hatw_direct(s)?;
            let zc = sturm_zone_counts(&hw)?;
            if zc.nonreal != 0 || zc.neg != hw.degree().unwrap() {
                return Err(Error::Precondition(
                    "input numerator is not real-rooted negative".into(),
                ));
            }
        }
    }
    let mut blocks = spec_f.blocks().to_vec();
    blocks.extend_from_slice(spec_g.blocks());
    let product = EulerianSpec::new(Rational::one(), blocks)?;
    let hw = hatw_direct(&product)?;
    let zc = sturm_zone_counts(&hw)?;
    Ok(zc.nonreal == 0 && zc.neg == hw.degree().unwrap_or(0))
}

/// Wagner product test for coefficient-form inputs (handles F with non-real
/// roots): multiplies the coefficient polynomials and runs the series route.
pub fn wagner_product_check_coeffs(f: &[Rational], g: &[Rational]) -> Result<bool> {
    let one = Rational::one();
    for h in [f, g] {
        let hw = hatw_from_coeffs(&one, h)?;
        let zc = sturm_zone_counts(&hw)?;
        if zc.nonreal != 0 || zc.neg != hw.degree().unwrap_or(0) {
            return Err(Error::Precondition(
                "input numerator is not real-rooted negative".into(),
            ));
        }
    }
    let product = Poly::from_coeffs(f.to_vec()).mul(&Poly::from_coeffs(g.to_vec()));
    let hw = hatw_from_coeffs(&one, product.coeffs())?;
    let zc = sturm_zone_counts(&hw)?;
    Ok(zc.nonreal == 0 && zc.neg == hw.degree().unwrap_or(0))
}

/// Multiset Eulerian polynomials: S_{m;0} = 1 and
/// S_{m;n+1} = x(1-x) S_{m;n}' + (1 + mnx) S_{m;n}.
pub fn m_eulerian(m: usize, n: usize) -> Poly {
    let mut s = Poly::one();
    for k in 0..n {
        let shift = rat((m * k) as i64) + Rational::one();
        s = operator_step(&s, &shift, &Rational::one());
    }
    s
}

/// Runs the recursion and confirms the all-negative-zeros conclusion.
pub fn m_eulerian_checked(m: usize, n: usize) -> Result<Poly> {
    let s = m_eulerian(m, n);
    let zc = sturm_zone_counts(&s)?;
    if zc.nonreal != 0 || zc.neg != s.degree().unwrap_or(0) {
        return Err(Error::InvalidSpec(String::from(
            "multiset Eulerian polynomial is not real-rooted negative",
        )));
    }
    Ok(s)
}

/// Checks weak interlacing of consecutive recursion iterates at every step
/// where the all-negative sign hypotheses hold (alpha > 0 and
/// s - alpha - deg > 0); steps where they fail are skipped.
pub fn recursion_interlacing_check(spec: &EulerianSpec) -> Result<bool> {
    let iterates = hatw_recursive_iterates(spec);
    let alphas = spec.root_list();
    let mut s = spec.a().clone();
    for (k, alpha) in alphas.iter().enumerate() {
        let p = &iterates[k];
        let q = &iterates[k + 1];
        let deg = rat(p.degree().unwrap_or(0) as i64);
        let hyp = alpha.is_positive()
            && (&s - alpha - &deg).is_positive()
            && p.degree().unwrap_or(0) >= 1
            && is_real_rooted(p).unwrap_or(false)
            && is_real_rooted(q).unwrap_or(false);
        if hyp && !interlace_check(p, q)? {
            return Ok(false);
        }
        s += Rational::one();
    }
    Ok(true)
}

/// Helper: nonpositive-integer test used by callers assembling specs.
pub fn terminates_at(a: &Rational) -> Option<usize> {
    nonpositive_integer_negation(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn spec(a: Rational, blocks: &[(Rational, usize)]) -> EulerianSpec {
        EulerianSpec::new(a, blocks.to_vec()).unwrap()
    }

    fn example_21_spec() -> EulerianSpec {
        spec(rat(1), &[(ratio(11, 10), 1), (ratio(11, 10), 1)])
    }

    #[test]
    fn f_polynomial_normalization() {
        let s = example_21_spec();
        assert_eq!(f_polynomial_eval(&s, &rat(0)), rat(1));
        // unnormalized (n + 11/10)^2 = normalization * F(n)
        for n in 0..5i64 {
            let un = (ratio(11, 10) + rat(n)).pow(2);
            assert_eq!(s.normalization() * f_polynomial_eval(&s, &rat(n)), un);
        }
    }

    #[test]
    fn hatw_direct_example_21() {
        // normalized: (x^2 + 78x + 121)/121; times (f)_m = 121/100 this is
        // the (x^2 + 78x + 121)/100 numerator of the raw series
        let s = example_21_spec();
        let hw = hatw_direct(&s).unwrap();
        assert_eq!(
            hw,
            Poly::from_coeffs(vec![rat(1), ratio(78, 121), ratio(1, 121)])
        );
        let raw = hw.scale(&s.normalization());
        assert_eq!(
            raw,
            Poly::from_coeffs(vec![ratio(121, 100), ratio(39, 50), ratio(1, 100)])
        );
    }

    #[test]
    fn hatw_direct_trivial_and_fractional() {
        let s = spec(rat(1), &[]);
        assert_eq!(hatw_direct(&s).unwrap(), Poly::one());
        let s = spec(ratio(1, 2), &[(ratio(1, 3), 1)]);
        let hw = hatw_direct(&s).unwrap();
        assert_eq!(hw, Poly::from_coeffs(vec![rat(1), ratio(1, 2)]));
        assert!(series_check(&s, 12).unwrap());
    }

    #[test]
    fn hatw_from_coeffs_worked_numerators() {
        // (n + 11/10)^2 -> (x^2 + 78x + 121)/100
        let hw = hatw_from_coeffs(&rat(1), &[ratio(121, 100), ratio(11, 5), rat(1)]).unwrap();
        assert_eq!(
            hw,
            Poly::from_coeffs(vec![ratio(121, 100), ratio(39, 50), ratio(1, 100)])
        );
        // n^2 + 1/8 -> (3x+1)^2/8
        let hw = hatw_from_coeffs(&rat(1), &[ratio(1, 8), rat(0), rat(1)]).unwrap();
        assert_eq!(
            hw,
            Poly::from_coeffs(vec![ratio(1, 8), ratio(3, 4), ratio(9, 8)])
        );
        // n + 11/10 -> (11 - x)/10
        let hw = hatw_from_coeffs(&rat(1), &[ratio(11, 10), rat(1)]).unwrap();
        assert_eq!(hw, Poly::from_coeffs(vec![ratio(11, 10), ratio(-1, 10)]));
    }

    #[test]
    fn recursion_matches_direct() {
        let s = example_21_spec();
        let iterates = hatw_recursive_iterates(&s);
        // raw single step: (11 - x)/10
        assert_eq!(
            iterates[1],
            Poly::from_coeffs(vec![ratio(11, 10), ratio(-1, 10)])
        );
        // raw double step: (x^2 + 78x + 121)/100
        assert_eq!(
            iterates[2],
            Poly::from_coeffs(vec![ratio(121, 100), ratio(39, 50), ratio(1, 100)])
        );
        assert_eq!(hatw_recursive(&s).unwrap(), hatw_direct(&s).unwrap());
        // a couple of fractional specs
        for s in [
            spec(ratio(1, 2), &[(ratio(1, 3), 1)]),
            spec(ratio(7, 3), &[(ratio(5, 2), 2), (ratio(1, 4), 1)]),
            spec(ratio(-5, 3), &[(rat(2), 2)]),
        ] {
            assert_eq!(hatw_recursive(&s).unwrap(), hatw_direct(&s).unwrap());
        }
    }

    #[test]
    fn degenerate_integer_weight_uses_series_route() {
        // a + m integer in [0, m-1]: shifted-Legendre-like cases
        let s = spec(rat(-1), &[(rat(1), 1)]);
        assert_eq!(
            hatw_direct(&s).unwrap(),
            Poly::from_coeffs(vec![rat(1), rat(-2)])
        );
        let s = spec(rat(-2), &[(rat(1), 2)]);
        assert_eq!(
            hatw_direct(&s).unwrap(),
            Poly::from_coeffs(vec![rat(1), rat(-6), rat(6)])
        );
        for s in [
            spec(rat(-1), &[(rat(1), 1)]),
            spec(rat(-2), &[(rat(1), 2)]),
            spec(rat(-3), &[(rat(1), 2), (ratio(3, 2), 1)]),
        ] {
            assert_eq!(hatw_recursive(&s).unwrap(), hatw_direct(&s).unwrap());
            assert!(series_check(&s, s.m() + 6).unwrap());
        }
    }

    #[test]
    fn series_check_examples() {
        assert!(series_check(&example_21_spec(), 10).unwrap());
        assert!(series_check(&spec(ratio(3, 7), &[]), 10).unwrap());
    }

    #[test]
    fn degree_drop_in_recursion_and_formula() {
        // roots hit the weight ladder exactly: the numerator collapses to a
        // constant (sum (n+1)(n+2)/2 x^n = 1/(1-x)^3), one degree lost per
        // step
        let s = spec(rat(1), &[(rat(1), 2)]);
        assert_eq!(hatw_direct(&s).unwrap(), Poly::one());
        assert_eq!(hatw_recursive(&s).unwrap(), Poly::one());
        let iterates = hatw_recursive_iterates(&s);
        assert_eq!(iterates[1].degree(), Some(0));
        assert_eq!(iterates[2].degree(), Some(0));
    }

    #[test]
    fn w_polynomial_bernstein_duality() {
        // empty spec
        let s = spec(ratio(2, 5), &[]);
        assert_eq!(w_polynomial(&s).unwrap(), Poly::one());
        // (1-y)^m hatw(y/(y-1)) = w(y) for assorted specs
        for s in [
            example_21_spec(),
            spec(rat(5), &[(rat(2), 2)]),
            spec(ratio(1, 2), &[(ratio(1, 3), 1), (ratio(9, 4), 2)]),
        ] {
            let hw = hatw_direct(&s).unwrap();
            let w = w_polynomial(&s).unwrap();
            assert_eq!(hw.mobius_reflect(s.m()), w);
        }
        // standard-Narayana spec: w = 1 - 5y + 5y^2, Bernstein coefficients
        // [1, 5, 5] reconstruct 1 + 3x + x^2
        let s = spec(rat(5), &[(rat(2), 2)]);
        let w = w_polynomial(&s).unwrap();
        assert_eq!(w, Poly::from_coeffs(vec![rat(1), rat(-5), rat(5)]));
        let hw = hatw_direct(&s).unwrap();
        assert_eq!(hw, Poly::from_coeffs(vec![rat(1), rat(3), rat(1)]));
    }

    #[test]
    fn classify_example_21_conclusion_without_hypothesis() {
        let (zc, verdicts) = classify_zeros(&example_21_spec()).unwrap();
        assert_eq!(zc.neg, 2);
        assert_eq!(zc.nonreal, 0);
        let full = verdicts
            .iter()
            .find(|v| v.theorem == TheoremId::NegativeZerosFull)
            .unwrap();
        assert!(!full.hypothesis_holds);
        assert!(full.conclusion_holds);
    }

    #[test]
    fn classify_legendre_like_in_01() {
        for n in 1..=3usize {
            let s = spec(rat(-(n as i64)), &[(rat(1), n)]);
            let (zc, verdicts) = classify_zeros(&s).unwrap();
            assert_eq!(zc.in_01, n);
            let v = verdicts
                .iter()
                .find(|v| v.theorem == TheoremId::ZerosIn01)
                .unwrap();
            assert!(v.hypothesis_holds && v.conclusion_holds);
        }
    }

    #[test]
    fn classify_large_a_corollary() {
        let s = spec(rat(5), &[(rat(2), 2)]);
        let (zc, verdicts) = classify_zeros(&s).unwrap();
        assert_eq!(zc.neg, 2);
        let v = verdicts
            .iter()
            .find(|v| v.theorem == TheoremId::LargeA)
            .unwrap();
        assert!(v.hypothesis_holds && v.conclusion_holds);
    }

    #[test]
    fn large_a_needs_nonnegative_roots() {
        // f + m < a alone is not enough: with a negative block root one
        // zero lands outside (-inf, 0), so the hypothesis must exclude it
        let s = spec(ratio(5, 3), &[(ratio(-3, 2), 2)]);
        let (zc, verdicts) = classify_zeros(&s).unwrap();
        assert!(zc.neg < zc.total() - zc.nonreal || zc.nonreal > 0);
        let v = verdicts
            .iter()
            .find(|v| v.theorem == TheoremId::LargeA)
            .unwrap();
        assert!(!v.hypothesis_holds);
        assert!(!v.conclusion_holds);
    }

    #[test]
    fn classify_beyond_one() {
        let s = spec(rat(-4), &[(ratio(-11, 2), 2)]);
        let (zc, verdicts) = classify_zeros(&s).unwrap();
        let v = verdicts
            .iter()
            .find(|v| v.theorem == TheoremId::ZerosBeyondOne)
            .unwrap();
        assert!(v.hypothesis_holds);
        assert!(v.conclusion_holds, "zones {zc:?}");
    }

    #[test]
    fn quadratic_criterion_examples() {
        assert!(quadratic_negative_root_criterion(&rat(1), &rat(0), &ratio(1, 8)).unwrap());
        assert!(
            quadratic_negative_root_criterion(&rat(1), &ratio(11, 5), &ratio(121, 100)).unwrap()
        );
        assert!(!quadratic_negative_root_criterion(&rat(1), &rat(-10), &rat(1)).unwrap());
        assert!(quadratic_negative_root_criterion(&rat(0), &rat(0), &rat(1)).is_err());
    }

    #[test]
    fn quadratic_criterion_matches_sturm_on_small_grid() {
        let a = rat(1);
        for bn in -8..=8i64 {
            for cn in -8..=8i64 {
                let b = ratio(bn, 2);
                let c = ratio(cn, 2);
                let crit = quadratic_negative_root_criterion(&a, &b, &c).unwrap();
                let num = quadratic_numerator(&a, &b, &c);
                let sturm = if num.degree() == Some(2) {
                    let zc = sturm_zone_counts(&num).unwrap();
                    zc.nonreal == 0 && zc.neg == 2
                } else {
                    false
                };
                assert_eq!(crit, sturm, "disagreement at b={b}, c={c}");
            }
        }
    }

    #[test]
    fn tp_windows() {
        let seq_21 = spec_value_sequence(&example_21_spec(), 12);
        assert_eq!(tp_minor_check(&seq_21, 3, 12).unwrap(), TpVerdict::Pass);
        // odd power fails with the pinned 3x3 witness
        let lin = spec(rat(1), &[(ratio(11, 10), 1)]);
        let seq = spec_value_sequence(&lin, 12);
        match tp_minor_check(&seq, 3, 12).unwrap() {
            TpVerdict::Fail { rows, cols, value } => {
                assert_eq!(rows, vec![0, 1, 2]);
                assert_eq!(cols, vec![1, 2, 3]);
                assert_eq!(value, ratio(-1, 10));
            }
            TpVerdict::Pass => panic!("expected a negative minor"),
        }
    }

    #[test]
    fn tp_window_argument_validation() {
        let seq = spec_value_sequence(&example_21_spec(), 6);
        assert_eq!(tp_minor_check(&seq, 3, 12), Err(Error::WindowTooSmall));
    }

    #[test]
    fn wagner_products() {
        let s21 = example_21_spec();
        assert!(wagner_product_check(&s21, &s21).unwrap());
        let trivial = spec(rat(1), &[]);
        assert!(wagner_product_check(&trivial, &s21).unwrap());
        // coefficient path: (n^2 + 1/8)^2
        let f = [ratio(1, 8), rat(0), rat(1)];
        assert!(wagner_product_check_coeffs(&f, &f).unwrap());
    }

    #[test]
    fn m_eulerian_small_cases() {
        assert_eq!(m_eulerian(1, 0), Poly::one());
        assert_eq!(m_eulerian(3, 0), Poly::one());
        assert_eq!(m_eulerian(1, 2), Poly::from_coeffs(vec![rat(1), rat(1)]));
        let s23 = m_eulerian_checked(2, 3).unwrap();
        assert_eq!(s23, Poly::from_coeffs(vec![rat(1), rat(8), rat(6)]));
        for m in 1..=3usize {
            for n in 0..=5usize {
                assert!(m_eulerian_checked(m, n).is_ok());
            }
        }
    }

    #[test]
    fn recursion_iterates_interlace() {
        for s in [
            example_21_spec(),
            spec(rat(5), &[(rat(2), 2)]),
            spec(rat(3), &[(ratio(1, 2), 1), (ratio(5, 2), 2)]),
        ] {
            assert!(recursion_interlacing_check(&s).unwrap());
        }
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(EulerianSpec::new(rat(1), vec![(rat(0), 1)]).is_err());
        assert!(EulerianSpec::new(rat(1), vec![(rat(-1), 2)]).is_err());
        assert!(EulerianSpec::new(rat(1), vec![(rat(2), 0)]).is_err());
        // f = -1/2 is fine: no integer in the chain
        assert!(EulerianSpec::new(rat(1), vec![(ratio(-1, 2), 2)]).is_ok());
    }
}
