//! Miller-Paris characteristic polynomials and transformation checks.
//!
//! The first operator T_omega(eps; rho) maps a polynomial H of degree at
//! most omega to the characteristic polynomial Q of the Euler-type argument
//! transformation; the second operator is realized as the composition of two
//! first operators. Both transformations are verified here as truncated
//! formal-series identities, and the operators feed the monomial and
//! Bernstein expansion engines used by the Narayana and Jacobi-Pineiro
//! modules.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial_series, factorial, pochhammer, rat, terminating_hypergeometric, vector_pochhammer,
    FormalSeries, Rational,
};
use crate::feulerian::{hatw_direct, hatw_from_coeffs, EulerianSpec};
use crate::polyalgebra::Poly;

/// Parameter tuple (delta, eps, rho, nu, omega_vec) of the transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPParams {
    pub delta: Rational,
    pub epsilon: Rational,
    pub rho: Rational,
    pub nu: Vec<Rational>,
    pub omega_vec: Vec<usize>,
}

impl MPParams {
    /// Validates the guards required by the second transformation:
    /// (rho-eps-omega)_omega, (rho-delta-omega)_omega and
    /// (1+delta+eps-rho)_omega all nonzero. The first transformation only
    /// needs the first of these; use [`MPParams::check_first_guard`].
    pub fn new(
        delta: Rational,
        epsilon: Rational,
        rho: Rational,
        nu: Vec<Rational>,
        omega_vec: Vec<usize>,
    ) -> Result<Self> {
        if nu.len() != omega_vec.len() {
            return Err(Error::LengthMismatch);
        }
        if omega_vec.contains(&0) {
            return Err(Error::InvalidSpec("omega components must be >= 1".into()));
        }
        if vector_pochhammer(&nu, &omega_vec)?.is_zero() {
            return Err(Error::InvalidSpec("(nu)_omega vanishes".into()));
        }
        let p = MPParams {
            delta,
            epsilon,
            rho,
            nu,
            omega_vec,
        };
        p.check_first_guard()?;
        let omega = p.omega();
        for (label, v) in [
            (
                "(rho-delta-omega)_omega",
                &p.rho - &p.delta - rat(omega as i64),
            ),
            (
                "(1+delta+eps-rho)_omega",
                Rational::one() + &p.delta + &p.epsilon - &p.rho,
            ),
        ] {
            if pochhammer(&v, omega).is_zero() {
                return Err(Error::GuardViolation(label.into()));
            }
        }
        Ok(p)
    }

    pub fn omega(&self) -> usize {
        self.omega_vec.iter().sum()
    }

    pub fn check_first_guard(&self) -> Result<()> {
        let omega = self.omega();
        let v = &self.rho - &self.epsilon - rat(omega as i64);
        if pochhammer(&v, omega).is_zero() {
            return Err(Error::GuardViolation("(rho-eps-omega)_omega".into()));
        }
        Ok(())
    }

    /// Normalized parameter-block polynomial H(t) = (nu+t)_omega / (nu)_omega.
    pub fn h_poly(&self) -> Poly {
        pochhammer_block_poly(&self.nu, &self.omega_vec)
    }
}

/// prod_j (nu_j + t)_{w_j} / (nu_j)_{w_j} as a polynomial in t.
pub fn pochhammer_block_poly(nu: &[Rational], omega_vec: &[usize]) -> Poly {
    let mut p = Poly::one();
    let mut norm = Rational::one();
    for (v, &w) in nu.iter().zip(omega_vec.iter()) {
        norm *= pochhammer(v, w);
        for l in 0..w {
            p = p.mul(&Poly::from_coeffs(vec![v + rat(l as i64), Rational::one()]));
        }
    }
    p.scale(&(Rational::one() / norm))
}

/// sum_n prod(top + n)_.. H(n) x^n / (prod(bottom + n)_.. n!) through
/// x^order: the weighted hypergeometric series both transformations act on.
pub fn weighted_series(
    top: &[Rational],
    bottom: &[Rational],
    h: &Poly,
    order: usize,
) -> Result<FormalSeries> {
    for b in bottom {
        if let Some(p) = crate::exactmath::nonpositive_integer_negation(b) {
            if p < order {
                return Err(Error::BottomPole(format!("{b}")));
            }
        }
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(&term * h.eval(&Rational::zero()));
    for n in 0..order {
        let nr = rat(n as i64);
        for t in top {
            term *= t + &nr;
        }
        for b in bottom {
            term /= b + &nr;
        }
        term /= rat(n as i64 + 1);
        coeffs.push(&term * h.eval(&rat(n as i64 + 1)));
    }
    Ok(FormalSeries::from_coeffs(coeffs))
}

/// First Miller-Paris operator applied to an arbitrary polynomial `h` of
/// degree <= omega, by exact interpolation: the image Q is the unique
/// polynomial of degree <= omega with
/// Q(k) = (rho)_k / (rho-eps-omega)_k * sum_{n<=k} (-k)_n (eps)_n h(n) /
/// ((rho)_n n!) for k = 0..omega.
pub fn first_mp_operator(
    epsilon: &Rational,
    rho: &Rational,
    h: &Poly,
    omega: usize,
) -> Result<Poly> {
    let shift = rho - epsilon - rat(omega as i64);
    if pochhammer(&shift, omega).is_zero() {
        return Err(Error::GuardViolation("(rho-eps-omega)_omega".into()));
    }
    if h.degree().is_some_and(|d| d > omega) {
        return Err(Error::Precondition(format!(
            "deg h = {} exceeds omega = {omega}",
            h.degree().unwrap()
        )));
    }
    let mut points = Vec::with_capacity(omega + 1);
    for k in 0..=omega {
        let kr = rat(k as i64);
        let mut sum = Rational::zero();
        let mut term = Rational::one();
        for n in 0..=k {
            let nr = rat(n as i64);
            if n > 0 {
                let prev = &nr - Rational::one();
                term *= -&kr + &prev;
                term *= epsilon + &prev;
                let denom = (rho + &prev) * &nr;
                if denom.is_zero() {
                    return Err(Error::BottomPole("(rho)_n".into()));
                }
                term /= denom;
            }
            sum += &term * h.eval(&nr);
        }
        let value = pochhammer(rho, k) / pochhammer(&shift, k) * sum;
        points.push((kr, value));
    }
    Ok(Poly::interpolate(&points))
}

/// First characteristic polynomial for a Pochhammer-block H, by the explicit
/// double sum:
/// Q(t) = 1/((nu)_omega (rho-eps-omega)_omega) * sum_k (eps)_k (1-rho+eps)_k
/// (rho-eps-omega+t)_{omega-k} / ((-1)^k k!) * sum_j ((-k)_j / j!)
/// (nu-eps-j)_omega.
pub fn first_mp_char_poly(
    epsilon: &Rational,
    rho: &Rational,
    nu: &[Rational],
    omega_vec: &[usize],
) -> Result<Poly> {
    if nu.len() != omega_vec.len() {
        return Err(Error::LengthMismatch);
    }
    let omega: usize = omega_vec.iter().sum();
    let shift = rho - epsilon - rat(omega as i64);
    if pochhammer(&shift, omega).is_zero() {
        return Err(Error::GuardViolation("(rho-eps-omega)_omega".into()));
    }
    let norm = vector_pochhammer(nu, omega_vec)?;
    if norm.is_zero() {
        return Err(Error::InvalidSpec("(nu)_omega vanishes".into()));
    }
    let mut acc = Poly::zero();
    for k in 0..=omega {
        let mut inner = Rational::zero();
        let mut cj = Rational::one();
        for j in 0..=k {
            let shifted: Vec<Rational> =
                nu.iter().map(|v| v - epsilon - rat(j as i64)).collect();
            inner += &cj * vector_pochhammer(&shifted, omega_vec)?;
            cj *= rat(-(k as i64)) + rat(j as i64);
            cj /= rat(j as i64 + 1);
        }
        if inner.is_zero() {
            continue;
        }
        let mut scalar = pochhammer(epsilon, k)
            * pochhammer(&(Rational::one() - rho + epsilon), k)
            / factorial(k);
        if k % 2 == 1 {
            scalar = -scalar;
        }
        // (shift + t)_{omega-k} as a polynomial in t
        let mut f = Poly::one();
        for l in 0..(omega - k) {
            f = f.mul(&Poly::from_coeffs(vec![
                &shift + rat(l as i64),
                Rational::one(),
            ]));
        }
        acc = acc.add(&f.scale(&(scalar * inner)));
    }
    let denom = norm * pochhammer(&shift, omega);
    Ok(acc.scale(&(Rational::one() / denom)))
}

/// Second characteristic polynomial as the composition of two first
/// operators: Qhat = T(delta; rho) [T(eps; rho) H].
pub fn second_mp_char_poly(params: &MPParams) -> Result<Poly> {
    let omega = params.omega();
    let inner = first_mp_operator(&params.epsilon, &params.rho, &params.h_poly(), omega)?;
    first_mp_operator(&params.delta, &params.rho, &inner, omega)
}

/// Same composition in the opposite order; used to probe commutativity.
pub fn second_mp_char_poly_swapped(params: &MPParams) -> Result<Poly> {
    let omega = params.omega();
    let inner = first_mp_operator(&params.delta, &params.rho, &params.h_poly(), omega)?;
    first_mp_operator(&params.epsilon, &params.rho, &inner, omega)
}

/// Second characteristic polynomial straight from the defining relation,
/// with no operator machinery: multiplying the transformation by
/// (1-x)^{delta+eps+omega-rho} and comparing Cauchy-product coefficients
/// pins the values
/// Qhat(k) = (rho)_k k! / ((rho-delta-omega)_k (rho-eps-omega)_k) *
/// sum_{i<=k} (delta)_i (eps)_i H(i) / ((rho)_i i!) *
/// (rho-delta-eps-omega)_{k-i} / (k-i)! for k = 0..omega.
pub fn second_mp_char_poly_convolution(params: &MPParams) -> Result<Poly> {
    let omega = params.omega();
    let wr = rat(omega as i64);
    let sd = &params.rho - &params.delta - &wr;
    let se = &params.rho - &params.epsilon - &wr;
    if pochhammer(&sd, omega).is_zero() || pochhammer(&se, omega).is_zero() {
        return Err(Error::GuardViolation(
            "(rho-delta-omega)_omega or (rho-eps-omega)_omega".into(),
        ));
    }
    let h = params.h_poly();
    let exponent = &params.rho - &params.delta - &params.epsilon - &wr;
    // partial sums of the weighted series and binomial weights
    let mut series = Vec::with_capacity(omega + 1);
    let mut weights = Vec::with_capacity(omega + 1);
    let mut term = Rational::one();
    let mut weight = Rational::one();
    for i in 0..=omega {
        if i > 0 {
            let prev = rat(i as i64 - 1);
            term *= &params.delta + &prev;
            term *= &params.epsilon + &prev;
            term /= (&params.rho + &prev) * rat(i as i64);
            weight *= &exponent + &prev;
            weight /= rat(i as i64);
        }
        series.push(&term * h.eval(&rat(i as i64)));
        weights.push(weight.clone());
    }
    let mut points = Vec::with_capacity(omega + 1);
    for k in 0..=omega {
        let conv: Rational = (0..=k).map(|i| &series[i] * &weights[k - i]).sum();
        let scale = pochhammer(&params.rho, k) * factorial(k)
            / (pochhammer(&sd, k) * pochhammer(&se, k));
        points.push((rat(k as i64), scale * conv));
    }
    Ok(Poly::interpolate(&points))
}

/// Verifies the first transformation through x^order:
/// F(delta, eps; rho | H | x) = (1-x)^{-delta} F(delta, rho-eps-omega; rho
/// | Q | x/(x-1)).
pub fn verify_first_mp(params: &MPParams, order: usize) -> Result<bool> {
    params.check_first_guard()?;
    let omega = params.omega();
    if order < 2 * omega + 4 {
        return Err(Error::Precondition(format!(
            "order {order} < 2*omega + 4 = {}",
            2 * omega + 4
        )));
    }
    Ok(first_mp_mismatch(params, order, false)?.is_none())
}

/// Verifies the second transformation through x^order:
/// F(delta, eps; rho | H | x) = (1-x)^{rho-delta-eps-omega}
/// F(rho-delta-omega, rho-eps-omega; rho | Qhat | x).
pub fn verify_second_mp(params: &MPParams, order: usize) -> Result<bool> {
    let omega = params.omega();
    if order < 2 * omega + 4 {
        return Err(Error::Precondition(format!(
            "order {order} < 2*omega + 4 = {}",
            2 * omega + 4
        )));
    }
    Ok(first_mp_mismatch(params, order, true)?.is_none())
}

/// Returns the first index at which the two sides of the selected
/// transformation disagree, with both coefficients, or None when they agree
/// through x^order.
pub fn first_mp_mismatch(
    params: &MPParams,
    order: usize,
    second: bool,
) -> Result<Option<(usize, Rational, Rational)>> {
    let omega = params.omega();
    let h = params.h_poly();
    let lhs = weighted_series(
        &[params.delta.clone(), params.epsilon.clone()],
        core::slice::from_ref(&params.rho),
        &h,
        order,
    )?;
    let rhs = if second {
        let qhat = second_mp_char_poly(params)?;
        let wr = rat(omega as i64);
        let transformed = weighted_series(
            &[
                &params.rho - &params.delta - &wr,
                &params.rho - &params.epsilon - &wr,
            ],
            core::slice::from_ref(&params.rho),
            &qhat,
            order,
        )?;
        let exponent = &params.delta + &params.epsilon + &wr - &params.rho;
        binomial_series(&exponent, order).mul(&transformed)
    } else {
        params.check_first_guard()?;
        let q = first_mp_operator(&params.epsilon, &params.rho, &h, omega)?;
        let shift = &params.rho - &params.epsilon - rat(omega as i64);
        let transformed = weighted_series(
            &[params.delta.clone(), shift],
            core::slice::from_ref(&params.rho),
            &q,
            order,
        )?;
        binomial_series(&params.delta, order).mul(&transformed.compose_x_over_x_minus_1())
    };
    for n in 0..=order {
        if lhs.coeff(n) != rhs.coeff(n) {
            return Ok(Some((n, lhs.coeff(n).clone(), rhs.coeff(n).clone())));
        }
    }
    Ok(None)
}

/// Off-pivot blocks of a spec as (nu, omega_vec).
fn off_pivot(spec: &EulerianSpec, pivot: usize) -> Result<(Vec<Rational>, Vec<usize>)> {
    if pivot >= spec.r() {
        return Err(Error::Precondition(format!(
            "pivot {pivot} out of range for {} blocks",
            spec.r()
        )));
    }
    let mut nu = Vec::new();
    let mut ov = Vec::new();
    for (i, (f, m)) in spec.blocks().iter().enumerate() {
        if i != pivot {
            nu.push(f.clone());
            ov.push(*m);
        }
    }
    Ok((nu, ov))
}

fn monomial_guards(spec: &EulerianSpec, pivot: usize, omega: usize) -> Result<()> {
    let (fp, mp) = spec.blocks()[pivot].clone();
    let a = spec.a();
    if pochhammer(&(&fp - a - rat(omega as i64)), omega).is_zero() {
        return Err(Error::GuardViolation("(f_pivot - a - omega)_omega".into()));
    }
    if a.is_negative() && pochhammer(&(Rational::one() + a + rat(mp as i64)), omega).is_zero() {
        return Err(Error::GuardViolation("(1 + a + m_pivot)_omega".into()));
    }
    Ok(())
}

/// Degree-reduced monomial expansion of hatw around the pivot block:
/// hatw(x) = sum_n ((-m)_n (f_p - a - omega)_n / ((f_p)_n n!)) Qhat(n) x^n
/// with Qhat the second characteristic polynomial of the off-pivot blocks.
/// Must equal [`hatw_direct`] exactly.
pub fn monomial_expansion(spec: &EulerianSpec, pivot: usize) -> Result<Poly> {
    let m = spec.m();
    let (nu, ov) = off_pivot(spec, pivot)?;
    let omega: usize = ov.iter().sum();
    monomial_guards(spec, pivot, omega)?;
    let (fp, mp) = spec.blocks()[pivot].clone();
    let a = spec.a();
    let qhat = if omega == 0 {
        Poly::one()
    } else {
        let params = MPParams {
            delta: a.clone(),
            epsilon: &fp + rat(mp as i64),
            rho: fp.clone(),
            nu,
            omega_vec: ov,
        };
        second_mp_char_poly(&params)?
    };
    let shifted = &fp - a - rat(omega as i64);
    let mut coeffs = Vec::with_capacity(m + 1);
    let mut pre = Rational::one();
    for n in 0..=m {
        if n > 0 {
            let prev = rat(n as i64 - 1);
            pre *= rat(-(m as i64)) + &prev;
            pre *= &shifted + &prev;
            let denom = (&fp + &prev) * rat(n as i64);
            if denom.is_zero() {
                return Err(Error::BottomPole("(f_pivot)_n".into()));
            }
            pre /= denom;
        }
        coeffs.push(&pre * qhat.eval(&rat(n as i64)));
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Bernstein coefficients of hatw in the basis x^k (1-x)^{m-k}:
/// c_k = (-1)^k (a)_k (-m)_k Q(k) / ((f_p)_k k!) with Q the first
/// characteristic polynomial of the off-pivot blocks. Reconstruction must
/// equal [`hatw_direct`].
pub fn bernstein_expansion(spec: &EulerianSpec, pivot: usize) -> Result<Vec<Rational>> {
    let m = spec.m();
    let (nu, ov) = off_pivot(spec, pivot)?;
    let omega: usize = ov.iter().sum();
    let (fp, mp) = spec.blocks()[pivot].clone();
    let a = spec.a();
    let q = if omega == 0 {
        Poly::one()
    } else {
        let eps = &fp + rat(mp as i64);
        first_mp_char_poly(&eps, &fp, &nu, &ov)?
    };
    let mut out = Vec::with_capacity(m + 1);
    let mut pre = Rational::one();
    for k in 0..=m {
        if k > 0 {
            let prev = rat(k as i64 - 1);
            pre *= a + &prev;
            pre *= rat(-(m as i64)) + &prev;
            let denom = (&fp + &prev) * rat(k as i64);
            if denom.is_zero() {
                return Err(Error::BottomPole("(f_pivot)_k".into()));
            }
            pre /= denom;
            pre = -pre;
        }
        out.push(&pre * q.eval(&rat(k as i64)));
    }
    Ok(out)
}

/// sum_k c_k x^k (1-x)^{N-k} with N = len - 1.
pub fn bernstein_reconstruct(coeffs: &[Rational]) -> Poly {
    let n = coeffs.len() - 1;
    let one_minus_x = Poly::from_coeffs(vec![Rational::one(), -Rational::one()]);
    let mut acc = Poly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        acc = acc.add(&Poly::monomial(c.clone(), k).mul(&one_minus_x.pow(n - k)));
    }
    acc
}

/// Connection identity: (1-y)^m hatw(a; F | y/(y-1)) equals the f-Eulerian
/// polynomial with weight f_p - a - omega and the transformed coefficient
/// polynomial (f_p + .)_{m_p} [T(a; f_p) (off-pivot blocks)](.) / (f)_m.
/// Checked as an exact polynomial identity; `order` only bounds the internal
/// series margin of the right-hand construction.
pub fn connection_whf_whr(spec: &EulerianSpec, pivot: usize, order: usize) -> Result<bool> {
    let m = spec.m();
    let _ = order.max(m);
    let (nu, ov) = off_pivot(spec, pivot)?;
    let omega: usize = ov.iter().sum();
    monomial_guards(spec, pivot, omega)?;
    let (fp, mp) = spec.blocks()[pivot].clone();
    let a = spec.a();

    let lhs = hatw_direct(spec)?.mobius_reflect(m);

    let rhat = if omega == 0 {
        Poly::one()
    } else {
        let h = pochhammer_block_poly(&nu, &ov);
        first_mp_operator(a, &fp, &h, omega)?
    };
    let pivot_poly = pochhammer_block_poly(core::slice::from_ref(&fp), &[mp]);
    let f_new = pivot_poly.mul(&rhat);
    let a_new = &fp - a - rat(omega as i64);
    let rhs = hatw_from_coeffs(&a_new, f_new.coeffs())?;
    Ok(lhs == rhs)
}

/// Two-sided terminating-sum identity behind palindromicity, with every
/// Gamma ratio collapsed to Pochhammer products. The evaluation requires a
/// positive integer `b`; other configurations are outside exact reach.
pub fn gasper_identity_check(
    n: usize,
    b: &Rational,
    c: &Rational,
    f: &[Rational],
    m_vec: &[usize],
) -> Result<bool> {
    if f.len() != m_vec.len() {
        return Err(Error::LengthMismatch);
    }
    let b_int = if b.is_integer() && b.is_positive() {
        usize::try_from(u64::try_from(&b.to_integer()).map_err(|_| {
            Error::Precondition("b too large".into())
        })?)
        .map_err(|_| Error::Precondition("b too large".into()))?
    } else {
        return Err(Error::Precondition(
            "collapsing evaluation requires a positive integer b".into(),
        ));
    };
    let a = rat(-(n as i64));
    let msum: usize = m_vec.iter().sum();
    // exact form of the convergence condition Re(c - a - b - sum m) > 0
    let excess = c - &a - b - rat(msum as i64);
    if !excess.is_positive() {
        return Err(Error::Precondition(
            "parametric excess must be positive".into(),
        ));
    }
    let f_plus_m: Vec<Rational> = f
        .iter()
        .zip(m_vec.iter())
        .map(|(fi, &mi)| fi + rat(mi as i64))
        .collect();

    let mut top_l = vec![a.clone(), b.clone()];
    top_l.extend(f_plus_m.iter().cloned());
    let mut bottom_l = vec![c.clone()];
    bottom_l.extend(f.iter().cloned());
    let lhs = terminating_hypergeometric(&top_l, &bottom_l)? / factorial(n);

    let one = Rational::one();
    let mut top_r = vec![b.clone(), &one - c + b];
    top_r.extend(f.iter().map(|fi| &one - fi + b));
    let mut bottom_r = vec![&one + b - &a];
    bottom_r.extend(
        f.iter()
            .zip(m_vec.iter())
            .map(|(fi, &mi)| &one - fi - rat(mi as i64) + b),
    );
    let fr = terminating_hypergeometric(&top_r, &bottom_r)?;
    // Gamma(c)/Gamma(c-b) = (c-b)_b and Gamma(1+b-a) = (b+n)! for b in N
    let gamma_ratio = pochhammer(&(c - b), b_int);
    let fm_norm = vector_pochhammer(f, m_vec)?;
    let shifted: Vec<Rational> = f.iter().map(|fi| fi - b).collect();
    let fmb = vector_pochhammer(&shifted, m_vec)?;
    let rhs = gamma_ratio * fmb * fr / (fm_norm * factorial(b_int + n));
    Ok(lhs == rhs)
}

/// Terminating summation formula relating the full block sum at -k to the
/// pivot-reduced inner sums; for k > m the left side must vanish.
pub fn terminating_sum_check(k: usize, f: &[Rational], m_vec: &[usize]) -> Result<bool> {
    if f.is_empty() || f.len() != m_vec.len() {
        return Err(Error::LengthMismatch);
    }
    let m: usize = m_vec.iter().sum();
    let m1 = m_vec[0];
    let omega = m - m1;
    let f_plus_m: Vec<Rational> = f
        .iter()
        .zip(m_vec.iter())
        .map(|(fi, &mi)| fi + rat(mi as i64))
        .collect();
    let mut top = vec![rat(-(k as i64))];
    top.extend(f_plus_m.iter().cloned());
    let lhs = terminating_hypergeometric(&top, f)?;
    if k > m && !lhs.is_zero() {
        return Ok(false);
    }

    let tail_f = &f[1..];
    let tail_m = &m_vec[1..];
    let tail_fm = &f_plus_m[1..];
    let mut sum = Rational::zero();
    for j in 0..=k.min(omega) {
        let mut top_in = vec![rat(-(j as i64))];
        top_in.extend(tail_fm.iter().cloned());
        let inner = terminating_hypergeometric(&top_in, tail_f)?;
        let _ = tail_m;
        let mut t = pochhammer(&rat(-(k as i64)), j)
            * pochhammer(&rat(k as i64 - m as i64), omega - j)
            * pochhammer(&f_plus_m[0], j)
            / factorial(j);
        if j % 2 == 1 {
            t = -t;
        }
        sum += t * inner;
    }
    let pre_den = pochhammer(&rat(-(m as i64)), omega) * pochhammer(&f[0], k);
    if pre_den.is_zero() {
        return Err(Error::BottomPole("(f_1)_k".into()));
    }
    let rhs = pochhammer(&rat(-(m as i64)), k) / pre_den * sum;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn narayana_h(d: usize, m: usize) -> (Vec<Rational>, Vec<usize>) {
        let nu: Vec<Rational> = (3..=d as i64).map(rat).collect();
        let ov = vec![m - 1; d.saturating_sub(2)];
        (nu, ov)
    }

    #[test]
    fn operator_interpolation_matches_double_sum() {
        // several Pochhammer-block inputs, both routes must agree
        let cases: Vec<(Rational, Rational, Vec<Rational>, Vec<usize>)> = vec![
            (rat(3), rat(2), vec![rat(3)], vec![1]),
            (ratio(7, 2), ratio(1, 3), vec![ratio(3, 2)], vec![2]),
            (rat(5), rat(2), vec![rat(3), ratio(5, 2)], vec![1, 2]),
            (ratio(-4, 3), ratio(2, 5), vec![ratio(7, 4)], vec![3]),
        ];
        for (eps, rho, nu, ov) in cases {
            let omega: usize = ov.iter().sum();
            let h = pochhammer_block_poly(&nu, &ov);
            let a = first_mp_operator(&eps, &rho, &h, omega).unwrap();
            let b = first_mp_char_poly(&eps, &rho, &nu, &ov).unwrap();
            assert_eq!(a, b, "eps={eps} rho={rho}");
        }
    }

    #[test]
    fn operator_keeps_normalization() {
        let h = pochhammer_block_poly(&[ratio(5, 2)], &[2]);
        let q = first_mp_operator(&rat(4), &ratio(1, 2), &h, 2).unwrap();
        assert_eq!(q.eval(&Rational::zero()), Rational::one());
    }

    #[test]
    fn narayana_degree_drop() {
        // T_{(d-2)m}(m+1; 2) applied to the degree-(d-2)m block polynomial
        // drops to degree (d-2)m - (d-1) for m >= 2
        for (d, m) in [(3usize, 2usize), (3, 3), (4, 2), (4, 3)] {
            let nu: Vec<Rational> = (3..=d as i64).map(rat).collect();
            let ov = vec![m; d - 2];
            let omega = (d - 2) * m;
            let r = first_mp_char_poly(&rat(m as i64 + 1), &rat(2), &nu, &ov).unwrap();
            assert_eq!(r.degree(), Some(omega - (d - 1)), "d={d} m={m}");
        }
        // m = 1 does not drop
        let r = first_mp_char_poly(&rat(2), &rat(2), &[rat(3)], &[1]).unwrap();
        assert_eq!(r.degree(), Some(1));
    }

    #[test]
    fn first_interpolation_conditions() {
        // (-m)_k Q(k) / (f1)_k reproduces the full block sum
        // F(-k, f+m; f) at k = 0..omega
        let spec = EulerianSpec::new(
            ratio(7, 2),
            vec![(ratio(3, 2), 2), (ratio(5, 2), 1), (rat(4), 1)],
        )
        .unwrap();
        let m = spec.m();
        let (f1, m1) = spec.blocks()[0].clone();
        let nu: Vec<Rational> = spec.f_vec()[1..].to_vec();
        let ov: Vec<usize> = spec.m_vec()[1..].to_vec();
        let omega = m - m1;
        let eps = &f1 + rat(m1 as i64);
        let q = first_mp_char_poly(&eps, &f1, &nu, &ov).unwrap();
        for k in 0..=omega {
            let mut top = vec![rat(-(k as i64))];
            top.extend(spec.f_plus_m_vec());
            let rhs = terminating_hypergeometric(&top, &spec.f_vec()).unwrap();
            let lhs =
                q.eval(&rat(k as i64)) * pochhammer(&rat(-(m as i64)), k) / pochhammer(&f1, k);
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn convolution_matches_composition() {
        let cases = vec![
            MPParams::new(rat(6), rat(3), rat(2), vec![rat(3), rat(4)], vec![1, 1]).unwrap(),
            MPParams::new(rat(7), rat(5), rat(2), vec![rat(3)], vec![3]).unwrap(),
            MPParams::new(
                ratio(5, 2),
                ratio(4, 3),
                ratio(9, 4),
                vec![ratio(7, 5), rat(3)],
                vec![1, 2],
            )
            .unwrap(),
            MPParams::new(ratio(-3, 2), ratio(1, 5), ratio(8, 3), vec![ratio(5, 4)], vec![2])
                .unwrap(),
        ];
        for p in cases {
            assert_eq!(
                second_mp_char_poly(&p).unwrap(),
                second_mp_char_poly_convolution(&p).unwrap(),
                "delta={} eps={} rho={}",
                p.delta,
                p.epsilon,
                p.rho
            );
        }
    }

    #[test]
    fn composition_orders_agree() {
        let params = MPParams::new(
            ratio(5, 2),
            ratio(4, 3),
            ratio(9, 4),
            vec![ratio(7, 5), rat(3)],
            vec![1, 2],
        )
        .unwrap();
        let a = second_mp_char_poly(&params).unwrap();
        let b = second_mp_char_poly_swapped(&params).unwrap();
        assert_eq!(a, b);
        // delta <-> eps symmetry of the composed polynomial
        let swapped = MPParams::new(
            params.epsilon.clone(),
            params.delta.clone(),
            params.rho.clone(),
            params.nu.clone(),
            params.omega_vec.clone(),
        )
        .unwrap();
        assert_eq!(a, second_mp_char_poly(&swapped).unwrap());
    }

    #[test]
    fn verify_zero_omega_classical_transformations() {
        let params = MPParams {
            delta: ratio(1, 2),
            epsilon: ratio(2, 3),
            rho: ratio(7, 5),
            nu: vec![],
            omega_vec: vec![],
        };
        assert!(verify_first_mp(&params, 12).unwrap());
        assert!(verify_second_mp(&params, 12).unwrap());
    }

    #[test]
    fn verify_first_and_second_examples() {
        let p1 = MPParams::new(
            ratio(1, 2),
            ratio(1, 3),
            ratio(5, 2),
            vec![ratio(3, 2)],
            vec![1],
        )
        .unwrap();
        assert!(verify_first_mp(&p1, 12).unwrap());
        let p2 = MPParams::new(
            ratio(1, 2),
            ratio(3, 4),
            ratio(7, 3),
            vec![ratio(5, 4)],
            vec![2],
        )
        .unwrap();
        assert!(verify_second_mp(&p2, 14).unwrap());
        // Narayana instance d=3, m=2: delta = m+d, eps = m+1, rho = 2
        let (nu, ov) = narayana_h(3, 2);
        let pn = MPParams::new(rat(5), rat(3), rat(2), nu, ov).unwrap();
        assert!(verify_first_mp(&pn, 14).unwrap());
        assert!(verify_second_mp(&pn, 14).unwrap());
    }

    #[test]
    fn monomial_expansion_cross_route() {
        // r = 1 reduces to the plain coefficient form
        let s = EulerianSpec::new(ratio(5, 2), vec![(ratio(4, 3), 2)]).unwrap();
        assert_eq!(monomial_expansion(&s, 0).unwrap(), hatw_direct(&s).unwrap());
        // r = 2 with fractional data
        let s =
            EulerianSpec::new(ratio(1, 3), vec![(ratio(3, 2), 2), (ratio(7, 4), 1)]).unwrap();
        assert_eq!(monomial_expansion(&s, 0).unwrap(), hatw_direct(&s).unwrap());
        // pivot independence at equal block lengths
        let s = EulerianSpec::new(rat(2), vec![(ratio(5, 4), 1), (ratio(8, 3), 1)]).unwrap();
        assert_eq!(
            monomial_expansion(&s, 0).unwrap(),
            monomial_expansion(&s, 1).unwrap()
        );
    }

    #[test]
    fn bernstein_expansion_reconstructs() {
        for s in [
            EulerianSpec::new(rat(5), vec![(rat(2), 2)]).unwrap(),
            EulerianSpec::new(ratio(1, 2), vec![(ratio(1, 3), 1)]).unwrap(),
            EulerianSpec::new(ratio(7, 3), vec![(ratio(5, 2), 2), (ratio(1, 4), 1)]).unwrap(),
        ] {
            let c = bernstein_expansion(&s, 0).unwrap();
            assert_eq!(bernstein_reconstruct(&c), hatw_direct(&s).unwrap());
        }
    }

    #[test]
    fn bernstein_expansion_standard_narayana() {
        let s = EulerianSpec::new(rat(5), vec![(rat(2), 2)]).unwrap();
        let c = bernstein_expansion(&s, 0).unwrap();
        assert_eq!(c, vec![rat(1), rat(5), rat(5)]);
    }

    #[test]
    fn connection_identity() {
        // r = 1: a guise of Euler's transformation
        let s = EulerianSpec::new(ratio(5, 2), vec![(ratio(4, 3), 2)]).unwrap();
        assert!(connection_whf_whr(&s, 0, 12).unwrap());
        // r = 2 fractional
        let s =
            EulerianSpec::new(ratio(1, 3), vec![(ratio(3, 2), 2), (ratio(7, 4), 2)]).unwrap();
        assert!(connection_whf_whr(&s, 0, 12).unwrap());
    }

    #[test]
    fn gasper_narayana_pairs() {
        // palindromic pairing for d=3, m=2: all n = 0..K
        let (d, m) = (3usize, 2usize);
        let k_deg = (d - 1) * (m - 1);
        for n in 0..=k_deg {
            let b = rat((m + d) as i64);
            let c = rat((m * d + 2) as i64) - rat(n as i64);
            let f: Vec<Rational> = (2..=d as i64).map(rat).collect();
            let mv = vec![m - 1; d - 1];
            assert!(gasper_identity_check(n, &b, &c, &f, &mv).unwrap(), "n={n}");
        }
    }

    #[test]
    fn gasper_rejects_noncollapsing() {
        let r = gasper_identity_check(1, &ratio(5, 2), &rat(7), &[rat(2)], &[1]);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn terminating_sum_examples() {
        for k in 0..=4 {
            assert!(
                terminating_sum_check(k, &[rat(2), rat(3)], &[1, 1]).unwrap(),
                "k={k}"
            );
        }
        // vanishing beyond m: k = 3, 4 > m = 2
        let mut top = vec![rat(-3)];
        top.extend([rat(3), rat(4)]);
        assert!(terminating_hypergeometric(&top, &[rat(2), rat(3)])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn guards_rejected() {
        // (rho - eps - omega)_omega = 0
        let r = MPParams::new(rat(1), rat(2), rat(4), vec![rat(3)], vec![1]);
        assert!(matches!(r, Err(Error::GuardViolation(_))));
    }
}
