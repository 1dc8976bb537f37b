//! d-dimensional Narayana polynomials by independent routes.
//!
//! N_{d,m} counts ascents over ballot lattice paths from the origin to
//! (m,...,m) in the ordered chamber. The module builds it five ways: direct
//! path enumeration (the ground-truth oracle), the Hoggatt-binomial
//! coefficient formula, the f-Eulerian generating-function route, the
//! explicit characteristic-polynomial formula, and Bernstein-basis
//! reconstructions in three different bases. All routes must agree exactly.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, pochhammer, rat, Rational};
use crate::feulerian::{hatw_direct, EulerianSpec};
use crate::millerparis::{
    first_mp_char_poly, pochhammer_block_poly, second_mp_char_poly,
    second_mp_char_poly_convolution, MPParams,
};
use crate::polyalgebra::{sturm_zone_counts, Poly};

/// Dimension/side parameters with the derived degree data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NarayanaParams {
    pub d: usize,
    pub m: usize,
}

impl NarayanaParams {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        if d < 2 || m < 1 {
            return Err(Error::InvalidSpec(format!(
                "need d >= 2 and m >= 1, got d={d}, m={m}"
            )));
        }
        Ok(NarayanaParams { d, m })
    }

    /// Degree K = (d-1)(m-1).
    pub fn k_deg(&self) -> usize {
        (self.d - 1) * (self.m - 1)
    }

    /// M = (d-1)m.
    pub fn m_big(&self) -> usize {
        (self.d - 1) * self.m
    }

    /// L = (d-2)(m-1).
    pub fn l_deg(&self) -> usize {
        (self.d - 2) * (self.m - 1)
    }
}

/// Ground-truth route: depth-first enumeration of all ballot paths with the
/// chamber constraint checked incrementally, counting ascents per path.
/// Budget d*m <= 16 keeps the walk comfortably at desk scale.
pub fn ballot_path_oracle(d: usize, m: usize) -> Result<Poly> {
    NarayanaParams::new(d, m)?;
    if d * m > 16 {
        return Err(Error::BudgetExceeded(format!("d*m = {} > 16", d * m)));
    }
    let mut counts = vec![0u64; (d - 1) * (m - 1) + 1];
    let mut pos = vec![0usize; d];
    // step index of the previous move, usize::MAX before the first
    dfs_paths(&mut pos, d, m, usize::MAX, 0, &mut counts);
    let coeffs = counts
        .iter()
        .map(|&c| Rational::from_integer(c.into()))
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

fn dfs_paths(
    pos: &mut Vec<usize>,
    d: usize,
    m: usize,
    last: usize,
    ascents: usize,
    counts: &mut Vec<u64>,
) {
    if pos.iter().all(|&x| x == m) {
        counts[ascents] += 1;
        return;
    }
    for step in 0..d {
        // chamber 0 <= x_1 <= ... <= x_d: incrementing coordinate `step`
        // keeps it iff it stays <= its right neighbour
        if pos[step] >= m {
            continue;
        }
        if step + 1 < d && pos[step] + 1 > pos[step + 1] {
            continue;
        }
        let asc = if last != usize::MAX && last < step { 1 } else { 0 };
        pos[step] += 1;
        dfs_paths(pos, d, m, step, ascents + asc, counts);
        pos[step] -= 1;
    }
}

/// d-Hoggatt binomial: prod_{k=1}^{d} (m+k)_j / (k)_j.
pub fn hoggatt_binomial(d: usize, m: usize, j: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 1..=d as i64 {
        acc *= pochhammer(&rat(m as i64 + k), j) / pochhammer(&rat(k), j);
    }
    acc
}

/// Hankel-determinant identity for Hoggatt binomials:
/// <k; m>_d = (-1)^{d(d-1)/2} det[ binom(k+i+j, m+d-1) ]_{i,j=0}^{d-1},
/// where <k; m>_d is the Hoggatt binomial with j = k - m. Requires k >= m
/// and a desk-scale d.
pub fn hankel_hoggatt_check(d: usize, k: usize, m: usize) -> Result<bool> {
    if !(1..=5).contains(&d) {
        return Err(Error::BudgetExceeded(format!("d = {d} outside 1..=5")));
    }
    if k < m {
        return Err(Error::Precondition("need k >= m".into()));
    }
    let lhs = hoggatt_binomial(d, m, k - m);
    let mat: Vec<Vec<Rational>> = (0..d)
        .map(|i| (0..d).map(|j| binomial(k + i + j, m + d - 1)).collect())
        .collect();
    let mut det = det_small(&mat);
    if (d * (d - 1) / 2) % 2 == 1 {
        det = -det;
    }
    Ok(lhs == det)
}

fn det_small(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pv;
            let row: Vec<Rational> = a[col][col..n].to_vec();
            for (c, pivot_val) in (col..n).zip(row.iter()) {
                let t = &factor * pivot_val;
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Coefficient route: N(d,m,k) = sum_{j<=k} ((-dm-1)_{k-j} / (k-j)!)
/// <m+j; m>_d for k = 0..K. Coefficients beyond K are asserted to vanish.
pub fn narayana_sulanke(d: usize, m: usize) -> Result<Poly> {
    let p = NarayanaParams::new(d, m)?;
    let k_deg = p.k_deg();
    let hoggatt: Vec<Rational> = (0..=k_deg + 2).map(|j| hoggatt_binomial(d, m, j)).collect();
    let exponent = rat(-(d as i64 * m as i64) - 1);
    let weights: Vec<Rational> = (0..=k_deg + 2)
        .map(|i| pochhammer(&exponent, i) / factorial(i))
        .collect();
    let coeff = |k: usize| -> Rational {
        (0..=k).map(|j| &weights[k - j] * &hoggatt[j]).sum()
    };
    let coeffs: Vec<Rational> = (0..=k_deg).map(coeff).collect();
    for k in (k_deg + 1)..=(k_deg + 2) {
        assert!(
            coeff(k).is_zero(),
            "coefficient beyond the degree bound does not vanish at k={k}"
        );
    }
    let n = Poly::from_coeffs(coeffs);
    assert_eq!(n.degree(), Some(k_deg), "degree must equal (d-1)(m-1)");
    Ok(n)
}

/// The f-Eulerian spec generating N_{d,m}: weight a = m+d over the blocks
/// (k, m-1) for k = 2..d.
pub fn narayana_spec(d: usize, m: usize) -> Result<EulerianSpec> {
    NarayanaParams::new(d, m)?;
    let blocks = if m == 1 {
        Vec::new()
    } else {
        (2..=d as i64).map(|k| (rat(k), m - 1)).collect()
    };
    EulerianSpec::new(rat((m + d) as i64), blocks)
}

/// Generating-function route: N_{d,m} as the f-Eulerian numerator of the
/// spec above. Must equal [`narayana_sulanke`].
pub fn narayana_via_feulerian(d: usize, m: usize) -> Result<Poly> {
    hatw_direct(&narayana_spec(d, m)?)
}

/// Second characteristic polynomial for the Narayana reduction, pinned
/// straight from the defining transformation by Cauchy-product convolution
/// (delta = m+d, eps = m+1, rho = 2 on the (3..d, m-1) block polynomial).
/// Independent of the operator-composition route.
pub fn hatqn_direct(d: usize, m: usize) -> Result<Poly> {
    let p = NarayanaParams::new(d, m)?;
    if p.l_deg() == 0 {
        return Ok(Poly::one());
    }
    let nu: Vec<Rational> = (3..=d as i64).map(rat).collect();
    let ov = vec![m - 1; d - 2];
    let params = MPParams::new(rat((m + d) as i64), rat(m as i64 + 1), rat(2), nu, ov)?;
    second_mp_char_poly_convolution(&params)
}

/// Same polynomial by the operator composition with delta = m+d,
/// eps = m+1, rho = 2 acting on the (3..d, m-1) block polynomial.
pub fn hatqn_composition(d: usize, m: usize) -> Result<Poly> {
    let p = NarayanaParams::new(d, m)?;
    if p.l_deg() == 0 {
        return Ok(Poly::one());
    }
    let nu: Vec<Rational> = (3..=d as i64).map(rat).collect();
    let ov = vec![m - 1; d - 2];
    let params = MPParams::new(rat((m + d) as i64), rat(m as i64 + 1), rat(2), nu, ov)?;
    second_mp_char_poly(&params)
}

/// Explicit route: N_{d,m}(x) = (1/(K+1)) sum_j binom(M, j) binom(K+1, j+1)
/// Qhat_L(j) x^j, with Qhat_L computed by both the direct formula and the
/// operator composition. The two must agree; a mismatch panics since it
/// would mean one of the formulas is transcribed wrongly.
pub fn narayana_explicit(d: usize, m: usize) -> Result<Poly> {
    let p = NarayanaParams::new(d, m)?;
    let qhat = hatqn_direct(d, m)?;
    let by_composition = hatqn_composition(d, m)?;
    assert_eq!(
        qhat, by_composition,
        "characteristic-polynomial routes disagree at d={d}, m={m}"
    );
    let (k_deg, m_big) = (p.k_deg(), p.m_big());
    let coeffs: Vec<Rational> = (0..=k_deg)
        .map(|j| {
            binomial(m_big, j) * binomial(k_deg + 1, j + 1) * qhat.eval(&rat(j as i64))
                / rat(k_deg as i64 + 1)
        })
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// Bernstein-basis variants for N_{d,m}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernsteinVariant {
    /// Basis x^j (1-x)^{K-j} via Q_L = T_L(m+1; 2) H_L.
    KBasis,
    /// Basis x^j (1-x)^{M-j} via T_L(m+d; 2) H_L.
    MBasis,
    /// Basis x^j (1-x)^{M-1-j} via R = T_{(d-2)m}(m+1; 2) P_{(d-2)m},
    /// whose degree drops to L-1.
    MMinus1Basis,
}

/// H_L blocks (3..d, m-1).
fn h_l_blocks(d: usize, m: usize) -> (Vec<Rational>, Vec<usize>) {
    if m == 1 || d == 2 {
        return (Vec::new(), Vec::new());
    }
    ((3..=d as i64).map(rat).collect(), vec![m - 1; d - 2])
}

/// The characteristic polynomial R of the M-1 variant, degree L-1 for
/// d >= 3 and m >= 2 (constant 1 when d = 2).
pub fn r_poly(d: usize, m: usize) -> Result<Poly> {
    NarayanaParams::new(d, m)?;
    if d == 2 {
        return Ok(Poly::one());
    }
    if m == 1 {
        // the double-sum vanishing that causes the degree drop needs m >= 2;
        // the corresponding expansion is invalid here
        return Err(Error::Precondition(
            "the degree-dropped variant requires m >= 2 when d >= 3".into(),
        ));
    }
    let nu: Vec<Rational> = (3..=d as i64).map(rat).collect();
    let ov = vec![m; d - 2];
    first_mp_char_poly(&rat(m as i64 + 1), &rat(2), &nu, &ov)
}

/// Bernstein coefficients of N_{d,m} in the requested basis; reconstruction
/// equals [`narayana_sulanke`].
pub fn narayana_bernstein(d: usize, m: usize, variant: BernsteinVariant) -> Result<Vec<Rational>> {
    let p = NarayanaParams::new(d, m)?;
    let (k_deg, m_big, l_deg) = (p.k_deg(), p.m_big(), p.l_deg());
    let (nu, ov) = h_l_blocks(d, m);
    match variant {
        BernsteinVariant::KBasis => {
            let q = if l_deg == 0 {
                Poly::one()
            } else {
                first_mp_char_poly(&rat(m as i64 + 1), &rat(2), &nu, &ov)?
            };
            // c_j = (-1)^j (-K)_j (m+d)_j Q(j) / ((2)_j j!)
            Ok((0..=k_deg)
                .map(|j| {
                    let mut c = pochhammer(&rat(-(k_deg as i64)), j)
                        * pochhammer(&rat((m + d) as i64), j)
                        * q.eval(&rat(j as i64))
                        / (pochhammer(&rat(2), j) * factorial(j));
                    if j % 2 == 1 {
                        c = -c;
                    }
                    c
                })
                .collect())
        }
        BernsteinVariant::MBasis => {
            let q = if l_deg == 0 {
                Poly::one()
            } else {
                first_mp_char_poly(&rat((m + d) as i64), &rat(2), &nu, &ov)?
            };
            // c_j = (-1)^j (-M)_j (m+1)_j Q(j) / ((2)_j j!)
            Ok((0..=m_big)
                .map(|j| {
                    let mut c = pochhammer(&rat(-(m_big as i64)), j)
                        * pochhammer(&rat(m as i64 + 1), j)
                        * q.eval(&rat(j as i64))
                        / (pochhammer(&rat(2), j) * factorial(j));
                    if j % 2 == 1 {
                        c = -c;
                    }
                    c
                })
                .collect())
        }
        BernsteinVariant::MMinus1Basis => {
            let r = r_poly(d, m)?;
            if d >= 3 {
                assert_eq!(
                    r.degree(),
                    Some(l_deg - 1),
                    "degree drop to L-1 fails at d={d}, m={m}"
                );
            }
            // c_j = (-1)^j (1-M)_j (m+2)_j R(j) / ((2)_j j!)
            Ok((0..=(m_big - 1))
                .map(|j| {
                    let mut c = pochhammer(&rat(1 - m_big as i64), j)
                        * pochhammer(&rat(m as i64 + 2), j)
                        * r.eval(&rat(j as i64))
                        / (pochhammer(&rat(2), j) * factorial(j));
                    if j % 2 == 1 {
                        c = -c;
                    }
                    c
                })
                .collect())
        }
    }
}

/// Multidimensional Catalan number (md)! prod_{j<d} j! / (m+j)!; equals
/// N_{d,m}(1).
pub fn catalan_multidim(d: usize, m: usize) -> Rational {
    let mut acc = factorial(m * d);
    for j in 0..d {
        acc *= factorial(j) / factorial(m + j);
    }
    acc
}

/// Coefficient-wise self-reciprocity N(x) = x^K N(1/x).
pub fn palindrome_check(d: usize, m: usize) -> Result<bool> {
    let n = narayana_sulanke(d, m)?;
    Ok(n == n.reversed())
}

/// Checks the all-negative-zeros statement: the weight hypothesis
/// f_j + m_j < a holds for every block by construction, and the Sturm
/// counts must confirm neg = K, nonreal = 0.
pub fn negative_zero_check(d: usize, m: usize) -> Result<bool> {
    let spec = narayana_spec(d, m)?;
    let a = spec.a().clone();
    let hyp = spec
        .blocks()
        .iter()
        .all(|(f, mj)| (f + rat(*mj as i64)) < a);
    if !hyp {
        return Ok(false);
    }
    let n = narayana_sulanke(d, m)?;
    if n.degree() == Some(0) {
        return Ok(true);
    }
    let zc = sturm_zone_counts(&n)?;
    Ok(zc.nonreal == 0 && zc.neg == NarayanaParams::new(d, m)?.k_deg())
}

/// Palindromicity at the characteristic-polynomial level:
/// (t+2)_{d-2} Qhat_L(t) = (K-t+2)_{d-2} Qhat_L(K-t) as polynomials.
/// Requires m > d-2 so that agreement on K+1 points forces identity.
pub fn remark_q_symmetry_check(d: usize, m: usize) -> Result<bool> {
    let p = NarayanaParams::new(d, m)?;
    if m <= d - 2 {
        return Err(Error::Precondition(format!(
            "polynomial identity requires m > d-2, got d={d}, m={m}"
        )));
    }
    let qhat = hatqn_direct(d, m)?;
    let k_deg = p.k_deg() as i64;
    // (t+2)_{d-2} as a polynomial in t
    let rising = pochhammer_block_poly(&[rat(2)], &[d - 2]).scale(&pochhammer(&rat(2), d - 2));
    let lhs = rising.mul(&qhat);
    // mirrored side: substitute K - t
    let reflect = |p: &Poly| -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::from_coeffs(vec![rat(k_deg), -Rational::one()]);
        let mut pw = Poly::one();
        for c in p.coeffs() {
            acc = acc.add(&pw.scale(c));
            pw = pw.mul(&lin);
        }
        acc
    };
    let rhs = reflect(&rising).mul(&reflect(&qhat));
    Ok(lhs == rhs)
}
