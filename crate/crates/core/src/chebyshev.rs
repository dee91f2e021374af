//! Chebyshev polynomials with exact integer coefficients, and the bridge
//! identities that express `V` and `U` sequence values through them.
//!
//! The bridge substitutes `x^2 = -p^2/q` exactly (the square root itself is
//! never materialized; only even powers of `x` survive thanks to the parity
//! of `T_n` and `U_n`), so [`v_via_chebyshev`] and [`u_via_chebyshev`] are
//! exact integer routes independent of the binomial engines. A floating
//! cosine form ([`v_trig_approx`]) and the exact period-6 cycle for
//! `q = -p^2` ([`cycle_exact`]) cover the trigonometric reading.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::quadfield::SequenceParams;

/// Dense integer-coefficient polynomial in one variable; `coeffs[i]` is the
/// degree-`i` coefficient and trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `2x * cur - prev`, one step of both Chebyshev recurrences.
fn cheb_step(prev: &IntPolynomial, cur: &IntPolynomial) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); cur.coeffs.len() + 1];
    for (i, c) in cur.coeffs.iter().enumerate() {
        coeffs[i + 1] = 2 * c;
    }
    for (i, c) in prev.coeffs.iter().enumerate() {
        coeffs[i] -= c;
    }
    IntPolynomial::new(coeffs)
}

type ChebCache = LazyLock<Mutex<Vec<Arc<IntPolynomial>>>>;

static T_CACHE: ChebCache = LazyLock::new(|| {
    Mutex::new(vec![
        Arc::new(IntPolynomial::new(vec![BigInt::one()])),
        Arc::new(IntPolynomial::new(vec![BigInt::zero(), BigInt::one()])),
    ])
});

static U_CACHE: ChebCache = LazyLock::new(|| {
    Mutex::new(vec![
        Arc::new(IntPolynomial::new(vec![BigInt::one()])),
        Arc::new(IntPolynomial::new(vec![BigInt::zero(), BigInt::from(2)])),
    ])
});

fn cached_poly(cache: &ChebCache, n: u64) -> Arc<IntPolynomial> {
    let mut guard = cache.lock().expect("cache poisoned");
    while guard.len() <= n as usize {
        let next = cheb_step(&guard[guard.len() - 2], &guard[guard.len() - 1]);
        guard.push(Arc::new(next));
    }
    guard[n as usize].clone()
}

/// Chebyshev polynomial of the first kind:
/// `T_0 = 1`, `T_1 = x`, `T_(n+1) = 2x T_n - T_(n-1)`.
pub fn cheb_t(n: u64) -> IntPolynomial {
    (*cached_poly(&T_CACHE, n)).clone()
}

/// Chebyshev polynomial of the second kind:
/// `U_0 = 1`, `U_1 = 2x`, `U_(n+1) = 2x U_n - U_(n-1)`.
pub fn cheb_u(n: u64) -> IntPolynomial {
    (*cached_poly(&U_CACHE, n)).clone()
}

fn require_nonzero_params(params: &SequenceParams) -> Result<()> {
    if params.p.is_zero() || params.q.is_zero() {
        return Err(Error::ChebyshevZeroParam {
            p: params.p.clone(),
            q: params.q.clone(),
        });
    }
    Ok(())
}

/// Shared evaluation of `2^(shift) * p^n * x^(-n) * P(x/2)` at `x^2 = -p^2/q`
/// for a parity-`n` polynomial `P`: only even powers of `x` occur, and the
/// whole expression collapses to `sum_e c_(n-2e) p^(n-2e) (-4q)^e / 2^(n-shift)`.
fn bridge_sum(poly: &IntPolynomial, params: &SequenceParams, n: u64) -> BigInt {
    let minus_4q = -4 * &params.q;
    let mut p_pow = params.p.clone().pow(n as u32);
    let p_sq = &params.p * &params.p;
    let mut factor_pow = BigInt::one();
    let mut sum = BigInt::zero();
    for e in 0..=n / 2 {
        let j = (n - 2 * e) as usize;
        sum += poly.coeff(j) * &p_pow * &factor_pow;
        if e < n / 2 {
            p_pow = &p_pow / &p_sq; // p^(n-2e) with p != 0: exact
            factor_pow *= &minus_4q;
        }
    }
    sum
}

fn exact_shift_div(sum: BigInt, shift: u64, what: &str) -> BigInt {
    let denom = BigInt::one() << shift as usize;
    let (q, r) = num_integer::Integer::div_rem(&sum, &denom);
    assert!(r.is_zero(), "consistency failure: {what} evaluated to {sum}/{denom}");
    q
}

/// `V_n = 2 p^n x^(-n) T_n(x/2)` evaluated exactly under `x^2 = -p^2/q`.
/// Needs `p, q != 0` (the substitution divides by both) and `n >= 1`.
pub fn v_via_chebyshev(params: &SequenceParams, n: u64) -> Result<BigInt> {
    assert!(n >= 1, "the bridge form is defined for n >= 1");
    require_nonzero_params(params)?;
    let t = cached_poly(&T_CACHE, n);
    Ok(exact_shift_div(bridge_sum(&t, params, n), n - 1, "T bridge"))
}

/// `(r^(n+1) - s^(n+1))/(r - s) = p^n x^(-n) U_n(x/2)` evaluated exactly under
/// `x^2 = -p^2/q`; returns the `U`-sequence value at index `n + 1`.
/// Needs `p, q != 0`; `n = 0` is fine (the value is `U_1 = 1`).
pub fn u_via_chebyshev(params: &SequenceParams, n: u64) -> Result<BigInt> {
    require_nonzero_params(params)?;
    let u = cached_poly(&U_CACHE, n);
    Ok(exact_shift_div(bridge_sum(&u, params, n), n, "U bridge"))
}

/// `cos(n * arccos(t))` for `t` in `[-1, 1]`, via the first-kind three-term
/// recurrence. Unlike literal acos/cos calls this is exact at `t = 0`, where
/// the value alternates through 0 and +-1; an ulp of angle error there would
/// otherwise be amplified by the `p^n x^(-n)` prefactor.
fn cos_n_arccos(t: f64, n: u64) -> f64 {
    let mut prev = 1.0;
    let mut cur = t;
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Floating evaluation of `V_n = 2 p^n x^(-n) cos(n arccos(x/2))`.
///
/// Defined for `q < 0` and `p^2 + 4q <= 0`, where `x = sqrt(-p^2/q)` is real
/// with `x/2` in `[-1, 1]`. `p = 0` is allowed: `p^n x^(-n)` is evaluated as
/// `(sign(p) sqrt(-q))^n`, whose `p -> 0` limit is consistent because the
/// cosine factor vanishes at the odd indices where the sign would matter.
pub fn v_trig_approx(params: &SequenceParams, n: u64) -> Result<f64> {
    if !params.q.is_negative() || params.discriminant().is_positive() {
        return Err(Error::TrigDomain {
            p: params.p.clone(),
            q: params.q.clone(),
        });
    }
    let p = params.p.to_f64().expect("p fits in f64");
    let q = params.q.to_f64().expect("q fits in f64");
    let root_neg_q = (-q).sqrt();
    let ratio = if p == 0.0 {
        root_neg_q
    } else {
        p.signum() * root_neg_q
    };
    let x = p.abs() / root_neg_q;
    Ok(2.0 * ratio.powi(n as i32) * cos_n_arccos(x / 2.0, n))
}

/// Exact `V_n` for the family `q = -p^2`, where `V_n = 2 p^n cos(n pi/3)`
/// and `2 cos(n pi/3)` cycles through `2, 1, -1, -2, -1, 1`.
pub fn cycle_exact(p: &BigInt, n: u64) -> BigInt {
    assert!(n >= 1, "the cycle form is stated for n >= 1");
    const TWO_COS: [i64; 6] = [2, 1, -1, -2, -1, 1];
    p.pow(n as u32) * TWO_COS[(n % 6) as usize]
}
