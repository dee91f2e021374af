//! Sequence engines: five independent ways to compute `V_n = r^n + s^n` and
//! `U_n = (r^n - s^n)/(r - s)` for the roots of `z^2 - pz - q = 0`.
//!
//! - [`pair_recurrence`]: the defining linear recurrence, `O(n)` steps.
//! - [`pair_doubling`]: index-halving identities, `O(log n)` steps.
//! - [`v_closed`]: three closed binomial forms for `V_n` ([`ClosedForm`]).
//! - [`u_closed`]: the closed binomial form for `U_n`.
//! - [`v_trace`] / [`u_ratio`]: exact root-power arithmetic in the quadratic
//!   extension, via [`crate::quadfield`].
//!
//! [`idenl_sides`] exposes both sides of the coefficient identity that makes
//! the closed forms integral; [`exp2_coeff`] and [`koshy_coeff`] are the two
//! classical expressions for that coefficient. All functions are pure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::quadfield::{roots_of, SeqKind, SequenceParams};

/// Identifies one computation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    Doubling,
    ClosedExp1,
    ClosedExp2,
    ClosedExp3,
    ClosedIdenF,
    QuadTrace,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Recurrence,
        Method::Doubling,
        Method::ClosedExp1,
        Method::ClosedExp2,
        Method::ClosedExp3,
        Method::ClosedIdenF,
        Method::QuadTrace,
    ];

    /// The closed `V` forms do not produce `U` values and vice versa;
    /// the other routes produce both.
    pub fn applies_to(self, kind: SeqKind) -> bool {
        match self {
            Method::ClosedExp1 | Method::ClosedExp2 | Method::ClosedExp3 => kind == SeqKind::V,
            Method::ClosedIdenF => kind == SeqKind::U,
            _ => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Doubling => "doubling",
            Method::ClosedExp1 => "exp1",
            Method::ClosedExp2 => "exp2",
            Method::ClosedExp3 => "exp3",
            Method::ClosedIdenF => "idenf",
            Method::QuadTrace => "trace",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "recurrence" => Ok(Method::Recurrence),
            "doubling" => Ok(Method::Doubling),
            "exp1" => Ok(Method::ClosedExp1),
            "exp2" => Ok(Method::ClosedExp2),
            "exp3" => Ok(Method::ClosedExp3),
            "idenf" => Ok(Method::ClosedIdenF),
            "trace" => Ok(Method::QuadTrace),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// Selects one of the closed binomial forms for `V_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `V_n = 2^(1-n) * sum_i C(n,2i) p^(n-2i) (p^2+4q)^i`
    Exp1,
    /// `V_n = sum_k (n/(n-k)) C(n-k,k) p^(n-2k) q^k`
    Exp2,
    /// `V_n = sum_k (2 C(n-k,k) - C(n-k-1,k)) p^(n-2k) q^k`
    Exp3,
}

/// A consecutive run of sequence values; `values[i]` is the value at index
/// `start + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSlice {
    pub params: SequenceParams,
    pub start: u64,
    pub values: Vec<BigInt>,
}

impl SequenceSlice {
    /// Generates `start..=end` of the sequence selected by `params.kind`.
    ///
    /// The recurrence method runs a single forward pass; every other method
    /// is evaluated independently per index.
    pub fn generate(params: &SequenceParams, start: u64, end: u64, method: Method) -> Result<Self> {
        assert!(start <= end, "slice start must not exceed end");
        if !method.applies_to(params.kind) {
            return Err(Error::InapplicableMethod {
                method: method.name().to_string(),
                kind: params.kind.to_string(),
            });
        }
        let values = if method == Method::Recurrence {
            let (mut g0, mut g1) = seeds(params);
            let mut values = Vec::with_capacity((end - start + 1) as usize);
            for n in 0..=end {
                if n >= start {
                    values.push(g0.clone());
                }
                let next = &params.p * &g1 + &params.q * &g0;
                g0 = g1;
                g1 = next;
            }
            values
        } else {
            (start..=end)
                .map(|n| match params.kind {
                    SeqKind::V => v_value(params, n, method),
                    SeqKind::U => u_value(params, n, method),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self {
            params: params.clone(),
            start,
            values,
        })
    }
}

fn seeds(params: &SequenceParams) -> (BigInt, BigInt) {
    match params.kind {
        SeqKind::V => (BigInt::from(2), params.p.clone()),
        SeqKind::U => (BigInt::zero(), BigInt::one()),
    }
}

/// Divides exactly, panicking if the division leaves a remainder. Used where
/// integrality is a proven invariant, so a remainder means broken arithmetic.
fn exact_div(numer: BigInt, denom: &BigInt) -> BigInt {
    let (q, r) = numer.div_rem(denom);
    assert!(
        r.is_zero(),
        "consistency failure: {numer} is not divisible by {denom}",
        numer = &q * denom + &r,
    );
    q
}

fn exact_halve(x: BigInt) -> BigInt {
    exact_div(x, &BigInt::from(2))
}

/// Binomial coefficient with out-of-range arguments mapped to zero
/// (negative `m` or `k`, or `k > m`).
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut c = BigInt::one();
    for j in 1..=k {
        // c = C(m-k+j, j) stays integral at every step
        c = exact_div(c * (m - k + j), &BigInt::from(j));
    }
    c
}

/// `(U_n, V_n)` by the defining recurrence `G_n = p G_(n-1) + q G_(n-2)`,
/// seeds `(0, 1)` for `U` and `(2, p)` for `V`.
pub fn pair_recurrence(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let (mut u0, mut u1) = (BigInt::zero(), BigInt::one());
    let (mut v0, mut v1) = (BigInt::from(2), params.p.clone());
    for _ in 0..n {
        let u2 = &params.p * &u1 + &params.q * &u0;
        u0 = std::mem::replace(&mut u1, u2);
        let v2 = &params.p * &v1 + &params.q * &v0;
        v0 = std::mem::replace(&mut v1, v2);
    }
    (u0, v0)
}

/// `(U_n, V_n)` in `O(log n)` index doublings:
/// `U_2k = U_k V_k`, `V_2k = V_k^2 - 2(-q)^k`, and the exact half-steps
/// `U_(k+1) = (p U_k + V_k)/2`, `V_(k+1) = (p V_k + D U_k)/2`.
pub fn pair_doubling(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let disc = params.discriminant();
    let neg_q = -&params.q;
    // (u, v, w) = (U_k, V_k, (-q)^k), starting at k = 0
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut w = BigInt::one();
    for i in (0..u64::BITS - n.leading_zeros()).rev() {
        let u2 = &u * &v;
        let v2 = &v * &v - 2 * &w;
        w = &w * &w;
        u = u2;
        v = v2;
        if (n >> i) & 1 == 1 {
            let u_next = exact_halve(&params.p * &u + &v);
            let v_next = exact_halve(&params.p * &v + &disc * &u);
            u = u_next;
            v = v_next;
            w *= &neg_q;
        }
    }
    (u, v)
}

/// `V_n` by one of the closed binomial forms. Requires `n >= 1`; index 0 is
/// the seed `V_0 = 2` and is handled by callers (the coefficient `n/(n-k)`
/// is indeterminate at `n = k = 0`).
pub fn v_closed(params: &SequenceParams, n: u64, variant: ClosedForm) -> BigInt {
    assert!(n >= 1, "closed forms are defined for n >= 1");
    match variant {
        ClosedForm::Exp1 => v_exp1(params, n),
        ClosedForm::Exp2 => v_exp2(params, n),
        ClosedForm::Exp3 => v_exp3(params, n),
    }
}

fn power_table(base: &BigInt, up_to: u64) -> Vec<BigInt> {
    let mut pows = Vec::with_capacity(up_to as usize + 1);
    pows.push(BigInt::one());
    for _ in 0..up_to {
        let next = pows.last().unwrap() * base;
        pows.push(next);
    }
    pows
}

/// One multiplicative Pascal step along a row: `C(n, j) -> C(n, j+1)`.
fn binom_step_k(c: BigInt, n: u64, j: u64) -> BigInt {
    exact_div(c * (n - j), &BigInt::from(j + 1))
}

fn v_exp1(params: &SequenceParams, n: u64) -> BigInt {
    let disc = params.discriminant();
    let p_pows = power_table(&params.p, n);
    let d_pows = power_table(&disc, n / 2);
    let mut sum = BigInt::zero();
    let mut c = BigInt::one(); // C(n, 2i)
    for i in 0..=n / 2 {
        sum += &c * &p_pows[(n - 2 * i) as usize] * &d_pows[i as usize];
        if 2 * i + 2 <= n {
            c = binom_step_k(c, n, 2 * i);
            c = binom_step_k(c, n, 2 * i + 1);
        }
    }
    // The power-of-two denominator cancels exactly; anything else is fatal.
    exact_div(sum, &(BigInt::one() << (n - 1) as usize))
}

fn v_exp2(params: &SequenceParams, n: u64) -> BigInt {
    let p_pows = power_table(&params.p, n);
    let q_pows = power_table(&params.q, n / 2);
    let mut sum = BigInt::zero();
    let mut c = BigInt::one(); // C(n-k, k)
    for k in 0..=n / 2 {
        // n * C(n-k, k) / (n-k) is an integer; divide after multiplying.
        let coeff = exact_div(BigInt::from(n) * &c, &BigInt::from(n - k));
        sum += coeff * &p_pows[(n - 2 * k) as usize] * &q_pows[k as usize];
        if k < n / 2 {
            // C(n-k, k) -> C(n-k, k+1) -> C(n-k-1, k+1)
            let row = exact_div(c * (n - 2 * k), &BigInt::from(k + 1));
            c = exact_div(row * (n - 2 * k - 1), &BigInt::from(n - k));
        }
    }
    sum
}

fn v_exp3(params: &SequenceParams, n: u64) -> BigInt {
    let p_pows = power_table(&params.p, n);
    let q_pows = power_table(&params.q, n / 2);
    let mut sum = BigInt::zero();
    let mut c = BigInt::one(); // C(n-k, k)
    for k in 0..=n / 2 {
        // C(n-k-1, k) = C(n-k, k) (n-2k)/(n-k); zero when 2k = n.
        let c_short = exact_div(&c * (n - 2 * k), &BigInt::from(n - k));
        sum += (2 * &c - c_short) * &p_pows[(n - 2 * k) as usize] * &q_pows[k as usize];
        if k < n / 2 {
            let row = exact_div(c * (n - 2 * k), &BigInt::from(k + 1));
            c = exact_div(row * (n - 2 * k - 1), &BigInt::from(n - k));
        }
    }
    sum
}

/// `U_n = sum_k C(n-1-k, k) p^(n-1-2k) q^k` for `n >= 1`; `U_0 = 0` is the
/// seed and is handled by callers.
pub fn u_closed(params: &SequenceParams, n: u64) -> BigInt {
    assert!(n >= 1, "the closed U form is defined for n >= 1");
    let m = n - 1;
    let p_pows = power_table(&params.p, m);
    let q_pows = power_table(&params.q, m / 2);
    let mut sum = BigInt::zero();
    let mut c = BigInt::one(); // C(m-k, k)
    for k in 0..=m / 2 {
        sum += &c * &p_pows[(m - 2 * k) as usize] * &q_pows[k as usize];
        if k < m / 2 {
            let row = exact_div(c * (m - 2 * k), &BigInt::from(k + 1));
            c = exact_div(row * (m - 2 * k - 1), &BigInt::from(m - k));
        }
    }
    sum
}

/// `V_n = r^n + s^n`, computed exactly in the quadratic extension. For an
/// irrational root `s^n` is the conjugate of `r^n` and the sum is its trace;
/// a perfect-square discriminant normalizes the roots to two plain
/// rationals, and summing the explicit powers covers that case too. Panics
/// if the result comes out non-integral, which would falsify the
/// integrality theorem the engines rest on.
pub fn v_trace(params: &SequenceParams, n: u64) -> BigInt {
    let (r, s) = roots_of(params);
    let sum = r.pow(n).try_add(&s.pow(n)).expect("roots share a radicand");
    match sum.to_integer() {
        Some(v) => v,
        None => panic!("consistency failure: r^{n} + s^{n} = {:?} is not an integer", sum),
    }
}

/// `U_n = (r^n - s^n)/(r - s)` by exact surd-coefficient extraction.
///
/// For a zero discriminant the ratio degenerates; the confluent value
/// `U_n = n (p/2)^(n-1)` is returned instead (p is even there).
pub fn u_ratio(params: &SequenceParams, n: u64) -> BigInt {
    let disc = params.discriminant();
    if disc.is_zero() {
        if n == 0 {
            return BigInt::zero();
        }
        let half_p = exact_halve(params.p.clone());
        return BigInt::from(n) * half_p.pow((n - 1) as u32);
    }
    let (r, s) = roots_of(params);
    let diff = r.pow(n).try_sub(&s.pow(n)).expect("conjugate radicands");
    let ratio = diff
        .try_div(&r.try_sub(&s).expect("conjugate radicands"))
        .expect("same radicand");
    match ratio.to_integer() {
        Some(v) => v,
        None => panic!("consistency failure: (r^{n} - s^{n})/(r - s) is not an integer"),
    }
}

/// Both sides of the coefficient identity behind the closed forms:
/// left `2^(2k-n+1) * sum_(i=k)^(n/2) C(n,2i) C(i,k)` (exact rational),
/// right `(n/(n-k)) C(n-k,k)` (integer). Their equality is what callers
/// check; nothing here assumes it.
pub fn idenl_sides(n: u64, k: u64) -> (BigRational, BigInt) {
    assert!(n >= 1, "the identity needs n >= 1");
    assert!(k <= n / 2, "k must not exceed n/2");
    let mut sum = BigInt::zero();
    for i in k..=n / 2 {
        sum += binomial(n as i64, 2 * i as i64) * binomial(i as i64, k as i64);
    }
    let lhs = BigRational::from_integer(sum) * pow2_rational(2 * k as i64 + 1 - n as i64);
    (lhs, exp2_coeff(n, k))
}

fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// The closed-form coefficient `(n/(n-k)) C(n-k, k)`, computed as an exact
/// integer. Requires `n >= 1` and `k <= n/2`.
pub fn exp2_coeff(n: u64, k: u64) -> BigInt {
    assert!(n >= 1 && k <= n / 2);
    exact_div(
        BigInt::from(n) * binomial((n - k) as i64, k as i64),
        &BigInt::from(n - k),
    )
}

/// The same coefficient written as `C(n-k, k) + C(n-k-1, k-1)`.
pub fn koshy_coeff(n: u64, k: u64) -> BigInt {
    binomial((n - k) as i64, k as i64) + binomial(n as i64 - k as i64 - 1, k as i64 - 1)
}

/// `V_n` by any applicable method, with the `n = 0` seed handled uniformly.
pub fn v_value(params: &SequenceParams, n: u64, method: Method) -> Result<BigInt> {
    if !method.applies_to(SeqKind::V) {
        return Err(Error::InapplicableMethod {
            method: method.name().to_string(),
            kind: SeqKind::V.to_string(),
        });
    }
    Ok(match method {
        Method::Recurrence => pair_recurrence(params, n).1,
        Method::Doubling => pair_doubling(params, n).1,
        Method::QuadTrace => v_trace(params, n),
        Method::ClosedExp1 if n == 0 => BigInt::from(2),
        Method::ClosedExp1 => v_closed(params, n, ClosedForm::Exp1),
        Method::ClosedExp2 if n == 0 => BigInt::from(2),
        Method::ClosedExp2 => v_closed(params, n, ClosedForm::Exp2),
        Method::ClosedExp3 if n == 0 => BigInt::from(2),
        Method::ClosedExp3 => v_closed(params, n, ClosedForm::Exp3),
        Method::ClosedIdenF => unreachable!("rejected above"),
    })
}

/// `U_n` by any applicable method, with the `n = 0` seed handled uniformly.
pub fn u_value(params: &SequenceParams, n: u64, method: Method) -> Result<BigInt> {
    if !method.applies_to(SeqKind::U) {
        return Err(Error::InapplicableMethod {
            method: method.name().to_string(),
            kind: SeqKind::U.to_string(),
        });
    }
    Ok(match method {
        Method::Recurrence => pair_recurrence(params, n).0,
        Method::Doubling => pair_doubling(params, n).0,
        Method::QuadTrace => u_ratio(params, n),
        Method::ClosedIdenF if n == 0 => BigInt::zero(),
        Method::ClosedIdenF => u_closed(params, n),
        _ => unreachable!("rejected above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent recurrence oracle used to freeze expected values.
    fn oracle(p: i64, q: i64, kind: SeqKind, n: u64) -> BigInt {
        let (mut g0, mut g1) = match kind {
            SeqKind::V => (BigInt::from(2), BigInt::from(p)),
            SeqKind::U => (BigInt::zero(), BigInt::one()),
        };
        for _ in 0..n {
            let g2 = p * &g1 + q * &g0;
            g0 = std::mem::replace(&mut g1, g2);
        }
        g0
    }

    #[test]
    fn recurrence_examples() {
        let fib_lucas = SequenceParams::v(1, 1);
        assert_eq!(
            pair_recurrence(&fib_lucas, 5),
            (BigInt::from(5), BigInt::from(11))
        );
        let pell = SequenceParams::v(2, 1);
        assert_eq!(pair_recurrence(&pell, 4), (BigInt::from(12), BigInt::from(34)));
        // p = 0: V_n vanishes at odd n and is 2 q^(n/2) at even n.
        let p0 = SequenceParams::v(0, 3);
        assert_eq!(pair_recurrence(&p0, 4), (BigInt::zero(), BigInt::from(18)));
    }

    #[test]
    fn closed_v_examples() {
        assert_eq!(
            v_closed(&SequenceParams::v(1, 1), 5, ClosedForm::Exp2),
            BigInt::from(11)
        );
        assert_eq!(
            v_closed(&SequenceParams::v(1, 1), 3, ClosedForm::Exp1),
            BigInt::from(4)
        );
        assert_eq!(
            v_closed(&SequenceParams::v(3, -1), 2, ClosedForm::Exp2),
            BigInt::from(7)
        );
    }

    #[test]
    fn closed_u_examples() {
        assert_eq!(u_closed(&SequenceParams::u(1, 1), 5), BigInt::from(5));
        assert_eq!(u_closed(&SequenceParams::u(1, 1), 1), BigInt::one());
        assert_eq!(u_closed(&SequenceParams::u(2, 1), 4), BigInt::from(12));
    }

    #[test]
    fn doubling_examples() {
        let params = SequenceParams::v(1, 1);
        // V_6 = V_3^2 - 2(-1)^3 and V_5 = V_3 V_2 - (-1)^2 in doubling terms.
        assert_eq!(pair_doubling(&params, 6).1, BigInt::from(18));
        assert_eq!(pair_doubling(&params, 5).1, BigInt::from(11));
        for (p, q) in [(1, 1), (-3, 2), (0, 0), (5, -7)] {
            let params = SequenceParams::v(p, q);
            assert_eq!(
                pair_doubling(&params, 0),
                (BigInt::zero(), BigInt::from(2)),
                "seeds at ({p},{q})"
            );
        }
    }

    #[test]
    fn trace_and_ratio_examples() {
        let params = SequenceParams::v(1, 1);
        assert_eq!(v_trace(&params, 3), BigInt::from(4));
        assert_eq!(u_ratio(&params, 3), BigInt::from(2));
        assert_eq!(v_trace(&SequenceParams::v(-1, -1), 4), BigInt::from(-1));
        assert_eq!(v_trace(&SequenceParams::v(5, 5), 2), BigInt::from(35));
    }

    #[test]
    fn ratio_handles_square_and_zero_discriminants() {
        // (3, -2) has discriminant 1: rational roots 2 and 1, U_n = 2^n - 1.
        let square = SequenceParams::v(3, -2);
        for n in 0..=10u64 {
            assert_eq!(u_ratio(&square, n), oracle(3, -2, SeqKind::U, n));
        }
        // (2, -1) has a repeated root 1: U_n = n, V_n = 2.
        let degenerate = SequenceParams::v(2, -1);
        for n in 0..=10u64 {
            assert_eq!(u_ratio(&degenerate, n), BigInt::from(n));
            assert_eq!(v_trace(&degenerate, n), BigInt::from(2));
        }
    }

    #[test]
    fn idenl_examples() {
        let (lhs, rhs) = idenl_sides(4, 1);
        assert_eq!(lhs, BigRational::from_integer(BigInt::from(4)));
        assert_eq!(rhs, BigInt::from(4));
        let (lhs, rhs) = idenl_sides(4, 0);
        assert_eq!(lhs, BigRational::from_integer(BigInt::one()));
        assert_eq!(rhs, BigInt::one());
        let (lhs, rhs) = idenl_sides(6, 3);
        assert_eq!(rhs, BigInt::from(2));
        assert_eq!(lhs, BigRational::from_integer(rhs));
    }

    #[test]
    fn coefficient_forms_agree() {
        for n in 1..=24u64 {
            for k in 0..=n / 2 {
                assert_eq!(exp2_coeff(n, k), koshy_coeff(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }

    #[test]
    fn cross_method_smoke_grid() {
        for p in -3..=3i64 {
            for q in -3..=3i64 {
                let params = SequenceParams::v(p, q);
                for n in 0..=24u64 {
                    let want_v = oracle(p, q, SeqKind::V, n);
                    let want_u = oracle(p, q, SeqKind::U, n);
                    for method in Method::ALL {
                        if method.applies_to(SeqKind::V) {
                            assert_eq!(
                                v_value(&params, n, method).unwrap(),
                                want_v,
                                "V {method} at ({p},{q},{n})"
                            );
                        }
                        if method.applies_to(SeqKind::U) {
                            assert_eq!(
                                u_value(&params, n, method).unwrap(),
                                want_u,
                                "U {method} at ({p},{q},{n})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn special_parameter_rows() {
        // q = 0: V_n = p^n.
        let params = SequenceParams::v(3, 0);
        for n in 1..=6u64 {
            assert_eq!(
                v_value(&params, n, Method::Doubling).unwrap(),
                BigInt::from(3).pow(n as u32)
            );
        }
        // p = 0: zero at odd n, 2 q^(n/2) at even n.
        let params = SequenceParams::v(0, 2);
        for n in 1..=8u64 {
            let want = if n % 2 == 1 {
                BigInt::zero()
            } else {
                2 * BigInt::from(2).pow((n / 2) as u32)
            };
            assert_eq!(v_value(&params, n, Method::ClosedExp3).unwrap(), want);
        }
    }

    #[test]
    fn slice_satisfies_recurrence() {
        let params = SequenceParams::u(2, 1);
        let slice = SequenceSlice::generate(&params, 3, 12, Method::Recurrence).unwrap();
        assert_eq!(slice.values.len(), 10);
        for i in 2..slice.values.len() {
            assert_eq!(
                slice.values[i],
                2 * &slice.values[i - 1] + &slice.values[i - 2]
            );
        }
        assert_eq!(slice.values[0], oracle(2, 1, SeqKind::U, 3));
    }

    #[test]
    fn slice_rejects_inapplicable_method() {
        let params = SequenceParams::u(1, 1);
        assert!(SequenceSlice::generate(&params, 0, 4, Method::ClosedExp1).is_err());
    }

    #[test]
    fn methods_round_trip_names() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
    }
}
