//! Root-shift transforms and generalized Fibonacci sequences.
//!
//! If `r`, `s` solve `z^2 - pz - q = 0`, then `m + r`, `m + s` solve
//! `z^2 - (p + 2m) z - (q - pm - m^2) = 0`, and the binomial theorem turns
//! powers of the shifted roots into weighted sums of the base sequence.
//! [`shifted_v_sum`] and [`shifted_u_sum`] evaluate those binomial sums
//! directly from base-sequence values, so tests can pit them against the
//! engines running on [`shift_params`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engines::{Method, SequenceSlice};
use crate::error::{Error, Result};
use crate::quadfield::{roots_of, QuadElement, SeqKind, SequenceParams};

/// A base parameter pair together with the additive shifts applied to its
/// roots: `m` for sum-kind identities, `y` for difference-kind ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    pub base: SequenceParams,
    pub m: BigInt,
    pub y: BigInt,
}

impl ShiftSpec {
    pub fn new(base: SequenceParams, m: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            base,
            m: m.into(),
            y: y.into(),
        }
    }

    /// Parameters whose roots are `m + r`, `m + s`.
    pub fn v_shifted(&self) -> SequenceParams {
        shift_params(&self.base, &self.m)
    }

    /// Parameters whose roots are `y + r`, `y + s`.
    pub fn u_shifted(&self) -> SequenceParams {
        shift_params(&self.base, &self.y)
    }
}

/// `(p, q) -> (p + 2m, q - pm - m^2)`: the parameters whose roots are the
/// base roots shifted by `m`.
pub fn shift_params(base: &SequenceParams, m: &BigInt) -> SequenceParams {
    SequenceParams {
        p: &base.p + 2 * m,
        q: &base.q - &base.p * m - m * m,
        kind: base.kind,
    }
}

/// `(m+r)^n + (m+s)^n = sum_i C(n,i) m^(n-i) V_i`, evaluated from base
/// `V` values; equals `V_n` of [`shift_params`]`(base, m)` exactly.
pub fn shifted_v_sum(base: &SequenceParams, m: &BigInt, n: u64) -> BigInt {
    let v = SequenceSlice::generate(&base.with_kind(SeqKind::V), 0, n, Method::Recurrence)
        .expect("recurrence applies to V")
        .values;
    binomial_weighted_sum(&v, m, n)
}

/// `((y+r)^m - (y+s)^m)/(r - s) = sum_n C(m,n) y^(m-n) U_n`, evaluated from
/// base `U` values; equals `U_m` of [`shift_params`]`(base, y)` exactly.
pub fn shifted_u_sum(base: &SequenceParams, y: &BigInt, m_index: u64) -> BigInt {
    let u = SequenceSlice::generate(&base.with_kind(SeqKind::U), 0, m_index, Method::Recurrence)
        .expect("recurrence applies to U")
        .values;
    binomial_weighted_sum(&u, y, m_index)
}

fn binomial_weighted_sum(values: &[BigInt], shift: &BigInt, n: u64) -> BigInt {
    // shift powers m^(n-i), highest first
    let mut shift_pows = vec![BigInt::one(); n as usize + 1];
    for i in (0..n as usize).rev() {
        shift_pows[i] = &shift_pows[i + 1] * shift;
    }
    let mut sum = BigInt::zero();
    let mut c = BigInt::one(); // C(n, i)
    for i in 0..=n {
        sum += &c * &shift_pows[i as usize] * &values[i as usize];
        if i < n {
            let num = c * (n - i);
            let (q, r) = num_integer::Integer::div_rem(&num, &BigInt::from(i + 1));
            debug_assert!(r.is_zero());
            c = q;
        }
    }
    sum
}

/// Seeds plus parameters for `G_n = p G_(n-1) + q G_(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFibSpec {
    pub params: SequenceParams,
    pub g0: BigInt,
    pub g1: BigInt,
}

impl GenFibSpec {
    pub fn new(params: SequenceParams, g0: impl Into<BigInt>, g1: impl Into<BigInt>) -> Self {
        Self {
            params,
            g0: g0.into(),
            g1: g1.into(),
        }
    }
}

/// `G_n` by the recurrence.
pub fn gen_fib(spec: &GenFibSpec, n: u64) -> BigInt {
    let mut g0 = spec.g0.clone();
    let mut g1 = spec.g1.clone();
    for _ in 0..n {
        let g2 = &spec.params.p * &g1 + &spec.params.q * &g0;
        g0 = std::mem::replace(&mut g1, g2);
    }
    g0
}

/// `G_n = ((G_1 - s G_0) r^n - (G_1 - r G_0) s^n)/(r - s)` by exact
/// quadratic-field arithmetic. Errors when the discriminant is zero
/// (repeated root), where the closed form is undefined; use [`gen_fib`].
pub fn gen_fib_closed(spec: &GenFibSpec, n: u64) -> Result<BigInt> {
    if spec.params.discriminant().is_zero() {
        return Err(Error::RepeatedRoot);
    }
    let (r, s) = roots_of(&spec.params);
    let g0 = QuadElement::from_integer(spec.g0.clone());
    let g1 = QuadElement::from_integer(spec.g1.clone());
    let a = &g1 - &(&s * &g0);
    let b = &g1 - &(&r * &g0);
    let numer = &a * &r.pow(n) - &b * &s.pow(n);
    let ratio = numer
        .try_div(&(&r - &s))
        .expect("roots share a radicand");
    match ratio.to_integer() {
        Some(v) => Ok(v),
        None => panic!("consistency failure: closed G_{n} is not an integer"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{pair_doubling, pair_recurrence};

    #[test]
    fn shift_examples() {
        let base = SequenceParams::v(1, 1);
        assert_eq!(shift_params(&base, &BigInt::from(1)), SequenceParams::v(3, -1));
        // m = -2 sends phi, -1/phi to -1/phi^2, -phi^2, whose product is +1.
        assert_eq!(shift_params(&base, &BigInt::from(-2)), SequenceParams::v(-3, -1));
        assert_eq!(shift_params(&base, &BigInt::zero()), base);
    }

    #[test]
    fn shifted_roots_match_elementwise() {
        for p in -4..=4i64 {
            for q in -4..=4i64 {
                let base = SequenceParams::v(p, q);
                let (r, s) = roots_of(&base);
                for m in -4..=4i64 {
                    let shifted = shift_params(&base, &BigInt::from(m));
                    let (rm, sm) = roots_of(&shifted);
                    let mq = QuadElement::from_integer(m);
                    assert_eq!(rm, &mq + &r, "r at ({p},{q}) m={m}");
                    assert_eq!(sm, &mq + &s, "s at ({p},{q}) m={m}");
                }
            }
        }
    }

    #[test]
    fn shifted_v_sum_examples() {
        let base = SequenceParams::v(1, 1);
        // sum C(3,i) L_i = L_6
        assert_eq!(shifted_v_sum(&base, &BigInt::from(1), 3), BigInt::from(18));
        // alternating signs collapse to (-1)^n L_n
        assert_eq!(shifted_v_sum(&base, &BigInt::from(-1), 3), BigInt::from(-4));
        // m = 2 at n = 2: 5 L_2
        assert_eq!(shifted_v_sum(&base, &BigInt::from(2), 2), BigInt::from(15));
    }

    #[test]
    fn shifted_u_sum_examples() {
        let base = SequenceParams::v(1, 1);
        assert_eq!(shifted_u_sum(&base, &BigInt::from(1), 3), BigInt::from(8));
        for m in 0..=10u64 {
            assert_eq!(
                shifted_u_sum(&base, &BigInt::zero(), m),
                pair_recurrence(&base, m).0,
                "zero shift at m={m}"
            );
        }
        // (-1)-shift of (1,1) is (-1,1); U_4 there is -3 by the recurrence.
        assert_eq!(
            shifted_u_sum(&base, &BigInt::from(-1), 4),
            pair_recurrence(&SequenceParams::u(-1, 1), 4).0
        );
        assert_eq!(shifted_u_sum(&base, &BigInt::from(-1), 4), BigInt::from(-3));
    }

    #[test]
    fn shifted_sums_equal_shifted_engines() {
        for p in -4..=4i64 {
            for q in -4..=4i64 {
                let base = SequenceParams::v(p, q);
                for m in -4..=4i64 {
                    let m = BigInt::from(m);
                    let shifted = shift_params(&base, &m);
                    for n in 0..=40u64 {
                        let (u, v) = pair_recurrence(&shifted, n);
                        assert_eq!(
                            shifted_v_sum(&base, &m, n),
                            v,
                            "V sum at ({p},{q}) m={m} n={n}"
                        );
                        assert_eq!(
                            shifted_u_sum(&base, &m, n),
                            u,
                            "U sum at ({p},{q}) y={m} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn double_shift_reexpression() {
        // Shifting the roots of z^2 + 3z + 1 by 2 lands back on z^2 - z - 1,
        // so the weighted sum reproduces the Lucas numbers.
        let base = SequenceParams::v(-3, -1);
        assert_eq!(shift_params(&base, &BigInt::from(2)), SequenceParams::v(1, 1));
        for n in 0..=30u64 {
            assert_eq!(
                shifted_v_sum(&base, &BigInt::from(2), n),
                pair_doubling(&SequenceParams::v(1, 1), n).1,
                "n={n}"
            );
        }
    }

    #[test]
    fn gen_fib_examples() {
        let lucas = GenFibSpec::new(SequenceParams::v(1, 1), 2, 1);
        assert_eq!(gen_fib(&lucas, 6), BigInt::from(18));
        assert_eq!(gen_fib_closed(&lucas, 6).unwrap(), BigInt::from(18));
        let fib = GenFibSpec::new(SequenceParams::v(1, 1), 0, 1);
        assert_eq!(gen_fib(&fib, 7), BigInt::from(13));
        assert_eq!(gen_fib_closed(&fib, 7).unwrap(), BigInt::from(13));
        let pell = GenFibSpec::new(SequenceParams::v(2, 1), 0, 1);
        assert_eq!(gen_fib(&pell, 5), BigInt::from(29));
    }

    #[test]
    fn closed_form_rejects_repeated_root() {
        let spec = GenFibSpec::new(SequenceParams::v(2, -1), 1, 3);
        assert!(matches!(gen_fib_closed(&spec, 4), Err(Error::RepeatedRoot)));
        // The recurrence still works there.
        assert_eq!(gen_fib(&spec, 2), BigInt::from(5));
    }

    #[test]
    fn closed_form_matches_recurrence() {
        let param_set = [
            SequenceParams::v(1, 1),
            SequenceParams::v(2, 1),
            SequenceParams::v(1, -1),
            SequenceParams::v(3, -2),
            SequenceParams::v(-1, -1),
            SequenceParams::v(-2, 3),
            SequenceParams::v(0, 5),
            SequenceParams::v(5, 0),
        ];
        for params in &param_set {
            assert!(!params.discriminant().is_zero());
            for g0 in -5..=5i64 {
                for g1 in -5..=5i64 {
                    let spec = GenFibSpec::new(params.clone(), g0, g1);
                    for n in 0..=60u64 {
                        assert_eq!(
                            gen_fib_closed(&spec, n).unwrap(),
                            gen_fib(&spec, n),
                            "{params} G0={g0} G1={g1} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_seeds_recover_u_and_v() {
        for p in -3..=3i64 {
            for q in -3..=3i64 {
                let params = SequenceParams::v(p, q);
                let v_spec = GenFibSpec::new(params.clone(), 2, p);
                let u_spec = GenFibSpec::new(params.clone(), 0, 1);
                for n in 0..=20u64 {
                    let (u, v) = pair_recurrence(&params, n);
                    assert_eq!(gen_fib(&v_spec, n), v);
                    assert_eq!(gen_fib(&u_spec, n), u);
                }
            }
        }
    }
}
