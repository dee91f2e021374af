//! A catalog of binomial/Lucas/Fibonacci identities, each checked by two
//! independent exact evaluation paths.
//!
//! Every [`IdentityCase`] pairs a left-hand evaluator with a right-hand one
//! that goes through different code (closed form vs. doubling, direct
//! binomial sum vs. recurrence, quadratic-field trace vs. iteration), so a
//! bug in either side shows up as a mismatch rather than vanishing into a
//! self-comparison. [`check`] sweeps an index range exactly and reports the
//! first counterexample, if any.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::engines::{
    binomial, exp2_coeff, idenl_sides, koshy_coeff, pair_doubling, pair_recurrence, u_ratio,
    v_closed, v_trace, ClosedForm,
};
use crate::error::{Error, Result};
use crate::quadfield::SequenceParams;
use crate::transforms::shifted_v_sum;

pub type Eval1 = Box<dyn Fn(u64) -> BigRational + Send + Sync>;
pub type Eval2 = Box<dyn Fn(u64, u64) -> BigRational + Send + Sync>;

/// The two evaluation paths of one identity: single-index identities map
/// `n` to a value, double-index ones map `(n, k)` with `0 <= k <= n/2`.
pub enum Evaluators {
    Single { lhs: Eval1, rhs: Eval1 },
    Double { lhs: Eval2, rhs: Eval2 },
}

/// A registered identity with its validity domain and source.
pub struct IdentityCase {
    pub id: &'static str,
    /// The formula in plain text.
    pub summary: &'static str,
    /// Where the identity is from.
    pub citation: &'static str,
    /// Smallest index the identity is claimed for.
    pub n_min: u64,
    pub eval: Evaluators,
}

impl IdentityCase {
    pub fn is_double_index(&self) -> bool {
        matches!(self.eval, Evaluators::Double { .. })
    }
}

/// Outcome of sweeping one identity up to `n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub n_max: u64,
    pub cases_checked: u64,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub lhs: String,
    pub rhs: String,
}

fn int(value: BigInt) -> BigRational {
    BigRational::from_integer(value)
}

fn lucas_rec(n: u64) -> BigInt {
    pair_recurrence(&SequenceParams::v(1, 1), n).1
}

fn lucas_dbl(n: u64) -> BigInt {
    pair_doubling(&SequenceParams::v(1, 1), n).1
}

fn fib_dbl(n: u64) -> BigInt {
    pair_doubling(&SequenceParams::v(1, 1), n).0
}

fn pow5(e: u64) -> BigInt {
    BigInt::from(5).pow(e as u32)
}

/// `sum_i C(n,i) * weight(i) * L_i` with Lucas values from the recurrence.
fn lucas_binomial_sum(n: u64, weight: impl Fn(u64) -> BigInt, lucas_index: impl Fn(u64) -> u64) -> BigInt {
    let max_l = lucas_index(n);
    let mut lucas = Vec::with_capacity(max_l as usize + 1);
    let (mut l0, mut l1) = (BigInt::from(2), BigInt::one());
    for _ in 0..=max_l {
        lucas.push(l0.clone());
        let next = &l1 + &l0;
        l0 = std::mem::replace(&mut l1, next);
    }
    let mut sum = BigInt::zero();
    for i in 0..=n {
        sum += binomial(n as i64, i as i64) * weight(i) * &lucas[lucas_index(i) as usize];
    }
    sum
}

fn even_row_sum(n: u64) -> BigInt {
    (0..=n / 2).map(|i| binomial(n as i64, 2 * i as i64)).sum()
}

fn weighted_even_row_sum(n: u64) -> BigInt {
    (0..=n / 2)
        .map(|i| BigInt::from(i) * binomial(n as i64, 2 * i as i64))
        .sum()
}

fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// All registered identities. Ids are unique; every entry's two evaluators
/// run through disjoint code paths.
pub fn catalog() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "idenl",
            summary: "2^(2k-n+1) sum_(i=k..n/2) C(n,2i) C(i,k) = (n/(n-k)) C(n-k,k)",
            citation: "provable by hypergeometric summation (Petkovsek-Wilf-Zeilberger)",
            n_min: 1,
            eval: Evaluators::Double {
                lhs: Box::new(|n, k| idenl_sides(n, k).0),
                rhs: Box::new(|n, k| int(exp2_coeff(n, k))),
            },
        },
        IdentityCase {
            id: "koshy-coeff",
            summary: "C(n-k,k) + C(n-k-1,k-1) = (n/(n-k)) C(n-k,k)",
            citation: "Koshy, Fibonacci and Lucas Numbers with Applications",
            n_min: 1,
            eval: Evaluators::Double {
                lhs: Box::new(|n, k| int(koshy_coeff(n, k))),
                rhs: Box::new(|n, k| int(exp2_coeff(n, k))),
            },
        },
        IdentityCase {
            id: "hirschhorn",
            summary: "sum_(i=k..n/2) C(n,2i) C(i,k) = 2^(n-2k-1) (C(n-k,k) + C(n-k-1,k-1))",
            citation: "Hirschhorn, via summable hypergeometric series",
            n_min: 1,
            eval: Evaluators::Double {
                lhs: Box::new(|n, k| {
                    let sum: BigInt = (k..=n / 2)
                        .map(|i| binomial(n as i64, 2 * i as i64) * binomial(i as i64, k as i64))
                        .sum();
                    int(sum)
                }),
                rhs: Box::new(|n, k| {
                    pow2_rational(n as i64 - 2 * k as i64 - 1) * int(koshy_coeff(n, k))
                }),
            },
        },
        IdentityCase {
            id: "binet-lucas",
            summary: "trace(phi^n) = L_n",
            citation: "Binet closed form for Lucas numbers",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(v_trace(&SequenceParams::v(1, 1), n))),
                rhs: Box::new(|n| int(lucas_rec(n))),
            },
        },
        IdentityCase {
            id: "binet-fib",
            summary: "(phi^n - (-1/phi)^n)/sqrt(5) = F_n",
            citation: "Binet closed form for Fibonacci numbers",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(u_ratio(&SequenceParams::u(1, 1), n))),
                rhs: Box::new(|n| int(pair_recurrence(&SequenceParams::u(1, 1), n).0)),
            },
        },
        IdentityCase {
            id: "lucas-exp1",
            summary: "L_n = 2^(1-n) sum_i C(n,2i) 5^i",
            citation: "even-index binomial expansion of the golden-ratio powers",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(v_closed(&SequenceParams::v(1, 1), n, ClosedForm::Exp1))),
                rhs: Box::new(|n| int(lucas_dbl(n))),
            },
        },
        IdentityCase {
            id: "lucas-exp2",
            summary: "L_n = sum_k (n/(n-k)) C(n-k,k)",
            citation: "Lucas expansion with the Draim-Bickell/Koshy coefficient",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(v_closed(&SequenceParams::v(1, 1), n, ClosedForm::Exp2))),
                rhs: Box::new(|n| int(lucas_dbl(n))),
            },
        },
        IdentityCase {
            id: "shift1-doubleindex",
            summary: "sum_i C(n,i) L_i = L_(2n)",
            citation: "root shift by 1 (binomial transform); classical, see Vajda",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(shifted_v_sum(&SequenceParams::v(1, 1), &BigInt::one(), n))),
                rhs: Box::new(|n| int(lucas_rec(2 * n))),
            },
        },
        IdentityCase {
            id: "l2n-exp1",
            summary: "L_(2n) = (3^n/2^(n-1)) sum_i (5/9)^i C(n,2i)",
            citation: "even-index expansion at the shifted pair (3, -1)",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(v_closed(&SequenceParams::v(3, -1), n, ClosedForm::Exp1))),
                rhs: Box::new(|n| int(lucas_rec(2 * n))),
            },
        },
        IdentityCase {
            id: "l2n-exp2",
            summary: "L_(2n) = sum_k (-1)^k 3^(n-2k) (n/(n-k)) C(n-k,k)",
            citation: "coefficient expansion at the shifted pair (3, -1)",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(v_closed(&SequenceParams::v(3, -1), n, ClosedForm::Exp2))),
                rhs: Box::new(|n| int(lucas_dbl(2 * n))),
            },
        },
        IdentityCase {
            id: "alt-sum",
            summary: "sum_i (-1)^i C(n,i) L_i = L_n",
            citation: "root shift by -1; classical alternating Lucas sum",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| {
                    int(lucas_binomial_sum(
                        n,
                        |i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() },
                        |i| i,
                    ))
                }),
                rhs: Box::new(|n| int(lucas_dbl(n))),
            },
        },
        IdentityCase {
            id: "alt-partial",
            summary: "sum_(i<n) (-1)^i C(n,i) L_i = 0 (n even) or 2 L_n (n odd)",
            citation: "alternating Lucas sum with the last term removed",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| {
                    let full = lucas_binomial_sum(
                        n,
                        |i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() },
                        |i| i,
                    );
                    // drop the i = n term, which is (-1)^n L_n
                    let last = if n % 2 == 0 {
                        lucas_rec(n)
                    } else {
                        -lucas_rec(n)
                    };
                    int(full - last)
                }),
                rhs: Box::new(|n| {
                    if n % 2 == 0 {
                        BigRational::zero()
                    } else {
                        int(2 * lucas_dbl(n))
                    }
                }),
            },
        },
        IdentityCase {
            id: "vajda",
            summary: "sum_i C(n,i) L_(2i) = 5^k L_n (n=2k) or 5^(k+1) F_n (n=2k+1)",
            citation: "Vajda, Fibonacci & Lucas Numbers, and the Golden Section",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(lucas_binomial_sum(n, |_| BigInt::one(), |i| 2 * i))),
                rhs: Box::new(|n| {
                    if n % 2 == 0 {
                        int(pow5(n / 2) * lucas_dbl(n))
                    } else {
                        int(pow5(n / 2 + 1) * fib_dbl(n))
                    }
                }),
            },
        },
        IdentityCase {
            id: "vajda-exp",
            summary: "sum_i C(n,i) L_(2i) equals both closed expansions at (5, -5)",
            citation: "closed forms of the Vajda sum via the roots of z^2 - 5z + 5",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(lucas_binomial_sum(n, |_| BigInt::one(), |i| 2 * i))),
                rhs: Box::new(|n| {
                    let params = SequenceParams::v(5, -5);
                    let exp1 = v_closed(&params, n, ClosedForm::Exp1);
                    let exp2 = v_closed(&params, n, ClosedForm::Exp2);
                    assert_eq!(exp1, exp2, "the two closed expansions disagree at n={n}");
                    int(exp1)
                }),
            },
        },
        IdentityCase {
            id: "m-minus2",
            summary: "sum_i (-2)^(n-i) C(n,i) L_i = (-1)^n L_(2n)",
            citation: "root shift by -2; classical, see Vajda",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| {
                    int(shifted_v_sum(&SequenceParams::v(1, 1), &BigInt::from(-2), n))
                }),
                rhs: Box::new(|n| {
                    let v = lucas_dbl(2 * n);
                    int(if n % 2 == 0 { v } else { -v })
                }),
            },
        },
        IdentityCase {
            id: "two-phi",
            summary: "sum_i (-1)^i 2^(n-i) C(n,i) L_(2i) = L_n",
            citation: "re-expressing the golden-ratio roots as a shift of z^2 + 3z + 1",
            n_min: 0,
            eval: Evaluators::Single {
                lhs: Box::new(|n| {
                    int(lucas_binomial_sum(
                        n,
                        |i| {
                            let two_pow = BigInt::one() << (n - i) as usize;
                            if i % 2 == 0 {
                                two_pow
                            } else {
                                -two_pow
                            }
                        },
                        |i| 2 * i,
                    ))
                }),
                rhs: Box::new(|n| int(lucas_dbl(n))),
            },
        },
        IdentityCase {
            id: "spec1",
            summary: "sum_i C(n,2i) = 2^(n-1)",
            citation: "even-index binomial row sum (folklore)",
            n_min: 1,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(even_row_sum(n))),
                rhs: Box::new(|n| int(BigInt::one() << (n - 1) as usize)),
            },
        },
        IdentityCase {
            id: "spec2",
            summary: "2^(3-n) sum_i i C(n,2i) = n, for n > 1",
            citation: "weighted even-index binomial row sum (folklore)",
            n_min: 2,
            eval: Evaluators::Single {
                lhs: Box::new(|n| pow2_rational(3 - n as i64) * int(weighted_even_row_sum(n))),
                rhs: Box::new(|n| int(BigInt::from(n))),
            },
        },
        IdentityCase {
            id: "spec-combined",
            summary: "n sum_i C(n,2i) = 4 sum_i i C(n,2i), for n > 1",
            citation: "combining the two even-index row sums",
            n_min: 2,
            eval: Evaluators::Single {
                lhs: Box::new(|n| int(BigInt::from(n) * even_row_sum(n))),
                rhs: Box::new(|n| int(4 * weighted_even_row_sum(n))),
            },
        },
    ]
}

fn find(id: &str) -> Result<IdentityCase> {
    catalog()
        .into_iter()
        .find(|case| case.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn run_case(case: &IdentityCase, n_max: u64) -> CheckReport {
    let mut cases_checked = 0u64;
    let mut counterexample = None;
    'outer: for n in case.n_min..=n_max {
        match &case.eval {
            Evaluators::Single { lhs, rhs } => {
                cases_checked += 1;
                let (l, r) = (lhs(n), rhs(n));
                if l != r {
                    counterexample = Some(Counterexample {
                        n,
                        k: None,
                        lhs: l.to_string(),
                        rhs: r.to_string(),
                    });
                    break 'outer;
                }
            }
            Evaluators::Double { lhs, rhs } => {
                for k in 0..=n / 2 {
                    cases_checked += 1;
                    let (l, r) = (lhs(n, k), rhs(n, k));
                    if l != r {
                        counterexample = Some(Counterexample {
                            n,
                            k: Some(k),
                            lhs: l.to_string(),
                            rhs: r.to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    CheckReport {
        id: case.id.to_string(),
        n_max,
        cases_checked,
        pass: counterexample.is_none(),
        counterexample,
    }
}

/// Sweeps one identity over its domain up to `n_max` (all admissible `k`
/// for double-index identities) and reports the first mismatch, if any.
pub fn check(id: &str, n_max: u64) -> Result<CheckReport> {
    Ok(run_case(&find(id)?, n_max))
}

/// Runs every catalog entry; the aggregate passes only if each report does.
pub fn check_all(n_max: u64) -> Vec<CheckReport> {
    catalog().iter().map(|case| run_case(case, n_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_unique() {
        let cases = catalog();
        assert!(cases.len() >= 19, "catalog has {} entries", cases.len());
        let mut ids: Vec<_> = cases.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cases.len(), "duplicate identity ids");
        assert!(cases.iter().any(|c| c.id == "vajda"));
        let spec2 = cases.iter().find(|c| c.id == "spec2").unwrap();
        assert_eq!(spec2.n_min, 2);
    }

    #[test]
    fn spot_check_values() {
        // alt-sum at n = 3: 2 - 3 + 9 - 4 = 4 = L_3.
        let report = check("alt-sum", 3).unwrap();
        assert!(report.pass);
        // vajda at n = 3: 2 + 9 + 21 + 18 = 50 = 5^2 F_3.
        let case = find("vajda").unwrap();
        let Evaluators::Single { lhs, rhs } = &case.eval else {
            panic!("vajda is single-index");
        };
        assert_eq!(lhs(3), int(BigInt::from(50)));
        assert_eq!(rhs(3), int(BigInt::from(50)));
        // spec1 at n = 4: 1 + 6 + 1 = 8 = 2^3.
        let case = find("spec1").unwrap();
        let Evaluators::Single { lhs, .. } = &case.eval else {
            panic!("spec1 is single-index");
        };
        assert_eq!(lhs(4), int(BigInt::from(8)));
    }

    #[test]
    fn everything_passes_to_forty() {
        for report in check_all(40) {
            assert!(
                report.pass,
                "{} failed: {:?}",
                report.id, report.counterexample
            );
        }
    }

    #[test]
    fn tiny_sweeps_pass_vacuously_or_on_seeds() {
        for report in check_all(1) {
            assert!(report.pass, "{} failed at n_max=1", report.id);
        }
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            check("no-such-identity", 10),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn perturbed_sides_are_caught() {
        for case in catalog() {
            let mutated = IdentityCase {
                id: case.id,
                summary: case.summary,
                citation: case.citation,
                n_min: case.n_min,
                eval: match case.eval {
                    Evaluators::Single { lhs, rhs } => Evaluators::Single {
                        lhs,
                        rhs: Box::new(move |n| rhs(n) + BigRational::one()),
                    },
                    Evaluators::Double { lhs, rhs } => Evaluators::Double {
                        lhs,
                        rhs: Box::new(move |n, k| rhs(n, k) + BigRational::one()),
                    },
                },
            };
            let report = run_case(&mutated, 12);
            assert!(!report.pass, "perturbed {} still passed", mutated.id);
            assert!(
                report.counterexample.is_some(),
                "failed {} lacks a counterexample",
                mutated.id
            );
        }
    }

    #[test]
    fn parity_split_cases_hold_per_parity() {
        let case = find("alt-partial").unwrap();
        let Evaluators::Single { lhs, rhs } = &case.eval else {
            panic!("alt-partial is single-index");
        };
        for n in (0..=30).step_by(2) {
            assert_eq!(lhs(n), BigRational::zero(), "even n={n}");
            assert_eq!(rhs(n), BigRational::zero());
        }
        for n in (1..=29).step_by(2) {
            let want = int(2 * lucas_rec(n));
            assert_eq!(lhs(n), want, "odd n={n}");
            assert_eq!(rhs(n), want);
        }
    }
}
