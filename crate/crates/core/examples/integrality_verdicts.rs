//! When is a^n + b^n an integer for every n? Exactly when a and b are the
//! two roots of z^2 - pz - q = 0 for integers p, q. The sum decider checks
//! the three decisive exponents 1, 2, 4 and either recovers (p, q) or
//! reports the first failing one; the difference decider always finds a
//! witness unless the pair is trivial.

use quadseq::integrality::{decide_diff, decide_sum, DiffVerdict, SumVerdict};
use quadseq::surdio::parse_surd;

fn show_sum(alpha: &str, beta: &str) {
    let a = parse_surd(alpha).unwrap();
    let b = parse_surd(beta).unwrap();
    match decide_sum(&a, &b).unwrap() {
        SumVerdict::Integral { recovered } => println!(
            "sum  {alpha:>16} , {beta:<16} integral for all n: roots of z^2 - ({})z - ({}) = 0",
            recovered.p, recovered.q
        ),
        SumVerdict::NotIntegral { witness } => println!(
            "sum  {alpha:>16} , {beta:<16} fails at n = {witness}"
        ),
    }
}

fn show_diff(alpha: &str, beta: &str) {
    let a = parse_surd(alpha).unwrap();
    let b = parse_surd(beta).unwrap();
    match decide_diff(&a, &b) {
        DiffVerdict::TrivialEqual => println!("diff {alpha:>16} , {beta:<16} trivial (equal)"),
        DiffVerdict::BothIntegers => println!("diff {alpha:>16} , {beta:<16} both integers"),
        DiffVerdict::NotIntegral {
            witness,
            prime_bound,
        } => {
            let bound = prime_bound
                .map(|p| format!(" (prime bound {p})"))
                .unwrap_or_default();
            println!("diff {alpha:>16} , {beta:<16} fails at n = {witness}{bound}");
        }
    }
}

fn main() {
    // Conjugate golden-ratio pair: every power sum is a Lucas number.
    show_sum("(1+sqrt(5))/2", "(1-sqrt(5))/2");
    // Integers always work.
    show_sum("3", "-1");
    // Non-conjugate pairs fail immediately.
    show_sum("1+sqrt(5)", "2+sqrt(5)");
    // Half-integers with integer sum: the square sum betrays them.
    show_sum("3/2", "1/2");
    // The complex pair (1 +- i)/2: sums at n = 1, 2 are integers (1 and 0),
    // the decisive failure is at n = 4 where the sum is -1/2.
    show_sum("(1+sqrt(-1))/2", "(1-sqrt(-1))/2");
    show_sum("(1+sqrt(3))/2", "(1-sqrt(3))/2");

    println!();
    // Differences never stay integral outside the trivial cases.
    show_diff("5", "5");
    show_diff("7", "3");
    show_diff("3/2", "1/2");
    // Same surd coefficient: the difference is 1, but squares differ by a surd.
    show_diff("(1+sqrt(5))/2", "(-1+sqrt(5))/2");
    // x = 9, y = 1, z = 2: stays integral surprisingly long; witness 5.
    show_diff("9/2", "1/2");
    show_diff("0+sqrt(2)", "0+sqrt(3)");
}
