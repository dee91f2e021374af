//! Tour of the exact quadratic-field arithmetic: build the golden ratio as
//! a root of z^2 - z - 1 = 0, take powers, and watch the Lucas numbers fall
//! out of the traces.

use quadseq::surdio::{format_surd, parse_surd};
use quadseq::{roots_of, SequenceParams};

fn main() {
    let params = SequenceParams::v(1, 1);
    let (phi, psi) = roots_of(&params);
    println!("roots of z^2 - z - 1 = 0:");
    println!("  r = {}", format_surd(&phi));
    println!("  s = {}", format_surd(&psi));
    println!("  r + s = {}  (= p)", format_surd(&phi.try_add(&psi).unwrap()));
    println!("  r * s = {}  (= -q)", format_surd(&phi.try_mul(&psi).unwrap()));
    println!();

    println!("powers of the golden ratio and their traces:");
    for n in 0..=10u64 {
        let power = phi.pow(n);
        // The trace r^n + conj(r^n) is always an integer: the Lucas number L_n.
        println!(
            "  phi^{n:<2} = {:<24} trace = {}",
            format_surd(&power),
            power.trace()
        );
    }
    println!();

    // Perfect-square radicands normalize away entirely.
    let two = parse_surd("(1+sqrt(9))/2").unwrap();
    println!("(1+sqrt(9))/2 parses to {} (is_integer: {})", format_surd(&two), two.is_integer());

    // A negative radicand models complex-conjugate roots the same way.
    let (lambda, _) = roots_of(&SequenceParams::v(-1, -1));
    println!(
        "root of z^2 + z + 1 = 0: {} with trace(r^3) = {}",
        format_surd(&lambda),
        lambda.pow(3).trace()
    );

    // Mixing distinct irrational radicands is refused rather than guessed at.
    let sqrt2 = parse_surd("0+sqrt(2)").unwrap();
    let sqrt3 = parse_surd("0+sqrt(3)").unwrap();
    println!("sqrt(2) + sqrt(3) -> {}", sqrt2.try_add(&sqrt3).unwrap_err());
}
