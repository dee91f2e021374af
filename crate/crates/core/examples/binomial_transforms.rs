//! Shifting both roots by an integer turns power sums into binomial-weighted
//! sums of the base sequence. This example replays the classical Lucas
//! identities that fall out, plus generalized Fibonacci sequences.

use num_bigint::BigInt;
use quadseq::engines::pair_recurrence;
use quadseq::transforms::{gen_fib, gen_fib_closed, shift_params, shifted_v_sum, GenFibSpec};
use quadseq::SequenceParams;

fn lucas(n: u64) -> BigInt {
    pair_recurrence(&SequenceParams::v(1, 1), n).1
}

fn main() {
    let base = SequenceParams::v(1, 1);

    // Shift by m: the roots move to m + r, m + s with parameters
    // (p + 2m, q - pm - m^2).
    for m in [1i64, -1, 2, -2] {
        let shifted = shift_params(&base, &BigInt::from(m));
        println!("shift m={m:>2}: (p,q) = ({}, {})", shifted.p, shifted.q);
    }
    println!();

    // m = 1 doubles the index: sum_i C(n,i) L_i = L_2n.
    println!("sum_i C(n,i) L_i vs L_2n:");
    for n in 0..=8u64 {
        let sum = shifted_v_sum(&base, &BigInt::from(1), n);
        println!("  n={n}: {sum} = {}", lucas(2 * n));
        assert_eq!(sum, lucas(2 * n));
    }

    // m = -1 alternates signs: sum_i (-1)^(n-i) C(n,i) L_i = (-1)^n L_n.
    println!();
    println!("alternating sum vs (-1)^n L_n:");
    for n in 1..=8u64 {
        let sum = shifted_v_sum(&base, &BigInt::from(-1), n);
        println!("  n={n}: {sum}");
    }

    // Generalized Fibonacci: seeds (2, p) give V, (0, 1) give U, anything
    // else interpolates; the closed form through the roots agrees with the
    // recurrence whenever the discriminant is nonzero.
    println!();
    let spec = GenFibSpec::new(SequenceParams::v(1, 1), 4, -3);
    print!("G(4,-3) by recurrence:  ");
    for n in 0..=10u64 {
        print!(" {}", gen_fib(&spec, n));
    }
    print!("\nG(4,-3) by closed form:");
    for n in 0..=10u64 {
        print!(" {}", gen_fib_closed(&spec, n).unwrap());
    }
    println!();

    // The repeated-root case refuses the closed form but not the recurrence.
    let degenerate = GenFibSpec::new(SequenceParams::v(2, -1), 1, 5);
    println!(
        "closed form at zero discriminant: {}",
        gen_fib_closed(&degenerate, 3).unwrap_err()
    );
    println!("recurrence still fine: G_3 = {}", gen_fib(&degenerate, 3));
}
