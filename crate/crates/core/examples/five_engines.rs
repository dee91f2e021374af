//! Compute the same sequence values through every independent route and
//! show them agreeing: the defining recurrence, O(log n) doubling, the three
//! closed binomial forms, exact root-power arithmetic, and the Chebyshev
//! bridge.

use quadseq::chebyshev::{u_via_chebyshev, v_via_chebyshev};
use quadseq::engines::{
    pair_doubling, pair_recurrence, u_closed, u_ratio, v_closed, v_trace, ClosedForm,
};
use quadseq::SequenceParams;

fn main() {
    // Pell / companion Pell: roots 1 +- sqrt(2).
    let params = SequenceParams::v(2, 1);
    println!("V_n(2,1) (companion Pell) by every V route:");
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "n", "recurrence", "doubling", "exp1", "exp2", "exp3", "trace", "chebyshev"
    );
    for n in 1..=12u64 {
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
            n,
            pair_recurrence(&params, n).1,
            pair_doubling(&params, n).1,
            v_closed(&params, n, ClosedForm::Exp1),
            v_closed(&params, n, ClosedForm::Exp2),
            v_closed(&params, n, ClosedForm::Exp3),
            v_trace(&params, n),
            v_via_chebyshev(&params, n).unwrap(),
        );
    }

    println!();
    println!("U_n(2,1) (Pell) by every U route:");
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "n", "recurrence", "doubling", "idenf", "ratio", "chebyshev"
    );
    for n in 1..=12u64 {
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12} {:>12}",
            n,
            pair_recurrence(&params, n).0,
            pair_doubling(&params, n).0,
            u_closed(&params, n),
            u_ratio(&params, n),
            u_via_chebyshev(&params, n - 1).unwrap(),
        );
    }

    // Degenerate discriminant: p = 2, q = -1 has the repeated root 1.
    println!();
    let degenerate = SequenceParams::v(2, -1);
    print!("repeated-root case (2,-1): V_n = 2 for all n, U_n = n:");
    for n in 0..=6u64 {
        let (u, v) = pair_doubling(&degenerate, n);
        print!("  ({u},{v})");
    }
    println!();
}
