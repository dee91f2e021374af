//! Chebyshev polynomials with exact integer coefficients, the bridge to
//! sequence values, the floating cosine form, and the exact period-6 cycle.

use num_bigint::BigInt;
use quadseq::chebyshev::{cheb_t, cheb_u, cycle_exact, v_trig_approx, v_via_chebyshev};
use quadseq::engines::pair_recurrence;
use quadseq::SequenceParams;

fn main() {
    println!("first-kind polynomials T_n:");
    for n in 0..=6u64 {
        println!("  T_{n} = {}", cheb_t(n));
    }
    println!("second-kind polynomials U_n:");
    for n in 0..=4u64 {
        println!("  U_{n} = {}", cheb_u(n));
    }

    // V_n = 2 p^n x^(-n) T_n(x/2) at x^2 = -p^2/q, evaluated exactly: the
    // parity of T_n means only even powers of x appear, so the square root
    // itself is never needed.
    println!();
    let params = SequenceParams::v(1, 1);
    print!("Lucas numbers through the T_n bridge:");
    for n in 1..=10u64 {
        print!(" {}", v_via_chebyshev(&params, n).unwrap());
    }
    println!();

    // Where q < 0 and p^2 + 4q <= 0 the bridge becomes a plain cosine.
    println!();
    println!("trig form vs exact values for (p,q) = (2,-4):");
    let params = SequenceParams::v(2, -4);
    for n in 1..=8u64 {
        let approx = v_trig_approx(&params, n).unwrap();
        let exact = pair_recurrence(&params, n).1;
        println!("  n={n}: trig {approx:>14.6}   exact {exact}");
    }

    // q = -p^2 collapses to a six-term cycle of 2 cos(n pi / 3).
    println!();
    for p in [-1i64, 2] {
        let values: Vec<String> = (1..=9)
            .map(|n| cycle_exact(&BigInt::from(p), n).to_string())
            .collect();
        println!("cycle values for q = -p^2, p = {p}: {}", values.join(", "));
    }
}
