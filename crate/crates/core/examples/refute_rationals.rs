//! The prime machinery behind difference refutations, and the family
//! x = z^m + 1 that postpones failure as long as you like (but never
//! forever): (x^n - 1)/z^n is an integer for all n <= m and breaks soon
//! after.

use num_bigint::BigInt;
use num_rational::BigRational;
use quadseq::integrality::{
    footnote_family, gcd_dichotomy_check, p_poly, prime_witness, RationalPairZ,
};

fn pair(x: i64, y: i64, z: i64) -> RationalPairZ {
    RationalPairZ::from_rationals(
        &BigRational::new(BigInt::from(x), BigInt::from(z)),
        &BigRational::new(BigInt::from(y), BigInt::from(z)),
    )
    .expect("not both integers")
}

fn main() {
    // P_p(x, y) = (x^p - y^p)/(x - y) as an explicit integer sum.
    for (x, y, p) in [(3i64, 1i64, 3u64), (2, 1, 5), (10, 7, 3)] {
        println!(
            "P_{p}({x}, {y}) = {}",
            p_poly(&BigInt::from(x), &BigInt::from(y), p).unwrap()
        );
    }

    // gcd(x - y, P_p) is always 1 or p; nothing in between ever shows up.
    println!();
    for (x, y, p) in [(3i64, 1i64, 3u64), (4, 1, 3), (5, 2, 5), (9, 2, 7)] {
        println!(
            "gcd({x}-{y}, P_{p}({x},{y})) = {}",
            gcd_dichotomy_check(&BigInt::from(x), &BigInt::from(y), p)
        );
    }

    // The smallest prime past every prime factor of z, with the exact
    // division check that z^p no longer divides x^p - y^p there.
    println!();
    for (x, y, z) in [(3i64, 1i64, 2i64), (5, 1, 2), (7, 1, 6), (9, 1, 2)] {
        let w = prime_witness(&pair(x, y, z)).unwrap();
        println!(
            "x={x} y={y} z={z}: prime {} ({})",
            w.prime,
            if w.verified {
                "verified: z^p does not divide x^p - y^p"
            } else {
                "not yet decisive: z^p still divides x - y, a later prime settles it"
            }
        );
    }

    // The family: integrality survives exactly through m.
    println!();
    println!("x = z^m + 1 family:");
    for z in [2i64, 3, 5] {
        for m in [1u64, 2, 4, 8] {
            let report = footnote_family(&BigInt::from(z), m);
            println!(
                "  z={z} m={m}: x = {}, integral through n={}, first failure n={}",
                BigInt::from(z).pow(m as u32) + 1,
                report.ok_through,
                report.first_failure
            );
        }
    }
}
