//! Property tests over randomized inputs: algebraic laws of the quadratic
//! field, parser/printer round trips, and the slice recurrence invariant.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use quadseq::engines::{Method, SequenceSlice};
use quadseq::quadfield::QuadElement;
use quadseq::surdio::{emit_bfile, format_surd, parse_bfile, parse_surd, BFile};
use quadseq::{SeqKind, SequenceParams};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

prop_compose! {
    /// Small quadratic-surd elements over a handful of radicands (including
    /// perfect squares, which normalize to rationals, and negatives).
    fn quad_element()(
        a_num in -9i64..=9,
        a_den in 1i64..=6,
        b_num in -9i64..=9,
        b_den in 1i64..=6,
        d in prop::sample::select(vec![-3i64, -1, 0, 2, 3, 5, 8, 9, 12]),
    ) -> QuadElement {
        QuadElement::new(rational(a_num, a_den), rational(b_num, b_den), BigInt::from(d))
    }
}

prop_compose! {
    /// Same-field pairs: share the radicand so ring operations apply.
    fn same_field_pair()(
        d in prop::sample::select(vec![-3i64, -1, 2, 5]),
        a1 in -6i64..=6, a2 in -6i64..=6,
        b1 in -6i64..=6, b2 in -6i64..=6,
        den in 1i64..=4,
    ) -> (QuadElement, QuadElement) {
        (
            QuadElement::new(rational(a1, den), rational(b1, den), BigInt::from(d)),
            QuadElement::new(rational(a2, den), rational(b2, den), BigInt::from(d)),
        )
    }
}

proptest! {
    #[test]
    fn pow_is_additive(x in quad_element(), m in 0u64..=16, n in 0u64..=16) {
        let lhs = x.pow(m + n);
        let rhs = x.pow(m).try_mul(&x.pow(n)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_involutes_and_fixes_trace_norm(x in quad_element()) {
        let c = x.conjugate();
        prop_assert_eq!(c.conjugate(), x.clone());
        prop_assert_eq!(c.trace(), x.trace());
        prop_assert_eq!(c.norm(), x.norm());
    }

    #[test]
    fn ring_ops_stay_in_field(
        (x, y) in same_field_pair()
    ) {
        let sum = x.try_add(&y).unwrap();
        let product = x.try_mul(&y).unwrap();
        // trace is additive, norm is multiplicative
        prop_assert_eq!(sum.trace(), x.trace() + y.trace());
        prop_assert_eq!(product.norm(), x.norm() * y.norm());
    }

    #[test]
    fn canonical_print_parses_back(x in quad_element()) {
        let text = format_surd(&x);
        let parsed = parse_surd(&text).unwrap();
        prop_assert_eq!(parsed, x, "canonical text was `{}`", text);
    }

    #[test]
    fn bfile_round_trip_is_byte_stable(
        start in -50i64..=50,
        gaps in prop::collection::vec(1i64..=9, 1..40),
        values in prop::collection::vec(any::<i64>(), 40),
    ) {
        let mut index = start;
        let mut entries = Vec::new();
        for (gap, value) in gaps.iter().zip(values.iter()) {
            // Values well past u64 range via squaring.
            let big = BigInt::from(*value) * BigInt::from(*value) * BigInt::from(*value);
            entries.push((index, big));
            index += gap;
        }
        let bfile = BFile::new(entries).unwrap();
        let text = emit_bfile(&bfile);
        let reparsed = parse_bfile(&text).unwrap();
        prop_assert_eq!(&reparsed, &bfile);
        prop_assert_eq!(emit_bfile(&reparsed), text);
    }

    #[test]
    fn slices_satisfy_the_defining_recurrence(
        p in -6i64..=6,
        q in -6i64..=6,
        start in 0u64..=20,
        len in 2u64..=30,
        kind in prop::sample::select(vec![SeqKind::V, SeqKind::U]),
    ) {
        let params = SequenceParams::new(p, q, kind);
        let slice = SequenceSlice::generate(&params, start, start + len, Method::Recurrence).unwrap();
        prop_assert_eq!(slice.values.len() as u64, len + 1);
        for i in 2..slice.values.len() {
            let expected = &params.p * &slice.values[i - 1] + &params.q * &slice.values[i - 2];
            prop_assert_eq!(&slice.values[i], &expected, "recurrence broken at offset {}", i);
        }
        // Spot-check against an independent per-index engine.
        let direct = match kind {
            SeqKind::V => quadseq::engines::pair_doubling(&params, start).1,
            SeqKind::U => quadseq::engines::pair_doubling(&params, start).0,
        };
        prop_assert_eq!(&slice.values[0], &direct);
    }
}
