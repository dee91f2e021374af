//! Exact integer sequences of the form `r^n + s^n` and `(r^n - s^n)/(r - s)`
//! for the roots `r`, `s` of `z^2 - pz - q = 0`, plus the machinery around
//! them:
//!
//! - [`quadfield`]: exact arithmetic in quadratic extensions ([`QuadElement`],
//!   [`SequenceParams`], [`roots_of`]).
//! - [`engines`]: five independent computation routes per sequence
//!   (recurrence, doubling, three closed binomial forms, root-power traces)
//!   that must and do agree.
//! - [`chebyshev`]: integer-coefficient `T_n`/`U_n` polynomials and the exact
//!   bridge from Chebyshev evaluations to sequence values.
//! - [`transforms`]: root shifts, the binomial sums they induce, and
//!   generalized Fibonacci sequences with their closed form.
//! - [`integrality`]: decision procedures for `a^n + b^n` and `a^n - b^n`
//!   over quadratic surds and rationals, with explicit witnesses.
//! - [`registry`]: a catalog of identities, each verified by two disjoint
//!   exact evaluation paths.
//! - [`surdio`]: surd expression parsing/printing and OEIS b-file I/O.
//! - [`cli`]: the `quadseq` command-line tool built on all of the above.
//!
//! Everything outside [`cli`] is a pure library: values are immutable,
//! arithmetic is exact (big integers and big rationals throughout), and no
//! floating point is used except in the explicitly approximate
//! [`chebyshev::v_trig_approx`].
//!
//! The `examples/` directory walks through each capability:
//!
//! ```bash
//! cargo run -p quadseq --example golden_ratio
//! cargo run -p quadseq --example five_engines
//! cargo run -p quadseq --example chebyshev_bridge
//! cargo run -p quadseq --example binomial_transforms
//! cargo run -p quadseq --example integrality_verdicts
//! cargo run -p quadseq --example refute_rationals
//! cargo run -p quadseq --example identity_catalog
//! cargo run -p quadseq --example oeis_roundtrip
//! cargo run -p quadseq --example doubling_benchmark
//! ```

pub mod chebyshev;
pub mod cli;
pub mod engines;
pub mod error;
pub mod integrality;
pub mod quadfield;
pub mod registry;
pub mod surdio;
pub mod transforms;

pub use engines::{Method, SequenceSlice};
pub use error::{Error, Result};
pub use quadfield::{roots_of, QuadElement, SeqKind, SequenceParams};
