//! Exact arithmetic in quadratic extensions of the rationals.
//!
//! A [`QuadElement`] is `a + b*sqrt(D)` with `a`, `b` exact rationals and `D`
//! an integer radicand that may be negative (imaginary quadratic), zero, or a
//! perfect square. Elements are normalized at construction: square factors of
//! `D` are folded into `b`, and a perfect-square radicand collapses the value
//! to a plain rational, so `is_rational`/`is_integer` are decided by
//! inspection and equality is structural.
//!
//! [`SequenceParams`] carries the integer pair `(p, q)` of `z^2 - pz - q = 0`;
//! [`roots_of`] builds the two roots exactly. Everything here is immutable and
//! pure, so values can be shared freely across threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Which of the two canonical sequences is meant: `V` for root-power sums,
/// `U` for root-power differences divided by `r - s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    V,
    U,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqKind::V => write!(f, "V"),
            SeqKind::U => write!(f, "U"),
        }
    }
}

impl std::str::FromStr for SeqKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "V" | "v" => Ok(SeqKind::V),
            "U" | "u" => Ok(SeqKind::U),
            other => Err(format!("unknown sequence kind `{other}` (expected V or U)")),
        }
    }
}

/// The integer pair `(p, q)` of `z^2 - pz - q = 0`, tagged with the sequence
/// kind it is being used for. The discriminant `p^2 + 4q` is always derived,
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceParams {
    pub p: BigInt,
    pub q: BigInt,
    pub kind: SeqKind,
}

impl SequenceParams {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, kind: SeqKind) -> Self {
        Self {
            p: p.into(),
            q: q.into(),
            kind,
        }
    }

    /// Sum-kind parameters (`V`).
    pub fn v(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Self::new(p, q, SeqKind::V)
    }

    /// Difference-kind parameters (`U`).
    pub fn u(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Self::new(p, q, SeqKind::U)
    }

    /// `p^2 + 4q`, the radicand under the quadratic formula.
    pub fn discriminant(&self) -> BigInt {
        &self.p * &self.p + 4 * &self.q
    }

    pub fn with_kind(&self, kind: SeqKind) -> Self {
        Self {
            p: self.p.clone(),
            q: self.q.clone(),
            kind,
        }
    }
}

impl fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={}, q={})", self.kind, self.p, self.q)
    }
}

/// An exact element `a + b*sqrt(d)` of a quadratic extension.
///
/// Invariants after construction:
/// - `a` and `b` are reduced rationals with positive denominators
///   (num-rational maintains this),
/// - if `b = 0` then `d = 0` (the element is a plain rational),
/// - otherwise `d` is not 0 or 1 and carries no square factor that trial
///   division up to 2^20 can find; full perfect squares of any size are
///   always folded away.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    d: BigInt,
    a: BigRational,
    b: BigRational,
}

/// Splits `m > 0` as `c^2 * rest` with `c` maximal (best effort beyond 2^40).
fn extract_square(mut m: BigInt) -> (BigInt, BigInt) {
    debug_assert!(m.is_positive());
    let root = m.sqrt();
    if &root * &root == m {
        return (root, BigInt::one());
    }
    let mut c = BigInt::one();
    let mut f: u64 = 2;
    while f <= 1 << 20 {
        let ff = BigInt::from(f) * f;
        if &ff > &m {
            break;
        }
        while (&m % &ff).is_zero() {
            m /= &ff;
            c *= f;
        }
        f += if f == 2 { 1 } else { 2 };
    }
    // A square of a single large prime may survive trial division.
    let root = m.sqrt();
    if &root * &root == m {
        c *= root;
        m = BigInt::one();
    }
    (c, m)
}

impl QuadElement {
    /// Builds `a + b*sqrt(d)` and normalizes the radicand.
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self {
                d: BigInt::zero(),
                a,
                b: BigRational::zero(),
            };
        }
        let (c, rest) = extract_square(d.abs());
        let b = b * BigRational::from_integer(c);
        if rest.is_one() && d.is_positive() {
            // sqrt(c^2) = c: the element is rational.
            Self {
                d: BigInt::zero(),
                a: a + b,
                b: BigRational::zero(),
            }
        } else {
            let d = if d.is_negative() { -rest } else { rest };
            Self { d, a, b }
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            d: BigInt::zero(),
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Coefficient of 1.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of `sqrt(d)`.
    pub fn surd_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the value lies in Q. Normalization already folded
    /// perfect-square radicands, so this is just `b = 0`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is a rational with denominator 1.
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// The integer value, when [`is_integer`](Self::is_integer) holds.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// True when the two elements can be combined by ring operations:
    /// equal radicands, or at least one operand rational.
    pub fn same_field(&self, other: &Self) -> bool {
        self.b.is_zero() || other.b.is_zero() || self.d == other.d
    }

    fn unified_radicand(&self, other: &Self) -> Result<BigInt> {
        if self.b.is_zero() {
            Ok(other.d.clone())
        } else if other.b.is_zero() {
            Ok(self.d.clone())
        } else if self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::RadicandMismatch(self.d.clone(), other.d.clone()))
        }
    }

    /// Checked addition; errors on mismatched irrational radicands.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.unified_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.unified_radicand(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    /// Checked multiplication:
    /// `(a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) s`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.unified_radicand(other)?;
        let dr = BigRational::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    /// Checked division via `x / y = x * conj(y) / norm(y)`.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        // norm(y) = 0 iff y = 0: the radicand is never a nonzero square here.
        let n = other.norm();
        assert!(!n.is_zero(), "division by zero");
        let num = self.try_mul(&other.conjugate())?;
        Ok(Self::new(num.a / &n, num.b / &n, num.d))
    }

    /// Flips the sign of the surd coefficient.
    pub fn conjugate(&self) -> Self {
        Self {
            d: self.d.clone(),
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// `x + conj(x) = 2a`.
    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    /// `x * conj(x) = a^2 - b^2 d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    /// Binary exponentiation; `pow(x, 0)` is the rational 1.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same radicand");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same radicand");
            }
        }
        result
    }
}

macro_rules! forward_quad_binop {
    ($Op:ident, $op:ident, $try_op:ident) => {
        impl $Op<&QuadElement> for &QuadElement {
            type Output = QuadElement;
            fn $op(self, rhs: &QuadElement) -> QuadElement {
                self.$try_op(rhs).expect("incompatible radicands")
            }
        }

        impl $Op<QuadElement> for QuadElement {
            type Output = QuadElement;
            fn $op(self, rhs: QuadElement) -> QuadElement {
                (&self).$op(&rhs)
            }
        }

        impl $Op<&QuadElement> for QuadElement {
            type Output = QuadElement;
            fn $op(self, rhs: &QuadElement) -> QuadElement {
                (&self).$op(rhs)
            }
        }

        impl $Op<QuadElement> for &QuadElement {
            type Output = QuadElement;
            fn $op(self, rhs: QuadElement) -> QuadElement {
                self.$op(&rhs)
            }
        }
    };
}

forward_quad_binop!(Add, add, try_add);
forward_quad_binop!(Sub, sub, try_sub);
forward_quad_binop!(Mul, mul, try_mul);

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement {
            d: self.d.clone(),
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Neg for QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        -&self
    }
}

/// The two roots `p/2 +- sqrt(p^2 + 4q)/2` of `z^2 - pz - q = 0`.
///
/// `r + s = p` and `r * s = -q` hold exactly; when the discriminant is a
/// perfect square both roots normalize to plain rationals.
pub fn roots_of(params: &SequenceParams) -> (QuadElement, QuadElement) {
    let disc = params.discriminant();
    let half_p = BigRational::new(params.p.clone(), BigInt::from(2));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let r = QuadElement::new(half_p.clone(), half.clone(), disc.clone());
    let s = QuadElement::new(half_p, -half, disc);
    (r, s)
}
