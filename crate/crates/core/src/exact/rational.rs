//! Arbitrary-precision rational numbers with an inline `i64` fast path.
//!
//! Group enumeration hashes millions of exact scalars, so the common case
//! (tiny numerators, power-of-two denominators) must not allocate. Values
//! that fit in `i64` are stored inline; anything larger is promoted to a
//! boxed [`BigRational`]. The representation is canonical: a value is stored
//! inline if and only if it fits, so derived equality and hashing are sound.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

/// Magnitude bound for the inline representation. Kept two bits below
/// `i64::MAX` so that four-term convolution sums of pairwise products stay
/// inside `i128` (see `CycEight`).
pub(crate) const SMALL_LIMIT: i128 = 1 << 62;

/// A rational number in lowest terms with positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    /// numerator, denominator; denominator > 0, gcd(|n|, d) = 1
    Small(i64, i64),
    Big(Box<BigRational>),
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduce n/d (d != 0) to lowest terms with positive denominator and pick
/// the inline representation when it fits.
fn normalize_i128(mut n: i128, mut d: i128) -> Rational {
    debug_assert!(d != 0);
    if d < 0 {
        n = -n;
        d = -d;
    }
    if n == 0 {
        return Rational(Repr::Small(0, 1));
    }
    let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
    n /= g;
    d /= g;
    if n.abs() < SMALL_LIMIT && d < SMALL_LIMIT {
        Rational(Repr::Small(n as i64, d as i64))
    } else {
        Rational(Repr::Big(Box::new(BigRational::new(
            BigInt::from(n),
            BigInt::from(d),
        ))))
    }
}

fn normalize_big(r: BigRational) -> Rational {
    // BigRational::new already reduced and fixed the sign.
    use num_traits::ToPrimitive;
    let fits = |x: &BigInt| x.to_i64().filter(|v| (*v as i128).abs() < SMALL_LIMIT);
    match (fits(r.numer()), fits(r.denom())) {
        (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
        _ => Rational(Repr::Big(Box::new(r))),
    }
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        normalize_i128(numer as i128, denom as i128)
    }

    pub fn from_int(n: i64) -> Self {
        normalize_i128(n as i128, 1)
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_big(r: BigRational) -> Self {
        normalize_big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.numer().is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// Integer value if the denominator is 1 and the numerator fits `i64`.
    pub fn as_integer(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// Inline numerator/denominator pair, when small.
    pub(crate) fn small(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::Small(n, d) => Some((*n, *d)),
            Repr::Big(_) => None,
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Small(n, d) => normalize_i128(*d as i128, *n as i128),
            Repr::Big(b) => normalize_big(b.recip()),
        })
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        // Canonical representation: equal values share a variant.
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                state.write_u8(0);
                state.write_i64(*n);
                state.write_i64(*d);
            }
            Repr::Big(b) => {
                state.write_u8(1);
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                // cross-multiply; |values| < 2^62 so products fit i128
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $small:expr, $big:expr) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                match (&self.0, &rhs.0) {
                    (Repr::Small(a, b), Repr::Small(c, d)) => {
                        let f: fn(i128, i128, i128, i128) -> Rational = $small;
                        f(*a as i128, *b as i128, *c as i128, *d as i128)
                    }
                    _ => {
                        let f: fn(BigRational, BigRational) -> BigRational = $big;
                        normalize_big(f(self.to_big(), rhs.to_big()))
                    }
                }
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(
    Add,
    add,
    |a, b, c, d| normalize_i128(a * d + c * b, b * d),
    |x, y| x + y
);
forward_binop!(
    Sub,
    sub,
    |a, b, c, d| normalize_i128(a * d - c * b, b * d),
    |x, y| x - y
);
forward_binop!(
    Mul,
    mul,
    |a, b, c, d| normalize_i128(a * c, b * d),
    |x, y| x * y
);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                normalize_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => normalize_big(self.to_big() / rhs.to_big()),
        }
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self) / (&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => normalize_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -(&self)
    }
}

impl fmt::Display for Rational {
    /// `p/q` in lowest terms, `q` omitted when 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num.trim()).map_err(|_| ExactError::Parse(s.to_string()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| ExactError::Parse(s.to_string()))?;
        if d.is_zero() {
            return Err(ExactError::Parse(s.to_string()));
        }
        Ok(normalize_big(BigRational::new(n, d)))
    }
}
