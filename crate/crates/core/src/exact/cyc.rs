//! Exact arithmetic in the 8th cyclotomic field Q(ζ₈).
//!
//! Elements are stored over the power basis {1, ζ, ζ², ζ³} with ζ a
//! primitive 8th root of unity, ζ⁴ = −1. This field contains i = ζ² and
//! √2 = ζ − ζ³, so every scalar appearing in the gate constructions (H, P,
//! T, CZ, R, Pauli matrices, diagonal roots of unity for m | 8) lives here.
//!
//! Representation mirrors [`Rational`]: four numerators over one common
//! denominator, inline `i64` when everything fits and boxed `BigInt`
//! otherwise. The inline form is canonical, so equality, ordering and
//! hashing are exact and cheap — which is what makes hashing millions of
//! matrices during group closure feasible.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::{gcd_u128, Rational, SMALL_LIMIT};
use crate::error::ExactError;

/// An element of Q(ζ₈) over the basis {1, ζ, ζ², ζ³}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycEight(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// (n₀ + n₁ζ + n₂ζ² + n₃ζ³)/d with d ≥ 1 and gcd(n₀..n₃, d) = 1.
    Small { n: [i64; 4], d: i64 },
    Big(Box<BigCyc>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigCyc {
    n: [BigInt; 4],
    d: BigInt,
}

fn normalize_i128(n: [i128; 4], d: i128) -> CycEight {
    debug_assert!(d > 0);
    let mut g = d as u128;
    for v in &n {
        g = gcd_u128(g, v.unsigned_abs());
        if g == 1 {
            break;
        }
    }
    if n.iter().all(|v| *v == 0) {
        return CycEight(Repr::Small { n: [0; 4], d: 1 });
    }
    let g = g as i128;
    let n = n.map(|v| v / g);
    let d = d / g;
    if d < SMALL_LIMIT && n.iter().all(|v| v.abs() < SMALL_LIMIT) {
        CycEight(Repr::Small {
            n: n.map(|v| v as i64),
            d: d as i64,
        })
    } else {
        CycEight(Repr::Big(Box::new(BigCyc {
            n: n.map(BigInt::from),
            d: BigInt::from(d),
        })))
    }
}

fn normalize_big(mut n: [BigInt; 4], mut d: BigInt) -> CycEight {
    if d.is_negative() {
        d = -d;
        for v in n.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    if n.iter().all(|v| v.is_zero()) {
        return CycEight::zero();
    }
    let mut g = d.clone();
    for v in &n {
        g = g.gcd(v);
    }
    for v in n.iter_mut() {
        *v = &*v / &g;
    }
    d = &d / &g;
    let fits = |x: &BigInt| x.to_i64().filter(|v| (*v as i128).abs() < SMALL_LIMIT);
    let small: Option<Vec<i64>> = n.iter().map(fits).collect();
    match (small, fits(&d)) {
        (Some(sn), Some(sd)) => CycEight(Repr::Small {
            n: [sn[0], sn[1], sn[2], sn[3]],
            d: sd,
        }),
        _ => CycEight(Repr::Big(Box::new(BigCyc { n, d }))),
    }
}

impl CycEight {
    pub fn zero() -> Self {
        CycEight(Repr::Small { n: [0; 4], d: 1 })
    }

    pub fn one() -> Self {
        CycEight(Repr::Small { n: [1, 0, 0, 0], d: 1 })
    }

    pub fn from_int(v: i64) -> Self {
        normalize_i128([v as i128, 0, 0, 0], 1)
    }

    /// ζ^k for any integer k (ζ⁸ = 1, ζ⁴ = −1).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut n = [0i64; 4];
        if k < 4 {
            n[k] = 1;
        } else {
            n[k - 4] = -1;
        }
        CycEight(Repr::Small { n, d: 1 })
    }

    /// i = ζ²
    pub fn i() -> Self {
        Self::zeta_pow(2)
    }

    /// √2 = ζ − ζ³
    pub fn sqrt2() -> Self {
        CycEight(Repr::Small { n: [0, 1, 0, -1], d: 1 })
    }

    /// 1/√2 = (ζ − ζ³)/2
    pub fn inv_sqrt2() -> Self {
        CycEight(Repr::Small { n: [0, 1, 0, -1], d: 2 })
    }

    pub fn from_rational(r: &Rational) -> Self {
        match r.small() {
            Some((n, d)) => CycEight(Repr::Small { n: [n, 0, 0, 0], d }),
            None => {
                let b = r.to_big();
                normalize_big(
                    [
                        b.numer().clone(),
                        BigInt::zero(),
                        BigInt::zero(),
                        BigInt::zero(),
                    ],
                    b.denom().clone(),
                )
            }
        }
    }

    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        let small: Option<Vec<(i64, i64)>> = c.iter().map(|r| r.small()).collect();
        if let Some(s) = small {
            // common denominator = lcm of the four, products guarded
            let lcm2 = |a: i128, b: i128| a.checked_mul(b / gcd_u128(a as u128, b as u128) as i128);
            let d = lcm2(s[0].1 as i128, s[1].1 as i128)
                .and_then(|l| lcm2(l, s[2].1 as i128))
                .and_then(|l| lcm2(l, s[3].1 as i128));
            if let Some(d) = d {
                let n: Option<Vec<i128>> = s
                    .iter()
                    .map(|(num, den)| (*num as i128).checked_mul(d / *den as i128))
                    .collect();
                if let Some(n) = n {
                    return normalize_i128([n[0], n[1], n[2], n[3]], d);
                }
            }
        }
        let big: Vec<BigRational> = c.iter().map(|r| r.to_big()).collect();
        let mut d = BigInt::from(1);
        for r in &big {
            d = d.lcm(r.denom());
        }
        let n: Vec<BigInt> = big.iter().map(|r| r.numer() * (&d / r.denom())).collect();
        normalize_big([n[0].clone(), n[1].clone(), n[2].clone(), n[3].clone()], d)
    }

    /// Coefficient of ζ^k as a rational, k = 0..3.
    pub fn coeff(&self, k: usize) -> Rational {
        match &self.0 {
            Repr::Small { n, d } => {
                let mut r = Rational::new(n[k], *d);
                // Rational::new reduces; that's fine, coefficients are views.
                if n[k] == 0 {
                    r = Rational::zero();
                }
                r
            }
            Repr::Big(b) => {
                Rational::from_big(BigRational::new(b.n[k].clone(), b.d.clone()))
            }
        }
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.coeff(0), self.coeff(1), self.coeff(2), self.coeff(3)]
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Small { n: [0, 0, 0, 0], .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small { n: [1, 0, 0, 0], d: 1 })
    }

    /// True when the value is rational (no ζ, ζ², ζ³ component).
    pub fn is_rational(&self) -> bool {
        match &self.0 {
            Repr::Small { n, .. } => n[1] == 0 && n[2] == 0 && n[3] == 0,
            Repr::Big(b) => b.n[1].is_zero() && b.n[2].is_zero() && b.n[3].is_zero(),
        }
    }

    fn to_bigcyc(&self) -> BigCyc {
        match &self.0 {
            Repr::Small { n, d } => BigCyc {
                n: n.map(BigInt::from),
                d: BigInt::from(*d),
            },
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small { n: a, d: da }, Repr::Small { n: b, d: db }) => {
                let (da, db) = (*da as i128, *db as i128);
                let mut n = [0i128; 4];
                for k in 0..4 {
                    n[k] = a[k] as i128 * db + b[k] as i128 * da;
                }
                normalize_i128(n, da * db)
            }
            _ => {
                let a = self.to_bigcyc();
                let b = rhs.to_bigcyc();
                let n = [
                    &a.n[0] * &b.d + &b.n[0] * &a.d,
                    &a.n[1] * &b.d + &b.n[1] * &a.d,
                    &a.n[2] * &b.d + &b.n[2] * &a.d,
                    &a.n[3] * &b.d + &b.n[3] * &a.d,
                ];
                normalize_big(n, &a.d * &b.d)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small { n, d } => CycEight(Repr::Small {
                n: n.map(|v| -v),
                d: *d,
            }),
            Repr::Big(b) => CycEight(Repr::Big(Box::new(BigCyc {
                n: b.n.clone().map(|v| -v),
                d: b.d.clone(),
            }))),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Field product, reduced via ζ⁴ = −1.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        match (&self.0, &rhs.0) {
            (Repr::Small { n: a, d: da }, Repr::Small { n: b, d: db }) => {
                let a = a.map(|v| v as i128);
                let b = b.map(|v| v as i128);
                // convolution with wrap-around sign: ζ^{j+k} = −ζ^{j+k−4}
                let n = [
                    a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
                    a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
                    a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
                    a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
                ];
                normalize_i128(n, *da as i128 * *db as i128)
            }
            _ => {
                let a = self.to_bigcyc();
                let b = rhs.to_bigcyc();
                let n = [
                    &a.n[0] * &b.n[0] - &a.n[1] * &b.n[3] - &a.n[2] * &b.n[2] - &a.n[3] * &b.n[1],
                    &a.n[0] * &b.n[1] + &a.n[1] * &b.n[0] - &a.n[2] * &b.n[3] - &a.n[3] * &b.n[2],
                    &a.n[0] * &b.n[2] + &a.n[1] * &b.n[1] + &a.n[2] * &b.n[0] - &a.n[3] * &b.n[3],
                    &a.n[0] * &b.n[3] + &a.n[1] * &b.n[2] + &a.n[2] * &b.n[1] + &a.n[3] * &b.n[0],
                ];
                normalize_big(n, &a.d * &b.d)
            }
        }
    }

    /// Complex conjugation: ζ ↦ ζ⁻¹ = −ζ³ extended linearly.
    pub fn conj(&self) -> Self {
        let flip = |n: [i64; 4]| [n[0], -n[3], -n[2], -n[1]];
        match &self.0 {
            Repr::Small { n, d } => CycEight(Repr::Small { n: flip(*n), d: *d }),
            Repr::Big(b) => CycEight(Repr::Big(Box::new(BigCyc {
                n: [
                    b.n[0].clone(),
                    -b.n[3].clone(),
                    -b.n[2].clone(),
                    -b.n[1].clone(),
                ],
                d: b.d.clone(),
            }))),
        }
    }

    /// Multiplicative inverse, by solving the 4×4 rational linear system for
    /// the multiplication-by-self matrix over the power basis.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // column j = coefficients of self·ζ^j
        let c = self.coeffs();
        let cols = [
            [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
            [-&c[3], c[0].clone(), c[1].clone(), c[2].clone()],
            [-&c[2], -&c[3], c[0].clone(), c[1].clone()],
            [-&c[1], -&c[2], -&c[3], c[0].clone()],
        ];
        let m: Vec<Vec<Rational>> = (0..4)
            .map(|row| (0..4).map(|col| cols[col][row].clone()).collect())
            .collect();
        let mut rhs = vec![Rational::zero(); 4];
        rhs[0] = Rational::one();
        let x = super::linalg::solve(&m, &rhs).ok_or(ExactError::DivisionByZero)?;
        Ok(Self::from_coeffs([
            x[0].clone(),
            x[1].clone(),
            x[2].clone(),
            x[3].clone(),
        ]))
    }

    /// |self|² = self · conj(self); the result is real for the values used
    /// in gate matrices.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }
}

impl PartialOrd for CycEight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycEight {
    /// Lexicographic on the coefficient vector (c₀, c₁, c₂, c₃).
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { n: a, d: da }, Repr::Small { n: b, d: db }) => {
                for k in 0..4 {
                    let lhs = a[k] as i128 * *db as i128;
                    let rhs = b[k] as i128 * *da as i128;
                    match lhs.cmp(&rhs) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            _ => {
                for k in 0..4 {
                    match self.coeff(k).cmp(&other.coeff(k)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for CycEight {
    /// `c0,c1,c2,c3` with each coefficient as `p/q` in lowest terms
    /// (`q` omitted when 1). Round-trips bit-exactly through [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.coeff(0),
            self.coeff(1),
            self.coeff(2),
            self.coeff(3)
        )
    }
}

impl fmt::Debug for CycEight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc({self})")
    }
}

impl FromStr for CycEight {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(ExactError::Parse(s.to_string()));
        }
        let c: Result<Vec<Rational>, _> = parts.iter().map(|p| p.trim().parse()).collect();
        let c = c?;
        Ok(Self::from_coeffs([
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            c[3].clone(),
        ]))
    }
}
