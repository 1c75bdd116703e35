//! Exact coefficient fields: the rationals and prime fields 𝔽_p.
//!
//! Arithmetic goes through a field object (`&F`) so that prime fields can
//! carry their modulus at runtime. Rationals use machine-word fractions and
//! promote to arbitrary precision only when an operation would overflow.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem, String>;
}

/// Which coefficient field to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub const F2: FieldSpec = FieldSpec::Prime(2);
    pub const F3: FieldSpec = FieldSpec::Prime(3);
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(2) => write!(f, "f2"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rational" => return Ok(FieldSpec::Rational),
            "f2" => return Ok(FieldSpec::F2),
            "f3" => return Ok(FieldSpec::F3),
            _ => {}
        }
        let p = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix('f'))
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs `$body` with `$f` bound to the concrete field selected by `$spec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::field::FieldSpec::Rational => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldSpec::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p);
                $body
            }
        }
    };
}

/// A rational number: a word-sized fraction, or a big one after overflow.
#[derive(Clone, Debug)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rat {
    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn from_big(b: BigRational) -> Rat {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(Box::new(b)),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(b) => b.is_zero(),
        }
    }

    fn binop(
        &self,
        other: &Rat,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, other) {
            if let Some(r) = small(a, b) {
                return Rat::Small(r);
            }
        }
        Rat::from_big(big(self.to_big(), other.to_big()))
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(a), Rat::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(r) => write!(f, "{r}"),
            Rat::Big(b) => write!(f, "{b}"),
        }
    }
}

/// ℚ.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> Rat {
        Rat::Small(Ratio::zero())
    }

    fn one(&self) -> Rat {
        Rat::Small(Ratio::one())
    }

    fn from_i64(&self, v: i64) -> Rat {
        Rat::Small(Ratio::from_integer(v))
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.binop(b, |x, y| x.checked_add(y), |x, y| x + y)
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.binop(b, |x, y| x.checked_sub(y), |x, y| x - y)
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.binop(b, |x, y| x.checked_mul(y), |x, y| x * y)
    }

    fn neg(&self, a: &Rat) -> Rat {
        match a {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-r),
            _ => Rat::from_big(-a.to_big()),
        }
    }

    fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        a.binop(
            &self.one(),
            |x, y| y.checked_div(x),
            |x, _| x.recip(),
        )
    }

    fn format(&self, a: &Rat) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<Rat, String> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad rational `{s}`"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad rational `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        let r = BigRational::new(n, d);
        debug_assert!(r.denom().is_positive());
        Ok(Rat::from_big(r))
    }
}

/// 𝔽_p for a prime p.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 32), "modulus too large");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64, String> {
        let v: BigInt = s
            .trim()
            .parse()
            .map_err(|_| format!("bad integer mod {}: `{s}`", self.p))?;
        let r = ((v % self.p) + self.p) % self.p;
        Ok(r.to_u64().expect("reduced residue fits"))
    }
}
