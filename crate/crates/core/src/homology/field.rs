use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field: GF(p) for a prime `p`, or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);
    pub const Q: FieldSpec = FieldSpec::Rationals;

    /// GF(p), validating primality by trial division. Moduli are limited to
    /// 32 bits so products fit in a machine word.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn scalar(self, value: i64) -> ExactScalar {
        match self {
            FieldSpec::Prime(p) => ExactScalar::Modular {
                value: value.rem_euclid(p as i64) as u64,
                modulus: p,
            },
            FieldSpec::Rationals => ExactScalar::Rational(BigRational::from_integer(value.into())),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "z{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q`/`Q` for the rationals, `z<p>` or `gf<p>` for GF(p).
    fn from_str(s: &str) -> Result<FieldSpec> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix('z')
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::UnknownField(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::UnknownField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An element of GF(p) or of Q. Rationals are kept in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactScalar {
    Modular { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl ExactScalar {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Modular { value, .. } => *value == 0,
            ExactScalar::Rational(r) => r.is_zero(),
        }
    }

    fn same_field(&self, other: &ExactScalar) {
        if let (ExactScalar::Modular { modulus: a, .. }, ExactScalar::Modular { modulus: b, .. }) =
            (self, other)
        {
            assert_eq!(a, b, "mixing GF({a}) and GF({b})");
        }
    }

    pub fn add(&self, other: &ExactScalar) -> ExactScalar {
        self.same_field(other);
        match (self, other) {
            (ExactScalar::Modular { value: a, modulus }, ExactScalar::Modular { value: b, .. }) => {
                ExactScalar::Modular {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => ExactScalar::Rational(a + b),
            _ => panic!("mixing GF(p) and Q"),
        }
    }

    pub fn neg(&self) -> ExactScalar {
        match self {
            ExactScalar::Modular { value, modulus } => ExactScalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            ExactScalar::Rational(a) => ExactScalar::Rational(-a),
        }
    }

    pub fn sub(&self, other: &ExactScalar) -> ExactScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ExactScalar) -> ExactScalar {
        self.same_field(other);
        match (self, other) {
            (ExactScalar::Modular { value: a, modulus }, ExactScalar::Modular { value: b, .. }) => {
                ExactScalar::Modular {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => ExactScalar::Rational(a * b),
            _ => panic!("mixing GF(p) and Q"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<ExactScalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            ExactScalar::Modular { value, modulus } => ExactScalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            ExactScalar::Rational(a) => ExactScalar::Rational(a.recip()),
        })
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Modular { value, .. } => write!(f, "{value}"),
            ExactScalar::Rational(r) => write!(f, "{}", format_rational(r)),
        }
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Serializes an exact rational as the string `p/q`.
pub fn serialize_rational<S: Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_rational(r))
}

pub fn serialize_rationals<S: Serializer>(
    rs: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rs.len()))?;
    for r in rs {
        seq.serialize_element(&format_rational(r))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parse_fields() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("z3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert_eq!("GF7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("z4".parse::<FieldSpec>().unwrap_err(), Error::NotPrime(4));
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::prime(1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn scalar_arithmetic() {
        let f = FieldSpec::Prime(7);
        let a = f.scalar(3);
        assert_eq!(a.mul(&a.inv().unwrap()), f.scalar(1));
        assert_eq!(f.scalar(-1), f.scalar(6));
        let q = FieldSpec::Rationals;
        let h = q.scalar(2).inv().unwrap();
        assert_eq!(h.to_string(), "1/2");
        assert_eq!(h.add(&h), q.scalar(1));
        assert!(q.scalar(0).inv().is_none());
    }

    #[test]
    fn rationals_are_normalized() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert!(r.denom().is_positive());
    }
}
