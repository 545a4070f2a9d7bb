//! Exact scalars: rationals and the quadratic field Q(√2).
//!
//! Every matrix entry in the crate is a [`Scalar`] `rat + irr·√2` with both
//! coefficients stored as arbitrary-precision rationals in lowest terms, so
//! identities are checked by structural equality with no tolerance.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational, always normalized (positive denominator,
/// coprime numerator and denominator).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar encoding: {0}")]
    Malformed(String),
}

/// An element `rat + irr·√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: Rational,
    irr: Rational,
}

impl Scalar {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        Scalar { rat, irr }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Scalar { rat: Rational::zero(), irr: Rational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { rat: Rational::from_integer(n.into()), irr: Rational::zero() }
    }

    /// `p/q + (r/s)·√2`. Panics if a denominator is zero.
    pub fn from_fractions(p: i64, q: i64, r: i64, s: i64) -> Self {
        Scalar {
            rat: Rational::new(p.into(), q.into()),
            irr: Rational::new(r.into(), s.into()),
        }
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    /// Field norm `rat² − 2·irr²`; zero only for the zero element since √2 is irrational.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(2.into()) * &self.irr * &self.irr
    }

    pub fn conjugate(&self) -> Self {
        Scalar { rat: self.rat.clone(), irr: -&self.irr }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar { rat: &self.rat / &n, irr: -(&self.irr / &n) })
    }

    pub fn div(&self, other: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// Re-reduces both coefficients. Values built through the public API are
    /// already reduced, so this is an identity on them.
    pub fn normalized(&self) -> Self {
        Scalar { rat: reduce(&self.rat), irr: reduce(&self.irr) }
    }

    /// The `[p, q, r, s]` encoding of `p/q + (r/s)·√2`.
    pub fn to_parts(&self) -> [BigInt; 4] {
        [
            self.rat.numer().clone(),
            self.rat.denom().clone(),
            self.irr.numer().clone(),
            self.irr.denom().clone(),
        ]
    }

    pub fn from_parts(parts: [BigInt; 4]) -> Result<Self, ScalarError> {
        let [p, q, r, s] = parts;
        if !q.is_positive() || !s.is_positive() {
            return Err(ScalarError::Malformed("denominators must be positive".into()));
        }
        if !p.gcd(&q).is_one() || !r.gcd(&s).is_one() {
            return Err(ScalarError::Malformed("fractions must be in lowest terms".into()));
        }
        Ok(Scalar { rat: Rational::new_raw(p, q), irr: Rational::new_raw(r, s) })
    }
}

fn reduce(r: &Rational) -> Rational {
    Rational::new(r.numer().clone(), r.denom().clone())
}

/// Serializes a big integer as a JSON number when it fits in `i64`, otherwise
/// as a decimal string.
pub(crate) fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(n.to_string()),
    }
}

pub(crate) fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<serde_json::Value> = self.to_parts().iter().map(int_to_json).collect();
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(deserializer)?;
        if raw.len() != 4 {
            return Err(D::Error::custom("scalar must have four components"));
        }
        let mut parts = Vec::with_capacity(4);
        for v in &raw {
            parts.push(int_from_json(v).ok_or_else(|| D::Error::custom("scalar component is not an integer"))?);
        }
        let parts: [BigInt; 4] = parts.try_into().expect("length checked");
        Scalar::from_parts(parts).map_err(D::Error::custom)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}√2", self.irr),
            (false, false) => {
                if self.irr.is_negative() {
                    write!(f, "{}-{}√2", self.rat, -&self.irr)
                } else {
                    write!(f, "{}+{}√2", self.rat, self.irr)
                }
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar { rat: r, irr: Rational::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar { rat: &self.rat + &rhs.rat, irr: &self.irr + &rhs.irr }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar { rat: self.rat + rhs.rat, irr: self.irr + rhs.irr }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar { rat: &self.rat - &rhs.rat, irr: &self.irr - &rhs.irr }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar { rat: self.rat - rhs.rat, irr: self.irr - rhs.irr }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let (a, b, c, d) = (&self.rat, &self.irr, &rhs.rat, &rhs.irr);
        if b.is_zero() && d.is_zero() {
            return Scalar { rat: a * c, irr: Rational::zero() };
        }
        let two = Rational::from_integer(2.into());
        Scalar { rat: a * c + two * b * d, irr: a * d + b * c }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -self.rat, irr: -self.irr }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -&self.rat, irr: -&self.irr }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: i64, q: i64, r: i64, t: i64) -> Scalar {
        Scalar::from_fractions(p, q, r, t)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&s(1, 2, 0, 1) + &s(1, 2, 0, 1), s(1, 1, 0, 1));
        assert_eq!(&s(0, 1, 1, 1) + &s(0, 1, -1, 1), Scalar::zero());
        assert!((&s(0, 1, 1, 1) + &s(0, 1, -1, 1)).is_zero());
        assert_eq!(&s(1, 1, 1, 1) + &s(2, 1, 3, 1), s(3, 1, 4, 1));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        let x = s(3, 7, -5, 11);
        assert_eq!(&Scalar::one() * &x, x);
        assert_eq!(&s(1, 1, 1, 1) * &s(1, 1, -1, 1), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Scalar::sqrt2().inv().unwrap(), s(0, 1, 1, 2));
        assert_eq!(Scalar::from_int(2).inv().unwrap(), s(1, 2, 0, 1));
        let y = s(1, 1, 1, 1).inv().unwrap();
        assert_eq!(y, s(-1, 1, 1, 1));
        assert_eq!(&s(1, 1, 1, 1) * &y, Scalar::one());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn stored_fractions_are_reduced() {
        let x = s(4, -8, 6, 9);
        assert_eq!(x.to_parts().map(|b| b.to_i64().unwrap()), [-1, 2, 2, 3]);
    }

    #[test]
    fn json_encoding() {
        let x = s(-1, 2, 3, 4);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, "[-1,2,3,4]");
        assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), x);
        assert!(serde_json::from_str::<Scalar>("[2,4,0,1]").is_err());
        assert!(serde_json::from_str::<Scalar>("[1,0,0,1]").is_err());
        assert!(serde_json::from_str::<Scalar>("[1,1,0]").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s(1, 2, -3, 1).to_string(), "1/2-3√2");
        assert_eq!(Scalar::sqrt2().to_string(), "1√2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..12, -20i64..20, 1i64..12).prop_map(|(p, q, r, t)| s(p, q, r, t))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x - &y) + &y, x.clone());
        }

        #[test]
        fn inverses(x in arb_scalar()) {
            prop_assume!(!x.is_zero());
            let y = x.inv().unwrap();
            prop_assert_eq!(&x * &y, Scalar::one());
            prop_assert_eq!(y.inv().unwrap(), x.clone());
        }

        #[test]
        fn normalization_is_idempotent(x in arb_scalar()) {
            prop_assert_eq!(x.normalized(), x.clone());
            prop_assert_eq!(x.normalized().normalized(), x.normalized());
        }

        #[test]
        fn json_round_trip(x in arb_scalar()) {
            let text = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), x);
        }
    }
}
