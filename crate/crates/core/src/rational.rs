//! Exact rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use num_rational::BigRational as Rational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` formatting, integers without denominator.
pub fn fmt(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn approx(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// JSON form `{"num": .., "den": ..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: serde_json::Number,
    pub den: serde_json::Number,
}

impl RationalJson {
    pub fn from_rational(r: &Rational) -> crate::Result<Self> {
        Ok(RationalJson {
            num: big_to_number(r.numer())?,
            den: big_to_number(r.denom())?,
        })
    }

    /// Rejects floats, zero or negative denominators and non-reduced fractions.
    pub fn to_rational(&self, location: &str) -> crate::Result<Rational> {
        let num = number_to_big(&self.num, location)?;
        let den = number_to_big(&self.den, location)?;
        if !den.is_positive() {
            return Err(crate::Error::parse(
                location,
                "denominator must be positive",
            ));
        }
        if !num.gcd(&den).is_one() && !(num.is_zero() && den.is_one()) {
            return Err(crate::Error::parse(
                location,
                format!("rational {num}/{den} is not in lowest terms"),
            ));
        }
        Ok(Rational::new_raw(num, den))
    }
}

fn big_to_number(v: &BigInt) -> crate::Result<serde_json::Number> {
    if let Some(x) = v.to_i64() {
        Ok(serde_json::Number::from(x))
    } else if let Some(x) = v.to_u64() {
        Ok(serde_json::Number::from(x))
    } else {
        Err(crate::Error::input(format!(
            "integer {v} does not fit into a 64-bit JSON number"
        )))
    }
}

fn number_to_big(n: &serde_json::Number, location: &str) -> crate::Result<BigInt> {
    if let Some(x) = n.as_i64() {
        Ok(BigInt::from(x))
    } else if let Some(x) = n.as_u64() {
        Ok(BigInt::from(x))
    } else {
        Err(crate::Error::parse(
            location,
            format!("expected an integer, found {n}"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(fmt(&ratio(10, 4)), "5/2");
        assert_eq!(fmt(&int(6)), "6");
        assert_eq!(ceil(&ratio(40, 7)), BigInt::from(6));
    }

    #[test]
    fn json_rejects_unreduced_and_floats() {
        let j: RationalJson = serde_json::from_str(r#"{"num":2,"den":4}"#).unwrap();
        assert!(j.to_rational("x").is_err());
        let j: RationalJson = serde_json::from_str(r#"{"num":1.5,"den":4}"#).unwrap();
        assert!(j.to_rational("x").is_err());
        let j: RationalJson = serde_json::from_str(r#"{"num":4,"den":25}"#).unwrap();
        assert_eq!(j.to_rational("x").unwrap(), ratio(4, 25));
    }
}
