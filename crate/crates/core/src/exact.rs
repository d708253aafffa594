//! Exact rational scalars, signs, and the rational literal syntax.
//!
//! Every coordinate and coefficient in the crate is an [`ExactScalar`], an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Literals are written `p/q` or `p` with an optional leading
//! minus sign and no whitespace.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type ExactScalar = BigRational;

/// Builds an integer-valued scalar.
pub fn int(value: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(value))
}

/// Builds `num / den`, reduced. Panics when `den` is zero.
pub fn ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Side of a hyperplane, or the sign of an exact value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &ExactScalar) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Sides of a point or region with respect to an ordered list of hyperplanes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Sign {
        self.0[index]
    }

    /// True when no entry is zero.
    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|s| *s != Sign::Zero)
    }

    /// True when every entry of `self` is zero or equals the entry of
    /// `region`: the point lies in the closure of the region.
    pub fn in_closure_of(&self, region: &SignVector) -> bool {
        self.0
            .iter()
            .zip(&region.0)
            .all(|(p, r)| *p == Sign::Zero || p == r)
    }

    /// Copy with the entry at `index` removed.
    pub fn without(&self, index: usize) -> SignVector {
        let mut out = self.0.clone();
        out.remove(index);
        SignVector(out)
    }

    /// Copy with `sign` inserted at `index`.
    pub fn with_inserted(&self, index: usize, sign: Sign) -> SignVector {
        let mut out = self.0.clone();
        out.insert(index, sign);
        SignVector(out)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn parse_digits(text: &str, whole: &str) -> Result<BigInt, ParseRationalError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid(whole.to_string()));
    }
    text.parse::<BigInt>()
        .map_err(|_| ParseRationalError::Invalid(whole.to_string()))
}

/// Parses `p/q`, `p`, `-p/q` or `-p`.
pub fn parse_rational(text: &str) -> Result<ExactScalar, ParseRationalError> {
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_digits(n, text)?, parse_digits(d, text)?),
        None => (parse_digits(body, text)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(text.to_string()));
    }
    let num = if negative { -num } else { num };
    Ok(BigRational::new(num, den))
}

/// Formats in the literal syntax accepted by [`parse_rational`].
pub fn format_rational(value: &ExactScalar) -> String {
    // BigRational's Display already prints `p` or `p/q` in lowest terms.
    value.to_string()
}

/// Lossy conversion for reporting columns only.
pub fn to_f64(value: &ExactScalar) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "+1", "1 /2", "1/", "/2", "1/-2", "--1", "1.5", "a", " 1"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let q = parse_rational("-10/4").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&q), "-5/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn sign_of_values() {
        assert_eq!(Sign::of(&int(0)), Sign::Zero);
        assert_eq!(Sign::of(&ratio(-1, 3)), Sign::Negative);
        assert_eq!(Sign::of(&ratio(1, 3)), Sign::Positive);
        assert_eq!(Sign::Positive.flip(), Sign::Negative);
    }
}
