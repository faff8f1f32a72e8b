//! The exact rational scalar used throughout the crate.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with
//! a positive denominator; `+`, `-`, `*`, `/` and comparisons are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Rational = BigRational;

/// The fraction `p/q`. Panics if `q == 0`; use [`parse_rational`] for
/// untrusted input.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a [`Rational`].
pub fn rint(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest integer `k` (as a [`Rational`]) with `k <= x`.
pub fn floor(x: &Rational) -> Rational {
    x.floor()
}

/// `x - floor(x)`, always in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parses `p/q` or a bare integer `p`, with optional sign on `p`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numerator: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator `{num}`"))?;
    let denominator: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid denominator `{d}`"))?,
        None => BigInt::from(1),
    };
    if denominator.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(BigRational::new(numerator, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["2/3", "-7/4", "5", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        // reduction and sign normalization
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1/-2").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn fract_is_periodic_remainder() {
        assert_eq!(fract(&rat(7, 3)), rat(1, 3));
        assert_eq!(fract(&rat(-1, 4)), rat(3, 4));
        assert_eq!(fract(&rint(5)), rint(0));
    }
}
