use std::error::Error;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

type BigRatio = num_rational::BigRational;

/// Arbitrary-precision rational number, always fully reduced with a strictly
/// positive denominator, so derived equality is value equality.
///
/// Values whose numerator and denominator fit in a machine word are stored
/// inline; anything larger promotes to heap big integers and demotes back as
/// soon as it fits again. The matrices here hold millions of small entries,
/// and the inline representation is what keeps exact certification at
/// n = 2000 to seconds instead of minutes.
#[derive(Clone, PartialEq, Eq)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Reduced, `den > 0`, and not representable as `Small`.
    Big(Box<BigRatio>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduces `num/den` (any signs, `den != 0`) and picks the representation.
/// Inputs are bounded away from `i128::MIN`, so negation is safe.
fn from_i128_ratio(num: i128, den: i128) -> Rational {
    debug_assert!(den != 0);
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    let (a, b) = (num.unsigned_abs(), den as u128);
    // 64-bit gcd has hardware division; use it whenever the operands fit.
    let g = match (u64::try_from(a), u64::try_from(b)) {
        (Ok(a64), Ok(b64)) => gcd_u64(a64, b64) as u128,
        _ => gcd_u128(a, b),
    };
    let (num, den) = if g > 1 {
        (num / g as i128, den / g as i128)
    } else {
        (num, den)
    };
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
        _ => Rational(Repr::Big(Box::new(BigRatio::new_raw(
            BigInt::from(num),
            BigInt::from(den),
        )))),
    }
}

/// Wraps an already-reduced big ratio, demoting when it fits inline.
fn from_big(value: BigRatio) -> Rational {
    match (value.numer().to_i64(), value.denom().to_i64()) {
        (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
        _ => Rational(Repr::Big(Box::new(value))),
    }
}

impl Rational {
    /// Builds a reduced rational from big integers. Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Rational {
        assert!(!den.is_zero(), "rational denominator must be nonzero");
        from_big(BigRatio::new(num, den))
    }

    pub fn from_integer(value: BigInt) -> Rational {
        from_big(BigRatio::from_integer(value))
    }

    /// Numerator of the reduced form (sign-carrying).
    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    /// Denominator of the reduced form, always positive.
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "division by zero");
        match &self.0 {
            Repr::Small { num, den } => from_i128_ratio(*den as i128, *num as i128),
            Repr::Big(b) => from_big(b.recip()),
        }
    }

    fn to_big(&self) -> BigRatio {
        match &self.0 {
            Repr::Small { num, den } => BigRatio::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => (**b).clone(),
        }
    }
}

fn add_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        let cross1 = *an as i128 * *bd as i128;
        let cross2 = *bn as i128 * *ad as i128;
        // i64 cross products are below 2^126; only the sum can overflow.
        if let Some(num) = cross1.checked_add(cross2) {
            return from_i128_ratio(num, *ad as i128 * *bd as i128);
        }
    }
    from_big(a.to_big() + b.to_big())
}

fn sub_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        let cross1 = *an as i128 * *bd as i128;
        let cross2 = *bn as i128 * *ad as i128;
        if let Some(num) = cross1.checked_sub(cross2) {
            return from_i128_ratio(num, *ad as i128 * *bd as i128);
        }
    }
    from_big(a.to_big() - b.to_big())
}

fn mul_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        return from_i128_ratio(*an as i128 * *bn as i128, *ad as i128 * *bd as i128);
    }
    from_big(a.to_big() * b.to_big())
}

fn div_impl(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        return from_i128_ratio(*an as i128 * *bd as i128, *ad as i128 * *bn as i128);
    }
    from_big(a.to_big() / b.to_big())
}

macro_rules! forward_binop {
    ($op_trait:ident, $method:ident, $impl_fn:ident) => {
        impl $op_trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $op_trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(&self, rhs)
            }
        }
        impl $op_trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(self, &rhs)
            }
        }
        impl $op_trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

macro_rules! forward_assign {
    ($op_trait:ident, $method:ident, $impl_fn:ident) => {
        impl $op_trait<Rational> for Rational {
            fn $method(&mut self, rhs: Rational) {
                *self = $impl_fn(self, &rhs);
            }
        }
        impl $op_trait<&Rational> for Rational {
            fn $method(&mut self, rhs: &Rational) {
                *self = $impl_fn(self, rhs);
            }
        }
    };
}

forward_assign!(AddAssign, add_assign, add_impl);
forward_assign!(SubAssign, sub_assign, sub_impl);
forward_assign!(MulAssign, mul_assign, mul_impl);
forward_assign!(DivAssign, div_assign, div_impl);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => from_i128_ratio(-(*num as i128), *den as i128),
            Repr::Big(b) => from_big(-(**b).clone()),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
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
        fmt::Display::fmt(self, f)
    }
}

/// Builds a reduced rational from machine integers. Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rational denominator must be nonzero");
    from_i128_ratio(numer as i128, denom as i128)
}

/// Builds a rational from a machine integer.
pub fn integer(value: i64) -> Rational {
    Rational(Repr::Small { num: value, den: 1 })
}

/// Error from parsing a `p/q` rational literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    /// A numerator or denominator token is not a valid integer.
    InvalidInteger(String),
    /// The denominator is zero.
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::InvalidInteger(token) => {
                write!(f, "invalid integer `{token}` in rational literal")
            }
            ParseRationalError::ZeroDenominator => write!(f, "rational denominator is zero"),
        }
    }
}

impl Error for ParseRationalError {}

/// Parses `p/q`, or a bare integer `p`, into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    let parse_int = |token: &str| -> Result<BigInt, ParseRationalError> {
        token
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::InvalidInteger(token.to_owned()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((numer, denom)) => {
            let numer = parse_int(numer)?;
            let denom = parse_int(denom)?;
            if denom.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-5/3", "22/7"] {
            let value = parse_rational(text).unwrap();
            assert_eq!(format_rational(&value), text);
        }
    }

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        assert_eq!(parse_rational("4/6").unwrap(), rational(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap(), rational(-1, 2));
        assert_eq!(format_rational(&rational(6, 2)), "3");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert!(matches!(
            parse_rational("a/2"),
            Err(ParseRationalError::InvalidInteger(_))
        ));
        assert!(matches!(
            parse_rational("1.5"),
            Err(ParseRationalError::InvalidInteger(_))
        ));
    }

    #[test]
    #[should_panic(expected = "denominator must be nonzero")]
    fn zero_denominator_panics() {
        let _ = rational(1, 0);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn division_by_zero_panics() {
        let _ = integer(1) / integer(0);
    }

    #[test]
    fn values_beyond_machine_words_promote_and_demote() {
        let huge = parse_rational("170141183460469231731687303715884105727").unwrap();
        assert_eq!(
            format_rational(&huge),
            "170141183460469231731687303715884105727"
        );
        let one = &huge / &huge;
        assert!(one.is_one());
        let sum = &huge + &huge;
        let back = &sum - &huge;
        assert_eq!(back, huge);
        // Overflow inside inline arithmetic promotes transparently.
        let big_inline = rational(i64::MAX, 1);
        let doubled = &big_inline + &big_inline;
        assert_eq!(format_rational(&doubled), "18446744073709551614");
        assert_eq!(&doubled - &big_inline, big_inline);
    }

    #[test]
    fn mixed_representation_arithmetic_is_exact() {
        let huge = parse_rational("36893488147419103232").unwrap(); // 2^65
        let half = rational(1, 2);
        assert_eq!(format_rational(&(&huge * &half)), "18446744073709551616");
        let tiny = huge.recip();
        assert_eq!(format_rational(&tiny), "1/36893488147419103232");
        assert!((&huge * &tiny).is_one());
    }

    fn assert_reduced(value: &Rational) {
        let (numer, denom) = (value.numer(), value.denom());
        assert!(denom.is_positive(), "denominator must be positive");
        assert!(numer.gcd(&denom).is_one(), "entry {value} is not reduced");
    }

    proptest! {
        // Arithmetic must preserve the reduced-form invariant.
        #[test]
        fn operations_stay_reduced(
            a in -1000i64..1000, b in 1i64..100,
            c in -1000i64..1000, d in 1i64..100,
        ) {
            let x = rational(a, b);
            let y = rational(c, d);
            assert_reduced(&(&x + &y));
            assert_reduced(&(&x - &y));
            assert_reduced(&(&x * &y));
            if c != 0 {
                assert_reduced(&(&x / &y));
            }
            let round_trip = parse_rational(&format_rational(&x)).unwrap();
            prop_assert_eq!(round_trip, x);
        }

        // Inline and promoted representations must agree with the reference
        // big-integer arithmetic.
        #[test]
        fn matches_reference_arithmetic(
            a in proptest::num::i64::ANY, b in 1i64..,
            c in proptest::num::i64::ANY, d in 1i64..,
        ) {
            let x = rational(a, b);
            let y = rational(c, d);
            let reference = |v: &Rational| BigRatio::new(v.numer(), v.denom());
            prop_assert_eq!(reference(&(&x + &y)), reference(&x) + reference(&y));
            prop_assert_eq!(reference(&(&x - &y)), reference(&x) - reference(&y));
            prop_assert_eq!(reference(&(&x * &y)), reference(&x) * reference(&y));
            if c != 0 {
                prop_assert_eq!(reference(&(&x / &y)), reference(&x) / reference(&y));
            }
        }
    }
}
