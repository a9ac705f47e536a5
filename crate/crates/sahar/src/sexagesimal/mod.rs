//! Exact rational arithmetic with base-60 (sexagesimal) parsing and
//! rendering, in the notation conventional for Old Babylonian
//! mathematical texts: digit groups 0..=59 separated by commas, with a
//! semicolon as the integer/fraction boundary. `"1,12;15"` denotes
//! 1·60 + 12 + 15/60 = 289/4.
//!
//! Values are arbitrary-precision rationals, so every arithmetic step is
//! exact. A rational has a finite sexagesimal expansion exactly when its
//! reduced denominator has no prime factor other than 2, 3, and 5; such
//! integers are the "regular" numbers of the reciprocal tables.

mod digits;

pub use digits::SexDigits;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Fraction places rendered by the convenience formatters before the
/// truncation marker is emitted.
pub const DEFAULT_FRACTION_PLACES: usize = 32;

/// Marker appended to a rendering that was cut off before the expansion
/// terminated (or that never terminates).
pub const TRUNCATION_MARKER: &str = "\u{2026}";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SexError {
    #[error("empty numeral")]
    EmptyNumeral,
    #[error("malformed numeral at byte {offset}: {detail}")]
    Malformed { offset: usize, detail: String },
    #[error("digit group {group:?} at byte {offset} out of range: groups run 0..=59")]
    GroupOutOfRange { group: String, offset: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero is neither regular nor irregular")]
    ZeroRegularity,
    #[error("no finite sexagesimal expansion: reduced denominator {denom} has a prime factor other than 2, 3, 5")]
    NotFinite { denom: String },
}

/// An exact rational with sexagesimal parsing and rendering.
///
/// Wraps an arbitrary-precision reduced fraction; all arithmetic is
/// exact. Construct from a numeral with [`parse_sex`] or [`FromStr`],
/// from integers via `From`, or from a numerator/denominator pair with
/// [`SexRational::new`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SexRational(BigRational);

impl SexRational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, SexError> {
        let d: BigInt = denom.into();
        if d.is_zero() {
            return Err(SexError::DivisionByZero);
        }
        Ok(SexRational(BigRational::new(numer.into(), d)))
    }

    pub fn zero() -> Self {
        SexRational(BigRational::zero())
    }

    pub fn one() -> Self {
        SexRational(BigRational::from_integer(BigInt::from(1)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        SexRational(BigRational::from_integer(n.into()))
    }

    /// Numerator of the reduced fraction (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced fraction, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        SexRational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn square(&self) -> Self {
        SexRational(&self.0 * &self.0)
    }

    /// Exact multiplicative inverse; zero has none.
    pub fn reciprocal(&self) -> Result<Self, SexError> {
        if self.is_zero() {
            return Err(SexError::DivisionByZero);
        }
        Ok(SexRational(self.0.recip()))
    }

    /// Exact quotient, rejecting a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, SexError> {
        if rhs.is_zero() {
            return Err(SexError::DivisionByZero);
        }
        Ok(SexRational(&self.0 / &rhs.0))
    }

    /// True when the value has a terminating base-60 expansion, i.e. the
    /// reduced denominator is a product of powers of 2, 3, and 5.
    pub fn is_finite_sexagesimal(&self) -> bool {
        is_smooth_2_3_5(self.0.denom().magnitude())
    }

    /// Nearest-f64 approximation, for display and numeric cross-checks.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Renders in absolute notation with the default place budget.
    pub fn to_absolute(&self) -> String {
        format_sex(self, FormatMode::Absolute, DEFAULT_FRACTION_PLACES)
    }

    /// Renders in floating notation with the default place budget.
    pub fn to_floating(&self) -> String {
        format_sex(self, FormatMode::Floating, DEFAULT_FRACTION_PLACES)
    }

    /// Absolute rendering that never truncates a terminating
    /// expansion, however deep; non-terminating values fall back to
    /// the default budget and marker.
    pub fn to_absolute_exact(&self) -> String {
        if self.is_finite_sexagesimal() {
            format_sex(self, FormatMode::Absolute, usize::MAX)
        } else {
            self.to_absolute()
        }
    }

}

impl From<BigRational> for SexRational {
    fn from(r: BigRational) -> Self {
        SexRational(r)
    }
}

impl From<BigInt> for SexRational {
    fn from(n: BigInt) -> Self {
        SexRational::from_integer(n)
    }
}

impl From<i64> for SexRational {
    fn from(n: i64) -> Self {
        SexRational::from_integer(n)
    }
}

impl From<u64> for SexRational {
    fn from(n: u64) -> Self {
        SexRational::from_integer(BigInt::from(n))
    }
}

impl From<i32> for SexRational {
    fn from(n: i32) -> Self {
        SexRational::from_integer(i64::from(n))
    }
}

impl From<u32> for SexRational {
    fn from(n: u32) -> Self {
        SexRational::from_integer(BigInt::from(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SexRational {
            type Output = SexRational;
            fn $method(self, rhs: SexRational) -> SexRational {
                SexRational((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a SexRational> for &'a SexRational {
            type Output = SexRational;
            fn $method(self, rhs: &'a SexRational) -> SexRational {
                SexRational((&self.0).$method(&rhs.0))
            }
        }

        impl<'a> $trait<&'a SexRational> for SexRational {
            type Output = SexRational;
            fn $method(self, rhs: &'a SexRational) -> SexRational {
                SexRational((self.0).$method(&rhs.0))
            }
        }

        impl<'a> $trait<SexRational> for &'a SexRational {
            type Output = SexRational;
            fn $method(self, rhs: SexRational) -> SexRational {
                SexRational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for SexRational {
    type Output = SexRational;
    fn neg(self) -> SexRational {
        SexRational(-self.0)
    }
}

impl Neg for &SexRational {
    type Output = SexRational;
    fn neg(self) -> SexRational {
        SexRational(-&self.0)
    }
}

/// Displays as a decimal fraction (`289/4`, or `72` for integers); use
/// [`format_sex`] or the `to_absolute`/`to_floating` helpers for base-60.
impl fmt::Display for SexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for SexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SexRational({} = {})", self.0, self.to_absolute())
    }
}

impl FromStr for SexRational {
    type Err = SexError;
    fn from_str(s: &str) -> Result<Self, SexError> {
        parse_sex(s)
    }
}

impl Serialize for SexRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SexRational", 2)?;
        s.serialize_field("sexagesimal", &self.to_absolute())?;
        s.serialize_field("decimal", &self.to_string())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SexRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SexVisitor;

        impl<'de> Visitor<'de> for SexVisitor {
            type Value = SexRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sexagesimal numeral string or a {sexagesimal, decimal} map")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<SexRational, E> {
                parse_flexible(v).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<SexRational, E> {
                Ok(SexRational::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<SexRational, E> {
                Ok(SexRational::from(v))
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<SexRational, A::Error> {
                let mut decimal: Option<String> = None;
                let mut sexagesimal: Option<String> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "decimal" => decimal = Some(map.next_value()?),
                        "sexagesimal" => sexagesimal = Some(map.next_value()?),
                        other => {
                            return Err(de::Error::unknown_field(
                                other,
                                &["sexagesimal", "decimal"],
                            ))
                        }
                    }
                }
                if let Some(d) = decimal {
                    return BigRational::from_str(&d)
                        .map(SexRational)
                        .map_err(de::Error::custom);
                }
                if let Some(s) = sexagesimal {
                    return parse_sex(&s).map_err(de::Error::custom);
                }
                Err(de::Error::missing_field("decimal"))
            }
        }

        deserializer.deserialize_any(SexVisitor)
    }
}

/// Parses either a sexagesimal numeral or a decimal fraction like `289/4`.
/// Used where JSON and CLI inputs accept both spellings. A bare integer
/// is identical in both readings, so no ambiguity arises: `72` is 72,
/// while seventy-two as a numeral is `1,12`.
pub fn parse_flexible(text: &str) -> Result<SexRational, SexError> {
    let t = text.trim();
    if t.contains('/') {
        return BigRational::from_str(t)
            .map(SexRational)
            .map_err(|e| SexError::Malformed {
                offset: 0,
                detail: e.to_string(),
            });
    }
    parse_sex(t).or_else(|e| {
        BigInt::from_str(t)
            .map(SexRational::from_integer)
            .map_err(|_| e)
    })
}

/// Parses a sexagesimal numeral.
///
/// Grammar: `['-'] group (',' group)* [';' group (',' group)*]` where
/// each group is a decimal integer 0..=59. Surrounding whitespace is
/// ignored; anything else is an error carrying the byte offset of the
/// offending character.
pub fn parse_sex(text: &str) -> Result<SexRational, SexError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(SexError::EmptyNumeral);
    }
    let lead = text.len() - text.trim_start().len();
    let (negative, body, body_off) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest, lead + 1),
        None => (false, trimmed, lead),
    };
    if body.is_empty() {
        return Err(SexError::Malformed {
            offset: body_off,
            detail: "sign with no digits".into(),
        });
    }

    let (int_str, frac_str) = match body.split_once(';') {
        Some((i, f)) => (i, Some(f)),
        None => (body, None),
    };

    let int_groups = parse_groups(int_str, body_off, "integer part")?;
    let frac_groups = match frac_str {
        Some(f) => parse_groups(f, body_off + int_str.len() + 1, "fraction part")?,
        None => Vec::new(),
    };

    let sixty = BigInt::from(60);
    let mut int_value = BigInt::zero();
    for g in &int_groups {
        int_value = int_value * &sixty + BigInt::from(*g);
    }
    let mut frac_num = BigInt::zero();
    for g in &frac_groups {
        frac_num = frac_num * &sixty + BigInt::from(*g);
    }
    let frac_den = sixty.pow(frac_groups.len() as u32);
    let mut value =
        BigRational::from_integer(int_value) + BigRational::new(frac_num, frac_den);
    if negative {
        value = -value;
    }
    Ok(SexRational(value))
}

fn parse_groups(part: &str, part_off: usize, what: &str) -> Result<Vec<u8>, SexError> {
    if part.is_empty() {
        return Err(SexError::Malformed {
            offset: part_off,
            detail: format!("empty {what}"),
        });
    }
    let mut groups = Vec::new();
    let mut off = part_off;
    for group in part.split(',') {
        if group.is_empty() {
            return Err(SexError::Malformed {
                offset: off,
                detail: format!("empty digit group in {what}"),
            });
        }
        if let Some(bad) = group.find(|c: char| !c.is_ascii_digit()) {
            return Err(SexError::Malformed {
                offset: off + bad,
                detail: format!(
                    "unexpected character {:?} in {what}",
                    group[bad..].chars().next().unwrap()
                ),
            });
        }
        let value: u32 = group.parse().map_err(|_| SexError::GroupOutOfRange {
            group: group.to_string(),
            offset: off,
        })?;
        if value >= 60 {
            return Err(SexError::GroupOutOfRange {
                group: group.to_string(),
                offset: off,
            });
        }
        groups.push(value as u8);
        off += group.len() + 1;
    }
    Ok(groups)
}

/// Rendering style for [`format_sex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatMode {
    /// Keeps the semicolon and all positional zeros: `72` renders as
    /// `1,12`, one twelfth as `0;5`.
    Absolute,
    /// The tablets' own place-value-free style: the semicolon is
    /// dropped along with leading and trailing zero places, so `72`,
    /// `1;12`, and `0;1,12` all render as `1,12`.
    Floating,
}

/// Renders a value as a base-60 numeral.
///
/// At most `max_fraction_places` places are emitted after the semicolon
/// (a budget of 0 is treated as 1); if the expansion has not terminated
/// by then, the output ends with `…`. Values whose reduced denominator is
/// 2,3,5-smooth always terminate and render exactly once given room.
pub fn format_sex(q: &SexRational, mode: FormatMode, max_fraction_places: usize) -> String {
    let exp = expand(q, max_fraction_places.max(1));
    let join = |places: &[u8]| {
        places
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let sign = if exp.negative { "-" } else { "" };
    match mode {
        FormatMode::Absolute => {
            let mut out = format!("{sign}{}", join(&exp.int_places));
            if !exp.frac_places.is_empty() {
                out.push(';');
                out.push_str(&join(&exp.frac_places));
            }
            if !exp.exact {
                out.push_str(TRUNCATION_MARKER);
            }
            out
        }
        FormatMode::Floating => {
            if q.is_zero() {
                return "0".to_string();
            }
            let mut words: Vec<u8> = Vec::new();
            if exp.int_places != [0] {
                words.extend_from_slice(&exp.int_places);
            }
            words.extend_from_slice(&exp.frac_places);
            let start = words.iter().position(|&w| w != 0).unwrap_or(words.len());
            let mut words = words[start..].to_vec();
            if exp.exact {
                while words.len() > 1 && words.last() == Some(&0) {
                    words.pop();
                }
            }
            let mut out = format!("{sign}{}", join(&words));
            if !exp.exact {
                out.push_str(TRUNCATION_MARKER);
            }
            out
        }
    }
}

pub(crate) struct Expansion {
    pub negative: bool,
    pub int_places: Vec<u8>,
    pub frac_places: Vec<u8>,
    pub exact: bool,
}

/// Long division in base 60: integer places, then up to `max_frac`
/// fraction places, stopping early once the remainder hits zero.
pub(crate) fn expand(q: &SexRational, max_frac: usize) -> Expansion {
    let numer = q.numer().magnitude();
    let denom = q.denom().magnitude();
    let (int, mut rem) = numer.div_rem(denom);

    let mut int_places = to_base60(&int);
    if int_places.is_empty() {
        int_places.push(0);
    }

    let sixty = BigUint::from(60u32);
    let mut frac_places = Vec::new();
    while !rem.is_zero() && frac_places.len() < max_frac {
        rem *= &sixty;
        let (digit, next) = rem.div_rem(denom);
        frac_places.push(digit.to_u8().expect("base-60 digit fits in u8"));
        rem = next;
    }

    Expansion {
        negative: q.is_negative(),
        int_places,
        frac_places,
        exact: rem.is_zero(),
    }
}

fn to_base60(n: &BigUint) -> Vec<u8> {
    let sixty = BigUint::from(60u32);
    let mut places = Vec::new();
    let mut n = n.clone();
    while !n.is_zero() {
        let (next, digit) = n.div_rem(&sixty);
        places.push(digit.to_u8().expect("base-60 digit fits in u8"));
        n = next;
    }
    places.reverse();
    places
}

/// True when `n` divides a power of 60, i.e. `n = 2^a 3^b 5^c`. These
/// are the entries of the standard reciprocal table: exactly the
/// integers whose reciprocal terminates in base 60. Zero is rejected.
pub fn is_regular(n: u64) -> Result<bool, SexError> {
    if n == 0 {
        return Err(SexError::ZeroRegularity);
    }
    Ok(is_smooth_2_3_5(&BigUint::from(n)))
}

/// [`is_regular`] for arbitrary-precision arguments.
pub fn is_regular_big(n: &BigUint) -> Result<bool, SexError> {
    if n.is_zero() {
        return Err(SexError::ZeroRegularity);
    }
    Ok(is_smooth_2_3_5(n))
}

fn is_smooth_2_3_5(n: &BigUint) -> bool {
    let mut n = n.clone();
    if n.is_zero() {
        return false;
    }
    for p in [2u32, 3, 5] {
        let p = BigUint::from(p);
        loop {
            let (q, r) = n.div_rem(&p);
            if r.is_zero() {
                n = q;
            } else {
                break;
            }
        }
    }
    n == BigUint::from(1u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sex(s: &str) -> SexRational {
        parse_sex(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> SexRational {
        SexRational::new(n, d).unwrap()
    }

    #[test]
    fn parses_integer_numerals() {
        assert_eq!(sex("14,24"), SexRational::from(864));
        assert_eq!(sex("0"), SexRational::zero());
        assert_eq!(sex("59"), SexRational::from(59));
        assert_eq!(sex("1,0,0"), SexRational::from(3600));
    }

    #[test]
    fn parses_fractional_numerals() {
        assert_eq!(sex("0;6,40"), rat(1, 9));
        assert_eq!(sex("1,12;15"), rat(289, 4));
        assert_eq!(sex("0;5"), rat(1, 12));
        assert_eq!(sex("-0;30"), rat(-1, 2));
        assert_eq!(sex("  8,0,0 "), SexRational::from(28_800));
    }

    #[test]
    fn rejects_bad_numerals() {
        assert_eq!(parse_sex(""), Err(SexError::EmptyNumeral));
        assert_eq!(parse_sex("   "), Err(SexError::EmptyNumeral));
        assert!(matches!(parse_sex("72"), Err(SexError::GroupOutOfRange { .. })));
        assert!(matches!(parse_sex("1,60"), Err(SexError::GroupOutOfRange { .. })));
        assert!(matches!(parse_sex("1,,2"), Err(SexError::Malformed { .. })));
        assert!(matches!(parse_sex("1;"), Err(SexError::Malformed { .. })));
        assert!(matches!(parse_sex(";30"), Err(SexError::Malformed { .. })));
        assert!(matches!(parse_sex("-"), Err(SexError::Malformed { .. })));
        assert!(matches!(parse_sex("1,2a"), Err(SexError::Malformed { .. })));
        assert!(matches!(parse_sex("1;2;3"), Err(SexError::Malformed { .. })));
    }

    #[test]
    fn error_offsets_point_at_the_problem() {
        match parse_sex("1,60") {
            Err(SexError::GroupOutOfRange { group, offset }) => {
                assert_eq!(group, "60");
                assert_eq!(offset, 2);
            }
            other => panic!("unexpected: {other:?}"),
        }
        match parse_sex("1,2a") {
            Err(SexError::Malformed { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn formats_absolute() {
        assert_eq!(SexRational::from(72).to_absolute(), "1,12");
        assert_eq!(rat(1, 12).to_absolute(), "0;5");
        assert_eq!(rat(1, 9).to_absolute(), "0;6,40");
        assert_eq!(rat(289, 4).to_absolute(), "1,12;15");
        assert_eq!(SexRational::zero().to_absolute(), "0");
        assert_eq!(rat(-1, 2).to_absolute(), "-0;30");
        assert_eq!(SexRational::from(24_883_200).to_absolute(), "1,55,12,0,0");
    }

    #[test]
    fn truncates_nonterminating_expansions() {
        assert_eq!(
            format_sex(&rat(1, 7), FormatMode::Absolute, 3),
            "0;8,34,17…"
        );
        assert_eq!(
            format_sex(&rat(1, 7), FormatMode::Floating, 3),
            "8,34,17…"
        );
        assert_eq!(format_sex(&rat(1, 7), FormatMode::Absolute, 0), "0;8…");
    }

    #[test]
    fn formats_floating() {
        assert_eq!(SexRational::from(72).to_floating(), "1,12");
        assert_eq!(rat(1, 9).to_floating(), "6,40");
        assert_eq!(rat(1, 12).to_floating(), "5");
        assert_eq!(SexRational::from(120).to_floating(), "2");
        assert_eq!(SexRational::from(3600).to_floating(), "1");
        assert_eq!(rat(1, 3600).to_floating(), "1");
        assert_eq!(SexRational::zero().to_floating(), "0");
        assert_eq!(rat(-7, 2).to_floating(), "-3,30");
        assert_eq!(sex("2,0,0,33").to_floating(), "2,0,0,33");
    }

    #[test]
    fn regularity_matches_the_reciprocal_table() {
        for n in [1u64, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 27, 30, 32] {
            assert!(is_regular(n).unwrap(), "{n} should be regular");
        }
        for n in [7u64, 11, 13, 14, 21, 22, 59, 61] {
            assert!(!is_regular(n).unwrap(), "{n} should be irregular");
        }
        assert_eq!(is_regular(0), Err(SexError::ZeroRegularity));
        assert!(is_regular_big(&BigUint::from(2u8).pow(100)).unwrap());
    }

    #[test]
    fn finiteness_follows_the_denominator() {
        assert!(rat(1, 9).is_finite_sexagesimal());
        assert!(rat(5, 1).is_finite_sexagesimal());
        assert!(SexRational::zero().is_finite_sexagesimal());
        assert!(!rat(1, 7).is_finite_sexagesimal());
        assert!(rat(7, 14).is_finite_sexagesimal());
    }

    #[test]
    fn reciprocals_are_exact() {
        assert_eq!(SexRational::from(12).reciprocal().unwrap(), rat(1, 12));
        assert_eq!(SexRational::from(12).reciprocal().unwrap().to_absolute(), "0;5");
        assert_eq!(SexRational::from(9).reciprocal().unwrap().to_absolute(), "0;6,40");
        assert_eq!(rat(1, 9).reciprocal().unwrap(), SexRational::from(9));
        assert_eq!(
            SexRational::zero().reciprocal(),
            Err(SexError::DivisionByZero)
        );
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = sex("0;5");
        let b = sex("14,24");
        assert_eq!(&a * &b, SexRational::from(72));
        assert_eq!(sex("1,12") - sex("36"), SexRational::from(36));
        assert_eq!(sex("0;40") + sex("0;20"), SexRational::one());
        assert_eq!(
            sex("1").checked_div(&SexRational::zero()),
            Err(SexError::DivisionByZero)
        );
        assert_eq!(sex("3").checked_div(&sex("2")).unwrap(), rat(3, 2));
    }

    #[test]
    fn display_is_decimal() {
        assert_eq!(sex("1,12;15").to_string(), "289/4");
        assert_eq!(sex("1,12").to_string(), "72");
    }

    #[test]
    fn serde_round_trips() {
        let q = sex("1,12;15");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"sexagesimal":"1,12;15","decimal":"289/4"}"#);
        let back: SexRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        let from_str: SexRational = serde_json::from_str(r#""0;6,40""#).unwrap();
        assert_eq!(from_str, rat(1, 9));
        let from_int: SexRational = serde_json::from_str("72").unwrap();
        assert_eq!(from_int, SexRational::from(72));
    }

    #[test]
    fn parse_flexible_accepts_both_spellings() {
        assert_eq!(parse_flexible("289/4").unwrap(), rat(289, 4));
        assert_eq!(parse_flexible("1,12;15").unwrap(), rat(289, 4));
        assert_eq!(parse_flexible("72").unwrap(), SexRational::from(72));
        assert!(parse_flexible("289//4").is_err());
    }

    #[test]
    fn exact_rendering_never_truncates_terminating_expansions() {
        // 1/2^80 terminates after 40 places, past the default budget.
        let deep = SexRational::new(1, BigInt::from(2).pow(80)).unwrap();
        assert!(deep.to_absolute().ends_with(TRUNCATION_MARKER));
        let exact = deep.to_absolute_exact();
        assert!(!exact.contains(TRUNCATION_MARKER));
        assert_eq!(parse_sex(&exact).unwrap(), deep);

        assert_eq!(rat(1, 7).to_absolute_exact(), rat(1, 7).to_absolute());
    }
}
