//! Exact place-by-place decomposition of finite sexagesimal values,
//! the form a scribe would actually write into a table.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{expand, SexError, SexRational};

/// The exact base-60 digit string of a finite sexagesimal rational.
///
/// Places are most significant first and each lies in 0..=59. The
/// representation is canonical: no leading zero integer place (except
/// the single `0` place of a zero integer part), no trailing zero
/// fraction place, and zero itself is never negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDigits", into = "RawDigits")]
pub struct SexDigits {
    negative: bool,
    integer_places: Vec<u8>,
    fraction_places: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct RawDigits {
    negative: bool,
    integer_places: Vec<u8>,
    fraction_places: Vec<u8>,
}

impl From<SexDigits> for RawDigits {
    fn from(d: SexDigits) -> Self {
        RawDigits {
            negative: d.negative,
            integer_places: d.integer_places,
            fraction_places: d.fraction_places,
        }
    }
}

impl TryFrom<RawDigits> for SexDigits {
    type Error = SexError;
    fn try_from(raw: RawDigits) -> Result<Self, SexError> {
        SexDigits::new(raw.negative, raw.integer_places, raw.fraction_places)
    }
}

impl SexDigits {
    /// Validates and assembles a digit string in canonical form.
    pub fn new(
        negative: bool,
        integer_places: Vec<u8>,
        fraction_places: Vec<u8>,
    ) -> Result<Self, SexError> {
        let malformed = |detail: &str| SexError::Malformed {
            offset: 0,
            detail: detail.to_string(),
        };
        if integer_places.is_empty() {
            return Err(malformed("integer part needs at least the place 0"));
        }
        if integer_places
            .iter()
            .chain(fraction_places.iter())
            .any(|&p| p >= 60)
        {
            return Err(malformed("places must lie in 0..=59"));
        }
        if integer_places.len() > 1 && integer_places[0] == 0 {
            return Err(malformed("leading zero integer place"));
        }
        if fraction_places.last() == Some(&0) {
            return Err(malformed("trailing zero fraction place"));
        }
        if negative && integer_places == [0] && fraction_places.is_empty() {
            return Err(malformed("negative zero"));
        }
        Ok(SexDigits {
            negative,
            integer_places,
            fraction_places,
        })
    }

    /// Decomposes a value, failing if its expansion does not terminate.
    pub fn of(q: &SexRational) -> Result<Self, SexError> {
        if !q.is_finite_sexagesimal() {
            return Err(SexError::NotFinite {
                denom: q.denom().to_string(),
            });
        }
        let exp = expand(q, usize::MAX);
        debug_assert!(exp.exact);
        Ok(SexDigits {
            negative: exp.negative,
            integer_places: exp.int_places,
            fraction_places: exp.frac_places,
        })
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn integer_places(&self) -> &[u8] {
        &self.integer_places
    }

    pub fn fraction_places(&self) -> &[u8] {
        &self.fraction_places
    }

    /// Reassembles the exact value the digits denote.
    pub fn to_rational(&self) -> SexRational {
        let sixty = SexRational::from(60);
        let mut value = SexRational::zero();
        for &p in &self.integer_places {
            value = value * &sixty + SexRational::from(p as i64);
        }
        let mut scale = SexRational::one();
        for &p in &self.fraction_places {
            scale = scale.checked_div(&sixty).expect("sixty is nonzero");
            value = value + SexRational::from(p as i64) * &scale;
        }
        if self.negative {
            value = -value;
        }
        value
    }
}

impl TryFrom<&SexRational> for SexDigits {
    type Error = SexError;
    fn try_from(q: &SexRational) -> Result<Self, SexError> {
        SexDigits::of(q)
    }
}

impl fmt::Display for SexDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |places: &[u8]| {
            places
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", join(&self.integer_places))?;
        if !self.fraction_places.is_empty() {
            write!(f, ";{}", join(&self.fraction_places))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sexagesimal::parse_sex;

    #[test]
    fn decomposes_finite_values() {
        let q = parse_sex("1,12;15").unwrap();
        let d = SexDigits::of(&q).unwrap();
        assert!(!d.is_negative());
        assert_eq!(d.integer_places(), &[1, 12]);
        assert_eq!(d.fraction_places(), &[15]);
        assert_eq!(d.to_string(), "1,12;15");
        assert_eq!(d.to_rational(), q);
    }

    #[test]
    fn zero_and_negative_forms() {
        let zero = SexDigits::of(&SexRational::zero()).unwrap();
        assert_eq!(zero.integer_places(), &[0]);
        assert_eq!(zero.fraction_places(), &[] as &[u8]);
        assert_eq!(zero.to_string(), "0");

        let neg = SexDigits::of(&parse_sex("-0;30").unwrap()).unwrap();
        assert!(neg.is_negative());
        assert_eq!(neg.to_string(), "-0;30");
    }

    #[test]
    fn rejects_nonterminating_values() {
        let seventh = SexRational::new(1, 7).unwrap();
        assert!(matches!(
            SexDigits::of(&seventh),
            Err(SexError::NotFinite { .. })
        ));
    }

    #[test]
    fn constructor_enforces_canonical_form() {
        assert!(SexDigits::new(false, vec![1, 12], vec![15]).is_ok());
        assert!(SexDigits::new(false, vec![], vec![]).is_err());
        assert!(SexDigits::new(false, vec![0, 5], vec![]).is_err());
        assert!(SexDigits::new(false, vec![1], vec![5, 0]).is_err());
        assert!(SexDigits::new(false, vec![60], vec![]).is_err());
        assert!(SexDigits::new(true, vec![0], vec![]).is_err());
        assert!(SexDigits::new(true, vec![0], vec![30]).is_ok());
    }

    #[test]
    fn serde_rejects_noncanonical_digits() {
        let good: SexDigits = serde_json::from_str(
            r#"{"negative":false,"integer_places":[1,12],"fraction_places":[15]}"#,
        )
        .unwrap();
        assert_eq!(good.to_rational(), parse_sex("1,12;15").unwrap());
        let bad: Result<SexDigits, _> = serde_json::from_str(
            r#"{"negative":false,"integer_places":[0,12],"fraction_places":[]}"#,
        );
        assert!(bad.is_err());
    }
}
