//! The Old Babylonian unit system used by the tablet procedures:
//! lengths in nindan, gi, and kùš; volumes in nindan³ and volume-sar;
//! capacities in sìla, gur, and gur₇. The catalog is closed and every
//! conversion is exact.
//!
//! The volume-sar is the surveyors' unit, 1 nindan² × 1 kùš = 1/12
//! nindan³, which is why tablet volume procedures start by multiplying
//! by the reciprocal of 12. Grain storage converts volume to capacity
//! through a storage constant in sìla per volume-sar: the canonical
//! figure is 5,0,0 (= 18,000), while SMT No. 14 works with 8,0,0
//! (= 28,800). Modern litre equivalents occasionally quoted for 5,0,0
//! sìla are inconsistent with the exact value; nothing here depends on
//! them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::sexagesimal::SexRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetrologyError {
    #[error("unknown unit {name:?}")]
    UnknownUnit { name: String },
    #[error("dimension mismatch: cannot convert {from} to {to}")]
    DimensionMismatch { from: Dimension, to: Dimension },
    #[error("expected a {expected} quantity, got {got}")]
    WrongDimension { expected: Dimension, got: Dimension },
    #[error("storage constant must be positive")]
    NonPositiveStorageConstant,
    #[error("cannot decompose a negative capacity")]
    NegativeCapacity,
    #[error("clumsy notation needs a quantity in nindan, got {unit}")]
    ClumsySource { unit: Unit },
    #[error("clumsy notation renders gi or kùš, not {unit}")]
    ClumsySubunit { unit: Unit },
    #[error("capacity breakdown out of canonical bounds: {detail}")]
    BreakdownBounds { detail: String },
}

/// The three measured dimensions of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Length,
    Volume,
    Capacity,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dimension::Length => "length",
            Dimension::Volume => "volume",
            Dimension::Capacity => "capacity",
        })
    }
}

/// The closed unit catalog. Base units are nindan (length), nindan³
/// (volume), and sìla (capacity); each unit's ratio to its base is
/// exact: 1 gi = 1/2 nindan, 1 kùš = 1/12 nindan, 1 volume-sar = 1/12
/// nindan³, 1 gur = 5,0 sìla, 1 gur₇ = 5,0,0,0 sìla.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Nindan,
    Gi,
    Kus,
    Nindan3,
    Sar,
    Sila,
    Gur,
    Gur7,
}

impl Unit {
    pub const ALL: [Unit; 8] = [
        Unit::Nindan,
        Unit::Gi,
        Unit::Kus,
        Unit::Nindan3,
        Unit::Sar,
        Unit::Sila,
        Unit::Gur,
        Unit::Gur7,
    ];

    pub fn dimension(&self) -> Dimension {
        match self {
            Unit::Nindan | Unit::Gi | Unit::Kus => Dimension::Length,
            Unit::Nindan3 | Unit::Sar => Dimension::Volume,
            Unit::Sila | Unit::Gur | Unit::Gur7 => Dimension::Capacity,
        }
    }

    /// Exact size of one of this unit in the dimension's base unit.
    pub fn ratio_to_base(&self) -> SexRational {
        match self {
            Unit::Nindan | Unit::Nindan3 | Unit::Sila => SexRational::one(),
            Unit::Gi => SexRational::new(1, 2).expect("nonzero"),
            Unit::Kus | Unit::Sar => SexRational::new(1, 12).expect("nonzero"),
            Unit::Gur => SexRational::from(300),
            Unit::Gur7 => SexRational::from(1_080_000),
        }
    }

    /// ASCII spelling accepted on the command line and in scripts.
    pub fn ascii_name(&self) -> &'static str {
        match self {
            Unit::Nindan => "nindan",
            Unit::Gi => "gi",
            Unit::Kus => "kus",
            Unit::Nindan3 => "nindan3",
            Unit::Sar => "sar",
            Unit::Sila => "sila",
            Unit::Gur => "gur",
            Unit::Gur7 => "gur7",
        }
    }

    /// Spelling used in printed output.
    pub fn display_name(&self) -> &'static str {
        match self {
            Unit::Nindan => "nindan",
            Unit::Gi => "gi",
            Unit::Kus => "kùš",
            Unit::Nindan3 => "nindan³",
            Unit::Sar => "volume-sar",
            Unit::Sila => "sìla",
            Unit::Gur => "gur",
            Unit::Gur7 => "gur₇",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

impl FromStr for Unit {
    type Err = MetrologyError;

    fn from_str(s: &str) -> Result<Self, MetrologyError> {
        let unit = match s {
            "nindan" => Unit::Nindan,
            "gi" => Unit::Gi,
            "kus" | "kùš" => Unit::Kus,
            "nindan3" | "nindan³" => Unit::Nindan3,
            "sar" | "volume-sar" => Unit::Sar,
            "sila" | "sìla" => Unit::Sila,
            "gur" => Unit::Gur,
            "gur7" | "gur₇" => Unit::Gur7,
            other => {
                return Err(MetrologyError::UnknownUnit {
                    name: other.to_string(),
                })
            }
        };
        Ok(unit)
    }
}

impl Serialize for Unit {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.ascii_name())
    }
}

impl<'de> Deserialize<'de> for Unit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Unit::from_str(&s).map_err(de::Error::custom)
    }
}

/// A value tagged with its unit. Conversions are exact and stay inside
/// one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub value: SexRational,
    pub unit: Unit,
}

impl Quantity {
    pub fn new(value: SexRational, unit: Unit) -> Self {
        Quantity { value, unit }
    }

    pub fn dimension(&self) -> Dimension {
        self.unit.dimension()
    }

    /// Exact value in the dimension's base unit.
    pub fn in_base(&self) -> SexRational {
        &self.value * &self.unit.ratio_to_base()
    }

    /// Exact conversion to another unit of the same dimension.
    pub fn convert(&self, target: Unit) -> Result<Quantity, MetrologyError> {
        if self.unit.dimension() != target.dimension() {
            return Err(MetrologyError::DimensionMismatch {
                from: self.unit.dimension(),
                to: target.dimension(),
            });
        }
        let value = self
            .in_base()
            .checked_div(&target.ratio_to_base())
            .expect("catalog ratios are nonzero");
        Ok(Quantity::new(value, target))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value.to_absolute(), self.unit)
    }
}

/// The tablet's storage constant for grain heaps: 8,0,0 sìla of grain
/// per volume-sar.
pub fn storage_constant_tablet() -> SexRational {
    SexRational::from(28_800)
}

/// The canonical storage constant 5,0,0 sìla per volume-sar.
pub fn storage_constant_canonical() -> SexRational {
    SexRational::from(18_000)
}

/// Converts a grain volume to its capacity in sìla:
/// sìla = (volume in volume-sar) × storage_constant.
pub fn capacity_from_volume(
    v: &Quantity,
    storage_constant: &SexRational,
) -> Result<Quantity, MetrologyError> {
    if v.dimension() != Dimension::Volume {
        return Err(MetrologyError::WrongDimension {
            expected: Dimension::Volume,
            got: v.dimension(),
        });
    }
    if storage_constant.is_zero() || storage_constant.is_negative() {
        return Err(MetrologyError::NonPositiveStorageConstant);
    }
    let sar = v.convert(Unit::Sar)?;
    Ok(Quantity::new(&sar.value * storage_constant, Unit::Sila))
}

/// Canonical mixed-radix form of a capacity, greedy largest unit first:
/// whole gur₇, then whole gur (0..3600), then the sìla remainder
/// (0 ≤ sìla < 300). Recomposition is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityBreakdown {
    gur7: BigUint,
    gur: u32,
    sila: SexRational,
}

impl CapacityBreakdown {
    pub fn new(gur7: BigUint, gur: u32, sila: SexRational) -> Result<Self, MetrologyError> {
        if gur >= 3600 {
            return Err(MetrologyError::BreakdownBounds {
                detail: format!("gur component {gur} must stay below 3600"),
            });
        }
        if sila.is_negative() || sila >= SexRational::from(300) {
            return Err(MetrologyError::BreakdownBounds {
                detail: format!("sìla component {sila} must lie in [0, 300)"),
            });
        }
        Ok(CapacityBreakdown { gur7, gur, sila })
    }

    pub fn gur7(&self) -> &BigUint {
        &self.gur7
    }

    pub fn gur(&self) -> u32 {
        self.gur
    }

    pub fn sila(&self) -> &SexRational {
        &self.sila
    }

    /// Exact total in sìla.
    pub fn recompose(&self) -> Quantity {
        let total = SexRational::from(BigInt::from(self.gur7.clone()))
            * SexRational::from(1_080_000)
            + SexRational::from(self.gur as i64) * SexRational::from(300)
            + self.sila.clone();
        Quantity::new(total, Unit::Sila)
    }

    pub fn is_zero(&self) -> bool {
        self.gur7.is_zero() && self.gur == 0 && self.sila.is_zero()
    }
}

/// Renders nonzero components only, as on the tablet: `23 gur₇ 2,24
/// gur`. A zero capacity renders `0 sìla`.
impl fmt::Display for CapacityBreakdown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 {}", Unit::Sila);
        }
        let mut parts = Vec::new();
        if !self.gur7.is_zero() {
            let n = SexRational::from(BigInt::from(self.gur7.clone()));
            parts.push(format!("{} {}", n.to_absolute(), Unit::Gur7));
        }
        if self.gur != 0 {
            let n = SexRational::from(self.gur as i64);
            parts.push(format!("{} {}", n.to_absolute(), Unit::Gur));
        }
        if !self.sila.is_zero() {
            parts.push(format!("{} {}", self.sila.to_absolute(), Unit::Sila));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct RawBreakdown {
    gur7: SexRational,
    gur: SexRational,
    sila: SexRational,
}

impl Serialize for CapacityBreakdown {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawBreakdown {
            gur7: SexRational::from(BigInt::from(self.gur7.clone())),
            gur: SexRational::from(self.gur as i64),
            sila: self.sila.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CapacityBreakdown {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawBreakdown::deserialize(deserializer)?;
        let gur7 = raw
            .gur7
            .numer()
            .to_biguint()
            .filter(|_| raw.gur7.is_integer())
            .ok_or_else(|| de::Error::custom("gur7 must be a nonnegative integer"))?;
        let gur = raw
            .gur
            .numer()
            .to_u32()
            .filter(|_| raw.gur.is_integer() && !raw.gur.is_negative())
            .ok_or_else(|| de::Error::custom("gur must be a nonnegative integer"))?;
        CapacityBreakdown::new(gur7, gur, raw.sila).map_err(de::Error::custom)
    }
}

/// Greedy decomposition of a capacity into gur₇, gur, and sìla.
pub fn decompose_capacity(q: &Quantity) -> Result<CapacityBreakdown, MetrologyError> {
    if q.dimension() != Dimension::Capacity {
        return Err(MetrologyError::WrongDimension {
            expected: Dimension::Capacity,
            got: q.dimension(),
        });
    }
    let sila_total = q.convert(Unit::Sila)?.value;
    if sila_total.is_negative() {
        return Err(MetrologyError::NegativeCapacity);
    }
    let gur7_size = SexRational::from(1_080_000);
    let gur_size = SexRational::from(300);

    let gur7 = sila_total
        .checked_div(&gur7_size)
        .expect("unit size is nonzero")
        .floor()
        .to_biguint()
        .expect("nonnegative by construction");
    let after_gur7 =
        &sila_total - &(SexRational::from(BigInt::from(gur7.clone())) * &gur7_size);

    let gur = after_gur7
        .checked_div(&gur_size)
        .expect("unit size is nonzero")
        .floor()
        .to_u32()
        .expect("remainder below one gur7 leaves fewer than 3600 gur");
    let sila = &after_gur7 - &(SexRational::from(gur as i64) * &gur_size);

    CapacityBreakdown::new(gur7, gur, sila)
}

/// The tablets' "clumsy" double notation for lengths, which restates a
/// nindan figure in a smaller unit: `3 (nindan, that is, 6) gi`.
pub fn format_clumsy(q: &Quantity, subunit: Unit) -> Result<String, MetrologyError> {
    if q.unit != Unit::Nindan {
        return Err(MetrologyError::ClumsySource { unit: q.unit });
    }
    if subunit != Unit::Gi && subunit != Unit::Kus {
        return Err(MetrologyError::ClumsySubunit { unit: subunit });
    }
    let converted = q.convert(subunit)?;
    Ok(format!(
        "{} (nindan, that is, {}) {}",
        q.value.to_absolute(),
        converted.value.to_absolute(),
        subunit
    ))
}
