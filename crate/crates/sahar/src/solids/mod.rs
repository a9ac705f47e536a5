//! The solid families of the tablet corpus and their volume formulas,
//! exact wherever the mathematics is rational: cuboids, prisms,
//! pyramids, square and regular-n-gon frustums (in both the Babylonian
//! and the Egyptian arrangement, which agree identically), truncated
//! triangular prisms, grain heaps with their forward and inverse
//! solvers, slope angles, rotation solids, and combinatorial polyhedron
//! meshes. A Simpson slab oracle cross-checks every closed form.
//!
//! Lengths are plain numbers here; callers choose the unit convention
//! (the CLI works in nindan). Formulas involving π or cot(π/n) return
//! an [`Approx`] at a requested decimal-digit precision instead of an
//! exact rational.

mod approx;
mod descriptor;
mod mesh;
mod oracle;

pub use approx::{Approx, DEFAULT_DIGITS};
pub use descriptor::{OracleReport, SolidSpec};
pub use mesh::{
    euler_characteristic, euler_from_counts, platonic, PlatonicSolid, PolyhedronMesh,
};
pub use oracle::{profiles, slab_volume_oracle};

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::metrology::{Dimension, Quantity, Unit};
use crate::sexagesimal::SexRational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolidError {
    #[error("{field} must be positive")]
    NonPositive { field: &'static str },
    #[error("{field} must be nonnegative")]
    Negative { field: &'static str },
    #[error("a frustum needs a strictly smaller top: a > b > 0")]
    TopNotSmaller,
    #[error("an n-gon frustum needs n >= 3, got {n}")]
    TooFewSides { n: u32 },
    #[error("the grain-heap closed form assumes slope 1, got {slope}; route other slopes through the truncated prism")]
    UnsupportedSlope { slope: String },
    #[error("volume {volume} is below the two-pyramid minimum (4/3)h³ = {minimum}; no nonnegative top length exists")]
    InfeasibleHeap { volume: String, minimum: String },
    #[error("slab count must be even and at least 2, got {slabs}")]
    SlabCount { slabs: usize },
    #[error("unknown solid {name:?}")]
    UnknownSolid { name: String },
    #[error("invalid mesh: {detail}")]
    MeshInvalid { detail: String },
    #[error("expected a {expected} quantity, got {got}")]
    WrongDimension { expected: Dimension, got: Dimension },
}

fn positive(v: &SexRational, field: &'static str) -> Result<(), SolidError> {
    if v.is_zero() || v.is_negative() {
        return Err(SolidError::NonPositive { field });
    }
    Ok(())
}

fn nonnegative(v: &SexRational, field: &'static str) -> Result<(), SolidError> {
    if v.is_negative() {
        return Err(SolidError::Negative { field });
    }
    Ok(())
}

/// A volume that is either exactly rational or an arbitrary-precision
/// approximation, depending on whether π or cot(π/n) entered.
#[derive(Debug, Clone)]
pub enum VolumeValue {
    Exact(SexRational),
    Approx(Approx),
}

impl VolumeValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, VolumeValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&SexRational> {
        match self {
            VolumeValue::Exact(q) => Some(q),
            VolumeValue::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            VolumeValue::Exact(q) => q.to_f64(),
            VolumeValue::Approx(a) => a.to_f64(),
        }
    }

    /// Rescales by an exact factor (unit conversions).
    pub fn scale(&self, factor: &SexRational) -> VolumeValue {
        match self {
            VolumeValue::Exact(q) => VolumeValue::Exact(q * factor),
            VolumeValue::Approx(a) => VolumeValue::Approx(a.scale(factor)),
        }
    }
}

/// Exact volumes render as sexagesimal numerals, approximate ones as
/// decimals at their digit budget.
impl fmt::Display for VolumeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VolumeValue::Exact(q) => f.write_str(&q.to_absolute()),
            VolumeValue::Approx(a) => f.write_str(&a.to_decimal_string()),
        }
    }
}

impl Serialize for VolumeValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            VolumeValue::Exact(q) => q.serialize(serializer),
            VolumeValue::Approx(a) => {
                let mut s = serializer.serialize_struct("Approx", 2)?;
                s.serialize_field("decimal", &a.to_decimal_string())?;
                s.serialize_field("digits", &a.digits())?;
                s.end()
            }
        }
    }
}

/// Rectangular box with sides a, b, c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cuboid {
    a: SexRational,
    b: SexRational,
    c: SexRational,
}

impl Cuboid {
    pub fn new(a: SexRational, b: SexRational, c: SexRational) -> Result<Self, SolidError> {
        positive(&a, "a")?;
        positive(&b, "b")?;
        positive(&c, "c")?;
        Ok(Cuboid { a, b, c })
    }
}

/// Right prism over a base of known area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismSpec {
    base_area: SexRational,
    h: SexRational,
}

impl PrismSpec {
    pub fn new(base_area: SexRational, h: SexRational) -> Result<Self, SolidError> {
        positive(&base_area, "base_area")?;
        positive(&h, "h")?;
        Ok(PrismSpec { base_area, h })
    }
}

/// Pyramid over a base of known area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidSpec {
    base_area: SexRational,
    h: SexRational,
}

impl PyramidSpec {
    pub fn new(base_area: SexRational, h: SexRational) -> Result<Self, SolidError> {
        positive(&base_area, "base_area")?;
        positive(&h, "h")?;
        Ok(PyramidSpec { base_area, h })
    }
}

/// Frustum of a square pyramid: base side a, top side b, height h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFrustum {
    a: SexRational,
    b: SexRational,
    h: SexRational,
}

impl SquareFrustum {
    pub fn new(a: SexRational, b: SexRational, h: SexRational) -> Result<Self, SolidError> {
        positive(&a, "a")?;
        positive(&b, "b")?;
        positive(&h, "h")?;
        if a <= b {
            return Err(SolidError::TopNotSmaller);
        }
        Ok(SquareFrustum { a, b, h })
    }
}

/// Frustum of a pyramid over a regular n-gon, sides a (base) and b
/// (top) measured as the polygon side length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgonFrustum {
    n: u32,
    a: SexRational,
    b: SexRational,
    h: SexRational,
}

impl NgonFrustum {
    pub fn new(
        n: u32,
        a: SexRational,
        b: SexRational,
        h: SexRational,
    ) -> Result<Self, SolidError> {
        if n < 3 {
            return Err(SolidError::TooFewSides { n });
        }
        positive(&a, "a")?;
        positive(&b, "b")?;
        positive(&h, "h")?;
        if a <= b {
            return Err(SolidError::TopNotSmaller);
        }
        Ok(NgonFrustum { n, a, b, h })
    }

    pub fn sides(&self) -> u32 {
        self.n
    }
}

/// Common view of the two frustum families for the apex solver.
pub trait FrustumSides {
    fn base_side(&self) -> &SexRational;
    fn top_side(&self) -> &SexRational;
    fn height(&self) -> &SexRational;
}

impl FrustumSides for SquareFrustum {
    fn base_side(&self) -> &SexRational {
        &self.a
    }
    fn top_side(&self) -> &SexRational {
        &self.b
    }
    fn height(&self) -> &SexRational {
        &self.h
    }
}

impl FrustumSides for NgonFrustum {
    fn base_side(&self) -> &SexRational {
        &self.a
    }
    fn top_side(&self) -> &SexRational {
        &self.b
    }
    fn height(&self) -> &SexRational {
        &self.h
    }
}

/// A prism on a triangular cross-section y × h cut by a slanted top:
/// base rectangle z × y, ridge of length x at height h, with
/// z = x + x1 + x2 (x1, x2 the two end overhangs). The grain heap is
/// the case x1 = x2 = h, y = 2h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedTriangularPrism {
    x: SexRational,
    x1: SexRational,
    x2: SexRational,
    y: SexRational,
    h: SexRational,
}

impl TruncatedTriangularPrism {
    pub fn new(
        x: SexRational,
        x1: SexRational,
        x2: SexRational,
        y: SexRational,
        h: SexRational,
    ) -> Result<Self, SolidError> {
        nonnegative(&x, "x")?;
        nonnegative(&x1, "x1")?;
        nonnegative(&x2, "x2")?;
        positive(&y, "y")?;
        positive(&h, "h")?;
        Ok(TruncatedTriangularPrism { x, x1, x2, y, h })
    }

    /// Base length z = x + x1 + x2, always derived.
    pub fn z(&self) -> SexRational {
        &(&self.x + &self.x1) + &self.x2
    }
}

/// A grain heap: ridge (top length) x, height h, and the slope idiom's
/// coefficient (kùš of horizontal eaten per kùš of height). The tablet
/// works at slope 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrainHeap {
    x: SexRational,
    h: SexRational,
    slope_x: SexRational,
}

impl GrainHeap {
    /// Slope-1 heap, the tablet's own case.
    pub fn new(x: SexRational, h: SexRational) -> Result<Self, SolidError> {
        GrainHeap::with_slope(x, h, SexRational::one())
    }

    pub fn with_slope(
        x: SexRational,
        h: SexRational,
        slope_x: SexRational,
    ) -> Result<Self, SolidError> {
        nonnegative(&x, "x")?;
        positive(&h, "h")?;
        positive(&slope_x, "slope_x")?;
        Ok(GrainHeap { x, h, slope_x })
    }

    pub fn slope(&self) -> &SexRational {
        &self.slope_x
    }

    /// The equivalent truncated triangular prism: width 2h/slope, end
    /// overhangs h/slope each.
    pub fn as_truncated_prism(&self) -> TruncatedTriangularPrism {
        let run = self
            .h
            .checked_div(&self.slope_x)
            .expect("slope is positive");
        let width = SexRational::from(2) * &run;
        TruncatedTriangularPrism::new(self.x.clone(), run.clone(), run, width, self.h.clone())
            .expect("derived dimensions satisfy the invariants")
    }
}

/// The inclination idiom "it ate x kùš (per 1 kùš of depth)".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slope {
    x: SexRational,
}

impl Slope {
    pub fn new(x: SexRational) -> Result<Self, SolidError> {
        positive(&x, "x")?;
        Ok(Slope { x })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationKind {
    Sphere,
    Cylinder,
    Cone,
}

/// A solid of rotation; height is meaningless for the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSolid {
    kind: RotationKind,
    r: SexRational,
    h: Option<SexRational>,
}

impl RotationSolid {
    pub fn sphere(r: SexRational) -> Result<Self, SolidError> {
        positive(&r, "r")?;
        Ok(RotationSolid {
            kind: RotationKind::Sphere,
            r,
            h: None,
        })
    }

    pub fn cylinder(r: SexRational, h: SexRational) -> Result<Self, SolidError> {
        positive(&r, "r")?;
        positive(&h, "h")?;
        Ok(RotationSolid {
            kind: RotationKind::Cylinder,
            r,
            h: Some(h),
        })
    }

    pub fn cone(r: SexRational, h: SexRational) -> Result<Self, SolidError> {
        positive(&r, "r")?;
        positive(&h, "h")?;
        Ok(RotationSolid {
            kind: RotationKind::Cone,
            r,
            h: Some(h),
        })
    }

    pub fn kind(&self) -> RotationKind {
        self.kind
    }
}

/// V = a·b·c.
pub fn volume_cuboid(c: &Cuboid) -> SexRational {
    &(&c.a * &c.b) * &c.c
}

/// V = h·S.
pub fn volume_prism(p: &PrismSpec) -> SexRational {
    &p.h * &p.base_area
}

/// V = (1/3)·h·S, one third of the matching prism.
pub fn volume_pyramid(p: &PyramidSpec) -> SexRational {
    (&p.h * &p.base_area)
        .checked_div(&SexRational::from(3))
        .expect("three is nonzero")
}

/// The Egyptian arrangement: V = (h/3)(a² + ab + b²).
pub fn volume_frustum_egyptian(f: &SquareFrustum) -> SexRational {
    let area = &(&f.a.square() + &(&f.a * &f.b)) + &f.b.square();
    (&f.h * &area)
        .checked_div(&SexRational::from(3))
        .expect("three is nonzero")
}

/// The Babylonian arrangement: V = [((a+b)/2)² + (1/3)((a−b)/2)²]·h.
/// Identical to the Egyptian value on every frustum.
pub fn volume_frustum_babylonian(f: &SquareFrustum) -> SexRational {
    let two = SexRational::from(2);
    let mean = (&f.a + &f.b).checked_div(&two).expect("two is nonzero");
    let half_diff = (&f.a - &f.b).checked_div(&two).expect("two is nonzero");
    let correction = half_diff
        .square()
        .checked_div(&SexRational::from(3))
        .expect("three is nonzero");
    &(&mean.square() + &correction) * &f.h
}

/// V = (n·h/12)·cot(π/n)·(a² + ab + b²). cot(π/4) = 1, so the square
/// case is returned exact and equals the Egyptian formula; other n
/// evaluate to `digits` decimal digits.
pub fn volume_frustum_ngon(f: &NgonFrustum, digits: u32) -> VolumeValue {
    let area = &(&f.a.square() + &(&f.a * &f.b)) + &f.b.square();
    let coeff = (SexRational::from(f.n as i64) * &f.h * &area)
        .checked_div(&SexRational::from(12))
        .expect("twelve is nonzero");
    if f.n == 4 {
        return VolumeValue::Exact(coeff);
    }
    VolumeValue::Approx(Approx::new(approx::cot_times(f.n, &coeff, digits), digits))
}

/// Height of the cut-off apex above the top face: h′ = b·h/(a − b).
/// The frustum invariant a > b keeps the denominator positive.
pub fn frustum_apex_extension<F: FrustumSides>(f: &F) -> SexRational {
    let denom = f.base_side() - f.top_side();
    (f.top_side() * f.height())
        .checked_div(&denom)
        .expect("a > b by the frustum invariant")
}

/// V = (2·z·y·h + x·y·h)/6 with z = x + x1 + x2; the middle prism plus
/// its two pyramidal ends.
pub fn volume_truncated_prism(t: &TruncatedTriangularPrism) -> SexRational {
    let z = t.z();
    let two = SexRational::from(2);
    let numer = &(&(&two * &z) * &(&t.y * &t.h)) + &(&t.x * &(&t.y * &t.h));
    numer
        .checked_div(&SexRational::from(6))
        .expect("six is nonzero")
}

/// The derived width and base length: y = 2h/slope, z = x + 2h/slope.
/// At the tablet's slope 1 this is y = 2h, z = x + 2h.
pub fn grain_heap_dims(g: &GrainHeap) -> (SexRational, SexRational) {
    let run = g.h.checked_div(&g.slope_x).expect("slope is positive");
    let y = SexRational::from(2) * &run;
    let z = &g.x + &y;
    (y, z)
}

/// The tablet's closed form V = x·h² + (4/3)h³, valid at slope 1 only;
/// general heaps go through [`volume_truncated_prism`] via
/// [`GrainHeap::as_truncated_prism`].
pub fn volume_grain_heap(g: &GrainHeap) -> Result<SexRational, SolidError> {
    if g.slope_x != SexRational::one() {
        return Err(SolidError::UnsupportedSlope {
            slope: g.slope_x.to_absolute(),
        });
    }
    let h2 = g.h.square();
    let h3 = &h2 * &g.h;
    let four_thirds = SexRational::new(4, 3).expect("nonzero");
    Ok(&(&g.x * &h2) + &(&four_thirds * &h3))
}

/// Inverts the slope-1 heap formula: x = (V − (4/3)h³)/h². V and h are
/// quantities so mixed units work; the result is the top length in
/// nindan. V below the two-pyramid minimum (the x = 0 volume) has no
/// nonnegative solution and is rejected.
pub fn solve_grain_heap_top(v: &Quantity, h: &Quantity) -> Result<SexRational, SolidError> {
    if v.dimension() != Dimension::Volume {
        return Err(SolidError::WrongDimension {
            expected: Dimension::Volume,
            got: v.dimension(),
        });
    }
    if h.dimension() != Dimension::Length {
        return Err(SolidError::WrongDimension {
            expected: Dimension::Length,
            got: h.dimension(),
        });
    }
    let vn = v.convert(Unit::Nindan3).expect("volume to volume").value;
    let hn = h.convert(Unit::Nindan).expect("length to length").value;
    positive(&hn, "h")?;
    let h2 = hn.square();
    let minimum = &SexRational::new(4, 3).expect("nonzero") * &(&h2 * &hn);
    if vn < minimum {
        return Err(SolidError::InfeasibleHeap {
            volume: vn.to_absolute(),
            minimum: minimum.to_absolute(),
        });
    }
    Ok((&vn - &minimum)
        .checked_div(&h2)
        .expect("h is positive"))
}

/// The face angle of the slope idiom: arctan(1/x) in degrees.
pub fn slope_angle(s: &Slope, digits: u32) -> Approx {
    Approx::new(approx::arctan_reciprocal_degrees(&s.x, digits), digits)
}

/// Sphere 4πr³/3, cylinder πr²h, cone πr²h/3, at `digits` decimal
/// digits.
pub fn volume_rotation(s: &RotationSolid, digits: u32) -> Approx {
    let r2 = s.r.square();
    let rational = match s.kind {
        RotationKind::Sphere => &SexRational::new(4, 3).expect("nonzero") * &(&r2 * &s.r),
        RotationKind::Cylinder => {
            &r2 * s.h.as_ref().expect("cylinders carry a height")
        }
        RotationKind::Cone => (&r2 * s.h.as_ref().expect("cones carry a height"))
            .checked_div(&SexRational::from(3))
            .expect("three is nonzero"),
    };
    Approx::new(approx::pi_times(&rational, digits), digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sexagesimal::parse_sex;

    fn n(v: i64) -> SexRational {
        SexRational::from(v)
    }

    fn r(num: i64, den: i64) -> SexRational {
        SexRational::new(num, den).unwrap()
    }

    #[test]
    fn cuboid_volumes() {
        assert_eq!(volume_cuboid(&Cuboid::new(n(1), n(1), n(1)).unwrap()), n(1));
        assert_eq!(volume_cuboid(&Cuboid::new(n(3), n(3), n(3)).unwrap()), n(27));
        assert_eq!(volume_cuboid(&Cuboid::new(n(2), n(3), n(5)).unwrap()), n(30));
        assert!(matches!(
            Cuboid::new(n(0), n(1), n(1)),
            Err(SolidError::NonPositive { field: "a" })
        ));
    }

    #[test]
    fn prism_and_pyramid_volumes() {
        assert_eq!(volume_prism(&PrismSpec::new(n(9), n(4)).unwrap()), n(36));
        assert_eq!(volume_prism(&PrismSpec::new(n(1), n(1)).unwrap()), n(1));
        // The middle prism of the grain heap: S = (1/2)·3·6 = 9, length 4.
        assert_eq!(volume_prism(&PrismSpec::new(n(9), n(4)).unwrap()), n(36));

        assert_eq!(volume_pyramid(&PyramidSpec::new(n(9), n(3)).unwrap()), n(9));
        assert_eq!(volume_pyramid(&PyramidSpec::new(n(1), n(3)).unwrap()), n(1));
        assert_eq!(volume_pyramid(&PyramidSpec::new(n(18), n(3)).unwrap()), n(18));
    }

    #[test]
    fn frustum_formulas_match_the_tablet() {
        let f = SquareFrustum::new(n(10), n(7), r(3, 2)).unwrap();
        assert_eq!(volume_frustum_egyptian(&f), r(219, 2));
        assert_eq!(volume_frustum_babylonian(&f), r(219, 2));

        let f = SquareFrustum::new(n(10), n(7), n(18)).unwrap();
        let area_term = parse_sex("1,12;15").unwrap() + parse_sex("0;45").unwrap();
        assert_eq!(area_term, n(73));
        assert_eq!(volume_frustum_babylonian(&f), n(1314));
        assert_eq!(n(1314).to_absolute(), "21,54");

        let f = SquareFrustum::new(n(2), n(1), n(3)).unwrap();
        assert_eq!(volume_frustum_egyptian(&f), n(7));
        assert_eq!(volume_frustum_babylonian(&f), n(7));
        let f = SquareFrustum::new(n(3), n(1), n(3)).unwrap();
        assert_eq!(volume_frustum_egyptian(&f), n(13));
        assert_eq!(volume_frustum_babylonian(&f), n(13));

        assert!(matches!(
            SquareFrustum::new(n(2), n(2), n(1)),
            Err(SolidError::TopNotSmaller)
        ));
        assert!(matches!(
            SquareFrustum::new(n(2), n(1), n(0)),
            Err(SolidError::NonPositive { .. })
        ));
    }

    #[test]
    fn ngon_frustum_is_exact_at_four_sides() {
        let f = NgonFrustum::new(4, n(2), n(1), n(3)).unwrap();
        match volume_frustum_ngon(&f, 50) {
            VolumeValue::Exact(v) => assert_eq!(v, n(7)),
            VolumeValue::Approx(_) => panic!("n=4 must be exact"),
        }
    }

    #[test]
    fn ngon_frustum_matches_reference_values() {
        let f = NgonFrustum::new(3, n(2), n(1), n(3)).unwrap();
        let v = volume_frustum_ngon(&f, 50).to_f64();
        let reference = (21.0 / 4.0) / 3.0f64.sqrt();
        assert!((v - reference).abs() < 1e-12);
        assert!((v - 3.031089).abs() < 1e-6);

        let f = NgonFrustum::new(6, n(2), n(1), n(1)).unwrap();
        let v = volume_frustum_ngon(&f, 50).to_f64();
        assert!((v - 3.5 * 3.0f64.sqrt()).abs() < 1e-12);
        assert!((v - 6.062178).abs() < 1e-6);

        assert!(matches!(
            NgonFrustum::new(2, n(2), n(1), n(1)),
            Err(SolidError::TooFewSides { n: 2 })
        ));
    }

    #[test]
    fn apex_extension() {
        let f = SquareFrustum::new(n(2), n(1), n(3)).unwrap();
        assert_eq!(frustum_apex_extension(&f), n(3));
        let f = SquareFrustum::new(n(10), n(7), r(3, 2)).unwrap();
        assert_eq!(frustum_apex_extension(&f), r(7, 2));
        let f = SquareFrustum::new(n(5), n(1), n(4)).unwrap();
        assert_eq!(frustum_apex_extension(&f), n(1));
        let g = NgonFrustum::new(3, n(2), n(1), n(3)).unwrap();
        assert_eq!(frustum_apex_extension(&g), n(3));
    }

    #[test]
    fn truncated_prism_volumes() {
        let t = TruncatedTriangularPrism::new(n(4), n(3), n(3), n(6), n(3)).unwrap();
        assert_eq!(t.z(), n(10));
        assert_eq!(volume_truncated_prism(&t), n(72));

        let plain = TruncatedTriangularPrism::new(n(5), n(0), n(0), n(2), n(3)).unwrap();
        assert_eq!(volume_truncated_prism(&plain), n(15));

        let tent = TruncatedTriangularPrism::new(n(0), n(1), n(1), n(3), n(3)).unwrap();
        assert_eq!(volume_truncated_prism(&tent), n(6));

        assert!(TruncatedTriangularPrism::new(n(-1), n(0), n(0), n(2), n(3)).is_err());
        assert!(TruncatedTriangularPrism::new(n(1), n(0), n(0), n(2), n(0)).is_err());
    }

    #[test]
    fn grain_heap_dims_and_volume() {
        let g = GrainHeap::new(n(4), n(3)).unwrap();
        assert_eq!(grain_heap_dims(&g), (n(6), n(10)));
        assert_eq!(volume_grain_heap(&g).unwrap(), n(72));

        let tent = GrainHeap::new(n(0), n(1)).unwrap();
        assert_eq!(grain_heap_dims(&tent), (n(2), n(2)));

        let steep = GrainHeap::with_slope(n(4), n(3), n(2)).unwrap();
        assert_eq!(grain_heap_dims(&steep), (n(3), n(7)));
        assert!(matches!(
            volume_grain_heap(&steep),
            Err(SolidError::UnsupportedSlope { .. })
        ));
        let as_prism = steep.as_truncated_prism();
        assert_eq!(volume_truncated_prism(&as_prism), n(27));

        assert_eq!(volume_grain_heap(&GrainHeap::new(n(0), n(3)).unwrap()).unwrap(), n(36));
        assert_eq!(volume_grain_heap(&GrainHeap::new(n(1), n(3)).unwrap()).unwrap(), n(45));
        assert!(GrainHeap::new(n(1), n(0)).is_err());
        assert!(GrainHeap::with_slope(n(1), n(1), n(0)).is_err());
    }

    #[test]
    fn grain_heap_equals_its_truncated_prism() {
        let g = GrainHeap::new(n(4), n(3)).unwrap();
        let t = g.as_truncated_prism();
        assert_eq!(volume_truncated_prism(&t), volume_grain_heap(&g).unwrap());
    }

    #[test]
    fn solves_the_tablet_top_length() {
        let v = Quantity::new(parse_sex("14,24").unwrap(), Unit::Sar);
        let h = Quantity::new(n(3), Unit::Nindan);
        assert_eq!(solve_grain_heap_top(&v, &h).unwrap(), n(4));

        let boundary = Quantity::new(n(36), Unit::Nindan3);
        assert_eq!(solve_grain_heap_top(&boundary, &h).unwrap(), n(0));

        let v45 = Quantity::new(n(45), Unit::Nindan3);
        assert_eq!(solve_grain_heap_top(&v45, &h).unwrap(), n(1));

        let too_small = Quantity::new(n(35), Unit::Nindan3);
        assert!(matches!(
            solve_grain_heap_top(&too_small, &h),
            Err(SolidError::InfeasibleHeap { .. })
        ));
        assert!(matches!(
            solve_grain_heap_top(&h, &h),
            Err(SolidError::WrongDimension { .. })
        ));
        assert!(matches!(
            solve_grain_heap_top(&v, &v),
            Err(SolidError::WrongDimension { .. })
        ));
    }

    #[test]
    fn slope_angles() {
        let a = slope_angle(&Slope::new(n(1)).unwrap(), 50);
        assert!((a.to_f64() - 45.0).abs() < 1e-12);
        assert_eq!(a.to_decimal_string(), "45");

        let tiny = slope_angle(&Slope::new(n(1_000_000)).unwrap(), 50);
        assert!((tiny.to_f64() - 0.0000573).abs() < 1e-7);
        assert!(Slope::new(n(0)).is_err());
    }

    #[test]
    fn rotation_volumes() {
        let sphere = RotationSolid::sphere(n(1)).unwrap();
        let v = volume_rotation(&sphere, 50).to_f64();
        assert!((v - 4.1887902).abs() < 1e-6);

        let cyl = volume_rotation(&RotationSolid::cylinder(n(1), n(3)).unwrap(), 50);
        let cone = volume_rotation(&RotationSolid::cone(n(1), n(3)).unwrap(), 50);
        assert!((cyl.to_f64() / cone.to_f64() - 3.0).abs() < 1e-12);

        let big = volume_rotation(&RotationSolid::sphere(n(2)).unwrap(), 50);
        assert!((big.to_f64() - 8.0 * v).abs() < 1e-9);
    }
}
