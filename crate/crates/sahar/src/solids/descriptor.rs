//! JSON-facing solid descriptors: `{kind, params…}` with numeral
//! parameters. The CLI consumes these from files or assembles them
//! from flags; `volume` validates and dispatches to the closed forms,
//! and `oracle_check` reruns the result through the slab oracle.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::oracle::{profiles, slab_volume_oracle};
use super::{
    volume_cuboid, volume_frustum_egyptian, volume_frustum_ngon, volume_grain_heap,
    volume_prism, volume_pyramid, volume_rotation, volume_truncated_prism, Cuboid, GrainHeap,
    NgonFrustum, PrismSpec, PyramidSpec, RotationSolid, SolidError, SquareFrustum,
    TruncatedTriangularPrism, VolumeValue,
};
use crate::sexagesimal::SexRational;

fn slope_one() -> SexRational {
    SexRational::one()
}

/// A solid as data. Parameters are plain numbers; the CLI's convention
/// is lengths in nindan, giving volumes in nindan³.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolidSpec {
    Cuboid {
        a: SexRational,
        b: SexRational,
        c: SexRational,
    },
    Prism {
        base_area: SexRational,
        h: SexRational,
    },
    Pyramid {
        base_area: SexRational,
        h: SexRational,
    },
    Frustum {
        a: SexRational,
        b: SexRational,
        h: SexRational,
    },
    NgonFrustum {
        n: u32,
        a: SexRational,
        b: SexRational,
        h: SexRational,
    },
    TruncatedPrism {
        x: SexRational,
        x1: SexRational,
        x2: SexRational,
        y: SexRational,
        h: SexRational,
    },
    GrainHeap {
        x: SexRational,
        h: SexRational,
        #[serde(default = "slope_one")]
        slope: SexRational,
    },
    Sphere {
        r: SexRational,
    },
    Cylinder {
        r: SexRational,
        h: SexRational,
    },
    Cone {
        r: SexRational,
        h: SexRational,
    },
}

impl SolidSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            SolidSpec::Cuboid { .. } => "cuboid",
            SolidSpec::Prism { .. } => "prism",
            SolidSpec::Pyramid { .. } => "pyramid",
            SolidSpec::Frustum { .. } => "frustum",
            SolidSpec::NgonFrustum { .. } => "ngon_frustum",
            SolidSpec::TruncatedPrism { .. } => "truncated_prism",
            SolidSpec::GrainHeap { .. } => "grain_heap",
            SolidSpec::Sphere { .. } => "sphere",
            SolidSpec::Cylinder { .. } => "cylinder",
            SolidSpec::Cone { .. } => "cone",
        }
    }

    /// Validates the parameters and evaluates the volume, exactly when
    /// the formula permits.
    pub fn volume(&self, digits: u32) -> Result<VolumeValue, SolidError> {
        let exact = |q: SexRational| Ok(VolumeValue::Exact(q));
        match self {
            SolidSpec::Cuboid { a, b, c } => {
                exact(volume_cuboid(&Cuboid::new(a.clone(), b.clone(), c.clone())?))
            }
            SolidSpec::Prism { base_area, h } => {
                exact(volume_prism(&PrismSpec::new(base_area.clone(), h.clone())?))
            }
            SolidSpec::Pyramid { base_area, h } => exact(volume_pyramid(&PyramidSpec::new(
                base_area.clone(),
                h.clone(),
            )?)),
            SolidSpec::Frustum { a, b, h } => exact(volume_frustum_egyptian(
                &SquareFrustum::new(a.clone(), b.clone(), h.clone())?,
            )),
            SolidSpec::NgonFrustum { n, a, b, h } => Ok(volume_frustum_ngon(
                &NgonFrustum::new(*n, a.clone(), b.clone(), h.clone())?,
                digits,
            )),
            SolidSpec::TruncatedPrism { x, x1, x2, y, h } => {
                exact(volume_truncated_prism(&TruncatedTriangularPrism::new(
                    x.clone(),
                    x1.clone(),
                    x2.clone(),
                    y.clone(),
                    h.clone(),
                )?))
            }
            SolidSpec::GrainHeap { x, h, slope } => {
                let heap = GrainHeap::with_slope(x.clone(), h.clone(), slope.clone())?;
                if slope == &SexRational::one() {
                    exact(volume_grain_heap(&heap)?)
                } else {
                    exact(volume_truncated_prism(&heap.as_truncated_prism()))
                }
            }
            SolidSpec::Sphere { r } => Ok(VolumeValue::Approx(volume_rotation(
                &RotationSolid::sphere(r.clone())?,
                digits,
            ))),
            SolidSpec::Cylinder { r, h } => Ok(VolumeValue::Approx(volume_rotation(
                &RotationSolid::cylinder(r.clone(), h.clone())?,
                digits,
            ))),
            SolidSpec::Cone { r, h } => Ok(VolumeValue::Approx(volume_rotation(
                &RotationSolid::cone(r.clone(), h.clone())?,
                digits,
            ))),
        }
    }

    /// The solid's cross-section area profile and integration extent
    /// for the slab oracle.
    pub fn profile(&self) -> Result<(Box<dyn Fn(f64) -> f64 + Send + Sync>, f64), SolidError> {
        // Validate via the constructors first so the oracle sees the
        // same domain as the closed forms.
        self.volume(8)?;
        let f64_of = |q: &SexRational| q.to_f64();
        Ok(match self {
            SolidSpec::Cuboid { a, b, c } => (
                Box::new(profiles::constant(f64_of(a) * f64_of(b))),
                f64_of(c),
            ),
            SolidSpec::Prism { base_area, h } => {
                (Box::new(profiles::constant(f64_of(base_area))), f64_of(h))
            }
            SolidSpec::Pyramid { base_area, h } => (
                Box::new(profiles::pyramid(f64_of(base_area), f64_of(h))),
                f64_of(h),
            ),
            SolidSpec::Frustum { a, b, h } => (
                Box::new(profiles::square_frustum(f64_of(a), f64_of(b), f64_of(h))),
                f64_of(h),
            ),
            SolidSpec::NgonFrustum { n, a, b, h } => (
                Box::new(profiles::ngon_frustum(*n, f64_of(a), f64_of(b), f64_of(h))),
                f64_of(h),
            ),
            SolidSpec::TruncatedPrism { x, x1, x2, y, h } => (
                Box::new(profiles::truncated_prism(
                    f64_of(x),
                    f64_of(x1),
                    f64_of(x2),
                    f64_of(y),
                    f64_of(h),
                )),
                f64_of(h),
            ),
            SolidSpec::GrainHeap { x, h, slope } => {
                let heap = GrainHeap::with_slope(x.clone(), h.clone(), slope.clone())?;
                let t = heap.as_truncated_prism();
                let spec = SolidSpec::TruncatedPrism {
                    x: x.clone(),
                    x1: t.x1.clone(),
                    x2: t.x2.clone(),
                    y: t.y.clone(),
                    h: h.clone(),
                };
                return spec.profile();
            }
            SolidSpec::Sphere { r } => {
                (Box::new(profiles::sphere(f64_of(r))), 2.0 * f64_of(r))
            }
            SolidSpec::Cylinder { r, h } => {
                (Box::new(profiles::cylinder(f64_of(r))), f64_of(h))
            }
            SolidSpec::Cone { r, h } => {
                (Box::new(profiles::cone(f64_of(r), f64_of(h))), f64_of(h))
            }
        })
    }

    /// Integrates the slab oracle and compares it with the closed form.
    pub fn oracle_check(&self, digits: u32, slabs: usize) -> Result<OracleReport, SolidError> {
        let closed = self.volume(digits)?.to_f64();
        let (profile, extent) = self.profile()?;
        let oracle = slab_volume_oracle(profile, extent, slabs)?;
        let scale = closed.abs().max(f64::MIN_POSITIVE);
        Ok(OracleReport {
            closed_form: closed,
            oracle,
            relative_error: (closed - oracle).abs() / scale,
            slabs,
        })
    }
}

/// Outcome of a slab-oracle cross-check.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub closed_form: f64,
    pub oracle: f64,
    pub relative_error: f64,
    pub slabs: usize,
}

impl OracleReport {
    pub fn agrees(&self, tolerance: f64) -> bool {
        self.relative_error <= tolerance
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "oracle {:.12e} vs closed form {:.12e} over {} slabs: relative error {:.3e}",
            self.oracle, self.closed_form, self.slabs, self.relative_error
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heap() -> SolidSpec {
        SolidSpec::GrainHeap {
            x: SexRational::from(4),
            h: SexRational::from(3),
            slope: SexRational::one(),
        }
    }

    #[test]
    fn descriptor_volume_dispatches() {
        let v = heap().volume(50).unwrap();
        assert_eq!(v.as_exact(), Some(&SexRational::from(72)));
        assert_eq!(v.to_string(), "1,12");

        let sphere = SolidSpec::Sphere {
            r: SexRational::one(),
        };
        let v = sphere.volume(50).unwrap();
        assert!(!v.is_exact());
        assert!((v.to_f64() - 4.188790204786391).abs() < 1e-12);
    }

    #[test]
    fn descriptor_json_round_trips() {
        let spec = heap();
        let json = serde_json::to_value(&spec).unwrap();
        assert_eq!(json["kind"], "grain_heap");
        assert_eq!(json["x"]["sexagesimal"], "4");
        let back: SolidSpec = serde_json::from_value(json).unwrap();
        assert_eq!(back, spec);

        let from_text: SolidSpec =
            serde_json::from_str(r#"{"kind":"frustum","a":"10","b":"7","h":"1;30"}"#).unwrap();
        match from_text.volume(50).unwrap() {
            VolumeValue::Exact(v) => assert_eq!(v, SexRational::new(219, 2).unwrap()),
            _ => panic!("frustum volume is exact"),
        }
        let defaulted: SolidSpec =
            serde_json::from_str(r#"{"kind":"grain_heap","x":"4","h":"3"}"#).unwrap();
        assert_eq!(defaulted, heap());
    }

    #[test]
    fn descriptor_rejects_invalid_parameters() {
        let bad = SolidSpec::Frustum {
            a: SexRational::from(1),
            b: SexRational::from(2),
            h: SexRational::from(1),
        };
        assert!(matches!(bad.volume(50), Err(SolidError::TopNotSmaller)));
        let unknown: Result<SolidSpec, _> = serde_json::from_str(r#"{"kind":"torus","r":"1"}"#);
        assert!(unknown.is_err());
    }

    #[test]
    fn oracle_check_agrees_with_closed_forms() {
        let report = heap().oracle_check(50, 100).unwrap();
        assert!(report.agrees(1e-12), "{report}");

        let sphere = SolidSpec::Sphere {
            r: SexRational::from(2),
        };
        let report = sphere.oracle_check(50, 10_000).unwrap();
        assert!(report.agrees(1e-6), "{report}");

        let general_heap = SolidSpec::GrainHeap {
            x: SexRational::from(4),
            h: SexRational::from(3),
            slope: SexRational::from(2),
        };
        let report = general_heap.oracle_check(50, 64).unwrap();
        assert!(report.agrees(1e-12), "{report}");
    }
}
