//! A Cavalieri-style numeric oracle: integrate a solid's cross-section
//! area profile over its height with composite Simpson's rule and
//! compare against the closed form. Every profile in this crate is a
//! polynomial in the height of degree ≤ 2, for which Simpson is exact
//! up to floating-point representation.

use super::SolidError;

/// Composite Simpson integration of `profile` over `[0, extent]` with
/// an even number of slabs (≥ 2). Summation is compensated so 10⁴-slab
/// runs stay at roundoff accuracy.
pub fn slab_volume_oracle(
    profile: impl Fn(f64) -> f64,
    extent: f64,
    slabs: usize,
) -> Result<f64, SolidError> {
    if slabs < 2 || slabs % 2 != 0 {
        return Err(SolidError::SlabCount { slabs });
    }
    if !(extent > 0.0) || !extent.is_finite() {
        return Err(SolidError::NonPositive { field: "extent" });
    }
    let step = extent / slabs as f64;
    let mut sum = Neumaier::default();
    sum.add(profile(0.0));
    sum.add(profile(extent));
    for i in 1..slabs {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum.add(weight * profile(i as f64 * step));
    }
    Ok(sum.total() * step / 3.0)
}

/// Neumaier's variant of Kahan summation.
#[derive(Default)]
struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Cross-section area profiles for the supported solids, each a
/// function of height above the base.
pub mod profiles {
    /// Prisms and cuboids: constant area.
    pub fn constant(area: f64) -> impl Fn(f64) -> f64 {
        move |_| area
    }

    /// Square frustum: the side interpolates linearly from `a` to `b`.
    pub fn square_frustum(a: f64, b: f64, h: f64) -> impl Fn(f64) -> f64 {
        move |t| {
            let s = a + (b - a) * t / h;
            s * s
        }
    }

    /// Regular n-gon frustum: area (n/4)·cot(π/n)·side².
    pub fn ngon_frustum(n: u32, a: f64, b: f64, h: f64) -> impl Fn(f64) -> f64 {
        let cot = 1.0 / (std::f64::consts::PI / n as f64).tan();
        let side = square_frustum(a, b, h);
        move |t| (n as f64 / 4.0) * cot * side(t)
    }

    /// Pyramid tapering from base area `s` to its apex.
    pub fn pyramid(s: f64, h: f64) -> impl Fn(f64) -> f64 {
        move |t| {
            let k = 1.0 - t / h;
            s * k * k
        }
    }

    /// Cone of base radius `r`.
    pub fn cone(r: f64, h: f64) -> impl Fn(f64) -> f64 {
        pyramid(std::f64::consts::PI * r * r, h)
    }

    /// Cylinder of radius `r`.
    pub fn cylinder(r: f64) -> impl Fn(f64) -> f64 {
        constant(std::f64::consts::PI * r * r)
    }

    /// Sphere of radius `r`, integrated over `[0, 2r]`.
    pub fn sphere(r: f64) -> impl Fn(f64) -> f64 {
        move |t| {
            let d = t - r;
            std::f64::consts::PI * (r * r - d * d)
        }
    }

    /// Truncated triangular prism: a base rectangle z×y narrowing to
    /// the ridge x, with z = x + x1 + x2.
    pub fn truncated_prism(x: f64, x1: f64, x2: f64, y: f64, h: f64) -> impl Fn(f64) -> f64 {
        let z = x + x1 + x2;
        move |t| {
            let k = 1.0 - t / h;
            let length = x + (z - x) * k;
            let width = y * k;
            length * width
        }
    }

    /// Grain heap with slope 1: the truncated prism it decomposes into.
    pub fn grain_heap(x: f64, h: f64) -> impl Fn(f64) -> f64 {
        truncated_prism(x, h, h, 2.0 * h, h)
    }
}
