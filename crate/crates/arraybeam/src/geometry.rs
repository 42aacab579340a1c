//! Microphone array geometry generators.
//!
//! All layouts live in the z = 0 plane. Generator formulas work in degrees
//! and convert to radians only when evaluating trig functions.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Positions closer than this (in meters) are rejected as coincident.
pub const COINCIDENT_TOL: f64 = 1e-9;

/// Schema version stamped into every serialized document.
pub const FORMAT_VERSION: &str = "arraybeam/v1";

/// How a far-field direction (alpha, beta) maps to a unit vector, recorded in
/// every layout file so downstream consumers agree on the dome convention.
pub const DOME_CONVENTION: &str =
    "far-field (alpha, beta) -> (sin(alpha)cos(beta), sin(beta), cos(alpha)cos(beta)), \
     alpha/beta in [-pi/2, pi/2], array normal +z";

/// A single microphone position in meters. `z` is always 0 for this crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MicPosition {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MicPosition {
    pub fn new(x: f64, y: f64) -> Self {
        MicPosition { x, y, z: 0.0 }
    }

    /// Position at radius `r` and angle `delta` in degrees.
    fn polar(r: f64, delta_deg: f64) -> Self {
        let a = delta_deg.to_radians();
        MicPosition::new(r * a.cos(), r * a.sin())
    }

    pub fn distance_to(&self, other: [f64; 3]) -> f64 {
        let dx = self.x - other[0];
        let dy = self.y - other[1];
        let dz = self.z - other[2];
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Uniform line array: N mics, spacing d, mic 1 at the origin on the +x axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearParams {
    pub n: usize,
    pub d: f64,
}

/// Two concentric rings of N/2 mics each at radii R1 < R2. The paper leaves
/// the relative ring rotation open; both rings default to a first mic at 0
/// degrees, with optional per-ring offsets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingParams {
    pub n: usize,
    pub r1: f64,
    pub r2: f64,
    #[serde(default)]
    pub offset1_deg: f64,
    #[serde(default)]
    pub offset2_deg: f64,
}

impl RingParams {
    pub fn new(n: usize, r1: f64, r2: f64) -> Self {
        RingParams { n, r1, r2, offset1_deg: 0.0, offset2_deg: 0.0 }
    }
}

/// Four straight-ish spiral arms with heads at 0/90/180/270 degrees and tails
/// swept 45 degrees further out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourArmSpiralParams {
    pub n: usize,
    pub r1: f64,
    pub r2: f64,
}

/// Single spiral from (R1, 0 deg) to (R2, phi deg), mics equally spaced in
/// both radius and angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArchimedeanParams {
    pub n: usize,
    pub r1: f64,
    pub r2: f64,
    /// Total turn angle of the spiral in degrees.
    pub phi: f64,
}

/// Underbrink multi-arm log-spiral: `na` arms of `nm` mics, an inner circle
/// at R1 and equal-area annuli out to R2. `nu` is the spiral angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnderbrinkParams {
    pub na: usize,
    pub nm: usize,
    pub r1: f64,
    pub r2: f64,
    pub nu: f64,
}

/// Two rings placed so each mic is circumscribed by circles of equal area:
/// `n_or` mics on the outer ring of a disk of radius `r`, the rest inside.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquiAreaParams {
    pub n: usize,
    pub n_or: usize,
    pub r: f64,
}

impl EquiAreaParams {
    /// Circumscribing-circle radii (s1, s2) and ring radii (r_or, r_ir).
    pub fn derived(&self) -> Result<EquiAreaDerived> {
        let n_ir = self.n - self.n_or;
        let sin1 = (PI / self.n_or as f64).sin();
        let s1 = self.r * sin1 / (1.0 + sin1);
        let sin2 = (PI / n_ir as f64).sin();
        let s2 = (self.r - 2.0 * s1) * sin2 / (1.0 + sin2);
        let r_or = self.r - s1;
        let r_ir = self.r - 2.0 * s1 - s2;
        if s1 <= 0.0 {
            return Err(Error::parameter("equi-area s1 must be positive (N_OR too small)"));
        }
        if s2 <= 0.0 {
            return Err(Error::parameter("equi-area s2 must be positive (inner count too small)"));
        }
        if r_ir <= 0.0 {
            return Err(Error::parameter("inner ring collapses (R_IR <= 0)"));
        }
        Ok(EquiAreaDerived { s1, s2, r_or, r_ir })
    }
}

/// Derived equi-area quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquiAreaDerived {
    pub s1: f64,
    pub s2: f64,
    pub r_or: f64,
    pub r_ir: f64,
}

/// Design tag plus the generating parameters, kept with the layout for
/// serialization and reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "design", content = "params", rename_all = "snake_case")]
pub enum DesignParams {
    Linear(LinearParams),
    Concentric(RingParams),
    FourArmSpiral(FourArmSpiralParams),
    Archimedean(ArchimedeanParams),
    Underbrink(UnderbrinkParams),
    EquiArea(EquiAreaParams),
    Custom,
}

impl DesignParams {
    pub fn name(&self) -> &'static str {
        match self {
            DesignParams::Linear(_) => "linear",
            DesignParams::Concentric(_) => "concentric",
            DesignParams::FourArmSpiral(_) => "four_arm_spiral",
            DesignParams::Archimedean(_) => "archimedean",
            DesignParams::Underbrink(_) => "underbrink",
            DesignParams::EquiArea(_) => "equi_area",
            DesignParams::Custom => "custom",
        }
    }
}

/// An ordered set of distinct microphone positions in the z = 0 plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayLayout {
    mics: Vec<MicPosition>,
    design: DesignParams,
}

#[derive(Serialize, Deserialize)]
struct LayoutDoc {
    format: String,
    #[serde(flatten)]
    design: DesignParams,
    convention: String,
    mics: Vec<[f64; 3]>,
}

impl ArrayLayout {
    fn validated(mics: Vec<MicPosition>, design: DesignParams) -> Result<Self> {
        if mics.is_empty() {
            return Err(Error::parameter("layout must contain at least one microphone"));
        }
        for m in &mics {
            if !(m.x.is_finite() && m.y.is_finite() && m.z.is_finite()) {
                return Err(Error::geometry("non-finite microphone coordinate"));
            }
            if m.z != 0.0 {
                return Err(Error::geometry("microphones must lie in the z = 0 plane"));
            }
        }
        for i in 0..mics.len() {
            for j in (i + 1)..mics.len() {
                if mics[i].distance_to([mics[j].x, mics[j].y, mics[j].z]) < COINCIDENT_TOL {
                    return Err(Error::geometry(format!(
                        "microphones {i} and {j} coincide (distance < {COINCIDENT_TOL} m)"
                    )));
                }
            }
        }
        Ok(ArrayLayout { mics, design })
    }

    /// Wrap externally supplied positions as a `custom` layout.
    pub fn custom(mics: Vec<MicPosition>) -> Result<Self> {
        Self::validated(mics, DesignParams::Custom)
    }

    pub fn mics(&self) -> &[MicPosition] {
        &self.mics
    }

    pub fn len(&self) -> usize {
        self.mics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mics.is_empty()
    }

    pub fn design(&self) -> &DesignParams {
        &self.design
    }

    /// Largest pairwise mic distance in meters.
    pub fn aperture(&self) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.mics.len() {
            for j in (i + 1)..self.mics.len() {
                let m = &self.mics[j];
                best = best.max(self.mics[i].distance_to([m.x, m.y, m.z]));
            }
        }
        best
    }

    /// Serialize to the interchange JSON document.
    pub fn to_json(&self) -> String {
        let doc = LayoutDoc {
            format: FORMAT_VERSION.to_string(),
            design: self.design.clone(),
            convention: DOME_CONVENTION.to_string(),
            mics: self.mics.iter().map(|m| [m.x, m.y, m.z]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("layout serialization cannot fail")
    }

    /// Parse a layout document, validating all layout invariants. Positions
    /// in the file are authoritative; params are kept as metadata.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LayoutDoc = serde_json::from_str(text)
            .map_err(|e| Error::parameter(format!("bad layout JSON: {e}")))?;
        if doc.format != FORMAT_VERSION {
            return Err(Error::parameter(format!(
                "unsupported layout format {:?} (expected {FORMAT_VERSION:?})",
                doc.format
            )));
        }
        let mics = doc
            .mics
            .into_iter()
            .map(|[x, y, z]| MicPosition { x, y, z })
            .collect();
        Self::validated(mics, doc.design)
    }
}

/// N mics on the +x axis: mic i at x = (i - 1) d.
pub fn make_linear(params: LinearParams) -> Result<ArrayLayout> {
    if params.n < 2 {
        return Err(Error::parameter("linear array needs N >= 2"));
    }
    if !(params.d > 0.0) {
        return Err(Error::parameter("spacing d must be positive"));
    }
    let mics = (0..params.n)
        .map(|i| MicPosition::new(i as f64 * params.d, 0.0))
        .collect();
    ArrayLayout::validated(mics, DesignParams::Linear(params))
}

/// N/2 mics equally spaced on each of two concentric rings.
pub fn make_concentric(params: RingParams) -> Result<ArrayLayout> {
    if params.n < 4 || params.n % 2 != 0 {
        return Err(Error::parameter("N must be even (and >= 4) to split into two rings"));
    }
    if !(params.r1 > 0.0 && params.r2 > params.r1) {
        return Err(Error::parameter("radii must satisfy 0 < R1 < R2"));
    }
    let per_ring = params.n / 2;
    let pitch = 360.0 / per_ring as f64;
    let mut mics = Vec::with_capacity(params.n);
    for i in 0..per_ring {
        mics.push(MicPosition::polar(params.r1, params.offset1_deg + pitch * i as f64));
    }
    for i in 0..per_ring {
        mics.push(MicPosition::polar(params.r2, params.offset2_deg + pitch * i as f64));
    }
    ArrayLayout::validated(mics, DesignParams::Concentric(params))
}

/// Four arms with heads at 0/90/180/270 degrees; mic i of an arm sits at
/// delta_head + 45 (i-1)/(N/4 - 1) degrees and radius R1 + (R2-R1)(i-1)/(N/4 - 1).
pub fn make_four_arm_spiral(params: FourArmSpiralParams) -> Result<ArrayLayout> {
    if params.n % 4 != 0 {
        return Err(Error::parameter("N must be divisible by 4"));
    }
    let per_arm = params.n / 4;
    if per_arm < 2 {
        return Err(Error::parameter("each arm needs at least 2 mics (N/4 >= 2)"));
    }
    if !(params.r1 > 0.0 && params.r2 > params.r1) {
        return Err(Error::parameter("radii must satisfy 0 < R1 < R2"));
    }
    let denom = (per_arm - 1) as f64;
    let mut mics = Vec::with_capacity(params.n);
    for arm in 0..4 {
        let head = 90.0 * arm as f64;
        for i in 0..per_arm {
            let t = i as f64 / denom;
            mics.push(MicPosition::polar(
                params.r1 + (params.r2 - params.r1) * t,
                head + 45.0 * t,
            ));
        }
    }
    ArrayLayout::validated(mics, DesignParams::FourArmSpiral(params))
}

/// Single spiral: mic i at phi (i-1)/(N-1) degrees, radius linear from R1 to R2.
pub fn make_archimedean(params: ArchimedeanParams) -> Result<ArrayLayout> {
    if params.n < 2 {
        return Err(Error::parameter("archimedean spiral needs N >= 2"));
    }
    if !(params.r1 > 0.0 && params.r2 > params.r1) {
        return Err(Error::parameter("radii must satisfy 0 < R1 < R2"));
    }
    if !(params.phi > 0.0) {
        return Err(Error::parameter("turn angle phi must be positive"));
    }
    let denom = (params.n - 1) as f64;
    let mics = (0..params.n)
        .map(|i| {
            let t = i as f64 / denom;
            MicPosition::polar(params.r1 + (params.r2 - params.r1) * t, params.phi * t)
        })
        .collect();
    ArrayLayout::validated(mics, DesignParams::Archimedean(params))
}

/// Underbrink log-spiral: r(m,1) = R1, r(m,n) = sqrt((2n-3)/(2Nm-3)) R2, angles
/// 180 ln(r/R1) / (pi cot(nu)) + 360 (m-1)/Na degrees.
pub fn make_underbrink(params: UnderbrinkParams) -> Result<ArrayLayout> {
    if params.na < 1 {
        return Err(Error::parameter("need at least one spiral arm"));
    }
    if params.nm < 2 {
        return Err(Error::parameter("need at least 2 mics per arm (Nm >= 2)"));
    }
    if !(params.r1 > 0.0 && params.r2 > params.r1) {
        return Err(Error::parameter("radii must satisfy 0 < R1 < R2"));
    }
    if !(params.nu > 0.0 && params.nu < PI / 2.0) {
        return Err(Error::parameter("spiral angle nu must lie in (0, pi/2) radians"));
    }
    let cot_nu = 1.0 / params.nu.tan();
    if cot_nu == 0.0 || !cot_nu.is_finite() {
        return Err(Error::parameter("cot(nu) is degenerate"));
    }
    let mut mics = Vec::with_capacity(params.na * params.nm);
    for m in 1..=params.na {
        let arm_offset = 360.0 * (m - 1) as f64 / params.na as f64;
        for n in 1..=params.nm {
            let r = if n == 1 {
                params.r1
            } else {
                ((2 * n - 3) as f64 / (2 * params.nm - 3) as f64).sqrt() * params.r2
            };
            let swirl = 180.0 * (r / params.r1).ln() / (PI * cot_nu);
            mics.push(MicPosition::polar(r, swirl + arm_offset));
        }
    }
    ArrayLayout::validated(mics, DesignParams::Underbrink(params))
}

/// Equi-area two-ring layout: N_OR mics at radius R - s1, the remaining
/// N - N_OR at radius R - 2 s1 - s2, both rings starting at 0 degrees.
pub fn make_equi_area(params: EquiAreaParams) -> Result<ArrayLayout> {
    if params.n < 2 {
        return Err(Error::parameter("equi-area array needs N >= 2"));
    }
    if params.n_or < 1 || params.n_or >= params.n {
        return Err(Error::parameter("need 1 <= N_OR < N"));
    }
    if !(params.r > 0.0) {
        return Err(Error::parameter("disk radius R must be positive"));
    }
    let derived = params.derived()?;
    let n_ir = params.n - params.n_or;
    let mut mics = Vec::with_capacity(params.n);
    for i in 0..params.n_or {
        mics.push(MicPosition::polar(derived.r_or, 360.0 * i as f64 / params.n_or as f64));
    }
    for j in 0..n_ir {
        mics.push(MicPosition::polar(derived.r_ir, 360.0 * j as f64 / n_ir as f64));
    }
    ArrayLayout::validated(mics, DesignParams::EquiArea(params))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn linear_two_point() {
        let layout = make_linear(LinearParams { n: 2, d: 1.0 }).unwrap();
        assert_eq!(layout.mics()[0], MicPosition::new(0.0, 0.0));
        assert_eq!(layout.mics()[1], MicPosition::new(1.0, 0.0));
    }

    #[test]
    fn linear_fig6_configuration() {
        let layout = make_linear(LinearParams { n: 4, d: 0.2 }).unwrap();
        let xs: Vec<f64> = layout.mics().iter().map(|m| m.x).collect();
        for (x, want) in xs.iter().zip([0.0, 0.2, 0.4, 0.6]) {
            assert!(close(*x, want, 1e-15), "x = {x}, want {want}");
        }
    }

    #[test]
    fn linear_degenerate_count() {
        assert!(matches!(
            make_linear(LinearParams { n: 1, d: 0.1 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn concentric_two_point_rings() {
        let layout = make_concentric(RingParams::new(4, 1.0, 2.0)).unwrap();
        let got: Vec<(f64, f64)> = layout.mics().iter().map(|m| (m.x, m.y)).collect();
        let want = [(1.0, 0.0), (-1.0, 0.0), (2.0, 0.0), (-2.0, 0.0)];
        for ((x, y), (wx, wy)) in got.iter().zip(want) {
            assert!(close(*x, wx, 1e-12) && close(*y, wy, 1e-12), "got ({x},{y})");
        }
    }

    #[test]
    fn concentric_table1_pitch() {
        let layout = make_concentric(RingParams::new(16, 0.1, 0.5)).unwrap();
        assert_eq!(layout.len(), 16);
        for (i, m) in layout.mics().iter().enumerate() {
            let r = (m.x * m.x + m.y * m.y).sqrt();
            let want_r = if i < 8 { 0.1 } else { 0.5 };
            assert!(close(r, want_r, 1e-12));
            let ang = m.y.atan2(m.x).to_degrees().rem_euclid(360.0);
            let want_ang = (45.0 * (i % 8) as f64).rem_euclid(360.0);
            let diff = (ang - want_ang).abs().min(360.0 - (ang - want_ang).abs());
            assert!(diff < 1e-9, "mic {i} at {ang} deg, want {want_ang}");
        }
    }

    #[test]
    fn concentric_odd_split_rejected() {
        assert!(matches!(
            make_concentric(RingParams::new(15, 0.1, 0.5)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn four_arm_minimal() {
        // N/4 = 2: head and tail only, evaluated straight from the arm formulas.
        let layout = make_four_arm_spiral(FourArmSpiralParams { n: 8, r1: 1.0, r2: 2.0 }).unwrap();
        let head = layout.mics()[0];
        assert!(close(head.x, 1.0, 1e-12) && close(head.y, 0.0, 1e-12));
        let tail = layout.mics()[1];
        assert!(close(tail.x, 2.0 * 45f64.to_radians().cos(), 1e-12));
        assert!(close(tail.y, 2.0 * 45f64.to_radians().sin(), 1e-12));
    }

    #[test]
    fn four_arm_table1_tail_at_45() {
        let layout =
            make_four_arm_spiral(FourArmSpiralParams { n: 16, r1: 0.1, r2: 0.5 }).unwrap();
        let tail = layout.mics()[3];
        let r = (tail.x * tail.x + tail.y * tail.y).sqrt();
        let ang = tail.y.atan2(tail.x).to_degrees();
        assert!(close(r, 0.5, 1e-12));
        assert!(close(ang, 45.0, 1e-9));
    }

    #[test]
    fn four_arm_not_divisible() {
        assert!(matches!(
            make_four_arm_spiral(FourArmSpiralParams { n: 6, r1: 0.1, r2: 0.5 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn archimedean_endpoints() {
        let layout = make_archimedean(ArchimedeanParams { n: 2, r1: 1.0, r2: 2.0, phi: 90.0 })
            .unwrap();
        assert!(close(layout.mics()[0].x, 1.0, 1e-12));
        assert!(close(layout.mics()[0].y, 0.0, 1e-12));
        assert!(close(layout.mics()[1].x, 0.0, 1e-12));
        assert!(close(layout.mics()[1].y, 2.0, 1e-12));
    }

    #[test]
    fn archimedean_table1_mic9() {
        let layout = make_archimedean(ArchimedeanParams { n: 16, r1: 0.1, r2: 0.5, phi: 90.0 })
            .unwrap();
        let m = layout.mics()[8];
        let r = (m.x * m.x + m.y * m.y).sqrt();
        let ang = m.y.atan2(m.x).to_degrees();
        assert!(close(r, 0.31333333333333335, 1e-12), "r = {r}");
        assert!(close(ang, 48.0, 1e-9), "delta = {ang}");
    }

    #[test]
    fn archimedean_single_mic_rejected() {
        assert!(matches!(
            make_archimedean(ArchimedeanParams { n: 1, r1: 0.1, r2: 0.5, phi: 90.0 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn underbrink_second_ring_radius() {
        let layout = make_underbrink(UnderbrinkParams {
            na: 4,
            nm: 4,
            r1: 0.1,
            r2: 0.5,
            nu: 5.0 * PI / 16.0,
        })
        .unwrap();
        assert_eq!(layout.len(), 16);
        let m = layout.mics()[1]; // arm 1, n = 2
        let r = (m.x * m.x + m.y * m.y).sqrt();
        assert!(close(r, 0.22360679774997896, 1e-12), "r = {r}");
    }

    #[test]
    fn underbrink_head_of_first_arm_at_zero() {
        let layout = make_underbrink(UnderbrinkParams {
            na: 1,
            nm: 2,
            r1: 1.0,
            r2: 1.5,
            nu: PI / 4.0,
        })
        .unwrap();
        // ln(R1/R1) = 0 and m = 1, so the first mic sits at (R1, 0).
        assert!(close(layout.mics()[0].x, 1.0, 1e-12));
        assert!(close(layout.mics()[0].y, 0.0, 1e-12));
    }

    #[test]
    fn underbrink_annuli_equal_area() {
        // r(m,n)^2 is affine in n with slope 2 R2^2 / (2 Nm - 3) for n >= 2.
        let nm = 5;
        let r2 = 0.7;
        let layout = make_underbrink(UnderbrinkParams {
            na: 2,
            nm,
            r1: 0.05,
            r2,
            nu: 5.0 * PI / 16.0,
        })
        .unwrap();
        let slope = 2.0 * r2 * r2 / (2 * nm - 3) as f64;
        for n in 2..nm {
            let a = &layout.mics()[n - 1]; // arm 1, ring n
            let b = &layout.mics()[n]; // arm 1, ring n+1
            let diff = (b.x * b.x + b.y * b.y) - (a.x * a.x + a.y * a.y);
            assert!(close(diff, slope, 1e-12), "ring {n}: {diff} vs {slope}");
        }
    }

    #[test]
    fn equi_area_table1_derived() {
        let params = EquiAreaParams { n: 16, n_or: 11, r: 0.5 };
        let d = params.derived().unwrap();
        assert!(close(d.s1, 0.1099030196813064, 1e-12), "s1 = {}", d.s1);
        assert!(close(d.r_or, 0.3900969803186936, 1e-12), "r_or = {}", d.r_or);
        assert!(close(d.s2, 0.1037255369429121, 1e-12));
        assert!(close(d.r_ir, 0.17646842369447513, 1e-12));
    }

    #[test]
    fn equi_area_outer_pitch() {
        let layout = make_equi_area(EquiAreaParams { n: 16, n_or: 11, r: 0.5 }).unwrap();
        let a0 = layout.mics()[0].y.atan2(layout.mics()[0].x).to_degrees();
        let a1 = layout.mics()[1].y.atan2(layout.mics()[1].x).to_degrees();
        assert!(close(a1 - a0, 360.0 / 11.0, 1e-9), "pitch = {}", a1 - a0);
    }

    #[test]
    fn equi_area_degenerate_outer_ring() {
        // N_OR = 1 makes sin(pi/1) = 0, so s1 = 0.
        assert!(matches!(
            make_equi_area(EquiAreaParams { n: 2, n_or: 1, r: 1.0 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn ring_rotation_maps_rings_onto_themselves() {
        // Rotating the equi-area outer ring by its pitch permutes the outer mics.
        let layout = make_equi_area(EquiAreaParams { n: 16, n_or: 11, r: 0.5 }).unwrap();
        let pitch = (360.0 / 11.0f64).to_radians();
        let outer: Vec<&MicPosition> = layout.mics().iter().take(11).collect();
        for m in &outer {
            let rx = m.x * pitch.cos() - m.y * pitch.sin();
            let ry = m.x * pitch.sin() + m.y * pitch.cos();
            let matched = outer
                .iter()
                .any(|o| ((o.x - rx).powi(2) + (o.y - ry).powi(2)).sqrt() < 1e-9);
            assert!(matched, "rotated mic ({rx},{ry}) has no partner");
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = make_underbrink(UnderbrinkParams {
            na: 4,
            nm: 4,
            r1: 0.1,
            r2: 0.5,
            nu: 5.0 * PI / 16.0,
        })
        .unwrap();
        let b = make_underbrink(UnderbrinkParams {
            na: 4,
            nm: 4,
            r1: 0.1,
            r2: 0.5,
            nu: 5.0 * PI / 16.0,
        })
        .unwrap();
        for (ma, mb) in a.mics().iter().zip(b.mics()) {
            assert_eq!(ma.x.to_bits(), mb.x.to_bits());
            assert_eq!(ma.y.to_bits(), mb.y.to_bits());
        }
    }

    #[test]
    fn layout_json_round_trip() {
        let layout = make_equi_area(EquiAreaParams { n: 16, n_or: 11, r: 0.5 }).unwrap();
        let text = layout.to_json();
        assert!(text.contains("\"format\": \"arraybeam/v1\""));
        assert!(text.contains("\"design\": \"equi_area\""));
        let back = ArrayLayout::from_json(&text).unwrap();
        assert_eq!(layout, back);
        for (a, b) in layout.mics().iter().zip(back.mics()) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
        }
    }

    #[test]
    fn custom_layout_rejects_coincident_mics() {
        let mics = vec![MicPosition::new(0.0, 0.0), MicPosition::new(0.0, 5e-10)];
        assert!(matches!(ArrayLayout::custom(mics), Err(Error::Geometry(_))));
    }
}
