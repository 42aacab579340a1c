//! Phase differences for plane-wave and point-source propagation, plus the
//! steering phases for a desired reception target.
//!
//! Phases are kept unwrapped; every consumer downstream is 2-pi periodic.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::ArrayLayout;

/// Propagation medium, characterised by its speed of sound in m/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    c: f64,
}

impl Medium {
    pub fn new(c: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::parameter("speed of sound must be positive"));
        }
        Ok(Medium { c })
    }

    /// Air at the paper's reference conditions.
    pub fn air() -> Self {
        Medium { c: 343.0 }
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// A pure tone of frequency f in Hz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tone {
    f: f64,
}

impl Tone {
    pub fn new(f: f64) -> Result<Self> {
        if !(f > 0.0) || !f.is_finite() {
            return Err(Error::parameter("frequency must be positive"));
        }
        Ok(Tone { f })
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    /// 2 pi f / c, the phase accumulated per meter of path difference.
    pub fn wavenumber(&self, medium: Medium) -> f64 {
        2.0 * PI * self.f / medium.c()
    }
}

/// Plane-wave azimuth relative to broadside of a line of microphones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveDirection {
    theta: f64,
}

impl PlaneWaveDirection {
    pub fn new(theta: f64) -> Result<Self> {
        if !(-PI / 2.0..=PI / 2.0).contains(&theta) {
            return Err(Error::parameter("theta must lie in [-pi/2, pi/2]"));
        }
        Ok(PlaneWaveDirection { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// A point sound source position in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SourcePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SourcePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        SourcePoint { x, y, z }
    }
}

/// Where reception is desired from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SteeringTarget {
    /// Far-field direction (alpha, beta) in radians; the plane-wave limit.
    FarField { alpha: f64, beta: f64 },
    /// A finite point, e.g. (0, 0, H_s) above the array.
    NearField(SourcePoint),
    /// 1-D linear-array azimuth theta_o.
    Linear { theta_o: f64 },
}

impl SteeringTarget {
    pub fn describe(&self) -> String {
        match self {
            SteeringTarget::FarField { alpha, beta } => {
                format!("far_field(alpha={alpha}, beta={beta})")
            }
            SteeringTarget::NearField(p) => format!("near_field({}, {}, {})", p.x, p.y, p.z),
            SteeringTarget::Linear { theta_o } => format!("linear(theta_o={theta_o})"),
        }
    }
}

/// Unit vector for a far-field direction (alpha, beta): alpha rotates the
/// on-axis direction toward +x, beta toward +y. Broadside is (0, 0) -> +z.
pub fn dome_direction(alpha: f64, beta: f64) -> [f64; 3] {
    [alpha.sin() * beta.cos(), beta.sin(), alpha.cos() * beta.cos()]
}

/// N x N matrix of pairwise phase differences, entry (i, j) = phi_i - phi_j
/// built from per-microphone phases, hence antisymmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl PhaseMatrix {
    /// Build the pairwise matrix from per-microphone phases.
    pub fn from_per_mic(per_mic: &[f64]) -> Self {
        let n = per_mic.len();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = per_mic[i] - per_mic[j];
            }
        }
        PhaseMatrix { n, data }
    }

    /// Build from explicit entries (row-major). Antisymmetry is the caller's
    /// responsibility; consumers check it.
    pub fn from_entries(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::contract("phase matrix data length must be n*n"));
        }
        Ok(PhaseMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn max_antisymmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                worst = worst.max((self.get(i, j) + self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Subtract another matrix entry-wise (propagation minus steering).
    pub fn minus(&self, other: &PhaseMatrix) -> Result<PhaseMatrix> {
        if self.n != other.n {
            return Err(Error::contract("phase matrix size mismatch"));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PhaseMatrix { n: self.n, data })
    }
}

/// Eq-1 phase for a uniform line: (i - 1) (2 pi f / c) d sin(theta), i 1-based.
pub fn linear_phase(i: usize, theta: f64, tone: Tone, medium: Medium, d: f64) -> f64 {
    assert!(i >= 1, "microphone index is 1-based");
    (i - 1) as f64 * tone.wavenumber(medium) * d * theta.sin()
}

/// Per-mic version of the above for i = 1..N.
pub fn linear_mic_phases(n: usize, theta: f64, tone: Tone, medium: Medium, d: f64) -> Vec<f64> {
    let kd_sin = tone.wavenumber(medium) * d * theta.sin();
    (0..n).map(|i| i as f64 * kd_sin).collect()
}

/// Pairwise 1-D phases: entry (i, j) = (i - j) (2 pi f / c) d sin(theta).
pub fn linear_pairwise_phases(
    theta: f64,
    tone: Tone,
    medium: Medium,
    d: f64,
    n: usize,
) -> PhaseMatrix {
    assert!(n >= 2, "pairwise phases need at least two microphones");
    PhaseMatrix::from_per_mic(&linear_mic_phases(n, theta, tone, medium, d))
}

/// Per-mic path phases k * l_i for a point source; errors if the source
/// coincides with a microphone.
pub fn point_source_mic_phases(
    layout: &ArrayLayout,
    source: SourcePoint,
    tone: Tone,
    medium: Medium,
) -> Result<Vec<f64>> {
    let k = tone.wavenumber(medium);
    let mut phases = Vec::with_capacity(layout.len());
    for (idx, m) in layout.mics().iter().enumerate() {
        let l = m.distance_to([source.x, source.y, source.z]);
        if l <= 0.0 {
            return Err(Error::geometry(format!(
                "source coincides with microphone {idx}"
            )));
        }
        phases.push(k * l);
    }
    Ok(phases)
}

/// Eq-10 pairwise matrix: entry (i, j) = (2 pi f / c)(l_i - l_j).
pub fn point_source_phases(
    layout: &ArrayLayout,
    source: SourcePoint,
    tone: Tone,
    medium: Medium,
) -> Result<PhaseMatrix> {
    Ok(PhaseMatrix::from_per_mic(&point_source_mic_phases(
        layout, source, tone, medium,
    )?))
}

/// Per-mic plane-wave phases for a far-field direction: -k (p_i . u).
pub fn plane_wave_mic_phases(
    layout: &ArrayLayout,
    alpha: f64,
    beta: f64,
    tone: Tone,
    medium: Medium,
) -> Vec<f64> {
    let k = tone.wavenumber(medium);
    let u = dome_direction(alpha, beta);
    layout
        .mics()
        .iter()
        .map(|m| -k * (m.x * u[0] + m.y * u[1] + m.z * u[2]))
        .collect()
}

/// Per-mic steering phases for any target.
pub fn steering_mic_phases(
    layout: &ArrayLayout,
    target: SteeringTarget,
    tone: Tone,
    medium: Medium,
) -> Result<Vec<f64>> {
    match target {
        SteeringTarget::Linear { theta_o } => {
            // Reference is mic 1; only x-offsets matter for the 1-D model.
            let k_sin = tone.wavenumber(medium) * theta_o.sin();
            let x0 = layout.mics()[0].x;
            Ok(layout.mics().iter().map(|m| k_sin * (m.x - x0)).collect())
        }
        SteeringTarget::NearField(p) => point_source_mic_phases(layout, p, tone, medium),
        SteeringTarget::FarField { alpha, beta } => {
            Ok(plane_wave_mic_phases(layout, alpha, beta, tone, medium))
        }
    }
}

/// Pairwise steering phases (Eq 2 / Eq 11's phi_oij).
pub fn steering_phases(
    layout: &ArrayLayout,
    target: SteeringTarget,
    tone: Tone,
    medium: Medium,
) -> Result<PhaseMatrix> {
    Ok(PhaseMatrix::from_per_mic(&steering_mic_phases(
        layout, target, tone, medium,
    )?))
}
