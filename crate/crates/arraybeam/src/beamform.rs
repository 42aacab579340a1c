//! Beamformer output amplitudes.
//!
//! The paper beamforms unit-amplitude sinusoids and reads off the amplitude
//! of the result. For a mean of phase-shifted unit sinusoids that amplitude
//! is exactly the phasor-mean magnitude, so the production path is the
//! phasor form; a sampled time-domain oracle lives in the tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::ArrayLayout;
use crate::propagation::{
    plane_wave_mic_phases, point_source_mic_phases, steering_mic_phases, Medium, PhaseMatrix,
    PlaneWaveDirection, SourcePoint, SteeringTarget, Tone,
};

/// Which summation scheme to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BeamformerKind {
    /// O(N): each mic shifted relative to one reference (Eq 3-4).
    DelayAndSum,
    /// O(N^2): all pairwise shifts (Eq 11/13), evaluated via the squared
    /// phasor identity.
    Conventional,
}

impl BeamformerKind {
    pub fn name(&self) -> &'static str {
        match self {
            BeamformerKind::DelayAndSum => "das",
            BeamformerKind::Conventional => "conventional",
        }
    }
}

/// Tolerance for the antisymmetry contract check on explicit matrices.
const ANTISYMMETRY_TOL: f64 = 1e-9;

/// Amplitude of the mean of N unit sinusoids with phase offsets `psi`:
/// |sum_i exp(i psi_i)| / N.
pub fn das_amplitude(per_mic_phase_offsets: &[f64]) -> Result<f64> {
    if per_mic_phase_offsets.is_empty() {
        return Err(Error::contract("delay-and-sum needs at least one microphone"));
    }
    let n = per_mic_phase_offsets.len() as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for &psi in per_mic_phase_offsets {
        let (s, c) = psi.sin_cos();
        re += c;
        im += s;
    }
    Ok(re.hypot(im) / n)
}

/// Amplitude of (1/N^2) sum_ij sin(x + delta_ij) for an antisymmetric offset
/// matrix: |sum_ij exp(i delta_ij)| / N^2. When delta_ij = psi_i - psi_j this
/// equals das_amplitude(psi)^2.
pub fn conventional_amplitude(offsets: &PhaseMatrix) -> Result<f64> {
    let defect = offsets.max_antisymmetry_defect();
    if defect > ANTISYMMETRY_TOL {
        return Err(Error::contract(format!(
            "offset matrix is not antisymmetric (defect {defect:.3e})"
        )));
    }
    let n = offsets.n();
    let (mut re, mut im) = (0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let (s, c) = offsets.get(i, j).sin_cos();
            re += c;
            im += s;
        }
    }
    Ok(re.hypot(im) / (n * n) as f64)
}

/// Conventional amplitude straight from per-mic offsets via the identity.
pub fn conventional_amplitude_from_mic_offsets(offsets: &[f64]) -> Result<f64> {
    let a = das_amplitude(offsets)?;
    Ok(a * a)
}

/// The beamformed amplitude for sound from the steering target itself is 1
/// for either scheme; responses are normalized by it.
pub fn signal_amplitude(_kind: BeamformerKind) -> f64 {
    1.0
}

/// A noise source whose response is being evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseSource {
    /// 1-D plane wave with azimuth theta (line array model).
    PlaneWave1D(PlaneWaveDirection),
    /// A point source anywhere off the array plane.
    Point(SourcePoint),
    /// Analytic far-field plane wave from direction (alpha, beta).
    FarFieldDirection { alpha: f64, beta: f64 },
}

/// Per-mic propagation phases for a noise source.
fn noise_mic_phases(
    layout: &ArrayLayout,
    source: &NoiseSource,
    tone: Tone,
    medium: Medium,
) -> Result<Vec<f64>> {
    match source {
        NoiseSource::PlaneWave1D(dir) => {
            let k_sin = tone.wavenumber(medium) * dir.theta().sin();
            let x0 = layout.mics()[0].x;
            Ok(layout.mics().iter().map(|m| k_sin * (m.x - x0)).collect())
        }
        NoiseSource::Point(p) => point_source_mic_phases(layout, *p, tone, medium),
        NoiseSource::FarFieldDirection { alpha, beta } => {
            Ok(plane_wave_mic_phases(layout, *alpha, *beta, tone, medium))
        }
    }
}

fn dimensionality_ok(target: &SteeringTarget, source: &NoiseSource) -> bool {
    matches!(
        (target, source),
        (SteeringTarget::Linear { .. }, NoiseSource::PlaneWave1D(_))
            | (SteeringTarget::FarField { .. }, NoiseSource::Point(_))
            | (SteeringTarget::FarField { .. }, NoiseSource::FarFieldDirection { .. })
            | (SteeringTarget::NearField(_), NoiseSource::Point(_))
    )
}

/// Normalized response |v_noise| / |v_signal| of the array steered at
/// `target` to sound arriving from `source`.
pub fn response_at(
    layout: &ArrayLayout,
    kind: BeamformerKind,
    target: SteeringTarget,
    source: &NoiseSource,
    tone: Tone,
    medium: Medium,
) -> Result<f64> {
    if !dimensionality_ok(&target, source) {
        return Err(Error::contract(format!(
            "steering target {} does not match the noise source dimensionality",
            target.describe()
        )));
    }
    let prop = noise_mic_phases(layout, source, tone, medium)?;
    let steer = steering_mic_phases(layout, target, tone, medium)?;
    let offsets: Vec<f64> = prop.iter().zip(&steer).map(|(p, s)| p - s).collect();
    match kind {
        BeamformerKind::DelayAndSum => das_amplitude(&offsets),
        BeamformerKind::Conventional => conventional_amplitude_from_mic_offsets(&offsets),
    }
}
