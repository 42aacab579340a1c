//! Discretized source fields: the 1-D azimuth sweep, far-field hemispherical
//! dome and near-field disk.
//!
//! All grids use cell-centered (midpoint) nodes. The requested step is
//! adjusted to the nearest value that tiles the domain exactly, so a uniform
//! integrand averages to exactly 1 at any resolution.

use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};
use crate::propagation::{dome_direction, SourcePoint};

/// Midpoint nodes of `n` equal cells spanning [-pi/2, pi/2].
fn midpoint_angles(n: usize) -> Vec<f64> {
    let h = PI / n as f64;
    (0..n).map(|i| -PI / 2.0 + (i as f64 + 0.5) * h).collect()
}

/// Uniform azimuth sweep over [-pi/2, pi/2] for the 1-D model.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularGrid1D {
    step: f64,
    thetas: Vec<f64>,
}

impl AngularGrid1D {
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }
}

/// Midpoint-rule nodes over theta in [-pi/2, pi/2]; node count round(pi/step).
pub fn sweep_1d(theta_step: f64) -> Result<AngularGrid1D> {
    if !(theta_step > 0.0) || !theta_step.is_finite() {
        return Err(Error::parameter("theta step must be positive"));
    }
    if theta_step > PI / 2.0 {
        return Err(Error::parameter("theta step must not exceed pi/2"));
    }
    let n = (PI / theta_step).round().max(2.0) as usize;
    Ok(AngularGrid1D { step: PI / n as f64, thetas: midpoint_angles(n) })
}

/// Far-field dome: a rectangular midpoint lattice in (alpha, beta) over
/// [-pi/2, pi/2]^2, each node mapped to a point source at `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct DomeGrid {
    alpha_step: f64,
    beta_step: f64,
    radius: f64,
    alphas: Vec<f64>,
    betas: Vec<f64>,
    points: Vec<SourcePoint>,
}

impl DomeGrid {
    pub fn alpha_step(&self) -> f64 {
        self.alpha_step
    }

    pub fn beta_step(&self) -> f64 {
        self.beta_step
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// Node (alpha, beta) pairs in row-major order (alpha outer).
    pub fn node_angles(&self, idx: usize) -> (f64, f64) {
        let nb = self.betas.len();
        (self.alphas[idx / nb], self.betas[idx % nb])
    }

    pub fn points(&self) -> &[SourcePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Build the dome lattice. The paper's reference radius is 100 m.
pub fn dome_grid(alpha_step: f64, beta_step: f64, radius: f64) -> Result<DomeGrid> {
    for (name, step) in [("alpha", alpha_step), ("beta", beta_step)] {
        if !(step > 0.0) || !step.is_finite() || step > PI / 2.0 {
            return Err(Error::parameter(format!("{name} step must lie in (0, pi/2]")));
        }
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::parameter("dome radius must be positive"));
    }
    let na = (PI / alpha_step).round().max(2.0) as usize;
    let nb = (PI / beta_step).round().max(2.0) as usize;
    let alphas = midpoint_angles(na);
    let betas = midpoint_angles(nb);
    let mut points = Vec::with_capacity(na * nb);
    for &a in &alphas {
        for &b in &betas {
            let u = dome_direction(a, b);
            points.push(SourcePoint::new(radius * u[0], radius * u[1], radius * u[2]));
        }
    }
    Ok(DomeGrid {
        alpha_step: PI / na as f64,
        beta_step: PI / nb as f64,
        radius,
        alphas,
        betas,
        points,
    })
}

/// How the near-field disk is discretized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskSampling {
    /// Cell-centered cartesian lattice with pitch ds, clipped to the disk
    /// (the literal reading of the disk integral).
    Cartesian,
    /// Midpoint lattice in (r, phi) with uniform weights: dr = ds and the
    /// rim arc pitch ~ ds. This is the sampling that reproduces the paper's
    /// near-field results.
    Polar,
}

impl DiskSampling {
    pub fn name(&self) -> &'static str {
        match self {
            DiskSampling::Cartesian => "cartesian",
            DiskSampling::Polar => "polar",
        }
    }
}

/// Near-field source disk of radius `rs` at height `hs` above the array.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskGrid {
    rs: f64,
    hs: f64,
    ds: f64,
    sampling: DiskSampling,
    points: Vec<SourcePoint>,
    /// Lattice index of each retained point, for connectivity queries:
    /// cartesian -> (ix, iy); polar -> (ir, iphi).
    lattice: Vec<(i64, i64)>,
    /// Lattice extents: cartesian -> cells per axis; polar -> (nr, nphi).
    dims: (usize, usize),
}

impl DiskGrid {
    pub fn rs(&self) -> f64 {
        self.rs
    }

    pub fn hs(&self) -> f64 {
        self.hs
    }

    pub fn ds(&self) -> f64 {
        self.ds
    }

    pub fn sampling(&self) -> DiskSampling {
        self.sampling
    }

    pub fn points(&self) -> &[SourcePoint] {
        &self.points
    }

    pub fn lattice(&self) -> &[(i64, i64)] {
        &self.lattice
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Cartesian disk lattice per the printed integral: cell centers at
/// ((i+0.5) ds, (j+0.5) ds) with x^2 + y^2 <= Rs^2.
pub fn disk_grid(rs: f64, hs: f64, ds: f64) -> Result<DiskGrid> {
    validate_disk_params(rs, hs, ds)?;
    let k = (rs / ds).ceil() as i64;
    let mut points = Vec::new();
    let mut lattice = Vec::new();
    for i in -k..k {
        for j in -k..k {
            let x = (i as f64 + 0.5) * ds;
            let y = (j as f64 + 0.5) * ds;
            if x * x + y * y <= rs * rs {
                points.push(SourcePoint::new(x, y, hs));
                lattice.push((i, j));
            }
        }
    }
    if points.len() < 4 {
        return Err(Error::parameter("ds too coarse: fewer than 4 cells in the disk"));
    }
    Ok(DiskGrid {
        rs,
        hs,
        ds,
        sampling: DiskSampling::Cartesian,
        points,
        lattice,
        dims: (2 * k as usize, 2 * k as usize),
    })
}

/// Polar disk lattice: nr = round(Rs/ds) radial cells, nphi = round(2 pi Rs / ds)
/// angular cells, nodes at cell centers, uniform weights.
pub fn disk_grid_polar(rs: f64, hs: f64, ds: f64) -> Result<DiskGrid> {
    validate_disk_params(rs, hs, ds)?;
    let nr = (rs / ds).round().max(2.0) as usize;
    let nphi = (2.0 * PI * rs / ds).round().max(4.0) as usize;
    let dr = rs / nr as f64;
    let dphi = 2.0 * PI / nphi as f64;
    let mut points = Vec::with_capacity(nr * nphi);
    let mut lattice = Vec::with_capacity(nr * nphi);
    for a in 0..nr {
        let r = (a as f64 + 0.5) * dr;
        for b in 0..nphi {
            let phi = (b as f64 + 0.5) * dphi;
            points.push(SourcePoint::new(r * phi.cos(), r * phi.sin(), hs));
            lattice.push((a as i64, b as i64));
        }
    }
    Ok(DiskGrid {
        rs,
        hs,
        ds,
        sampling: DiskSampling::Polar,
        points,
        lattice,
        dims: (nr, nphi),
    })
}

fn validate_disk_params(rs: f64, hs: f64, ds: f64) -> Result<()> {
    if !(rs > 0.0 && rs.is_finite()) {
        return Err(Error::parameter("disk radius Rs must be positive"));
    }
    if !(hs > 0.0 && hs.is_finite()) {
        return Err(Error::parameter("source height Hs must be positive"));
    }
    if !(ds > 0.0 && ds.is_finite()) {
        return Err(Error::parameter("grid pitch ds must be positive"));
    }
    if ds >= rs {
        return Err(Error::parameter("ds must be smaller than Rs"));
    }
    Ok(())
}

/// One of the three source fields.
#[derive(Debug, Clone, PartialEq)]
pub enum SourceField {
    Sweep(AngularGrid1D),
    Dome(DomeGrid),
    Disk(DiskGrid),
}

impl SourceField {
    pub fn len(&self) -> usize {
        match self {
            SourceField::Sweep(g) => g.len(),
            SourceField::Dome(g) => g.len(),
            SourceField::Disk(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SourceField::Sweep(_) => "sweep1d",
            SourceField::Dome(_) => "dome",
            SourceField::Disk(_) => "disk",
        }
    }

    /// Grid steps in the field's own coordinates.
    pub fn steps(&self) -> Vec<f64> {
        match self {
            SourceField::Sweep(g) => vec![g.step()],
            SourceField::Dome(g) => vec![g.alpha_step(), g.beta_step()],
            SourceField::Disk(g) => vec![g.ds()],
        }
    }

    /// Quadrature weight of a single node (uniform per field).
    pub fn node_weight(&self) -> f64 {
        match self {
            SourceField::Sweep(g) => g.step(),
            SourceField::Dome(g) => g.alpha_step() * g.beta_step(),
            SourceField::Disk(g) => match g.sampling() {
                DiskSampling::Cartesian => g.ds() * g.ds(),
                DiskSampling::Polar => {
                    let (nr, nphi) = g.dims();
                    (g.rs() / nr as f64) * (2.0 * PI / nphi as f64)
                }
            },
        }
    }

    /// One node per row: coordinates plus quadrature weight.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "# arraybeam/v1")?;
        let weight = self.node_weight();
        match self {
            SourceField::Sweep(g) => {
                writeln!(w, "theta_rad,weight")?;
                for t in g.thetas() {
                    writeln!(w, "{t},{weight}")?;
                }
            }
            SourceField::Dome(g) => {
                writeln!(w, "alpha_rad,beta_rad,x_m,y_m,z_m,weight")?;
                for (i, p) in g.points().iter().enumerate() {
                    let (a, b) = g.node_angles(i);
                    writeln!(w, "{a},{b},{},{},{},{weight}", p.x, p.y, p.z)?;
                }
            }
            SourceField::Disk(g) => {
                writeln!(w, "x_m,y_m,z_m,weight")?;
                for p in g.points() {
                    writeln!(w, "{},{},{},{weight}", p.x, p.y, p.z)?;
                }
            }
        }
        Ok(())
    }
}
