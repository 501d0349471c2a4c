//! Correlation diagnostics built from the exact factorized ground state and
//! the mean-field reference.
//!
//! The exact wavefunction is psi(r) phi(R) in relative/center-of-mass
//! coordinates. One-particle densities in the original coordinates follow
//! from a back transformation: a radial integral over the relative function
//! against an angular kernel that is integrated in closed form (the
//! spherical average of the center-of-mass Gaussian). The kernel is
//! evaluated in a cancellation-free form, so the transform stays stable even
//! when the Gaussian factors individually underflow.
//!
//! From the densities and the relative solution everything else follows:
//! conditional densities and correlation hills with their zero-sum rule,
//! effective correlation radii, intracule distance distributions and
//! moments, the classical Coulomb energy of the two clouds, and the
//! reference-independent versus reference-dependent correlation energies
//! with the five-term decomposition of the latter.

use std::f64::consts::PI;

use crate::mchf::{hf_density_mixture, hf_intracule_mixture, ScfResult};
use crate::model::{com_ground, EnergyComponents, Particle, SystemParams};
use crate::numerics::{find_root, interp_cubic_uniform, simpson_uniform, trapezoid_uniform};
use crate::radial::RadialSolution;
use crate::{Error, Result};

/// Spherically symmetric one-particle density rho(r) on a uniform grid
/// starting at r = 0.
#[derive(Debug, Clone)]
pub struct RadialDensity {
    pub r: Vec<f64>,
    pub rho: Vec<f64>,
    pub particle: Particle,
}

impl RadialDensity {
    pub fn spacing(&self) -> f64 {
        if self.r.len() > 1 { self.r[1] - self.r[0] } else { 0.0 }
    }

    /// int rho 4 pi r^2 dr over the tabulated range.
    pub fn norm(&self) -> f64 {
        let vals: Vec<f64> = self
            .r
            .iter()
            .zip(&self.rho)
            .map(|(&r, &p)| 4.0 * PI * r * r * p)
            .collect();
        simpson_uniform(&vals, self.spacing())
    }

    pub fn at_origin(&self) -> f64 {
        self.rho[0]
    }

    pub fn max(&self) -> f64 {
        self.rho.iter().fold(f64::NEG_INFINITY, |a, &v| a.max(v))
    }
}

/// Provenance of a tabulated distance distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntraculeSource {
    Exact,
    Uncorrelated,
    AnalyticHydrogen,
    AnalyticOscillator,
}

/// Radial distribution function D(r) of the electron-PCP distance.
#[derive(Debug, Clone)]
pub struct IntraculeRdf {
    pub r: Vec<f64>,
    pub d: Vec<f64>,
    pub source: IntraculeSource,
}

impl IntraculeRdf {
    pub fn spacing(&self) -> f64 {
        if self.r.len() > 1 { self.r[1] - self.r[0] } else { 0.0 }
    }

    pub fn norm(&self) -> f64 {
        trapezoid_uniform(&self.d, self.spacing())
    }
}

/// Deviation of a conditional density from the one-particle density, for a
/// reference particle of the opposite kind fixed at the trap center.
#[derive(Debug, Clone)]
pub struct CorrelationHill {
    pub r: Vec<f64>,
    pub hill: Vec<f64>,
    pub particle: Particle,
}

impl CorrelationHill {
    pub fn spacing(&self) -> f64 {
        self.r[1] - self.r[0]
    }

    /// int hill 4 pi r^2 dr; zero in exact arithmetic.
    pub fn sum_rule(&self) -> f64 {
        let vals: Vec<f64> = self
            .r
            .iter()
            .zip(&self.hill)
            .map(|(&r, &v)| 4.0 * PI * r * r * v)
            .collect();
        simpson_uniform(&vals, self.spacing())
    }
}

/// Grid controls for the density back-transform.
#[derive(Debug, Clone, Copy)]
pub struct DensityOptions {
    /// Output intervals (the grid has points + 1 nodes including r = 0).
    pub points: usize,
    /// Outer radius in units of the particle's rms radius.
    pub support_factor: f64,
    /// Automatic retries (wider box, finer source sampling) before a
    /// normalization failure becomes an error.
    pub max_retries: usize,
}

impl Default for DensityOptions {
    fn default() -> Self {
        Self { points: 2000, support_factor: 8.0, max_retries: 3 }
    }
}

/// Precomputed back-transform for one particle's density:
/// rho(r) = (1/2) (Mw/pi)^(3/2) int u(s)^2 K(r, s) ds, with the angular
/// integral of the center-of-mass Gaussian folded into K analytically.
struct BackTransform {
    /// strided source nodes and normalized weights u^2 H
    s: Vec<f64>,
    w: Vec<f64>,
    prefactor: f64,
    /// sqrt(w/M)
    c: f64,
    total_mass: f64,
    /// kernel mass factor: m for the electron, 1 for the PCP
    b: f64,
}

impl BackTransform {
    fn new(sol: &RadialSolution, params: &SystemParams, which: Particle, oversample: f64) -> Self {
        let m = params.m_pcp();
        let big_m = params.total_mass();
        let w = params.omega();
        let b = match which {
            Particle::Electron => m,
            Particle::Pcp => 1.0,
        };
        // Source resolution: resolve both the relative function and the
        // kernel's Gaussian ridge of width sqrt(M/w)/b.
        let mass = sol.mass;
        let mut scale = f64::INFINITY;
        if sol.potential.coulomb > 0.0 {
            scale = scale.min(1.0 / (mass * sol.potential.coulomb));
        }
        if sol.potential.harmonic > 0.0 {
            scale = scale.min(1.0 / (mass * (sol.potential.harmonic / mass).sqrt()).sqrt());
        }
        let ridge = (big_m / w).sqrt() / b;
        let target = (scale / 40.0).min(ridge / 3.5) / oversample;
        let h = sol.grid.spacing();
        let stride = ((target / h).floor() as usize).max(1);

        // Samples on the sub-lattice s = j * stride * h, which passes through
        // the origin where u^2 and its slope vanish; an off-lattice start
        // would leave an O(H^2 h) boundary error in the Riemann sum.
        let max_u = sol.max_abs_u();
        let mut cut = sol.u.len();
        while cut > 1 && sol.u[cut - 1].abs() <= 1e-9 * max_u {
            cut -= 1;
        }
        let mut s = Vec::new();
        let mut weights = Vec::new();
        let mut idx = stride - 1;
        while idx < cut {
            s.push((idx + 1) as f64 * h);
            weights.push(sol.u[idx] * sol.u[idx]);
            idx += stride;
        }
        // Normalize so the weights carry exactly the solver's unit norm.
        let total: f64 = weights.iter().sum();
        for v in weights.iter_mut() {
            *v /= total;
        }
        Self {
            s,
            w: weights,
            prefactor: 0.5 * (big_m * w / PI).powf(1.5),
            c: (w / big_m).sqrt(),
            total_mass: big_m,
            b,
        }
    }

    fn density_at(&self, r: f64) -> f64 {
        let y = self.c * self.total_mass * r;
        let mut acc = 0.0;
        for (&s, &w) in self.s.iter().zip(&self.w) {
            let z = self.c * self.b * s;
            let g = -(y - z) * (y - z);
            let x = 2.0 * y * z;
            // K = e^{-(y-z)^2} (1 - e^{-4yz}) / (2yz), finite as x -> 0.
            let k = if x > 1e-12 {
                g.exp() * (-(-2.0 * x).exp_m1()) / x
            } else {
                2.0 * g.exp()
            };
            acc += w * k;
        }
        self.prefactor * acc
    }

    /// rms radius of this particle in the original coordinates.
    fn rms(&self, sol: &RadialSolution, params: &SystemParams) -> f64 {
        let com = com_ground(params);
        let ratio = self.b / params.total_mass();
        (com.mean_r_sq() + ratio * ratio * sol.obs.r_sq).sqrt()
    }
}

/// One-particle density in the original coordinates by back transformation.
///
/// The output box spans `support_factor` rms radii; if the tabulated norm
/// misses unity by more than 1e-7 the box is widened and the source grid
/// refined before giving up.
pub fn exact_one_density(
    sol: &RadialSolution,
    params: &SystemParams,
    which: Particle,
    opts: &DensityOptions,
) -> Result<RadialDensity> {
    let mut factor = opts.support_factor;
    let mut oversample = 1.0;
    let mut last_norm = f64::NAN;
    for _ in 0..=opts.max_retries {
        let tf = BackTransform::new(sol, params, which, oversample);
        let r_out = factor * tf.rms(sol, params);
        let n = opts.points;
        let h = r_out / n as f64;
        let r: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
        let rho: Vec<f64> = r.iter().map(|&x| tf.density_at(x)).collect();
        let dens = RadialDensity { r, rho, particle: which };
        last_norm = dens.norm();
        if (last_norm - 1.0).abs() < 1e-7 {
            return Ok(dens);
        }
        factor *= 1.4;
        oversample *= 2.0;
    }
    Err(Error::Numerics(format!(
        "one-particle density norm stalled at {last_norm:.9} for the {}; \
         a denser transform grid is needed",
        which.label()
    )))
}

/// Density value at one radius (single-point back transform).
pub fn exact_density_at(
    sol: &RadialSolution,
    params: &SystemParams,
    which: Particle,
    r: f64,
) -> f64 {
    BackTransform::new(sol, params, which, 1.0).density_at(r)
}

/// Exact distance distribution D(r) = u(r)^2, tabulated on a thinned copy of
/// the solver grid (the factorized ground state needs no quadrature here).
/// The table starts at r = 0 and stays on the sub-lattice of solver nodes.
pub fn exact_intracule(sol: &RadialSolution) -> IntraculeRdf {
    let h = sol.grid.spacing();
    let max_u = sol.max_abs_u();
    let mut cut = sol.u.len();
    while cut > 1 && sol.u[cut - 1].abs() <= 1e-9 * max_u {
        cut -= 1;
    }
    let stride = (cut / 4000).max(1);
    let mut r = vec![0.0];
    let mut d = vec![0.0];
    let mut idx = stride - 1;
    while idx < cut {
        r.push((idx + 1) as f64 * h);
        d.push(sol.u[idx] * sol.u[idx]);
        idx += stride;
    }
    IntraculeRdf { r, d, source: IntraculeSource::Exact }
}

/// n-th moment int r^n D(r) dr of a tabulated distance distribution. The
/// r = 0 node contributes nothing for any n >= -1 since D ~ r^2 there.
pub fn intracule_moment(rdf: &IntraculeRdf, n: i32) -> f64 {
    let vals: Vec<f64> = rdf
        .r
        .iter()
        .zip(&rdf.d)
        .map(|(&r, &d)| if r == 0.0 { 0.0 } else { r.powi(n) * d })
        .collect();
    trapezoid_uniform(&vals, rdf.spacing())
}

/// Interaction expectation -int D(r)/r dr (D ~ r^2 keeps it finite).
pub fn v_ep_expectation(rdf: &IntraculeRdf) -> f64 {
    -intracule_moment(rdf, -1)
}

/// Hydrogen-like distance distribution 4 mu^3 r^2 e^{-2 mu r}.
pub fn analytic_hydrogen_rdf(params: &SystemParams, r: f64) -> f64 {
    let mu = params.reduced_mass();
    4.0 * mu.powi(3) * r * r * (-2.0 * mu * r).exp()
}

/// Oscillator distance distribution for the relative motion,
/// (4 (mu w)^{3/2} / sqrt(pi)) r^2 e^{-mu w r^2}, i.e. the squared reduced
/// radial function of the trap ground state.
pub fn analytic_oscillator_rdf(params: &SystemParams, r: f64) -> f64 {
    let a = params.reduced_mass() * params.omega();
    4.0 * a.powf(1.5) / PI.sqrt() * r * r * (-a * r * r).exp()
}

/// Pair density along the section with the *other* particle at the origin:
/// Gamma(r_e = r, r_pcp = 0) for `Particle::Electron` and
/// Gamma(r_e = 0, r_pcp = r) for `Particle::Pcp`.
pub fn pair_slice(sol: &RadialSolution, params: &SystemParams, which: Particle, r: f64) -> f64 {
    let com = com_ground(params);
    let scale = match which {
        Particle::Electron => 1.0 / params.total_mass(),
        Particle::Pcp => params.m_pcp() / params.total_mass(),
    };
    let v = sol.u_over_r().at(r);
    v * v / (4.0 * PI) * com.density(scale * r)
}

/// Correlation hill of `which` for the opposite particle fixed at the trap
/// center: Gamma(r; 0)/rho_other(0) - rho_which(r), on the density grid.
pub fn correlation_hill(
    sol: &RadialSolution,
    params: &SystemParams,
    which: Particle,
    opts: &DensityOptions,
) -> Result<CorrelationHill> {
    let dens = exact_one_density(sol, params, which, opts)?;
    let other = match which {
        Particle::Electron => Particle::Pcp,
        Particle::Pcp => Particle::Electron,
    };
    let other_at_origin = exact_density_at(sol, params, other, 0.0);
    if other_at_origin < 1e-300 {
        return Err(Error::Domain(format!(
            "reference {} density vanishes at the origin",
            other.label()
        )));
    }
    let com = com_ground(params);
    let scale = match which {
        Particle::Electron => 1.0 / params.total_mass(),
        Particle::Pcp => params.m_pcp() / params.total_mass(),
    };
    let interp = sol.u_over_r();
    let hill: Vec<f64> = dens
        .r
        .iter()
        .zip(&dens.rho)
        .map(|(&r, &rho)| {
            let v = interp.at(r);
            v * v / (4.0 * PI) * com.density(scale * r) / other_at_origin - rho
        })
        .collect();
    Ok(CorrelationHill { r: dens.r, hill, particle: which })
}

/// Effective correlation radius: first zero crossing of the hill.
pub fn correlation_radius(hill: &CorrelationHill) -> Result<f64> {
    if hill.hill[0] <= 0.0 {
        return Err(Error::NoCrossing(format!(
            "{} hill is not positive at the origin",
            hill.particle.label()
        )));
    }
    let h = hill.spacing();
    let cross = hill
        .hill
        .windows(2)
        .position(|w| w[0] >= 0.0 && w[1] < 0.0)
        .ok_or_else(|| {
            Error::NoCrossing(format!(
                "{} hill stays positive over the grid; extend the box",
                hill.particle.label()
            ))
        })?;
    let a = cross as f64 * h;
    let b = (cross + 1) as f64 * h;
    find_root(|r| interp_cubic_uniform(&hill.hill, h, r), a, b, 1e-14 * (1.0 + b))
}

/// Classical Coulomb interaction of the two normalized densities,
/// J = -int rho_e(r) Phi_p(r) 4 pi r^2 dr with Phi_p the shell potential of
/// the PCP cloud.
pub fn j_ep(rho_e: &RadialDensity, rho_p: &RadialDensity) -> Result<f64> {
    for d in [rho_e, rho_p] {
        let n = d.norm();
        if (n - 1.0).abs() > 1e-4 {
            return Err(Error::Domain(format!(
                "{} density is not normalized (integral {n:.6})",
                d.particle.label()
            )));
        }
    }
    let hp = rho_p.spacing();
    let np = rho_p.r.len();
    // cumulative charge Q(r) and outer weight W(r) = int_r^inf rho 4 pi s ds
    let mut q = vec![0.0; np];
    let mut w_in = vec![0.0; np];
    for i in 1..np {
        let s0 = rho_p.r[i - 1];
        let s1 = rho_p.r[i];
        let f0 = 4.0 * PI * s0 * s0 * rho_p.rho[i - 1];
        let f1 = 4.0 * PI * s1 * s1 * rho_p.rho[i];
        q[i] = q[i - 1] + 0.5 * (f0 + f1) * hp;
        let g0 = 4.0 * PI * s0 * rho_p.rho[i - 1];
        let g1 = 4.0 * PI * s1 * rho_p.rho[i];
        w_in[i] = w_in[i - 1] + 0.5 * (g0 + g1) * hp;
    }
    let w_total = w_in[np - 1];
    let phi: Vec<f64> = (0..np)
        .map(|i| {
            let tail = w_total - w_in[i];
            if i == 0 { tail } else { q[i] / rho_p.r[i] + tail }
        })
        .collect();
    let q_total = q[np - 1];

    let r_p_max = rho_p.r[np - 1];
    let he = rho_e.spacing();
    let vals: Vec<f64> = rho_e
        .r
        .iter()
        .zip(&rho_e.rho)
        .map(|(&r, &p)| {
            let phi_r = if r <= r_p_max {
                interp_cubic_uniform(&phi, hp, r)
            } else {
                q_total / r
            };
            4.0 * PI * r * r * p * phi_r
        })
        .collect();
    Ok(-simpson_uniform(&vals, he))
}

/// Exact expectation values of the five Hamiltonian terms, from the relative
/// solution plus the analytic center-of-mass Gaussian. The coordinate-change
/// identities make every term a combination of int (u')^2 dr, <r^2>, <1/r>
/// and the closed-form center-of-mass moments; the five terms sum to the
/// total energy identically.
pub fn exact_components(sol: &RadialSolution, params: &SystemParams) -> EnergyComponents {
    let com = com_ground(params);
    let m = params.m_pcp();
    let big_m = params.total_mass();
    let w = params.omega();
    let g = sol.obs.grad_sq;
    let gphi = com.grad_norm_sq();
    let r2 = sol.obs.r_sq;
    let big_r2 = com.mean_r_sq();
    EnergyComponents {
        t_e: 0.5 * g + gphi / (2.0 * big_m * big_m),
        t_pcp: g / (2.0 * m) + m * gphi / (2.0 * big_m * big_m),
        v_ext_e: 0.5 * w * w * (big_r2 + (m / big_m) * (m / big_m) * r2),
        v_ext_pcp: 0.5 * m * w * w * (big_r2 + r2 / (big_m * big_m)),
        v_ep: -sol.obs.inv_r,
    }
}

/// Scaled density difference (rho_hf - rho_exact) / max(rho_exact) on the
/// exact grid; the mean-field curve is resampled if tabulated elsewhere.
pub fn sdd(rho_hf: &RadialDensity, rho_exact: &RadialDensity) -> Vec<f64> {
    let peak = rho_exact.max();
    let same_grid = rho_hf.r.len() == rho_exact.r.len()
        && rho_hf
            .r
            .iter()
            .zip(&rho_exact.r)
            .all(|(&a, &b)| a == b);
    rho_exact
        .r
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let hf = if same_grid {
                rho_hf.rho[i]
            } else {
                interp_cubic_uniform(&rho_hf.rho, rho_hf.spacing(), r)
            };
            (hf - rho_exact.rho[i]) / peak
        })
        .collect()
}

/// Difference of the exact and uncorrelated distance distributions,
/// Delta D(r) = u(r)^2 - D_uncorr(r), tabulated out to whichever support is
/// wider (the mean-field cloud usually reaches further than the exact one).
pub fn delta_intracule(sol: &RadialSolution, scf: &ScfResult) -> IntraculeRdf {
    let exact = exact_intracule(sol);
    let mix = hf_intracule_mixture(scf);
    let h = exact.spacing();
    let gamma_min = mix
        .terms()
        .iter()
        .map(|&(_, g)| g)
        .fold(f64::INFINITY, f64::min);
    let r_unc = (45.0 / gamma_min).sqrt();
    let n_total = ((r_unc / h).ceil() as usize + 1).max(exact.r.len());
    let mut r = Vec::with_capacity(n_total);
    let mut d = Vec::with_capacity(n_total);
    for j in 0..n_total {
        let rj = j as f64 * h;
        let de = if j < exact.r.len() { exact.d[j] } else { 0.0 };
        r.push(rj);
        d.push(de - 4.0 * PI * rj * rj * mix.eval(rj));
    }
    IntraculeRdf { r, d, source: IntraculeSource::Exact }
}

/// Everything Table-shaped in one bundle for a single parameter point.
#[derive(Debug, Clone)]
pub struct CorrelationReport {
    pub e_exact: f64,
    pub e_uncorr: f64,
    /// <V_ep>_exact - J_ep.
    pub e_corr_ref_indep: f64,
    /// E_exact - E_uncorr.
    pub e_corr_ref_dep: f64,
    /// Exact-minus-mean-field differences of the five components; their sum
    /// equals `e_corr_ref_dep` identically.
    pub deltas: EnergyComponents,
    pub exact: EnergyComponents,
    pub uncorr: EnergyComponents,
    pub j_ep: f64,
    pub v_ep_exact: f64,
    pub radius_electron: f64,
    pub radius_pcp: f64,
    pub r_mean_exact: f64,
    pub sigma_sq_exact: f64,
    pub r_mean_uncorr: f64,
    pub sigma_sq_uncorr: f64,
}

/// Assembles the full correlation report for one parameter point from a
/// converged relative solution and mean-field result.
pub fn correlation_report(
    params: &SystemParams,
    sol: &RadialSolution,
    scf: &ScfResult,
    opts: &DensityOptions,
) -> Result<CorrelationReport> {
    let w = params.omega();
    let e_exact = sol.energy + 1.5 * w;
    let exact = exact_components(sol, params);
    let uncorr = scf.components;

    let rho_e = exact_one_density(sol, params, Particle::Electron, opts)?;
    let rho_p = exact_one_density(sol, params, Particle::Pcp, opts)?;
    let j = j_ep(&rho_e, &rho_p)?;

    let hill_e = correlation_hill(sol, params, Particle::Electron, opts)?;
    let hill_p = correlation_hill(sol, params, Particle::Pcp, opts)?;

    let mix = hf_intracule_mixture(scf);
    let r_mean_uncorr = mix.radial_moment(1);
    let r2_uncorr = mix.radial_moment(2);

    Ok(CorrelationReport {
        e_exact,
        e_uncorr: scf.energy,
        e_corr_ref_indep: exact.v_ep - j,
        e_corr_ref_dep: e_exact - scf.energy,
        deltas: exact.minus(&uncorr),
        exact,
        uncorr,
        j_ep: j,
        v_ep_exact: exact.v_ep,
        radius_electron: correlation_radius(&hill_e)?,
        radius_pcp: correlation_radius(&hill_p)?,
        r_mean_exact: sol.obs.r_mean,
        sigma_sq_exact: sol.obs.r_sq - sol.obs.r_mean * sol.obs.r_mean,
        r_mean_uncorr,
        sigma_sq_uncorr: r2_uncorr - r_mean_uncorr * r_mean_uncorr,
    })
}

/// One-particle density of the mean-field state on the given grid (thin
/// wrapper pairing [`crate::mchf::hf_density_mixture`] with a tabulation).
pub fn hf_density_on(scf: &ScfResult, which: Particle, radii: &[f64]) -> RadialDensity {
    let mix = hf_density_mixture(scf, which);
    RadialDensity {
        r: radii.to_vec(),
        rho: radii.iter().map(|&r| mix.eval(r)).collect(),
        particle: which,
    }
}
