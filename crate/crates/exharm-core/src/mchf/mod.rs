//! Two-component mean-field solver.
//!
//! The uncorrelated reference is the product state phi_e(r_e) phi_pcp(r_pcp)
//! with each orbital expanded in s-type Gaussians centered at the trap
//! origin. Alternating SCF solves one particle in the frozen density of the
//! other; each half-step is an exact minimization over that orbital, so the
//! energy is non-increasing by construction. Exponents can be taken from the
//! built-in reference sets, from a basis file, or re-optimized with the
//! simplex minimizer over log-exponents.

pub mod integrals;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use nalgebra::{DMatrix, DVector};

use crate::model::{EnergyComponents, Particle, SystemParams};
use crate::numerics::{minimize, SimplexOptions};
use crate::{Error, Result};

/// Ordered set of positive s-Gaussian exponents for one particle.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianBasis {
    exponents: Vec<f64>,
}

impl GaussianBasis {
    pub fn new(mut exponents: Vec<f64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Domain("basis must contain at least one exponent".into()));
        }
        for &a in &exponents {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::Domain(format!("basis exponent must be positive, got {a}")));
            }
        }
        exponents.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { exponents })
    }

    /// Geometric ladder center * ratio^(k - (n-1)/2), a standard starting
    /// guess for exponent optimization.
    pub fn even_tempered(center: f64, ratio: f64, n: usize) -> Result<Self> {
        if !(center > 0.0 && ratio > 1.0) || n == 0 {
            return Err(Error::Domain("even-tempered seed needs center > 0, ratio > 1, n > 0".into()));
        }
        let mid = (n as f64 - 1.0) / 2.0;
        Self::new((0..n).map(|k| center * ratio.powf(k as f64 - mid)).collect())
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }
}

/// SCF controls. Defaults follow the artifact-wide convergence targets:
/// energy to 1e-10 and density-matrix change to 1e-8, capped at 200 cycles.
#[derive(Debug, Clone, Copy)]
pub struct ScfOptions {
    pub energy_tol: f64,
    pub density_tol: f64,
    pub max_iterations: usize,
    /// Mixing factor applied only when a step raises the energy.
    pub damping: f64,
    /// Diagnostic switch: drop the inter-particle attraction entirely.
    pub include_attraction: bool,
}

impl Default for ScfOptions {
    fn default() -> Self {
        Self {
            energy_tol: 1e-10,
            density_tol: 1e-8,
            max_iterations: 200,
            damping: 0.5,
            include_attraction: true,
        }
    }
}

/// Converged mean-field state: orbital coefficients in their bases, total
/// energy, and the five component expectation values.
#[derive(Debug, Clone)]
pub struct ScfResult {
    pub basis_e: GaussianBasis,
    pub basis_p: GaussianBasis,
    pub coeff_e: Vec<f64>,
    pub coeff_p: Vec<f64>,
    pub energy: f64,
    pub components: EnergyComponents,
    pub converged: bool,
    pub iterations: usize,
    /// Total energy after every completed cycle.
    pub energy_trace: Vec<f64>,
}

struct OneBody {
    s: DMatrix<f64>,
    core: DMatrix<f64>,
    t: DMatrix<f64>,
    r2: DMatrix<f64>,
    ortho: DMatrix<f64>,
}

fn build_one_body(basis: &GaussianBasis, mass: f64, trap_k: f64) -> Result<OneBody> {
    let n = basis.len();
    let e = basis.exponents();
    let mut s = DMatrix::zeros(n, n);
    let mut t = DMatrix::zeros(n, n);
    let mut r2 = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            s[(i, j)] = integrals::overlap(e[i], e[j])?;
            t[(i, j)] = integrals::kinetic(e[i], e[j], mass)?;
            r2[(i, j)] = integrals::quadratic_moment(e[i], e[j])?;
        }
    }
    let eig = s.clone().symmetric_eigen();
    let mut min_idx = 0;
    for k in 1..n {
        if eig.eigenvalues[k] < eig.eigenvalues[min_idx] {
            min_idx = k;
        }
    }
    let lambda_min = eig.eigenvalues[min_idx];
    if lambda_min < 1e-10 {
        // Name the closest exponent pair; it is the one that collapsed the
        // metric.
        let mut pair = (e[0], e[0.min(n - 1)]);
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                let gap = (e[j] / e[i]).ln().abs();
                if gap < best {
                    best = gap;
                    pair = (e[i], e[j]);
                }
            }
        }
        return Err(Error::LinearDependence(format!(
            "overlap eigenvalue {lambda_min:.3e} below 1e-10; offending exponents {} and {}",
            pair.0, pair.1
        )));
    }
    let mut ortho = eig.eigenvectors.clone();
    for k in 0..n {
        let scale = 1.0 / eig.eigenvalues[k].sqrt();
        for i in 0..n {
            ortho[(i, k)] *= scale;
        }
    }
    let core = &t + &r2 * (0.5 * trap_k);
    Ok(OneBody { s, core, t, r2, ortho })
}

/// Lowest generalized eigenvector of F c = eps S c through the symmetric
/// orthogonalizer, normalized to c^T S c = 1 with a deterministic sign.
fn lowest_orbital(f: &DMatrix<f64>, ob: &OneBody) -> Vec<f64> {
    let fp = ob.ortho.transpose() * f * &ob.ortho;
    let eig = fp.symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut min_idx = 0;
    for k in 1..n {
        if eig.eigenvalues[k] < eig.eigenvalues[min_idx] {
            min_idx = k;
        }
    }
    let c = &ob.ortho * eig.eigenvectors.column(min_idx);
    let norm = (c.transpose() * &ob.s * &c)[(0, 0)].sqrt();
    let mut c: Vec<f64> = c.iter().map(|v| v / norm).collect();
    let mut imax = 0;
    for i in 1..c.len() {
        if c[i].abs() > c[imax].abs() {
            imax = i;
        }
    }
    if c[imax] < 0.0 {
        for v in c.iter_mut() {
            *v = -*v;
        }
    }
    c
}

/// Alternating SCF for the product ansatz.
pub fn scf(
    params: &SystemParams,
    basis_e: &GaussianBasis,
    basis_p: &GaussianBasis,
    opts: &ScfOptions,
) -> Result<ScfResult> {
    let w = params.omega();
    let m = params.m_pcp();
    let ob_e = build_one_body(basis_e, 1.0, w * w)?;
    let ob_p = build_one_body(basis_p, m, m * w * w)?;
    let ne = basis_e.len();
    let np = basis_p.len();

    // Attraction tensor I[(i,j),(k,l)], positive magnitudes.
    let mut eri = vec![0.0; ne * ne * np * np];
    if opts.include_attraction {
        let ee = basis_e.exponents();
        let pp = basis_p.exponents();
        for i in 0..ne {
            for j in 0..ne {
                for k in 0..np {
                    for l in 0..np {
                        eri[((i * ne + j) * np + k) * np + l] =
                            integrals::attraction_eri(ee[i], ee[j], pp[k], pp[l])?;
                    }
                }
            }
        }
    }
    let field_on_e = |cp: &[f64]| -> DMatrix<f64> {
        let mut wm = DMatrix::zeros(ne, ne);
        for i in 0..ne {
            for j in 0..ne {
                let mut acc = 0.0;
                for k in 0..np {
                    for l in 0..np {
                        acc += cp[k] * cp[l] * eri[((i * ne + j) * np + k) * np + l];
                    }
                }
                wm[(i, j)] = -acc;
            }
        }
        wm
    };
    let field_on_p = |ce: &[f64]| -> DMatrix<f64> {
        let mut wm = DMatrix::zeros(np, np);
        for k in 0..np {
            for l in 0..np {
                let mut acc = 0.0;
                for i in 0..ne {
                    for j in 0..ne {
                        acc += ce[i] * ce[j] * eri[((i * ne + j) * np + k) * np + l];
                    }
                }
                wm[(k, l)] = -acc;
            }
        }
        wm
    };

    let expect = |c: &[f64], mat: &DMatrix<f64>| -> f64 {
        let v = DVector::from_column_slice(c);
        (v.transpose() * mat * &v)[(0, 0)]
    };
    let vep_of = |ce: &[f64], cp: &[f64]| -> f64 {
        let mut acc = 0.0;
        for i in 0..ne {
            for j in 0..ne {
                let pe = ce[i] * ce[j];
                for k in 0..np {
                    for l in 0..np {
                        acc += pe * cp[k] * cp[l] * eri[((i * ne + j) * np + k) * np + l];
                    }
                }
            }
        }
        -acc
    };
    let components_of = |ce: &[f64], cp: &[f64]| -> EnergyComponents {
        EnergyComponents {
            t_e: expect(ce, &ob_e.t),
            t_pcp: expect(cp, &ob_p.t),
            v_ext_e: 0.5 * w * w * expect(ce, &ob_e.r2),
            v_ext_pcp: 0.5 * m * w * w * expect(cp, &ob_p.r2),
            v_ep: vep_of(ce, cp),
        }
    };

    // Trap-only start.
    let mut c_p = lowest_orbital(&ob_p.core, &ob_p);
    let mut c_e = lowest_orbital(&ob_e.core, &ob_e);
    let mut comps = components_of(&c_e, &c_p);
    let mut energy = comps.total();
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;

    for it in 1..=opts.max_iterations {
        iterations = it;
        let prev_energy = energy;
        let prev_ce = c_e.clone();
        let prev_cp = c_p.clone();

        let f_e = &ob_e.core + field_on_e(&c_p);
        c_e = lowest_orbital(&f_e, &ob_e);
        let f_p = &ob_p.core + field_on_p(&c_e);
        c_p = lowest_orbital(&f_p, &ob_p);

        comps = components_of(&c_e, &c_p);
        energy = comps.total();
        if energy > prev_energy + 1e-12 {
            // Exact alternating minimization cannot raise the energy; if
            // roundoff ever does, fall back to damped mixing.
            let blend = |new: &[f64], old: &[f64], ob: &OneBody| -> Vec<f64> {
                let mixed: Vec<f64> = new
                    .iter()
                    .zip(old)
                    .map(|(&a, &b)| opts.damping * a + (1.0 - opts.damping) * b)
                    .collect();
                let v = DVector::from_column_slice(&mixed);
                let norm = (v.transpose() * &ob.s * &v)[(0, 0)].sqrt();
                mixed.iter().map(|x| x / norm).collect()
            };
            c_e = blend(&c_e, &prev_ce, &ob_e);
            c_p = blend(&c_p, &prev_cp, &ob_p);
            comps = components_of(&c_e, &c_p);
            energy = comps.total();
        }
        trace.push(energy);

        let mut dp = 0.0_f64;
        for i in 0..ne {
            for j in 0..ne {
                dp = dp.max((c_e[i] * c_e[j] - prev_ce[i] * prev_ce[j]).abs());
            }
        }
        for k in 0..np {
            for l in 0..np {
                dp = dp.max((c_p[k] * c_p[l] - prev_cp[k] * prev_cp[l]).abs());
            }
        }
        if (energy - prev_energy).abs() < opts.energy_tol && dp < opts.density_tol {
            converged = true;
            break;
        }
    }

    Ok(ScfResult {
        basis_e: basis_e.clone(),
        basis_p: basis_p.clone(),
        coeff_e: c_e,
        coeff_p: c_p,
        energy,
        components: comps,
        converged,
        iterations,
        energy_trace: trace,
    })
}

/// Options for the exponent optimization on top of [`scf`].
#[derive(Debug, Clone)]
pub struct OptimizeOptions {
    pub simplex: SimplexOptions<f64>,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            simplex: SimplexOptions {
                initial_step: 0.35,
                f_tol: 1e-11,
                x_tol: 1e-6,
                max_iterations: 6000,
                restarts: 1,
            },
        }
    }
}

/// Joint minimization of the SCF energy over the log-exponents of both
/// bases. The returned energy never exceeds the starting one.
pub fn optimize_exponents(
    params: &SystemParams,
    basis_e: &GaussianBasis,
    basis_p: &GaussianBasis,
    scf_opts: &ScfOptions,
    opt_opts: &OptimizeOptions,
) -> Result<(GaussianBasis, GaussianBasis, ScfResult)> {
    let start = scf(params, basis_e, basis_p, scf_opts)?;
    if !start.converged {
        return Err(Error::Numerics(
            "SCF does not converge at the starting exponents; cannot optimize".into(),
        ));
    }
    let ne = basis_e.len();
    let mut x0: Vec<f64> = basis_e.exponents().iter().map(|a| a.ln()).collect();
    x0.extend(basis_p.exponents().iter().map(|a| a.ln()));

    let objective = |x: &[f64]| -> f64 {
        let be = match GaussianBasis::new(x[..ne].iter().map(|t| t.exp()).collect()) {
            Ok(b) => b,
            Err(_) => return f64::INFINITY,
        };
        let bp = match GaussianBasis::new(x[ne..].iter().map(|t| t.exp()).collect()) {
            Ok(b) => b,
            Err(_) => return f64::INFINITY,
        };
        match scf(params, &be, &bp, scf_opts) {
            Ok(r) => r.energy,
            Err(_) => f64::INFINITY,
        }
    };

    let sim = minimize(objective, &x0, &opt_opts.simplex)?;
    let be = GaussianBasis::new(sim.x[..ne].iter().map(|t| t.exp()).collect())?;
    let bp = GaussianBasis::new(sim.x[ne..].iter().map(|t| t.exp()).collect())?;
    let refined = scf(params, &be, &bp, scf_opts)?;
    if refined.energy <= start.energy {
        Ok((be, bp, refined))
    } else {
        Ok((basis_e.clone(), basis_p.clone(), start))
    }
}

/// Sum of concentric Gaussians c_t exp(-g_t r^2) representing a spherical
/// 3D density; closed under products and convolutions, with analytic radial
/// moments.
#[derive(Debug, Clone)]
pub struct GaussianMixture {
    terms: Vec<(f64, f64)>,
}

impl GaussianMixture {
    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(c, g)| c * (-g * r * r).exp()).sum()
    }

    /// int rho d3r.
    pub fn norm(&self) -> f64 {
        self.terms.iter().map(|&(c, g)| c * (PI / g).powf(1.5)).sum()
    }

    /// Radial moment <r^n> weight: int 4 pi r^2 r^n rho dr, n in {-1, 0, 1, 2}.
    pub fn radial_moment(&self, n: i32) -> f64 {
        self.terms
            .iter()
            .map(|&(c, g)| match n {
                -1 => c * 2.0 * PI / g,
                0 => c * (PI / g).powf(1.5),
                1 => c * 2.0 * PI / (g * g),
                2 => c * 1.5 / g * (PI / g).powf(1.5),
                _ => unreachable!("unsupported moment order"),
            })
            .sum()
    }

    /// Density of the difference vector of two independent particles with
    /// these densities (3D convolution; exponents combine as ab/(a+b)).
    pub fn convolve(&self, other: &GaussianMixture) -> GaussianMixture {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(c1, g1) in &self.terms {
            for &(c2, g2) in &other.terms {
                let g = g1 * g2 / (g1 + g2);
                let c = c1 * c2 * (PI / (g1 + g2)).powf(1.5);
                terms.push((c, g));
            }
        }
        GaussianMixture { terms }
    }
}

/// |phi|^2 of one mean-field orbital as an analytic mixture.
pub fn hf_density_mixture(result: &ScfResult, which: Particle) -> GaussianMixture {
    let (basis, coeff) = match which {
        Particle::Electron => (&result.basis_e, &result.coeff_e),
        Particle::Pcp => (&result.basis_p, &result.coeff_p),
    };
    let e = basis.exponents();
    let mut terms = Vec::with_capacity(e.len() * e.len());
    for i in 0..e.len() {
        for j in 0..e.len() {
            let norm = (2.0 * e[i] / PI).powf(0.75) * (2.0 * e[j] / PI).powf(0.75);
            terms.push((coeff[i] * coeff[j] * norm, e[i] + e[j]));
        }
    }
    GaussianMixture { terms }
}

/// Mean-field one-particle density tabulated on the given radii.
pub fn hf_density(result: &ScfResult, which: Particle, radii: &[f64]) -> crate::correlation::RadialDensity {
    let mix = hf_density_mixture(result, which);
    crate::correlation::RadialDensity {
        r: radii.to_vec(),
        rho: radii.iter().map(|&r| mix.eval(r)).collect(),
        particle: which,
    }
}

/// Analytic intracule of the product state: the convolution of the two
/// orbital densities.
pub fn hf_intracule_mixture(result: &ScfResult) -> GaussianMixture {
    hf_density_mixture(result, Particle::Electron)
        .convolve(&hf_density_mixture(result, Particle::Pcp))
}

/// Uncorrelated distance distribution D(r) = 4 pi r^2 rho_int(r) on a grid.
pub fn hf_intracule(result: &ScfResult, radii: &[f64]) -> crate::correlation::IntraculeRdf {
    let mix = hf_intracule_mixture(result);
    crate::correlation::IntraculeRdf {
        r: radii.to_vec(),
        d: radii.iter().map(|&r| 4.0 * PI * r * r * mix.eval(r)).collect(),
        source: crate::correlation::IntraculeSource::Uncorrelated,
    }
}

/// Reads a basis pair from a plain-text file: one exponent per line,
/// electron block first, the two blocks separated by a blank line.
pub fn read_basis_file(path: &Path) -> Result<(GaussianBasis, GaussianBasis)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read basis file {}: {e}", path.display())))?;
    parse_basis_text(&text)
}

pub fn parse_basis_text(text: &str) -> Result<(GaussianBasis, GaussianBasis)> {
    let mut blocks: Vec<Vec<f64>> = vec![Vec::new()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        let v: f64 = line.parse().map_err(|_| {
            Error::Config(format!("basis file line {}: not a number: {line:?}", lineno + 1))
        })?;
        blocks.last_mut().unwrap().push(v);
    }
    if blocks.last().is_some_and(|b| b.is_empty()) {
        blocks.pop();
    }
    if blocks.len() != 2 {
        return Err(Error::Config(format!(
            "basis file must hold two blank-line-separated blocks (electron first), found {}",
            blocks.len()
        )));
    }
    Ok((GaussianBasis::new(blocks[0].clone())?, GaussianBasis::new(blocks[1].clone())?))
}

pub fn format_basis_text(basis_e: &GaussianBasis, basis_p: &GaussianBasis) -> String {
    let mut out = String::new();
    for &a in basis_e.exponents() {
        let _ = writeln!(out, "{a}");
    }
    let _ = writeln!(out);
    for &a in basis_p.exponents() {
        let _ = writeln!(out, "{a}");
    }
    out
}
