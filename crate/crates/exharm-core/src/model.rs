//! Model parameters and the analytic center-of-mass ground state.
//!
//! The two free parameters are the PCP mass (in electron masses) and the
//! shared trap frequency. The coordinate change to center-of-mass and
//! relative vectors splits the Hamiltonian exactly; the center-of-mass part
//! is a 3D harmonic oscillator of mass M = 1 + m with an analytic Gaussian
//! ground state, and only the relative part needs a numerical solve.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Which physical particle an observable refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Particle {
    Electron,
    Pcp,
}

impl Particle {
    pub fn label(self) -> &'static str {
        match self {
            Particle::Electron => "electron",
            Particle::Pcp => "pcp",
        }
    }
}

/// Free parameters of the model plus the derived pseudo-particle masses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    m_pcp: f64,
    omega: f64,
    total_mass: f64,
    reduced_mass: f64,
}

impl SystemParams {
    /// Validates the inputs and derives M = 1 + m and mu = m / (1 + m).
    pub fn new(m_pcp: f64, omega: f64) -> Result<Self> {
        if !(m_pcp > 0.0 && m_pcp.is_finite()) {
            return Err(Error::Domain(format!("PCP mass must be positive, got {m_pcp}")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Domain(format!("trap frequency must be positive, got {omega}")));
        }
        Ok(Self {
            m_pcp,
            omega,
            total_mass: 1.0 + m_pcp,
            reduced_mass: m_pcp / (1.0 + m_pcp),
        })
    }

    pub fn m_pcp(&self) -> f64 {
        self.m_pcp
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn reduced_mass(&self) -> f64 {
        self.reduced_mass
    }
}

/// Analytic Gaussian ground state of the center-of-mass oscillator,
/// phi(R) = (M w / pi)^(3/4) exp(-M w R^2 / 2), with energy 3w/2.
#[derive(Debug, Clone, Copy)]
pub struct ComGaussian {
    mass: f64,
    omega: f64,
}

impl ComGaussian {
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Ground-state energy, (3/2) w for any mass.
    pub fn energy(&self) -> f64 {
        1.5 * self.omega
    }

    /// Exponent of the orbital phi itself (phi ~ exp(-a R^2) with a = Mw/2).
    pub fn orbital_exponent(&self) -> f64 {
        0.5 * self.mass * self.omega
    }

    /// Normalization constant (M w / pi)^(3/4).
    pub fn norm_constant(&self) -> f64 {
        (self.mass * self.omega / PI).powf(0.75)
    }

    /// |phi(R)|^2, normalized to unit integral over 3D space.
    pub fn density(&self, r: f64) -> f64 {
        let mw = self.mass * self.omega;
        (mw / PI).powf(1.5) * (-mw * r * r).exp()
    }

    /// <R^2> = 3 / (2 M w).
    pub fn mean_r_sq(&self) -> f64 {
        1.5 / (self.mass * self.omega)
    }

    /// <|grad phi|^2> = (3/2) M w, i.e. twice the kinetic energy times M.
    pub fn grad_norm_sq(&self) -> f64 {
        1.5 * self.mass * self.omega
    }
}

/// Center-of-mass ground state for the given parameters.
pub fn com_ground(params: &SystemParams) -> ComGaussian {
    ComGaussian {
        mass: params.total_mass(),
        omega: params.omega(),
    }
}

/// Expectation values of the five Hamiltonian terms for one wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyComponents {
    pub t_e: f64,
    pub t_pcp: f64,
    pub v_ext_e: f64,
    pub v_ext_pcp: f64,
    pub v_ep: f64,
}

impl EnergyComponents {
    pub fn total(&self) -> f64 {
        self.t_e + self.t_pcp + self.v_ext_e + self.v_ext_pcp + self.v_ep
    }

    /// Componentwise difference (used for the correlation decomposition).
    pub fn minus(&self, other: &EnergyComponents) -> EnergyComponents {
        EnergyComponents {
            t_e: self.t_e - other.t_e,
            t_pcp: self.t_pcp - other.t_pcp,
            v_ext_e: self.v_ext_e - other.v_ext_e,
            v_ext_pcp: self.v_ext_pcp - other.v_ext_pcp,
            v_ep: self.v_ep - other.v_ep,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::QuadratureRule;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn derived_masses() {
        let p = SystemParams::new(1836.0, 0.01).unwrap();
        assert_eq!(p.total_mass(), 1837.0);
        assert_relative_eq!(p.reduced_mass(), 0.9994556, epsilon = 1e-7);

        let p = SystemParams::new(1.0, 0.01).unwrap();
        assert_eq!(p.reduced_mass(), 0.5);
        assert_eq!(p.total_mass(), 2.0);

        let p = SystemParams::new(207.0, 0.02).unwrap();
        assert_relative_eq!(p.reduced_mass(), 0.9951923, epsilon = 1e-7);
    }

    #[test]
    fn rejects_non_positive_inputs() {
        assert!(matches!(SystemParams::new(-1.0, 0.1), Err(Error::Domain(_))));
        assert!(matches!(SystemParams::new(1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(SystemParams::new(f64::NAN, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn com_energy_is_mass_independent() {
        for &(m, w, e) in &[(1836.0, 100.0, 150.0), (1.0, 0.01, 0.015)] {
            let com = com_ground(&SystemParams::new(m, w).unwrap());
            assert_abs_diff_eq!(com.energy(), e, epsilon = 1e-15);
        }
    }

    #[test]
    fn com_moment_matches_analytic() {
        let com = com_ground(&SystemParams::new(1836.0, 0.01).unwrap());
        assert_relative_eq!(com.mean_r_sq(), 0.081655, epsilon = 1e-5);
    }

    #[test]
    fn com_density_normalization_and_moment_by_quadrature() {
        let com = com_ground(&SystemParams::new(10.0, 0.5).unwrap());
        let sigma = com.mean_r_sq().sqrt();
        let rule = QuadratureRule::<f64>::composite_simpson(0.0, 12.0 * sigma, 4000).unwrap();
        let norm = rule
            .integrate(|r| 4.0 * PI * r * r * com.density(r))
            .unwrap();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        let r2 = rule
            .integrate(|r| 4.0 * PI * r.powi(4) * com.density(r))
            .unwrap();
        assert_abs_diff_eq!(r2, com.mean_r_sq(), epsilon = 1e-8);
    }

    proptest! {
        #[test]
        fn reduced_times_total_recovers_m(m in 1e-3f64..1e7, w in 1e-6f64..1e4) {
            let p = SystemParams::new(m, w).unwrap();
            prop_assert!((p.reduced_mass() * p.total_mass() - m).abs() <= 1e-12 * m);
            prop_assert!(p.reduced_mass() > 0.0 && p.reduced_mass() < 1.0);
        }
    }
}
