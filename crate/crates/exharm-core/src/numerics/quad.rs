use num_traits::{Float, FloatConst, FromPrimitive};

use crate::{Error, Result};

/// Composite trapezoid on uniformly spaced samples.
pub fn trapezoid_uniform<F: Float>(values: &[F], h: F) -> F {
    let n = values.len();
    if n < 2 {
        return F::zero();
    }
    let two = F::one() + F::one();
    let mut s = (values[0] + values[n - 1]) / two;
    for &v in &values[1..n - 1] {
        s = s + v;
    }
    s * h
}

/// Composite Simpson on uniformly spaced samples. An even interval count is
/// handled exactly; an odd count closes the last interval with the
/// three-point backward rule.
pub fn simpson_uniform<F: Float + FromPrimitive>(values: &[F], h: F) -> F {
    let n = values.len();
    if n < 3 {
        return trapezoid_uniform(values, h);
    }
    let c = |x: f64| F::from_f64(x).unwrap();
    let odd_intervals = (n - 1) % 2 == 1;
    let last = if odd_intervals { n - 1 } else { n };
    let mut s = values[0] + values[last - 1];
    let mut i = 1;
    while i < last - 1 {
        s = s + c(4.0) * values[i];
        if i + 1 < last - 1 {
            s = s + c(2.0) * values[i + 1];
        }
        i += 2;
    }
    let mut total = s * h / c(3.0);
    if odd_intervals {
        total = total + h * (c(-1.0) * values[n - 3] + c(8.0) * values[n - 2] + c(5.0) * values[n - 1]) / c(12.0);
    }
    total
}

/// A quadrature rule as explicit nodes and weights on an interval.
#[derive(Debug, Clone)]
pub struct QuadratureRule<F> {
    pub nodes: Vec<F>,
    pub weights: Vec<F>,
}

impl<F: Float + FloatConst + FromPrimitive> QuadratureRule<F> {
    /// Gauss-Legendre rule with `n` points mapped to [a, b]; exact for
    /// polynomials up to degree 2n - 1.
    pub fn gauss_legendre(n: usize, a: F, b: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("Gauss-Legendre order must be >= 1".into()));
        }
        let c = |x: f64| F::from_f64(x).unwrap();
        let nf = F::from_usize(n).unwrap();
        let half = (b - a) / c(2.0);
        let mid = (a + b) / c(2.0);
        let mut nodes = vec![F::zero(); n];
        let mut weights = vec![F::zero(); n];
        for k in 0..(n + 1) / 2 {
            let kf = F::from_usize(k).unwrap();
            // Standard initial guess, then Newton on P_n.
            let mut x = (F::PI() * (kf + c(0.75)) / (nf + c(0.5))).cos();
            let mut dp = F::zero();
            for _ in 0..100 {
                let mut p0 = F::one();
                let mut p1 = x;
                for j in 2..=n {
                    let jf = F::from_usize(j).unwrap();
                    let p2 = ((c(2.0) * jf - F::one()) * x * p1 - (jf - F::one()) * p0) / jf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - F::one());
                let dx = p1 / dp;
                x = x - dx;
                if dx.abs() <= F::epsilon() * c(4.0) {
                    break;
                }
            }
            let w = c(2.0) / ((F::one() - x * x) * dp * dp);
            nodes[k] = mid - half * x;
            weights[k] = w * half.abs();
            nodes[n - 1 - k] = mid + half * x;
            weights[n - 1 - k] = w * half.abs();
        }
        Ok(Self { nodes, weights })
    }

    /// Composite Simpson rule with `panels` panels (two intervals each).
    pub fn composite_simpson(a: F, b: F, panels: usize) -> Result<Self> {
        if panels == 0 {
            return Err(Error::Domain("Simpson rule needs at least one panel".into()));
        }
        let c = |x: f64| F::from_f64(x).unwrap();
        let n = 2 * panels + 1;
        let h = (b - a) / F::from_usize(n - 1).unwrap();
        let nodes: Vec<F> = (0..n).map(|i| a + h * F::from_usize(i).unwrap()).collect();
        let weights: Vec<F> = (0..n)
            .map(|i| {
                let w = if i == 0 || i == n - 1 {
                    c(1.0)
                } else if i % 2 == 1 {
                    c(4.0)
                } else {
                    c(2.0)
                };
                w * h / c(3.0)
            })
            .collect();
        Ok(Self { nodes, weights })
    }

    /// Composite trapezoid rule with `n` nodes.
    pub fn trapezoid(a: F, b: F, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("trapezoid rule needs at least two nodes".into()));
        }
        let c = |x: f64| F::from_f64(x).unwrap();
        let h = (b - a) / F::from_usize(n - 1).unwrap();
        let nodes: Vec<F> = (0..n).map(|i| a + h * F::from_usize(i).unwrap()).collect();
        let weights: Vec<F> = (0..n)
            .map(|i| if i == 0 || i == n - 1 { h / c(2.0) } else { h })
            .collect();
        Ok(Self { nodes, weights })
    }

    pub fn weight_sum(&self) -> F {
        self.weights.iter().fold(F::zero(), |acc, &w| acc + w)
    }

    /// Apply the rule to a callable integrand. A non-finite integrand value
    /// is reported together with the node that produced it.
    pub fn integrate<G: FnMut(F) -> F>(&self, mut f: G) -> Result<F>
    where
        F: core::fmt::Debug,
    {
        let mut acc = F::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::Numerics(format!(
                    "integrand is not finite at node {x:?}"
                )));
            }
            acc = acc + v * w;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gauss_legendre_polynomial_exactness() {
        // Rule of order n integrates x^(2n-1) exactly.
        for n in 1..=12usize {
            let rule = QuadratureRule::<f64>::gauss_legendre(n, 0.0, 1.0).unwrap();
            let p = (2 * n - 1) as i32;
            let got = rule.integrate(|x| x.powi(p)).unwrap();
            assert_abs_diff_eq!(got, 1.0 / (p as f64 + 1.0), epsilon = 1e-12);
        }
    }

    #[test]
    fn gauss_legendre_five_point_square() {
        let rule = QuadratureRule::<f64>::gauss_legendre(5, 0.0, 1.0).unwrap();
        let got = rule.integrate(|x| x * x).unwrap();
        assert_abs_diff_eq!(got, 1.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn weights_sum_to_interval_length() {
        let t = QuadratureRule::<f64>::trapezoid(-1.0, 3.0, 57).unwrap();
        assert_abs_diff_eq!(t.weight_sum(), 4.0, epsilon = 1e-13);
        let s = QuadratureRule::<f64>::composite_simpson(0.0, 2.5, 40).unwrap();
        assert_abs_diff_eq!(s.weight_sum(), 2.5, epsilon = 1e-13);
        assert!(s.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn hydrogen_norm_integral() {
        // int_0^inf e^(-2r) 4 r^2 dr = 1, truncated at r = 40.
        let rule = QuadratureRule::<f64>::composite_simpson(0.0, 40.0, 2000).unwrap();
        let got = rule.integrate(|r| 4.0 * r * r * (-2.0 * r).exp()).unwrap();
        assert_abs_diff_eq!(got, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn nan_integrand_names_node() {
        let rule = QuadratureRule::<f64>::trapezoid(0.0, 1.0, 5).unwrap();
        let err = rule.integrate(|x| (x - 0.5).ln()).unwrap_err();
        assert!(matches!(err, Error::Numerics(_)));
        assert!(err.to_string().contains("0.25") || err.to_string().contains("0"));
    }

    #[test]
    fn simpson_handles_odd_interval_count() {
        // 5 intervals (6 points) of a quadratic is still integrated exactly.
        let h = 0.2;
        let vals: Vec<f64> = (0..6).map(|i| {
            let x = i as f64 * h;
            x * x
        }).collect();
        assert_abs_diff_eq!(simpson_uniform(&vals, h), 1.0 / 3.0, epsilon = 1e-14);
    }
}
