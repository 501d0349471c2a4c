use num_traits::{Float, FromPrimitive};

use crate::{Error, Result};

/// Options for the Nelder-Mead simplex minimizer.
#[derive(Debug, Clone)]
pub struct SimplexOptions<F> {
    /// Absolute edge length of the initial simplex.
    pub initial_step: F,
    /// Convergence threshold on the function spread across the simplex.
    pub f_tol: F,
    /// Convergence threshold on the simplex diameter.
    pub x_tol: F,
    pub max_iterations: usize,
    /// Rebuilds of a fresh (smaller) simplex around the incumbent best.
    pub restarts: usize,
}

impl<F: Float + FromPrimitive> Default for SimplexOptions<F> {
    fn default() -> Self {
        let c = |x: f64| F::from_f64(x).unwrap();
        Self {
            initial_step: c(0.3),
            f_tol: c(1e-12),
            x_tol: c(1e-8),
            max_iterations: 4000,
            restarts: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult<F> {
    pub x: Vec<F>,
    pub f: F,
    pub iterations: usize,
    pub evaluations: usize,
    /// False when the iteration cap was reached; `x` is then best-so-far.
    pub converged: bool,
}

/// Derivative-free minimization with the adaptive Nelder-Mead coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 0.75 - 1/(2n),
/// shrink 1 - 1/n), which behave better than the classic values in higher
/// dimensions.
pub fn minimize<F, G>(mut f: G, x0: &[F], opts: &SimplexOptions<F>) -> Result<SimplexResult<F>>
where
    F: Float + FromPrimitive,
    G: FnMut(&[F]) -> F,
{
    let n = x0.len();
    if n == 0 {
        return Err(Error::Domain("empty starting point".into()));
    }
    let c = |x: f64| F::from_f64(x).unwrap();
    let nf = F::from_usize(n).unwrap();
    let alpha = F::one();
    let beta = F::one() + c(2.0) / nf;
    let gamma = c(0.75) - F::one() / (c(2.0) * nf);
    let delta = F::one() - F::one() / nf;

    let mut evals = 0usize;
    let eval = |f: &mut G, x: &[F], evals: &mut usize| -> Result<F> {
        let v = f(x);
        *evals += 1;
        if v.is_nan() {
            return Err(Error::Numerics("objective returned NaN".into()));
        }
        Ok(v)
    };

    let f0 = eval(&mut f, x0, &mut evals)?;
    if !f0.is_finite() {
        return Err(Error::Numerics("objective not finite at the start point".into()));
    }

    let mut best_x = x0.to_vec();
    let mut best_f = f0;
    let mut iterations = 0usize;
    let mut converged = false;
    let mut step = opts.initial_step;

    for _round in 0..=opts.restarts {
        // simplex around the incumbent best
        let mut simplex: Vec<Vec<F>> = Vec::with_capacity(n + 1);
        let mut values: Vec<F> = Vec::with_capacity(n + 1);
        simplex.push(best_x.clone());
        values.push(best_f);
        for i in 0..n {
            let mut p = best_x.clone();
            p[i] = p[i] + step;
            let v = eval(&mut f, &p, &mut evals)?;
            simplex.push(p);
            values.push(v);
        }

        converged = false;
        while iterations < opts.max_iterations {
            iterations += 1;
            // order: best first, worst last
            let mut idx: Vec<usize> = (0..=n).collect();
            idx.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap_or(core::cmp::Ordering::Equal));
            let reorder_s: Vec<Vec<F>> = idx.iter().map(|&i| simplex[i].clone()).collect();
            let reorder_v: Vec<F> = idx.iter().map(|&i| values[i]).collect();
            simplex = reorder_s;
            values = reorder_v;

            let spread = values[n] - values[0];
            let mut diameter = F::zero();
            for i in 1..=n {
                for j in 0..n {
                    diameter = diameter.max((simplex[i][j] - simplex[0][j]).abs());
                }
            }
            if spread.abs() <= opts.f_tol * (F::one() + values[0].abs()) && diameter <= opts.x_tol {
                converged = true;
                break;
            }

            // centroid of all but the worst
            let mut centroid = vec![F::zero(); n];
            for vertex in simplex.iter().take(n) {
                for j in 0..n {
                    centroid[j] = centroid[j] + vertex[j];
                }
            }
            for cj in centroid.iter_mut() {
                *cj = *cj / nf;
            }

            let worst = values[n];
            let second_worst = values[n - 1];
            let reflect: Vec<F> = (0..n)
                .map(|j| centroid[j] + alpha * (centroid[j] - simplex[n][j]))
                .collect();
            let fr = eval(&mut f, &reflect, &mut evals)?;

            if fr < values[0] {
                let expand: Vec<F> = (0..n)
                    .map(|j| centroid[j] + beta * (reflect[j] - centroid[j]))
                    .collect();
                let fe = eval(&mut f, &expand, &mut evals)?;
                if fe < fr {
                    simplex[n] = expand;
                    values[n] = fe;
                } else {
                    simplex[n] = reflect;
                    values[n] = fr;
                }
            } else if fr < second_worst {
                simplex[n] = reflect;
                values[n] = fr;
            } else {
                let (point, fp) = if fr < worst {
                    // outside contraction
                    let p: Vec<F> = (0..n)
                        .map(|j| centroid[j] + gamma * (reflect[j] - centroid[j]))
                        .collect();
                    let v = eval(&mut f, &p, &mut evals)?;
                    (p, v)
                } else {
                    // inside contraction
                    let p: Vec<F> = (0..n)
                        .map(|j| centroid[j] - gamma * (centroid[j] - simplex[n][j]))
                        .collect();
                    let v = eval(&mut f, &p, &mut evals)?;
                    (p, v)
                };
                if fp < worst.min(fr) {
                    simplex[n] = point;
                    values[n] = fp;
                } else {
                    // shrink toward the best vertex
                    for i in 1..=n {
                        for j in 0..n {
                            simplex[i][j] = simplex[0][j] + delta * (simplex[i][j] - simplex[0][j]);
                        }
                        values[i] = eval(&mut f, &simplex[i], &mut evals)?;
                    }
                }
            }
        }

        if values[0] < best_f {
            best_f = values[0];
            best_x = simplex[0].clone();
        }
        step = step / c(4.0);
        if iterations >= opts.max_iterations {
            break;
        }
    }

    Ok(SimplexResult {
        x: best_x,
        f: best_f,
        iterations,
        evaluations: evals,
        converged,
    })
}
