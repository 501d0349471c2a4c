use num_traits::Float;

use crate::{Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Debug, Clone)]
pub struct SymTridiagonal<F> {
    diag: Vec<F>,
    offdiag: Vec<F>,
}

impl<F: Float + core::fmt::Debug> SymTridiagonal<F> {
    pub fn new(diag: Vec<F>, offdiag: Vec<F>) -> Result<Self> {
        if diag.len() < 2 {
            return Err(Error::Domain(format!(
                "tridiagonal dimension must be >= 2, got {}",
                diag.len()
            )));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Domain(format!(
                "off-diagonal length {} does not match dimension {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[F] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[F] {
        &self.offdiag
    }

    /// Row-sum norm; used to scale convergence thresholds.
    pub fn inf_norm(&self) -> F {
        let n = self.dim();
        let mut best = F::zero();
        for i in 0..n {
            let mut row = self.diag[i].abs();
            if i > 0 {
                row = row + self.offdiag[i - 1].abs();
            }
            if i + 1 < n {
                row = row + self.offdiag[i].abs();
            }
            best = best.max(row);
        }
        best
    }

    /// y = M x
    pub fn mul(&self, x: &[F], y: &mut [F]) {
        let n = self.dim();
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v = v + self.offdiag[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v = v + self.offdiag[i] * x[i + 1];
            }
            y[i] = v;
        }
    }

    /// Number of eigenvalues strictly below `lambda` (Sturm count via the
    /// LDL^T recurrence, with the usual pivot safeguard).
    fn count_below(&self, lambda: F, pivmin: F) -> usize {
        let n = self.dim();
        let mut count = 0usize;
        let mut d = self.diag[0] - lambda;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < F::zero() {
            count += 1;
        }
        for i in 1..n {
            let e = self.offdiag[i - 1];
            let mut next = (self.diag[i] - lambda) - e * e / d;
            if next.abs() < pivmin {
                next = -pivmin;
            }
            if next < F::zero() {
                count += 1;
            }
            d = next;
        }
        count
    }

    /// Solve (M - sigma I) x = b with partial pivoting (band LU, O(n)).
    /// Pivots below `pivot_floor` are replaced by it so a shift sitting on
    /// an eigenvalue cannot blow the iterate past the float range.
    fn shifted_solve(&self, sigma: F, b: &[F], x: &mut [F], pivot_floor: F) {
        let n = self.dim();
        // Band storage: sub[i] couples row i+1 to i; up1/up2 are the two
        // superdiagonals after pivoting fill-in.
        let mut dia: Vec<F> = (0..n).map(|i| self.diag[i] - sigma).collect();
        let mut up1: Vec<F> = (0..n).map(|i| if i + 1 < n { self.offdiag[i] } else { F::zero() }).collect();
        let mut up2: Vec<F> = vec![F::zero(); n];
        x.copy_from_slice(b);

        let fix = |p: F| {
            if p.abs() < pivot_floor {
                if p < F::zero() { -pivot_floor } else { pivot_floor }
            } else {
                p
            }
        };
        for i in 0..n - 1 {
            let mut sub = self.offdiag[i];
            if sub.abs() > dia[i].abs() {
                // swap row i and i+1
                core::mem::swap(&mut dia[i], &mut sub);
                let t = up1[i];
                up1[i] = dia[i + 1];
                dia[i + 1] = t;
                let t2 = up2[i];
                up2[i] = up1[i + 1];
                up1[i + 1] = t2;
                x.swap(i, i + 1);
            }
            let piv = fix(dia[i]);
            dia[i] = piv;
            let factor = sub / piv;
            dia[i + 1] = dia[i + 1] - factor * up1[i];
            up1[i + 1] = up1[i + 1] - factor * up2[i];
            x[i + 1] = x[i + 1] - factor * x[i];
        }
        // back substitution
        for i in (0..n).rev() {
            let mut v = x[i];
            if i + 1 < n {
                v = v - up1[i] * x[i + 1];
            }
            if i + 2 < n {
                v = v - up2[i] * x[i + 2];
            }
            x[i] = v / fix(dia[i]);
        }
    }

    /// Algebraically smallest eigenvalue and its unit eigenvector.
    ///
    /// Sturm-sequence bisection brackets the eigenvalue, inverse iteration
    /// recovers the eigenvector, and the Rayleigh quotient polishes the
    /// value. The result satisfies ||Mv - lambda v|| <= tol * ||M||.
    pub fn lowest_eigenpair(&self, tol: F) -> Result<(F, Vec<F>)> {
        if !(tol > F::zero()) {
            return Err(Error::Domain("eigen tolerance must be positive".into()));
        }
        let n = self.dim();
        let norm = self.inf_norm().max(F::min_positive_value());
        let pivmin = F::epsilon() * F::epsilon() * norm;

        // Gershgorin bracket, widened slightly so the counts at the ends are
        // guaranteed 0 and n.
        let mut lo = F::infinity();
        let mut hi = F::neg_infinity();
        for i in 0..n {
            let mut r = F::zero();
            if i > 0 {
                r = r + self.offdiag[i - 1].abs();
            }
            if i + 1 < n {
                r = r + self.offdiag[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        let margin = F::epsilon() * norm + F::min_positive_value();
        lo = lo - margin;
        hi = hi + margin;

        for _ in 0..128 {
            let two = F::one() + F::one();
            let mid = (lo + hi) / two;
            if !(mid > lo && mid < hi) {
                break;
            }
            if self.count_below(mid, pivmin) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }

        // Inverse iteration from the bisection midpoint.
        let two = F::one() + F::one();
        let mut sigma = (lo + hi) / two;
        let nf = F::from(n).unwrap_or(F::one());
        let mut v = vec![F::one() / nf.sqrt(); n];
        let mut work = vec![F::zero(); n];
        let mut y = vec![F::zero(); n];
        let res_tol = tol * norm;
        let pivot_floor = F::epsilon() * norm;
        let mut lambda = sigma;
        let mut residual = F::infinity();
        let mut shift_bumps = 0;
        let mut it = 0;
        while it < 16 {
            it += 1;
            self.shifted_solve(sigma, &v, &mut y, pivot_floor);
            // Normalize via the max first so a nearly singular solve cannot
            // overflow the sum of squares.
            let mut mx = F::zero();
            let mut finite = true;
            for &t in y.iter() {
                if !t.is_finite() {
                    finite = false;
                    break;
                }
                mx = mx.max(t.abs());
            }
            if !finite || mx == F::zero() {
                shift_bumps += 1;
                if shift_bumps > 4 {
                    return Err(Error::Numerics(
                        "inverse iteration kept producing non-finite vectors".into(),
                    ));
                }
                sigma = sigma + F::from(shift_bumps).unwrap_or(F::one()) * pivot_floor;
                continue;
            }
            let mut s = F::zero();
            for &t in y.iter() {
                let r = t / mx;
                s = s + r * r;
            }
            let len = mx * s.sqrt();
            for (vi, &yi) in v.iter_mut().zip(y.iter()) {
                *vi = yi / len;
            }
            self.mul(&v, &mut work);
            let mut rq = F::zero();
            for (&wi, &vi) in work.iter().zip(v.iter()) {
                rq = rq + wi * vi;
            }
            lambda = rq;
            let mut rr = F::zero();
            for (&wi, &vi) in work.iter().zip(v.iter()) {
                let d = wi - rq * vi;
                rr = rr + d * d;
            }
            residual = rr.sqrt();
            if residual <= res_tol {
                break;
            }
        }
        if residual > res_tol {
            return Err(Error::Numerics(format!(
                "eigen iteration stalled: residual {residual:?} above tolerance \
                 after {it} inverse-iteration steps (dim {n})"
            )));
        }
        // Deterministic orientation: largest-magnitude component positive.
        let mut imax = 0usize;
        for i in 1..n {
            if v[i].abs() > v[imax].abs() {
                imax = i;
            }
        }
        if v[imax] < F::zero() {
            for t in v.iter_mut() {
                *t = -*t;
            }
        }
        Ok((lambda, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn laplacian_stencil_lowest() {
        // Eigenvalues of the 3x3 second-difference stencil: 2 - 2 cos(k pi/4).
        let m = SymTridiagonal::new(vec![2.0, 2.0, 2.0], vec![-1.0, -1.0]).unwrap();
        let (lambda, v) = m.lowest_eigenpair(1e-12).unwrap();
        assert_abs_diff_eq!(lambda, 2.0 - std::f64::consts::SQRT_2, epsilon = 1e-12);
        let norm: f64 = v.iter().map(|x| x * x).sum();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_one_by_one() {
        assert!(matches!(
            SymTridiagonal::new(vec![5.0], vec![]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn works_in_single_precision() {
        let m = SymTridiagonal::<f32>::new(vec![2.0, 2.0, 2.0], vec![-1.0, -1.0]).unwrap();
        let (lambda, _) = m.lowest_eigenpair(1e-5).unwrap();
        assert!((lambda - (2.0 - std::f32::consts::SQRT_2)).abs() < 1e-5);
    }

    /// Independent check: smallest eigenvalue by dense cyclic Jacobi sweeps,
    /// which handle clustered eigenvalues that defeat plain power iteration.
    fn dense_lowest(diag: &[f64], off: &[f64]) -> f64 {
        let n = diag.len();
        let mut a = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            a[i][i] = diag[i];
            if i + 1 < n {
                a[i][i + 1] = off[i];
                a[i + 1][i] = off[i];
            }
        }
        let scale: f64 = diag.iter().chain(off).fold(1.0, |m, &v| m.max(v.abs()));
        for _sweep in 0..100 {
            let mut off_norm = 0.0f64;
            for p in 0..n {
                for q in p + 1..n {
                    off_norm = off_norm.max(a[p][q].abs());
                }
            }
            if off_norm <= 1e-14 * scale {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() <= 1e-300 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p][k];
                        let aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][i]).fold(f64::INFINITY, f64::min)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_dense_oracle(
            diag in proptest::collection::vec(-5.0f64..5.0, 2..50),
            seed in 0u64..u64::MAX,
        ) {
            let n = diag.len();
            let mut s = seed;
            let mut off = Vec::with_capacity(n - 1);
            for _ in 0..n - 1 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                off.push(((s >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0);
            }
            let m = SymTridiagonal::new(diag.clone(), off.clone()).unwrap();
            let (lambda, _) = m.lowest_eigenpair(1e-13).unwrap();
            let reference = dense_lowest(&diag, &off);
            prop_assert!((lambda - reference).abs() < 1e-10,
                "lambda={lambda} reference={reference}");
        }
    }
}
