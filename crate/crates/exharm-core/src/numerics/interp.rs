use num_traits::{Float, FromPrimitive};

/// Cubic (4-point Lagrange) interpolation of values tabulated on the uniform
/// grid x_i = i h, i = 0..n-1. Returns zero outside the table.
pub fn interp_cubic_uniform<F: Float + FromPrimitive>(vals: &[F], h: F, x: F) -> F {
    let n = vals.len();
    if n < 2 || x < F::zero() {
        return F::zero();
    }
    let t = x / h;
    let cell = t.floor().to_f64().unwrap_or(0.0) as usize;
    if cell + 1 >= n {
        return F::zero();
    }
    if n < 4 {
        // linear fallback for tiny tables
        let frac = t - F::from_usize(cell).unwrap();
        return vals[cell] * (F::one() - frac) + vals[cell + 1] * frac;
    }
    let i0 = cell.saturating_sub(1).min(n - 4);
    let x_local = t - F::from_usize(i0).unwrap();
    let mut acc = F::zero();
    for a in 0..4 {
        let mut w = F::one();
        let af = F::from_usize(a).unwrap();
        for b in 0..4 {
            if a != b {
                let bf = F::from_usize(b).unwrap();
                w = w * (x_local - bf) / (af - bf);
            }
        }
        acc = acc + w * vals[i0 + a];
    }
    acc
}
