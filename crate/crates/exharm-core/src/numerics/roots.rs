use num_traits::Float;

use crate::{Error, Result};

/// Brent's method on a sign-changing bracket [a, b].
///
/// Converges when the bracket or the function value falls below `tol`; the
/// inverse-quadratic/secant steps fall back to bisection whenever they leave
/// the bracket, so the result always lies inside [a, b].
pub fn find_root<F, G>(mut f: G, a: F, b: F, tol: F) -> Result<F>
where
    F: Float + core::fmt::Debug,
    G: FnMut(F) -> F,
{
    if !(tol > F::zero()) {
        return Err(Error::Domain("root tolerance must be positive".into()));
    }
    let (mut xa, mut xb) = (a, b);
    let mut fa = f(xa);
    let mut fb = f(xb);
    if !(fa.is_finite() && fb.is_finite()) {
        return Err(Error::Numerics("bracket endpoint is not finite".into()));
    }
    if fa == F::zero() {
        return Ok(xa);
    }
    if fb == F::zero() {
        return Ok(xb);
    }
    if (fa > F::zero()) == (fb > F::zero()) {
        return Err(Error::Bracket(format!(
            "no sign change over [{xa:?}, {xb:?}]"
        )));
    }

    let two = F::one() + F::one();
    let three = two + F::one();
    let (mut xc, mut fc) = (xa, fa);
    let mut d = xb - xa;
    let mut e = d;
    for _ in 0..200 {
        if fb.abs() > fc.abs() {
            // b must carry the best estimate
            xa = xb;
            fa = fb;
            xb = xc;
            fb = fc;
            xc = xa;
            fc = fa;
        }
        let tol1 = two * F::epsilon() * xb.abs() + tol / two;
        let xm = (xc - xb) / two;
        if xm.abs() <= tol1 || fb == F::zero() {
            return Ok(xb);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // attempt inverse quadratic / secant interpolation
            let s = fb / fa;
            let (mut p, mut q);
            if xa == xc {
                p = two * xm * s;
                q = F::one() - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qq * (qq - r) - (xb - xa) * (r - F::one()));
                q = (qq - F::one()) * (r - F::one()) * (s - F::one());
            }
            if p > F::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = three * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        xa = xb;
        fa = fb;
        xb = if d.abs() > tol1 {
            xb + d
        } else if xm > F::zero() {
            xb + tol1
        } else {
            xb - tol1
        };
        fb = f(xb);
        if !fb.is_finite() {
            return Err(Error::Numerics(format!("function not finite at {xb:?}")));
        }
        if (fb > F::zero()) == (fc > F::zero()) {
            xc = xa;
            fc = fa;
            d = xb - xa;
            e = d;
        }
    }
    Ok(xb)
}
