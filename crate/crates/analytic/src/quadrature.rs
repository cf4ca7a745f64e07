//! Adaptive Simpson integration, used as the numerical oracle for the
//! window-averaged current.

/// Integrate `f` over `[a, b]` by adaptive Simpson bisection to the given
/// absolute tolerance.
///
/// Classic recursion with Richardson correction: a panel is accepted when
/// the two-half Simpson sum agrees with the single-panel sum to 15× the
/// panel's share of the tolerance, and the accepted value includes the
/// (S₂ − S₁)/15 correction term. Suited to smooth integrands (the averaged
/// current integrand is a Lorentzian-like rational function).
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson_panel(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, abs_tol, MAX_DEPTH)
}

const MAX_DEPTH: u32 = 48;

fn simpson_panel(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_panel(a, m, fa, flm, fm);
    let right = simpson_panel(m, b, fm, frm, fb);
    let split = left + right;
    let correction = (split - whole) / 15.0;
    if depth == 0 || correction.abs() <= tol {
        return split + correction;
    }
    let half_tol = 0.5 * tol;
    recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}
