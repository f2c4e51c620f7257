//! Independent numeric zero-counting oracles used to cross-check the exact
//! engine: companion-matrix eigenvalues for moderate polynomials, and a
//! log-scaled Aberth-Ehrlich solver for polynomials whose coefficients span
//! too many orders of magnitude for `f64` (theta-like truncations).

use lpq_core::poly::RatPoly;
use lpq_core::rat::rat_to_f64;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Signed;

/// Roots of `p` as eigenvalues of the monic companion matrix. Only reliable
/// when all coefficient magnitudes are representable in `f64`.
pub fn companion_roots(p: &RatPoly) -> Vec<Complex64> {
    let d = p.degree();
    if d == 0 {
        return Vec::new();
    }
    let lead = p.coeff(d);
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -rat_to_f64(&(p.coeff(i) / &lead));
    }
    m.complex_eigenvalues().iter().cloned().collect()
}

/// Relative threshold below which an eigenvalue's imaginary part is treated
/// as numerically zero.
const IM_TOL: f64 = 1e-6;

fn split_real_nonreal(roots: &[Complex64]) -> (usize, usize) {
    let mut real = 0usize;
    let mut nonreal = 0usize;
    for r in roots {
        if r.im.abs() <= IM_TOL * (1.0 + r.norm()) {
            real += 1;
        } else {
            nonreal += 1;
        }
    }
    (real, nonreal)
}

/// `(real_count, nonreal_count)` by the companion-matrix oracle.
pub fn companion_counts(p: &RatPoly) -> (usize, usize) {
    let roots = companion_roots(p);
    split_real_nonreal(&roots)
}

/// `log |c|` of a rational, computed from numerator/denominator bit lengths
/// so that values far outside the `f64` range stay finite.
fn rat_log_abs(x: &lpq_core::Rat) -> Option<f64> {
    use num_traits::Zero;
    if x.is_zero() {
        return None;
    }
    let n = x.numer().abs();
    let d = x.denom().abs();
    let ln2 = core::f64::consts::LN_2;
    // log(m) for a big integer via leading 64 bits + bit length
    let log_big = |v: &num_bigint::BigInt| -> f64 {
        let bits = v.bits();
        if bits <= 52 {
            let (_, digits) = v.to_u64_digits();
            f64::ln(digits.first().copied().unwrap_or(0) as f64)
        } else {
            let shift = bits - 52;
            let top: num_bigint::BigInt = v >> shift;
            let (_, digits) = top.to_u64_digits();
            f64::ln(digits[0] as f64) + shift as f64 * ln2
        }
    };
    Some(log_big(&n) - log_big(&d))
}

/// Roots of `p` by Aberth-Ehrlich iteration with all evaluation done on
/// log-magnitude representations, so coefficients like `q^{-k(k-1)/2}` that
/// underflow `f64` are handled exactly where the companion matrix cannot be.
///
/// Initial moduli come from the upper convex hull of `(k, log|c_k|)` (the
/// Newton-polygon estimate of root magnitudes).
pub fn aberth_roots(p: &RatPoly) -> Vec<Complex64> {
    let d = p.degree();
    if d == 0 {
        return Vec::new();
    }
    // (sign, log|c_k|); absent coefficients are tracked as None
    let logs: Vec<Option<(f64, f64)>> = (0..=d)
        .map(|k| {
            let c = p.coeff(k);
            rat_log_abs(&c).map(|l| (if c.is_positive() { 1.0 } else { -1.0 }, l))
        })
        .collect();

    // upper convex hull of (k, log|c_k|): root moduli per hull segment
    let pts: Vec<(usize, f64)> = logs
        .iter()
        .enumerate()
        .filter_map(|(k, o)| o.map(|(_, l)| (k, l)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(k, l) in &pts {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            // keep only upward-convex turns
            if (l2 - l1) * (k - k1) as f64 <= (l - l1) * (k2 - k1) as f64 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((k, l));
    }
    let mut init = Vec::with_capacity(d);
    for w in hull.windows(2) {
        let (k1, l1) = w[0];
        let (k2, l2) = w[1];
        // |root| ~ exp((l1 - l2)/(k2 - k1)) for the k2 - k1 roots of this segment
        let log_r = (l1 - l2) / (k2 - k1) as f64;
        let scale = f64::exp(log_r.clamp(-600.0, 600.0));
        for j in 0..(k2 - k1) {
            let ang = 2.0 * core::f64::consts::PI * (j as f64 + 0.5) / (k2 - k1) as f64 + 0.45;
            init.push(Complex64::from_polar(scale, ang));
        }
    }

    // log-balanced evaluation of p'(z)/p(z): terms c_k z^k as s_k e^{L_k + k log z}
    let eval_ratio = |z: Complex64| -> Option<Complex64> {
        let lz = z.ln();
        let mut mx = f64::NEG_INFINITY;
        for (k, o) in logs.iter().enumerate() {
            if let Some((_, l)) = o {
                mx = mx.max(l + k as f64 * lz.re);
            }
        }
        let mut val = Complex64::new(0.0, 0.0);
        let mut dval = Complex64::new(0.0, 0.0);
        for (k, o) in logs.iter().enumerate() {
            if let Some((s, l)) = o {
                let t = Complex64::new(l + k as f64 * lz.re - mx, k as f64 * lz.im);
                let term = s * t.exp();
                val += term;
                if k >= 1 {
                    dval += term * (k as f64) / z;
                }
            }
        }
        if val.norm() == 0.0 {
            return None;
        }
        Some(dval / val)
    };

    let mut roots = init;
    for _ in 0..400 {
        let mut maxd = 0.0f64;
        let snapshot = roots.clone();
        for i in 0..d {
            let z = snapshot[i];
            let Some(ratio) = eval_ratio(z) else { continue };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, r) in snapshot.iter().enumerate() {
                if j != i {
                    s += (z - r).inv();
                }
            }
            let denom = ratio - s;
            if denom.norm() == 0.0 {
                continue;
            }
            let step = denom.inv();
            roots[i] = z - step;
            maxd = maxd.max(step.norm() / (1.0 + z.norm()));
        }
        if maxd < 1e-13 {
            break;
        }
    }
    roots
}

/// Nonreal zero count `Z_c` by the numeric oracle: companion matrix when all
/// coefficients are comfortably within `f64` range, Aberth otherwise.
pub fn oracle_z_c(p: &RatPoly) -> usize {
    let in_range = (0..=p.degree()).all(|k| {
        match rat_log_abs(&p.coeff(k)) {
            None => true,
            Some(l) => l.abs() < 300.0 * core::f64::consts::LN_2,
        }
    });
    let roots = if in_range && p.degree() <= 24 {
        companion_roots(p)
    } else {
        aberth_roots(p)
    };
    split_real_nonreal(&roots).1
}

/// Real-root count against by the companion-matrix oracle (for cross-checks
/// against exact Sturm counting on moderate inputs).
pub fn oracle_real_count(p: &RatPoly) -> usize {
    companion_counts(p).0
}
