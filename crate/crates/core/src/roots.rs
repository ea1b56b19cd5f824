//! Complex polynomial root finding.
//!
//! Degrees 1 and 2 are solved in closed form (the quadratic formula keeps a
//! double root exactly double, which matters for boundary-sensitive membership
//! tests). Higher degrees use simultaneous Aberth–Ehrlich iteration with a
//! backward-error acceptance test, and non-convergence is reported as an
//! error instead of returning junk roots.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 500;

/// All roots (with multiplicity) of `c[0] + c[1] x + ... + c[n] x^n`.
///
/// Coefficients are given in ascending order. Leading zero coefficients are
/// trimmed; a constant polynomial has no roots. Target absolute accuracy is
/// 1e-10 for simple roots of degree <= 12.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.len() > 1 && c.last().unwrap().norm() == 0.0 {
        c.pop();
    }
    if c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidParameter(
            "polynomial coefficients must be finite".into(),
        ));
    }
    match c.len() {
        0 | 1 => Ok(Vec::new()),
        2 => Ok(vec![-c[0] / c[1]]),
        3 => Ok(quadratic_roots(c[0], c[1], c[2])),
        _ => aberth_ehrlich(&c),
    }
}

/// Roots of `c0 + c1 x + c2 x^2` by the numerically stable quadratic formula.
fn quadratic_roots(c0: Complex64, c1: Complex64, c2: Complex64) -> Vec<Complex64> {
    let disc = (c1 * c1 - 4.0 * c2 * c0).sqrt();
    // Pick the sign that avoids cancellation in -c1 ± disc.
    let q = if (c1.conj() * disc).re >= 0.0 {
        -0.5 * (c1 + disc)
    } else {
        -0.5 * (c1 - disc)
    };
    if q.norm() == 0.0 {
        // c1 = disc = 0: double root at the vertex.
        let r = -c1 / (2.0 * c2);
        return vec![r, r];
    }
    vec![q / c2, c0 / q]
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// Simultaneous Aberth–Ehrlich iteration for degree >= 3.
fn aberth_ehrlich(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];

    // Cauchy bound on root moduli; start on a circle with an angular offset
    // so symmetric polynomials do not trap the iteration in a symmetric cycle.
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|ck| (ck / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.35) / n as f64;
            radius * 0.8 * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    let scale: f64 = c.iter().map(|ck| ck.norm()).fold(0.0, f64::max);
    let mut max_step = f64::INFINITY;

    for _ in 0..MAX_ITERATIONS {
        max_step = 0.0;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                // Flat spot: nudge off it.
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        repulsion += 1.0 / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-14 {
            return Ok(z);
        }
    }

    // The iteration stalled (typical for multiple roots, where individual
    // roots are only determined to ~eps^(1/m)). Accept the cluster if each
    // iterate is a root of a nearby polynomial in the backward-error sense.
    let tol = scale * (n as f64) * 1e-12;
    if max_step < 1e-6 && z.iter().all(|&zi| backward_error(c, zi) <= tol) {
        return Ok(z);
    }
    Err(Error::RootFinding(format!(
        "degree {n}: residual step {max_step:.2e} after {MAX_ITERATIONS} iterations"
    )))
}

/// |p(z)| relative to the evaluation scale Σ |c_k||z|^k.
fn backward_error(c: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let mut s = 0.0;
    let mut zn = 1.0;
    for ck in c {
        s += ck.norm() * zn;
        zn *= z.norm();
    }
    p.norm() / s.max(f64::MIN_POSITIVE)
}

/// Monic polynomial coefficients (ascending) with the given roots.
pub fn monic_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= r * ck;
        }
        c = next;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn sort_by_re_im(v: &mut [Complex64]) {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    }

    #[test]
    fn linear_and_constant() {
        let roots = polynomial_roots(&[Complex64::new(-2.0, 0.0), Complex64::new(1.0, 0.0)])
            .unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        assert!(polynomial_roots(&[Complex64::new(3.0, 0.0)]).unwrap().is_empty());
    }

    #[test]
    fn quadratic_double_root_is_exact() {
        // (x - 1)^2 = 1 - 2x + x^2: the discriminant is exactly zero and the
        // double root must not leak into the open unit disk.
        let roots = polynomial_roots(&[
            Complex64::new(1.0, 0.0),
            Complex64::new(-2.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!(r, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn monic_from_roots_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..=12usize {
            let mut roots: Vec<Complex64> = Vec::new();
            // Rejection-sample well separated roots in the disk of radius 2.
            while roots.len() < n {
                let cand = Complex64::new(
                    4.0 * rng.random::<f64>() - 2.0,
                    4.0 * rng.random::<f64>() - 2.0,
                );
                if roots.iter().all(|r| (r - cand).norm() > 0.15) {
                    roots.push(cand);
                }
            }
            let coeffs = monic_from_roots(&roots);
            let mut found = polynomial_roots(&coeffs).unwrap();
            sort_by_re_im(&mut found);
            sort_by_re_im(&mut roots);
            for (a, b) in found.iter().zip(roots.iter()) {
                assert!(
                    (a - b).norm() < 1e-10,
                    "degree {n}: root error {:.3e}",
                    (a - b).norm()
                );
            }
        }
    }

    #[test]
    fn triple_root_cluster_accepted() {
        // (x - 0.5)^3: individual roots are only good to ~1e-5 but the
        // finder must still succeed with a tight cluster, not error out.
        let r = Complex64::new(0.5, 0.0);
        let coeffs = monic_from_roots(&[r, r, r]);
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 3);
        for z in roots {
            assert!((z - r).norm() < 1e-4);
        }
    }
}
