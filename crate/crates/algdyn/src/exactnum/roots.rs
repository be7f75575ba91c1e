//! Numeric eigenvalue-modulus estimation on top of exact characteristic
//! polynomials.
//!
//! The characteristic polynomial is computed exactly, split into squarefree
//! factors (exactly, via Yun's algorithm), and only then are the simple roots
//! of each factor refined numerically. Splitting first keeps multiple roots
//! from degrading the achievable accuracy.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactnum::{IntMatrix, UniPoly};

/// Default absolute tolerance for root moduli.
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;

impl IntMatrix {
    /// Moduli of the complex eigenvalues, sorted in descending order, each
    /// accurate to [`DEFAULT_ROOT_TOL`].
    pub fn spectral_moduli(&self) -> Result<Vec<f64>> {
        self.spectral_moduli_with_tol(DEFAULT_ROOT_TOL)
    }

    pub fn spectral_moduli_with_tol(&self, tol: f64) -> Result<Vec<f64>> {
        let mut moduli = Vec::with_capacity(self.size());
        for (factor, mult) in self.char_poly().squarefree_decomposition()? {
            for root in complex_roots(&factor, tol)? {
                for _ in 0..mult {
                    moduli.push(root.norm());
                }
            }
        }
        if moduli.len() != self.size() {
            return Err(Error::Internal(format!(
                "expected {} eigenvalue moduli, found {}",
                self.size(),
                moduli.len()
            )));
        }
        moduli.sort_by(|a, b| b.partial_cmp(a).expect("moduli are finite"));
        Ok(moduli)
    }
}

/// All complex roots of a squarefree polynomial, by Aberth–Ehrlich iteration.
pub fn complex_roots(p: &UniPoly, tol: f64) -> Result<Vec<Complex64>> {
    let deg = match p.degree() {
        None => return Err(Error::Domain("roots of the zero polynomial".into())),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let coeffs = p.f64_coeffs();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Numeric(
            "polynomial coefficients overflow f64 during root isolation".into(),
        ));
    }
    // Monic scale.
    let lead = coeffs[deg];
    let c: Vec<f64> = coeffs.iter().map(|a| a / lead).collect();

    if deg == 1 {
        return Ok(vec![Complex64::new(-c[0], 0.0)]);
    }
    if deg == 2 {
        let (b, a0) = (c[1], c[0]);
        let disc = Complex64::new(b * b - 4.0 * a0, 0.0).sqrt();
        let bb = Complex64::new(-b, 0.0);
        return Ok(vec![(bb + disc) / 2.0, (bb - disc) / 2.0]);
    }

    // Initial guesses on a circle of the Cauchy bound radius, with an angular
    // offset so real-coefficient symmetry cannot stall the iteration.
    let radius = 1.0 + c[..deg].iter().map(|a| a.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (deg as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let eval = |x: Complex64| -> (Complex64, Complex64) {
        // Horner for p and p' simultaneously.
        let mut v = Complex64::new(c[deg], 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for k in (0..deg).rev() {
            dv = dv * x + v;
            v = v * x + c[k];
        }
        (v, dv)
    };

    let target = (tol * 0.01).max(1e-14);
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for j in 0..deg {
            let (v, dv) = eval(z[j]);
            if v.norm() == 0.0 {
                continue;
            }
            let w = if dv.norm() > 0.0 {
                v / dv
            } else {
                Complex64::new(target, target)
            };
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..deg {
                if k != j {
                    s += (z[j] - z[k]).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() > 1e-300 { w / denom } else { w };
            z[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < target {
            return Ok(z);
        }
    }
    Err(Error::Numeric(format!(
        "root refinement did not converge for degree-{deg} factor (tol {tol:e})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ln_bigint;
    use num_traits::{Signed, Zero};

    fn im(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_has_unit_moduli() {
        for d in 1..=4 {
            let m = IntMatrix::identity(d).spectral_moduli().unwrap();
            assert_eq!(m.len(), d);
            for v in m {
                assert!((v - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn fibonacci_square_moduli() {
        // Roots of T^2 - 3T + 1 are (3 ± √5)/2.
        let m = im(&[vec![2, 1], vec![1, 1]]).spectral_moduli().unwrap();
        let golden_sq = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((m[0] - golden_sq).abs() < 1e-9);
        assert!((m[1] - (3.0 - 5.0f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn rotation_has_two_unit_moduli() {
        let m = im(&[vec![0, 1], vec![-1, 0]]).spectral_moduli().unwrap();
        assert!((m[0] - 1.0).abs() < 1e-9);
        assert!((m[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn moduli_product_matches_determinant() {
        let cases = [
            vec![vec![2, 1], vec![1, 1]],
            vec![vec![1, 2, 0], vec![3, -1, 4], vec![0, 5, 2]],
            vec![
                vec![3, 1, 0, 0],
                vec![1, 2, 1, 0],
                vec![0, 1, 1, 1],
                vec![0, 0, 1, 4],
            ],
        ];
        for rows in cases {
            let a = im(&rows);
            let det = a.det();
            if det.is_zero() {
                continue;
            }
            let log_prod: f64 = a.spectral_moduli().unwrap().iter().map(|m| m.ln()).sum();
            assert!((log_prod - ln_bigint(&det.abs())).abs() < 1e-6);
        }
    }

    #[test]
    fn nilpotent_moduli_are_zero() {
        let m = im(&[vec![0, 1], vec![0, 0]]).spectral_moduli().unwrap();
        assert!(m[0].abs() < 1e-9 && m[1].abs() < 1e-9);
    }
}
