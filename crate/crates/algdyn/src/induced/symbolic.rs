//! Symbolic linear algebra over the polynomial ring: determinants by
//! bitmask dynamic programming and Cramer solves producing rational-function
//! coordinates.

use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, RatFunc};

/// Determinant of a square matrix of polynomials.
///
/// Dynamic programming over column subsets: `f(S)` is the minor of the first
/// `|S|` rows on columns `S`, so each entry is touched once per subset rather
/// than once per permutation.
pub(crate) fn det_poly(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = mat.len();
    assert!(n > 0 && mat.iter().all(|r| r.len() == n));
    assert!(n <= 20, "determinant size out of supported range");
    let vars = mat[0][0].vars();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // f indexed by bitmask; only masks with popcount = processed rows matter
    let mut f = vec![MultiPoly::zero(vars); (full as usize) + 1];
    f[0] = MultiPoly::one(vars);
    for row in 0..n {
        // iterate masks with popcount row+1, descending order not required
        for mask in (0..=full).rev() {
            if (mask.count_ones() as usize) != row + 1 {
                continue;
            }
            let mut acc = MultiPoly::zero(vars);
            // Laplace expansion along the last processed row: sign (−1)^(row+j)
            let mut sign_flip = row % 2 == 1;
            for c in 0..n {
                let bit = 1u32 << c;
                if mask & bit == 0 {
                    continue;
                }
                let entry = &mat[row][c];
                if !entry.is_zero() {
                    let sub = &f[(mask ^ bit) as usize];
                    if !sub.is_zero() {
                        let contrib = entry.mul(sub);
                        acc = if sign_flip {
                            acc.sub(&contrib)
                        } else {
                            acc.add(&contrib)
                        };
                    }
                }
                sign_flip = !sign_flip;
            }
            f[mask as usize] = acc;
        }
    }
    f[full as usize].clone()
}

/// Solve `L·y = rhs` by Cramer's rule. Fails when `det L` vanishes
/// identically.
pub(crate) fn cramer_solve(l: &[Vec<MultiPoly>], rhs: &[MultiPoly]) -> Result<Vec<RatFunc>> {
    let n = l.len();
    assert_eq!(rhs.len(), n);
    let det = det_poly(l);
    if det.is_zero() {
        return Err(Error::MapUndefined(
            "symbolic multiplication operator is identically singular".into(),
        ));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut replaced: Vec<Vec<MultiPoly>> = l.to_vec();
        for (row, r) in rhs.iter().enumerate() {
            replaced[row][i] = r.clone();
        }
        out.push(RatFunc::new(det_poly(&replaced), det.clone())?);
    }
    Ok(out)
}
