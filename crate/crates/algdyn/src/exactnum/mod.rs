//! Exact scalars, matrices, univariate polynomials and eigenvalue moduli.
//!
//! Everything here computes over arbitrary-precision rationals; the only
//! floating-point surface is [`IntMatrix::spectral_moduli`], which refines the
//! complex roots of an exactly-computed characteristic polynomial.

mod matrix;
mod roots;
mod unipoly;

pub use matrix::{IntMatrix, RatMatrix};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// Exact scalar of the whole library: a reduced arbitrary-precision rational.
pub type Rat = BigRational;

/// Shorthand for an integer scalar.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Natural logarithm of a positive big integer, stable for values far beyond
/// the `f64` range.
pub fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "ln_bigint requires a positive argument");
    let bits = n.bits();
    if bits <= 52 {
        return n.to_f64().expect("small BigInt fits in f64").ln();
    }
    let shift = bits - 52;
    let top = (n >> shift).to_f64().expect("52-bit head fits in f64");
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln_rat(r: &Rat) -> f64 {
    assert!(r.is_positive(), "ln_rat requires a positive argument");
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

/// Lexicographically ordered `k`-subsets of `{0, …, n-1}`.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_lex_order() {
        assert_eq!(
            k_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn ln_bigint_matches_f64_on_small_values() {
        let n = BigInt::from(12345u32);
        assert!((ln_bigint(&n) - 12345f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn ln_bigint_handles_huge_values() {
        let n = BigInt::from(2u32).pow(4000);
        let expected = 4000.0 * std::f64::consts::LN_2;
        assert!((ln_bigint(&n) - expected).abs() < 1e-6);
    }
}
