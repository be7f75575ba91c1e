//! Truncated exponential and logarithm in an algebra, and the symbolic
//! verification that a generalized monomial map is conjugate, through the
//! coordinate change `(a, h) ↦ a·exp(h)` applied factorwise, to the product
//! of a classical monomial map and a block-linear map.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{product_algebra, quotient_algebra, AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, IntMatrix, Rat, UniPoly};
use crate::multipoly::{MultiPoly, RatFunc};

use super::symbolic::cramer_solve;

/// `exp(h) = Σ h^j / j!`, finite because `h` must be nilpotent.
pub fn exp_element(alg: &Algebra, h: &AlgElement) -> Result<AlgElement> {
    let unit = alg
        .find_unit()
        .ok_or_else(|| Error::Domain("exp needs a unital algebra".into()))?;
    let d = alg.dim();
    let mut acc = unit.clone();
    let mut power = unit;
    let mut factorial = Rat::one();
    for j in 1..=d {
        power = alg.mul(&power, h)?;
        if power.is_zero() {
            return Ok(acc);
        }
        if j == d {
            return Err(Error::Domain("exp argument is not nilpotent".into()));
        }
        factorial *= rat_int(j as i64);
        acc = acc.add(&power.scale(&(Rat::one() / &factorial)));
    }
    Ok(acc)
}

/// `log(u) = Σ (−1)^(j−1) n^j / j` for `u = 1 + n` with `n` nilpotent.
pub fn log_element(alg: &Algebra, u: &AlgElement) -> Result<AlgElement> {
    let unit = alg
        .find_unit()
        .ok_or_else(|| Error::Domain("log needs a unital algebra".into()))?;
    let n = u.sub(&unit);
    let d = alg.dim();
    let mut acc = alg.zero_element();
    let mut power = unit;
    for j in 1..=d {
        power = alg.mul(&power, &n)?;
        if power.is_zero() {
            return Ok(acc);
        }
        if j == d {
            return Err(Error::Domain(
                "log argument is not unipotent (u − 1 must be nilpotent)".into(),
            ));
        }
        let sign = if j % 2 == 1 { Rat::one() } else { -Rat::one() };
        acc = acc.add(&power.scale(&(sign / rat_int(j as i64))));
    }
    Ok(acc)
}

/// Symbolic truncated exponential; the argument must vanish after at most
/// `dim` successive products (true for any element of a nilpotent ideal).
fn exp_sym(alg: &Algebra, h: &[MultiPoly], unit: &[Rat]) -> Result<Vec<MultiPoly>> {
    let vars = h[0].vars();
    let d = alg.dim();
    let mut acc: Vec<MultiPoly> = unit
        .iter()
        .map(|u| MultiPoly::constant(vars, u.clone()))
        .collect();
    let mut power = acc.clone();
    let mut factorial = Rat::one();
    for j in 1..=d {
        power = alg.mul_sym(&power, h);
        if power.iter().all(MultiPoly::is_zero) {
            return Ok(acc);
        }
        if j == d {
            return Err(Error::Domain(
                "symbolic exp argument is not nilpotent".into(),
            ));
        }
        factorial *= rat_int(j as i64);
        let inv = Rat::one() / &factorial;
        acc = acc
            .iter()
            .zip(&power)
            .map(|(a, p)| a.add(&p.scale(&inv)))
            .collect();
    }
    Ok(acc)
}

/// An abelian algebra explicitly presented as a product of local factors
/// `ℚ[t]/(t^{l_i})`; the maximal-ideal basis of each factor is known by
/// construction.
#[derive(Debug, Clone)]
pub struct LocalProductPresentation {
    sizes: Vec<usize>,
}

impl LocalProductPresentation {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.iter().any(|&l| l == 0) {
            return Err(Error::Domain(
                "local product needs positive factor sizes".into(),
            ));
        }
        Ok(LocalProductPresentation { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dim(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The presented algebra, basis grouped factor by factor.
    pub fn algebra(&self) -> Result<Algebra> {
        let factors: Vec<Algebra> = self
            .sizes
            .iter()
            .map(|&l| {
                let mut coeffs = vec![Rat::zero(); l + 1];
                coeffs[l] = Rat::one();
                quotient_algebra(&UniPoly::from_coeffs(coeffs), 't')
            })
            .collect::<Result<_>>()?;
        product_algebra(&factors)
    }
}

/// Verify symbolically that `F_A ∘ Φ = Φ ∘ (f_A, T_A)` for the presented
/// local product, where `Φ` sends `((a_i), (h_i))` to `Σ a_i exp(h_i)`,
/// `f_A` is the classical monomial map on the base coordinates and `T_A`
/// the block-linear map on the maximal-ideal coordinates. The comparison is
/// exact equality of reduced rational functions.
pub fn conjugacy_check_local(pres: &LocalProductPresentation, a: &IntMatrix) -> Result<bool> {
    if a.det().is_zero() {
        return Err(Error::Domain(
            "conjugacy check needs a nonsingular exponent matrix".into(),
        ));
    }
    let alg = pres.algebra()?;
    let dim_v = alg.dim();
    let d = a.size();
    let vars = d * dim_v;
    let unit = alg.find_unit().expect("product of unital factors").coords;

    // per-factor algebras and their offsets inside the product basis
    let factors: Vec<Algebra> = pres
        .sizes
        .iter()
        .map(|&l| {
            let mut coeffs = vec![Rat::zero(); l + 1];
            coeffs[l] = Rat::one();
            quotient_algebra(&UniPoly::from_coeffs(coeffs), 't')
        })
        .collect::<Result<_>>()?;
    let offsets: Vec<usize> = pres
        .sizes
        .iter()
        .scan(0usize, |acc, &l| {
            let o = *acc;
            *acc += l;
            Some(o)
        })
        .collect();

    // Φ_j as a symbolic element of the product algebra: variable block j holds
    // (a, h-coordinates) for every factor in order
    let phi: Vec<Vec<MultiPoly>> = (0..d)
        .map(|j| -> Result<Vec<MultiPoly>> {
            let mut coords = vec![MultiPoly::zero(vars); dim_v];
            for (fi, factor) in factors.iter().enumerate() {
                let off = offsets[fi];
                let l = pres.sizes[fi];
                let a_var = MultiPoly::var(vars, j * dim_v + off);
                let mut h = vec![MultiPoly::zero(vars); l];
                for s in 1..l {
                    h[s] = MultiPoly::var(vars, j * dim_v + off + s);
                }
                let factor_unit = factor.find_unit().expect("quotient is unital").coords;
                let eh = exp_sym(factor, &h, &factor_unit)?;
                for s in 0..l {
                    coords[off + s] = coords[off + s].add(&eh[s].mul(&a_var));
                }
            }
            Ok(coords)
        })
        .collect::<Result<_>>()?;

    // left side: F_A applied to (Φ_1, …, Φ_d)
    let mut lhs: Vec<Vec<RatFunc>> = Vec::with_capacity(d);
    for r in 0..d {
        let exps: Vec<BigInt> = (0..d).map(|j| a.get(r, j).clone()).collect();
        lhs.push(symbolic_monomial_product(&alg, &phi, &exps, &unit, vars)?);
    }

    // right side: Φ applied to (f_A(a-vars), T_A(h-vars))
    let mut rhs: Vec<Vec<RatFunc>> = Vec::with_capacity(d);
    for r in 0..d {
        let mut coords = vec![RatFunc::zero(vars); dim_v];
        for (fi, factor) in factors.iter().enumerate() {
            let off = offsets[fi];
            let l = pres.sizes[fi];
            // monomial image of the base coordinate: Π_j a_j^(A_rj)
            let mut a_img = RatFunc::one(vars);
            for j in 0..d {
                let e = a.get(r, j);
                let base = RatFunc::var(vars, j * dim_v + off);
                let count = e
                    .abs()
                    .to_usize()
                    .ok_or_else(|| Error::Domain("exponent out of range".into()))?;
                let pw = base.pow(if e.is_negative() {
                    -(count as i64)
                } else {
                    count as i64
                })?;
                a_img = a_img.mul(&pw);
            }
            // linear image of the ideal coordinates: h'_r = Σ_j A_rj h_j
            let mut h = vec![MultiPoly::zero(vars); l];
            for s in 1..l {
                for j in 0..d {
                    let e = a.get(r, j);
                    if e.is_zero() {
                        continue;
                    }
                    let coeff = Rat::from_integer(e.clone());
                    h[s] = h[s].add(&MultiPoly::var(vars, j * dim_v + off + s).scale(&coeff));
                }
            }
            let factor_unit = factor.find_unit().expect("quotient is unital").coords;
            let eh = exp_sym(factor, &h, &factor_unit)?;
            for s in 0..l {
                coords[off + s] = a_img.mul(&RatFunc::from_poly(eh[s].clone()));
            }
        }
        rhs.push(coords);
    }

    Ok(lhs == rhs)
}

/// `Π_j x_j^(e_j)` with rational-function output (shared with the monomial
/// map construction, but local to keep the two call sites independent).
fn symbolic_monomial_product(
    alg: &Algebra,
    elems: &[Vec<MultiPoly>],
    exps: &[BigInt],
    unit: &[Rat],
    vars: usize,
) -> Result<Vec<RatFunc>> {
    let embed_unit: Vec<MultiPoly> = unit
        .iter()
        .map(|u| MultiPoly::constant(vars, u.clone()))
        .collect();
    let mut pos = embed_unit.clone();
    let mut neg = embed_unit;
    let mut has_neg = false;
    for (x, e) in elems.iter().zip(exps) {
        let count = e
            .abs()
            .to_usize()
            .ok_or_else(|| Error::Domain("exponent out of range".into()))?;
        if e.is_negative() {
            has_neg = true;
            for _ in 0..count {
                neg = alg.mul_sym(&neg, x);
            }
        } else {
            for _ in 0..count {
                pos = alg.mul_sym(&pos, x);
            }
        }
    }
    if !has_neg {
        return Ok(pos.into_iter().map(RatFunc::from_poly).collect());
    }
    let l = alg.left_mult_matrix_sym(&neg);
    cramer_solve(&l, &pos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quotient_algebra;

    fn truncated(m: usize) -> Algebra {
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[m] = Rat::one();
        quotient_algebra(&UniPoly::from_coeffs(coeffs), 't').unwrap()
    }

    #[test]
    fn exp_examples() {
        let v3 = truncated(3);
        let zero = v3.zero_element();
        assert_eq!(exp_element(&v3, &zero).unwrap(), v3.find_unit().unwrap());
        // exp(t) = 1 + t + t²/2
        let t = v3.basis_element(1);
        let e = exp_element(&v3, &t).unwrap();
        assert_eq!(e.coords[0], rat_int(1));
        assert_eq!(e.coords[1], rat_int(1));
        assert_eq!(e.coords[2], crate::exactnum::rat(1, 2));
    }

    #[test]
    fn log_inverts_exp() {
        let v3 = truncated(3);
        let t = v3.basis_element(1);
        let h = t
            .scale(&crate::exactnum::rat(3, 7))
            .add(&v3.basis_element(2));
        let back = log_element(&v3, &exp_element(&v3, &h).unwrap()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let v3 = truncated(3);
        assert!(exp_element(&v3, &v3.find_unit().unwrap()).is_err());
        let split = crate::algebra::split_algebra(2).unwrap();
        assert!(exp_element(&split, &split.basis_element(0)).is_err());
    }

    #[test]
    fn exp_is_multiplicative_on_commuting_nilpotents() {
        let v4 = truncated(4);
        let h1 = v4.basis_element(1);
        let h2 = v4.basis_element(2).scale(&rat_int(5));
        let lhs = exp_element(&v4, &h1.add(&h2)).unwrap();
        let rhs = v4
            .mul(
                &exp_element(&v4, &h1).unwrap(),
                &exp_element(&v4, &h2).unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugacy_on_dual_numbers_squaring() {
        let pres = LocalProductPresentation::new(vec![2]).unwrap();
        let a = IntMatrix::from_rows(&[vec![2]]).unwrap();
        assert!(conjugacy_check_local(&pres, &a).unwrap());
    }

    #[test]
    fn conjugacy_identity_matrix() {
        let pres = LocalProductPresentation::new(vec![3]).unwrap();
        assert!(conjugacy_check_local(&pres, &IntMatrix::identity(2)).unwrap());
    }

    #[test]
    fn conjugacy_fibonacci_on_cubic_local() {
        let pres = LocalProductPresentation::new(vec![3]).unwrap();
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        assert!(conjugacy_check_local(&pres, &a).unwrap());
    }

    #[test]
    fn conjugacy_on_a_product_of_locals() {
        let pres = LocalProductPresentation::new(vec![2, 1]).unwrap();
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        assert!(conjugacy_check_local(&pres, &a).unwrap());
    }

    #[test]
    fn conjugacy_rejects_singular_matrix() {
        let pres = LocalProductPresentation::new(vec![2]).unwrap();
        let sing = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(conjugacy_check_local(&pres, &sing).is_err());
    }

    #[test]
    fn conjugacy_with_negative_exponents() {
        let pres = LocalProductPresentation::new(vec![2]).unwrap();
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![0, -1]]).unwrap();
        assert!(conjugacy_check_local(&pres, &a).unwrap());
    }
}
