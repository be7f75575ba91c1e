//! Symbolic construction of the rational maps an algebra induces.
//!
//! Two families: the map of a single-variable rational function on a unital
//! power-associative algebra, and the generalized monomial map of an integer
//! exponent matrix on a power of an abelian algebra. The exp/log coordinate
//! change is implemented for explicitly presented local products and used to
//! verify the conjugacy onto a product of a classical monomial map and a
//! linear map.

mod explog;
mod symbolic;

pub use explog::{conjugacy_check_local, exp_element, log_element, LocalProductPresentation};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::{IntMatrix, Rat, UniPoly};
use crate::multipoly::{AffineRationalMap, MultiPoly, RatFunc};
use symbolic::cramer_solve;

/// Reduced single-variable rational function `Q/P` with `P` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniRationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl UniRationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree_or_zero() > 0 {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        } else {
            (num, den)
        };
        // make the denominator monic
        let lc = den.leading_coeff().expect("den nonzero").clone();
        let inv = Rat::one() / lc;
        Ok(UniRationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree_or_zero() == 0
    }

    /// `deg φ = max(deg Q, deg P)`.
    pub fn deg(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::Domain("division by the zero function".into()));
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn neg(&self) -> Self {
        UniRationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            if self.num.is_zero() {
                return Err(Error::Domain("negative power of zero".into()));
            }
            return Self::new(self.den.pow((-n) as usize), self.num.pow((-n) as usize));
        }
        Self::new(self.num.pow(n as usize), self.den.pow(n as usize))
    }

    /// Composition `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let e = self.deg();
        let hat = |p: &UniPoly| -> UniPoly {
            let mut acc = UniPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = inner.num.pow(i).mul(&inner.den.pow(e - i)).scale(c);
                acc = acc.add(&term);
            }
            acc
        };
        let num = hat(&self.num);
        let den = hat(&self.den);
        if den.is_zero() {
            return Err(Error::MapUndefined(
                "denominator vanishes identically under composition".into(),
            ));
        }
        Self::new(num, den)
    }

    /// `n`-fold self-composition, `n ≥ 1`.
    pub fn iterate(&self, n: usize) -> Result<Self> {
        assert!(n >= 1, "iterate needs n >= 1");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Render as `(num)/(den)` with the given variable letter.
    pub fn render(&self, var: char) -> String {
        if self.is_polynomial() {
            self.num.render(var)
        } else {
            format!("({})/({})", self.num.render(var), self.den.render(var))
        }
    }
}

/// Evaluate a polynomial at a symbolic algebra element by Horner's scheme.
/// Valid in any power-associative algebra because all products stay inside
/// the subalgebra generated by `v`.
fn horner_sym(alg: &Algebra, p: &UniPoly, v: &[MultiPoly], unit: &[Rat]) -> Vec<MultiPoly> {
    let vars = v[0].vars();
    let embed = |c: &Rat| -> Vec<MultiPoly> {
        unit.iter()
            .map(|u| MultiPoly::constant(vars, u * c))
            .collect()
    };
    let mut acc: Vec<MultiPoly> = vec![MultiPoly::zero(vars); alg.dim()];
    for c in p.coeffs().iter().rev() {
        acc = alg.mul_sym(&acc, v);
        if !c.is_zero() {
            let e = embed(c);
            acc = acc.iter().zip(&e).map(|(a, b)| a.add(b)).collect();
        }
    }
    acc
}

/// The rational self-map `v ↦ P(v)^{-1} Q(v)` of a unital power-associative
/// algebra, in indeterminate coordinates.
pub fn induce_univariate(alg: &Algebra, phi: &UniRationalFunction) -> Result<AffineRationalMap> {
    let flags = alg.predicates();
    if !flags.power_associative || !flags.unitary {
        return Err(Error::Domain(
            "induced maps need a unital power-associative algebra".into(),
        ));
    }
    let unit = alg.find_unit().expect("unitary was just checked").coords;
    let d = alg.dim();
    let v = alg.generic_element(d, 0);
    let qv = horner_sym(alg, phi.num(), &v, &unit);
    let pv = horner_sym(alg, phi.den(), &v, &unit);
    let l = alg.left_mult_matrix_sym(&pv);
    let coords = cramer_solve(&l, &qv).map_err(|e| match e {
        Error::MapUndefined(_) => Error::MapUndefined(
            "den(φ) evaluates to an identically singular element; φ is not inducible".into(),
        ),
        other => other,
    })?;
    AffineRationalMap::new(coords)
}

/// Exponent matrix together with the coefficient algebra of a generalized
/// monomial map.
#[derive(Debug, Clone)]
pub struct MonomialSpec {
    exponents: IntMatrix,
    algebra: Algebra,
}

impl MonomialSpec {
    pub fn new(exponents: IntMatrix, algebra: Algebra) -> Result<Self> {
        if exponents.det().is_zero() {
            return Err(Error::Domain(
                "monomial exponent matrix must have nonzero determinant".into(),
            ));
        }
        if !algebra.predicates().abelian {
            return Err(Error::Domain(
                "generalized monomial maps need an abelian algebra".into(),
            ));
        }
        Ok(MonomialSpec { exponents, algebra })
    }

    pub fn exponents(&self) -> &IntMatrix {
        &self.exponents
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
}

/// Product `Π_j x_j^(e_j)` of symbolic algebra elements with integer
/// exponents; negative exponents go through one Cramer solve.
fn monomial_block(
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
    let mut neg = embed_unit.clone();
    let mut has_neg = false;
    for (x, e) in elems.iter().zip(exps) {
        let count = e
            .abs()
            .to_usize()
            .ok_or_else(|| Error::Domain("exponent too large for symbolic expansion".into()))?;
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
    // pos · neg^{-1} = L_neg^{-1}(pos) in a commutative associative algebra
    let l = alg.left_mult_matrix_sym(&neg);
    cramer_solve(&l, &pos).map_err(|e| match e {
        Error::MapUndefined(_) => Error::MapUndefined(
            "negative power of an element with identically singular multiplication".into(),
        ),
        other => other,
    })
}

/// The generalized monomial map `F_A` on `d` copies of the algebra, as an
/// affine rational map on `d·dim(V)` coordinates. Coordinates are grouped per
/// copy: copy `j` owns variables `j·dim(V) … (j+1)·dim(V)−1`.
pub fn induce_monomial(spec: &MonomialSpec) -> Result<AffineRationalMap> {
    let alg = spec.algebra();
    let a = spec.exponents();
    let d = a.size();
    let dim_v = alg.dim();
    let vars = d * dim_v;
    let unit = alg.find_unit().expect("abelian implies unitary").coords;
    let elems: Vec<Vec<MultiPoly>> = (0..d)
        .map(|j| alg.generic_element(vars, j * dim_v))
        .collect();
    let mut coords = Vec::with_capacity(vars);
    for r in 0..d {
        let exps: Vec<BigInt> = (0..d).map(|j| a.get(r, j).clone()).collect();
        let block = monomial_block(alg, &elems, &exps, &unit, vars)?;
        coords.extend(block);
    }
    AffineRationalMap::new(coords)
}

/// Check the coefficient structure of a polynomial induced on a truncated
/// polynomial algebra `ℚ[t]/(t^m)`: for each `1 ≤ j ≤ m−1` the `j`-th
/// coordinate must be affine in `λ_j` with `∂/∂λ_j` equal to `P'(λ_0)`.
pub fn coefficient_structure_check(alg: &Algebra, p: &UniPoly) -> Result<bool> {
    let m = alg.dim();
    if !is_truncated_polynomial_algebra(alg) {
        return Err(Error::Domain(
            "coefficient structure check needs the algebra Q[t]/(t^m)".into(),
        ));
    }
    let phi = UniRationalFunction::from_poly(p.clone());
    let f = induce_univariate(alg, &phi)?;
    // promote P'(λ_0) to a polynomial in the map's variables
    let dp = p.derivative();
    let mut expected = MultiPoly::zero(m);
    for (i, c) in dp.coeffs().iter().enumerate() {
        expected = expected.add(&MultiPoly::var(m, 0).pow(i as u32).scale(c));
    }
    for j in 1..m {
        let coord = &f.coords()[j];
        if !coord.is_polynomial() {
            return Ok(false);
        }
        if coord.num().degree_in(j) > 1 {
            return Ok(false);
        }
        if coord.num().derivative(j) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Structure constants of `ℚ[t]/(t^m)`: `e_i·e_j = e_{i+j}` when `i+j < m`
/// and zero otherwise.
fn is_truncated_polynomial_algebra(alg: &Algebra) -> bool {
    let m = alg.dim();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let expected = if i + j == k { Rat::one() } else { Rat::zero() };
                if *alg.sc(i, j, k) != expected {
                    return false;
                }
            }
        }
    }
    true
}
