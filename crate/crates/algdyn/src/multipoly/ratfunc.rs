//! Reduced multivariate rational functions.
//!
//! Canonical form: numerator and denominator coprime, denominator's
//! graded-lex leading coefficient equal to one, and the zero function stored
//! as `0/1`. Equality of the canonical forms is equality of functions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::multipoly::{gcd::divide_exact, gcd_multi, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Build and reduce; the denominator must be nonzero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        if num.vars() != den.vars() {
            return Err(Error::DimensionMismatch(
                "numerator and denominator variable counts differ".into(),
            ));
        }
        Ok(Self::reduced(num, den))
    }

    /// Internal constructor; caller guarantees `den != 0`.
    fn reduced(num: MultiPoly, den: MultiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(den.vars()),
            };
        }
        let g = gcd_multi(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                divide_exact(&num, &g).expect("gcd divides numerator"),
                divide_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        // scale so the denominator's graded-lex leading coefficient is 1
        let lc = den.leading().expect("den nonzero").1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / &lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let vars = p.vars();
        RatFunc {
            num: p,
            den: MultiPoly::one(vars),
        }
    }

    pub fn zero(vars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: usize) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn var(vars: usize, idx: usize) -> Self {
        Self::from_poly(MultiPoly::var(vars, idx))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> usize {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Addition with the denominator-gcd split: gcd work stays on inputs no
    /// larger than the operands instead of their product.
    pub fn add(&self, other: &Self) -> Self {
        let g = gcd_multi(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // coprime denominators: the sum is already reduced
            return Self::normalized_only(num, den);
        }
        let left = divide_exact(&self.den, &g).expect("gcd divides");
        let right = divide_exact(&other.den, &g).expect("gcd divides");
        let t = self.num.mul(&right).add(&other.num.mul(&left));
        if t.is_zero() {
            return Self::zero(self.vars());
        }
        let h = gcd_multi(&t, &g);
        let num = divide_exact(&t, &h).expect("gcd divides");
        let den = left
            .mul(&divide_exact(&g, &h).expect("gcd divides"))
            .mul(&right);
        Self::normalized_only(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Multiplication with cross-reduction: for reduced operands the result
    /// of `(n1/g1·n2/g2) / (d1/g2·d2/g1)` is already in lowest terms.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars());
        }
        let g1 = gcd_multi(&self.num, &other.den);
        let g2 = gcd_multi(&other.num, &self.den);
        let n1 = divide_exact(&self.num, &g1).expect("gcd divides");
        let n2 = divide_exact(&other.num, &g2).expect("gcd divides");
        let d1 = divide_exact(&self.den, &g2).expect("gcd divides");
        let d2 = divide_exact(&other.den, &g1).expect("gcd divides");
        Self::normalized_only(n1.mul(&n2), d1.mul(&d2))
    }

    /// Rescale to the canonical leading coefficient without running a gcd;
    /// callers guarantee the fraction is already in lowest terms.
    fn normalized_only(num: MultiPoly, den: MultiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(den.vars()),
            };
        }
        let lc = den.leading().expect("den nonzero").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = Rat::one() / &lc;
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        // scaling by a nonzero constant preserves lowest terms
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse; fails on the zero function.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain(
                "inverse of the zero rational function".into(),
            ));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Ok(self.inv()?.pow(-n)?);
        }
        let mut result = Self::one(self.vars());
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Render as `num` when polynomial, `(num)/(den)` otherwise.
    pub fn render_affine(&self) -> String {
        if self.is_polynomial() {
            self.num.render_affine()
        } else {
            format!(
                "({})/({})",
                self.num.render_affine(),
                self.den.render_affine()
            )
        }
    }
}
