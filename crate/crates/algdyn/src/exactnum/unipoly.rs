//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and its last entry is nonzero otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the convention `deg 0 = 0`, convenient for size formulas.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let sub = divisor.mul(&Self::monomial(factor, shift));
            rem = rem.sub(&sub);
        }
        Ok((Self::from_coeffs(quot), rem))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Rescale so all coefficients are integers with integer content one.
    fn integer_primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        self.scale(&Rat::new(den_lcm, num_gcd))
    }

    /// Monic greatest common divisor.
    ///
    /// Computed by the subresultant pseudo-remainder sequence on
    /// integer-primitive rescalings: plain monic Euclid over the rationals
    /// suffers exponential coefficient growth on large inputs.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let f = self.integer_primitive();
        let g = other.integer_primitive();
        let (mut a, mut b) = if f.degree_or_zero() >= g.degree_or_zero() {
            (f, g)
        } else {
            (g, f)
        };
        if b.degree_or_zero() == 0 {
            return Self::one();
        }
        let mut gg = Rat::one();
        let mut h = Rat::one();
        loop {
            let da = a.degree().expect("a nonzero");
            let db = b.degree().expect("b nonzero");
            let delta = (da - db) as u32;
            // pseudo-remainder lc(b)^(δ+1)·a mod b
            let lead = b.leading_coeff().expect("b nonzero").clone();
            let scaled = a.scale(&lead.pow((delta + 1) as i32));
            let (_, r) = scaled.div_rem(&b).expect("divisor nonzero");
            if r.is_zero() {
                break;
            }
            if r.degree_or_zero() == 0 {
                return Self::one();
            }
            let divisor = &gg * h.pow(delta as i32);
            let new_b = r.scale(&(Rat::one() / divisor));
            a = b;
            b = new_b;
            gg = a.leading_coeff().expect("a nonzero").clone();
            h = if delta == 0 {
                h
            } else {
                gg.pow(delta as i32) / h.pow(delta as i32 - 1)
            };
        }
        b.make_monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Number of distinct complex roots: `deg P - deg gcd(P, P')`.
    pub fn squarefree_degree(&self) -> Result<usize> {
        let d = self
            .degree()
            .ok_or_else(|| Error::Domain("squarefree degree of the zero polynomial".into()))?;
        if d == 0 {
            return Ok(0);
        }
        let g = self.gcd(&self.derivative());
        Ok(d - g.degree_or_zero())
    }

    /// Squarefree decomposition `P = c · Π fᵢ^i` (Yun's algorithm).
    ///
    /// Returns the list of `(fᵢ, i)` with `fᵢ` monic, squarefree, pairwise
    /// coprime and nonconstant. Constant input yields an empty list.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::Domain(
                "squarefree decomposition of the zero polynomial".into(),
            ));
        }
        let p = self.make_monic();
        if p.degree_or_zero() == 0 {
            return Ok(Vec::new());
        }
        let dp = p.derivative();
        let mut out = Vec::new();
        let a0 = p.gcd(&dp);
        let mut b = p.div_rem(&a0)?.0;
        let mut c = dp.div_rem(&a0)?.0;
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree_or_zero() > 0 {
                    out.push((b.make_monic(), i));
                }
                break;
            }
            let f = b.gcd(&d);
            if f.degree_or_zero() > 0 {
                out.push((f.clone(), i));
            }
            b = b.div_rem(&f)?.0;
            c = d.div_rem(&f)?.0;
            i += 1;
        }
        Ok(out)
    }

    /// Coefficients converted to `f64`, ascending.
    pub fn f64_coeffs(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Render with the given variable letter, leading term first.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if i == 0 {
                format!("{abs}")
            } else {
                let var_part = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if abs.is_one() {
                    var_part
                } else {
                    format!("{abs}*{var_part}")
                }
            };
            parts.push((neg, body));
        }
        let mut s = String::new();
        for (idx, (neg, body)) in parts.iter().enumerate() {
            if idx == 0 {
                if *neg {
                    s.push('-');
                }
            } else if *neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            s.push_str(body);
        }
        s
    }
}
