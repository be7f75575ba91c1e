//! Exact multivariate polynomials, rational functions and rational maps.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under the graded
//! lexicographic order, so iteration order — and with it every rendered or
//! serialized form — is deterministic.

mod gcd;
mod maps;
mod ratfunc;

pub use gcd::gcd_multi;
pub use maps::{AffineRationalMap, ProjectiveMap};
pub use ratfunc::RatFunc;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rat;

/// Exponent vector of a single term. All monomials of one polynomial share
/// the same length (the polynomial's variable count).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, idx: usize) -> Self {
        let mut e = vec![0; vars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` when not divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: compare total degree first, then the
    /// leftmost differing exponent.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(vars), c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn var(vars: usize, idx: usize) -> Self {
        assert!(idx < vars, "variable index out of range");
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars, idx), Rat::one());
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total_degree() == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_coeff().is_one()
    }

    pub fn constant_coeff(&self) -> Rat {
        self.terms
            .get(&Monomial::constant(self.vars))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Leading term under graded lex (largest key).
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.0.len(), self.vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars);
        }
        // Clear denominators and accumulate over the integers: one rational
        // normalization per result term instead of two gcds per product.
        let den_a = self
            .terms
            .values()
            .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let den_b = other
            .terms
            .values()
            .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let a: Vec<(&Monomial, num_bigint::BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m, c.numer() * (&den_a / c.denom())))
            .collect();
        let b: Vec<(&Monomial, num_bigint::BigInt)> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c.numer() * (&den_b / c.denom())))
            .collect();
        let mut acc: BTreeMap<Monomial, num_bigint::BigInt> = BTreeMap::new();
        for (m1, c1) in &a {
            for (m2, c2) in &b {
                let prod = c1 * c2;
                use std::collections::btree_map::Entry;
                match acc.entry(m1.mul(m2)) {
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                }
            }
        }
        let scale = den_a * den_b;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rat::new(c, scale.clone())))
            .collect();
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.vars);
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

    /// Scale so the graded-lex leading coefficient is one.
    pub fn normalize_leading(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = Rat::one() / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] = e - 1;
            out.add_term(Monomial(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Componentwise minimum of all exponent vectors: the largest monomial
    /// dividing every term. Zero polynomial yields the constant monomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut min: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            match &mut min {
                None => min = Some(m.0.clone()),
                Some(v) => {
                    for (a, b) in v.iter_mut().zip(&m.0) {
                        if b < a {
                            *a = *b;
                        }
                    }
                }
            }
        }
        Monomial(min.unwrap_or_else(|| vec![0; self.vars]))
    }

    /// Divide every term by a monomial known to divide them all.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m1, c)| (m1.div(m).expect("monomial divides all terms"), c.clone()))
                .collect(),
        }
    }

    /// Total degree is the same for every term.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogenize to the given total degree by a fresh variable inserted at
    /// index 0 (existing variables shift up by one).
    pub fn homogenize(&self, target: u32) -> Self {
        let mut out = Self::zero(self.vars + 1);
        for (m, c) in &self.terms {
            let d = m.total_degree();
            assert!(d <= target, "homogenization target below term degree");
            let mut exps = Vec::with_capacity(self.vars + 1);
            exps.push(target - d);
            exps.extend_from_slice(&m.0);
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Substitute polynomials for the variables.
    pub fn subst(&self, args: &[MultiPoly]) -> MultiPoly {
        assert_eq!(args.len(), self.vars);
        let out_vars = args.first().map(MultiPoly::vars).unwrap_or(0);
        let mut pows: Vec<Vec<MultiPoly>> = args
            .iter()
            .map(|_| vec![MultiPoly::one(out_vars)])
            .collect();
        for (v, a) in args.iter().enumerate() {
            let top = self.degree_in(v);
            for e in 1..=top {
                let next = pows[v][(e - 1) as usize].mul(a);
                pows[v].push(next);
            }
        }
        let mut out = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&pows[v][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// View as a univariate polynomial in `var`, ascending coefficients.
    /// Coefficient polynomials keep the full variable count with `var`
    /// appearing to degree zero.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let top = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.vars); top + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut exps = m.0.clone();
            exps[var] = 0;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Reassemble from ascending coefficients in `var`.
    pub fn from_coeffs_in(vars: usize, var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut out = Self::zero(vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut exps = m.0.clone();
                exps[var] += e as u32;
                out.add_term(Monomial(exps), a.clone());
            }
        }
        out
    }

    /// Render with a caller-supplied variable naming, leading term first.
    pub fn render_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(name(v));
                } else if e > 1 {
                    factors.push(format!("{}^{}", name(v), e));
                }
            }
            let body = if factors.is_empty() {
                format!("{abs}")
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", abs, factors.join("*"))
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            s.push_str(&body);
        }
        s
    }

    /// Render with affine naming `x1..xD`.
    pub fn render_affine(&self) -> String {
        self.render_with(&|v| format!("x{}", v + 1))
    }

    /// Render with projective naming: variable 0 is the homogenizer `W`.
    pub fn render_projective(&self) -> String {
        self.render_with(&|v| {
            if v == 0 {
                "W".to_string()
            } else {
                format!("x{v}")
            }
        })
    }
}
