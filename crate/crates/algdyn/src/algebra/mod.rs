//! Finite-dimensional algebras presented by structure constants.
//!
//! An algebra is a dimension, a list of basis names and the tensor
//! `a_ij^k` with `e_i·e_j = Σ_k a_ij^k e_k`. Everything else — property
//! predicates, units, nilradicals, minimal polynomials, the squaring map and
//! the quadratic-map correspondence — is derived from that tensor by exact
//! linear algebra or symbolic polynomial identities.

mod profile;

pub use profile::{analyze, AlgebraProfile, Dim2Class, GenericInvariants};

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat, RatMatrix, UniPoly};
use crate::multipoly::{AffineRationalMap, MultiPoly, RatFunc};

/// Element of an algebra: its coordinate vector in the defining basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    pub coords: Vec<Rat>,
}

impl AlgElement {
    pub fn new(coords: Vec<Rat>) -> Self {
        AlgElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        AlgElement {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        AlgElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        AlgElement {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

/// Boolean property profile of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraFlags {
    pub unitary: bool,
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub power_associative: bool,
    pub abelian: bool,
}

impl AlgebraFlags {
    /// Jordan in the sense used here: commutative and alternative.
    pub fn jordan(&self) -> bool {
        self.commutative && self.alternative
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    names: Vec<String>,
    constants: Vec<Rat>, // (i*d + j)*d + k
}

impl Algebra {
    pub fn new(dim: usize, names: Vec<String>, constants: Vec<Rat>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("algebra dimension must be positive".into()));
        }
        if names.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dimension {dim}",
                names.len()
            )));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != dim {
            return Err(Error::Domain("basis names must be distinct".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor must have {} entries, got {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        Ok(Algebra {
            dim,
            names,
            constants,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Structure constant `a_ij^k`.
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Same dimension and structure tensor, names ignored.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }

    pub fn element(&self, coords: Vec<Rat>) -> Result<AlgElement> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element with {} coordinates in a dimension-{} algebra",
                coords.len(),
                self.dim
            )));
        }
        Ok(AlgElement { coords })
    }

    pub fn zero_element(&self) -> AlgElement {
        AlgElement {
            coords: vec![Rat::zero(); self.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut coords = vec![Rat::zero(); self.dim];
        coords[i] = Rat::one();
        AlgElement { coords }
    }

    /// Bilinear product through the structure constants.
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        if a.dim() != self.dim || b.dim() != self.dim {
            return Err(Error::DimensionMismatch(
                "element does not belong to this algebra".into(),
            ));
        }
        let mut coords = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b.coords[j].is_zero() {
                    continue;
                }
                let prod = &a.coords[i] * &b.coords[j];
                for k in 0..self.dim {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        coords[k] += &prod * c;
                    }
                }
            }
        }
        Ok(AlgElement { coords })
    }

    /// Product of elements whose coordinates are polynomials.
    pub fn mul_sym(&self, a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let vars = a[0].vars();
        let mut coords = vec![MultiPoly::zero(vars); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let prod = a[i].mul(&b[j]);
                for k in 0..self.dim {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        coords[k] = coords[k].add(&prod.scale(c));
                    }
                }
            }
        }
        coords
    }

    /// Product of elements whose coordinates are rational functions.
    pub fn mul_rat(&self, a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let vars = a[0].vars();
        let mut coords = vec![RatFunc::zero(vars); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let prod = a[i].mul(&b[j]);
                for k in 0..self.dim {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        coords[k] = coords[k].add(&prod.scale(c));
                    }
                }
            }
        }
        coords
    }

    /// Generic element with coordinates `λ_offset .. λ_offset+d-1` out of
    /// `vars` polynomial variables.
    pub fn generic_element(&self, vars: usize, offset: usize) -> Vec<MultiPoly> {
        (0..self.dim)
            .map(|i| MultiPoly::var(vars, offset + i))
            .collect()
    }

    /// Matrix of `y ↦ x·y` in the defining basis.
    pub fn left_mult_matrix(&self, x: &AlgElement) -> Result<RatMatrix> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(
                "element does not belong to this algebra".into(),
            ));
        }
        let d = self.dim;
        let mut m = RatMatrix::zero(d, d);
        for j in 0..d {
            let col = self.mul(x, &self.basis_element(j))?;
            for k in 0..d {
                m.set(k, j, col.coords[k].clone());
            }
        }
        Ok(m)
    }

    /// Matrix of `y ↦ x·y` for a symbolic element.
    pub fn left_mult_matrix_sym(&self, x: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
        let d = self.dim;
        let vars = x[0].vars();
        let mut m = vec![vec![MultiPoly::zero(vars); d]; d];
        for j in 0..d {
            // column j: coordinates of x·e_j
            for k in 0..d {
                for i in 0..d {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        m[k][j] = m[k][j].add(&x[i].scale(c));
                    }
                }
            }
        }
        m
    }

    /// Two-sided unit, when one exists, by solving the defining linear system
    /// and verifying the result.
    pub fn find_unit(&self) -> Option<AlgElement> {
        let d = self.dim;
        // equations: Σ_j u_j a_ji^k = δ_ik  and  Σ_j u_j a_ij^k = δ_ik
        let mut rows = Vec::with_capacity(2 * d * d);
        let mut rhs = Vec::with_capacity(2 * d * d);
        for i in 0..d {
            for k in 0..d {
                let mut left = vec![Rat::zero(); d];
                let mut right = vec![Rat::zero(); d];
                for j in 0..d {
                    left[j] = self.sc(j, i, k).clone();
                    right[j] = self.sc(i, j, k).clone();
                }
                let delta = if i == k { Rat::one() } else { Rat::zero() };
                rows.push(left);
                rhs.push(delta.clone());
                rows.push(right);
                rhs.push(delta);
            }
        }
        let m = RatMatrix::new(2 * d * d, d, rows.into_iter().flatten().collect())
            .expect("system shape is consistent");
        let sol = m
            .solve(&rhs)
            .expect("rhs length matches")
            .map(AlgElement::new)?;
        // verify on every basis vector
        for i in 0..d {
            let e = self.basis_element(i);
            if self.mul(&sol, &e).ok()? != e || self.mul(&e, &sol).ok()? != e {
                return None;
            }
        }
        Some(sol)
    }

    /// Evaluate every predicate. Commutativity and associativity are checked
    /// on basis vectors; the alternative and power-associative laws are
    /// verified as polynomial identities in indeterminate coordinates.
    pub fn predicates(&self) -> AlgebraFlags {
        let d = self.dim;
        let commutative =
            (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.sc(i, j, k) == self.sc(j, i, k))));
        let associative = {
            let mut ok = true;
            'outer: for i in 0..d {
                for j in 0..d {
                    for l in 0..d {
                        // (e_i e_j) e_l vs e_i (e_j e_l)
                        for m in 0..d {
                            let mut lhs = Rat::zero();
                            let mut rhs = Rat::zero();
                            for t in 0..d {
                                lhs += self.sc(i, j, t) * self.sc(t, l, m);
                                rhs += self.sc(j, l, t) * self.sc(i, t, m);
                            }
                            if lhs != rhs {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            ok
        };
        let alternative = {
            let x: Vec<MultiPoly> = self.generic_element(2 * d, 0);
            let y: Vec<MultiPoly> = self.generic_element(2 * d, d);
            let xx = self.mul_sym(&x, &x);
            let xy = self.mul_sym(&x, &y);
            let yx = self.mul_sym(&y, &x);
            let left_alt = sym_eq(&self.mul_sym(&x, &xy), &self.mul_sym(&xx, &y));
            let right_alt = sym_eq(&self.mul_sym(&yx, &x), &self.mul_sym(&y, &xx));
            left_alt && right_alt
        };
        let power_associative = {
            // characteristic-zero criterion: third- and fourth-power identities
            let x: Vec<MultiPoly> = self.generic_element(d, 0);
            let x2 = self.mul_sym(&x, &x);
            let x2x = self.mul_sym(&x2, &x);
            let xx2 = self.mul_sym(&x, &x2);
            sym_eq(&x2x, &xx2) && sym_eq(&self.mul_sym(&x2x, &x), &self.mul_sym(&x2, &x2))
        };
        let unitary = self.find_unit().is_some();
        AlgebraFlags {
            unitary,
            commutative,
            associative,
            alternative,
            power_associative,
            abelian: unitary && commutative && associative,
        }
    }

    /// Check that the unit is a fixed point of the squaring map whose
    /// differential there is twice the identity.
    pub fn unit_fixed_point_check(&self) -> Result<bool> {
        let unit = self
            .find_unit()
            .ok_or_else(|| Error::Domain("algebra has no unit".into()))?;
        // fixed point: unit·unit = unit
        if self.mul(&unit, &unit)? != unit {
            return Ok(false);
        }
        // differential of x ↦ x² at u maps y to u·y + y·u
        let d = self.dim;
        for j in 0..d {
            let e = self.basis_element(j);
            let img = self.mul(&unit, &e)?.add(&self.mul(&e, &unit)?);
            if img != e.scale(&rat_int(2)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Nilradical basis and the reduced dimension `m = d − dim N(V)`, for
    /// abelian algebras only. The nilradical is the radical of the trace
    /// bilinear form `T(x, y) = tr(L_{x·y})`; each returned vector is
    /// verified nilpotent as a safety oracle.
    pub fn nilradical_and_m(&self) -> Result<(Vec<AlgElement>, usize)> {
        let flags = self.predicates();
        if !flags.abelian {
            return Err(Error::Domain(
                "nilradical computation requires an abelian algebra".into(),
            ));
        }
        let d = self.dim;
        let mut gram = RatMatrix::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul(&self.basis_element(i), &self.basis_element(j))?;
                let trace = self.left_mult_matrix(&prod)?.trace();
                gram.set(i, j, trace);
            }
        }
        let kernel = gram.kernel_basis();
        for v in &kernel {
            let elem = AlgElement::new(v.clone());
            let l = self.left_mult_matrix(&elem)?;
            if !l.pow(d)?.is_zero() {
                return Err(Error::Internal(
                    "trace-form kernel vector is not nilpotent".into(),
                ));
            }
        }
        let m = d - kernel.len();
        Ok((kernel.into_iter().map(AlgElement::new).collect(), m))
    }

    /// Monic minimal polynomial of an element of a unital power-associative
    /// algebra: the first linear dependence among `1, x, x², …`.
    pub fn element_min_poly(&self, x: &AlgElement) -> Result<UniPoly> {
        let flags = self.predicates();
        if !flags.power_associative || !flags.unitary {
            return Err(Error::Domain(
                "minimal polynomials need a unital power-associative algebra".into(),
            ));
        }
        let unit = self.find_unit().expect("unitary was just checked");
        self.min_poly_unchecked(x, &unit)
    }

    /// Minimal polynomial without re-running the predicate scan; used by the
    /// sampling loop where the flags are checked once up front.
    fn min_poly_unchecked(&self, x: &AlgElement, unit: &AlgElement) -> Result<UniPoly> {
        let mut powers = vec![unit.clone()];
        for j in 1..=self.dim {
            let next = self.mul(x, powers.last().unwrap())?;
            // solve powers[0..j] · c = next
            let mut cols = Vec::with_capacity(self.dim * j);
            for r in 0..self.dim {
                for p in powers.iter().take(j) {
                    cols.push(p.coords[r].clone());
                }
            }
            let m = RatMatrix::new(self.dim, j, cols)?;
            if let Some(c) = m.solve(&next.coords)? {
                let mut coeffs: Vec<Rat> = c.into_iter().map(|v| -v).collect();
                coeffs.push(Rat::one());
                return Ok(UniPoly::from_coeffs(coeffs));
            }
            powers.push(next);
        }
        Err(Error::Internal(
            "no linear dependence among powers up to the dimension".into(),
        ))
    }

    /// Sampled generic invariants: `δ_V` (maximal degree of an element's
    /// minimal polynomial over the samples) and `k` (maximal number of
    /// distinct complex roots among samples attaining `δ_V`). Both are lower
    /// semicontinuous, so sampling reaches the generic value off a
    /// measure-zero set; the seed makes a run reproducible.
    pub fn generic_invariants(&self, seed: u64, samples: usize) -> Result<GenericInvariants> {
        let flags = self.predicates();
        if !flags.power_associative || !flags.unitary {
            return Err(Error::Domain(
                "generic invariants need a unital power-associative algebra".into(),
            ));
        }
        let unit = self.find_unit().expect("unitary was just checked");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut delta = 1usize;
        let mut k = 1usize;
        for _ in 0..samples.max(1) {
            let coords: Vec<Rat> = (0..self.dim)
                .map(|_| rat_int(rng.gen_range(-10..=10)))
                .collect();
            let x = AlgElement::new(coords);
            let min_poly = self.min_poly_unchecked(&x, &unit)?;
            let dx = min_poly.degree_or_zero();
            let kx = min_poly.squarefree_degree()?;
            if dx > delta {
                delta = dx;
                k = kx;
            } else if dx == delta {
                k = k.max(kx);
            }
        }
        Ok(GenericInvariants { delta, k })
    }

    /// The squaring map `x ↦ x²` in coordinates, for commutative algebras.
    pub fn squaring_map(&self) -> Result<AffineRationalMap> {
        if !self.predicates().commutative {
            return Err(Error::Domain(
                "the squaring-map correspondence is stated for commutative algebras".into(),
            ));
        }
        let d = self.dim;
        let x = self.generic_element(d, 0);
        let coords = self
            .mul_sym(&x, &x)
            .into_iter()
            .map(RatFunc::from_poly)
            .collect();
        AffineRationalMap::new(coords)
    }

    /// Recover the commutative algebra whose squaring map is `f`, by
    /// polarization. Every coordinate must be a homogeneous quadratic
    /// polynomial (or zero).
    pub fn from_quadratic(f: &AffineRationalMap) -> Result<Algebra> {
        let d = f.dim();
        for c in f.coords() {
            if !c.is_polynomial() {
                return Err(Error::Domain(
                    "quadratic correspondence needs polynomial coordinates".into(),
                ));
            }
            let p = c.num();
            if !p.is_zero() && !(p.is_homogeneous() && p.total_degree() == 2) {
                return Err(Error::Domain(
                    "coordinates must be homogeneous of degree two".into(),
                ));
            }
        }
        let mut constants = vec![Rat::zero(); d * d * d];
        for (k, c) in f.coords().iter().enumerate() {
            for (mono, coeff) in c.num().terms() {
                let vars: Vec<usize> = (0..d).filter(|&v| mono.0[v] > 0).collect();
                match vars.as_slice() {
                    [i] => {
                        // z_i^2 term: a_ii^k = coeff
                        constants[(i * d + i) * d + k] = coeff.clone();
                    }
                    [i, j] => {
                        // z_i z_j term: split evenly between a_ij^k and a_ji^k
                        let half = coeff / rat_int(2);
                        constants[(i * d + j) * d + k] = half.clone();
                        constants[(j * d + i) * d + k] = half;
                    }
                    _ => unreachable!("homogeneous quadratic term"),
                }
            }
        }
        let names = (1..=d).map(|i| format!("e{i}")).collect();
        Algebra::new(d, names, constants)
    }

    /// Verify that an invertible matrix intertwines the two products on all
    /// basis pairs: `M(e_i ·_V e_j) = M e_i ·_W M e_j`.
    pub fn check_isomorphism_witness(&self, other: &Algebra, m: &RatMatrix) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(
                "isomorphism witness between algebras of different dimensions".into(),
            ));
        }
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(
                "witness matrix has the wrong shape".into(),
            ));
        }
        if !m.is_invertible()? {
            return Err(Error::Domain("witness matrix must be invertible".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = AlgElement::new(
                    m.mul_vec(
                        &self
                            .mul(&self.basis_element(i), &self.basis_element(j))?
                            .coords,
                    )?,
                );
                let mi = AlgElement::new(m.mul_vec(&self.basis_element(i).coords)?);
                let mj = AlgElement::new(m.mul_vec(&self.basis_element(j).coords)?);
                if lhs != other.mul(&mi, &mj)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Transport the structure through an invertible matrix: the returned
    /// algebra is isomorphic to `self` with witness `m`.
    pub fn transport(&self, m: &RatMatrix) -> Result<Algebra> {
        let inv = m
            .inverse()?
            .ok_or_else(|| Error::Domain("transport matrix must be invertible".into()))?;
        let d = self.dim;
        let mut constants = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            let ui = AlgElement::new(inv.mul_vec(&self.basis_element(i).coords)?);
            for j in 0..d {
                let uj = AlgElement::new(inv.mul_vec(&self.basis_element(j).coords)?);
                let prod = AlgElement::new(m.mul_vec(&self.mul(&ui, &uj)?.coords)?);
                for k in 0..d {
                    constants[(i * d + j) * d + k] = prod.coords[k].clone();
                }
            }
        }
        Algebra::new(d, self.names.clone(), constants)
    }

    /// Classify a two-dimensional unital commutative algebra by the
    /// discriminant of `x² = a·1 + b·x`.
    pub fn classify_dim2(&self) -> Result<Dim2Class> {
        if self.dim != 2 {
            return Err(Error::Domain(
                "classification applies to dimension two".into(),
            ));
        }
        let flags = self.predicates();
        if !flags.unitary || !flags.commutative {
            return Err(Error::Domain(
                "classification needs a unital commutative algebra".into(),
            ));
        }
        let unit = self.find_unit().expect("unitary was just checked");
        // pick a basis vector independent of the unit
        let x = (0..2)
            .map(|i| self.basis_element(i))
            .find(|e| {
                let det = &unit.coords[0] * &e.coords[1] - &unit.coords[1] * &e.coords[0];
                !det.is_zero()
            })
            .ok_or_else(|| Error::Internal("no basis vector independent of the unit".into()))?;
        // solve x² = a·unit + b·x
        let x2 = self.mul(&x, &x)?;
        let m = RatMatrix::new(
            2,
            2,
            vec![
                unit.coords[0].clone(),
                x.coords[0].clone(),
                unit.coords[1].clone(),
                x.coords[1].clone(),
            ],
        )?;
        let sol = m
            .solve(&x2.coords)?
            .ok_or_else(|| Error::Internal("x² must lie in span{1, x}".into()))?;
        let (a, b) = (&sol[0], &sol[1]);
        let disc = a + b * b / rat_int(4);
        if disc.is_zero() {
            Ok(Dim2Class::NilpotentType)
        } else {
            Ok(Dim2Class::SplitType)
        }
    }
}

fn sym_eq(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
    a.iter().zip(b).all(|(p, q)| p == q)
}

// --- standard constructions ---

/// `Q[t]/(P)` with basis `1, t, …, t^{deg−1}`. `P` must be nonconstant and is
/// made monic.
pub fn quotient_algebra(p: &UniPoly, var: char) -> Result<Algebra> {
    let deg = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Domain("modulus must be a nonconstant polynomial".into()))?;
    let p = p.make_monic();
    // remainders of t^k modulo P for k up to 2·deg − 2
    let mut pow_rems: Vec<Vec<Rat>> = Vec::with_capacity(2 * deg - 1);
    let mut cur = UniPoly::one();
    for _ in 0..(2 * deg - 1) {
        let (_, r) = cur.div_rem(&p)?;
        let mut coords = vec![Rat::zero(); deg];
        for (i, c) in r.coeffs().iter().enumerate() {
            coords[i] = c.clone();
        }
        pow_rems.push(coords);
        cur = cur.mul(&UniPoly::x());
    }
    let mut constants = vec![Rat::zero(); deg * deg * deg];
    for i in 0..deg {
        for j in 0..deg {
            let rem = &pow_rems[i + j];
            for k in 0..deg {
                constants[(i * deg + j) * deg + k] = rem[k].clone();
            }
        }
    }
    let names = (0..deg)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        })
        .collect();
    Algebra::new(deg, names, constants)
}

/// The split algebra `ℚ ⊕ … ⊕ ℚ` with idempotent coordinates.
pub fn split_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Domain(
            "split algebra needs at least one factor".into(),
        ));
    }
    let mut constants = vec![Rat::zero(); n * n * n];
    for i in 0..n {
        constants[(i * n + i) * n + i] = Rat::one();
    }
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::new(n, names, constants)
}

/// The full matrix algebra on `n×n` matrices; basis `E_rc`, row-major.
pub fn matrix_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Domain("matrix algebra needs positive size".into()));
    }
    let d = n * n;
    let mut constants = vec![Rat::zero(); d * d * d];
    for a in 0..n {
        for b in 0..n {
            for e in 0..n {
                // E_ab · E_be = E_ae
                let i = a * n + b;
                let j = b * n + e;
                let k = a * n + e;
                constants[(i * d + j) * d + k] = Rat::one();
            }
        }
    }
    let names = (0..n)
        .flat_map(|r| (0..n).map(move |c| format!("E{}{}", r + 1, c + 1)))
        .collect();
    Algebra::new(d, names, constants)
}

/// Direct product; the basis is the concatenation of the factors' bases.
pub fn product_algebra(factors: &[Algebra]) -> Result<Algebra> {
    if factors.is_empty() {
        return Err(Error::Domain("product of zero algebras".into()));
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let dim: usize = factors.iter().map(Algebra::dim).sum();
    let mut constants = vec![Rat::zero(); dim * dim * dim];
    let mut names = Vec::with_capacity(dim);
    let mut offset = 0usize;
    for (fi, f) in factors.iter().enumerate() {
        let d = f.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    constants[((offset + i) * dim + (offset + j)) * dim + (offset + k)] =
                        f.sc(i, j, k).clone();
                }
            }
        }
        for name in f.names() {
            names.push(format!("f{}.{}", fi + 1, name));
        }
        offset += d;
    }
    Algebra::new(dim, names, constants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn dual_numbers() -> Algebra {
        // Q[t]/(t^2)
        quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 1]), 't').unwrap()
    }

    fn split2() -> Algebra {
        split_algebra(2).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let v = dual_numbers();
        let t = v.basis_element(1);
        assert!(v.mul(&t, &t).unwrap().is_zero());

        let s = split2();
        let a = s.basis_element(0);
        let b = s.basis_element(1);
        assert!(s.mul(&a, &b).unwrap().is_zero());

        let unit = v.find_unit().unwrap();
        let x = v.element(vec![rat(3, 2), rat_int(-5)]).unwrap();
        assert_eq!(v.mul(&unit, &x).unwrap(), x);
    }

    #[test]
    fn parent_mismatch_rejected() {
        let v = dual_numbers();
        let bad = AlgElement::from_i64(&[1, 2, 3]);
        assert!(v.mul(&bad, &bad).is_err());
    }

    #[test]
    fn predicates_on_standard_algebras() {
        let v = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        let f = v.predicates();
        assert!(f.unitary && f.commutative && f.associative && f.abelian);
        assert!(f.alternative && f.power_associative);

        let m2 = matrix_algebra(2).unwrap();
        let f = m2.predicates();
        assert!(f.associative && f.unitary && !f.commutative && !f.abelian);
        assert!(f.power_associative);
    }

    #[test]
    fn commutative_but_not_associative() {
        // e1·e1 = e2, e2·e2 = e1, all other products zero
        let mut constants = vec![Rat::zero(); 8];
        constants[1] = Rat::one(); // (0,0,1)
        constants[(1 * 2 + 1) * 2] = Rat::one(); // (1,1,0)
        let v = Algebra::new(2, vec!["e1".into(), "e2".into()], constants).unwrap();
        let f = v.predicates();
        assert!(f.commutative);
        // the failing triple: (e1 e1) e2 = e2 e2 = e1 versus e1 (e1 e2) = 0
        assert!(!f.associative);
        assert!(!f.abelian);
    }

    #[test]
    fn unit_examples() {
        assert_eq!(
            dual_numbers().find_unit().unwrap(),
            AlgElement::from_i64(&[1, 0])
        );
        // zero multiplication has no unit
        let zero_mult =
            Algebra::new(2, vec!["e1".into(), "e2".into()], vec![Rat::zero(); 8]).unwrap();
        assert!(zero_mult.find_unit().is_none());
        // Mat(2): unit is the identity matrix E11 + E22
        let m2 = matrix_algebra(2).unwrap();
        assert_eq!(m2.find_unit().unwrap(), AlgElement::from_i64(&[1, 0, 0, 1]));
    }

    #[test]
    fn unit_fixed_point_examples() {
        assert!(split2().unit_fixed_point_check().unwrap());
        let v3 = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        assert!(v3.unit_fixed_point_check().unwrap());
        let zero_mult = Algebra::new(1, vec!["e1".into()], vec![Rat::zero()]).unwrap();
        assert!(zero_mult.unit_fixed_point_check().is_err());
    }

    #[test]
    fn left_mult_examples() {
        let v = dual_numbers();
        let unit = v.find_unit().unwrap();
        assert_eq!(v.left_mult_matrix(&unit).unwrap(), RatMatrix::identity(2));
        let t = v.basis_element(1);
        let l = v.left_mult_matrix(&t).unwrap();
        // t·1 = t, t·t = 0 → columns (0,1) and (0,0)
        assert_eq!(*l.get(0, 0), rat_int(0));
        assert_eq!(*l.get(1, 0), rat_int(1));
        assert_eq!(*l.get(0, 1), rat_int(0));
        assert_eq!(*l.get(1, 1), rat_int(0));
        let zero = v.zero_element();
        assert!(v.left_mult_matrix(&zero).unwrap().is_zero());
    }

    #[test]
    fn nilradical_examples() {
        let (basis, m) = dual_numbers().nilradical_and_m().unwrap();
        assert_eq!(m, 1);
        assert_eq!(basis.len(), 1);
        // spanned by t
        assert!(basis[0].coords[0].is_zero());

        let (basis, m) = split2().nilradical_and_m().unwrap();
        assert!(basis.is_empty());
        assert_eq!(m, 2);

        let v3 = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        let (basis, m) = v3.nilradical_and_m().unwrap();
        assert_eq!((basis.len(), m), (2, 1));

        assert!(matrix_algebra(2).unwrap().nilradical_and_m().is_err());
    }

    #[test]
    fn min_poly_examples() {
        let v3 = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        let t = v3.basis_element(1);
        assert_eq!(
            v3.element_min_poly(&t).unwrap(),
            UniPoly::from_i64_coeffs(&[0, 0, 0, 1])
        );
        let s = split2();
        let e1 = s.basis_element(0);
        assert_eq!(
            s.element_min_poly(&e1).unwrap(),
            UniPoly::from_i64_coeffs(&[0, -1, 1])
        );
        let unit = s.find_unit().unwrap();
        assert_eq!(
            s.element_min_poly(&unit).unwrap(),
            UniPoly::from_i64_coeffs(&[-1, 1])
        );
    }

    #[test]
    fn min_poly_annihilates() {
        let v = quotient_algebra(&UniPoly::from_i64_coeffs(&[1, 2, 0, 1]), 't').unwrap();
        let x = v.element(vec![rat_int(2), rat(1, 3), rat_int(-1)]).unwrap();
        let p = v.element_min_poly(&x).unwrap();
        // evaluate P(x) in the algebra by Horner
        let unit = v.find_unit().unwrap();
        let mut acc = v.zero_element();
        for c in p.coeffs().iter().rev() {
            acc = v.mul(&acc, &x).unwrap().add(&unit.scale(c));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn generic_invariants_examples() {
        let m2 = matrix_algebra(2).unwrap();
        let gi = m2.generic_invariants(0, 16).unwrap();
        assert_eq!((gi.delta, gi.k), (2, 2));

        let v3 = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        let gi = v3.generic_invariants(0, 16).unwrap();
        assert_eq!((gi.delta, gi.k), (3, 1));

        let split_pres = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, -1, 1]), 't').unwrap();
        let gi = split_pres.generic_invariants(0, 16).unwrap();
        assert_eq!((gi.delta, gi.k), (2, 2));
    }

    #[test]
    fn squaring_map_examples() {
        let v = dual_numbers();
        let f = v.squaring_map().unwrap();
        let x = |i| MultiPoly::var(2, i);
        assert_eq!(*f.coords()[0].num(), x(0).pow(2));
        assert_eq!(*f.coords()[1].num(), x(0).mul(&x(1)).scale(&rat_int(2)));

        let s = split2().squaring_map().unwrap();
        assert_eq!(*s.coords()[0].num(), x(0).pow(2));
        assert_eq!(*s.coords()[1].num(), x(1).pow(2));

        let line = split_algebra(1).unwrap().squaring_map().unwrap();
        assert_eq!(*line.coords()[0].num(), MultiPoly::var(1, 0).pow(2));

        assert!(matrix_algebra(2).unwrap().squaring_map().is_err());
    }

    #[test]
    fn quadratic_round_trip() {
        let v = dual_numbers();
        let f = v.squaring_map().unwrap();
        let back = Algebra::from_quadratic(&f).unwrap();
        assert!(back.same_structure(&v));

        // one-dimensional squaring is ordinary multiplication
        let one = Algebra::from_quadratic(
            &AffineRationalMap::new(vec![RatFunc::from_poly(MultiPoly::var(1, 0).pow(2))]).unwrap(),
        )
        .unwrap();
        assert!(one.same_structure(&split_algebra(1).unwrap()));

        // non-quadratic input is rejected
        let cubic =
            AffineRationalMap::new(vec![RatFunc::from_poly(MultiPoly::var(1, 0).pow(3))]).unwrap();
        assert!(Algebra::from_quadratic(&cubic).is_err());
    }

    #[test]
    fn isomorphism_witness_examples() {
        let v = dual_numbers();
        assert!(v
            .check_isomorphism_witness(&v, &RatMatrix::identity(2))
            .unwrap());

        // Q[t]/(t^2 - t) ≅ Q ⊕ Q via 1 ↦ (1,1), t ↦ (1,0)
        let pres = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, -1, 1]), 't').unwrap();
        let m = RatMatrix::new(2, 2, vec![rat_int(1), rat_int(1), rat_int(1), rat_int(0)]).unwrap();
        assert!(pres.check_isomorphism_witness(&split2(), &m).unwrap());

        // no invertible matrix can identify dual numbers with the split algebra
        let m = RatMatrix::new(2, 2, vec![rat_int(1), rat_int(2), rat_int(0), rat_int(1)]).unwrap();
        assert!(!v.check_isomorphism_witness(&split2(), &m).unwrap());

        let singular = RatMatrix::new(2, 2, vec![rat_int(1); 4]).unwrap();
        assert!(v.check_isomorphism_witness(&split2(), &singular).is_err());
    }

    #[test]
    fn transport_is_isomorphic() {
        let v = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 0, 1]), 't').unwrap();
        let m = RatMatrix::new(
            3,
            3,
            vec![
                rat_int(1),
                rat_int(2),
                rat_int(0),
                rat_int(0),
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(0),
                rat_int(1),
            ],
        )
        .unwrap();
        let w = v.transport(&m).unwrap();
        assert!(v.check_isomorphism_witness(&w, &m).unwrap());
        let f = w.predicates();
        assert!(f.abelian);
    }

    #[test]
    fn dim2_classification() {
        // x² = 0
        assert_eq!(
            dual_numbers().classify_dim2().unwrap(),
            Dim2Class::NilpotentType
        );
        // x² = x
        let pres = quotient_algebra(&UniPoly::from_i64_coeffs(&[0, -1, 1]), 't').unwrap();
        assert_eq!(pres.classify_dim2().unwrap(), Dim2Class::SplitType);
        // x² = −1: discriminant −1 ≠ 0
        let gauss = quotient_algebra(&UniPoly::from_i64_coeffs(&[1, 0, 1]), 't').unwrap();
        assert_eq!(gauss.classify_dim2().unwrap(), Dim2Class::SplitType);
        // wrong dimension
        assert!(split_algebra(3).unwrap().classify_dim2().is_err());
    }

    #[test]
    fn product_construction() {
        let p = product_algebra(&[dual_numbers(), split_algebra(1).unwrap()]).unwrap();
        assert_eq!(p.dim(), 3);
        let f = p.predicates();
        assert!(f.abelian);
        let (_, m) = p.nilradical_and_m().unwrap();
        assert_eq!(m, 2);
    }

    #[test]
    fn quotient_rejects_constant_modulus() {
        assert!(quotient_algebra(&UniPoly::from_i64_coeffs(&[5]), 't').is_err());
        assert!(quotient_algebra(&UniPoly::zero(), 't').is_err());
    }
}
