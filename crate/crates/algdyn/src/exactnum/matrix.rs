//! Exact integer and rational matrices.
//!
//! `IntMatrix` is always square (it models an exponent matrix and its exterior
//! powers); `RatMatrix` is a general rectangular matrix over the rationals
//! used for structure-constant linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{k_subsets, Rat, UniPoly};

/// Square matrix with arbitrary-precision integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(size: usize, entries: Vec<BigInt>) -> Result<Self> {
        if size == 0 {
            return Err(Error::Domain("matrix size must be positive".into()));
        }
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {size}x{size} matrix, got {}",
                size * size,
                entries.len()
            )));
        }
        Ok(IntMatrix { size, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        for r in rows {
            if r.len() != size {
                return Err(Error::DimensionMismatch("matrix must be square".into()));
            }
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        Self::new(size, entries)
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![BigInt::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = BigInt::one();
        }
        IntMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.size + c]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.size)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(
                "matrix product with mismatched sizes".into(),
            ));
        }
        let n = self.size;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(IntMatrix { size: n, entries })
    }

    /// Exact `n`-th power; `pow(0)` is the identity.
    pub fn pow(&self, n: usize) -> Self {
        let mut result = Self::identity(self.size);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("sizes match");
            }
            base = base.mul(&base).expect("sizes match");
            e >>= 1;
        }
        result
    }

    /// Maximum absolute entry.
    pub fn norm_max(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .expect("matrix is nonempty")
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        bareiss_det(self.size, &mut self.entries.clone())
    }

    /// Minor on the given row and column index sets (must have equal length).
    fn minor(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let k = rows.len();
        let mut sub = Vec::with_capacity(k * k);
        for &r in rows {
            for &c in cols {
                sub.push(self.get(r, c).clone());
            }
        }
        bareiss_det(k, &mut sub)
    }

    /// The `i`-th exterior power: the `C(d,i) × C(d,i)` matrix of `i×i`
    /// minors, rows and columns indexed by lexicographically ordered
    /// `i`-subsets.
    pub fn exterior_power(&self, i: usize) -> Result<Self> {
        if i > self.size {
            return Err(Error::Domain(format!(
                "exterior power {i} exceeds matrix size {}",
                self.size
            )));
        }
        let subsets = k_subsets(self.size, i);
        let m = subsets.len();
        let mut entries = Vec::with_capacity(m * m);
        for rows in &subsets {
            for cols in &subsets {
                entries.push(self.minor(rows, cols));
            }
        }
        Ok(IntMatrix { size: m, entries })
    }

    /// Block-diagonal matrix with `m` copies of `self` on the diagonal.
    pub fn block_diag(&self, m: usize) -> Self {
        let d = self.size;
        let n = d * m;
        let mut entries = vec![BigInt::zero(); n * n];
        for b in 0..m {
            for r in 0..d {
                for c in 0..d {
                    entries[(b * d + r) * n + (b * d + c)] = self.get(r, c).clone();
                }
            }
        }
        IntMatrix { size: n, entries }
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.size,
            cols: self.size,
            entries: self
                .entries
                .iter()
                .map(|e| Rat::from_integer(e.clone()))
                .collect(),
        }
    }

    /// Exact characteristic polynomial `det(T·I − M)`, monic of degree `d`,
    /// by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> UniPoly {
        self.to_rat().char_poly()
    }
}

/// Fraction-free determinant; consumes the scratch buffer.
fn bareiss_det(n: usize, a: &mut [BigInt]) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            // pivot search below row k
            let swap = (k + 1..n).find(|&r| !a[r * n + k].is_zero());
            match swap {
                None => return BigInt::zero(),
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev; // exact by the Bareiss identity
            }
        }
        for i in k + 1..n {
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rectangular matrix over the exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size, size);
        for i in 0..size {
            m.entries[i * size + i] = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(
                "matrix product with mismatched shapes".into(),
            ));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(
                "matrix-vector product with mismatched sizes".into(),
            ));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += self.get(i, j) * &v[j];
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Domain("power of a non-square matrix".into()));
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(result)
    }

    pub fn norm_max(&self) -> Rat {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .expect("matrix is nonempty")
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        let mut t = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    fn add(&self, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    fn scale(&self, c: &Rat) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    ///
    /// Pivot selection is deterministic: scanning columns left to right, the
    /// first row with a nonzero entry becomes the pivot row.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            for c in 0..m.cols {
                let tmp = m.get(row, c).clone();
                let v = m.get(pr, c).clone();
                m.set(row, c, v);
                m.set(pr, c, tmp);
            }
            let inv = Rat::one() / m.get(row, col);
            for c in 0..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c) - &factor * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Exact basis of the right kernel; empty when injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (col, &maybe_row) in pivot_set.iter().enumerate() {
                if let Some(row) = maybe_row {
                    vec[col] = -rref.get(row, free).clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Solve `M x = b` exactly. Returns `None` when inconsistent; free
    /// variables, if any, are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(
                "right-hand side length must equal the row count".into(),
            ));
        }
        let mut aug = Self::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = rref.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact determinant (square matrices).
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Domain("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else {
                return Ok(Rat::zero());
            };
            if pr != col {
                for c in 0..n {
                    let tmp = m.get(col, c).clone();
                    let v = m.get(pr, c).clone();
                    m.set(col, c, v);
                    m.set(pr, c, tmp);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(!self.det()?.is_zero())
    }

    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Ok(None);
        }
        let mut inv = Self::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, rref.get(r, n + c).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Minor determinant on index subsets.
    fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rat> {
        let k = rows.len();
        let mut sub = Vec::with_capacity(k * k);
        for &r in rows {
            for &c in cols {
                sub.push(self.get(r, c).clone());
            }
        }
        if k == 0 {
            return Ok(Rat::one());
        }
        RatMatrix::new(k, k, sub)?.det()
    }

    /// Exterior power of a square rational matrix.
    pub fn exterior_power(&self, i: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Domain(
                "exterior power of a non-square matrix".into(),
            ));
        }
        if i > self.rows {
            return Err(Error::Domain(format!(
                "exterior power {i} exceeds matrix size {}",
                self.rows
            )));
        }
        let subsets = k_subsets(self.rows, i);
        let m = subsets.len();
        let mut entries = Vec::with_capacity(m * m);
        for rows in &subsets {
            for cols in &subsets {
                entries.push(self.minor(rows, cols)?);
            }
        }
        RatMatrix::new(m, m, entries)
    }

    /// Characteristic polynomial via Faddeev–LeVerrier; square input.
    pub fn char_poly(&self) -> UniPoly {
        assert!(
            self.is_square(),
            "characteristic polynomial needs a square matrix"
        );
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = self.clone();
        let mut c_prev;
        for k in 1..=n {
            c_prev = -m.trace() / Rat::from_integer(BigInt::from(k as i64));
            coeffs[n - k] = c_prev.clone();
            if k < n {
                let shifted = m.add(&Self::identity(n).scale(&c_prev));
                m = self.mul(&shifted).expect("square sizes match");
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}
