//! Degree sequences: closed-form predictions, exact fibration formulas,
//! dynamical degrees, brute-force measurement and asymptotic verdicts.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ln_bigint, ln_rat, IntMatrix, Rat};
use crate::multipoly::AffineRationalMap;

/// Where a degree sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    BruteForce,
    TheoremA,
    TheoremB,
    Formula,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::BruteForce => "brute_force",
            Provenance::TheoremA => "theorem_a",
            Provenance::TheoremB => "theorem_b",
            Provenance::Formula => "formula",
        }
    }
}

/// A degree sequence indexed by the iterate `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    pub values: Vec<BigInt>,
    pub p: usize,
    pub provenance: Provenance,
    /// Set when a resource budget cut the measurement short.
    pub truncated: bool,
}

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Geometric-mean growth-rate estimate `(a_N / a_1)^(1/(N−1))`.
    pub fn growth_rate_estimate(&self) -> Option<f64> {
        if self.values.len() < 2 {
            return None;
        }
        let first = self.values.first()?;
        let last = self.values.last()?;
        if !first.is_positive() || !last.is_positive() {
            return None;
        }
        let span = (self.values.len() - 1) as f64;
        Some(((ln_bigint(last) - ln_bigint(first)) / span).exp())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Degree of a product map with respect to the sum of the factor ample
/// classes: `Σ_{i+j=p} C(p,i)·C(n+n'−p, n−i)·deg_i(f)·deg_j(g)`.
///
/// `degs_f[i]` must be supplied for `0 ≤ i ≤ min(p, n)` and likewise for `g`;
/// the `deg_0 = 1` convention is the caller's responsibility.
pub fn product_degree(
    p: usize,
    n: usize,
    n_prime: usize,
    degs_f: &[BigInt],
    degs_g: &[BigInt],
) -> Result<BigInt> {
    if p > n + n_prime {
        return Err(Error::Domain(format!(
            "codimension {p} exceeds the ambient dimension {}",
            n + n_prime
        )));
    }
    if degs_f.len() <= p.min(n) || degs_g.len() <= p.min(n_prime) {
        return Err(Error::Domain(
            "degree lists must cover indices up to min(p, dim)".into(),
        ));
    }
    let mut total = BigInt::zero();
    for i in 0..=p {
        let j = p - i;
        if i > n || j > n_prime {
            continue;
        }
        let weight = binomial(p, i) * binomial(n + n_prime - p, n - i);
        if weight.is_zero() {
            continue;
        }
        total += weight * &degs_f[i] * &degs_g[j];
    }
    Ok(total)
}

/// Degree of a skew product `(z, t) ↦ (g(z), h(z, t))` over `ℙ^d × ℙ¹` with
/// respect to the ample class `H_d + H_1`:
/// `(d+1−p)·deg_p(g) + p·(δ_1 + (d+1−p)·δ_d)·deg_{p−1}(g)`.
///
/// `δ_1` is the `t`-degree of `h` and `δ_d` its `z`-degree.
pub fn skew_degree(
    p: usize,
    d: usize,
    deg_p_g: &BigInt,
    deg_pm1_g: &BigInt,
    delta_1: &BigInt,
    delta_d: &BigInt,
) -> Result<BigInt> {
    if p == 0 || p > d + 1 {
        return Err(Error::Domain(format!(
            "codimension must satisfy 1 ≤ p ≤ d+1, got p={p}, d={d}"
        )));
    }
    let fiber = BigInt::from(d + 1 - p);
    let first = &fiber * deg_p_g;
    let second = BigInt::from(p) * (delta_1 + fiber * delta_d) * deg_pm1_g;
    Ok(first + second)
}

/// Degree sequence predicted for the map induced by a rational function of
/// degree `deg_phi` on an algebra with generic reduced dimension `k`:
/// `deg_p(fⁿ) = (deg φ^min(p,k))ⁿ`.
pub fn theorem_a_predict(
    k: usize,
    deg_phi: usize,
    p: usize,
    n_max: usize,
) -> Result<DegreeSequence> {
    if k == 0 || deg_phi == 0 {
        return Err(Error::Domain("theorem A needs k ≥ 1 and deg φ ≥ 1".into()));
    }
    let rate = BigInt::from(deg_phi).pow(p.min(k) as u32);
    let mut values = Vec::with_capacity(n_max);
    let mut cur = BigInt::one();
    for _ in 0..n_max {
        cur = &cur * &rate;
        values.push(cur.clone());
    }
    Ok(DegreeSequence {
        values,
        p,
        provenance: Provenance::TheoremA,
        truncated: false,
    })
}

/// The exterior-power window for the generalized monomial map: indices `i`
/// with `max(0, p − d(k−m)) ≤ i ≤ min(p, d·m)`.
fn monomial_window(p: usize, d: usize, k_dim: usize, m: usize) -> Result<(usize, usize)> {
    let lo = p.saturating_sub(d * (k_dim - m));
    let hi = p.min(d * m);
    if lo > hi {
        return Err(Error::Domain(format!(
            "codimension {p} exceeds the ambient dimension {}",
            d * k_dim
        )));
    }
    Ok((lo, hi))
}

/// Degree sequence predicted for the generalized monomial map of `A` on an
/// algebra of dimension `k_dim` with reduced dimension `m`: for each `n`,
/// the maximum over the window of `‖∧^i diag(A;m)^n‖`.
pub fn theorem_b_predict(
    a: &IntMatrix,
    k_dim: usize,
    m: usize,
    p: usize,
    n_max: usize,
) -> Result<DegreeSequence> {
    if a.det().is_zero() {
        return Err(Error::Domain("exponent matrix must be nonsingular".into()));
    }
    if m == 0 || m > k_dim {
        return Err(Error::Domain(
            "reduced dimension must satisfy 1 ≤ m ≤ dim".into(),
        ));
    }
    let d = a.size();
    let (lo, hi) = monomial_window(p, d, k_dim, m)?;
    let block = a.block_diag(m);
    // ∧^i(B^n) = (∧^i B)^n, so power the exterior matrices directly
    let bases: Vec<IntMatrix> = (lo..=hi)
        .map(|i| block.exterior_power(i))
        .collect::<Result<_>>()?;
    let mut powers = bases.clone();
    let mut values = Vec::with_capacity(n_max);
    for n in 0..n_max {
        if n > 0 {
            for (pw, base) in powers.iter_mut().zip(&bases) {
                *pw = pw.mul(base)?;
            }
        }
        let best = powers
            .iter()
            .map(IntMatrix::norm_max)
            .max()
            .expect("window is nonempty");
        values.push(best.max(BigInt::one()));
    }
    Ok(DegreeSequence {
        values,
        p,
        provenance: Provenance::TheoremB,
        truncated: false,
    })
}

/// Dynamical degree `λ_p(F_A)`: the maximum over the window of the product
/// of the `i` largest eigenvalue moduli of `diag(A;m)`. Products are
/// accumulated in log space with compensated summation.
pub fn dynamical_degree(a: &IntMatrix, m: usize, k_dim: usize, p: usize) -> Result<f64> {
    if a.det().is_zero() {
        return Err(Error::Domain("exponent matrix must be nonsingular".into()));
    }
    if m == 0 || m > k_dim {
        return Err(Error::Domain(
            "reduced dimension must satisfy 1 ≤ m ≤ dim".into(),
        ));
    }
    let d = a.size();
    let (lo, hi) = monomial_window(p, d, k_dim, m)?;
    let base_moduli = a.spectral_moduli()?;
    // moduli of diag(A;m): each modulus of A repeated m times
    let mut moduli = Vec::with_capacity(d * m);
    for mu in base_moduli {
        for _ in 0..m {
            moduli.push(mu);
        }
    }
    moduli.sort_by(|x, y| y.partial_cmp(x).expect("finite moduli"));
    // Kahan-compensated prefix sums of the logs
    let mut best = f64::NEG_INFINITY;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    if lo == 0 {
        best = 0.0;
    }
    for (idx, mu) in moduli.iter().enumerate().take(hi) {
        let term = mu.ln() - comp;
        let t = sum + term;
        comp = (t - sum) - term;
        sum = t;
        let i = idx + 1;
        if i >= lo && i <= hi && sum > best {
            best = sum;
        }
    }
    Ok(best.exp())
}

/// Brute-force degree sequence `deg_1(fⁿ)` for `n = 1..N`, with full
/// reduction at every step. Exceeding the term budget truncates the sequence
/// and sets the flag instead of failing.
pub fn brute_force_degrees(
    f: &AffineRationalMap,
    n_max: usize,
    budget_terms: usize,
) -> Result<DegreeSequence> {
    if n_max == 0 {
        return Err(Error::Domain("need at least one iterate".into()));
    }
    let mut values = Vec::with_capacity(n_max);
    let mut truncated = false;
    let mut current = f.clone();
    for n in 1..=n_max {
        let deg = current.map_degree()?;
        if deg == 0 {
            return Err(Error::Domain(
                "map has degree zero (constant); degree sequence undefined".into(),
            ));
        }
        values.push(BigInt::from(deg));
        if n == n_max {
            break;
        }
        if current.term_count() > budget_terms {
            truncated = true;
            break;
        }
        current = f.compose(&current).map_err(|e| match e {
            Error::IndeterminacyCollapse { detail, .. } => Error::IndeterminacyCollapse {
                iterate: n + 1,
                detail,
            },
            other => other,
        })?;
    }
    Ok(DegreeSequence {
        values,
        p: 1,
        provenance: Provenance::BruteForce,
        truncated,
    })
}

/// Default term budget for brute-force iteration.
pub const DEFAULT_TERM_BUDGET: usize = 5_000_000;

/// Configuration of the asymptotic-equivalence verdict.
#[derive(Debug, Clone)]
pub struct AsymptoticConfig {
    /// Maximal tolerated value of `max(aₙ/bₙ, bₙ/aₙ)`, checked exactly.
    pub c_max: Rat,
    /// Maximal tolerated per-step drift of `|log aₙ − log bₙ|` between the
    /// endpoints of the observed range.
    pub slope_eps: f64,
    /// Minimal sequence length for a verdict.
    pub min_len: usize,
}

impl Default for AsymptoticConfig {
    fn default() -> Self {
        AsymptoticConfig {
            // Finite-sample defaults: the constant-ratio bound carries the
            // decision; the slope test guards against rate mismatches. Both
            // are engineering choices and are echoed in every report.
            c_max: Rat::from_integer(BigInt::from(16)),
            slope_eps: 0.12,
            min_len: 4,
        }
    }
}

/// Outcome of an asymptotic-equivalence check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub pass: bool,
    pub ratio_ok: bool,
    pub slope_ok: bool,
    /// Largest observed `max(aₙ/bₙ, bₙ/aₙ)`.
    pub max_ratio: f64,
    /// `|log(a_N/a_1) − log(b_N/b_1)| / (N−1)`.
    pub slope_gap: f64,
    pub c_max: f64,
    pub slope_eps: f64,
}

/// Decide whether two positive sequences are plausibly asymptotically
/// equivalent on the observed range: every pointwise ratio must stay within
/// `c_max` (checked in exact arithmetic) and the endpoint growth rates must
/// agree within `slope_eps` per step.
pub fn asymptotic_check(
    measured: &DegreeSequence,
    predicted: &DegreeSequence,
    config: &AsymptoticConfig,
) -> Result<CheckOutcome> {
    if measured.len() != predicted.len() {
        return Err(Error::Domain(format!(
            "sequence lengths differ: {} vs {}",
            measured.len(),
            predicted.len()
        )));
    }
    let n = measured.len();
    if n < 2 {
        return Err(Error::Domain("need at least two terms".into()));
    }
    if n < config.min_len {
        return Err(Error::Domain(format!(
            "need at least {} terms for a verdict, got {n}",
            config.min_len
        )));
    }
    for v in measured.values.iter().chain(&predicted.values) {
        if !v.is_positive() {
            return Err(Error::Domain("sequences must be strictly positive".into()));
        }
    }
    let mut ratio_ok = true;
    let mut max_ratio_log = f64::NEG_INFINITY;
    for (a, b) in measured.values.iter().zip(&predicted.values) {
        let ra = Rat::new(a.clone(), b.clone());
        let rb = Rat::new(b.clone(), a.clone());
        let r = if ra >= rb { ra } else { rb };
        if r > config.c_max {
            ratio_ok = false;
        }
        max_ratio_log = max_ratio_log.max(ln_rat(&r));
    }
    let span = (n - 1) as f64;
    let a_growth =
        ln_bigint(measured.values.last().unwrap()) - ln_bigint(measured.values.first().unwrap());
    let b_growth =
        ln_bigint(predicted.values.last().unwrap()) - ln_bigint(predicted.values.first().unwrap());
    let slope_gap = (a_growth - b_growth).abs() / span;
    let slope_ok = slope_gap <= config.slope_eps;
    Ok(CheckOutcome {
        pass: ratio_ok && slope_ok,
        ratio_ok,
        slope_ok,
        max_ratio: max_ratio_log.exp(),
        slope_gap,
        c_max: config.c_max.to_f64().unwrap_or(f64::INFINITY),
        slope_eps: config.slope_eps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    fn seq(values: &[i64], provenance: Provenance) -> DegreeSequence {
        DegreeSequence {
            values: values.iter().map(|&v| BigInt::from(v)).collect(),
            p: 1,
            provenance,
            truncated: false,
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn product_degree_examples() {
        // p = 0: only the i=j=0 term, C(n+n', n)
        let one = [BigInt::one()];
        assert_eq!(product_degree(0, 2, 3, &one, &one).unwrap(), binomial(5, 2));
        // f = g = z² on ℙ¹, p = 1 → 4
        let degs = [BigInt::one(), BigInt::from(2)];
        assert_eq!(
            product_degree(1, 1, 1, &degs, &degs).unwrap(),
            BigInt::from(4)
        );
        // degenerate factor: n' = 0 leaves deg_p(f)
        let degs_f = [BigInt::one(), BigInt::from(7)];
        assert_eq!(
            product_degree(1, 1, 0, &degs_f, &one).unwrap(),
            BigInt::from(7)
        );
        // missing degrees are rejected
        assert!(product_degree(1, 1, 1, &one, &degs).is_err());
    }

    #[test]
    fn product_degree_top_codimension() {
        // p = n + n': the single surviving term is C(p, n)·deg_n(f)·deg_{n'}(g)
        let degs_f = [BigInt::one(), BigInt::from(2)];
        let degs_g = [BigInt::one(), BigInt::from(3)];
        let got = product_degree(2, 1, 1, &degs_f, &degs_g).unwrap();
        assert_eq!(got, binomial(2, 1) * 2 * 3);
    }

    #[test]
    fn skew_degree_examples() {
        // d = 1, g = z², δ1 = δd = 1, p = 1 → 4
        let got = skew_degree(
            1,
            1,
            &BigInt::from(2),
            &BigInt::one(),
            &BigInt::one(),
            &BigInt::one(),
        )
        .unwrap();
        assert_eq!(got, BigInt::from(4));
        // p = d+1 leaves (d+1)·δ1·deg_d(g)
        let got = skew_degree(
            2,
            1,
            &BigInt::from(9),
            &BigInt::from(2),
            &BigInt::from(3),
            &BigInt::from(5),
        )
        .unwrap();
        assert_eq!(got, BigInt::from(2 * 3 * 2));
        // δd = 0 cross-check against the product formula with a Möbius factor
        let got = skew_degree(
            1,
            1,
            &BigInt::from(2),
            &BigInt::one(),
            &BigInt::one(),
            &BigInt::zero(),
        )
        .unwrap();
        assert_eq!(got, BigInt::from(3));
        let degs_f = [BigInt::one(), BigInt::from(2)];
        let degs_g = [BigInt::one(), BigInt::one()];
        assert_eq!(
            product_degree(1, 1, 1, &degs_f, &degs_g).unwrap(),
            BigInt::from(3)
        );
        assert!(skew_degree(
            0,
            1,
            &BigInt::one(),
            &BigInt::one(),
            &BigInt::one(),
            &BigInt::one()
        )
        .is_err());
    }

    #[test]
    fn theorem_a_examples() {
        // p = 0 → all ones
        let s = theorem_a_predict(2, 3, 0, 4).unwrap();
        assert!(s.values.iter().all(|v| v.is_one()));
        // k = 2, deg = 2, p = 3 → 4, 16, 64
        let s = theorem_a_predict(2, 2, 3, 3).unwrap();
        assert_eq!(
            s.values,
            vec![BigInt::from(4), BigInt::from(16), BigInt::from(64)]
        );
        // k = 1, deg = 3, p = 1 → 3, 9, 27
        let s = theorem_a_predict(1, 3, 1, 3).unwrap();
        assert_eq!(
            s.values,
            vec![BigInt::from(3), BigInt::from(9), BigInt::from(27)]
        );
        assert!(theorem_a_predict(0, 2, 1, 3).is_err());
    }

    #[test]
    fn theorem_a_monotone_in_p_and_capped_at_k() {
        let k = 2;
        for n in 1..4 {
            let mut prev = BigInt::zero();
            for p in 0..5 {
                let s = theorem_a_predict(k, 2, p, n).unwrap();
                let v = s.values.last().unwrap().clone();
                assert!(v >= prev);
                prev = v;
            }
            let at_k = theorem_a_predict(k, 2, k, n).unwrap();
            let beyond = theorem_a_predict(k, 2, k + 3, n).unwrap();
            assert_eq!(at_k.values, beyond.values);
        }
    }

    #[test]
    fn theorem_b_examples() {
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        // V = Q: window is {p}, plain exterior norms
        let s = theorem_b_predict(&a, 1, 1, 1, 5).unwrap();
        let expect: Vec<BigInt> = [2u32, 5, 13, 34, 89]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(s.values, expect);
        // p = 0 → all ones
        let s = theorem_b_predict(&a, 2, 1, 0, 3).unwrap();
        assert!(s.values.iter().all(|v| v.is_one()));
        // dual numbers: k=2, m=1, window {0, 1} → same norms
        let s = theorem_b_predict(&a, 2, 1, 1, 4).unwrap();
        let expect: Vec<BigInt> = [2u32, 5, 13, 34].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s.values, expect);
        // singular matrix rejected
        let sing = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(theorem_b_predict(&sing, 1, 1, 1, 3).is_err());
    }

    #[test]
    fn theorem_b_norm_splits_over_blocks() {
        // exact identity: ‖∧^i diag(A;m)^n‖ = max over i1+…+im = i of
        // Π_j ‖∧^(i_j) A^n‖ — the independent route to the same numbers
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let m = 2usize;
        let d = a.size();
        let block = a.block_diag(m);
        for n in 1..=3 {
            let an = a.pow(n);
            for i in 0..=(d * m) {
                let direct = block.exterior_power(i).unwrap().pow(n).norm_max();
                // all compositions i1 + i2 = i with each part ≤ d
                let mut best = BigInt::zero();
                for i1 in 0..=i.min(d) {
                    let i2 = i - i1;
                    if i2 > d {
                        continue;
                    }
                    let p1 = an.exterior_power(i1).unwrap().norm_max().max(BigInt::one());
                    let p2 = an.exterior_power(i2).unwrap().norm_max().max(BigInt::one());
                    best = best.max(p1 * p2);
                }
                assert_eq!(direct.max(BigInt::one()), best);
            }
        }
    }

    #[test]
    fn dynamical_degree_examples() {
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let golden_sq = (3.0 + 5.0f64.sqrt()) / 2.0;
        // λ_0 = 1
        assert!((dynamical_degree(&a, 1, 1, 0).unwrap() - 1.0).abs() < 1e-9);
        // m = k = 1, p = 1: the spectral radius
        assert!((dynamical_degree(&a, 1, 1, 1).unwrap() - golden_sq).abs() < 1e-6);
        // dual numbers, p = 2: window {0, 1, 2}, maximum still at i = 1
        assert!((dynamical_degree(&a, 1, 2, 2).unwrap() - golden_sq).abs() < 1e-6);
    }

    #[test]
    fn dynamical_degree_log_concave_for_m_one() {
        let a = IntMatrix::from_rows(&[vec![3, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]).unwrap();
        let d = 3;
        let lambda: Vec<f64> = (0..=d)
            .map(|p| dynamical_degree(&a, 1, 1, p).unwrap())
            .collect();
        for p in 1..d {
            assert!(lambda[p] * lambda[p] + 1e-9 >= lambda[p - 1] * lambda[p + 1]);
        }
    }

    #[test]
    fn asymptotic_check_examples() {
        let cfg = AsymptoticConfig::default();
        let a = seq(&[2, 4, 8, 16], Provenance::BruteForce);
        assert!(asymptotic_check(&a, &a, &cfg).unwrap().pass);

        // constant factor 3 passes with c_max = 4
        let b = seq(&[6, 12, 24, 48], Provenance::TheoremA);
        let mut cfg4 = AsymptoticConfig::default();
        cfg4.c_max = rat_int(4);
        let out = asymptotic_check(&b, &a, &cfg4).unwrap();
        assert!(out.pass);
        assert!((out.max_ratio - 3.0).abs() < 1e-9);

        // 2^n versus 3^n fails for any fixed constant once n is large enough
        let two = seq(&[2, 4, 8, 16, 32, 64, 128, 256], Provenance::BruteForce);
        let three = seq(&[3, 9, 27, 81, 243, 729, 2187, 6561], Provenance::TheoremA);
        let out = asymptotic_check(&two, &three, &cfg).unwrap();
        assert!(!out.pass);
        assert!(!out.ratio_ok && !out.slope_ok);

        // mismatched lengths and zero entries are domain errors
        let short = seq(&[2, 4], Provenance::BruteForce);
        assert!(asymptotic_check(&a, &short, &cfg).is_err());
        let zero = seq(&[0, 1, 2, 4], Provenance::BruteForce);
        assert!(asymptotic_check(&zero, &a, &cfg).is_err());
    }

    #[test]
    fn growth_rate_estimate() {
        let s = seq(&[2, 4, 8, 16, 32], Provenance::BruteForce);
        assert!((s.growth_rate_estimate().unwrap() - 2.0).abs() < 1e-12);
    }
}
