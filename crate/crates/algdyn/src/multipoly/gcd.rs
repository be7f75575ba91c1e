//! Multivariate polynomial gcd.
//!
//! Strategy: strip monomial content, fall back to single-variable Euclid when
//! only one variable is active, otherwise recurse through content /
//! primitive-part with a subresultant pseudo-remainder sequence on a chosen
//! main variable. Results are normalized so the graded-lex leading
//! coefficient is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactnum::{Rat, UniPoly};
use crate::multipoly::{Monomial, MultiPoly};

/// Exact division `p / q`; `None` when `q` does not divide `p`.
pub fn divide_exact(p: &MultiPoly, q: &MultiPoly) -> Option<MultiPoly> {
    assert_eq!(p.vars(), q.vars());
    if q.is_zero() {
        return None;
    }
    if p.is_zero() {
        return Some(MultiPoly::zero(p.vars()));
    }
    let (qm, qc) = {
        let (m, c) = q.leading().expect("q nonzero");
        (m.clone(), c.clone())
    };
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero(p.vars());
    while !rem.is_zero() {
        let (m, c) = {
            let (rm, rc) = rem.leading().expect("rem nonzero");
            (rm.div(&qm)?, rc / &qc)
        };
        quot.add_term(m.clone(), c.clone());
        rem = rem.sub(&q.mul_term(&m, &c));
    }
    Some(quot)
}

/// Greatest common divisor, normalized so the graded-lex leading coefficient
/// is one. `gcd(p, 0)` is the normalization of `p`; `gcd(0, 0) = 0`.
pub fn gcd_multi(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.vars(), q.vars());
    if p.is_zero() {
        return q.normalize_leading();
    }
    if q.is_zero() {
        return p.normalize_leading();
    }
    let vars = p.vars();

    // split off the common monomial factor
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let shared = Monomial(mp.0.iter().zip(&mq.0).map(|(a, b)| *a.min(b)).collect());
    let ph = p.div_monomial(&mp);
    let qh = q.div_monomial(&mq);

    let core = gcd_stripped(&ph, &qh);
    let mut out = MultiPoly::zero(vars);
    out.add_term(shared, Rat::one());
    out.mul(&core).normalize_leading()
}

/// Gcd of two nonzero polynomials with trivial monomial content.
fn gcd_stripped(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let vars = p.vars();
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(vars);
    }
    let active: Vec<usize> = (0..vars)
        .filter(|&v| p.degree_in(v) > 0 || q.degree_in(v) > 0)
        .collect();
    // single active variable: plain Euclid over the rationals
    if active.len() == 1 {
        let v = active[0];
        let a = to_unipoly(p, v);
        let b = to_unipoly(q, v);
        return from_unipoly(vars, v, &a.gcd(&b));
    }
    // main variable: present in both, smallest worst-case degree, lowest index
    let main = active
        .iter()
        .copied()
        .filter(|&v| p.degree_in(v) > 0 && q.degree_in(v) > 0)
        .min_by_key(|&v| (p.degree_in(v).min(q.degree_in(v)), v));
    let Some(main) = main else {
        // no shared variable: coprime up to constants
        return MultiPoly::one(vars);
    };

    let pc = p.coeffs_in(main);
    let qc = q.coeffs_in(main);
    let cont_p = content(&pc);
    let cont_q = content(&qc);
    let pp_p: Vec<MultiPoly> = pc
        .iter()
        .map(|c| divide_exact(c, &cont_p).expect("content divides"))
        .collect();
    let pp_q: Vec<MultiPoly> = qc
        .iter()
        .map(|c| divide_exact(c, &cont_q).expect("content divides"))
        .collect();

    let cont_gcd = gcd_multi(&cont_p, &cont_q);
    // evaluation certificate: if one specialization of all other variables
    // keeps both leading coefficients alive and has coprime images, the
    // primitive parts are coprime and the pseudo-remainder sequence can be
    // skipped entirely
    let prim_gcd = if primitive_parts_coprime(vars, main, &pp_p, &pp_q) {
        MultiPoly::one(vars)
    } else {
        subresultant_gcd(vars, main, pp_p, pp_q)
    };
    cont_gcd.mul(&prim_gcd)
}

/// Deterministic specialization points tried by the coprimality certificate.
const EVAL_POINTS: [i64; 8] = [1, -1, 2, -2, 3, -3, 5, 7];

/// Specialize every variable except `main` and return the univariate image.
fn eval_except(coeffs: &[MultiPoly], main: usize, point: &dyn Fn(usize) -> Rat) -> UniPoly {
    let imgs: Vec<Rat> = coeffs
        .iter()
        .map(|c| {
            let mut acc = Rat::zero();
            for (m, coeff) in c.terms() {
                let mut term = coeff.clone();
                for (v, &e) in m.0.iter().enumerate() {
                    if v == main || e == 0 {
                        continue;
                    }
                    let base = point(v);
                    for _ in 0..e {
                        term *= &base;
                    }
                }
                acc += term;
            }
            acc
        })
        .collect();
    UniPoly::from_coeffs(imgs)
}

/// Certify that two primitive (in `main`) polynomials are coprime by a
/// degree-preserving specialization with coprime univariate images. A `true`
/// answer is a proof; `false` just means the certificate failed and the full
/// algorithm must run.
fn primitive_parts_coprime(
    vars: usize,
    main: usize,
    pp_p: &[MultiPoly],
    pp_q: &[MultiPoly],
) -> bool {
    let dp = deg(pp_p).expect("pp_p nonzero");
    let dq = deg(pp_q).expect("pp_q nonzero");
    let _ = vars;
    for attempt in 0..4usize {
        let point = |v: usize| -> Rat {
            Rat::from_integer(EVAL_POINTS[(attempt + v) % EVAL_POINTS.len()].into())
        };
        let p_img = eval_except(pp_p, main, &point);
        let q_img = eval_except(pp_q, main, &point);
        if p_img.degree_or_zero() != dp || q_img.degree_or_zero() != dq {
            continue; // a leading coefficient vanished; try another point
        }
        if p_img.gcd(&q_img).degree_or_zero() == 0 {
            return true;
        }
        return false; // images share a root: certificate cannot conclude
    }
    false
}

/// Gcd of the coefficient list (the content in the main variable).
fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let vars = coeffs[0].vars();
    let mut g = MultiPoly::zero(vars);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_multi(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn to_unipoly(p: &MultiPoly, var: usize) -> UniPoly {
    UniPoly::from_coeffs(
        p.coeffs_in(var)
            .iter()
            .map(|c| c.constant_coeff())
            .collect(),
    )
}

fn from_unipoly(vars: usize, var: usize, p: &UniPoly) -> MultiPoly {
    let coeffs: Vec<MultiPoly> = p
        .coeffs()
        .iter()
        .map(|c| MultiPoly::constant(vars, c.clone()))
        .collect();
    MultiPoly::from_coeffs_in(vars, var, &coeffs)
}

// --- univariate-in-main-variable machinery over polynomial coefficients ---

fn deg(f: &[MultiPoly]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn trim(mut f: Vec<MultiPoly>) -> Vec<MultiPoly> {
    while f.last().is_some_and(MultiPoly::is_zero) {
        f.pop();
    }
    f
}

fn coeff_scale(f: &[MultiPoly], c: &MultiPoly) -> Vec<MultiPoly> {
    f.iter().map(|a| a.mul(c)).collect()
}

fn coeff_div(f: &[MultiPoly], c: &MultiPoly) -> Vec<MultiPoly> {
    f.iter()
        .map(|a| divide_exact(a, c).expect("exact division in subresultant sequence"))
        .collect()
}

/// Rescale so every coefficient is an integer and their integer content is
/// one. Keeps the pseudo-remainder sequence inside integer arithmetic, where
/// the subresultant coefficient bounds hold; without this the rational
/// content compounds exponentially along the sequence.
fn integer_primitive(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut den_lcm = BigInt::one();
    for (_, c) in p.terms() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for (_, c) in p.terms() {
        let scaled = c.numer() * (&den_lcm / c.denom());
        num_gcd = num_gcd.gcd(&scaled);
    }
    if num_gcd.is_zero() {
        return p.clone();
    }
    p.scale(&Rat::new(den_lcm, num_gcd))
}

/// Pseudo-remainder of `a` by `b` in the main variable:
/// `lc(b)^(deg a - deg b + 1) · a  mod  b`.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let da = deg(a).expect("a nonzero");
    let db = deg(b).expect("b nonzero");
    debug_assert!(da >= db);
    let lc_b = b[db].clone();
    let mut r: Vec<MultiPoly> = a.to_vec();
    for k in (db..=da).rev() {
        let factor = r[k].clone();
        r = coeff_scale(&r, &lc_b);
        if !factor.is_zero() {
            for j in 0..=db {
                let idx = k - db + j;
                r[idx] = r[idx].sub(&b[j].mul(&factor));
            }
        }
    }
    trim(r)
}

/// Primitive gcd of two primitive polynomials in the main variable, by the
/// subresultant pseudo-remainder sequence (the classical g/h bookkeeping).
fn subresultant_gcd(
    vars: usize,
    main: usize,
    f: Vec<MultiPoly>,
    g_in: Vec<MultiPoly>,
) -> MultiPoly {
    let f: Vec<MultiPoly> = {
        let whole = MultiPoly::from_coeffs_in(vars, main, &f);
        integer_primitive(&whole).coeffs_in(main)
    };
    let g_in: Vec<MultiPoly> = {
        let whole = MultiPoly::from_coeffs_in(vars, main, &g_in);
        integer_primitive(&whole).coeffs_in(main)
    };
    let (mut a, mut b) = if deg(&f) >= deg(&g_in) {
        (f, g_in)
    } else {
        (g_in, f)
    };
    let one = MultiPoly::one(vars);
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let da = deg(&a).expect("a nonzero");
        let db = deg(&b).expect("b nonzero");
        let delta = da - db;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if deg(&r) == Some(0) {
            // nonzero constant remainder: primitive parts are coprime
            return one;
        }
        let divisor = g.mul(&h.pow(delta as u32));
        let new_b = coeff_div(&r, &divisor);
        a = b;
        b = new_b;
        g = a[deg(&a).unwrap()].clone();
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            // h ← g^δ / h^(δ−1)
            divide_exact(&g.pow(delta as u32), &h.pow(delta as u32 - 1))
                .expect("h update divides exactly")
        };
    }
    // primitive part of b is the gcd
    let cont = content(&b);
    let pp: Vec<MultiPoly> = b
        .iter()
        .map(|c| divide_exact(c, &cont).expect("content divides"))
        .collect();
    MultiPoly::from_coeffs_in(vars, main, &pp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_int, Rat};

    fn x(vars: usize, i: usize) -> MultiPoly {
        MultiPoly::var(vars, i)
    }

    #[test]
    fn divide_exact_basics() {
        let a = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        let b = x(2, 0).sub(&x(2, 1));
        let q = divide_exact(&a, &b).unwrap();
        assert_eq!(q, x(2, 0).add(&x(2, 1)));
        assert!(divide_exact(&b, &a).is_none());
        assert!(divide_exact(&x(2, 0), &x(2, 1)).is_none());
    }

    #[test]
    fn gcd_difference_of_squares() {
        let a = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        let b = x(2, 0).sub(&x(2, 1));
        assert_eq!(gcd_multi(&a, &b), b);
        // oracle: the reported gcd divides both inputs exactly
        let g = gcd_multi(&a, &b);
        assert!(divide_exact(&a, &g).is_some());
        assert!(divide_exact(&b, &g).is_some());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = x(2, 0).scale(&rat_int(4));
        assert_eq!(gcd_multi(&p, &MultiPoly::zero(2)), x(2, 0));
        assert!(gcd_multi(&MultiPoly::zero(2), &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn gcd_coprime_inputs() {
        let a = x(2, 0).add(&MultiPoly::one(2)); // x + 1
        let b = x(2, 1).add(&MultiPoly::one(2)); // y + 1
        assert!(gcd_multi(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_repeated_factor() {
        let f = x(2, 0).add(&x(2, 1)); // x + y
        let a = f.pow(3).mul(&x(2, 0).sub(&x(2, 1))); // (x+y)^3 (x-y)
        let b = f.pow(2).mul(&x(2, 0)); // (x+y)^2 x
        let g = gcd_multi(&a, &b);
        assert_eq!(g, f.pow(2));
    }

    #[test]
    fn gcd_monomial_content_fast_path() {
        // gcd(W^5, W^2·(x+W)) = W^2
        let w = x(2, 0);
        let a = w.pow(5);
        let b = w.pow(2).mul(&x(2, 1).add(&w));
        assert_eq!(gcd_multi(&a, &b), w.pow(2));
    }

    #[test]
    fn gcd_three_variables() {
        let f = x(3, 0).mul(&x(3, 1)).add(&x(3, 2).pow(2)); // xy + z^2
        let a = f.mul(&x(3, 0).add(&x(3, 1)));
        let b = f.mul(&x(3, 2).add(&MultiPoly::one(3)));
        let g = gcd_multi(&a, &b);
        assert_eq!(g, f.normalize_leading());
    }

    #[test]
    fn gcd_scaling_invariance() {
        let a = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        let b = x(2, 0).sub(&x(2, 1));
        let g1 = gcd_multi(&a, &b);
        let g2 = gcd_multi(
            &a.scale(&Rat::new(7.into(), 3.into())),
            &b.scale(&rat_int(-5)),
        );
        assert_eq!(g1, g2);
    }

    #[test]
    fn gcd_divides_random_style_products() {
        // structured cross-check: gcd(u·w, v·w) recovers w up to normalization
        let u = x(2, 0).pow(2).add(&x(2, 1)); // x^2 + y
        let v = x(2, 1).pow(2).sub(&MultiPoly::one(2)); // y^2 - 1
        let w = x(2, 0).add(&x(2, 1)).add(&MultiPoly::one(2)); // x + y + 1
        let g = gcd_multi(&u.mul(&w), &v.mul(&w));
        assert_eq!(g, w.normalize_leading());
    }
}
