//! Affine rational self-maps and their reduced projective form.
//!
//! An affine map on `D` variables homogenizes to `D+1` components in `D+1`
//! variables; the homogenizing variable sits at index 0 and the component at
//! index 0 is the image of the common denominator. The first degree of the
//! map is the common total degree of the components after dividing out their
//! gcd.

use crate::error::{Error, Result};
use crate::multipoly::{gcd::divide_exact, gcd_multi, MultiPoly, RatFunc};

/// A self-map of affine `D`-space with rational-function coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRationalMap {
    dim: usize,
    coords: Vec<RatFunc>,
}

/// Homogeneous components of equal total degree with trivial common gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveMap {
    dim: usize,
    components: Vec<MultiPoly>,
    degree: usize,
}

impl AffineRationalMap {
    pub fn new(coords: Vec<RatFunc>) -> Result<Self> {
        let dim = coords.len();
        if dim == 0 {
            return Err(Error::Domain(
                "map must have at least one coordinate".into(),
            ));
        }
        for c in &coords {
            if c.vars() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "coordinate on {} variables in a dimension-{dim} map",
                    c.vars()
                )));
            }
        }
        Ok(AffineRationalMap { dim, coords })
    }

    pub fn identity(dim: usize) -> Self {
        let coords = (0..dim).map(|i| RatFunc::var(dim, i)).collect();
        AffineRationalMap { dim, coords }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn is_polynomial(&self) -> bool {
        self.coords.iter().all(RatFunc::is_polynomial)
    }

    /// Total stored term count, the measure used by iteration budgets.
    pub fn term_count(&self) -> usize {
        self.coords
            .iter()
            .map(|c| c.num().num_terms() + c.den().num_terms())
            .sum()
    }

    /// `self ∘ other`: substitute the coordinates of `other` into `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(
                "composition of maps with different dimensions".into(),
            ));
        }
        // power tables built once to the worst-case bound over all coordinates
        let bounds: Vec<u32> = (0..self.dim)
            .map(|v| {
                self.coords
                    .iter()
                    .map(|c| c.num().degree_in(v).max(c.den().degree_in(v)))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let tables = PowerTables::new(&other.coords, &bounds);
        let mut coords = Vec::with_capacity(self.dim);
        for c in &self.coords {
            coords.push(subst_coordinate(c, &other.coords, &tables)?);
        }
        AffineRationalMap::new(coords)
    }

    /// Clear denominators, homogenize with a fresh variable at index 0 and
    /// divide out the common factor of all `D+1` components.
    pub fn homogenize_reduce(&self) -> Result<ProjectiveMap> {
        let dim = self.dim;
        // least common denominator of the coordinates
        let mut lcd = MultiPoly::one(dim);
        for c in &self.coords {
            let g = gcd_multi(&lcd, c.den());
            let extra = divide_exact(c.den(), &g).expect("gcd divides");
            lcd = lcd.mul(&extra);
        }
        let mut affine = Vec::with_capacity(dim + 1);
        affine.push(lcd.clone());
        for c in &self.coords {
            let cofactor = divide_exact(&lcd, c.den()).expect("lcd is a common multiple");
            affine.push(c.num().mul(&cofactor));
        }
        let target = affine
            .iter()
            .map(MultiPoly::total_degree)
            .max()
            .unwrap_or(0);
        let mut components: Vec<MultiPoly> = affine.iter().map(|p| p.homogenize(target)).collect();
        if components.iter().all(MultiPoly::is_zero) {
            return Err(Error::Degenerate(
                "all homogeneous components vanish identically".into(),
            ));
        }
        let mut g = MultiPoly::zero(dim + 1);
        for c in &components {
            g = gcd_multi(&g, c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            for c in components.iter_mut() {
                *c = divide_exact(c, &g).expect("gcd divides every component");
            }
        }
        let degree = components
            .iter()
            .find(|c| !c.is_zero())
            .expect("not all components vanish")
            .total_degree() as usize;
        debug_assert!(components
            .iter()
            .all(|c| c.is_zero() || c.total_degree() as usize == degree));
        Ok(ProjectiveMap {
            dim,
            components,
            degree,
        })
    }

    /// First degree: the common degree of the reduced homogeneous components.
    pub fn map_degree(&self) -> Result<usize> {
        Ok(self.homogenize_reduce()?.degree())
    }

    /// One line per coordinate, `y<i> = <rational function>`.
    pub fn render(&self) -> String {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| format!("y{} = {}", i + 1, c.render_affine()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Shared powers of the argument numerators and denominators.
struct PowerTables {
    bounds: Vec<u32>,
    num_pows: Vec<Vec<MultiPoly>>,
    den_pows: Vec<Vec<MultiPoly>>,
}

impl PowerTables {
    fn new(args: &[RatFunc], bounds: &[u32]) -> Self {
        let out_vars = args[0].vars();
        let mut num_pows = Vec::with_capacity(args.len());
        let mut den_pows = Vec::with_capacity(args.len());
        for (v, a) in args.iter().enumerate() {
            let mut np = vec![MultiPoly::one(out_vars)];
            let mut dp = vec![MultiPoly::one(out_vars)];
            for e in 1..=bounds[v] {
                np.push(np[(e - 1) as usize].mul(a.num()));
                dp.push(dp[(e - 1) as usize].mul(a.den()));
            }
            num_pows.push(np);
            den_pows.push(dp);
        }
        PowerTables {
            bounds: bounds.to_vec(),
            num_pows,
            den_pows,
        }
    }
}

/// Substitute `args` (all sharing one variable count) into one coordinate.
fn subst_coordinate(c: &RatFunc, args: &[RatFunc], tables: &PowerTables) -> Result<RatFunc> {
    let out_vars = args[0].vars();
    // this coordinate's own degree requirement per variable
    let local: Vec<u32> = (0..args.len())
        .map(|v| c.num().degree_in(v).max(c.den().degree_in(v)))
        .collect();
    let clear = |p: &MultiPoly| -> MultiPoly {
        let mut out = MultiPoly::zero(out_vars);
        for (m, coeff) in p.terms() {
            let mut term = MultiPoly::constant(out_vars, coeff.clone());
            for (v, &e) in m.0.iter().enumerate() {
                term = term.mul(&tables.num_pows[v][e as usize]);
                term = term.mul(&tables.den_pows[v][(local[v] - e) as usize]);
            }
            out = out.add(&term);
        }
        out
    };
    debug_assert!(local.iter().zip(&tables.bounds).all(|(l, b)| l <= b));
    let mut num = clear(c.num());
    let mut den = clear(c.den());
    if den.is_zero() {
        return Err(Error::IndeterminacyCollapse {
            iterate: 0,
            detail: "denominator vanishes identically after substitution".into(),
        });
    }
    // The bulk of the common factor consists of factors of the arguments'
    // numerators and denominators (the cleared tuple overshoots whenever the
    // coordinate's own degrees differ). Refining against those small
    // candidates keeps every gcd call cheap and leaves the general reduction
    // with a small leftover.
    if !num.is_zero() {
        for a in args {
            for candidate in [a.den(), a.num()] {
                if candidate.is_constant() {
                    continue;
                }
                loop {
                    let g = gcd_multi(&num, candidate);
                    if g.is_constant() {
                        break;
                    }
                    let g = gcd_multi(&den, &g);
                    if g.is_constant() {
                        break;
                    }
                    num = divide_exact(&num, &g).expect("gcd divides numerator");
                    den = divide_exact(&den, &g).expect("gcd divides denominator");
                }
            }
        }
    }
    RatFunc::new(num, den)
}

impl ProjectiveMap {
    /// Ambient affine dimension `D`; there are `D+1` components.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Re-verify the gcd-one invariant (used by tests and debug checks).
    pub fn components_coprime(&self) -> bool {
        let mut g = MultiPoly::zero(self.dim + 1);
        for c in &self.components {
            g = gcd_multi(&g, c);
            if g.is_one() {
                return true;
            }
        }
        g.is_one() || self.degree == 0
    }

    pub fn render(&self) -> String {
        let inner = self
            .components
            .iter()
            .map(MultiPoly::render_projective)
            .collect::<Vec<_>>()
            .join(" : ");
        format!("[{inner}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(vars: usize, i: usize) -> MultiPoly {
        MultiPoly::var(vars, i)
    }

    fn poly_map(coords: Vec<MultiPoly>) -> AffineRationalMap {
        AffineRationalMap::new(coords.into_iter().map(RatFunc::from_poly).collect()).unwrap()
    }

    #[test]
    fn squaring_on_the_line() {
        let f = poly_map(vec![x(1, 0).pow(2)]);
        let proj = f.homogenize_reduce().unwrap();
        assert_eq!(proj.degree(), 2);
        // [W^2 : x^2]
        assert_eq!(proj.components()[0], x(2, 0).pow(2));
        assert_eq!(proj.components()[1], x(2, 1).pow(2));
        assert_eq!(f.map_degree().unwrap(), 2);
    }

    #[test]
    fn identity_has_degree_one() {
        for d in 1..4 {
            assert_eq!(AffineRationalMap::identity(d).map_degree().unwrap(), 1);
        }
    }

    #[test]
    fn mixed_rational_map_degree_three() {
        // (x, y) -> (x*y, x/y): components W^2*y? — computed by hand:
        // lcd = y, affine triple (y, x*y^2, x), degree 3 after homogenizing
        let xy = x(2, 0).mul(&x(2, 1));
        let f = AffineRationalMap::new(vec![
            RatFunc::from_poly(xy),
            RatFunc::new(x(2, 0), x(2, 1)).unwrap(),
        ])
        .unwrap();
        let proj = f.homogenize_reduce().unwrap();
        assert_eq!(proj.degree(), 3);
        // variables: (W, x, y) = indices (0, 1, 2)
        let w = x(3, 0);
        let xx = x(3, 1);
        let yy = x(3, 2);
        assert_eq!(proj.components()[0], yy.mul(&w.pow(2)));
        assert_eq!(proj.components()[1], xx.mul(&yy.pow(2)));
        assert_eq!(proj.components()[2], xx.mul(&w.pow(2)));
        assert!(proj.components_coprime());
    }

    #[test]
    fn compose_monomial_example() {
        // (x, y) -> (x*y, x) composed with itself is (x^2*y, x*y)
        let f = poly_map(vec![x(2, 0).mul(&x(2, 1)), x(2, 0)]);
        let ff = f.compose(&f).unwrap();
        assert_eq!(*ff.coords()[0].num(), x(2, 0).pow(2).mul(&x(2, 1)));
        assert_eq!(*ff.coords()[1].num(), x(2, 0).mul(&x(2, 1)));
        assert_eq!(ff.map_degree().unwrap(), 3);
    }

    #[test]
    fn compose_with_identity() {
        let f = poly_map(vec![x(2, 0).mul(&x(2, 1)), x(2, 0).pow(2)]);
        let id = AffineRationalMap::identity(2);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
    }

    #[test]
    fn squaring_composition_power() {
        let f = poly_map(vec![x(1, 0).pow(2)]);
        let f2 = f.compose(&f).unwrap();
        assert_eq!(*f2.coords()[0].num(), x(1, 0).pow(4));
    }

    #[test]
    fn reduction_cancels_common_factors() {
        // coordinate x^2/x reduces to x: degree 1 map
        let f =
            AffineRationalMap::new(vec![RatFunc::new(x(1, 0).pow(2), x(1, 0)).unwrap()]).unwrap();
        assert_eq!(f.map_degree().unwrap(), 1);
    }

    #[test]
    fn indeterminacy_collapse_detected() {
        // c(x) = 1/x composed with the constant-zero map
        let inv = AffineRationalMap::new(vec![RatFunc::new(MultiPoly::one(1), x(1, 0)).unwrap()])
            .unwrap();
        let zero = poly_map(vec![MultiPoly::zero(1)]);
        assert!(matches!(
            inv.compose(&zero),
            Err(Error::IndeterminacyCollapse { .. })
        ));
    }
}
