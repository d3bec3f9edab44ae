//! Supersingular plane quartics `Y⁴ + fY² + gY = X³ + dX² + e` and their
//! Weil polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elliptic::{AsModel, Classifier, IsoLabel};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{AffineSpace, LinearSystem};
use crate::tower::{Level, Tower};

/// `Y⁴ + fY² + gY = X³ + dX² + e` with `g ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quartic {
    pub d: Fe,
    pub e: Fe,
    pub f: Fe,
    pub g: Fe,
}

impl Quartic {
    pub fn new(d: Fe, e: Fe, f: Fe, g: Fe) -> Result<Quartic> {
        if g.is_zero() {
            return Err(Error::Precondition("g must be nonzero"));
        }
        Ok(Quartic { d, e, f, g })
    }
}

/// How `Y³ + fY + g` splits over k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Split,
    Quadratic,
    Cubic,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Split => "split",
            Kind::Quadratic => "quadratic",
            Kind::Cubic => "cubic",
        }
    }
}

/// The nonzero roots of `R(Y) = Y⁴ + fY² + gY`, each in the field where it lives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticType {
    pub kind: Kind,
    pub roots: Vec<(Level, Fe)>,
}

/// One elliptic quotient `y² + y = a_θx³ + a_θd x² + a_θe`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub level: Level,
    pub model: AsModel,
}

/// `x⁶ + a1x⁵ + a2x⁴ + a3x³ + q·a2x² + q²·a1x + q³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeilPoly {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub q: u64,
}

impl WeilPoly {
    pub fn new(a1: i64, a2: i64, a3: i64, q: u64) -> Self {
        WeilPoly { a1, a2, a3, q }
    }

    /// `∏ (x² + tᵢx + q)`.
    pub fn split(t: [i64; 3], q: u64) -> Self {
        let qi = q as i64;
        let e1 = t[0] + t[1] + t[2];
        let e2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
        let e3 = t[0] * t[1] * t[2];
        WeilPoly::new(e1, 3 * qi + e2, e3 + 2 * qi * e1, q)
    }

    /// `(x² + sx + q)(x⁴ + tx² + q²)`.
    pub fn quadratic(s: i64, t: i64, q: u64) -> Self {
        WeilPoly::new(s, q as i64 + t, s * t, q)
    }

    /// `x⁶ + tx³ + q³`.
    pub fn cubic(t: i64, q: u64) -> Self {
        WeilPoly::new(0, 0, t, q)
    }

    /// `(x² + sx + q)(x⁴ + s'x³ + t'x² + qs'x + q²)`.
    pub fn elliptic_surface(s: i64, s1: i64, t1: i64, q: u64) -> Self {
        let qi = q as i64;
        WeilPoly::new(s + s1, t1 + s * s1 + qi, 2 * qi * s1 + s * t1, q)
    }

    /// The polynomial `f(-x)`: the class of the quadratic twist.
    pub fn twisted(&self) -> Self {
        WeilPoly::new(-self.a1, self.a2, -self.a3, self.q)
    }

    /// Coefficients from `x⁶` down to the constant term.
    pub fn coefficients(&self) -> [i128; 7] {
        let q = self.q as i128;
        let (a1, a2, a3) = (self.a1 as i128, self.a2 as i128, self.a3 as i128);
        [1, a1, a2, a3, q * a2, q * q * a1, q * q * q]
    }

    /// `|C(k)| = q + 1 + a1`.
    pub fn points(&self) -> i64 {
        self.q as i64 + 1 + self.a1
    }

    pub fn parse(s: &str, q: u64) -> Result<WeilPoly> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let nums: std::result::Result<Vec<i64>, _> = parts.iter().map(|p| p.parse::<i64>()).collect();
        match nums {
            Ok(v) if v.len() == 3 => Ok(WeilPoly::new(v[0], v[1], v[2], q)),
            _ => Err(Error::NotInCatalog(s.to_string())),
        }
    }
}

impl fmt::Display for WeilPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coefficients();
        let mut out = String::from("x^6");
        for (i, &v) in c.iter().enumerate().skip(1) {
            if v == 0 {
                continue;
            }
            let deg = 6 - i;
            let sign = if v < 0 { '-' } else { '+' };
            let abs = v.unsigned_abs();
            let coef = if abs == 1 && deg > 0 { String::new() } else { abs.to_string() };
            let var = match deg {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{deg}"),
            };
            out.push(sign);
            out.push_str(&coef);
            out.push_str(&var);
        }
        f.write_str(&out)
    }
}

fn r_map(l: &Field, f: Fe, g: Fe) -> LinearSystem {
    l.linear_system(|y| l.frob(y, 2) + l.mul(f, l.square(y)) + l.mul(g, y))
}

fn nonzero_kernel(sys: &LinearSystem) -> Vec<Fe> {
    let mut roots: Vec<Fe> = AffineSpace::new(0, sys.kernel().iter().copied())
        .iter()
        .filter(|&x| x != 0)
        .map(Fe)
        .collect();
    roots.sort_unstable();
    roots
}

/// The splitting type of `R(Y)`, found from the kernel of `R` as an
/// F₂-linear map on k, k₂ and k₃.
pub fn type_of(tower: &Tower, f: Fe, g: Fe) -> Result<QuarticType> {
    if g.is_zero() {
        return Err(Error::Precondition("g must be nonzero"));
    }
    let k = tower.base();
    let base_roots = nonzero_kernel(&r_map(k, f, g));
    let at = |level: Level| -> Vec<Fe> {
        let l = tower.field(level);
        nonzero_kernel(&r_map(l, tower.embed(level, f), tower.embed(level, g)))
    };
    let (kind, roots) = match base_roots.len() {
        3 => (Kind::Split, base_roots.into_iter().map(|r| (Level::Base, r)).collect()),
        1 => {
            let theta = base_roots[0];
            let image = tower.embed(Level::Quadratic, theta);
            let mut roots = vec![(Level::Base, theta)];
            roots.extend(at(Level::Quadratic).into_iter().filter(|&r| r != image).map(|r| (Level::Quadratic, r)));
            (Kind::Quadratic, roots)
        }
        0 => (Kind::Cubic, at(Level::Cubic).into_iter().map(|r| (Level::Cubic, r)).collect()),
        _ => unreachable!("R(Y) has four roots"),
    };
    if roots.len() != 3 {
        return Err(Error::Verification("R(Y) must have three nonzero roots".into()));
    }
    Ok(QuarticType { kind, roots })
}

/// The three quotients, with `a_θ = (θ/g)²`, `b_θ = a_θd`, `c_θ = a_θe`.
pub fn elliptic_quotients(tower: &Tower, c: &Quartic) -> Result<Vec<Quotient>> {
    let ty = type_of(tower, c.f, c.g)?;
    ty.roots
        .iter()
        .map(|&(level, theta)| {
            let l = tower.field(level);
            let a = l.square(l.div(theta, tower.embed(level, c.g))?);
            let model = AsModel::new(a, l.mul(a, tower.embed(level, c.d)), l.mul(a, tower.embed(level, c.e)))?;
            Ok(Quotient { level, model })
        })
        .collect()
}

/// Per-`(f, g)` data: the quartic type and one classifier per Galois orbit
/// of quotients, so that all `(d, e)` can be evaluated cheaply.
#[derive(Clone, Debug)]
pub struct Shape {
    pub kind: Kind,
    // (level, a_θ, classifier) for the orbit representatives
    orbits: Vec<(Level, Fe, Classifier)>,
}

impl Shape {
    pub fn new(tower: &Tower, f: Fe, g: Fe) -> Result<Shape> {
        let ty = type_of(tower, f, g)?;
        let reps: Vec<(Level, Fe)> = match ty.kind {
            Kind::Split => ty.roots.clone(),
            Kind::Quadratic => ty.roots[..2].to_vec(),
            Kind::Cubic => ty.roots[..1].to_vec(),
        };
        let orbits = reps
            .into_iter()
            .map(|(level, theta)| {
                let l = tower.field(level);
                let a = l.square(l.div(theta, tower.embed(level, g))?);
                Ok((level, a, Classifier::new(l, a)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Shape { kind: ty.kind, orbits })
    }

    /// Builds the shape from a Galois-stable set of `a`-values directly:
    /// three elements of k, one of k and one of k₂, or one of k₃.
    pub fn from_orbits(tower: &Tower, kind: Kind, reps: &[(Level, Fe)]) -> Result<Shape> {
        let orbits = reps
            .iter()
            .map(|&(level, a)| Ok((level, a, Classifier::new(tower.field(level), a)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Shape { kind, orbits })
    }

    /// Representative `a`-values of each orbit.
    pub fn a_values(&self) -> Vec<(Level, Fe)> {
        self.orbits.iter().map(|&(l, a, _)| (l, a)).collect()
    }

    /// Frobenius traces of the orbit representatives, each over its own field.
    pub fn traces(&self, tower: &Tower, d: Fe, e: Fe) -> Vec<i64> {
        self.orbits
            .iter()
            .map(|(level, a, cl)| {
                let l = tower.field(*level);
                let b = l.mul(*a, tower.embed(*level, d));
                let c = l.mul(*a, tower.embed(*level, e));
                cl.trace(l, b, c)
            })
            .collect()
    }

    /// Isogeny labels of the orbit representatives.
    pub fn labels(&self, tower: &Tower, d: Fe, e: Fe) -> Vec<IsoLabel> {
        self.traces(tower, d, e)
            .into_iter()
            .zip(&self.orbits)
            .map(|(t, (level, _, _))| {
                let n = tower.field(*level).n();
                IsoLabel::from_trace(t, n).expect("traces come from the tables")
            })
            .collect()
    }

    pub fn weil(&self, tower: &Tower, d: Fe, e: Fe) -> WeilPoly {
        let q = tower.base().q();
        let t = self.traces(tower, d, e);
        match self.kind {
            Kind::Split => WeilPoly::split([t[0], t[1], t[2]], q),
            Kind::Quadratic => WeilPoly::quadratic(t[0], t[1], q),
            Kind::Cubic => WeilPoly::cubic(t[0], q),
        }
    }
}

/// The Weil polynomial of the Jacobian, from the quotient classes.
pub fn weil_poly(tower: &Tower, c: &Quartic) -> Result<WeilPoly> {
    Ok(Shape::new(tower, c.f, c.g)?.weil(tower, c.d, c.e))
}

/// Largest base degree for which the naive counter enumerates k₃.
pub const NAIVE_MAX_DEGREE: u32 = 8;

/// `|C(F_{q^r})|` for `r = 1, 2, 3`, by enumerating X.
pub fn point_counts(tower: &Tower, c: &Quartic) -> Result<[u64; 3]> {
    point_counts_guarded(tower, c, NAIVE_MAX_DEGREE)
}

pub fn point_counts_guarded(tower: &Tower, c: &Quartic, max_degree: u32) -> Result<[u64; 3]> {
    let n = tower.base().n();
    if n > max_degree {
        return Err(Error::ScaleGuard {
            what: "naive point count",
            n,
            limit: max_degree,
        });
    }
    if c.g.is_zero() {
        return Err(Error::Precondition("g must be nonzero"));
    }
    let mut out = [0u64; 3];
    for (i, level) in [Level::Base, Level::Quadratic, Level::Cubic].into_iter().enumerate() {
        let l = tower.field(level);
        let emb = |x: Fe| tower.embed(level, x);
        let (d, e) = (emb(c.d), emb(c.e));
        let sys = r_map(l, emb(c.f), emb(c.g));
        let fibre = 1u64 << sys.kernel().len();
        let hits = l
            .elements()
            .filter(|&x| {
                let x2 = l.square(x);
                sys.in_image((l.mul(x2, x) + l.mul(d, x2) + e).0)
            })
            .count() as u64;
        out[i] = 1 + fibre * hits;
    }
    Ok(out)
}

/// The Weil polynomial from point counts over k, k₂, k₃ via Newton's identities.
pub fn naive_weil_poly(tower: &Tower, c: &Quartic) -> Result<WeilPoly> {
    let q = tower.base().q();
    let counts = point_counts(tower, c)?;
    Ok(weil_from_counts(q, counts))
}

/// Recovers `(a1, a2, a3)` from `N_r = q^r + 1 − Σ αᵢ^r`.
pub fn weil_from_counts(q: u64, counts: [u64; 3]) -> WeilPoly {
    let qi = q as i128;
    let s = |r: u32, n: u64| qi.pow(r) + 1 - n as i128;
    let (s1, s2, s3) = (s(1, counts[0]), s(2, counts[1]), s(3, counts[2]));
    let e1 = s1;
    let e2 = (e1 * s1 - s2) / 2;
    let e3 = (e2 * s1 - e1 * s2 + s3) / 3;
    WeilPoly::new(-e1 as i64, e2 as i64, -e3 as i64, q)
}

/// Integer square root of `q = 2^n` for even `n`.
fn sqrt_q(tower: &Tower, what: &'static str) -> Result<i64> {
    let k = tower.base();
    if !k.is_square() {
        return Err(Error::OddDegree(what));
    }
    Ok(1i64 << (k.n() / 2))
}

/// `|C(k)| = q + 1 + 6√q`.
pub fn is_maximal(tower: &Tower, c: &Quartic) -> Result<bool> {
    let r = sqrt_q(tower, "maximality")?;
    Ok(weil_poly(tower, c)?.a1 == 6 * r)
}

/// `|C(k)| = q + 1 − 6√q`.
pub fn is_minimal(tower: &Tower, c: &Quartic) -> Result<bool> {
    let r = sqrt_q(tower, "minimality")?;
    Ok(weil_poly(tower, c)?.a1 == -6 * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_over_f2() {
        let t = Tower::new(1).unwrap();
        assert_eq!(type_of(&t, Fe(1), Fe(1)).unwrap().kind, Kind::Cubic);
        assert_eq!(type_of(&t, Fe(0), Fe(1)).unwrap().kind, Kind::Quadratic);
    }

    #[test]
    fn cubic_quartic_over_f2() {
        let t = Tower::new(1).unwrap();
        let c = Quartic::new(Fe(0), Fe(0), Fe(1), Fe(1)).unwrap();
        let w = weil_poly(&t, &c).unwrap();
        assert_eq!(w, WeilPoly::new(0, 0, 0, 2));
        assert_eq!(w.to_string(), "x^6+8");
        assert_eq!(naive_weil_poly(&t, &c).unwrap(), w);
        assert_eq!(point_counts(&t, &c).unwrap()[0], 3);
        let qs = elliptic_quotients(&t, &c).unwrap();
        let k3 = t.field(Level::Cubic);
        assert_eq!(qs.iter().fold(Fe::ZERO, |acc, q| acc + q.model.a), Fe::ZERO);
        for q in &qs {
            let theta = k3.sqrt(q.model.a);
            assert_eq!(k3.mul(k3.square(theta), theta) + theta + Fe::ONE, Fe::ZERO);
        }
    }

    #[test]
    fn expansion_of_split_product() {
        let w = WeilPoly::split([2, -2, 0], 2);
        assert_eq!(w.a1, 0);
        let c = w.coefficients();
        // (x²+2x+2)(x²-2x+2)(x²+2) = (x⁴+4)(x²+2)
        assert_eq!(c, [1, 0, 2, 0, 4, 0, 8]);
        assert_eq!(WeilPoly::elliptic_surface(0, 0, 0, 16).coefficients(), [1, 0, 16, 0, 256, 0, 4096]);
    }

    #[test]
    fn newton_recovers_split_product() {
        let q = 16u64;
        let w = WeilPoly::split([8, 8, 8], q);
        // every root is -4
        let counts = [1, 2, 3].map(|r: u32| (q.pow(r) as i128 + 1 - 6 * (-4i128).pow(r)) as u64);
        assert_eq!(weil_from_counts(q, counts), w);
    }

    #[test]
    fn maximal_needs_square_q() {
        let t = Tower::new(3).unwrap();
        let c = Quartic::new(Fe(0), Fe(0), Fe(1), Fe(1)).unwrap();
        assert!(is_maximal(&t, &c).is_err());
    }
}
