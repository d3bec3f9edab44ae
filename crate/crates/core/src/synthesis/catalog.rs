//! Supersingular isogeny classes of abelian threefolds over F_{2^n} and
//! which of them contain a Jacobian.

use std::fmt;

use serde::Serialize;

use crate::elliptic::{self, IsoLabel};
use crate::error::{Error, Result};
use crate::quartic::{Quartic, WeilPoly};

/// One isogeny class, described by its factorization shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum IsogenyClassSpec {
    /// `x⁶ + sign·√(q³)·x³ + q³`, only for square q.
    Simple { sign: i8 },
    /// `(x² + sx + q)(x⁴ + s1·x³ + t1·x² + q·s1·x + q²)` with a simple surface factor.
    EllTimesSurface { s: i64, s1: i64, t1: i64 },
    /// `∏ (x² + tᵢx + q)`, traces ascending.
    TripleSplit { traces: [i64; 3] },
}

impl IsogenyClassSpec {
    pub fn weil(&self, n: u32) -> WeilPoly {
        let q = 1u64 << n;
        match *self {
            IsogenyClassSpec::Simple { sign } => WeilPoly::cubic(sign as i64 * (1i64 << (3 * n / 2)), q),
            IsogenyClassSpec::EllTimesSurface { s, s1, t1 } => WeilPoly::elliptic_surface(s, s1, t1, q),
            IsogenyClassSpec::TripleSplit { traces } => WeilPoly::split(traces, q),
        }
    }

    /// A human-readable isogeny decomposition such as `E1 x A(0,-16)`.
    pub fn decomposition(&self, n: u32) -> String {
        let name = |t: i64| IsoLabel::from_trace(t, n).map_or_else(|| format!("t={t}"), |l| l.to_string());
        match *self {
            IsogenyClassSpec::Simple { .. } => "simple".into(),
            IsogenyClassSpec::EllTimesSurface { s, s1, t1 } => format!("{} x A({s1},{t1})", name(s)),
            IsogenyClassSpec::TripleSplit { traces } => {
                traces.iter().map(|&t| name(t)).collect::<Vec<_>>().join(" x ")
            }
        }
    }
}

impl fmt::Display for IsogenyClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsogenyClassSpec::Simple { sign } => write!(f, "simple({sign:+})"),
            IsogenyClassSpec::EllTimesSurface { s, s1, t1 } => write!(f, "E(t={s}) x A({s1},{t1})"),
            IsogenyClassSpec::TripleSplit { traces } => write!(f, "split{traces:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub spec: IsogenyClassSpec,
    pub weil: WeilPoly,
    pub decomposition: String,
}

/// Whether a class contains a Jacobian, why, and optionally a curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub attainable: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Quartic>,
}

impl Verdict {
    fn yes(reason: &str) -> Verdict {
        Verdict {
            attainable: true,
            reason: reason.into(),
            witness: None,
        }
    }

    fn no(reason: &str) -> Verdict {
        Verdict {
            attainable: false,
            reason: reason.into(),
            witness: None,
        }
    }
}

/// `(s, t)` for the simple supersingular surfaces `x⁴ + sx³ + tx² + qsx + q²`.
pub fn surfaces(n: u32) -> Vec<(i64, i64)> {
    let q = 1i64 << n;
    if n % 2 == 0 {
        let r = 1i64 << (n / 2);
        vec![(0, 0), (0, -q), (r, q), (-r, q)]
    } else {
        let r = 1i64 << n.div_ceil(2);
        vec![(0, -2 * q), (0, q), (0, -q), (r, q), (-r, q)]
    }
}

/// Every supersingular class over F_{2^n}, in a fixed order.
pub fn enumerate_classes(n: u32) -> Vec<CatalogEntry> {
    let mut specs = Vec::new();
    if n % 2 == 0 {
        specs.push(IsogenyClassSpec::Simple { sign: 1 });
        specs.push(IsogenyClassSpec::Simple { sign: -1 });
    }
    let ts = elliptic::traces(n);
    for &s in &ts {
        for (s1, t1) in surfaces(n) {
            specs.push(IsogenyClassSpec::EllTimesSurface { s, s1, t1 });
        }
    }
    for i in 0..ts.len() {
        for j in i..ts.len() {
            for l in j..ts.len() {
                specs.push(IsogenyClassSpec::TripleSplit {
                    traces: [ts[i], ts[j], ts[l]],
                });
            }
        }
    }
    specs
        .into_iter()
        .map(|spec| CatalogEntry {
            spec,
            weil: spec.weil(n),
            decomposition: spec.decomposition(n),
        })
        .collect()
}

/// The catalog entry with the given Weil polynomial.
pub fn lookup(n: u32, weil: &WeilPoly) -> Result<CatalogEntry> {
    enumerate_classes(n)
        .into_iter()
        .find(|e| e.weil.a1 == weil.a1 && e.weil.a2 == weil.a2 && e.weil.a3 == weil.a3 && e.weil.q == weil.q)
        .ok_or_else(|| Error::NotInCatalog(format!("({},{},{}) over F_{}", weil.a1, weil.a2, weil.a3, weil.q)))
}

fn in_catalog(n: u32, spec: &IsogenyClassSpec) -> bool {
    enumerate_classes(n).iter().any(|e| e.spec == *spec)
}

/// Decides whether the class contains the Jacobian of a genus-3 curve.
pub fn contains_jacobian(n: u32, spec: &IsogenyClassSpec) -> Result<Verdict> {
    if !in_catalog(n, spec) {
        return Err(Error::NotInCatalog(spec.to_string()));
    }
    Ok(match *spec {
        IsogenyClassSpec::Simple { .. } => Verdict::yes("simple classes always contain a Jacobian"),
        IsogenyClassSpec::EllTimesSurface { s, s1, t1 } => surface_verdict(n, s, s1, t1),
        IsogenyClassSpec::TripleSplit { traces } => split_verdict(n, traces),
    })
}

fn surface_verdict(n: u32, s: i64, s1: i64, t1: i64) -> Verdict {
    let q = 1i64 << n;
    if n % 2 == 0 && s1 != 0 && t1 == q {
        return Verdict::no("surface factor x^4±√q·x^3+qx^2±q√q·x+q^2 never occurs");
    }
    if n == 2 && matches!((s, s1, t1), (0, 0, 0) | (4, 0, 0) | (-4, 0, 0) | (4, 0, -4)) {
        return Verdict::no("exceptional product over F_4");
    }
    if n % 2 == 1 && s1 != 0 && t1 == q && (s == 0 || s == s1) {
        return Verdict::no("q non-square: elliptic trace 0 or ε√(2q) against surface A(ε√(2q),q)");
    }
    if n == 3 && (s, s1, t1) == (4, 0, -16) {
        return Verdict::no("exceptional product over F_8");
    }
    if n == 1 {
        if (s1, t1) == (0, -4) {
            return Verdict::no("surface factor x^4-4x^2+4 over F_2");
        }
        if matches!((s, s1, t1), (2, 0, -2) | (-2, 0, 2) | (2, -2, 2)) {
            return Verdict::no("exceptional product over F_2");
        }
    }
    Verdict::yes("elliptic times simple surface, no exception applies")
}

fn split_verdict(n: u32, mut t: [i64; 3]) -> Verdict {
    t.sort_unstable();
    let none = |list: &[[i64; 3]], reason: &str| {
        if list.contains(&t) {
            Verdict::no(reason)
        } else {
            Verdict::yes("product of three elliptic curves, no exception applies")
        }
    };
    match n {
        1 => Verdict::no("no split class over F_2 contains a Jacobian"),
        2 => {
            let whitelist = [[0, 2, 2], [-2, -2, 0], [2, 2, 4], [-2, -2, 4], [0, 0, 2], [-4, -2, 4]];
            if t.contains(&2) && t.contains(&-2) {
                Verdict::yes("over F_4: divisible by (x^2+2x+4)(x^2-2x+4)")
            } else if whitelist.contains(&t) {
                Verdict::yes("over F_4: listed exceptional product")
            } else {
                Verdict::no("over F_4: not divisible by (x^2+2x+4)(x^2-2x+4) and not listed")
            }
        }
        3 => none(&[[-4, -4, -4]], "(x^2-4x+8)^3 over F_8"),
        4 => none(
            &[
                [-8, 0, 0],
                [0, 8, 8],
                [-8, -8, 0],
                [8, 8, 8],
                [-8, -8, -8],
                [-8, 8, 8],
                [-4, 8, 8],
                [-8, -8, -4],
            ],
            "exceptional product over F_16",
        ),
        6 => none(&[[-16, -16, -16]], "(x^2-16x+64)^3 over F_64"),
        _ => Verdict::yes("product of three elliptic curves, no exception applies"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        for n in 1..=12 {
            let c = enumerate_classes(n);
            assert_eq!(c.len(), if n % 2 == 0 { 57 } else { 25 }, "n={n}");
            let mut w: Vec<_> = c.iter().map(|e| e.weil).collect();
            w.sort();
            w.dedup();
            assert_eq!(w.len(), c.len());
            let simple = c.iter().filter(|e| matches!(e.spec, IsogenyClassSpec::Simple { .. })).count();
            assert_eq!(simple, if n % 2 == 0 { 2 } else { 0 });
        }
        let splits = enumerate_classes(1)
            .iter()
            .filter(|e| matches!(e.spec, IsogenyClassSpec::TripleSplit { .. }))
            .count();
        assert_eq!(splits, 10);
    }

    #[test]
    fn listed_exceptions() {
        let v = |n, spec| contains_jacobian(n, &spec).unwrap().attainable;
        assert!(!v(6, IsogenyClassSpec::TripleSplit { traces: [-16, -16, -16] }));
        assert!(v(6, IsogenyClassSpec::TripleSplit { traces: [16, 16, 16] }));
        assert!(!v(3, IsogenyClassSpec::EllTimesSurface { s: 0, s1: 4, t1: 8 }));
        assert!(!v(2, IsogenyClassSpec::EllTimesSurface { s: 0, s1: 0, t1: 0 }));
        for e in enumerate_classes(7) {
            if let IsogenyClassSpec::TripleSplit { .. } = e.spec {
                assert!(contains_jacobian(7, &e.spec).unwrap().attainable);
            }
        }
        assert!(contains_jacobian(2, &IsogenyClassSpec::Simple { sign: 3 }).is_err());
    }

    #[test]
    fn expansions_match_written_polynomials() {
        // (x²+8)(x⁴+4x³+8x²+32x+64)
        let w = IsogenyClassSpec::EllTimesSurface { s: 0, s1: 4, t1: 8 }.weil(3);
        assert_eq!(w.coefficients(), [1, 4, 16, 64, 128, 256, 512]);
        let w = IsogenyClassSpec::Simple { sign: -1 }.weil(2);
        assert_eq!(w.coefficients(), [1, 0, 0, -8, 0, 0, 64]);
    }
}
