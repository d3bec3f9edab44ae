//! Explicit quartics with prescribed elliptic quotients.
//!
//! Every search runs in canonical order, so witnesses are deterministic,
//! and every result is re-derived from scratch before it is returned.

use serde::Serialize;

use super::catalog::{contains_jacobian, lookup};
use super::tables::{cubic_attained, pair_attained, template_attained, templates_for, triple_attained, Template};
use crate::auxgeom::{param_inv_cubes, param_sum_zero, search_lambda, DParams};
use crate::elliptic::{Classifier, IsoLabel};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::AffineSpace;
use crate::quartic::{weil_poly, Kind, Quartic, Shape, WeilPoly};
use crate::tower::{Level, Tower};

/// Three `a`-values summing to zero, all in the field of `level`, stable
/// under Galois over k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ASet {
    pub level: Level,
    pub values: [Fe; 3],
}

/// The quartic whose quotients have the given `a`-values and coefficients
/// `d`, `e`: with `sᵢ = √aᵢ`, `g² = (s s' s'')⁻¹` and `f = g²(ss' + ss'' + s's'')`.
pub fn quartic_from_data(tower: &Tower, aset: &ASet, d: Fe, e: Fe) -> Result<Quartic> {
    let l = tower.field(aset.level);
    let [a0, a1, a2] = aset.values;
    if a0.is_zero() || a1.is_zero() || a2.is_zero() {
        return Err(Error::Precondition("a-values must be nonzero"));
    }
    if !(a0 + a1 + a2).is_zero() {
        return Err(Error::Precondition("a-values must sum to zero"));
    }
    let [s0, s1, s2] = aset.values.map(|a| l.sqrt(a));
    let g2 = l.inv(l.mul(l.mul(s0, s1), s2))?;
    let g = l.sqrt(g2);
    let f = l.mul(g2, l.mul(s0, s1) + l.mul(s0, s2) + l.mul(s1, s2));
    let unstable = |_| Error::Precondition("a-values are not Galois-stable over k");
    let g = tower.restrict(aset.level, g).map_err(unstable)?;
    let f = tower.restrict(aset.level, f).map_err(unstable)?;
    Quartic::new(d, e, f, g)
}

/// A quartic together with the data it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub quartic: Quartic,
    pub template: Template,
    pub weil: WeilPoly,
    /// `|C(k)|`
    pub points: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Construction {
    Attained(Witness),
    NotAttainable { reason: String },
}

impl Construction {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Construction::Attained(w) => Some(w),
            Construction::NotAttainable { .. } => None,
        }
    }
}

/// Default number of `(a-values, d)` candidates examined before giving up.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

struct Budget(u64);

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.0 == 0 {
            return Err(Error::Verification("search budget exhausted".into()));
        }
        self.0 -= 1;
        Ok(())
    }
}

// Whether the class forces a to be a cube (Some(true)) or a non-cube.
fn cube_class(l: IsoLabel) -> Option<bool> {
    match l {
        IsoLabel::E1 | IsoLabel::E1Twist => Some(true),
        IsoLabel::Enc | IsoLabel::EncTwist => Some(false),
        _ => None,
    }
}

fn fits(field: &Field, a: Fe, l: IsoLabel) -> bool {
    !field.is_square() || cube_class(l).is_none_or(|c| field.is_cube(a) == c)
}

fn check_labels(labels: &[IsoLabel], n: u32) -> Result<()> {
    if labels.iter().all(|l| IsoLabel::all(n).contains(l)) {
        Ok(())
    } else {
        Err(Error::ParityMismatch {
            label: labels.iter().find(|l| !IsoLabel::all(n).contains(l)).unwrap().as_str(),
            parity: if n % 2 == 0 { "even" } else { "odd" },
        })
    }
}

// The least e with Tr(xᵢ e) = bᵢ for all i.
fn solve_traces(k: &Field, conds: &[(Fe, u8)]) -> Option<Fe> {
    k.elements().find(|&e| conds.iter().all(|&(x, b)| k.trace(k.mul(x, e)) == b))
}

/// A split quartic whose quotients lie in the classes `target`.
pub fn construct_split(tower: &Tower, target: [IsoLabel; 3]) -> Result<Option<Quartic>> {
    construct_split_budget(tower, target, DEFAULT_BUDGET)
}

fn construct_split_budget(tower: &Tower, mut target: [IsoLabel; 3], budget: u64) -> Result<Option<Quartic>> {
    let k = tower.base();
    let n = k.n();
    check_labels(&target, n)?;
    target.sort_unstable();
    if !triple_attained(n, target) {
        return Ok(None);
    }
    let mut budget = Budget(budget);
    let q = k.q();
    let want = |c: bool| target.iter().filter(|&&l| cube_class(l) == Some(c)).count();
    let (want_cubes, want_non) = (want(true), want(false));
    for x in 1..q {
        for y in x + 1..q {
            let z = x ^ y;
            if z <= y {
                continue;
            }
            let vals = [Fe(x), Fe(y), Fe(z)];
            if k.is_square() {
                let cubes = vals.iter().filter(|&&a| k.is_cube(a)).count();
                if cubes < want_cubes || 3 - cubes < want_non {
                    continue;
                }
            }
            let reps = vals.map(|a| (Level::Base, a));
            let shape = Shape::from_orbits(tower, Kind::Split, &reps)?;
            for d in k.elements() {
                budget.spend()?;
                let base = shape.labels(tower, d, Fe::ZERO);
                for (fx, fy) in [(0u8, 0u8), (1, 1), (1, 0), (0, 1)] {
                    let tw = |l: IsoLabel, on: u8| if on == 1 { l.twisted(n) } else { l };
                    let mut got = [tw(base[0], fx), tw(base[1], fy), tw(base[2], fx ^ fy)];
                    got.sort_unstable();
                    if got != target {
                        continue;
                    }
                    let e = solve_traces(k, &[(vals[0], fx), (vals[1], fy)]).expect("distinct a-values give independent traces");
                    let aset = ASet { level: Level::Base, values: vals };
                    return quartic_from_data(tower, &aset, d, e).map(Some);
                }
            }
        }
    }
    Ok(None)
}

/// A quadratic-type quartic with quotient in class `e` over k and `f` over k₂.
pub fn construct_quadratic_type(tower: &Tower, e: IsoLabel, f: IsoLabel) -> Result<Option<Quartic>> {
    construct_quadratic_budget(tower, e, f, DEFAULT_BUDGET)
}

fn construct_quadratic_budget(tower: &Tower, e: IsoLabel, f: IsoLabel, budget: u64) -> Result<Option<Quartic>> {
    let k = tower.base();
    let k2 = tower.field(Level::Quadratic);
    let n = k.n();
    check_labels(&[e], n)?;
    check_labels(&[f], 2 * n)?;
    if !pair_attained(n, e, f) {
        return Ok(None);
    }
    let emb = tower.embedding(Level::Quadratic).expect("k₂ is an extension");
    let mut budget = Budget(budget);
    for a1 in k2.nonzero() {
        let conj = emb.frob_q(a1);
        if conj <= a1 || !fits(k2, a1, f) {
            continue;
        }
        let a = emb.restrict(a1 + conj)?;
        if !fits(k, a, e) {
            continue;
        }
        let shape = Shape::from_orbits(tower, Kind::Quadratic, &[(Level::Base, a), (Level::Quadratic, a1)])?;
        for d in k.elements() {
            budget.spend()?;
            let got = shape.labels(tower, d, Fe::ZERO);
            let flip = if (got[0], got[1]) == (e, f) {
                0
            } else if (got[0].twisted(n), got[1].twisted(2 * n)) == (e, f) {
                1
            } else {
                continue;
            };
            let ee = solve_traces(k, &[(a, flip)]).expect("a is nonzero");
            let aset = ASet {
                level: Level::Quadratic,
                values: [emb.embed(a), a1, conj],
            };
            return quartic_from_data(tower, &aset, d, ee).map(Some);
        }
    }
    Ok(None)
}

/// A cubic-type quartic whose quotient lies in class `target` over k₃.
pub fn construct_cubic_type(tower: &Tower, target: IsoLabel) -> Result<Option<Quartic>> {
    construct_cubic_budget(tower, target, DEFAULT_BUDGET)
}

// Nonzero a ∈ k₃ with Tr_{k₃/k}(a) = 0, least in their Galois orbit.
fn trace_zero_orbits(tower: &Tower) -> Vec<Fe> {
    let k3 = tower.field(Level::Cubic);
    let emb = tower.embedding(Level::Cubic).expect("k₃ is an extension");
    let sys = k3.linear_system(|y| {
        let y1 = emb.frob_q(y);
        y + y1 + emb.frob_q(y1)
    });
    let space = AffineSpace::new(0, sys.kernel().iter().copied());
    space
        .iter()
        .filter(|&x| x != 0)
        .map(Fe)
        .filter(|&a| {
            let a1 = emb.frob_q(a);
            a < a1 && a < emb.frob_q(a1)
        })
        .collect()
}

// The d suggested by the explicit parametrizations for the quotient class
// `target` and the value a, or None when the parametrization does not apply.
fn guided_d(tower: &Tower, a: Fe, target: IsoLabel) -> Result<Option<Fe>> {
    let k = tower.base();
    let k3 = tower.field(Level::Cubic);
    let emb = tower.embedding(Level::Cubic).expect("k₃ is an extension");
    let conj = |r: Fe| {
        let s = emb.frob_q(r);
        (r, s, emb.frob_q(s))
    };
    let down = |p: DParams| -> Result<DParams> {
        Ok(DParams::new(emb.restrict(p.a)?, emb.restrict(p.b)?, emb.restrict(p.c)?, emb.restrict(p.d)?))
    };
    match target {
        IsoLabel::E1 | IsoLabel::Enc => Ok(Some(Fe::ZERO)),
        IsoLabel::E1Twist | IsoLabel::EncTwist => {
            let (r, s, t) = conj(k3.root2k(a, 3));
            let Ok(p) = DParams::sum_zero(k3, r, s, t).and_then(down) else {
                return Ok(None);
            };
            let Some(lambda) = search_lambda(k, &p, 1) else {
                return Ok(None);
            };
            let x = param_sum_zero(k3, r, s, t, emb.embed(lambda))?[0];
            Ok(emb.restrict(x + k3.mul(a, k3.frob(x, 2))).ok())
        }
        IsoLabel::H | IsoLabel::HTwist => {
            let u = k3.cube_root(a).ok_or(Error::Precondition("a must be a cube"))?;
            let ui = k3.inv(u)?;
            let (r, s, t) = conj(k3.root2k(ui, 4));
            let Ok(p) = DParams::inv_cubes(k3, r, s, t).and_then(down) else {
                return Ok(None);
            };
            let eps = if target == IsoLabel::H { 0 } else { 1 };
            let Some(lambda) = search_lambda(k, &p, eps) else {
                return Ok(None);
            };
            let x = param_inv_cubes(k3, r, s, t, emb.embed(lambda))?[0];
            Ok(emb.restrict(k3.mul(ui, Fe::ONE + x + k3.frob(x, 2))).ok())
        }
        IsoLabel::E0 => Ok(None),
    }
}

// Number of a-values tried along the guided path before the full search.
const GUIDED_TRIES: usize = 16;

fn construct_cubic_budget(tower: &Tower, target: IsoLabel, budget: u64) -> Result<Option<Quartic>> {
    let k = tower.base();
    let k3 = tower.field(Level::Cubic);
    let n = k.n();
    check_labels(&[target], 3 * n)?;
    if !cubic_attained(n, target) {
        return Ok(None);
    }
    let mut budget = Budget(budget);
    let wanted = |a: Fe| {
        if target == IsoLabel::E0 {
            !k3.is_square() || k3.is_cube(a)
        } else {
            fits(k3, a, target)
        }
    };
    let found = |a: Fe, d: Fe, cl: &Classifier| -> bool {
        let b = k3.mul(a, tower.embed(Level::Cubic, d));
        IsoLabel::of(cl.classify(k3, b, Fe::ZERO).label) == target
    };
    let build = |a: Fe, d: Fe| -> Result<Option<Quartic>> {
        let emb = tower.embedding(Level::Cubic).expect("k₃ is an extension");
        let a1 = emb.frob_q(a);
        let aset = ASet {
            level: Level::Cubic,
            values: [a, a1, emb.frob_q(a1)],
        };
        quartic_from_data(tower, &aset, d, Fe::ZERO).map(Some)
    };
    let orbits: Vec<Fe> = trace_zero_orbits(tower).into_iter().filter(|&a| wanted(a)).collect();
    for &a in orbits.iter().take(GUIDED_TRIES) {
        if let Some(d) = guided_d(tower, a, target)? {
            budget.spend()?;
            if found(a, d, &Classifier::new(k3, a)?) {
                return build(a, d);
            }
        }
    }
    for &a in &orbits {
        let cl = Classifier::new(k3, a)?;
        for d in k.elements() {
            budget.spend()?;
            if found(a, d, &cl) {
                return build(a, d);
            }
        }
    }
    Ok(None)
}

// The quotient classes of a quartic, recomputed from its coefficients.
fn observed_template(tower: &Tower, c: &Quartic) -> Result<Template> {
    let shape = Shape::new(tower, c.f, c.g)?;
    let l = shape.labels(tower, c.d, c.e);
    Ok(match shape.kind {
        Kind::Split => Template::split([l[0], l[1], l[2]]),
        Kind::Quadratic => Template::Quadratic(l[0], l[1]),
        Kind::Cubic => Template::Cubic(l[0]),
    })
}

/// A quartic with the quotient classes of `t`, or `None` when no such
/// quartic exists.
pub fn construct_template(tower: &Tower, t: &Template) -> Result<Option<Quartic>> {
    construct_template_budget(tower, t, DEFAULT_BUDGET)
}

pub fn construct_template_budget(tower: &Tower, t: &Template, budget: u64) -> Result<Option<Quartic>> {
    let out = match *t {
        Template::Split(l) => construct_split_budget(tower, l, budget)?,
        Template::Quadratic(e, f) => construct_quadratic_budget(tower, e, f, budget)?,
        Template::Cubic(e) => construct_cubic_budget(tower, e, budget)?,
    };
    let n = tower.base().n();
    match out {
        Some(c) => {
            let seen = observed_template(tower, &c)?;
            if seen != *t {
                return Err(Error::Verification(format!("built {seen} while asked for {t}")));
            }
            Ok(Some(c))
        }
        None if template_attained(n, t) => Err(Error::Verification(format!("no quartic found for {t}"))),
        None => Ok(None),
    }
}

/// A quartic whose Jacobian has Weil polynomial `target`.
pub fn construct_for_weil(tower: &Tower, target: &WeilPoly) -> Result<Construction> {
    construct_for_weil_budget(tower, target, DEFAULT_BUDGET)
}

pub fn construct_for_weil_budget(tower: &Tower, target: &WeilPoly, budget: u64) -> Result<Construction> {
    let n = tower.base().n();
    let entry = lookup(n, target)?;
    let verdict = contains_jacobian(n, &entry.spec)?;
    if !verdict.attainable {
        return Ok(Construction::NotAttainable { reason: verdict.reason });
    }
    let candidates: Vec<Template> = templates_for(n, target)
        .into_iter()
        .filter(|t| template_attained(n, t))
        .collect();
    let Some(t) = candidates.first() else {
        return Err(Error::Verification(format!(
            "class {} is predicted to contain a Jacobian but no quotient pattern realizes it",
            entry.spec
        )));
    };
    let c = construct_template_budget(tower, t, budget)?
        .ok_or_else(|| Error::Verification(format!("no quartic found for {t}")))?;
    let w = weil_poly(tower, &c)?;
    if w != *target {
        return Err(Error::Verification(format!("built Weil polynomial {w}, expected {target}")));
    }
    Ok(Construction::Attained(Witness {
        quartic: c,
        template: *t,
        weil: w,
        points: w.points(),
    }))
}

/// The Weil polynomial of a maximal (or minimal) curve: `(x² ± 2√q·x + q)³`.
pub fn extremal_weil(n: u32, maximal: bool) -> Result<WeilPoly> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(if maximal { "maximal curves" } else { "minimal curves" }));
    }
    let t = (1i64 << (n / 2 + 1)) * if maximal { 1 } else { -1 };
    Ok(WeilPoly::split([t, t, t], 1 << n))
}

/// A maximal (or minimal) quartic over k, if one exists.
pub fn construct_extremal(tower: &Tower, maximal: bool) -> Result<Construction> {
    construct_for_weil(tower, &extremal_weil(tower.base().n(), maximal)?)
}
