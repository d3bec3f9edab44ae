//! Which combinations of elliptic quotients occur on quartics of each type.

use std::fmt;

use serde::Serialize;

use crate::elliptic::IsoLabel;
use crate::quartic::{Kind, WeilPoly};

/// The isogeny classes of the elliptic quotients of a quartic: three
/// classes over k for split quartics, a class over k and one over k₂ for
/// quadratic type, one class over k₃ for cubic type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Template {
    Split([IsoLabel; 3]),
    Quadratic(IsoLabel, IsoLabel),
    Cubic(IsoLabel),
}

impl Template {
    pub fn split(mut t: [IsoLabel; 3]) -> Template {
        t.sort_unstable();
        Template::Split(t)
    }

    pub fn kind(&self) -> Kind {
        match self {
            Template::Split(_) => Kind::Split,
            Template::Quadratic(..) => Kind::Quadratic,
            Template::Cubic(_) => Kind::Cubic,
        }
    }

    pub fn labels(&self) -> Vec<IsoLabel> {
        match *self {
            Template::Split(t) => t.to_vec(),
            Template::Quadratic(e, f) => vec![e, f],
            Template::Cubic(e) => vec![e],
        }
    }

    /// The Weil polynomial over k of any quartic with these quotients.
    pub fn weil(&self, n: u32) -> WeilPoly {
        let q = 1u64 << n;
        let t = |l: IsoLabel, m: u32| l.trace(m).expect("template labels match their field");
        match *self {
            Template::Split([a, b, c]) => WeilPoly::split([t(a, n), t(b, n), t(c, n)], q),
            Template::Quadratic(e, f) => WeilPoly::quadratic(t(e, n), t(f, 2 * n), q),
            Template::Cubic(e) => WeilPoly::cubic(t(e, 3 * n), q),
        }
    }

    /// All templates over F_{2^n}, split first.
    pub fn all(n: u32) -> Vec<Template> {
        let base = IsoLabel::all(n);
        let mut out = Vec::new();
        for i in 0..base.len() {
            for j in i..base.len() {
                for l in j..base.len() {
                    out.push(Template::split([base[i], base[j], base[l]]));
                }
            }
        }
        for &e in base {
            for &f in IsoLabel::all(2 * n) {
                out.push(Template::Quadratic(e, f));
            }
        }
        for &e in IsoLabel::all(3 * n) {
            out.push(Template::Cubic(e));
        }
        out
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Template::Split([a, b, c]) => write!(f, "split {{{a},{b},{c}}}"),
            Template::Quadratic(e, g) => write!(f, "quadratic ({e},{g})"),
            Template::Cubic(e) => write!(f, "cubic {e}"),
        }
    }
}

impl Serialize for Template {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Template", 2)?;
        st.serialize_field("type", self.kind().as_str())?;
        st.serialize_field("labels", &self.labels())?;
        st.end()
    }
}

/// Templates whose Weil polynomial equals `w`, split first.
pub fn templates_for(n: u32, w: &WeilPoly) -> Vec<Template> {
    Template::all(n).into_iter().filter(|t| t.weil(n) == *w).collect()
}

/// Whether a cubic-type quartic can have its quotient in class `e` over k₃.
pub fn cubic_attained(n: u32, e: IsoLabel) -> bool {
    !matches!((n, e), (2, IsoLabel::E1Twist) | (1, IsoLabel::H))
}

/// Whether a quadratic-type quartic can have quotients `e` over k and `f` over k₂.
pub fn pair_attained(n: u32, e: IsoLabel, f: IsoLabel) -> bool {
    use IsoLabel::*;
    match n {
        4 => !matches!((e, f), (E1, E1Twist) | (E1Twist, E1)),
        3 => !matches!((e, f), (H, E1) | (HTwist, E1Twist)),
        2 => {
            let small = |l: IsoLabel| matches!(l, E0 | E1 | E1Twist);
            !(small(e) && small(f)) && !matches!((e, f), (E1, EncTwist) | (E1Twist, Enc) | (Enc, E1Twist) | (EncTwist, E1))
        }
        1 => matches!((e, f), (E1, Enc) | (E1, EncTwist) | (H, EncTwist) | (HTwist, Enc)),
        _ => true,
    }
}

/// Triples obtained by twisting exactly two members, together with the triple itself.
pub fn bitwists(n: u32, t: [IsoLabel; 3]) -> Vec<[IsoLabel; 3]> {
    let mut out: Vec<[IsoLabel; 3]> = [(false, false), (true, true), (true, false), (false, true)]
        .into_iter()
        .map(|(x, y)| {
            let tw = |l: IsoLabel, on: bool| if on { l.twisted(n) } else { l };
            let mut r = [tw(t[0], x), tw(t[1], y), tw(t[2], x ^ y)];
            r.sort_unstable();
            r
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether a split quartic can have quotients in classes `t`.
pub fn triple_attained(n: u32, mut t: [IsoLabel; 3]) -> bool {
    use IsoLabel::*;
    t.sort_unstable();
    let in_family = |seeds: &[[IsoLabel; 3]]| seeds.iter().any(|&s| bitwists(n, s).contains(&t));
    match n {
        1 => false,
        2 => in_family(&[[E0, Enc, Enc], [E1, Enc, Enc]]),
        3 => !in_family(&[[H, H, H]]),
        4 => {
            let small = t.iter().all(|l| matches!(l, E1 | E1Twist | E0));
            !small && !in_family(&[[E1, E1, EncTwist]])
        }
        6 => !in_family(&[[E1, E1, E1Twist]]),
        _ => true,
    }
}

/// Whether quartics with the given quotients exist.
pub fn template_attained(n: u32, t: &Template) -> bool {
    match *t {
        Template::Split(l) => triple_attained(n, l),
        Template::Quadratic(e, f) => pair_attained(n, e, f),
        Template::Cubic(e) => cubic_attained(n, e),
    }
}

/// The classes of the quotients as traces, useful for reports.
pub fn template_traces(n: u32, t: &Template) -> Vec<i64> {
    match *t {
        Template::Split(l) => l.iter().map(|x| x.trace(n).unwrap()).collect(),
        Template::Quadratic(e, f) => vec![e.trace(n).unwrap(), f.trace(2 * n).unwrap()],
        Template::Cubic(e) => vec![e.trace(3 * n).unwrap()],
    }
}
