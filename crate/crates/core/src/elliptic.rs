//! Supersingular elliptic curves `y² + y = ax³ + bx² + c` over binary fields.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::LinearSystem;

/// An Artin-Schreier model `y² + y = ax³ + bx² + c` with `a ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AsModel {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
}

impl AsModel {
    pub fn new(a: Fe, b: Fe, c: Fe) -> Result<AsModel> {
        if a.is_zero() {
            return Err(Error::Precondition("a must be nonzero"));
        }
        Ok(AsModel { a, b, c })
    }
}

/// Isomorphism class labels over k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    E1,
    E1Twist,
    Ea,
    EaTwist,
    E0,
    H,
    HTwist,
}

impl Label {
    pub const SQUARE: [Label; 5] = [Label::E1, Label::E1Twist, Label::Ea, Label::EaTwist, Label::E0];
    pub const NON_SQUARE: [Label; 3] = [Label::E1, Label::H, Label::HTwist];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::E1 => "E1",
            Label::E1Twist => "E1'",
            Label::Ea => "Ea",
            Label::EaTwist => "Ea'",
            Label::E0 => "E0",
            Label::H => "H",
            Label::HTwist => "H'",
        }
    }

    pub fn parse(s: &str) -> Option<Label> {
        [
            Label::E1,
            Label::E1Twist,
            Label::Ea,
            Label::EaTwist,
            Label::E0,
            Label::H,
            Label::HTwist,
        ]
        .into_iter()
        .find(|l| l.as_str() == s)
    }

    fn for_square(self) -> bool {
        !matches!(self, Label::H | Label::HTwist)
    }

    fn for_non_square(self) -> bool {
        matches!(self, Label::E1 | Label::H | Label::HTwist)
    }

    /// The label of the quadratic twist.
    pub fn twisted(self, n: u32) -> Label {
        match self {
            Label::E1 if n % 2 == 1 => Label::E1,
            Label::E1 => Label::E1Twist,
            Label::E1Twist => Label::E1,
            Label::Ea => Label::EaTwist,
            Label::EaTwist => Label::Ea,
            Label::E0 => Label::E0,
            Label::H => Label::HTwist,
            Label::HTwist => Label::H,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A k-isomorphism class. For `Ea`/`Ea'` the coset of `a` in `k*/(k*)³`
/// is recorded as `a^{(q-1)/3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IsomClass {
    pub label: Label,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coset: Option<Fe>,
}

/// Isogeny classes over k, i.e. classes up to Frobenius trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoLabel {
    E1,
    E1Twist,
    Enc,
    EncTwist,
    E0,
    H,
    HTwist,
}

impl IsoLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            IsoLabel::E1 => "E1",
            IsoLabel::E1Twist => "E1'",
            IsoLabel::Enc => "Enc",
            IsoLabel::EncTwist => "Enc'",
            IsoLabel::E0 => "E0",
            IsoLabel::H => "H",
            IsoLabel::HTwist => "H'",
        }
    }

    /// All isogeny classes over F_{2^n}.
    pub fn all(n: u32) -> &'static [IsoLabel] {
        if n % 2 == 0 {
            &[IsoLabel::E1, IsoLabel::E1Twist, IsoLabel::Enc, IsoLabel::EncTwist, IsoLabel::E0]
        } else {
            &[IsoLabel::E1, IsoLabel::H, IsoLabel::HTwist]
        }
    }

    pub fn of(label: Label) -> IsoLabel {
        match label {
            Label::E1 => IsoLabel::E1,
            Label::E1Twist => IsoLabel::E1Twist,
            Label::Ea => IsoLabel::Enc,
            Label::EaTwist => IsoLabel::EncTwist,
            Label::E0 => IsoLabel::E0,
            Label::H => IsoLabel::H,
            Label::HTwist => IsoLabel::HTwist,
        }
    }

    /// A representative isomorphism label.
    pub fn representative(self) -> Label {
        match self {
            IsoLabel::E1 => Label::E1,
            IsoLabel::E1Twist => Label::E1Twist,
            IsoLabel::Enc => Label::Ea,
            IsoLabel::EncTwist => Label::EaTwist,
            IsoLabel::E0 => Label::E0,
            IsoLabel::H => Label::H,
            IsoLabel::HTwist => Label::HTwist,
        }
    }

    pub fn trace(self, n: u32) -> Result<i64> {
        frobenius_trace(self.representative(), n)
    }

    pub fn from_trace(t: i64, n: u32) -> Option<IsoLabel> {
        IsoLabel::all(n)
            .iter()
            .copied()
            .find(|l| l.trace(n).ok() == Some(t))
    }

    pub fn twisted(self, n: u32) -> IsoLabel {
        IsoLabel::of(self.representative().twisted(n))
    }
}

impl fmt::Display for IsoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IsoLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// `2^e` as a signed integer.
#[inline]
pub(crate) fn pow2(e: u32) -> i64 {
    1i64 << e
}

/// Frobenius trace `t` (so `|E(k)| = q + 1 + t`) of a class over F_{2^n}.
pub fn frobenius_trace(label: Label, n: u32) -> Result<i64> {
    if n % 2 == 0 {
        if !label.for_square() {
            return Err(Error::ParityMismatch {
                label: label.as_str(),
                parity: "even",
            });
        }
        let s = if (n / 2) % 2 == 0 { 1 } else { -1 };
        let r = pow2(n / 2);
        Ok(match label {
            Label::E1 => -s * 2 * r,
            Label::E1Twist => s * 2 * r,
            Label::Ea => s * r,
            Label::EaTwist => -s * r,
            _ => 0,
        })
    } else {
        if !label.for_non_square() {
            return Err(Error::ParityMismatch {
                label: label.as_str(),
                parity: "odd",
            });
        }
        let sign = if matches!(n % 8, 1 | 7) { 1 } else { -1 };
        let r = pow2(n.div_ceil(2));
        Ok(match label {
            Label::H => sign * r,
            Label::HTwist => -sign * r,
            _ => 0,
        })
    }
}

/// All Frobenius traces of supersingular curves over F_{2^n}, ascending.
pub fn traces(n: u32) -> Vec<i64> {
    let mut t: Vec<i64> = IsoLabel::all(n).iter().map(|l| l.trace(n).unwrap()).collect();
    t.sort_unstable();
    t
}

/// Normal model of `y² + a3·y = x³ + a2·x² + a4·x + a6`, with `c ∈ {0, c0}`.
pub fn normalize(k: &Field, a3: Fe, a2: Fe, a4: Fe, a6: Fe) -> Result<AsModel> {
    let s = k.square(k.inv(a3).map_err(|_| Error::Precondition("a3 must be nonzero"))?);
    let beta = k.mul(s, a4);
    let b = k.mul(s, a2) + k.square(beta);
    let c6 = k.mul(s, a6);
    let c = if k.trace(c6) == 0 { Fe::ZERO } else { k.c0() };
    AsModel::new(s, b, c)
}

/// The canonical twist `c ↦ c + c0`.
pub fn twist(k: &Field, e: AsModel) -> AsModel {
    AsModel { c: e.c + k.c0(), ..e }
}

/// `|E(k)|` by summing over x.
pub fn naive_count(k: &Field, e: &AsModel) -> u64 {
    let affine: u64 = k
        .elements()
        .filter(|&x| {
            let x2 = k.square(x);
            let rhs = k.mul(e.a, k.mul(x2, x)) + k.mul(e.b, x2) + e.c;
            k.trace(rhs) == 0
        })
        .count() as u64;
    1 + 2 * affine
}

#[derive(Clone, Debug)]
enum Shape {
    // n even: image of v ↦ av + a²v⁴
    Square { sys: LinearSystem, cube: bool, coset: Fe },
    // n odd: u⁻² for the cube root u of a, and the map v ↦ v + v⁴
    NonSquare { u_inv2: Fe, sys: LinearSystem },
}

/// Classification data for the family `y² + y = ax³ + bx² + c` with fixed
/// `a`, so that many `(b, c)` can be classified cheaply.
#[derive(Clone, Debug)]
pub struct Classifier {
    a: Fe,
    shape: Shape,
}

impl Classifier {
    pub fn new(k: &Field, a: Fe) -> Result<Classifier> {
        if a.is_zero() {
            return Err(Error::Precondition("a must be nonzero"));
        }
        let shape = if k.is_square() {
            let a2 = k.square(a);
            let sys = k.linear_system(|v| k.mul(a, v) + k.mul(a2, k.frob(v, 2)));
            let coset = k.cubic_character(a)?;
            Shape::Square {
                sys,
                cube: coset == Fe::ONE,
                coset,
            }
        } else {
            let u = k.cube_root(a).expect("every element is a cube in odd degree");
            let u_inv2 = k.square(k.inv(u)?);
            let sys = k.linear_system(|v| v + k.frob(v, 2));
            Shape::NonSquare { u_inv2, sys }
        };
        Ok(Classifier { a, shape })
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    /// The class of `y² + y = ax³ + bx² + c`.
    pub fn classify(&self, k: &Field, b: Fe, c: Fe) -> IsomClass {
        match &self.shape {
            Shape::Square { sys, cube, coset } => match sys.preimage(b.0) {
                None => IsomClass {
                    label: Label::E0,
                    coset: None,
                },
                Some(v) => {
                    let v = Fe(v);
                    let bit = k.trace(c + k.mul(self.a, k.mul(k.square(v), v)));
                    let (label, coset) = match (cube, bit) {
                        (true, 0) => (Label::E1, None),
                        (true, _) => (Label::E1Twist, None),
                        (false, 0) => (Label::Ea, Some(*coset)),
                        (false, _) => (Label::EaTwist, Some(*coset)),
                    };
                    IsomClass { label, coset }
                }
            },
            Shape::NonSquare { u_inv2, sys } => {
                let z = k.mul(b, *u_inv2);
                if k.trace(z) == 0 {
                    return IsomClass {
                        label: Label::E1,
                        coset: None,
                    };
                }
                let v = Fe(sys
                    .preimage((z + Fe::ONE).0)
                    .expect("1 + z has trace zero when z has trace one"));
                let bit = k.trace(c + k.mul(k.square(v), v) + v);
                IsomClass {
                    label: if bit == 0 { Label::H } else { Label::HTwist },
                    coset: None,
                }
            }
        }
    }

    /// Frobenius trace of `y² + y = ax³ + bx² + c`.
    pub fn trace(&self, k: &Field, b: Fe, c: Fe) -> i64 {
        frobenius_trace(self.classify(k, b, c).label, k.n()).expect("labels match the field parity")
    }
}

/// The isomorphism class of a model.
pub fn classify(k: &Field, e: &AsModel) -> Result<IsomClass> {
    Ok(Classifier::new(k, e.a)?.classify(k, e.b, e.c))
}

/// The Frobenius trace of a model.
pub fn trace_of(k: &Field, e: &AsModel) -> Result<i64> {
    frobenius_trace(classify(k, e)?.label, k.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u32) -> Field {
        Field::new(n).unwrap()
    }

    #[test]
    fn pinned_classes_over_f2() {
        let k = f(1);
        let e = AsModel::new(Fe(1), Fe(0), Fe(0)).unwrap();
        assert_eq!(classify(&k, &e).unwrap().label, Label::E1);
        assert_eq!(naive_count(&k, &e), 3);
        let h = AsModel::new(Fe(1), Fe(1), Fe(0)).unwrap();
        assert_eq!(classify(&k, &h).unwrap().label, Label::H);
        assert_eq!(naive_count(&k, &h), 5);
        let ht = AsModel::new(Fe(1), Fe(1), Fe(1)).unwrap();
        assert_eq!(classify(&k, &ht).unwrap().label, Label::HTwist);
    }

    #[test]
    fn pinned_traces() {
        assert_eq!(frobenius_trace(Label::H, 1).unwrap(), 2);
        assert_eq!(frobenius_trace(Label::E1, 2).unwrap(), 4);
        assert_eq!(frobenius_trace(Label::E0, 2).unwrap(), 0);
        assert_eq!(frobenius_trace(Label::E1, 4).unwrap(), -8);
        assert_eq!(frobenius_trace(Label::H, 3).unwrap(), -4);
        assert!(frobenius_trace(Label::H, 2).is_err());
        assert!(frobenius_trace(Label::Ea, 3).is_err());
        assert_eq!(traces(2), vec![-4, -2, 0, 2, 4]);
        assert_eq!(traces(5), vec![-8, 0, 8]);
    }

    #[test]
    fn nonsquare_generator_of_f4() {
        let k = f(2);
        let w = Fe(0b10);
        let e = AsModel::new(w, Fe(0), Fe(0)).unwrap();
        let cls = classify(&k, &e).unwrap();
        assert_eq!(cls.label, Label::Ea);
        assert_eq!(cls.coset, Some(w));
        let t = frobenius_trace(cls.label, 2).unwrap();
        assert_eq!(naive_count(&k, &e) as i64, 5 + t);
    }

    #[test]
    fn normalize_examples() {
        let k = f(4);
        let one = Fe::ONE;
        assert_eq!(normalize(&k, one, Fe(0), Fe(0), Fe(0)).unwrap(), AsModel { a: one, b: Fe(0), c: Fe(0) });
        assert_eq!(normalize(&k, one, one, Fe(0), Fe(0)).unwrap(), AsModel { a: one, b: one, c: Fe(0) });
        let a3 = Fe(0b0110);
        let n = normalize(&k, a3, Fe(0), Fe(0), Fe(0)).unwrap();
        assert_eq!(n.a, k.square(k.inv(a3).unwrap()));
        assert!(normalize(&k, Fe(0), one, one, one).is_err());
    }

    // Counts |E| on the Weierstrass model directly.
    fn weierstrass_count(k: &Field, a3: Fe, a2: Fe, a4: Fe, a6: Fe) -> u64 {
        let mut n = 1;
        for x in k.elements() {
            let rhs = k.mul(k.square(x), x) + k.mul(a2, k.square(x)) + k.mul(a4, x) + a6;
            n += k.elements().filter(|&y| k.square(y) + k.mul(a3, y) == rhs).count() as u64;
        }
        n
    }

    #[test]
    fn normalize_preserves_point_count() {
        let k = f(3);
        for a3 in k.nonzero() {
            for a4 in k.elements() {
                for a6 in [Fe(0), Fe(1), Fe(5)] {
                    let a2 = Fe(3);
                    let m = normalize(&k, a3, a2, a4, a6).unwrap();
                    assert_eq!(naive_count(&k, &m), weierstrass_count(&k, a3, a2, a4, a6));
                }
            }
        }
    }

    #[test]
    fn label_round_trips() {
        for n in 1..=6 {
            for &l in IsoLabel::all(n) {
                assert_eq!(IsoLabel::from_trace(l.trace(n).unwrap(), n), Some(l));
                assert_eq!(l.twisted(n).trace(n).unwrap(), -l.trace(n).unwrap());
            }
        }
        for l in Label::SQUARE.iter().chain(Label::NON_SQUARE.iter()) {
            assert_eq!(Label::parse(l.as_str()), Some(*l));
        }
    }
}
