use std::collections::BTreeSet;

use proptest::prelude::*;
use ss3_core::elliptic::{classify, frobenius_trace, naive_count, twist, AsModel, Label};
use ss3_core::{Fe, Field};

#[test]
fn counts_match_traces_for_every_normal_model() {
    for n in 1..=6 {
        let k = Field::new(n).unwrap();
        let mut labels = BTreeSet::new();
        for a in k.nonzero() {
            for b in k.elements() {
                for c in [Fe::ZERO, k.c0()] {
                    let e = AsModel::new(a, b, c).unwrap();
                    let cls = classify(&k, &e).unwrap();
                    let t = frobenius_trace(cls.label, n).unwrap();
                    assert_eq!(naive_count(&k, &e) as i64, k.q() as i64 + 1 + t, "n={n} {e:?}");
                    labels.insert((cls.label, cls.coset));
                }
            }
        }
        let expected = if n % 2 == 0 { 7 } else { 3 };
        assert_eq!(labels.len(), expected, "n={n} {labels:?}");
    }
}

// (x, y) ↦ (u(x + v), y + a v² x + t) maps the model to
// (u⁻³a, u⁻²(b + a²v⁴ + av), c + a²v⁶ + bv² + t + t²).
fn change_of_variables(k: &Field, e: AsModel, u: Fe, v: Fe, t: Fe) -> AsModel {
    let ui = k.inv(u).unwrap();
    let ui2 = k.square(ui);
    let a = k.mul(k.mul(ui2, ui), e.a);
    let v2 = k.square(v);
    let b = k.mul(ui2, e.b + k.mul(k.square(e.a), k.square(v2)) + k.mul(e.a, v));
    let c = e.c + k.mul(k.square(e.a), k.mul(k.square(v2), v2)) + k.mul(e.b, v2) + t + k.square(t);
    AsModel { a, b, c }
}

proptest! {
    #[test]
    fn classification_is_invariant_under_coordinate_change(
        n in 1u32..=10, a in 1u64.., b: u64, c: u64, u in 1u64.., v: u64, t: u64
    ) {
        let k = Field::new(n).unwrap();
        let m = k.q() - 1;
        let e = AsModel::new(Fe(a % m + 1), Fe(b & m), Fe(c & m)).unwrap();
        let moved = change_of_variables(&k, e, Fe(u % m + 1), Fe(v & m), Fe(t & m));
        let l1 = classify(&k, &e).unwrap().label;
        let l2 = classify(&k, &moved).unwrap().label;
        prop_assert_eq!(l1, l2);
    }

    #[test]
    fn twisting_negates_the_trace(n in 1u32..=12, a in 1u64.., b: u64, c: u64) {
        let k = Field::new(n).unwrap();
        let m = k.q() - 1;
        let e = AsModel::new(Fe(a % m + 1), Fe(b & m), Fe(c & m)).unwrap();
        let t1 = frobenius_trace(classify(&k, &e).unwrap().label, n).unwrap();
        let t2 = frobenius_trace(classify(&k, &twist(&k, e)).unwrap().label, n).unwrap();
        prop_assert_eq!(t1, -t2);
        prop_assert_eq!(twist(&k, twist(&k, e)), e);
    }
}

#[test]
fn twist_of_e1_over_f2_is_e1() {
    let k = Field::new(1).unwrap();
    let e = AsModel::new(Fe(1), Fe(0), Fe(0)).unwrap();
    assert_eq!(twist(&k, e), AsModel { a: Fe(1), b: Fe(0), c: Fe(1) });
    assert_eq!(classify(&k, &twist(&k, e)).unwrap().label, Label::E1);
}
