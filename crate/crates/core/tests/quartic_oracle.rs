use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ss3_core::quartic::*;
use ss3_core::tower::{Level, Tower};
use ss3_core::Fe;

#[test]
fn formula_matches_naive_on_all_small_quartics() {
    for n in [1u32, 2] {
        let t = Tower::new(n).unwrap();
        let k = t.base();
        for g in k.nonzero() {
            for f in k.elements() {
                for d in k.elements() {
                    for e in k.elements() {
                        let c = Quartic::new(d, e, f, g).unwrap();
                        assert_eq!(weil_poly(&t, &c).unwrap(), naive_weil_poly(&t, &c).unwrap(), "n={n} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn formula_matches_naive_on_random_quartics() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in [3u32, 4] {
        let t = Tower::new(n).unwrap();
        let q = t.base().q();
        for _ in 0..300 {
            let c = Quartic::new(
                Fe(rng.gen_range(0..q)),
                Fe(rng.gen_range(0..q)),
                Fe(rng.gen_range(0..q)),
                Fe(rng.gen_range(1..q)),
            )
            .unwrap();
            let counts = point_counts(&t, &c).unwrap();
            let w = weil_poly(&t, &c).unwrap();
            assert_eq!(w, weil_from_counts(q, counts), "n={n} {c:?}");
            let qs = elliptic_quotients(&t, &c).unwrap();
            let kind = type_of(&t, c.f, c.g).unwrap().kind;
            match kind {
                Kind::Cubic => {
                    assert_eq!(counts[0], q + 1);
                    assert_eq!(counts[1], q * q + 1);
                }
                Kind::Quadratic => {
                    let e = qs.iter().find(|x| x.level == Level::Base).unwrap();
                    assert_eq!(counts[0], ss3_core::elliptic::naive_count(t.base(), &e.model));
                }
                Kind::Split => {}
            }
        }
    }
}
