#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ss3_core::auxgeom::*;
use ss3_core::elliptic::{classify, frobenius_trace, naive_count, AsModel};
use ss3_core::{Fe, Field};

pub fn nonzero(k: &Field, rng: &mut StdRng) -> Fe {
    Fe(rng.gen_range(1..k.q()))
}

pub fn any(k: &Field, rng: &mut StdRng) -> Fe {
    Fe(rng.gen_range(0..k.q()))
}

fn inv_cube_triple(k: &Field, rng: &mut StdRng) -> (Fe, Fe, Fe) {
    loop {
        let (r, s) = (nonzero(k, rng), nonzero(k, rng));
        let m3 = |x: Fe| k.inv(k.mul(k.square(x), x)).unwrap();
        let sum = m3(r) + m3(s);
        if sum.is_zero() {
            continue;
        }
        if let Some(c) = k.cube_root(k.inv(sum).unwrap()) {
            return (r, s, c);
        }
    }
}

fn expect(ok: bool, what: &str, n: u32) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("{what} fails over F_2^{n}"))
    }
}

/// Checks every parametrization identity on `count` random valid instances
/// per family. Inverse-cube instances for F₄ and F₁₆ are drawn from the
/// cubic extension, since those fields have none.
pub fn check_parametrizations(n: u32, count: usize, seed: u64) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let k = &Field::new(n).map_err(|e| e.to_string())?;
    let side8 = |k: &Field, x: Fe, w: Fe| x + k.mul(k.frob(x, 2), k.frob(w, 3));

    let mut done = 0;
    while done < count {
        let v: Vec<Fe> = (0..6).map(|_| any(k, &mut rng)).collect();
        let lambda = any(k, &mut rng);
        let Ok((x, y)) = param_pencil(k, v[0], v[1], v[2], v[3], v[4], v[5], lambda) else {
            continue;
        };
        let lhs = v[0] + k.mul(v[1], x) + k.mul(k.frob(v[2], 2), k.frob(x, 2));
        let rhs = v[3] + k.mul(v[4], y) + k.mul(k.frob(v[5], 2), k.frob(y, 2));
        expect(lhs == rhs, "pencil parametrization", n)?;
        done += 1;
    }

    done = 0;
    while done < count {
        let (r, s) = (nonzero(k, &mut rng), nonzero(k, &mut rng));
        if r == s {
            continue;
        }
        let t = r + s;
        let lambda = any(k, &mut rng);
        let p = param_sum_zero(k, r, s, t, lambda).map_err(|e| e.to_string())?;
        expect(side8(k, p[0], r) == side8(k, p[1], s) && side8(k, p[0], r) == side8(k, p[2], t), "sum-zero parametrization", n)?;
        let cs = sum_zero_cubic_sum(k, r, s, t, p);
        expect(cs == sum_zero_closed_form(k, r, s, t, lambda).unwrap(), "sum-zero closed form", n)?;
        let dp = DParams::sum_zero(k, r, s, t).unwrap();
        expect(k.trace(cs) == k.trace(dp.eval(k, lambda)), "sum-zero reduction mod AS", n)?;
        done += 1;
    }

    let kc = if n == 2 || n == 4 { Field::new(3 * n).unwrap() } else { k.clone() };
    let kc = &kc;
    for _ in 0..count {
        let (r, s, t) = inv_cube_triple(kc, &mut rng);
        let lambda = any(kc, &mut rng);
        let p = param_inv_cubes(kc, r, s, t, lambda).map_err(|e| e.to_string())?;
        let side = |x: Fe, w: Fe| kc.mul(kc.frob(w, 4), Fe::ONE + x + kc.frob(x, 2));
        expect(side(p[0], r) == side(p[1], s) && side(p[0], r) == side(p[2], t), "inverse-cubes parametrization", n)?;
        let cs = inv_cubes_as_sum(kc, p);
        expect(cs == inv_cubes_closed_form(kc, r, s, t, lambda).unwrap(), "inverse-cubes closed form", n)?;
        let dp = DParams::inv_cubes(kc, r, s, t).unwrap();
        expect(kc.trace(cs) == kc.trace(dp.eval(kc, lambda)), "inverse-cubes reduction mod AS", n)?;
    }

    done = 0;
    while done < count {
        let s = nonzero(k, &mut rng);
        if s == Fe::ONE {
            continue;
        }
        let t = s + Fe::ONE;
        let lambda = any(k, &mut rng);
        let p = param_unit_sum(k, s, t, lambda).map_err(|e| e.to_string())?;
        let lhs = Fe::ONE + p[0] + k.frob(p[0], 2);
        expect(lhs == side8(k, p[1], s) && lhs == side8(k, p[2], t), "unit-sum parametrization", n)?;
        let u = k.mul(s, t);
        let cs = unit_sum_cubic_sum(k, s, t, p);
        expect(cs == unit_sum_closed_form(k, u, lambda).unwrap(), "unit-sum closed form", n)?;
        let dp = DParams::unit_sum(k, u).unwrap();
        expect(k.trace(cs) == k.trace(dp.eval(k, lambda)), "unit-sum reduction mod AS", n)?;
        done += 1;
    }
    Ok(())
}

/// Sweeps every normal model over F_{2^n}, comparing point counts with the
/// class traces. Returns the number of isomorphism classes seen.
pub fn elliptic_sweep(n: u32) -> Result<usize, String> {
    let k = Field::new(n).map_err(|e| e.to_string())?;
    let q = k.q() as i64;
    let mut classes = BTreeSet::new();
    let mut traces = BTreeSet::new();
    for a in k.nonzero() {
        for b in k.elements() {
            for c in [Fe::ZERO, k.c0()] {
                let m = AsModel::new(a, b, c).unwrap();
                let cl = classify(&k, &m).unwrap();
                let t = frobenius_trace(cl.label, n).unwrap();
                let count = naive_count(&k, &m) as i64;
                if count != q + 1 + t {
                    return Err(format!("{m:?} over F_{q}: {count} points, class {} predicts {}", cl.label, q + 1 + t));
                }
                classes.insert((cl.label.as_str(), cl.coset.map(|x| x.0)));
                traces.insert(t);
            }
        }
    }
    let expected: BTreeSet<i64> = if n % 2 == 0 {
        let r = 1i64 << (n / 2);
        [-2 * r, -r, 0, r, 2 * r].into()
    } else {
        let r = 1i64 << n.div_ceil(2);
        [-r, 0, r].into()
    };
    if traces != expected {
        return Err(format!("traces {traces:?} over F_{q}, expected {expected:?}"));
    }
    let want = if n % 2 == 0 { 7 } else { 3 };
    if classes.len() != want {
        return Err(format!("{} isomorphism classes over F_{q}, expected {want}", classes.len()));
    }
    Ok(classes.len())
}

/// Whether `w = n` is predicted for `y² + y = Ax⁹ + Bx³ + Cx`.
pub fn full_kernel_expected(k: &Field, a: Fe, b: Fe) -> bool {
    match k.n() {
        1 => true,
        2 => (a + b).0 <= 1,
        3 => b.is_zero(),
        4 => b == k.square(a),
        6 => b.is_zero() && k.frob(a, 3) == a,
        _ => false,
    }
}

/// Checks the point-count law for one `(A, B, C)` with `D = 0`.
pub fn check_d_curve(k: &Field, a: Fe, b: Fe, c: Fe) -> Result<(), String> {
    let n = k.n();
    let q = k.q() as i64;
    let p = DParams::new(a, b, c, Fe::ZERO);
    let an = analyze_d(k, &p).map_err(|e| e.to_string())?;
    let dev = an.count as i64 - q - 1;
    let ctx = || format!("A={a} B={b} C={c} over F_{q}: w={} count={}", an.w, an.count);
    if an.q_vanishes {
        if dev * dev != (1i64 << an.w) * q || dev == 0 {
            return Err(format!("count is not q+1±√(2^w q): {}", ctx()));
        }
    } else if dev != 0 {
        return Err(format!("count is not q+1: {}", ctx()));
    }
    if (an.w == n) != full_kernel_expected(k, a, b) {
        return Err(format!("w = n case list disagrees: {}", ctx()));
    }
    if n % 2 == 0 && c.is_zero() && an.w == n && an.count != 2 * k.q() + 1 {
        return Err(format!("count is not 2q+1: {}", ctx()));
    }
    Ok(())
}

/// Runs the full `(A, B)` sweep with `C = 0` and `random` random `(A, B, C)`.
pub fn d_suite(n: u32, random: usize, seed: u64) -> Result<(), String> {
    let k = Field::new(n).map_err(|e| e.to_string())?;
    for a in k.nonzero() {
        for b in k.elements() {
            check_d_curve(&k, a, b, Fe::ZERO)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        let (a, b, c) = (nonzero(&k, &mut rng), any(&k, &mut rng), any(&k, &mut rng));
        check_d_curve(&k, a, b, c)?;
    }
    Ok(())
}

/// `|{(x, y, z) ∈ (k*)³ : x³ + y³ + z³ = 0}|` by enumeration.
pub fn fermat_brute(k: &Field) -> u64 {
    let cubes: Vec<Fe> = k.nonzero().map(|x| k.mul(k.square(x), x)).collect();
    let mut hist = vec![0u64; k.q() as usize];
    for &c in &cubes {
        hist[c.0 as usize] += 1;
    }
    // x³ + y³ = z³ for each (x, y)
    let mut total = 0;
    for &cx in &cubes {
        for &cy in &cubes {
            total += hist[(cx + cy).0 as usize];
        }
    }
    total
}
