//! Genus-zero parametrizations, the genus-4 curves
//! `y² + y = Ax⁹ + Bx³ + Cx (+ D)` and the Fermat surface count.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elliptic::{frobenius_trace, Label};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::AffineSpace;

fn pow_i(k: &Field, x: Fe, e: i64) -> Result<Fe> {
    if e >= 0 {
        Ok(k.pow(x, e as u64))
    } else {
        Ok(k.pow(k.inv(x)?, e.unsigned_abs()))
    }
}

/// A point of `a + bx + c⁴x⁴ = a' + b'y + c'⁴y⁴` for the pencil parameter `μ`.
#[allow(clippy::too_many_arguments)]
pub fn param_pencil(k: &Field, a: Fe, b: Fe, c: Fe, a1: Fe, b1: Fe, c1: Fe, mu: Fe) -> Result<(Fe, Fe)> {
    let den = k.mul(b1, c) + k.mul(b, c1);
    let den_inv = k.inv(den).map_err(|_| Error::Precondition("degenerate pencil: b'c = bc'"))?;
    let m = a + a1 + k.frob(mu, 2);
    let x = k.mul(k.mul(c1, m) + k.mul(b1, mu), den_inv);
    let y = k.mul(k.mul(c, m) + k.mul(b, mu), den_inv);
    Ok((x, y))
}

fn check_nonzero(r: Fe, s: Fe, t: Fe) -> Result<()> {
    if r.is_zero() || s.is_zero() || t.is_zero() {
        return Err(Error::Precondition("r, s, t must be nonzero"));
    }
    Ok(())
}

/// A point of `x + x⁴r⁸ = y + y⁴s⁸ = z + z⁴t⁸` for `r + s + t = 0`.
pub fn param_sum_zero(k: &Field, r: Fe, s: Fe, t: Fe, lambda: Fe) -> Result<[Fe; 3]> {
    check_nonzero(r, s, t)?;
    if !(r + s + t).is_zero() {
        return Err(Error::Precondition("r + s + t must vanish"));
    }
    let rst = k.mul(k.mul(r, s), t);
    let pre = k.square(k.inv(rst)?);
    let l4 = k.frob(lambda, 2);
    let l16 = k.frob(lambda, 4);
    let one = |p: Fe, q: Fe, nb: Fe| -> Result<Fe> {
        // (rst)⁻²(rst·λ + (p⁻²q⁴ + p·nb)λ⁴ + p⁻²λ¹⁶)
        let p_2 = k.square(k.inv(p)?);
        let mid = k.mul(p_2, k.frob(q, 2)) + k.mul(p, nb);
        Ok(k.mul(pre, k.mul(rst, lambda) + k.mul(mid, l4) + k.mul(p_2, l16)))
    };
    Ok([one(r, t, s)?, one(s, r, t)?, one(t, s, r)?])
}

/// `x³r⁸ + y³s⁸ + z³t⁸`.
pub fn sum_zero_cubic_sum(k: &Field, r: Fe, s: Fe, t: Fe, p: [Fe; 3]) -> Fe {
    [(p[0], r), (p[1], s), (p[2], t)]
        .into_iter()
        .fold(Fe::ZERO, |acc, (x, w)| acc + k.mul(k.mul(k.square(x), x), k.frob(w, 3)))
}

/// Closed form of [`sum_zero_cubic_sum`] as a polynomial in λ.
pub fn sum_zero_closed_form(k: &Field, r: Fe, s: Fe, t: Fe, lambda: Fe) -> Result<Fe> {
    let rst = k.mul(k.mul(r, s), t);
    let w = sum_zero_weight(k, r, s, t);
    let i1 = k.inv(rst)?;
    let i2 = k.square(i1);
    let i4 = k.square(i2);
    Ok(k.mul(i4, k.pow(lambda, 36))
        + k.mul(i2, k.pow(lambda, 18))
        + k.mul(k.mul(i4, w), k.pow(lambda, 12))
        + k.mul(i1, k.pow(lambda, 9)))
}

// r⁷s + s⁷t + t⁷r
fn sum_zero_weight(k: &Field, r: Fe, s: Fe, t: Fe) -> Fe {
    [(r, s), (s, t), (t, r)]
        .into_iter()
        .fold(Fe::ZERO, |acc, (p, q)| acc + k.mul(k.pow(p, 7), q))
}

/// A point of `r¹⁶(1+x+x⁴) = s¹⁶(1+y+y⁴) = t¹⁶(1+z+z⁴)` for `r⁻³ + s⁻³ + t⁻³ = 0`.
pub fn param_inv_cubes(k: &Field, r: Fe, s: Fe, t: Fe, lambda: Fe) -> Result<[Fe; 3]> {
    check_nonzero(r, s, t)?;
    let cube_inv = |x: Fe| -> Result<Fe> { pow_i(k, x, -3) };
    if !(cube_inv(r)? + cube_inv(s)? + cube_inv(t)?).is_zero() {
        return Err(Error::Precondition("r⁻³ + s⁻³ + t⁻³ must vanish"));
    }
    let big_r = k.mul(k.mul(r, s), t);
    let big_s = k.inv(r)? + k.inv(s)? + k.inv(t)?;
    let s8 = k.frob(big_s, 3);
    let twelve = k.pow(r, 12) + k.pow(s, 12) + k.pow(t, 12);
    let r36 = pow_i(k, big_r, -36)?;
    let l4 = k.frob(lambda, 2);
    let l16 = k.frob(lambda, 4);
    // p plays r, (q, w) the other two in cyclic order
    let one = |p: Fe, q: Fe, w: Fe| -> Result<Fe> {
        let qw = k.mul(q, w);
        let head = k.mul(s8, twelve + k.pow(qw, 6));
        let lin = k.mul(pow_i(k, p, -9)?, k.pow(qw, 3));
        let quart = k.mul(pow_i(k, p, -18)?, pow_i(k, q, -6)?) + pow_i(k, w, -24)?;
        let inner = head + k.mul(lin, lambda) + k.mul(quart, l4) + k.mul(r36, l16);
        Ok(k.mul(pow_i(k, p, -4)?, inner))
    };
    Ok([one(r, s, t)?, one(s, t, r)?, one(t, r, s)?])
}

/// `x³ + x + y³ + y + z³ + z`.
pub fn inv_cubes_as_sum(k: &Field, p: [Fe; 3]) -> Fe {
    p.into_iter()
        .fold(Fe::ZERO, |acc, x| acc + k.mul(k.square(x), x) + x)
}

/// `(R, S, T)` with `R = rst`, `S = r⁻¹+s⁻¹+t⁻¹`, `T = r⁻⁶s⁻⁴² + s⁻⁶t⁻⁴² + t⁻⁶r⁻⁴²`.
pub fn inv_cubes_rst(k: &Field, r: Fe, s: Fe, t: Fe) -> Result<(Fe, Fe, Fe)> {
    let big_r = k.mul(k.mul(r, s), t);
    let big_s = k.inv(r)? + k.inv(s)? + k.inv(t)?;
    let mut big_t = Fe::ZERO;
    for (p, q) in [(r, s), (s, t), (t, r)] {
        big_t += k.mul(pow_i(k, p, -6)?, pow_i(k, q, -42)?);
    }
    Ok((big_r, big_s, big_t))
}

/// Closed form of [`inv_cubes_as_sum`] as a polynomial in λ.
pub fn inv_cubes_closed_form(k: &Field, r: Fe, s: Fe, t: Fe, lambda: Fe) -> Result<Fe> {
    let (big_r, big_s, big_t) = inv_cubes_rst(k, r, s, t)?;
    let rp = |e: i64| pow_i(k, big_r, e);
    let sp = |e: u64| k.pow(big_s, e);
    let l = |e: u64| k.pow(lambda, e);
    let terms = [
        (rp(-84)?, l(36)),
        (k.mul(rp(-72)?, sp(8)), l(32)),
        (rp(-42)?, l(18)),
        (k.mul(rp(-36)?, sp(4)), l(16)),
        (k.mul(rp(-12)?, big_t), l(12)),
        (rp(-21)?, l(9)),
        (k.mul(sp(8), big_t), l(8)),
        (k.mul(rp(12)?, sp(64)), l(4)),
        (k.mul(rp(24)?, sp(72)), Fe::ONE),
    ];
    Ok(terms.into_iter().fold(Fe::ZERO, |acc, (c, x)| acc + k.mul(c, x)))
}

/// A point of `1 + x + x⁴ = y + y⁴s⁸ = z + z⁴t⁸` for `s + t = 1`.
pub fn param_unit_sum(k: &Field, s: Fe, t: Fe, lambda: Fe) -> Result<[Fe; 3]> {
    if s.is_zero() || t.is_zero() {
        return Err(Error::Precondition("s, t must be nonzero"));
    }
    if s + t != Fe::ONE {
        return Err(Error::Precondition("s + t must equal 1"));
    }
    let u = k.mul(s, t);
    let ui = k.inv(u)?;
    let ui2 = k.square(ui);
    let l4 = k.frob(lambda, 2);
    let l16 = k.frob(lambda, 4);
    let h = Fe::ONE + ui + ui2;
    let x = h + k.mul(ui, lambda) + k.mul(h, l4) + k.mul(ui2, l16);
    let side = |p: Fe, q: Fe| -> Result<Fe> {
        // p⁻¹q⁻² + p⁻⁴q² ...
        let hp = k.mul(k.inv(p)?, pow_i(k, q, -2)?) + k.mul(pow_i(k, p, -4)?, k.square(q));
        let top = k.mul(pow_i(k, q, -2)?, pow_i(k, p, -4)?);
        Ok(hp + k.mul(ui, lambda) + k.mul(hp, l4) + k.mul(top, l16))
    };
    Ok([x, side(s, t)?, side(t, s)?])
}

/// `x³ + x + y³s⁸ + z³t⁸`.
pub fn unit_sum_cubic_sum(k: &Field, s: Fe, t: Fe, p: [Fe; 3]) -> Fe {
    let [x, y, z] = p;
    let c = |v: Fe| k.mul(k.square(v), v);
    c(x) + x + k.mul(c(y), k.frob(s, 3)) + k.mul(c(z), k.frob(t, 3))
}

/// Closed form of [`unit_sum_cubic_sum`] as a polynomial in λ, with `u = st`.
pub fn unit_sum_closed_form(k: &Field, u: Fe, lambda: Fe) -> Result<Fe> {
    let ui = k.inv(u)?;
    let ui2 = k.square(ui);
    let ui4 = k.square(ui2);
    let h = Fe::ONE + ui + ui2 + ui4;
    let l = |e: u64| k.pow(lambda, e);
    let terms = [
        (ui4, l(36)),
        (ui4, l(32)),
        (ui2, l(18)),
        (ui2, l(16)),
        (h, l(12)),
        (ui, l(9)),
        (h, l(8)),
        (ui4, l(4)),
        (ui4, Fe::ONE),
    ];
    Ok(terms.into_iter().fold(Fe::ZERO, |acc, (c, x)| acc + k.mul(c, x)))
}

/// Reduces `Σ c_e λ^e` modulo `AS(k)` as a function of λ, using
/// `Tr(cλ^{2m}) = Tr(c^{1/2}λ^m)`. Keys are odd exponents, 0 for the constant.
pub fn reduce_mod_as(k: &Field, terms: &[(Fe, u64)]) -> BTreeMap<u64, Fe> {
    let mut out: BTreeMap<u64, Fe> = BTreeMap::new();
    for &(c, e) in terms {
        let (c, e) = if e == 0 {
            (c, 0)
        } else {
            let j = e.trailing_zeros();
            (k.root2k(c, j), e >> j)
        };
        *out.entry(e).or_default() += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Parameters of `y² + y = Ax⁹ + Bx³ + Cx + D`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DParams {
    #[serde(rename = "A")]
    pub a: Fe,
    #[serde(rename = "B")]
    pub b: Fe,
    #[serde(rename = "C")]
    pub c: Fe,
    #[serde(rename = "D")]
    pub d: Fe,
}

impl DParams {
    pub fn new(a: Fe, b: Fe, c: Fe, d: Fe) -> Self {
        DParams { a, b, c, d }
    }

    /// `Ax⁹ + Bx³ + Cx + D`.
    pub fn eval(&self, k: &Field, x: Fe) -> Fe {
        let x3 = k.mul(k.square(x), x);
        let x9 = k.mul(k.square(x3), x3);
        k.mul(self.a, x9) + k.mul(self.b, x3) + k.mul(self.c, x) + self.d
    }

    /// The mod-AS reduction of the sum-zero cubic sum: `A = (rst)⁻¹`,
    /// `B = (rst)⁻¹(r⁷s + s⁷t + t⁷r)^{1/4}`.
    pub fn sum_zero(k: &Field, r: Fe, s: Fe, t: Fe) -> Result<DParams> {
        let a = k.inv(k.mul(k.mul(r, s), t))?;
        let b = k.mul(a, k.root2k(sum_zero_weight(k, r, s, t), 2));
        Ok(DParams::new(a, b, Fe::ZERO, Fe::ZERO))
    }

    /// The mod-AS reduction of the inverse-cubes sum: `A = R⁻²¹`,
    /// `B = R⁻³T^{1/4}`, `C = ST^{1/8} + R³S¹⁶`, `D = R²⁴S⁷²`.
    pub fn inv_cubes(k: &Field, r: Fe, s: Fe, t: Fe) -> Result<DParams> {
        let (big_r, big_s, big_t) = inv_cubes_rst(k, r, s, t)?;
        let a = pow_i(k, big_r, -21)?;
        let b = k.mul(pow_i(k, big_r, -3)?, k.root2k(big_t, 2));
        let c = k.mul(big_s, k.root2k(big_t, 3)) + k.mul(k.pow(big_r, 3), k.pow(big_s, 16));
        let d = k.mul(k.pow(big_r, 24), k.pow(big_s, 72));
        Ok(DParams::new(a, b, c, d))
    }

    /// The mod-AS reduction of the unit-sum cubic sum with `u = st`.
    pub fn unit_sum(k: &Field, u: Fe) -> Result<DParams> {
        let ui = k.inv(u)?;
        let r2 = k.sqrt(ui);
        let r4 = k.sqrt(r2);
        let r8 = k.sqrt(r4);
        let b = Fe::ONE + r4 + r2 + ui;
        let c = Fe::ONE + r8 + r4 + r2 + ui;
        Ok(DParams::new(ui, b, c, k.square(k.square(ui))))
    }
}

/// The point-count data of `y² + y = Ax⁹ + Bx³ + Cx + D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DAnalysis {
    pub w: u32,
    #[serde(rename = "W")]
    pub kernel: Vec<Fe>,
    #[serde(rename = "Qvanishes")]
    pub q_vanishes: bool,
    pub count: u64,
    /// Sign of `count − (q + 1)`.
    pub sign: i8,
}

/// The kernel of `P(x) = A⁸x⁶⁴ + B⁸x¹⁶ + B⁴x⁴ + Ax` on k.
pub fn d_kernel(k: &Field, p: &DParams) -> AffineSpace {
    let a8 = k.frob(p.a, 3);
    let b8 = k.frob(p.b, 3);
    let b4 = k.frob(p.b, 2);
    let sys = k.linear_system(|x| {
        k.mul(a8, k.frob(x, 6)) + k.mul(b8, k.frob(x, 4)) + k.mul(b4, k.frob(x, 2)) + k.mul(p.a, x)
    });
    AffineSpace::new(0, sys.kernel().iter().copied())
}

pub fn analyze_d(k: &Field, p: &DParams) -> Result<DAnalysis> {
    if p.a.is_zero() {
        return Err(Error::Precondition("A must be nonzero"));
    }
    let w_space = d_kernel(k, p);
    let kernel: Vec<Fe> = w_space.basis().iter().map(|&b| Fe(b)).collect();
    let form = DParams { d: Fe::ZERO, ..*p };
    let qf = |x: Fe| k.trace(form.eval(k, x));
    for (i, &x) in kernel.iter().enumerate() {
        for &y in &kernel[i..] {
            if qf(x + y) != qf(x) ^ qf(y) {
                return Err(Error::Verification("Q is not linear on W".into()));
            }
        }
    }
    let q_vanishes = kernel.iter().all(|&x| qf(x) == 0);
    let zeros = k.elements().filter(|&x| k.trace(p.eval(k, x)) == 0).count() as u64;
    let count = 1 + 2 * zeros;
    let sign = (count as i128 - (k.q() as i128 + 1)).signum() as i8;
    Ok(DAnalysis {
        w: w_space.dim(),
        kernel,
        q_vanishes,
        count,
        sign,
    })
}

/// Least λ with `Tr(Aλ⁹ + Bλ³ + Cλ + D) = ε`.
pub fn search_lambda(k: &Field, p: &DParams, eps: u8) -> Option<Fe> {
    k.elements().find(|&l| k.trace(p.eval(k, l)) == eps)
}

/// Points of `x³ + y³ + z³ = 0` with `xyz ≠ 0`: `(q − 1)(|E1(k)| − 3μ)`.
pub fn fermat_surface_count(k: &Field) -> u64 {
    let e1 = (k.q() as i64 + 1 + frobenius_trace(Label::E1, k.n()).expect("E1 exists in every degree")) as u64;
    let mu = if k.is_square() { 3 } else { 1 };
    (k.q() - 1) * (e1 - 3 * mu)
}
