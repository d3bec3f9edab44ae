//! Binary fields F_{2^n} in a polynomial basis.
//!
//! An element is the bit vector of its coefficients (bit `i` is the
//! coefficient of `x^i`). The canonical enumeration order of a field is the
//! integer order of these bit vectors, so `0, 1, x, x+1, ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{AffineSpace, LinearSystem};

/// Largest extension degree representable in a `u64` element.
pub const MAX_DEGREE: u32 = 63;

/// Default desk-scale bound for user-facing field sizes.
pub const DESK_MAX_DEGREE: u32 = 24;

/// A field element, tied by convention to the [`Field`] that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Fe> {
        let t = s.trim();
        let t = t.strip_prefix("0x").unwrap_or(t);
        u64::from_str_radix(t, 16)
            .map(Fe)
            .map_err(|_| Error::ParseHex(s.to_string()))
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

// Addition in characteristic 2 needs no context.
impl Add for Fe {
    type Output = Fe;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl AddAssign for Fe {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Fe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Fe, D::Error> {
        let s = String::deserialize(d)?;
        Fe::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Polynomials over F₂ packed in a `u64` (bit `i` = coefficient of `x^i`).
pub mod poly2 {
    #[inline]
    pub fn degree(p: u64) -> i32 {
        63 - p.leading_zeros() as i32
    }

    pub fn rem(mut a: u64, m: u64) -> u64 {
        let dm = degree(m);
        while a != 0 && degree(a) >= dm {
            a ^= m << (degree(a) - dm);
        }
        a
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = rem(a, b);
            a = b;
            b = r;
        }
        a
    }

    /// `a·b mod m` for `deg a, deg b < deg m ≤ 63`.
    pub fn mulmod(mut a: u64, mut b: u64, m: u64) -> u64 {
        let n = degree(m) as u32;
        let top = 1u64 << n;
        let mut r = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= m;
            }
        }
        r
    }

    /// Ben-Or test: `m` of degree `n` is irreducible iff
    /// `gcd(x^{2^i} - x, m) = 1` for all `1 ≤ i ≤ n/2`.
    pub fn is_irreducible(m: u64) -> bool {
        let n = degree(m);
        if n < 1 {
            return false;
        }
        if n == 1 {
            return true;
        }
        if m & 1 == 0 {
            return false;
        }
        let mut h = 0b10u64;
        for _ in 0..n / 2 {
            h = mulmod(h, h, m);
            if gcd(m, h ^ 0b10) != 1 {
                return false;
            }
        }
        true
    }

    /// The least irreducible polynomial of degree `n` with nonzero constant
    /// term, in integer order. For `n = 1` this is `x + 1`.
    pub fn least_irreducible(n: u32) -> u64 {
        let start = 1u64 << n | 1;
        (start..start << 1)
            .step_by(2)
            .find(|&m| is_irreducible(m))
            .expect("irreducible polynomials exist in every degree")
    }
}

/// User overrides of the default modulus per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModulusTable {
    entries: BTreeMap<u32, u64>,
}

impl ModulusTable {
    /// Parses lines of the form `n:hex`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: &str| Error::ModuliFile {
                line: i + 1,
                reason: reason.to_string(),
            };
            let (n, hex) = line.split_once(':').ok_or_else(|| bad("expected n:hex"))?;
            let n: u32 = n.trim().parse().map_err(|_| bad("degree is not an integer"))?;
            let m = Fe::from_hex(hex).map_err(|_| bad("modulus is not hex"))?.0;
            if !(1..=MAX_DEGREE).contains(&n) || poly2::degree(m) != n as i32 || !poly2::is_irreducible(m) {
                return Err(bad("modulus is not irreducible of the stated degree"));
            }
            entries.insert(n, m);
        }
        Ok(ModulusTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::ModuliFile {
            line: 0,
            reason: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn insert(&mut self, n: u32, modulus: u64) {
        self.entries.insert(n, modulus);
    }

    /// The modulus used for degree `n`: the override, or the least irreducible.
    pub fn modulus(&self, n: u32) -> u64 {
        self.entries
            .get(&n)
            .copied()
            .unwrap_or_else(|| poly2::least_irreducible(n))
    }
}

/// `{n, modulus}` as emitted in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub n: u32,
    pub modulus: String,
}

#[derive(Clone, Debug)]
struct CubeData {
    // q - 1 = 3^s · t with 3 ∤ t
    s: u32,
    sylow_gen: u64,
    omega: u64,
    // 3·alpha + t·beta ≡ 1 (mod q - 1); exponents already reduced
    alpha: u64,
    t_beta: u64,
}

/// The field F_{2^n} with its precomputed linear maps.
#[derive(Clone, Debug)]
pub struct Field {
    n: u32,
    modulus: u64,
    low: u64,
    mask: u64,
    trace_mask: u64,
    c0: Fe,
    sqrt_basis: Vec<u64>,
    as_map: LinearSystem,
    f4_trace_basis: Option<Vec<u64>>,
    cube: Option<CubeData>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// F_{2^n} over the least irreducible polynomial of degree `n`.
    pub fn new(n: u32) -> Result<Field> {
        check_degree(n)?;
        Self::with_modulus(n, poly2::least_irreducible(n))
    }

    pub fn from_table(n: u32, table: &ModulusTable) -> Result<Field> {
        check_degree(n)?;
        Self::with_modulus(n, table.modulus(n))
    }

    pub fn with_modulus(n: u32, modulus: u64) -> Result<Field> {
        check_degree(n)?;
        if poly2::degree(modulus) != n as i32 || !poly2::is_irreducible(modulus) {
            return Err(Error::BadModulus { n, modulus });
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut k = Field {
            n,
            modulus,
            low: modulus & mask,
            mask,
            trace_mask: 0,
            c0: Fe::ONE,
            sqrt_basis: Vec::new(),
            as_map: LinearSystem::from_columns(&[]),
            f4_trace_basis: None,
            cube: None,
        };
        k.trace_mask = (0..n)
            .filter(|&i| k.frob_sum(Fe(1 << i), 1, n) == Fe::ONE)
            .fold(0u64, |m, i| m | 1 << i);
        k.c0 = Fe(1 << k.trace_mask.trailing_zeros());
        k.sqrt_basis = (0..n).map(|i| k.frob(Fe(1 << i), n - 1).0).collect();
        k.as_map = k.linear_system(|y| k.square(y) + y);
        if n % 2 == 0 {
            k.f4_trace_basis = Some((0..n).map(|i| k.frob_sum(Fe(1 << i), 2, n / 2).0).collect());
            k.cube = Some(k.cube_data());
        }
        Ok(k)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of elements `q = 2^n`.
    #[inline]
    pub fn q(&self) -> u64 {
        1u64 << self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The enumeration-least element of absolute trace 1.
    #[inline]
    pub fn c0(&self) -> Fe {
        self.c0
    }

    /// Whether `q` is a square, i.e. `n` is even.
    #[inline]
    pub fn is_square(&self) -> bool {
        self.n % 2 == 0
    }

    pub fn info(&self) -> FieldInfo {
        FieldInfo {
            n: self.n,
            modulus: format!("{:x}", self.modulus),
        }
    }

    #[inline]
    pub fn contains(&self, x: Fe) -> bool {
        x.0 & !self.mask == 0
    }

    /// Checks that `bits` encodes an element of this field.
    pub fn elem(&self, bits: u64) -> Result<Fe> {
        if bits & !self.mask == 0 {
            Ok(Fe(bits))
        } else {
            Err(Error::ForeignElement { n: self.n, value: bits })
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q()).map(Fe)
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q()).map(Fe)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let (mut a, mut b) = (a.0, b.0);
        let top = 1u64 << (self.n - 1);
        let mut r = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            let carry = a & top != 0;
            a = (a << 1) & self.mask;
            if carry {
                a ^= self.low;
            }
        }
        Fe(r)
    }

    #[inline]
    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q() - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^{2^k}`.
    pub fn frob(&self, a: Fe, k: u32) -> Fe {
        (0..k).fold(a, |x, _| self.square(x))
    }

    // a + a^{2^s} + a^{2^{2s}} + ... (`terms` summands)
    fn frob_sum(&self, a: Fe, step: u32, terms: u32) -> Fe {
        let mut acc = Fe::ZERO;
        let mut x = a;
        for _ in 0..terms {
            acc += x;
            x = self.frob(x, step);
        }
        acc
    }

    /// The unique square root, `a^{q/2}`.
    #[inline]
    pub fn sqrt(&self, a: Fe) -> Fe {
        Fe(apply_columns(&self.sqrt_basis, a.0))
    }

    /// `a^{1/2^k}`.
    pub fn root2k(&self, a: Fe, k: u32) -> Fe {
        (0..k).fold(a, |x, _| self.sqrt(x))
    }

    /// Absolute trace to F₂, as 0 or 1.
    #[inline]
    pub fn trace(&self, a: Fe) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Bit mask `m` with `Tr(a) = parity(a & m)`.
    pub fn trace_mask(&self) -> u64 {
        self.trace_mask
    }

    /// `Tr_{k/F₄}(a)`, an element of the subfield F₄ ⊆ k.
    pub fn trace_to_f4(&self, a: Fe) -> Result<Fe> {
        let basis = self
            .f4_trace_basis
            .as_ref()
            .ok_or(Error::OddDegree("trace to F4"))?;
        Ok(Fe(apply_columns(basis, a.0)))
    }

    /// Membership in `AS²(k) = {y + y⁴}`, the kernel of the trace to F₄.
    pub fn in_as2(&self, a: Fe) -> Result<bool> {
        Ok(self.trace_to_f4(a)?.is_zero())
    }

    /// Least `y` with `y² + y = z`, or `None` when `Tr(z) = 1`.
    pub fn solve_as(&self, z: Fe) -> Option<Fe> {
        self.as_map.solve(z.0).map(|s| Fe(s.least()))
    }

    /// The matrix of an F₂-linear map `k → k`.
    pub fn linear_system(&self, f: impl Fn(Fe) -> Fe) -> LinearSystem {
        LinearSystem::from_map(self.n, |x| f(Fe(x)).0)
    }

    /// All solutions of `L(v) = b`, or `None` when there are none.
    pub fn solve_linearized(&self, l: &LinearizedPoly, b: Fe) -> Option<AffineSpace> {
        self.linear_system(|v| l.eval(self, v)).solve(b.0)
    }

    /// Whether `a` is a cube; 0 counts as a cube.
    pub fn is_cube(&self, a: Fe) -> bool {
        if a.is_zero() || !self.is_square() {
            return true;
        }
        self.pow(a, (self.q() - 1) / 3) == Fe::ONE
    }

    /// `a^{(q-1)/3}` for even `n`: identifies the class of `a` in k*/(k*)³.
    pub fn cubic_character(&self, a: Fe) -> Result<Fe> {
        if !self.is_square() {
            return Err(Error::OddDegree("cubic character"));
        }
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, (self.q() - 1) / 3))
    }

    /// The enumeration-least cube root, or `None` for non-cubes.
    pub fn cube_root(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        let Some(cd) = &self.cube else {
            // 3 is invertible modulo q - 1 = 2^n - 1 for odd n
            return Some(self.pow(a, (2 * self.q() - 1) / 3));
        };
        if !self.is_cube(a) {
            return None;
        }
        // a = a^{3α} · a^{tβ}; the second factor is a cube inside the 3-Sylow subgroup.
        let target = self.pow(a, cd.t_beta);
        let g3 = self.pow(Fe(cd.sylow_gen), 3);
        let mut y = Fe::ONE;
        let mut y3 = Fe::ONE;
        let order = 3u64.pow(cd.s);
        let mut found = None;
        for _ in 0..order {
            if y3 == target {
                found = Some(y);
                break;
            }
            y = self.mul(y, Fe(cd.sylow_gen));
            y3 = self.mul(y3, g3);
        }
        let root = self.mul(self.pow(a, cd.alpha), found?);
        let w = Fe(cd.omega);
        let r1 = self.mul(root, w);
        let r2 = self.mul(r1, w);
        Some(root.min(r1).min(r2))
    }

    fn cube_data(&self) -> CubeData {
        let order = self.q() - 1;
        let mut s = 0u32;
        let mut t = order;
        while t % 3 == 0 {
            t /= 3;
            s += 1;
        }
        let rho = self
            .nonzero()
            .find(|&x| !self.is_cube(x))
            .expect("even degree fields have non-cubes");
        let sylow_gen = self.pow(rho, t).0;
        let omega = self.pow(Fe(sylow_gen), 3u64.pow(s - 1)).0;
        let (alpha, beta) = bezout(3, t as i128);
        let m = order as i128;
        let alpha = alpha.rem_euclid(m) as u64;
        let t_beta = ((t as i128 * beta).rem_euclid(m)) as u64;
        CubeData {
            s,
            sylow_gen,
            omega,
            alpha,
            t_beta,
        }
    }
}

fn check_degree(n: u32) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE })
    }
}

#[inline]
pub(crate) fn apply_columns(cols: &[u64], mut x: u64) -> u64 {
    let mut acc = 0u64;
    let mut i = 0;
    while x != 0 {
        if x & 1 == 1 {
            acc ^= cols[i];
        }
        x >>= 1;
        i += 1;
    }
    acc
}

// (x, y) with a·x + b·y = 1, for coprime a, b
fn bezout(a: i128, b: i128) -> (i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    debug_assert_eq!(r0, 1);
    (s0, t0)
}

/// A linearized polynomial `Σ c_i · v^{2^{k_i}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub terms: Vec<(Fe, u32)>,
}

impl LinearizedPoly {
    pub fn new(terms: impl IntoIterator<Item = (Fe, u32)>) -> Self {
        LinearizedPoly {
            terms: terms.into_iter().collect(),
        }
    }

    pub fn eval(&self, k: &Field, v: Fe) -> Fe {
        self.terms
            .iter()
            .fold(Fe::ZERO, |acc, &(c, e)| acc + k.mul(c, k.frob(v, e)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_field() {
        let k = Field::new(1).unwrap();
        assert_eq!(k.modulus(), 0b11);
        assert_eq!(k.c0(), Fe::ONE);
        assert_eq!(k.trace(Fe::ONE), 1);
    }

    #[test]
    fn least_irreducible_cubic_by_enumeration() {
        // brute force: a cubic is irreducible iff it has no root in F2
        let brute = (8u64..16)
            .find(|&m| {
                let eval = |x: u64| (0..4).filter(|i| m >> i & 1 == 1).map(|i| x.pow(i)).sum::<u64>() % 2;
                eval(0) == 1 && eval(1) == 1
            })
            .unwrap();
        assert_eq!(brute, 0b1011);
        assert_eq!(Field::new(3).unwrap().modulus(), 0b1011);
    }

    #[test]
    fn c0_in_f4_is_least_root_of_x2_x_1() {
        let k = Field::new(2).unwrap();
        let brute = k
            .elements()
            .find(|&x| x + k.square(x) == Fe::ONE)
            .unwrap();
        assert_eq!(brute, Fe(0b10));
        assert_eq!(k.c0(), brute);
    }

    #[test]
    fn omega_squared_in_f4() {
        let k = Field::new(2).unwrap();
        let w = Fe(0b10);
        assert_eq!(k.mul(w, w), Fe(0b11));
        assert_eq!(k.sqrt(Fe::ONE), Fe::ONE);
    }

    #[test]
    fn traces_over_small_fields() {
        for n in 1..=8 {
            let k = Field::new(n).unwrap();
            assert_eq!(k.trace(Fe::ZERO), 0);
            assert_eq!(k.trace(Fe::ONE) as u32, n % 2);
            let zeros = k.elements().filter(|&x| k.trace(x) == 0).count() as u64;
            assert_eq!(zeros, k.q() / 2);
        }
        let f4 = Field::new(2).unwrap();
        assert_eq!(f4.trace(Fe(0b10)), 1);
    }

    #[test]
    fn trace_to_f4_small_cases() {
        let f4 = Field::new(2).unwrap();
        for x in f4.elements() {
            assert_eq!(f4.trace_to_f4(x).unwrap(), x);
        }
        let f16 = Field::new(4).unwrap();
        assert_eq!(f16.trace_to_f4(Fe::ONE).unwrap(), Fe::ZERO);
        assert_eq!(f16.trace_to_f4(Fe::ZERO).unwrap(), Fe::ZERO);
        assert!(Field::new(3).unwrap().trace_to_f4(Fe::ONE).is_err());
    }

    #[test]
    fn as2_has_index_four() {
        for n in [2, 4, 6, 8] {
            let k = Field::new(n).unwrap();
            let image: std::collections::BTreeSet<Fe> =
                k.elements().map(|y| y + k.frob(y, 2)).collect();
            assert_eq!(image.len() as u64 * 4, k.q());
            for x in k.elements() {
                assert_eq!(k.in_as2(x).unwrap(), image.contains(&x));
            }
        }
    }

    #[test]
    fn solve_as_matches_enumeration() {
        for n in 1..=8 {
            let k = Field::new(n).unwrap();
            for z in k.elements() {
                let brute = k.elements().find(|&y| k.square(y) + y == z);
                assert_eq!(k.solve_as(z), brute, "n={n} z={z}");
            }
        }
        let f2 = Field::new(1).unwrap();
        assert_eq!(f2.solve_as(Fe::ONE), None);
        assert_eq!(f2.solve_as(Fe::ZERO), Some(Fe::ZERO));
    }

    #[test]
    fn cubes_and_cube_roots() {
        let f4 = Field::new(2).unwrap();
        assert!(!f4.is_cube(Fe(0b10)));
        assert_eq!(f4.cube_root(Fe::ONE), Some(Fe::ONE));
        let f8 = Field::new(3).unwrap();
        assert!(f8.nonzero().all(|x| f8.is_cube(x)));
        for n in 1..=10 {
            let k = Field::new(n).unwrap();
            for x in k.elements() {
                let brute = k.elements().find(|&r| k.mul(k.square(r), r) == x);
                assert_eq!(k.cube_root(x), brute, "n={n} x={x}");
                assert_eq!(k.is_cube(x), brute.is_some());
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let k = Field::new(5).unwrap();
        assert_eq!(k.inv(Fe::ZERO), Err(Error::ZeroInverse));
        for x in k.nonzero() {
            assert_eq!(k.mul(x, k.inv(x).unwrap()), Fe::ONE);
        }
    }

    #[test]
    fn solve_linearized_examples() {
        let k = Field::new(6).unwrap();
        let id = LinearizedPoly::new([(Fe::ONE, 0)]);
        let b = Fe(0b101101);
        let sols: Vec<u64> = k.solve_linearized(&id, b).unwrap().iter().collect();
        assert_eq!(sols, vec![b.0]);

        let as_op = LinearizedPoly::new([(Fe::ONE, 1), (Fe::ONE, 0)]);
        let odd = k.nonzero().find(|&x| k.trace(x) == 1).unwrap();
        assert!(k.solve_linearized(&as_op, odd).is_none());

        // a²v⁴ + av is bijective for a non-cube a
        let a = k.nonzero().find(|&x| !k.is_cube(x)).unwrap();
        let l = LinearizedPoly::new([(k.square(a), 2), (a, 0)]);
        assert_eq!(k.linear_system(|v| l.eval(&k, v)).rank(), k.n());
        for b in k.elements() {
            assert_eq!(k.solve_linearized(&l, b).unwrap().len(), 1);
        }
    }

    #[test]
    fn modulus_table_parsing() {
        let t = ModulusTable::parse("# override\n3:d\n\n4:13\n").unwrap();
        assert_eq!(t.modulus(3), 0b1101);
        assert_eq!(t.modulus(4), 0x13);
        assert_eq!(t.modulus(5), poly2::least_irreducible(5));
        assert!(ModulusTable::parse("4:f").is_err()); // x⁴+x³+x²+x+1 is fine, but 0xf has degree 3
        assert!(ModulusTable::parse("2:5").is_err()); // x²+1 reducible
        let k = Field::from_table(3, &t).unwrap();
        assert_eq!(k.modulus(), 0b1101);
    }

    #[test]
    fn degree_bounds() {
        assert!(Field::new(0).is_err());
        assert!(Field::new(64).is_err());
    }

    #[test]
    fn hex_round_trip() {
        assert_eq!(Fe::from_hex("1f").unwrap(), Fe(31));
        assert_eq!(Fe(31).to_hex(), "1f");
        assert!(Fe::from_hex("zz").is_err());
    }
}
