//! The extensions k₂ ⊇ k and k₃ ⊇ k of degrees 2 and 3, with explicit
//! embeddings of k and relative traces back down.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{apply_columns, Fe, Field, ModulusTable, MAX_DEGREE};
use crate::linalg::{AffineSpace, LinearSystem};

/// Which field of the tower an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Level {
    Base,
    Quadratic,
    Cubic,
}

impl Level {
    pub fn degree(self) -> u32 {
        match self {
            Level::Base => 1,
            Level::Quadratic => 2,
            Level::Cubic => 3,
        }
    }
}

/// An embedding of k into an extension, `x ↦ Σ x_i θ^i`.
#[derive(Clone, Debug)]
pub struct Embedding {
    theta: Fe,
    images: Vec<u64>,
    inverse: LinearSystem,
    // columns of y ↦ y^q on the extension
    frob_q: Vec<u64>,
}

impl Embedding {
    /// Finds the least root θ of k's modulus inside the subfield of `ext`
    /// fixed by `y ↦ y^q`.
    pub fn new(base: &Field, ext: &Field) -> Result<Embedding> {
        let n = base.n();
        if ext.n() % n != 0 {
            return Err(Error::Precondition("extension degree must be a multiple of the base degree"));
        }
        let frob = ext.linear_system(|y| ext.frob(y, n) + y);
        let sub = AffineSpace::new(0, frob.kernel().iter().copied());
        debug_assert_eq!(sub.dim(), n);
        let m = base.modulus();
        let theta = sub
            .iter()
            .map(Fe)
            .filter(|&y| eval_f2_poly(ext, m, y).is_zero())
            .min()
            .ok_or(Error::Verification("subfield contains no root of the modulus".into()))?;
        let mut images = Vec::with_capacity(n as usize);
        let mut p = Fe::ONE;
        for _ in 0..n {
            images.push(p.0);
            p = ext.mul(p, theta);
        }
        let inverse = LinearSystem::from_columns(&images);
        let frob_q = (0..ext.n()).map(|i| ext.frob(Fe(1 << i), n).0).collect();
        Ok(Embedding {
            theta,
            images,
            inverse,
            frob_q,
        })
    }

    pub fn theta(&self) -> Fe {
        self.theta
    }

    #[inline]
    pub fn embed(&self, x: Fe) -> Fe {
        Fe(apply_columns(&self.images, x.0))
    }

    /// The preimage of an element of the embedded copy of k.
    pub fn restrict(&self, y: Fe) -> Result<Fe> {
        self.inverse.preimage(y.0).map(Fe).ok_or(Error::NotInSubfield)
    }

    /// `y^q` in the extension.
    #[inline]
    pub fn frob_q(&self, y: Fe) -> Fe {
        Fe(apply_columns(&self.frob_q, y.0))
    }
}

// Σ m_i y^i for a polynomial m over F₂
fn eval_f2_poly(k: &Field, m: u64, y: Fe) -> Fe {
    let deg = 63 - m.leading_zeros();
    (0..=deg).rev().fold(Fe::ZERO, |acc, i| {
        let acc = k.mul(acc, y);
        if m >> i & 1 == 1 {
            acc + Fe::ONE
        } else {
            acc
        }
    })
}

/// k = F_q together with k₂ = F_{q²} and k₃ = F_{q³}.
#[derive(Clone, Debug)]
pub struct Tower {
    base: Field,
    quad: Field,
    cubic: Field,
    emb2: Embedding,
    emb3: Embedding,
}

impl Tower {
    /// Largest base degree for which k₃ still fits in a machine word.
    pub const MAX_BASE_DEGREE: u32 = MAX_DEGREE / 3;

    pub fn new(n: u32) -> Result<Tower> {
        Self::from_table(n, &ModulusTable::default())
    }

    pub fn from_table(n: u32, table: &ModulusTable) -> Result<Tower> {
        if n == 0 || n > Self::MAX_BASE_DEGREE {
            return Err(Error::DegreeOutOfRange {
                n,
                max: Self::MAX_BASE_DEGREE,
            });
        }
        let base = Field::from_table(n, table)?;
        let quad = Field::from_table(2 * n, table)?;
        let cubic = Field::from_table(3 * n, table)?;
        let emb2 = Embedding::new(&base, &quad)?;
        let emb3 = Embedding::new(&base, &cubic)?;
        Ok(Tower {
            base,
            quad,
            cubic,
            emb2,
            emb3,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn field(&self, level: Level) -> &Field {
        match level {
            Level::Base => &self.base,
            Level::Quadratic => &self.quad,
            Level::Cubic => &self.cubic,
        }
    }

    pub fn embedding(&self, level: Level) -> Option<&Embedding> {
        match level {
            Level::Base => None,
            Level::Quadratic => Some(&self.emb2),
            Level::Cubic => Some(&self.emb3),
        }
    }

    pub fn embed(&self, level: Level, x: Fe) -> Fe {
        match self.embedding(level) {
            None => x,
            Some(e) => e.embed(x),
        }
    }

    pub fn restrict(&self, level: Level, y: Fe) -> Result<Fe> {
        match self.embedding(level) {
            None => Ok(y),
            Some(e) => e.restrict(y),
        }
    }

    /// The trace from the given level down to k.
    pub fn rel_trace(&self, level: Level, y: Fe) -> Result<Fe> {
        let Some(e) = self.embedding(level) else {
            return Ok(y);
        };
        let mut acc = Fe::ZERO;
        let mut c = y;
        for _ in 0..level.degree() {
            acc += c;
            c = e.frob_q(c);
        }
        e.restrict(acc)
    }

    /// The norm from the given level down to k.
    pub fn rel_norm(&self, level: Level, y: Fe) -> Result<Fe> {
        let Some(e) = self.embedding(level) else {
            return Ok(y);
        };
        let ext = self.field(level);
        let mut acc = Fe::ONE;
        let mut c = y;
        for _ in 0..level.degree() {
            acc = ext.mul(acc, c);
            c = e.frob_q(c);
        }
        e.restrict(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_ring_map() {
        for n in 1..=6 {
            let t = Tower::new(n).unwrap();
            let k = t.base();
            for level in [Level::Quadratic, Level::Cubic] {
                let ext = t.field(level);
                for a in k.elements() {
                    for b in k.elements().step_by(3) {
                        let (ea, eb) = (t.embed(level, a), t.embed(level, b));
                        assert_eq!(t.embed(level, k.mul(a, b)), ext.mul(ea, eb));
                        assert_eq!(t.embed(level, a + b), ea + eb);
                    }
                    assert_eq!(t.restrict(level, t.embed(level, a)).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn relative_trace_is_surjective_and_linear() {
        let t = Tower::new(4).unwrap();
        for level in [Level::Quadratic, Level::Cubic] {
            let ext = t.field(level);
            let mut hits = [0u32; 16];
            for y in ext.elements() {
                hits[t.rel_trace(level, y).unwrap().0 as usize] += 1;
            }
            let fibre = (ext.q() / 16) as u32;
            assert!(hits.iter().all(|&h| h == fibre));
        }
    }

    #[test]
    fn absolute_trace_factors_through_relative_trace() {
        let t = Tower::new(3).unwrap();
        let k = t.base();
        for level in [Level::Quadratic, Level::Cubic] {
            let ext = t.field(level);
            for y in ext.elements() {
                assert_eq!(ext.trace(y), k.trace(t.rel_trace(level, y).unwrap()));
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let t = Tower::new(2).unwrap();
        let ext = t.field(Level::Cubic);
        for a in ext.elements().step_by(5) {
            for b in ext.elements().step_by(7) {
                let lhs = t.rel_norm(Level::Cubic, ext.mul(a, b)).unwrap();
                let rhs = t.base().mul(
                    t.rel_norm(Level::Cubic, a).unwrap(),
                    t.rel_norm(Level::Cubic, b).unwrap(),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn outside_subfield_is_rejected() {
        let t = Tower::new(2).unwrap();
        let ext = t.field(Level::Quadratic);
        let outside = ext.elements().find(|&y| t.restrict(Level::Quadratic, y).is_err());
        assert!(outside.is_some());
        assert!(Tower::new(22).is_err());
    }
}
