//! Linear algebra over GF(2) on vectors packed into a `u64`.
//!
//! Every F₂-linear map we care about (Artin-Schreier operators, linearized
//! polynomials, subfield embeddings, the quartic map `Y ↦ Y⁴+fY²+gY`) acts on
//! at most 63 coordinates, so a column is a single machine word and the
//! echelon form is a table indexed by leading bit.

/// Echelonized image of a linear map `F₂^dim → F₂^64`, together with the
/// coordinate combinations that produced each pivot and a kernel basis.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    dim: u32,
    // pivots[b] = (vector with leading bit b, combination of input columns)
    pivots: Vec<Option<(u64, u64)>>,
    kernel: Vec<u64>,
}

impl LinearSystem {
    /// Builds the system from the images of the unit vectors `e_0 .. e_{dim-1}`.
    pub fn from_columns(columns: &[u64]) -> Self {
        assert!(columns.len() <= 64);
        let mut sys = LinearSystem {
            dim: columns.len() as u32,
            pivots: vec![None; 64],
            kernel: Vec::new(),
        };
        for (i, &col) in columns.iter().enumerate() {
            let (rest, combo) = sys.reduce(col, 1u64 << i);
            if rest == 0 {
                sys.kernel.push(combo);
            } else {
                let lead = 63 - rest.leading_zeros() as usize;
                sys.pivots[lead] = Some((rest, combo));
            }
        }
        sys
    }

    /// Builds the system of the map `f` restricted to `F₂^dim`.
    pub fn from_map(dim: u32, f: impl Fn(u64) -> u64) -> Self {
        let cols: Vec<u64> = (0..dim).map(|i| f(1u64 << i)).collect();
        Self::from_columns(&cols)
    }

    fn reduce(&self, mut v: u64, mut combo: u64) -> (u64, u64) {
        let mut below = 64u32;
        loop {
            let window = if below == 64 { v } else { v & ((1u64 << below) - 1) };
            if window == 0 {
                return (v, combo);
            }
            let lead = 63 - window.leading_zeros();
            if let Some((p, c)) = self.pivots[lead as usize] {
                v ^= p;
                combo ^= c;
            }
            below = lead;
        }
    }

    /// Dimension of the domain.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn rank(&self) -> u32 {
        self.dim - self.kernel.len() as u32
    }

    /// A basis of the kernel.
    pub fn kernel(&self) -> &[u64] {
        &self.kernel
    }

    /// Some `x` with `L(x) = b`, if `b` lies in the image.
    pub fn preimage(&self, b: u64) -> Option<u64> {
        match self.reduce(b, 0) {
            (0, combo) => Some(combo),
            _ => None,
        }
    }

    pub fn in_image(&self, b: u64) -> bool {
        self.reduce(b, 0).0 == 0
    }

    /// The full solution set of `L(x) = b`.
    pub fn solve(&self, b: u64) -> Option<AffineSpace> {
        self.preimage(b)
            .map(|p| AffineSpace::new(p, self.kernel.iter().copied()))
    }
}

/// A coset `p + span(basis)` of a subspace of `F₂^64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    offset: u64,
    // fully reduced echelon basis, sorted by decreasing leading bit
    basis: Vec<u64>,
}

impl AffineSpace {
    pub fn new(offset: u64, generators: impl IntoIterator<Item = u64>) -> Self {
        let mut basis: Vec<u64> = Vec::new();
        for g in generators {
            let v = reduce_by(&basis, g);
            if v == 0 {
                continue;
            }
            let lead = 1u64 << (63 - v.leading_zeros());
            for b in basis.iter_mut() {
                if *b & lead != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
        basis.sort_unstable_by_key(|b| b.leading_zeros());
        let offset = reduce_by(&basis, offset);
        AffineSpace { offset, basis }
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    /// Number of points; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u64 {
        1u64 << self.basis.len()
    }

    /// The numerically least element of the coset.
    pub fn least(&self) -> u64 {
        self.offset
    }

    pub fn contains(&self, x: u64) -> bool {
        reduce_by(&self.basis, x ^ self.offset) == 0
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// All elements, in Gray-code order starting from the least one.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let mut cur = self.offset;
        (0..self.len()).map(move |i| {
            if i > 0 {
                cur ^= self.basis[i.trailing_zeros() as usize];
            }
            cur
        })
    }
}

// Clears the leading bit of every basis vector from `v`; with a reduced
// echelon basis this yields the least element of `v + span(basis)`.
fn reduce_by(basis: &[u64], mut v: u64) -> u64 {
    for b in basis {
        let lead = 1u64 << (63 - b.leading_zeros());
        if v & lead != 0 {
            v ^= b;
        }
    }
    v
}
