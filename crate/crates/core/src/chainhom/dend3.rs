use std::fmt;

use super::{ChainError, FaceComplex};
use crate::mdend::DendOp;

/// A pair `(k, j)` with `0 ≤ k ≤ j ≤ n`, indexing chains with `n`
/// arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DendChainIndex {
    n: usize,
    k: usize,
    j: usize,
}

impl DendChainIndex {
    pub fn new(n: usize, k: usize, j: usize) -> Result<Self, ChainError> {
        if k > j || j > n {
            return Err(ChainError::BadIndex { k, j, n });
        }
        Ok(DendChainIndex { n, k, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.k, self.j)
    }

    /// All pairs for `n` arguments; there are `(n + 1)(n + 2) / 2`.
    pub fn all(n: usize) -> Vec<DendChainIndex> {
        (0..=n)
            .flat_map(|k| (k..=n).map(move |j| DendChainIndex { n, k, j }))
            .collect()
    }
}

impl fmt::Display for DendChainIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.j)
    }
}

/// The operation fusing arguments `i` and `i + 1` of a chain indexed by
/// `(k, j)`: `•` when `i − 1` and `i` both lie in `{k, j}`, `≻` when only
/// `i` does, `≺` when only `i − 1` does, `⋆` otherwise.
pub fn dend_symbol(i: usize, idx: &DendChainIndex) -> Result<DendOp, ChainError> {
    if i == 0 || i >= idx.n {
        return Err(ChainError::FaceOutOfRange { i, n: idx.n });
    }
    let has = |r: usize| r == idx.k || r == idx.j;
    Ok(match (has(i - 1), has(i)) {
        (true, true) => DendOp::Dot(2),
        (false, true) => DendOp::Right,
        (true, false) => DendOp::Left,
        (false, false) => DendOp::Star,
    })
}

/// `r ↦ r − 1` if `i ≤ r`, else `r`.
fn shift(i: usize, r: usize) -> usize {
    if i <= r {
        r - 1
    } else {
        r
    }
}

/// The complex of 3-dendriform chains `K(X_n) ⊗ T^{⊗n}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DendComplex;

impl FaceComplex for DendComplex {
    type Index = DendChainIndex;
    type Op = DendOp;

    fn indices(&self, n: usize) -> Vec<DendChainIndex> {
        DendChainIndex::all(n)
    }

    fn degree(&self, idx: &DendChainIndex) -> usize {
        idx.n
    }

    fn face_index(&self, i: usize, idx: &DendChainIndex) -> Option<(DendChainIndex, DendOp)> {
        let op = dend_symbol(i, idx).expect("face in range");
        let face = DendChainIndex {
            n: idx.n - 1,
            k: shift(i, idx.k),
            j: shift(i, idx.j),
        };
        Some((face, op))
    }
}
