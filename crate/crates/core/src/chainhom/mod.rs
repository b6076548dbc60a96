//! Hochschild-type chain complexes: the 3-dendriform complex indexed by
//! pairs `(k, j)` and the m-tetrahedral complex indexed by colored m-ary
//! trees. Both are built from face maps `d_i` that act on an index and fuse
//! the arguments `i, i + 1` with an operation read off that index.
//!
//! The arguments live in an [`ArgAlgebra`]: formal words for displaying
//! identities, free algebras for `d² = 0` and homology, or the zero algebra.

mod args;
mod dend3;
mod tetra;

use std::collections::BTreeMap;
use std::fmt;

use crate::exactlin::{LinComb, RatMatrix, Rational};

pub use args::{
    ArgAlgebra, FormalWord, FormalWords, FreeDendArgs, FreeTetraArgs, OpSymbol, PoolSymbol,
    TetraWordArgs, ZeroArgs,
};
pub use dend3::{dend_symbol, DendChainIndex, DendComplex};
pub use tetra::{color_tree, del, ColoredTree, TetraComplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("face d_{i} is not defined on chains of degree {n}")]
    FaceOutOfRange { i: usize, n: usize },
    #[error("({k},{j}) is not an index of degree {n}")]
    BadIndex { k: usize, j: usize, n: usize },
    #[error("trees of degree 0 carry no coloring")]
    DegreeZero,
    #[error("chain degree {n} does not match {args} arguments")]
    ArgumentCount { n: usize, args: usize },
    #[error("weights up to {max_weight} cannot reach chain degree {n_max}")]
    TruncationTooSmall { n_max: usize, max_weight: usize },
    #[error("rank of d_{n} in weight {weight} differs from the rank of its transpose")]
    RankMismatch { n: usize, weight: usize },
}

/// A family of chain indices with face maps.
pub trait FaceComplex {
    type Index: Ord + Clone + fmt::Display;
    type Op: Copy;

    /// All indices of chain degree `n ≥ 1`, in canonical order.
    fn indices(&self, n: usize) -> Vec<Self::Index>;

    fn degree(&self, idx: &Self::Index) -> usize;

    /// The index part of `d_i` with the fusing operation, `None` when the
    /// face vanishes. Requires `1 ≤ i ≤ n − 1`.
    fn face_index(&self, i: usize, idx: &Self::Index) -> Option<(Self::Index, Self::Op)>;
}

/// A basis chain `(index; a_1 ⊗ … ⊗ a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainKey<I, B> {
    pub index: I,
    pub args: Vec<B>,
}

impl<I: fmt::Display, B: fmt::Display> fmt::Display for ChainKey<I, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}; {}]", self.index, args.join(" ⊗ "))
    }
}

pub type Chain<I, B> = LinComb<ChainKey<I, B>>;

pub fn chain<I: Ord + Clone, B: Ord + Clone>(index: I, args: Vec<B>) -> Chain<I, B> {
    LinComb::basis(ChainKey { index, args })
}

/// The face `d_i` applied termwise.
pub fn face<C, A>(
    cx: &C,
    alg: &A,
    i: usize,
    c: &Chain<C::Index, A::Basis>,
) -> Result<Chain<C::Index, A::Basis>, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let mut out = LinComb::zero();
    for (key, coeff) in c.iter() {
        let n = cx.degree(&key.index);
        if key.args.len() != n {
            return Err(ChainError::ArgumentCount {
                n,
                args: key.args.len(),
            });
        }
        if i == 0 || i >= n {
            return Err(ChainError::FaceOutOfRange { i, n });
        }
        let Some((index, op)) = cx.face_index(i, &key.index) else {
            continue;
        };
        for (fused, c2) in alg.fuse(op, &key.args[i - 1], &key.args[i]).iter() {
            let mut args = Vec::with_capacity(n - 1);
            args.extend_from_slice(&key.args[..i - 1]);
            args.push(fused.clone());
            args.extend_from_slice(&key.args[i + 1..]);
            out.add_term(
                ChainKey {
                    index: index.clone(),
                    args,
                },
                coeff.clone() * c2.clone(),
            );
        }
    }
    Ok(out)
}

/// `d = Σ_{i=1}^{n−1} (−1)^{i+1} d_i`, applied termwise to chains of any degree.
pub fn boundary<C, A>(
    cx: &C,
    alg: &A,
    c: &Chain<C::Index, A::Basis>,
) -> Result<Chain<C::Index, A::Basis>, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let mut out = LinComb::zero();
    for (key, coeff) in c.iter() {
        let single = LinComb::term(key.clone(), coeff.clone());
        for i in 1..cx.degree(&key.index) {
            let sign = if i % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            out.add_scaled(&face(cx, alg, i, &single)?, &sign);
        }
    }
    Ok(out)
}

/// `d_i d_j c − d_{j−1} d_i c` for `i < j`.
pub fn simplicial_defect<C, A>(
    cx: &C,
    alg: &A,
    i: usize,
    j: usize,
    c: &Chain<C::Index, A::Basis>,
) -> Result<Chain<C::Index, A::Basis>, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let lhs = face(cx, alg, i, &face(cx, alg, j, c)?)?;
    let rhs = face(cx, alg, j - 1, &face(cx, alg, i, c)?)?;
    Ok(lhs - rhs)
}

/// Outcome of [`check_complex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    pub max_n: usize,
    pub chains: usize,
    pub identities: usize,
    /// First chain with `d(d(c)) ≠ 0` or a failing simplicial identity.
    pub failure: Option<String>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for ComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} chains up to degree {}, {} simplicial identities: ",
            self.chains, self.max_n, self.identities
        )?;
        match &self.failure {
            None => write!(f, "pass"),
            Some(s) => write!(f, "FAIL {s}"),
        }
    }
}

/// Checks `d ∘ d = 0` and `d_i d_j = d_{j−1} d_i` (`i < j`) on every basis
/// chain of degree `2 ≤ n ≤ max_n`, with argument tuples supplied by
/// `args(n)`.
pub fn check_complex<C, A>(
    cx: &C,
    alg: &A,
    max_n: usize,
    args: impl Fn(usize) -> Vec<Vec<A::Basis>>,
) -> Result<ComplexReport, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let mut report = ComplexReport {
        max_n,
        chains: 0,
        identities: 0,
        failure: None,
    };
    for n in 2..=max_n {
        let tuples = args(n);
        for idx in cx.indices(n) {
            for a in &tuples {
                let c = chain(idx.clone(), a.clone());
                report.chains += 1;
                let dd = boundary(cx, alg, &boundary(cx, alg, &c)?)?;
                if !dd.is_zero() {
                    report.failure = Some(format!("d(d({c})) = {dd}"));
                    return Ok(report);
                }
                for j in 2..n {
                    for i in 1..j {
                        report.identities += 1;
                        let r = simplicial_defect(cx, alg, i, j, &c)?;
                        if !r.is_zero() {
                            report.failure =
                                Some(format!("d_{i} d_{j} − d_{} d_{i} on {c} = {r}", j - 1));
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Basis of the weight-`w` part of the degree-`n` chains: every index
/// with every tuple of argument basis elements whose weights sum to `w`.
pub fn chain_basis<C, A>(cx: &C, alg: &A, n: usize, w: usize) -> Vec<ChainKey<C::Index, A::Basis>>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let tuples = arg_tuples(alg, n, w);
    let mut out = Vec::new();
    for idx in cx.indices(n) {
        for a in &tuples {
            out.push(ChainKey {
                index: idx.clone(),
                args: a.clone(),
            });
        }
    }
    out
}

/// All argument tuples of length `n` and total weight `w`, each argument
/// of weight at least one.
pub fn arg_tuples<Op, A: ArgAlgebra<Op>>(alg: &A, n: usize, w: usize) -> Vec<Vec<A::Basis>> {
    fn go<Op, A: ArgAlgebra<Op>>(
        alg: &A,
        n: usize,
        w: usize,
        cur: &mut Vec<A::Basis>,
        out: &mut Vec<Vec<A::Basis>>,
    ) {
        if n == 0 {
            if w == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if w < n {
            return;
        }
        for first in 1..=w - (n - 1) {
            for b in alg.basis(first) {
                cur.push(b);
                go(alg, n - 1, w - first, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(alg, n, w, &mut Vec::new(), &mut out);
    out
}

/// One row of a homology table, summed over weights `n ≤ w ≤ max_weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRow {
    pub n: usize,
    pub dim_chains: usize,
    /// Rank of `d: C_n → C_{n−1}`.
    pub rank_out: usize,
    /// Rank of `d: C_{n+1} → C_n`.
    pub rank_in: usize,
    pub dim_homology: usize,
    /// Same number computed from the transposed matrices.
    pub dim_cohomology: usize,
}

fn boundary_matrix<C, A>(cx: &C, alg: &A, n: usize, w: usize) -> Result<RatMatrix, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    let cols = chain_basis(cx, alg, n, w);
    let rows = if n > 1 {
        chain_basis(cx, alg, n - 1, w)
    } else {
        Vec::new()
    };
    let pos: BTreeMap<_, usize> = rows
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let mut m = RatMatrix::zeros(rows.len(), cols.len());
    if n > 1 {
        for (c, key) in cols.iter().enumerate() {
            let image = boundary(cx, alg, &LinComb::basis(key.clone()))?;
            for (k, v) in image.iter() {
                let r = pos[k];
                m.set(r, c, v.clone());
            }
        }
    }
    Ok(m)
}

/// `(rank M, rank Mᵀ)`-checked rank.
fn checked_rank(m: &RatMatrix, n: usize, weight: usize) -> Result<usize, ChainError> {
    let r = m.rank();
    if m.transpose().rank() != r {
        return Err(ChainError::RankMismatch { n, weight });
    }
    Ok(r)
}

/// Homology dimensions of degrees `1..=n_max`, computed weight by weight
/// for total argument weight up to `max_weight`. With a free algebra this
/// is the homology of the free algebra in those weights, which is also that
/// of its truncation at `max_weight`.
pub fn homology_ranks<C, A>(
    cx: &C,
    alg: &A,
    n_max: usize,
    max_weight: usize,
) -> Result<Vec<HomologyRow>, ChainError>
where
    C: FaceComplex,
    A: ArgAlgebra<C::Op>,
{
    if n_max > max_weight {
        return Err(ChainError::TruncationTooSmall { n_max, max_weight });
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut row = HomologyRow {
            n,
            dim_chains: 0,
            rank_out: 0,
            rank_in: 0,
            dim_homology: 0,
            dim_cohomology: 0,
        };
        for w in n..=max_weight {
            let out = boundary_matrix(cx, alg, n, w)?;
            let inn = boundary_matrix(cx, alg, n + 1, w)?;
            let dim = out.cols();
            let (ro, ri) = (out.rank(), inn.rank());
            // cohomology: δ = dᵀ, so H^n = dim − rank δ_n − rank δ_{n−1}
            let (co, ci) = (checked_rank(&out, n, w)?, checked_rank(&inn, n + 1, w)?);
            row.dim_chains += dim;
            row.rank_out += ro;
            row.rank_in += ri;
            row.dim_homology += dim - ro - ri;
            row.dim_cohomology += dim - co - ci;
        }
        rows.push(row);
    }
    Ok(rows)
}
