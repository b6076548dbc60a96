use std::fmt;

use super::{ChainError, FaceComplex};
use crate::dualops::PerpOp;
use crate::trees::{enumerate, MTree};

/// A tree with the operations read off its leaves: operation `j` sits at
/// leaf `j(m − 1)` (leaves numbered from 0) and depends on which child of
/// its father that leaf is: the first gives `⊣`, the last `⊢`, the middle
/// child `c` gives `⊥_{m−c}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTree {
    pub tree: MTree,
    /// `(leaf, operation)` for `j = 1, …, n − 1`.
    pub ops: Vec<(usize, PerpOp)>,
}

impl ColoredTree {
    pub fn op(&self, j: usize) -> Option<PerpOp> {
        j.checked_sub(1)
            .and_then(|i| self.ops.get(i))
            .map(|&(_, op)| op)
    }
}

impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.tree)?;
        for (leaf, op) in &self.ops {
            write!(f, ", ({leaf};{})", op.symbol())?;
        }
        write!(f, "]")
    }
}

fn leaf_op(m: usize, child: usize) -> PerpOp {
    if child == 0 {
        PerpOp::Dashv
    } else if child == m - 1 {
        PerpOp::Vdash
    } else {
        PerpOp::Perp(m - child)
    }
}

/// Child index of leaf `pos` under its father. `t` must not be a leaf.
fn leaf_child(t: &MTree, mut pos: usize) -> usize {
    for (c, ch) in t.children().iter().enumerate() {
        let n = ch.leaf_count();
        if pos < n {
            return if ch.is_leaf() { c } else { leaf_child(ch, pos) };
        }
        pos -= n;
    }
    unreachable!("leaf position within the tree")
}

pub fn color_tree(t: &MTree) -> Result<ColoredTree, ChainError> {
    if t.is_leaf() {
        return Err(ChainError::DegreeZero);
    }
    let m = t.arity();
    let ops = (1..t.degree())
        .map(|j| {
            let leaf = j * (m - 1);
            (leaf, leaf_op(m, leaf_child(t, leaf)))
        })
        .collect();
    Ok(ColoredTree {
        tree: t.clone(),
        ops,
    })
}

/// Removes the offspring of the father of leaf `pos`, or `None` when the
/// face vanishes.
///
/// * a middle leaf: every sibling must be a leaf, the father becomes a leaf;
/// * the first (last) leaf: every middle sibling must be a leaf, the father
///   is replaced by its last (first) child.
pub fn del(t: &MTree, pos: usize) -> Option<MTree> {
    let ch = t.children();
    let m = ch.len();
    let mut rest = pos;
    for (c, sub) in ch.iter().enumerate() {
        let n = sub.leaf_count();
        if rest >= n {
            rest -= n;
            continue;
        }
        if !sub.is_leaf() {
            let new = del(sub, rest)?;
            let mut v = ch.to_vec();
            v[c] = new;
            return Some(MTree::graft(v).expect("same arity"));
        }
        let middles_bare = ch[1..m - 1].iter().all(MTree::is_leaf);
        return if c == 0 {
            middles_bare.then(|| ch[m - 1].clone())
        } else if c == m - 1 {
            middles_bare.then(|| ch[0].clone())
        } else {
            (middles_bare && ch[0].is_leaf() && ch[m - 1].is_leaf()).then(|| MTree::leaf(m))
        };
    }
    unreachable!("leaf position within the tree")
}

/// The complex of m-tetrahedral chains `K[trees_n] ⊗ T^{⊗n}`.
#[derive(Debug, Clone, Copy)]
pub struct TetraComplex {
    pub arity: usize,
}

impl FaceComplex for TetraComplex {
    type Index = MTree;
    type Op = PerpOp;

    fn indices(&self, n: usize) -> Vec<MTree> {
        enumerate(self.arity, n).to_vec()
    }

    fn degree(&self, t: &MTree) -> usize {
        t.degree()
    }

    fn face_index(&self, j: usize, t: &MTree) -> Option<(MTree, PerpOp)> {
        let leaf = j * (self.arity - 1);
        let op = leaf_op(self.arity, leaf_child(t, leaf));
        del(t, leaf).map(|s| (s, op))
    }
}
