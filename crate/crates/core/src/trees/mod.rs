//! Planar rooted m-ary trees.
//!
//! A tree is either the leaf `|` or a node with exactly `m` ordered children.
//! Trees are immutable and cheaply clonable; each one caches its canonical
//! text key, which also defines the basis order.

mod enumerate;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use enumerate::{count, enumerate};
pub use parse::parse_tree_key_prefix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("arity must be at least 2, got {0}")]
    InvalidArity(usize),
    #[error("a node of arity {expected} needs {expected} children, got {found}")]
    WrongChildCount { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("bad tree key at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

struct TreeData {
    arity: usize,
    degree: usize,
    children: Vec<MTree>,
    key: String,
}

/// A planar rooted tree in which every internal node has exactly `arity`
/// children. The degree is the number of internal nodes.
#[derive(Clone)]
pub struct MTree(Arc<TreeData>);

impl MTree {
    pub fn leaf(arity: usize) -> MTree {
        MTree(Arc::new(TreeData {
            arity,
            degree: 0,
            children: Vec::new(),
            key: ".".to_string(),
        }))
    }

    /// The unique degree-1 tree.
    pub fn corolla(arity: usize) -> MTree {
        Self::graft(vec![Self::leaf(arity); arity]).expect("corolla children are valid")
    }

    /// Joins `children` under a new root, the `t_1 ∨ … ∨ t_m` operation.
    pub fn graft(children: Vec<MTree>) -> Result<MTree, TreeError> {
        let arity = children.first().map_or(0, MTree::arity);
        if arity < 2 {
            return Err(TreeError::InvalidArity(arity));
        }
        if children.len() != arity {
            return Err(TreeError::WrongChildCount {
                expected: arity,
                found: children.len(),
            });
        }
        if let Some(bad) = children.iter().find(|c| c.arity() != arity) {
            return Err(TreeError::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        Ok(Self::graft_unchecked(children))
    }

    /// `graft` for callers that already know the children are well formed.
    pub(crate) fn graft_unchecked(children: Vec<MTree>) -> MTree {
        let arity = children.len();
        let degree = 1 + children.iter().map(MTree::degree).sum::<usize>();
        let mut key =
            String::with_capacity(2 + children.iter().map(|c| c.key().len() + 1).sum::<usize>());
        key.push('(');
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                key.push(' ');
            }
            key.push_str(c.key());
        }
        key.push(')');
        MTree(Arc::new(TreeData {
            arity,
            degree,
            children,
            key,
        }))
    }

    pub fn parse(s: &str, arity: usize) -> Result<MTree, TreeError> {
        parse::parse(s, Some(arity))
    }

    /// Parses a key, reading the arity from the first node. A bare `.`
    /// is rejected because its arity cannot be inferred.
    pub fn parse_any(s: &str) -> Result<MTree, TreeError> {
        parse::parse(s, None)
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_leaf(&self) -> bool {
        self.0.degree == 0
    }

    pub fn children(&self) -> &[MTree] {
        &self.0.children
    }

    pub fn key(&self) -> &str {
        &self.0.key
    }

    pub fn leaf_count(&self) -> usize {
        (self.arity() - 1) * self.degree() + 1
    }

    /// Mirror image: children reversed at every level.
    pub fn involution(&self) -> MTree {
        if self.is_leaf() {
            return self.clone();
        }
        Self::graft_unchecked(
            self.children()
                .iter()
                .rev()
                .map(MTree::involution)
                .collect(),
        )
    }

    /// Replaces the `pos`-th leaf (0-based, left to right) by `t`.
    pub fn replace_leaf(&self, pos: usize, t: &MTree) -> MTree {
        fn go(node: &MTree, pos: &mut usize, t: &MTree) -> Option<MTree> {
            if node.is_leaf() {
                if *pos == 0 {
                    return Some(t.clone());
                }
                *pos -= 1;
                return None;
            }
            for (i, c) in node.children().iter().enumerate() {
                if let Some(new) = go(c, pos, t) {
                    let mut ch = node.children().to_vec();
                    ch[i] = new;
                    return Some(MTree::graft_unchecked(ch));
                }
            }
            None
        }
        let mut p = pos;
        go(self, &mut p, t).expect("leaf position within range")
    }
}

impl PartialEq for MTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.arity() == other.arity() && self.key() == other.key())
    }
}

impl Eq for MTree {}

impl Ord for MTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(other.key())
            .then(self.arity().cmp(&other.arity()))
    }
}

impl PartialOrd for MTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for MTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.arity().hash(state);
        self.key().hash(state);
    }
}

impl fmt::Display for MTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl fmt::Debug for MTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MTree[{}]{}", self.arity(), self.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3(s: &str) -> MTree {
        MTree::parse(s, 3).unwrap()
    }

    #[test]
    fn graft_examples() {
        let l = MTree::leaf(3);
        let c = MTree::corolla(3);
        assert_eq!(
            MTree::graft(vec![l.clone(), c, l.clone()]).unwrap().key(),
            "(. (. . .) .)"
        );
        assert_eq!(
            MTree::graft(vec![l.clone(), l.clone(), l]).unwrap().key(),
            "(. . .)"
        );
        assert_eq!(MTree::corolla(4).key(), "(. . . .)");
    }

    #[test]
    fn graft_errors() {
        let l = MTree::leaf(3);
        assert_eq!(
            MTree::graft(vec![l.clone(), l.clone()]),
            Err(TreeError::WrongChildCount {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            MTree::graft(vec![l.clone(), MTree::leaf(2), l]),
            Err(TreeError::ArityMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn involution_examples() {
        assert_eq!(t3("((. . .) . .)").involution(), t3("(. . (. . .))"));
        assert_eq!(MTree::leaf(3).involution(), MTree::leaf(3));
        assert_eq!(t3("(. (. . .) .)").involution(), t3("(. (. . .) .)"));
    }

    #[test]
    fn degree_and_leaves() {
        let t = t3("((. . .) . (. . (. . .)))");
        assert_eq!(t.degree(), 4);
        assert_eq!(t.leaf_count(), 9);
    }

    #[test]
    fn replace_leaf_positions() {
        let c = MTree::corolla(3);
        assert_eq!(c.replace_leaf(0, &c), t3("((. . .) . .)"));
        assert_eq!(c.replace_leaf(2, &c), t3("(. . (. . .))"));
    }
}
