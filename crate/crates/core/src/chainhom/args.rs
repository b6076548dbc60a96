use std::fmt;

use crate::dualops::PerpOp;
use crate::exactlin::LinComb;
use crate::mdend::{tree_mul, DendOp};
use crate::mtetra::{self, tetra_mul_monomial, TetraMonomial, TetraWord};
use crate::trees::{enumerate, MTree};

/// An algebra supplying chain arguments, graded by a weight `≥ 1`.
pub trait ArgAlgebra<Op> {
    type Basis: Ord + Clone + fmt::Display;

    fn fuse(&self, op: Op, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    /// Basis elements of weight `w ≥ 1`.
    fn basis(&self, w: usize) -> Vec<Self::Basis>;
}

pub trait OpSymbol: Copy {
    fn op_symbol(self) -> String;
}

impl OpSymbol for DendOp {
    fn op_symbol(self) -> String {
        self.symbol()
    }
}

impl OpSymbol for PerpOp {
    fn op_symbol(self) -> String {
        self.symbol()
    }
}

/// A bracketed word in letters, such as `x ≺ (y ⋆ z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalWord {
    text: String,
    atomic: bool,
}

impl FormalWord {
    pub fn letter(name: &str) -> Self {
        FormalWord {
            text: name.to_string(),
            atomic: true,
        }
    }

    /// `x, y, z, u, v, w`, then `x7, x8, …`.
    pub fn letters(n: usize) -> Vec<FormalWord> {
        const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        (0..n)
            .map(|i| match NAMES.get(i) {
                Some(s) => FormalWord::letter(s),
                None => FormalWord::letter(&format!("x{}", i + 1)),
            })
            .collect()
    }

    fn operand(&self) -> String {
        if self.atomic {
            self.text.clone()
        } else {
            format!("({})", self.text)
        }
    }
}

impl fmt::Display for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// The free magma: products are recorded, never evaluated.
#[derive(Debug, Clone, Copy, Default)]
pub struct FormalWords;

impl<Op: OpSymbol> ArgAlgebra<Op> for FormalWords {
    type Basis = FormalWord;

    fn fuse(&self, op: Op, a: &FormalWord, b: &FormalWord) -> LinComb<FormalWord> {
        LinComb::basis(FormalWord {
            text: format!("{} {} {}", a.operand(), op.op_symbol(), b.operand()),
            atomic: false,
        })
    }

    fn basis(&self, w: usize) -> Vec<FormalWord> {
        if w == 1 {
            vec![FormalWord::letter("x")]
        } else {
            Vec::new()
        }
    }
}

/// The free m-dendriform algebra on one generator.
#[derive(Debug, Clone, Copy)]
pub struct FreeDendArgs {
    pub arity: usize,
}

impl ArgAlgebra<DendOp> for FreeDendArgs {
    type Basis = MTree;

    fn fuse(&self, op: DendOp, a: &MTree, b: &MTree) -> LinComb<MTree> {
        tree_mul(op, a, b)
    }

    fn basis(&self, w: usize) -> Vec<MTree> {
        enumerate(self.arity, w).to_vec()
    }
}

/// The free m-tetrahedral algebra on one generator.
#[derive(Debug, Clone, Copy)]
pub struct FreeTetraArgs {
    pub arity: usize,
}

impl ArgAlgebra<PerpOp> for FreeTetraArgs {
    type Basis = TetraMonomial;

    fn fuse(&self, op: PerpOp, a: &TetraMonomial, b: &TetraMonomial) -> LinComb<TetraMonomial> {
        tetra_mul_monomial(op, a, b)
            .expect("operands and operation of the algebra's arity")
            .map_or_else(LinComb::zero, LinComb::basis)
    }

    fn basis(&self, w: usize) -> Vec<TetraMonomial> {
        mtetra::monomials(self.arity, w)
    }
}

/// The free m-tetrahedral algebra on many generators, as words. Distinct
/// letters make every argument position visible in the result.
#[derive(Debug, Clone, Copy)]
pub struct TetraWordArgs {
    pub arity: usize,
}

impl TetraWordArgs {
    /// The letters `a, b, c, …` as degree-one words.
    pub fn letters(&self, n: usize) -> Vec<TetraWord> {
        (0..n as u32)
            .map(|l| TetraWord::letter(self.arity, l))
            .collect()
    }
}

impl ArgAlgebra<PerpOp> for TetraWordArgs {
    type Basis = TetraWord;

    fn fuse(&self, op: PerpOp, a: &TetraWord, b: &TetraWord) -> LinComb<TetraWord> {
        a.mul(op, b)
            .expect("operands and operation of the algebra's arity")
            .map_or_else(LinComb::zero, LinComb::basis)
    }

    fn basis(&self, w: usize) -> Vec<TetraWord> {
        if w == 1 {
            vec![TetraWord::letter(self.arity, 0)]
        } else {
            Vec::new()
        }
    }
}

/// Basis symbol `e0, e1, …` of a [`ZeroArgs`] algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PoolSymbol(pub usize);

impl fmt::Display for PoolSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A space of dimension `pool` in weight one with every product zero.
#[derive(Debug, Clone, Copy)]
pub struct ZeroArgs {
    pub pool: usize,
}

impl<Op> ArgAlgebra<Op> for ZeroArgs {
    type Basis = PoolSymbol;

    fn fuse(&self, _: Op, _: &PoolSymbol, _: &PoolSymbol) -> LinComb<PoolSymbol> {
        LinComb::zero()
    }

    fn basis(&self, w: usize) -> Vec<PoolSymbol> {
        if w == 1 {
            (0..self.pool).map(PoolSymbol).collect()
        } else {
            Vec::new()
        }
    }
}
