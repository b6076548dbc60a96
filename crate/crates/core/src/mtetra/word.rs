use std::fmt;

use super::{TetraError, TetraMonomial};
use crate::dualops::PerpOp;

/// A basis word `ω_1 ⊗ [v ⊗ ω_2 ⊗ … ⊗ ω_{m−1}] ⊗ ω_m` of the free
/// m-tetrahedral algebra over a space with basis letters `0, 1, 2, …`.
///
/// Products follow the tensor formulas letter by letter, independently of
/// the exponent rules on [`TetraMonomial`]; the two are compared in tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TetraWord {
    pub left: Vec<u32>,
    pub center: u32,
    /// `ω_2, …, ω_{m−1}`
    pub mids: Vec<Vec<u32>>,
    pub right: Vec<u32>,
}

impl TetraWord {
    /// The generator `letter` in arity `m`.
    pub fn letter(m: usize, letter: u32) -> Self {
        TetraWord {
            left: Vec::new(),
            center: letter,
            mids: vec![Vec::new(); m - 2],
            right: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.mids.len() + 2
    }

    pub fn degree(&self) -> usize {
        1 + self.left.len() + self.right.len() + self.mids.iter().map(Vec::len).sum::<usize>()
    }

    /// Word lengths, forgetting the letters.
    pub fn shape(&self) -> TetraMonomial {
        let mut e = vec![self.left.len() as u32];
        e.extend(self.mids.iter().map(|w| w.len() as u32));
        e.push(self.right.len() as u32);
        TetraMonomial { exps: e }
    }

    /// A word of the given shape written with letter 0 only.
    pub fn from_shape(t: &TetraMonomial) -> Self {
        let m = t.arity();
        let w = |e: u32| vec![0u32; e as usize];
        TetraWord {
            left: w(t.exps[0]),
            center: 0,
            mids: t.exps[1..m - 1].iter().map(|&e| w(e)).collect(),
            right: w(t.exps[m - 1]),
        }
    }

    /// Product of two words, `None` when a projection kills it.
    pub fn mul(&self, op: PerpOp, y: &TetraWord) -> Result<Option<TetraWord>, TetraError> {
        let x = self;
        let m = x.arity();
        if y.arity() != m {
            return Err(TetraError::ArityMismatch {
                expected: m,
                found: y.arity(),
            });
        }
        let empty = |ws: &[Vec<u32>]| ws.iter().all(Vec::is_empty);
        Ok(match op {
            // ψ(ω'_2, …, ω'_{m−1}) ω_1 ⊗ [v ⊗ ω_2 ⊗ …] ⊗ ω_m ω'_1 v' ω'_m
            PerpOp::Dashv => empty(&y.mids).then(|| {
                let mut r = x.clone();
                r.right.extend_from_slice(&y.left);
                r.right.push(y.center);
                r.right.extend_from_slice(&y.right);
                r
            }),
            // ψ(ω_2, …, ω_{m−1}) ω_1 v ω_m ω'_1 ⊗ [v' ⊗ ω'_2 ⊗ …] ⊗ ω'_m
            PerpOp::Vdash => empty(&x.mids).then(|| {
                let mut r = y.clone();
                let mut l = x.left.clone();
                l.push(x.center);
                l.extend_from_slice(&x.right);
                l.extend_from_slice(&y.left);
                r.left = l;
                r
            }),
            // Ψ(ω_i, …, ω_{m−1}, ω'_2, …, ω'_i)
            //   ω_1 ⊗ [v ⊗ ω_2 ⊗ … ⊗ ω_{i−1} ⊗ ω_m ω'_1 v' ⊗ ω'_{i+1} ⊗ …] ⊗ ω'_m
            PerpOp::Perp(i) => {
                if !(2..m).contains(&i) {
                    return Err(TetraError::PerpOutOfRange { index: i, arity: m });
                }
                (empty(&x.mids[i - 2..]) && empty(&y.mids[..i - 1])).then(|| {
                    let mut slot = x.right.clone();
                    slot.extend_from_slice(&y.left);
                    slot.push(y.center);
                    let mut mids = x.mids[..i - 2].to_vec();
                    mids.push(slot);
                    mids.extend_from_slice(&y.mids[i - 1..]);
                    TetraWord {
                        left: x.left.clone(),
                        center: x.center,
                        mids,
                        right: y.right.clone(),
                    }
                })
            }
        })
    }
}

fn letters(w: &[u32]) -> String {
    w.iter()
        .map(|&l| letter_name(l))
        .collect::<Vec<_>>()
        .join("")
}

/// `a`–`z`, then `g26`, `g27`, …
pub fn letter_name(l: u32) -> String {
    if l < 26 {
        char::from(b'a' + l as u8).to_string()
    } else {
        format!("g{l}")
    }
}

impl fmt::Display for TetraWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mids: Vec<String> = self.mids.iter().map(|w| letters(w)).collect();
        write!(
            f,
            "{}[{}|{}]{}",
            letters(&self.left),
            letter_name(self.center),
            mids.join("|"),
            letters(&self.right)
        )
    }
}
