use std::fmt;

use super::{GonalError, GonalMonomial};
use crate::dualops::PerpOp;
use crate::mtetra::letter_name;

/// A basis word `ω_1 ⊗ [v ⊗ w ⊗ ω_2] ⊗ ω_3` of the free k-gonal algebra
/// over a space with letters `0, 1, 2, …`. `slot` is `w`: `None` for the
/// unit, `Some((p, letter))` for a letter in the `p`-th extra summand.
///
/// Products apply the tensor formulas with the first-letter and
/// remainder projections, independently of [`GonalMonomial`] arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GonalWord {
    pub k: usize,
    pub left: Vec<u32>,
    pub center: u32,
    pub slot: Option<(usize, u32)>,
    pub mid: Vec<u32>,
    pub right: Vec<u32>,
}

impl GonalWord {
    pub fn letter(k: usize, letter: u32) -> Self {
        GonalWord {
            k,
            left: Vec::new(),
            center: letter,
            slot: None,
            mid: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn shape(&self) -> GonalMonomial {
        GonalMonomial::new(
            self.k,
            self.left.len() as u32,
            self.slot.map(|(p, _)| p),
            self.mid.len() as u32,
            self.right.len() as u32,
        )
        .expect("word has a valid tag")
    }

    /// A word of the given shape written with letter 0 only.
    pub fn from_shape(t: &GonalMonomial) -> Self {
        let w = |e: u32| vec![0u32; e as usize];
        GonalWord {
            k: t.k(),
            left: w(t.a()),
            center: 0,
            slot: t.tag().map(|p| (p, 0)),
            mid: w(t.c()),
            right: w(t.d()),
        }
    }

    /// `ψ(w, ω_2)`: the word has the unit in its slot and nothing after.
    fn bare(&self) -> bool {
        self.slot.is_none() && self.mid.is_empty()
    }

    pub fn mul(&self, op: PerpOp, y: &GonalWord) -> Result<Option<GonalWord>, GonalError> {
        let x = self;
        let k = x.k;
        if y.k != k {
            return Err(GonalError::KMismatch {
                expected: k,
                found: y.k,
            });
        }
        Ok(match op {
            PerpOp::Dashv => y.bare().then(|| {
                let mut r = x.clone();
                r.right.extend_from_slice(&y.left);
                r.right.push(y.center);
                r.right.extend_from_slice(&y.right);
                r
            }),
            PerpOp::Vdash => x.bare().then(|| {
                let mut left = x.left.clone();
                left.push(x.center);
                left.extend_from_slice(&x.right);
                left.extend_from_slice(&y.left);
                GonalWord { left, ..y.clone() }
            }),
            PerpOp::Perp(i) => {
                if !(2..k).contains(&i) {
                    return Err(GonalError::PerpOutOfRange { index: i, k });
                }
                (x.bare() && y.bare()).then(|| {
                    // ω_3 ω'_1 v'
                    let mut joined = x.right.clone();
                    joined.extend_from_slice(&y.left);
                    joined.push(y.center);
                    let (slot, mid) = if i == 2 {
                        (None, joined)
                    } else {
                        (Some((i - 2, joined[0])), joined[1..].to_vec())
                    };
                    GonalWord {
                        k,
                        left: x.left.clone(),
                        center: x.center,
                        slot,
                        mid,
                        right: y.right.clone(),
                    }
                })
            }
        })
    }
}

impl fmt::Display for GonalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = |w: &[u32]| w.iter().map(|&l| letter_name(l)).collect::<String>();
        let slot = match self.slot {
            None => "1".to_string(),
            Some((p, l)) => format!("{}@{p}", letter_name(l)),
        };
        write!(
            f,
            "{}[{}|{}|{}]{}",
            letters(&self.left),
            letter_name(self.center),
            slot,
            letters(&self.mid),
            letters(&self.right)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgonal::{gonal_mul_monomial, monomials};

    #[test]
    fn tagged_rules_match_words() {
        for k in 3..=6 {
            for p in 1..=4 {
                for q in 1..=5 - p {
                    for a in monomials(k, p) {
                        for b in monomials(k, q) {
                            for op in PerpOp::all(k) {
                                let by_word = GonalWord::from_shape(&a)
                                    .mul(op, &GonalWord::from_shape(&b))
                                    .unwrap()
                                    .map(|w| w.shape());
                                assert_eq!(
                                    by_word,
                                    gonal_mul_monomial(op, &a, &b).unwrap(),
                                    "{a} {op} {b}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn first_letter_goes_to_the_slot() {
        let x = GonalWord::letter(5, 0);
        let y = GonalWord::letter(5, 1);
        let z = GonalWord::letter(5, 2);
        let xy = x.mul(PerpOp::Dashv, &y).unwrap().unwrap();
        let r = xy.mul(PerpOp::Perp(4), &z).unwrap().unwrap();
        assert_eq!(r.to_string(), "[a|b@2|c]");
        let r = xy.mul(PerpOp::Perp(2), &z).unwrap().unwrap();
        assert_eq!(r.to_string(), "[a|1|bc]");
    }
}
