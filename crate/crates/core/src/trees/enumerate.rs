use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigUint;
use num_integer::binomial;

use super::MTree;

type Cache = Mutex<HashMap<(usize, usize), Arc<Vec<MTree>>>>;

static CACHE: LazyLock<Cache> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Number of arity-`m` trees of degree `n`: `(mn)! / (n! ((m−1)n+1)!)`,
/// computed as `C(mn, n) / ((m−1)n + 1)`.
pub fn count(m: usize, n: usize) -> BigUint {
    binomial(BigUint::from(m * n), BigUint::from(n)) / BigUint::from((m - 1) * n + 1)
}

/// All arity-`m` trees of degree `n`, sorted by key.
///
/// Built from the compositions of `n − 1` into `m` child degrees and
/// memoized per `(m, n)`.
pub fn enumerate(m: usize, n: usize) -> Arc<Vec<MTree>> {
    assert!(m >= 2, "arity must be at least 2");
    if let Some(v) = CACHE.lock().unwrap().get(&(m, n)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(MTree::leaf(m));
    } else {
        let smaller: Vec<Arc<Vec<MTree>>> = (0..n).map(|d| enumerate(m, d)).collect();
        let mut parts = vec![0usize; m];
        compositions(n - 1, 0, &mut parts, &mut |parts| {
            let mut acc: Vec<Vec<MTree>> = vec![Vec::with_capacity(m)];
            for &d in parts {
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        smaller[d].iter().map(move |t| {
                            let mut p = prefix.clone();
                            p.push(t.clone());
                            p
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(MTree::graft_unchecked));
        });
    }
    out.sort();
    let v = Arc::new(out);
    CACHE.lock().unwrap().entry((m, n)).or_insert(v).clone()
}

fn compositions(rest: usize, i: usize, parts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i + 1 == parts.len() {
        parts[i] = rest;
        f(parts);
        return;
    }
    for d in 0..=rest {
        parts[i] = d;
        compositions(rest - d, i + 1, parts, f);
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    /// Independent generator: every degree-n tree arises from a degree n−1
    /// tree by replacing one leaf with the corolla.
    fn brute_force(m: usize, n: usize) -> BTreeSet<MTree> {
        let mut level = BTreeSet::from([MTree::leaf(m)]);
        let c = MTree::corolla(m);
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for t in &level {
                for p in 0..t.leaf_count() {
                    next.insert(t.replace_leaf(p, &c));
                }
            }
            level = next;
        }
        level
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(3, 2).len(), 3);
        assert_eq!(enumerate(3, 3).len(), 12);
        assert_eq!(enumerate(2, 4).len(), 14);
        assert_eq!(count(2, 3), BigUint::from(5u32));
        assert_eq!(count(3, 0), BigUint::from(1u32));
        assert_eq!(count(3, 4), BigUint::from(55u32));
    }

    #[test]
    fn matches_brute_force_and_closed_form() {
        for m in 2..=5 {
            for n in 0..=5 {
                let e = enumerate(m, n);
                let b = brute_force(m, n);
                assert_eq!(e.iter().cloned().collect::<BTreeSet<_>>(), b, "m={m} n={n}");
                assert_eq!(BigUint::from(e.len()), count(m, n));
                assert!(e.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn involution_permutes_each_degree() {
        for m in 2..=4 {
            for n in 0..=4 {
                let e = enumerate(m, n);
                let img: BTreeSet<MTree> = e.iter().map(MTree::involution).collect();
                assert_eq!(img.len(), e.len());
                assert!(e.iter().all(|t| t.involution().involution() == *t));
                assert!(img.iter().all(|t| t.degree() == n));
            }
        }
    }
}
