use opcalc::chainhom::*;
use opcalc::dualops::PerpOp;
use opcalc::mdend::DendOp;
use opcalc::mtetra::TetraMonomial;
use opcalc::trees::MTree;

fn tree(s: &str) -> MTree {
    MTree::parse(s, 3).unwrap()
}

fn dend_case(k: usize, j: usize) -> (String, String) {
    let c = chain(
        DendChainIndex::new(3, k, j).unwrap(),
        FormalWord::letters(3),
    );
    let f = |i, c: &Chain<_, _>| face(&DendComplex, &FormalWords, i, c).unwrap();
    (f(1, &f(2, &c)).to_string(), f(1, &f(1, &c)).to_string())
}

#[test]
fn dend_symbols() {
    let idx = |n, k, j| DendChainIndex::new(n, k, j).unwrap();
    assert_eq!(dend_symbol(1, &idx(2, 0, 1)).unwrap(), DendOp::Dot(2));
    assert_eq!(dend_symbol(1, &idx(3, 0, 2)).unwrap(), DendOp::Left);
    assert_eq!(dend_symbol(2, &idx(3, 1, 1)).unwrap(), DendOp::Left);
    assert!(dend_symbol(3, &idx(3, 1, 1)).is_err());
    assert!(DendChainIndex::new(2, 2, 1).is_err());
    assert_eq!(DendChainIndex::all(4).len(), 15);
}

#[test]
fn dend_faces() {
    let c = chain(
        DendChainIndex::new(3, 0, 2).unwrap(),
        FormalWord::letters(3),
    );
    assert_eq!(
        face(&DendComplex, &FormalWords, 2, &c).unwrap().to_string(),
        "[(0,1); x ⊗ y ≻ z]"
    );
    let c = chain(
        DendChainIndex::new(3, 2, 2).unwrap(),
        FormalWord::letters(3),
    );
    assert_eq!(
        face(&DendComplex, &FormalWords, 1, &c).unwrap().to_string(),
        "[(1,1); x ⋆ y ⊗ z]"
    );
}

#[test]
fn dend_low_degree_cases() {
    let cases = [
        ((0, 0), "x ≺ (y ⋆ z)", "(x ≺ y) ≺ z"),
        ((1, 1), "x ≻ (y ≺ z)", "(x ≻ y) ≺ z"),
        ((2, 2), "x ≻ (y ≻ z)", "(x ⋆ y) ≻ z"),
        ((0, 2), "x •2 (y ≻ z)", "(x ≺ y) •2 z"),
        ((1, 2), "x ≻ (y •2 z)", "(x ≻ y) •2 z"),
        ((0, 1), "x •2 (y ≺ z)", "(x •2 y) ≺ z"),
    ];
    for ((k, j), a, b) in cases {
        let (l, r) = dend_case(k, j);
        assert_eq!(l, format!("[(0,0); {a}]"), "({k},{j})");
        assert_eq!(r, format!("[(0,0); {b}]"), "({k},{j})");
    }
}

#[test]
fn colorings() {
    let c = color_tree(&tree("((. . (. . .)) . .)")).unwrap();
    assert_eq!(c.ops, vec![(2, PerpOp::Dashv), (4, PerpOp::Vdash)]);
    assert_eq!(c.to_string(), "[((. . (. . .)) . .), (2;⊣), (4;⊢)]");
    let c = color_tree(&tree("(. (. . (. . .)) .)")).unwrap();
    assert_eq!(c.ops, vec![(2, PerpOp::Perp(2)), (4, PerpOp::Perp(2))]);
    assert!(color_tree(&MTree::corolla(3)).unwrap().ops.is_empty());
    assert!(color_tree(&MTree::leaf(3)).is_err());
    for m in 3..=5 {
        for n in 1..=4 {
            for t in opcalc::trees::enumerate(m, n).iter() {
                assert_eq!(color_tree(t).unwrap().ops.len(), n - 1);
            }
        }
    }
}

#[test]
fn worked_deletions() {
    let cx = TetraComplex { arity: 3 };
    let d = |j, s: &str| {
        cx.face_index(j, &tree(s))
            .map(|(t, _)| color_tree(&t).unwrap().to_string())
    };
    assert_eq!(
        d(2, "((. . (. . .)) . .)").as_deref(),
        Some("[((. . .) . .), (2;⊢)]")
    );
    assert_eq!(d(1, "(. (. . (. . .)) .)"), None);
    assert_eq!(
        d(2, "(. (. . (. . .)) .)").as_deref(),
        Some("[(. (. . .) .), (2;⊥2)]")
    );
    assert_eq!(d(1, "(. . (. (. . .) .))"), None);
    assert_eq!(
        d(2, "(. . (. (. . .) .))").as_deref(),
        Some("[(. . (. . .)), (2;⊣)]")
    );
}

#[test]
fn triangular_low_degree_cases() {
    let cases = [
        ("(. . (. . (. . .)))", "x ⊣ (y ⊣ z)", "(x ⊣ y) ⊣ z"),
        ("(. . ((. . .) . .))", "x ⊣ (y ⊢ z)", "(x ⊣ y) ⊣ z"),
        ("((. . .) . (. . .))", "x ⊢ (y ⊣ z)", "(x ⊢ y) ⊣ z"),
        ("((. . (. . .)) . .)", "x ⊢ (y ⊢ z)", "(x ⊣ y) ⊢ z"),
        ("(((. . .) . .) . .)", "x ⊢ (y ⊢ z)", "(x ⊢ y) ⊢ z"),
        ("(. (. (. . .) .) .)", "x ⊥2 (y ⊢ z)", "(x ⊣ y) ⊥2 z"),
        ("((. . .) (. . .) .)", "x ⊢ (y ⊥2 z)", "(x ⊢ y) ⊥2 z"),
        ("(. (. . .) (. . .))", "x ⊥2 (y ⊣ z)", "(x ⊥2 y) ⊣ z"),
        ("(. ((. . .) . .) .)", "", "(x ⊥2 y) ⊥2 z"),
        ("(. (. . (. . .)) .)", "x ⊥2 (y ⊥2 z)", ""),
        ("((. (. . .) .) . .)", "", "(x ⊥2 y) ⊢ z"),
        ("(. . (. (. . .) .))", "x ⊣ (y ⊥2 z)", ""),
    ];
    let cx = TetraComplex { arity: 3 };
    let show = |s: &str| {
        if s.is_empty() {
            "0".to_string()
        } else {
            format!("[(. . .); {s}]")
        }
    };
    for (t, a, b) in cases {
        let c = chain(tree(t), FormalWord::letters(3));
        let f = |i, c: &Chain<_, _>| face(&cx, &FormalWords, i, c).unwrap();
        assert_eq!(f(1, &f(2, &c)).to_string(), show(a), "{t}");
        assert_eq!(f(1, &f(1, &c)).to_string(), show(b), "{t}");
    }
}

#[test]
fn single_face_in_degree_two() {
    let cx = TetraComplex { arity: 3 };
    let alg = FreeTetraArgs { arity: 3 };
    for t in cx.indices(2) {
        let c = chain(t, vec![TetraMonomial::chi(3); 2]);
        assert_eq!(
            boundary(&cx, &alg, &c).unwrap(),
            face(&cx, &alg, 1, &c).unwrap()
        );
    }
}

#[test]
fn faces_reject_bad_input() {
    let cx = TetraComplex { arity: 3 };
    let c = chain(tree("((. . .) . .)"), vec![TetraMonomial::chi(3); 2]);
    assert!(face(&cx, &FreeTetraArgs { arity: 3 }, 2, &c).is_err());
    let c = chain(tree("((. . .) . .)"), vec![TetraMonomial::chi(3); 3]);
    assert!(face(&cx, &FreeTetraArgs { arity: 3 }, 1, &c).is_err());
}

#[test]
fn squares_vanish() {
    let r = check_complex(&DendComplex, &FreeDendArgs { arity: 3 }, 5, |n| {
        vec![vec![MTree::corolla(3); n]]
    })
    .unwrap();
    assert!(r.passed(), "{r}");
    let r = check_complex(&DendComplex, &FreeDendArgs { arity: 3 }, 4, |n| {
        arg_tuples(&FreeDendArgs { arity: 3 }, n, n + 1)
    })
    .unwrap();
    assert!(r.passed(), "{r}");
    for m in 3..=4 {
        let cx = TetraComplex { arity: m };
        let words = TetraWordArgs { arity: m };
        let r = check_complex(&cx, &words, 5, |n| vec![words.letters(n)]).unwrap();
        assert!(r.passed(), "{r}");
        let alg = FreeTetraArgs { arity: m };
        let r = check_complex(&cx, &alg, 4, |n| arg_tuples(&alg, n, n + 1)).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn distinct_formal_letters_commute_when_far_apart() {
    let cx = TetraComplex { arity: 3 };
    for t in cx.indices(4) {
        let c = chain(t, FormalWord::letters(4));
        let r = simplicial_defect(&cx, &FormalWords, 1, 3, &c).unwrap();
        assert!(r.is_zero());
    }
}

#[test]
fn homology_of_free_triangular_algebra() {
    let rows = homology_ranks(
        &TetraComplex { arity: 3 },
        &FreeTetraArgs { arity: 3 },
        3,
        4,
    )
    .unwrap();
    assert_eq!(rows[0].dim_homology, 1);
    for r in &rows {
        assert_eq!(r.dim_homology, r.dim_cohomology);
    }
    assert!(homology_ranks(
        &TetraComplex { arity: 3 },
        &FreeTetraArgs { arity: 3 },
        5,
        4
    )
    .is_err());
}

#[test]
fn zero_algebra_has_no_boundaries() {
    for pool in 1..=3 {
        let rows = homology_ranks(&TetraComplex { arity: 3 }, &ZeroArgs { pool }, 2, 2).unwrap();
        assert_eq!(rows[1].dim_homology, 3 * pool * pool);
        assert_eq!(rows[1].dim_chains, rows[1].dim_homology);
    }
}
