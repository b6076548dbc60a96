use proptest::prelude::*;

use opcalc::exactlin::{LinComb, Rational};
use opcalc::genseries::PowerSeries;
use opcalc::kgonal::{self, GonalMonomial};
use opcalc::mdend::{dend_involution, dend_mul, dend_opposite, DendOp};
use opcalc::mtetra::{self, TetraMonomial};
use opcalc::trees::{enumerate, MTree};

/// A tree of arity `m` and degree `1..=max`, chosen by index.
fn tree(m: usize, max: usize) -> impl Strategy<Value = MTree> {
    (1..=max, any::<prop::sample::Index>()).prop_map(move |(n, i)| {
        let all = enumerate(m, n);
        all[i.index(all.len())].clone()
    })
}

fn op(m: usize) -> impl Strategy<Value = DendOp> {
    prop::sample::select(
        DendOp::generators(m)
            .into_iter()
            .chain([DendOp::Star])
            .collect::<Vec<_>>(),
    )
}

fn mul(m: usize, op: DendOp, x: &LinComb<MTree>, y: &LinComb<MTree>) -> LinComb<MTree> {
    dend_mul(m, op, x, y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative(m in 2usize..=4, seed in any::<[prop::sample::Index; 3]>()) {
        let pick = |i: &prop::sample::Index| {
            let all = enumerate(m, 1 + i.index(3));
            LinComb::basis(all[i.index(all.len())].clone())
        };
        let (x, y, z) = (pick(&seed[0]), pick(&seed[1]), pick(&seed[2]));
        let l = mul(m, DendOp::Star, &mul(m, DendOp::Star, &x, &y), &z);
        let r = mul(m, DendOp::Star, &x, &mul(m, DendOp::Star, &y, &z));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn involution_reverses_products((m, x, y, o) in (2usize..=5).prop_flat_map(|m| (Just(m), tree(m, 3), tree(m, 3), op(m)))) {
        let (x, y) = (LinComb::basis(x), LinComb::basis(y));
        let lhs = dend_involution(&mul(m, o, &x, &y));
        let rhs = mul(m, dend_opposite(m, o), &dend_involution(&y), &dend_involution(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tree_keys_round_trip((m, t) in (2usize..=4).prop_flat_map(|m| (Just(m), tree(m, 4)))) {
        prop_assert_eq!(MTree::parse(t.key(), m).unwrap(), t.clone());
        prop_assert_eq!(t.involution().involution(), t.clone());
        prop_assert_eq!(t.involution().degree(), t.degree());
    }

    #[test]
    fn product_degrees_add((m, x, y, o) in (2usize..=4).prop_flat_map(|m| (Just(m), tree(m, 3), tree(m, 3), op(m)))) {
        let p = mul(m, o, &LinComb::basis(x.clone()), &LinComb::basis(y.clone()));
        prop_assert!(!p.is_empty());
        prop_assert!(p.keys().all(|t| t.degree() == x.degree() + y.degree()));
    }

    #[test]
    fn tetra_monomials_round_trip(m in 3usize..=6, n in 1usize..=6, i in any::<prop::sample::Index>()) {
        let all = mtetra::monomials(m, n);
        let t = &all[i.index(all.len())];
        prop_assert_eq!(&TetraMonomial::parse(&t.to_string()).unwrap(), t);
        prop_assert_eq!(&TetraMonomial::from_polynomial(&t.to_polynomial()).unwrap(), t);
        prop_assert_eq!(t.to_polynomial().total_degree(), n - 1);
    }

    #[test]
    fn gonal_monomials_round_trip(k in 3usize..=7, n in 1usize..=6, i in any::<prop::sample::Index>()) {
        let all = kgonal::monomials(k, n);
        let g = &all[i.index(all.len())];
        prop_assert_eq!(&GonalMonomial::parse(&g.to_string(), k).unwrap(), g);
        prop_assert_eq!(g.degree(), n);
    }

    #[test]
    fn compositional_inverse(c in prop::collection::vec(-4i64..=4, 6), lead in prop::sample::select(vec![-2i64, -1, 1, 3])) {
        let mut coeffs = vec![0, lead];
        coeffs.extend(c);
        let f = PowerSeries::from_i64(&coeffs);
        let g = f.comp_inverse().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), PowerSeries::x(f.order()));
        prop_assert_eq!(g.compose(&f).unwrap(), PowerSeries::x(f.order()));
        prop_assert_eq!(g.coeff(1), Rational::new(1, lead));
    }
}
