use proptest::prelude::*;
use proptest::sample::select;

use quandlekit::arith;
use quandlekit::error::ReprError;
use quandlekit::gelfand::{is_gelfand_pair, is_multiplicity_free, symmetric_orbital_shortcut};
use quandlekit::inner::{inner_group, presentation, translations_share_cycle_type};
use quandlekit::io::{bundled_order12, parse_table, write_table, Convention, TableFormat};
use quandlekit::quandle::{affine_on_group, affine_quandle, AbelianGroup, AffineSpec};
use quandlekit::repr::burnside_rank;
use quandlekit::tensor::tensor_square;
use quandlekit::{CayleyQuandle, Permutation, PermutationGroup};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn connected_spec(max: u64) -> impl Strategy<Value = AffineSpec> {
    select(AffineSpec::connected_specs(max))
}

fn any_spec(max: u64) -> impl Strategy<Value = AffineSpec> {
    let specs: Vec<AffineSpec> = (1..=max)
        .flat_map(|m| arith::units(m).into_iter().map(move |t| AffineSpec::new(m, t as i64).unwrap()))
        .collect();
    select(specs)
}

fn abelian_affine() -> impl Strategy<Value = CayleyQuandle> {
    let groups: Vec<AbelianGroup> = (2..=12).flat_map(AbelianGroup::all_of_order).collect();
    select(groups).prop_flat_map(|a| {
        let autos = a.automorphisms();
        select(autos).prop_map(move |f| affine_on_group(&a, &f))
    })
}

fn relabeled(q: CayleyQuandle) -> impl Strategy<Value = CayleyQuandle> {
    let n = q.order();
    perm(n).prop_map(move |s| q.relabel(&s))
}

fn sample_quandle() -> impl Strategy<Value = CayleyQuandle> {
    prop_oneof![
        any_spec(15).prop_map(|s| affine_quandle(&s)),
        abelian_affine(),
        Just(bundled_order12()),
    ]
    .prop_flat_map(relabeled)
}

fn rank(g: &PermutationGroup) -> u64 {
    match burnside_rank(g) {
        Ok(r) | Err(ReprError::NotTransitive { rank: r }) => r,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_group_laws(a in perm(7), b in perm(7), c in perm(7), k in -20i64..20) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        prop_assert_eq!(a.pow(k).then(&a.pow(-k)), Permutation::identity(7));
        let len: usize = a.cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(len, 7);
    }

    #[test]
    fn orbit_stabilizer_and_class_equation(a in perm(6), b in perm(6)) {
        let g = PermutationGroup::generate(6, vec![a, b]).unwrap();
        for x in 0..6 {
            prop_assert_eq!(g.orbit(x).len() * g.stabilizer(x).order(), g.order());
        }
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.sizes().iter().sum::<usize>(), g.order());
        for s in classes.sizes() {
            prop_assert_eq!(g.order() % s, 0);
        }
    }

    #[test]
    fn left_division_inverts(q in sample_quandle(), x in 0usize..64, y in 0usize..64) {
        let (x, y) = (x % q.order(), y % q.order());
        let z = q.left_division(x, y).unwrap();
        prop_assert_eq!(q.op(z, y), x);
        prop_assert_eq!(q.left_division(q.op(x, y), y).unwrap(), x);
    }

    #[test]
    fn right_translations_are_automorphisms(q in sample_quandle(), y in 0usize..64) {
        let r = q.right_translation(y % q.order()).unwrap();
        for a in 0..q.order() {
            for b in 0..q.order() {
                prop_assert_eq!(r.apply(q.op(a, b)), q.op(r.apply(a), r.apply(b)));
            }
        }
    }

    #[test]
    fn connected_translations_share_cycle_type(q in sample_quandle()) {
        if inner_group(&q).unwrap().is_transitive() {
            prop_assert!(translations_share_cycle_type(&q));
        }
    }

    #[test]
    fn burnside_rank_counts_tensor_classes(q in sample_quandle()) {
        let g = inner_group(&q).unwrap();
        prop_assert_eq!(rank(&g), tensor_square(&q).len() as u64);
    }

    #[test]
    fn multiplicity_free_tests_agree(q in sample_quandle()) {
        let g = inner_group(&q).unwrap();
        if g.is_transitive() {
            let mf = is_multiplicity_free(&q).unwrap().multiplicity_free;
            prop_assert_eq!(mf, is_gelfand_pair(&g, &g.stabilizer(0)).unwrap());
            if symmetric_orbital_shortcut(&q) {
                prop_assert!(mf);
            }
        }
    }

    #[test]
    fn base_point_independence(q in sample_quandle(), e in 0usize..64) {
        let g = inner_group(&q).unwrap();
        if g.is_transitive() {
            let e = e % q.order();
            prop_assert_eq!(
                is_gelfand_pair(&g, &g.stabilizer(e)).unwrap(),
                is_gelfand_pair(&g, &g.stabilizer(0)).unwrap()
            );
        }
    }

    #[test]
    fn tables_round_trip(q in sample_quandle(), one_indexed in any::<bool>(), left in any::<bool>()) {
        let f = TableFormat {
            one_indexed,
            convention: if left { Convention::Left } else { Convention::Right },
        };
        prop_assert_eq!(parse_table(&write_table(&q, f), f).unwrap(), q);
    }

    #[test]
    fn normal_form_round_trip(s in connected_spec(21), idx in any::<prop::sample::Index>()) {
        let pres = presentation(&s).unwrap();
        let g = inner_group(&affine_quandle(&s)).unwrap();
        let e = g.element(idx.index(g.order()));
        let nf = pres.normal_form(e).unwrap();
        prop_assert_eq!(&pres.element(nf), e);
    }

    #[test]
    fn invariants_survive_relabeling(s in connected_spec(15), sigma in perm(15)) {
        let q = affine_quandle(&s);
        let n = q.order();
        let sigma = Permutation::from_fn(n, |x| {
            let mut img: Vec<usize> = sigma.images().iter().copied().filter(|&v| v < n).collect();
            img.truncate(n);
            img[x]
        }).unwrap();
        let r = q.relabel(&sigma);
        prop_assert_eq!(inner_group(&r).unwrap().order(), inner_group(&q).unwrap().order());
        prop_assert_eq!(tensor_square(&r).len(), tensor_square(&q).len());
    }
}
