mod common;

use std::collections::BTreeSet;

use cherecut_core::{
    charged_loading, diagonal_sets, lambda_set_in, node_position, split, sstd_generating_poly, subquotient_graded_dim,
    verify_index_bijection, verify_tableau_bijection, CutSet, CutSpec, DominancePoset, GradedPoly, Multipartition,
    Params, Position, Region, Residue,
};
use common::{random_cut, random_multipartition, random_params};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn points(lambda: &Multipartition, p: &Params) -> BTreeSet<(Position, Residue)> {
    charged_loading(lambda, p).charged_points().into_iter().map(|(x, r)| (x.clone(), r)).collect()
}

fn region_points(lambda: &Multipartition, cut: &CutSpec, p: &Params, keep: &[Region]) -> BTreeSet<(Position, Residue)> {
    let d = diagonal_sets(lambda, cut, p).unwrap();
    let mut out = BTreeSet::new();
    for (region, l) in [(Region::Left, &d.left), (Region::Diagonal, &d.diagonal), (Region::Right, &d.right)] {
        if keep.contains(&region) {
            out.extend(l.charged_points().into_iter().map(|(x, r)| (x.clone(), r)));
        }
    }
    out
}

/// `ν ∈ Λ` whenever `α ⊵ ν ⊵ β` for some `α, β ∈ Λ`, checked over the whole
/// poset.
fn convex(poset: &DominancePoset, set: &CutSet) -> bool {
    let inside: Vec<usize> = set.members.iter().map(|m| poset.index_of(m).unwrap()).collect();
    (0..poset.len()).all(|nu| {
        inside.contains(&nu) || !(inside.iter().any(|&a| poset.geq(a, nu)) && inside.iter().any(|&b| poset.geq(nu, b)))
    })
}

fn triple_loop_dim(set: &CutSet, p: &Params) -> GradedPoly {
    let mut total = GradedPoly::zero();
    for alpha in &set.members {
        for beta in &set.members {
            let pb = sstd_generating_poly(alpha, beta, p).unwrap();
            for gamma in &set.members {
                let pc = sstd_generating_poly(alpha, gamma, p).unwrap();
                total = &total + &(&pb * &pc);
            }
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn regions_partition_the_loading(seed in any::<u64>(), n in 0usize..=9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let lambda = random_multipartition(&mut rng, n, p.ell);
        let cut = random_cut(&mut rng, &lambda, &p);
        let d = diagonal_sets(&lambda, &cut, &p).unwrap();
        prop_assert_eq!(d.left.len() + d.diagonal.len() + d.right.len(), n);
        let all = [Region::Left, Region::Diagonal, Region::Right];
        prop_assert_eq!(region_points(&lambda, &cut, &p, &all), points(&lambda, &p));
    }

    #[test]
    fn strict_cuts_separate_rational_parts(seed in any::<u64>(), n in 0usize..=9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let lambda = random_multipartition(&mut rng, n, p.ell);
        let cut = random_cut(&mut rng, &lambda, &p);
        let a = cut.a().clone();
        let low = &a - num_rational::BigRational::from_integer(BigInt::from(p.ell));
        let d = diagonal_sets(&lambda, &cut, &p).unwrap();
        prop_assert!(d.left.entries().iter().all(|e| e.pos.base() < &low));
        prop_assert!(d.diagonal.entries().iter().all(|e| &low < e.pos.base() && e.pos.base() < &a));
        prop_assert!(d.right.entries().iter().all(|e| e.pos.base() > &a));
    }

    #[test]
    fn split_contains_and_is_minimal(seed in any::<u64>(), n in 0usize..=9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let lambda = random_multipartition(&mut rng, n, p.ell);
        let cut = random_cut(&mut rng, &lambda, &p);
        let s = split(&lambda, &cut, &p).unwrap();
        let left_side = region_points(&lambda, &cut, &p, &[Region::Left, Region::Diagonal]);
        let right_side = region_points(&lambda, &cut, &p, &[Region::Diagonal, Region::Right]);
        prop_assert!(points(&s.left, &p).is_superset(&left_side));
        prop_assert!(points(&s.right, &p).is_superset(&right_side));
        // Removing any removable node loses a required point.
        for node in s.left.removable_nodes() {
            prop_assert!(left_side.contains(&(node_position(node, &p), p.residue(node))));
        }
        for node in s.right.removable_nodes() {
            prop_assert!(right_side.contains(&(node_position(node, &p), p.residue(node))));
        }
    }

    #[test]
    fn split_is_idempotent(seed in any::<u64>(), n in 0usize..=9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let lambda = random_multipartition(&mut rng, n, p.ell);
        let cut = random_cut(&mut rng, &lambda, &p);
        let s = split(&lambda, &cut, &p).unwrap();
        let lenient = CutSpec::lenient(cut.a().clone());
        prop_assert_eq!(split(&s.left, &lenient, &p).unwrap().left, s.left.clone());
        prop_assert_eq!(split(&s.right, &lenient, &p).unwrap().right, s.right.clone());
    }
}

struct Instance {
    p: Params,
    poset: DominancePoset,
    set: CutSet,
}

/// Random cut sets whose size lies in `sizes`; a few singletons slip through
/// so that degenerate sets stay covered.
fn instances(seed: u64, count: usize, max_n: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Instance> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let p = random_params(&mut rng, n);
        let poset = DominancePoset::new(n, &p);
        for _ in 0..8 {
            let lambda = random_multipartition(&mut rng, n, p.ell);
            let cut = random_cut(&mut rng, &lambda, &p);
            let set = lambda_set_in(&poset, &lambda, &cut, &p).unwrap();
            if sizes.contains(&set.len()) || (set.len() == 1 && rng.gen_bool(0.1)) {
                out.push(Instance { p: p.clone(), poset: poset.clone(), set });
                break;
            }
        }
    }
    out
}

#[test]
fn cut_sets_are_order_convex() {
    for inst in instances(1, 60, 7, 2..=usize::MAX) {
        assert!(inst.set.contains(&inst.set.reference));
        assert!(convex(&inst.poset, &inst.set), "{:?}", inst.set.members);
        let e: BTreeSet<_> = inst.set.saturated.iter().collect();
        let f: BTreeSet<_> = inst.set.cosaturated.iter().collect();
        let members: BTreeSet<_> = inst.set.members.iter().collect();
        assert_eq!(e.intersection(&f).copied().collect::<BTreeSet<_>>(), members);
    }
}

#[test]
fn index_map_is_a_bijection() {
    for inst in instances(2, 40, 7, 2..=usize::MAX) {
        let r = verify_index_bijection(&inst.set, &inst.p).unwrap();
        assert!(r.injective && r.onto_product, "{r:?}");
        assert_eq!(r.size, r.left_size * r.right_size);
    }
}

#[test]
fn tableau_map_is_a_degree_preserving_bijection() {
    for inst in instances(3, 25, 7, 2..=30) {
        let cut = &inst.set.cut;
        for mu in &inst.set.members {
            for nu in &inst.set.members {
                let r = verify_tableau_bijection(mu, nu, cut, &inst.p).unwrap();
                assert!(r.bijective && r.degree_additive, "{mu} / {nu}: {:?}", r.failures);
            }
        }
    }
}

#[test]
fn subquotient_dimension_factorizes() {
    let mut checked = 0;
    for inst in instances(4, 24, 7, 2..=12) {
        let whole = subquotient_graded_dim(&inst.set, &inst.p).unwrap();
        assert_eq!(whole, triple_loop_dim(&inst.set, &inst.p));
        let s = split(&inst.set.reference, &inst.set.cut, &inst.p).unwrap();
        let left = cherecut_core::lambda_set(&s.left, &inst.set.cut, &inst.p).unwrap();
        let right = cherecut_core::lambda_set(&s.right, &inst.set.cut, &inst.p).unwrap();
        let product =
            &subquotient_graded_dim(&left, &inst.p).unwrap() * &subquotient_graded_dim(&right, &inst.p).unwrap();
        assert_eq!(whole, product, "{}", inst.set.reference);
        checked += 1;
    }
    assert_eq!(checked, 24);
}
