mod common;

use std::collections::HashSet;

use cherecut_core::{
    build_diagram, count_crossings, enumerate_multipartitions, enumerate_sstd, node_position, tableau_degree,
    Characteristic, Params, Position, Tableau,
};
use common::{all_pairs_degree, mp, params, random_params};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn level_two() -> Vec<Params> {
    vec![
        params(0, 3, &[0, 1], &[0, 1]),
        params(0, 4, &[0, 3], &[1, 1]),
        Params::new(0, Characteristic::Infinite, vec![-2, 5], vec![0, 3]).unwrap(),
    ]
}

#[test]
fn identity_tableau_is_unique_of_degree_zero() {
    let mut cases = vec![(1, params(0, 3, &[0], &[0])), (1, params(0, 4, &[4], &[3]))];
    cases.extend(level_two().into_iter().map(|p| (2, p)));
    for (ell, p) in cases {
        let max = if ell == 1 { 8 } else { 6 };
        for n in 0..=max {
            for lambda in enumerate_multipartitions(n, ell) {
                let all = enumerate_sstd(&lambda, &lambda, &p).unwrap();
                assert_eq!(all.len(), 1, "{lambda}");
                assert_eq!(all[0], Tableau::identity(&lambda, &p));
                assert_eq!(tableau_degree(&all[0], &p), 0);
            }
        }
    }
}

#[test]
fn staircase_weight_has_one_tableau() {
    let p = params(15, 3, &[0], &[0]);
    assert_eq!(enumerate_sstd(&mp(&[&[5, 4, 3, 2, 1]]), &mp(&[&[4, 4, 4, 1, 1, 1]]), &p).unwrap().len(), 1);
}

fn check_all_pairs(p: &Params, n: usize) -> usize {
    let all = enumerate_multipartitions(n, p.ell);
    let mut seen = 0;
    for lambda in &all {
        for mu in &all {
            for t in enumerate_sstd(lambda, mu, p).unwrap() {
                assert!(t.is_semistandard(p));
                let d = build_diagram(&t, p);
                let report = count_crossings(&d).unwrap();
                let (degree, counts) = all_pairs_degree(&t, p);
                assert_eq!(report.degree(p), degree, "{t}");
                assert_eq!([report.solid_solid.len(), report.solid_ghost.len(), report.solid_red.len()], counts, "{t}");
                seen += 1;
            }
        }
    }
    seen
}

#[test]
fn crossing_count_matches_all_pairs_oracle() {
    let mut seen = 0;
    for n in 0..=8 {
        seen += check_all_pairs(&params(0, 3, &[0], &[0]), n);
        seen += check_all_pairs(&params(0, 4, &[1], &[1]), n);
    }
    for p in level_two() {
        for n in 0..=5 {
            seen += check_all_pairs(&p, n);
        }
    }
    eprintln!("checked {seen} tableaux");
    assert!(seen > 500);
}

/// Positions of a tableau's strands, ghosts and red lines at the bottom and
/// top of `C_T` are pairwise distinct.
fn endpoints_distinct(t: &Tableau, p: &Params) -> bool {
    let ell = p.ell as i64;
    let reds: Vec<Position> = p.theta.iter().map(|&x| Position::from_int(x, 0)).collect();
    let bottoms: Vec<Position> = t.fillings().iter().map(|f| node_position(f.node, p)).collect();
    let tops: Vec<Position> = t.fillings().iter().map(|f| f.target.clone()).collect();
    [bottoms, tops].into_iter().all(|ends| {
        let mut all: Vec<Position> = ends.to_vec();
        all.extend(ends.iter().map(|x| x.shift_int(-ell)));
        all.extend(reds.iter().cloned());
        all.iter().collect::<HashSet<_>>().len() == all.len()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_ignores_strand_order(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let all = enumerate_multipartitions(n, p.ell);
        let lambda = all.choose(&mut rng).unwrap();
        let mu = all.choose(&mut rng).unwrap();
        for t in enumerate_sstd(lambda, mu, &p).unwrap().into_iter().take(10) {
            let d = build_diagram(&t, &p);
            let base = count_crossings(&d).unwrap();
            let mut shuffled = d.clone();
            shuffled.strands.shuffle(&mut rng);
            shuffled.reds.shuffle(&mut rng);
            let other = count_crossings(&shuffled).unwrap();
            prop_assert_eq!(base.degree(&p), other.degree(&p));
            prop_assert_eq!(base.total(), other.total());
        }
    }

    #[test]
    fn tableau_endpoints_are_distinct(seed in any::<u64>(), n in 0usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let all = enumerate_multipartitions(n, p.ell);
        let lambda = all.choose(&mut rng).unwrap();
        for mu in &all {
            for t in enumerate_sstd(lambda, mu, &p).unwrap() {
                prop_assert!(endpoints_distinct(&t, &p), "{}", t);
            }
        }
    }

    #[test]
    fn enumerated_tableaux_are_semistandard_and_distinct(seed in any::<u64>(), n in 0usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_params(&mut rng, n);
        let all = enumerate_multipartitions(n, p.ell);
        let lambda = all.choose(&mut rng).unwrap();
        let mu = all.choose(&mut rng).unwrap();
        let ts = enumerate_sstd(lambda, mu, &p).unwrap();
        prop_assert_eq!(ts.iter().collect::<HashSet<_>>().len(), ts.len());
        for t in &ts {
            prop_assert!(t.is_semistandard(&p));
            prop_assert_eq!(t.shape(), lambda);
            prop_assert_eq!(t.weight(), mu);
        }
    }
}

/// Number of residue-respecting bijections `[λ] → i_μ` satisfying the three
/// semistandard inequalities, by trying every permutation.
fn brute_force_count(lambda: &cherecut_core::Multipartition, mu: &cherecut_core::Multipartition, p: &Params) -> usize {
    use cherecut_core::Node;
    let nodes = lambda.nodes();
    let targets: Vec<(Position, cherecut_core::Residue)> =
        mu.nodes().into_iter().map(|x| (node_position(x, p), p.residue(x))).collect();
    let ell = p.ell as i64;
    let ok = |assign: &[usize]| {
        let at = |node: Node| nodes.iter().position(|&x| x == node).map(|k| &targets[assign[k]].0);
        nodes.iter().enumerate().all(|(k, &node)| {
            let (target, res) = &targets[assign[k]];
            if *res != p.residue(node) {
                return false;
            }
            if node.row == 1 && node.col == 1 && *target <= Position::from_int(p.theta[node.comp - 1], 0) {
                return false;
            }
            if let Some(above) = at(Node::new(node.row.wrapping_sub(1), node.col, node.comp)) {
                if *target <= above.shift_int(ell) {
                    return false;
                }
            }
            if let Some(left) = at(Node::new(node.row, node.col.wrapping_sub(1), node.comp)) {
                if *target <= left.shift_int(-ell) {
                    return false;
                }
            }
            true
        })
    };
    fn permute(k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, ok: &dyn Fn(&[usize]) -> bool) -> usize {
        if k == used.len() {
            return ok(cur) as usize;
        }
        let mut total = 0;
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                total += permute(k + 1, used, cur, ok);
                cur.pop();
                used[j] = false;
            }
        }
        total
    }
    permute(0, &mut vec![false; nodes.len()], &mut Vec::new(), &ok)
}

#[test]
fn enumeration_matches_brute_force() {
    let mut cases = vec![params(0, 3, &[0], &[0]), params(0, 3, &[2], &[1])];
    cases.extend(level_two());
    for p in cases {
        for n in 0..=5 {
            let all = enumerate_multipartitions(n, p.ell);
            for lambda in &all {
                for mu in &all {
                    assert_eq!(
                        enumerate_sstd(lambda, mu, &p).unwrap().len(),
                        brute_force_count(lambda, mu, &p),
                        "{lambda} / {mu}"
                    );
                }
            }
        }
    }
}

/// Records how often a nonempty `SStd(λ, μ)` comes with `μ ⊴_θ λ`. The
/// implication is expected from cellularity but is reported, not asserted.
#[test]
fn nonempty_sstd_versus_dominance_survey() {
    use cherecut_core::theta_dominates;
    let mut rng = StdRng::seed_from_u64(17);
    let (mut nonempty, mut dominated) = (0usize, 0usize);
    for _ in 0..20 {
        let n = rand::Rng::gen_range(&mut rng, 1..=5);
        let p = random_params(&mut rng, n);
        let all = enumerate_multipartitions(n, p.ell);
        for lambda in &all {
            for mu in &all {
                if !enumerate_sstd(lambda, mu, &p).unwrap().is_empty() {
                    nonempty += 1;
                    dominated += theta_dominates(lambda, mu, &p).unwrap() as usize;
                }
            }
        }
    }
    eprintln!("nonempty SStd(λ, μ): {nonempty}, of which μ ⊴_θ λ: {dominated}");
    assert!(nonempty > 0);
}
