mod common;

use cherecut_core::{
    admits_cut, diagonal_sets, enumerate_sstd, factor_decomposition, lambda_set, parse_rational, split_pair,
    sstd_generating_poly, verify_tableau_bijection, CutMode, CutSpec, GradedPoly, Multipartition, Position, Residue,
};
use common::{mp, params};

fn poly(terms: &[(i64, u64)]) -> GradedPoly {
    GradedPoly::from_terms(terms.iter().copied())
}

fn rows(spec: &[(usize, usize)]) -> Vec<usize> {
    spec.iter().flat_map(|&(len, times)| std::iter::repeat_n(len, times)).collect()
}

fn multi(components: Vec<Vec<usize>>) -> Multipartition {
    Multipartition::new(components).unwrap()
}

#[test]
fn staircase_cut() {
    let p = params(15, 3, &[0], &[0]);
    let lambda = mp(&[&[5, 4, 3, 2, 1]]);
    let mu = mp(&[&[4, 4, 4, 1, 1, 1]]);
    let cut = CutSpec::parse("1/2", CutMode::Strict).unwrap();
    assert!(admits_cut(&lambda, &mu, &cut, &p).unwrap());

    let d = diagonal_sets(&lambda, &cut, &p).unwrap();
    let band: Vec<(Position, Residue)> = d.diagonal.charged_points().into_iter().map(|(x, r)| (x.clone(), r)).collect();
    assert_eq!(
        band,
        vec![
            (Position::from_int(0, 2), Residue(0)),
            (Position::from_int(0, 4), Residue(0)),
            (Position::from_int(0, 6), Residue(0)),
        ]
    );
    assert_eq!((d.left.len(), d.right.len()), (6, 6));

    let s = split_pair(&lambda, &mu, &cut, &p).unwrap();
    assert_eq!(s.lambda_left, mp(&[&[5, 4, 3]]));
    assert_eq!(s.lambda_right, mp(&[&[3, 3, 3, 2, 1]]));
    assert_eq!(s.mu_left, mp(&[&[4, 4, 4]]));
    assert_eq!(s.mu_right, mp(&[&[3, 3, 3, 1, 1, 1]]));

    // tableau generating polynomials factor across the cut
    let dl = sstd_generating_poly(&s.lambda_left, &s.mu_left, &p).unwrap();
    let dr = sstd_generating_poly(&s.lambda_right, &s.mu_right, &p).unwrap();
    let whole = sstd_generating_poly(&lambda, &mu, &p).unwrap();
    assert_eq!(dl, poly(&[(1, 1)]));
    assert_eq!(dr, poly(&[(1, 1)]));
    assert_eq!(whole, poly(&[(2, 1)]));
    assert_eq!(factor_decomposition(&dl, &dr), whole);
    assert_eq!(enumerate_sstd(&lambda, &mu, &p).unwrap().len(), 1);

    let report = verify_tableau_bijection(&lambda, &mu, &cut, &p).unwrap();
    assert!(report.bijective && report.degree_additive, "{:?}", report.failures);

    assert!(lambda_set(&lambda, &cut, &p).unwrap().contains(&mu));
}

#[test]
fn bipartition_cut() {
    let p = params(57, 5, &[0, 1], &[0, 2]);
    let lambda = multi(vec![vec![11, 9, 7, 3, 3, 2, 1, 1, 1], vec![9, 4, 2, 1, 1, 1, 1]]);
    let mu =
        multi(vec![rows(&[(10, 1), (9, 1), (8, 1), (4, 1), (3, 1), (1, 5)]), rows(&[(8, 1), (4, 1), (2, 1), (1, 4)])]);
    assert_eq!(lambda.size(), mu.size());
    let cut = CutSpec::parse("26/5", CutMode::Lenient).unwrap();
    assert_eq!(cut.a(), &parse_rational("5.2").unwrap());
    assert!(admits_cut(&lambda, &mu, &cut, &p).unwrap());

    let s = split_pair(&lambda, &mu, &cut, &p).unwrap();
    assert_eq!(s.lambda_left, multi(vec![vec![11, 9, 7, 3, 3], vec![9, 4, 2]]));
    assert_eq!(s.lambda_right, multi(vec![rows(&[(3, 5), (2, 1), (1, 3)]), rows(&[(1, 7)])]));
    assert_eq!(s.mu_left, multi(vec![vec![10, 9, 8, 4, 3], vec![8, 4, 2]]));
    assert_eq!(s.mu_right, multi(vec![rows(&[(3, 5), (1, 5)]), rows(&[(1, 7)])]));
    assert_eq!((s.n_left, s.n_right), (48, 27));
}

#[test]
fn cyclotomic_cut() {
    let p = params(57, 3, &[0, 115], &[0, 1]);
    let lambda = multi(vec![vec![5, 5, 4, 4, 3, 2, 1], vec![9, 6, 4, 4, 3, 2, 2, 2, 1]]);
    let mu = multi(vec![vec![5, 4, 4, 3, 3, 3], vec![9, 6, 5, 4, 4, 2, 2, 1, 1, 1]]);
    assert_eq!(lambda.size(), 57);
    let cut = CutSpec::parse("121", CutMode::Lenient).unwrap();
    assert!(admits_cut(&lambda, &mu, &cut, &p).unwrap());

    let s = split_pair(&lambda, &mu, &cut, &p).unwrap();
    assert_eq!(s.lambda_left, multi(vec![vec![5, 5, 4, 4, 3, 2, 1], vec![9, 6, 4, 4, 3]]));
    assert_eq!(s.lambda_right, multi(vec![vec![], rows(&[(3, 5), (2, 3), (1, 1)])]));
    assert_eq!(s.mu_left, multi(vec![vec![5, 4, 4, 3, 3, 3], vec![9, 6, 5, 4, 4]]));
    assert_eq!(s.mu_right, multi(vec![vec![], rows(&[(3, 5), (2, 2), (1, 3)])]));

    // The same abscissa is refused when strictness is requested.
    let strict = CutSpec::parse("121", CutMode::Strict).unwrap();
    assert!(admits_cut(&lambda, &mu, &strict, &p).is_err());
}

#[test]
fn worked_factorizations() {
    assert_eq!(factor_decomposition(&poly(&[(5, 1), (3, 1)]), &poly(&[(2, 1)])), poly(&[(7, 1), (5, 1)]));
    assert_eq!(factor_decomposition(&poly(&[(1, 1)]), &poly(&[(1, 1)])), poly(&[(2, 1)]));
    assert_eq!(
        factor_decomposition(&poly(&[(11, 1), (9, 2), (7, 2), (5, 1)]), &poly(&[(1, 1)])),
        poly(&[(12, 1), (10, 2), (8, 2), (6, 1)])
    );
}

#[test]
fn three_over_two_one_degree() {
    let p = params(3, 3, &[0], &[0]);
    let all = enumerate_sstd(&mp(&[&[3]]), &mp(&[&[2, 1]]), &p).unwrap();
    assert_eq!(all.len(), 1);
    let (degree, counts) = common::all_pairs_degree(&all[0], &p);
    assert_eq!(degree, 1);
    assert_eq!(counts, [2, 3, 1]);
}
