#![allow(dead_code)]

use cherecut_core::{
    enumerate_multipartitions, node_position, BigRational, Characteristic, CutMode, CutSpec, Multipartition, Params,
    Position, Residue, Tableau,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

pub fn mp(c: &[&[usize]]) -> Multipartition {
    Multipartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
}

pub fn params(n: usize, e: u32, theta: &[i64], kappa: &[i64]) -> Params {
    Params::new(n, Characteristic::Finite(e), theta.to_vec(), kappa.to_vec()).unwrap()
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Random valid parameters of level 1 or 2.
pub fn random_params(rng: &mut StdRng, n: usize) -> Params {
    let ell: usize = rng.gen_range(1..=2);
    let e = if rng.gen_bool(0.15) { Characteristic::Infinite } else { Characteristic::Finite(rng.gen_range(3..=5)) };
    let theta = if ell == 1 { vec![rng.gen_range(-3..=3)] } else { vec![0, 2 * rng.gen_range(0..=5) + 1] };
    let kappa = theta
        .iter()
        .map(|_| match e {
            Characteristic::Finite(e) => rng.gen_range(0..e as i64),
            Characteristic::Infinite => rng.gen_range(-2..=2),
        })
        .collect();
    Params::new(n, e, theta, kappa).unwrap()
}

/// A strict-mode cut through the band of some node of `lambda`, or anywhere
/// near the origin when `lambda` is empty.
pub fn random_cut(rng: &mut StdRng, lambda: &Multipartition, p: &Params) -> CutSpec {
    loop {
        let nodes = lambda.nodes();
        let anchor = if nodes.is_empty() {
            ratio(p.theta[0], 1)
        } else {
            node_position(nodes[rng.gen_range(0..nodes.len())], p).base().clone()
        };
        let den = rng.gen_range(2..=3);
        let num = rng.gen_range(1..(p.ell as i64) * den);
        let a = anchor + ratio(num, den);
        let cut = CutSpec::new(Position::rational(a), CutMode::Strict).unwrap();
        if cut.validate(lambda.size(), p).is_ok() {
            return cut;
        }
    }
}

pub fn random_multipartition(rng: &mut StdRng, n: usize, ell: usize) -> Multipartition {
    let all = enumerate_multipartitions(n, ell);
    all[rng.gen_range(0..all.len())].clone()
}

/// `i − 1` for residue labels.
pub fn pred(p: &Params, r: Residue) -> Residue {
    p.e.reduce(r.0 - 1)
}

/// Degree of `C_T` by comparing every pair of endpoints directly: two
/// threads cross iff their bottom order differs from their top order.
pub fn all_pairs_degree(t: &Tableau, p: &Params) -> (i64, [usize; 3]) {
    let ell = BigRational::from_integer(BigInt::from(p.ell));
    let solids: Vec<(Position, Position, Residue)> =
        t.fillings().iter().map(|f| (node_position(f.node, p), f.target.clone(), p.residue(f.node))).collect();
    let ghost = |x: &Position| x.shift(&-ell.clone());
    let crosses = |b1: &Position, t1: &Position, b2: &Position, t2: &Position| (b1 < b2) != (t1 < t2);

    let mut degree = 0;
    let mut counts = [0usize; 3];
    for (i, (bi, ti, ri)) in solids.iter().enumerate() {
        for (j, (bj, tj, rj)) in solids.iter().enumerate() {
            if i < j && crosses(bi, ti, bj, tj) {
                counts[0] += 1;
                if ri == rj {
                    degree -= 2;
                }
            }
            if i != j && crosses(bi, ti, &ghost(bj), &ghost(tj)) {
                counts[1] += 1;
                if *rj == pred(p, *ri) {
                    degree += 1;
                }
            }
        }
        for (m, &theta) in p.theta.iter().enumerate() {
            let red = Position::from_int(theta, 0);
            if crosses(bi, ti, &red, &red) {
                counts[2] += 1;
                if *ri == p.e.reduce(p.kappa[m]) {
                    degree += 1;
                }
            }
        }
    }
    (degree, counts)
}
