use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use stabletwist_core::characters::{character_value, class_size};
use stabletwist_core::mcg::generator_series;
use stabletwist_core::partition::enumerate_partitions;
use stabletwist_core::setpart::enumerate_set_partitions;
use stabletwist_core::stablecohom::{dim_schur, GroupFamily, Method};
use stabletwist_core::symfunc::{nu, plethysm_h_h, stable_witness, MAX_PLETHYSM_DEGREE};
use stabletwist_core::{Partition, SurfaceVariant};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = enumerate_partitions(w);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn same_weight_pair(min: usize, max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (min..=max).prop_flat_map(|w| {
        let all = enumerate_partitions(w);
        let n = all.len();
        (0..n, 0..n).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn binomial(n: u64, r: u64) -> BigUint {
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_twist_is_conjugation((lambda, mu) in same_weight_pair(1, 9)) {
        let sign = if (mu.weight() - mu.len()) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(
            character_value(&lambda, &mu).unwrap() * sign,
            character_value(&lambda.conjugate(), &mu).unwrap()
        );
    }

    #[test]
    fn row_orthogonality(lambda in partition(8)) {
        let q = lambda.weight();
        let total: BigUint = enumerate_partitions(q)
            .iter()
            .map(|mu| {
                let chi = character_value(&lambda, mu).unwrap().unsigned_abs();
                class_size(mu) * chi * chi
            })
            .sum();
        let factorial: BigUint = (1..=q as u64).product();
        prop_assert_eq!(total, factorial);
    }

    #[test]
    fn rho_is_a_vertical_strip_removal(lambda in partition(9)) {
        for mu in lambda.remove_boxes_rho() {
            let removed = lambda.weight() - mu.weight();
            prop_assert!(mu.conjugate().pieri_additions(removed).contains(&lambda.conjugate()));
        }
    }

    #[test]
    fn methods_and_rho_sum_agree(lambda in partition(7)) {
        let aut = dim_schur(GroupFamily::AutF, &lambda, Method::Characters).unwrap();
        prop_assert_eq!(aut, dim_schur(GroupFamily::AutF, &lambda, Method::Plethysm).unwrap());
        let out = dim_schur(GroupFamily::OutF, &lambda, Method::Characters).unwrap();
        prop_assert_eq!(out, dim_schur(GroupFamily::OutF, &lambda, Method::Plethysm).unwrap());
        let rho_sum: u64 = lambda
            .remove_boxes_rho()
            .iter()
            .map(|mu| dim_schur(GroupFamily::OutF, mu, Method::Characters).unwrap())
            .sum();
        prop_assert_eq!(aut, rho_sum);
    }

    // dim Sym^k(Sym^l C^2) = C(l + k, k).
    #[test]
    fn plethysm_dimension_in_two_variables(k in 1usize..=12, l in 1usize..=12) {
        prop_assume!(k * l <= MAX_PLETHYSM_DEGREE);
        let counts = plethysm_h_h(k, l).unwrap().to_counts().unwrap();
        let total: BigUint = counts
            .iter()
            .map(|(lam, &c)| lam.schur_functor_dimension(2) * c)
            .sum();
        prop_assert_eq!(total, binomial((l + k) as u64, k as u64));
    }

    #[test]
    fn nu_beyond_witness_is_stable(mu in partition(4), dk in 0usize..4, dl in 0usize..4) {
        let (k, l) = stable_witness(&mu);
        prop_assume!((k + dk) * (l + dl) <= MAX_PLETHYSM_DEGREE);
        prop_assert_eq!(nu(k, l, &mu).unwrap(), nu(k + dk, l + dl, &mu).unwrap());
    }

    #[test]
    fn block_orbits_partition_the_blocks(q in 1usize..=6, seed in any::<u64>()) {
        // A permutation from the seed via a Lehmer code.
        let mut pool: Vec<usize> = (0..q).collect();
        let mut perm = Vec::with_capacity(q);
        let mut s = seed;
        for n in (1..=q).rev() {
            perm.push(pool.remove((s % n as u64) as usize));
            s /= n as u64;
        }
        for sp in enumerate_set_partitions(q, false).unwrap() {
            let blocks = sp.blocks();
            let image: Vec<Vec<usize>> = blocks
                .iter()
                .map(|b| {
                    let mut v: Vec<usize> = b.iter().map(|&x| perm[x - 1] + 1).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let fixed = image.iter().all(|b| blocks.contains(b));
            match sp.stable_block_orbits(&perm) {
                Some(orbits) => {
                    prop_assert!(fixed);
                    let covered: usize = orbits.iter().map(|&(size, len)| size * len).sum();
                    prop_assert_eq!(covered, q);
                    prop_assert_eq!(orbits.iter().map(|&(_, len)| len).sum::<usize>(), blocks.len());
                }
                None => prop_assert!(!fixed),
            }
        }
    }

    #[test]
    fn boundary_series_dominates_closed_for_h(max_degree in 0i64..=40) {
        let lambda: Partition = "[1]".parse().unwrap();
        let closed = generator_series(SurfaceVariant::Closed, &lambda, max_degree).unwrap();
        let boundary = generator_series(SurfaceVariant::OneBoundary, &lambda, max_degree).unwrap();
        for d in 0..=max_degree {
            prop_assert!(boundary.get(d) >= closed.get(d));
        }
    }
}
