use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropdiv::chain::{
    adjoint_check, brill_noether_number, count_cells, enumerate_cells, path_to_tableau,
    rank_consistency, sample_cell, tableau_to_path, vertex_avoiding_reps, ChainOfLoops,
    LingeringLatticePath, Step,
};

/// Brute-force count of standard tableaux on a rectangle filled with a
/// given number of integers out of `1..=g`: place integers one at a time.
fn brute_force_tableaux(g: usize, columns: usize, rows: usize) -> u64 {
    fn go(
        k: usize,
        g: usize,
        heights: &mut Vec<usize>,
        rows: usize,
        skipped: usize,
        max_skip: usize,
    ) -> u64 {
        if k > g {
            return heights.iter().all(|&h| h == rows) as u64;
        }
        let mut total = 0;
        if skipped < max_skip {
            total += go(k + 1, g, heights, rows, skipped + 1, max_skip);
        }
        for j in 0..heights.len() {
            let ok = heights[j] < rows && (j == 0 || heights[j - 1] > heights[j]);
            if ok {
                heights[j] += 1;
                total += go(k + 1, g, heights, rows, skipped, max_skip);
                heights[j] -= 1;
            }
        }
        total
    }
    let filled = columns * rows;
    if filled > g {
        return 0;
    }
    go(1, g, &mut vec![0; columns], rows, 0, g - filled)
}

#[test]
fn counts_agree_with_formula_and_brute_force() {
    for g in 1..=7usize {
        for r in 0..=g {
            for d in 0..=g + r {
                let count = count_cells(g, r, d).unwrap();
                let rho = brill_noether_number(g as i64, r as i64, d as i64);
                let expected = if rho < 0 {
                    0
                } else {
                    brute_force_tableaux(g, r + 1, g + r - d)
                };
                assert_eq!(count.enumerated as u64, expected, "g={g} r={r} d={d}");
            }
        }
    }
}

#[test]
fn every_cell_of_small_chains_has_rank_r() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in 1..=5usize {
        let chain = ChainOfLoops::generic(g).unwrap();
        for r in 0..=2usize {
            for d in 0..=g + r {
                for cell in enumerate_cells(g, r, d).unwrap() {
                    let div = sample_cell(&chain, &cell, &mut rng).unwrap();
                    assert!(
                        rank_consistency(&chain, &cell, &div).unwrap(),
                        "g={g} r={r} d={d} tableau={:?}",
                        cell.tableau
                    );
                }
            }
        }
    }
}

#[test]
fn adjoint_tableau_is_transpose_when_rho_is_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for g in 1..=6usize {
        let chain = ChainOfLoops::generic(g).unwrap();
        for r in 0..=g {
            for d in 0..=g + r {
                if brill_noether_number(g as i64, r as i64, d as i64) != 0 || d + 1 > g + r {
                    continue;
                }
                for cell in enumerate_cells(g, r, d).unwrap() {
                    let div = sample_cell(&chain, &cell, &mut rng).unwrap();
                    let check = adjoint_check(&chain, &cell, &div).unwrap();
                    assert!(check.is_transpose(), "g={g} r={r} d={d} {check:?}");
                }
            }
        }
    }
}

#[test]
fn vertex_avoiding_representatives_on_genus_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let chain = ChainOfLoops::generic(5).unwrap();
    for (r, d) in [(0, 2), (1, 4), (2, 6)] {
        for cell in enumerate_cells(5, r, d).unwrap() {
            let div = sample_cell(&chain, &cell, &mut rng).unwrap();
            let va = vertex_avoiding_reps(&chain, r, &div).unwrap();
            for (i, di) in va.representatives.iter().enumerate() {
                let wg = tropdiv::GraphPoint::Vertex(chain.w(4));
                let v1 = tropdiv::GraphPoint::Vertex(chain.v(0));
                assert!(di.get(&wg) >= i as i64);
                assert!(di.get(&v1) >= (r - i) as i64);
                let f = &va.functions[i];
                assert_eq!(&va.representatives[0] + &f.div(chain.graph()), *di);
            }
        }
    }
}

fn arbitrary_steps(g: usize, r: usize) -> impl Strategy<Value = Vec<Step>> {
    let step = prop_oneof![
        Just(Step::Down),
        Just(Step::Linger),
        (0..r.max(1)).prop_map(Step::Up),
    ];
    proptest::collection::vec(step, g)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]
    #[test]
    fn legal_paths_round_trip(steps in arbitrary_steps(7, 2)) {
        let path = LingeringLatticePath::new(2, steps);
        if path.validate().is_ok() {
            if let Ok(t) = path_to_tableau(&path) {
                prop_assert_eq!(tableau_to_path(&t).unwrap(), path);
            }
        }
    }
}

#[test]
fn moving_a_fixed_chip_drops_the_rank() {
    use tropdiv::chain::{cell_divisor, LoopChip};
    use tropdiv::rational::frac;
    let mut moved = 0;
    for (g, r, d) in [(4, 1, 3), (6, 1, 4), (5, 2, 6), (3, 1, 3)] {
        let chain = ChainOfLoops::generic(g).unwrap();
        for cell in enumerate_cells(g, r, d).unwrap() {
            let free: Vec<_> = (0..cell.dimension())
                .map(|k| frac(3 + k as i64, 13))
                .collect();
            let good = cell_divisor(&chain, &cell, &free).unwrap();
            assert_eq!(chain.rank(&good).unwrap(), r as i64);
            let Some(i) = cell
                .loops
                .iter()
                .position(|c| matches!(c, LoopChip::Fixed { .. }))
            else {
                continue;
            };
            let mut broken = cell.clone();
            broken.loops[i] = LoopChip::Free;
            let mut free2 = Vec::new();
            let mut k = 0;
            for (j, c) in broken.loops.iter().enumerate() {
                if *c == LoopChip::Free {
                    free2.push(if j == i { frac(5, 11) } else { free[k].clone() });
                    if j != i {
                        k += 1;
                    }
                }
            }
            let bad = cell_divisor(&chain, &broken, &free2).unwrap();
            assert_eq!(chain.rank(&bad).unwrap(), r as i64 - 1, "g={g} r={r} d={d}");
            moved += 1;
        }
    }
    assert!(moved > 5);
}

#[test]
fn reduced_test_points_match_all_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for g in 2..=3usize {
        let chain = ChainOfLoops::generic(g).unwrap();
        for r in 0..=1usize {
            for d in 0..=g + r {
                for cell in enumerate_cells(g, r, d).unwrap() {
                    let div = sample_cell(&chain, &cell, &mut rng).unwrap();
                    let full = tropdiv::rank::rank_metric_value(chain.graph(), &div).unwrap();
                    assert_eq!(chain.rank(&div).unwrap(), full);
                }
            }
        }
    }
}
