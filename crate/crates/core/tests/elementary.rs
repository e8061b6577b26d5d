mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use no3line::elementary::EvenBranch;
use no3line::{audit, exists_good_of_size, Placement, SearchConfig, Square, Symmetry};

/// The counting invariants every good placement must satisfy.
fn check_good(p: &Placement) {
    let r = audit(p).unwrap();
    let (n, q, qdd) = (r.n as i64, r.q as i64, r.q_dd as i64);
    assert!(r.good, "{p:?}");
    assert_eq!(r.slices_above_floor, Some(true), "{p:?}");
    let (c, rows) = (r.columns.count as i64, r.rows.count as i64);
    assert!(2 * c >= 2 * n - (q - qdd) && 2 * rows >= 2 * n - (q - qdd));
    if c >= 2 && rows >= 2 {
        assert_eq!(r.chain_holds, Some(true), "{p:?}");
        assert_eq!(r.diagonal_demand_met, Some(true), "{p:?}");
        assert_eq!(r.inequality_lhs, 2 * rows - 2 - qdd.min(2));
    } else {
        assert_eq!(r.degenerate_bound_holds, Some(true), "{p:?}");
    }
    assert!(r.pm1_lines_at_most_q);
    assert!(r.extreme_double_hits.iter().all(|&h| h <= 1), "{p:?}");
    assert_eq!(r.bound_holds, Some(true));
    assert!(r.even_case.is_none());
}

/// `q''` by direct scan: queens sharing no row or column with another.
fn q_dd_oracle(qs: &[Square]) -> usize {
    qs.iter()
        .filter(|a| !qs.iter().any(|b| b != *a && (a.x == b.x || a.y == b.y)))
        .count()
}

/// `|U|` by direct scan.
fn u_oracle(n: i32, qs: &[Square]) -> usize {
    let defined_row = |y: i32| qs.iter().filter(|s| s.y == y).count() >= 2;
    let defined_col = |x: i32| qs.iter().filter(|s| s.x == x).count() >= 2;
    common::all_squares(n)
        .into_iter()
        .filter(|s| !defined_row(s.y) && !defined_col(s.x))
        .count()
}

#[test]
fn all_good_placements_on_small_boards() {
    for n in 1..=5 {
        let goods = common::good_placements(n, (2 * n) as usize + 1);
        assert!(!goods.is_empty());
        for qs in goods {
            check_good(&Placement::new(n, qs).unwrap());
        }
    }
}

#[test]
fn search_witnesses() {
    let config = SearchConfig::default();
    for (n, q) in [(6, 6), (7, 8), (7, 9), (6, 8), (5, 7)] {
        let w = exists_good_of_size(n, q, &config).unwrap().unwrap();
        check_good(&w);
    }
}

#[test]
fn quantities_match_direct_scan() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..500 {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        let p = common::random_no3_placement(&mut rng, n, 2 * n as usize);
        let r = audit(&p).unwrap();
        assert_eq!(r.q_dd, q_dd_oracle(p.queens()));
        assert_eq!(r.u_size, u_oracle(n, p.queens()));
        assert_eq!(r.good, common::good(n, p.queens()));
        let spread =
            |s: &no3line::elementary::SliceSummary| s.max.zip(s.min).map_or(0, |(hi, lo)| hi - lo);
        assert!(spread(&r.columns) >= spread(&r.rows));
        assert!(r.slope_pm1_lines_defined <= r.q);
        if !r.good {
            assert_eq!(r.chain_holds, None);
            assert_eq!(r.bound_holds, None);
        }
    }
}

#[test]
fn documented_examples() {
    let r = audit(&Placement::full(2).unwrap()).unwrap();
    assert_eq!(
        (r.q, r.q_dd, r.u_size, r.columns.count, r.rows.count),
        (4, 0, 0, 0, 0)
    );
    let r = audit(&Placement::new(3, [Square::new(1, 1)]).unwrap()).unwrap();
    assert_eq!(
        (r.q, r.q_dd, r.u_size, r.columns.count, r.rows.count),
        (1, 1, 9, 3, 3)
    );
    assert_eq!(
        (r.columns.min, r.columns.max, r.rows.min, r.rows.max),
        (Some(1), Some(3), Some(1), Some(3))
    );
}

/// On even boards no good placement has fewer than `n` queens, and the
/// audit's case analysis reports a contradiction for every such size.
#[test]
fn even_boards_need_n_queens() {
    let config = SearchConfig::default();
    for n in [2, 4, 6] {
        for q in 1..n as usize {
            assert_eq!(
                exists_good_of_size(n, q, &config).unwrap(),
                None,
                "n={n} q={q}"
            );
        }
    }
    let mut rng = StdRng::seed_from_u64(5);
    for n in [4, 6, 8] {
        for _ in 0..100 {
            let p = common::random_no3_placement(&mut rng, n, n as usize - 1);
            let even = audit(&p).unwrap().even_case.unwrap();
            assert!(even.contradiction);
            assert!(!common::good(n, p.queens()));
            assert_eq!(
                even.branch == EvenBranch::NoOffLineQueens,
                q_dd_oracle(p.queens()) == 0
            );
        }
    }
}

proptest! {
    #[test]
    fn off_line_queen_count_is_dihedral_invariant(seed in any::<u64>(), n in 1i32..=8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = common::random_no3_placement(&mut rng, n, 2 * n as usize);
        let base = audit(&p).unwrap();
        for g in Symmetry::ALL {
            let r = audit(&p.transform(g)).unwrap();
            prop_assert_eq!(r.q_dd, base.q_dd);
            prop_assert_eq!(r.good, base.good);
            prop_assert_eq!(r.u_size, base.u_size);
        }
    }
}
