mod common;

use std::collections::HashSet;

use no3line::board::{all_lines, line_count};
use no3line::{
    canonical_form, count_attacked, line_squares, lines_through, Placement, Square, Symmetry,
};
use proptest::prelude::*;

#[test]
fn attack_counts_match_enumeration_and_bounds() {
    for n in 1..=12 {
        let squares = common::all_squares(n);
        for &s in &squares {
            let brute = squares
                .iter()
                .filter(|&&t| t != s && common::collinear(s, t))
                .count();
            let got = count_attacked(n, s).unwrap();
            assert_eq!(got, brute, "n={n} s={s}");
            if n >= 2 {
                let n = n as usize;
                assert!(
                    3 * n - 3 <= got && got <= 4 * n - 4,
                    "n={n} s={s} count={got}"
                );
            }
            let via_lines: usize = lines_through(s, n)
                .unwrap()
                .iter()
                .map(|&l| line_squares(l, n).unwrap().len() - 1)
                .sum();
            assert_eq!(via_lines, got);
        }
    }
}

#[test]
fn line_inventory() {
    for n in 1..=12 {
        let mut seen = HashSet::new();
        for s in common::all_squares(n) {
            seen.extend(lines_through(s, n).unwrap());
        }
        assert_eq!(seen.len(), (6 * n - 2) as usize);
        assert_eq!(line_count(n), seen.len());
        assert_eq!(all_lines(n).into_iter().collect::<HashSet<_>>(), seen);
    }
}

#[test]
fn canonical_form_of_small_example() {
    let qs = [Square::new(1, 2), Square::new(3, 1)];
    let expected = common::placement_images(3, &qs).into_iter().min().unwrap();
    let p = Placement::new(3, qs).unwrap();
    assert_eq!(canonical_form(&p).queens(), expected.as_slice());
    assert_eq!(expected, vec![Square::new(1, 1), Square::new(2, 3)]);
}

#[test]
fn symmetry_table_matches_generated_group() {
    for n in 1..=7 {
        for s in common::all_squares(n) {
            let ours: HashSet<_> = Symmetry::ALL.iter().map(|g| g.apply(s, n)).collect();
            let theirs: HashSet<_> = common::images(n, s).into_iter().collect();
            assert_eq!(ours, theirs);
        }
    }
}

fn arb_placement() -> impl Strategy<Value = Placement> {
    (1i32..=8).prop_flat_map(|n| {
        prop::collection::btree_set((1..=n, 1..=n), 0..=(n * n).min(12) as usize)
            .prop_map(move |set| Placement::new(n, set.into_iter().map(Square::from)).unwrap())
    })
}

proptest! {
    #[test]
    fn canonical_form_is_an_orbit_invariant(p in arb_placement()) {
        let c = canonical_form(&p);
        prop_assert_eq!(canonical_form(&c), c.clone());
        for g in Symmetry::ALL {
            prop_assert_eq!(canonical_form(&p.transform(g)), c.clone());
        }
        let oracle = common::placement_images(p.n(), p.queens()).into_iter().min().unwrap();
        prop_assert_eq!(c.queens(), oracle.as_slice());
    }

    #[test]
    fn placement_json_round_trip(p in arb_placement()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Placement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}
