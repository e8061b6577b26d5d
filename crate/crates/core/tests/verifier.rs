mod common;

use no3line::search::search_size;
use no3line::{
    addable_squares, has_three_in_line, is_good, verify, Placement, SearchConfig, Square, Symmetry,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn random_placements_agree_with_triple_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let p = common::random_placement(&mut rng, n, 14);
        let three = common::triple_in_line(p.queens());
        let report = verify(&p);
        assert_eq!(has_three_in_line(&p).is_some(), three, "{p:?}");
        assert_eq!(!report.no_three, three);
        if !three {
            assert_eq!(report.addable, common::addable(n, p.queens()));
            assert_eq!(report.good, common::good(n, p.queens()));
        } else {
            let line = report.violating_line.unwrap();
            assert!(p.queens().iter().filter(|&&s| line.contains(s)).count() >= 3);
        }
    }
}

fn arb_no3() -> impl Strategy<Value = Placement> {
    (1i32..=7, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        common::random_no3_placement(&mut rng, n, 2 * n as usize)
    })
}

proptest! {
    #[test]
    fn goodness_and_addability_are_dihedral_invariant(p in arb_no3()) {
        let n = p.n();
        let addable = addable_squares(&p).unwrap();
        for g in Symmetry::ALL {
            let image = p.transform(g);
            prop_assert_eq!(is_good(&image), is_good(&p));
            let mut mapped: Vec<Square> = addable.iter().map(|&s| g.apply(s, n)).collect();
            mapped.sort();
            prop_assert_eq!(addable_squares(&image).unwrap(), mapped);
        }
    }

    #[test]
    fn adding_an_addable_square_keeps_no_three(p in arb_no3()) {
        for s in addable_squares(&p).unwrap() {
            prop_assert!(has_three_in_line(&p.with(s).unwrap()).is_none());
        }
    }
}

#[test]
fn good_placements_saturate_every_empty_square() {
    let config = SearchConfig::default();
    for n in 1..=8 {
        let start = no3line::lower_bound(n).unwrap();
        let witness = (start..=2 * n as usize)
            .find_map(|q| search_size(n, q, &config).unwrap().witness)
            .unwrap();
        let counts = no3line::LineCounts::of(&witness);
        for s in witness.squares().filter(|&s| !witness.contains(s)) {
            assert!(
                counts.through(s).contains(&2),
                "n={n} square {s} unsaturated"
            );
        }
    }
}
