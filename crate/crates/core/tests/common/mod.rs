//! Brute-force oracles. Deliberately written without the crate's line
//! indexing, counters or symmetry tables.

#![allow(dead_code)]

use no3line::{Placement, Square};
use rand::Rng;

pub fn collinear(a: Square, b: Square) -> bool {
    a.x == b.x || a.y == b.y || a.x - a.y == b.x - b.y || a.x + a.y == b.x + b.y
}

/// Some line holds three of `qs`: three pairwise collinear squares sharing
/// one common slope class.
pub fn triple_in_line(qs: &[Square]) -> bool {
    let same = |a: Square, b: Square, c: Square| {
        (a.x == b.x && b.x == c.x)
            || (a.y == b.y && b.y == c.y)
            || (a.x - a.y == b.x - b.y && b.x - b.y == c.x - c.y)
            || (a.x + a.y == b.x + b.y && b.x + b.y == c.x + c.y)
    };
    for i in 0..qs.len() {
        for j in i + 1..qs.len() {
            for k in j + 1..qs.len() {
                if same(qs[i], qs[j], qs[k]) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn all_squares(n: i32) -> Vec<Square> {
    let mut v = Vec::new();
    for x in 1..=n {
        for y in 1..=n {
            v.push(Square::new(x, y));
        }
    }
    v
}

/// Unoccupied squares whose addition keeps every line below three.
pub fn addable(n: i32, qs: &[Square]) -> Vec<Square> {
    all_squares(n)
        .into_iter()
        .filter(|s| !qs.contains(s))
        .filter(|&s| {
            let mut ext = qs.to_vec();
            ext.push(s);
            !triple_in_line(&ext)
        })
        .collect()
}

pub fn good(n: i32, qs: &[Square]) -> bool {
    !triple_in_line(qs) && addable(n, qs).is_empty()
}

/// Calls `f` on every subset of `B_n` of size at most `max` with no three in
/// a line.
pub fn for_each_no3_subset(n: i32, max: usize, mut f: impl FnMut(&[Square])) {
    fn rec(
        squares: &[Square],
        start: usize,
        max: usize,
        cur: &mut Vec<Square>,
        f: &mut dyn FnMut(&[Square]),
    ) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for i in start..squares.len() {
            cur.push(squares[i]);
            if !triple_in_line(cur) {
                rec(squares, i + 1, max, cur, f);
            }
            cur.pop();
        }
    }
    let squares = all_squares(n);
    rec(&squares, 0, max, &mut Vec::new(), &mut f);
}

/// Every good placement on `B_n` with at most `max` queens.
pub fn good_placements(n: i32, max: usize) -> Vec<Vec<Square>> {
    let mut out = Vec::new();
    for_each_no3_subset(n, max, |qs| {
        if good(n, qs) {
            out.push(qs.to_vec());
        }
    });
    out
}

/// The eight images of a square, from two generators: quarter turn and
/// transpose.
pub fn images(n: i32, s: Square) -> Vec<Square> {
    let turn = |s: Square| Square::new(n + 1 - s.y, s.x);
    let mut out = Vec::new();
    let mut cur = s;
    for _ in 0..4 {
        out.push(cur);
        out.push(Square::new(cur.y, cur.x));
        cur = turn(cur);
    }
    out
}

/// All eight images of a placement, each sorted.
pub fn placement_images(n: i32, qs: &[Square]) -> Vec<Vec<Square>> {
    let per: Vec<Vec<Square>> = qs.iter().map(|&s| images(n, s)).collect();
    (0..8)
        .map(|g| {
            let mut v: Vec<Square> = per.iter().map(|im| im[g]).collect();
            v.sort();
            v
        })
        .collect()
}

pub fn random_placement(rng: &mut impl Rng, n: i32, max: usize) -> Placement {
    let size = rng.gen_range(0..=max.min((n * n) as usize));
    let mut qs = Vec::new();
    while qs.len() < size {
        let s = Square::new(rng.gen_range(1..=n), rng.gen_range(1..=n));
        if !qs.contains(&s) {
            qs.push(s);
        }
    }
    Placement::new(n, qs).unwrap()
}

/// A random placement with no three in a line, built by rejection.
pub fn random_no3_placement(rng: &mut impl Rng, n: i32, max: usize) -> Placement {
    let size = rng.gen_range(0..=max);
    let mut qs: Vec<Square> = Vec::new();
    let mut attempts = 0;
    while qs.len() < size && attempts < 1000 {
        attempts += 1;
        let s = Square::new(rng.gen_range(1..=n), rng.gen_range(1..=n));
        if qs.contains(&s) {
            continue;
        }
        qs.push(s);
        if triple_in_line(&qs) {
            qs.pop();
        }
    }
    Placement::new(n, qs).unwrap()
}

pub fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
