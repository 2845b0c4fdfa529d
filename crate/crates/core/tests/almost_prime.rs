//! Case-system counts against an orbit search over raw exponent vectors.

use std::collections::{BTreeSet, HashSet, VecDeque};

use brickwright::almostprime::canonical_case_systems;
use itertools::Itertools;

type Vector = Vec<u8>;
type Triple = (Vector, Vector, Vector);

fn complement(v: &[u8]) -> Vector {
    v.iter().map(|&e| 2 - e).collect()
}

fn same_pair(x: &[u8], y: &[u8]) -> bool {
    x == y || x == complement(y).as_slice()
}

fn constant(v: &[u8], e: u8) -> bool {
    v.iter().all(|&x| x == e)
}

fn admissible(b: &[u8], c: &[u8], g: &[u8]) -> bool {
    let leg_ok = |v: &[u8]| !(constant(v, 0) || constant(v, 1) || constant(v, 2));
    leg_ok(b)
        && leg_ok(c)
        && !same_pair(b, c)
        && !constant(g, 1)
        && !same_pair(g, b)
        && !same_pair(g, c)
}

/// Drops repeated `(b_i, c_i, g_i)` columns.
fn merge(t: &Triple) -> Triple {
    let cols: Vec<(u8, u8, u8)> = (0..t.0.len())
        .map(|i| (t.0[i], t.1[i], t.2[i]))
        .unique()
        .collect();
    (
        cols.iter().map(|c| c.0).collect(),
        cols.iter().map(|c| c.1).collect(),
        cols.iter().map(|c| c.2).collect(),
    )
}

fn neighbours(t: &Triple) -> Vec<Triple> {
    let (b, c, g) = t;
    let mut out = vec![
        (c.clone(), b.clone(), g.clone()),
        (complement(b), c.clone(), g.clone()),
        (b.clone(), complement(c), g.clone()),
        (b.clone(), c.clone(), complement(g)),
    ];
    for i in 0..b.len().saturating_sub(1) {
        let sw = |v: &Vector| {
            let mut v = v.clone();
            v.swap(i, i + 1);
            v
        };
        out.push((sw(b), sw(c), sw(g)));
    }
    out
}

fn orbit_count(states: &HashSet<Triple>) -> usize {
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for start in states {
        if !seen.insert(start.clone()) {
            continue;
        }
        orbits += 1;
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(t) = queue.pop_front() {
            for n in neighbours(&t) {
                assert!(states.contains(&n), "state set not closed");
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
    }
    orbits
}

/// (leg classes, systems) by brute force.
fn oracle(k: usize) -> (usize, usize) {
    let vectors: Vec<Vector> = std::iter::repeat_n([0u8, 1, 2], k)
        .multi_cartesian_product()
        .collect();
    let mut systems = HashSet::new();
    for b in &vectors {
        for c in &vectors {
            for g in &vectors {
                if admissible(b, c, g) {
                    systems.insert(merge(&(b.clone(), c.clone(), g.clone())));
                }
            }
        }
    }
    // A leg pair carries a dummy diagonal of ones so complementing it is a no-op.
    let legs: HashSet<Triple> = systems
        .iter()
        .map(|(b, c, _)| (b.clone(), c.clone(), vec![1; b.len()]))
        .collect();
    (orbit_count(&legs), orbit_count(&systems))
}

#[test]
fn counts_match_orbit_search() {
    for k in 1..=4 {
        let s = canonical_case_systems(k).unwrap();
        let (legs, systems) = oracle(k);
        assert_eq!(
            (s.leg_classes.len(), s.triple_count),
            (legs, systems),
            "k = {k}"
        );
    }
}

#[test]
fn k3_regression() {
    let s = canonical_case_systems(3).unwrap();
    assert_eq!((s.leg_classes.len(), s.triple_count), (18, 138));
    let widths: BTreeSet<usize> = s.leg_classes.iter().map(|c| c.width).collect();
    assert_eq!(widths, BTreeSet::from([2, 3]));
}
