//! Deterministic random generators for maps, seeds and circle-map corpora.
//! Used by the test suites and benchmarks; not part of the public API.

use rand::prelude::IndexedRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::actions::IntervalMap;
use crate::circle::CircleMap;
use crate::plmap::{PLFunc, PLLift, Piece};
use crate::rational::{rat, rint, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct breakpoints in `[0, 1)` starting at 0, all with one
/// small denominator.
fn breakpoints(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let denom = rng.random_range(2 * count as i64..=4 * count.max(2) as i64);
    let mut numerators: Vec<i64> = (1..denom).collect();
    let mut picked = vec![0i64];
    for _ in 1..count {
        let i = rng.random_range(0..numerators.len());
        picked.push(numerators.swap_remove(i));
    }
    picked.sort();
    picked.into_iter().map(|n| rat(n, denom)).collect()
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(1..=12i64);
    let num = rng.random_range(-24..=24i64);
    rat(num, den)
}

/// A random lift with up to `max_pieces` pieces. The breakpoint values are
/// chosen strictly increasing and gaining exactly 1 per period, so the data
/// is always a valid lift.
pub fn random_lift(rng: &mut ChaCha8Rng, max_pieces: usize) -> PLLift {
    let count = rng.random_range(1..=max_pieces.max(1));
    let cuts = breakpoints(rng, count);
    let start = small_rational(rng);
    // positive value gaps summing to 1
    let weights: Vec<i64> = (0..count).map(|_| rng.random_range(1..=8)).collect();
    let total: i64 = weights.iter().sum();
    let mut values = Vec::with_capacity(count + 1);
    let mut acc = start.clone();
    values.push(acc.clone());
    for w in &weights {
        acc += rat(*w, total);
        values.push(acc.clone());
    }
    let mut pieces = Vec::with_capacity(count);
    for i in 0..count {
        let end = cuts.get(i + 1).cloned().unwrap_or_else(|| rint(1));
        let slope = (&values[i + 1] - &values[i]) / (&end - &cuts[i]);
        pieces.push(Piece::new(cuts[i].clone(), values[i].clone(), slope));
    }
    PLLift::new(pieces).expect("construction yields a valid lift")
}

/// A random lift guaranteed to fix a point (it pins one breakpoint).
pub fn random_lift_with_fixed_point(rng: &mut ChaCha8Rng, max_pieces: usize) -> PLLift {
    let lift = random_lift(rng, max_pieces);
    let pieces = lift.pieces();
    let pinned = pieces.choose(rng).expect("lift has pieces").clone();
    let offset = &pinned.x - &pinned.v;
    let moved: Vec<Piece> = pieces
        .iter()
        .map(|p| Piece::new(p.x.clone(), &p.v + &offset, p.s.clone()))
        .collect();
    PLLift::new(moved).expect("translating values preserves lift validity")
}

/// A random 1-periodic function with up to `max_pieces` pieces and small
/// values.
pub fn random_plfunc(rng: &mut ChaCha8Rng, max_pieces: usize) -> PLFunc {
    let count = rng.random_range(1..=max_pieces.max(1));
    let cuts = breakpoints(rng, count);
    let mut values: Vec<Rational> = (0..count).map(|_| small_rational(rng)).collect();
    values.push(values[0].clone());
    let mut pieces = Vec::with_capacity(count);
    for i in 0..count {
        let end = cuts.get(i + 1).cloned().unwrap_or_else(|| rint(1));
        let slope = (&values[i + 1] - &values[i]) / (&end - &cuts[i]);
        pieces.push(Piece::new(cuts[i].clone(), values[i].clone(), slope));
    }
    PLFunc::new(pieces).expect("construction yields a periodic function")
}

/// A random rational in `[0, 1)` with a small denominator.
pub fn random_unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(2..=24i64);
    let num = rng.random_range(0..den);
    rat(num, den)
}

/// The flavors mixed into [`random_circle_map`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleFlavor {
    RigidRotation,
    ConjugatedRotation,
    WithFixedPoint,
    Generic,
}

/// A corpus member together with its construction flavor (so tests can
/// assert flavor-specific facts).
pub fn random_circle_map(rng: &mut ChaCha8Rng) -> (CircleMap, CircleFlavor) {
    match rng.random_range(0..4u32) {
        0 => {
            let t = random_unit_rational(rng);
            (CircleMap::rotation(&t), CircleFlavor::RigidRotation)
        }
        1 => {
            let t = random_unit_rational(rng);
            let h = random_lift(rng, 4);
            let lift = h.compose(&PLLift::translation(&t)).compose(&h.invert());
            (CircleMap::new(lift), CircleFlavor::ConjugatedRotation)
        }
        2 => (
            CircleMap::new(random_lift_with_fixed_point(rng, 4)),
            CircleFlavor::WithFixedPoint,
        ),
        _ => (
            CircleMap::new(random_lift(rng, 4)),
            CircleFlavor::Generic,
        ),
    }
}

/// A random PL homeomorphism of `[lo, lo + 1]` fixing both endpoints, with
/// up to `max_pieces` pieces.
pub fn random_interval_homeo(
    rng: &mut ChaCha8Rng,
    lo: &Rational,
    max_pieces: usize,
) -> IntervalMap {
    let count = rng.random_range(1..=max_pieces.max(1));
    let cuts: Vec<Rational> = breakpoints(rng, count)
        .into_iter()
        .map(|c| lo + c)
        .collect();
    let weights: Vec<i64> = (0..count).map(|_| rng.random_range(1..=8)).collect();
    let total: i64 = weights.iter().sum();
    let mut values = Vec::with_capacity(count + 1);
    let mut acc = lo.clone();
    values.push(acc.clone());
    for w in &weights {
        acc += rat(*w, total);
        values.push(acc.clone());
    }
    let hi = lo + rint(1);
    let mut pieces = Vec::with_capacity(count);
    for i in 0..count {
        let end = cuts.get(i + 1).cloned().unwrap_or_else(|| hi.clone());
        let slope = (&values[i + 1] - &values[i]) / (&end - &cuts[i]);
        pieces.push(Piece::new(cuts[i].clone(), values[i].clone(), slope));
    }
    IntervalMap::new(lo.clone(), hi, pieces).expect("construction fixes both endpoints")
}

/// A random lift fixing 0 and 1/2, usable as a half-period seed for
/// twisted pairs.
pub fn random_half_period_seed(rng: &mut ChaCha8Rng, max_pieces: usize) -> PLLift {
    let halves: Vec<IntervalMap> = (0..2)
        .map(|_| {
            // a homeomorphism of [0, 1] squeezed into half scale
            random_interval_homeo(rng, &rint(0), max_pieces)
        })
        .collect();
    let mut pieces = Vec::new();
    for (i, h) in halves.iter().enumerate() {
        let offset = rat(i as i64, 2);
        for p in h.pieces() {
            pieces.push(Piece::new(
                &p.x / rint(2) + &offset,
                &p.v / rint(2) + &offset,
                p.s.clone(),
            ));
        }
    }
    PLLift::new(pieces).expect("halves glue to a lift fixing 0 and 1/2")
}
