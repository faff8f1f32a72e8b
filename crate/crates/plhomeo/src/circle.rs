//! Circle homeomorphisms through their lifts: exact rotation numbers,
//! circle fixed sets, and pairs satisfying the twisted relation
//! `f g f^-1 = g^-1`.
//!
//! A [`CircleMap`] is a [`PLLift`] normalized so that its value at 0 lies in
//! `[0, 1)`; two lifts of the same circle map differ by an integer, so the
//! normalized lift is a complete invariant and structural equality decides
//! equality of circle maps.
//!
//! Rotation numbers of rational PL circle maps need not be rational, so the
//! result is either `exact p/q`, certified by a periodic orbit found through
//! exact fixed-set computations, or a rational bracket guaranteed to contain
//! the translation number of the lift.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::fixedset::FixedSet;
use crate::plmap::{PLLift, Piece, PlError};
use crate::rational::{rat, rint, Rational};

/// Lift applications spent on the bracket iteration before giving up and
/// reporting the bracket reached so far.
pub const DEFAULT_ITERATION_BUDGET: u64 = 1 << 16;
pub const DEFAULT_Q_MAX: u32 = 64;

/// Default bracket width `1/1024`.
pub fn default_width() -> Rational {
    rat(1, 1024)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircleError {
    /// The half-period seed must fix both 0 and 1/2.
    SeedEndpoints { at: Rational, value: Rational },
    /// The twisted relation `f g f^-1 = g^-1` fails for the given pair.
    RelationFails,
    /// The first map of the pair has no fixed point on the circle, so the
    /// containment statement does not apply.
    FixFEmpty,
    Pl(PlError),
}

impl fmt::Display for CircleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleError::SeedEndpoints { at, value } => {
                write!(f, "seed must fix {at}, but maps it to {value}")
            }
            CircleError::RelationFails => {
                write!(f, "the pair does not satisfy f g f^-1 = g^-1 on the circle")
            }
            CircleError::FixFEmpty => {
                write!(f, "f has no fixed point on the circle")
            }
            CircleError::Pl(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CircleError {}

impl From<PlError> for CircleError {
    fn from(e: PlError) -> CircleError {
        CircleError::Pl(e)
    }
}

/// A circle homeomorphism, stored as the lift whose value at 0 lies in
/// `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleMap {
    lift: PLLift,
}

/// Outcome of a rotation-number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RotationResult {
    /// `value = offset/period mod 1` in lowest terms, certified by the
    /// periodic orbit of `witness`: `F^period(witness) = witness + offset`.
    Exact {
        value: Rational,
        period: u32,
        offset: i64,
        witness: Rational,
    },
    /// The translation number of the normalized lift lies in `[low, high]`.
    /// `width_met` records whether the requested width was reached within
    /// the iteration budget.
    Bracket {
        low: Rational,
        high: Rational,
        width_met: bool,
    },
}

impl RotationResult {
    pub fn exact_value(&self) -> Option<&Rational> {
        match self {
            RotationResult::Exact { value, .. } => Some(value),
            RotationResult::Bracket { .. } => None,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, RotationResult::Exact { value, .. } if value.is_zero())
    }
}

impl fmt::Display for RotationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationResult::Exact { value, .. } => write!(f, "exact {value}"),
            RotationResult::Bracket { low, high, .. } => {
                write!(f, "bracket [{low}, {high}]")
            }
        }
    }
}

impl CircleMap {
    /// Wraps a lift, replacing it by the lift of the same circle map with
    /// value at 0 in `[0, 1)`.
    pub fn new(lift: PLLift) -> CircleMap {
        let k = lift.eval(&rint(0)).floor();
        CircleMap {
            lift: lift.minus_integer(&k),
        }
    }

    pub fn identity() -> CircleMap {
        CircleMap::new(PLLift::identity())
    }

    pub fn rotation(t: &Rational) -> CircleMap {
        CircleMap::new(PLLift::translation(t))
    }

    pub fn lift(&self) -> &PLLift {
        &self.lift
    }

    pub fn compose(&self, other: &CircleMap) -> CircleMap {
        CircleMap::new(self.lift.compose(&other.lift))
    }

    pub fn invert(&self) -> CircleMap {
        CircleMap::new(self.lift.invert())
    }

    pub fn powi(&self, n: i64) -> CircleMap {
        CircleMap::new(self.lift.powi(n))
    }

    /// Exact fixed-point set on the circle: the solutions of
    /// `F(x) = x + k` within one period. With the normalized lift only
    /// `k = 0` and `k = 1` can occur.
    pub fn circle_fix(&self) -> FixedSet {
        let direct = self.lift.fixed_set();
        let shifted = self.lift.minus_integer(&rint(1)).fixed_set();
        direct.union(&shifted)
    }

    /// Rotation number with the default iteration budget.
    pub fn rotation_number(&self, q_max: u32, width: &Rational) -> RotationResult {
        self.rotation_number_with_budget(q_max, width, DEFAULT_ITERATION_BUDGET)
    }

    /// Searches periodic orbits of period up to `q_max` through exact
    /// fixed-set computations; on success the rotation number is exact.
    /// Otherwise iterates the lift at 0 and returns the intersection of the
    /// standard brackets `[(F^n(0) - 1)/n, (F^n(0) + 1)/n]` taken at
    /// doubling checkpoints, so a rerun with a larger budget refines the
    /// bracket monotonically.
    pub fn rotation_number_with_budget(
        &self,
        q_max: u32,
        width: &Rational,
        budget: u64,
    ) -> RotationResult {
        assert!(q_max >= 1, "q_max must be at least 1");
        assert!(width.is_positive(), "width must be positive");
        let mut power = self.lift.clone();
        for q in 1..=q_max {
            if q > 1 {
                power = self.lift.compose(&power);
            }
            // integer levels crossed by F^q(x) - x, by continuity
            let displacements: Vec<Rational> = power
                .pieces()
                .iter()
                .map(|p| &p.v - &p.x)
                .collect();
            let min = displacements.iter().min().expect("nonempty").clone();
            let max = displacements.iter().max().expect("nonempty").clone();
            let mut p = min.ceil();
            while p <= max.floor() {
                let translated = power.minus_integer(&p);
                let fixed = translated.fixed_set();
                if let Some(witness) = fixed.min_point() {
                    let offset = to_i64(&p);
                    let value = crate::rational::fract(&(p / rint(q as i64)));
                    return RotationResult::Exact {
                        value,
                        period: q,
                        offset,
                        witness,
                    };
                }
                p += rint(1);
            }
        }
        // no periodic orbit up to q_max: bracket the translation number
        let two = rint(2);
        let needed = (&two / width).ceil();
        let target = if needed <= rint(budget as i64) {
            to_i64(&needed).max(1) as u64
        } else {
            budget
        };
        let mut low: Option<Rational> = None;
        let mut high: Option<Rational> = None;
        let mut point = rint(0);
        let mut checkpoint = 1u64;
        for n in 1..=target {
            point = self.lift.eval(&point);
            if n == checkpoint || n == target {
                let steps = rint(n as i64);
                let l = (&point - rint(1)) / &steps;
                let h = (&point + rint(1)) / &steps;
                low = Some(match low {
                    Some(prev) => prev.max(l),
                    None => l,
                });
                high = Some(match high {
                    Some(prev) => prev.min(h),
                    None => h,
                });
                checkpoint = checkpoint.saturating_mul(2);
            }
        }
        let low = low.expect("at least one checkpoint");
        let high = high.expect("at least one checkpoint");
        let width_met = &high - &low <= *width;
        RotationResult::Bracket {
            low,
            high,
            width_met,
        }
    }

    /// Checks that the rotation number of `self^n` is consistent with `n`
    /// times the rotation number of `self`: exact equality mod 1 when both
    /// are exact, bracket intersection (up to an integer shift) otherwise.
    pub fn power_rotation_check(&self, n: i64, q_max: u32, width: &Rational) -> bool {
        assert!(n != 0, "the power must be nonzero");
        let rot_self = self.rotation_number(q_max, width);
        let rot_power = self.powi(n).rotation_number(q_max, width);
        let n_rat = rint(n);
        match (&rot_self, &rot_power) {
            (
                RotationResult::Exact { value: v1, .. },
                RotationResult::Exact { value: v2, .. },
            ) => (&n_rat * v1 - v2).is_integer(),
            (
                RotationResult::Exact { value: v1, .. },
                RotationResult::Bracket { low, high, .. },
            ) => brackets_meet_mod_one(&(&n_rat * v1), &(&n_rat * v1), low, high),
            (
                RotationResult::Bracket { low, high, .. },
                RotationResult::Exact { value: v2, .. },
            ) => {
                let (l, h) = scale_bracket(&n_rat, low, high);
                brackets_meet_mod_one(&l, &h, v2, v2)
            }
            (
                RotationResult::Bracket {
                    low: l1, high: h1, ..
                },
                RotationResult::Bracket {
                    low: l2, high: h2, ..
                },
            ) => {
                let (l, h) = scale_bracket(&n_rat, l1, h1);
                brackets_meet_mod_one(&l, &h, l2, h2)
            }
        }
    }
}

fn to_i64(x: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    x.to_integer().to_i64().expect("value fits in 64 bits")
}

fn scale_bracket(n: &Rational, low: &Rational, high: &Rational) -> (Rational, Rational) {
    if n.is_positive() {
        (n * low, n * high)
    } else {
        (n * high, n * low)
    }
}

/// Whether `[a1, b1]` and `[a2 + k, b2 + k]` intersect for some integer `k`.
fn brackets_meet_mod_one(
    a1: &Rational,
    b1: &Rational,
    a2: &Rational,
    b2: &Rational,
) -> bool {
    // need an integer k with a1 - b2 <= k <= b1 - a2
    (b1 - a2).floor() >= (a1 - b2).ceil()
}

/// Rotation numbers for a whole corpus of maps; the members are
/// independent, so this is data-parallel when the `parallel` feature is
/// enabled. Results keep the input order.
pub fn rotation_numbers(
    maps: &[CircleMap],
    q_max: u32,
    width: &Rational,
) -> Vec<RotationResult> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        maps.par_iter()
            .map(|m| m.rotation_number(q_max, width))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        maps.iter()
            .map(|m| m.rotation_number(q_max, width))
            .collect()
    }
}

/// Sequential twin of [`rotation_numbers`], kept available so the two
/// execution modes can be benchmarked against each other.
pub fn rotation_numbers_sequential(
    maps: &[CircleMap],
    q_max: u32,
    width: &Rational,
) -> Vec<RotationResult> {
    maps.iter()
        .map(|m| m.rotation_number(q_max, width))
        .collect()
}

/// Builds the canonical twisted pair over a half-period seed: `f` is the
/// half turn, and `g` agrees with `h` on `[0, 1/2]` and with
/// `f h^-1 f^-1` on `[1/2, 1]`. The seed must fix 0 and 1/2. The output
/// satisfies `f g f^-1 = g^-1` exactly.
pub fn twisted_pair(h: &PLLift) -> Result<(CircleMap, CircleMap), CircleError> {
    let half = rat(1, 2);
    for point in [rint(0), half.clone()] {
        let value = h.eval(&point);
        if value != point {
            return Err(CircleError::SeedEndpoints { at: point, value });
        }
    }
    let g = glue_half_period(h)?;
    let f = CircleMap::rotation(&half);
    Ok((f, CircleMap::new(g)))
}

/// Extends a map of `[0, 1/2]` fixing its endpoints to the lift that
/// commutes with the half turn: `F(x + 1/2) = F(x) + 1/2`.
pub fn half_turn_commuting_extension(h: &PLLift) -> Result<PLLift, CircleError> {
    let half = rat(1, 2);
    for point in [rint(0), half.clone()] {
        let value = h.eval(&point);
        if value != point {
            return Err(CircleError::SeedEndpoints { at: point, value });
        }
    }
    let mut pieces = clip_to_half(h.pieces());
    for p in clip_to_half(h.pieces()) {
        pieces.push(Piece::new(
            &p.x + &half,
            &p.v + &half,
            p.s.clone(),
        ));
    }
    Ok(PLLift::new(pieces)?)
}

/// Glue for the twisted pair: takes `h` on `[0, 1/2)` and appends the
/// half-turn conjugate of `h^-1` on `[1/2, 1)`.
fn glue_half_period(h: &PLLift) -> Result<PLLift, CircleError> {
    let half = rat(1, 2);
    let mut pieces = clip_to_half(h.pieces());
    let inv = h.invert();
    for p in clip_to_half(inv.pieces()) {
        pieces.push(Piece::new(&p.x + &half, &p.v + &half, p.s.clone()));
    }
    Ok(PLLift::new(pieces)?)
}

/// Pieces of the map restricted to `[0, 1/2)`, splitting at 1/2 if needed.
fn clip_to_half(pieces: &[Piece]) -> Vec<Piece> {
    let half = rat(1, 2);
    let mut out = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        if p.x >= half {
            break;
        }
        let end = pieces
            .get(i + 1)
            .map(|n| n.x.clone())
            .unwrap_or_else(|| rint(1));
        out.push(p.clone());
        if end > half {
            break;
        }
    }
    out
}

/// Per-arc data for the containment report: one complementary arc of
/// `Fix(f)` and the closed portions of `Fix(g^2)` meeting it.
#[derive(Clone, Debug)]
pub struct ArcMeeting {
    pub arc: (Rational, Rational),
    pub meets: Vec<(Rational, Rational)>,
}

/// Report of [`twisted_fix_containment`].
#[derive(Clone, Debug)]
pub struct ContainmentReport {
    pub fix_f: FixedSet,
    pub fix_g2: FixedSet,
    pub contained: bool,
    pub arcs: Vec<ArcMeeting>,
}

/// Raw containment data with no preconditions: fixed sets of `f` and `g^2`
/// and whether `Fix(f) ⊆ Fix(g^2)` on the circle.
pub fn fix_containment_data(f: &CircleMap, g: &CircleMap) -> (FixedSet, FixedSet, bool) {
    let fix_f = f.circle_fix();
    let fix_g2 = g.powi(2).circle_fix();
    let contained = fix_f.is_subset_of(&fix_g2);
    (fix_f, fix_g2, contained)
}

/// Checks `f g f^-1 = g^-1` exactly as circle maps.
pub fn twisted_relation_holds(f: &CircleMap, g: &CircleMap) -> bool {
    let conj = f.compose(g).compose(&f.invert());
    conj == g.invert()
}

/// Verifies `Fix(f) ⊆ Fix(g^2)` for a pair satisfying the twisted relation
/// with `Fix(f)` nonempty, and reports, for each arc complementary to
/// `Fix(f)`, the portions of `Fix(g^2)` meeting it.
pub fn twisted_fix_containment(
    f: &CircleMap,
    g: &CircleMap,
) -> Result<ContainmentReport, CircleError> {
    if !twisted_relation_holds(f, g) {
        return Err(CircleError::RelationFails);
    }
    let (fix_f, fix_g2, contained) = fix_containment_data(f, g);
    if fix_f.is_empty() {
        return Err(CircleError::FixFEmpty);
    }
    let arcs = fix_f
        .complement_arcs()
        .into_iter()
        .map(|(start, end)| ArcMeeting {
            meets: fix_g2.meet_open_arc(&start, &end),
            arc: (start, end),
        })
        .collect();
    Ok(ContainmentReport {
        fix_f,
        fix_g2,
        contained,
        arcs,
    })
}
