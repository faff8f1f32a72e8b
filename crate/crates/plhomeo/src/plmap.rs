//! Piecewise-linear maps with exact rational data on the fundamental domain
//! `[0, 1)`.
//!
//! Two kinds of maps share the same piece layout:
//!
//! * [`PLFunc`] — a 1-periodic function `t(x + 1) = t(x)`;
//! * [`PLLift`] — an increasing homeomorphism of the line with
//!   `F(x + 1) = F(x) + 1`, i.e. the lift of a circle homeomorphism.
//!
//! Both are stored in a canonical form (sorted breakpoints starting at 0,
//! no two consecutive collinear pieces), so structural equality decides map
//! equality exactly.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::fixedset::FixedSet;
use crate::rational::{fract, rat, rint, Rational};

/// One affine piece: the map `x -> v + s * (x - x0)` on `[x0, next_x0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub x: Rational,
    pub v: Rational,
    pub s: Rational,
}

impl Piece {
    pub fn new(x: Rational, v: Rational, s: Rational) -> Piece {
        Piece { x, v, s }
    }

    pub(crate) fn value_at(&self, x: &Rational) -> Rational {
        &self.v + &self.s * (x - &self.x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlError {
    /// No pieces at all.
    Empty,
    /// Two pieces start at the same breakpoint (a zero-length piece).
    DuplicateBreakpoint(Rational),
    /// A breakpoint lies outside the fundamental domain `[0, 1)`.
    BreakpointOutOfRange(Rational),
    /// The first breakpoint is not 0, so the pieces do not cover `[0, 1)`.
    MissingZeroBreakpoint,
    /// Adjacent pieces (or the wraparound) disagree about a value.
    Discontinuity {
        at: Rational,
        left: Rational,
        right: Rational,
    },
    /// A lift piece has slope <= 0.
    NonIncreasing { at: Rational },
}

impl fmt::Display for PlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlError::Empty => write!(f, "no pieces given"),
            PlError::DuplicateBreakpoint(x) => {
                write!(f, "duplicate breakpoint {x} (zero-length piece)")
            }
            PlError::BreakpointOutOfRange(x) => {
                write!(f, "breakpoint {x} outside [0, 1)")
            }
            PlError::MissingZeroBreakpoint => {
                write!(f, "first breakpoint must be 0 so pieces cover [0, 1)")
            }
            PlError::Discontinuity { at, left, right } => {
                write!(f, "discontinuity at {at}: {left} from the left, {right} from the right")
            }
            PlError::NonIncreasing { at } => {
                write!(f, "non-positive slope at breakpoint {at}; lifts must be increasing")
            }
        }
    }
}

impl std::error::Error for PlError {}

/// Sorts, validates and canonicalizes raw pieces. `wrap` is the amount the
/// map gains per period: 0 for periodic functions, 1 for lifts.
fn normalize(
    mut pieces: Vec<Piece>,
    wrap: &Rational,
    require_increasing: bool,
) -> Result<Vec<Piece>, PlError> {
    if pieces.is_empty() {
        return Err(PlError::Empty);
    }
    pieces.sort_by(|a, b| a.x.cmp(&b.x));
    for w in pieces.windows(2) {
        if w[0].x == w[1].x {
            return Err(PlError::DuplicateBreakpoint(w[0].x.clone()));
        }
    }
    for p in &pieces {
        if p.x.is_negative() || p.x >= rint(1) {
            return Err(PlError::BreakpointOutOfRange(p.x.clone()));
        }
    }
    if !pieces[0].x.is_zero() {
        return Err(PlError::MissingZeroBreakpoint);
    }
    if require_increasing {
        for p in &pieces {
            if !p.s.is_positive() {
                return Err(PlError::NonIncreasing { at: p.x.clone() });
            }
        }
    }
    // continuity at interior junctions and at the wraparound
    for i in 0..pieces.len() {
        let (end, expected) = if i + 1 < pieces.len() {
            (pieces[i + 1].x.clone(), pieces[i + 1].v.clone())
        } else {
            (rint(1), &pieces[0].v + wrap)
        };
        let reached = pieces[i].value_at(&end);
        if reached != expected {
            return Err(PlError::Discontinuity {
                at: end,
                left: reached,
                right: expected,
            });
        }
    }
    // merge collinear neighbours; continuity makes equal slopes sufficient
    let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        match merged.last() {
            Some(prev) if prev.s == p.s => {}
            _ => merged.push(p),
        }
    }
    Ok(merged)
}

/// Index of the piece whose half-open interval contains `r` (0 <= r < 1).
fn piece_index(pieces: &[Piece], r: &Rational) -> usize {
    pieces.partition_point(|p| p.x <= *r) - 1
}

fn eval_pieces(pieces: &[Piece], wrap: &Rational, x: &Rational) -> Rational {
    let k = x.floor();
    let r = x - &k;
    pieces[piece_index(pieces, &r)].value_at(&r) + k * wrap
}

fn slope_pieces(pieces: &[Piece], x: &Rational) -> Rational {
    let r = fract(x);
    pieces[piece_index(pieces, &r)].s.clone()
}

/// Rebases pieces that cover `[t, t + 1)` (where `t = pieces[0].x`) onto the
/// fundamental domain, using quasi-periodicity with increment `wrap`.
fn rebase(pieces: Vec<Piece>, wrap: &Rational) -> Vec<Piece> {
    let start = pieces[0].x.clone();
    let k = start.floor();
    let frac_start = &start - &k;
    let shift = |p: &Piece, m: &Rational| Piece {
        x: &p.x - m,
        v: &p.v - m * wrap,
        s: p.s.clone(),
    };
    if frac_start.is_zero() {
        return pieces.iter().map(|p| shift(p, &k)).collect();
    }
    let boundary = &k + rint(1);
    let mut low = Vec::new(); // pieces (parts) on [t, boundary)
    let mut high = Vec::new(); // pieces (parts) on [boundary, t + 1)
    let end_of = |i: usize| -> Rational {
        if i + 1 < pieces.len() {
            pieces[i + 1].x.clone()
        } else {
            &start + rint(1)
        }
    };
    for (i, p) in pieces.iter().enumerate() {
        let end = end_of(i);
        if end <= boundary {
            low.push(p.clone());
        } else if p.x >= boundary {
            high.push(p.clone());
        } else {
            low.push(p.clone());
            high.push(Piece {
                x: boundary.clone(),
                v: p.value_at(&boundary),
                s: p.s.clone(),
            });
        }
    }
    let mut out: Vec<Piece> = high.iter().map(|p| shift(p, &boundary)).collect();
    out.extend(low.iter().map(|p| shift(p, &k)));
    out
}

/// Breakpoints of `outer ∘ inner` where `inner` is a lift: the breakpoints
/// of `inner` together with the inner-preimages of the breakpoints of
/// `outer`, reduced mod 1.
fn composition_breakpoints(outer: &[Piece], inner: &PLLift) -> Vec<Rational> {
    let mut cuts: Vec<Rational> = inner.pieces().iter().map(|p| p.x.clone()).collect();
    for p in outer {
        cuts.push(fract(&inner.preimage(&p.x)));
    }
    cuts.sort();
    cuts.dedup();
    cuts
}

fn compose_pieces(
    outer: &[Piece],
    outer_wrap: &Rational,
    inner: &PLLift,
) -> Vec<Piece> {
    composition_breakpoints(outer, inner)
        .into_iter()
        .map(|x| {
            let mid = inner.eval(&x);
            Piece {
                v: eval_pieces(outer, outer_wrap, &mid),
                s: slope_pieces(outer, &mid) * inner.slope_at(&x),
                x,
            }
        })
        .collect()
}

/// Exact solutions of `value(x) - subtract·x = level` over one period,
/// returned as closed components (`lo == hi` for isolated points).
fn level_components(
    pieces: &[Piece],
    subtract_identity: bool,
    level: &Rational,
) -> Vec<(Rational, Rational)> {
    let mut raw = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let end = if i + 1 < pieces.len() {
            pieces[i + 1].x.clone()
        } else {
            rint(1)
        };
        let slope = if subtract_identity {
            &p.s - rint(1)
        } else {
            p.s.clone()
        };
        let at_start = if subtract_identity {
            &p.v - &p.x - level
        } else {
            &p.v - level
        };
        if slope.is_zero() {
            if at_start.is_zero() {
                // the whole piece solves the equation; continuity closes the
                // right endpoint (which may be 1)
                raw.push((p.x.clone(), end));
            }
        } else {
            let root = &p.x - at_start / slope;
            if root >= p.x && root < end {
                raw.push((root.clone(), root));
            }
        }
    }
    raw
}

/// A 1-periodic piecewise-linear function with rational breakpoints, values
/// and slopes, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunc {
    pieces: Vec<Piece>,
}

impl PLFunc {
    pub fn new(pieces: Vec<Piece>) -> Result<PLFunc, PlError> {
        Ok(PLFunc {
            pieces: normalize(pieces, &rint(0), false)?,
        })
    }

    pub fn zero() -> PLFunc {
        PLFunc::constant(rint(0))
    }

    pub fn constant(c: Rational) -> PLFunc {
        PLFunc {
            pieces: vec![Piece::new(rint(0), c, rint(0))],
        }
    }

    /// The symmetric triangle wave of period 1 with peaks `+1` at every
    /// integer and `-1` at every half-integer: `-4x + 1` on `[0, 1/2)` and
    /// `4x - 3` on `[1/2, 1)`. Satisfies `w(x + 1/2) = -w(x)`.
    pub fn triangle_wave() -> PLFunc {
        PLFunc {
            pieces: vec![
                Piece::new(rint(0), rint(1), rint(-4)),
                Piece::new(rat(1, 2), rint(-1), rint(4)),
            ],
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        eval_pieces(&self.pieces, &rint(0), x)
    }

    /// Slope of the piece containing `x` (pieces are left-closed).
    pub fn slope_at(&self, x: &Rational) -> Rational {
        slope_pieces(&self.pieces, x)
    }

    /// Exact composition `self ∘ inner`; 1-periodic because `inner` is a
    /// lift.
    pub fn after_lift(&self, inner: &PLLift) -> PLFunc {
        PLFunc::new(compose_pieces(&self.pieces, &rint(0), inner))
            .expect("composition of continuous maps is continuous")
    }

    /// The function `x -> self(x - shift)`.
    pub fn shifted(&self, shift: &Rational) -> PLFunc {
        let moved: Vec<Piece> = self
            .pieces
            .iter()
            .map(|p| Piece::new(&p.x + shift, p.v.clone(), p.s.clone()))
            .collect();
        PLFunc::new(rebase(moved, &rint(0))).expect("shift preserves continuity")
    }

    /// Exact pointwise linear combination on the common breakpoint
    /// refinement. The empty combination is the zero function.
    pub fn combine(terms: &[(Rational, &PLFunc)]) -> PLFunc {
        if terms.is_empty() {
            return PLFunc::zero();
        }
        let mut cuts: Vec<Rational> = Vec::new();
        for (_, f) in terms {
            cuts.extend(f.pieces.iter().map(|p| p.x.clone()));
        }
        cuts.sort();
        cuts.dedup();
        let pieces = cuts
            .into_iter()
            .map(|x| {
                let mut v = rint(0);
                let mut s = rint(0);
                for (c, f) in terms {
                    v += c * f.eval(&x);
                    s += c * f.slope_at(&x);
                }
                Piece::new(x, v, s)
            })
            .collect();
        PLFunc::new(pieces).expect("combination of continuous maps is continuous")
    }

    pub fn add(&self, other: &PLFunc) -> PLFunc {
        PLFunc::combine(&[(rint(1), self), (rint(1), other)])
    }

    pub fn scaled(&self, c: &Rational) -> PLFunc {
        PLFunc::combine(&[(c.clone(), self)])
    }

    pub fn negated(&self) -> PLFunc {
        self.scaled(&rint(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].v.is_zero() && self.pieces[0].s.is_zero()
    }

    /// Exact maximum of `|self(x)|` over one period. A continuous periodic
    /// PL function attains its extrema at breakpoints.
    pub fn sup_abs(&self) -> Rational {
        self.pieces
            .iter()
            .map(|p| p.v.abs())
            .max()
            .expect("canonical maps have at least one piece")
    }

    /// Exact solution set of `self(x) = 0` within one period.
    pub fn zero_set(&self) -> FixedSet {
        FixedSet::from_closed_components(level_components(&self.pieces, false, &rint(0)))
    }
}

/// An orientation-preserving piecewise-linear homeomorphism `F` of the line
/// with `F(x + 1) = F(x) + 1`, stored by its pieces on `[0, 1)` in canonical
/// form. These are exactly the lifts of PL circle homeomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLLift {
    pieces: Vec<Piece>,
}

impl PLLift {
    pub fn new(pieces: Vec<Piece>) -> Result<PLLift, PlError> {
        Ok(PLLift {
            pieces: normalize(pieces, &rint(1), true)?,
        })
    }

    pub fn identity() -> PLLift {
        PLLift::translation(&rint(0))
    }

    pub fn translation(t: &Rational) -> PLLift {
        PLLift {
            pieces: vec![Piece::new(rint(0), t.clone(), rint(1))],
        }
    }

    /// The north-south map of the circle: fixed points 0 (attracting) and
    /// 1/2 (repelling), slopes 1/2, 2, 2, 1/2 around the circle. It obeys
    /// the half-turn inversion law `m(x + 1/2) = m^{-1}(x) + 1/2`.
    pub fn north_south_map() -> PLLift {
        PLLift::new(vec![
            Piece::new(rint(0), rint(0), rat(1, 2)),
            Piece::new(rat(1, 3), rat(1, 6), rint(2)),
            Piece::new(rat(1, 2), rat(1, 2), rint(2)),
            Piece::new(rat(2, 3), rat(5, 6), rat(1, 2)),
        ])
        .expect("built-in map data is valid")
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        eval_pieces(&self.pieces, &rint(1), x)
    }

    pub fn slope_at(&self, x: &Rational) -> Rational {
        slope_pieces(&self.pieces, x)
    }

    /// The unique `x` with `self(x) = y`, computed by per-piece solving
    /// (independently of [`PLLift::invert`]). Breakpoint values are
    /// strictly increasing, so the right piece is found by binary search.
    pub fn preimage(&self, y: &Rational) -> Rational {
        let base = &self.pieces[0].v;
        let offset = (y - base).floor();
        let target = y - &offset;
        let idx = self.pieces.partition_point(|p| p.v <= target) - 1;
        let p = &self.pieces[idx];
        &p.x + (target - &p.v) / &p.s + offset
    }

    /// Exact composition `self ∘ inner`.
    pub fn compose(&self, inner: &PLLift) -> PLLift {
        PLLift::new(compose_pieces(&self.pieces, &rint(1), inner))
            .expect("composition of lifts is a lift")
    }

    /// Exact inverse; `compose` with it gives the identity.
    pub fn invert(&self) -> PLLift {
        let inverted: Vec<Piece> = self
            .pieces
            .iter()
            .map(|p| Piece::new(p.v.clone(), p.x.clone(), p.s.recip()))
            .collect();
        PLLift::new(rebase(inverted, &rint(1))).expect("inverse of a lift is a lift")
    }

    /// `self` composed with itself `n` times (`n < 0` uses the inverse).
    pub fn powi(&self, n: i64) -> PLLift {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = PLLift::identity();
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Subtracts an integer constant, giving another lift of the same
    /// circle map.
    pub fn minus_integer(&self, k: &Rational) -> PLLift {
        assert!(k.is_integer(), "lifts of one circle map differ by integers");
        PLLift {
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece::new(p.x.clone(), &p.v - k, p.s.clone()))
                .collect(),
        }
    }

    /// Exact solution set of `self(x) = x` within one period.
    pub fn fixed_set(&self) -> FixedSet {
        FixedSet::from_closed_components(level_components(&self.pieces, true, &rint(0)))
    }

    /// Exact maximum of `|self(x) - x|` over one period, attained at a
    /// breakpoint because `self(x) - x` is continuous, periodic and PL.
    pub fn sup_displacement(&self) -> Rational {
        self.pieces
            .iter()
            .map(|p| (&p.v - &p.x).abs())
            .max()
            .expect("canonical maps have at least one piece")
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].v.is_zero() && self.pieces[0].s.is_one()
    }

    /// `Some(t)` iff the map is exactly `x -> x + t`.
    pub fn translation_amount(&self) -> Option<Rational> {
        if self.pieces.len() == 1 && self.pieces[0].s.is_one() {
            Some(self.pieces[0].v.clone())
        } else {
            None
        }
    }
}
