//! Constructive actions of the plane group `Z^2 = <f, g | f g f^-1 = g>`
//! and the twisted group `K = <f, g | f g f^-1 = g^-1>` on the real line.
//!
//! `f` is the unit translation `x -> x + d` with `d = +1` or `-1`. A seed
//! homeomorphism `h` of the interval `I` joining the base point and its
//! image determines `g` uniquely: on the translate `f^n(I)` it must equal
//! `f^n h^{e^n} f^-n`, where `e` is `+1` for `Z^2` and `-1` for `K`. The
//! global map is materialized on a finite window of translates as a
//! [`WindowedMap`]; windows can be widened on demand and agree on overlaps.
//!
//! Everything here works with maps on closed rational intervals in absolute
//! coordinates ([`IntervalMap`]), not with the periodic maps of
//! [`crate::plmap`].

use std::fmt;

use num_traits::{Signed, Zero};

use crate::plmap::Piece;
use crate::rational::{rint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionsError {
    EmptyMap,
    DuplicateBreakpoint(Rational),
    BreakpointOutsideDomain(Rational),
    /// The first breakpoint must sit at the start of the domain.
    MissingStartBreakpoint { expected: Rational },
    Discontinuity { at: Rational },
    NonIncreasing { at: Rational },
    /// The seed must fix both endpoints of its interval.
    SeedEndpoint { at: Rational, value: Rational },
    /// The seed interval must join the base point and its image.
    SeedDomain { expected_lo: Rational, expected_hi: Rational },
    /// `f` must translate by +1 or -1.
    BadDirection(i64),
    /// A window must be a nonempty integer range.
    BadWindow { lo: i64, hi: i64 },
    /// An orbit evaluation left the window; widen it and retry.
    OrbitEscape { at: Rational },
    /// The maps passed to the abelian fixed-point search must share one
    /// domain.
    DomainMismatch,
    /// Two maps fail to commute where both composition orders are defined.
    NotCommuting { first: usize, second: usize },
    /// Word atoms are `f` and `g` with optional caret exponents.
    BadWordAtom { position: usize, token: String },
}

impl fmt::Display for ActionsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionsError::EmptyMap => write!(f, "no pieces given"),
            ActionsError::DuplicateBreakpoint(x) => {
                write!(f, "duplicate breakpoint {x}")
            }
            ActionsError::BreakpointOutsideDomain(x) => {
                write!(f, "breakpoint {x} outside the domain")
            }
            ActionsError::MissingStartBreakpoint { expected } => {
                write!(f, "first breakpoint must be {expected}")
            }
            ActionsError::Discontinuity { at } => write!(f, "discontinuity at {at}"),
            ActionsError::NonIncreasing { at } => {
                write!(f, "non-positive slope at {at}")
            }
            ActionsError::SeedEndpoint { at, value } => {
                write!(f, "seed must fix {at}, but maps it to {value}")
            }
            ActionsError::SeedDomain {
                expected_lo,
                expected_hi,
            } => write!(f, "seed domain must be [{expected_lo}, {expected_hi}]"),
            ActionsError::BadDirection(d) => {
                write!(f, "direction must be +1 or -1, got {d}")
            }
            ActionsError::BadWindow { lo, hi } => {
                write!(f, "invalid window [{lo}, {hi}]")
            }
            ActionsError::OrbitEscape { at } => {
                write!(f, "orbit reached {at}, outside the window; widen it")
            }
            ActionsError::DomainMismatch => {
                write!(f, "maps must share one domain")
            }
            ActionsError::NotCommuting { first, second } => {
                write!(f, "maps {first} and {second} do not commute")
            }
            ActionsError::BadWordAtom { position, token } => {
                write!(f, "atom {position}: expected f or g, got `{token}`")
            }
        }
    }
}

impl std::error::Error for ActionsError {}

/// A continuous, strictly increasing PL map on a closed rational interval,
/// in absolute coordinates and canonical form (no collinear neighbours).
/// The value at the right endpoint is the limit of the last piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalMap {
    lo: Rational,
    hi: Rational,
    pieces: Vec<Piece>,
}

impl IntervalMap {
    pub fn new(
        lo: Rational,
        hi: Rational,
        mut pieces: Vec<Piece>,
    ) -> Result<IntervalMap, ActionsError> {
        if pieces.is_empty() {
            return Err(ActionsError::EmptyMap);
        }
        pieces.sort_by(|a, b| a.x.cmp(&b.x));
        for w in pieces.windows(2) {
            if w[0].x == w[1].x {
                return Err(ActionsError::DuplicateBreakpoint(w[0].x.clone()));
            }
        }
        for p in &pieces {
            if p.x < lo || p.x >= hi {
                return Err(ActionsError::BreakpointOutsideDomain(p.x.clone()));
            }
            if !p.s.is_positive() {
                return Err(ActionsError::NonIncreasing { at: p.x.clone() });
            }
        }
        if pieces[0].x != lo {
            return Err(ActionsError::MissingStartBreakpoint { expected: lo });
        }
        for i in 0..pieces.len() - 1 {
            let reached = pieces[i].value_at(&pieces[i + 1].x);
            if reached != pieces[i + 1].v {
                return Err(ActionsError::Discontinuity {
                    at: pieces[i + 1].x.clone(),
                });
            }
        }
        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            match merged.last() {
                Some(prev) if prev.s == p.s => {}
                _ => merged.push(p),
            }
        }
        Ok(IntervalMap {
            lo,
            hi,
            pieces: merged,
        })
    }

    pub fn identity(lo: Rational, hi: Rational) -> IntervalMap {
        IntervalMap {
            pieces: vec![Piece::new(lo.clone(), lo.clone(), rint(1))],
            lo,
            hi,
        }
    }

    /// The translation `x -> x + amount` restricted to `[lo, hi]`.
    pub fn translation(lo: Rational, hi: Rational, amount: &Rational) -> IntervalMap {
        IntervalMap {
            pieces: vec![Piece::new(lo.clone(), &lo + amount, rint(1))],
            lo,
            hi,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn piece_end(&self, i: usize) -> Rational {
        self.pieces
            .get(i + 1)
            .map(|p| p.x.clone())
            .unwrap_or_else(|| self.hi.clone())
    }

    /// Value at `x`, which must lie in the domain; the right endpoint takes
    /// the limit value.
    pub fn eval(&self, x: &Rational) -> Rational {
        assert!(self.contains(x), "{x} outside [{}, {}]", self.lo, self.hi);
        let idx = self.pieces.partition_point(|p| p.x <= *x);
        let idx = idx.saturating_sub(1).min(self.pieces.len() - 1);
        self.pieces[idx].value_at(x)
    }

    pub fn end_value(&self) -> Rational {
        self.eval(&self.hi.clone())
    }

    /// Whether the map sends its domain onto itself fixing both endpoints.
    pub fn fixes_endpoints(&self) -> bool {
        self.pieces[0].v == self.lo && self.end_value() == self.hi
    }

    /// Both coordinates translated by `amount`.
    pub fn translated(&self, amount: &Rational) -> IntervalMap {
        IntervalMap {
            lo: &self.lo + amount,
            hi: &self.hi + amount,
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece::new(&p.x + amount, &p.v + amount, p.s.clone()))
                .collect(),
        }
    }

    /// Exact inverse, defined on the image interval.
    pub fn invert(&self) -> IntervalMap {
        IntervalMap {
            lo: self.pieces[0].v.clone(),
            hi: self.end_value(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece::new(p.v.clone(), p.x.clone(), p.s.recip()))
                .collect(),
        }
    }

    /// The unique preimage of `y`, which must lie in the image interval.
    pub fn preimage(&self, y: &Rational) -> Rational {
        self.invert().eval(y)
    }

    /// Exact composition `self ∘ other` on the largest interval where it is
    /// defined, or `None` when no point of `other`'s domain maps into
    /// `self`'s domain with positive length.
    pub fn compose(&self, other: &IntervalMap) -> Option<IntervalMap> {
        let img_lo = other.pieces[0].v.clone();
        let img_hi = other.end_value();
        let lo = img_lo.clone().max(self.lo.clone());
        let hi = img_hi.clone().min(self.hi.clone());
        if lo >= hi {
            return None;
        }
        let dom_lo = other.preimage(&lo);
        let dom_hi = other.preimage(&hi);
        let mut cuts: Vec<Rational> = other
            .pieces
            .iter()
            .map(|p| p.x.clone())
            .filter(|x| *x >= dom_lo && *x < dom_hi)
            .collect();
        for p in &self.pieces {
            if p.x >= lo && p.x < hi {
                let t = other.preimage(&p.x);
                if t >= dom_lo && t < dom_hi {
                    cuts.push(t);
                }
            }
        }
        cuts.push(dom_lo.clone());
        cuts.sort();
        cuts.dedup();
        let pieces = cuts
            .into_iter()
            .map(|t| {
                let mid = other.eval(&t);
                Piece::new(
                    t.clone(),
                    self.eval(&mid),
                    self.slope_after(&mid) * other.slope_after(&t),
                )
            })
            .collect();
        Some(
            IntervalMap::new(dom_lo, dom_hi, pieces)
                .expect("composition of continuous maps is continuous"),
        )
    }

    /// Slope of the piece to the right of `x` (x strictly inside the
    /// domain or at its start).
    fn slope_after(&self, x: &Rational) -> Rational {
        let idx = self.pieces.partition_point(|p| p.x <= *x);
        let idx = idx.saturating_sub(1).min(self.pieces.len() - 1);
        self.pieces[idx].s.clone()
    }

    /// Exact equality of the two maps restricted to `[lo, hi]`, which must
    /// lie inside both domains.
    pub fn agrees_with(&self, other: &IntervalMap, lo: &Rational, hi: &Rational) -> bool {
        if lo >= hi {
            return true;
        }
        let mut cuts: Vec<Rational> = Vec::new();
        for m in [self, other] {
            cuts.extend(
                m.pieces
                    .iter()
                    .map(|p| p.x.clone())
                    .filter(|x| x >= lo && x < hi),
            );
        }
        cuts.push(lo.clone());
        cuts.sort();
        cuts.dedup();
        for t in &cuts {
            if self.eval(t) != other.eval(t) || self.slope_after(t) != other.slope_after(t) {
                return false;
            }
        }
        self.eval(hi) == other.eval(hi)
    }

    /// Closed components of `{x : self(x) = x}` within the domain.
    pub fn fixed_components(&self) -> Vec<(Rational, Rational)> {
        let mut raw = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let end = self.piece_end(i);
            let slope = &p.s - rint(1);
            let at_start = &p.v - &p.x;
            if slope.is_zero() {
                if at_start.is_zero() {
                    raw.push((p.x.clone(), end));
                }
            } else {
                let root = &p.x - at_start / slope;
                if root >= p.x && root < end {
                    raw.push((root.clone(), root));
                }
            }
        }
        if self.end_value() == self.hi {
            raw.push((self.hi.clone(), self.hi.clone()));
        }
        merge_components(raw)
    }
}

/// Sorts closed components and merges the ones that touch.
pub fn merge_components(mut raw: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    raw.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (lo, hi) in raw {
        match merged.last_mut() {
            Some(prev) if lo <= prev.1 => {
                if hi > prev.1 {
                    prev.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
}

/// Intersection of two sorted disjoint closed-component lists.
pub fn intersect_components(
    a: &[(Rational, Rational)],
    b: &[(Rational, Rational)],
) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for (alo, ahi) in a {
        for (blo, bhi) in b {
            let lo = alo.max(blo).clone();
            let hi = ahi.min(bhi).clone();
            if lo <= hi {
                out.push((lo, hi));
            }
        }
    }
    merge_components(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `f g f^-1 = g` (twist exponent +1).
    Z2,
    /// `f g f^-1 = g^-1` (twist exponent -1).
    K,
}

impl GroupKind {
    pub fn twist(self) -> i64 {
        match self {
            GroupKind::Z2 => 1,
            GroupKind::K => -1,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Z2 => write!(f, "Z2"),
            GroupKind::K => write!(f, "K"),
        }
    }
}

/// The data determining an action: the group, the direction of the unit
/// translation `f`, the base point, and the seed homeomorphism of the
/// interval joining the base point and its image.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    pub group: GroupKind,
    pub direction: i64,
    pub base_point: Rational,
    pub seed: IntervalMap,
}

impl ActionSpec {
    pub fn new(
        group: GroupKind,
        direction: i64,
        base_point: Rational,
        seed: IntervalMap,
    ) -> Result<ActionSpec, ActionsError> {
        if direction != 1 && direction != -1 {
            return Err(ActionsError::BadDirection(direction));
        }
        let expected_lo = if direction == 1 {
            base_point.clone()
        } else {
            &base_point - rint(1)
        };
        let expected_hi = &expected_lo + rint(1);
        if *seed.lo() != expected_lo || *seed.hi() != expected_hi {
            return Err(ActionsError::SeedDomain {
                expected_lo,
                expected_hi,
            });
        }
        for at in [seed.lo().clone(), seed.hi().clone()] {
            let value = seed.eval(&at);
            if value != at {
                return Err(ActionsError::SeedEndpoint { at, value });
            }
        }
        Ok(ActionSpec {
            group,
            direction,
            base_point,
            seed,
        })
    }
}

/// A map of the line described exactly on a finite window of unit blocks.
/// Blocks are stored in spatial order and agree at shared endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedMap {
    window: (i64, i64),
    /// Translation amount of the distinguished `f` (used by
    /// [`eval_action`]); `+1` or `-1`.
    f_step: Rational,
    blocks: Vec<IntervalMap>,
}

impl WindowedMap {
    /// Assembles a windowed map from blocks in spatial order; adjacent
    /// blocks must share endpoints with matching values.
    pub fn from_blocks(
        window: (i64, i64),
        f_step: Rational,
        blocks: Vec<IntervalMap>,
    ) -> Result<WindowedMap, ActionsError> {
        if blocks.is_empty() {
            return Err(ActionsError::EmptyMap);
        }
        for w in blocks.windows(2) {
            if w[0].hi() != w[1].lo() {
                return Err(ActionsError::DomainMismatch);
            }
            if w[0].end_value() != w[1].eval(w[1].lo()) {
                return Err(ActionsError::Discontinuity {
                    at: w[1].lo().clone(),
                });
            }
        }
        Ok(WindowedMap {
            window,
            f_step,
            blocks,
        })
    }

    /// Translations of the line restricted to the window `[lo, hi + 1]` of
    /// unit blocks.
    pub fn translation(window: (i64, i64), amount: &Rational) -> WindowedMap {
        let blocks = (window.0..=window.1)
            .map(|n| IntervalMap::translation(rint(n), rint(n + 1), amount))
            .collect();
        WindowedMap {
            window,
            f_step: rint(1),
            blocks,
        }
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn blocks(&self) -> &[IntervalMap] {
        &self.blocks
    }

    pub fn f_step(&self) -> &Rational {
        &self.f_step
    }

    pub fn domain(&self) -> (Rational, Rational) {
        (
            self.blocks[0].lo().clone(),
            self.blocks.last().unwrap().hi().clone(),
        )
    }

    /// The window as one interval map (block boundaries become ordinary
    /// breakpoints).
    pub fn flatten(&self) -> IntervalMap {
        let (lo, hi) = self.domain();
        let mut pieces = Vec::new();
        for b in &self.blocks {
            pieces.extend(b.pieces().iter().cloned());
        }
        IntervalMap::new(lo, hi, pieces).expect("blocks are contiguous and continuous")
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, ActionsError> {
        let (lo, hi) = self.domain();
        if *x < lo || *x > hi {
            return Err(ActionsError::OrbitEscape { at: x.clone() });
        }
        Ok(self.flatten().eval(x))
    }

    /// Exact agreement with another windowed map on the overlap of their
    /// domains (trivially true when the overlap is empty or a point).
    pub fn agrees_on_overlap(&self, other: &WindowedMap) -> bool {
        let (alo, ahi) = self.domain();
        let (blo, bhi) = other.domain();
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        if lo >= hi {
            return true;
        }
        self.flatten().agrees_with(&other.flatten(), &lo, &hi)
    }
}

/// Materializes the action map `g` on the window `[n_lo, n_hi]` of blocks:
/// on the block `f^n(I)` it is `f^n h^{e^n} f^-n`, i.e. the seed (or its
/// inverse, for the twisted group on odd blocks) translated by `n`
/// directions.
pub fn extend_action(
    spec: &ActionSpec,
    window: (i64, i64),
) -> Result<WindowedMap, ActionsError> {
    let (n_lo, n_hi) = window;
    if n_lo > n_hi {
        return Err(ActionsError::BadWindow { lo: n_lo, hi: n_hi });
    }
    let inverse_seed = spec.seed.invert();
    let mut indices: Vec<i64> = (n_lo..=n_hi).collect();
    if spec.direction == -1 {
        // translates move left as n grows; spatial order reverses
        indices.reverse();
    }
    let blocks = indices
        .into_iter()
        .map(|n| {
            let use_inverse = spec.group == GroupKind::K && n.rem_euclid(2) == 1;
            let conjugand = if use_inverse {
                &inverse_seed
            } else {
                &spec.seed
            };
            conjugand.translated(&rint(n * spec.direction))
        })
        .collect();
    WindowedMap::from_blocks(window, rint(spec.direction), blocks)
}

/// One atom of a word in the two action generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionAtom {
    F(i64),
    G(i64),
}

/// Parses words like `f g^-1 f^2`; errors carry the 1-based atom position.
pub fn parse_action_word(text: &str) -> Result<Vec<ActionAtom>, ActionsError> {
    let mut atoms = Vec::new();
    for (i, token) in text.split_whitespace().enumerate() {
        let position = i + 1;
        let (symbol, exponent) = match token.split_once('^') {
            Some((s, e)) => {
                let exponent: i64 = e.parse().map_err(|_| ActionsError::BadWordAtom {
                    position,
                    token: token.to_string(),
                })?;
                (s, exponent)
            }
            None => (token, 1),
        };
        match symbol {
            "f" => atoms.push(ActionAtom::F(exponent)),
            "g" => atoms.push(ActionAtom::G(exponent)),
            _ => {
                return Err(ActionsError::BadWordAtom {
                    position,
                    token: token.to_string(),
                })
            }
        }
    }
    Ok(atoms)
}

/// Exact orbit evaluation of a word in `f` and `g` at `x`. The rightmost
/// atom applies first; every intermediate point must stay inside the
/// window's domain.
pub fn eval_action(
    map: &WindowedMap,
    word: &[ActionAtom],
    x: &Rational,
) -> Result<Rational, ActionsError> {
    let flat = map.flatten();
    let flat_inv = flat.invert();
    let (lo, hi) = map.domain();
    let check = |p: Rational| {
        if p < lo || p > hi {
            Err(ActionsError::OrbitEscape { at: p })
        } else {
            Ok(p)
        }
    };
    let mut point = check(x.clone())?;
    for atom in word.iter().rev() {
        match atom {
            ActionAtom::F(k) => {
                point = check(&point + rint(*k) * map.f_step())?;
            }
            ActionAtom::G(k) => {
                let m = if *k < 0 { &flat_inv } else { &flat };
                for _ in 0..k.unsigned_abs() {
                    if !m.contains(&point) {
                        return Err(ActionsError::OrbitEscape { at: point });
                    }
                    point = check(m.eval(&point))?;
                }
            }
        }
    }
    Ok(point)
}

/// Verification record for the basic fixed-point facts on a window.
#[derive(Clone, Debug)]
pub struct FixLemmaReport {
    /// Every window translate of the seed endpoints is fixed by `g`.
    pub orbit_fixed: bool,
    /// `f` is a nontrivial translation, so it has no fixed point.
    pub fix_f_empty: bool,
    /// `f g f^-1` equals `g^e` exactly on the window overlap.
    pub relation_exact: bool,
}

impl FixLemmaReport {
    pub fn all_pass(&self) -> bool {
        self.orbit_fixed && self.fix_f_empty && self.relation_exact
    }
}

impl fmt::Display for FixLemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "fail" };
        writeln!(f, "endpoint orbit fixed by g: {}", mark(self.orbit_fixed))?;
        writeln!(f, "f is fixed-point free:     {}", mark(self.fix_f_empty))?;
        write!(
            f,
            "f g f^-1 = g^e on window:  {}",
            mark(self.relation_exact)
        )
    }
}

/// Whether `f g f^-1 = g^e` holds exactly on the window (compared on the
/// overlap of the shifted and unshifted domains).
pub fn relation_holds(map: &WindowedMap, twist: i64) -> bool {
    let flat = map.flatten();
    let conj = flat.translated(map.f_step());
    let target = if twist == 1 { flat } else { flat.invert() };
    let lo = conj.lo().clone().max(target.lo().clone());
    let hi = conj.hi().clone().min(target.hi().clone());
    conj.agrees_with(&target, &lo, &hi)
}

/// Runs the three checks of [`FixLemmaReport`] for an extended action.
pub fn check_fix_lemmas(
    spec: &ActionSpec,
    window: (i64, i64),
) -> Result<FixLemmaReport, ActionsError> {
    let map = extend_action(spec, window)?;
    let flat = map.flatten();
    let (lo, hi) = map.domain();
    let mut orbit_fixed = true;
    let mut point = lo.clone();
    while point <= hi {
        if flat.eval(&point) != point {
            orbit_fixed = false;
        }
        point += rint(1);
    }
    Ok(FixLemmaReport {
        orbit_fixed,
        fix_f_empty: spec.direction != 0,
        relation_exact: relation_holds(&map, spec.group.twist()),
    })
}

/// Finds the common exact fixed set of pairwise-commuting windowed maps
/// over one shared domain, or reports that none exists within the window.
/// Commutation is prechecked by exact composition in both orders.
pub fn abelian_fix_witness(
    maps: &[&WindowedMap],
) -> Result<Vec<(Rational, Rational)>, ActionsError> {
    if maps.is_empty() {
        return Ok(Vec::new());
    }
    let domain = maps[0].domain();
    for m in maps.iter().skip(1) {
        if m.domain() != domain {
            return Err(ActionsError::DomainMismatch);
        }
    }
    let flats: Vec<IntervalMap> = maps.iter().map(|m| m.flatten()).collect();
    for i in 0..flats.len() {
        for j in (i + 1)..flats.len() {
            let ij = flats[i].compose(&flats[j]);
            let ji = flats[j].compose(&flats[i]);
            let agree = match (&ij, &ji) {
                (Some(a), Some(b)) => {
                    let lo = a.lo().clone().max(b.lo().clone());
                    let hi = a.hi().clone().min(b.hi().clone());
                    a.agrees_with(b, &lo, &hi)
                }
                // both orders push every point off the window: nothing to
                // compare
                (None, None) => true,
                _ => false,
            };
            if !agree {
                return Err(ActionsError::NotCommuting {
                    first: i,
                    second: j,
                });
            }
        }
    }
    let mut common = flats[0].fixed_components();
    for f in flats.iter().skip(1) {
        common = intersect_components(&common, &f.fixed_components());
        if common.is_empty() {
            break;
        }
    }
    Ok(common)
}
