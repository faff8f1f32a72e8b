//! Exact fixed-point sets of periodic PL maps, as finite unions of rational
//! points and closed rational intervals within one period.
//!
//! The set described is closed and 1-periodic; we store its trace on the cut
//! `[0, 1]`. A component may end at 1 (the wrap point); canonical form then
//! also lists the component containing 0, so structurally equal sets are
//! exactly the equal periodic sets.

use std::fmt;

use num_traits::Zero;

use crate::plmap::PLLift;
use crate::rational::{rint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Point(Rational),
    /// Closed interval `[lo, hi]` with `lo < hi <= 1`.
    Interval(Rational, Rational),
}

impl Component {
    pub fn lo(&self) -> &Rational {
        match self {
            Component::Point(p) => p,
            Component::Interval(lo, _) => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            Component::Point(p) => p,
            Component::Interval(_, hi) => hi,
        }
    }

    fn contains(&self, x: &Rational) -> bool {
        self.lo() <= x && x <= self.hi()
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Point(p) => write!(f, "{p}"),
            Component::Interval(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSet {
    full: bool,
    components: Vec<Component>,
}

impl FixedSet {
    pub fn empty() -> FixedSet {
        FixedSet {
            full: false,
            components: Vec::new(),
        }
    }

    pub fn full() -> FixedSet {
        FixedSet {
            full: true,
            components: Vec::new(),
        }
    }

    pub fn point(p: Rational) -> FixedSet {
        FixedSet::from_closed_components(vec![(p.clone(), p)])
    }

    /// Canonicalizes closed components `[lo, hi]` (with `0 <= lo <= hi <= 1`,
    /// `lo == hi` for points): sorts, merges touching components, turns the
    /// cover of the whole period into the `full` flag, and materializes the
    /// wrap rule (a component ending at 1 forces one containing 0).
    pub fn from_closed_components(mut raw: Vec<(Rational, Rational)>) -> FixedSet {
        if raw.iter().any(|(_, hi)| *hi == rint(1)) {
            raw.push((rint(0), rint(0)));
        }
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
        if merged.len() == 1 && merged[0].0.is_zero() && merged[0].1 == rint(1) {
            return FixedSet::full();
        }
        let components = merged
            .into_iter()
            .map(|(lo, hi)| {
                if lo == hi {
                    Component::Point(lo)
                } else {
                    Component::Interval(lo, hi)
                }
            })
            .collect();
        FixedSet {
            full: false,
            components,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.full && self.components.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Membership of `x` (taken mod 1) in the periodic set.
    pub fn contains(&self, x: &Rational) -> bool {
        if self.full {
            return true;
        }
        let r = crate::rational::fract(x);
        if r.is_zero() && self.components.iter().any(|c| *c.hi() == rint(1)) {
            return true;
        }
        self.components.iter().any(|c| c.contains(&r))
    }

    pub fn min_point(&self) -> Option<Rational> {
        if self.full {
            return Some(rint(0));
        }
        self.components.first().map(|c| c.lo().clone())
    }

    /// Subset test as periodic sets.
    pub fn is_subset_of(&self, other: &FixedSet) -> bool {
        if other.full {
            return true;
        }
        if self.full {
            return false;
        }
        self.components.iter().all(|c| {
            other
                .components
                .iter()
                .any(|o| o.lo() <= c.lo() && c.hi() <= o.hi())
        })
    }

    pub fn union(&self, other: &FixedSet) -> FixedSet {
        if self.full || other.full {
            return FixedSet::full();
        }
        let raw = self
            .components
            .iter()
            .chain(other.components.iter())
            .map(|c| (c.lo().clone(), c.hi().clone()))
            .collect();
        FixedSet::from_closed_components(raw)
    }

    pub fn intersect(&self, other: &FixedSet) -> FixedSet {
        if self.full {
            return other.clone();
        }
        if other.full {
            return self.clone();
        }
        let mut raw = Vec::new();
        for a in &self.components {
            for b in &other.components {
                let lo = a.lo().max(b.lo()).clone();
                let hi = a.hi().min(b.hi()).clone();
                if lo <= hi {
                    raw.push((lo, hi));
                }
            }
        }
        FixedSet::from_closed_components(raw)
    }

    /// Image of the periodic set under a lift, again within one period.
    pub fn image_under(&self, f: &PLLift) -> FixedSet {
        if self.full {
            return FixedSet::full();
        }
        let mut raw = Vec::new();
        for c in &self.components {
            let a = f.eval(c.lo());
            let b = f.eval(c.hi());
            let k = a.floor();
            let (a, b) = (&a - &k, &b - &k);
            if b <= rint(1) {
                raw.push((a, b));
            } else {
                // the image straddles the wrap point; split it
                raw.push((a, rint(1)));
                raw.push((rint(0), b - rint(1)));
            }
        }
        FixedSet::from_closed_components(raw)
    }

    /// Open arcs of the circle complementary to the set, as pairs
    /// `(start, end)` with `start < end <= start + 1`; the final arc may wrap
    /// past 1. Returns one full arc `(m, m + 1)` around a point for a
    /// single-point set, and nothing when the set is full or empty.
    pub fn complement_arcs(&self) -> Vec<(Rational, Rational)> {
        if self.full || self.is_empty() {
            return Vec::new();
        }
        let mut arcs = Vec::new();
        for w in self.components.windows(2) {
            arcs.push((w[0].hi().clone(), w[1].lo().clone()));
        }
        let last_hi = self.components.last().unwrap().hi().clone();
        let first_lo = self.components.first().unwrap().lo() + rint(1);
        if last_hi < first_lo {
            arcs.push((last_hi, first_lo));
        }
        arcs
    }

    /// Closed portions of the set meeting the open arc `(start, end)` (with
    /// `end` possibly past 1), clipped to the arc. Degenerate pairs are
    /// points.
    pub fn meet_open_arc(
        &self,
        start: &Rational,
        end: &Rational,
    ) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        let mut push_clipped = |lo: &Rational, hi: &Rational| {
            // intersection of [lo, hi] with the open (start, end): nonempty
            // iff hi > start and lo < end; clip endpoints inward
            if hi > start && lo < end {
                out.push((lo.max(start).clone(), hi.min(end).clone()));
            }
        };
        let full_components = [(rint(0), rint(1))];
        let comps: Vec<(Rational, Rational)> = if self.full {
            full_components.to_vec()
        } else {
            self.components
                .iter()
                .map(|c| (c.lo().clone(), c.hi().clone()))
                .collect()
        };
        for (lo, hi) in &comps {
            push_clipped(lo, hi);
            // account for the arc possibly extending past 1
            push_clipped(&(lo + rint(1)), &(hi + rint(1)));
        }
        out
    }
}

impl fmt::Display for FixedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.full {
            return write!(f, "full");
        }
        if self.components.is_empty() {
            return write!(f, "empty");
        }
        write!(f, "{{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
