//! Planar skew-product homeomorphisms and the generator family they support.
//!
//! A [`SkewMap`] moves one coordinate by a PL lift and translates the other
//! fiberwise by a 1-periodic PL function:
//!
//! * over x: `(x, y) -> (base(x), y + fiber(x))`
//! * over y: `(x, y) -> (x + fiber(y), base(y))`
//!
//! Maps of one orientation are closed under composition and inversion. The
//! axis swap `(x, y) -> (y, x)` is not a skew map itself; it acts by
//! conjugation through [`SkewMap::mirror`] and as a word atom in
//! [`crate::word`].
//!
//! The distinguished generators are `alpha` (x-translation by 1/12), `beta`
//! (y-translation by 1/12), `gamma` (fiber shear by the triangle wave scaled
//! by 1/168), `delta` (the north-south base map), and the mirrored
//! `gamma_bar`, `delta_bar`. The conjugates
//! `shear_conjugate(k) = alpha^k delta^-2 gamma delta^2 alpha^-k` pairwise
//! commute, repeat with period 12, and their ordered product telescopes to a
//! pure y-translation.

use std::fmt;

use num_traits::Zero;

use crate::plmap::{PLFunc, PLLift};
use crate::rational::{rat, rint, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    OverX,
    OverY,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::OverX => Orientation::OverY,
            Orientation::OverY => Orientation::OverX,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::OverX => write!(f, "over-x"),
            Orientation::OverY => write!(f, "over-y"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewError {
    /// Composition of skew maps is only defined within one orientation.
    OrientationMismatch {
        left: Orientation,
        right: Orientation,
    },
}

impl fmt::Display for SkewError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkewError::OrientationMismatch { left, right } => write!(
                f,
                "cannot compose {left} with {right}; reduce through a word instead"
            ),
        }
    }
}

impl std::error::Error for SkewError {}

/// A planar skew-product homeomorphism; canonical when its base and fiber
/// are canonical, which the constructors guarantee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMap {
    orientation: Orientation,
    base: PLLift,
    fiber: PLFunc,
}

impl SkewMap {
    pub fn new(orientation: Orientation, base: PLLift, fiber: PLFunc) -> SkewMap {
        SkewMap {
            orientation,
            base,
            fiber,
        }
    }

    pub fn identity() -> SkewMap {
        SkewMap::new(Orientation::OverX, PLLift::identity(), PLFunc::zero())
    }

    /// `(x, y) -> (x + t, y)`.
    pub fn x_translation(t: &Rational) -> SkewMap {
        SkewMap::new(Orientation::OverX, PLLift::translation(t), PLFunc::zero())
    }

    /// `(x, y) -> (x, y + t)`.
    pub fn y_translation(t: &Rational) -> SkewMap {
        SkewMap::new(
            Orientation::OverX,
            PLLift::identity(),
            PLFunc::constant(t.clone()),
        )
    }

    /// `(x, y) -> (x, y + t·w(x))` with `w` the triangle wave.
    pub fn wave_shear(t: &Rational) -> SkewMap {
        SkewMap::new(
            Orientation::OverX,
            PLLift::identity(),
            PLFunc::triangle_wave().scaled(t),
        )
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn base(&self) -> &PLLift {
        &self.base
    }

    pub fn fiber(&self) -> &PLFunc {
        &self.fiber
    }

    pub fn apply(&self, point: &(Rational, Rational)) -> (Rational, Rational) {
        let (x, y) = point;
        match self.orientation {
            Orientation::OverX => (self.base.eval(x), y + self.fiber.eval(x)),
            Orientation::OverY => (x + self.fiber.eval(y), self.base.eval(y)),
        }
    }

    /// Exact composition `self ∘ other` by the closure law
    /// `(b1, f1)(b2, f2) = (b1 ∘ b2, f2 + f1 ∘ b2)`.
    pub fn compose(&self, other: &SkewMap) -> Result<SkewMap, SkewError> {
        if self.orientation != other.orientation {
            return Err(SkewError::OrientationMismatch {
                left: self.orientation,
                right: other.orientation,
            });
        }
        Ok(SkewMap::new(
            self.orientation,
            self.base.compose(&other.base),
            other.fiber.add(&self.fiber.after_lift(&other.base)),
        ))
    }

    /// Exact inverse `(base^-1, -fiber ∘ base^-1)`.
    pub fn invert(&self) -> SkewMap {
        let inv = self.base.invert();
        SkewMap::new(
            self.orientation,
            inv.clone(),
            self.fiber.negated().after_lift(&inv),
        )
    }

    /// `self` composed with itself `n` times (`n < 0` uses the inverse).
    pub fn powi(&self, n: i64) -> SkewMap {
        let step = if n < 0 { self.invert() } else { self.clone() };
        let mut out = SkewMap::new(self.orientation, PLLift::identity(), PLFunc::zero());
        for _ in 0..n.unsigned_abs() {
            out = step.compose(&out).expect("powers share one orientation");
        }
        out
    }

    /// `Some((dx, dy))` iff the map is the pure translation by that vector.
    pub fn translation_vector(&self) -> Option<(Rational, Rational)> {
        let along = self.base.translation_amount()?;
        let fiber = &self.fiber;
        let across = if fiber.pieces().len() == 1 && fiber.pieces()[0].s.is_zero() {
            fiber.pieces()[0].v.clone()
        } else {
            return None;
        };
        Some(match self.orientation {
            Orientation::OverX => (along, across),
            Orientation::OverY => (across, along),
        })
    }

    /// Exact equality as planar homeomorphisms. Same-orientation maps
    /// compare componentwise; maps of different orientations are equal only
    /// if both are pure translations (a skew map constant in the moving
    /// coordinate must have a translation base and constant fiber).
    pub fn equals(&self, other: &SkewMap) -> bool {
        if self.orientation == other.orientation {
            return self.base == other.base && self.fiber == other.fiber;
        }
        match (self.translation_vector(), other.translation_vector()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Conjugation by the axis swap: flips the orientation and keeps both
    /// components. An involution and compatible with composition.
    pub fn mirror(&self) -> SkewMap {
        SkewMap::new(
            self.orientation.flipped(),
            self.base.clone(),
            self.fiber.clone(),
        )
    }

    /// Exact sup displacement, the larger of the two per-coordinate
    /// displacements (each coordinate moves independently of the other).
    pub fn sup_displacement(&self) -> Rational {
        self.base.sup_displacement().max(self.fiber.sup_abs())
    }

    pub fn is_identity(&self) -> bool {
        self.base.is_identity() && self.fiber.is_zero()
    }
}

impl fmt::Display for SkewMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} base", self.orientation)?;
        for p in self.base.pieces() {
            write!(f, " ({}; {}; {})", p.x, p.v, p.s)?;
        }
        write!(f, " fiber")?;
        for p in self.fiber.pieces() {
            write!(f, " ({}; {}; {})", p.x, p.v, p.s)?;
        }
        Ok(())
    }
}

/// Named generators of the planar group. The axis swap is deliberately not
/// here: it is not a skew map and only acts through words and `mirror`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Alpha,
    Beta,
    Gamma,
    Delta,
    GammaBar,
    DeltaBar,
}

/// The shear scale `1/168` shared by `gamma` and the conjugates built from
/// it.
pub fn shear_scale() -> Rational {
    rat(1, 168)
}

pub fn alpha() -> SkewMap {
    SkewMap::x_translation(&rat(1, 12))
}

pub fn beta() -> SkewMap {
    SkewMap::y_translation(&rat(1, 12))
}

pub fn gamma() -> SkewMap {
    SkewMap::wave_shear(&shear_scale())
}

pub fn delta() -> SkewMap {
    SkewMap::new(
        Orientation::OverX,
        PLLift::north_south_map(),
        PLFunc::zero(),
    )
}

pub fn gamma_bar() -> SkewMap {
    gamma().mirror()
}

pub fn delta_bar() -> SkewMap {
    delta().mirror()
}

pub fn generator(g: Generator) -> SkewMap {
    match g {
        Generator::Alpha => alpha(),
        Generator::Beta => beta(),
        Generator::Gamma => gamma(),
        Generator::Delta => delta(),
        Generator::GammaBar => gamma_bar(),
        Generator::DeltaBar => delta_bar(),
    }
}

/// The conjugate `alpha^k delta^-2 gamma delta^2 alpha^-k`, computed by
/// actual composition. It comes out over x with identity base and fiber
/// `(1/168)·w(d²(x - k/12))`.
pub fn shear_conjugate(k: i64) -> SkewMap {
    let a_k = alpha().powi(k);
    let d2 = delta().powi(2);
    let core = d2
        .invert()
        .compose(&gamma())
        .and_then(|m| m.compose(&d2))
        .expect("all factors are over x");
    a_k.compose(&core)
        .and_then(|m| m.compose(&a_k.invert()))
        .expect("all factors are over x")
}

/// Ordered product over `k = 0..12` of `shear_conjugate(k)^exponent`
/// (ascending `k`; the factors commute, so the order is immaterial).
pub fn shear_product(exponent: i64) -> SkewMap {
    let mut out = SkewMap::identity();
    for k in 0..12 {
        let factor = shear_conjugate(k).powi(exponent);
        out = out.compose(&factor).expect("factors are over x");
    }
    out
}

/// The fiber-profile sum `sum_{k=0}^{11} w(d²(x - k/12))`, assembled from
/// the shifted composites. It collapses to the constant 7.
pub fn shear_profile_sum() -> PLFunc {
    let composite =
        PLFunc::triangle_wave().after_lift(&PLLift::north_south_map().powi(2));
    let summands: Vec<PLFunc> = (0..12).map(|k| composite.shifted(&rat(k, 12))).collect();
    let terms: Vec<(Rational, &PLFunc)> = summands.iter().map(|f| (rint(1), f)).collect();
    PLFunc::combine(&terms)
}
