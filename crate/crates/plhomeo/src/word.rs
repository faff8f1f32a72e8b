//! Words in the planar generators, including the axis swap.
//!
//! The full group is generated by the six skew generators together with the
//! involution `e(x, y) = (y, x)`. Words mixing both orientations have no
//! skew normal form, so they are evaluated pointwise atom by atom; a word
//! whose non-translation atoms all live in one orientation (after
//! conjugating through the swaps) reduces to an exact [`SkewMap`].
//!
//! Text syntax: whitespace-separated atoms `a b g d gb db e`, optionally
//! with a caret exponent as in `a^6 g a^-6`. The swap `e` only admits
//! exponents `1` and `-1`.

use std::fmt;

use crate::rational::Rational;
use crate::skew::{self, Generator, Orientation, SkewMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Generator(Generator, i64),
    /// The axis swap; the exponent is +1 or -1 (the same map either way).
    Swap(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    atoms: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    /// `position` is the 1-based index of the offending atom.
    BadAtom { position: usize, token: String },
    BadExponent { position: usize, token: String },
    /// The swap is an involution; only exponents 1 and -1 make sense.
    SwapExponent { position: usize, exponent: i64 },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::BadAtom { position, token } => {
                write!(f, "atom {position}: unknown generator `{token}`")
            }
            WordError::BadExponent { position, token } => {
                write!(f, "atom {position}: invalid exponent in `{token}`")
            }
            WordError::SwapExponent { position, exponent } => write!(
                f,
                "atom {position}: swap exponent must be 1 or -1, got {exponent}"
            ),
        }
    }
}

impl std::error::Error for WordError {}

/// Result of [`Word::reduce`]: either an exact skew map or a report that
/// the word genuinely mixes orientations and can only be evaluated
/// pointwise.
#[derive(Clone, Debug)]
pub enum Reduction {
    Skew(SkewMap),
    /// Non-translation factors appear in both orientations, or a swap is
    /// left unpaired.
    Mixed,
}

fn symbol_of(g: Generator) -> &'static str {
    match g {
        Generator::Alpha => "a",
        Generator::Beta => "b",
        Generator::Gamma => "g",
        Generator::Delta => "d",
        Generator::GammaBar => "gb",
        Generator::DeltaBar => "db",
    }
}

/// Re-expresses a pure translation in the requested orientation.
fn translation_in(orientation: Orientation, dx: &Rational, dy: &Rational) -> SkewMap {
    let over_x = SkewMap::x_translation(dx)
        .compose(&SkewMap::y_translation(dy))
        .expect("translations share the over-x form");
    match orientation {
        Orientation::OverX => over_x,
        Orientation::OverY => {
            // mirror swaps the roles of the two coordinates
            SkewMap::x_translation(dy)
                .compose(&SkewMap::y_translation(dx))
                .expect("translations share the over-x form")
                .mirror()
        }
    }
}

impl Word {
    pub fn new(atoms: Vec<Atom>) -> Word {
        Word { atoms }
    }

    pub fn empty() -> Word {
        Word { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Parses the whitespace-separated text syntax. Errors carry the
    /// 1-based atom position.
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut atoms = Vec::new();
        for (i, token) in text.split_whitespace().enumerate() {
            let position = i + 1;
            let (symbol, exponent) = match token.split_once('^') {
                Some((s, e)) => {
                    let exponent: i64 = e.parse().map_err(|_| WordError::BadExponent {
                        position,
                        token: token.to_string(),
                    })?;
                    (s, exponent)
                }
                None => (token, 1),
            };
            let atom = match symbol {
                "a" => Atom::Generator(Generator::Alpha, exponent),
                "b" => Atom::Generator(Generator::Beta, exponent),
                "g" => Atom::Generator(Generator::Gamma, exponent),
                "d" => Atom::Generator(Generator::Delta, exponent),
                "gb" => Atom::Generator(Generator::GammaBar, exponent),
                "db" => Atom::Generator(Generator::DeltaBar, exponent),
                "e" => {
                    if exponent != 1 && exponent != -1 {
                        return Err(WordError::SwapExponent { position, exponent });
                    }
                    Atom::Swap(exponent)
                }
                _ => {
                    return Err(WordError::BadAtom {
                        position,
                        token: token.to_string(),
                    })
                }
            };
            atoms.push(atom);
        }
        Ok(Word { atoms })
    }

    /// Exact evaluation at a rational point. The word acts as a composition
    /// read left to right, so the rightmost atom is applied first.
    pub fn eval(&self, point: &(Rational, Rational)) -> (Rational, Rational) {
        let mut p = point.clone();
        for atom in self.atoms.iter().rev() {
            match atom {
                Atom::Swap(_) => p = (p.1, p.0),
                Atom::Generator(g, exponent) => {
                    let map = skew::generator(*g);
                    let step = if *exponent < 0 { map.invert() } else { map };
                    for _ in 0..exponent.unsigned_abs() {
                        p = step.apply(&p);
                    }
                }
            }
        }
        p
    }

    /// Cancels swap pairs by conjugating the atoms that follow them, then
    /// composes the factors if they all fit one orientation. Pure
    /// translations are orientation-flexible; an unpaired swap or
    /// non-translation factors in both orientations leave the word
    /// [`Reduction::Mixed`].
    pub fn reduce(&self) -> Reduction {
        let mut mirrored = false;
        let mut factors: Vec<SkewMap> = Vec::new();
        for atom in &self.atoms {
            match atom {
                Atom::Swap(_) => mirrored = !mirrored,
                Atom::Generator(g, exponent) => {
                    let mut m = skew::generator(*g).powi(*exponent);
                    if mirrored {
                        m = m.mirror();
                    }
                    factors.push(m);
                }
            }
        }
        if mirrored {
            // an odd number of swaps leaves a bare axis swap behind
            return Reduction::Mixed;
        }
        let mut orientation: Option<Orientation> = None;
        for f in &factors {
            if f.translation_vector().is_some() {
                continue;
            }
            match orientation {
                None => orientation = Some(f.orientation()),
                Some(o) if o == f.orientation() => {}
                Some(_) => return Reduction::Mixed,
            }
        }
        let orientation = orientation.unwrap_or(Orientation::OverX);
        let zero = crate::rational::rint(0);
        let mut out = translation_in(orientation, &zero, &zero);
        for f in factors.iter().rev() {
            let aligned = if f.orientation() == orientation {
                f.clone()
            } else {
                let (dx, dy) = f.translation_vector().expect("non-translations were screened");
                translation_in(orientation, &dx, &dy)
            };
            out = aligned.compose(&out).expect("orientations were aligned");
        }
        Reduction::Skew(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match atom {
                Atom::Swap(e) => {
                    if *e == 1 {
                        write!(f, "e")?;
                    } else {
                        write!(f, "e^-1")?;
                    }
                }
                Atom::Generator(g, e) => {
                    if *e == 1 {
                        write!(f, "{}", symbol_of(*g))?;
                    } else {
                        write!(f, "{}^{}", symbol_of(*g), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}
