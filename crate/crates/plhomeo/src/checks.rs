//! The built-in identity suite: sixteen named checks covering the defining
//! relations of the planar generator family, the line and circle actions,
//! and the displacement bounds. Every check is an exact-equality witness;
//! there are no tolerances anywhere.
//!
//! Checks are independent and run concurrently when the `parallel` feature
//! is enabled; the report always lists them in the fixed `C1..C16` order.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;

use crate::actions::{
    check_fix_lemmas, extend_action, relation_holds, ActionSpec, GroupKind, IntervalMap,
    WindowedMap,
};
use crate::circle::{
    default_width, half_turn_commuting_extension, twisted_fix_containment, twisted_pair,
    twisted_relation_holds, CircleMap, RotationResult,
};
use crate::plmap::{PLFunc, PLLift, Piece};
use crate::rational::{rat, rint, Rational};
use crate::skew::{
    alpha, beta, delta, delta_bar, gamma, gamma_bar, shear_conjugate, shear_product,
    shear_profile_sum, SkewMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Error => write!(f, "error"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub status: CheckStatus,
    /// Exact textual data: the computed value and the expected one.
    pub witness: String,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Outcome of one check body: `Ok(witness)` on pass, `Err(witness)` on an
/// exact-equality failure.
type Outcome = Result<String, String>;

pub struct CheckSpec {
    pub id: &'static str,
    pub name: &'static str,
    run: fn() -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown check id `{}`", self.0)
    }
}

impl std::error::Error for UnknownCheck {}

fn pieces_str(pieces: &[Piece]) -> String {
    let parts: Vec<String> = pieces
        .iter()
        .map(|p| format!("x={} v={} s={}", p.x, p.v, p.s))
        .collect();
    format!("[{}]", parts.join("; "))
}

fn expect_eq<T: PartialEq>(label: &str, got: &T, want: &T, show: impl Fn(&T) -> String) -> Outcome {
    if got == want {
        Ok(format!("{label}: {}", show(got)))
    } else {
        Err(format!(
            "{label}: computed {} but expected {}",
            show(got),
            show(want)
        ))
    }
}

fn all_pass(parts: Vec<Outcome>) -> Outcome {
    let mut witness = Vec::new();
    let mut failed = Vec::new();
    for p in parts {
        match p {
            Ok(w) => witness.push(w),
            Err(w) => failed.push(w),
        }
    }
    if failed.is_empty() {
        Ok(witness.join("; "))
    } else {
        Err(failed.join("; "))
    }
}

fn check_wave_halfshift() -> Outcome {
    let w = PLFunc::triangle_wave();
    expect_eq(
        "w(x+1/2) = -w(x)",
        &w.shifted(&rat(-1, 2)),
        &w.negated(),
        |f| pieces_str(f.pieces()),
    )
}

fn check_base_halfshift() -> Outcome {
    let d = PLLift::north_south_map();
    let half = PLLift::translation(&rat(1, 2));
    expect_eq(
        "d(x+1/2) = d^-1(x)+1/2",
        &d.compose(&half),
        &half.compose(&d.invert()),
        |f| pieces_str(f.pieces()),
    )
}

fn check_base_squared_table() -> Outcome {
    let sq = PLLift::north_south_map().powi(2);
    // expected affine data on [0, 1/2): three pieces
    let table = [
        (rint(0), rint(0), rat(1, 4)),
        (rat(1, 3), rat(1, 12), rint(1)),
        (rat(5, 12), rat(1, 6), rint(4)),
    ];
    let half = rat(1, 2);
    let cuts: Vec<Rational> = sq
        .pieces()
        .iter()
        .map(|p| p.x.clone())
        .filter(|x| *x < half)
        .collect();
    let expected_cuts: Vec<Rational> = table.iter().map(|(x, _, _)| x.clone()).collect();
    let mut parts = vec![expect_eq(
        "breakpoints below 1/2",
        &cuts,
        &expected_cuts,
        |v| format!("{v:?}"),
    )];
    for (x, v, s) in &table {
        parts.push(expect_eq(
            &format!("value at {x}"),
            &sq.eval(x),
            v,
            Rational::to_string,
        ));
        parts.push(expect_eq(
            &format!("slope at {x}"),
            &sq.slope_at(x),
            s,
            Rational::to_string,
        ));
    }
    all_pass(parts)
}

fn check_displacements() -> Outcome {
    let bound = rat(1, 3);
    let cases = [
        ("a^{1/12}", alpha(), rat(1, 12)),
        ("b^{1/12}", beta(), rat(1, 12)),
        ("c^{1/168}", gamma(), rat(1, 168)),
        ("d", delta(), rat(1, 6)),
        ("mirror c", gamma_bar(), rat(1, 168)),
        ("mirror d", delta_bar(), rat(1, 6)),
    ];
    let mut parts = Vec::new();
    for (label, map, want) in cases {
        let got = map.sup_displacement();
        if got == want && got <= bound {
            parts.push(Ok(format!("{label}: {got} <= 1/3")));
        } else {
            parts.push(Err(format!(
                "{label}: displacement {got}, expected {want} <= 1/3"
            )));
        }
    }
    all_pass(parts)
}

fn commutes(label: &str, a: &SkewMap, b: &SkewMap) -> Outcome {
    let ab = a.compose(b).map_err(|e| e.to_string())?;
    let ba = b.compose(a).map_err(|e| e.to_string())?;
    if ab.equals(&ba) {
        Ok(format!("{label}: commute"))
    } else {
        Err(format!("{label}: do not commute ({ab} vs {ba})"))
    }
}

fn check_beta_central() -> Outcome {
    all_pass(vec![
        commutes("b,a", &beta(), &alpha()),
        commutes("b,c", &beta(), &gamma()),
        commutes("b,d", &beta(), &delta()),
    ])
}

fn conjugation_inverts(label: &str, target: &SkewMap) -> Outcome {
    let a6 = alpha().powi(6);
    let conj = a6
        .compose(target)
        .and_then(|m| m.compose(&a6.invert()))
        .map_err(|e| e.to_string())?;
    if conj.equals(&target.invert()) {
        Ok(format!("a^6 {label} a^-6 = {label}^-1"))
    } else {
        Err(format!("a^6 {label} a^-6 differs from {label}^-1: {conj}"))
    }
}

fn check_half_turn_inverts_shear() -> Outcome {
    conjugation_inverts("c", &gamma())
}

fn check_half_turn_inverts_base() -> Outcome {
    conjugation_inverts("d", &delta())
}

fn check_conjugates_commute() -> Outcome {
    let gs: Vec<SkewMap> = (0..12).map(shear_conjugate).collect();
    for k in 0..12usize {
        for j in (k + 1)..12usize {
            let kj = gs[k].compose(&gs[j]).map_err(|e| e.to_string())?;
            let jk = gs[j].compose(&gs[k]).map_err(|e| e.to_string())?;
            if !kj.equals(&jk) {
                return Err(format!("g_{k} and g_{j} do not commute"));
            }
        }
    }
    Ok("all 66 pairs g_k g_j = g_j g_k for 0 <= k < j <= 11".into())
}

fn check_conjugates_period_twelve() -> Outcome {
    for k in 0..12 {
        if !shear_conjugate(k).equals(&shear_conjugate(k + 12)) {
            return Err(format!("g_{k} differs from g_{}", k + 12));
        }
    }
    Ok("g_k = g_{k+12} for k = 0..11".into())
}

fn check_profile_constant() -> Outcome {
    let phi = shear_profile_sum();
    all_pass(vec![
        expect_eq("profile sum", &phi, &PLFunc::constant(rint(7)), |f| {
            pieces_str(f.pieces())
        }),
        expect_eq("1/12-shift", &phi.shifted(&rat(1, 12)), &phi, |f| {
            pieces_str(f.pieces())
        }),
    ])
}

fn check_profile_slope_bookkeeping() -> Outcome {
    let wave = PLFunc::triangle_wave();
    let d2 = PLLift::north_south_map().powi(2);
    let x = rat(1, 24);
    let mut negative: Vec<Rational> = Vec::new();
    let mut positive: Vec<Rational> = Vec::new();
    let mut total = rint(0);
    for k in 0..12 {
        let xk = &x - rat(k, 12);
        let inner_slope = d2.slope_at(&xk);
        let outer_slope = wave.slope_at(&d2.eval(&xk));
        total += &outer_slope * &inner_slope;
        if outer_slope == rint(-4) {
            negative.push(inner_slope);
        } else if outer_slope == rint(4) {
            positive.push(inner_slope);
        } else {
            return Err(format!("unexpected wave slope {outer_slope} at k = {k}"));
        }
    }
    negative.sort();
    positive.sort();
    let expected: Vec<Rational> = vec![rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4), rint(1), rint(4)];
    let mut parts = vec![
        expect_eq("sum of summand slopes", &total, &rint(0), Rational::to_string),
        expect_eq("slopes against -4", &negative, &expected, |v| format!("{v:?}")),
        expect_eq("slopes against +4", &positive, &expected, |v| format!("{v:?}")),
    ];
    parts.push(Ok("-4*(4*1/4 + 1 + 4) + 4*(4 + 1 + 4*1/4) = 0".into()));
    all_pass(parts)
}

fn check_key_relation() -> Outcome {
    all_pass(vec![
        {
            let got = shear_product(1);
            let want = SkewMap::y_translation(&rat(1, 24));
            if got.equals(&want) {
                Ok("prod_{k=0..11} g_k = b^{1/24}".into())
            } else {
                Err(format!("product is {got}, not b^{{1/24}}"))
            }
        },
        {
            let got = shear_product(2);
            if got.equals(&beta()) {
                Ok("prod_{k=0..11} g_k^2 = b^{1/12}".into())
            } else {
                Err(format!("squared product is {got}, not b^{{1/12}}"))
            }
        },
    ])
}

fn check_mirror_identities() -> Outcome {
    let mut parts = Vec::new();
    parts.push(if alpha().mirror().equals(&beta()) {
        Ok("e a e = b".into())
    } else {
        Err("e a e differs from b".into())
    });
    parts.push(if beta().mirror().equals(&alpha()) {
        Ok("e b e = a".into())
    } else {
        Err("e b e differs from a".into())
    });
    parts.push(expect_eq("e c e", &gamma().mirror(), &gamma_bar(), |m| {
        m.to_string()
    }));
    parts.push(expect_eq("e d e", &delta().mirror(), &delta_bar(), |m| {
        m.to_string()
    }));
    parts.push(expect_eq(
        "mirror involution",
        &delta().mirror().mirror(),
        &delta(),
        |m| m.to_string(),
    ));
    all_pass(parts)
}

/// The three line-action seeds used by the windowed-action check.
fn line_seeds() -> Vec<IntervalMap> {
    vec![
        IntervalMap::new(
            rint(0),
            rint(1),
            vec![
                Piece::new(rint(0), rint(0), rat(1, 2)),
                Piece::new(rat(1, 2), rat(1, 4), rat(3, 2)),
            ],
        )
        .expect("valid seed"),
        IntervalMap::new(
            rint(0),
            rint(1),
            vec![
                Piece::new(rint(0), rint(0), rint(3)),
                Piece::new(rat(1, 4), rat(3, 4), rat(1, 4)),
                Piece::new(rat(3, 4), rat(7, 8), rat(1, 2)),
            ],
        )
        .expect("valid seed"),
        IntervalMap::new(
            rint(0),
            rint(1),
            vec![
                Piece::new(rint(0), rint(0), rat(1, 3)),
                Piece::new(rat(1, 3), rat(1, 9), rat(2, 3)),
                Piece::new(rat(2, 3), rat(1, 3), rint(2)),
            ],
        )
        .expect("valid seed"),
    ]
}

fn check_windowed_actions() -> Outcome {
    let window = (-8, 8);
    let mut parts = Vec::new();
    for (i, seed) in line_seeds().into_iter().enumerate() {
        for group in [GroupKind::K, GroupKind::Z2] {
            let spec = ActionSpec::new(group, 1, rint(0), seed.clone())
                .map_err(|e| e.to_string())?;
            let report = check_fix_lemmas(&spec, window).map_err(|e| e.to_string())?;
            if !report.all_pass() {
                parts.push(Err(format!("seed {i} under {group}: {report}")));
                continue;
            }
            let wide = extend_action(&spec, window).map_err(|e| e.to_string())?;
            let narrow = extend_action(&spec, (-3, 5)).map_err(|e| e.to_string())?;
            if !wide.agrees_on_overlap(&narrow) {
                parts.push(Err(format!("seed {i} under {group}: windows disagree")));
                continue;
            }
            parts.push(Ok(format!("seed {i} under {group}: relation, orbit, overlap")));
        }
    }
    // negative control: corrupting one block must break the relation
    let spec = ActionSpec::new(GroupKind::K, 1, rint(0), line_seeds().remove(0))
        .map_err(|e| e.to_string())?;
    let good = extend_action(&spec, (-3, 3)).map_err(|e| e.to_string())?;
    let mut blocks = good.blocks().to_vec();
    blocks[1] = IntervalMap::identity(blocks[1].lo().clone(), blocks[1].hi().clone());
    let corrupted = WindowedMap::from_blocks(good.window(), good.f_step().clone(), blocks)
        .map_err(|e| e.to_string())?;
    parts.push(if relation_holds(&corrupted, -1) {
        Err("corrupted block went undetected".into())
    } else {
        Ok("corrupted-block control detected".into())
    });
    all_pass(parts)
}

/// Half-period seed sending 1/4 to 1/8 and fixing 0 and 1/2.
fn circle_seed() -> PLLift {
    PLLift::new(vec![
        Piece::new(rint(0), rint(0), rat(1, 2)),
        Piece::new(rat(1, 4), rat(1, 8), rat(3, 2)),
        Piece::new(rat(1, 2), rat(1, 2), rint(1)),
    ])
    .expect("valid half-period seed")
}

fn check_circle_actions() -> Outcome {
    let mut parts = Vec::new();
    let width = default_width();
    // twisted pairs over three seeds
    let seeds = [
        ("identity", PLLift::identity()),
        ("pinch", circle_seed()),
        ("north-south", PLLift::north_south_map()),
    ];
    for (label, seed) in &seeds {
        let (f, g) = twisted_pair(seed).map_err(|e| e.to_string())?;
        if !twisted_relation_holds(&f, &g) {
            parts.push(Err(format!("{label}: relation fails")));
            continue;
        }
        let rot = g.rotation_number(16, &width);
        let rot_ok = match &rot {
            RotationResult::Exact { value, .. } => {
                value.is_zero() || *value == rat(1, 2)
            }
            RotationResult::Bracket { .. } => false,
        };
        if !rot_ok {
            parts.push(Err(format!("{label}: rot(g) = {rot}, not in {{0, 1/2}}")));
            continue;
        }
        parts.push(Ok(format!("{label}: relation exact, rot(g) = {rot}")));
    }
    // containment on pairs with fixed points: g the half turn (rot 1/2)
    // against a commuting f, and g the identity against the same f
    let f = CircleMap::new(
        half_turn_commuting_extension(&circle_seed()).map_err(|e| e.to_string())?,
    );
    let half_turn = CircleMap::rotation(&rat(1, 2));
    for (label, g) in [("half-turn g", half_turn), ("identity g", CircleMap::identity())] {
        match twisted_fix_containment(&f, &g) {
            Ok(report) if report.contained => {
                let rot = g.rotation_number(4, &width);
                parts.push(Ok(format!(
                    "{label}: Fix(f) within Fix(g^2), rot(g) = {rot}"
                )));
            }
            Ok(_) => parts.push(Err(format!("{label}: containment fails"))),
            Err(e) => parts.push(Err(format!("{label}: {e}"))),
        }
    }
    // negative control: a pair breaking the relation is rejected
    let broken = CircleMap::new(PLLift::north_south_map());
    parts.push(match twisted_fix_containment(&f, &broken) {
        Err(crate::circle::CircleError::RelationFails) => {
            Ok("broken-pair control detected".into())
        }
        other => Err(format!("broken pair not rejected: {other:?}")),
    });
    all_pass(parts)
}

fn check_half_parameter_roots() -> Outcome {
    let cases = [
        ("(a^{1/24})^2 = a^{1/12}", SkewMap::x_translation(&rat(1, 24)), alpha()),
        ("(b^{1/24})^2 = b^{1/12}", SkewMap::y_translation(&rat(1, 24)), beta()),
        ("(c^{1/336})^2 = c^{1/168}", SkewMap::wave_shear(&rat(1, 336)), gamma()),
    ];
    let mut parts = Vec::new();
    for (label, root, target) in cases {
        if root.powi(2).equals(&target) {
            parts.push(Ok(label.to_string()));
        } else {
            parts.push(Err(format!("{label} fails: {}", root.powi(2))));
        }
    }
    all_pass(parts)
}

static CHECKS: [CheckSpec; 16] = [
    CheckSpec {
        id: "C1",
        name: "gamma0-halfshift",
        run: check_wave_halfshift,
    },
    CheckSpec {
        id: "C2",
        name: "delta0-halfshift",
        run: check_base_halfshift,
    },
    CheckSpec {
        id: "C3",
        name: "delta0-squared",
        run: check_base_squared_table,
    },
    CheckSpec {
        id: "C4",
        name: "displacement",
        run: check_displacements,
    },
    CheckSpec {
        id: "C5",
        name: "beta-central",
        run: check_beta_central,
    },
    CheckSpec {
        id: "C6",
        name: "alpha6-gamma",
        run: check_half_turn_inverts_shear,
    },
    CheckSpec {
        id: "C7",
        name: "alpha6-delta",
        run: check_half_turn_inverts_base,
    },
    CheckSpec {
        id: "C8",
        name: "gk-commute",
        run: check_conjugates_commute,
    },
    CheckSpec {
        id: "C9",
        name: "gk-period",
        run: check_conjugates_period_twelve,
    },
    CheckSpec {
        id: "C10",
        name: "phi-constant",
        run: check_profile_constant,
    },
    CheckSpec {
        id: "C11",
        name: "phi-derivative",
        run: check_profile_slope_bookkeeping,
    },
    CheckSpec {
        id: "C12",
        name: "key-relation",
        run: check_key_relation,
    },
    CheckSpec {
        id: "C13",
        name: "eta-swap",
        run: check_mirror_identities,
    },
    CheckSpec {
        id: "C14",
        name: "klein-line",
        run: check_windowed_actions,
    },
    CheckSpec {
        id: "C15",
        name: "klein-circle",
        run: check_circle_actions,
    },
    CheckSpec {
        id: "C16",
        name: "halfparam-roots",
        run: check_half_parameter_roots,
    },
];

pub fn all_checks() -> &'static [CheckSpec] {
    &CHECKS
}

fn run_one(spec: &CheckSpec) -> CheckResult {
    let start = Instant::now();
    let outcome = (spec.run)();
    let elapsed = start.elapsed();
    let (status, witness) = match outcome {
        Ok(w) => (CheckStatus::Pass, w),
        Err(w) => (CheckStatus::Fail, w),
    };
    CheckResult {
        id: spec.id,
        name: spec.name,
        status,
        witness,
        elapsed,
    }
}

fn select(only: Option<&[String]>) -> Result<Vec<&'static CheckSpec>, UnknownCheck> {
    match only {
        None => Ok(CHECKS.iter().collect()),
        Some(ids) => {
            for id in ids {
                if !CHECKS.iter().any(|c| c.id == id || c.name == id) {
                    return Err(UnknownCheck(id.clone()));
                }
            }
            Ok(CHECKS
                .iter()
                .filter(|c| {
                    ids.iter()
                        .any(|id| c.id == id.as_str() || c.name == id.as_str())
                })
                .collect())
        }
    }
}

/// Runs the selected checks (all sixteen when `only` is `None`) and returns
/// the results in the fixed suite order. Selection entries may use either
/// the short id (`C12`) or the name (`key-relation`).
pub fn verify_paper(only: Option<&[String]>) -> Result<Vec<CheckResult>, UnknownCheck> {
    let selected = select(only)?;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok(selected.par_iter().map(|s| run_one(s)).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(selected.iter().map(|s| run_one(s)).collect())
    }
}

/// Sequential twin of [`verify_paper`], kept available for benchmarking the
/// two execution modes against each other.
pub fn verify_paper_sequential(
    only: Option<&[String]>,
) -> Result<Vec<CheckResult>, UnknownCheck> {
    Ok(select(only)?.into_iter().map(run_one).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let results = verify_paper(None).unwrap();
        assert_eq!(results.len(), 16);
        for r in &results {
            assert!(r.passed(), "{} {}: {}", r.id, r.name, r.witness);
        }
        // fixed order
        let ids: Vec<&str> = results.iter().map(|r| r.id).collect();
        assert_eq!(ids[0], "C1");
        assert_eq!(ids[15], "C16");
    }

    #[test]
    fn selection_by_id_and_name() {
        let by_id = verify_paper(Some(&["C12".to_string()])).unwrap();
        assert_eq!(by_id.len(), 1);
        assert_eq!(by_id[0].name, "key-relation");
        assert!(by_id[0].witness.contains("b^{1/24}"));
        let by_name = verify_paper(Some(&["key-relation".to_string()])).unwrap();
        assert_eq!(by_name[0].id, "C12");
        // selection never reorders
        let pair = verify_paper(Some(&["C12".to_string(), "C3".to_string()])).unwrap();
        let ids: Vec<&str> = pair.iter().map(|r| r.id).collect();
        assert_eq!(ids, vec!["C3", "C12"]);
    }

    #[test]
    fn unknown_selection_is_an_error() {
        let err = verify_paper(Some(&["bogus".to_string()])).unwrap_err();
        assert_eq!(err, UnknownCheck("bogus".into()));
    }

    #[test]
    fn sequential_and_default_agree() {
        let a = verify_paper(None).unwrap();
        let b = verify_paper_sequential(None).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.status, y.status);
            assert_eq!(x.witness, y.witness);
        }
    }
}
