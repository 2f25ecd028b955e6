//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints its own `[PASS]`/`[FAIL]` line; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ktinv::derivations::cayley::{cayley_generators, BinaryForm};
use ktinv::derivations::closed_form::{
    closed_form_generators, diff_generators, reference_generators, LISTING_NOTES,
};
use ktinv::derivations::mst::isometry_generators;
use ktinv::derivations::{check_isometry_relations, check_sl2_relations, Derivation};
use ktinv::family::{FamilyKind, FamilySpace};
use ktinv::group_action::{param_transform, verify_invariance, ParamTransform, GROUP_VARS};
use ktinv::invariant_solver::{
    fundamental_search, generic_jacobian_rank, kernel_at_degree, products_of_degree, span_contains,
};
use ktinv::killing_space::{dtt_dimension, killing_basis, KillingSpace, ParamScheme};
use ktinv::ratpoly::{int, Rational};
use ktinv::Poly;
use num_traits::{One, Zero};

mod common;
use common::{golden_mismatch, DELTA, K4, K5, MKT};

const AC1_LIMIT: Duration = Duration::from_secs(10);
const AC4_LIMIT: Duration = Duration::from_secs(60);
const TRIALS: u64 = 100;
const SEED: u64 = 7;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, body: impl FnOnce() -> Result<(), String>) -> Check {
    let start = Instant::now();
    body()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?} (limit {limit:?})"))
}

fn ac1() -> Check {
    timed(AC1_LIMIT, || {
        for n in 1..=8usize {
            let solved = killing_basis(n).map_err(|e| e.to_string())?.len();
            let formula = (n + 1) * (n + 2) / 2;
            let dtt = dtt_dimension(2, n as u64).map_err(|e| e.to_string())? as usize;
            ensure(solved == formula && formula == dtt, || format!("n={n}: {solved}, {formula}, {dtt}"))?;
        }
        Ok(())
    })
}

fn ac2() -> Check {
    for (n, printed) in [(2, &MKT[..]), (4, &K4[..]), (5, &K5[..])] {
        if let Some(msg) = golden_mismatch(n, printed) {
            return Err(msg);
        }
    }
    Ok("valences 2, 4, 5 byte-exact".into())
}

fn ac3() -> Check {
    let space = KillingSpace::new(2).unwrap();
    let v = isometry_generators(&space).unwrap();
    let listed = reference_generators(&space).unwrap().unwrap();
    ensure(v == listed, || format!("{:?}", diff_generators(&v, &listed)))?;
    for c in check_isometry_relations(&v).unwrap() {
        ensure(c.holds, || c.relation.clone())?;
    }
    Ok("generators equal the listing; 3 relations hold".into())
}

fn ac4() -> Check {
    timed(AC4_LIMIT, || {
        for n in 1..=6 {
            let v = isometry_generators(&KillingSpace::new(n).unwrap()).unwrap();
            for c in check_isometry_relations(&v).unwrap() {
                ensure(c.holds, || format!("isometry n={n}: {}", c.relation))?;
            }
        }
        for n in 1..=8 {
            let v = cayley_generators(&BinaryForm::new(n).unwrap()).unwrap();
            for c in check_sl2_relations(&v).unwrap() {
                ensure(c.holds, || format!("sl2 n={n}: {}", c.relation))?;
            }
        }
        Ok(())
    })
}

fn ac5() -> Check {
    let space = KillingSpace::new(2).unwrap();
    let gens = isometry_generators(&space).unwrap();
    let report = fundamental_search("itkt-2", &gens, 4, SEED).unwrap();
    let mut found = report.fundamentals.clone();
    found.extend(report.dependent.iter().cloned());
    let deltas: Vec<Poly> = DELTA.iter().map(|t| Poly::parse(&space.table, t).unwrap()).collect();
    for (k, d) in deltas.iter().enumerate() {
        let deg = d.total_degree().unwrap();
        ensure(span_contains(&products_of_degree(&found, deg), d), || format!("Delta{} not recovered", k + 1))?;
    }
    let rank = generic_jacobian_rank(&deltas, SEED).unwrap();
    ensure(rank == 3, || format!("Jacobian rank of the three invariants is {rank}"))?;
    ensure(report.s == 3, || format!("orbit dimension {}", report.s))?;
    ensure(report.d - report.s == 3 && report.fundamentals.len() == 3, || {
        format!("d - s = {}, fundamentals = {}", report.d - report.s, report.fundamentals.len())
    })?;
    Ok("3 invariants recovered; rank 3; s = 3".into())
}

fn ac6() -> Check {
    let form = BinaryForm::new(2).unwrap();
    let gens = cayley_generators(&form).unwrap();
    let k = kernel_at_degree(&gens, 2).unwrap();
    let disc = Poly::parse(&form.table, "a0*a2 - a1^2").unwrap();
    ensure(k.len() == 1 && span_contains(&k, &disc), || format!("degree-2 kernel {k:?}"))?;
    let report = fundamental_search("cit-2", &gens, 2, SEED).unwrap();
    ensure(report.s == 2, || format!("orbit dimension {}", report.s))?;
    Ok("kernel = span{a0*a2 - a1^2}; s = 2".into())
}

fn ac7() -> Check {
    for n in 1..=5 {
        let fam = FamilySpace::new(FamilyKind::Itkt, n).unwrap();
        let FamilySpace::Itkt(space) = &fam else { unreachable!() };
        let name = space.scheme.name_of_layered(&format!("a1_{n}")).unwrap();
        let f = space.param(&name).unwrap();
        for g in fam.generators().unwrap() {
            ensure(g.apply(&f).unwrap().is_zero(), || format!("n={n}: generator moves {name}"))?;
        }
        let v = verify_invariance(&f, &fam, TRIALS, SEED).unwrap();
        ensure(v.pass, || format!("n={n}: {:?}", v.counterexample))?;
    }
    Ok(format!("n = 1..5, {TRIALS} trials each"))
}

/// Derivative of the symbolic law along one group coordinate at the identity.
fn first_order(tr: &ParamTransform, moving: &str) -> Vec<Poly> {
    let mut at = std::collections::BTreeMap::new();
    for (name, v) in GROUP_VARS.iter().zip([int(1), int(0), int(0), int(0)]) {
        if *name != moving {
            at.insert(tr.table.require(name).unwrap(), v);
        }
    }
    let i = tr.table.require(moving).unwrap();
    let zero = std::collections::BTreeMap::from([(i, Rational::zero())]);
    tr.images.iter().map(|p| p.eval_partial(&at).diff(i).eval_partial(&zero)).collect()
}

const TRANSFORMED_VALENCE_TWO: [(&str, &str); 6] = [
    ("a0", "a0*ch^2 + 2*a1*ch*sh + a2*sh^2 + a5*b^2 - 2*(a3*ch + a4*sh)*b"),
    ("a1", "a1*(ch^2 + sh^2) + (a0 + a2)*ch*sh - (a*a3 + b*a4)*ch - (a*a4 + b*a3)*sh + a5*a*b"),
    ("a2", "a0*sh^2 + 2*a1*ch*sh + a2*ch^2 + a5*a^2 - 2*(a4*ch + a3*sh)*a"),
    ("a3", "a3*ch + a4*sh - a5*b"),
    ("a4", "a3*sh + a4*ch - a5*a"),
    ("a5", "a5"),
];

fn ac8() -> Check {
    let space = KillingSpace::new(2).unwrap();
    let tr = param_transform(&space).unwrap();
    for (label, text) in TRANSFORMED_VALENCE_TWO {
        let expect = tr.reduce(&Poly::parse(&tr.table, text).unwrap()).unwrap();
        let got = tr.image(label).unwrap();
        ensure(*got == expect, || format!("transformed {label}: {got} != {expect}"))?;
    }
    for n in 1..=3 {
        let space = KillingSpace::new(n).unwrap();
        let tr = param_transform(&space).unwrap();
        let gens = isometry_generators(&space).unwrap();
        for (moving, v) in [("a", &gens[0]), ("b", &gens[1])] {
            let d = first_order(&tr, moving);
            for (k, idx) in space.parameter_indices().into_iter().enumerate() {
                // The induced flow is the negative of the Lie-derivative field.
                let expect = v.coeff(idx).embed(&tr.table).unwrap().scale(&-Rational::one());
                ensure(d[k] == expect, || format!("n={n}, along {moving}, {}", space.table.name(idx)))?;
            }
        }
    }
    Ok("6 formulas match; first order = -V1, -V2 for n = 1..3".into())
}

fn ac9() -> Check {
    let mut documented = 0;
    // Valence 2 is checked under both the legacy and the layered labels; the
    // published listings use the legacy ones.
    let layered_two = KillingSpace::with_scheme(ParamScheme::layered(2).unwrap()).unwrap();
    let mut spaces = vec![(layered_two, false)];
    spaces.extend((1..=8).map(|n| (KillingSpace::new(n).unwrap(), true)));
    for (space, default_labels) in &spaces {
        let n = space.valence();
        let mst = isometry_generators(space).unwrap();
        let closed = closed_form_generators(space).unwrap();
        let diff = diff_generators(&mst, &closed);
        ensure(diff.is_empty(), || format!("n={n}: closed form differs: {diff:?}"))?;
        if !default_labels {
            continue;
        }
        if let Some(listed) = reference_generators(space).unwrap() {
            // Published listings may carry slips; each must be a documented one.
            let d = diff_generators(&mst, &listed);
            let expected: usize = match n {
                4 => 6,
                5 => 1,
                _ => 0,
            };
            ensure(d.len() == expected, || format!("n={n}: undocumented listing differences {d:?}"))?;
            documented += d.len();
        }
    }
    Ok(format!("closed forms agree for n = 1..8; {documented} listing slips, all in {} notes", LISTING_NOTES.len()))
}

fn ac10() -> Check {
    let mut checked = 0;
    for kind in [FamilyKind::Cit, FamilyKind::Itkt] {
        for n in 1..=4 {
            let fam = FamilySpace::new(kind, n).unwrap();
            let gens: [Derivation; 3] = fam.generators().unwrap();
            for deg in 1..=4 {
                for f in kernel_at_degree(&gens, deg).unwrap() {
                    for g in &gens {
                        ensure(g.apply(&f).unwrap().is_zero(), || format!("{} deg {deg}: {g} moves {f}", fam.id()))?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} kernel polynomials annihilated"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1", "dimension counts", ac1),
        ("AC2", "general-element golden tests", ac2),
        ("AC3", "valence-2 generators and commutators", ac3),
        ("AC4", "commutator suites", ac4),
        ("AC5", "invariant recovery, isometries, valence 2", ac5),
        ("AC6", "invariant recovery, quadratic forms", ac6),
        ("AC7", "top rotation parameter is invariant", ac7),
        ("AC8", "finite and infinitesimal action agree", ac8),
        ("AC9", "closed-form cross-check", ac9),
        ("AC10", "solver soundness", ac10),
    ];
    let mut failures = 0;
    for (id, title, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {id} {title}: {detail}");
            }
        }
    }
    println!("{} of 10 acceptance criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
