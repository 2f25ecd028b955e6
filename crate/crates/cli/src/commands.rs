use std::fmt::Write as _;

use ktinv::derivations::closed_form::{
    closed_form_generators, diff_generators, reference_generators, DiffEntry, LISTING_NOTES, PATTERN_NOTES,
};
use ktinv::derivations::mst::isometry_generators;
use ktinv::derivations::{check_isometry_relations, check_sl2_relations, CommutatorCheck, Derivation};
use ktinv::family::{FamilyKind, FamilySpace};
use ktinv::group_action::verify_invariance;
use ktinv::invariant_solver::{fundamental_search, products_of_degree, span_contains};
use ktinv::killing_space::{dtt_dimension, killing_basis, plane_dimension};
use ktinv::{Error, Poly, Result};
use serde_json::{json, Value};

use crate::{Family, Outcome, RunConfig, Source};

fn space(cfg: &RunConfig) -> Result<FamilySpace> {
    let kind = match cfg.family {
        Some(Family::Cit) => FamilyKind::Cit,
        _ => FamilyKind::Itkt,
    };
    FamilySpace::new(kind, cfg.n)
}

fn ok(text: String, json: Value) -> Result<Outcome> {
    Ok(Outcome { text, json, failed: false })
}

fn index_name(n: usize, ones: usize) -> String {
    "t".repeat(ones) + &"x".repeat(n - ones)
}

pub fn general(cfg: &RunConfig) -> Result<Outcome> {
    let mut text = String::new();
    match space(cfg)? {
        FamilySpace::Cit(form) => {
            writeln!(text, "Q = {}", form.general).unwrap();
            let params: Vec<String> = form.parameter_indices().iter().map(|&i| form.table.name(i).to_string()).collect();
            ok(text, json!({ "degree": form.degree, "form": form.general, "parameters": params }))
        }
        FamilySpace::Itkt(space) => {
            let n = space.valence();
            let mut comps = Vec::new();
            for ones in (0..=n).rev() {
                let c = space.general.component(ones);
                writeln!(text, "K[{}] = {c}", index_name(n, ones)).unwrap();
                comps.push(json!({ "indices": index_name(n, ones), "poly": c }));
            }
            writeln!(text, "\nlabel  component  monomial  weight").unwrap();
            for l in &space.scheme.labels {
                let s = l.slot;
                writeln!(
                    text,
                    "{}  K[{}]  t^{} x^{}  {}",
                    l.name,
                    index_name(n, s.component),
                    s.t_exp,
                    s.x_exp,
                    l.weight
                )
                .unwrap();
            }
            ok(text, json!({ "valence": n, "dimension": space.dimension(), "components": comps, "scheme": space.scheme.labels }))
        }
    }
}

fn derivation_json(name: &str, d: &Derivation) -> Value {
    json!({ "name": name, "text": d.to_string(), "terms": d.to_json() })
}

fn write_generators(text: &mut String, names: &[&str; 3], gens: &[Derivation; 3]) {
    for (name, d) in names.iter().zip(gens) {
        writeln!(text, "{name} = {d}").unwrap();
    }
}

fn write_checks(text: &mut String, checks: &[CommutatorCheck]) {
    for c in checks {
        writeln!(text, "{}: {}", c.relation, if c.holds { "holds" } else { "FAILS" }).unwrap();
    }
}

fn write_diff(text: &mut String, title: &str, diff: &[DiffEntry]) {
    if diff.is_empty() {
        writeln!(text, "{title}: no differences").unwrap();
        return;
    }
    writeln!(text, "{title}: {} difference(s)", diff.len()).unwrap();
    for e in diff {
        writeln!(text, "  {} D[{}]: mst = {}, other = {}", e.generator, e.term, e.mst, e.closed).unwrap();
    }
}

pub fn generators(cfg: &RunConfig) -> Result<Outcome> {
    let fam = space(cfg)?;
    let source = cfg.source.unwrap_or(Source::Mst);
    let check = cfg.check_commutators.unwrap_or(false);
    let names = fam.generator_names();
    let mut text = String::new();
    let mut out = serde_json::Map::new();
    let listed = |gens: &[Derivation; 3]| -> Value {
        Value::Array(names.iter().zip(gens).map(|(n, d)| derivation_json(n, d)).collect())
    };

    let space = match &fam {
        FamilySpace::Cit(_) => {
            if source != Source::Mst {
                return Err(Error::Usage("--source applies to the itkt family only".into()));
            }
            let gens = fam.generators()?;
            write_generators(&mut text, &names, &gens);
            out.insert("generators".into(), listed(&gens));
            if check {
                let checks = check_sl2_relations(&gens)?;
                writeln!(text).unwrap();
                write_checks(&mut text, &checks);
                out.insert("commutators".into(), json!(checks));
            }
            return ok(text, Value::Object(out));
        }
        FamilySpace::Itkt(space) => space,
    };

    let mst = isometry_generators(space)?;
    let closed = closed_form_generators(space)?;
    let shown = if source == Source::Closed { &closed } else { &mst };
    write_generators(&mut text, &names, shown);
    out.insert("generators".into(), listed(shown));
    if source == Source::Both {
        writeln!(text, "\nclosed form:").unwrap();
        write_generators(&mut text, &names, &closed);
        out.insert("closed".into(), listed(&closed));
        let diff = diff_generators(&mst, &closed);
        writeln!(text).unwrap();
        write_diff(&mut text, "closed form vs Lie derivative", &diff);
        out.insert("diff".into(), json!(diff));
        out.insert("pattern_notes".into(), json!(PATTERN_NOTES));
        if let Some(reference) = reference_generators(space)? {
            let rdiff = diff_generators(&mst, &reference);
            write_diff(&mut text, "published listing vs Lie derivative", &rdiff);
            out.insert("reference_diff".into(), json!(rdiff));
            out.insert("listing_notes".into(), json!(LISTING_NOTES));
        }
    }
    if check {
        let checks = check_isometry_relations(shown)?;
        writeln!(text).unwrap();
        write_checks(&mut text, &checks);
        out.insert("commutators".into(), json!(checks));
    }
    ok(text, Value::Object(out))
}

pub fn invariants(cfg: &RunConfig) -> Result<Outcome> {
    let fam = space(cfg)?;
    let max_degree = cfg.max_degree.unwrap_or(4);
    let gens = fam.generators()?;
    let report = fundamental_search(&fam.id(), &gens, max_degree, cfg.seed)?;
    let mut found = report.fundamentals.clone();
    found.extend(report.dependent.iter().cloned());

    let mut references = Vec::new();
    for (name, p) in fam.reference_invariants()? {
        let deg = p.total_degree().unwrap_or(0);
        let status = if deg > max_degree {
            "beyond search degree"
        } else if span_contains(&products_of_degree(&found, deg), &p) {
            "contained"
        } else {
            "not contained"
        };
        references.push(json!({ "name": name, "poly": p, "degree": deg, "status": status }));
    }

    let mut text = String::new();
    writeln!(
        text,
        "d = {}, s = {}, expected = {} (searched up to degree {max_degree})",
        report.d, report.s, report.expected
    )
    .unwrap();
    for slice in &report.per_degree {
        writeln!(text, "degree {}: {} kernel element(s)", slice.deg, slice.kernel.len()).unwrap();
        for p in &slice.kernel {
            writeln!(text, "  {p}").unwrap();
        }
    }
    let list = |text: &mut String, title: &str, ps: &[Poly]| {
        writeln!(text, "{title}: {}", ps.len()).unwrap();
        for p in ps {
            writeln!(text, "  {p}").unwrap();
        }
    };
    list(&mut text, "fundamental", &report.fundamentals);
    list(&mut text, "dependent", &report.dependent);
    writeln!(text, "jacobian rank: {}", report.jacobian_rank).unwrap();
    if !references.is_empty() {
        writeln!(text, "reference invariants:").unwrap();
        for r in &references {
            writeln!(text, "  {} (degree {}): {}", r["name"].as_str().unwrap(), r["degree"], r["status"].as_str().unwrap())
                .unwrap();
        }
    }
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["search_horizon"] = json!(format!("up to degree {max_degree}"));
    json["reference"] = Value::Array(references);
    ok(text, json)
}

pub fn verify(cfg: &RunConfig) -> Result<Outcome> {
    let fam = space(cfg)?;
    let f = Poly::parse(fam.table(), cfg.poly.as_deref().unwrap_or(""))?;
    let trials = cfg.trials.unwrap_or(100);
    let verdict = verify_invariance(&f, &fam, trials, cfg.seed)?;
    let mut text = String::new();
    writeln!(text, "polynomial: {f}").unwrap();
    match &verdict.counterexample {
        None => writeln!(text, "pass: {trials} trial(s) with seed {}", cfg.seed).unwrap(),
        Some(c) => {
            writeln!(text, "FAIL at trial {}", c.trial).unwrap();
            writeln!(text, "  element: {}", serde_json::to_string(&c.element).expect("element serializes")).unwrap();
            writeln!(text, "  point: [{}]", c.point.join(", ")).unwrap();
            writeln!(text, "  before: {}", c.before).unwrap();
            writeln!(text, "  after: {}", c.after).unwrap();
        }
    }
    let failed = !verdict.pass;
    let mut json = serde_json::to_value(&verdict).expect("verdict serializes");
    json["poly"] = json!(f);
    Ok(Outcome { text, json, failed })
}

pub fn dims(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.n == 0 {
        return Err(Error::Usage("--max-n must be at least 1".into()));
    }
    let mut text = String::from("n  solved  (n+1)(n+2)/2  dtt\n");
    let mut rows = Vec::new();
    for n in 1..=cfg.n {
        let solved = killing_basis(n)?.len();
        let dtt = dtt_dimension(2, n as u64)?;
        writeln!(text, "{n}  {solved}  {}  {dtt}", plane_dimension(n)).unwrap();
        rows.push(json!({ "n": n, "solved": solved, "formula": plane_dimension(n), "dtt": dtt as u64 }));
    }
    ok(text, json!({ "rows": rows }))
}
