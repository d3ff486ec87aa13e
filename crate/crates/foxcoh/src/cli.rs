//! Command dispatch and report rendering for the `foxcoh` binary.
//!
//! Commands:
//!
//! * `verify <manifest>` — membership and relator checks;
//! * `h1 <manifest>` — the full cohomology report per requested flavor;
//! * `centralizer <manifest> <word>` — fixed-space dimensions of one element;
//! * `abelianization <manifest>` — Smith normal form of the relation matrix;
//! * `fox <manifest> <generator> <relator-index>` — one Fox derivative.
//!
//! With `--json PATH` a machine-readable report is written to PATH instead of
//! the human summary; reports are byte-deterministic for a fixed manifest.
//! Exit codes: 0 success, 1 verification or `--check` failure, 2 input error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::cohomology::{h1_dimension, CohomologyReport, SplitDims};
use crate::error::{Error, Result};
use crate::exactla::{QuatMatrix, SmithNormalForm};
use crate::lie::{adjoint_matrix, lie_basis, Flavor, LieBasis, Representation};
use crate::manifest::{Expected, Manifest};
use crate::words::Presentation;

#[derive(Parser)]
#[command(name = "foxcoh", version, about = "Exact twisted group cohomology in sp(2,1)")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the manifest defines a representation into Sp(2,1).
    Verify {
        manifest: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Compute dim H0/Z1/B1/H1 for the requested flavors.
    H1 {
        manifest: PathBuf,
        /// sp21, u21, su21, m or all
        #[arg(long, default_value = "all")]
        flavor: String,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Compare results against the manifest's expected block.
        #[arg(long)]
        check: bool,
        /// Also run the manifest's quotient presentation.
        #[arg(long)]
        quotient: bool,
    },
    /// Fixed-space dimension of Ad(ρ(word)) per flavor.
    Centralizer {
        manifest: PathBuf,
        word: String,
        #[arg(long, default_value = "all")]
        flavor: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Abelianization of the presented group via Smith normal form.
    Abelianization {
        manifest: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        check: bool,
        /// Also run the manifest's quotient presentation.
        #[arg(long)]
        quotient: bool,
    },
    /// Fox derivative of one relator with respect to one generator.
    Fox {
        manifest: PathBuf,
        generator: char,
        relator_index: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    dispatch(cli.command)
}

fn dispatch(command: Command) -> i32 {
    let (json_path, outcome) = match command {
        Command::Verify { manifest, json } => (json, cmd_verify(&manifest)),
        Command::H1 { manifest, flavor, json, check, quotient } => {
            (json, cmd_h1(&manifest, &flavor, check, quotient))
        }
        Command::Centralizer { manifest, word, flavor, json } => {
            (json, cmd_centralizer(&manifest, &word, &flavor))
        }
        Command::Abelianization { manifest, json, check, quotient } => {
            (json, cmd_abelianization(&manifest, check, quotient))
        }
        Command::Fox { manifest, generator, relator_index, json } => {
            (json, cmd_fox(&manifest, generator, relator_index))
        }
    };
    render(json_path.as_deref(), outcome)
}

struct Output {
    command: &'static str,
    human: String,
    json: serde_json::Value,
    exit: i32,
    /// Machine-readable failure code for soft failures (exit 1 with a
    /// well-formed report), e.g. NOT_IN_GROUP or CHECK_FAILED.
    failure: Option<ErrorBody>,
}

#[derive(Serialize)]
struct ErrorBody {
    code: &'static str,
    message: String,
}

fn render(json_path: Option<&Path>, outcome: Result<Output>) -> i32 {
    match outcome {
        Ok(out) => {
            let envelope = serde_json::json!({
                "tool": "foxcoh",
                "schema": 1,
                "command": out.command,
                "ok": out.exit == 0,
                "error": out.failure,
                "result": out.json,
            });
            match json_path {
                Some(path) => {
                    if let Err(e) = write_json(path, &envelope) {
                        eprintln!("error: {e}");
                        return 2;
                    }
                }
                None => println!("{}", out.human),
            }
            out.exit
        }
        Err(e) => {
            let envelope = serde_json::json!({
                "tool": "foxcoh",
                "schema": 1,
                "ok": false,
                "error": ErrorBody { code: e.code(), message: e.to_string() },
            });
            if let Some(path) = json_path {
                if write_json(path, &envelope).is_err() {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
            eprintln!("error [{}]: {e}", e.code());
            e.exit_code()
        }
    }
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn matrix_strings(m: &QuatMatrix) -> Vec<Vec<String>> {
    (0..3)
        .map(|i| (0..3).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

fn snf_json(snf: &SmithNormalForm) -> serde_json::Value {
    serde_json::json!({
        "invariant_factors": snf.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "free_rank": snf.free_rank,
        "group": snf.describe(),
    })
}

fn parse_flavors(manifest: &Manifest, flag: &str) -> Result<Vec<Flavor>> {
    if flag == "all" {
        manifest.flavor_list()
    } else {
        Ok(vec![flag.parse()?])
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(path: &Path) -> Result<Output> {
    let manifest = Manifest::load(path)?;
    let pres = manifest.presentation()?;
    let images = manifest.image_matrices()?;
    let form = manifest.hermitian_form()?;
    let signature = form.matrix().hermitian_signature()?;
    let form_source = if manifest.form.is_some() { "manifest" } else { "derived" };

    let mut memberships = BTreeMap::new();
    let mut all_member = true;
    for (g, img) in manifest.generator_chars().iter().zip(&images) {
        let ok = form.contains(img);
        all_member &= ok;
        memberships.insert(g.to_string(), ok);
    }

    // relator evaluation needs the group inverses, which rely on membership
    let mut relator_checks: Option<Vec<serde_json::Value>> = None;
    let mut quotient_checks: Option<Vec<serde_json::Value>> = None;
    let mut all_relators = true;
    if all_member {
        let rep = Representation::new(form.clone(), manifest.generator_chars(), images.clone())?;
        let mut run = |p: &Presentation| -> Result<Vec<serde_json::Value>> {
            let mut out = Vec::new();
            for r in p.relators() {
                let holds = rep.evaluate_word(r)?.is_identity();
                all_relators &= holds;
                out.push(serde_json::json!({
                    "word": r.display(p.generators()),
                    "maps_to_identity": holds,
                }));
            }
            Ok(out)
        };
        relator_checks = Some(run(&pres)?);
        if let Some(q) = manifest.quotient_presentation()? {
            quotient_checks = Some(run(&q)?);
        }
    }

    let ok = all_member && all_relators;
    let json = serde_json::json!({
        "name": manifest.name,
        "generators": pres.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "form_source": form_source,
        "form": matrix_strings(form.matrix()),
        "signature": [signature.0, signature.1],
        "memberships": memberships,
        "relators": relator_checks,
        "quotient_relators": quotient_checks,
        "zariski_dense_hint": manifest.zariski_dense.unwrap_or(false),
        "verified": ok,
    });

    let mut human = format!("verify {}\n", manifest.name);
    human += &format!("  form ({form_source}), signature ({}, {})\n", signature.0, signature.1);
    for (g, ok) in &memberships {
        human += &format!("  g*Jg = J for image of '{g}': {}\n", pass(*ok));
    }
    match &json["relators"] {
        serde_json::Value::Null => human += "  relator checks skipped (membership failed)\n",
        v => {
            for r in v.as_array().expect("array") {
                human += &format!(
                    "  relator {} -> identity: {}\n",
                    r["word"].as_str().expect("word"),
                    pass(r["maps_to_identity"].as_bool().expect("bool"))
                );
            }
        }
    }
    if let Some(q) = &json["quotient_relators"].as_array() {
        for r in q.iter() {
            human += &format!(
                "  quotient relator {} -> identity: {}\n",
                r["word"].as_str().expect("word"),
                pass(r["maps_to_identity"].as_bool().expect("bool"))
            );
        }
    }
    human += &format!("verified: {}", pass(ok));

    let failure = if !all_member {
        let bad = memberships.iter().find(|(_, ok)| !**ok).expect("some membership failed");
        Some(ErrorBody {
            code: "NOT_IN_GROUP",
            message: format!("image of generator '{}' does not preserve the form", bad.0),
        })
    } else if !all_relators {
        Some(ErrorBody {
            code: "NOT_A_REPRESENTATION",
            message: "a relator does not map to the identity matrix".to_string(),
        })
    } else {
        None
    };
    Ok(Output { command: "verify", human, json, exit: i32::from(!ok), failure })
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

// ---------------------------------------------------------------------------
// h1
// ---------------------------------------------------------------------------

fn flavor_report_json(report: &CohomologyReport, generators: &[char]) -> serde_json::Value {
    let centralizers: BTreeMap<String, usize> = generators
        .iter()
        .zip(&report.centralizer_dims)
        .map(|(g, d)| (g.to_string(), *d))
        .collect();
    serde_json::json!({
        "flavor": report.flavor.name(),
        "basis_dim": report.basis_dim,
        "generators": report.generator_count,
        "relators": report.relator_count,
        "h0": report.h0,
        "z1": report.z1,
        "b1": report.b1,
        "h1": report.h1,
        "split": report.split,
        "centralizers": centralizers,
        "notes": report.notes,
    })
}

struct H1Run {
    reports: Vec<CohomologyReport>,
    snf: SmithNormalForm,
}

fn run_h1(
    rep: &Representation,
    pres: &Presentation,
    flavors: &[Flavor],
) -> Result<H1Run> {
    let mut reports = Vec::new();
    for flavor in Flavor::ALL {
        if !flavors.contains(&flavor) {
            continue;
        }
        let basis = lie_basis(rep.form(), flavor);
        reports.push(h1_dimension(rep, &basis, pres)?);
    }
    Ok(H1Run { reports, snf: pres.abelianization_matrix().smith_normal_form() })
}

fn h1_of(run: &H1Run, flavor: Flavor) -> Option<&CohomologyReport> {
    run.reports.iter().find(|r| r.flavor == flavor)
}

fn verdict_json(run: &H1Run) -> serde_json::Value {
    let (Some(sp), Some(u)) = (h1_of(run, Flavor::Sp21), h1_of(run, Flavor::U21)) else {
        return serde_json::Value::Null;
    };
    let deformable = sp.h1 > u.h1;
    let note = if deformable {
        "dim H1(sp21) > dim H1(u21): first-order deformations exist outside u(2,1)"
    } else {
        "dim H1(sp21) = dim H1(u21): every first-order deformation is tangent to u(2,1)"
    };
    serde_json::json!({
        "h1_sp21": sp.h1,
        "h1_u21": u.h1,
        "deformable_beyond_u21_at_first_order": deformable,
        "note": note,
    })
}

fn check_expected(
    expected: &Expected,
    run: &H1Run,
    quotient: Option<&H1Run>,
    failures: &mut Vec<String>,
) {
    let by_flavor = |map: &BTreeMap<String, usize>,
                     run: &H1Run,
                     what: &str,
                     pick: fn(&CohomologyReport) -> usize,
                     failures: &mut Vec<String>| {
        for (name, expect) in map {
            let Ok(flavor) = name.parse::<Flavor>() else {
                failures.push(format!("expected block names unknown flavor '{name}'"));
                continue;
            };
            match h1_of(run, flavor) {
                Some(r) if pick(r) == *expect => {}
                Some(r) => failures.push(format!(
                    "{what}({name}) = {}, expected {expect}",
                    pick(r)
                )),
                None => failures.push(format!("{what}({name}) not computed")),
            }
        }
    };
    if let Some(h1) = &expected.h1 {
        by_flavor(h1, run, "h1", |r| r.h1, failures);
    }
    if let Some(h0) = &expected.h0 {
        by_flavor(h0, run, "h0", |r| r.h0, failures);
    }
    if let Some(split) = &expected.split {
        match h1_of(run, Flavor::Sp21).and_then(|r| r.split) {
            Some(s) if s.u21 == split.u21 && s.m == split.m => {}
            Some(s) => failures.push(format!(
                "split = (u21 {}, m {}), expected (u21 {}, m {})",
                s.u21, s.m, split.u21, split.m
            )),
            None => failures.push("split not computed".to_string()),
        }
    }
    if let Some(ab) = &expected.abelianization {
        let factors: Vec<u64> = run
            .snf
            .invariant_factors
            .iter()
            .map(|d| d.try_into().unwrap_or(u64::MAX))
            .collect();
        if factors != ab.invariant_factors || run.snf.free_rank != ab.free_rank {
            failures.push(format!(
                "abelianization = {}, expected factors {:?} free rank {}",
                run.snf.describe(),
                ab.invariant_factors,
                ab.free_rank
            ));
        }
    }
    if let Some(qh1) = &expected.quotient_h1 {
        match quotient {
            Some(qrun) => by_flavor(qh1, qrun, "quotient h1", |r| r.h1, failures),
            None => failures.push(
                "expected block has quotient_h1 but --quotient was not given".to_string(),
            ),
        }
    }
}

fn cmd_h1(path: &Path, flavor_flag: &str, check: bool, quotient: bool) -> Result<Output> {
    let manifest = Manifest::load(path)?;
    let flavors = parse_flavors(&manifest, flavor_flag)?;
    let pres = manifest.presentation()?;
    let rep = manifest.representation()?;
    let run = run_h1(&rep, &pres, &flavors)?;

    let quotient_run = if quotient {
        let qpres = manifest.quotient_presentation()?.ok_or_else(|| {
            Error::Manifest("--quotient given but the manifest has no quotient_relators".into())
        })?;
        Some((qpres.clone(), run_h1(&rep, &qpres, &flavors)?))
    } else {
        None
    };

    // inflation: the quotient's H1 injects into the full group's H1
    let inflation: Option<Vec<serde_json::Value>> = quotient_run.as_ref().map(|(_, qrun)| {
        qrun.reports
            .iter()
            .filter_map(|q| {
                h1_of(&run, q.flavor).map(|full| {
                    serde_json::json!({
                        "flavor": q.flavor.name(),
                        "h1_full": full.h1,
                        "h1_quotient": q.h1,
                        "inflation_compatible": full.h1 >= q.h1,
                    })
                })
            })
            .collect()
    });

    let mut failures = Vec::new();
    if check {
        if let Some(expected) = &manifest.expected {
            check_expected(expected, &run, quotient_run.as_ref().map(|(_, q)| q), &mut failures);
        } else {
            failures.push("--check given but the manifest has no expected block".to_string());
        }
    }

    let gens = manifest.generator_chars();
    let json = serde_json::json!({
        "name": manifest.name,
        "presentation": {
            "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relators": manifest.relators,
        },
        "abelianization": snf_json(&run.snf),
        "reports": run.reports.iter().map(|r| flavor_report_json(r, &gens)).collect::<Vec<_>>(),
        "verdict": verdict_json(&run),
        "quotient": quotient_run.as_ref().map(|(qpres, qrun)| serde_json::json!({
            "relators": qpres.relators().iter().map(|r| r.display(qpres.generators())).collect::<Vec<_>>(),
            "abelianization": snf_json(&qrun.snf),
            "reports": qrun.reports.iter().map(|r| flavor_report_json(r, &gens)).collect::<Vec<_>>(),
            "inflation": inflation,
        })),
        "check": if check {
            serde_json::json!({"passed": failures.is_empty(), "failures": failures})
        } else {
            serde_json::Value::Null
        },
    });

    let mut human = format!("h1 {}\n", manifest.name);
    human += &format!("  abelianization: {}\n", run.snf.describe());
    human += "  flavor  d    H0   Z1   B1   H1\n";
    let table_line = |r: &CohomologyReport| {
        let split = match r.split {
            Some(SplitDims { u21, m }) => format!("   (split: u21 {u21}, m {m})"),
            None => String::new(),
        };
        format!(
            "  {:<6}  {:<3}  {:<3}  {:<3}  {:<3}  {:<3}{split}\n",
            r.flavor.name(),
            r.basis_dim,
            r.h0,
            r.z1,
            r.b1,
            r.h1
        )
    };
    for r in &run.reports {
        human += &table_line(r);
    }
    if let serde_json::Value::String(note) = &json["verdict"]["note"] {
        human += &format!("  verdict: {note}\n");
    }
    if let Some((qpres, qrun)) = &quotient_run {
        human += &format!(
            "  quotient <{} | {}>:\n",
            qpres.generators().iter().collect::<String>(),
            qpres
                .relators()
                .iter()
                .map(|r| r.display(qpres.generators()))
                .collect::<Vec<_>>()
                .join(", ")
        );
        for r in &qrun.reports {
            human += &table_line(r);
        }
    }
    for f in &failures {
        human += &format!("  CHECK FAILED: {f}\n");
    }
    if check && failures.is_empty() {
        human += "  all checks passed\n";
    }
    let human = human.trim_end().to_string();

    let failure = (!failures.is_empty()).then(|| ErrorBody {
        code: "CHECK_FAILED",
        message: failures.join("; "),
    });
    let exit = i32::from(failure.is_some());
    Ok(Output { command: "h1", human, json, exit, failure })
}

// ---------------------------------------------------------------------------
// centralizer
// ---------------------------------------------------------------------------

fn cmd_centralizer(path: &Path, word: &str, flavor_flag: &str) -> Result<Output> {
    let manifest = Manifest::load(path)?;
    let flavors = parse_flavors(&manifest, flavor_flag)?;
    let pres = manifest.presentation()?;
    let rep = manifest.representation()?;
    let w = pres.parse_word(word)?;
    let g = rep.evaluate_word(&w)?;

    let mut dims: BTreeMap<String, usize> = BTreeMap::new();
    let mut sp21_bound: Option<i64> = None;
    for flavor in Flavor::ALL {
        if !flavors.contains(&flavor) {
            continue;
        }
        let basis: LieBasis = lie_basis(rep.form(), flavor);
        let ad = adjoint_matrix(&g, &basis)?;
        let delta = &ad - &crate::exactla::FMatrix::identity(basis.dim());
        let dim = basis.dim() - delta.rank();
        if flavor == Flavor::Sp21 {
            // dim Sp(2,1) − 2·dim Z, the paper's lower bound for the orbit
            // dimension count around an order-3 pair
            sp21_bound = Some(basis.dim() as i64 - 2 * dim as i64);
        }
        dims.insert(flavor.name().to_string(), dim);
    }

    let json = serde_json::json!({
        "name": manifest.name,
        "word": word,
        "reduced_word": w.display(pres.generators()),
        "centralizer_dims": dims,
        "sp21_bound": sp21_bound,
    });

    let mut human = format!("centralizer {} of rho({})\n", manifest.name, word);
    for (fl, d) in &dims {
        human += &format!("  dim ker(Ad - I) on {fl}: {d}\n");
    }
    if let Some(b) = sp21_bound {
        let z = dims["sp21"];
        human += &format!("  bound dim(Sp(2,1)) - 2*dim(Z) = 21 - 2*{z} = {b}\n");
    }
    let human = human.trim_end().to_string();
    Ok(Output { command: "centralizer", human, json, exit: 0, failure: None })
}

// ---------------------------------------------------------------------------
// abelianization
// ---------------------------------------------------------------------------

fn cmd_abelianization(path: &Path, check: bool, quotient: bool) -> Result<Output> {
    let manifest = Manifest::load(path)?;
    let pres = manifest.presentation()?;
    let matrix = pres.abelianization_matrix();
    let snf = matrix.smith_normal_form();

    let quotient_block = if quotient {
        let qpres = manifest.quotient_presentation()?.ok_or_else(|| {
            Error::Manifest("--quotient given but the manifest has no quotient_relators".into())
        })?;
        let qsnf = qpres.abelianization_matrix().smith_normal_form();
        Some(serde_json::json!({
            "relators": qpres.relators().iter().map(|r| r.display(qpres.generators())).collect::<Vec<_>>(),
            "abelianization": snf_json(&qsnf),
        }))
    } else {
        None
    };

    let mut failures = Vec::new();
    if check {
        match manifest.expected.as_ref().and_then(|e| e.abelianization.as_ref()) {
            Some(ab) => {
                let factors: Vec<u64> = snf
                    .invariant_factors
                    .iter()
                    .map(|d| d.try_into().unwrap_or(u64::MAX))
                    .collect();
                if factors != ab.invariant_factors || snf.free_rank != ab.free_rank {
                    failures.push(format!(
                        "abelianization = {}, expected factors {:?} free rank {}",
                        snf.describe(),
                        ab.invariant_factors,
                        ab.free_rank
                    ));
                }
            }
            None => failures
                .push("--check given but the manifest has no expected abelianization".to_string()),
        }
    }

    let rows: Vec<Vec<String>> = (0..matrix.rows())
        .map(|i| (0..matrix.cols()).map(|j| matrix[(i, j)].to_string()).collect())
        .collect();
    let json = serde_json::json!({
        "name": manifest.name,
        "relation_matrix": rows,
        "abelianization": snf_json(&snf),
        "quotient": quotient_block,
        "check": if check {
            serde_json::json!({"passed": failures.is_empty(), "failures": failures})
        } else {
            serde_json::Value::Null
        },
    });

    let mut human = format!("abelianization {}: {}\n", manifest.name, snf.describe());
    if let Some(q) = &json["quotient"].as_object() {
        human += &format!(
            "  quotient: {}\n",
            q["abelianization"]["group"].as_str().expect("group")
        );
    }
    for f in &failures {
        human += &format!("  CHECK FAILED: {f}\n");
    }
    let human = human.trim_end().to_string();
    let failure = (!failures.is_empty()).then(|| ErrorBody {
        code: "CHECK_FAILED",
        message: failures.join("; "),
    });
    Ok(Output {
        command: "abelianization",
        human,
        json,
        exit: i32::from(failure.is_some()),
        failure,
    })
}

// ---------------------------------------------------------------------------
// fox
// ---------------------------------------------------------------------------

fn cmd_fox(path: &Path, generator: char, relator_index: usize) -> Result<Output> {
    let manifest = Manifest::load(path)?;
    let pres = manifest.presentation()?;
    let Some(gen_index) = pres.generators().iter().position(|&g| g == generator) else {
        return Err(Error::UnknownGenerator(generator));
    };
    let Some(relator) = pres.relators().get(relator_index) else {
        return Err(Error::Manifest(format!(
            "relator index {relator_index} out of range ({} relators)",
            pres.relators().len()
        )));
    };
    let derivative = crate::words::fox_derivative(gen_index, relator);
    let terms: Vec<serde_json::Value> = derivative
        .terms()
        .map(|(w, c)| {
            serde_json::json!({
                "coefficient": c.to_string(),
                "word": w.display(pres.generators()),
            })
        })
        .collect();
    let json = serde_json::json!({
        "name": manifest.name,
        "generator": generator.to_string(),
        "relator_index": relator_index,
        "relator": relator.display(pres.generators()),
        "derivative": derivative.display(pres.generators()),
        "terms": terms,
        "augmentation": derivative.augmentation().to_string(),
    });
    let human = format!(
        "fox d/d{} of relator {} = {}\n  = {}\n  augmentation: {}",
        generator,
        relator_index,
        relator.display(pres.generators()),
        derivative.display(pres.generators()),
        derivative.augmentation()
    );
    Ok(Output { command: "fox", human, json, exit: 0, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flavor_flag_parsing() {
        let manifest = Manifest::parse_str(
            r#"{
                "name": "t", "generators": ["a"], "relators": [],
                "images": {"a": [["1","0","0"],["0","1","0"],["0","0","1"]]},
                "form": [["1","0","0"],["0","1","0"],["0","0","-1"]]
            }"#,
        )
        .unwrap();
        assert_eq!(parse_flavors(&manifest, "all").unwrap(), Flavor::ALL.to_vec());
        assert_eq!(parse_flavors(&manifest, "su21").unwrap(), vec![Flavor::Su21]);
        assert!(parse_flavors(&manifest, "nope").is_err());
    }
}
