use std::fmt::Write;

use drlattice::lattice::{Family, GraphLattice};
use drlattice::norton::{NortonProductReport, OffDiagonal};
use drlattice::spectral::{FrameReport, SpectralTable};
use drlattice::suite::{Status, SuiteReport};
use serde::Serialize;

use crate::Format;

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 records")
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(s, "| {} |", row.join(" | "));
    }
    s
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

#[derive(Serialize)]
struct FramesOut<'a> {
    #[serde(flatten)]
    family: Family,
    frames: &'a [FrameReport],
}

pub fn lattice(lattice: &GraphLattice, format: Format) -> String {
    match format {
        Format::Json => json(&lattice.export()),
        Format::Csv => csv(
            &["level", "index", "element"],
            lattice.levels().iter().enumerate().flat_map(|(l, elems)| {
                elems.iter().enumerate().map(move |(i, e)| {
                    vec![l.to_string(), i.to_string(), serde_json::to_string(e).expect("elements serialize")]
                })
            }),
        ),
        Format::Md => {
            let mut s = format!("# {}\n\nlevel sizes {:?}\n\n", lattice.family(), lattice.level_sizes());
            s += &md_table(
                &["level", "size"],
                lattice
                    .level_sizes()
                    .iter()
                    .enumerate()
                    .map(|(l, n)| vec![l.to_string(), n.to_string()]),
            );
            s
        }
    }
}

pub fn spectral(table: &SpectralTable, format: Format) -> String {
    let header = ["j", "theta", "dim", "mu", "c", "alpha", "beta", "a_up", "a_down", "nu"];
    let rows = table.rows.iter().map(|r| {
        let k = &r.constants;
        vec![
            k.j.to_string(),
            r.theta.to_string(),
            r.dim.to_string(),
            r.mu.to_string(),
            k.c.to_string(),
            opt(&k.alpha),
            opt(&k.beta),
            opt(&k.a_up),
            k.a_down.to_string(),
            opt(&r.nu),
        ]
    });
    match format {
        Format::Json => json(table),
        Format::Csv => csv(&header, rows),
        Format::Md => format!(
            "# Spectrum of {} ({} vertices)\n\n{}",
            table.family,
            table.vertex_count,
            md_table(&header, rows)
        ),
    }
}

pub fn frames(family: Family, reports: &[FrameReport], format: Format) -> String {
    let header = ["j", "mu", "frame_size", "dim", "tested", "mu_closed_form"];
    let rows = reports.iter().map(|r| {
        vec![
            r.j.to_string(),
            r.mu.to_string(),
            r.frame_size.to_string(),
            r.dim.to_string(),
            r.tested.to_string(),
            opt(&r.mu_closed_form),
        ]
    });
    match format {
        Format::Json => json(&FramesOut { family, frames: reports }),
        Format::Csv => csv(&header, rows),
        Format::Md => format!("# Tight frames of {family}\n\n{}", md_table(&header, rows)),
    }
}

fn norton_summary(r: &NortonProductReport) -> String {
    let verified = format!("verified {}/{} pairs", r.pairs_verified, r.pairs_checked);
    let off = match &r.off_diagonal {
        OffDiagonal::Zero if r.all_zero => return format!("all products zero; {verified}"),
        OffDiagonal::Zero => "0".to_string(),
        OffDiagonal::PairSum { coefficient } => coefficient.to_string(),
        OffDiagonal::PairSumAndJoin { pair, join } => format!("({pair}, {join})"),
        OffDiagonal::Observed { coefficient: Some(c) } => format!("{c} (observed, no closed form)"),
        OffDiagonal::Observed { coefficient: None } => "not a multiple of the pair sum (no closed form)".to_string(),
    };
    format!("diag {}; offdiag {off}; {verified}", r.diagonal)
}

pub fn norton(r: &NortonProductReport, format: Format) -> String {
    let c = &r.checks;
    let checks = [
        ("join_projection", Some(c.join_projection)),
        ("triple_inner_products", Some(c.triple_inner_products)),
        ("atom_sum_zero", Some(c.atom_sum_zero)),
        ("frame_projection", Some(c.frame_projection)),
        ("sign_symmetry", c.sign_symmetry),
    ];
    let assoc = match r.associativity.witness {
        Some([t, s, q]) => format!("nonassociative: atoms ({t},{s},{q})"),
        None => format!("associative on all {} triples", r.associativity.triples_checked),
    };
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let mut rows = vec![
                vec!["summary".to_string(), norton_summary(r)],
                vec!["verified".to_string(), r.verified.to_string()],
                vec!["associativity".to_string(), assoc],
            ];
            rows.extend(
                checks
                    .iter()
                    .filter_map(|(n, v)| v.map(|v| vec![n.to_string(), v.to_string()])),
            );
            csv(&["key", "value"], rows)
        }
        Format::Md => {
            let mut s = format!("# Norton products on {}\n\n{}\n\n{assoc}\n\n", r.family, norton_summary(r));
            s += &md_table(
                &["identity", "status"],
                checks.iter().filter_map(|(n, v)| {
                    v.map(|v| vec![n.to_string(), if v { "pass" } else { "FAIL" }.to_string()])
                }),
            );
            s
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

pub fn suite(r: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv(
            &["instance", "check", "status", "detail"],
            r.instances.iter().flat_map(|i| {
                let skipped = (i.status == Status::Skipped).then(|| {
                    vec![
                        i.label.clone(),
                        String::new(),
                        status_word(i.status).into(),
                        opt(&i.skipped_reason),
                    ]
                });
                skipped.into_iter().chain(i.checks.iter().map(|c| {
                    vec![
                        i.label.clone(),
                        c.name.to_string(),
                        status_word(c.status).into(),
                        opt(&c.detail),
                    ]
                }))
            }),
        ),
        Format::Md => {
            let mut names: Vec<&str> = Vec::new();
            for c in r.instances.iter().flat_map(|i| &i.checks) {
                if !names.contains(&c.name) {
                    names.push(c.name);
                }
            }
            let run: Vec<_> = r.instances.iter().filter(|i| i.status != Status::Skipped).collect();
            let mut header = vec!["check"];
            header.extend(run.iter().map(|i| i.label.as_str()));
            let rows = names.iter().map(|n| {
                let mut row = vec![n.to_string()];
                row.extend(run.iter().map(|i| {
                    i.checks
                        .iter()
                        .find(|c| c.name == *n)
                        .map_or("-", |c| status_word(c.status))
                        .to_string()
                }));
                row
            });
            let mut s = format!(
                "# Verification\n\n{} checks passed, {} failed\n\n{}",
                r.checks_passed,
                r.checks_failed,
                md_table(&header, rows)
            );
            for i in r.instances.iter().filter(|i| i.status == Status::Skipped) {
                let _ = write!(s, "\n{}: skipped ({})\n", i.label, opt(&i.skipped_reason));
            }
            for i in &r.instances {
                if let Some(f) = i.first_failure() {
                    let _ = write!(s, "\n{} {}: {}\n", i.label, f.name, opt(&f.detail));
                }
            }
            s
        }
    }
}
