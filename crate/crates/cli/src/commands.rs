use kzrat_core::pipeline::construct;
use kzrat_core::series::{zero_table, SeriesEngine};
use kzrat_core::verifier::audit::{audit_printed, ComputedBasis, Verdict};
use kzrat_core::verifier::{independence, residual};

use crate::args::Format;
use crate::config::{Mode, RunConfig};
use crate::error::{CliError, CliResult};
use crate::render;
use crate::schema::*;

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parameters(mode: &Mode) -> Parameters {
    let (z1, z2) = mode.parameters();
    Parameters { z1, z2 }
}

/// Builds, verifies and renders the selected basis solutions. Any solution
/// with a nonzero residual aborts the command.
pub fn cmd_basis(cfg: &RunConfig) -> CliResult<String> {
    if cfg.k_max < 5 {
        return Err(CliError::Usage(format!(
            "--kmax must be at least 5 for basis construction, got {}",
            cfg.k_max
        )));
    }
    let sys = cfg.mode.system()?;
    let engine = SeriesEngine::new(&sys)?;
    let registry = cfg.registry();
    let mut built = Vec::new();
    for chain in cfg.select(&registry)? {
        let basis = construct(&engine, chain, cfg.k_max)?;
        let report = residual(&sys, &basis.solution)?;
        if !report.is_zero {
            return Err(CliError::Verification(format!(
                "{} has a nonzero residual [{}]",
                basis.label,
                report.residual_entries.iter().map(|r| r.render()).collect::<Vec<_>>().join(", ")
            )));
        }
        built.push(basis);
    }
    Ok(match cfg.format {
        Format::Json => json(&BasisDocument {
            mode: cfg.mode.name().into(),
            parameters: parameters(&cfg.mode),
            solutions: built
                .iter()
                .map(|b| SolutionDoc::from_solution(&b.label, &b.solution, &cfg.mode))
                .collect(),
        }),
        Format::Text => {
            let parts: Vec<String> = built
                .iter()
                .map(|b| render::solution_text(&b.label, &b.solution, &cfg.mode))
                .collect();
            parts.join("\n\n") + "\n"
        }
        Format::Latex => {
            let parts: Vec<String> = built
                .iter()
                .map(|b| render::solution_latex(&b.label, &b.solution, &cfg.mode))
                .collect();
            render::align(&parts.join(" \\\\[1ex]\n"))
        }
    })
}

/// Coefficient tables `G_-2 .. G_kmax`; orders below a seed are zero.
pub fn cmd_series(cfg: &RunConfig) -> CliResult<String> {
    if cfg.k_max < -2 {
        return Err(CliError::Usage(format!("--kmax must be at least -2, got {}", cfg.k_max)));
    }
    let sys = cfg.mode.system()?;
    let engine = SeriesEngine::new(&sys)?;
    let registry = cfg.registry();
    let mut tables = Vec::new();
    for chain in cfg.select(&registry)? {
        let seed = chain.seed(&engine)?;
        engine.validate_seed(&seed)?;
        let table = if cfg.k_max >= seed.order {
            engine.generate(&seed, cfg.k_max)?
        } else {
            zero_table(seed.order, cfg.k_max)
        };
        tables.push((chain.label().to_string(), table));
    }
    const FROM: i64 = -2;
    Ok(match cfg.format {
        Format::Json => json(&SeriesDocument {
            mode: cfg.mode.name().into(),
            parameters: parameters(&cfg.mode),
            chains: tables
                .iter()
                .map(|(label, t)| ChainDoc {
                    name: label.clone(),
                    seed_order: t.seed_order(),
                    k_max: t.k_max(),
                    rows: t
                        .rows(FROM)
                        .into_iter()
                        .map(|(k, g)| RowDoc { k, vector: vector_text(&g) })
                        .collect(),
                    resonances: t
                        .resonances()
                        .iter()
                        .map(|r| ResonanceDoc {
                            level: r.level,
                            kernel: r.kernel.each_ref().map(kzrat_core::scalar::render_rational),
                            free_parameter: r.free_parameter.render(),
                        })
                        .collect(),
                })
                .collect(),
        }),
        Format::Text => {
            let parts: Vec<String> = tables.iter().map(|(l, t)| render::table_text(l, t, FROM)).collect();
            parts.join("\n\n") + "\n"
        }
        Format::Latex => {
            let parts: Vec<String> = tables.iter().map(|(l, t)| render::table_latex(l, t, FROM)).collect();
            render::align(&parts.join(" \\\\[1ex]\n"))
        }
    })
}

pub fn read_document(path: &std::path::Path) -> CliResult<BasisDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed file {}: {e}", path.display())))
}

/// Residual check of every solution in a document. Returns the rendered
/// report and whether all residuals vanish.
pub fn cmd_verify(doc: &BasisDocument, format: Format) -> CliResult<(String, bool)> {
    let mode = doc.mode()?;
    let sys = mode.system()?;
    let mut results = Vec::new();
    for s in &doc.solutions {
        let w = s.to_solution(&mode)?;
        let report = residual(&sys, &w)?;
        results.push(ResidualDoc {
            name: s.name.clone(),
            residual_zero: report.is_zero,
            residual: report.residual_entries.each_ref().map(|r| r.render()),
        });
    }
    let verified = results.iter().all(|r| r.residual_zero);
    let out = VerifyDocument { verified, solutions: results };
    let text = || {
        let mut s = String::new();
        for r in &out.solutions {
            if r.residual_zero {
                s.push_str(&format!("{}: residual is identically zero\n", r.name));
            } else {
                s.push_str(&format!("{}: nonzero residual [{}]\n", r.name, r.residual.join(", ")));
            }
        }
        s.push_str(if verified { "verified\n" } else { "NOT verified\n" });
        s
    };
    let rendered = match format {
        Format::Json => json(&out),
        Format::Text => text(),
        Format::Latex => render::verbatim(&text()),
    };
    Ok((rendered, verified))
}

pub fn cmd_independence(docs: &[BasisDocument], format: Format) -> CliResult<String> {
    let mut mode = None;
    let mut solutions = Vec::new();
    for doc in docs {
        let m = doc.mode()?;
        if mode.as_ref().is_some_and(|prev| prev != &m) {
            return Err(CliError::Usage("files use different parameters".into()));
        }
        for s in &doc.solutions {
            solutions.push(s.to_solution(&m)?);
        }
        mode = Some(m);
    }
    if solutions.len() != 3 {
        return Err(CliError::Usage(format!(
            "independence needs exactly 3 solutions, found {}",
            solutions.len()
        )));
    }
    let report = independence(&solutions)?;
    let out = IndependenceDocument {
        independent: report.independent,
        determinant: report.determinant.render(),
    };
    let text = format!("independent: {}\ndeterminant: {}\n", out.independent, out.determinant);
    Ok(match format {
        Format::Json => json(&out),
        Format::Text => text,
        Format::Latex => render::verbatim(&text),
    })
}

/// Full audit; mismatches are reported in the payload, never as errors.
pub fn cmd_audit(format: Format) -> CliResult<String> {
    let report = audit_printed(&ComputedBasis::symbolic()?)?;
    let doc = AuditDocument {
        items: report
            .items
            .iter()
            .map(|i| AuditItemDoc {
                id: i.id.clone(),
                label: i.label.clone(),
                verdict: match &i.verdict {
                    Verdict::Match => "MATCH",
                    Verdict::Scaled(_) => "SCALED",
                    Verdict::Mismatch => "MISMATCH",
                }
                .into(),
                factor: match &i.verdict {
                    Verdict::Scaled(c) => Some(c.render()),
                    _ => None,
                },
                computed: i.computed.clone(),
                printed: i.printed.clone(),
                note: i.note.clone(),
            })
            .collect(),
    };
    let text = || {
        let mut s = String::new();
        for i in &report.items {
            s.push_str(&format!("{:<9} {:<12} {}\n", i.id, i.verdict.to_string(), i.label));
            if let Some(n) = &i.note {
                s.push_str(&format!("          note: {n}\n"));
            }
        }
        s
    };
    Ok(match format {
        Format::Json => json(&doc),
        Format::Text => text(),
        Format::Latex => render::verbatim(&text()),
    })
}
