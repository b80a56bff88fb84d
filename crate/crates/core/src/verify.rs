//! Regenerates the published tables and diffs them against the fixtures.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{classify, summary_rows, SummaryRow};
use crate::cm::{CmConfig, CmType};
use crate::error::{Error, Result};
use crate::fixtures::{
    normalize_sigma, DensityTable, SigmaTable, SummaryTable, DENSITY_TABLES, SIGMA_TABLES,
    SUMMARY_TABLES,
};
use crate::kraft::{build_kraft_words, parse_bt1_name, Bt1Decomposition};
use crate::named::NamedGroup;
use crate::splitting::{normalize_pattern, splitting_pattern};
use crate::weil::{density_report, FieldSize};

/// Absolute tolerance for density comparisons.
pub const DENSITY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub what: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableReport {
    pub id: String,
    pub title: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Regenerated rows, in display form.
    pub rows: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn status_line(&self) -> String {
        let bad = self.failures().count();
        if bad == 0 {
            format!("PASS {} ({} checks)", self.id, self.checks.len())
        } else {
            format!(
                "FAIL {} ({} of {} checks differ)",
                self.id,
                bad,
                self.checks.len()
            )
        }
    }

    /// Status line followed by one line per mismatch and per note.
    pub fn diff(&self) -> String {
        let mut s = self.status_line();
        for c in self.failures() {
            let _ = write!(
                s,
                "\n  - {}\n      expected: {}\n      computed: {}",
                c.what, c.expected, c.computed
            );
        }
        for n in &self.notes {
            let _ = write!(s, "\n  note: {n}");
        }
        s
    }
}

/// All table ids, in verification order.
pub fn table_ids() -> Vec<&'static str> {
    SUMMARY_TABLES
        .iter()
        .map(|t| t.id)
        .chain(SIGMA_TABLES.iter().map(|t| t.id))
        .chain(DENSITY_TABLES.iter().map(|t| t.id))
        .collect()
}

/// Ids of the combinatorial tables of one dimension.
pub fn tables_for_dimension(dim: usize) -> Vec<&'static str> {
    SUMMARY_TABLES
        .iter()
        .filter(|t| t.dimension == dim)
        .map(|t| t.id)
        .chain(
            SIGMA_TABLES
                .iter()
                .filter(|t| t.dimension == dim)
                .map(|t| t.id),
        )
        .collect()
}

pub fn verify_table(id: &str) -> Result<TableReport> {
    if let Some(t) = SUMMARY_TABLES.iter().find(|t| t.id == id) {
        return Ok(verify_summary(t));
    }
    if let Some(t) = SIGMA_TABLES.iter().find(|t| t.id == id) {
        return verify_sigma(t);
    }
    if let Some(t) = DENSITY_TABLES.iter().find(|t| t.id == id) {
        return verify_density(t);
    }
    Err(Error::UnknownTable(id.to_string()))
}

fn expected_summary(row: &(&str, &str, usize, usize)) -> SummaryRow {
    let &(pattern, name, p_rank, a_number) = row;
    let pattern = normalize_pattern(pattern).unwrap_or_else(|| pattern.to_string());
    let name = parse_bt1_name(name).map_or_else(|_| name.to_string(), |d| d.ascii_name());
    SummaryRow {
        pattern,
        name,
        p_rank,
        a_number,
    }
}

pub fn verify_summary(t: &SummaryTable) -> TableReport {
    let computed: BTreeSet<SummaryRow> = t
        .groups
        .iter()
        .flat_map(|g| {
            let g: NamedGroup = g.parse().expect("fixture group token");
            summary_rows(&CmConfig::standard(g))
        })
        .collect();
    let expected: BTreeSet<SummaryRow> = t.rows.iter().map(expected_summary).collect();
    let mut checks = Vec::new();
    for e in &expected {
        let ok = computed.contains(e);
        checks.push(Check {
            what: format!("row {}", e.line()),
            expected: "present".into(),
            computed: if ok {
                "present".into()
            } else {
                "absent".into()
            },
            ok,
        });
    }
    for c in computed.difference(&expected) {
        checks.push(Check {
            what: format!("row {}", c.line()),
            expected: "absent".into(),
            computed: "present".into(),
            ok: false,
        });
    }
    TableReport {
        id: t.id.into(),
        title: t.title.into(),
        checks,
        notes: Vec::new(),
        rows: computed.iter().map(SummaryRow::line).collect(),
    }
}

fn table_types(cfg: &CmConfig, t: &SigmaTable) -> Result<Vec<(char, CmType)>> {
    match t.types {
        Some(list) => list
            .iter()
            .map(|&(label, spec)| cfg.parse_cm_type(spec).map(|ty| (label, ty)))
            .collect(),
        None => Ok(cfg.named_types()),
    }
}

fn outcome_line(pattern: &str, d: &Bt1Decomposition) -> String {
    format!("{} | {}", pattern, d.ascii_name())
}

pub fn verify_sigma(t: &SigmaTable) -> Result<TableReport> {
    let which: NamedGroup = t.group.parse()?;
    let cfg = CmConfig::standard(which);
    let types = table_types(&cfg, t)?;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut rows = Vec::new();
    for r in t.rows {
        let pattern = normalize_pattern(r.pattern)
            .ok_or_else(|| Error::Parse(format!("fixture pattern `{}`", r.pattern)))?;
        if let (Some(printed), Some(note)) = (r.printed, r.note) {
            notes.push(format!(
                "σ={}: printed {printed}; {note}",
                r.sigmas.join(",")
            ));
        }
        for token in r.sigmas {
            let sigma = cfg.group().element(&normalize_sigma(token))?;
            let sname = cfg.group().name(sigma).to_string();
            let split = splitting_pattern(&cfg, sigma);
            for (labels, name) in r.outcomes {
                let expected = parse_bt1_name(name)?;
                let chosen: Vec<&(char, CmType)> = types
                    .iter()
                    .filter(|(l, _)| *labels == "*" || labels.to_uppercase().contains(*l))
                    .collect();
                for (label, ty) in chosen {
                    let d = build_kraft_words(&cfg, sigma, ty);
                    let what = if types.len() == 1 {
                        format!("σ={sname}")
                    } else {
                        format!("σ={sname} type {label}")
                    };
                    rows.push(format!("{what}: {}", classify(&cfg, sigma, ty).line()));
                    checks.push(Check {
                        ok: split.pattern == pattern && d == expected,
                        what: what.clone(),
                        expected: outcome_line(&pattern, &expected),
                        computed: outcome_line(&split.pattern, &d),
                    });
                    if let Some(words) = r.words {
                        let printed = Bt1Decomposition::from_words(words.iter().copied())?;
                        checks.push(Check {
                            ok: printed == d,
                            what: format!("{what} words"),
                            expected: printed.word_list(),
                            computed: d.word_list(),
                        });
                    }
                }
            }
        }
    }
    Ok(TableReport {
        id: t.id.into(),
        title: t.title.into(),
        checks,
        notes,
        rows,
    })
}

pub fn verify_density(t: &DensityTable) -> Result<TableReport> {
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for &(n, d1, d2) in t.rows {
        let field = FieldSize::new(t.p, n)?;
        let r = density_report(&field)?;
        rows.push(r.csv_row());
        for (col, paper, got) in [("d1", d1, r.d1), ("d2", d2, r.d2)] {
            checks.push(Check {
                what: format!("q={} {col}", field.q),
                expected: format!("{paper:.10}"),
                computed: format!("{} ({}/{})", got.decimal(), got.0.numer(), got.0.denom()),
                ok: (got.to_f64() - paper).abs() <= DENSITY_TOLERANCE,
            });
        }
    }
    Ok(TableReport {
        id: t.id.into(),
        title: t.title.into(),
        checks,
        notes: Vec::new(),
        rows,
    })
}
