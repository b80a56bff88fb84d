//! Markdown, CSV and JSON renderings used by the command-line tool.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::classify::Classification;
use crate::cm::CmConfig;
use crate::error::Error;
use crate::named::NamedGroup;
use crate::verify::TableReport;
use crate::weil::DensityReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn group_list(format: Format) -> String {
    match format {
        Format::Md => {
            let mut s = String::from("| group | order | dimension | description |\n|---|---|---|---|\n");
            for g in NamedGroup::ALL {
                let _ = writeln!(s, "| {} | {} | {} | {} |", g, g.order(), g.dimension(), g.description());
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("group,order,dimension,description\n");
            for g in NamedGroup::ALL {
                let _ = writeln!(s, "{},{},{},{}", g, g.order(), g.dimension(), csv_field(g.description()));
            }
            s
        }
        Format::Json => pretty(
            &NamedGroup::ALL
                .iter()
                .map(|g| json!({"group": g.token(), "order": g.order(), "dimension": g.dimension(), "description": g.description()}))
                .collect::<Vec<_>>(),
        ),
    }
}

pub fn group_show(cfg: &CmConfig, format: Format) -> String {
    let g = cfg.group();
    let delta: Vec<&str> = cfg.delta().members().iter().map(|&e| g.name(e)).collect();
    let classes: Vec<Vec<&str>> = cfg
        .classes()
        .iter()
        .map(|c| c.members.iter().map(|&e| g.name(e)).collect())
        .collect();
    match format {
        Format::Md => {
            let mut s = format!("# {} (order {})\n\n", g.label(), g.order());
            let _ = writeln!(s, "iota = {}", g.name(cfg.iota()));
            let _ = writeln!(s, "Delta = {{{}}}\n", delta.join(", "));
            s.push_str("| element | order | central |\n|---|---|---|\n");
            for e in g.elements() {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} |",
                    g.name(e),
                    g.element_order(e),
                    g.is_central(e)
                );
            }
            s.push_str("\n| class | members | conjugate |\n|---|---|---|\n");
            for (i, m) in classes.iter().enumerate() {
                let _ = writeln!(s, "| {} | {} | {} |", i, m.join(" "), cfg.iota_class(i));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("element,order,central,class\n");
            for e in g.elements() {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    csv_field(g.name(e)),
                    g.element_order(e),
                    g.is_central(e),
                    cfg.class_of(e)
                );
            }
            s
        }
        Format::Json => pretty(&json!({
            "group": g.label(),
            "order": g.order(),
            "iota": g.name(cfg.iota()),
            "delta": delta,
            "elements": g.elements().map(|e| json!({"name": g.name(e), "order": g.element_order(e)})).collect::<Vec<_>>(),
            "classes": classes,
        })),
    }
}

pub fn classification(c: &Classification, format: Format) -> String {
    match format {
        Format::Md => format!(
            "{}\n\nwords: {}\ndegrees: {}\n",
            c.line(),
            c.bt1.word_list(),
            c.splitting.with_degrees()
        ),
        Format::Csv => format!(
            "group,sigma,cm_type,pattern,words,name,p_rank,a_number\n{},{},{},{},{},{},{},{}\n",
            c.group,
            csv_field(&c.sigma),
            csv_field(&c.cm_type),
            c.splitting.pattern,
            c.bt1.word_list(),
            csv_field(&c.bt1.ascii_name()),
            c.bt1.p_rank(),
            c.bt1.a_number()
        ),
        Format::Json => pretty(c),
    }
}

pub fn cm_types(cfg: &CmConfig, format: Format) -> String {
    let classes = cfg.cm_type_classes();
    let all = cfg.all_cm_types();
    let primitive = all.iter().filter(|t| cfg.is_primitive(t)).count();
    match format {
        Format::Md => {
            let mut s = format!(
                "{}: {} CM types, {} primitive, {} classes\n\n| class | representative | members |\n|---|---|---|\n",
                cfg.group().label(),
                all.len(),
                primitive,
                classes.len()
            );
            for c in &classes {
                let members: Vec<String> =
                    c.members.iter().map(|t| cfg.render_cm_type(t)).collect();
                let _ = writeln!(
                    s,
                    "| {} | {} | {} |",
                    c.label,
                    cfg.render_cm_type(&c.representative),
                    members.join(" ")
                );
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("class,cm_type,representative\n");
            for c in &classes {
                for t in &c.members {
                    let _ = writeln!(
                        s,
                        "{},{},{}",
                        c.label,
                        csv_field(&cfg.render_cm_type(t)),
                        *t == c.representative
                    );
                }
            }
            s
        }
        Format::Json => pretty(&json!({
            "group": cfg.group().label(),
            "cm_types": all.len(),
            "primitive": primitive,
            "classes": classes.iter().map(|c| json!({
                "label": c.label.to_string(),
                "representative": cfg.render_cm_type(&c.representative),
                "members": c.members.iter().map(|t| cfg.render_cm_type(t)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
    }
}

pub fn table_reports(reports: &[TableReport], verify: bool, format: Format) -> String {
    match format {
        Format::Md => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "## {} ({})\n", r.id, r.title);
                for row in &r.rows {
                    let _ = writeln!(s, "    {row}");
                }
                if verify {
                    let _ = writeln!(s, "\n{}", r.diff());
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("table,row\n");
            for r in reports {
                for row in &r.rows {
                    let _ = writeln!(s, "{},{}", r.id, csv_field(row));
                }
            }
            if verify {
                s.push_str("\ntable,check,ok,expected,computed\n");
                for r in reports {
                    for c in &r.checks {
                        let _ = writeln!(
                            s,
                            "{},{},{},{},{}",
                            r.id,
                            csv_field(&c.what),
                            c.ok,
                            csv_field(&c.expected),
                            csv_field(&c.computed)
                        );
                    }
                }
            }
            s
        }
        Format::Json => pretty(&reports),
    }
}

pub fn density(reports: &[DensityReport], format: Format) -> String {
    match format {
        Format::Md => {
            let mut s = String::from(
                "| q | total | b=1 | b=2 | D(b=1) | D(b=2) |\n|---|---|---|---|---|---|\n",
            );
            for r in reports {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.q,
                    r.total,
                    r.b1,
                    r.b2,
                    r.d1.decimal(),
                    r.d2.decimal()
                );
            }
            s
        }
        Format::Csv => {
            let mut s = format!("{}\n", DensityReport::CSV_HEADER);
            for r in reports {
                let _ = writeln!(s, "{}", r.csv_row());
            }
            s
        }
        Format::Json => pretty(&reports),
    }
}
