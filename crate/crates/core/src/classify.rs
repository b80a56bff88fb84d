//! Full reports for one `(σ, CM type)` and sweeps over a whole group.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cm::{CmConfig, CmType};
use crate::group::ElementId;
use crate::kraft::{build_kraft_words, Bt1Decomposition};
use crate::named::NamedGroup;
use crate::splitting::{splitting_pattern, SplittingPattern};

/// Splitting of p and the BT₁ decomposition for one choice of σ and CM type.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub group: String,
    pub sigma: String,
    pub cm_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm_class: Option<char>,
    pub splitting: SplittingPattern,
    pub bt1: Bt1Decomposition,
}

pub fn classify(cfg: &CmConfig, sigma: ElementId, cm_type: &CmType) -> Classification {
    Classification {
        group: cfg.group().label().to_string(),
        sigma: cfg.group().name(sigma).to_string(),
        cm_type: cfg.render_cm_type(cm_type),
        cm_class: None,
        splitting: splitting_pattern(cfg, sigma),
        bt1: build_kraft_words(cfg, sigma, cm_type),
    }
}

impl Classification {
    /// `P1 P1c P2 | Z/pZ x mu_p x I_{1,1} | f=1 a=1`
    pub fn line(&self) -> String {
        format!(
            "{} | {} | f={} a={}",
            self.splitting.pattern,
            self.bt1.ascii_name(),
            self.bt1.p_rank(),
            self.bt1.a_number()
        )
    }

    pub fn summary(&self) -> SummaryRow {
        SummaryRow {
            pattern: self.splitting.pattern.clone(),
            name: self.bt1.ascii_name(),
            p_rank: self.bt1.p_rank(),
            a_number: self.bt1.a_number(),
        }
    }
}

/// One row at the granularity of the per-dimension summary tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SummaryRow {
    pub pattern: String,
    pub name: String,
    pub p_rank: usize,
    pub a_number: usize,
}

impl SummaryRow {
    pub fn line(&self) -> String {
        format!(
            "{} | {} | f={} a={}",
            self.pattern, self.name, self.p_rank, self.a_number
        )
    }
}

/// Every σ ∈ G against the least representative of every primitive CM type class.
pub fn sweep(cfg: &CmConfig) -> Vec<Classification> {
    let classes = cfg.cm_type_classes();
    let mut out = Vec::with_capacity(cfg.group().order() * classes.len());
    for sigma in cfg.group().elements() {
        for class in &classes {
            let mut c = classify(cfg, sigma, &class.representative);
            c.cm_class = Some(class.label);
            out.push(c);
        }
    }
    out
}

pub fn summary_rows(cfg: &CmConfig) -> BTreeSet<SummaryRow> {
    sweep(cfg).iter().map(Classification::summary).collect()
}

/// Union of summary rows over all groups of the given dimension.
pub fn dimension_rows(dim: usize) -> BTreeSet<SummaryRow> {
    NamedGroup::ALL
        .into_iter()
        .filter(|g| g.dimension() == dim)
        .flat_map(|g| summary_rows(&CmConfig::standard(g)))
        .collect()
}
