//! Factorization of `p·O_K` read off from the double cosets `Δ\G/⟨σ⟩`.

use std::fmt;

use serde::Serialize;

use crate::cm::CmConfig;
use crate::group::ElementId;

/// One prime above p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prime {
    pub id: usize,
    pub f: usize,
    pub conj: usize,
    #[serde(skip)]
    pub label: String,
    #[serde(skip)]
    pub double_coset: Vec<ElementId>,
}

impl Prime {
    pub fn is_self_conjugate(&self) -> bool {
        self.id == self.conj
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingPattern {
    pub primes: Vec<Prime>,
    pub pattern: String,
}

impl SplittingPattern {
    pub fn degrees(&self) -> Vec<usize> {
        self.primes.iter().map(|p| p.f).collect()
    }

    pub fn degree_sum(&self) -> usize {
        self.primes.iter().map(|p| p.f).sum()
    }

    pub fn all_self_conjugate(&self) -> bool {
        self.primes.iter().all(Prime::is_self_conjugate)
    }

    /// The pattern followed by its residue degrees, e.g. `P1 P1c P2 [f=1,1,2]`.
    pub fn with_degrees(&self) -> String {
        let f: Vec<String> = self.primes.iter().map(|p| p.f.to_string()).collect();
        format!("{} [f={}]", self.pattern, f.join(","))
    }
}

impl fmt::Display for SplittingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pattern)
    }
}

struct RawPrime {
    f: usize,
    coset: Vec<ElementId>,
    conj: usize,
}

pub fn splitting_pattern(cfg: &CmConfig, sigma: ElementId) -> SplittingPattern {
    let g = cfg.group();
    let sub = g.cyclic_subgroup(sigma);
    let cosets = g.double_cosets(cfg.delta(), &sub);
    let delta = cfg.delta().order();
    let find = |e: ElementId| {
        cosets
            .iter()
            .position(|d| d.binary_search(&e).is_ok())
            .unwrap()
    };
    let raw: Vec<RawPrime> = cosets
        .iter()
        .map(|d| RawPrime {
            f: d.len() / delta,
            conj: find(g.mul(cfg.iota(), d[0])),
            coset: d.clone(),
        })
        .collect();
    build(raw)
}

/// Orders pairs, then self-conjugate primes, each by descending degree and
/// then by position, and numbers them in that order.
fn build(raw: Vec<RawPrime>) -> SplittingPattern {
    let mut pairs: Vec<usize> = (0..raw.len()).filter(|&i| raw[i].conj > i).collect();
    let mut selfs: Vec<usize> = (0..raw.len()).filter(|&i| raw[i].conj == i).collect();
    pairs.sort_by_key(|&i| (std::cmp::Reverse(raw[i].f), i));
    selfs.sort_by_key(|&i| (std::cmp::Reverse(raw[i].f), i));

    let total = 2 * pairs.len() + selfs.len();
    let single_pair = pairs.len() == 1 && selfs.is_empty();
    let mut primes = Vec::with_capacity(total);
    let mut k = 0;
    for &i in &pairs {
        k += 1;
        let (a, b) = if single_pair {
            ("P".to_string(), "Pc".to_string())
        } else {
            (format!("P{k}"), format!("P{k}c"))
        };
        let id = primes.len() + 1;
        primes.push(Prime {
            id,
            f: raw[i].f,
            conj: id + 1,
            label: a,
            double_coset: raw[i].coset.clone(),
        });
        let j = raw[i].conj;
        primes.push(Prime {
            id: id + 1,
            f: raw[j].f,
            conj: id,
            label: b,
            double_coset: raw[j].coset.clone(),
        });
    }
    for &i in &selfs {
        k += 1;
        let id = primes.len() + 1;
        primes.push(Prime {
            id,
            f: raw[i].f,
            conj: id,
            label: if total == 1 {
                "P".into()
            } else {
                format!("P{k}")
            },
            double_coset: raw[i].coset.clone(),
        });
    }
    let pattern = render_pattern(&primes);
    SplittingPattern { primes, pattern }
}

pub fn render_pattern(primes: &[Prime]) -> String {
    let labels: Vec<&str> = primes.iter().map(|p| p.label.as_str()).collect();
    labels.join(" ")
}

/// Normalizes a hand-written pattern such as `P_1P_1^cP_2` or
/// `P1 P2 P1c P2c` to the canonical spelling.
pub fn normalize_pattern(text: &str) -> Option<String> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '^' | '{' | '}' | '\\' | '$'))
        .collect();
    let mut tokens: Vec<(Option<usize>, bool)> = Vec::new();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        rest = rest.strip_prefix('P')?;
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        rest = &rest[digits.len()..];
        let conj = rest.starts_with('c');
        if conj {
            rest = &rest[1..];
        }
        let n = if digits.is_empty() {
            None
        } else {
            Some(digits.parse().ok()?)
        };
        tokens.push((n, conj));
    }
    let mut pairs = 0;
    let mut selfs = 0;
    let mut ids: Vec<Option<usize>> = tokens.iter().map(|t| t.0).collect();
    ids.sort();
    ids.dedup();
    for id in ids {
        let has_plain = tokens.contains(&(id, false));
        let has_conj = tokens.contains(&(id, true));
        match (has_plain, has_conj) {
            (true, true) => pairs += 1,
            (true, false) => selfs += 1,
            _ => return None,
        }
    }
    let raw: Vec<RawPrime> = (0..pairs)
        .flat_map(|k| {
            [
                RawPrime {
                    f: 1,
                    coset: vec![],
                    conj: 2 * k + 1,
                },
                RawPrime {
                    f: 1,
                    coset: vec![],
                    conj: 2 * k,
                },
            ]
        })
        .chain((0..selfs).map(|k| RawPrime {
            f: 1,
            coset: vec![],
            conj: 2 * pairs + k,
        }))
        .collect();
    Some(build(raw).pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_written_patterns() {
        assert_eq!(
            normalize_pattern("P_{1}P_{1}^{c}P_{2}").unwrap(),
            "P1 P1c P2"
        );
        assert_eq!(normalize_pattern("P1P2P1cP2c").unwrap(), "P1 P1c P2 P2c");
        assert_eq!(normalize_pattern("PP^c").unwrap(), "P Pc");
        assert_eq!(normalize_pattern("P").unwrap(), "P");
        assert_eq!(normalize_pattern("P1P2P3").unwrap(), "P1 P2 P3");
        assert_eq!(normalize_pattern("P1P1cP2P3").unwrap(), "P1 P1c P2 P3");
        assert!(normalize_pattern("P1c").is_none());
        assert!(normalize_pattern("Q1").is_none());
    }
}
