//! Kraft circular words and the BT₁ group schemes they describe.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cm::{CmConfig, CmType};
use crate::error::{Error, Result};
use crate::group::ElementId;

/// A primitive circular word over `{F, V}`, stored as its least rotation
/// (with `F < V`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KraftWord(String);

impl KraftWord {
    /// Accepts any rotation of a primitive word.
    pub fn new(word: &str) -> Result<Self> {
        let (w, k) = primitive_period(word)?;
        if k != 1 {
            return Err(Error::Parse(format!("`{word}` is periodic ({}^{k})", w.0)));
        }
        Ok(w)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_f(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'F').count()
    }

    pub fn count_v(&self) -> usize {
        self.len() - self.count_f()
    }

    pub fn is_pure(&self) -> bool {
        self.count_f() == 0 || self.count_v() == 0
    }

    /// Number of maximal runs of `F` around the circle; zero for pure words.
    pub fn f_runs(&self) -> usize {
        if self.is_pure() {
            return 0;
        }
        let b = self.0.as_bytes();
        let n = b.len();
        (0..n)
            .filter(|&i| b[i] == b'F' && b[(i + n - 1) % n] == b'V')
            .count()
    }

    /// Swap F and V, reverse, and canonicalize.
    pub fn dual(&self) -> KraftWord {
        let swapped: String = self
            .0
            .chars()
            .rev()
            .map(|c| if c == 'F' { 'V' } else { 'F' })
            .collect();
        KraftWord(canonical_rotation(&swapped).expect("valid letters"))
    }
}

impl fmt::Display for KraftWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for KraftWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KraftWord::new(s)
    }
}

impl Serialize for KraftWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

fn check_letters(word: &str) -> Result<()> {
    if word.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    if let Some(c) = word.chars().find(|&c| c != 'F' && c != 'V') {
        return Err(Error::Parse(format!("letter `{c}` in word `{word}`")));
    }
    Ok(())
}

/// Least rotation of a word over `{F, V}`.
pub fn canonical_rotation(word: &str) -> Result<String> {
    check_letters(word)?;
    let n = word.len();
    let doubled = word.repeat(2);
    Ok((0..n)
        .map(|i| &doubled[i..i + n])
        .min()
        .expect("nonempty")
        .to_string())
}

/// Splits a circular word into `(primitive word, k)` with `word = w^k` up to rotation.
pub fn primitive_period(word: &str) -> Result<(KraftWord, usize)> {
    check_letters(word)?;
    let n = word.len();
    let b = word.as_bytes();
    let d = (1..=n)
        .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| b[i] == b[i - d]))
        .expect("d = n always works");
    Ok((KraftWord(canonical_rotation(&word[..d])?), n / d))
}

/// The multiset of Kraft words of a BT₁ group scheme with its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bt1Decomposition {
    components: Vec<(KraftWord, usize)>,
}

impl Bt1Decomposition {
    /// Builds the multiset from arbitrary (possibly periodic) circular words.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut counts: BTreeMap<KraftWord, usize> = BTreeMap::new();
        for w in words {
            let (p, k) = primitive_period(w)?;
            *counts.entry(p).or_default() += k;
        }
        Ok(Bt1Decomposition {
            components: counts.into_iter().collect(),
        })
    }

    pub fn from_components(components: impl IntoIterator<Item = (KraftWord, usize)>) -> Self {
        let mut counts: BTreeMap<KraftWord, usize> = BTreeMap::new();
        for (w, k) in components {
            if k > 0 {
                *counts.entry(w).or_default() += k;
            }
        }
        Bt1Decomposition {
            components: counts.into_iter().collect(),
        }
    }

    /// Components sorted by word.
    pub fn components(&self) -> &[(KraftWord, usize)] {
        &self.components
    }

    pub fn multiplicity(&self, word: &str) -> usize {
        self.components
            .iter()
            .find(|(w, _)| w.as_str() == word)
            .map_or(0, |(_, k)| *k)
    }

    /// Total number of letters, i.e. `2g`.
    pub fn total_length(&self) -> usize {
        self.components.iter().map(|(w, k)| w.len() * k).sum()
    }

    pub fn letter_counts(&self) -> (usize, usize) {
        self.components.iter().fold((0, 0), |(f, v), (w, k)| {
            (f + w.count_f() * k, v + w.count_v() * k)
        })
    }

    pub fn p_rank(&self) -> usize {
        self.multiplicity("F")
    }

    pub fn a_number(&self) -> usize {
        self.components.iter().map(|(w, k)| w.f_runs() * k).sum()
    }

    pub fn dual(&self) -> Self {
        Self::from_components(self.components.iter().map(|(w, k)| (w.dual(), *k)))
    }

    pub fn name(&self) -> String {
        name_bt1(&self.components, NameStyle::Unicode)
    }

    pub fn ascii_name(&self) -> String {
        name_bt1(&self.components, NameStyle::Ascii)
    }

    /// `"F^1 V^1 FV^1"`-style listing, sorted by word.
    pub fn word_list(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(w, k)| format!("{w}^{k}"))
            .collect();
        parts.join(" ")
    }
}

impl Serialize for Bt1Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Component<'a> {
            word: &'a KraftWord,
            mult: usize,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            components: Vec<Component<'a>>,
            name: String,
            p_rank: usize,
            a_number: usize,
        }
        Repr {
            components: self
                .components
                .iter()
                .map(|(word, mult)| Component { word, mult: *mult })
                .collect(),
            name: self.name(),
            p_rank: self.p_rank(),
            a_number: self.a_number(),
        }
        .serialize(s)
    }
}

/// Orbits of `c ↦ σ·c` on G/Δ, each listed from its smallest class.
pub fn frobenius_orbits(cfg: &CmConfig, sigma: ElementId) -> Vec<Vec<usize>> {
    let n = cfg.classes().len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut c = cfg.left_act(sigma, start);
        while c != start {
            seen[c] = true;
            orbit.push(c);
            c = cfg.left_act(sigma, c);
        }
        orbits.push(orbit);
    }
    orbits
}

/// One circular word per Frobenius orbit: `F` on S¹, `V` on S⁰.
pub fn orbit_words(cfg: &CmConfig, sigma: ElementId, cm_type: &CmType) -> Vec<String> {
    frobenius_orbits(cfg, sigma)
        .into_iter()
        .map(|orbit| {
            orbit
                .into_iter()
                .map(|c| if cm_type.contains(c) { 'F' } else { 'V' })
                .collect()
        })
        .collect()
}

pub fn build_kraft_words(cfg: &CmConfig, sigma: ElementId, cm_type: &CmType) -> Bt1Decomposition {
    let words = orbit_words(cfg, sigma, cm_type);
    Bt1Decomposition::from_words(words.iter().map(String::as_str))
        .expect("orbit words use F and V only")
}

pub fn invariants_of(d: &Bt1Decomposition) -> (usize, usize) {
    (d.p_rank(), d.a_number())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameStyle {
    Unicode,
    Ascii,
}

struct Glyphs {
    etale: &'static str,
    mult: &'static str,
    times: &'static str,
}

impl NameStyle {
    fn glyphs(self) -> Glyphs {
        match self {
            NameStyle::Unicode => Glyphs {
                etale: "ℤ/pℤ",
                mult: "μ_p",
                times: " × ",
            },
            NameStyle::Ascii => Glyphs {
                etale: "Z/pZ",
                mult: "mu_p",
                times: " x ",
            },
        }
    }
}

const NAMED: [(&str, &str); 4] = [
    ("FFFVVV", "I_{3,1}"),
    ("FFVV", "I_{2,1}"),
    ("FV", "I_{1,1}"),
    ("FFV+FVV", "I_{3,2}"),
];

fn power(base: &str, k: usize) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

/// Display name of a BT₁ group scheme.
///
/// Order: the étale/multiplicative part, then `I_{3,2}`, `I_{3,1}`,
/// `I_{2,1}`, `I_{1,1}`, then any other word as `G[word]`.
pub fn name_bt1(components: &[(KraftWord, usize)], style: NameStyle) -> String {
    let g = style.glyphs();
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for (w, k) in components {
        *counts.entry(w.as_str()).or_default() += k;
    }
    let mut take = |w: &str| counts.remove(w).unwrap_or(0);
    let mut factors = Vec::new();

    let (nv, nf) = (take("V"), take("F"));
    let pure = nv.min(nf);
    if pure == 1 {
        factors.push(format!("{}{}{}", g.etale, g.times, g.mult));
    } else if pure > 1 {
        factors.push(format!("({}{}{})^{pure}", g.etale, g.times, g.mult));
    }
    if nv > pure {
        factors.push(power(&format!("({})", g.etale), nv - pure));
    }
    if nf > pure {
        factors.push(power(&format!("({})", g.mult), nf - pure));
    }

    let (a, b) = (take("FFV"), take("FVV"));
    let pairs = a.min(b);
    if pairs > 0 {
        factors.push(power("I_{3,2}", pairs));
    }
    let mut rest: Vec<(String, usize)> = Vec::new();
    if a > pairs {
        rest.push(("FFV".into(), a - pairs));
    }
    if b > pairs {
        rest.push(("FVV".into(), b - pairs));
    }
    for (word, label) in NAMED.iter().take(3) {
        let k = take(word);
        if k > 0 {
            factors.push(power(label, k));
        }
    }
    rest.extend(counts.into_iter().map(|(w, k)| (w.to_string(), k)));
    rest.sort();
    for (w, k) in rest {
        factors.push(power(&format!("G[{w}]"), k));
    }
    if factors.is_empty() {
        return "0".into();
    }
    factors.join(g.times)
}

/// Parses a BT₁ name in either style, also accepting `ℤ/p`, `Z/p` and
/// separate powers such as `(Z/p)^3 x (mu_p)^3`.
pub fn parse_bt1_name(text: &str) -> Result<Bt1Decomposition> {
    let mut acc: BTreeMap<String, usize> = BTreeMap::new();
    parse_product(text.trim(), 1, &mut acc)?;
    let comps = acc
        .into_iter()
        .map(|(w, k)| KraftWord::new(&w).map(|w| (w, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Bt1Decomposition::from_components(comps))
}

fn split_factors(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, ch) = bytes[i];
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            '×' if depth == 0 => {
                out.push(s[start..pos].trim());
                start = pos + ch.len_utf8();
            }
            'x' if depth == 0 && s[pos..].starts_with("x ") && s[..pos].ends_with(' ') => {
                out.push(s[start..pos].trim());
                start = pos + 1;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    out.push(s[start..].trim());
    if out.iter().any(|f| f.is_empty()) {
        return Err(Error::Parse(format!("empty factor in `{s}`")));
    }
    Ok(out)
}

fn parse_exponent(s: &str) -> Result<(&str, usize)> {
    for (sup, k) in [("²", 2), ("³", 3)] {
        if let Some(base) = s.strip_suffix(sup) {
            return Ok((base, k));
        }
    }
    match s.rfind('^') {
        Some(i) if !s[i + 1..].contains(['}', ')', ']']) => {
            let e = s[i + 1..].trim_matches(|c| c == '{' || c == '}');
            let k = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            Ok((&s[..i], k))
        }
        _ => Ok((s, 1)),
    }
}

fn parse_product(s: &str, mult: usize, acc: &mut BTreeMap<String, usize>) -> Result<()> {
    for factor in split_factors(s)? {
        let (base, k) = parse_exponent(factor)?;
        let base = base.trim();
        let k = k * mult;
        if let Some(inner) = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            parse_product(inner, k, acc)?;
            continue;
        }
        let words: Vec<String> = match base.replace(' ', "").as_str() {
            "ℤ/pℤ" | "ℤ/p" | "Z/pZ" | "Z/p" => vec!["V".into()],
            "μ_p" | "μ_{p}" | "mu_p" | "mu_{p}" => vec!["F".into()],
            "I_{1,1}" | "I_{11}" => vec!["FV".into()],
            "I_{2,1}" | "I_{21}" => vec!["FFVV".into()],
            "I_{3,1}" | "I_{31}" => vec!["FFFVVV".into()],
            "I_{3,2}" | "I_{32}" => vec!["FFV".into(), "FVV".into()],
            "0" => vec![],
            other => match other.strip_prefix("G[").and_then(|b| b.strip_suffix(']')) {
                Some(w) => vec![canonical_rotation(w)?],
                None => return Err(Error::Parse(format!("unknown BT1 factor `{base}`"))),
            },
        };
        for w in words {
            *acc.entry(w).or_default() += k;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(pairs: &[(&str, usize)]) -> Bt1Decomposition {
        Bt1Decomposition::from_components(
            pairs.iter().map(|&(w, k)| (KraftWord::new(w).unwrap(), k)),
        )
    }

    #[test]
    fn rotations_and_periods() {
        assert_eq!(canonical_rotation("VF").unwrap(), "FV");
        let (w, k) = primitive_period("FVFV").unwrap();
        assert_eq!((w.as_str(), k), ("FV", 2));
        let (w, k) = primitive_period("FFVFV").unwrap();
        assert_eq!((w.as_str(), k), ("FFVFV", 1));
        assert_eq!(primitive_period("VVV").unwrap().0.as_str(), "V");
        assert!(KraftWord::new("FVFV").is_err());
        assert!(canonical_rotation("FXV").is_err());
        assert!(canonical_rotation("").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(dec(&[("FV", 2)]).name(), "I_{1,1}^2");
        assert_eq!(dec(&[("FFV", 1), ("FVV", 1)]).name(), "I_{3,2}");
        assert_eq!(
            dec(&[("F", 1), ("V", 1), ("FV", 1)]).name(),
            "ℤ/pℤ × μ_p × I_{1,1}"
        );
        assert_eq!(
            dec(&[("F", 1), ("V", 1), ("FV", 1)]).ascii_name(),
            "Z/pZ x mu_p x I_{1,1}"
        );
        assert_eq!(dec(&[("F", 3), ("V", 3)]).name(), "(ℤ/pℤ × μ_p)^3");
        assert_eq!(dec(&[("FFVV", 1), ("FV", 1)]).name(), "I_{2,1} × I_{1,1}");
        assert_eq!(dec(&[("FFV", 2)]).ascii_name(), "G[FFV]^2");
        assert_eq!(dec(&[("FFVFV", 1)]).ascii_name(), "G[FFVFV]");
    }

    #[test]
    fn invariants() {
        assert_eq!(invariants_of(&dec(&[("FFVV", 1)])), (0, 1));
        assert_eq!(invariants_of(&dec(&[("FFV", 1), ("FVV", 1)])), (0, 2));
        assert_eq!(invariants_of(&dec(&[("F", 3), ("V", 3)])), (3, 0));
        assert_eq!(dec(&[("FVFFVV", 1)]).a_number(), 2);
    }

    #[test]
    fn periodic_orbits_split() {
        let d = Bt1Decomposition::from_words(["FVFVFV", "FFF", "VVV"]).unwrap();
        assert_eq!(d.multiplicity("FV"), 3);
        assert_eq!(d.p_rank(), 3);
        assert_eq!(d.total_length(), 12);
    }

    #[test]
    fn parse_names() {
        for s in [
            "(Z/pZ x mu_p)^3",
            "(ℤ/p)^3 × (μ_p)^3",
            "ℤ/pℤ × μ_p × I_{1,1}^2",
            "I_{2,1} x I_{1,1}",
            "I_{3,2}",
            "I_{1,1}³",
            "G[FFVFV]",
        ] {
            let d = parse_bt1_name(s).unwrap();
            assert_eq!(parse_bt1_name(&d.ascii_name()).unwrap(), d, "{s}");
            assert_eq!(parse_bt1_name(&d.name()).unwrap(), d, "{s}");
        }
        assert_eq!(
            parse_bt1_name("(ℤ/p)^3 × (μ_p)^3").unwrap(),
            dec(&[("F", 3), ("V", 3)])
        );
        assert!(parse_bt1_name("I_{1,2}").is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(dec(&[("FV", 1)])).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"components":[{"word":"FV","mult":1}],"name":"I_{1,1}","p_rank":0,"a_number":1})
        );
    }
}
