//! CM configurations `(G, Δ, ι)` and CM types as sets of coset classes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{CosetClass, ElementId, GroupTable, Subgroup};
use crate::named::NamedGroup;

/// Galois data of a CM field: the group of its Galois closure, the subgroup
/// fixing the field and the central complex conjugation.
#[derive(Clone, Debug)]
pub struct CmConfig {
    group: GroupTable,
    delta: Subgroup,
    iota: ElementId,
    classes: Vec<CosetClass>,
    class_of: Vec<usize>,
    iota_on_classes: Vec<usize>,
    named: Option<NamedGroup>,
}

/// A CM type: the set `S¹` of class indices. `S⁰` is its ι-image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CmType {
    s1: Vec<usize>,
}

/// An orbit of primitive CM types under the automorphisms of the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmTypeClass {
    pub label: char,
    pub representative: CmType,
    pub members: Vec<CmType>,
}

pub fn make_cm_config(group: GroupTable, delta: Subgroup, iota: ElementId) -> Result<CmConfig> {
    CmConfig::new(group, delta, iota)
}

impl CmConfig {
    pub fn new(group: GroupTable, delta: Subgroup, iota: ElementId) -> Result<Self> {
        let delta = Subgroup::new(&group, delta.members().iter().copied())?;
        let name = group.name(iota).to_string();
        if group.element_order(iota) != 2 {
            return Err(Error::IotaNotInvolution(name));
        }
        if delta.contains(iota) {
            return Err(Error::IotaInSubgroup(name));
        }
        if !group.is_central(iota) {
            return Err(Error::IotaNotCentral(name));
        }
        let classes = group.left_cosets(&delta);
        let mut class_of = vec![0; group.order()];
        for (i, c) in classes.iter().enumerate() {
            for m in &c.members {
                class_of[m.index()] = i;
            }
        }
        let iota_on_classes = classes
            .iter()
            .map(|c| class_of[group.mul(iota, c.representative).index()])
            .collect();
        Ok(CmConfig {
            group,
            delta,
            iota,
            classes,
            class_of,
            iota_on_classes,
            named: None,
        })
    }

    /// The configuration used throughout for each named group.
    pub fn standard(which: NamedGroup) -> Self {
        let g = which.build();
        let e = |s: &str| g.element(s).expect("standard element name");
        let (gens, iota): (Vec<ElementId>, ElementId) = match which {
            NamedGroup::C2 => (vec![], e("g^1")),
            NamedGroup::C4 => (vec![], e("g^2")),
            NamedGroup::C6 => (vec![], e("g^3")),
            NamedGroup::D4 => (vec![e("x")], e("y2")),
            NamedGroup::C2xS3 => (vec![e("(0;t)")], e("(1;1)")),
            NamedGroup::E8semiC3 => (vec![e("(1,0,0;1)"), e("(0,1,0;1)")], e("(1,1,1;1)")),
            NamedGroup::E8semiS3 => (
                vec![e("(1,0,0;1)"), e("(0,1,0;1)"), e("(0,0,0;t)")],
                e("(1,1,1;1)"),
            ),
        };
        let delta = Subgroup::generated(&g, &gens);
        let mut cfg = CmConfig::new(g, delta, iota).expect("standard configurations are valid");
        cfg.named = Some(which);
        cfg
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn delta(&self) -> &Subgroup {
        &self.delta
    }

    pub fn iota(&self) -> ElementId {
        self.iota
    }

    pub fn named(&self) -> Option<NamedGroup> {
        self.named
    }

    pub fn classes(&self) -> &[CosetClass] {
        &self.classes
    }

    /// Half the number of classes, i.e. the dimension of the abelian variety.
    pub fn genus(&self) -> usize {
        self.classes.len() / 2
    }

    pub fn class_of(&self, g: ElementId) -> usize {
        self.class_of[g.index()]
    }

    pub fn iota_class(&self, c: usize) -> usize {
        self.iota_on_classes[c]
    }

    /// Class index of `g·c` (left action of G on G/Δ).
    pub fn left_act(&self, g: ElementId, c: usize) -> usize {
        self.class_of(self.group.mul(g, self.classes[c].representative))
    }

    /// Class index of `c·n`; only meaningful for `n` normalizing Δ.
    pub fn right_act(&self, c: usize, n: ElementId) -> usize {
        self.class_of(self.group.mul(self.classes[c].representative, n))
    }

    pub fn class_name(&self, c: usize) -> &str {
        self.group.name(self.classes[c].representative)
    }

    /// ι-orbits on classes as `(c, ιc)` with `c < ιc`.
    pub fn conjugate_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.classes.len())
            .filter(|&c| c < self.iota_on_classes[c])
            .map(|c| (c, self.iota_on_classes[c]))
            .collect()
    }

    pub fn cm_type(&self, s1: impl IntoIterator<Item = usize>) -> Result<CmType> {
        let set: BTreeSet<usize> = s1.into_iter().collect();
        if let Some(&c) = set.iter().find(|&&c| c >= self.classes.len()) {
            return Err(Error::InvalidCmType(format!(
                "class index {c} out of range"
            )));
        }
        if let Some(&c) = set
            .iter()
            .find(|&&c| set.contains(&self.iota_on_classes[c]))
        {
            return Err(Error::InvalidCmType(format!(
                "[{}] and its conjugate [{}] both chosen",
                self.class_name(c),
                self.class_name(self.iota_on_classes[c])
            )));
        }
        if set.len() != self.genus() {
            return Err(Error::InvalidCmType(format!(
                "{} classes chosen, expected {}",
                set.len(),
                self.genus()
            )));
        }
        Ok(CmType {
            s1: set.into_iter().collect(),
        })
    }

    /// Parses `S1=[a,b,...]` (the `S1=` prefix and brackets are optional).
    /// Each token names any element of the intended class.
    pub fn parse_cm_type(&self, text: &str) -> Result<CmType> {
        let body = text.trim();
        let body = body.strip_prefix("S1=").unwrap_or(body).trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        let mut classes = Vec::new();
        for token in split_top_level(body) {
            let e = self.group.element(token)?;
            classes.push(self.class_of(e));
        }
        self.cm_type(classes)
    }

    pub fn render_cm_type(&self, t: &CmType) -> String {
        let names: Vec<&str> = t.s1.iter().map(|&c| self.class_name(c)).collect();
        format!("S1=[{}]", names.join(","))
    }

    pub fn all_cm_types(&self) -> Vec<CmType> {
        let pairs = self.conjugate_pairs();
        let mut out: Vec<CmType> = (0..1usize << pairs.len())
            .map(|bits| {
                let mut s1: Vec<usize> = pairs
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if bits >> k & 1 == 0 { a } else { b })
                    .collect();
                s1.sort_unstable();
                CmType { s1 }
            })
            .collect();
        out.sort();
        out
    }

    /// Union of the cosets in S¹, as a membership mask over G.
    fn lift(&self, t: &CmType) -> Vec<bool> {
        let mut mask = vec![false; self.group.order()];
        for &c in &t.s1 {
            for m in &self.classes[c].members {
                mask[m.index()] = true;
            }
        }
        mask
    }

    /// Right stabilizer `{ h : S̃·h = S̃ }` of the lifted type.
    pub fn stabilizer(&self, t: &CmType) -> Subgroup {
        let mask = self.lift(t);
        let members = self.group.elements().filter(|&h| {
            self.group
                .elements()
                .filter(|g| mask[g.index()])
                .all(|g| mask[self.group.mul(g, h).index()])
        });
        Subgroup::new(&self.group, members).expect("stabilizers are subgroups")
    }

    pub fn is_primitive(&self, t: &CmType) -> bool {
        self.stabilizer(t).order() == self.delta.order()
    }

    /// `N_G(Δ)`, acting on G/Δ from the right.
    pub fn automorphisms(&self) -> Subgroup {
        self.group.normalizer(&self.delta)
    }

    pub fn act_on_type(&self, t: &CmType, n: ElementId) -> CmType {
        let mut s1: Vec<usize> = t.s1.iter().map(|&c| self.right_act(c, n)).collect();
        s1.sort_unstable();
        CmType { s1 }
    }

    /// The orbit of `t` under the right action of `N_G(Δ)`, sorted.
    pub fn orbit_of_type(&self, t: &CmType) -> Vec<CmType> {
        let norm = self.automorphisms();
        let set: BTreeSet<CmType> = norm
            .members()
            .iter()
            .map(|&n| self.act_on_type(t, n))
            .collect();
        set.into_iter().collect()
    }

    /// Primitive CM types up to equivalence, ordered by least member.
    ///
    /// Classes are lettered `A`, `B`, ... in that order, except that the
    /// standard `E8semiS3` configuration keeps the letters of its four
    /// named types (see [`CmConfig::named_types`]).
    pub fn cm_type_classes(&self) -> Vec<CmTypeClass> {
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for t in self.all_cm_types() {
            if seen.contains(&t) || !self.is_primitive(&t) {
                continue;
            }
            let orbit = self.orbit_of_type(&t);
            seen.extend(orbit.iter().cloned());
            orbits.push(orbit);
        }
        let named = self.named_types();
        let mut used: BTreeSet<char> = BTreeSet::new();
        let mut labels = vec![None; orbits.len()];
        for (label, t) in &named {
            if let Some(i) = orbits.iter().position(|o| o.contains(t)) {
                if labels[i].is_none() {
                    labels[i] = Some(*label);
                    used.insert(*label);
                }
            }
        }
        let mut free = ('A'..='Z').filter(|c| !used.contains(c));
        orbits
            .into_iter()
            .zip(labels)
            .map(|(members, label)| CmTypeClass {
                label: label.unwrap_or_else(|| free.next().expect("fewer than 26 classes")),
                representative: members[0].clone(),
                members,
            })
            .collect()
    }

    pub fn class_by_label(&self, label: &str) -> Result<CmTypeClass> {
        let want = label.trim().trim_start_matches('(').trim_end_matches(')');
        self.cm_type_classes()
            .into_iter()
            .find(|c| want.len() == 1 && want.starts_with(c.label))
            .ok_or_else(|| Error::UnknownCmClass(label.to_string()))
    }

    /// Named CM types for `E8semiS3`, built from the six classes
    /// φ1 = [(0,0,0;1)], φ2 = ιφ1, φ3 = [(0,0,0;ts2)], φ4 = [(0,0,0;ts)],
    /// φ5 = ιφ3, φ6 = ιφ4.
    ///
    /// A = {φ1, φ3, φ4}, B = {φ2, φ3, φ4}, C = {φ1, φ5, φ4}, D = {φ1, φ3, φ6}.
    /// Empty for every other configuration.
    pub fn named_types(&self) -> Vec<(char, CmType)> {
        if self.named != Some(NamedGroup::E8semiS3) {
            return Vec::new();
        }
        let cls = |s: &str| self.class_of(self.group.element(s).expect("E8semiS3 element"));
        let p1 = cls("(0,0,0;1)");
        let p3 = cls("(0,0,0;ts2)");
        let p4 = cls("(0,0,0;ts)");
        let (p2, p5, p6) = (
            self.iota_class(p1),
            self.iota_class(p3),
            self.iota_class(p4),
        );
        [
            ('A', [p1, p3, p4]),
            ('B', [p2, p3, p4]),
            ('C', [p1, p5, p4]),
            ('D', [p1, p3, p6]),
        ]
        .into_iter()
        .map(|(l, s)| (l, self.cm_type(s).expect("named types are CM types")))
        .collect()
    }
}

impl CmType {
    pub fn s1(&self) -> &[usize] {
        &self.s1
    }

    pub fn s0(&self, cfg: &CmConfig) -> Vec<usize> {
        let mut s0: Vec<usize> = self.s1.iter().map(|&c| cfg.iota_class(c)).collect();
        s0.sort_unstable();
        s0
    }

    pub fn contains(&self, c: usize) -> bool {
        self.s1.binary_search(&c).is_ok()
    }
}

impl fmt::Display for CmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s1.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Splits on commas that are not inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}
