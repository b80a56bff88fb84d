//! Finite groups as explicit multiplication tables.
//!
//! Every group used by the crate has order at most 48, so a dense table is
//! both the simplest and the fastest representation. Element 0 is always the
//! identity.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Index of an element inside a particular [`GroupTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub(crate) usize);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite group given by its full multiplication table and element names.
#[derive(Clone, Debug)]
pub struct GroupTable {
    label: String,
    order: usize,
    mul: Vec<ElementId>,
    inv: Vec<ElementId>,
    names: Vec<String>,
    lookup: HashMap<String, ElementId>,
}

impl GroupTable {
    /// Builds a table from a concrete element list and a multiplication rule.
    ///
    /// The first element must be the identity. The result is checked
    /// exhaustively (closure, Latin square, associativity, inverses, unique
    /// names) before it is returned.
    pub fn from_elements<T, F>(
        label: &str,
        elements: &[T],
        names: Vec<String>,
        mul: F,
    ) -> Result<Self>
    where
        T: Eq + Hash + Clone,
        F: Fn(&T, &T) -> T,
    {
        let order = elements.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty element list".into()));
        }
        if names.len() != order {
            return Err(Error::InvalidTable(format!(
                "{} names for {} elements",
                names.len(),
                order
            )));
        }
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != order {
            return Err(Error::InvalidTable("duplicate elements".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for a in elements {
            for b in elements {
                let c = mul(a, b);
                let &k = index
                    .get(&c)
                    .ok_or_else(|| Error::InvalidTable("product leaves the element set".into()))?;
                table.push(ElementId(k));
            }
        }
        Self::from_table(label, table, names)
    }

    /// Builds a table from a flat row-major product table.
    pub fn from_table(label: &str, mul: Vec<ElementId>, names: Vec<String>) -> Result<Self> {
        let order = names.len();
        if mul.len() != order * order {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        if mul.iter().any(|e| e.0 >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let mut lookup = HashMap::with_capacity(order);
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), ElementId(i)).is_some() {
                return Err(Error::InvalidTable(format!("duplicate name `{n}`")));
            }
        }
        let mut g = GroupTable {
            label: label.to_string(),
            order,
            mul,
            inv: Vec::new(),
            names,
            lookup,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul[a] != ElementId(a) || self.mul[a * n] != ElementId(a) {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[self.mul[i * n + j].0] = true;
                col[self.mul[j * n + i].0] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(Error::InvalidTable("not a Latin square".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul[a * n + b].0;
                for c in 0..n {
                    let bc = self.mul[b * n + c].0;
                    if self.mul[ab * n + c] != self.mul[a * n + bc] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        let inv = (0..n)
            .map(|a| {
                let b = (0..n)
                    .find(|&b| self.mul[a * n + b].0 == 0)
                    .expect("Latin square has an inverse");
                ElementId(b)
            })
            .collect();
        self.inv = inv;
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order).map(ElementId)
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.0 * self.order + b.0]
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inv[a.0]
    }

    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn name(&self, a: ElementId) -> &str {
        &self.names[a.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks up an element by its exact printable name.
    pub fn element(&self, token: &str) -> Result<ElementId> {
        self.lookup
            .get(token.trim())
            .copied()
            .ok_or_else(|| Error::UnknownElement {
                group: self.label.clone(),
                token: token.to_string(),
            })
    }

    /// Registers an additional spelling for an existing element.
    pub(crate) fn add_alias(&mut self, alias: &str, target: ElementId) {
        self.lookup.entry(alias.to_string()).or_insert(target);
    }

    pub fn element_order(&self, a: ElementId) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: ElementId) -> bool {
        self.elements().all(|g| self.commutes(a, g))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup {
            members: self.elements().filter(|&g| self.is_central(g)).collect(),
        }
    }

    pub fn cyclic_subgroup(&self, a: ElementId) -> Subgroup {
        let mut members = vec![self.identity()];
        let mut x = a;
        while x != self.identity() {
            members.push(x);
            x = self.mul(x, a);
        }
        members.sort();
        Subgroup { members }
    }

    /// Normalizer `N_G(H) = { g : g H g⁻¹ = H }`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = self
            .elements()
            .filter(|&g| {
                h.members
                    .iter()
                    .all(|&x| h.contains(self.mul(self.mul(g, x), self.inv(g))))
            })
            .collect();
        Subgroup { members }
    }

    /// Left cosets `gH`, ordered by their minimum-index representative.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<CosetClass> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::with_capacity(self.order / h.order());
        for g in self.elements() {
            if seen[g.0] {
                continue;
            }
            let mut members: Vec<ElementId> = h.members.iter().map(|&d| self.mul(g, d)).collect();
            members.sort();
            for m in &members {
                seen[m.0] = true;
            }
            out.push(CosetClass {
                representative: members[0],
                members,
            });
        }
        out
    }

    /// Double cosets `Δ g Σ`, each sorted, ordered by minimum element.
    pub fn double_cosets(&self, delta: &Subgroup, sigma: &Subgroup) -> Vec<Vec<ElementId>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in self.elements() {
            if seen[g.0] {
                continue;
            }
            let set: BTreeSet<ElementId> = delta
                .members
                .iter()
                .flat_map(|&d| sigma.members.iter().map(move |&s| (d, s)))
                .map(|(d, s)| self.mul(self.mul(d, g), s))
                .collect();
            for m in &set {
                seen[m.0] = true;
            }
            out.push(set.into_iter().collect());
        }
        out
    }

    /// All subgroups, each given by sorted members, ordered by (order, members).
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<ElementId>> = BTreeSet::new();
        let mut frontier: Vec<Vec<ElementId>> = vec![vec![self.identity()]];
        found.insert(vec![self.identity()]);
        while let Some(h) = frontier.pop() {
            for g in self.elements() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let next = Subgroup::generated(self, &gens).members;
                if found.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<Subgroup> = found
            .into_iter()
            .map(|members| Subgroup { members })
            .collect();
        all.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members.cmp(&b.members))
        });
        all
    }

    pub fn display(&self, a: ElementId) -> ElementDisplay<'_> {
        ElementDisplay {
            group: self,
            element: a,
        }
    }
}

pub struct ElementDisplay<'a> {
    group: &'a GroupTable,
    element: ElementId,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.group.name(self.element))
    }
}

/// A subgroup stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<ElementId>,
}

impl Subgroup {
    /// Validates that `members` is closed under products and inverses.
    pub fn new(g: &GroupTable, members: impl IntoIterator<Item = ElementId>) -> Result<Self> {
        let set: BTreeSet<ElementId> = members.into_iter().collect();
        if !set.contains(&g.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in &set {
            if a.0 >= g.order() {
                return Err(Error::NotSubgroup(format!(
                    "element index {} out of range",
                    a.0
                )));
            }
            if !set.contains(&g.inv(a)) {
                return Err(Error::NotSubgroup(format!(
                    "inverse of {} missing",
                    g.name(a)
                )));
            }
            for &b in &set {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "{}·{} not in the set",
                        g.name(a),
                        g.name(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            members: set.into_iter().collect(),
        })
    }

    pub fn generated(g: &GroupTable, gens: &[ElementId]) -> Self {
        let mut set = BTreeSet::from([g.identity()]);
        let mut frontier = vec![g.identity()];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = g.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            members: set.into_iter().collect(),
        }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Subgroup {
            members: vec![g.identity()],
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Subgroup {
            members: g.elements().collect(),
        }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// A left coset `rΔ` with `r` its smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetClass {
    pub representative: ElementId,
    pub members: Vec<ElementId>,
}

impl CosetClass {
    pub fn contains(&self, a: ElementId) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupTable {
        let els: Vec<usize> = (0..n).collect();
        let names = (0..n).map(|k| k.to_string()).collect();
        GroupTable::from_elements("Z", &els, names, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn rejects_non_associative_table() {
        // a Latin square with identity that is not a group (order 5 loop)
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let mul = rows.iter().flatten().map(|&k| ElementId(k)).collect();
        let names = (0..5).map(|k| k.to_string()).collect();
        assert!(matches!(
            GroupTable::from_table("L", mul, names),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn rejects_duplicate_names() {
        let els = [0usize, 1];
        let r =
            GroupTable::from_elements("Z", &els, vec!["a".into(), "a".into()], |a, b| (a + b) % 2);
        assert!(r.is_err());
    }

    #[test]
    fn subgroup_validation() {
        let g = z(6);
        assert!(Subgroup::new(&g, [ElementId(0), ElementId(2), ElementId(4)]).is_ok());
        assert!(Subgroup::new(&g, [ElementId(0), ElementId(2)]).is_err());
        assert!(Subgroup::new(&g, [ElementId(1)]).is_err());
    }

    #[test]
    fn cyclic_orders() {
        let g = z(6);
        assert_eq!(g.element_order(ElementId(0)), 1);
        assert_eq!(g.element_order(ElementId(2)), 3);
        assert_eq!(g.element_order(ElementId(5)), 6);
        assert_eq!(g.cyclic_subgroup(ElementId(4)).order(), 3);
    }

    #[test]
    fn subgroups_of_z6() {
        let g = z(6);
        let orders: Vec<usize> = g.subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn trivial_and_whole_cosets() {
        let g = z(6);
        assert_eq!(g.left_cosets(&Subgroup::whole(&g)).len(), 1);
        assert_eq!(g.left_cosets(&Subgroup::trivial(&g)).len(), 6);
    }
}
