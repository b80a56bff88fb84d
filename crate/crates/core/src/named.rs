//! The seven Galois groups that occur for CM fields of degree 2, 4 and 6.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedGroup {
    C2,
    C4,
    D4,
    C6,
    C2xS3,
    E8semiC3,
    E8semiS3,
}

impl NamedGroup {
    pub const ALL: [NamedGroup; 7] = [
        NamedGroup::C2,
        NamedGroup::C4,
        NamedGroup::D4,
        NamedGroup::C6,
        NamedGroup::C2xS3,
        NamedGroup::E8semiC3,
        NamedGroup::E8semiS3,
    ];

    pub fn token(self) -> &'static str {
        match self {
            NamedGroup::C2 => "C2",
            NamedGroup::C4 => "C4",
            NamedGroup::D4 => "D4",
            NamedGroup::C6 => "C6",
            NamedGroup::C2xS3 => "C2xS3",
            NamedGroup::E8semiC3 => "E8semiC3",
            NamedGroup::E8semiS3 => "E8semiS3",
        }
    }

    pub fn order(self) -> usize {
        match self {
            NamedGroup::C2 => 2,
            NamedGroup::C4 => 4,
            NamedGroup::D4 => 8,
            NamedGroup::C6 => 6,
            NamedGroup::C2xS3 => 12,
            NamedGroup::E8semiC3 => 24,
            NamedGroup::E8semiS3 => 48,
        }
    }

    /// Dimension g of the abelian varieties whose CM field has this Galois closure group.
    pub fn dimension(self) -> usize {
        match self {
            NamedGroup::C2 => 1,
            NamedGroup::C4 | NamedGroup::D4 => 2,
            _ => 3,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            NamedGroup::C2 => "cyclic group of order 2",
            NamedGroup::C4 => "cyclic group of order 4",
            NamedGroup::D4 => "dihedral group of order 8, <x,y | y^4 = x^2 = (xy)^2 = 1>",
            NamedGroup::C6 => "cyclic group of order 6",
            NamedGroup::C2xS3 => "direct product Z/2 x S3",
            NamedGroup::E8semiC3 => "(Z/2)^3 semidirect Z/3, Z/3 cycling coordinates",
            NamedGroup::E8semiS3 => "(Z/2)^3 semidirect S3, S3 permuting coordinates",
        }
    }

    pub fn build(self) -> GroupTable {
        let g = match self {
            NamedGroup::C2 => cyclic(2),
            NamedGroup::C4 => cyclic(4),
            NamedGroup::C6 => cyclic(6),
            NamedGroup::D4 => dihedral8(),
            NamedGroup::C2xS3 => c2_times_s3(),
            NamedGroup::E8semiC3 => e8_semidirect(&S3_NAMES[..3], self.token()),
            NamedGroup::E8semiS3 => e8_semidirect(&S3_NAMES, self.token()),
        };
        g.expect("built-in group tables are valid")
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for NamedGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGroup::ALL
            .into_iter()
            .find(|g| g.token() == s.trim())
            .ok_or_else(|| Error::UnknownGroup(s.to_string()))
    }
}

/// Builds a group from its token, e.g. `"D4"`.
pub fn build_named_group(name: &str) -> Result<GroupTable> {
    Ok(name.parse::<NamedGroup>()?.build())
}

fn cyclic(n: usize) -> Result<GroupTable> {
    let els: Vec<usize> = (0..n).collect();
    let names = els
        .iter()
        .map(|&k| {
            if k == 0 {
                "1".to_string()
            } else {
                format!("g^{k}")
            }
        })
        .collect();
    let mut g = GroupTable::from_elements(&format!("C{n}"), &els, names, |a, b| (a + b) % n)?;
    let gen = g.element("g^1")?;
    g.add_alias("g", gen);
    g.add_alias("x", gen);
    for k in 1..n {
        let e = g.element(&format!("g^{k}"))?;
        g.add_alias(&format!("x^{k}"), e);
        g.add_alias(&format!("x{k}"), e);
    }
    Ok(g)
}

/// Elements `x^i y^j`, with `y x = x y⁻¹`.
fn dihedral8() -> Result<GroupTable> {
    let els: Vec<(u8, u8)> = (0..2).flat_map(|i| (0..4).map(move |j| (i, j))).collect();
    let names = els
        .iter()
        .map(|&(i, j)| {
            let x = if i == 1 { "x" } else { "" };
            let y = match j {
                0 => "",
                1 => "y",
                2 => "y2",
                _ => "y3",
            };
            match (x, y) {
                ("", "") => "1".to_string(),
                _ => format!("{x}{y}"),
            }
        })
        .collect();
    let mul = |&(i1, j1): &(u8, u8), &(i2, j2): &(u8, u8)| {
        let j = if i2 == 0 { j1 + j2 } else { 4 - j1 + j2 };
        ((i1 + i2) % 2, j % 4)
    };
    GroupTable::from_elements("D4", &els, names, mul)
}

pub(crate) const S3_NAMES: [&str; 6] = ["1", "s", "s2", "t", "ts", "ts2"];

/// S3 as coordinate permutations: `(p·v)[i] = v[p[i]]`.
type Perm = [usize; 3];

const PERM_S: Perm = [1, 2, 0];
const PERM_T: Perm = [1, 0, 2];

fn compose(x: Perm, y: Perm) -> Perm {
    // (x∘y)·v = x·(y·v), so (x∘y)[i] = y[x[i]]
    [y[x[0]], y[x[1]], y[x[2]]]
}

fn s3_perms() -> [Perm; 6] {
    let id = [0, 1, 2];
    let s2 = compose(PERM_S, PERM_S);
    [
        id,
        PERM_S,
        s2,
        PERM_T,
        compose(PERM_T, PERM_S),
        compose(PERM_T, s2),
    ]
}

fn act(p: Perm, v: [u8; 3]) -> [u8; 3] {
    [v[p[0]], v[p[1]], v[p[2]]]
}

fn c2_times_s3() -> Result<GroupTable> {
    let perms = s3_perms();
    let els: Vec<(u8, Perm)> = (0..2)
        .flat_map(|c| perms.iter().map(move |&p| (c, p)))
        .collect();
    let names = els
        .iter()
        .map(|&(c, p)| format!("({c};{})", s3_name(&perms, p)))
        .collect();
    GroupTable::from_elements("C2xS3", &els, names, |&(c1, p1), &(c2, p2)| {
        ((c1 + c2) % 2, compose(p1, p2))
    })
}

fn e8_semidirect(words: &[&str], label: &str) -> Result<GroupTable> {
    let perms = s3_perms();
    let allowed: Vec<Perm> = words
        .iter()
        .map(|w| perms[S3_NAMES.iter().position(|n| n == w).unwrap()])
        .collect();
    let mut els: Vec<([u8; 3], Perm)> = Vec::with_capacity(8 * allowed.len());
    for a1 in 0..2 {
        for a2 in 0..2 {
            for a3 in 0..2 {
                for &p in &allowed {
                    els.push(([a1, a2, a3], p));
                }
            }
        }
    }
    let names = els
        .iter()
        .map(|&(a, p)| format!("({},{},{};{})", a[0], a[1], a[2], s3_name(&perms, p)))
        .collect();
    GroupTable::from_elements(label, &els, names, |&(a, p), &(b, q)| {
        let pb = act(p, b);
        (
            [(a[0] + pb[0]) % 2, (a[1] + pb[1]) % 2, (a[2] + pb[2]) % 2],
            compose(p, q),
        )
    })
}

fn s3_name(perms: &[Perm; 6], p: Perm) -> &'static str {
    S3_NAMES[perms.iter().position(|&q| q == p).unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match() {
        for g in NamedGroup::ALL {
            assert_eq!(g.build().order(), g.order(), "{g}");
        }
    }

    #[test]
    fn unknown_group_token() {
        let err = build_named_group("Q8").unwrap_err();
        assert_eq!(err, Error::UnknownGroup("Q8".into()));
        assert!(err.to_string().contains("unknown group"));
    }

    #[test]
    fn s3_relations() {
        let g = NamedGroup::C2xS3.build();
        let e = |s: &str| g.element(s).unwrap();
        let (s, t) = (e("(0;s)"), e("(0;t)"));
        assert_eq!(g.pow(s, 3), g.identity());
        assert_eq!(g.pow(t, 2), g.identity());
        assert_eq!(g.mul(t, s), e("(0;ts)"));
        assert_eq!(g.mul(t, g.mul(s, s)), e("(0;ts2)"));
        // t s = s² t
        assert_eq!(g.mul(t, s), g.mul(g.mul(s, s), t));
        assert_eq!(g.mul(s, t), e("(0;ts2)"));
    }

    #[test]
    fn d4_names_in_enumeration_order() {
        let g = NamedGroup::D4.build();
        assert_eq!(g.names(), ["1", "y", "y2", "y3", "x", "xy", "xy2", "xy3"]);
        let e = |s: &str| g.element(s).unwrap();
        assert_eq!(g.mul(e("y"), e("x")), e("xy3"));
        assert_eq!(g.mul(e("x"), e("y2")), e("xy2"));
    }

    #[test]
    fn cyclic_aliases() {
        let g = NamedGroup::C4.build();
        assert_eq!(g.element("x").unwrap(), g.element("g^1").unwrap());
        assert_eq!(g.element("x^2").unwrap(), g.element("g^2").unwrap());
        assert_eq!(g.name(g.element("x3").unwrap()), "g^3");
        assert!(g.element("g^4").is_err());
    }
}
