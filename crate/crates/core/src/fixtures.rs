//! Published tables, transcribed as printed.
//!
//! Patterns and names keep their printed form (`P1P1cP2`, `(Z/p)^3 x (mu_p)^3`)
//! and are normalized when compared. σ tokens are normalized by
//! [`normalize_sigma`]: `s^2 → s2`, `ts^2 → ts2`, `st → ts2`.

/// A summary table: distinct (pattern, BT₁, p-rank, a-number) rows.
pub struct SummaryTable {
    pub id: &'static str,
    pub title: &'static str,
    pub dimension: usize,
    /// Group tokens whose sweeps are united to produce this table.
    pub groups: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static str, usize, usize)],
}

/// A per-σ table: each row fixes a list of σ and gives the outcome per CM type.
pub struct SigmaTable {
    pub id: &'static str,
    pub title: &'static str,
    pub dimension: usize,
    pub group: &'static str,
    /// Type labels with their definitions; `None` uses the named types of the
    /// configuration (the `E8semiS3` letters A to D).
    pub types: Option<&'static [(char, &'static str)]>,
    pub rows: &'static [SigmaRow],
}

pub struct SigmaRow {
    pub sigmas: &'static [&'static str],
    pub pattern: &'static str,
    /// Printed Kraft words, when the table has a words column.
    pub words: Option<&'static [&'static str]>,
    /// `(type labels, BT₁ name)`; labels `"*"` means every type.
    pub outcomes: &'static [(&'static str, &'static str)],
    /// Printed BT₁ text when it differs from `outcomes` (see [`SigmaRow::note`]).
    pub printed: Option<&'static str>,
    pub note: Option<&'static str>,
}

pub struct DensityTable {
    pub id: &'static str,
    pub title: &'static str,
    pub p: u64,
    /// `(n, D(b = 1), D(b = 2))` as printed.
    pub rows: &'static [(u32, f64, f64)],
}

const fn row(
    sigmas: &'static [&'static str],
    pattern: &'static str,
    outcomes: &'static [(&'static str, &'static str)],
) -> SigmaRow {
    SigmaRow {
        sigmas,
        pattern,
        words: None,
        outcomes,
        printed: None,
        note: None,
    }
}

const fn wrow(
    sigmas: &'static [&'static str],
    pattern: &'static str,
    words: &'static [&'static str],
    outcomes: &'static [(&'static str, &'static str)],
) -> SigmaRow {
    SigmaRow {
        sigmas,
        pattern,
        words: Some(words),
        outcomes,
        printed: None,
        note: None,
    }
}

pub fn normalize_sigma(token: &str) -> String {
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.replace("ts^2", "ts2").replace("s^2", "s2");
    t.replace(";st)", ";ts2)")
}

const O3: &str = "(Z/pZ x mu_p)^3";
const O2I11: &str = "(Z/pZ x mu_p)^2 x I_{1,1}";
const O1I11_2: &str = "(Z/pZ x mu_p) x I_{1,1}^2";
const I11_3: &str = "I_{1,1}^3";

pub const DIM1: SummaryTable = SummaryTable {
    id: "dim1",
    title: "elliptic curves",
    dimension: 1,
    groups: &["C2"],
    rows: &[("PP^c", "Z/pZ x mu_p", 1, 0), ("P", "I_{1,1}", 0, 1)],
};

pub const DIM2: SummaryTable = SummaryTable {
    id: "dim2",
    title: "abelian surfaces",
    dimension: 2,
    groups: &["C4", "D4"],
    rows: &[
        ("P1P1cP2P2c", "(Z/pZ x mu_p)^2", 2, 0),
        ("PPc", "(Z/pZ x mu_p)^2", 2, 0),
        ("PPc", "I_{1,1}^2", 0, 2),
        ("P1P1cP2", "Z/pZ x mu_p x I_{1,1}", 1, 1),
        ("P1P2", "I_{1,1}^2", 0, 2),
        ("P", "I_{2,1}", 0, 1),
    ],
};

const THREEFOLD_ROWS: &[(&str, &str, usize, usize)] = &[
    ("P1P1cP2P2cP3P3c", "(Z/pZ)^3 x (mu_p)^3", 3, 0),
    ("P1P1cP2P2c", "(Z/pZ)^3 x (mu_p)^3", 3, 0),
    ("P1P1cP2P2c", "Z/pZ x mu_p x I_{1,1}^2", 1, 2),
    ("PPc", "(Z/pZ)^3 x (mu_p)^3", 3, 0),
    ("PPc", "I_{3,2}", 0, 2),
    ("P1P1cP2P2cP3", "(Z/pZ x mu_p)^2 x I_{1,1}", 2, 1),
    ("P1P1cP2", "(Z/pZ x mu_p)^2 x I_{1,1}", 2, 1),
    ("P1P1cP2", "I_{1,1}^3", 0, 3),
    ("P1P1cP2P3", "(Z/p)^3 x (mu_p)^3", 3, 0),
    ("P1P1cP2P3", "Z/pZ x mu_p x I_{1,1}^2", 1, 2),
    ("P1P2P3", "I_{1,1}^3", 0, 3),
    ("P1P2", "I_{2,1} x I_{1,1}", 0, 2),
    ("P", "I_{3,1}", 0, 1),
    ("P", "I_{1,1}^3", 0, 3),
];

pub const DIM3: SummaryTable = SummaryTable {
    id: "dim3",
    title: "abelian threefolds",
    dimension: 3,
    groups: &["C6", "C2xS3", "E8semiC3", "E8semiS3"],
    rows: THREEFOLD_ROWS,
};

pub const C6: SummaryTable = SummaryTable {
    id: "c6",
    title: "threefolds, Galois group Z/6",
    dimension: 3,
    groups: &["C6"],
    rows: &[
        ("P1P1cP2P2cP3P3c", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("PPc", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("PPc", "I_{3,2}", 0, 2),
        ("P", "I_{3,1}", 0, 1),
    ],
};

pub const C2XS3: SummaryTable = SummaryTable {
    id: "c2xs3",
    title: "threefolds, Galois group Z/2 x S3",
    dimension: 3,
    groups: &["C2xS3"],
    rows: &[
        ("P1P1cP2P2cP3P3c", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("P1P1cP2P2c", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("P1P1cP2P2c", "Z/p x mu_p x I_{1,1}^2", 1, 2),
        ("PPc", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("PPc", "I_{3,2}", 0, 2),
        ("P1P1cP2", "(Z/p x mu_p)^2 x I_{1,1}", 2, 1),
        ("P1P1cP2", "I_{1,1}^3", 0, 3),
        ("P1P2P3", "I_{1,1}^3", 0, 3),
        ("P1P2", "I_{2,1} x I_{1,1}", 0, 2),
        ("P", "I_{3,1}", 0, 1),
    ],
};

pub const E8C3: SummaryTable = SummaryTable {
    id: "e8c3",
    title: "threefolds, Galois group (Z/2)^3 x| Z/3",
    dimension: 3,
    groups: &["E8semiC3"],
    rows: &[
        ("P1P1cP2P2cP3P3c", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("PPc", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("PPc", "I_{3,2}", 0, 2),
        ("P1P1cP2P2cP3", "(Z/p x mu_p)^2 x I_{1,1}", 2, 1),
        ("P1P1cP2P3", "(Z/p)^3 x (mu_p)^3", 3, 0),
        ("P1P1cP2P3", "Z/p x mu_p x I_{1,1}^2", 1, 2),
        ("P1P2P3", "I_{1,1}^3", 0, 3),
        ("P", "I_{3,1}", 0, 1),
        ("P", "I_{1,1}^3", 0, 3),
    ],
};

pub const E8S3: SummaryTable = SummaryTable {
    id: "e8s3",
    title: "threefolds, Galois group (Z/2)^3 x| S3",
    dimension: 3,
    groups: &["E8semiS3"],
    rows: THREEFOLD_ROWS,
};

pub const C4_TABLE: SigmaTable = SigmaTable {
    id: "c4",
    title: "surfaces, cyclic quartic field",
    dimension: 2,
    group: "C4",
    types: Some(&[('S', "S1=[1,x]")]),
    rows: &[
        wrow(
            &["1"],
            "P1P2P1cP2c",
            &["F", "F", "V", "V"],
            &[("*", "(Z/pZ)^2 x mu_p^2")],
        ),
        SigmaRow {
            sigmas: &["x"],
            pattern: "P",
            words: Some(&["FFVV"]),
            outcomes: &[("*", "I_{2,1}")],
            printed: Some("I_{1,2}"),
            note: Some(
                "printed I_{1,2} is not a classified name; the row's own word FFVV is I_{2,1}",
            ),
        },
        wrow(&["x^2"], "P1P2", &["FV", "FV"], &[("*", "I_{1,1}^2")]),
    ],
};

pub const D4_TABLE: SigmaTable = SigmaTable {
    id: "d4",
    title: "surfaces, non-Galois quartic field",
    dimension: 2,
    group: "D4",
    types: Some(&[('S', "S1=[1,y]")]),
    rows: &[
        wrow(
            &["1"],
            "P1P1cP2P2c",
            &["F", "F", "V", "V"],
            &[("*", "(Z/pZ x mu_p)^2")],
        ),
        wrow(
            &["xy"],
            "PPc",
            &["F", "F", "V", "V"],
            &[("*", "(Z/pZ x mu_p)^2")],
        ),
        wrow(&["xy3"], "PPc", &["FV", "FV"], &[("*", "I_{1,1}^2")]),
        wrow(
            &["x"],
            "P1P1cP2",
            &["F", "V", "FV"],
            &[("*", "Z/pZ x mu_p x I_{1,1}")],
        ),
        wrow(&["y", "y3"], "P", &["FFVV"], &[("*", "I_{2,1}")]),
    ],
};

pub const E8S3_ORDER2: SigmaTable = SigmaTable {
    id: "e8s3-order2",
    title: "(Z/2)^3 x| S3, elements of order 2",
    dimension: 3,
    group: "E8semiS3",
    types: None,
    rows: &[
        row(
            &["(0,0,1;ts)"],
            "P1P1cP2P2c",
            &[("DB", O3), ("AC", O1I11_2)],
        ),
        row(
            &["(0,0,0;ts)"],
            "P1P1cP2P2c",
            &[("AC", O3), ("BD", O1I11_2)],
        ),
        row(&["(0,0,1;t)"], "P1P1cP2", &[("AB", I11_3), ("CD", O2I11)]),
        row(
            &["(0,0,0;ts^2)"],
            "P1P1cP2",
            &[("AD", O2I11), ("BC", I11_3)],
        ),
        row(
            &["(1,0,0;ts^2)"],
            "P1P1cP2P2c",
            &[("AD", O3), ("BC", O1I11_2)],
        ),
        row(&["(0,1,0;ts)"], "P1P1cP2", &[("AC", O2I11), ("BD", I11_3)]),
        row(&["(1,1,1;ts)"], "P1P1cP2", &[("BD", O2I11), ("AC", I11_3)]),
        row(&["(1,1,0;t)"], "P1P1cP2P2c", &[("AC", O3), ("BD", O1I11_2)]),
        row(
            &["(1,1,1;ts^2)"],
            "P1P1cP2P2c",
            &[("BC", O3), ("AD", O1I11_2)],
        ),
        row(
            &["(0,1,1;ts^2)"],
            "P1P1cP2",
            &[("BC", O2I11), ("AD", I11_3)],
        ),
        row(&["(0,0,0;t)"], "P1P1cP2P2c", &[("DC", O3), ("AB", O1I11_2)]),
        row(
            &["(0,0,0;ts^2)"],
            "P1P1cP2P2c",
            &[("AD", O3), ("BC", O1I11_2)],
        ),
        row(
            &["(0,0,0;ts)"],
            "P1P1cP2P2c",
            &[("AC", O3), ("BD", O1I11_2)],
        ),
        row(&["(1,1,1;t)"], "P1P1cP2", &[("AB", O2I11), ("CD", I11_3)]),
        row(
            &["(1,1,1;st)"],
            "P1P1cP2P2c",
            &[("BC", O3), ("AD", O1I11_2)],
        ),
        row(&["(1,1,1;ts)"], "P1P1cP2", &[("CD", O2I11), ("AB", I11_3)]),
        row(&["(1,1,1;1)"], "P1P2P3", &[("*", I11_3)]),
        row(&["(0,0,0;1)"], "P1P1cP2P2cP3P3c", &[("*", O3)]),
        row(
            &["(1,0,0;1)", "(1,1,0;1)", "(0,1,0;1)"],
            "P1P1cP2P2cP3",
            &[("*", O2I11)],
        ),
        row(
            &["(0,1,1;1)", "(0,1,0;1)", "(0,0,1;1)"],
            "P1P1cP2",
            &[("*", O1I11_2)],
        ),
    ],
};

pub const E8S3_ORDER3: SigmaTable = SigmaTable {
    id: "e8s3-order3",
    title: "(Z/2)^3 x| S3, elements of order 3",
    dimension: 3,
    group: "E8semiS3",
    types: None,
    rows: &[
        row(
            &["(0,0,0;s)", "(0,0,0;s^2)"],
            "PPc",
            &[("ABC", "I_{3,2}"), ("D", O3)],
        ),
        row(
            &["(1,1,0;s)", "(0,1,1;s^2)"],
            "PPc",
            &[("ACD", "I_{3,2}"), ("B", O3)],
        ),
        row(
            &["(1,0,1;s)", "(1,1,0;s^2)"],
            "PPc",
            &[("BCD", "I_{3,2}"), ("A", O3)],
        ),
    ],
};

pub const E8S3_ORDER4: SigmaTable = SigmaTable {
    id: "e8s3-order4",
    title: "(Z/2)^3 x| S3, elements of order 4",
    dimension: 3,
    group: "E8semiS3",
    types: None,
    rows: &[
        row(
            &["(1,0,0;t)", "(0,1,0;t)", "(0,1,1;t)", "(1,0,1;t)"],
            "P1P1cP2",
            &[("*", "(Z/pZ x mu_p) x I_{2,1}")],
        ),
        row(
            &["(1,0,0;ts)", "(0,0,0;ts)", "(0,1,1;ts)", "(1,1,0;ts)"],
            "P1P1cP2",
            &[("*", "(Z/pZ x mu_p) x I_{2,1}")],
        ),
        row(
            &[
                "(1,0,1;ts^2)",
                "(1,1,0;ts^2)",
                "(0,1,0;ts^2)",
                "(0,0,1;ts^2)",
            ],
            "P1P2",
            &[("*", "I_{2,1} x I_{1,1}")],
        ),
    ],
};

pub const E8S3_ORDER6: SigmaTable = SigmaTable {
    id: "e8s3-order6",
    title: "(Z/2)^3 x| S3, elements of order 6",
    dimension: 3,
    group: "E8semiS3",
    types: None,
    rows: &[
        row(
            &["(0,0,1;s)", "(1,0,0;s^2)"],
            "P",
            &[("ABC", "I_{3,1}"), ("D", I11_3)],
        ),
        row(
            &["(1,1,1;s^2)", "(1,1,1;s)"],
            "P",
            &[("ABC", "I_{3,1}"), ("D", I11_3)],
        ),
        row(
            &["(1,0,0;s)", "(0,1,0;s^2)"],
            "P",
            &[("ABD", "I_{3,1}"), ("C", I11_3)],
        ),
    ],
};

pub const DENSITY_3: DensityTable = DensityTable {
    id: "density-3",
    title: "b-number densities, p = 3",
    p: 3,
    rows: &[
        (1, 0.3388888889, 0.6611111111),
        (2, 0.3383233533, 0.6616766467),
        (3, 0.3342293907, 0.6657706093),
        (5, 0.3334656710, 0.6665343290),
        (8, 0.3333404746, 0.6666595254),
    ],
};

pub const DENSITY_5: DensityTable = DensityTable {
    id: "density-5",
    title: "b-number densities, p = 5",
    p: 5,
    rows: &[
        (1, 0.4070080863, 0.5929919137),
        (2, 0.4019172317, 0.5980827683),
        (3, 0.4001517555, 0.5998482445),
        (5, 0.4000055751, 0.5999944249),
    ],
};

pub const SUMMARY_TABLES: [&SummaryTable; 7] = [&DIM1, &DIM2, &DIM3, &C6, &C2XS3, &E8C3, &E8S3];
pub const SIGMA_TABLES: [&SigmaTable; 6] = [
    &C4_TABLE,
    &D4_TABLE,
    &E8S3_ORDER2,
    &E8S3_ORDER3,
    &E8S3_ORDER4,
    &E8S3_ORDER6,
];
pub const DENSITY_TABLES: [&DensityTable; 2] = [&DENSITY_3, &DENSITY_5];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kraft::parse_bt1_name;
    use crate::splitting::normalize_pattern;

    #[test]
    fn sigma_normalization() {
        assert_eq!(normalize_sigma("(0,0,0;ts^2)"), "(0,0,0;ts2)");
        assert_eq!(normalize_sigma("(1,1,1;st)"), "(1,1,1;ts2)");
        assert_eq!(normalize_sigma("(0,1,1;s^2)"), "(0,1,1;s2)");
        assert_eq!(normalize_sigma("x^2"), "x^2");
    }

    #[test]
    fn every_fixture_cell_parses() {
        for t in SUMMARY_TABLES {
            for &(pat, name, p, a) in t.rows {
                assert!(normalize_pattern(pat).is_some(), "{pat}");
                let d = parse_bt1_name(name).unwrap();
                assert_eq!((d.p_rank(), d.a_number()), (p, a), "{} {pat} {name}", t.id);
            }
        }
        for t in SIGMA_TABLES {
            for r in t.rows {
                assert!(normalize_pattern(r.pattern).is_some(), "{}", r.pattern);
                for (_, name) in r.outcomes {
                    parse_bt1_name(name).unwrap();
                }
            }
        }
    }
}
