mod common;

use std::collections::BTreeSet;

use common::{all_configs, brute_double_cosets, el};
use deuring::splitting::normalize_pattern;
use deuring::{splitting_pattern, CmConfig, NamedGroup};

#[test]
fn d4_sigma_x() {
    let cfg = CmConfig::standard(NamedGroup::D4);
    let sp = splitting_pattern(&cfg, el(&cfg, "x"));
    assert_eq!(sp.pattern, "P1 P1c P2");
    assert_eq!(sp.degrees(), vec![1, 1, 2]);
    assert_eq!(sp.with_degrees(), "P1 P1c P2 [f=1,1,2]");
    assert!(sp.primes[2].is_self_conjugate());
    assert!(!sp.primes[0].is_self_conjugate());
}

#[test]
fn elliptic_split_and_inert() {
    let cfg = CmConfig::standard(NamedGroup::C2);
    let split = splitting_pattern(&cfg, el(&cfg, "1"));
    assert_eq!(split.pattern, "P Pc");
    assert_eq!(split.degrees(), vec![1, 1]);
    let inert = splitting_pattern(&cfg, el(&cfg, "x"));
    assert_eq!(inert.pattern, "P");
    assert_eq!(inert.degrees(), vec![2]);
}

#[test]
fn generator_of_whole_group_gives_one_prime() {
    for which in [NamedGroup::C2, NamedGroup::C4, NamedGroup::C6] {
        let cfg = CmConfig::standard(which);
        let sp = splitting_pattern(&cfg, el(&cfg, "g^1"));
        assert_eq!(sp.pattern, "P");
        assert_eq!(sp.degrees(), vec![cfg.classes().len()]);
    }
}

#[test]
fn e8s3_iota() {
    let cfg = CmConfig::standard(NamedGroup::E8semiS3);
    let sp = splitting_pattern(&cfg, el(&cfg, "(1,1,1;1)"));
    assert_eq!(sp.pattern, "P1 P2 P3");
    assert_eq!(sp.degrees(), vec![2, 2, 2]);
    assert!(sp.all_self_conjugate());
}

#[test]
fn json_shape() {
    let cfg = CmConfig::standard(NamedGroup::D4);
    let sp = splitting_pattern(&cfg, el(&cfg, "x"));
    let v = serde_json::to_value(&sp).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "primes": [{"id": 1, "f": 1, "conj": 2}, {"id": 2, "f": 1, "conj": 1}, {"id": 3, "f": 2, "conj": 3}],
            "pattern": "P1 P1c P2"
        })
    );
}

#[test]
fn normalizes_printed_patterns() {
    assert_eq!(
        normalize_pattern("P_1 P_1^c P_2").as_deref(),
        Some("P1 P1c P2")
    );
    assert_eq!(normalize_pattern("PP^c").as_deref(), Some("P Pc"));
    assert_eq!(
        normalize_pattern("P1P1cP2P2cP3P3c").as_deref(),
        Some("P1 P1c P2 P2c P3 P3c")
    );
}

#[test]
fn matches_brute_double_cosets_everywhere() {
    for cfg in all_configs() {
        let g = cfg.group();
        for sigma in g.elements() {
            let sp = splitting_pattern(&cfg, sigma);
            let cyc = g.cyclic_subgroup(sigma);
            let brute = brute_double_cosets(g, cfg.delta().members(), cyc.members());
            let mut got: Vec<usize> = sp.degrees();
            let mut want: Vec<usize> = brute
                .iter()
                .map(|d| d.len() / cfg.delta().order())
                .collect();
            got.sort();
            want.sort();
            assert_eq!(got, want);
            assert_eq!(sp.degree_sum(), cfg.classes().len());
            // ι·D is again a double coset and has the same size
            let iota = cfg.iota();
            let mut self_conj = 0;
            for d in &brute {
                let moved: BTreeSet<_> = d.iter().map(|&x| g.mul(iota, x)).collect();
                assert!(brute.contains(&moved));
                self_conj += usize::from(moved == *d);
            }
            assert_eq!(
                sp.primes.iter().filter(|p| p.is_self_conjugate()).count(),
                self_conj
            );
            for p in &sp.primes {
                let c = &sp.primes[p.conj - 1];
                assert_eq!(c.conj, p.id);
                assert_eq!(c.f, p.f);
            }
        }
    }
}
