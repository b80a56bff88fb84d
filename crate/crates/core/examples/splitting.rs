//! Splitting of p in the CM field for each Frobenius class, with residue degrees.

use deuring::{splitting_pattern, CmConfig, NamedGroup};

fn main() {
    for which in [NamedGroup::C2, NamedGroup::D4, NamedGroup::E8semiS3] {
        let cfg = CmConfig::standard(which);
        println!("{which}:");
        let mut seen = Vec::new();
        for sigma in cfg.group().elements() {
            let sp = splitting_pattern(&cfg, sigma);
            let line = sp.with_degrees();
            if !seen.contains(&line) {
                println!("  sigma={:<12} {line}", cfg.group().name(sigma));
                seen.push(line);
            }
        }
    }
    let cfg = CmConfig::standard(NamedGroup::D4);
    let sp = splitting_pattern(&cfg, cfg.group().element("x").unwrap());
    println!("\n{}", serde_json::to_string(&sp).unwrap());
}
