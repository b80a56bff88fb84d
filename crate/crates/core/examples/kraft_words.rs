//! Kraft words and BT1 names for every Frobenius of the D4 surface case.

use deuring::{build_kraft_words, parse_bt1_name, Bt1Decomposition, CmConfig, NamedGroup};

fn main() {
    let cfg = CmConfig::standard(NamedGroup::D4);
    let cm_type = cfg.parse_cm_type("S1=[1,y]").unwrap();
    for sigma in cfg.group().elements() {
        let d = build_kraft_words(&cfg, sigma, &cm_type);
        println!(
            "sigma={:<4} words {:<16} {:<24} p-rank {} a-number {}",
            cfg.group().name(sigma),
            d.word_list(),
            d.name(),
            d.p_rank(),
            d.a_number()
        );
    }

    let d = Bt1Decomposition::from_words(["FVFVFV", "FFV", "VFV"]).unwrap();
    println!(
        "\nFVFVFV + FFV + VFV -> {} (dual {})",
        d.ascii_name(),
        d.dual().ascii_name()
    );
    let parsed = parse_bt1_name("(Z/pZ x mu_p)^2 x I_{1,1}").unwrap();
    println!("parsed back: {}", parsed.word_list());
}
