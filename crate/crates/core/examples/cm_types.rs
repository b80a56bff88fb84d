//! Enumerates CM types of the order-48 group and groups them into classes.

use deuring::{CmConfig, NamedGroup};

fn main() {
    let cfg = CmConfig::standard(NamedGroup::E8semiS3);
    let g = cfg.group();
    println!("classes of G/Delta:");
    for (i, c) in cfg.classes().iter().enumerate() {
        let names: Vec<&str> = c.members.iter().map(|&e| g.name(e)).collect();
        println!(
            "  {i}: {}  (conjugate {})",
            names.join(" "),
            cfg.iota_class(i)
        );
    }
    let all = cfg.all_cm_types();
    let primitive = all.iter().filter(|t| cfg.is_primitive(t)).count();
    println!("\n{} CM types, {primitive} primitive", all.len());
    for class in cfg.cm_type_classes() {
        println!("class {}:", class.label);
        for t in &class.members {
            println!("  {}", cfg.render_cm_type(t));
        }
    }
}
