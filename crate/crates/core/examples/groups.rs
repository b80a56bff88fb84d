//! Lists the built-in Galois groups and the element orders of one of them.

use deuring::{CmConfig, NamedGroup};

fn main() {
    for which in NamedGroup::ALL {
        let cfg = CmConfig::standard(which);
        let g = cfg.group();
        println!(
            "{:<9} order {:>2}  dim {}  iota {:<10} |Delta| {}  center {}",
            which.token(),
            g.order(),
            which.dimension(),
            g.name(cfg.iota()),
            cfg.delta().order(),
            g.center().order()
        );
    }

    let g = NamedGroup::D4.build();
    println!("\nD4 elements:");
    for e in g.elements() {
        println!("  {:<4} order {}", g.name(e), g.element_order(e));
    }
    let x = g.element("x").unwrap();
    let y = g.element("y").unwrap();
    println!("y * x = {}", g.name(g.mul(y, x)));
}
