//! Exact census of ordinary abelian surfaces over small fields by b-number.

use deuring::weil::{brute_force_census, surface_census};
use deuring::{density_report, DensityReport, FieldSize};

fn main() {
    println!("{}", DensityReport::CSV_HEADER);
    for (p, n) in [
        (3, 1),
        (3, 2),
        (3, 3),
        (3, 5),
        (3, 8),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 5),
    ] {
        let field = FieldSize::new(p, n).unwrap();
        println!("{}", density_report(&field).unwrap().csv_row());
    }

    let field = FieldSize::new(7, 1).unwrap();
    let fast = surface_census(&field, 4).unwrap();
    let slow = brute_force_census(&field);
    println!("\nq=7 fast {fast:?}, brute force agrees: {}", fast == slow);
}
