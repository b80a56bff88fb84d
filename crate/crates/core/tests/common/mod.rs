#![allow(dead_code)]

use std::collections::BTreeSet;

use deuring::{CmConfig, ElementId, GroupTable, NamedGroup, Subgroup};
use num_complex::Complex64;

/// Roots of `X⁴ + aX³ + bX² + qaX + q²` by Durand–Kerner iteration.
pub fn quartic_roots(q: f64, a: f64, b: f64) -> [Complex64; 4] {
    let coeffs = [1.0, a, b, q * a, q * q];
    let eval = |z: Complex64| {
        coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let seed = Complex64::new(0.4, 0.9);
    let scale = q.sqrt();
    let mut z: [Complex64; 4] = std::array::from_fn(|k| seed.powu(k as u32) * scale);
    for _ in 0..20_000 {
        let mut moved = 0.0f64;
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * scale {
            break;
        }
    }
    z
}

/// Replaces each cluster of nearby roots by its centroid. The centroid of a
/// Durand–Kerner cluster around a multiple root is far more accurate than
/// the individual approximations.
pub fn merge_clusters(roots: [Complex64; 4], radius: f64) -> [Complex64; 4] {
    let mut out = roots;
    let mut done = [false; 4];
    for i in 0..4 {
        if done[i] {
            continue;
        }
        let members: Vec<usize> = (i..4)
            .filter(|&j| !done[j] && (roots[j] - roots[i]).norm() < radius)
            .collect();
        let mean = members.iter().map(|&j| roots[j]).sum::<Complex64>() / members.len() as f64;
        for &j in &members {
            out[j] = mean;
            done[j] = true;
        }
    }
    out
}

/// Largest deviation of a root modulus from √q.
pub fn modulus_defect(q: u64, a: i64, b: i64) -> f64 {
    let s = (q as f64).sqrt();
    let roots = quartic_roots(q as f64, a as f64, b as f64);
    merge_clusters(roots, 1e-2 * s)
        .iter()
        .map(|z| (z.norm() - s).abs())
        .fold(0.0, f64::max)
}

/// Double cosets by direct set construction.
pub fn brute_double_cosets(
    g: &GroupTable,
    h: &[ElementId],
    k: &[ElementId],
) -> Vec<BTreeSet<ElementId>> {
    let mut out: Vec<BTreeSet<ElementId>> = Vec::new();
    for x in g.elements() {
        if out.iter().any(|s| s.contains(&x)) {
            continue;
        }
        let mut s = BTreeSet::new();
        for &a in h {
            for &b in k {
                s.insert(g.mul(g.mul(a, x), b));
            }
        }
        out.push(s);
    }
    out
}

/// Every valid configuration on the named groups with `[G:Δ] ≤ 6`: all
/// subgroups Δ of even index and every central involution outside Δ.
pub fn all_configs() -> Vec<CmConfig> {
    let mut out = Vec::new();
    for which in NamedGroup::ALL {
        let g = which.build();
        let involutions: Vec<ElementId> = g
            .elements()
            .filter(|&e| g.element_order(e) == 2 && g.is_central(e))
            .collect();
        for delta in g.subgroups() {
            let index = g.order() / delta.order();
            if index % 2 != 0 || index > 6 {
                continue;
            }
            for &iota in &involutions {
                if delta.contains(iota) {
                    continue;
                }
                let d = Subgroup::new(&g, delta.members().iter().copied()).unwrap();
                out.push(CmConfig::new(g.clone(), d, iota).unwrap());
            }
        }
    }
    out
}

pub fn el(cfg: &CmConfig, name: &str) -> ElementId {
    cfg.group().element(name).unwrap()
}
