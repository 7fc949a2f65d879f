use std::collections::BTreeMap;

use bitableau::completion::{shape21_top_crystal, CornerOrder, ReadingOrder21};
use bitableau::crystal::GraphFormat;
use bitableau::glm_crystal::{full_crystal, is_highest_weight, Convention, DEFAULT_CAP};
use bitableau::partition::{enumerate_partitions, Partition, WeightVector};

/// `(a, nu)` of every component, with multiplicity.
fn component_types(
    lam: &Partition,
    n: u32,
    m: u32,
    conv: Convention,
) -> BTreeMap<(WeightVector, WeightVector), usize> {
    let g = full_crystal(lam, n, m, conv, DEFAULT_CAP).unwrap();
    let mut out = BTreeMap::new();
    for comp in g.components() {
        let hw: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| is_highest_weight(g.vertex(v), conv))
            .collect();
        assert_eq!(hw.len(), 1, "{lam} n={n} m={m} {conv:?}");
        *out.entry(g.vertex(hw[0]).weights()).or_insert(0) += 1;
    }
    out
}

#[test]
fn conventions_agree_in_aggregate() {
    for k in 0..=4 {
        for lam in enumerate_partitions(k, None) {
            for n in 1..=3 {
                for m in 1..=3 {
                    assert_eq!(
                        component_types(&lam, n, m, Convention::W),
                        component_types(&lam, n, m, Convention::WPrime),
                        "{lam} n={n} m={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn shape21_exports_are_stable() {
    let g = shape21_top_crystal(&ReadingOrder21::with_corner(CornerOrder::SouthFirst)).unwrap();
    let dot = g.export(GraphFormat::Dot);
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains("[label=\"") && !l.contains("->"))
            .count(),
        19
    );
    assert_eq!(dot.matches("->").count(), 20);
    assert_eq!(dot, g.export(GraphFormat::Dot));
    let json: serde_json::Value = serde_json::from_str(&g.export(GraphFormat::Json)).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 19);
    assert_eq!(json["edges"].as_array().unwrap().len(), 20);
}
