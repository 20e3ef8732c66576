//! Mayer-Vietoris scenarios assembled from catalog data. The flagship case
//! rebuilds the link of the SU(3) imploded cross-section singularity from
//! its two-piece cover; the structural case feeds the intersection-space
//! cover of a cone (link piece, contractible piece, truncated intersection)
//! back through the solver and must land on the cone formula.

use std::collections::BTreeMap;

use strata_core::catalog;
use strata_core::formulas::{hi_open_cone, ConeSpaceSpec, LinkModel};
use strata_core::les::{mayer_vietoris, MVOutcome, MVProblem};
use strata_core::{GradedBetti, Perversity};

fn catalog_betti(name: &str) -> (GradedBetti, usize) {
    match catalog::get(name).unwrap().model {
        catalog::CatalogModel::Betti { betti, dim } => (betti, dim),
        catalog::CatalogModel::Complex(c) => {
            let dim = c.dimension().unwrap();
            (c.betti(), dim)
        }
        other => panic!("{} is not a space model: {:?}", name, other),
    }
}

#[test]
fn y_homology_from_the_sphere_bundle_cover() {
    let (w, _) = catalog_betti("W");
    let (su3, _) = catalog_betti("su3");
    let intersection = su3.sum(&su3).sum(&GradedBetti::from_pairs(&[(0, 1)], 0));
    let problem = MVProblem {
        betti_a: w,
        betti_b: su3,
        betti_ab: intersection,
        intersection_ranks: BTreeMap::from([(0, 1), (3, 1), (5, 2), (8, 1)]),
    };
    match mayer_vietoris(&problem) {
        MVOutcome::Solved { union, audit } => {
            let (y, _) = catalog_betti("Y");
            assert_eq!(union.support(), y.support());
            for (d, r) in y.iter() {
                assert_eq!(union.rank(d), r, "degree {}", d);
            }
            assert!(audit.exactness_verified);
            assert!(audit.euler_identity_verified);
        }
        other => panic!("expected solved, got {:?}", other),
    }
}

#[test]
fn cone_cover_data_reproduces_the_cone_formula() {
    // Cover of the intersection space of a cone: A carries the link, B is
    // contractible, the intersection carries the truncated link, and the
    // map ranks are isomorphisms below the cutoff.
    let links = ["sphere2", "sphere3", "sphere4", "sphere5", "su3", "Y"];
    let perversities = [
        Perversity::Zero,
        Perversity::LowerMiddle,
        Perversity::UpperMiddle,
        Perversity::Top,
    ];
    for name in links {
        let (link, dim) = catalog_betti(name);
        for p in &perversities {
            let k = p.cutoff_degree(dim).unwrap();
            let mut truncated = GradedBetti::new(link.top_degree());
            let mut ranks = BTreeMap::new();
            for (d, r) in link.iter() {
                if d < k {
                    truncated.set(d, r);
                    ranks.insert(d, r);
                }
            }
            let problem = MVProblem {
                betti_a: link.clone(),
                betti_b: GradedBetti::new(0),
                betti_ab: truncated,
                intersection_ranks: ranks,
            };
            let union = match mayer_vietoris(&problem) {
                MVOutcome::Solved { union, audit } => {
                    assert!(audit.exactness_verified, "{} at {}", name, p.describe());
                    assert!(audit.euler_identity_verified);
                    union
                }
                other => panic!("expected solved for {}: {:?}", name, other),
            };
            let spec = ConeSpaceSpec {
                link: LinkModel::Betti {
                    betti: link.clone(),
                    dim,
                },
                simply_connected_asserted: true,
            };
            let formula = hi_open_cone(&spec, p).unwrap();
            for d in 0..=(dim as i64 + 1) {
                assert_eq!(
                    union.rank(d),
                    formula.rank(d),
                    "{} at {} degree {}",
                    name,
                    p.describe(),
                    d
                );
            }
        }
    }
}

#[test]
fn circle_from_two_arcs() {
    let problem = MVProblem {
        betti_a: GradedBetti::new(0),
        betti_b: GradedBetti::new(0),
        betti_ab: GradedBetti::from_pairs(&[(0, 1)], 0),
        intersection_ranks: BTreeMap::new(),
    };
    match mayer_vietoris(&problem) {
        MVOutcome::Solved { union, .. } => {
            assert_eq!(union, GradedBetti::from_pairs(&[(1, 1)], 1));
        }
        other => panic!("expected solved, got {:?}", other),
    }
}

#[test]
fn processing_order_does_not_matter() {
    // Insert the rank data in two different orders; the output must match.
    let (w, _) = catalog_betti("W");
    let (su3, _) = catalog_betti("su3");
    let intersection = su3.sum(&su3).sum(&GradedBetti::from_pairs(&[(0, 1)], 0));
    let pairs = [(0, 1), (3, 1), (5, 2), (8, 1)];
    let forward: BTreeMap<i64, usize> = pairs.iter().copied().collect();
    let backward: BTreeMap<i64, usize> = pairs.iter().rev().copied().collect();
    let solve = |ranks: BTreeMap<i64, usize>| {
        mayer_vietoris(&MVProblem {
            betti_a: w.clone(),
            betti_b: su3.clone(),
            betti_ab: intersection.clone(),
            intersection_ranks: ranks,
        })
    };
    assert_eq!(solve(forward), solve(backward));
}
