//! The two independent routes to intersection-space homology, the closed
//! formulas and the truncation/mapping-cone chain models, must agree
//! degreewise on every sweep link and perversity. The sweep follows the
//! acceptance grid: links S^2..S^5 plus the tensor model of S^2 x S^3,
//! perversity families zero/m/um/top plus extended constants with
//! p(l+1) in -2 ..= l+1.

use strata_core::formulas::{
    hi_cone_chain_model_on, hi_open_cone, hi_suspension, hi_suspension_chain_model_on,
    ih_open_cone, ConeSpaceSpec, LinkModel, SuspensionSpaceSpec,
};
use strata_core::{ChainComplex, GradedBetti, Perversity, SimplicialComplex};

/// A sweep link: reduced chain complex, its dimension, and its reduced Betti
/// table (the formula-side model).
struct SweepLink {
    name: &'static str,
    dim: usize,
    reduced_chain: ChainComplex,
    betti: GradedBetti,
}

fn sweep_links() -> Vec<SweepLink> {
    let mut links = Vec::new();
    for n in 2..=5usize {
        let complex = SimplicialComplex::sphere(n);
        links.push(SweepLink {
            name: ["S^2", "S^3", "S^4", "S^5"][n - 2],
            dim: n,
            reduced_chain: complex.chain_complex(true),
            betti: complex.betti(),
        });
    }
    let product = ChainComplex::tensor(
        &SimplicialComplex::sphere(2).chain_complex(false),
        &SimplicialComplex::sphere(3).chain_complex(false),
    );
    let reduced = product.augmented().expect("product complexes are augmentable");
    links.push(SweepLink {
        name: "S^2 x S^3 tensor model",
        dim: 5,
        reduced_chain: reduced.clone(),
        betti: reduced.betti(),
    });
    links
}

fn sweep_perversities(l: usize) -> Vec<Perversity> {
    let mut ps = vec![
        Perversity::Zero,
        Perversity::LowerMiddle,
        Perversity::UpperMiddle,
        Perversity::Top,
    ];
    for c in -2..=(l as i64 + 1) {
        ps.push(Perversity::from_values(vec![c; l]).expect("constant sequences are nonempty"));
    }
    ps
}

#[test]
fn cone_chain_model_matches_closed_formula_across_the_sweep() {
    for link in sweep_links() {
        let spec = ConeSpaceSpec {
            link: LinkModel::Betti {
                betti: link.betti.clone(),
                dim: link.dim,
            },
            simply_connected_asserted: true,
        };
        for p in sweep_perversities(link.dim) {
            let formula = hi_open_cone(&spec, &p).unwrap();
            let model = hi_cone_chain_model_on(&link.reduced_chain, link.dim, &p).unwrap();
            assert_eq!(
                formula, model,
                "cone over {} at {}",
                link.name,
                p.describe()
            );
        }
    }
}

#[test]
fn suspension_chain_model_matches_closed_formula_across_the_sweep() {
    for link in sweep_links() {
        let spec = SuspensionSpaceSpec {
            link: LinkModel::Betti {
                betti: link.betti.clone(),
                dim: link.dim,
            },
            simply_connected_asserted: true,
        };
        for p in sweep_perversities(link.dim) {
            let formula = hi_suspension(&spec, &p).unwrap();
            let model = hi_suspension_chain_model_on(&link.reduced_chain, link.dim, &p).unwrap();
            assert_eq!(
                formula, model,
                "suspension of {} at {}",
                link.name,
                p.describe()
            );
        }
    }
}

#[test]
fn truncation_complex_computes_intersection_homology_of_the_cone() {
    // The truncated complex itself carries IH of the open cone: link
    // homology below the cutoff, nothing at or above it.
    for link in sweep_links() {
        let spec = ConeSpaceSpec {
            link: LinkModel::Betti {
                betti: link.betti.clone(),
                dim: link.dim,
            },
            simply_connected_asserted: true,
        };
        for p in sweep_perversities(link.dim) {
            let k = p.cutoff_degree(link.dim).unwrap();
            let formula = ih_open_cone(&spec, &p).unwrap();
            let (truncation, _) = link.reduced_chain.truncate(k);
            let model = truncation.betti().with_top_degree(link.dim as i64 + 1);
            assert_eq!(formula, model, "IH of cone over {} at k={}", link.name, k);
        }
    }
}

#[test]
fn degenerate_cutoffs_collapse_to_plain_homology() {
    for link in sweep_links() {
        let cone_spec = ConeSpaceSpec {
            link: LinkModel::Betti {
                betti: link.betti.clone(),
                dim: link.dim,
            },
            simply_connected_asserted: true,
        };
        let susp_spec = SuspensionSpaceSpec {
            link: LinkModel::Betti {
                betti: link.betti.clone(),
                dim: link.dim,
            },
            simply_connected_asserted: true,
        };
        for p in sweep_perversities(link.dim) {
            let k = p.cutoff_degree(link.dim).unwrap();
            if k <= 0 {
                // Nothing is truncated: the intersection space of the cone
                // has the link's homology.
                let hi = hi_open_cone(&cone_spec, &p).unwrap();
                assert_eq!(
                    hi,
                    link.betti.clone().with_top_degree(link.dim as i64 + 1),
                    "cone over {} at k={}",
                    link.name,
                    k
                );
            }
            if k > link.dim as i64 + 1 {
                // Everything is kept: the intersection space of the
                // suspension has the suspension's homology.
                let hi = hi_suspension(&susp_spec, &p).unwrap();
                assert_eq!(
                    hi,
                    link.betti.shifted(1).with_top_degree(link.dim as i64 + 1),
                    "suspension of {} at k={}",
                    link.name,
                    k
                );
            }
        }
    }
}

#[test]
fn sweep_covers_both_degenerate_regimes() {
    // Guard that the perversity grid actually reaches k <= 0 and k > l + 1.
    for link in sweep_links() {
        let cutoffs: Vec<i64> = sweep_perversities(link.dim)
            .iter()
            .map(|p| p.cutoff_degree(link.dim).unwrap())
            .collect();
        assert!(cutoffs.iter().any(|&k| k <= 0), "{}", link.name);
        assert!(
            cutoffs.iter().any(|&k| k > link.dim as i64 + 1),
            "{}",
            link.name
        );
    }
}

#[test]
fn truncation_inclusions_commute_and_cones_square_to_zero_across_the_sweep() {
    for link in sweep_links() {
        for p in sweep_perversities(link.dim) {
            let k = p.cutoff_degree(link.dim).unwrap();
            let (_, inclusion) = link.reduced_chain.truncate(k);
            inclusion
                .check_commuting_squares()
                .expect("truncation inclusion is a chain map");
            let cone = ChainComplex::mapping_cone(&inclusion);
            cone.check_boundary_squares()
                .expect("mapping cone is a chain complex");
        }
    }
}
