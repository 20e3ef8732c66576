//! Property tests on randomly generated small simplicial complexes. Random
//! links are not necessarily connected or simply connected, so the
//! intersection-space comparisons avoid degree 0, where the closed formula
//! follows the theorem's convention rather than the mapping-cone space.

use proptest::prelude::*;
use std::collections::BTreeSet;

use strata_core::formulas::{
    hi_cone_chain_model_on, hi_open_cone, hi_suspension, hi_suspension_chain_model_on,
    ih_open_cone, ConeSpaceSpec, LinkModel, SuspensionSpaceSpec,
};
use strata_core::{ChainComplex, Perversity, SimplicialComplex};

fn arbitrary_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0usize..6, 1..=4), 1..6).prop_map(
        |facets: Vec<BTreeSet<usize>>| {
            let facets: Vec<Vec<usize>> =
                facets.into_iter().map(|f| f.into_iter().collect()).collect();
            SimplicialComplex::from_facets(&facets).expect("sets of vertices are valid simplices")
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundaries_square_to_zero(complex in arbitrary_complex()) {
        complex.chain_complex(false).check_boundary_squares().unwrap();
        complex.chain_complex(true).check_boundary_squares().unwrap();
    }

    #[test]
    fn cones_are_acyclic(complex in arbitrary_complex()) {
        prop_assert!(complex.cone().betti().is_empty());
    }

    #[test]
    fn suspension_shifts_reduced_homology(complex in arbitrary_complex()) {
        let expected = complex.betti().shifted(1);
        let got = complex.suspension().betti();
        prop_assert_eq!(got.support(), expected.support());
        for (d, r) in expected.iter() {
            prop_assert_eq!(got.rank(d), r);
        }
    }

    #[test]
    fn euler_characteristic_matches_homology(complex in arbitrary_complex()) {
        let c = complex.chain_complex(false);
        prop_assert_eq!(c.euler_characteristic(), c.betti().euler_characteristic());
    }

    #[test]
    fn truncation_kills_homology_at_and_above_the_cutoff(
        complex in arbitrary_complex(),
        k in 0i64..6,
    ) {
        let reduced = complex.chain_complex(true);
        let (truncation, inclusion) = reduced.truncate(k);
        inclusion.check_commuting_squares().unwrap();
        let link = reduced.betti();
        let t = truncation.betti();
        for d in -1..=6 {
            let expected = if d < k { link.rank(d) } else { 0 };
            prop_assert_eq!(t.rank(d), expected, "degree {}", d);
        }
    }

    #[test]
    fn cone_routes_agree_above_degree_zero(complex in arbitrary_complex(), k_src in 0i64..6) {
        prop_assume!(complex.dimension().map_or(false, |d| d >= 1));
        let dim = complex.dimension().unwrap();
        // Drive the cutoff through an explicit perversity value.
        let p = Perversity::from_values(vec![dim as i64 - k_src; dim]).unwrap();
        let spec = ConeSpaceSpec {
            link: LinkModel::Complex(complex.clone()),
            simply_connected_asserted: false,
        };
        let formula = hi_open_cone(&spec, &p).unwrap();
        let model = hi_cone_chain_model_on(&complex.chain_complex(true), dim, &p).unwrap();
        for d in 1..=(dim as i64 + 1) {
            prop_assert_eq!(formula.rank(d), model.rank(d), "degree {}", d);
        }
    }

    #[test]
    fn suspension_routes_agree_above_degree_zero(
        complex in arbitrary_complex(),
        k_src in 0i64..6,
    ) {
        prop_assume!(complex.dimension().map_or(false, |d| d >= 1));
        let dim = complex.dimension().unwrap();
        let p = Perversity::from_values(vec![dim as i64 - k_src; dim]).unwrap();
        let spec = SuspensionSpaceSpec {
            link: LinkModel::Complex(complex.clone()),
            simply_connected_asserted: false,
        };
        let formula = hi_suspension(&spec, &p).unwrap();
        let model = hi_suspension_chain_model_on(&complex.chain_complex(true), dim, &p).unwrap();
        for d in 1..=(dim as i64 + 1) {
            prop_assert_eq!(formula.rank(d), model.rank(d), "degree {}", d);
        }
    }

    #[test]
    fn intersection_homology_of_cone_equals_truncation_betti(
        complex in arbitrary_complex(),
        k_src in 0i64..6,
    ) {
        prop_assume!(complex.dimension().map_or(false, |d| d >= 1));
        let dim = complex.dimension().unwrap();
        let p = Perversity::from_values(vec![dim as i64 - k_src; dim]).unwrap();
        let k = p.cutoff_degree(dim).unwrap();
        let spec = ConeSpaceSpec {
            link: LinkModel::Complex(complex.clone()),
            simply_connected_asserted: false,
        };
        let formula = ih_open_cone(&spec, &p).unwrap();
        let (truncation, _) = complex.chain_complex(true).truncate(k);
        prop_assert_eq!(
            formula,
            truncation.betti().with_top_degree(dim as i64 + 1)
        );
    }

    #[test]
    fn barycentric_subdivision_is_a_homotopy_invariant(complex in arbitrary_complex()) {
        prop_assert_eq!(complex.barycentric_subdivision().betti(), complex.betti());
    }

    #[test]
    fn tensor_with_a_point_changes_nothing(complex in arbitrary_complex()) {
        let point = SimplicialComplex::from_facets(&[vec![0]]).unwrap();
        let product = ChainComplex::tensor(
            &complex.chain_complex(false),
            &point.chain_complex(false),
        );
        prop_assert_eq!(product.betti(), complex.chain_complex(false).betti());
    }
}
