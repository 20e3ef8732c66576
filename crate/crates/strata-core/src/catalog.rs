//! Built-in catalog of links and singular spaces: spheres, compact group
//! manifolds, and the imploded cross-sections modeled as cones and
//! suspensions over them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::betti::GradedBetti;
use crate::formulas::{
    compare_theories, validate_link, ConeSpaceSpec, FormulaError, LinkModel, SpaceSpec,
    SuspensionSpaceSpec,
};
use crate::perversity::Perversity;
use crate::simplicial::SimplicialComplex;

/// How a catalog entry is modeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogModel {
    /// An explicit simplicial complex.
    Complex(SimplicialComplex),
    /// A reduced Betti table with the space's dimension.
    Betti { betti: GradedBetti, dim: usize },
    /// The open cone over another catalog entry.
    Cone { link: &'static str },
    /// The suspension (two cone points) of another catalog entry.
    Suspension { link: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub model: CatalogModel,
    pub provenance: &'static str,
    pub simply_connected: bool,
    pub notes: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    UnknownName {
        name: String,
        available: Vec<&'static str>,
    },
    /// `run_example` needs a cone or suspension entry.
    NotComposite { name: String },
    /// A composite entry's link must itself be a complex or Betti entry.
    CompositeLink { name: String },
    Formula(FormulaError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownName { name, available } => {
                write!(f, "unknown catalog name {:?}; available: ", name)?;
                for (i, n) in available.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", n)?;
                }
                Ok(())
            }
            CatalogError::NotComposite { name } => {
                write!(f, "{:?} is not a cone or suspension entry", name)
            }
            CatalogError::CompositeLink { name } => {
                write!(f, "link entry {:?} is itself a composite", name)
            }
            CatalogError::Formula(e) => write!(f, "{}", e),
        }
    }
}

impl From<FormulaError> for CatalogError {
    fn from(e: FormulaError) -> Self {
        CatalogError::Formula(e)
    }
}

const SPHERE_NAMES: [&str; 7] = [
    "sphere0", "sphere1", "sphere2", "sphere3", "sphere4", "sphere5", "sphere6",
];

/// All built-in entries, in a stable order.
pub fn builtin() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for (n, name) in SPHERE_NAMES.iter().enumerate() {
        entries.push(CatalogEntry {
            name,
            model: CatalogModel::Complex(SimplicialComplex::sphere(n)),
            provenance: "boundary of the standard simplex, the minimal triangulated sphere",
            simply_connected: n >= 2,
            notes: "",
        });
    }
    entries.push(CatalogEntry {
        name: "su2",
        model: CatalogModel::Complex(SimplicialComplex::sphere(3)),
        provenance: "the group manifold SU(2), diffeomorphic to the 3-sphere",
        simply_connected: true,
        notes: "",
    });
    entries.push(CatalogEntry {
        name: "su3",
        model: CatalogModel::Betti {
            betti: GradedBetti::from_pairs(&[(3, 1), (5, 1), (8, 1)], 8),
            dim: 8,
        },
        provenance: "the group manifold SU(3); rationally equivalent to S^3 x S^5, so the \
                     reduced Betti ranks are 1 in degrees 3, 5 and 8 (Kunneth)",
        simply_connected: true,
        notes: "Betti table cross-checked against the tensor product of sphere chain complexes",
    });
    entries.push(CatalogEntry {
        name: "Y",
        model: CatalogModel::Betti {
            betti: GradedBetti::from_pairs(&[(4, 1), (5, 1), (9, 1)], 9),
            dim: 9,
        },
        provenance: "compact 9-manifold {(z,w) in C^3 x C^3 : z.w = 0, |z|^2 + |w|^2 = 1}, the \
                     link of the isolated singularity of the SU(3) universal imploded \
                     cross-section; homology via the Mayer-Vietoris argument of Ho and Jeffrey",
        simply_connected: true,
        notes: "Betti table reproduced by the Mayer-Vietoris solver from the sphere-bundle cover",
    });
    entries.push(CatalogEntry {
        name: "W",
        model: CatalogModel::Betti {
            betti: GradedBetti::from_pairs(&[(0, 1), (5, 2)], 5),
            dim: 5,
        },
        provenance: "cover piece of Y deformation-retracting to two disjoint 5-spheres (Ho and \
                     Jeffrey)",
        simply_connected: false,
        notes: "not connected",
    });
    entries.push(CatalogEntry {
        name: "su2-universal-implosion",
        model: CatalogModel::Cone { link: "su2" },
        provenance: "universal imploded cross-section of SU(2): the open cone on S^3, in other \
                     words C^2 (Guillemin, Jeffrey and Sjamaar)",
        simply_connected: true,
        notes: "",
    });
    entries.push(CatalogEntry {
        name: "su3-universal-implosion",
        model: CatalogModel::Cone { link: "Y" },
        provenance: "universal imploded cross-section of SU(3): the affine variety \
                     {(z,w) in C^3 x C^3 : z.w = 0}, homeomorphic to the open cone over Y \
                     (Guillemin, Jeffrey and Sjamaar, Example 6.16)",
        simply_connected: true,
        notes: "",
    });
    entries.push(CatalogEntry {
        name: "qh-su2-double",
        model: CatalogModel::Suspension { link: "su2" },
        provenance: "imploded cross-section of the quasi-Hamiltonian double SU(2) x SU(2), \
                     isomorphic to S^4 (Ho and Jeffrey, Proposition 2.29); modeled as the \
                     suspension of S^3",
        simply_connected: true,
        notes: "two cone points, one per central element of SU(2)",
    });
    entries
}

/// Names of all built-in entries, in catalog order.
pub fn names() -> Vec<&'static str> {
    builtin().iter().map(|e| e.name).collect()
}

/// Look up an entry by name.
pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    builtin()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName {
            name: String::from(name),
            available: names(),
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Cone,
    Suspension,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Cone => write!(f, "open cone"),
            SpaceKind::Suspension => write!(f, "suspension"),
        }
    }
}

/// Full report for one catalog composite at one perversity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    pub name: String,
    pub kind: SpaceKind,
    pub link_name: &'static str,
    pub link_dim: usize,
    pub link_betti: GradedBetti,
    pub perversity: String,
    pub cutoff_degree: i64,
    /// Intersection homology (cones only).
    pub ih: Option<GradedBetti>,
    /// Ordinary reduced homology of the model space (suspensions only).
    pub ordinary: Option<GradedBetti>,
    pub hi: GradedBetti,
    pub differing_degrees: Vec<i64>,
    pub warnings: Vec<String>,
    pub provenance: Vec<String>,
    pub notes: Vec<String>,
}

/// Evaluate a cone or suspension entry at a perversity and assemble the
/// two-theory report.
pub fn run_example(name: &str, p: &Perversity) -> Result<ExampleReport, CatalogError> {
    let entry = get(name)?;
    let (kind, link_name) = match &entry.model {
        CatalogModel::Cone { link } => (SpaceKind::Cone, *link),
        CatalogModel::Suspension { link } => (SpaceKind::Suspension, *link),
        _ => {
            return Err(CatalogError::NotComposite {
                name: String::from(name),
            })
        }
    };
    let link_entry = get(link_name)?;
    let link_model = match &link_entry.model {
        CatalogModel::Complex(c) => LinkModel::Complex(c.clone()),
        CatalogModel::Betti { betti, dim } => LinkModel::Betti {
            betti: betti.clone(),
            dim: *dim,
        },
        _ => {
            return Err(CatalogError::CompositeLink {
                name: String::from(link_name),
            })
        }
    };
    let validation = validate_link(&link_model, link_entry.simply_connected)?;
    let space = match kind {
        SpaceKind::Cone => SpaceSpec::Cone(ConeSpaceSpec {
            link: link_model,
            simply_connected_asserted: link_entry.simply_connected,
        }),
        SpaceKind::Suspension => SpaceSpec::Suspension(SuspensionSpaceSpec {
            link: link_model,
            simply_connected_asserted: link_entry.simply_connected,
        }),
    };
    let cmp = compare_theories(&space, p)?;

    let mut provenance = Vec::new();
    provenance.push(format!("{}: {}", entry.name, entry.provenance));
    provenance.push(format!("link {}: {}", link_entry.name, link_entry.provenance));
    let mut notes = Vec::new();
    if !entry.notes.is_empty() {
        notes.push(String::from(entry.notes));
    }
    if !link_entry.notes.is_empty() {
        notes.push(format!("link: {}", link_entry.notes));
    }

    Ok(ExampleReport {
        name: String::from(name),
        kind,
        link_name: link_entry.name,
        link_dim: validation.link_dim,
        link_betti: validation.betti,
        perversity: cmp.perversity,
        cutoff_degree: cmp.cutoff_degree,
        ih: cmp.ih,
        ordinary: cmp.ordinary,
        hi: cmp.hi,
        differing_degrees: cmp.differing_degrees,
        warnings: cmp.warnings,
        provenance,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_entry_carries_the_published_betti_table() {
        let entry = get("Y").unwrap();
        match entry.model {
            CatalogModel::Betti { betti, dim } => {
                assert_eq!(betti, GradedBetti::from_pairs(&[(4, 1), (5, 1), (9, 1)], 9));
                assert_eq!(dim, 9);
            }
            other => panic!("expected a Betti model, got {:?}", other),
        }
    }

    #[test]
    fn sphere3_is_the_boundary_of_the_4_simplex() {
        let entry = get("sphere3").unwrap();
        match entry.model {
            CatalogModel::Complex(c) => {
                assert_eq!(c.betti(), GradedBetti::from_pairs(&[(3, 1)], 3));
            }
            other => panic!("expected a complex, got {:?}", other),
        }
    }

    #[test]
    fn unknown_names_list_the_catalog() {
        match get("so5") {
            Err(CatalogError::UnknownName { available, .. }) => {
                assert!(available.contains(&"su3-universal-implosion"));
                assert!(available.contains(&"sphere3"));
            }
            other => panic!("expected unknown-name error, got {:?}", other),
        }
    }

    #[test]
    fn su3_implosion_report_at_lower_middle() {
        let report = run_example("su3-universal-implosion", &Perversity::LowerMiddle).unwrap();
        assert_eq!(report.cutoff_degree, 5);
        assert_eq!(
            report.ih,
            Some(GradedBetti::from_pairs(&[(4, 1)], 10))
        );
        assert_eq!(report.hi, GradedBetti::from_pairs(&[(5, 1), (9, 1)], 10));
        assert_eq!(report.differing_degrees, vec![4, 5, 9]);
    }

    #[test]
    fn su2_implosion_report_at_lower_middle() {
        let report = run_example("su2-universal-implosion", &Perversity::LowerMiddle).unwrap();
        assert_eq!(report.cutoff_degree, 2);
        assert_eq!(report.ih, Some(GradedBetti::new(4)));
        assert_eq!(report.hi, GradedBetti::from_pairs(&[(3, 1)], 4));
        assert_eq!(report.differing_degrees, vec![3]);
    }

    #[test]
    fn quasi_hamiltonian_double_reports_hi_and_ordinary() {
        let report = run_example("qh-su2-double", &Perversity::LowerMiddle).unwrap();
        assert_eq!(report.hi, GradedBetti::from_pairs(&[(3, 1)], 4));
        assert_eq!(
            report.ordinary,
            Some(GradedBetti::from_pairs(&[(4, 1)], 4))
        );
        assert_eq!(report.ih, None);
    }

    #[test]
    fn non_composites_are_rejected_by_run_example() {
        assert!(matches!(
            run_example("su3", &Perversity::LowerMiddle),
            Err(CatalogError::NotComposite { .. })
        ));
    }

    #[test]
    fn w_betti_matches_a_simplicial_disjoint_union_of_spheres() {
        let s5 = SimplicialComplex::sphere(5);
        let both = s5.disjoint_union(&s5);
        let w = get("W").unwrap();
        match w.model {
            CatalogModel::Betti { betti, .. } => assert_eq!(betti, both.betti()),
            other => panic!("expected a Betti model, got {:?}", other),
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_example("su3-universal-implosion", &Perversity::Top).unwrap();
        let b = run_example("su3-universal-implosion", &Perversity::Top).unwrap();
        assert_eq!(a, b);
    }
}
