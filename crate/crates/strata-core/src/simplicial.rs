//! Finite abstract simplicial complexes with exact rational chain complexes.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::ChainComplex;
use crate::linalg::{rat, RationalMatrix};

/// Errors from simplicial construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    /// A facet tuple is empty or repeats a vertex.
    MalformedSimplex { simplex: Vec<usize> },
}

impl fmt::Display for SimplicialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicialError::MalformedSimplex { simplex } => {
                write!(f, "malformed simplex {:?}", simplex)
            }
        }
    }
}

/// A finite abstract simplicial complex on integer vertex ids.
///
/// Simplices are stored as strictly increasing vertex tuples and the set is
/// closed under taking faces.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Build from a facet list, closing downward under faces. Facets with a
    /// repeated vertex (or empty tuples) are rejected; an empty facet list
    /// gives the empty complex.
    pub fn from_facets(facets: &[Vec<usize>]) -> Result<Self, SimplicialError> {
        let mut simplices = BTreeSet::new();
        for facet in facets {
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            if sorted.is_empty() || sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(SimplicialError::MalformedSimplex {
                    simplex: facet.clone(),
                });
            }
            // Every nonempty subset, via bitmask enumeration.
            let n = sorted.len();
            for mask in 1u64..(1u64 << n) {
                let face: Vec<usize> = (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| sorted[i])
                    .collect();
                simplices.insert(face);
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    /// The boundary of the standard simplex on `n + 2` vertices, a
    /// triangulated n-sphere.
    pub fn sphere(n: usize) -> Self {
        let vertices: Vec<usize> = (0..n + 2).collect();
        let facets: Vec<Vec<usize>> = (0..n + 2)
            .map(|omit| {
                vertices
                    .iter()
                    .copied()
                    .filter(|&v| v != omit)
                    .collect()
            })
            .collect();
        Self::from_facets(&facets).expect("sphere facets are well-formed")
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of simplices of all dimensions.
    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Largest simplex dimension; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// Largest vertex id; `None` for the empty complex.
    pub fn max_vertex_id(&self) -> Option<usize> {
        self.simplices
            .iter()
            .filter_map(|s| s.last().copied())
            .max()
    }

    /// Simplices of one dimension, in lexicographic order.
    pub fn simplices_of_dim(&self, d: usize) -> Vec<&Vec<usize>> {
        self.simplices.iter().filter(|s| s.len() == d + 1).collect()
    }

    /// All simplices in lexicographic order.
    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    /// Cone: a fresh apex vertex joined to every simplex.
    pub fn cone(&self) -> Self {
        let apex = self.max_vertex_id().map_or(0, |m| m + 1);
        let mut simplices = self.simplices.clone();
        simplices.insert(vec![apex]);
        for s in &self.simplices {
            let mut joined = s.clone();
            joined.push(apex);
            simplices.insert(joined);
        }
        SimplicialComplex { simplices }
    }

    /// Suspension: two fresh apex vertices, each joined to every simplex.
    pub fn suspension(&self) -> Self {
        let base = self.max_vertex_id().map_or(0, |m| m + 1);
        let mut simplices = self.simplices.clone();
        for apex in [base, base + 1] {
            simplices.insert(vec![apex]);
            for s in &self.simplices {
                let mut joined = s.clone();
                joined.push(apex);
                simplices.insert(joined);
            }
        }
        SimplicialComplex { simplices }
    }

    /// Disjoint union; the second complex's vertex ids are offset past the
    /// first's largest id.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.max_vertex_id().map_or(0, |m| m + 1);
        let mut simplices = self.simplices.clone();
        for s in &other.simplices {
            simplices.insert(s.iter().map(|&v| v + offset).collect());
        }
        SimplicialComplex { simplices }
    }

    /// Barycentric subdivision: one vertex per original simplex, one facet
    /// per maximal flag of faces.
    pub fn barycentric_subdivision(&self) -> Self {
        let ids: Vec<&Vec<usize>> = self.simplices.iter().collect();
        let id_of = |s: &Vec<usize>| -> usize {
            ids.binary_search_by(|probe| (*probe).cmp(s))
                .expect("faces of stored simplices are stored")
        };
        // Facets of the original complex: simplices not a proper face of
        // another simplex.
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for facet in self
            .simplices
            .iter()
            .filter(|s| !self.has_proper_coface(s))
        {
            // Each permutation of the facet's vertices determines a maximal
            // flag of prefixes.
            let mut perm: Vec<usize> = facet.clone();
            permutations(&mut perm, 0, &mut |order| {
                let mut flag = Vec::with_capacity(order.len());
                for end in 1..=order.len() {
                    let mut prefix: Vec<usize> = order[..end].to_vec();
                    prefix.sort_unstable();
                    flag.push(id_of(&prefix));
                }
                facets.push(flag);
            });
        }
        Self::from_facets(&facets).expect("flags have distinct barycenters")
    }

    fn has_proper_coface(&self, s: &[usize]) -> bool {
        self.simplices
            .iter()
            .any(|t| t.len() > s.len() && is_subset(s, t))
    }

    /// Simplicial chain complex over the rationals, with boundary signs
    /// alternating over the sorted vertex tuple. `reduced` attaches the
    /// augmentation in degree -1.
    pub fn chain_complex(&self, reduced: bool) -> ChainComplex {
        let unreduced = if self.is_empty() {
            ChainComplex::zero()
        } else {
            let top = self.dimension().expect("nonempty complex has a dimension");
            let by_dim: Vec<Vec<&Vec<usize>>> =
                (0..=top).map(|d| self.simplices_of_dim(d)).collect();
            let dims: Vec<usize> = by_dim.iter().map(Vec::len).collect();
            let mut boundaries = vec![RationalMatrix::zeros(0, dims[0])];
            for d in 1..=top {
                let faces = &by_dim[d - 1];
                let mut m = RationalMatrix::zeros(dims[d - 1], dims[d]);
                for (col, simplex) in by_dim[d].iter().enumerate() {
                    for omit in 0..simplex.len() {
                        let face: Vec<usize> = simplex
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != omit)
                            .map(|(_, &v)| v)
                            .collect();
                        let row = faces
                            .binary_search_by(|probe| (**probe).cmp(&face))
                            .expect("faces are present by downward closure");
                        let sign = if omit % 2 == 0 { 1 } else { -1 };
                        m.set(row, col, rat(sign));
                    }
                }
                boundaries.push(m);
            }
            ChainComplex::new(0, dims, boundaries).expect("simplicial boundaries square to zero")
        };
        if reduced {
            unreduced
                .augmented()
                .expect("simplicial augmentation annihilates boundaries")
        } else {
            unreduced
        }
    }

    /// Reduced Betti table.
    pub fn betti(&self) -> crate::betti::GradedBetti {
        self.chain_complex(true).betti()
    }
}

fn is_subset(s: &[usize], t: &[usize]) -> bool {
    // Both sorted strictly increasing.
    let mut it = t.iter();
    s.iter().all(|v| it.by_ref().any(|w| w == v))
}

fn permutations(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex({} simplices, dim {:?})",
            self.simplex_count(),
            self.dimension()
        )
    }
}
