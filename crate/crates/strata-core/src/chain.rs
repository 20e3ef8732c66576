//! Bounded chain complexes of finite-dimensional rational vector spaces,
//! chain maps, and the constructions used by the intersection-space models:
//! tensor product, Moore truncation, and mapping cones.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

use crate::betti::GradedBetti;
use crate::linalg::RationalMatrix;

/// Errors from chain complex and chain map construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainError {
    /// Dimension/boundary shape bookkeeping is inconsistent.
    Shape { context: &'static str, degree: i64 },
    /// The composite of consecutive boundary maps is nonzero.
    BoundarySquare { degree: i64 },
    /// A chain map component fails to commute with the boundaries.
    NonCommutingSquare { degree: i64 },
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::Shape { context, degree } => {
                write!(f, "inconsistent shape in {} at degree {}", context, degree)
            }
            ChainError::BoundarySquare { degree } => {
                write!(f, "boundary squared is nonzero at degree {}", degree)
            }
            ChainError::NonCommutingSquare { degree } => {
                write!(f, "chain map square does not commute at degree {}", degree)
            }
        }
    }
}

/// A chain complex concentrated in degrees `min_degree ..= top_degree`.
///
/// `boundaries[i]` is the boundary map out of degree `min_degree + i`; the
/// map out of the bottom degree has zero rows. Complexes built from
/// simplicial data use `min_degree = 0`, or `-1` with the augmentation in
/// degree -1 when reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    min_degree: i64,
    dims: Vec<usize>,
    boundaries: Vec<RationalMatrix>,
}

impl ChainComplex {
    /// Validating constructor: checks shapes and that consecutive boundary
    /// maps compose to zero.
    pub fn new(
        min_degree: i64,
        dims: Vec<usize>,
        boundaries: Vec<RationalMatrix>,
    ) -> Result<Self, ChainError> {
        if dims.len() != boundaries.len() {
            return Err(ChainError::Shape {
                context: "degree count",
                degree: min_degree,
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            let expected_rows = if i == 0 { 0 } else { dims[i - 1] };
            if b.cols() != dims[i] || b.rows() != expected_rows {
                return Err(ChainError::Shape {
                    context: "boundary",
                    degree: min_degree + i as i64,
                });
            }
        }
        let complex = ChainComplex {
            min_degree,
            dims,
            boundaries,
        };
        complex.check_boundary_squares()?;
        Ok(complex)
    }

    /// The zero complex.
    pub fn zero() -> Self {
        ChainComplex {
            min_degree: 0,
            dims: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    /// Verify that the composite of consecutive boundaries vanishes.
    pub fn check_boundary_squares(&self) -> Result<(), ChainError> {
        for i in 1..self.boundaries.len() {
            let square = self.boundaries[i - 1]
                .mul(&self.boundaries[i])
                .map_err(|_| ChainError::Shape {
                    context: "boundary square",
                    degree: self.min_degree + i as i64,
                })?;
            if !square.is_zero() {
                return Err(ChainError::BoundarySquare {
                    degree: self.min_degree + i as i64,
                });
            }
        }
        Ok(())
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Top degree carrying a chain group; `min_degree - 1` for the zero
    /// complex.
    pub fn top_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    /// Whether the complex carries an augmentation degree at -1.
    pub fn is_augmented(&self) -> bool {
        self.min_degree == -1
    }

    fn index_of(&self, degree: i64) -> Option<usize> {
        if degree < self.min_degree || degree > self.top_degree() {
            None
        } else {
            Some((degree - self.min_degree) as usize)
        }
    }

    /// Dimension of the chain group at a degree (zero outside the range).
    pub fn dim_at(&self, degree: i64) -> usize {
        self.index_of(degree).map_or(0, |i| self.dims[i])
    }

    /// Boundary map out of a degree, materialized as a zero matrix of the
    /// right shape outside the stored range.
    pub fn boundary_at(&self, degree: i64) -> RationalMatrix {
        match self.index_of(degree) {
            Some(i) => self.boundaries[i].clone(),
            None => RationalMatrix::zeros(self.dim_at(degree - 1), self.dim_at(degree)),
        }
    }

    /// Total dimension over all degrees.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Alternating sum of chain group dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (i, &d) in self.dims.iter().enumerate() {
            let deg = self.min_degree + i as i64;
            chi += if deg.rem_euclid(2) == 0 { 1 } else { -1 } * d as i64;
        }
        chi
    }

    /// Homology ranks: in each degree, dim minus the ranks of the outgoing
    /// and incoming boundary maps.
    pub fn betti(&self) -> GradedBetti {
        let ranks: Vec<usize> = self.boundaries.iter().map(RationalMatrix::rank).collect();
        let mut table = GradedBetti::new(self.top_degree());
        for (i, &d) in self.dims.iter().enumerate() {
            let out_rank = ranks[i];
            let in_rank = ranks.get(i + 1).copied().unwrap_or(0);
            table.set(self.min_degree + i as i64, d - out_rank - in_rank);
        }
        table
    }

    /// Attach a one-dimensional augmentation in degree -1 mapping every
    /// degree-0 generator to 1. Fails (boundary square) unless every degree-1
    /// boundary column has coefficient sum zero.
    pub fn augmented(&self) -> Result<ChainComplex, ChainError> {
        if self.min_degree != 0 {
            return Err(ChainError::Shape {
                context: "augmented",
                degree: self.min_degree,
            });
        }
        if self.dims.is_empty() {
            return ChainComplex::new(-1, vec![1], vec![RationalMatrix::zeros(0, 1)]);
        }
        let mut dims = vec![1];
        dims.extend_from_slice(&self.dims);
        let mut boundaries = vec![RationalMatrix::zeros(0, 1)];
        let n0 = self.dims.first().copied().unwrap_or(0);
        boundaries.push(RationalMatrix::from_fn(1, n0, |_, _| {
            crate::linalg::rat(1)
        }));
        boundaries.extend(self.boundaries.iter().skip(1).cloned());
        ChainComplex::new(-1, dims, boundaries)
    }

    /// Tensor product of complexes, with the usual sign on the second factor.
    /// Betti numbers satisfy the Kunneth convolution formula.
    pub fn tensor(a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
        if a.dims.is_empty() || b.dims.is_empty() {
            return ChainComplex::zero();
        }
        let min = a.min_degree + b.min_degree;
        let top = a.top_degree() + b.top_degree();
        let degree_count = (top - min + 1) as usize;

        // Summand layout per degree: (a-degree, column offset) with a-degree
        // increasing.
        let mut layout: Vec<Vec<(i64, usize)>> = Vec::with_capacity(degree_count);
        let mut dims: Vec<usize> = Vec::with_capacity(degree_count);
        for n in min..=top {
            let mut offsets = Vec::new();
            let mut total = 0;
            for i in a.min_degree..=a.top_degree() {
                let size = a.dim_at(i) * b.dim_at(n - i);
                if size > 0 {
                    offsets.push((i, total));
                    total += size;
                }
            }
            layout.push(offsets);
            dims.push(total);
        }

        let offset_of = |n: i64, i: i64| -> Option<usize> {
            layout[(n - min) as usize]
                .iter()
                .find(|&&(deg, _)| deg == i)
                .map(|&(_, off)| off)
        };

        let mut boundaries = Vec::with_capacity(degree_count);
        boundaries.push(RationalMatrix::zeros(0, dims[0]));
        for n in (min + 1)..=top {
            let rows = dims[(n - 1 - min) as usize];
            let cols = dims[(n - min) as usize];
            let mut m = RationalMatrix::zeros(rows, cols);
            for &(i, col_off) in &layout[(n - min) as usize] {
                let j = n - i;
                let (ai, bj) = (a.dim_at(i), b.dim_at(j));
                // d_a (x) id: summand (i, j) -> (i - 1, j).
                if let Some(row_off) = offset_of(n - 1, i - 1) {
                    let da = a.boundary_at(i);
                    for r in 0..da.rows() {
                        for c in 0..ai {
                            let e = da.get(r, c);
                            if e.is_zero() {
                                continue;
                            }
                            for t in 0..bj {
                                m.set(row_off + r * bj + t, col_off + c * bj + t, e.clone());
                            }
                        }
                    }
                }
                // (-1)^i id (x) d_b: summand (i, j) -> (i, j - 1).
                if let Some(row_off) = offset_of(n - 1, i) {
                    let db = b.boundary_at(j);
                    let negate = i.rem_euclid(2) == 1;
                    let b_rows = db.rows();
                    for s in 0..ai {
                        for r in 0..b_rows {
                            for c in 0..bj {
                                let e = db.get(r, c);
                                if e.is_zero() {
                                    continue;
                                }
                                let val = if negate { -e.clone() } else { e.clone() };
                                m.set(row_off + s * b_rows + r, col_off + s * bj + c, val);
                            }
                        }
                    }
                }
            }
            boundaries.push(m);
        }
        ChainComplex {
            min_degree: min,
            dims,
            boundaries,
        }
    }

    /// Direct sum, with block-diagonal boundaries.
    pub fn direct_sum(a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
        if a.dims.is_empty() {
            return b.clone();
        }
        if b.dims.is_empty() {
            return a.clone();
        }
        let min = a.min_degree.min(b.min_degree);
        let top = a.top_degree().max(b.top_degree());
        let mut dims = Vec::new();
        let mut boundaries = Vec::new();
        for n in min..=top {
            dims.push(a.dim_at(n) + b.dim_at(n));
            if n == min {
                boundaries.push(RationalMatrix::zeros(0, a.dim_at(n) + b.dim_at(n)));
            } else {
                let (ba, bb) = (a.boundary_at(n), b.boundary_at(n));
                let z_top = RationalMatrix::zeros(a.dim_at(n - 1), b.dim_at(n));
                let z_bot = RationalMatrix::zeros(b.dim_at(n - 1), a.dim_at(n));
                boundaries.push(
                    RationalMatrix::block2x2(&ba, &z_top, &z_bot, &bb)
                        .expect("direct sum block shapes agree by construction"),
                );
            }
        }
        ChainComplex {
            min_degree: min,
            dims,
            boundaries,
        }
    }

    /// Chain-level Moore truncation below `k`: degrees `< k` are copied and
    /// degree `k` is replaced by a complement of the cycle subspace (spanned
    /// by the pivot columns of the degree-`k` boundary), zero above. The
    /// returned inclusion induces an isomorphism on homology in degrees `< k`
    /// while the truncated complex has no homology in degrees `>= k`.
    ///
    /// `k <= 0` yields the zero complex; `k` above the top degree yields the
    /// identity.
    pub fn truncate(&self, k: i64) -> (ChainComplex, ChainMap) {
        if k <= 0 {
            let zero = ChainComplex::zero();
            let map = ChainMap {
                source: zero.clone(),
                target: self.clone(),
                components: Vec::new(),
            };
            return (zero, map);
        }
        if k > self.top_degree() {
            let map = ChainMap::identity(self);
            return (self.clone(), map);
        }
        let cut = self.index_of(k).expect("k is within the stored range");
        let mut dims: Vec<usize> = self.dims[..cut].to_vec();
        let mut boundaries: Vec<RationalMatrix> = self.boundaries[..cut].to_vec();
        let mut components: Vec<RationalMatrix> =
            self.dims[..cut].iter().map(|&d| RationalMatrix::identity(d)).collect();

        let pivots = self.boundaries[cut].pivot_columns();
        if cut == 0 {
            // The whole kept range is the complement at the bottom degree;
            // its boundary leaves the complex.
            dims.push(pivots.len());
            boundaries.push(RationalMatrix::zeros(0, pivots.len()));
        } else {
            dims.push(pivots.len());
            boundaries.push(self.boundaries[cut].select_columns(&pivots));
        }
        components.push(RationalMatrix::column_selection(self.dims[cut], &pivots));

        let source = ChainComplex {
            min_degree: self.min_degree,
            dims,
            boundaries,
        };
        let map = ChainMap {
            source,
            target: self.clone(),
            components,
        };
        (map.source.clone(), map)
    }

    /// Mapping cone of a chain map: degree `n` is `source_{n-1} (+) target_n`
    /// with boundary `[[-d_source, 0], [f, d_target]]`.
    pub fn mapping_cone(f: &ChainMap) -> ChainComplex {
        let src = &f.source;
        let tgt = &f.target;
        if src.dims.is_empty() {
            return tgt.clone();
        }
        let min = (src.min_degree + 1).min(tgt.min_degree);
        let top = (src.top_degree() + 1).max(tgt.top_degree());
        let mut dims = Vec::new();
        let mut boundaries = Vec::new();
        for n in min..=top {
            dims.push(src.dim_at(n - 1) + tgt.dim_at(n));
            if n == min {
                boundaries.push(RationalMatrix::zeros(0, src.dim_at(n - 1) + tgt.dim_at(n)));
            } else {
                let a = src.boundary_at(n - 1).negated();
                let b = RationalMatrix::zeros(src.dim_at(n - 2), tgt.dim_at(n));
                let c = f.component_at(n - 1);
                let d = tgt.boundary_at(n);
                boundaries.push(
                    RationalMatrix::block2x2(&a, &b, &c, &d)
                        .expect("mapping cone block shapes agree by construction"),
                );
            }
        }
        ChainComplex {
            min_degree: min,
            dims,
            boundaries,
        }
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ChainComplex[{}..={}] dims {:?}",
            self.min_degree,
            self.top_degree(),
            self.dims
        )
    }
}

/// A chain map between two complexes, stored as one matrix per source degree.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    /// `components[i]` maps source degree `source.min_degree + i` into the
    /// target; outside the source range the map is zero.
    components: Vec<RationalMatrix>,
}

impl ChainMap {
    /// Validating constructor: checks component shapes and that every square
    /// against the boundaries commutes.
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<RationalMatrix>,
    ) -> Result<Self, ChainError> {
        if components.len() != source.dims.len() {
            return Err(ChainError::Shape {
                context: "chain map components",
                degree: source.min_degree,
            });
        }
        let map = ChainMap {
            source,
            target,
            components,
        };
        map.check_commuting_squares()?;
        Ok(map)
    }

    /// Identity chain map on a complex.
    pub fn identity(c: &ChainComplex) -> Self {
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            components: c.dims.iter().map(|&d| RationalMatrix::identity(d)).collect(),
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// Component at a degree, materialized as zero outside the source range.
    pub fn component_at(&self, degree: i64) -> RationalMatrix {
        match self.source.index_of(degree) {
            Some(i) => self.components[i].clone(),
            None => RationalMatrix::zeros(self.target.dim_at(degree), self.source.dim_at(degree)),
        }
    }

    /// Verify shapes and `d_target . f = f . d_source` in every degree.
    pub fn check_commuting_squares(&self) -> Result<(), ChainError> {
        for (i, comp) in self.components.iter().enumerate() {
            let degree = self.source.min_degree + i as i64;
            if comp.cols() != self.source.dims[i] || comp.rows() != self.target.dim_at(degree) {
                return Err(ChainError::Shape {
                    context: "chain map component",
                    degree,
                });
            }
            let lhs = self
                .target
                .boundary_at(degree)
                .mul(comp)
                .map_err(|_| ChainError::Shape {
                    context: "chain map square",
                    degree,
                })?;
            let rhs = self
                .component_at(degree - 1)
                .mul(&self.source.boundary_at(degree))
                .map_err(|_| ChainError::Shape {
                    context: "chain map square",
                    degree,
                })?;
            if lhs != rhs {
                return Err(ChainError::NonCommutingSquare { degree });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap {:?} -> {:?}", self.source, self.target)
    }
}
