//! Homology of intersection spaces and intersection homology for spaces with
//! one isolated singular point: cones over a link and suspensions of a link.
//!
//! Each theory comes in two independent routes: a closed formula in terms of
//! the link's reduced Betti table and the cutoff degree, and a chain-level
//! model built from Moore truncations and mapping cones. The two routes are
//! cross-checked in tests and by the CLI's `--verify` flag.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::betti::GradedBetti;
use crate::chain::{ChainComplex, ChainError, ChainMap};
use crate::perversity::{Perversity, PerversityError};
use crate::simplicial::SimplicialComplex;

/// Errors from space-spec validation and formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    /// Links must have dimension at least 1.
    LinkDimension { dim: usize },
    /// The link model is an empty complex.
    EmptyLink,
    /// A Betti-table link supports a degree outside `0 ..= dim`.
    BadLinkBetti { degree: i64 },
    /// The chain-model route needs an augmented (reduced) complex.
    NotReduced,
    Perversity(PerversityError),
    Chain(ChainError),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::LinkDimension { dim } => {
                write!(f, "link dimension {} is below 1", dim)
            }
            FormulaError::EmptyLink => write!(f, "link complex is empty"),
            FormulaError::BadLinkBetti { degree } => {
                write!(f, "link Betti table supports degree {} outside 0..=dim", degree)
            }
            FormulaError::NotReduced => write!(f, "chain model requires a reduced complex"),
            FormulaError::Perversity(e) => write!(f, "{}", e),
            FormulaError::Chain(e) => write!(f, "{}", e),
        }
    }
}

impl From<PerversityError> for FormulaError {
    fn from(e: PerversityError) -> Self {
        FormulaError::Perversity(e)
    }
}

impl From<ChainError> for FormulaError {
    fn from(e: ChainError) -> Self {
        FormulaError::Chain(e)
    }
}

/// A link given either as a reduced Betti table with its dimension or as a
/// simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkModel {
    Betti { betti: GradedBetti, dim: usize },
    Complex(SimplicialComplex),
}

/// The open cone over a link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpaceSpec {
    pub link: LinkModel,
    pub simply_connected_asserted: bool,
}

/// The suspension of a link (two cone points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionSpaceSpec {
    pub link: LinkModel,
    pub simply_connected_asserted: bool,
}

/// Either kind of singular space, for comparison reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceSpec {
    Cone(ConeSpaceSpec),
    Suspension(SuspensionSpaceSpec),
}

/// Outcome of validating a link model: the resolved reduced Betti table plus
/// the hypothesis bookkeeping. The simply-connected assertion is the user's;
/// `h1_is_zero` is verified from the model, and both are reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkValidation {
    pub link_dim: usize,
    pub betti: GradedBetti,
    pub simply_connected_asserted: bool,
    pub h1_is_zero: bool,
    pub connected: bool,
    pub warnings: Vec<String>,
}

/// Validate a link model against the singular-space requirements.
pub fn validate_link(
    link: &LinkModel,
    simply_connected_asserted: bool,
) -> Result<LinkValidation, FormulaError> {
    let (link_dim, betti) = match link {
        LinkModel::Betti { betti, dim } => (*dim, betti.clone()),
        LinkModel::Complex(c) => {
            let dim = c.dimension().ok_or(FormulaError::EmptyLink)?;
            (dim, c.betti())
        }
    };
    if link_dim < 1 {
        return Err(FormulaError::LinkDimension { dim: link_dim });
    }
    if let Some(&d) = betti
        .support()
        .iter()
        .find(|&&d| d < 0 || d > link_dim as i64)
    {
        return Err(FormulaError::BadLinkBetti { degree: d });
    }
    let h1_is_zero = betti.rank(1) == 0;
    let connected = betti.rank(0) == 0;
    let mut warnings = Vec::new();
    if !h1_is_zero {
        warnings.push(String::from(
            "link has nonzero first reduced homology; outside theorem hypotheses",
        ));
        if simply_connected_asserted {
            warnings.push(String::from(
                "simply-connected assertion contradicts nonzero first homology",
            ));
        }
    }
    if !connected {
        warnings.push(String::from(
            "link is not connected; degree-0 output uses the link's reduced degree-0 rank",
        ));
    }
    if !simply_connected_asserted {
        warnings.push(String::from("simple connectivity was not asserted by the caller"));
    }
    Ok(LinkValidation {
        link_dim,
        betti,
        simply_connected_asserted,
        h1_is_zero,
        connected,
        warnings,
    })
}

impl ConeSpaceSpec {
    pub fn validate(&self) -> Result<LinkValidation, FormulaError> {
        validate_link(&self.link, self.simply_connected_asserted)
    }
}

impl SuspensionSpaceSpec {
    pub fn validate(&self) -> Result<LinkValidation, FormulaError> {
        validate_link(&self.link, self.simply_connected_asserted)
    }
}

/// Intersection homology of the open cone: the link's reduced homology in
/// degrees below the cutoff `k = l - p(l + 1)`, zero from the cutoff up.
pub fn ih_open_cone(spec: &ConeSpaceSpec, p: &Perversity) -> Result<GradedBetti, FormulaError> {
    let v = spec.validate()?;
    let k = p.cutoff_degree(v.link_dim)?;
    let mut out = GradedBetti::new(v.link_dim as i64 + 1);
    for (d, r) in v.betti.iter() {
        if d < k {
            out.set(d, r);
        }
    }
    Ok(out)
}

/// Reduced homology of the intersection space of the cone: zero strictly
/// between degree 0 and the cutoff, the link's reduced homology elsewhere.
pub fn hi_open_cone(spec: &ConeSpaceSpec, p: &Perversity) -> Result<GradedBetti, FormulaError> {
    let v = spec.validate()?;
    let k = p.cutoff_degree(v.link_dim)?;
    let mut out = GradedBetti::new(v.link_dim as i64 + 1);
    for (d, r) in v.betti.iter() {
        if !(d > 0 && d < k) {
            out.set(d, r);
        }
    }
    Ok(out)
}

/// Reduced homology of the intersection space of the suspension: the link's
/// homology shifted up by one strictly below the cutoff, the direct sum of
/// shifted and unshifted contributions at the cutoff, the link's homology
/// above it.
pub fn hi_suspension(
    spec: &SuspensionSpaceSpec,
    p: &Perversity,
) -> Result<GradedBetti, FormulaError> {
    let v = spec.validate()?;
    let k = p.cutoff_degree(v.link_dim)?;
    let link = &v.betti;
    let top = v.link_dim as i64 + 1;
    let mut out = GradedBetti::new(top);
    for j in 0..=top {
        let r = if j > 0 && j < k {
            link.rank(j - 1)
        } else if j == k {
            link.rank(j) + link.rank(j - 1)
        } else {
            link.rank(j)
        };
        out.set(j, r);
    }
    Ok(out)
}

/// Blow-up data for a space with one isolated singular point: the Betti
/// tables of the blow-up and of the pair (blow-up, boundary), plus the rank
/// of the connecting map in the cutoff degree. A missing connecting rank is
/// treated as zero; reports should mark that assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupData {
    pub blowup_betti: GradedBetti,
    pub rel_betti: GradedBetti,
    pub connecting_rank_at_k: Option<usize>,
}

impl BlowupData {
    /// Connecting rank with the zero default, and whether it was assumed.
    pub fn connecting_rank(&self) -> (usize, bool) {
        match self.connecting_rank_at_k {
            Some(r) => (r, false),
            None => (0, true),
        }
    }
}

/// Reduced homology of the intersection space from blow-up data: relative
/// homology below the cutoff, blow-up homology above it, and their exact
/// mixture (blow-up rank plus connecting rank) at the cutoff.
pub fn hi_isolated_singularity(data: &BlowupData, k: i64) -> GradedBetti {
    let top = data.blowup_betti.top_degree().max(data.rel_betti.top_degree());
    let mut out = GradedBetti::new(top);
    for (d, r) in data.rel_betti.iter() {
        if d < k {
            out.set(d, r);
        }
    }
    for (d, r) in data.blowup_betti.iter() {
        if d > k {
            out.set(d, r);
        }
    }
    if k >= 0 {
        let (conn, _) = data.connecting_rank();
        out.set(k, data.blowup_betti.rank(k) + conn);
    }
    out
}

/// Chain-model route for the cone on an explicit reduced link complex:
/// Betti numbers of the mapping cone of the Moore truncation's inclusion.
pub fn hi_cone_chain_model_on(
    link_chain: &ChainComplex,
    link_dim: usize,
    p: &Perversity,
) -> Result<GradedBetti, FormulaError> {
    if !link_chain.is_augmented() {
        return Err(FormulaError::NotReduced);
    }
    let k = p.cutoff_degree(link_dim)?;
    let (_, inclusion) = link_chain.truncate(k);
    let cone = ChainComplex::mapping_cone(&inclusion);
    Ok(cone.betti().with_top_degree(link_dim as i64 + 1))
}

/// Chain-model route for the cone on a simplicial link.
pub fn hi_cone_chain_model(
    link: &SimplicialComplex,
    p: &Perversity,
) -> Result<GradedBetti, FormulaError> {
    let dim = link.dimension().ok_or(FormulaError::EmptyLink)?;
    hi_cone_chain_model_on(&link.chain_complex(true), dim, p)
}

/// Chain-model route for the suspension: mapping cone of
/// `(a, b) -> f(a) + f(b)` on two copies of the Moore truncation, one per
/// cone point.
pub fn hi_suspension_chain_model_on(
    link_chain: &ChainComplex,
    link_dim: usize,
    p: &Perversity,
) -> Result<GradedBetti, FormulaError> {
    if !link_chain.is_augmented() {
        return Err(FormulaError::NotReduced);
    }
    let k = p.cutoff_degree(link_dim)?;
    let (truncation, inclusion) = link_chain.truncate(k);
    let doubled = ChainComplex::direct_sum(&truncation, &truncation);
    let mut components = Vec::new();
    for degree in truncation.min_degree()..=truncation.top_degree() {
        let f = inclusion.component_at(degree);
        components.push(f.hstack(&f).expect("both blocks share the target row count"));
    }
    let glue = ChainMap::new(doubled, link_chain.clone(), components)?;
    let cone = ChainComplex::mapping_cone(&glue);
    Ok(cone.betti().with_top_degree(link_dim as i64 + 1))
}

/// Chain-model route for the suspension of a simplicial link.
pub fn hi_suspension_chain_model(
    link: &SimplicialComplex,
    p: &Perversity,
) -> Result<GradedBetti, FormulaError> {
    let dim = link.dimension().ok_or(FormulaError::EmptyLink)?;
    hi_suspension_chain_model_on(&link.chain_complex(true), dim, p)
}

/// Side-by-side theory tables for one singular space and perversity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryComparison {
    pub perversity: String,
    pub cutoff_degree: i64,
    /// Intersection homology (cone specs only; not computed for suspensions).
    pub ih: Option<GradedBetti>,
    /// Ordinary reduced homology of the suspension model (suspension specs).
    pub ordinary: Option<GradedBetti>,
    /// Homology of the intersection space.
    pub hi: GradedBetti,
    /// Degrees where the two tables differ.
    pub differing_degrees: Vec<i64>,
    pub warnings: Vec<String>,
}

/// Compare the two theories on a cone, or compare the intersection-space
/// homology of a suspension against the ordinary homology of the suspension.
pub fn compare_theories(
    spec: &SpaceSpec,
    p: &Perversity,
) -> Result<TheoryComparison, FormulaError> {
    match spec {
        SpaceSpec::Cone(cone) => {
            let v = cone.validate()?;
            let k = p.cutoff_degree(v.link_dim)?;
            let ih = ih_open_cone(cone, p)?;
            let hi = hi_open_cone(cone, p)?;
            let differing_degrees = ih.differing_degrees(&hi);
            Ok(TheoryComparison {
                perversity: p.describe(),
                cutoff_degree: k,
                ih: Some(ih),
                ordinary: None,
                hi,
                differing_degrees,
                warnings: v.warnings,
            })
        }
        SpaceSpec::Suspension(susp) => {
            let v = susp.validate()?;
            let k = p.cutoff_degree(v.link_dim)?;
            let ordinary = v.betti.shifted(1).with_top_degree(v.link_dim as i64 + 1);
            let hi = hi_suspension(susp, p)?;
            let differing_degrees = ordinary.differing_degrees(&hi);
            let mut warnings = v.warnings;
            warnings.push(String::from(
                "suspension comparison is against ordinary homology; intersection homology of suspensions is out of scope",
            ));
            Ok(TheoryComparison {
                perversity: p.describe(),
                cutoff_degree: k,
                ih: None,
                ordinary: Some(ordinary),
                hi,
                differing_degrees,
                warnings,
            })
        }
    }
}

/// The alternating-sum identity tying the cone's intersection-space homology
/// to the link: reduced Euler characteristic of the output equals that of the
/// link minus the alternating sum of link ranks strictly between 0 and the
/// cutoff.
pub fn cone_euler_identity_holds(link: &GradedBetti, k: i64, hi: &GradedBetti) -> bool {
    let mut removed = 0i64;
    for (d, r) in link.iter() {
        if d > 0 && d < k {
            removed += if d.rem_euclid(2) == 0 { 1 } else { -1 } * r as i64;
        }
    }
    hi.euler_characteristic() == link.euler_characteristic() - removed
}
