//! File formats: facet text for simplicial complexes, the Betti-table JSON
//! document, the Mayer-Vietoris problem document, the exact-sequence text
//! format, and perversity flag parsing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use strata_core::les::{Arrow, DimSlot, ExactSequenceSpec, MVProblem};
use strata_core::{GradedBetti, Perversity, SimplicialComplex};

/// True when the input looks like a JSON document rather than facet text.
pub fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Parse the facet format: one simplex per line as whitespace-separated
/// nonnegative vertex ids, `#` starting a comment, blank lines ignored.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, String> {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut vertices = Vec::new();
        for token in line.split_whitespace() {
            let v: usize = token
                .parse()
                .map_err(|_| format!("line {}: {:?} is not a vertex id", idx + 1, token))?;
            vertices.push(v);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(format!("line {}: repeated vertex in simplex", idx + 1));
        }
        facets.push(vertices);
    }
    SimplicialComplex::from_facets(&facets).map_err(|e| format!("{}", e))
}

/// The Betti-table document: dimension, reduced flag, and a map from
/// decimal-string degrees to ranks. Degrees are nonnegative and bounded by
/// `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiTableDocument {
    pub dim: i64,
    pub reduced: bool,
    pub betti: BTreeMap<String, usize>,
}

impl BettiTableDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: BettiTableDocument =
            serde_json::from_str(text).map_err(|e| format!("betti table document: {}", e))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<(), String> {
        for key in self.betti.keys() {
            let degree: i64 = key
                .parse()
                .map_err(|_| format!("degree key {:?} is not an integer", key))?;
            if degree < 0 {
                return Err(format!("degree key {:?} is negative", key));
            }
            if degree > self.dim {
                return Err(format!(
                    "degree {} exceeds the declared dimension {}",
                    degree, self.dim
                ));
            }
        }
        Ok(())
    }

    /// Degrees below 0 are not representable in the document; they occur
    /// only for the empty complex and are reported as warnings.
    pub fn from_graded(betti: &GradedBetti, reduced: bool) -> (Self, Vec<String>) {
        let mut map = BTreeMap::new();
        let mut warnings = Vec::new();
        for (d, r) in betti.iter() {
            if d < 0 {
                warnings.push(format!(
                    "rank {} in degree {} is not representable in the document format",
                    r, d
                ));
                continue;
            }
            map.insert(format!("{}", d), r);
        }
        (
            BettiTableDocument {
                dim: betti.top_degree(),
                reduced,
                betti: map,
            },
            warnings,
        )
    }

    pub fn to_graded(&self) -> Result<GradedBetti, String> {
        self.validate()?;
        let mut out = GradedBetti::new(self.dim);
        for (key, &rank) in &self.betti {
            let degree: i64 = key.parse().expect("validated above");
            out.set(degree, rank);
        }
        Ok(out)
    }

    /// Interpret the document as a link: the reduced table plus dimension.
    /// Unreduced tables are converted by dropping one rank in degree 0.
    pub fn to_reduced_link(&self) -> Result<(GradedBetti, usize), String> {
        let mut betti = self.to_graded()?;
        if self.dim < 0 {
            return Err(String::from("link dimension must be nonnegative"));
        }
        if !self.reduced {
            let b0 = betti.rank(0);
            if b0 == 0 {
                return Err(String::from(
                    "unreduced table needs positive rank in degree 0",
                ));
            }
            betti.set(0, b0 - 1);
        }
        Ok((betti, self.dim as usize))
    }
}

/// The Mayer-Vietoris problem document: three Betti tables and a per-degree
/// rank map for the intersection-to-pieces map; unknown ranks are null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MVDocument {
    pub a: BettiTableDocument,
    pub b: BettiTableDocument,
    pub ab: BettiTableDocument,
    pub ranks: BTreeMap<String, Option<usize>>,
}

impl MVDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: MVDocument =
            serde_json::from_str(text).map_err(|e| format!("MV problem document: {}", e))?;
        Ok(doc)
    }

    pub fn to_problem(&self) -> Result<MVProblem, String> {
        let betti_a = self.a.to_graded().map_err(|e| format!("table a: {}", e))?;
        let betti_b = self.b.to_graded().map_err(|e| format!("table b: {}", e))?;
        let betti_ab = self.ab.to_graded().map_err(|e| format!("table ab: {}", e))?;
        let mut intersection_ranks = BTreeMap::new();
        for (key, value) in &self.ranks {
            let degree: i64 = key
                .parse()
                .map_err(|_| format!("rank key {:?} is not an integer", key))?;
            if degree < 0 {
                return Err(format!("rank key {:?} is negative", key));
            }
            if let Some(rank) = value {
                intersection_ranks.insert(degree, *rank);
            }
        }
        Ok(MVProblem {
            betti_a,
            betti_b,
            betti_ab,
            intersection_ranks,
        })
    }
}

/// Parse the exact-sequence text format: one `term <name|integer>` or
/// `arrow rank=<integer|?> [connecting]` per line, `#` comments, terms and
/// arrows strictly alternating starting and ending with a term.
pub fn parse_les(text: &str) -> Result<ExactSequenceSpec, String> {
    let mut terms: Vec<DimSlot> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut expect_term = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("nonblank line has a first token");
        match head {
            "term" => {
                if !expect_term {
                    return Err(format!("line {}: expected an arrow line", idx + 1));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| format!("line {}: term needs a name or dimension", idx + 1))?;
                if tokens.next().is_some() {
                    return Err(format!("line {}: trailing tokens after term", idx + 1));
                }
                match value.parse::<usize>() {
                    Ok(dim) => terms.push(DimSlot::Known(dim)),
                    Err(_) => {
                        if value.parse::<i64>().is_ok() {
                            return Err(format!(
                                "line {}: term dimensions must be nonnegative",
                                idx + 1
                            ));
                        }
                        terms.push(DimSlot::Unknown(value.to_string()));
                    }
                }
                expect_term = false;
            }
            "arrow" => {
                if expect_term {
                    return Err(format!("line {}: expected a term line", idx + 1));
                }
                let rank_token = tokens
                    .next()
                    .ok_or_else(|| format!("line {}: arrow needs rank=<integer|?>", idx + 1))?;
                let rank_value = rank_token
                    .strip_prefix("rank=")
                    .ok_or_else(|| format!("line {}: arrow needs rank=<integer|?>", idx + 1))?;
                let mut arrow = if rank_value == "?" {
                    Arrow::unknown()
                } else {
                    let rank: usize = rank_value.parse().map_err(|_| {
                        format!("line {}: {:?} is not a rank", idx + 1, rank_value)
                    })?;
                    Arrow::known(rank)
                };
                match tokens.next() {
                    None => {}
                    Some("connecting") => arrow = arrow.connecting(),
                    Some(other) => {
                        return Err(format!("line {}: unknown token {:?}", idx + 1, other))
                    }
                }
                if tokens.next().is_some() {
                    return Err(format!("line {}: trailing tokens after arrow", idx + 1));
                }
                arrows.push(arrow);
                expect_term = true;
            }
            other => {
                return Err(format!(
                    "line {}: expected term or arrow, found {:?}",
                    idx + 1,
                    other
                ))
            }
        }
    }
    if terms.is_empty() {
        return Err(String::from("no terms found"));
    }
    if expect_term {
        return Err(String::from("sequence must end with a term"));
    }
    Ok(ExactSequenceSpec { terms, arrows })
}

/// Parse the perversity flag: a family name (`zero`, `m`, `um`, `top`) or a
/// comma-separated value list for codimensions 2, 3, ... Lists that violate
/// the classical growth conditions need `extended_ok`.
pub fn parse_perversity(text: &str, extended_ok: bool) -> Result<Perversity, String> {
    match text {
        "zero" => return Ok(Perversity::Zero),
        "m" => return Ok(Perversity::LowerMiddle),
        "um" => return Ok(Perversity::UpperMiddle),
        "top" => return Ok(Perversity::Top),
        _ => {}
    }
    let values: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let values = values.map_err(|_| {
        format!(
            "{:?} is not a perversity; use zero, m, um, top, or a comma-separated value list",
            text
        )
    })?;
    if extended_ok {
        Perversity::from_values(values).map_err(|e| format!("{}", e))
    } else {
        Perversity::classical_from_values(values)
            .map_err(|e| format!("{}; pass --extended to allow it", e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_parser_reads_comments_and_blanks() {
        let text = "# tetrahedron boundary\n0 1 2\n0 1 3\n\n0 2 3\n1 2 3 # last\n";
        let complex = parse_facets(text).unwrap();
        assert_eq!(complex.betti(), GradedBetti::from_pairs(&[(2, 1)], 2));
    }

    #[test]
    fn facet_parser_reports_line_numbers() {
        let err = parse_facets("0 1\n0 x\n").unwrap_err();
        assert!(err.contains("line 2"), "{}", err);
        let err = parse_facets("0 1\n\n2 2\n").unwrap_err();
        assert!(err.contains("line 3"), "{}", err);
    }

    #[test]
    fn betti_document_round_trips() {
        let (doc, warnings) =
            BettiTableDocument::from_graded(&GradedBetti::from_pairs(&[(3, 1), (5, 2)], 8), true);
        assert!(warnings.is_empty());
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let parsed = BettiTableDocument::parse(&json).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(
            parsed.to_graded().unwrap(),
            GradedBetti::from_pairs(&[(3, 1), (5, 2)], 8)
        );
    }

    #[test]
    fn betti_document_rejects_bad_degrees() {
        assert!(BettiTableDocument::parse(r#"{"dim": 2, "reduced": true, "betti": {"3": 1}}"#)
            .unwrap_err()
            .contains("exceeds"));
        assert!(BettiTableDocument::parse(r#"{"dim": 2, "reduced": true, "betti": {"-1": 1}}"#)
            .unwrap_err()
            .contains("negative"));
        assert!(BettiTableDocument::parse(r#"{"dim": 2, "reduced": true, "betti": {"x": 1}}"#)
            .unwrap_err()
            .contains("not an integer"));
    }

    #[test]
    fn unreduced_links_drop_a_degree_zero_class() {
        let doc =
            BettiTableDocument::parse(r#"{"dim": 2, "reduced": false, "betti": {"0": 1, "2": 1}}"#)
                .unwrap();
        let (betti, dim) = doc.to_reduced_link().unwrap();
        assert_eq!(betti, GradedBetti::from_pairs(&[(2, 1)], 2));
        assert_eq!(dim, 2);
    }

    #[test]
    fn les_parser_reads_terms_arrows_and_connecting_flags() {
        let text = "term 0\narrow rank=?\nterm H\narrow rank=0 connecting\nterm 0\n";
        let spec = parse_les(text).unwrap();
        assert_eq!(spec.terms.len(), 3);
        assert!(spec.arrows[1].connecting);
    }

    #[test]
    fn les_parser_enforces_alternation() {
        let err = parse_les("term 0\nterm 1\n").unwrap_err();
        assert!(err.contains("line 2"), "{}", err);
        let err = parse_les("term 0\narrow rank=1\n").unwrap_err();
        assert!(err.contains("end with a term"), "{}", err);
    }

    #[test]
    fn perversity_flag_families_and_lists() {
        assert_eq!(parse_perversity("m", false).unwrap(), Perversity::LowerMiddle);
        assert!(parse_perversity("0,1,1,2", false).is_ok());
        let err = parse_perversity("5,5", false).unwrap_err();
        assert!(err.contains("--extended"), "{}", err);
        assert!(parse_perversity("5,5", true).is_ok());
        assert!(parse_perversity("fancy", true).is_err());
    }
}
