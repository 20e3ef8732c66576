//! Perversity functions on codimensions, classical and extended.
//!
//! A classical perversity satisfies `p(2) = 0` and grows by steps of 0 or 1;
//! extended perversities are arbitrary integer sequences indexed from
//! codimension 2. The cutoff degree of a perversity on an `l`-dimensional
//! link is `l - p(l + 1)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors from perversity construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerversityError {
    /// An explicit value sequence was empty.
    EmptySequence,
    /// A sequence was used as classical but fails the classical conditions.
    NotClassical { reason: String },
    /// An extended sequence has no stored value at the requested codimension.
    UndefinedAtCodimension { codim: usize },
    /// Codimensions below 2 are outside the domain.
    CodimensionOutOfDomain { codim: usize },
}

impl fmt::Display for PerversityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerversityError::EmptySequence => write!(f, "empty perversity sequence"),
            PerversityError::NotClassical { reason } => {
                write!(f, "not a classical perversity: {}", reason)
            }
            PerversityError::UndefinedAtCodimension { codim } => {
                write!(f, "extended perversity has no value at codimension {}", codim)
            }
            PerversityError::CodimensionOutOfDomain { codim } => {
                write!(f, "codimension {} is below 2", codim)
            }
        }
    }
}

/// Outcome of validating an explicit value sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Classical,
    /// Usable only as an extended perversity, with the first violated
    /// classical condition.
    ExtendedOnly { reason: String },
}

/// Classify an explicit sequence indexed from codimension 2. Empty input is
/// malformed.
pub fn classify(values: &[i64]) -> Result<Classification, PerversityError> {
    if values.is_empty() {
        return Err(PerversityError::EmptySequence);
    }
    if values[0] != 0 {
        return Ok(Classification::ExtendedOnly {
            reason: String::from("p(2) \u{2260} 0"),
        });
    }
    for (i, w) in values.windows(2).enumerate() {
        let step = w[1] - w[0];
        if step < 0 || step > 1 {
            return Ok(Classification::ExtendedOnly {
                reason: format!("growth step {} at k={}", step, i + 3),
            });
        }
    }
    Ok(Classification::Classical)
}

/// A perversity: one of the classical closed-form families, or an explicit
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Perversity {
    /// Identically zero.
    Zero,
    /// Lower middle: `floor((k - 2) / 2)`.
    LowerMiddle,
    /// Upper middle: `ceil((k - 2) / 2)`.
    UpperMiddle,
    /// Top: `k - 2`.
    Top,
    /// Explicit values from codimension 2 upward. Classical sequences extend
    /// past their stored range by repeating the final difference; extended
    /// sequences are never extrapolated.
    Explicit { values: Vec<i64>, classical: bool },
}

impl Perversity {
    /// Explicit sequence, classified on construction. Classical sequences
    /// are remembered as such; otherwise the perversity is extended-only.
    pub fn from_values(values: Vec<i64>) -> Result<Self, PerversityError> {
        let classical = matches!(classify(&values)?, Classification::Classical);
        Ok(Perversity::Explicit { values, classical })
    }

    /// Explicit sequence that must be classical.
    pub fn classical_from_values(values: Vec<i64>) -> Result<Self, PerversityError> {
        match classify(&values)? {
            Classification::Classical => Ok(Perversity::Explicit {
                values,
                classical: true,
            }),
            Classification::ExtendedOnly { reason } => {
                Err(PerversityError::NotClassical { reason })
            }
        }
    }

    /// Whether the perversity satisfies the classical conditions.
    pub fn is_classical(&self) -> bool {
        match self {
            Perversity::Explicit { classical, .. } => *classical,
            _ => true,
        }
    }

    /// Value at a codimension `>= 2`.
    pub fn value_at(&self, codim: usize) -> Result<i64, PerversityError> {
        if codim < 2 {
            return Err(PerversityError::CodimensionOutOfDomain { codim });
        }
        let k = codim as i64;
        match self {
            Perversity::Zero => Ok(0),
            Perversity::LowerMiddle => Ok((k - 2).div_euclid(2)),
            Perversity::UpperMiddle => Ok((k - 1).div_euclid(2)),
            Perversity::Top => Ok(k - 2),
            Perversity::Explicit { values, classical } => {
                let idx = codim - 2;
                if idx < values.len() {
                    return Ok(values[idx]);
                }
                if !classical {
                    return Err(PerversityError::UndefinedAtCodimension { codim });
                }
                // Extend by repeating the final difference (0 for a
                // single-value sequence); steps of 0 or 1 keep classicality.
                let last = *values.last().expect("explicit sequences are nonempty");
                let step = if values.len() >= 2 {
                    last - values[values.len() - 2]
                } else {
                    0
                };
                Ok(last + step * (idx as i64 - (values.len() as i64 - 1)))
            }
        }
    }

    /// Cutoff degree on an `l`-dimensional link: `l - p(l + 1)`.
    pub fn cutoff_degree(&self, l: usize) -> Result<i64, PerversityError> {
        Ok(l as i64 - self.value_at(l + 1)?)
    }

    /// Short name used in reports.
    pub fn describe(&self) -> String {
        match self {
            Perversity::Zero => String::from("zero"),
            Perversity::LowerMiddle => String::from("lower middle"),
            Perversity::UpperMiddle => String::from("upper middle"),
            Perversity::Top => String::from("top"),
            Perversity::Explicit { values, classical } => {
                let body = values
                    .iter()
                    .map(|v| format!("{}", v))
                    .collect::<Vec<_>>()
                    .join(",");
                if *classical {
                    format!("classical ({})", body)
                } else {
                    format!("extended ({})", body)
                }
            }
        }
    }
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}
