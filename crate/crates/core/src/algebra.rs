//! Algebra specifications.
//!
//! Vertices are 1-based in everything user-facing and 0-based internally.
//! Modules are representations of the *action* quiver: for a type-A
//! orientation word, `<` at position k (written `k <- k+1`) acts as
//! `k -> k+1` on modules and `>` acts as `k+1 -> k`. With this convention the
//! module `12` over `1 <- 2` has top 1 and socle 2, and the word `<<<` is the
//! same algebra as the linear Nakayama algebra with Kupisch series
//! `[4,3,2,1]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orient {
    /// `k -> k+1` as written.
    Right,
    /// `k <- k+1` as written.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraSpec {
    Nakayama { cyclic: bool, kupisch: Vec<usize> },
    TypeA { orientation: Vec<Orient> },
}

impl AlgebraSpec {
    pub fn nakayama(cyclic: bool, kupisch: Vec<usize>) -> Result<Self> {
        let spec = AlgebraSpec::Nakayama { cyclic, kupisch };
        spec.validate()?;
        Ok(spec)
    }

    pub fn linear_nakayama(kupisch: &[usize]) -> Result<Self> {
        Self::nakayama(false, kupisch.to_vec())
    }

    pub fn cyclic_nakayama(kupisch: &[usize]) -> Result<Self> {
        Self::nakayama(true, kupisch.to_vec())
    }

    /// Type A_n from an orientation word over `<`/`>` of length n-1; the
    /// empty word is A_1.
    pub fn type_a(word: &str) -> Result<Self> {
        let orientation = word
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '>' => Ok(Orient::Right),
                '<' => Ok(Orient::Left),
                other => {
                    Err(Error::Spec(format!("orientation word: unexpected character {other:?} at position {}", i + 1)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraSpec::TypeA { orientation })
    }

    pub fn validate(&self) -> Result<()> {
        let AlgebraSpec::Nakayama { cyclic, kupisch } = self else {
            return Ok(());
        };
        let n = kupisch.len();
        if n == 0 {
            return Err(Error::Spec("Kupisch series must be non-empty".into()));
        }
        if let Some(i) = kupisch.iter().position(|&c| c == 0) {
            return Err(Error::Spec(format!("Kupisch entry c_{} must be positive", i + 1)));
        }
        if *cyclic {
            if let Some(i) = kupisch.iter().position(|&c| c < 2) {
                return Err(Error::Spec(format!(
                    "cyclic Kupisch series needs every c_i >= 2, but c_{} = {}",
                    i + 1,
                    kupisch[i]
                )));
            }
            for i in 0..n {
                let next = kupisch[(i + 1) % n];
                if kupisch[i] > next + 1 {
                    return Err(Error::Spec(format!(
                        "Kupisch condition c_{} <= c_{} + 1 fails ({} > {} + 1)",
                        i + 1,
                        (i + 1) % n + 1,
                        kupisch[i],
                        next
                    )));
                }
            }
        } else {
            if kupisch[n - 1] != 1 {
                return Err(Error::Spec(format!(
                    "linear Kupisch series must end in 1, found c_{n} = {}",
                    kupisch[n - 1]
                )));
            }
            for i in 0..n - 1 {
                if kupisch[i] > kupisch[i + 1] + 1 {
                    return Err(Error::Spec(format!(
                        "Kupisch condition c_{} <= c_{} + 1 fails ({} > {} + 1)",
                        i + 1,
                        i + 2,
                        kupisch[i],
                        kupisch[i + 1]
                    )));
                }
                if kupisch[i] == 1 {
                    return Err(Error::Spec(format!(
                        "c_{} = 1 before the last vertex disconnects the algebra; \
                         run each connected component separately",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            AlgebraSpec::Nakayama { kupisch, .. } => kupisch.len(),
            AlgebraSpec::TypeA { orientation } => orientation.len() + 1,
        }
    }

    pub fn is_nakayama(&self) -> bool {
        matches!(self, AlgebraSpec::Nakayama { .. })
    }

    /// Arrows of the action quiver as 0-based `(source, target)` pairs.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        match self {
            AlgebraSpec::Nakayama { cyclic, kupisch } => {
                let n = kupisch.len();
                let count = if *cyclic { n } else { n - 1 };
                (0..count).map(|i| (i, (i + 1) % n)).collect()
            }
            AlgebraSpec::TypeA { orientation } => orientation
                .iter()
                .enumerate()
                .map(|(k, o)| match o {
                    Orient::Left => (k, k + 1),
                    Orient::Right => (k + 1, k),
                })
                .collect(),
        }
    }

    /// True when the quiver has no oriented cycle.
    pub fn is_acyclic(&self) -> bool {
        !matches!(self, AlgebraSpec::Nakayama { cyclic: true, .. })
    }

    pub fn orientation_word(&self) -> Option<String> {
        match self {
            AlgebraSpec::TypeA { orientation } => {
                Some(orientation.iter().map(|o| if *o == Orient::Right { '>' } else { '<' }).collect())
            }
            _ => None,
        }
    }
}

impl std::fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraSpec::Nakayama { cyclic, kupisch } => {
                let kind = if *cyclic { "cyclic" } else { "linear" };
                write!(f, "{kind} Nakayama {kupisch:?}")
            }
            AlgebraSpec::TypeA { .. } => {
                let w = self.orientation_word().unwrap_or_default();
                write!(f, "A{} \"{w}\"", self.num_vertices())
            }
        }
    }
}

/// Every orientation of A_n, in lexicographic order of the word.
pub fn all_type_a(n: usize) -> Vec<AlgebraSpec> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for mask in 0..(1usize << (n - 1)) {
        let word: String = (0..n - 1).map(|k| if mask >> (n - 2 - k) & 1 == 1 { '>' } else { '<' }).collect();
        out.push(AlgebraSpec::type_a(&word).expect("generated word is valid"));
    }
    out
}
