//! Degree guardrail for anything that enumerates `S_n`.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: usize = 8;
pub const ENV_VAR: &str = "PERMSPECTRA_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guardrail {
    pub max_degree: usize,
}

impl Default for Guardrail {
    fn default() -> Self {
        Guardrail {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Guardrail {
    pub fn new(max_degree: usize) -> Self {
        Guardrail { max_degree }
    }

    /// Reads `PERMSPECTRA_MAX_N`. The override is only honoured when
    /// `acknowledged` is set; otherwise a raised limit is an error.
    pub fn from_env(acknowledged: bool) -> Result<Self> {
        match std::env::var(ENV_VAR) {
            Ok(raw) => {
                let max_degree: usize = raw
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{ENV_VAR}={raw:?} is not an integer")))?;
                if max_degree > DEFAULT_MAX_DEGREE && !acknowledged {
                    return Err(Error::GuardrailExceeded {
                        n: max_degree,
                        max: DEFAULT_MAX_DEGREE,
                    });
                }
                Ok(Guardrail { max_degree })
            }
            Err(_) => Ok(Guardrail::default()),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            Err(Error::GuardrailExceeded {
                n,
                max: self.max_degree,
            })
        } else {
            Ok(())
        }
    }
}
