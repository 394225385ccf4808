use serde::Serialize;

use crate::error::{Error, Result};

/// Size limits for computations whose cost grows quickly with the
/// simplicial level or the Lie degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_level: usize,
    pub max_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_level: 7,
            max_degree: 5,
        }
    }
}

impl Budget {
    /// Both limits must be positive.
    pub fn new(max_level: usize, max_degree: usize) -> Result<Self> {
        if max_level == 0 || max_degree == 0 {
            return Err(Error::BudgetExceeded("budgets must be positive".into()));
        }
        Ok(Self {
            max_level,
            max_degree,
        })
    }

    /// Default limits for the raw-presentation oracle.
    pub fn oracle() -> Self {
        Self {
            max_level: 4,
            max_degree: 4,
        }
    }

    pub fn check_level(&self, level: usize) -> Result<()> {
        if level > self.max_level {
            return Err(Error::BudgetExceeded(format!(
                "level {level} exceeds budget {}",
                self.max_level
            )));
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "degree {degree} exceeds budget {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}
