use crate::error::{Error, Result};

/// Size caps shared by the expensive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which an element of `Q[S_n]` may be expanded densely.
    pub max_degree: usize,
    /// Largest number of matrix variables the oracle will alternate over.
    pub max_variables: usize,
    /// Largest matrix dimension accepted by the decision procedures.
    pub max_dimension: usize,
    /// Enables the `d = 4` top-wedge evaluation (16 variables, a few seconds).
    pub experimental_wedge: bool,
}

pub const DEFAULT_MAX_DEGREE: usize = 9;
pub const DEFAULT_MAX_VARIABLES: usize = 12;
pub const DEFAULT_MAX_DIMENSION: usize = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_variables: DEFAULT_MAX_VARIABLES,
            max_dimension: DEFAULT_MAX_DIMENSION,
            experimental_wedge: false,
        }
    }
}

impl Limits {
    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeCap { degree, cap: self.max_degree });
        }
        Ok(())
    }

    pub fn check_variables(&self, variables: usize) -> Result<()> {
        if variables > self.max_variables {
            return Err(Error::VariableBudget { variables, cap: self.max_variables });
        }
        Ok(())
    }

    pub fn check_dimension(&self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        if d > self.max_dimension {
            return Err(Error::DimensionCap { d, cap: self.max_dimension });
        }
        Ok(())
    }
}
