use crate::error::GraphError;

/// Size caps for the exponential containment searches. Operations beyond a cap
/// return [`GraphError::TooLarge`] instead of running.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Host graph size for minor and topological-minor search, pattern size for
    /// subgraph search.
    pub containment: usize,
    /// Host graph size for the deletion/contraction closure.
    pub closure: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits { containment: 14, closure: 12 };

    /// Same cap for every search.
    pub fn uniform(cap: usize) -> Limits {
        Limits { containment: cap, closure: cap }
    }

    pub(crate) fn check_containment(&self, n: usize) -> Result<(), GraphError> {
        if n > self.containment {
            return Err(GraphError::TooLarge { n, cap: self.containment });
        }
        Ok(())
    }

    pub(crate) fn check_closure(&self, n: usize) -> Result<(), GraphError> {
        if n > self.closure {
            return Err(GraphError::TooLarge { n, cap: self.closure });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
