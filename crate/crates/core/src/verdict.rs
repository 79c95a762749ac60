//! Division verdicts shared by every decision procedure.

/// An element `(u, v)` of a doubled algebra, standing for `u + v·j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<E> {
    pub u: E,
    pub v: E,
}

impl<E> Pair<E> {
    pub fn new(u: E, v: E) -> Self {
        Pair { u, v }
    }
}

/// Nonzero `left`, `right` with `left · right = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorWitness<E> {
    pub left: Pair<E>,
    pub right: Pair<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionVerdict<E> {
    ProvedDivision {
        reason: String,
    },
    /// The witness may be missing when non-division follows from a norm
    /// argument whose explicit solution was not found.
    ProvedNotDivision {
        reason: String,
        witness: Option<ZeroDivisorWitness<E>>,
    },
    Unknown {
        reason: String,
    },
}

impl<E> DivisionVerdict<E> {
    pub fn label(&self) -> &'static str {
        match self {
            DivisionVerdict::ProvedDivision { .. } => "proved-division",
            DivisionVerdict::ProvedNotDivision { .. } => "proved-not-division",
            DivisionVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            DivisionVerdict::ProvedDivision { reason }
            | DivisionVerdict::ProvedNotDivision { reason, .. }
            | DivisionVerdict::Unknown { reason } => reason,
        }
    }

    pub fn is_division(&self) -> bool {
        matches!(self, DivisionVerdict::ProvedDivision { .. })
    }

    pub fn is_not_division(&self) -> bool {
        matches!(self, DivisionVerdict::ProvedNotDivision { .. })
    }

    pub fn witness(&self) -> Option<&ZeroDivisorWitness<E>> {
        match self {
            DivisionVerdict::ProvedNotDivision { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }
}
