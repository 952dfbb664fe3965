use thiserror::Error;

use crate::Root;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid root system: {0}")]
    InvalidSpec(String),
    #[error("{0} is not a positive root of this system")]
    RootNotInSystem(Root),
    #[error("meet of {0} and {1} is undefined (disjoint supports)")]
    MeetUndefined(Root, Root),
    #[error("ideal is not abelian")]
    NotAbelian,
    #[error("ideal is empty")]
    EmptyIdeal,
    #[error("{0} is not a long positive root")]
    NotLongRoot(Root),
    #[error("{0} is not a commutative root")]
    NotCommutative(Root),
    #[error("simple roots {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("simple root {0} is not long")]
    NotLong(usize),
    #[error("({0}, {1}) is not a glorious pair")]
    NotGlorious(Root, Root),
    #[error("simple roots {0:?} do not form a path in the Dynkin diagram")]
    NotAPath(Vec<usize>),
    #[error("root system is simply laced")]
    SimplyLaced,
    #[error("root system is not of type D or E")]
    NotDEType,
    #[error("object vanishes in type A")]
    TypeA,
    #[error("edge ({0}, {1}) carries no glorious pair")]
    NotGloriousEdge(usize, usize),
    #[error("ideal is not minimal non-abelian")]
    NotMinimalNonAbelian,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A structural identity failed. Indicates a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
