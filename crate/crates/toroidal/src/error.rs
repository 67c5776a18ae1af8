use thiserror::Error;

/// Errors raised by map construction, structure queries and transformations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("alpha is not a fixed-point-free involution")]
    NotInvolution,
    #[error("sigma is not a permutation of the dart set")]
    NotPermutation,
    #[error("the darts are not connected under sigma and alpha")]
    NotConnected,
    #[error("coloring is missing, inconsistent on a vertex, or not proper")]
    BadColoring,
    #[error("map is not a quadrangulation")]
    NotQuadrangulation,
    #[error("map is not bipartite")]
    NotBipartite,
    #[error("map does not have the required genus")]
    WrongGenus,
    #[error("walk is not null-homologous")]
    NotNullHomologous,
    #[error("dart sequence is not a closed walk")]
    NotAWalk,
    #[error("dart sequence is not a cycle")]
    NotACycle,
    #[error("map is not unicellular")]
    NotUnicellular,
    #[error("map has a vertex of degree other than 1 or 3")]
    NotPrecubic,
    #[error("unicellular map is not balanced")]
    NotBalanced,
    #[error("outdegree demands do not sum to the number of edges")]
    DemandMismatch,
    #[error("no improving directed cycle exists while the gamma scores are nonzero")]
    NoProgress,
    #[error("minimalization exceeded its reversal step bound")]
    StepBoundExceeded,
    #[error("biorientation is not S-quad")]
    NotSQuad,
    #[error("orientation has a clockwise face")]
    ClockwiseFace,
    #[error("biorientation is not a right biorientation for the root face")]
    NotRightBiorientation,
    #[error("no closure pattern at the requested position")]
    NoPattern,
    #[error("map is not in the 6-quadrangular family")]
    NotInH,
    #[error("map is not an essentially 3-connected toroidal map")]
    NotInT,
    #[error("map is not a rooted essentially simple toroidal triangulation of the restricted family")]
    NotInT3,
    #[error("patching did not produce a member of the quadrangulation family")]
    NotPatchable,
    #[error("requested edge budget exceeds the enumeration cap")]
    CapExceeded,
    #[error("series pipeline result disagrees with its closed form")]
    ClosedFormMismatch,
    #[error("tmap parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, MapError>;
