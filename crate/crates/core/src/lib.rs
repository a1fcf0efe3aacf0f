//! Quasipositive fence diagrams: band words, their moves, reduction to
//! Legendrian fronts, invariants, and bounded equivalence search.

pub mod diagram;
pub mod error;
pub mod format;
pub mod legendrian;
pub mod moves;
pub mod oracles;
pub mod search;

pub use diagram::{Band, BraidWord, FenceDiagram, Letter, Permutation, Sign, SurfaceSummary};
pub use error::{Error, Result};
pub use format::{parse_fence, parse_front, serialize_fence, serialize_front};
pub use legendrian::{
    cusped_render_data, fence_from_front, legendrian_invariants, reduce, LegendrianInvariants,
    RectilinearFront, ReducedDiagram,
};
pub use moves::{applicable_moves, apply_move, End, Move, MoveKind, SlideForm, Split};
pub use oracles::{kauffman_bracket, linking_number, LaurentPolynomial};

/// Kauffman bracket values: integer Laurent polynomials in `A`.
pub type Bracket = LaurentPolynomial<i64>;
