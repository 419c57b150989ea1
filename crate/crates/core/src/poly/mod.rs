//! Polynomial arithmetic: dense univariate, sparse multivariate (at most four
//! variables), determinants of matrices of polynomials, complex root finding,
//! Sylvester resultants and perfect-square detection for binary quartics.

mod multi;
mod resultant;
mod roots;
mod square;
mod uni;

pub use multi::{det_of_linear_matrix, det_poly, Monomial, MultiPoly};
pub use resultant::{common_zeros, resultant_bivariate, resultant_like, Elimination};
pub use roots::{all_complex_roots, binary_roots, cluster_roots, polish_root, raw_roots, Root};
pub use square::{is_perfect_square_quartic, SquareTest, PAIR_TOL};
pub use uni::{interpolate, UniPoly};
