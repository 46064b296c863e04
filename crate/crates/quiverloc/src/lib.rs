//! Realize finitely presented algebras as corners of localized quiver path
//! algebras, and compute the homological obstruction to stable flatness.
//!
//! The pipeline, bottom to top:
//!
//! * [`exactlin`] — exact dense linear algebra over `Q` and `F_p`.
//! * [`freealg`] — words, noncommutative polynomials, presentations
//!   `k<x_1,...,x_a | y_1,...,y_b>`, and the presentation text parser.
//! * [`rewrite`] — truncated noncommutative Groebner rewriting: computable
//!   normal forms in the presented algebra up to a degree bound, with an
//!   explicit completeness certificate.
//! * [`quiver`] — quivers, path algebras with relations, projective
//!   representations, resolutions of simples, global dimension.
//! * [`localize`] — the construction that turns a presentation into a
//!   finite-dimensional quiver algebra `A` together with a set of arrows
//!   whose localization is the matrix ring `M_n(S)`, plus the verification
//!   suite and two bundled fixtures.
//! * [`malcolmson`] — `a s^{-1} b` triples over `(A, sigma)` and their
//!   sum/product calculus, with semantic equality via evaluation in `M_n(S)`.
//! * [`torcalc`] — structure-constant algebras, iterated kernels `c^j(S)`,
//!   Tor over a lower triangular matrix ring, and the stable-flatness
//!   verdict.
//! * [`cli`] / [`report`] — the batch command line front end.
//!
//! Everything is exact: dimensions are integers computed by Gaussian
//! elimination over `Q` or `F_p`, never floats.

pub mod cli;
pub mod exactlin;
pub mod freealg;
pub mod localize;
pub mod malcolmson;
pub mod quiver;
pub mod report;
pub mod rewrite;
pub mod torcalc;

pub use exactlin::{Field, Scalar};
pub use freealg::{NcPoly, Presentation, Word};
pub use rewrite::{Provenance, RewriteSystem, Verdict};
