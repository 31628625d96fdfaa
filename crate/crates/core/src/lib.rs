//! Regular dessins d'enfants as finite permutation pairs, and the symmetry
//! classification of the Riemann surfaces underlying them.
//!
//! A *regular dessin* is modelled here as an ordered pair of permutations
//! `(x, y)` of `{0..d-1}` whose generated group `G` acts regularly on the `d`
//! points (transitive with `|G| = d`), together with the derived third
//! generator `z = (xy)⁻¹`. The orders `(l, m, n)` of `x, y, z` are the *type*
//! of the dessin, and the Euler characteristic of the carrier surface follows
//! from `|G|` and the type.
//!
//! The central question answered by [`symmetry::decide_symmetric`] is whether
//! the carrier surface admits an anticonformal involution. It does exactly
//! when at least one of four conditions holds:
//!
//! 1. `G` has an automorphism inverting both canonical generators
//!    (`x ↦ x⁻¹`, `y ↦ y⁻¹`) — the dessin is *reflexible*;
//! 2. `G` has an automorphism crossing them with inversion
//!    (`x ↦ y⁻¹`, `y ↦ x⁻¹`), possibly after a cyclic rotation of the
//!    generating triple;
//! 3. the type is `(2n, 2n, n)` up to rotation, `G` has an automorphism `γ`
//!    transposing `x` and `y`, and the extension `⟨G, γ⟩` has an automorphism
//!    `δ` transposing `x` and `x·γ`;
//! 4. the surface has genus 1.
//!
//! The [`permgroup`] module supplies the group machinery (closure by
//! breadth-first search, the anchored relabeling algorithm deciding whether a
//! generator assignment extends to an isomorphism, and the extension
//! `⟨G, γ⟩`); [`dessin`] the structural operations (mirror, duals, Walsh
//! maps); [`symmetry`] the four condition checkers, growth along normal
//! triangle-group inclusions, and the inclusion table lookup; and
//! [`constructions`] the example dessins used as test fixtures (complete-graph
//! embeddings over finite fields, torus maps, joins, and an order-21 quotient
//! related to Klein's quartic).
//!
//! Composition convention, fixed repo-wide: `p.compose(&q)` applies `p`
//! first, then `q`. All point sets are `{0..d-1}` and the anchored algorithms
//! use point `0` as base.
//!
//! ```
//! use dessin_core::constructions::klein21;
//! use dessin_core::symmetry::decide_symmetric;
//!
//! let d = klein21();
//! assert_eq!((d.order(), d.genus()), (21, 3));
//! let report = decide_symmetric(&d);
//! assert!(report.symmetric);
//! assert!(report.c1.is_none() && report.c2.is_some());
//! ```

pub mod constructions;
pub mod dessin;
pub mod permgroup;
pub mod symmetry;

pub use dessin::{DessinType, DualKind, OrientedMap, RegularDessin};
pub use permgroup::{GroupClosure, Permutation};
pub use symmetry::SymmetryReport;

use thiserror::Error;

/// Errors shared across the crate.
///
/// Precondition violations of the pure in-process algorithms are reported as
/// [`Error::InvalidInput`]; the remaining variants are domain verdicts a
/// caller may want to branch on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// The group closure grew past the requested element cap.
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The permutation pair does not define a regular action.
    #[error("not a regular pair: {0}")]
    NotRegular(String),

    /// The extension `⟨G, γ⟩` requires `γ` of order exactly 2.
    #[error("gamma must be an involution: order exactly 2, not the identity")]
    GammaNotInvolution,

    /// Walsh inversion requires the middle period to be 2.
    #[error("not a map: the middle generator has order {0}, expected 2")]
    NotAMap(u64),

    /// Walsh inversion requires the bipartite subgroup to have index 2.
    #[error("map is not bipartite")]
    NotBipartite,

    #[error("unsupported field extension degree {0} (supported: 1..=16)")]
    UnsupportedDegree(u32),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    /// Prime powers outside the implemented range (`2^e` with `e >= 2`, or an
    /// odd prime).
    #[error("prime power {0} is outside the implemented range (2^e with e >= 2, or an odd prime)")]
    UnsupportedPrimePower(u64),

    /// The maximal-triangle-group verdict rule requires the caller to assert
    /// maximality; the library cannot verify it in general.
    #[error("maximality of the triangle group must be asserted by the caller")]
    MaximalityNotAsserted,

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
