//! Typed hypernetworks with boundary-scoped views.
//!
//! A [`Hypernetwork`] is an immutable backcloth of typed n-ary
//! hypersimplices. Boundary tags on hypersimplices select views
//! ([`scope::project`]) without changing structure; the structural operators
//! in [`ops`] work the same on whole networks and on views.
//!
//! ```
//! use htscope::{corpus::Fixture, scope, Identifier};
//!
//! let backcloth = Fixture::Emergency.load();
//! let fire = scope::project(&backcloth, &Identifier::new("b_fire")?);
//! let ids: Vec<_> = fire.content().simplices().iter().map(|s| s.id().as_str()).collect();
//! assert_eq!(ids, ["fireUnit", "report"]);
//! # Ok::<(), htscope::Error>(())
//! ```

pub mod axioms;
pub mod cli;
pub mod corpus;
pub mod digest;
mod error;
pub mod model;
pub mod ops;
pub mod scope;
pub mod text;

pub use digest::{structural_digest, Digest};
pub use error::{Error, ParseError, ParseErrorKind, Result, SourceSpan};
pub use model::{
    Hypernetwork, HypernetworkParts, Hypersimplex, IdSet, Identifier, Kind, Participant,
    RelationSymbol, View,
};
