//! Immutable domain types: identifiers, relation symbols, hypersimplices,
//! hypernetworks and views.

mod identifier;
mod network;
mod simplex;
mod view;

pub(crate) use identifier::is_identifier_char;
pub use identifier::Identifier;
pub use network::{Declaration, Hypernetwork, HypernetworkParts, IdSet};
pub use simplex::{Hypersimplex, Kind, Participant, RelationSymbol};
pub use view::View;
