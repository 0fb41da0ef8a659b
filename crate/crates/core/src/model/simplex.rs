use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Identifier;

/// A relation name with its ordered roles. Arity is the number of roles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationSymbol {
    id: Identifier,
    roles: Vec<Identifier>,
}

impl RelationSymbol {
    pub fn new(id: Identifier, roles: Vec<Identifier>) -> Result<Self> {
        if roles.is_empty() {
            return Err(Error::InvalidRelation {
                relation: id,
                reason: "a relation needs at least one role".into(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = roles.iter().find(|r| !seen.insert(*r)) {
            return Err(Error::InvalidRelation {
                reason: format!("role {dup} is declared twice"),
                relation: id,
            });
        }
        Ok(RelationSymbol { id, roles })
    }

    /// Relation with positional roles `r1, r2, ...`.
    pub fn positional(id: Identifier, arity: usize) -> Result<Self> {
        let roles = (1..=arity)
            .map(|i| Identifier::new(format!("r{i}")))
            .collect::<Result<Vec<_>>>()?;
        RelationSymbol::new(id, roles)
    }

    pub fn id(&self) -> &Identifier {
        &self.id
    }

    pub fn roles(&self) -> &[Identifier] {
        &self.roles
    }

    pub fn arity(&self) -> usize {
        self.roles.len()
    }
}

/// One participant slot of a hypersimplex.
///
/// `Excluded` is an anti-vertex: an explicit exclusion that keeps the slot
/// (and therefore the arity) occupied.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Participant {
    Present(Identifier),
    Excluded(Identifier),
}

impl Participant {
    pub fn id(&self) -> &Identifier {
        match self {
            Participant::Present(id) | Participant::Excluded(id) => id,
        }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, Participant::Excluded(_))
    }
}

impl fmt::Display for Participant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Participant::Present(id) => write!(f, "{id}"),
            Participant::Excluded(id) => write!(f, "!{id}"),
        }
    }
}

/// Aggregation typing: conjunctive (alpha) or taxonomic (beta).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Kind {
    #[default]
    Alpha,
    Beta,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Alpha => "alpha",
            Kind::Beta => "beta",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alpha" => Ok(Kind::Alpha),
            "beta" => Ok(Kind::Beta),
            other => Err(format!("unknown kind {other:?}, expected alpha or beta")),
        }
    }
}

/// An ordered tuple of participants bound to a relation symbol, with a kind
/// and a set of boundary tags.
///
/// `PartialEq` is full equality (tags included, in order). Use
/// [`Hypersimplex::structurally_eq`] to compare while ignoring tags, and
/// compare [`Hypersimplex::id`] for identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypersimplex {
    id: Identifier,
    participants: Vec<Participant>,
    relation: Identifier,
    kind: Kind,
    tags: Vec<Identifier>,
}

impl Hypersimplex {
    /// Arity against the relation is checked when the hypersimplex is placed
    /// in a [`super::Hypernetwork`]; here only the tag set is checked.
    pub fn new(
        id: Identifier,
        participants: Vec<Participant>,
        relation: Identifier,
        kind: Kind,
        tags: Vec<Identifier>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        if let Some(dup) = tags.iter().find(|t| !seen.insert(*t)) {
            return Err(Error::DuplicateTag {
                simplex: id,
                tag: dup.clone(),
            });
        }
        Ok(Hypersimplex {
            id,
            participants,
            relation,
            kind,
            tags,
        })
    }

    pub fn id(&self) -> &Identifier {
        &self.id
    }

    pub fn participants(&self) -> &[Participant] {
        &self.participants
    }

    pub fn relation(&self) -> &Identifier {
        &self.relation
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn tags(&self) -> &[Identifier] {
        &self.tags
    }

    pub fn carries(&self, tag: &Identifier) -> bool {
        self.tags.contains(tag)
    }

    /// Equality of everything except the boundary tags.
    pub fn structurally_eq(&self, other: &Hypersimplex) -> bool {
        self.id == other.id
            && self.participants == other.participants
            && self.relation == other.relation
            && self.kind == other.kind
    }

    /// Same structure, different tags. Duplicates in `tags` are dropped,
    /// keeping the first occurrence.
    pub fn with_tags(&self, tags: impl IntoIterator<Item = Identifier>) -> Hypersimplex {
        let mut seen = HashSet::new();
        Hypersimplex {
            tags: tags
                .into_iter()
                .filter(|t| seen.insert(t.clone()))
                .collect(),
            ..self.clone()
        }
    }

    pub fn with_participants(&self, participants: Vec<Participant>) -> Hypersimplex {
        Hypersimplex {
            participants,
            ..self.clone()
        }
    }

    #[cfg(test)]
    pub(crate) fn from_parts_unchecked(
        id: Identifier,
        participants: Vec<Participant>,
        relation: Identifier,
        kind: Kind,
        tags: Vec<Identifier>,
    ) -> Self {
        Hypersimplex {
            id,
            participants,
            relation,
            kind,
            tags,
        }
    }
}
