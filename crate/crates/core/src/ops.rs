//! Structural operators: merge, meet, difference, prune and split.
//!
//! All operators are keyed by identity, preserve declaration order and never
//! look at boundary tags except to combine them (union for merge,
//! intersection for meet, carried through otherwise).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{
    Declaration, Hypernetwork, HypernetworkParts, Hypersimplex, Identifier, Participant,
    RelationSymbol,
};

/// The operators that combine two hypernetworks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Merge,
    Meet,
    Difference,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 3] = [BinaryOp::Merge, BinaryOp::Meet, BinaryOp::Difference];

    pub fn apply(self, h1: &Hypernetwork, h2: &Hypernetwork) -> Result<Hypernetwork> {
        match self {
            BinaryOp::Merge => merge(h1, h2),
            BinaryOp::Meet => meet(h1, h2),
            BinaryOp::Difference => Ok(difference(h1, h2)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BinaryOp::Merge => "merge",
            BinaryOp::Meet => "meet",
            BinaryOp::Difference => "difference",
        }
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BinaryOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BinaryOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown operator {s:?}"))
    }
}

fn conflict(id: &Identifier, reason: impl Into<String>) -> Error {
    Error::IdentityConflict {
        id: id.clone(),
        reason: reason.into(),
    }
}

/// Fails if an identifier declared in both networks names different things.
/// Tags are ignored.
fn check_shared_identities(h1: &Hypernetwork, h2: &Hypernetwork) -> Result<()> {
    let declarations = h1
        .vertices()
        .iter()
        .chain(h1.relations().iter().map(RelationSymbol::id))
        .chain(h1.simplices().iter().map(Hypersimplex::id));
    for id in declarations {
        let (Some(left), Some(right)) = (h1.lookup(id), h2.lookup(id)) else {
            continue;
        };
        match (left, right) {
            (Declaration::Vertex(_), Declaration::Vertex(_)) => {}
            (Declaration::Relation(a), Declaration::Relation(b)) if a == b => {}
            (Declaration::Relation(_), Declaration::Relation(_)) => {
                return Err(conflict(
                    id,
                    "relation symbol declared with different roles",
                ));
            }
            (Declaration::Simplex(a), Declaration::Simplex(b)) if a.structurally_eq(b) => {}
            (Declaration::Simplex(_), Declaration::Simplex(_)) => {
                return Err(conflict(
                    id,
                    "hypersimplex declared with different structure",
                ));
            }
            _ => return Err(conflict(id, "declared as different kinds of element")),
        }
    }
    Ok(())
}

/// Vertices that no hypersimplex of `h` references.
fn free_vertices(h: &Hypernetwork) -> HashSet<&Identifier> {
    let referenced: HashSet<&Identifier> = h
        .simplices()
        .iter()
        .flat_map(|s| s.participants().iter().map(Participant::id))
        .collect();
    h.vertices()
        .iter()
        .filter(|v| !referenced.contains(v))
        .collect()
}

fn build(parts: HypernetworkParts) -> Result<Hypernetwork> {
    Hypernetwork::new(parts)
}

/// Identity-keyed union. Shared hypersimplices carry the union of both tag
/// sets, `h1`'s tags first.
pub fn merge(h1: &Hypernetwork, h2: &Hypernetwork) -> Result<Hypernetwork> {
    check_shared_identities(h1, h2)?;
    let vertices = h1
        .vertices()
        .iter()
        .chain(h2.vertices().iter().filter(|v| !h1.has_vertex(v)))
        .cloned()
        .collect();
    let relations = h1
        .relations()
        .iter()
        .chain(
            h2.relations()
                .iter()
                .filter(|r| h1.relation(r.id()).is_none()),
        )
        .cloned()
        .collect();
    let simplices = h1
        .simplices()
        .iter()
        .map(|s| match h2.simplex(s.id()) {
            Some(other) => s.with_tags(s.tags().iter().chain(other.tags()).cloned()),
            None => s.clone(),
        })
        .chain(
            h2.simplices()
                .iter()
                .filter(|s| !h1.has_simplex(s.id()))
                .cloned(),
        )
        .collect();
    build(HypernetworkParts {
        vertices,
        relations,
        simplices,
    })
}

/// Identity-keyed intersection. Shared hypersimplices carry the intersection
/// of both tag sets in `h1`'s order. Vertices survive when referenced by a
/// surviving hypersimplex or free-standing in both inputs.
pub fn meet(h1: &Hypernetwork, h2: &Hypernetwork) -> Result<Hypernetwork> {
    check_shared_identities(h1, h2)?;
    let simplices: Vec<Hypersimplex> = h1
        .simplices()
        .iter()
        .filter_map(|s| {
            h2.simplex(s.id())
                .map(|other| s.with_tags(s.tags().iter().filter(|t| other.carries(t)).cloned()))
        })
        .collect();
    let free_in_h2 = free_vertices(h2);
    let kept_free: HashSet<&Identifier> = free_vertices(h1)
        .intersection(&free_in_h2)
        .copied()
        .collect();
    let keep: HashSet<&Identifier> = simplices.iter().map(Hypersimplex::id).collect();
    let mut parts = h1.restricted_to(&keep, &kept_free);
    // Tags come from the intersection, not from h1.
    parts.simplices = simplices;
    build(parts)
}

/// Hypersimplices of `h1` whose identity is not a hypersimplex of `h2`.
///
/// A hypersimplex that contains a removed one is removed as well, since its
/// participant would no longer resolve. Vertices survive when referenced by
/// a surviving hypersimplex, or when free-standing in `h1` and not declared
/// in `h2`.
pub fn difference(h1: &Hypernetwork, h2: &Hypernetwork) -> Hypernetwork {
    let mut removed: HashSet<&Identifier> = h1
        .simplices()
        .iter()
        .map(Hypersimplex::id)
        .filter(|id| h2.has_simplex(id))
        .collect();
    // Declaration order is unrelated to containment order; iterate to a fixpoint.
    loop {
        let before = removed.len();
        for s in h1.simplices() {
            if !removed.contains(s.id())
                && s.participants().iter().any(|p| removed.contains(p.id()))
            {
                removed.insert(s.id());
            }
        }
        if removed.len() == before {
            break;
        }
    }
    let keep: HashSet<&Identifier> = h1
        .simplices()
        .iter()
        .map(Hypersimplex::id)
        .filter(|id| !removed.contains(id))
        .collect();
    let free: HashSet<&Identifier> = free_vertices(h1)
        .into_iter()
        .filter(|v| h2.lookup(v).is_none())
        .collect();
    build(h1.restricted_to(&keep, &free)).expect("difference of a valid hypernetwork is valid")
}

/// Removes the named elements, leaving anti-vertices in their place.
///
/// Hypersimplices named in `elements` are dropped; every remaining
/// occurrence of a named element becomes `Excluded`, so arity is unchanged.
/// Vertex declarations are kept. A dropped hypersimplex that is still
/// referenced is re-declared as a vertex so that its anti-vertex resolves.
pub fn prune<'a, I>(h: &Hypernetwork, elements: I) -> Result<Hypernetwork>
where
    I: IntoIterator<Item = &'a Identifier>,
{
    let mut targets: HashSet<&Identifier> = HashSet::new();
    for id in elements {
        if !h.has_element(id) {
            return Err(Error::Unresolved { id: id.clone() });
        }
        targets.insert(id);
    }
    if targets.is_empty() {
        return Ok(h.clone());
    }

    let simplices: Vec<Hypersimplex> = h
        .simplices()
        .iter()
        .filter(|s| !targets.contains(s.id()))
        .map(|s| {
            s.with_participants(
                s.participants()
                    .iter()
                    .map(|p| match p {
                        Participant::Present(x) if targets.contains(x) => {
                            Participant::Excluded(x.clone())
                        }
                        other => other.clone(),
                    })
                    .collect(),
            )
        })
        .collect();

    let still_referenced: HashSet<&Identifier> = simplices
        .iter()
        .flat_map(|s| s.participants().iter().map(Participant::id))
        .collect();
    let placeholders = h
        .simplices()
        .iter()
        .map(Hypersimplex::id)
        .filter(|id| targets.contains(id) && still_referenced.contains(id))
        .cloned();
    let vertices = h.vertices().iter().cloned().chain(placeholders).collect();

    build(HypernetworkParts {
        vertices,
        relations: h.relations().to_vec(),
        simplices,
    })
}

/// The sub-hypernetwork generated by downward closure from `seeds`, computed
/// inside `h` only.
pub fn split<'a, I>(h: &Hypernetwork, seeds: I) -> Result<Hypernetwork>
where
    I: IntoIterator<Item = &'a Identifier>,
{
    let closure = h.descendants(seeds)?;
    let keep: HashSet<&Identifier> = closure.iter().filter(|id| h.has_simplex(id)).collect();
    let vertices: HashSet<&Identifier> = closure.iter().filter(|id| h.has_vertex(id)).collect();
    build(h.restricted_to(&keep, &vertices))
}

/// Per-identifier tag sets, ignoring order. Handy for comparing operator
/// results up to declaration order.
pub fn tag_sets(h: &Hypernetwork) -> HashMap<Identifier, HashSet<Identifier>> {
    h.simplices()
        .iter()
        .map(|s| (s.id().clone(), s.tags().iter().cloned().collect()))
        .collect()
}
