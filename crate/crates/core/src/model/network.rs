use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::axioms;
use crate::error::{Error, Result};

use super::{Hypersimplex, Identifier, Participant, RelationSymbol};

pub type IdSet = BTreeSet<Identifier>;

/// Unvalidated declarations of a hypernetwork.
///
/// This is the input to [`Hypernetwork::new`] and to
/// [`axioms::validate_parts`]; it may violate any invariant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HypernetworkParts {
    pub vertices: Vec<Identifier>,
    pub relations: Vec<RelationSymbol>,
    pub simplices: Vec<Hypersimplex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Vertex(usize),
    Relation(usize),
    Simplex(usize),
}

/// What an identifier names inside one hypernetwork.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Declaration<'a> {
    Vertex(&'a Identifier),
    Relation(&'a RelationSymbol),
    Simplex(&'a Hypersimplex),
}

/// A valid, immutable hypernetwork: declared vertices, relation symbols and
/// an ordered collection of hypersimplices.
///
/// Every value of this type satisfies the structural axioms; all operations
/// return new values. Equality is full and order-sensitive.
#[derive(Clone)]
pub struct Hypernetwork {
    parts: HypernetworkParts,
    index: HashMap<Identifier, Slot>,
}

impl Hypernetwork {
    pub fn new(parts: HypernetworkParts) -> Result<Self> {
        let report = axioms::validate_parts(&parts);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(Self::indexed(parts))
    }

    pub fn from_declarations(
        vertices: Vec<Identifier>,
        relations: Vec<RelationSymbol>,
        simplices: Vec<Hypersimplex>,
    ) -> Result<Self> {
        Self::new(HypernetworkParts {
            vertices,
            relations,
            simplices,
        })
    }

    pub fn empty() -> Self {
        Self::indexed(HypernetworkParts::default())
    }

    fn indexed(parts: HypernetworkParts) -> Self {
        let mut index = HashMap::with_capacity(
            parts.vertices.len() + parts.relations.len() + parts.simplices.len(),
        );
        for (i, v) in parts.vertices.iter().enumerate() {
            index.insert(v.clone(), Slot::Vertex(i));
        }
        for (i, r) in parts.relations.iter().enumerate() {
            index.insert(r.id().clone(), Slot::Relation(i));
        }
        for (i, s) in parts.simplices.iter().enumerate() {
            index.insert(s.id().clone(), Slot::Simplex(i));
        }
        Hypernetwork { parts, index }
    }

    pub fn vertices(&self) -> &[Identifier] {
        &self.parts.vertices
    }

    pub fn relations(&self) -> &[RelationSymbol] {
        &self.parts.relations
    }

    pub fn simplices(&self) -> &[Hypersimplex] {
        &self.parts.simplices
    }

    pub fn parts(&self) -> &HypernetworkParts {
        &self.parts
    }

    pub fn into_parts(self) -> HypernetworkParts {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn lookup(&self, id: impl AsRef<str>) -> Option<Declaration<'_>> {
        self.index.get(id.as_ref()).map(|slot| match *slot {
            Slot::Vertex(i) => Declaration::Vertex(&self.parts.vertices[i]),
            Slot::Relation(i) => Declaration::Relation(&self.parts.relations[i]),
            Slot::Simplex(i) => Declaration::Simplex(&self.parts.simplices[i]),
        })
    }

    pub fn simplex(&self, id: impl AsRef<str>) -> Option<&Hypersimplex> {
        match self.index.get(id.as_ref()) {
            Some(Slot::Simplex(i)) => Some(&self.parts.simplices[*i]),
            _ => None,
        }
    }

    pub fn relation(&self, id: impl AsRef<str>) -> Option<&RelationSymbol> {
        match self.index.get(id.as_ref()) {
            Some(Slot::Relation(i)) => Some(&self.parts.relations[*i]),
            _ => None,
        }
    }

    pub fn has_vertex(&self, id: impl AsRef<str>) -> bool {
        matches!(self.index.get(id.as_ref()), Some(Slot::Vertex(_)))
    }

    pub fn has_simplex(&self, id: impl AsRef<str>) -> bool {
        matches!(self.index.get(id.as_ref()), Some(Slot::Simplex(_)))
    }

    /// True for vertices and hypersimplices: the things a participant can name.
    pub fn has_element(&self, id: impl AsRef<str>) -> bool {
        matches!(
            self.index.get(id.as_ref()),
            Some(Slot::Vertex(_) | Slot::Simplex(_))
        )
    }

    pub fn simplex_ids(&self) -> IdSet {
        self.parts
            .simplices
            .iter()
            .map(|s| s.id().clone())
            .collect()
    }

    /// Vertex and hypersimplex identifiers.
    pub fn element_ids(&self) -> IdSet {
        self.parts
            .vertices
            .iter()
            .chain(self.parts.simplices.iter().map(|s| s.id()))
            .cloned()
            .collect()
    }

    /// The boundary tags in use, in order of first appearance.
    pub fn tag_universe(&self) -> Vec<Identifier> {
        let mut seen = HashSet::new();
        self.parts
            .simplices
            .iter()
            .flat_map(|s| s.tags())
            .filter(|t| seen.insert(*t))
            .cloned()
            .collect()
    }

    /// Downward containment closure of `roots`.
    ///
    /// Follows `Present` participants only; anti-vertices are not traversed.
    pub fn descendants<'a, I>(&self, roots: I) -> Result<IdSet>
    where
        I: IntoIterator<Item = &'a Identifier>,
    {
        let mut closed = IdSet::new();
        let mut stack = Vec::new();
        for root in roots {
            if !self.has_element(root) {
                return Err(Error::Unresolved { id: root.clone() });
            }
            stack.push(root.clone());
        }
        while let Some(id) = stack.pop() {
            if !closed.insert(id.clone()) {
                continue;
            }
            if let Some(simplex) = self.simplex(&id) {
                for p in simplex.participants() {
                    if let Participant::Present(child) = p {
                        if !closed.contains(child) {
                            stack.push(child.clone());
                        }
                    }
                }
            }
        }
        Ok(closed)
    }

    /// Same declarations with the tags of every hypersimplex replaced.
    pub fn retagged<F>(&self, mut tags_for: F) -> Hypernetwork
    where
        F: FnMut(&Hypersimplex) -> Vec<Identifier>,
    {
        let simplices = self
            .parts
            .simplices
            .iter()
            .map(|s| s.with_tags(tags_for(s)))
            .collect();
        Self::indexed(HypernetworkParts {
            simplices,
            ..self.parts.clone()
        })
    }

    pub fn without_tags(&self) -> Hypernetwork {
        self.retagged(|_| Vec::new())
    }

    /// Keeps the hypersimplices in `keep` (plus the extra vertices), together
    /// with every vertex and relation they reference, in this network's order.
    pub(crate) fn restricted_to(
        &self,
        keep: &HashSet<&Identifier>,
        extra_vertices: &HashSet<&Identifier>,
    ) -> HypernetworkParts {
        let simplices: Vec<Hypersimplex> = self
            .parts
            .simplices
            .iter()
            .filter(|s| keep.contains(s.id()))
            .cloned()
            .collect();
        let mut referenced: HashSet<&Identifier> = extra_vertices.clone();
        let mut relations_used: HashSet<&Identifier> = HashSet::new();
        for s in &simplices {
            relations_used.insert(s.relation());
            referenced.extend(s.participants().iter().map(Participant::id));
        }
        HypernetworkParts {
            vertices: self
                .parts
                .vertices
                .iter()
                .filter(|v| referenced.contains(v))
                .cloned()
                .collect(),
            relations: self
                .parts
                .relations
                .iter()
                .filter(|r| relations_used.contains(r.id()))
                .cloned()
                .collect(),
            simplices,
        }
    }
}

impl PartialEq for Hypernetwork {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Hypernetwork {}

impl Hash for Hypernetwork {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.vertices.hash(state);
        self.parts.relations.hash(state);
        self.parts.simplices.hash(state);
    }
}

impl fmt::Debug for Hypernetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypernetwork")
            .field("vertices", &self.parts.vertices)
            .field("relations", &self.parts.relations)
            .field("simplices", &self.parts.simplices)
            .finish()
    }
}

impl Default for Hypernetwork {
    fn default() -> Self {
        Self::empty()
    }
}

impl TryFrom<HypernetworkParts> for Hypernetwork {
    type Error = Error;

    fn try_from(parts: HypernetworkParts) -> Result<Self> {
        Hypernetwork::new(parts)
    }
}
