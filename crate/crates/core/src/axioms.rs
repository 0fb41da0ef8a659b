//! Total validation of a hypernetwork against the structural axioms.
//!
//! | code        | checked here                                                   |
//! |-------------|----------------------------------------------------------------|
//! | `A1`        | duplicate identifiers, unresolved participant references       |
//! | `A2`        | anti-vertices that do not name a declared vertex               |
//! | `A3`        | exactly one kind per hypersimplex (enforced by the type)       |
//! | `A4`        | unknown relation symbols, arity mismatches                     |
//! | `A5`        | duplicate boundary tags                                        |
//! | `WELLFORMED`| containment cycles                                             |
//!
//! Validation never stops at the first defect.

use std::collections::{HashMap, HashSet};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::model::{Hypernetwork, HypernetworkParts, Identifier, Participant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
    Wellformed,
}

impl Axiom {
    pub fn code(self) -> &'static str {
        match self {
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::A4 => "A4",
            Axiom::A5 => "A5",
            Axiom::Wellformed => "WELLFORMED",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Machine-readable cause of a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Defect {
    Duplicate,
    Unresolved,
    NotAVertex,
    Arity,
    DuplicateTag,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub subject: Identifier,
    pub message: String,
    pub defect: Defect,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.axiom, self.subject, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// One `AXIOM<tab>subject<tab>message` line per violation.
    pub fn render(&self) -> String {
        self.violations.iter().map(|v| format!("{v}\n")).collect()
    }
}

pub fn validate(h: &Hypernetwork) -> ValidationReport {
    validate_parts(h.parts())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Namespace {
    Vertex,
    Relation,
    Simplex,
}

struct Collector {
    found: Vec<(usize, Violation)>,
    seen: HashSet<(Axiom, Identifier)>,
}

impl Collector {
    fn push(
        &mut self,
        anchor: usize,
        axiom: Axiom,
        subject: &Identifier,
        defect: Defect,
        message: String,
    ) {
        if self.seen.insert((axiom, subject.clone())) {
            self.found.push((
                anchor,
                Violation {
                    axiom,
                    subject: subject.clone(),
                    message,
                    defect,
                },
            ));
        }
    }
}

pub fn validate_parts(parts: &HypernetworkParts) -> ValidationReport {
    let mut out = Collector {
        found: Vec::new(),
        seen: HashSet::new(),
    };

    // Declaration positions run over vertices, then relations, then
    // hypersimplices; a name resolves to its first declaration.
    let declarations = parts
        .vertices
        .iter()
        .map(|v| (v, Namespace::Vertex))
        .chain(
            parts
                .relations
                .iter()
                .map(|r| (r.id(), Namespace::Relation)),
        )
        .chain(parts.simplices.iter().map(|s| (s.id(), Namespace::Simplex)));
    let mut resolved: HashMap<&Identifier, (usize, Namespace)> = HashMap::new();
    for (pos, (id, ns)) in declarations.enumerate() {
        if let Some(&(first, _)) = resolved.get(id) {
            out.push(
                first,
                Axiom::A1,
                id,
                Defect::Duplicate,
                format!("{id} is declared more than once"),
            );
        } else {
            resolved.insert(id, (pos, ns));
        }
    }

    let simplex_base = parts.vertices.len() + parts.relations.len();
    for (i, s) in parts.simplices.iter().enumerate() {
        let pos = simplex_base + i;
        let sid = s.id();

        match resolved.get(s.relation()) {
            Some(&(rpos, Namespace::Relation)) => {
                let relation = &parts.relations[rpos - parts.vertices.len()];
                if relation.arity() != s.participants().len() {
                    out.push(
                        pos,
                        Axiom::A4,
                        sid,
                        Defect::Arity,
                        format!(
                            "{sid} binds {} participants but {} has arity {}",
                            s.participants().len(),
                            relation.id(),
                            relation.arity()
                        ),
                    );
                }
            }
            _ => out.push(
                pos,
                Axiom::A4,
                s.relation(),
                Defect::Unresolved,
                format!("relation {} used by {sid} is not declared", s.relation()),
            ),
        }

        for p in s.participants() {
            match p {
                Participant::Present(x) => match resolved.get(x) {
                    Some((_, Namespace::Vertex | Namespace::Simplex)) => {}
                    _ => out.push(
                        pos,
                        Axiom::A1,
                        x,
                        Defect::Unresolved,
                        format!(
                            "participant {x} of {sid} is not a declared vertex or hypersimplex"
                        ),
                    ),
                },
                Participant::Excluded(x) => match resolved.get(x) {
                    Some((_, Namespace::Vertex)) => {}
                    Some(_) => out.push(
                        pos,
                        Axiom::A2,
                        x,
                        Defect::NotAVertex,
                        format!("anti-vertex !{x} in {sid} does not name a vertex"),
                    ),
                    None => out.push(
                        pos,
                        Axiom::A2,
                        x,
                        Defect::Unresolved,
                        format!("anti-vertex !{x} in {sid} is not declared"),
                    ),
                },
            }
        }

        let mut tags = HashSet::new();
        let dups: Vec<&str> = s
            .tags()
            .iter()
            .filter(|t| !tags.insert(*t))
            .map(|t| t.as_str())
            .collect();
        if !dups.is_empty() {
            out.push(
                pos,
                Axiom::A5,
                sid,
                Defect::DuplicateTag,
                format!("{sid} repeats boundary tags {}", dups.join(", ")),
            );
        }
    }

    for (pos, id) in cyclic_simplices(parts, &resolved, simplex_base) {
        out.push(
            pos,
            Axiom::Wellformed,
            id,
            Defect::Cycle,
            format!("{id} lies on a containment cycle"),
        );
    }

    out.found.sort_by_key(|(anchor, v)| (*anchor, v.axiom));
    ValidationReport {
        violations: out.found.into_iter().map(|(_, v)| v).collect(),
    }
}

/// Hypersimplices that can reach themselves through `Present` participants.
fn cyclic_simplices<'a>(
    parts: &'a HypernetworkParts,
    resolved: &HashMap<&Identifier, (usize, Namespace)>,
    simplex_base: usize,
) -> Vec<(usize, &'a Identifier)> {
    let mut graph = DiGraph::<usize, ()>::new();
    let mut node_of = HashMap::new();
    for (i, s) in parts.simplices.iter().enumerate() {
        if resolved.get(s.id()) == Some(&(simplex_base + i, Namespace::Simplex)) {
            node_of.insert(s.id(), graph.add_node(i));
        }
    }
    for s in &parts.simplices {
        let Some(&from) = node_of.get(s.id()) else {
            continue;
        };
        for p in s.participants() {
            if let Participant::Present(child) = p {
                if let Some(&to) = node_of.get(child) {
                    graph.update_edge(from, to, ());
                }
            }
        }
    }
    let mut cyclic: Vec<usize> = tarjan_scc(&graph)
        .into_iter()
        .filter(|scc| scc.len() > 1 || graph.contains_edge(scc[0], scc[0]))
        .flatten()
        .map(|n| graph[n])
        .collect();
    cyclic.sort_unstable();
    cyclic
        .into_iter()
        .map(|i| (simplex_base + i, parts.simplices[i].id()))
        .collect()
}
