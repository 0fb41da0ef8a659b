//! Boundary projection and reasoning over boundary-scoped views.
//!
//! A projection keeps the hypersimplices that carry a boundary tag together
//! with everything they contain (percolation), copied verbatim. Percolation
//! runs downward through `Present` participants only: never to siblings,
//! containers, or through anti-vertices.
//!
//! Scoped operators project each operand first and then apply the ordinary
//! operator. Results are new views; inputs are never touched.

use std::collections::HashSet;

use crate::digest::{structural_digest, Digest};
use crate::error::{Error, Result};
use crate::model::{Hypernetwork, IdSet, Identifier, View};
use crate::ops::{self, BinaryOp};

/// Identifiers visible under `boundary`: the tagged hypersimplices and their
/// descendants. An unused tag yields the empty set.
pub fn visible_set(h: &Hypernetwork, boundary: &Identifier) -> IdSet {
    let roots = h
        .simplices()
        .iter()
        .filter(|s| s.carries(boundary))
        .map(|s| s.id());
    h.descendants(roots)
        .expect("hypersimplex ids resolve in their own network")
}

pub fn project(h: &Hypernetwork, boundary: &Identifier) -> View {
    let visible = visible_set(h, boundary);
    let keep: HashSet<&Identifier> = visible.iter().filter(|id| h.has_simplex(id)).collect();
    let vertices: HashSet<&Identifier> = visible.iter().filter(|id| h.has_vertex(id)).collect();
    let content = Hypernetwork::new(h.restricted_to(&keep, &vertices))
        .expect("projection of a valid hypernetwork is valid");
    View::new(structural_digest(h), Some(boundary.clone()), content)
}

pub fn scoped_apply(
    op: BinaryOp,
    h1: &Hypernetwork,
    h2: &Hypernetwork,
    boundary: &Identifier,
) -> Result<View> {
    let left = project(h1, boundary);
    let right = project(h2, boundary);
    let content = op.apply(left.content(), right.content())?;
    Ok(View::new(
        Digest::combine(left.base_digest(), right.base_digest()),
        None,
        content,
    ))
}

/// Prunes inside the `boundary` view of `h`. Every element must be visible.
pub fn scoped_prune<'a, I>(h: &Hypernetwork, elements: I, boundary: &Identifier) -> Result<View>
where
    I: IntoIterator<Item = &'a Identifier>,
{
    let view = project(h, boundary);
    let content = ops::prune(view.content(), elements)?;
    Ok(View::new(*view.base_digest(), None, content))
}

/// Closure inside the `boundary` view of `h`. Every seed must be visible.
pub fn scoped_split<'a, I>(h: &Hypernetwork, seeds: I, boundary: &Identifier) -> Result<View>
where
    I: IntoIterator<Item = &'a Identifier>,
{
    let view = project(h, boundary);
    let content = ops::split(view.content(), seeds)?;
    Ok(View::new(*view.base_digest(), None, content))
}

fn same_base(v1: &View, v2: &View) -> Result<()> {
    if v1.base_digest() == v2.base_digest() {
        Ok(())
    } else {
        Err(Error::BaseMismatch {
            left: v1.base_digest().to_hex(),
            right: v2.base_digest().to_hex(),
        })
    }
}

/// Elements present in both views, taken verbatim from `v1`.
pub fn view_intersect(v1: &View, v2: &View) -> Result<View> {
    same_base(v1, v2)?;
    let (a, b) = (v1.content(), v2.content());
    let keep: HashSet<&Identifier> = a
        .simplices()
        .iter()
        .map(|s| s.id())
        .filter(|id| b.has_simplex(id))
        .collect();
    let vertices: HashSet<&Identifier> = a.vertices().iter().filter(|v| b.has_vertex(v)).collect();
    let content = Hypernetwork::new(a.restricted_to(&keep, &vertices))?;
    Ok(View::new(*v1.base_digest(), None, content))
}

/// Elements present in either view: `v1`'s, then those only in `v2`.
pub fn view_union(v1: &View, v2: &View) -> Result<View> {
    same_base(v1, v2)?;
    let content = ops::merge(v1.content(), v2.content())?;
    Ok(View::new(*v1.base_digest(), None, content))
}
