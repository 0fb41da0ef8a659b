#![allow(dead_code)]

//! Random valid hypernetworks and the algebraic laws checked over them.

use std::collections::{HashMap, HashSet};

use htscope::ops::{self, BinaryOp};
use htscope::text::{parse, serialize};
use htscope::{
    axioms, scope, Hypernetwork, Hypersimplex, Identifier, Kind, Participant, RelationSymbol,
};
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub const MAX_SIMPLICES: usize = 12;
pub const TAG_POOL: usize = 4;

pub fn id(s: &str) -> Identifier {
    Identifier::new(s).unwrap()
}

pub fn ids(list: &[&str]) -> Vec<Identifier> {
    list.iter().map(|s| id(s)).collect()
}

pub fn tag(k: u8) -> Identifier {
    id(&format!("b{k}"))
}

type SlotSpec = (Index, bool);
type SimplexSpec = (Vec<SlotSpec>, bool, Vec<u8>);

fn simplex_spec() -> impl Strategy<Value = SimplexSpec> {
    (
        prop::collection::vec((any::<Index>(), prop::bool::weighted(0.12)), 1..=4),
        any::<bool>(),
        prop::collection::vec(0u8..TAG_POOL as u8, 0..=TAG_POOL),
    )
}

/// Builds hypersimplices in containment order: the i-th may only contain
/// vertices and hypersimplices created before it, so containment is acyclic
/// whatever order they are later declared in.
fn build(
    vertex_count: usize,
    specs: Vec<SimplexSpec>,
) -> (Vec<Identifier>, Vec<RelationSymbol>, Vec<Hypersimplex>) {
    let vertices: Vec<Identifier> = (0..vertex_count).map(|i| id(&format!("v{i}"))).collect();
    let mut simplices = Vec::new();
    let mut arities = Vec::new();
    for (i, (slots, beta, tags)) in specs.into_iter().enumerate() {
        let participants: Vec<Participant> = slots
            .iter()
            .map(|(pick, excluded)| {
                let k = pick.index(vertex_count + i);
                match (k < vertex_count, *excluded) {
                    (true, false) => Participant::Present(vertices[k].clone()),
                    (true, true) => Participant::Excluded(vertices[k].clone()),
                    (false, false) => Participant::Present(id(&format!("s{}", k - vertex_count))),
                    (false, true) => Participant::Excluded(vertices[k % vertex_count].clone()),
                }
            })
            .collect();
        let arity = participants.len();
        if !arities.contains(&arity) {
            arities.push(arity);
        }
        let mut seen = HashSet::new();
        let tags = tags
            .into_iter()
            .filter(|t| seen.insert(*t))
            .map(tag)
            .collect();
        let kind = if beta { Kind::Beta } else { Kind::Alpha };
        simplices.push(
            Hypersimplex::new(
                id(&format!("s{i}")),
                participants,
                id(&format!("R{arity}")),
                kind,
                tags,
            )
            .unwrap(),
        );
    }
    arities.sort_unstable();
    let relations = arities
        .into_iter()
        .map(|n| RelationSymbol::positional(id(&format!("R{n}")), n).unwrap())
        .collect();
    (vertices, relations, simplices)
}

/// Valid hypernetworks with at most 12 hypersimplices and 4 boundary tags,
/// acyclic containment, occasional anti-vertices and free vertices, and
/// hypersimplices declared in shuffled order.
pub fn arb_hypernetwork() -> impl Strategy<Value = Hypernetwork> {
    (
        1usize..=8,
        prop::collection::vec(simplex_spec(), 0..=MAX_SIMPLICES),
    )
        .prop_map(|(n, specs)| build(n, specs))
        .prop_flat_map(|(v, r, s)| (Just(v), Just(r), Just(s).prop_shuffle()))
        .prop_map(|(v, r, s)| {
            Hypernetwork::from_declarations(v, r, s).expect("generator yields valid networks")
        })
}

/// Replacement tag lists for up to `MAX_SIMPLICES` hypersimplices.
pub fn arb_retagging() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(
        prop::collection::vec(0u8..TAG_POOL as u8, 0..=3),
        MAX_SIMPLICES,
    )
}

pub fn retag(h: &Hypernetwork, spec: &[Vec<u8>]) -> Hypernetwork {
    let mut i = 0;
    h.retagged(|_| {
        let tags = spec.get(i % spec.len().max(1)).cloned().unwrap_or_default();
        i += 1;
        tags.into_iter().map(tag).collect()
    })
}

pub fn pick(h: &Hypernetwork, picks: &[Index], simplices_only: bool) -> Vec<Identifier> {
    let pool: Vec<Identifier> = if simplices_only {
        h.simplices().iter().map(|s| s.id().clone()).collect()
    } else {
        h.element_ids().into_iter().collect()
    };
    if pool.is_empty() {
        return Vec::new();
    }
    picks
        .iter()
        .map(|p| pool[p.index(pool.len())].clone())
        .collect()
}

/// Sub-networks of one random base, each independently retagged: they agree
/// on every shared identity, so merge and meet never conflict.
pub fn arb_family(members: usize) -> impl Strategy<Value = (Hypernetwork, Vec<Hypernetwork>)> {
    (
        arb_hypernetwork(),
        prop::collection::vec(
            (
                prop::collection::vec(any::<Index>(), 0..=4),
                arb_retagging(),
            ),
            members,
        ),
    )
        .prop_map(|(base, specs)| {
            let family = specs
                .iter()
                .map(|(seeds, retagging)| {
                    let seeds = pick(&base, seeds, false);
                    retag(&ops::split(&base, &seeds).unwrap(), retagging)
                })
                .collect();
            (base, family)
        })
}

/// Pairs in which every hypersimplex carries `b0` and every vertex is
/// referenced by some hypersimplex, so nothing is invisible under `b0`.
pub fn arb_fully_tagged_pair() -> impl Strategy<Value = (Hypernetwork, Hypernetwork)> {
    (
        arb_hypernetwork(),
        prop::collection::vec(any::<Index>(), 1..=4),
        prop::collection::vec(any::<Index>(), 1..=4),
        arb_retagging(),
        arb_retagging(),
    )
        .prop_map(|(base, s1, s2, t1, t2)| {
            let member = |seeds: &[Index], tags: &[Vec<u8>]| {
                let seeds = pick(&base, seeds, true);
                let sub = retag(&ops::split(&base, &seeds).unwrap(), tags);
                sub.retagged(|s| {
                    std::iter::once(tag(0))
                        .chain(s.tags().iter().cloned())
                        .collect()
                })
            };
            (member(&s1, &t1), member(&s2, &t2))
        })
}

/// Draws `n` values from a strategy with a fixed seed.
pub fn sample<S: Strategy>(strategy: S, n: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..n)
        .map(|_| strategy.new_tree(&mut runner).unwrap().current())
        .collect()
}

pub type Law = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Tags in use plus one that no hypersimplex carries.
pub fn probe_tags(h: &Hypernetwork) -> Vec<Identifier> {
    let mut tags = h.tag_universe();
    tags.push(id("b_unused"));
    tags
}

pub fn id_set(h: &Hypernetwork) -> HashSet<Identifier> {
    h.element_ids().into_iter().collect()
}

pub fn tag_sets(h: &Hypernetwork) -> HashMap<Identifier, HashSet<Identifier>> {
    ops::tag_sets(h)
}

pub fn law_projection_preserves_axioms(h: &Hypernetwork) -> Law {
    for b in probe_tags(h) {
        let report = axioms::validate(scope::project(h, &b).content());
        ensure!(
            report.is_valid(),
            "project(h, {b}) invalid:\n{}",
            report.render()
        );
    }
    Ok(())
}

pub fn law_projection_filters_only(h: &Hypernetwork) -> Law {
    for b in probe_tags(h) {
        let view = scope::project(h, &b);
        let content = view.content();
        for s in content.simplices() {
            ensure!(
                h.simplex(s.id()) == Some(s),
                "{} differs from its base counterpart under {b}",
                s.id()
            );
        }
        for v in content.vertices() {
            ensure!(
                h.has_vertex(v),
                "vertex {v} appeared from nowhere under {b}"
            );
        }
        for r in content.relations() {
            ensure!(
                h.relation(r.id()) == Some(r),
                "relation {} differs under {b}",
                r.id()
            );
        }
        let again = scope::project(content, &b);
        ensure!(
            again.content() == content,
            "projection under {b} is not idempotent"
        );
    }
    Ok(())
}

pub fn law_round_trip(h: &Hypernetwork) -> Law {
    let text = serialize(h);
    let back = parse(&text).map_err(|e| format!("canonical output does not parse: {e}\n{text}"))?;
    ensure!(&back == h, "parse(serialize(h)) differs from h");
    ensure!(serialize(&back) == text, "serialize is not a fixed point");
    Ok(())
}

pub fn law_merge_commutative(a: &Hypernetwork, b: &Hypernetwork) -> Law {
    let ab = ops::merge(a, b).map_err(|e| e.to_string())?;
    let ba = ops::merge(b, a).map_err(|e| e.to_string())?;
    ensure!(id_set(&ab) == id_set(&ba), "merge identifier sets differ");
    ensure!(tag_sets(&ab) == tag_sets(&ba), "merge tag sets differ");
    Ok(())
}

pub fn law_merge_associative(a: &Hypernetwork, b: &Hypernetwork, c: &Hypernetwork) -> Law {
    let left =
        ops::merge(&ops::merge(a, b).map_err(|e| e.to_string())?, c).map_err(|e| e.to_string())?;
    let right =
        ops::merge(a, &ops::merge(b, c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(
        id_set(&left) == id_set(&right),
        "merge identifier sets differ by grouping"
    );
    ensure!(
        tag_sets(&left) == tag_sets(&right),
        "merge tag sets differ by grouping"
    );
    Ok(())
}

pub fn law_subsets(a: &Hypernetwork, b: &Hypernetwork) -> Law {
    let m = ops::meet(a, b).map_err(|e| e.to_string())?;
    ensure!(
        m.simplex_ids().is_subset(&a.simplex_ids()),
        "meet not within h1"
    );
    ensure!(
        m.simplex_ids().is_subset(&b.simplex_ids()),
        "meet not within h2"
    );
    ensure!(
        id_set(&m).is_subset(&id_set(a)) && id_set(&m).is_subset(&id_set(b)),
        "meet elements escape an input"
    );
    let d = ops::difference(a, b);
    ensure!(
        d.simplex_ids().is_subset(&a.simplex_ids()),
        "difference not within h1"
    );
    ensure!(
        d.simplex_ids().is_disjoint(&b.simplex_ids()),
        "difference keeps a hypersimplex of h2"
    );
    ensure!(
        id_set(&d).is_subset(&id_set(a)),
        "difference elements escape h1"
    );
    Ok(())
}

pub fn law_split_idempotent(h: &Hypernetwork, seeds: &[Identifier]) -> Law {
    let once = ops::split(h, seeds).map_err(|e| e.to_string())?;
    let twice = ops::split(&once, seeds).map_err(|e| e.to_string())?;
    ensure!(once == twice, "split is not idempotent for {seeds:?}");
    ensure!(
        id_set(&once).is_subset(&id_set(h)),
        "split escaped its region"
    );
    Ok(())
}

pub fn law_prune_preserves_arity(h: &Hypernetwork, targets: &[Identifier]) -> Law {
    let pruned = ops::prune(h, targets).map_err(|e| e.to_string())?;
    for s in pruned.simplices() {
        ensure!(!targets.contains(s.id()), "pruned {} survived", s.id());
        let before = h
            .simplex(s.id())
            .ok_or_else(|| format!("{} appeared", s.id()))?;
        ensure!(
            before.participants().len() == s.participants().len(),
            "arity of {} changed",
            s.id()
        );
        for (old, new) in before.participants().iter().zip(s.participants()) {
            ensure!(old.id() == new.id(), "slot of {} rebound", s.id());
            let expect_excluded = old.is_excluded() || targets.contains(old.id());
            ensure!(
                new.is_excluded() == expect_excluded,
                "slot {} of {} wrongly marked",
                old.id(),
                s.id()
            );
        }
        let rel = pruned.relation(s.relation()).ok_or("relation lost")?;
        ensure!(
            rel.arity() == s.participants().len(),
            "A4 broken on {}",
            s.id()
        );
    }
    Ok(())
}

fn strip(result: htscope::Result<Hypernetwork>) -> Result<Hypernetwork, String> {
    result.map(|h| h.without_tags()).map_err(|e| e.to_string())
}

pub fn law_tag_transparent(
    a: &Hypernetwork,
    b: &Hypernetwork,
    ra: &Hypernetwork,
    rb: &Hypernetwork,
    seeds: &[Identifier],
) -> Law {
    for op in BinaryOp::ALL {
        ensure!(
            strip(op.apply(a, b))? == strip(op.apply(ra, rb))?,
            "{op} depends on tags"
        );
    }
    ensure!(
        strip(ops::prune(a, seeds))? == strip(ops::prune(ra, seeds))?,
        "prune depends on tags"
    );
    ensure!(
        strip(ops::split(a, seeds))? == strip(ops::split(ra, seeds))?,
        "split depends on tags"
    );
    Ok(())
}

pub fn law_deterministic_and_pure(a: &Hypernetwork, b: &Hypernetwork, seeds: &[Identifier]) -> Law {
    let (before_a, before_b) = (serialize(a), serialize(b));
    let runs = |a: &Hypernetwork, b: &Hypernetwork| -> Result<Vec<Hypernetwork>, String> {
        let mut out = Vec::new();
        for op in BinaryOp::ALL {
            out.push(op.apply(a, b).map_err(|e| e.to_string())?);
        }
        out.push(ops::prune(a, seeds).map_err(|e| e.to_string())?);
        out.push(ops::split(a, seeds).map_err(|e| e.to_string())?);
        Ok(out)
    };
    let first = runs(a, b)?;
    let second = runs(a, b)?;
    ensure!(first == second, "operators are not deterministic");
    for (r1, r2) in first.iter().zip(&second) {
        ensure!(
            serialize(r1) == serialize(r2),
            "serializations differ between runs"
        );
        let report = axioms::validate(r1);
        ensure!(
            report.is_valid(),
            "operator result invalid:\n{}",
            report.render()
        );
    }
    ensure!(
        serialize(a) == before_a && serialize(b) == before_b,
        "an operator changed its input"
    );
    Ok(())
}

pub fn law_full_tag_coincidence(h1: &Hypernetwork, h2: &Hypernetwork, b: &Identifier) -> Law {
    for op in BinaryOp::ALL {
        let global = op.apply(h1, h2).map_err(|e| e.to_string())?;
        let projected = scope::project(&global, b);
        let scoped = scope::scoped_apply(op, h1, h2, b).map_err(|e| e.to_string())?;
        ensure!(
            projected.content() == scoped.content(),
            "{op}: project(op) differs from scoped op\n--- global\n{}--- scoped\n{}",
            serialize(projected.content()),
            serialize(scoped.content())
        );
    }
    Ok(())
}
