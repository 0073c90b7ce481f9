//! Isomorphism-free enumeration of connected graphs by canonical
//! augmentation: a graph on k+1 vertices is accepted from its parent on
//! k vertices only when the deleted new vertex matches the canonical
//! deletion of its class, so every class is generated exactly once and
//! the augmentation tree can be explored from any subtree root.

use std::collections::HashSet;

use crate::canon::{canonical_form, canonicalize};
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};

/// Largest order the enumerator accepts.
pub const ENUM_CAP: usize = 10;

/// Streams one representative per isomorphism class of connected graphs
/// on `n` vertices. The sink returns `false` to stop early. Returns the
/// number of graphs emitted.
pub fn enumerate_connected(n: usize, sink: &mut dyn FnMut(&Graph) -> bool) -> Result<u64> {
    if n == 0 || n > ENUM_CAP {
        return Err(Error::EnumerationRange { n, cap: ENUM_CAP });
    }
    let root = Graph::empty(1)?;
    enumerate_subtree(&root, n, sink)
}

/// Explores the augmentation subtree rooted at `root` (a connected
/// graph), emitting the classes of order `target` it generates. The
/// subtrees of distinct roots at one level partition the classes at
/// every deeper level, which is what the parallel harness relies on.
pub fn enumerate_subtree(
    root: &Graph,
    target: usize,
    sink: &mut dyn FnMut(&Graph) -> bool,
) -> Result<u64> {
    if target == 0 || target > ENUM_CAP {
        return Err(Error::EnumerationRange { n: target, cap: ENUM_CAP });
    }
    debug_assert!(root.is_connected());
    if root.n() > target {
        return Ok(0);
    }
    let root_form = canonical_form(root)?;
    let mut count = 0u64;
    expand(root, &root_form, target, sink, &mut count)?;
    Ok(count)
}

/// All connected graphs on `n` vertices, collected.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    enumerate_connected(n, &mut |g| {
        out.push(g.clone());
        true
    })?;
    Ok(out)
}

fn expand(
    g: &Graph,
    g_form: &[u8],
    target: usize,
    sink: &mut dyn FnMut(&Graph) -> bool,
    count: &mut u64,
) -> Result<bool> {
    let k = g.n();
    if k == target {
        *count += 1;
        return Ok(sink(g));
    }

    // children seen at this node, keyed by canonical code
    let mut seen: HashSet<u128> = HashSet::new();
    for mask in 1..=full_mask(k) {
        let child = g.with_new_vertex(mask)?;
        let canon = canonicalize(&child)?;
        if !seen.insert(code_of(&canon.form)) {
            continue;
        }
        // canonical deletion: the highest position whose removal keeps
        // the canonically labeled child connected
        let pos = canonical_deletion_position(&canon.graph);
        // the new vertex x sits last, so child minus x is exactly g;
        // accept iff deleting the canonical position lands in the same
        // class (degree check first, it rejects most mismatches cheaply)
        if canon.graph.degree(pos) != mask.count_ones() as usize {
            continue;
        }
        let parent_of_child = canonical_form(&canon.graph.delete_vertex(pos)?)?;
        if parent_of_child.as_slice() != g_form {
            continue;
        }
        if !expand(&child, &canon.form, target, sink, count)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn code_of(form: &[u8]) -> u128 {
    u128::from_be_bytes(form[1..17].try_into().expect("canonical form carries 16 code bytes"))
}

/// Highest vertex position of a connected graph whose deletion keeps it
/// connected. Well-defined for every connected graph on >= 2 vertices.
fn canonical_deletion_position(g: &Graph) -> usize {
    let n = g.n();
    debug_assert!(n >= 2);
    for pos in (0..n).rev() {
        let remaining: Vec<usize> = (0..n).filter(|&v| v != pos).collect();
        let sub = g.induced_subgraph(&remaining).expect("nonempty vertex set");
        if sub.is_connected() {
            return pos;
        }
    }
    unreachable!("every connected graph has a non-cut vertex");
}
