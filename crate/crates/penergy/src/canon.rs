//! Canonical labeling for small graphs: neighborhood-refinement-guided
//! backtracking over vertex orderings, selecting the lexicographically
//! maximal upper-triangle adjacency bit string. Discovered automorphisms
//! prune equivalent branches, which keeps highly symmetric graphs (e.g.
//! complete graphs) tractable.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Order cap for the exhaustive backtracking path.
pub const CANON_CAP: usize = 16;

/// Canonical form plus the canonically relabeled graph.
#[derive(Clone, Debug)]
pub struct CanonicalGraph {
    /// Order byte followed by the packed canonical code; equal byte
    /// strings exactly characterize isomorphic graphs.
    pub form: Vec<u8>,
    /// The graph relabeled so position order realizes the canonical code.
    pub graph: Graph,
}

/// Canonical byte string of `g`; identical strings iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonicalize(g)?.form)
}

/// Canonical form and canonically labeled copy.
pub fn canonicalize(g: &Graph) -> Result<CanonicalGraph> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::CanonOrderCap { n, cap: CANON_CAP });
    }
    let mut search = Search::new(g);
    search.run();
    let code = search.best_code;
    let perm = &search.best_perm[..n];

    let mut form = Vec::with_capacity(17);
    form.push(n as u8);
    form.extend_from_slice(&code.to_be_bytes());

    // position i of the canonical graph hosts original vertex perm[i]
    let mut canon = Graph::empty(n)?;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(perm[i] as usize, perm[j] as usize) {
                canon.add_edge(i, j)?;
            }
        }
    }
    Ok(CanonicalGraph { form, graph: canon })
}

/// Total code bits for order n.
#[inline]
fn code_bits(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cmp {
    /// Prefix equal to the incumbent best so far.
    Equal,
    /// Prefix already strictly above the incumbent (or no incumbent).
    Above,
}

struct Search {
    n: usize,
    adj: [u16; CANON_CAP],
    priority: [u32; CANON_CAP],
    total_bits: u32,
    best_code: u128,
    best_perm: [u8; CANON_CAP],
    has_best: bool,
    best_version: u64,
    placed: [u8; CANON_CAP],
    autos: Vec<[u8; CANON_CAP]>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = [0u16; CANON_CAP];
        for v in 0..n {
            adj[v] = g.neighbors(v) as u16;
        }
        Search {
            n,
            adj,
            priority: refinement_priorities(n, &adj),
            total_bits: code_bits(n),
            best_code: 0,
            best_perm: [0; CANON_CAP],
            has_best: false,
            best_version: 0,
            placed: [0; CANON_CAP],
            autos: Vec::new(),
        }
    }

    fn run(&mut self) {
        if self.n == 1 {
            self.best_perm[0] = 0;
            self.has_best = true;
            return;
        }
        self.descend(0, 0, 0, Cmp::Above);
        debug_assert!(self.has_best);
    }

    /// Extends the partial ordering at position `level`, having already
    /// emitted `bits_filled` code bits into `code`.
    fn descend(&mut self, level: usize, bits_filled: u32, code: u128, cmp: Cmp) {
        let n = self.n;
        if level == n {
            if cmp == Cmp::Above {
                self.best_code = code;
                self.best_perm = self.placed;
                self.has_best = true;
                self.best_version += 1;
            } else {
                // equal code: placed composed with best is an automorphism
                let mut auto = [0u8; CANON_CAP];
                for k in 0..n {
                    auto[self.placed[k] as usize] = self.best_perm[k];
                }
                self.autos.push(auto);
            }
            return;
        }

        let used: u16 = self.placed[..level].iter().fold(0, |m, &v| m | 1 << v);
        // candidate = (segment bits against the placed prefix, vertex)
        let mut cands: Vec<(u16, u8)> = (0..n as u8)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| {
                let mut seg = 0u16;
                for k in 0..level {
                    seg = seg << 1 | (self.adj[v as usize] >> self.placed[k] & 1);
                }
                (seg, v)
            })
            .collect();
        // try large segments first; refinement priority breaks ties
        cands.sort_by(|a, b| {
            b.0.cmp(&a.0)
                .then_with(|| self.priority[b.1 as usize].cmp(&self.priority[a.1 as usize]))
                .then_with(|| a.1.cmp(&b.1))
        });

        let mut cmp = cmp;
        let mut version = self.best_version;
        let mut tried: u16 = 0;
        for (seg, v) in cands {
            if self.best_version != version {
                // a descendant replaced the incumbent; our prefix is a
                // prefix of the new best, so we are back to Equal
                version = self.best_version;
                cmp = Cmp::Equal;
            }
            let child_cmp = match cmp {
                Cmp::Above => Cmp::Above,
                Cmp::Equal => {
                    let shift = self.total_bits - bits_filled - level as u32;
                    let best_seg = (self.best_code >> shift) as u16 & ((1 << level) - 1);
                    match seg.cmp(&best_seg) {
                        std::cmp::Ordering::Less => break, // sorted: the rest are smaller too
                        std::cmp::Ordering::Greater => Cmp::Above,
                        std::cmp::Ordering::Equal => Cmp::Equal,
                    }
                }
            };
            if self.is_pruned_by_automorphism(level, v, tried) {
                tried |= 1 << v;
                continue;
            }
            tried |= 1 << v;
            self.placed[level] = v;
            let child_code =
                code | (seg as u128) << (self.total_bits - bits_filled - level as u32);
            self.descend(level + 1, bits_filled + level as u32, child_code, child_cmp);
        }
    }

    /// True when a discovered automorphism fixes the placed prefix
    /// pointwise and maps `v` onto an already-tried candidate, making
    /// this branch a mirror of an explored one.
    fn is_pruned_by_automorphism(&self, level: usize, v: u8, tried: u16) -> bool {
        if tried == 0 {
            return false;
        }
        'outer: for auto in &self.autos {
            for k in 0..level {
                let p = self.placed[k];
                if auto[p as usize] != p {
                    continue 'outer;
                }
            }
            if tried >> auto[v as usize] & 1 == 1 {
                return true;
            }
        }
        false
    }
}

/// Iterated degree/neighborhood color refinement; returns a rank per
/// vertex used only to order the backtracking, never to restrict it.
fn refinement_priorities(n: usize, adj: &[u16; CANON_CAP]) -> [u32; CANON_CAP] {
    let mut colors = [0u32; CANON_CAP];
    for v in 0..n {
        colors[v] = adj[v].count_ones();
    }
    for _ in 0..3 {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| colors[u])
                    .collect();
                nbr.sort_unstable();
                (colors[v], nbr, v)
            })
            .collect();
        sigs.sort();
        let mut next = [0u32; CANON_CAP];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}
