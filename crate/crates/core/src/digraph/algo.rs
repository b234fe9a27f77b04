use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use super::{Digraph, GraphError, VertexId};

/// Default cap on path-extension steps for [`count_cycles_by_length`].
pub const DEFAULT_CYCLE_BUDGET: u64 = 100_000_000;

const MAX_CYCLE_VERTICES: usize = 1 << 14;
const MAX_CYCLE_LENGTH: usize = 32;

/// Strong components, each sorted, listed by smallest member.
///
/// Iterative Tarjan; recursion depth would otherwise reach `|V|`.
pub fn strong_components(d: &Digraph) -> Vec<Vec<VertexId>> {
    const UNSEEN: u32 = u32::MAX;
    let n = d.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    let mut next_index = 0u32;
    let mut components = Vec::new();
    let mut call: Vec<(VertexId, usize)> = Vec::new();

    for root in d.vertices() {
        if index[root as usize] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let out = d.out_neighbors(v);
            if *pos < out.len() {
                let w = out[*pos];
                *pos += 1;
                if index[w as usize] == UNSEEN {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
            }
            if low[v as usize] == index[v as usize] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w as usize] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components.sort_unstable_by_key(|c| c[0]);
    components
}

/// A path length, or unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(k) => write!(f, "{k}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(k) => s.serialize_u32(*k),
            Distance::Infinite => s.serialize_none(),
        }
    }
}

fn bfs(d: &Digraph, src: VertexId, dist: &mut [u32], queue: &mut VecDeque<VertexId>) {
    dist.fill(u32::MAX);
    dist[src as usize] = 0;
    queue.clear();
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &w in d.out_neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Maximum over ordered pairs of the shortest-path distance.
///
/// With `restrict_to_component`, only pairs inside a common strong component
/// are considered, so the result is the largest component diameter.
pub fn diameter(d: &Digraph, restrict_to_component: bool) -> Distance {
    let n = d.vertex_count();
    let comp_of = if restrict_to_component {
        let mut c = vec![0usize; n];
        for (i, comp) in strong_components(d).iter().enumerate() {
            for &v in comp {
                c[v as usize] = i;
            }
        }
        Some(c)
    } else {
        None
    };
    let mut dist = vec![0u32; n];
    let mut queue = VecDeque::new();
    let mut best = 0u32;
    for src in d.vertices() {
        bfs(d, src, &mut dist, &mut queue);
        for (v, &dv) in dist.iter().enumerate() {
            if let Some(c) = &comp_of {
                if c[v] != c[src as usize] {
                    continue;
                }
            }
            if dv == u32::MAX {
                return Distance::Infinite;
            }
            best = best.max(dv);
        }
    }
    Distance::Finite(best)
}

/// Number of directed simple cycles of each length `1..=max_len`.
///
/// Cycles are vertex sequences up to rotation; a cycle and its reverse are
/// different cycles. Each cycle is enumerated once from its smallest vertex.
/// `budget` bounds the number of path extensions.
pub fn count_cycles_by_length(
    d: &Digraph,
    max_len: usize,
    budget: u64,
) -> Result<Vec<u64>, GraphError> {
    let n = d.vertex_count();
    if max_len == 0 || max_len > MAX_CYCLE_LENGTH || n > MAX_CYCLE_VERTICES {
        return Err(GraphError::TooLarge {
            vertices: n,
            max_len,
        });
    }
    let mut counts = vec![0u64; max_len];
    let mut on_path = vec![false; n];
    let mut steps = 0u64;
    let mut call: Vec<(VertexId, usize)> = Vec::with_capacity(max_len);

    for start in d.vertices() {
        on_path[start as usize] = true;
        call.push((start, 0));
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let out = d.out_neighbors(v);
            if *pos == out.len() {
                on_path[v as usize] = false;
                call.pop();
                continue;
            }
            let w = out[*pos];
            *pos += 1;
            if w < start {
                continue;
            }
            let len = call.len();
            if w == start {
                counts[len - 1] += 1;
                continue;
            }
            if on_path[w as usize] || len == max_len {
                continue;
            }
            steps += 1;
            if steps > budget {
                return Err(GraphError::BudgetExceeded(budget));
            }
            on_path[w as usize] = true;
            call.push((w, 0));
        }
    }
    Ok(counts)
}
