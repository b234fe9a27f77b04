use crate::digraph::Digraph;

/// Refines colourings of several digraphs in lockstep until the partition is
/// equitable.
///
/// A vertex's signature is its colour plus the sorted multiset of
/// `(arc type, neighbour colour)` over all neighbours, where the arc type is
/// out-only, in-only, both ways, or a loop. New colours are ranks of these
/// signatures over all graphs together, so the final colouring is determined
/// by the isomorphism types of the coloured inputs. Returns `false` as soon
/// as some colour class has different sizes in two graphs.
pub fn refine_jointly(graphs: &[&Digraph], colors: &mut [Vec<u32>]) -> bool {
    assert_eq!(graphs.len(), colors.len());
    let mut class_count = count_classes(colors);
    let mut sigs: Vec<(Vec<u64>, usize, u32)> = Vec::new();
    loop {
        sigs.clear();
        for (gi, (g, col)) in graphs.iter().zip(colors.iter()).enumerate() {
            for v in g.vertices() {
                sigs.push((signature(g, col, v), gi, v));
            }
        }
        sigs.sort_unstable();

        let mut rank = 0u32;
        let mut per_graph = vec![0usize; graphs.len()];
        for i in 0..sigs.len() {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                if !per_graph.iter().all(|&c| c == per_graph[0]) {
                    return false;
                }
                per_graph.fill(0);
                rank += 1;
            }
            let (_, gi, v) = sigs[i];
            per_graph[gi] += 1;
            colors[gi][v as usize] = rank;
        }
        if !per_graph.iter().all(|&c| c == per_graph[0]) {
            return false;
        }
        let new_count = if sigs.is_empty() {
            0
        } else {
            rank as usize + 1
        };
        if new_count == class_count {
            return true;
        }
        class_count = new_count;
    }
}

const OUT_ONLY: u64 = 1;
const IN_ONLY: u64 = 2;
const MUTUAL: u64 = 3;
const LOOP: u64 = 4;

fn signature(g: &Digraph, col: &[u32], v: u32) -> Vec<u64> {
    let out = g.out_neighbors(v);
    let inn = g.in_neighbors(v);
    let mut sig = Vec::with_capacity(out.len() + inn.len() + 1);
    sig.push(u64::from(col[v as usize]));
    let tagged = |kind: u64, w: u32| (kind << 32) | u64::from(col[w as usize]);
    let (mut i, mut j) = (0, 0);
    while i < out.len() || j < inn.len() {
        let (kind, w) = match (out.get(i), inn.get(j)) {
            (Some(&a), Some(&b)) if a == b => {
                i += 1;
                j += 1;
                (if a == v { LOOP } else { MUTUAL }, a)
            }
            (Some(&a), Some(&b)) if a < b => {
                i += 1;
                (OUT_ONLY, a)
            }
            (Some(&a), None) => {
                i += 1;
                (OUT_ONLY, a)
            }
            (_, Some(&b)) => {
                j += 1;
                (IN_ONLY, b)
            }
            (None, None) => unreachable!(),
        };
        sig.push(tagged(kind, w));
    }
    sig[1..].sort_unstable();
    sig
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Stable colouring of a single digraph from the uniform colouring.
pub fn stable_coloring(g: &Digraph) -> Vec<u32> {
    let mut colors = [vec![0u32; g.vertex_count()]];
    refine_jointly(&[g], &mut colors);
    let [c] = colors;
    c
}

/// Sizes of the colour classes, ascending.
pub fn class_sizes(colors: &[u32]) -> Vec<usize> {
    let k = colors.iter().max().map_or(0, |&m| m as usize + 1);
    let mut sizes = vec![0; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes.sort_unstable();
    sizes
}
