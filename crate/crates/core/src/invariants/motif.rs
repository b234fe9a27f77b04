use std::str::FromStr;

use super::InvariantError;
use crate::digraph::Digraph;

/// Small test digraphs counted as non-induced copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MotifSpec {
    /// Two distinct looped vertices `a`, `b` with the arc `a -> b`.
    /// Counted as ordered pairs `(a, b)`.
    K,
    /// Tails `u1 < u2`, heads `w1 < w2`, all four arcs `ui -> wj` present.
    /// The tail and head sets may share vertices.
    DirectedK22,
}

impl MotifSpec {
    pub fn name(self) -> &'static str {
        match self {
            MotifSpec::K => "K",
            MotifSpec::DirectedK22 => "directed-K22",
        }
    }
}

impl FromStr for MotifSpec {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "K" | "k" => Ok(MotifSpec::K),
            "directed-K22" | "k22" | "K22" => Ok(MotifSpec::DirectedK22),
            other => Err(InvariantError::UnknownMotif(other.to_string())),
        }
    }
}

pub fn motif_census(d: &Digraph, spec: MotifSpec) -> u64 {
    match spec {
        MotifSpec::K => k_census(d),
        MotifSpec::DirectedK22 => k22_census(d),
    }
}

fn k_census(d: &Digraph) -> u64 {
    let looped: Vec<bool> = d.vertices().map(|v| d.has_arc(v, v)).collect();
    d.vertices()
        .filter(|&a| looped[a as usize])
        .map(|a| {
            d.out_neighbors(a)
                .iter()
                .filter(|&&b| b != a && looped[b as usize])
                .count() as u64
        })
        .sum()
}

/// For each tail `u1`, tallies common out-neighbours with every `u2 > u1`
/// by walking `u1 -> w <- u2`, then adds `C(common, 2)` per pair.
fn k22_census(d: &Digraph) -> u64 {
    let n = d.vertex_count();
    let mut common = vec![0u32; n];
    let mut touched = Vec::new();
    let mut total = 0u64;
    for u1 in d.vertices() {
        for &w in d.out_neighbors(u1) {
            for &u2 in d.in_neighbors(w) {
                if u2 > u1 {
                    if common[u2 as usize] == 0 {
                        touched.push(u2);
                    }
                    common[u2 as usize] += 1;
                }
            }
        }
        for &u2 in &touched {
            let c = u64::from(common[u2 as usize]);
            total += c * (c.saturating_sub(1)) / 2;
            common[u2 as usize] = 0;
        }
        touched.clear();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct 4-tuple enumeration.
    fn k22_oracle(d: &Digraph) -> u64 {
        let n = d.vertex_count() as u32;
        let mut c = 0;
        for u1 in 0..n {
            for u2 in u1 + 1..n {
                for w1 in 0..n {
                    for w2 in w1 + 1..n {
                        if d.has_arc(u1, w1)
                            && d.has_arc(u1, w2)
                            && d.has_arc(u2, w1)
                            && d.has_arc(u2, w2)
                        {
                            c += 1;
                        }
                    }
                }
            }
        }
        c
    }

    #[test]
    fn k22_matches_oracle_on_small_monomials() {
        use crate::digraph::{MonomialDigraph, MonomialParams};
        for (q, m, n) in [(3, 1, 2), (3, 2, 2), (4, 1, 3), (5, 2, 4)] {
            let d = MonomialDigraph::from_params(MonomialParams::new(q, m, n).unwrap()).unwrap();
            assert_eq!(
                k22_census(d.graph()),
                k22_oracle(d.graph()),
                "q={q} m={m} n={n}"
            );
        }
    }

    #[test]
    fn k_census_counts_each_orientation() {
        // loops on 0 and 1, arcs both ways: two copies of K
        let d = Digraph::from_arcs(3, [(0, 0), (1, 1), (0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(k_census(&d), 2);
        let d = Digraph::from_arcs(2, [(0, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(k_census(&d), 1);
    }

    #[test]
    fn complete_bipartite_k22() {
        let d = Digraph::from_arcs(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(motif_census(&d, MotifSpec::DirectedK22), 1);
        assert!("triangle".parse::<MotifSpec>().is_err());
    }
}
