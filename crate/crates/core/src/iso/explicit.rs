use serde::Serialize;

use super::{IsoError, VertexMap};
use crate::digraph::{Digraph, MonomialDigraph, MonomialParams};
use crate::field::{inverse_mod, units_mod, FieldElement, FieldSpec};

/// An isomorphism `D(q; m2, n2) -> D(q; m1, n1)`, `(x, y) -> (x^k, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitIso {
    pub k: u32,
    /// From `D(q; m2, n2)` to `D(q; m1, n1)`.
    pub forward: VertexMap,
    /// From `D(q; m1, n1)` to `D(q; m2, n2)`, `(x, y) -> (x^(1/k), y)`.
    pub inverse: VertexMap,
}

impl ExplicitIso {
    /// Checks both maps against the built digraphs.
    pub fn verify(&self, d1: &Digraph, d2: &Digraph) -> Result<bool, IsoError> {
        Ok(super::verify_mapping(d2, d1, &self.forward)?
            && super::verify_mapping(d1, d2, &self.inverse)?)
    }
}

fn power_column_map(field: &FieldSpec, k: u32) -> VertexMap {
    let q = field.q();
    let images = field
        .elements()
        .flat_map(|x| {
            let xk = field.pow_pos(x, k);
            (0..q).map(move |y| xk.idx() * q + y)
        })
        .collect();
    VertexMap::new(images)
}

/// Smallest unit `k` mod `q - 1` with `k m1 = m2` and `k n1 = n2`, with the
/// induced maps. `None` when no such `k` exists.
pub fn explicit_iso(
    field: &FieldSpec,
    a: MonomialParams,
    b: MonomialParams,
) -> Option<ExplicitIso> {
    let q = field.q();
    if a.q != q || b.q != q {
        return None;
    }
    let order = q - 1;
    let k = units_mod(order).into_iter().find(|&k| {
        (u64::from(k) * u64::from(a.m)) % u64::from(order) == u64::from(b.m % order)
            && (u64::from(k) * u64::from(a.n)) % u64::from(order) == u64::from(b.n % order)
    })?;
    let k_inv = match inverse_mod(k, order)? {
        0 => order,
        i => i,
    };
    Some(ExplicitIso {
        k,
        forward: power_column_map(field, k),
        inverse: power_column_map(field, k_inv),
    })
}

/// One orbit of `(m, n) -> (k m, k n) mod (q - 1)` over units `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterClass {
    pub q: u32,
    /// Sorted; the first member is the canonical representative.
    pub members: Vec<(u32, u32)>,
}

impl ParameterClass {
    pub fn canonical_rep(&self) -> (u32, u32) {
        self.members[0]
    }

    pub fn rep_params(&self) -> MonomialParams {
        let (m, n) = self.canonical_rep();
        MonomialParams { q: self.q, m, n }
    }

    pub fn contains(&self, m: u32, n: u32) -> bool {
        self.members.binary_search(&(m, n)).is_ok()
    }
}

/// Partition of `[1, q-1]^2` into orbits, ordered by representative.
/// Residue `0` is written as `q - 1`.
pub fn conjugate_classes(q: u32) -> Vec<ParameterClass> {
    let order = q - 1;
    let units = units_mod(order);
    let lift = |x: u64| match (x % u64::from(order)) as u32 {
        0 => order,
        r => r,
    };
    let side = order as usize;
    let mut assigned = vec![false; side * side];
    let mut classes = Vec::new();
    for m in 1..=order {
        for n in 1..=order {
            let slot = (m as usize - 1) * side + (n as usize - 1);
            if assigned[slot] {
                continue;
            }
            let mut members: Vec<(u32, u32)> = units
                .iter()
                .map(|&k| {
                    (
                        lift(u64::from(k) * u64::from(m)),
                        lift(u64::from(k) * u64::from(n)),
                    )
                })
                .collect();
            members.sort_unstable();
            members.dedup();
            for &(a, b) in &members {
                assigned[(a as usize - 1) * side + (b as usize - 1)] = true;
            }
            classes.push(ParameterClass { q, members });
        }
    }
    classes.sort_by_key(|c| c.canonical_rep());
    classes
}

/// `psi_c : (x, y) -> (c x, c^(m+n) y)`, an automorphism of `D(q; m, n)`.
pub fn psi_automorphism(d: &MonomialDigraph, c: FieldElement) -> Result<VertexMap, IsoError> {
    if c.is_zero() {
        return Err(IsoError::ZeroScalar);
    }
    let field = d.field();
    let p = d.params();
    let scale = field.pow_pos(c, p.m + p.n);
    let images = d
        .graph()
        .vertices()
        .map(|v| {
            let (x, y) = d.coords(v);
            d.vertex_id(field.mul(c, x), field.mul(scale, y))
        })
        .collect();
    Ok(VertexMap::new(images))
}
