use super::{IsoError, VertexMap};
use crate::digraph::vertex_coords;
use crate::field::{interpolate, FieldElement, FieldSpec, Poly};

/// Structure of an isomorphism `(x, y) -> (f(x, y), g(y))` between odd-order
/// monomial digraphs with `m1 != n1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GShape {
    /// Interpolating polynomial of the second coordinate, degree `<= q - 1`.
    pub g: Poly,
    /// Only odd-degree coefficients are nonzero (in particular `g(0) = 0`).
    pub odd_degree_only: bool,
    /// `g` permutes the field.
    pub is_permutation: bool,
    /// `(0, 0)` maps to `(0, 0)`.
    pub fixes_origin: bool,
    /// The column `x = 0` maps onto the column `x = 0`.
    pub preserves_zero_column: bool,
}

impl GShape {
    pub fn all_hold(&self) -> bool {
        self.odd_degree_only
            && self.is_permutation
            && self.fixes_origin
            && self.preserves_zero_column
    }
}

/// Recovers `g` from a vertex mapping and reports its shape. Fails when the
/// second image coordinate is not a function of `y` alone.
pub fn extract_g(mapping: &VertexMap, field: &FieldSpec) -> Result<GShape, IsoError> {
    let q = field.q();
    let n = (q * q) as usize;
    if mapping.len() != n {
        return Err(IsoError::DomainSize {
            expected: n,
            got: mapping.len(),
        });
    }
    let image = |x: u32, y: u32| vertex_coords(q, mapping.apply(x * q + y));

    let mut values = Vec::with_capacity(q as usize);
    for y in 0..q {
        let gy = image(0, y).1;
        if (1..q).any(|x| image(x, y).1 != gy) {
            return Err(IsoError::DependsOnFirstCoordinate { y });
        }
        values.push((FieldElement::from_index(y), gy));
    }

    let g = interpolate(field, &values);
    let odd_degree_only = g
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % 2 == 1 || c.is_zero());
    let mut hit = vec![false; q as usize];
    for &(_, gy) in &values {
        hit[gy.idx() as usize] = true;
    }
    let is_permutation = hit.iter().all(|&h| h);
    let fixes_origin = mapping.apply(0) == 0;
    let preserves_zero_column = (0..q).all(|y| image(0, y).0.is_zero());

    Ok(GShape {
        g,
        odd_degree_only,
        is_permutation,
        fixes_origin,
        preserves_zero_column,
    })
}
