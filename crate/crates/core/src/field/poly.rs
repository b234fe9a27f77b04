use super::{FieldElement, FieldSpec};

/// Reduction-free arithmetic on digit-encoded elements of GF(p)[X]/(modulus).
/// Used only while building the log tables.
pub(super) struct DigitArith<'a> {
    p: u32,
    e: usize,
    modulus: &'a [u32],
}

impl<'a> DigitArith<'a> {
    pub(super) fn new(p: u32, e: usize, modulus: &'a [u32]) -> Self {
        DigitArith { p, e, modulus }
    }

    fn to_digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub(super) fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&s)
    }

    pub(super) fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32;
        }
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let mut prod = vec![0u64; 2 * self.e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] += u64::from(x) * u64::from(y);
            }
        }
        let p = u64::from(self.p);
        let mut prod: Vec<u32> = prod.into_iter().map(|c| (c % p) as u32).collect();
        reduce_in_place(&mut prod, self.modulus, self.p);
        prod.resize(self.e, 0);
        self.pack_digits(&prod)
    }

    /// Order of `g` in the multiplicative group; `0` for `g = 0`.
    pub(super) fn multiplicative_order(&self, g: u32) -> u32 {
        if g == 0 {
            return 0;
        }
        let mut cur = g;
        let mut k = 1;
        while cur != 1 {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }
}

/// Reduces `a` modulo the monic polynomial `m` over GF(p), leaving the
/// remainder in the low `deg m` coefficients (higher entries zeroed).
fn reduce_in_place(a: &mut [u32], m: &[u32], p: u32) {
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], 1);
    for i in (dm..a.len()).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        for (j, &mj) in m.iter().enumerate() {
            let k = i - dm + j;
            a[k] = (a[k] + (p - c) * mj % p) % p;
        }
        debug_assert_eq!(a[i], 0);
    }
}

fn divides(d: &[u32], a: &[u32], p: u32) -> bool {
    let mut r = a.to_vec();
    reduce_in_place(&mut r, d, p);
    r.iter().all(|&c| c == 0)
}

fn monic_from_index(idx: u32, deg: usize, p: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(deg + 1);
    let mut x = idx;
    for _ in 0..deg {
        v.push(x % p);
        x /= p;
    }
    v.push(1);
    v
}

/// Irreducible iff no monic polynomial of degree `1..=deg/2` divides it.
pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| (0..p.pow(d as u32)).all(|i| !divides(&monic_from_index(i, d, p), f, p)))
}

/// Smallest monic irreducible of degree `e` over GF(p), comparing
/// coefficients from `X^(e-1)` down to the constant term.
pub(super) fn smallest_irreducible(p: u32, e: usize) -> Vec<u32> {
    // index digits are low-first, so ascending index order is
    // lexicographic order with the X^(e-1) coefficient most significant
    (0..p.pow(e as u32))
        .map(|i| monic_from_index(i, e, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Univariate polynomial over a [`FieldSpec`], coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| {
                field.add(field.mul(acc, x), c)
            })
    }
}

/// Lagrange interpolation through points with distinct abscissae.
///
/// Builds `M(X) = prod (X - x_j)` once and obtains each basis numerator by
/// synthetic division, so the cost is quadratic in the number of points.
pub fn interpolate(field: &FieldSpec, points: &[(FieldElement, FieldElement)]) -> Poly {
    let n = points.len();
    if n == 0 {
        return Poly::new(Vec::new());
    }
    let mut master = vec![FieldElement::ONE];
    for &(xj, _) in points {
        let mut next = vec![FieldElement::ZERO; master.len() + 1];
        let neg = field.neg(xj);
        for (i, &c) in master.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg));
        }
        master = next;
    }

    let mut result = vec![FieldElement::ZERO; n];
    let mut quotient = vec![FieldElement::ZERO; n];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // master / (X - xi), highest coefficient first
        let mut carry = FieldElement::ZERO;
        for k in (0..n).rev() {
            carry = field.add(master[k + 1], field.mul(carry, xi));
            quotient[k] = carry;
        }
        let denom = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(FieldElement::ONE, |acc, (_, &(xj, _))| {
                field.mul(acc, field.sub(xi, xj))
            });
        let scale = field.mul(
            yi,
            field
                .inv(denom)
                .expect("interpolation abscissae must be distinct"),
        );
        for (r, &c) in result.iter_mut().zip(&quotient) {
            *r = field.add(*r, field.mul(c, scale));
        }
    }
    Poly::new(result)
}
