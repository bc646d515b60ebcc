//! Signature descriptors for Cl(d,1), d = 1, 2, 3.
//!
//! Generator `e0` squares to -1 and `e1..ed` square to +1. Basis blades are
//! stored in a fixed per-space order (grade first, then the coordinate order
//! used for points, lines and planes), and every basis blade carries its own
//! orientation: `e20` is a basis blade in its own right, equal to `-e0 e2`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::oracle::MatrixRep;

/// Largest basis size handled (2^4 for Cl(3,1)).
pub const MAX_BLADES: usize = 16;

const H1_BASIS: [&str; 4] = ["1", "e0", "e1", "e01"];
const H2_BASIS: [&str; 8] = ["1", "e0", "e1", "e2", "e12", "e20", "e01", "e012"];
const H3_BASIS: [&str; 16] = [
    "1", "e0", "e1", "e2", "e3", "e10", "e20", "e30", "e23", "e31", "e12", "e123", "e320", "e130",
    "e210", "e0123",
];

/// The hyperbolic space modelled by an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    H1,
    H2,
    H3,
}

impl Space {
    pub const ALL: [Space; 3] = [Space::H1, Space::H2, Space::H3];

    pub fn dim(self) -> usize {
        match self {
            Space::H1 => 1,
            Space::H2 => 2,
            Space::H3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::H1 => "H1",
            Space::H2 => "H2",
            Space::H3 => "H3",
        }
    }

    pub fn basis_names(self) -> &'static [&'static str] {
        match self {
            Space::H1 => &H1_BASIS,
            Space::H2 => &H2_BASIS,
            Space::H3 => &H3_BASIS,
        }
    }

    pub fn from_name(s: &str) -> Option<Space> {
        match s.trim() {
            "H1" | "h1" => Some(Space::H1),
            "H2" | "h2" => Some(Space::H2),
            "H3" | "h3" => Some(Space::H3),
            _ => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One basis blade: `sign * e_{i1} e_{i2} ...` with indices ascending in `mask`.
#[derive(Debug, Clone)]
pub struct BasisBlade {
    pub name: &'static str,
    pub mask: u8,
    pub grade: usize,
    /// Orientation of the named blade relative to the ascending product.
    pub sign: f64,
}

/// How the geometric product is evaluated.
#[derive(Debug)]
pub(crate) enum Backend {
    /// Precomputed blade-by-blade sign table.
    Table,
    /// Dense left-multiplication matrices from the independent oracle.
    Oracle(MatrixRep),
}

/// Immutable signature descriptor with precomputed product and complement tables.
#[derive(Debug)]
pub struct Algebra {
    space: Space,
    pub(crate) backend: Backend,
    blades: Vec<BasisBlade>,
    index_of_mask: [usize; MAX_BLADES],
    /// `product[i * n + j] = (k, s)` meaning `B_i B_j = s B_k`.
    product: Vec<(usize, f64)>,
    /// Right complement: `J(B_i) = s B_k` with `B_i ^ J(B_i) = I`.
    complement: Vec<(usize, f64)>,
}

/// Sign from reordering `e_a e_b` (ascending blades) into ascending order,
/// including the metric factor of every generator shared by both.
pub(crate) fn blade_product_sign(a: u8, b: u8) -> f64 {
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    let mut sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    // e0 is the only generator with a negative square
    if a & b & 1 != 0 {
        sign = -sign;
    }
    sign
}

fn parse_basis_name(name: &'static str) -> BasisBlade {
    if name == "1" {
        return BasisBlade { name, mask: 0, grade: 0, sign: 1.0 };
    }
    let mut mask = 0u8;
    let mut sign = 1.0;
    for ch in name[1..].chars() {
        let g = ch.to_digit(10).expect("basis names are digits") as u8;
        let bit = 1u8 << g;
        sign *= blade_product_sign(mask, bit);
        mask |= bit;
    }
    BasisBlade { name, mask, grade: mask.count_ones() as usize, sign }
}

impl Algebra {
    fn build(space: Space, oracle: bool) -> Algebra {
        let blades: Vec<BasisBlade> = space.basis_names().iter().map(|n| parse_basis_name(n)).collect();
        let n = blades.len();
        let mut index_of_mask = [usize::MAX; MAX_BLADES];
        for (i, b) in blades.iter().enumerate() {
            index_of_mask[b.mask as usize] = i;
        }
        let mut product = Vec::with_capacity(n * n);
        for bi in &blades {
            for bj in &blades {
                let mask = bi.mask ^ bj.mask;
                let k = index_of_mask[mask as usize];
                let s = bi.sign * bj.sign * blade_product_sign(bi.mask, bj.mask) * blades[k].sign;
                product.push((k, s));
            }
        }
        let full = (n - 1) as u8;
        let mut complement = Vec::with_capacity(n);
        for (i, bi) in blades.iter().enumerate() {
            let k = index_of_mask[(bi.mask ^ full) as usize];
            // B_i ^ B_k is the full product since the masks are disjoint
            let (top, s) = product[i * n + k];
            debug_assert_eq!(top, n - 1);
            complement.push((k, s));
        }
        let backend = if oracle { Backend::Oracle(MatrixRep::new(space)) } else { Backend::Table };
        Algebra { space, backend, blades, index_of_mask, product, complement }
    }

    /// Shared table-driven algebra for a space.
    pub fn get(space: Space) -> &'static Algebra {
        static CELLS: [OnceLock<Algebra>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CELLS[space.dim() - 1].get_or_init(|| Algebra::build(space, false))
    }

    /// Same algebra whose products are evaluated through the matrix oracle.
    pub fn oracle_backed(space: Space) -> &'static Algebra {
        static CELLS: [OnceLock<Algebra>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CELLS[space.dim() - 1].get_or_init(|| Algebra::build(space, true))
    }

    pub fn h1() -> &'static Algebra {
        Algebra::get(Space::H1)
    }

    pub fn h2() -> &'static Algebra {
        Algebra::get(Space::H2)
    }

    pub fn h3() -> &'static Algebra {
        Algebra::get(Space::H3)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Number of basis blades, 2^(d+1).
    pub fn size(&self) -> usize {
        self.blades.len()
    }

    pub fn blades(&self) -> &[BasisBlade] {
        &self.blades
    }

    pub fn blade(&self, i: usize) -> &BasisBlade {
        &self.blades[i]
    }

    pub fn is_oracle_backed(&self) -> bool {
        matches!(self.backend, Backend::Oracle(_))
    }

    /// Square of generator `e_i`.
    pub fn generator_square(&self, i: usize) -> f64 {
        assert!(i <= self.dim(), "generator e{i} outside {}", self.space);
        if i == 0 {
            -1.0
        } else {
            1.0
        }
    }

    pub fn index_of_mask(&self, mask: u8) -> Option<usize> {
        self.index_of_mask.get(mask as usize).copied().filter(|&i| i != usize::MAX)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.blades.iter().position(|b| b.name == name)
    }

    /// Index of the pseudoscalar `I`.
    pub fn pseudoscalar_index(&self) -> usize {
        self.size() - 1
    }

    /// `B_i B_j = s B_k` as `(k, s)`.
    #[inline]
    pub fn product_entry(&self, i: usize, j: usize) -> (usize, f64) {
        self.product[i * self.size() + j]
    }

    /// `J(B_i) = s B_k` as `(k, s)`.
    #[inline]
    pub fn complement_entry(&self, i: usize) -> (usize, f64) {
        self.complement[i]
    }

    /// Grade of a geometric point: `d` (vectors in H1, bivectors in H2, trivectors in H3).
    pub fn point_grade(&self) -> usize {
        self.dim()
    }

    /// Index of the unit point at the origin (`e1`, `e12`, `e123`).
    pub fn origin_index(&self) -> usize {
        match self.space {
            Space::H1 => 2,
            Space::H2 => 4,
            Space::H3 => 11,
        }
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_and_grades() {
        for space in Space::ALL {
            let alg = Algebra::get(space);
            assert_eq!(alg.size(), 1 << (space.dim() + 1));
            let grades: Vec<usize> = alg.blades().iter().map(|b| b.grade).collect();
            let mut sorted = grades.clone();
            sorted.sort();
            assert_eq!(grades, sorted);
        }
    }

    #[test]
    fn named_orientation() {
        let alg = Algebra::h2();
        let e20 = alg.blade(alg.index_of_name("e20").unwrap());
        assert_eq!(e20.mask, 0b101);
        assert_eq!(e20.sign, -1.0);
        let h3 = Algebra::h3();
        let e210 = h3.blade(h3.index_of_name("e210").unwrap());
        assert_eq!(e210.sign, -1.0);
        let e130 = h3.blade(h3.index_of_name("e130").unwrap());
        assert_eq!(e130.sign, 1.0);
    }

    #[test]
    fn signature() {
        let alg = Algebra::h3();
        assert_eq!(alg.product_entry(1, 1), (0, -1.0));
        assert_eq!(alg.product_entry(2, 2), (0, 1.0));
        // e1 e2 = e12
        let e12 = alg.index_of_name("e12").unwrap();
        assert_eq!(alg.product_entry(2, 3), (e12, 1.0));
    }

    #[test]
    fn complement_wedges_to_pseudoscalar() {
        for space in Space::ALL {
            let alg = Algebra::get(space);
            let top = alg.pseudoscalar_index();
            for i in 0..alg.size() {
                let (k, s) = alg.complement_entry(i);
                let (p, t) = alg.product_entry(i, k);
                assert_eq!(p, top);
                assert_eq!(s * t, 1.0, "{} in {space}", alg.blade(i).name);
            }
        }
    }
}
