//! Boundary-matrix ranks of a simplicial complex over GF(p), by sparse
//! column reduction with clearing.
//!
//! Faces are bitmasks over at most `MAX_HOMOLOGY_VERTICES` local vertices.
//! The empty face is the single face of dimension -1, so the augmentation
//! map is the boundary of the vertices.

use crate::polyalg::PrimeField;

/// Sparse column: `(row, coeff)` sorted by row, coefficients nonzero.
type Column = Vec<(u32, u64)>;

pub(crate) struct FaceLattice {
    /// `by_size[j]` lists faces with `j` vertices in increasing mask order.
    pub by_size: Vec<Vec<u32>>,
    /// Position of a face within its `by_size` list; `u32::MAX` for non-faces.
    index: Vec<u32>,
}

impl FaceLattice {
    /// All faces of the complex with the given facets on `d` vertices.
    pub fn new(d: usize, facets: &[u32]) -> Self {
        let mut by_size = vec![Vec::new(); d + 1];
        let mut index = vec![u32::MAX; 1usize << d];
        if !facets.is_empty() {
            for mask in 0..(1u32 << d) {
                if facets.iter().any(|&f| mask & !f == 0) {
                    let list = &mut by_size[mask.count_ones() as usize];
                    index[mask as usize] = list.len() as u32;
                    list.push(mask);
                }
            }
        }
        Self { by_size, index }
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    fn boundary(&self, k: &PrimeField, face: u32) -> Column {
        let mut col = Vec::with_capacity(face.count_ones() as usize);
        let mut rest = face;
        let mut pos = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let row = self.index[(face ^ bit) as usize];
            let coeff = if pos % 2 == 0 { 1 } else { k.neg(1) };
            col.push((row, coeff));
            rest ^= bit;
            pos += 1;
        }
        col.sort_unstable_by_key(|&(r, _)| r);
        col
    }
}

/// `a - c * b` for sorted sparse columns.
fn axpy(k: &PrimeField, a: &Column, c: u64, b: &Column) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |t| t.0);
        let rb = b.get(j).map_or(u32::MAX, |t| t.0);
        if ra < rb {
            out.push(a[i]);
            i += 1;
        } else if rb < ra {
            out.push((rb, k.neg(k.mul(c, b[j].1))));
            j += 1;
        } else {
            let v = k.sub(a[i].1, k.mul(c, b[j].1));
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `ranks[j]` = rank of the boundary map from faces with `j` vertices to
/// faces with `j - 1` vertices (`ranks[0] = 0`).
pub(crate) fn boundary_ranks(k: &PrimeField, lattice: &FaceLattice) -> Vec<usize> {
    let top = lattice.by_size.len();
    let mut ranks = vec![0; top];
    // faces already known to be pivots of the map one size up; their own
    // columns reduce to zero and are skipped
    let mut cleared: Vec<bool> = Vec::new();
    for j in (1..top).rev() {
        let rows = lattice.by_size[j - 1].len();
        let mut pivot_of_row: Vec<Option<Column>> = vec![None; rows];
        let mut next_cleared = vec![false; rows];
        for (c, &face) in lattice.by_size[j].iter().enumerate() {
            if cleared.get(c).copied().unwrap_or(false) {
                continue;
            }
            let mut col = lattice.boundary(k, face);
            while let Some(&(low, coeff)) = col.last() {
                match &pivot_of_row[low as usize] {
                    Some(piv) => col = axpy(k, &col, coeff, piv),
                    None => {
                        let inv = k.inv(coeff).expect("nonzero coefficient");
                        for t in col.iter_mut() {
                            t.1 = k.mul(t.1, inv);
                        }
                        pivot_of_row[low as usize] = Some(col);
                        next_cleared[low as usize] = true;
                        ranks[j] += 1;
                        break;
                    }
                }
            }
        }
        cleared = next_cleared;
    }
    ranks
}
