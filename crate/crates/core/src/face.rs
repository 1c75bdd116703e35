//! Faces as bit sets over vertex indices.

use std::cmp::Ordering;
use std::fmt;

/// Largest number of vertices a ground set may carry.
pub const MAX_VERTICES: usize = 128;

/// A face: a finite set of vertex indices, stored as a bit set.
///
/// Vertex indices refer to the owning complex's vertex order, so the set bits
/// read in increasing order give the canonical orientation of the face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn vertex(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex index {v} out of range");
        Face(1u128 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }

    /// First `n` vertices.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|vertices| - 1`; the empty face has dimension −1.
    pub fn dim(self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::vertex(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.minus(Face::vertex(v))
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Position of `v` in the canonical orientation (number of smaller vertices).
    pub fn position(self, v: usize) -> usize {
        let below = if v == 0 { 0 } else { self.0 & ((1u128 << v) - 1) };
        below.count_ones() as usize
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Codimension-one faces, in the order obtained by dropping the i-th vertex.
    pub fn facets(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// All subsets of this face with exactly `size` elements, lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Vec<Face> {
        let verts = self.to_vec();
        let n = verts.len();
        let mut out = Vec::new();
        if size > n {
            return out;
        }
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Face::from_indices(idx.iter().map(|&i| verts[i])));
            // Rightmost position that can still advance.
            let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Every subset of this face (2^len of them), including the empty face.
    pub fn all_subsets(self) -> SubsetIter {
        SubsetIter {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Face {
    /// Dimension first, then lexicographic on the sorted vertex sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Vertices(u128);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration via the `(s - mask) & mask` walk.
pub struct SubsetIter {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for SubsetIter {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (nxt != 0).then_some(nxt);
        Some(Face(cur))
    }
}

/// `sgn(τ, σ)`: parity of the permutation taking σ (in vertex order) to the
/// sequence τ followed by σ − τ. Returns `None` when τ ⊄ σ.
pub fn sign(tau: Face, sigma: Face) -> Option<i32> {
    if !tau.is_subset_of(sigma) {
        return None;
    }
    // Inversions: pairs (t ∈ τ, s ∈ σ−τ) with s < t.
    let rest = sigma.minus(tau);
    let inversions: usize = tau.vertices().map(|t| rest.position(t)).sum();
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}
