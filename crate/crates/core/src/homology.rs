//! Reduced (relative) homology ranks of complexes and of their induced
//! subcomplexes.

use std::sync::OnceLock;

use dashmap::DashMap;
use serde::Serialize;

use crate::chain::{boundary_terms, Chain};
use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::face::Face;
use crate::field::{Field, FieldSpec};
use crate::linalg::{self, Echelon, SparseVec};

/// Largest ground set for which full subset scans (Hochster's formula,
/// Reisner-style sweeps) are attempted.
pub const SUBSET_SCAN_LIMIT: usize = 20;

/// Environment variable capping the number of cached induced ranks.
pub const CACHE_ENV: &str = "CHORDAL_CACHE_MAX";
const DEFAULT_CACHE_MAX: usize = 1 << 21;

fn cache_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CACHE_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CACHE_MAX)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub degree: i32,
    pub field: FieldSpec,
    pub betti: usize,
    /// dim C_k.
    pub chains: usize,
    /// rank ∂_k.
    pub rank_out: usize,
    /// rank ∂_{k+1}.
    pub rank_in: usize,
}

/// dim H̃_k(Δ).
pub fn betti<F: Field>(field: &F, complex: &SimplicialComplex, k: i32) -> HomologyReport {
    relative_betti(field, &RelativeComplex::absolute(complex.clone()), k)
}

/// dim H_k(Δ, Γ).
pub fn relative_betti<F: Field>(field: &F, pair: &RelativeComplex, k: i32) -> HomologyReport {
    let h = InducedHomology::new(field, pair.clone());
    h.report(h.support(), k)
}

/// Reduced Betti numbers `[H̃_{-1}, H̃_0, …, H̃_dim]`.
pub fn betti_numbers<F: Field>(field: &F, complex: &SimplicialComplex) -> Vec<usize> {
    let h = InducedHomology::absolute(field, complex);
    (-1..=complex.dim()).map(|k| h.betti(h.support(), k)).collect()
}

/// Homology of induced sub-pairs `(Δ|_V, Γ|_V)` with cached boundary ranks.
///
/// Boundary columns are computed once; a rank query for `V` filters them to
/// the faces inside `V`. Safe to query from many threads.
pub struct InducedHomology<F: Field> {
    field: F,
    pair: RelativeComplex,
    support: Face,
    /// Relative faces by dimension (`faces[d + 1]`).
    faces: Vec<Vec<Face>>,
    /// Boundary column of `faces[d + 1][i]`, rows indexed by position among Δ's (d−1)-faces.
    columns: Vec<Vec<SparseVec<F::Elem>>>,
    cache: DashMap<(u128, i32), usize>,
}

impl<F: Field> InducedHomology<F> {
    pub fn absolute(field: &F, complex: &SimplicialComplex) -> Self {
        Self::new(field, RelativeComplex::absolute(complex.clone()))
    }

    pub fn new(field: &F, pair: RelativeComplex) -> Self {
        let total = pair.total();
        let idx = total.index().clone();
        let top = total.dim();
        let mut faces = Vec::new();
        let mut columns = Vec::new();
        for d in -1..=top {
            let layer = pair.relative_faces(d);
            let cols = layer
                .iter()
                .map(|&f| {
                    let entries = boundary_terms(f)
                        .filter(|(g, _)| !pair.removed().contains(*g))
                        .map(|(g, s)| (idx.position(g).expect("downward closed"), field.from_i64(s as i64)));
                    linalg::collect_sparse(field, entries)
                })
                .collect();
            faces.push(layer);
            columns.push(cols);
        }
        InducedHomology {
            field: field.clone(),
            support: total.vertex_set(),
            pair,
            faces,
            columns,
            cache: DashMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn pair(&self) -> &RelativeComplex {
        &self.pair
    }

    /// Vertices of Δ; induced queries only depend on `V ∩ support`.
    pub fn support(&self) -> Face {
        self.support
    }

    pub fn top_dim(&self) -> i32 {
        self.faces.len() as i32 - 2
    }

    fn layer(&self, j: i32) -> Option<usize> {
        usize::try_from(j + 1).ok().filter(|&i| i < self.faces.len())
    }

    /// Relative j-faces inside `v`, in canonical order.
    pub fn faces_in(&self, v: Face, j: i32) -> Vec<Face> {
        self.layer(j)
            .map(|i| self.faces[i].iter().copied().filter(|f| f.is_subset_of(v)).collect())
            .unwrap_or_default()
    }

    /// dim C_j of the induced pair.
    pub fn chains(&self, v: Face, j: i32) -> usize {
        self.layer(j)
            .map_or(0, |i| self.faces[i].iter().filter(|f| f.is_subset_of(v)).count())
    }

    fn columns_in(&self, v: Face, j: i32) -> impl Iterator<Item = (Face, &SparseVec<F::Elem>)> + '_ {
        let i = self.layer(j);
        i.into_iter().flat_map(move |i| {
            self.faces[i]
                .iter()
                .zip(&self.columns[i])
                .filter(move |(f, _)| f.is_subset_of(v))
                .map(|(f, c)| (*f, c))
        })
    }

    /// rank ∂_j on the induced pair.
    pub fn rank(&self, v: Face, j: i32) -> usize {
        if j < 0 || self.layer(j).is_none() {
            return 0;
        }
        let key = (v.intersection(self.support).bits(), j);
        if let Some(r) = self.cache.get(&key) {
            return *r;
        }
        let r = linalg::rank(&self.field, self.columns_in(v, j).map(|(_, c)| c.clone()));
        if self.cache.len() < cache_cap() {
            self.cache.insert(key, r);
        }
        r
    }

    /// dim H_k(Δ|_V, Γ|_V) (reduced when Γ is void).
    pub fn betti(&self, v: Face, k: i32) -> usize {
        let c = self.chains(v, k);
        if c == 0 {
            return 0;
        }
        let z = c - self.rank(v, k);
        if z == 0 {
            return 0;
        }
        z - self.rank(v, k + 1)
    }

    pub fn report(&self, v: Face, k: i32) -> HomologyReport {
        HomologyReport {
            degree: k,
            field: self.field.spec(),
            betti: self.betti(v, k),
            chains: self.chains(v, k),
            rank_out: self.rank(v, k),
            rank_in: self.rank(v, k + 1),
        }
    }

    /// A basis of the k-cycles of the induced pair.
    pub fn cycle_basis(&self, v: Face, k: i32) -> Vec<Chain<F::Elem>> {
        let (faces, cols): (Vec<Face>, Vec<SparseVec<F::Elem>>) =
            self.columns_in(v, k).map(|(f, c)| (f, c.clone())).unzip();
        linalg::kernel(&self.field, cols)
            .into_iter()
            .map(|x| self.chain_from(k, &faces, x))
            .collect()
    }

    /// Vertex support of the whole k-cycle space of the induced pair.
    pub fn cycle_support(&self, v: Face, k: i32) -> Face {
        self.cycle_basis(v, k)
            .iter()
            .fold(Face::EMPTY, |acc, z| acc.union(z.support()))
    }

    /// A k-cycle of the induced pair that is not a boundary there, if any.
    pub fn nonbounding_cycle(&self, v: Face, k: i32) -> Option<Chain<F::Elem>> {
        if self.betti(v, k) == 0 {
            return None;
        }
        let mut image = Echelon::new(&self.field, false);
        for (_, c) in self.columns_in(v, k + 1) {
            image.push(c.clone());
        }
        self.cycle_basis(v, k)
            .into_iter()
            .find(|z| !image.contains(&self.coordinates(z)))
    }

    fn chain_from(&self, k: i32, faces: &[Face], x: SparseVec<F::Elem>) -> Chain<F::Elem> {
        Chain::from_terms(&self.field, k, x.into_iter().map(|(j, c)| (faces[j], c))).expect("uniform degree")
    }

    /// Pushes the boundary columns of the given (k+1)-faces into an echelon
    /// with row ids shared with [`Self::coordinates`].
    pub fn image_of<'s>(&'s self, faces: impl IntoIterator<Item = Face>) -> Echelon<'s, F> {
        let mut e = Echelon::new(&self.field, false);
        for f in faces {
            if let Some(i) = self.layer(f.dim()) {
                if let Ok(p) = self.faces[i].binary_search(&f) {
                    e.push(self.columns[i][p].clone());
                }
            }
        }
        e
    }

    /// Coordinates of a chain in the row numbering used by boundary columns.
    pub fn coordinates(&self, c: &Chain<F::Elem>) -> SparseVec<F::Elem> {
        let idx = self.pair.total().index();
        linalg::collect_sparse(
            &self.field,
            c.terms().iter().map(|(f, x)| (idx.position(*f).expect("face of Δ"), x.clone())),
        )
    }

    /// Is `z` a k-cycle bounding within the given (k+1)-faces?
    pub fn bounds_within(&self, z: &Chain<F::Elem>, faces: impl IntoIterator<Item = Face>) -> bool {
        self.image_of(faces).contains(&self.coordinates(z))
    }
}
