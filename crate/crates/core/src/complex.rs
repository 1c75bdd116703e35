//! Finite simplicial complexes over an ordered vertex set, and the
//! combinatorial constructions on them (skeleta, induced subcomplexes,
//! deletion, stars, links, joins, clique complexes, missing faces,
//! Alexander duals).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// All faces of a complex, grouped by dimension (`by_dim[d + 1]`).
#[derive(Debug, Default)]
pub struct FaceIndex {
    by_dim: Vec<Vec<Face>>,
    positions: Vec<HashMap<Face, usize>>,
}

impl FaceIndex {
    fn build(facets: &[Face]) -> Self {
        let mut seen: HashSet<Face> = HashSet::new();
        for &f in facets {
            if seen.contains(&f) {
                continue;
            }
            for s in f.all_subsets() {
                seen.insert(s);
            }
        }
        let top = seen.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); if seen.is_empty() { 0 } else { top + 1 }];
        for f in seen {
            by_dim[f.len()].push(f);
        }
        for layer in &mut by_dim {
            layer.sort();
        }
        let positions = by_dim
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        FaceIndex { by_dim, positions }
    }

    /// Faces of dimension `k` in canonical order.
    pub fn faces(&self, k: i32) -> &[Face] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.by_dim.get(i))
            .map_or(&[], |v| v.as_slice())
    }

    pub fn position(&self, face: Face) -> Option<usize> {
        self.positions.get(face.len())?.get(&face).copied()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.position(face).is_some()
    }

    pub fn total(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }
}

/// A finite abstract simplicial complex.
///
/// Stores the ordered ground set (`labels`) and the facets. The face lattice
/// is materialised lazily on first use. Complexes derived from one another
/// share the same ground set, so vertex indices stay comparable.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Arc<[String]>,
    facets: Vec<Face>,
    index: OnceLock<Arc<FaceIndex>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.same_ground(other) && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("labels", &self.labels)
            .field(
                "facets",
                &self
                    .facets
                    .iter()
                    .map(|&x| self.format_face(x))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn normalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|&g| f.is_subset_of(g)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from labelled facets; the label order is the vertex order.
    pub fn build<S: AsRef<str>, T: AsRef<str>>(labels: &[S], facets: &[Vec<T>]) -> Result<Self> {
        let labels = make_labels(labels)?;
        let lookup: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut faces = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut face = Face::EMPTY;
            for l in facet {
                let v = *lookup
                    .get(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
                face = face.with(v);
            }
            faces.push(face);
        }
        Ok(Self::from_facets(labels, faces))
    }

    /// Downward closure of `faces` over the given ground set.
    pub fn from_facets(labels: Arc<[String]>, faces: impl IntoIterator<Item = Face>) -> Self {
        let facets = normalize(faces.into_iter().collect());
        debug_assert!(facets
            .iter()
            .all(|f| f.max_vertex().is_none_or(|v| v < labels.len())));
        SimplicialComplex {
            labels,
            facets,
            index: OnceLock::new(),
        }
    }

    /// The void complex: no faces at all, not even the empty face.
    pub fn void(labels: Arc<[String]>) -> Self {
        Self::from_facets(labels, [])
    }

    /// The complex `{∅}`.
    pub fn empty_face(labels: Arc<[String]>) -> Self {
        Self::from_facets(labels, [Face::EMPTY])
    }

    /// The full simplex on `face` (all subsets).
    pub fn simplex(labels: Arc<[String]>, face: Face) -> Self {
        Self::from_facets(labels, [face])
    }

    /// Same facets over a different (compatible) ground set.
    pub fn with_labels(&self, labels: Arc<[String]>) -> Self {
        Self::from_facets(labels, self.facets.iter().copied())
    }

    pub fn labels(&self) -> &Arc<[String]> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Number of labels in the ground set.
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    /// The whole ground set as a face-shaped bit set.
    pub fn ground(&self) -> Face {
        Face::full(self.labels.len())
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that are faces (Δ^(0)) as a bit set.
    pub fn vertex_set(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    /// Maximal facet dimension; −1 for `{∅}` and for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn same_ground(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    pub fn contains(&self, face: Face) -> bool {
        if let Some(idx) = self.index.get() {
            return idx.contains(face);
        }
        self.facets.iter().any(|&f| face.is_subset_of(f))
    }

    /// The full face lattice (computed once).
    pub fn index(&self) -> &Arc<FaceIndex> {
        self.index
            .get_or_init(|| Arc::new(FaceIndex::build(&self.facets)))
    }

    /// Δ^(k), canonical order. `k = −1` gives `{∅}` for a non-void complex.
    pub fn faces_of_dim(&self, k: i32) -> Vec<Face> {
        self.index().faces(k).to_vec()
    }

    /// All faces, by dimension then lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let idx = self.index();
        (-1..=self.dim()).flat_map(|d| idx.faces(d).iter().copied()).collect()
    }

    /// `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let idx = self.index();
        (-1..=self.dim()).map(|d| idx.faces(d).len()).collect()
    }

    pub fn lookup(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Face from a list of labels (not required to be in the complex).
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels
            .iter()
            .try_fold(Face::EMPTY, |f, l| Ok(f.with(self.lookup(l.as_ref())?)))
    }

    pub fn face_labels(&self, face: Face) -> Vec<String> {
        face.vertices().map(|v| self.labels[v].clone()).collect()
    }

    pub fn format_face(&self, face: Face) -> String {
        format!("{{{}}}", self.face_labels(face).join(","))
    }

    fn require_face(&self, face: Face) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(Error::NotAFace(self.format_face(face)))
        }
    }

    fn derive(&self, faces: impl IntoIterator<Item = Face>) -> Self {
        Self::from_facets(self.labels.clone(), faces)
    }

    /// Sk_k Δ = Δ^(≤k).
    pub fn skeleton(&self, k: i32) -> Self {
        let size = (k + 1).max(0) as usize;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.len() <= size {
                faces.push(f);
            } else {
                faces.extend(f.subsets_of_size(size));
            }
        }
        self.derive(faces)
    }

    /// Δ|_V: faces of Δ contained in `v`.
    pub fn induced(&self, v: Face) -> Self {
        if self.is_void() {
            return self.clone();
        }
        self.derive(self.facets.iter().map(|&f| f.intersection(v)))
    }

    /// Δ − σ: the largest subcomplex not containing σ.
    pub fn delete(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.delete_unchecked(sigma))
    }

    pub(crate) fn delete_unchecked(&self, sigma: Face) -> Self {
        let mut faces = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            if sigma.is_subset_of(f) {
                faces.extend(sigma.vertices().map(|v| f.without(v)));
            } else {
                faces.push(f);
            }
        }
        self.derive(faces)
    }

    /// Deletes a collection of faces one after another.
    pub fn delete_all(&self, faces: &[Face]) -> Self {
        faces
            .iter()
            .fold(self.clone(), |acc, &s| acc.delete_unchecked(s))
    }

    /// Closed star: union of the closed facets containing σ.
    pub fn star(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.star_unchecked(sigma))
    }

    pub(crate) fn star_unchecked(&self, sigma: Face) -> Self {
        self.derive(self.facets.iter().copied().filter(|f| sigma.is_subset_of(*f)))
    }

    /// Lk_σ Δ = {τ ∖ σ : σ ⊆ τ ∈ Δ}.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.link_unchecked(sigma))
    }

    pub(crate) fn link_unchecked(&self, sigma: Face) -> Self {
        self.derive(
            self.facets
                .iter()
                .filter(|f| sigma.is_subset_of(**f))
                .map(|f| f.minus(sigma)),
        )
    }

    /// eLk_σ Δ = St_σ Δ − σ.
    pub fn extended_link(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.extended_link_unchecked(sigma))
    }

    pub(crate) fn extended_link_unchecked(&self, sigma: Face) -> Self {
        self.star_unchecked(sigma).delete_unchecked(sigma)
    }

    /// Δ₁ * Δ₂ on the concatenated ground set (Δ₁'s labels first).
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mine: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        if let Some(l) = other.labels.iter().find(|l| mine.contains(l.as_str())) {
            return Err(Error::OverlappingLabels(l.clone()));
        }
        let n1 = self.labels.len();
        if n1 + other.labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(n1 + other.labels.len()));
        }
        let labels: Arc<[String]> = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        let shift = |f: Face| Face::from_bits(f.bits() << n1);
        let mut faces = Vec::new();
        for &a in &self.facets {
            for &b in &other.facets {
                faces.push(a.union(shift(b)));
            }
        }
        Ok(Self::from_facets(labels, faces))
    }

    /// Union on a shared ground set.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if !self.same_ground(other) {
            return Err(Error::GroundSetMismatch);
        }
        Ok(self.derive(self.facets.iter().chain(other.facets.iter()).copied()))
    }

    /// Intersection on a shared ground set.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if !self.same_ground(other) {
            return Err(Error::GroundSetMismatch);
        }
        let mut faces = Vec::new();
        for &a in &self.facets {
            for &b in &other.facets {
                faces.push(a.intersection(b));
            }
        }
        Ok(self.derive(faces))
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.facets.iter().all(|&f| other.contains(f))
    }

    /// Cl_k Δ = {σ ⊆ Δ^(0) : Sk_k σ ⊆ Δ}.
    pub fn clique_complex(&self, k: i32) -> Self {
        if self.is_void() || k < 0 {
            return self.clone();
        }
        let k = k as usize;
        let verts = self.vertex_set().to_vec();
        let idx = self.index().clone();
        // `v` may join clique `s` iff every subset of s ∪ {v} of size ≤ k+1
        // containing v is a face; checking the maximal such subsets suffices.
        let extends = |s: Face, v: usize| -> bool {
            if s.len() <= k {
                idx.contains(s.with(v))
            } else {
                s.subsets_of_size(k).into_iter().all(|t| idx.contains(t.with(v)))
            }
        };
        let mut maximal = Vec::new();
        let mut stack: Vec<(Face, usize)> = vec![(Face::EMPTY, 0)];
        while let Some((s, start)) = stack.pop() {
            let mut grew = false;
            for (i, &v) in verts.iter().enumerate().skip(start) {
                if extends(s, v) {
                    grew = true;
                    stack.push((s.with(v), i + 1));
                }
            }
            if !grew {
                let below = s.max_vertex().map_or(0, |m| m);
                let blocked = verts
                    .iter()
                    .take_while(|&&v| v < below)
                    .any(|&v| !s.contains(v) && extends(s, v));
                if !blocked {
                    maximal.push(s);
                }
            }
        }
        self.derive(maximal)
    }

    /// Minimal non-faces over the ground set: σ ∉ Δ with every proper subset in Δ.
    pub fn missing_faces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let idx = self.index().clone();
        let mut out: Vec<Face> = (0..self.labels.len())
            .map(Face::vertex)
            .filter(|&f| !idx.contains(f))
            .collect();
        let mut d = 0;
        loop {
            let layer = idx.faces(d);
            if layer.is_empty() {
                break;
            }
            for &f in layer {
                let top = f.max_vertex().unwrap_or(0);
                for w in idx.faces(0) {
                    let v = w.min_vertex().unwrap();
                    if v <= top {
                        continue;
                    }
                    let cand = f.with(v);
                    if !idx.contains(cand) && cand.facets().all(|g| idx.contains(g)) {
                        out.push(cand);
                    }
                }
            }
            d += 1;
        }
        out.sort();
        out
    }

    /// Δ* = {F ⊆ V : V ∖ F ∉ Δ} over the declared ground set V.
    pub fn alexander_dual(&self) -> Self {
        let ground = self.ground();
        self.derive(self.missing_faces().into_iter().map(|m| ground.minus(m)))
    }

    /// Extends the ground set with extra labels (appended after the existing ones).
    pub fn extend_ground<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self> {
        let mut labels: Vec<String> = self.labels.to_vec();
        labels.extend(extra.iter().map(|s| s.as_ref().to_string()));
        let labels = make_labels(&labels)?;
        Ok(Self::from_facets(labels, self.facets.iter().copied()))
    }

    /// Every subset of σ of dimension ≤ k lies in Δ, for σ = Δ^(0).
    pub fn has_complete_skeleton(&self, k: i32) -> bool {
        if self.is_void() {
            return false;
        }
        let v = self.vertex_set();
        let idx = self.index();
        (0..=k).all(|d| {
            let size = (d + 1) as usize;
            size > v.len() || idx.faces(d).len() == binomial(v.len(), size)
        })
    }

    /// Reduced Euler characteristic Σ (−1)^i f_i over i ≥ −1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn make_labels<S: AsRef<str>>(labels: &[S]) -> Result<Arc<[String]>> {
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(labels.len()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_ref()) {
            return Err(Error::DuplicateLabel(l.as_ref().to_string()));
        }
    }
    Ok(labels.iter().map(|s| s.as_ref().to_string()).collect())
}

/// A pair (Δ, Γ) with Γ a subcomplex of Δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeComplex {
    total: SimplicialComplex,
    removed: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(total: SimplicialComplex, removed: SimplicialComplex) -> Result<Self> {
        if !total.same_ground(&removed) {
            return Err(Error::GroundSetMismatch);
        }
        if let Some(&f) = removed.facets().iter().find(|&&f| !total.contains(f)) {
            return Err(Error::NotSubcomplex(removed.format_face(f)));
        }
        Ok(RelativeComplex { total, removed })
    }

    /// (Δ, void): behaves like Δ itself.
    pub fn absolute(total: SimplicialComplex) -> Self {
        let removed = SimplicialComplex::void(total.labels().clone());
        RelativeComplex { total, removed }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn removed(&self) -> &SimplicialComplex {
        &self.removed
    }

    /// Faces of Δ ∖ Γ in dimension k.
    pub fn relative_faces(&self, k: i32) -> Vec<Face> {
        self.total
            .index()
            .faces(k)
            .iter()
            .copied()
            .filter(|&f| !self.removed.contains(f))
            .collect()
    }

    /// (Δ|_W, Γ|_W).
    pub fn induced(&self, w: Face) -> Self {
        RelativeComplex {
            total: self.total.induced(w),
            removed: self.removed.induced(w),
        }
    }

    /// (St_τ Δ, St_τ Δ − τ).
    pub fn star_pair(complex: &SimplicialComplex, tau: Face) -> Result<Self> {
        let st = complex.star(tau)?;
        let rest = st.delete_unchecked(tau);
        Ok(RelativeComplex {
            total: st,
            removed: rest,
        })
    }
}
