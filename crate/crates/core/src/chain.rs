//! Chains with field coefficients and the simplicial boundary operator.
//!
//! Orientations come from the ambient vertex order: a face's canonical
//! orientation lists its vertices increasingly, and
//! `∂σ = Σ_u sgn(u, σ)·(σ−u)`, i.e. the term dropping the i-th vertex carries
//! `(−1)^i`. With this orientation the join rule
//! `∂(σ₁*σ₂) = ∂σ₁*σ₂ + (−1)^{dim σ₁ + 1} σ₁*∂σ₂` holds verbatim. The empty
//! face is the unique (−1)-face, so `∂v = ∅` for every vertex (reduced chains).

use std::collections::{BTreeMap, HashMap};

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{sign, Face};
use crate::field::Field;
use crate::linalg::{self, SparseVec};

/// A homogeneous chain: nonzero coefficients on faces of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<E> {
    degree: i32,
    terms: BTreeMap<Face, E>,
}

impl<E: Clone + PartialEq> Chain<E> {
    pub fn zero(degree: i32) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Face, E> {
        &self.terms
    }

    pub fn coefficient(&self, face: Face) -> Option<&E> {
        self.terms.get(&face)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.terms.keys().copied()
    }

    /// Vertex support `c^(0)`: the union of the faces carrying a nonzero coefficient.
    pub fn support(&self) -> Face {
        self.terms.keys().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }
}

impl<E: Clone + PartialEq> Chain<E> {
    /// Builds a chain, summing repeated faces and dropping zeros.
    pub fn from_terms<F: Field<Elem = E>>(
        field: &F,
        degree: i32,
        terms: impl IntoIterator<Item = (Face, E)>,
    ) -> Result<Self> {
        if degree < -1 {
            return Err(Error::InvalidDegree(degree));
        }
        let mut out = Chain::zero(degree);
        for (face, c) in terms {
            if face.dim() != degree {
                return Err(Error::MixedDegree {
                    face: format!("{face:?}"),
                    got: face.dim(),
                    expected: degree,
                });
            }
            out.add_term(field, face, &c);
        }
        Ok(out)
    }

    /// Single face with coefficient one.
    pub fn face<F: Field<Elem = E>>(field: &F, face: Face) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(face, field.one());
        Chain {
            degree: face.dim(),
            terms,
        }
    }

    fn add_term<F: Field<Elem = E>>(&mut self, field: &F, face: Face, c: &E) {
        if field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&face) {
            Some(x) => {
                let s = field.add(x, c);
                if field.is_zero(&s) {
                    self.terms.remove(&face);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(face, c.clone());
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding chains of different degree");
        let mut out = self.clone();
        for (&f, c) in &other.terms {
            out.add_term(field, f, c);
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self.terms.iter().map(|(&f, x)| (f, field.mul(c, x))).collect(),
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        self.scale(field, &field.from_i64(-1))
    }

    /// Checks every face against an ambient pair: a face of Δ not in Γ.
    pub fn validate(&self, ambient: &RelativeComplex) -> Result<()> {
        for &f in self.terms.keys() {
            if !ambient.total().contains(f) || ambient.removed().contains(f) {
                return Err(Error::NotAFace(ambient.total().format_face(f)));
            }
        }
        Ok(())
    }

    /// Coordinates against a row numbering.
    pub(crate) fn to_sparse(&self, rows: &HashMap<Face, usize>) -> Option<SparseVec<E>> {
        let mut v: SparseVec<E> = Vec::with_capacity(self.terms.len());
        for (f, c) in &self.terms {
            v.push((*rows.get(f)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }
}

/// `∂σ` as signed codimension-one faces, `σ−u` for each vertex u of σ.
pub fn boundary_terms(sigma: Face) -> impl Iterator<Item = (Face, i32)> {
    sigma
        .vertices()
        .enumerate()
        .map(move |(i, u)| (sigma.without(u), if i % 2 == 0 { 1 } else { -1 }))
}

/// Absolute boundary.
pub fn boundary<F: Field>(field: &F, c: &Chain<F::Elem>) -> Chain<F::Elem> {
    boundary_rel(field, c, None)
}

/// Relative boundary: terms lying in `removed` are dropped after applying ∂.
pub fn relative_boundary<F: Field>(field: &F, c: &Chain<F::Elem>, removed: &SimplicialComplex) -> Chain<F::Elem> {
    boundary_rel(field, c, Some(removed))
}

fn boundary_rel<F: Field>(field: &F, c: &Chain<F::Elem>, removed: Option<&SimplicialComplex>) -> Chain<F::Elem> {
    let mut out = Chain::zero(c.degree - 1);
    if c.degree < 0 {
        return out;
    }
    for (&sigma, g) in &c.terms {
        for (tau, s) in boundary_terms(sigma) {
            if removed.is_some_and(|r| r.contains(tau)) {
                continue;
            }
            out.add_term(field, tau, &field.mul(&field.from_i64(s as i64), g));
        }
    }
    out
}

/// Boundary in an ambient pair (absolute when Γ is void).
pub fn boundary_in<F: Field>(field: &F, c: &Chain<F::Elem>, ambient: &RelativeComplex) -> Chain<F::Elem> {
    if ambient.removed().is_void() {
        boundary(field, c)
    } else {
        relative_boundary(field, c, ambient.removed())
    }
}

pub fn is_cycle<F: Field>(field: &F, c: &Chain<F::Elem>, ambient: &RelativeComplex) -> bool {
    boundary_in(field, c, ambient).is_zero()
}

/// The boundary of the (k+1)-simplex on `s`, a complete k-cycle.
pub fn complete_cycle<F: Field>(field: &F, s: Face, k: i32) -> Result<Chain<F::Elem>> {
    if k < -1 || s.len() as i32 != k + 2 {
        return Err(Error::WrongCardinality { k, got: s.len() });
    }
    Ok(boundary(field, &Chain::face(field, s)))
}

/// `lk_v`: sends σ ∋ v to `sgn(v, σ)·(σ − v)` and kills faces avoiding v.
pub fn link_map<F: Field>(field: &F, c: &Chain<F::Elem>, v: usize) -> Chain<F::Elem> {
    let vf = Face::vertex(v);
    let mut out = Chain::zero(c.degree - 1);
    for (&sigma, g) in &c.terms {
        if let Some(s) = sign(vf, sigma) {
            out.add_term(field, sigma.without(v), &field.mul(&field.from_i64(s as i64), g));
        }
    }
    out
}

/// `lk_τ`: sends σ ⊇ τ to `sgn(τ, σ)·(∂τ * (σ − τ))`, where the join term
/// `(τ−u) * (σ−τ)` is reoriented into canonical vertex order. For a vertex
/// this agrees with [`link_map`].
pub fn extended_link_map<F: Field>(field: &F, c: &Chain<F::Elem>, tau: Face) -> Chain<F::Elem> {
    let mut out = Chain::zero(c.degree - 1);
    for (&sigma, g) in &c.terms {
        let Some(s) = sign(tau, sigma) else { continue };
        for (face, su) in boundary_terms(tau) {
            let target = face.union(sigma.minus(tau));
            let reorient = sign(face, target).expect("subset");
            out.add_term(field, target, &field.mul(&field.from_i64((s * su * reorient) as i64), g));
        }
    }
    out
}

/// Some chain `c` supported on `allowed` with relative boundary `z`, or `None`.
///
/// `allowed` must consist of (k+1)-faces of the ambient pair; the solution is
/// deterministic for a fixed order of `allowed`.
pub fn solve_boundary<F: Field>(
    field: &F,
    z: &Chain<F::Elem>,
    allowed: &[Face],
    ambient: &RelativeComplex,
) -> Result<Option<Chain<F::Elem>>> {
    if !is_cycle(field, z, ambient) {
        return Err(Error::NotACycle);
    }
    let k = z.degree();
    if let Some(&f) = allowed.iter().find(|f| f.dim() != k + 1) {
        return Err(Error::MixedDegree {
            face: ambient.total().format_face(f),
            got: f.dim(),
            expected: k + 1,
        });
    }
    if z.is_zero() {
        return Ok(Some(Chain::zero(k + 1)));
    }
    let mut rows: HashMap<Face, usize> = HashMap::new();
    let columns: Vec<Chain<F::Elem>> = allowed
        .iter()
        .map(|&f| boundary_in(field, &Chain::face(field, f), ambient))
        .collect();
    for f in columns.iter().flat_map(|c| c.faces()).chain(z.faces()) {
        let n = rows.len();
        rows.entry(f).or_insert(n);
    }
    let cols = columns.iter().map(|c| c.to_sparse(&rows).expect("rows cover columns"));
    let b = z.to_sparse(&rows).expect("rows cover target");
    Ok(linalg::solve(field, cols, &b).map(|x| {
        Chain::from_terms(field, k + 1, x.into_iter().map(|(j, c)| (allowed[j], c))).expect("uniform degree")
    }))
}
