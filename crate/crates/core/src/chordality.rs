//! Resolution and decomposition chordality, Leray numbers, and the
//! Stanley–Reisner invariants computed from induced homology.
//!
//! The subset scans only visit vertex sets inside `U`, the vertex support of
//! the k-cycle space: a cycle of `Δ|_V` is a cycle of Δ and so lives on
//! `V ∩ U`, while boundaries only shrink when vertices are removed. Hence
//! `H_k(Δ|_V) ≠ 0` implies `H_k(Δ|_{V∩U}) ≠ 0`, and every size-minimal
//! obstruction lies in `U`.

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{complete_cycle, is_cycle, solve_boundary, Chain};
use crate::complex::{binomial, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::{Field, FieldSpec};
use crate::homology::{InducedHomology, SUBSET_SCAN_LIMIT};
use crate::linalg;

/// Candidate subsets examined per cardinality before giving up.
const SCAN_BUDGET: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChordalityKind {
    Resolution,
    Decomposition,
}

/// A vertex set whose induced (relative) homology in degree k is nonzero,
/// with a cycle there that does not bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction<E> {
    pub vertices: Face,
    pub betti: usize,
    pub cycle: Chain<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChordalityVerdict<E> {
    pub holds: bool,
    pub kind: ChordalityKind,
    pub k: i32,
    pub field: FieldSpec,
    pub witness: Option<Obstruction<E>>,
}

/// Smallest V (by size, then lexicographically) with `H_k` of the induced pair nonzero.
pub fn first_obstruction<F: Field>(h: &InducedHomology<F>, k: i32) -> Result<Option<Face>> {
    if k < 0 {
        return Err(Error::InvalidDegree(k));
    }
    let u = h.cycle_support(h.support(), k);
    if u.is_empty() {
        return Ok(None);
    }
    let n = u.len();
    for s in (k as usize + 1)..=n {
        if binomial(n, s) > SCAN_BUDGET {
            return Err(Error::TooLarge(n));
        }
        let cands = u.subsets_of_size(s);
        if let Some(&v) = cands.par_iter().find_first(|&&v| h.betti(v, k) > 0) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn verdict<F: Field>(h: &InducedHomology<F>, k: i32, kind: ChordalityKind) -> Result<ChordalityVerdict<F::Elem>> {
    let witness = first_obstruction(h, k)?.map(|v| Obstruction {
        vertices: v,
        betti: h.betti(v, k),
        cycle: h.nonbounding_cycle(v, k).expect("nonzero homology has a nonbounding cycle"),
    });
    Ok(ChordalityVerdict {
        holds: witness.is_none(),
        kind,
        k,
        field: h.field().spec(),
        witness,
    })
}

/// Resolution k-chordality: `H̃_k(Δ|_V) = 0` for every vertex set V.
pub fn is_resolution_chordal<F: Field>(field: &F, complex: &SimplicialComplex, k: i32) -> Result<ChordalityVerdict<F::Elem>> {
    verdict(&InducedHomology::absolute(field, complex), k, ChordalityKind::Resolution)
}

/// Relative version: every relative k-cycle supported in W bounds relatively in W.
pub fn is_relative_resolution_chordal<F: Field>(
    field: &F,
    pair: &RelativeComplex,
    k: i32,
) -> Result<ChordalityVerdict<F::Elem>> {
    verdict(&InducedHomology::new(field, pair.clone()), k, ChordalityKind::Resolution)
}

/// Decomposition k-chordality, decided as resolution k-chordality of `Cl_k Δ`.
/// The witness cycle lives on k-faces of Δ (Cl_k keeps the k-skeleton).
pub fn is_decomposition_chordal<F: Field>(field: &F, complex: &SimplicialComplex, k: i32) -> Result<ChordalityVerdict<F::Elem>> {
    if k < 0 {
        return Err(Error::InvalidDegree(k));
    }
    let cl = complex.clique_complex(k);
    verdict(&InducedHomology::absolute(field, &cl), k, ChordalityKind::Decomposition)
}

/// A (k+1)-chain `c` with `∂c = z` supported on `z`'s vertices, if one exists.
pub fn resolve_cycle<F: Field>(field: &F, complex: &SimplicialComplex, z: &Chain<F::Elem>) -> Result<Option<Chain<F::Elem>>> {
    resolve_relative_cycle(field, &RelativeComplex::absolute(complex.clone()), z)
}

pub fn resolve_relative_cycle<F: Field>(
    field: &F,
    pair: &RelativeComplex,
    z: &Chain<F::Elem>,
) -> Result<Option<Chain<F::Elem>>> {
    z.validate(pair)?;
    let support = z.support();
    let allowed: Vec<Face> = pair
        .relative_faces(z.degree() + 1)
        .into_iter()
        .filter(|f| f.is_subset_of(support))
        .collect();
    solve_boundary(field, z, &allowed, pair)
}

/// Writes `z` as `Σ λ_i · ∂S_i` over (k+2)-sets `S_i ⊆ z^(0)` whose k-skeleton
/// lies in Δ, solving over all eligible sets at once.
pub fn decompose_cycle<F: Field>(
    field: &F,
    complex: &SimplicialComplex,
    z: &Chain<F::Elem>,
) -> Result<Option<Vec<(F::Elem, Face)>>> {
    let amb = RelativeComplex::absolute(complex.clone());
    z.validate(&amb)?;
    if !is_cycle(field, z, &amb) {
        return Err(Error::NotACycle);
    }
    if z.is_zero() {
        return Ok(Some(Vec::new()));
    }
    let k = z.degree();
    let size = (k + 2) as usize;
    let eligible: Vec<Face> = z
        .support()
        .subsets_of_size(size)
        .into_iter()
        .filter(|s| s.facets().all(|t| complex.contains(t)))
        .collect();
    let idx = complex.index();
    let column = |s: Face| {
        let c = complete_cycle(field, s, k).expect("cardinality");
        linalg::collect_sparse(field, c.terms().iter().map(|(f, x)| (idx.position(*f).expect("k-face"), x.clone())))
    };
    let b = linalg::collect_sparse(
        field,
        z.terms().iter().map(|(f, x)| (idx.position(*f).expect("validated"), x.clone())),
    );
    Ok(linalg::solve(field, eligible.iter().map(|&s| column(s)), &b)
        .map(|x| x.into_iter().map(|(j, c)| (c, eligible[j])).collect()))
}

/// Least k with `H̃_j(Δ|_V) = 0` for all j ≥ k and all V.
pub fn leray_number<F: Field>(field: &F, complex: &SimplicialComplex) -> Result<usize> {
    leray_with(&InducedHomology::absolute(field, complex))
}

fn leray_with<F: Field>(h: &InducedHomology<F>) -> Result<usize> {
    for j in (0..=h.top_dim()).rev() {
        if first_obstruction(h, j)?.is_some() {
            return Ok(j as usize + 1);
        }
    }
    Ok(0)
}

/// Graded Betti numbers of the Stanley–Reisner ring via Hochster's formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field: FieldSpec,
    /// Number of variables (size of the ground set).
    pub n: usize,
    /// `entries[a][j] = β_{a,j}`.
    pub entries: Vec<Vec<usize>>,
}

impl BettiTable {
    pub fn get(&self, a: usize, j: usize) -> usize {
        self.entries.get(a).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    /// max{j − a : β_{a,j} ≠ 0}; 0 for the zero ring.
    pub fn regularity(&self) -> usize {
        self.nonzero().map(|(a, j)| j - a).max().unwrap_or(0)
    }

    /// t_a = max{j : β_{a,j} ≠ 0}.
    pub fn t(&self, a: usize) -> Option<usize> {
        self.entries.get(a)?.iter().rposition(|&b| b != 0)
    }

    /// Projective dimension: the last nonzero row.
    pub fn length(&self) -> Option<usize> {
        self.entries.iter().rposition(|r| r.iter().any(|&b| b != 0))
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(a, r)| r.iter().enumerate().filter(|(_, &b)| b != 0).map(move |(j, _)| (a, j)))
    }

    /// Rows a ≥ 1 where `t_a ≤ t_{a−1} + t_1` fails, among rows where all three are defined.
    pub fn herzog_srinivasan_violations(&self) -> Vec<usize> {
        let Some(t1) = self.t(1) else { return Vec::new() };
        (1..self.entries.len())
            .filter(|&a| match (self.t(a), self.t(a - 1)) {
                (Some(ta), Some(tb)) => ta > tb + t1,
                _ => false,
            })
            .collect()
    }
}

/// β_{a,j} = Σ_{|W|=j} dim H̃_{j−a−1}(Δ|_W), W over the ground set.
pub fn betti_table<F: Field>(field: &F, complex: &SimplicialComplex) -> Result<BettiTable> {
    betti_table_with(&InducedHomology::absolute(field, complex), complex.ground_size())
}

fn betti_table_with<F: Field>(h: &InducedHomology<F>, n: usize) -> Result<BettiTable> {
    if n > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLarge(n));
    }
    let top = h.top_dim();
    let empty = || vec![vec![0usize; n + 1]; n + 1];
    let entries = (0u64..1 << n)
        .into_par_iter()
        .fold(empty, |mut acc, bits| {
            let w = Face::from_bits(bits as u128);
            let j = w.len();
            for i in -1..=top.min(j as i32 - 1) {
                let b = h.betti(w, i);
                if b > 0 {
                    let a = j as i32 - i - 1;
                    acc[a as usize][j] += b;
                }
            }
            acc
        })
        .reduce(empty, |mut x, y| {
            for (rx, ry) in x.iter_mut().zip(y) {
                for (a, b) in rx.iter_mut().zip(ry) {
                    *a += b;
                }
            }
            x
        });
    Ok(BettiTable {
        field: h.field().spec(),
        n,
        entries,
    })
}

/// Castelnuovo–Mumford regularity of the Stanley–Reisner ring, from the Betti table.
pub fn regularity<F: Field>(field: &F, complex: &SimplicialComplex) -> Result<usize> {
    Ok(betti_table(field, complex)?.regularity())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearResolution {
    Linear,
    NotLinear,
    /// Missing faces of different dimensions: the ideal is not generated in one degree.
    NotApplicable,
}

/// Whether the Stanley–Reisner ideal has a linear resolution.
pub fn has_linear_resolution<F: Field>(field: &F, complex: &SimplicialComplex) -> Result<LinearResolution> {
    let missing = complex.missing_faces();
    let Some(first) = missing.first() else {
        return Err(Error::NoMissingFaces);
    };
    let k = first.dim();
    if missing.iter().any(|m| m.dim() != k) {
        return Ok(LinearResolution::NotApplicable);
    }
    // Missing faces of dimension k force β_{1,k+1} ≠ 0, so reg ≥ k.
    Ok(if regularity(field, complex)? as i32 <= k {
        LinearResolution::Linear
    } else {
        LinearResolution::NotLinear
    })
}

/// Reisner's criterion: `H̃_i(Lk_F Δ) = 0` for all faces F (including ∅) and all i < dim Lk_F Δ.
pub fn is_cohen_macaulay<F: Field>(field: &F, complex: &SimplicialComplex) -> bool {
    complex.all_faces().into_par_iter().all(|f| {
        let lk = complex.link_unchecked(f);
        let h = InducedHomology::absolute(field, &lk);
        (-1..lk.dim()).all(|i| h.betti(h.support(), i) == 0)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationReport {
    pub k: i32,
    pub field: FieldSpec,
    /// Resolution ℓ-chordality for ℓ ∈ [k, 2k−1].
    pub hypothesis_range: Vec<(i32, bool)>,
    /// Largest missing-face dimension, if any.
    pub max_missing_dim: Option<i32>,
    pub hypotheses_hold: bool,
    /// Resolution ℓ-chordality for ℓ ∈ [k, dim Δ].
    pub conclusion_range: Vec<(i32, bool)>,
    pub leray: usize,
    pub is_k_leray: bool,
    /// Hochster regularity (absent when the ground set is too large to scan).
    pub regularity: Option<usize>,
    /// Rows violating the Herzog–Srinivasan chain, when the table is available.
    pub herzog_srinivasan_violations: Option<Vec<usize>>,
    /// Failed implications; nonempty only if the implementation is wrong.
    pub violations: Vec<String>,
}

impl PropagationReport {
    pub fn conclusions_hold(&self) -> bool {
        self.conclusion_range.iter().all(|&(_, b)| b) && self.is_k_leray
    }
}

/// Evaluates hypotheses and conclusions of chordality propagation in degree k,
/// and the equalities between chordality, the Leray number and regularity.
pub fn check_propagation<F: Field>(field: &F, complex: &SimplicialComplex, k: i32) -> Result<PropagationReport> {
    if k < 0 {
        return Err(Error::InvalidDegree(k));
    }
    let h = InducedHomology::absolute(field, complex);
    let chordal = |l: i32| -> Result<bool> { Ok(first_obstruction(&h, l)?.is_none()) };
    let hypothesis_range = (k..2 * k).map(|l| Ok((l, chordal(l)?))).collect::<Result<Vec<_>>>()?;
    let max_missing_dim = complex.missing_faces().iter().map(|m| m.dim()).max();
    let hypotheses_hold = hypothesis_range.iter().all(|&(_, b)| b) && max_missing_dim.is_none_or(|d| d <= k);
    let conclusion_range = (k..=complex.dim().max(k))
        .map(|l| Ok((l, chordal(l)?)))
        .collect::<Result<Vec<_>>>()?;
    let leray = leray_with(&h)?;
    let is_k_leray = leray as i32 <= k;
    let table = if complex.ground_size() <= SUBSET_SCAN_LIMIT {
        Some(betti_table_with(&h, complex.ground_size())?)
    } else {
        None
    };
    let regularity = table.as_ref().map(BettiTable::regularity);
    let hs = table.as_ref().map(BettiTable::herzog_srinivasan_violations);

    let mut violations = Vec::new();
    if hypotheses_hold {
        for &(l, b) in &conclusion_range {
            if !b {
                violations.push(format!("hypotheses hold but not resolution {l}-chordal"));
            }
        }
        if !is_k_leray {
            violations.push(format!("hypotheses hold but Leray number is {leray} > {k}"));
        }
    }
    // All ℓ ≥ k chordal ⇔ k-Leray (chordality is automatic above the dimension).
    let all_chordal = conclusion_range.iter().all(|&(_, b)| b);
    if all_chordal != is_k_leray {
        violations.push(format!("chordality for all l >= {k} is {all_chordal} but k-Leray is {is_k_leray}"));
    }
    if let Some(r) = regularity {
        if r != leray {
            violations.push(format!("regularity {r} differs from Leray number {leray}"));
        }
    }
    if let Some(rows) = &hs {
        for a in rows {
            violations.push(format!("Herzog-Srinivasan inequality fails at a = {a}"));
        }
    }
    Ok(PropagationReport {
        k,
        field: field.spec(),
        hypothesis_range,
        max_missing_dim,
        hypotheses_hold,
        conclusion_range,
        leray,
        is_k_leray,
        regularity,
        herzog_srinivasan_violations: hs,
        violations,
    })
}
