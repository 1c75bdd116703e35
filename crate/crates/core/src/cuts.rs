//! The face-adjacency graph Γ_k, relative k-cuts, minimal cuts, homology cuts
//! and the reverse-propagation checker.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chordality::is_decomposition_chordal;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::{Field, FieldSpec};
use crate::homology::InducedHomology;

/// Cap on distinct closed vertex sets visited by the homology side check.
const CLOSED_SET_LIMIT: usize = 1 << 16;

/// How a path in Γ_k "meets" a cut.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutMode {
    /// The path crosses a Γ_k-edge whose label is in the cut.
    #[default]
    Edge,
    /// The path visits a k-face containing a member of the cut.
    Face,
}

impl fmt::Display for CutMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutMode::Edge => "edge",
            CutMode::Face => "face",
        })
    }
}

impl FromStr for CutMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edge" => Ok(CutMode::Edge),
            "face" => Ok(CutMode::Face),
            _ => Err(format!("unknown cut mode `{s}` (expected edge or face)")),
        }
    }
}

/// Γ_k Δ: k-faces, adjacent when they share a (k−1)-face, which labels the edge.
#[derive(Clone, Debug)]
pub struct FaceAdjacencyGraph {
    pub k: i32,
    pub nodes: Vec<Face>,
    /// `(i, j, label)` with `i < j` and `label = nodes[i] ∩ nodes[j]`.
    pub edges: Vec<(usize, usize, Face)>,
    adj: Vec<Vec<(usize, Face)>>,
}

pub fn face_adjacency_graph(complex: &SimplicialComplex, k: i32) -> Result<FaceAdjacencyGraph> {
    if k < 0 {
        return Err(Error::InvalidDegree(k));
    }
    let nodes = complex.faces_of_dim(k);
    let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in nodes.iter().enumerate() {
        for r in f.facets() {
            by_ridge.entry(r).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); nodes.len()];
    let mut ridges: Vec<_> = by_ridge.into_iter().collect();
    ridges.sort();
    for (r, members) in ridges {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                edges.push((i, j, r));
                adj[i].push((j, r));
                adj[j].push((i, r));
            }
        }
    }
    edges.sort();
    Ok(FaceAdjacencyGraph { k, nodes, edges, adj })
}

impl FaceAdjacencyGraph {
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Component label of each node once the cut is removed; `None` for
    /// nodes that the cut blocks outright (face mode).
    pub fn components(&self, cut: &HashSet<Face>, mode: CutMode) -> Vec<Option<usize>> {
        let open = |i: usize| mode == CutMode::Edge || !self.nodes[i].facets().any(|r| cut.contains(&r));
        let mut comp = vec![None; self.nodes.len()];
        let mut next = 0;
        for s in 0..self.nodes.len() {
            if comp[s].is_some() || !open(s) {
                continue;
            }
            comp[s] = Some(next);
            let mut queue = VecDeque::from([s]);
            while let Some(i) = queue.pop_front() {
                for &(j, label) in &self.adj[i] {
                    let crossable = match mode {
                        CutMode::Edge => !cut.contains(&label),
                        CutMode::Face => open(j),
                    };
                    if crossable && comp[j].is_none() {
                        comp[j] = Some(next);
                        queue.push_back(j);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        let comp = self.components(&HashSet::new(), CutMode::Edge);
        comp.iter().all(|&c| c == Some(0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub k: i32,
    pub mode: CutMode,
    pub cut: Vec<Face>,
    pub sigma: Face,
    pub tau: Face,
    /// k-faces generating the component of σ (resp. τ).
    pub component_sigma: Vec<Face>,
    pub component_tau: Vec<Face>,
    pub is_cut: bool,
    pub is_minimal: bool,
    pub homology_sigma: Option<bool>,
    pub homology_tau: Option<bool>,
}

impl CutReport {
    pub fn two_sided(&self) -> Option<bool> {
        Some(self.homology_sigma? && self.homology_tau?)
    }

    pub fn to_json(&self, complex: &SimplicialComplex) -> Value {
        let faces = |fs: &[Face]| fs.iter().map(|&f| complex.face_labels(f)).collect::<Vec<_>>();
        json!({
            "k": self.k,
            "mode": self.mode,
            "cut": faces(&self.cut),
            "sigma": complex.face_labels(self.sigma),
            "tau": complex.face_labels(self.tau),
            "component_sigma": faces(&self.component_sigma),
            "component_tau": faces(&self.component_tau),
            "is_cut": self.is_cut,
            "is_minimal": self.is_minimal,
            "homology_sigma": self.homology_sigma,
            "homology_tau": self.homology_tau,
            "two_sided": self.two_sided(),
        })
    }
}

/// Shared state for repeated cut queries on one complex in one degree.
pub struct CutContext<'a, F: Field> {
    complex: &'a SimplicialComplex,
    k: i32,
    mode: CutMode,
    graph: FaceAdjacencyGraph,
    /// Homology of `Δ^(k)`, used to decide boundaries of cut cycles.
    skeleton: InducedHomology<F>,
}

impl<'a, F: Field> CutContext<'a, F> {
    pub fn new(field: &F, complex: &'a SimplicialComplex, k: i32, mode: CutMode) -> Result<Self> {
        let graph = face_adjacency_graph(complex, k)?;
        Ok(CutContext {
            complex,
            k,
            mode,
            graph,
            skeleton: InducedHomology::absolute(field, &complex.skeleton(k)),
        })
    }

    pub fn graph(&self) -> &FaceAdjacencyGraph {
        &self.graph
    }

    fn containing(&self, f: Face) -> Vec<usize> {
        (0..self.graph.nodes.len()).filter(|&i| f.is_subset_of(self.graph.nodes[i])).collect()
    }

    fn check_endpoint(&self, f: Face) -> Result<Vec<usize>> {
        let s = self.containing(f);
        if s.is_empty() {
            return Err(Error::CutPrecondition(format!(
                "{} lies in no {}-face",
                self.complex.format_face(f),
                self.k
            )));
        }
        Ok(s)
    }

    fn check_cut_faces(&self, cut: &[Face]) -> Result<()> {
        if let Some(&c) = cut.iter().find(|c| c.dim() != self.k - 1 || !self.complex.contains(**c)) {
            return Err(Error::CutPrecondition(format!(
                "{} is not a {}-face of the complex",
                self.complex.format_face(c),
                self.k - 1
            )));
        }
        Ok(())
    }

    fn separates(&self, cut: &HashSet<Face>, sources: &[usize], targets: &[usize]) -> (bool, Vec<Option<usize>>) {
        let comp = self.graph.components(cut, self.mode);
        let reached: HashSet<usize> = sources.iter().filter_map(|&i| comp[i]).collect();
        let sep = targets.iter().all(|&j| comp[j].is_none_or(|c| !reached.contains(&c)));
        (sep, comp)
    }

    fn component_faces(&self, comp: &[Option<usize>], seeds: &[usize]) -> Vec<Face> {
        let ids: HashSet<usize> = seeds.iter().filter_map(|&i| comp[i]).collect();
        (0..comp.len())
            .filter(|&i| comp[i].is_some_and(|c| ids.contains(&c)))
            .map(|i| self.graph.nodes[i])
            .collect()
    }

    /// Decides whether `cut` separates σ from τ and whether it is inclusion-minimal.
    pub fn is_cut(&self, cut: &[Face], sigma: Face, tau: Face) -> Result<CutReport> {
        self.check_cut_faces(cut)?;
        let sources = self.check_endpoint(sigma)?;
        let targets = self.check_endpoint(tau)?;
        let mut cut: Vec<Face> = cut.to_vec();
        cut.sort();
        cut.dedup();
        let set: HashSet<Face> = cut.iter().copied().collect();
        let (is_cut, comp) = self.separates(&set, &sources, &targets);
        let is_minimal = is_cut
            && cut.iter().all(|c| {
                let mut smaller = set.clone();
                smaller.remove(c);
                !self.separates(&smaller, &sources, &targets).0
            });
        Ok(CutReport {
            k: self.k,
            mode: self.mode,
            component_sigma: self.component_faces(&comp, &sources),
            component_tau: self.component_faces(&comp, &targets),
            cut,
            sigma,
            tau,
            is_cut,
            is_minimal,
            homology_sigma: None,
            homology_tau: None,
        })
    }

    /// Greedy inclusion-minimal cut, starting from the (k−1)-faces of the
    /// k-faces containing σ and dropping members in lexicographic order.
    pub fn minimal_cut(&self, sigma: Face, tau: Face) -> Result<CutReport> {
        if self.graph.nodes.len() < 2 {
            return Err(Error::CutPrecondition(format!("fewer than two {}-faces", self.k)));
        }
        let sources = self.check_endpoint(sigma)?;
        let targets = self.check_endpoint(tau)?;
        if sources.iter().any(|s| targets.contains(s)) {
            return Err(Error::CutPrecondition(format!(
                "a {}-face contains both {} and {}",
                self.k,
                self.complex.format_face(sigma),
                self.complex.format_face(tau)
            )));
        }
        let mut start: Vec<Face> = sources.iter().flat_map(|&i| self.graph.nodes[i].facets()).collect();
        start.sort();
        start.dedup();
        let mut set: HashSet<Face> = start.iter().copied().collect();
        for c in &start {
            set.remove(c);
            if !self.separates(&set, &sources, &targets).0 {
                set.insert(*c);
            }
        }
        let cut: Vec<Face> = start.into_iter().filter(|c| set.contains(c)).collect();
        self.is_cut(&cut, sigma, tau)
    }

    /// Per-side homology condition for a cut: every (k−1)-cycle z of the cut
    /// complex bounds a k-chain of the side meeting the cut's vertices only in
    /// z's support. Decided once per closed vertex set W (W equal to the
    /// support of the cycles living on W). Closed sets are reached by
    /// descending from the full cycle support: every closed W' ⊊ W lies in
    /// the closure of some `W − v`.
    pub fn side_is_homology(&self, cut: &[Face], side: &[Face]) -> Result<bool> {
        let field = self.skeleton.field();
        let cx = SimplicialComplex::from_facets(self.complex.labels().clone(), cut.iter().copied());
        let h = InducedHomology::absolute(field, &cx);
        let cv = cx.vertex_set();
        let top = h.cycle_support(cv, self.k - 1);
        let mut seen: HashSet<Face> = HashSet::from([top]);
        let mut stack = vec![top];
        while let Some(w) = stack.pop() {
            if w.is_empty() {
                continue;
            }
            if seen.len() > CLOSED_SET_LIMIT {
                return Err(Error::TooLarge(top.len()));
            }
            let basis = h.cycle_basis(w, self.k - 1);
            let allowed = side.iter().copied().filter(|f| f.intersection(cv).is_subset_of(w));
            let image = self.skeleton.image_of(allowed);
            if !basis.iter().all(|z| image.contains(&self.skeleton.coordinates(z))) {
                return Ok(false);
            }
            for v in w.vertices() {
                let child = h.cycle_support(w.without(v), self.k - 1);
                if seen.insert(child) {
                    stack.push(child);
                }
            }
        }
        Ok(true)
    }

    /// [`Self::is_cut`] with both homology flags filled in.
    pub fn is_homology_cut(&self, cut: &[Face], sigma: Face, tau: Face) -> Result<CutReport> {
        if self.k < 1 {
            return Err(Error::InvalidDegree(self.k));
        }
        let mut r = self.is_cut(cut, sigma, tau)?;
        if !r.is_cut {
            return Err(Error::CutPrecondition("not a cut".into()));
        }
        r.homology_sigma = Some(self.side_is_homology(&r.cut, &r.component_sigma)?);
        r.homology_tau = Some(self.side_is_homology(&r.cut, &r.component_tau)?);
        Ok(r)
    }

    /// Components left by removing the (k−1)-faces of `eLk_σ Δ`, each with its
    /// homology flag; two-sided pairs exist iff two components are flagged.
    pub fn extended_link_components(&self, sigma: Face) -> Result<ElkComponents> {
        let cut = extended_link_cut(self.complex, sigma, self.k)?;
        let set: HashSet<Face> = cut.iter().copied().collect();
        let comp = self.graph.components(&set, self.mode);
        let count = comp.iter().flatten().max().map_or(0, |m| m + 1);
        let mut components = Vec::with_capacity(count);
        for c in 0..count {
            let faces: Vec<Face> = (0..comp.len())
                .filter(|&i| comp[i] == Some(c))
                .map(|i| self.graph.nodes[i])
                .collect();
            components.push(ElkComponent {
                representative: faces[0],
                size: faces.len(),
                homology: self.side_is_homology(&cut, &faces)?,
            });
        }
        let flagged: Vec<Face> = components.iter().filter(|c| c.homology).map(|c| c.representative).collect();
        Ok(ElkComponents {
            sigma,
            cut,
            two_sided_pair: (flagged.len() >= 2).then(|| (flagged[0], flagged[1])),
            components,
        })
    }
}

/// The (k−1)-faces of `eLk_σ Δ`.
pub fn extended_link_cut(complex: &SimplicialComplex, sigma: Face, k: i32) -> Result<Vec<Face>> {
    Ok(complex.extended_link(sigma)?.faces_of_dim(k - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElkComponent {
    pub representative: Face,
    pub size: usize,
    pub homology: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElkComponents {
    pub sigma: Face,
    pub cut: Vec<Face>,
    pub components: Vec<ElkComponent>,
    /// Two k-faces in different flagged components, if any.
    pub two_sided_pair: Option<(Face, Face)>,
}

pub fn is_cut(complex: &SimplicialComplex, cut: &[Face], sigma: Face, tau: Face, k: i32, mode: CutMode) -> Result<CutReport> {
    CutContext::new(&crate::field::PrimeField::new(2), complex, k, mode)?.is_cut(cut, sigma, tau)
}

pub fn minimal_cut(complex: &SimplicialComplex, sigma: Face, tau: Face, k: i32, mode: CutMode) -> Result<CutReport> {
    CutContext::new(&crate::field::PrimeField::new(2), complex, k, mode)?.minimal_cut(sigma, tau)
}

pub fn is_homology_cut<F: Field>(
    field: &F,
    complex: &SimplicialComplex,
    cut: &[Face],
    sigma: Face,
    tau: Face,
    k: i32,
    mode: CutMode,
) -> Result<CutReport> {
    CutContext::new(field, complex, k, mode)?.is_homology_cut(cut, sigma, tau)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutRoute {
    /// Found along the τ → τ′ → σ′ → σ refinement.
    Constructive,
    /// Found by scanning all faces of dimension ≤ k−1.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElkCut {
    pub sigma: Face,
    pub route: CutRoute,
    /// Cut relative to σ and this k-face, with homology flags.
    pub report: CutReport,
}

/// A face σ with dim σ ≤ k−1 whose extended link is a minimal k-cut
/// (relative to σ and some k-face outside its star).
pub fn find_extended_link_minimal_cut<F: Field>(field: &F, complex: &SimplicialComplex, k: i32, mode: CutMode) -> Result<ElkCut> {
    if k < 1 {
        return Err(Error::InvalidDegree(k));
    }
    let pre = |m: &str| Err(Error::CutPrecondition(m.into()));
    if !complex.is_pure() || complex.dim() != k {
        return pre(&format!("the complex must be pure of dimension {k}"));
    }
    let ctx = CutContext::new(field, complex, k, mode)?;
    let nodes = &ctx.graph.nodes;
    if nodes.len() < 2 {
        return pre(&format!("fewer than two {k}-faces"));
    }
    if !ctx.graph.is_connected() {
        return pre("the face-adjacency graph is disconnected");
    }

    let minimal_for = |sigma: Face| -> Result<Option<CutReport>> {
        let cut = extended_link_cut(complex, sigma, k)?;
        for &t in nodes.iter().filter(|t| !sigma.is_subset_of(**t)) {
            let r = ctx.is_cut(&cut, sigma, t)?;
            if r.is_minimal {
                return Ok(Some(r));
            }
        }
        Ok(None)
    };
    let finish = |sigma: Face, route: CutRoute, r: CutReport| -> Result<ElkCut> {
        let report = ctx.is_homology_cut(&r.cut, sigma, r.tau)?;
        Ok(ElkCut { sigma, route, report })
    };

    // Constructive route: a ridge τ whose extended link cuts, then refine.
    let ridges = complex.faces_of_dim(k - 1);
    let star = |f: Face| -> Vec<Face> { nodes.iter().copied().filter(|t| f.is_subset_of(*t)).collect() };
    let cutting = ridges.iter().copied().find(|&tau| {
        let cut = extended_link_cut(complex, tau, k).unwrap_or_default();
        nodes
            .iter()
            .filter(|t| !tau.is_subset_of(**t))
            .any(|&t| ctx.is_cut(&cut, tau, t).is_ok_and(|r| r.is_cut))
    });
    if let Some(tau) = cutting {
        if let Some(r) = minimal_for(tau)? {
            return finish(tau, CutRoute::Constructive, r);
        }
        let st_tau = star(tau);
        let tau2 = extended_link_cut(complex, tau, k)?
            .into_iter()
            .find(|&t2| star(t2).iter().all(|f| st_tau.contains(f)));
        if let Some(t2) = tau2 {
            let sigma2 = tau.union(t2);
            let free: Vec<Face> = sigma2.facets().filter(|&f| star(f) == [sigma2]).collect();
            if let Some(first) = free.first() {
                let sigma = free.iter().fold(*first, |a, &f| a.intersection(f));
                if !sigma.is_empty() {
                    if let Some(r) = minimal_for(sigma)? {
                        return finish(sigma, CutRoute::Constructive, r);
                    }
                }
            }
        }
    }
    let mut faces: Vec<Face> = complex
        .all_faces()
        .into_iter()
        .filter(|f| (0..k).contains(&f.dim()))
        .collect();
    faces.sort();
    for sigma in faces {
        if let Some(r) = minimal_for(sigma)? {
            return finish(sigma, CutRoute::Exhaustive, r);
        }
    }
    pre("no extended link is a minimal cut")
}

/// Whether the k-faces of `eLk_σ Δ` separate (k+1)-faces of `Δ^(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HigherCut {
    /// Separates these two (k+1)-faces.
    Pair(Face, Face),
    /// Fewer than two (k+1)-faces: there is nothing to separate.
    Vacuous,
    NotACut,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversePropagationReport {
    pub k: i32,
    pub sigma: Face,
    pub field: FieldSpec,
    pub mode: CutMode,
    /// Δ is decomposition k-chordal.
    pub decomposition_chordal: bool,
    /// Two k-faces relative to which the extended link is a two-sided homology k-cut of `Δ^(k)`.
    pub two_sided_pair: Option<(Face, Face)>,
    pub higher_cut: HigherCut,
    pub hypotheses_hold: bool,
    /// `eLk_σ Δ` is decomposition (k−1)-chordal.
    pub conclusion: bool,
}

impl ReversePropagationReport {
    /// False only if every hypothesis holds while the conclusion fails.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold || self.conclusion
    }

    pub fn to_json(&self, complex: &SimplicialComplex) -> Value {
        let pair = |p: Option<(Face, Face)>| p.map(|(a, b)| [complex.face_labels(a), complex.face_labels(b)]);
        let higher = match self.higher_cut {
            HigherCut::Pair(a, b) => json!({"separates": [complex.face_labels(a), complex.face_labels(b)]}),
            HigherCut::Vacuous => json!("vacuous"),
            HigherCut::NotACut => json!(null),
        };
        json!({
            "k": self.k,
            "sigma": complex.face_labels(self.sigma),
            "field": self.field.to_string(),
            "mode": self.mode,
            "decomposition_chordal": self.decomposition_chordal,
            "two_sided_pair": pair(self.two_sided_pair),
            "higher_cut": higher,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion": self.conclusion,
            "consistent": self.consistent(),
        })
    }
}

pub fn check_reverse_propagation<F: Field>(
    field: &F,
    complex: &SimplicialComplex,
    sigma: Face,
    k: i32,
    mode: CutMode,
) -> Result<ReversePropagationReport> {
    if k < 1 {
        return Err(Error::InvalidDegree(k));
    }
    if !complex.contains(sigma) || sigma.dim() != k {
        return Err(Error::Hypothesis(format!("{} is not a {k}-face", complex.format_face(sigma))));
    }
    let decomposition_chordal = is_decomposition_chordal(field, complex, k)?.holds;

    let sk = complex.skeleton(k);
    let two_sided_pair = CutContext::new(field, &sk, k, mode)?
        .extended_link_components(sigma)?
        .two_sided_pair;

    let sk1 = complex.skeleton(k + 1);
    let graph = face_adjacency_graph(&sk1, k + 1)?;
    let higher_cut = if graph.nodes.len() < 2 {
        HigherCut::Vacuous
    } else {
        let cut: HashSet<Face> = complex.extended_link(sigma)?.faces_of_dim(k).into_iter().collect();
        let comp = graph.components(&cut, mode);
        let first = (0..comp.len()).find(|&i| comp[i].is_some());
        let other = first.and_then(|i| (0..comp.len()).find(|&j| comp[j].is_some() && comp[j] != comp[i]).map(|j| (i, j)));
        match other {
            Some((i, j)) => HigherCut::Pair(graph.nodes[i], graph.nodes[j]),
            None => HigherCut::NotACut,
        }
    };

    let hypotheses_hold = decomposition_chordal && two_sided_pair.is_some() && higher_cut != HigherCut::NotACut;
    let conclusion = is_decomposition_chordal(field, &complex.extended_link(sigma)?, k - 1)?.holds;
    Ok(ReversePropagationReport {
        k,
        sigma,
        field: field.spec(),
        mode,
        decomposition_chordal,
        two_sided_pair,
        higher_cut,
        hypotheses_hold,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::field::Rationals;

    fn path() -> SimplicialComplex {
        SimplicialComplex::build(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap()
    }

    fn v(i: usize) -> Face {
        Face::vertex(i)
    }

    /// All subsets of the (k−1)-faces that separate σ from τ, by brute force.
    fn all_cuts(c: &SimplicialComplex, sigma: Face, tau: Face, k: i32) -> Vec<Vec<Face>> {
        let ridges = c.faces_of_dim(k - 1);
        let mut out = Vec::new();
        for mask in 0u32..1 << ridges.len() {
            let cut: Vec<Face> = (0..ridges.len()).filter(|i| mask >> i & 1 == 1).map(|i| ridges[i]).collect();
            if is_cut(c, &cut, sigma, tau, k, CutMode::Edge).unwrap().is_cut {
                out.push(cut);
            }
        }
        out
    }

    #[test]
    fn adjacency_graphs() {
        let g = face_adjacency_graph(&path(), 1).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges, vec![(0, 1, v(1))]);
        let g = face_adjacency_graph(&corpus::simplex(2), 1).unwrap();
        assert_eq!(g.edges.len(), 3);
        let g = face_adjacency_graph(&corpus::octahedron(), 2).unwrap();
        assert_eq!(g.nodes.len(), 8);
        assert!((0..8).all(|i| g.degree(i) == 3));
        for &(i, j, l) in &g.edges {
            assert_eq!(g.nodes[i].intersection(g.nodes[j]), l);
        }
    }

    #[test]
    fn vertex_cuts_in_graphs() {
        let r = is_cut(&path(), &[v(1)], v(0), v(2), 1, CutMode::Edge).unwrap();
        assert!(r.is_cut && r.is_minimal);
        assert_eq!(r.component_sigma, vec![Face::from_indices([0, 1])]);
        let c4 = corpus::cycle(4);
        assert!(!is_cut(&c4, &[v(1)], v(0), v(2), 1, CutMode::Edge).unwrap().is_cut);
        assert!(is_cut(&c4, &[v(1), v(3)], v(0), v(2), 1, CutMode::Edge).unwrap().is_cut);
        assert!(matches!(
            is_cut(&c4, &[Face::from_indices([0, 1])], v(0), v(2), 1, CutMode::Edge),
            Err(Error::CutPrecondition(_))
        ));
    }

    #[test]
    fn boundary_of_a_face_is_a_cut() {
        let oct = corpus::octahedron();
        let tris = oct.faces_of_dim(2);
        for &s in &tris {
            let cut: Vec<Face> = s.facets().collect();
            for &t in tris.iter().filter(|&&t| t != s) {
                assert!(is_cut(&oct, &cut, s, t, 2, CutMode::Edge).unwrap().is_cut);
            }
        }
    }

    #[test]
    fn minimal_cuts_match_brute_force() {
        assert_eq!(minimal_cut(&path(), v(0), v(2), 1, CutMode::Edge).unwrap().cut, vec![v(1)]);
        // Two triangles abc, bcd sharing bc, as a graph.
        let g = SimplicialComplex::build(
            &["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"], vec!["b", "d"], vec!["c", "d"]],
        )
        .unwrap();
        let r = minimal_cut(&g, v(0), v(3), 1, CutMode::Edge).unwrap();
        assert_eq!(r.cut, vec![v(1), v(2)]);
        let cuts = all_cuts(&g, v(0), v(3), 1);
        assert!(cuts.contains(&r.cut));
        assert!(!cuts.iter().any(|c| c.len() < r.cut.len() && c.iter().all(|f| r.cut.contains(f))));

        let oct = corpus::octahedron();
        let s = oct.face_from_labels(&["1", "2", "3"]).unwrap();
        let t = oct.face_from_labels(&["-1", "-2", "-3"]).unwrap();
        let r = minimal_cut(&oct, s, t, 2, CutMode::Edge).unwrap();
        assert_eq!(r.cut.len(), 3);
        assert!(r.is_minimal);
        let cuts = all_cuts(&oct, s, t, 2);
        assert!(!cuts.iter().any(|c| c.len() < 3 && c.iter().all(|f| r.cut.contains(f))));
    }

    #[test]
    fn face_mode_blocks_faces() {
        // In face mode the path's first edge already touches {b}.
        let r = is_cut(&path(), &[v(1)], v(0), v(2), 1, CutMode::Face).unwrap();
        assert!(r.is_cut);
        assert!(r.component_sigma.is_empty());
    }

    #[test]
    fn extended_link_cut_on_a_path() {
        let r = find_extended_link_minimal_cut(&Rationals, &path(), 1, CutMode::Edge).unwrap();
        assert_eq!(r.sigma, v(0));
        assert_eq!(r.report.cut, vec![v(1)]);
        assert!(r.report.is_minimal);
        assert_eq!(r.report.homology_sigma, Some(true));
        let k4 = corpus::simplex(3).skeleton(1);
        assert!(matches!(
            find_extended_link_minimal_cut(&Rationals, &k4, 1, CutMode::Edge),
            Err(Error::CutPrecondition(_))
        ));
    }

    #[test]
    fn extended_link_cuts_on_surfaces() {
        for c in [corpus::octahedron(), corpus::glued_sheets()] {
            let r = find_extended_link_minimal_cut(&Rationals, &c, 2, CutMode::Edge).unwrap();
            assert!(r.report.is_minimal);
            assert_eq!(r.report.homology_sigma, Some(true));
            assert_eq!(r.report.cut, c.extended_link(r.sigma).unwrap().faces_of_dim(1));
            let all = all_cuts(&c, r.sigma, r.report.tau, 2);
            assert!(!all
                .iter()
                .any(|x| x.len() < r.report.cut.len() && x.iter().all(|f| r.report.cut.contains(f))));
        }
    }

    #[test]
    fn minimal_cuts_in_chordal_graphs_are_two_sided() {
        for seed in 0..20 {
            let g = corpus::random_chordal_graph(8, seed);
            let ctx = CutContext::new(&Rationals, &g, 1, CutMode::Edge).unwrap();
            let verts = g.vertex_set().to_vec();
            for &a in &verts {
                for &b in verts.iter().filter(|&&b| b > a) {
                    if g.contains(Face::from_indices([a, b])) {
                        continue;
                    }
                    let Ok(r) = ctx.minimal_cut(v(a), v(b)) else { continue };
                    if !r.is_cut {
                        continue;
                    }
                    let r = ctx.is_homology_cut(&r.cut, v(a), v(b)).unwrap();
                    assert_eq!(r.two_sided(), Some(true), "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn vertex_cuts_of_cycles_bound_on_both_sides() {
        // The 0-cycle 2 − 5 bounds along 2-1-5 and along 2-3-4-5.
        let c5 = corpus::cycle(5);
        let r = is_homology_cut(&Rationals, &c5, &[v(1), v(4)], v(0), v(2), 1, CutMode::Edge).unwrap();
        assert_eq!(r.homology_sigma, Some(true));
        assert_eq!(r.homology_tau, Some(true));
        let c4 = corpus::cycle(4);
        let r = is_homology_cut(&Rationals, &c4, &[v(1), v(3)], v(0), v(2), 1, CutMode::Edge).unwrap();
        assert_eq!(r.two_sided(), Some(true));
    }

    #[test]
    fn dunce_hat_extended_links_are_one_sided() {
        let d = corpus::dunce8().unwrap();
        let ctx = CutContext::new(&Rationals, &d, 2, CutMode::Edge).unwrap();
        for s in d.all_faces().into_iter().filter(|f| !f.is_empty()) {
            let e = ctx.extended_link_components(s).unwrap();
            assert!(e.two_sided_pair.is_none(), "{}", d.format_face(s));
        }
    }

    #[test]
    fn reverse_propagation_on_chordal_graphs() {
        let mut held = 0;
        for seed in 0..10 {
            let g = corpus::random_chordal_graph(7, seed);
            for e in g.faces_of_dim(1) {
                let r = check_reverse_propagation(&Rationals, &g, e, 1, CutMode::Edge).unwrap();
                assert!(r.consistent());
                held += r.hypotheses_hold as usize;
            }
        }
        assert!(held > 0);
        let d = corpus::dunce8().unwrap();
        for t in d.faces_of_dim(2) {
            let r = check_reverse_propagation(&Rationals, &d, t, 2, CutMode::Edge).unwrap();
            assert!(r.decomposition_chordal);
            assert!(r.two_sided_pair.is_none());
            assert!(r.consistent());
        }
    }
}
