//! Shared fixtures and independent oracles for the integration suites.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use chordal_complexes::chain::{boundary, Chain};
use chordal_complexes::chordality::{is_relative_resolution_chordal, is_resolution_chordal};
use chordal_complexes::corpus::{self, CorpusSpec, NAMED};
use chordal_complexes::homology::{betti, relative_betti};
use chordal_complexes::{Face, Field, PrimeField, Rationals, RelativeComplex, SimplicialComplex};

/// Named complexes plus small parametric families.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let extra = [
        "cycle(4)",
        "cycle(5)",
        "cycle(6)",
        "simplex(3)",
        "boundary(3)",
        "skeleton(simplex(4),2)",
        "cone(cycle(5))",
        "join(cycle(4),cycle(3))",
        "jk(2)",
        "jk(3)",
        "chordal_graph(8,3)",
        "flag(8,45,2)",
        "pure(7,2,30,1)",
    ];
    NAMED
        .iter()
        .copied()
        .chain(extra)
        .map(|s| {
            let spec: CorpusSpec = s.parse().unwrap();
            (s.to_string(), spec.build().unwrap())
        })
        .collect()
}

/// Corpus members with at most `max` ground vertices.
pub fn small_corpus(max: usize) -> Vec<(String, SimplicialComplex)> {
    corpus().into_iter().filter(|(_, c)| c.ground_size() <= max).collect()
}

// ---------------------------------------------------------------------------
// Dense linear algebra and homology, written without the library's kernels.

pub fn dense_rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]);
        let pivot: Vec<F::Elem> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let m = rows[r][col].clone();
                for c in col..ncols {
                    rows[r][c] = field.sub(&rows[r][c], &field.mul(&m, &pivot[c]));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Dense matrix of the relative boundary `C_k → C_{k−1}` (columns are k-faces).
fn boundary_matrix<F: Field>(field: &F, pair: &RelativeComplex, k: i32) -> Vec<Vec<F::Elem>> {
    let cols = pair.relative_faces(k);
    let rows = pair.relative_faces(k - 1);
    let mut m = vec![vec![field.zero(); cols.len()]; rows.len()];
    for (j, &s) in cols.iter().enumerate() {
        for (i, u) in s.vertices().enumerate() {
            if let Some(r) = rows.iter().position(|&t| t == s.without(u)) {
                m[r][j] = field.from_i64(if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

/// Reduced relative Betti number by dense ranks.
pub fn oracle_betti<F: Field>(field: &F, pair: &RelativeComplex, k: i32) -> usize {
    let ck = pair.relative_faces(k).len();
    let rk = dense_rank(field, boundary_matrix(field, pair, k));
    let rk1 = dense_rank(field, boundary_matrix(field, pair, k + 1));
    ck - rk - rk1
}

/// Resolution k-chordality from the definition: every vertex subset, homology recomputed.
pub fn oracle_resolution_chordal<F: Field>(field: &F, c: &SimplicialComplex, k: i32) -> bool {
    c.vertex_set()
        .all_subsets()
        .all(|v| oracle_betti(field, &RelativeComplex::absolute(c.induced(v)), k) == 0)
}

// ---------------------------------------------------------------------------
// Graph chordality by lexicographic breadth-first search.

fn adjacency(g: &SimplicialComplex) -> Vec<Face> {
    let mut adj = vec![Face::EMPTY; g.ground_size()];
    for e in g.faces_of_dim(1) {
        let v = e.to_vec();
        adj[v[0]] = adj[v[0]].with(v[1]);
        adj[v[1]] = adj[v[1]].with(v[0]);
    }
    adj
}

/// LexBFS order followed by the perfect-elimination test on its reverse.
pub fn chordal_by_lexbfs(g: &SimplicialComplex) -> bool {
    let adj = adjacency(g);
    let verts = g.vertex_set().to_vec();
    let mut labels: Vec<(Vec<usize>, usize)> = verts.iter().map(|&v| (Vec::new(), v)).collect();
    let mut order = Vec::new();
    let n = verts.len();
    while !labels.is_empty() {
        let best = (0..labels.len())
            .max_by(|&a, &b| labels[a].0.cmp(&labels[b].0).then(labels[b].1.cmp(&labels[a].1)))
            .unwrap();
        let (_, v) = labels.remove(best);
        let step = n - order.len();
        for (lab, u) in labels.iter_mut() {
            if adj[v].contains(*u) {
                lab.push(step);
            }
        }
        order.push(v);
    }
    // Reverse LexBFS is a perfect elimination order iff the graph is chordal.
    let pos: std::collections::HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for &v in &order {
        let earlier: Vec<usize> = adj[v].vertices().filter(|u| pos[u] < pos[&v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|u| pos[*u]) {
            if earlier.iter().any(|&u| u != parent && !adj[parent].contains(u)) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Lemma suites. Each returns a tally; violations carry a description.

#[derive(Default, Debug)]
pub struct Tally {
    pub instances: usize,
    /// Instances where the implication's hypotheses held.
    pub hits: usize,
    pub violations: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.hits += other.hits;
        self.violations.extend(other.violations);
    }
}

fn res<F: Field>(field: &F, c: &SimplicialComplex, k: i32) -> bool {
    k < 0 || is_resolution_chordal(field, c, k).unwrap().holds
}

/// Small random complexes used by the lemma suites.
pub fn lemma_family(seed: u64) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for s in 0..8 {
        let s = seed * 100 + s;
        out.push(corpus::random_pure(6, 2, 35 + (s % 4) as u32 * 10, s));
        out.push(corpus::random_graph(6, 50, s).clique_complex(1));
        out.push(corpus::random_chordal_graph(7, s).clique_complex(1));
    }
    out.push(corpus::octahedron());
    out.push(corpus::cone(&corpus::cycle(4)).unwrap());
    out
}

/// Star pairs of vertices against their links, as homology and as chordality.
pub fn cone_suite(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = Rationals;
    let f2 = PrimeField::new(2);
    for c in lemma_family(seed) {
        for v in c.vertex_set().vertices() {
            let vf = Face::vertex(v);
            let pair = RelativeComplex::star_pair(&c, vf).unwrap();
            let lk = c.link(vf).unwrap();
            let mut ok = true;
            for k in 0..=c.dim() + 1 {
                ok &= relative_betti(&q, &pair, k).betti == betti(&q, &lk, k - 1).betti;
                ok &= relative_betti(&f2, &pair, k).betti == betti(&f2, &lk, k - 1).betti;
                if k >= 1 {
                    ok &= is_relative_resolution_chordal(&q, &pair, k).unwrap().holds == res(&q, &lk, k - 1);
                }
            }
            t.check(ok, || format!("cone lemma fails at vertex {} of {:?}", c.label(v), c.facets()));
        }
    }
    t
}

/// Star pairs of faces of dimension ≥ 1 against extended links.
pub fn extended_cone_suite(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = Rationals;
    for c in lemma_family(seed) {
        for tau in c.all_faces().into_iter().filter(|f| f.dim() >= 1) {
            let pair = RelativeComplex::star_pair(&c, tau).unwrap();
            let elk = c.extended_link(tau).unwrap();
            let mut ok = true;
            for k in 0..=c.dim() + 1 {
                ok &= relative_betti(&q, &pair, k).betti == betti(&q, &elk, k - 1).betti;
                if k >= 1 && res(&q, &elk, k - 1) {
                    t.hits += 1;
                    ok &= is_relative_resolution_chordal(&q, &pair, k).unwrap().holds;
                }
            }
            t.check(ok, || format!("extended cone lemma fails at {}", c.format_face(tau)));
        }
    }
    t
}

/// The suspension of a circle by an edge: the star pair of the edge is
/// resolution 2-chordal while the extended link is not resolution 1-chordal.
pub fn extended_cone_converse_fixture() -> (bool, bool) {
    let q = Rationals;
    let c = SimplicialComplex::build(
        &["a", "b", "x", "y", "z"],
        &[vec!["a", "b", "x", "y"], vec!["a", "b", "y", "z"], vec!["a", "b", "x", "z"]],
    )
    .unwrap();
    let tau = c.face_from_labels(&["a", "b"]).unwrap();
    let pair = RelativeComplex::star_pair(&c, tau).unwrap();
    (
        is_relative_resolution_chordal(&q, &pair, 2).unwrap().holds,
        res(&q, &c.extended_link(tau).unwrap(), 1),
    )
}

/// Links of ℓ-faces inherit (k−ℓ−1)-chordality.
pub fn links_suite(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = Rationals;
    for c in lemma_family(seed) {
        let chordal: Vec<bool> = (0..=c.dim() + 1).map(|j| res(&q, &c, j)).collect();
        for face in c.all_faces().into_iter().filter(|f| !f.is_empty()) {
            let l = face.dim();
            let lk = c.link(face).unwrap();
            for k in (l + 1)..=c.dim() + 1 {
                let low = k - l - 1;
                let hyp = (low..=k).all(|j| chordal[j as usize]);
                if hyp {
                    t.hits += 1;
                }
                t.check(!hyp || res(&q, &lk, low), || {
                    format!("links lemma fails at {} with k = {k}", c.format_face(face))
                });
            }
        }
    }
    t
}

/// The cone over a square: resolution 2-chordal, not 1-chordal, and the
/// link of the apex is neither resolution nor decomposition 1-chordal.
pub fn links_tightness_fixture() -> bool {
    use chordal_complexes::chordality::is_decomposition_chordal;
    let q = Rationals;
    let c = corpus::cone(&corpus::cycle(4)).unwrap();
    let apex = Face::vertex(c.ground_size() - 1);
    let lk = c.link(apex).unwrap();
    res(&q, &c, 2) && !res(&q, &c, 1) && !res(&q, &lk, 1) && !is_decomposition_chordal(&q, &lk, 1).unwrap().holds
}

/// Joins with a d-cycle's support lower chordality by d+1.
pub fn join_suite(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = Rationals;
    let points = SimplicialComplex::build(&["p", "q"], &[vec!["p"], vec!["q"]]).unwrap();
    let cycles = [(points, 0), (corpus::cycle(3), 1), (corpus::cycle(4), 1)];
    for s in 0..6 {
        let s = seed * 100 + s;
        let bases = [corpus::random_pure(5, 1, 50, s), corpus::random_pure(5, 2, 40, s)];
        for base in &bases {
            for (cyc, d) in &cycles {
                let j = corpus::join_fresh(base, cyc).unwrap();
                for k in (d + 1)..=j.dim() {
                    let hyp = res(&q, &j, k);
                    if hyp {
                        t.hits += 1;
                    }
                    t.check(!hyp || res(&q, base, k - d - 1), || {
                        format!("join lemma fails for {:?} with d = {d}, k = {k}", base.facets())
                    });
                }
            }
        }
    }
    t
}

/// Pairs of complexes on a common ground set for the gluing suite.
pub fn gluing_pairs(seed: u64) -> Vec<(SimplicialComplex, SimplicialComplex)> {
    let mut out = Vec::new();
    for s in 0..10 {
        let s = seed * 100 + s;
        let x = corpus::random_chordal_graph(7, s).clique_complex(1);
        let a = Face::from_indices([0, 1, 2, 3, 4]);
        let b = Face::from_indices([2, 3, 4, 5, 6]).without((s % 3) as usize + 2);
        out.push((x.induced(a), x.induced(b.union(Face::vertex(3)))));
        let y = corpus::random_pure(7, 2, 30, s);
        out.push((y.induced(a), y.induced(Face::from_indices([1, 3, 4, 5, 6]))));
        let p = corpus::random_pure(6, 2, 40, s);
        let r = corpus::random_pure(6, 2, 40, s + 7);
        out.push((p, r));
    }
    out
}

/// The three gluing implications in degrees 1 and 2.
pub fn gluing_suite(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = Rationals;
    for (d, g) in gluing_pairs(seed) {
        let m = d.union(&g).unwrap();
        let i = d.intersection(&g).unwrap();
        let rel = RelativeComplex::new(g.clone(), i.clone()).unwrap();
        for k in 1..=2 {
            let (dk, gk, mk, ik, ik1) = (res(&q, &d, k), res(&q, &g, k), res(&q, &m, k), res(&q, &i, k), res(&q, &i, k - 1));
            let relk = is_relative_resolution_chordal(&q, &rel, k).unwrap().holds;
            let h1 = dk && gk && ik1;
            let h2 = dk && relk;
            let h3 = dk && mk && ik;
            t.hits += h1 as usize + h2 as usize + h3 as usize;
            t.check(!h1 || mk, || format!("gluing (i) fails in degree {k}"));
            t.check(!h2 || mk, || format!("gluing (ii) fails in degree {k}"));
            t.check(!h3 || gk, || format!("gluing (iii) fails in degree {k}"));
        }
    }
    t
}

/// Every lemma suite at one seed.
pub fn all_lemma_suites(seed: u64) -> Tally {
    let mut t = Tally::default();
    for part in [cone_suite(seed), extended_cone_suite(seed), links_suite(seed), join_suite(seed), gluing_suite(seed)] {
        t.merge(part);
    }
    t
}

/// A pseudo-random chain with small coefficients on the k-faces of `c`.
pub fn random_chain<F: Field>(field: &F, c: &SimplicialComplex, k: i32, seed: u64) -> Chain<F::Elem> {
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let terms = c.faces_of_dim(k).into_iter().filter_map(|f| {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let v = ((x >> 33) % 7) as i64 - 3;
        (v != 0).then(|| (f, field.from_i64(v)))
    });
    Chain::from_terms(field, k, terms).unwrap()
}

pub fn boundary_squared_vanishes<F: Field>(field: &F, c: &Chain<F::Elem>) -> bool {
    boundary(field, &boundary(field, c)).is_zero()
}

/// Whether deleting every Γ_k adjacency labelled by a member of `cut`
/// separates `from` from `to`, by breadth-first search from scratch.
pub fn separated(c: &SimplicialComplex, k: i32, cut: &HashSet<Face>, from: &[Face], to: &[Face]) -> bool {
    let nodes = c.faces_of_dim(k);
    let mut seen: HashSet<Face> = from.iter().copied().collect();
    let mut queue: VecDeque<Face> = from.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &y in &nodes {
            let shared = x.intersection(y);
            if !seen.contains(&y) && shared.dim() == k - 1 && !cut.contains(&shared) {
                seen.insert(y);
                queue.push_back(y);
            }
        }
    }
    to.iter().all(|t| !seen.contains(t))
}
