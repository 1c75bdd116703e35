//! Recognition of k-Dirac complexes by exhaustive memoized search, with
//! certificates that are checked by separate replay code.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Default number of distinct (complex, k) states the search may expand.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiracCertificate {
    /// `Sk_k Δ` is the k-skeleton of the simplex on `support`.
    Base { k: i32, support: Face },
    /// Eliminate `sigma`; `rest` certifies `Δ − σ` at level k and `link`
    /// certifies `eLk_σ Δ` at level k−1.
    Step {
        k: i32,
        sigma: Face,
        rest: Arc<DiracCertificate>,
        link: Arc<DiracCertificate>,
    },
}

impl DiracCertificate {
    pub fn k(&self) -> i32 {
        match self {
            DiracCertificate::Base { k, .. } | DiracCertificate::Step { k, .. } => *k,
        }
    }

    /// Eliminated faces at this level, in order.
    pub fn eliminations(&self) -> Vec<Face> {
        let mut out = Vec::new();
        let mut cur = self;
        while let DiracCertificate::Step { sigma, rest, .. } = cur {
            out.push(*sigma);
            cur = rest;
        }
        out
    }

    /// Label-form JSON; the elimination chain is flattened into a list so
    /// nesting depth is bounded by k.
    pub fn to_json(&self, complex: &SimplicialComplex) -> Value {
        let mut steps = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                DiracCertificate::Step { sigma, rest, link, .. } => {
                    steps.push(json!({
                        "eliminate": complex.face_labels(*sigma),
                        "extended_link": link.to_json(complex),
                    }));
                    cur = rest;
                }
                DiracCertificate::Base { support, .. } => {
                    return json!({
                        "k": self.k(),
                        "steps": steps,
                        "base_support": complex.face_labels(*support),
                    });
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiracOutcome {
    Certified(Arc<DiracCertificate>),
    /// The search was exhausted: the complex is not k-Dirac.
    NotDirac,
    /// The state budget ran out before a decision.
    Unknown { explored: usize },
}

struct OutOfBudget;

type Found = Option<Arc<DiracCertificate>>;

struct Search {
    memo: HashMap<(Vec<Face>, i32), Found>,
    budget: usize,
    explored: usize,
}

impl Search {
    fn run(&mut self, c: &SimplicialComplex, k: i32) -> std::result::Result<Found, OutOfBudget> {
        if c.is_void() {
            return Ok(None);
        }
        if c.has_complete_skeleton(k) {
            return Ok(Some(Arc::new(DiracCertificate::Base {
                k,
                support: c.vertex_set(),
            })));
        }
        let key = (c.facets().to_vec(), k);
        if let Some(found) = self.memo.get(&key) {
            return Ok(found.clone());
        }
        self.explored += 1;
        if self.explored > self.budget {
            return Err(OutOfBudget);
        }
        let cl = c.clique_complex(k);
        let mut candidates: Vec<Face> = c
            .all_faces()
            .into_iter()
            .filter(|f| (0..k).contains(&f.dim()))
            .collect();
        candidates.sort();
        // The closure condition is the cheapest test and prunes most candidates.
        let eligible: Vec<(Face, SimplicialComplex)> = candidates
            .into_par_iter()
            .filter_map(|s| {
                let elk = c.extended_link_unchecked(s);
                (elk.clique_complex(k - 1) == cl.extended_link_unchecked(s)).then_some((s, elk))
            })
            .collect();
        let mut found = None;
        for (sigma, elk) in eligible {
            let Some(link) = self.run(&elk, k - 1)? else { continue };
            let Some(rest) = self.run(&c.delete_unchecked(sigma), k)? else { continue };
            found = Some(Arc::new(DiracCertificate::Step { k, sigma, rest, link }));
            break;
        }
        self.memo.insert(key, found.clone());
        Ok(found)
    }
}

/// Decides whether Δ is k-Dirac. The certificate uses the least eligible face
/// (size, then lexicographic) at every step.
pub fn is_k_dirac(complex: &SimplicialComplex, k: i32, budget: usize) -> Result<DiracOutcome> {
    if k < 0 {
        return Err(Error::InvalidDegree(k));
    }
    let mut s = Search {
        memo: HashMap::new(),
        budget,
        explored: 0,
    };
    Ok(match s.run(complex, k) {
        Ok(Some(c)) => DiracOutcome::Certified(c),
        Ok(None) => DiracOutcome::NotDirac,
        Err(OutOfBudget) => DiracOutcome::Unknown { explored: s.explored },
    })
}

/// Above this many vertices in a star, replay compares the closure condition
/// through clique complexes instead of enumerating vertex subsets.
const REPLAY_SUBSET_LIMIT: usize = 18;

/// Re-checks a certificate against Δ from the definition.
pub fn verify_certificate(complex: &SimplicialComplex, k: i32, cert: &DiracCertificate) -> std::result::Result<(), String> {
    if cert.k() != k {
        return Err(format!("certificate level {} where {k} was expected", cert.k()));
    }
    match cert {
        DiracCertificate::Base { support, .. } => {
            let verts = complex.facets().iter().fold(Face::EMPTY, |a, &f| a.union(f));
            if complex.is_void() || verts != *support {
                return Err(format!("support {} is not the vertex set", complex.format_face(*support)));
            }
            for size in 1..=(k + 1) as usize {
                if let Some(t) = support.subsets_of_size(size).into_iter().find(|&t| !complex.contains(t)) {
                    return Err(format!("{} is missing from the k-skeleton", complex.format_face(t)));
                }
            }
            Ok(())
        }
        DiracCertificate::Step { sigma, rest, link, .. } => {
            let sigma = *sigma;
            if !complex.contains(sigma) || !(0..k).contains(&sigma.dim()) {
                return Err(format!("{} is not an eliminable face", complex.format_face(sigma)));
            }
            if !closure_condition(complex, sigma, k) {
                return Err(format!("closure condition fails at {}", complex.format_face(sigma)));
            }
            verify_certificate(&complex.extended_link_unchecked(sigma), k - 1, link)?;
            verify_certificate(&complex.delete_unchecked(sigma), k, rest)
        }
    }
}

/// `Cl_{k−1}(eLk_σ Δ) = eLk_σ(Cl_k Δ)`, by comparing membership of every
/// vertex subset of the star.
fn closure_condition(c: &SimplicialComplex, sigma: Face, k: i32) -> bool {
    let star_verts = c
        .facets()
        .iter()
        .filter(|f| sigma.is_subset_of(**f))
        .fold(Face::EMPTY, |a, &f| a.union(f));
    if star_verts.len() > REPLAY_SUBSET_LIMIT {
        let elk = c.extended_link_unchecked(sigma);
        return elk.clique_complex(k - 1) == c.clique_complex(k).extended_link_unchecked(sigma);
    }
    let in_elk = |t: Face| !sigma.is_subset_of(t) && c.contains(t.union(sigma));
    let elk_verts = star_verts.vertices().filter(|&v| in_elk(Face::vertex(v))).fold(Face::EMPTY, Face::with);
    let all_small = |s: Face, max: usize, pred: &dyn Fn(Face) -> bool| {
        (1..=max.min(s.len())).all(|m| s.subsets_of_size(m).into_iter().all(pred))
    };
    let in_cl_elk = |s: Face| s.is_subset_of(elk_verts) && all_small(s, k as usize, &in_elk);
    let ground = c.vertex_set();
    let in_cl_delta = |x: Face| x.is_subset_of(ground) && all_small(x, k as usize + 1, &|t| c.contains(t));
    star_verts
        .all_subsets()
        .all(|s| in_cl_elk(s) == (!sigma.is_subset_of(s) && in_cl_delta(s.union(sigma))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn certified(c: &SimplicialComplex, k: i32) -> Option<Arc<DiracCertificate>> {
        match is_k_dirac(c, k, DEFAULT_BUDGET).unwrap() {
            DiracOutcome::Certified(cert) => {
                verify_certificate(c, k, &cert).unwrap();
                Some(cert)
            }
            DiracOutcome::NotDirac => None,
            DiracOutcome::Unknown { .. } => panic!("budget exhausted"),
        }
    }

    #[test]
    fn graphs_are_one_dirac_iff_chordal() {
        assert!(certified(&corpus::cycle(4), 1).is_none());
        assert!(certified(&corpus::cycle(3), 1).is_some());
        let path = SimplicialComplex::build(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        let cert = certified(&path, 1).unwrap();
        assert_eq!(cert.eliminations(), vec![Face::vertex(0)]);
        for seed in 0..10 {
            assert!(certified(&corpus::random_chordal_graph(9, seed), 1).is_some());
        }
    }

    #[test]
    fn every_nonvoid_complex_is_zero_dirac() {
        assert!(certified(&corpus::cycle(5), 0).is_some());
        assert!(certified(&corpus::simplex(-1), 3).is_some());
        let void = SimplicialComplex::void(corpus::simplex(1).labels().clone());
        assert!(certified(&void, 0).is_none());
    }

    #[test]
    fn woodroofe_join_is_dirac_by_vertex_eliminations() {
        let w = corpus::woodroofe_join();
        for k in [2, 3] {
            let cert = certified(&w, k).unwrap();
            assert!(cert.eliminations().iter().all(|s| s.len() == 1), "k = {k}");
        }
    }

    #[test]
    fn octahedron_boundary_is_not_two_dirac() {
        assert!(certified(&corpus::octahedron(), 2).is_none());
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let path = SimplicialComplex::build(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        let cert = certified(&path, 1).unwrap();
        let DiracCertificate::Step { rest, link, .. } = cert.as_ref() else { panic!() };
        let bad = DiracCertificate::Step {
            k: 1,
            sigma: Face::vertex(1),
            rest: rest.clone(),
            link: link.clone(),
        };
        assert!(verify_certificate(&path, 1, &bad).is_err());
        let base = DiracCertificate::Base { k: 1, support: Face::full(3) };
        assert!(verify_certificate(&path, 1, &base).is_err());
    }

    #[test]
    fn budget_yields_unknown() {
        let out = is_k_dirac(&corpus::random_chordal_graph(9, 0), 1, 2).unwrap();
        assert!(matches!(out, DiracOutcome::Unknown { .. }));
    }

    #[test]
    fn certificate_json_is_flat() {
        let g = corpus::random_chordal_graph(8, 1);
        let cert = certified(&g, 1).unwrap();
        let v = cert.to_json(&g);
        assert_eq!(v["steps"].as_array().unwrap().len(), cert.eliminations().len());
        assert_eq!(v["k"], 1);
    }
}
