//! Named complexes and seeded random models.
//!
//! A corpus spec is a small expression such as `cone(cycle(4))`,
//! `skeleton(simplex(4),2)` or `graph(8,40)`. Random models take an optional
//! trailing seed argument; otherwise the spec's seed (default 0) is used.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{make_labels, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::{PrimeField, Rationals};
use crate::format::parse_complex;
use crate::homology::betti_numbers;

const RP2_6: &str = include_str!("../data/rp2_6.facets");
const DUNCE8: &str = include_str!("../data/dunce8.facets");

/// Every parameterless named complex.
pub const NAMED: &[&str] = &[
    "rp2_6",
    "dunce8",
    "flag_dunce",
    "woodroofe_join",
    "cone_square",
    "octahedron",
    "glued_sheets",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusArg {
    Int(i64),
    Spec(CorpusSpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub name: String,
    pub args: Vec<CorpusArg>,
    pub seed: Option<u64>,
}

impl CorpusSpec {
    pub fn named(name: &str) -> Self {
        CorpusSpec {
            name: name.to_string(),
            args: Vec::new(),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Integer parameters (nested specs are skipped).
    pub fn params(&self) -> Vec<i64> {
        self.args
            .iter()
            .filter_map(|a| match a {
                CorpusArg::Int(i) => Some(*i),
                CorpusArg::Spec(_) => None,
            })
            .collect()
    }

    pub fn build(&self) -> Result<SimplicialComplex> {
        named_complex(self)
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                match a {
                    CorpusArg::Int(x) => write!(f, "{x}")?,
                    CorpusArg::Spec(s) => write!(f, "{s}")?,
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut pos = 0;
        let spec = parse_spec(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Corpus(format!("trailing input in `{s}`")));
        }
        Ok(spec)
    }
}

fn tokenize(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' | ',' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' => cur.push(c),
            c => return Err(Error::Corpus(format!("unexpected character `{c}` in `{s}`"))),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_spec(toks: &[String], pos: &mut usize) -> Result<CorpusSpec> {
    let name = toks
        .get(*pos)
        .filter(|t| t.chars().next().is_some_and(|c| c.is_alphabetic()))
        .ok_or_else(|| Error::Corpus("expected a complex name".into()))?
        .clone();
    *pos += 1;
    let mut args = Vec::new();
    if toks.get(*pos).map(String::as_str) == Some("(") {
        *pos += 1;
        loop {
            let t = toks
                .get(*pos)
                .ok_or_else(|| Error::Corpus(format!("unclosed argument list of `{name}`")))?;
            if let Ok(i) = t.parse::<i64>() {
                args.push(CorpusArg::Int(i));
                *pos += 1;
            } else {
                args.push(CorpusArg::Spec(parse_spec(toks, pos)?));
            }
            match toks.get(*pos).map(String::as_str) {
                Some(",") => *pos += 1,
                Some(")") => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Corpus(format!("expected `,` or `)` in arguments of `{name}`"))),
            }
        }
    }
    Ok(CorpusSpec { name, args, seed: None })
}

fn numbered(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn int_arg(spec: &CorpusSpec, i: usize, what: &str) -> Result<i64> {
    match spec.args.get(i) {
        Some(CorpusArg::Int(x)) => Ok(*x),
        _ => Err(Error::Corpus(format!("{}: missing integer argument `{what}`", spec.name))),
    }
}

fn size_arg(spec: &CorpusSpec, i: usize, what: &str, lo: i64, hi: i64) -> Result<usize> {
    let x = int_arg(spec, i, what)?;
    if x < lo || x > hi {
        return Err(Error::Corpus(format!("{}: `{what}` must lie in {lo}..={hi}, got {x}", spec.name)));
    }
    Ok(x as usize)
}

fn complex_arg(spec: &CorpusSpec, i: usize) -> Result<SimplicialComplex> {
    match spec.args.get(i) {
        Some(CorpusArg::Spec(s)) => {
            let mut s = s.clone();
            if s.seed.is_none() {
                s.seed = spec.seed;
            }
            s.build()
        }
        _ => Err(Error::Corpus(format!("{}: argument {} must be a complex", spec.name, i + 1))),
    }
}

fn arity(spec: &CorpusSpec, lo: usize, hi: usize) -> Result<()> {
    let n = spec.args.len();
    if n < lo || n > hi {
        return Err(Error::Corpus(format!("{}: expected {lo}..={hi} arguments, got {n}", spec.name)));
    }
    Ok(())
}

/// Seed for a random model: trailing argument at `at`, else the spec's seed.
fn seed_of(spec: &CorpusSpec, at: usize) -> Result<u64> {
    match spec.args.get(at) {
        Some(CorpusArg::Int(s)) if *s >= 0 => Ok(*s as u64),
        Some(_) => Err(Error::Corpus(format!("{}: seed must be a nonnegative integer", spec.name))),
        None => Ok(spec.seed.unwrap_or(0)),
    }
}

pub fn named_complex(spec: &CorpusSpec) -> Result<SimplicialComplex> {
    let s = spec;
    match s.name.as_str() {
        "simplex" => {
            arity(s, 1, 1)?;
            let n = int_arg(s, 0, "n")?;
            if !(-1..=127).contains(&n) {
                return Err(Error::Corpus(format!("simplex: dimension must lie in -1..=127, got {n}")));
            }
            Ok(simplex(n))
        }
        "skeleton" => {
            arity(s, 2, 2)?;
            let k = int_arg(s, 1, "k")?;
            Ok(complex_arg(s, 0)?.skeleton(k as i32))
        }
        "boundary" => {
            arity(s, 1, 1)?;
            let x = match s.args[0] {
                CorpusArg::Int(n) => simplex(n),
                _ => complex_arg(s, 0)?,
            };
            if x.facets().len() != 1 || x.facets()[0].is_empty() {
                return Err(Error::Corpus("boundary: argument must be a nonempty simplex".into()));
            }
            Ok(x.delete_unchecked(x.facets()[0]))
        }
        "cycle" => {
            arity(s, 1, 1)?;
            Ok(cycle(size_arg(s, 0, "n", 3, 128)?))
        }
        "cone" => {
            arity(s, 1, 1)?;
            cone(&complex_arg(s, 0)?)
        }
        "join" => {
            arity(s, 2, 2)?;
            let a = complex_arg(s, 0)?;
            let b = complex_arg(s, 1)?;
            join_fresh(&a, &b)
        }
        "jk" => {
            arity(s, 1, 1)?;
            jk(size_arg(s, 0, "k", 1, 62)?)
        }
        "rp2_6" => {
            arity(s, 0, 0)?;
            rp2_6()
        }
        "dunce8" => {
            arity(s, 0, 0)?;
            dunce8()
        }
        "flag_dunce" => {
            arity(s, 0, 0)?;
            flag_dunce()
        }
        "woodroofe_join" => {
            arity(s, 0, 0)?;
            Ok(woodroofe_join())
        }
        "cone_square" => {
            arity(s, 0, 0)?;
            cone(&cycle(4))
        }
        "octahedron" => {
            arity(s, 0, 0)?;
            Ok(octahedron())
        }
        "glued_sheets" => {
            arity(s, 0, 0)?;
            Ok(glued_sheets())
        }
        "graph" => {
            arity(s, 2, 3)?;
            let n = size_arg(s, 0, "n", 1, 128)?;
            let p = size_arg(s, 1, "p", 0, 100)?;
            Ok(random_graph(n, p as u32, seed_of(s, 2)?))
        }
        "flag" => {
            arity(s, 2, 3)?;
            let n = size_arg(s, 0, "n", 1, 128)?;
            let p = size_arg(s, 1, "p", 0, 100)?;
            Ok(random_graph(n, p as u32, seed_of(s, 2)?).clique_complex(1))
        }
        "pure" => {
            arity(s, 3, 4)?;
            let n = size_arg(s, 0, "n", 1, 128)?;
            let k = size_arg(s, 1, "k", 0, 127)?;
            let p = size_arg(s, 2, "p", 0, 100)?;
            Ok(random_pure(n, k, p as u32, seed_of(s, 3)?))
        }
        "chordal_graph" => {
            arity(s, 1, 2)?;
            let n = size_arg(s, 0, "n", 1, 128)?;
            Ok(random_chordal_graph(n, seed_of(s, 1)?))
        }
        other => Err(Error::Corpus(format!("unknown complex `{other}`"))),
    }
}

/// The n-simplex on vertices `1..=n+1`; `simplex(-1)` is `{∅}`.
pub fn simplex(n: i64) -> SimplicialComplex {
    let m = (n + 1).max(0) as usize;
    SimplicialComplex::simplex(numbered(m), Face::full(m))
}

/// C_n on vertices `1..=n`.
pub fn cycle(n: usize) -> SimplicialComplex {
    let faces = (0..n).map(|i| Face::from_indices([i, (i + 1) % n]));
    SimplicialComplex::from_facets(numbered(n), faces)
}

fn fresh_label(taken: &[String], base: &str) -> String {
    let mut l = base.to_string();
    while taken.contains(&l) {
        l.push('\'');
    }
    l
}

/// Cone with a new apex `v` appended to the vertex order.
pub fn cone(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let apex = fresh_label(x.labels(), "v");
    let point = SimplicialComplex::simplex(make_labels(&[apex])?, Face::full(1));
    x.join(&point)
}

/// Join, priming the second factor's labels where they clash.
pub fn join_fresh(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let mut taken: Vec<String> = a.labels().to_vec();
    let mut renamed = Vec::with_capacity(b.ground_size());
    for l in b.labels().iter() {
        let l = fresh_label(&taken, l);
        taken.push(l.clone());
        renamed.push(l);
    }
    a.join(&b.with_labels(make_labels(&renamed)?))
}

/// ∂Δ^k * ∂Δ^k on labels `a1..`, `b1..`.
pub fn jk(k: usize) -> Result<SimplicialComplex> {
    let side = |p: &str| {
        let labels: Vec<String> = (1..=k + 1).map(|i| format!("{p}{i}")).collect();
        let full = Face::full(k + 1);
        Ok::<_, Error>(SimplicialComplex::from_facets(make_labels(&labels)?, full.facets()))
    };
    side("a")?.join(&side("b")?)
}

fn validated(name: &str, c: SimplicialComplex, check: impl FnOnce(&SimplicialComplex) -> Result<(), String>) -> Result<SimplicialComplex> {
    check(&c).map_err(|msg| Error::CorpusValidation {
        name: name.to_string(),
        msg,
    })?;
    Ok(c)
}

fn parse_data(name: &str, text: &str) -> Result<SimplicialComplex> {
    parse_complex(text).map_err(|e| Error::CorpusValidation {
        name: name.to_string(),
        msg: e.to_string(),
    })
}

/// Six-vertex real projective plane.
pub fn rp2_6() -> Result<SimplicialComplex> {
    validated("rp2_6", parse_data("rp2_6", RP2_6)?, |c| {
        let f2 = betti_numbers(&PrimeField::new(2), c);
        let q = betti_numbers(&Rationals, c);
        if c.f_vector() != [1, 6, 15, 10] {
            return Err(format!("f-vector {:?}", c.f_vector()));
        }
        if f2 != [0, 0, 1, 1] || q != [0, 0, 0, 0] {
            return Err(format!("betti over F2 {f2:?}, over Q {q:?}"));
        }
        Ok(())
    })
}

fn check_dunce_like(c: &SimplicialComplex) -> Result<(), String> {
    if c.dim() != 2 || !c.is_pure() {
        return Err("not a pure 2-complex".into());
    }
    for q in [betti_numbers(&Rationals, c), betti_numbers(&PrimeField::new(2), c)] {
        if q.iter().any(|&b| b != 0) {
            return Err(format!("not acyclic: {q:?}"));
        }
    }
    let tri = c.faces_of_dim(2);
    for e in c.faces_of_dim(1) {
        if tri.iter().filter(|t| e.is_subset_of(**t)).count() < 2 {
            return Err(format!("free edge {}", c.format_face(e)));
        }
    }
    Ok(())
}

/// Eight-vertex dunce hat.
pub fn dunce8() -> Result<SimplicialComplex> {
    validated("dunce8", parse_data("dunce8", DUNCE8)?, |c| {
        if c.f_vector() != [1, 8, 24, 17] {
            return Err(format!("f-vector {:?}", c.f_vector()));
        }
        check_dunce_like(c)
    })
}

/// First barycentric subdivision. Vertices are the nonempty faces, labelled
/// by their vertex labels joined with `-`, ordered by dimension then
/// lexicographically.
pub fn barycentric_subdivision(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let faces: Vec<Face> = x.all_faces().into_iter().filter(|f| !f.is_empty()).collect();
    let labels: Vec<String> = faces.iter().map(|&f| x.face_labels(f).join("-")).collect();
    let labels = make_labels(&labels)?;
    let pos: std::collections::HashMap<Face, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut flags = Vec::new();
    for &facet in x.facets() {
        // Maximal chains ∅ ≠ f₀ ⊂ f₁ ⊂ … ⊂ facet: one per vertex ordering.
        let mut stack = vec![(facet, Face::vertex(pos[&facet]))];
        while let Some((top, chain)) = stack.pop() {
            if top.len() == 1 {
                flags.push(chain);
                continue;
            }
            for sub in top.facets() {
                stack.push((sub, chain.with(pos[&sub])));
            }
        }
    }
    Ok(SimplicialComplex::from_facets(labels, flags))
}

/// Flag triangulation of the dunce hat: the barycentric subdivision of `dunce8`.
pub fn flag_dunce() -> Result<SimplicialComplex> {
    let c = barycentric_subdivision(&dunce8()?)?;
    validated("flag_dunce", c, |c| {
        if c.f_vector() != [1, 49, 150, 102] {
            return Err(format!("f-vector {:?}", c.f_vector()));
        }
        if c.skeleton(1).clique_complex(1) != *c {
            return Err("not flag".into());
        }
        check_dunce_like(c)
    })
}

/// Edge `x y` joined with the square `1 2 3 4`, plus both diagonals.
pub fn woodroofe_join() -> SimplicialComplex {
    let labels = make_labels(&["x", "y", "1", "2", "3", "4"]).expect("distinct");
    let (x, y) = (0, 1);
    let sq = [2, 3, 4, 5];
    let mut faces: Vec<Face> = (0..4)
        .map(|i| Face::from_indices([x, y, sq[i], sq[(i + 1) % 4]]))
        .collect();
    faces.push(Face::from_indices([sq[0], sq[2]]));
    faces.push(Face::from_indices([sq[1], sq[3]]));
    SimplicialComplex::from_facets(labels, faces)
}

/// Boundary of the cross-polytope on antipodal pairs ±1, ±2, ±3.
pub fn octahedron() -> SimplicialComplex {
    let labels = make_labels(&["1", "2", "3", "-1", "-2", "-3"]).expect("distinct");
    let mut faces = Vec::new();
    for signs in 0..8usize {
        faces.push(Face::from_indices((0..3).map(|i| if signs >> i & 1 == 1 { i + 3 } else { i })));
    }
    SimplicialComplex::from_facets(labels, faces)
}

/// Two tetrahedron boundaries `abcd`, `abce` sharing the triangle `abc`.
pub fn glued_sheets() -> SimplicialComplex {
    let labels = make_labels(&["a", "b", "c", "d", "e"]).expect("distinct");
    let abcd = Face::full(4);
    let abce = Face::from_indices([0, 1, 2, 4]);
    SimplicialComplex::from_facets(labels, abcd.facets().chain(abce.facets()))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p/100) on `1..=n`; isolated vertices are kept as 0-faces.
pub fn random_graph(n: usize, p_percent: u32, seed: u64) -> SimplicialComplex {
    let mut r = rng(seed);
    let mut faces: Vec<Face> = (0..n).map(Face::vertex).collect();
    for i in 0..n {
        for j in i + 1..n {
            if r.random_range(0..100) < p_percent {
                faces.push(Face::from_indices([i, j]));
            }
        }
    }
    SimplicialComplex::from_facets(numbered(n), faces)
}

/// Downward closure of a random family of k-faces on `1..=n`.
pub fn random_pure(n: usize, k: usize, p_percent: u32, seed: u64) -> SimplicialComplex {
    let mut r = rng(seed);
    let faces: Vec<Face> = Face::full(n)
        .subsets_of_size(k + 1)
        .into_iter()
        .filter(|_| r.random_range(0..100) < p_percent)
        .collect();
    SimplicialComplex::from_facets(numbered(n), faces)
}

/// Random chordal graph: each new vertex is attached to a random subset of a
/// clique created earlier, so reversing the insertion order eliminates
/// simplicial vertices.
pub fn random_chordal_graph(n: usize, seed: u64) -> SimplicialComplex {
    let mut r = rng(seed);
    let mut cliques: Vec<Face> = Vec::new();
    let mut faces: Vec<Face> = Vec::new();
    for v in 0..n {
        let mut attach = Face::EMPTY;
        if !cliques.is_empty() && r.random_range(0..10) > 0 {
            let c = cliques[r.random_range(0..cliques.len())];
            for u in c.vertices() {
                if r.random_bool(0.6) {
                    attach = attach.with(u);
                }
            }
        }
        faces.push(Face::vertex(v));
        faces.extend(attach.vertices().map(|u| Face::from_indices([u, v])));
        cliques.push(attach.with(v));
    }
    SimplicialComplex::from_facets(numbered(n), faces)
}
