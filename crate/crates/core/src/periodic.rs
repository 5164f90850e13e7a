//! Periodic points, irreducibility and periodic density.

use std::collections::HashMap;
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::{Alphabet, Completer, Homomorphism, Subgroup, Tuple, DEFAULT_ENUMERATION_CAP};
use crate::blocks::{PeriodicConfig, Word};
use crate::error::{Error, Result};
use crate::shiftspace::GroupSFT;

/// The map `A^p -> A^(p + extra)`, `w ↦ w[i mod p]`.
fn unroll_map(a: &Alphabet, p: usize, extra: usize) -> Homomorphism {
    Homomorphism::from_fn(a, p, a, p + extra, |i, x| {
        (0..p + extra).map(|j| if j % p == i { x } else { a.identity() }).collect()
    })
}

/// `{w ∈ A^p : w^∞ ∈ S}`.
pub fn periodic_points(s: &GroupSFT, p: usize) -> Result<Subgroup> {
    if p == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    let m = s.window();
    unroll_map(s.alphabet(), p, m - 1).preimage(&s.blocks(p + m - 1)?)
}

/// Vertices are the essential `(m-1)`-blocks, edges the essential `m`-blocks.
#[derive(Clone, Debug)]
pub struct TransferGraph {
    pub vertices: Vec<Tuple>,
    /// `(source, target, block)`.
    pub edges: Vec<(usize, usize, Tuple)>,
}

impl TransferGraph {
    pub fn new(s: &GroupSFT) -> Result<Self> {
        let m = s.window();
        let edges_group = s.blocks(m)?;
        let blocks = edges_group.elements(DEFAULT_ENUMERATION_CAP)?;
        if m == 1 {
            return Ok(TransferGraph {
                vertices: vec![Vec::new()],
                edges: blocks.into_iter().map(|b| (0, 0, b)).collect(),
            });
        }
        let vertices = s.blocks(m - 1)?.elements(DEFAULT_ENUMERATION_CAP)?;
        let index: HashMap<&[u32], usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
        let edges = blocks
            .iter()
            .map(|b| (index[&b[..m - 1]], index[&b[1..]], b.clone()))
            .collect();
        Ok(TransferGraph { vertices, edges })
    }

    fn graph(&self) -> DiGraph<(), ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = self.vertices.iter().map(|_| g.add_node(())).collect();
        for &(a, b, _) in &self.edges {
            g.add_edge(nodes[a], nodes[b], ());
        }
        g
    }

    /// Strongly connected components as sorted vertex indices, sorted by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&self.graph())
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        comps.sort();
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// GraphViz rendering; vertices and edges are labelled by their blocks.
    pub fn to_dot(&self) -> String {
        let label = |t: &[u32]| t.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let mut out = String::from("digraph transfer {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", label(v));
        }
        for (a, b, e) in &self.edges {
            let _ = writeln!(out, "  v{a} -> v{b} [label=\"{}\"];", label(e));
        }
        out.push_str("}\n");
        out
    }
}

/// Whether any two words of the language can be joined inside the language.
///
/// The vertices reachable from the identity block form a subgroup `R` and those
/// reachable from `v` form `vR`, so the graph is strongly connected iff `R` is
/// every vertex.
pub fn is_irreducible(s: &GroupSFT) -> Result<bool> {
    let m = s.window();
    if m == 1 {
        return Ok(true);
    }
    let a = s.alphabet();
    let edges = s.blocks(m)?;
    let vertices = s.blocks(m - 1)?;
    let src = Homomorphism::selection(a, m, &(0..m - 1).collect::<Vec<_>>())?;
    let dst = Homomorphism::selection(a, m, &(1..m).collect::<Vec<_>>())?;
    let mut reach = Subgroup::trivial(a, m - 1);
    loop {
        let next = dst.image(&edges.intersect(&src.preimage(&reach)?)?)?;
        if next == reach {
            return Ok(reach == vertices);
        }
        reach = next;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WordRow {
    pub word: Tuple,
    pub status: String,
    pub witness_period: Option<usize>,
    pub witness_word: Option<Tuple>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WCheck {
    pub holds: bool,
    pub reason: Option<String>,
    pub rows: Vec<WordRow>,
}

/// Checks that every legal `u` with `|u| <= max_len` admits a filler `c`,
/// `|c| <= max_filler`, with `ucu` legal. Rows report the shortest filler.
pub fn w_subshift_check(s: &GroupSFT, max_filler: usize, max_len: usize) -> Result<WCheck> {
    if !is_irreducible(s)? {
        return Ok(WCheck {
            holds: false,
            reason: Some("the shift is not irreducible".into()),
            rows: Vec::new(),
        });
    }
    let mut rows = Vec::new();
    for len in 1..=max_len {
        let completers: Vec<Completer> = (0..=max_filler)
            .map(|n| {
                let positions: Vec<usize> = (0..len).chain(len + n..2 * len + n).collect();
                s.blocks(2 * len + n)?.completer(&positions)
            })
            .collect::<Result<_>>()?;
        for u in s.blocks(len)?.elements(DEFAULT_ENUMERATION_CAP)? {
            let uu = [u.as_slice(), u.as_slice()].concat();
            let mut found = None;
            for (n, c) in completers.iter().enumerate() {
                if let Some(x) = c.complete(&uu)? {
                    found = Some(x[len..len + n].to_vec());
                    break;
                }
            }
            let ok = found.is_some();
            rows.push(WordRow {
                word: u,
                status: if ok { "ok" } else { "no filler" }.into(),
                witness_period: found.as_ref().map(|c| len + c.len()),
                witness_word: found,
            });
            if !ok {
                return Ok(WCheck {
                    holds: false,
                    reason: Some(format!("no filler of length at most {max_filler}")),
                    rows,
                });
            }
        }
    }
    Ok(WCheck {
        holds: true,
        reason: None,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionMethod {
    /// `w^∞` itself.
    Direct,
    /// `e u w v` with `e` the identity `m`-block.
    IdentitySplice,
    /// Any periodic point with `w` at position 0.
    Search,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub config: PeriodicConfig,
    pub method: ExtensionMethod,
}

/// Search state shared by many extension queries on one shift.
pub struct ExtensionSearch<'a> {
    shift: &'a GroupSFT,
    max_period: usize,
    splices: HashMap<(usize, usize, usize), Completer>,
    points: HashMap<(usize, usize), Completer>,
}

impl<'a> ExtensionSearch<'a> {
    pub fn new(shift: &'a GroupSFT, max_period: usize) -> Self {
        ExtensionSearch {
            shift,
            max_period,
            splices: HashMap::new(),
            points: HashMap::new(),
        }
    }

    pub fn find(&mut self, w: &Word) -> Result<Option<Extension>> {
        let s = self.shift;
        if w.alphabet() != s.alphabet() {
            return Err(Error::AlphabetMismatch("word over a different alphabet".into()));
        }
        let k = w.len();
        if k == 0 || !s.blocks(k)?.contains(w.as_slice()) {
            return Err(Error::Precondition(format!("{:?} is not in the language of the shift", w.as_slice())));
        }
        let a = s.alphabet();
        let m = s.window();
        if k <= self.max_period {
            let c = PeriodicConfig::repeat(w.clone())?;
            if s.member_periodic(&c)? {
                return Ok(Some(Extension {
                    config: c.reduced(),
                    method: ExtensionMethod::Direct,
                }));
            }
        }
        let e = a.identity_tuple(m);
        for p in k + m..=self.max_period {
            for u in 0..=p - m - k {
                let key = (p, u, k);
                if let std::collections::hash_map::Entry::Vacant(e) = self.splices.entry(key) {
                    let positions: Vec<usize> = (0..m).chain(m + u..m + u + k).chain(p..p + m).collect();
                    e.insert(s.blocks(p + m)?.completer(&positions)?);
                }
                let values = [e.as_slice(), w.as_slice(), e.as_slice()].concat();
                if let Some(x) = self.splices[&key].complete(&values)? {
                    let c = PeriodicConfig::repeat(Word::new_unchecked(a, x[..p].to_vec()))?;
                    debug_assert!(s.member_periodic(&c)?);
                    return Ok(Some(Extension {
                        config: c.reduced(),
                        method: ExtensionMethod::IdentitySplice,
                    }));
                }
            }
        }
        for p in k..=self.max_period {
            let key = (p, k);
            if let std::collections::hash_map::Entry::Vacant(e) = self.points.entry(key) {
                e.insert(periodic_points(s, p)?.completer(&(0..k).collect::<Vec<_>>())?);
            }
            if let Some(x) = self.points[&key].complete(w.as_slice())? {
                let c = PeriodicConfig::repeat(Word::new_unchecked(a, x))?;
                return Ok(Some(Extension {
                    config: c.reduced(),
                    method: ExtensionMethod::Search,
                }));
            }
        }
        Ok(None)
    }
}

/// A periodic point of period at most `max_period` containing `w`, if one is found.
pub fn find_periodic_extension(s: &GroupSFT, w: &Word, max_period: usize) -> Result<Option<Extension>> {
    ExtensionSearch::new(s, max_period).find(w)
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityRow {
    pub word: Tuple,
    pub status: String,
    pub witness_period: Option<usize>,
    pub witness_word: Option<Tuple>,
    pub method: Option<ExtensionMethod>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub max_len: usize,
    pub max_period: usize,
    pub words: usize,
    pub covered: usize,
    pub coverage: f64,
    pub failures: Vec<Tuple>,
    pub rows: Vec<DensityRow>,
}

/// Tries to extend every legal word of length at most `max_len` to a periodic point.
pub fn density_report(s: &GroupSFT, max_len: usize, max_period: usize, parallel: bool) -> Result<DensityReport> {
    let mut words = Vec::new();
    for len in 1..=max_len {
        words.extend(s.blocks(len)?.elements(DEFAULT_ENUMERATION_CAP)?);
    }
    let a = s.alphabet();
    let run = |chunk: &[Tuple]| -> Result<Vec<DensityRow>> {
        let mut search = ExtensionSearch::new(s, max_period);
        chunk
            .iter()
            .map(|w| {
                let found = search.find(&Word::new_unchecked(a, w.clone()))?;
                Ok(DensityRow {
                    word: w.clone(),
                    status: if found.is_some() { "ok" } else { "bound exhausted" }.into(),
                    witness_period: found.as_ref().map(|e| e.config.period()),
                    witness_word: found.as_ref().map(|e| e.config.word().as_slice().to_vec()),
                    method: found.map(|e| e.method),
                })
            })
            .collect()
    };
    let rows: Vec<DensityRow> = if parallel {
        let chunks: Vec<Result<Vec<DensityRow>>> = words.par_chunks(64).map(run).collect();
        chunks.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect()
    } else {
        run(&words)?
    };
    let covered = rows.iter().filter(|r| r.method.is_some()).count();
    let failures = rows.iter().filter(|r| r.method.is_none()).map(|r| r.word.clone()).collect();
    Ok(DensityReport {
        max_len,
        max_period,
        words: rows.len(),
        covered,
        coverage: if rows.is_empty() { 1.0 } else { covered as f64 / rows.len() as f64 },
        failures,
        rows,
    })
}
