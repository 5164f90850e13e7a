//! The JSON specification document and its translation into library objects.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Elem, Homomorphism, Tuple};
use crate::ca::GroupCA;
use crate::error::Error;
use crate::shiftspace::GroupSFT;

pub const SCHEMA_VERSION: &str = "1";

/// Published JSON Schema for [`SpecDocument`].
pub const SCHEMA: &str = include_str!("../../specs/schema.json");

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<AlphabetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sft: Option<SftSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ca: Option<CaSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QuerySpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlphabetSpec {
    VectorSpace { p: u32, dim: usize },
    Cyclic { order: u32 },
    CyclicProduct { orders: Vec<u32> },
    Symmetric { degree: usize },
    Permutation { degree: usize, generators: Vec<Vec<usize>> },
    Table { table: Vec<Vec<u32>>, identity: u32 },
}

/// An element index, or residues (vector spaces) or images (permutation groups).
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(untagged)]
pub enum ElemSpec {
    Index(u32),
    Vector(Vec<u32>),
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SftKind {
    #[default]
    Generated,
    Full,
    Trivial,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SftSpec {
    #[serde(default)]
    pub kind: SftKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<AlphabetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default)]
    pub generators: Vec<Vec<ElemSpec>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CaSpec {
    Identity,
    Shift,
    Matrix {
        memory: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        codomain: Option<AlphabetSpec>,
        matrix: Vec<Vec<u32>>,
    },
    Images {
        memory: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        codomain: Option<AlphabetSpec>,
        generators: Vec<Vec<ElemSpec>>,
        images: Vec<ElemSpec>,
    },
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Template {
    ShiftEquality,
    Repeat,
    KernelPowers,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChainSpec {
    Images,
    Intersection { shifts: Vec<SftSpec> },
    Markov { template: Template, cap: usize },
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct QuerySpec {
    #[serde(default)]
    pub words: Vec<Vec<ElemSpec>>,
}

/// A schema violation located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub pointer: String,
    pub message: String,
}

impl Violation {
    fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug)]
pub enum ParseError {
    Json(String),
    Invalid(Vec<Violation>),
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => {}
        }
    }
    out
}

/// Parses and validates a document; nothing is computed beyond the checks.
pub fn parse_spec(bytes: &[u8]) -> Result<SpecDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::Json(format!("input is not UTF-8: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let doc: SpecDocument = serde_path_to_error::deserialize(value).map_err(|e| {
        let mut pointer = pointer_of(e.path());
        if pointer.is_empty() {
            pointer.push('/');
        }
        ParseError::Invalid(vec![Violation::new(pointer, e.inner().to_string())])
    })?;
    let violations = validate(&doc);
    if violations.is_empty() {
        Ok(doc)
    } else {
        Err(ParseError::Invalid(violations))
    }
}

fn validate(doc: &SpecDocument) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Some(v) = &doc.version {
        if v != SCHEMA_VERSION {
            out.push(Violation::new("/version", format!("unsupported version {v:?}, expected {SCHEMA_VERSION:?}")));
        }
    }
    let alphabet = match &doc.alphabet {
        Some(spec) => match build_alphabet(spec) {
            Ok(a) => Some(a),
            Err(e) => {
                out.push(Violation::new("/alphabet", message(&e)));
                None
            }
        },
        None => None,
    };
    let alphabet_ok = doc.alphabet.is_none() || alphabet.is_some();
    if let Some(s) = &doc.sft {
        if alphabet_ok {
            if let Err(mut v) = build_sft(s, alphabet.as_ref(), "/sft") {
                out.append(&mut v);
            }
        }
    }
    if let Some(c) = &doc.ca {
        if alphabet_ok {
            if let Err(mut v) = build_ca(c, alphabet.as_ref(), "/ca") {
                out.append(&mut v);
            }
        }
    }
    if let Some(ChainSpec::Intersection { shifts }) = &doc.chain {
        if shifts.is_empty() {
            out.push(Violation::new("/chain/shifts", "an intersection chain needs at least one shift"));
        }
        if alphabet_ok {
            for (i, s) in shifts.iter().enumerate() {
                if let Err(mut v) = build_sft(s, alphabet.as_ref(), &format!("/chain/shifts/{i}")) {
                    out.append(&mut v);
                }
            }
        }
    }
    if let Some(ChainSpec::Markov { cap, .. }) = &doc.chain {
        if *cap < 2 {
            out.push(Violation::new("/chain/cap", "cap must be at least 2"));
        }
    }
    if let Some(q) = &doc.query {
        match &alphabet {
            Some(a) => {
                for (i, w) in q.words.iter().enumerate() {
                    if let Err(e) = build_tuple(a, w) {
                        out.push(Violation::new(format!("/query/words/{i}"), message(&e)));
                    }
                }
            }
            None if alphabet_ok && !q.words.is_empty() => {
                out.push(Violation::new("/query", "query words need a top-level alphabet"));
            }
            None => {}
        }
    }
    out
}

fn message(e: &Error) -> String {
    match e {
        Error::InvalidAlphabet(m) => m.clone(),
        other => other.to_string(),
    }
}

pub fn build_alphabet(spec: &AlphabetSpec) -> Result<Alphabet, Error> {
    match spec {
        AlphabetSpec::VectorSpace { p, dim } => Alphabet::vector_space(*p, *dim),
        AlphabetSpec::Cyclic { order } => Alphabet::cyclic(*order),
        AlphabetSpec::CyclicProduct { orders } => Alphabet::cyclic_product(orders.clone()),
        AlphabetSpec::Symmetric { degree } => Alphabet::symmetric(*degree),
        AlphabetSpec::Permutation { degree, generators } => Alphabet::permutation(*degree, generators.clone()),
        AlphabetSpec::Table { table, identity } => Alphabet::table(table.clone(), *identity, None),
    }
}

fn build_elem(a: &Alphabet, e: &ElemSpec) -> Result<Elem, Error> {
    match e {
        ElemSpec::Index(i) => {
            a.check(*i)?;
            Ok(*i)
        }
        ElemSpec::Vector(v) if a.is_vector_space() => a.from_residues(v),
        ElemSpec::Vector(v) if a.permutation_of(a.identity()).is_some() => {
            let images: Vec<usize> = v.iter().map(|&x| x as usize).collect();
            a.element_of_permutation(&images)
                .ok_or_else(|| Error::InvalidArgument(format!("{v:?} is not an element of {}", a.describe())))
        }
        ElemSpec::Vector(_) => Err(Error::InvalidArgument(format!(
            "elements of {} are written as indices",
            a.describe()
        ))),
    }
}

pub fn build_tuple(a: &Alphabet, t: &[ElemSpec]) -> Result<Tuple, Error> {
    t.iter().map(|e| build_elem(a, e)).collect()
}

fn resolve_alphabet(own: Option<&AlphabetSpec>, doc: Option<&Alphabet>, pointer: &str) -> Result<Alphabet, Vec<Violation>> {
    match (own, doc) {
        (Some(spec), _) => build_alphabet(spec).map_err(|e| vec![Violation::new(format!("{pointer}/alphabet"), message(&e))]),
        (None, Some(a)) => Ok(a.clone()),
        (None, None) => Err(vec![Violation::new(pointer, "no alphabet given for this section")]),
    }
}

pub fn build_sft(spec: &SftSpec, doc: Option<&Alphabet>, pointer: &str) -> Result<GroupSFT, Vec<Violation>> {
    let a = resolve_alphabet(spec.alphabet.as_ref(), doc, pointer)?;
    match spec.kind {
        SftKind::Full => return Ok(GroupSFT::full(&a)),
        SftKind::Trivial => return Ok(GroupSFT::trivial(&a)),
        SftKind::Generated => {}
    }
    let Some(window) = spec.window else {
        return Err(vec![Violation::new(format!("{pointer}/window"), "a generated shift needs a window")]);
    };
    if window == 0 {
        return Err(vec![Violation::new(format!("{pointer}/window"), "window must be at least 1")]);
    }
    let mut violations = Vec::new();
    let mut gens = Vec::new();
    for (i, g) in spec.generators.iter().enumerate() {
        let at = format!("{pointer}/generators/{i}");
        if g.len() != window {
            violations.push(Violation::new(at, format!("generator has arity {}, expected {window}", g.len())));
            continue;
        }
        match build_tuple(&a, g) {
            Ok(t) => gens.push(t),
            Err(e) => violations.push(Violation::new(at, message(&e))),
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    GroupSFT::from_generators(&a, window, &gens).map_err(|e| vec![Violation::new(pointer, message(&e))])
}

pub fn build_ca(spec: &CaSpec, doc: Option<&Alphabet>, pointer: &str) -> Result<GroupCA, Vec<Violation>> {
    let a = resolve_alphabet(None, doc, pointer)?;
    let err = |at: String| move |e: Error| vec![Violation::new(at, message(&e))];
    match spec {
        CaSpec::Identity => Ok(GroupCA::identity(&a)),
        CaSpec::Shift => Ok(GroupCA::shift(&a)),
        CaSpec::Matrix { memory, codomain, matrix } => {
            let b = match codomain {
                Some(c) => build_alphabet(c).map_err(err(format!("{pointer}/codomain")))?,
                None => a.clone(),
            };
            let rule = Homomorphism::from_matrix(&a, *memory, &b, 1, matrix.clone()).map_err(err(format!("{pointer}/matrix")))?;
            GroupCA::new(rule).map_err(err(format!("{pointer}/memory")))
        }
        CaSpec::Images { memory, codomain, generators, images } => {
            let b = match codomain {
                Some(c) => build_alphabet(c).map_err(err(format!("{pointer}/codomain")))?,
                None => a.clone(),
            };
            let mut violations = Vec::new();
            let mut gens = Vec::new();
            for (i, g) in generators.iter().enumerate() {
                let at = format!("{pointer}/generators/{i}");
                if g.len() != *memory {
                    violations.push(Violation::new(at, format!("generator has arity {}, expected {memory}", g.len())));
                    continue;
                }
                match build_tuple(&a, g) {
                    Ok(t) => gens.push(t),
                    Err(e) => violations.push(Violation::new(at, message(&e))),
                }
            }
            let mut imgs = Vec::new();
            for (i, x) in images.iter().enumerate() {
                match build_elem(&b, x) {
                    Ok(e) => imgs.push(vec![e]),
                    Err(e) => violations.push(Violation::new(format!("{pointer}/images/{i}"), message(&e))),
                }
            }
            if !violations.is_empty() {
                return Err(violations);
            }
            let rule = Homomorphism::from_generator_images(&a, *memory, &b, 1, &gens, &imgs)
                .map_err(err(pointer.to_string()))?;
            GroupCA::new(rule).map_err(err(format!("{pointer}/memory")))
        }
    }
}
