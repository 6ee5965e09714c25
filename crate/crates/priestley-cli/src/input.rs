//! Strict JSON input documents: exactly one of a poset (by covers), a
//! lattice (by order pairs), or a topological space (by open sets), plus
//! optional bounds and seed overrides. Unknown fields are rejected so a
//! typo fails loudly instead of silently checking something else.

use serde::Deserialize;

use priestley::lattice::FinLattice;
use priestley::poset::FinPoset;
use priestley::set::ElemSet;
use priestley::topspace::FiniteTopSpace;
use priestley::{Bounds, Error};

/// An input/usage problem. Everything routed here exits with code 2;
/// semantic check failures on well-formed inputs are reported in the
/// check report instead and exit with code 1.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> UsageError {
        UsageError(e.to_string())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub poset: Option<PosetInput>,
    #[serde(default)]
    pub lattice: Option<LatticeInput>,
    #[serde(default)]
    pub space: Option<SpaceInput>,
    #[serde(default)]
    pub options: Option<OptionsInput>,
}

/// A poset given by labeled elements and cover pairs `[lower, upper]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetInput {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

/// A lattice given by labeled elements and order pairs `[below, above]`.
/// The pairs may be any generating set of the order; the reflexive
/// transitive closure is taken before validation, so cycles surface as
/// `CycleDetected` rather than as a transitivity complaint.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeInput {
    pub elements: Vec<String>,
    #[serde(rename = "order-pairs")]
    pub order_pairs: Vec<(String, String)>,
}

/// A finite space given by its point count and its open sets as lists of
/// point indices. Points are named `p0, p1, …` in reports.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceInput {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsInput {
    #[serde(default)]
    pub bounds: Option<BoundsInput>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsInput {
    #[serde(default)]
    pub enumeration: Option<usize>,
    #[serde(default)]
    pub scott: Option<usize>,
    #[serde(default)]
    pub samples: Option<u64>,
}

/// The validated payload an input document denotes.
#[derive(Debug)]
pub enum Payload {
    Poset(FinPoset),
    Lattice(FinLattice),
    Space(FiniteTopSpace),
}

impl Payload {
    pub fn describe(&self) -> String {
        match self {
            Payload::Poset(p) => format!("poset ({} elements)", p.n()),
            Payload::Lattice(l) => format!("lattice ({} elements)", l.n()),
            Payload::Space(s) => format!("space ({} points)", s.n()),
        }
    }
}

#[derive(Debug)]
pub struct ParsedInput {
    pub payload: Payload,
    pub bounds: Bounds,
    pub seed: u64,
}

/// Default seed for sampled cross-checks; any fixed value keeps runs
/// byte-identical, which is the property the golden files pin down.
pub const DEFAULT_SEED: u64 = 17;

/// Parse and validate an input document from JSON text.
pub fn parse_input(text: &str) -> Result<ParsedInput, UsageError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        UsageError(format!(
            "parse error at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let given = doc.poset.is_some() as u8 + doc.lattice.is_some() as u8 + doc.space.is_some() as u8;
    if given != 1 {
        return Err(UsageError(format!(
            "input must contain exactly one of \"poset\", \"lattice\", \"space\" (found {given})"
        )));
    }

    let mut bounds = Bounds::default();
    let mut seed = DEFAULT_SEED;
    if let Some(options) = &doc.options {
        if let Some(b) = &options.bounds {
            if let Some(v) = b.enumeration {
                bounds.enumeration = v;
            }
            if let Some(v) = b.scott {
                bounds.scott = v;
            }
            if let Some(v) = b.samples {
                bounds.samples = v;
            }
        }
        if let Some(s) = options.seed {
            seed = s;
        }
    }

    let payload = if let Some(p) = &doc.poset {
        Payload::Poset(build_poset(p)?)
    } else if let Some(l) = &doc.lattice {
        Payload::Lattice(build_lattice(l)?)
    } else {
        Payload::Space(build_space(doc.space.as_ref().unwrap())?)
    };
    Ok(ParsedInput { payload, bounds, seed })
}

fn resolve(labels: &[String], name: &str, role: &str) -> Result<usize, UsageError> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| UsageError(format!("unknown element {name:?} in {role}")))
}

fn build_poset(input: &PosetInput) -> Result<FinPoset, UsageError> {
    let labels = input.elements.clone();
    let mut covers = Vec::with_capacity(input.covers.len());
    for (lo, hi) in &input.covers {
        covers.push((resolve(&labels, lo, "covers")?, resolve(&labels, hi, "covers")?));
    }
    Ok(FinPoset::from_covers_labeled(labels.len(), &covers, labels)?)
}

fn build_lattice(input: &LatticeInput) -> Result<FinLattice, UsageError> {
    let labels = input.elements.clone();
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptyPoset.into());
    }
    if n > ElemSet::CAPACITY {
        return Err(Error::BoundExceeded { size: n, bound: ElemSet::CAPACITY }.into());
    }
    let mut up = vec![ElemSet::EMPTY; n];
    for (i, row) in up.iter_mut().enumerate() {
        *row = row.with(i);
    }
    for (lo, hi) in &input.order_pairs {
        let lo = resolve(&labels, lo, "order-pairs")?;
        let hi = resolve(&labels, hi, "order-pairs")?;
        up[lo] = up[lo].with(hi);
    }
    // Reflexive transitive closure before handing the rows to the order
    // validator, so a≤b≤c≤a is reported as a cycle.
    loop {
        let mut changed = false;
        for i in 0..n {
            let mut reach = up[i];
            for j in up[i].iter() {
                reach = reach.union(up[j]);
            }
            if reach != up[i] {
                up[i] = reach;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let poset = FinPoset::from_leq(n, up, labels)?;
    Ok(FinLattice::from_poset(poset)?)
}

fn build_space(input: &SpaceInput) -> Result<FiniteTopSpace, UsageError> {
    let n = input.points;
    if n > ElemSet::CAPACITY {
        return Err(Error::BoundExceeded { size: n, bound: ElemSet::CAPACITY }.into());
    }
    let mut opens = Vec::with_capacity(input.opens.len());
    for open in &input.opens {
        let mut s = ElemSet::EMPTY;
        for &x in open {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, size: n }.into());
            }
            s = s.with(x);
        }
        opens.push(s);
    }
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    Ok(FiniteTopSpace::build(n, &opens, labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_two_chain_poset() {
        let parsed =
            parse_input(r#"{"poset":{"elements":["a","b"],"covers":[["a","b"]]}}"#).unwrap();
        match parsed.payload {
            Payload::Poset(p) => {
                assert_eq!(p.n(), 2);
                assert!(p.leq(0, 1));
                assert!(!p.leq(1, 0));
            }
            _ => panic!("expected a poset payload"),
        }
        assert_eq!(parsed.seed, DEFAULT_SEED);
        assert_eq!(parsed.bounds, Bounds::default());
    }

    #[test]
    fn parses_the_sierpinski_space() {
        let parsed = parse_input(r#"{"space":{"points":2,"opens":[[],[1],[0,1]]}}"#).unwrap();
        match parsed.payload {
            Payload::Space(s) => {
                assert_eq!(s.n(), 2);
                assert!(s.is_open(ElemSet::singleton(1)));
                assert!(!s.is_open(ElemSet::singleton(0)));
            }
            _ => panic!("expected a space payload"),
        }
    }

    #[test]
    fn rejects_cyclic_lattice_orders() {
        let err = parse_input(
            r#"{"lattice":{"elements":["a","b","c"],
                "order-pairs":[["a","b"],["b","c"],["c","a"]]}}"#,
        )
        .unwrap_err();
        assert!(err.0.contains("cycle"), "got: {err}");
    }

    #[test]
    fn rejects_unknown_fields_and_ambiguous_documents() {
        assert!(parse_input(r#"{"poset":{"elements":[],"covers":[],"extra":1}}"#).is_err());
        assert!(parse_input(r#"{"posett":{"elements":[],"covers":[]}}"#).is_err());
        let both = r#"{"poset":{"elements":["a"],"covers":[]},
                       "space":{"points":1,"opens":[[],[0]]}}"#;
        assert!(parse_input(both).unwrap_err().0.contains("exactly one"));
        assert!(parse_input("{}").unwrap_err().0.contains("exactly one"));
    }

    #[test]
    fn rejects_unresolved_references() {
        let err = parse_input(r#"{"poset":{"elements":["a"],"covers":[["a","z"]]}}"#).unwrap_err();
        assert!(err.0.contains("\"z\""), "got: {err}");
        let err =
            parse_input(r#"{"space":{"points":2,"opens":[[],[5],[0,1]]}}"#).unwrap_err();
        assert!(err.0.contains("out of range"), "got: {err}");
    }

    #[test]
    fn options_override_bounds_and_seed() {
        let parsed = parse_input(
            r#"{"lattice":{"elements":["0","1"],"order-pairs":[["0","1"]]},
                "options":{"bounds":{"scott":9,"samples":50},"seed":99}}"#,
        )
        .unwrap();
        assert_eq!(parsed.bounds.scott, 9);
        assert_eq!(parsed.bounds.samples, 50);
        assert_eq!(parsed.bounds.enumeration, Bounds::default().enumeration);
        assert_eq!(parsed.seed, 99);
    }

    #[test]
    fn transitive_closure_accepts_generating_pairs() {
        // Only the two covering pairs of a 3-chain are given; closure
        // supplies a ≤ c.
        let parsed = parse_input(
            r#"{"lattice":{"elements":["a","b","c"],
                "order-pairs":[["a","b"],["b","c"]]}}"#,
        )
        .unwrap();
        match parsed.payload {
            Payload::Lattice(l) => {
                assert!(l.leq(0, 2));
                assert_eq!(l.top(), 2);
            }
            _ => panic!("expected a lattice payload"),
        }
    }
}
