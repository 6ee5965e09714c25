//! Artifact emission: the Priestley dual or the topological side of an
//! input as JSON or as a DOT Hasse diagram, or the full check report as
//! JSON. Output is deterministic — node order follows the library's
//! ascending enumerations and no map is iterated unsorted.

use serde::Serialize;

use priestley::duality::PriestleyDual;
use priestley::lattice::FinLattice;
use priestley::poset::FinPoset;
use priestley::topspace::{spectral_space_of_dual, FiniteTopSpace};
use priestley::Bounds;

use crate::input::{ParsedInput, Payload, UsageError};
use crate::report::SCHEMA_VERSION;
use crate::suites::{run_suite, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Dual,
    Space,
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

/// Emitted text plus whether a report inside it carries failures, so the
/// caller can exit 1 without re-parsing its own output.
#[derive(Debug)]
pub struct Artifact {
    pub text: String,
    pub failed: bool,
}

impl Artifact {
    fn ok(text: String) -> Artifact {
        Artifact { text, failed: false }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DualArtifact {
    schema_version: u32,
    kind: &'static str,
    points: usize,
    labels: Vec<String>,
    /// Hasse cover pairs `[lower, upper]` of the dual order.
    cover_pairs: Vec<(usize, usize)>,
    /// Point indices whose prime filters are completely prime.
    y: Vec<usize>,
    /// σ(a) per lattice element: the extent of `a` as point indices.
    sigma: Vec<SigmaRow>,
}

#[derive(Serialize)]
struct SigmaRow {
    element: String,
    extent: Vec<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpaceArtifact {
    schema_version: u32,
    kind: &'static str,
    points: usize,
    labels: Vec<String>,
    opens: Vec<Vec<usize>>,
}

pub fn emit(
    input: &ParsedInput,
    target: Target,
    format: Format,
    timings: bool,
) -> Result<Artifact, UsageError> {
    let bounds = &input.bounds;
    match target {
        Target::Report => match format {
            Format::Json => {
                let report = run_suite(input, Suite::All, timings)?;
                let failed = !report.all_passed();
                Ok(Artifact { text: report.render(), failed })
            }
            Format::Dot => Err(UsageError(
                "unsupported target for dot format: a report renders as json only".into(),
            )),
        },
        Target::Dual => {
            let dual = dual_of(input, bounds)?;
            match format {
                Format::Json => Ok(Artifact::ok(render_dual_json(&dual))),
                Format::Dot => Ok(Artifact::ok(render_dot("dual", dual.order()))),
            }
        }
        Target::Space => {
            let space = space_of(input, bounds)?;
            match format {
                Format::Json => Ok(Artifact::ok(render_space_json(&space))),
                Format::Dot => {
                    let order = space.specialization()?;
                    Ok(Artifact::ok(render_dot("space", &order)))
                }
            }
        }
    }
}

/// The lattice whose dual to draw: the input lattice itself, the downset
/// lattice of an input poset, or the open-set frame of an input space.
fn dual_of(input: &ParsedInput, bounds: &Bounds) -> Result<PriestleyDual, UsageError> {
    let dual = match &input.payload {
        Payload::Lattice(l) => PriestleyDual::of(l, bounds)?,
        Payload::Poset(p) => {
            let (lat, _) = FinLattice::downset_lattice(p, bounds)?;
            PriestleyDual::of(&lat, bounds)?
        }
        Payload::Space(s) => {
            let (frame, _) = s.open_frame()?;
            PriestleyDual::of(&frame, bounds)?
        }
    };
    Ok(dual)
}

/// The space the input denotes: itself, the upset topology of a poset, or
/// the spectral companion of a lattice's dual.
fn space_of(input: &ParsedInput, bounds: &Bounds) -> Result<FiniteTopSpace, UsageError> {
    let space = match &input.payload {
        Payload::Space(s) => s.clone(),
        Payload::Poset(p) => FiniteTopSpace::alexandrov(p, bounds)?,
        Payload::Lattice(l) => {
            let dual = PriestleyDual::of(l, bounds)?;
            spectral_space_of_dual(&dual, bounds)?
        }
    };
    Ok(space)
}

fn render_dual_json(dual: &PriestleyDual) -> String {
    let l = dual.base();
    let artifact = DualArtifact {
        schema_version: SCHEMA_VERSION,
        kind: "dual",
        points: dual.point_count(),
        labels: dual.order().labels().to_vec(),
        cover_pairs: dual.order().cover_pairs(),
        y: dual.y_set().iter().collect(),
        sigma: (0..l.n())
            .map(|a| SigmaRow {
                element: l.label(a).to_string(),
                extent: dual.sigma(a).iter().collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&artifact).expect("artifact serializes");
    out.push('\n');
    out
}

fn render_space_json(space: &FiniteTopSpace) -> String {
    let artifact = SpaceArtifact {
        schema_version: SCHEMA_VERSION,
        kind: "space",
        points: space.n(),
        labels: space.labels().to_vec(),
        opens: space.opens().iter().map(|u| u.iter().collect()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&artifact).expect("artifact serializes");
    out.push('\n');
    out
}

fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A Hasse diagram in DOT: one box per element, one edge per cover pair,
/// drawn bottom-to-top so the order reads upward.
fn render_dot(name: &str, order: &FinPoset) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {name} {{\n"));
    out.push_str("  rankdir = BT;\n");
    out.push_str("  node [shape = box];\n");
    for i in 0..order.n() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", dot_escape(order.label(i))));
    }
    for (lo, hi) in order.cover_pairs() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}
