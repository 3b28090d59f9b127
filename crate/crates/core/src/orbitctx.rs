//! Nilpotent orbit contexts: sl2 data, gradings and parabolic data.
//!
//! An orbit is registered by a list of roots `β_i` forming a simple system
//! of a closed subsystem; its representative is the regular nilpotent
//! element `N = Σ E_{β_i}` of that subsystem. The neutral element `H` of
//! the sl2 triple grades the Lie algebra by `𝔤(i) = {X : [H, X] = iX}`.
//! Its Levi factor `𝔩 = 𝔤(0)` and the parabolic `𝔭 = ⊕_{i≥0} 𝔤(i)` drive
//! the fiber computations.

use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::{LiePoly, Sl2Triple, StructureTable};
use crate::error::{LieError, Result};
use crate::linalg::{to_i64, Q};
use crate::rootcore::{RootId, RootSystem};

/// A registered nilpotent orbit with its sl2 data.
#[derive(Clone, Debug)]
pub struct OrbitContext {
    /// Command line key, e.g. `G2a1`.
    pub key: String,
    /// Display label, e.g. `G2(a1)`.
    pub label: String,
    /// Roots whose root vectors sum to the representative `N`.
    pub generators: Vec<RootId>,
    /// Dynkin type of the subsystem spanned by the generators.
    pub subsystem_type: String,
    /// The sl2 triple `(N, H, Y)`.
    pub triple: Sl2Triple,
    /// `α_i(H)` for every simple root, in the internal labeling.
    pub weighted_diagram: Vec<i32>,
    /// The diagram the orbit is registered with, in the same labeling.
    pub expected_diagram: Vec<i32>,
    /// Degree `γ(H)` of every root, indexed by root id.
    pub degrees: Vec<i32>,
    /// Simple roots of the Levi factor `𝔩 = 𝔤(0)`.
    pub levi_simple: Vec<usize>,
    /// Dimension of the orbit, `dim 𝔤 - dim 𝔤(0) - dim 𝔤(1)`.
    pub dim: usize,
}

/// Root sets attached to the grading of an orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingSpaces {
    /// Roots of the Levi factor (degree 0).
    pub levi_roots: Vec<RootId>,
    /// Positive roots of the Levi factor.
    pub levi_positive: Vec<RootId>,
    /// Roots of the nilradical `𝔲_P` (positive degree).
    pub up_roots: Vec<RootId>,
    /// Roots of `𝔲_P^{≥2}`.
    pub up_ge2_roots: Vec<RootId>,
    /// Roots of `𝔤(2)`.
    pub g2_roots: Vec<RootId>,
}

struct OrbitSpec {
    key: &'static str,
    label: &'static str,
    aliases: &'static [&'static str],
    generators: &'static [&'static [i32]],
    diagram: &'static [i32],
}

const G2_ORBITS: &[OrbitSpec] = &[
    OrbitSpec {
        key: "zero",
        label: "{0}",
        aliases: &["0", "{0}"],
        generators: &[],
        diagram: &[0, 0],
    },
    OrbitSpec {
        key: "A1",
        label: "A1",
        aliases: &[],
        generators: &[&[3, 2]],
        diagram: &[0, 1],
    },
    OrbitSpec {
        key: "A1t",
        label: "Ã1",
        aliases: &["Ã1", "A1~", "tA1"],
        generators: &[&[2, 1]],
        diagram: &[1, 0],
    },
    OrbitSpec {
        key: "G2a1",
        label: "G2(a1)",
        aliases: &["G2(a1)"],
        generators: &[&[1, 1], &[3, 1]],
        diagram: &[0, 2],
    },
    OrbitSpec {
        key: "G2",
        label: "G2",
        aliases: &["reg", "regular"],
        generators: &[&[1, 0], &[0, 1]],
        diagram: &[2, 2],
    },
];

const F4_ORBITS: &[OrbitSpec] = &[OrbitSpec {
    key: "F4a2",
    label: "F4(a2)",
    aliases: &["F4(a2)"],
    generators: &[&[1, 1, 2, 0], &[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 1, 1, 0]],
    diagram: &[0, 2, 0, 2],
}];

/// The E6 orbit is registered with its diagram in Bourbaki node order;
/// [`orbit_context`] converts it to the internal chain labeling.
const E6_ORBITS: &[OrbitSpec] = &[OrbitSpec {
    key: "E6a3",
    label: "E6(a3)",
    aliases: &["E6(a3)"],
    generators: &[
        &[0, 1, 1, 0, 0, 0],
        &[0, 0, 0, 1, 1, 0],
        &[0, 0, 1, 0, 0, 1],
        &[1, 1, 0, 0, 0, 0],
        &[0, 0, 1, 1, 0, 0],
        &[0, 1, 1, 1, 0, 1],
    ],
    diagram: &[2, 0, 0, 2, 0, 2],
}];

fn specs_for(rs: &RootSystem) -> &'static [OrbitSpec] {
    match rs.label() {
        "G2" => G2_ORBITS,
        "F4" => F4_ORBITS,
        "E6" => E6_ORBITS,
        _ => &[],
    }
}

/// Keys of the orbits registered for a root system, in increasing dimension.
pub fn registered_orbits(rs: &RootSystem) -> Vec<&'static str> {
    specs_for(rs).iter().map(|s| s.key).collect()
}

/// Builds the context of a registered orbit and verifies its sl2 data.
pub fn orbit_context(st: &StructureTable, key: &str) -> Result<OrbitContext> {
    let rs = st.rs();
    let spec = specs_for(rs)
        .iter()
        .find(|s| s.key == key || s.label == key || s.aliases.contains(&key))
        .ok_or_else(|| LieError::UnknownOrbit {
            orbit: key.to_string(),
            type_label: rs.label().to_string(),
            supported: registered_orbits(rs).join(", "),
        })?;
    let generators = spec
        .generators
        .iter()
        .map(|c| rs.require(c))
        .collect::<Result<Vec<_>>>()?;
    let sub = rs.closed_subsystem(&generators)?;
    let triple = st.regular_nilpotent_sl2(&sub)?;
    let degrees = rs
        .root_ids()
        .map(|g| {
            to_i64(&st.root_value(g, &triple.h_coords))
                .map(|v| v as i32)
                .ok_or_else(|| LieError::OrbitCheck(format!("non-integral degree on root {g}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let weighted_diagram: Vec<i32> = (0..rs.rank()).map(|i| degrees[i]).collect();
    let expected_diagram = match rs.bourbaki_labels() {
        Some(p) => p.iter().map(|&b| spec.diagram[b]).collect(),
        None => spec.diagram.to_vec(),
    };
    let levi_simple: Vec<usize> = (0..rs.rank()).filter(|&i| degrees[i] == 0).collect();
    let g0 = rs.root_ids().filter(|&g| degrees[g] == 0).count() + rs.rank();
    let g1 = rs.root_ids().filter(|&g| degrees[g] == 1).count();
    let ctx = OrbitContext {
        key: spec.key.to_string(),
        label: spec.label.to_string(),
        subsystem_type: if generators.is_empty() {
            "0".into()
        } else {
            sub.type_label.clone()
        },
        generators,
        triple,
        weighted_diagram,
        expected_diagram,
        degrees,
        levi_simple,
        dim: st.dim() - g0 - g1,
    };
    if !verify_weighted_diagram(&ctx) {
        return Err(LieError::OrbitCheck(format!(
            "{}: diagram {:?} differs from registered {:?}",
            ctx.label, ctx.weighted_diagram, ctx.expected_diagram
        )));
    }
    if ctx.generators.iter().any(|&g| ctx.degrees[g] != 2) {
        return Err(LieError::OrbitCheck(format!("{}: N is not in g(2)", ctx.label)));
    }
    Ok(ctx)
}

/// True when `α_i(H)` is nonnegative, dominant and equals the registered
/// weighted Dynkin diagram.
pub fn verify_weighted_diagram(ctx: &OrbitContext) -> bool {
    ctx.weighted_diagram.iter().all(|&x| (0..=2).contains(&x))
        && ctx.weighted_diagram == ctx.expected_diagram
}

/// Root sets of `𝔩`, `𝔲_P`, `𝔲_P^{≥2}` and `𝔤(2)`.
pub fn grading_spaces(rs: &RootSystem, ctx: &OrbitContext) -> GradingSpaces {
    let pick = |f: &dyn Fn(RootId) -> bool| rs.root_ids().filter(|&g| f(g)).collect::<Vec<_>>();
    GradingSpaces {
        levi_roots: pick(&|g| ctx.degrees[g] == 0),
        levi_positive: pick(&|g| ctx.degrees[g] == 0 && rs.is_positive(g)),
        up_roots: pick(&|g| ctx.degrees[g] > 0),
        up_ge2_roots: pick(&|g| ctx.degrees[g] >= 2),
        g2_roots: pick(&|g| ctx.degrees[g] == 2),
    }
}

impl OrbitContext {
    /// The nilpotent representative `N` over `nvars` polynomial variables.
    pub fn nilpotent(&self, nvars: usize) -> LiePoly {
        self.triple.n.lift(nvars)
    }

    /// `H` in simple coroot coordinates.
    pub fn h_coords(&self) -> &[Q] {
        &self.triple.h_coords
    }

    /// True for the zero orbit.
    pub fn is_zero_orbit(&self) -> bool {
        self.generators.is_empty() && self.h_coords().iter().all(Zero::is_zero)
    }

    /// Serializable summary.
    pub fn report(&self, rs: &RootSystem) -> OrbitReport {
        OrbitReport {
            key: self.key.clone(),
            label: self.label.clone(),
            dim: self.dim,
            subsystem_type: self.subsystem_type.clone(),
            nilpotent: self.generators.iter().map(|&g| rs.root_ascii(g)).collect(),
            h_coroot_coords: self.h_coords().iter().map(ToString::to_string).collect(),
            weighted_diagram: self.weighted_diagram.clone(),
            levi_simple: self.levi_simple.iter().map(|&i| rs.simple_ascii(i).to_string()).collect(),
        }
    }
}

/// JSON form of an orbit context.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub key: String,
    pub label: String,
    pub dim: usize,
    pub subsystem_type: String,
    pub nilpotent: Vec<String>,
    pub h_coroot_coords: Vec<String>,
    pub weighted_diagram: Vec<i32>,
    pub levi_simple: Vec<String>,
}

/// How the component group `A(N)` acts on the cohomology of fibers.
///
/// For every orbit other than `G2(a1)` in type G2 the group `A(N)` is
/// trivial. For `G2(a1)` it is the symmetric group on three letters with
/// irreducible characters `ψ3` (trivial), `ψ21` (reflection) and `ψ111`
/// (sign); the fiber data below record how it permutes the irreducible
/// components of each nonempty fiber.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentActionData {
    pub orbit: String,
    pub group: String,
    pub irreps: Vec<String>,
    pub irrep_dims: Vec<u32>,
    pub entries: Vec<ComponentActionEntry>,
}

/// `A(N)` action on one fiber.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentActionEntry {
    /// Ideal key, e.g. `I_beta_alpha`.
    pub ideal: String,
    /// Number of connected components of the fiber.
    pub connected_components: usize,
    /// Sizes of the `A(N)`-orbits on irreducible components.
    pub component_orbits: Vec<usize>,
    /// Multiplicity of each irreducible of `A(N)` in `H^{2j}`, by `j`.
    pub by_degree: Vec<Vec<u32>>,
}

/// Curated `A(N)` data for the subregular orbit of G2.
pub fn g2a1_component_action() -> ComponentActionData {
    let entry = |ideal: &str, cc: usize, orbits: &[usize], deg: &[[u32; 3]]| ComponentActionEntry {
        ideal: ideal.into(),
        connected_components: cc,
        component_orbits: orbits.to_vec(),
        by_degree: deg.iter().map(|d| d.to_vec()).collect(),
    };
    ComponentActionData {
        orbit: "G2a1".into(),
        group: "S3".into(),
        irreps: vec!["psi3".into(), "psi21".into(), "psi111".into()],
        irrep_dims: vec![1, 2, 1],
        entries: vec![
            // Three points permuted transitively.
            entry("I_beta_alpha", 3, &[3], &[[1, 1, 0]]),
            // Three disjoint projective lines permuted transitively.
            entry("I_alpha", 3, &[3], &[[1, 1, 0], [1, 1, 0]]),
            // One projective line, fixed.
            entry("I_beta", 1, &[1], &[[1, 0, 0], [1, 0, 0]]),
            // Four lines in a chain shaped like the diagram of D4: the
            // middle line is fixed and the three outer ones are permuted.
            entry("I_alphabeta", 1, &[3, 1], &[[1, 0, 0], [2, 1, 0]]),
        ],
    }
}

/// Parses an orbit key or label for a root system.
pub fn parse_orbit(rs: &RootSystem, key: &str) -> Result<&'static str> {
    specs_for(rs)
        .iter()
        .find(|s| s.key == key || s.label == key || s.aliases.contains(&key))
        .map(|s| s.key)
        .ok_or_else(|| LieError::UnknownOrbit {
            orbit: key.to_string(),
            type_label: rs.label().to_string(),
            supported: registered_orbits(rs).join(", "),
        })
}
