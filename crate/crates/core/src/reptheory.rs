//! Characters of the Weyl group of G2 and the dot action on the cohomology
//! of regular semisimple Hessenberg varieties.
//!
//! The dot action is determined by collecting linear constraints on the
//! graded character `P_M(q) = Σ χ_{H^{2i}} q^i`:
//!
//! * the summands of the decomposition theorem supported on the largest
//!   orbit in the image of `π_I`, read off from the graded `A(N)`-module
//!   structure of the fiber and pushed through the Springer table;
//! * palindromy from Hard Lefschetz;
//! * for every `J ⊂ Δ`, the dimension of the `W_J`-invariants in each degree,
//!   which equals the Betti number of the regular Hessenberg variety
//!   `Hess(M, x_J)` and is computed cell by cell.
//!
//! The unknown part of `P_M(q)` is spanned by Springer characters of orbits
//! strictly below the largest one, and the resulting system is solved
//! exactly. Lower bounds from connectedness and restriction to smaller
//! Hessenberg spaces are checked against the solution and used to report
//! the remainder that is not forced by them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::chevalley::StructureTable;
use crate::error::{LieError, Result};
use crate::hessfibers::{enumerate_ideals, fiber_betti, fiber_components, fiber_paving, ideal_dual, HessenbergIdeal};
use crate::linalg::{q, solve, to_i64, Q};
use crate::orbitctx::{g2a1_component_action, orbit_context, registered_orbits, OrbitContext};
use crate::rootcore::{RootId, RootSystem};
use crate::weylgrp::{g2, parabolic_decompose, word_name, WeylElement, WeylGroup};

/// Names of the conjugacy classes of `W(G2)` by representative.
pub const CLASS_NAMES: [&str; 6] = ["1", "s", "t", "st", "(st)²", "(st)³"];

/// A rational function on the conjugacy classes of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Q>,
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|v| v.to_string()))
    }
}

impl ClassFunction {
    /// Class function from integer values.
    pub fn from_ints(values: &[i64]) -> Self {
        Self {
            values: values.iter().map(|&v| q(v)).collect(),
        }
    }

    /// The zero function on `n` classes.
    pub fn zero(n: usize) -> Self {
        Self {
            values: vec![Q::zero(); n],
        }
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    /// Pointwise multiple.
    pub fn scale(&self, c: &Q) -> Self {
        Self {
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }

    /// Value at the identity, the degree of a character.
    pub fn degree(&self) -> Q {
        self.values[0].clone()
    }
}

/// An irreducible character with its display names.
#[derive(Clone, Debug, Serialize)]
pub struct Irrep {
    /// Display name such as `χ₁`.
    pub name: String,
    /// ASCII name such as `chi1`.
    pub ascii: String,
    pub character: ClassFunction,
}

/// Character table of `W(G2)` with brute-forced conjugacy classes.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub class_names: Vec<String>,
    /// Canonical words of the class representatives.
    pub class_reps: Vec<Vec<usize>>,
    pub class_sizes: Vec<usize>,
    pub group_order: usize,
    /// Rows in the order `1, ε₁, ε₂, ε, χ₁, χ₂`.
    pub irreps: Vec<Irrep>,
    #[serde(skip)]
    class_of: BTreeMap<Vec<u16>, usize>,
}

/// Index of the trivial character.
pub const TRIVIAL: usize = 0;

const IRREP_NAMES: [(&str, &str); 6] = [
    ("1", "1"),
    ("ε₁", "eps1"),
    ("ε₂", "eps2"),
    ("ε", "eps"),
    ("χ₁", "chi1"),
    ("χ₂", "chi2"),
];

/// Character values at the classes of `1, s, t, st, (st)², (st)³`, with
/// `s` the reflection in the short simple root and `t` in the long one.
const IRREP_VALUES: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, -1, -1, 1, -1],
    [1, -1, 1, -1, 1, -1],
    [1, -1, -1, 1, 1, 1],
    [2, 0, 0, 1, -1, -2],
    [2, 0, 0, -1, -1, 2],
];

impl CharacterTable {
    /// Builds the table for type G2 and checks the orthogonality relations
    /// against the computed class sizes.
    pub fn g2(rs: &RootSystem) -> Result<Self> {
        g2::require_g2(rs)?;
        let w = WeylGroup::new(rs)?;
        let r = g2::rotation(rs);
        let s = WeylElement::simple_reflection(rs, 0);
        let t = WeylElement::simple_reflection(rs, 1);
        let r2 = r.mul(&r);
        let r3 = r2.mul(&r);
        let reps = [WeylElement::identity(rs), s, t, r.clone(), r2, r3];
        let mut class_of = BTreeMap::new();
        let mut class_sizes = Vec::with_capacity(reps.len());
        for (c, rep) in reps.iter().enumerate() {
            let mut size = 0;
            for x in w.elements() {
                let conj = x.mul(rep).mul(&x.inverse());
                let key = conj.permutation().to_vec();
                match class_of.get(&key) {
                    Some(&other) if other != c => {
                        return Err(LieError::CharacterCheck(format!(
                            "representatives of classes {} and {} are conjugate",
                            CLASS_NAMES[other], CLASS_NAMES[c]
                        )))
                    }
                    Some(_) => {}
                    None => {
                        class_of.insert(key, c);
                        size += 1;
                    }
                }
            }
            class_sizes.push(size);
        }
        if class_of.len() != w.order() {
            return Err(LieError::CharacterCheck(format!(
                "the six classes cover {} of {} elements",
                class_of.len(),
                w.order()
            )));
        }
        let irreps = IRREP_NAMES
            .iter()
            .zip(IRREP_VALUES.iter())
            .map(|(&(name, ascii), values)| Irrep {
                name: name.into(),
                ascii: ascii.into(),
                character: ClassFunction::from_ints(values),
            })
            .collect();
        let table = Self {
            class_names: CLASS_NAMES.iter().map(|c| c.to_string()).collect(),
            class_reps: reps.iter().map(|x| x.canonical_word(rs)).collect(),
            class_sizes,
            group_order: w.order(),
            irreps,
            class_of,
        };
        for i in 0..table.irreps.len() {
            for j in 0..table.irreps.len() {
                let ip = table.inner(&table.irreps[i].character, &table.irreps[j].character);
                if ip != q(i64::from(i == j)) {
                    return Err(LieError::CharacterCheck(format!(
                        "⟨{}, {}⟩ = {ip}",
                        table.irreps[i].name, table.irreps[j].name
                    )));
                }
            }
        }
        Ok(table)
    }

    /// Number of conjugacy classes.
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// Conjugacy class of a group element.
    pub fn class_of(&self, w: &WeylElement) -> usize {
        self.class_of[w.permutation()]
    }

    /// `⟨a, b⟩ = |W|^{-1} Σ_w a(w) b(w)`; the characters of a Weyl group
    /// are real, so no conjugation is needed.
    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> Q {
        let total: Q = self
            .class_sizes
            .iter()
            .zip(a.values.iter().zip(&b.values))
            .map(|(&n, (x, y))| q(n as i64) * x * y)
            .sum();
        total / q(self.group_order as i64)
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, f: &ClassFunction) -> Vec<Q> {
        self.irreps.iter().map(|r| self.inner(f, &r.character)).collect()
    }

    /// Integer multiplicities, failing when some are fractional.
    pub fn decompose_integral(&self, f: &ClassFunction) -> Result<Vec<i64>> {
        self.decompose(f)
            .iter()
            .map(|m| {
                to_i64(m).ok_or_else(|| LieError::CharacterCheck(format!("fractional multiplicity {m}")))
            })
            .collect()
    }

    /// The class function `Σ m_i χ_i`.
    pub fn compose(&self, multiplicities: &[i64]) -> ClassFunction {
        multiplicities
            .iter()
            .zip(&self.irreps)
            .fold(ClassFunction::zero(self.num_classes()), |acc, (&m, r)| {
                acc.add(&r.character.scale(&q(m)))
            })
    }

    /// Index of an irreducible by display or ASCII name.
    pub fn irrep_index(&self, name: &str) -> Option<usize> {
        self.irreps.iter().position(|r| r.name == name || r.ascii == name)
    }
}

/// Character table of `W(G2)`.
pub fn char_table_g2(rs: &RootSystem) -> Result<CharacterTable> {
    CharacterTable::g2(rs)
}

/// The permutation character of `W` on `W/W_J`: the value at `w` counts
/// the cosets `xW_J` fixed by `w`, i.e. `#{x : x⁻¹wx ∈ W_J} / |W_J|`.
pub fn induce_trivial(rs: &RootSystem, table: &CharacterTable, levi: &[usize]) -> Result<ClassFunction> {
    let w = WeylGroup::new(rs)?;
    let wj = WeylGroup::generated_by(rs, levi)?;
    let mut values = vec![Q::zero(); table.num_classes()];
    let mut seen = vec![false; table.num_classes()];
    for g in w.elements() {
        let c = table.class_of(g);
        if seen[c] {
            continue;
        }
        seen[c] = true;
        let count = w
            .elements()
            .iter()
            .filter(|x| wj.position(&x.inverse().mul(g).mul(x)).is_some())
            .count();
        values[c] = q(count as i64) / q(wj.order() as i64);
    }
    Ok(ClassFunction { values })
}

/// One row of the Springer correspondence.
#[derive(Clone, Debug, Serialize)]
pub struct SpringerRow {
    /// Orbit key, e.g. `G2a1`.
    pub orbit: String,
    /// Orbit label, e.g. `G2(a1)`.
    pub orbit_label: String,
    /// Irreducible local system, `1` for a trivial component group.
    pub local_system: String,
    /// Index of the corresponding irreducible of `W`, if any.
    pub character: Option<usize>,
    pub character_name: Option<String>,
}

/// The Springer correspondence for G2, normalized so that the trivial
/// character goes to the zero orbit.
pub fn springer_table_g2(table: &CharacterTable) -> Vec<SpringerRow> {
    const ROWS: [(&str, &str, &str, Option<&str>); 7] = [
        ("zero", "{0}", "1", Some("1")),
        ("A1", "A1", "1", Some("ε₁")),
        ("A1t", "Ã1", "1", Some("χ₂")),
        ("G2a1", "G2(a1)", "ψ₃", Some("χ₁")),
        ("G2a1", "G2(a1)", "ψ₂₁", Some("ε₂")),
        ("G2a1", "G2(a1)", "ψ₁₁₁", None),
        ("G2", "G2", "1", Some("ε")),
    ];
    ROWS.iter()
        .map(|&(orbit, label, local, chi)| {
            let character = chi.and_then(|c| table.irrep_index(c));
            SpringerRow {
                orbit: orbit.into(),
                orbit_label: label.into(),
                local_system: local.into(),
                character,
                character_name: character.map(|i| table.irreps[i].name.clone()),
            }
        })
        .collect()
}

fn levi_roots(rs: &RootSystem, levi: &[usize]) -> Vec<RootId> {
    rs.root_ids()
        .filter(|&g| {
            rs.coords(g)
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || levi.contains(&i))
        })
        .collect()
}

/// Dimension of the cell of `Hess(M, x_J)` attached to `w`, or `None` when
/// that cell is empty.
///
/// With `w = yv`, `y ∈ W_J`, `v ∈ W^J`, `M` dual to `I` and
/// `M_v = v·M ∩ 𝔩_J`, the cell is nonempty exactly when every simple root of
/// `J` lies in `y(Φ(M_v))`, and then has dimension
/// `|Φ_y ∩ y(Φ⁻(M_v))| + |y(Φ_v) ∩ w(Φ⁻(M))|`.
pub fn precup_cell_dim(rs: &RootSystem, ideal: &HessenbergIdeal, levi: &[usize], w: &WeylElement) -> Option<usize> {
    let dec = parabolic_decompose(rs, w, levi);
    let (y, v) = (&dec.y, &dec.v);
    let m = ideal_dual(rs, ideal);
    let lroots = levi_roots(rs, levi);
    let m_v: Vec<RootId> = m.iter().map(|&g| v.apply(g)).filter(|g| lroots.contains(g)).collect();
    let y_m_v: Vec<RootId> = m_v.iter().map(|&g| y.apply(g)).collect();
    if !levi.iter().all(|&j| y_m_v.contains(&rs.simple(j))) {
        return None;
    }
    let y_neg_m_v: Vec<RootId> = m_v
        .iter()
        .filter(|&&g| !rs.is_positive(g))
        .map(|&g| y.apply(g))
        .collect();
    let first = y.inversion_set().iter().filter(|g| y_neg_m_v.contains(g)).count();
    let w_neg_m: Vec<RootId> = m
        .iter()
        .filter(|&&g| !rs.is_positive(g))
        .map(|&g| w.apply(g))
        .collect();
    let second = v
        .inversion_set()
        .iter()
        .map(|&g| y.apply(g))
        .filter(|g| w_neg_m.contains(g))
        .count();
    Some(first + second)
}

/// One Weyl group element with its cell dimension.
#[derive(Clone, Debug, Serialize)]
pub struct PrecupEntry {
    pub word: Vec<usize>,
    pub name: String,
    /// `r^k` or `s r^k` form in type G2.
    pub alias: Option<String>,
    pub dim: Option<usize>,
}

/// Cell dimensions of `Hess(M, x_J)` for every Weyl group element.
pub fn precup_table(rs: &RootSystem, ideal: &HessenbergIdeal, levi: &[usize]) -> Result<Vec<PrecupEntry>> {
    let w = WeylGroup::new(rs)?;
    Ok(w.elements()
        .iter()
        .enumerate()
        .map(|(i, x)| PrecupEntry {
            word: w.word(i).to_vec(),
            name: word_name(rs, w.word(i)),
            alias: g2::dihedral_alias(rs, x).ok(),
            dim: precup_cell_dim(rs, ideal, levi, x),
        })
        .collect())
}

/// Betti numbers `b_{2d}` of `Hess(M, x_J)`, counting cells by dimension.
pub fn regular_hess_betti(rs: &RootSystem, ideal: &HessenbergIdeal, levi: &[usize]) -> Result<Vec<usize>> {
    let mut b: Vec<usize> = Vec::new();
    for e in precup_table(rs, ideal, levi)? {
        if let Some(d) = e.dim {
            if b.len() <= d {
                b.resize(d + 1, 0);
            }
            b[d] += 1;
        }
    }
    Ok(b)
}

/// A summand `IC(C(N)‾, ℒ)[b]` of the pushforward along `π_I`.
#[derive(Clone, Debug, Serialize)]
pub struct ICSummand {
    pub orbit: String,
    pub orbit_label: String,
    pub local_system: String,
    pub shift: i64,
    /// Degree `(d − b − dim 𝔤)/2` at which its Springer character enters `P_M(q)`.
    pub q_degree: usize,
    pub character: Option<String>,
}

/// `P_M(q)` as a list of class functions indexed by the power of `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCharacter {
    pub coeffs: Vec<ClassFunction>,
}

impl GradedCharacter {
    /// Builds a graded character from multiplicity vectors.
    pub fn from_multiplicities(table: &CharacterTable, mults: &[Vec<i64>]) -> Self {
        Self {
            coeffs: mults.iter().map(|m| table.compose(m)).collect(),
        }
    }

    /// Multiplicities of the irreducibles in every degree.
    pub fn multiplicities(&self, table: &CharacterTable) -> Result<Vec<Vec<i64>>> {
        self.coeffs.iter().map(|c| table.decompose_integral(c)).collect()
    }

    /// Dimension in each degree.
    pub fn dims(&self) -> Vec<Q> {
        self.coeffs.iter().map(ClassFunction::degree).collect()
    }

    /// Total dimension of the cohomology.
    pub fn total_dim(&self) -> Q {
        self.dims().into_iter().sum()
    }

    /// Whether `coeffs[i] = coeffs[n − i]`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Renders the polynomial in the display order of the Springer table,
    /// `1 + (2+ε₁)q + …`, factoring `(…)(1+q)` when both degrees agree.
    pub fn render(&self, table: &CharacterTable, ascii: bool) -> Result<String> {
        let mults = self.multiplicities(table)?;
        let order = display_order(table);
        let name = |i: usize| {
            if ascii {
                table.irreps[i].ascii.clone()
            } else {
                table.irreps[i].name.clone()
            }
        };
        let coeff = |m: &[i64]| -> (String, usize) {
            let mut parts = Vec::new();
            for &i in &order {
                let k = m[i];
                if k == 0 {
                    continue;
                }
                parts.push(match (i == TRIVIAL, k) {
                    (true, _) => k.to_string(),
                    (false, 1) => name(i),
                    (false, _) => format!("{k}{}", name(i)),
                });
            }
            let n = parts.len();
            (parts.join("+"), n)
        };
        let power = |i: usize| match (i, ascii) {
            (0, _) => String::new(),
            (1, _) => "q".to_string(),
            (_, true) => format!("q^{i}"),
            (_, false) => format!("q{}", g2::superscript(i as i64)),
        };
        if mults.len() == 2 && mults[0] == mults[1] {
            let (c, n) = coeff(&mults[0]);
            return Ok(if n > 1 { format!("({c})(1+q)") } else { format!("{c}(1+q)") });
        }
        let mut out = String::new();
        for (i, m) in mults.iter().enumerate() {
            let (c, n) = coeff(m);
            if n == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if n > 1 && i > 0 {
                let _ = write!(out, "({c}){}", power(i));
            } else {
                let _ = write!(out, "{c}{}", power(i));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        Ok(out)
    }

    /// JSON rows `{degree, multiplicities: {name: k}}`.
    pub fn to_rows(&self, table: &CharacterTable) -> Result<Vec<DegreeRow>> {
        let mults = self.multiplicities(table)?;
        Ok(mults
            .iter()
            .enumerate()
            .map(|(degree, m)| DegreeRow {
                degree,
                multiplicities: table
                    .irreps
                    .iter()
                    .zip(m)
                    .map(|(r, &k)| (r.name.clone(), k))
                    .collect(),
            })
            .collect())
    }
}

/// One degree of a graded character in serialized form.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub multiplicities: BTreeMap<String, i64>,
}

/// Irreducibles ordered by the orbit they correspond to, then the rest.
fn display_order(table: &CharacterTable) -> Vec<usize> {
    let mut order: Vec<usize> = springer_table_g2(table).iter().filter_map(|r| r.character).collect();
    for i in 0..table.irreps.len() {
        if !order.contains(&i) {
            order.push(i);
        }
    }
    order
}

/// How the graded character was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DotMethod {
    /// Unique solution of the linear constraints.
    Solved,
    /// `M = 𝔟`: the regular semisimple fiber is a `W`-torsor, so the
    /// cohomology is the regular representation in degree 0.
    RegularRepresentation,
}

/// The dot action for one Hessenberg ideal with the data used to find it.
#[derive(Clone, Debug, Serialize)]
pub struct DotAction {
    pub ideal: String,
    pub ideal_label: String,
    /// `|Φ(I)|`.
    pub ideal_size: usize,
    /// `dim G ×^B M`.
    pub d: usize,
    /// `dim G ×^B I`.
    pub d_vee: usize,
    /// `dim Hess(M, y)` for regular semisimple `y`.
    pub n: usize,
    /// Largest orbit in the image of `π_I`.
    pub max_orbit: String,
    pub max_orbit_label: String,
    /// Betti numbers of the fiber over that orbit.
    pub fiber_betti: Vec<usize>,
    /// Whether `Hess(M, y)` is connected.
    pub connected: bool,
    pub ic_summands: Vec<ICSummand>,
    /// Betti numbers of `Hess(M, x_J)` for every `J ⊂ Δ`, keyed by `J`.
    pub regular_betti: Vec<(Vec<usize>, Vec<usize>)>,
    /// Lower bounds from connectedness and restriction, as multiplicities.
    pub lower_bound: Vec<Vec<i64>>,
    /// Names of the Springer characters of orbits below the largest one.
    pub remainder_basis: Vec<String>,
    /// Part of each degree not forced by the IC summands and lower bounds,
    /// in coordinates of `remainder_basis`.
    pub remainder: Vec<Vec<i64>>,
    pub method: DotMethod,
    pub poincare: GradedCharacter,
    /// Multiplicities per degree, in table order.
    pub multiplicities: Vec<Vec<i64>>,
    pub rendered: String,
}

/// Subsets of the simple roots, ordered by size then lexicographically.
fn all_levis(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Local systems on an orbit with their `A(N)` dimensions.
fn local_systems(orbit_key: &str) -> Vec<(String, u32)> {
    if orbit_key == "G2a1" {
        let data = g2a1_component_action();
        let pretty = ["ψ₃", "ψ₂₁", "ψ₁₁₁"];
        pretty.iter().zip(&data.irrep_dims).map(|(p, &d)| (p.to_string(), d)).collect()
    } else {
        vec![("1".into(), 1)]
    }
}

/// Graded `A(N)`-module structure of `H^*(π_I^{-1}(N))`, validated against
/// the paving: multiplicities of each local system by degree.
fn component_action(
    ctx: &OrbitContext,
    ideal: &HessenbergIdeal,
    betti: &[usize],
    components: usize,
) -> Result<Vec<Vec<u32>>> {
    if ctx.key != "G2a1" {
        return Ok(betti.iter().map(|&b| vec![b as u32]).collect());
    }
    let data = g2a1_component_action();
    let entry = data.entries.iter().find(|e| e.ideal == ideal.key).ok_or_else(|| {
        LieError::Infeasible(format!("no A(N) data for the {} fiber over {}", ideal.label, ctx.label))
    })?;
    if entry.connected_components != components {
        return Err(LieError::Infeasible(format!(
            "A(N) data lists {} components for {} over {}, the paving has {components}",
            entry.connected_components, ideal.label, ctx.label
        )));
    }
    let dims: Vec<usize> = entry
        .by_degree
        .iter()
        .map(|m| m.iter().zip(&data.irrep_dims).map(|(&k, &d)| (k * d) as usize).sum())
        .collect();
    if dims != betti {
        return Err(LieError::Infeasible(format!(
            "A(N) data gives Betti numbers {dims:?} for {} over {}, the paving gives {betti:?}",
            ideal.label, ctx.label
        )));
    }
    Ok(entry.by_degree.clone())
}

/// Computes the dot action for every Hessenberg ideal of G2, in order of
/// increasing ideal size so restriction bounds are available.
pub fn dot_action_all(st: &StructureTable) -> Result<Vec<DotAction>> {
    let rs = st.rs();
    g2::require_g2(rs)?;
    let table = CharacterTable::g2(rs)?;
    let contexts: Vec<OrbitContext> = registered_orbits(rs)
        .into_iter()
        .map(|k| orbit_context(st, k))
        .collect::<Result<_>>()?;
    let mut done: Vec<DotAction> = Vec::new();
    let ideals = enumerate_ideals(rs);
    for ideal in &ideals {
        let prev: Vec<(&HessenbergIdeal, &DotAction)> = ideals
            .iter()
            .filter_map(|i| done.iter().find(|d| d.ideal == i.key).map(|d| (i, d)))
            .collect();
        let result = solve_ideal(st, &table, &contexts, ideal, &prev)?;
        done.push(result);
    }
    Ok(done)
}

/// The dot action for a single ideal.
pub fn dot_action(st: &StructureTable, ideal: &HessenbergIdeal) -> Result<DotAction> {
    dot_action_all(st)?
        .into_iter()
        .find(|d| d.ideal == ideal.key)
        .ok_or_else(|| LieError::UnknownIdeal {
            name: ideal.key.clone(),
            supported: enumerate_ideals(st.rs()).iter().map(|i| i.key.clone()).collect::<Vec<_>>().join(", "),
        })
}

/// Summands supported on the largest orbit in the image of `π_I`.
pub fn ic_summands(st: &StructureTable, ctx: &OrbitContext, ideal: &HessenbergIdeal) -> Result<Vec<ICSummand>> {
    let rs = st.rs();
    let table = CharacterTable::g2(rs)?;
    let springer = springer_table_g2(&table);
    let paving = fiber_paving(st, ctx, ideal)?;
    let betti = fiber_betti(&paving);
    if betti.is_empty() {
        return Err(LieError::Infeasible(format!(
            "the fiber of {} over {} is empty",
            ideal.label, ctx.label
        )));
    }
    let action = component_action(ctx, ideal, &betti, fiber_components(&paving))?;
    let dim_g = (rs.rank() + rs.num_roots()) as i64;
    let npos = rs.num_positive() as i64;
    let m = ideal.len() as i64;
    let d = npos + dim_g - m;
    let d_vee = npos + m;
    let systems = local_systems(&ctx.key);
    let mut out = Vec::new();
    for (j, mults) in action.iter().enumerate() {
        for (k, &count) in mults.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let (local, _) = &systems[k];
            let row = springer
                .iter()
                .find(|r| r.orbit == ctx.key && &r.local_system == local)
                .ok_or_else(|| LieError::Infeasible(format!("no Springer row for ({}, {local})", ctx.label)))?;
            if row.character.is_none() {
                return Err(LieError::Infeasible(format!(
                    "local system {local} on {} has no Springer character but occurs in H^{} of the {} fiber",
                    ctx.label,
                    2 * j,
                    ideal.label
                )));
            }
            let shift = d_vee - ctx.dim as i64 - 2 * j as i64;
            let twice = d - shift - dim_g;
            if twice < 0 || twice % 2 != 0 {
                return Err(LieError::Infeasible(format!(
                    "shift {shift} of IC({}, {local}) gives a non-integral degree",
                    ctx.label
                )));
            }
            for _ in 0..count {
                out.push(ICSummand {
                    orbit: ctx.key.clone(),
                    orbit_label: ctx.label.clone(),
                    local_system: local.clone(),
                    shift,
                    q_degree: (twice / 2) as usize,
                    character: row.character_name.clone(),
                });
            }
        }
    }
    // Relative Hard Lefschetz: shifts are symmetric about zero.
    let mut shifts: Vec<(String, i64)> = out.iter().map(|s| (s.local_system.clone(), s.shift)).collect();
    let mut mirrored: Vec<(String, i64)> = shifts.iter().map(|(l, b)| (l.clone(), -b)).collect();
    shifts.sort();
    mirrored.sort();
    if shifts != mirrored {
        return Err(LieError::Infeasible(format!(
            "IC shifts for {} over {} are not symmetric: {shifts:?}",
            ideal.label, ctx.label
        )));
    }
    Ok(out)
}

fn solve_ideal(
    st: &StructureTable,
    table: &CharacterTable,
    contexts: &[OrbitContext],
    ideal: &HessenbergIdeal,
    prev: &[(&HessenbergIdeal, &DotAction)],
) -> Result<DotAction> {
    let rs = st.rs();
    let nirr = table.irreps.len();
    let springer = springer_table_g2(table);
    let dim_g = rs.rank() + rs.num_roots();
    let npos = rs.num_positive();
    let size = ideal.len();
    let (d, d_vee, n) = (npos + dim_g - size, npos + size, npos - size);

    // Largest orbit whose fiber is nonempty.
    let mut max_idx = None;
    let mut max_betti = Vec::new();
    for (i, ctx) in contexts.iter().enumerate() {
        let paving = fiber_paving(st, ctx, ideal)?;
        if !paving.is_empty() {
            max_idx = Some(i);
            max_betti = fiber_betti(&paving);
        }
    }
    let max_idx = max_idx.ok_or_else(|| LieError::Infeasible(format!("every fiber of {} is empty", ideal.label)))?;
    let max_ctx = &contexts[max_idx];
    let ics = ic_summands(st, max_ctx, ideal)?;
    let mut ic_mults = vec![vec![0i64; nirr]; n + 1];
    for s in &ics {
        let name = s.character.as_deref().expect("ic_summands only emits summands with a character");
        let idx = table.irrep_index(name).expect("Springer characters are in the table");
        if s.q_degree > n {
            return Err(LieError::Infeasible(format!(
                "IC({}, {})[{}] lands in degree {} above {n}",
                s.orbit_label, s.local_system, s.shift, s.q_degree
            )));
        }
        ic_mults[s.q_degree][idx] += 1;
    }

    // Unknowns: Springer characters of strictly smaller orbits.
    let smaller: Vec<&str> = contexts[..max_idx].iter().map(|c| c.key.as_str()).collect();
    let basis: Vec<usize> = springer
        .iter()
        .filter(|r| smaller.contains(&r.orbit.as_str()))
        .filter_map(|r| r.character)
        .collect();

    let levis = all_levis(rs.rank());
    let mut regular_betti = Vec::with_capacity(levis.len());
    for j in &levis {
        let mut b = regular_hess_betti(rs, ideal, j)?;
        if b.len() > n + 1 {
            return Err(LieError::Infeasible(format!(
                "Hess(M, x_J) for {} and J={j:?} has cells above dimension {n}",
                ideal.label
            )));
        }
        b.resize(n + 1, 0);
        regular_betti.push((j.clone(), b));
    }
    let inds: Vec<Vec<i64>> = levis
        .iter()
        .map(|j| table.decompose_integral(&induce_trivial(rs, table, j)?))
        .collect::<Result<_>>()?;
    let connected = regular_betti[0].1[0] == 1;

    let (method, mults) = if size == npos {
        // M = 𝔟: the regular representation in degree 0.
        let regular: Vec<i64> = table.irreps.iter().map(|r| to_i64(&r.character.degree()).unwrap_or(0)).collect();
        check_constraints(std::slice::from_ref(&regular), &inds, &regular_betti, ideal)?;
        for (k, &m) in ic_mults[0].iter().enumerate() {
            if m > regular[k] {
                return Err(LieError::Infeasible(format!(
                    "IC summands exceed the regular representation for {}",
                    ideal.label
                )));
            }
        }
        (DotMethod::RegularRepresentation, vec![regular])
    } else {
        let nb = basis.len();
        let nvars = (n + 1) * nb;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut rhs: Vec<Q> = Vec::new();
        for (ji, (_, b)) in regular_betti.iter().enumerate() {
            let ind = &inds[ji];
            for i in 0..=n {
                let mut row = vec![Q::zero(); nvars];
                for (k, &chi) in basis.iter().enumerate() {
                    row[i * nb + k] = q(ind[chi]);
                }
                let known: i64 = ic_mults[i].iter().zip(ind).map(|(a, b)| a * b).sum();
                rows.push(row);
                rhs.push(q(b[i] as i64 - known));
            }
        }
        for i in 0..=n {
            for k in 0..nb {
                if i < n - i {
                    let mut row = vec![Q::zero(); nvars];
                    row[i * nb + k] = q(1);
                    row[(n - i) * nb + k] = q(-1);
                    rows.push(row);
                    rhs.push(Q::zero());
                }
            }
        }
        let sol = solve(&rows, &rhs).ok_or_else(|| {
            LieError::Infeasible(format!(
                "no graded character for {} satisfies the invariant dimensions {:?} with IC summands {:?}",
                ideal.label, regular_betti, ic_mults
            ))
        })?;
        if !sol.kernel.is_empty() {
            return Err(LieError::Underdetermined(format!(
                "{}: {} free parameters among the multiplicities of {}",
                ideal.label,
                sol.kernel.len(),
                basis.iter().map(|&i| table.irreps[i].name.as_str()).collect::<Vec<_>>().join(", ")
            )));
        }
        let mut mults = ic_mults.clone();
        for i in 0..=n {
            for (k, &chi) in basis.iter().enumerate() {
                let x = &sol.particular[i * nb + k];
                let v = to_i64(x).filter(|_| !x.is_negative()).ok_or_else(|| {
                    LieError::Infeasible(format!(
                        "multiplicity of {} in degree {i} for {} is {x}",
                        table.irreps[chi].name, ideal.label
                    ))
                })?;
                mults[i][chi] += v;
            }
        }
        (DotMethod::Solved, mults)
    };

    // Lower bounds: H⁰ and the top degree contain the trivial character when
    // connected, and H² of every larger Hessenberg space injects into H²
    // and then into degrees 1..n−1 by Lefschetz.
    let mut lower = vec![vec![0i64; nirr]; n + 1];
    if connected {
        lower[0][TRIVIAL] = 1;
        lower[n][TRIVIAL] = 1;
        for (sub, da) in prev {
            if sub.roots.len() < ideal.roots.len() && sub.roots.iter().all(|g| ideal.contains(*g)) && da.n >= 1 {
                for row in lower.iter_mut().take(n).skip(1) {
                    for (l, &m) in row.iter_mut().zip(&da.multiplicities[1]) {
                        *l = (*l).max(m);
                    }
                }
            }
        }
    }
    let mut remainder = vec![vec![0i64; basis.len()]; mults.len()];
    for i in 0..mults.len() {
        for k in 0..nirr {
            let rest = mults[i][k] - ic_mults.get(i).map_or(0, |r| r[k]);
            if let Some(pos) = basis.iter().position(|&b| b == k) {
                if rest < lower[i][k] {
                    return Err(LieError::Infeasible(format!(
                        "{} in degree {i} for {}: lower bound {} exceeds {rest}",
                        table.irreps[k].name, ideal.label, lower[i][k]
                    )));
                }
                remainder[i][pos] = rest - lower[i][k];
            } else if mults[i][k] < lower[i][k] {
                return Err(LieError::Infeasible(format!(
                    "{} in degree {i} for {}: lower bound {} exceeds {}",
                    table.irreps[k].name, ideal.label, lower[i][k], mults[i][k]
                )));
            }
        }
    }

    let poincare = GradedCharacter::from_multiplicities(table, &mults);
    let total = poincare.total_dim();
    if total != q(table.group_order as i64) || !poincare.is_palindromic() {
        return Err(LieError::Infeasible(format!(
            "{}: total dimension {total}, palindromic {}",
            ideal.label,
            poincare.is_palindromic()
        )));
    }
    Ok(DotAction {
        ideal: ideal.key.clone(),
        ideal_label: ideal.label.clone(),
        ideal_size: size,
        d,
        d_vee,
        n,
        max_orbit: max_ctx.key.clone(),
        max_orbit_label: max_ctx.label.clone(),
        fiber_betti: max_betti,
        connected,
        ic_summands: ics,
        regular_betti,
        lower_bound: lower,
        remainder_basis: basis.iter().map(|&i| table.irreps[i].name.clone()).collect(),
        remainder,
        method,
        rendered: poincare.render(table, false)?,
        poincare,
        multiplicities: mults,
    })
}

fn check_constraints(
    mults: &[Vec<i64>],
    inds: &[Vec<i64>],
    regular_betti: &[(Vec<usize>, Vec<usize>)],
    ideal: &HessenbergIdeal,
) -> Result<()> {
    for ((j, b), ind) in regular_betti.iter().zip(inds) {
        for (i, m) in mults.iter().enumerate() {
            let lhs: i64 = m.iter().zip(ind).map(|(a, b)| a * b).sum();
            let rhs = b.get(i).copied().unwrap_or(0) as i64;
            if lhs != rhs {
                return Err(LieError::Infeasible(format!(
                    "{}: degree {i}, J={j:?}: invariants {lhs} but Hess(M, x_J) has {rhs} cells",
                    ideal.label
                )));
            }
        }
    }
    Ok(())
}

/// Dimension of the `W_J`-invariants in each degree of a graded character.
pub fn invariant_dims(table: &CharacterTable, ind: &ClassFunction, p: &GradedCharacter) -> Vec<Q> {
    p.coeffs.iter().map(|c| table.inner(c, ind)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_functions_add_and_scale() {
        let a = ClassFunction::from_ints(&[1, 2, 3]);
        let b = ClassFunction::from_ints(&[1, 0, -1]);
        assert_eq!(a.add(&b), ClassFunction::from_ints(&[2, 2, 2]));
        assert_eq!(a.scale(&q(2)).degree(), q(2));
    }

    #[test]
    fn levis_are_ordered() {
        assert_eq!(all_levis(2), vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }
}
