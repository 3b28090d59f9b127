//! Hessenberg ideals and the affine pavings of their fibers.
//!
//! For a nilpotent `N` with associated parabolic `P = L U_P` the fiber
//! `π_I^{-1}(N) = {gB : g^{-1}·N ∈ I}` splits along the decomposition
//! `G/B = ⊔_{v ∈ W^L} P v̇ B/B`. The piece over `v` is a vector bundle of
//! rank `r` over the Levi variety `{l(L∩B) : l^{-1}·N ∈ 𝔤(2) ∩ v·I}`, and
//! the latter is cut out cell by cell in the Bruhat cells of `L/(L∩B)` by
//! explicit polynomial equations. Each affine piece of the Levi variety
//! therefore lifts to one affine cell of the fiber, `r` dimensions larger.

pub mod exceptional;
pub mod locus;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chevalley::{Basis, LiePoly, StructureTable};
use crate::error::{LieError, Result};
use crate::orbitctx::{grading_spaces, GradingSpaces, OrbitContext};
use crate::poly::Poly;
use crate::rootcore::{RootId, RootSystem};
use crate::weylgrp::{word_name, WeylElement, WeylGroup};

pub use exceptional::{classify_quintuples_exceptional, BranchReport, ExceptionalClassification, GridEntry, StableSubspace};
pub use locus::{classify, Locus, LocusPiece, LocusShape};

/// An ad(𝔟)-stable subspace of the nilradical, stored by its roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HessenbergIdeal {
    /// Positive roots spanning the ideal, sorted by id.
    pub roots: Vec<RootId>,
    /// Minimal roots of the ideal, sorted by id.
    pub generators: Vec<RootId>,
    /// ASCII key such as `I_beta_2alpha`.
    pub key: String,
    /// Display label such as `I_{β+2α}`.
    pub label: String,
}

/// True when `roots` is a set of positive roots closed under adding
/// positive roots.
pub fn is_upper_closed(rs: &RootSystem, roots: &[RootId]) -> bool {
    let set: BTreeSet<RootId> = roots.iter().copied().collect();
    set.iter().all(|&g| rs.is_positive(g))
        && set.iter().all(|&g| {
            rs.positive_ids()
                .filter_map(|a| rs.add(g, a))
                .all(|s| set.contains(&s))
        })
}

impl HessenbergIdeal {
    /// Builds an ideal from its roots, checking upper closure.
    pub fn from_roots(rs: &RootSystem, roots: &[RootId]) -> Result<Self> {
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        roots.dedup();
        if !is_upper_closed(rs, &roots) {
            return Err(LieError::UnknownIdeal {
                name: roots
                    .iter()
                    .map(|&g| rs.root_name(g))
                    .collect::<Vec<_>>()
                    .join(","),
                supported: "upper-closed sets of positive roots".into(),
            });
        }
        let generators: Vec<RootId> = roots
            .iter()
            .copied()
            .filter(|&g| {
                (0..rs.rank()).all(|i| {
                    rs.sub(g, rs.simple(i))
                        .is_none_or(|d| !rs.is_positive(d) || roots.binary_search(&d).is_err())
                })
            })
            .collect();
        let (key, label) = if generators.is_empty() {
            ("I_emptyset".to_string(), "I_∅".to_string())
        } else {
            let sep = if rs.label() == "G2" { "" } else { "__" };
            let key = generators
                .iter()
                .map(|&g| rs.root_ascii(g).replace('+', "_"))
                .collect::<Vec<_>>()
                .join(sep);
            let label = generators
                .iter()
                .map(|&g| rs.root_name(g))
                .collect::<Vec<_>>()
                .join(",");
            (format!("I_{key}"), format!("I_{{{label}}}"))
        };
        Ok(Self {
            roots,
            generators,
            key,
            label,
        })
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    /// True for the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, g: RootId) -> bool {
        self.roots.binary_search(&g).is_ok()
    }
}

/// All Hessenberg ideals, ordered by size and then by sorted root ids.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<HessenbergIdeal> {
    let mut order: Vec<RootId> = rs.positive_ids().collect();
    order.sort_by_key(|&g| (std::cmp::Reverse(rs.height(g)), g));
    let mut chosen = vec![false; rs.num_roots()];
    let mut out = Vec::new();
    extend_ideals(rs, &order, 0, &mut chosen, &mut out);
    let mut ideals: Vec<HessenbergIdeal> = out
        .into_iter()
        .map(|roots| HessenbergIdeal::from_roots(rs, &roots).expect("upper sets are ideals"))
        .collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.roots.cmp(&b.roots)));
    ideals
}

fn extend_ideals(
    rs: &RootSystem,
    order: &[RootId],
    k: usize,
    chosen: &mut Vec<bool>,
    out: &mut Vec<Vec<RootId>>,
) {
    if k == order.len() {
        out.push(order.iter().copied().filter(|&g| chosen[g]).collect());
        return;
    }
    let g = order[k];
    extend_ideals(rs, order, k + 1, chosen, out);
    // Roots above `g` are decided already since they are higher.
    let allowed = (0..rs.rank()).all(|i| rs.add(g, rs.simple(i)).is_none_or(|s| chosen[s]));
    if allowed {
        chosen[g] = true;
        extend_ideals(rs, order, k + 1, chosen, out);
        chosen[g] = false;
    }
}

/// Looks an ideal up by key (`I_beta_alpha`), label (`I_{β+α}`) or the
/// generator list (`beta+alpha`, `alpha,beta`).
pub fn find_ideal(rs: &RootSystem, name: &str) -> Result<HessenbergIdeal> {
    let ideals = enumerate_ideals(rs);
    let wanted = name.trim();
    if let Some(i) = ideals.iter().find(|i| i.key == wanted || i.label == wanted) {
        return Ok(i.clone());
    }
    let by_generators = || -> Option<HessenbergIdeal> {
        let inner = wanted
            .strip_prefix("I_")
            .unwrap_or(wanted)
            .trim_start_matches('{')
            .trim_end_matches('}');
        let mut gens = Vec::new();
        for part in inner.split(',').filter(|p| !p.trim().is_empty()) {
            gens.push(rs.parse_root(part.trim()).ok()?);
        }
        gens.sort_unstable();
        ideals.iter().find(|i| i.generators == gens).cloned()
    };
    by_generators().ok_or_else(|| LieError::UnknownIdeal {
        name: name.to_string(),
        supported: if ideals.len() <= 16 {
            ideals.iter().map(|i| i.key.clone()).collect::<Vec<_>>().join(", ")
        } else {
            format!("{} upper-closed sets, named by their minimal roots", ideals.len())
        },
    })
}

/// Roots of the Hessenberg subspace `M` dual to `I`: `Φ(M) = Φ ∖ (−Φ(I))`.
pub fn ideal_dual(rs: &RootSystem, ideal: &HessenbergIdeal) -> Vec<RootId> {
    rs.root_ids().filter(|&g| !ideal.contains(rs.neg(g))).collect()
}

/// The expansion `Ad(g^{-1}) N` on one Bruhat cell of the Levi flag variety.
#[derive(Clone, Debug)]
pub struct LeviExpansion {
    /// The Levi Weyl group element indexing the cell.
    pub y: WeylElement,
    /// Its canonical reduced word.
    pub word: Vec<usize>,
    /// Names of the cell coordinates, one per letter.
    pub var_names: Vec<String>,
    /// Coefficient `f_γ` of `E_γ` for every root of `𝔤(2)`.
    pub coefficients: Vec<(RootId, Poly)>,
}

/// The part of the Levi variety lying in one cell.
#[derive(Clone, Debug)]
pub struct LeviCell {
    pub y: WeylElement,
    pub word: Vec<usize>,
    pub var_names: Vec<String>,
    /// `(γ, f_γ)` for the roots of `𝔤(2)` outside the target subspace.
    pub equations: Vec<(RootId, Poly)>,
    pub locus: Locus,
}

impl LeviCell {
    /// Dimension of the ambient cell.
    pub fn cell_dim(&self) -> usize {
        self.word.len()
    }
}

fn variable_names(levi: &[usize], word: &[usize]) -> Vec<String> {
    let distinct = word.iter().collect::<BTreeSet<_>>().len() == word.len();
    word.iter()
        .enumerate()
        .map(|(k, i)| {
            let index = if distinct {
                levi.iter().position(|j| j == i).unwrap() + 1
            } else {
                k + 1
            };
            format!("z{index}")
        })
        .collect()
}

fn check_levi_shape(rs: &RootSystem, ctx: &OrbitContext) -> Result<()> {
    if ctx.is_zero_orbit() || ctx.levi_simple.len() <= 1 {
        return Ok(());
    }
    let commuting = ctx.levi_simple.iter().all(|&i| {
        ctx.levi_simple
            .iter()
            .all(|&j| i == j || rs.cartan()[i][j] == 0)
    });
    if commuting && ctx.levi_simple.len() <= 3 {
        Ok(())
    } else {
        let sub = rs.closed_subsystem(
            &ctx.levi_simple.iter().map(|&i| rs.simple(i)).collect::<Vec<_>>(),
        )?;
        Err(LieError::UnsupportedSystem(format!(
            "unsupported Levi of type {} for orbit {}",
            sub.type_label, ctx.label
        )))
    }
}

/// Expands `Ad(g^{-1}) N` over every cell `x_{j1}(z1) ṡ_{j1} ⋯ x_{jk}(zk) ṡ_{jk}`
/// of the Levi flag variety, in the canonical order of `W_L`.
///
/// The inverse is taken as `ṡ_{jk} x_{jk}(-zk) ⋯ ṡ_{j1} x_{j1}(-z1)`; using
/// `ṡ` instead of `ṡ^{-1}` conjugates `N` by a torus element of order two,
/// which moves the locus by an automorphism and leaves its shape unchanged.
pub fn levi_expansions(st: &StructureTable, ctx: &OrbitContext) -> Result<Vec<LeviExpansion>> {
    let rs = st.rs();
    check_levi_shape(rs, ctx)?;
    let wl = WeylGroup::generated_by(rs, &ctx.levi_simple)?;
    let g2: Vec<RootId> = rs.root_ids().filter(|&g| ctx.degrees[g] == 2).collect();
    let mut out = Vec::with_capacity(wl.order());
    for (idx, y) in wl.elements().iter().enumerate() {
        let word = wl.word(idx).to_vec();
        let n = word.len();
        let mut x: LiePoly = ctx.nilpotent(n);
        for (k, &j) in word.iter().enumerate() {
            let minus_z = Poly::var(n, k).scale(&crate::linalg::q(-1));
            x = st.apply_unipotent(rs.simple(j), &minus_z, &x);
            x = st.apply_simple(j, &x);
        }
        if let Some(b) = x.support().into_iter().find(|b| match b {
            Basis::E(g) => ctx.degrees[*g] != 2,
            Basis::H(_) => true,
        }) {
            return Err(LieError::OrbitCheck(format!(
                "{}: Levi conjugate of N leaves g(2) at {b:?}",
                ctx.label
            )));
        }
        let coefficients = g2.iter().map(|&g| (g, x.coeff(Basis::E(g)))).collect();
        out.push(LeviExpansion {
            y: y.clone(),
            var_names: variable_names(&ctx.levi_simple, &word),
            word,
            coefficients,
        });
    }
    Ok(out)
}

/// Intersects `{l(L∩B) : l^{-1}·N ∈ U}` with every Levi cell, where `U`
/// is spanned by the root vectors of `target` inside `𝔤(2)`.
pub fn levi_fiber_from(expansions: &[LeviExpansion], target: &[RootId]) -> Result<Vec<LeviCell>> {
    expansions
        .iter()
        .map(|e| {
            let equations: Vec<(RootId, Poly)> = e
                .coefficients
                .iter()
                .filter(|(g, _)| !target.contains(g))
                .cloned()
                .collect();
            let locus = classify(
                equations.iter().map(|(_, p)| p.clone()).collect(),
                e.word.len(),
                &e.var_names,
            )?;
            Ok(LeviCell {
                y: e.y.clone(),
                word: e.word.clone(),
                var_names: e.var_names.clone(),
                equations,
                locus,
            })
        })
        .collect()
}

/// The Levi variety for an arbitrary subspace of `𝔤(2)`.
pub fn levi_fiber_for_roots(
    st: &StructureTable,
    ctx: &OrbitContext,
    target: &[RootId],
) -> Result<Vec<LeviCell>> {
    levi_fiber_from(&levi_expansions(st, ctx)?, target)
}

/// The quintuple attached to an orbit, an ideal and `v ∈ W^L`.
#[derive(Clone, Debug)]
pub struct QuintupleData {
    pub orbit: String,
    pub ideal: String,
    pub v: WeylElement,
    pub v_word: Vec<usize>,
    /// `v·Φ(I)`.
    pub translated: Vec<RootId>,
    /// Roots of `𝔲_P^{≥2} ∩ v·I`.
    pub up_cap: Vec<RootId>,
    /// Roots of `𝔤(2) ∩ v·I`.
    pub g2_cap: Vec<RootId>,
    /// Whether both caps are stable under the relevant Borel subalgebras.
    pub caps_stable: bool,
    /// `|Φ⁺_L| + ℓ(v) − codim(up_cap)`, the dimension when nonempty.
    pub expected_dim_p: i64,
    /// `|Φ⁺_L| − codim(g2_cap)`, the Levi dimension when nonempty.
    pub expected_dim_l: i64,
    pub levi: Vec<LeviCell>,
    /// Filled when the Levi variety is nonempty.
    pub dim_p: Option<usize>,
    pub dim_l: Option<usize>,
}

impl QuintupleData {
    /// True when the fiber meets `P v̇ B/B`.
    pub fn is_nonempty(&self) -> bool {
        self.dim_l.is_some()
    }

    /// Rank of the bundle over the Levi variety.
    pub fn rank(&self) -> Option<usize> {
        Some(self.dim_p? - self.dim_l?)
    }
}

fn stable_under(rs: &RootSystem, set: &[RootId], ambient: &[RootId], adders: &[RootId]) -> bool {
    set.iter().all(|&g| {
        adders.iter().all(|&a| match rs.add(g, a) {
            Some(s) if ambient.contains(&s) => set.contains(&s),
            _ => true,
        })
    })
}

/// Builds the quintuple data for `v`, decides nonemptiness from the Levi
/// variety and checks the dimension formula against it.
pub fn quintuple(
    st: &StructureTable,
    ctx: &OrbitContext,
    expansions: &[LeviExpansion],
    ideal: &HessenbergIdeal,
    v: &WeylElement,
) -> Result<QuintupleData> {
    let rs = st.rs();
    if !v.is_min_coset_rep(&ctx.levi_simple) {
        return Err(LieError::BadWord(format!(
            "{} is not a minimal coset representative for the Levi of {}",
            word_name(rs, &v.canonical_word(rs)),
            ctx.label
        )));
    }
    let spaces: GradingSpaces = grading_spaces(rs, ctx);
    let mut translated: Vec<RootId> = ideal.roots.iter().map(|&g| v.apply(g)).collect();
    translated.sort_unstable();
    let up_cap: Vec<RootId> = spaces
        .up_ge2_roots
        .iter()
        .copied()
        .filter(|g| translated.binary_search(g).is_ok())
        .collect();
    let g2_cap: Vec<RootId> = spaces
        .g2_roots
        .iter()
        .copied()
        .filter(|g| translated.binary_search(g).is_ok())
        .collect();
    // Roots of 𝔭 ∩ v·𝔟 and 𝔩 ∩ v·𝔟.
    let p_adders: Vec<RootId> = rs
        .root_ids()
        .filter(|&g| ctx.degrees[g] >= 0 && rs.is_positive(v.inverse().apply(g)))
        .collect();
    let l_adders: Vec<RootId> = p_adders.iter().copied().filter(|&g| ctx.degrees[g] == 0).collect();
    let caps_stable = stable_under(rs, &up_cap, &spaces.up_ge2_roots, &p_adders)
        && stable_under(rs, &g2_cap, &spaces.g2_roots, &l_adders);
    let n_levi = spaces.levi_positive.len() as i64;
    let expected_dim_p =
        n_levi + v.length() as i64 - (spaces.up_ge2_roots.len() - up_cap.len()) as i64;
    let expected_dim_l = n_levi - (spaces.g2_roots.len() - g2_cap.len()) as i64;
    let levi = levi_fiber_from(expansions, &g2_cap)?;
    let observed = levi.iter().filter_map(|c| c.locus.dim()).max();
    let (dim_p, dim_l) = match observed {
        None => (None, None),
        Some(d) => {
            if d as i64 != expected_dim_l || expected_dim_p < expected_dim_l {
                return Err(LieError::OrbitCheck(format!(
                    "{} / {} / v={}: Levi variety has dimension {d}, expected {expected_dim_l} (P-level {expected_dim_p})",
                    ctx.label,
                    ideal.label,
                    word_name(rs, &v.canonical_word(rs))
                )));
            }
            (Some(expected_dim_p as usize), Some(d))
        }
    };
    Ok(QuintupleData {
        orbit: ctx.label.clone(),
        ideal: ideal.label.clone(),
        v: v.clone(),
        v_word: v.canonical_word(rs),
        translated,
        up_cap,
        g2_cap,
        caps_stable,
        expected_dim_p,
        expected_dim_l,
        levi,
        dim_p,
        dim_l,
    })
}

/// One affine cell of a fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDescriptor {
    /// Canonical word of `v ∈ W^L`.
    pub v: Vec<usize>,
    /// Canonical word of the Levi element `y`.
    pub y: Vec<usize>,
    /// Canonical word of the Schubert cell `w = yv` containing the cell.
    pub w: Vec<usize>,
    /// Readable names of the three words.
    pub v_name: String,
    pub y_name: String,
    pub w_name: String,
    /// Constraints cutting the Levi piece out of the Levi cell.
    pub constraints: Vec<String>,
    /// Which copy of a multi-point piece this is, starting at 0.
    pub copy: usize,
    /// Dimension of the Levi piece.
    pub levi_dim: usize,
    /// Rank of the bundle over it.
    pub rank: usize,
    /// Complex dimension of the cell.
    pub dim: usize,
}

/// Affine paving of a Hessenberg ideal fiber.
#[derive(Clone, Debug, Serialize)]
pub struct CellPaving {
    pub type_label: String,
    pub orbit: String,
    pub orbit_key: String,
    pub ideal: String,
    pub ideal_key: String,
    pub cells: Vec<CellDescriptor>,
    /// Levi pieces that are not affine spaces, `(v, y, shape)`; empty when
    /// the decomposition is an affine paving.
    pub non_affine: Vec<String>,
}

impl CellPaving {
    /// True when every piece is an affine space.
    pub fn is_paving(&self) -> bool {
        self.non_affine.is_empty()
    }

    /// Whether the fiber is empty.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty() && self.non_affine.is_empty()
    }
}

/// Paves `π_I^{-1}(N)` by lifting the affine pieces of every nonempty
/// Levi variety along its bundle.
pub fn fiber_paving(st: &StructureTable, ctx: &OrbitContext, ideal: &HessenbergIdeal) -> Result<CellPaving> {
    let expansions = levi_expansions(st, ctx)?;
    fiber_paving_with(st, ctx, &expansions, ideal)
}

/// [`fiber_paving`] reusing precomputed Levi expansions.
pub fn fiber_paving_with(
    st: &StructureTable,
    ctx: &OrbitContext,
    expansions: &[LeviExpansion],
    ideal: &HessenbergIdeal,
) -> Result<CellPaving> {
    let rs = st.rs();
    let w = WeylGroup::new(rs)?;
    let mut cells = Vec::new();
    let mut non_affine = Vec::new();
    for v in w.min_coset_reps(&ctx.levi_simple) {
        let qd = quintuple(st, ctx, expansions, ideal, &v)?;
        let Some(r) = qd.rank() else { continue };
        for cell in &qd.levi {
            let yv = cell.y.mul(&v);
            let w_word = w.word(w.position(&yv).expect("element of W")).to_vec();
            for piece in &cell.locus.pieces {
                if !piece.is_affine_space() {
                    non_affine.push(format!(
                        "v={} y={}: {}",
                        word_name(rs, &qd.v_word),
                        word_name(rs, &cell.word),
                        cell.locus.shape.short()
                    ));
                    continue;
                }
                for copy in 0..piece.copies {
                    cells.push(CellDescriptor {
                        v: qd.v_word.clone(),
                        y: cell.word.clone(),
                        w: w_word.clone(),
                        v_name: word_name(rs, &qd.v_word),
                        y_name: word_name(rs, &cell.word),
                        w_name: word_name(rs, &w_word),
                        constraints: piece.steps.clone(),
                        copy,
                        levi_dim: piece.dim(),
                        rank: r,
                        dim: piece.dim() + r,
                    });
                }
            }
        }
    }
    cells.sort_by(|a, b| {
        (a.dim, a.w.len(), &a.w, a.copy).cmp(&(b.dim, b.w.len(), &b.w, b.copy))
    });
    Ok(CellPaving {
        type_label: rs.label().to_string(),
        orbit: ctx.label.clone(),
        orbit_key: ctx.key.clone(),
        ideal: ideal.label.clone(),
        ideal_key: ideal.key.clone(),
        cells,
        non_affine,
    })
}

/// Even Betti numbers `b_{2i} = #{i-cells}`; empty for an empty fiber.
pub fn fiber_betti(paving: &CellPaving) -> Vec<usize> {
    let Some(top) = paving.cells.iter().map(|c| c.dim).max() else {
        return Vec::new();
    };
    let mut b = vec![0; top + 1];
    for c in &paving.cells {
        b[c.dim] += 1;
    }
    b
}

/// Number of connected components, `b_0`.
pub fn fiber_components(paving: &CellPaving) -> usize {
    paving.cells.iter().filter(|c| c.dim == 0).count()
}

/// Short description of a paving: `G/B`, the closure of a Schubert cell,
/// a number of points, or the cell counts by dimension.
pub fn describe_paving(rs: &RootSystem, paving: &CellPaving) -> String {
    if paving.is_empty() {
        return "∅".into();
    }
    let betti = fiber_betti(paving);
    if betti.len() == 1 {
        return if betti[0] == 1 {
            "1 point".into()
        } else {
            format!("{} points", betti[0])
        };
    }
    // A Schubert variety X̄_w is the union of all full cells below w.
    let full = paving.cells.iter().all(|c| c.dim == c.w.len());
    let words: BTreeSet<&Vec<usize>> = paving.cells.iter().map(|c| &c.w).collect();
    if full && words.len() == paving.cells.len() {
        if let Some(top) = paving.cells.iter().max_by_key(|c| c.dim) {
            if let Ok(wg) = WeylGroup::new(rs) {
                let topw = wg.element(wg.position(&WeylElement::from_word(rs, &top.w).unwrap()).unwrap());
                let below = wg
                    .elements()
                    .iter()
                    .filter(|u| crate::weylgrp::bruhat_leq(rs, u, topw))
                    .count();
                if below == paving.cells.len() {
                    return if top.w.len() == rs.num_positive() {
                        "G/B".into()
                    } else {
                        format!("X̄_{}", word_name(rs, &top.w))
                    };
                }
            }
        }
    }
    let parts: Vec<String> = betti
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(d, n)| format!("{n}·ℂ^{d}"))
        .collect();
    parts.join(" + ")
}
