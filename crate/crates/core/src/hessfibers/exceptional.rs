//! Stable subspaces of `𝔤(2)` for distinguished orbits of F4 and E6.
//!
//! For a distinguished orbit the Levi flag variety `L/(L∩B)` is a product
//! of projective lines. Every `(L∩B)`-stable subspace `U ⊂ 𝔤(2)` of small
//! codimension gives a variety `X_U = {l(L∩B) : l^{-1}·N ∈ U}`, which is
//! intersected with each Bruhat cell. The intersections are arranged in a
//! grid with one row per cell dimension, largest first.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::{levi_expansions, levi_fiber_from, LeviExpansion, LocusShape};
use crate::chevalley::StructureTable;
use crate::error::{LieError, Result};
use crate::linalg::Q;
use crate::orbitctx::{grading_spaces, OrbitContext};
use crate::poly::Poly;
use crate::rootcore::{RootId, RootSystem};

/// The intersection of `X_U` with one Levi cell.
#[derive(Clone, Debug, Serialize)]
pub struct GridEntry {
    /// Canonical word of the Levi Weyl group element.
    pub word: Vec<usize>,
    /// Product notation such as `ℂ×{∞}×ℂ`.
    pub cell: String,
    pub cell_dim: usize,
    pub shape: LocusShape,
    /// Table text: `∅`, `entire cell`, `2 points`, `ℂ`, `ℂ×`, ...
    pub text: String,
    /// `(root, f_γ)` for every root of `𝔤(2)` outside `U` with nonzero `f_γ`.
    pub equations: Vec<(String, String)>,
}

/// One `(L∩B)`-stable subspace and its cell grid.
#[derive(Clone, Debug, Serialize)]
pub struct StableSubspace {
    /// Roots of `𝔤(2)` not in `U`, sorted by id.
    pub removed: Vec<RootId>,
    pub removed_names: Vec<String>,
    /// `Φ(𝔤(2)) ∖ {…}`, or `Φ(𝔤(2))` for the whole space.
    pub label: String,
    pub codim: usize,
    pub grid: Vec<GridEntry>,
    /// Index into the group list, for codimensions strictly between 0 and
    /// the dimension of the Levi flag variety.
    pub group: Option<usize>,
    /// Dimension of `X_U`, `None` when empty.
    pub dim: Option<usize>,
    /// Whether every cell intersection is an affine space or a finite union
    /// of affine spaces of one dimension.
    pub cellwise_affine: bool,
}

/// A resolved either/or case: a linear relation eliminated from a quadric.
#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub subspace: String,
    pub cell: String,
    /// The quadric and the linear relation, as found.
    pub quadric: String,
    pub linear: String,
    /// The conic left after eliminating one variable of the linear relation,
    /// cleared of denominators.
    pub reduced: String,
    /// Coefficient of the mixed monomial of the reduced conic.
    pub mixed_coefficient: String,
    /// `ℂ×` when the mixed coefficient is nonzero, `ℂ⊔ℂ` otherwise.
    pub branch: String,
}

/// Full classification for one orbit.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalClassification {
    pub type_label: String,
    pub orbit: String,
    pub levi_simple: Vec<String>,
    pub g2_roots: Vec<String>,
    pub subspaces: Vec<StableSubspace>,
    /// Groups of subspace indices sharing codimension and, in each cell
    /// dimension, the same multiset of intersection shapes.
    pub groups: Vec<Vec<usize>>,
    pub branches: Vec<BranchReport>,
}

impl ExceptionalClassification {
    /// Subspaces of the given codimension.
    pub fn of_codim(&self, codim: usize) -> impl Iterator<Item = &StableSubspace> {
        self.subspaces.iter().filter(move |s| s.codim == codim)
    }
}

fn entry_text(shape: &LocusShape) -> String {
    match shape {
        LocusShape::Entire => "entire cell".into(),
        other => other.short(),
    }
}

fn cell_label(levi: &[usize], word: &[usize]) -> String {
    levi.iter()
        .map(|i| if word.contains(i) { "ℂ" } else { "{∞}" })
        .collect::<Vec<_>>()
        .join("×")
}

/// Subsets `R ⊂ Φ(𝔤(2))` with `|R| ≤ max` such that `𝔤(2)` minus `R`
/// is stable: whenever `ρ ∈ R` and `ρ − α ∈ Φ(𝔤(2))` for a positive Levi
/// root `α`, also `ρ − α ∈ R`.
pub fn stable_removals(rs: &RootSystem, g2: &[RootId], levi_pos: &[RootId], max: usize) -> Vec<Vec<RootId>> {
    let closed = |r: &[RootId]| {
        r.iter().all(|&p| {
            levi_pos.iter().all(|&a| match rs.sub(p, a) {
                Some(d) if g2.contains(&d) => r.contains(&d),
                _ => true,
            })
        })
    };
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<RootId>, usize)> = vec![(Vec::new(), 0)];
    while let Some((cur, start)) = stack.pop() {
        if closed(&cur) {
            out.push(cur.clone());
        }
        if cur.len() == max {
            continue;
        }
        for k in start..g2.len() {
            let mut next = cur.clone();
            next.push(g2[k]);
            stack.push((next, k + 1));
        }
    }
    for r in &mut out {
        r.sort_unstable();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Classifies every stable `U` of codimension at most `dim L/(L∩B)` for a
/// distinguished orbit with a Levi of type `A1^k`.
pub fn classify_quintuples_exceptional(st: &StructureTable, ctx: &OrbitContext) -> Result<ExceptionalClassification> {
    let rs = st.rs();
    if !matches!(rs.label(), "F4" | "E6") {
        return Err(LieError::UnsupportedSystem(format!(
            "stable subspace classification is provided for F4 and E6, not {}",
            rs.label()
        )));
    }
    let spaces = grading_spaces(rs, ctx);
    let expansions = levi_expansions(st, ctx)?;
    let max = spaces.levi_positive.len();
    let removals = stable_removals(rs, &spaces.g2_roots, &spaces.levi_positive, max);
    let mut subspaces = Vec::new();
    let mut branches = Vec::new();
    for removed in removals {
        let target: Vec<RootId> = spaces
            .g2_roots
            .iter()
            .copied()
            .filter(|g| !removed.contains(g))
            .collect();
        let cells = levi_fiber_from(&expansions, &target)?;
        let removed_names: Vec<String> = removed.iter().map(|&g| rs.root_name(g)).collect();
        let label = if removed.is_empty() {
            "Φ(𝔤(2))".to_string()
        } else {
            format!("Φ(𝔤(2)) ∖ {{{}}}", removed_names.join(", "))
        };
        let mut grid = Vec::with_capacity(cells.len());
        for c in &cells {
            let cell = cell_label(&ctx.levi_simple, &c.word);
            grid.push(GridEntry {
                word: c.word.clone(),
                cell: cell.clone(),
                cell_dim: c.cell_dim(),
                shape: c.locus.shape.clone(),
                text: entry_text(&c.locus.shape),
                equations: c
                    .equations
                    .iter()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(g, p)| (rs.root_name(*g), p.display_with(&c.var_names)))
                    .collect(),
            });
            if let Some(b) = branch_report(&label, &cell, c.equations.iter().map(|(_, p)| p), &c.var_names) {
                branches.push(b);
            }
        }
        let dim = cells.iter().filter_map(|c| c.locus.dim()).max();
        let cellwise_affine = grid.iter().all(|e| {
            matches!(
                e.shape,
                LocusShape::Empty | LocusShape::Entire | LocusShape::Affine { .. }
            )
        });
        subspaces.push(StableSubspace {
            codim: removed.len(),
            removed,
            removed_names,
            label,
            grid,
            group: None,
            dim,
            cellwise_affine,
        });
    }
    // Group the nontrivial codimensions by their shape pattern.
    let mut keyed: BTreeMap<(usize, Vec<Vec<String>>), Vec<usize>> = BTreeMap::new();
    let mut first_seen: Vec<(usize, Vec<Vec<String>>)> = Vec::new();
    for (i, s) in subspaces.iter().enumerate() {
        if s.codim == 0 || s.codim >= max {
            continue;
        }
        let mut per_dim: Vec<Vec<String>> = vec![Vec::new(); max + 1];
        for e in &s.grid {
            per_dim[e.cell_dim].push(e.text.clone());
        }
        for row in &mut per_dim {
            row.sort();
        }
        let key = (s.codim, per_dim);
        if !keyed.contains_key(&key) {
            first_seen.push(key.clone());
        }
        keyed.entry(key).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = first_seen.iter().map(|k| keyed[k].clone()).collect();
    groups.sort_by_key(|g| (subspaces[g[0]].codim, g[0]));
    for (gi, g) in groups.iter().enumerate() {
        for &i in g {
            subspaces[i].group = Some(gi);
        }
    }
    Ok(ExceptionalClassification {
        type_label: rs.label().to_string(),
        orbit: ctx.label.clone(),
        levi_simple: ctx.levi_simple.iter().map(|&i| rs.simple_name(i).to_string()).collect(),
        g2_roots: spaces.g2_roots.iter().map(|&g| rs.root_name(g)).collect(),
        subspaces,
        groups,
        branches,
    })
}

/// Detects a system made of one quadric and one linear binomial
/// `p·z_a + q·z_b`, eliminates `z_a` and reports the mixed coefficient of
/// the remaining conic, which decides between `ℂ×` and `ℂ⊔ℂ`.
fn branch_report<'a>(
    subspace: &str,
    cell: &str,
    equations: impl Iterator<Item = &'a Poly>,
    names: &[String],
) -> Option<BranchReport> {
    let eqs: Vec<&Poly> = equations.filter(|p| !p.is_zero()).collect();
    let [f, g] = eqs.as_slice() else { return None };
    let (quad, lin) = if f.total_degree() == 2 && g.total_degree() == 1 {
        (*f, *g)
    } else if g.total_degree() == 2 && f.total_degree() == 1 {
        (*g, *f)
    } else {
        return None;
    };
    if quad.nvars() != 3 || !lin.constant_term().is_zero() {
        return None;
    }
    let lv = lin.vars();
    let [a, b] = lv.as_slice() else { return None };
    // Eliminate the later variable, keeping the earlier one.
    let (keep, elim) = (*a, *b);
    let p = lin.coeff_in(elim, 1);
    let q = lin.coeff_in(keep, 1);
    let num = Poly::var(quad.nvars(), keep).scale(&(-q.constant_term()));
    let reduced = quad.substitute_fraction(elim, &num, &p);
    let others: Vec<usize> = (0..quad.nvars()).filter(|&v| v != elim).collect();
    let mut exps = vec![0u32; quad.nvars()];
    exps[others[0]] = 1;
    exps[others[1]] = 1;
    let mixed: Q = reduced.coeff(&exps);
    Some(BranchReport {
        subspace: subspace.to_string(),
        cell: cell.to_string(),
        quadric: quad.display_with(names),
        linear: lin.display_with(names),
        reduced: reduced.display_with(names),
        mixed_coefficient: mixed.to_string(),
        branch: if mixed.is_zero() { "ℂ⊔ℂ".into() } else { "ℂ×".into() },
    })
}

/// Levi expansions of an orbit, for callers that inspect the polynomials.
pub fn exceptional_expansions(st: &StructureTable, ctx: &OrbitContext) -> Result<Vec<LeviExpansion>> {
    levi_expansions(st, ctx)
}
