//! The subcommands. Each validates nothing itself: it receives a
//! [`Selection`] whose names are already resolved and returns a [`Report`].

use std::collections::BTreeMap;

use serde_json::{json, Value};

use liehess::hessfibers::{
    classify_quintuples_exceptional, describe_paving, enumerate_ideals, fiber_betti, fiber_components,
    fiber_paving_with, find_ideal, levi_expansions, quintuple, ExceptionalClassification, HessenbergIdeal,
};
use liehess::orbitctx::{parse_orbit, registered_orbits};
use liehess::reptheory::{dot_action_all, precup_table, regular_hess_betti, CharacterTable};
use liehess::weylgrp::{parse_levi, weyl_order, word_name};
use liehess::{build_structure_table, orbit_context, OrbitContext, RootSystem, StructureTable, WeylGroup};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{table, Report};

/// Weyl groups up to this order are listed element by element.
const LIST_LIMIT: u128 = 2000;

/// Inputs with every name resolved against the root system.
pub struct Selection {
    pub rs: RootSystem,
    pub orbit: Option<&'static str>,
    pub ideal: Option<HessenbergIdeal>,
    pub levi: Option<Vec<usize>>,
    pub quintuples: bool,
}

/// Resolves the type, orbit, ideal and Levi names before any computation.
pub fn validate(cfg: &RunConfig) -> Result<Selection, CliError> {
    let label = cfg.type_label.as_deref().unwrap_or("G2");
    let rs = RootSystem::from_label(label).map_err(CliError::config)?;
    let orbit = cfg
        .orbit
        .as_deref()
        .map(|o| parse_orbit(&rs, o))
        .transpose()
        .map_err(CliError::config)?;
    let ideal = cfg
        .ideal
        .as_deref()
        .map(|i| find_ideal(&rs, i))
        .transpose()
        .map_err(CliError::config)?;
    let levi = cfg
        .levi
        .as_deref()
        .map(|l| parse_levi(&rs, l))
        .transpose()
        .map_err(CliError::config)?;
    Ok(Selection {
        rs,
        orbit,
        ideal,
        levi,
        quintuples: cfg.quintuples,
    })
}

fn require_g2(sel: &Selection, what: &str) -> Result<(), CliError> {
    if sel.rs.label() == "G2" {
        Ok(())
    } else {
        Err(CliError::Config(format!("{what} is only available for type G2, not {}", sel.rs.label())))
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize to JSON")
}

fn levi_label(rs: &RootSystem, levi: &[usize]) -> String {
    if levi.is_empty() {
        "∅".into()
    } else {
        format!(
            "{{{}}}",
            levi.iter().map(|&i| rs.simple_name(i)).collect::<Vec<_>>().join(", ")
        )
    }
}

fn levi_ascii(rs: &RootSystem, levi: &[usize]) -> Vec<String> {
    levi.iter().map(|&i| rs.simple_ascii(i).to_string()).collect()
}

fn all_levis(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `roots`: positive roots with coordinates, heights and lengths.
pub fn roots(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let rep = rs.report();
    let rows: Vec<Vec<String>> = rs
        .positive_ids()
        .map(|g| {
            vec![
                g.to_string(),
                rs.root_name(g),
                rs.root_ascii(g),
                rs.coords(g).iter().map(i32::to_string).collect::<Vec<_>>().join(" "),
                rs.height(g).to_string(),
                format!("{:?}", rs.length_class(g)).to_lowercase(),
            ]
        })
        .collect();
    let mut text = format!(
        "Root system {} of rank {} with {} positive roots\nCartan matrix:\n",
        rs.label(),
        rs.rank(),
        rs.num_positive()
    );
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>2}")).collect();
        text.push_str(&format!("  [{}]\n", cells.join(" ")));
    }
    text.push('\n');
    text.push_str(&table(&["id", "root", "ascii", "coords", "height", "length"], &rows));
    let mut value = to_json(&rep);
    value["num_positive"] = json!(rs.num_positive());
    Ok(Report {
        text,
        json: value,
        csv_header: ["id", "root", "ascii", "coords", "height", "length"].map(String::from).to_vec(),
        csv_rows: rows,
    })
}

/// `weyl`: the order of the Weyl group and, when small, its elements.
pub fn weyl(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let order = weyl_order(rs);
    let mut text = format!(
        "Weyl group of {}: order {order}, longest element of length {}\n",
        rs.label(),
        rs.num_positive()
    );
    let (elements, rows) = if order <= LIST_LIMIT {
        let wg = WeylGroup::new(rs)?;
        let report = wg.report(rs);
        let rows: Vec<Vec<String>> = report
            .iter()
            .map(|e| {
                vec![
                    e.index.to_string(),
                    e.word.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                    e.name.clone(),
                    e.length.to_string(),
                    e.alias.clone().unwrap_or_default(),
                ]
            })
            .collect();
        text.push('\n');
        text.push_str(&table(&["index", "word", "name", "length", "alias"], &rows));
        (to_json(&report), rows)
    } else {
        text.push_str(&format!("elements are not listed above order {LIST_LIMIT}\n"));
        (json!([]), Vec::new())
    };
    Ok(Report {
        text,
        json: json!({
            "type": rs.label(),
            "order": order.to_string(),
            "longest_length": rs.num_positive(),
            "elements": elements,
        }),
        csv_header: ["index", "word", "name", "length", "alias"].map(String::from).to_vec(),
        csv_rows: rows,
    })
}

/// `ideals`: every Hessenberg ideal, i.e. upper-closed set of positive roots.
pub fn ideals(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let all = enumerate_ideals(rs);
    let chosen: Vec<&HessenbergIdeal> = match &sel.ideal {
        Some(i) => all.iter().filter(|x| x.key == i.key).collect(),
        None => all.iter().collect(),
    };
    let names = |ids: &[usize]| ids.iter().map(|&g| rs.root_name(g)).collect::<Vec<_>>();
    let rows: Vec<Vec<String>> = chosen
        .iter()
        .map(|i| {
            vec![
                i.key.clone(),
                i.label.clone(),
                i.len().to_string(),
                names(&i.generators).join(", "),
            ]
        })
        .collect();
    let text = format!(
        "{} Hessenberg ideals of {}\n\n{}",
        all.len(),
        rs.label(),
        table(&["key", "label", "size", "generators"], &rows)
    );
    let value: Vec<Value> = chosen
        .iter()
        .map(|i| {
            json!({
                "key": i.key,
                "label": i.label,
                "size": i.len(),
                "generators": names(&i.generators),
                "roots": names(&i.roots),
            })
        })
        .collect();
    Ok(Report {
        text,
        json: json!({ "type": rs.label(), "count": all.len(), "ideals": value }),
        csv_header: ["key", "label", "size", "generators"].map(String::from).to_vec(),
        csv_rows: rows,
    })
}

fn selected_orbits(sel: &Selection, st: &StructureTable) -> Result<Vec<OrbitContext>, CliError> {
    let keys: Vec<&str> = match sel.orbit {
        Some(k) => vec![k],
        None => registered_orbits(&sel.rs),
    };
    if keys.is_empty() {
        return Err(CliError::Config(format!("no nilpotent orbits are registered for {}", sel.rs.label())));
    }
    Ok(keys.into_iter().map(|k| orbit_context(st, k)).collect::<liehess::Result<_>>()?)
}

/// `orbits`: the registered nilpotent orbits with their sl2 data.
pub fn orbits(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let st = build_structure_table(rs)?;
    let contexts = selected_orbits(sel, &st)?;
    let reports: Vec<_> = contexts.iter().map(|c| c.report(rs)).collect();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.key.clone(),
                r.label.clone(),
                r.dim.to_string(),
                r.subsystem_type.clone(),
                r.weighted_diagram.iter().map(i32::to_string).collect::<Vec<_>>().join(" "),
                r.levi_simple.join(" "),
            ]
        })
        .collect();
    let text = format!(
        "Nilpotent orbits of {}\n\n{}",
        rs.label(),
        table(&["key", "label", "dim", "subsystem", "diagram", "levi"], &rows)
    );
    Ok(Report {
        text,
        json: json!({ "type": rs.label(), "orbits": to_json(&reports) }),
        csv_header: ["key", "label", "dim", "subsystem", "diagram", "levi"].map(String::from).to_vec(),
        csv_rows: rows,
    })
}

/// `fibers`: the grid of fibers over every (ideal, orbit) pair, or with
/// `--quintuples` the stable subspace classification of an orbit.
pub fn fibers(sel: &Selection) -> Result<Report, CliError> {
    if sel.quintuples {
        return classification(sel);
    }
    let rs = &sel.rs;
    let st = build_structure_table(rs)?;
    let contexts = selected_orbits(sel, &st)?;
    let ideals: Vec<HessenbergIdeal> = match &sel.ideal {
        Some(i) => vec![i.clone()],
        None => enumerate_ideals(rs),
    };
    let expansions: Vec<_> = contexts
        .iter()
        .map(|c| levi_expansions(&st, c))
        .collect::<liehess::Result<_>>()?;
    let mut grid_rows = Vec::new();
    let mut detail_rows = Vec::new();
    let mut entries = Vec::new();
    for ideal in &ideals {
        let mut grid_row = vec![ideal.label.clone()];
        for (ctx, exp) in contexts.iter().zip(&expansions) {
            let paving = fiber_paving_with(&st, ctx, exp, ideal)?;
            let description = describe_paving(rs, &paving);
            let betti = fiber_betti(&paving);
            let components = fiber_components(&paving);
            let betti_text = betti.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            grid_row.push(description.clone());
            detail_rows.push(vec![
                ideal.key.clone(),
                ctx.key.clone(),
                description.clone(),
                betti_text,
                components.to_string(),
                paving.is_paving().to_string(),
            ]);
            entries.push(json!({
                "ideal": ideal.label,
                "ideal_key": ideal.key,
                "orbit": ctx.label,
                "orbit_key": ctx.key,
                "description": description,
                "betti": betti,
                "components": components,
                "affine_paving": paving.is_paving(),
                "cells": to_json(&paving.cells),
            }));
        }
        grid_rows.push(grid_row);
    }
    let mut header = vec![String::new()];
    header.extend(contexts.iter().map(|c| c.label.clone()));
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let text = format!(
        "Hessenberg ideal fibers for {}\n\n{}\n{}",
        rs.label(),
        table(&header_refs, &grid_rows),
        table(&["ideal", "orbit", "fiber", "betti", "components", "paving"], &detail_rows)
    );
    Ok(Report {
        text,
        json: json!({
            "type": rs.label(),
            "orbits": contexts.iter().map(|c| c.label.clone()).collect::<Vec<_>>(),
            "ideals": ideals.iter().map(|i| i.label.clone()).collect::<Vec<_>>(),
            "entries": entries,
        }),
        csv_header: ["ideal", "orbit", "fiber", "betti", "components", "paving"].map(String::from).to_vec(),
        csv_rows: detail_rows,
    })
}

fn classification(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let key = match sel.orbit {
        Some(k) => k,
        None => match registered_orbits(rs).as_slice() {
            [only] => *only,
            _ => {
                return Err(CliError::Config(format!(
                    "the stable subspace classification of {} needs --orbit",
                    rs.label()
                )))
            }
        },
    };
    let st = build_structure_table(rs)?;
    let ctx = orbit_context(&st, key)?;
    let c = classify_quintuples_exceptional(&st, &ctx)?;
    let (text, rows) = render_classification(&c);
    Ok(Report {
        text,
        json: to_json(&c),
        csv_header: ["subspace", "codim", "group", "cell", "cell_dim", "intersection"]
            .map(String::from)
            .to_vec(),
        csv_rows: rows,
    })
}

fn render_classification(c: &ExceptionalClassification) -> (String, Vec<Vec<String>>) {
    let max = c.subspaces.iter().map(|s| s.codim).max().unwrap_or(0);
    let mut text = format!(
        "Stable subspaces of 𝔤(2) for {} in {}\nLevi simple roots: {}\nRoots of 𝔤(2): {}\n",
        c.orbit,
        c.type_label,
        c.levi_simple.join(", "),
        c.g2_roots.join(", ")
    );
    let counts: BTreeMap<usize, usize> = c.subspaces.iter().fold(BTreeMap::new(), |mut m, s| {
        *m.entry(s.codim).or_default() += 1;
        m
    });
    for (codim, n) in &counts {
        text.push_str(&format!("codimension {codim}: {n} subspaces\n"));
    }
    let mut rows = Vec::new();
    let mut section = |title: String, indices: &[usize], text: &mut String| {
        text.push_str(&format!("\n{title}\n"));
        for &i in indices {
            let s = &c.subspaces[i];
            let dim = s.dim.map_or("empty".to_string(), |d| format!("dimension {d}"));
            text.push_str(&format!("  {} ({dim})\n", s.label));
            let mut grid: Vec<_> = s.grid.iter().collect();
            grid.sort_by(|a, b| b.cell_dim.cmp(&a.cell_dim).then_with(|| a.word.cmp(&b.word)));
            let table_rows: Vec<Vec<String>> = grid
                .iter()
                .map(|e| {
                    let eqs: Vec<String> = e.equations.iter().map(|(g, p)| format!("f[{g}] = {p}")).collect();
                    vec![e.cell.clone(), e.text.clone(), eqs.join("; ")]
                })
                .collect();
            for line in table(&["cell", "intersection", "equations"], &table_rows).lines() {
                text.push_str(&format!("    {line}\n"));
            }
            for e in grid {
                rows.push(vec![
                    s.label.clone(),
                    s.codim.to_string(),
                    s.group.map_or(String::new(), |g| (g + 1).to_string()),
                    e.cell.clone(),
                    e.cell_dim.to_string(),
                    e.text.clone(),
                ]);
            }
        }
    };
    let boundary: Vec<usize> = (0..c.subspaces.len()).filter(|&i| c.subspaces[i].codim == 0).collect();
    section("Codimension 0".into(), &boundary, &mut text);
    for (g, members) in c.groups.iter().enumerate() {
        let codim = c.subspaces[members[0]].codim;
        section(format!("Group {} (codimension {codim})", g + 1), members, &mut text);
    }
    let top: Vec<usize> = (0..c.subspaces.len()).filter(|&i| c.subspaces[i].codim == max && max > 0).collect();
    if !top.is_empty() && c.groups.iter().all(|g| c.subspaces[g[0]].codim != max) {
        section(format!("Codimension {max}"), &top, &mut text);
    }
    if !c.branches.is_empty() {
        text.push_str("\nQuadric with a linear relation\n");
        for b in &c.branches {
            text.push_str(&format!(
                "  {} on {}: {} = 0 and {} = 0 reduce to {} = 0, mixed coefficient {}, hence {}\n",
                b.subspace, b.cell, b.quadric, b.linear, b.reduced, b.mixed_coefficient, b.branch
            ));
        }
    }
    (text, rows)
}

/// `quintuples`: for F4 and E6 the stable subspace classification, for G2
/// the quintuple attached to every `v ∈ W^L`.
pub fn quintuples(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    if rs.label() != "G2" {
        return classification(sel);
    }
    let st = build_structure_table(rs)?;
    let contexts = selected_orbits(sel, &st)?;
    let ideals: Vec<HessenbergIdeal> = match &sel.ideal {
        Some(i) => vec![i.clone()],
        None => enumerate_ideals(rs),
    };
    let wg = WeylGroup::new(rs)?;
    let names = |ids: &[usize]| ids.iter().map(|&g| rs.root_name(g)).collect::<Vec<_>>().join(" ");
    let opt = |x: Option<usize>| x.map_or(String::new(), |d| d.to_string());
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for ctx in &contexts {
        let exp = levi_expansions(&st, ctx)?;
        for ideal in &ideals {
            for v in wg.min_coset_reps(&ctx.levi_simple) {
                let qd = quintuple(&st, ctx, &exp, ideal, &v)?;
                rows.push(vec![
                    ctx.key.clone(),
                    ideal.key.clone(),
                    word_name(rs, &qd.v_word),
                    names(&qd.up_cap),
                    names(&qd.g2_cap),
                    qd.is_nonempty().to_string(),
                    opt(qd.dim_p),
                    opt(qd.dim_l),
                ]);
                entries.push(json!({
                    "orbit": ctx.key,
                    "ideal": ideal.key,
                    "v": word_name(rs, &qd.v_word),
                    "up_cap": qd.up_cap.iter().map(|&g| rs.root_name(g)).collect::<Vec<_>>(),
                    "g2_cap": qd.g2_cap.iter().map(|&g| rs.root_name(g)).collect::<Vec<_>>(),
                    "caps_stable": qd.caps_stable,
                    "expected_dim_p": qd.expected_dim_p,
                    "expected_dim_l": qd.expected_dim_l,
                    "nonempty": qd.is_nonempty(),
                    "dim_p": qd.dim_p,
                    "dim_l": qd.dim_l,
                }));
            }
        }
    }
    let header = ["orbit", "ideal", "v", "u_P≥2 ∩ v·I", "𝔤(2) ∩ v·I", "nonempty", "dim", "levi dim"];
    let text = format!("Quintuples for {}\n\n{}", rs.label(), table(&header, &rows));
    Ok(Report {
        text,
        json: json!({ "type": rs.label(), "quintuples": entries }),
        csv_header: ["orbit", "ideal", "v", "up_cap", "g2_cap", "nonempty", "dim", "levi_dim"]
            .map(String::from)
            .to_vec(),
        csv_rows: rows,
    })
}

/// `betti`: cell dimensions of regular Hessenberg varieties `Hess(M, x_J)`.
pub fn betti(sel: &Selection) -> Result<Report, CliError> {
    let rs = &sel.rs;
    let levis = match &sel.levi {
        Some(l) => vec![l.clone()],
        None => all_levis(rs.rank()),
    };
    let Some(ideal) = &sel.ideal else {
        require_g2(sel, "betti without --ideal")?;
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for ideal in enumerate_ideals(rs) {
            for j in &levis {
                let b = regular_hess_betti(rs, &ideal, j)?;
                rows.push(vec![
                    ideal.key.clone(),
                    levi_label(rs, j),
                    b.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                ]);
                entries.push(json!({
                    "ideal": ideal.key,
                    "label": ideal.label,
                    "levi": levi_ascii(rs, j),
                    "betti": b,
                }));
            }
        }
        let text = format!(
            "Betti numbers of Hess(M, x_J) for {}\n\n{}",
            rs.label(),
            table(&["ideal", "J", "betti"], &rows)
        );
        return Ok(Report {
            text,
            json: json!({ "type": rs.label(), "tables": entries }),
            csv_header: ["ideal", "levi", "betti"].map(String::from).to_vec(),
            csv_rows: rows,
        });
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut tables = Vec::new();
    for j in &levis {
        let entries = precup_table(rs, ideal, j)?;
        let b = regular_hess_betti(rs, ideal, j)?;
        let trows: Vec<Vec<String>> = entries
            .iter()
            .map(|e| {
                vec![
                    e.name.clone(),
                    e.alias.clone().unwrap_or_default(),
                    e.dim.map_or(String::new(), |d| d.to_string()),
                ]
            })
            .collect();
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&format!(
            "I = {}, J = {}\n{}Betti numbers: {}\n",
            ideal.label,
            levi_label(rs, j),
            table(&["w", "alias", "dim"], &trows),
            b.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        ));
        for r in trows {
            let mut row = vec![ideal.key.clone(), levi_ascii(rs, j).join(" ")];
            row.extend(r);
            rows.push(row);
        }
        tables.push(json!({
            "ideal": ideal.key,
            "label": ideal.label,
            "levi": levi_ascii(rs, j),
            "entries": to_json(&entries),
            "betti": b,
        }));
    }
    Ok(Report {
        text,
        json: json!({ "type": rs.label(), "tables": tables }),
        csv_header: ["ideal", "levi", "w", "alias", "dim"].map(String::from).to_vec(),
        csv_rows: rows,
    })
}

/// `dot-action`: the graded character of the dot action for each ideal.
pub fn dot_action(sel: &Selection) -> Result<Report, CliError> {
    require_g2(sel, "the dot action")?;
    let rs = &sel.rs;
    let st = build_structure_table(rs)?;
    let table_g2 = CharacterTable::g2(rs)?;
    let all = dot_action_all(&st)?;
    let chosen: Vec<_> = all
        .iter()
        .filter(|d| sel.ideal.as_ref().is_none_or(|i| i.key == d.ideal))
        .collect();
    let mut trows = Vec::new();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for d in &chosen {
        trows.push(vec![d.ideal_label.clone(), d.rendered.clone()]);
        for (degree, m) in d.multiplicities.iter().enumerate() {
            let mut row = vec![d.ideal.clone(), degree.to_string()];
            row.extend(m.iter().map(i64::to_string));
            rows.push(row);
        }
        entries.push(json!({
            "ideal": d.ideal,
            "label": d.ideal_label,
            "poincare": to_json(&d.poincare.to_rows(&table_g2)?),
            "rendered": d.rendered,
            "method": to_json(&d.method),
            "n": d.n,
            "d": d.d,
            "d_vee": d.d_vee,
            "max_orbit": d.max_orbit,
            "connected": d.connected,
            "ic_summands": to_json(&d.ic_summands),
            "remainder_basis": d.remainder_basis,
            "remainder": d.remainder,
        }));
    }
    let text = format!("Dot actions for {}\n\n{}", rs.label(), table(&["I", "P_M(q)"], &trows));
    let mut header = vec!["ideal".to_string(), "degree".to_string()];
    header.extend(table_g2.irreps.iter().map(|r| r.ascii.clone()));
    Ok(Report {
        text,
        json: json!({ "type": rs.label(), "rows": entries }),
        csv_header: header,
        csv_rows: rows,
    })
}
