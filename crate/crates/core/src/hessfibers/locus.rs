//! Exact decomposition of small polynomial zero sets.
//!
//! The systems arising from Levi cells have at most a few variables and low
//! degree. The solver splits the zero set into disjoint pieces, each of the
//! form `copies × {y ∈ ℂ^d : h(y) ≠ 0 for every listed h}`, using three moves:
//!
//! * a variable occurring linearly with a constant coefficient is
//!   eliminated by substitution;
//! * a system in a single variable contributes one copy per distinct root
//!   of the greatest common divisor of its equations;
//! * a variable occurring linearly with a nonconstant coefficient `h`
//!   splits the locus into `{h ≠ 0}`, where it is eliminated, and `{h = 0}`.
//!
//! Anything else is reported as unsupported rather than guessed.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::linalg::{q, solve, Q};
use crate::poly::{univariate, Poly};

/// One piece `copies × {y ∈ ℂ^free : h(y) ≠ 0}` of a zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusPiece {
    /// Number of disjoint isomorphic copies.
    pub copies: usize,
    /// Variables left free on the piece.
    pub free: Vec<usize>,
    /// Polynomials in the free variables required to be nonzero.
    pub inequations: Vec<Poly>,
    /// Human readable record of the eliminations performed.
    pub steps: Vec<String>,
}

impl LocusPiece {
    /// Dimension of each copy.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// True when every copy is an affine space.
    pub fn is_affine_space(&self) -> bool {
        self.inequations.is_empty()
    }
}

/// Shape of the zero set inside an affine cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LocusShape {
    /// No solutions.
    Empty,
    /// Every point of the cell.
    Entire,
    /// A disjoint union of `copies` affine spaces of dimension `dim`.
    Affine { copies: usize, dim: usize },
    /// An affine line with one point removed.
    PuncturedLine,
    /// A smooth affine quadric surface.
    SmoothQuadric,
    /// Any other constructible set.
    Other,
}

impl LocusShape {
    /// Short text used in tables: `∅`, `entire`, `2 points`, `ℂ`, `ℂ×`, ...
    pub fn short(&self) -> String {
        match self {
            LocusShape::Empty => "∅".into(),
            LocusShape::Entire => "entire".into(),
            LocusShape::Affine { copies, dim: 0 } => {
                if *copies == 1 {
                    "1 point".into()
                } else {
                    format!("{copies} points")
                }
            }
            LocusShape::Affine { copies, dim } => {
                let piece = if *dim == 1 { "ℂ".to_string() } else { format!("ℂ^{dim}") };
                vec![piece; *copies].join("⊔")
            }
            LocusShape::PuncturedLine => "ℂ×".into(),
            LocusShape::SmoothQuadric => "smooth quadric".into(),
            LocusShape::Other => "other".into(),
        }
    }

    /// True unless empty.
    pub fn is_nonempty(&self) -> bool {
        !matches!(self, LocusShape::Empty)
    }
}

/// A classified zero set inside a cell `ℂ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locus {
    pub nvars: usize,
    pub equations: Vec<Poly>,
    pub shape: LocusShape,
    pub pieces: Vec<LocusPiece>,
}

impl Locus {
    /// Largest dimension of a piece, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.pieces.iter().map(LocusPiece::dim).max()
    }
}

fn normalize(eqs: Vec<Poly>, ineqs: Vec<Poly>) -> Option<(Vec<Poly>, Vec<Poly>)> {
    let mut out_eqs: Vec<Poly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return None;
        }
        if !out_eqs.contains(&e) {
            out_eqs.push(e);
        }
    }
    let mut out_ineqs: Vec<Poly> = Vec::new();
    for h in ineqs {
        if h.is_zero() {
            return None;
        }
        if h.is_constant() {
            continue;
        }
        if !out_ineqs.contains(&h) {
            out_ineqs.push(h);
        }
    }
    Some((out_eqs, out_ineqs))
}

/// Decomposes `{eqs = 0, ineqs ≠ 0}` over the variables `vars`.
pub fn decompose(
    eqs: Vec<Poly>,
    ineqs: Vec<Poly>,
    vars: Vec<usize>,
    names: &[String],
) -> Result<Vec<LocusPiece>> {
    solve_rec(eqs, ineqs, vars, names, Vec::new())
}

fn solve_rec(
    eqs: Vec<Poly>,
    ineqs: Vec<Poly>,
    vars: Vec<usize>,
    names: &[String],
    steps: Vec<String>,
) -> Result<Vec<LocusPiece>> {
    let Some((eqs, ineqs)) = normalize(eqs, ineqs) else {
        return Ok(Vec::new());
    };
    if eqs.is_empty() {
        return Ok(vec![LocusPiece {
            copies: 1,
            free: vars,
            inequations: ineqs,
            steps,
        }]);
    }
    // Linear variable with a constant coefficient.
    for (k, f) in eqs.iter().enumerate() {
        for z in f.vars() {
            if f.degree_in(z) != 1 {
                continue;
            }
            let c = f.coeff_in(z, 1);
            if !c.is_constant() {
                continue;
            }
            let value = f.coeff_in(z, 0).scale(&(-c.constant_term().recip()));
            let mut steps = steps.clone();
            steps.push(format!("{} = {}", names[z], value.display_with(names)));
            let rest: Vec<Poly> = eqs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, g)| g.substitute(z, &value))
                .collect();
            let ineqs2 = ineqs.iter().map(|h| h.substitute(z, &value)).collect();
            let vars2 = vars.iter().copied().filter(|&v| v != z).collect();
            return solve_rec(rest, ineqs2, vars2, names, steps);
        }
    }
    // All equations in one variable.
    let used: Vec<usize> = {
        let mut u: Vec<usize> = eqs.iter().flat_map(Poly::vars).collect();
        u.sort_unstable();
        u.dedup();
        u
    };
    if let [z] = used.as_slice() {
        let z = *z;
        let mut g: Vec<Q> = Vec::new();
        for e in &eqs {
            g = univariate::gcd(&g, &e.to_univariate(z).unwrap());
        }
        let mut g = univariate::squarefree(&g);
        let mut kept = Vec::new();
        for h in &ineqs {
            if !h.uses_var(z) {
                kept.push(h.clone());
                continue;
            }
            let Some(hu) = h.to_univariate(z) else {
                return Err(LieError::UnsupportedSystem(format!(
                    "inequation {} mixes {} with other variables",
                    h.display_with(names),
                    names[z]
                )));
            };
            let common = univariate::gcd(&g, &hu);
            if univariate::degree(&common).unwrap_or(0) > 0 {
                g = univariate::divmod(&g, &common).0;
            }
        }
        let copies = univariate::degree(&g).unwrap_or(0);
        if copies == 0 {
            return Ok(Vec::new());
        }
        let mut steps = steps;
        steps.push(format!(
            "{} is one of {copies} distinct roots of {}",
            names[z],
            render_univariate(&g, &names[z])
        ));
        return Ok(vec![LocusPiece {
            copies,
            free: vars.into_iter().filter(|&v| v != z).collect(),
            inequations: kept,
            steps,
        }]);
    }
    // Linear variable with a nonconstant coefficient: split on it.
    let mut best: Option<(usize, usize, usize)> = None;
    for (k, f) in eqs.iter().enumerate() {
        for z in f.vars() {
            if f.degree_in(z) == 1 {
                let cost = f.coeff_in(z, 1).num_terms() * 16 + f.coeff_in(z, 1).total_degree() as usize;
                if best.is_none_or(|(_, _, c)| cost < c) {
                    best = Some((k, z, cost));
                }
            }
        }
    }
    if let Some((k, z, _)) = best {
        let f = &eqs[k];
        let h = f.coeff_in(z, 1);
        let g = f.coeff_in(z, 0);
        let minus_g = g.scale(&q(-1));
        let others: Vec<Poly> = eqs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, e)| e.clone())
            .collect();
        let mut steps_a = steps.clone();
        steps_a.push(format!(
            "{} ≠ 0, {} = -({}) / ({})",
            h.display_with(names),
            names[z],
            g.display_with(names),
            h.display_with(names)
        ));
        let eqs_a = others
            .iter()
            .map(|e| e.substitute_fraction(z, &minus_g, &h))
            .collect();
        let mut ineqs_a: Vec<Poly> = ineqs
            .iter()
            .map(|e| e.substitute_fraction(z, &minus_g, &h))
            .collect();
        ineqs_a.push(h.clone());
        let vars_a = vars.iter().copied().filter(|&v| v != z).collect();
        let mut pieces = solve_rec(eqs_a, ineqs_a, vars_a, names, steps_a)?;
        let mut steps_b = steps;
        steps_b.push(format!("{} = 0", h.display_with(names)));
        let mut eqs_b = others;
        eqs_b.push(h);
        eqs_b.push(g);
        pieces.extend(solve_rec(eqs_b, ineqs, vars, names, steps_b)?);
        return Ok(pieces);
    }
    Err(LieError::UnsupportedSystem(
        eqs.iter()
            .map(|e| e.display_with(names))
            .collect::<Vec<_>>()
            .join(", "),
    ))
}

fn render_univariate(coeffs: &[Q], var: &str) -> String {
    let mut e = vec![0u32; 1];
    let mut p = Poly::zero(1);
    for (k, c) in coeffs.iter().enumerate() {
        e[0] = k as u32;
        p = &p + &Poly::monomial(e.clone(), c.clone());
    }
    p.display_with(&[var.to_string()])
}

/// True for a quadric in three variables without singular points.
fn is_smooth_quadric(f: &Poly) -> bool {
    let n = f.nvars();
    if n != 3 || f.total_degree() != 2 || f.vars().len() != 3 {
        return false;
    }
    // Gradient 2Qz + L as an affine linear map.
    let mut a = vec![vec![Q::zero(); n]; n];
    let mut b = vec![Q::zero(); n];
    for (e, c) in f.terms() {
        let deg: u32 = e.iter().sum();
        match deg {
            2 => {
                let idx: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
                let (i, j) = (idx[0], idx[1]);
                if i == j {
                    a[i][i] += c * q(2);
                } else {
                    a[i][j] += c.clone();
                    a[j][i] += c.clone();
                }
            }
            1 => {
                let i = e.iter().position(|&x| x == 1).unwrap();
                b[i] -= c.clone();
            }
            _ => {}
        }
    }
    match solve(&a, &b) {
        None => true,
        Some(sol) => !f.eval(&sol.particular).is_zero(),
    }
}

/// Classifies the common zero set of `equations` inside `ℂ^nvars`.
pub fn classify(equations: Vec<Poly>, nvars: usize, names: &[String]) -> Result<Locus> {
    let equations: Vec<Poly> = equations.into_iter().filter(|e| !e.is_zero()).collect();
    if equations.is_empty() {
        return Ok(Locus {
            nvars,
            equations,
            shape: LocusShape::Entire,
            pieces: vec![LocusPiece {
                copies: 1,
                free: (0..nvars).collect(),
                inequations: Vec::new(),
                steps: Vec::new(),
            }],
        });
    }
    let pieces = decompose(equations.clone(), Vec::new(), (0..nvars).collect(), names)?;
    let shape = if pieces.is_empty() {
        LocusShape::Empty
    } else if equations.len() == 1 && is_smooth_quadric(&equations[0]) {
        LocusShape::SmoothQuadric
    } else if pieces.iter().all(LocusPiece::is_affine_space)
        && pieces.iter().all(|p| p.dim() == pieces[0].dim())
    {
        LocusShape::Affine {
            copies: pieces.iter().map(|p| p.copies).sum(),
            dim: pieces[0].dim(),
        }
    } else if let [p] = pieces.as_slice() {
        if p.copies == 1 && p.dim() == 1 && punctures(p) == Some(1) {
            LocusShape::PuncturedLine
        } else {
            LocusShape::Other
        }
    } else {
        LocusShape::Other
    };
    Ok(Locus {
        nvars,
        equations,
        shape,
        pieces,
    })
}

fn punctures(p: &LocusPiece) -> Option<usize> {
    let z = p.free[0];
    let mut prod = vec![q(1)];
    for h in &p.inequations {
        let hu = h.to_univariate(z)?;
        let mut out = vec![Q::zero(); prod.len() + hu.len() - 1];
        for (i, a) in prod.iter().enumerate() {
            for (j, b) in hu.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        prod = out;
    }
    Some(univariate::distinct_roots(&prod))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;

    fn vars(n: usize) -> Vec<Poly> {
        (0..n).map(|i| Poly::var(n, i)).collect()
    }

    #[test]
    fn punctured_line_from_conic() {
        // 2 z2^2 + 3 z1 z2 + 1 = 0
        let z = vars(2);
        let f = &(&(&z[1] * &z[1]).scale(&q(2)) + &(&z[0] * &z[1]).scale(&q(3))) + &Poly::one(2);
        let l = classify(vec![f], 2, &default_names(2)).unwrap();
        assert_eq!(l.shape, LocusShape::PuncturedLine);
    }

    #[test]
    fn two_points_and_quadric() {
        let z = vars(1);
        let f = &(&z[0] * &z[0]).scale(&q(3)) + &Poly::one(1);
        let l = classify(vec![f], 1, &default_names(1)).unwrap();
        assert_eq!(l.shape, LocusShape::Affine { copies: 2, dim: 0 });

        let z = vars(3);
        let f = &(&(&Poly::one(3) + &(&z[0] * &z[1])) + &(&z[0] * &z[2]).scale(&q(2)))
            + &(&z[1] * &z[2]).scale(&q(-1));
        let l = classify(vec![f], 3, &default_names(3)).unwrap();
        assert_eq!(l.shape, LocusShape::SmoothQuadric);
    }

    #[test]
    fn nonzero_constant_is_empty() {
        let l = classify(vec![Poly::one(2)], 2, &default_names(2)).unwrap();
        assert_eq!(l.shape, LocusShape::Empty);
    }
}
