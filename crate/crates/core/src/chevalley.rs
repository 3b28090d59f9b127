//! Chevalley bases with exact structure constants.
//!
//! The basis of the Lie algebra consists of root vectors `E_γ` for every
//! root and the simple coroots `H_i`. Brackets are
//!
//! * `[H_i, E_γ] = <γ, α_i^∨> E_γ`,
//! * `[E_γ, E_{-γ}] = H_γ`, the coroot of `γ` written in simple coroots,
//! * `[E_γ, E_δ] = N_{γ,δ} E_{γ+δ}` when `γ + δ` is a root, else zero.
//!
//! The constants `N_{γ,δ} = ±(p+1)` follow Carter's algorithm: for every
//! positive non-simple root `ξ` the special pair `(α, β)` with `α` first
//! in canonical order gets the sign `+`, all other constants are forced by
//! the identities `N_{-γ,-δ} = -N_{γ,δ}`, the cyclic relation for three
//! roots summing to zero, and the four-root relation. The construction is
//! checked against the Jacobi identity by the test suite.
//!
//! Weyl group elements are represented by `n_i = x_{α_i}(1) x_{-α_i}(-1)
//! x_{α_i}(1)`, where `x_γ(c) = exp(c ad E_γ)`, and `ẇ` is the product of
//! the `n_i` along the canonical reduced word of `w`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::linalg::{inverse, q, to_i64, to_rational, Q};
use crate::poly::Poly;
use crate::rootcore::{RootId, RootSystem, Subsystem};
use crate::weylgrp::WeylElement;

/// A basis vector of the Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Basis {
    /// Root vector `E_γ`.
    E(RootId),
    /// Simple coroot `H_i`.
    H(usize),
}

/// A Lie algebra element whose coordinates are polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePoly {
    nvars: usize,
    coeffs: BTreeMap<Basis, Poly>,
}

impl LiePoly {
    /// The zero element over `nvars` polynomial variables.
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    /// A basis vector.
    pub fn basis(nvars: usize, b: Basis) -> Self {
        Self::term(b, Poly::one(nvars))
    }

    /// A single term `p * b`.
    pub fn term(b: Basis, p: Poly) -> Self {
        let mut x = Self::zero(p.nvars());
        x.add_term(b, &p);
        x
    }

    /// Sum of root vectors with coefficient one, e.g. a nilpotent element.
    pub fn sum_of_root_vectors(nvars: usize, roots: &[RootId]) -> Self {
        let mut x = Self::zero(nvars);
        for &g in roots {
            x.add_term(Basis::E(g), &Poly::one(nvars));
        }
        x
    }

    /// Number of polynomial variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of a basis vector.
    pub fn coeff(&self, b: Basis) -> Poly {
        self.coeffs
            .get(&b)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.nvars))
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Poly)> {
        self.coeffs.iter()
    }

    /// Basis vectors with nonzero coefficient.
    pub fn support(&self) -> Vec<Basis> {
        self.coeffs.keys().copied().collect()
    }

    /// Adds `p * b` in place.
    pub fn add_term(&mut self, b: Basis, p: &Poly) {
        if p.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(b)
            .or_insert_with(|| Poly::zero(self.nvars));
        *entry = &*entry + p;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, p) in &other.coeffs {
            out.add_term(*b, p);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    /// Multiplies every coordinate by a rational.
    pub fn scale(&self, c: &Q) -> Self {
        self.scale_poly(&Poly::constant(self.nvars, c.clone()))
    }

    /// Multiplies every coordinate by a polynomial.
    pub fn scale_poly(&self, p: &Poly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (b, c) in &self.coeffs {
            out.add_term(*b, &(c * p));
        }
        out
    }

    /// Reinterprets a constant element over `nvars` variables.
    pub fn lift(&self, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (b, p) in &self.coeffs {
            assert!(p.is_constant(), "only constant elements can be lifted");
            out.add_term(*b, &Poly::constant(nvars, p.constant_term()));
        }
        out
    }

    /// Renders with root names and the given variable names.
    pub fn display(&self, rs: &RootSystem, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(b, p)| {
                let basis = match b {
                    Basis::E(g) => format!("E[{}]", rs.root_name(*g)),
                    Basis::H(i) => format!("H[{}]", rs.simple_name(*i)),
                };
                let c = p.display_with(names);
                if p.num_terms() == 1 && c == "1" {
                    basis
                } else {
                    format!("({c}) {basis}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Structure constants, coroots and Weyl group representatives.
#[derive(Clone, Debug)]
pub struct StructureTable {
    rs: RootSystem,
    n: Vec<i32>,
    coroots: Vec<Vec<i64>>,
    eta: Vec<Vec<i8>>,
    eta_inv: Vec<Vec<i8>>,
    h_images: Vec<Vec<Vec<i64>>>,
}

/// An sl2 triple `(N, H, Y)` with `[H, N] = 2N`, `[H, Y] = -2Y`, `[N, Y] = H`.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub n: LiePoly,
    pub h: LiePoly,
    pub y: LiePoly,
    /// `H` in the basis of simple coroots.
    pub h_coords: Vec<Q>,
    /// Coefficients `x_i` with `H = Σ x_i H_{β_i}` over the generators.
    pub generator_weights: Vec<Q>,
}

/// Builds the structure table of `rs`.
pub fn build_structure_table(rs: &RootSystem) -> Result<StructureTable> {
    StructureTable::new(rs.clone())
}

impl StructureTable {
    /// Builds structure constants and Weyl representatives for `rs`.
    pub fn new(rs: RootSystem) -> Result<Self> {
        let total = rs.num_roots();
        let d = rs.symmetrizer().to_vec();
        let coroots: Vec<Vec<i64>> = rs
            .root_ids()
            .map(|g| {
                let dg = rs.norm(g) / 2;
                rs.coords(g)
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| {
                        let num = k as i64 * d[i];
                        debug_assert_eq!(num % dg, 0);
                        num / dg
                    })
                    .collect()
            })
            .collect();
        let mut table = Self {
            n: vec![0; total * total],
            coroots,
            eta: Vec::new(),
            eta_inv: Vec::new(),
            h_images: Vec::new(),
            rs,
        };
        table.fill_positive()?;
        table.fill_all()?;
        table.build_weyl_representatives()?;
        Ok(table)
    }

    fn idx(&self, a: RootId, b: RootId) -> usize {
        a * self.rs.num_roots() + b
    }

    /// Constant for arbitrary roots, derived from the positive ones.
    fn derived(&self, r: RootId, s: RootId) -> Result<i64> {
        let rs = &self.rs;
        let Some(sum) = rs.add(r, s) else {
            return Ok(0);
        };
        let pr = rs.is_positive(r);
        let ps = rs.is_positive(s);
        if pr && ps {
            return Ok(self.n[self.idx(r, s)] as i64);
        }
        if !pr && !ps {
            return Ok(-(self.n[self.idx(rs.neg(r), rs.neg(s))] as i64));
        }
        let t = rs.neg(sum);
        // N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s); use the pair of equal sign.
        let (num, den) = if rs.is_positive(t) == pr {
            (rs.norm(t) * self.derived(t, r)?, rs.norm(s))
        } else {
            (rs.norm(t) * self.derived(s, t)?, rs.norm(r))
        };
        if num % den != 0 {
            return Err(LieError::StructureConstants(format!(
                "non-integral constant for roots {r}, {s}"
            )));
        }
        Ok(num / den)
    }

    fn fill_positive(&mut self) -> Result<()> {
        let rs = self.rs.clone();
        let npos = rs.num_positive();
        for xi in rs.positive_ids() {
            let mut pairs: Vec<(RootId, RootId)> = Vec::new();
            for a in 0..npos {
                if let Some(b) = rs.sub(xi, a) {
                    if rs.is_positive(b) && a < b {
                        pairs.push((a, b));
                    }
                }
            }
            let Some(&(a0, b0)) = pairs.first() else {
                continue;
            };
            let (p, _) = rs.root_string(b0, a0)?;
            let n0 = p as i64 + 1;
            self.set_pair(a0, b0, n0);
            for &(a, b) in &pairs[1..] {
                let na = rs.neg(a0);
                let nb = rs.neg(b0);
                let mut value = Q::zero();
                if let Some(x) = rs.add(b, na) {
                    let t = self.derived(b, na)? * self.derived(a, nb)?;
                    value += Q::new(t.into(), rs.norm(x).into());
                }
                if let Some(x) = rs.add(a, na) {
                    let t = self.derived(na, a)? * self.derived(b, nb)?;
                    value += Q::new(t.into(), rs.norm(x).into());
                }
                value *= Q::new(rs.norm(xi).into(), n0.into());
                let v = to_i64(&value).ok_or_else(|| {
                    LieError::StructureConstants(format!("non-integral N for pair {a},{b}"))
                })?;
                let (p, _) = rs.root_string(b, a)?;
                if v.abs() != p as i64 + 1 {
                    return Err(LieError::StructureConstants(format!(
                        "|N_{{{a},{b}}}| = {} but the string gives {}",
                        v.abs(),
                        p + 1
                    )));
                }
                self.set_pair(a, b, v);
            }
        }
        Ok(())
    }

    fn set_pair(&mut self, a: RootId, b: RootId, v: i64) {
        let i = self.idx(a, b);
        let j = self.idx(b, a);
        self.n[i] = v as i32;
        self.n[j] = -v as i32;
    }

    fn fill_all(&mut self) -> Result<()> {
        let total = self.rs.num_roots();
        let mut full = vec![0i32; total * total];
        for r in 0..total {
            for s in 0..total {
                full[r * total + s] = self.derived(r, s)? as i32;
            }
        }
        self.n = full;
        Ok(())
    }

    fn build_weyl_representatives(&mut self) -> Result<()> {
        let l = self.rs.rank();
        let mut eta = Vec::with_capacity(l);
        let mut eta_inv = Vec::with_capacity(l);
        let mut h_images = Vec::with_capacity(l);
        for i in 0..l {
            let mut signs = Vec::new();
            let mut signs_inv = Vec::new();
            for g in self.rs.root_ids() {
                let x = LiePoly::basis(0, Basis::E(g));
                let target = self.rs.simple_reflect(i, g);
                signs.push(self.single_sign(&self.n_rep(i, &x, 1), target, i, g)?);
                signs_inv.push(self.single_sign(&self.n_rep(i, &x, -1), target, i, g)?);
            }
            let images: Vec<Vec<i64>> = (0..l)
                .map(|j| {
                    let y = self.n_rep(i, &LiePoly::basis(0, Basis::H(j)), 1);
                    (0..l)
                        .map(|k| to_i64(&y.coeff(Basis::H(k)).constant_term()).unwrap())
                        .collect()
                })
                .collect();
            eta.push(signs);
            eta_inv.push(signs_inv);
            h_images.push(images);
        }
        self.eta = eta;
        self.eta_inv = eta_inv;
        self.h_images = h_images;
        Ok(())
    }

    /// `Ad(n_i^{±1}) x` computed from exponentials.
    fn n_rep(&self, i: usize, x: &LiePoly, sign: i64) -> LiePoly {
        let a = self.rs.simple(i);
        let na = self.rs.neg(a);
        let c = Poly::constant(x.nvars(), q(sign));
        let mc = Poly::constant(x.nvars(), q(-sign));
        // n = x_a(c) x_{-a}(-c) x_a(c); apply the rightmost factor first.
        let x1 = self.apply_unipotent(a, &c, x);
        let x2 = self.apply_unipotent(na, &mc, &x1);
        self.apply_unipotent(a, &c, &x2)
    }

    fn single_sign(&self, y: &LiePoly, target: RootId, i: usize, g: RootId) -> Result<i8> {
        let terms: Vec<(&Basis, &Poly)> = y.terms().collect();
        match terms.as_slice() {
            [(Basis::E(t), p)] if *t == target && p.is_constant() => {
                let c = p.constant_term();
                if c == q(1) {
                    Ok(1)
                } else if c == q(-1) {
                    Ok(-1)
                } else {
                    Err(LieError::StructureConstants(format!(
                        "n_{i} scales E_{g} by {c}"
                    )))
                }
            }
            _ => Err(LieError::StructureConstants(format!(
                "n_{i} does not map E_{g} to a multiple of E_{target}"
            ))),
        }
    }

    /// The underlying root system.
    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        self.rs.num_roots() + self.rs.rank()
    }

    /// All basis vectors: root vectors in root order, then coroots.
    pub fn basis(&self) -> Vec<Basis> {
        self.rs
            .root_ids()
            .map(Basis::E)
            .chain((0..self.rs.rank()).map(Basis::H))
            .collect()
    }

    /// Structure constant `N_{r,s}` (zero when `r + s` is not a root).
    pub fn n(&self, r: RootId, s: RootId) -> i32 {
        self.n[self.idx(r, s)]
    }

    /// Coroot `H_γ` in the basis of simple coroots.
    pub fn coroot(&self, g: RootId) -> &[i64] {
        &self.coroots[g]
    }

    /// Sign with `Ad(n_i) E_γ = η E_{s_i γ}`.
    pub fn eta(&self, i: usize, g: RootId) -> i8 {
        self.eta[i][g]
    }

    /// Sign with `Ad(n_i^{-1}) E_γ = η E_{s_i γ}`.
    pub fn eta_inverse(&self, i: usize, g: RootId) -> i8 {
        self.eta_inv[i][g]
    }

    /// Bracket of two basis vectors as integer combination.
    pub fn bracket_basis(&self, a: Basis, b: Basis) -> Vec<(Basis, i64)> {
        let rs = &self.rs;
        match (a, b) {
            (Basis::H(_), Basis::H(_)) => Vec::new(),
            (Basis::H(i), Basis::E(g)) => {
                let k = rs.simple_pairing(g, i) as i64;
                if k == 0 {
                    Vec::new()
                } else {
                    vec![(Basis::E(g), k)]
                }
            }
            (Basis::E(g), Basis::H(i)) => {
                let k = rs.simple_pairing(g, i) as i64;
                if k == 0 {
                    Vec::new()
                } else {
                    vec![(Basis::E(g), -k)]
                }
            }
            (Basis::E(r), Basis::E(s)) => {
                if s == rs.neg(r) {
                    self.coroots[r]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (Basis::H(i), c))
                        .collect()
                } else if let Some(t) = rs.add(r, s) {
                    vec![(Basis::E(t), self.n(r, s) as i64)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Bracket of integer vectors indexed like [`StructureTable::basis`].
    pub fn bracket_int(&self, x: &BTreeMap<Basis, i64>, y: &BTreeMap<Basis, i64>) -> BTreeMap<Basis, i64> {
        let mut out: BTreeMap<Basis, i64> = BTreeMap::new();
        for (&a, &ca) in x {
            for (&b, &cb) in y {
                for (c, k) in self.bracket_basis(a, b) {
                    *out.entry(c).or_insert(0) += ca * cb * k;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Triples of basis vectors violating the Jacobi identity.
    ///
    /// With `stride = 1` every triple is tested; larger strides test the
    /// triples whose running index is a multiple of `stride`.
    pub fn jacobi_violations(&self, stride: usize) -> Vec<(Basis, Basis, Basis)> {
        let basis = self.basis();
        let unit = |b: Basis| BTreeMap::from([(b, 1i64)]);
        let mut bad = Vec::new();
        let mut counter = 0usize;
        for (ia, &a) in basis.iter().enumerate() {
            for (ib, &b) in basis.iter().enumerate().skip(ia) {
                for &c in basis.iter().skip(ib) {
                    counter += 1;
                    if !counter.is_multiple_of(stride.max(1)) {
                        continue;
                    }
                    let (xa, xb, xc) = (unit(a), unit(b), unit(c));
                    let t1 = self.bracket_int(&xa, &self.bracket_int(&xb, &xc));
                    let t2 = self.bracket_int(&xb, &self.bracket_int(&xc, &xa));
                    let t3 = self.bracket_int(&xc, &self.bracket_int(&xa, &xb));
                    let mut sum: BTreeMap<Basis, i64> = BTreeMap::new();
                    for t in [t1, t2, t3] {
                        for (k, v) in t {
                            *sum.entry(k).or_insert(0) += v;
                        }
                    }
                    if sum.values().any(|&v| v != 0) {
                        bad.push((a, b, c));
                    }
                }
            }
        }
        bad
    }

    /// Bracket of polynomial-valued elements.
    pub fn bracket(&self, x: &LiePoly, y: &LiePoly) -> LiePoly {
        let mut out = LiePoly::zero(x.nvars());
        for (&a, pa) in x.terms() {
            for (&b, pb) in y.terms() {
                let prod = pa * pb;
                for (c, k) in self.bracket_basis(a, b) {
                    out.add_term(c, &prod.scale(&q(k)));
                }
            }
        }
        out
    }

    /// `ad(E_γ) x`.
    pub fn ad_root(&self, g: RootId, x: &LiePoly) -> LiePoly {
        self.bracket(&LiePoly::basis(x.nvars(), Basis::E(g)), x)
    }

    /// `Ad(x_γ(c)) X = Σ_k c^k / k! ad(E_γ)^k X`.
    pub fn apply_unipotent(&self, g: RootId, c: &Poly, x: &LiePoly) -> LiePoly {
        let mut out = x.clone();
        let mut term = x.clone();
        let mut k = 0i64;
        loop {
            k += 1;
            term = self.ad_root(g, &term);
            if term.is_zero() {
                break;
            }
            term = term.scale_poly(c).scale(&Q::new(1.into(), k.into()));
            out = out.add(&term);
        }
        out
    }

    fn act_n(&self, i: usize, x: &LiePoly, inverse: bool) -> LiePoly {
        let signs = if inverse { &self.eta_inv[i] } else { &self.eta[i] };
        let mut out = LiePoly::zero(x.nvars());
        for (&b, p) in x.terms() {
            match b {
                Basis::E(g) => {
                    let t = self.rs.simple_reflect(i, g);
                    out.add_term(Basis::E(t), &p.scale(&q(signs[g] as i64)));
                }
                Basis::H(j) => {
                    for (k, &c) in self.h_images[i][j].iter().enumerate() {
                        if c != 0 {
                            out.add_term(Basis::H(k), &p.scale(&q(c)));
                        }
                    }
                }
            }
        }
        out
    }

    /// `Ad(n_i) x`.
    pub fn apply_simple(&self, i: usize, x: &LiePoly) -> LiePoly {
        self.act_n(i, x, false)
    }

    /// `Ad(n_i^{-1}) x`.
    pub fn apply_simple_inverse(&self, i: usize, x: &LiePoly) -> LiePoly {
        self.act_n(i, x, true)
    }

    /// `Ad(ẇ) x` for the representative along the canonical word.
    pub fn weyl_rep_action(&self, w: &WeylElement, x: &LiePoly) -> LiePoly {
        let word = w.canonical_word(&self.rs);
        word.iter()
            .rev()
            .fold(x.clone(), |acc, &i| self.apply_simple(i, &acc))
    }

    /// `Ad(ẇ^{-1}) x`.
    pub fn weyl_rep_action_inverse(&self, w: &WeylElement, x: &LiePoly) -> LiePoly {
        let word = w.canonical_word(&self.rs);
        word.iter()
            .fold(x.clone(), |acc, &i| self.apply_simple_inverse(i, &acc))
    }

    /// The triple `(E_γ, H_γ, E_{-γ})` for a positive root.
    pub fn sl2_triple(&self, g: RootId) -> (LiePoly, LiePoly, LiePoly) {
        let h = self.bracket(
            &LiePoly::basis(0, Basis::E(g)),
            &LiePoly::basis(0, Basis::E(self.rs.neg(g))),
        );
        (
            LiePoly::basis(0, Basis::E(g)),
            h,
            LiePoly::basis(0, Basis::E(self.rs.neg(g))),
        )
    }

    /// The sl2 triple of the regular nilpotent element of a subsystem.
    ///
    /// With `A` the Cartan matrix of the generators `β_i`, the weights
    /// `x = (2, …, 2) A^{-1}` give `H = Σ x_i H_{β_i}`, `N = Σ E_{β_i}`
    /// and `Y = Σ x_i E_{-β_i}`, so that `β_j(H) = 2` for every `j`.
    pub fn regular_nilpotent_sl2(&self, sub: &Subsystem) -> Result<Sl2Triple> {
        let l = self.rs.rank();
        if sub.generators.is_empty() {
            return Ok(Sl2Triple {
                n: LiePoly::zero(0),
                h: LiePoly::zero(0),
                y: LiePoly::zero(0),
                h_coords: vec![Q::zero(); l],
                generator_weights: Vec::new(),
            });
        }
        if !sub.is_simple_system {
            return Err(LieError::NotSimpleSystem(format!("{:?}", sub.generators)));
        }
        let a = to_rational(&sub.cartan);
        let inv = inverse(&a)
            .ok_or_else(|| LieError::NotSimpleSystem("singular Cartan matrix".into()))?;
        let k = sub.generators.len();
        let x: Vec<Q> = (0..k)
            .map(|j| (0..k).map(|i| q(2) * &inv[i][j]).fold(Q::zero(), |s, t| s + t))
            .collect();
        let mut h_coords = vec![Q::zero(); l];
        let mut n = LiePoly::zero(0);
        let mut y = LiePoly::zero(0);
        for (i, &g) in sub.generators.iter().enumerate() {
            for (j, &c) in self.coroots[g].iter().enumerate() {
                h_coords[j] += &x[i] * q(c);
            }
            n.add_term(Basis::E(g), &Poly::one(0));
            y.add_term(Basis::E(self.rs.neg(g)), &Poly::constant(0, x[i].clone()));
        }
        let mut h = LiePoly::zero(0);
        for (j, c) in h_coords.iter().enumerate() {
            h.add_term(Basis::H(j), &Poly::constant(0, c.clone()));
        }
        let triple = Sl2Triple {
            n,
            h,
            y,
            h_coords,
            generator_weights: x,
        };
        self.verify_sl2(&triple)?;
        Ok(triple)
    }

    /// Checks the sl2 relations of a triple.
    pub fn verify_sl2(&self, t: &Sl2Triple) -> Result<()> {
        let hn = self.bracket(&t.h, &t.n);
        let hy = self.bracket(&t.h, &t.y);
        let ny = self.bracket(&t.n, &t.y);
        if hn != t.n.scale(&q(2)) {
            return Err(LieError::OrbitCheck("[H, N] != 2N".into()));
        }
        if hy != t.y.scale(&q(-2)) {
            return Err(LieError::OrbitCheck("[H, Y] != -2Y".into()));
        }
        if ny != t.h {
            return Err(LieError::OrbitCheck("[N, Y] != H".into()));
        }
        Ok(())
    }

    /// Value `γ(H)` of a root on an element of the Cartan subalgebra given
    /// in simple coroot coordinates.
    pub fn root_value(&self, g: RootId, h: &[Q]) -> Q {
        h.iter()
            .enumerate()
            .map(|(i, c)| c * q(self.rs.simple_pairing(g, i) as i64))
            .fold(Q::zero(), |s, t| s + t)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::E(g) => write!(f, "E{g}"),
            Basis::H(i) => write!(f, "H{i}"),
        }
    }
}
