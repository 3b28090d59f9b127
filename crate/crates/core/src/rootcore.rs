//! Root systems generated from Cartan matrices.
//!
//! Roots are integer coordinate vectors in the basis of simple roots. The
//! Cartan matrix follows the convention `A[i][j] = <α_j, α_i^∨>`, so row `i`
//! lists the pairings of every simple root with the coroot of `α_i`.
//!
//! Positive roots are stored in canonical order: ascending height, with ties
//! broken by descending lexicographic order of coordinates. The tie rule puts
//! the simple roots first in index order, so root id `i < rank` is `α_i`.
//! Negative roots follow the positive ones in the same order, so the negative
//! of root `k < n` has id `k + n`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::{is_positive_definite, q, Q};

/// Index of a root inside its [`RootSystem`].
pub type RootId = usize;

/// A root as its coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i32>,
}

impl Root {
    /// Sum of the coordinates.
    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    /// True when every coordinate is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

/// Length class of a root within its irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLength {
    Short,
    Long,
}

/// A finite crystallographic root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    cartan: Vec<Vec<i32>>,
    sym: Vec<i64>,
    simple_names: Vec<String>,
    simple_ascii: Vec<String>,
    display_order: Vec<usize>,
    bourbaki_of: Option<Vec<usize>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, RootId>,
    npos: usize,
    sums: Vec<Option<RootId>>,
    reflections: Vec<Vec<u16>>,
    norms: Vec<i64>,
    component_max_norm: Vec<i64>,
    component_of_simple: Vec<usize>,
}

/// Permutation taking the chain labels used for E6 to Bourbaki node numbers.
///
/// Entry `k` is the Bourbaki index (zero based) of the simple root called
/// `α_{k+1}` in the labeling used for E6 here: a chain `α1-α2-α3-α4-α5`
/// with `α6` attached to `α3`.
pub const E6_LABEL_TO_BOURBAKI: [usize; 6] = [0, 2, 3, 4, 5, 1];

fn bourbaki_cartan(family: char, n: usize) -> Result<Vec<Vec<i32>>> {
    let bad = || LieError::UnknownType(format!("{family}{n}"));
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i32>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        'A' if n >= 1 => (1..n).for_each(|i| link(&mut a, i - 1, i)),
        'B' if n >= 2 => {
            (1..n).for_each(|i| link(&mut a, i - 1, i));
            a[n - 1][n - 2] = -2;
        }
        'C' if n >= 2 => {
            (1..n).for_each(|i| link(&mut a, i - 1, i));
            a[n - 2][n - 1] = -2;
        }
        'D' if n >= 3 => {
            (1..n - 1).for_each(|i| link(&mut a, i - 1, i));
            link(&mut a, n - 3, n - 1);
        }
        'E' if (6..=8).contains(&n) => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            (3..n).for_each(|i| link(&mut a, i - 1, i));
        }
        'F' if n == 4 => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
        'G' if n == 2 => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(bad()),
    }
    Ok(a)
}

fn parse_component(label: &str) -> Result<(char, usize)> {
    let mut chars = label.chars();
    let family = chars
        .next()
        .ok_or_else(|| LieError::UnknownType(label.to_string()))?
        .to_ascii_uppercase();
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| LieError::UnknownType(label.to_string()))?;
    Ok((family, n))
}

fn block_diagonal(blocks: &[Vec<Vec<i32>>]) -> Vec<Vec<i32>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    a
}

/// Connected components of the Dynkin graph of a Cartan matrix, each listed
/// in increasing index order and ordered by their smallest index.
pub fn cartan_components(cartan: &[Vec<i32>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Symmetrizer `d` with `d_i A_ij = d_j A_ji`, normalized to the smallest
/// positive integers on every component.
fn symmetrizer(cartan: &[Vec<i32>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for comp in cartan_components(cartan) {
        d[comp[0]] = Some(q(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            for &j in &comp {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = d[i].clone().unwrap() * q(cartan[i][j] as i64) / q(cartan[j][i] as i64);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(LieError::NotFiniteType("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                }
            }
        }
        let denoms = comp
            .iter()
            .map(|&i| d[i].as_ref().unwrap().denom().clone())
            .fold(num_bigint::BigInt::from(1), num_integer::lcm);
        let min = comp
            .iter()
            .map(|&i| d[i].clone().unwrap() * Q::from_integer(denoms.clone()))
            .min()
            .unwrap();
        for &i in &comp {
            let v = d[i].clone().unwrap() * Q::from_integer(denoms.clone()) / min.clone();
            d[i] = Some(v);
        }
    }
    d.into_iter()
        .map(|x| {
            let x = x.unwrap();
            crate::linalg::to_i64(&x)
                .filter(|&v| v > 0)
                .ok_or_else(|| LieError::NotFiniteType("non-positive symmetrizer".into()))
        })
        .collect()
}

/// Detects the Dynkin type of a Cartan matrix of finite type.
///
/// Components are reported in the order of their smallest index and joined
/// with `+`, for example `A1+C3`.
pub fn dynkin_label(cartan: &[Vec<i32>]) -> Result<String> {
    let sym = symmetrizer(cartan)?;
    let mut parts = Vec::new();
    for comp in cartan_components(cartan) {
        parts.push(component_label(cartan, &sym, &comp)?);
    }
    Ok(parts.join("+"))
}

fn component_label(cartan: &[Vec<i32>], sym: &[i64], comp: &[usize]) -> Result<String> {
    let r = comp.len();
    let not_finite = || LieError::NotFiniteType(format!("unrecognized diagram on nodes {comp:?}"));
    let mult = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let neighbors = |i: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&j| j != i && cartan[i][j] != 0)
            .collect()
    };
    let mut multiple = None;
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            match mult(i, j) {
                0 | 1 => {}
                2 | 3 => {
                    if multiple.is_some() {
                        return Err(not_finite());
                    }
                    multiple = Some((i, j, mult(i, j)));
                }
                _ => return Err(not_finite()),
            }
        }
    }
    let degrees: Vec<usize> = comp.iter().map(|&i| neighbors(i).len()).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if edges + 1 != r || degrees.iter().any(|&d| d > 3) {
        return Err(not_finite());
    }
    match multiple {
        Some((_, _, 3)) => {
            if r == 2 {
                Ok("G2".into())
            } else {
                Err(not_finite())
            }
        }
        Some((i, j, _)) => {
            if degrees.iter().any(|&d| d > 2) {
                return Err(not_finite());
            }
            if r == 2 {
                return Ok("B2".into());
            }
            let di = neighbors(i).len();
            let dj = neighbors(j).len();
            if di == 2 && dj == 2 {
                return if r == 4 { Ok("F4".into()) } else { Err(not_finite()) };
            }
            let end = if di == 1 { i } else { j };
            let other = if end == i { j } else { i };
            if sym[end] < sym[other] {
                Ok(format!("B{r}"))
            } else {
                Ok(format!("C{r}"))
            }
        }
        None => {
            let branch: Vec<usize> = comp
                .iter()
                .zip(&degrees)
                .filter(|(_, &d)| d == 3)
                .map(|(&i, _)| i)
                .collect();
            match branch.as_slice() {
                [] => Ok(format!("A{r}")),
                [b] => {
                    let mut arms: Vec<usize> = neighbors(*b)
                        .into_iter()
                        .map(|start| {
                            let (mut prev, mut cur, mut len) = (*b, start, 1);
                            loop {
                                let next: Vec<usize> =
                                    neighbors(cur).into_iter().filter(|&x| x != prev).collect();
                                match next.as_slice() {
                                    [] => break len,
                                    [nx] => {
                                        prev = cur;
                                        cur = *nx;
                                        len += 1;
                                    }
                                    _ => break usize::MAX,
                                }
                            }
                        })
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => Ok(format!("D{r}")),
                        [1, 2, 2] => Ok("E6".into()),
                        [1, 2, 3] => Ok("E7".into()),
                        [1, 2, 4] => Ok("E8".into()),
                        _ => Err(not_finite()),
                    }
                }
                _ => Err(not_finite()),
            }
        }
    }
}

fn validate_cartan(cartan: &[Vec<i32>]) -> Result<()> {
    let n = cartan.len();
    if n == 0 || cartan.iter().any(|r| r.len() != n) {
        return Err(LieError::NotFiniteType("matrix must be square and nonempty".into()));
    }
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(LieError::NotFiniteType(format!("diagonal entry {i} is not 2")));
        }
        for j in 0..n {
            if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                return Err(LieError::NotFiniteType(format!("bad off-diagonal pair ({i},{j})")));
            }
        }
    }
    let sym = symmetrizer(cartan)?;
    let b: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| q(sym[i] * cartan[i][j] as i64)).collect())
        .collect();
    if !is_positive_definite(&b) {
        return Err(LieError::NotFiniteType("symmetrized form is not positive definite".into()));
    }
    Ok(())
}

impl RootSystem {
    /// Builds a root system from a type label such as `G2`, `F4`, `E6`,
    /// `B3` or a product such as `A1+A2`.
    ///
    /// `G2` names its simple roots `α` (short, index 0) and `β` (long,
    /// index 1). `E6` uses the chain labeling described at
    /// [`E6_LABEL_TO_BOURBAKI`]; `E6B` gives the Bourbaki numbering.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        if label.eq_ignore_ascii_case("E6") {
            let b = bourbaki_cartan('E', 6)?;
            let p = E6_LABEL_TO_BOURBAKI;
            let a: Vec<Vec<i32>> = (0..6)
                .map(|k| (0..6).map(|l| b[p[k]][p[l]]).collect())
                .collect();
            let mut rs = Self::from_cartan(a, "E6")?;
            rs.bourbaki_of = Some(p.to_vec());
            return Ok(rs);
        }
        if label.eq_ignore_ascii_case("E6B") {
            return Self::from_cartan(bourbaki_cartan('E', 6)?, "E6B");
        }
        let comps: Vec<&str> = label.split('+').map(str::trim).collect();
        let mut blocks = Vec::new();
        let mut canon = Vec::new();
        for c in &comps {
            let (family, n) = parse_component(c)?;
            blocks.push(bourbaki_cartan(family, n)?);
            canon.push(format!("{family}{n}"));
        }
        let mut rs = Self::from_cartan(block_diagonal(&blocks), &canon.join("+"))?;
        if rs.label == "G2" {
            rs.simple_names = vec!["α".into(), "β".into()];
            rs.simple_ascii = vec!["alpha".into(), "beta".into()];
            rs.display_order = vec![1, 0];
        }
        Ok(rs)
    }

    /// Builds a root system directly from a Cartan matrix.
    pub fn from_cartan(cartan: Vec<Vec<i32>>, label: &str) -> Result<Self> {
        validate_cartan(&cartan)?;
        let l = cartan.len();
        let sym = symmetrizer(&cartan)?;
        let positives = generate_positive_roots(&cartan)?;
        let npos = positives.len();
        let mut roots: Vec<Root> = positives
            .iter()
            .map(|c| Root { coords: c.clone() })
            .collect();
        roots.extend(positives.iter().map(|c| Root {
            coords: c.iter().map(|x| -x).collect(),
        }));
        let index: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let inner_coords = |a: &[i32], b: &[i32]| -> i64 {
            let mut s = 0i64;
            for i in 0..l {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..l {
                    s += a[i] as i64 * b[j] as i64 * sym[i] * cartan[i][j] as i64;
                }
            }
            s
        };
        let norms: Vec<i64> = roots
            .iter()
            .map(|r| inner_coords(&r.coords, &r.coords))
            .collect();
        let total = roots.len();
        let mut sums = vec![None; total * total];
        for a in 0..total {
            for b in 0..total {
                let s: Vec<i32> = roots[a]
                    .coords
                    .iter()
                    .zip(&roots[b].coords)
                    .map(|(x, y)| x + y)
                    .collect();
                sums[a * total + b] = index.get(&s).copied();
            }
        }
        let reflections: Vec<Vec<u16>> = (0..l)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let k: i32 = r.coords.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                        let mut c = r.coords.clone();
                        c[i] -= k;
                        index[&c] as u16
                    })
                    .collect()
            })
            .collect();
        let comps = cartan_components(&cartan);
        let mut component_of_simple = vec![0; l];
        for (c, comp) in comps.iter().enumerate() {
            for &i in comp {
                component_of_simple[i] = c;
            }
        }
        let mut component_max_norm = vec![0i64; comps.len()];
        for r in 0..npos {
            let c = component_of_simple[roots[r].coords.iter().position(|&x| x != 0).unwrap()];
            component_max_norm[c] = component_max_norm[c].max(norms[r]);
        }
        Ok(Self {
            label: label.to_string(),
            simple_names: (1..=l).map(|i| format!("α{i}")).collect(),
            simple_ascii: (1..=l).map(|i| format!("a{i}")).collect(),
            display_order: (0..l).collect(),
            bourbaki_of: None,
            cartan,
            sym,
            roots,
            index,
            npos,
            sums,
            reflections,
            norms,
            component_max_norm,
            component_of_simple,
        })
    }

    /// Type label, for example `G2`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rank `l`.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Cartan matrix with `A[i][j] = <α_j, α_i^∨>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Symmetrizer `d_i = (α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// For the relabeled E6, the Bourbaki index of every simple root.
    pub fn bourbaki_labels(&self) -> Option<&[usize]> {
        self.bourbaki_of.as_deref()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.npos
    }

    /// Number of roots.
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// All root ids, positives first.
    pub fn root_ids(&self) -> std::ops::Range<RootId> {
        0..self.roots.len()
    }

    /// Ids of positive roots in canonical order.
    pub fn positive_ids(&self) -> std::ops::Range<RootId> {
        0..self.npos
    }

    /// Ids of negative roots.
    pub fn negative_ids(&self) -> std::ops::Range<RootId> {
        self.npos..2 * self.npos
    }

    /// The root with the given id.
    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    /// Coordinates of a root.
    pub fn coords(&self, id: RootId) -> &[i32] {
        &self.roots[id].coords
    }

    /// Id of the root with these coordinates.
    pub fn id_of(&self, coords: &[i32]) -> Option<RootId> {
        self.index.get(coords).copied()
    }

    /// Id of the root with these coordinates, or an error.
    pub fn require(&self, coords: &[i32]) -> Result<RootId> {
        self.id_of(coords)
            .ok_or_else(|| LieError::NotARoot(coords.to_vec(), self.label.clone()))
    }

    /// Id of the simple root `α_i`.
    pub fn simple(&self, i: usize) -> RootId {
        i
    }

    /// Index of the simple root with this id, if it is simple.
    pub fn simple_index(&self, id: RootId) -> Option<usize> {
        (id < self.rank()).then_some(id)
    }

    /// The negative root.
    pub fn neg(&self, id: RootId) -> RootId {
        if id < self.npos {
            id + self.npos
        } else {
            id - self.npos
        }
    }

    /// True for positive roots.
    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.npos
    }

    /// Height of a root (negative for negative roots).
    pub fn height(&self, id: RootId) -> i32 {
        self.roots[id].height()
    }

    /// `a + b` when it is a root.
    pub fn add(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.roots.len() + b]
    }

    /// `a - b` when it is a root.
    pub fn sub(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.add(a, self.neg(b))
    }

    /// Invariant form `(a, b)` normalized so that `(α_i, α_i) = 2 d_i`.
    pub fn inner(&self, a: RootId, b: RootId) -> i64 {
        self.inner_coords(self.coords(a), self.coords(b))
    }

    /// Invariant form on arbitrary coordinate vectors.
    pub fn inner_coords(&self, a: &[i32], b: &[i32]) -> i64 {
        let l = self.rank();
        let mut s = 0i64;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a[i] as i64 * b[j] as i64 * self.sym[i] * self.cartan[i][j] as i64;
            }
        }
        s
    }

    /// Squared length `(a, a)`.
    pub fn norm(&self, a: RootId) -> i64 {
        self.norms[a]
    }

    /// The pairing `<b, a^∨> = 2 (b, a) / (a, a)`.
    pub fn pairing(&self, b: RootId, a: RootId) -> i32 {
        let num = 2 * self.inner(b, a);
        let den = self.norms[a];
        debug_assert_eq!(num % den, 0);
        (num / den) as i32
    }

    /// `<γ, α_i^∨>` for a simple coroot.
    pub fn simple_pairing(&self, gamma: RootId, i: usize) -> i32 {
        self.coords(gamma)
            .iter()
            .zip(&self.cartan[i])
            .map(|(c, a)| c * a)
            .sum()
    }

    /// The `γ`-string through `δ`: the largest `p, q` with `δ - pγ` and
    /// `δ + qγ` roots.
    pub fn root_string(&self, delta: RootId, gamma: RootId) -> Result<(u32, u32)> {
        if delta == gamma || delta == self.neg(gamma) {
            return Err(LieError::DegenerateString);
        }
        let walk = |step: RootId| {
            let mut k = 0;
            let mut cur = delta;
            while let Some(next) = self.add(cur, step) {
                cur = next;
                k += 1;
            }
            k
        };
        Ok((walk(self.neg(gamma)), walk(gamma)))
    }

    /// Reflection of `γ` in the root `a`: `γ - <γ, a^∨> a`.
    pub fn reflect(&self, a: RootId, gamma: RootId) -> RootId {
        let k = self.pairing(gamma, a);
        let coords: Vec<i32> = self
            .coords(gamma)
            .iter()
            .zip(self.coords(a))
            .map(|(g, x)| g - k * x)
            .collect();
        self.index[&coords]
    }

    /// Reflection of `γ` in the simple root `α_i`.
    pub fn simple_reflect(&self, i: usize, gamma: RootId) -> RootId {
        self.reflections[i][gamma] as RootId
    }

    /// The simple reflection `s_i` as a table of root ids.
    pub fn simple_reflection_table(&self, i: usize) -> &[u16] {
        &self.reflections[i]
    }

    /// Length class of a root.
    pub fn length_class(&self, id: RootId) -> RootLength {
        let first = self.coords(id).iter().position(|&x| x != 0).unwrap();
        let c = self.component_of_simple[first];
        if self.norms[id] == self.component_max_norm[c] {
            RootLength::Long
        } else {
            RootLength::Short
        }
    }

    /// True when the Dynkin diagram is connected.
    pub fn is_irreducible(&self) -> bool {
        cartan_components(&self.cartan).len() == 1
    }

    /// The highest root of an irreducible system.
    pub fn highest_root(&self) -> Result<RootId> {
        if !self.is_irreducible() {
            return Err(LieError::Reducible(self.label.clone()));
        }
        Ok(self.npos - 1)
    }

    /// The lowest root `α_0`, the negative of the highest root.
    pub fn lowest_root(&self) -> Result<RootId> {
        Ok(self.neg(self.highest_root()?))
    }

    /// Unicode name of a simple root.
    pub fn simple_name(&self, i: usize) -> &str {
        &self.simple_names[i]
    }

    /// ASCII name of a simple root, as accepted on the command line.
    pub fn simple_ascii(&self, i: usize) -> &str {
        &self.simple_ascii[i]
    }

    /// Index of a simple root given by its unicode or ASCII name.
    pub fn simple_by_name(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        (0..self.rank()).find(|&i| self.simple_names[i] == name || self.simple_ascii[i] == name)
    }

    fn format_with(&self, coords: &[i32], names: &[String]) -> String {
        let mut out = String::new();
        let negative = coords.iter().any(|&c| c < 0);
        let body: Vec<String> = self
            .display_order
            .iter()
            .filter(|&&i| coords[i] != 0)
            .map(|&i| {
                let c = coords[i].abs();
                if c == 1 {
                    names[i].clone()
                } else {
                    format!("{c}{}", names[i])
                }
            })
            .collect();
        if negative {
            out.push('-');
            if body.len() > 1 {
                out.push('(');
            }
        }
        out.push_str(&body.join("+"));
        if negative && body.len() > 1 {
            out.push(')');
        }
        out
    }

    /// Unicode display name of a root, e.g. `β+2α` or `α1+α2`.
    pub fn root_name(&self, id: RootId) -> String {
        self.format_with(self.coords(id), &self.simple_names)
    }

    /// ASCII name of a root, e.g. `beta+2alpha`.
    pub fn root_ascii(&self, id: RootId) -> String {
        self.format_with(self.coords(id), &self.simple_ascii)
    }

    /// Parses a root from `+`-separated terms like `2beta+3alpha`, `a1+2a3`
    /// or their unicode forms; a leading `-` negates.
    pub fn parse_root(&self, text: &str) -> Result<RootId> {
        let text = text.trim();
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1, rest.trim_start_matches('(').trim_end_matches(')')),
            None => (1, text),
        };
        let mut coords = vec![0i32; self.rank()];
        for term in body.split('+') {
            let term = term.trim();
            let split = term
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit())
                .map_or(term.len(), |(i, _)| i);
            let (num, name) = term.split_at(split);
            let k: i32 = if num.is_empty() {
                1
            } else {
                num.parse()
                    .map_err(|_| LieError::NotARoot(vec![], text.to_string()))?
            };
            let i = self
                .simple_by_name(name)
                .ok_or_else(|| LieError::NotARoot(vec![], text.to_string()))?;
            coords[i] += sign * k;
        }
        self.require(&coords)
    }

    /// Additive closure of `generators` and the detected type of the
    /// diagram they span.
    pub fn closed_subsystem(&self, generators: &[RootId]) -> Result<Subsystem> {
        let mut set: BTreeSet<RootId> = generators
            .iter()
            .flat_map(|&g| [g, self.neg(g)])
            .collect();
        loop {
            let current: Vec<RootId> = set.iter().copied().collect();
            let mut grew = false;
            for &a in &current {
                for &b in &current {
                    if let Some(s) = self.add(a, b) {
                        grew |= set.insert(s);
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut refl: BTreeSet<RootId> = generators
            .iter()
            .flat_map(|&g| [g, self.neg(g)])
            .collect();
        loop {
            let current: Vec<RootId> = refl.iter().copied().collect();
            let mut grew = false;
            for &g in generators {
                for &x in &current {
                    grew |= refl.insert(self.reflect(g, x));
                }
            }
            if !grew {
                break;
            }
        }
        let k = generators.len();
        let cartan: Vec<Vec<i32>> = (0..k)
            .map(|i| (0..k).map(|j| self.pairing(generators[j], generators[i])).collect())
            .collect();
        let is_simple_system = generators.iter().enumerate().all(|(a, &x)| {
            generators[a + 1..]
                .iter()
                .all(|&y| self.sub(x, y).is_none())
        });
        let type_label = if is_simple_system {
            dynkin_label(&cartan)?
        } else {
            String::from("?")
        };
        Ok(Subsystem {
            generators: generators.to_vec(),
            roots: set.into_iter().collect(),
            reflection_closure: refl.into_iter().collect(),
            cartan,
            type_label,
            is_simple_system,
        })
    }

    /// Serializable summary of the root system.
    pub fn report(&self) -> RootSystemReport {
        RootSystemReport {
            type_label: self.label.clone(),
            rank: self.rank(),
            cartan: self.cartan.clone(),
            simple_roots: self.simple_ascii.clone(),
            positive_roots: self.positive_ids().map(|i| self.coords(i).to_vec()).collect(),
            names: self.positive_ids().map(|i| self.root_ascii(i)).collect(),
            heights: self.positive_ids().map(|i| self.height(i)).collect(),
            lengths: self.positive_ids().map(|i| self.length_class(i)).collect(),
            bourbaki_labels: self.bourbaki_of.clone(),
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

fn generate_positive_roots(cartan: &[Vec<i32>]) -> Result<Vec<Vec<i32>>> {
    const MAX_ROOTS: usize = 10_000;
    let l = cartan.len();
    let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut layer: Vec<Vec<i32>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone(), ());
        }
        let mut next: BTreeSet<Vec<i32>> = BTreeSet::new();
        for r in &layer {
            for i in 0..l {
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i32 = r.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                if p - pair > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        let mut sorted = layer;
        sorted.sort_by(|a, b| b.cmp(a));
        all.extend(sorted);
        if all.len() > MAX_ROOTS {
            return Err(LieError::NotFiniteType("root generation does not terminate".into()));
        }
        layer = next.into_iter().collect();
    }
    Ok(all)
}

/// An additively closed subsystem together with its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsystem {
    /// The generating roots, in the order given.
    pub generators: Vec<RootId>,
    /// Additive closure of the generators and their negatives.
    pub roots: Vec<RootId>,
    /// Closure of the generators under their own reflections.
    pub reflection_closure: Vec<RootId>,
    /// Cartan matrix of the generators, same convention as the ambient one.
    pub cartan: Vec<Vec<i32>>,
    /// Detected Dynkin type, `?` when the generators are not a simple system.
    pub type_label: String,
    /// Whether no difference of two generators is a root.
    pub is_simple_system: bool,
}

/// JSON form of a root system.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RootSystemReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    pub simple_roots: Vec<String>,
    pub positive_roots: Vec<Vec<i32>>,
    pub names: Vec<String>,
    pub heights: Vec<i32>,
    pub lengths: Vec<RootLength>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bourbaki_labels: Option<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_roots_in_canonical_order() {
        let rs = RootSystem::from_label("G2").unwrap();
        let names: Vec<String> = rs.positive_ids().map(|i| rs.root_name(i)).collect();
        assert_eq!(names, ["α", "β", "β+α", "β+2α", "β+3α", "2β+3α"]);
        assert_eq!(rs.length_class(0), RootLength::Short);
        assert_eq!(rs.length_class(1), RootLength::Long);
    }

    #[test]
    fn detects_types() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4", "E6B", "E7"] {
            let rs = RootSystem::from_label(label).unwrap();
            let expected = label.trim_end_matches('B');
            assert_eq!(dynkin_label(rs.cartan()).unwrap(), expected);
        }
    }

    #[test]
    fn rejects_affine_matrix() {
        let a = vec![vec![2, -2], vec![-2, 2]];
        assert!(matches!(
            RootSystem::from_cartan(a, "A1~"),
            Err(LieError::NotFiniteType(_))
        ));
    }
}
