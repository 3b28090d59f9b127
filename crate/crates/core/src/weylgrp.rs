//! Weyl groups as permutations of the root set.
//!
//! An element is stored as the image of every root id. Composition is
//! composition of maps: `(u * w)(γ) = u(w(γ))`. Reduced words list
//! simple reflection indices from left to right, so the word `[i, j]`
//! denotes `s_i s_j`. The canonical word of an element is the
//! lexicographically least reduced word, found by repeatedly peeling off
//! the smallest left descent.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{LieError, Result};
use crate::rootcore::{RootId, RootSystem};

/// Largest group enumerated element by element.
pub const ENUMERATION_LIMIT: usize = 400_000;

/// An element of the Weyl group, as a permutation of root ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<u16>,
}

impl WeylElement {
    /// The identity of the Weyl group of `rs`.
    pub fn identity(rs: &RootSystem) -> Self {
        Self {
            perm: (0..rs.num_roots() as u16).collect(),
        }
    }

    /// The simple reflection `s_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        Self {
            perm: rs.simple_reflection_table(i).to_vec(),
        }
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word {
            if i >= rs.rank() {
                return Err(LieError::BadSimpleIndex(i, rs.rank()));
            }
            w = w.mul(&Self::simple_reflection(rs, i));
        }
        Ok(w)
    }

    fn npos(&self) -> usize {
        self.perm.len() / 2
    }

    /// Image of a root.
    pub fn apply(&self, gamma: RootId) -> RootId {
        self.perm[gamma] as RootId
    }

    /// Composition `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            perm: other.perm.iter().map(|&g| self.perm[g as usize]).collect(),
        }
    }

    /// Inverse element.
    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u16; self.perm.len()];
        for (i, &g) in self.perm.iter().enumerate() {
            perm[g as usize] = i as u16;
        }
        Self { perm }
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &g)| i == g as usize)
    }

    /// Length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.npos();
        self.perm[..n].iter().filter(|&&g| g as usize >= n).count()
    }

    /// True when `ℓ(s_i w) < ℓ(w)`, i.e. `w^{-1}(α_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let n = self.npos();
        self.perm.iter().position(|&g| g as usize == i).unwrap() >= n
    }

    /// True when `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.perm[i] as usize >= self.npos()
    }

    /// Left multiplication by `s_i`.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let table = rs.simple_reflection_table(i);
        Self {
            perm: self.perm.iter().map(|&g| table[g as usize]).collect(),
        }
    }

    /// Right multiplication by `s_i`.
    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        self.mul(&Self::simple_reflection(rs, i))
    }

    /// Lexicographically least reduced word.
    pub fn canonical_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (0..rs.rank()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(rs, i);
        }
        word
    }

    /// Inversion set `Φ_w = {γ > 0 : w^{-1}(γ) < 0}` in canonical order.
    pub fn inversion_set(&self) -> Vec<RootId> {
        let inv = self.inverse();
        let n = self.npos();
        (0..n).filter(|&g| inv.apply(g) >= n).collect()
    }

    /// The raw permutation of root ids.
    pub fn permutation(&self) -> &[u16] {
        &self.perm
    }

    /// True when `w` lies in the parabolic subgroup generated by `levi`,
    /// i.e. every inversion is a combination of the simple roots in `levi`.
    pub fn in_parabolic(&self, rs: &RootSystem, levi: &[usize]) -> bool {
        self.inversion_set().into_iter().all(|g| {
            rs.coords(g)
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || levi.contains(&i))
        })
    }

    /// True when `w` is a minimal length representative of `W_L w`,
    /// i.e. `w^{-1}(α_j) > 0` for every `j` in `levi`.
    pub fn is_min_coset_rep(&self, levi: &[usize]) -> bool {
        levi.iter().all(|&j| !self.has_left_descent(j))
    }

    /// Reflection `s_γ` in an arbitrary root.
    pub fn reflection(rs: &RootSystem, gamma: RootId) -> Self {
        Self {
            perm: rs.root_ids().map(|x| rs.reflect(gamma, x) as u16).collect(),
        }
    }
}

/// Decomposition `w = y v` with `y ∈ W_L` and `v ∈ W^L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub y: WeylElement,
    pub v: WeylElement,
}

/// Splits `w = y v` with `y ∈ W_L`, `v ∈ W^L` and `ℓ(w) = ℓ(y) + ℓ(v)`.
///
/// Also checks that `Φ_w` is the disjoint union of `y(Φ_v)` and `Φ_y`.
pub fn parabolic_decompose(rs: &RootSystem, w: &WeylElement, levi: &[usize]) -> CosetDecomposition {
    let mut v = w.clone();
    let mut y = WeylElement::identity(rs);
    while let Some(&j) = levi.iter().find(|&&j| v.has_left_descent(j)) {
        v = v.left_mul_simple(rs, j);
        y = y.right_mul_simple(rs, j);
    }
    debug_assert_eq!(y.mul(&v), *w);
    debug_assert_eq!(y.length() + v.length(), w.length());
    debug_assert!({
        let mut union: Vec<RootId> = v.inversion_set().into_iter().map(|g| y.apply(g)).collect();
        union.extend(y.inversion_set());
        union.sort_unstable();
        let before = union.len();
        union.dedup();
        before == union.len() && union == w.inversion_set()
    });
    CosetDecomposition { y, v }
}

/// A finite set of Weyl group elements in canonical order with words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    words: Vec<Vec<usize>>,
    lookup: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    /// The full Weyl group of `rs`.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let all: Vec<usize> = (0..rs.rank()).collect();
        Self::generated_by(rs, &all)
    }

    /// The parabolic subgroup `W_J` generated by the simple reflections in `levi`.
    pub fn generated_by(rs: &RootSystem, levi: &[usize]) -> Result<Self> {
        for &j in levi {
            if j >= rs.rank() {
                return Err(LieError::BadSimpleIndex(j, rs.rank()));
            }
        }
        let id = WeylElement::identity(rs);
        let mut seen: HashMap<WeylElement, usize> = HashMap::from([(id.clone(), 0)]);
        let mut queue = VecDeque::from([id.clone()]);
        let mut found = vec![id];
        while let Some(w) = queue.pop_front() {
            for &j in levi {
                let x = w.left_mul_simple(rs, j);
                if !seen.contains_key(&x) {
                    if found.len() >= ENUMERATION_LIMIT {
                        return Err(LieError::WeylTooLarge {
                            label: rs.label().to_string(),
                            order: weyl_order(rs),
                            limit: ENUMERATION_LIMIT,
                        });
                    }
                    seen.insert(x.clone(), 0);
                    found.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        // Breadth-first order is by length, so the canonical word of `s_i w`
        // is known when `w` is reached; prepend the smallest left descent.
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(found.len());
        for w in &found {
            let word = match levi.iter().copied().filter(|&i| w.has_left_descent(i)).min() {
                None => Vec::new(),
                Some(i) => {
                    let shorter = &words[seen[&w.left_mul_simple(rs, i)]];
                    let mut word = Vec::with_capacity(shorter.len() + 1);
                    word.push(i);
                    word.extend_from_slice(shorter);
                    word
                }
            };
            seen.insert(w.clone(), words.len());
            words.push(word);
        }
        Ok(Self::from_pairs(words.into_iter().zip(found).collect()))
    }

    fn from_pairs(mut pairs: Vec<(Vec<usize>, WeylElement)>) -> Self {
        pairs.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        let lookup = pairs
            .iter()
            .enumerate()
            .map(|(i, (_, w))| (w.clone(), i))
            .collect();
        let (words, elements) = pairs.into_iter().unzip();
        Self {
            elements,
            words,
            lookup,
        }
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical order: by length, then canonical word.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Element by position.
    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    /// Canonical word of the element at position `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Position of an element, if it belongs to this set.
    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.lookup.get(w).copied()
    }

    /// The longest element.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().unwrap()
    }

    /// Minimal length representatives `W^L` of the cosets `W_L \ W`.
    pub fn min_coset_reps(&self, levi: &[usize]) -> Vec<WeylElement> {
        self.elements
            .iter()
            .filter(|w| w.is_min_coset_rep(levi))
            .cloned()
            .collect()
    }

    /// The parabolic subgroup and its minimal coset representatives.
    pub fn parabolic(&self, rs: &RootSystem, levi: &[usize]) -> Result<ParabolicDecomposition> {
        let wl = WeylGroup::generated_by(rs, levi)?;
        Ok(ParabolicDecomposition {
            levi_subset: levi.to_vec(),
            wl_elements: wl.elements,
            min_reps: self.min_coset_reps(levi),
        })
    }
}

/// A parabolic subgroup `W_L` with the representatives `W^L`.
#[derive(Clone, Debug)]
pub struct ParabolicDecomposition {
    pub levi_subset: Vec<usize>,
    pub wl_elements: Vec<WeylElement>,
    pub min_reps: Vec<WeylElement>,
}

/// Order of the Weyl group, from the degrees of its basic invariants
/// computed as one more than each exponent from the root heights.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    let max_h = rs.positive_ids().map(|g| rs.height(g)).max().unwrap_or(0);
    let mut per_height = vec![0i64; max_h as usize + 2];
    for g in rs.positive_ids() {
        per_height[rs.height(g) as usize] += 1;
    }
    // The exponent multiset is the partition conjugate to the height counts.
    let mut order: u128 = 1;
    let mut k = 1usize;
    loop {
        let count_at = |h: usize| per_height.get(h).copied().unwrap_or(0);
        let exps_equal_k = count_at(k) - count_at(k + 1);
        if k > max_h as usize {
            break;
        }
        for _ in 0..exps_equal_k {
            order *= (k + 1) as u128;
        }
        k += 1;
    }
    order
}

/// Bruhat order `u ≤ w`, decided by the lifting property.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    let (lu, lw) = (u.length(), w.length());
    if lu > lw {
        return false;
    }
    if lw == 0 {
        return u.is_identity();
    }
    let s = (0..rs.rank()).find(|&i| w.has_left_descent(i)).unwrap();
    let sw = w.left_mul_simple(rs, s);
    if u.has_left_descent(s) {
        bruhat_leq(rs, &u.left_mul_simple(rs, s), &sw)
    } else {
        bruhat_leq(rs, u, &sw)
    }
}

/// Parses a Levi subset given as comma separated simple root names or
/// one-based indices; the empty string gives the empty subset.
pub fn parse_levi(rs: &RootSystem, text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i = match rs.simple_by_name(part) {
            Some(i) => i,
            None => match part.parse::<usize>() {
                Ok(k) if (1..=rs.rank()).contains(&k) => k - 1,
                _ => return Err(LieError::BadLevi(text.to_string())),
            },
        };
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Readable word such as `s1 s3 s2`, or `s t s` for G2, or `e`.
pub fn word_name(rs: &RootSystem, word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    if rs.label() == "G2" {
        word.iter().map(|&i| if i == 0 { 's' } else { 't' }).collect()
    } else {
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Dihedral names for the Weyl group of G2.
///
/// `s` and `t` are the reflections in `α` and `β`, and `r = st` is a
/// rotation of order six. Every element is `r^k` or `s r^k` for a unique
/// `k` in `0..6`.
pub mod g2 {
    use super::*;

    /// Fails unless the root system has type G2.
    pub fn require_g2(rs: &RootSystem) -> Result<()> {
        if rs.label() == "G2" {
            Ok(())
        } else {
            Err(LieError::RequiresG2(rs.label().to_string()))
        }
    }

    /// The rotation `r = st`.
    pub fn rotation(rs: &RootSystem) -> WeylElement {
        WeylElement::from_word(rs, &[0, 1]).expect("G2 has two simple roots")
    }

    fn power(rs: &RootSystem, k: i64) -> WeylElement {
        let r = rotation(rs);
        let k = k.rem_euclid(6);
        (0..k).fold(WeylElement::identity(rs), |acc, _| acc.mul(&r))
    }

    /// Name `r^k` or `s r^k` with `k` in `0..6`, using superscripts.
    pub fn dihedral_alias(rs: &RootSystem, w: &WeylElement) -> Result<String> {
        require_g2(rs)?;
        let s = WeylElement::simple_reflection(rs, 0);
        for k in 0..6 {
            let rk = power(rs, k);
            let base = match k {
                0 => String::new(),
                1 => "r".into(),
                _ => format!("r{}", superscript(k)),
            };
            if rk == *w {
                return Ok(if k == 0 { "e".into() } else { base });
            }
            if s.mul(&rk) == *w {
                return Ok(format!("s{base}"));
            }
        }
        unreachable!("every element of the dihedral group has a normal form")
    }

    /// Superscript rendering of an integer exponent.
    pub fn superscript(k: i64) -> String {
        const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        let mut out = String::new();
        if k < 0 {
            out.push('⁻');
        }
        for c in k.abs().to_string().chars() {
            out.push(DIGITS[c.to_digit(10).unwrap() as usize]);
        }
        out
    }

    /// Parses products of `s`, `t`, `r` and `e` with optional integer
    /// exponents written `^k`, `^-k` or as superscripts, e.g. `tr⁻³`,
    /// `sr^2` or `tst`.
    pub fn parse_word(rs: &RootSystem, text: &str) -> Result<WeylElement> {
        require_g2(rs)?;
        let bad = || LieError::BadWord(text.to_string());
        let normalized: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
            .map(|c| match superscript_value(c) {
                Some(d) => char::from_digit(d, 10).unwrap(),
                None if c == '⁻' => '-',
                None => c,
            })
            .collect();
        let chars: Vec<char> = normalized.chars().collect();
        let mut w = WeylElement::identity(rs);
        let mut i = 0;
        if chars.is_empty() {
            return Err(bad());
        }
        while i < chars.len() {
            let factor = match chars[i] {
                'e' => WeylElement::identity(rs),
                's' => WeylElement::simple_reflection(rs, 0),
                't' => WeylElement::simple_reflection(rs, 1),
                'r' => rotation(rs),
                _ => return Err(bad()),
            };
            i += 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
            }
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let exp: i64 = if i == start {
                1
            } else {
                chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad())?
            };
            let base = if exp < 0 { factor.inverse() } else { factor };
            for _ in 0..exp.unsigned_abs() {
                w = w.mul(&base);
            }
        }
        Ok(w)
    }

    fn superscript_value(c: char) -> Option<u32> {
        const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        DIGITS.iter().position(|&d| d == c).map(|d| d as u32)
    }
}

/// JSON row describing one Weyl group element.
#[derive(Clone, Debug, Serialize)]
pub struct WeylElementReport {
    pub index: usize,
    /// Canonical reduced word as zero-based simple root indices.
    pub word: Vec<usize>,
    pub name: String,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
}

impl WeylGroup {
    /// Serializable listing of the elements.
    pub fn report(&self, rs: &RootSystem) -> Vec<WeylElementReport> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, w)| WeylElementReport {
                index: i,
                word: self.words[i].clone(),
                name: word_name(rs, &self.words[i]),
                length: self.words[i].len(),
                alias: g2::dihedral_alias(rs, w).ok(),
            })
            .collect()
    }
}
