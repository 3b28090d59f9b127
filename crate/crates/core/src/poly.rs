//! Sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients.
//! The number of variables is fixed per polynomial and all operands of an
//! arithmetic operation must agree on it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::linalg::{q, Q};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// A polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// A constant.
    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The constant one.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    /// The variable `z_i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self {
            nvars,
            terms: BTreeMap::from([(e, Q::one())]),
        }
    }

    /// A single term `c * z^e`.
    pub fn monomial(exponents: Monomial, c: Q) -> Self {
        let mut p = Self::zero(exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial has no variable (zero included).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Q {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    /// Monomials with nonzero coefficient.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Degree in variable `i` (zero for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Total degree (zero for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// True when variable `i` occurs.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// Variables that occur, in increasing order.
    pub fn vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.uses_var(i)).collect()
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    /// Power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Coefficient of `z_i^k`, as a polynomial not involving `z_i`.
    pub fn coeff_in(&self, i: usize, k: u32) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut e2 = e.clone();
                e2[i] = 0;
                p.terms.insert(e2, c.clone());
            }
        }
        p
    }

    /// Substitutes `z_i = num / den` and clears the denominator, returning
    /// `den^d * p(z_i = num/den)` where `d` is the degree of `p` in `z_i`.
    pub fn substitute_fraction(&self, i: usize, num: &Self, den: &Self) -> Self {
        let d = self.degree_in(i);
        let mut out = Self::zero(self.nvars);
        for k in 0..=d {
            let c = self.coeff_in(i, k);
            if c.is_zero() {
                continue;
            }
            out = &out + &(&(&c * &num.pow(k)) * &den.pow(d - k));
        }
        out
    }

    /// Substitutes `z_i = value`.
    pub fn substitute(&self, i: usize, value: &Self) -> Self {
        self.substitute_fraction(i, value, &Self::one(self.nvars))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Partial derivative in `z_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                p.terms.insert(e2, c * q(e[i] as i64));
            }
        }
        p
    }

    /// Coefficients in `z_i`, lowest first, when no other variable occurs.
    pub fn to_univariate(&self, i: usize) -> Option<Vec<Q>> {
        let mut out = vec![Q::zero(); self.degree_in(i) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x > 0) {
                return None;
            }
            out[e[i] as usize] = c.clone();
        }
        Some(out)
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        names[j].clone()
                    } else {
                        format!("{}^{}", names[j], k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    fn add_term(&mut self, e: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Default variable names `z1, z2, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("z{i}")).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Dense univariate polynomials, coefficients lowest degree first.
pub mod univariate {
    use super::*;

    /// Drops trailing zero coefficients.
    pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    /// Degree, `None` for zero.
    pub fn degree(p: &[Q]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    /// Derivative.
    pub fn derivative(p: &[Q]) -> Vec<Q> {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    /// Quotient and remainder of `a / b` with `b` nonzero.
    pub fn divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let b = trim(b.to_vec());
        let db = degree(&b).expect("division by zero polynomial");
        let mut r = trim(a.to_vec());
        let mut quo = vec![Q::zero(); r.len().saturating_sub(db).max(1)];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let f = &r[dr] / &b[db];
            quo[dr - db] = f.clone();
            for (k, c) in b.iter().enumerate() {
                r[dr - db + k] -= &f * c;
            }
            r = trim(r);
        }
        (trim(quo), r)
    }

    /// Monic greatest common divisor; zero when both inputs are zero.
    pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while degree(&y).is_some() {
            let (_, r) = divmod(&x, &y);
            x = y;
            y = r;
        }
        match degree(&x) {
            None => Vec::new(),
            Some(d) => {
                let lead = x[d].clone();
                x.iter().map(|c| c / &lead).collect()
            }
        }
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(p: &[Q]) -> Vec<Q> {
        let p = trim(p.to_vec());
        if degree(&p).unwrap_or(0) == 0 {
            return p;
        }
        let g = gcd(&p, &derivative(&p));
        let (quo, _) = divmod(&p, &g);
        let d = degree(&quo).unwrap();
        let lead = quo[d].clone();
        quo.iter().map(|c| c / &lead).collect()
    }

    /// Number of distinct complex roots of a nonzero polynomial.
    pub fn distinct_roots(p: &[Q]) -> usize {
        degree(&squarefree(p)).unwrap_or(0)
    }
}
