//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every polynomial carries a shared [`VarTable`]; exponent vectors are
//! indexed by table position. Terms are kept in a `BTreeMap` keyed by
//! [`Monomial`], whose ordering is graded lexicographic, so iteration order is
//! canonical and rendering is deterministic.

mod parse;
mod render;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{usage, Error, Result};

pub use parse::parse_poly;
pub use render::TermJson;

pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient as an exact rational (zero when `k > n`).
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

pub fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VarKind {
    /// Base-point coordinates: `t, x` on the Minkowski plane, `x, y` for forms.
    Geometric,
    /// Coordinates on the parameter space of a tensor or form space.
    Parameter,
    /// Local coordinates on the acting group.
    Group,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

/// Ordered set of uniquely named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    vars: Vec<Variable>,
}

impl VarTable {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, VarKind)>) -> Result<Arc<Self>> {
        let vars: Vec<Variable> = vars
            .into_iter()
            .map(|(name, kind)| Variable { name: name.into(), kind })
            .collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(&v.name) {
                return usage(format!("invalid variable name {:?}", v.name));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return usage(format!("duplicate variable name {:?}", v.name));
            }
        }
        Ok(Arc::new(VarTable { vars }))
    }

    /// A copy of this table with `extra` appended.
    pub fn extended<S: Into<String>>(
        &self,
        extra: impl IntoIterator<Item = (S, VarKind)>,
    ) -> Result<Arc<Self>> {
        let mut all: Vec<(String, VarKind)> =
            self.vars.iter().map(|v| (v.name.clone(), v.kind)).collect();
        all.extend(extra.into_iter().map(|(n, k)| (n.into(), k)));
        VarTable::new(all)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.vars[i].kind
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::Usage(format!("unknown variable {name:?}")))
    }

    pub fn indices_of_kind(&self, kind: VarKind) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.vars[i].kind == kind).collect()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector indexed by [`VarTable`] position.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    /// `self / var_i`, or `None` if `var_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps, deg: self.deg - 1 })
    }

    /// Splits into the part supported on `vars` and the remainder.
    pub fn split(&self, vars: &[usize]) -> (Monomial, Monomial) {
        let mut inside = vec![0; self.exps.len()];
        let mut outside = self.exps.clone();
        for &i in vars {
            inside[i] = self.exps[i];
            outside[i] = 0;
        }
        (Monomial::new(inside), Monomial::new(outside))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `deg` in the variables `vars` (positions in
/// a table of `nvars` variables), in ascending graded-lex order.
pub fn monomials_of_degree(nvars: usize, vars: &[usize], deg: u32) -> Vec<Monomial> {
    fn rec(vars: &[usize], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial::new(cur.clone()));
                }
            }
            Some((&v, rest)) => {
                if rest.is_empty() {
                    cur[v] = left;
                    rec(rest, 0, cur, out);
                    cur[v] = 0;
                    return;
                }
                for e in 0..=left {
                    cur[v] = e;
                    rec(rest, left - e, cur, out);
                }
                cur[v] = 0;
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; nvars];
    rec(vars, deg, &mut cur, &mut out);
    out.sort();
    out
}

/// Sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn monomial(vars: &Arc<VarTable>, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.exps.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    /// The polynomial consisting of the single variable at position `i`.
    pub fn var_at(vars: &Arc<VarTable>, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        Ok(Self::var_at(vars, vars.require(name)?))
    }

    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(vars: &Arc<VarTable>, text: &str) -> Result<Self> {
        parse_poly(vars, text)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Maximal exponent of variable `i` (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    /// Maximal combined degree in the variables `vars`.
    pub fn degree_in_vars(&self, vars: &[usize]) -> u32 {
        self.terms.keys().map(|m| m.degree_in(vars)).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Poly) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            usage("polynomials are over different variable tables")
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_table(other)?;
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at position `i`.
    pub fn diff(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            if let Some(q) = m.div_var(i) {
                out.add_term(q, c * int(m.exp(i) as i64));
            }
        }
        out
    }

    pub fn diff_by_name(&self, name: &str) -> Result<Poly> {
        Ok(self.diff(self.vars.require(name)?))
    }

    /// Simultaneous substitution `var_i -> bindings[i]`; unbound variables
    /// pass through unchanged.
    pub fn subst(&self, bindings: &BTreeMap<usize, Poly>) -> Result<Poly> {
        for (&i, b) in bindings {
            if i >= self.vars.len() {
                return usage(format!("substitution for unknown variable position {i}"));
            }
            self.check_table(b)?;
        }
        let mut powers: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut kept = m.exps.clone();
            let mut term = Poly::one(&self.vars);
            for (&i, b) in bindings {
                let e = m.exps[i];
                if e == 0 {
                    continue;
                }
                kept[i] = 0;
                let pw = powers.entry((i, e)).or_insert_with(|| b.pow(e));
                term = &term * &*pw;
            }
            let head = Poly::monomial(&self.vars, Monomial::new(kept), c.clone());
            out = &out + &(&head * &term);
        }
        Ok(out)
    }

    pub fn subst_by_name(&self, bindings: &[(&str, Poly)]) -> Result<Poly> {
        let mut map = BTreeMap::new();
        for (name, p) in bindings {
            map.insert(self.vars.require(name)?, p.clone());
        }
        self.subst(&map)
    }

    /// Substitutes rational values for the variables in `values`.
    pub fn eval_partial(&self, values: &BTreeMap<usize, Rational>) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            let mut coeff = c.clone();
            for (&i, v) in values {
                let e = exps[i];
                if e > 0 {
                    coeff *= num_traits::pow(v.clone(), e as usize);
                    exps[i] = 0;
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Evaluates at a full point (one value per table variable).
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return usage(format!(
                "evaluation point has {} coordinates, table has {} variables",
                point.len(),
                self.vars.len()
            ));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Groups terms by their monomial in `vars`; each value is the coefficient
    /// polynomial in the remaining variables. Summing `key * value` over the
    /// map reproduces `self`.
    pub fn coeff_poly_in(&self, vars: &[usize]) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside)
                .or_insert_with(|| Poly::zero(&self.vars))
                .add_term(outside, c.clone());
        }
        out
    }

    /// Re-expresses the polynomial over another table, matching variables by
    /// name.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Poly> {
        if same_table(&self.vars, target) {
            return Ok(Poly { vars: target.clone(), terms: self.terms.clone() });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for v in self.vars.vars() {
            map.push(target.index_of(&v.name));
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return usage(format!(
                            "variable {:?} is not in the target table",
                            self.vars.name(i)
                        ))
                    }
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// True when every term has total degree `deg` in `vars` (the zero
    /// polynomial qualifies).
    pub fn is_homogeneous_in(&self, vars: &[usize], deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree_in(vars) == deg && m.degree() == deg)
    }

    /// Least common multiple of denominators times the polynomial, made
    /// primitive with a positive leading coefficient. Useful for display.
    pub fn primitive(&self) -> Poly {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
        }
        let mut s = Rational::new(den, num_gcd);
        if lead.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        render::to_json_terms(self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::write_poly(self, f)
    }
}

// Operator forms panic on table mismatch; the `checked_*` methods report it.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("Poly + Poly")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("Poly - Poly")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("Poly * Poly")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(mut iter: I) -> Poly {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}
