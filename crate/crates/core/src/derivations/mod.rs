//! First-order differential operators on polynomial rings, and the three
//! ways this crate produces them: the Lie-derivative projection
//! ([`mst`]), the closed-form layer patterns ([`closed_form`]) and the
//! classical generators for binary forms ([`cayley`]).

pub mod cayley;
pub mod closed_form;
pub mod mst;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{usage, Result};
use crate::ratpoly::{same_table, Poly, Rational, TermJson, VarTable};

/// `Σ c_v ∂_v` over a variable table.
#[derive(Clone, Debug)]
pub struct Derivation {
    table: Arc<VarTable>,
    coeffs: BTreeMap<usize, Poly>,
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for Derivation {}

impl Derivation {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        Derivation { table: table.clone(), coeffs: BTreeMap::new() }
    }

    /// `∂_v` for the variable at position `i`.
    pub fn partial(table: &Arc<VarTable>, i: usize) -> Self {
        let mut d = Self::zero(table);
        d.set(i, Poly::one(table)).expect("same table");
        d
    }

    pub fn from_terms(table: &Arc<VarTable>, terms: impl IntoIterator<Item = (usize, Poly)>) -> Result<Self> {
        let mut d = Self::zero(table);
        for (i, c) in terms {
            let c = c.checked_add(&d.coeff(i))?;
            d.set(i, c)?;
        }
        Ok(d)
    }

    /// Builds from `(variable name, coefficient text)` pairs; repeated
    /// variables accumulate.
    pub fn parse_terms(table: &Arc<VarTable>, terms: &[(&str, &str)]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|(v, c)| Ok((table.require(v)?, Poly::parse(table, c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(table, parsed)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn set(&mut self, i: usize, c: Poly) -> Result<()> {
        if !same_table(c.table(), &self.table) {
            return usage("derivation coefficient over a different table");
        }
        if i >= self.table.len() {
            return usage(format!("variable position {i} out of range"));
        }
        if c.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, c);
        }
        Ok(())
    }

    /// Coefficient of `∂_v` for the variable at position `i`.
    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(&i).cloned().unwrap_or_else(|| Poly::zero(&self.table))
    }

    pub fn coeff_by_name(&self, name: &str) -> Result<Poly> {
        Ok(self.coeff(self.table.require(name)?))
    }

    /// Nonzero coefficients keyed by variable position.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if !same_table(f.table(), &self.table) {
            return usage("polynomial and derivation are over different tables");
        }
        let mut out = Poly::zero(&self.table);
        for (&i, c) in &self.coeffs {
            let d = f.diff(i);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        if !same_table(&self.table, &other.table) {
            return usage("derivations over different tables");
        }
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            let sum = &out.coeff(i) + c;
            out.set(i, sum)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Derivation) -> Result<Derivation> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        let mut out = Derivation::zero(&self.table);
        for (&i, p) in &self.coeffs {
            out.set(i, p.scale(c)).expect("same table");
        }
        out
    }

    pub fn neg(&self) -> Derivation {
        self.scale(&-Rational::from_integer(1.into()))
    }

    /// Re-expresses the derivation over a table containing all of its
    /// variables.
    pub fn embed(&self, table: &Arc<VarTable>) -> Result<Derivation> {
        let mut out = Derivation::zero(table);
        for (&i, c) in &self.coeffs {
            out.set(table.require(self.table.name(i))?, c.embed(table)?)?;
        }
        Ok(out)
    }

    /// True when every coefficient is a linear form (homogeneous of degree
    /// 1), so the derivation preserves total degree.
    pub fn is_degree_preserving(&self) -> bool {
        self.coeffs.values().all(|c| c.terms().all(|(m, _)| m.degree() == 1))
    }

    pub fn to_json(&self) -> Vec<DerivationTermJson> {
        self.coeffs
            .iter()
            .map(|(&i, c)| DerivationTermJson {
                var: self.table.name(i).to_string(),
                coeff: c.to_string(),
                terms: c.to_json_terms(),
            })
            .collect()
    }
}

/// One `coefficient * ∂_var` term in JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct DerivationTermJson {
    pub var: String,
    pub coeff: String,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for Derivation {
    /// `(c1)*D[v1] + (c2)*D[v2] + ...` in table order; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, c)| format!("({c})*D[{}]", self.table.name(i)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `[d1, d2]`: the coefficient of `∂_v` is `d1(c2_v) - d2(c1_v)`.
pub fn commutator(d1: &Derivation, d2: &Derivation) -> Result<Derivation> {
    if !same_table(&d1.table, &d2.table) {
        return usage("derivations over different tables");
    }
    let mut out = Derivation::zero(&d1.table);
    let vars: std::collections::BTreeSet<usize> = d1.coeffs.keys().chain(d2.coeffs.keys()).copied().collect();
    for v in vars {
        let c = d1.apply(&d2.coeff(v))?.checked_sub(&d2.apply(&d1.coeff(v))?)?;
        out.set(v, c)?;
    }
    Ok(out)
}

/// One line of a commutator table: `[g_i, g_j]` against its expected value.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorCheck {
    pub relation: String,
    pub holds: bool,
}

/// Checks `{-V1, -V2, -V3}` against `[T,X] = 0, [T,H] = X, [X,H] = T`.
pub fn check_isometry_relations(v: &[Derivation; 3]) -> Result<Vec<CommutatorCheck>> {
    let m: Vec<Derivation> = v.iter().map(Derivation::neg).collect();
    let zero = Derivation::zero(v[0].table());
    Ok(vec![
        CommutatorCheck { relation: "[-V1,-V2] = 0".into(), holds: commutator(&m[0], &m[1])? == zero },
        CommutatorCheck { relation: "[-V1,-V3] = -V2".into(), holds: commutator(&m[0], &m[2])? == m[1] },
        CommutatorCheck { relation: "[-V2,-V3] = -V1".into(), holds: commutator(&m[1], &m[2])? == m[0] },
    ])
}

/// Checks `[V-,V0] = -2V-`, `[V+,V0] = 2V+`, `[V-,V+] = V0`.
pub fn check_sl2_relations(v: &[Derivation; 3]) -> Result<Vec<CommutatorCheck>> {
    let [vm, v0, vp] = v;
    let two = Rational::from_integer(2.into());
    Ok(vec![
        CommutatorCheck { relation: "[V-,V0] = -2V-".into(), holds: commutator(vm, v0)? == vm.scale(&-two.clone()) },
        CommutatorCheck { relation: "[V+,V0] = 2V+".into(), holds: commutator(vp, v0)? == vp.scale(&two) },
        CommutatorCheck { relation: "[V-,V+] = V0".into(), holds: commutator(vm, vp)? == *v0 },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::VarKind;

    fn table() -> Arc<VarTable> {
        VarTable::new([("u", VarKind::Parameter), ("v", VarKind::Parameter)]).unwrap()
    }

    #[test]
    fn apply_and_leibniz() {
        let t = table();
        let d = Derivation::parse_terms(&t, &[("u", "v"), ("v", "-u")]).unwrap();
        let f = Poly::parse(&t, "u^2 + v^2").unwrap();
        assert!(d.apply(&f).unwrap().is_zero());
        let g = Poly::parse(&t, "u*v").unwrap();
        assert_eq!(d.apply(&g).unwrap(), Poly::parse(&t, "v^2 - u^2").unwrap());
    }

    #[test]
    fn self_commutator_vanishes() {
        let t = table();
        let d = Derivation::parse_terms(&t, &[("u", "u*v + 1"), ("v", "3*u")]).unwrap();
        assert!(commutator(&d, &d).unwrap().is_zero());
    }

    #[test]
    fn display_and_zero() {
        let t = table();
        let d = Derivation::parse_terms(&t, &[("v", "2*u"), ("u", "v")]).unwrap();
        assert_eq!(d.to_string(), "(v)*D[u] + (2*u)*D[v]");
        assert_eq!(Derivation::zero(&t).to_string(), "0");
        assert!(d.is_degree_preserving());
        assert!(!Derivation::partial(&t, 0).is_degree_preserving());
    }
}
