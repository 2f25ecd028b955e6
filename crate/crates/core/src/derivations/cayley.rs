//! Binary forms `Q = Σ C(n,i) a_i x^{n-i} y^i` and the infinitesimal
//! generators of the unimodular substitution action on their coefficients.

use std::sync::Arc;

use crate::error::{usage, Result};
use crate::ratpoly::{binomial, int, Monomial, Poly, VarKind, VarTable};

use super::Derivation;

/// Space of binary forms of degree `n` with coefficients `a0, ..., an`.
#[derive(Clone, Debug)]
pub struct BinaryForm {
    pub degree: usize,
    /// Table `x, y, a0, ..., an`.
    pub table: Arc<VarTable>,
    pub general: Poly,
}

impl BinaryForm {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return usage("form degree must be at least 1");
        }
        let mut vars = vec![("x".to_string(), VarKind::Geometric), ("y".to_string(), VarKind::Geometric)];
        vars.extend((0..=n).map(|i| (format!("a{i}"), VarKind::Parameter)));
        let table = VarTable::new(vars)?;
        let mut general = Poly::zero(&table);
        for i in 0..=n {
            let mut exps = vec![0; table.len()];
            exps[0] = (n - i) as u32;
            exps[1] = i as u32;
            exps[2 + i] = 1;
            general.add_term(Monomial::new(exps), binomial(n as u32, i as u32));
        }
        Ok(BinaryForm { degree: n, table, general })
    }

    pub fn dimension(&self) -> usize {
        self.degree + 1
    }

    pub fn parameter_indices(&self) -> Vec<usize> {
        (2..self.table.len()).collect()
    }

    fn a(&self, i: usize) -> Poly {
        Poly::var_at(&self.table, 2 + i)
    }
}

/// `[V-, V0, V+]` with `V- = Σ (n-i) a_{i+1} ∂a_i`, `V0 = Σ (2i-n) a_i ∂a_i`
/// and `V+ = Σ i a_{i-1} ∂a_i`.
pub fn cayley_generators(form: &BinaryForm) -> Result<[Derivation; 3]> {
    let n = form.degree;
    let table = &form.table;
    let minus = (0..n).map(|i| (2 + i, form.a(i + 1).scale(&int((n - i) as i64))));
    let zero = (0..=n).map(|i| (2 + i, form.a(i).scale(&int(2 * i as i64 - n as i64))));
    let plus = (1..=n).map(|i| (2 + i, form.a(i - 1).scale(&int(i as i64))));
    Ok([
        Derivation::from_terms(table, minus)?,
        Derivation::from_terms(table, zero)?,
        Derivation::from_terms(table, plus)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_form_text() {
        let f = BinaryForm::new(2).unwrap();
        assert_eq!(f.general, Poly::parse(&f.table, "a0*x^2 + 2*a1*x*y + a2*y^2").unwrap());
    }

    #[test]
    fn degree_one_weights() {
        let f = BinaryForm::new(1).unwrap();
        let [_, v0, _] = cayley_generators(&f).unwrap();
        assert_eq!(v0, Derivation::parse_terms(&f.table, &[("a0", "-a0"), ("a1", "a1")]).unwrap());
    }

    #[test]
    fn degree_three_raising() {
        let f = BinaryForm::new(3).unwrap();
        let [_, _, vp] = cayley_generators(&f).unwrap();
        let expect = Derivation::parse_terms(&f.table, &[("a1", "a0"), ("a2", "2*a1"), ("a3", "3*a2")]).unwrap();
        assert_eq!(vp, expect);
    }
}
