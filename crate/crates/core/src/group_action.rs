//! Finite group actions: isometries of the Minkowski plane on Killing
//! tensors and their parameters, unimodular substitutions on binary forms,
//! and randomized exact invariance checks.
//!
//! Hyperbolic rotations are parametrized by a positive rational `λ`, with
//! `cosh = (λ + 1/λ)/2` and `sinh = (λ - 1/λ)/2`, so every element is exact.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::derivations::cayley::BinaryForm;
use crate::error::{usage, Result};
use crate::family::FamilySpace;
use crate::killing_space::{geometric_indices, KillingSpace, SymTensor};
use crate::ratpoly::{binomial, int, Monomial, Poly, Rational, VarKind, VarTable};
use crate::sampling::{random_point, random_positive_rational, random_rational, rng_for};

/// `(t, x) ↦ (cosh·t + sinh·x + a, sinh·t + cosh·x + b)` with `λ = e^φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryElem {
    pub lambda: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl IsometryElem {
    pub fn new(lambda: Rational, a: Rational, b: Rational) -> Result<Self> {
        if !lambda.is_positive() {
            return usage("λ must be positive");
        }
        Ok(IsometryElem { lambda, a, b })
    }

    pub fn identity() -> Self {
        IsometryElem { lambda: Rational::one(), a: Rational::zero(), b: Rational::zero() }
    }

    pub fn cosh(&self) -> Rational {
        (&self.lambda + self.lambda.recip()) / int(2)
    }

    pub fn sinh(&self) -> Rational {
        (&self.lambda - self.lambda.recip()) / int(2)
    }

    pub fn apply_point(&self, t: &Rational, x: &Rational) -> (Rational, Rational) {
        let (c, s) = (self.cosh(), self.sinh());
        (&c * t + &s * x + &self.a, &s * t + &c * x + &self.b)
    }

    /// The map "first `self`, then `next`".
    pub fn then(&self, next: &IsometryElem) -> IsometryElem {
        let (a, b) = next.apply_point(&self.a, &self.b);
        IsometryElem { lambda: &self.lambda * &next.lambda, a, b }
    }

    pub fn inverse(&self) -> IsometryElem {
        let rot = IsometryElem { lambda: self.lambda.recip(), a: Rational::zero(), b: Rational::zero() };
        let (a, b) = rot.apply_point(&self.a, &self.b);
        IsometryElem { lambda: self.lambda.recip(), a: -a, b: -b }
    }
}

/// `(x, y) ↦ (αx + βy, γx + δy)` with `αδ - βγ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularElem {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl UnimodularElem {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Result<Self> {
        let det = &alpha * &delta - &beta * &gamma;
        if !det.is_one() {
            return usage(format!("determinant is {det}, expected 1"));
        }
        Ok(UnimodularElem { alpha, beta, gamma, delta })
    }

    pub fn identity() -> Self {
        UnimodularElem { alpha: int(1), beta: int(0), gamma: int(0), delta: int(1) }
    }

    pub fn upper_shear(k: Rational) -> Self {
        UnimodularElem { alpha: int(1), beta: k, gamma: int(0), delta: int(1) }
    }

    pub fn lower_shear(k: Rational) -> Self {
        UnimodularElem { alpha: int(1), beta: int(0), gamma: k, delta: int(1) }
    }

    pub fn det(&self) -> Rational {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    /// Substitution by `self` followed by substitution by `next`; as
    /// matrices this is `self · next`.
    pub fn then(&self, next: &UnimodularElem) -> UnimodularElem {
        UnimodularElem {
            alpha: &self.alpha * &next.alpha + &self.beta * &next.gamma,
            beta: &self.alpha * &next.beta + &self.beta * &next.delta,
            gamma: &self.gamma * &next.alpha + &self.delta * &next.gamma,
            delta: &self.gamma * &next.beta + &self.delta * &next.delta,
        }
    }
}

/// For `Σ C(n,i) c_i X^{n-i} Y^i` under `X ↦ m[0][0]X + m[0][1]Y`,
/// `Y ↦ m[1][0]X + m[1][1]Y`, the new coefficients `c̃_r`.
fn binary_substitution(coeffs: &[Poly], m: [[&Poly; 2]; 2]) -> Vec<Poly> {
    let n = coeffs.len() - 1;
    let table = coeffs[0].table();
    // Coefficient lists (index = power of Y) of a product of linear forms.
    let mul = |acc: &[Poly], lin: [&Poly; 2]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(table); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            out[j] = &out[j] + &(c * lin[0]);
            out[j + 1] = &out[j + 1] + &(c * lin[1]);
        }
        out
    };
    let mut result = vec![Poly::zero(table); n + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut prod = vec![Poly::one(table)];
        for _ in 0..n - i {
            prod = mul(&prod, m[0]);
        }
        for _ in 0..i {
            prod = mul(&prod, m[1]);
        }
        let w = binomial(n as u32, i as u32);
        for (r, p) in prod.iter().enumerate() {
            let scale = &w / binomial(n as u32, r as u32);
            result[r] = &result[r] + &(p * c).scale(&scale);
        }
    }
    result
}

/// Rewrites every `ch^e` with `e ≥ 2` using `ch² = 1 + sh²`.
pub fn reduce_unit_hyperbola(p: &Poly, ch: usize, sh: usize) -> Poly {
    let table = p.table();
    let one_plus = &Poly::one(table) + &Poly::var_at(table, sh).pow(2);
    let mut out = Poly::zero(table);
    for (m, c) in p.terms() {
        let e = m.exp(ch);
        if e < 2 {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        let mut exps = m.exps().to_vec();
        exps[ch] = e % 2;
        let rest = Poly::monomial(table, Monomial::new(exps), c.clone());
        out = &out + &(&rest * &one_plus.pow(e / 2));
    }
    out
}

/// Pushes a tensor field forward along `(t, x) ↦ R(t, x) + (a, b)`, where
/// `R = [[ch, sh], [sh, ch]]` and `ch² - sh² = 1` is assumed. All inputs are
/// polynomials over the tensor's table.
fn hyperbolic_pushforward(k: &SymTensor, ch: &Poly, sh: &Poly, a: &Poly, b: &Poly) -> Result<SymTensor> {
    let n = k.valence();
    let table = k.table().clone();
    let (it, ix) = geometric_indices(&table)?;
    // Component p (p t-indices) is the coefficient of ξ_t^p ξ_x^{n-p}; index
    // the binary form by the x-power so that X = ξ_t, Y = ξ_x.
    let coeffs: Vec<Poly> = (0..=n).map(|i| k.component(n - i).clone()).collect();
    let moved = binary_substitution(&coeffs, [[ch, sh], [sh, ch]]);
    let t = Poly::var_at(&table, it);
    let x = Poly::var_at(&table, ix);
    let (dt, dx) = (&t - a, &x - b);
    let mut base = BTreeMap::new();
    base.insert(it, &(ch * &dt) - &(sh * &dx));
    base.insert(ix, &(ch * &dx) - &(sh * &dt));
    let comps = (0..=n).map(|p| moved[n - p].subst(&base)).collect::<Result<Vec<_>>>()?;
    SymTensor::new(comps)
}

/// The transformed tensor `g·K` (exact; `K` may carry parameters).
pub fn isometry_apply(g: &IsometryElem, k: &SymTensor) -> Result<SymTensor> {
    let table = k.table();
    let c = |r: &Rational| Poly::constant(table, r.clone());
    hyperbolic_pushforward(k, &c(&g.cosh()), &c(&g.sinh()), &c(&g.a), &c(&g.b))
}

/// Names of the symbolic group coordinates.
pub const GROUP_VARS: [&str; 4] = ["ch", "sh", "a", "b"];

/// The induced action on the parameters, `ã_ℓ(a; ch, sh, a, b)`.
#[derive(Clone, Debug)]
pub struct ParamTransform {
    /// The space's table followed by `ch, sh, a, b`.
    pub table: Arc<VarTable>,
    pub labels: Vec<String>,
    /// Images of the parameters, reduced so that `ch` has degree at most 1.
    pub images: Vec<Poly>,
}

impl ParamTransform {
    pub fn group_var(&self, name: &str) -> Poly {
        Poly::var(&self.table, name).expect("group variable present")
    }

    pub fn image(&self, label: &str) -> Option<&Poly> {
        self.labels.iter().position(|l| l == label).map(|i| &self.images[i])
    }

    /// Reduces `p` modulo `ch² = 1 + sh²`.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        let p = p.embed(&self.table)?;
        Ok(reduce_unit_hyperbola(&p, self.table.require("ch")?, self.table.require("sh")?))
    }

    /// The images at a rational group element, over `space_table`.
    pub fn specialize(&self, g: &IsometryElem, space_table: &Arc<VarTable>) -> Result<Vec<Poly>> {
        let values = [g.cosh(), g.sinh(), g.a.clone(), g.b.clone()];
        let mut at = BTreeMap::new();
        for (name, v) in GROUP_VARS.iter().zip(values) {
            at.insert(self.table.require(name)?, v);
        }
        self.images.iter().map(|p| p.eval_partial(&at).embed(space_table)).collect()
    }
}

/// Symbolic transformation law of the parameters of `space`.
pub fn param_transform(space: &KillingSpace) -> Result<ParamTransform> {
    let table = space.table.extended(GROUP_VARS.iter().map(|n| (*n, VarKind::Group)))?;
    let v = |name: &str| Poly::var(&table, name);
    let k = space.general.embed(&table)?;
    let moved = hyperbolic_pushforward(&k, &v("ch")?, &v("sh")?, &v("a")?, &v("b")?)?;
    let (ich, ish) = (table.require("ch")?, table.require("sh")?);
    let moved = moved.map(|p| Ok(reduce_unit_hyperbola(p, ich, ish)))?;
    let images = space.coordinates(&moved)?.iter().map(|p| p.embed(&table)).collect::<Result<Vec<_>>>()?;
    Ok(ParamTransform { table, labels: space.scheme.names(), images })
}

/// Parameters of `g·K(a)` at a rational parameter point.
pub fn transform_values(space: &KillingSpace, g: &IsometryElem, values: &[Rational]) -> Result<Vec<Rational>> {
    let moved = isometry_apply(g, &space.assign(values)?)?;
    space.coordinates(&moved)?.iter().map(|p| Ok(p.constant_term())).collect()
}

/// Coefficients of the substituted form. `coeffs[i]` is `a_i`, over any
/// table.
pub fn sl2_apply(g: &UnimodularElem, form: &BinaryForm, coeffs: &[Poly]) -> Result<Vec<Poly>> {
    if !g.det().is_one() {
        return usage(format!("determinant is {}, expected 1", g.det()));
    }
    if coeffs.len() != form.dimension() {
        return usage("coefficient count does not match the form degree");
    }
    let table = coeffs[0].table();
    let c = |r: &Rational| Poly::constant(table, r.clone());
    let m = [[c(&g.alpha), c(&g.beta)], [c(&g.gamma), c(&g.delta)]];
    Ok(binary_substitution(coeffs, [[&m[0][0], &m[0][1]], [&m[1][0], &m[1][1]]]))
}

pub fn random_isometry(rng: &mut impl Rng) -> IsometryElem {
    IsometryElem { lambda: random_positive_rational(rng), a: random_rational(rng), b: random_rational(rng) }
}

/// A product of four integer shears, alternating upper and lower.
pub fn random_unimodular(rng: &mut impl Rng) -> UnimodularElem {
    let mut g = UnimodularElem::identity();
    for k in 0..4 {
        let s = int(rng.gen_range(-3..=3));
        let shear = if k % 2 == 0 { UnimodularElem::upper_shear(s) } else { UnimodularElem::lower_shear(s) };
        g = g.then(&shear);
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElem {
    Isometry(IsometryElem),
    Unimodular(UnimodularElem),
}

/// Deterministic element of the family's group for `(seed, stream)`.
pub fn random_group_element(family: &FamilySpace, seed: u64, stream: u64) -> GroupElem {
    let mut rng = rng_for(seed, stream);
    match family {
        FamilySpace::Cit(_) => GroupElem::Unimodular(random_unimodular(&mut rng)),
        FamilySpace::Itkt(_) => GroupElem::Isometry(random_isometry(&mut rng)),
    }
}

impl Serialize for GroupElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields: Vec<(&str, &Rational)> = match self {
            GroupElem::Isometry(g) => vec![("lambda", &g.lambda), ("a", &g.a), ("b", &g.b)],
            GroupElem::Unimodular(g) => {
                vec![("alpha", &g.alpha), ("beta", &g.beta), ("gamma", &g.gamma), ("delta", &g.delta)]
            }
        };
        s.collect_map(fields.into_iter().map(|(k, v)| (k, v.to_string())))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub element: GroupElem,
    /// Parameter values, in table order.
    pub point: Vec<String>,
    pub before: String,
    pub after: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub trials: u64,
    pub seed: u64,
    pub counterexample: Option<Counterexample>,
}

/// Parameter points use streams from here on; group elements use the
/// streams below.
const POINT_STREAMS: u64 = 1 << 32;

/// Checks `F(g·a) = F(a)` exactly on `trials` random group elements and
/// parameter points. Trial `k` draws its element from stream `k` of `seed`.
pub fn verify_invariance(f: &Poly, family: &FamilySpace, trials: u64, seed: u64) -> Result<Verdict> {
    let table = family.table();
    let f = f.embed(table)?;
    let params = family.parameter_indices();
    if f.support().iter().any(|i| !params.contains(i)) {
        return usage("polynomial must involve only the parameters");
    }
    for trial in 0..trials {
        let element = random_group_element(family, seed, trial);
        let values = random_point(&mut rng_for(seed, POINT_STREAMS + trial), params.len());
        let moved = match (&element, family) {
            (GroupElem::Isometry(g), FamilySpace::Itkt(space)) => transform_values(space, g, &values)?,
            (GroupElem::Unimodular(g), FamilySpace::Cit(form)) => {
                let coeffs: Vec<Poly> = values.iter().map(|v| Poly::constant(table, v.clone())).collect();
                sl2_apply(g, form, &coeffs)?.iter().map(Poly::constant_term).collect()
            }
            _ => unreachable!("element drawn for this family"),
        };
        let full = |vals: &[Rational]| {
            let mut p = vec![Rational::zero(); table.len()];
            for (i, v) in params.iter().zip(vals) {
                p[*i] = v.clone();
            }
            p
        };
        let before = f.eval(&full(&values))?;
        let after = f.eval(&full(&moved))?;
        if before != after {
            return Ok(Verdict {
                pass: false,
                trials,
                seed,
                counterexample: Some(Counterexample {
                    trial,
                    element,
                    point: values.iter().map(|v| v.to_string()).collect(),
                    before: before.to_string(),
                    after: after.to_string(),
                }),
            });
        }
    }
    Ok(Verdict { pass: true, trials, seed, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn unit_hyperbola_holds() {
        let g = IsometryElem::new(rat(7, 3), int(0), int(0)).unwrap();
        assert!((g.cosh() * g.cosh() - g.sinh() * g.sinh()).is_one());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = IsometryElem::new(rat(2, 5), rat(1, 3), int(-4)).unwrap();
        assert_eq!(g.then(&g.inverse()), IsometryElem::identity());
    }

    #[test]
    fn determinant_checked() {
        assert!(UnimodularElem::new(int(2), int(0), int(0), int(1)).is_err());
    }

    #[test]
    fn hyperbola_reduction() {
        let t = VarTable::new([("ch", VarKind::Group), ("sh", VarKind::Group)]).unwrap();
        let p = Poly::parse(&t, "ch^3").unwrap();
        assert_eq!(reduce_unit_hyperbola(&p, 0, 1), Poly::parse(&t, "ch + ch*sh^2").unwrap());
    }
}
