//! Polynomial invariants and covariants as joint kernels of derivations.
//!
//! The unknowns are the coefficients of a polynomial over a finite set of
//! candidate monomials; each generator contributes one linear equation per
//! monomial of its image. Before solving, the candidates are split by every
//! grading the generators respect (weights `w` with each term
//! `c·u ∂_v` shifting weight by the same amount), which makes the system
//! block diagonal.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::derivations::mst::{extended_generators, ExtensionConvention};
use crate::derivations::Derivation;
use crate::error::{usage, Result};
use crate::killing_space::KillingSpace;
use crate::linalg::{self, Rref, SparseVec};
use crate::ratpoly::{monomials_of_degree, Monomial, Poly, Rational, VarKind};
use crate::sampling::{random_generic_point, rng_for};

/// Number of random points used when estimating generic ranks.
pub const RANK_SAMPLES: u64 = 5;

/// Gradings respected by every generator: a basis of weight vectors over the
/// table positions.
fn gradings(gens: &[Derivation]) -> Vec<Vec<Rational>> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let nvars = first.table().len();
    let ncols = nvars + gens.len();
    let mut rows: Vec<SparseVec> = Vec::new();
    for (g, d) in gens.iter().enumerate() {
        for (v, coeff) in d.terms() {
            for (u, _) in coeff.terms() {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for (i, &e) in u.exps().iter().enumerate() {
                    if e > 0 {
                        *row.entry(i).or_insert_with(Rational::zero) += Rational::from_integer(e.into());
                    }
                }
                *row.entry(v).or_insert_with(Rational::zero) -= Rational::from_integer(1.into());
                *row.entry(nvars + g).or_insert_with(Rational::zero) -= Rational::from_integer(1.into());
                rows.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
            }
        }
    }
    linalg::nullspace(rows, ncols)
        .into_iter()
        .map(|v| linalg::densify(&v, ncols)[..nvars].to_vec())
        .filter(|w| w.iter().any(|x| !x.is_zero()))
        .collect()
}

fn grading_key(weights: &[Vec<Rational>], m: &Monomial) -> Vec<Rational> {
    weights
        .iter()
        .map(|w| {
            m.exps()
                .iter()
                .zip(w)
                .filter(|(e, _)| **e > 0)
                .map(|(e, x)| x * Rational::from_integer((*e).into()))
                .sum()
        })
        .collect()
}

/// Basis of `{F ∈ span(candidates) : g(F) = 0 for every g}`, in reduced
/// echelon form with pivots on the graded-lex largest monomials.
pub fn joint_kernel(gens: &[Derivation], candidates: &[Monomial]) -> Result<Vec<Poly>> {
    let Some(first) = gens.first() else {
        return usage("at least one generator is required");
    };
    let table = first.table().clone();
    if gens.iter().any(|g| g.table() != &table) {
        return usage("generators are over different tables");
    }
    let mut cands: Vec<Monomial> = candidates.to_vec();
    cands.sort_by(|a, b| b.cmp(a));
    cands.dedup();

    let weights = gradings(gens);
    let mut blocks: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (c, m) in cands.iter().enumerate() {
        blocks.entry(grading_key(&weights, m)).or_default().push(c);
    }

    let mut basis: Vec<(usize, Poly)> = Vec::new();
    for cols in blocks.values() {
        let mut equations: BTreeMap<(usize, Monomial), SparseVec> = BTreeMap::new();
        for (local, &c) in cols.iter().enumerate() {
            let mono = Poly::monomial(&table, cands[c].clone(), Rational::from_integer(1.into()));
            for (g, d) in gens.iter().enumerate() {
                for (m, x) in d.apply(&mono)?.terms() {
                    equations.entry((g, m.clone())).or_default().push((local, x.clone()));
                }
            }
        }
        for v in linalg::nullspace(equations.into_values(), cols.len()) {
            let lead = cols[v[0].0];
            let poly = Poly::from_terms(&table, v.into_iter().map(|(local, x)| (cands[cols[local]].clone(), x)));
            basis.push((lead, poly));
        }
    }
    basis.sort_by_key(|(lead, _)| *lead);
    Ok(basis.into_iter().map(|(_, p)| p).collect())
}

fn require_degree_preserving(gens: &[Derivation]) -> Result<()> {
    if gens.iter().all(Derivation::is_degree_preserving) {
        Ok(())
    } else {
        usage("generators must have parameter-linear coefficients for degree-graded solving")
    }
}

/// Positions of the parameter variables of the generators' table.
pub fn parameter_vars(gens: &[Derivation]) -> Vec<usize> {
    gens.first().map(|g| g.table().indices_of_kind(VarKind::Parameter)).unwrap_or_default()
}

/// Homogeneous polynomials of total degree `deg` in the parameters that
/// every generator annihilates.
pub fn kernel_at_degree(gens: &[Derivation], deg: u32) -> Result<Vec<Poly>> {
    if deg == 0 {
        return usage("degree must be at least 1");
    }
    if gens.is_empty() {
        return usage("at least one generator is required");
    }
    require_degree_preserving(gens)?;
    let vars = parameter_vars(gens);
    let nvars = gens[0].table().len();
    joint_kernel(gens, &monomials_of_degree(nvars, &vars, deg))
}

/// Rank of the generators' coefficient vectors (over the parameters) at a
/// full-table point.
pub fn orbit_dimension(gens: &[Derivation], point: &[Rational]) -> Result<usize> {
    let vars = parameter_vars(gens);
    let rows = gens
        .iter()
        .map(|g| vars.iter().map(|&v| g.coeff(v).eval(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&rows))
}

/// Rank of the Jacobian of `polys` with respect to the parameters.
pub fn functional_independence(polys: &[Poly], point: &[Rational]) -> Result<usize> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let vars = first.table().indices_of_kind(VarKind::Parameter);
    let rows = polys
        .iter()
        .map(|p| vars.iter().map(|&v| p.diff(v).eval(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&rows))
}

/// The [`RANK_SAMPLES`] seeded sample points (all coordinates nonzero) over
/// a table of `len` variables.
pub fn sample_points(seed: u64, len: usize) -> Vec<Vec<Rational>> {
    (0..RANK_SAMPLES).map(|k| random_generic_point(&mut rng_for(seed, k), len)).collect()
}

/// Maximal orbit dimension over the sample points, and the first point
/// attaining it.
pub fn generic_orbit_dimension(gens: &[Derivation], seed: u64) -> Result<(usize, Vec<Rational>)> {
    let Some(first) = gens.first() else {
        return usage("at least one generator is required");
    };
    let len = first.table().len();
    let mut best = (0, vec![Rational::zero(); len]);
    for point in sample_points(seed, len) {
        let r = orbit_dimension(gens, &point)?;
        if r > best.0 {
            best = (r, point);
        }
    }
    Ok(best)
}

/// Maximal Jacobian rank of `polys` over the sample points.
pub fn generic_jacobian_rank(polys: &[Poly], seed: u64) -> Result<usize> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let mut best = 0;
    for point in sample_points(seed, first.table().len()) {
        best = best.max(functional_independence(polys, &point)?);
    }
    Ok(best)
}

/// All products `f_1 ⋯ f_r` (with repetition) of the given homogeneous
/// polynomials whose total degree is exactly `deg`.
pub fn products_of_degree(polys: &[Poly], deg: u32) -> Vec<Poly> {
    fn rec(polys: &[(u32, &Poly)], start: usize, left: u32, acc: &Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for k in start..polys.len() {
            let (d, p) = polys[k];
            if d <= left {
                rec(polys, k, left - d, &(acc * p), out);
            }
        }
    }
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let graded: Vec<(u32, &Poly)> =
        polys.iter().filter_map(|p| p.total_degree().filter(|&d| d > 0).map(|d| (d, p))).collect();
    let mut out = Vec::new();
    rec(&graded, 0, deg, &Poly::one(first.table()), &mut out);
    out
}

/// Echelon form of a family of polynomials over their monomials.
#[derive(Clone, Debug, Default)]
pub struct PolySpan {
    columns: BTreeMap<Monomial, usize>,
    rref: Rref,
}

impl PolySpan {
    pub fn new<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let mut s = PolySpan::default();
        for p in polys {
            s.insert(p);
        }
        s
    }

    fn vector(&mut self, p: &Poly) -> SparseVec {
        let mut v: SparseVec = p
            .terms()
            .map(|(m, c)| {
                let next = self.columns.len();
                (*self.columns.entry(m.clone()).or_insert(next), c.clone())
            })
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Adds `p`; returns whether the span grew.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let v = self.vector(p);
        self.rref.insert(v)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        let mut v = Vec::new();
        for (m, c) in p.terms() {
            match self.columns.get(m) {
                Some(&i) => v.push((i, c.clone())),
                None => return false,
            }
        }
        v.sort_by_key(|e| e.0);
        self.rref.contains(&v)
    }

    pub fn dimension(&self) -> usize {
        self.rref.rank()
    }
}

/// True when `target` lies in the linear span of `polys`.
pub fn span_contains(polys: &[Poly], target: &Poly) -> bool {
    PolySpan::new(polys).contains(target)
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeSlice {
    pub deg: u32,
    pub kernel: Vec<Poly>,
}

/// Outcome of a degree-by-degree invariant search.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub generators: String,
    /// Search horizon: nothing is claimed about degrees above it.
    pub max_degree: u32,
    pub d: usize,
    pub s: usize,
    pub expected: usize,
    pub per_degree: Vec<DegreeSlice>,
    /// New kernel elements that raise the Jacobian rank of the set found so
    /// far.
    pub fundamentals: Vec<Poly>,
    /// New kernel elements outside the span of products of earlier findings
    /// that do not raise the Jacobian rank.
    pub dependent: Vec<Poly>,
    pub jacobian_rank: usize,
    pub seed: u64,
    #[serde(serialize_with = "serialize_point")]
    pub sample_point: Vec<Rational>,
}

fn serialize_point<S: serde::Serializer>(p: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|r| r.to_string()))
}

/// Degree-by-degree search for invariants up to `max_deg`.
///
/// At each degree the kernel is computed; elements in the span of products
/// of earlier findings are dropped, and the rest are split by whether they
/// raise the generic Jacobian rank of the set found so far.
pub fn fundamental_search(id: &str, gens: &[Derivation], max_deg: u32, seed: u64) -> Result<InvariantReport> {
    if max_deg == 0 {
        return usage("max degree must be at least 1");
    }
    require_degree_preserving(gens)?;
    let d = parameter_vars(gens).len();
    let (s, point) = generic_orbit_dimension(gens, seed)?;
    let mut per_degree = Vec::new();
    let mut found: Vec<Poly> = Vec::new();
    let mut fundamentals: Vec<Poly> = Vec::new();
    let mut dependent = Vec::new();
    let mut rank = 0;
    for deg in 1..=max_deg {
        let kernel = kernel_at_degree(gens, deg)?;
        let mut span = PolySpan::new(products_of_degree(&found, deg).iter());
        let mut new_here = Vec::new();
        for f in &kernel {
            if span.insert(f) {
                new_here.push(f.clone());
            }
        }
        for f in new_here {
            let mut trial = fundamentals.clone();
            trial.push(f.clone());
            let r = generic_jacobian_rank(&trial, seed)?;
            if r > rank {
                rank = r;
                fundamentals.push(f.clone());
            } else {
                dependent.push(f.clone());
            }
            found.push(f);
        }
        per_degree.push(DegreeSlice { deg, kernel });
    }
    Ok(InvariantReport {
        generators: id.to_string(),
        max_degree: max_deg,
        d,
        s,
        expected: d.saturating_sub(s),
        per_degree,
        fundamentals,
        dependent,
        jacobian_rank: rank,
        seed,
        sample_point: point,
    })
}

/// Polynomials in the parameters and `t, x` of total degree `1..=deg`
/// annihilated by the extended generators (equivariant convention).
pub fn covariant_kernel(space: &KillingSpace, deg: u32) -> Result<Vec<Poly>> {
    covariant_kernel_with(space, deg, ExtensionConvention::Equivariant)
}

pub fn covariant_kernel_with(space: &KillingSpace, deg: u32, convention: ExtensionConvention) -> Result<Vec<Poly>> {
    if deg == 0 {
        return usage("degree must be at least 1");
    }
    let gens = extended_generators(space, convention)?;
    let vars: Vec<usize> = (0..space.table.len()).collect();
    let mut cands = Vec::new();
    for k in 1..=deg {
        cands.extend(monomials_of_degree(space.table.len(), &vars, k));
    }
    joint_kernel(&gens, &cands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::cayley::{cayley_generators, BinaryForm};
    use crate::derivations::mst::isometry_generators;

    #[test]
    fn quadratic_discriminant() {
        let f = BinaryForm::new(2).unwrap();
        let gens = cayley_generators(&f).unwrap();
        let k = kernel_at_degree(&gens, 2).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], Poly::parse(&f.table, "a0*a2 - a1^2").unwrap());
        assert!(kernel_at_degree(&gens, 1).unwrap().is_empty());
    }

    #[test]
    fn valence_two_linear_invariant() {
        let space = KillingSpace::new(2).unwrap();
        let gens = isometry_generators(&space).unwrap();
        let k = kernel_at_degree(&gens, 1).unwrap();
        assert_eq!(k, vec![space.param("a5").unwrap()]);
    }

    #[test]
    fn non_linear_generators_rejected() {
        let space = KillingSpace::new(1).unwrap();
        let gens = extended_generators(&space, ExtensionConvention::Equivariant).unwrap();
        assert!(matches!(kernel_at_degree(&gens, 1), Err(crate::Error::Usage(_))));
    }

    #[test]
    fn origin_has_no_orbit() {
        let f = BinaryForm::new(3).unwrap();
        let gens = cayley_generators(&f).unwrap();
        let origin = vec![Rational::zero(); f.table.len()];
        assert_eq!(orbit_dimension(&gens, &origin).unwrap(), 0);
    }

    #[test]
    fn dependent_pair_has_rank_one() {
        let f = BinaryForm::new(2).unwrap();
        let disc = Poly::parse(&f.table, "a0*a2 - a1^2").unwrap();
        let point: Vec<Rational> = (1..=5).map(|i| Rational::from_integer(i.into())).collect();
        assert_eq!(functional_independence(&[disc.clone(), disc.pow(2)], &point).unwrap(), 1);
        assert_eq!(functional_independence(&[disc], &point).unwrap(), 1);
    }

    #[test]
    fn product_enumeration() {
        let f = BinaryForm::new(2).unwrap();
        let a = Poly::parse(&f.table, "a0").unwrap();
        let b = Poly::parse(&f.table, "a1^2").unwrap();
        // degree 4: a^4, a^2 b, b^2
        assert_eq!(products_of_degree(&[a, b], 4).len(), 3);
    }
}
