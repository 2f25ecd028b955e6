//! Killing tensors on the Minkowski plane.
//!
//! Coordinates are `y¹ = t`, `y² = x` with metric `diag(1, -1)`. A symmetric
//! contravariant tensor of valence `n` is stored through its `n + 1` distinct
//! components: entry `p` holds the component with `p` indices equal to 1
//! (the `t` direction) and `q = n - p` indices equal to 2. A Killing tensor
//! has entry `p` of degree at most `p` in `x` and at most `q` in `t`.
//!
//! The Killing equation reduces to the first-order system
//!
//! ```text
//! r ∂_t K[r-1] = (n + 1 - r) ∂_x K[r],   r = 0, ..., n + 1,
//! ```
//!
//! with `K[-1] = K[n+1] = 0`, which [`killing_basis`] solves exactly over a
//! generic polynomial ansatz.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{usage, Result};
use crate::linalg::{self, SparseVec};
use crate::ratpoly::{binomial, factorial, int, Monomial, Poly, Rational, VarKind, VarTable};

/// Symmetric contravariant tensor on the plane, stored by distinct components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor {
    comps: Vec<Poly>,
}

impl SymTensor {
    /// `comps[p]` is the component with `p` indices equal to 1.
    pub fn new(comps: Vec<Poly>) -> Result<Self> {
        if comps.len() < 2 {
            return usage("a symmetric tensor needs valence at least 1");
        }
        let table = comps[0].table().clone();
        if comps.iter().any(|c| c.table() != &table) {
            return usage("tensor components are over different variable tables");
        }
        geometric_indices(&table)?;
        Ok(SymTensor { comps })
    }

    pub fn zero(table: &Arc<VarTable>, n: usize) -> Result<Self> {
        SymTensor::new(vec![Poly::zero(table); n + 1])
    }

    pub fn valence(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.comps[0].table()
    }

    pub fn component(&self, ones: usize) -> &Poly {
        &self.comps[ones]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    /// Component for a full index list of 1s and 2s, in any order.
    pub fn at(&self, indices: &[u8]) -> Result<&Poly> {
        if indices.len() != self.valence() || indices.iter().any(|&i| i != 1 && i != 2) {
            return usage(format!(
                "expected {} indices from {{1, 2}}, got {indices:?}",
                self.valence()
            ));
        }
        Ok(&self.comps[indices.iter().filter(|&&i| i == 1).count()])
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &SymTensor) -> Result<SymTensor> {
        if self.valence() != other.valence() {
            return usage("tensor valences differ");
        }
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(SymTensor { comps })
    }

    pub fn sub(&self, other: &SymTensor) -> Result<SymTensor> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymTensor {
        SymTensor { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul_poly(&self, f: &Poly) -> Result<SymTensor> {
        let comps = self.comps.iter().map(|p| p.checked_mul(f)).collect::<Result<_>>()?;
        Ok(SymTensor { comps })
    }

    pub fn map(&self, f: impl FnMut(&Poly) -> Result<Poly>) -> Result<SymTensor> {
        SymTensor::new(self.comps.iter().map(f).collect::<Result<_>>()?)
    }

    pub fn embed(&self, table: &Arc<VarTable>) -> Result<SymTensor> {
        self.map(|p| p.embed(table))
    }
}

/// Positions of `t` and `x` in a table.
pub fn geometric_indices(table: &VarTable) -> Result<(usize, usize)> {
    Ok((table.require("t")?, table.require("x")?))
}

/// The table `{t, x}`.
pub fn plane_table() -> Arc<VarTable> {
    VarTable::new([("t", VarKind::Geometric), ("x", VarKind::Geometric)]).expect("static table")
}

/// Vector field `v^t ∂_t + v^x ∂_x` on the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldM {
    pub t: Poly,
    pub x: Poly,
}

impl VectorFieldM {
    /// Translation `T = ∂_t`.
    pub fn translation_t(table: &Arc<VarTable>) -> Self {
        VectorFieldM { t: Poly::one(table), x: Poly::zero(table) }
    }

    /// Translation `X = ∂_x`.
    pub fn translation_x(table: &Arc<VarTable>) -> Self {
        VectorFieldM { t: Poly::zero(table), x: Poly::one(table) }
    }

    /// Hyperbolic rotation `H = x ∂_t + t ∂_x`.
    pub fn boost(table: &Arc<VarTable>) -> Result<Self> {
        Ok(VectorFieldM { t: Poly::var(table, "x")?, x: Poly::var(table, "t")? })
    }

    /// `[T, X, H]`.
    pub fn isometry_basis(table: &Arc<VarTable>) -> Result<[Self; 3]> {
        Ok([Self::translation_t(table), Self::translation_x(table), Self::boost(table)?])
    }

    pub fn as_tensor(&self) -> Result<SymTensor> {
        SymTensor::new(vec![self.x.clone(), self.t.clone()])
    }

    /// Lie bracket `[self, other]`.
    pub fn bracket(&self, other: &VectorFieldM) -> Result<VectorFieldM> {
        let (it, ix) = geometric_indices(self.t.table())?;
        let apply = |v: &VectorFieldM, f: &Poly| -> Result<Poly> {
            (&v.t * &f.diff(it)).checked_add(&(&v.x * &f.diff(ix)))
        };
        Ok(VectorFieldM {
            t: apply(self, &other.t)?.checked_sub(&apply(other, &self.t)?)?,
            x: apply(self, &other.x)?.checked_sub(&apply(other, &self.x)?)?,
        })
    }
}

/// True iff every equation of the reduced Killing system vanishes identically.
pub fn killing_check(k: &SymTensor) -> bool {
    let Ok((it, ix)) = geometric_indices(k.table()) else {
        return false;
    };
    let n = k.valence();
    (0..=n + 1).all(|r| {
        let mut lhs = Poly::zero(k.table());
        if r >= 1 {
            lhs = &lhs + &k.comps[r - 1].diff(it).scale(&int(r as i64));
        }
        if r <= n {
            lhs = &lhs - &k.comps[r].diff(ix).scale(&int((n + 1 - r) as i64));
        }
        lhs.is_zero()
    })
}

/// One monomial coefficient of one component: `t^t_exp x^x_exp` in entry
/// `component`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Slot {
    pub component: usize,
    pub t_exp: u32,
    pub x_exp: u32,
}

/// Every coefficient slot allowed by the degree bounds, ordered by
/// component, then `t` exponent, then `x` exponent.
pub fn ansatz_slots(n: usize) -> Vec<Slot> {
    let mut out = Vec::new();
    for p in 0..=n {
        for i in 0..=(n - p) as u32 {
            for j in 0..=p as u32 {
                out.push(Slot { component: p, t_exp: i, x_exp: j });
            }
        }
    }
    out
}

fn slot_columns(slots: &[Slot]) -> BTreeMap<Slot, usize> {
    slots.iter().enumerate().map(|(i, s)| (*s, i)).collect()
}

/// Exact kernel of the Killing system over the generic ansatz, as vectors
/// indexed by [`ansatz_slots`].
fn killing_kernel(n: usize) -> (Vec<Slot>, Vec<SparseVec>) {
    let slots = ansatz_slots(n);
    let col = slot_columns(&slots);
    let mut rows = Vec::new();
    // Equation r: r ∂_t K[r-1] - (n+1-r) ∂_x K[r], coefficient of t^i x^j.
    for r in 0..=n + 1 {
        let max_i = n as u32 + 1;
        for i in 0..=max_i {
            for j in 0..=max_i {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                if r >= 1 {
                    let s = Slot { component: r - 1, t_exp: i + 1, x_exp: j };
                    if let Some(&c) = col.get(&s) {
                        *row.entry(c).or_insert_with(Rational::zero) += int((r as i64) * (i as i64 + 1));
                    }
                }
                if r <= n {
                    let s = Slot { component: r, t_exp: i, x_exp: j + 1 };
                    if let Some(&c) = col.get(&s) {
                        *row.entry(c).or_insert_with(Rational::zero) -=
                            int((n + 1 - r) as i64 * (j as i64 + 1));
                    }
                }
                let row: SparseVec = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = linalg::nullspace(rows, slots.len());
    (slots, kernel)
}

fn tensor_from_slots(table: &Arc<VarTable>, n: usize, entries: impl IntoIterator<Item = (Slot, Poly)>) -> SymTensor {
    let (it, ix) = geometric_indices(table).expect("table has t and x");
    let mut comps = vec![Poly::zero(table); n + 1];
    for (s, coeff) in entries {
        let mut exps = vec![0; table.len()];
        exps[it] = s.t_exp;
        exps[ix] = s.x_exp;
        let mono = Poly::monomial(table, Monomial::new(exps), Rational::one());
        comps[s.component] = &comps[s.component] + &(&mono * &coeff);
    }
    SymTensor { comps }
}

/// Basis of the valence-`n` Killing tensors, `(n+1)(n+2)/2` elements over
/// the table `{t, x}`.
pub fn killing_basis(n: usize) -> Result<Vec<SymTensor>> {
    if n == 0 {
        return usage("valence must be at least 1");
    }
    let table = plane_table();
    let (slots, kernel) = killing_kernel(n);
    Ok(kernel
        .iter()
        .map(|v| {
            tensor_from_slots(
                &table,
                n,
                v.iter().map(|(c, val)| (slots[*c], Poly::constant(&table, val.clone()))),
            )
        })
        .collect())
}

/// Coefficient of the slot monomial in the tensor, as a polynomial in the
/// non-geometric variables.
pub fn slot_coefficient(k: &SymTensor, s: Slot) -> Result<Poly> {
    let (it, ix) = geometric_indices(k.table())?;
    if s.component > k.valence() {
        return usage(format!("component {} out of range", s.component));
    }
    let mut exps = vec![0; k.table().len()];
    exps[it] = s.t_exp;
    exps[ix] = s.x_exp;
    Ok(k.comps[s.component]
        .coeff_poly_in(&[it, ix])
        .remove(&Monomial::new(exps))
        .unwrap_or_else(|| Poly::zero(k.table())))
}

/// Flattens a tensor into its slot coefficients (geometric part only).
fn slot_vector(k: &SymTensor) -> Result<BTreeMap<Slot, Poly>> {
    let (it, ix) = geometric_indices(k.table())?;
    let mut out = BTreeMap::new();
    for (p, c) in k.comps.iter().enumerate() {
        for (m, coeff) in c.coeff_poly_in(&[it, ix]) {
            out.insert(Slot { component: p, t_exp: m.exp(it), x_exp: m.exp(ix) }, coeff);
        }
    }
    Ok(out)
}

/// Rank of a family of tensors with rational coefficients.
pub fn span_rank(tensors: &[SymTensor]) -> Result<usize> {
    let mut cols: BTreeMap<Slot, usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for k in tensors {
        let mut row = Vec::new();
        for (s, coeff) in slot_vector(k)? {
            if !coeff.is_constant() {
                return usage("span_rank needs tensors with constant coefficients");
            }
            let next = cols.len();
            let c = *cols.entry(s).or_insert(next);
            row.push((c, coeff.constant_term()));
        }
        row.sort_by_key(|e| e.0);
        rows.push(row);
    }
    Ok(linalg::Rref::new(rows).rank())
}

/// A named parameter of the general element, tied to the coefficient slot
/// that determines it. The slot coefficient equals `weight * parameter`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Label {
    pub name: String,
    pub slot: Slot,
    #[serde(serialize_with = "serialize_rational")]
    pub weight: Rational,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Bijection between parameter labels and canonical coefficient slots.
///
/// The layered scheme peels the space in layers `s = 1, 2, ...` from the
/// outermost component pair inwards. Layer `s` owns
///
/// * `a{s}_{k}`, `k = 0..=n-2s+2`: coefficient of `x^k` in the component
///   with `n-s+1` ones, weighted by `C(n-s+1, k)`;
/// * `b{s}_{k}`, `k = 0..=n-2s+1`: coefficient of `t^k` in the component
///   with `s-1` ones, same weight.
///
/// The last `a` of a layer doubles as the top `t` coefficient of its `b` row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamScheme {
    pub valence: usize,
    pub labels: Vec<Label>,
}

/// Legacy valence-2 names and their layered counterparts.
pub const LEGACY_VALENCE_TWO: [(&str, &str); 6] = [
    ("a0", "a1_0"),
    ("a1", "a2_0"),
    ("a2", "b1_0"),
    ("a3", "a1_1"),
    ("a4", "b1_1"),
    ("a5", "a1_2"),
];

/// Number of layers in the layered scheme.
pub fn layer_count(n: usize) -> usize {
    (n + 2) / 2
}

/// Name of `a{s}_{k}`, or `None` outside the layer's range.
pub fn a_label(n: usize, s: usize, k: usize) -> Option<String> {
    (s >= 1 && s <= layer_count(n) && k + 2 * s <= n + 2).then(|| format!("a{s}_{k}"))
}

/// Name of `b{s}_{k}`; the corner `k = n-2s+2` resolves to `a{s}_{k}`.
pub fn b_label(n: usize, s: usize, k: usize) -> Option<String> {
    if s < 1 || s > layer_count(n) {
        return None;
    }
    if k + 2 * s <= n + 1 {
        Some(format!("b{s}_{k}"))
    } else {
        a_label(n, s, k)
    }
}

impl ParamScheme {
    pub fn layered(n: usize) -> Result<Self> {
        if n == 0 {
            return usage("valence must be at least 1");
        }
        let mut labels = Vec::new();
        for s in 1..=layer_count(n) {
            let top = (n - s + 1) as u32;
            for k in 0..=(n + 2 - 2 * s) {
                labels.push(Label {
                    name: format!("a{s}_{k}"),
                    slot: Slot { component: n - s + 1, t_exp: 0, x_exp: k as u32 },
                    weight: binomial(top, k as u32),
                });
            }
            if n + 1 >= 2 * s {
                for k in 0..=(n + 1 - 2 * s) {
                    labels.push(Label {
                        name: format!("b{s}_{k}"),
                        slot: Slot { component: s - 1, t_exp: k as u32, x_exp: 0 },
                        weight: binomial(top, k as u32),
                    });
                }
            }
        }
        Ok(ParamScheme { valence: n, labels })
    }

    /// Valence-2 scheme with the names `a0, ..., a5`.
    pub fn legacy_valence_two() -> Self {
        let layered = ParamScheme::layered(2).expect("valence 2");
        let labels = LEGACY_VALENCE_TWO
            .iter()
            .map(|(legacy, name)| {
                let l = layered.label(name).expect("layered label");
                Label { name: legacy.to_string(), ..l.clone() }
            })
            .collect();
        ParamScheme { valence: 2, labels }
    }

    /// The default scheme: legacy names for valence 2, layered otherwise.
    pub fn for_valence(n: usize) -> Result<Self> {
        if n == 2 {
            Ok(Self::legacy_valence_two())
        } else {
            Self::layered(n)
        }
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn names(&self) -> Vec<String> {
        self.labels.iter().map(|l| l.name.clone()).collect()
    }

    pub fn label(&self, name: &str) -> Option<&Label> {
        self.labels.iter().find(|l| l.name == name)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }

    pub fn by_slot(&self, slot: Slot) -> Option<&Label> {
        self.labels.iter().find(|l| l.slot == slot)
    }

    /// Name of the parameter holding `θ(A, B)` in the closed-form solution,
    /// i.e. the label of `a{s}_{k}`/`b{s}_{k}` translated into this scheme.
    pub fn name_of_layered(&self, layered_name: &str) -> Option<String> {
        if self.valence == 2 {
            if let Some((legacy, _)) = LEGACY_VALENCE_TWO.iter().find(|(_, l)| *l == layered_name) {
                if self.label(legacy).is_some() {
                    return Some(legacy.to_string());
                }
            }
        }
        self.label(layered_name).map(|l| l.name.clone())
    }
}

/// A solved Killing-tensor space with its labeled general element.
#[derive(Clone, Debug)]
pub struct KillingSpace {
    pub scheme: ParamScheme,
    /// Table `t, x` followed by the scheme's parameters.
    pub table: Arc<VarTable>,
    /// `dual[ℓ]` has slot coefficient `weight_ℓ` at its own label's slot and
    /// zero at every other label's slot.
    pub dual: Vec<SymTensor>,
    pub general: SymTensor,
}

impl KillingSpace {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_scheme(ParamScheme::for_valence(n)?)
    }

    pub fn with_scheme(scheme: ParamScheme) -> Result<Self> {
        let n = scheme.valence;
        if n == 0 {
            return usage("valence must be at least 1");
        }
        let (slots, kernel) = killing_kernel(n);
        let d = kernel.len();
        if scheme.dimension() != d {
            return usage(format!("scheme has {} labels, space has dimension {d}", scheme.dimension()));
        }
        // Reorder columns so the label slots come first, then row-reduce: the
        // reduced kernel rows are exactly the dual basis (up to weights).
        let mut order: Vec<usize> = Vec::with_capacity(slots.len());
        let col = slot_columns(&slots);
        for l in &scheme.labels {
            match col.get(&l.slot) {
                Some(&c) if !order.contains(&c) => order.push(c),
                _ => return usage(format!("label {} has an invalid or repeated slot", l.name)),
            }
        }
        for c in 0..slots.len() {
            if !order.contains(&c) {
                order.push(c);
            }
        }
        let mut inverse = vec![0; slots.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let permuted = kernel.iter().map(|v| {
            let mut w: SparseVec = v.iter().map(|(c, x)| (inverse[*c], x.clone())).collect();
            w.sort_by_key(|e| e.0);
            w
        });
        let rref = linalg::Rref::new(permuted);
        if rref.pivots != (0..d).collect::<Vec<_>>() {
            return usage("scheme slots do not determine the Killing tensors uniquely");
        }

        let mut vars: Vec<(String, VarKind)> =
            vec![("t".into(), VarKind::Geometric), ("x".into(), VarKind::Geometric)];
        vars.extend(scheme.labels.iter().map(|l| (l.name.clone(), VarKind::Parameter)));
        let table = VarTable::new(vars)?;

        let mut dual = Vec::with_capacity(d);
        let mut general = SymTensor::zero(&table, n)?;
        for (l, row) in scheme.labels.iter().zip(&rref.rows) {
            let e = tensor_from_slots(
                &table,
                n,
                row.iter().map(|(c, x)| (slots[order[*c]], Poly::constant(&table, x * &l.weight))),
            );
            general = general.add(&e.mul_poly(&Poly::var(&table, &l.name)?)?)?;
            dual.push(e);
        }
        Ok(KillingSpace { scheme, table, dual, general })
    }

    pub fn valence(&self) -> usize {
        self.scheme.valence
    }

    pub fn dimension(&self) -> usize {
        self.scheme.dimension()
    }

    /// Positions of the parameters in [`Self::table`], in label order.
    pub fn parameter_indices(&self) -> Vec<usize> {
        (2..self.table.len()).collect()
    }

    pub fn param(&self, name: &str) -> Result<Poly> {
        Poly::var(&self.table, name)
    }

    /// `Σ coeffs[ℓ] · dual[ℓ]`, where the coefficients may be polynomials
    /// over [`Self::table`].
    pub fn combine(&self, coeffs: &[Poly]) -> Result<SymTensor> {
        if coeffs.len() != self.dimension() {
            return usage("coefficient count does not match the dimension");
        }
        let mut out = SymTensor::zero(&self.table, self.valence())?;
        for (c, e) in coeffs.iter().zip(&self.dual) {
            out = out.add(&e.mul_poly(c)?)?;
        }
        Ok(out)
    }

    /// Reads the parameters off a tensor via the label slots. Returns a
    /// domain error when the tensor is not the general element at those
    /// parameters, i.e. not a Killing tensor.
    ///
    /// Tensors whose variables fit in [`Self::table`] are read over it; others
    /// (say with extra group variables) are read over their own table.
    pub fn coordinates(&self, k: &SymTensor) -> Result<Vec<Poly>> {
        if k.valence() != self.valence() {
            return usage("tensor valence does not match the space");
        }
        let k = k.embed(&self.table).unwrap_or_else(|_| k.clone());
        let coords = self
            .scheme
            .labels
            .iter()
            .map(|l| Ok(slot_coefficient(&k, l.slot)?.scale(&(Rational::one() / &l.weight))))
            .collect::<Result<Vec<_>>>()?;
        let mut rebuilt = SymTensor::zero(k.table(), self.valence())?;
        for (c, e) in coords.iter().zip(&self.dual) {
            rebuilt = rebuilt.add(&e.embed(k.table())?.mul_poly(c)?)?;
        }
        if rebuilt != k {
            return Err(crate::Error::Domain("tensor is not in the span of the Killing tensors".into()));
        }
        Ok(coords)
    }

    /// General element with rational values substituted for the parameters.
    pub fn assign(&self, values: &[Rational]) -> Result<SymTensor> {
        if values.len() != self.dimension() {
            return usage("value count does not match the dimension");
        }
        let coeffs: Vec<Poly> = values.iter().map(|v| Poly::constant(&self.table, v.clone())).collect();
        self.combine(&coeffs)
    }
}

/// General element and the scheme that labels it.
pub fn general_element(n: usize) -> Result<(SymTensor, ParamScheme)> {
    let space = KillingSpace::new(n)?;
    Ok((space.general, space.scheme))
}

/// One symmetrized product `T^{⊙t} ⊙ X^{⊙x} ⊙ H^{⊙h}`.
#[derive(Clone, Debug)]
pub struct SymProduct {
    pub t: usize,
    pub x: usize,
    pub h: usize,
    pub tensor: SymTensor,
}

impl SymProduct {
    pub fn name(&self) -> String {
        let mut parts = Vec::new();
        for (sym, e) in [("T", self.t), ("X", self.x), ("H", self.h)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// Symmetrized product of vector fields without the `1/n!` factor: the
/// component with `c` ones is `c! (n-c)!` times the coefficient of `s^c` in
/// `Π (v^t s + v^x)`.
pub fn sym_product(fields: &[VectorFieldM]) -> Result<SymTensor> {
    let Some(first) = fields.first() else {
        return usage("empty product");
    };
    let table = first.t.table().clone();
    let n = fields.len();
    // poly_in_s[c] = coefficient of s^c
    let mut poly_in_s = vec![Poly::one(&table)];
    for v in fields {
        let mut next = vec![Poly::zero(&table); poly_in_s.len() + 1];
        for (c, coeff) in poly_in_s.iter().enumerate() {
            next[c + 1] = next[c + 1].checked_add(&coeff.checked_mul(&v.t)?)?;
            next[c] = next[c].checked_add(&coeff.checked_mul(&v.x)?)?;
        }
        poly_in_s = next;
    }
    let comps = poly_in_s
        .iter()
        .enumerate()
        .map(|(c, p)| p.scale(&(factorial(c as u32) * factorial((n - c) as u32))))
        .collect();
    SymTensor::new(comps)
}

/// All products `T^{⊙t} ⊙ X^{⊙x} ⊙ H^{⊙h}` with `t + x + h = n`, ordered by
/// the power of `H`, then by decreasing power of `T`.
pub fn sym_product_basis(n: usize) -> Result<Vec<SymProduct>> {
    if n == 0 {
        return usage("valence must be at least 1");
    }
    let table = plane_table();
    let [t, x, h] = VectorFieldM::isometry_basis(&table)?;
    let mut out = Vec::new();
    for hp in 0..=n {
        for tp in (0..=n - hp).rev() {
            let xp = n - hp - tp;
            let mut fields = vec![t.clone(); tp];
            fields.extend(std::iter::repeat_n(x.clone(), xp));
            fields.extend(std::iter::repeat_n(h.clone(), hp));
            out.push(SymProduct { t: tp, x: xp, h: hp, tensor: sym_product(&fields)? });
        }
    }
    Ok(out)
}

/// Dimension of the valence-`n` Killing tensors on an `m`-dimensional space
/// of constant curvature: `(1/m) C(m+n, n+1) C(m+n-1, n)`.
pub fn dtt_dimension(m: u64, n: u64) -> Result<u128> {
    if m == 0 || n == 0 {
        return usage("manifold dimension and valence must be at least 1");
    }
    let (m, n) = (m as u128, n as u128);
    let prod = num_integer::binomial(m + n, n + 1) * num_integer::binomial(m + n - 1, n);
    Ok(prod / m)
}

/// `(n+1)(n+2)/2`.
pub fn plane_dimension(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}
