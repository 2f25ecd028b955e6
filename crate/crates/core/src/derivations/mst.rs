//! Generators of the isometry action on the parameter space, obtained by
//! taking the Lie derivative of the general Killing tensor along each
//! Killing vector and reading the result back as a parameter increment.

use crate::error::{usage, Result};
use crate::killing_space::{geometric_indices, KillingSpace, SymTensor, VectorFieldM};
use crate::ratpoly::{int, Poly};

use super::Derivation;

/// Lie derivative of a contravariant symmetric tensor:
/// `(L_X K)^{i..} = X^k ∂_k K^{i..} - Σ_a K^{i..k..} ∂_k X^{i_a}`.
pub fn lie_derivative(field: &VectorFieldM, k: &SymTensor) -> Result<SymTensor> {
    let table = k.table();
    let n = k.valence();
    if n == 0 {
        return usage("valence must be at least 1");
    }
    let (it, ix) = geometric_indices(table)?;
    let xt = field.t.embed(table)?;
    let xx = field.x.embed(table)?;
    let (dt_xt, dx_xt) = (xt.diff(it), xt.diff(ix));
    let (dt_xx, dx_xx) = (xx.diff(it), xx.diff(ix));
    let c = k.components();
    let zero = Poly::zero(table);
    let mut out = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let q = n - p;
        let below = if p >= 1 { &c[p - 1] } else { &zero };
        let above = if p < n { &c[p + 1] } else { &zero };
        let transport = &(&xt * &c[p].diff(it)) + &(&xx * &c[p].diff(ix));
        let from_t = &(&c[p] * &dt_xt) + &(below * &dx_xt);
        let from_x = &(above * &dt_xx) + &(&c[p] * &dx_xx);
        let comp = &(&transport - &from_t.scale(&int(p as i64))) - &from_x.scale(&int(q as i64));
        out.push(comp);
    }
    SymTensor::new(out)
}

/// Reads a tensor in the span of the Killing tensors as the parameter
/// increment `Σ a'_ℓ ∂_{a_ℓ}` with `tensor = general(a')`.
///
/// Fails with a domain error when the tensor is not a Killing tensor.
pub fn mst_project(lk: &SymTensor, space: &KillingSpace) -> Result<Derivation> {
    let coords = space.coordinates(lk)?;
    let params = space.parameter_indices();
    Derivation::from_terms(&space.table, params.into_iter().zip(coords))
}

/// `[V1, V2, V3]` for the translations `T`, `X` and the boost `H`.
pub fn isometry_generators(space: &KillingSpace) -> Result<[Derivation; 3]> {
    let [t, x, h] = VectorFieldM::isometry_basis(&space.table)?;
    Ok([
        mst_project(&lie_derivative(&t, &space.general)?, space)?,
        mst_project(&lie_derivative(&x, &space.general)?, space)?,
        mst_project(&lie_derivative(&h, &space.general)?, space)?,
    ])
}

/// How the base-point part is attached to the parameter generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionConvention {
    /// `V1 + ∂_t`, `V2 + ∂_x`, `V3 + x∂_t + t∂_x`, exactly as usually printed.
    Printed,
    /// `V1 - ∂_t`, `V2 - ∂_x`, `V3 - (x∂_t + t∂_x)`: the parameter generators
    /// represent `-T, -X, -H`, so this is the combination that annihilates
    /// functions invariant under the joint action on parameters and points.
    #[default]
    Equivariant,
}

/// Generators on the ring of parameters and base-point coordinates.
pub fn extended_generators(space: &KillingSpace, convention: ExtensionConvention) -> Result<[Derivation; 3]> {
    let v = isometry_generators(space)?;
    let table = &space.table;
    let (it, ix) = geometric_indices(table)?;
    let t_part = Derivation::partial(table, it);
    let x_part = Derivation::partial(table, ix);
    let h_part = Derivation::from_terms(table, [(it, Poly::var_at(table, ix)), (ix, Poly::var_at(table, it))])?;
    let attach = |g: &Derivation, extra: &Derivation| match convention {
        ExtensionConvention::Printed => g.add(extra),
        ExtensionConvention::Equivariant => g.sub(extra),
    };
    Ok([attach(&v[0], &t_part)?, attach(&v[1], &x_part)?, attach(&v[2], &h_part)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::killing_space::{plane_table, sym_product};

    #[test]
    fn translation_along_itself() {
        let table = plane_table();
        let t = VectorFieldM::translation_t(&table);
        assert!(lie_derivative(&t, &t.as_tensor().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn boost_on_t_squared() {
        // L_H (T⊙T) = -2 T⊙X, consistent with [H, T] = -X
        let table = plane_table();
        let [t, x, h] = VectorFieldM::isometry_basis(&table).unwrap();
        let tt = sym_product(&[t.clone(), t.clone()]).unwrap();
        let tx = sym_product(&[t, x]).unwrap();
        assert_eq!(lie_derivative(&h, &tt).unwrap(), tx.scale(&int(-2)));
    }

    #[test]
    fn valence_one_lie_derivative_is_bracket() {
        let table = plane_table();
        let basis = VectorFieldM::isometry_basis(&table).unwrap();
        for a in &basis {
            for b in &basis {
                let lie = lie_derivative(a, &b.as_tensor().unwrap()).unwrap();
                assert_eq!(lie, a.bracket(b).unwrap().as_tensor().unwrap());
            }
        }
    }

    #[test]
    fn projection_of_zero_is_zero() {
        let space = KillingSpace::new(3).unwrap();
        let zero = SymTensor::zero(&space.table, 3).unwrap();
        assert!(mst_project(&zero, &space).unwrap().is_zero());
    }

    #[test]
    fn valence_one_translation_generator() {
        // [T, a_T T + a_X X + a_H H] = a_H X, so V1 = a_H ∂_{a_X}
        let space = KillingSpace::new(1).unwrap();
        let [v1, _, v3] = isometry_generators(&space).unwrap();
        assert_eq!(v1, Derivation::parse_terms(&space.table, &[("b1_0", "a1_1")]).unwrap());
        // [H, a_T T + a_X X] = -a_T X - a_X T
        assert_eq!(v3, Derivation::parse_terms(&space.table, &[("a1_0", "-b1_0"), ("b1_0", "-a1_0")]).unwrap());
    }

    #[test]
    fn projection_rejects_non_killing() {
        let space = KillingSpace::new(2).unwrap();
        let x = Poly::var(&space.table, "x").unwrap();
        let bad = SymTensor::new(vec![Poly::zero(&space.table), Poly::zero(&space.table), x.pow(3)]).unwrap();
        assert!(matches!(mst_project(&bad, &space), Err(crate::Error::Domain(_))));
    }
}
