//! The two parameter spaces the crate works with, behind one interface.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::derivations::cayley::{cayley_generators, BinaryForm};
use crate::derivations::mst::isometry_generators;
use crate::derivations::Derivation;
use crate::error::{usage, Result};
use crate::killing_space::KillingSpace;
use crate::ratpoly::{Poly, VarTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Binary forms of degree `n` under unimodular substitutions.
    Cit,
    /// Killing tensors of valence `n` on the Minkowski plane under isometries.
    Itkt,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Cit => "cit",
            FamilyKind::Itkt => "itkt",
        })
    }
}

#[derive(Clone, Debug)]
pub enum FamilySpace {
    Cit(BinaryForm),
    Itkt(Box<KillingSpace>),
}

impl FamilySpace {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n == 0 {
            return usage("n must be at least 1");
        }
        Ok(match kind {
            FamilyKind::Cit => FamilySpace::Cit(BinaryForm::new(n)?),
            FamilyKind::Itkt => FamilySpace::Itkt(Box::new(KillingSpace::new(n)?)),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpace::Cit(_) => FamilyKind::Cit,
            FamilySpace::Itkt(_) => FamilyKind::Itkt,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            FamilySpace::Cit(f) => f.degree,
            FamilySpace::Itkt(k) => k.valence(),
        }
    }

    /// Geometric coordinates followed by the parameters.
    pub fn table(&self) -> &Arc<VarTable> {
        match self {
            FamilySpace::Cit(f) => &f.table,
            FamilySpace::Itkt(k) => &k.table,
        }
    }

    pub fn parameter_indices(&self) -> Vec<usize> {
        match self {
            FamilySpace::Cit(f) => f.parameter_indices(),
            FamilySpace::Itkt(k) => k.parameter_indices(),
        }
    }

    pub fn parameter_names(&self) -> Vec<String> {
        self.parameter_indices().into_iter().map(|i| self.table().name(i).to_string()).collect()
    }

    /// Dimension of the parameter space.
    pub fn dimension(&self) -> usize {
        self.parameter_indices().len()
    }

    /// `[V-, V0, V+]` for forms, `[V1, V2, V3]` for Killing tensors.
    pub fn generators(&self) -> Result<[Derivation; 3]> {
        match self {
            FamilySpace::Cit(f) => cayley_generators(f),
            FamilySpace::Itkt(k) => isometry_generators(k),
        }
    }

    pub fn generator_names(&self) -> [&'static str; 3] {
        match self {
            FamilySpace::Cit(_) => ["V-", "V0", "V+"],
            FamilySpace::Itkt(_) => ["V1", "V2", "V3"],
        }
    }

    pub fn id(&self) -> String {
        format!("{}-{}", self.kind(), self.n())
    }

    /// Known invariants for this family, with display names: the three
    /// classical invariants at valence 2, the top rotation parameter at other
    /// valences, and the discriminant for quadratic and cubic forms.
    pub fn reference_invariants(&self) -> Result<Vec<(String, Poly)>> {
        let texts: Vec<(String, String)> = match (self, self.n()) {
            (FamilySpace::Itkt(_), 2) => vec![
                ("Delta1".into(), "a5".into()),
                ("Delta2".into(), "(a0 - a2)*a5 - a3^2 + a4^2".into()),
                ("Delta3".into(), "(a3^2 + a4^2 - a5*(a0 + a2))^2 - 4*(a5*a1 - a3*a4)^2".into()),
            ],
            (FamilySpace::Itkt(_), n) => vec![(format!("a1_{n}"), format!("a1_{n}"))],
            (FamilySpace::Cit(_), 2) => vec![("Delta1".into(), "a0*a2 - a1^2".into())],
            (FamilySpace::Cit(_), 3) => vec![(
                "discriminant".into(),
                "a0^2*a3^2 - 6*a0*a1*a2*a3 + 4*a0*a2^3 + 4*a1^3*a3 - 3*a1^2*a2^2".into(),
            )],
            _ => Vec::new(),
        };
        texts.into_iter().map(|(name, text)| Ok((name, Poly::parse(self.table(), &text)?))).collect()
    }
}
