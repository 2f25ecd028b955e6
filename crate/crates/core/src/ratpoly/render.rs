//! Canonical text and JSON renderings.
//!
//! Text: terms in descending graded-lex order, factors in table order joined
//! by `*`, powers as `name^e`, unit coefficients omitted, fractions as `p/q*`.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, Poly, Rational};

pub(super) fn write_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        let mono = render_monomial(p, m);
        if mono.is_empty() {
            write_rational(&abs, f)?;
        } else {
            if !abs.is_one() {
                write_rational(&abs, f)?;
                f.write_str("*")?;
            }
            f.write_str(&mono)?;
        }
    }
    Ok(())
}

fn write_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn render_monomial(p: &Poly, m: &Monomial) -> String {
    let mut factors = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(p.table().name(i).to_string()),
            _ => factors.push(format!("{}^{}", p.table().name(i), e)),
        }
    }
    factors.join("*")
}

/// One polynomial term in the JSON rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// Serialized as `{"text": <canonical text>, "terms": [TermJson, ..]}`.
impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Poly", 2)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("terms", &to_json_terms(self))?;
        st.end()
    }
}

pub(super) fn to_json_terms(p: &Poly) -> Vec<TermJson> {
    p.terms()
        .rev()
        .map(|(m, c)| TermJson {
            exponents: m.exps().to_vec(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use crate::ratpoly::{Poly, VarKind, VarTable};

    #[test]
    fn canonical_text() {
        let v = VarTable::new([("t", VarKind::Geometric), ("x", VarKind::Geometric), ("a0", VarKind::Parameter)])
            .unwrap();
        let p = Poly::parse(&v, "a0 - 1/2*t*x + x^3 - 1").unwrap();
        assert_eq!(p.to_string(), "x^3 - 1/2*t*x + a0 - 1");
        assert_eq!(Poly::zero(&v).to_string(), "0");
        assert_eq!(Poly::parse(&v, "-3/5").unwrap().to_string(), "-3/5");
        let again = Poly::parse(&v, &p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn json_terms() {
        let v = VarTable::new([("x", VarKind::Geometric)]).unwrap();
        let p = Poly::parse(&v, "2/3*x^2 - 1").unwrap();
        let j = p.to_json_terms();
        assert_eq!(j.len(), 2);
        assert_eq!(j[0].exponents, vec![2]);
        assert_eq!((j[0].num.as_str(), j[0].den.as_str()), ("2", "3"));
        assert_eq!((j[1].num.as_str(), j[1].den.as_str()), ("-1", "1"));
    }
}
