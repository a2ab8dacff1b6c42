//! Exact scalars: rationals, Gaussian rationals, Puiseux polynomials and the
//! valued field `K`.

pub mod gaussian;
pub mod puiseux;
pub mod rational;
pub mod valued;

pub use gaussian::GaussianRational;
pub use puiseux::PuiseuxPoly;
pub use rational::{q, Rational};
pub use valued::{scalar_arith, ScalarOp, Valuation, ValuedScalar};

impl std::str::FromStr for ValuedScalar {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        crate::expr::parse_scalar(s)
    }
}

impl serde::Serialize for ValuedScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ValuedScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let s = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("expected scalar string, got {other}"))),
        };
        s.parse().map_err(serde::de::Error::custom)
    }
}
