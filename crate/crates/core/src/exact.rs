//! JSON form of exact rationals: `[numerator, denominator]`, each a JSON
//! integer, or a decimal string when it does not fit in 64 bits. Nested
//! vectors of rationals map to nested arrays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| JsonInt::Big(v.to_string()), JsonInt::Small)
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

pub trait ExactRepr: Sized {
    type Repr: Serialize + DeserializeOwned;
    fn to_repr(&self) -> Self::Repr;
    fn from_repr(repr: Self::Repr) -> Result<Self, String>;
}

impl ExactRepr for BigRational {
    type Repr = [JsonInt; 2];

    fn to_repr(&self) -> Self::Repr {
        [JsonInt::from_big(self.numer()), JsonInt::from_big(self.denom())]
    }

    fn from_repr([num, den]: Self::Repr) -> Result<Self, String> {
        let den = den.to_big()?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num.to_big()?, den))
    }
}

impl<T: ExactRepr> ExactRepr for Vec<T> {
    type Repr = Vec<T::Repr>;

    fn to_repr(&self) -> Self::Repr {
        self.iter().map(ExactRepr::to_repr).collect()
    }

    fn from_repr(repr: Self::Repr) -> Result<Self, String> {
        repr.into_iter().map(T::from_repr).collect()
    }
}

pub fn serialize<T: ExactRepr, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    v.to_repr().serialize(s)
}

pub fn deserialize<'de, T: ExactRepr, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    T::from_repr(T::Repr::deserialize(d)?).map_err(serde::de::Error::custom)
}
