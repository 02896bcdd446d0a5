//! Serde adapters that keep integers exact in JSON.
//!
//! Values with magnitude at most 2^53 are written as JSON numbers; larger
//! values are written as decimal strings so that consumers backed by IEEE
//! doubles never round them. Both forms are accepted on input.
//!
//! Use through `#[serde(with = "crate::json::exact")]` and friends.

use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

const SAFE_LIMIT: u64 = 1 << 53;

/// Integer types that round-trip through the exact JSON encoding.
pub trait ExactInt: Sized {
    fn to_big(&self) -> BigInt;
    fn from_big(value: BigInt) -> Option<Self>;
}

impl ExactInt for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn from_big(value: BigInt) -> Option<Self> {
        Some(value)
    }
}

macro_rules! exact_prim {
    ($($t:ty => $conv:ident),*) => {$(
        impl ExactInt for $t {
            fn to_big(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_big(value: BigInt) -> Option<Self> {
                value.$conv()
            }
        }
    )*};
}

exact_prim!(i64 => to_i64, u64 => to_u64, u32 => to_u32, usize => to_usize);

fn write<T: ExactInt, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
    let big = value.to_big();
    if big.abs() <= BigInt::from(SAFE_LIMIT) {
        // fits in i64 by construction
        serializer.serialize_i64(big.to_i64().expect("bounded by 2^53"))
    } else {
        serializer.serialize_str(&big.to_string())
    }
}

struct ExactVisitor<T>(PhantomData<T>);

impl<T: ExactInt> ExactVisitor<T> {
    fn finish<E: de::Error>(big: BigInt) -> Result<T, E> {
        let text = big.to_string();
        T::from_big(big).ok_or_else(|| E::custom(format!("integer {text} out of range")))
    }
}

impl<'de, T: ExactInt> Visitor<'de> for ExactVisitor<T> {
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
        Self::finish(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
        Self::finish(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
        let big: BigInt = v
            .trim()
            .parse()
            .map_err(|_| E::custom(format!("invalid integer string {v:?}")))?;
        Self::finish(big)
    }
}

fn read<'de, T: ExactInt, D: Deserializer<'de>>(deserializer: D) -> Result<T, D::Error> {
    deserializer.deserialize_any(ExactVisitor(PhantomData))
}

struct Ser<'a, T>(&'a T);

impl<T: ExactInt> Serialize for Ser<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        write(self.0, serializer)
    }
}

struct De<T>(T);

impl<'de, T: ExactInt> Deserialize<'de> for De<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        read(deserializer).map(De)
    }
}

pub mod exact {
    use super::*;

    pub fn serialize<T: ExactInt, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        write(v, s)
    }

    pub fn deserialize<'de, T: ExactInt, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        read(d)
    }
}

pub mod exact_opt {
    use super::*;

    pub fn serialize<T: ExactInt, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(Ser).serialize(s)
    }

    pub fn deserialize<'de, T: ExactInt, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<T>, D::Error> {
        Ok(Option::<De<T>>::deserialize(d)?.map(|x| x.0))
    }
}

pub mod exact_vec {
    use super::*;

    pub fn serialize<T: ExactInt, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(Ser))
    }

    pub fn deserialize<'de, T: ExactInt, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        Ok(Vec::<De<T>>::deserialize(d)?.into_iter().map(|x| x.0).collect())
    }
}

pub mod exact_opt_vec {
    use super::*;

    pub fn serialize<T: ExactInt, S: Serializer>(v: &[Option<T>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.as_ref().map(Ser)))
    }

    pub fn deserialize<'de, T: ExactInt, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<Option<T>>, D::Error> {
        Ok(Vec::<Option<De<T>>>::deserialize(d)?
            .into_iter()
            .map(|x| x.map(|y| y.0))
            .collect())
    }
}

pub mod exact_rows {
    use super::*;

    pub fn serialize<T: ExactInt, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|row| row.iter().map(Ser).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, T: ExactInt, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<Vec<T>>, D::Error> {
        Ok(Vec::<Vec<De<T>>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.0).collect())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Probe {
        #[serde(with = "exact")]
        big: BigInt,
        #[serde(with = "exact_opt")]
        small: Option<i64>,
        #[serde(with = "exact_vec")]
        list: Vec<u64>,
    }

    #[test]
    fn large_values_become_strings() {
        let p = Probe {
            big: BigInt::from(1u64 << 60),
            small: Some(-7),
            list: vec![1, (1 << 53) + 1],
        };
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"big":"1152921504606846976","small":-7,"list":[1,"9007199254740993"]}"#
        );
        let back: Probe = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn boundary_stays_numeric() {
        let p = Probe { big: BigInt::from(-(1i64 << 53)), small: None, list: vec![1 << 53] };
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("-9007199254740992"));
        assert!(!text.contains('"') || !text.contains("\"9007199254740992\""));
        let back: Probe = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn out_of_range_rejected() {
        let r: Result<Probe, _> =
            serde_json::from_str(r#"{"big":1,"small":"99999999999999999999","list":[]}"#);
        assert!(r.is_err());
    }
}
