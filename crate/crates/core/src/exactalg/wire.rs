//! JSON wire formats.
//!
//! * `LaurentPoly`: `[[exponent, coefficient], ...]` with strictly increasing
//!   exponents, e.g. `[[0,1],[1,-1]]` for `1 - t`.
//! * `RationalFunction`: `{"num": poly, "den": poly}`.
//! * `UnitClass`: `{"scalar": "p/q", "num": poly, "den": poly, "ambiguity": "pm_tk"}`.
//! * `TruncatedSeries` (output only): `{"precision": N, "terms": [[e, "p/q"], ...]}`.
//!
//! Integers that do not fit in 64 bits are written as decimal strings; both
//! forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::coeff::{parse_rational, rational_to_string};
use super::laurent::ZPoly;
use super::rational::RationalFunction;
use super::series::TruncatedSeries;
use super::unit::{Ambiguity, UnitClass};

/// Big integer that serializes as a JSON number when it fits in `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WireInt(pub BigInt);

impl Serialize for WireInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for WireInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = WireInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<WireInt, E> {
                Ok(WireInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<WireInt, E> {
                Ok(WireInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<WireInt, E> {
                v.parse::<BigInt>()
                    .map(WireInt)
                    .map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, WireInt(c.clone())))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ZPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<ZPoly, A::Error> {
                let mut terms = Vec::new();
                let mut last: Option<i64> = None;
                while let Some((e, c)) = seq.next_element::<(i64, WireInt)>()? {
                    if last.is_some_and(|l| e <= l) {
                        return Err(de::Error::custom(format!(
                            "exponents must be strictly increasing (saw {e} after {})",
                            last.unwrap_or_default()
                        )));
                    }
                    last = Some(e);
                    if !c.0.is_zero() {
                        terms.push((e, c.0));
                    }
                }
                Ok(ZPoly::from_terms(terms))
            }
        }
        d.deserialize_seq(V)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalWire {
    num: ZPoly,
    den: ZPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // integer numerator and denominator: clear the scalar's denominator
        let (num, den) = integer_parts(self);
        RationalWire { num, den }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = RationalWire::deserialize(d)?;
        RationalFunction::new(&w.num, &w.den).map_err(de::Error::custom)
    }
}

/// Integer numerator and denominator polynomials representing `f`.
pub fn integer_parts(f: &RationalFunction) -> (ZPoly, ZPoly) {
    if f.is_zero() {
        return (ZPoly::zero(), ZPoly::one());
    }
    let s = f.scalar();
    let num = f
        .num_poly()
        .shift(f.shift_exponent())
        .scale(s.numer());
    let den = f.den_poly().scale(s.denom());
    (num, den)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UnitClassWire {
    scalar: String,
    num: ZPoly,
    den: ZPoly,
    ambiguity: Ambiguity,
}

impl Serialize for UnitClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        UnitClassWire {
            scalar: rational_to_string(self.scalar()),
            num: self.num().clone(),
            den: self.den().clone(),
            ambiguity: self.ambiguity(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnitClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = UnitClassWire::deserialize(d)?;
        let scalar: BigRational = parse_rational(&w.scalar)
            .ok_or_else(|| de::Error::custom(format!("bad scalar {:?}", w.scalar)))?;
        let f = RationalFunction::new(&w.num, &w.den).map_err(de::Error::custom)?;
        let f = &f * &RationalFunction::from_scalar(scalar);
        UnitClass::new(&f, w.ambiguity).map_err(de::Error::custom)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct SeriesWire {
            precision: i64,
            terms: Vec<(i64, String)>,
        }
        SeriesWire {
            precision: self.precision(),
            terms: self.terms().map(|(e, c)| (e, rational_to_string(c))).collect(),
        }
        .serialize(s)
    }
}
