//! JSON encoding: a Laurent polynomial is an array of {"q","t","c"} strings,
//! highest monomial first; a rational function is {"num","den"}.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{fmt_exp, Coeff, Mono, QTLaurent};
use super::rational::QTRational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: String,
    pub t: String,
    pub c: String,
}

pub fn fmt_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad rational '{}'", s));
    match s.split_once('/') {
        None => Ok(Coeff::from_integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(Coeff::new(n, d))
        }
    }
}

/// Parses "a" or "a/2" into a doubled exponent.
pub fn parse_exp(s: &str) -> Result<i32> {
    let bad = || Error::Parse(format!("bad exponent '{}'", s));
    match s.split_once('/') {
        None => Ok(2 * s.trim().parse::<i32>().map_err(|_| bad())?),
        Some((n, "2")) => n.trim().parse::<i32>().map_err(|_| bad()),
        Some(_) => Err(bad()),
    }
}

pub fn laurent_to_json(p: &QTLaurent) -> Vec<TermJson> {
    p.terms()
        .iter()
        .rev()
        .map(|(m, c)| TermJson { q: fmt_exp(m.q2), t: fmt_exp(m.t2), c: fmt_coeff(c) })
        .collect()
}

pub fn laurent_from_json(ts: &[TermJson]) -> Result<QTLaurent> {
    let mut v = Vec::with_capacity(ts.len());
    for t in ts {
        v.push((Mono::doubled(parse_exp(&t.q)?, parse_exp(&t.t)?), parse_coeff(&t.c)?));
    }
    Ok(QTLaurent::from_terms(v))
}

impl Serialize for QTLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        laurent_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        laurent_from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: QTLaurent,
    den: QTLaurent,
}

impl Serialize for QTRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (num, den) = self.canonical_parts();
        RationalJson { num, den }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RationalJson::deserialize(d)?;
        QTRational::from_num_den(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    bound: i64,
    terms: &'a QTLaurent,
}

impl Serialize for super::series::QTSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson { bound: self.bound(), terms: self.poly() }.serialize(s)
    }
}
