//! JSON forms of series and polynomials. Rationals are always strings
//! `"num/den"`; words are arrays of generator indices, the empty word being
//! the unit.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rat, parse_rat, FreePoly, Poly, Rat, Ring, Series, Word};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub grade: usize,
    pub word: Vec<u32>,
    pub coeff: String,
}

/// `{order, terms: [{grade, word, coeff}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub terms: Vec<TermJson>,
}

pub fn series_to_json(s: &Series<FreePoly<Rat>>) -> SeriesJson {
    let terms = s
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(grade, c)| {
            c.terms().map(move |(w, r)| TermJson {
                grade,
                word: w.letters().to_vec(),
                coeff: format_rat(r),
            })
        })
        .collect();
    SeriesJson {
        order: s.order(),
        terms,
    }
}

/// Builds the series; repeated `(grade, word)` entries are added.
pub fn series_from_json(j: &SeriesJson) -> Result<Series<FreePoly<Rat>>, Error> {
    let mut s: Series<FreePoly<Rat>> = Series::zero(j.order);
    for (i, t) in j.terms.iter().enumerate() {
        if t.grade > j.order {
            return Err(Error::Parse(format!(
                "terms[{i}]: grade {} exceeds order {}",
                t.grade, j.order
            )));
        }
        if t.word.contains(&0) {
            return Err(Error::Parse(format!(
                "terms[{i}]: generator indices start at 1"
            )));
        }
        let c = parse_rat(&t.coeff).map_err(|e| Error::Parse(format!("terms[{i}].coeff: {e}")))?;
        let term = FreePoly::monomial(Word::new(t.word.clone()), c);
        let updated = s.coeff(t.grade).add(&term);
        s.set(t.grade, updated);
    }
    Ok(s)
}

fn json_error(e: serde_json::Error) -> Error {
    // serde_json appends "at line L column C"
    Error::Parse(e.to_string())
}

pub fn parse_series(text: &str) -> Result<Series<FreePoly<Rat>>, Error> {
    let j: SeriesJson = serde_json::from_str(text).map_err(json_error)?;
    series_from_json(&j)
}

pub fn write_series(s: &Series<FreePoly<Rat>>) -> String {
    serde_json::to_string_pretty(&series_to_json(s)).expect("serializable")
}

/// One monomial of a commutative polynomial: exponents by variable name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: BTreeMap<String, u32>,
    pub coeff: String,
}

/// A polynomial both as display text and as structured terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub display: String,
    pub terms: Vec<MonomialJson>,
}

pub fn poly_to_json(p: &Poly) -> PolyJson {
    PolyJson {
        display: p.to_string(),
        terms: p
            .terms()
            .map(|(m, c)| MonomialJson {
                exponents: m.pairs().iter().map(|(v, e)| (v.name(), *e)).collect(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}
