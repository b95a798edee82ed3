//! Printed table values, loaded from the CSV files under `data/`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};

pub const TABLE12_CSV: &str = include_str!("../../data/table1_2.csv");
pub const TABLE3_CSV: &str = include_str!("../../data/table3.csv");
pub const TABLE4_CSV: &str = include_str!("../../data/table4.csv");
pub const FIGURE1_CSV: &str = include_str!("../../data/figure1.csv");

fn reader(src: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(src.as_bytes())
}

fn rows<T: for<'de> Deserialize<'de>>(src: &str) -> Result<Vec<T>> {
    reader(src)
        .deserialize()
        .map(|r| r.map_err(|e| Error::InvalidInput(format!("fixture: {e}"))))
        .collect()
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidInput(format!("fixture: bad rational {s:?}")))
}

#[derive(Clone, Debug, Deserialize)]
struct RawClosedForm {
    table: u8,
    row: u32,
    l: i64,
    wa2: String,
    kind: String,
    params: String,
}

/// One degree-one closed form row.
#[derive(Clone, Debug)]
pub struct ClosedFormRow {
    pub table: u8,
    pub row: u32,
    pub l: i64,
    pub wa2: Rational,
    pub kind: String,
    pub params: BTreeMap<String, String>,
}

impl ClosedFormRow {
    pub fn rat(&self, key: &str) -> Result<Rational> {
        let v = self
            .params
            .get(key)
            .ok_or_else(|| Error::InvalidInput(format!("fixture row {}.{}: missing {key}", self.table, self.row)))?;
        rational(v)
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }
}

pub fn closed_form_rows() -> Result<Vec<ClosedFormRow>> {
    rows::<RawClosedForm>(TABLE12_CSV)?
        .into_iter()
        .map(|r| {
            let params = r
                .params
                .split(';')
                .filter(|kv| !kv.is_empty())
                .map(|kv| {
                    let (k, v) = kv.split_once('=').unwrap_or((kv, ""));
                    (k.trim().to_string(), v.trim().to_string())
                })
                .collect();
            Ok(ClosedFormRow { table: r.table, row: r.row, l: r.l, wa2: rational(&r.wa2)?, kind: r.kind, params })
        })
        .collect()
}

#[derive(Clone, Debug, Deserialize)]
struct RawTable3 {
    l: i64,
    wa2: String,
    index: u32,
    mu: String,
    g: String,
    #[serde(rename = "E")]
    e: String,
}

/// One printed degree-two root; numbers kept as printed strings.
#[derive(Clone, Debug)]
pub struct Table3Row {
    pub l: i64,
    pub wa2: Rational,
    pub index: u32,
    pub mu: String,
    pub g: String,
    pub e_reduced: String,
}

pub fn table3_rows() -> Result<Vec<Table3Row>> {
    rows::<RawTable3>(TABLE3_CSV)?
        .into_iter()
        .map(|r| Ok(Table3Row { l: r.l, wa2: rational(&r.wa2)?, index: r.index, mu: r.mu, g: r.g, e_reduced: r.e }))
        .collect()
}

#[derive(Clone, Debug, Deserialize)]
struct RawTable4 {
    g: String,
    #[serde(rename = "E0")]
    e0: String,
    #[serde(rename = "E1")]
    e1: String,
    #[serde(rename = "E2")]
    e2: String,
    #[serde(rename = "E3")]
    e3: String,
    it0: u32,
    it1: u32,
    it2: u32,
    it3: u32,
}

/// One printed `g` row: `Ea2` for the four lowest states.
#[derive(Clone, Debug)]
pub struct Table4Row {
    pub g: String,
    pub energies: [String; 4],
    pub iterations: [u32; 4],
}

pub const TABLE4_WA2: &str = "2";

pub fn table4_rows() -> Result<Vec<Table4Row>> {
    Ok(rows::<RawTable4>(TABLE4_CSV)?
        .into_iter()
        .map(|r| Table4Row { g: r.g, energies: [r.e0, r.e1, r.e2, r.e3], iterations: [r.it0, r.it1, r.it2, r.it3] })
        .collect())
}

#[derive(Clone, Debug, Deserialize)]
struct RawFigure {
    quantity: String,
    value: String,
}

pub fn figure1_values() -> Result<BTreeMap<String, Rational>> {
    rows::<RawFigure>(FIGURE1_CSV)?.into_iter().map(|r| Ok((r.quantity, rational(&r.value)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn fixtures_parse() {
        let cf = closed_form_rows().unwrap();
        assert_eq!(cf.iter().filter(|r| r.table == 1).count(), 10);
        assert_eq!(cf.iter().filter(|r| r.table == 2).count(), 6);
        assert_eq!(cf[0].rat("r").unwrap(), rat(961, 1));
        assert_eq!(table3_rows().unwrap().len(), 16);
        let t4 = table4_rows().unwrap();
        assert_eq!(t4.len(), 8);
        assert_eq!(t4[2].energies[0], "0.349595330721");
        assert_eq!(figure1_values().unwrap()["psi0"], rat(-49, 1));
    }
}
