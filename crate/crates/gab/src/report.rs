//! CSV output: the class census and family verdict lines.

use std::io::Write;

use gabidulin_core::deephole::{ClassRecord, FamilyVerdict, Witness};
use gabidulin_core::{Elem, FieldCtx, LinPoly, Metric};

use crate::error::{Error, Result};
use crate::parse::{format_elems, parse_codes, parse_elems};

pub const CENSUS_HEADER: [&str; 6] = ["class_id", "coeffs", "metric", "distance", "is_deep_hole", "witness"];
pub const VERDICT_HEADER: [&str; 5] = ["family", "params", "predicted", "observed", "agree"];

fn witness_text(w: &Option<Witness>) -> String {
    w.as_ref().map(|w| w.to_string()).unwrap_or_default()
}

pub fn write_census<W: Write>(out: W, records: &[ClassRecord]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(CENSUS_HEADER)?;
    for r in records {
        wtr.write_record([
            r.class_id.to_string(),
            format_elems(r.poly.coeffs()),
            r.result.metric.to_string(),
            r.result.distance.to_string(),
            r.result.is_deep_hole.to_string(),
            witness_text(&r.result.witness),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}

/// One parsed census row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub class_id: u64,
    pub poly: LinPoly,
    pub metric: Metric,
    pub distance: usize,
    pub is_deep_hole: bool,
    pub witness: Option<Witness>,
}

fn parse_witness(ctx: &FieldCtx, text: &str) -> Result<Option<Witness>> {
    if text.is_empty() {
        return Ok(None);
    }
    let bad = || Error::Parse(format!("bad witness `{text}`"));
    let (tag, body) = text.split_once(':').ok_or_else(bad)?;
    match tag {
        "span" => Ok(Some(Witness::Subspace(parse_elems(ctx, body)?))),
        "points" => {
            let ix = parse_codes(body)?
                .into_iter()
                .map(|i| i.checked_sub(1).map(|i| i as usize).ok_or_else(bad))
                .collect::<Result<_>>()?;
            Ok(Some(Witness::Subset(ix)))
        }
        _ => Err(bad()),
    }
}

pub fn read_census<R: std::io::Read>(ctx: &FieldCtx, input: R) -> Result<Vec<CensusRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    if rdr.headers()?.iter().ne(CENSUS_HEADER) {
        return Err(Error::Parse("unexpected census header".into()));
    }
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let num = |i: usize| {
            field(i)
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{}`", field(i))))
        };
        rows.push(CensusRow {
            class_id: num(0)?,
            poly: LinPoly::new(parse_elems(ctx, field(1))?),
            metric: field(2).parse()?,
            distance: num(3)? as usize,
            is_deep_hole: field(4)
                .parse()
                .map_err(|_| Error::Parse(format!("bad flag `{}`", field(4))))?,
            witness: parse_witness(ctx, field(5))?,
        });
    }
    Ok(rows)
}

/// Parameters of a family instance, as `key=value` pairs joined by `;`.
pub fn params_text(pairs: &[(&str, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn elem_text(e: Elem) -> String {
    e.code().to_string()
}

pub struct VerdictWriter<W: Write> {
    wtr: csv::Writer<W>,
}

impl<W: Write> VerdictWriter<W> {
    pub fn new(out: W) -> Result<Self> {
        let mut wtr = csv::Writer::from_writer(out);
        wtr.write_record(VERDICT_HEADER)?;
        Ok(VerdictWriter { wtr })
    }

    pub fn write(&mut self, params: &str, v: &FamilyVerdict) -> Result<()> {
        let observed = if v.result.is_deep_hole {
            "deep_hole"
        } else {
            "not_deep_hole"
        };
        self.wtr.write_record([
            v.family,
            params,
            &v.predicted.to_string(),
            observed,
            &v.agrees.to_string(),
        ])?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.wtr.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::{Caps, Runner};
    use gabidulin_core::GabidulinCode;

    #[test]
    fn census_rows_round_trip() {
        let f = FieldCtx::new(2, 1, 3, None).unwrap();
        let code = GabidulinCode::new(&f, [1, 2, 4].map(Elem::from_code).to_vec(), 1).unwrap();
        let runner = Runner::new(2, Caps::default()).unwrap();
        for metric in [Metric::Rank, Metric::Hamming] {
            let records = runner.census(&code, metric).unwrap();
            let mut buf = Vec::new();
            write_census(&mut buf, &records).unwrap();
            let text = String::from_utf8(buf.clone()).unwrap();
            assert!(text.starts_with("class_id,coeffs,metric,distance,is_deep_hole,witness\n"));
            let rows = read_census(&f, buf.as_slice()).unwrap();
            assert_eq!(rows.len(), 64);
            for (row, rec) in rows.iter().zip(&records) {
                assert_eq!(row.class_id, rec.class_id);
                assert_eq!(row.poly, rec.poly);
                assert_eq!(row.metric, metric);
                assert_eq!(row.distance, rec.result.distance);
                assert_eq!(row.is_deep_hole, rec.result.is_deep_hole);
                assert_eq!(row.witness, rec.result.witness);
            }
        }
    }
}
