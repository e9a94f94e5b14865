//! JSON record shapes the CLI writes for regions, divides, braids, and the census.

use divides::braid::BraidWord;
use divides::families::FamilySpec;
use divides::tracer::CensusRow;
use divides::{Divide, LaurentPoly, Region};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Region-plus-invariants record. The `stairs`/`offset` fields are the
/// region's own serialized form, so the whole record re-parses as a
/// [`Region`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivideRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub stairs: Vec<(i64, i64)>,
    pub offset: (i64, i64),
    pub area: i64,
    pub concave_points: usize,
    pub double_points: usize,
    pub arcs: usize,
    pub circles: usize,
    pub link_components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
}

impl DivideRecord {
    pub fn new(family: Option<FamilySpec>, region: &Region, divide: &Divide) -> Self {
        let (arcs, circles) = divide.component_profile();
        DivideRecord {
            family: family.map(|s| s.to_string()),
            stairs: region.stair.entries().to_vec(),
            offset: region.offset,
            area: region.area_cell_count(),
            concave_points: region.concave_points().len(),
            double_points: divide.double_point_count(),
            arcs,
            circles,
            link_components: divide.link_component_count(),
            knot: family.and_then(|s| s.expected_knot().ok()).map(|k| k.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BraidRecord {
    pub family: String,
    pub strands: usize,
    pub letters: usize,
    pub word: String,
    pub double_points: usize,
    pub alexander: String,
    pub degree: i64,
}

impl BraidRecord {
    pub fn new(spec: FamilySpec, divide: &Divide, word: &BraidWord, delta: &LaurentPoly) -> Self {
        BraidRecord {
            family: spec.to_string(),
            strands: word.strands,
            letters: word.letters.len(),
            word: word.to_string(),
            double_points: divide.double_point_count(),
            alexander: delta.to_string(),
            degree: delta.span().unwrap_or(0),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusRecord {
    pub stairs: Vec<(i64, i64)>,
    pub arcs: Option<usize>,
    pub circles: Option<usize>,
}

impl From<&CensusRow> for CensusRecord {
    fn from(row: &CensusRow) -> Self {
        CensusRecord {
            stairs: row.stair.entries().to_vec(),
            arcs: row.profile.map(|p| p.0),
            circles: row.profile.map(|p| p.1),
        }
    }
}

fn stair_text(stairs: &[(i64, i64)]) -> String {
    let mut out = String::from("[");
    for (i, (a, b)) in stairs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "({a},{b})").unwrap();
    }
    out.push(']');
    out
}

/// Census as unquoted CSV with a header row; untraceable staircases leave
/// their profile cells empty.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("stair,arcs,circles\n");
    for row in rows {
        out.push_str(&stair_text(row.stair.entries()));
        match row.profile {
            Some((arcs, circles)) => writeln!(out, ",{arcs},{circles}").unwrap(),
            None => out.push_str(",,\n"),
        }
    }
    out
}

pub fn census_json(rows: &[CensusRow]) -> String {
    let records: Vec<CensusRecord> = rows.iter().map(CensusRecord::from).collect();
    let mut text = serde_json::to_string_pretty(&records).expect("census records serialize");
    text.push('\n');
    text
}
