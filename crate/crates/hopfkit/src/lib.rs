//! JSON interchange for structure-constant Hopf algebras, plus report
//! rendering shared by the command-line front end.
//!
//! The file format is exact: every scalar is a field-element literal in the
//! basis `{1, z, z2, z3}` of the cyclotomic field, `z^4 = -1`, with `xi`
//! and `sqrt2` accepted as parsing aliases.

use hopf_core::hopf::{sp_eq, sp_unit, FinHopf, Sparse};
use hopf_core::linalg::Matrix;
use hopf_core::report::{Report, Status};
use hopf_core::scalar::FieldElement;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad field literal at {location}: {literal}")]
    Literal { location: String, literal: String },
    #[error("index out of range at {location}")]
    IndexRange { location: String },
    #[error("inconsistent shape: {0}")]
    Shape(String),
    #[error("no two-sided unit found")]
    NoUnit,
}

/// On-disk schema: structure constants with field-element literals.
#[derive(Serialize, Deserialize)]
pub struct HopfJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<(usize, usize, Vec<(usize, String)>)>,
    pub comult: Vec<(usize, Vec<(usize, usize, String)>)>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

pub fn to_json(h: &FinHopf) -> HopfJson {
    let mut mult = Vec::new();
    for i in 0..h.dim {
        for j in 0..h.dim {
            let entry = h.mul_basis(i, j);
            if !entry.is_empty() {
                mult.push((
                    i,
                    j,
                    entry
                        .iter()
                        .map(|(k, c)| (*k as usize, c.to_string()))
                        .collect(),
                ));
            }
        }
    }
    let comult = (0..h.dim)
        .map(|i| {
            (
                i,
                h.comult[i]
                    .iter()
                    .map(|(j, k, c)| (*j as usize, *k as usize, c.to_string()))
                    .collect(),
            )
        })
        .collect();
    let counit = h.counit.iter().map(|c| c.to_string()).collect();
    let antipode = (0..h.dim)
        .map(|r| (0..h.dim).map(|c| h.antipode.get(r, c).to_string()).collect())
        .collect();
    HopfJson {
        dim: h.dim,
        basis: h.labels.clone(),
        mult,
        comult,
        counit,
        antipode,
    }
}

pub fn export_string(h: &FinHopf) -> String {
    serde_json::to_string_pretty(&to_json(h)).expect("serializable")
}

fn parse_lit(s: &str, location: &str) -> Result<FieldElement, SchemaError> {
    FieldElement::parse(s).map_err(|_| SchemaError::Literal {
        location: location.into(),
        literal: s.into(),
    })
}

pub fn from_json(doc: &HopfJson) -> Result<FinHopf, SchemaError> {
    let n = doc.dim;
    if doc.basis.len() != n {
        return Err(SchemaError::Shape(format!(
            "basis has {} labels for dimension {n}",
            doc.basis.len()
        )));
    }
    if doc.counit.len() != n || doc.comult.len() != n || doc.antipode.len() != n {
        return Err(SchemaError::Shape("counit/comult/antipode length".into()));
    }
    let mut mult = vec![Vec::new(); n * n];
    for (i, j, terms) in &doc.mult {
        if *i >= n || *j >= n {
            return Err(SchemaError::IndexRange {
                location: format!("mult ({i}, {j})"),
            });
        }
        let mut entry: Sparse = Vec::new();
        for (k, lit) in terms {
            if *k >= n {
                return Err(SchemaError::IndexRange {
                    location: format!("mult ({i}, {j}) -> {k}"),
                });
            }
            let c = parse_lit(lit, &format!("mult ({i}, {j})"))?;
            if !c.is_zero() {
                entry.push((*k as u32, c));
            }
        }
        entry.sort_by_key(|(k, _)| *k);
        mult[i * n + j] = entry;
    }
    let mut comult = vec![Vec::new(); n];
    for (i, terms) in &doc.comult {
        if *i >= n {
            return Err(SchemaError::IndexRange {
                location: format!("comult {i}"),
            });
        }
        let mut entry = Vec::new();
        for (j, k, lit) in terms {
            if *j >= n || *k >= n {
                return Err(SchemaError::IndexRange {
                    location: format!("comult {i} -> ({j}, {k})"),
                });
            }
            let c = parse_lit(lit, &format!("comult {i}"))?;
            if !c.is_zero() {
                entry.push((*j as u32, *k as u32, c));
            }
        }
        comult[*i] = entry;
    }
    let counit = doc
        .counit
        .iter()
        .enumerate()
        .map(|(i, lit)| parse_lit(lit, &format!("counit {i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut antipode = Matrix::zero(n, n);
    for (r, row) in doc.antipode.iter().enumerate() {
        if row.len() != n {
            return Err(SchemaError::Shape(format!("antipode row {r}")));
        }
        for (c, lit) in row.iter().enumerate() {
            antipode.set(r, c, parse_lit(lit, &format!("antipode ({r}, {c})"))?);
        }
    }
    let mut h = FinHopf {
        dim: n,
        labels: doc.basis.clone(),
        unit: Vec::new(),
        mult,
        comult,
        counit,
        antipode,
    };
    h.unit = recover_unit(&h)?;
    Ok(h)
}

pub fn import_string(s: &str) -> Result<FinHopf, SchemaError> {
    let doc: HopfJson = serde_json::from_str(s)?;
    from_json(&doc)
}

/// The unit is not stored: it is the unique two-sided identity, solved from
/// right multiplication against successive basis elements and then verified.
fn recover_unit(h: &FinHopf) -> Result<Sparse, SchemaError> {
    let n = h.dim;
    for j in 0..n {
        // solve sum_i u_i (e_i e_j) = e_j
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                let cur = m.get(*k as usize, i).clone();
                m.set(*k as usize, i, &cur + c);
            }
        }
        let mut rhs = Matrix::zero(n, 1);
        rhs.set(j, 0, FieldElement::one());
        let Some(sol) = m.solve(&rhs) else { continue };
        let u: Sparse = (0..n)
            .filter(|&i| !sol.get(i, 0).is_zero())
            .map(|i| (i as u32, sol.get(i, 0).clone()))
            .collect();
        let is_identity = (0..n).all(|t| {
            let e = sp_unit(t);
            sp_eq(&h.mul_sparse(&u, &e), &e) && sp_eq(&h.mul_sparse(&e, &u), &e)
        });
        if is_identity {
            return Ok(u);
        }
    }
    Err(SchemaError::NoUnit)
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    status: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    target: &'a str,
    checks: Vec<CheckJson<'a>>,
    summary: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::MismatchLogged => "mismatch-logged",
    }
}

pub fn render_text(rep: &Report, timing_ms: Option<u128>) -> String {
    let mut out = String::new();
    out.push_str(&format!("== {}\n", rep.target));
    for c in &rep.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::MismatchLogged => "MISMATCH-LOGGED",
        };
        if c.detail.is_empty() {
            out.push_str(&format!("[{tag}] {}\n", c.name));
        } else {
            out.push_str(&format!("[{tag}] {} - {}\n", c.name, c.detail));
        }
    }
    out.push_str(&format!(
        "summary: {}\n",
        if rep.passed() { "pass" } else { "fail" }
    ));
    if let Some(ms) = timing_ms {
        out.push_str(&format!("timing: {ms} ms\n"));
    }
    out
}

pub fn render_json(rep: &Report, timing_ms: Option<u128>) -> String {
    let doc = ReportJson {
        target: &rep.target,
        checks: rep
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                status: status_str(c.status),
                detail: &c.detail,
            })
            .collect(),
        summary: if rep.passed() { "pass" } else { "fail" },
        timing_ms,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}
