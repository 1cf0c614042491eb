//! JSON instance files.
//!
//! ```text
//! {"n":1,"m":1,"k":1,"points":2,"endpoints":[[0,1]],"candidates":[1],
//!  "walk":[0,"inf",0],"transit":[0]}
//! ```
//!
//! `walk` and `transit` hold the row-major lower triangle including the
//! diagonal; the string `"inf"` encodes infinity. An optional
//! `candidate_labels` array names the candidates.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clustering::LineClusteringInstance;
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::model::Instance;

#[derive(Clone, Copy, Debug, PartialEq)]
struct Real(f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Real, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Real;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or the string \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Real, E> {
                Ok(Real(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Real, E> {
                Ok(Real(v as f64))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Real, E> {
                Ok(Real(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Real, E> {
                match v {
                    "inf" | "Infinity" | "+inf" => Ok(Real(f64::INFINITY)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: usize,
    m: usize,
    k: usize,
    points: usize,
    endpoints: Vec<[usize; 2]>,
    candidates: Vec<usize>,
    walk: Vec<Real>,
    transit: Vec<Real>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    candidate_labels: Option<Vec<String>>,
}

fn reals(m: &Metric, field: &str) -> Result<Vec<Real>> {
    let tri = m.lower_triangle();
    if tri.iter().any(|x| x.is_nan() || *x == f64::NEG_INFINITY) {
        return Err(Error::InvalidMetric(format!("{field} contains an entry that cannot be written")));
    }
    Ok(tri.into_iter().map(Real).collect())
}

/// Canonical JSON text of an instance.
pub fn instance_to_json(inst: &Instance) -> Result<String> {
    let file = InstanceFile {
        n: inst.n(),
        m: inst.m(),
        k: inst.k(),
        points: inst.points(),
        endpoints: inst.endpoints().iter().map(|&(a, b)| [a, b]).collect(),
        candidates: inst.candidates().to_vec(),
        walk: reals(inst.walk(), "walk")?,
        transit: reals(inst.transit(), "transit")?,
        candidate_labels: inst.labels().map(|l| l.to_vec()),
    };
    let mut s = serde_json::to_string(&file).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.endpoints.len() != file.n {
        return Err(Error::Parse(format!("field `endpoints`: {} entries but n = {}", file.endpoints.len(), file.n)));
    }
    if file.candidates.len() != file.m {
        return Err(Error::Parse(format!("field `candidates`: {} entries but m = {}", file.candidates.len(), file.m)));
    }
    let unwrap = |v: Vec<Real>| v.into_iter().map(|r| r.0).collect::<Vec<f64>>();
    let walk = Metric::from_lower_triangle(file.points, &unwrap(file.walk))
        .map_err(|e| Error::Parse(format!("field `walk`: {e}")))?;
    let transit = Metric::from_lower_triangle(file.m, &unwrap(file.transit))
        .map_err(|e| Error::Parse(format!("field `transit`: {e}")))?;
    let endpoints = file.endpoints.into_iter().map(|[a, b]| (a, b)).collect();
    let inst = Instance::new(endpoints, file.candidates, walk, transit, file.k)?;
    match file.candidate_labels {
        Some(l) => inst.with_labels(l).map_err(|e| Error::Parse(format!("field `candidate_labels`: {e}"))),
        None => Ok(inst),
    }
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, instance_to_json(inst)?)?;
    Ok(())
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    instance_from_json(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineFile {
    datapoints: Vec<f64>,
    centers: Vec<f64>,
    k: usize,
    ell: usize,
}

pub fn line_to_json(line: &LineClusteringInstance) -> String {
    let file = LineFile {
        datapoints: line.datapoints().to_vec(),
        centers: line.centers().to_vec(),
        k: line.k(),
        ell: line.ell(),
    };
    serde_json::to_string(&file).expect("finite coordinates serialize") + "\n"
}

pub fn line_from_json(text: &str) -> Result<LineClusteringInstance> {
    let f: LineFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    LineClusteringInstance::new(f.datapoints, f.centers, f.k, f.ell)
}
