//! File formats: complexes, filters and response specs as JSON; signals, responses, markets and
//! PageRank tables as CSV.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use scfilter::apps::{ExchangeMarket, PageRankResult, SubspaceNorms};
use scfilter::design::FrequencyType;
use scfilter::{ChebyshevFilter, FilterCoefficients, HodgeSpectrum, ResponseFn, ResponseSpec, SimplicialComplex};

use crate::error::{CliError, CliResult};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::file(path, e))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::file(path, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub triangles: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub infer_triangles: bool,
}

impl ComplexFile {
    pub fn from_complex(sc: &SimplicialComplex) -> Self {
        ComplexFile {
            vertex_count: sc.vertex_count(),
            edges: sc.edges().to_vec(),
            triangles: sc.triangles().to_vec(),
            infer_triangles: false,
        }
    }

    pub fn build(&self) -> scfilter::Result<SimplicialComplex> {
        if self.infer_triangles {
            SimplicialComplex::with_inferred_triangles(self.vertex_count, &self.edges)
        } else {
            SimplicialComplex::new(self.vertex_count, &self.edges, &self.triangles)
        }
    }
}

pub fn read_complex(path: &Path) -> CliResult<SimplicialComplex> {
    let file: ComplexFile = parse_json(path)?;
    file.build().map_err(|e| CliError::file(path, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChebyshevFile {
    pub g0: f64,
    pub c_lower: Vec<f64>,
    pub c_upper: Vec<f64>,
    pub omega_lower: f64,
    pub omega_upper: f64,
}

/// A designed filter: polynomial coefficients or a Chebyshev series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FilterFile {
    Chebyshev { chebyshev: ChebyshevFile },
    Polynomial {
        h0: f64,
        #[serde(default)]
        alpha: Vec<f64>,
        #[serde(default)]
        beta: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Filter {
    Polynomial(FilterCoefficients),
    Chebyshev(ChebyshevFilter),
}

impl Filter {
    pub fn response(&self, lambda: f64, kind: FrequencyType) -> f64 {
        match self {
            Filter::Polynomial(c) => match kind {
                FrequencyType::Harmonic => c.h0,
                FrequencyType::Gradient => c.gradient_response(lambda),
                FrequencyType::Curl => c.curl_response(lambda),
            },
            Filter::Chebyshev(c) => c.response(lambda, kind),
        }
    }

    pub fn apply(&self, ops: &scfilter::ShiftOperators, flow: &[f64]) -> scfilter::Result<Vec<f64>> {
        match self {
            Filter::Polynomial(c) => c.apply(ops, flow),
            Filter::Chebyshev(c) => c.apply(ops, flow),
        }
    }
}

impl From<&Filter> for FilterFile {
    fn from(f: &Filter) -> Self {
        match f {
            Filter::Polynomial(c) => FilterFile::Polynomial { h0: c.h0, alpha: c.alpha.clone(), beta: c.beta.clone() },
            Filter::Chebyshev(c) => FilterFile::Chebyshev {
                chebyshev: ChebyshevFile {
                    g0: c.g0,
                    c_lower: c.c_lower.clone(),
                    c_upper: c.c_upper.clone(),
                    omega_lower: c.omega_lower,
                    omega_upper: c.omega_upper,
                },
            },
        }
    }
}

impl FilterFile {
    pub fn into_filter(self) -> Result<Filter, &'static str> {
        match self {
            FilterFile::Polynomial { h0, alpha, beta } => Ok(Filter::Polynomial(FilterCoefficients::new(h0, alpha, beta))),
            FilterFile::Chebyshev { chebyshev: c } => {
                if c.c_lower.is_empty() || c.c_upper.is_empty() {
                    return Err("a Chebyshev series needs at least its constant coefficient");
                }
                let needs = |c: &[f64], omega: f64| c.len() == 1 || omega > 0.0;
                if !needs(&c.c_lower, c.omega_lower) || !needs(&c.c_upper, c.omega_upper) {
                    return Err("a non-constant Chebyshev series needs omega > 0");
                }
                Ok(Filter::Chebyshev(ChebyshevFilter {
                    g0: c.g0,
                    c_lower: c.c_lower,
                    c_upper: c.c_upper,
                    omega_lower: c.omega_lower,
                    omega_upper: c.omega_upper,
                }))
            }
        }
    }
}

pub fn read_filter(path: &Path) -> CliResult<Filter> {
    let file: FilterFile = parse_json(path)?;
    file.into_filter().map_err(|e| CliError::file(path, e))
}

fn one() -> f64 {
    1.0
}

/// A response family as written in spec files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Constant { value: f64 },
    Step { cutoff: f64, low: f64, high: f64 },
    Logistic { k: f64, lambda0: f64 },
    Inverse { gamma: f64, #[serde(default = "one")] scale: f64 },
    Table { points: Vec<[f64; 2]> },
}

impl Family {
    pub fn to_response(&self) -> ResponseFn {
        match self {
            Family::Constant { value } => ResponseFn::Constant(*value),
            Family::Step { cutoff, low, high } => ResponseFn::Step { cutoff: *cutoff, low: *low, high: *high },
            Family::Logistic { k, lambda0 } => ResponseFn::Logistic { k: *k, midpoint: *lambda0 },
            Family::Inverse { gamma, scale } => ResponseFn::InverseShift { gamma: *gamma, scale: *scale },
            Family::Table { points } => ResponseFn::Table(points.iter().map(|p| (p[0], p[1])).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
}

/// Separate gradient and curl responses, or one response for both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpecFile {
    Split {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        g0: Option<f64>,
        gradient: SideSpec,
        curl: SideSpec,
    },
    Uniform {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        g0: Option<f64>,
        #[serde(flatten)]
        side: SideSpec,
    },
}

impl SpecFile {
    fn sides(&self) -> (Option<f64>, &SideSpec, &SideSpec) {
        match self {
            SpecFile::Split { g0, gradient, curl } => (*g0, gradient, curl),
            SpecFile::Uniform { g0, side } => (*g0, side, side),
        }
    }

    /// Whether both upper frequency bounds are given in the file.
    pub fn has_bounds(&self) -> bool {
        let (_, g, c) = self.sides();
        g.max.is_some() && c.max.is_some()
    }

    /// The design spec, with missing upper bounds filled in from `fallback_max`
    /// (`(gradient, curl)`). `g0` defaults to the gradient response at zero.
    pub fn to_spec(&self, fallback_max: (f64, f64)) -> ResponseSpec {
        let (g0, g, c) = self.sides();
        let gradient = g.family.to_response();
        ResponseSpec {
            g0: g0.unwrap_or_else(|| gradient.eval(0.0)),
            gradient,
            curl: c.family.to_response(),
            gradient_range: (g.min.unwrap_or(0.0), g.max.unwrap_or(fallback_max.0)),
            curl_range: (c.min.unwrap_or(0.0), c.max.unwrap_or(fallback_max.1)),
        }
    }
}

pub fn read_spec(path: &Path) -> CliResult<SpecFile> {
    parse_json(path)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dimensions {
    pub harmonic: usize,
    pub gradient: usize,
    pub curl: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumFile {
    pub dimensions: Dimensions,
    pub zero_tol: f64,
    pub lambda_max: f64,
    pub gradient: Vec<f64>,
    pub curl: Vec<f64>,
    pub distinct_gradient: Vec<f64>,
    pub distinct_curl: Vec<f64>,
}

impl SpectrumFile {
    pub fn new(s: &HodgeSpectrum, group_tol: f64) -> Self {
        let (dg, dc) = s.distinct_frequencies(group_tol);
        SpectrumFile {
            dimensions: Dimensions { harmonic: s.harmonic_dim(), gradient: s.gradient_dim(), curl: s.curl_dim() },
            zero_tol: s.zero_tol(),
            lambda_max: s.lambda_max(),
            gradient: s.gradient_values().to_vec(),
            curl: s.curl_values().to_vec(),
            distinct_gradient: dg,
            distinct_curl: dc,
        }
    }
}

fn is_header(record: &csv::StringRecord) -> bool {
    record.iter().any(|f| !f.trim().is_empty() && f.trim().parse::<f64>().is_err())
}

fn csv_reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes())
}

fn field<T: std::str::FromStr>(record: &csv::StringRecord, i: usize, line: usize) -> Result<T, String> {
    record
        .get(i)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("line {line}: cannot read column {}", i + 1))
}

/// Reads an edge flow from `index,value` or `u,v,value` rows. A `u,v` row listed against the
/// stored edge orientation contributes `-value`. Unlisted edges are zero.
pub fn read_signal(path: &Path, sc: &SimplicialComplex) -> CliResult<Vec<f64>> {
    let text = read(path)?;
    let mut flow = vec![0.0; sc.edge_count()];
    let mut seen = vec![false; sc.edge_count()];
    for (k, record) in csv_reader(&text).records().enumerate() {
        let record = record.map_err(|e| CliError::file(path, e))?;
        let line = k + 1;
        if (k == 0 && is_header(&record)) || record.iter().all(str::is_empty) {
            continue;
        }
        let (edge, value) = match record.len() {
            2 => {
                let i: usize = field(&record, 0, line).map_err(|e| CliError::file(path, e))?;
                if i >= sc.edge_count() {
                    return Err(CliError::file(path, format!("line {line}: edge index {i} out of range")));
                }
                (i, field::<f64>(&record, 1, line).map_err(|e| CliError::file(path, e))?)
            }
            3 => {
                let u: usize = field(&record, 0, line).map_err(|e| CliError::file(path, e))?;
                let v: usize = field(&record, 1, line).map_err(|e| CliError::file(path, e))?;
                let x: f64 = field(&record, 2, line).map_err(|e| CliError::file(path, e))?;
                let i = sc
                    .edge_index(u, v)
                    .ok_or_else(|| CliError::file(path, format!("line {line}: no edge {{{u},{v}}}")))?;
                let sign = if sc.edges()[i] == [u, v] { 1.0 } else { -1.0 };
                (i, sign * x)
            }
            n => return Err(CliError::file(path, format!("line {line}: expected 2 or 3 columns, found {n}"))),
        };
        if seen[edge] {
            return Err(CliError::file(path, format!("line {line}: edge {edge} listed twice")));
        }
        seen[edge] = true;
        flow[edge] = value;
    }
    Ok(flow)
}

pub fn write_signal(out: &mut dyn Write, flow: &[f64]) -> std::io::Result<()> {
    writeln!(out, "index,value")?;
    for (i, v) in flow.iter().enumerate() {
        writeln!(out, "{i},{v:.16e}")?;
    }
    Ok(())
}

fn type_code(kind: FrequencyType) -> &'static str {
    match kind {
        FrequencyType::Harmonic => "H",
        FrequencyType::Gradient => "G",
        FrequencyType::Curl => "C",
    }
}

pub fn parse_type_code(s: &str) -> Option<FrequencyType> {
    match s {
        "H" => Some(FrequencyType::Harmonic),
        "G" => Some(FrequencyType::Gradient),
        "C" => Some(FrequencyType::Curl),
        _ => None,
    }
}

pub fn write_response(out: &mut dyn Write, rows: &[(f64, FrequencyType, f64)]) -> std::io::Result<()> {
    writeln!(out, "lambda,type,response")?;
    for &(l, kind, r) in rows {
        writeln!(out, "{l:.16e},{},{r:.16e}", type_code(kind))?;
    }
    Ok(())
}

/// Rows of a `lambda,type,response` file.
pub fn read_response(path: &Path) -> CliResult<Vec<(f64, FrequencyType, f64)>> {
    let text = read(path)?;
    let mut rows = Vec::new();
    for (k, record) in csv_reader(&text).records().enumerate() {
        let record = record.map_err(|e| CliError::file(path, e))?;
        if k == 0 && is_header(&record) {
            continue;
        }
        let line = k + 1;
        let l: f64 = field(&record, 0, line).map_err(|e| CliError::file(path, e))?;
        let kind = record
            .get(1)
            .and_then(parse_type_code)
            .ok_or_else(|| CliError::file(path, format!("line {line}: type must be H, G or C")))?;
        let r: f64 = field(&record, 2, line).map_err(|e| CliError::file(path, e))?;
        rows.push((l, kind, r));
    }
    Ok(rows)
}

/// Header row of currency codes, then one row of rates per currency. A leading label column is
/// accepted; an empty cell is a missing quote.
pub fn read_market(path: &Path) -> CliResult<ExchangeMarket> {
    let text = read(path)?;
    let mut records = csv_reader(&text).into_records();
    let header = records
        .next()
        .ok_or_else(|| CliError::file(path, "empty market file"))?
        .map_err(|e| CliError::file(path, e))?;
    let mut names: Vec<String> = header.iter().map(str::to_string).collect();
    let labelled_header = names.first().is_some_and(|s| s.is_empty() || s.eq_ignore_ascii_case("currency"));
    if labelled_header {
        names.remove(0);
    }
    let n = names.len();
    let mut rates = Vec::with_capacity(n);
    for (k, record) in records.enumerate() {
        let record = record.map_err(|e| CliError::file(path, e))?;
        let line = k + 2;
        let cells: Vec<&str> = record.iter().collect();
        let cells = match cells.len() {
            m if m == n => cells,
            m if m == n + 1 => cells[1..].to_vec(),
            m => return Err(CliError::file(path, format!("line {line}: expected {n} rates, found {m}"))),
        };
        let row = cells
            .iter()
            .map(|c| if c.is_empty() { Ok(f64::NAN) } else { c.parse::<f64>() })
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| CliError::file(path, format!("line {line}: {e}")))?;
        rates.push(row);
    }
    ExchangeMarket::new(names, rates).map_err(|e| CliError::file(path, e))
}

pub fn write_market(out: &mut dyn Write, market: &ExchangeMarket) -> std::io::Result<()> {
    writeln!(out, "{}", market.names().join(","))?;
    for row in market.rates() {
        let cells: Vec<String> =
            row.iter().map(|r| if r.is_nan() { String::new() } else { format!("{r:.16e}") }).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_pagerank(out: &mut dyn Write, sc: &SimplicialComplex, results: &[PageRankResult]) -> std::io::Result<()> {
    writeln!(out, "edge_index,u,v,norm_total,norm_H,norm_G,norm_C,rel_H,rel_G,rel_C")?;
    for r in results {
        let [u, v] = sc.edges()[r.edge];
        let SubspaceNorms { total, harmonic, gradient, curl } = r.norms_abs;
        let rel = r.norms_rel;
        writeln!(
            out,
            "{},{u},{v},{total:.16e},{harmonic:.16e},{gradient:.16e},{curl:.16e},{:.16e},{:.16e},{:.16e}",
            r.edge, rel.harmonic, rel.gradient, rel.curl
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_file_shapes() {
        let split: SpecFile = serde_json::from_str(
            r#"{"g0": 1, "gradient": {"family": "logistic", "k": 100, "lambda0": 0.01, "max": 10.8},
                "curl": {"family": "constant", "value": 0}}"#,
        )
        .unwrap();
        let spec = split.to_spec((5.0, 6.0));
        assert_eq!(spec.g0, 1.0);
        assert_eq!(spec.gradient_range, (0.0, 10.8));
        assert_eq!(spec.curl_range, (0.0, 6.0));
        assert!(!split.has_bounds());
        let table: SpecFile = serde_json::from_str(r#"{"family": "table", "points": [[0, 1], [2, 3]]}"#).unwrap();
        let spec = table.to_spec((2.0, 2.0));
        assert_eq!((spec.g0, spec.curl.eval(1.0)), (1.0, 2.0));
    }

    #[test]
    fn filter_file_variants() {
        let p: FilterFile = serde_json::from_str(r#"{"h0": 1, "alpha": [2]}"#).unwrap();
        assert_eq!(p.into_filter().unwrap(), Filter::Polynomial(FilterCoefficients::new(1.0, vec![2.0], vec![])));
        let c: FilterFile = serde_json::from_str(
            r#"{"chebyshev": {"g0": 1, "c_lower": [2], "c_upper": [2], "omega_lower": 0, "omega_upper": 0}}"#,
        )
        .unwrap();
        assert!(matches!(c.into_filter().unwrap(), Filter::Chebyshev(_)));
        let bad: FilterFile = serde_json::from_str(
            r#"{"chebyshev": {"g0": 1, "c_lower": [2, 1], "c_upper": [2], "omega_lower": 0, "omega_upper": 0}}"#,
        )
        .unwrap();
        assert!(bad.into_filter().is_err());
    }
}
