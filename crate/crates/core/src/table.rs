//! Tables of the number families in csv, json or LaTeX.
//!
//! Every row carries its parameters, the canonical value and the value's
//! q → 1 limit (empty when the limit is a pole).

use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::arith::fmt::{latex, rat_latex};
use crate::bernoulli::{beta_neg_order, beta_order, carlitz_betas, euler_neg_order, euler_order};
use crate::classical::bernoulli_numbers;
use crate::error::{Error, Result};
use crate::qcore::gauss_binom_rat;
use crate::stirling::{stirling1_row, stirling2_c, stirling2_s};
use crate::{BigRat, QPoly, QRat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GaussBinom,
    Stirling1,
    Stirling2S,
    Stirling2C,
    CarlitzBeta,
    BetaOrder,
    BetaNegOrder,
    EulerOrder,
    EulerNegOrder,
    ClassicalLimits,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::GaussBinom,
        Family::Stirling1,
        Family::Stirling2S,
        Family::Stirling2C,
        Family::CarlitzBeta,
        Family::BetaOrder,
        Family::BetaNegOrder,
        Family::EulerOrder,
        Family::EulerNegOrder,
        Family::ClassicalLimits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GaussBinom => "gauss-binom",
            Family::Stirling1 => "stirling1",
            Family::Stirling2S => "stirling2-S",
            Family::Stirling2C => "stirling2-C",
            Family::CarlitzBeta => "carlitz-beta",
            Family::BetaOrder => "beta-order",
            Family::BetaNegOrder => "beta-neg-order",
            Family::EulerOrder => "euler-order",
            Family::EulerNegOrder => "euler-neg-order",
            Family::ClassicalLimits => "classical-limits",
        }
    }

    /// Parameter names in row order.
    pub fn params(self) -> &'static [Param] {
        use Param::*;
        match self {
            Family::GaussBinom | Family::Stirling1 | Family::Stirling2S | Family::Stirling2C => {
                &[N, K]
            }
            Family::CarlitzBeta | Family::ClassicalLimits => &[M],
            Family::BetaOrder | Family::BetaNegOrder => &[N, K, X],
            Family::EulerOrder | Family::EulerNegOrder => &[K, N, X],
        }
    }

    /// The parameter `--m` stands for in `limit`.
    pub fn primary(self) -> Param {
        match self {
            Family::CarlitzBeta | Family::ClassicalLimits => Param::M,
            Family::EulerOrder | Family::EulerNegOrder => Param::K,
            _ => Param::N,
        }
    }

    fn value_header(self) -> &'static str {
        match self {
            Family::GaussBinom => "\\binom{n}{k}_q",
            Family::Stirling1 => "s_{1,q}(n,k)",
            Family::Stirling2S => "S_{2,q}(n,k)",
            Family::Stirling2C => "C_{2,q}(n,k)",
            Family::CarlitzBeta => "\\beta_{m,q}",
            Family::BetaOrder => "\\beta^{(k)}_{n,q}(x)",
            Family::BetaNegOrder => "\\beta^{(-k)}_{n,q}(x)",
            Family::EulerOrder => "E^{(n)}_{k,q}(x)",
            Family::EulerNegOrder => "E^{(-n)}_{k,q}(x)",
            Family::ClassicalLimits => "\\lim_{q\\to 1}\\beta_{m,q}",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    N,
    K,
    M,
    X,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::K => "k",
            Param::M => "m",
            Param::X => "x",
        }
    }
}

/// Inclusive integer interval written `A..B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad range `{s}`, expected A..B"));
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(IntRange::new(parse(a)?, parse(b)?))
            }
            None => Ok(IntRange::single(parse(s)?)),
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Requested parameter ranges; unset ones take the family default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableRanges {
    pub n: Option<IntRange>,
    pub k: Option<IntRange>,
    pub m: Option<IntRange>,
    pub x: Option<IntRange>,
}

impl TableRanges {
    fn get(&self, p: Param) -> Option<IntRange> {
        match p {
            Param::N => self.n,
            Param::K => self.k,
            Param::M => self.m,
            Param::X => self.x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" | "tex" => Ok(Format::Latex),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

/// Largest admissible parameter value per family and parameter.
pub fn max_param(family: Family, p: Param) -> i64 {
    match (family, p) {
        (Family::GaussBinom | Family::Stirling1, _) => 40,
        (Family::Stirling2S, _) => 25,
        (Family::Stirling2C, _) => 20,
        (Family::CarlitzBeta | Family::ClassicalLimits, _) => 30,
        (_, Param::X) => 6,
        (Family::BetaOrder | Family::BetaNegOrder, Param::K) => 6,
        (Family::EulerOrder | Family::EulerNegOrder, Param::N) => 6,
        _ => 12,
    }
}

fn default_range(family: Family, p: Param) -> Option<IntRange> {
    match (family, p) {
        (Family::BetaOrder | Family::BetaNegOrder, Param::K) => Some(IntRange::single(1)),
        (Family::EulerOrder | Family::EulerNegOrder, Param::N) => Some(IntRange::single(1)),
        (_, Param::X) => Some(IntRange::single(0)),
        _ => None,
    }
}

/// One table row.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub params: Vec<(Param, i64)>,
    pub value: QRat,
    pub limit: Option<BigRat>,
    /// Classical oracle value, only for `classical-limits`.
    pub classical: Option<BigRat>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub family: Family,
    pub rows: Vec<Row>,
}

fn resolved(family: Family, ranges: &TableRanges) -> Result<Vec<(Param, IntRange)>> {
    let mut out = Vec::new();
    for &p in family.params() {
        // k runs over 0..n by default in the two-index families
        let r = match ranges.get(p).or_else(|| default_range(family, p)) {
            Some(r) => r,
            None if p == Param::K => {
                let n = ranges.n.map(|r| r.hi).unwrap_or(0);
                IntRange::new(0, n)
            }
            None => {
                return Err(Error::InvalidArgument(format!(
                    "family {family} needs --{}",
                    p.name()
                )))
            }
        };
        let max = max_param(family, p);
        if r.lo < 0 || r.hi > max || r.lo > r.hi {
            return Err(Error::RangeBound(format!(
                "{}={r} outside 0..{max} for {family}",
                p.name()
            )));
        }
        out.push((p, r));
    }
    Ok(out)
}

fn grid(ranges: &[(Param, IntRange)]) -> Vec<Vec<(Param, i64)>> {
    let mut points = vec![Vec::new()];
    for &(p, r) in ranges {
        points = points
            .into_iter()
            .flat_map(|pt| {
                (r.lo..=r.hi).map(move |v| {
                    let mut pt = pt.clone();
                    pt.push((p, v));
                    pt
                })
            })
            .collect();
    }
    points
}

/// Build the table rows for `family` over `ranges`.
pub fn build_table(family: Family, ranges: &TableRanges) -> Result<Table> {
    let ranges = resolved(family, ranges)?;
    let points = grid(&ranges);
    let betas = match family {
        Family::CarlitzBeta | Family::ClassicalLimits => carlitz_betas(ranges[0].1.hi as u32),
        _ => Vec::new(),
    };
    let bernoulli = match family {
        Family::ClassicalLimits => bernoulli_numbers(ranges[0].1.hi as u32),
        _ => Vec::new(),
    };
    let mut s1_row: Option<(u32, Vec<QPoly>)> = None;
    let mut rows = Vec::with_capacity(points.len());
    for pt in points {
        let v = |i: usize| pt[i].1 as u32;
        let value = match family {
            Family::GaussBinom => {
                if v(1) > v(0) {
                    continue;
                }
                gauss_binom_rat(v(0) as i64, v(1) as i64)
            }
            Family::Stirling1 => {
                if v(1) > v(0) {
                    continue;
                }
                if s1_row.as_ref().map(|r| r.0) != Some(v(0)) {
                    s1_row = Some((v(0), stirling1_row(v(0))));
                }
                QRat::from_poly(s1_row.as_ref().unwrap().1[v(1) as usize].clone())
            }
            Family::Stirling2S => {
                if v(1) > v(0) {
                    continue;
                }
                stirling2_s(v(0), v(1))
            }
            Family::Stirling2C => stirling2_c(v(0), v(1)),
            Family::CarlitzBeta | Family::ClassicalLimits => betas[v(0) as usize].clone(),
            Family::BetaOrder => beta_order(v(0), v(1), v(2)),
            Family::BetaNegOrder => beta_neg_order(v(0), v(1), v(2)),
            Family::EulerOrder => euler_order(v(0), v(1), v(2)),
            Family::EulerNegOrder => euler_neg_order(v(0), v(1), v(2)),
        };
        let limit = value.limit_q1().ok();
        let classical = match family {
            Family::ClassicalLimits => Some(bernoulli[v(0) as usize].clone()),
            _ => None,
        };
        rows.push(Row {
            params: pt,
            value,
            limit,
            classical,
        });
    }
    Ok(Table { family, rows })
}

impl Table {
    pub fn columns(&self) -> Vec<&'static str> {
        let mut cols: Vec<&'static str> = self.family.params().iter().map(|p| p.name()).collect();
        if self.family == Family::ClassicalLimits {
            cols.extend(["limit_q1", "classical"]);
        } else {
            cols.extend(["value", "limit_q1"]);
        }
        cols
    }

    fn cells(&self, row: &Row) -> Vec<String> {
        let mut out: Vec<String> = row.params.iter().map(|(_, v)| v.to_string()).collect();
        let limit = row
            .limit
            .as_ref()
            .map(|c| c.to_string())
            .unwrap_or_default();
        if self.family == Family::ClassicalLimits {
            out.push(limit);
            out.push(
                row.classical
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_default(),
            );
        } else {
            out.push(row.value.to_string());
            out.push(limit);
        }
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json()),
            Format::Latex => Ok(self.to_latex()),
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
        w.write_record(self.columns()).map_err(io)?;
        for row in &self.rows {
            w.write_record(self.cells(row)).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        let cols = self.columns();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (c, cell) in cols.iter().zip(self.cells(row)) {
                    let is_param = row.params.iter().any(|(p, _)| p.name() == *c);
                    let v = if is_param {
                        Value::from(cell.parse::<i64>().expect("integer parameter"))
                    } else if cell.is_empty() {
                        Value::Null
                    } else {
                        Value::from(cell)
                    };
                    obj.insert(c.to_string(), v);
                }
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("family".into(), Value::from(self.family.name()));
        doc.insert("columns".into(), Value::from(cols.clone()));
        doc.insert("rows".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_latex(&self) -> String {
        let params = self.family.params();
        let mut s = format!(
            "\\begin{{tabular}}{{{}ll}}\n\\hline\n",
            "r".repeat(params.len())
        );
        let mut head: Vec<String> = params.iter().map(|p| format!("${}$", p.name())).collect();
        if self.family == Family::ClassicalLimits {
            head.push(format!("${}$", self.family.value_header()));
            head.push("$B_m$".into());
        } else {
            head.push(format!("${}$", self.family.value_header()));
            head.push("$q \\to 1$".into());
        }
        s.push_str(&head.join(" & "));
        s.push_str(" \\\\\n\\hline\n");
        for row in &self.rows {
            let mut cells: Vec<String> = row.params.iter().map(|(_, v)| v.to_string()).collect();
            let lim = row
                .limit
                .as_ref()
                .map(|c| format!("${}$", rat_latex(c)))
                .unwrap_or_default();
            if self.family == Family::ClassicalLimits {
                cells.push(lim);
                cells.push(
                    row.classical
                        .as_ref()
                        .map(|c| format!("${}$", rat_latex(c)))
                        .unwrap_or_default(),
                );
            } else {
                cells.push(format!("${}$", latex(&row.value)));
                cells.push(lim);
            }
            s.push_str(&cells.join(" & "));
            s.push_str(" \\\\\n");
        }
        s.push_str("\\hline\n\\end{tabular}\n");
        s
    }

    /// `name=value` pairs and the q → 1 limit, one row per line.
    pub fn to_limit_lines(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let params: Vec<String> = row
                .params
                .iter()
                .map(|(p, v)| format!("{}={v}", p.name()))
                .collect();
            let lim = row
                .limit
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "pole".into());
            s.push_str(&format!("{} {lim}\n", params.join(" ")));
        }
        s
    }
}

/// Build and render in one step.
pub fn emit_table(family: Family, ranges: &TableRanges, format: Format) -> Result<String> {
    build_table(family, ranges)?.render(format)
}
