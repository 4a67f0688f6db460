//! Commands behind the `squareice` binary.
//!
//! Every command returns a [`RunReport`]; `main` only parses flags, renders
//! the report and maps it to an exit status. All numbers are printed
//! exactly: big integers in decimal, polynomials as coefficient lists.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use squareice::asm::{enumerate, for_each_asm, from_ice, parse_asms, to_ice, write_asms, x_enumerate_brute, DEFAULT_BRUTE_BOUND};
use squareice::exact::XPolynomial;
use squareice::formulas::{a2_formula, a3_formula, a_formula, b_chain_from};
use squareice::six_vertex::{transfer_count, write_ice, DEFAULT_TRANSFER_BOUND};
use squareice::verify::{run_suite, Check, Suite, SuiteConfig};
use squareice::{Error, Result};

/// Environment variable read when `--workers` is absent.
pub const WORKERS_ENV: &str = "SQUAREICE_WORKERS";

/// What one invocation did. `body`, when present, is the verbatim payload
/// (a table or matrix list) and is the only thing written to stdout.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, String)>,
    pub body: Option<String>,
    pub checks: Vec<Check>,
    pub wall: Duration,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            body: None,
            checks: Vec::new(),
            wall: Duration::ZERO,
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    fn output(&mut self, key: impl Into<String>, value: impl ToString) {
        self.outputs.push((key.into(), value.to_string()));
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, details: details.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// The command line this report answers, e.g. `count --n 4 --method formula`.
    pub fn echo(&self) -> String {
        let mut s = self.command.clone();
        for (k, v) in &self.inputs {
            // `suite` and `file` are positional.
            let _ = match k.as_str() {
                "suite" | "file" => write!(s, " {v}"),
                _ => write!(s, " --{k} {v}"),
            };
        }
        s
    }

    /// `(stdout, stderr)`. The wall time only ever reaches stderr so that
    /// stdout is identical across runs.
    pub fn render(&self) -> (String, String) {
        let mut detail = String::new();
        for (k, v) in &self.outputs {
            let _ = writeln!(detail, "{k} = {v}");
        }
        for c in &self.checks {
            let _ = writeln!(detail, "{c}");
        }
        let verdict = if self.passed() { "all passed".to_string() } else { format!("{} FAILED", self.failed_count()) };
        let summary = format!(
            "# {}: {} check(s), {}, {:.3}s\n",
            self.echo(),
            self.checks.len(),
            verdict,
            self.wall.as_secs_f64()
        );
        match &self.body {
            Some(body) => (body.clone(), detail + &summary),
            None => (detail, summary),
        }
    }
}

fn timed(f: impl FnOnce() -> Result<RunReport>) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.wall = start.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Transfer,
    Formula,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Transfer => "transfer",
            Method::Formula => "formula",
        }
    }

    /// `A(n;1)` by this method.
    pub fn count(self, n: usize) -> Result<BigInt> {
        match self {
            Method::Brute => {
                let mut total = 0u64;
                for_each_asm(n, DEFAULT_BRUTE_BOUND, |_| total += 1)?;
                Ok(total.into())
            }
            Method::Transfer => Ok(transfer_count(n)?.eval(&BigInt::from(1))),
            Method::Formula => a_formula(n),
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "brute" => Ok(Method::Brute),
            "transfer" => Ok(Method::Transfer),
            "formula" => Ok(Method::Formula),
            other => Err(Error::Parse(format!("unknown method '{other}' (expected brute, transfer or formula)"))),
        }
    }
}

/// Parses a comma-separated method list, keeping the given order.
pub fn parse_methods(s: &str) -> Result<Vec<Method>> {
    let methods = s.split(',').map(Method::from_str).collect::<Result<Vec<_>>>()?;
    if methods.is_empty() {
        return Err(Error::Parse("empty method list".into()));
    }
    Ok(methods)
}

/// Accepts `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("'{s}' is not a rational p/q: {e}")))
}

pub fn cmd_count(n: usize, methods: &[Method]) -> Result<RunReport> {
    timed(|| {
        let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
        let mut report = RunReport::new("count").input("n", n).input("method", names.join(","));
        let values = methods.par_iter().map(|m| m.count(n)).collect::<Result<Vec<_>>>()?;
        for (m, v) in methods.iter().zip(&values) {
            report.output(format!("A({n};1) [{}]", m.name()), v);
        }
        if values.len() > 1 {
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            let details = if agree { format!("all {} methods give {}", values.len(), values[0]) } else { "methods disagree".into() };
            report.check("methods agree", agree, details);
        }
        Ok(report)
    })
}

pub fn cmd_xenum(n: usize, at: Option<&BigRational>) -> Result<RunReport> {
    timed(|| {
        let mut report = RunReport::new("xenum").input("n", n);
        if let Some(x) = at {
            report = report.input("at", x);
        }
        let poly = transfer_count(n)?;
        match at {
            Some(x) => report.output(format!("A({n};{x})"), poly.eval_rational(x)),
            None => report.output(format!("A({n};x)"), &poly),
        }
        if n <= DEFAULT_BRUTE_BOUND {
            let brute = x_enumerate_brute(n)?;
            report.check("transfer matches brute force", brute == poly, format!("brute: {brute}"));
        }
        Ok(report)
    })
}

pub fn cmd_bseq(max_n: usize) -> Result<RunReport> {
    timed(|| {
        let mut report = RunReport::new("bseq").input("max-n", max_n);
        if max_n > DEFAULT_TRANSFER_BOUND + 1 {
            return Err(Error::BoundExceeded { what: "bseq", n: max_n, bound: DEFAULT_TRANSFER_BOUND + 1 });
        }
        let a = (1..max_n).into_par_iter().map(transfer_count).collect::<Result<Vec<_>>>()?;
        let chain = b_chain_from(&a, max_n)?;
        for (k, b) in chain.polys().iter().enumerate() {
            report.output(format!("B({};x)", k + 1), b);
        }
        report.check(
            "A(n;x) = c_n B(n;x) B(n+1;x)",
            chain.factorization_holds(&a),
            format!("n = 1..{}", max_n.saturating_sub(1)),
        );
        report.check("nonnegative coefficients", chain.all_nonnegative(), "");
        Ok(report)
    })
}

/// `all` selects every suite; otherwise a comma-separated list of names.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s.trim() == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.split(',').map(|name| Suite::from_str(name.trim())).collect()
}

/// Runs the suites in parallel; checks come back in suite order.
pub fn cmd_verify(suites: &[Suite], n: Option<usize>) -> Result<RunReport> {
    timed(|| {
        let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
        let mut report = RunReport::new("verify").input("suite", names.join(","));
        if let Some(n) = n {
            report = report.input("n", n);
        }
        let results: Vec<Vec<Check>> = suites
            .par_iter()
            .map(|&suite| {
                let mut cfg = SuiteConfig::for_suite(suite);
                if let Some(n) = n {
                    cfg.n = n;
                }
                run_suite(suite, &cfg)
            })
            .collect();
        for (suite, checks) in suites.iter().zip(results) {
            for c in checks {
                report.checks.push(Check { name: format!("{suite}/{}", c.name), ..c });
            }
        }
        Ok(report)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format '{other}' (expected text, csv or json)"))),
        }
    }
}

/// One line of `table`. `poly` is ascending: `poly[k]` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub poly: Vec<BigInt>,
}

pub const CSV_HEADER: &str = "n,a1,a2,a3,poly";

impl TableRow {
    pub fn compute(n: usize) -> Result<TableRow> {
        let p = transfer_count(n)?;
        let at = |x: i64| p.eval(&BigInt::from(x));
        Ok(TableRow { n, a1: at(1), a2: at(2), a3: at(3), poly: p.coeffs().to_vec() })
    }

    pub fn polynomial(&self) -> XPolynomial {
        XPolynomial::new(self.poly.clone())
    }

    /// Big integers become decimal strings.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "a1": self.a1.to_string(),
            "a2": self.a2.to_string(),
            "a3": self.a3.to_string(),
            "poly": self.poly.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<TableRow> {
        let bad = |what: &str| Error::Parse(format!("table row: bad or missing '{what}'"));
        let int = |key: &str| -> Result<BigInt> {
            v.get(key).and_then(Value::as_str).and_then(|s| s.parse().ok()).ok_or_else(|| bad(key))
        };
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as usize;
        let poly = v
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("poly"))?
            .iter()
            .map(|c| c.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| bad("poly")))
            .collect::<Result<Vec<_>>>()?;
        Ok(TableRow { n, a1: int("a1")?, a2: int("a2")?, a3: int("a3")?, poly })
    }

    /// The coefficient list is `;`-separated inside its field.
    pub fn to_csv(&self) -> String {
        let poly: Vec<String> = self.poly.iter().map(|c| c.to_string()).collect();
        format!("{},{},{},{},{}", self.n, self.a1, self.a2, self.a3, poly.join(";"))
    }

    pub fn from_csv(line: &str) -> Result<TableRow> {
        let fields: Vec<&str> = line.trim().split(',').collect();
        let [n, a1, a2, a3, poly] = fields[..] else {
            return Err(Error::Parse(format!("csv row needs 5 fields: {line:?}")));
        };
        let int = |s: &str| s.parse::<BigInt>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        Ok(TableRow {
            n: n.parse().map_err(|e| Error::Parse(format!("{n:?}: {e}")))?,
            a1: int(a1)?,
            a2: int(a2)?,
            a3: int(a3)?,
            poly: poly.split(';').map(int).collect::<Result<Vec<_>>>()?,
        })
    }
}

/// Parses the output of `table --format csv`, header included.
pub fn parse_csv_table(text: &str) -> Result<Vec<TableRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Parse("missing csv header".into()));
    }
    lines.filter(|l| !l.trim().is_empty()).map(TableRow::from_csv).collect()
}

/// Parses the output of `table --format json`, one object per line.
pub fn parse_json_table(text: &str) -> Result<Vec<TableRow>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: Value = serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string()))?;
            TableRow::from_json(&v)
        })
        .collect()
}

fn render_text_table(rows: &[TableRow]) -> String {
    let header = ["n", "A(n;1)", "A(n;2)", "A(n;3)", "A(n;x)"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| [r.n.to_string(), r.a1.to_string(), r.a2.to_string(), r.a3.to_string(), r.polynomial().to_string()])
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |fields: [&str; 5]| {
        let mut s = String::new();
        for (k, f) in fields.iter().enumerate() {
            if k == 4 {
                s.push_str(f);
            } else {
                let _ = write!(s, "{f:>w$}  ", w = width[k]);
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header);
    for row in &cells {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    out
}

pub fn cmd_table(max_n: usize, format: Format) -> Result<RunReport> {
    timed(|| {
        let fmt_name = match format {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        };
        let mut report = RunReport::new("table").input("max-n", max_n).input("format", fmt_name);
        if max_n == 0 {
            return Err(Error::Precondition("max-n must be at least 1".into()));
        }
        let rows = (1..=max_n).into_par_iter().map(TableRow::compute).collect::<Result<Vec<_>>>()?;
        for r in &rows {
            let expected = [a_formula(r.n)?, a2_formula(r.n)?, a3_formula(r.n)?];
            let ok = [&r.a1, &r.a2, &r.a3].into_iter().zip(&expected).all(|(a, b)| a == b);
            report.check(format!("n={} product formulas", r.n), ok, "x = 1, 2, 3");
        }
        let body = match format {
            Format::Text => render_text_table(&rows),
            Format::Csv => {
                let mut s = format!("{CSV_HEADER}\n");
                for r in &rows {
                    s.push_str(&r.to_csv());
                    s.push('\n');
                }
                s
            }
            Format::Json => rows.iter().map(|r| r.to_json().to_string() + "\n").collect(),
        };
        report.body = Some(body);
        Ok(report)
    })
}

/// Lists every `n×n` ASM, or its square-ice state when `ice` is set.
pub fn cmd_enumerate(n: usize, ice: bool) -> Result<RunReport> {
    timed(|| {
        let mut report = RunReport::new("enumerate").input("n", n);
        let asms = enumerate(n)?;
        report.output("count", asms.len());
        let expected = a_formula(n)?;
        report.check("count matches product formula", BigInt::from(asms.len()) == expected, format!("{expected}"));
        let states: Vec<_> = asms.iter().map(to_ice).collect();
        let round_trip = asms.iter().zip(&states).all(|(a, s)| &from_ice(s) == a);
        report.check("ice bijection round trip", round_trip, "");
        report.body = Some(if ice { write_ice(&states) } else { write_asms(&asms) });
        Ok(report)
    })
}

/// Validates ASM text and reports per-size counts.
pub fn cmd_check_asm(source: &str, text: &str) -> Result<RunReport> {
    timed(|| {
        let mut report = RunReport::new("check-asm").input("file", source);
        let asms = parse_asms(text)?;
        report.output("matrices", asms.len());
        let negatives: usize = asms.iter().map(|a| a.negative_count()).sum();
        report.output("entries equal to -1", negatives);
        let round_trip = asms.iter().all(|a| from_ice(&to_ice(a)) == *a);
        report.check("ice bijection round trip", round_trip, "");
        let mut sorted = asms.clone();
        sorted.sort();
        sorted.dedup();
        report.check("no duplicates", sorted.len() == asms.len(), format!("{} distinct", sorted.len()));
        Ok(report)
    })
}

/// `--workers` wins; otherwise [`WORKERS_ENV`]; otherwise rayon's default.
pub fn resolve_workers(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|e| Error::Parse(format!("{WORKERS_ENV}={v:?}: {e}"))),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_lists() {
        assert_eq!(parse_methods("brute,transfer,formula").unwrap(), vec![Method::Brute, Method::Transfer, Method::Formula]);
        assert!(parse_methods("brute,magic").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(parse_rational("-1/2").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn count_formula() {
        let r = cmd_count(4, &[Method::Formula]).unwrap();
        assert_eq!(r.outputs, vec![("A(4;1) [formula]".to_string(), "42".to_string())]);
        assert!(r.checks.is_empty());
    }

    #[test]
    fn csv_row_round_trip() {
        let row = TableRow::compute(5).unwrap();
        assert_eq!(TableRow::from_csv(&row.to_csv()).unwrap(), row);
        assert_eq!(TableRow::from_json(&row.to_json()).unwrap(), row);
        assert!(TableRow::from_csv("1,2,3").is_err());
    }

    #[test]
    fn json_row_shape() {
        let row = TableRow::compute(3).unwrap();
        assert_eq!(row.to_json().to_string(), r#"{"n":3,"a1":"7","a2":"8","a3":"9","poly":["6","1"]}"#);
    }

    #[test]
    fn render_splits_body() {
        let r = cmd_table(2, Format::Csv).unwrap();
        let (out, err) = r.render();
        assert_eq!(out, "n,a1,a2,a3,poly\n1,1,1,1,1\n2,2,2,2,2\n");
        assert!(err.contains("[ok] n=2 product formulas"));
        assert!(err.starts_with("[ok]"));
    }
}
