use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};
use subcount::numth::factorize;
use subcount::rank4::{
    check_conjectures, check_symmetry_unimodality, count_rank4, count_rank4_order,
    count_via_primes, poly_rank4, poly_rank4_order, table_n, DegreeFinding,
};
use subcount::{Error, Result};

use crate::exit;
use crate::record::{count_value, inputs, int_value, poly_value, OutputRecord};
use crate::verify::{self, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Which engine `count` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Via {
    /// Multiply the prime-power counts.
    #[default]
    Primes,
    /// Evaluate the full sum on the arguments as given.
    Direct,
}

impl Via {
    fn name(self) -> &'static str {
        match self {
            Via::Primes => "primes",
            Via::Direct => "direct",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: OutputRecord,
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(record: OutputRecord, text: String) -> Self {
        Self {
            record,
            text,
            exit_code: exit::SUCCESS,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => self.record.to_json(),
        }
    }
}

pub fn count(m: u64, n: u64, r: u64, s: u64, order: Option<u64>, via: Via) -> Result<Outcome> {
    let value = match (via, order) {
        (Via::Primes, k) => count_via_primes(m, n, r, s, k)?,
        (Via::Direct, None) => count_rank4(m, n, r, s)?,
        (Via::Direct, Some(k)) => count_rank4_order(m, n, r, s, k)?,
    };
    let record = OutputRecord::new(
        "count",
        inputs([
            ("m", Some(m)),
            ("n", Some(n)),
            ("r", Some(r)),
            ("s", Some(s)),
            ("k", order),
        ]),
        count_value(&value),
    )
    .with_meta("via", Value::from(via.name()));
    Ok(Outcome::ok(record, value.to_string()))
}

fn require_prime(p: u64) -> Result<()> {
    let f = factorize(p)?;
    if f.pairs().len() == 1 && f.pairs()[0].1 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "--eval expects a prime, got {p}"
        )))
    }
}

pub fn poly(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    order: Option<u32>,
    eval: Option<u64>,
) -> Result<Outcome> {
    if let Some(p) = eval {
        require_prime(p)?;
    }
    let poly = match order {
        None => poly_rank4(a, b, c, d),
        Some(k) => poly_rank4_order(a, b, c, d, k)?,
    };
    let ins = inputs([
        ("a", Some(a.into())),
        ("b", Some(b.into())),
        ("c", Some(c.into())),
        ("d", Some(d.into())),
        ("k", order.map(u64::from)),
        ("p", eval),
    ]);
    let outcome = match eval {
        None => {
            let degree = poly.degree().map_or(Value::Null, Value::from);
            let record =
                OutputRecord::new("polynomial", ins, poly_value(&poly)).with_meta("degree", degree);
            Outcome::ok(record, poly.to_string())
        }
        Some(p) => {
            let value = poly.eval(p);
            let record = OutputRecord::new("count", ins, Value::String(value.to_string()))
                .with_meta("polynomial", poly_value(&poly));
            Outcome::ok(record, value.to_string())
        }
    };
    Ok(outcome)
}

pub fn table(max: u64) -> Result<Outcome> {
    let rows = table_n(max)?;
    let mut text = String::from("n\tN(n)");
    for (n, v) in &rows {
        write!(text, "\n{n}\t{v}").unwrap();
    }
    let value = rows
        .iter()
        .map(|(n, v)| json!({ "n": n, "count": count_value(v) }))
        .collect();
    let record = OutputRecord::new("table", inputs([("max", Some(max))]), Value::Array(value));
    Ok(Outcome::ok(record, text))
}

/// Renders a verification report; exit code 3 when it records a disagreement.
pub fn verify_outcome(report: &VerifyReport) -> Outcome {
    let disagreement = report.first_disagreement.as_ref().map(|d| {
        json!({
            "moduli": d.moduli,
            "order": d.order,
            "oracle": d.oracle.to_string(),
            "formula": d.formula.to_string(),
        })
    });
    let value = json!({
        "pass": report.pass(),
        "groups": report.groups,
        "comparisons": report.comparisons,
        "first_disagreement": disagreement,
    });
    let record = OutputRecord::new(
        "report",
        inputs([("max_order", Some(report.max_order))]),
        value,
    );
    let mut text = format!(
        "checked {} groups of order <= {} ({} comparisons)",
        report.groups, report.max_order, report.comparisons
    );
    let exit_code = match &report.first_disagreement {
        None => {
            text.push_str("\npass: formulas agree with the subgroup census");
            exit::SUCCESS
        }
        Some(d) => {
            let [m, n, r, s] = d.moduli;
            let what = d.order.map_or("total".to_owned(), |k| format!("order {k}"));
            write!(
                text,
                "\nFAIL: Z_{m} x Z_{n} x Z_{r} x Z_{s}, {what}: census {} but formula {}",
                d.oracle, d.formula
            )
            .unwrap();
            exit::VERIFICATION_FAILED
        }
    };
    Outcome {
        record,
        text,
        exit_code,
    }
}

pub fn verify(max_order: u64) -> Result<Outcome> {
    Ok(verify_outcome(&verify::verify(max_order)?))
}

fn finding_json(f: &DegreeFinding) -> Value {
    json!({
        "exponents": f.exponents,
        "degree": f.degree,
        "expected_degree": f.expected_degree,
        "leading": int_value(&f.leading),
        "pass": f.pass,
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn sorted_tuples(max_exp: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=max_exp {
        for b in a..=max_exp {
            for c in b..=max_exp {
                for d in c..=max_exp {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Degree and leading-coefficient scans for `1 <= a <= b <= c <= d <= E`,
/// plus symmetry and unimodality for every sorted tuple with exponents `<= E`.
pub fn conjectures(max_exp: u32) -> Result<Outcome> {
    let report = check_conjectures(max_exp);
    let symmetry: Vec<_> = sorted_tuples(max_exp)
        .into_iter()
        .map(|[a, b, c, d]| check_symmetry_unimodality(a, b, c, d))
        .collect();
    let pass = report.all_pass() && symmetry.iter().all(|s| s.pass());

    let mut text = String::new();
    for f in &report.degree_rule {
        writeln!(
            text,
            "degree 2a+b+c  {:?}: degree {} expected {} {}",
            f.exponents,
            f.degree,
            f.expected_degree,
            verdict(f.pass)
        )
        .unwrap();
    }
    for f in &report.equal_exponents {
        writeln!(
            text,
            "degree 4m, monic  {:?}: degree {} leading {} {}",
            f.exponents,
            f.degree,
            f.leading,
            verdict(f.pass)
        )
        .unwrap();
    }
    for s in &symmetry {
        writeln!(
            text,
            "symmetry/unimodality  {:?}: {}",
            s.exponents,
            verdict(s.pass())
        )
        .unwrap();
    }
    write!(
        text,
        "{}: {} degree checks, {} symmetry checks (exponents <= {max_exp})",
        verdict(pass),
        report.degree_rule.len() + report.equal_exponents.len(),
        symmetry.len()
    )
    .unwrap();

    let value = json!({
        "pass": pass,
        "degree_rule": report.degree_rule.iter().map(finding_json).collect::<Vec<_>>(),
        "equal_exponents": report.equal_exponents.iter().map(finding_json).collect::<Vec<_>>(),
        "symmetry": symmetry.iter().map(|s| json!({
            "exponents": s.exponents,
            "asymmetric": s.asymmetric,
            "non_unimodal": s.non_unimodal,
            "pass": s.pass(),
        })).collect::<Vec<_>>(),
    });
    let record = OutputRecord::new("report", inputs([("max_exp", Some(max_exp.into()))]), value);
    let exit_code = if pass {
        exit::SUCCESS
    } else {
        exit::VERIFICATION_FAILED
    };
    Ok(Outcome {
        record,
        text,
        exit_code,
    })
}
