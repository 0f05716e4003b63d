//! JSON and CSV renderings. Every renderer is a pure function of its input,
//! with terms in decreasing lexicographic order.

use kron_core::series::RationalGF;
use kron_core::verify::Report;
use kron_core::{Partition, SchurVector};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Integers that fit in `i64` become JSON numbers; larger ones become strings.
pub fn int_json(c: &BigInt) -> Value {
    i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from)
}

pub fn partition_json(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

/// One compact JSON document per line.
fn line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

pub fn expansion_json(mu: &Partition, nu: &Partition, f: &SchurVector) -> String {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| json!({"lambda": partition_json(l), "coeff": int_json(c)}))
        .collect();
    line(&json!({"mu": partition_json(mu), "nu": partition_json(nu), "terms": terms}))
}

/// `d,k,lambda,coeff` rows.
pub fn expansions_csv<'a>(
    items: impl IntoIterator<Item = (usize, usize, &'a SchurVector)>,
) -> String {
    let rows = items.into_iter().flat_map(|(d, k, f)| {
        f.terms()
            .map(move |(l, c)| vec![d.to_string(), k.to_string(), l.to_string(), c.to_string()])
            .collect::<Vec<_>>()
    });
    csv_rows(&["d", "k", "lambda", "coeff"], rows)
}

/// `mu,nu,lambda,coeff` rows, for products not indexed by `(d, k)`.
pub fn oracle_csv(mu: &Partition, nu: &Partition, f: &SchurVector) -> String {
    let rows = f
        .terms()
        .map(|(l, c)| vec![mu.to_string(), nu.to_string(), l.to_string(), c.to_string()]);
    csv_rows(&["mu", "nu", "lambda", "coeff"], rows)
}

pub fn table_json(items: &[(usize, usize, SchurVector)]) -> String {
    let rows: Vec<Value> = items
        .iter()
        .flat_map(|(d, k, f)| {
            f.terms().map(move |(l, c)| {
                json!({"d": d, "k": k, "lambda": partition_json(l), "coeff": int_json(c)})
            })
        })
        .collect();
    line(&Value::from(rows))
}

pub fn report_json(report: &Report) -> String {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "d": f.d,
                "k": f.k,
                "lambda": f.lambda.as_ref().map(partition_json),
                "detail": f.detail,
            })
        })
        .collect();
    line(&json!({
        "target": report.target.name(),
        "passed": report.passed(),
        "checked": report.checked,
        "failures": failures,
    }))
}

/// `d,k,lambda,detail` rows, one per failure.
pub fn report_csv(report: &Report) -> String {
    let rows = report.failures.iter().map(|f| {
        vec![
            f.d.to_string(),
            f.k.to_string(),
            f.lambda.as_ref().map(|l| l.to_string()).unwrap_or_default(),
            f.detail.clone(),
        ]
    });
    csv_rows(&["d", "k", "lambda", "detail"], rows)
}

pub fn gf_json(
    kind: &str,
    k: usize,
    r: Option<usize>,
    gf: &RationalGF,
    series: &[BigInt],
) -> String {
    let ints = |v: &[BigInt]| Value::from(v.iter().map(int_json).collect::<Vec<_>>());
    line(&json!({
        "kind": kind,
        "k": k,
        "r": r,
        "numerator": ints(gf.numerator().coeffs()),
        "denominator": ints(gf.denominator().coeffs()),
        "series": ints(series),
    }))
}

/// `power,coeff` rows of the series.
pub fn gf_csv(series: &[BigInt]) -> String {
    let rows = series
        .iter()
        .enumerate()
        .map(|(i, c)| vec![i.to_string(), c.to_string()]);
    csv_rows(&["power", "coeff"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SchurVector {
        let mut f = SchurVector::zero(4);
        f.add_term(&Partition::new(vec![2, 1, 1]), 1);
        f.add_term(&Partition::new(vec![3, 1]), 1);
        f
    }

    #[test]
    fn expansion_json_shape() {
        let mu = Partition::two_row(2, 2);
        let nu = Partition::two_row(3, 1);
        let v: Value = serde_json::from_str(&expansion_json(&mu, &nu, &sample())).unwrap();
        assert_eq!(
            v,
            json!({"mu": [2, 2], "nu": [3, 1], "terms": [
                {"lambda": [3, 1], "coeff": 1},
                {"lambda": [2, 1, 1], "coeff": 1}
            ]})
        );
    }

    #[test]
    fn csv_quotes_partitions() {
        let f = sample();
        assert_eq!(
            expansions_csv([(2, 1, &f)]),
            "d,k,lambda,coeff\n2,1,\"[3,1]\",1\n2,1,\"[2,1,1]\",1\n"
        );
    }

    #[test]
    fn big_coefficients_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        assert!(int_json(&big).is_string());
        assert_eq!(int_json(&BigInt::from(-3)), json!(-3));
    }
}
