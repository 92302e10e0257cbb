//! Output rendering. Integers are printed in decimal without separators;
//! TeX output uses the row-per-variety table layout.

use num_bigint::BigInt;
use serde_json::{json, Value};

use detvar_core::detvar::{ConormalCycle, EulerForms, InvariantReport, VarietyId};

use crate::verify::Summary;
use crate::{Format, Variety};

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn line(v: &[BigInt], sep: &str) -> String {
    strings(v).join(sep)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn tex_table(headers: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut s = format!("\\begin{{tabular}}{{c | *{{{}}}{{c}}}}\n", headers.len());
    s.push_str(&format!(
        "  Table & {} \\\\\n\\hline\n",
        headers.join(" & ")
    ));
    for (label, cells) in rows {
        s.push_str(&format!("{label} & {} \\\\\n", cells.join(" & ")));
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn tau(id: VarietyId) -> String {
    format!("\\tau_{{{},{},{}}}", id.m, id.n, id.k)
}

fn scalar(fmt: Format, fields: Value, name: &str, value: &BigInt, tex_label: String) -> String {
    match fmt {
        Format::Plain | Format::Csv => format!("{value}\n"),
        Format::Json => {
            let mut v = fields;
            v[name] = Value::String(value.to_string());
            json_text(&v)
        }
        Format::Tex => tex_table(&[tex_label], &[(String::new(), vec![value.to_string()])]),
    }
}

pub fn euler_value(fmt: Format, v: &Variety, i: usize, value: &BigInt) -> String {
    let fields = json!({"m": v.m, "n": v.n, "k": v.k, "i": i});
    let label = format!(
        "$Eu_{{\\tau_{{{},{},{}}}}}(\\tau_{{{},{},{}}})$",
        v.m,
        v.n,
        v.k,
        v.m,
        v.n,
        v.k + i
    );
    scalar(fmt, fields, "eu", value, label)
}

pub fn euler_forms(fmt: Format, v: &Variety, i: usize, forms: &EulerForms) -> String {
    let (a, b) = (forms.inverse_form.to_string(), forms.top_form.to_string());
    match fmt {
        Format::Plain => format!("{a} {b}\n"),
        Format::Csv => format!("{a},{b}\n"),
        Format::Json => json_text(&json!({
            "m": v.m, "n": v.n, "k": v.k, "i": i,
            "inverse_form": a,
            "top_form": b,
        })),
        Format::Tex => tex_table(
            &["$c^{-1}$ form".into(), "$c_{top}$ form".into()],
            &[(format!("$i={i}$"), vec![a, b])],
        ),
    }
}

fn matrix_rows(e: &[Vec<BigInt>], sep: &str) -> String {
    e.iter().map(|row| line(row, sep) + "\n").collect()
}

pub fn eu_table(fmt: Format, m: usize, n: usize, e: &[Vec<BigInt>]) -> String {
    match fmt {
        Format::Plain => matrix_rows(e, " "),
        Format::Csv => matrix_rows(e, ","),
        Format::Json => json_text(&json!({
            "m": m, "n": n,
            "eu_matrix": e.iter().map(|r| strings(r)).collect::<Vec<_>>(),
        })),
        Format::Tex => {
            let headers: Vec<String> = (0..n).map(|i| format!("$i={i}$")).collect();
            let rows: Vec<(String, Vec<String>)> = e
                .iter()
                .enumerate()
                .map(|(j, r)| (format!("$j={j}$"), strings(r)))
                .collect();
            tex_table(&headers, &rows)
        }
    }
}

/// A vector-valued invariant: `beta`, `polar` or `microlocal`.
pub fn vector(fmt: Format, id: VarietyId, name: &str, v: &[BigInt]) -> String {
    match fmt {
        Format::Plain => line(v, " ") + "\n",
        Format::Csv => line(v, ",") + "\n",
        Format::Json => {
            let mut out = json!({"m": id.m, "n": id.n, "k": id.k, "dim": id.dim()});
            out[name] = json!(strings(v));
            json_text(&out)
        }
        Format::Tex => {
            let (headers, label): (Vec<String>, String) = match name {
                "beta" => (
                    (0..v.len())
                        .map(|l| format!("$\\mathbb{{P}}^{{{l}}}$"))
                        .collect(),
                    format!("$c_M({})$", tau(id)),
                ),
                "polar" => (
                    (0..v.len()).map(|l| format!("$[M_{{{l}}}]$")).collect(),
                    format!("${}$", tau(id)),
                ),
                _ => (
                    (0..v.len()).map(|i| format!("$c_{{{i}}}$")).collect(),
                    format!("$IC({})$", tau(id)),
                ),
            };
            tex_table(&headers, &[(label, strings(v))])
        }
    }
}

fn conormal_values(id: VarietyId, con: &ConormalCycle) -> Vec<BigInt> {
    (1..id.m * id.n).map(|j| con.get(j)).collect()
}

pub fn conormal(fmt: Format, id: VarietyId, con: &ConormalCycle) -> String {
    let values = conormal_values(id, con);
    match fmt {
        Format::Plain => line(&values, " ") + "\n",
        Format::Csv => line(&values, ",") + "\n",
        Format::Json => json_text(&json!({
            "m": id.m, "n": id.n, "k": id.k,
            "conormal": conormal_json(con),
            "conormal_sign": con.sign,
        })),
        Format::Tex => {
            let mn = id.m * id.n;
            let headers: Vec<String> = (1..mn)
                .map(|j| format!("$h_1^{{{}}}h_2^{{{j}}}$", mn - j))
                .collect();
            tex_table(
                &headers,
                &[(format!("$Con({})$", tau(id)), strings(&values))],
            )
        }
    }
}

fn conormal_json(con: &ConormalCycle) -> Value {
    Value::Object(
        con.coefficients
            .iter()
            .map(|(j, v)| (j.to_string(), Value::String(v.to_string())))
            .collect(),
    )
}

pub fn chi(fmt: Format, k: usize, n: usize, value: &BigInt) -> String {
    scalar(
        fmt,
        json!({"k": k, "n": n}),
        "chi",
        value,
        format!("$\\chi(G({k},{n}))$"),
    )
}

pub fn report(fmt: Format, r: &InvariantReport) -> String {
    let id = r.id;
    let conormal = if r.conormal.coefficients.is_empty() {
        Vec::new()
    } else {
        conormal_values(id, &r.conormal)
    };
    match fmt {
        Format::Json => json_text(&r.to_json()),
        Format::Plain => {
            let mut s = format!("m {} n {} k {} dim {}\n", id.m, id.n, id.k, id.dim());
            s.push_str(&format!("beta {}\n", line(&r.beta, " ")));
            s.push_str(&format!("conormal {}\n", line(&conormal, " ")));
            s.push_str(&format!("conormal_sign {}\n", r.conormal.sign));
            s.push_str(&format!("polar {}\n", line(&r.polar, " ")));
            for row in &r.eu_matrix {
                s.push_str(&format!("eu_matrix {}\n", line(row, " ")));
            }
            s.push_str(&format!("microlocal {}\n", line(&r.microlocal, " ")));
            s
        }
        Format::Csv => {
            let mut s = format!("m,{}\nn,{}\nk,{}\ndim,{}\n", id.m, id.n, id.k, id.dim());
            let mut row = |name: &str, v: &[BigInt]| {
                s.push_str(name);
                for x in v {
                    s.push(',');
                    s.push_str(&x.to_string());
                }
                s.push('\n');
            };
            row("beta", &r.beta);
            row("conormal", &conormal);
            row("conormal_sign", &[BigInt::from(r.conormal.sign)]);
            row("polar", &r.polar);
            for e in &r.eu_matrix {
                row("eu_matrix", e);
            }
            row("microlocal", &r.microlocal);
            s
        }
        Format::Tex => {
            let mut s = vector(fmt, id, "beta", &r.beta);
            if !conormal.is_empty() {
                s.push_str(&self::conormal(fmt, id, &r.conormal));
                s.push_str(&vector(fmt, id, "polar", &r.polar));
            }
            s.push_str(&eu_table(fmt, id.m, id.n, &r.eu_matrix));
            s.push_str(&vector(fmt, id, "microlocal", &r.microlocal));
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verification(fmt: Format, summary: &Summary) -> String {
    let failed = summary.failed();
    let passed = summary.results.len() - failed;
    let status = |ok: bool| if ok { "PASS" } else { "FAIL" };
    match fmt {
        Format::Plain => {
            let mut s = String::new();
            for r in &summary.results {
                s.push_str(&format!("{} {}: {}\n", status(r.passed), r.label, r.detail));
            }
            s.push_str(&format!("{passed} passed, {failed} failed\n"));
            s
        }
        Format::Csv => {
            let mut s = String::from("case,status,detail\n");
            for r in &summary.results {
                s.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(&r.label),
                    status(r.passed),
                    csv_field(&r.detail)
                ));
            }
            s
        }
        Format::Json => json_text(&json!({
            "passed": passed,
            "failed": failed,
            "cases": summary.results.iter().map(|r| json!({
                "case": r.label,
                "passed": r.passed,
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Tex => {
            let rows: Vec<(String, Vec<String>)> = summary
                .results
                .iter()
                .map(|r| (r.label.clone(), vec![status(r.passed).to_string()]))
                .collect();
            tex_table(&["Result".into()], &rows)
        }
    }
}
