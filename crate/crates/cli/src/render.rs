use chordgenus::{BigRational, GenusTable, NPolynomial, QPolynomial};
use serde_json::{json, Value};

/// Exact coefficients, lowest power first, as decimal strings
/// (`"num/den"` for non-integers).
pub fn q_coefficients(p: &QPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigRational::to_string).collect()
}

pub fn n_coefficients(p: &NPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn table_json(table: &GenusTable) -> Value {
    let counts: serde_json::Map<String, Value> = table
        .counts()
        .iter()
        .map(|(g, c)| (g.to_string(), Value::String(c.to_string())))
        .collect();
    json!({
        "backbones": table.backbones.count(),
        "chords": table.n,
        "counts": counts,
    })
}

pub fn csv_rows(tables: &[GenusTable], max_g: Option<usize>) -> String {
    let mut out = String::from("n,g,count\n");
    for table in tables {
        for (g, c) in table.counts() {
            if max_g.is_none_or(|m| *g <= m) {
                out.push_str(&format!("{},{g},{c}\n", table.n));
            }
        }
    }
    out
}

pub fn rows_json(tables: &[GenusTable], max_g: Option<usize>) -> Value {
    let rows: Vec<Value> = tables
        .iter()
        .flat_map(|t| t.counts().iter().map(move |(g, c)| (t.n, *g, c)))
        .filter(|(_, g, _)| max_g.is_none_or(|m| *g <= m))
        .map(|(n, g, c)| json!({ "n": n, "g": g, "count": c.to_string() }))
        .collect();
    Value::Array(rows)
}
