use higher_jones::jones_algebras::DimensionRow;
use higher_jones::AlgebraConfig;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

pub fn csv(rows: &[DimensionRow]) -> String {
    let mut out = String::from("r,weight,dim\n");
    for row in rows {
        for (w, d) in &row.entries {
            out.push_str(&format!("{},{},{}\n", row.r, w.dotted(), d));
        }
    }
    out
}

pub fn json(config: &AlgebraConfig, rows: &[DimensionRow]) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            let entries: Vec<Value> = row
                .entries
                .iter()
                .map(|(w, d)| json!({ "weight": w.coords(), "dim": d.to_string() }))
                .collect();
            json!({ "r": row.r, "entries": entries })
        })
        .collect();
    let doc = json!({ "algebra": config.to_string(), "rows": rows });
    let mut out = serde_json::to_string_pretty(&doc).expect("json values serialize");
    out.push('\n');
    out
}

pub fn text(rows: &[DimensionRow]) -> String {
    let cells: Vec<(String, String, String)> = rows
        .iter()
        .flat_map(|row| {
            row.entries
                .iter()
                .map(move |(w, d)| (row.r.to_string(), w.to_string(), d.to_string()))
        })
        .collect();
    let width = |f: fn(&(String, String, String)) -> &String, head: &str| {
        cells
            .iter()
            .map(|c| f(c).len())
            .chain([head.len()])
            .max()
            .unwrap_or(0)
    };
    let (wr, ww, wd) = (
        width(|c| &c.0, "r"),
        width(|c| &c.1, "weight"),
        width(|c| &c.2, "dim"),
    );
    let mut out = format!("{:>wr$}  {:<ww$}  {:>wd$}\n", "r", "weight", "dim");
    for (r, w, d) in &cells {
        out.push_str(&format!("{r:>wr$}  {w:<ww$}  {d:>wd$}\n"));
    }
    out
}

pub fn render(format: Format, config: &AlgebraConfig, rows: &[DimensionRow]) -> String {
    match format {
        Format::Csv => csv(rows),
        Format::Json => json(config, rows),
        Format::Text => text(rows),
    }
}
