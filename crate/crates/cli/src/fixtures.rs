//! Golden tables: the six printed tables, their recomputation, and the errata
//! that record where print and computation disagree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use higher_jones::jones_algebras::DimensionRow;
use higher_jones::oracle::{
    enumerate_paths, rank_one_transfer, transfer_matrix_count, ENUMERATE_MAX_R,
};
use higher_jones::{
    fusion_mults, fusion_mults_altsum, minuscule_walk_mults, AlgebraConfig, Family, HigherJones,
    Weight,
};
use num_bigint::BigUint;

use crate::CliError;

const PRINTED: &str = include_str!("../data/printed.txt");
const ERRATA: &str = include_str!("../data/errata.txt");

/// Rows per table.
pub const LEVELS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4,
        TableId::T5,
        TableId::T6,
    ];

    pub fn file_name(self) -> String {
        format!("table{}.csv", self as u8 + 1)
    }

    /// The configurations whose rows make up the table, in column order.
    pub fn configs(self) -> Vec<AlgebraConfig> {
        let configs = match self {
            TableId::T1 => vec![AlgebraConfig::symmetric(5)],
            TableId::T2 => vec![
                AlgebraConfig::brauer(5, 7),
                AlgebraConfig::brauer(3, 7),
                AlgebraConfig::brauer(1, 7),
            ],
            TableId::T3 => vec![AlgebraConfig::brauer(4, 7), AlgebraConfig::brauer(6, 7)],
            TableId::T4 => vec![AlgebraConfig::brauer(10, 11)],
            TableId::T5 => vec![AlgebraConfig::hecke(12)],
            TableId::T6 => (1..=3).map(|n| AlgebraConfig::bmw(n, 10)).collect(),
        };
        configs
            .into_iter()
            .map(|c| c.expect("table configurations are valid"))
            .collect()
    }

    /// Labels the printed table leaves out on purpose: the trivial partition
    /// and the five-part partition always have dimension 1 at ℓ = 12.
    fn omitted(self, label: &Weight) -> bool {
        self == TableId::T5 && matches!(label.rank(), 1 | 5)
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", *self as u8 + 1)
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableId::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| format!("unknown table {s:?}"))
    }
}

/// One printed cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedCell {
    pub table: TableId,
    pub config: String,
    pub r: usize,
    pub column: String,
    pub weight: Weight,
    pub value: BigUint,
}

/// A cell where the printed value differs from the computed one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Erratum {
    pub table: TableId,
    pub r: usize,
    pub weight: Weight,
    pub printed: BigUint,
    pub computed: BigUint,
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.table,
            self.r,
            self.weight.dotted(),
            self.printed,
            self.computed
        )
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty() && !f[0].starts_with('#'))
}

fn field<T: FromStr>(fields: &[&str], i: usize, line: usize, what: &str) -> Result<T, CliError> {
    fields
        .get(i)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CliError::Failure(format!("line {line}: bad {what}")))
}

fn weight_field(fields: &[&str], i: usize, line: usize) -> Result<Weight, CliError> {
    fields
        .get(i)
        .and_then(|s| Weight::parse_dotted(s))
        .ok_or_else(|| CliError::Failure(format!("line {line}: bad weight")))
}

fn parse_printed(text: &str) -> Result<Vec<PrintedCell>, CliError> {
    data_lines(text)
        .map(|(n, f)| {
            if f.len() != 6 {
                return Err(CliError::Failure(format!(
                    "printed line {n}: expected 6 fields"
                )));
            }
            Ok(PrintedCell {
                table: field(&f, 0, n, "table")?,
                config: f[1].to_string(),
                r: field(&f, 2, n, "row")?,
                column: f[3].to_string(),
                weight: weight_field(&f, 4, n)?,
                value: field(&f, 5, n, "value")?,
            })
        })
        .collect()
}

/// Parses errata lines `table row column printed computed`.
pub fn parse_errata(text: &str) -> Result<Vec<Erratum>, CliError> {
    data_lines(text)
        .map(|(n, f)| {
            if f.len() != 5 {
                return Err(CliError::Failure(format!(
                    "errata line {n}: expected 5 fields"
                )));
            }
            Ok(Erratum {
                table: field(&f, 0, n, "table")?,
                r: field(&f, 1, n, "row")?,
                weight: weight_field(&f, 2, n)?,
                printed: field(&f, 3, n, "printed value")?,
                computed: field(&f, 4, n, "computed value")?,
            })
        })
        .collect()
}

/// Every printed cell of the six tables.
pub fn printed_cells() -> Vec<PrintedCell> {
    parse_printed(PRINTED).expect("embedded table data is well formed")
}

/// The curated errata list shipped with the crate.
pub fn curated_errata() -> Vec<Erratum> {
    parse_errata(ERRATA).expect("embedded errata are well formed")
}

/// A recomputed table.
#[derive(Debug, Clone)]
pub struct TableFixture {
    pub id: TableId,
    pub configs: Vec<AlgebraConfig>,
    /// Rows for r = 1..=LEVELS, one per configuration.
    pub rows: Vec<(AlgebraConfig, DimensionRow)>,
    /// Printed cells that disagree with `rows`.
    pub errata: Vec<Erratum>,
}

impl TableFixture {
    pub fn build(id: TableId) -> Result<Self, CliError> {
        let configs = id.configs();
        let mut rows = Vec::new();
        for r in 1..=LEVELS {
            for c in &configs {
                rows.push((*c, c.simple_dims(r)?));
            }
        }
        let mut fixture = TableFixture {
            id,
            configs,
            rows,
            errata: Vec::new(),
        };
        fixture.errata = fixture
            .compare(&printed_cells())
            .into_iter()
            .filter(|e| e.printed != e.computed)
            .collect();
        Ok(fixture)
    }

    /// The computed value for a cell label (0 if the label is not in the weight set).
    pub fn computed(&self, config: &str, r: usize, weight: &Weight) -> BigUint {
        self.rows
            .iter()
            .filter(|(c, row)| c.to_string() == config && row.r == r)
            .find_map(|(_, row)| row.get(weight).cloned())
            .unwrap_or_default()
    }

    /// Pairs each printed cell of this table with its computed value.
    pub fn compare(&self, cells: &[PrintedCell]) -> Vec<Erratum> {
        cells
            .iter()
            .filter(|c| c.table == self.id)
            .map(|c| Erratum {
                table: self.id,
                r: c.r,
                weight: c.weight.clone(),
                printed: c.value.clone(),
                computed: self.computed(&c.config, c.r, &c.weight),
            })
            .collect()
    }

    /// Computed labels that no printed cell covers.
    pub fn uncovered(&self, cells: &[PrintedCell]) -> Vec<(usize, Weight)> {
        let printed: BTreeSet<(String, usize, Weight)> = cells
            .iter()
            .filter(|c| c.table == self.id)
            .map(|c| (c.config.clone(), c.r, c.weight.clone()))
            .collect();
        self.rows
            .iter()
            .flat_map(|(c, row)| {
                row.entries
                    .iter()
                    .map(move |(w, _)| (c.to_string(), row.r, w.clone()))
            })
            .filter(|(c, r, w)| {
                !self.id.omitted(w) && !printed.contains(&(c.clone(), *r, w.clone()))
            })
            .map(|(_, r, w)| (r, w))
            .collect()
    }

    /// The table as `r,weight,dim` CSV.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,weight,dim\n");
        for (_, row) in &self.rows {
            for (w, d) in &row.entries {
                out.push_str(&format!("{},{},{}\n", row.r, w.dotted(), d));
            }
        }
        out
    }
}

/// Renders an errata file.
pub fn errata_text(errata: &[Erratum]) -> String {
    let mut out = String::from("# table row column printed computed\n");
    for e in errata {
        out.push_str(&format!("{e}\n"));
    }
    out
}

pub const ERRATA_FILE: &str = "errata.txt";

/// All six tables, recomputed.
pub fn build_all() -> Result<Vec<TableFixture>, CliError> {
    TableId::ALL.into_iter().map(TableFixture::build).collect()
}

/// File name and contents of every fixture file.
pub fn render_all(fixtures: &[TableFixture]) -> Vec<(String, String)> {
    let mut files: Vec<(String, String)> = fixtures
        .iter()
        .map(|f| (f.id.file_name(), f.to_csv()))
        .collect();
    let errata: Vec<Erratum> = fixtures.iter().flat_map(|f| f.errata.clone()).collect();
    files.push((ERRATA_FILE.to_string(), errata_text(&errata)));
    files
}

pub fn emit(dir: &Path) -> Result<Vec<String>, CliError> {
    let files = render_all(&build_all()?);
    fs::create_dir_all(dir).map_err(|e| CliError::Failure(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, text) in files {
        let path = dir.join(&name);
        fs::write(&path, text)
            .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

type CsvCells = BTreeMap<(usize, String), String>;

fn parse_csv(name: &str, text: &str) -> Result<(Vec<(usize, String)>, CsvCells), CliError> {
    let mut lines = text.lines();
    if lines.next() != Some("r,weight,dim") {
        return Err(CliError::Failure(format!(
            "{name}: schema mismatch: missing r,weight,dim header"
        )));
    }
    let mut order = Vec::new();
    let mut cells = BTreeMap::new();
    for (i, line) in lines.enumerate() {
        let f: Vec<&str> = line.split(',').collect();
        let r = f.first().and_then(|s| s.parse::<usize>().ok());
        match (r, f.len()) {
            (Some(r), 3) => {
                order.push((r, f[1].to_string()));
                cells.insert((r, f[1].to_string()), f[2].to_string());
            }
            _ => {
                return Err(CliError::Failure(format!(
                    "{name}: schema mismatch on line {}: {line:?}",
                    i + 2
                )))
            }
        }
    }
    Ok((order, cells))
}

/// Compares fixture files in `dir` with a fresh emission, byte for byte.
/// Returns one message per mismatch, naming (table, row, column) where possible.
pub fn diff(dir: &Path) -> Result<Vec<String>, CliError> {
    let fixtures = build_all()?;
    let mut problems = Vec::new();
    for (name, expected) in render_all(&fixtures) {
        let path = dir.join(&name);
        let found = fs::read_to_string(&path)
            .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
        if found == expected {
            continue;
        }
        let before = problems.len();
        if name == ERRATA_FILE {
            let want = parse_errata(&expected)?;
            let have = parse_errata(&found)?;
            for e in want.iter().filter(|e| !have.contains(e)) {
                problems.push(format!("{ERRATA_FILE}: missing entry {e}"));
            }
            for e in have.iter().filter(|e| !want.contains(e)) {
                problems.push(format!("{ERRATA_FILE}: unexpected entry {e}"));
            }
        } else {
            let table = fixtures
                .iter()
                .find(|f| f.id.file_name() == name)
                .map(|f| f.id.to_string())
                .unwrap_or_default();
            let (want_order, want) = parse_csv(&name, &expected)?;
            let (have_order, have) = parse_csv(&name, &found)?;
            for key in &want_order {
                match have.get(key) {
                    None => problems.push(format!(
                        "{table} row {} column {}: missing (expected {})",
                        key.0, key.1, want[key]
                    )),
                    Some(v) if *v != want[key] => problems.push(format!(
                        "{table} row {} column {}: expected {}, found {v}",
                        key.0, key.1, want[key]
                    )),
                    Some(_) => {}
                }
            }
            for key in have_order.iter().filter(|k| !want.contains_key(k)) {
                problems.push(format!(
                    "{table} row {} column {}: unexpected cell",
                    key.0, key.1
                ));
            }
            if problems.len() == before && want_order != have_order {
                problems.push(format!("{table}: rows out of order"));
            }
        }
        if problems.len() == before {
            problems.push(format!("{name}: contents differ in formatting"));
        }
    }
    Ok(problems)
}

/// The semisimple quotient whose fusion multiplicities give a cell's value.
pub fn quotient_for(config: &AlgebraConfig, weight: &Weight) -> Result<HigherJones, CliError> {
    let quotients = config.resolve()?;
    if config.regularity().is_some() {
        quotients
            .into_iter()
            .find(|q| q.system.rank() == weight.rank())
            .ok_or_else(|| {
                CliError::Failure(format!(
                    "no quotient of rank {} for {config}",
                    weight.rank()
                ))
            })
    } else {
        Ok(quotients.into_iter().next().expect("one quotient"))
    }
}

/// Recomputes one cell by every applicable independent route.
pub fn confirmations(
    config: &AlgebraConfig,
    r: usize,
    weight: &Weight,
) -> Result<Vec<(&'static str, BigUint)>, CliError> {
    let q = quotient_for(config, weight)?;
    let (sys, params) = (&q.system, q.params);
    let mut out = vec![
        ("fusion", fusion_mults(sys, params, r)?.get(weight)),
        ("altsum", fusion_mults_altsum(sys, params, r)?.get(weight)),
    ];
    if sys.family() != Family::B {
        out.push(("walk", minuscule_walk_mults(sys, params, r)?.get(weight)));
        if r <= ENUMERATE_MAX_R {
            out.push(("enumerate", enumerate_paths(sys, params, r, weight)?));
        }
    }
    if sys.rank() == 1 {
        let (states, adjacency) = rank_one_transfer(sys, params, r)?;
        out.push((
            "transfer",
            transfer_matrix_count(&states, &adjacency, r, weight)?,
        ));
    }
    Ok(out)
}

/// Looks up the configuration a printed cell belongs to.
pub fn config_of(cell: &PrintedCell) -> AlgebraConfig {
    cell.table
        .configs()
        .into_iter()
        .find(|c| c.to_string() == cell.config)
        .expect("printed cells name table configurations")
}
