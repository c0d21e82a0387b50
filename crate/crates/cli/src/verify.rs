//! Verification suites behind `higher-jones verify`.

use std::collections::BTreeSet;
use std::fmt::Display;

use higher_jones::jones_algebras::{algebra_decomposition, is_e_regular, DimensionRow};
use higher_jones::oracle::{
    char_product_decompose, enumerate_paths, rank_one_transfer, transfer_matrix_count,
};
use higher_jones::{
    delta_mults, fusion_mults, fusion_mults_altsum, minuscule_walk_mults, AlcoveParams,
    AlgebraConfig, Family, HigherJones, RootSystem, Weight,
};
use num_bigint::BigUint;

use crate::fixtures::{self, config_of, confirmations, Erratum, TableFixture, TableId};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Result<(), String>,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<(), String>) -> Self {
        Check {
            name: name.into(),
            outcome,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(()) => format!("{}: ok", self.name),
            Err(why) => format!("{}: FAIL ({why})", self.name),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| c.line() + "\n").collect();
        if let Some(s) = &self.summary {
            out.push_str(s);
            out.push('\n');
        }
        out
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn engine<T, E: Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Checks that every printed cell either matches or is a listed, independently
/// confirmed erratum, and that no computed label goes unprinted.
pub fn check_table(fixture: &TableFixture, curated: &[Erratum]) -> Result<(), String> {
    let cells: Vec<_> = fixtures::printed_cells()
        .into_iter()
        .filter(|c| c.table == fixture.id)
        .collect();
    let listed: BTreeSet<&Erratum> = curated.iter().filter(|e| e.table == fixture.id).collect();
    let found: BTreeSet<&Erratum> = fixture.errata.iter().collect();
    if let Some(e) = found.difference(&listed).next() {
        return Err(format!("unlisted deviation {e}"));
    }
    if let Some(e) = listed.difference(&found).next() {
        return Err(format!("listed erratum does not reproduce: {e}"));
    }
    for e in &fixture.errata {
        let cell = cells
            .iter()
            .find(|c| c.r == e.r && c.weight == e.weight)
            .expect("errata come from printed cells");
        let routes = engine(confirmations(&config_of(cell), e.r, &e.weight))?;
        ensure(routes.len() >= 3, || {
            format!("{e}: only {} routes apply", routes.len())
        })?;
        if let Some((name, v)) = routes.iter().find(|(_, v)| *v != e.computed) {
            return Err(format!("{e}: {name} gives {v}"));
        }
    }
    let uncovered = fixture.uncovered(&cells);
    ensure(uncovered.is_empty(), || {
        format!("computed labels missing from print: {:?}", uncovered)
    })
}

pub fn fixtures_suite() -> Result<Report, CliError> {
    let curated = fixtures::curated_errata();
    let mut report = Report::default();
    let mut applied = 0;
    for id in TableId::ALL {
        let fixture = TableFixture::build(id)?;
        let outcome = check_table(&fixture, &curated);
        let name = format!("{id} ({} errata)", fixture.errata.len());
        if outcome.is_ok() {
            applied += fixture.errata.len();
        }
        report.checks.push(Check::new(name, outcome));
    }
    let matched = report.checks.iter().filter(|c| c.passed()).count();
    report.summary = Some(format!(
        "{matched}/{} tables match ({applied} errata entries applied)",
        TableId::ALL.len()
    ));
    Ok(report)
}

fn modular(p: u64) -> AlcoveParams {
    AlcoveParams::modular(p).expect("odd prime")
}

fn quantum(ell: u64) -> AlcoveParams {
    AlcoveParams::quantum(ell).expect("admissible order")
}

/// Quotients exercised by the oracle suite: everything behind the six tables
/// plus all low-rank minuscule cases at a spread of parameters.
pub fn oracle_configs() -> Vec<HigherJones> {
    let mut out: Vec<HigherJones> = Vec::new();
    let mut push = |q: HigherJones| {
        if !out.contains(&q) {
            out.push(q);
        }
    };
    for id in TableId::ALL {
        for c in id.configs() {
            for q in c.resolve().expect("table configurations resolve") {
                push(q);
            }
        }
    }
    let hj = |f, n, p| HigherJones::new(f, n, p).expect("valid rank");
    for n in 1..=2 {
        for p in [modular(3), modular(5), modular(7), quantum(8), quantum(12)] {
            push(hj(Family::AGl, n, p));
        }
        for p in [modular(5), modular(7), quantum(9), quantum(10)] {
            push(hj(Family::C, n, p));
        }
        for p in [modular(5), modular(7)] {
            push(hj(Family::D, n, p));
        }
        push(hj(Family::B, n, modular(7)));
    }
    out
}

fn describe(sys: &RootSystem) -> String {
    format!("family {} rank {}", sys.family().name(), sys.rank())
}

fn compare_engines(q: &HigherJones, r_max: usize) -> Vec<(&'static str, Result<(), String>)> {
    let (sys, params) = (&q.system, q.params);
    let minuscule = sys.family() != Family::B;
    let mut fa = Ok(());
    let mut aw = Ok(());
    let mut we = Ok(());
    for r in 0..=r_max {
        let run = || -> Result<_, String> {
            Ok((
                engine(fusion_mults(sys, params, r))?,
                engine(fusion_mults_altsum(sys, params, r))?,
            ))
        };
        let (fused, alt) = match run() {
            Ok(x) => x,
            Err(e) => return vec![("fusion==altsum", Err(e))],
        };
        if fa.is_ok() && fused != alt {
            fa = Err(format!("r={r} {params}"));
        }
        if !minuscule {
            continue;
        }
        let walk = match engine(minuscule_walk_mults(sys, params, r)) {
            Ok(w) => w,
            Err(e) => return vec![("altsum==walk", Err(e))],
        };
        if aw.is_ok() && walk != alt {
            aw = Err(format!("r={r} {params}"));
        }
        if we.is_ok() {
            for w in sys.alcove_weights(params, r as u64).unwrap_or_default() {
                match enumerate_paths(sys, params, r, &w) {
                    Ok(n) if n == walk.get(&w) => {}
                    Ok(n) => {
                        we = Err(format!("r={r} {params} {w}: {n} vs {}", walk.get(&w)));
                        break;
                    }
                    Err(e) => {
                        we = Err(e.to_string());
                        break;
                    }
                }
            }
        }
    }
    let mut out = vec![("fusion==altsum", fa)];
    if minuscule {
        out.push(("altsum==walk", aw));
        out.push(("walk==enumerate", we));
    }
    out
}

pub fn oracles_suite() -> Report {
    let mut report = Report::default();
    let mut grouped: Vec<(String, Result<(), String>)> = Vec::new();
    for q in oracle_configs() {
        for (pair, outcome) in compare_engines(&q, 8) {
            let name = format!("{pair}, {}, r<=8", describe(&q.system));
            match grouped.iter_mut().find(|(n, _)| *n == name) {
                Some((_, o)) => {
                    if o.is_ok() {
                        *o = outcome;
                    }
                }
                None => grouped.push((name, outcome)),
            }
        }
    }
    report
        .checks
        .extend(grouped.into_iter().map(|(n, o)| Check::new(n, o)));

    for family in [Family::AGl, Family::B, Family::C, Family::D] {
        for n in 1..=2 {
            let sys = RootSystem::new(family, n).expect("valid rank");
            let outcome = (|| {
                for r in 0..=6 {
                    let delta = delta_mults(&sys, r);
                    for w in sys.dominant_weights(r as u64) {
                        let c = engine(char_product_decompose(&sys, r, &w))?;
                        ensure(c == delta.get(&w), || {
                            format!("r={r} {w}: {c} vs {}", delta.get(&w))
                        })?;
                    }
                }
                Ok(())
            })();
            report.checks.push(Check::new(
                format!("char==delta, {}, r<=6", describe(&sys)),
                outcome,
            ));
        }
    }

    for (family, params) in [
        (Family::AGl, modular(5)),
        (Family::B, modular(7)),
        (Family::C, modular(7)),
        (Family::C, quantum(10)),
        (Family::D, modular(7)),
    ] {
        let sys = RootSystem::new(family, 1).expect("rank one");
        let outcome = (|| {
            let (states, adjacency) = engine(rank_one_transfer(&sys, params, 14))?;
            for r in 0..=14 {
                let fused = engine(fusion_mults(&sys, params, r))?;
                for s in &states {
                    let t = engine(transfer_matrix_count(&states, &adjacency, r, s))?;
                    ensure(t == fused.get(s), || {
                        format!("r={r} {s}: {t} vs {}", fused.get(s))
                    })?;
                }
            }
            Ok(())
        })();
        report.checks.push(Check::new(
            format!("transfer==fusion, {} {params}, r<=14", describe(&sys)),
            outcome,
        ));
    }
    report
}

/// Two-part label of the Fibonacci interleaving at p = 5 (smaller label at odd
/// r, larger at even r).
pub fn fibonacci_label(r: i64) -> Weight {
    if r % 2 == 1 {
        Weight::new(vec![(r + 1) / 2, (r - 1) / 2]).trimmed()
    } else {
        Weight::new(vec![(r + 2) / 2, (r - 2) / 2]).trimmed()
    }
}

fn row_of(config: &AlgebraConfig, r: usize) -> Result<DimensionRow, String> {
    engine(config.simple_dims(r))
}

/// The chosen bijection for one parity, as (type B label, symplectic label) pairs.
pub type LabelMatch = Vec<(Weight, Weight)>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Searches, separately for even and odd r ≤ `r_max`, for a label bijection
/// under which the type B rows of rank `m` equal the symplectic rows of
/// δ = 2m + 1. Returns [even, odd] on success.
pub fn type_b_bijection(m: u64, p: u64, r_max: usize) -> Result<[LabelMatch; 2], String> {
    let b = engine(AlgebraConfig::brauer_type_b(m, p))?;
    let c = engine(AlgebraConfig::brauer(2 * m + 1, p))?;
    let mut found: Vec<LabelMatch> = Vec::new();
    for parity in [0, 1] {
        let levels: Vec<usize> = (1..=r_max).filter(|r| r % 2 == parity).collect();
        let mut rows = Vec::new();
        for &r in &levels {
            rows.push((row_of(&b, r)?, row_of(&c, r)?));
        }
        let collect = |pick: fn(&(DimensionRow, DimensionRow)) -> &DimensionRow| {
            rows.iter()
                .flat_map(|pair| pick(pair).labels())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        };
        let b_labels = collect(|p| &p.0);
        let c_labels = collect(|p| &p.1);
        if b_labels.len() != c_labels.len() {
            return Err(format!(
                "parity {parity}: {} type B labels vs {} symplectic labels",
                b_labels.len(),
                c_labels.len()
            ));
        }
        let value = |row: &DimensionRow, w: &Weight| row.get(w).cloned().unwrap_or_default();
        let hit = permutations(b_labels.len()).into_iter().find(|perm| {
            rows.iter().all(|(rb, rc)| {
                b_labels
                    .iter()
                    .zip(perm)
                    .all(|(lb, &j)| value(rb, lb) == value(rc, &c_labels[j]))
            })
        });
        match hit {
            Some(perm) => found.push(
                b_labels
                    .iter()
                    .zip(perm)
                    .map(|(lb, j)| (lb.clone(), c_labels[j].clone()))
                    .collect(),
            ),
            None => return Err(format!("parity {parity}: no label bijection matches")),
        }
    }
    let odd = found.pop().expect("two parities");
    let even = found.pop().expect("two parities");
    Ok([even, odd])
}

fn one() -> BigUint {
    BigUint::from(1u32)
}

pub fn laws_suite() -> Report {
    let mut report = Report::default();
    let mut push =
        |name: &str, outcome: Result<(), String>| report.checks.push(Check::new(name, outcome));

    push(
        "fibonacci p=5 r<=30",
        (|| {
            let s5 = engine(AlgebraConfig::symmetric(5))?;
            let (mut a, mut b) = (one(), one());
            for r in 1..=30 {
                let row = row_of(&s5, r as usize)?;
                let got = row.get(&fibonacci_label(r)).cloned().unwrap_or_default();
                ensure(got == a, || format!("r={r}: {got} vs {a}"))?;
                let next = &a + &b;
                a = std::mem::replace(&mut b, next);
            }
            Ok(())
        })(),
    );

    push(
        "hecke ell=8 two-part dims 2^(s-1) for r in {2s-1,2s}, r<=20",
        (|| {
            let h8 = engine(AlgebraConfig::hecke(8))?;
            for r in 1..=20usize {
                let want = one() << ((r - 1) / 2);
                for (l, d) in row_of(&h8, r)?
                    .entries
                    .iter()
                    .filter(|(l, _)| l.rank() == 2)
                {
                    ensure(*d == want, || format!("r={r} {l}: {d} vs {want}"))?;
                }
            }
            Ok(())
        })(),
    );

    push(
        "p=3 symmetric rows all 1, r<=20",
        (|| {
            let s3 = engine(AlgebraConfig::symmetric(3))?;
            for r in 1..=20 {
                let row = row_of(&s3, r)?;
                ensure(row.entries.iter().all(|(_, d)| *d == one()), || {
                    format!("r={r}")
                })?;
            }
            Ok(())
        })(),
    );

    let trivial = |family: Family, rank: fn(u64) -> usize| -> Result<(), String> {
        for p in [5, 7, 11] {
            let q = engine(HigherJones::new(family, rank(p), modular(p)))?;
            for r in 0..=20 {
                let d = engine(algebra_decomposition(&q, r))?;
                ensure(d.blocks.len() == 1 && d.total == one(), || {
                    format!("p={p} r={r}")
                })?;
            }
        }
        Ok(())
    };
    push(
        "A-GL rank p-1 quotient is k, p in {5,7,11}, r<=20",
        trivial(Family::AGl, |p| (p - 1) as usize),
    );
    push(
        "symplectic rank (p-1)/2 quotient is k, p in {5,7,11}, r<=20",
        trivial(Family::C, |p| ((p - 1) / 2) as usize),
    );

    push(
        "A-GL rank >= p quotient is 0, p in {3,5,7}, 1<=r<=10",
        (|| {
            for p in [3u64, 5, 7] {
                for rank in p..=p + 1 {
                    let q = engine(HigherJones::new(Family::AGl, rank as usize, modular(p)))?;
                    for r in 1..=10 {
                        let d = engine(algebra_decomposition(&q, r))?;
                        ensure(d.blocks.is_empty(), || format!("p={p} rank={rank} r={r}"))?;
                    }
                }
            }
            Ok(())
        })(),
    );

    push(
        "labels e-regular (symmetric e=p, hecke e=ell'), r<=14",
        (|| {
            let configs = [3u64, 5, 7]
                .into_iter()
                .map(AlgebraConfig::symmetric)
                .chain([5u64, 7, 8, 10, 12].into_iter().map(AlgebraConfig::hecke));
            for c in configs {
                let c = engine(c)?;
                let e = c.regularity().expect("partition labels");
                for r in 1..=14 {
                    for l in engine(c.weight_set(r))? {
                        ensure(is_e_regular(&l, e), || format!("{c} {l}"))?;
                    }
                }
            }
            Ok(())
        })(),
    );

    for m in [1, 2] {
        push(
            &format!(
                "type B m={m} p=7 matches delta={} under a label bijection, r<=10",
                2 * m + 1
            ),
            type_b_bijection(m, 7, 10).map(|_| ()),
        );
    }
    report
}
