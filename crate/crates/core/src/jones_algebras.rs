//! Named algebras and their higher Jones quotients.
//!
//! Each algebra surjects onto one or more semisimple endomorphism algebras of
//! fusion tensor powers; the simple modules of those quotients are labelled by
//! alcove weights and their dimensions are fusion multiplicities.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::branching::{
    fusion_mults, fusion_mults_altsum, minuscule_walk_mults, MultiplicityTable,
};
use crate::error::{Error, Result};
use crate::root_data::{AlcoveParams, Family, RootSystem, Weight};

/// A named algebra with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraConfig {
    /// kS_r in characteristic p.
    SymmetricGroup { p: u64 },
    /// H_r(q) with q of order ℓ.
    Hecke { ell: u64 },
    /// B_r(δ) with δ odd: symplectic quotient of rank (p − δ)/2.
    BrauerOdd { delta: u64, p: u64 },
    /// B_r(δ) with δ even: even orthogonal quotient of rank δ/2.
    BrauerEven { delta: u64, p: u64 },
    /// B_r(2m + 1) through the odd orthogonal group of rank m.
    BrauerTypeB { m: u64, p: u64 },
    /// BMW_r(−q^{2n+1}, q) with q of order ℓ.
    Bmw { n: u64, ell: u64 },
}

/// One semisimple quotient: a (root system, parameter) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherJones {
    pub system: RootSystem,
    pub params: AlcoveParams,
}

impl HigherJones {
    pub fn new(family: Family, rank: usize, params: AlcoveParams) -> Result<Self> {
        Ok(HigherJones {
            system: RootSystem::new(family, rank)?,
            params,
        })
    }
}

/// Simple-module dimensions at one level, in a fixed label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionRow {
    pub r: usize,
    pub entries: Vec<(Weight, BigUint)>,
}

impl DimensionRow {
    pub fn get(&self, w: &Weight) -> Option<&BigUint> {
        self.entries.iter().find(|(l, _)| l == w).map(|(_, d)| d)
    }

    pub fn labels(&self) -> Vec<Weight> {
        self.entries.iter().map(|(w, _)| w.clone()).collect()
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConfig(msg.into())
}

impl AlgebraConfig {
    pub fn symmetric(p: u64) -> Result<Self> {
        AlcoveParams::modular(p)?;
        Ok(AlgebraConfig::SymmetricGroup { p })
    }

    pub fn hecke(ell: u64) -> Result<Self> {
        AlcoveParams::quantum(ell)?;
        Ok(AlgebraConfig::Hecke { ell })
    }

    /// Picks the symplectic or even orthogonal quotient according to the parity of δ.
    pub fn brauer(delta: u64, p: u64) -> Result<Self> {
        AlcoveParams::modular(p)?;
        if delta % 2 == 1 {
            if delta > p - 2 {
                return Err(invalid(format!(
                    "odd delta must satisfy 0 < delta <= p-2 (got delta={delta}, p={p})"
                )));
            }
            Ok(AlgebraConfig::BrauerOdd { delta, p })
        } else {
            if delta < 2 || delta > p + 1 {
                return Err(invalid(format!(
                    "even delta must satisfy 2 <= delta <= p+1 (got delta={delta}, p={p})"
                )));
            }
            Ok(AlgebraConfig::BrauerEven { delta, p })
        }
    }

    pub fn brauer_type_b(m: u64, p: u64) -> Result<Self> {
        AlcoveParams::modular(p)?;
        if m < 1 || 2 * m + 3 > p {
            return Err(invalid(format!(
                "type B rank must satisfy 1 <= m <= (p-3)/2 (got m={m}, p={p})"
            )));
        }
        Ok(AlgebraConfig::BrauerTypeB { m, p })
    }

    pub fn bmw(n: u64, ell: u64) -> Result<Self> {
        if ell == 1 {
            return Err(invalid(
                "q = 1 identifies BMW with a Brauer algebra; use --algebra brauer",
            ));
        }
        AlcoveParams::quantum(ell)?;
        let max = if ell % 2 == 1 {
            (ell - 1) / 2
        } else {
            (ell - 4) / 2
        };
        if n < 1 || n > max {
            return Err(invalid(format!(
                "BMW rank must satisfy 1 <= n <= {max} for ell={ell} (got n={n})"
            )));
        }
        Ok(AlgebraConfig::Bmw { n, ell })
    }

    fn params(&self) -> AlcoveParams {
        match *self {
            AlgebraConfig::SymmetricGroup { p }
            | AlgebraConfig::BrauerOdd { p, .. }
            | AlgebraConfig::BrauerEven { p, .. }
            | AlgebraConfig::BrauerTypeB { p, .. } => AlcoveParams::Modular { p },
            AlgebraConfig::Hecke { ell } | AlgebraConfig::Bmw { ell, .. } => {
                AlcoveParams::Quantum { ell }
            }
        }
    }

    fn is_partition_kind(&self) -> bool {
        matches!(
            self,
            AlgebraConfig::SymmetricGroup { .. } | AlgebraConfig::Hecke { .. }
        )
    }

    /// The semisimple quotients this algebra surjects onto. Symmetric group and
    /// Hecke algebras have one per rank m < p (resp. m < ℓ′); the others have one.
    pub fn resolve(&self) -> Result<Vec<HigherJones>> {
        let params = self.params();
        match *self {
            AlgebraConfig::SymmetricGroup { .. } | AlgebraConfig::Hecke { .. } => (1..params
                .ell_prime())
                .map(|m| HigherJones::new(Family::AGl, m as usize, params))
                .collect(),
            AlgebraConfig::BrauerOdd { delta, p } => Ok(vec![HigherJones::new(
                Family::C,
                ((p - delta) / 2) as usize,
                params,
            )?]),
            AlgebraConfig::BrauerEven { delta, .. } => Ok(vec![HigherJones::new(
                Family::D,
                (delta / 2) as usize,
                params,
            )?]),
            AlgebraConfig::BrauerTypeB { m, .. } => {
                Ok(vec![HigherJones::new(Family::B, m as usize, params)?])
            }
            AlgebraConfig::Bmw { n, .. } => {
                Ok(vec![HigherJones::new(Family::C, n as usize, params)?])
            }
        }
    }

    /// Regularity parameter e for partition labels (p, resp. ℓ′).
    pub fn regularity(&self) -> Option<u64> {
        self.is_partition_kind().then(|| self.params().ell_prime())
    }

    /// The label set Λ̄ at level r: alcove weights of size r, r − 2, …, or for
    /// type B every alcove weight occurring in V^⊗r.
    pub fn weight_set(&self, r: usize) -> Result<Vec<Weight>> {
        if r < 1 {
            return Err(Error::ZeroLevel);
        }
        if self.is_partition_kind() {
            let c = self.params().ell_prime() as i64;
            let mut out: Vec<Weight> = partitions(r as i64)
                .into_iter()
                .filter(|l| {
                    let m = l.len() as i64;
                    m < c && l[0] - l[l.len() - 1] <= c - m
                })
                .map(Weight::new)
                .collect();
            out.sort_by(|a, b| self.label_order(a, b));
            return Ok(out);
        }
        let q = &self.resolve()?[0];
        let mut out: Vec<Weight> = if q.system.family() == Family::B {
            // V has a zero weight, so sizes need not drop in steps of two; keep
            // the alcove weights that actually occur.
            fusion_mults_altsum(&q.system, q.params, r)?
                .entries
                .into_keys()
                .collect()
        } else {
            q.system
                .alcove_weights(q.params, r as u64)?
                .into_iter()
                .filter(|w| (r as i64 - w.size()) % 2 == 0)
                .collect()
        };
        out.sort_by(|a, b| self.label_order(a, b));
        Ok(out)
    }

    /// Row order: partitions by number of parts then descending; Brauer-type
    /// labels by descending size then descending.
    fn label_order(&self, a: &Weight, b: &Weight) -> Ordering {
        if self.is_partition_kind() {
            a.rank().cmp(&b.rank()).then_with(|| b.cmp(a))
        } else {
            b.size().cmp(&a.size()).then_with(|| b.cmp(a))
        }
    }

    /// Simple-module dimensions at level r for the alcove-indexed class.
    pub fn simple_dims(&self, r: usize) -> Result<DimensionRow> {
        match *self {
            AlgebraConfig::SymmetricGroup { p } => symmetric_simple_dims(p, r),
            AlgebraConfig::Hecke { ell } => hecke_simple_dims(ell, r),
            AlgebraConfig::Bmw { n, ell } => bmw_simple_dims(n, ell, r),
            _ => brauer_simple_dims(self, r),
        }
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraConfig::SymmetricGroup { p } => write!(f, "symmetric:p={p}"),
            AlgebraConfig::Hecke { ell } => write!(f, "hecke:ell={ell}"),
            AlgebraConfig::BrauerOdd { delta, p } | AlgebraConfig::BrauerEven { delta, p } => {
                write!(f, "brauer:delta={delta}:p={p}")
            }
            AlgebraConfig::BrauerTypeB { m, p } => write!(f, "brauer-b:m={m}:p={p}"),
            AlgebraConfig::Bmw { n, ell } => write!(f, "bmw:n={n}:ell={ell}"),
        }
    }
}

/// Partitions of `n` in descending lexicographic order.
fn partitions(n: i64) -> Vec<Vec<i64>> {
    fn go(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dimension row for symmetric-group or Hecke labels: a partition with m parts
/// takes its value from the alcove walk at rank m.
fn partition_row(config: AlgebraConfig, r: usize) -> Result<DimensionRow> {
    let labels = config.weight_set(r)?;
    let quotients = config.resolve()?;
    let max_parts = labels.iter().map(Weight::rank).max().unwrap_or(0);
    let tables: Vec<MultiplicityTable> = quotients
        .iter()
        .take(max_parts)
        .map(|q| minuscule_walk_mults(&q.system, q.params, r))
        .collect::<Result<_>>()?;
    let entries = labels
        .into_iter()
        .map(|l| {
            let dim = tables[l.rank() - 1].get(&l);
            (l, dim)
        })
        .collect();
    Ok(DimensionRow { r, entries })
}

/// dim D_r(λ) for kS_r over the labels Λ̄^r(p).
pub fn symmetric_simple_dims(p: u64, r: usize) -> Result<DimensionRow> {
    partition_row(AlgebraConfig::symmetric(p)?, r)
}

/// dim D_{q,r}(λ) for H_r(q), q of order ℓ.
pub fn hecke_simple_dims(ell: u64, r: usize) -> Result<DimensionRow> {
    partition_row(AlgebraConfig::hecke(ell)?, r)
}

fn alcove_row(config: &AlgebraConfig, table: &MultiplicityTable, r: usize) -> Result<DimensionRow> {
    let entries = config
        .weight_set(r)?
        .into_iter()
        .map(|w| {
            let dim = table.get(&w);
            (w, dim)
        })
        .collect();
    Ok(DimensionRow { r, entries })
}

/// Simple B_r(δ)-module dimensions for the Brauer configurations.
pub fn brauer_simple_dims(config: &AlgebraConfig, r: usize) -> Result<DimensionRow> {
    if r < 1 {
        return Err(Error::ZeroLevel);
    }
    let q = match config {
        AlgebraConfig::BrauerOdd { .. }
        | AlgebraConfig::BrauerEven { .. }
        | AlgebraConfig::BrauerTypeB { .. } => config.resolve()?.remove(0),
        other => return Err(invalid(format!("{other} is not a Brauer configuration"))),
    };
    let zero = Weight::zero(q.system.rank());
    if !q.system.alcove_contains(q.params, &zero)? {
        return Ok(DimensionRow { r, entries: vec![] });
    }
    let table = match config {
        // Not minuscule: only the signed alternating sum applies.
        AlgebraConfig::BrauerTypeB { .. } => fusion_mults_altsum(&q.system, q.params, r)?,
        _ => fusion_mults(&q.system, q.params, r)?,
    };
    alcove_row(config, &table, r)
}

/// Simple BMW_r(−q^{2n+1}, q)-module dimensions.
pub fn bmw_simple_dims(n: u64, ell: u64, r: usize) -> Result<DimensionRow> {
    let config = AlgebraConfig::bmw(n, ell)?;
    if r < 1 {
        return Err(Error::ZeroLevel);
    }
    let q = config.resolve()?.remove(0);
    let table = fusion_mults(&q.system, q.params, r)?;
    alcove_row(&config, &table, r)
}

/// Matrix-block decomposition of a higher Jones quotient at level r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<(Weight, BigUint)>,
    pub total: BigUint,
}

/// Block sizes m_λ = (V^⊗r : T(λ)) and total dimension Σ m_λ².
pub fn algebra_decomposition(quotient: &HigherJones, r: usize) -> Result<Decomposition> {
    let table = if quotient.system.family() == Family::B {
        fusion_mults_altsum(&quotient.system, quotient.params, r)?
    } else {
        fusion_mults(&quotient.system, quotient.params, r)?
    };
    let total = table.sum_of_squares();
    let mut blocks: Vec<_> = table.entries.into_iter().collect();
    blocks.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(Decomposition { blocks, total })
}

/// True iff no `e` nonzero parts of λ are equal.
pub fn is_e_regular(lambda: &Weight, e: u64) -> bool {
    let parts: Vec<i64> = lambda
        .coords()
        .iter()
        .copied()
        .filter(|&c| c != 0)
        .collect();
    let mut run = 0u64;
    for (i, part) in parts.iter().enumerate() {
        run = if i > 0 && parts[i - 1] == *part {
            run + 1
        } else {
            1
        };
        if run >= e {
            return false;
        }
    }
    true
}

/// Which quotient family a Brauer parameter comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrauerKind {
    Symplectic,
    EvenOrthogonal,
    TypeB,
}

/// The Brauer parameter δ, as a residue mod p, served by the quotient of the given rank.
pub fn delta_from_rank(kind: BrauerKind, rank: u64, p: u64) -> u64 {
    match kind {
        BrauerKind::Symplectic => (p - (2 * rank) % p) % p,
        BrauerKind::EvenOrthogonal => (2 * rank) % p,
        BrauerKind::TypeB => 2 * rank + 1,
    }
}

/// Inverse of [`delta_from_rank`] over the ranks with a nonzero quotient.
pub fn rank_from_delta(kind: BrauerKind, delta: u64, p: u64) -> Result<u64> {
    let candidates: Vec<u64> = match kind {
        BrauerKind::Symplectic => (1..=(p - 1) / 2).collect(),
        BrauerKind::EvenOrthogonal => (1..=p.div_ceil(2)).collect(),
        BrauerKind::TypeB => (1..=(p - 3) / 2).collect(),
    };
    candidates
        .into_iter()
        .find(|&n| {
            let d = delta_from_rank(kind, n, p);
            match kind {
                BrauerKind::TypeB => d == delta,
                _ => d == delta % p,
            }
        })
        .ok_or_else(|| invalid(format!("no {kind:?} rank realizes delta={delta} at p={p}")))
}
