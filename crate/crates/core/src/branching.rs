//! Multiplicity engines for tensor powers of the natural module.
//!
//! Three routes to the fusion multiplicities (V^⊗r : T(λ)) are provided and are
//! expected to agree exactly:
//!
//! * [`fusion_mults`]: level-by-level fusion with the affine reflection rule;
//! * [`fusion_mults_altsum`]: characteristic-zero Weyl multiplicities pushed through
//!   the signed affine dot action;
//! * [`minuscule_walk_mults`]: unsigned alcove-confined walks (minuscule families only).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_data::{AlcoveParams, Family, RootSystem, SignedAlcovePoint, Weight};

/// Non-negative multiplicities at tensor level `r`; absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub level: usize,
    pub entries: BTreeMap<Weight, BigUint>,
}

/// Signed contributions keyed by alcove weight.
pub type SignedWeightMultiset = BTreeMap<Weight, BigInt>;

impl MultiplicityTable {
    pub fn unit(rank: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(Weight::zero(rank), BigUint::one());
        MultiplicityTable { level: 0, entries }
    }

    pub fn empty(level: usize) -> Self {
        MultiplicityTable {
            level,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ m_λ², the dimension of the semisimple algebra with these block sizes.
    pub fn sum_of_squares(&self) -> BigUint {
        self.entries.values().map(|m| m * m).sum()
    }

    fn from_signed(level: usize, acc: SignedWeightMultiset) -> Self {
        let entries = acc
            .into_iter()
            .filter_map(|(w, m)| match m.sign() {
                Sign::NoSign => None,
                Sign::Plus => Some((w, m.magnitude().clone())),
                Sign::Minus => panic!("negative multiplicity {m} at {w} on level {level}"),
            })
            .collect();
        MultiplicityTable { level, entries }
    }
}

fn accumulate(acc: &mut SignedWeightMultiset, point: SignedAlcovePoint, m: &BigUint) {
    if let SignedAlcovePoint::Interior { weight, sign } = point {
        let slot = acc.entry(weight).or_insert_with(BigInt::zero);
        let m = BigInt::from(m.clone());
        if sign > 0 {
            *slot += m;
        } else {
            *slot -= m;
        }
    }
}

/// Multiplies a Weyl-module table by V using the signed chamber reflection rule.
fn delta_next(sys: &RootSystem, table: &MultiplicityTable) -> MultiplicityTable {
    let mut acc = SignedWeightMultiset::new();
    for (mu, m) in &table.entries {
        for s in sys.vector_rep_weights() {
            let point = sys
                .reflect_to_chamber(&mu.add(s))
                .expect("weights in a table share the rank of the root system");
            accumulate(&mut acc, point, m);
        }
    }
    MultiplicityTable::from_signed(table.level + 1, acc)
}

/// Weyl-module multiplicities (V^⊗r : Δ(μ)) for all dominant μ.
pub fn delta_mults(sys: &RootSystem, r: usize) -> MultiplicityTable {
    let mut table = MultiplicityTable::unit(sys.rank());
    for _ in 0..r {
        table = delta_next(sys, &table);
    }
    table
}

/// Fusion decomposition of T(λ′) ⊗ V for λ′ in the bottom alcove.
pub fn fusion_step(
    sys: &RootSystem,
    params: AlcoveParams,
    lambda: &Weight,
) -> Result<SignedWeightMultiset> {
    if !sys.is_dominant(lambda)? || !sys.alcove_contains(params, lambda)? {
        return Err(Error::OutsideAlcove(lambda.to_string()));
    }
    let mut acc = SignedWeightMultiset::new();
    for s in sys.vector_rep_weights() {
        let point = sys.reflect_to_alcove(params, &lambda.add(s))?;
        accumulate(&mut acc, point, &BigUint::one());
    }
    acc.retain(|_, v| !v.is_zero());
    Ok(acc)
}

fn fusion_base(sys: &RootSystem, params: AlcoveParams) -> Result<MultiplicityTable> {
    let zero = Weight::zero(sys.rank());
    Ok(if sys.alcove_contains(params, &zero)? {
        MultiplicityTable::unit(sys.rank())
    } else {
        MultiplicityTable::empty(0)
    })
}

/// Level-by-level cache of fusion multiplicity tables for one (root system, parameter) pair.
#[derive(Debug, Clone)]
pub struct FusionTower {
    sys: RootSystem,
    params: AlcoveParams,
    levels: Vec<MultiplicityTable>,
    // One-step fusion rules, memoized per source weight.
    rules: BTreeMap<Weight, SignedWeightMultiset>,
}

impl FusionTower {
    pub fn new(sys: RootSystem, params: AlcoveParams) -> Result<Self> {
        let base = fusion_base(&sys, params)?;
        Ok(FusionTower {
            sys,
            params,
            levels: vec![base],
            rules: BTreeMap::new(),
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn params(&self) -> AlcoveParams {
        self.params
    }

    /// The table (V^⊗r : T(λ)), extending the cache as needed.
    pub fn level(&mut self, r: usize) -> &MultiplicityTable {
        while self.levels.len() <= r {
            let next = self.next_level();
            self.levels.push(next);
        }
        &self.levels[r]
    }

    fn next_level(&mut self) -> MultiplicityTable {
        let prev = self.levels.last().expect("tower always holds level 0");
        let mut acc = SignedWeightMultiset::new();
        for (lambda, m) in &prev.entries {
            if !self.rules.contains_key(lambda) {
                let rule = fusion_step(&self.sys, self.params, lambda)
                    .expect("tower tables only hold alcove weights");
                self.rules.insert(lambda.clone(), rule);
            }
            let rule = &self.rules[lambda];
            for (mu, c) in rule {
                *acc.entry(mu.clone()).or_insert_with(BigInt::zero) += c * BigInt::from(m.clone());
            }
        }
        MultiplicityTable::from_signed(prev.level + 1, acc)
    }
}

/// Fusion multiplicities (V^⊗r : T(λ)) for λ in the bottom alcove.
pub fn fusion_mults(sys: &RootSystem, params: AlcoveParams, r: usize) -> Result<MultiplicityTable> {
    let mut tower = FusionTower::new(sys.clone(), params)?;
    Ok(tower.level(r).clone())
}

/// Fusion multiplicities via the alternating sum over the affine Weyl group
/// applied to [`delta_mults`].
pub fn fusion_mults_altsum(
    sys: &RootSystem,
    params: AlcoveParams,
    r: usize,
) -> Result<MultiplicityTable> {
    let deltas = delta_mults(sys, r);
    let mut acc = SignedWeightMultiset::new();
    for (mu, m) in &deltas.entries {
        accumulate(&mut acc, sys.reflect_to_alcove(params, mu)?, m);
    }
    Ok(MultiplicityTable::from_signed(r, acc))
}

/// Unsigned alcove-confined walk counts, valid for the minuscule families A-GL, C and D.
pub fn minuscule_walk_mults(
    sys: &RootSystem,
    params: AlcoveParams,
    r: usize,
) -> Result<MultiplicityTable> {
    if sys.family() == Family::B {
        return Err(Error::NotMinuscule);
    }
    let mut table = fusion_base(sys, params)?;
    for level in 1..=r {
        let mut next: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (mu, m) in &table.entries {
            for s in sys.vector_rep_weights() {
                let lambda = mu.add(s);
                if sys.is_dominant(&lambda)? && sys.alcove_contains(params, &lambda)? {
                    *next.entry(lambda).or_default() += m;
                }
            }
        }
        table = MultiplicityTable {
            level,
            entries: next,
        };
    }
    Ok(table)
}
