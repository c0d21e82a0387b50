//! Brute-force verifiers.
//!
//! Nothing here calls into the reflection or recursion code of
//! [`crate::root_data`] and [`crate::branching`]: alcoves, Weyl groups and
//! characters are rebuilt from the root data by hand so that agreement with the
//! engines means something.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_data::{AlcoveParams, Family, RootSystem, Weight};

/// Number of step sequences.
pub type PathCount = BigUint;

/// Longest walk [`enumerate_paths`] will unfold.
pub const ENUMERATE_MAX_R: usize = 14;
/// Largest rank accepted by [`char_product_decompose`].
pub const CHAR_MAX_RANK: usize = 3;
/// Largest tensor power accepted by [`char_product_decompose`].
pub const CHAR_MAX_R: usize = 6;

type Vector = Vec<i64>;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize, s: i64) -> Vector {
    let mut v = vec![0; n];
    v[i] = s;
    v
}

/// Positive roots in the ε basis. D_1 is read as the line C_1.
fn positive_roots(family: Family, n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = unit(n, i, 1);
            minus[j] = -1;
            out.push(minus);
            if family != Family::AGl {
                let mut plus = unit(n, i, 1);
                plus[j] = 1;
                out.push(plus);
            }
        }
        match family {
            Family::B => out.push(unit(n, i, 1)),
            Family::C => out.push(unit(n, i, 2)),
            Family::D if n == 1 => out.push(unit(n, i, 2)),
            _ => {}
        }
    }
    out
}

fn two_rho(roots: &[Vector], n: usize) -> Vector {
    let mut acc = vec![0; n];
    for a in roots {
        for (x, y) in acc.iter_mut().zip(a) {
            *x += y;
        }
    }
    acc
}

/// Weights of the natural module.
fn natural_weights(family: Family, n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).map(|i| unit(n, i, 1)).collect();
    if family != Family::AGl {
        out.extend((0..n).map(|i| unit(n, i, -1)));
    }
    if family == Family::B {
        out.push(vec![0; n]);
    }
    out
}

/// Open bottom alcove test in doubled coordinates: every positive coroot pairs
/// strictly between 0 and the level.
struct Alcove {
    two_rho: Vector,
    coroots: Vec<Vector>,
    /// Twice the bound on ⟨λ+ρ, α^∨⟩.
    bound2: i64,
    /// Even-order quantum C: bound each coordinate of λ+ρ by ℓ′ instead.
    coordinate_bound: bool,
}

impl Alcove {
    fn new(system: &RootSystem, params: AlcoveParams) -> Result<Self> {
        let (family, n) = (system.family(), system.rank());
        let roots = positive_roots(family, n);
        let two_rho = two_rho(&roots, n);
        let coroots = roots
            .iter()
            .map(|a| {
                let norm = dot(a, a);
                a.iter().map(|x| 2 * x / norm).collect::<Vector>()
            })
            .collect::<Vec<_>>();
        let (bound, coordinate_bound) = match (family, params) {
            (Family::B | Family::D, AlcoveParams::Quantum { .. }) => {
                return Err(Error::QuantumUnsupported(family.name()))
            }
            (_, AlcoveParams::Modular { p }) => (p as i64, false),
            (Family::AGl, q) => (q.ell_prime() as i64, false),
            (_, AlcoveParams::Quantum { ell }) if ell % 2 == 1 => (ell as i64, false),
            (_, q) => (q.ell_prime() as i64, true),
        };
        Ok(Alcove {
            two_rho,
            coroots,
            bound2: 2 * bound,
            coordinate_bound,
        })
    }

    fn contains(&self, lambda: &[i64]) -> bool {
        let x: Vector = lambda
            .iter()
            .zip(&self.two_rho)
            .map(|(l, r)| 2 * l + r)
            .collect();
        // Type A weights only see differences; GL_1 has no walls at all.
        if self.coroots.is_empty() {
            return true;
        }
        let regular = self.coroots.iter().all(|c| dot(&x, c) > 0);
        let below = if self.coordinate_bound {
            x.iter().all(|&xi| xi < self.bound2)
        } else {
            self.coroots.iter().all(|c| dot(&x, c) < self.bound2)
        };
        regular && below
    }
}

/// Counts step sequences of length `r` from 0 that never leave the bottom
/// alcove and end at `lambda`, by exhaustive depth-first search.
pub fn enumerate_paths(
    system: &RootSystem,
    params: AlcoveParams,
    r: usize,
    lambda: &Weight,
) -> Result<PathCount> {
    if r > ENUMERATE_MAX_R {
        return Err(Error::GuardExceeded(format!(
            "enumerate_paths supports r <= {ENUMERATE_MAX_R}, got {r}"
        )));
    }
    let (family, n) = (system.family(), system.rank());
    if family == Family::B {
        return Err(Error::NotMinuscule);
    }
    if lambda.rank() != n {
        return Err(Error::LengthMismatch {
            rank: n,
            got: lambda.rank(),
        });
    }
    let alcove = Alcove::new(system, params)?;
    let steps = natural_weights(family, n);
    let target = lambda.coords().to_vec();

    fn dfs(
        at: &mut Vector,
        left: usize,
        steps: &[Vector],
        alcove: &Alcove,
        target: &[i64],
        count: &mut BigUint,
    ) {
        if left == 0 {
            if at.as_slice() == target {
                *count += 1u32;
            }
            return;
        }
        for s in steps {
            for (a, b) in at.iter_mut().zip(s) {
                *a += b;
            }
            if alcove.contains(at) {
                dfs(at, left - 1, steps, alcove, target, count);
            }
            for (a, b) in at.iter_mut().zip(s) {
                *a -= b;
            }
        }
    }

    let mut count = BigUint::zero();
    let mut start = vec![0; n];
    if alcove.contains(&start) {
        dfs(
            &mut start,
            r,
            steps.as_slice(),
            &alcove,
            &target,
            &mut count,
        );
    }
    Ok(count)
}

/// Applies the `r`-th power of `adjacency` to the basis vector of the zero
/// weight and reads off the coordinate at `target`.
///
/// `adjacency[i][j]` is the number of ways to step from `states[i]` to `states[j]`.
pub fn transfer_matrix_count(
    states: &[Weight],
    adjacency: &[Vec<u32>],
    r: usize,
    target: &Weight,
) -> Result<PathCount> {
    if states.is_empty() {
        return Err(Error::EmptyStates);
    }
    if adjacency.len() != states.len() || adjacency.iter().any(|row| row.len() != states.len()) {
        return Err(Error::InvalidConfig(
            "adjacency must be a square matrix over the states".into(),
        ));
    }
    let Some(origin) = states
        .iter()
        .position(|s| s.coords().iter().all(|&c| c == 0))
    else {
        return Ok(BigUint::zero());
    };
    let Some(goal) = states.iter().position(|s| s == target) else {
        return Ok(BigUint::zero());
    };
    let mut v = vec![BigUint::zero(); states.len()];
    v[origin] = BigUint::one();
    for _ in 0..r {
        let mut next = vec![BigUint::zero(); states.len()];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, &a) in adjacency[i].iter().enumerate() {
                if a > 0 {
                    next[j] += vi * a;
                }
            }
        }
        v = next;
    }
    Ok(v.swap_remove(goal))
}

/// States and adjacency of the fusion walk for a rank-one configuration, read
/// off from truncated SL_2 Clebsch–Gordan rules.
///
/// GL_1 has no truncation; its states run over 0..=`r_max`.
pub fn rank_one_transfer(
    system: &RootSystem,
    params: AlcoveParams,
    r_max: usize,
) -> Result<(Vec<Weight>, Vec<Vec<u32>>)> {
    if system.rank() != 1 {
        return Err(Error::InvalidConfig(format!(
            "rank_one_transfer needs rank 1, got {}",
            system.rank()
        )));
    }
    let family = system.family();
    if family == Family::AGl {
        let states: Vec<Weight> = (0..=r_max as i64).map(|i| Weight::new(vec![i])).collect();
        let m = states.len();
        let adjacency = (0..m)
            .map(|i| (0..m).map(|j| u32::from(j == i + 1)).collect())
            .collect();
        return Ok((states, adjacency));
    }
    // SL_2 level k with highest weights a ∈ {0..k}: V_a ⊗ V_b has the V_c with
    // |a − b| ≤ c ≤ min(a + b, 2k − a − b), c ≡ a + b (mod 2).
    let c = match (family, params) {
        (Family::B | Family::D, AlcoveParams::Quantum { .. }) => {
            return Err(Error::QuantumUnsupported(family.name()))
        }
        (_, AlcoveParams::Modular { p }) => p as i64,
        (_, AlcoveParams::Quantum { ell }) if ell % 2 == 1 => ell as i64,
        (_, q) => q.ell_prime() as i64,
    };
    let k = c - 2;
    if k < 0 {
        return Err(Error::EmptyStates);
    }
    // B_1 = SO_3: weight λ is SL_2 weight 2λ and V is V_2.
    let (scale, b) = if family == Family::B { (2, 2) } else { (1, 1) };
    let sl2: Vec<i64> = (0..=k).filter(|a| a % scale == 0).collect();
    let states = sl2.iter().map(|a| Weight::new(vec![a / scale])).collect();
    let adjacency = sl2
        .iter()
        .map(|&a| {
            sl2.iter()
                .map(|&t| {
                    let ok = t >= (a - b).abs()
                        && t <= (a + b).min(2 * k - a - b)
                        && (a + b - t) % 2 == 0;
                    u32::from(ok)
                })
                .collect()
        })
        .collect();
    Ok((states, adjacency))
}

/// The Weyl group of the family acting on ε-coordinates has a simple
/// fundamental domain; this sends a weight there.
fn dominant_rep(family: Family, v: &[i64]) -> Vector {
    let mut out = v.to_vec();
    match family {
        Family::AGl => {}
        Family::B | Family::C => out.iter_mut().for_each(|x| *x = x.abs()),
        Family::D if out.len() == 1 => out[0] = out[0].abs(),
        Family::D => {
            let negatives = out.iter().filter(|&&x| x < 0).count();
            let has_zero = out.contains(&0);
            out.iter_mut().for_each(|x| *x = x.abs());
            out.sort_unstable_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 && !has_zero {
                let last = out.len() - 1;
                out[last] = -out[last];
            }
            return out;
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Dominant weight multiplicities of the irreducible character of highest
/// weight `top` via Freudenthal's formula, restricted to `support`.
fn weyl_character(
    family: Family,
    roots: &[Vector],
    two_rho: &[i64],
    top: &[i64],
    support: &[Vector],
) -> BTreeMap<Vector, BigInt> {
    let shifted_norm = |mu: &[i64]| {
        let s: Vector = mu.iter().zip(two_rho).map(|(m, r)| 2 * m + r).collect();
        dot(&s, &s)
    };
    let top_norm = shifted_norm(top);
    let top_height = dot(top, two_rho);
    let mut mults: BTreeMap<Vector, BigInt> = BTreeMap::new();
    for mu in support {
        if mu.as_slice() == top {
            mults.insert(mu.clone(), BigInt::one());
            continue;
        }
        let mut rhs = BigInt::zero();
        for alpha in roots {
            let mut k = 1;
            loop {
                let up: Vector = mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                if dot(&up, two_rho) > top_height {
                    break;
                }
                if let Some(m) = mults.get(&dominant_rep(family, &up)) {
                    rhs += m * BigInt::from(dot(&up, alpha));
                }
                k += 1;
            }
        }
        let denom = top_norm - shifted_norm(mu);
        let value = if rhs.is_zero() || denom <= 0 {
            BigInt::zero()
        } else {
            rhs * 8 / denom
        };
        mults.insert(mu.clone(), value);
    }
    mults
}

/// Multiplicity of the Weyl character of `lambda` in ch(V)^r, obtained by
/// expanding the weight multiset of V^⊗r and peeling off irreducible
/// characters from the top.
pub fn char_product_decompose(system: &RootSystem, r: usize, lambda: &Weight) -> Result<BigUint> {
    let (family, n) = (system.family(), system.rank());
    if n > CHAR_MAX_RANK || r > CHAR_MAX_R {
        return Err(Error::GuardExceeded(format!(
            "char_product_decompose supports rank <= {CHAR_MAX_RANK} and r <= {CHAR_MAX_R}, got rank {n}, r {r}"
        )));
    }
    if lambda.rank() != n {
        return Err(Error::LengthMismatch {
            rank: n,
            got: lambda.rank(),
        });
    }
    let roots = positive_roots(family, n);
    let rho2 = two_rho(&roots, n);
    let steps = natural_weights(family, n);

    let mut full: BTreeMap<Vector, BigInt> = BTreeMap::new();
    full.insert(vec![0; n], BigInt::one());
    for _ in 0..r {
        let mut next = BTreeMap::new();
        for (w, m) in &full {
            for s in &steps {
                let v: Vector = w.iter().zip(s).map(|(a, b)| a + b).collect();
                *next.entry(v).or_insert_with(BigInt::zero) += m;
            }
        }
        full = next;
    }
    // W-invariant, so the dominant part determines everything.
    let mut remaining: BTreeMap<Vector, BigInt> = full
        .into_iter()
        .filter(|(w, _)| dominant_rep(family, w) == *w)
        .collect();
    let mut by_height: Vec<Vector> = remaining.keys().cloned().collect();
    by_height.sort_by_key(|w| std::cmp::Reverse(dot(w, &rho2)));

    let mut found = BigInt::zero();
    for top in &by_height {
        let coeff = remaining.get(top).cloned().unwrap_or_default();
        if coeff.is_zero() {
            continue;
        }
        if coeff.sign() == Sign::Minus {
            return Err(Error::NegativeCoefficient(format!("{top:?}: {coeff}")));
        }
        if top.as_slice() == lambda.coords() {
            found = coeff.clone();
        }
        let below: Vec<Vector> = by_height
            .iter()
            .filter(|w| dot(w, &rho2) <= dot(top, &rho2))
            .cloned()
            .collect();
        for (mu, m) in weyl_character(family, &roots, &rho2, top, &below) {
            if !m.is_zero() {
                *remaining.entry(mu).or_insert_with(BigInt::zero) -= &coeff * m;
            }
        }
    }
    if let Some((w, c)) = remaining.iter().find(|(_, c)| !c.is_zero()) {
        return Err(Error::NegativeCoefficient(format!(
            "residual {c} at {w:?} after stripping"
        )));
    }
    Ok(found.to_biguint().unwrap_or_default())
}
