//! Weight lattices, dominance, bottom alcoves and dot-action reduction for the
//! classical families.
//!
//! Every ρ-shifted computation happens in doubled coordinates `x = 2(λ + ρ)`,
//! which keeps the half-integral ρ of type B inside the integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Root system family. `AGl` is the general linear group with ρ′ = (n, …, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    AGl,
    B,
    C,
    D,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::AGl => "A-GL",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        }
    }

    /// Dimension of the natural module for this family at the given rank.
    pub fn vector_rep_dim(self, rank: usize) -> usize {
        match self {
            Family::AGl => rank,
            Family::B => 2 * rank + 1,
            Family::C | Family::D => 2 * rank,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A weight in the ε-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The basis vector ε_i (0-based index).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// |λ_1| + … + |λ_n|.
    pub fn size(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Drops trailing zero coordinates (partition form).
    pub fn trimmed(&self) -> Weight {
        let end = self.0.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        Weight(self.0[..end].to_vec())
    }

    /// Pads with zeros up to `rank` coordinates.
    pub fn padded(&self, rank: usize) -> Weight {
        let mut v = self.0.clone();
        v.resize(rank.max(v.len()), 0);
        Weight(v)
    }

    /// Number of nonzero coordinates.
    pub fn nonzero_parts(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    /// Fixture label: parts joined by `.`, e.g. `1.1.-1`. The empty weight is `0`.
    pub fn dotted(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn parse_dotted(s: &str) -> Option<Weight> {
        Self::parse_with(s, '.')
    }

    /// Parses `4,2` style input.
    pub fn parse_commas(s: &str) -> Option<Weight> {
        Self::parse_with(s, ',')
    }

    fn parse_with(s: &str, sep: char) -> Option<Weight> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        s.split(sep)
            .map(|p| p.trim().parse::<i64>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

/// Modular prime or quantum root-of-unity order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlcoveParams {
    Modular { p: u64 },
    Quantum { ell: u64 },
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

impl AlcoveParams {
    pub fn modular(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(AlcoveParams::Modular { p })
    }

    pub fn quantum(ell: u64) -> Result<Self> {
        if ell < 5 || ell == 6 {
            return Err(Error::BadQuantumOrder(ell));
        }
        Ok(AlcoveParams::Quantum { ell })
    }

    /// ℓ′ = ord(q²); for modular parameters this is just p.
    pub fn ell_prime(self) -> u64 {
        match self {
            AlcoveParams::Modular { p } => p,
            AlcoveParams::Quantum { ell } if ell % 2 == 0 => ell / 2,
            AlcoveParams::Quantum { ell } => ell,
        }
    }

    pub fn is_quantum_even(self) -> bool {
        matches!(self, AlcoveParams::Quantum { ell } if ell % 2 == 0)
    }
}

impl fmt::Display for AlcoveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlcoveParams::Modular { p } => write!(f, "p={p}"),
            AlcoveParams::Quantum { ell } => write!(f, "ell={ell}"),
        }
    }
}

/// Result of reducing a weight into the closed bottom alcove under the dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedAlcovePoint {
    Interior { weight: Weight, sign: i8 },
    Wall,
}

/// An affine wall ⟨x, coroot⟩ = bound in doubled coordinates, with the root
/// used to reflect across it.
#[derive(Debug, Clone)]
struct UpperWall {
    coroot: Vec<i64>,
    root: Vec<i64>,
}

fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    rho2: Vec<i64>,
    coxeter_number: u32,
    steps: Vec<Weight>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let n = rank as i64;
        let rho2: Vec<i64> = match family {
            Family::AGl | Family::C => (0..n).map(|i| 2 * (n - i)).collect(),
            Family::B => (0..n).map(|i| 2 * (n - i) - 1).collect(),
            // D_1 behaves as SL_2 = Sp_2 on the line, so it takes ρ = ε_1.
            Family::D if rank == 1 => vec![2],
            Family::D => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
        };
        let coxeter_number = match family {
            Family::AGl => rank as u32,
            Family::B | Family::C => 2 * rank as u32,
            Family::D => (2 * rank as u32).saturating_sub(2).max(2),
        };
        let mut steps: Vec<Weight> = (0..rank).map(|i| Weight::unit(rank, i)).collect();
        if family != Family::AGl {
            if family == Family::B {
                steps.push(Weight::zero(rank));
            }
            steps.extend((0..rank).rev().map(|i| {
                let mut w = Weight::zero(rank);
                w.0[i] = -1;
                w
            }));
        }
        Ok(RootSystem {
            family,
            rank,
            rho2,
            coxeter_number,
            steps,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of 2ρ (2ρ′ for A-GL).
    pub fn rho2(&self) -> &[i64] {
        &self.rho2
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    /// Weights of the natural module, each with multiplicity one.
    pub fn vector_rep_weights(&self) -> &[Weight] {
        &self.steps
    }

    pub fn vector_rep_dim(&self) -> usize {
        self.family.vector_rep_dim(self.rank)
    }

    fn check_len(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::LengthMismatch {
                rank: self.rank,
                got: lambda.rank(),
            });
        }
        Ok(())
    }

    pub fn is_dominant(&self, lambda: &Weight) -> Result<bool> {
        self.check_len(lambda)?;
        let c = lambda.coords();
        let descending = c.windows(2).all(|w| w[0] >= w[1]);
        let n = self.rank;
        Ok(match self.family {
            Family::AGl => descending,
            Family::B | Family::C => descending && c[n - 1] >= 0,
            Family::D if n == 1 => c[0] >= 0,
            Family::D => c[..n - 1].windows(2).all(|w| w[0] >= w[1]) && c[n - 2] >= c[n - 1].abs(),
        })
    }

    /// Membership in the bottom dominant alcove via the closed-form inequalities.
    pub fn alcove_contains(&self, params: AlcoveParams, lambda: &Weight) -> Result<bool> {
        if !self.is_dominant(lambda)? {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let c = lambda.coords();
        let n = self.rank as i64;
        let first_two = || c[0] + c.get(1).copied().unwrap_or(0);
        Ok(match (self.family, params) {
            (Family::AGl, params) => {
                let bound = params.ell_prime() as i64;
                self.rank == 1 || c[0] - c[self.rank - 1] <= bound - n
            }
            (Family::C, AlcoveParams::Modular { p }) => {
                if self.rank == 1 {
                    c[0] <= p as i64 - 2
                } else {
                    first_two() <= p as i64 - 2 * n
                }
            }
            (Family::C, AlcoveParams::Quantum { ell }) if ell % 2 == 1 => {
                if self.rank == 1 {
                    c[0] <= ell as i64 - 2
                } else {
                    first_two() <= ell as i64 - 2 * n
                }
            }
            (Family::C, AlcoveParams::Quantum { ell }) => c[0] < (ell / 2) as i64 - n,
            // Uniform in the rank: ⟨λ+ρ, 2ε_1⟩ < p.
            (Family::B, AlcoveParams::Modular { p }) => 2 * c[0] <= p as i64 - 2 * n,
            (Family::D, AlcoveParams::Modular { p }) => {
                let p = p as i64;
                match self.rank {
                    1 => c[0] <= p - 2,
                    2 => c[0] + c[1] <= p - 2 && c[0] - c[1] <= p - 2,
                    _ => first_two() <= p - 2 * n + 2,
                }
            }
            (family, AlcoveParams::Quantum { .. }) => {
                return Err(Error::QuantumUnsupported(family.name()))
            }
        })
    }

    /// x = 2(μ + ρ).
    pub fn shifted(&self, mu: &Weight) -> Vec<i64> {
        mu.coords()
            .iter()
            .zip(&self.rho2)
            .map(|(m, r)| 2 * m + r)
            .collect()
    }

    fn unshift(&self, x: &[i64]) -> Weight {
        Weight(
            x.iter()
                .zip(&self.rho2)
                .map(|(x, r)| {
                    debug_assert_eq!((x - r) % 2, 0);
                    (x - r) / 2
                })
                .collect(),
        )
    }

    /// Affine walls of the bottom alcove and the doubled bound 2c.
    fn upper_walls(&self, params: AlcoveParams) -> Result<(Vec<UpperWall>, i64)> {
        let n = self.rank;
        let e = |i: usize, s: i64| {
            let mut v = vec![0; n];
            v[i] = s;
            v
        };
        let combo = |a: i64, b: i64| {
            let mut v = vec![0; n];
            v[0] = a;
            v[n.min(2) - 1] += b;
            v
        };
        let wall = |coroot: Vec<i64>, root: Vec<i64>| UpperWall { coroot, root };
        let level = match (self.family, params) {
            (Family::AGl, params) => params.ell_prime(),
            (Family::C, AlcoveParams::Quantum { ell }) if ell % 2 == 0 => ell / 2,
            (Family::C, AlcoveParams::Quantum { ell }) => ell,
            (_, AlcoveParams::Modular { p }) => p,
            (family, AlcoveParams::Quantum { .. }) => {
                return Err(Error::QuantumUnsupported(family.name()))
            }
        } as i64;
        let walls = match self.family {
            Family::AGl if n == 1 => vec![],
            Family::AGl => {
                let mut v = vec![0; n];
                v[0] = 1;
                v[n - 1] = -1;
                vec![wall(v.clone(), v)]
            }
            Family::C if params.is_quantum_even() || n == 1 => vec![wall(e(0, 1), e(0, 2))],
            Family::D if n == 1 => vec![wall(e(0, 1), e(0, 2))],
            Family::C => vec![wall(combo(1, 1), combo(1, 1))],
            Family::B => vec![wall(e(0, 2), e(0, 1))],
            Family::D if n == 2 => {
                vec![wall(vec![1, 1], vec![1, 1]), wall(vec![1, -1], vec![1, -1])]
            }
            Family::D => vec![wall(combo(1, 1), combo(1, 1))],
        };
        Ok((walls, 2 * level))
    }

    /// Applies one simple reflection if `x` is not yet dominant; returns whether it did.
    fn simple_reflection_step(&self, x: &mut [i64]) -> bool {
        let n = self.rank;
        if let Some(i) = (0..n.saturating_sub(1)).find(|&i| x[i] < x[i + 1]) {
            x.swap(i, i + 1);
            return true;
        }
        match self.family {
            Family::AGl => false,
            Family::D if n >= 2 => {
                if x[n - 2] + x[n - 1] < 0 {
                    let (a, b) = (x[n - 2], x[n - 1]);
                    x[n - 2] = -b;
                    x[n - 1] = -a;
                    true
                } else {
                    false
                }
            }
            _ => {
                if x[n - 1] < 0 {
                    x[n - 1] = -x[n - 1];
                    true
                } else {
                    false
                }
            }
        }
    }

    /// For dominant `x`, whether it lies on a wall of the dominant chamber.
    fn on_chamber_wall(&self, x: &[i64]) -> bool {
        let n = self.rank;
        if x.windows(2).any(|w| w[0] == w[1]) {
            return true;
        }
        match self.family {
            Family::AGl => false,
            Family::D if n >= 2 => x[n - 2] + x[n - 1] == 0,
            _ => x[n - 1] == 0,
        }
    }

    fn reduce(&self, mu: &Weight, walls: Option<(&[UpperWall], i64)>) -> SignedAlcovePoint {
        let mut x = self.shifted(mu);
        let norm = |x: &[i64]| x.iter().map(|c| c.abs()).sum::<i64>();
        let n = self.rank as i64;
        // Every finite reduction is bounded by |R+| ≤ n², every affine reflection
        // strictly lowers |x|² by a positive integer.
        let cap = 64 + (n * n + 1) * (norm(&x) + n + 1).pow(2);
        let mut moves: i64 = 0;
        let mut sign: i8 = 1;
        loop {
            while self.simple_reflection_step(&mut x) {
                sign = -sign;
                moves += 1;
                assert!(
                    moves <= cap,
                    "dot-action reduction of {mu} did not terminate"
                );
            }
            if self.on_chamber_wall(&x) {
                return SignedAlcovePoint::Wall;
            }
            let Some((walls, bound)) = walls else {
                break;
            };
            let mut reflected = false;
            for w in walls {
                let v = pair(&x, &w.coroot);
                if v == bound {
                    return SignedAlcovePoint::Wall;
                }
                if v > bound {
                    let before: i64 = x.iter().map(|c| c * c).sum();
                    let t = v - bound;
                    for (xi, ri) in x.iter_mut().zip(&w.root) {
                        *xi -= t * ri;
                    }
                    let after: i64 = x.iter().map(|c| c * c).sum();
                    assert!(
                        after < before,
                        "affine reflection failed to shrink the norm"
                    );
                    sign = -sign;
                    moves += 1;
                    assert!(
                        moves <= cap,
                        "dot-action reduction of {mu} did not terminate"
                    );
                    reflected = true;
                    break;
                }
            }
            if !reflected {
                break;
            }
        }
        SignedAlcovePoint::Interior {
            weight: self.unshift(&x),
            sign,
        }
    }

    /// Dot-action reduction into the closed bottom alcove (finite and affine walls).
    pub fn reflect_to_alcove(
        &self,
        params: AlcoveParams,
        mu: &Weight,
    ) -> Result<SignedAlcovePoint> {
        self.check_len(mu)?;
        let (walls, bound) = self.upper_walls(params)?;
        Ok(self.reduce(mu, Some((&walls, bound))))
    }

    /// Dot-action reduction into the dominant chamber only (finite Weyl group).
    pub fn reflect_to_chamber(&self, mu: &Weight) -> Result<SignedAlcovePoint> {
        self.check_len(mu)?;
        Ok(self.reduce(mu, None))
    }

    /// Positive coroots in the ε-basis.
    fn positive_coroots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut minus = vec![0; n];
                minus[i] = 1;
                minus[j] = -1;
                out.push(minus);
                if self.family != Family::AGl {
                    let mut plus = vec![0; n];
                    plus[i] = 1;
                    plus[j] = 1;
                    out.push(plus);
                }
            }
        }
        let long_line = match self.family {
            Family::B => Some(2),
            Family::C => Some(1),
            Family::D if n == 1 => Some(1),
            _ => None,
        };
        if let Some(s) = long_line {
            for i in 0..n {
                let mut v = vec![0; n];
                v[i] = s;
                out.push(v);
            }
        }
        out
    }

    /// Characteristic-zero dimension of Δ(λ) by Weyl's formula, exact in integers.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigUint> {
        if !self.is_dominant(lambda)? {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let x = self.shifted(lambda);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for cr in self.positive_coroots() {
            num *= pair(&x, &cr);
            den *= pair(&self.rho2, &cr);
        }
        debug_assert!((&num % &den) == BigInt::from(0));
        let q = num / den;
        debug_assert!(q.is_positive());
        Ok(q.magnitude().clone())
    }

    /// Dominant alcove weights with |λ_1| + … + |λ_n| ≤ `size_bound`, lexicographically descending.
    pub fn alcove_weights(&self, params: AlcoveParams, size_bound: u64) -> Result<Vec<Weight>> {
        let mut out = Vec::new();
        for w in self.dominant_weights(size_bound) {
            if self.alcove_contains(params, &w)? {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// All dominant weights of size at most `size_bound`, lexicographically descending.
    pub fn dominant_weights(&self, size_bound: u64) -> Vec<Weight> {
        let bound = size_bound as i64;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.rank);
        self.fill_dominant(&mut cur, bound, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn fill_dominant(&self, cur: &mut Vec<i64>, budget: i64, out: &mut Vec<Weight>) {
        if cur.len() == self.rank {
            let w = Weight(cur.clone());
            if self.is_dominant(&w).unwrap_or(false) {
                out.push(w);
            }
            return;
        }
        let lo = match self.family {
            Family::AGl | Family::D => -budget,
            _ => 0,
        };
        for v in (lo..=budget).rev() {
            if let Some(&last) = cur.last() {
                // D allows a negative last entry below a positive one.
                let tail_ok = last >= v
                    || (self.family == Family::D && cur.len() + 1 == self.rank && last >= v.abs());
                if !tail_ok {
                    continue;
                }
            }
            if v.abs() > budget {
                continue;
            }
            cur.push(v);
            self.fill_dominant(cur, budget - v.abs(), out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    fn modp(p: u64) -> AlcoveParams {
        AlcoveParams::modular(p).unwrap()
    }

    #[test]
    fn make_root_system_examples() {
        let a3 = RootSystem::new(Family::AGl, 3).unwrap();
        assert_eq!(a3.rho2(), &[6, 4, 2]);
        assert_eq!(
            a3.vector_rep_weights(),
            &[w([1, 0, 0]), w([0, 1, 0]), w([0, 0, 1])]
        );

        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert_eq!(c2.rho2(), &[4, 2]);
        let mut steps = c2.vector_rep_weights().to_vec();
        steps.sort();
        assert_eq!(steps, vec![w([-1, 0]), w([0, -1]), w([0, 1]), w([1, 0])]);

        let b1 = RootSystem::new(Family::B, 1).unwrap();
        assert_eq!(b1.rho2(), &[1]);
        assert_eq!(b1.vector_rep_weights(), &[w([1]), w([0]), w([-1])]);

        assert_eq!(RootSystem::new(Family::B, 3).unwrap().rho2(), &[5, 3, 1]);
        assert_eq!(RootSystem::new(Family::D, 3).unwrap().rho2(), &[4, 2, 0]);
        assert_eq!(RootSystem::new(Family::D, 1).unwrap().rho2(), &[2]);
        assert_eq!(RootSystem::new(Family::C, 0), Err(Error::ZeroRank));
    }

    #[test]
    fn dominance() {
        let a2 = RootSystem::new(Family::AGl, 2).unwrap();
        assert!(a2.is_dominant(&w([3, 1])).unwrap());
        assert!(a2.is_dominant(&w([-1, -3])).unwrap());
        let d2 = RootSystem::new(Family::D, 2).unwrap();
        assert!(d2.is_dominant(&w([1, -1])).unwrap());
        assert!(!d2.is_dominant(&w([1, -2])).unwrap());
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert!(!c2.is_dominant(&w([1, 2])).unwrap());
        assert!(!c2.is_dominant(&w([1, -1])).unwrap());
        assert!(matches!(
            c2.is_dominant(&w([1])),
            Err(Error::LengthMismatch { rank: 2, got: 1 })
        ));
    }

    #[test]
    fn alcove_examples() {
        let a2 = RootSystem::new(Family::AGl, 2).unwrap();
        assert!(a2.alcove_contains(modp(5), &w([3, 1])).unwrap());
        assert!(!a2.alcove_contains(modp(5), &w([4, 0])).unwrap());
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert!(c2.alcove_contains(modp(7), &w([2, 1])).unwrap());
        let q10 = AlcoveParams::quantum(10).unwrap();
        assert!(c2.alcove_contains(q10, &w([2, 2])).unwrap());
        assert!(!c2.alcove_contains(q10, &w([3, 0])).unwrap());
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        assert!(!b2.alcove_contains(modp(7), &w([2, 0])).unwrap());
        assert!(b2.alcove_contains(modp(7), &w([1, 1])).unwrap());
        let a1 = RootSystem::new(Family::AGl, 1).unwrap();
        assert!(a1.alcove_contains(modp(3), &w([1000])).unwrap());
        assert!(a1.alcove_contains(modp(3), &w([-7])).unwrap());
    }

    #[test]
    fn alcove_errors() {
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert!(matches!(
            c2.alcove_contains(modp(7), &w([0, 1])),
            Err(Error::NotDominant(_))
        ));
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let q = AlcoveParams::quantum(9).unwrap();
        assert_eq!(
            b2.alcove_contains(q, &w([0, 0])),
            Err(Error::QuantumUnsupported("B"))
        );
        let d3 = RootSystem::new(Family::D, 3).unwrap();
        assert!(d3.reflect_to_alcove(q, &w([0, 0, 0])).is_err());
    }

    #[test]
    fn params_validation() {
        assert_eq!(AlcoveParams::modular(2), Err(Error::BadPrime(2)));
        assert_eq!(AlcoveParams::modular(9), Err(Error::BadPrime(9)));
        for ell in [2, 3, 4, 6] {
            assert_eq!(AlcoveParams::quantum(ell), Err(Error::BadQuantumOrder(ell)));
        }
        assert_eq!(AlcoveParams::quantum(10).unwrap().ell_prime(), 5);
        assert_eq!(AlcoveParams::quantum(7).unwrap().ell_prime(), 7);
    }

    #[test]
    fn reflect_examples() {
        let a2 = RootSystem::new(Family::AGl, 2).unwrap();
        let p5 = modp(5);
        assert_eq!(
            a2.reflect_to_alcove(p5, &w([3, 1])).unwrap(),
            SignedAlcovePoint::Interior {
                weight: w([3, 1]),
                sign: 1
            }
        );
        assert_eq!(
            a2.reflect_to_alcove(p5, &w([4, 0])).unwrap(),
            SignedAlcovePoint::Wall
        );
        assert_eq!(
            a2.reflect_to_alcove(p5, &w([5, 0])).unwrap(),
            SignedAlcovePoint::Interior {
                weight: w([4, 1]),
                sign: -1
            }
        );
    }

    #[test]
    fn weyl_dim_examples() {
        let a2 = RootSystem::new(Family::AGl, 2).unwrap();
        assert_eq!(a2.weyl_dim(&w([1, 0])).unwrap(), BigUint::from(2u32));
        let a3 = RootSystem::new(Family::AGl, 3).unwrap();
        assert_eq!(a3.weyl_dim(&w([1, 1, 0])).unwrap(), BigUint::from(3u32));
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert_eq!(c2.weyl_dim(&w([1, 1])).unwrap(), BigUint::from(5u32));
        assert_eq!(c2.weyl_dim(&w([1, 0])).unwrap(), BigUint::from(4u32));
        let b1 = RootSystem::new(Family::B, 1).unwrap();
        assert_eq!(b1.weyl_dim(&w([1])).unwrap(), BigUint::from(3u32));
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(b3.weyl_dim(&w([1, 0, 0])).unwrap(), BigUint::from(7u32));
        let d1 = RootSystem::new(Family::D, 1).unwrap();
        assert_eq!(d1.weyl_dim(&w([3])).unwrap(), BigUint::from(4u32));
        assert!(c2.weyl_dim(&w([0, 1])).is_err());
    }

    #[test]
    fn alcove_weight_enumeration() {
        let c1 = RootSystem::new(Family::C, 1).unwrap();
        let got = c1.alcove_weights(modp(7), 10).unwrap();
        let want: Vec<Weight> = (0..=5).rev().map(|i| w([i])).collect();
        assert_eq!(got, want);

        let a2 = RootSystem::new(Family::AGl, 2).unwrap();
        let got = a2.alcove_weights(modp(5), 3).unwrap();
        assert!(got.contains(&w([2, 1])) && got.contains(&w([3, 0])));
        assert!(got
            .iter()
            .all(|l| l.coords()[0] - l.coords()[1] <= 3 && l.size() <= 3));
        assert!(got.windows(2).all(|p| p[0] > p[1]));

        let c2 = RootSystem::new(Family::C, 2).unwrap();
        let got = c2
            .alcove_weights(AlcoveParams::quantum(10).unwrap(), 4)
            .unwrap();
        let want = vec![
            w([2, 2]),
            w([2, 1]),
            w([2, 0]),
            w([1, 1]),
            w([1, 0]),
            w([0, 0]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn d_dominant_enumeration_includes_negative_tail() {
        let d2 = RootSystem::new(Family::D, 2).unwrap();
        let got = d2.dominant_weights(2);
        assert_eq!(
            got,
            vec![w([2, 0]), w([1, 1]), w([1, 0]), w([1, -1]), w([0, 0])]
        );
    }
}
