//! Restricted weight multisets for the classical pair families.
//!
//! Weights live on the split abelian subspace of the subgroup; multisets are
//! ±-folded (λ and −λ are identified by normalizing the leading sign) and
//! zero weights are dropped into a bookkeeping counter, since every consumer
//! only reads m_λ·|λ(Y)|. Unlike arrangement normals, weights keep their
//! magnitude: 2λ and λ are different weights with different ρ contributions,
//! even though they cut out the same hyperplane.
//!
//! Constructors parametrize the split subspace in explicit coordinates:
//! block-diagonal traceless coordinates for SL factors and a hyperbolic
//! basis for SO(p,q), under which the standard representation carries
//! weights ±a_1, …, ±a_m and zeros. Adjoint weights are then pairwise
//! differences of diagonal entries (sl) or pairwise sums of standard weights
//! (so ≅ Λ² of the standard module), which avoids building any matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{LinearFunctional, RationalVector};
use crate::rho::RhoFunction;

/// A nonzero restricted weight: an integer covector with the leading sign
/// normalized (first nonzero entry positive). The magnitude is significant
/// and is not reduced.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coeffs: Vec<BigInt>,
}

impl Weight {
    /// Fold a nonzero integer covector: λ and −λ become the same weight.
    pub fn fold(coeffs: &[BigInt]) -> Result<Self> {
        let first = coeffs.iter().find(|c| !c.is_zero());
        match first {
            None => Err(Error::ZeroFunctional),
            Some(lead) => {
                let coeffs = if lead < &BigInt::zero() {
                    coeffs.iter().map(|c| -c.clone()).collect()
                } else {
                    coeffs.to_vec()
                };
                Ok(Self { coeffs })
            }
        }
    }

    pub fn fold_i64(coeffs: &[i64]) -> Result<Self> {
        let ints: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::fold(&ints)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// λ(Y) for a rational point.
    pub fn eval(&self, point: &RationalVector) -> Result<BigRational> {
        if point.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.dim(),
            });
        }
        let mut acc = BigRational::zero();
        for (c, y) in self.coeffs.iter().zip(point.coords()) {
            acc += BigRational::from_integer(c.clone()) * y;
        }
        Ok(acc)
    }

    /// λ(Y) for an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        debug_assert_eq!(point.len(), self.dim());
        let mut acc = BigInt::zero();
        for (c, y) in self.coeffs.iter().zip(point.iter()) {
            acc += c * y;
        }
        acc
    }

    /// The arrangement normal of this weight's kernel hyperplane.
    pub fn normal(&self) -> LinearFunctional {
        LinearFunctional::canonicalize(&self.coeffs).expect("weights are nonzero")
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// ±-folded, zero-dropped multiset of restricted weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
    zero_count: u64,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fold a raw integer covector into the multiset. Zero covectors are
    /// counted, not stored.
    pub fn add_covector(&mut self, coeffs: &[BigInt], multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        match Weight::fold(coeffs) {
            Ok(w) => *self.entries.entry(w).or_insert(0) += multiplicity,
            Err(_) => self.zero_count += multiplicity,
        }
    }

    pub fn add_weight(&mut self, weight: Weight, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        *self.entries.entry(weight).or_insert(0) += multiplicity;
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(f, &m)| (f, m))
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Zero weights dropped while folding. Bookkeeping only; it is not
    /// propagated through `minus`.
    pub fn zero_count(&self) -> u64 {
        self.zero_count
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Arrangement normals: the distinct kernel hyperplanes of the weights.
    /// Proportional weights collapse to one normal here.
    pub fn normals(&self) -> Vec<LinearFunctional> {
        let set: BTreeSet<LinearFunctional> = self.entries.keys().map(|w| w.normal()).collect();
        set.into_iter().collect()
    }

    /// Pointwise multiset difference of the nonzero weights. Fails if any
    /// multiplicity would go negative.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (w, m) in other.entries() {
            let slot = entries.get_mut(w).filter(|have| **have >= m);
            match slot {
                Some(have) => {
                    *have -= m;
                    if *have == 0 {
                        entries.remove(w);
                    }
                }
                None => {
                    return Err(Error::NotASubmodule {
                        weight: w.to_string(),
                    })
                }
            }
        }
        Ok(Self {
            entries,
            zero_count: 0,
        })
    }

    pub fn dims_ok(&self, dim: usize) -> bool {
        self.entries.keys().all(|w| w.dim() == dim)
    }
}

/// Dimension of the split subspace plus the three weight multisets feeding
/// the criterion engine. Always satisfies g = h ⊎ q as multisets, hence
/// ρ_g = ρ_h + ρ_q pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedPairData {
    dim_a: usize,
    g_weights: WeightMultiset,
    h_weights: WeightMultiset,
    q_weights: WeightMultiset,
}

impl RestrictedPairData {
    pub fn new(dim_a: usize, g_weights: WeightMultiset, h_weights: WeightMultiset) -> Result<Self> {
        for ws in [&g_weights, &h_weights] {
            if !ws.dims_ok(dim_a) {
                let got = ws
                    .entries
                    .keys()
                    .map(|w| w.dim())
                    .find(|&d| d != dim_a)
                    .unwrap_or(dim_a);
                return Err(Error::DimensionMismatch {
                    expected: dim_a,
                    got,
                });
            }
        }
        let q_weights = g_weights.minus(&h_weights)?;
        Ok(Self {
            dim_a,
            g_weights,
            h_weights,
            q_weights,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn g_weights(&self) -> &WeightMultiset {
        &self.g_weights
    }

    pub fn h_weights(&self) -> &WeightMultiset {
        &self.h_weights
    }

    pub fn q_weights(&self) -> &WeightMultiset {
        &self.q_weights
    }

    pub fn rho_g(&self) -> RhoFunction {
        RhoFunction::new(self.g_weights.clone())
    }

    pub fn rho_h(&self) -> RhoFunction {
        RhoFunction::new(self.h_weights.clone())
    }

    pub fn rho_q(&self) -> RhoFunction {
        RhoFunction::new(self.q_weights.clone())
    }
}

fn unit(dim: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::from(1);
    v
}

fn zero_vec(dim: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); dim]
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn fold_pairwise_differences(ms: &mut WeightMultiset, list: &[Vec<BigInt>], multiplicity: u64) {
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            ms.add_covector(&sub(&list[i], &list[j]), multiplicity);
        }
    }
}

fn fold_pairwise_sums(ms: &mut WeightMultiset, list: &[Vec<BigInt>], multiplicity: u64) {
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            ms.add_covector(&add(&list[i], &list[j]), multiplicity);
        }
    }
}

/// Diagonal entries of one SL(n_k) block in traceless coordinates starting
/// at `offset`: (t_1, …, t_{n_k−1}, −Σ t_i).
fn sl_block_diagonal(dim: usize, offset: usize, block: u32) -> Vec<Vec<BigInt>> {
    let k = block as usize;
    let mut entries = Vec::with_capacity(k);
    let mut last = zero_vec(dim);
    for j in 0..k.saturating_sub(1) {
        let e = unit(dim, offset + j);
        last = sub(&last, &e);
        entries.push(e);
    }
    entries.push(last);
    entries
}

/// Standard-representation weights of one SO(p_k, q_k) block in a hyperbolic
/// basis: ±a_1, …, ±a_m, plus p_k+q_k−2m zeros, where m = min(p_k, q_k).
fn so_block_standard_weights(dim: usize, offset: usize, p: u32, q: u32) -> Vec<Vec<BigInt>> {
    let m = p.min(q) as usize;
    let total = (p + q) as usize;
    let mut list = Vec::with_capacity(total);
    for i in 0..m {
        let e = unit(dim, offset + i);
        list.push(e.clone());
        list.push(sub(&zero_vec(dim), &e));
    }
    for _ in 0..total - 2 * m {
        list.push(zero_vec(dim));
    }
    list
}

/// Pair data for SL(n, R) ⊃ SL(n_1, R) × ⋯ × SL(n_r, R).
pub fn build_sl_blocks(n: u32, parts: &[u32]) -> Result<RestrictedPairData> {
    if parts.contains(&0) {
        return Err(Error::InvalidSpec(
            "sl block sizes must be at least 1".into(),
        ));
    }
    let total: u64 = parts.iter().map(|&k| k as u64).sum();
    if total > n as u64 {
        return Err(Error::InvalidSpec(format!(
            "sl block sizes sum to {total}, exceeding ambient n = {n}"
        )));
    }

    let dim: usize = parts.iter().map(|&k| k as usize - 1).sum();

    let mut diag: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
    let mut offset = 0usize;
    let mut block_entries: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(parts.len());
    for &k in parts {
        let entries = sl_block_diagonal(dim, offset, k);
        diag.extend(entries.iter().cloned());
        block_entries.push(entries);
        offset += k as usize - 1;
    }
    for _ in 0..(n as u64 - total) {
        diag.push(zero_vec(dim));
    }

    let mut g = WeightMultiset::new();
    fold_pairwise_differences(&mut g, &diag, 2);
    let mut h = WeightMultiset::new();
    for entries in &block_entries {
        fold_pairwise_differences(&mut h, entries, 2);
    }
    RestrictedPairData::new(dim, g, h)
}

/// Pair data for SO(p, q) ⊃ SO(p_1, q_1) × ⋯ × SO(p_r, q_r).
pub fn build_so_blocks(p: u32, q: u32, blocks: &[(u32, u32)]) -> Result<RestrictedPairData> {
    let p_total: u64 = blocks.iter().map(|&(a, _)| a as u64).sum();
    let q_total: u64 = blocks.iter().map(|&(_, b)| b as u64).sum();
    if p_total > p as u64 {
        return Err(Error::InvalidSpec(format!(
            "so block p-sizes sum to {p_total}, exceeding ambient p = {p}"
        )));
    }
    if q_total > q as u64 {
        return Err(Error::InvalidSpec(format!(
            "so block q-sizes sum to {q_total}, exceeding ambient q = {q}"
        )));
    }

    let dim: usize = blocks.iter().map(|&(a, b)| a.min(b) as usize).sum();

    let mut ambient: Vec<Vec<BigInt>> = Vec::with_capacity((p + q) as usize);
    let mut block_lists: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(blocks.len());
    let mut offset = 0usize;
    for &(a, b) in blocks {
        let list = so_block_standard_weights(dim, offset, a, b);
        ambient.extend(list.iter().cloned());
        block_lists.push(list);
        offset += a.min(b) as usize;
    }
    let padding = (p as u64 - p_total) + (q as u64 - q_total);
    for _ in 0..padding {
        ambient.push(zero_vec(dim));
    }

    let mut g = WeightMultiset::new();
    fold_pairwise_sums(&mut g, &ambient, 1);
    let mut h = WeightMultiset::new();
    for list in &block_lists {
        fold_pairwise_sums(&mut h, list, 1);
    }
    RestrictedPairData::new(dim, g, h)
}

/// Pair data for SL(n, R) ⊃ SO(p, q), embedded so that the split part of
/// so(p, q) sits diagonally inside sl(n, R).
pub fn build_so_in_sl(n: u32, p: u32, q: u32) -> Result<RestrictedPairData> {
    if p as u64 + q as u64 > n as u64 {
        return Err(Error::InvalidSpec(format!(
            "so(p, q) with p + q = {} does not embed in sl({n})",
            p as u64 + q as u64
        )));
    }
    let m = p.min(q) as usize;
    let dim = m;

    let mut sl_list: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
    for i in 0..m {
        let e = unit(dim, i);
        sl_list.push(e.clone());
        sl_list.push(sub(&zero_vec(dim), &e));
    }
    for _ in 0..n as usize - 2 * m {
        sl_list.push(zero_vec(dim));
    }

    let so_list = so_block_standard_weights(dim, 0, p, q);

    let mut g = WeightMultiset::new();
    fold_pairwise_differences(&mut g, &sl_list, 2);
    let mut h = WeightMultiset::new();
    fold_pairwise_sums(&mut h, &so_list, 1);
    RestrictedPairData::new(dim, g, h)
}

/// Pair data from raw (covector, multiplicity) lists. Inputs are folded;
/// rational covectors are cleared to integers by one global positive scale
/// (the lcm of all denominators), which preserves every relative magnitude
/// and therefore both verdicts. The q-weights come from multiset
/// subtraction, which fails with `NotASubmodule` when h does not embed in g.
pub fn build_generic(
    dim_a: usize,
    g_weights: &[(Vec<BigRational>, u64)],
    h_weights: &[(Vec<BigRational>, u64)],
) -> Result<RestrictedPairData> {
    let mut scale = BigInt::one();
    for (coeffs, _) in g_weights.iter().chain(h_weights) {
        for c in coeffs {
            scale = scale.lcm(c.denom());
        }
    }

    let fold = |raw: &[(Vec<BigRational>, u64)], which: &str| -> Result<WeightMultiset> {
        let mut ms = WeightMultiset::new();
        for (i, (coeffs, mult)) in raw.iter().enumerate() {
            if coeffs.len() != dim_a {
                return Err(Error::InvalidSpec(format!(
                    "{which}[{i}]: covector has length {}, expected dim_a = {dim_a}",
                    coeffs.len()
                )));
            }
            if *mult == 0 {
                return Err(Error::InvalidSpec(format!(
                    "{which}[{i}]: multiplicity must be at least 1"
                )));
            }
            let ints: Vec<BigInt> = coeffs
                .iter()
                .map(|c| c.numer() * (&scale / c.denom()))
                .collect();
            ms.add_covector(&ints, *mult);
        }
        Ok(ms)
    };
    let g = fold(g_weights, "g_weights")?;
    let h = fold(h_weights, "h_weights")?;
    RestrictedPairData::new(dim_a, g, h)
}
