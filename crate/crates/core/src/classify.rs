//! Discrete-series conclusions: the rank criterion for Disc(G), the
//! corollary route Disc(G/H) ⊂ Disc(G) under the strict inequality, and the
//! exact classification for SO(p, q) block subgroups (symmetric-pair rule
//! plus the three parity cases).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rho::CriterionVerdict;
use crate::spec::Ambient;

/// Whether a discrete-series set is known to be populated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscSet {
    NonEmpty,
    Empty,
    Unknown,
}

/// What is known about Disc(G/H).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscRel {
    NonEmpty,
    Empty,
    SubsetOfDiscG,
    Unknown,
}

/// Machine-readable tag naming the rule that produced a conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Justification {
    #[serde(rename = "rank-criterion")]
    RankCriterion,
    #[serde(rename = "corollary")]
    Corollary,
    #[serde(rename = "so-classifier-case-1")]
    SoClassifierCase1,
    #[serde(rename = "so-classifier-case-2")]
    SoClassifierCase2,
    #[serde(rename = "so-classifier-case-3")]
    SoClassifierCase3,
    #[serde(rename = "symmetric-rule")]
    SymmetricRule,
    #[serde(rename = "compact-H")]
    CompactH,
}

/// A discrete-series conclusion for a pair. `disc_gh == Empty` only ever
/// comes from the corollary (with Disc(G) empty and the strict verdict
/// holding), the SO classifier, or the symmetric rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscConclusion {
    pub disc_g: DiscSet,
    pub disc_gh: DiscRel,
    pub justification: Justification,
}

/// Harish-Chandra's rank criterion, hardcoded per family: SL(n, R) has
/// discrete series iff n ≤ 2, and SO(p, q) iff p and q are not both odd.
/// The derivation (rank G vs rank K) is recorded as a test oracle.
pub fn disc_nonempty_ambient(ambient: &Ambient) -> bool {
    match *ambient {
        Ambient::Sl { n } => n <= 2,
        Ambient::So { p, q } => !(p % 2 == 1 && q % 2 == 1),
    }
}

/// Conclude what the inclusion Disc(G/H) ⊂ Disc(G) gives: nothing unless
/// the strict verdict holds.
pub fn conclude_from_corollary(strict: &CriterionVerdict, disc_g_nonempty: bool) -> DiscConclusion {
    let disc_g = if disc_g_nonempty {
        DiscSet::NonEmpty
    } else {
        DiscSet::Empty
    };
    let disc_gh = match (strict.holds(), disc_g_nonempty) {
        (true, false) => DiscRel::Empty,
        (true, true) => DiscRel::SubsetOfDiscG,
        (false, _) => DiscRel::Unknown,
    };
    DiscConclusion {
        disc_g,
        disc_gh,
        justification: Justification::Corollary,
    }
}

/// Normalized SO(p, q) block presentation.
///
/// Normalization drops group-trivial data only: blocks with p_k + q_k = 0
/// are removed, blocks are sorted descending by p_k + q_k with ties broken
/// by p_k descending, and the virtual complement block (p − Σp_k, q − Σq_k)
/// is appended when its total is at most 1 (SO(1) and SO(0) are trivial, so
/// the subgroup is unchanged). Blocks of total 1 are kept: they participate
/// in the sums and the ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoBlockSpec {
    p: u32,
    q: u32,
    blocks: Vec<(u32, u32)>,
    padded: bool,
}

fn block_key(b: &(u32, u32)) -> (u32, u32) {
    (b.0 + b.1, b.0)
}

fn sort_blocks(blocks: &mut [(u32, u32)]) {
    blocks.sort_by_key(|b| std::cmp::Reverse(block_key(b)));
}

impl SoBlockSpec {
    pub fn new(p: u32, q: u32, blocks: &[(u32, u32)]) -> Result<Self> {
        let p_total: u64 = blocks.iter().map(|&(a, _)| a as u64).sum();
        let q_total: u64 = blocks.iter().map(|&(_, b)| b as u64).sum();
        if p_total > p as u64 || q_total > q as u64 {
            return Err(Error::InvalidSpec(format!(
                "so blocks sum to ({p_total}, {q_total}), exceeding ambient ({p}, {q})"
            )));
        }
        let mut kept: Vec<(u32, u32)> =
            blocks.iter().copied().filter(|&(a, b)| a + b > 0).collect();
        let complement = (p - p_total as u32, q - q_total as u32);
        let padded = complement.0 + complement.1 == 1;
        if padded {
            kept.push(complement);
        }
        sort_blocks(&mut kept);
        Ok(Self {
            p,
            q,
            blocks: kept,
            padded,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Normalized blocks, sorted descending by (total, p).
    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    /// Whether normalization appended a trivial complement block.
    pub fn padded(&self) -> bool {
        self.padded
    }

    /// Whether several blocks tie at the maximal total while disagreeing on
    /// q_k = 0. The classification outcome is provably unaffected (two
    /// maximal blocks force 2(p_1 + q_1) ≤ p + q), but reports surface the
    /// ambiguity in the presentation.
    pub fn has_ambiguous_max_tie(&self) -> bool {
        let Some(first) = self.blocks.first() else {
            return false;
        };
        let max_total = first.0 + first.1;
        let top: Vec<&(u32, u32)> = self
            .blocks
            .iter()
            .take_while(|b| b.0 + b.1 == max_total)
            .collect();
        top.len() > 1 && {
            let any_pure = top.iter().any(|b| b.1 == 0);
            let any_mixed = top.iter().any(|b| b.1 != 0);
            any_pure && any_mixed
        }
    }

    fn swapped(&self) -> Self {
        let mut blocks: Vec<(u32, u32)> = self.blocks.iter().map(|&(a, b)| (b, a)).collect();
        sort_blocks(&mut blocks);
        Self {
            p: self.q,
            q: self.p,
            blocks,
            padded: self.padded,
        }
    }
}

/// Whether the normalized presentation is a symmetric pair: exactly two
/// blocks that exhaust p and q.
pub fn is_symmetric_so_pair(spec: &SoBlockSpec) -> bool {
    let p_total: u32 = spec.blocks.iter().map(|&(a, _)| a).sum();
    let q_total: u32 = spec.blocks.iter().map(|&(_, b)| b).sum();
    spec.blocks.len() == 2 && p_total == spec.p && q_total == spec.q
}

/// Exact discrete-series classification for SO(p, q) ⊃ ∏ SO(p_k, q_k).
///
/// SO(p, q) ≅ SO(q, p), so the presentation is swapped first when p is odd
/// and q even. Symmetric pairs follow the rank-type rule p_1 ≥ p_2 and
/// q_1 ≥ q_2; otherwise the verdict depends only on the parities of p and q
/// and on the leading block (p_1, q_1). Every branch is an equivalence, so
/// the complement verdict is Empty, never Unknown.
pub fn classify_so_pair(spec: &SoBlockSpec) -> DiscConclusion {
    let oriented = if spec.p % 2 == 1 && spec.q.is_multiple_of(2) {
        spec.swapped()
    } else {
        spec.clone()
    };
    let (p, q) = (oriented.p, oriented.q);
    let disc_g = if disc_nonempty_ambient(&Ambient::So { p, q }) {
        DiscSet::NonEmpty
    } else {
        DiscSet::Empty
    };

    if is_symmetric_so_pair(&oriented) {
        let (p1, q1) = oriented.blocks[0];
        let (p2, q2) = oriented.blocks[1];
        let nonempty = p1 >= p2 && q1 >= q2;
        return DiscConclusion {
            disc_g,
            disc_gh: if nonempty {
                DiscRel::NonEmpty
            } else {
                DiscRel::Empty
            },
            justification: Justification::SymmetricRule,
        };
    }

    let (p1, q1) = oriented.blocks.first().copied().unwrap_or((0, 0));
    let total = p as u64 + q as u64;
    let leading = 2 * (p1 as u64 + q1 as u64);
    let (nonempty, justification) = match (p % 2, q % 2) {
        (0, 0) => (true, Justification::SoClassifierCase1),
        (0, 1) => (
            leading <= total || q1 != 0,
            Justification::SoClassifierCase2,
        ),
        (1, 1) => (
            p1 != 0 && q1 != 0 && leading >= total + 2,
            Justification::SoClassifierCase3,
        ),
        _ => unreachable!("p odd, q even was swapped away"),
    };
    DiscConclusion {
        disc_g,
        disc_gh: if nonempty {
            DiscRel::NonEmpty
        } else {
            DiscRel::Empty
        },
        justification,
    }
}
