//! Structured check reports: one pair in, verdicts and discrete-series
//! conclusions out. Consumed by the CLI and the Python bindings.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::classify::{
    classify_so_pair, conclude_from_corollary, disc_nonempty_ambient, is_symmetric_so_pair,
    DiscConclusion, DiscRel, DiscSet, Justification, SoBlockSpec,
};
use crate::error::Result;
use crate::jsonnum::{ExactInt, ExactRat};
use crate::rho::{decide_both, CriterionVerdict, EngineOptions};
use crate::spec::{PairSpec, Subgroup};
use crate::weights::{RestrictedPairData, WeightMultiset};

/// Square integrability is certified in one direction only: a failing strict
/// verdict never yields "no".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareIntegrable {
    Yes,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntryReport {
    pub ray: Vec<ExactInt>,
    pub rho_g: ExactRat,
    pub rho_q: ExactRat,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ExactRat>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateEntryReport>>,
}

impl VerdictReport {
    fn from_verdict(v: &CriterionVerdict) -> Self {
        Self {
            holds: v.holds(),
            witness: v
                .witness
                .as_ref()
                .map(|w| w.coords().iter().map(|c| ExactRat(c.clone())).collect()),
            certificate: v.certificate.as_ref().map(|entries| {
                entries
                    .iter()
                    .map(|e| CertificateEntryReport {
                        ray: e.ray.iter().map(|c| ExactInt(c.clone())).collect(),
                        rho_g: ExactRat(e.rho_g.clone()),
                        rho_q: ExactRat(e.rho_q.clone()),
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightEntryReport {
    pub coeffs: Vec<ExactInt>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightsReport {
    pub g: Vec<WeightEntryReport>,
    pub h: Vec<WeightEntryReport>,
    pub q: Vec<WeightEntryReport>,
}

fn echo_weights(ws: &WeightMultiset) -> Vec<WeightEntryReport> {
    ws.entries()
        .map(|(f, m)| WeightEntryReport {
            coeffs: f.coeffs().iter().map(|c| ExactInt(c.clone())).collect(),
            multiplicity: m,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscReport {
    pub disc_g: DiscSet,
    pub disc_gh: DiscRel,
    pub justification: Justification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_pair: Option<bool>,
}

/// Full result of one pair check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub spec: PairSpec,
    pub dim_a: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsReport>,
    pub tempered: VerdictReport,
    /// The temperedness reading of the verdict is exact only for semisimple
    /// ambient groups; this flag records whether that hypothesis holds.
    pub tempered_criterion_exact: bool,
    pub strict: VerdictReport,
    pub square_integrable: SquareIntegrable,
    pub disc: DiscReport,
    pub notes: Vec<String>,
    /// Present only when timing was requested; excluded by default so that
    /// repeated runs are byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub engine: EngineOptions,
    pub verbose_weights: bool,
    pub with_timing: bool,
}

fn certificate_shows_equality(verdict: &CriterionVerdict) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    match &verdict.certificate {
        Some(entries) if !entries.is_empty() => entries.iter().all(|e| e.rho_g == &two * &e.rho_q),
        _ => false,
    }
}

fn disc_conclusion(
    spec: &PairSpec,
    data: &RestrictedPairData,
    strict: &CriterionVerdict,
    notes: &mut Vec<String>,
) -> Result<DiscReport> {
    let disc_g_nonempty = disc_nonempty_ambient(&spec.ambient);

    if let (crate::spec::Ambient::So { p, q }, Subgroup::SoBlocks { blocks }) =
        (&spec.ambient, &spec.subgroup)
    {
        let block_spec = SoBlockSpec::new(*p, *q, blocks)?;
        let symmetric = is_symmetric_so_pair(&block_spec);
        if block_spec.padded() {
            notes.push(
                "presentation padded with a trivial SO(1)/SO(0) complement block for \
                 symmetric-pair detection (the subgroup is unchanged)"
                    .into(),
            );
        }
        if block_spec.has_ambiguous_max_tie() {
            notes.push(
                "several blocks tie at the maximal p_k+q_k with differing q_k = 0 status; \
                 the classification is tie-independent here, but the presentation is ambiguous"
                    .into(),
            );
        }
        let conclusion = classify_so_pair(&block_spec);
        return Ok(DiscReport {
            disc_g: conclusion.disc_g,
            disc_gh: conclusion.disc_gh,
            justification: conclusion.justification,
            symmetric_pair: Some(symmetric),
        });
    }

    let mut conclusion: DiscConclusion = conclude_from_corollary(strict, disc_g_nonempty);
    // A zero-dimensional split subspace means H is compact, which is the
    // honest reason the strict inequality holds vacuously. The Empty
    // conclusion still rides on the corollary.
    if data.dim_a() == 0 && conclusion.disc_gh != DiscRel::Empty {
        conclusion.justification = Justification::CompactH;
    }
    Ok(DiscReport {
        disc_g: conclusion.disc_g,
        disc_gh: conclusion.disc_gh,
        justification: conclusion.justification,
        symmetric_pair: None,
    })
}

/// Run the whole pipeline for one pair: build weights, certify both
/// inequalities, and derive discrete-series conclusions.
pub fn run_check(spec: &PairSpec, opts: &CheckOptions) -> Result<Report> {
    let started = Instant::now();
    let data = spec.build()?;
    let (tempered, strict) = decide_both(&data, &opts.engine)?;

    let mut notes = Vec::new();
    if !spec.ambient.is_semisimple() {
        notes.push(format!(
            "{} is not semisimple, so the temperedness reading of the verdict is heuristic",
            spec.ambient.describe()
        ));
    }
    if let Subgroup::Generic { .. } = spec.subgroup {
        notes.push("generic weight data: conclusions trust the declared ambient group".into());
    }
    if tempered.holds() && !strict.holds() && certificate_shows_equality(&tempered) {
        notes.push(
            "rho_g = 2 rho_q identically on the split subspace; the strict criterion is \
             one-directional, and such boundary cases can still be square integrable \
             (SL(3,R)/SL(2,R) is)"
                .into(),
        );
    }

    let disc = disc_conclusion(spec, &data, &strict, &mut notes)?;
    let square_integrable = if strict.holds() {
        SquareIntegrable::Yes
    } else {
        SquareIntegrable::Unknown
    };

    Ok(Report {
        spec: spec.clone(),
        dim_a: data.dim_a(),
        weights: opts.verbose_weights.then(|| WeightsReport {
            g: echo_weights(data.g_weights()),
            h: echo_weights(data.h_weights()),
            q: echo_weights(data.q_weights()),
        }),
        tempered: VerdictReport::from_verdict(&tempered),
        tempered_criterion_exact: spec.ambient.is_semisimple(),
        strict: VerdictReport::from_verdict(&strict),
        square_integrable,
        disc,
        notes,
        timing_ms: opts
            .with_timing
            .then(|| started.elapsed().as_millis() as u64),
    })
}
