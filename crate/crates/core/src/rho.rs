//! Evaluation of the piecewise-linear functions ρ_V and global certification
//! of the temperedness and square-integrability inequalities over the split
//! subspace.
//!
//! Both criteria are decided through f(Y) = ρ_g(Y) − 2ρ_h(Y), which equals
//! ρ_g − 2ρ_q up to sign flips of the inequality: since g = h ⊎ q as
//! multisets, ρ_g = ρ_h + ρ_q pointwise and ρ_g ≤ 2ρ_q ⟺ f ≥ 0. The function
//! f is linear on every sign chamber of the arrangement cut out by the
//! g-weights (the h-weight hyperplanes are a subset), so its global sign is
//! decided exactly by evaluating it on the finite test-ray set.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exact::{enumerate_test_rays, ray_cmp, RationalVector, RaySet, DEFAULT_RAY_CAP};
use crate::weights::{RestrictedPairData, WeightMultiset};

/// ρ_V(Y) = ½ Σ_λ m_λ |λ(Y)|: positively homogeneous of degree 1, even, and
/// convex. The ½ is applied at evaluation time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoFunction {
    weights: WeightMultiset,
}

impl RhoFunction {
    pub fn new(weights: WeightMultiset) -> Self {
        Self { weights }
    }

    pub fn weights(&self) -> &WeightMultiset {
        &self.weights
    }

    /// Exact value of ½ Σ m_λ |λ(Y)|.
    pub fn eval(&self, point: &RationalVector) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (f, m) in self.weights.entries() {
            let v = f.eval(point)?;
            acc += BigRational::from_integer(BigInt::from(m)) * v.abs();
        }
        Ok(acc / BigRational::from_integer(BigInt::from(2)))
    }

    /// 2ρ(Y) = Σ m_λ |λ(Y)| on an integer point; stays in the integers.
    pub(crate) fn eval_twice_int(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (f, m) in self.weights.entries() {
            acc += BigInt::from(m) * f.eval_int(point).abs();
        }
        acc
    }
}

/// Evaluate ρ for a weight multiset at a point.
pub fn rho_eval(weights: &WeightMultiset, point: &RationalVector) -> Result<BigRational> {
    RhoFunction::new(weights.clone()).eval(point)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    Fails,
}

/// One test ray together with the exact ρ values on it. The ρ functions are
/// even, so one representative per ±pair carries all the information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub ray: Vec<BigInt>,
    pub rho_g: BigRational,
    pub rho_q: BigRational,
}

/// Outcome of a global inequality check. A `Fails` verdict carries an exact
/// witness that re-verifies under direct evaluation; a `Holds` verdict
/// carries the full per-ray certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub status: VerdictStatus,
    pub witness: Option<RationalVector>,
    pub certificate: Option<Vec<CertificateEntry>>,
}

impl CriterionVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    fn holds_with(certificate: Vec<CertificateEntry>) -> Self {
        Self {
            status: VerdictStatus::Holds,
            witness: None,
            certificate: Some(certificate),
        }
    }

    fn fails_with(witness: RationalVector) -> Self {
        Self {
            status: VerdictStatus::Fails,
            witness: Some(witness),
            certificate: None,
        }
    }
}

/// Knobs for the decision procedures.
#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Cap forwarded to `enumerate_test_rays`.
    pub ray_cap: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self {
            ray_cap: DEFAULT_RAY_CAP,
        }
    }
}

struct RayAnalysis {
    rays: RaySet,
    /// Per canonical ray: (ray, 2ρ_g, 2ρ_h, 2ρ_q), all exact integers.
    values: Vec<(Vec<BigInt>, BigInt, BigInt, BigInt)>,
}

fn analyze(data: &RestrictedPairData, opts: &EngineOptions) -> Result<RayAnalysis> {
    let normals = data.g_weights().normals();
    let rays = enumerate_test_rays(&normals, data.dim_a(), opts.ray_cap)?;
    let rho_g = data.rho_g();
    let rho_h = data.rho_h();
    let rho_q = data.rho_q();
    let values = rays
        .ray_reps()
        .iter()
        .map(|ray| {
            let g = rho_g.eval_twice_int(ray);
            let h = rho_h.eval_twice_int(ray);
            let q = rho_q.eval_twice_int(ray);
            debug_assert_eq!(&g, &(&h + &q), "multiset identity broke on a ray");
            (ray.clone(), g, h, q)
        })
        .collect();
    Ok(RayAnalysis { rays, values })
}

fn certificate_from(values: &[(Vec<BigInt>, BigInt, BigInt, BigInt)]) -> Vec<CertificateEntry> {
    let two = BigRational::from_integer(BigInt::from(2));
    values
        .iter()
        .map(|(ray, g, _, q)| CertificateEntry {
            ray: ray.clone(),
            rho_g: BigRational::from_integer(g.clone()) / &two,
            rho_q: BigRational::from_integer(q.clone()) / &two,
        })
        .collect()
}

fn witness_vector(ray: &[BigInt]) -> RationalVector {
    RationalVector::from_ints(ray)
}

/// Double-check a failing witness by direct evaluation, independent of the
/// f-based route that selected it.
fn verify_witness(data: &RestrictedPairData, witness: &RationalVector, strict_context: bool) {
    let g = data.rho_g().eval(witness).expect("witness dimension");
    let q = data.rho_q().eval(witness).expect("witness dimension");
    let twice_q = BigRational::from_integer(BigInt::from(2)) * q;
    if strict_context {
        assert!(
            !witness.is_zero() && g >= twice_q,
            "strictness witness failed re-verification"
        );
    } else {
        assert!(g > twice_q, "temperedness witness failed re-verification");
    }
}

fn judge_tempered(data: &RestrictedPairData, analysis: &RayAnalysis) -> CriterionVerdict {
    let mut failing: Option<&Vec<BigInt>> = None;
    for (ray, g, h, _) in &analysis.values {
        // f < 0 ⟺ 2ρ_g < 4ρ_h on the ray.
        if *g < BigInt::from(2) * h {
            failing = match failing {
                Some(best) if ray_cmp(best, ray).is_le() => Some(best),
                _ => Some(ray),
            };
        }
    }
    match failing {
        None => CriterionVerdict::holds_with(certificate_from(&analysis.values)),
        Some(ray) => {
            let witness = witness_vector(ray);
            verify_witness(data, &witness, false);
            CriterionVerdict::fails_with(witness)
        }
    }
}

fn judge_strict(data: &RestrictedPairData, analysis: &RayAnalysis) -> CriterionVerdict {
    if analysis.rays.lineality_dim() > 0 {
        let witness = witness_vector(
            analysis
                .rays
                .lineality_witness()
                .expect("positive lineality has a witness"),
        );
        verify_witness(data, &witness, true);
        return CriterionVerdict::fails_with(witness);
    }
    let mut failing: Option<&Vec<BigInt>> = None;
    for (ray, g, h, _) in &analysis.values {
        if *g <= BigInt::from(2) * h {
            failing = match failing {
                Some(best) if ray_cmp(best, ray).is_le() => Some(best),
                _ => Some(ray),
            };
        }
    }
    match failing {
        None => CriterionVerdict::holds_with(certificate_from(&analysis.values)),
        Some(ray) => {
            let witness = witness_vector(ray);
            verify_witness(data, &witness, true);
            CriterionVerdict::fails_with(witness)
        }
    }
}

/// Decide whether ρ_g(Y) ≤ 2ρ_q(Y) for every Y in the split subspace.
///
/// Exact: `Holds` comes with the per-ray certificate, `Fails` with the
/// smallest failing ray in `ray_cmp` order. A zero-dimensional subspace
/// holds vacuously.
pub fn decide_tempered(
    data: &RestrictedPairData,
    opts: &EngineOptions,
) -> Result<CriterionVerdict> {
    if data.dim_a() == 0 {
        return Ok(CriterionVerdict::holds_with(Vec::new()));
    }
    let analysis = analyze(data, opts)?;
    Ok(judge_tempered(data, &analysis))
}

/// Decide whether ρ_g(Y) < 2ρ_q(Y) for every nonzero Y in the split
/// subspace.
///
/// A positive lineality space forces failure (every weight vanishes there,
/// so both sides are zero); the reported witness is a lineality vector.
/// A zero-dimensional subspace holds vacuously.
pub fn decide_strict(data: &RestrictedPairData, opts: &EngineOptions) -> Result<CriterionVerdict> {
    if data.dim_a() == 0 {
        return Ok(CriterionVerdict::holds_with(Vec::new()));
    }
    let analysis = analyze(data, opts)?;
    Ok(judge_strict(data, &analysis))
}

/// Both criteria from a single ray analysis; the arrangement is shared, so
/// this costs one enumeration instead of two.
pub fn decide_both(
    data: &RestrictedPairData,
    opts: &EngineOptions,
) -> Result<(CriterionVerdict, CriterionVerdict)> {
    if data.dim_a() == 0 {
        return Ok((
            CriterionVerdict::holds_with(Vec::new()),
            CriterionVerdict::holds_with(Vec::new()),
        ));
    }
    let analysis = analyze(data, opts)?;
    Ok((
        judge_tempered(data, &analysis),
        judge_strict(data, &analysis),
    ))
}
