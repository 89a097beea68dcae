//! Executable forms of the structural results: the Betti bound with its
//! equality analysis, the Gorenstein criteria, the radical-cube-zero
//! trichotomy, the Tachikawa-type check, the monomial exponential-growth
//! hypothesis, and randomized scans (all in the dimension-zero
//! specialization, with the regular sequence empty).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ArtinAlgebra, Caps};
use crate::error::{Error, Result};
use crate::growth::{analyze, Classification, GrowthConfig};
use crate::linalg::Budget;
use crate::module::{
    canonical_module, cyclic_module, ideal_submodule, matlis_dual, regular_module, residue_field,
    PresentedModule,
};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::resolution::Resolution;
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisKind {
    Tor,
    Ext,
}

/// Report of one Betti-bound instance b_n(N) <= ratio * b_{n-1}(N).
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub kind: HypothesisKind,
    pub n: usize,
    /// The verified vanishing window (inclusive).
    pub window: (usize, usize),
    pub hypothesis_verified: bool,
    /// length(mM) / mu(M), exact.
    pub ratio: BigRational,
    pub b_n: u64,
    pub b_prev: u64,
    pub satisfied: bool,
    pub equality: bool,
    /// m(M tensor Syz_{n-1}(N)) = 0.
    pub m_kills_tensor: bool,
    /// m(mM) = 0.
    pub m_kills_m_m: bool,
}

impl BoundCheck {
    /// The theorem's guarantee, valid only when the hypothesis window was
    /// verified.
    pub fn assert_sound(&self) -> Result<()> {
        if !self.hypothesis_verified {
            return Err(Error::HypothesisFails {
                detail: format!(
                    "{:?} window {:?} does not vanish; bound is reported, not asserted",
                    self.kind, self.window
                ),
            });
        }
        Ok(())
    }
}

fn rational(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Check b_n(N) <= (length(mM)/mu(M)) b_{n-1}(N) after verifying the
/// vanishing hypothesis (Tor window 1..=n, or the Ext window at n), and
/// evaluate the two equality conditions.
pub fn betti_bound_check<K: Field>(
    m: &Arc<PresentedModule<K>>,
    n_mod: &Arc<PresentedModule<K>>,
    kind: HypothesisKind,
    n: usize,
    budget: &Budget,
) -> Result<BoundCheck> {
    assert!(n >= 1);
    let mut res_n = Resolution::new(n_mod.clone());
    res_n.extend_to(n, budget)?;
    let b = res_n.betti_padded(n);
    let (b_n, b_prev) = (b[n], b[n - 1]);

    let mut res_m = Resolution::new(m.clone());
    let (window, hypothesis_verified) = match kind {
        HypothesisKind::Tor => {
            let tor = res_m.tor_dims(n_mod, n, budget)?;
            ((1, n), tor[1..].iter().all(|&d| d == 0))
        }
        HypothesisKind::Ext => {
            let ndual = matlis_dual(n_mod, budget)?;
            let ext = res_m.ext_dims(&ndual, n, budget)?;
            ((n, n), ext[n] == 0)
        }
    };

    let mu = m.b0() as u64;
    let radical = m.space.radical();
    let len_mm = radical.dim() as u64;
    let ratio = rational(len_mm) / rational(mu);
    let lhs = rational(b_n);
    let rhs = &ratio * rational(b_prev);
    let satisfied = lhs <= rhs;
    let equality = lhs == rhs;

    let m_kills_m_m = m.space.radical_of(&radical).dim() == 0;
    // m(M tensor Syz_{n-1}(N)) = 0 iff length(M tensor Syz) = mu(M) mu(Syz).
    let m_kills_tensor = if n == 1 {
        let t0 = res_m.tor_dims(n_mod, 0, budget)?[0] as u64;
        t0 == mu * n_mod.b0() as u64
    } else {
        match res_n.syzygy_module(n - 1, budget)? {
            None => true, // zero syzygy: both sides vanish
            Some(syz) => {
                let t0 = res_m.tor_dims(&syz, 0, budget)?[0] as u64;
                t0 == mu * syz.b0() as u64
            }
        }
    };

    Ok(BoundCheck {
        kind,
        n,
        window,
        hypothesis_verified,
        ratio,
        b_n,
        b_prev,
        satisfied,
        equality,
        m_kills_tensor,
        m_kills_m_m,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionVariant {
    ManyGens,
    GenGor,
    ClassD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    CriterionSatisfied,
    GorensteinCertifiedInconsistency,
}

/// Verdict of one Gorenstein criterion on (R, M).
#[derive(Clone, Debug)]
pub struct CriterionVerdict {
    pub variant: CriterionVariant,
    /// All theorem hypotheses verified.
    pub applies: bool,
    /// The inequality held strictly.
    pub strict: bool,
    pub inequality_holds: bool,
    /// Variant precondition on the ring (generic Gorensteinness for genGor,
    /// class membership certificate for classD); always true for manygens.
    pub ring_precondition: bool,
    /// Ext^i(M, R) for i = 1..=window.
    pub ext_window: Vec<usize>,
    pub ext_vanishes: bool,
    pub conclusion: Option<Conclusion>,
}

/// The many-generators criteria in the Artinian specialization: inequality
/// length(mM) < mu(M) (with the documented non-strict variants) plus an Ext
/// vanishing window whose width depends on the variant.
pub fn gorenstein_criterion<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    m: &Arc<PresentedModule<K>>,
    variant: CriterionVariant,
    class_d_depth: usize,
    budget: &Budget,
) -> Result<CriterionVerdict> {
    let mu = m.b0() as u64;
    let radical = m.space.radical();
    let len_mm = radical.dim() as u64;
    let strict = len_mm < mu;

    let omega = canonical_module(ring.clone(), budget)?;
    let mut res_m = Resolution::new(m.clone());

    let inequality_holds = match variant {
        CriterionVariant::ManyGens | CriterionVariant::GenGor => {
            if strict {
                true
            } else if len_mm == mu {
                // Non-strict variant: allowed when m(M tensor omega) != 0 or
                // m(mM) != 0.
                let t0 = res_m.tor_dims(&omega, 0, budget)?[0] as u64;
                let m_kills_tensor = t0 == mu * omega.b0() as u64;
                let m_kills_m_m = m.space.radical_of(&radical).dim() == 0;
                !m_kills_tensor || !m_kills_m_m
            } else {
                false
            }
        }
        CriterionVariant::ClassD => len_mm <= mu,
    };

    let ring_precondition = match variant {
        CriterionVariant::ManyGens => true,
        // Generically Gorenstein degenerates to Gorenstein for Artinian
        // local rings (the only prime is maximal).
        CriterionVariant::GenGor => ring.is_gorenstein(),
        // Certified class membership: embedding dimension <= 3 or m^3 = 0.
        CriterionVariant::ClassD => {
            ring.profile.embedding_dim <= 3 || ring.maximal_ideal_power(3).dim() == 0
        }
    };

    let window = match variant {
        CriterionVariant::ManyGens => omega.b0(),
        CriterionVariant::GenGor => 1,
        CriterionVariant::ClassD => class_d_depth,
    };
    let reg = regular_module(ring.clone(), budget)?;
    let ext = res_m.ext_dims(&reg, window, budget)?;
    let ext_window = ext[1..].to_vec();
    let ext_vanishes = ext_window.iter().all(|&d| d == 0);

    let applies = inequality_holds && ring_precondition && ext_vanishes;
    let conclusion = applies.then(|| {
        if ring.is_gorenstein() {
            Conclusion::CriterionSatisfied
        } else {
            Conclusion::GorensteinCertifiedInconsistency
        }
    });
    Ok(CriterionVerdict {
        variant,
        applies,
        strict,
        inequality_holds,
        ring_precondition,
        ext_window,
        ext_vanishes,
        conclusion,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LescotCase {
    ExceptionalStationary,
    ExponentialStrictlyIncreasing,
    OutsideScope,
}

#[derive(Clone, Debug)]
pub struct LescotReport {
    pub case: LescotCase,
    pub e: usize,
    pub s: usize,
    pub socle_eq_m2: bool,
    /// e * b_0(M') = length(M') on the syzygy replacement M' with m^2 M' = 0.
    pub eb0_eq_length: Option<bool>,
    /// How many syzygy replacements were taken.
    pub syzygy_depth: usize,
}

/// Classify the growth prediction for a non-free module over a ring with
/// m^3 = 0. Rings whose residue field has polynomial Betti growth
/// (complete-intersection-like) fall outside the trichotomy's scope.
pub fn lescot_classify<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    m: &Arc<PresentedModule<K>>,
    budget: &Budget,
) -> Result<LescotReport> {
    if ring.maximal_ideal_power(3).dim() != 0 {
        return Err(Error::HypothesisFails { detail: "m^3 != 0".to_string() });
    }
    if m.is_free() {
        return Err(Error::HypothesisFails { detail: "module is free".to_string() });
    }
    let e = ring.profile.embedding_dim;
    let s = ring.profile.m2_dim;
    let m2 = ring.maximal_ideal_power(2);
    let socle = ring.socle();
    let socle_eq_m2 =
        socle.dim() == m2.dim() && m2.basis().iter().all(|row| socle.contains(row));

    // Outside scope: the residue field grows polynomially.
    let k = residue_field(ring.clone(), budget)?;
    let mut res_k = Resolution::new(k);
    res_k.extend_to(12, budget)?;
    let kb = res_k.betti_padded(12.min(res_k.betti.len() + 2));
    let report = analyze(&kb, &GrowthConfig::default());
    if matches!(report.classification, Classification::PolynomialLike | Classification::Finite) {
        return Ok(LescotReport {
            case: LescotCase::OutsideScope,
            e,
            s,
            socle_eq_m2,
            eb0_eq_length: None,
            syzygy_depth: 0,
        });
    }

    // Replace M by its first syzygy until m^2 M = 0 (one step suffices when
    // m^3 = 0, since syzygies sit inside m F).
    let mut current = m.clone();
    let mut depth = 0usize;
    loop {
        let radical = current.space.radical();
        if current.space.radical_of(&radical).dim() == 0 {
            break;
        }
        let mut res = Resolution::new(current.clone());
        let syz = res.syzygy_module(1, budget)?.ok_or(Error::HypothesisFails {
            detail: "module became free before reaching m^2 M = 0".to_string(),
        })?;
        current = syz;
        depth += 1;
        assert!(depth <= 2, "m^3 = 0 forces m^2 Syz = 0 after one step");
    }
    let eb0 = e as u64 * current.b0() as u64;
    let eb0_eq_length = eb0 == current.length() as u64;
    let stationary = socle_eq_m2 && s + 1 == e && s >= 2 && eb0_eq_length;
    Ok(LescotReport {
        case: if stationary {
            LescotCase::ExceptionalStationary
        } else {
            LescotCase::ExponentialStrictlyIncreasing
        },
        e,
        s,
        socle_eq_m2,
        eb0_eq_length: Some(eb0_eq_length),
        syzygy_depth: depth,
    })
}

#[derive(Clone, Debug)]
pub struct TachikawaReport {
    /// 2 dim socle(R) > length(R).
    pub hypothesis: bool,
    pub socle_dim: usize,
    pub length: usize,
    /// Ext^i(omega, R) for i = 1..=window (window = mu(omega) in dimension
    /// zero).
    pub ext_window: Vec<usize>,
    pub vanishes: bool,
    pub conclusion: Option<Conclusion>,
}

pub fn tachikawa_check<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    depth: usize,
    budget: &Budget,
) -> Result<TachikawaReport> {
    let socle_dim = ring.profile.socle_dim;
    let length = ring.profile.dim;
    let hypothesis = 2 * socle_dim > length;
    let omega = canonical_module(ring.clone(), budget)?;
    let window = omega.b0().max(depth);
    let reg = regular_module(ring.clone(), budget)?;
    let mut res = Resolution::new(omega.clone());
    let ext = res.ext_dims(&reg, window, budget)?;
    let ext_window = ext[1..].to_vec();
    let vanishes = ext_window[..omega.b0()].iter().all(|&d| d == 0);
    let conclusion = (hypothesis && vanishes).then(|| {
        if ring.is_gorenstein() {
            Conclusion::CriterionSatisfied
        } else {
            Conclusion::GorensteinCertifiedInconsistency
        }
    });
    Ok(TachikawaReport { hypothesis, socle_dim, length, ext_window, vanishes, conclusion })
}

/// A witness (i, j, l) with x_i x_j and x_i x_l in the monomial ideal and
/// j != l (i = j is allowed). Presence implies exponential growth of the
/// canonical module's Betti sequence.
pub fn monomial_growth_hypothesis(gens: &[Monomial], nvars: usize) -> Option<(usize, usize, usize)> {
    let contains = |i: usize, j: usize| -> bool {
        let mut e = vec![0u16; nvars];
        e[i] += 1;
        e[j] += 1;
        let m = Monomial::new(e);
        gens.iter().any(|g| g.divides(&m))
    };
    for i in 0..nvars {
        let hits: Vec<usize> = (0..nvars).filter(|&j| contains(i, j)).collect();
        if hits.len() >= 2 {
            return Some((i, hits[0], hits[1]));
        }
    }
    None
}

/// Componentwise comparison b_i^Q <= b_i^R on the common computed window.
pub fn tor_injectivity_consequence(q_betti: &[u64], r_betti: &[u64]) -> bool {
    q_betti.iter().zip(r_betti).all(|(q, r)| q <= r)
}

// ---- randomized scans ----

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub nvars: usize,
    pub max_socle_degree: usize,
    pub samples: usize,
    pub seed: u64,
    /// Inclusion probability per monomial.
    pub density: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { nvars: 3, max_socle_degree: 4, samples: 100, seed: 0, density: 0.3 }
    }
}

/// One random m-primary monomial ideal: each monomial of degree at most
/// max_socle_degree + 1 is included independently, pure powers are added for
/// any uncovered variable, and the generating set is pruned to be minimal.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, config: &ScanConfig) -> Vec<Monomial> {
    let top = (config.max_socle_degree + 1) as u16;
    let mut picked: Vec<Monomial> = Vec::new();
    let mut stack = vec![vec![0u16; config.nvars]];
    // Deterministic enumeration of all monomials with 1 <= degree <= top,
    // in lexicographic exponent order.
    let mut all: Vec<Monomial> = Vec::new();
    while let Some(e) = stack.pop() {
        let deg: u16 = e.iter().sum();
        if deg > 0 {
            all.push(Monomial::new(e.clone()));
        }
        for i in (0..config.nvars).rev() {
            if e[i..].iter().skip(1).all(|&x| x == 0) && deg < top {
                let mut child = e.clone();
                child[i] += 1;
                stack.push(child);
            }
        }
    }
    all.sort();
    for m in &all {
        if rng.gen_bool(config.density) {
            picked.push(m.clone());
        }
    }
    for i in 0..config.nvars {
        if !picked.iter().any(|m| m.pure_power() == Some(i)) {
            let mut e = vec![0u16; config.nvars];
            e[i] = top;
            picked.push(Monomial::new(e));
        }
    }
    picked.sort();
    picked.dedup();
    let minimal: Vec<Monomial> = picked
        .iter()
        .filter(|m| !picked.iter().any(|g| g != *m && g.divides(m)))
        .cloned()
        .collect();
    minimal
}

#[derive(Clone, Debug)]
pub struct ScanSample {
    pub index: usize,
    pub gens: Vec<Monomial>,
    pub dim: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
    pub b0: u64,
    pub b1: u64,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub total: usize,
    pub gorenstein_skipped: usize,
    pub non_gorenstein: usize,
    /// min over non-Gorenstein samples of b1 - b0 (all positive unless a
    /// counterexample exists).
    pub min_excess: Option<i64>,
    pub samples: Vec<ScanSample>,
    /// Non-Gorenstein samples with b1 <= b0, independently re-verified:
    /// counterexample findings, not failures.
    pub findings: Vec<ScanSample>,
}

/// Randomized scan of the open question: does b_1(omega) <= b_0(omega)
/// force Gorenstein?
pub fn b1_vs_b0_scan<K: Field>(config: &ScanConfig, budget: &Budget) -> Result<ScanReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = ScanReport {
        total: 0,
        gorenstein_skipped: 0,
        non_gorenstein: 0,
        min_excess: None,
        samples: Vec::new(),
        findings: Vec::new(),
    };
    for index in 0..config.samples {
        let gens = random_monomial_ideal(&mut rng, config);
        let polys: Vec<Polynomial<K>> =
            gens.iter().map(|m| Polynomial::monomial(m.clone())).collect();
        let vars = (0..config.nvars).map(|i| format!("x{}", i + 1)).collect();
        let ring = ArtinAlgebra::<K>::from_quotient(
            vars,
            polys,
            MonomialOrder::DegRevLex,
            Caps::default(),
        )?;
        report.total += 1;
        if ring.is_gorenstein() {
            report.gorenstein_skipped += 1;
            continue;
        }
        let omega = canonical_module(ring.clone(), budget)?;
        let sample = ScanSample {
            index,
            gens,
            dim: ring.profile.dim,
            socle_dim: ring.profile.socle_dim,
            gorenstein: false,
            b0: omega.b0() as u64,
            b1: omega.b1() as u64,
        };
        report.non_gorenstein += 1;
        let excess = sample.b1 as i64 - sample.b0 as i64;
        report.min_excess =
            Some(report.min_excess.map_or(excess, |cur: i64| cur.min(excess)));
        if sample.b1 <= sample.b0 {
            // Re-verify through the Tor route before reporting a finding.
            let k = residue_field(ring.clone(), budget)?;
            let mut res = Resolution::new(omega.clone());
            let tor = res.tor_dims(&k, 1, budget)?;
            let confirmed = tor[0] as u64 == sample.b0
                && tor[1] as u64 == sample.b1
                && ring.profile.socle_dim > 1;
            if confirmed {
                report.findings.push(sample.clone());
            }
        }
        report.samples.push(sample);
    }
    Ok(report)
}

/// One classified sample of the monomial exponential-growth check.
#[derive(Clone, Debug)]
pub struct WitnessSample {
    pub index: usize,
    pub gens: Vec<Monomial>,
    pub witness: (usize, usize, usize),
    pub betti: Vec<u64>,
    pub classification: Classification,
    pub curvature_low_clears_margin: bool,
}

#[derive(Clone, Debug)]
pub struct WitnessScanReport {
    pub attempted: usize,
    pub samples: Vec<WitnessSample>,
    /// Samples with a witness whose classification failed to land
    /// exponential-like (violations of the theorem; expected empty).
    pub violations: Vec<usize>,
}

/// Classify omega's growth over random monomial rings that carry a witness
/// pair x_i x_j, x_i x_l in the ideal; the theorem predicts exponential
/// growth every time.
pub fn witness_growth_scan<K: Field>(
    config: &ScanConfig,
    steps: usize,
    budget: &Budget,
) -> Result<WitnessScanReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = WitnessScanReport { attempted: 0, samples: Vec::new(), violations: Vec::new() };
    let growth_config = GrowthConfig::default();
    let mut attempts = 0usize;
    while report.samples.len() < config.samples && attempts < config.samples * 40 {
        attempts += 1;
        report.attempted = attempts;
        let gens = random_monomial_ideal(&mut rng, config);
        let Some(witness) = monomial_growth_hypothesis(&gens, config.nvars) else {
            continue;
        };
        let polys: Vec<Polynomial<K>> =
            gens.iter().map(|m| Polynomial::monomial(m.clone())).collect();
        let vars = (0..config.nvars).map(|i| format!("x{}", i + 1)).collect();
        let ring = ArtinAlgebra::<K>::from_quotient(
            vars,
            polys,
            MonomialOrder::DegRevLex,
            Caps::default(),
        )?;
        if ring.is_gorenstein() {
            // A witness pair forces a non-Gorenstein ring only generically;
            // skip Gorenstein hits (omega free, nothing to classify).
            continue;
        }
        let omega = canonical_module(ring.clone(), budget)?;
        let mut res = Resolution::new(omega);
        res.extend_to(steps, budget)?;
        let betti = res.betti_padded(steps.min(res.betti.len().saturating_sub(1).max(0)));
        let betti = if res.complete { res.betti_padded(steps) } else { betti };
        let g = analyze(&betti, &growth_config);
        let clears = g
            .curvature_low
            .as_ref()
            .map(|lo| lo > &(BigRational::from_integer(BigInt::from(1)) + &g.exp_margin))
            .unwrap_or(false);
        let idx = report.samples.len();
        let ok = g.classification == Classification::ExponentialLike && clears;
        report.samples.push(WitnessSample {
            index: idx,
            gens,
            witness,
            betti,
            classification: g.classification,
            curvature_low_clears_margin: clears,
        });
        if !ok {
            report.violations.push(idx);
        }
    }
    Ok(report)
}

/// Deterministic random small module over a ring, for randomized suites.
/// Returns a description and the module.
pub fn random_module<K: Field>(
    rng: &mut ChaCha8Rng,
    ring: &Arc<ArtinAlgebra<K>>,
    budget: &Budget,
) -> Result<(String, Arc<PresentedModule<K>>)> {
    let nvars = ring.nvars();
    for _ in 0..32 {
        let choice = rng.gen_range(0..5u32);
        let result = match choice {
            0 => Some(("k".to_string(), residue_field(ring.clone(), budget)?)),
            1 => Some(("canonical".to_string(), canonical_module(ring.clone(), budget)?)),
            2 => Some(("R".to_string(), regular_module(ring.clone(), budget)?)),
            3 => {
                // Cyclic quotient by a random variable power or product.
                let i = rng.gen_range(0..nvars);
                let j = rng.gen_range(0..nvars);
                let mut e = vec![0u16; nvars];
                e[i] += 1;
                e[j] += 1;
                let m = Monomial::new(e);
                let p: Polynomial<K> = Polynomial::monomial(m.clone());
                match cyclic_module(ring.clone(), &[p], budget) {
                    Ok(md) => Some((
                        format!("cyclic({})", m.render(&ring.vars)),
                        md,
                    )),
                    Err(Error::ZeroModule) => None,
                    Err(e) => return Err(e),
                }
            }
            _ => {
                let i = rng.gen_range(0..nvars);
                let m = Monomial::var(i, nvars);
                let p: Polynomial<K> = Polynomial::monomial(m.clone());
                match ideal_submodule(ring.clone(), &[p], budget) {
                    Ok(md) => Some((format!("ideal({})", m.render(&ring.vars)), md)),
                    Err(Error::ZeroModule) => None,
                    Err(e) => return Err(e),
                }
            }
        };
        if let Some(r) = result {
            return Ok(r);
        }
    }
    Ok(("k".to_string(), residue_field(ring.clone(), budget)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F32003;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn mpoly(e: &[u16]) -> Polynomial<F32003> {
        Polynomial::monomial(mono(e))
    }

    fn ring_xyz() -> Arc<ArtinAlgebra<F32003>> {
        ArtinAlgebra::from_quotient(
            names(&["x", "y", "z"]),
            vec![mpoly(&[2, 0, 0]), mpoly(&[1, 1, 0]), mpoly(&[0, 2, 0]), mpoly(&[0, 0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    fn ring_a() -> Arc<ArtinAlgebra<F32003>> {
        ArtinAlgebra::from_quotient(
            names(&["a", "b"]),
            vec![mpoly(&[2, 0]), mpoly(&[1, 1]), mpoly(&[0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    fn ring_x3y3() -> Arc<ArtinAlgebra<F32003>> {
        ArtinAlgebra::from_quotient(
            names(&["x", "y"]),
            vec![mpoly(&[3, 0]), mpoly(&[0, 3])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn bound_equality_for_ideal_z() {
        // M = (z), N = omega: ratio 2, equality from n = 2 on; strict at n = 1.
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let m = ideal_submodule(r.clone(), &[mpoly(&[0, 0, 1])], &budget).unwrap();
        let w = canonical_module(r, &budget).unwrap();
        for n in 1..=6 {
            let check =
                betti_bound_check(&m, &w, HypothesisKind::Tor, n, &budget).unwrap();
            assert!(check.hypothesis_verified, "Tor window vanishes");
            assert_eq!(check.ratio, rational(2));
            assert!(check.satisfied);
            assert_eq!(check.equality, n >= 2, "equality from n = 2 (b1 = 3 < 4)");
            assert_eq!(check.equality, check.m_kills_tensor && check.m_kills_m_m);
            assert!(check.m_kills_m_m, "m^2 M = 0 for M = (z)");
        }
    }

    #[test]
    fn bound_conditions_independent() {
        // M = R/(x), N = R/(y) over k[x,y]/(x^3,y^3): hypothesis holds,
        // ratio 2, strict, tensor condition holds, m^2 M != 0.
        let budget = Budget::unlimited();
        let r = ring_x3y3();
        let m = cyclic_module(r.clone(), &[mpoly(&[1, 0])], &budget).unwrap();
        let n = cyclic_module(r.clone(), &[mpoly(&[0, 1])], &budget).unwrap();
        let check = betti_bound_check(&m, &n, HypothesisKind::Tor, 1, &budget).unwrap();
        assert!(check.hypothesis_verified);
        assert_eq!(check.ratio, rational(2));
        assert!(check.satisfied);
        assert!(!check.equality);
        assert!(check.m_kills_tensor, "M tensor N = k");
        assert!(!check.m_kills_m_m, "m^2 M != 0");
    }

    #[test]
    fn bound_with_residue_field() {
        // M = k: ratio 0; hypothesis holds only against free N.
        let budget = Budget::unlimited();
        let r = ring_a();
        let k = residue_field(r.clone(), &budget).unwrap();
        let reg = regular_module(r.clone(), &budget).unwrap();
        let check = betti_bound_check(&k, &reg, HypothesisKind::Tor, 1, &budget).unwrap();
        assert!(check.hypothesis_verified);
        assert_eq!(check.ratio, rational(0));
        assert!(check.satisfied); // b_1(R) = 0 <= 0
        let w = canonical_module(r, &budget).unwrap();
        let check = betti_bound_check(&k, &w, HypothesisKind::Tor, 1, &budget).unwrap();
        assert!(!check.hypothesis_verified, "Tor_1(k, omega) != 0 for non-free omega");
        assert!(check.assert_sound().is_err());
    }

    #[test]
    fn ext_variant_matches_tor_variant() {
        let budget = Budget::unlimited();
        let r = ring_xyz();
        let m = ideal_submodule(r.clone(), &[mpoly(&[0, 0, 1])], &budget).unwrap();
        let w = canonical_module(r, &budget).unwrap();
        // Ext^n(M, omega^v) = Tor_n(M, omega); omega^v = R here.
        let tor = betti_bound_check(&m, &w, HypothesisKind::Tor, 2, &budget).unwrap();
        let ext = betti_bound_check(&m, &w, HypothesisKind::Ext, 2, &budget).unwrap();
        assert_eq!(tor.hypothesis_verified, ext.hypothesis_verified);
        assert_eq!(tor.satisfied, ext.satisfied);
        assert_eq!(tor.equality, ext.equality);
    }

    #[test]
    fn criterion_examples() {
        let budget = Budget::unlimited();
        // M = (z) over k[x,y,z]/(x^2,xy,y^2,z^2): length(mM) = 2 > 1 = mu; strict
        // inequality fails while Ext vanishes; no Gorenstein conclusion.
        let r = ring_xyz();
        let m = ideal_submodule(r.clone(), &[mpoly(&[0, 0, 1])], &budget).unwrap();
        let v =
            gorenstein_criterion(&r, &m, CriterionVariant::ManyGens, 8, &budget).unwrap();
        assert!(!v.strict);
        assert!(!v.inequality_holds);
        assert!(v.ext_vanishes);
        assert!(!v.applies);
        assert!(v.conclusion.is_none());
        // M = R over a Gorenstein ring: inequality fails, consistent.
        let b3: Arc<ArtinAlgebra<F32003>> = {
            let mut gens: Vec<Polynomial<F32003>> = Vec::new();
            use num_traits::One;
            for i in 0..2 {
                let mut a = vec![0u16; 3];
                a[i] = 2;
                let mut b = vec![0u16; 3];
                b[i + 1] = 2;
                gens.push(Polynomial::from_terms(
                    vec![(mono(&a), F32003::one()), (mono(&b), -F32003::one())],
                    MonomialOrder::DegRevLex,
                ));
            }
            gens.push(mpoly(&[1, 1, 0]));
            gens.push(mpoly(&[1, 0, 1]));
            gens.push(mpoly(&[0, 1, 1]));
            ArtinAlgebra::from_quotient(
                names(&["x1", "x2", "x3"]),
                gens,
                MonomialOrder::DegRevLex,
                Caps::default(),
            )
            .unwrap()
        };
        let reg = regular_module(b3.clone(), &budget).unwrap();
        let v =
            gorenstein_criterion(&b3, &reg, CriterionVariant::ManyGens, 8, &budget).unwrap();
        assert!(!v.inequality_holds);
        assert!(v.conclusion.is_none());
    }

    #[test]
    fn tachikawa_examples() {
        let budget = Budget::unlimited();
        // k[a,b]/(a^2,ab,b^2): hypothesis 4 > 3 holds; Ext^1(omega, R) != 0.
        let a = ring_a();
        let rep = tachikawa_check(&a, 2, &budget).unwrap();
        assert!(rep.hypothesis);
        assert!(!rep.vanishes);
        assert!(rep.ext_window[0] > 0, "Ext^1(omega, R) != 0 reported");
        assert!(rep.conclusion.is_none());
        // k[x,y,z]/(x^2,xy,y^2,z^2): 4 <= 6, hypothesis fails.
        let r = ring_xyz();
        let rep = tachikawa_check(&r, 2, &budget).unwrap();
        assert!(!rep.hypothesis);
    }

    #[test]
    fn lescot_examples() {
        let budget = Budget::unlimited();
        // omega over k[x,y,z]/(x^2,xy,y^2,z^2): socle = m^2, s = 2 = e - 1 >= 2,
        // but e*b0 = length fails on the syzygy: exponential.
        let r = ring_xyz();
        let w = canonical_module(r.clone(), &budget).unwrap();
        let rep = lescot_classify(&r, &w, &budget).unwrap();
        assert_eq!(rep.case, LescotCase::ExponentialStrictlyIncreasing);
        assert!(rep.socle_eq_m2);
        assert_eq!(rep.s, 2);
        assert_eq!(rep.e, 3);
        assert_eq!(rep.eb0_eq_length, Some(false));
        // Any non-free module over k[a,b]/(a^2,ab,b^2): socle != m^2 = 0.
        let a = ring_a();
        let wa = canonical_module(a.clone(), &budget).unwrap();
        let rep = lescot_classify(&a, &wa, &budget).unwrap();
        assert_eq!(rep.case, LescotCase::ExponentialStrictlyIncreasing);
        assert!(!rep.socle_eq_m2);
        // k over k[x,y]/(x^2,y^2): polynomial growth, outside scope.
        let ci: Arc<ArtinAlgebra<F32003>> = ArtinAlgebra::from_quotient(
            names(&["x", "y"]),
            vec![mpoly(&[2, 0]), mpoly(&[0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        let k = residue_field(ci.clone(), &budget).unwrap();
        let rep = lescot_classify(&ci, &k, &budget).unwrap();
        assert_eq!(rep.case, LescotCase::OutsideScope);
    }

    #[test]
    fn witness_examples() {
        // (x^2, xy, y^2, z^2): witness present.
        let gens = vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 2])];
        let w = monomial_growth_hypothesis(&gens, 3).unwrap();
        assert_ne!(w.1, w.2);
        // (xy, xz, yz, x^3, y^3, z^3): witness i = x.
        let gens = vec![
            mono(&[1, 1, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[3, 0, 0]),
            mono(&[0, 3, 0]),
            mono(&[0, 0, 3]),
        ];
        let w = monomial_growth_hypothesis(&gens, 3).unwrap();
        assert_eq!(w.0, 0);
        // (x^3, y^3): none.
        assert!(monomial_growth_hypothesis(&[mono(&[3, 0]), mono(&[0, 3])], 2).is_none());
    }

    #[test]
    fn hilbert_burch_codimension_two_instances() {
        // k[a,b]/(a^4, a^3 b, b^2) and k[b,c]/(b^2, bc, c^2): non-Gorenstein
        // with b1(omega) = b0(omega) + 1 = 3.
        let budget = Budget::unlimited();
        let r1: Arc<ArtinAlgebra<F32003>> = ArtinAlgebra::from_quotient(
            names(&["a", "b"]),
            vec![mpoly(&[4, 0]), mpoly(&[3, 1]), mpoly(&[0, 2])],
            MonomialOrder::DegRevLex,
            Caps::default(),
        )
        .unwrap();
        assert!(!r1.is_gorenstein());
        let w1 = canonical_module(r1, &budget).unwrap();
        assert_eq!((w1.b0(), w1.b1()), (2, 3));
        let r2 = ring_a();
        let w2 = canonical_module(r2, &budget).unwrap();
        assert_eq!((w2.b0(), w2.b1()), (2, 3));
    }

    #[test]
    fn b1_scan_smoke() {
        let budget = Budget::unlimited();
        let config = ScanConfig { samples: 40, seed: 7, ..Default::default() };
        let report = b1_vs_b0_scan::<F32003>(&config, &budget).unwrap();
        assert_eq!(report.total, 40);
        assert!(report.non_gorenstein > 0);
        // Reproducibility under the same seed.
        let report2 = b1_vs_b0_scan::<F32003>(&config, &budget).unwrap();
        assert_eq!(report.non_gorenstein, report2.non_gorenstein);
        assert_eq!(report.min_excess, report2.min_excess);
        assert!(report.findings.is_empty(), "no counterexample expected at this scale");
        for s in &report.samples {
            assert!(s.b1 > s.b0, "question evidence: b1 > b0 on non-Gorenstein samples");
        }
    }

    #[test]
    fn witness_scan_smoke() {
        let budget = Budget::unlimited();
        let config = ScanConfig {
            samples: 5,
            seed: 11,
            nvars: 3,
            max_socle_degree: 2,
            density: 0.3,
        };
        let report = witness_growth_scan::<F32003>(&config, 8, &budget).unwrap();
        assert_eq!(report.samples.len(), 5);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn consequence_comparison() {
        assert!(tor_injectivity_consequence(&[1, 2, 4], &[2, 3, 6]));
        assert!(!tor_injectivity_consequence(&[1, 4], &[2, 3]));
    }
}
