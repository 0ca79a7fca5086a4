//! Brute-force ground truth: seeded random instances, exhaustive switching
//! equivalence, a cospectral-pair search harness and an eigensolver check.
//!
//! Random instances come from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`. Search trial `t` draws from stream `t` of the same seed, so
//! results do not depend on thread scheduling.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Spectrum, SymmetricMatrix};
use crate::matrices::laplacian_matrix;
use crate::model::{OrientedHypergraph, Sign};
use crate::spectra::{is_cospectral, laplacian_spectrum, same_nonzero_spectrum};
use crate::transform::{dual, switch, SwitchingFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub p_negative: f64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.size_min > self.size_max {
            return Err(Error::BadConfig(format!(
                "size_min {} exceeds size_max {}",
                self.size_min, self.size_max
            )));
        }
        if self.size_max > self.n {
            return Err(Error::BadConfig(format!(
                "size_max {} exceeds n = {}",
                self.size_max, self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.p_negative) {
            return Err(Error::BadConfig(format!(
                "p_negative {} outside [0, 1]",
                self.p_negative
            )));
        }
        Ok(())
    }
}

fn draw_sign(rng: &mut impl Rng, p_negative: f64) -> i64 {
    if rng.gen_bool(p_negative) {
        -1
    } else {
        1
    }
}

fn sample_instance(cfg: &GeneratorConfig, rng: &mut impl Rng) -> OrientedHypergraph {
    let mut incidences = Vec::new();
    for e in 0..cfg.m {
        let size = rng.gen_range(cfg.size_min..=cfg.size_max);
        let mut members = sample(rng, cfg.n, size).into_vec();
        members.sort_unstable();
        for v in members {
            incidences.push((v, e, draw_sign(rng, cfg.p_negative)));
        }
    }
    OrientedHypergraph::build(cfg.n, cfg.m, &incidences).expect("sampled without replacement")
}

fn resign(g: &OrientedHypergraph, p_negative: f64, rng: &mut impl Rng) -> OrientedHypergraph {
    let incidences: Vec<_> = g
        .incidences()
        .iter()
        .map(|inc| (inc.vertex.0, inc.edge.0, draw_sign(rng, p_negative)))
        .collect();
    OrientedHypergraph::build(g.vertex_count(), g.edge_count(), &incidences)
        .expect("same incidence pattern")
}

/// One instance drawn from `ChaCha8Rng::seed_from_u64(cfg.seed)`. Per edge:
/// a size uniform in `[size_min, size_max]`, a uniform vertex subset of that
/// size, then one sign per member (ascending vertex order), `−1` with
/// probability `p_negative`.
pub fn random_instance(cfg: &GeneratorConfig) -> Result<OrientedHypergraph> {
    cfg.validate()?;
    Ok(sample_instance(
        cfg,
        &mut ChaCha8Rng::seed_from_u64(cfg.seed),
    ))
}

pub const SWITCHING_SEARCH_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchWitness {
    pub zeta: Option<SwitchingFunction>,
}

impl SwitchWitness {
    pub fn found(&self) -> bool {
        self.zeta.is_some()
    }
}

/// Exhaustive search over all `2ⁿ` switching functions in lexicographic order
/// (`+` before `−`, vertex 0 most significant). The first witness is
/// re-verified with [`switch`] before being returned.
pub fn switching_equivalent(
    g1: &OrientedHypergraph,
    g2: &OrientedHypergraph,
) -> Result<SwitchWitness> {
    if !g1.same_underlying(g2) {
        return Err(Error::DifferentUnderlying);
    }
    let n = g1.vertex_count();
    if n > SWITCHING_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: SWITCHING_SEARCH_LIMIT,
        });
    }
    // ζ must satisfy ζ(v) = σ₁(v,e)·σ₂(v,e) at every incidence.
    let required: Vec<(usize, Sign)> = g1
        .incidences()
        .iter()
        .zip(g2.incidences())
        .map(|(a, b)| (a.vertex.0, a.sign * b.sign))
        .collect();
    for index in 0..(1u64 << n) {
        let zeta = SwitchingFunction::from_index(n, index);
        if required.iter().all(|&(v, s)| zeta.signs()[v] == s) {
            let switched = switch(g1, &zeta)?;
            if !switched.same_structure(g2) {
                return Err(Error::InternalIdentityViolation(
                    "switching witness does not reproduce the target".into(),
                ));
            }
            return Ok(SwitchWitness { zeta: Some(zeta) });
        }
    }
    Ok(SwitchWitness { zeta: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CospectralKind {
    /// Equal Laplacian spectra, including zero multiplicities.
    Full,
    /// Equal nonzero Laplacian spectra only.
    Nonzero,
}

impl CospectralKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CospectralKind::Full => "laplacian_cospectral",
            CospectralKind::Nonzero => "nonzero_laplacian_cospectral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    pub kind: Option<CospectralKind>,
    pub switching_equivalent: bool,
    /// `second` is switching equivalent to `dual(first)`.
    pub dual_related: bool,
    /// `L(second) = D(ζ)·L(first)·D(ζ)` for some `ζ`, e.g. a switching
    /// combined with edge negations (negating a column of `H` keeps `H·Hᵀ`).
    pub laplacian_switching: bool,
}

impl PairClass {
    /// Cospectral without a known explanation.
    pub fn is_genuine(&self) -> bool {
        self.kind.is_some()
            && !self.switching_equivalent
            && !self.dual_related
            && !self.laplacian_switching
    }
}

fn related_by_switching(a: &OrientedHypergraph, b: &OrientedHypergraph) -> Result<bool> {
    if !a.same_underlying(b) || a.vertex_count() > SWITCHING_SEARCH_LIMIT {
        return Ok(false);
    }
    Ok(switching_equivalent(a, b)?.found())
}

/// Exhaustive search for `ζ` with `L(b) = D(ζ)·L(a)·D(ζ)`.
pub fn laplacian_switching_equivalent(
    a: &OrientedHypergraph,
    b: &OrientedHypergraph,
) -> Result<bool> {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return Ok(false);
    }
    if n > SWITCHING_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: SWITCHING_SEARCH_LIMIT,
        });
    }
    let (la, lb) = (laplacian_matrix(a), laplacian_matrix(b));
    if la.diagonal() != lb.diagonal() {
        return Ok(false);
    }
    for index in 0..(1u64 << n) {
        let zeta = SwitchingFunction::from_index(n, index);
        if la.diagonal_congruence(&zeta.values())? == lb {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn classify_pair(first: &OrientedHypergraph, second: &OrientedHypergraph) -> Result<PairClass> {
    let (a, b) = (laplacian_spectrum(first)?, laplacian_spectrum(second)?);
    let kind = if a.order() == b.order() && is_cospectral(&a, &b, None)? {
        Some(CospectralKind::Full)
    } else if same_nonzero_spectrum(&a, &b, None) {
        Some(CospectralKind::Nonzero)
    } else {
        None
    };
    Ok(PairClass {
        kind,
        switching_equivalent: related_by_switching(first, second)?,
        dual_related: related_by_switching(&dual(first), second)?,
        laplacian_switching: kind == Some(CospectralKind::Full)
            && first.vertex_count() <= SWITCHING_SEARCH_LIMIT
            && laplacian_switching_equivalent(first, second)?,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CospectralFind {
    pub trial: u64,
    pub first: OrientedHypergraph,
    pub second: OrientedHypergraph,
    pub kind: CospectralKind,
}

fn trial_pair(cfg: &GeneratorConfig, trial: u64) -> (OrientedHypergraph, OrientedHypergraph) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let first = sample_instance(cfg, &mut rng);
    let second = if trial.is_multiple_of(2) {
        resign(&first, cfg.p_negative, &mut rng)
    } else {
        sample_instance(cfg, &mut rng)
    };
    (first, second)
}

/// Samples `trials` pairs and keeps the Laplacian cospectral ones that are
/// not switching equivalent, not dual related and whose Laplacians are not
/// related by a diagonal `±1` congruence. Even trials re-sign the
/// first instance's incidences to get the second; odd trials draw two
/// independent instances. Relabelled (isomorphic) pairs are not filtered.
pub fn cospectral_pair_search(cfg: &GeneratorConfig, trials: u64) -> Result<Vec<CospectralFind>> {
    cfg.validate()?;
    let outcomes: Vec<Option<CospectralFind>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let (first, second) = trial_pair(cfg, trial);
            let class = classify_pair(&first, &second)?;
            Ok(class.is_genuine().then(|| CospectralFind {
                trial,
                first,
                second,
                kind: class.kind.expect("genuine pairs are cospectral"),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(outcomes.into_iter().flatten().collect())
}

const CLOSED_FORM_TOLERANCE: f64 = 1e-6;

fn closed_form_eigenvalues(s: &SymmetricMatrix<f64>) -> Vec<f64> {
    let a = |i, j| s.get(i, j);
    let mut values = match s.order() {
        0 => vec![],
        1 => vec![a(0, 0)],
        2 => {
            let mean = (a(0, 0) + a(1, 1)) / 2.0;
            let r = ((a(0, 0) - a(1, 1)) / 2.0).hypot(a(0, 1));
            vec![mean + r, mean - r]
        }
        3 => {
            let p1 = a(0, 1).powi(2) + a(0, 2).powi(2) + a(1, 2).powi(2);
            if p1 == 0.0 {
                vec![a(0, 0), a(1, 1), a(2, 2)]
            } else {
                let q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
                let p2 = (0..3).map(|i| (a(i, i) - q).powi(2)).sum::<f64>() + 2.0 * p1;
                let p = (p2 / 6.0).sqrt();
                let b = |i: usize, j: usize| (a(i, j) - if i == j { q } else { 0.0 }) / p;
                let det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1))
                    - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0))
                    + b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
                let phi = (det / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
                let hi = q + 2.0 * p * phi.cos();
                let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
                vec![hi, 3.0 * q - hi - lo, lo]
            }
        }
        _ => unreachable!("closed form only for order ≤ 3"),
    };
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

/// Independent plausibility check of `sp` as the spectrum of `s`: trace and
/// Frobenius identities and Geršgorin containment within
/// `1e-8·max(1, ‖S‖_F)`; for order ≤ 3 also agreement with closed-form roots
/// within `1e-6·max(1, ‖S‖_F)`.
pub fn spectrum_sanity(s: &SymmetricMatrix<f64>, sp: &Spectrum) -> bool {
    let n = s.order();
    if sp.order() != n || sp.values().iter().any(|x| !x.is_finite()) {
        return false;
    }
    let norm = s.frobenius_norm();
    let scale = norm.max(1.0);
    let tol = 1e-8 * scale;
    if (sp.sum() - s.trace()).abs() > tol || (sp.sum_of_squares() - norm * norm).abs() > tol {
        return false;
    }
    let discs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let radius: f64 = (0..n).filter(|&j| j != i).map(|j| s.get(i, j).abs()).sum();
            (s.get(i, i), radius)
        })
        .collect();
    let contained = sp
        .values()
        .iter()
        .all(|&x| discs.iter().any(|&(c, r)| (x - c).abs() <= r + tol));
    if !contained {
        return false;
    }
    if n <= 3 {
        let closed = closed_form_eigenvalues(s);
        return closed
            .iter()
            .zip(sp.values())
            .all(|(x, y)| (x - y).abs() <= CLOSED_FORM_TOLERANCE * scale);
    }
    true
}
