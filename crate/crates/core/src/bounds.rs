//! Executable verdicts for the adjacency and Laplacian eigenvalue bounds and
//! interlacing theorems of oriented hypergraphs.
//!
//! Each check returns a [`BoundReport`] comparing a left-hand side against a
//! right-hand side. Eigenvalues are floating point, so a report holds when its
//! slack is at least `-1e-8·max(1, |lhs|, |rhs|)`. Every check here is a
//! theorem under its stated hypotheses: a violated report is a bug.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{spectral_radius, Spectrum};
use crate::matrices::{adjacency_matrix, is_nonnegative, laplacian_matrix, IntSymmetric};
use crate::model::{EdgeId, OrientedHypergraph, VertexId};
use crate::spectra::{adjacency_spectrum, laplacian_spectrum, relative_tolerance};
use crate::transform::{plus_orientation, weak_delete_edge, weak_delete_vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs ≤ rhs`.
    AtMost,
    /// `lhs ≤ value ≤ rhs`.
    Within,
    /// `λ_{k+1}(parent) ≤ λ_k(child) ≤ λ_k(parent)` for every `k`.
    Interlacing,
    /// `lhs` and `rhs` are truth values that must coincide.
    Equivalence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    pub holds: bool,
    pub slack: f64,
    pub context: String,
}

fn verdict(slack: f64, scale: f64) -> bool {
    slack >= -relative_tolerance(scale)
}

impl BoundReport {
    fn at_most(name: &'static str, lhs: f64, rhs: f64, context: String) -> Self {
        let slack = rhs - lhs;
        Self {
            name,
            relation: Relation::AtMost,
            lhs,
            rhs,
            value: None,
            holds: verdict(slack, lhs.abs().max(rhs.abs())),
            slack,
            context,
        }
    }

    fn within(name: &'static str, lo: f64, value: f64, hi: f64, context: String) -> Self {
        let slack = (value - lo).min(hi - value);
        Self {
            name,
            relation: Relation::Within,
            lhs: lo,
            rhs: hi,
            value: Some(value),
            holds: verdict(slack, lo.abs().max(hi.abs())),
            slack,
            context,
        }
    }

    /// Checks `λ_{k+1}(parent) ≤ λ_k(child) ≤ λ_k(parent)` for
    /// `k = 1..n−1`, where `n` is the order of `parent`. `lhs`/`rhs` record the
    /// tightest link of the chain.
    fn interlacing(
        name: &'static str,
        parent: &Spectrum,
        child: &Spectrum,
        context: String,
    ) -> Self {
        let n = parent.order();
        let mut tightest = (0.0, 0.0, f64::INFINITY);
        for k in 1..n {
            let mu = child.lambda(k);
            for (lhs, rhs) in [(parent.lambda(k + 1), mu), (mu, parent.lambda(k))] {
                if rhs - lhs < tightest.2 {
                    tightest = (lhs, rhs, rhs - lhs);
                }
            }
        }
        let (lhs, rhs, slack) = if tightest.2.is_finite() {
            tightest
        } else {
            (0.0, 0.0, 0.0)
        };
        Self {
            name,
            relation: Relation::Interlacing,
            lhs,
            rhs,
            value: None,
            holds: verdict(slack, lhs.abs().max(rhs.abs())),
            slack,
            context,
        }
    }

    fn equivalence(name: &'static str, left: bool, right: bool, context: String) -> Self {
        let as_f64 = |b: bool| if b { 1.0 } else { 0.0 };
        let slack = if left == right { 0.0 } else { -1.0 };
        Self {
            name,
            relation: Relation::Equivalence,
            lhs: as_f64(left),
            rhs: as_f64(right),
            value: None,
            holds: left == right,
            slack,
            context,
        }
    }
}

/// The bound families, by report name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    AdjRadius,
    AdjMeanNet,
    AdjMoment,
    AdjVertexInterlacing,
    LapVertexInterlacing,
    LapEdgeInterlacing,
    LapGersgorin,
    LapUniformUpper,
    LapNonnegIffUniform,
    LapDeltaLower,
    LapMean,
    LapMoment,
}

impl Bound {
    pub const ALL: [Bound; 12] = [
        Bound::AdjRadius,
        Bound::AdjMeanNet,
        Bound::AdjMoment,
        Bound::AdjVertexInterlacing,
        Bound::LapVertexInterlacing,
        Bound::LapEdgeInterlacing,
        Bound::LapGersgorin,
        Bound::LapUniformUpper,
        Bound::LapNonnegIffUniform,
        Bound::LapDeltaLower,
        Bound::LapMean,
        Bound::LapMoment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bound::AdjRadius => "adj_radius_bound",
            Bound::AdjMeanNet => "adj_mean_net_bound",
            Bound::AdjMoment => "adj_moment_bound",
            Bound::AdjVertexInterlacing => "adj_vertex_interlacing",
            Bound::LapVertexInterlacing => "lap_vertex_interlacing",
            Bound::LapEdgeInterlacing => "lap_edge_interlacing",
            Bound::LapGersgorin => "lap_gersgorin_bound",
            Bound::LapUniformUpper => "lap_uniform_upper_bound",
            Bound::LapNonnegIffUniform => "lap_nonneg_iff_uniform",
            Bound::LapDeltaLower => "lap_delta_lower_bound",
            Bound::LapMean => "lap_mean_bound",
            Bound::LapMoment => "lap_moment_bound",
        }
    }

    pub fn from_name(name: &str) -> Option<Bound> {
        Bound::ALL.into_iter().find(|b| b.name() == name)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn largest(sp: &Spectrum) -> f64 {
    sp.largest().unwrap_or(0.0)
}

fn require_vertices(g: &OrientedHypergraph) -> Result<()> {
    if g.vertex_count() == 0 {
        Err(Error::EmptyVertexSet)
    } else {
        Ok(())
    }
}

fn require_linear(g: &OrientedHypergraph) -> Result<()> {
    if g.is_linear() {
        Ok(())
    } else {
        Err(Error::NotLinear)
    }
}

fn require_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::BadK(k))
    } else {
        Ok(())
    }
}

fn check_vertex(g: &OrientedHypergraph, v: VertexId) -> Result<()> {
    if v.0 < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            kind: "vertex",
            index: v.0,
            count: g.vertex_count(),
        })
    }
}

/// `jᵀ·S^k·j` in exact integer arithmetic.
pub fn walk_moment(s: &IntSymmetric, k: u32) -> Result<i128> {
    let n = s.order();
    let mut w = vec![1i128; n];
    for _ in 0..k {
        let mut next = vec![0i128; n];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, &wj) in w.iter().enumerate() {
                let term = (s.get(i, j) as i128)
                    .checked_mul(wj)
                    .ok_or(Error::Overflow("walk moment"))?;
                *slot = slot
                    .checked_add(term)
                    .ok_or(Error::Overflow("walk moment"))?;
            }
        }
        w = next;
    }
    w.into_iter()
        .try_fold(0i128, |acc, x| acc.checked_add(x))
        .ok_or(Error::Overflow("walk moment"))
}

/// `ρ(A(G)) ≤ max_i a(v_i)`.
pub fn adj_radius_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    let sp = adjacency_spectrum(g)?;
    let rho = spectral_radius(&sp).unwrap_or(0.0);
    let max_adj = g
        .all_vertex_stats()
        .iter()
        .map(|s| s.adj_total)
        .max()
        .unwrap_or(0);
    Ok(BoundReport::at_most(
        Bound::AdjRadius.name(),
        rho,
        max_adj as f64,
        String::new(),
    ))
}

/// `λ_n(A) ≤ (1/n)·Σ a±(v_j) ≤ λ₁(A)`.
pub fn adj_mean_net_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    require_vertices(g)?;
    let sp = adjacency_spectrum(g)?;
    let net: i64 = g.all_vertex_stats().iter().map(|s| s.adj_net).sum();
    let mean = net as f64 / g.vertex_count() as f64;
    Ok(BoundReport::within(
        Bound::AdjMeanNet.name(),
        sp.smallest().unwrap_or(0.0),
        mean,
        largest(&sp),
        String::new(),
    ))
}

/// Moment form with `M_k = jᵀA^k j`: for odd `k`, `λ_n^k ≤ M_k/n ≤ λ₁^k`;
/// for even `k` only `M_k/n ≤ ρ(A)^k` is asserted, since the smallest
/// eigenvalue of `A^k` need not be `λ_n^k`.
pub fn adj_moment_bound(g: &OrientedHypergraph, k: u32) -> Result<BoundReport> {
    require_k(k)?;
    require_vertices(g)?;
    let sp = adjacency_spectrum(g)?;
    let moment = walk_moment(&adjacency_matrix(g), k)? as f64 / g.vertex_count() as f64;
    let context = format!("k={k}");
    let name = Bound::AdjMoment.name();
    let power = |x: f64| x.powi(k as i32);
    if k % 2 == 1 {
        Ok(BoundReport::within(
            name,
            power(sp.smallest().unwrap_or(0.0)),
            moment,
            power(largest(&sp)),
            context,
        ))
    } else {
        let rho = spectral_radius(&sp).unwrap_or(0.0);
        Ok(BoundReport::at_most(name, moment, power(rho), context))
    }
}

/// Adjacency interlacing under weak vertex-deletion.
pub fn adj_vertex_interlacing(g: &OrientedHypergraph, v: VertexId) -> Result<BoundReport> {
    check_vertex(g, v)?;
    if g.vertex_count() < 2 {
        return Err(Error::LastVertex);
    }
    let child = weak_delete_vertex(g, v)?.graph;
    Ok(BoundReport::interlacing(
        Bound::AdjVertexInterlacing.name(),
        &adjacency_spectrum(g)?,
        &adjacency_spectrum(&child)?,
        format!("vertex {}", g.vertex_label(v)),
    ))
}

/// Laplacian interlacing under weak vertex-deletion.
pub fn lap_vertex_interlacing(g: &OrientedHypergraph, v: VertexId) -> Result<BoundReport> {
    check_vertex(g, v)?;
    if g.vertex_count() < 2 {
        return Err(Error::LastVertex);
    }
    let child = weak_delete_vertex(g, v)?.graph;
    Ok(BoundReport::interlacing(
        Bound::LapVertexInterlacing.name(),
        &laplacian_spectrum(g)?,
        &laplacian_spectrum(&child)?,
        format!("vertex {}", g.vertex_label(v)),
    ))
}

/// Laplacian interlacing under weak edge-deletion; `L(G\e)` keeps order `n`.
pub fn lap_edge_interlacing(g: &OrientedHypergraph, e: EdgeId) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let child = weak_delete_edge(g, e)?.graph;
    Ok(BoundReport::interlacing(
        Bound::LapEdgeInterlacing.name(),
        &laplacian_spectrum(g)?,
        &laplacian_spectrum(&child)?,
        format!("edge {}", g.edge_label(e)),
    ))
}

/// `λ₁(L) ≤ max_i (d_i + a(v_i))`.
pub fn lap_gersgorin_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    let sp = laplacian_spectrum(g)?;
    let rhs = g
        .all_vertex_stats()
        .iter()
        .map(|s| s.degree + s.adj_total)
        .max()
        .unwrap_or(0);
    Ok(BoundReport::at_most(
        Bound::LapGersgorin.name(),
        largest(&sp),
        rhs as f64,
        String::new(),
    ))
}

/// `λ₁(L(G)) ≤ λ₁(L(U))` for linear `G`, with `U = +H` standing for the whole
/// uniformly oriented class (all of which share one Laplacian).
pub fn lap_uniform_upper_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    require_linear(g)?;
    let lhs = largest(&laplacian_spectrum(g)?);
    let rhs = largest(&laplacian_spectrum(&plus_orientation(g))?);
    Ok(BoundReport::at_most(
        Bound::LapUniformUpper.name(),
        lhs,
        rhs,
        String::new(),
    ))
}

/// For linear `G`: `L(G)` is entrywise nonnegative iff `G` is uniformly
/// oriented. `lhs` is the nonnegativity flag, `rhs` the uniformity flag.
pub fn lap_nonneg_iff_uniform(g: &OrientedHypergraph) -> Result<BoundReport> {
    require_linear(g)?;
    Ok(BoundReport::equivalence(
        Bound::LapNonnegIffUniform.name(),
        is_nonnegative(&laplacian_matrix(g)),
        g.is_uniformly_oriented(),
        String::new(),
    ))
}

/// `Δ + 1 ≤ λ₁(L)` when every edge has at least two vertices.
///
/// Linearity is also required: two parallel 2-edges with opposite adjacency
/// signs have `L = 2I`, so `λ₁ = 2 < Δ + 1 = 3`. The reduction to a star
/// needs every edge at the maximum-degree vertex to meet the others only
/// there.
pub fn lap_delta_lower_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if let Some(e) = g.edges().find(|&e| g.edge_size(e) < 2) {
        return Err(Error::SmallEdgePresent(e.0));
    }
    require_linear(g)?;
    let lhs = (g.max_degree() + 1) as f64;
    let rhs = largest(&laplacian_spectrum(g)?);
    Ok(BoundReport::at_most(
        Bound::LapDeltaLower.name(),
        lhs,
        rhs,
        String::new(),
    ))
}

/// `λ_n(L) ≤ (1/n)·Σ (d_j − a±(v_j)) ≤ λ₁(L)`.
pub fn lap_mean_bound(g: &OrientedHypergraph) -> Result<BoundReport> {
    require_vertices(g)?;
    let sp = laplacian_spectrum(g)?;
    let total: i64 = g
        .all_vertex_stats()
        .iter()
        .map(|s| s.degree as i64 - s.adj_net)
        .sum();
    Ok(BoundReport::within(
        Bound::LapMean.name(),
        sp.smallest().unwrap_or(0.0),
        total as f64 / g.vertex_count() as f64,
        largest(&sp),
        String::new(),
    ))
}

/// `λ_n(L)^k ≤ N_k/n ≤ λ₁(L)^k` with `N_k = jᵀL^k j`; valid for every `k`
/// because `L` is positive semidefinite.
pub fn lap_moment_bound(g: &OrientedHypergraph, k: u32) -> Result<BoundReport> {
    require_k(k)?;
    require_vertices(g)?;
    let sp = laplacian_spectrum(g)?;
    let moment = walk_moment(&laplacian_matrix(g), k)? as f64 / g.vertex_count() as f64;
    let power = |x: f64| x.powi(k as i32);
    Ok(BoundReport::within(
        Bound::LapMoment.name(),
        power(sp.smallest().unwrap_or(0.0)),
        moment,
        power(largest(&sp)),
        format!("k={k}"),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Skip {
    pub name: &'static str,
    pub context: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Check {
    Evaluated(BoundReport),
    Skipped(Skip),
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Evaluated(r) => r.name,
            Check::Skipped(s) => s.name,
        }
    }

    pub fn context(&self) -> &str {
        match self {
            Check::Evaluated(r) => &r.context,
            Check::Skipped(s) => &s.context,
        }
    }

    /// Skips count as holding.
    pub fn holds(&self) -> bool {
        match self {
            Check::Evaluated(r) => r.holds,
            Check::Skipped(_) => true,
        }
    }

    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            Check::Evaluated(r) => Some(r),
            Check::Skipped(_) => None,
        }
    }
}

pub fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(Check::holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Orders `k` for both moment bounds.
    pub moment_orders: Vec<u32>,
    /// Cap on vertex plus edge deletions; beyond it an evenly spaced sample is
    /// taken.
    pub max_deletions: usize,
    /// Restrict to one bound family.
    pub only: Option<Bound>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            moment_orders: vec![1, 2, 3],
            max_deletions: 64,
            only: None,
        }
    }
}

enum Target {
    Vertex(VertexId),
    Edge(EdgeId),
}

fn deletion_targets(g: &OrientedHypergraph, cap: usize) -> Vec<Target> {
    let all: Vec<Target> = g
        .vertices()
        .map(Target::Vertex)
        .chain(g.edges().map(Target::Edge))
        .collect();
    if all.len() <= cap {
        return all;
    }
    let len = all.len();
    let picks: Vec<usize> = (0..cap).map(|i| i * len / cap).collect();
    all.into_iter()
        .enumerate()
        .filter(|(i, _)| picks.binary_search(i).is_ok())
        .map(|(_, t)| t)
        .collect()
}

fn record(
    out: &mut Vec<Check>,
    name: &'static str,
    context: String,
    result: Result<BoundReport>,
) -> Result<()> {
    match result {
        Ok(report) => out.push(Check::Evaluated(report)),
        Err(err @ Error::NoConvergence { .. }) | Err(err @ Error::Overflow(_)) => return Err(err),
        Err(err) => out.push(Check::Skipped(Skip {
            name,
            context,
            reason: err.to_string(),
        })),
    }
    Ok(())
}

type WholeCheck = fn(&OrientedHypergraph) -> Result<BoundReport>;
type MomentCheck = fn(&OrientedHypergraph, u32) -> Result<BoundReport>;

/// Runs every bound with default options.
pub fn verify_all(g: &OrientedHypergraph) -> Result<Vec<Check>> {
    verify_with(g, &VerifyOptions::default())
}

/// Runs every applicable bound, recording precondition failures as skips.
/// Output is sorted by name, then context.
pub fn verify_with(g: &OrientedHypergraph, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let wanted = |b: Bound| opts.only.is_none_or(|o| o == b);
    let mut out = Vec::new();

    let whole: [(Bound, WholeCheck); 7] = [
        (Bound::AdjRadius, adj_radius_bound),
        (Bound::AdjMeanNet, adj_mean_net_bound),
        (Bound::LapGersgorin, lap_gersgorin_bound),
        (Bound::LapUniformUpper, lap_uniform_upper_bound),
        (Bound::LapNonnegIffUniform, lap_nonneg_iff_uniform),
        (Bound::LapDeltaLower, lap_delta_lower_bound),
        (Bound::LapMean, lap_mean_bound),
    ];
    for (bound, check) in whole {
        if wanted(bound) {
            record(&mut out, bound.name(), String::new(), check(g))?;
        }
    }

    let moments: [(Bound, MomentCheck); 2] = [
        (Bound::AdjMoment, adj_moment_bound),
        (Bound::LapMoment, lap_moment_bound),
    ];
    for (bound, check) in moments {
        if wanted(bound) {
            for &k in &opts.moment_orders {
                record(&mut out, bound.name(), format!("k={k}"), check(g, k))?;
            }
        }
    }

    for target in deletion_targets(g, opts.max_deletions) {
        match target {
            Target::Vertex(v) => {
                let context = format!("vertex {}", g.vertex_label(v));
                if wanted(Bound::AdjVertexInterlacing) {
                    let r = adj_vertex_interlacing(g, v);
                    record(
                        &mut out,
                        Bound::AdjVertexInterlacing.name(),
                        context.clone(),
                        r,
                    )?;
                }
                if wanted(Bound::LapVertexInterlacing) {
                    let r = lap_vertex_interlacing(g, v);
                    record(&mut out, Bound::LapVertexInterlacing.name(), context, r)?;
                }
            }
            Target::Edge(e) => {
                if wanted(Bound::LapEdgeInterlacing) {
                    let context = format!("edge {}", g.edge_label(e));
                    record(
                        &mut out,
                        Bound::LapEdgeInterlacing.name(),
                        context,
                        lap_edge_interlacing(g, e),
                    )?;
                }
            }
        }
    }

    out.sort_by(|a, b| (a.name(), a.context()).cmp(&(b.name(), b.context())));
    Ok(out)
}
