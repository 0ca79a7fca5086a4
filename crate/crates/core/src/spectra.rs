//! Adjacency and Laplacian spectra and cospectrality predicates.
//!
//! All comparisons are relative: two eigenvalues agree when they differ by at
//! most `1e-8·max(1, ρ)`, and an eigenvalue counts as zero under the same band.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{spectral_radius, sym_eigenvalues, Spectrum, SymmetricMatrix};
use crate::matrices::{adjacency_matrix, laplacian_matrix};
use crate::model::OrientedHypergraph;

pub const RELATIVE_TOLERANCE: f64 = 1e-8;

/// `1e-8·max(1, scale)`.
pub fn relative_tolerance(scale: f64) -> f64 {
    RELATIVE_TOLERANCE * scale.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumPair {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
}

pub fn adjacency_spectrum(g: &OrientedHypergraph) -> Result<Spectrum> {
    sym_eigenvalues(&adjacency_matrix(g).to_f64())
}

/// Eigenvalues of `L(G)` with values in `[−1e-8·max(1, ‖L‖_F), 0)` clamped to
/// zero.
pub fn laplacian_spectrum(g: &OrientedHypergraph) -> Result<Spectrum> {
    let l = laplacian_matrix(g).to_f64();
    Ok(clamp_psd(&l, sym_eigenvalues(&l)?))
}

pub(crate) fn clamp_psd(s: &SymmetricMatrix<f64>, sp: Spectrum) -> Spectrum {
    let band = relative_tolerance(s.frobenius_norm());
    let values = sp
        .values()
        .iter()
        .map(|&x| if x < 0.0 && x >= -band { 0.0 } else { x })
        .collect();
    Spectrum::new(values)
}

pub fn spectrum_pair(g: &OrientedHypergraph) -> Result<SpectrumPair> {
    Ok(SpectrumPair {
        adjacency: adjacency_spectrum(g)?,
        laplacian: laplacian_spectrum(g)?,
    })
}

fn radius_or_zero(sp: &Spectrum) -> f64 {
    spectral_radius(sp).unwrap_or(0.0)
}

/// Default comparison tolerance for a pair of spectra.
pub fn pair_tolerance(a: &Spectrum, b: &Spectrum) -> f64 {
    relative_tolerance(radius_or_zero(a).max(radius_or_zero(b)))
}

/// Elementwise agreement of two sorted spectra of the same order.
pub fn is_cospectral(a: &Spectrum, b: &Spectrum, tol: Option<f64>) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let tol = tol.unwrap_or_else(|| pair_tolerance(a, b));
    Ok(a.values()
        .iter()
        .zip(b.values())
        .all(|(x, y)| (x - y).abs() <= tol))
}

/// Drops eigenvalues with `|λ| ≤ tol` (default `1e-8·max(1, ρ)`).
pub fn nonzero_spectrum(s: &Spectrum, tol: Option<f64>) -> Spectrum {
    let tol = tol.unwrap_or_else(|| relative_tolerance(radius_or_zero(s)));
    Spectrum::new(
        s.values()
            .iter()
            .copied()
            .filter(|x| x.abs() > tol)
            .collect(),
    )
}

/// Number of eigenvalues with `|λ| ≤ tol` (default `1e-8·max(1, ρ)`).
pub fn zero_count(s: &Spectrum, tol: Option<f64>) -> usize {
    s.order() - nonzero_spectrum(s, tol).order()
}

/// Compares the nonzero parts of two spectra of possibly different order.
pub fn same_nonzero_spectrum(a: &Spectrum, b: &Spectrum, tol: Option<f64>) -> bool {
    let tol = tol.unwrap_or_else(|| pair_tolerance(a, b));
    let (na, nb) = (
        nonzero_spectrum(a, Some(tol)),
        nonzero_spectrum(b, Some(tol)),
    );
    na.order() == nb.order() && is_cospectral(&na, &nb, Some(tol)).unwrap_or(false)
}

pub fn same_nonzero_laplacian_spectrum(
    g1: &OrientedHypergraph,
    g2: &OrientedHypergraph,
    tol: Option<f64>,
) -> Result<bool> {
    Ok(same_nonzero_spectrum(
        &laplacian_spectrum(g1)?,
        &laplacian_spectrum(g2)?,
        tol,
    ))
}
