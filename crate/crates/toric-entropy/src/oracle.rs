//! Brute-force ground truth at desk scale.
//!
//! Ground states are built explicitly as sparse amplitude maps over basis
//! strings (the support is only 4·2^{n₀−1} strings, never 2^{n₁}), the
//! stabilizer conditions are verified literally, and reduced density
//! matrix spectra are obtained from the Gram matrix of the B-restriction
//! classes — or combinatorially, when every class carries one uniform
//! amplitude and the classes' A-restriction sets are pairwise identical
//! or disjoint.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::jacobi;
use crate::region::{Region, RegionKind};
use crate::surface::Surface;

/// Default cap on the Gram matrix dimension for the dense eigensolve.
pub const DEFAULT_GRAM_LIMIT: usize = 4096;

const NORMALIZATION_TOL: f64 = 1e-9;
const AMPLITUDE_TOL: f64 = 1e-12;
const SPECTRUM_TOL: f64 = 1e-9;

/// Per-sector amplitudes (a₀₀, a₀₁, a₁₀, a₁₁).
pub type SectorAmplitudes = [Complex64; 4];

/// The sector-00 basis state |ξ₀₀⟩.
pub fn sector_zero() -> SectorAmplitudes {
    [
        Complex64::new(1.0, 0.0),
        Complex64::ZERO,
        Complex64::ZERO,
        Complex64::ZERO,
    ]
}

/// A state as a sparse map from basis bit-strings (1 = spin flipped from
/// |0⟩) to complex amplitudes.
#[derive(Clone, Debug)]
pub struct StateSupport {
    n_links: usize,
    amplitudes: HashMap<BitVector, Complex64>,
}

impl StateSupport {
    pub fn n_links(&self) -> usize {
        self.n_links
    }

    pub fn support_size(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, e: &BitVector) -> Option<Complex64> {
        self.amplitudes.get(e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BitVector, &Complex64)> {
        self.amplitudes.iter()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    /// Test helper: nudges one support string's amplitude.
    pub fn perturb(&mut self, e: &BitVector, delta: Complex64) {
        if let Some(a) = self.amplitudes.get_mut(e) {
            *a += delta;
        }
    }
}

/// Builds Σ_ij a_ij |ξ_ij⟩ by enumerating the star group orbit of each
/// requested sector.
pub fn build_ground_state(
    s: &Surface,
    amps: &SectorAmplitudes,
    limit_bits: u32,
) -> Result<StateSupport> {
    let total: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if (total - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::Argument(format!(
            "sector amplitudes must satisfy Σ|a_ij|² = 1, got {total}"
        )));
    }
    let needs_ladders = amps[1..].iter().any(|a| a.norm_sqr() > 0.0);
    let zero = BitVector::zeros(s.n_links());
    let offsets: [BitVector; 4] = if needs_ladders {
        let lp = s.ladder_operators()?;
        [zero.clone(), lp.w1.clone(), lp.w2.clone(), lp.w1.xor(&lp.w2)]
    } else {
        [zero.clone(), zero.clone(), zero.clone(), zero]
    };
    let m = s.star_matrix();
    let basis_len = s.n_sites() - 1;
    let norm = 1.0 / (2f64.powi(basis_len as i32)).sqrt();
    let mut amplitudes = HashMap::new();
    for (sector, amp) in amps.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        for g in m.enumerate_rowspace(limit_bits)? {
            amplitudes.insert(g.xor(&offsets[sector]), amp * norm);
        }
    }
    Ok(StateSupport {
        n_links: s.n_links(),
        amplitudes,
    })
}

/// True iff ψ satisfies A_s ψ = ψ for every star (support closed under
/// each star flip, with equal amplitudes) and B_p ψ = ψ for every
/// plaquette (every support string has even overlap with every plaquette).
pub fn verify_ground_state(s: &Surface, psi: &StateSupport) -> bool {
    for (e, amp) in psi.iter() {
        for p in s.plaquettes() {
            if e.odd_overlap(p) {
                return false;
            }
        }
        for star in s.stars() {
            match psi.amplitude(&e.xor(star)) {
                Some(other) if (other - amp).norm() <= AMPLITUDE_TOL => {}
                _ => return false,
            }
        }
    }
    true
}

/// Eigenvalue data of a reduced density matrix.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    /// Sorted descending; zeros from padding included.
    pub eigenvalues: Vec<f64>,
    pub entropy_bits: f64,
    /// Σ λ², equals 2^{-S} for flat spectra.
    pub purity: f64,
    /// All nonzero eigenvalues equal within 1e-9.
    pub flat: bool,
}

impl SpectrumReport {
    fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> SpectrumReport {
        for ev in &mut eigenvalues {
            if *ev < 0.0 {
                debug_assert!(*ev > -SPECTRUM_TOL, "negative eigenvalue {ev}");
                *ev = 0.0;
            }
        }
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let entropy_bits = eigenvalues
            .iter()
            .filter(|&&l| l > 0.0)
            .map(|&l| -l * l.log2())
            .sum();
        let purity = eigenvalues.iter().map(|l| l * l).sum();
        let nonzero: Vec<f64> = eigenvalues.iter().copied().filter(|&l| l > SPECTRUM_TOL).collect();
        let flat = match (nonzero.first(), nonzero.last()) {
            (Some(max), Some(min)) => max - min <= SPECTRUM_TOL,
            _ => true,
        };
        SpectrumReport {
            eigenvalues,
            entropy_bits,
            purity,
            flat,
        }
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Count of eigenvalues above the flatness tolerance.
    pub fn nonzero_count(&self) -> usize {
        self.eigenvalues.iter().filter(|&&l| l > SPECTRUM_TOL).count()
    }
}

/// Spectrum of ρ_A = Tr_B |ψ⟩⟨ψ| for the bipartition given by `r`.
///
/// Support strings are grouped into classes by their restriction to B;
/// class b defines the vector φ_b of amplitudes over A-restrictions, and
/// ρ_A = Σ_b |φ_b⟩⟨φ_b|. When every φ_b is a uniform multiple of the
/// indicator of its A-restriction set and those sets are pairwise
/// identical or disjoint, the spectrum is read off combinatorially (one
/// eigenvalue Σ_b ‖φ_b‖² per distinct set). Otherwise the Hermitian Gram
/// matrix G[b,b'] = ⟨φ_b', φ_b⟩ is diagonalized.
pub fn reduced_spectrum(
    psi: &StateSupport,
    r: &Region,
    max_gram_dim: usize,
) -> Result<SpectrumReport> {
    if psi.support_size() == 0 {
        return Err(Error::Argument("state has empty support".into()));
    }
    let a_mask = r.mask();
    let b_mask = a_mask.complement();

    let mut classes: HashMap<BitVector, Vec<(BitVector, Complex64)>> = HashMap::new();
    for (e, &amp) in psi.iter() {
        classes
            .entry(e.restrict(&b_mask))
            .or_default()
            .push((e.restrict(a_mask), amp));
    }

    if let Some(eigenvalues) = combinatorial_spectrum(&classes) {
        return Ok(SpectrumReport::from_eigenvalues(eigenvalues));
    }

    if classes.len() > max_gram_dim {
        return Err(Error::ResourceLimit(format!(
            "{} B-restriction classes exceed the Gram dimension limit {max_gram_dim}",
            classes.len()
        )));
    }
    Ok(SpectrumReport::from_eigenvalues(gram_spectrum(&classes)))
}

/// Fast path: each class must carry one uniform complex amplitude, and the
/// classes' A-restriction sets must be pairwise identical or disjoint.
/// Returns None when either condition fails.
fn combinatorial_spectrum(
    classes: &HashMap<BitVector, Vec<(BitVector, Complex64)>>,
) -> Option<Vec<f64>> {
    // group key: the sorted A-restriction set.
    let mut groups: HashMap<Vec<BitVector>, f64> = HashMap::new();
    let mut owner: HashMap<&BitVector, &Vec<BitVector>> = HashMap::new();
    // First pass: uniformity and canonical keys.
    let mut keyed: Vec<(Vec<BitVector>, f64)> = Vec::with_capacity(classes.len());
    for members in classes.values() {
        let amp = members[0].1;
        if members
            .iter()
            .any(|(_, a)| (a - amp).norm() > AMPLITUDE_TOL)
        {
            return None;
        }
        let mut set: Vec<BitVector> = members.iter().map(|(a, _)| a.clone()).collect();
        set.sort_by(|x, y| x.words().cmp(y.words()));
        keyed.push((set, members.len() as f64 * amp.norm_sqr()));
    }
    for (set, norm_sq) in &keyed {
        *groups.entry(set.clone()).or_insert(0.0) += norm_sq;
    }
    // Disjointness: every A-restriction may belong to exactly one set.
    for set in groups.keys() {
        for a in set {
            match owner.get(a) {
                None => {
                    owner.insert(a, set);
                }
                Some(&prev) if prev == set => {}
                Some(_) => return None,
            }
        }
    }
    Some(groups.into_values().collect())
}

fn gram_spectrum(classes: &HashMap<BitVector, Vec<(BitVector, Complex64)>>) -> Vec<f64> {
    let n = classes.len();
    // Invert the grouping: A-restriction -> (class index, amplitude).
    let mut by_a: HashMap<&BitVector, Vec<(usize, Complex64)>> = HashMap::new();
    for (ci, members) in classes.values().enumerate() {
        for (a, amp) in members {
            by_a.entry(a).or_default().push((ci, *amp));
        }
    }
    let mut gram = vec![vec![Complex64::ZERO; n]; n];
    for entries in by_a.values() {
        for &(i, ai) in entries {
            for &(j, aj) in entries {
                gram[i][j] += ai * aj.conj();
            }
        }
    }
    jacobi::hermitian_eigenvalues(gram, jacobi::OFF_DIAGONAL_TOL)
}

/// Wootters concurrence of the two-spin reduced state of links
/// (link1, link2).
///
/// The reduced 4×4 matrix must come out diagonal (no closed string-net
/// fits on two links, so d_A = 1); a nondiagonal result signals a bug or a
/// non-ground-state input. For ρ = diag(a,b,c,d) the spin-flipped product
/// has eigenvalues {ad, ad, bc, bc}, so C = max(0, -2√min(ad, bc)).
pub fn two_spin_concurrence(psi: &StateSupport, link1: usize, link2: usize) -> Result<f64> {
    if link1 == link2 {
        return Err(Error::Argument("the two links must be distinct".into()));
    }
    if link1 >= psi.n_links || link2 >= psi.n_links {
        return Err(Error::Argument(format!(
            "link pair ({link1},{link2}) out of range for {} links",
            psi.n_links
        )));
    }
    let a_mask = BitVector::from_bits(psi.n_links, &[link1, link2]);
    let b_mask = a_mask.complement();
    let mut classes: HashMap<BitVector, [Complex64; 4]> = HashMap::new();
    for (e, &amp) in psi.iter() {
        let idx = (e.get(link1) as usize) << 1 | e.get(link2) as usize;
        classes.entry(e.restrict(&b_mask)).or_insert([Complex64::ZERO; 4])[idx] += amp;
    }
    let mut rho = [[Complex64::ZERO; 4]; 4];
    for phi in classes.values() {
        for i in 0..4 {
            for j in 0..4 {
                rho[i][j] += phi[i] * phi[j].conj();
            }
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            if i != j && rho[i][j].norm() > AMPLITUDE_TOL {
                return Err(Error::Structural(format!(
                    "two-spin reduced matrix has off-diagonal element of magnitude {:e} at ({i},{j})",
                    rho[i][j].norm()
                )));
            }
        }
    }
    let diag: Vec<f64> = (0..4).map(|i| rho[i][i].re).collect();
    concurrence_of_diagonal(diag[0], diag[1], diag[2], diag[3])
}

/// Concurrence of a diagonal two-qubit state diag(a,b,c,d).
pub fn concurrence_of_diagonal(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    // Eigenvalues of ρ(σy⊗σy)ρ*(σy⊗σy): {ad, ad, bc, bc}.
    let mut lambdas = [a * d, a * d, b * c, b * c];
    lambdas.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let roots: Vec<f64> = lambdas.iter().map(|l| l.max(0.0).sqrt()).collect();
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).max(0.0))
}

/// True iff the four sector states |ξ_ij⟩ have pairwise identical sorted
/// reduced spectra on region `r` (within 1e-9).
pub fn isospectral_check(
    s: &Surface,
    r: &Region,
    limit_bits: u32,
    max_gram_dim: usize,
) -> Result<bool> {
    let mut spectra = Vec::with_capacity(4);
    for sector in 0..4 {
        let mut amps = [Complex64::ZERO; 4];
        amps[sector] = Complex64::new(1.0, 0.0);
        let psi = build_ground_state(s, &amps, limit_bits)?;
        spectra.push(reduced_spectrum(&psi, r, max_gram_dim)?);
    }
    let first = &spectra[0];
    Ok(spectra[1..]
        .iter()
        .all(|sp| spectra_agree(&first.eigenvalues, &sp.eigenvalues, SPECTRUM_TOL)))
}

/// Compares two descending eigenvalue lists, padding the shorter with
/// zeros.
pub fn spectra_agree(a: &[f64], b: &[f64], tol: f64) -> bool {
    let n = a.len().max(b.len());
    (0..n).all(|i| {
        let x = a.get(i).copied().unwrap_or(0.0);
        let y = b.get(i).copied().unwrap_or(0.0);
        (x - y).abs() <= tol
    })
}

/// Checks the convex-disk law S = L_∂A − 1 for an arbitrary normalized
/// superposition of the four sectors.
pub fn generic_disk_check(
    s: &Surface,
    r: &Region,
    amps: &SectorAmplitudes,
    limit_bits: u32,
    max_gram_dim: usize,
) -> Result<bool> {
    let RegionKind::Rect { .. } = r.kind() else {
        return Err(Error::Argument(
            "the disk law applies to convex rectangle regions only".into(),
        ));
    };
    let boundary_links = r
        .stats(s)
        .boundary_links
        .expect("rect regions always have a boundary length");
    let psi = build_ground_state(s, amps, limit_bits)?;
    let sp = reduced_spectrum(&psi, r, max_gram_dim)?;
    Ok((sp.entropy_bits - (boundary_links as f64 - 1.0)).abs() <= 1e-6)
}
