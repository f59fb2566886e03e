//! Acceptance suite: one test per claim the artifact must satisfy, each
//! printing a `criterion N: PASS/FAIL` line. Tolerances are pinned in the
//! constants below.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_entropy::engine;
use toric_entropy::gf2::BitVector;
use toric_entropy::oracle::{
    self, build_ground_state, reduced_spectrum, sector_zero, two_spin_concurrence,
};
use toric_entropy::region::{ChainOrientation, LinkOrientation, Region};
use toric_entropy::surface::Surface;

const ENUM_LIMIT: u32 = 24;
const GRAM_LIMIT: usize = 4096;
const ORACLE_TOL: f64 = 1e-9;
const CONCURRENCE_TOL: f64 = 1e-12;
const DISK_TOL: f64 = 1e-6;

fn torus(k: usize) -> Surface {
    Surface::torus(k).unwrap()
}

fn sector_state(s: &Surface) -> oracle::StateSupport {
    build_ground_state(s, &sector_zero(), ENUM_LIMIT).unwrap()
}

fn random_nontrivial_mask(rng: &mut ChaCha8Rng, n_links: usize) -> BitVector {
    loop {
        let ones: Vec<usize> = (0..n_links).filter(|_| rng.gen_bool(0.5)).collect();
        if !ones.is_empty() && ones.len() < n_links {
            return BitVector::from_bits(n_links, &ones);
        }
    }
}

#[test]
fn criterion_01_single_spin_entropy_is_one() {
    for k in 2..=6usize {
        let s = torus(k);
        for link in 0..s.n_links() {
            let r = Region::from_links(&s, &[link]).unwrap();
            assert_eq!(
                engine::entanglement_entropy(&s, &r).unwrap(),
                1,
                "k={k} link={link}"
            );
        }
    }
    for k in 2..=3usize {
        let s = torus(k);
        let psi = sector_state(&s);
        for link in 0..s.n_links() {
            let r = Region::from_links(&s, &[link]).unwrap();
            let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
            assert!(
                (sp.entropy_bits - 1.0).abs() <= ORACLE_TOL,
                "k={k} link={link}: oracle {}",
                sp.entropy_bits
            );
        }
    }
    println!("criterion 1 (single spin, S = 1): PASS");
}

#[test]
fn criterion_02_chain_entropy_is_k_minus_one() {
    for k in 2..=6usize {
        let s = torus(k);
        for idx in 0..k {
            for orientation in [ChainOrientation::Row, ChainOrientation::Column] {
                let r = Region::chain(&s, orientation, idx).unwrap();
                assert_eq!(
                    engine::entanglement_entropy(&s, &r).unwrap(),
                    k - 1,
                    "k={k} {orientation:?} {idx}"
                );
            }
        }
    }
    for k in 2..=4usize {
        let s = torus(k);
        let psi = sector_state(&s);
        for orientation in [ChainOrientation::Row, ChainOrientation::Column] {
            let r = Region::chain(&s, orientation, 0).unwrap();
            let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
            assert!(
                (sp.entropy_bits - (k - 1) as f64).abs() <= ORACLE_TOL,
                "k={k} {orientation:?}: oracle {}",
                sp.entropy_bits
            );
        }
    }
    println!("criterion 2 (chain, S = k-1): PASS");
}

/// As specified this criterion asserts S = 2(a+b) − 1 for every rectangle
/// with 1 ≤ a,b ≤ k−1. That is false for near-wrapping rectangles (one
/// extent k−1, the other ≥ 2): products of full star rows/columns then fit
/// inside A, so d_A exceeds 2^Σ_A and S comes out smaller. The engine and
/// the brute-force oracle agree with each other on every such pair and
/// both contradict the formula, so this test fails honestly on exactly
/// those sizes and lists them.
#[test]
fn criterion_03_convex_loop_law() {
    let mut failures: Vec<String> = Vec::new();
    for k in 3..=8usize {
        let s = torus(k);
        for a in 1..k {
            for b in 1..k {
                let r = Region::rect(&s, 0, 0, a, b).unwrap();
                let got = engine::entanglement_entropy(&s, &r).unwrap();
                let law = 2 * (a + b) - 1;
                if got != law {
                    failures.push(format!("k={k} a={a} b={b}: engine {got}, law {law}"));
                }
            }
        }
    }
    // Oracle cross-check at k=3, all rectangles (all anchors and sizes).
    let s = torus(3);
    let psi = sector_state(&s);
    for i0 in 0..3 {
        for j0 in 0..3 {
            for a in 1..3 {
                for b in 1..3 {
                    let r = Region::rect(&s, i0, j0, a, b).unwrap();
                    let engine_bits = engine::entanglement_entropy(&s, &r).unwrap();
                    let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
                    assert!(
                        (sp.entropy_bits - engine_bits as f64).abs() <= ORACLE_TOL,
                        "k=3 ({i0},{j0}) {a}x{b}: oracle {} vs engine {engine_bits}",
                        sp.entropy_bits
                    );
                    let law = (2 * (a + b) - 1) as f64;
                    if (sp.entropy_bits - law).abs() > ORACLE_TOL {
                        failures.push(format!(
                            "k=3 ({i0},{j0}) {a}x{b}: oracle {}, law {law}",
                            sp.entropy_bits
                        ));
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        println!("criterion 3 (convex-loop law S = 2(a+b)-1): PASS");
    } else {
        println!("criterion 3 (convex-loop law S = 2(a+b)-1): FAIL");
        println!(
            "  the stated law does not hold for near-wrapping rectangles; \
             engine and oracle agree with each other on every size:"
        );
        for f in &failures {
            println!("  {f}");
        }
        panic!(
            "{} rectangle cases violate S = 2(a+b)-1 as stated; engine and oracle \
             agree on the smaller exact value for each (extra closed string-nets fit \
             inside A when one extent is k-1 and the other is >= 2)",
            failures.len()
        );
    }
}

#[test]
fn criterion_04_two_spin_concurrence_zero() {
    for k in 2..=3usize {
        let s = torus(k);
        let psi = sector_state(&s);
        let n = s.n_links();
        let mut pairs = 0;
        for l1 in 0..n {
            for l2 in l1 + 1..n {
                // two_spin_concurrence errors out if the reduced matrix is
                // not diagonal within 1e-12.
                let c = two_spin_concurrence(&psi, l1, l2).unwrap();
                assert!(c.abs() <= CONCURRENCE_TOL, "k={k} ({l1},{l2}): C = {c}");
                pairs += 1;
            }
        }
        assert_eq!(pairs, n * (n - 1) / 2);
        assert_eq!(pairs, if k == 2 { 28 } else { 153 });
    }
    println!("criterion 4 (concurrence C = 0 for all pairs): PASS");
}

#[test]
fn criterion_05_sector_states_isospectral() {
    for k in 2..=3usize {
        let s = torus(k);
        let mut rng = ChaCha8Rng::seed_from_u64(50 + k as u64);
        for trial in 0..50 {
            let mask = random_nontrivial_mask(&mut rng, s.n_links());
            let r = Region::from_mask(&s, mask).unwrap();
            assert!(
                oracle::isospectral_check(&s, &r, ENUM_LIMIT, GRAM_LIMIT).unwrap(),
                "k={k} trial={trial}"
            );
        }
    }
    println!("criterion 5 (four sectors isospectral, 50 random regions): PASS");
}

#[test]
fn criterion_06_and_07_engine_equals_oracle_flat_spectrum_positive() {
    for k in 2..=4usize {
        let s = torus(k);
        let psi = sector_state(&s);
        let masks: Vec<BitVector> = if k == 2 {
            // Exhaustive: all 254 nontrivial masks on 8 links.
            (1u32..255)
                .map(|bits| {
                    let ones: Vec<usize> = (0..8).filter(|i| bits >> i & 1 == 1).collect();
                    BitVector::from_bits(8, &ones)
                })
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(600 + k as u64);
            (0..200)
                .map(|_| random_nontrivial_mask(&mut rng, s.n_links()))
                .collect()
        };
        for (i, mask) in masks.iter().enumerate() {
            let r = Region::from_mask(&s, mask.clone()).unwrap();
            let engine_bits = engine::entanglement_entropy(&s, &r).unwrap();
            assert!(engine_bits >= 1, "k={k} mask {i}: S = {engine_bits} < 1");
            let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
            assert!(
                (sp.entropy_bits - engine_bits as f64).abs() <= ORACLE_TOL,
                "k={k} mask {i}: oracle {} vs engine {engine_bits}",
                sp.entropy_bits
            );
            assert!(sp.flat, "k={k} mask {i}: spectrum not flat");
            assert_eq!(
                sp.nonzero_count(),
                1 << engine_bits,
                "k={k} mask {i}: wrong number of nonzero eigenvalues"
            );
            let expected = 2f64.powi(-(engine_bits as i32));
            for &l in sp.eigenvalues.iter().take(sp.nonzero_count()) {
                assert!((l - expected).abs() <= ORACLE_TOL, "k={k} mask {i}");
            }
            assert!(
                (sp.purity - expected).abs() <= ORACLE_TOL,
                "k={k} mask {i}: purity {}",
                sp.purity
            );
        }
    }
    println!("criterion 6 (engine = oracle, flat 2^S-fold spectrum, purity 2^-S): PASS");
    println!("criterion 7 (positivity S >= 1 on every nontrivial mask): PASS");
}

#[test]
fn criterion_08_vertical_spins_oracle_adjudicated() {
    for k in 2..=3usize {
        let s = torus(k);
        let r = Region::orientation(&s, LinkOrientation::Vertical).unwrap();
        let engine_bits = engine::entanglement_entropy(&s, &r).unwrap();
        let psi = sector_state(&s);
        let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
        assert!(
            (sp.entropy_bits - engine_bits as f64).abs() <= ORACLE_TOL,
            "k={k}: oracle {} vs engine {engine_bits}",
            sp.entropy_bits
        );
        let paper_value = k * k - 1;
        let rank_value = (k - 1) * (k - 1);
        let verdict = if engine_bits == paper_value {
            "matches the paper's k^2-1"
        } else if engine_bits == rank_value {
            "matches the rank-derived (k-1)^2, not the paper's k^2-1"
        } else {
            "matches neither closed form"
        };
        println!("criterion 8, k={k}: S = {engine_bits} ({verdict}); engine = oracle");
    }
    println!("criterion 8 (vertical spins, engine = oracle): PASS");
}

#[test]
fn criterion_09_degeneracy_both_routes() {
    for k in [2usize, 3, 5, 8] {
        let s = torus(k);
        let (genus, via_euler) = s.genus_and_degeneracy();
        let via_ranks = s.degeneracy_from_ranks();
        assert_eq!((genus, via_euler, via_ranks), (1, 4, 4), "k={k}");
    }
    let cube = Surface::parse_document(CUBE_DOCUMENT).unwrap();
    let (genus, via_euler) = cube.genus_and_degeneracy();
    assert_eq!((genus, via_euler, cube.degeneracy_from_ranks()), (0, 1, 1));
    println!("criterion 9 (degeneracy 4 on torus, 1 on cube, both routes): PASS");
}

/// As specified this criterion asserts S = L_∂A − 1 for every random
/// superposition Σ a_ij |ξ_ij⟩ on 1×1 and 2×1 rectangles at k ∈ {3,4}.
/// The 2×1 rectangle at k=3 has extent k−1, so a full ladder
/// representative lies inside A; the sectors it connects are then not
/// locally orthogonal and the exact spectrum is sixteen 2×2 blocks with
/// eigenvalues (1±z)/32, z = 2·Re(a₀₀ā₁₀ + a₀₁ā₁₁), giving
/// S = 4 + H₂((1+z)/2) < 5 for generic amplitudes. The oracle value
/// matches that closed form to 1e-15 on every trial, so this test fails
/// honestly on exactly those cases and lists them.
#[test]
fn criterion_10_generic_state_disk_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut failures: Vec<String> = Vec::new();
    for k in 3..=4usize {
        let s = torus(k);
        for (a, b) in [(1usize, 1usize), (2, 1)] {
            let r = Region::rect(&s, 0, 0, a, b).unwrap();
            let law = (2 * (a + b)) as f64 - 1.0;
            for trial in 0..20 {
                let mut amps = [Complex64::ZERO; 4];
                let mut norm = 0.0;
                for amp in &mut amps {
                    *amp = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    norm += amp.norm_sqr();
                }
                for amp in &mut amps {
                    *amp /= norm.sqrt();
                }
                let psi = build_ground_state(&s, &amps, ENUM_LIMIT).unwrap();
                let sp = reduced_spectrum(&psi, &r, GRAM_LIMIT).unwrap();
                if (sp.entropy_bits - law).abs() > DISK_TOL {
                    let z = 2.0 * (amps[0] * amps[2].conj() + amps[1] * amps[3].conj()).re;
                    let p = (1.0 + z) / 2.0;
                    let block_form = 4.0 - p * p.log2() - (1.0 - p) * (1.0 - p).log2();
                    failures.push(format!(
                        "k={k} {a}x{b} trial {trial}: oracle {:.12} vs law {law} \
                         (2x2-block closed form gives {block_form:.12})",
                        sp.entropy_bits
                    ));
                }
            }
        }
    }
    if failures.is_empty() {
        println!("criterion 10 (generic ground state, disk law S = L-1): PASS");
    } else {
        println!("criterion 10 (generic ground state, disk law S = L-1): FAIL");
        println!(
            "  the law fails when a rectangle extent reaches k-1 (a ladder fits inside A):"
        );
        for f in &failures {
            println!("  {f}");
        }
        panic!(
            "{} generic-state trials violate S = L-1 as stated; every oracle value \
             matches the exact 2x2-block spectrum for a region containing a ladder \
             representative (2x1 at k=3 has extent k-1)",
            failures.len()
        );
    }
}

#[test]
fn criterion_11_performance_large_tori() {
    let t0 = std::time::Instant::now();
    let s = torus(64);
    let r = Region::rect(&s, 0, 0, 16, 16).unwrap();
    let bits = engine::entanglement_entropy(&s, &r).unwrap();
    let k64 = t0.elapsed();
    assert_eq!(bits, 2 * (16 + 16) - 1);
    assert!(k64.as_secs_f64() < 2.0, "k=64 took {k64:?}");

    let t1 = std::time::Instant::now();
    let s = torus(128);
    let r = Region::rect(&s, 0, 0, 32, 32).unwrap();
    let bits = engine::entanglement_entropy(&s, &r).unwrap();
    let k128 = t1.elapsed();
    assert_eq!(bits, 2 * (32 + 32) - 1);
    assert!(k128.as_secs_f64() < 30.0, "k=128 took {k128:?}");
    println!("criterion 11 (performance, k=64 in {k64:?} < 2s, k=128 in {k128:?} < 30s): PASS");
}

#[test]
fn criterion_12_surface_validation_catches_mutations() {
    let base = torus(3).to_document();
    let mut mutations = 0usize;
    let mut detected = 0usize;
    let mut check = |doc: &toric_entropy::surface::SurfaceDocument| {
        mutations += 1;
        if Surface::from_document(doc).is_err() {
            detected += 1;
        }
    };

    // Link in 3 stars (and implicitly nonzero total XOR).
    for star in 0..9 {
        let mut doc = base.clone();
        let foreign = (0..18)
            .find(|l| !doc.stars[star].contains(l))
            .unwrap();
        doc.stars[star].push(foreign);
        check(&doc);
    }
    // Link in 1 star: remove an occurrence (total XOR becomes nonzero).
    for star in 0..9 {
        let mut doc = base.clone();
        doc.stars[star].pop();
        check(&doc);
    }
    // Odd star-plaquette overlap with multiplicities preserved: swap one
    // link between two disjoint stars.
    for (s1, s2) in [(0usize, 4usize), (0, 5), (1, 5), (2, 4), (3, 8)] {
        let mut doc = base.clone();
        assert!(doc.stars[s1].iter().all(|l| !doc.stars[s2].contains(l)));
        let a = doc.stars[s1][0];
        let b = doc.stars[s2][0];
        doc.stars[s1][0] = b;
        doc.stars[s2][0] = a;
        check(&doc);
    }
    // Same on the plaquette side.
    for (p1, p2) in [(0usize, 4usize), (1, 5)] {
        let mut doc = base.clone();
        assert!(doc.plaquettes[p1].iter().all(|l| !doc.plaquettes[p2].contains(l)));
        let a = doc.plaquettes[p1][0];
        let b = doc.plaquettes[p2][0];
        doc.plaquettes[p1][0] = b;
        doc.plaquettes[p2][0] = a;
        check(&doc);
    }
    // Dropping a whole star breaks multiplicity and the Euler parity.
    {
        let mut doc = base.clone();
        doc.stars.pop();
        check(&doc);
    }
    assert_eq!(
        detected, mutations,
        "only {detected}/{mutations} mutations detected"
    );
    println!("criterion 12 (surface validation, {detected}/{mutations} mutations detected): PASS");
}

/// Cube: 8 degree-3 vertices, 12 edges, 6 faces; genus 0, no degeneracy.
const CUBE_DOCUMENT: &str = r#"{
  "n_links": 12,
  "stars": [
    [0, 4, 8], [1, 5, 8], [2, 4, 9], [3, 5, 9],
    [0, 6, 10], [1, 7, 10], [2, 6, 11], [3, 7, 11]
  ],
  "plaquettes": [
    [0, 2, 4, 6], [1, 3, 5, 7], [0, 1, 8, 10],
    [2, 3, 9, 11], [4, 5, 8, 9], [6, 7, 10, 11]
  ]
}"#;
