//! The named verification suites and their aggregation into a single
//! report with stable ordering.

use exact_linalg::Scalar;
use green_ring::SuiteReport;
use hopf_core::{
    build_algebra, canonical_idempotents, central_idempotents, cocycle_twist, ext_quiver,
    group_block_pair, hopf_isomorphism_check, pairing_to_cocycle, search_isomorphism,
    sigma1, sigma_alpha, sweedler_pairing, verify_cocycle, verify_idempotent_system,
    verify_skew_pairing, HopfAlgebraData,
};
use serde::{Deserialize, Serialize};

pub const SUITE_NAMES: [&str; 12] = [
    "hopf-axioms",
    "cocycles",
    "twist-iso",
    "idempotents",
    "quivers",
    "theorem-dec",
    "theorem-dec1",
    "green-relations",
    "radicals",
    "proj-class",
    "commutativity",
    "alias-table",
];

const ALGEBRAS: [&str; 3] = ["mabar", "DH4", "HH"];

#[derive(Clone, Debug)]
pub struct Config {
    pub max_rank: usize,
    pub etas: Vec<Scalar>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub max_rank: usize,
    pub etas: Vec<String>,
    pub suites: Vec<SuiteReport>,
    pub passed: usize,
    pub failed: usize,
    pub duration_ms: u128,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Runs the named suites and aggregates them; case lists are sorted by
/// instance key so the report is independent of execution order.
pub fn run_battery(names: &[String], cfg: &Config) -> Result<VerificationReport, String> {
    let start = std::time::Instant::now();
    let mut suites: Vec<SuiteReport> = Vec::new();
    for name in names {
        suites.extend(run_suite(name, cfg)?);
    }
    for s in &mut suites {
        s.cases.sort_by(|a, b| a.instance.cmp(&b.instance));
    }
    let passed = suites.iter().map(|s| s.passed).sum();
    let failed = suites.iter().map(|s| s.failed).sum();
    Ok(VerificationReport {
        seed: cfg.seed,
        max_rank: cfg.max_rank,
        etas: cfg.etas.iter().map(|e| e.to_string()).collect(),
        suites,
        passed,
        failed,
        duration_ms: start.elapsed().as_millis(),
    })
}

pub fn run_suite(name: &str, cfg: &Config) -> Result<Vec<SuiteReport>, String> {
    match name {
        "hopf-axioms" => Ok(vec![hopf_axioms()?]),
        "cocycles" => Ok(vec![cocycles()?]),
        "twist-iso" => Ok(vec![twist_iso()?]),
        "idempotents" => Ok(vec![idempotents()?]),
        "quivers" => Ok(vec![quivers()?]),
        "theorem-dec" => Ok(vec![
            green_ring::verify_green_relations("mabar", cfg.max_rank, &cfg.etas, cfg.seed),
            green_ring::verify_green_relations("DH4", cfg.max_rank, &cfg.etas, cfg.seed),
        ]),
        "theorem-dec1" => Ok(vec![green_ring::verify_green_relations(
            "HH",
            cfg.max_rank,
            &cfg.etas,
            cfg.seed,
        )]),
        "green-relations" => Ok(ALGEBRAS
            .iter()
            .map(|a| green_ring::verify_presentation_relations(a, cfg.max_rank, &cfg.etas, cfg.seed))
            .collect()),
        "radicals" => {
            let mut out: Vec<SuiteReport> = ALGEBRAS
                .iter()
                .map(|a| green_ring::verify_radical_generators(a, cfg.max_rank, &cfg.etas))
                .collect();
            out.push(green_ring::verify_alternating_idempotents(cfg.max_rank));
            Ok(out)
        }
        "proj-class" => {
            let mut out = vec![proj_class()];
            out.extend(stable_suites(cfg));
            Ok(out)
        }
        "commutativity" => {
            let probe_rank = cfg.max_rank.min(3);
            let mut out: Vec<SuiteReport> = ALGEBRAS
                .iter()
                .map(|a| green_ring::commutativity_probe(a, probe_rank, &cfg.etas))
                .collect();
            for a in ALGEBRAS {
                out.push(green_ring::verify_commutation_isos(
                    a,
                    cfg.max_rank,
                    &cfg.etas,
                    cfg.seed,
                ));
            }
            Ok(out)
        }
        "alias-table" => Ok(ALGEBRAS
            .iter()
            .map(|a| green_ring::verify_alias_table(a, cfg.max_rank, &cfg.etas, cfg.seed))
            .collect()),
        other => Err(format!(
            "unknown suite {other}; expected one of {}",
            SUITE_NAMES.join(", ")
        )),
    }
}

fn hopf_axioms() -> Result<SuiteReport, String> {
    let mut report = SuiteReport::new("hopf-axioms");
    for name in ["H4", "mabar", "DH4", "HH"] {
        let h = build_algebra(name)?;
        let ax = h.check_hopf_axioms();
        for (axiom, ok) in [
            ("associativity", ax.associativity),
            ("unit", ax.unit),
            ("coassociativity", ax.coassociativity),
            ("counit", ax.counit),
            ("bialgebra compatibility", ax.bialgebra),
            ("antipode", ax.antipode),
        ] {
            report.record_bool(format!("{name}: {axiom}"), ok);
        }
    }
    Ok(report)
}

fn cocycles() -> Result<SuiteReport, String> {
    let mut report = SuiteReport::new("cocycles");
    let mabar = build_algebra("mabar")?;
    let h4 = build_algebra("H4")?;
    let hh = build_algebra("HH")?;
    match sigma1(&mabar) {
        Some(s) => {
            report.record_bool("σ1 on the 2-rank Taft algebra is convolution-invertible".into(), true);
            report.record_bool(
                "σ1 satisfies the 2-cocycle identity".into(),
                verify_cocycle(&mabar, &s),
            );
        }
        None => report.record_bool("σ1 on the 2-rank Taft algebra is convolution-invertible".into(), false),
    }
    for alpha in [0i64, 1, 5] {
        match sigma_alpha(&h4, &Scalar::from_int(alpha)) {
            Some(s) => report.record_bool(
                format!("σ_α (α = {alpha}) satisfies the 2-cocycle identity on H4"),
                verify_cocycle(&h4, &s),
            ),
            None => report.record_bool(
                format!("σ_α (α = {alpha}) is convolution-invertible"),
                false,
            ),
        }
    }
    let p = sweedler_pairing(&h4);
    report.record_bool(
        "the Sweedler form on H4 ⊗ H4 is a skew pairing".into(),
        verify_skew_pairing(&h4, &h4, &p),
    );
    match pairing_to_cocycle(&h4, &h4, &hh, &p) {
        Some(s2) => report.record_bool(
            "σ2 (from the skew pairing) satisfies the 2-cocycle identity on H4 ⊗ H4".into(),
            verify_cocycle(&hh, &s2),
        ),
        None => report.record_bool("σ2 construction succeeds".into(), false),
    }
    Ok(report)
}

fn twist_iso() -> Result<SuiteReport, String> {
    let mut report = SuiteReport::new("twist-iso");
    let mabar = build_algebra("mabar")?;
    let h4 = build_algebra("H4")?;
    let hh = build_algebra("HH")?;
    let dh4 = build_algebra("DH4")?;

    // σ1-twist of the 2-rank Taft algebra ≅ H4 ⊗ H4
    let s1 = sigma1(&mabar).ok_or("σ1 not invertible")?;
    let tw1 = cocycle_twist(&mabar, &s1);
    report.record_bool(
        "σ1-twist of the 2-rank Taft algebra satisfies the Hopf axioms".into(),
        tw1.check_hopf_axioms().all_pass(),
    );
    match search_isomorphism(&tw1, &hh) {
        Some(images) => report.record_bool(
            "σ1-twist of the 2-rank Taft algebra ≅ H4 ⊗ H4 (generator assignment found)".into(),
            hopf_isomorphism_check(&tw1, &hh, &images),
        ),
        None => report.record_bool(
            "σ1-twist of the 2-rank Taft algebra ≅ H4 ⊗ H4 (generator assignment found)".into(),
            false,
        ),
    }

    // σ2-twist of H4 ⊗ H4 ≅ D(H4) under the identity letter map
    let p = sweedler_pairing(&h4);
    let s2 = pairing_to_cocycle(&h4, &h4, &hh, &p).ok_or("σ2 construction failed")?;
    let tw2 = cocycle_twist(&hh, &s2);
    let images: Vec<(String, hopf_core::Element)> = tw2
        .generators
        .iter()
        .map(|(n, _)| {
            (
                n.clone(),
                dh4.generator(n).expect("shared generator names").clone(),
            )
        })
        .collect();
    report.record_bool(
        "σ2-twist of H4 ⊗ H4 ≅ D(H4) via xⁱgʲyᵏhˡ ↦ xⁱgʲyᵏhˡ".into(),
        hopf_isomorphism_check(&tw2, &dh4, &images),
    );

    // σ_α-twists of H4 have the opposite multiplication, bit for bit
    for alpha in [0i64, 1, 5] {
        let s = sigma_alpha(&h4, &Scalar::from_int(alpha)).ok_or("σ_α not invertible")?;
        let tw = cocycle_twist(&h4, &s);
        report.record_bool(
            format!("σ_α-twist of H4 (α = {alpha}) equals H4-opposite bit for bit"),
            mult_is_opposite(&tw, &h4),
        );
    }
    Ok(report)
}

fn mult_is_opposite(tw: &HopfAlgebraData, h: &HopfAlgebraData) -> bool {
    if tw.dim != h.dim {
        return false;
    }
    (0..h.dim).all(|i| (0..h.dim).all(|j| tw.mult[i][j] == h.mult[j][i]))
}

fn idempotents() -> Result<SuiteReport, String> {
    let mut report = SuiteReport::new("idempotents");
    for (name, canonical_count, central_count) in
        [("mabar", 4usize, 2usize), ("DH4", 6, 3), ("HH", 4, 1)]
    {
        let h = build_algebra(name)?;
        let canon = canonical_idempotents(&h);
        report.record(
            format!("{name}: canonical primitive idempotent count"),
            canonical_count.to_string(),
            canon.elements.len().to_string(),
        );
        let rep = verify_idempotent_system(&h, &canon, true);
        report.record_bool(
            format!("{name}: canonical system orthogonal, complete, idempotent, primitive"),
            rep.all_pass(),
        );
        report.record(
            format!("{name}: primitive central idempotent count"),
            central_count.to_string(),
            central_idempotents(&h).elements.len().to_string(),
        );
    }
    // the block pair f₁, f₂ of the 2-rank Taft algebra: orthogonal and
    // complete, but splittable as ordinary idempotents
    let mabar = build_algebra("mabar")?;
    let gb = group_block_pair(&mabar);
    let rep = verify_idempotent_system(&mabar, &gb, true);
    report.record_bool(
        "mabar: block pair {f₁, f₂} idempotent, orthogonal, complete".into(),
        rep.idempotent && rep.orthogonal && rep.complete,
    );
    report.record(
        "mabar: block pair {f₁, f₂} primitivity (splits as ordinary idempotents)".into(),
        "[false, false]".into(),
        format!("{:?}", rep.primitive.unwrap_or_default()),
    );
    Ok(report)
}

fn quivers() -> Result<SuiteReport, String> {
    let mut report = SuiteReport::new("quivers");
    // (algebra, arrow-multiplicity matrix, iso-class sizes)
    let expectations: [(&str, Vec<Vec<usize>>, Vec<usize>); 4] = [
        ("H4", vec![vec![0, 1], vec![1, 0]], vec![1, 1]),
        (
            "mabar",
            vec![
                vec![0, 0, 0, 2],
                vec![0, 0, 2, 0],
                vec![0, 2, 0, 0],
                vec![2, 0, 0, 0],
            ],
            vec![1, 1, 1, 1],
        ),
        (
            "DH4",
            vec![
                vec![0, 0, 0, 2],
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
                vec![2, 0, 0, 0],
            ],
            vec![1, 2, 2, 1],
        ),
        (
            "HH",
            vec![
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0],
            ],
            vec![1, 1, 1, 1],
        ),
    ];
    for (name, arrows, class_sizes) in expectations {
        let h = build_algebra(name)?;
        let q = ext_quiver(&h);
        report.record(
            format!("{name}: Ext¹ arrow-multiplicity matrix"),
            format!("{arrows:?}"),
            format!("{:?}", q.arrows),
        );
        let sizes: Vec<usize> = q.vertex_classes.iter().map(|c| c.len()).collect();
        report.record(
            format!("{name}: simple iso-class sizes"),
            format!("{class_sizes:?}"),
            format!("{sizes:?}"),
        );
    }
    Ok(report)
}

fn proj_class() -> SuiteReport {
    let mut report = SuiteReport::new("proj-class");
    for (name, basis_len, radical_dim, quotient_dim) in
        [("mabar", 8usize, 2usize, 6usize), ("DH4", 6, 2, 4), ("HH", 8, 3, 5)]
    {
        let pc = green_ring::projective_class_algebra(name);
        report.record(
            format!("{name}: projective class monomial basis size"),
            basis_len.to_string(),
            pc.basis.len().to_string(),
        );
        report.record(
            format!("{name}: radical dimension of the projective class algebra"),
            radical_dim.to_string(),
            pc.radical_dim.to_string(),
        );
        report.record(
            format!("{name}: semisimple quotient dimension"),
            quotient_dim.to_string(),
            pc.quotient_dim.to_string(),
        );
        for case in pc.idempotent_checks.cases {
            report.record(format!("{name}: {}", case.instance), case.expected, case.actual);
        }
    }
    report
}

/// Stable Green ring checks: product compatibility of the projective-free
/// quotient, and the label-for-label match between the double's stable
/// ring and the diagonal Taft stable ring.
pub fn stable_suites(cfg: &Config) -> Vec<SuiteReport> {
    ALGEBRAS
        .iter()
        .map(|a| green_ring::verify_stable_quotient(a, cfg.max_rank, &cfg.etas))
        .collect()
}
