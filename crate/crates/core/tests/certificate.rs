use s6q_core::certificate::{run_certificate, Certificate, Status, Verdict};
use s6q_core::exactfield::ratio;

const CORE_CHECKS: [&str; 10] = [
    "hypothesis_gate",
    "node_orbit",
    "nodes_ordinary_double_points",
    "singular_count",
    "cubic_space_dimension",
    "defect",
    "decomposition",
    "irreducible_faithful",
    "hurwitz_exclusion",
    "product_exclusion",
];

#[test]
fn generic_parameter_is_certified() {
    let cert = run_certificate(&ratio(1, 1));
    assert_eq!(cert.verdict, Verdict::NotRational);
    for id in CORE_CHECKS {
        let c = cert.check(id).unwrap_or_else(|| panic!("missing {id}"));
        assert_eq!(c.status, Status::Pass, "{id}: {}", c.witness);
        assert!(!c.witness.is_null());
    }
    assert_eq!(
        cert.check("imported_theorems").unwrap().status,
        Status::Skipped
    );
    let product = cert.check("product_exclusion").unwrap();
    assert_eq!(product.witness["dim_jx"], 5);
    assert_eq!(cert.check("decomposition").unwrap().witness["dim_h2"], 5);
}

#[test]
fn json_round_trip_and_field_order() {
    let cert = run_certificate(&ratio(7, 3));
    let text = cert.to_json();
    assert_eq!(Certificate::from_json(&text).unwrap(), cert);
    let t = text.find("\"t\"").unwrap();
    let verdict = text.find("\"verdict\"").unwrap();
    let checks = text.find("\"checks\"").unwrap();
    assert!(t < verdict && verdict < checks);
    assert!(text.contains("\"t\": \"7/3\""));
    assert!(text.contains("\"NOT RATIONAL (certified)\""));
    let first = &text[checks..];
    let order: Vec<usize> = [
        "\"id\"",
        "\"statement\"",
        "\"paper_ref\"",
        "\"status\"",
        "\"witness\"",
    ]
    .iter()
    .map(|k| first.find(k).unwrap())
    .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn reports_are_byte_identical() {
    for t in [ratio(-1, 1), ratio(6, 1)] {
        assert_eq!(run_certificate(&t).to_json(), run_certificate(&t).to_json());
        assert_eq!(run_certificate(&t).to_text(), run_certificate(&t).to_text());
    }
}

#[test]
fn special_parameters_run_the_remark_checks() {
    for (t, orbit) in [(ratio(2, 1), 15), (ratio(6, 1), 10), (ratio(10, 7), 6)] {
        let cert = run_certificate(&t);
        assert_eq!(cert.verdict, Verdict::OutsideHypotheses);
        assert_eq!(
            cert.check("hypothesis_gate").unwrap().status,
            Status::Skipped
        );
        let orbit_check = cert.check("special_orbit_singular").unwrap();
        assert_eq!(orbit_check.status, Status::Pass);
        assert_eq!(orbit_check.witness["orbit_size"], orbit);
        assert_eq!(
            cert.check("cubics_through_all_singular_points")
                .unwrap()
                .witness["dim_cubics"],
            5
        );
        assert!(cert
            .check("conclusion")
            .unwrap()
            .statement
            .contains("JX = 0"));
    }
    assert!(run_certificate(&ratio(2, 1))
        .check("conclusion")
        .unwrap()
        .statement
        .contains("known classically"));
}

#[test]
fn gate_flags_the_variant_excluded_value() {
    let cert = run_certificate(&ratio(10, 17));
    let gate = cert.check("hypothesis_gate").unwrap();
    assert_eq!(gate.status, Status::Pass);
    assert_eq!(gate.witness["derived_parameter"], "10/7");
    assert_eq!(gate.witness["variant_10_17_passes_through_seed"], false);
    assert_eq!(cert.verdict, Verdict::NotRational);
}
