use reye_core::projective::RandomConfig;
use reye_core::report::read_web;
use reye_core::suite::{full_suite, SuiteConfig};
use reye_core::web::generate_web;
use reye_core::Exec;
use std::path::PathBuf;

fn seed1() -> reye_core::web::Web {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/seed1_web.json");
    read_web(&p).expect("fixture parses")
}

#[test]
fn generator_reproduces_stored_web() {
    let (w, report) = generate_web(1, RandomConfig::default(), Exec::Sequential).unwrap();
    assert!(report.pass);
    assert_eq!(w.basis(), seed1().basis());
}

#[test]
fn stored_web_passes_the_suite() {
    let cfg = SuiteConfig { seed: 1, ..SuiteConfig::default() };
    let from_file = full_suite(Some(seed1()), &cfg).unwrap();
    assert!(from_file.pass, "{}", from_file.to_json().unwrap());
    let generated = full_suite(None, &cfg).unwrap();
    assert_eq!(from_file.to_json().unwrap(), generated.to_json().unwrap());
}
