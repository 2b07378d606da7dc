use num_bigint::BigInt;
use ripshadow::geometry::rat;
use ripshadow::quasi::{run_pipeline, GroupPresentation, UncertaintyInterval};

fn run(name: &str) -> ripshadow::quasi::PipelineReport {
    let p = GroupPresentation::preset(name).unwrap();
    let iv = UncertaintyInterval::new(rat(1, 1), rat(3, 2)).unwrap();
    let (report, _, _) = run_pipeline(&p, &iv, 2024).unwrap();
    eprintln!("{name}: {:?}", report);
    report
}

#[test]
fn torus_pipeline() {
    let r = run("torus");
    assert!(r.betti_agree());
    assert!(r.audit.passed);
    assert!(r.quasi_h1.torsion.is_empty());
    assert!(r.quasi_h1.rank >= 2);
}

#[test]
fn projective_plane_pipeline() {
    let r = run("rp2");
    assert!(r.betti_agree());
    assert_eq!(r.quasi_h1.torsion, vec![BigInt::from(2)]);
}

#[test]
fn klein_pipeline() {
    let r = run("klein");
    assert!(r.betti_agree());
    assert_eq!(r.quasi_h1.torsion, vec![BigInt::from(2)]);
    assert!(r.quasi_h1.rank >= 1);
}

#[test]
fn collapsed_route_matches_full_complex_on_rp2() {
    use ripshadow::homology::integer_h1;
    use ripshadow::quasi::collapsed_h1;
    let p = GroupPresentation::preset("rp2").unwrap();
    let iv = UncertaintyInterval::new(rat(1, 1), rat(3, 2)).unwrap();
    let (_, e, _) = run_pipeline(&p, &iv, 5).unwrap();
    let full = e.complex.with_dim_cap(2).unwrap();
    eprintln!("full census {:?}", full.census());
    assert_eq!(integer_h1(&full).unwrap(), collapsed_h1(&e.complex, &e.coloring));
}
