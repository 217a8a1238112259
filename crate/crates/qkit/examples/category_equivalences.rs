//! The object-level translations between the categories: image lattices
//! with the join resolution as quasi-inverse, the closure-factor
//! projection, the closed-image map on spaces, and the extension of
//! partial point maps.
//!
//! Run with: cargo run -p qkit --example category_equivalences

use qkit::functors::{
    closed_image_report, extension_report, image_functor_report, space_functor_report,
};
use qkit::lattice::diamond_poset;
use qkit::subset::{powerset, Subset};
use qkit::{ClosureSpace, CompleteLattice, Resolution};

fn main() {
    // The join resolution over all non-bottom elements of a lattice has
    // the whole lattice as image and is canonical.
    let m2 = CompleteLattice::from_poset(diamond_poset(2)).unwrap();
    let canonical = Resolution::canonical_over(&m2);
    println!(
        "join resolution over M2: states {:?}, canonical = {}",
        canonical.point_names(),
        canonical.is_canonical()
    );
    assert_eq!(canonical.image_lattice(), m2);
    println!("its image lattice is M2 itself");

    // A sample of objects for the reports.
    let chain_space = ClosureSpace::new(
        ["x", "y"].iter().map(|s| s.to_string()).collect(),
        &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)],
    )
    .unwrap();
    let discrete = ClosureSpace::new(
        ["x", "y"].iter().map(|s| s.to_string()).collect(),
        &powerset(2).collect::<Vec<_>>(),
    )
    .unwrap();
    let objects = vec![
        canonical,
        Resolution::from_closure_space(&chain_space).unwrap(),
        Resolution::from_closure_space(&discrete).unwrap(),
    ];

    for (name, report) in [
        ("image functor", image_functor_report(&objects, 3).unwrap()),
        ("space projection", space_functor_report(&objects, 3).unwrap()),
        (
            "closed-image map",
            closed_image_report(&[chain_space.clone(), discrete.clone()], 3).unwrap(),
        ),
        (
            "point-map extension",
            extension_report(&[chain_space, discrete], 3).unwrap(),
        ),
    ] {
        println!(
            "{name}: {} records, clean = {}",
            report.len(),
            report.is_clean()
        );
        assert!(report.is_clean());
        for record in report.records() {
            if record.check.contains("joins-leave") {
                println!(
                    "  {}: {}",
                    record.check,
                    serde_json::to_string(record.witness.as_ref().unwrap()).unwrap()
                );
            }
        }
    }
}
