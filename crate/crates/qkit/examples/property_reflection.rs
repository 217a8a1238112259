//! Reflecting state transitions onto property transitions, lifting back,
//! and the Galois dual: what transfers and what does not.
//!
//! The dual of the identity closes up every state, so the dual is not a
//! functor; this example exhibits the defect on the two-point chain
//! space and prints the witness searches from the full report.
//!
//! Run with: cargo run -p qkit --example property_reflection

use qkit::functors::{galois_dual_report, property_reflection, state_lift};
use qkit::lattice::LatticeMap;
use qkit::subset::Subset;
use qkit::{ClosureSpace, PossibleTransition, Resolution};

fn main() {
    // The chain space {{}, {x}, {x,y}} read as its own resolution.
    let space = ClosureSpace::new(
        ["x", "y"].iter().map(|s| s.to_string()).collect(),
        &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)],
    )
    .unwrap();
    let r = Resolution::from_closure_space(&space).unwrap();

    // Reflect the identity transition: the identity property map.
    let id = PossibleTransition::identity(&r);
    let reflected = property_reflection(&id).unwrap();
    assert_eq!(reflected, LatticeMap::identity(&r.image_lattice()));
    println!("reflection of the identity transition is the identity");

    // Lift the identity property map: y is sent to its closure {x,y}.
    let lifted = state_lift(&LatticeMap::identity(&r.image_lattice()), &r, &r).unwrap();
    println!(
        "lift of the identity sends y to {}",
        r.render_subset(lifted.singleton_image(1))
    );
    assert_ne!(lifted, id);
    println!("so the dual moves identities: it is not a functor");

    // Yet reflecting the lift gives the identity back (the dual is a
    // right inverse of the reflection).
    assert_eq!(
        property_reflection(&lifted).unwrap(),
        LatticeMap::identity(&r.image_lattice())
    );
    println!("reflecting the lift recovers the identity map");

    // The full dual report over a sample, with witness searches.
    let wide = ClosureSpace::new(
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect(),
        &[
            Subset::EMPTY,
            Subset::singleton(0),
            Subset::singleton(1),
            Subset::full(3),
        ],
    )
    .unwrap();
    let discrete = ClosureSpace::new(
        ["x", "y"].iter().map(|s| s.to_string()).collect(),
        &qkit::subset::powerset(2).collect::<Vec<_>>(),
    )
    .unwrap();
    let objects = vec![
        r,
        Resolution::from_closure_space(&discrete).unwrap(),
        Resolution::from_closure_space(&wide).unwrap(),
    ];
    let report = galois_dual_report(&objects, true, 3).unwrap();
    println!(
        "dual report: {} records, clean = {}",
        report.len(),
        report.is_clean()
    );
    for record in report.records() {
        if let Some(witness) = &record.witness {
            if record.check.starts_with("dual-") {
                println!(
                    "  {}: {}",
                    record.check,
                    serde_json::to_string(witness).unwrap()
                );
            }
        }
    }
}
