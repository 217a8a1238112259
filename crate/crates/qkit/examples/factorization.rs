//! Every resolution factors uniquely through a closure space: a closure
//! operator on the states followed by an order embedding of the
//! closed-set lattice into the property poset.
//!
//! Run with: cargo run -p qkit --example factorization

use qkit::lattice::find_lattice_isomorphism;
use qkit::subset::{self, powerset};
use qkit::{FinitePoset, Resolution};

fn main() {
    // Two states p, q over the chain 0 < l1 < l2 < l3; the table hits
    // {0, l1, l2} and leaves l3 outside the image.
    let target = FinitePoset::new(
        ["0", "l1", "l2", "l3"].iter().map(|s| s.to_string()).collect(),
        &[
            ("0".into(), "l1".into()),
            ("l1".into(), "l2".into()),
            ("l2".into(), "l3".into()),
        ],
    )
    .unwrap();
    let r = Resolution::new(
        ["p", "q"].iter().map(|s| s.to_string()).collect(),
        target,
        vec![0, 1, 2, 2],
        true,
    )
    .unwrap();

    println!("table:");
    for t in powerset(r.n_points()) {
        println!("  {} -> {}", r.render_subset(t), r.target().name(r.value(t)));
    }

    let f = r.factorize();
    println!("closure factor (closed sets):");
    for &set in f.space().closed_sets() {
        println!("  {}", subset::render(f.space().universe(), set));
    }
    println!("embedding:");
    for (set, v) in f.theta_pairs() {
        println!(
            "  {} -> {}",
            subset::render(f.space().universe(), set),
            r.target().name(v)
        );
    }

    // The embedding after the closure reproduces the table.
    for t in powerset(r.n_points()) {
        assert_eq!(f.theta_of(f.closure_of(t)), Some(r.value(t)));
    }
    println!("embedding . closure = table on every subset");

    // And the closed-set lattice is isomorphic to the image lattice.
    let iso = find_lattice_isomorphism(
        &f.space().closed_set_lattice().unwrap(),
        &r.image_lattice(),
        10,
    )
    .unwrap();
    println!("closed-set lattice = image lattice: {}", iso.is_some());

    // The factorization characterizes the resolution: rebuilding from the
    // factors gives the identical table.
    let rebuilt = Resolution::from_factors(f.space(), &f.theta_pairs(), r.target()).unwrap();
    assert_eq!(rebuilt, r);
    println!("rebuilding from the factors round-trips");
}
