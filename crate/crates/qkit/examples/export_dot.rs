//! Render Hasse diagrams and evaluation squares as DOT.
//!
//! Run with: cargo run -p qkit --example export_dot

use qkit::dot::{ortho_dot, poset_dot, square_dot};
use qkit::lattice::diamond_poset;
use qkit::ortho::mo;
use qkit::{PossibleTransition, Resolution};

fn main() {
    println!("// M2 Hasse diagram");
    println!("{}", poset_dot(&diamond_poset(2), "m2"));

    println!("// MO2 with orthocomplement pairs dashed");
    println!("{}", ortho_dot(&mo(2)));

    // The evaluation square of the MO2 measurement transition.
    let mo2 = mo(2);
    let a = mo2.lattice().index_of("a").unwrap();
    let mt = mo2.measurement_transition(a).unwrap();
    println!("// evaluation square of the measurement transition");
    println!("{}", square_dot(&mt.transition).unwrap());

    // Squares only render for image-compatible transitions.
    let r = Resolution::canonical_over(
        &qkit::CompleteLattice::from_poset(diamond_poset(2)).unwrap(),
    );
    let id = PossibleTransition::identity(&r);
    assert!(square_dot(&id).is_ok());
}
