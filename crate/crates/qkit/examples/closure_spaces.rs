//! Closure spaces from families of closed sets or from operator tables,
//! separation properties, and the closed-set lattice.
//!
//! Run with: cargo run -p qkit --example closure_spaces

use qkit::subset::{self, powerset, Subset};
use qkit::ClosureSpace;

fn main() {
    let universe: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();

    // Family form: {{}, {x}, {x,y}}.
    let space = ClosureSpace::new(
        universe.clone(),
        &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)],
    )
    .unwrap();
    println!("closure operator of the chain space:");
    for t in powerset(space.n()) {
        println!(
            "  C({}) = {}",
            subset::render(space.universe(), t),
            subset::render(space.universe(), space.closure_of(t))
        );
    }
    println!("separated (t0): {}", space.is_t0());
    println!("fully separated (t1): {}", space.is_t1());

    // Table form: validate the laws and recover the same space.
    let table: Vec<Subset> = space.closure_table();
    let back = ClosureSpace::from_table(universe.clone(), &table).unwrap();
    assert_eq!(back, space);
    println!("operator table validates and round-trips");

    // A table that breaks extensivity is rejected with a witness.
    let bad = vec![Subset::EMPTY, Subset::EMPTY, Subset::singleton(1), Subset::full(2)];
    match ClosureSpace::from_table(universe, &bad) {
        Err(e) => println!("bad table rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    // The closed sets under inclusion form a complete lattice; the join
    // is the closure of the union.
    let lattice = space.closed_set_lattice().unwrap();
    println!("closed-set lattice has {} elements:", lattice.n());
    for i in 0..lattice.n() {
        println!("  {}", lattice.name(i));
    }
    let x = space.closed_index(Subset::singleton(0)).unwrap();
    let full = space.closed_index(Subset::full(2)).unwrap();
    println!(
        "join of {} and {} = {}",
        lattice.name(x),
        lattice.name(full),
        lattice.name(lattice.join2(x, full))
    );
}
