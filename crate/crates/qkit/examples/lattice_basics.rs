//! Build finite posets and complete lattices, compute joins and meets,
//! and take Galois adjoints of join-preserving maps.
//!
//! Run with: cargo run -p qkit --example lattice_basics

use qkit::lattice::{diamond_poset, LatticeMap};
use qkit::{CompleteLattice, FinitePoset};

fn main() {
    // The diamond M2: 0 below a, b below 1; a and b incomparable.
    let poset = diamond_poset(2);
    println!("covering pairs of M2:");
    for (i, j) in poset.covers() {
        println!("  {} < {}", poset.name(i), poset.name(j));
    }

    let m2 = CompleteLattice::from_poset(poset).unwrap();
    let a = m2.index_of("a").unwrap();
    let b = m2.index_of("b").unwrap();
    println!("a v b = {}", m2.name(m2.join2(a, b)));
    println!("a ^ b = {}", m2.name(m2.meet2(a, b)));
    println!("empty join = {}", m2.name(m2.join_all([])));
    println!("empty meet = {}", m2.name(m2.meet_all([])));

    // A join-preserving endomap: collapse b onto a.
    let bottom = m2.bottom();
    let g = LatticeMap::new(m2.clone(), m2.clone(), vec![bottom, a, a, a])
        .unwrap_or_else(|e| panic!("{e}"));
    // Index order in M2 is [0, a, b, 1]; check the map shape we built.
    assert!(g.is_join_preserving());
    let g_star = g.right_adjoint().unwrap();
    println!("right adjoint of the collapse:");
    for x in 0..m2.n() {
        println!("  g*({}) = {}", m2.name(x), m2.name(g_star.apply(x)));
    }
    // The adjunction law on every pair.
    for x in 0..m2.n() {
        for y in 0..m2.n() {
            assert_eq!(m2.le(g.apply(x), y), m2.le(x, g_star.apply(y)));
        }
    }
    println!("adjunction law holds on all {} pairs", m2.n() * m2.n());
    assert_eq!(g_star.left_adjoint().unwrap(), g);
    println!("left adjoint of the right adjoint is the original map");

    // Posets that are not lattices are rejected with a witness.
    let n_shape = FinitePoset::new(
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        &[
            ("a".into(), "c".into()),
            ("b".into(), "c".into()),
            ("b".into(), "d".into()),
        ],
    )
    .unwrap();
    match CompleteLattice::from_poset(n_shape) {
        Err(e) => println!("N-shaped poset rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
