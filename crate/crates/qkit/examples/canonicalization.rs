//! Every resolution determines an essentially unique canonical one: the
//! non-bottom image values become the states, and the translation square
//! commutes on every subset.
//!
//! Run with: cargo run -p qkit --example canonicalization

use qkit::lattice::chain_poset;
use qkit::subset::powerset;
use qkit::Resolution;

fn main() {
    // A non-separated resolution: p and q share their value, and the
    // property poset has an element the image never reaches.
    let r = Resolution::new(
        ["p", "q"].iter().map(|s| s.to_string()).collect(),
        chain_poset(3),
        vec![0, 1, 1, 1],
        true,
    )
    .unwrap();
    println!("separated (t0): {}", r.separation().t0);
    println!("saturated: {}", r.is_saturated());
    println!("canonical: {}", r.is_canonical());

    let (canonical, phi) = r.canonicalize();
    println!(
        "canonical states: {:?}",
        canonical.point_names()
    );
    for (p, target) in phi.iter().enumerate() {
        match target {
            Some(k) => println!(
                "  phi({}) = {}",
                r.point_names()[p],
                canonical.point_names()[*k]
            ),
            None => println!("  phi({}) undefined (value at bottom)", r.point_names()[p]),
        }
    }
    assert!(canonical.is_canonical());

    // The translation square: value(T) = value'(phi(T)).
    for t in powerset(r.n_points()) {
        let translated = Resolution::translate(&phi, t);
        assert_eq!(
            canonical.target().name(canonical.value(translated)),
            r.target().name(r.value(t))
        );
        println!(
            "  {} -> {}  agrees with  {} -> {}",
            r.render_subset(t),
            r.target().name(r.value(t)),
            canonical.render_subset(translated),
            canonical.target().name(canonical.value(translated)),
        );
    }

    // Canonicalizing again only relabels.
    let (second, phi2) = canonical.canonicalize();
    assert!(phi2.iter().all(|p| p.is_some()));
    assert_eq!(
        canonical.image_lattice().poset().element_names(),
        second.image_lattice().poset().element_names()
    );
    println!("second canonicalization is a bijective relabeling");
}
