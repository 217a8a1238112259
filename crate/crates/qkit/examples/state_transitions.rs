//! State transitions as morphisms: side conditions, hom-set enumeration,
//! and the quantaloid laws (join-complete hom-sets with bottom, two-sided
//! distributivity of composition over joins).
//!
//! Run with: cargo run -p qkit --example state_transitions

use qkit::lattice::chain_poset;
use qkit::subset::Subset;
use qkit::transitions::{enumerate_hom_set, verify_quantaloid_laws, HomSetKind};
use qkit::{FinitePoset, PossibleTransition, Resolution};

fn main() {
    let one = Resolution::new(
        vec!["p".to_string()],
        chain_poset(2),
        vec![0, 1],
        true,
    )
    .unwrap();
    let target = FinitePoset::new(
        ["0", "l1", "l2", "l3"].iter().map(|s| s.to_string()).collect(),
        &[
            ("0".into(), "l1".into()),
            ("l1".into(), "l2".into()),
            ("l2".into(), "l3".into()),
        ],
    )
    .unwrap();
    let two = Resolution::new(
        ["p", "q"].iter().map(|s| s.to_string()).collect(),
        target,
        vec![0, 1, 2, 2],
        true,
    )
    .unwrap();

    // A single morphism and its conditions.
    let f = PossibleTransition::new(
        two.clone(),
        two.clone(),
        vec![Subset::singleton(1), Subset::singleton(1)],
    )
    .unwrap();
    let conds = f.conditions().unwrap();
    println!(
        "p,q -> q: empty-kernel {}, image-compatible {}, continuous {}",
        conds.a_empty, conds.a_sharp, conds.a_star
    );

    // Hom-sets in the strict and non-strict regimes.
    for kind in [HomSetKind::PossibleStrict, HomSetKind::Possible] {
        let hom = enumerate_hom_set(&two, &two, kind, 3).unwrap();
        println!("{}: {} endomorphisms", kind.as_str(), hom.len());
    }
    let endo = enumerate_hom_set(&one, &one, HomSetKind::PossibleStrict, 3).unwrap();
    println!(
        "one-point object: {} endomorphisms (bottom and identity)",
        endo.len()
    );

    // The full law suite over a three-object sample.
    let objects = [one, two.clone(), two];
    // Same object twice is fine: the suite works with ordered pairs.
    for kind in [
        HomSetKind::PossibleStrict,
        HomSetKind::Possible,
        HomSetKind::PropertyStrict,
        HomSetKind::Property,
    ] {
        let report = verify_quantaloid_laws(&objects, kind, 3).unwrap();
        println!(
            "{}: {} law instances checked, clean = {}",
            kind.as_str(),
            report.len(),
            report.is_clean()
        );
        assert!(report.is_clean());
    }
}
