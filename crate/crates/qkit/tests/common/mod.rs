//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use qkit::lattice::chain_poset;
use qkit::poset::FinitePoset;
use qkit::subset::{powerset, Subset};
use qkit::{ClosureSpace, Resolution};

pub fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// One state over the two-element chain.
pub fn one_point() -> Resolution {
    Resolution::new(named(&["p"]), chain_poset(2), vec![0, 1], true).unwrap()
}

/// Two states over `0 < l1 < l2 < l3` hitting `{0, l1, l2}`.
pub fn two_state_chain() -> Resolution {
    let target = FinitePoset::new(
        named(&["0", "l1", "l2", "l3"]),
        &[
            ("0".into(), "l1".into()),
            ("l1".into(), "l2".into()),
            ("l2".into(), "l3".into()),
        ],
    )
    .unwrap();
    Resolution::new(named(&["p", "q"]), target, vec![0, 1, 2, 2], true).unwrap()
}

/// `{{}, {x}, {x,y}}` on `{x, y}`: separated but not fully separated.
pub fn chain_space() -> ClosureSpace {
    ClosureSpace::new(
        named(&["x", "y"]),
        &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)],
    )
    .unwrap()
}

/// The discrete two-point space.
pub fn discrete_space() -> ClosureSpace {
    ClosureSpace::new(named(&["x", "y"]), &powerset(2).collect::<Vec<_>>()).unwrap()
}

/// `{{}, {x}, {y}, {x,y,z}}`: unions of closed sets need not be closed.
pub fn wide_space() -> ClosureSpace {
    ClosureSpace::new(
        named(&["x", "y", "z"]),
        &[
            Subset::EMPTY,
            Subset::singleton(0),
            Subset::singleton(1),
            Subset::full(3),
        ],
    )
    .unwrap()
}

/// The object sample used by the functor and dual suites.
pub fn sample_objects() -> Vec<Resolution> {
    vec![
        one_point(),
        two_state_chain(),
        Resolution::from_closure_space(&chain_space()).unwrap(),
        Resolution::from_closure_space(&discrete_space()).unwrap(),
        Resolution::from_closure_space(&wide_space()).unwrap(),
    ]
}
