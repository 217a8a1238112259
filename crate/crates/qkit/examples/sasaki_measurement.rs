//! Perfect measurement of a property on a finite orthomodular lattice:
//! each atom goes to its surviving Sasaki projections. On MO2 the
//! transition is genuinely indeterministic and no single join-preserving
//! lattice map generates it; on a Boolean carrier determinism returns.
//!
//! Run with: cargo run -p qkit --example sasaki_measurement

use qkit::functors::property_reflection;
use qkit::ortho::{boolean, measurement_report, mo, o6};

fn main() {
    let mo2 = mo(2);
    let l = mo2.lattice();
    println!(
        "MO2: {} elements, orthomodular = {}, atoms = {:?}",
        l.n(),
        mo2.is_orthomodular(),
        l.atoms().iter().map(|&p| l.name(p)).collect::<Vec<_>>()
    );

    let a = l.index_of("a").unwrap();
    let phi = mo2.sasaki(a);
    println!("sasaki projection of a:");
    for p in 0..l.n() {
        println!("  {} -> {}", l.name(p), l.name(phi.apply(p)));
    }

    let mt = mo2.measurement_transition(a).unwrap();
    let atoms = l.atoms();
    println!("measurement of a:");
    for (k, &p) in atoms.iter().enumerate() {
        let outcome: Vec<&str> = mt
            .outcome_of(k)
            .iter()
            .map(|i| l.name(atoms[i]))
            .collect();
        println!("  {} -> {{{}}}", l.name(p), outcome.join(","));
    }
    println!("deterministic: {}", mt.is_deterministic());

    // The induced property transition exists and collapses b to the top.
    let fpr = property_reflection(&mt.transition).unwrap();
    let im = mt.transition.source().image_lattice();
    let b = im.index_of("b").unwrap();
    println!(
        "induced property transition sends b to {}",
        im.name(fpr.apply(b))
    );

    let report = measurement_report(&mo2, a).unwrap();
    println!("report clean: {}", report.is_clean());
    for record in report.records() {
        if record.check == "measurement-single-generator" {
            println!(
                "  single generator search: {}",
                serde_json::to_string(record.witness.as_ref().unwrap()).unwrap()
            );
        }
    }

    // Boolean case: the same construction is deterministic.
    let b4 = boolean(2);
    let a4 = b4.lattice().index_of("a").unwrap();
    let mt4 = b4.measurement_transition(a4).unwrap();
    println!("Boolean 4: deterministic = {}", mt4.is_deterministic());

    // The benzene ring is an ortholattice but not orthomodular, so the
    // measurement construction rejects it.
    let ring = o6();
    let p = ring.lattice().index_of("p").unwrap();
    match ring.measurement_transition(p) {
        Err(e) => println!("benzene ring rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
