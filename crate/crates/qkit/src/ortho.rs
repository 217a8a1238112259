//! Finite ortholattices, Sasaki projections, and the indeterministic
//! perfect-measurement transition.
//!
//! Testing a property `a` sends a state `p` to its two candidate outcome
//! states `a /\ (a' \/ p)` and `a' /\ (a \/ p)`, dropping the bottom.
//! Over an atomistic orthomodular lattice with the atoms as states this
//! is a union of two atomically generated maps, hence a state-level
//! transition; it is generally not induced by any single join-preserving
//! lattice map, which is the point of working at the state level.

use crate::error::{Error, Result};
use crate::lattice::{
    boolean_poset, chain_poset, enumerate_join_preserving, CompleteLattice, LatticeMap,
};
use crate::poset::FinitePoset;
use crate::report::Report;
use crate::resolution::Resolution;
use crate::subset::Subset;
use crate::transitions::PossibleTransition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ortholattice {
    lattice: CompleteLattice,
    ortho: Vec<usize>,
    orthomodular: bool,
    om_witness: Option<(usize, usize)>,
}

impl Ortholattice {
    /// Validates the orthocomplementation laws: involution, order
    /// reversal, and complementation. Orthomodularity is checked and
    /// recorded as a flag with a witness when it fails.
    pub fn new(lattice: CompleteLattice, ortho: Vec<usize>) -> Result<Self> {
        let n = lattice.n();
        if ortho.len() != n || ortho.iter().any(|&v| v >= n) {
            return Err(Error::Shape {
                detail: "orthocomplement must be a total map on the carrier".into(),
            });
        }
        let name = |i: usize| lattice.name(i).to_string();
        for a in 0..n {
            if ortho[ortho[a]] != a {
                return Err(Error::OrthoLawViolation {
                    law: "involution",
                    witness: vec![name(a)],
                });
            }
            if lattice.join2(a, ortho[a]) != lattice.top() {
                return Err(Error::OrthoLawViolation {
                    law: "complement join",
                    witness: vec![name(a)],
                });
            }
            if lattice.meet2(a, ortho[a]) != lattice.bottom() {
                return Err(Error::OrthoLawViolation {
                    law: "complement meet",
                    witness: vec![name(a)],
                });
            }
            for b in 0..n {
                if lattice.le(a, b) && !lattice.le(ortho[b], ortho[a]) {
                    return Err(Error::OrthoLawViolation {
                        law: "order reversal",
                        witness: vec![name(a), name(b)],
                    });
                }
            }
        }
        let mut om_witness = None;
        'outer: for (a, &oa) in ortho.iter().enumerate() {
            for b in 0..n {
                if lattice.le(a, b) && lattice.join2(a, lattice.meet2(b, oa)) != b {
                    om_witness = Some((a, b));
                    break 'outer;
                }
            }
        }
        Ok(Ortholattice {
            lattice,
            orthomodular: om_witness.is_none(),
            ortho,
            om_witness,
        })
    }

    pub fn lattice(&self) -> &CompleteLattice {
        &self.lattice
    }

    pub fn ortho(&self, a: usize) -> usize {
        self.ortho[a]
    }

    pub fn is_orthomodular(&self) -> bool {
        self.orthomodular
    }

    pub fn orthomodularity_witness(&self) -> Option<(usize, usize)> {
        self.om_witness
    }

    /// The Sasaki projection of `a`: `p -> a /\ (a' \/ p)`.
    pub fn sasaki(&self, a: usize) -> LatticeMap {
        let values: Vec<usize> = (0..self.lattice.n())
            .map(|p| {
                self.lattice
                    .meet2(a, self.lattice.join2(self.ortho[a], p))
            })
            .collect();
        LatticeMap::new(self.lattice.clone(), self.lattice.clone(), values)
            .expect("sasaki projection is total")
    }

    /// The atoms read as states through the join resolution.
    pub fn atom_resolution(&self) -> Result<Resolution> {
        if !self.lattice.is_atomistic() {
            return Err(Error::NotAtomistic);
        }
        Resolution::join_resolution(&self.lattice, &self.lattice.atoms())
    }

    /// The perfect-measurement transition for a property `a`: each atom
    /// goes to its surviving projections under `a` and `a'`.
    pub fn measurement_transition(&self, a: usize) -> Result<MeasurementTransition> {
        if !self.orthomodular {
            return Err(Error::NotOrthomodular);
        }
        let res = self.atom_resolution()?;
        let atoms = self.lattice.atoms();
        let phi = self.sasaki(a);
        let phi_perp = self.sasaki(self.ortho[a]);
        let mut images = Vec::with_capacity(atoms.len());
        for &p in &atoms {
            let mut image = Subset::EMPTY;
            for outcome in [phi.apply(p), phi_perp.apply(p)] {
                if outcome == self.lattice.bottom() {
                    continue;
                }
                let Some(k) = atoms.iter().position(|&q| q == outcome) else {
                    return Err(Error::NonAtomicOutcome {
                        state: self.lattice.name(p).into(),
                        outcome: self.lattice.name(outcome).into(),
                    });
                };
                image = image.with(k);
            }
            images.push(image);
        }
        let transition = PossibleTransition::new(res.clone(), res, images)?;
        Ok(MeasurementTransition {
            lattice: self.clone(),
            tested: a,
            transition,
        })
    }
}

#[derive(Debug, Clone)]
pub struct MeasurementTransition {
    pub lattice: Ortholattice,
    pub tested: usize,
    pub transition: PossibleTransition,
}

impl MeasurementTransition {
    /// Image of a single atom, as a set of atom indices.
    pub fn outcome_of(&self, atom_index: usize) -> Subset {
        self.transition.singleton_image(atom_index)
    }

    pub fn is_deterministic(&self) -> bool {
        self.transition
            .singleton_images()
            .iter()
            .all(|im| im.len() <= 1)
    }
}

/// The transition generated by a join-preserving lattice endomap on an
/// atomistic carrier: an atom goes to the set of atoms below its value.
pub fn atomically_generated(ol: &Ortholattice, g: &LatticeMap) -> Result<PossibleTransition> {
    if g.domain() != ol.lattice() || g.codomain() != ol.lattice() {
        return Err(Error::DomainMismatch {
            expected: "an endomap of the ortholattice".into(),
            found: "a map between other lattices".into(),
        });
    }
    if !g.is_join_preserving() {
        return Err(Error::NotJoinPreserving {
            witness: vec![],
        });
    }
    let res = ol.atom_resolution()?;
    let atoms = ol.lattice().atoms();
    let images: Vec<Subset> = atoms
        .iter()
        .map(|&p| {
            Subset::from_indices(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &q)| ol.lattice().le(q, g.apply(p)))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    PossibleTransition::new(res.clone(), res, images)
}

/// Verifies the measurement transition for `a`: the side conditions, its
/// decomposition as the union of the two Sasaki-generated parts, and a
/// search for a single join-preserving generator (which exists exactly
/// when the measurement is deterministic, e.g. on Boolean carriers).
pub fn measurement_report(ol: &Ortholattice, a: usize) -> Result<Report> {
    let mut report = Report::new();
    let inst = format!("testing `{}`", ol.lattice().name(a));
    let mt = ol.measurement_transition(a)?;
    let conds = mt.transition.conditions()?;
    report.check("measurement-image-compatible", &inst, conds.a_sharp);
    report.check("measurement-empty-kernel", &inst, conds.a_empty);

    let from_a = atomically_generated(ol, &ol.sasaki(a))?;
    let from_perp = atomically_generated(ol, &ol.sasaki(ol.ortho(a)))?;
    let union = PossibleTransition::join(
        mt.transition.source(),
        mt.transition.target(),
        &[from_a, from_perp],
    )?;
    report.check(
        "measurement-is-union-of-projection-parts",
        &inst,
        union == mt.transition,
    );

    // Unions of atomically generated transitions stay image compatible;
    // verify over every pair of join-preserving endomaps.
    let endos = enumerate_join_preserving(ol.lattice(), ol.lattice());
    let mut unions_compatible = true;
    for g1 in &endos {
        for g2 in &endos {
            let u = PossibleTransition::join(
                mt.transition.source(),
                mt.transition.target(),
                &[atomically_generated(ol, g1)?, atomically_generated(ol, g2)?],
            )?;
            if !u.conditions()?.a_sharp {
                unions_compatible = false;
            }
        }
    }
    report.check(
        "unions-of-atomically-generated-stay-compatible",
        &inst,
        unions_compatible,
    );

    // Search for a single generating map.
    let generator = endos
        .iter()
        .find(|g| atomically_generated(ol, g).map(|t| t == mt.transition).unwrap_or(false));
    report.note(
        "measurement-single-generator",
        &inst,
        serde_json::json!({
            "found": generator.is_some(),
            "deterministic": mt.is_deterministic(),
            "generator": generator.map(|g| g.values().to_vec()),
        }),
    );
    Ok(report)
}

/// The two-element ortholattice.
pub fn two_chain() -> Ortholattice {
    let lattice = CompleteLattice::from_poset(chain_poset(2)).unwrap();
    Ortholattice::new(lattice, vec![1, 0]).unwrap()
}

/// The Boolean ortholattice on `bits` generators with set complement.
pub fn boolean(bits: usize) -> Ortholattice {
    let lattice = CompleteLattice::from_poset(boolean_poset(bits)).unwrap();
    let full = (1usize << bits) - 1;
    let ortho = (0..1usize << bits).map(|m| full ^ m).collect();
    Ortholattice::new(lattice, ortho).unwrap()
}

/// `MO_n`: bottom, `n` orthopairs of incomparable atoms, top. Atomistic
/// and orthomodular; the smallest non-Boolean examples.
pub fn mo(n: usize) -> Ortholattice {
    assert!((1..=3).contains(&n));
    let mut elements = vec!["0".to_string()];
    let mut pairs = Vec::new();
    for i in 0..n {
        let x = ((b'a' + i as u8) as char).to_string();
        let xp = format!("{x}'");
        elements.push(x.clone());
        elements.push(xp.clone());
        for m in [x, xp] {
            pairs.push(("0".to_string(), m.clone()));
            pairs.push((m, "1".to_string()));
        }
    }
    elements.push("1".to_string());
    let poset = FinitePoset::new(elements, &pairs).unwrap();
    let lattice = CompleteLattice::from_poset(poset).unwrap();
    let n_el = lattice.n();
    let ortho: Vec<usize> = (0..n_el)
        .map(|i| match i {
            0 => n_el - 1,
            i if i == n_el - 1 => 0,
            i if i % 2 == 1 => i + 1,
            i => i - 1,
        })
        .collect();
    Ortholattice::new(lattice, ortho).unwrap()
}

/// The benzene ring: an ortholattice that is not orthomodular.
pub fn o6() -> Ortholattice {
    let elements: Vec<String> = ["0", "p", "q", "p'", "q'", "1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let pairs: Vec<(String, String)> = [
        ("0", "p"),
        ("0", "q"),
        ("p", "q'"),
        ("q", "p'"),
        ("p'", "1"),
        ("q'", "1"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    let poset = FinitePoset::new(elements, &pairs).unwrap();
    let lattice = CompleteLattice::from_poset(poset).unwrap();
    // 0<->1, p<->p', q<->q'.
    let ortho = vec![5, 3, 4, 1, 2, 0];
    Ortholattice::new(lattice, ortho).unwrap()
}

/// Built-in carriers by name.
pub fn builtin(name: &str) -> Result<Ortholattice> {
    match name {
        "chain2" => Ok(two_chain()),
        "boolean2" => Ok(boolean(1)),
        "boolean4" => Ok(boolean(2)),
        "boolean8" => Ok(boolean(3)),
        "mo1" => Ok(mo(1)),
        "mo2" => Ok(mo(2)),
        "mo3" => Ok(mo(3)),
        "o6" => Ok(o6()),
        other => Err(Error::Shape {
            detail: format!("unknown built-in ortholattice `{other}`"),
        }),
    }
}
