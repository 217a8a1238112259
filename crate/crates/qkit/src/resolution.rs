//! Resolutions: monotone assignments from subsets of a state set to a
//! poset of properties, satisfying a join axiom and, in the strict case,
//! an empty-kernel axiom.
//!
//! The full table over the powerset is stored explicitly: the value of a
//! set is a least upper bound *within the image*, which is not determined
//! by singleton values until the image is known, so keeping the table
//! keeps validation honest.
//!
//! Every resolution factors uniquely through a closure space: a closure
//! operator `C` on the state set followed by an order embedding of the
//! closed-set lattice into the property poset. `factorize` computes that
//! factorization and `from_factors` inverts it.

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::lattice::CompleteLattice;
use crate::poset::FinitePoset;
use crate::subset::{self, powerset, Subset, MAX_UNIVERSE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    sigma: Vec<String>,
    target: FinitePoset,
    table: Vec<usize>, // indexed by subset mask; values are target indices
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separation {
    pub t0: bool,
    pub t1: bool,
}

/// The set of states preordered by comparing singleton values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatePreorder {
    n: usize,
    rel: Vec<bool>,
}

impl StatePreorder {
    pub fn holds(&self, p: usize, q: usize) -> bool {
        self.rel[p * self.n + q]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|p| {
            (0..self.n).all(|q| p == q || !(self.holds(p, q) && self.holds(q, p)))
        })
    }
}

/// Validates a candidate table without allocating a `Resolution`.
/// Monotonicity is checked along immediate supersets; the join axiom is
/// checked through its witness reduction: given monotonicity, it is
/// equivalent to `table(W_a) <= a` for every image value `a`, where `W_a`
/// collects the states whose singleton value lies below `a`.
fn check_table(
    sigma: &[String],
    target: &FinitePoset,
    table: &[usize],
    strict: bool,
) -> Result<()> {
    let n = sigma.len();
    if table.len() != 1usize << n {
        return Err(Error::Shape {
            detail: format!("table has {} entries, expected {}", table.len(), 1usize << n),
        });
    }
    if let Some(&v) = table.iter().find(|&&v| v >= target.n()) {
        return Err(Error::Shape {
            detail: format!("table value index {v} out of range"),
        });
    }
    let render = |t: Subset| subset::render(sigma, t);
    for t in powerset(n) {
        let v = table[t.0 as usize];
        for i in 0..n {
            if !t.contains(i) {
                let t2 = t.with(i);
                if !target.le(v, table[t2.0 as usize]) {
                    return Err(Error::MonotonicityViolation {
                        t: render(t),
                        t2: render(t2),
                    });
                }
            }
        }
        if strict && !t.is_empty() && v == table[0] {
            return Err(Error::EmptyKernelViolation { t: render(t) });
        }
    }
    let singles: Vec<usize> = (0..n).map(|i| table[1 << i]).collect();
    let mut seen = vec![false; target.n()];
    for t in powerset(n) {
        let a = table[t.0 as usize];
        if seen[a] {
            continue;
        }
        seen[a] = true;
        let w = Subset::from_indices((0..n).filter(|&i| target.le(singles[i], a)));
        if !target.le(table[w.0 as usize], a) {
            return Err(Error::JoinAxiomViolation {
                family: w.iter().map(|i| render(Subset::singleton(i))).collect(),
                t: render(t),
            });
        }
    }
    Ok(())
}

impl Resolution {
    /// Validates all applicable axioms exhaustively and builds the
    /// resolution. `strict` selects the regime with the empty-kernel
    /// axiom; without it, states may share the value of the empty set.
    pub fn new(
        sigma: Vec<String>,
        target: FinitePoset,
        table: Vec<usize>,
        strict: bool,
    ) -> Result<Self> {
        if sigma.len() > MAX_UNIVERSE {
            return Err(Error::SizeCapExceeded {
                what: "resolution state set",
                size: sigma.len(),
                cap: MAX_UNIVERSE,
            });
        }
        for (k, name) in sigma.iter().enumerate() {
            if sigma[..k].contains(name) {
                return Err(Error::DuplicateElement { name: name.clone() });
            }
        }
        check_table(&sigma, &target, &table, strict)?;
        Ok(Resolution {
            sigma,
            target,
            table,
            strict,
        })
    }

    pub fn point_names(&self) -> &[String] {
        &self.sigma
    }

    pub fn n_points(&self) -> usize {
        self.sigma.len()
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n_points())
    }

    /// The value of a set of states, as a target element index.
    pub fn value(&self, t: Subset) -> usize {
        self.table[t.0 as usize]
    }

    pub fn singleton_value(&self, i: usize) -> usize {
        self.table[1 << i]
    }

    pub fn render_subset(&self, t: Subset) -> String {
        subset::render(&self.sigma, t)
    }

    /// Distinct table values in target order.
    pub fn image_elements(&self) -> Vec<usize> {
        let mut seen = vec![false; self.target.n()];
        for &v in &self.table {
            seen[v] = true;
        }
        (0..self.target.n()).filter(|&i| seen[i]).collect()
    }

    /// The image with its inherited order, as a complete lattice. Joins
    /// are computed within the image: the join of the values of a family
    /// is the value of its union.
    pub fn image_lattice(&self) -> CompleteLattice {
        let img = self.image_elements();
        CompleteLattice::from_poset(self.target.restrict(&img))
            .expect("the image of a valid resolution is a complete lattice")
    }

    /// Position of a target element inside `image_elements`.
    pub fn image_index_of(&self, target_elem: usize) -> Option<usize> {
        self.image_elements().iter().position(|&e| e == target_elem)
    }

    /// The factorization into a closure space and an order embedding of
    /// its closed-set lattice: `C(T)` collects the states whose singleton
    /// value lies below the value of `T`, and the embedding reads the
    /// table on closed sets.
    pub fn factorize(&self) -> Factorization {
        let n = self.n_points();
        let closure: Vec<Subset> = powerset(n)
            .map(|t| {
                let v = self.value(t);
                Subset::from_indices((0..n).filter(|&i| self.target.le(self.singleton_value(i), v)))
            })
            .collect();
        let mut family = closure.clone();
        family.sort();
        family.dedup();
        let space = ClosureSpace::new(self.sigma.clone(), &family)
            .expect("closure factor of a valid resolution is a closure space");
        let theta: Vec<usize> = space
            .closed_sets()
            .iter()
            .map(|&f| self.value(f))
            .collect();
        debug_assert!(powerset(n)
            .all(|t| self.value(closure[t.0 as usize]) == self.value(t)));
        Factorization {
            space,
            theta,
            closure,
        }
    }

    /// Rebuilds the resolution `theta . C` from a closure space and an
    /// order embedding of its closed sets into `target`, given as
    /// `(closed set, target element)` pairs. The result is strict exactly
    /// when the empty set is closed.
    pub fn from_factors(
        space: &ClosureSpace,
        theta: &[(Subset, usize)],
        target: &FinitePoset,
    ) -> Result<Resolution> {
        let closed = space.closed_sets();
        let mut values = vec![None; closed.len()];
        for &(f, v) in theta {
            let k = space.closed_index(f).ok_or_else(|| Error::NotAnEmbedding {
                reason: format!(
                    "{} is not a closed set of the space",
                    subset::render(space.universe(), f)
                ),
            })?;
            if v >= target.n() {
                return Err(Error::Shape {
                    detail: format!("embedding value index {v} out of range"),
                });
            }
            values[k] = Some(v);
        }
        let values: Vec<usize> = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                v.ok_or_else(|| Error::NotAnEmbedding {
                    reason: format!(
                        "no value for closed set {}",
                        subset::render(space.universe(), closed[k])
                    ),
                })
            })
            .collect::<Result<_>>()?;
        for i in 0..closed.len() {
            for j in 0..closed.len() {
                let inc = closed[i].is_subset_of(closed[j]);
                let ord = target.le(values[i], values[j]);
                if inc != ord {
                    return Err(Error::NotAnEmbedding {
                        reason: format!(
                            "{} and {} have inclusion `{}` but image order `{}`",
                            subset::render(space.universe(), closed[i]),
                            subset::render(space.universe(), closed[j]),
                            inc,
                            ord
                        ),
                    });
                }
            }
        }
        let table: Vec<usize> = powerset(space.n())
            .map(|t| values[space.closed_index(space.closure_of(t)).unwrap()])
            .collect();
        Resolution::new(
            space.universe().to_vec(),
            target.clone(),
            table,
            space.is_empty_strict(),
        )
    }

    /// A closure space read as a resolution over its own closed-set
    /// lattice, with the identity embedding.
    pub fn from_closure_space(space: &ClosureSpace) -> Result<Resolution> {
        let lattice = space.closed_set_lattice()?;
        let table: Vec<usize> = powerset(space.n())
            .map(|t| space.closed_index(space.closure_of(t)).unwrap())
            .collect();
        Resolution::new(
            space.universe().to_vec(),
            lattice.poset().clone(),
            table,
            space.is_empty_strict(),
        )
    }

    /// The join resolution `T -> join of T` over a set of non-bottom
    /// lattice elements taken as states.
    pub fn join_resolution(lattice: &CompleteLattice, states: &[usize]) -> Result<Resolution> {
        if states.contains(&lattice.bottom()) {
            return Err(Error::StateSetContainsBottom);
        }
        let sigma: Vec<String> = states.iter().map(|&e| lattice.name(e).to_string()).collect();
        let table: Vec<usize> = powerset(states.len())
            .map(|t| lattice.join_all(t.iter().map(|i| states[i])))
            .collect();
        Resolution::new(sigma, lattice.poset().clone(), table, true)
    }

    /// The join resolution over all non-bottom elements. Its image is the
    /// whole lattice and it is canonical.
    pub fn canonical_over(lattice: &CompleteLattice) -> Resolution {
        let states: Vec<usize> = (0..lattice.n()).filter(|&e| e != lattice.bottom()).collect();
        Resolution::join_resolution(lattice, &states)
            .expect("join resolution over non-bottom elements is valid")
    }

    /// Whether every lattice element is the join of the states below it.
    pub fn is_full_state_set(lattice: &CompleteLattice, states: &[usize]) -> bool {
        (0..lattice.n()).all(|t| {
            lattice.join_all(states.iter().copied().filter(|&a| lattice.le(a, t))) == t
        })
    }

    /// Separation of states by their singleton values: `t0` when values
    /// are injective, `t1` when they are pairwise incomparable.
    pub fn separation(&self) -> Separation {
        let n = self.n_points();
        let mut t0 = true;
        let mut t1 = true;
        for p in 0..n {
            for q in 0..n {
                if p == q {
                    continue;
                }
                if self.singleton_value(p) == self.singleton_value(q) {
                    t0 = false;
                }
                if self.target.le(self.singleton_value(p), self.singleton_value(q)) {
                    t1 = false;
                }
            }
        }
        Separation { t0, t1 }
    }

    /// The preorder `p <= q` iff the singleton value of `p` lies below
    /// that of `q`. Antisymmetric exactly for separated (`t0`) resolutions.
    pub fn preorder(&self) -> StatePreorder {
        let n = self.n_points();
        let rel = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .map(|(p, q)| self.target.le(self.singleton_value(p), self.singleton_value(q)))
            .collect();
        StatePreorder { n, rel }
    }

    /// Every non-bottom image value is the value of some singleton.
    pub fn is_saturated(&self) -> bool {
        let bottom = self.value(Subset::EMPTY);
        let singles: Vec<usize> = (0..self.n_points()).map(|i| self.singleton_value(i)).collect();
        self.image_elements()
            .into_iter()
            .filter(|&v| v != bottom)
            .all(|v| singles.contains(&v))
    }

    /// Saturated and separated.
    pub fn is_canonical(&self) -> bool {
        self.is_saturated() && self.separation().t0
    }

    /// Builds the canonical resolution determined by this one: states are
    /// the non-bottom image values (renamed with an `s:` prefix), the
    /// property poset is the image, and a set of new states is sent to its
    /// join within the image. Returns the resolution together with the
    /// state translation `phi`; `phi` is `None` exactly on states whose
    /// singleton value is the bottom, which only happens in the non-strict
    /// regime. The translation square `value(T) = value'(phi(T))` commutes
    /// for every `T`.
    pub fn canonicalize(&self) -> (Resolution, Vec<Option<usize>>) {
        let img = self.image_elements();
        let img_lattice = self.image_lattice();
        let bottom_v = self.value(Subset::EMPTY);
        let states: Vec<usize> = img.iter().copied().filter(|&v| v != bottom_v).collect();
        let sigma: Vec<String> = states
            .iter()
            .map(|&v| format!("s:{}", self.target.name(v)))
            .collect();
        let to_img = |v: usize| img.iter().position(|&e| e == v).unwrap();
        let table: Vec<usize> = powerset(states.len())
            .map(|t| img_lattice.join_all(t.iter().map(|i| to_img(states[i]))))
            .collect();
        let canonical = Resolution::new(sigma, img_lattice.poset().clone(), table, true)
            .expect("canonicalization always yields a valid strict resolution");
        let phi: Vec<Option<usize>> = (0..self.n_points())
            .map(|p| {
                let v = self.singleton_value(p);
                if v == bottom_v {
                    None
                } else {
                    Some(states.iter().position(|&e| e == v).unwrap())
                }
            })
            .collect();
        (canonical, phi)
    }

    /// Translates a state set through a (possibly partial) `phi`.
    pub fn translate(phi: &[Option<usize>], t: Subset) -> Subset {
        Subset::from_indices(t.iter().filter_map(|p| phi[p]))
    }
}

/// Two canonical resolutions are essentially the same when their image
/// lattices are order isomorphic; the state bijection is then forced by
/// matching singleton values.
pub fn canonically_related(a: &Resolution, b: &Resolution, cap: usize) -> Result<bool> {
    if !a.is_canonical() || !b.is_canonical() {
        return Ok(false);
    }
    let iso = crate::lattice::find_lattice_isomorphism(&a.image_lattice(), &b.image_lattice(), cap)?;
    Ok(iso.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    space: ClosureSpace,
    theta: Vec<usize>,    // aligned with space.closed_sets()
    closure: Vec<Subset>, // full table T -> C(T)
}

impl Factorization {
    pub fn space(&self) -> &ClosureSpace {
        &self.space
    }

    /// The embedding as `(closed set, target element)` pairs.
    pub fn theta_pairs(&self) -> Vec<(Subset, usize)> {
        self.space
            .closed_sets()
            .iter()
            .copied()
            .zip(self.theta.iter().copied())
            .collect()
    }

    pub fn theta_of(&self, closed: Subset) -> Option<usize> {
        self.space.closed_index(closed).map(|k| self.theta[k])
    }

    /// The closed set a target element comes from, if it is in the image.
    pub fn theta_inv(&self, target_elem: usize) -> Option<Subset> {
        self.theta
            .iter()
            .position(|&v| v == target_elem)
            .map(|k| self.space.closed_sets()[k])
    }

    pub fn closure_of(&self, t: Subset) -> Subset {
        self.closure[t.0 as usize]
    }
}

/// All valid resolutions with `points` states over the given poset,
/// enumerated by scanning every table. States are named `p0`, `p1`, ...
pub fn enumerate_resolutions(
    points: usize,
    target: &FinitePoset,
    strict: bool,
) -> Result<Vec<Resolution>> {
    let entries = 1usize << points;
    let cells = target.n() as u64;
    match cells.checked_pow(entries as u32) {
        Some(c) if c <= 20_000_000 => {}
        _ => {
            return Err(Error::SizeCapExceeded {
                what: "resolution enumeration",
                size: points,
                cap: 3,
            })
        }
    }
    let sigma: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
    let mut out = Vec::new();
    let mut table = vec![0usize; entries];
    loop {
        if check_table(&sigma, target, &table, strict).is_ok() {
            out.push(Resolution {
                sigma: sigma.clone(),
                target: target.clone(),
                table: table.clone(),
                strict,
            });
        }
        let mut k = 0;
        loop {
            if k == entries {
                return Ok(out);
            }
            table[k] += 1;
            if table[k] < target.n() {
                break;
            }
            table[k] = 0;
            k += 1;
        }
    }
}
