//! Closure spaces: a finite universe together with an intersection-closed
//! family of closed sets.
//!
//! The family is the primary representation; the closure operator
//! `C(T) = intersection of all closed supersets of T` is derived from it.
//! Explicit operator tables can be validated against the three closure
//! laws (extensivity, monotonicity, idempotence) and converted back.

use crate::error::{Error, Result};
use crate::lattice::CompleteLattice;
use crate::poset::FinitePoset;
use crate::subset::{self, powerset, Subset, MAX_UNIVERSE};

/// Closed-set lattices are built as explicit posets; keep them small.
const CLOSED_LATTICE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSpace {
    universe: Vec<String>,
    closed: Vec<Subset>, // ascending mask order, deduplicated
}

impl ClosureSpace {
    /// Builds a space from its closed family. The family must contain the
    /// universe and be closed under pairwise intersection (which on a
    /// finite carrier gives all intersections).
    pub fn new(universe: Vec<String>, closed_sets: &[Subset]) -> Result<Self> {
        if universe.len() > MAX_UNIVERSE {
            return Err(Error::SizeCapExceeded {
                what: "closure-space universe",
                size: universe.len(),
                cap: MAX_UNIVERSE,
            });
        }
        for (k, name) in universe.iter().enumerate() {
            if universe[..k].contains(name) {
                return Err(Error::DuplicateElement { name: name.clone() });
            }
        }
        let full = Subset::full(universe.len());
        let mut closed: Vec<Subset> = closed_sets.to_vec();
        closed.sort();
        closed.dedup();
        if closed.iter().any(|f| !f.is_subset_of(full)) {
            return Err(Error::Shape {
                detail: "closed set mentions points outside the universe".into(),
            });
        }
        if !closed.contains(&full) {
            return Err(Error::MissingUniverse);
        }
        for (i, &a) in closed.iter().enumerate() {
            for &b in &closed[i + 1..] {
                if !closed.contains(&a.intersection(b)) {
                    return Err(Error::NotIntersectionClosed {
                        a: subset::render(&universe, a),
                        b: subset::render(&universe, b),
                    });
                }
            }
        }
        Ok(ClosureSpace { universe, closed })
    }

    /// Validates an explicit operator table (indexed by subset mask) and
    /// returns the space whose closed family is the table's fixed points.
    pub fn from_table(universe: Vec<String>, table: &[Subset]) -> Result<Self> {
        let n = universe.len();
        if n > MAX_UNIVERSE {
            return Err(Error::SizeCapExceeded {
                what: "closure-table universe",
                size: n,
                cap: MAX_UNIVERSE,
            });
        }
        if table.len() != 1usize << n {
            return Err(Error::Shape {
                detail: format!("table has {} entries, expected {}", table.len(), 1usize << n),
            });
        }
        let name = |t: Subset| subset::render(&universe, t);
        for t in powerset(n) {
            let ct = table[t.0 as usize];
            if !t.is_subset_of(ct) {
                return Err(Error::C1Violation { t: name(t) });
            }
            // Monotonicity along immediate supersets reaches all of them.
            for i in 0..n {
                if !t.contains(i) {
                    let t2 = t.with(i);
                    if !ct.is_subset_of(table[t2.0 as usize]) {
                        return Err(Error::C2Violation {
                            t: name(t),
                            t2: name(t2),
                        });
                    }
                }
            }
            if table[ct.0 as usize] != ct {
                return Err(Error::C3Violation { t: name(t) });
            }
        }
        let mut closed: Vec<Subset> = powerset(n)
            .filter(|t| table[t.0 as usize] == *t)
            .collect();
        closed.sort();
        ClosureSpace::new(universe, &closed)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn closed_sets(&self) -> &[Subset] {
        &self.closed
    }

    pub fn is_closed(&self, t: Subset) -> bool {
        self.closed.binary_search(&t).is_ok()
    }

    /// The smallest closed superset of `t`.
    pub fn closure_of(&self, t: Subset) -> Subset {
        let mut acc = Subset::full(self.n());
        for &f in &self.closed {
            if t.is_subset_of(f) {
                acc = acc.intersection(f);
            }
        }
        acc
    }

    /// The full operator table, indexed by subset mask.
    pub fn closure_table(&self) -> Vec<Subset> {
        powerset(self.n()).map(|t| self.closure_of(t)).collect()
    }

    /// Whether the empty set is closed, i.e. `C({}) = {}`.
    pub fn is_empty_strict(&self) -> bool {
        self.closed.first() == Some(&Subset::EMPTY)
    }

    /// Empty set closed and distinct points have distinct point closures.
    pub fn is_t0(&self) -> bool {
        if !self.is_empty_strict() {
            return false;
        }
        let n = self.n();
        for x in 0..n {
            for y in (x + 1)..n {
                if self.closure_of(Subset::singleton(x)) == self.closure_of(Subset::singleton(y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Empty set closed and every singleton is its own closure.
    pub fn is_t1(&self) -> bool {
        self.is_empty_strict()
            && (0..self.n()).all(|x| self.closure_of(Subset::singleton(x)) == Subset::singleton(x))
    }

    /// The closed sets ordered by inclusion. Meet is intersection; the
    /// join of a family is the closure of its union.
    pub fn closed_set_lattice(&self) -> Result<CompleteLattice> {
        let m = self.closed.len();
        if m > CLOSED_LATTICE_CAP {
            return Err(Error::SizeCapExceeded {
                what: "closed-set lattice",
                size: m,
                cap: CLOSED_LATTICE_CAP,
            });
        }
        let elements: Vec<String> = self
            .closed
            .iter()
            .map(|&f| subset::render(&self.universe, f))
            .collect();
        let mut le = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                le[i * m + j] = self.closed[i].is_subset_of(self.closed[j]);
            }
        }
        let poset = FinitePoset::from_le_matrix(elements, le)?;
        CompleteLattice::from_poset(poset)
    }

    /// Position of a closed set within the family (and hence within the
    /// closed-set lattice).
    pub fn closed_index(&self, f: Subset) -> Option<usize> {
        self.closed.binary_search(&f).ok()
    }
}

/// A union-preserving map between closure spaces, stored by singleton
/// images: `f(T)` is the union of the images of the points of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    source: ClosureSpace,
    target: ClosureSpace,
    images: Vec<Subset>,
}

impl SpaceMap {
    pub fn new(source: ClosureSpace, target: ClosureSpace, images: Vec<Subset>) -> Result<Self> {
        if images.len() != source.n() {
            return Err(Error::Shape {
                detail: format!(
                    "map has {} singleton images for {} points",
                    images.len(),
                    source.n()
                ),
            });
        }
        let full = Subset::full(target.n());
        if images.iter().any(|im| !im.is_subset_of(full)) {
            return Err(Error::Shape {
                detail: "singleton image mentions points outside the target universe".into(),
            });
        }
        Ok(SpaceMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(space: &ClosureSpace) -> Self {
        SpaceMap {
            source: space.clone(),
            target: space.clone(),
            images: (0..space.n()).map(Subset::singleton).collect(),
        }
    }

    pub fn source(&self) -> &ClosureSpace {
        &self.source
    }

    pub fn target(&self) -> &ClosureSpace {
        &self.target
    }

    pub fn singleton_images(&self) -> &[Subset] {
        &self.images
    }

    pub fn apply(&self, t: Subset) -> Subset {
        t.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.images[i]))
    }

    /// Continuity with respect to the closures:
    /// `f(C1(T))` contained in `C2(f(T))` for every `T`.
    pub fn continuity_witness(&self) -> Option<Subset> {
        powerset(self.source.n()).find(|&t| {
            !self
                .apply(self.source.closure_of(t))
                .is_subset_of(self.target.closure_of(self.apply(t)))
        })
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity_witness().is_none()
    }

    /// `f(T)` empty exactly when `T` is empty.
    pub fn has_empty_kernel(&self) -> bool {
        self.images.iter().all(|im| !im.is_empty())
    }

    pub fn compose(outer: &SpaceMap, inner: &SpaceMap) -> Result<SpaceMap> {
        if inner.target != outer.source {
            return Err(Error::NotComposable);
        }
        Ok(SpaceMap {
            source: inner.source.clone(),
            target: outer.target.clone(),
            images: inner.images.iter().map(|&im| outer.apply(im)).collect(),
        })
    }

    pub fn pointwise_join(
        source: &ClosureSpace,
        target: &ClosureSpace,
        maps: &[SpaceMap],
    ) -> Result<SpaceMap> {
        for m in maps {
            if &m.source != source || &m.target != target {
                return Err(Error::NotComposable);
            }
        }
        let images = (0..source.n())
            .map(|i| {
                maps.iter()
                    .fold(Subset::EMPTY, |acc, m| acc.union(m.images[i]))
            })
            .collect();
        Ok(SpaceMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn leq(&self, other: &SpaceMap) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| a.is_subset_of(b))
    }
}

/// A partial point map between closure spaces: defined on the complement
/// of its kernel, sending points to points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    source: ClosureSpace,
    target: ClosureSpace,
    values: Vec<Option<usize>>, // None = in the kernel
}

impl PointMap {
    pub fn new(
        source: ClosureSpace,
        target: ClosureSpace,
        values: Vec<Option<usize>>,
    ) -> Result<Self> {
        if values.len() != source.n() {
            return Err(Error::Shape {
                detail: format!("point map has {} values for {} points", values.len(), source.n()),
            });
        }
        if values.iter().flatten().any(|&v| v >= target.n()) {
            return Err(Error::Shape {
                detail: "point map value outside the target universe".into(),
            });
        }
        Ok(PointMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(space: &ClosureSpace) -> Self {
        PointMap {
            source: space.clone(),
            target: space.clone(),
            values: (0..space.n()).map(Some).collect(),
        }
    }

    pub fn source(&self) -> &ClosureSpace {
        &self.source
    }

    pub fn target(&self) -> &ClosureSpace {
        &self.target
    }

    pub fn values(&self) -> &[Option<usize>] {
        &self.values
    }

    pub fn kernel(&self) -> Subset {
        Subset::from_indices(
            self.values
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_none())
                .map(|(i, _)| i),
        )
    }

    /// Direct image of the defined part of `t`.
    pub fn image_of(&self, t: Subset) -> Subset {
        Subset::from_indices(t.iter().filter_map(|i| self.values[i]))
    }

    /// Continuity for partial maps: the image of `C1(T)` minus the kernel
    /// is contained in `C2` of the image of `T` minus the kernel.
    pub fn continuity_witness(&self) -> Option<Subset> {
        powerset(self.source.n()).find(|&t| {
            !self
                .image_of(self.source.closure_of(t))
                .is_subset_of(self.target.closure_of(self.image_of(t)))
        })
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity_witness().is_none()
    }

    /// Kernel of the composite: the first kernel plus everything the first
    /// map sends into the second kernel.
    pub fn compose(outer: &PointMap, inner: &PointMap) -> Result<PointMap> {
        if inner.target != outer.source {
            return Err(Error::NotComposable);
        }
        let values = inner
            .values
            .iter()
            .map(|v| v.and_then(|w| outer.values[w]))
            .collect();
        Ok(PointMap {
            source: inner.source.clone(),
            target: outer.target.clone(),
            values,
        })
    }
}

/// All closure spaces on a fixed universe of `n` points (`n <= 4`):
/// every intersection-closed family containing the universe.
pub fn enumerate_spaces(n: usize) -> Vec<ClosureSpace> {
    assert!(n <= 4, "space enumeration is for tiny universes only");
    let universe: Vec<String> = (0..n)
        .map(|i| ((b'u' + i as u8) as char).to_string())
        .collect();
    let subsets = 1usize << n;
    let full = Subset::full(n);
    let mut out = Vec::new();
    for fammask in 0..(1u64 << subsets) {
        if fammask >> full.0 & 1 == 0 {
            continue;
        }
        let family: Vec<Subset> = powerset(n).filter(|s| fammask >> s.0 & 1 == 1).collect();
        let closed = |x: Subset| family.binary_search(&x).is_ok();
        if family
            .iter()
            .all(|&a| family.iter().all(|&b| closed(a.intersection(b))))
        {
            out.push(ClosureSpace::new(universe.clone(), &family).unwrap());
        }
    }
    out
}
