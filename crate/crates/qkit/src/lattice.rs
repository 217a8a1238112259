//! Complete lattices over finite posets, and maps between them.
//!
//! A finite poset is a complete lattice as soon as every pair has a least
//! upper bound and a greatest lower bound and global bottom/top exist; the
//! constructor additionally cross-checks every subset against a brute-force
//! bound search on small carriers.

use crate::error::{Error, Result};
use crate::poset::{self, FinitePoset};

/// Carrier size up to which `from_poset` verifies all `2^n` subsets.
const EXHAUSTIVE_LATTICE_CHECK: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl CompleteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.n();
        if n == 0 {
            return Err(Error::NotALattice {
                missing: "least upper bound",
                witness: vec![],
            });
        }
        let bottom = (0..n)
            .find(|&i| (0..n).all(|j| poset.le(i, j)))
            .ok_or(Error::NotALattice {
                missing: "least upper bound",
                witness: vec![],
            })?;
        let top = (0..n)
            .find(|&i| (0..n).all(|j| poset.le(j, i)))
            .ok_or(Error::NotALattice {
                missing: "greatest lower bound",
                witness: vec![],
            })?;
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] =
                    poset.lub(&[i, j]).ok_or_else(|| Error::NotALattice {
                        missing: "least upper bound",
                        witness: vec![poset.name(i).into(), poset.name(j).into()],
                    })?;
                meet[i * n + j] =
                    poset.glb(&[i, j]).ok_or_else(|| Error::NotALattice {
                        missing: "greatest lower bound",
                        witness: vec![poset.name(i).into(), poset.name(j).into()],
                    })?;
            }
        }
        let lattice = CompleteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        };
        if n <= EXHAUSTIVE_LATTICE_CHECK {
            for mask in 0..(1u64 << n) {
                let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let witness = || subset.iter().map(|&i| lattice.name(i).into()).collect();
                let lub = lattice.poset.lub(&subset);
                if lub != Some(lattice.join_all(subset.iter().copied())) {
                    return Err(Error::NotALattice {
                        missing: "least upper bound",
                        witness: witness(),
                    });
                }
                let glb = lattice.poset.glb(&subset);
                if glb != Some(lattice.meet_all(subset.iter().copied())) {
                    return Err(Error::NotALattice {
                        missing: "greatest lower bound",
                        witness: witness(),
                    });
                }
            }
        }
        Ok(lattice)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.poset.index_of(name)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.poset.le(i, j)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join2(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n() + j]
    }

    pub fn meet2(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n() + j]
    }

    /// Join of any family; the empty join is the bottom element.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bottom, |acc, x| self.join2(acc, x))
    }

    /// Meet of any family; the empty meet is the top element.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.top, |acc, x| self.meet2(acc, x))
    }

    /// Elements that cannot be written as a join of strictly smaller ones.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| {
                x != self.bottom && {
                    let below = (0..self.n()).filter(|&y| self.poset.lt(y, x));
                    self.join_all(below) != x
                }
            })
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| {
                self.poset.lt(self.bottom, x)
                    && !(0..self.n()).any(|y| self.poset.lt(self.bottom, y) && self.poset.lt(y, x))
            })
            .collect()
    }

    pub fn is_atom(&self, x: usize) -> bool {
        self.atoms().contains(&x)
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.n()).all(|x| {
            self.join_all(atoms.iter().copied().filter(|&a| self.le(a, x))) == x
        })
    }
}

/// Searches for a lattice isomorphism. On finite carriers an order
/// isomorphism automatically preserves all joins and meets.
pub fn find_lattice_isomorphism(
    a: &CompleteLattice,
    b: &CompleteLattice,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    poset::find_order_isomorphism(a.poset(), b.poset(), cap)
}

/// A total map between complete lattices, stored by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    domain: CompleteLattice,
    codomain: CompleteLattice,
    values: Vec<usize>,
}

impl LatticeMap {
    pub fn new(domain: CompleteLattice, codomain: CompleteLattice, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.n() {
            return Err(Error::Shape {
                detail: format!(
                    "map has {} values for a domain of size {}",
                    values.len(),
                    domain.n()
                ),
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v >= codomain.n()) {
            return Err(Error::Shape {
                detail: format!("value index {v} out of range"),
            });
        }
        Ok(LatticeMap {
            domain,
            codomain,
            values,
        })
    }

    pub fn identity(l: &CompleteLattice) -> Self {
        LatticeMap {
            domain: l.clone(),
            codomain: l.clone(),
            values: (0..l.n()).collect(),
        }
    }

    pub fn constant_bottom(domain: &CompleteLattice, codomain: &CompleteLattice) -> Self {
        LatticeMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            values: vec![codomain.bottom(); domain.n()],
        }
    }

    pub fn domain(&self) -> &CompleteLattice {
        &self.domain
    }

    pub fn codomain(&self) -> &CompleteLattice {
        &self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_monotone(&self) -> bool {
        let n = self.domain.n();
        (0..n).all(|i| {
            (0..n).all(|j| !self.domain.le(i, j) || self.codomain.le(self.values[i], self.values[j]))
        })
    }

    /// A witness pair `{i, j}` whose join is not preserved, or the bottom
    /// witness `{}`; `None` when the map preserves all joins. On a finite
    /// lattice, preserving the empty and binary joins preserves all of them.
    pub fn join_violation(&self) -> Option<Vec<usize>> {
        if self.values[self.domain.bottom()] != self.codomain.bottom() {
            return Some(vec![]);
        }
        let n = self.domain.n();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.values[self.domain.join2(i, j)];
                let rhs = self.codomain.join2(self.values[i], self.values[j]);
                if lhs != rhs {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    pub fn is_join_preserving(&self) -> bool {
        self.join_violation().is_none()
    }

    pub fn meet_violation(&self) -> Option<Vec<usize>> {
        if self.values[self.domain.top()] != self.codomain.top() {
            return Some(vec![]);
        }
        let n = self.domain.n();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.values[self.domain.meet2(i, j)];
                let rhs = self.codomain.meet2(self.values[i], self.values[j]);
                if lhs != rhs {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    pub fn is_meet_preserving(&self) -> bool {
        self.meet_violation().is_none()
    }

    /// Strict bottom kernel: `g(a) = 0` exactly when `a = 0`.
    pub fn is_bottom_strict(&self) -> bool {
        let n = self.domain.n();
        (0..n).all(|a| {
            (self.values[a] == self.codomain.bottom()) == (a == self.domain.bottom())
        })
    }

    pub fn is_constant_bottom(&self) -> bool {
        self.values.iter().all(|&v| v == self.codomain.bottom())
    }

    /// Pointwise order on parallel maps.
    pub fn leq(&self, other: &LatticeMap) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        debug_assert_eq!(self.codomain, other.codomain);
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.codomain.le(a, b))
    }

    pub fn compose(outer: &LatticeMap, inner: &LatticeMap) -> Result<LatticeMap> {
        if inner.codomain != outer.domain {
            return Err(Error::NotComposable);
        }
        Ok(LatticeMap {
            domain: inner.domain.clone(),
            codomain: outer.codomain.clone(),
            values: inner.values.iter().map(|&v| outer.values[v]).collect(),
        })
    }

    /// Pointwise join of parallel maps; the empty family yields the
    /// constant-bottom map.
    pub fn pointwise_join(
        domain: &CompleteLattice,
        codomain: &CompleteLattice,
        maps: &[LatticeMap],
    ) -> Result<LatticeMap> {
        for m in maps {
            if &m.domain != domain || &m.codomain != codomain {
                return Err(Error::NotComposable);
            }
        }
        let values = (0..domain.n())
            .map(|i| codomain.join_all(maps.iter().map(|m| m.values[i])))
            .collect();
        Ok(LatticeMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            values,
        })
    }

    /// The right Galois adjoint of a join-preserving map:
    /// `g*(b) = join of all a with g(a) <= b`. Satisfies
    /// `g(a) <= b` iff `a <= g*(b)` and preserves all meets.
    pub fn right_adjoint(&self) -> Result<LatticeMap> {
        if let Some(witness) = self.join_violation() {
            return Err(Error::NotJoinPreserving {
                witness: witness.iter().map(|&i| self.domain.name(i).into()).collect(),
            });
        }
        let values = (0..self.codomain.n())
            .map(|b| {
                self.domain.join_all(
                    (0..self.domain.n()).filter(|&a| self.codomain.le(self.values[a], b)),
                )
            })
            .collect();
        Ok(LatticeMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            values,
        })
    }

    /// The left Galois adjoint of a meet-preserving map:
    /// `h_*(a) = meet of all b with a <= h(b)`.
    pub fn left_adjoint(&self) -> Result<LatticeMap> {
        if let Some(witness) = self.meet_violation() {
            return Err(Error::NotMeetPreserving {
                witness: witness.iter().map(|&i| self.domain.name(i).into()).collect(),
            });
        }
        let values = (0..self.codomain.n())
            .map(|a| {
                self.domain.meet_all(
                    (0..self.domain.n()).filter(|&b| self.codomain.le(a, self.values[b])),
                )
            })
            .collect();
        Ok(LatticeMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            values,
        })
    }
}

/// Every join-preserving map between two lattices. A join-preserving map
/// is determined by its values on join-irreducibles, so the search space
/// is `|codomain|^|irreducibles|` candidate assignments.
pub fn enumerate_join_preserving(
    domain: &CompleteLattice,
    codomain: &CompleteLattice,
) -> Vec<LatticeMap> {
    let irr = domain.join_irreducibles();
    let m = codomain.n();
    let candidates = (m as u64).checked_pow(irr.len() as u32);
    assert!(
        matches!(candidates, Some(c) if c <= 20_000_000),
        "join-preserving map enumeration is for tiny lattices only"
    );
    let mut out = Vec::new();
    let mut assign = vec![0usize; irr.len()];
    loop {
        let values: Vec<usize> = (0..domain.n())
            .map(|x| {
                codomain.join_all(
                    irr.iter()
                        .enumerate()
                        .filter(|(_, &j)| domain.le(j, x))
                        .map(|(k, _)| assign[k]),
                )
            })
            .collect();
        let map = LatticeMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            values,
        };
        // Rebuilding from irreducibles does not guarantee preservation;
        // keep only genuine morphisms, deduplicating distinct assignments
        // that collapse to the same map.
        if map.is_join_preserving()
            && irr.iter().enumerate().all(|(k, &j)| map.values[j] == assign[k])
            && !out.contains(&map)
        {
            out.push(map);
        }
        // Odometer over assignments.
        let mut k = 0;
        loop {
            if k == assign.len() {
                return out;
            }
            assign[k] += 1;
            if assign[k] < m {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

/// Chain `0 < 1 < .. < n-1` named by rank.
pub fn chain_poset(n: usize) -> FinitePoset {
    let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    FinitePoset::new(elements, &pairs).unwrap()
}

/// The lattice `M_k`: bottom, `k` incomparable middles, top.
pub fn diamond_poset(k: usize) -> FinitePoset {
    let mut elements = vec!["0".to_string()];
    elements.extend((0..k).map(|i| ((b'a' + i as u8) as char).to_string()));
    elements.push("1".to_string());
    let mut pairs = Vec::new();
    for i in 0..k {
        let m = ((b'a' + i as u8) as char).to_string();
        pairs.push(("0".to_string(), m.clone()));
        pairs.push((m, "1".to_string()));
    }
    if k == 0 {
        pairs.push(("0".to_string(), "1".to_string()));
    }
    FinitePoset::new(elements, &pairs).unwrap()
}

/// The Boolean lattice on `bits` generators named `a`, `b`, `c`.
pub fn boolean_poset(bits: usize) -> FinitePoset {
    assert!(bits <= 3);
    let letters = ["a", "b", "c"];
    let name = |mask: usize| -> String {
        if mask == 0 {
            "0".to_string()
        } else {
            (0..bits).filter(|i| mask >> i & 1 == 1).map(|i| letters[i]).collect()
        }
    };
    let elements: Vec<String> = (0..1usize << bits).map(name).collect();
    let n = elements.len();
    let mut le = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            le[i * n + j] = i & !j == 0;
        }
    }
    FinitePoset::from_le_matrix(elements, le).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn lattice(p: FinitePoset) -> CompleteLattice {
        CompleteLattice::from_poset(p).unwrap()
    }

    fn m2() -> CompleteLattice {
        lattice(diamond_poset(2))
    }

    #[test]
    fn two_chain_is_a_lattice() {
        let l = lattice(chain_poset(2));
        assert_eq!(l.join_all([0, 1]), 1);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
    }

    #[test]
    fn n_poset_is_not_a_lattice() {
        // a < c, b < c, b < d: {a,b} has no lower bound at all.
        let p = FinitePoset::new(
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            &[
                ("a".into(), "c".into()),
                ("b".into(), "c".into()),
                ("b".into(), "d".into()),
            ],
        )
        .unwrap();
        let err = CompleteLattice::from_poset(p).unwrap_err();
        assert!(matches!(err, Error::NotALattice { .. }));
    }

    #[test]
    fn diamond_joins_and_meets() {
        let l = m2();
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        assert_eq!(l.join2(a, b), l.top());
        assert_eq!(l.meet2(a, b), l.bottom());
        assert_eq!(l.join_all([]), l.bottom());
        assert_eq!(l.meet_all([]), l.top());
    }

    // Oracle: fold-joins must agree with a brute-force least-upper-bound
    // search over every subset, on every small lattice.
    #[test]
    fn joins_match_brute_force_on_all_small_lattices() {
        for n in 1..=4 {
            for p in poset::enumerate_posets(n) {
                let Ok(l) = CompleteLattice::from_poset(p) else {
                    continue;
                };
                for mask in 0..(1u32 << n) {
                    let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    assert_eq!(l.poset().lub(&s), Some(l.join_all(s.iter().copied())));
                    assert_eq!(l.poset().glb(&s), Some(l.meet_all(s.iter().copied())));
                }
            }
        }
    }

    #[test]
    fn join_is_meet_of_upper_bounds() {
        for p in poset::enumerate_posets(4) {
            let Ok(l) = CompleteLattice::from_poset(p) else {
                continue;
            };
            for mask in 0..16u32 {
                let s: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
                let ubs = l.poset().upper_bounds(&s);
                assert_eq!(
                    l.join_all(s.iter().copied()),
                    l.meet_all(ubs.iter().copied())
                );
            }
        }
    }

    #[test]
    fn adjoint_of_identity() {
        let l = m2();
        let id = LatticeMap::identity(&l);
        assert_eq!(id.right_adjoint().unwrap(), id);
        assert_eq!(id.left_adjoint().unwrap(), id);
    }

    #[test]
    fn adjoint_of_constant_bottom_is_constant_top() {
        let c = lattice(chain_poset(2));
        let g = LatticeMap::constant_bottom(&c, &c);
        let g_star = g.right_adjoint().unwrap();
        assert!(g_star.values().iter().all(|&v| v == c.top()));
        // Dual direction: the left adjoint of constant-top is constant-bottom.
        let h = LatticeMap::new(c.clone(), c.clone(), vec![c.top(); 2]).unwrap();
        let h_star = h.left_adjoint().unwrap();
        assert!(h_star.values().iter().all(|&v| v == c.bottom()));
    }

    #[test]
    fn right_adjoint_requires_join_preservation() {
        let l = m2();
        let a = l.index_of("a").unwrap();
        // Swap-like map that is not join-preserving: top to a.
        let mut values: Vec<usize> = (0..l.n()).collect();
        values[l.top()] = a;
        let g = LatticeMap::new(l.clone(), l, values).unwrap();
        assert!(matches!(
            g.right_adjoint(),
            Err(Error::NotJoinPreserving { .. })
        ));
    }

    fn all_small_lattices(max: usize) -> Vec<CompleteLattice> {
        let mut out = Vec::new();
        for n in 1..=max {
            for p in poset::enumerate_posets(n) {
                if let Ok(l) = CompleteLattice::from_poset(p) {
                    out.push(l);
                }
            }
        }
        out
    }

    #[test]
    fn adjunction_law_on_small_lattices() {
        let ls = all_small_lattices(3);
        for l1 in &ls {
            for l2 in &ls {
                for g in enumerate_join_preserving(l1, l2) {
                    let g_star = g.right_adjoint().unwrap();
                    for a in 0..l1.n() {
                        for b in 0..l2.n() {
                            assert_eq!(
                                l2.le(g.apply(a), b),
                                l1.le(a, g_star.apply(b)),
                                "adjunction fails"
                            );
                        }
                    }
                    assert!(g_star.is_meet_preserving());
                    assert_eq!(g_star.left_adjoint().unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn adjunction_law_on_six_element_lattices() {
        let ls = [
            lattice(chain_poset(6)),
            lattice(diamond_poset(4)),
            lattice(boolean_poset(2)),
            CompleteLattice::from_poset(
                // Hexagon: 0 < p < q' < 1 and 0 < q < p' < 1.
                FinitePoset::new(
                    ["0", "p", "q", "p'", "q'", "1"].iter().map(|s| s.to_string()).collect(),
                    &[
                        ("0".into(), "p".into()),
                        ("0".into(), "q".into()),
                        ("p".into(), "q'".into()),
                        ("q".into(), "p'".into()),
                        ("p'".into(), "1".into()),
                        ("q'".into(), "1".into()),
                    ],
                )
                .unwrap(),
            )
            .unwrap(),
        ];
        for l1 in &ls {
            for l2 in &ls {
                for g in enumerate_join_preserving(l1, l2) {
                    let g_star = g.right_adjoint().unwrap();
                    for a in 0..l1.n() {
                        for b in 0..l2.n() {
                            assert_eq!(l2.le(g.apply(a), b), l1.le(a, g_star.apply(b)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjoints_reverse_composition() {
        let c3 = lattice(chain_poset(3));
        let l = m2();
        for g1 in enumerate_join_preserving(&c3, &l) {
            for g2 in enumerate_join_preserving(&l, &c3) {
                let comp = LatticeMap::compose(&g2, &g1).unwrap();
                assert!(comp.is_join_preserving());
                let lhs = comp.right_adjoint().unwrap();
                let rhs = LatticeMap::compose(
                    &g1.right_adjoint().unwrap(),
                    &g2.right_adjoint().unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn irreducible_enumeration_matches_brute_force() {
        let ls = [lattice(chain_poset(3)), m2(), lattice(boolean_poset(2))];
        for l1 in &ls {
            for l2 in &ls {
                let fast = enumerate_join_preserving(l1, l2);
                let mut brute = Vec::new();
                let mut values = vec![0usize; l1.n()];
                'odometer: loop {
                    let m = LatticeMap::new(l1.clone(), l2.clone(), values.clone()).unwrap();
                    if m.is_join_preserving() {
                        brute.push(m);
                    }
                    let mut k = 0;
                    loop {
                        if k == values.len() {
                            break 'odometer;
                        }
                        values[k] += 1;
                        if values[k] < l2.n() {
                            break;
                        }
                        values[k] = 0;
                        k += 1;
                    }
                }
                assert_eq!(fast.len(), brute.len(), "between {l1:?} and {l2:?}");
                for m in &brute {
                    assert!(fast.contains(m));
                }
            }
        }
    }

    #[test]
    fn boolean_atoms() {
        let b3 = lattice(boolean_poset(3));
        assert_eq!(b3.atoms().len(), 3);
        assert!(b3.is_atomistic());
        assert_eq!(b3.join_irreducibles().len(), 3);
        let c3 = lattice(chain_poset(3));
        assert!(!c3.is_atomistic());
    }
}
