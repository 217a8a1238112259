//! Finite partially ordered sets with explicit order matrices.

use crate::error::{Error, Result};

/// A finite poset. The order relation is stored reflexively and
/// transitively closed; element iteration order is the input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    le: Vec<bool>, // row-major n*n, le[i*n+j] <=> elements[i] <= elements[j]
}

impl FinitePoset {
    /// Builds a poset from a list of elements and `a <= b` pairs. The
    /// reflexive-transitive closure of the pairs is taken; antisymmetry
    /// violations are rejected with the offending pair.
    pub fn new(elements: Vec<String>, pairs: &[(String, String)]) -> Result<Self> {
        for (k, name) in elements.iter().enumerate() {
            if elements[..k].contains(name) {
                return Err(Error::DuplicateElement { name: name.clone() });
            }
        }
        let n = elements.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        let index_of = |name: &str| -> Result<usize> {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| Error::UnknownElement {
                    name: name.to_string(),
                })
        };
        for (a, b) in pairs {
            let i = index_of(a)?;
            let j = index_of(b)?;
            le[i * n + j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i * n + j] && le[j * n + i] {
                    return Err(Error::Cycle {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                    });
                }
            }
        }
        Ok(FinitePoset { elements, le })
    }

    /// Wraps an already reflexive, antisymmetric, transitive matrix.
    pub fn from_le_matrix(elements: Vec<String>, le: Vec<bool>) -> Result<Self> {
        let n = elements.len();
        if le.len() != n * n {
            return Err(Error::Shape {
                detail: format!("order matrix has {} entries, expected {}", le.len(), n * n),
            });
        }
        for i in 0..n {
            if !le[i * n + i] {
                return Err(Error::Shape {
                    detail: format!("order matrix is not reflexive at `{}`", elements[i]),
                });
            }
            for j in 0..n {
                if i != j && le[i * n + j] && le[j * n + i] {
                    return Err(Error::Cycle {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                    });
                }
                for k in 0..n {
                    if le[i * n + j] && le[j * n + k] && !le[i * n + k] {
                        return Err(Error::Shape {
                            detail: format!(
                                "order matrix is not transitive at `{}`,`{}`,`{}`",
                                elements[i], elements[j], elements[k]
                            ),
                        });
                    }
                }
            }
        }
        Ok(FinitePoset { elements, le })
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement {
                name: name.to_string(),
            })
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.n() + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    /// All `a <= b` pairs with `a != b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.lt(i, j))
            .collect()
    }

    pub fn upper_bounds(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&u| s.iter().all(|&x| self.le(x, u)))
            .collect()
    }

    pub fn lower_bounds(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&u| s.iter().all(|&x| self.le(u, x)))
            .collect()
    }

    /// Least upper bound by brute force: the upper bound below all others.
    pub fn lub(&self, s: &[usize]) -> Option<usize> {
        let ubs = self.upper_bounds(s);
        ubs.iter()
            .copied()
            .find(|&c| ubs.iter().all(|&u| self.le(c, u)))
    }

    pub fn glb(&self, s: &[usize]) -> Option<usize> {
        let lbs = self.lower_bounds(s);
        lbs.iter()
            .copied()
            .find(|&c| lbs.iter().all(|&u| self.le(u, c)))
    }

    /// Covering pairs `(i, j)`: the transitive reduction of the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The induced subposet on `keep` (element names preserved, order of
    /// `keep` becomes the iteration order).
    pub fn restrict(&self, keep: &[usize]) -> FinitePoset {
        let m = keep.len();
        let mut le = vec![false; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                le[a * m + b] = self.le(i, j);
            }
        }
        FinitePoset {
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            le,
        }
    }
}

/// Every labeled poset on `n` elements (`e0`, `e1`, ...). Intended for
/// exhaustive small-instance suites; `n <= 5`.
pub fn enumerate_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n <= 5, "poset enumeration is for tiny n only");
    let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let bits = off_diag.len();
    let mut out = Vec::new();
    'outer: for mask in 0..(1u64 << bits) {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (b, &(i, j)) in off_diag.iter().enumerate() {
            if mask >> b & 1 == 1 {
                le[i * n + j] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i * n + j] && le[j * n + i] {
                    continue 'outer;
                }
                for k in 0..n {
                    if le[i * n + j] && le[j * n + k] && !le[i * n + k] {
                        continue 'outer;
                    }
                }
            }
        }
        out.push(FinitePoset {
            elements: elements.clone(),
            le,
        });
    }
    out
}

/// Searches for an order isomorphism (a bijection preserving and
/// reflecting the order) by backtracking over rank-compatible candidates.
/// Sound and complete below the size cap.
pub fn find_order_isomorphism(
    a: &FinitePoset,
    b: &FinitePoset,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    if a.n() > cap || b.n() > cap {
        return Err(Error::SizeCapExceeded {
            what: "order isomorphism search",
            size: a.n().max(b.n()),
            cap,
        });
    }
    if a.n() != b.n() {
        return Ok(None);
    }
    let n = a.n();
    let profile = |p: &FinitePoset, i: usize| -> (usize, usize) {
        (
            (0..n).filter(|&j| p.le(j, i)).count(),
            (0..n).filter(|&j| p.le(i, j)).count(),
        )
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();

    fn go(
        i: usize,
        a: &FinitePoset,
        b: &FinitePoset,
        pa: &[(usize, usize)],
        pb: &[(usize, usize)],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.n();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || pa[i] != pb[j] {
                continue;
            }
            let consistent = (0..i).all(|k| {
                a.le(i, k) == b.le(j, assign[k]) && a.le(k, i) == b.le(assign[k], j)
            });
            if consistent {
                assign.push(j);
                used[j] = true;
                if go(i + 1, a, b, pa, pb, assign, used) {
                    return true;
                }
                used[j] = false;
                assign.pop();
            }
        }
        false
    }

    let mut assign = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if go(0, a, b, &pa, &pb, &mut assign, &mut used) {
        Ok(Some(assign))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn pairs(ps: &[(&str, &str)]) -> Vec<(String, String)> {
        ps.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    pub(crate) fn diamond() -> FinitePoset {
        FinitePoset::new(
            named(&["0", "a", "b", "1"]),
            &pairs(&[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]),
        )
        .unwrap()
    }

    #[test]
    fn one_element_is_reflexive() {
        let p = FinitePoset::new(named(&["a"]), &[]).unwrap();
        assert_eq!(p.n(), 1);
        assert!(p.le(0, 0));
    }

    #[test]
    fn diamond_closes_transitively() {
        let p = diamond();
        let bot = p.index_of("0").unwrap();
        let top = p.index_of("1").unwrap();
        // 0 <= 1 only via the closure.
        assert!(p.le(bot, top));
        let a = p.index_of("a").unwrap();
        let b = p.index_of("b").unwrap();
        assert!(!p.le(a, b) && !p.le(b, a));
    }

    // Oracle: reachability along declared pairs must agree with the closure.
    #[test]
    fn closure_matches_path_search() {
        let names = named(&["0", "a", "b", "1"]);
        let ps = pairs(&[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]);
        let p = FinitePoset::new(names.clone(), &ps).unwrap();
        let idx = |s: &str| names.iter().position(|n| n == s).unwrap();
        let reach = |from: usize, to: usize| -> bool {
            let mut seen = vec![false; names.len()];
            let mut stack = vec![from];
            while let Some(v) = stack.pop() {
                if v == to {
                    return true;
                }
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                for (a, b) in &ps {
                    if idx(a) == v {
                        stack.push(idx(b));
                    }
                }
            }
            false
        };
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p.le(i, j), i == j || reach(i, j), "{i} {j}");
            }
        }
    }

    #[test]
    fn mutual_pairs_are_cycles() {
        let err = FinitePoset::new(named(&["a", "b"]), &pairs(&[("a", "b"), ("b", "a")]))
            .unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }));
    }

    #[test]
    fn unknown_and_duplicate_elements() {
        assert!(matches!(
            FinitePoset::new(named(&["a"]), &pairs(&[("a", "z")])),
            Err(Error::UnknownElement { .. })
        ));
        assert!(matches!(
            FinitePoset::new(named(&["a", "a"]), &[]),
            Err(Error::DuplicateElement { .. })
        ));
    }

    #[test]
    fn covers_drop_transitive_edges() {
        let p = FinitePoset::new(
            named(&["0", "m", "1"]),
            &pairs(&[("0", "m"), ("m", "1"), ("0", "1")]),
        )
        .unwrap();
        let covers = p.covers();
        assert_eq!(covers.len(), 2);
        assert!(!covers.contains(&(0, 2)));
    }

    #[test]
    fn poset_counts_match_oeis() {
        // Labeled posets on n elements: 1, 1, 3, 19, 219.
        assert_eq!(enumerate_posets(0).len(), 1);
        assert_eq!(enumerate_posets(1).len(), 1);
        assert_eq!(enumerate_posets(2).len(), 3);
        assert_eq!(enumerate_posets(3).len(), 19);
        assert_eq!(enumerate_posets(4).len(), 219);
    }

    #[test]
    fn isomorphism_identity_and_mismatch() {
        let d = diamond();
        let iso = find_order_isomorphism(&d, &d, 10).unwrap().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.le(i, j), d.le(iso[i], iso[j]));
            }
        }
        let chain3 = FinitePoset::new(named(&["0", "m", "1"]), &pairs(&[("0", "m"), ("m", "1")]))
            .unwrap();
        assert!(find_order_isomorphism(&chain3, &d, 10).unwrap().is_none());
    }

    #[test]
    fn isomorphism_cap() {
        let p = enumerate_posets(3).pop().unwrap();
        assert!(matches!(
            find_order_isomorphism(&p, &p, 2),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
