//! State transitions between resolutions and the categories they form.
//!
//! A possible-state transition is a union-preserving map between the
//! powersets of two state sets, stored by singleton images (so union
//! preservation is structural). A definite-property transition is a
//! join-preserving map between the image lattices. Four hom-set regimes
//! arise: state-level or property-level, each with or without the
//! empty-kernel side conditions. Each hom-set is join-complete under the
//! pointwise order, contains a bottom morphism, and composition
//! distributes over joins on both sides; `verify_quantaloid_laws` checks
//! all of that on enumerable samples.

use crate::error::{Error, Result};
use crate::lattice::{enumerate_join_preserving, LatticeMap};
use crate::report::Report;
use crate::resolution::{Factorization, Resolution};
use crate::subset::{powerset, Subset};

/// Default cap on state-set sizes for hom-set enumeration.
pub const DEFAULT_HOM_CAP: usize = 3;

/// A definite-property transition is just a join-preserving map between
/// image lattices; no extra structure is needed.
pub type PropertyTransition = LatticeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibleTransition {
    source: Resolution,
    target: Resolution,
    images: Vec<Subset>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateConditions {
    /// `f(T)` empty exactly when `T` is empty.
    pub a_empty: bool,
    /// Equal source values force equal target values of the images.
    pub a_sharp: bool,
    /// Closure continuity: `f(C1(T))` contained in `C2(f(T))`.
    pub a_star: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyConditions {
    /// Join preservation.
    pub a_join: bool,
    /// Strict bottom kernel in both directions.
    pub a_zero: bool,
}

fn apply_images(images: &[Subset], t: Subset) -> Subset {
    t.iter().fold(Subset::EMPTY, |acc, i| acc.union(images[i]))
}

/// Computes the three side conditions of a state-level map, with the
/// factorizations supplied by the caller (they are the expensive part).
/// The image-compatibility and closure-continuity checks are independent;
/// their agreement is a theorem, so a mismatch reports an internal bug.
pub fn state_conditions(
    source: &Resolution,
    source_fact: &Factorization,
    target: &Resolution,
    target_fact: &Factorization,
    images: &[Subset],
) -> Result<StateConditions> {
    let n1 = source.n_points();
    let a_empty = images.iter().all(|im| !im.is_empty());
    let mut a_sharp = true;
    let mut assigned: Vec<Option<usize>> = vec![None; source.target().n()];
    for t in powerset(n1) {
        let v = source.value(t);
        let w = target.value(apply_images(images, t));
        match assigned[v] {
            None => assigned[v] = Some(w),
            Some(prev) if prev != w => {
                a_sharp = false;
                break;
            }
            _ => {}
        }
    }
    let mut a_star = true;
    for t in powerset(n1) {
        let lhs = apply_images(images, source_fact.closure_of(t));
        let rhs = target_fact.closure_of(apply_images(images, t));
        if !lhs.is_subset_of(rhs) {
            a_star = false;
            break;
        }
    }
    if a_sharp != a_star {
        return Err(Error::SharpStarMismatch {
            detail: format!("images {images:?}"),
        });
    }
    Ok(StateConditions {
        a_empty,
        a_sharp,
        a_star,
    })
}

impl PossibleTransition {
    pub fn new(source: Resolution, target: Resolution, images: Vec<Subset>) -> Result<Self> {
        if images.len() != source.n_points() {
            return Err(Error::Shape {
                detail: format!(
                    "transition has {} singleton images for {} states",
                    images.len(),
                    source.n_points()
                ),
            });
        }
        let full = target.full();
        if images.iter().any(|im| !im.is_subset_of(full)) {
            return Err(Error::Shape {
                detail: "singleton image mentions unknown target states".into(),
            });
        }
        Ok(PossibleTransition {
            source,
            target,
            images,
        })
    }

    pub fn identity(res: &Resolution) -> Self {
        PossibleTransition {
            source: res.clone(),
            target: res.clone(),
            images: (0..res.n_points()).map(Subset::singleton).collect(),
        }
    }

    /// The bottom morphism: everything to the empty set. It fails the
    /// empty-kernel condition on purpose and is still admitted in every
    /// hom-set, as the empty join of morphisms.
    pub fn bottom(source: &Resolution, target: &Resolution) -> Self {
        PossibleTransition {
            source: source.clone(),
            target: target.clone(),
            images: vec![Subset::EMPTY; source.n_points()],
        }
    }

    pub fn source(&self) -> &Resolution {
        &self.source
    }

    pub fn target(&self) -> &Resolution {
        &self.target
    }

    pub fn singleton_images(&self) -> &[Subset] {
        &self.images
    }

    pub fn singleton_image(&self, i: usize) -> Subset {
        self.images[i]
    }

    pub fn apply(&self, t: Subset) -> Subset {
        apply_images(&self.images, t)
    }

    pub fn is_bottom(&self) -> bool {
        self.images.iter().all(|im| im.is_empty())
    }

    pub fn conditions(&self) -> Result<StateConditions> {
        let sf = self.source.factorize();
        let tf = self.target.factorize();
        state_conditions(&self.source, &sf, &self.target, &tf, &self.images)
    }

    pub fn leq(&self, other: &PossibleTransition) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| a.is_subset_of(b))
    }

    pub fn compose(outer: &PossibleTransition, inner: &PossibleTransition) -> Result<Self> {
        if inner.target != outer.source {
            return Err(Error::NotComposable);
        }
        Ok(PossibleTransition {
            source: inner.source.clone(),
            target: outer.target.clone(),
            images: inner.images.iter().map(|&im| outer.apply(im)).collect(),
        })
    }

    /// Pointwise join over a common hom-set; the empty family gives the
    /// bottom morphism.
    pub fn join(
        source: &Resolution,
        target: &Resolution,
        maps: &[PossibleTransition],
    ) -> Result<Self> {
        for m in maps {
            if &m.source != source || &m.target != target {
                return Err(Error::NotComposable);
            }
        }
        let images = (0..source.n_points())
            .map(|i| {
                maps.iter()
                    .fold(Subset::EMPTY, |acc, m| acc.union(m.images[i]))
            })
            .collect();
        Ok(PossibleTransition {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }
}

/// Side conditions of a property-level map.
pub fn property_conditions(g: &LatticeMap) -> PropertyConditions {
    PropertyConditions {
        a_join: g.is_join_preserving(),
        a_zero: g.is_bottom_strict(),
    }
}

/// The four hom-set regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomSetKind {
    /// State-level, with the empty-kernel condition.
    PossibleStrict,
    /// State-level, kernels allowed ("partially absurd" transitions).
    Possible,
    /// Property-level, with the strict bottom-kernel condition.
    PropertyStrict,
    /// Property-level, join preservation only.
    Property,
}

impl HomSetKind {
    pub fn is_strict(self) -> bool {
        matches!(self, HomSetKind::PossibleStrict | HomSetKind::PropertyStrict)
    }

    pub fn is_state_level(self) -> bool {
        matches!(self, HomSetKind::PossibleStrict | HomSetKind::Possible)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HomSetKind::PossibleStrict => "res-sharp-strict",
            HomSetKind::Possible => "res-sharp-nonstrict",
            HomSetKind::PropertyStrict => "res-zero-strict",
            HomSetKind::Property => "res-nonstrict",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "res-sharp-strict" => Ok(HomSetKind::PossibleStrict),
            "res-sharp-nonstrict" | "res-sharp" => Ok(HomSetKind::Possible),
            "res-zero-strict" | "res-zero" => Ok(HomSetKind::PropertyStrict),
            "res-nonstrict" | "res" => Ok(HomSetKind::Property),
            other => Err(Error::Shape {
                detail: format!("unknown morphism kind `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomMaps {
    Possible(Vec<PossibleTransition>),
    Property(Vec<LatticeMap>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSet {
    pub kind: HomSetKind,
    pub source: Resolution,
    pub target: Resolution,
    pub maps: HomMaps,
}

impl HomSet {
    pub fn len(&self) -> usize {
        match &self.maps {
            HomMaps::Possible(v) => v.len(),
            HomMaps::Property(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn possible(&self) -> Option<&[PossibleTransition]> {
        match &self.maps {
            HomMaps::Possible(v) => Some(v),
            HomMaps::Property(_) => None,
        }
    }

    pub fn property(&self) -> Option<&[LatticeMap]> {
        match &self.maps {
            HomMaps::Property(v) => Some(v),
            HomMaps::Possible(_) => None,
        }
    }
}

/// Membership in the state-level hom-set: the bottom morphism always
/// belongs; otherwise image compatibility is required, plus the empty
/// kernel in the strict regime.
pub fn possible_member(conds: StateConditions, is_bottom: bool, strict: bool) -> bool {
    if is_bottom {
        return true;
    }
    conds.a_sharp && (!strict || conds.a_empty)
}

/// Membership in the property-level hom-set: the constant-bottom morphism
/// always belongs; otherwise join preservation, plus the strict bottom
/// kernel in the strict regime.
pub fn property_member(g: &LatticeMap, strict: bool) -> bool {
    if g.is_constant_bottom() {
        return true;
    }
    g.is_join_preserving() && (!strict || g.is_bottom_strict())
}

/// All state-level morphisms of the given regime.
pub fn possible_maps(
    source: &Resolution,
    target: &Resolution,
    strict: bool,
    cap: usize,
) -> Result<Vec<PossibleTransition>> {
    let n1 = source.n_points();
    let n2 = target.n_points();
    if n1 > cap || n2 > cap {
        return Err(Error::SizeCapExceeded {
            what: "hom-set enumeration",
            size: n1.max(n2),
            cap,
        });
    }
    // Candidate maps grow as 2^(n1*n2); refuse before memory does.
    if n1 * n2 > 20 {
        return Err(Error::SizeCapExceeded {
            what: "hom-set candidate count",
            size: n1 * n2,
            cap: 20,
        });
    }
    let sf = source.factorize();
    let tf = target.factorize();
    let cells = 1u32 << n2;
    let mut out = Vec::new();
    let mut images = vec![Subset::EMPTY; n1];
    loop {
        let conds = state_conditions(source, &sf, target, &tf, &images)?;
        let is_bottom = images.iter().all(|im| im.is_empty());
        if possible_member(conds, is_bottom, strict) {
            out.push(PossibleTransition {
                source: source.clone(),
                target: target.clone(),
                images: images.clone(),
            });
        }
        let mut k = 0;
        loop {
            if k == n1 {
                return Ok(out);
            }
            images[k].0 += 1;
            if images[k].0 < cells {
                break;
            }
            images[k] = Subset::EMPTY;
            k += 1;
        }
    }
}

/// All property-level morphisms of the given regime, as maps between the
/// image lattices.
pub fn property_maps(
    source: &Resolution,
    target: &Resolution,
    strict: bool,
) -> Result<Vec<LatticeMap>> {
    let im1 = source.image_lattice();
    let im2 = target.image_lattice();
    let candidates = (im2.n() as u64).checked_pow(im1.join_irreducibles().len() as u32);
    if !matches!(candidates, Some(c) if c <= 1_000_000) {
        return Err(Error::SizeCapExceeded {
            what: "property hom-set enumeration",
            size: im1.n().max(im2.n()),
            cap: 1_000_000,
        });
    }
    let mut out: Vec<LatticeMap> = enumerate_join_preserving(&im1, &im2)
        .into_iter()
        .filter(|g| property_member(g, strict))
        .collect();
    let bottom = LatticeMap::constant_bottom(&im1, &im2);
    if !out.contains(&bottom) {
        out.insert(0, bottom);
    }
    Ok(out)
}

pub fn enumerate_hom_set(
    source: &Resolution,
    target: &Resolution,
    kind: HomSetKind,
    cap: usize,
) -> Result<HomSet> {
    let maps = match kind {
        HomSetKind::PossibleStrict | HomSetKind::Possible => HomMaps::Possible(possible_maps(
            source,
            target,
            kind.is_strict(),
            cap,
        )?),
        HomSetKind::PropertyStrict | HomSetKind::Property => {
            HomMaps::Property(property_maps(source, target, kind.is_strict())?)
        }
    };
    Ok(HomSet {
        kind,
        source: source.clone(),
        target: target.clone(),
        maps,
    })
}

// ---------------------------------------------------------------------
// Quantaloid laws, generically over the two morphism carriers.
// ---------------------------------------------------------------------

trait HomFamily {
    type Morph: Clone + PartialEq;
    fn object_count(&self) -> usize;
    fn hom(&self, a: usize, b: usize) -> &[Self::Morph];
    fn compose(&self, outer: &Self::Morph, inner: &Self::Morph) -> Self::Morph;
    fn join(&self, a: usize, b: usize, maps: &[&Self::Morph]) -> Self::Morph;
    fn identity(&self, a: usize) -> Self::Morph;
    fn contains(&self, a: usize, b: usize, f: &Self::Morph) -> bool;
    fn is_bottom(&self, f: &Self::Morph) -> bool;
}

struct PossibleFamily {
    objects: Vec<Resolution>,
    homs: Vec<Vec<PossibleTransition>>, // homs[a * n + b]
}

impl HomFamily for PossibleFamily {
    type Morph = PossibleTransition;

    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn hom(&self, a: usize, b: usize) -> &[PossibleTransition] {
        &self.homs[a * self.objects.len() + b]
    }

    fn compose(&self, outer: &PossibleTransition, inner: &PossibleTransition) -> PossibleTransition {
        PossibleTransition::compose(outer, inner).expect("law suite composes along matching objects")
    }

    fn join(&self, a: usize, b: usize, maps: &[&PossibleTransition]) -> PossibleTransition {
        let owned: Vec<PossibleTransition> = maps.iter().map(|&m| m.clone()).collect();
        PossibleTransition::join(&self.objects[a], &self.objects[b], &owned)
            .expect("law suite joins parallel morphisms")
    }

    fn identity(&self, a: usize) -> PossibleTransition {
        PossibleTransition::identity(&self.objects[a])
    }

    fn contains(&self, a: usize, b: usize, f: &PossibleTransition) -> bool {
        self.hom(a, b).contains(f)
    }

    fn is_bottom(&self, f: &PossibleTransition) -> bool {
        f.is_bottom()
    }
}

struct PropertyFamily {
    images: Vec<crate::lattice::CompleteLattice>,
    homs: Vec<Vec<LatticeMap>>,
}

impl HomFamily for PropertyFamily {
    type Morph = LatticeMap;

    fn object_count(&self) -> usize {
        self.images.len()
    }

    fn hom(&self, a: usize, b: usize) -> &[LatticeMap] {
        &self.homs[a * self.images.len() + b]
    }

    fn compose(&self, outer: &LatticeMap, inner: &LatticeMap) -> LatticeMap {
        LatticeMap::compose(outer, inner).expect("law suite composes along matching objects")
    }

    fn join(&self, a: usize, b: usize, maps: &[&LatticeMap]) -> LatticeMap {
        let owned: Vec<LatticeMap> = maps.iter().map(|&m| m.clone()).collect();
        LatticeMap::pointwise_join(&self.images[a], &self.images[b], &owned)
            .expect("law suite joins parallel morphisms")
    }

    fn identity(&self, a: usize) -> LatticeMap {
        LatticeMap::identity(&self.images[a])
    }

    fn contains(&self, a: usize, b: usize, f: &LatticeMap) -> bool {
        self.hom(a, b).contains(f)
    }

    fn is_bottom(&self, f: &LatticeMap) -> bool {
        f.is_constant_bottom()
    }
}

fn run_law_suite<F: HomFamily>(family: &F, report: &mut Report) {
    let n = family.object_count();
    let hom_name = |a: usize, b: usize| format!("hom(O{a},O{b})");

    for a in 0..n {
        for b in 0..n {
            let inst = hom_name(a, b);
            let hom = family.hom(a, b);
            // Bottom morphism present (the empty join).
            let bottom = family.join(a, b, &[]);
            report.check(
                "hom-set-has-bottom",
                &inst,
                family.contains(a, b, &bottom) && family.is_bottom(&bottom),
            );
            // Identity present in endo hom-sets.
            if a == b {
                report.check(
                    "hom-set-has-identity",
                    &inst,
                    family.contains(a, a, &family.identity(a)),
                );
            }
            // Pairwise joins stay inside: with the bottom this makes the
            // hom-set a join-complete semilattice.
            let closed = hom.iter().enumerate().all(|(i, f)| {
                hom[i..]
                    .iter()
                    .all(|g| family.contains(a, b, &family.join(a, b, &[f, g])))
            });
            report.check("hom-set-join-closed", &inst, closed);
            // Identity laws.
            let id_laws = hom.iter().all(|f| {
                family.compose(&family.identity(b), f) == *f
                    && family.compose(f, &family.identity(a)) == *f
            });
            report.check("identity-laws", &inst, id_laws);
        }
    }

    // Associativity over all composable triples.
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let inst = format!("O{a}->O{b}->O{c}->O{d}");
                    let ok = family.hom(a, b).iter().all(|f| {
                        family.hom(b, c).iter().all(|g| {
                            family.hom(c, d).iter().all(|h| {
                                family.compose(h, &family.compose(g, f))
                                    == family.compose(&family.compose(h, g), f)
                            })
                        })
                    });
                    report.check("associativity", &inst, ok);
                }
            }
        }
    }

    // Two-sided distributivity of composition over joins, including the
    // empty join (composition with bottom is bottom).
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let inst = format!("O{a}->O{b}->O{c}");
                let bottom_ab = family.join(a, b, &[]);
                let bottom_bc = family.join(b, c, &[]);
                let mut ok = true;
                for g in family.hom(b, c) {
                    if family.compose(g, &bottom_ab) != family.join(a, c, &[]) {
                        ok = false;
                    }
                    for f1 in family.hom(a, b) {
                        for f2 in family.hom(a, b) {
                            let lhs = family.compose(g, &family.join(a, b, &[f1, f2]));
                            let rhs = family.join(
                                a,
                                c,
                                &[&family.compose(g, f1), &family.compose(g, f2)],
                            );
                            if lhs != rhs {
                                ok = false;
                            }
                        }
                    }
                }
                report.check("left-distributivity", &inst, ok);
                let mut ok = true;
                for f in family.hom(a, b) {
                    if family.compose(&bottom_bc, f) != family.join(a, c, &[]) {
                        ok = false;
                    }
                    for g1 in family.hom(b, c) {
                        for g2 in family.hom(b, c) {
                            let lhs = family.compose(&family.join(b, c, &[g1, g2]), f);
                            let rhs = family.join(
                                a,
                                c,
                                &[&family.compose(g1, f), &family.compose(g2, f)],
                            );
                            if lhs != rhs {
                                ok = false;
                            }
                        }
                    }
                }
                report.check("right-distributivity", &inst, ok);
            }
        }
    }
}

/// Checks associativity, identity laws, hom-set join-completeness with
/// bottom, and two-sided distributivity on every hom-set between the
/// sample objects, for the chosen regime.
pub fn verify_quantaloid_laws(
    objects: &[Resolution],
    kind: HomSetKind,
    cap: usize,
) -> Result<Report> {
    let n = objects.len();
    let mut report = Report::new();
    match kind {
        HomSetKind::PossibleStrict | HomSetKind::Possible => {
            let mut homs = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    homs.push(possible_maps(&objects[a], &objects[b], kind.is_strict(), cap)?);
                }
            }
            run_law_suite(
                &PossibleFamily {
                    objects: objects.to_vec(),
                    homs,
                },
                &mut report,
            );
        }
        HomSetKind::PropertyStrict | HomSetKind::Property => {
            let mut homs = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    homs.push(property_maps(&objects[a], &objects[b], kind.is_strict())?);
                }
            }
            run_law_suite(
                &PropertyFamily {
                    images: objects.iter().map(|o| o.image_lattice()).collect(),
                    homs,
                },
                &mut report,
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain_poset;
    use crate::resolution::tests::two_state_chain;

    fn named(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn one_point() -> Resolution {
        Resolution::new(named(&["p"]), chain_poset(2), vec![0, 1], true).unwrap()
    }

    #[test]
    fn apply_unions_singleton_images() {
        let r = two_state_chain();
        let id = PossibleTransition::identity(&r);
        for t in powerset(2) {
            assert_eq!(id.apply(t), t);
        }
        let bottom = PossibleTransition::bottom(&r, &r);
        assert_eq!(bottom.apply(Subset::full(2)), Subset::EMPTY);

        // p -> {a}, q -> {a,b} on a discrete-ish pair.
        let f = PossibleTransition::new(
            r.clone(),
            r.clone(),
            vec![Subset::singleton(0), Subset::full(2)],
        )
        .unwrap();
        assert_eq!(f.apply(Subset::full(2)), Subset::full(2));
    }

    #[test]
    fn identity_meets_all_conditions() {
        let r = two_state_chain();
        let id = PossibleTransition::identity(&r);
        let c = id.conditions().unwrap();
        assert!(c.a_empty && c.a_sharp && c.a_star);
    }

    #[test]
    fn collapse_into_one_closed_set_is_image_compatible() {
        // Both states to the same point: values of images are constant, so
        // image compatibility holds even though the source values differ.
        let r = two_state_chain();
        let f = PossibleTransition::new(
            r.clone(),
            r.clone(),
            vec![Subset::singleton(0), Subset::singleton(0)],
        )
        .unwrap();
        assert_ne!(r.value(Subset::singleton(0)), r.value(Subset::singleton(1)));
        let c = f.conditions().unwrap();
        assert!(c.a_sharp);
    }

    #[test]
    fn empty_singleton_image_breaks_the_kernel_condition() {
        let r = two_state_chain();
        let f = PossibleTransition::new(
            r.clone(),
            r.clone(),
            vec![Subset::EMPTY, Subset::singleton(1)],
        )
        .unwrap();
        let c = f.conditions().unwrap();
        assert!(!c.a_empty);
    }

    #[test]
    fn composition_with_identity() {
        let r = two_state_chain();
        let f = PossibleTransition::new(
            r.clone(),
            r.clone(),
            vec![Subset::singleton(1), Subset::singleton(1)],
        )
        .unwrap();
        let id = PossibleTransition::identity(&r);
        assert_eq!(PossibleTransition::compose(&f, &id).unwrap(), f);
        assert_eq!(PossibleTransition::compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn join_is_pointwise_union() {
        let r = one_point();
        let f = PossibleTransition::new(r.clone(), r.clone(), vec![Subset::singleton(0)]).unwrap();
        let g = PossibleTransition::bottom(&r, &r);
        let join = PossibleTransition::join(&r, &r, &[f.clone(), g]).unwrap();
        assert_eq!(join, f);
        let empty = PossibleTransition::join(&r, &r, &[]).unwrap();
        assert!(empty.is_bottom());
    }

    #[test]
    fn one_point_hom_set_is_bottom_and_identity() {
        let r = one_point();
        let hs = enumerate_hom_set(&r, &r, HomSetKind::PossibleStrict, DEFAULT_HOM_CAP).unwrap();
        let maps = hs.possible().unwrap();
        assert_eq!(maps.len(), 2);
        assert!(maps.iter().any(|m| m.is_bottom()));
        assert!(maps.contains(&PossibleTransition::identity(&r)));
    }

    #[test]
    fn hom_sets_contain_bottom_and_are_join_closed() {
        let objs = [one_point(), two_state_chain()];
        for kind in [HomSetKind::PossibleStrict, HomSetKind::Possible] {
            for a in &objs {
                for b in &objs {
                    let hs = enumerate_hom_set(a, b, kind, DEFAULT_HOM_CAP).unwrap();
                    let maps = hs.possible().unwrap();
                    assert!(maps.iter().any(|m| m.is_bottom()));
                    for f in maps {
                        for g in maps {
                            let j = PossibleTransition::join(a, b, &[f.clone(), g.clone()])
                                .unwrap();
                            assert!(maps.contains(&j), "join must stay inside the hom-set");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_and_join_preserve_conditions() {
        let objs = [one_point(), two_state_chain()];
        for a in &objs {
            for b in &objs {
                let ab = possible_maps(a, b, true, DEFAULT_HOM_CAP).unwrap();
                for c in &objs {
                    let bc = possible_maps(b, c, true, DEFAULT_HOM_CAP).unwrap();
                    for f in &ab {
                        for g in &bc {
                            let comp = PossibleTransition::compose(g, f).unwrap();
                            let conds = comp.conditions().unwrap();
                            assert!(possible_member(conds, comp.is_bottom(), true));
                        }
                    }
                }
                for f in &ab {
                    for g in &ab {
                        let j = PossibleTransition::join(a, b, &[f.clone(), g.clone()]).unwrap();
                        let conds = j.conditions().unwrap();
                        assert!(possible_member(conds, j.is_bottom(), true));
                    }
                }
            }
        }
    }

    #[test]
    fn composition_distributes_over_joins() {
        let r = two_state_chain();
        let hom = possible_maps(&r, &r, true, DEFAULT_HOM_CAP).unwrap();
        for g in &hom {
            for f1 in &hom {
                for f2 in &hom {
                    let lhs = PossibleTransition::compose(
                        g,
                        &PossibleTransition::join(&r, &r, &[f1.clone(), f2.clone()]).unwrap(),
                    )
                    .unwrap();
                    let rhs = PossibleTransition::join(
                        &r,
                        &r,
                        &[
                            PossibleTransition::compose(g, f1).unwrap(),
                            PossibleTransition::compose(g, f2).unwrap(),
                        ],
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn image_compatibility_agrees_with_continuity_everywhere() {
        // The sentinel error would fire if the two independent checks ever
        // disagreed; run every map between small resolutions.
        let posets = crate::poset::enumerate_posets(2);
        let mut resolutions = Vec::new();
        for p in &posets {
            resolutions.extend(crate::resolution::enumerate_resolutions(2, p, true).unwrap());
        }
        for a in &resolutions {
            for b in &resolutions {
                let sf = a.factorize();
                let tf = b.factorize();
                let mut images = vec![Subset::EMPTY; a.n_points()];
                loop {
                    state_conditions(a, &sf, b, &tf, &images).unwrap();
                    let mut k = 0;
                    loop {
                        if k == images.len() {
                            break;
                        }
                        images[k].0 += 1;
                        if images[k].0 < (1 << b.n_points()) {
                            break;
                        }
                        images[k] = Subset::EMPTY;
                        k += 1;
                    }
                    if images.iter().all(|im| im.is_empty()) {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn property_condition_examples() {
        let r = two_state_chain();
        let im = r.image_lattice();
        let id = LatticeMap::identity(&im);
        let c = property_conditions(&id);
        assert!(c.a_join && c.a_zero);

        let bottom = LatticeMap::constant_bottom(&im, &im);
        let c = property_conditions(&bottom);
        assert!(c.a_join);
        assert!(!c.a_zero);
        assert!(property_member(&bottom, true), "bottom is always admitted");

        // l1 -> l1, l2 -> l2 on the three-element image chain.
        let g = LatticeMap::new(im.clone(), im.clone(), vec![0, 1, 2]).unwrap();
        let c = property_conditions(&g);
        assert!(c.a_join && c.a_zero);
    }

    #[test]
    fn endo_quantale_of_the_point() {
        let r = one_point();
        let report = verify_quantaloid_laws(&[r], HomSetKind::PossibleStrict, DEFAULT_HOM_CAP)
            .unwrap();
        assert!(report.is_clean(), "{report:?}");
    }

    #[test]
    fn law_suite_is_clean_on_three_objects() {
        let space = crate::closure::tests::chain_space();
        let objs = [
            one_point(),
            two_state_chain(),
            Resolution::from_closure_space(&space).unwrap(),
        ];
        for kind in [
            HomSetKind::PossibleStrict,
            HomSetKind::Possible,
            HomSetKind::PropertyStrict,
            HomSetKind::Property,
        ] {
            let report = verify_quantaloid_laws(&objs, kind, DEFAULT_HOM_CAP).unwrap();
            assert!(report.is_clean(), "{kind:?}: {:?}", report.violations());
        }
    }

    #[test]
    fn kind_strings_round_trip() {
        for kind in [
            HomSetKind::PossibleStrict,
            HomSetKind::Possible,
            HomSetKind::PropertyStrict,
            HomSetKind::Property,
        ] {
            assert_eq!(HomSetKind::parse(kind.as_str()).unwrap(), kind);
        }
        assert!(HomSetKind::parse("nonsense").is_err());
    }

    #[test]
    fn incompatible_morphisms_do_not_compose() {
        let r = one_point();
        let s = two_state_chain();
        let f = PossibleTransition::bottom(&r, &r);
        let g = PossibleTransition::bottom(&s, &s);
        assert!(matches!(
            PossibleTransition::compose(&g, &f),
            Err(Error::NotComposable)
        ));
    }

    #[test]
    fn nonstrict_hom_sets_admit_partial_kernels() {
        let r = two_state_chain();
        let strict = possible_maps(&r, &r, true, DEFAULT_HOM_CAP).unwrap();
        let lax = possible_maps(&r, &r, false, DEFAULT_HOM_CAP).unwrap();
        assert!(lax.len() > strict.len());
        // A map with one empty image sits in the lax hom-set only.
        let partial = lax
            .iter()
            .find(|f| !f.is_bottom() && f.singleton_images().iter().any(|im| im.is_empty()));
        assert!(partial.is_some());
        assert!(!strict.contains(partial.unwrap()));
    }
}
