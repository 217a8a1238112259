//! JSON file formats for every structure the CLI consumes or produces.
//!
//! Sets are serialized as lists of point names in universe order, and
//! subset keys (in resolution tables and embeddings) as comma-joined
//! point names in universe order, with the empty string / `[]` for the
//! empty set. On input, any order is accepted.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::lattice::{CompleteLattice, LatticeMap};
use crate::ortho::Ortholattice;
use crate::poset::FinitePoset;
use crate::resolution::{Factorization, Resolution};
use crate::subset::Subset;
use crate::transitions::{HomSetKind, PossibleTransition};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceFile {
    pub universe: Vec<String>,
    pub closed: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResolutionFile {
    pub sigma: Vec<String>,
    pub lattice: PosetFile,
    pub strict: bool,
    pub table: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactoredFile {
    pub space: SpaceFile,
    pub theta: BTreeMap<String, String>,
    pub lattice: PosetFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapValue {
    Elem(String),
    Set(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub kind: String,
    pub map: BTreeMap<String, MapValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrthoFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
    pub ortho: BTreeMap<String, String>,
}

/// Any structure the CLI can load without further context.
#[derive(Debug, Clone)]
pub enum Structure {
    Poset(FinitePoset),
    Space(ClosureSpace),
    Resolution(Resolution),
    Ortho(Ortholattice),
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        detail: format!("{}: {e}", path.display()),
    })
}

pub fn write_string(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::Io {
        detail: format!("{}: {e}", path.display()),
    })
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json {
        detail: format!("{what}: {e}"),
    })
}

// ---------------------------------------------------------------------
// Subset keys and name lists.
// ---------------------------------------------------------------------

fn index_in(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownElement { name: name.into() })
}

/// Parses a comma-joined subset key; brackets are tolerated.
pub fn parse_subset_key(names: &[String], key: &str) -> Result<Subset> {
    let key = key.trim().trim_start_matches('[').trim_end_matches(']');
    if key.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let mut s = Subset::EMPTY;
    for part in key.split(',') {
        s = s.with(index_in(names, part.trim())?);
    }
    Ok(s)
}

/// Renders a subset key in universe order, no brackets.
pub fn subset_key(names: &[String], s: Subset) -> String {
    s.iter()
        .map(|i| names[i].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn name_list(names: &[String], s: Subset) -> Vec<String> {
    s.iter().map(|i| names[i].clone()).collect()
}

// ---------------------------------------------------------------------
// Posets.
// ---------------------------------------------------------------------

pub fn poset_from_file(file: &PosetFile) -> Result<FinitePoset> {
    FinitePoset::new(file.elements.clone(), &file.le)
}

pub fn poset_to_file(p: &FinitePoset) -> PosetFile {
    // Covering pairs regenerate the order on load via transitive closure.
    PosetFile {
        elements: p.element_names().to_vec(),
        le: p
            .covers()
            .iter()
            .map(|&(i, j)| (p.name(i).to_string(), p.name(j).to_string()))
            .collect(),
    }
}

pub fn load_poset(path: &Path) -> Result<FinitePoset> {
    poset_from_file(&parse(&read_to_string(path)?, "poset file")?)
}

// ---------------------------------------------------------------------
// Closure spaces.
// ---------------------------------------------------------------------

pub fn space_from_file(file: &SpaceFile) -> Result<ClosureSpace> {
    let closed = file
        .closed
        .iter()
        .map(|set| {
            let mut s = Subset::EMPTY;
            for name in set {
                s = s.with(index_in(&file.universe, name)?);
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    ClosureSpace::new(file.universe.clone(), &closed)
}

pub fn space_to_file(s: &ClosureSpace) -> SpaceFile {
    SpaceFile {
        universe: s.universe().to_vec(),
        closed: s
            .closed_sets()
            .iter()
            .map(|&f| name_list(s.universe(), f))
            .collect(),
    }
}

pub fn load_space(path: &Path) -> Result<ClosureSpace> {
    space_from_file(&parse(&read_to_string(path)?, "space file")?)
}

// ---------------------------------------------------------------------
// Resolutions (direct and factored forms).
// ---------------------------------------------------------------------

pub fn resolution_from_file(file: &ResolutionFile) -> Result<Resolution> {
    let target = poset_from_file(&file.lattice)?;
    let entries = 1usize << file.sigma.len();
    let mut table = vec![None; entries];
    for (key, value) in &file.table {
        let t = parse_subset_key(&file.sigma, key)?;
        table[t.0 as usize] = Some(target.index_of(value)?);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(mask, v)| {
            v.ok_or_else(|| Error::Shape {
                detail: format!("table is missing an entry for mask {mask}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Resolution::new(file.sigma.clone(), target, table, file.strict)
}

pub fn resolution_to_file(r: &Resolution) -> ResolutionFile {
    let table = crate::subset::powerset(r.n_points())
        .map(|t| {
            (
                subset_key(r.point_names(), t),
                r.target().name(r.value(t)).to_string(),
            )
        })
        .collect();
    ResolutionFile {
        sigma: r.point_names().to_vec(),
        lattice: poset_to_file(r.target()),
        strict: r.is_strict(),
        table,
    }
}

pub fn resolution_from_factored(file: &FactoredFile) -> Result<Resolution> {
    let space = space_from_file(&file.space)?;
    let target = poset_from_file(&file.lattice)?;
    let theta = file
        .theta
        .iter()
        .map(|(key, value)| {
            Ok((
                parse_subset_key(space.universe(), key)?,
                target.index_of(value)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Resolution::from_factors(&space, &theta, &target)
}

pub fn factorization_to_file(f: &Factorization, target: &FinitePoset) -> FactoredFile {
    FactoredFile {
        space: space_to_file(f.space()),
        theta: f
            .theta_pairs()
            .into_iter()
            .map(|(set, v)| {
                (
                    format!("[{}]", subset_key(f.space().universe(), set)),
                    target.name(v).to_string(),
                )
            })
            .collect(),
        lattice: poset_to_file(target),
    }
}

/// Loads a resolution in either the direct or the factored form.
pub fn load_resolution(path: &Path) -> Result<Resolution> {
    load_resolution_with_regime(path, None)
}

/// Loads a resolution, overriding the file's `strict` flag before
/// validation; the factored form derives strictness from its space.
pub fn load_resolution_with_regime(path: &Path, strict: Option<bool>) -> Result<Resolution> {
    let text = read_to_string(path)?;
    let value: serde_json::Value = parse(&text, "resolution file")?;
    if value.get("sigma").is_some() {
        let mut file: ResolutionFile = parse(&text, "resolution file")?;
        if let Some(s) = strict {
            file.strict = s;
        }
        resolution_from_file(&file)
    } else if value.get("space").is_some() {
        resolution_from_factored(&parse(&text, "factored resolution file")?)
    } else {
        Err(Error::Shape {
            detail: "expected a resolution file (`sigma` + `table` or `space` + `theta`)".into(),
        })
    }
}

// ---------------------------------------------------------------------
// Morphisms.
// ---------------------------------------------------------------------

pub fn load_morphism_file(path: &Path) -> Result<MorphismFile> {
    parse(&read_to_string(path)?, "morphism file")
}

pub fn morphism_kind(file: &MorphismFile) -> Result<HomSetKind> {
    HomSetKind::parse(&file.kind)
}

/// Reads a state-level morphism against its source and target.
pub fn possible_from_file(
    file: &MorphismFile,
    source: &Resolution,
    target: &Resolution,
) -> Result<PossibleTransition> {
    let mut images = vec![Subset::EMPTY; source.n_points()];
    for (key, value) in &file.map {
        let p = index_in(source.point_names(), key)?;
        let MapValue::Set(names) = value else {
            return Err(Error::Shape {
                detail: format!("state `{key}` must map to a list of states"),
            });
        };
        for name in names {
            images[p] = images[p].with(index_in(target.point_names(), name)?);
        }
    }
    PossibleTransition::new(source.clone(), target.clone(), images)
}

pub fn possible_to_file(f: &PossibleTransition) -> MorphismFile {
    let kind = if f.source().is_strict() && f.target().is_strict() {
        HomSetKind::PossibleStrict
    } else {
        HomSetKind::Possible
    };
    MorphismFile {
        kind: kind.as_str().into(),
        map: f
            .source()
            .point_names()
            .iter()
            .enumerate()
            .map(|(p, name)| {
                (
                    name.clone(),
                    MapValue::Set(name_list(
                        f.target().point_names(),
                        f.singleton_image(p),
                    )),
                )
            })
            .collect(),
    }
}

/// Reads a property-level morphism: keys and values are image elements of
/// the source and target resolutions.
pub fn property_from_file(
    file: &MorphismFile,
    source: &Resolution,
    target: &Resolution,
) -> Result<LatticeMap> {
    let im1 = source.image_lattice();
    let im2 = target.image_lattice();
    lattice_map_from_entries(&file.map, &im1, &im2)
}

pub fn property_to_file(g: &LatticeMap, strict: bool) -> MorphismFile {
    let kind = if strict {
        HomSetKind::PropertyStrict
    } else {
        HomSetKind::Property
    };
    MorphismFile {
        kind: kind.as_str().into(),
        map: (0..g.domain().n())
            .map(|i| {
                (
                    g.domain().name(i).to_string(),
                    MapValue::Elem(g.codomain().name(g.apply(i)).to_string()),
                )
            })
            .collect(),
    }
}

fn lattice_map_from_entries(
    entries: &BTreeMap<String, MapValue>,
    domain: &CompleteLattice,
    codomain: &CompleteLattice,
) -> Result<LatticeMap> {
    let mut values = vec![None; domain.n()];
    for (key, value) in entries {
        let i = domain.index_of(key)?;
        let MapValue::Elem(name) = value else {
            return Err(Error::Shape {
                detail: format!("element `{key}` must map to a single element"),
            });
        };
        values[i] = Some(codomain.index_of(name)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Shape {
                detail: format!("map is missing element `{}`", domain.name(i)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    LatticeMap::new(domain.clone(), codomain.clone(), values)
}

/// Reads a plain lattice map between two explicitly given lattices.
pub fn lattice_map_from_file(
    file: &MorphismFile,
    domain: &CompleteLattice,
    codomain: &CompleteLattice,
) -> Result<LatticeMap> {
    lattice_map_from_entries(&file.map, domain, codomain)
}

pub fn lattice_map_to_file(g: &LatticeMap) -> MorphismFile {
    MorphismFile {
        kind: "lattice-map".into(),
        map: (0..g.domain().n())
            .map(|i| {
                (
                    g.domain().name(i).to_string(),
                    MapValue::Elem(g.codomain().name(g.apply(i)).to_string()),
                )
            })
            .collect(),
    }
}

// ---------------------------------------------------------------------
// Ortholattices.
// ---------------------------------------------------------------------

pub fn ortho_from_file(file: &OrthoFile) -> Result<Ortholattice> {
    let poset = FinitePoset::new(file.elements.clone(), &file.le)?;
    let lattice = CompleteLattice::from_poset(poset)?;
    let mut ortho = vec![None; lattice.n()];
    for (a, b) in &file.ortho {
        let i = lattice.index_of(a)?;
        let j = lattice.index_of(b)?;
        // Pairs may be listed in one direction only.
        ortho[i] = Some(j);
        ortho[j] = Some(i);
    }
    let ortho = ortho
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Shape {
                detail: format!("no orthocomplement for `{}`", lattice.name(i)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ortholattice::new(lattice, ortho)
}

pub fn ortho_to_file(ol: &Ortholattice) -> OrthoFile {
    let poset = poset_to_file(ol.lattice().poset());
    OrthoFile {
        elements: poset.elements,
        le: poset.le,
        ortho: (0..ol.lattice().n())
            .filter(|&i| i <= ol.ortho(i))
            .map(|i| {
                (
                    ol.lattice().name(i).to_string(),
                    ol.lattice().name(ol.ortho(i)).to_string(),
                )
            })
            .collect(),
    }
}

pub fn load_ortholattice(path: &Path) -> Result<Ortholattice> {
    ortho_from_file(&parse(&read_to_string(path)?, "ortholattice file")?)
}

// ---------------------------------------------------------------------
// Detection.
// ---------------------------------------------------------------------

pub fn load_structure(path: &Path) -> Result<Structure> {
    load_structure_with_regime(path, None)
}

/// Like [`load_structure`], with an optional regime override applied to
/// resolutions in the direct form before validation.
pub fn load_structure_with_regime(path: &Path, strict: Option<bool>) -> Result<Structure> {
    let text = read_to_string(path)?;
    let value: serde_json::Value = parse(&text, "input file")?;
    if value.get("ortho").is_some() {
        Ok(Structure::Ortho(ortho_from_file(&parse(&text, "ortholattice file")?)?))
    } else if value.get("sigma").is_some() || value.get("space").is_some() {
        Ok(Structure::Resolution(load_resolution_with_regime(
            path, strict,
        )?))
    } else if value.get("universe").is_some() {
        Ok(Structure::Space(space_from_file(&parse(&text, "space file")?)?))
    } else if value.get("elements").is_some() {
        Ok(Structure::Poset(poset_from_file(&parse(&text, "poset file")?)?))
    } else {
        Err(Error::Shape {
            detail: "unrecognized input file".into(),
        })
    }
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file structs serialize")
}
