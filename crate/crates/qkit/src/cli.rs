//! Command-line front door. All structured output is JSON (DOT for
//! `export-dot`); exit code 0 means every check passed, 1 signals a law
//! or axiom violation (with a machine-readable witness on stdout), 2 a
//! parse or usage problem.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::io::{self, Structure};
use crate::lattice::CompleteLattice;
use crate::report::Report;
use crate::resolution::Resolution;
use crate::transitions::{
    enumerate_hom_set, property_conditions, property_member, possible_member, HomSetKind,
    PossibleTransition, DEFAULT_HOM_CAP,
};
use crate::{dot, functors, ortho};

const ISO_CAP: usize = 10;

#[derive(Parser)]
#[command(
    name = "qkit",
    version,
    about = "Finite closure spaces, resolutions, transition categories, and orthomodular measurement models"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CommonArgs {
    /// Input files (structure-dependent count and order).
    #[arg(long = "in", value_name = "PATH", num_args = 1.., required = true)]
    input: Vec<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format (export-dot always emits DOT).
    #[arg(long, default_value = "json")]
    format: String,
    /// Regime toggle: with the empty-kernel axioms (`true`) or without.
    #[arg(long)]
    strict: Option<bool>,
    /// Enumeration cap override (also settable via QKIT_CAP).
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate any structure file (poset, space, resolution, ortholattice).
    Validate(CommonArgs),
    /// Factor a resolution into its closure space and embedding.
    Factorize(CommonArgs),
    /// Build the canonical resolution and the state translation.
    Canonicalize(CommonArgs),
    /// Check a morphism's side conditions: src, dst, morphism.
    CheckMorphism(CommonArgs),
    /// Compose two morphisms: src, mid, dst, first, second.
    Compose(CommonArgs),
    /// Pointwise join of parallel morphisms: src, dst, morphisms...
    Join(CommonArgs),
    /// Reflect a state transition to a property transition: src, dst, f.
    Fpr(CommonArgs),
    /// Lift a property transition to a state transition: src, dst, g.
    Lift(CommonArgs),
    /// Galois adjoint of a lattice map: domain, codomain, map.
    Adjoint {
        #[command(flatten)]
        common: CommonArgs,
        /// Compute the left adjoint of a meet-preserving map instead.
        #[arg(long)]
        left: bool,
    },
    /// Run the measurement suite on an ortholattice for a property.
    Sasaki {
        #[command(flatten)]
        common: CommonArgs,
        /// Name of the tested property.
        #[arg(long)]
        property: String,
    },
    /// Run the category law suites over the given resolutions.
    Laws(CommonArgs),
    /// Render a structure (or a src, dst, morphism square) as DOT.
    ExportDot(CommonArgs),
}

pub fn run() -> i32 {
    dispatch(std::env::args_os())
}

/// Parses and executes; returns the process exit code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version are successful exits; everything else is usage.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok(Outcome { output, failed }) => {
            if failed {
                1
            } else {
                let _ = output;
                0
            }
        }
        Err(e) => {
            print_line(&e.to_json().to_string());
            if e.is_law_violation() {
                1
            } else {
                2
            }
        }
    }
}

struct Outcome {
    output: String,
    failed: bool,
}

fn effective_cap(cli_cap: Option<usize>) -> usize {
    cli_cap
        .or_else(|| {
            std::env::var("QKIT_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_HOM_CAP)
}

/// Prints without panicking when the consumer closes the pipe early.
fn print_line(content: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{content}");
}

fn emit(common: &CommonArgs, content: &str) -> Result<()> {
    match &common.out {
        Some(path) => io::write_string(path, content),
        None => {
            print_line(content);
            Ok(())
        }
    }
}

fn want(common: &CommonArgs, n: usize) -> Result<()> {
    if common.input.len() != n {
        return Err(Error::Shape {
            detail: format!("expected {n} --in file(s), got {}", common.input.len()),
        });
    }
    Ok(())
}

fn load_resolution_with_strict(path: &Path, strict: Option<bool>) -> Result<Resolution> {
    io::load_resolution_with_regime(path, strict)
}

fn emit_report(common: &CommonArgs, report: &Report) -> Result<Outcome> {
    let output = report.to_json_lines();
    emit(common, &output)?;
    Ok(Outcome {
        output,
        failed: !report.is_clean(),
    })
}

fn execute(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Validate(common) => {
            let mut summaries = Vec::new();
            for path in &common.input {
                let summary = match io::load_structure_with_regime(path, common.strict)? {
                    Structure::Poset(p) => serde_json::json!({
                        "type": "poset", "valid": true, "elements": p.n(),
                    }),
                    Structure::Space(s) => serde_json::json!({
                        "type": "closure-space", "valid": true,
                        "points": s.n(), "closed_sets": s.closed_sets().len(),
                        "empty_strict": s.is_empty_strict(),
                        "t0": s.is_t0(), "t1": s.is_t1(),
                    }),
                    Structure::Resolution(r) => {
                        let sep = r.separation();
                        serde_json::json!({
                            "type": "resolution", "valid": true,
                            "states": r.n_points(), "strict": r.is_strict(),
                            "image_size": r.image_elements().len(),
                            "t0": sep.t0, "t1": sep.t1,
                            "saturated": r.is_saturated(),
                            "canonical": r.is_canonical(),
                        })
                    }
                    Structure::Ortho(ol) => serde_json::json!({
                        "type": "ortholattice", "valid": true,
                        "elements": ol.lattice().n(),
                        "orthomodular": ol.is_orthomodular(),
                        "atomistic": ol.lattice().is_atomistic(),
                    }),
                };
                summaries.push(summary);
            }
            let output = serde_json::to_string_pretty(&summaries).expect("summaries serialize");
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Factorize(common) => {
            want(&common, 1)?;
            let r = load_resolution_with_strict(&common.input[0], common.strict)?;
            let f = r.factorize();
            let output = io::to_pretty_json(&io::factorization_to_file(&f, r.target()));
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Canonicalize(common) => {
            want(&common, 1)?;
            let r = load_resolution_with_strict(&common.input[0], common.strict)?;
            let (canonical, phi) = r.canonicalize();
            let phi_json: serde_json::Map<String, serde_json::Value> = r
                .point_names()
                .iter()
                .zip(&phi)
                .map(|(name, target)| {
                    (
                        name.clone(),
                        match target {
                            Some(k) => serde_json::json!(canonical.point_names()[*k]),
                            None => serde_json::Value::Null,
                        },
                    )
                })
                .collect();
            let output = serde_json::to_string_pretty(&serde_json::json!({
                "resolution": io::resolution_to_file(&canonical),
                "phi": phi_json,
            }))
            .expect("canonicalization serializes");
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::CheckMorphism(common) => {
            want(&common, 3)?;
            let src = io::load_resolution(&common.input[0])?;
            let dst = io::load_resolution(&common.input[1])?;
            let file = io::load_morphism_file(&common.input[2])?;
            let kind = io::morphism_kind(&file)?;
            let mut report = Report::new();
            let inst = common.input[2].display().to_string();
            if kind.is_state_level() {
                let f = io::possible_from_file(&file, &src, &dst)?;
                let conds = f.conditions()?;
                report.note(
                    "conditions",
                    &inst,
                    serde_json::json!({
                        "a_empty": conds.a_empty,
                        "a_sharp": conds.a_sharp,
                        "a_star": conds.a_star,
                    }),
                );
                report.check(
                    "morphism-in-hom-set",
                    &inst,
                    possible_member(conds, f.is_bottom(), kind.is_strict()),
                );
            } else {
                let g = io::property_from_file(&file, &src, &dst)?;
                let conds = property_conditions(&g);
                report.note(
                    "conditions",
                    &inst,
                    serde_json::json!({
                        "a_join": conds.a_join,
                        "a_zero": conds.a_zero,
                    }),
                );
                report.check(
                    "morphism-in-hom-set",
                    &inst,
                    property_member(&g, kind.is_strict()),
                );
            }
            emit_report(&common, &report)
        }

        Cmd::Compose(common) => {
            want(&common, 5)?;
            let a = io::load_resolution(&common.input[0])?;
            let b = io::load_resolution(&common.input[1])?;
            let c = io::load_resolution(&common.input[2])?;
            let file1 = io::load_morphism_file(&common.input[3])?;
            let file2 = io::load_morphism_file(&common.input[4])?;
            let kind1 = io::morphism_kind(&file1)?;
            let kind2 = io::morphism_kind(&file2)?;
            if kind1.is_state_level() != kind2.is_state_level() {
                return Err(Error::NotComposable);
            }
            let output = if kind1.is_state_level() {
                let f1 = io::possible_from_file(&file1, &a, &b)?;
                let f2 = io::possible_from_file(&file2, &b, &c)?;
                io::to_pretty_json(&io::possible_to_file(&PossibleTransition::compose(
                    &f2, &f1,
                )?))
            } else {
                let g1 = io::property_from_file(&file1, &a, &b)?;
                let g2 = io::property_from_file(&file2, &b, &c)?;
                let composed = crate::lattice::LatticeMap::compose(&g2, &g1)?;
                io::to_pretty_json(&io::property_to_file(&composed, kind1.is_strict()))
            };
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Join(common) => {
            if common.input.len() < 2 {
                return Err(Error::Shape {
                    detail: "join needs src, dst, and morphism files".into(),
                });
            }
            let src = io::load_resolution(&common.input[0])?;
            let dst = io::load_resolution(&common.input[1])?;
            let mut possible = Vec::new();
            let mut property = Vec::new();
            let mut strictness = true;
            for path in &common.input[2..] {
                let file = io::load_morphism_file(path)?;
                let kind = io::morphism_kind(&file)?;
                strictness &= kind.is_strict();
                if kind.is_state_level() {
                    possible.push(io::possible_from_file(&file, &src, &dst)?);
                } else {
                    property.push(io::property_from_file(&file, &src, &dst)?);
                }
            }
            if !possible.is_empty() && !property.is_empty() {
                return Err(Error::NotComposable);
            }
            let output = if property.is_empty() {
                let joined = PossibleTransition::join(&src, &dst, &possible)?;
                io::to_pretty_json(&io::possible_to_file(&joined))
            } else {
                let joined = crate::lattice::LatticeMap::pointwise_join(
                    &src.image_lattice(),
                    &dst.image_lattice(),
                    &property,
                )?;
                io::to_pretty_json(&io::property_to_file(&joined, strictness))
            };
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Fpr(common) => {
            want(&common, 3)?;
            let src = io::load_resolution(&common.input[0])?;
            let dst = io::load_resolution(&common.input[1])?;
            let file = io::load_morphism_file(&common.input[2])?;
            let f = io::possible_from_file(&file, &src, &dst)?;
            let g = functors::property_reflection(&f)?;
            let strict = common.strict.unwrap_or(src.is_strict() && dst.is_strict());
            let output = io::to_pretty_json(&io::property_to_file(&g, strict));
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Lift(common) => {
            want(&common, 3)?;
            let src = io::load_resolution(&common.input[0])?;
            let dst = io::load_resolution(&common.input[1])?;
            let file = io::load_morphism_file(&common.input[2])?;
            let g = io::property_from_file(&file, &src, &dst)?;
            let lifted = functors::state_lift(&g, &src, &dst)?;
            let output = io::to_pretty_json(&io::possible_to_file(&lifted));
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Adjoint { common, left } => {
            want(&common, 3)?;
            let domain = CompleteLattice::from_poset(io::load_poset(&common.input[0])?)?;
            let codomain = CompleteLattice::from_poset(io::load_poset(&common.input[1])?)?;
            let file = io::load_morphism_file(&common.input[2])?;
            let map = io::lattice_map_from_file(&file, &domain, &codomain)?;
            let adjoint = if left {
                map.left_adjoint()?
            } else {
                map.right_adjoint()?
            };
            let output = io::to_pretty_json(&io::lattice_map_to_file(&adjoint));
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }

        Cmd::Sasaki { common, property } => {
            want(&common, 1)?;
            let name = common.input[0].display().to_string();
            let ol = if common.input[0].exists() {
                io::load_ortholattice(&common.input[0])?
            } else {
                ortho::builtin(&name)?
            };
            let a = ol.lattice().index_of(&property)?;
            let mut report = ortho::measurement_report(&ol, a)?;
            let mt = ol.measurement_transition(a)?;
            report.note(
                "measurement-transition",
                &format!("testing `{property}`"),
                serde_json::to_value(io::possible_to_file(&mt.transition)).expect("serializes"),
            );
            emit_report(&common, &report)
        }

        Cmd::Laws(common) => {
            let cap = effective_cap(common.cap);
            let strict = common.strict.unwrap_or(true);
            let mut objects = Vec::new();
            for path in &common.input {
                objects.push(load_resolution_with_strict(path, common.strict)?);
            }
            let mut report = Report::new();
            let state_kind = if strict {
                HomSetKind::PossibleStrict
            } else {
                HomSetKind::Possible
            };
            let prop_kind = if strict {
                HomSetKind::PropertyStrict
            } else {
                HomSetKind::Property
            };
            report.merge(crate::transitions::verify_quantaloid_laws(
                &objects, state_kind, cap,
            )?);
            report.merge(crate::transitions::verify_quantaloid_laws(
                &objects, prop_kind, cap,
            )?);
            report.merge(functors::reflection_functor_report(&objects, strict, cap)?);
            report.merge(functors::galois_dual_report(&objects, strict, cap)?);
            report.merge(functors::image_functor_report(&objects, ISO_CAP)?);
            report.merge(functors::space_functor_report(&objects, cap)?);
            emit_report(&common, &report)
        }

        Cmd::ExportDot(common) => {
            let output = match common.input.len() {
                1 => match io::load_structure(&common.input[0])? {
                    Structure::Poset(p) => dot::poset_dot(&p, "poset"),
                    Structure::Space(s) => dot::space_dot(&s)?,
                    Structure::Resolution(r) => {
                        dot::poset_dot(r.image_lattice().poset(), "image_lattice")
                    }
                    Structure::Ortho(ol) => dot::ortho_dot(&ol),
                },
                3 => {
                    let src = io::load_resolution(&common.input[0])?;
                    let dst = io::load_resolution(&common.input[1])?;
                    let file = io::load_morphism_file(&common.input[2])?;
                    let f = io::possible_from_file(&file, &src, &dst)?;
                    dot::square_dot(&f)?
                }
                n => {
                    return Err(Error::Shape {
                        detail: format!("export-dot takes 1 or 3 --in files, got {n}"),
                    })
                }
            };
            emit(&common, &output)?;
            Ok(Outcome {
                output,
                failed: false,
            })
        }
    }
}

/// Convenience used by tests and examples: enumerate a hom-set from two
/// resolution files.
pub fn hom_set_from_files(
    src: &Path,
    dst: &Path,
    kind: HomSetKind,
    cap: Option<usize>,
) -> Result<crate::transitions::HomSet> {
    let a = io::load_resolution(src)?;
    let b = io::load_resolution(dst)?;
    enumerate_hom_set(&a, &b, kind, effective_cap(cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(dispatch(["qkit", "no-such-command"]), 2);
        assert_eq!(dispatch(["qkit", "factorize"]), 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(dispatch(["qkit", "--help"]), 0);
    }

    #[test]
    fn map_values_parse_both_shapes() {
        use crate::io::MapValue;
        let v: MapValue = serde_json::from_str("\"a\"").unwrap();
        assert!(matches!(v, MapValue::Elem(_)));
        let v: MapValue = serde_json::from_str("[\"a\",\"b\"]").unwrap();
        assert!(matches!(v, MapValue::Set(_)));
    }
}
