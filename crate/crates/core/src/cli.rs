//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 when a verification check fails, 2 on usage or input errors.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chow::{chow_json, default_max_codim, group_name, verify_chow, ChowPresentation, ChowRing, Variant};
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::presentations::{verify_paper, VerificationReport};
use crate::rootdata::{CartanType, Family};
use crate::schubert::SchubertCalculus;
use crate::tables::ReferenceTables;
use crate::weyl::WeylElement;

#[derive(Parser, Debug)]
#[command(name = "schubert-flag", version, about = "Schubert calculus on flag manifolds of types B, D, G2, F4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Spin,
    So,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Spin => Variant::SimplyConnected,
            VariantArg::So => Variant::SpecialOrthogonal,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// B, D, G2 or F4 (B3, D4 also accepted)
    #[arg(long = "type")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schubert basis: elements of W by length
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Expand a homogeneous polynomial in the Schubert basis
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Apply the divided difference of an element to a polynomial
    Delta {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        word: String,
    },
    /// Chevalley products Z_{s_a} Z_u (all a unless --v names one)
    Chevalley {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: Option<String>,
    },
    /// Giambelli polynomial of a Schubert class
    Giambelli {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
    },
    /// Structure constants of Z_u Z_v
    Structconst {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Chow ring of the group
    Chow {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long)]
        max_codim: Option<usize>,
    },
    /// Check the reference tables and Chow rings
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long)]
        max_codim: Option<usize>,
        /// Read reference tables from a JSON file instead of the built-in ones
        #[arg(long)]
        tables: Option<std::path::PathBuf>,
        /// Print the built-in reference tables as JSON and exit
        #[arg(long)]
        dump_tables: bool,
    },
}

enum Failure {
    Verification,
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PositivityViolation { .. } => Failure::Verification,
            e => Failure::Input(e),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn single_type(common: &Common) -> Result<CartanType> {
    let ty = common.ty.as_deref().ok_or_else(|| Error::Invalid("--type is required".into()))?;
    let parsed: CartanType = match (ty.to_ascii_uppercase().as_str(), common.rank) {
        ("B" | "D", None) => return Err(Error::Invalid(format!("--rank is required for type {ty}"))),
        (f @ ("B" | "D"), Some(n)) => format!("{f}{n}").parse()?,
        (_, _) => ty.parse()?,
    };
    if let Some(n) = common.rank {
        if n != parsed.rank() {
            return Err(Error::UnsupportedRank {
                family: parsed.family().to_string(),
                rank: n,
            });
        }
    }
    Ok(parsed)
}

/// Types covered by `verify`: B and D without a rank sweep B2..B5 and D4..D5.
fn verify_types(common: &Common) -> Result<Vec<CartanType>> {
    match (common.ty.as_deref().map(str::to_ascii_uppercase).as_deref(), common.rank) {
        (Some("B"), None) => (2..=5).map(CartanType::b).collect(),
        (Some("D"), None) => (4..=5).map(CartanType::d).collect(),
        (None, _) => {
            let mut v = vec![CartanType::g2(), CartanType::f4()];
            v.extend((2..=5).map(|n| CartanType::b(n).unwrap()));
            v.extend((4..=5).map(|n| CartanType::d(n).unwrap()));
            Ok(v)
        }
        _ => Ok(vec![single_type(common)?]),
    }
}

/// The canonical word, with a note when the input was not that word.
fn element_label(input: &str, w: &WeylElement) -> String {
    let canon = w.to_string();
    let cleaned: String = input.chars().filter(char::is_ascii_digit).collect();
    if cleaned == w.word_string() || (cleaned.is_empty() && w.is_identity()) {
        canon
    } else {
        format!("{canon} (from {input})")
    }
}

fn emit(out: &mut dyn Write, format: Format, table: impl FnOnce() -> String, json: impl FnOnce() -> Value) -> CliResult {
    let text = match format {
        Format::Table => table(),
        Format::Json => serde_json::to_string_pretty(&json()).expect("json") + "\n",
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(Error::Invalid(e.to_string())))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Basis { common, codim } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let g = calc.group();
            let ks: Vec<usize> = match codim {
                Some(k) => vec![k],
                None => (0..=g.max_length()).collect(),
            };
            let mut strata = Vec::new();
            for &k in &ks {
                let s = g.elements_of_length(k)?;
                strata.push((k, s.elements().iter().map(ToString::to_string).collect::<Vec<_>>()));
            }
            let counts = g.length_counts();
            emit(
                out,
                common.format,
                || {
                    let mut t = format!("{ty}: |W| = {}, N = {}\n", g.order(), g.max_length());
                    for (k, words) in &strata {
                        t.push_str(&format!("codim {k} ({}): {}\n", words.len(), words.join(" ")));
                    }
                    t
                },
                || {
                    json!({
                        "type": ty.to_string(),
                        "order": g.order(),
                        "length_counts": counts,
                        "strata": strata.iter().map(|(k, w)| json!({"codim": k, "words": w})).collect::<Vec<_>>(),
                    })
                },
            )
        }
        Command::Expand { common, expr } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let f = parse_polynomial(calc.datum(), &expr)?;
            let e = calc.expand(&f)?;
            emit(out, common.format, || format!("{e}\n"), || e.to_json())
        }
        Command::Delta { common, expr, word } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let f = parse_polynomial(calc.datum(), &expr)?;
            let w = calc.element(&word)?;
            let d = calc.delta_w(&w, &f)?;
            let label = element_label(&word, &w);
            emit(
                out,
                common.format,
                || format!("Delta_{label} = {d}\n"),
                || json!({"element": w.to_string(), "input": word, "result": d.to_string()}),
            )
        }
        Command::Chevalley { common, u, v } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let w = calc.element(&u)?;
            let alphas: Vec<usize> = match &v {
                Some(a) => {
                    let s = calc.element(a)?;
                    if s.length() != 1 {
                        return Err(Error::InvalidWord {
                            word: a.clone(),
                            reason: "--v must be a simple reflection".into(),
                        }
                        .into());
                    }
                    vec![s.word()[0] as usize]
                }
                None => (1..=calc.rank()).collect(),
            };
            let mut rows = Vec::new();
            for a in alphas {
                rows.push((a, calc.chevalley_product(a, &w)?));
            }
            let label = element_label(&u, &w);
            emit(
                out,
                common.format,
                || rows.iter().map(|(a, e)| format!("Z_{a} * Z_{label} = {e}\n")).collect(),
                || {
                    json!({
                        "u": w.to_string(),
                        "products": rows.iter().map(|(a, e)| json!({"alpha": a, "expansion": e.to_json()})).collect::<Vec<_>>(),
                    })
                },
            )
        }
        Command::Giambelli { common, word } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let w = calc.element(&word)?;
            let p = calc.giambelli_poly(&w);
            let label = element_label(&word, &w);
            emit(
                out,
                common.format,
                || format!("P_{label} = {p}\n"),
                || json!({"element": w.to_string(), "polynomial": p.to_string()}),
            )
        }
        Command::Structconst { common, u, v } => {
            let ty = single_type(&common)?;
            let calc = SchubertCalculus::new(ty);
            let (a, b) = (calc.element(&u)?, calc.element(&v)?);
            let e = calc.structure_constants(&a, &b)?;
            let (la, lb) = (element_label(&u, &a), element_label(&v, &b));
            emit(
                out,
                common.format,
                || format!("Z_{la} * Z_{lb} = {e}\n"),
                || json!({"u": a.to_string(), "v": b.to_string(), "expansion": e.to_json()}),
            )
        }
        Command::Chow {
            common,
            variant,
            max_codim,
        } => {
            let ty = single_type(&common)?;
            let variant = variant.map_or(Variant::SimplyConnected, Variant::from);
            let calc = Arc::new(SchubertCalculus::new(ty));
            let max = match max_codim {
                Some(m) => m,
                None => default_max_codim(ty, variant)?,
            };
            let report = verify_chow(calc.clone(), variant, Some(max))?;
            let ring = ChowRing::new(calc, variant)?;
            let groups = ring.groups(max)?;
            let pres = ChowPresentation::closed_form(ty, variant)?;
            let pass = report.all_pass();
            emit(
                out,
                common.format,
                || {
                    let mut t = format!("A({}) = {pres}\n", group_name(ty, variant));
                    t.push_str(&format!("strata up to codim {max}: {groups}\n"));
                    t.push_str(&report.to_table());
                    t
                },
                || chow_json(ty, variant, &groups, &report).expect("presentation exists"),
            )?;
            if pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Verify {
            common,
            variant,
            max_codim,
            tables,
            dump_tables,
        } => {
            if dump_tables {
                let text = ReferenceTables::builtin().to_json_string() + "\n";
                return out.write_all(text.as_bytes()).map_err(|e| Failure::Input(Error::Invalid(e.to_string())));
            }
            let tables = match tables {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
                    ReferenceTables::from_json_str(&text)?
                }
                None => ReferenceTables::builtin(),
            };
            let types = verify_types(&common)?;
            let mut all = VerificationReport::default();
            let mut sections = Vec::new();
            for ty in types {
                let calc = Arc::new(SchubertCalculus::new(ty));
                let mut report = verify_paper(&calc, &tables);
                let variants: Vec<Variant> = match (variant, ty.family()) {
                    (Some(v), _) => vec![v.into()],
                    (None, Family::B | Family::D) => vec![Variant::SimplyConnected, Variant::SpecialOrthogonal],
                    (None, _) => vec![Variant::SimplyConnected],
                };
                for v in variants {
                    let max = match max_codim {
                        Some(m) => m.min(ty.num_positive_roots()),
                        None => default_max_codim(ty, v)?,
                    };
                    report.extend(verify_chow(calc.clone(), v, Some(max))?);
                }
                let _ = writeln!(err, "{ty}: {} checks, {} failed", report.len(), report.failures().count());
                sections.push((ty, report.clone()));
                all.extend(report);
            }
            emit(
                out,
                common.format,
                || all.to_table(),
                || {
                    json!({
                        "pass": all.all_pass(),
                        "types": sections.iter().map(|(ty, r)| json!({
                            "type": ty.to_string(),
                            "pass": r.all_pass(),
                            "checks": r.to_json()["checks"].clone(),
                        })).collect::<Vec<_>>(),
                    })
                },
            )?;
            if all.all_pass() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}
