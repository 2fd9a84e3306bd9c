use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lexiknot::arith::{cf_expand_positive, Catalog, Fraction};
use lexiknot::curvelab::{self, PlaneCurve, Poly};
use lexiknot::diagram::{conway_normal_form, crossing_number, TrigonalDiagram};
use lexiknot::enumerate::{enumerate_diagrams, m_c, Filter};
use lexiknot::planereduce::{b_lower_bound, reduction_search, Bounds, PlaneWord, Step, VerdictOptions};
use lexiknot::report::{build_table, diff_expected, emit, Format};

#[derive(Parser)]
#[command(name = "lexiknot", version, about = "Lexicographic degree of two-bridge knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    NoIslet,
    Strict,
    Reduced,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::NoIslet => Filter::NoIslet,
            FilterArg::Strict => Filter::Strict,
            FilterArg::Reduced => Filter::Reduced,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// List diagrams of a fraction with sum |m_i| up to the budget.
    Enumerate {
        #[arg(long)]
        fraction: String,
        /// Defaults to m_C.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "reduced")]
        filter: FilterArg,
        #[arg(long)]
        json: bool,
    },
    /// Minimal length of a +-1 continued fraction.
    Mc {
        #[arg(long)]
        fraction: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Reduction trace and lower bound on b for a plane word such as 2,1,3.
    Reduce {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = lexiknot::planereduce::DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long)]
        bases: Option<PathBuf>,
        #[arg(long)]
        overrides: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Crossings and plane word of (x(t), y(t)); with --z, checks the space curve.
    Curve {
        /// cheb:n or coeffs:c0,c1,...
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Degree table for catalog knots.
    Table {
        /// Comma separated names; all rows when omitted.
        #[arg(long, value_delimiter = ',')]
        knots: Vec<String>,
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        bases: Option<PathBuf>,
        #[arg(long)]
        overrides: Option<PathBuf>,
        /// Compare with the expected columns of this knots.csv; exit 1 on mismatch.
        #[arg(long)]
        diff: Option<PathBuf>,
    },
}

fn bounds(bases: Option<PathBuf>, overrides: Option<PathBuf>) -> lexiknot::Result<Bounds> {
    match (bases, overrides) {
        (None, None) => Ok(Bounds::builtin()),
        (Some(b), Some(o)) => Bounds::load(b, o),
        (Some(b), None) => {
            let text = std::fs::read_to_string(b)?;
            Bounds::from_csv(&text, "runs,b_lower,table_row\n")
        }
        (None, Some(o)) => {
            let text = std::fs::read_to_string(o)?;
            Bounds::from_csv(lexiknot::planereduce::BUILTIN_BASES, &text)
        }
    }
}

fn fraction_cap(f: &Fraction) -> lexiknot::Result<usize> {
    let nf = conway_normal_form(&TrigonalDiagram::new(cf_expand_positive(f)?))?.0;
    Ok(2 * crossing_number(&nf)? as usize + 4)
}

fn run(cmd: Cmd) -> lexiknot::Result<bool> {
    match cmd {
        Cmd::Enumerate { fraction, budget, filter, json } => {
            let f = Fraction::parse(&fraction)?;
            let budget = match budget {
                Some(b) => b,
                None => m_c(&f, fraction_cap(&f)?)?,
            };
            let ds = enumerate_diagrams(&f, budget, filter.into());
            let cat = Catalog::builtin();
            let knot = cat.lookup(&f).map(|k| k.name.clone());
            if json {
                let rows: Vec<_> = ds
                    .iter()
                    .map(|d| {
                        json!({
                            "entries": d.entries,
                            "sigma": d.sign_changes(),
                            "N": crossing_number(d).ok(),
                            "sum_abs": d.sum_abs(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&json!({ "fraction": f.to_string(), "knot": knot, "budget": budget, "diagrams": rows })).unwrap());
            } else {
                let name = knot.unwrap_or_else(|| "not in catalog".into());
                println!("{f} ({name}): budget {budget}, {} diagrams", ds.len());
                for d in &ds {
                    println!("  {d}  sum={} sigma={}", d.sum_abs(), d.sign_changes());
                }
            }
        }
        Cmd::Mc { fraction, cap } => {
            let f = Fraction::parse(&fraction)?;
            let cap = match cap {
                Some(c) => c,
                None => fraction_cap(&f)?,
            };
            println!("{}", m_c(&f, cap)?);
        }
        Cmd::Reduce { word, depth, bases, overrides, json } => {
            let b = bounds(bases, overrides)?;
            let w = PlaneWord::parse(&word)?;
            let trace = reduction_search(&w, &b, depth);
            let lb = b_lower_bound(&w, &b);
            if json {
                println!("{}", serde_json::to_string_pretty(&json!({ "trace": trace, "lower_bound": lb })).unwrap());
            } else {
                println!("word {}", w.normalized());
                for s in &trace.steps {
                    match s {
                        Step::Identity { to } => println!("  ~ {to}"),
                        Step::R { at, to } => println!("  R{at} -> {to}"),
                    }
                }
                println!("base {} cost {} estimate {}", trace.base, trace.cost, trace.estimate);
                println!("b >= {} via {:?}", lb.value, lb.provenance());
            }
        }
        Cmd::Curve { x, y, z, svg, json } => {
            let c = PlaneCurve::new(Poly::parse(&x)?, Poly::parse(&y)?)?;
            let cs = curvelab::curve_crossings(&c)?;
            let word = curvelab::word_of(&cs);
            if let Some(path) = svg {
                std::fs::write(path, curvelab::svg::render(&cs, 400))?;
            }
            let emb = match z {
                Some(z) => Some(curvelab::verify_embedding(&c.x, &c.y, &Poly::parse(&z)?, &Catalog::builtin())?),
                None => None,
            };
            if json {
                let xs: Vec<f64> = cs.crossings.iter().map(|c| c.x.mid_f64()).collect();
                let out = json!({
                    "crossings": cs.len(),
                    "letters": cs.letters(),
                    "x": xs,
                    "word": word.runs,
                    "diagram": emb.as_ref().map(|e| e.diagram.entries.clone()),
                    "knot": emb.as_ref().and_then(|e| e.knot.as_ref().map(|k| k.name.clone())),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("{} crossings, letters {}, word {}", cs.len(), cs.letters(), word);
                if let Some(e) = emb {
                    let name = e.knot.map(|k| k.name).unwrap_or_else(|| "not in catalog".into());
                    println!("diagram {} -> {name}", e.diagram);
                }
            }
        }
        Cmd::Table { knots, format, catalog, bases, overrides, diff } => {
            let cat = match catalog {
                Some(p) => Catalog::load(p)?,
                None => Catalog::builtin(),
            };
            let fmt: Format = format.parse()?;
            let rows = build_table(&knots, &cat, &bounds(bases, overrides)?, &VerdictOptions::default())?;
            print!("{}", emit(&rows, fmt)?);
            if let Some(p) = diff {
                let mism = diff_expected(&rows, &Catalog::load(p)?);
                for m in &mism {
                    eprintln!("{}: {} expected {} got {}", m.name, m.column, m.expected, m.got);
                }
                return Ok(mism.is_empty());
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
