use clap::{Parser, Subcommand, ValueEnum};
use contactgrad::classify::tables5to8::{chevalley_xi, xi_matrix};
use contactgrad::classify::table2::summarize;
use contactgrad::classify::{verify_all, verify_table, Format, TableReport};
use contactgrad::contactize::{build_contactization, verify_symplectic_symmetric};
use contactgrad::liealg::matrix::FormShape;
use contactgrad::liealg::jacobi::suite as jacobi_suite;
use contactgrad::registry::{build_with, matrix_element, parse_algebra, root_triple, RootChoice};
use contactgrad::rootsys::{contact_grading_node_set, RootSystem};
use contactgrad::satake::{djokovic_consistent, enumerate_depth_one_real_forms, SatakeDb};
use contactgrad::sl2kit::ad_h_gradation;
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "contactgrad", version, about = "Contact gradations and symmetric contact spaces, exactly")]
struct Cli {
    /// Worker threads for parallel verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, default_value = "md")]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Diag,
    Hyp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Contact,
    DepthOne,
}

#[derive(Subcommand)]
enum Verb {
    /// Rebuild tables and print the full comparison.
    Tables {
        /// Table id (ov, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11); all tables when omitted.
        #[arg(long)]
        table: Option<String>,
    },
    /// Rebuild tables and print one summary line each.
    Verify {
        #[arg(long)]
        table: Option<String>,
    },
    /// Gradation, centralizer and V, W of a root sl2-triple.
    Gradation {
        /// Algebra name, e.g. g2-split, E6, sl3(R), su(1,2), so(2,3).
        #[arg(long)]
        algebra: String,
        /// long, short, or simple-root coordinates such as 1,2.
        #[arg(long, default_value = "long")]
        root: RootChoice,
    },
    /// Satake diagram of a real form and a gradation check.
    Satake {
        /// Real form name, e.g. e6(-26), so(2,5), sp3(R).
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value = "contact")]
        check: Check,
    },
    /// Contactization data for a semisimple element.
    Contactize {
        #[arg(long)]
        algebra: String,
        /// Element, e.g. diag(i; 1^1, -1^1), rot(0,1), omega(2), coweight(1).
        #[arg(long)]
        xi: String,
        #[arg(long, value_enum, default_value = "diag")]
        shape: Shape,
    },
    /// Jacobi checks on the Chevalley algebras up to rank 4 plus every table.
    Selftest,
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        _ => print!("{}", text()),
    }
}

fn reports(table: &Option<String>) -> Result<Vec<TableReport>, String> {
    match table.as_deref() {
        None | Some("all") => Ok(verify_all()),
        Some(id) => verify_table(id).map(|r| vec![r]),
    }
}

fn exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.verb {
        Verb::Tables { table } => {
            let rs = reports(&table)?;
            match format {
                Format::Json => emit(format, &rs, String::new),
                Format::Csv => {
                    for (i, r) in rs.iter().enumerate() {
                        let csv = r.to_csv();
                        // One header for the whole stream.
                        print!("{}", if i == 0 { &csv[..] } else { csv.split_once('\n').map_or("", |x| x.1) });
                    }
                }
                Format::Md => rs.iter().for_each(|r| print!("{}", r.to_markdown())),
            }
            Ok(exit(rs.iter().all(TableReport::all_ok)))
        }
        Verb::Verify { table } => {
            let rs = reports(&table)?;
            let lines: Vec<String> = rs.iter().map(TableReport::summary).collect();
            emit(format, &rs, || lines.iter().map(|l| format!("{l}\n")).collect());
            Ok(exit(rs.iter().all(TableReport::all_ok)))
        }
        Verb::Gradation { algebra, root } => {
            let b = build_with(&parse_algebra(&algebra)?, FormShape::Hyperbolic)?;
            let t = root_triple(&b, &root)?;
            let g = ad_h_gradation(&b.algebra, &t.h).map_err(|e| e.to_string())?;
            let s = summarize(&b, &t)?;
            #[derive(Serialize)]
            struct Report<'a> {
                pieces: Vec<(i64, usize)>,
                #[serde(flatten)]
                summary: &'a contactgrad::classify::table2::TripleSummary,
            }
            let rep = Report { pieces: g.dims(), summary: &s };
            emit(format, &rep, || {
                let dims: Vec<String> = rep.pieces.iter().map(|(k, d)| format!("{k}:{d}")).collect();
                format!(
                    "algebra: {}\ndim: {}\ndepth: {}\nad_h pieces (eigenvalue:dim): {}\ncontact gradation: {}\n\
                     symmetric type: {}\nz: {}\ndim V: {}\ndim W: {}\neigenvalues on V+W: {:?}\n",
                    s.algebra,
                    s.dim,
                    s.contact.depth,
                    dims.join(" "),
                    s.contact.is_contact,
                    s.symmetric.is_symmetric,
                    s.z,
                    s.dim_v,
                    s.dim_w,
                    s.vw_eigenvalues
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Verb::Satake { form, check } => {
            let db = SatakeDb::from_env().map_err(|e| e.to_string())?;
            let d = db.lookup(&form, 8).map_err(|e| e.to_string())?;
            let verdict = match check {
                Check::Contact => {
                    let nodes = contact_grading_node_set(&RootSystem::from_label(d.underlying));
                    let list: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
                    if d.is_compact() {
                        "compact form: no gradation".to_string()
                    } else if djokovic_consistent(&d, &nodes) {
                        format!("passes Djoković criterion for nodes {{{}}}", list.join(","))
                    } else {
                        format!("fails Djoković criterion for nodes {{{}}}: no contact gradation", list.join(","))
                    }
                }
                Check::DepthOne => {
                    let found: Vec<String> = enumerate_depth_one_real_forms(&db, 8)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .filter(|f| f.diagram == d)
                        .map(|f| format!("node {} {:?}", f.node, f.kind))
                        .collect();
                    if found.is_empty() {
                        "no depth-one gradation".to_string()
                    } else {
                        format!("depth-one gradations: {}", found.join(", "))
                    }
                }
            };
            #[derive(Serialize)]
            struct Report<'a> {
                form: &'a str,
                class: &'a str,
                diagram: String,
                verdict: &'a str,
            }
            let rep = Report {
                form: &d.real_form_name,
                class: &d.class,
                diagram: d.ascii(),
                verdict: &verdict,
            };
            emit(format, &rep, || format!("{}{}\n", rep.diagram, verdict));
            Ok(ExitCode::SUCCESS)
        }
        Verb::Contactize { algebra, xi, shape } => {
            let shape = match shape {
                Shape::Diag => FormShape::Diagonal,
                Shape::Hyp => FormShape::Hyperbolic,
            };
            let b = build_with(&parse_algebra(&algebra)?, shape)?;
            let x = match &b.form {
                Some(f) => {
                    let (n, d) = f.name.matrix_shape();
                    matrix_element(&b, &xi_matrix(&xi, n, d)?)?
                }
                None => chevalley_xi(&b, &xi)?,
            };
            let c = build_contactization(&b.algebra, &x).map_err(|e| e.to_string())?;
            let cert = verify_symplectic_symmetric(&b.algebra, &c);
            emit(format, &cert, || {
                format!(
                    "algebra: {}\nxi: {xi}\ndim k: {}\ndim h: {}\ndim p: {}\nB(xi,xi) = 0: {}\n\
                     [p,p] in k: {}\n[k,p] in p: {}\nh ideal in k: {}\ndtheta k-invariant: {}\n\
                     ad_xi^2 on p: {}\nsymplectic symmetric: {}\n",
                    b.spec,
                    cert.dim_k,
                    cert.dim_h,
                    cert.dim_p,
                    c.isotropic,
                    cert.pp_in_k,
                    cert.kp_in_p,
                    cert.h_ideal,
                    cert.dtheta_invariant,
                    cert.ad_xi_squared.as_deref().unwrap_or("not a real scalar"),
                    cert.is_symplectic_symmetric
                )
            });
            Ok(exit(cert.is_symplectic_symmetric))
        }
        Verb::Selftest => {
            let mut ok = true;
            for r in jacobi_suite(100_000) {
                ok &= r.violations == 0;
                let how = if r.exhaustive { "" } else { " (sampled)" };
                println!("jacobi {}{how}: {} violations", r.algebra, r.violations);
            }
            for r in verify_all() {
                ok &= r.all_ok();
                println!("{}", r.summary());
            }
            println!("{}", if ok { "selftest passed" } else { "selftest FAILED" });
            Ok(exit(ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("contactgrad: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("contactgrad: {e}");
            ExitCode::from(2)
        }
    }
}
