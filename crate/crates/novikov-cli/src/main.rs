//! `novikov` — Gröbner-Shirshov bases in free commutative differential
//! algebras and free right Gelfand-Dorfman-Novikov algebras.
//!
//! Exit codes: 0 success, 1 parse or input error, 2 semantic error
//! (homogeneity or weight violations), 3 resource cap exceeded or verdict
//! inconclusive under the cap. Results go to stdout and are deterministic;
//! progress and statistics go to stderr.

mod error;
mod json;
mod parse;
mod session;

use clap::{ArgGroup, Parser, Subcommand};
use error::CliError;
use novikov_core::{
    buchberger_capped, check_identities, circle, irr_enumerate, member_diff, member_gdn, ratio,
    CapReport, CompletionState, DVar, GdnMode, Generator, GeneratorSet, Monomial, Polynomial,
    Reducer, RelationSet, SWordStep, Tableau,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use session::Session;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "novikov", version, about = "Gröbner-Shirshov bases for differential and GDN algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Complete a relation file into a Gröbner-Shirshov basis.
    #[command(group(ArgGroup::new("bound").required(true).args(["stage", "cap"])))]
    Complete {
        /// A `.gdn` session file or a `.json` basis document.
        file: PathBuf,
        /// Exact staged completion through this stage (needs D∪X-homogeneous relations).
        #[arg(long)]
        stage: Option<u32>,
        /// Capped completion: check every ambiguity of dx-length at most this cap.
        #[arg(long)]
        cap: Option<u32>,
        /// Also write the basis as a JSON document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normal form of an expression modulo the differential ideal.
    Nf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        /// Force bounded mode with this dx-length cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Differential ideal membership, with an S-word certificate when true.
    Member {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        /// Force bounded mode with this dx-length cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Normal form inside the free GDN algebra (weight -1 expressions only).
    GdnNf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        /// Force bounded mode with this dx-length cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// GDN ideal membership (weight -1 expressions only).
    GdnMember {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        /// Force bounded mode with this dx-length cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Enumerate the GDN tableaux of a degree (a linear basis of the free GDN algebra).
    Tableaux {
        /// Generators, smallest first, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
        #[arg(long)]
        degree: u32,
        /// Append each tableau's leading monomial.
        #[arg(long)]
        leading: bool,
    },
    /// Enumerate irreducible monomials modulo the relations as given.
    Irr {
        file: PathBuf,
        /// Keep monomials of at most this length.
        #[arg(long)]
        max_len: Option<u32>,
        /// Keep monomials of exactly this weight (use -1 for the GDN basis).
        #[arg(long, allow_negative_numbers = true)]
        weight: Option<i64>,
        /// Keep monomials of dx-length at most this bound.
        #[arg(long)]
        max_dx: Option<u32>,
    },
    /// Built-in demonstrations.
    Demo {
        #[command(subcommand)]
        which: DemoCmd,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    /// The degree-6 identity showing the one-generated GDN algebra of weight -1 is not free.
    Nonfree,
    /// Randomized exact checks of the two GDN identities for the circle product.
    Identities {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.cmd) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Complete {
            file,
            stage,
            cap,
            out,
        } => cmd_complete(&file, stage, cap, out.as_deref()),
        Cmd::Nf { file, expr, cap } => cmd_nf(&file, &expr, cap, false),
        Cmd::GdnNf { file, expr, cap } => cmd_nf(&file, &expr, cap, true),
        Cmd::Member { file, expr, cap } => cmd_member(&file, &expr, cap, false),
        Cmd::GdnMember { file, expr, cap } => cmd_member(&file, &expr, cap, true),
        Cmd::Tableaux {
            gens,
            degree,
            leading,
        } => cmd_tableaux(&gens, degree, leading),
        Cmd::Irr {
            file,
            max_len,
            weight,
            max_dx,
        } => cmd_irr(&file, max_len, weight, max_dx),
        Cmd::Demo { which } => match which {
            DemoCmd::Nonfree => cmd_demo_nonfree(),
            DemoCmd::Identities { seed, count } => cmd_demo_identities(seed, count),
        },
    }
}

/// Loads either a `.gdn` session or a previously written `.json` basis.
fn load_input(path: &Path) -> Result<Session, CliError> {
    if path.extension().is_some_and(|e| e == "json") {
        json::load(path)
    } else {
        session::load(path)
    }
}

fn eval_expr(expr: &str, gens: &GeneratorSet) -> Result<Polynomial, CliError> {
    let ast = parse::parse_expr(expr)?;
    Ok(parse::eval(&ast, gens)?)
}

/// Cap used when bounded mode is forced or required but no --cap was given:
/// large enough to decide dx-homogeneous questions about `f` exactly.
fn default_cap(f: &Polynomial, rels: &RelationSet) -> u32 {
    f.max_dx().unwrap_or(0).max(rels.max_dx().unwrap_or(0))
}

fn print_mode(cap: Option<u32>) {
    match cap {
        None => println!("mode: exact"),
        Some(l) => println!("mode: bounded({l})"),
    }
}

fn report_to_stderr(r: &CapReport) {
    eprintln!(
        "cap {}: {} rounds, {} ambiguities checked, {} nontrivial, {} discarded over cap",
        r.cap, r.rounds, r.ambiguities_checked, r.nontrivial_found, r.discarded_over_cap
    );
}

fn print_certificate(steps: &[SWordStep], basis: &RelationSet) {
    let gens = basis.gens();
    println!("certificate:");
    for s in steps {
        println!(
            "  ({}) * {} * D^{}({})",
            s.coeff,
            s.cofactor.display(gens),
            s.shift,
            basis.relations()[s.relation].display(gens)
        );
    }
}

fn write_doc(path: &Path, doc: &json::BasisDoc) -> Result<(), CliError> {
    std::fs::write(path, json::render(doc))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn cmd_complete(
    file: &Path,
    stage: Option<u32>,
    cap: Option<u32>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let sess = load_input(file)?;
    match (stage, cap) {
        (Some(n), None) => {
            // Bounding by dx n makes every stage finite and the result exact
            // for all elements of dx-length at most n (stage stability).
            let mut state = CompletionState::new(&sess.rels, Some(n))?;
            for _ in 0..n {
                let rec = state.stage_step();
                eprintln!(
                    "stage {} -> {}: {} compositions checked, {} entered, {} removed",
                    rec.stage,
                    rec.stage + 1,
                    rec.compositions_checked,
                    rec.entered.len(),
                    rec.removed.len()
                );
            }
            let basis = state.to_relation_set();
            for p in basis.relations() {
                println!("{}", p.display(basis.gens()));
            }
            if let Some(path) = out {
                write_doc(path, &json::staged_doc(sess.name.as_deref(), &state))?;
            }
            Ok(())
        }
        (None, Some(l)) => {
            let done = buchberger_capped(&sess.rels, l);
            report_to_stderr(&done.report);
            for p in done.basis.relations() {
                println!("{}", p.display(done.basis.gens()));
            }
            if let Some(path) = out {
                write_doc(path, &json::capped_doc(sess.name.as_deref(), &done))?;
            }
            if done.report.truncated() {
                return Err(CliError::CapExceeded(format!(
                    "completion truncated: {} discovered elements exceeded dx cap {}; raise --cap",
                    done.report.discarded_over_cap, done.report.cap
                )));
            }
            Ok(())
        }
        _ => unreachable!("clap enforces exactly one of --stage/--cap"),
    }
}

fn cmd_nf(file: &Path, expr: &str, cap: Option<u32>, gdn: bool) -> Result<(), CliError> {
    let sess = load_input(file)?;
    let gens = sess.rels.gens().clone();
    let f = eval_expr(expr, &gens)?;
    let exact = sess.rels.is_dx_homogeneous() && cap.is_none();
    let used_cap = if exact {
        None
    } else {
        Some(cap.unwrap_or_else(|| default_cap(&f, &sess.rels)))
    };
    print_mode(used_cap);
    let nf = if gdn {
        let mode = match used_cap {
            None => GdnMode::Exact,
            Some(l) => GdnMode::Capped(l),
        };
        let m = member_gdn(&f, &sess.rels, mode)?;
        if let Some(r) = &m.report {
            report_to_stderr(r);
        }
        m.normal_form
    } else if exact {
        member_diff(&f, &sess.rels)?.normal_form
    } else {
        let done = buchberger_capped(&sess.rels, used_cap.unwrap());
        report_to_stderr(&done.report);
        Reducer::from_set(&done.basis).normal_form(&f).0
    };
    println!("{}", nf.display(&gens));
    Ok(())
}

fn cmd_member(file: &Path, expr: &str, cap: Option<u32>, gdn: bool) -> Result<(), CliError> {
    let sess = load_input(file)?;
    let gens = sess.rels.gens().clone();
    let f = eval_expr(expr, &gens)?;
    let exact = sess.rels.is_dx_homogeneous() && cap.is_none();
    let used_cap = if exact {
        None
    } else {
        Some(cap.unwrap_or_else(|| default_cap(&f, &sess.rels)))
    };
    print_mode(used_cap);
    let (member, nf, steps, basis) = if gdn {
        let mode = match used_cap {
            None => GdnMode::Exact,
            Some(l) => GdnMode::Capped(l),
        };
        let m = member_gdn(&f, &sess.rels, mode)?;
        if let Some(r) = &m.report {
            report_to_stderr(r);
        }
        (m.member, m.normal_form, m.certificate, m.basis)
    } else if exact {
        let m = member_diff(&f, &sess.rels)?;
        (m.member, m.normal_form, m.certificate, m.basis)
    } else {
        let done = buchberger_capped(&sess.rels, used_cap.unwrap());
        report_to_stderr(&done.report);
        let (nf, steps) = Reducer::from_set(&done.basis).normal_form(&f);
        (nf.is_zero(), nf, steps, done.basis)
    };
    if member {
        println!("member: true");
        print_certificate(&steps, &basis);
        println!("remainder: 0");
        Ok(())
    } else if exact {
        println!("member: false");
        println!("normal form: {}", nf.display(&gens));
        Ok(())
    } else {
        let l = used_cap.unwrap();
        println!("member: false (inconclusive under cap {l})");
        println!("normal form: {}", nf.display(&gens));
        Err(CliError::CapExceeded(format!(
            "membership undecided under cap {l}: the normal form is nonzero but the cap may hide reductions; raise --cap"
        )))
    }
}

fn cmd_tableaux(names: &[String], degree: u32, leading: bool) -> Result<(), CliError> {
    let gens = GeneratorSet::new(names.iter().map(String::as_str))
        .map_err(|e| CliError::semantic(e.to_string()))?;
    let tabs = Tableau::enumerate(&gens, degree)?;
    for t in &tabs {
        let line = t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&g| gens.name(g))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ");
        if leading {
            println!("{line} => {}", t.leading().display(&gens));
        } else {
            println!("{line}");
        }
    }
    eprintln!("{} tableaux of degree {degree}", tabs.len());
    Ok(())
}

fn cmd_irr(
    file: &Path,
    max_len: Option<u32>,
    weight: Option<i64>,
    max_dx: Option<u32>,
) -> Result<(), CliError> {
    let sess = load_input(file)?;
    let out = irr_enumerate(&sess.rels, max_len, weight, max_dx)?;
    for m in &out {
        println!("{}", m.display(sess.rels.gens()));
    }
    eprintln!("{} irreducible monomials", out.len());
    Ok(())
}

fn cmd_demo_nonfree() -> Result<(), CliError> {
    let gens = GeneratorSet::new(["a"]).expect("fixed alphabet");
    let a = Polynomial::from_monomial(Monomial::var(DVar::new(Generator(0), -1)));
    let aa = circle(&a, &a);
    let aaa = circle(&aa, &a);
    let lhs = circle(&aa, &circle(&aaa, &a));
    let rhs = circle(&aaa, &aaa);
    println!("(a o a) o (((a o a) o a) o a)");
    println!("  = {}", lhs.display(&gens));
    println!("((a o a) o a) o ((a o a) o a)");
    println!("  = {}", rhs.display(&gens));
    let diff = &lhs - &rhs;
    println!("difference = {}", diff.display(&gens));
    Ok(())
}

fn sample_poly(rng: &mut ChaCha8Rng, gens: &GeneratorSet) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..rng.gen_range(0..=3) {
        let len = rng.gen_range(0..=3usize);
        let m = Monomial::from_vars((0..len).map(|_| {
            DVar::new(
                Generator(rng.gen_range(0..gens.len() as u32)),
                rng.gen_range(-1..=3),
            )
        }));
        let n = [-7i64, -3, -2, -1, 1, 2, 3, 5][rng.gen_range(0..8)];
        let d = rng.gen_range(1..=9);
        p.add_scaled(&ratio(n, d), &Polynomial::from_monomial(m));
    }
    p
}

fn cmd_demo_identities(seed: u64, count: u32) -> Result<(), CliError> {
    let gens = GeneratorSet::new(["a", "b", "c"]).expect("fixed alphabet");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let f = sample_poly(&mut rng, &gens);
        let g = sample_poly(&mut rng, &gens);
        let h = sample_poly(&mut rng, &gens);
        let (left_symmetry, right_commutativity) = check_identities(&f, &g, &h);
        if !left_symmetry.is_zero() || !right_commutativity.is_zero() {
            return Err(CliError::semantic(format!(
                "identity defect nonzero at triple {i} (seed {seed})"
            )));
        }
    }
    println!("seed {seed}: {count} triples checked, both identity defects are 0");
    Ok(())
}
