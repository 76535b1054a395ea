//! Command-line interface: every library operation behind one binary, with
//! deterministic output. Exit codes: 0 all checks pass, 1 usage or input
//! error, 2 a mathematical verification came out false, 3 a certificate
//! stayed inconclusive under --strict.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use coxnl::cox::{
    monomial_basis, parse_polynomial, poly_from_path, GradedPolynomial, Monomial,
};
use coxnl::fan::{parse_class_literal, parse_divisor_literal, DivisorClass, Fan, Variety};
use coxnl::gen::{dense_polynomial, nonzero_coeff, rng_from_seed};
use coxnl::gorenstein::{euler_coefficients, verify_cox_gorenstein};
use coxnl::ideal::{ideal_from_path, ideal_to_file_format, jacobian_ideal, nondegenerate_check};
use coxnl::nl::{hodge_class_candidates, nl_tangent_codim, FlagDatum};
use coxnl::{CoxError, Int, Rat};

#[derive(Parser)]
#[command(
    name = "coxnl",
    version,
    about = "Exact Cox-ring computations on simplicial complete toric varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output style; machine output is key=value lines only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fan file; report the class group and anticanonical class.
    Fan(FanArgs),
    /// List the monomial basis of one graded piece of the Cox ring.
    Basis(BasisArgs),
    /// Print the toric Jacobian ideal of a hypersurface in ideal format.
    Jacobian(JacobianArgs),
    /// Look for an emptiness certificate proving f nondegenerate.
    Nondegenerate(NondegenerateArgs),
    /// Verify an ideal is Cox-Gorenstein of the expected socle degree.
    Gorenstein(GorensteinArgs),
    /// Check the nef degree bound deg >= q * deg_eta(W) with exact chain.
    Degree(DegreeArgs),
    /// Tangent space report for hypersurfaces containing a flag.
    Nl(NlArgs),
    /// Print the Euler form coefficients (ray minors) of a fan.
    Euler(EulerArgs),
    /// Run the full acceptance suite on the bundled fixtures.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FanAction {
    Validate,
    Classgroup,
    Anticanonical,
}

#[derive(Args)]
struct FanArgs {
    /// Fan file.
    #[arg(long)]
    fan: PathBuf,
    /// Restrict the report to one section; everything by default.
    action: Option<FanAction>,
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Class coordinates c_1,...,c_k (append ;t_1,...,t_m for torsion).
    #[arg(long, conflicts_with = "divisor")]
    class: Option<String>,
    /// Ray-divisor coefficients a_1,...,a_r, reduced to their class.
    #[arg(long)]
    divisor: Option<String>,
}

#[derive(Args)]
struct JacobianArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Polynomial file, or an inline expression like "x0^4 + x1*x2^3".
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct NondegenerateArgs {
    #[arg(long)]
    fan: PathBuf,
    #[arg(long)]
    poly: String,
    /// Largest cone power to try before giving up.
    #[arg(long)]
    m_max: Option<u32>,
    /// Exit 3 when the certificate search stays inconclusive.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct GorensteinArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Ideal file with explicit generators.
    #[arg(long, conflicts_with = "jacobian_of")]
    ideal: Option<PathBuf>,
    /// Take the toric Jacobian ideal of this hypersurface instead.
    #[arg(long)]
    jacobian_of: Option<String>,
    /// Socle degree override; the defaults are sum(deg g_i) - beta_0 for
    /// explicit generators and (dim+1) beta - beta_0 for a Jacobian ideal.
    #[arg(long)]
    socle: Option<String>,
    #[arg(long)]
    m_max: Option<u32>,
}

#[derive(Args)]
struct DegreeArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Ample class eta.
    #[arg(long)]
    eta: String,
    /// Class beta to decompose as q eta + beta'.
    #[arg(long)]
    beta: String,
    /// Nef class cutting W; repeat for higher codimension.
    #[arg(long, required = true)]
    w: Vec<String>,
}

#[derive(Args)]
struct NlArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Degree of the hypersurface family.
    #[arg(long)]
    beta: String,
    /// Flag equations, comma-separated polynomial files.
    #[arg(long = "A", value_delimiter = ',', required = true)]
    equations: Vec<String>,
    /// Cofactors, comma-separated polynomial files; seeded dense cofactors
    /// are drawn when neither --K nor --f is given.
    #[arg(long = "K", value_delimiter = ',', conflicts_with = "f")]
    cofactors: Option<Vec<String>>,
    /// Hypersurface through the flag; cofactors come from the canonical
    /// decomposition.
    #[arg(long)]
    f: Option<String>,
    /// Class representative P for the tangent-space computation.
    #[arg(long = "P", conflicts_with = "generic_class")]
    p: Option<String>,
    /// Draw P from the candidate classes instead of reading it.
    #[arg(long)]
    generic_class: bool,
    /// Seed for generated cofactors and class draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the quasi-smoothness certificate up to this cone power.
    #[arg(long)]
    m_max: Option<u32>,
    /// Exit 3 when a requested certificate stays inconclusive.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct EulerArgs {
    #[arg(long)]
    fan: PathBuf,
}

#[derive(Args)]
struct SelftestArgs {
    /// Trials per structural property; 100 is the contract value.
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FAIL: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("COXNL_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: COXNL_THREADS must be a positive integer");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> coxnl::Result<u8> {
    match &cli.command {
        Command::Fan(args) => cmd_fan(cli, args),
        Command::Basis(args) => cmd_basis(cli, args),
        Command::Jacobian(args) => cmd_jacobian(cli, args),
        Command::Nondegenerate(args) => cmd_nondegenerate(cli, args),
        Command::Gorenstein(args) => cmd_gorenstein(cli, args),
        Command::Degree(args) => cmd_degree(cli, args),
        Command::Nl(args) => cmd_nl(cli, args),
        Command::Euler(args) => cmd_euler(cli, args),
        Command::Selftest(args) => cmd_selftest(cli, args),
    }
}

fn title(cli: &Cli, text: &str) {
    if cli.format == Format::Text {
        println!("# {text}");
    }
}

fn load_variety(path: &Path) -> coxnl::Result<Variety> {
    Variety::new(Fan::from_path(path)?)
}

/// A polynomial argument: a file path when one exists, otherwise an inline
/// expression in the ray variables.
fn load_poly(v: &Variety, text: &str) -> coxnl::Result<GradedPolynomial> {
    let path = Path::new(text);
    if path.exists() {
        poly_from_path(v, path)
    } else if text.ends_with(".poly") {
        Err(CoxError::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no polynomial file {text}"),
        )))
    } else {
        parse_polynomial(v, text)
    }
}

fn class_arg(v: &Variety, text: &str) -> coxnl::Result<DivisorClass> {
    parse_class_literal(v, text)
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn cmd_fan(cli: &Cli, args: &FanArgs) -> coxnl::Result<u8> {
    let fan = Fan::from_path(&args.fan)?;
    let report = fan.validate();
    let action = args.action;
    if action.is_none() || action == Some(FanAction::Validate) {
        title(cli, "validation");
        println!(
            "valid={} primitive_rays={} distinct_rays={} simplicial={} complete={}",
            report.is_valid(),
            report.primitive_rays,
            report.distinct_rays,
            report.simplicial,
            report.complete
        );
        for violation in &report.violations {
            println!("violation={violation}");
        }
        if !report.is_valid() {
            return Ok(EXIT_FAIL);
        }
        if action == Some(FanAction::Validate) {
            return Ok(EXIT_OK);
        }
    }
    // Errors with NotCompleteSimplicial (exit 1) when the fan is unusable
    // and only a class-group section was requested.
    let v = Variety::new(fan)?;
    if action.is_none() || action == Some(FanAction::Classgroup) {
        title(cli, "class group");
        let cg = v.class_group();
        let torsion = if cg.torsion.is_empty() {
            "none".to_string()
        } else {
            cg.torsion
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        println!("dim={} rays={}", v.dim(), v.n_rays());
        println!("free_rank={} torsion={torsion}", cg.free_rank);
        for rho in 0..v.n_rays() {
            println!("ray_class rho={rho} class={}", v.ray_class(rho));
        }
    }
    if action.is_none() || action == Some(FanAction::Anticanonical) {
        title(cli, "anticanonical");
        println!("anticanonical={}", v.anticanonical());
    }
    Ok(EXIT_OK)
}

fn cmd_basis(cli: &Cli, args: &BasisArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let class = match (&args.class, &args.divisor) {
        (Some(c), None) => class_arg(&v, c)?,
        (None, Some(d)) => parse_divisor_literal(&v, d)?,
        _ => {
            return Err(CoxError::InvalidArgument(
                "give exactly one of --class or --divisor".into(),
            ))
        }
    };
    let basis = monomial_basis(&v, &class);
    title(cli, &format!("{} monomials of class {class}", basis.len()));
    for m in &basis {
        match cli.format {
            Format::Text => println!("{}", monomial_text(m)),
            Format::Machine => println!(
                "m={}",
                m.exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_jacobian(cli: &Cli, args: &JacobianArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let f = load_poly(&v, &args.poly)?;
    let j0 = jacobian_ideal(&f, &v);
    title(cli, "toric Jacobian ideal");
    print!("{}", ideal_to_file_format(&j0));
    Ok(EXIT_OK)
}

fn cmd_nondegenerate(cli: &Cli, args: &NondegenerateArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let f = load_poly(&v, &args.poly)?;
    let report = nondegenerate_check(&v, &f, args.m_max);
    title(cli, "emptiness certificate for (f) + J0(f)");
    println!("{report}");
    Ok(if report.certified {
        EXIT_OK
    } else if args.strict {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    })
}

fn cmd_gorenstein(cli: &Cli, args: &GorensteinArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let (ideal, default_socle) = match (&args.ideal, &args.jacobian_of) {
        (Some(path), None) => {
            let ideal = ideal_from_path(&v, path)?;
            let mut total = v.zero_class();
            for g in ideal.generators() {
                total = v.add_classes(&total, g.degree());
            }
            let socle = v.sub_classes(&total, &v.anticanonical());
            (ideal, socle)
        }
        (None, Some(text)) => {
            let f = load_poly(&v, text)?;
            let socle = v.sub_classes(
                &v.scale_class(f.degree(), (v.dim() + 1) as i64),
                &v.anticanonical(),
            );
            (jacobian_ideal(&f, &v), socle)
        }
        _ => {
            return Err(CoxError::InvalidArgument(
                "give exactly one of --ideal or --jacobian-of".into(),
            ))
        }
    };
    let socle = match &args.socle {
        Some(text) => class_arg(&v, text)?,
        None => default_socle,
    };
    title(cli, &format!("Cox-Gorenstein verification, socle degree {socle}"));
    let report = verify_cox_gorenstein(&v, &ideal, &socle, args.m_max);
    println!("{report}");
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_degree(cli: &Cli, args: &DegreeArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let eta = class_arg(&v, &args.eta)?;
    let beta = class_arg(&v, &args.beta)?;
    let w: coxnl::Result<Vec<DivisorClass>> =
        args.w.iter().map(|text| class_arg(&v, text)).collect();
    let report = coxnl::chow::verify_degree_bound(&v, &beta, &eta, &w?)?;
    title(cli, "degree bound");
    println!("{report}");
    Ok(if report.bound_ok { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_nl(cli: &Cli, args: &NlArgs) -> coxnl::Result<u8> {
    let v = load_variety(&args.fan)?;
    let beta = class_arg(&v, &args.beta)?;
    let equations: coxnl::Result<Vec<GradedPolynomial>> =
        args.equations.iter().map(|t| load_poly(&v, t)).collect();
    let equations = equations?;

    let datum = if let Some(paths) = &args.cofactors {
        let cofactors: coxnl::Result<Vec<GradedPolynomial>> =
            paths.iter().map(|t| load_poly(&v, t)).collect();
        FlagDatum::new(&v, equations, cofactors?)?
    } else if let Some(text) = &args.f {
        let f = load_poly(&v, text)?;
        FlagDatum::from_hypersurface(&v, equations, &f)?
    } else {
        let mut rng = rng_from_seed(args.seed);
        let cofactors: coxnl::Result<Vec<GradedPolynomial>> = equations
            .iter()
            .map(|a| {
                let deg = v.sub_classes(&beta, a.degree());
                if monomial_basis(&v, &deg).is_empty() {
                    return Err(CoxError::NotEffective(format!(
                        "cofactor degree {deg} has no monomials"
                    )));
                }
                Ok(dense_polynomial(&v, &deg, &mut rng))
            })
            .collect();
        FlagDatum::new(&v, equations, cofactors?)?
    };
    if datum.beta != beta {
        return Err(CoxError::DegreeMismatch(format!(
            "flag datum has degree {}, --beta says {beta}",
            datum.beta
        )));
    }

    let p_storage;
    let p = match (&args.p, args.generic_class) {
        (Some(text), _) => {
            p_storage = load_poly(&v, text)?;
            Some(&p_storage)
        }
        (None, true) => {
            let cands = hodge_class_candidates(&v, &datum)?;
            let (n_class, _) = datum.socle_data(&v)?;
            let basis = monomial_basis(&v, &n_class);
            let mut rng = rng_from_seed(args.seed);
            let mut coeffs = vec![Rat::from(Int::from(0)); basis.len()];
            for row in &cands.space.basis {
                let c = Rat::from(Int::from(nonzero_coeff(&mut rng)));
                for (i, x) in row.iter().enumerate() {
                    coeffs[i] += &c * x;
                }
            }
            let terms: Vec<_> = basis
                .into_iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            println!(
                "candidates_dim={} jacobian_dim={} strict={}",
                cands.space.dim(),
                cands.jacobian_dim,
                cands.strict
            );
            p_storage = GradedPolynomial::from_terms(&v, n_class, terms)?;
            Some(&p_storage)
        }
        (None, false) => None,
    };

    title(cli, "tangent space report");
    let report = nl_tangent_codim(&v, &datum, p, args.m_max)?;
    println!("{report}");
    Ok(if args.strict && report.quasi_smooth == Some(false) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    })
}

fn cmd_euler(cli: &Cli, args: &EulerArgs) -> coxnl::Result<u8> {
    let fan = Fan::from_path(&args.fan)?;
    let report = fan.validate();
    if !report.is_valid() {
        return Err(CoxError::NotCompleteSimplicial(report.violations.join("; ")));
    }
    let form = euler_coefficients(&fan);
    title(cli, "Euler form coefficients");
    for (subset, det) in &form.dets {
        let iota = subset
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("iota={iota} det={det}");
    }
    Ok(EXIT_OK)
}

fn cmd_selftest(cli: &Cli, args: &SelftestArgs) -> coxnl::Result<u8> {
    let results = coxnl::selftest::run_all(args.trials);
    let mut all_pass = true;
    for r in &results {
        println!("{}", r.line());
        all_pass &= r.pass;
    }
    title(cli, "summary");
    println!("selftest={}", if all_pass { "PASS" } else { "FAIL" });
    Ok(if all_pass { EXIT_OK } else { EXIT_FAIL })
}
