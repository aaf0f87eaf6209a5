use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sl2toric::action::{is_b_stable, translate_check};
use sl2toric::error::{Error, Result};
use sl2toric::ideals::{ideal_generators, verify_hilbert_window, Variant, Verdict};
use sl2toric::lambda::{basis_rc_n, c_min};
use sl2toric::report;
use sl2toric::scalar::{parse_rat, rat, Rat};
use sl2toric::semigroup::{embedding_vector, invariant_generators, minimal_generators};
use sl2toric::tangent::tangent_dimension_j0;
use sl2toric::{ideals, VarietyParams};

#[derive(Parser)]
#[command(
    name = "sl2toric",
    version,
    about = "Exact semigroup, weight-space and Hilbert-function computations \
             for torus quotients of the hypersurface X0^(q-p) = X1X4 - X2X3"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads for the verification fan-out
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Derived invariants, orbit labels, semigroup generators
    Info { p: i64, q: i64, m: i64 },
    /// Minimal semigroup generators, embedding vector, invariant monomials
    Semigroup {
        p: i64,
        q: i64,
        m: i64,
        /// Search bound on the first coordinate (default: certified bound)
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Rows (n, c, omega, f) of the refined grading
    LambdaTable {
        p: i64,
        q: i64,
        m: i64,
        /// Range of levels, e.g. 0..2 or -3..3
        #[arg(long, default_value = "0..2", allow_hyphen_values = true)]
        n: String,
        /// Residue class of the columns
        #[arg(long, default_value_t = 0)]
        d: i64,
        /// Largest column to list
        #[arg(long = "c-cap", default_value_t = 8)]
        c_cap: i64,
        /// Second off-diagonal variable (3 or 4)
        #[arg(long, default_value_t = 4)]
        j: usize,
    },
    /// Window-relative Hilbert-function verification for a family
    Verify {
        p: i64,
        q: i64,
        m: i64,
        /// Family: I or J
        variant: String,
        /// Comma-separated rational parameters, e.g. 0,1,3/7
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        s: String,
        /// Weight window, e.g. -4..4
        #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
        n: String,
        /// Degree truncation bound
        #[arg(long = "D", default_value_t = 12)]
        degree_bound: u32,
    },
    /// Tangent-space dimension at the Borel-fixed ideal
    Tangent {
        p: i64,
        q: i64,
        m: i64,
        #[arg(long = "D", default_value_t = 10)]
        degree_bound: u32,
    },
    /// Borel-stability of the candidate ideals
    Borel {
        p: i64,
        q: i64,
        m: i64,
        #[arg(long = "D", default_value_t = 8)]
        degree_bound: u32,
    },
    /// Torus-translate identity between family members
    Translate {
        p: i64,
        q: i64,
        m: i64,
        /// Family: I or J
        variant: String,
        /// Torus parameter
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        t: String,
    },
    /// Vanishing of the s=1 generators on the orbit parametrization
    OrbitVanish { p: i64, q: i64, m: i64 },
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("expected a range like -4..4, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_variant(text: &str) -> Result<Variant> {
    match text {
        "I" | "i" => Ok(Variant::I),
        "J" | "j" => Ok(Variant::J),
        other => Err(Error::Parse(format!("expected variant I or J, got {other:?}"))),
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Info { p, q, m } => cmd_info(*p, *q, *m, cli.format),
        Cmd::Semigroup { p, q, m, bound } => cmd_semigroup(*p, *q, *m, *bound, cli.format),
        Cmd::LambdaTable { p, q, m, n, d, c_cap, j } => {
            cmd_lambda_table(*p, *q, *m, n, *d, *c_cap, *j, cli.format)
        }
        Cmd::Verify { p, q, m, variant, s, n, degree_bound } => {
            cmd_verify(*p, *q, *m, variant, s, n, *degree_bound, cli.format)
        }
        Cmd::Tangent { p, q, m, degree_bound } => {
            cmd_tangent(*p, *q, *m, *degree_bound, cli.format)
        }
        Cmd::Borel { p, q, m, degree_bound } => cmd_borel(*p, *q, *m, *degree_bound, cli.format),
        Cmd::Translate { p, q, m, variant, t } => {
            cmd_translate(*p, *q, *m, variant, t, cli.format)
        }
        Cmd::OrbitVanish { p, q, m } => cmd_orbit_vanish(*p, *q, *m, cli.format),
    }
}

fn default_bound(params: &VarietyParams) -> i64 {
    (params.a() * params.q()).max(30)
}

fn cmd_info(p: i64, q: i64, m: i64, format: Format) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let gens = minimal_generators(&v, default_bound(&v));
    let gen_list: Vec<(i64, i64)> = gens.generators.iter().map(|g| (g.i, g.j)).collect();
    let embedding: Option<Vec<String>> = if v.is_smooth() {
        None
    } else {
        let (vec, _) = embedding_vector(&v, default_bound(&v))?;
        Some(vec.iter().map(|c| c.to_string()).collect())
    };
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "p": p, "q": q, "m": m,
                "height": format!("{p}/{q}"),
                "k": v.k(), "a": v.a(), "b": v.b(),
                "toric": v.is_toric(),
                "smooth": v.is_smooth(),
                "open_orbit": "SL(2)/C_m",
                "two_dim_orbit": format!("SL(2)/U_{}", v.a() * (q + p)),
                "semigroup_generators": gen_list,
                "embedding_vector": embedding,
            }))
            .unwrap()
        );
        return Ok(0);
    }
    println!("height l = {p}/{q}, degree m = {m}");
    println!("k = {}, a = {}, b = {}", v.k(), v.a(), v.b());
    println!("toric: {}", v.is_toric());
    if v.is_smooth() {
        println!("smooth case (p = q): ideal and tangent commands are disabled");
    } else {
        println!("open orbit: SL(2)/C_{m}");
        println!("2-dimensional orbit: SL(2)/U_{}", v.a() * (q + p));
    }
    println!(
        "semigroup generators (bound {}): {:?}",
        gens.i_bound, gen_list
    );
    if let Some(embedding) = embedding {
        println!("embedding vector: ({})", embedding.join(", "));
    }
    if !v.is_toric() {
        println!("non-toric case: the J-family commands are disabled");
    }
    Ok(0)
}

fn cmd_semigroup(p: i64, q: i64, m: i64, bound: Option<i64>, format: Format) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let bound = bound.unwrap_or_else(|| default_bound(&v));
    let gens = minimal_generators(&v, bound);
    let invariants: Option<Vec<String>> = if v.is_smooth() {
        None
    } else {
        Some(
            invariant_generators(&v, 1, 4, bound)?
                .iter()
                .map(|m| m.to_string())
                .collect(),
        )
    };
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "bound": bound,
                "certified_complete": gens.certified_complete,
                "generators": gens.generators.iter().map(|g| (g.i, g.j)).collect::<Vec<_>>(),
                "invariant_monomials": invariants,
            }))
            .unwrap()
        );
        return Ok(0);
    }
    println!("i\tj");
    for g in &gens.generators {
        println!("{}\t{}", g.i, g.j);
    }
    println!("# bound {bound}, complete: {}", gens.certified_complete);
    if let Some(invariants) = invariants {
        println!("# invariant monomials: {}", invariants.join(", "));
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_lambda_table(
    p: i64,
    q: i64,
    m: i64,
    n_range: &str,
    d: i64,
    c_cap: i64,
    j: usize,
    format: Format,
) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    v.require_singular()?;
    if j != 3 && j != 4 {
        return Err(Error::Parse("the second variable must be 3 or 4".into()));
    }
    let (lo, hi) = parse_range(n_range)?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        let first = match c_min(&v, n, d) {
            Ok(c) => c,
            Err(Error::EmptyWeight { .. }) => continue,
            Err(e) => return Err(e),
        };
        let mut c = first;
        while c <= c_cap {
            for mono in basis_rc_n(&v, n, c, j) {
                let lam = sl2toric::lambda::index_of(&v, &mono, j);
                rows.push((n, c, lam.omega, mono.to_string()));
            }
            c += v.m();
        }
    }
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!(rows
                .iter()
                .map(|(n, c, w, f)| json!({"n": n, "c": c, "omega": w, "f": f}))
                .collect::<Vec<_>>()))
            .unwrap()
        );
        return Ok(0);
    }
    println!("n\tc\tomega\tf");
    for (n, c, w, f) in rows {
        println!("{n}\t{c}\t{w}\t{f}");
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    p: i64,
    q: i64,
    m: i64,
    variant: &str,
    s_list: &str,
    n_range: &str,
    degree_bound: u32,
    format: Format,
) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let variant = parse_variant(variant)?;
    let n_range = parse_range(n_range)?;
    let s_values: Vec<Rat> = s_list
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<_>>>()?;
    let mut verdicts = Vec::new();
    let mut json_reports = Vec::new();
    for s in &s_values {
        let report = verify_hilbert_window(&v, variant, s, n_range, degree_bound)?;
        verdicts.push(report.verdict);
        if format == Format::Json {
            json_reports.push(report::hilbert_json(&report));
        } else {
            println!("# variant {variant}, s = {s}");
            print!("{}", report::hilbert_tsv(&report));
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&json!(json_reports)).unwrap());
    }
    if verdicts.iter().any(|v| *v == Verdict::Falsified) {
        Ok(4)
    } else if verdicts.iter().any(|v| *v == Verdict::Inconclusive) {
        Ok(3)
    } else {
        Ok(0)
    }
}

fn cmd_tangent(p: i64, q: i64, m: i64, degree_bound: u32, format: Format) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let report = tangent_dimension_j0(&v, degree_bound)?;
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report::tangent_json(&report)).unwrap()
        );
    } else {
        print!("{}", report::tangent_tsv(&report));
    }
    Ok(0)
}

fn cmd_borel(p: i64, q: i64, m: i64, degree_bound: u32, format: Format) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let candidates = [
        ("J_0", Variant::J, rat(0)),
        ("I_0", Variant::I, rat(0)),
        ("I_1", Variant::I, rat(1)),
        ("J_1", Variant::J, rat(1)),
    ];
    let mut rows = Vec::new();
    for (name, variant, s) in candidates {
        let spec = ideal_generators(&v, variant, Some(s))?;
        // the degree bound must cover every generator of the candidate
        let d = degree_bound.max(spec.max_generator_degree());
        rows.push((name, is_b_stable(&v, &spec, d)?));
    }
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!(rows
                .iter()
                .map(|(n, s)| json!({"ideal": n, "b_stable": s}))
                .collect::<Vec<_>>()))
            .unwrap()
        );
        return Ok(0);
    }
    println!("ideal\tb_stable");
    for (name, stable) in rows {
        println!("{name}\t{stable}");
    }
    Ok(0)
}

fn cmd_translate(
    p: i64,
    q: i64,
    m: i64,
    variant: &str,
    t: &str,
    format: Format,
) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let variant = parse_variant(variant)?;
    let t = parse_rat(t)?;
    let (s, ok) = translate_check(&v, variant, &t)?;
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "variant": variant.to_string(),
                "t": t.to_string(),
                "s": s.to_string(),
                "pass": ok,
            }))
            .unwrap()
        );
    } else {
        println!("variant {variant}: t = {t} sends s=1 to s = {s}: {}", if ok { "pass" } else { "FAIL" });
    }
    Ok(if ok { 0 } else { 4 })
}

fn cmd_orbit_vanish(p: i64, q: i64, m: i64, format: Format) -> Result<i32> {
    let v = VarietyParams::new(p, q, m)?;
    let ok = ideals::verify_orbit_vanishing(&v)?;
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&json!({"vanishes": ok})).unwrap());
    } else {
        println!("orbit vanishing: {ok}");
    }
    Ok(if ok { 0 } else { 4 })
}
