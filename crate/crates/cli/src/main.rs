use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eaqecc::bch::{hartmann_tzeng_bound, BchFamily};
use eaqecc::eaqecc::{enlargement_demo, entanglement_witness, DistanceOptions};
use eaqecc::gv::{
    gv_finite_holds_with, gv_finite_sum, gv_finite_terms, gv_threshold_with, GvQuery, GvRule,
};
use eaqecc::tables::{
    self, format_list, pair_distances, Mismatch, ReproOptions, Table1Result, Table2Result,
};
use eaqecc::weight::SearchOptions;
use eaqecc::{AsymEaqeccParams, Error, FiniteField, LinearCode, WeightReport, DEFAULT_BUDGET};

const MIN_BUDGET: u64 = 1 << 10;

#[derive(Parser, Debug)]
#[command(
    name = "eaqecc",
    version,
    about = "Asymmetric entanglement-assisted quantum codes from classical codes"
)]
struct Cli {
    /// Maximum number of codewords or supports enumerated per distance.
    #[arg(long, global = true, env = "EAQECC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[arg(long, global = true, value_enum)]
    output: Option<Output>,

    /// Shorthand for `--output csv`.
    #[arg(long, global = true)]
    csv: bool,

    /// Run distance enumerations on a single thread.
    #[arg(long, global = true)]
    serial: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Sum,
    PerTerm,
}

impl From<Rule> for GvRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Sum => GvRule::Sum,
            Rule::PerTerm => GvRule::PerTerm,
        }
    }
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct GvArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k1: u32,
    #[arg(long)]
    k2: u32,
    #[arg(long)]
    c: u32,
    #[arg(long, value_enum, default_value_t = Rule::Sum)]
    rule: Rule,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute a golden table and compare it cell by cell.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Skip exhaustive distances and report bounds only.
        #[arg(long)]
        bounds_only: bool,
        #[arg(long, value_enum, default_value_t = Rule::Sum)]
        rule: Rule,
    },
    /// Evaluate the finite GV inequality at one distance pair.
    GvCheck {
        #[command(flatten)]
        gv: GvArgs,
        #[arg(long)]
        dz: u32,
        #[arg(long)]
        dx: u32,
    },
    /// Threshold pair for fixed (q, n, k1, k2, c).
    GvThreshold {
        #[command(flatten)]
        gv: GvArgs,
    },
    /// Build C1, C2 from cyclotomic cosets and report the code parameters.
    BchConstruct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        c1_cosets: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        c2_cosets: Vec<u32>,
        /// Field of the evaluation points, e.g. 2^8.
        #[arg(long)]
        bigfield: Option<String>,
    },
    /// Parameters of the pair stored in two code files, plus the GV verdict.
    Analyze { c1: PathBuf, c2: PathBuf },
    /// Entanglement increasing d_z at fixed rate over GF(q), n = q - 1.
    EnlargeDemo {
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

struct Ctx {
    output: Output,
    search: SearchOptions,
}

impl Ctx {
    fn distance_options(&self) -> DistanceOptions {
        DistanceOptions {
            search: self.search,
            ..Default::default()
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn csv_line(cells: &[String]) -> String {
    cells.join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.budget < MIN_BUDGET {
        eprintln!("error: --budget must be at least {MIN_BUDGET}");
        return ExitCode::from(2);
    }
    let output = if cli.csv {
        Output::Csv
    } else {
        cli.output.unwrap_or(match cli.command {
            Command::Tables { .. } => Output::Csv,
            _ => Output::Human,
        })
    };
    let ctx = Ctx {
        output,
        search: SearchOptions {
            budget: cli.budget,
            parallel: !cli.serial,
            ..Default::default()
        },
    };
    let result = match cli.command {
        Command::Tables {
            which,
            bounds_only,
            rule,
        } => run_tables(&ctx, which, bounds_only, rule.into()),
        Command::GvCheck { gv, dz, dx } => run_gv_check(&ctx, gv, dz, dx),
        Command::GvThreshold { gv } => run_gv_threshold(&ctx, gv),
        Command::BchConstruct {
            q,
            n,
            c1_cosets,
            c2_cosets,
            bigfield,
        } => run_bch(&ctx, q, n, &c1_cosets, &c2_cosets, bigfield.as_deref()),
        Command::Analyze { c1, c2 } => run_analyze(&ctx, &c1, &c2),
        Command::EnlargeDemo { q } => run_enlarge(&ctx, q),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn report_mismatches(ms: &[Mismatch]) -> CmdResult {
    for m in ms {
        eprintln!(
            "mismatch: row {} {}: golden {} computed {}",
            m.row, m.column, m.printed, m.computed
        );
    }
    if ms.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn note_distances(row: usize, dz: u32, dx: u32, r: &tables::PairDistances) {
    for (side, printed, w) in [("dz", dz, r.dz_dual), ("dx", dx, r.dx_dual)] {
        if w.exact && w.value() != Some(printed) {
            eprintln!("note: row {row} {side}: golden {printed} is a bound, exhaustive {w}");
        }
    }
}

fn run_tables(ctx: &Ctx, which: u8, bounds_only: bool, rule: GvRule) -> CmdResult {
    let opts = ReproOptions {
        search: ctx.search,
        distances: !bounds_only,
        rule,
    };
    let mut mismatches = Vec::new();
    if which == 1 {
        let golden = tables::table1(true)?;
        let results = tables::reproduce_table1(&golden, &opts)?;
        for (g, r) in golden.iter().zip(&results) {
            mismatches.extend(tables::table1_mismatches(g, r));
            note_distances(r.row, g.dz, g.dx, &r.distances);
        }
        match ctx.output {
            Output::Csv => print!("{}", tables::table1_csv(&results)),
            Output::Json => println!("{}", json(&results)),
            Output::Human => results.iter().for_each(|r| println!("{}", human_t1(r))),
        }
    } else {
        let golden = tables::table2(true)?;
        let results = tables::reproduce_table2(&golden, &opts)?;
        for (g, r) in golden.iter().zip(&results) {
            mismatches.extend(tables::table2_mismatches(g, r));
            push_bound(&mut mismatches, r.row, "dz", g.dz, r.ht_z);
            push_bound(&mut mismatches, r.row, "dx", g.dx, r.ht_x);
            note_distances(r.row, g.dz, g.dx, &r.distances);
        }
        match ctx.output {
            Output::Csv => print!("{}", tables::table2_csv(&results)),
            Output::Json => println!("{}", json(&results)),
            Output::Human => results.iter().for_each(|r| println!("{}", human_t2(r))),
        }
    }
    report_mismatches(&mismatches)
}

fn push_bound(out: &mut Vec<Mismatch>, row: usize, column: &'static str, printed: u32, bound: u32) {
    if printed != bound {
        out.push(Mismatch {
            row,
            column,
            printed: printed.to_string(),
            computed: bound.to_string(),
        });
    }
}

fn human_t1(r: &Table1Result) -> String {
    format!(
        "row {:>2}  {:<24} k1={:<2} k2={:<2} bch={}/{} dual={}/{} threshold={} C1 {{{}}} C2 {{{}}}",
        r.row,
        r.params.to_string(),
        r.k1,
        r.k2,
        r.dz_bch,
        r.dx_bch,
        r.distances.dz_dual,
        r.distances.dx_dual,
        r.threshold,
        format_list(&r.c1_cosets),
        format_list(&r.c2_cosets)
    )
}

fn human_t2(r: &Table2Result) -> String {
    format!(
        "row {:>2}  {:<24} k1={:<2} k2={:<2} c={}/{}/{} ht={}/{} dual={}/{} C1 {{{}}} C2 {{{}}}",
        r.row,
        r.params.to_string(),
        r.k1,
        r.k2,
        r.c,
        r.c_via_c1,
        r.c_via_c2,
        r.ht_z,
        r.ht_x,
        r.distances.dz_dual,
        r.distances.dx_dual,
        format_list(&r.c1_cosets),
        format_list(&r.c2_cosets)
    )
}

fn query(gv: GvArgs, dz: u32, dx: u32) -> GvQuery {
    GvQuery {
        q: gv.q,
        n: gv.n,
        k1: gv.k1,
        k2: gv.k2,
        c: gv.c,
        dz,
        dx,
    }
}

#[derive(Serialize)]
struct GvCheckReport {
    q: u64,
    n: u32,
    k1: u32,
    k2: u32,
    c: u32,
    dz: u32,
    dx: u32,
    sum: String,
    z_term: String,
    x_term: String,
    holds: bool,
    rule: &'static str,
}

fn rule_name(r: GvRule) -> &'static str {
    match r {
        GvRule::Sum => "sum",
        GvRule::PerTerm => "per-term",
    }
}

fn run_gv_check(ctx: &Ctx, gv: GvArgs, dz: u32, dx: u32) -> CmdResult {
    let q = query(gv, dz, dx);
    let rule: GvRule = gv.rule.into();
    let sum = gv_finite_sum(&q)?;
    let (tz, tx) = gv_finite_terms(&q)?;
    let holds = gv_finite_holds_with(&q, rule)?;
    let rep = GvCheckReport {
        q: q.q,
        n: q.n,
        k1: q.k1,
        k2: q.k2,
        c: q.c,
        dz,
        dx,
        sum: sum.to_string(),
        z_term: tz.to_string(),
        x_term: tx.to_string(),
        holds,
        rule: rule_name(rule),
    };
    match ctx.output {
        Output::Json => println!("{}", json(&rep)),
        Output::Csv => {
            println!("q,n,k1,k2,c,dz,dx,sum,holds");
            println!(
                "{}",
                csv_line(&[
                    rep.q.to_string(),
                    rep.n.to_string(),
                    rep.k1.to_string(),
                    rep.k2.to_string(),
                    rep.c.to_string(),
                    dz.to_string(),
                    dx.to_string(),
                    rep.sum.clone(),
                    holds.to_string(),
                ])
            );
        }
        Output::Human => {
            println!("sum = {}", rep.sum);
            println!("{}", if holds { "HOLDS" } else { "EXCEEDS" });
        }
    }
    Ok(())
}

fn run_gv_threshold(ctx: &Ctx, gv: GvArgs) -> CmdResult {
    let t = gv_threshold_with(gv.q, gv.n, gv.k1, gv.k2, gv.c, gv.rule.into())?;
    match ctx.output {
        Output::Json => println!("{}", json(&t)),
        Output::Csv => {
            println!("q,n,k1,k2,c,threshold_dz,threshold_dx");
            println!(
                "{},{},{},{},{},{},{}",
                gv.q, gv.n, gv.k1, gv.k2, gv.c, t.dz, t.dx
            );
        }
        Output::Human => println!("{t}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct BchReport {
    params: AsymEaqeccParams,
    code: String,
    big_field: String,
    delta1: Vec<u32>,
    delta2: Vec<u32>,
    k1: usize,
    k2: usize,
    ht_z: u32,
    ht_x: u32,
    dz_dual: WeightReport,
    dx_dual: WeightReport,
}

fn dist_cells(w: &WeightReport) -> [String; 2] {
    [
        w.value().map(|v| v.to_string()).unwrap_or_default(),
        w.exact.to_string(),
    ]
}

fn run_bch(ctx: &Ctx, q: u64, n: u32, c1: &[u32], c2: &[u32], big: Option<&str>) -> CmdResult {
    let fam = BchFamily::new(q, n, big)?;
    let (delta1, code1) = fam.code_from_cosets(c1)?;
    let (delta2, code2) = fam.code_from_cosets(c2)?;
    let ht_z = hartmann_tzeng_bound(n, &delta1)?;
    let ht_x = hartmann_tzeng_bound(n, &delta2)?;
    let opts = ReproOptions {
        search: ctx.search,
        ..Default::default()
    };
    let d = pair_distances(&code1, &code2, ht_z, ht_x, &opts)?;
    let w = entanglement_witness(&code1, &code2)?;
    let nn = n as usize;
    let params = AsymEaqeccParams {
        q: code1.field().order(),
        n: nn,
        k: (nn + w.rank)
            .checked_sub(code1.k() + code2.k())
            .ok_or_else(|| Failure::Usage("inadmissible entanglement".into()))?,
        dz: d.dz,
        dx: d.dx,
        c: w.rank,
    };
    let rep = BchReport {
        params,
        code: params.to_string(),
        big_field: fam.big.designator(),
        delta1,
        delta2,
        k1: code1.k(),
        k2: code2.k(),
        ht_z,
        ht_x,
        dz_dual: d.dz_dual,
        dx_dual: d.dx_dual,
    };
    match ctx.output {
        Output::Json => println!("{}", json(&rep)),
        Output::Csv => {
            println!("q,n,k,k1,k2,c,dz,dz_exact,dx,dx_exact,ht_z,ht_x,dz_dual,dz_dual_exact,dx_dual,dx_dual_exact");
            let mut cells = vec![
                q.to_string(),
                n.to_string(),
                params.k.to_string(),
                rep.k1.to_string(),
                rep.k2.to_string(),
                params.c.to_string(),
            ];
            cells.extend(dist_cells(&params.dz));
            cells.extend(dist_cells(&params.dx));
            cells.push(ht_z.to_string());
            cells.push(ht_x.to_string());
            cells.extend(dist_cells(&rep.dz_dual));
            cells.extend(dist_cells(&rep.dx_dual));
            println!("{}", csv_line(&cells));
        }
        Output::Human => {
            println!("{}", rep.code);
            println!("big field   GF({})", rep.big_field);
            println!("k1, k2, c   {}, {}, {}", rep.k1, rep.k2, params.c);
            println!("C1 set      {{{}}}", format_list(&rep.delta1));
            println!("C2 set      {{{}}}", format_list(&rep.delta2));
            println!("HT bounds   d(C1^perp) >= {ht_z}, d(C2^perp) >= {ht_x}");
            println!("d(C1^perp)  {} ({})", rep.dz_dual, exactness(&rep.dz_dual));
            println!("d(C2^perp)  {} ({})", rep.dx_dual, exactness(&rep.dx_dual));
            println!("d_z         {} ({})", params.dz, exactness(&params.dz));
            println!("d_x         {} ({})", params.dx, exactness(&params.dx));
        }
    }
    Ok(())
}

fn exactness(w: &WeightReport) -> &'static str {
    if w.exact {
        "exact"
    } else {
        "bound only"
    }
}

fn read_code(path: &PathBuf) -> std::result::Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    LinearCode::from_text(&text).map_err(|e| match e {
        Error::Parse { .. } => Failure::Parse(format!("{}: {e}", path.display())),
        e => Failure::Usage(format!("{}: {e}", path.display())),
    })
}

#[derive(Serialize)]
struct AnalyzeReport {
    params: AsymEaqeccParams,
    code: String,
    k1: usize,
    k2: usize,
    c_rank: usize,
    c_via_c1: usize,
    c_via_c2: usize,
    css_compatible: bool,
    /// GV certifies these parameters; absent when a distance is not exact.
    gv_holds: Option<bool>,
}

fn run_analyze(ctx: &Ctx, p1: &PathBuf, p2: &PathBuf) -> CmdResult {
    let c1 = read_code(p1)?;
    let c2 = read_code(p2)?;
    let w = entanglement_witness(&c1, &c2)?;
    let params = eaqecc::asym_params(&c1, &c2, &ctx.distance_options())?;
    let gv_holds = match (params.dz.value(), params.dx.value()) {
        (Some(dz), Some(dx)) if params.is_exact() => {
            let q = GvQuery {
                q: params.q as u64,
                n: params.n as u32,
                k1: c1.k() as u32,
                k2: c2.k() as u32,
                c: params.c as u32,
                dz,
                dx,
            };
            gv_finite_holds_with(&q, GvRule::Sum).ok()
        }
        _ => None,
    };
    let rep = AnalyzeReport {
        params,
        code: params.to_string(),
        k1: c1.k(),
        k2: c2.k(),
        c_rank: w.rank,
        c_via_c1: w.via_c1,
        c_via_c2: w.via_c2,
        css_compatible: w.rank == 0,
        gv_holds,
    };
    let gv_text = match gv_holds {
        Some(true) => "HOLDS",
        Some(false) => "EXCEEDS",
        None => "n/a",
    };
    match ctx.output {
        Output::Json => println!("{}", json(&rep)),
        Output::Csv => {
            println!("q,n,k,k1,k2,c,dz,dz_exact,dx,dx_exact,css_compatible,gv");
            let mut cells = vec![
                params.q.to_string(),
                params.n.to_string(),
                params.k.to_string(),
                rep.k1.to_string(),
                rep.k2.to_string(),
                params.c.to_string(),
            ];
            cells.extend(dist_cells(&params.dz));
            cells.extend(dist_cells(&params.dx));
            cells.push(rep.css_compatible.to_string());
            cells.push(gv_text.to_string());
            println!("{}", csv_line(&cells));
        }
        Output::Human => {
            println!("{}", rep.code);
            println!("k1, k2      {}, {}", rep.k1, rep.k2);
            println!(
                "c           {} (rank), {} and {} (dimension formulas)",
                w.rank, w.via_c1, w.via_c2
            );
            if rep.css_compatible {
                println!("CSS-compatible pair (no entanglement needed)");
            }
            println!("d_z         {} ({})", params.dz, exactness(&params.dz));
            println!("d_x         {} ({})", params.dx, exactness(&params.dx));
            println!("GV          {gv_text}");
        }
    }
    Ok(())
}

fn run_enlarge(ctx: &Ctx, q: u64) -> CmdResult {
    let f = std::sync::Arc::new(FiniteField::with_order(q)?);
    let e = enlargement_demo(f, &ctx.distance_options())?;
    match ctx.output {
        Output::Json => println!("{}", json(&e)),
        Output::Csv => {
            println!("stage,q,n,k,dz,dx,c");
            for (stage, p) in [("before", e.before), ("after", e.after)] {
                println!("{stage},{},{},{},{},{},{}", p.q, p.n, p.k, p.dz, p.dx, p.c);
            }
        }
        Output::Human => {
            println!("before  {}", e.before);
            println!("after   {}", e.after);
        }
    }
    Ok(())
}
