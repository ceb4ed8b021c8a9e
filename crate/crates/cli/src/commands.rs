use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{anyhow, bail, ensure, Context, Result};
use chessboard_core::bounds::TSV_HEADER;
use chessboard_core::io::{ComplexFile, OrderFile};
use chessboard_core::shelling::shelling_order_with;
use chessboard_core::{
    bier_sphere, bound_report, bound_scan, general_chessboard, homological_connectivity, homology_with,
    lexicographic_order, multi_chessboard, multipartite, render_tsv, search_partition, two_one_j, uniform_chessboard,
    verify_shelling, verify_theorem, wedge_summary, BoardSpec, GeneralBoardSpec, HomologyOptions, Relabel, ScanGrid,
    SearchOptions, SearchStatus, SimplicialComplex, TverbergInstance, TwoOneJSpec,
};
use clap::{Args, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{Ctx, Output, Relabeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Multi,
    Uniform,
    General,
    TwoOneJ,
    Bier,
    Multipartite,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Columns (ground size for `bier`).
    #[arg(long)]
    m: Option<usize>,
    /// Rows.
    #[arg(long)]
    n: Option<usize>,
    /// Per-row caps, comma separated (`multi`).
    #[arg(long, value_delimiter = ',')]
    row_caps: Vec<usize>,
    /// Per-column caps, comma separated (`multi`; default all 1).
    #[arg(long, value_delimiter = ',')]
    col_caps: Vec<usize>,
    /// Rooks per row (`uniform`).
    #[arg(long)]
    p: Option<usize>,
    /// Rooks per column (`uniform`).
    #[arg(long)]
    q: Option<usize>,
    /// Number of rows allowed two rooks (`two-one-j`), rows 1..=j.
    #[arg(long)]
    j: Option<usize>,
    /// Explicit 1-based rows allowed two rooks (`two-one-j`).
    #[arg(long, value_delimiter = ',')]
    rows: Vec<usize>,
    /// Complex file for `bier`.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// `bier` of all subsets of size at most this.
    #[arg(long)]
    skeleton: Option<usize>,
    /// Part sizes (`multipartite`).
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Row and column complexes (`general`): `{"m", "n", "rows": [..], "cols": [..]}`.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Deserialize)]
struct GeneralFile {
    m: usize,
    n: usize,
    rows: Vec<ComplexFile>,
    cols: Vec<ComplexFile>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("--{flag} is required for --family {family}"))
}

fn check_budget(ctx: &Ctx, faces: Option<u128>) -> Result<()> {
    if let (Some(budget), Some(faces)) = (ctx.global.budget, faces) {
        ensure!(faces <= budget, "{faces} faces exceed the budget of {budget}");
    }
    Ok(())
}

fn complex_output(k: &SimplicialComplex) -> Result<Output> {
    Ok(Output { result: serde_json::to_value(ComplexFile::from_complex(k))?, text: None, ok: true, seed: None })
}

pub fn gen(ctx: &mut Ctx, a: &GenArgs) -> Result<Output> {
    let k = match a.family {
        Family::Multi => {
            let m = need(a.m, "m", "multi")?;
            ensure!(!a.row_caps.is_empty(), "--row-caps is required for --family multi");
            if let Some(n) = a.n {
                ensure!(n == a.row_caps.len(), "--n {n} but {} row caps", a.row_caps.len());
            }
            let cols = if a.col_caps.is_empty() { vec![1; m] } else { a.col_caps.clone() };
            let spec = BoardSpec::new(m, a.row_caps.len(), a.row_caps.clone(), cols)?;
            check_budget(ctx, spec.count_faces())?;
            multi_chessboard(&spec)?
        }
        Family::Uniform => {
            let (m, n) = (need(a.m, "m", "uniform")?, need(a.n, "n", "uniform")?);
            let (p, q) = (need(a.p, "p", "uniform")?, need(a.q, "q", "uniform")?);
            if q == 1 {
                check_budget(ctx, BoardSpec::uniform(m, n, p, q)?.count_faces())?;
            }
            uniform_chessboard(m, n, p, q)?
        }
        Family::General => {
            let path = a.spec.as_ref().ok_or_else(|| anyhow!("--spec is required for --family general"))?;
            let file: GeneralFile = serde_json::from_value(ctx.inputs.read_json(path)?)?;
            let convert = |v: Vec<ComplexFile>| v.into_iter().map(ComplexFile::into_complex).collect::<Result<Vec<_>, _>>();
            general_chessboard(&GeneralBoardSpec {
                m: file.m,
                n: file.n,
                row_complexes: convert(file.rows)?,
                col_complexes: convert(file.cols)?,
            })?
        }
        Family::TwoOneJ => {
            let (m, n) = (need(a.m, "m", "two-one-j")?, need(a.n, "n", "two-one-j")?);
            let spec = match (a.j, a.rows.is_empty()) {
                (Some(j), true) => TwoOneJSpec::new(m, n, j),
                (None, false) => TwoOneJSpec { m, n, rows: a.rows.clone() },
                _ => bail!("give exactly one of --j and --rows for --family two-one-j"),
            };
            check_budget(ctx, spec.board()?.count_faces())?;
            two_one_j(&spec)?
        }
        Family::Bier => {
            let m = need(a.m, "m", "bier")?;
            let base = match (&a.complex, a.skeleton) {
                (Some(path), None) => {
                    let file: ComplexFile = serde_json::from_value(ctx.inputs.read_json(path)?)?;
                    file.into_complex()?
                }
                (None, Some(p)) => SimplicialComplex::bounded_subsets(m as u32, p),
                _ => bail!("give exactly one of --complex and --skeleton for --family bier"),
            };
            bier_sphere(&base, m)?
        }
        Family::Multipartite => {
            ensure!(!a.sizes.is_empty(), "--sizes is required for --family multipartite");
            multipartite(&a.sizes)?
        }
    };
    complex_output(&k)
}

#[derive(Args, Debug, Serialize)]
pub struct FileArg {
    /// Complex JSON file.
    pub file: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct HomologyArgs {
    /// Complex JSON file.
    file: PathBuf,
    /// Report only this dimension.
    #[arg(long)]
    dim: Option<isize>,
    /// Plain instead of reduced homology.
    #[arg(long)]
    non_reduced: bool,
    /// Skip torsion (rational Betti numbers only).
    #[arg(long)]
    rank_only: bool,
}

fn load_complex(ctx: &mut Ctx, path: &PathBuf) -> Result<SimplicialComplex> {
    let file: ComplexFile =
        serde_json::from_value(ctx.inputs.read_json(path)?).with_context(|| format!("{} is not a complex file", path.display()))?;
    Ok(file.into_complex()?)
}

fn load_with_budget(ctx: &mut Ctx, path: &PathBuf) -> Result<SimplicialComplex> {
    let k = load_complex(ctx, path)?;
    if ctx.global.budget.is_some() {
        check_budget(ctx, Some(k.f_vector().total() as u128))?;
    }
    Ok(k)
}

pub fn homology(ctx: &mut Ctx, a: &HomologyArgs) -> Result<Output> {
    let k = load_with_budget(ctx, &a.file)?;
    let h = homology_with(&k, HomologyOptions { non_reduced: a.non_reduced, rank_only: a.rank_only });
    let dims: Vec<isize> = (h.min_dim..h.min_dim + h.groups.len() as isize).filter(|&i| a.dim.map_or(true, |d| d == i)).collect();
    let dim = k.dim().map_or("void".to_string(), |d| d.to_string());
    let mut text = format!("{} homology of a complex of dimension {dim}\n", if h.reduced { "reduced" } else { "plain" });
    text.push_str("dim\tbetti\ttorsion\tgroup\n");
    let mut rows = Vec::new();
    for &i in &dims {
        let g = h.group(i);
        let torsion: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "{i}\t{}\t{}\t{g}", g.rank, if torsion.is_empty() { "-".into() } else { torsion.join(",") });
        rows.push(json!({ "dim": i, "betti": g.rank, "torsion": torsion }));
    }
    let result = json!({
        "reduced": h.reduced,
        "dim": k.dim(),
        "f_vector": k.f_vector().counts,
        "groups": rows,
    });
    Ok(Output { result, text: Some(text), ok: true, seed: None })
}

pub fn connectivity(ctx: &mut Ctx, a: &FileArg) -> Result<Output> {
    let k = load_with_budget(ctx, &a.file)?;
    let c = homological_connectivity(&k);
    let mut text = format!("hconn\t{}\n", c.hconn);
    match &c.witness {
        Some((i, g)) => {
            let _ = writeln!(text, "first nonzero\tH~_{i} = {g}");
        }
        None => text.push_str("first nonzero\tnone\n"),
    }
    let _ = writeln!(text, "note\t{}", c.note);
    Ok(Output { result: serde_json::to_value(&c)?, text: Some(text), ok: true, seed: None })
}

#[derive(Args, Debug, Serialize)]
pub struct ShellArgs {
    #[arg(long)]
    m: usize,
    /// Per-row caps, comma separated; columns hold one rook.
    #[arg(long, value_delimiter = ',', required = true)]
    row_caps: Vec<usize>,
    /// Column relabeling used when the board shrinks.
    #[arg(long, value_enum, default_value = "identity")]
    relabel: Relabeling,
}

pub fn shell(_ctx: &mut Ctx, a: &ShellArgs) -> Result<Output> {
    let spec = BoardSpec::rook(a.m, a.row_caps.clone())?;
    let relabel = match a.relabel {
        Relabeling::Identity => Relabel::OrderPreserving,
        Relabeling::Reverse => Relabel::ReverseColumns,
    };
    let facets = shelling_order_with(&spec, relabel)?.iter().map(|f| f.to_simplex(a.m)).collect();
    let order = OrderFile { board: Some(spec), facets };
    Ok(Output { result: serde_json::to_value(order)?, text: None, ok: true, seed: None })
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Complex JSON file.
    complex: PathBuf,
    /// Order JSON file (as written by `shell`).
    order: Option<PathBuf>,
    /// Use the lexicographic facet order instead of an order file.
    #[arg(long, conflicts_with = "order")]
    lex: bool,
}

pub fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Result<Output> {
    let k = load_complex(ctx, &a.complex)?;
    let order = match (&a.order, a.lex) {
        (Some(path), false) => serde_json::from_value::<OrderFile>(ctx.inputs.read_json(path)?)?.facets,
        (None, true) => lexicographic_order(&k),
        _ => bail!("give an order file or --lex"),
    };
    let cert = verify_shelling(&k, &order)?;
    let coords = |s: &chessboard_core::Simplex| -> String {
        match k.coords() {
            Some(_) => {
                let sq: Vec<String> = s.vertices().iter().map(|&v| k.square_of(v).map_or(v.to_string(), |q| q.to_string())).collect();
                format!("{{{}}}", sq.join(","))
            }
            None => s.to_string(),
        }
    };
    let (text, summary) = match &cert.violation {
        None => {
            let spheres = wedge_summary(&cert)?;
            (
                format!("shelling verified\nfacets\t{}\nspanning\t{spheres}\n", cert.facets.len()),
                json!({ "verified": true, "facets": cert.facets.len(), "spanning": spheres }),
            )
        }
        Some(v) => (
            format!(
                "not a shelling\ni\t{}\nj\t{}\nB\t{}\nearlier\t{}\nintersection\t{}\n",
                v.i + 1,
                v.j + 1,
                coords(&v.facet),
                coords(&v.earlier),
                coords(&v.intersection)
            ),
            json!({ "verified": false, "violation": v }),
        ),
    };
    let mut result = summary;
    result["restriction_faces"] = serde_json::to_value(&cert.restriction_faces)?;
    Ok(Output { result, text: Some(text), ok: cert.is_verified(), seed: None })
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "subcommand")]
pub enum BoundsCommand {
    /// Scan a parameter grid; exits 1 if any prediction fails.
    Scan {
        /// Ranges such as `m=3..9 n=2..3 caps=1..3`.
        #[arg(long, num_args = 1.., default_values = ["m=1..9", "n=1..3", "caps=1..3"])]
        grid: Vec<String>,
    },
    /// One board.
    Eval {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        row_caps: Vec<usize>,
    },
}

const DEFAULT_SCAN_BUDGET: u128 = 200_000;

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.parse()?, hi.trim_start_matches('=').parse()?),
        None => {
            let v = s.parse()?;
            (v, v)
        }
    };
    ensure!(lo <= hi, "empty range {s}");
    Ok(lo..=hi)
}

pub fn parse_grid(tokens: &[String]) -> Result<ScanGrid> {
    let mut grid = ScanGrid { m: 1..=9, n: 1..=3, caps: 1..=3 };
    for t in tokens {
        let (key, range) = t.split_once('=').ok_or_else(|| anyhow!("grid entries look like m=3..9, got {t}"))?;
        let range = parse_range(range).with_context(|| format!("bad range in {t}"))?;
        match key {
            "m" => grid.m = range,
            "n" => grid.n = range,
            "caps" | "k" => grid.caps = range,
            _ => bail!("unknown grid key {key}; expected m, n or caps"),
        }
    }
    Ok(grid)
}

pub fn bounds(ctx: &mut Ctx, cmd: &BoundsCommand) -> Result<Output> {
    let budget = ctx.global.budget.unwrap_or(DEFAULT_SCAN_BUDGET);
    let reports = match cmd {
        BoundsCommand::Scan { grid } => bound_scan(&parse_grid(grid)?, budget),
        BoundsCommand::Eval { m, row_caps } => vec![bound_report(&BoardSpec::rook(*m, row_caps.clone())?, budget)],
    };
    let ok = !reports.iter().any(|r| r.violation || r.two_one_violation);
    let text = render_tsv(&reports);
    debug_assert!(text.starts_with(TSV_HEADER));
    Ok(Output { result: serde_json::to_value(&reports)?, text: Some(text), ok, seed: None })
}

#[derive(Args, Debug, Serialize)]
pub struct TverbergArgs {
    #[arg(long)]
    d: usize,
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Number of groups.
    #[arg(long)]
    r: usize,
    /// Points of each color allowed per group.
    #[arg(long)]
    p: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Search a single instance from `{"colors": [[[num, den], ...], ...]}`.
    #[arg(long)]
    points: Option<PathBuf>,
    /// Partitions tried per instance before giving up.
    #[arg(long, default_value_t = 1_000_000)]
    max_partitions: u64,
}

#[derive(Deserialize)]
struct PointsFile {
    #[serde(with = "chessboard_core::exact")]
    colors: Vec<Vec<Vec<BigRational>>>,
}

pub fn tverberg(ctx: &mut Ctx, a: &TverbergArgs) -> Result<Output> {
    let opts = SearchOptions { caps: None, budget: a.max_partitions };
    if let Some(path) = &a.points {
        let file: PointsFile = serde_json::from_value(ctx.inputs.read_json(path)?)?;
        ensure!(file.colors.len() == a.k, "--k {} but the file has {} colors", a.k, file.colors.len());
        let inst = TverbergInstance::new(a.d, a.r, a.p, file.colors)?;
        let out = search_partition(&inst, &opts)?;
        let mut text = format!("status\t{:?}\npartitions tried\t{}\n", out.status, out.tested);
        if let Some(cert) = &out.certificate {
            for (g, group) in cert.groups.iter().enumerate() {
                let ids: Vec<String> = group.iter().map(|(c, i)| format!("{c}:{i}")).collect();
                let _ = writeln!(text, "group {g}\t{}", ids.join(" "));
            }
            let pt: Vec<String> = cert.witness.point.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "common point\t({})", pt.join(", "));
        }
        let ok = match out.status {
            SearchStatus::Found => true,
            SearchStatus::Exhausted => !inst.hypothesis_holds(),
            SearchStatus::Truncated => false,
        };
        return Ok(Output { result: serde_json::to_value(&out)?, text: Some(text), ok, seed: None });
    }
    let stats = verify_theorem(a.d, a.k, a.r, a.p, a.trials, a.seed, a.max_partitions)?;
    let text = format!(
        "d k r p\t{} {} {} {}\nhypothesis\t{}\nprime power r\t{}\ntrials\t{}\nfound\t{}\ntruncated\t{}\nexhausted\t{}\nunverified\t{}\nmean partitions tried\t{:.1}\n",
        a.d,
        a.k,
        a.r,
        a.p,
        stats.hypothesis_holds,
        stats.prime_power,
        stats.trials,
        stats.successes,
        stats.truncated,
        stats.exhausted.len(),
        stats.unverified,
        stats.mean_tested
    );
    let ok = stats.unverified == 0 && (stats.exhausted.is_empty() || !stats.hypothesis_holds);
    Ok(Output { result: serde_json::to_value(&stats)?, text: Some(text), ok, seed: Some(a.seed) })
}
