//! Command-line front end for the `twisted-cubes` crate.
//!
//! [`dispatch`] parses arguments and returns the exit code with the full
//! output, so the binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twisted_cubes::categories::{hom_set, CategoryId};
use twisted_cubes::export::{to_dot, to_json};
use twisted_cubes::graph::hamiltonian_paths;
use twisted_cubes::pospace::{
    can_embed, corner_embedding, emb, fmt_rational, rank, RankKind, RankedSpace,
};
use twisted_cubes::shapes::{recursive_graph, shape_graph, Flavor, ShapeFamily, ShapeKind};
use twisted_cubes::verify::{run_suite, Suite, VerifyConfig};
use twisted_cubes::words::{sort_bin, unsort_num};
use twisted_cubes::{Budget, Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "twcube",
    version,
    about = "Twisted cube graphs, face-map categories and directed embeddings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a family graph.
    Gen(GenArgs),
    /// Count or list morphisms between two objects of a category.
    Homs(HomsArgs),
    /// Run a verification suite and print one TSV row per check.
    Verify(VerifyArgs),
    /// Nodes of the twisted cube in Hamiltonian order with their sorted labels.
    SortTable(SortTableArgs),
    /// Check or tabulate the corner embedding of a cube into a ranked box.
    Embed(EmbedArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_parser = parse_kind)]
    family: ShapeKind,
    #[arg(long, value_enum, default_value_t = FlavorArg::Face)]
    flavor: FlavorArg,
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Build by iterating cone/prism instead of the closed form.
    #[arg(long)]
    recursive: bool,
    /// Colour the first Hamiltonian path (DOT only).
    #[arg(long)]
    highlight_hamiltonian: bool,
}

#[derive(Args, Debug)]
struct HomsArgs {
    #[arg(long, value_parser = parse_category)]
    cat: CategoryId,
    #[arg(long)]
    src: usize,
    #[arg(long)]
    dst: usize,
    #[arg(long, conflicts_with = "list")]
    count: bool,
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    #[arg(long, default_value_t = 3)]
    max_obj: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

#[derive(Args, Debug)]
struct SortTableArgs {
    #[arg(long)]
    dim: usize,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    #[arg(long, value_enum)]
    family: CubeArg,
    #[arg(long)]
    dim: usize,
    /// Target box; defaults to the one matching the family.
    #[arg(long, value_enum)]
    space: Option<SpaceArg>,
    #[arg(long, conflicts_with = "table")]
    check: bool,
    /// Print `corner<TAB>rank` rows instead of the check report.
    #[arg(long)]
    table: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FlavorArg {
    Face,
    Reflexive,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CubeArg {
    Cube,
    Twisted,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SpaceArg {
    Std,
    Tw,
}

fn parse_kind(s: &str) -> Result<ShapeKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_category(s: &str) -> Result<CategoryId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs one invocation. `argv` excludes the program name.
pub fn dispatch<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("twcube").chain(argv.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Homs(a) => homs(a),
        Command::Verify(a) => verify(a),
        Command::SortTable(a) => sort_table(a),
        Command::Embed(a) => embed(a),
    };
    match result {
        Ok(done) => done,
        Err(e @ Error::BudgetExceeded { .. }) => (EXIT_BUDGET, format!("error: {e}\n")),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

type Outcome = twisted_cubes::Result<(i32, String)>;

fn gen(a: GenArgs) -> Outcome {
    let flavor = match a.flavor {
        FlavorArg::Face => Flavor::Face,
        FlavorArg::Reflexive => Flavor::Reflexive,
    };
    let spec = ShapeFamily::new(a.family, flavor, a.dim)?;
    let budget = Budget::default();
    let g = if a.recursive {
        recursive_graph(spec, &budget)?
    } else {
        shape_graph(spec, &budget)?
    };
    if a.highlight_hamiltonian && a.format != Format::Dot {
        return Ok((
            EXIT_USAGE,
            "error: --highlight-hamiltonian requires --format dot\n".into(),
        ));
    }
    let out = match a.format {
        Format::Json => to_json(&g),
        Format::Tsv => to_tsv(&g),
        Format::Dot if a.highlight_hamiltonian => {
            let paths = hamiltonian_paths(&g, &budget)?;
            match paths.first() {
                Some(p) => to_dot(&g, Some(p)),
                None => return Ok((EXIT_FAIL, format!("no Hamiltonian path in {spec}\n"))),
            }
        }
        Format::Dot => to_dot(&g, None),
    };
    Ok((EXIT_OK, out))
}

fn to_tsv(g: &Graph) -> String {
    let mut out = String::new();
    for (s, t) in g.edge_labels() {
        writeln!(out, "{s}\t{t}").unwrap();
    }
    out
}

fn homs(a: HomsArgs) -> Outcome {
    let homs = hom_set(a.cat, a.src, a.dst, &Budget::default())?;
    let mut out = String::new();
    if a.list {
        for f in &homs {
            writeln!(out, "{f}").unwrap();
        }
    } else {
        writeln!(out, "{}", homs.len()).unwrap();
    }
    Ok((EXIT_OK, out))
}

fn verify(a: VerifyArgs) -> Outcome {
    let cfg = VerifyConfig {
        max_dim: a.max_dim,
        max_obj: a.max_obj,
        seed: a.seed,
        samples: a.samples,
        ..VerifyConfig::default()
    };
    let rows = run_suite(a.suite, &cfg)?;
    let mut out = String::from("subject\tcheck\tstatus\twitness\n");
    for row in &rows {
        writeln!(out, "{}", row.to_tsv()).unwrap();
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    writeln!(out, "# {} checks, {} failed", rows.len(), failed).unwrap();
    Ok((if failed == 0 { EXIT_OK } else { EXIT_FAIL }, out))
}

fn sort_table(a: SortTableArgs) -> Outcome {
    let limit = Budget::default().max_shape_dim;
    if a.dim > limit {
        return Err(Error::BudgetExceeded {
            what: "sort-table dimension",
            needed: a.dim as u128,
            limit: limit as u128,
        });
    }
    let mut out = String::new();
    for i in 0..1u64 << a.dim {
        let label = unsort_num(a.dim, i)?;
        writeln!(out, "{label}\t{i}\t{}", sort_bin(&label)).unwrap();
    }
    Ok((EXIT_OK, out))
}

fn embed(a: EmbedArgs) -> Outcome {
    let (kind, default_space) = match a.family {
        CubeArg::Cube => (ShapeKind::Cube, SpaceArg::Std),
        CubeArg::Twisted => (ShapeKind::Twisted, SpaceArg::Tw),
    };
    let g = shape_graph(ShapeFamily::face(kind, a.dim), &Budget::default())?;
    let (space, rank_kind) = match a.space.unwrap_or(default_space) {
        SpaceArg::Std => (RankedSpace::standard_cube(a.dim), RankKind::Std),
        SpaceArg::Tw => (RankedSpace::twisted_cube(a.dim), RankKind::Tw),
    };
    let mut out = String::new();
    if a.table {
        for label in g.nodes() {
            let w = label.as_word().expect("cube nodes are words");
            let r = rank(rank_kind, &emb(rank_kind, w));
            writeln!(out, "{label}\t{}", fmt_rational(&r)).unwrap();
        }
        return Ok((EXIT_OK, out));
    }
    let report = can_embed(&g, &space, corner_embedding(rank_kind))?;
    writeln!(out, "injective\t{}", report.injective).unwrap();
    writeln!(out, "covers_corners\t{}", report.covers_corners).unwrap();
    writeln!(out, "order_preserving\t{}", report.order_preserving).unwrap();
    if let Some((s, t)) = &report.order_witness {
        writeln!(out, "witness\t{s}\t{t}").unwrap();
    }
    if let Some(d) = &report.detail {
        writeln!(out, "detail\t{d}").unwrap();
    }
    let pass = report.pass();
    writeln!(out, "result\t{}", if pass { "pass" } else { "fail" }).unwrap();
    Ok((if pass { EXIT_OK } else { EXIT_FAIL }, out))
}
