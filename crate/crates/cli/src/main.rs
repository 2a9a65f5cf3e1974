use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use weavesym::catalog::{catalog_stats, verify_catalog, Catalog};
use weavesym::diagram::{emit_color_group_svg, emit_layer_svg, DiagramSpec, Window};
use weavesym::generate::{gen_striped_coloring, gen_twill};
use weavesym::search::{search_designs, SearchOptions, SearchTarget, DEFAULT_AREA_CAP};
use weavesym::{classify, parse_design, serialize_design, Faces, Report, View, WeaveStructure};

#[derive(Parser)]
#[command(name = "weavesym", version, about = "Symmetry groups of 2-way 2-fold weave designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a design and print `(S, S1) → layer group`.
    Analyze(AnalyzeArgs),
    /// Write the pattern seen on one face of a weave structure.
    RenderWeave {
        structure: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate weave structures.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Enumerate small designs realizing a pair or layer group.
    Search(SearchArgs),
    /// Check or summarize the pattern catalog.
    Catalog {
        #[arg(value_enum)]
        action: CatalogAction,
        /// Defaults to the bundled catalog.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    design: PathBuf,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg_color: Option<PathBuf>,
    #[arg(long)]
    svg_layer: Option<PathBuf>,
    /// Diagram window `X,Y,W,H` in cells.
    #[arg(long, value_parser = parse_window)]
    window: Option<Window>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Front,
    Back,
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Twill over/under map, optionally with striped one-sided strands.
    Twill {
        #[arg(long)]
        over: usize,
        #[arg(long)]
        under: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        shift: i64,
        /// Rows in the block; defaults to over + under.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        stripe_warp: Option<usize>,
        #[arg(long)]
        stripe_weft: Option<usize>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        phase_warp: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        phase_weft: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Target pair `S,S1`; use `-` for S1 when nothing reverses the side.
    #[arg(long, conflicts_with = "layer", required_unless_present = "layer")]
    pair: Option<String>,
    #[arg(long)]
    layer: Option<String>,
    /// Largest block `WxH`.
    #[arg(long, value_parser = parse_block)]
    max_block: (usize, usize),
    #[arg(long)]
    limit: Option<usize>,
    /// Largest block area enumerated.
    #[arg(long, default_value_t = DEFAULT_AREA_CAP)]
    area_cap: usize,
    /// Also write each hit as a design file here.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogAction {
    Verify,
    Stats,
}

fn parse_block(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s.split_once(['x', 'X']).ok_or("expected WxH")?;
    let w: usize = w.trim().parse().map_err(|_| format!("bad width {w:?}"))?;
    let h: usize = h.trim().parse().map_err(|_| format!("bad height {h:?}"))?;
    if w == 0 || h == 0 {
        return Err("block dimensions must be positive".into());
    }
    Ok((w, h))
}

fn parse_window(s: &str) -> Result<Window, String> {
    let v: Vec<i64> = s.split(',').map(|p| p.trim().parse::<i64>().map_err(|_| format!("bad number {p:?}"))).collect::<Result<_, _>>()?;
    match v[..] {
        [x, y, w, h] => Ok(Window::new(x, y, w, h)),
        _ => Err("expected X,Y,W,H".into()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn analyze(args: AnalyzeArgs) -> Result<()> {
    let design = parse_design(&read(&args.design)?).with_context(|| args.design.display().to_string())?;
    let c = classify(&design)?;
    let provisional = if c.layer.provisional { " (provisional)" } else { "" };
    println!("{}{provisional}", c.summary());
    if let Some(path) = &args.json {
        write(path, &(Report::new(&design, &c).to_json() + "\n"))?;
    }
    let spec = DiagramSpec { window: args.window, ..Default::default() };
    if let Some(path) = &args.svg_color {
        write(path, &emit_color_group_svg(&design, &c.analysis, &spec)?)?;
    }
    if let Some(path) = &args.svg_layer {
        write(path, &emit_layer_svg(&c.layer.inventory, c.analysis.lattice(), Some(&design), &spec)?)?;
    }
    Ok(())
}

fn search(args: SearchArgs) -> Result<()> {
    let target = match (&args.pair, &args.layer) {
        (Some(p), None) => p.parse::<SearchTarget>()?,
        (None, Some(l)) => SearchTarget::layer(l)?,
        _ => bail!("give exactly one of --pair and --layer"),
    };
    let (w, h) = args.max_block;
    let opts = SearchOptions { max_block: (w, h), limit: args.limit, area_cap: args.area_cap };
    let out = search_designs(&target, &opts)?;
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    for (k, hit) in out.hits.iter().enumerate() {
        let d = &hit.design;
        println!("# {} {}x{} {} → {}", k + 1, d.width(), d.height(), hit.name.pair_descriptor, hit.name.symbol);
        for row in d.rows() {
            println!("{row}");
        }
        if let Some(dir) = &args.out_dir {
            write(&dir.join(format!("hit-{:03}.weave", k + 1)), &serialize_design(d))?;
        }
    }
    eprintln!("{} designs found for {target} ({} blocks classified)", out.hits.len(), out.examined);
    if !out.skipped.is_empty() {
        let sizes: Vec<String> = out.skipped.iter().map(|(w, h)| format!("{w}x{h}")).collect();
        eprintln!("not enumerated (area over {}): {}", opts.area_cap, sizes.join(" "));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze(args) => analyze(args)?,
        Command::RenderWeave { structure, side, out } => {
            let w = WeaveStructure::from_json(&read(&structure)?)?;
            let view = match side {
                SideArg::Front => View::Front,
                SideArg::Back => View::Back,
            };
            write(&out, &serialize_design(&w.render_visible(view)))?;
        }
        Command::Generate(GenerateCommand::Twill {
            over,
            under,
            shift,
            rows,
            stripe_warp,
            stripe_weft,
            phase_warp,
            phase_weft,
            out,
        }) => {
            if over == 0 || under == 0 {
                bail!("--over and --under must be positive");
            }
            let overunder = gen_twill(over, under, shift, rows.unwrap_or(over + under).max(1));
            let w = match (stripe_warp, stripe_weft) {
                (None, None) => WeaveStructure::basket(overunder),
                (Some(0), _) | (_, Some(0)) => bail!("stripe widths must be positive"),
                (xw, xf) => {
                    let (warp, weft) = gen_striped_coloring(xw.unwrap_or(1), xf.unwrap_or(1), phase_warp, phase_weft);
                    let warp = if xw.is_some() { warp } else { vec![Faces::BW] };
                    let weft = if xf.is_some() { weft } else { vec![Faces::WB] };
                    WeaveStructure::new(overunder, warp, weft)?
                }
            };
            write(&out, &(w.to_json() + "\n"))?;
        }
        Command::Search(args) => search(args)?,
        Command::Catalog { action, manifest } => {
            let path = manifest.unwrap_or_else(Catalog::bundled_manifest);
            let catalog = Catalog::load(&path)?;
            match action {
                CatalogAction::Verify => {
                    let report = verify_catalog(&catalog);
                    print!("{}", report.render());
                    return Ok(report.ok());
                }
                CatalogAction::Stats => {
                    let stats = catalog_stats(&catalog)?;
                    print!("{}", stats.render());
                    return Ok(stats.entries > 0);
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
