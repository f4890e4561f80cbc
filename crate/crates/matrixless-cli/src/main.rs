//! Command-line pipeline: symbol ingestion, expansion extraction,
//! symbol recovery, matrix-less spectrum prediction, closed-form
//! oracles, and double-vs-high-precision comparison. Every command
//! writes plot-ready CSV/JSON artifacts into the output directory and
//! is deterministic given its flags.

mod presets;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use matrixless::{
    build_toeplitz, eigenvalues, extract_with_progress, fourier_coefficients_by_quadrature,
    perfect_grid, predict, project_real_sorted, recover_with_threshold, tridiag_exact_eigenvalues,
    Big, Complex, Error, ExpansionTable, LevelReport, PrecisionContext, Scalar, SortOrder,
    SpectrumSample, Symbol,
};

use presets::{find, BuiltinG, Preset, PRESETS};

#[derive(Parser)]
#[command(
    name = "matrixless",
    about = "Spectral analysis of banded Toeplitz matrix sequences without building large matrices",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Symbol file (JSON: {"min_k": int, "coeffs": ["...", ...]})
    #[arg(long, global = true)]
    symbol: Option<PathBuf>,

    /// Named parameter bundle (example1..example8); explicit flags override
    #[arg(long, global = true)]
    preset: Option<String>,

    /// Base grid size
    #[arg(long, global = true)]
    n0: Option<usize>,

    /// Highest expansion order
    #[arg(long, global = true)]
    alpha: Option<usize>,

    /// Working precision in significand bits (53 or 64..=4096)
    #[arg(long, global = true)]
    bits: Option<u32>,

    /// Eigenvalue ordering
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,

    /// Target matrix order (predict/exact/compare) or coefficient count (quadrature)
    #[arg(long, global = true)]
    n: Option<usize>,

    /// RCTP classification threshold (decimal string)
    #[arg(long, global = true)]
    threshold: Option<String>,

    /// Local interpolation degree for prediction
    #[arg(long, global = true, default_value_t = 4)]
    interp_degree: usize,

    /// Output directory
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the expansion functions c_k on the base grid
    Expand,
    /// Recover cosine Fourier coefficients of g from an expansion table
    Recover,
    /// Predict the spectrum of T_n(f) from an expansion table
    Predict,
    /// Exact or high-precision reference spectra and perfect grids
    Exact,
    /// Compare the 53-bit spectrum against a high-precision run
    Compare,
    /// Cosine Fourier coefficients of a built-in g by quadrature
    Quadrature,
    /// List the available presets
    Presets,
}

/// Everything a command needs, resolved from flags and preset defaults.
struct Config {
    symbol_json: String,
    n0: usize,
    alpha: usize,
    bits: u32,
    order: SortOrder,
    n_target: usize,
    threshold: Option<String>,
    interp_degree: usize,
    out: PathBuf,
    builtin_g: Option<BuiltinG>,
    preset_name: Option<String>,
}

fn resolve(cli: &Cli) -> Result<Config, Error> {
    let preset: Option<&Preset> = match cli.preset.as_deref() {
        Some(name) => Some(find(name).ok_or_else(|| {
            Error::MalformedTable(format!(
                "unknown preset {name:?}; available: {}",
                PRESETS
                    .iter()
                    .map(|p| p.name)
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        })?),
        None => None,
    };

    let symbol_json = match (&cli.symbol, preset) {
        (Some(path), _) => fs::read_to_string(path)?,
        (None, Some(p)) => {
            let coeffs: Vec<String> = p.coeffs.iter().map(|c| c.to_string()).collect();
            serde_json::json!({ "min_k": p.min_k, "coeffs": coeffs }).to_string()
        }
        (None, None) => {
            return Err(Error::EmptyInput(
                "symbol: pass --symbol PATH or --preset NAME",
            ))
        }
    };

    let bits = cli.bits.or(preset.map(|p| p.bits)).unwrap_or(53);
    if bits != 53 && !(64..=4096).contains(&bits) {
        return Err(Error::InvalidPrecision { bits });
    }
    let n0 = cli.n0.or(preset.map(|p| p.n0)).unwrap_or(32);
    if n0 < 4 {
        return Err(Error::EmptyInput("n0 must be at least 4"));
    }
    let alpha = cli.alpha.or(preset.map(|p| p.alpha)).unwrap_or(2);
    let order = match cli.order {
        Some(OrderArg::Asc) | None => SortOrder::Ascending,
        Some(OrderArg::Desc) => SortOrder::Descending,
    };
    let n_target = cli.n.or(preset.map(|p| p.n_target)).unwrap_or(1000);

    Ok(Config {
        symbol_json,
        n0,
        alpha,
        bits,
        order,
        n_target,
        threshold: cli.threshold.clone(),
        interp_degree: cli.interp_degree,
        out: cli.out.clone(),
        builtin_g: preset.and_then(|p| p.g),
        preset_name: preset.map(|p| p.name.to_string()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if matches!(cli.command, Command::Presets) {
        for p in PRESETS {
            println!(
                "{:9}  n0={:3}  alpha={}  bits={:3}  band [{}, {}]  {}",
                p.name,
                p.n0,
                p.alpha,
                p.bits,
                p.min_k,
                p.min_k + p.coeffs.len() as i64 - 1,
                p.about
            );
        }
        return ExitCode::SUCCESS;
    }

    let cfg = match resolve(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let result = if cfg.bits == 53 {
        dispatch::<f64>(&cli.command, &cfg)
    } else {
        dispatch::<Big>(&cli.command, &cfg)
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn dispatch<T: Scalar>(command: &Command, cfg: &Config) -> Result<(), Error> {
    let ctx = PrecisionContext::new(cfg.bits)?;
    let symbol = Symbol::<T>::from_json(&cfg.symbol_json, cfg.bits)?;
    fs::create_dir_all(&cfg.out)?;
    match command {
        Command::Expand => cmd_expand(cfg, &ctx, &symbol),
        Command::Recover => cmd_recover::<T>(cfg),
        Command::Predict => cmd_predict::<T>(cfg),
        Command::Exact => cmd_exact(cfg, &ctx, &symbol),
        Command::Compare => cmd_compare(cfg, &ctx, &symbol),
        Command::Quadrature => cmd_quadrature::<T>(cfg, &symbol),
        Command::Presets => unreachable!("handled in main"),
    }
}

fn write(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_expand<T: Scalar>(
    cfg: &Config,
    ctx: &PrecisionContext,
    symbol: &Symbol<T>,
) -> Result<(), Error> {
    let started = Instant::now();
    let progress = |r: LevelReport| {
        eprintln!(
            "level {}/{}: order {} done in {:.2?}",
            r.level + 1,
            r.levels,
            r.size,
            r.elapsed
        );
    };
    let table = extract_with_progress(symbol, cfg.n0, cfg.alpha, ctx, cfg.order, Some(&progress))?;
    if !table.row0_monotone() {
        eprintln!(
            "warning: the sampled distribution function is not monotone; \
             the expansion hypothesis may not apply to this symbol"
        );
    }
    write(&cfg.out.join("table.csv"), &table.to_csv())?;
    write(&cfg.out.join("table.meta.json"), &table.meta_json())?;
    for k in 0..=cfg.alpha {
        println!("max |c{k}| = {}", table.row_max_abs(k).to_decimal());
    }
    eprintln!("expand finished in {:.2?}", started.elapsed());
    Ok(())
}

fn read_table<T: Scalar>(cfg: &Config) -> Result<ExpansionTable<T>, Error> {
    let csv = fs::read_to_string(cfg.out.join("table.csv"))?;
    let meta = fs::read_to_string(cfg.out.join("table.meta.json"))?;
    ExpansionTable::from_csv(&csv, &meta)
}

fn cmd_recover<T: Scalar>(cfg: &Config) -> Result<(), Error> {
    let table = read_table::<T>(cfg)?;
    let threshold = match &cfg.threshold {
        Some(text) => T::parse_decimal(text, table.bits())?,
        None => matrixless::default_threshold(table.bits()),
    };
    let rs = recover_with_threshold(&table, threshold)?;
    match rs.rctp_degree {
        Some(m) => println!("classified as a cosine polynomial of degree {m}"),
        None => println!("not a cosine polynomial at this threshold: emitting truncated series"),
    }
    write(&cfg.out.join("recovered.json"), &rs.to_json())?;
    let mut csv = String::from("k,abs_ghat\n");
    for (k, g) in rs.ghat.iter().enumerate() {
        csv.push_str(&format!("{k},{}\n", g.abs().to_decimal()));
    }
    write(&cfg.out.join("ghat_magnitudes.csv"), &csv)?;
    Ok(())
}

fn cmd_predict<T: Scalar>(cfg: &Config) -> Result<(), Error> {
    let table = read_table::<T>(cfg)?;
    let requested = cfg.interp_degree;
    let effective = matrixless::effective_degree(table.n0(), requested);
    if effective < requested {
        eprintln!(
            "warning: interpolation degree reduced to {effective} (base grid has only {} points)",
            table.n0()
        );
    }
    let pred = predict(&table, cfg.n_target, requested)?;
    write(&cfg.out.join("predicted.csv"), &pred.to_csv())
}

fn spectrum_csv<T: Scalar>(sample: &SpectrumSample<T>) -> String {
    let mut csv = String::from("j,lambda\n");
    for (j, v) in sample.values.iter().enumerate() {
        csv.push_str(&format!("{},{}\n", j + 1, v.to_decimal()));
    }
    csv
}

fn cmd_exact<T: Scalar>(
    cfg: &Config,
    ctx: &PrecisionContext,
    symbol: &Symbol<T>,
) -> Result<(), Error> {
    let n = cfg.n_target;
    let bits = cfg.bits;

    // closed form when the symbol is a symmetrizable tridiagonal
    if let Ok(sample) = tridiag_exact_eigenvalues(symbol, n) {
        let grid = matrixless::SampledGrid::<T>::new(n, bits);
        let mut csv = String::from("j,theta,lambda\n");
        for (j, v) in sample.values.iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{}\n",
                j + 1,
                grid.points[j].to_decimal(),
                v.to_decimal()
            ));
        }
        return write(&cfg.out.join("exact.csv"), &csv);
    }

    println!("no closed form for this band: falling back to a {bits}-bit eigensolve");
    let t = build_toeplitz(symbol, n);
    let eigs = eigenvalues(&t, ctx)?;
    let sample = project_real_sorted(&eigs, ctx, cfg.order)?;

    if let Some(g) = cfg.builtin_g {
        // vastly tighter than any realistic eigensolve error, reported per entry
        let tol = T::exp2(-(bits as i64) / 4, bits);
        let pg = perfect_grid(|t: &T| g.eval(symbol, t), &sample, &tol)?;
        let mut csv = String::from("j,xi,lambda,residual\n");
        for j in 0..pg.n {
            csv.push_str(&format!(
                "{},{},{},{}\n",
                j + 1,
                pg.xi[j].to_decimal(),
                sample.values[j].to_decimal(),
                pg.residuals[j].to_decimal()
            ));
        }
        write(&cfg.out.join("exact.csv"), &csv)
    } else {
        write(&cfg.out.join("exact.csv"), &spectrum_csv(&sample))
    }
}

fn cmd_compare<T: Scalar>(
    cfg: &Config,
    ctx: &PrecisionContext,
    symbol: &Symbol<T>,
) -> Result<(), Error> {
    let n = cfg.n_target;

    // low-precision run: keep the raw complex eigenvalues for the scatter
    let ctx53 = PrecisionContext::double();
    let symbol53 = Symbol::<f64>::from_json(&cfg.symbol_json, 53)?;
    let t53 = build_toeplitz(&symbol53, n);
    let low: Vec<Complex<f64>> = eigenvalues(&t53, &ctx53)?;
    let mut scatter = String::from("j,re,im\n");
    for (j, e) in low.iter().enumerate() {
        scatter.push_str(&format!(
            "{},{},{}\n",
            j + 1,
            e.re.to_decimal(),
            e.im.to_decimal()
        ));
    }
    write(&cfg.out.join("compare_low.csv"), &scatter)?;

    // high-precision run must pass the realness gate
    let t = build_toeplitz(symbol, n);
    let eigs = eigenvalues(&t, ctx)?;
    let high = project_real_sorted(&eigs, ctx, cfg.order)?;
    write(&cfg.out.join("compare_high.csv"), &spectrum_csv(&high))?;

    // deviation of the sorted low-precision real parts from the high run
    let mut low_re: Vec<f64> = low.iter().map(|e| e.re).collect();
    low_re.sort_by(f64::total_cmp);
    if cfg.order == SortOrder::Descending {
        low_re.reverse();
    }
    let low_realness = project_real_sorted(&low, &ctx53, cfg.order);
    let max_im = low.iter().map(|e| e.im.abs()).fold(0.0f64, f64::max);
    let mut max_dev = 0.0f64;
    for (a, b) in low_re.iter().zip(&high.values) {
        max_dev = max_dev.max((a - b.to_f64()).abs());
    }
    let report = serde_json::json!({
        "n": n,
        "high_bits": cfg.bits,
        "low_bits": 53,
        "low_passes_realness": low_realness.is_ok(),
        "low_max_abs_imag": format!("{max_im:e}"),
        "max_deviation_of_real_parts": format!("{max_dev:e}"),
        "low_precision_hazard": true,
    });
    write(
        &cfg.out.join("compare_report.json"),
        &serde_json::to_string_pretty(&report).expect("report"),
    )?;
    println!(
        "53-bit run: realness {}, max |Im| = {max_im:e}, max deviation = {max_dev:e}",
        if low_realness.is_ok() {
            "passed"
        } else {
            "FAILED"
        }
    );
    Ok(())
}

fn cmd_quadrature<T: Scalar>(cfg: &Config, symbol: &Symbol<T>) -> Result<(), Error> {
    let g = cfg.builtin_g.ok_or(Error::EmptyInput(
        "quadrature needs a preset with a built-in g (example1/2/3/5/6/7)",
    ))?;
    let k_count = cfg.n_target.min(512);
    let coeffs = fourier_coefficients_by_quadrature(
        |t: &T| g.eval(symbol, t),
        k_count,
        (8 * k_count).max(1 << 16),
        cfg.bits,
    )?;
    let mut csv = String::from("k,ghat\n");
    for (k, c) in coeffs.iter().enumerate() {
        csv.push_str(&format!("{k},{}\n", c.to_decimal()));
    }
    let name = cfg.preset_name.as_deref().unwrap_or("custom");
    write(&cfg.out.join(format!("quadrature_{name}.csv")), &csv)
}
