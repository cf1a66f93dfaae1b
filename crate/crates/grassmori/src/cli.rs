//! Command-line front end.
//!
//! Every engine in the library is exposed as a subcommand with both a
//! human-readable table format and a machine-readable JSON format
//! (`--output json`).  All randomized computations are driven by a single
//! seed (flag `--seed`, or the `GRASSMORI_SEED` environment variable), so
//! identical invocations produce byte-identical output.
//!
//! Exit codes: `0` success (including "out of scope" and "not effective"
//! verdicts, which are answers), `2` usage error, `3` mathematically
//! unsupported configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::exactlin::Rat;
use crate::fano::{self, FanoVerdict};
use crate::grassmann::{self, GrassmannIndex};
use crate::lattice::{BlowupConfig, CurveClass, DivisorClass, Family};
use crate::orbits::{self, OrbitError};
use crate::sbld;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Exact-arithmetic toolkit for blow-ups of Grassmannians: Fano
/// classification, orbit complexity, cone geometry, and stable base loci.
#[derive(Parser, Debug)]
#[command(name = "grassmori", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunOpts,
    #[command(subcommand)]
    pub cmd: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunOpts {
    /// Seed for all randomized genericity checks.
    #[arg(long, global = true, env = "GRASSMORI_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Number of random samples per genericity check.
    #[arg(long, global = true, default_value_t = 5,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    pub output: Output,
    /// Largest absolute value of sampled integer coordinates.
    #[arg(long, global = true, default_value_t = 100,
          value_parser = clap::value_parser!(i64).range(1..))]
    pub bound: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    /// Projective space of dimension n.
    Projective,
    /// Smooth quadric of dimension n.
    Quadric,
    /// Smooth cubic hypersurface of dimension n ≥ 3.
    Cubic,
    /// Smooth intersection of two quadrics of dimension n ≥ 3.
    Y22,
    /// Codimension-c linear section of the Plücker-embedded G(1,4).
    G14Section,
    /// Grassmannian G(r,n) of projective r-planes in Pⁿ.
    Grassmannian,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointArg {
    /// The distinguished coordinate point (maximal contact with the
    /// standard centers).
    Standard,
    /// A point in general position with respect to the standard centers.
    General,
}

impl PointArg {
    fn as_str(self) -> &'static str {
        match self {
            PointArg::Standard => "standard",
            PointArg::General => "general",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Fano / weak-Fano classification sweep over all catalogued families.
    Fano,
    /// Complexity grid for two-point blow-ups, r ≤ 4 and n ≤ 16.
    Complexity,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a blow-up at general points as Fano, weak Fano, or neither.
    Classify {
        /// Variety family to blow up.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Dimension (hypersurface families) or ambient dimension
        /// (grassmannian).
        #[arg(long)]
        n: Option<usize>,
        /// Projective dimension of the subspaces (grassmannian family only).
        #[arg(long)]
        r: Option<usize>,
        /// Section codimension (g14-section family only).
        #[arg(long, default_value_t = 0)]
        codim: usize,
        /// Number of blown-up points.
        #[arg(long)]
        k: usize,
    },
    /// Complexity of the blow-up of G(r,n) at k general points.
    Complexity {
        #[arg(long, required_unless_present = "grid")]
        r: Option<usize>,
        #[arg(long, required_unless_present = "grid")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "grid")]
        k: Option<usize>,
        /// Emit the whole two-point complexity grid for r ≤ 4, n ≤ 16.
        #[arg(long)]
        grid: bool,
    },
    /// Decide whether the blow-up of G(r,n) at k general points is spherical.
    Spherical {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Catalogued effective cone of a spherical blow-up of G(r,n).
    Effcone {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The effective, movable, nef, Mori, and moving-curve cones of the
    /// one-point blow-up of G(r,n).
    Cones {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Chamber and stable base locus of a divisor aH + bE on the one-point
    /// blow-up of G(r,n).
    Sbld {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Divisor coefficients in the H, E basis, e.g. `1,-2` for H − 2E.
        /// Rational entries like `3/2` are accepted.
        #[arg(long = "D", value_name = "a,b", allow_hyphen_values = true)]
        d: String,
    },
    /// Dimension and divisor test for the contact stratum of order m.
    Schubert {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Contact order: the stratum of subspaces meeting the center's
        /// span in dimension ≥ r + 1 − m.
        #[arg(long)]
        m: usize,
        /// Also measure the dimension by a seeded Jacobian-rank sample.
        #[arg(long)]
        verify: bool,
    },
    /// Projective dimension of the m-th osculating space of the Plücker
    /// embedding.
    Osculate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Osculating order (m = 1 is the tangent space).
        #[arg(long)]
        m: usize,
        /// Where to osculate.
        #[arg(long, value_enum, default_value_t = PointArg::Standard)]
        at: PointArg,
    },
    /// Multiplicity of the j-th standard contact divisor at a point.
    Multiplicity {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Index of the contact divisor, 0 ≤ j ≤ r + 1.
        #[arg(long)]
        j: usize,
        /// Where to measure the multiplicity.
        #[arg(long, value_enum, default_value_t = PointArg::Standard)]
        at: PointArg,
    },
    /// Regenerate a headline table; every cell is a fresh computation.
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
}

/// A command failure: message for stderr plus the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn unsupported(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_UNSUPPORTED,
            message: message.into(),
        }
    }
}

/// Parse `argv` and run; returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; clap picks the
            // stream and the code (0 for help, 2 for usage errors).
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => {
            print!("{stdout}");
            EXIT_OK
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Run one parsed command and return what should be printed to stdout.
pub fn dispatch(cli: &Cli) -> Result<String, Failure> {
    match &cli.cmd {
        Command::Classify {
            family,
            n,
            r,
            codim,
            k,
        } => cmd_classify(&cli.run, *family, *n, *r, *codim, *k),
        Command::Complexity { r, n, k, grid } => {
            if *grid {
                cmd_complexity_grid(&cli.run)
            } else {
                // clap guarantees presence when --grid is absent.
                cmd_complexity(&cli.run, r.unwrap(), n.unwrap(), k.unwrap())
            }
        }
        Command::Spherical { r, n, k } => cmd_spherical(&cli.run, *r, *n, *k),
        Command::Effcone { r, n, k } => cmd_effcone(&cli.run, *r, *n, *k),
        Command::Cones { r, n } => cmd_cones(&cli.run, *r, *n),
        Command::Sbld { r, n, d } => cmd_sbld(&cli.run, *r, *n, d),
        Command::Schubert { r, n, m, verify } => cmd_schubert(&cli.run, *r, *n, *m, *verify),
        Command::Osculate { r, n, m, at } => cmd_osculate(&cli.run, *r, *n, *m, *at),
        Command::Multiplicity { r, n, j, at } => cmd_multiplicity(&cli.run, *r, *n, *j, *at),
        Command::Table { which } => cmd_table(&cli.run, *which),
    }
}

fn grassmann_index(r: usize, n: usize) -> Result<GrassmannIndex, Failure> {
    GrassmannIndex::new(r, n).map_err(|e| Failure::usage(e.to_string()))
}

/// Tagged JSON description of the underlying family of a configuration.
fn family_json(cfg: &BlowupConfig) -> Value {
    match cfg.family {
        Family::ProjectiveSpace => json!({"family": "projective", "n": cfg.n}),
        Family::Quadric => json!({"family": "quadric", "n": cfg.n}),
        Family::Cubic => json!({"family": "cubic", "n": cfg.n}),
        Family::Y22 => json!({"family": "y22", "n": cfg.n}),
        Family::G14Section(c) => json!({"family": "g14_section", "codim": c, "n": cfg.n}),
        Family::Grassmannian(r, n) => json!({"family": "grassmannian", "r": r, "n": n}),
        Family::Other => json!({"family": "custom", "n": cfg.n}),
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    let (Some(b), Some(e)) = (base.as_object_mut(), extra.as_object()) else {
        panic!("merge expects two JSON objects");
    };
    for (key, val) in e {
        b.insert(key.clone(), val.clone());
    }
    base
}

fn build_config(
    family: FamilyArg,
    n: Option<usize>,
    r: Option<usize>,
    codim: usize,
    k: usize,
) -> Result<BlowupConfig, Failure> {
    let need_n = || n.ok_or_else(|| Failure::usage("--n is required for this family"));
    let result = match family {
        FamilyArg::Projective => BlowupConfig::projective(need_n()?, k),
        FamilyArg::Quadric => BlowupConfig::quadric(need_n()?, k),
        FamilyArg::Cubic => BlowupConfig::cubic(need_n()?, k),
        FamilyArg::Y22 => BlowupConfig::y22(need_n()?, k),
        FamilyArg::G14Section => BlowupConfig::g14_section(codim, k),
        FamilyArg::Grassmannian => {
            let r = r.ok_or_else(|| Failure::usage("--r is required for family grassmannian"))?;
            BlowupConfig::grassmannian(r, need_n()?, k)
        }
    };
    result.map_err(|e| Failure::usage(e.to_string()))
}

fn render_verdict(run: &RunOpts, cfg: &BlowupConfig, verdict: &FanoVerdict) -> String {
    match run.output {
        Output::Json => {
            let v = merge(
                family_json(cfg),
                merge(json!({"k": cfg.k}), verdict.to_json()),
            );
            format!("{v}\n")
        }
        Output::Table => {
            let mut out = format!(
                "blow-up of {} at {} general point{}\n",
                cfg.family,
                cfg.k,
                if cfg.k == 1 { "" } else { "s" }
            );
            out.push_str(&format!("status: {}\n", verdict.status));
            if let Some(w) = &verdict.witness {
                out.push_str(&format!("witness: {w}\n"));
            }
            out
        }
    }
}

fn cmd_classify(
    run: &RunOpts,
    family: FamilyArg,
    n: Option<usize>,
    r: Option<usize>,
    codim: usize,
    k: usize,
) -> Result<String, Failure> {
    let cfg = build_config(family, n, r, codim, k)?;
    let verdict = fano::classify(&cfg);
    Ok(render_verdict(run, &cfg, &verdict))
}

fn complexity_failure(err: OrbitError) -> Failure {
    match err {
        OrbitError::UnsupportedConfiguration { .. } => Failure::unsupported(err.to_string()),
        other => Failure::usage(other.to_string()),
    }
}

fn cmd_complexity(run: &RunOpts, r: usize, n: usize, k: usize) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let report = orbits::complexity_opts(g, k, run.seed, run.samples as usize, run.bound)
        .map_err(complexity_failure)?;
    match run.output {
        Output::Json => Ok(format!("{}\n", report.to_json())),
        Output::Table => {
            let qualifier = if report.exact { "exact" } else { "lower bound" };
            let toric = if r == 0 { ", toric" } else { "" };
            let mut out = format!("G({r},{n}) blown up at {k} general points\n");
            out.push_str(&format!(
                "complexity: {} ({qualifier}{toric})\n",
                report.complexity
            ));
            out.push_str(&format!(
                "orbit dim: {} of {}, algebra dim: {}, stabilizer dim: {}\n",
                report.orbit_dim,
                g.dim(),
                report.algebra_dim,
                report.stabilizer_dim
            ));
            out.push_str(&format!(
                "samples: {:?}, seed: {}\n",
                report.samples, report.seed
            ));
            Ok(out)
        }
    }
}

/// Two-point complexity over the whole catalogued range.  Every cell is a
/// fresh engine run, not a lookup.
fn cmd_complexity_grid(run: &RunOpts) -> Result<String, Failure> {
    const MAX_R: usize = 4;
    const MAX_N: usize = 16;
    let mut cells = Vec::new();
    for r in 1..=MAX_R {
        for n in (2 * r + 1)..=MAX_N {
            let g = grassmann_index(r, n)?;
            let report = orbits::complexity_opts(g, 2, run.seed, run.samples as usize, run.bound)
                .map_err(complexity_failure)?;
            cells.push(report);
        }
    }
    match run.output {
        Output::Json => {
            let rows: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "r": c.r,
                        "n": c.n,
                        "complexity": c.complexity,
                        "exact": c.exact,
                    })
                })
                .collect();
            let v = json!({"k": 2, "seed": run.seed, "grid": rows});
            Ok(format!("{v}\n"))
        }
        Output::Table => {
            let mut out = String::from("complexity of G(r,n) blown up at 2 general points\n");
            out.push_str(" r\\n |");
            for n in 3..=MAX_N {
                out.push_str(&format!(" {n:>3}"));
            }
            out.push('\n');
            out.push_str(&format!("-----+{}\n", "-".repeat(4 * (MAX_N - 2))));
            for r in 1..=MAX_R {
                out.push_str(&format!("  {r}  |"));
                for n in 3..=MAX_N {
                    match cells.iter().find(|c| c.r == r && c.n == n) {
                        Some(c) => out.push_str(&format!(" {:>3}", c.complexity)),
                        None => out.push_str(&format!(" {:>3}", ".")),
                    }
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_spherical(run: &RunOpts, r: usize, n: usize, k: usize) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let verdict = match orbits::is_spherical(g, k, run.seed) {
        Ok(true) => "spherical",
        Ok(false) => "not_spherical",
        Err(OrbitError::Inconclusive { .. }) => "inconclusive",
        Err(err) => return Err(complexity_failure(err)),
    };
    match run.output {
        Output::Json => {
            let v = json!({"r": r, "n": n, "k": k, "verdict": verdict, "seed": run.seed});
            Ok(format!("{v}\n"))
        }
        Output::Table => {
            let text = match verdict {
                "spherical" => "yes",
                "not_spherical" => "no",
                _ => "inconclusive (sampled bound does not decide)",
            };
            Ok(format!("spherical: {text}\n"))
        }
    }
}

fn cmd_effcone(run: &RunOpts, r: usize, n: usize, k: usize) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let cone = orbits::effective_cone_catalog(g, k)
        .map_err(|e| Failure::unsupported(e.to_string()))?;
    match run.output {
        Output::Json => {
            let v = merge(json!({"r": r, "n": n, "k": k}), cone.to_json());
            Ok(format!("{v}\n"))
        }
        Output::Table => {
            let mut out = format!("effective cone of G({r},{n}) blown up at {k} points\n");
            for ray in cone.extremal_rays() {
                let rat_ray: Vec<Rat> = ray.iter().map(|z| Rat::from_integer(z.clone())).collect();
                out.push_str(&format!("  {}\n", DivisorClass::from_vector(&rat_ray)));
            }
            Ok(out)
        }
    }
}

fn cmd_cones(run: &RunOpts, r: usize, n: usize) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let suite = sbld::cone_suite(g);
    match run.output {
        Output::Json => {
            let v = merge(json!({"r": r, "n": n}), suite.to_json());
            Ok(format!("{v}\n"))
        }
        Output::Table => {
            let divisor_rays = |cone: &crate::cones::RationalCone| -> String {
                cone.extremal_rays()
                    .iter()
                    .map(|ray| {
                        let rat: Vec<Rat> =
                            ray.iter().map(|z| Rat::from_integer(z.clone())).collect();
                        DivisorClass::from_vector(&rat).to_string()
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let curve_rays = |cone: &crate::cones::RationalCone| -> String {
                cone.extremal_rays()
                    .iter()
                    .map(|ray| {
                        let rat: Vec<Rat> =
                            ray.iter().map(|z| Rat::from_integer(z.clone())).collect();
                        CurveClass::from_vector(&rat).to_string()
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut out = format!("cones of the one-point blow-up of G({r},{n})\n");
            out.push_str(&format!("effective:     {}\n", divisor_rays(&suite.effective)));
            out.push_str(&format!("movable:       {}\n", divisor_rays(&suite.movable)));
            out.push_str(&format!("nef:           {}\n", divisor_rays(&suite.nef)));
            out.push_str(&format!("mori:          {}\n", curve_rays(&suite.mori)));
            out.push_str(&format!("moving curves: {}\n", curve_rays(&suite.moving_curves)));
            Ok(out)
        }
    }
}

/// Parse `a,b,...` into coefficients in the `H, E_i` basis, signs as typed.
fn parse_class(text: &str) -> Result<DivisorClass, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() < 2 {
        return Err(Failure::usage(
            "expected at least two comma-separated coefficients, e.g. --D 1,-2",
        ));
    }
    let mut coeffs = Vec::with_capacity(parts.len());
    for part in &parts {
        let c: Rat = part
            .parse()
            .map_err(|_| Failure::usage(format!("malformed rational coefficient `{part}`")))?;
        coeffs.push(c);
    }
    let h = coeffs[0].clone();
    let e = coeffs[1..].iter().map(|c| -c.clone()).collect();
    Ok(DivisorClass::new(h, e))
}

fn cmd_sbld(run: &RunOpts, r: usize, n: usize, d: &str) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let class = parse_class(d)?;
    let chamber = sbld::locate(g, &class).map_err(|e| Failure::usage(e.to_string()))?;
    match run.output {
        Output::Json => {
            let v = merge(
                json!({"r": r, "n": n, "class": class.to_json()}),
                chamber.to_json(),
            );
            Ok(format!("{v}\n"))
        }
        Output::Table => Ok(format!("class: {class}\nchamber: {chamber}\n")),
    }
}

fn cmd_schubert(
    run: &RunOpts,
    r: usize,
    n: usize,
    m: usize,
    verify: bool,
) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let dim = grassmann::schubert_dimension(g, m).map_err(|e| Failure::usage(e.to_string()))?;
    let is_divisor =
        grassmann::schubert_is_divisor(g, m).map_err(|e| Failure::usage(e.to_string()))?;
    let sampled = if verify {
        Some(
            grassmann::schubert_dimension_sampled(g, m, run.seed)
                .map_err(|e| Failure::usage(e.to_string()))?,
        )
    } else {
        None
    };
    match run.output {
        Output::Json => {
            let mut v = json!({"r": r, "n": n, "m": m, "dim": dim, "is_divisor": is_divisor});
            if let Some(s) = sampled {
                v["sampled_dim"] = json!(s);
            }
            Ok(format!("{v}\n"))
        }
        Output::Table => {
            let mut out = format!(
                "contact stratum m={m} on G({r},{n}): dimension {dim}, divisor: {}\n",
                if is_divisor { "yes" } else { "no" }
            );
            if let Some(s) = sampled {
                out.push_str(&format!("sampled dimension: {s}\n"));
            }
            Ok(out)
        }
    }
}

fn point_for(g: GrassmannIndex, at: PointArg) -> grassmann::SubspacePoint {
    match at {
        PointArg::Standard => grassmann::standard_point(g),
        PointArg::General => grassmann::general_point(g),
    }
}

fn cmd_osculate(run: &RunOpts, r: usize, n: usize, m: usize, at: PointArg) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let p = point_for(g, at);
    let dim = grassmann::osculating_dimension(g, &p, m);
    match run.output {
        Output::Json => {
            let v = json!({"r": r, "n": n, "m": m, "dim": dim, "point": at.as_str()});
            Ok(format!("{v}\n"))
        }
        Output::Table => Ok(format!(
            "osculating space of order {m} at the {} point of G({r},{n}): projective dimension {dim}\n",
            at.as_str()
        )),
    }
}

fn cmd_multiplicity(
    run: &RunOpts,
    r: usize,
    n: usize,
    j: usize,
    at: PointArg,
) -> Result<String, Failure> {
    let g = grassmann_index(r, n)?;
    let center = grassmann::standard_center(g, j).map_err(|e| Failure::usage(e.to_string()))?;
    let form = grassmann::schubert_divisor(g, &center).map_err(|e| Failure::usage(e.to_string()))?;
    let p = point_for(g, at);
    let mult = grassmann::multiplicity_at(g, &form, &p).map_err(|e| Failure::usage(e.to_string()))?;
    match run.output {
        Output::Json => {
            let v = json!({"r": r, "n": n, "j": j, "multiplicity": mult, "point": at.as_str()});
            Ok(format!("{v}\n"))
        }
        Output::Table => Ok(format!(
            "multiplicity of the j={j} contact divisor at the {} point of G({r},{n}): {mult}\n",
            at.as_str()
        )),
    }
}

/// All catalogued classification families, swept in `k` until the first
/// definitive failure.
fn fano_sweep() -> Vec<(BlowupConfig, FanoVerdict)> {
    let base: Vec<BlowupConfig> = vec![
        BlowupConfig::projective(2, 1).unwrap(),
        BlowupConfig::projective(3, 1).unwrap(),
        BlowupConfig::projective(4, 1).unwrap(),
        BlowupConfig::quadric(2, 1).unwrap(),
        BlowupConfig::quadric(3, 1).unwrap(),
        BlowupConfig::quadric(4, 1).unwrap(),
        BlowupConfig::quadric(5, 1).unwrap(),
        BlowupConfig::cubic(3, 1).unwrap(),
        BlowupConfig::y22(3, 1).unwrap(),
        BlowupConfig::g14_section(3, 1).unwrap(),
        BlowupConfig::grassmannian(1, 4, 1).unwrap(),
    ];
    let mut rows = Vec::new();
    for cfg in base {
        for k in 1..=12 {
            let with_k = cfg.with_points(k);
            let verdict = fano::classify(&with_k);
            let stop = matches!(
                verdict.status,
                crate::fano::FanoStatus::NotWeakFano | crate::fano::FanoStatus::OutOfScope
            );
            rows.push((with_k, verdict));
            if stop {
                break;
            }
        }
    }
    rows
}

fn cmd_table(run: &RunOpts, which: TableKind) -> Result<String, Failure> {
    match which {
        TableKind::Fano => {
            let rows = fano_sweep();
            match run.output {
                Output::Json => {
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|(cfg, verdict)| {
                            merge(
                                family_json(cfg),
                                json!({"k": cfg.k, "status": verdict.status.as_str()}),
                            )
                        })
                        .collect();
                    let v = json!({"table": "fano", "rows": items});
                    Ok(format!("{v}\n"))
                }
                Output::Table => {
                    let mut out = String::from("Fano classification sweep\n");
                    let mut last_family = String::new();
                    for (cfg, verdict) in &rows {
                        let name = cfg.family.to_string();
                        if name != last_family {
                            out.push_str(&format!("{name}:\n"));
                            last_family = name;
                        }
                        out.push_str(&format!("  k={:<2} {}\n", cfg.k, verdict.status));
                    }
                    Ok(out)
                }
            }
        }
        TableKind::Complexity => cmd_complexity_grid(run),
    }
}
