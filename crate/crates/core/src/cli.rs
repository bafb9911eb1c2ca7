//! Command-line front end. The binary only parses arguments and forwards to [`run`].
//!
//! Exit codes: 0 on success, 1 when a check reports violations, 2 on input errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::curve::{
    complement_report, curve_chi, curve_genus, flenner_min_degree, least_seshadri_rank, restrict_class,
    seshadri_degree, CurveKClass,
};
use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::moduli::{
    s_equivalent, sigma_graded, total_class, uhlenbeck_equivalent, validate_polystable, MockSheaf, PolystableObject,
};
use crate::plot::{plot_walls, AffineMap};
use crate::rational::{format_rational, int, parse_rational, rat, Rational};
use crate::sampling::{integral_class, rng};
use crate::surface::{DivisorClass, SurfaceData};
use crate::tilt::{central_charge, mu_b, tilt_slope, vertical_beta, StabilityParams};
use crate::vertical::{curve_power_sides, proportionality_sides, u_class};
use crate::walls::{check_nested, enumerate_candidate_walls, walls_to_csv, Region, SearchBounds, Wall};

#[derive(Parser, Debug, Clone)]
#[command(name = "tiltlab", version, about = "Exact tilt-stability numerics on polarized surfaces")]
pub struct RunConfig {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Surface JSON file, or `s1` / `s2` for the built-in fixtures.
    #[arg(long, global = true)]
    pub surface: Option<String>,
    /// Class as a JSON file, inline JSON, or `ch0:c1,c2,..:ch2`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub class: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Twisting divisor, e.g. `["1/2"]` or `1/2,0`.
    #[arg(long = "B", global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// `beta_min,beta_max,alpha_max`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub region: Option<String>,
    /// `max_rank,max_c`.
    #[arg(long, global = true, default_value = "2,4")]
    pub bounds: String,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check the Gram matrix, polarization and parity.
    ValidateSurface,
    /// `χ(class, other)`; `other` defaults to the structure sheaf.
    Euler {
        #[arg(long, allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// `ch^B` of the class.
    Twist,
    /// `μ_B`, and the tilt slope when `--alpha` is given.
    Slope,
    /// `Z_{α,β}` of the class.
    Charge,
    /// `β₀` of the class.
    VerticalWall,
    /// Candidate walls in a region, with a nestedness report.
    Walls,
    /// The determinantal class `u`.
    UClass,
    /// `w - w(-a) = a²u` and the proportionality sweep on random classes.
    CheckIdentities {
        #[arg(long, default_value_t = 4)]
        a_max: u32,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Restrict the class to a curve in `|aH|`.
    Restrict {
        #[arg(long)]
        a: u32,
    },
    /// Minimal curve multiple for restricting rank-`r` semistable sheaves.
    Flenner {
        #[arg(long)]
        rank: u32,
    },
    /// Degree of a rank-`r` curve class orthogonal to `F`.
    Seshadri {
        /// `rank,degree` of `F`.
        #[arg(long, allow_hyphen_values = true)]
        curve_class: String,
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        rank: u64,
    },
    /// Class of `G` on `C ∈ |aH|` with `χ(v|_C·G) = 0`.
    GClass {
        #[arg(long)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Validate a moduli point, optionally comparing it with another.
    Classify {
        #[arg(long)]
        point: String,
        #[arg(long)]
        compare: Option<String>,
    },
    /// SVG diagram of the walls; writes a JSON sidecar next to `--out`.
    PlotWalls,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn checked(stdout: String, failed: bool) -> Self {
        Outcome { code: i32::from(failed), stdout, stderr: String::new() }
    }

    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(out) => out,
        Err(e) => Outcome::input_error(e),
    }
}

fn pretty<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn invalid(msg: impl Into<String>) -> TiltError {
    TiltError::Invalid(msg.into())
}

pub fn load_surface(name: Option<&str>) -> Result<SurfaceData> {
    let name = name.ok_or_else(|| invalid("--surface is required"))?;
    if Path::new(name).exists() {
        return SurfaceData::load(name);
    }
    match name.to_ascii_lowercase().as_str() {
        "s1" => Ok(SurfaceData::s1()),
        "s2" => Ok(SurfaceData::s2()),
        _ => Err(invalid(format!("no surface file {name}"))),
    }
}

/// Accepts a JSON file, inline JSON, or `ch0:c1,c2,..:ch2`.
pub fn parse_class(text: &str, s: &SurfaceData) -> Result<KClass> {
    let trimmed = text.trim();
    let cls: KClass = if trimmed.starts_with('{') {
        serde_json::from_str(trimmed)?
    } else if Path::new(trimmed).is_file() {
        serde_json::from_str(&std::fs::read_to_string(trimmed)?)?
    } else {
        let parts: Vec<&str> = trimmed.split(':').collect();
        let [ch0, ch1, ch2] = parts.as_slice() else {
            return Err(invalid(format!("cannot read class {trimmed:?}; expected ch0:ch1:ch2")));
        };
        KClass::new(parse_rational(ch0)?, parse_divisor_list(ch1)?, parse_rational(ch2)?)
    };
    cls.check(s)?;
    Ok(cls)
}

fn parse_divisor_list(text: &str) -> Result<DivisorClass> {
    let coords = text.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>()?;
    Ok(DivisorClass::new(coords))
}

/// Accepts a JSON array (strings or integers) or a comma list.
pub fn parse_divisor(text: &str, s: &SurfaceData) -> Result<DivisorClass> {
    let trimmed = text.trim();
    let d = if trimmed.starts_with('[') {
        serde_json::from_str::<DivisorClass>(trimmed)?
    } else {
        parse_divisor_list(trimmed)?
    };
    s.check(&d)?;
    Ok(d)
}

pub fn parse_region(text: &str) -> Result<Region> {
    let parts = text.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>()?;
    let [beta_min, beta_max, alpha_max] =
        <[Rational; 3]>::try_from(parts).map_err(|_| invalid("--region needs beta_min,beta_max,alpha_max"))?;
    Ok(Region::new(beta_min, beta_max, alpha_max))
}

pub fn parse_bounds(text: &str) -> Result<SearchBounds> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [r, c] = parts.as_slice() else {
        return Err(invalid("--bounds needs max_rank,max_c"));
    };
    let num = |x: &str| x.parse::<u32>().map_err(|_| invalid(format!("bad bound {x:?}")));
    Ok(SearchBounds { max_rank: num(r)?, max_c: num(c)? })
}

fn parse_curve_class(text: &str) -> Result<CurveKClass> {
    let parts = text.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>()?;
    let [rank, degree] = <[Rational; 2]>::try_from(parts).map_err(|_| invalid("curve class needs rank,degree"))?;
    Ok(CurveKClass::new(rank, degree))
}

struct Ctx<'a> {
    cfg: &'a CommonArgs,
    s: SurfaceData,
}

impl Ctx<'_> {
    fn class(&self) -> Result<KClass> {
        parse_class(self.cfg.class.as_deref().ok_or_else(|| invalid("--class is required"))?, &self.s)
    }

    fn b(&self) -> Result<DivisorClass> {
        match &self.cfg.b {
            Some(t) => parse_divisor(t, &self.s),
            None => Ok(self.s.zero_divisor()),
        }
    }

    fn rational(&self, value: &Option<String>, flag: &str) -> Result<Rational> {
        parse_rational(value.as_deref().ok_or_else(|| invalid(format!("--{flag} is required")))?)
    }

    fn region(&self) -> Result<Region> {
        parse_region(self.cfg.region.as_deref().ok_or_else(|| invalid("--region is required"))?)
    }

    fn format(&self, default: Format) -> Format {
        self.cfg.format.unwrap_or(default)
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let s = load_surface(cfg.common.surface.as_deref())?;
    let ctx = Ctx { cfg: &cfg.common, s };
    match &cfg.command {
        Command::ValidateSurface => validate_surface(&ctx),
        Command::Euler { other } => euler(&ctx, other.as_deref()),
        Command::Twist => {
            let t = ctx.class()?.twist(&ctx.b()?, &ctx.s)?;
            emit_value(&ctx, &t, t.to_string())
        }
        Command::Slope => slope(&ctx),
        Command::Charge => {
            let p = StabilityParams::new(
                ctx.rational(&ctx.cfg.alpha, "alpha")?,
                ctx.rational(&ctx.cfg.beta, "beta")?,
                ctx.b()?,
            )?;
            let z = central_charge(&ctx.class()?, &p, &ctx.s)?;
            let text = format!("{} + {}i", format_rational(&z.re), format_rational(&z.im));
            emit_value(&ctx, &z, text)
        }
        Command::VerticalWall => {
            let beta0 = vertical_beta(&ctx.class()?, &ctx.b()?, &ctx.s)?;
            emit_value(&ctx, &json!({ "beta0": format_rational(&beta0) }), format_rational(&beta0))
        }
        Command::Walls => walls(&ctx),
        Command::UClass => {
            let u = u_class(&ctx.class()?, &ctx.s)?;
            let text = u.to_string();
            emit_json_default(&ctx, &u, text)
        }
        Command::CheckIdentities { a_max, samples } => check_identities(&ctx, *a_max, *samples),
        Command::Restrict { a } => restrict(&ctx, *a),
        Command::Flenner { rank } => {
            let a = flenner_min_degree(*rank, &ctx.s)?;
            let report = json!({ "rank": rank, "degree": format_rational(&ctx.s.degree()), "a": a });
            emit_value(&ctx, &report, a.to_string())
        }
        Command::Seshadri { curve_class, genus, rank } => seshadri(&ctx, curve_class, *genus, *rank),
        Command::GClass { a, m } => g_class(&ctx, *a, *m),
        Command::Classify { point, compare } => classify(&ctx, point, compare.as_deref()),
        Command::PlotWalls => plot(&ctx),
    }
}

/// Text by default, JSON on request.
fn emit_value<T: Serialize>(ctx: &Ctx, value: &T, text: String) -> Result<Outcome> {
    match ctx.format(Format::Text) {
        Format::Json => Ok(Outcome::ok(pretty(value)?)),
        _ => Ok(Outcome::ok(text + "\n")),
    }
}

/// JSON by default, text on request.
fn emit_json_default<T: Serialize>(ctx: &Ctx, value: &T, text: String) -> Result<Outcome> {
    match ctx.format(Format::Json) {
        Format::Text => Ok(Outcome::ok(text + "\n")),
        _ => Ok(Outcome::ok(pretty(value)?)),
    }
}

fn validate_surface(ctx: &Ctx) -> Result<Outcome> {
    let violations: Vec<String> = ctx.s.validate().iter().map(ToString::to_string).collect();
    let failed = !violations.is_empty();
    let out = match ctx.format(Format::Json) {
        Format::Text if failed => violations.join("\n") + "\n",
        Format::Text => "ok\n".to_string(),
        _ => pretty(&json!({ "ok": !failed, "violations": violations }))?,
    };
    Ok(Outcome::checked(out, failed))
}

fn euler(ctx: &Ctx, other: Option<&str>) -> Result<Outcome> {
    let a = ctx.class()?;
    let b = match other {
        Some(t) => parse_class(t, &ctx.s)?,
        None => KClass::one(&ctx.s),
    };
    let chi = a.euler_pairing(&b, &ctx.s)?;
    emit_value(ctx, &json!({ "chi": format_rational(&chi) }), format_rational(&chi))
}

fn slope(ctx: &Ctx) -> Result<Outcome> {
    let a = ctx.class()?;
    let b = ctx.b()?;
    let mu = mu_b(&a, &b, &ctx.s)?;
    let mut report = json!({ "mu_B": mu });
    let mut text = format!("mu_B = {mu}");
    if ctx.cfg.alpha.is_some() {
        let p = StabilityParams::new(ctx.rational(&ctx.cfg.alpha, "alpha")?, ctx.rational(&ctx.cfg.beta, "beta")?, b)?;
        let nu = tilt_slope(&a, &p, &ctx.s)?;
        text.push_str(&format!("\nnu = {nu}"));
        report["nu"] = serde_json::to_value(&nu)?;
    }
    emit_json_default(ctx, &report, text)
}

fn enumerate(ctx: &Ctx) -> Result<(KClass, DivisorClass, Region, Vec<Wall>)> {
    let v = ctx.class()?;
    let b = ctx.b()?;
    let region = ctx.region()?;
    let bounds = parse_bounds(&ctx.cfg.bounds)?;
    let walls = enumerate_candidate_walls(&v, &b, &ctx.s, &region, bounds)?;
    Ok((v, b, region, walls))
}

fn walls(ctx: &Ctx) -> Result<Outcome> {
    let (v, b, _, walls) = enumerate(ctx)?;
    let crossings = check_nested(&walls, &v, &b, &ctx.s)?;
    let failed = !crossings.is_empty();
    let out = match ctx.format(Format::Json) {
        Format::Csv => walls_to_csv(&walls),
        _ => pretty(&json!({ "walls": walls, "crossings": crossings }))?,
    };
    Ok(Outcome::checked(out, failed))
}

const SWEEP_ALPHAS: [(i64, i64); 3] = [(1, 2), (1, 1), (3, 1)];

fn check_identities(ctx: &Ctx, a_max: u32, samples: usize) -> Result<Outcome> {
    let seed = ctx.cfg.seed.ok_or_else(|| invalid("--seed is required for randomized sweeps"))?;
    if a_max == 0 {
        return Err(TiltError::ZeroMultiple { name: "a_max" });
    }
    let v = ctx.class()?;
    let b = ctx.b()?;
    let u = u_class(&v, &ctx.s)?;
    let beta0 = vertical_beta(&v, &b, &ctx.s)?;
    let mut failed = false;

    let mut identity = Vec::new();
    for a in 1..=a_max {
        let sides = curve_power_sides(&v, a, &ctx.s)?;
        failed |= !sides.holds();
        identity.push(json!({ "a": a, "holds": sides.holds(), "difference": sides.difference, "a2u": sides.a2u }));
    }

    let alphas: Vec<Rational> = match &ctx.cfg.alpha {
        Some(t) => vec![parse_rational(t)?],
        None => SWEEP_ALPHAS.iter().map(|&(n, d)| rat(n, d)).collect(),
    };
    let mut r = rng(seed);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for _ in 0..samples {
        let a = integral_class(&mut r, &ctx.s, 5);
        for alpha in &alphas {
            let sides = proportionality_sides(&a, &v, alpha, &b, &ctx.s)?;
            checked += 1;
            if !sides.holds() || sides.multiplier <= int(0) {
                failures.push(json!({
                    "class": a,
                    "alpha": format_rational(alpha),
                    "charge_side": format_rational(&sides.charge_side),
                    "pairing_side": format_rational(&sides.pairing_side()),
                    "multiplier": format_rational(&sides.multiplier),
                }));
            }
        }
    }
    failed |= !failures.is_empty();
    let report = json!({
        "v": v,
        "seed": seed,
        "u": u,
        "beta0": format_rational(&beta0),
        "identity_a2u": identity,
        "proportionality_checked": checked,
        "proportionality_failures": failures,
    });
    Ok(Outcome::checked(pretty(&report)?, failed))
}

fn restrict(ctx: &Ctx, a: u32) -> Result<Outcome> {
    let x = ctx.class()?;
    let genus = curve_genus(a, &ctx.s)?;
    let xc = restrict_class(&x, a, &ctx.s)?;
    let on_curve = curve_chi(&xc, &CurveKClass::one(), &genus);
    let on_surface = x.euler_pairing(&KClass::curve(a, &ctx.s), &ctx.s)?;
    let failed = on_curve != on_surface;
    let report = json!({
        "a": a,
        "genus": genus_value(&genus),
        "restricted": xc.to_pair(),
        "chi_curve": format_rational(&on_curve),
        "chi_surface": format_rational(&on_surface),
    });
    Ok(Outcome::checked(pretty(&report)?, failed))
}

fn genus_value(g: &num_bigint::BigInt) -> Value {
    i64::try_from(g).map(Value::from).unwrap_or_else(|_| Value::from(g.to_string()))
}

fn seshadri(ctx: &Ctx, curve_class: &str, genus: i64, rank: u64) -> Result<Outcome> {
    let f = parse_curve_class(curve_class)?;
    let g = genus.into();
    match seshadri_degree(&f, rank, &g) {
        Ok(d) => {
            let report = json!({ "rank": rank, "degree": d.to_string(), "F": f.to_pair(), "genus": genus });
            emit_json_default(ctx, &report, d.to_string())
        }
        Err(TiltError::NonIntegralDegree { rank, solution }) => {
            let (least, d) = least_seshadri_rank(&f, rank, &g)?;
            let report = json!({
                "rank": rank,
                "solution": format_rational(&solution),
                "integral": false,
                "least_rank": least,
                "least_degree": d.to_string(),
            });
            Ok(Outcome::checked(pretty(&report)?, true))
        }
        Err(e) => Err(e),
    }
}

fn g_class(ctx: &Ctx, a: u32, m: u32) -> Result<Outcome> {
    let v = ctx.class()?;
    let rep = complement_report(&v, a, m, &ctx.s)?;
    let rank = u32::try_from(v.ch0.to_integer()).map_err(|_| invalid("rank must be a small positive integer"))?;
    let flenner = flenner_min_degree(rank, &ctx.s)?;
    let report = json!({
        "a": a,
        "genus": genus_value(&rep.genus),
        "flenner_min": flenner,
        "v_restricted": rep.v_restricted.to_pair(),
        "G": rep.g_class.to_pair(),
        "chi_vG": format_rational(&rep.chi_v_g),
    });
    let failed = rep.chi_v_g != int(0);
    Ok(Outcome::checked(pretty(&report)?, failed))
}

fn read_point(text: &str) -> Result<MockSheaf> {
    let body = if text.trim_start().starts_with('{') { text.to_string() } else { std::fs::read_to_string(text)? };
    let value: Value = serde_json::from_str(&body)?;
    if value.get("factors").is_some() {
        Ok(MockSheaf::from_polystable(&serde_json::from_value::<PolystableObject>(value)?))
    } else {
        Ok(serde_json::from_value(value)?)
    }
}

fn classify(ctx: &Ctx, point: &str, compare: Option<&str>) -> Result<Outcome> {
    let m1 = read_point(point)?;
    let graded = sigma_graded(&m1);
    let mut report = json!({
        "graded": graded,
        "total_class": total_class(&graded, &ctx.s),
    });
    let mut failed = false;
    if ctx.cfg.class.is_some() {
        let v = ctx.class()?;
        let violations = validate_polystable(&graded, &v, &ctx.b()?, &ctx.s)?;
        failed |= !violations.is_empty();
        report["violations"] = serde_json::to_value(&violations)?;
    }
    if let Some(other) = compare {
        let m2 = read_point(other)?;
        let uhl = uhlenbeck_equivalent(&m1, &m2);
        let seq = s_equivalent(&graded, &sigma_graded(&m2));
        failed |= uhl != seq;
        report["uhlenbeck_equivalent"] = uhl.into();
        report["s_equivalent"] = seq.into();
    }
    Ok(Outcome::checked(pretty(&report)?, failed))
}

fn sidecar_path(svg: &Path) -> PathBuf {
    svg.with_extension("json")
}

fn plot(ctx: &Ctx) -> Result<Outcome> {
    let (_, _, region, walls) = enumerate(ctx)?;
    let svg = plot_walls(&walls, &region)?;
    let Some(out) = &ctx.cfg.out else {
        return Ok(Outcome::ok(svg));
    };
    let sidecar = json!({
        "transform": AffineMap::for_region(&region)?,
        "region": region,
        "walls": walls,
    });
    std::fs::write(out, &svg)?;
    let side = sidecar_path(out);
    std::fs::write(&side, pretty(&sidecar)?)?;
    let summary = json!({ "svg": out, "sidecar": side, "walls": walls.len() });
    Ok(Outcome::ok(pretty(&summary)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("tiltlab").chain(args.iter().copied()))
    }

    #[test]
    fn vertical_wall_bare() {
        let o = run_args(&["vertical-wall", "--surface", "s1", "--class", "2:1:0"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "1/2\n"));
    }

    #[test]
    fn class_forms_agree() {
        let s = SurfaceData::s2();
        let compact = parse_class("2:1,-1:-3/2", &s).unwrap();
        let json = parse_class(r#"{"ch0":"2","ch1":["1",-1],"ch2":"-3/2"}"#, &s).unwrap();
        assert_eq!(compact, json);
        assert!(parse_class("2:1:0", &s).is_err());
        assert!(parse_class("2:1", &s).is_err());
    }

    #[test]
    fn divisor_forms_agree() {
        let s = SurfaceData::s2();
        assert_eq!(parse_divisor(r#"["1/2", 0]"#, &s).unwrap(), parse_divisor("1/2,0", &s).unwrap());
        assert!(parse_divisor("1", &s).is_err());
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(run_args(&["euler", "--surface", "s1", "--class", "x"]).code, 2);
        assert_eq!(run_args(&["euler", "--class", "1:0:0"]).code, 2);
        assert_eq!(run_args(&["nope"]).code, 2);
        assert_eq!(run_args(&["check-identities", "--surface", "s1", "--class", "2:0:-1"]).code, 2);
    }

    #[test]
    fn euler_of_structure_sheaf() {
        let o = run_args(&["euler", "--surface", "s1", "--class", "1:0:0"]);
        assert_eq!(o.stdout, "1\n");
    }

    #[test]
    fn g_class_report() {
        let o = run_args(&["g-class", "--surface", "s1", "--class", "2:0:-1", "--a", "4"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["G"], json!(["8", "16"]));
        assert_eq!(v["genus"], json!(3));
        assert_eq!(v["chi_vG"], json!("0"));
    }

    #[test]
    fn seshadri_non_integral_exit_1() {
        let o = run_args(&["seshadri", "--surface", "s1", "--curve-class", "2,1", "--genus", "2", "--rank", "1"]);
        assert_eq!(o.code, 1);
        let o = run_args(&["seshadri", "--surface", "s1", "--curve-class", "2,0", "--genus", "3", "--rank", "3"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["degree"], json!("6"));
    }
}
