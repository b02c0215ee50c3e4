//! The `dgkoszul` command line. [`run`] does all the work and returns the
//! text for standard output with the exit code, so it can be tested without
//! spawning processes.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure (the
//! report carries a witness), 2 on usage or input errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assoc::{
    gauge_act, gauge_to_homotopy, homotopy_decompose, homotopy_to_gauge, mc_check, mc_defect,
    satisfies_homotopy_identity, DgAlgebra, GaugeElement,
};
use crate::error::{Error, Result};
use crate::expr::parse_homogeneous;
use crate::fixtures;
use crate::format::{self, Structure};
use crate::graded::GradedSpace;
use crate::koszul::{
    bar, ce, cobar, comass_check_augmented, comass_check_commutative, harrison, stable_through, truncate,
    Adjunction, Presentation, Truncation,
};
use crate::lie::{
    ad_series_gauge, enveloping_truncated, exp_gauge, gauge_path_coefficients, gauge_to_sullivan, lie_tensor,
    mc_check_lie, mc_defect_lie, sullivan_to_gauge, symmetric_power_dims, DgLieAlgebra,
};
use crate::report::{Format, Report, Status};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Axiom checks for an algebra or presentation
    Check,
    /// Cohomology table; presentations need --weight
    Cohomology,
    /// Maurer-Cartan test for --element (in g ⊗ I(A) with --coeff)
    McCheck,
    /// Gauge action of --xi on --element
    Gauge,
    /// Homotopy realizing the gauge action of --xi on --element
    Homotopy,
    /// Chevalley-Eilenberg presentation of a dg Lie algebra
    Ce,
    /// Bar presentation of an augmented dg algebra
    Bar,
    /// Cobar presentation of an augmented dg algebra
    Cobar,
    /// Harrison presentation of a commutative augmented dg algebra
    Harrison,
    /// Round trips through the adjunction bijections with --coeff
    AdjointCheck,
    /// The comparison squares through weight --weight
    ComassCheck,
    /// PBW dimensions of the enveloping algebra through --weight
    Pbw,
    /// List the built-in fixtures, or print one with --input
    Fixtures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "dgkoszul", version, about = "Maurer-Cartan theory and Koszul duality over the rationals")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// A file in the algebra format, or the name of a built-in fixture
    #[arg(long)]
    pub input: Option<String>,
    /// Weight truncation for presentations, or the PBW degree bound
    #[arg(long)]
    pub weight: Option<usize>,
    /// Bound on powers of t in Sullivan homotopies
    #[arg(long)]
    pub tdeg: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub element: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// Coefficient algebra A, a file or fixture name
    #[arg(long)]
    pub coeff: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Seed for sampled checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples for adjoint-check without --element
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if is_mathematical(&e) {
            Failure::Math(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Errors that say something about the mathematics of a well-formed input.
pub fn is_mathematical(e: &Error) -> bool {
    matches!(
        e,
        Error::NotMaurerCartan(_)
            | Error::NotNilpotent
            | Error::NotCommutative(_)
            | Error::Verification(_)
            | Error::DSquaredNonzero(_)
            | Error::NotChainMap(_)
            | Error::TruncationTooSmall { .. }
    )
}

fn usage<T>(message: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(message.into()))
}

fn echo(args: &[String]) -> String {
    args.iter()
        .map(|a| {
            if a.is_empty() || a.contains(char::is_whitespace) {
                format!("\"{a}\"")
            } else {
                a.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let structured = args.windows(2).any(|w| w[0] == "--format" && w[1] == "structured")
        || args.iter().any(|a| a == "--format=structured");
    let cli = match Cli::try_parse_from(std::iter::once("dgkoszul".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (e.to_string(), 0);
            }
            let mut report = Report::new(echo(&args));
            let message = e.kind().to_string();
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or(&message).trim_start_matches("error: ");
            report.fail(Status::UsageError, first);
            let format = if structured { Format::Structured } else { Format::Text };
            return (report.render(format), 2);
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let mut report = Report::new(echo(&args));
    let mut artifact: Option<String> = None;
    match dispatch(&cli, &mut report, &mut artifact) {
        Ok(()) => {}
        Err(Failure::Usage(m)) => report.fail(Status::UsageError, m),
        Err(Failure::Math(e)) => report.fail(Status::Fail, e.to_string()),
    }
    let rendered = report.render(format);
    let code = report.status().exit_code();
    match (&cli.out, artifact) {
        (Some(path), Some(text)) => {
            if let Err(e) = std::fs::write(path, text) {
                return (format!("cannot write {}: {e}\n", path.display()), 2);
            }
            (rendered, code)
        }
        (Some(path), None) => match std::fs::write(path, &rendered) {
            Ok(()) => (String::new(), code),
            Err(e) => (format!("cannot write {}: {e}\n", path.display()), 2),
        },
        (None, _) => (rendered, code),
    }
}

/// A file path if one exists, otherwise a fixture name.
pub fn load_structure(source: &str) -> Result<Structure> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            field: "input".into(),
            message: e.to_string(),
        })?;
        return format::parse(&text);
    }
    fixtures::load(source)
}

fn load(report: &mut Report, role: &str, source: Option<&str>) -> Outcome<Structure> {
    let Some(source) = source else {
        return usage(format!("--{role} is required"));
    };
    let s = load_structure(source)?;
    report.input(role, &format::print(&s));
    Ok(s)
}

fn kind_error(expected: &str, found: &Structure) -> Failure {
    Failure::Usage(
        Error::FlavorMismatch {
            expected: expected.into(),
            found: found.kind().into(),
        }
        .to_string(),
    )
}

fn dga(s: Structure) -> Outcome<DgAlgebra> {
    match s {
        Structure::Dga(a) => Ok(a),
        other => Err(kind_error("dga", &other)),
    }
}

fn require_flag<'a>(value: &'a Option<String>, name: &str) -> Outcome<&'a str> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("--{name} is required")))
}

fn dispatch(cli: &Cli, report: &mut Report, artifact: &mut Option<String>) -> Outcome<()> {
    match cli.command {
        Command::Fixtures => fixtures_cmd(cli, report, artifact),
        Command::Check => check_cmd(cli, report),
        Command::Cohomology => cohomology_cmd(cli, report),
        Command::McCheck => mc_check_cmd(cli, report),
        Command::Gauge => gauge_cmd(cli, report),
        Command::Homotopy => homotopy_cmd(cli, report),
        Command::Ce | Command::Bar | Command::Cobar | Command::Harrison => construction_cmd(cli, report, artifact),
        Command::AdjointCheck => adjoint_cmd(cli, report),
        Command::ComassCheck => comass_cmd(cli, report),
        Command::Pbw => pbw_cmd(cli, report),
    }
}

fn fixtures_cmd(cli: &Cli, report: &mut Report, artifact: &mut Option<String>) -> Outcome<()> {
    match &cli.input {
        Some(name) => {
            let text = fixtures::text(name)?;
            report.input("input", &text);
            report.value("kind", fixtures::load(name)?.kind());
            if cli.out.is_some() {
                *artifact = Some(text);
            } else {
                report.value("text", text.trim_end());
            }
        }
        None => {
            for (name, summary) in fixtures::catalog() {
                report.row("fixtures", [("name", name), ("summary", summary)]);
            }
        }
    }
    Ok(())
}

fn describe_space(report: &mut Report, space: &GradedSpace) {
    report.value("dim", space.total_dim());
    for d in space.degrees() {
        report.row("basis", [("degree", d.to_string()), ("labels", space.labels_in(d).join(" "))]);
    }
}

fn check_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let s = load(report, "input", cli.input.as_deref())?;
    report.value("kind", s.kind());
    describe_space(report, s.space());
    let checks = match &s {
        Structure::Dga(a) => a.check_axioms(),
        Structure::Dgla(g) => g.check_axioms(),
        Structure::Formal(p) => p.check(),
    };
    report.checks("", &checks);
    Ok(())
}

/// `truncated` carries the stability bound of a weight truncation; finite
/// algebras get no stability column.
fn cohomology_table(report: &mut Report, space: &GradedSpace, betti: &BTreeMap<i64, usize>, truncated: Option<Option<i64>>) {
    let (Some(lo), Some(hi)) = (space.degrees().min(), space.degrees().max()) else {
        return;
    };
    for d in lo..=hi {
        let mut cells = vec![
            ("degree", d.to_string()),
            ("cochains", space.dim(d).to_string()),
            ("H", betti.get(&d).copied().unwrap_or(0).to_string()),
        ];
        if let Some(stable) = truncated {
            cells.push(("stable", if stable.is_some_and(|s| d <= s) { "yes" } else { "no" }.to_string()));
        }
        report.row("cohomology", cells);
    }
}

fn cohomology_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let s = load(report, "input", cli.input.as_deref())?;
    report.value("kind", s.kind());
    match s {
        Structure::Dga(a) => {
            let c = a.complex()?;
            cohomology_table(report, a.space(), &c.betti(), None);
        }
        Structure::Dgla(g) => {
            let c = g.complex()?;
            cohomology_table(report, g.space(), &c.betti(), None);
        }
        Structure::Formal(p) => {
            let Some(w) = cli.weight else {
                return usage("--weight is required for presentations");
            };
            let t = truncate(&p, w)?;
            report.value("weight", w);
            report.value(
                "stable_through",
                t.stable_through.map_or("none".to_string(), |s| s.to_string()),
            );
            let betti = match &t.result {
                Truncation::Algebra(a) => a.complex()?.betti(),
                Truncation::Lie(g) => g.complex()?.betti(),
            };
            cohomology_table(report, t.space(), &betti, Some(t.stable_through));
        }
    }
    Ok(())
}

/// The algebra in which MC elements live: the input itself, or its tensor
/// with the augmentation ideal of `--coeff`.
enum Work {
    Lie(DgLieAlgebra),
    Assoc(DgAlgebra),
}

impl Work {
    fn space(&self) -> &GradedSpace {
        match self {
            Work::Lie(g) => g.space(),
            Work::Assoc(a) => a.space(),
        }
    }

    fn is_mc(&self, x: &Vector) -> Result<bool> {
        match self {
            Work::Lie(g) => mc_check_lie(g, x),
            Work::Assoc(a) => mc_check(a, x),
        }
    }

    fn defect(&self, x: &Vector) -> String {
        match self {
            Work::Lie(g) => format!("d(x) + ½[x,x] = {}", g.space().label_vector(&mc_defect_lie(g, x))),
            Work::Assoc(a) => format!("d(x) + x² = {}", a.space().label_vector(&mc_defect(a, x))),
        }
    }
}

fn working(cli: &Cli, report: &mut Report) -> Outcome<Work> {
    let s = load(report, "input", cli.input.as_deref())?;
    let coeff = match &cli.coeff {
        Some(_) => Some(dga(load(report, "coeff", cli.coeff.as_deref())?)?.augmentation_ideal()?.0),
        None => None,
    };
    Ok(match (s, coeff) {
        (Structure::Dgla(g), None) => Work::Lie(g),
        (Structure::Dgla(g), Some(i)) => Work::Lie(lie_tensor(&g, &i)?),
        (Structure::Dga(a), None) => Work::Assoc(a),
        (Structure::Dga(a), Some(i)) => Work::Assoc(a.augmentation_ideal()?.0.tensor(&i)),
        (other, _) => return Err(kind_error("dga or dgla", &other)),
    })
}

fn mc_check_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let work = working(cli, report)?;
    let x = parse_homogeneous(work.space(), require_flag(&cli.element, "element")?, 1)?;
    report.value("element", work.space().label_vector(&x));
    let ok = work.is_mc(&x)?;
    report.check("maurer-cartan", (!ok).then(|| work.defect(&x)));
    Ok(())
}

fn require_mc(work: &Work, x: &Vector) -> Outcome<()> {
    if !work.is_mc(x)? {
        return Err(Failure::Math(Error::NotMaurerCartan(work.defect(x))));
    }
    Ok(())
}

fn gauge_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let work = working(cli, report)?;
    let space = work.space().clone();
    let x = parse_homogeneous(&space, require_flag(&cli.element, "element")?, 1)?;
    let xi = parse_homogeneous(&space, require_flag(&cli.xi, "xi")?, 0)?;
    require_mc(&work, &x)?;
    report.value("element", space.label_vector(&x));
    report.value("xi", space.label_vector(&xi));
    match &work {
        Work::Lie(g) => {
            let y = exp_gauge(g, &xi, &x)?;
            report.value("result", space.label_vector(&y));
            report.check("result is MC", (!mc_check_lie(g, &y)?).then(|| work.defect(&y)));
            let series = ad_series_gauge(g, &xi, &x)?;
            report.check(
                "exp(ξ) in Ug agrees with the ad series",
                (series != y).then(|| format!("ad series gives {}", space.label_vector(&series))),
            );
            let back = exp_gauge(g, &-&xi, &y)?;
            report.check(
                "exp(-ξ) undoes the action",
                (back != x).then(|| format!("returned {}", space.label_vector(&back))),
            );
        }
        Work::Assoc(a) => {
            let gauge = GaugeElement::new(a, xi.clone())?;
            let y = gauge_act(a, &gauge, &x)?;
            report.value("result", space.label_vector(&y));
            report.check("result is MC", (!mc_check(a, &y)?).then(|| work.defect(&y)));
            let inverse = gauge.inverse(a)?;
            report.value("inverse", format!("1 + {}", space.label_vector(&inverse.ideal_part)));
            let back = gauge_act(a, &inverse, &y)?;
            report.check(
                "the inverse undoes the action",
                (back != x).then(|| format!("returned {}", space.label_vector(&back))),
            );
        }
    }
    Ok(())
}

fn homotopy_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let work = working(cli, report)?;
    let space = work.space().clone();
    let x = parse_homogeneous(&space, require_flag(&cli.element, "element")?, 1)?;
    let xi = parse_homogeneous(&space, require_flag(&cli.xi, "xi")?, 0)?;
    require_mc(&work, &x)?;
    report.value("element", space.label_vector(&x));
    report.value("xi", space.label_vector(&xi));
    match &work {
        Work::Lie(g) => {
            let needed = gauge_path_coefficients(g, &xi, &x)?.len().saturating_sub(1);
            let bound = cli.tdeg.unwrap_or(needed);
            report.value("tdeg", bound);
            let z = gauge_to_sullivan(g, &x, &xi, bound)?;
            for k in 0..=z.t_degree() {
                let at = |v: &[Vector]| v.get(k).map_or("0".to_string(), |c| space.label_vector(c));
                report.row("path", [("k", k.to_string()), ("t^k", at(&z.poly)), ("t^k dt", at(&z.dt))]);
            }
            report.check("path is MC in g[t,dt]", None);
            let end = exp_gauge(g, &xi, &x)?;
            report.value("end", space.label_vector(&end));
            let recovered = sullivan_to_gauge(g, &z, bound)?;
            report.value("recovered xi", space.label_vector(&recovered));
            let again = exp_gauge(g, &recovered, &x)?;
            report.check(
                "recovered gauge reproduces the endpoint",
                (again != end).then(|| format!("exp(ξ')·x = {}", space.label_vector(&again))),
            );
        }
        Work::Assoc(a) => {
            let gauge = GaugeElement::new(a, xi.clone())?;
            let z = gauge_to_homotopy(a, &x, &gauge)?;
            let parts = homotopy_decompose(a, &z);
            report.value("start", space.label_vector(&parts.start));
            report.value("end", space.label_vector(&parts.end));
            report.value("homotopy", space.label_vector(&parts.homotopy));
            report.check("path is MC in g⊗Int", None);
            report.check(
                "d(h) = (1+h)z1 - z2(1+h)",
                (!satisfies_homotopy_identity(a, &parts)).then(|| "identity fails".to_string()),
            );
            let recovered = homotopy_to_gauge(a, &z)?;
            report.check(
                "recovered gauge equals 1 + ξ",
                (recovered != gauge).then(|| format!("1 + {}", space.label_vector(&recovered.ideal_part))),
            );
        }
    }
    Ok(())
}

fn describe_presentation(report: &mut Report, p: &Presentation) {
    report.value("flavor", p.flavor());
    report.value("completed", p.is_completed());
    for (k, (label, d)) in p.describe().into_iter().enumerate() {
        report.row(
            "generators",
            [("label", label), ("degree", p.degree(k).to_string()), ("d", d)],
        );
    }
}

fn construction_cmd(cli: &Cli, report: &mut Report, artifact: &mut Option<String>) -> Outcome<()> {
    let s = load(report, "input", cli.input.as_deref())?;
    let p = match cli.command {
        Command::Ce => match s {
            Structure::Dgla(g) => ce(&g),
            other => return Err(kind_error("dgla", &other)),
        },
        Command::Bar => bar(&dga(s)?)?,
        Command::Cobar => cobar(&dga(s)?)?,
        _ => harrison(&dga(s)?)?,
    };
    describe_presentation(report, &p);
    report.checks("", &p.check());
    if let Some(w) = cli.weight {
        let t = truncate(&p, w)?;
        report.value("weight", w);
        report.value("truncation dim", t.space().total_dim());
        let axioms = match &t.result {
            Truncation::Algebra(a) => a.check_axioms(),
            Truncation::Lie(g) => g.check_axioms(),
        };
        report.checks("truncation", &axioms);
        report.value(
            "stable_through",
            stable_through(&p, w).map_or("none".to_string(), |s| s.to_string()),
        );
    }
    let text = format::print(&Structure::Formal(p));
    if cli.out.is_some() {
        *artifact = Some(text);
    } else {
        report.value("text", text.trim_end());
    }
    Ok(())
}

fn adjoint_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let s = load(report, "input", cli.input.as_deref())?;
    let a = dga(load(report, "coeff", cli.coeff.as_deref())?)?;
    let adj = match &s {
        Structure::Dgla(g) => Adjunction::lie(&a, g)?,
        Structure::Dga(g) => Adjunction::assoc(&a, g)?,
        other => return Err(kind_error("dga or dgla", other)),
    };
    let space = adj.tensor_space().clone();
    report.value("free", format!("{} on {} generators", adj.free().flavor(), adj.free().num_generators()));
    report.value("formal", format!("{} on {} generators", adj.formal().flavor(), adj.formal().num_generators()));
    if let Some(e) = &cli.element {
        let m = parse_homogeneous(&space, e, 1)?;
        report.value("element", space.label_vector(&m));
        if !adj.is_mc(&m)? {
            return Err(Failure::Math(Error::NotMaurerCartan(space.label_vector(&m))));
        }
        let free = adj.mc_to_free(&m)?;
        for (gen, image) in adj.render_free_map(&free) {
            report.row("free map", [("generator", gen), ("image", image)]);
        }
        let formal = adj.mc_to_formal(&m)?;
        for (gen, image) in adj.render_formal_map(&formal) {
            report.row("formal map", [("generator", gen), ("image", image)]);
        }
        report.checks("", &adj.round_trips(&m)?);
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let degree_one: Vec<usize> = space.range(1).collect();
    for trial in 0..cli.trials {
        let m = adj.random_mc(&mut rng)?;
        report.row("samples", [("trial", trial.to_string()), ("element", space.label_vector(&m))]);
        report.checks(&format!("trial{trial}"), &adj.round_trips(&m)?);
        // an arbitrary element: dg maps on both sides must match the MC test
        let y: Vector = degree_one.iter().map(|&k| (k, crate::scalar::int(rng.gen_range(-2..=2)))).collect();
        let mc = adj.is_mc(&y)?;
        let free_ok = adj.free_map_witness(&adj.free_images_of(&y))?.is_none();
        let formal_ok = adj.formal_map_witness(&adj.formal_images_of(&y))?.is_none();
        report.check(
            &format!("trial{trial}.dg-map iff MC"),
            (free_ok != mc || formal_ok != mc).then(|| {
                format!(
                    "{}: MC {mc}, free side dg {free_ok}, formal side dg {formal_ok}",
                    space.label_vector(&y)
                )
            }),
        );
    }
    Ok(())
}

fn comass_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let a = dga(load(report, "input", cli.input.as_deref())?)?;
    let w = cli.weight.unwrap_or(4);
    report.value("weight", w);
    let mut ran = 0;
    if a.augmentation().is_some() && a.is_graded_commutative() {
        match comass_check_commutative(&a, w) {
            Ok(r) => {
                report.checks("U∘Harr=Cobar", &r);
                ran += 1;
            }
            Err(Error::NotNilpotent) => report.value("U∘Harr=Cobar", "skipped: augmentation ideal is not nilpotent"),
            Err(e) => return Err(e.into()),
        }
    } else {
        report.value("U∘Harr=Cobar", "skipped: needs an augmented graded-commutative algebra");
    }
    if a.augmentation().is_some() {
        report.checks("CE∘Lie=Ab∘Bar", &comass_check_augmented(&a, w)?);
        ran += 1;
    } else {
        report.value("CE∘Lie=Ab∘Bar", "skipped: needs an augmentation");
    }
    if ran == 0 {
        return usage("no comparison square applies to this algebra");
    }
    Ok(())
}

fn pbw_cmd(cli: &Cli, report: &mut Report) -> Outcome<()> {
    let g = match load(report, "input", cli.input.as_deref())? {
        Structure::Dgla(g) => g,
        other => return Err(kind_error("dgla", &other)),
    };
    let w = cli.weight.unwrap_or(3);
    report.value("weight", w);
    let u = enveloping_truncated(&g, w).dims_by_weight();
    let s = symmetric_power_dims(g.space(), w);
    for k in 0..=w {
        report.row("pbw", [("weight", k), ("U", u[k]), ("S", s[k])]);
    }
    report.check(
        "dim U_w = dim S^w",
        (u != s).then(|| format!("U {u:?} vs S {s:?}")),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (String, i32) {
        run(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn spec_examples() {
        let (out, code) = run_args(&["check", "--input", "sl2"]);
        assert_eq!(code, 0, "{out}");
        let (out, code) = run_args(&["cohomology", "--input", "ce-sl2", "--weight", "3", "--format", "structured"]);
        assert_eq!(code, 0, "{out}");
        for (k, h) in [(0, 1), (1, 0), (2, 0), (3, 1)] {
            assert!(out.contains(&format!("table.cohomology.{k}.degree={k}\n")), "{out}");
            assert!(out.contains(&format!("table.cohomology.{k}.H={h}\n")), "{out}");
        }
        let (out, code) = run_args(&["mc-check", "--input", "g2dim", "--element", "x"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["mc-check", "--input", "g2dim", "--element", "2*x"]).1, 1);
        assert_eq!(run_args(&["mc-check", "--input", "g2dim", "--element", "y"]).1, 2);
        assert_eq!(run_args(&["mc-check", "--input", "nope", "--element", "x"]).1, 2);
        assert_eq!(run_args(&["frobnicate"]).1, 2);
        assert_eq!(run_args(&["cobar", "--input", "k-cross-k"]).1, 1);
        assert_eq!(run_args(&["harrison", "--input", "sl2"]).1, 2);
        assert_eq!(run_args(&["--help"]).1, 0);
    }
}
