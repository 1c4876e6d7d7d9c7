use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qadjoint::chars::{
    character_cr, character_of, chi_t, compare_at_q1, decompose_sl2, difference_identity, Character, Picture,
};
use qadjoint::classical;
use qadjoint::coorbit::{
    coorbit, diag_coinv_truncation, ideal_truncation, image_data, image_sl, kernel_basis, psi_power_check, sphere_span,
    Point, PsiVariant,
};
use qadjoint::hopf::{checks, is_coinvariant, Coaction, GlqElement, SlqElement};
use qadjoint::mq::{sigma, tau, MqElement};
use qadjoint::parse::parse_mq;
use qadjoint::scalars::{rational, Scalar};
use qadjoint::{Error, Result};

#[derive(Parser)]
#[command(name = "qadjoint", version, about = "Adjoint coactions and co-orbit maps of quantum matrix algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Refuse truncation degrees above this.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,
    /// Refuse matrix sizes above this.
    #[arg(long, global = true, default_value_t = 3)]
    max_n: usize,
}

#[derive(Args)]
struct PointArgs {
    /// Point as a JSON file or inline JSON, e.g. '{"n":2,"entries":[["2","0"],["0","3"]]}'.
    #[arg(long)]
    point: String,
    #[arg(long, default_value = "beta", value_parser = parse_coaction)]
    coaction: Coaction,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the tau_i are beta-coinvariant and the sigma_i alpha-coinvariant.
    VerifyCoinvariants {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Truncated kernel of a co-orbit map against the coinvariant ideal.
    Kernel {
        #[command(flatten)]
        p: PointArgs,
        #[arg(long)]
        degree: usize,
        /// Also redo the computation at q = 1.
        #[arg(long)]
        q1: bool,
    },
    /// Truncated image of a co-orbit map and its character.
    Image {
        #[command(flatten)]
        p: PointArgs,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        q1: bool,
    },
    /// Run the closed-form and identity checks.
    Identities,
    /// Apply a co-orbit map to an expression in the x_ij.
    Eval {
        #[command(flatten)]
        p: PointArgs,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        q1: bool,
    },
    /// Characters: of a truncated image, of a sphere span, or the closed form for C^r.
    Character {
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value = "beta", value_parser = parse_coaction)]
        coaction: Coaction,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        sphere: Option<usize>,
        #[arg(long)]
        cr: Option<i64>,
        #[arg(long)]
        q1: bool,
    },
}

fn parse_coaction(s: &str) -> std::result::Result<Coaction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn conventions() -> Value {
    json!({
        "generators": "x_ij in row-major order x11 < x12 < ... < xNN",
        "monomial_order": "total degree, then larger exponent at the first differing generator",
        "tau": "tau_i = sum over i-subsets I of q^(-2 w(I)) [I|I], so tau_2 = q^-6 det_q for N = 2",
        "sigma": "sigma_i = sum over i-subsets I of [I|I]",
        "glq": "elements are numerator * det_q^-k",
        "sphere": "generators rescaled to a*c, 1 + (q + q^-1)*b*c, d*b",
        "characters": "t-grading by coldeg - d over det_q^d; z-exponent is 2 x weight",
    })
}

fn load_point(arg: &str) -> Result<Point> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{}: {}", arg, e)))?
    } else {
        arg.to_string()
    };
    Point::from_json(&text)
}

fn check_limits(cli: &Cli, n: usize, degree: usize) -> Result<()> {
    if n > cli.max_n {
        return Err(Error::Unsupported(format!("N = {} exceeds --max-n {}", n, cli.max_n)));
    }
    if degree > cli.max_degree {
        return Err(Error::Unsupported(format!("degree {} exceeds --max-degree {}", degree, cli.max_degree)));
    }
    Ok(())
}

fn item(name: String, pass: bool) -> Value {
    json!({ "item": name, "pass": pass })
}

fn character_json(c: &Character) -> Value {
    json!({ "text": c.to_string(), "terms": c.to_json() })
}

fn decomposition_json(c: &Character) -> Value {
    match decompose_sl2(c) {
        Ok(m) => json!(m.iter().map(|(k, v)| json!({ "two_l": k, "multiplicity": v })).collect::<Vec<_>>()),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn specialized_point(xi: &Point) -> Result<Vec<Vec<qadjoint::scalars::Rational>>> {
    xi.specialize(&rational(1, 1))
}

fn verify_coinvariants(cli: &Cli, n: usize) -> Result<(Value, bool)> {
    check_limits(cli, n, 0)?;
    let mut items = Vec::new();
    for i in 1..=n {
        items.push(item(format!("beta(tau_{}) = tau_{} ⊗ 1", i, i), is_coinvariant(&tau(i, n)?, Coaction::Beta)));
        items.push(item(format!("alpha(sigma_{}) = sigma_{} ⊗ 1", i, i), is_coinvariant(&sigma(i, n)?, Coaction::Alpha)));
    }
    items.push(item("tau_i and sigma_i commute pairwise".into(), checks::coinvariants_commute(n)));
    let pass = items.iter().all(|v| v["pass"] == true);
    Ok((json!({ "command": "verify-coinvariants", "n": n, "items": items, "pass": pass }), pass))
}

fn kernel(cli: &Cli, p: &PointArgs, d: usize, q1: bool) -> Result<(Value, bool)> {
    let xi = load_point(&p.point)?;
    check_limits(cli, xi.size(), d)?;
    let k = kernel_basis(&xi, p.coaction, d)?;
    let i = ideal_truncation(&xi, p.coaction, d)?;
    let mut report = json!({
        "command": "kernel",
        "point": xi.to_json(),
        "coaction": p.coaction.to_string(),
        "degree": d,
        "kernel": k.dim(),
        "ideal": i.dim(),
        "ideal_in_kernel": k.contains(&i)?,
        "equal": k.equals(&i)?,
        "kernel_basis": k.to_json(),
    });
    if q1 {
        if p.coaction != Coaction::Beta {
            return Err(Error::Unsupported("the q = 1 path is implemented for beta".into()));
        }
        report["q1_kernel"] = json!(classical::kernel_dim(&specialized_point(&xi)?, d)?);
    }
    Ok((report, true))
}

fn image(cli: &Cli, p: &PointArgs, d: usize, q1: bool) -> Result<(Value, bool)> {
    let xi = load_point(&p.point)?;
    let n = xi.size();
    check_limits(cli, n, d)?;
    let im = image_data(&xi, p.coaction, d)?;
    let mut report = json!({
        "command": "image",
        "point": xi.to_json(),
        "coaction": p.coaction.to_string(),
        "degree": d,
        "dimension": im.space.dim(),
        "character": character_json(&im.character),
    });
    if xi.is_diagonal() {
        report["in_diagonal_coinvariants"] = json!(diag_coinv_truncation(n, d).contains(&im.space)?);
    }
    if n == 2 {
        let sl = image_sl(&xi, p.coaction, d)?;
        let c = character_of(&sl, Picture::SlqZ)?;
        report["sl"] = json!({
            "dimension": sl.dim(),
            "character": character_json(&c),
            "decomposition": decomposition_json(&c),
            "contains_sphere_span": sl.contains(&sphere_span(d)?)?,
        });
    }
    if q1 {
        if p.coaction != Coaction::Beta {
            return Err(Error::Unsupported("the q = 1 path is implemented for beta".into()));
        }
        let c = classical::image_character(&specialized_point(&xi)?, d)?;
        report["q1_character"] = character_json(&c);
        report["q1_equal"] = json!(c == im.character);
    }
    Ok((report, true))
}

fn identities(cli: &Cli) -> Result<(Value, bool)> {
    let mut items = Vec::new();
    let generic = Point::diagonal(&[Scalar::from_int(2), Scalar::from_int(3)])?;
    let nil = Point::nilpotent(Scalar::from_int(1))?;
    for n in 0..=4 {
        items.push(item(format!("psi beta-diag x21^{}", n), psi_power_check(&generic, n, PsiVariant::BetaDiag)?));
        items.push(item(format!("phi alpha-diag x21^{}", n), psi_power_check(&generic, n, PsiVariant::AlphaDiag)?));
        items.push(item(format!("psi beta-nilpotent x21^{}", n), psi_power_check(&nil, n, PsiVariant::BetaNilpotent)?));
    }
    for r in 0..=5 {
        items.push(item(format!("difference identity r = {}", r), difference_identity(r)?));
    }
    for r in 0..=4 {
        items.push(item(format!("dim W^{} = {}", r, (r + 1) * (r + 1)), sphere_span(r)?.dim() == (r + 1) * (r + 1)));
    }
    for n in 2..=cli.max_n.min(3) {
        items.push(item(format!("coassociativity N = {}", n), checks::coassociativity_holds(n)));
        items.push(item(format!("counit N = {}", n), checks::counit_holds(n)));
        items.push(item(format!("antipode N = {}", n), checks::antipode_holds(n)));
        items.push(item(format!("det_q central N = {}", n), checks::det_central(n)));
    }
    for d in 0..=cli.max_degree.min(3) {
        items.push(item(format!("q = 1 Hilbert series d = {}", d), compare_at_q1(&generic, d)?));
    }
    let pass = items.iter().all(|v| v["pass"] == true);
    Ok((json!({ "command": "identities", "items": items, "pass": pass }), pass))
}

fn eval(cli: &Cli, p: &PointArgs, expr: &str, q1: bool) -> Result<(Value, bool)> {
    let xi = load_point(&p.point)?;
    let n = xi.size();
    let f = parse_mq(expr, n)?;
    check_limits(cli, n, f.max_degree().unwrap_or(0))?;
    let mut value = coorbit(&xi, &f, p.coaction)?;
    if q1 {
        let one = rational(1, 1);
        let terms = value
            .numerator()
            .terms()
            .iter()
            .map(|(m, c)| Ok((m.clone(), Scalar::from_rational(c.specialize(&one)?))))
            .collect::<Result<Vec<_>>>()?;
        value = GlqElement::new(MqElement::from_terms(n, terms), value.detpow());
    }
    let mut report = json!({
        "command": "eval",
        "point": xi.to_json(),
        "coaction": p.coaction.to_string(),
        "input": f.to_string(),
        "q1": q1,
        "value": value.to_string(),
    });
    if n == 2 {
        report["sl_value"] = json!(SlqElement::from_glq(&value)?.to_string());
    }
    Ok((report, true))
}

#[allow(clippy::too_many_arguments)]
fn character(
    cli: &Cli,
    point: Option<&str>,
    which: Coaction,
    degree: Option<usize>,
    sphere: Option<usize>,
    cr: Option<i64>,
    q1: bool,
) -> Result<(Value, bool)> {
    let mut report = json!({ "command": "character" });
    let mut any = false;
    if let Some(p) = point {
        let d = degree.ok_or_else(|| Error::Parse("--point needs --degree".into()))?;
        let xi = load_point(p)?;
        check_limits(cli, xi.size(), d)?;
        let c = if q1 { classical::image_character(&specialized_point(&xi)?, d)? } else { image_data(&xi, which, d)?.character };
        report["image"] = json!({ "point": xi.to_json(), "degree": d, "q1": q1, "character": character_json(&c) });
        if let Ok(z) = c.to_z() {
            report["image"]["z_character"] = character_json(&z);
        }
        any = true;
    }
    if let Some(r) = sphere {
        check_limits(cli, 2, r)?;
        let c = character_of(&sphere_span(r)?, Picture::SlqZ)?;
        report["sphere"] = json!({ "r": r, "character": character_json(&c), "decomposition": decomposition_json(&c) });
        any = true;
    }
    if let Some(r) = cr {
        let c = character_cr(r);
        report["cr"] = json!({ "r": r, "character": character_json(&c), "difference_identity": difference_identity(r)? });
        any = true;
    }
    if !any {
        let chis: Vec<Value> = (0..=4).map(|m| json!({ "two_l": m, "character": chi_t(m).unwrap().to_string() })).collect();
        report["chi_t"] = json!(chis);
    }
    Ok((report, true))
}

fn run(cli: &Cli) -> Result<(Value, bool)> {
    match &cli.command {
        Command::VerifyCoinvariants { n } => verify_coinvariants(cli, *n),
        Command::Kernel { p, degree, q1 } => kernel(cli, p, *degree, *q1),
        Command::Image { p, degree, q1 } => image(cli, p, *degree, *q1),
        Command::Identities => identities(cli),
        Command::Eval { p, expr, q1 } => eval(cli, p, expr, *q1),
        Command::Character { point, coaction, degree, sphere, cr, q1 } => {
            character(cli, point.as_deref(), *coaction, *degree, *sphere, *cr, *q1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((mut report, pass)) => {
            report["conventions"] = conventions();
            let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("{}", json!({ "error": format!("{}: {}", path.display(), e) }));
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", text);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
