use std::fmt::Write as _;
use std::fs::File;
use std::io;

use constacyclic::fppoly::factor_xn_minus_lambda;
use constacyclic::gray::{gray_image_code, gray_min_weight};
use constacyclic::oracle::{run_suite, Suite};
use constacyclic::text::{parse_poly, parse_rpoly};
use constacyclic::{
    Error, ImageMode, MinWeight, Poly, PrimeField, RConstaCode, RElem, RPoly, Theta,
};
use serde_json::{json, Value};

use crate::args::{CodeArgs, EnumerateArgs, FactorArgs, Format, SuiteArg, ThetaArgs, VerifyArgs};

/// Version of the JSON layout emitted by every command.
pub const SCHEMA_VERSION: u32 = 1;

/// Exit status classes: 1 claim falsified, 2 invalid input, 3 precondition.
#[derive(Debug)]
pub enum Failure {
    Claim(String),
    Input(String),
    Precondition(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Claim(_) => 1,
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Claim(m) | Failure::Input(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// What a command prints, plus a failure to report after printing.
pub struct Output {
    pub stdout: String,
    pub failure: Option<Failure>,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            failure: None,
        }
    }
}

fn with_schema(mut v: Value) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn theta_of(field: PrimeField, args: &ThetaArgs) -> Result<Option<Theta>, Failure> {
    if let Some(s) = &args.theta {
        return Ok(Some(Theta::from_elem(RElem::parse(field, s)?)?));
    }
    match args.lambda {
        Some(l) => Ok(Some(Theta::from_i64(field, l, args.mu.unwrap_or(0))?)),
        None => Ok(None),
    }
}

fn require_theta(field: PrimeField, args: &ThetaArgs) -> Result<Theta, Failure> {
    theta_of(field, args)?
        .ok_or_else(|| Failure::Input("theta is required: pass --theta or --lambda/--mu".into()))
}

fn theta_json(t: Theta) -> Value {
    json!({"lambda": t.lambda(), "mu": t.mu()})
}

fn min_weight_text(m: MinWeight) -> String {
    match m {
        MinWeight::Exact(d) => d.to_string(),
        MinWeight::UpperBound(d) => format!("<={d}"),
    }
}

pub fn factor(args: &FactorArgs) -> Result<Output, Failure> {
    let field = PrimeField::new(args.p)?;
    let lambda = field.reduce(args.lambda);
    let fac = factor_xn_minus_lambda(field, args.n, lambda)?;
    if args.json {
        let factors: Vec<Value> = fac
            .factors()
            .iter()
            .map(|(g, e)| json!({"factor": g.to_string(), "coeffs": g.coeffs(), "multiplicity": e}))
            .collect();
        return Ok(Output::ok(with_schema(json!({
            "p": args.p,
            "n": args.n,
            "lambda": lambda,
            "target": fac.target().to_string(),
            "factors": factors,
            "divisor_count": fac.divisor_count(),
        }))));
    }
    let mut s = format!("{} = ", fac.target());
    for (g, e) in fac.factors() {
        write!(s, "({g})").unwrap();
        if *e > 1 {
            write!(s, "^{e}").unwrap();
        }
    }
    writeln!(s, "\ndivisors: {}", fac.divisor_count()).unwrap();
    Ok(Output::ok(s))
}

fn build_code(field: PrimeField, theta: Theta, args: &CodeArgs) -> Result<RConstaCode, Failure> {
    if let Some(g) = &args.from_generator {
        let (sigma, tau) = parse_rpoly(field, g)?;
        let g = RPoly::combine(sigma, tau)?;
        return Ok(RConstaCode::standardize(args.n, theta, &[g])?);
    }
    match (&args.g1, &args.g2) {
        (Some(g1), Some(g2)) => Ok(RConstaCode::from_standard_pair(
            args.n,
            theta,
            parse_poly(field, g1)?,
            parse_poly(field, g2)?,
        )?),
        _ => Err(Failure::Input(
            "give --g1 and --g2, or --from-generator".into(),
        )),
    }
}

pub fn code(args: &CodeArgs) -> Result<Output, Failure> {
    let field = PrimeField::new(args.p)?;
    let theta = require_theta(field, &args.theta)?;
    let c = build_code(field, theta, args)?;
    let d = c.dual();

    if let Some(path) = &args.codewords_csv {
        let mut w = csv::Writer::from_writer(File::create(path)?);
        for word in c.codewords(args.cap)? {
            let row: Vec<String> = word
                .iter()
                .map(|e| e.a().to_string())
                .chain(word.iter().map(|e| e.b().to_string()))
                .collect();
            w.write_record(&row)?;
        }
        w.flush()?;
    }

    let gray = if args.gray || args.min_weight {
        let image = gray_image_code(&c)?;
        let mw = if args.min_weight && !c.is_zero_code() {
            Some(gray_min_weight(&c, args.cap)?)
        } else {
            None
        };
        Some((image, mw))
    } else {
        None
    };

    if args.json {
        let mut v = json!({
            "code": c.descriptor(),
            "dual": d.descriptor(),
            "full": c.is_full(),
            "zero": c.is_zero_code(),
        });
        if let Some((image, mw)) = &gray {
            v["gray"] = json!({
                "length": image.len(),
                "dimension": c.size_log_p(),
                "mode": image.mode,
                "image_generator": image.image_generator.to_string(),
                "cyclic_code": image.code.descriptor(),
                "min_weight": mw,
            });
        }
        return Ok(Output::ok(with_schema(v)));
    }

    let p = field.p();
    let n = args.n;
    let modulus = |c: u64| Poly::x_pow_minus(field, n, c);
    let mut s = String::new();
    writeln!(s, "ring       F_{p} + vF_{p}, n = {n}, theta = {theta}").unwrap();
    writeln!(
        s,
        "g_(1-v)    {}    divides {}",
        c.g_one_minus_v(),
        modulus(theta.sigma_const())
    )
    .unwrap();
    writeln!(
        s,
        "g_v        {}    divides {}",
        c.g_v(),
        modulus(theta.tau_const())
    )
    .unwrap();
    writeln!(s, "generator  {}", c.single_generator()).unwrap();
    let note = if c.is_full() {
        " (full space)"
    } else if c.is_zero_code() {
        " (zero code)"
    } else {
        ""
    };
    writeln!(s, "size       {p}^{}{note}", c.size_log_p()).unwrap();
    writeln!(
        s,
        "dual       theta^-1 = {}, g_(1-v) = {}, g_v = {}, size {p}^{}",
        d.theta(),
        d.g_one_minus_v(),
        d.g_v(),
        d.size_log_p()
    )
    .unwrap();
    if let Some((image, mw)) = &gray {
        let params = match mw {
            Some(m) => format!(
                "[{}, {}, {}]",
                image.len(),
                c.size_log_p(),
                min_weight_text(*m)
            ),
            None => format!("[{}, {}]", image.len(), c.size_log_p()),
        };
        let mode = match image.mode {
            ImageMode::Equality => "equality, image is the cyclic code [g_(1-v) g_v]".to_string(),
            ImageMode::Containment { verified } => {
                format!("containment in <g_(1-v) g_v>, verified: {verified}")
            }
        };
        writeln!(
            s,
            "gray       {params} generator ({})({}) = {}",
            c.g_one_minus_v(),
            c.g_v(),
            image.image_generator
        )
        .unwrap();
        writeln!(s, "gray mode  {mode}").unwrap();
    }
    Ok(Output::ok(s))
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Units => Suite::Units,
        SuiteArg::Decompose => Suite::Decompose,
        SuiteArg::Principal => Suite::Principal,
        SuiteArg::Unique => Suite::Unique,
        SuiteArg::Frobenius => Suite::Frobenius,
        SuiteArg::Gray => Suite::Gray,
        SuiteArg::Dual => Suite::Dual,
        SuiteArg::Example => Suite::Example,
        SuiteArg::All => Suite::All,
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Output, Failure> {
    let field = PrimeField::new(args.p)?;
    let theta = theta_of(field, &args.theta)?;
    let report = run_suite(suite_of(args.suite), field, args.n, theta)?;
    let json = with_schema(serde_json::to_value(&report).expect("report serializes"));
    if let Some(path) = &args.out {
        std::fs::write(path, &json)?;
    }
    let stdout = if args.json {
        json
    } else {
        let mut s = String::new();
        for r in &report.reports {
            writeln!(s, "{r}").unwrap();
        }
        if let Some(ex) = &report.example {
            writeln!(
                s,
                "example: Gray image [{}, {}, {}], generator {} = {}",
                ex.length,
                ex.dimension,
                ex.min_weight,
                ex.image_generator_factored,
                ex.image_generator
            )
            .unwrap();
        }
        let failed = report.reports.iter().filter(|r| !r.passed()).count();
        if failed == 0 {
            writeln!(s, "{0} of {0} audits passed", report.reports.len()).unwrap();
        } else {
            writeln!(s, "{failed} of {} audits FAILED", report.reports.len()).unwrap();
        }
        s
    };
    let failure = (!report.passed).then(|| Failure::Claim("audit failed".into()));
    Ok(Output { stdout, failure })
}

/// Row limit for `enumerate`.
const MAX_ROWS: usize = 10_000;

pub fn enumerate(args: &EnumerateArgs) -> Result<Output, Failure> {
    let field = PrimeField::new(args.p)?;
    let theta = require_theta(field, &args.theta)?;
    let rows_expected = factor_xn_minus_lambda(field, args.n, theta.sigma_const())?.divisor_count()
        * factor_xn_minus_lambda(field, args.n, theta.tau_const())?.divisor_count();
    if rows_expected > MAX_ROWS {
        return Err(Failure::Input(format!(
            "{rows_expected} codes exceed the limit of {MAX_ROWS}"
        )));
    }
    let gray = theta.is_gray_cyclic();
    let mut rows = Vec::with_capacity(rows_expected);
    for c in RConstaCode::all(args.n, theta)? {
        let d = c.dual();
        let mw = if args.min_weight && theta.mu() != 0 && !c.is_zero_code() {
            Some(gray_min_weight(&c, args.cap)?)
        } else {
            None
        };
        rows.push((c, d, mw));
    }

    if args.json || matches!(args.format, Format::Json) {
        let list: Vec<Value> = rows
            .iter()
            .map(|(c, d, mw)| {
                json!({
                    "g1": c.g_one_minus_v().to_string(),
                    "g2": c.g_v().to_string(),
                    "size_log_p": c.size_log_p(),
                    "dual_g1": d.g_one_minus_v().to_string(),
                    "dual_g2": d.g_v().to_string(),
                    "gray_generator": gray.then(|| (c.g_one_minus_v() * c.g_v()).to_string()),
                    "min_weight": mw,
                })
            })
            .collect();
        return Ok(Output::ok(with_schema(json!({
            "p": args.p,
            "n": args.n,
            "theta": theta_json(theta),
            "count": list.len(),
            "rows": list,
        }))));
    }

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "g1",
        "g2",
        "size_log_p",
        "dual_g1",
        "dual_g2",
        "gray_generator",
    ];
    if args.min_weight {
        header.push("min_weight");
    }
    w.write_record(&header)?;
    for (c, d, mw) in &rows {
        let mut rec = vec![
            c.g_one_minus_v().to_string(),
            c.g_v().to_string(),
            c.size_log_p().to_string(),
            d.g_one_minus_v().to_string(),
            d.g_v().to_string(),
            if gray {
                (c.g_one_minus_v() * c.g_v()).to_string()
            } else {
                String::new()
            },
        ];
        if args.min_weight {
            rec.push(mw.map(min_weight_text).unwrap_or_default());
        }
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(Output::ok(String::from_utf8(bytes).expect("csv is utf-8")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Claim(String::new()).code(), 1);
        assert_eq!(Failure::from(Error::ZeroLength).code(), 2);
        let e = Error::NotADivisor {
            generator: "x".into(),
            modulus: "x^2-2".into(),
        };
        assert_eq!(Failure::from(e).code(), 3);
    }

    #[test]
    fn theta_forms() {
        let f3 = PrimeField::new(3).unwrap();
        let by_expr = ThetaArgs {
            theta: Some("-1+2v".into()),
            lambda: None,
            mu: None,
        };
        let by_ints = ThetaArgs {
            theta: None,
            lambda: Some(-1),
            mu: Some(2),
        };
        assert_eq!(
            theta_of(f3, &by_expr).unwrap(),
            theta_of(f3, &by_ints).unwrap()
        );
        let none = ThetaArgs {
            theta: None,
            lambda: None,
            mu: None,
        };
        assert!(theta_of(f3, &none).unwrap().is_none());
    }
}
