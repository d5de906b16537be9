use std::collections::BTreeMap;
use std::fmt::Write as _;

use nestrad::discovery::{
    coeff_scan, denest_scan, dioph_scan, power_scan, quotient_scan, CoefficientTemplate, DenestQuery,
    QuotientScanOptions,
};
use nestrad::geometric::{geom_ascending, geom_descending, geom_limit};
use nestrad::identity::eval_side;
use nestrad::parser::{parse_element, parse_lower};
use nestrad::rational::int;
use nestrad::{print_canonical, IdentityRecord, RadicalElement};
use serde_json::{json, Value};

use crate::args::{Cli, CoeffArgs, Command, DenestArgs, Family};
use crate::corpus;
use crate::report::RunReport;
use crate::text::{parse_domain, parse_prime, side_latex, side_text, split_slot};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CORPUS: i32 = 3;

const RAMANUJAN_RHS: &str = "root(3,1/9) - root(3,2/9) + root(3,4/9)";

/// Text destined for stdout and stderr plus the process exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn input_error(message: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code: EXIT_INPUT,
        }
    }
}

type Step<T> = Result<T, Outcome>;

fn input<T, E: std::fmt::Display>(r: Result<T, E>) -> Step<T> {
    r.map_err(|e| Outcome::input_error(e.to_string()))
}

fn element(expr: &str) -> Step<RadicalElement> {
    input(parse_element(expr))
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

pub fn run(cli: &Cli) -> Outcome {
    if cli.precision < 32 {
        return Outcome::input_error(format!("precision {} is below the 32-bit minimum", cli.precision));
    }
    let result = match &cli.command {
        Command::Verify { lhs, rhs } => verify(cli, lhs, rhs),
        Command::Corpus { path, threads } => corpus_cmd(cli, path, *threads),
        Command::Pow { expr, n } => pow(cli, expr, *n),
        Command::SearchPow { expr, min, max, max_terms } => search_pow(cli, expr, *min, *max, *max_terms),
        Command::SearchCoeff(args) => search_coeff(cli, args),
        Command::SearchQuotient { n, m, b_max, c_max, fold_signs } => {
            search_quotient(cli, *n, *m, *b_max, *c_max, *fold_signs)
        }
        Command::Dioph { b_max, c_max, no_fourth_power_free } => Ok(dioph(cli, *b_max, *c_max, !no_fourth_power_free)),
        Command::Geom { family, m } => geom(cli, *family, *m),
        Command::Denest(args) => denest(cli, args),
        Command::Eval { expr } => eval(cli, expr),
        Command::Latex { expr } => latex(cli, expr),
    };
    result.unwrap_or_else(|o| o)
}

fn verify(cli: &Cli, lhs: &str, rhs: &str) -> Step<Outcome> {
    let rep = corpus::check("cli", lhs, rhs, cli.precision).map_err(Outcome::input_error)?;
    let code = if rep.status == "verified-exact" { EXIT_OK } else { EXIT_REFUTED };
    let out = if cli.json {
        let mut v = serde_json::to_value(&rep).expect("report serializes");
        v["engine"] = json!("nestrad");
        v["version"] = json!(nestrad::VERSION);
        v["precision"] = json!(cli.precision);
        json_line(&v)
    } else {
        let mut s = format!(
            "{}  lhs_terms={} rhs_terms={} interesting={}\n",
            rep.status, rep.lhs_terms, rep.rhs_terms, rep.interesting
        );
        if let Some(note) = &rep.note {
            let _ = writeln!(s, "note: {note}");
        }
        s
    };
    Ok(Outcome::with_code(out, code))
}

fn corpus_cmd(cli: &Cli, path: &std::path::Path, threads: usize) -> Step<Outcome> {
    let text = input(std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())))?;
    let lines = corpus::read_lines(&text);
    let entries = if threads == 0 {
        corpus::run(&lines, cli.precision)
    } else {
        let pool = input(rayon::ThreadPoolBuilder::new().num_threads(threads).build())?;
        pool.install(|| corpus::run(&lines, cli.precision))
    };
    let report = RunReport::new(cli.precision, entries);
    let s = &report.summary;
    let code = if s.errors > 0 {
        EXIT_CORPUS
    } else if s.mismatched > 0 {
        EXIT_REFUTED
    } else {
        EXIT_OK
    };
    let out = if cli.json {
        json_line(&serde_json::to_value(&report).expect("report serializes"))
    } else {
        let mut out = String::new();
        for e in &report.entries {
            let flag = match (e.matched, &e.error) {
                (_, Some(err)) => format!("  ERROR {err}"),
                (Some(false), _) => format!("  MISMATCH (expected {})", e.expect.as_deref().unwrap_or("?")),
                _ => String::new(),
            };
            let _ = writeln!(
                out,
                "{:<16} {:<15} {:>2}/{:<2} {:<5} {:>9.2} ms{flag}",
                e.id,
                e.status,
                e.lhs_terms,
                e.rhs_terms,
                if e.interesting { "yes" } else { "no" },
                e.elapsed_ms
            );
        }
        let _ = writeln!(
            out,
            "total {}  verified {}  refuted {}  indeterminate {}  errors {}  mismatched {}  (nestrad {}, {} bits)",
            s.total, s.verified, s.refuted, s.indeterminate, s.errors, s.mismatched, report.version, report.precision
        );
        out
    };
    Ok(Outcome::with_code(out, code))
}

fn pow(cli: &Cli, expr: &str, n: i64) -> Step<Outcome> {
    let s = element(expr)?;
    let p = input(s.pow(n))?;
    let text = print_canonical(&p);
    Ok(Outcome::ok(if cli.json {
        json_line(&json!({"expr": expr, "n": n, "result": text, "terms": p.term_count()}))
    } else {
        format!("{text}\n")
    }))
}

fn search_pow(cli: &Cli, expr: &str, min: u32, max: u32, max_terms: usize) -> Step<Outcome> {
    let s = element(expr)?;
    let hits = input(power_scan(&s, min, max, max_terms))?;
    let ns: Vec<u32> = hits.iter().map(|h| h.n).collect();
    // the classical enumeration of this element reports only n = 3 and n = 8
    let note = (s == parse_element(RAMANUJAN_RHS).expect("constant parses") && min <= 8 && max >= 8 && max_terms == 2)
        .then(|| {
            let extra: Vec<String> = ns.iter().filter(|n| ![3, 8].contains(*n)).map(u32::to_string).collect();
            (!extra.is_empty()).then(|| {
                format!(
                    "canonical monomial counting also admits n = {} beyond the classical n = 3 and n = 8",
                    extra.join(", ")
                )
            })
        })
        .flatten();
    let out = if cli.json {
        let rows: Vec<Value> = hits
            .iter()
            .map(|h| json!({"n": h.n, "terms": h.term_count, "radicand": print_canonical(&h.radicand)}))
            .collect();
        json_line(&json!({"expr": expr, "n_min": min, "n_max": max, "max_terms": max_terms, "hits": rows, "note": note}))
    } else {
        let mut out = String::new();
        for h in &hits {
            let _ = writeln!(out, "n={:<3} terms={}  root({}, {})", h.n, h.term_count, h.n, print_canonical(&h.radicand));
        }
        if hits.is_empty() {
            out.push_str("no hits\n");
        }
        if let Some(note) = &note {
            let _ = writeln!(out, "note: {note}");
        }
        out
    };
    Ok(Outcome::ok(out))
}

fn single_term(expr: &str) -> Step<(nestrad::Rational, nestrad::RadicalMonomial)> {
    let e = element(expr)?;
    match e.single_term() {
        Some((c, m)) => Ok((c.clone(), m.clone())),
        None => Err(Outcome::input_error(format!("{expr:?} is not a single term"))),
    }
}

fn record_json(rec: &IdentityRecord) -> Value {
    let c = rec.term_counts();
    json!({
        "lhs": side_text(rec.lhs()),
        "rhs": side_text(rec.rhs()),
        "status": rec.status().as_str(),
        "lhs_terms": c.lhs_terms,
        "rhs_terms": c.rhs_terms,
        "interesting": rec.status().is_verified() && c.interesting,
    })
}

fn record_text(rec: &IdentityRecord) -> String {
    let c = rec.term_counts();
    format!(
        "{} = {}  [{} {}/{}{}]",
        side_text(rec.lhs()),
        side_text(rec.rhs()),
        rec.status(),
        c.lhs_terms,
        c.rhs_terms,
        if rec.status().is_verified() && c.interesting { " interesting" } else { "" }
    )
}

fn search_coeff(cli: &Cli, args: &CoeffArgs) -> Step<Outcome> {
    let mut terms = Vec::new();
    let mut names = Vec::new();
    let mut free = Vec::new();
    let mut fixed = BTreeMap::new();
    for (i, t) in args.terms.iter().enumerate() {
        let (name, expr) = split_slot(t);
        terms.push(single_term(expr)?);
        match name {
            Some(n) => {
                free.push(i);
                names.push(n.to_owned());
            }
            None => {
                fixed.insert(i, int(1));
            }
        }
    }
    let vanish = args.vanish.iter().map(|v| single_term(v).map(|(_, m)| m)).collect::<Step<Vec<_>>>()?;
    let template = input(CoefficientTemplate::new(terms, fixed, free, args.power, vanish))?;
    let domain = parse_domain(&args.domain).map_err(Outcome::input_error)?;
    let hits = input(coeff_scan(&template, &domain))?;
    let out = if cli.json {
        let rows: Vec<Value> = hits
            .iter()
            .map(|h| {
                let assignment: serde_json::Map<String, Value> =
                    names.iter().zip(&h.assignment).map(|(n, v)| (n.clone(), json!(v.to_string()))).collect();
                let mut v = record_json(&h.record);
                v["assignment"] = Value::Object(assignment);
                v
            })
            .collect();
        json_line(&json!({"power": args.power, "domain": args.domain, "hits": rows}))
    } else {
        let mut out = String::new();
        for h in &hits {
            let a: Vec<String> = names.iter().zip(&h.assignment).map(|(n, v)| format!("{n}={v}")).collect();
            let _ = writeln!(out, "{}  {}", a.join(" "), record_text(&h.record));
        }
        let _ = writeln!(out, "{} hits", hits.len());
        out
    };
    Ok(Outcome::ok(out))
}

fn search_quotient(cli: &Cli, n: u32, m: u32, b_max: u64, c_max: u64, fold_signs: bool) -> Step<Outcome> {
    let options = QuotientScanOptions { fold_signs };
    let scan = input(quotient_scan(n, m, b_max, c_max, options))?;
    let mut rows = Vec::new();
    let mut out = String::new();
    for f in &scan.forms {
        let rec = input(f.record(fold_signs))?;
        if cli.json {
            let mut v = record_json(&rec);
            v["x"] = json!(f.x.to_string());
            v["y"] = json!(f.y.to_string());
            v["z"] = json!(f.z.to_string());
            v["w"] = json!(f.w.to_string());
            v["b"] = json!(f.b);
            rows.push(v);
        } else {
            let _ = writeln!(out, "x={} y={} z={} w={} b={}  {}", f.x, f.y, f.z, f.w, f.b, record_text(&rec));
        }
    }
    let out = if cli.json {
        json_line(&json!({
            "n": n, "m": m, "b_max": b_max, "c_max": c_max, "fold_signs": fold_signs,
            "forms": rows, "degenerate": scan.degenerate,
        }))
    } else {
        let _ = writeln!(out, "{} forms, {} degenerate candidates skipped", scan.forms.len(), scan.degenerate);
        out
    };
    Ok(Outcome::ok(out))
}

fn dioph(cli: &Cli, b_max: u64, c_max: u64, fourth_power_free: bool) -> Outcome {
    let sols = dioph_scan(b_max, c_max, fourth_power_free);
    Outcome::ok(if cli.json {
        json_line(&json!({
            "b_max": b_max, "c_max": c_max, "fourth_power_free": fourth_power_free,
            "solutions": sols.iter().map(|&(b, z, w)| json!({"b": b, "z": z, "w": w})).collect::<Vec<_>>(),
        }))
    } else {
        let mut out = String::new();
        for (b, z, w) in &sols {
            let _ = writeln!(out, "b={b} z={z} w={w}");
        }
        let _ = writeln!(out, "{} solutions", sols.len());
        out
    })
}

fn geom(cli: &Cli, family: Family, m: u32) -> Step<Outcome> {
    let rec = match family {
        Family::Asc => input(geom_ascending(m))?,
        Family::Desc => input(geom_descending(m))?,
        Family::Limit => geom_limit(),
    };
    let code = if rec.status().is_verified() { EXIT_OK } else { EXIT_REFUTED };
    let out = if cli.json {
        let mut v = record_json(&rec);
        v["id"] = json!(rec.id());
        json_line(&v)
    } else {
        format!("{}: {}\n", rec.id(), record_text(&rec))
    };
    Ok(Outcome::with_code(out, code))
}

fn denest(cli: &Cli, args: &DenestArgs) -> Step<Outcome> {
    let r = element(&args.expr)?;
    let domain = parse_domain(&args.domain).map_err(Outcome::input_error)?;
    let mut query = DenestQuery::new(r, args.n, args.support, domain)
        .with_prefilter(!args.no_prefilter)
        .with_ceiling(args.ceiling);
    for p in &args.primes {
        let (p, d) = parse_prime(p).map_err(Outcome::input_error)?;
        query = query.extend(p, d);
    }
    let found = input(denest_scan(&query))?;
    let texts: Vec<String> = found.iter().map(print_canonical).collect();
    Ok(Outcome::ok(if cli.json {
        json_line(&json!({"radicand": args.expr, "n": args.n, "support": args.support, "results": texts}))
    } else {
        let mut out = String::new();
        for t in &texts {
            let _ = writeln!(out, "{t}");
        }
        let _ = writeln!(out, "{} results", texts.len());
        out
    }))
}

fn eval(cli: &Cli, expr: &str) -> Step<Outcome> {
    let side = input(parse_lower(expr))?;
    let iv = input(eval_side(&side, cli.precision))?;
    let digits = (cli.precision as f64 * std::f64::consts::LOG10_2) as u32;
    let value = iv.to_decimal(digits);
    let radius = format!("{:e}", iv.radius_f64());
    Ok(Outcome::ok(if cli.json {
        json_line(&json!({"expr": expr, "precision": cli.precision, "value": value, "radius": radius}))
    } else {
        format!("{value} ± {radius}\n")
    }))
}

fn latex(cli: &Cli, expr: &str) -> Step<Outcome> {
    let side = input(parse_lower(expr))?;
    let tex = side_latex(&side);
    Ok(Outcome::ok(if cli.json {
        json_line(&json!({"expr": expr, "latex": tex}))
    } else {
        format!("{tex}\n")
    }))
}
