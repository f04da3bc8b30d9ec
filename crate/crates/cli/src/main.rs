//! `triptych`: construct, verify and enumerate Belyi maps together with their
//! generating systems and dessins.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use triptych::gensys::parse_triple;
use triptych::rational::{self, Rational};
use triptych::{
    BelyiMap, Catalog, CombinatorialType, Error, Family, Poly, RatFunc, TriptychRecord,
};

#[derive(Parser)]
#[command(name = "triptych", version, about = "Belyi maps, generating systems and dessins d'enfants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a map from one of the closed-form families.
    Construct {
        family: FamilyArg,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ConstructFormat,
    },
    /// Compute the ramification profile of a map read from a JSON file.
    Verify {
        path: PathBuf,
        /// Expected exponents `e0,e1,eInf` over 0, 1 and ∞.
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// Canonical dessin of a single-cycle type `e0,e1,eInf`.
    Dessin {
        #[arg(value_name = "E0,E1,EINF")]
        spec: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: DessinFormat,
    },
    /// Write the catalog of all single-cycle types up to a degree as JSON Lines.
    Enumerate {
        #[arg(long)]
        dmax: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dedup: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Power,
    Chebyshev,
    Poly,
    Symmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructFormat {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum DessinFormat {
    Dot,
    Json,
}

/// A failure together with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParameterOutOfRange(_) | Error::InvalidType(_) | Error::Parse(_) => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { family, d, k, format } => construct(family, d, k, format),
        Command::Verify { path, ty } => verify(&path, ty.as_deref()),
        Command::Dessin { spec, format } => dessin(&spec, format),
        Command::Enumerate { dmax, out, dedup } => enumerate(dmax, &out, dedup),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Failure { code: 3, message: format!("serialization failed: {e}") })
}

fn construct(
    family: FamilyArg,
    d: usize,
    k: Option<usize>,
    format: ConstructFormat,
) -> Result<u8, Failure> {
    let need_k = || k.ok_or_else(|| Failure::usage("this family needs --k"));
    let map = match family {
        FamilyArg::Power => BelyiMap::power(d)?,
        FamilyArg::Chebyshev => BelyiMap::chebyshev(d)?,
        FamilyArg::Poly => BelyiMap::single_cycle_polynomial(d, need_k()?)?,
        FamilyArg::Symmetric => BelyiMap::symmetric_single_cycle(d, need_k()?)?,
    };
    let record = TriptychRecord::for_map(map)?;
    let text = match format {
        ConstructFormat::Json => to_json(&record)? + "\n",
        ConstructFormat::Dot => record.dessin.to_dot(),
        ConstructFormat::Text => record_text(&record),
    };
    print!("{text}");
    Ok(0)
}

fn record_text(rec: &TriptychRecord) -> String {
    let mut out = String::new();
    if let Some(map) = &rec.map {
        let _ = writeln!(out, "family: {}", map.family);
        let _ = writeln!(out, "d = {}", map.d);
        if let Some(k) = map.k {
            let _ = writeln!(out, "k = {k}");
        }
        if let Some(norm) = &map.normalization {
            let _ = writeln!(out, "normalization: {norm}");
        }
        let _ = writeln!(out, "f = {}", map.f);
        if let Some(display) = factored_display(map) {
            let _ = writeln!(out, "  = {display}");
        }
        if let Some(c) = &map.c {
            let _ = writeln!(out, "c = {}", rational::to_string(c));
        }
        if let Some(a) = &map.a {
            let parts: Vec<String> = a.iter().map(rational::to_string).collect();
            let _ = writeln!(out, "a = ({})", parts.join(", "));
        }
    }
    if let Some(ct) = &rec.ct {
        let _ = writeln!(out, "type: {ct}");
    }
    let gs = &rec.gensys;
    let _ = writeln!(out, "sigma0   = {}", gs.sigma0());
    let _ = writeln!(out, "sigma1   = {}", gs.sigma1());
    let _ = writeln!(out, "sigmaInf = {}", gs.sigma_inf());
    let inv = &rec.invariants;
    if let Some(p) = &inv.profile {
        let _ = writeln!(out, "profile: {p}");
    }
    if let Some(b) = inv.is_belyi {
        let _ = writeln!(out, "isBelyi: {b}");
    }
    let _ = writeln!(
        out,
        "dessin: {} black, {} white, {} edges, genus {}, diameter {}",
        rec.dessin.black().len(),
        rec.dessin.white().len(),
        rec.dessin.edge_count(),
        inv.genus,
        inv.diameter
    );
    if let Some(s) = &inv.shape {
        let _ = writeln!(
            out,
            "shape: {} white leaves, {} black leaves, {} parallel edges",
            s.white_leaves, s.black_leaves, s.parallel_edges
        );
    }
    out
}

/// The closed form with the power of `x` pulled out and, for the symmetric
/// family, integer coefficients: `x^8 (42x^2 - 120x + 90) / (90x^2 - 120x + 42)`.
fn factored_display(map: &BelyiMap) -> Option<String> {
    let scale: Rational = match map.family {
        Family::SingleCyclePoly => rational::int(1),
        Family::SymmetricSingleCycle => {
            let k = map.k?;
            let ak = map.a.as_ref()?.last()?.clone();
            if k % 2 == 0 { ak } else { -ak }
        }
        _ => return None,
    };
    let num = map.f.num().scale(&scale);
    let den = map.f.den().scale(&scale);
    let v = num.x_valuation();
    let inner = num.div_exact(&Poly::x_pow(v)).ok()?;
    let mut text = format!("x^{v} ({})", inner.to_text("x"));
    if map.family == Family::SymmetricSingleCycle {
        let _ = write!(text, " / ({})", den.to_text("x"));
    }
    Some(text)
}

fn verify(path: &PathBuf, ty: Option<&str>) -> Result<u8, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    // check syntax first so that errors carry a position
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| {
        Failure::usage(format!(
            "{}: malformed JSON at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    // a triptych record, a map record, or a bare `{"num": …, "den": …}`
    let bad = |e: serde_json::Error| Failure::usage(format!("{}: {e}", path.display()));
    let map = if value.get("gensys").is_some() {
        serde_json::from_value::<TriptychRecord>(value)
            .map_err(bad)?
            .map
            .ok_or_else(|| Failure::usage(format!("{}: record carries no map", path.display())))?
    } else if value.get("family").is_some() {
        serde_json::from_value::<BelyiMap>(value).map_err(bad)?
    } else {
        BelyiMap::custom(serde_json::from_value::<RatFunc>(value).map_err(bad)?)
    };
    let expected = ty.map(parse_triple).transpose()?;

    let profile = map.profile()?;
    println!("f = {}", map.f);
    println!("degree: {}", profile.d);
    println!("profile: {profile}");
    println!(
        "total ramification: {} (Belyi needs {})",
        profile.total_ramification,
        2 * profile.d - 2
    );
    println!("isBelyi: {}", profile.is_belyi);

    let verdict = match (expected, &map.claimed_type) {
        (Some(e), _) => Some(profile.check_exponents(e)),
        (None, Some(ct)) => Some(profile.check_type(ct)),
        (None, None) if !profile.is_belyi => Some(profile.check_exponents([0; 3])),
        (None, None) => None,
    };
    match verdict {
        Some(v) if v.pass => {
            println!("PASS");
            Ok(0)
        }
        Some(v) => {
            println!("FAIL: {}", v.diagnostic.unwrap_or_default());
            Ok(1)
        }
        None => {
            println!("PASS");
            Ok(0)
        }
    }
}

fn dessin(spec: &str, format: DessinFormat) -> Result<u8, Failure> {
    let ct = CombinatorialType::parse_exponents(spec)?;
    let record = TriptychRecord::for_type(&ct)?;
    let text = match format {
        DessinFormat::Dot => record.dessin.to_dot(),
        DessinFormat::Json => to_json(&record.dessin)? + "\n",
    };
    print!("{text}");
    Ok(0)
}

fn enumerate(dmax: usize, out: &PathBuf, dedup: bool) -> Result<u8, Failure> {
    let catalog = Catalog::enumerate(dmax, dedup)?;
    let file = fs::File::create(out)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", out.display())))?;
    let mut writer = BufWriter::new(file);
    catalog.write_jsonl(&mut writer)?;
    writer.flush()?;
    let counts: Vec<String> = catalog
        .per_degree()
        .iter()
        .map(|(d, n)| format!("d={d}:{n}"))
        .collect();
    let mut summary = format!("{} records; {}", catalog.records.len(), counts.join(" "));
    if dedup {
        let _ = write!(summary, "; collapsed {}", catalog.collapsed);
    }
    println!("{summary}");
    Ok(0)
}
