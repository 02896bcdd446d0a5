use std::fs;
use std::path::Path;

use nspairs::germ::{elk_degree, winding_degree, DegreeResult};
use nspairs::invariants::{
    compose_projection, higher_dim_construct, looijenga_sum, spun, NSInvariantRecord,
};
use nspairs::linking::{classify_in_dimension, generate_unimodular_blocks, LinkingMatrix, SymmetrySign};
use nspairs::{IntMatrix, Integer, PolynomialGerm, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::germfile::GermFile;
use crate::lkm::{format_lkm, parse_lkm};

/// Result of a command in both output formats.
pub struct Output {
    pub text: String,
    pub json: Value,
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_matrix(path: &Path) -> CliResult<LinkingMatrix> {
    parse_lkm(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_record(path: &Path) -> CliResult<NSInvariantRecord> {
    serde_json::from_str(&read(path)?).map_err(|e| {
        CliError::Input(format!("{}: {}", path.display(), CliError::from(e)))
    })
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Classifies a matrix file; with `record` set, also writes the NS-pair
/// record, which fails unless the matrix is unimodular.
pub fn classify(path: &Path, dimension: Option<u32>, record: Option<&Path>) -> CliResult<Output> {
    let l = load_matrix(path)?;
    let n = dimension.unwrap_or_else(|| l.sign().default_dimension());
    let r = classify_in_dimension(&l, n)?;
    if let Some(out) = record {
        let rec = NSInvariantRecord::from_classification(&r)?;
        write(out, &(serde_json::to_string_pretty(&rec).expect("serializable") + "\n"))?;
    }
    let factors: Vec<String> = r.h2_invariant_factors.iter().map(Integer::to_string).collect();
    let mut text = format!("k = {}\nsymmetry sign = {} (n = {n})\ndet A = {}\n", r.k, r.symmetry_sign.value(), r.det_a);
    text.push_str(&match &r.pfaffian_a {
        Some(p) => format!("Pf A = {p}\n"),
        None => "Pf A = undefined\n".into(),
    });
    text.push_str(&match &r.det_r {
        Some(d) => format!("det R = {d}\n"),
        None => "det R = not used (symmetric case)\n".into(),
    });
    text.push_str(&format!(
        "{} invariant factors = [{}]\n{} = {}\nfiber = {}\n{}",
        r.homology_label,
        factors.join(", "),
        r.homology_label,
        r.homology,
        r.fiber,
        r.summary()
    ));
    Ok(Output { text, json: to_json(&r) })
}

/// Machine form of a degree computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub germ: String,
    pub variables: Vec<String>,
    pub gradient: String,
    pub result: DegreeResult,
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub method: String,
    pub radius: String,
    pub degree: i64,
    pub agrees: bool,
}

pub enum GermSource<'a> {
    Text { expression: &'a str, variables: &'a [String] },
    File { path: &'a Path, component: Option<&'a str> },
}

pub fn parse_radius(text: &str) -> CliResult<Rational> {
    let r: Rational = text
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("invalid radius '{text}'; expected a rational such as 1/10")))?;
    if r <= Rational::zero() {
        return Err(CliError::Input(format!("radius {r} must be positive")));
    }
    Ok(r)
}

pub fn degree(source: GermSource<'_>, oracle_radius: Option<&Rational>) -> CliResult<Output> {
    let germ: PolynomialGerm = match source {
        GermSource::Text { expression, variables } => PolynomialGerm::parse(expression, variables)?,
        GermSource::File { path, component } => {
            let file = GermFile::parse(&read(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            file.germ(component)?
        }
    };
    let result = elk_degree(&germ)?;
    let oracle = match oracle_radius {
        None => None,
        Some(r) => {
            let w = winding_degree(&germ.gradient(), r)?;
            Some(OracleReport { method: "winding".into(), radius: r.to_string(), degree: w, agrees: w == result.degree })
        }
    };
    let report = DegreeReport {
        germ: germ.to_string(),
        variables: germ.variables().to_vec(),
        gradient: germ.gradient().to_string(),
        result,
        oracle,
    };
    let mut text = format!(
        "germ = {}\ngradient = {}\ndegree = {}\nlocal algebra dim = {}\nmethod = {}\ncertificate: {}",
        report.germ,
        report.gradient,
        report.result.degree,
        report.result.local_algebra_dim,
        report.result.method,
        report.result.certificate
    );
    if let Some(o) = &report.oracle {
        text.push_str(&format!(
            "\noracle = winding number {} at radius {} ({})",
            o.degree,
            o.radius,
            if o.agrees { "agrees" } else { "DISAGREES" }
        ));
    }
    let json = to_json(&report);
    if report.oracle.as_ref().is_some_and(|o| !o.agrees) {
        return Err(CliError::Math(format!("{text}\nwinding oracle disagrees with the ELK degree")));
    }
    Ok(Output { text, json })
}

/// Reads a record, or classifies a `.lkm` file into an NS-pair record.
pub fn load_record_or_matrix(path: &Path) -> CliResult<NSInvariantRecord> {
    if path.extension().is_some_and(|e| e == "lkm") {
        let l = load_matrix(path)?;
        let report = classify_in_dimension(&l, l.sign().default_dimension())?;
        Ok(NSInvariantRecord::from_classification(&report)?)
    } else {
        load_record(path)
    }
}

pub enum Construction<'a> {
    Sum(&'a Path),
    Spin(&'a Path),
    Project(&'a Path),
    Higher { n: u32, matrix: HigherMatrix<'a> },
}

pub enum HigherMatrix<'a> {
    Blocks(usize),
    File(&'a Path),
}

fn unimodular_blocks(sign: SymmetrySign, half: usize) -> LinkingMatrix {
    match sign {
        SymmetrySign::Skew => generate_unimodular_blocks(half),
        SymmetrySign::Symmetric => {
            let block = IntMatrix::from_fn(2, 2, |i, j| if i == j { Integer::zero() } else { Integer::one() });
            let m = (0..half).fold(IntMatrix::zeros(0, 0), |acc, _| acc.direct_sum(&block));
            LinkingMatrix::new(sign, m).expect("block sums are symmetric")
        }
    }
}

pub fn construct(c: Construction<'_>, out: Option<&Path>) -> CliResult<Output> {
    let rec = match c {
        Construction::Sum(p) => looijenga_sum(&load_record_or_matrix(p)?)?,
        Construction::Spin(p) => spun(&load_record_or_matrix(p)?)?,
        Construction::Project(p) => compose_projection(&load_record(p)?)?,
        Construction::Higher { n, matrix } => {
            let l = match matrix {
                HigherMatrix::Blocks(half) => unimodular_blocks(SymmetrySign::for_dimension(n), half),
                HigherMatrix::File(p) => load_matrix(p)?,
            };
            higher_dim_construct(n, &l)?
        }
    };
    let json_text = serde_json::to_string_pretty(&rec).expect("serializable");
    if let Some(path) = out {
        write(path, &(json_text + "\n"))?;
    }
    let mut text = rec.summary();
    if let Some(path) = out {
        text.push_str(&format!("\nwritten to {}", path.display()));
    }
    Ok(Output { text, json: to_json(&rec) })
}

pub fn generate(blocks: usize, symmetric: bool, out: Option<&Path>) -> CliResult<Output> {
    let sign = if symmetric { SymmetrySign::Symmetric } else { SymmetrySign::Skew };
    let l = unimodular_blocks(sign, blocks);
    let text = format_lkm(&l, Some(&format!("direct sum of {blocks} unimodular 2x2 block(s)")));
    if let Some(path) = out {
        write(path, &text)?;
    }
    Ok(Output { text: text.trim_end().to_string(), json: to_json(&l) })
}
