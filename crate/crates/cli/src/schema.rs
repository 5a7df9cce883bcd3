//! Serialized forms. Field order is output order.

use serde::{Deserialize, Serialize};

use kzrat_core::linalg::{vec3_is_zero, Vec3};
use kzrat_core::residue::{RationalSolution, ResidueSet};
use kzrat_core::scalar::{parse_rational, ParamScalar};
use kzrat_core::series::zero3;

use crate::config::Mode;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    pub z1: String,
    pub z2: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDocument {
    pub mode: String,
    pub parameters: Parameters,
    pub solutions: Vec<SolutionDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    pub name: String,
    pub polynomial_part: Vec<PolyTerm>,
    pub poles: Vec<PoleDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTerm {
    pub power: u32,
    pub vector: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleDoc {
    pub location: String,
    pub terms: Vec<PoleTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleTerm {
    pub order: u32,
    pub vector: [String; 3],
}

fn text3(v: &Vec3<ParamScalar>) -> [String; 3] {
    [v[0].render(), v[1].render(), v[2].render()]
}

impl SolutionDoc {
    /// Zero polynomial powers and zero pole terms are omitted.
    pub fn from_solution(name: &str, w: &RationalSolution, mode: &Mode) -> Self {
        let polynomial_part = w
            .poly_part
            .iter()
            .enumerate()
            .filter(|(_, v)| !vec3_is_zero(v))
            .map(|(i, v)| PolyTerm {
                power: 2 - i as u32,
                vector: text3(v),
            })
            .collect();
        let (l1, l2) = mode.parameters();
        let r = &w.residues;
        let pole = |location: String, order2: &Vec3<ParamScalar>, order1: &Vec3<ParamScalar>| PoleDoc {
            location,
            terms: [(1, order1), (2, order2)]
                .into_iter()
                .filter(|(_, v)| !vec3_is_zero(v))
                .map(|(order, v)| PoleTerm { order, vector: text3(v) })
                .collect(),
        };
        SolutionDoc {
            name: name.to_string(),
            polynomial_part,
            poles: vec![pole(l1, &r.r1, &r.r2), pole(l2, &r.r3, &r.r4)],
        }
    }

    pub fn to_solution(&self, mode: &Mode) -> CliResult<RationalSolution> {
        let sys = mode.system()?;
        let mut w = RationalSolution::zero((sys.z1().clone(), sys.z2().clone()));
        let mut seen_powers = Vec::new();
        for term in &self.polynomial_part {
            if term.power > 2 || seen_powers.contains(&term.power) {
                return Err(malformed(&self.name, format!("bad or repeated power {}", term.power)));
            }
            seen_powers.push(term.power);
            w.poly_part[2 - term.power as usize] = parse3(&self.name, &term.vector)?;
        }
        let mut slots: [Option<Vec3<ParamScalar>>; 4] = Default::default();
        for pole in &self.poles {
            let which = pole_index(&pole.location, mode).ok_or_else(|| {
                malformed(&self.name, format!("pole location `{}` is not a pole of the system", pole.location))
            })?;
            for term in &pole.terms {
                let slot = match term.order {
                    2 => 2 * which,
                    1 => 2 * which + 1,
                    o => return Err(malformed(&self.name, format!("pole order {o} is not 1 or 2"))),
                };
                if slots[slot].is_some() {
                    return Err(malformed(&self.name, "repeated pole term".into()));
                }
                slots[slot] = Some(parse3(&self.name, &term.vector)?);
            }
        }
        w.residues = ResidueSet::from_array(slots.map(|s| s.unwrap_or_else(zero3)));
        Ok(w)
    }
}

impl BasisDocument {
    pub fn mode(&self) -> CliResult<Mode> {
        let bad = |m: String| CliError::Usage(format!("malformed document: {m}"));
        match self.mode.as_str() {
            "symbolic" => {
                if self.parameters.z1 != "z1" || self.parameters.z2 != "z2" {
                    return Err(bad("symbolic parameters must be z1, z2".into()));
                }
                Ok(Mode::Symbolic)
            }
            "numeric" => {
                let p = |t: &str| parse_rational(t).map_err(|e| bad(format!("parameter `{t}`: {e}")));
                let (z1, z2) = (p(&self.parameters.z1)?, p(&self.parameters.z2)?);
                if z1 == z2 {
                    return Err(kzrat_core::KzError::DegenerateConfiguration("z1 = z2 in document".into()).into());
                }
                Ok(Mode::Numeric { z1, z2 })
            }
            other => Err(bad(format!("unknown mode `{other}`"))),
        }
    }
}

fn pole_index(location: &str, mode: &Mode) -> Option<usize> {
    match (location, mode) {
        ("z1", _) => Some(0),
        ("z2", _) => Some(1),
        (text, Mode::Numeric { z1, z2 }) => {
            let r = parse_rational(text).ok()?;
            if &r == z1 {
                Some(0)
            } else if &r == z2 {
                Some(1)
            } else {
                None
            }
        }
        _ => None,
    }
}

fn parse3(name: &str, v: &[String; 3]) -> CliResult<Vec3<ParamScalar>> {
    let p = |s: &String| ParamScalar::parse(s).map_err(|e| malformed(name, format!("`{s}`: {e}")));
    Ok([p(&v[0])?, p(&v[1])?, p(&v[2])?])
}

fn malformed(name: &str, message: String) -> CliError {
    CliError::Usage(format!("malformed solution {name}: {message}"))
}

#[derive(Debug, Serialize)]
pub struct SeriesDocument {
    pub mode: String,
    pub parameters: Parameters,
    pub chains: Vec<ChainDoc>,
}

#[derive(Debug, Serialize)]
pub struct ChainDoc {
    pub name: String,
    pub seed_order: i64,
    pub k_max: i64,
    pub rows: Vec<RowDoc>,
    pub resonances: Vec<ResonanceDoc>,
}

#[derive(Debug, Serialize)]
pub struct RowDoc {
    pub k: i64,
    pub vector: [String; 3],
}

#[derive(Debug, Serialize)]
pub struct ResonanceDoc {
    pub level: i64,
    pub kernel: [String; 3],
    pub free_parameter: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument {
    pub verified: bool,
    pub solutions: Vec<ResidualDoc>,
}

#[derive(Debug, Serialize)]
pub struct ResidualDoc {
    pub name: String,
    pub residual_zero: bool,
    pub residual: [String; 3],
}

#[derive(Debug, Serialize)]
pub struct IndependenceDocument {
    pub independent: bool,
    pub determinant: String,
}

#[derive(Debug, Serialize)]
pub struct AuditDocument {
    pub items: Vec<AuditItemDoc>,
}

#[derive(Debug, Serialize)]
pub struct AuditItemDoc {
    pub id: String,
    pub label: String,
    pub verdict: String,
    pub factor: Option<String>,
    pub computed: Vec<String>,
    pub printed: Vec<String>,
    pub note: Option<String>,
}

pub(crate) fn vector_text(v: &Vec3<ParamScalar>) -> [String; 3] {
    text3(v)
}
