//! Exact comparison of computed quantities against the printed displays.
//!
//! Every item carries both sides as scalar text. A rescale is accepted as
//! `SCALED` only when the factor is free of `z1`, `z2`.

use std::fmt;

use num_traits::{One, Zero};

use super::printed::{self, Printed};
use super::residual::residual;
use crate::chains::ChainRegistry;
use crate::error::Result;
use crate::linalg::{lift_vec3, Vec3};
use crate::model::{eigensystem, symbolic_system, transposition_matrix, KZSystem};
use crate::pipeline::{construct, BasisSolution};
use crate::residue::{build_moment_matrix, RationalSolution, ResidueSet};
use crate::scalar::ParamScalar;
use crate::series::{zero3, SeriesEngine, DEFAULT_K_MAX};

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Match,
    Scaled(ParamScalar),
    Mismatch,
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Match => write!(f, "MATCH"),
            Verdict::Scaled(c) => write!(f, "SCALED({})", c.render()),
            Verdict::Mismatch => write!(f, "MISMATCH"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditItem {
    /// e.g. `Eq(1.36)`.
    pub id: String,
    pub label: String,
    pub computed: Vec<String>,
    pub printed: Vec<String>,
    pub verdict: Verdict,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct AuditReport {
    pub items: Vec<AuditItem>,
}

impl AuditReport {
    pub fn get(&self, id: &str) -> Option<&AuditItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &AuditItem> {
        self.items.iter().filter(|i| !i.verdict.is_match())
    }
}

/// The three symbolic basis solutions with their chains.
pub struct ComputedBasis {
    pub system: KZSystem,
    pub w1: BasisSolution,
    pub w2: BasisSolution,
    pub w3: BasisSolution,
}

impl ComputedBasis {
    /// Canonical defaults: factor-2 recurrence, zero free parameters.
    pub fn symbolic() -> Result<Self> {
        let system = symbolic_system();
        let registry = ChainRegistry::standard();
        let engine = SeriesEngine::new(&system)?;
        let build = |name: &str| {
            let chain = registry.get(name).expect("standard chain");
            construct(&engine, chain, DEFAULT_K_MAX)
        };
        let (w1, w2, w3) = (build("w1")?, build("w2")?, build("w3")?);
        Ok(ComputedBasis { system, w1, w2, w3 })
    }
}

/// Exact verdict for `computed` against `printed`.
pub fn compare(computed: &[ParamScalar], printed: &[ParamScalar]) -> Verdict {
    if computed.len() != printed.len() {
        return Verdict::Mismatch;
    }
    if computed == printed {
        return Verdict::Match;
    }
    let Some(i) = printed.iter().position(|p| !p.is_zero()) else {
        return Verdict::Mismatch;
    };
    let factor = &computed[i] / &printed[i];
    if factor.is_zero() || !factor.is_constant() || factor.is_one() {
        return Verdict::Mismatch;
    }
    let scaled = computed.iter().zip(printed).all(|(c, p)| c == &(&factor * p));
    if scaled {
        Verdict::Scaled(factor)
    } else {
        Verdict::Mismatch
    }
}

fn parse_all(entries: &[&str]) -> Vec<ParamScalar> {
    entries
        .iter()
        .map(|e| ParamScalar::parse(e).expect("embedded formula parses"))
        .collect()
}

fn printed_vec3(p: &Printed) -> Vec3<ParamScalar> {
    let v = parse_all(p.entries);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn note_for(id: &str) -> Option<&'static str> {
    Some(match id {
        "Eq(1.35)" => {
            "entries (2,3) and (4,3) are printed as +-(3 z1 + z2)/(z1 - z2)^3; \
             inverting the moment matrix gives +-3 (z1 + z2)/(z1 - z2)^3. \
             Residues are solved by elimination, so this does not propagate"
        }
        "Eq(1.39)" => {
            "printed with (z1 - z2)^3; the exact solve and the z1<->z2 mirror of \
             L2 both give (z1 - z2)^2"
        }
        "Eq(1.40)" => "printed W1 assembled from the printed G and L; the L4 exponent breaks the ODE",
        "Eq(1.43)" => {
            "the recurrence factor 2 is dropped: printed T_0 g_2, derivation gives 2 T_0 g_2"
        }
        "Eq(1.44)" => "follows from the dropped factor 2 in the level-3 equation; rescale is exact",
        "Eq(1.46)" => {
            "right-hand side of the level-4 equation; the printed value equals \
             T_0 g_3 + T_1 g_2 with the printed g_3, i.e. the factor 2 is dropped again \
             and the error from g_3 carries through, so no constant rescale exists"
        }
        "Eq(1.51)" | "Eq(1.52)" | "Eq(1.53)" | "Eq(1.54)" => {
            "downstream of the dropped factor 2; the printed values agree with neither \
             the factor-2 chain nor the factor-free chain. Damage repaired before \
             parsing: '+ +' read as '+', the unbalanced parenthesis in M3 closed at \
             the end of the numerator"
        }
        "Eq(1.55)" => "printed W2 assembled from the printed M; residual of the ODE reported",
        "Eq(1.58)" => "printed with Z_2 for z_2",
        "Eq(1.59)" => {
            "printed as a scalar with no vector; the exact solve gives the vector \
             2 l1/(-z1 + z2)^3, since W3 = l1 ((z - z1)(z - z2))^-2"
        }
        "Eq(1.56)" => "W3 assembled from Eq(1.58)-(1.59) with the missing vector read as l1",
        _ => return None,
    })
}

struct Builder {
    items: Vec<AuditItem>,
}

impl Builder {
    fn push(&mut self, id: &str, label: &str, computed: Vec<ParamScalar>, printed: Vec<ParamScalar>, printed_text: Vec<String>) {
        let verdict = compare(&computed, &printed);
        let note = match (&verdict, note_for(id)) {
            (_, Some(n)) => Some(n.to_string()),
            (Verdict::Match, None) => None,
            (_, None) => Some("computed value differs from the printed display".to_string()),
        };
        self.items.push(AuditItem {
            id: id.to_string(),
            label: label.to_string(),
            computed: computed.iter().map(ParamScalar::render).collect(),
            printed: printed_text,
            verdict,
            note,
        });
    }

    fn display(&mut self, p: &Printed, computed: Vec<ParamScalar>) {
        let printed = parse_all(p.entries);
        let text = p.entries.iter().map(|s| s.to_string()).collect();
        self.push(p.id, p.label, computed, printed, text);
    }

    fn residual_claim(&mut self, sys: &KZSystem, id: &str, label: &str, w: &RationalSolution) -> Result<()> {
        let report = residual(sys, w)?;
        self.items.push(AuditItem {
            id: id.to_string(),
            label: label.to_string(),
            computed: report.residual_entries.iter().map(|r| r.render()).collect(),
            printed: vec!["0".into(); 3],
            verdict: if report.is_zero { Verdict::Match } else { Verdict::Mismatch },
            note: note_for(id).map(str::to_string),
        });
        Ok(())
    }
}

fn flat(m: &crate::linalg::Matrix<crate::scalar::Rational>) -> Vec<ParamScalar> {
    (0..m.rows())
        .flat_map(|i| m.row(i).iter().map(|x| ParamScalar::from_rational(x.clone())).collect::<Vec<_>>())
        .collect()
}

fn v(x: &Vec3<ParamScalar>) -> Vec<ParamScalar> {
    x.to_vec()
}

/// One item per embedded printed display, plus ODE residual verdicts for the
/// printed solutions. Never fails on a mismatch.
pub fn audit_printed(computed: &ComputedBasis) -> Result<AuditReport> {
    let sys = &computed.system;
    let engine = SeriesEngine::new(sys)?;
    let mut b = Builder { items: Vec::new() };

    b.display(&printed::P1, flat(&transposition_matrix(1, 2, 3)?));
    b.display(&printed::P2, flat(&transposition_matrix(1, 3, 3)?));
    let eigen = eigensystem(&sys.total_matrix())?;
    let values: Vec<ParamScalar> = eigen.pairs.iter().map(|p| ParamScalar::from_rational(p.value.clone())).collect();
    b.display(&printed::EIGENVALUES, values.clone());
    b.display(
        &printed::EIGENVECTORS,
        eigen.pairs.iter().flat_map(|p| v(&lift_vec3(&p.vector))).collect(),
    );
    let factor = ParamScalar::from_rational(engine.factor().clone());
    b.display(&printed::EIGENVALUES_2T, values.iter().map(|x| x * &factor).collect());

    let t1 = &computed.w1.table;
    b.display(&printed::G_M2, v(&t1.get(-2)));
    b.display(&printed::G_M1, v(&t1.get(-1)));
    b.display(&printed::G_0, v(&t1.get(0)));
    b.display(&printed::G_1, v(&t1.get(1)));
    b.display(&printed::RHS_2, v(&engine.recurrence_rhs(1, t1)?));
    b.display(&printed::G_2, v(&t1.get(2)));
    b.display(&printed::G_3, v(&t1.get(3)));
    b.display(&printed::RHS_4, v(&engine.recurrence_rhs(3, t1)?));
    b.display(&printed::G_4, v(&t1.get(4)));

    let (z1, z2) = (sys.z1(), sys.z2());
    let inverse = build_moment_matrix(z1, z2)?.inverse()?;
    let inv_flat: Vec<ParamScalar> = (0..4).flat_map(|i| inverse.row(i).to_vec()).collect();
    b.display(&printed::MOMENT_INVERSE, inv_flat);

    let l = computed.w1.residues.as_array();
    for (p, c) in printed::L.iter().zip(l) {
        b.display(p, v(c));
    }
    let printed_l = printed::L.each_ref().map(printed_vec3);
    let printed_w1 = RationalSolution {
        poly_part: [
            printed_vec3(&printed::G_M2),
            printed_vec3(&printed::G_M1),
            printed_vec3(&printed::G_0),
        ],
        residues: ResidueSet::from_array(printed_l),
        poles: (z1.clone(), z2.clone()),
    };
    b.residual_claim(sys, "Eq(1.40)", "printed W1 solves the system", &printed_w1)?;

    let t2 = &computed.w2.table;
    b.display(&printed::SMALL_G_2, v(&t2.get(2)));
    b.display(&printed::RHS_W2_3, v(&engine.recurrence_rhs(2, t2)?));
    b.display(&printed::SMALL_G_3, v(&t2.get(3)));
    b.display(&printed::RHS_W2_4, v(&engine.recurrence_rhs(3, t2)?));
    let m = computed.w2.residues.as_array();
    for (p, c) in printed::M.iter().zip(m) {
        b.display(p, v(c));
    }
    let printed_w2 = RationalSolution {
        poly_part: [zero3(), zero3(), zero3()],
        residues: ResidueSet::from_array(printed::M.each_ref().map(printed_vec3)),
        poles: (z1.clone(), z2.clone()),
    };
    b.residual_claim(sys, "Eq(1.55)", "printed W2 solves the system", &printed_w2)?;

    let n = &computed.w3.residues;
    b.display(&printed::N13, v(&n.r1));
    let n3 = printed_vec3(&printed::N13);
    let mirrored = compare(&v(&n.r3), &n3.to_vec());
    if let Some(item) = b.items.last_mut() {
        if !mirrored.is_match() {
            item.verdict = Verdict::Mismatch;
            item.note = Some("N3 differs from the printed N1 = N3".into());
        }
    }
    // the printed N2 is a bare scalar, so the comparison fails on shape
    b.display(&printed::N2, v(&n.r2));
    let n2_scalar = parse_all(printed::N2.entries).remove(0);
    let ell1 = [ParamScalar::one(), ParamScalar::one(), ParamScalar::one()];
    let n2 = ell1.clone().map(|x| &x * &n2_scalar);
    let printed_w3 = RationalSolution {
        poly_part: [zero3(), zero3(), zero3()],
        residues: ResidueSet::from_array([n3.clone(), n2.clone(), n3, n2.map(|x| -x)]),
        poles: (z1.clone(), z2.clone()),
    };
    b.residual_claim(sys, "Eq(1.56)", "printed W3 (vector l1 supplied) solves the system", &printed_w3)?;

    Ok(AuditReport { items: b.items })
}
