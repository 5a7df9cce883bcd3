//! Text and LaTeX renderings.

use kzrat_core::linalg::Vec3;
use kzrat_core::residue::RationalSolution;
use kzrat_core::scalar::{ParamScalar, Rational};
use kzrat_core::series::CoefficientTable;
use num_traits::{Signed, Zero};

use crate::config::Mode;

/// `W1` -> `W_{1}`.
fn latex_label(label: &str) -> String {
    match label.find(|c: char| c.is_ascii_digit()) {
        Some(i) => format!("{}_{{{}}}", &label[..i], &label[i..]),
        None => label.to_string(),
    }
}

pub fn pmatrix(v: &Vec3<ParamScalar>) -> String {
    format!(
        "\\begin{{pmatrix}} {} \\\\ {} \\\\ {} \\end{{pmatrix}}",
        v[0].render_latex(),
        v[1].render_latex(),
        v[2].render_latex()
    )
}

fn bracket(v: &Vec3<ParamScalar>) -> String {
    format!("[{}, {}, {}]", v[0].render(), v[1].render(), v[2].render())
}

fn is_zero3(v: &Vec3<ParamScalar>) -> bool {
    kzrat_core::linalg::vec3_is_zero(v)
}

/// `z - a` in LaTeX.
fn shifted_latex(location: Option<&Rational>, symbol: &str) -> String {
    match location {
        None => format!("z - {symbol}"),
        Some(a) if a.is_zero() => "z".into(),
        Some(a) => {
            let abs = ParamScalar::from_rational(a.abs()).render_latex();
            if a.is_negative() {
                format!("z + {abs}")
            } else {
                format!("z - {abs}")
            }
        }
    }
}

fn shifted_text(location: Option<&Rational>, symbol: &str) -> String {
    match location {
        None => format!("z - {symbol}"),
        Some(a) if a.is_zero() => "z".into(),
        Some(a) if a.is_negative() => format!("z + {}", kzrat_core::scalar::render_rational(&a.abs())),
        Some(a) => format!("z - {}", kzrat_core::scalar::render_rational(a)),
    }
}

fn wrap(s: String) -> String {
    if s == "z" {
        s
    } else {
        format!("({s})")
    }
}

/// Terms in output order: polynomial part by descending power, then the pole
/// terms at `z1` and `z2`, each simple pole before the double one.
fn terms<'w>(w: &'w RationalSolution) -> Vec<(Term, &'w Vec3<ParamScalar>)> {
    let r = &w.residues;
    let all = [
        (Term::Power(2), &w.poly_part[0]),
        (Term::Power(1), &w.poly_part[1]),
        (Term::Power(0), &w.poly_part[2]),
        (Term::Pole(0, 1), &r.r2),
        (Term::Pole(0, 2), &r.r1),
        (Term::Pole(1, 1), &r.r4),
        (Term::Pole(1, 2), &r.r3),
    ];
    all.into_iter().filter(|(_, v)| !is_zero3(v)).collect()
}

#[derive(Clone, Copy)]
enum Term {
    Power(u32),
    Pole(usize, u32),
}

fn locations(mode: &Mode) -> [Option<&Rational>; 2] {
    match mode {
        Mode::Symbolic => [None, None],
        Mode::Numeric { z1, z2 } => [Some(z1), Some(z2)],
    }
}

pub fn solution_latex(label: &str, w: &RationalSolution, mode: &Mode) -> String {
    let locs = locations(mode);
    let symbols = ["z_{1}", "z_{2}"];
    let mut lines = Vec::new();
    for (term, v) in terms(w) {
        let prefix = match term {
            Term::Power(0) => String::new(),
            Term::Power(1) => "z\\,".into(),
            Term::Power(p) => format!("z^{{{p}}}\\,"),
            Term::Pole(i, 1) => format!("\\frac{{1}}{{{}}}", shifted_latex(locs[i], symbols[i])),
            Term::Pole(i, o) => format!("\\frac{{1}}{{{}^{{{o}}}}}", wrap(shifted_latex(locs[i], symbols[i]))),
        };
        lines.push(format!("{prefix}{}", pmatrix(v)));
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    let mut out = format!("{}(z) &= {}", latex_label(label), lines[0]);
    for line in &lines[1..] {
        out.push_str(&format!(" \\\\\n  &\\quad + {line}"));
    }
    out
}

pub fn solution_text(label: &str, w: &RationalSolution, mode: &Mode) -> String {
    let locs = locations(mode);
    let symbols = ["z1", "z2"];
    let mut out = format!("{label}(z) =");
    let mut first = true;
    for (term, v) in terms(w) {
        let body = match term {
            Term::Power(0) => bracket(v),
            Term::Power(1) => format!("z * {}", bracket(v)),
            Term::Power(p) => format!("z^{p} * {}", bracket(v)),
            Term::Pole(i, 1) => format!("{} / {}", bracket(v), wrap(shifted_text(locs[i], symbols[i]))),
            Term::Pole(i, o) => format!("{} / {}^{o}", bracket(v), wrap(shifted_text(locs[i], symbols[i]))),
        };
        out.push_str(&format!("\n  {}{body}", if first { "" } else { "+ " }));
        first = false;
    }
    if first {
        out.push_str(" 0");
    }
    out
}

pub fn table_text(label: &str, table: &CoefficientTable, from: i64) -> String {
    let mut out = format!("{label} (seed order {})", table.seed_order());
    for (k, g) in table.rows(from) {
        out.push_str(&format!("\n  G[{k}] = {}", bracket(&g)));
    }
    for r in table.resonances() {
        let kernel: Vec<String> = r.kernel.iter().map(kzrat_core::scalar::render_rational).collect();
        out.push_str(&format!(
            "\n  resonance at level {}: kernel [{}], free parameter {}",
            r.level,
            kernel.join(", "),
            r.free_parameter.render()
        ));
    }
    out
}

pub fn table_latex(label: &str, table: &CoefficientTable, from: i64) -> String {
    let mut lines = Vec::new();
    for (k, g) in table.rows(from) {
        lines.push(format!("G^{{({})}}_{{{k}}} &= {}", latex_label(label), pmatrix(&g)));
    }
    lines.join(" \\\\\n")
}

pub fn align(body: &str) -> String {
    format!("\\begin{{align*}}\n{body}\n\\end{{align*}}\n")
}

pub fn verbatim(body: &str) -> String {
    format!("\\begin{{verbatim}}\n{body}\\end{{verbatim}}\n")
}
