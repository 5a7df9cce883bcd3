//! Tabulated reference formulas, transcribed into the
//! scalar grammar. Typesetting damage is repaired minimally; each repair is
//! mentioned in the corresponding audit note.

pub(crate) struct Printed {
    pub id: &'static str,
    pub label: &'static str,
    pub entries: &'static [&'static str],
}

const fn p(id: &'static str, label: &'static str, entries: &'static [&'static str]) -> Printed {
    Printed { id, label, entries }
}

pub(crate) const P1: Printed = p("Eq(0.3)", "P1", &["0", "1", "0", "1", "0", "0", "0", "0", "1"]);
pub(crate) const P2: Printed = p("Eq(0.4)", "P2", &["0", "0", "1", "0", "1", "0", "1", "0", "0"]);
pub(crate) const EIGENVALUES: Printed = p("Eq(1.5)", "eigenvalues of T", &["2", "1", "-1"]);
pub(crate) const EIGENVECTORS: Printed = p(
    "Eq(1.6)",
    "eigenvectors l1, l2, l3",
    &["1", "1", "1", "0", "1", "-1", "2", "-1", "-1"],
);
pub(crate) const EIGENVALUES_2T: Printed = p("Eq(1.7)", "eigenvalues of 2T", &["4", "2", "-2"]);

pub(crate) const G_M2: Printed = p("Eq(1.9)", "G_-2", &["2", "-1", "-1"]);
pub(crate) const G_M1: Printed = p("Eq(1.11)", "G_-1", &["-2*(z1 + z2)", "2*z2", "2*z1"]);
pub(crate) const G_0: Printed = p(
    "Eq(1.13)",
    "G_0",
    &["-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"],
);
pub(crate) const G_1: Printed = p("Eq(1.15)", "G_1", &["0", "2*(z1 - z2)^3", "-2*(z1 - z2)^3"]);
pub(crate) const RHS_2: Printed = p(
    "Eq(1.17)",
    "W1 right-hand side at level 2",
    &["4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4"],
);
pub(crate) const G_2: Printed = p(
    "Eq(1.19)",
    "G_2",
    &["(z1 - z2)^4", "-(1/2)*(z1 - z2)^4", "-(1/2)*(z1 - z2)^4"],
);
pub(crate) const G_3: Printed = p(
    "Eq(1.21)",
    "G_3",
    &[
        "(3/5)*(z1 - z2)^4*(z1 + z2)",
        "(1/5)*(z1 - z2)^3*(6*z1^2 - 25*z1*z2 + 9*z2^2)",
        "-(1/5)*(z1 - z2)^3*(9*z1^2 - 25*z1*z2 + 6*z2^2)",
    ],
);
pub(crate) const RHS_4: Printed = p(
    "Eq(1.23)",
    "W1 right-hand side at level 4",
    &[
        "(9/5)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
        "(1/5)*(z1 - z2)^3*(6*z1^3 - 8*z1^2*z2 - 71*z1*z2^2 + 33*z2^3)",
        "-(1/5)*(z1 - z2)^3*(33*z1^3 - 71*z1^2*z2 - 8*z1*z2^2 + 6*z2^3)",
    ],
);
pub(crate) const G_4: Printed = p(
    "Eq(1.25)",
    "G_4",
    &[
        "(3/10)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
        "(1/10)*(z1 - z2)^3*(15*z1^3 - 29*z1^2*z2 - 50*z1*z2^2 + 24*z2^3)",
        "-(1/10)*(z1 - z2)^3*(24*z1^3 - 50*z1^2*z2 - 29*z1*z2^2 + 15*z2^3)",
    ],
);

pub(crate) const L: [Printed; 4] = [
    p(
        "Eq(1.36)",
        "L1",
        &[
            "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
            "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
            "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^3",
        ],
    ),
    p(
        "Eq(1.37)",
        "L2",
        &["0", "(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2", "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2"],
    ),
    p(
        "Eq(1.38)",
        "L3",
        &[
            "(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3",
            "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3",
            "(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3",
        ],
    ),
    p(
        "Eq(1.39)",
        "L4",
        &["0", "(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3", "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3"],
    ),
];

pub(crate) const SMALL_G_2: Printed = p("Eq(1.42)", "g_2", &["0", "1", "-1"]);
/// Right-hand side `T_0 g_2` as written, without the recurrence factor.
pub(crate) const RHS_W2_3: Printed = p("Eq(1.43)", "W2 right-hand side at level 3", &["z1 - z2", "z2", "-z1"]);
pub(crate) const SMALL_G_3: Printed = p(
    "Eq(1.44)",
    "g_3",
    &["(1/5)*(z1 - z2)", "(1/5)*(2*z1 + 3*z2)", "(1/5)*(-3*z1 - 2*z2)"],
);
pub(crate) const RHS_W2_4: Printed = p(
    "Eq(1.46)",
    "W2 right-hand side at level 4",
    &[
        "(7/5)*(z1 - z2)*(z1 + z2)",
        "(1/5)*(z1^2 + z1*z2 + 8*z2^2)",
        "(1/5)*(-8*z1^2 - z1*z2 - z2^2)",
    ],
);

pub(crate) const M: [Printed; 4] = [
    p(
        "Eq(1.51)",
        "M1",
        &[
            "(5*z1 + 3*z2)/(10*(z1 - z2))",
            "(z1*z2 + 9*(-2*z1^2 + 2*z1*z2 + z2^2))/(30*(z1 - z2)^2)",
            "-(z1*z2 - 3*z1*(z1 - 4*z2))/(30*(z1 - z2)^2)",
        ],
    ),
    p(
        "Eq(1.52)",
        "M2",
        &[
            "-(4*(z1 + z2))/(5*(z1 - z2)^2)",
            "-(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
            "(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)",
        ],
    ),
    p(
        "Eq(1.53)",
        "M3",
        &[
            "-(3*z1 + 5*z2)/(10*(z1 - z2))",
            "(z1*z2 + 3*(4*z1 - z2)*z2)/(30*(z1 - z2)^2)",
            "-(z1*z2 + 9*(z1^2 + 2*z1*z2 - 2*z2^2))/(30*(z1 - z2)^2)",
        ],
    ),
    p(
        "Eq(1.54)",
        "M4",
        &[
            "(4*(z1 + z2))/(5*(z1 - z2)^2)",
            "(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
            "-(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)",
        ],
    ),
];

pub(crate) const N13: Printed = p(
    "Eq(1.58)",
    "N1 = N3",
    &["1/(z1 - z2)^2", "1/(z1 - z2)^2", "1/(z1 - z2)^2"],
);
/// Printed as a bare scalar.
pub(crate) const N2: Printed = p("Eq(1.59)", "N2 = -N4", &["2/(-z1 + z2)^3"]);

/// Row-major 4x4 closed-form inverse of the moment matrix.
pub(crate) const MOMENT_INVERSE: Printed = p(
    "Eq(1.35)",
    "inverse of the moment matrix",
    &[
        "-(z1*z2^2)/(z1 - z2)^2",
        "(z2*(2*z1 + z2))/(z1 - z2)^2",
        "-(z1 + 2*z2)/(z1 - z2)^2",
        "1/(z1 - z2)^2",
        "((3*z1 - z2)*z2^2)/(z1 - z2)^3",
        "-(6*z1*z2)/(z1 - z2)^3",
        "(3*z1 + z2)/(z1 - z2)^3",
        "2/(-z1 + z2)^3",
        "-(z1^2*z2)/(z1 - z2)^2",
        "(z1*(z1 + 2*z2))/(z1 - z2)^2",
        "-(2*z1 + z2)/(z1 - z2)^2",
        "1/(z1 - z2)^2",
        "(z1^2*(z1 - 3*z2))/(z1 - z2)^3",
        "(6*z1*z2)/(z1 - z2)^3",
        "-(3*z1 + z2)/(z1 - z2)^3",
        "2/(z1 - z2)^3",
    ],
);
