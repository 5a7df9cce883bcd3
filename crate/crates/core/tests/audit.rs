use kzrat_core::verifier::audit::{audit_printed, ComputedBasis, Verdict};

fn report() -> kzrat_core::verifier::audit::AuditReport {
    audit_printed(&ComputedBasis::symbolic().unwrap()).unwrap()
}

#[test]
fn audit_verdicts() {
    let r = report();
    for item in &r.items {
        println!("{:10} {:45} {}", item.id, item.label, item.verdict);
    }
    let verdict = |id: &str| r.get(id).unwrap_or_else(|| panic!("{id} missing")).verdict.clone();
    for id in [
        "Eq(0.3)", "Eq(0.4)", "Eq(1.5)", "Eq(1.6)", "Eq(1.7)", "Eq(1.9)", "Eq(1.11)", "Eq(1.13)",
        "Eq(1.15)", "Eq(1.17)", "Eq(1.19)", "Eq(1.21)", "Eq(1.23)", "Eq(1.25)", "Eq(1.36)",
        "Eq(1.37)", "Eq(1.38)", "Eq(1.42)", "Eq(1.58)", "Eq(1.56)",
    ] {
        assert_eq!(verdict(id), Verdict::Match, "{id}");
    }
    assert_eq!(verdict("Eq(1.43)"), Verdict::Scaled(2.into()));
    assert_eq!(verdict("Eq(1.44)"), Verdict::Scaled(2.into()));
    for id in [
        "Eq(1.35)", "Eq(1.39)", "Eq(1.40)", "Eq(1.46)", "Eq(1.51)", "Eq(1.52)", "Eq(1.53)",
        "Eq(1.54)", "Eq(1.55)", "Eq(1.59)",
    ] {
        assert_eq!(verdict(id), Verdict::Mismatch, "{id}");
        assert!(r.get(id).unwrap().note.is_some(), "{id} has no note");
    }
}

#[test]
fn scaled_factor_is_parameter_free() {
    for item in report().items {
        if let Verdict::Scaled(c) = item.verdict {
            assert!(c.is_constant(), "{}", item.id);
        }
    }
}
