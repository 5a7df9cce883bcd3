use kzrat_cli::error::CliError;
use kzrat_core::KzError;

#[test]
fn error_kinds_map_to_exit_codes() {
    let resonance = KzError::UnsolvableResonance {
        level: 2,
        eigenvector: "[0, 1, -1]".into(),
        component: "z1".into(),
    };
    assert_eq!(CliError::from(resonance).exit_code(), 3);
    assert_eq!(CliError::from(KzError::DegenerateConfiguration("z1 = z2".into())).exit_code(), 4);
    assert_eq!(CliError::from(KzError::InvalidSeed("x".into())).exit_code(), 1);
    assert_eq!(CliError::from(KzError::Syntax { position: 0, message: "x".into() }).exit_code(), 1);
    assert_eq!(CliError::Verification("x".into()).exit_code(), 2);
    assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
}
