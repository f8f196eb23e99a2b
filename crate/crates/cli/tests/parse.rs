use sgp_core::families::AlphaParams;
use sgp_core::groups::GroupSpec;
use sgp_core::verify::Tier;
use sgp_lab::{parse_args, parse_spec, Action, Family, Format, ParseError};

fn position(text: &str) -> usize {
    match parse_spec(text) {
        Err(ParseError::Invalid { position, .. }) => position,
        other => panic!("`{text}` should be rejected, got {other:?}"),
    }
}

#[test]
fn sgp_query() {
    let cmd = parse_spec("sgp sp4:4 wreath-sp2:4").unwrap();
    assert_eq!(cmd.action, Action::Sgp(GroupSpec::Sp4 { q: 4 }, GroupSpec::WreathSp2 { q: 4 }));
    assert_eq!(cmd.options.format, Format::Pretty);
}

#[test]
fn alpha_sum_params() {
    let cmd = parse_spec("alpha-sum 8 4 1 2").unwrap();
    assert_eq!(cmd.action, Action::AlphaSum(AlphaParams::new(8, 4, 1, 2).unwrap()));
}

#[test]
fn suzuki_with_even_degree_is_rejected_at_its_argument() {
    assert_eq!(position("chartab sz:4"), 11);
    assert!(parse_spec("chartab sz:8").is_ok());
}

#[test]
fn positions_point_at_the_offending_token() {
    assert_eq!(position("chartab nope:4"), 8);
    assert_eq!(position("frobnicate 4"), 0);
    assert_eq!(position("sgp sp4:4 sl2:3"), 14);
    assert_eq!(position("sgp sp4:4"), 9);
    assert_eq!(position("alpha-sum 8 4 2 2"), 16);
    assert_eq!(position("alpha-sum 8 9 1 2"), 12);
    assert_eq!(position("alpha-sum 8 x 1 2"), 12);
    assert_eq!(position("scan-maximal 6"), 13);
    assert_eq!(position("families sz 16"), 12);
    assert_eq!(position("chartab sl2:4 --format xml"), 23);
    // positions are offsets into the original text, not the normalised token list
    assert_eq!(position("  chartab   sz:4"), 15);
}

#[test]
fn flags() {
    let cmd = parse_spec("verify-paper --deep --seed 9 --format json").unwrap();
    assert_eq!(cmd.action, Action::VerifyPaper(Tier::Deep));
    assert_eq!((cmd.options.seed, cmd.options.format), (9, Format::Json));
    assert_eq!(parse_spec("verify-paper --deep --full").unwrap().action, Action::VerifyPaper(Tier::Full));
    assert_eq!(parse_spec("verify-paper").unwrap().action, Action::VerifyPaper(Tier::Quick));
    let cmd = parse_args(&["--max-order", "100", "chartab", "s6", "--show-field"]).unwrap();
    assert_eq!(cmd.action, Action::Chartab(GroupSpec::S6));
    assert!(cmd.options.show_field);
    assert_eq!(cmd.options.max_order, 100);
    assert_eq!(parse_spec("families ext 8").unwrap().action, Action::Families(Family::Ext, 8));
}

#[test]
fn help_is_not_an_error() {
    assert!(matches!(parse_spec("--help"), Err(ParseError::Display(_))));
    assert!(matches!(parse_spec("sgp --help"), Err(ParseError::Display(_))));
}
