use chordgenus::oracle::{
    oracle_one_backbone, oracle_p, oracle_q, oracle_two_backbone, OracleConfig,
};
use chordgenus::{one_backbone, two_backbone, verify, BigInt};

#[test]
fn enumeration_matches_recursions_to_six_chords() {
    let config = OracleConfig::default();
    for n in 0..=6 {
        assert_eq!(
            oracle_one_backbone(n, &config).unwrap(),
            one_backbone::genus_table(n)
        );
        assert_eq!(
            oracle_two_backbone(n, &config).unwrap(),
            two_backbone::genus_table(n).unwrap()
        );
        assert_eq!(oracle_p(n, &config).unwrap(), one_backbone::genus_poly_p(n));
        assert_eq!(
            oracle_q(n, &config).unwrap(),
            two_backbone::q_poly(n).unwrap()
        );
    }
}

#[test]
fn totals_count_every_configuration() {
    // (2n-1)!! matchings on one backbone; every split point on two.
    for n in 1..=12u64 {
        let matchings = chordgenus::exact::double_factorial_odd(n);
        assert_eq!(one_backbone::genus_table(n as usize).total(), matchings);
        let connected = two_backbone::genus_table(n as usize).unwrap().total();
        let disconnected = two_backbone::v_poly(n as usize).evaluate(&BigInt::from(1));
        assert_eq!(connected + disconnected, matchings * (2 * n - 1));
    }
}

#[test]
#[ignore = "slow: enumerates about 3e7 pairs"]
fn enumeration_at_eight_chords() {
    let config = OracleConfig::default();
    assert_eq!(
        oracle_one_backbone(8, &config).unwrap(),
        one_backbone::genus_table(8)
    );
    assert_eq!(
        oracle_two_backbone(8, &config).unwrap(),
        two_backbone::genus_table(8).unwrap()
    );
}

#[test]
#[ignore = "slow: full oracle suite at eight chords"]
fn oracle_suite_at_eight_chords() {
    let report = verify::run(verify::Suite::Oracle, 8, &OracleConfig::default()).unwrap();
    assert!(report.passed());
}
