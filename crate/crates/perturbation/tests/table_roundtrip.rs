//! Emission and re-parsing of the enumerated sequence tables: golden first
//! lines, byte determinism, exact row round-trips, and parser error
//! reporting.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use perturbation::{
    emit_sequence_table, enumerate_code_loop, enumerate_qubit_2nd_order, enumerate_shortcut,
    enumerate_stabilizer_loop, parse_sequence_table, BridgeAmplitudes, IslandChargeConfig,
    PerturbationError, TransferSequence, SEQUENCE_TABLE_HEADER,
};

fn all_tables() -> Vec<(Vec<TransferSequence>, IslandChargeConfig)> {
    let single = IslandChargeConfig::symmetric(1, 1.0).unwrap();
    let pair = IslandChargeConfig::new(&[0.125, -0.25], 2.0).unwrap();
    let quad = IslandChargeConfig::new(&[0.125, -0.25, 0.0625, 0.375], 1.0).unwrap();
    let bridges = BridgeAmplitudes::uniform(Complex64::new(1.0, 0.0));
    vec![
        (
            enumerate_qubit_2nd_order(0.1, 0.1, 1.0).unwrap().sequences,
            single,
        ),
        (enumerate_shortcut(&pair).unwrap().sequences, pair),
        (
            enumerate_code_loop(&quad, &bridges).unwrap().sequences,
            quad.clone(),
        ),
        (enumerate_stabilizer_loop(&quad).unwrap().sequences, quad),
    ]
}

#[test]
fn golden_first_lines_of_the_loop_table() {
    let cfg = IslandChargeConfig::symmetric(4, 1.0).unwrap();
    let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();
    let table = emit_sequence_table(&enumeration.sequences, &cfg);
    let lines: Vec<&str> = table.lines().collect();

    assert_eq!(lines[0], "index,sequence,denominator_symbolic,denominator_value");
    assert_eq!(
        lines[1],
        "1,L1A87A65A43L2†,(E1+E4+E3+E2+)^-1,1.0000000000000000e0"
    );
    assert_eq!(
        lines[2],
        "2,A87L1A65A43L2†,[(E1-+E4+)E4+E3+E2+]^-1,5.0000000000000000e-1"
    );
    assert_eq!(lines.len(), 121);
}

#[test]
fn golden_single_island_table() {
    let cfg = IslandChargeConfig::symmetric(1, 1.0).unwrap();
    let enumeration = enumerate_qubit_2nd_order(0.1, 0.1, 1.0).unwrap();
    let table = emit_sequence_table(&enumeration.sequences, &cfg);
    assert_eq!(
        table,
        "index,sequence,denominator_symbolic,denominator_value\n\
         1,M2†M1,[EC]^-1,1.0000000000000000e0\n\
         2,M1M2†,[EC]^-1,1.0000000000000000e0\n"
    );
}

#[test]
fn emission_is_byte_deterministic() {
    for (sequences, cfg) in all_tables() {
        let first = emit_sequence_table(&sequences, &cfg);
        let second = emit_sequence_table(&sequences, &cfg);
        assert_eq!(first, second);
    }
}

#[test]
fn every_table_round_trips_exactly() {
    for (sequences, cfg) in all_tables() {
        let table = emit_sequence_table(&sequences, &cfg);
        let parsed = parse_sequence_table(&table).unwrap();
        assert_eq!(parsed.len(), sequences.len());

        for (position, (row, original)) in parsed.iter().zip(&sequences).enumerate() {
            assert_eq!(row.index, position + 1);
            assert_eq!(&row.to_sequence(), original);
            // The printed weight is the signed weight rounded through
            // {:.16e}, which round-trips f64 exactly.
            let weight = original.signed_weight(&cfg).to_f64().unwrap();
            assert_eq!(row.value, weight);
        }
    }
}

#[test]
fn comment_lines_are_skipped_wherever_they_appear() {
    let (sequences, cfg) = all_tables().swap_remove(1);
    let table = emit_sequence_table(&sequences, &cfg);
    let decorated = format!("# run metadata\n# more metadata\n{table}# summary,0\n");
    let parsed = parse_sequence_table(&decorated).unwrap();
    assert_eq!(parsed.len(), sequences.len());
    for (row, original) in parsed.iter().zip(&sequences) {
        assert_eq!(&row.to_sequence(), original);
    }

    // A wrong header hidden behind comments is still reported, at its real
    // line number.
    let bad = "# metadata\nnot,the,header\n";
    assert!(matches!(
        parse_sequence_table(bad).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));
}

#[test]
fn parsed_rows_re_render_to_the_same_strings() {
    for (sequences, cfg) in all_tables() {
        let table = emit_sequence_table(&sequences, &cfg);
        let parsed = parse_sequence_table(&table).unwrap();
        let rebuilt: Vec<TransferSequence> =
            parsed.iter().map(|row| row.to_sequence()).collect();
        assert_eq!(emit_sequence_table(&rebuilt, &cfg), table);
    }
}

#[test]
fn rejects_tables_with_the_wrong_shape() {
    assert_eq!(
        parse_sequence_table("").unwrap_err(),
        PerturbationError::TableParse {
            line: 1,
            message: "empty table".to_string()
        }
    );

    let bad_header = "sequence,denominator\n1,L1,(E1+)^-1,1.0";
    assert!(matches!(
        parse_sequence_table(bad_header).unwrap_err(),
        PerturbationError::TableParse { line: 1, .. }
    ));

    let missing_field = format!("{SEQUENCE_TABLE_HEADER}\n1,L1A12L2†,(E1+E2+)^-1");
    assert!(matches!(
        parse_sequence_table(&missing_field).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));

    let bad_token = format!("{SEQUENCE_TABLE_HEADER}\n1,L1B12L2†,(E1+E2+)^-1,1.0");
    assert!(matches!(
        parse_sequence_table(&bad_token).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));

    let missing_inverse = format!("{SEQUENCE_TABLE_HEADER}\n1,L1A12L2†,(E1+E2+),1.0");
    assert!(matches!(
        parse_sequence_table(&missing_inverse).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));

    let bad_value = format!("{SEQUENCE_TABLE_HEADER}\n1,L1A12L2†,(E1+E2+)^-1,one");
    assert!(matches!(
        parse_sequence_table(&bad_value).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));

    let stray_term = format!("{SEQUENCE_TABLE_HEADER}\n1,L1A12L2†,(E1+xE2+)^-1,1.0");
    assert!(matches!(
        parse_sequence_table(&stray_term).unwrap_err(),
        PerturbationError::TableParse { line: 2, .. }
    ));
}

#[test]
fn parses_signed_rows_from_the_shortcut_table() {
    let cfg = IslandChargeConfig::symmetric(2, 1.0).unwrap();
    let enumeration = enumerate_shortcut(&cfg).unwrap();
    let table = emit_sequence_table(&enumeration.sequences, &cfg);
    let parsed = parse_sequence_table(&table).unwrap();

    let signs: Vec<i8> = parsed.iter().map(|row| row.sign).collect();
    assert_eq!(signs, vec![1, -1, 1, -1, -1, -1]);
    let values: Vec<f64> = parsed.iter().map(|row| row.value).collect();
    assert_eq!(values, vec![1.0, -0.5, 1.0, -0.5, -0.5, -0.5]);
}
