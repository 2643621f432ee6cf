use eqdeg::lambda::{
    lambda_bruteforce, lambda_closed, lambda_grid, lambda_naive, LambdaCase, LambdaInstance, LAMBDA_CSV_HEADER,
};
use eqdeg::Error;

#[test]
fn closed_form_equals_oracle_on_full_grid() {
    let rows = lambda_grid(6..=8).unwrap();
    let expected: usize = (6..=8).map(|n| LambdaInstance::grid(n).len()).sum();
    assert_eq!(rows.len(), expected);
    let bad: Vec<_> = rows.iter().filter(|r| !r.equal).collect();
    assert!(bad.is_empty(), "{bad:?}");
    for case in [1, 2, 3] {
        assert!(rows.iter().any(|r| r.case == case), "case {case} never occurs");
    }
}

#[test]
fn grid_covers_the_domain_exactly() {
    for n in 6..=8 {
        let grid = LambdaInstance::grid(n);
        let mut count = 0;
        for delta in 0..=2 * n + 1 {
            for beta in 0..=delta + 1 {
                for b in 0..=delta + 1 {
                    if let Ok(inst) = LambdaInstance::new(n, delta, beta, b) {
                        assert!(grid.contains(&inst));
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, grid.len());
    }
}

#[test]
fn reduced_oracle_equals_literal_enumeration() {
    // The literal enumeration is feasible for n = 6 and part of n = 7.
    let mut checked = 0;
    for n in 6..=7 {
        for inst in LambdaInstance::grid(n) {
            let naive = match lambda_naive(&inst) {
                Ok(v) => v,
                Err(Error::LambdaTooLarge(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            assert_eq!(naive.max, lambda_bruteforce(&inst).unwrap(), "{inst:?}");
            if let Some(small) = naive.max_with_small_b {
                assert!(small <= naive.max);
            }
            checked += 1;
        }
    }
    assert!(checked >= LambdaInstance::grid(6).len());
}

#[test]
fn worked_examples() {
    let cases = [
        ((6, 9, 7, 5), LambdaCase::One, 40),
        ((6, 9, 4, 7), LambdaCase::Two, 26),
        ((6, 9, 5, 6), LambdaCase::Three, 31),
    ];
    for ((n, d, b, s), case, value) in cases {
        let inst = LambdaInstance::new(n, d, b, s).unwrap();
        assert_eq!(inst.case(), case);
        assert_eq!(lambda_closed(&inst), value);
        assert_eq!(lambda_bruteforce(&inst).unwrap(), value);
    }
}

#[test]
fn csv_rows_have_header_arity() {
    let rows = lambda_grid(6..=6).unwrap();
    let width = LAMBDA_CSV_HEADER.split(',').count();
    assert!(rows.iter().all(|r| r.to_csv().split(',').count() == width));
}
