use bitableau::completion::{
    census_mismatches, highest_weight_census, operators_from_fn, top_op_column, top_op_row,
    verify_transport,
};
use bitableau::glm_crystal::{full_crystal, Convention};
use bitableau::partition::Partition;
use bitableau::word::Direction;

#[test]
fn rows_through_rsk() {
    for r in 1..=5 {
        for n in 1..=3 {
            for m in 1..=3 {
                let report = verify_transport(r, n, m, false).unwrap();
                assert_eq!(
                    report.failures,
                    Vec::<String>::new(),
                    "row {r}, n = {n}, m = {m}"
                );
            }
        }
    }
}

#[test]
fn columns_through_brsk() {
    for r in 1..=6 {
        for n in 1..=3 {
            for m in 1..=3 {
                let report = verify_transport(r, n, m, true).unwrap();
                assert_eq!(
                    report.failures,
                    Vec::<String>::new(),
                    "column {r}, n = {n}, m = {m}"
                );
            }
        }
    }
}

#[test]
fn transported_census_is_diagonal() {
    // Rows pair mu with itself, columns pair mu with its conjugate.
    for r in 1..=4 {
        for column in [false, true] {
            let shape = if column {
                Partition::column(r)
            } else {
                Partition::row(r)
            };
            let g = full_crystal(&shape, 3, 3, Convention::W, usize::MAX).unwrap();
            let tops = operators_from_fn(&g, 3, |t, i| {
                if column {
                    top_op_column(t, i, Direction::Lower)
                } else {
                    top_op_row(t, i, Direction::Lower)
                }
            })
            .unwrap();
            let census = highest_weight_census(&g, &tops);
            assert_eq!(census_mismatches(&shape, 3, 3, &census).unwrap(), vec![]);
            for ((a, b), count) in census {
                assert_eq!(count, 1);
                let mu = a.as_partition().unwrap();
                let nu = b.as_partition().unwrap();
                assert_eq!(nu, if column { mu.conjugate() } else { mu });
            }
        }
    }
}

#[test]
fn transport_counts() {
    let report = verify_transport(2, 2, 2, false).unwrap();
    assert_eq!(report.vertices, 10);
    let report = verify_transport(2, 2, 2, true).unwrap();
    assert_eq!(report.vertices, 6);
}
