use bitableau::bitableau::Bitableau;
use bitableau::kronecker::{is_kronecker_tableau, lowering_candidates, phi};
use bitableau::Partition;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn bt(rows: &[Vec<(u32, u32)>]) -> Bitableau {
    Bitableau::from_tuples(rows).unwrap()
}

#[test]
fn two_sources_one_target_at_four_three() {
    let c = lowering_candidates(&p(&[4, 3]), 3, &p(&[3, 2, 2])).unwrap();
    assert_eq!(c.g, 1);
    assert_eq!(c.excess, 1);
    let mut sources: Vec<_> = c.sources.iter().map(Bitableau::tuples).collect();
    sources.sort();
    assert_eq!(
        sources,
        vec![
            vec![
                vec![(1, 1), (1, 1), (2, 1), (2, 2)],
                vec![(1, 2), (2, 3), (2, 3)]
            ],
            vec![
                vec![(1, 1), (1, 1), (2, 2), (2, 3)],
                vec![(1, 2), (2, 1), (2, 3)]
            ],
        ]
    );
    assert_eq!(
        c.targets,
        vec![bt(&[
            vec![(1, 1), (1, 1), (2, 2), (2, 2)],
            vec![(2, 1), (2, 3), (2, 3)]
        ])]
    );
    // phi kills both sources, so it cannot supply the missing edge.
    for s in &c.sources {
        assert!(is_kronecker_tableau(s).unwrap().is_kronecker);
        assert_eq!(phi(s).unwrap(), None);
    }
}

#[test]
fn no_excess_inside_the_regime() {
    for nu in [p(&[3, 2, 2]), p(&[4, 3]), p(&[5, 1, 1])] {
        let c = lowering_candidates(&p(&[5, 2]), 2, &nu).unwrap();
        assert_eq!(c.excess, 0, "nu = {nu}");
        assert_eq!(c.sources.len() as u64, c.g);
    }
    assert!(lowering_candidates(&p(&[2]), 0, &p(&[2])).is_err());
}
