use qpoly_drg::classify::{count_domain, search, Family, SearchParams};
use qpoly_drg::{IntersectionArray, ParityClass, Stage};

fn params(d_min: usize, d_max: usize, k_max: u64, no_external: bool) -> SearchParams {
    SearchParams { d_min, d_max, k_max, no_external }
}

/// Plain nested enumeration of the domain, without the walker's pruning.
fn naive_count(d: usize, k: u64) -> u64 {
    fn rec(d: usize, k: u64, b: &mut Vec<u64>, c: &mut Vec<u64>, count: &mut u64) {
        let i = c.len();
        if i == d + 1 {
            let Ok(a) = IntersectionArray::new(b[..d].to_vec(), c[1..].to_vec()) else { return };
            let shells = a.shell_sizes();
            if shells.iter().all(|s| s.is_integer()) && (1..=d).all(|j| a.a(j) >= 0) {
                *count += 1;
            }
            return;
        }
        for ci in c[i - 1]..=k {
            for bi in 0..=b[i - 1] {
                if (i < d) != (bi > 0) || ci + bi > k {
                    continue;
                }
                b.push(bi);
                c.push(ci);
                rec(d, k, b, c, count);
                b.pop();
                c.pop();
            }
        }
    }
    let mut count = 0;
    rec(d, k, &mut vec![k, k - 1, k - 1], &mut vec![0, 1, 1], &mut count);
    count
}

#[test]
fn domain_count_matches_naive_enumeration() {
    for d in 3..=5 {
        let mut naive = 0;
        for k in 3..=7 {
            naive += naive_count(d, k);
        }
        assert_eq!(count_domain(d, 7).total, naive, "D = {d}");
    }
}

#[test]
fn diameter_three_survivors() {
    let r = search(params(3, 3, 10, false)).unwrap();
    assert!(r.partition_holds());
    let mut got: Vec<String> = r.survivors.iter().map(|s| s.array.to_string()).collect();
    got.sort();
    let mut expected: Vec<String> =
        (3..=10).map(|k| IntersectionArray::generalized_hexagon(k).to_string()).collect();
    expected.push(IntersectionArray::odd_graph(3).to_string());
    expected.sort();
    assert_eq!(got, expected);
    assert!(r.unexpected_survivors().is_empty());
}

#[test]
fn no_bipartite_survivor_at_diameter_five() {
    let r = search(params(5, 5, 20, false)).unwrap();
    assert!(r.partition_holds() && r.unresolved_count() == 0);
    assert!(r.survivors.iter().all(|s| s.array.parity() != ParityClass::Bipartite));
    assert_eq!(r.survivors.len(), 1);
    assert!(matches!(r.survivors[0].family, Family::OddGraph { m: 11 }));
}

#[test]
fn internal_mode_leaves_only_the_trichotomy_bulk() {
    let r = search(params(3, 5, 12, true)).unwrap();
    assert!(r.partition_holds());
    assert!(r.unresolved.is_empty(), "{:?}", r.unresolved.first());
    assert!(r.refutations.keys().all(|s| !s.is_external()));
    let with = search(params(3, 5, 12, false)).unwrap();
    assert_eq!(with.survivors.len(), r.survivors.len());
    assert_eq!(with.unresolved_bulk, 0);
    assert!(with.refutations.contains_key(&Stage::ElementaryFeasibility));
}

#[test]
fn search_is_deterministic() {
    let a = search(params(3, 4, 12, false)).unwrap();
    let b = search(params(3, 4, 12, false)).unwrap();
    let fmt = |r: &qpoly_drg::classify::SearchReport| {
        qpoly_drg::classify::report_render(
            qpoly_drg::classify::Document::Search(r),
            qpoly_drg::classify::Format::Json,
        )
    };
    assert_eq!(fmt(&a), fmt(&b));
}

#[test]
fn invalid_ranges_are_rejected() {
    assert!(search(params(2, 4, 10, false)).is_err());
    assert!(search(params(5, 4, 10, false)).is_err());
    assert!(search(params(3, 9, 10, false)).is_err());
    assert!(search(params(3, 4, 2, false)).is_err());
}
