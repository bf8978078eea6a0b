use cliquecover_core::clique::clique_number;
use cliquecover_core::construct::{build, check_robustness, sampled_assignment, CheckMode, LayeredGraph};
use cliquecover_core::Limits;

/// Rebuilds the edge set from labels alone: edges inside a copy come from
/// the child graph; a vertex at position `pos` of block `p` is joined to copy
/// `c` of block `i` (for `p` an in-neighbor of `i`) iff `pos` is the digit
/// for `p` when `c - 1` is written in the mixed radix of the in-neighbor
/// block sizes, last in-neighbor least significant.
fn expected_edge(lg: &LayeredGraph, u: usize, v: usize) -> bool {
    let (lu, lv) = (lg.label(u), lg.label(v));
    let child = lg.child().expect("m >= 2");
    if lu.host == lv.host {
        return lu.copy == lv.copy
            && match (lu.inner, lv.inner) {
                (Some(a), Some(b)) => child.graph().has_edge(a, b),
                _ => false,
            };
    }
    let cross = |from: usize, to: usize| {
        let (lf, lt) = (lg.label(from), lg.label(to));
        let preds = lg.skeleton().in_set(lt.host);
        let Some(r) = preds.iter().position(|&p| p == lf.host) else {
            return false;
        };
        let mut index = lt.copy - 1;
        let mut digit = 0;
        for (q, &p) in preds.iter().enumerate().rev() {
            let radix = lg.block_range(p).len();
            if q == r {
                digit = index % radix;
            }
            index /= radix;
        }
        from - lg.block_range(lf.host).start == digit
    };
    cross(u, v) || cross(v, u)
}

fn check_structure(lg: &LayeredGraph) {
    let g = lg.graph();
    assert!(lg.size_identity_holds());
    for v in 0..g.n() {
        assert_eq!(lg.vertex_of(&lg.label(v)), Some(v));
    }
    let mut expected = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let e = expected_edge(lg, u, v);
            assert_eq!(g.has_edge(u, v), e, "pair ({u}, {v})");
            expected += e as usize;
        }
    }
    assert_eq!(g.edge_count(), expected);
    // every copy of H_i sees exactly one vertex of each in-neighbor block,
    // and that vertex sees the whole copy
    let sk = lg.skeleton();
    for i in (0..sk.n()).filter(|&i| i != sk.root()) {
        for c in 1..=lg.copies(i) {
            let copy = lg.copy_range(i, c);
            for &p in sk.in_set(i) {
                let block = lg.block_range(p);
                let seen: Vec<usize> = block
                    .clone()
                    .filter(|&w| copy.clone().any(|x| g.has_edge(w, x)))
                    .collect();
                assert_eq!(seen.len(), 1, "copy {c} of block {i} vs block {p}");
                assert!(copy.clone().all(|x| g.has_edge(seen[0], x)));
            }
        }
    }
    assert_eq!(clique_number(g).0, lg.m());
}

#[test]
fn structure_of_small_builds() {
    let l = Limits::default();
    for (m, k) in [(2, 2), (3, 2), (2, 3)] {
        check_structure(&build(m, k, &l).unwrap());
    }
}

fn check_witness(lg: &LayeredGraph, assignment: &[usize]) {
    let w = lg.extract_witness_assignment(assignment).unwrap();
    assert_eq!(w.clique.len(), lg.m());
    assert!(lg.graph().is_clique(&w.clique));
    assert!(w.clique.iter().all(|&v| assignment[v] == w.part));
}

fn every_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut digits = vec![0usize; n];
    loop {
        f(&digits);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn witness_for_every_partition_of_small_builds() {
    let l = Limits::default();
    for (m, k) in [(2, 2), (2, 3)] {
        let lg = build(m, k, &l).unwrap();
        let mut count = 0u64;
        every_assignment(lg.graph().n(), k, |a| {
            check_witness(&lg, a);
            count += 1;
        });
        assert_eq!(count, (k as u64).pow(lg.graph().n() as u32));
        let verdict = lg.check_robustness(CheckMode::Exhaustive, &l).unwrap();
        assert!(verdict.holds());
        assert_eq!(verdict.checked, count);
    }
}

#[test]
fn witness_on_sampled_partitions_of_g3() {
    let lg = build(3, 2, &Limits::default()).unwrap();
    for trial in 0..1000 {
        check_witness(&lg, &sampled_assignment(11, trial, lg.graph().n(), 2));
    }
}

#[test]
fn robustness_fails_for_too_many_parts() {
    // C5 = G^(2) for k = 2 splits into 3 independent sets
    let lg = build(2, 2, &Limits::default()).unwrap();
    let verdict = check_robustness(lg.graph(), 2, 3, CheckMode::Exhaustive, &Limits::default()).unwrap();
    let ce = verdict.counterexample.unwrap();
    assert!(ce.part_omegas.iter().all(|&w| w < 2));
}
