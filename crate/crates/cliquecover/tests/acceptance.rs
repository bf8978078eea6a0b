//! Acceptance run: one `pass`/`fail` line per criterion, nonzero exit if any
//! fails. Every criterion is checked against an oracle written here,
//! independent of the library's solvers.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cliquecover::formats::{parse_system, CHOI};
use cliquecover::parallel;
use cliquecover_core::construct::{
    build, build_with_skeleton, check_zhang_inequality, default_skeleton, planned_sizes, sampled_assignment,
    CheckMode, LayeredGraph,
};
use cliquecover_core::covers::{
    coverage_profile, irreducible_cover_pipeline, omega_consistency, realize, union_of_two_1covers,
    CoveringSystem, Engine, PipelineOptions, RealizationKind, SplitCertificate,
};
use cliquecover_core::lp_partition::lp_partition;
use cliquecover_core::orientation::RootedDag;
use cliquecover_core::{Graph, Limits};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// Oracles

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Largest clique inside `allowed`, by plain Bron–Kerbosch without pivoting.
fn max_clique(adj: &[Vec<bool>], allowed: &[usize]) -> usize {
    fn go(adj: &[Vec<bool>], size: usize, cand: &[usize], best: &mut usize) {
        *best = (*best).max(size);
        if size + cand.len() <= *best {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
            go(adj, size + 1, &next, best);
        }
    }
    let mut best = 0;
    go(adj, 0, allowed, &mut best);
    best
}

fn omega(g: &Graph) -> usize {
    max_clique(&adjacency(g), &(0..g.n()).collect::<Vec<_>>())
}

fn colorable(adj: &[Vec<bool>], colors: usize) -> bool {
    fn go(adj: &[Vec<bool>], v: usize, colors: usize, used: usize, col: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        // a fresh color only needs trying once
        for c in 0..colors.min(used + 1) {
            if (0..v).all(|u| !adj[v][u] || col[u] != c) {
                col[v] = c;
                if go(adj, v + 1, colors, used.max(c + 1), col) {
                    return true;
                }
            }
        }
        false
    }
    go(adj, 0, colors, 0, &mut vec![0; adj.len()])
}

/// All maximum-length simple paths (in edges), each listed once per
/// direction.
fn longest_paths_brute(adj: &[Vec<bool>], allowed: &[bool]) -> (usize, Vec<Vec<usize>>) {
    fn go(adj: &[Vec<bool>], allowed: &[bool], path: &mut Vec<usize>, on: &mut [bool], best: &mut (usize, Vec<Vec<usize>>)) {
        let len = path.len() - 1;
        if len > best.0 {
            *best = (len, Vec::new());
        }
        if len == best.0 {
            best.1.push(path.clone());
        }
        let last = *path.last().expect("nonempty");
        for w in 0..adj.len() {
            if allowed[w] && !on[w] && adj[last][w] {
                on[w] = true;
                path.push(w);
                go(adj, allowed, path, on, best);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut best = (0, Vec::new());
    for s in (0..adj.len()).filter(|&s| allowed[s]) {
        let mut on = vec![false; adj.len()];
        on[s] = true;
        go(adj, allowed, &mut vec![s], &mut on, &mut best);
    }
    best
}

/// `x ↦ #{t : x ≡ a_t (mod n_t)}` over one period, by scanning.
fn scan_w(pairs: &[(u64, u64)]) -> Vec<usize> {
    let period = pairs.iter().fold(1u64, |acc, &(_, n)| acc / gcd(acc, n) * n);
    (0..period).map(|x| pairs.iter().filter(|&&(a, n)| x % n == a).count()).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn small_pairs(sys: &CoveringSystem) -> Vec<(u64, u64)> {
    sys.classes()
        .iter()
        .map(|c| (u64::try_from(c.residue()).unwrap(), u64::try_from(c.modulus()).unwrap()))
        .collect()
}

/// Classes meet iff their residues agree modulo the gcd of the moduli.
fn classes_meet(a1: &BigUint, n1: &BigUint, a2: &BigUint, n2: &BigUint) -> bool {
    let mut x = n1.clone();
    let mut y = n2.clone();
    while y != BigUint::from(0u8) {
        let r = &x % &y;
        x = y;
        y = r;
    }
    a1 % &x == a2 % &x
}

fn witness_ok(lg: &LayeredGraph, adj: &[Vec<bool>], assignment: &[usize]) -> Result<(), String> {
    let w = lg.extract_witness_assignment(assignment).map_err(|e| e.to_string())?;
    ensure!(w.clique.len() == lg.m(), "witness has {} vertices", w.clique.len());
    for (i, &u) in w.clique.iter().enumerate() {
        ensure!(assignment[u] == w.part, "witness vertex {u} outside part {}", w.part);
        for &v in &w.clique[i + 1..] {
            ensure!(adj[u][v], "witness vertices {u} and {v} not adjacent");
        }
    }
    Ok(())
}

/// Vertex count from the skeleton: `|G^(1)| = 1`, and each non-root block
/// has one copy per choice of a vertex in every in-neighbor block.
fn size_from_copies(skeleton: &RootedDag, m: usize) -> BigUint {
    let mut total = BigUint::from(1u8);
    for _ in 2..=m {
        let mut block = vec![BigUint::from(0u8); skeleton.n()];
        block[skeleton.root()] = BigUint::from(1u8);
        for layer in skeleton.layers().iter().skip(1) {
            for &i in layer {
                let copies: BigUint = skeleton.in_set(i).iter().map(|&p| block[p].clone()).product();
                block[i] = copies * &total;
            }
        }
        total = block.into_iter().sum();
    }
    total
}

fn every_assignment(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..(k as u64).pow(n as u32)).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = (i % k as u64) as usize;
                i /= k as u64;
                d
            })
            .collect()
    })
}

fn parts_of(assignment: &[usize], k: usize) -> Vec<Vec<usize>> {
    (0..k)
        .map(|t| (0..assignment.len()).filter(|&v| assignment[v] == t).collect())
        .collect()
}

// Criteria

fn robust_m2_k2() -> Result<String, String> {
    let l = Limits::default();
    let lg = build(2, 2, &l).map_err(|e| e.to_string())?;
    let g = lg.graph();
    let adj = adjacency(g);
    ensure!(g.n() == 5, "expected 5 vertices, got {}", g.n());
    ensure!(omega(g) == 2, "omega {}", omega(g));
    let mut checked = 0;
    for a in every_assignment(5, 2) {
        ensure!(
            parts_of(&a, 2).iter().any(|p| max_clique(&adj, p) == 2),
            "partition {a:?} has no part with omega 2"
        );
        witness_ok(&lg, &adj, &a)?;
        checked += 1;
    }
    let v = parallel::check_robustness(g, 2, 2, CheckMode::Exhaustive, &l).map_err(|e| e.to_string())?;
    ensure!(v.holds() && v.checked == 32, "library verdict {v:?}");
    Ok(format!("omega 2, {checked} ordered 2-partitions"))
}

fn sampled_robustness(m: usize, k: usize, trials: u64, seed: u64) -> Result<String, String> {
    let l = Limits::default();
    let skeleton = default_skeleton(k).map_err(|e| e.to_string())?;
    let lg = build_with_skeleton(m, k, skeleton.clone(), &l).map_err(|e| e.to_string())?;
    let g = lg.graph();
    let n = g.n();
    let expected = size_from_copies(&skeleton, m);
    ensure!(BigUint::from(n) == expected, "{n} vertices, copy count gives {expected}");
    ensure!(planned_sizes(&skeleton, m)[m - 1] == expected, "planned size disagrees");
    let adj = adjacency(g);
    let w = omega(g);
    ensure!(w == m, "oracle omega {w}");
    ensure!(cliquecover_core::clique::clique_number(g).0 == m, "exact solver omega differs");
    let mode = CheckMode::Sampled { seed, trials };
    let v = parallel::check_robustness(g, m, k, mode, &l).map_err(|e| e.to_string())?;
    ensure!(v.holds() && v.checked == trials, "counterexample {:?}", v.counterexample);
    for t in 0..trials {
        witness_ok(&lg, &adj, &sampled_assignment(seed, t, n, k))?;
    }
    Ok(format!(
        "skeleton {} vertices, {n} vertices, omega {m}, {trials} sampled {k}-partitions (seed {seed}) each with a witness",
        skeleton.n()
    ))
}

fn robust_m3_k2() -> Result<String, String> {
    sampled_robustness(3, 2, 10_000, 2024)
}

fn robust_m2_k3() -> Result<String, String> {
    let skeleton = default_skeleton(3).map_err(|e| e.to_string())?;
    let base = skeleton.base();
    ensure!(base.n() == 11 && base.edge_count() == 20, "skeleton is not the Grötzsch graph");
    ensure!(omega(base) == 2, "skeleton has a triangle");
    let adj = adjacency(base);
    ensure!(colorable(&adj, 4) && !colorable(&adj, 3), "skeleton chromatic number is not 4");
    sampled_robustness(2, 3, 10_000, 2025)
}

fn split_inequality() -> Result<String, String> {
    let l = Limits::default();
    let lg = build(2, 2, &l).map_err(|e| e.to_string())?;
    let g = lg.graph();
    let adj = adjacency(g);
    let total = omega(g);
    let mut splits = 0;
    for a in every_assignment(5, 2) {
        let p = parts_of(&a, 2);
        if p[0].is_empty() || p[1].is_empty() {
            continue;
        }
        splits += 1;
        ensure!(
            max_clique(&adj, &p[0]) + max_clique(&adj, &p[1]) > total,
            "split {a:?} fails"
        );
    }
    ensure!(splits == 30, "{splits} splits");
    let v = check_zhang_inequality(g, CheckMode::Exhaustive, &l).map_err(|e| e.to_string())?;
    ensure!(v.holds() && v.checked == 30, "library verdict {v:?}");
    Ok("30 nonempty 2-splits".into())
}

fn realization_corpus() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let l = Limits::default();
    for i in 0..200 {
        let n = rng.gen_range(1..=5);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(n, edges).map_err(|e| e.to_string())?;
        let sys = realize(&g).map_err(|e| e.to_string())?;
        ensure!(sys.len() == n, "graph {i}: {} classes", sys.len());
        let c = sys.classes();
        for u in 0..n {
            for v in u + 1..n {
                let meet = classes_meet(c[u].residue(), c[u].modulus(), c[v].residue(), c[v].modulus());
                ensure!(meet == g.has_edge(u, v), "graph {i}: pair ({u}, {v})");
            }
        }
        let o = omega_consistency(&sys, Engine::InclusionExclusion, &l).map_err(|e| e.to_string())?;
        ensure!(o.clique_number == omega(&g), "graph {i}: clique number {}", o.clique_number);
        ensure!(o.max_w == o.clique_number, "graph {i}: max_w {} vs omega {}", o.max_w, o.clique_number);
    }
    Ok("200 graphs on at most 5 vertices".into())
}

fn choi_fixture() -> Result<String, String> {
    let sys = parse_system(CHOI).map_err(|e| e.to_string())?;
    let pairs = small_pairs(&sys);
    ensure!(pairs.len() == 19, "{} classes", pairs.len());
    let w = scan_w(&pairs);
    ensure!(w.len() == 30, "period {}", w.len());
    ensure!(w.iter().all(|&x| x == 2), "w = {w:?}");
    let p = coverage_profile(&sys, Engine::Auto, &Limits::default()).map_err(|e| e.to_string())?;
    ensure!(p.period == BigUint::from(30u8), "library period {}", p.period);
    for (j, c) in p.counts.iter().enumerate() {
        let want = if j == 2 { 30u8 } else { 0 };
        ensure!(*c == BigUint::from(want), "c_{j} = {c}");
    }
    // every unordered split: class 0 stays on the first side
    let s = pairs.len();
    let cover_masks: Vec<u32> = (0..30u64)
        .map(|x| (0..s).filter(|&t| x % pairs[t].1 == pairs[t].0).fold(0, |m, t| m | 1 << t))
        .collect();
    let all = (1u32 << s) - 1;
    let mut splits = 0u64;
    for second in (0..1u32 << s).filter(|m| m & 1 == 0 && *m != 0) {
        splits += 1;
        let first = all & !second;
        let exact_one = |side: u32| cover_masks.iter().all(|&cm| (cm & side).count_ones() == 1);
        ensure!(!(exact_one(first) && exact_one(second)), "split {second:#b} decomposes");
    }
    ensure!(splits == (1 << (s - 1)) - 1, "{splits} splits");
    let lib = union_of_two_1covers(&sys, Engine::Direct, &Limits::default()).map_err(|e| e.to_string())?;
    ensure!(lib.is_none(), "library split {lib:?}");
    Ok(format!("N 30, c_2 = 30, {splits} splits, none decomposes"))
}

fn pipeline_m2() -> Result<String, String> {
    let r = irreducible_cover_pipeline(&PipelineOptions::new(2), &Limits::default()).map_err(|e| e.to_string())?;
    ensure!(r.realization == RealizationKind::SmallModulus, "realization {:?}", r.realization);
    let a = small_pairs(&r.system);
    ensure!(a.len() == 5, "{} classes", a.len());
    for u in 0..5 {
        for v in u + 1..5 {
            let meet = classes_meet(
                &BigUint::from(a[u].0),
                &BigUint::from(a[u].1),
                &BigUint::from(a[v].0),
                &BigUint::from(a[v].1),
            );
            ensure!(meet == r.graph.graph().has_edge(u, v), "pair ({u}, {v}) of the realization");
        }
    }
    ensure!(omega(r.graph.graph()) == 2, "graph omega");
    ensure!(*scan_w(&a).iter().max().unwrap() == 2, "max_w of the realization");
    let b = r.completion.as_ref().ok_or("completion not materialized")?;
    let bp = small_pairs(b);
    ensure!(bp[..5] == a[..], "completion does not extend the realization");
    ensure!(scan_w(&bp).iter().all(|&x| x == 2), "completion is not an exact 2-cover");
    let splits = match &r.split_search {
        Some(SplitCertificate::Exhaustive { splits }) => splits.clone(),
        other => return Err(format!("split search was {other:?}")),
    };
    ensure!(
        splits == (BigUint::from(1u8) << (bp.len() - 1)) - 1u8,
        "{splits} splits for {} classes",
        bp.len()
    );
    ensure!(r.clique_side.holds() && r.clique_side_exhaustive, "clique side");
    Ok(format!(
        "A = {}, N {}, completion {} classes, {splits} splits exhausted",
        r.system.classes().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        r.period,
        bp.len()
    ))
}

fn engines_agree() -> Result<String, String> {
    // 2^5 · 3^2 · 5^2 · 7 = 50400, so every period is at most 10^5
    let base = 50_400u64;
    let divisors: Vec<u64> = (1..=base).filter(|d| base % d == 0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let l = Limits::default();
    let mut scanned = 0;
    for i in 0..500 {
        let s = rng.gen_range(1..=10);
        let pairs: Vec<(u64, u64)> = (0..s)
            .map(|_| {
                let n = divisors[rng.gen_range(0..divisors.len())];
                (rng.gen_range(0..n), n)
            })
            .collect();
        let sys = CoveringSystem::from_pairs(&pairs).map_err(|e| e.to_string())?;
        let direct = coverage_profile(&sys, Engine::Direct, &l).map_err(|e| e.to_string())?;
        let ie = coverage_profile(&sys, Engine::InclusionExclusion, &l).map_err(|e| e.to_string())?;
        ensure!(direct == ie, "system {i}: {pairs:?}");
        if direct.period <= BigUint::from(5000u16) {
            let mut counts = vec![BigUint::from(0u8); s + 1];
            for x in scan_w(&pairs) {
                counts[x] += 1u8;
            }
            ensure!(counts == direct.counts, "system {i}: scan disagrees");
            scanned += 1;
        }
    }
    Ok(format!("500 systems, {scanned} also point-scanned"))
}

fn lp_partition_corpus() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let l = Limits::default();
    for i in 0..500 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        // random spanning tree plus independent extra edges
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).map_err(|e| e.to_string())?;
        ensure!(g.is_connected(), "graph {i} disconnected");
        let r = lp_partition(&g, l.path_cap).map_err(|e| format!("graph {i}: {e}"))?;
        let adj = adjacency(&g);
        let v2 = r.v2.to_vec();
        let in_v2: Vec<bool> = (0..n).map(|v| v2.contains(&v)).collect();
        for &u in &v2 {
            for &v in &v2 {
                ensure!(!adj[u][v], "graph {i}: V_2 not independent");
            }
        }
        let (before, paths) = longest_paths_brute(&adj, &vec![true; n]);
        ensure!(before == r.l_before, "graph {i}: l(G) {before} vs {}", r.l_before);
        ensure!(
            paths.iter().all(|path| path.iter().any(|&v| in_v2[v])),
            "graph {i}: a longest path avoids V_2"
        );
        let v1: Vec<bool> = in_v2.iter().map(|b| !b).collect();
        let (after, _) = longest_paths_brute(&adj, &v1);
        ensure!(after < before && after == r.l_after, "graph {i}: l(G[V_1]) {after} vs {before}");
    }
    Ok("500 connected graphs on 2..=10 vertices".into())
}

fn mycielski_ladder() -> Result<String, String> {
    let mut g = Graph::complete(2);
    let l = Limits::default();
    let mut sizes = Vec::new();
    for j in 0..=3 {
        let adj = adjacency(&g);
        let chi = j + 2;
        ensure!(colorable(&adj, chi) && !colorable(&adj, chi - 1), "M^{j}(K2) chromatic number");
        let lib = cliquecover_core::coloring::chromatic_number(&g, l.chromatic_cap).map_err(|e| e.to_string())?;
        ensure!(lib == chi, "library chromatic number {lib} for j = {j}");
        ensure!(omega(&g) == 2, "M^{j}(K2) has a triangle");
        sizes.push(g.n());
        g = g.mycielskian();
    }
    ensure!(sizes == [2, 5, 11, 23], "sizes {sizes:?}");
    Ok("chi 2, 3, 4, 5 on 2, 5, 11, 23 vertices, all triangle-free".into())
}

fn main() {
    let criteria: [(&str, Check, Duration); 10] = [
        ("robust m=2 k=2 exhaustive", robust_m2_k2, Duration::from_secs(1)),
        ("robust m=3 k=2 sampled", robust_m3_k2, Duration::from_secs(300)),
        ("robust m=2 k=3 sampled", robust_m2_k3, Duration::from_secs(300)),
        ("split inequality on G(2)", split_inequality, Duration::from_secs(1)),
        ("realization round trip", realization_corpus, Duration::from_secs(60)),
        ("nineteen-class exact 2-cover", choi_fixture, Duration::from_secs(120)),
        ("irreducible cover pipeline m=2", pipeline_m2, Duration::from_secs(600)),
        ("profile engines agree", engines_agree, Duration::from_secs(60)),
        ("longest-path partition", lp_partition_corpus, Duration::from_secs(120)),
        ("Mycielskian ladder", mycielski_ladder, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = result.and_then(|detail| {
            if took <= limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {took:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {:>2} pass  {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
