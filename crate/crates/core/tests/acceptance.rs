//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every check here recomputes its expected values with small brute-force
//! routines defined in this file rather than trusting the library's own
//! verifiers.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use posetdim::bounded::{
    bounded_realizer_with, flag_positive, linearize_from_flag, separating_family,
    sh_separating_family, verify_separating, SeparatingFamily,
};
use posetdim::cli::{parse_sweep, run_sweep, CSV_HEADER};
use posetdim::dimension::{
    antichain_lower_bound, dimension_oracle, dimension_oracle_capped, dimension_search, exact_dimension,
    find_monochromatic_shift, shift_coloring, shift_coloring_unchecked, verify_realizer, Budget, DEFAULT_SI_CAP,
};
use posetdim::format::write_realizer;
use posetdim::gallery::{
    antichain, boolean_lattice, chain, higuchi_poset, interval_realizer, interval_union_poset, random_poset,
    standard_example,
};
use posetdim::lattice::{chain_cover_number, downset_lattice};
use posetdim::poset::parse_set_label;
use posetdim::rank::rank_function;
use posetdim::subsets::{construct_subset_realizer, generate_subsets_poset};
use posetdim::{LinearExtension, Poset, Realizer};

// runtime ceilings per criterion
const LIMIT_ORACLE: Duration = Duration::from_secs(5 * 60);
const LIMIT_SUBSET_CODES: Duration = Duration::from_secs(2 * 60);
const LIMIT_GROWTH: Duration = Duration::from_secs(10 * 60);
const LIMIT_BOUNDED: Duration = Duration::from_secs(10 * 60);
const LIMIT_POUZET: Duration = Duration::from_secs(10 * 60);
const LIMIT_INTERVAL: Duration = Duration::from_secs(2 * 60);

const RANDOM_CALIBRATION: u64 = 200;
const BOUNDED_INSTANCES: u64 = 20;
const BOUNDED_N: usize = 200;
const BOUNDED_CAP: usize = 5;
const SEPARATION_ENUM_LIMIT: u64 = 1_000_000;
const AGREEMENT_INSTANCES: u64 = 50;
const FLAG_PAIRS: u64 = 100;
const POUZET_RANDOM: u64 = 50;
const SMALL_POSET_COUNTS: [usize; 6] = [1, 1, 2, 5, 16, 63];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
}

/// Pair-by-pair check that the extensions intersect to exactly `lt`.
fn realizes(p: &Poset, r: &Realizer) -> bool {
    let n = p.len();
    if r.ground_len() != n {
        return false;
    }
    let pos: Vec<Vec<usize>> = r
        .extensions()
        .iter()
        .map(|e| {
            let mut v = vec![0; n];
            for (i, &x) in e.order().iter().enumerate() {
                v[x] = i;
            }
            v
        })
        .collect();
    (0..n).all(|x| {
        (0..n).all(|y| x == y || p.lt(x, y) == pos.iter().all(|v| v[x] < v[y]))
    })
}

fn calibration_instances() -> Vec<(String, Poset, Option<usize>)> {
    let mut out = Vec::new();
    for k in 1..=6 {
        out.push((format!("chain({k})"), chain(k), Some(1)));
        // a single element is a chain
        out.push((format!("antichain({k})"), antichain(k), Some(if k == 1 { 1 } else { 2 })));
    }
    for a in 1..=3 {
        out.push((format!("boolean({a})"), boolean_lattice(a).unwrap(), Some(a)));
    }
    out.push(("standard(3)".into(), standard_example(3).unwrap(), Some(3)));
    out.push(("higuchi(3)".into(), higuchi_poset(3).unwrap(), Some(3)));
    for seed in 0..RANDOM_CALIBRATION {
        let n = 1 + (seed % 7) as usize;
        let density = [0.15, 0.3, 0.5, 0.7][(seed / 7 % 4) as usize];
        out.push((format!("random(n={n},seed={seed})"), random_poset(n, density, None, seed), None));
    }
    out
}

fn bounded_instances() -> Vec<Poset> {
    (0..BOUNDED_INSTANCES)
        .map(|seed| random_poset(BOUNDED_N, 0.03, Some(BOUNDED_CAP), 1000 + seed))
        .collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let instances = calibration_instances();
    for (name, p, expected) in &instances {
        let exact = exact_dimension(p);
        let oracle = dimension_oracle(p).map_err(|e| format!("{name}: {e}"))?;
        ensure(exact == oracle, || format!("{name}: search {exact}, oracle {oracle}"))?;
        if let Some(want) = expected {
            ensure(exact == *want, || format!("{name}: dimension {exact}, expected {want}"))?;
        }
        let r = dimension_search(p, exact).ok_or_else(|| format!("{name}: no realizer at {exact}"))?;
        ensure(realizes(p, &r), || format!("{name}: search realizer invalid"))?;
    }
    within(start, LIMIT_ORACLE)?;
    Ok(format!("{} instances agree", instances.len()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for n in [2, 4, 8, 16] {
        let r = construct_subset_realizer(n, 2).map_err(|e| format!("n={n}: {e}"))?;
        ensure(realizes(&r.poset, &r.realizer), || format!("n={n}: not a realizer"))?;
        sizes.push((n, r.size()));
    }
    within(start, LIMIT_SUBSET_CODES)?;
    ensure(sizes.windows(2).all(|w| w[0].1 <= w[1].1), || format!("sizes decrease: {sizes:?}"))?;
    Ok(format!("sizes t {sizes:?}"))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut dims = Vec::new();
    for n in 2..=5 {
        let p = generate_subsets_poset(n, 2).map_err(|e| e.to_string())?;
        let d = exact_dimension(&p);
        if p.len() <= 11 {
            let o = dimension_oracle_capped(&p, 16).map_err(|e| e.to_string())?;
            ensure(o == d, || format!("n={n}: search {d}, oracle {o}"))?;
        }
        dims.push(d);
    }
    within(start, LIMIT_GROWTH)?;
    ensure(dims.windows(2).all(|w| w[0] <= w[1]), || format!("not monotone: {dims:?}"))?;
    ensure(dims[1] >= 3, || format!("n=3 gives {}", dims[1]))?;
    Ok(format!("dimensions for n=2..5: {dims:?}"))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut ks = Vec::new();
    for (i, p) in bounded_instances().iter().enumerate() {
        ensure(p.predecessor_bound() <= BOUNDED_CAP, || format!("instance {i}: bound {}", p.predecessor_bound()))?;
        let r = bounded_realizer_with(p, None, i as u64).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(realizes(p, &r.realizer), || format!("instance {i}: not a realizer"))?;
        ensure(r.size() < p.len(), || format!("instance {i}: K = {} not below n", r.size()))?;
        ks.push(r.size());
    }
    within(start, LIMIT_BOUNDED)?;
    Ok(format!("K per instance {ks:?}"))
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Every `A` with `|A| ≤ c` and every `y ∉ A` has a separating function.
fn separates_all(f: &SeparatingFamily, c: usize) -> bool {
    let n = f.ground();
    fn rec(f: &SeparatingFamily, n: usize, c: usize, start: usize, a: &mut Vec<usize>) -> bool {
        let ok = (0..n).filter(|y| !a.contains(y)).all(|y| {
            f.functions()
                .iter()
                .any(|s| s.contains(y) && a.iter().all(|&x| !s.contains(x)))
        });
        if !ok {
            return false;
        }
        if a.len() == c {
            return true;
        }
        for x in start..n {
            a.push(x);
            let good = rec(f, n, c, x + 1, a);
            a.pop();
            if !good {
                return false;
            }
        }
        true
    }
    rec(f, n, c.min(n.saturating_sub(1)), 0, &mut Vec::new())
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for seed in 0..AGREEMENT_INSTANCES {
        let n = 6 + (seed as usize * 7) % 30;
        let c = 1 + (seed as usize) % 4;
        if binomial(n, c) > SEPARATION_ENUM_LIMIT {
            continue;
        }
        let p = random_poset(n, 0.1, None, seed);
        let (collapsed, e) = separating_family(&p, c, seed).map_err(|e| e.to_string())?;
        ensure(separates_all(&collapsed, c), || format!("seed {seed}: collapsed family fails"))?;
        ensure(verify_separating(&collapsed).is_ok(), || format!("seed {seed}: library verifier disagrees"))?;
        let (sh, pairs) = sh_separating_family(&e);
        ensure(separates_all(&sh, c), || format!("seed {seed}: (s,H) family fails"))?;
        // each indicator (s,H) function equals the collapsed function of the same point
        for (pair, f) in pairs.iter().zip(sh.functions()) {
            let a = pair.s[0];
            let same = &collapsed.functions()[a];
            let expected: Vec<bool> = (0..n)
                .map(|x| if pair.h == [vec![a]] { same.contains(x) } else { !same.contains(x) })
                .collect();
            let got: Vec<bool> = (0..n).map(|x| f.contains(x)).collect();
            ensure(expected == got, || format!("seed {seed}: point {a} disagrees"))?;
        }
        ensure(sh.size() <= 2 * e.ground_size(), || format!("seed {seed}: K too large"))?;
        checked += 1;
    }
    ensure(checked == AGREEMENT_INSTANCES as usize, || format!("only {checked} instances in range"))?;
    Ok(format!("{checked} instances separate exhaustively and agree"))
}

fn criterion_6() -> Check {
    for seed in 0..FLAG_PAIRS {
        let n = 1 + (seed as usize % 25);
        let p = random_poset(n, 0.2, None, seed);
        let ones: Vec<usize> = (0..n).filter(|&i| (seed.wrapping_mul(2654435761) >> (i % 32)) & 1 == 1).collect();
        let f = posetdim::bitset::BitSet::from_iter_with_len(n, ones.iter().copied());
        let pos: Vec<bool> = (0..n).map(|x| ones.iter().any(|&u| p.le(u, x))).collect();
        ensure(
            (0..n).all(|x| pos[x] == flag_positive(&p, &f).contains(x)),
            || format!("seed {seed}: pos differs"),
        )?;
        let e = linearize_from_flag(&p, &f);
        ensure(e.extends(&p) && (0..n).all(|x| (0..n).all(|y| !p.lt(x, y) || e.precedes(x, y))), || {
            format!("seed {seed}: not a linear extension")
        })?;
        let order = e.order();
        let first_pos = order.iter().position(|&x| pos[x]).unwrap_or(n);
        ensure(order[first_pos..].iter().all(|&x| pos[x]), || format!("seed {seed}: blocks interleave"))?;
    }
    Ok(format!("{FLAG_PAIRS} pairs"))
}

/// Definition check: for every `T ⊊ S` and `x ∈ S ∖ T` some `y` is above
/// all of `T` but not above `x`.
fn strongly_independent(p: &Poset, s: &[usize]) -> bool {
    let k = s.len();
    for i in 0..k {
        for j in 0..k {
            if i != j && p.comparable(s[i], s[j]) {
                return false;
            }
        }
    }
    for mask in 0u32..(1 << k) {
        let t: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
        for (b, &x) in s.iter().enumerate() {
            if mask >> b & 1 == 1 {
                continue;
            }
            if !(0..p.len()).any(|y| t.iter().all(|&z| p.le(z, y)) && !p.le(x, y)) {
                return false;
            }
        }
    }
    true
}

fn criterion_7() -> Check {
    for (name, p, _) in calibration_instances() {
        let lb = antichain_lower_bound(&p, DEFAULT_SI_CAP, &Budget::unlimited());
        let d = exact_dimension(&p);
        ensure(lb.value <= d, || format!("{name}: bound {} above dimension {d}", lb.value))?;
        ensure(lb.antichain.is_empty() || strongly_independent(&p, &lb.antichain), || {
            format!("{name}: certificate fails the definition")
        })?;
    }
    for n in [3, 4] {
        let p = higuchi_poset(n).unwrap();
        let lb = antichain_lower_bound(&p, DEFAULT_SI_CAP, &Budget::unlimited());
        ensure(lb.value == n, || format!("higuchi({n}): bound {}", lb.value))?;
        ensure(strongly_independent(&p, &lb.antichain), || format!("higuchi({n}): certificate invalid"))?;
    }
    Ok("bounds sound; higuchi(3)=3, higuchi(4)=4".into())
}

fn criterion_8() -> Check {
    let mut colored = 0;
    for n in 2..=6 {
        let p = generate_subsets_poset(n, 2).map_err(|e| e.to_string())?;
        let d = exact_dimension(&p);
        for k in d..=d + 1 {
            let r = dimension_search(&p, k).ok_or_else(|| format!("N={n}: no realizer of size {k}"))?;
            ensure(realizes(&p, &r), || format!("N={n}: invalid realizer"))?;
            let c = shift_coloring(&p, &r).map_err(|e| e.to_string())?;
            ensure(find_monochromatic_shift(&c).is_none(), || format!("N={n}, k={k}: shift found"))?;
            colored += 1;
        }
    }
    // all pairs below all singletons in a single order
    let p = generate_subsets_poset(5, 2).unwrap();
    let labels = p.labels().unwrap();
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| match parse_set_label(&labels[i]).unwrap().len() {
        0 => 0,
        2 => 1,
        _ => 2,
    });
    let planted = Realizer::new(vec![LinearExtension::new(order).unwrap()]).unwrap();
    ensure(!realizes(&p, &planted), || "planted family realizes".into())?;
    ensure(!verify_realizer(&p, &planted).unwrap().is_ok(), || "verifier accepts planted family".into())?;
    let c = shift_coloring_unchecked(&p, &planted).map_err(|e| e.to_string())?;
    let w = find_monochromatic_shift(&c).ok_or("planted family has no shift")?;
    ensure(w.holds_in(&p, &planted).unwrap(), || "witness does not hold".into())?;
    Ok(format!("{colored} realizers shift-free; planted family rejected ({w})"))
}

/// Non-isomorphic posets on `n` points, each naturally labelled.
fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let rel = |i: usize, j: usize| {
            pairs.iter().position(|&q| q == (i, j)).is_some_and(|b| mask >> b & 1 == 1)
        };
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c)))
        });
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|pi| {
                let mut m = vec![false; n * n];
                for &(i, j) in &pairs {
                    if rel(i, j) {
                        m[pi[i] * n + pi[j]] = true;
                    }
                }
                m
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon) {
            out.push(Poset::from_fn(n, rel).unwrap());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Largest antichain by brute force; equals the least chain cover.
fn width(p: &Poset) -> usize {
    let n = p.len();
    (0u32..(1 << n))
        .filter(|&m| (0..n).all(|i| (0..n).all(|j| i == j || m >> i & 1 == 0 || m >> j & 1 == 0 || !p.comparable(i, j))))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut instances = Vec::new();
    for n in 0..SMALL_POSET_COUNTS.len() {
        let ps = all_posets(n);
        counts.push(ps.len());
        // the identity needs a non-empty poset: ∅ has a one-point lattice but no chains
        if n > 0 {
            instances.extend(ps);
        }
    }
    ensure(counts == SMALL_POSET_COUNTS, || format!("isomorphism classes {counts:?}"))?;
    for seed in 0..POUZET_RANDOM {
        instances.push(random_poset(5, [0.2, 0.4, 0.6][seed as usize % 3], None, 500 + seed));
    }
    for p in &instances {
        let lattice = downset_lattice(p).map_err(|e| e.to_string())?;
        let d = exact_dimension(&lattice);
        let c = chain_cover_number(p);
        let w = width(p);
        ensure(c == w, || format!("chain cover {c} but width {w} on {:?}", p.relation_pairs()))?;
        ensure(d == c, || format!("lattice dimension {d}, chain cover {c} on {:?}", p.relation_pairs()))?;
    }
    within(start, LIMIT_POUZET)?;
    Ok(format!("{} posets (classes on 0..5 points: {counts:?})", instances.len()))
}

fn criterion_10() -> Check {
    let mut posets: Vec<Poset> = calibration_instances().into_iter().map(|(_, p, _)| p).collect();
    posets.extend(bounded_instances());
    for (i, p) in posets.iter().enumerate() {
        let r = rank_function(p);
        for (x, y) in p.relation_pairs() {
            let (a, b) = (r.rank(x), r.rank(y));
            ensure((a.block, a.position) < (b.block, b.position), || format!("instance {i}: {x} < {y} not increasing"))?;
        }
    }
    Ok(format!("{} instances", posets.len()))
}

fn parse_points(label: &str) -> Option<BTreeSet<(usize, usize)>> {
    let inner = label.strip_prefix('{')?.strip_suffix('}')?;
    let mut out = BTreeSet::new();
    for part in inner.split(')').map(|s| s.trim_start_matches(',').trim_start_matches('(')) {
        if part.is_empty() {
            continue;
        }
        let (x, y) = part.split_once(',')?;
        out.insert((x.parse().ok()?, y.parse().ok()?));
    }
    Some(out)
}

fn criterion_11() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for grid in 1..=3 {
        for m in 1..=3 {
            for u in 0..=2 {
                let p = interval_union_poset(grid, m, u, 4096).map_err(|e| e.to_string())?;
                let r = interval_realizer(&p).map_err(|e| e.to_string())?;
                let sets: Vec<BTreeSet<(usize, usize)>> =
                    p.labels().unwrap().iter().map(|l| parse_points(l).unwrap()).collect();
                for a in 0..p.len() {
                    for b in 0..p.len() {
                        if a == b {
                            continue;
                        }
                        let subset = sets[a].is_subset(&sets[b]);
                        let below = r.extensions().iter().all(|e| e.precedes(a, b));
                        ensure(subset == below, || format!("grid={grid} m={m} u={u}: pair {a},{b}"))?;
                    }
                }
                count += 1;
            }
        }
    }
    within(start, LIMIT_INTERVAL)?;
    Ok(format!("{count} instances exact"))
}

fn criterion_12() -> Check {
    let subset_run = || -> Vec<String> {
        [2, 4, 8, 16]
            .iter()
            .map(|&n| {
                let r = construct_subset_realizer(n, 2).unwrap();
                write_realizer(&r.realizer) + &r.provenance()
            })
            .collect()
    };
    ensure(subset_run() == subset_run(), || "subset-code output differs".into())?;
    let bounded_run = || -> Vec<String> {
        bounded_instances()
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let r = bounded_realizer_with(p, None, i as u64).unwrap();
                write_realizer(&r.realizer) + &r.provenance()
            })
            .collect()
    };
    ensure(bounded_run() == bounded_run(), || "bounded output differs".into())?;
    let sweep = parse_sweep(
        "family=subsets n=2,4,8,16 k=2 strategies=subset-code\n\
         family=random n=200 cap=5 density=0.03 seed=1000,1001 strategies=bounded\n",
    )
    .unwrap();
    let csv = || -> String {
        let rows = run_sweep(&sweep, 0, false).unwrap();
        let mut s = CSV_HEADER.to_string();
        for r in rows {
            s.push('\n');
            s.push_str(&r.to_csv_row());
        }
        s
    };
    ensure(csv() == csv(), || "CSV differs".into())?;

    // the same through the binary's entry point, compared as files
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let poset = dir.path().join("p");
    let p = poset.to_str().unwrap();
    let o = posetdim::cli::run(["posetdim", "gen", "--family", "random", "--params", "n=200,cap=5,density=0.03,seed=7", "--out", p]);
    ensure(o.code == 0, || o.stderr.clone())?;
    let mut files = Vec::new();
    for name in ["a", "b"] {
        let out = dir.path().join(name);
        let o = posetdim::cli::run(["posetdim", "realize", "--input", p, "--strategy", "bounded", "--seed", "3", "--out", out.to_str().unwrap()]);
        ensure(o.code == 0, || o.stderr.clone())?;
        files.push((std::fs::read(&out).unwrap(), std::fs::read(dir.path().join(format!("{name}.provenance"))).unwrap()));
    }
    ensure(files[0] == files[1], || "CLI realizer files differ".into())?;
    Ok("realizers, sidecars and CSV byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("oracle calibration", criterion_1),
        ("subset-code realizers", criterion_2),
        ("growth of subset-order dimension", criterion_3),
        ("bounded-predecessor realizers", criterion_4),
        ("separating families", criterion_5),
        ("flag linearizations", criterion_6),
        ("antichain lower bounds", criterion_7),
        ("shift refuter", criterion_8),
        ("down-set lattice dimension equals chain cover number", criterion_9),
        ("rank function", criterion_10),
        ("interval realizer", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
