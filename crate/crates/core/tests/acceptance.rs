//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! a failure status if any criterion fails (including its runtime budget).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use bei_core::bits::low_mask;
use bei_core::classifier::{classify_facets, is_scm_indecomposable, wsize_chain_check};
use bei_core::cutsets::{cutsets_bruteforce, cutsets_closed, cutsets_structural, is_unmixed};
use bei_core::enumerate::{enumerate_closed, enumerate_closed_connected, enumerate_closed_indecomposable};
use bei_core::oracle::*;
use bei_core::{classify, IntervalFacets};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Every oracle report produced during the run, for the Duval/Goodarzi check.
static REPORTS: Mutex<Vec<(Vec<(usize, usize)>, bool, bool)>> = Mutex::new(Vec::new());

fn oracle(f: &IntervalFacets) -> OracleReport {
    let r = oracle_classify_facets(f, Caps::default()).expect("within caps");
    REPORTS.lock().unwrap().push((f.facets().to_vec(), r.scm, r.scm_goodarzi));
    r
}

fn facets(n: usize, f: &[(usize, usize)]) -> IntervalFacets {
    IntervalFacets::new(n, f.to_vec()).unwrap()
}

fn reference_examples() -> Vec<IntervalFacets> {
    vec![
        facets(7, &[(1, 3), (2, 5), (3, 6), (5, 7)]),
        facets(9, &[(1, 3), (2, 6), (3, 7), (4, 8), (5, 9)]),
        facets(7, &[(1, 4), (3, 6), (5, 7)]),
        facets(7, &[(1, 4), (3, 5), (4, 7)]),
    ]
}

type Check = fn() -> String;

fn golden_examples() -> String {
    let ex = reference_examples();
    // classify goes through recognition, so feed scrambled labelings
    let scramble = |f: &IntervalFacets| {
        let n = f.n();
        let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n + 1).collect();
        classify(&f.to_graph().relabel(&perm).unwrap()).unwrap()
    };
    let c: Vec<_> = ex.iter().map(scramble).collect();
    assert!(!c[0].scm, "7-vertex example must not be sCM");
    assert!(c[1].scm, "9-vertex example must be sCM");
    assert!(!c[2].almost_cm, "(1,4),(3,6),(5,7) must not be almost CM");
    assert!(c[3].almost_cm && c[3].scm, "(1,4),(3,5),(4,7) must be almost CM and sCM");
    "4/4 verdicts match".into()
}

fn cutset_structure() -> String {
    let mut graphs = 0;
    let mut records = 0;
    for n in 1..=7 {
        for f in enumerate_closed_connected(n) {
            let key = |recs: Vec<bei_core::cutsets::CutSetRecord>| {
                let mut k: Vec<_> = recs.into_iter().map(|r| (r.w, r.c, r.dim)).collect();
                k.sort();
                k
            };
            let brute = key(cutsets_bruteforce(&f.to_graph()).unwrap());
            let structural = if f.r() >= 2 {
                key(cutsets_structural(&f).unwrap())
            } else {
                key(cutsets_closed(&f).unwrap())
            };
            assert_eq!(structural, brute, "{f:?}");
            graphs += 1;
            records += brute.len();
        }
    }
    format!("{graphs} connected graphs, {records} cut sets identical")
}

fn two_clique_depth() -> String {
    let mut count = 0;
    for n in 3..=7 {
        for a in 2..n {
            for b in a + 1..n {
                let f = facets(n, &[(1, b), (a, n)]);
                let c = stanley_reisner_complex(&initial_ideal_generators(&f), n).unwrap();
                let depth = depth_hochster(&c, Caps::default().max_vars).unwrap();
                assert_eq!(depth, n + a - b + 1, "depth of {f:?}");
                assert_eq!((c.dim() + 1) as usize, n + 1, "dim of {f:?}");
                count += 1;
            }
        }
    }
    format!("{count} two-clique graphs, depth = n + a - b + 1 and dim = n + 1")
}

fn main_theorem() -> String {
    let mut graphs: Vec<IntervalFacets> = (1..=6).flat_map(enumerate_closed_connected).collect();
    graphs.extend(reference_examples());
    for f in &graphs {
        let c = classify_facets(f);
        let r = oracle(f);
        assert_eq!(
            (c.scm, c.cm, c.almost_cm, c.approx_cm, c.krull_dim),
            (r.scm, r.cm, r.almost_cm, r.approx_cm, r.dim_quotient),
            "classifier vs oracle on {f:?}"
        );
    }
    format!("{} graphs (all connected n <= 6 plus 4 examples) agree", graphs.len())
}

fn criterion_equivalences() -> String {
    let mut indecomposable = 0;
    for n in 2..=9 {
        for f in enumerate_closed_indecomposable(n) {
            assert_eq!(wsize_chain_check(&f).unwrap(), is_scm_indecomposable(&f).unwrap().scm, "{f:?}");
            indecomposable += 1;
        }
    }
    let reports = REPORTS.lock().unwrap();
    for (f, duval, goodarzi) in reports.iter() {
        assert_eq!(duval, goodarzi, "Duval vs Goodarzi on {f:?}");
    }
    format!(
        "Duval = Goodarzi on {} oracle runs; chain check = endpoint criterion on {indecomposable} indecomposable graphs",
        reports.len()
    )
}

fn structural_identities() -> String {
    let mut connected = 0;
    for n in 1..=9 {
        for f in enumerate_closed_connected(n) {
            let unmixed = is_unmixed(&cutsets_bruteforce(&f.to_graph()).unwrap());
            assert_eq!(classify_facets(&f).cm, unmixed, "CM vs unmixed on {f:?}");
            connected += 1;
        }
    }
    let mut closed = 0;
    let mut confirmed = 0;
    for n in 1..=9 {
        for f in enumerate_closed(n) {
            let c = classify_facets(&f);
            assert_eq!(c.approx_cm, c.almost_cm, "{f:?}");
            if n <= 8 && c.almost_cm {
                assert!(c.scm, "almost CM but not sCM: {f:?}");
                // oracle confirmation (2n <= 16 variables)
                let r = oracle(&f);
                assert!(r.almost_cm && r.scm && r.approx_cm, "oracle on {f:?}: {r:?}");
                confirmed += 1;
            }
            closed += 1;
        }
    }
    let reports = REPORTS.lock().unwrap();
    format!(
        "CM = unmixed on {connected} connected graphs; approx = almost on {closed} closed graphs \
         and {} oracle runs; almost => sCM confirmed by the oracle on {confirmed} graphs",
        reports.len()
    )
}

fn homology_engine() -> String {
    const CAP: usize = 1 << 20;
    for seed in 0..100u64 {
        let mut rng = SplitMix64::seed_from_u64(seed);
        let n = 3 + (rng.next_u64() % 6) as usize;
        let k = 1 + (rng.next_u64() % 6) as usize;
        let c = SimplicialComplex::from_facets(n, (0..k).map(|_| rng.next_u64() & low_mask(n))).unwrap();
        assert!(boundary_squared_is_zero(&c, CAP).unwrap(), "seed {seed}: {c:?}");
        // reduced_homology asserts the Euler identity itself; check it here too
        let f = c.f_vector(CAP).unwrap();
        let chi: i64 = f.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { x as i64 } else { -(x as i64) }).sum();
        assert_eq!(reduced_homology(&c, CAP).unwrap().euler_characteristic(), chi, "seed {seed}");
    }
    for d in 0..=4isize {
        let sphere = SimplicialComplex::simplex_boundary(d as usize + 2).unwrap();
        let h = reduced_homology(&sphere, CAP).unwrap();
        let want: std::collections::BTreeMap<isize, usize> = [(d, 1)].into();
        assert_eq!(h.reduced_betti(), want, "boundary of the {}-simplex", d + 1);
    }
    "100 random complexes, spheres of dimension 0..=4".into()
}

fn main() {
    let criteria: [(u32, &str, Check, Duration); 7] = [
        (1, "golden examples", golden_examples, Duration::from_secs(1)),
        (2, "cut-set structure", cutset_structure, Duration::from_secs(120)),
        (3, "two-clique depth", two_clique_depth, Duration::from_secs(300)),
        (4, "classifier vs oracle", main_theorem, Duration::from_secs(1800)),
        (6, "structural identities", structural_identities, Duration::from_secs(1800)),
        (7, "homology engine", homology_engine, Duration::from_secs(60)),
        // last, so it sees every oracle run above
        (5, "criterion equivalences", criterion_equivalences, Duration::from_secs(60)),
    ];
    let mut lines = Vec::new();
    let mut failed = false;
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(detail) if elapsed <= budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over the {budget:?} budget")),
            Err(e) => (
                "FAIL",
                e.downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into()),
            ),
        };
        failed |= status == "FAIL";
        lines.push((id, format!("criterion {id} [{status}] {name} ({elapsed:.2?}): {detail}")));
    }
    lines.sort_by_key(|l| l.0);
    for (_, line) in &lines {
        println!("{line}");
    }
    if failed {
        std::process::exit(1);
    }
}
