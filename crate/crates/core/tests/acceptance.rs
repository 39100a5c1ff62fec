//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any fails. Time limits are wall-clock.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use shiftop::diffformula::{
    sl11_closed_form, sl21_closed_form, sl_m_in_sl_m1_by_shift, super_branching_table,
};
use shiftop::occupancy::Occupancy;
use shiftop::oracle::{hook_length_dimension, oracle_hook_schur, oracle_pieri, oracle_vandermonde, oracle_y_graded};
use shiftop::partitions::{lambda_from_super_m, super_m_from_lambda};
use shiftop::report::OccupancyReport;
use shiftop::{
    occupancy_table, sl_m_in_sl_m1_branching, super_branching_multiplicity, super_multiplicity,
    verify_symmetry_identities, Backend, HookPartition, MVector, Multiplicities, Partition,
    SpinConfig, SuperMVector, SuperMultiplicities, SuperRootSubset,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn super_lambda(m_vec: &[i64], total: i64, m: usize, n: usize) -> Result<HookPartition, String> {
    let mv = SuperMVector::new(m_vec.to_vec(), total, m, n).map_err(|e| e.to_string())?;
    lambda_from_super_m(&mv).map_err(|e| e.to_string())
}

fn check_super_table(m: usize, n: usize, rows: &[([i64; 2], &[usize], i64)]) -> Result<usize, String> {
    let sm = SuperMultiplicities::new(m, n, 1, 6, Backend::Dp);
    for (mv, shape, mu) in rows {
        let lam = HookPartition::new(Partition::new(shape.to_vec()).unwrap(), m, n).unwrap();
        let got = super_multiplicity(&lam, 1, 6).map_err(|e| e.to_string())?;
        ensure(got == big(*mu), || format!("sl({m}|{n}) {lam}: got {got}, want {mu}"))?;
        let via_m = sm.at(mv);
        ensure(via_m == big(*mu), || format!("sl({m}|{n}) M={mv:?}: got {via_m}, want {mu}"))?;
    }
    let table = sm.table();
    ensure(table.len() == rows.len(), || format!("table has {} rows, expected {}", table.len(), rows.len()))?;
    Ok(rows.len())
}

fn c1_sl21() -> Outcome {
    let rows: [([i64; 2], &[usize], i64); 10] = [
        ([0, 0], &[6], 1),
        ([1, 0], &[5, 1], 5),
        ([2, 0], &[4, 2], 9),
        ([2, 1], &[4, 1, 1], 10),
        ([3, 0], &[3, 3], 5),
        ([3, 1], &[3, 2, 1], 16),
        ([3, 2], &[3, 1, 1, 1], 10),
        ([4, 2], &[2, 2, 1, 1], 9),
        ([4, 3], &[2, 1, 1, 1, 1], 5),
        ([5, 4], &[1, 1, 1, 1, 1, 1], 1),
    ];
    for (mv, shape, _) in &rows {
        let lam = super_lambda(mv, 6, 2, 1)?;
        ensure(lam.shape().parts() == *shape, || format!("M={mv:?} decodes to {lam}"))?;
    }
    let n = check_super_table(2, 1, &rows)?;
    Ok(format!("{n} rows exact"))
}

fn c2_sl12() -> Outcome {
    // (1,1,1,1,1,1) sits at M = (5,0); the series at (6,6) also gives 1.
    let rows: [([i64; 2], &[usize], i64); 10] = [
        ([0, 0], &[6], 1),
        ([1, 0], &[5, 1], 5),
        ([2, 0], &[4, 1, 1], 10),
        ([2, 1], &[4, 2], 9),
        ([3, 0], &[3, 1, 1, 1], 10),
        ([3, 1], &[3, 2, 1], 16),
        ([4, 0], &[2, 1, 1, 1, 1], 5),
        ([4, 1], &[2, 2, 1, 1], 9),
        ([4, 2], &[2, 2, 2], 5),
        ([5, 0], &[1, 1, 1, 1, 1, 1], 1),
    ];
    for (mv, shape, _) in &rows {
        let lam = super_lambda(mv, 6, 1, 2)?;
        ensure(lam.shape().parts() == *shape, || format!("M={mv:?} decodes to {lam}"))?;
    }
    let n = check_super_table(1, 2, &rows)?;
    let printed = SuperMultiplicities::new(1, 2, 1, 6, Backend::Dp).at(&[6, 6]);
    ensure(printed == big(1), || format!("printed row (6,6) evaluates to {printed}"))?;

    // conjugation duality against sl(2|1)
    for (_, (lam, mu)) in SuperMultiplicities::new(2, 1, 1, 6, Backend::Dp).table() {
        let dual = super_multiplicity(&lam.conjugate(), 1, 6).map_err(|e| e.to_string())?;
        ensure(dual == mu, || format!("duality fails at {lam}: {mu} vs {dual}"))?;
    }
    Ok(format!("{n} rows exact, duality holds"))
}

const SL2_ROWS: [([i64; 2], i64); 16] = [
    ([0, 0], 1), ([1, 0], 5), ([1, 1], 6), ([2, 0], 9), ([2, 1], 24), ([2, 2], 15),
    ([3, 0], 5), ([3, 1], 30), ([3, 2], 45), ([3, 3], 20), ([4, 2], 30), ([4, 3], 40),
    ([4, 4], 15), ([5, 4], 15), ([5, 5], 6), ([6, 6], 1),
];

const SL11_1_ROWS: [([i64; 2], i64); 22] = [
    ([0, 0], 1), ([1, 0], 6), ([2, 0], 15), ([2, 1], 15), ([3, 0], 20), ([3, 1], 40),
    ([3, 2], 20), ([4, 0], 15), ([4, 1], 45), ([4, 2], 45), ([4, 3], 15), ([5, 0], 6),
    ([5, 1], 24), ([5, 2], 36), ([5, 3], 24), ([5, 4], 6), ([6, 0], 1), ([6, 1], 5),
    ([6, 2], 10), ([6, 3], 10), ([6, 4], 5), ([6, 5], 1),
];

const SL11_2_ROWS: [([i64; 2], i64); 22] = [
    ([0, 0], 1), ([1, 0], 6), ([1, 1], 5), ([2, 0], 15), ([2, 1], 24), ([2, 2], 10),
    ([3, 0], 20), ([3, 1], 45), ([3, 2], 36), ([3, 3], 10), ([4, 0], 15), ([4, 1], 40),
    ([4, 2], 45), ([4, 3], 24), ([4, 4], 5), ([5, 0], 6), ([5, 1], 15), ([5, 2], 20),
    ([5, 3], 15), ([5, 4], 6), ([5, 5], 1), ([6, 0], 1),
];

fn c3_branching() -> Outcome {
    let mut counts = Vec::new();
    for (roots, rows) in [
        ("L1-L2", &SL2_ROWS[..]),
        ("L2-K1", &SL11_1_ROWS[..]),
        ("L1-K1", &SL11_2_ROWS[..]),
    ] {
        let sub = SuperRootSubset::parse(2, 1, roots).map_err(|e| e.to_string())?;
        for (mv, mu) in rows {
            let got = super_branching_multiplicity(mv, &sub, 1, 6).map_err(|e| e.to_string())?;
            ensure(got == big(*mu), || format!("{roots} M={mv:?}: got {got}, want {mu}"))?;
        }
        let table = super_branching_table(&sub, 1, 6, Backend::Dp);
        let want: BTreeMap<Vec<i64>, BigInt> = rows.iter().map(|(m, v)| (m.to_vec(), big(*v))).collect();
        ensure(table == want, || format!("{roots}: table differs from the listed rows"))?;
        counts.push(rows.len().to_string());
    }
    Ok(format!("{} rows exact", counts.join(" + ")))
}

fn c4_theorem() -> Outcome {
    let mut checked = 0usize;
    let mut grids: Vec<(usize, SpinConfig)> = Vec::new();
    for r in 1..=3 {
        for two_s in 1..=4 {
            for l in 1..=6 {
                grids.push((r, SpinConfig::uniform(two_s, l).unwrap()));
            }
        }
        for list in [vec![1, 2], vec![3, 1, 2], vec![4, 2, 2, 1], vec![1, 1, 3, 4]] {
            grids.push((r, SpinConfig::new(list).unwrap()));
        }
    }
    for (r, spins) in grids {
        let diff = Multiplicities::new(&spins, r, Backend::Dp);
        let vdm = oracle_vandermonde(&spins, r);
        let pieri = oracle_pieri(&spins, r);
        ensure(vdm == pieri, || format!("oracles disagree at r={r} spins={spins}"))?;
        for (_, (lam, mu)) in diff.table() {
            ensure(mu == vdm.get(&lam), || {
                format!("r={r} spins={spins} lambda={lam}: diff {mu}, oracle {}", vdm.get(&lam))
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} multiplicities, 0 mismatches"))
}

fn c5_hook_length() -> Outcome {
    let mut checked = 0;
    for r in 1..=4 {
        for l in 1..=8 {
            let diff = Multiplicities::new(&SpinConfig::uniform(1, l).unwrap(), r, Backend::Dp);
            for (_, (lam, mu)) in diff.table() {
                let dim = hook_length_dimension(&lam);
                ensure(mu == dim, || format!("r={r} L={l} {lam}: {mu} vs {dim}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} diagrams"))
}

fn c6_pieri() -> Outcome {
    let mut checked = 0;
    for r in 1..=3usize {
        for a in 1..=6u32 {
            for b in a..=6u32 {
                let spins = SpinConfig::new(vec![b, a]).unwrap();
                let expected: BTreeSet<Partition> =
                    (0..=a as usize).map(|k| Partition::new(vec![(a + b) as usize - k, k]).unwrap()).collect();
                for (_, (lam, mu)) in Multiplicities::new(&spins, r, Backend::Dp).table() {
                    let want = if expected.contains(&lam) { 1 } else { 0 };
                    ensure(mu == big(want), || format!("r={r} 2s'={b} 2s={a} {lam}: {mu}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} diagrams"))
}

fn c7_symmetry() -> Outcome {
    let mut checked = 0;
    for r in 1..=3 {
        for two_s in 1..=3 {
            for l in 1..=5 {
                let rep = verify_symmetry_identities(&SpinConfig::uniform(two_s, l).unwrap(), r);
                if let Some(v) = rep.violations.first() {
                    return Err(format!("r={r} 2s={two_s} L={l}: {v:?}"));
                }
                checked += rep.checked;
            }
        }
    }
    Ok(format!("{checked} identities, 0 violations"))
}

fn c8_a1() -> Outcome {
    let mut checked = 0;
    for two_s in 1..=6u32 {
        for l in 1..=12usize {
            let spins = SpinConfig::uniform(two_s, l).unwrap();
            let occ = Occupancy::<BigInt>::ordinary(&spins, 1, Backend::Dp);
            let oracle = oracle_pieri(&spins, 1);
            let t = spins.total_degree() as i64;
            for m in 0..=t {
                ensure(occ.coefficient(&[m]) == occ.coefficient(&[t - m]), || {
                    format!("palindrome fails at 2s={two_s} L={l} M={m}")
                })?;
                if 2 * m <= t {
                    let lam = Partition::new(vec![(t - m) as usize, m as usize]).unwrap();
                    let mu = occ.coefficient(&[m]) - occ.coefficient(&[m - 1]);
                    ensure(mu == oracle.get(&lam), || format!("2s={two_s} L={l} M={m}: {mu}"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values"))
}

fn c9_closed_forms() -> Outcome {
    let mut checked = 0;
    for two_s in 1..=2u32 {
        for l in 1..=20usize {
            let total = two_s as usize * l;
            for shape in Partition::all_in_hook(total, 1, 1) {
                let lam = HookPartition::new(shape, 1, 1).unwrap();
                let m = super_m_from_lambda(&lam, total as u64).unwrap().entries()[0];
                let got = super_multiplicity(&lam, two_s, l).map_err(|e| e.to_string())?;
                let want = sl11_closed_form(l, m);
                ensure(got == want, || format!("sl(1|1) 2s={two_s} L={l} {lam}: {got} vs {want}"))?;
                checked += 1;
            }
        }
    }
    for l in 1..=10usize {
        let sm = SuperMultiplicities::new(2, 1, 1, l, Backend::Dp);
        for mv in MVector::all_standard(2, l as i64) {
            let (m1, m2) = (mv.entries()[0], mv.entries()[1]);
            let got = sm.at(mv.entries());
            let want = sl21_closed_form(l, m1, m2);
            ensure(got == want, || format!("sl(2|1) L={l} M=({m1},{m2}): {got} vs {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} values"))
}

fn c10_conjecture() -> Outcome {
    let mut checked = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for two_s in 1..=2u32 {
            for l in 1..=6usize {
                let oracle = oracle_hook_schur(two_s, l, m, n).map_err(|e| e.to_string())?;
                let table = SuperMultiplicities::new(m, n, two_s, l, Backend::Dp).table();
                for (_, (lam, mu)) in table {
                    let want = oracle.get(&lam).cloned().unwrap_or_default();
                    ensure(mu == want, || {
                        format!("sl({m}|{n}) 2s={two_s} L={l} {lam}: formula {mu}, oracle {want}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} multiplicities, 0 mismatches"))
}

fn c11_sl_m() -> Outcome {
    let mut checked = 0;
    for (m, two_s, l) in [(2usize, 1u32, 6usize), (2, 3, 4), (3, 1, 5), (3, 3, 3)] {
        let oracle = oracle_y_graded(two_s, l, m);
        let total = two_s as usize * l;
        for charge in 0..=l.min(total) {
            for lam in Partition::all_of_size(total - charge, m) {
                let want = oracle.get(&(charge, lam.clone())).cloned().unwrap_or_default();
                let prop = sl_m_in_sl_m1_branching(&lam, m, charge, two_s, l).map_err(|e| e.to_string())?;
                let shift = sl_m_in_sl_m1_by_shift(&lam, m, charge, two_s, l).map_err(|e| e.to_string())?;
                ensure(prop == want && shift == want, || {
                    format!("m={m} 2s={two_s} L={l} y^{charge} {lam}: {prop}/{shift} vs {want}")
                })?;
                checked += 1;
            }
        }
    }
    let lam = Partition::new(vec![4, 1]).unwrap();
    ensure(sl_m_in_sl_m1_branching(&lam, 2, 1, 1, 6).unwrap() == big(24), || "y S_(4,1) != 24".into())?;
    Ok(format!("{checked} coefficients"))
}

fn c12_backends() -> Outcome {
    let mut checked = 0;
    for r in 1..=3 {
        for two_s in 1..=4 {
            for l in 1..=6 {
                let spins = SpinConfig::uniform(two_s, l).unwrap();
                let occ = Occupancy::<BigInt>::ordinary(&spins, r, Backend::Dp);
                for mv in MVector::all_standard(r, spins.total_degree() as i64) {
                    let (a, b) = (
                        occ.coefficient_with(Backend::Dp, mv.entries()),
                        occ.coefficient_with(Backend::Poly, mv.entries()),
                    );
                    ensure(a == b, || format!("r={r} 2s={two_s} L={l} M={mv}: {a} vs {b}"))?;
                    checked += 1;
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let r = rng.gen_range(1..=4);
        let sites = rng.gen_range(1..=8);
        let list: Vec<u32> = (0..sites).map(|_| rng.gen_range(1..=5)).collect();
        let spins = SpinConfig::new(list).unwrap();
        let mut cap = spins.total_degree() as i64;
        let entries: Vec<i64> = (0..r)
            .map(|_| {
                cap = rng.gen_range(0..=cap);
                cap
            })
            .collect();
        let occ = Occupancy::<BigInt>::ordinary(&spins, r, Backend::Dp);
        let (a, b) = (occ.coefficient_with(Backend::Dp, &entries), occ.coefficient_with(Backend::Poly, &entries));
        ensure(a == b, || format!("random r={r} spins={spins} M={entries:?}: {a} vs {b}"))?;
        // zero-extension on a shifted-off argument
        let mut off = entries.clone();
        off[r - 1] = -1;
        ensure(
            occ.coefficient_with(Backend::Dp, &off) == big(0) && occ.coefficient_with(Backend::Poly, &off) == big(0),
            || "zero-extension".into(),
        )?;
        checked += 1;
    }
    let render = || {
        let spins = SpinConfig::new(vec![3, 1, 2, 2]).unwrap();
        let t = occupancy_table(&spins, 3, true, Backend::Dp);
        let diff = Multiplicities::new(&spins, 3, Backend::Poly).table();
        let mut s = serde_json::to_string(&OccupancyReport::from(&t)).unwrap();
        for (m, (lam, mu)) in diff {
            s.push_str(&format!("{m:?}\t{lam}\t{mu}\n"));
        }
        s
    };
    let first = render();
    for _ in 0..3 {
        ensure(render() == first, || "repeated run differs".into())?;
    }
    Ok(format!("{checked} comparisons, output byte-identical across runs"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "sl(2|1) table, L=6", limit: Duration::from_secs(1), run: c1_sl21 },
        Criterion { id: 2, name: "sl(1|2) table and conjugation duality", limit: Duration::from_secs(1), run: c2_sl12 },
        Criterion { id: 3, name: "sl(2|1) subalgebra branching tables", limit: Duration::from_secs(5), run: c3_branching },
        Criterion { id: 4, name: "difference formula == Vandermonde == Pieri", limit: Duration::from_secs(600), run: c4_theorem },
        Criterion { id: 5, name: "hook-length identity at s=1/2", limit: Duration::from_secs(60), run: c5_hook_length },
        Criterion { id: 6, name: "L=2 Pieri indicator", limit: Duration::from_secs(60), run: c6_pieri },
        Criterion { id: 7, name: "adjacent-transposition identities", limit: Duration::from_secs(60), run: c7_symmetry },
        Criterion { id: 8, name: "A1 closed form and palindrome", limit: Duration::from_secs(60), run: c8_a1 },
        Criterion { id: 9, name: "sl(1|1) and sl(2|1) closed forms", limit: Duration::from_secs(60), run: c9_closed_forms },
        Criterion { id: 10, name: "super conjecture vs hook-Schur oracle", limit: Duration::from_secs(600), run: c10_conjecture },
        Criterion { id: 11, name: "sl(m) in sl(m|1) vs y-graded Schur expansion", limit: Duration::from_secs(60), run: c11_sl_m },
        Criterion { id: 12, name: "DP/polynomial backend equivalence, determinism", limit: Duration::from_secs(120), run: c12_backends },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {:?}", c.limit)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {:>2} {} ({:.2} s): {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
