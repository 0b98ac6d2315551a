//! Acceptance criteria, one line of output per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use smallblocks::blocks::{
    block_partition, block_partition_with, principal_summary, residue_embedding, verify_domination,
};
use smallblocks::census::{builtin_corpus, find_builtin, primes_to_test};
use smallblocks::chartab::{
    character_table, character_table_with_prime, next_dixon_prime, verify_orthogonality, Cyclotomic,
};
use smallblocks::cyclic::dade_k;
use smallblocks::grp::{alternating, local_data, prime_factors, symmetric, Group, Perm};
use smallblocks::parts::{
    core_classes, cores_up_to, count_with_core, k_olsson, mo83_identity_check, partition_counts,
    Partition,
};

type Outcome = Result<String, String>;

fn build(name: &str) -> Result<Group, String> {
    find_builtin(name)
        .and_then(|e| e.build())
        .map_err(|e| e.to_string())
}

fn kb0(g: &Group, p: u64) -> Result<usize, String> {
    Ok(principal_summary(g, p).map_err(|e| e.to_string())?.k_b0)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Result<Vec<(String, Group)>, String> {
    builtin_corpus()
        .into_iter()
        .map(|e| Ok((e.name.clone(), e.build().map_err(|x| x.to_string())?)))
        .collect()
}

fn theorem_b_census() -> Outcome {
    let six = ["c3c3_c4", "c3c3_q8", "c3c3_c2inv", "c9xc2"];
    let mut names: Vec<String> = builtin_corpus()
        .into_iter()
        .map(|e| e.name)
        .filter(|n| n.starts_with("c3c3_"))
        .collect();
    ensure(names.len() == 9, || {
        format!("{} (C3xC3) local groups", names.len())
    })?;
    names.push("c9".into());
    names.push("c9xc2".into());
    let mut seen = Vec::new();
    for name in &names {
        let g = build(name)?;
        let k = kb0(&g, 3)?;
        let classes = character_table(&g).map_err(|e| e.to_string())?.len();
        ensure(k == 6 || k == 9, || format!("{name}: kB0 = {k}"))?;
        ensure(classes == k, || {
            format!("{name}: k(G) = {classes} but kB0 = {k}")
        })?;
        ensure((k == 6) == six.contains(&name.as_str()), || {
            format!("{name}: kB0 = {k}")
        })?;
        seen.push(format!("{name}={k}"));
    }
    Ok(seen.join(" "))
}

fn dade_consistency() -> Outcome {
    let cases = [
        ("c9xc2", 3, 6),
        ("c7c6", 7, 7),
        ("c7c3", 7, 5),
        ("c5c4", 5, 5),
        ("alt5", 5, 4),
        ("s3", 3, 3),
    ];
    let mut seen = Vec::new();
    for (name, p, expected) in cases {
        let g = build(name)?;
        let local = local_data(&g, p).map_err(|e| e.to_string())?;
        ensure(local.sylow.is_cyclic(), || {
            format!("{name}: Sylow not cyclic")
        })?;
        let f = local.inertial_index();
        let d = dade_k(local.sylow.order(), f).map_err(|e| e.to_string())?;
        let k = kb0(&g, p)?;
        ensure(d == k as u64 && k == expected, || {
            format!(
                "{name} p={p}: dade_k({}, {f}) = {d}, kB0 = {k}, expected {expected}",
                local.sylow.order()
            )
        })?;
        seen.push(format!("{name}:{k}"));
    }
    Ok(seen.join(" "))
}

fn small_block_rows() -> Outcome {
    let plain = [
        ("c2", 2, 2),
        ("s3", 3, 3),
        ("d8", 2, 5),
        ("q8", 2, 5),
        ("sl23", 2, 5),
    ];
    let mut failures = Vec::new();
    for (name, p, expected) in plain {
        let k = kb0(&build(name)?, p)?;
        if k != expected {
            failures.push(format!("{name} at p={p}: kB0 = {k}, expected {expected}"));
        }
    }
    for (name, p, expected, nc) in [("alt5", 5, 4, 2), ("c7c6", 7, 7, 6)] {
        let g = build(name)?;
        let k = kb0(&g, p)?;
        let f = local_data(&g, p)
            .map_err(|e| e.to_string())?
            .inertial_index();
        if k != expected || f != nc {
            failures.push(format!(
                "{name} at p={p}: kB0 = {k}, |N/C| = {f}, expected {expected}, {nc}"
            ));
        }
    }
    if failures.is_empty() {
        Ok("all rows match".into())
    } else {
        Err(failures.join("; "))
    }
}

fn partition_identities() -> Outcome {
    let err = |e: smallblocks::parts::PartsError| e.to_string();
    ensure(k_olsson(2, 2).map_err(err)? == 5, || "k(2,2) != 5".into())?;
    ensure(
        count_with_core(4, 2, &Partition::empty()).map_err(err)? == 5,
        || "(4,2,empty) != 5".into(),
    )?;
    let one = Partition::new(vec![1]).map_err(err)?;
    ensure(count_with_core(5, 2, &one).map_err(err)? == 5, || {
        "(5,2,(1)) != 5".into()
    })?;
    let p = partition_counts(30);
    for n in 0..=30u32 {
        for e in 1..=6u32 {
            let mut total = 0;
            for mu in cores_up_to(n, e) {
                total += count_with_core(n, e, &mu).map_err(err)?;
            }
            ensure(total == p[n as usize], || {
                format!("n={n} e={e}: {total} != p(n)")
            })?;
        }
        for q in [2, 3, 5, 7] {
            if n >= 1 {
                ensure(mo83_identity_check(n, q).map_err(err)?, || {
                    format!("principal block size changes at n={n} p={q}")
                })?;
            }
        }
    }
    Ok("k(2,2)=5, core counts, p(n) sums, residue stability".into())
}

fn symmetric_cross_oracle() -> Outcome {
    let mut s6 = Vec::new();
    for n in 1..=7usize {
        let g = symmetric(n);
        let t = character_table(&g).map_err(|e| e.to_string())?;
        for p in [2u64, 3, 5, 7] {
            let mut blocks = block_partition(&t, p).map_err(|e| e.to_string())?.sizes();
            blocks.sort_unstable();
            let mut cores: Vec<usize> = core_classes(n as u32, p as u32)
                .map_err(|e| e.to_string())?
                .values()
                .map(|&c| c as usize)
                .collect();
            cores.sort_unstable();
            ensure(blocks == cores, || {
                format!("Sym({n}) p={p}: blocks {blocks:?}, cores {cores:?}")
            })?;
            if n == 6 && p == 3 {
                s6 = blocks;
            }
        }
    }
    ensure(s6 == vec![1, 1, 9], || format!("Sym(6) p=3: {s6:?}"))?;
    Ok("Sym(1..7) at p in {2,3,5,7}; Sym(6) p=3 -> {9,1,1}".into())
}

fn sorted_rows(rows: Vec<Vec<Cyclotomic>>) -> Vec<Vec<Vec<i64>>> {
    let mut out: Vec<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.coeffs().to_vec()).collect())
        .collect();
    out.sort();
    out
}

fn table_invariants() -> Outcome {
    let groups = corpus()?;
    for (name, g) in &groups {
        let t = character_table(g).map_err(|e| format!("{name}: {e}"))?;
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(sum == g.order(), || format!("{name}: sum of squares {sum}"))?;
        ensure(t.degrees().iter().all(|d| g.order() % d == 0), || {
            format!("{name}: degree not dividing |G|")
        })?;
        ensure(verify_orthogonality(&t), || {
            format!("{name}: orthogonality")
        })?;
        let ell = next_dixon_prime(g.order(), g.exponent(), t.dixon_prime());
        let t2 = character_table_with_prime(g, ell).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            sorted_rows(t.rows_at_exponent()) == sorted_rows(t2.rows_at_exponent()),
            || {
                format!(
                    "{name}: table changes between primes {} and {ell}",
                    t.dixon_prime()
                )
            },
        )?;
    }
    Ok(format!("{} corpus groups", groups.len()))
}

fn coprime(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

fn root_choice_invariance() -> Outcome {
    let groups = corpus()?;
    let mut pairs = 0;
    for (name, g) in &groups {
        let t = character_table(g).map_err(|e| e.to_string())?;
        for p in primes_to_test(g) {
            let base = residue_embedding(t.exponent() as u32, p);
            let reference = block_partition_with(&t, &base).map_err(|e| e.to_string())?;
            for r in (2..base.root_order()).filter(|&r| coprime(r, base.root_order())) {
                let other = block_partition_with(&t, &base.with_root_power(r))
                    .map_err(|e| e.to_string())?;
                ensure(other.blocks == reference.blocks, || {
                    format!("{name} p={p}: root power {r} changes blocks")
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (group, p) pairs"))
}

fn height_zero() -> Outcome {
    let groups = corpus()?;
    for (name, g) in &groups {
        for p in prime_factors(g.order()) {
            let s = principal_summary(g, p).map_err(|e| e.to_string())?;
            let abelian = local_data(g, p).is_ok();
            if abelian {
                ensure(s.k_b0 == s.k0_b0, || {
                    format!("{name} p={p}: k={} k0={}", s.k_b0, s.k0_b0)
                })?;
            }
            ensure(s.k0_b0 >= 2, || format!("{name} p={p}: k0 = {}", s.k0_b0))?;
        }
    }
    let d8 = principal_summary(&build("d8")?, 2).map_err(|e| e.to_string())?;
    ensure(d8.k0_b0 == 4, || format!("D8: k0 = {}", d8.k0_b0))?;
    Ok("abelian Sylow => k = k0; k0(B0(D8)) = 4; k0 >= 2".into())
}

fn domination() -> Outcome {
    let s4 = symmetric(4);
    let v4 = Group::generate(
        4,
        vec![
            Perm::parse_cycles(4, "(0 1)(2 3)").map_err(|e| e.to_string())?,
            Perm::parse_cycles(4, "(0 2)(1 3)").map_err(|e| e.to_string())?,
        ],
    )
    .map_err(|e| e.to_string())?;
    let a = verify_domination(&s4, &v4, 3).map_err(|e| e.to_string())?;
    ensure(a.passed() && a.equality == Some(true), || {
        format!("(S4, V4, 3): {a:?}")
    })?;
    let b = verify_domination(&s4, &alternating(4), 2).map_err(|e| e.to_string())?;
    ensure(b.passed() && b.inclusion, || format!("(S4, A4, 2): {b:?}"))?;
    Ok("(S4,V4,3) equality; (S4,A4,2) inclusion".into())
}

fn psl27() -> Outcome {
    let g = build("psl27")?;
    let k = kb0(&g, 7)?;
    let classes = character_table(&g).map_err(|e| e.to_string())?.len();
    let q = 7;
    ensure(k == (q + 3) / 2 && classes == (q + 5) / 2, || {
        format!("kB0 = {k}, k(G) = {classes}")
    })?;
    Ok(format!("kB0 = {k}, k(G) = {classes}"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        (
            "k(B0)=6 exactly for C4, Q8, C2 by inversion and C9:C2",
            5,
            theorem_b_census,
        ),
        ("Dade formula matches block count", 5, dade_consistency),
        ("small-block spot rows", 10, small_block_rows),
        ("partition identities", 5, partition_identities),
        (
            "symmetric-group block sizes match p-core counts",
            60,
            symmetric_cross_oracle,
        ),
        (
            "character-table invariants over the corpus",
            90,
            table_invariants,
        ),
        (
            "block partition independent of root choice",
            120,
            root_choice_invariance,
        ),
        ("height-zero counts", 120, height_zero),
        ("domination through quotients", 10, domination),
        ("PSL(2,7) at p=7", 5, psl27),
    ];
    let mut results = BTreeMap::new();
    for (i, (label, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget}s"))
            }
            o => o,
        };
        let n = i + 1;
        match &outcome {
            Ok(msg) => println!("PASS criterion {n:>2}: {label} ({msg}) [{elapsed:.2?}]"),
            Err(msg) => println!("FAIL criterion {n:>2}: {label}: {msg} [{elapsed:.2?}]"),
        }
        results.insert(n, outcome.is_ok());
    }
    let failed: Vec<usize> = results
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(n, _)| *n)
        .collect();
    println!(
        "acceptance: {} passed, {} failed",
        results.len() - failed.len(),
        failed.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
