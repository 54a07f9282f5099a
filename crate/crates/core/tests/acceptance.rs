//! Exit criteria. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any fails.

use std::time::{Duration, Instant};

use lac::{
    count_arrangements, count_combinations, count_lists, count_mode, count_permutations, enumerate,
    factorial, oracle_enumerate, rank, unrank, Alphabet, LacParams, Mode, Natural, Selection,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn lp(n: usize, p: usize) -> LacParams {
    LacParams::new(n, p)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Median wall time of `runs` calls after one warm-up call.
fn median_time<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut last = f();
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let t = Instant::now();
            last = f();
            t.elapsed()
        })
        .collect();
    times.sort();
    (last, times[runs / 2])
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn worked_example() -> Outcome {
    let (counts, elapsed) = median_time(5, || {
        (
            count_lists(lp(5, 2)),
            count_arrangements(lp(5, 2)),
            count_combinations(lp(5, 2)),
        )
    });
    let expected = (
        Natural::from(25u64),
        Natural::from(20u64),
        Natural::from(10u64),
    );
    ensure(counts == expected, || format!("got {counts:?}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("25 / 20 / 10 in {elapsed:?}"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = lac::cli::run(
        std::iter::once("lac").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn matrix_fidelity() -> Outcome {
    let mut report = Vec::new();
    for (mode, expected) in [("list", 25), ("arrangement", 20), ("combination", 10)] {
        let ((code, text), elapsed) =
            median_time(5, || run_cli(&["matrix", "--mode", mode, "--n", "5"]));
        ensure(code == 0, || format!("{mode}: exit {code}"))?;
        let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(' ').collect()).collect();
        ensure(rows.len() == 5 && rows.iter().all(|r| r.len() == 5), || {
            format!("{mode}: not a 5x5 grid:\n{text}")
        })?;
        let mut filled = 0;
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let want_filled = match mode {
                    "list" => true,
                    "arrangement" => i != j,
                    _ => i < j,
                };
                let is_filled = *cell != "·";
                ensure(is_filled == want_filled, || {
                    format!("{mode}: cell ({i},{j}) = {cell:?}")
                })?;
                if is_filled {
                    let sym = |k: usize| (b'a' + k as u8) as char;
                    ensure(*cell == format!("{}{}", sym(i), sym(j)), || {
                        format!("{mode}: cell ({i},{j}) = {cell:?}")
                    })?;
                    filled += 1;
                }
            }
        }
        ensure(filled == expected, || {
            format!("{mode}: {filled} filled, want {expected}")
        })?;
        within(elapsed, Duration::from_millis(1))?;
        report.push(format!("{mode} {filled} in {elapsed:?}"));
    }
    Ok(report.join(", "))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut selections = 0u64;
    for n in 0..=6 {
        let alphabet = Alphabet::default_for(n);
        for p in 0..=4 {
            for mode in Mode::ALL {
                if mode == Mode::Permutation && p != n {
                    continue;
                }
                let prod: Vec<Selection> = enumerate(&alphabet, p, mode)
                    .map_err(|e| e.to_string())?
                    .collect();
                let oracle: Vec<Selection> = oracle_enumerate(&alphabet, p, mode)
                    .map_err(|e| e.to_string())?
                    .collect();
                if let Some(pos) =
                    (0..prod.len().max(oracle.len())).find(|&i| prod.get(i) != oracle.get(i))
                {
                    return Err(format!("n={n} p={p} {mode}: diverge at {pos}"));
                }
                let count = count_mode(lp(n, p), mode).map_err(|e| e.to_string())?;
                ensure(Natural::from(prod.len()) == count, || {
                    format!("n={n} p={p} {mode}: length {} vs count {count}", prod.len())
                })?;
                cases += 1;
                selections += prod.len() as u64;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "{cases} cases, {selections} selections in {elapsed:?}"
    ))
}

fn permutation_identity() -> Outcome {
    for n in 0..=10 {
        let f = factorial(n);
        ensure(
            count_arrangements(lp(n, n)) == f && count_permutations(n) == f,
            || format!("n={n}"),
        )?;
    }
    ensure(factorial(0) == Natural::one(), || "0! != 1".into())?;
    Ok("n = 0..10".into())
}

fn ratio_law() -> Outcome {
    let mut checked = 0;
    for n in 0..=12 {
        for p in 0..=n {
            let lhs = count_arrangements(lp(n, p));
            let rhs = count_combinations(lp(n, p)) * factorial(p);
            ensure(lhs == rhs, || format!("n={n} p={p}: {lhs} vs {rhs}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, p) pairs"))
}

fn random_selection(rng: &mut StdRng, n: usize, p: usize, mode: Mode) -> Selection {
    let indices = match mode {
        Mode::List => (0..p).map(|_| rng.gen_range(0..n)).collect(),
        Mode::Arrangement | Mode::Permutation => {
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            all.truncate(p);
            all
        }
        Mode::Combination => {
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            all.truncate(p);
            all.sort_unstable();
            all
        }
    };
    Selection::new(indices, mode, n).expect("generator yields valid selections")
}

fn rank_roundtrip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x1AC);
    let start = Instant::now();
    for case in 0..1000 {
        let mode = Mode::ALL[rng.gen_range(0..4)];
        let n = rng.gen_range(0..=10);
        let p = match mode {
            Mode::Permutation => n,
            Mode::List if n == 0 => 0,
            Mode::List => rng.gen_range(0..=5),
            _ => rng.gen_range(0..=5.min(n)),
        };
        let alphabet = Alphabet::default_for(n);
        let s = random_selection(&mut rng, n, p, mode);
        let t = random_selection(&mut rng, n, p, mode);
        let rs = rank(&s, &alphabet).map_err(|e| e.to_string())?;
        let rt = rank(&t, &alphabet).map_err(|e| e.to_string())?;
        let back = unrank(&rs, &alphabet, p, mode).map_err(|e| e.to_string())?;
        ensure(back == s, || {
            format!("case {case}: {s:?} -> {rs} -> {back:?}")
        })?;
        ensure(s.cmp(&t) == rs.cmp(&rt), || {
            format!("case {case}: order of {s:?}, {t:?} vs ranks {rs}, {rt}")
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("1000 cases in {elapsed:?}"))
}

fn big_integer_soundness() -> Outcome {
    let start = Instant::now();
    let mut row = vec![Natural::one()];
    for _ in 0..100 {
        let mut next = vec![Natural::one(); row.len() + 1];
        for k in 1..row.len() {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
    let multiplicative = count_combinations(lp(100, 50));
    let elapsed = start.elapsed();
    ensure(row[50] == multiplicative, || {
        format!("pascal {} vs multiplicative {multiplicative}", row[50])
    })?;
    within(elapsed, Duration::from_millis(100))?;
    Ok(format!("C(100,50) = {multiplicative} in {elapsed:?}"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked five-object example", worked_example),
        ("matrix fidelity", matrix_fidelity),
        ("oracle equivalence", oracle_equivalence),
        ("permutation identity", permutation_identity),
        ("ratio law", ratio_law),
        ("rank/unrank roundtrip", rank_roundtrip),
        ("big-integer soundness", big_integer_soundness),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
