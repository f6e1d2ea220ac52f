//! Built-in verification suite.
//!
//! Each check pins an exact expected outcome (no tolerances: everything is
//! integer or rational equality) and returns a short summary on success or
//! a description of the first failure. The CLI `selftest` command runs all
//! of them and exits nonzero on any failure.

use std::time::Instant;

use num_traits::Signed;

use crate::cat_o::{
    min_degree_bound, simple_char_component, simple_char_l_empty_closed, verma_char_component,
};
use crate::classical::{classical_core, classical_graded_char, classical_rec};
use crate::params::{
    intersect_lines, length_classification, line_in_b, line_of, CParam, Intersection,
    LengthVerdict, LineInB,
};
use crate::partition::{gamma, partitions_of, partitions_up_to, rec_nu, Partition};
use crate::symfun::chartab::{character_table, chi_row, class_data, kronecker, reduced_kronecker};
use crate::symfun::schur::schur_finite;
use crate::{Int, Rat};

pub struct CheckOutcome {
    pub number: u32,
    pub name: &'static str,
    pub result: Result<String, String>,
    pub millis: u128,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type Check = fn() -> Result<String, String>;

const CHECKS: [(u32, &str, Check); 9] = [
    (1, "published-example regression", check_1_examples),
    (
        2,
        "simple-character identity over the empty diagram",
        check_2_simple_identity,
    ),
    (
        3,
        "Verma character vs integer-rank oracle",
        check_3_verma_oracle,
    ),
    (
        4,
        "gamma slope identity (randomized)",
        check_4_gamma_identity,
    ),
    (
        5,
        "core/rec compatibility with the classical maps",
        check_5_compatibility,
    ),
    (6, "line classification and disjointness", check_6_lines),
    (7, "degree lower bounds", check_7_degree_bounds),
    (8, "length classification", check_8_length),
    (9, "symmetric-function kernel", check_9_symfun),
];

/// Runs every check, timing each.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(number, name, check)| {
            let start = Instant::now();
            let result = check();
            CheckOutcome {
                number,
                name,
                result,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

pub fn criterion(number: u32) -> Result<String, String> {
    let (_, _, check) = CHECKS
        .iter()
        .find(|&&(n, _, _)| n == number)
        .expect("criterion number in 1..=9");
    check()
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn check_1_examples() -> Result<String, String> {
    let tau = p(&[8, 5, 4, 3, 3, 2]);
    expect_eq(
        "core_(nu-22) of (8,5,4,3,3,2)",
        tau.core_nu(22).map_err(|e| e.to_string())?,
        p(&[7, 4, 3, 2, 2, 2, 2]),
    )?;
    expect_eq(
        "core_(nu-34) of (8,5,4,3,3,2)",
        tau.core_nu(34).map_err(|e| e.to_string())?,
        p(&[9, 8, 5, 4, 3, 3, 2]),
    )?;

    // For (10,8,8,6,5,4,1) the admissible parameter with witness column 6
    // is 43 (42 is not in C_tau); rec(7, core) then rebuilds the published
    // diagram.
    let tau = p(&[10, 8, 8, 6, 5, 4, 1]);
    expect_eq(
        "43 admissible with witness column 6",
        tau.c_set_witness(43),
        Some(6),
    )?;
    expect_eq("42 not admissible", tau.c_set_witness(42), None)?;
    expect_eq(
        "rec(7, core_(nu-43)) of (10,8,8,6,5,4,1)",
        rec_nu(7, &tau.core_nu(43).map_err(|e| e.to_string())?),
        p(&[10, 8, 8, 6, 6, 6, 5]),
    )?;

    let lam = p(&[5, 4, 2, 2]);
    let core7 = classical_core(&lam, 7);
    expect_eq("core_7 of (5,4,2,2)", core7.clone(), p(&[3, 1, 1, 1]))?;
    expect_eq(
        "rec(1, core_7)",
        classical_rec(1, &core7, 7).map_err(|e| e.to_string())?,
        p(&[7, 4, 1, 1]),
    )?;
    expect_eq(
        "rec(5, core_7)",
        classical_rec(5, &core7, 7).map_err(|e| e.to_string())?,
        p(&[3, 2, 2, 2, 2, 1, 1]),
    )?;

    expect_eq(
        "transpose of (6,5,4,1)",
        p(&[6, 5, 4, 1]).transpose(),
        p(&[4, 3, 3, 3, 2, 1]),
    )?;
    expect_eq(
        "tilde of (6,5,4,1) at 31",
        p(&[6, 5, 4, 1]).tilde(31).map_err(|e| e.to_string())?,
        p(&[15, 6, 5, 4, 1]),
    )?;
    Ok("8 published examples reproduced exactly".into())
}

fn check_2_simple_identity() -> Result<String, String> {
    let trunc = 12usize;
    let mut cases = 0u32;
    for k in 1..=3u32 {
        for mu in partitions_up_to(5) {
            let euler = simple_char_component(&mu, &Partition::empty(), 0, i64::from(k), trunc)
                .map_err(|e| e.to_string())?;
            let closed = simple_char_l_empty_closed(&mu, k, trunc).map_err(|e| e.to_string())?;
            if euler != closed {
                return Err(format!(
                    "k={k} mu={mu}: resolution sum {euler} != closed form {closed}"
                ));
            }
            if !euler.is_nonneg_integral() {
                return Err(format!("k={k} mu={mu}: negative coefficient in {euler}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} components agree at truncation {trunc}"))
}

fn check_3_verma_oracle() -> Result<String, String> {
    let trunc = 8usize;
    let mut cases = 0u32;
    for mu in partitions_up_to(4) {
        for tau in partitions_up_to(4) {
            let n = 2 * (mu.size() + tau.size()) + 10;
            let interpolated = verma_char_component(&mu, &tau, trunc);
            let classical = classical_graded_char(
                &mu.tilde(n).map_err(|e| e.to_string())?,
                &tau.tilde(n).map_err(|e| e.to_string())?,
                n,
                trunc,
            )
            .map_err(|e| e.to_string())?;
            let oracle = classical.mul_one_minus_q_pow(1);
            if interpolated != oracle {
                return Err(format!(
                    "mu={mu} tau={tau} n={n}: {interpolated} != {oracle}"
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} component pairs match the rank-n oracle"))
}

/// Minimal deterministic xorshift; the suite must not depend on an RNG crate.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn check_4_gamma_identity() -> Result<String, String> {
    let mut rng = XorShift(0x5DEECE66D);
    let pool: Vec<Partition> = partitions_up_to(8);
    let mut done = 0u32;
    while done < 500 {
        let tau = &pool[rng.below(pool.len() as u64) as usize];
        let j = 1 + rng.below(u64::from(tau.part(1)) + 6) as i64;
        let s = tau.size() as i64 - 1 + j - i64::from(tau.col_len(j as usize));
        let l = 1 + rng.below(5) as i64;
        let g = gamma(tau, s, l).map_err(|e| e.to_string())?;
        let mu = &g.diagram;
        let growth = mu.size() as i64 - tau.size() as i64;
        if growth <= 0 {
            return Err(format!("tau={tau} s={s} l={l}: size did not grow"));
        }
        if s * growth != mu.f_value() - tau.f_value() {
            return Err(format!(
                "tau={tau} s={s} l={l}: slope identity failed for mu={mu}"
            ));
        }
        done += 1;
    }
    Ok("500 randomized (tau, s, l) cases satisfy the slope identity".into())
}

fn check_5_compatibility() -> Result<String, String> {
    let mut cases = 0u32;
    for tau in partitions_up_to(5) {
        let smax = 2 * tau.size() as i64 + 6;
        for s in 0..=smax {
            if tau.c_set_witness(s).is_none() {
                continue;
            }
            let core = tau.core_nu(s).map_err(|e| e.to_string())?;
            let n = 3 * (tau.size() + s as u64) + 5;
            let e = (n - s as u64) as u32;
            let classical_side = classical_core(&tau.tilde(n).map_err(|e| e.to_string())?, e);
            for l in 0..=4u32 {
                let interpolated = rec_nu(l, &core).tilde(n).map_err(|e| e.to_string())?;
                let classical = classical_rec(l, &classical_side, e).map_err(|e| e.to_string())?;
                if interpolated != classical {
                    return Err(format!(
                        "tau={tau} s={s} l={l}: {interpolated} != {classical}"
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} core/rec squares commute with the classical maps"
    ))
}

fn check_6_lines() -> Result<String, String> {
    for m in 1..=6u32 {
        expect_eq(
            &format!("L(empty,(1),{m}) contained"),
            line_in_b(&Partition::empty(), &p(&[1]), m).map_err(|e| e.to_string())?,
            LineInB::Yes { s: 0, sign: 1 },
        )?;
        let two = line_in_b(&Partition::empty(), &p(&[2]), m).map_err(|e| e.to_string())?;
        let want = if m % 2 == 0 {
            LineInB::Yes { s: 1, sign: 1 }
        } else {
            LineInB::No
        };
        expect_eq(&format!("L(empty,(2),{m})"), two, want)?;
        expect_eq(
            &format!("L(empty,(1,1),{m}) excluded"),
            line_in_b(&Partition::empty(), &p(&[1, 1]), m).map_err(|e| e.to_string())?,
            LineInB::No,
        )?;
    }
    let mut pairs = 0u32;
    for tau in partitions_up_to(4) {
        for mu in partitions_up_to(4) {
            if tau == mu {
                continue;
            }
            for m1 in 1..=5u32 {
                for m2 in (m1 + 1)..=5u32 {
                    let hit = intersect_lines(&line_of(&tau, &mu, m1), &line_of(&tau, &mu, m2))
                        .map_err(|e| e.to_string())?;
                    if hit != Intersection::Disjoint {
                        return Err(format!("L({tau},{mu},{m1}) meets L({tau},{mu},{m2})"));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "degree classification fixed; {pairs} line pairs disjoint"
    ))
}

fn check_7_degree_bounds() -> Result<String, String> {
    let trunc = 10usize;
    let mut cases = 0u32;
    for mu in partitions_up_to(5) {
        for tau in partitions_up_to(3) {
            let series = verma_char_component(&mu, &tau, trunc);
            let bound = min_degree_bound(&mu, &tau);
            match series.ord() {
                Some(ord) => {
                    if (ord as i64) < bound {
                        return Err(format!("mu={mu} tau={tau}: ord {ord} below bound {bound}"));
                    }
                }
                None => {
                    // Vanishing up to the truncation: the bound must allow it.
                    if bound <= trunc as i64 && tau.is_empty() {
                        return Err(format!(
                            "mu={mu} tau={tau}: component vanished unexpectedly"
                        ));
                    }
                }
            }
            if tau.is_empty() {
                let want = mu.weighted_size() as usize;
                let got = series.ord();
                if want <= trunc {
                    expect_eq(&format!("order of mu={mu} over empty"), got, Some(want))?;
                } else if got.is_some() {
                    return Err(format!("mu={mu}: order {got:?} below weighted size {want}"));
                }
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} order bounds hold exactly"))
}

fn check_8_length() -> Result<String, String> {
    let tau = Partition::empty();
    let nu = Rat::new(1.into(), 2.into());
    let got = length_classification(&tau, &CParam::Of(Rat::new((-2).into(), 3.into())), &nu);
    expect_eq(
        "c=-2/3, nu=1/2, empty diagram",
        got,
        LengthVerdict::Infinite {
            start: 2,
            step: 3,
            first_r: vec![Int::from(1), Int::from(3), Int::from(5)],
        },
    )?;
    expect_eq(
        "c=1/2 is finite",
        length_classification(&p(&[3, 1]), &CParam::Of(Rat::new(1.into(), 2.into())), &nu),
        LengthVerdict::Finite,
    )?;
    expect_eq(
        "c=-1, nu=1/2 undecided",
        length_classification(&tau, &CParam::Of(Rat::new((-1).into(), 1.into())), &nu),
        LengthVerdict::Unknown,
    )?;
    Ok("length classification matches on all three pinned cases".into())
}

fn check_9_symfun() -> Result<String, String> {
    // Row and column orthogonality for n <= 8.
    for n in 0..=8u32 {
        let t = character_table(n).map_err(|e| e.to_string())?;
        for a in &t.irreps {
            for b in &t.irreps {
                let mut acc = Rat::from_integer(0.into());
                for rho in &t.classes {
                    acc += Rat::new(t.value(a, rho) * t.value(b, rho), t.z_of(rho).clone());
                }
                let want = Rat::from_integer(i32::from(a == b).into());
                if acc != want {
                    return Err(format!("row orthogonality failed at n={n}, {a}, {b}"));
                }
            }
        }
        let data = class_data(n);
        let rows: Vec<_> = t.irreps.iter().map(|lam| chi_row(n, lam)).collect();
        for (i, rho) in data.classes.iter().enumerate() {
            for (j, _) in data.classes.iter().enumerate() {
                let mut acc = Int::from(0);
                for row in &rows {
                    acc += &row[i] * &row[j];
                }
                let want = if i == j {
                    data.z[i].clone()
                } else {
                    Int::from(0)
                };
                if acc != want {
                    return Err(format!("column orthogonality failed at n={n}, class {rho}"));
                }
            }
        }
    }
    // Kronecker symmetry for n <= 5.
    for n in 1..=5u32 {
        let all = partitions_of(n);
        for a in &all {
            for b in &all {
                for c in &all {
                    let v = kronecker(a, b, c).map_err(|e| e.to_string())?;
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        if kronecker(x, y, z).map_err(|e| e.to_string())? != v {
                            return Err(format!("Kronecker symmetry failed at {a},{b},{c}"));
                        }
                    }
                }
            }
        }
    }
    // Reduced coefficients against (1), (1).
    let one = p(&[1]);
    let support = [Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])];
    for lam in partitions_up_to(3) {
        let v = reduced_kronecker(&lam, &one, &one).map_err(|e| e.to_string())?;
        if v.is_negative() || v > Int::from(1) {
            return Err(format!("reduced coefficient out of range at {lam}"));
        }
        let want = Int::from(u32::from(support.contains(&lam)));
        if v != want {
            return Err(format!(
                "reduced coefficient at {lam}: got {v}, expected {want}"
            ));
        }
    }
    // Finite Schur specialization against brute-force tableau enumeration.
    for lam in partitions_up_to(5) {
        for m in 0..=4u32 {
            let poly = schur_finite(&lam, m);
            let count = count_ssyt(&lam, m);
            if poly.eval_at_one() != Rat::from_integer(count.into()) {
                return Err(format!("schur_finite({lam}, {m}) disagrees with tableaux"));
            }
        }
    }
    Ok("orthogonality, Kronecker symmetry, stable support and tableau counts verified".into())
}

/// Brute-force count of semistandard tableaux of shape `lambda`, entries `<= m`.
fn count_ssyt(lambda: &Partition, m: u32) -> u64 {
    fn fill(lambda: &Partition, m: u32, rows: &mut Vec<Vec<u32>>, i: usize, j: usize) -> u64 {
        if i == lambda.len() {
            return 1;
        }
        let (ni, nj) = if j + 1 < lambda.part(i + 1) as usize {
            (i, j + 1)
        } else {
            (i + 1, 0)
        };
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        let mut total = 0;
        for e in lo..=m {
            rows[i].push(e);
            total += fill(lambda, m, rows, ni, nj);
            rows[i].pop();
        }
        total
    }
    if lambda.is_empty() {
        return 1;
    }
    let mut rows = vec![Vec::new(); lambda.len()];
    fill(lambda, m, &mut rows, 0, 0)
}
