//! Symmetric-group characters by the Murnaghan–Nakayama rule, class data,
//! Kronecker coefficients and their stable (reduced) limits.
//!
//! Character values are computed on beta-sets (first-column hook lengths):
//! removing a border strip of length `r` replaces a beta number `b` by
//! `b − r` when that value is free, with sign given by the number of beta
//! numbers jumped over. Rows and full tables are memoized behind mutexes;
//! published values are never mutated, so results are interleaving-independent.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};

use crate::partition::{partitions_of, Partition};
use crate::{Error, Int, Rat, Result};

/// Full tables above this size must be requested explicitly via
/// [`character_table_capped`].
pub const DEFAULT_TABLE_MAX: u32 = 14;

/// Default cap for the empirical stabilization of reduced Kronecker
/// coefficients.
pub const DEFAULT_STABILIZATION_CAP: u32 = 20;

/// Conjugacy-class data of `S_n`: cycle types and centralizer orders `z_ρ`.
pub struct ClassData {
    pub n: u32,
    pub classes: Vec<Partition>,
    pub z: Vec<Int>,
}

fn class_cache() -> &'static Mutex<HashMap<u32, Arc<ClassData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ClassData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Centralizer order of a cycle type: `z_ρ = Π i^{m_i} m_i!`.
pub fn z_of(rho: &Partition) -> Int {
    let mut z = Int::from(1);
    let mut mult = 1u32;
    let parts = rho.parts();
    for (idx, &p) in parts.iter().enumerate() {
        z *= Int::from(p);
        if idx + 1 < parts.len() && parts[idx + 1] == p {
            mult += 1;
        } else {
            for m in 1..=mult {
                z *= Int::from(m);
            }
            mult = 1;
        }
    }
    z
}

/// Memoized class data for `S_n`.
pub fn class_data(n: u32) -> Arc<ClassData> {
    if let Some(found) = class_cache().lock().unwrap().get(&n) {
        return Arc::clone(found);
    }
    let classes = partitions_of(n);
    let z = classes.iter().map(z_of).collect();
    let data = Arc::new(ClassData { n, classes, z });
    class_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(data)
        .clone()
}

/// Beta-set (strictly decreasing first-column hook lengths) of a partition,
/// padded to `rows` beads.
fn beta_set(lambda: &Partition, rows: usize) -> Vec<u32> {
    (1..=rows)
        .map(|i| lambda.part(i) + (rows - i) as u32)
        .collect()
}

fn beta_to_parts(beta: &[u32]) -> Vec<u32> {
    let rows = beta.len();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (rows - 1 - i) as u32)
        .collect()
}

/// All ways to remove a border strip of length `r`, as `(smaller diagram, sign)`.
fn strip_removals(lambda: &Partition, r: u32) -> Vec<(Partition, i8)> {
    let rows = lambda.len().max(1);
    let beta = beta_set(lambda, rows);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = target;
        out.push((Partition::new(beta_to_parts(&next)), sign));
    }
    out
}

fn chi_rec(lambda: &Partition, rho: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), Int>) -> Int {
    if lambda.is_empty() {
        return Int::from(1);
    }
    // Keyed on the remaining cycles so the memo can be shared across the
    // classes of one row (common suffixes of small cycles dominate).
    let key = (lambda.parts().to_vec(), rho.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = rho[0];
    let mut total = Int::zero();
    for (smaller, sign) in strip_removals(lambda, r) {
        let sub = chi_rec(&smaller, &rho[1..], memo);
        if sign > 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// One character value `χ^λ(ρ)`; both arguments must have the same size.
pub fn chi(lambda: &Partition, rho: &Partition) -> Int {
    assert_eq!(lambda.size(), rho.size(), "chi needs |lambda| = |rho|");
    let mut cycles = rho.parts().to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo = HashMap::new();
    chi_rec(lambda, &cycles, &mut memo)
}

type RowKey = (u32, Vec<u32>);

fn row_cache() -> &'static Mutex<HashMap<RowKey, Arc<Vec<Int>>>> {
    static CACHE: OnceLock<Mutex<HashMap<RowKey, Arc<Vec<Int>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The row `(χ^λ(ρ))_ρ` over the classes of `S_n`, in [`class_data`] order.
///
/// Rows are cached; unlike [`character_table`] this has no size cap, so the
/// integer-rank oracle can evaluate single rows well above the table maximum.
pub fn chi_row(n: u32, lambda: &Partition) -> Arc<Vec<Int>> {
    assert_eq!(lambda.size(), u64::from(n));
    let key = (n, lambda.parts().to_vec());
    if let Some(row) = row_cache().lock().unwrap().get(&key) {
        return Arc::clone(row);
    }
    let data = class_data(n);
    let mut memo = HashMap::new();
    let row: Vec<Int> = data
        .classes
        .iter()
        .map(|rho| {
            // Classes are already weakly decreasing; recurse largest cycle first.
            chi_rec(lambda, rho.parts(), &mut memo)
        })
        .collect();
    let row = Arc::new(row);
    row_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(row)
        .clone()
}

/// The complete character table of `S_n`.
pub struct CharTable {
    pub n: u32,
    pub irreps: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub z: Vec<Int>,
    rows: Vec<Arc<Vec<Int>>>,
}

impl CharTable {
    /// `χ^λ(ρ)`; panics when either partition is not of size `n`.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> &Int {
        let li = self
            .irreps
            .binary_search_by(|x| rho_order(x, lambda))
            .expect("lambda must be a partition of n");
        let ri = self
            .classes
            .binary_search_by(|x| rho_order(x, rho))
            .expect("rho must be a partition of n");
        &self.rows[li][ri]
    }

    pub fn z_of(&self, rho: &Partition) -> &Int {
        let ri = self
            .classes
            .binary_search_by(|x| rho_order(x, rho))
            .expect("rho must be a partition of n");
        &self.z[ri]
    }

    /// Dimension of `λ`, read off at the identity class.
    pub fn dim(&self, lambda: &Partition) -> &Int {
        let id = self.classes.len() - 1;
        let li = self
            .irreps
            .binary_search_by(|x| rho_order(x, lambda))
            .expect("lambda must be a partition of n");
        &self.rows[li][id]
    }
}

// partitions_of(n) is decreasing-lex; binary search against that order.
fn rho_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    b.parts().cmp(a.parts())
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<CharTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Complete table for `S_n`, memoized; errors above [`DEFAULT_TABLE_MAX`].
pub fn character_table(n: u32) -> Result<Arc<CharTable>> {
    character_table_capped(n, DEFAULT_TABLE_MAX)
}

/// Complete table with an explicit size cap.
pub fn character_table_capped(n: u32, max: u32) -> Result<Arc<CharTable>> {
    if n > max {
        return Err(Error::TableTooLarge { n, max });
    }
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let data = class_data(n);
    let irreps = data.classes.clone();
    let rows = irreps.iter().map(|lam| chi_row(n, lam)).collect();
    let table = Arc::new(CharTable {
        n,
        irreps,
        classes: data.classes.clone(),
        z: data.z.clone(),
        rows,
    });
    Ok(table_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(table)
        .clone())
}

/// Kronecker coefficient
/// `γ^λ_{μ,ν} = Σ_ρ z_ρ^{-1} χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`, symmetric in all three
/// arguments.
pub fn kronecker(a: &Partition, b: &Partition, c: &Partition) -> Result<Int> {
    if a.size() != b.size() || b.size() != c.size() {
        return Err(Error::SizeMismatch(format!(
            "kronecker needs equal sizes, got {}, {}, {}",
            a.size(),
            b.size(),
            c.size()
        )));
    }
    let n = a.size() as u32;
    let data = class_data(n);
    let (ra, rb, rc) = (chi_row(n, a), chi_row(n, b), chi_row(n, c));
    let mut total = Rat::zero();
    for i in 0..data.classes.len() {
        let prod = &ra[i] * &rb[i] * &rc[i];
        if !prod.is_zero() {
            total += Rat::new(prod, data.z[i].clone());
        }
    }
    assert!(total.is_integer(), "class sum must be an integer");
    let v = total.to_integer();
    assert!(!v.is_negative(), "Kronecker coefficients are nonnegative");
    Ok(v)
}

type TripleKey = [Vec<u32>; 3];

fn reduced_cache() -> &'static Mutex<HashMap<TripleKey, (Int, u32)>> {
    static CACHE: OnceLock<Mutex<HashMap<TripleKey, (Int, u32)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Reduced Kronecker coefficient with the default stabilization cap.
pub fn reduced_kronecker(lambda: &Partition, tau: &Partition, mu: &Partition) -> Result<Int> {
    reduced_kronecker_capped(lambda, tau, mu, DEFAULT_STABILIZATION_CAP).map(|(v, _)| v)
}

/// Reduced Kronecker coefficient `γ̄^λ_{τ,μ}`: the stable value of
/// `γ^{λ̃(n)}_{τ̃(n),μ̃(n)}`, detected empirically by two consecutive `n`
/// agreeing above the floor
/// `n₀ = max(2(|τ|+|μ|)+1, |λ|+λ_1, |τ|+τ_1, |μ|+μ_1)`.
///
/// The coefficient is symmetric in all three arguments; evaluation reorders
/// them so the two smallest occupy the `(τ, μ)` slots, which minimizes the
/// floor without changing the value. Returns the value together with the
/// first `n` at which agreement was observed.
pub fn reduced_kronecker_capped(
    lambda: &Partition,
    tau: &Partition,
    mu: &Partition,
    cap: u32,
) -> Result<(Int, u32)> {
    let mut sorted = [lambda, tau, mu];
    sorted.sort_by_key(|p| std::cmp::Reverse(p.size()));
    let key: TripleKey = [
        sorted[0].parts().to_vec(),
        sorted[1].parts().to_vec(),
        sorted[2].parts().to_vec(),
    ];
    if let Some(hit) = reduced_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let [big, t, m] = sorted;
    let floor = |p: &Partition| p.size() + u64::from(p.part(1));
    let n0 = (2 * (t.size() + m.size()) + 1)
        .max(floor(big))
        .max(floor(t))
        .max(floor(m));
    let eval = |n: u64| -> Result<Int> {
        kronecker(
            &big.tilde(n).expect("n above validity floor"),
            &t.tilde(n).expect("n above validity floor"),
            &m.tilde(n).expect("n above validity floor"),
        )
    };
    let mut n = n0;
    if n + 1 > u64::from(cap) {
        return Err(Error::StabilizationCap { cap });
    }
    let mut prev = eval(n)?;
    loop {
        if n + 1 > u64::from(cap) {
            return Err(Error::StabilizationCap { cap });
        }
        let next = eval(n + 1)?;
        if next == prev {
            let out = (prev, n as u32);
            reduced_cache().lock().unwrap().insert(key, out.clone());
            return Ok(out);
        }
        prev = next;
        n += 1;
    }
}
