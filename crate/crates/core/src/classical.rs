//! Integer-rank oracle: straight e-hook removal, classical cores and hook
//! insertion, Verma-simplicity, block chains, and graded Hom characters
//! over `S_n`.
//!
//! Everything here is consumed as combinatorial rules; it exists to
//! cross-validate the interpolated constructions at large integer rank.

use num_traits::Zero;

use crate::partition::Partition;
use crate::symfun::chartab::{chi_row, class_data};
use crate::symfun::qseries::QSeries;
use crate::{Error, Rat, Result};

/// A hook inside a diagram: vertex cell, total length, and leg length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookSpec {
    /// Vertex cell `(i, j)`, 1-based.
    pub vertex: (u32, u32),
    pub length: u32,
    pub leg: u32,
}

impl HookSpec {
    pub fn arm(&self) -> u32 {
        self.length - 1 - self.leg
    }
}

/// All hooks of length exactly `e`, in row-major vertex order.
pub fn e_hooks(lambda: &Partition, e: u32) -> Vec<HookSpec> {
    let mut out = Vec::new();
    for (i, j) in lambda.cells() {
        if lambda.hook_length(i, j) == e {
            out.push(HookSpec {
                vertex: (i as u32, j as u32),
                length: e,
                leg: lambda.col_len(j) - i as u32,
            });
        }
    }
    out
}

/// Removes the straight hook at `vertex`, moving the boxes below-right of
/// the vertex one step up and one step left.
fn remove_hook_at(lambda: &Partition, vertex: (u32, u32)) -> Partition {
    let (vi, vj) = (vertex.0 as usize, vertex.1 as usize);
    let mut parts = Vec::new();
    for i in 1..vi {
        parts.push(lambda.part(i));
    }
    for i in vi..=lambda.len() {
        let keep = lambda.part(i).min(vj as u32 - 1);
        let shifted = lambda.part(i + 1).saturating_sub(vj as u32);
        parts.push(keep + shifted);
    }
    Partition::new(parts)
}

/// The classical `e`-core: repeatedly remove an `e`-hook (vertex chosen in
/// row-major order, which is irrelevant in the certified one-hook regime)
/// until none remains.
pub fn classical_core(lambda: &Partition, e: u32) -> Partition {
    assert!(e >= 1);
    let mut cur = lambda.clone();
    loop {
        let hooks = e_hooks(&cur, e);
        match hooks.first() {
            None => return cur,
            Some(h) => cur = remove_hook_at(&cur, h.vertex),
        }
    }
}

/// Inserts the hook `hook(l, e) = (e−l, 1^l)` into `β`: the unique diagram
/// of size `|β| + e` from which deleting that hook recovers `β`.
///
/// Requires `0 ≤ l ≤ e−1` and the regime `e > |β|`.
pub fn classical_rec(l: u32, beta: &Partition, e: u32) -> Result<Partition> {
    if e as u64 <= beta.size() {
        return Err(Error::RegimeViolated(format!(
            "hook insertion needs e > |beta| (e = {e}, |beta| = {})",
            beta.size()
        )));
    }
    if l >= e {
        return Err(Error::RegimeViolated(format!(
            "leg must satisfy 0 <= l <= e-1 (l = {l}, e = {e})"
        )));
    }
    // Column index j with βˇ_{j-1} ≥ l+1 > βˇ_j, then the row index i:
    // i = 1 unless j = 1, where β_i + 1 ≤ e−l ≤ β_{i-1} picks i.
    let cols = beta.part(1) as usize;
    let mut j = cols + 1;
    for jj in 1..=cols + 1 {
        if beta.col_len(jj) < l + 1 {
            j = jj;
            break;
        }
    }
    let i = if j >= 2 {
        1
    } else {
        let mut i = beta.len() + 1;
        for ii in 1..=beta.len() + 1 {
            if beta.part(ii) < e - l {
                i = ii;
                break;
            }
        }
        i
    };
    let mut parts = Vec::new();
    for r in 1..i {
        parts.push(beta.part(r));
    }
    parts.push((j as u32 - 1) + (e - l));
    let mut r = i + 1;
    loop {
        let stay = beta.part(r).min(j as u32 - 1);
        let leg_cell = u32::from(r <= i + l as usize);
        let shifted = (beta.part(r - 1) + 1).saturating_sub(j as u32);
        let row = stay + leg_cell + shifted;
        if row == 0 {
            break;
        }
        parts.push(row);
        r += 1;
    }
    let rec = Partition::try_new(parts).map_err(|_| {
        Error::RegimeViolated(format!("no valid insertion of hook({l}, {e}) into {beta}"))
    })?;
    debug_assert_eq!(rec.size(), beta.size() + u64::from(e));
    debug_assert_eq!(
        remove_hook_at(&rec, (i as u32, j as u32)),
        *beta,
        "deleting the inserted hook must recover beta"
    );
    Ok(rec)
}

fn check_regime(n: u64, s: u64) -> Result<()> {
    if n <= 2 * s || n <= 3 {
        return Err(Error::RegimeViolated(format!(
            "need n > max(2s, 3) (n = {n}, s = {s})"
        )));
    }
    Ok(())
}

/// Simplicity of the classical Verma module at `c' = n − s`: `λ` has no
/// `(n−s)`-hook, or its unique `(n−s)`-hook is a vertical strip (arm 0).
pub fn verma_simple_classical(lambda: &Partition, n: u64, s: u64) -> Result<bool> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!(
            "|lambda| = {} but n = {n}",
            lambda.size()
        )));
    }
    check_regime(n, s)?;
    let hooks = e_hooks(lambda, (n - s) as u32);
    assert!(hooks.len() <= 1, "at most one (n-s)-hook in this regime");
    Ok(hooks.first().is_none_or(|h| h.arm() == 0))
}

/// The Verma modules of the block of `β` (`|β| = s`), in long-exact-sequence
/// order: `rec(n−s−1, β), ..., rec(0, β)`.
pub fn block_chain(beta: &Partition, n: u64, s: u64) -> Result<Vec<Partition>> {
    if beta.size() != s {
        return Err(Error::SizeMismatch(format!(
            "|beta| = {} but s = {s}",
            beta.size()
        )));
    }
    check_regime(n, s)?;
    let e = (n - s) as u32;
    (0..e).rev().map(|l| classical_rec(l, beta, e)).collect()
}

/// Graded character of `Hom_{S_n}(μ, C[x_1..x_n] ⊗ τ)`:
/// `Σ_{ρ⊢n} z_ρ^{-1} χ^μ(ρ) χ^τ(ρ) Π_k (1 − q^{ρ_k})^{-1}`, truncated.
///
/// Coefficients are always nonnegative integers.
pub fn classical_graded_char(
    mu: &Partition,
    tau: &Partition,
    n: u64,
    trunc: usize,
) -> Result<QSeries> {
    if mu.size() != n || tau.size() != n {
        return Err(Error::SizeMismatch(format!(
            "need |mu| = |tau| = n, got {}, {}, {n}",
            mu.size(),
            tau.size()
        )));
    }
    let data = class_data(n as u32);
    let row_mu = chi_row(n as u32, mu);
    let row_tau = chi_row(n as u32, tau);
    let mut acc = QSeries::zero(trunc);
    for (idx, rho) in data.classes.iter().enumerate() {
        let weight = &row_mu[idx] * &row_tau[idx];
        if weight.is_zero() {
            continue;
        }
        let factor = class_series(rho, trunc);
        acc = &acc + &factor.scale(&Rat::new(weight, data.z[idx].clone()));
    }
    assert!(
        acc.is_nonneg_integral(),
        "graded multiplicities are nonnegative integers"
    );
    Ok(acc)
}

/// `Π_k (1 − q^{ρ_k})^{-1}` truncated; cached per call site by the caller's
/// loop being the only consumer.
fn class_series(rho: &Partition, trunc: usize) -> QSeries {
    let mut s = QSeries::one(trunc);
    for &p in rho.parts() {
        s = s.div_one_minus_q_pow(p as usize);
    }
    s
}
