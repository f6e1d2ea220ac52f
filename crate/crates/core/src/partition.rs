//! Young diagrams and the column-surgery constructions `C_τ`,
//! `core_{(ν−s)}`, `rec`, `Γ` and `tilde`.
//!
//! Partitions are canonical: parts are weakly decreasing positive integers
//! and trailing zeros are never stored. All operations are pure.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// A partition / Young diagram, in English notation.
///
/// Cells are addressed as `(i, j)` with row `i` and column `j`, both
/// 1-based. `part(i)` and `col_len(j)` return 0 outside the diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Panics when the parts are not weakly decreasing; use [`Partition::try_new`]
    /// for untrusted input.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    /// Fallible constructor for untrusted input.
    pub fn try_new(mut parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A single row of `s` cells (`s = 0` gives the empty diagram).
    pub fn row(s: u32) -> Self {
        if s == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![s] }
        }
    }

    /// A single column of `k` cells.
    pub fn col(k: u32) -> Self {
        Partition {
            parts: vec![1; k as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); 0 beyond the diagram.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("rows are 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based); 0 beyond the diagram.
    pub fn col_len(&self, j: usize) -> u32 {
        if j == 0 {
            panic!("columns are 1-based");
        }
        let j = j as u32;
        self.parts.iter().take_while(|&&p| p >= j).count() as u32
    }

    /// The transposed diagram; an involution.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1) as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.col_len(j));
        }
        Partition { parts: t }
    }

    /// Iterates over the cells `(i, j)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// The content `ct(λ) = Σ_{(i,j)} (j − i)`.
    pub fn content(&self) -> i64 {
        let mut ct = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            let p = i64::from(p);
            let i = (i + 1) as i64;
            // Σ_{j=1..p} (j − i) = p(p+1)/2 − i·p
            ct += p * (p + 1) / 2 - i * p;
        }
        ct
    }

    /// `f(λ) = (|λ|² − |λ|)/2 + ct(λ)`, a nonnegative integer bounded by
    /// `|λ|² − |λ|`; zero exactly for columns, maximal exactly for rows.
    pub fn f_value(&self) -> i64 {
        let n = self.size() as i64;
        (n * n - n) / 2 + self.content()
    }

    /// Hook length of the cell `(i, j)`, which must lie in the diagram.
    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        debug_assert!(j as u32 <= self.part(i), "cell outside diagram");
        self.part(i) - j as u32 + self.col_len(j) - i as u32 + 1
    }

    /// All hook lengths, keyed by cell in row-major order.
    pub fn hook_lengths(&self) -> Vec<((usize, usize), u32)> {
        self.cells()
            .map(|(i, j)| ((i, j), self.hook_length(i, j)))
            .collect()
    }

    /// Dimension of the corresponding `S_{|λ|}`-irreducible, by the
    /// hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let mut num = BigInt::one();
        for k in 1..=self.size() {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::one();
        for (_, h) in self.hook_lengths() {
            den *= BigInt::from(h);
        }
        num / den
    }

    /// `n(λ) = Σ (i−1)·λ_i`.
    pub fn n_weight(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    /// `Σ i·λ_i`, the minimal degree of the polynomial component.
    pub fn weighted_size(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as u64 + 1) * u64::from(p))
            .sum()
    }

    /// The unique witness `j_s ≥ 1` with `|τ| − 1 + j_s − τˇ_{j_s} = s`,
    /// when `s ∈ C_τ`.
    ///
    /// `j ↦ j − τˇ_j` is strictly increasing, so the witness is found by
    /// binary search over the columns and a closed form beyond them.
    pub fn c_set_witness(&self, s: i64) -> Option<u32> {
        let base = self.size() as i64 - 1;
        let cols = self.part(1) as i64;
        // Beyond the diagram the map is j ↦ base + j.
        if s > base + cols {
            return Some((s - base) as u32);
        }
        let (mut lo, mut hi) = (1i64, cols);
        while lo <= hi {
            let mid = (lo + hi) / 2;
            let g = base + mid - i64::from(self.col_len(mid as usize));
            match g.cmp(&s) {
                Ordering::Equal => return Some(mid as u32),
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid - 1,
            }
        }
        None
    }

    /// First member of the integer tail of `C_τ`: every `s ≥ |τ| + τ_1`
    /// is admissible.
    pub fn c_set_tail_start(&self) -> i64 {
        self.size() as i64 + i64::from(self.part(1))
    }

    /// The members of `C_τ` below the integer tail, increasing.
    pub fn c_set_sporadic(&self) -> Vec<i64> {
        let base = self.size() as i64 - 1;
        let tail = self.c_set_tail_start();
        (1..=self.part(1) as i64)
            .map(|j| base + j - i64::from(self.col_len(j as usize)))
            .filter(|&s| s < tail)
            .collect()
    }

    /// The `(ν−s)`-core of the diagram: column `j_s` is taken out, columns
    /// left of it are lengthened by one, columns right of it move left.
    ///
    /// Requires `s ∈ C_τ`. The result has exactly `s` cells.
    pub fn core_nu(&self, s: i64) -> Result<Partition> {
        let j_s = self.c_set_witness(s).ok_or(Error::SNotInCSet { s })? as usize;
        let cols = self.part(1) as usize;
        let mut new_cols = Vec::new();
        for j in 1..j_s {
            new_cols.push(self.col_len(j) + 1);
        }
        for j in j_s..=cols.max(j_s) {
            new_cols.push(self.col_len(j + 1));
        }
        let core = from_columns(new_cols);
        debug_assert_eq!(core.size() as i64, s);
        Ok(core)
    }

    /// Adds a top row of size `n − |λ|`; requires `n ≥ λ_1 + |λ|`.
    pub fn tilde(&self, n: u64) -> Result<Partition> {
        let min = u64::from(self.part(1)) + self.size();
        if n < min {
            return Err(Error::NTooSmall { n, min });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push((n - self.size()) as u32);
        parts.extend_from_slice(&self.parts);
        Ok(Partition::new(parts))
    }

    /// Rows where a cell can be added keeping a valid diagram (1-based).
    fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.part(i - 1) > self.part(i) {
                rows.push(i);
            }
        }
        rows
    }

    /// Rows whose last cell is a corner (removable) cell.
    fn corner_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    fn with_row_delta(&self, i: usize, delta: i64) -> Partition {
        let mut parts = self.parts.clone();
        if i > parts.len() {
            parts.resize(i, 0);
        }
        parts[i - 1] = (i64::from(parts[i - 1]) + delta) as u32;
        Partition::try_new(parts).expect("delta applied at a valid position")
    }

    /// Decomposition of `𝔥 ⊗ X_τ`: the diagrams obtained by adding,
    /// deleting or moving a corner cell, plus the corner count (the
    /// multiplicity of `X_τ` itself).
    pub fn pieri_expand(&self) -> PieriExpansion {
        let mut plus = Vec::new();
        for i in self.addable_rows() {
            plus.push(self.with_row_delta(i, 1));
        }
        let corners = self.corner_rows();
        let mut minus = Vec::new();
        for &i in &corners {
            minus.push(self.with_row_delta(i, -1));
        }
        let mut zero = Vec::new();
        for &i in &corners {
            let removed = self.with_row_delta(i, -1);
            for i2 in removed.addable_rows() {
                let moved = removed.with_row_delta(i2, 1);
                if moved != *self && !zero.contains(&moved) {
                    zero.push(moved);
                }
            }
        }
        plus.sort();
        minus.sort();
        zero.sort();
        PieriExpansion {
            plus,
            minus,
            zero,
            corner_count: corners.len() as u32,
        }
    }
}

impl Ord for Partition {
    /// Canonical order: by size, then lexicographically on the parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of [`Partition::pieri_expand`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriExpansion {
    pub plus: Vec<Partition>,
    pub minus: Vec<Partition>,
    pub zero: Vec<Partition>,
    pub corner_count: u32,
}

impl PieriExpansion {
    /// All diagrams of the expansion other than `τ` itself.
    pub fn neighbors(&self) -> impl Iterator<Item = &Partition> {
        self.plus.iter().chain(&self.minus).chain(&self.zero)
    }
}

/// Rebuilds a partition from a list of column lengths (weakly decreasing
/// after stripping trailing zeros).
fn from_columns(mut cols: Vec<u32>) -> Partition {
    while cols.last() == Some(&0) {
        cols.pop();
    }
    Partition::new(cols).transpose()
}

/// The insertion step: splits `η` at the unique column index `k` with
/// `ηˇ_{k−1} ≥ l+1 > ηˇ_k` (`ηˇ_0 = ∞`), deletes the top row of the left
/// part, inserts a column of length `l` at position `k` and reattaches the
/// right part.
pub fn rec_nu(l: u32, eta: &Partition) -> Partition {
    rec_nu_with_index(l, eta).0
}

/// [`rec_nu`] together with the insertion index `k`.
pub fn rec_nu_with_index(l: u32, eta: &Partition) -> (Partition, u32) {
    let cols = eta.part(1) as usize;
    let mut k = cols + 1;
    for j in 1..=cols + 1 {
        if eta.col_len(j) < l + 1 {
            k = j;
            break;
        }
    }
    let mut new_cols = Vec::new();
    for j in 1..k {
        new_cols.push(eta.col_len(j) - 1);
    }
    new_cols.push(l);
    for j in k..=cols {
        new_cols.push(eta.col_len(j));
    }
    (from_columns(new_cols), k as u32)
}

/// Output of [`gamma`]: the diagram together with the witness column `j_s`,
/// the insertion index `k_{s,l}` and the parameters it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub diagram: Partition,
    pub j_s: u32,
    pub k_insert: u32,
    pub s: u32,
    pub l: i64,
}

/// `Γ(τ, s, l) = rec(τˇ_{j_s} + l, core_{(ν−s)}(τ))`.
///
/// Requires `s ∈ C_τ` and `l ≥ −τˇ_{j_s}`. `Γ(τ, s, 0) = τ`; for `l > 0`
/// the size grows by `j_s − k_{s,l} + l` and
/// `f(Γ) − f(τ) = s · (|Γ| − |τ|)`.
pub fn gamma(tau: &Partition, s: i64, l: i64) -> Result<GammaResult> {
    let j_s = tau.c_set_witness(s).ok_or(Error::SNotInCSet { s })?;
    let col = i64::from(tau.col_len(j_s as usize));
    if l < -col {
        return Err(Error::LBelowRange { l, min: -col });
    }
    let core = tau.core_nu(s)?;
    let (diagram, k_insert) = rec_nu_with_index((col + l) as u32, &core);
    debug_assert!(s >= 0, "members of C_tau are nonnegative");
    if l == 0 {
        debug_assert_eq!(&diagram, tau);
    }
    Ok(GammaResult {
        diagram,
        j_s,
        k_insert,
        s: s as u32,
        l,
    })
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()));
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, in canonical (size, lex) order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=n).flat_map(partitions_of).collect();
    out.sort();
    out
}
