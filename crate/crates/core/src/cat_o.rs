//! Characters of Verma and simple objects: per-weight q-series via reduced
//! Kronecker coefficients, resolutions with exact degree offsets, the
//! closed form for the simple object over the empty diagram, and degree
//! lower bounds.

use std::collections::BTreeMap;

use crate::partition::{gamma, partitions_up_to, GammaResult, Partition};
use crate::symfun::chartab::{reduced_kronecker_capped, DEFAULT_STABILIZATION_CAP};
use crate::symfun::qseries::QSeries;
use crate::symfun::schur::{schur_bar, schur_finite};
use crate::{Error, Rat, Result};

/// `Σ_k k·μ_k`: the least degree of the polynomial module in which the
/// weight `μ` can appear.
pub fn min_degree_poly(mu: &Partition) -> u64 {
    mu.weighted_size()
}

/// Lower bound for the degree of `μ` inside the Verma object over `τ`:
/// `Σ_k k·μ_k − l(μ)·|τ| − (3|τ|² + |τ|)/2` (always an integer).
pub fn min_degree_bound(mu: &Partition, tau: &Partition) -> i64 {
    let t = tau.size() as i64;
    let correction = 3 * t * t + t;
    assert_eq!(correction % 2, 0, "the bound is integer-valued");
    mu.weighted_size() as i64 - mu.len() as i64 * t - correction / 2
}

/// Graded character of `Hom(X_μ, S𝔥 ⊗ X_τ)`:
/// `(1 − q) Σ_λ γ̄^λ_{τ,μ} s̄_λ`, truncated at `q^N`.
///
/// The sum is finite: `s̄_λ` has order `Σ i·λ_i`, so only `λ` with
/// `Σ i·λ_i ≤ N` contribute, and reduced Kronecker coefficients vanish for
/// `|λ| > |τ| + |μ|`. Coefficients are nonnegative integers with constant
/// term `δ_{μτ}`.
pub fn verma_char_component(mu: &Partition, tau: &Partition, trunc: usize) -> QSeries {
    let size_cap = (mu.size() + tau.size()).min(trunc as u64) as u32;
    let mut acc = QSeries::zero(trunc);
    for lam in partitions_up_to(size_cap) {
        if lam.weighted_size() > trunc as u64 {
            continue;
        }
        // Stabilization is guaranteed just above the floor, so the cap
        // never binds for admissible inputs.
        let cap = DEFAULT_STABILIZATION_CAP
            .max((2 * (mu.size() + tau.size()) + 2) as u32)
            .max((2 * (lam.size() + mu.size().min(tau.size())) + 2) as u32);
        let (coeff, _) = reduced_kronecker_capped(&lam, tau, mu, cap)
            .expect("stabilization below the derived cap");
        if num_traits::Zero::is_zero(&coeff) {
            continue;
        }
        acc = &acc + &schur_bar(&lam, trunc).scale(&Rat::from_integer(coeff));
    }
    let out = acc.mul_one_minus_q_pow(1);
    debug_assert!(out.is_nonneg_integral(), "character coefficients");
    debug_assert_eq!(
        out.coeff(0) == &Rat::from_integer(1.into()),
        mu == tau,
        "constant term is delta"
    );
    out
}

/// Every component of the Verma character with `|μ| ≤ size_bound`, in
/// canonical order.
pub fn character_table_of_verma(
    tau: &Partition,
    size_bound: u32,
    trunc: usize,
) -> BTreeMap<Partition, QSeries> {
    partitions_up_to(size_bound)
        .into_iter()
        .map(|mu| {
            let series = verma_char_component(&mu, tau, trunc);
            (mu, series)
        })
        .collect()
}

/// A resolution by Verma objects along the chain `Γ(τ, s, ±l)` with the
/// exact degree offset of each term.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub tau: Partition,
    pub s: u32,
    pub sign: i8,
    pub r: i64,
    /// `terms[l] = Γ(τ, s, sign·l)`; `terms[0].diagram = τ`.
    pub terms: Vec<GammaResult>,
    /// `offsets[l] = r·(|terms[l]| − |τ|)`, strictly increasing from 0.
    pub offsets: Vec<u64>,
}

/// Builds the resolution chain on the line `c' = (ν − s)/r`.
///
/// `sign` must match `sign(r)`. In the negative direction the chain is
/// finite and stops at `l = τˇ_{j_s}`; in the positive direction it is
/// truncated at `max_l`.
pub fn resolution(tau: &Partition, s: i64, sign: i8, r: i64, max_l: u32) -> Result<Resolution> {
    if r == 0 || (r > 0) != (sign > 0) || !(sign == 1 || sign == -1) {
        return Err(Error::SignMismatch);
    }
    let j_s = tau.c_set_witness(s).ok_or(Error::SNotInCSet { s })?;
    let last = if sign < 0 {
        u32::min(max_l, tau.col_len(j_s as usize))
    } else {
        max_l
    };
    let mut terms = Vec::new();
    let mut offsets = Vec::new();
    for l in 0..=last {
        let g = gamma(tau, s, i64::from(sign) * i64::from(l))?;
        let delta = g.diagram.size() as i64 - tau.size() as i64;
        let offset = r * delta;
        assert!(offset >= 0, "offsets are nonnegative on the chain");
        assert_eq!(
            delta,
            i64::from(g.j_s) - i64::from(g.k_insert) + i64::from(sign) * i64::from(l),
            "size change matches the insertion data"
        );
        if let Some(&prev) = offsets.last() {
            assert!(offset as u64 > prev, "offsets are strictly increasing");
        }
        terms.push(g);
        offsets.push(offset as u64);
    }
    Ok(Resolution {
        tau: tau.clone(),
        s: s as u32,
        sign,
        r,
        terms,
        offsets,
    })
}

/// Component of the simple character at a generic point of the line
/// `c' = (ν − s)/r`, by the alternating sum over the resolution:
/// `Σ_l (−1)^l q^{offset_l} · ch Hom(X_μ, S𝔥 ⊗ X_{Γ_l})`, truncated at `q^N`.
pub fn simple_char_component(
    mu: &Partition,
    tau: &Partition,
    s: i64,
    r: i64,
    trunc: usize,
) -> Result<QSeries> {
    if r == 0 {
        return Err(Error::SignMismatch);
    }
    let sign: i8 = if r > 0 { 1 } else { -1 };
    let j_s = tau.c_set_witness(s).ok_or(Error::SNotInCSet { s })?;
    let mut acc = QSeries::zero(trunc);
    let mut l: u32 = 0;
    loop {
        if sign < 0 && l > tau.col_len(j_s as usize) {
            break;
        }
        let g = gamma(tau, s, i64::from(sign) * i64::from(l))?;
        let delta = g.diagram.size() as i64 - tau.size() as i64;
        let offset = (r * delta) as u64;
        if offset > trunc as u64 {
            break;
        }
        let offset = offset as usize;
        let term = verma_char_component(mu, &g.diagram, trunc - offset).shift_up(offset);
        acc = if l.is_multiple_of(2) {
            &acc + &term
        } else {
            &acc - &term
        };
        l += 1;
    }
    Ok(acc)
}

/// Closed form for the simple object over the empty diagram on the line
/// `cν = k`: `q^{|μ|} s_μ(1, q, ..., q^{k−2}) / Π_{2≤j≤k} (1 − q^j)`.
pub fn simple_char_l_empty_closed(mu: &Partition, k: u32, trunc: usize) -> Result<QSeries> {
    if k < 1 {
        return Err(Error::RegimeViolated(
            "the line parameter k must be >= 1".into(),
        ));
    }
    let finite = schur_finite(mu, k - 1);
    if finite.is_zero() {
        return Ok(QSeries::zero(trunc));
    }
    let mut s = finite.shift_up(mu.size() as usize).truncated(trunc);
    if s.trunc() < trunc {
        // Polynomial shorter than the requested truncation: pad exactly.
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(trunc + 1, Rat::from_integer(0.into()));
        s = QSeries::from_coeffs(coeffs);
    }
    for j in 2..=(k as usize) {
        if j <= trunc {
            s = s.div_one_minus_q_pow(j);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn int(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    #[test]
    fn degree_examples() {
        assert_eq!(min_degree_poly(&p(&[2, 1])), 4);
        assert_eq!(min_degree_poly(&Partition::empty()), 0);
        for k in 1..6u32 {
            assert_eq!(
                min_degree_poly(&Partition::col(k)),
                u64::from(k * (k + 1) / 2)
            );
        }
        assert_eq!(min_degree_bound(&p(&[2, 1]), &Partition::empty()), 4);
        assert_eq!(min_degree_bound(&p(&[2, 1]), &p(&[1])), 0);
        assert!(min_degree_bound(&Partition::empty(), &p(&[2, 1])) <= 0);
    }

    #[test]
    fn verma_component_over_empty() {
        // mu = ∅: partitions into parts >= 2.
        let s = verma_char_component(&Partition::empty(), &Partition::empty(), 6);
        let expect = [1i64, 0, 1, 1, 2, 2, 4];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(k), &int(e), "k={k}");
        }
        // mu = (1): q / ((1-q) Π_{j>=2} (1-q^j)).
        let s = verma_char_component(&p(&[1]), &Partition::empty(), 5);
        let expect = [0i64, 1, 1, 2, 3, 5];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(k), &int(e), "k={k}");
        }
    }

    #[test]
    fn verma_component_constant_term() {
        for mu in partitions_of(2) {
            for tau in partitions_of(2) {
                let s = verma_char_component(&mu, &tau, 4);
                assert_eq!(s.coeff(0) == &int(1), mu == tau);
            }
        }
    }

    #[test]
    fn verma_component_order_over_empty() {
        for mu in partitions_up_to(4) {
            let s = verma_char_component(&mu, &Partition::empty(), 10);
            assert_eq!(s.ord(), Some(mu.weighted_size() as usize), "{mu}");
        }
    }

    #[test]
    fn resolution_columns() {
        // Over ∅ with s = 0 the chain is the columns, offsets r·l.
        for r in 1..4i64 {
            let res = resolution(&Partition::empty(), 0, 1, r, 5).unwrap();
            for (l, term) in res.terms.iter().enumerate() {
                assert_eq!(term.diagram, Partition::col(l as u32));
                assert_eq!(res.offsets[l], (r as u64) * l as u64);
            }
        }
    }

    #[test]
    fn resolution_examples() {
        let res = resolution(&p(&[2, 1]), 1, 1, 1, 4).unwrap();
        let expect = [
            p(&[2, 1]),
            p(&[2, 1, 1]),
            p(&[2, 1, 1, 1]),
            p(&[2, 1, 1, 1, 1]),
        ];
        for (l, want) in expect.iter().enumerate() {
            assert_eq!(&res.terms[l].diagram, want);
            assert_eq!(res.offsets[l], l as u64);
        }

        let res = resolution(&Partition::empty(), 2, 1, 1, 4).unwrap();
        let expect = [
            Partition::empty(),
            p(&[3]),
            p(&[3, 1]),
            p(&[3, 1, 1]),
            p(&[3, 1, 1, 1]),
        ];
        let offsets = [0u64, 3, 4, 5, 6];
        for (l, want) in expect.iter().enumerate() {
            assert_eq!(&res.terms[l].diagram, want);
            assert_eq!(res.offsets[l], offsets[l]);
        }

        assert!(matches!(
            resolution(&Partition::empty(), 0, 1, -2, 3),
            Err(Error::SignMismatch)
        ));
        assert!(matches!(
            resolution(&p(&[2, 1]), 2, 1, 1, 3),
            Err(Error::SNotInCSet { s: 2 })
        ));
    }

    #[test]
    fn negative_resolution_is_finite() {
        // tau = (2,2), s = 3 has j_s = 2 and column length 2.
        let tau = p(&[2, 2]);
        let res = resolution(&tau, 3, -1, -2, 10).unwrap();
        assert_eq!(res.terms.len(), 3);
        assert_eq!(res.terms[0].diagram, tau);
        for l in 1..res.terms.len() {
            assert!(res.terms[l].diagram.size() < res.terms[l - 1].diagram.size());
            assert!(res.offsets[l] > res.offsets[l - 1]);
        }
    }

    #[test]
    fn offsets_match_size_steps() {
        for tau in partitions_up_to(4) {
            for s in 0..=(tau.c_set_tail_start() + 2) {
                if tau.c_set_witness(s).is_none() {
                    continue;
                }
                for r in 1..3i64 {
                    let res = resolution(&tau, s, 1, r, 4).unwrap();
                    for l in 1..res.terms.len() {
                        let step = res.terms[l].diagram.size() - res.terms[l - 1].diagram.size();
                        assert_eq!(
                            res.offsets[l] - res.offsets[l - 1],
                            r as u64 * step,
                            "{tau} s={s} r={r} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn l_empty_closed_examples() {
        // k = 1: only the empty component survives.
        let s = simple_char_l_empty_closed(&Partition::empty(), 1, 6).unwrap();
        assert_eq!(s, QSeries::one(6));
        assert!(simple_char_l_empty_closed(&p(&[1]), 1, 6)
            .unwrap()
            .is_zero());
        // mu = (1), k = 2: q/(1-q^2).
        let s = simple_char_l_empty_closed(&p(&[1]), 2, 6).unwrap();
        let expect = [0i64, 1, 0, 1, 0, 1, 0];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(k), &int(e));
        }
        assert!(simple_char_l_empty_closed(&p(&[1, 1]), 2, 8)
            .unwrap()
            .is_zero());
        assert!(simple_char_l_empty_closed(&p(&[1]), 0, 4).is_err());
    }

    #[test]
    fn euler_sum_matches_closed_form_small() {
        for k in 1..=2u32 {
            for mu in partitions_up_to(3) {
                let euler =
                    simple_char_component(&mu, &Partition::empty(), 0, i64::from(k), 8).unwrap();
                let closed = simple_char_l_empty_closed(&mu, k, 8).unwrap();
                assert_eq!(euler, closed, "k={k} mu={mu}");
            }
        }
    }

    #[test]
    fn simple_component_vanishes_for_long_mu() {
        for k in 1..=3u32 {
            let mu = Partition::col(k);
            let s = simple_char_component(&mu, &Partition::empty(), 0, i64::from(k), 10).unwrap();
            assert!(s.is_zero(), "k={k}");
        }
    }

    #[test]
    fn verma_table_exact_small_example() {
        let table = character_table_of_verma(&Partition::empty(), 1, 5);
        let empty: Vec<i64> = table[&Partition::empty()]
            .coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(empty, vec![1, 0, 1, 1, 2, 2]);
        let one: Vec<i64> = table[&p(&[1])]
            .coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(one, vec![0, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn verma_table_has_all_components() {
        let table = character_table_of_verma(&Partition::empty(), 2, 5);
        assert_eq!(table.len(), 4);
        for (mu, series) in &table {
            assert_eq!(series.coeff(0) == &int(1), mu.is_empty());
        }
    }
}
