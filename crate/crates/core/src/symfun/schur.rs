//! Principal and finite Schur specializations.

use num_traits::Zero;

use crate::partition::Partition;
use crate::symfun::qseries::{partition_gf, QSeries};

/// `s_λ(1, q, q², ...) = q^{n(λ)} / Π_{x∈λ} (1 − q^{h(x)})`, truncated.
pub fn schur_principal(lambda: &Partition, trunc: usize) -> QSeries {
    let nw = lambda.n_weight() as usize;
    if nw > trunc {
        return QSeries::zero(trunc);
    }
    let mut s = QSeries::monomial(nw, trunc);
    for (_, h) in lambda.hook_lengths() {
        s = s.div_one_minus_q_pow(h as usize);
    }
    s
}

/// `s̄_λ = q^{|λ|} s_λ(1, q, ...) / Π_{j≥1} (1 − q^j)`; its order is `Σ i·λ_i`.
pub fn schur_bar(lambda: &Partition, trunc: usize) -> QSeries {
    let shifted = schur_principal(lambda, trunc)
        .shift_up(lambda.size() as usize)
        .truncated(trunc);
    &shifted * &partition_gf(trunc)
}

/// The finite specialization `s_λ(1, q, ..., q^{mvars−1})` as an exact
/// polynomial: zero when `l(λ) > mvars`, otherwise
/// `q^{n(λ)} Π_{x∈λ} (1 − q^{mvars + c(x)}) / (1 − q^{h(x)})`.
///
/// The result is a [`QSeries`] whose truncation equals the exact degree.
pub fn schur_finite(lambda: &Partition, mvars: u32) -> QSeries {
    if lambda.len() as u32 > mvars {
        return QSeries::zero(0);
    }
    let nw = lambda.n_weight() as usize;
    let m = i64::from(mvars);
    let mut num_exps = Vec::new();
    let mut den_exps = Vec::new();
    for (i, j) in lambda.cells() {
        let c = j as i64 - i as i64;
        debug_assert!(m + c >= 1, "l(lambda) <= mvars keeps all factors positive");
        num_exps.push((m + c) as usize);
        den_exps.push(lambda.hook_length(i, j) as usize);
    }
    let num_degree: usize = nw + num_exps.iter().sum::<usize>();
    let degree = num_degree - den_exps.iter().sum::<usize>();
    let mut s = QSeries::monomial(nw, num_degree);
    for a in num_exps {
        s = s.mul_one_minus_q_pow(a);
    }
    for h in den_exps {
        s = s.div_one_minus_q_pow(h);
    }
    debug_assert!(
        s.coeffs()[degree + 1..].iter().all(Zero::is_zero),
        "the quotient is a polynomial of the predicted degree"
    );
    s.truncated(degree)
}
