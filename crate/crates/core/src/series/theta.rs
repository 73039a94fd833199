use super::{HalfLaurent, Ring, TruncatedSeries};

/// Which specialisation of `Θ(x, u) = 1 + 2Σ_{r≥1} uʳ x^{r²}` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMode {
    /// `u` kept as a formal variable.
    Generic,
    /// `u = 1`.
    UnitU,
    /// `Θ(−x, 1)`.
    NegatedX,
}

fn squares(order: usize) -> impl Iterator<Item = (i64, usize)> {
    (1i64..).map(|r| (r, (r * r) as usize)).take_while(move |&(_, s)| s < order)
}

/// `Θ` in the requested mode, always with Laurent coefficients in `u`.
pub fn theta(mode: ThetaMode, order: usize) -> TruncatedSeries<HalfLaurent> {
    match mode {
        ThetaMode::Generic => {
            let terms = squares(order).map(|(r, s)| (s, HalfLaurent::u_power(2, r)));
            TruncatedSeries::one(order).plus(&TruncatedSeries::from_terms(terms, order))
        }
        ThetaMode::UnitU => theta_at_one(order).map(|&c| HalfLaurent::from_i64(c)),
        ThetaMode::NegatedX => theta_neg_x_one(order).map(|&c| HalfLaurent::from_i64(c)),
    }
}

/// `Θ(x, 1) = 1 + 2Σ_{r≥1} x^{r²}`.
pub fn theta_at_one(order: usize) -> TruncatedSeries<i64> {
    let terms = squares(order).map(|(_, s)| (s, 2));
    TruncatedSeries::one(order).plus(&TruncatedSeries::from_terms(terms, order))
}

/// `Θ(−x, 1) = 1 + 2Σ_{r≥1} (−1)ʳ x^{r²}`.
pub fn theta_neg_x_one(order: usize) -> TruncatedSeries<i64> {
    theta_at_one(order).negate_x()
}

/// The two-sided series `Σ_{r∈ℤ} uʳ x^{r²}`, which agrees with `Θ(x, 1)`
/// at `u = 1`.
pub fn theta_two_sided(order: usize) -> TruncatedSeries<HalfLaurent> {
    let mut terms = vec![(0, HalfLaurent::one())];
    for (r, s) in squares(order) {
        terms.push((s, HalfLaurent::u_power(1, r).plus(&HalfLaurent::u_power(1, -r))));
    }
    TruncatedSeries::from_terms(terms, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definition_examples() {
        assert_eq!(theta_at_one(10).coeffs(), &[1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        let g = theta(ThetaMode::Generic, 5);
        assert_eq!(g.to_string(), "1 + 2ux + 2u^2x^4 + O(x^5)");
        assert_eq!(theta_at_one(1).coeffs(), &[1]);
        assert_eq!(theta_neg_x_one(5).coeffs(), &[1, -2, 0, 0, 2]);
        assert_eq!(theta(ThetaMode::NegatedX, 5), theta_neg_x_one(5).map(|&c| HalfLaurent::from_i64(c)));
        assert_eq!(theta(ThetaMode::Generic, 12).map(HalfLaurent::at_one), theta_at_one(12));
        assert_eq!(theta_two_sided(12).map(HalfLaurent::at_one), theta_at_one(12));
    }
}
