//! Registry of q-series identities, each checked coefficient by coefficient
//! below a truncation order.  Where one side is a count of chains or of
//! singular vectors, it is produced by enumerating the complex rather than
//! from any closed form.

use std::fmt;
use std::str::FromStr;

use crate::algebra::epsilon;
use crate::chain::GradedCounts;
use crate::error::{Error, Result};
use crate::laplacian::spectrum;
use crate::series::{
    euler_product, theta_at_one, theta_neg_x_one, theta_two_sided, Eisenstein, HalfLaurent, Poly,
    PolyFactor, ProductFamily, Ring, TruncatedSeries,
};
use crate::sl2::{singular_block_dims, weyl_map, RepRingElement};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 40;

/// The per-weight singular identities take every coefficient with
/// `λ ≤ BRUTE_FORCE_LAMBDA` from the kernel of `e₁` on enumerated blocks;
/// higher coefficients come from weight-space counts.
pub const BRUTE_FORCE_LAMBDA: i64 = 10;

/// Degree bound for the kernel computations behind `mult2_closed`.
pub const BRUTE_FORCE_DEGREE: i64 = 16;

/// Eigenvalue counts for `L_{−1}` in degrees up to this bound come from
/// exact spectra; above it, from singular counts.
pub const SPECTRUM_DEGREE: i64 = 10;

/// Largest dominant weight used by the per-weight singular identities.
pub const SINGULAR_WEIGHT_MAX: i64 = 6;

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $min:literal, $about:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// Smallest order at which the identity says something beyond
            /// its first couple of terms.
            pub fn minimal_order(self) -> usize {
                match self {
                    $(IdentityId::$variant => $min,)*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $about,)*
                }
            }
        }
    };
}

identity_ids! {
    GaussJacobi => "gauss_jacobi", 7,
        "(1−u)∏(1−u⁻¹xᵐ)(1−xᵐ)(1−uxᵐ) = Σ_w (−1)ʷ uʷ x^{w(w−1)/2}";
    JacobiTraditional => "jacobi_traditional", 10,
        "∏(1−u⁻²x^{2m−1})(1−x^{2m})(1−u²x^{2m−1}) = Σ_w (−1)ʷ u^{2w} x^{w²}";
    ThetaInverseProduct => "theta_inverse_product", 10,
        "∏(1+xᵐ)/(1−xᵐ) = Θ⁻¹(−x,1)";
    GenL1 => "gen_L1", 12,
        "Σ_λ dim C^{[w,λ]}(L_1) x^λ = Θ⁻¹(−x,1) for every w";
    GenL0 => "gen_L0", 10,
        "Σ dim C^{[w,λ]}(L_0) uʷ x^λ = 2Σ_r u^r x^{r²}/Θ(−x,1)";
    MultL0Product => "mult_L0_product", 10,
        "Θ(x,1)/Θ(−x,1) = ∏((1+x^{2m−1})/(1−x^{2m−1}))²";
    L2GaussJacobi => "L2_gauss_jacobi", 11,
        "∏(1−u⁻¹xᵐ)(1−xᵐ)(1−uxᵐ) = Σ_{w≥0} (−1)ʷ [2w+1]_u x^{w(w+1)/2}";
    JacobiCube => "jacobi_cube", 11,
        "∏(1−xᵐ)³ = Σ_{w≥0} (−1)ʷ (2w+1) x^{w(w+1)/2}";
    EulerPentagonal => "euler_pentagonal", 16,
        "∏(1−ω⁻¹xᵐ)(1−xᵐ)(1−ωxᵐ) = ∏(1−x^{3m}) = Σ_{w≥0} (−1)ʷ ε_{2w+1} x^{w(w+1)/2}";
    BracketSign => "bracket_sign", 6,
        "[2w+1]_{−u} = (−1)ʷ[2w+1]_u + 2Σ_{r<w} (−1)^r [2r+1]_u";
    SingularL2 => "thm_6_2", 11,
        "Σ_λ dim S^{[w,λ]}(L_2) x^λ = (1 + 2Σ_{r≥1}(−1)^r x^{rw+r(r+1)/2}) Θ⁻¹(−x,1)";
    SingularLminus1 => "thm_6_3", 11,
        "Σ_λ dim S^{[w,λ]}(L_{−1}) x^λ = 2(x^{w²} − x^{(w+1)²}) Θ⁻¹(−x,1)";
    ExteriorProducts => "section2_products", 11,
        "∏_{a≥1}(1+u⁻¹xᵃ)(1+xᵃ)(1+uxᵃ) and ∏_{a≥0} as singular sums over Θ(−x,1)";
    MultLminus1 => "mult_Lminus1", 10,
        "Σ_λ dim C_{*,λ}(L_{−1}) x^λ = 2Θ(x,1)/Θ(−x,1)";
    SingularGaussJacobi => "singular_gauss_jacobi", 11,
        "⊗∏(1−xᵃ)(1−(z−1)xᵃ+x^{2a}) = Σ_{w≥0} (−1)ʷ zʷ x^{w(w+1)/2} in R(sl₂)";
    Mult2Closed => "mult2_closed", 11,
        "Σ dim S^{(w,h)}(L_2) zʷ xʰ = (1 + Σ_{w≥1}(zʷ + 2(−1)ʷ Σ_{r<w}(−1)^r z^r) x^{w(w+1)/2}) Θ⁻¹(−x,1)";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One coefficient-by-coefficient comparison inside an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityPart {
    pub label: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub first_mismatch: Option<usize>,
}

impl IdentityPart {
    fn compare<R: Ring>(label: impl Into<String>, lhs: &TruncatedSeries<R>, rhs: &TruncatedSeries<R>) -> Self {
        IdentityPart {
            label: label.into(),
            lhs: lhs.coeffs().iter().map(ToString::to_string).collect(),
            rhs: rhs.coeffs().iter().map(ToString::to_string).collect(),
            first_mismatch: lhs.first_mismatch(rhs),
        }
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub order: usize,
    pub parts: Vec<IdentityPart>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(IdentityPart::passed)
    }

    /// The first failing part and the exponent where it fails.
    pub fn first_failure(&self) -> Option<(&IdentityPart, usize)> {
        self.parts.iter().find_map(|p| p.first_mismatch.map(|n| (p, n)))
    }
}

/// Checks the named identity below `x^order`.
pub fn verify_identity(name: &str, order: usize) -> Result<IdentityReport> {
    verify(name.parse()?, order)
}

pub fn verify(id: IdentityId, order: usize) -> Result<IdentityReport> {
    if order == 0 {
        return Err(Error::invalid("truncation order must be at least 1"));
    }
    let n = order;
    let parts = match id {
        IdentityId::GaussJacobi => gauss_jacobi(n)?,
        IdentityId::JacobiTraditional => jacobi_traditional(n)?,
        IdentityId::ThetaInverseProduct => theta_inverse_product(n)?,
        IdentityId::GenL1 => gen_l1(n)?,
        IdentityId::GenL0 => gen_l0(n)?,
        IdentityId::MultL0Product => mult_l0_product(n)?,
        IdentityId::L2GaussJacobi => l2_gauss_jacobi(n)?,
        IdentityId::JacobiCube => jacobi_cube(n)?,
        IdentityId::EulerPentagonal => euler_pentagonal(n)?,
        IdentityId::BracketSign => bracket_sign(n)?,
        IdentityId::SingularL2 => singular_l2(n)?,
        IdentityId::SingularLminus1 => singular_lminus1(n)?,
        IdentityId::ExteriorProducts => exterior_products(n)?,
        IdentityId::MultLminus1 => mult_lminus1(n)?,
        IdentityId::SingularGaussJacobi => singular_gauss_jacobi(n)?,
        IdentityId::Mult2Closed => mult2_closed(n)?,
    };
    Ok(IdentityReport { id, order, parts })
}

fn u(e: i64) -> HalfLaurent {
    HalfLaurent::u_power(1, e)
}

fn sign(w: i64) -> i64 {
    if w.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn isqrt(n: i64) -> i64 {
    (0..).take_while(|r| r * r <= n).last().unwrap_or(0)
}

fn triangular(w: i64) -> i64 {
    w * (w + 1) / 2
}

/// `Θ⁻¹(−x, 1)`.
fn mu(n: usize) -> Result<TruncatedSeries<i64>> {
    theta_neg_x_one(n).inverse()
}

fn lift<R: Ring>(s: &TruncatedSeries<i64>) -> TruncatedSeries<R> {
    s.map(|&c| R::from_i64(c))
}

fn to_i64(c: u128) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::Overflow("chain count"))
}

/// `∏_{m≥start} (1 − c·x^{step·m − shift})` over the supplied coefficients.
fn linear_factors<R: Ring + Send + Sync + 'static>(c: R, step: usize, shift: usize) -> ProductFamily<R> {
    ProductFamily::tail(1, move |m| PolyFactor::binomial(c.negated(), step * m - shift))
}

/// `∏_{m≥1}(1 − u⁻¹xᵐ)(1 − xᵐ)(1 − uxᵐ)`
fn triple_product_lhs(n: usize) -> Result<TruncatedSeries<HalfLaurent>> {
    euler_product(
        &[
            linear_factors(u(-1), 1, 0),
            linear_factors(HalfLaurent::one(), 1, 0),
            linear_factors(u(1), 1, 0),
        ],
        n,
    )
}

fn gauss_jacobi(n: usize) -> Result<Vec<IdentityPart>> {
    let lhs = triple_product_lhs(n)?.times(&TruncatedSeries::constant(HalfLaurent::one().minus(&u(1)), n));
    let mut rhs = TruncatedSeries::zero(n);
    let reach = isqrt(2 * n as i64) + 2;
    for w in -reach..=reach + 1 {
        let e = w * (w - 1) / 2;
        if (e as usize) < n {
            rhs.add_at(e as usize, &HalfLaurent::u_power(sign(w), w));
        }
    }
    Ok(vec![IdentityPart::compare("product = sum", &lhs, &rhs)])
}

fn jacobi_traditional(n: usize) -> Result<Vec<IdentityPart>> {
    let lhs = euler_product(
        &[
            linear_factors(u(-2), 2, 1),
            linear_factors(HalfLaurent::one(), 2, 0),
            linear_factors(u(2), 2, 1),
        ],
        n,
    )?;
    let mut rhs = TruncatedSeries::zero(n);
    let reach = isqrt(n as i64) + 1;
    for w in -reach..=reach {
        let e = (w * w) as usize;
        if e < n {
            rhs.add_at(e, &HalfLaurent::u_power(sign(w), 2 * w));
        }
    }
    Ok(vec![IdentityPart::compare("product = sum", &lhs, &rhs)])
}

/// `∏_{m≥1}(1 + xᵐ)/(1 − xᵐ)`
fn overpartitions(n: usize) -> Result<TruncatedSeries<i64>> {
    euler_product(
        &[
            ProductFamily::tail(1, |m| PolyFactor::binomial(1, m)),
            ProductFamily::tail(1, |m| PolyFactor::inverse(vec![(0, 1), (m, -1)])),
        ],
        n,
    )
}

fn theta_inverse_product(n: usize) -> Result<Vec<IdentityPart>> {
    Ok(vec![IdentityPart::compare("product = 1/Θ(−x,1)", &overpartitions(n)?, &mu(n)?)])
}

/// Window of weights over which the independence from `w` is checked.
const GEN_L1_WEIGHTS: std::ops::RangeInclusive<i64> = -3..=3;

fn gen_l1(n: usize) -> Result<Vec<IdentityPart>> {
    let shift = GEN_L1_WEIGHTS.map(|w| w * (w - 1) / 2).max().unwrap_or(0);
    let counts = WeightCounts::new(1, n as i64 - 1 + shift)?;
    let rhs = mu(n)?;
    let mut parts = Vec::new();
    for w in GEN_L1_WEIGHTS {
        let mut lhs = TruncatedSeries::zero(n);
        for lambda in 0..n as i64 {
            let h = lambda + w * (w - 1) / 2;
            lhs.add_at(lambda as usize, &counts.dim(w, h)?);
        }
        parts.push(IdentityPart::compare(format!("w = {w}"), &lhs, &rhs));
    }
    Ok(parts)
}

/// Weight-graded chain counts `dim C^{(w,h)}` as `i64`.
struct WeightCounts(GradedCounts);

impl WeightCounts {
    fn new(k: i64, h_max: i64) -> Result<Self> {
        Ok(WeightCounts(GradedCounts::new(k, h_max.max(0))?))
    }

    fn dim(&self, w: i64, h: i64) -> Result<i64> {
        if h < 0 {
            return Ok(0);
        }
        to_i64(self.0.dim(None, Some(w), h))
    }

    /// `dim C^{(w,h)} − dim C^{(w+1,h)}`, the number of singular vectors of
    /// weight `w` when the complex is an `sl₂`-module.
    fn singular(&self, w: i64, h: i64) -> Result<i64> {
        Ok(self.dim(w, h)? - self.dim(w + 1, h)?)
    }
}

fn gen_l0(n: usize) -> Result<Vec<IdentityPart>> {
    let counts = WeightCounts::new(0, n as i64 - 1)?;
    let mut graded = TruncatedSeries::zero(n);
    let mut flat = TruncatedSeries::zero(n);
    for lambda in 0..n as i64 {
        // λ = h + w(w+1)/2 with h ≥ 0
        let reach = isqrt(2 * lambda) + 1;
        for w in -reach - 1..=reach {
            let h = lambda - triangular(w);
            let d = counts.dim(w, h)?;
            graded.add_at(lambda as usize, &HalfLaurent::u_power(d, w));
            flat.add_at(lambda as usize, &d);
        }
    }
    let two = TruncatedSeries::constant(HalfLaurent::from_i64(2), n);
    let graded_rhs = two.times(&theta_two_sided(n)).times(&lift(&mu(n)?));
    let flat_rhs = theta_at_one(n).scaled(&2).times(&mu(n)?);
    Ok(vec![
        IdentityPart::compare("weight-graded", &graded, &graded_rhs),
        IdentityPart::compare("u = 1", &flat, &flat_rhs),
    ])
}

fn mult_l0_product(n: usize) -> Result<Vec<IdentityPart>> {
    let lhs = theta_at_one(n).times(&mu(n)?);
    let odd = |m: usize| 2 * m - 1;
    let rhs = euler_product(
        &[
            ProductFamily::tail(1, move |m| PolyFactor::new(vec![(0, 1), (odd(m), 2), (2 * odd(m), 1)])),
            ProductFamily::tail(1, move |m| PolyFactor::inverse(vec![(0, 1), (odd(m), -2), (2 * odd(m), 1)])),
        ],
        n,
    )?;
    Ok(vec![IdentityPart::compare("ratio = product", &lhs, &rhs)])
}

/// `Σ_{w≥0} (−1)ʷ f(w) x^{w(w+1)/2}`
fn triangular_sum<R: Ring>(n: usize, f: impl Fn(i64) -> R) -> TruncatedSeries<R> {
    let mut s = TruncatedSeries::zero(n);
    for w in (0..).take_while(|&w| (triangular(w) as usize) < n) {
        s.add_at(triangular(w) as usize, &R::from_i64(sign(w)).times(&f(w)));
    }
    s
}

fn l2_gauss_jacobi(n: usize) -> Result<Vec<IdentityPart>> {
    let rhs = triangular_sum(n, |w| HalfLaurent::quantum(2 * w + 1));
    Ok(vec![IdentityPart::compare("product = sum", &triple_product_lhs(n)?, &rhs)])
}

fn jacobi_cube(n: usize) -> Result<Vec<IdentityPart>> {
    let lhs = euler_product(&[ProductFamily::tail(1, |m| PolyFactor::new(vec![(0, 1), (m, -3), (2 * m, 3), (3 * m, -1)]))], n)?;
    let rhs = triangular_sum(n, |w| 2 * w + 1);
    Ok(vec![IdentityPart::compare("product = sum", &lhs, &rhs)])
}

fn euler_pentagonal(n: usize) -> Result<Vec<IdentityPart>> {
    let w = Eisenstein::OMEGA;
    let w_inv = Eisenstein::omega_pow(-1);
    let lhs = euler_product(
        &[
            linear_factors(w_inv, 1, 0),
            linear_factors(Eisenstein::one(), 1, 0),
            linear_factors(w, 1, 0),
        ],
        n,
    )?;
    let cubes = euler_product(&[linear_factors(Eisenstein::one(), 3, 0)], n)?;
    let sum = triangular_sum(n, |w| Eisenstein::from_i64(epsilon(2 * w + 1)));
    // Euler's pentagonal series in x³: Σ_j (−1)^j x^{3j(3j−1)/2}
    let mut pentagonal = TruncatedSeries::zero(n);
    let reach = isqrt(n as i64) + 1;
    for j in -reach..=reach {
        let e = 3 * j * (3 * j - 1) / 2;
        if (e as usize) < n {
            pentagonal.add_at(e as usize, &Eisenstein::from_i64(sign(j)));
        }
    }
    Ok(vec![
        IdentityPart::compare("u = ω product = ∏(1−x^{3m})", &lhs, &cubes),
        IdentityPart::compare("u = ω product = ε-sum", &lhs, &sum),
        IdentityPart::compare("ε-sum = pentagonal series", &sum, &pentagonal),
    ])
}

fn bracket_sign(n: usize) -> Result<Vec<IdentityPart>> {
    let mut lhs = TruncatedSeries::zero(n);
    let mut rhs = TruncatedSeries::zero(n);
    for w in 0..n as i64 {
        lhs.add_at(w as usize, &HalfLaurent::quantum(2 * w + 1).negate_u()?);
        let mut r = HalfLaurent::quantum(2 * w + 1).times(&HalfLaurent::from_i64(sign(w)));
        for s in 0..w {
            r = r.plus(&HalfLaurent::quantum(2 * s + 1).times(&HalfLaurent::from_i64(2 * sign(s))));
        }
        rhs.add_at(w as usize, &r);
    }
    Ok(vec![IdentityPart::compare("coefficient of xʷ is the w-th bracket", &lhs, &rhs)])
}

/// `dim S^{(w,h)}(L_k)` from weight counts, and also from the kernel of `e₁`
/// when `brute` is set.
fn singular_dim(k: i64, counts: &WeightCounts, w: i64, h: i64, brute: bool) -> Result<i64> {
    if h < 0 {
        return Ok(0);
    }
    let counted = counts.singular(w, h)?;
    if brute {
        let direct = singular_block_dims(k, w, h, None)? as i64;
        if direct != counted {
            return Err(Error::falsified(
                format!("S^({w},{h})(L_{k})"),
                format!("kernel of e₁ has dimension {direct}, weight counts give {counted}"),
            ));
        }
    }
    Ok(counted)
}

fn singular_l2(n: usize) -> Result<Vec<IdentityPart>> {
    let counts = WeightCounts::new(2, n as i64 - 1 + triangular(SINGULAR_WEIGHT_MAX))?;
    let m = mu(n)?;
    let mut parts = Vec::new();
    for w in 0..=SINGULAR_WEIGHT_MAX {
        let mut lhs = TruncatedSeries::zero(n);
        for lambda in 0..n as i64 {
            lhs.add_at(lambda as usize, &singular_dim(2, &counts, w, lambda + triangular(w), lambda <= BRUTE_FORCE_LAMBDA)?);
        }
        let mut factor = TruncatedSeries::one(n);
        for r in (1..).take_while(|&r| ((r * w + triangular(r)) as usize) < n) {
            factor.add_at((r * w + triangular(r)) as usize, &(2 * sign(r)));
        }
        parts.push(IdentityPart::compare(format!("w = {w}"), &lhs, &factor.times(&m)));
    }
    Ok(parts)
}

fn singular_lminus1(n: usize) -> Result<Vec<IdentityPart>> {
    let counts = WeightCounts::new(-1, n as i64 - 1)?;
    let m = mu(n)?;
    let mut parts = Vec::new();
    for w in 0..=SINGULAR_WEIGHT_MAX {
        let mut lhs = TruncatedSeries::zero(n);
        for lambda in 0..n as i64 {
            lhs.add_at(lambda as usize, &singular_dim(-1, &counts, w, lambda - triangular(w), lambda <= BRUTE_FORCE_LAMBDA)?);
        }
        let mut factor = TruncatedSeries::zero(n);
        for (e, c) in [(w * w, 2), ((w + 1) * (w + 1), -2)] {
            if (e as usize) < n {
                factor.add_at(e as usize, &c);
            }
        }
        parts.push(IdentityPart::compare(format!("w = {w}"), &lhs, &factor.times(&m)));
    }
    Ok(parts)
}

/// `(1 + u⁻¹xᵃ)(1 + xᵃ)(1 + uxᵃ)`, the character of `Λ(M_a)`.
fn exterior_factor(a: usize) -> PolyFactor<HalfLaurent> {
    PolyFactor::new(vec![(0, HalfLaurent::one()), (a, HalfLaurent::quantum(3)), (2 * a, HalfLaurent::quantum(3)), (3 * a, HalfLaurent::one())])
}

/// `Σ dim C^{(w,h)}(L_k) uʷ xʰ` from chain counts.
fn chain_character(k: i64, n: usize) -> Result<TruncatedSeries<HalfLaurent>> {
    let counts = GradedCounts::new(k, n as i64 - 1)?;
    let mut s = TruncatedSeries::zero(n);
    for ((_, w, h), c) in counts.entries() {
        s.add_at(h as usize, &HalfLaurent::u_power(to_i64(c)?, w));
    }
    Ok(s)
}

fn exterior_products(n: usize) -> Result<Vec<IdentityPart>> {
    let m: TruncatedSeries<HalfLaurent> = lift(&mu(n)?);
    let level_two = euler_product(&[ProductFamily::tail(1, exterior_factor)], n)?;
    let mut two_sum = TruncatedSeries::zero(n);
    for w in (0..).take_while(|&w| (triangular(w) as usize) < n) {
        let c = HalfLaurent::quantum(2 * w + 1).negate_u()?.times(&HalfLaurent::from_i64(sign(w)));
        two_sum.add_at(triangular(w) as usize, &c);
    }
    let level_minus_one = euler_product(
        &[ProductFamily::tail(1, exterior_factor).with_prefix(vec![exterior_factor(0)])],
        n,
    )?;
    let mut minus_sum = TruncatedSeries::zero(n);
    for w in (0..).take_while(|&w| ((w * (w - 1) / 2) as usize) < n) {
        let e = (w * (w - 1) / 2) as usize;
        let c = HalfLaurent::quantum(2 * w + 1).times(&HalfLaurent::from_i64(2));
        minus_sum.add_at(e, &c);
        if e + ((2 * w + 1) as usize) < n {
            minus_sum.add_at(e + (2 * w + 1) as usize, &c.negated());
        }
    }
    Ok(vec![
        IdentityPart::compare("k = 2 product = chain counts", &level_two, &chain_character(2, n)?),
        IdentityPart::compare("k = 2 product = singular sum", &level_two, &two_sum.times(&m)),
        IdentityPart::compare("k = −1 product = chain counts", &level_minus_one, &chain_character(-1, n)?),
        IdentityPart::compare("k = −1 product = singular sum", &level_minus_one, &minus_sum.times(&m)),
    ])
}

fn mult_lminus1(n: usize) -> Result<Vec<IdentityPart>> {
    let counts = WeightCounts::new(-1, n as i64 - 1)?;
    let mut lhs = TruncatedSeries::zero(n);
    for h in 0..n as i64 {
        if h <= SPECTRUM_DEGREE {
            for (lambda, mult) in spectrum(-1, h)?.eigenvalues {
                if (lambda as usize) < n {
                    lhs.add_at(lambda as usize, &(mult as i64));
                }
            }
            continue;
        }
        // each singular vector of weight w spans a (2w+1)-dimensional
        // eigenspace with λ = h + w(w+1)/2
        for w in (0..).take_while(|&w| ((h + triangular(w)) as usize) < n) {
            let s = counts.singular(w, h)?;
            lhs.add_at((h + triangular(w)) as usize, &(s * (2 * w + 1)));
        }
    }
    let rhs = theta_at_one(n).scaled(&2).times(&mu(n)?);
    Ok(vec![IdentityPart::compare("multiplicities = 2Θ(x,1)/Θ(−x,1)", &lhs, &rhs)])
}

fn singular_gauss_jacobi(n: usize) -> Result<Vec<IdentityPart>> {
    let z = RepRingElement::simple(2);
    let middle = z.minus(&RepRingElement::one()).negated();
    let lhs = euler_product(
        &[
            ProductFamily::tail(1, |a| PolyFactor::binomial(RepRingElement::from_i64(-1), a)),
            ProductFamily::tail(1, move |a| {
                PolyFactor::new(vec![(0, RepRingElement::one()), (a, middle.clone()), (2 * a, RepRingElement::one())])
            }),
        ],
        n,
    )?;
    let rhs = triangular_sum(n, |w| RepRingElement::simple(2 * w as u32));
    let weyl_image = lhs.map(weyl_map);
    Ok(vec![
        IdentityPart::compare("product = sum in R(sl₂)", &lhs, &rhs),
        IdentityPart::compare("W_u(product) = triple product", &weyl_image, &triple_product_lhs(n)?),
        IdentityPart::compare("W_u(sum) = bracket sum", &rhs.map(weyl_map), &triangular_sum(n, |w| HalfLaurent::quantum(2 * w + 1))),
    ])
}

fn mult2_closed(n: usize) -> Result<Vec<IdentityPart>> {
    let counts = WeightCounts::new(2, n as i64 - 1)?;
    let mut lhs: TruncatedSeries<Poly<i64>> = TruncatedSeries::zero(n);
    for h in 0..n as i64 {
        for w in 0.. {
            if counts.dim(w, h)? == 0 {
                break;
            }
            lhs.add_at(h as usize, &Poly::monomial(singular_dim(2, &counts, w, h, h <= BRUTE_FORCE_DEGREE)?, w as usize));
        }
    }
    let mut factor = TruncatedSeries::one(n);
    for w in (1..).take_while(|&w| (triangular(w) as usize) < n) {
        let mut c = Poly::monomial(1, w as usize);
        for r in 0..w {
            c = c.plus(&Poly::monomial(2 * sign(w) * sign(r), r as usize));
        }
        factor.add_at(triangular(w) as usize, &c);
    }
    let rhs = factor.times(&lift(&mu(n)?));
    Ok(vec![IdentityPart::compare("singular character", &lhs, &rhs)])
}
