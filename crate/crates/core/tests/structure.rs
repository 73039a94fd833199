use afflap_core::laplacian::apply_laplacian;
use afflap_core::series::{euler_product, PolyFactor, ProductFamily};
use afflap_core::sl2::singular_block_dims;
use afflap_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn laplacian_is_degree_minus_half_casimir() {
    for k in [-1, 2] {
        for h in 0..=6 {
            let block = enumerate_block(k, h, None).unwrap();
            let view = WeightModuleView::from_block(&block).unwrap();
            let casimir = view.casimir().unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for (j, m) in view.monomials().iter().enumerate() {
                let gamma = apply_laplacian(k, &Chain::monomial(m.clone())).unwrap();
                let mut want = Chain::zero();
                want.add_term(m.clone(), rat(h));
                for &(i, c) in casimir.column(j) {
                    want.add_term(view.monomials()[i].clone(), rat(-sign * c) / rat(2));
                }
                assert_eq!(gamma, want, "k={k} h={h} {m}");
            }
        }
    }
}

#[test]
fn eigenvalue_multiplicities_come_from_singular_vectors() {
    for k in [-1, 2] {
        for h in 0..=8 {
            let s = spectrum(k, h).unwrap();
            for &(lambda, mult) in &s.eigenvalues {
                let from_singular: usize = (0..=3 * h + 3)
                    .filter(|&w| predicted_lambda(k, w, h).unwrap() == lambda)
                    .map(|w| (2 * w as usize + 1) * singular_block_dims(k, w, h, None).unwrap())
                    .sum();
                assert_eq!(mult, from_singular, "k={k} h={h} λ={lambda}");
            }
        }
    }
}

#[test]
fn euler_characteristic_of_l1_is_the_triple_product() {
    // Σ χ(w,h) uʷ xʰ = (1−u)∏(1−u⁻¹xᵐ)(1−xᵐ)(1−uxᵐ)
    let n = 14;
    let counts = GradedCounts::new(1, n as i64 - 1).unwrap();
    let mut chi = TruncatedSeries::zero(n);
    for ((q, w, h), c) in counts.entries() {
        let c = c as i64 * if q % 2 == 0 { 1 } else { -1 };
        chi.add_at(h as usize, &HalfLaurent::u_power(c, w));
    }
    let e1 = ProductFamily::finite(vec![PolyFactor::binomial(HalfLaurent::u_power(-1, 1), 0)]);
    let rest: Vec<_> = [-1, 0, 1]
        .into_iter()
        .map(|e| ProductFamily::tail(1, move |m| PolyFactor::binomial(HalfLaurent::u_power(-1, e), m)))
        .collect();
    let mut families = vec![e1];
    families.extend(rest);
    assert_eq!(chi, euler_product(&families, n).unwrap());
    assert!(verify_identity("gauss_jacobi", n).unwrap().passed());
}

#[test]
fn brackets_at_a_cube_root_of_unity_are_epsilons() {
    for w in 0..30 {
        let v = HalfLaurent::quantum(2 * w + 1).at_omega().unwrap();
        assert_eq!(v.as_integer(), Some(epsilon(2 * w + 1)));
        assert!(epsilon(2 * w + 1).abs() <= 1);
    }
}

#[test]
fn homology_classes_are_harmonic_and_closed() {
    let table = homology_table(1, 10).unwrap();
    assert!(table.deviations().is_empty());
    for chains in table.harmonic.values() {
        for c in chains {
            assert!(c.apply(Operator::Differential, 1).unwrap().is_zero());
            assert!(c.apply(Operator::Codifferential, 1).unwrap().is_zero());
        }
    }
}

fn block_and_chain() -> impl Strategy<Value = (i64, i64, Vec<i64>)> {
    (-1i64..=4, 0i64..=5).prop_flat_map(|(k, h)| {
        let n = enumerate_block(k, h, None).unwrap().len();
        (Just(k), Just(h), prop::collection::vec(-3i64..=3, n))
    })
}

proptest! {
    #[test]
    fn laplacian_form_is_sum_of_squares((k, h, coeffs) in block_and_chain()) {
        let block = enumerate_block(k, h, None).unwrap();
        let mut c = Chain::zero();
        for (m, &x) in block.monomials().iter().zip(&coeffs) {
            c.add_term(m.clone(), rat(x));
        }
        let d = c.apply(Operator::Differential, k).unwrap();
        let delta = c.apply(Operator::Codifferential, k).unwrap();
        let form = apply_laplacian(k, &c).unwrap().inner(&c);
        prop_assert_eq!(form.clone(), d.inner(&d) + delta.inner(&delta));
        prop_assert!(form >= rat(0));
    }
}
