use proptest::prelude::*;

use qaudit_core::audit::{run_audit, AuditOptions, Selection};
use qaudit_core::bernoulli::{beta_neg_order, beta_order, carlitz_beta};
use qaudit_core::classical::{bernoulli_numbers, stirling1_signed, stirling2};
use qaudit_core::padic::{
    volkenborn_multi, IntegrandSpec, IntegrationConfig, Measure, MultiMethod, PadicQ,
};
use qaudit_core::stirling::{stirling1, stirling2_s};
use qaudit_core::BigRat;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn stirling_limits(n in 0u32..=9, k in 0u32..=9) {
        prop_assume!(k <= n);
        prop_assert_eq!(stirling2_s(n, k).limit_q1().unwrap(), BigRat::from_integer(stirling2(n, k)));
        prop_assert_eq!(stirling1(n, k).limit_q1().unwrap(), BigRat::from_integer(stirling1_signed(n, k)));
    }

    #[test]
    fn bernoulli_limit(m in 0u32..=12) {
        prop_assert_eq!(carlitz_beta(m).limit_q1().unwrap(), bernoulli_numbers(m)[m as usize].clone());
    }

    #[test]
    fn orders_are_reciprocal_at_zero(k in 1u32..=6) {
        let prod = &beta_order(0, k, 0) * &beta_neg_order(0, k, 0);
        prop_assert!(prod.is_one());
    }

    #[test]
    fn fubini(k in 1u32..=2, i in 0u32..=3, level in 1u32..=3, t in 1i64..=3, fermionic in any::<bool>()) {
        let measure = if fermionic { Measure::Fermionic } else { Measure::Bosonic };
        let q = PadicQ::from_offset(3, t).unwrap();
        let cfg = IntegrationConfig::default();
        let f = IntegrandSpec::MultiExp { k, i };
        let d = volkenborn_multi(&f, &q, level, measure, MultiMethod::Direct, &cfg).unwrap();
        let g = volkenborn_multi(&f, &q, level, measure, MultiMethod::Factorized, &cfg).unwrap();
        prop_assert!(d.agrees_with(&g).unwrap());
    }
}

#[test]
fn report_is_deterministic() {
    let sel = Selection::parse("EQ03-PARTITION,EQ05,THM1-PRINTED,EQ33-SERIES");
    let a = run_audit(&sel, &AuditOptions::default()).unwrap().to_json();
    let b = run_audit(&sel, &AuditOptions::default()).unwrap().to_json();
    assert_eq!(a, b);
}
