use super::exact as ex;
use super::integrals as int;
use super::Expectation::{AuditOnly, MustPass};
use super::{IdentityCase, ParamRange as R};

pub const CATALOG_VERSION: &str = "1";

/// Displays that are deliberately not turned into cases.
pub fn out_of_scope() -> &'static [(&'static str, &'static str)] {
    &[
        (
            "EQ12-SECOND-FORM",
            "second expansion of Eq. 12: the exponent uses q-subscripted binomials with no clear meaning",
        ),
        (
            "PROBABILITY-REMARK",
            "Bernoulli-trial remark in the introduction: motivational prose, no identity",
        ),
        (
            "X_D-MACHINERY",
            "integration over X_d for d > 1: only Z_p is implemented",
        ),
        (
            "EQ14",
            "Eq. 14 is the display of Theorem 1; see THM1-PRINTED and THM1-CORRECTED",
        ),
        (
            "THM5",
            "Theorem 5 is Eq. 30; see EQ28-EQ30-EQUIV",
        ),
    ]
}

macro_rules! case {
    ($id:literal, $exp:expr, [$($r:expr),* $(,)?], $check:path, $desc:literal $(, note = $note:literal)?) => {
        IdentityCase {
            id: $id,
            expected: $exp,
            ranges: vec![$($r),*],
            description: $desc,
            note: case!(@note $($note)?),
            check: $check,
        }
    };
    (@note) => { None };
    (@note $n:literal) => { Some($n) };
}

/// The full catalog in report order.
pub fn catalog() -> Vec<IdentityCase> {
    vec![
        case!("EQ01-LIMIT", MustPass, [R::index("n", 0, 10)], ex::eq01_limit,
            "Eq. 1: product form equals [n]!/([k]![n-k]!) and tends to C(n,k) as q -> 1"),
        case!("EQ02-FORM1", MustPass, [R::index("n", 0, 12)], ex::eq02_form1,
            "Eq. 2, first recursion: binom(n+1,k) = binom(n,k-1) + q^k binom(n,k)"),
        case!("EQ02-FORM2", AuditOnly, [R::index("n", 0, 12)], ex::eq02_form2_printed,
            "Eq. 2, second recursion as printed, with exponent n-k"),
        case!("EQ02-FORM2-CORRECTED", MustPass, [R::index("n", 0, 12)], ex::eq02_form2_corrected,
            "Eq. 2, second recursion with exponent n-k+1"),
        case!("EQ03-PARTITION", MustPass, [R::index("n", 0, 10)], ex::eq03_partition,
            "Eq. 3: Gaussian binomial equals the partition-weight enumeration"),
        case!("EQ04-NORMALIZATION", MustPass, [R::fixed("p", 3, 5), R::fixed("N", 1, 6)],
            int::eq04_normalization,
            "Eq. 4: the bosonic Riemann sum of 1 is exactly 1 at every level"),
        case!("EQ05", MustPass, [R::fixed("p", 3, 5), R::index("m", 0, 5), R::fixed("N", 2, 6)],
            int::eq05,
            "Eq. 5: Riemann sums of [x]^m converge p-adically to beta_m (q = 1 + p)"),
        case!("CARLITZ-LIMIT", MustPass, [R::index("m", 0, 10)], ex::carlitz_limit,
            "Carlitz recursion: beta_m tends to the classical Bernoulli number B_m as q -> 1"),
        case!("MOMENTS-NUMERIC", MustPass, [R::fixed("p", 3, 5), R::index("m", 0, 4), R::fixed("N", 1, 5)],
            int::moments_numeric,
            "Moments of q^{mx} under both measures against their closed forms"),
        case!("EQ06", MustPass, [R::index("n", 1, 8), R::index("x", 0, 8)], ex::eq06,
            "Eq. 6: q^n [x-n] = [x] - [n] and [-x] = -q^{-x} [x]"),
        case!("EQ07-EQ09", MustPass, [R::index("m", 0, 6), R::index("n", 0, 8)], ex::eq07_eq09,
            "Eq. 7 and Eq. 9: the operator product and the alternating sum give the same difference"),
        case!("EQ08-NEWTON", MustPass, [R::index("m", 0, 6)], ex::eq08_newton,
            "Eq. 8: q-Newton expansion of [x]^m at integer x in 0..m+2"),
        case!("EQ10-EQ11-EQUIV", MustPass, [R::index("n", 0, 8), R::index("k", 0, 8)], ex::eq10_eq11,
            "Eq. 10 and Eq. 11: sum and difference-operator definitions of s2 agree"),
        case!("EQ12-C2-READING", MustPass, [R::index("n", 0, 6)], ex::eq12_c2_reading,
            "Eq. 12, first expansion, with s2(k, n-k) read in the Carlitz convention",
            note = "s2(k, n-k, q) is read as C2(k, n-k) = S2(n, k)"),
        case!("EQ12-PRINTED", AuditOnly, [R::index("n", 0, 6)], ex::eq12_printed,
            "Eq. 12, first expansion, with s2(k, n-k) read through Eq. 10"),
        case!("EQ13-CORRECTED", MustPass, [R::index("n", 0, 10), R::fixed("p", 3, 3), R::fixed("N", 1, 5)],
            int::eq13_corrected,
            "Eq. 13 with value (-1)^n q^{-C(n,2)}/[n+1]: exact integral and Riemann-sum convergence",
            note = "exact integral from the exponential expansion of binom(x,n)_q; the printed value is q times this"),
        case!("EQ13-PRINTED", AuditOnly, [R::index("n", 0, 10), R::fixed("p", 3, 3), R::fixed("N", 1, 5)],
            int::eq13_printed,
            "Eq. 13 as printed, with exponent (n+1) - C(n+1,2)"),
        case!("THM1-PRINTED", AuditOnly, [R::index("m", 0, 10)], ex::thm1_printed,
            "Theorem 1 as printed, with the factor q and s2(k, m-k) read through Eq. 10"),
        case!("THM1-CORRECTED", MustPass, [R::index("m", 0, 10)], ex::thm1_corrected,
            "Theorem 1 without the factor q: beta_m = sum (-1)^k [k]!/[k+1] S2(m,k)"),
        case!("EQ15", MustPass, [R::index("n", 0, 6)], ex::eq15,
            "Eq. 15: (1-q)^n [x]_{n,q} as a q-binomial sum"),
        case!("EQ16", MustPass, [R::index("l", 0, 8), R::index("x", 0, 8)], ex::eq16,
            "Eq. 16: q^{lx} = sum C(l,m) (q-1)^m [x]^m"),
        case!("EQ17", MustPass, [R::index("n", 0, 6)], ex::eq17,
            "Eq. 17: rearrangement of Eq. 15 into powers of [x]"),
        case!("THM2-PRINTED", AuditOnly, [R::index("n", 0, 6)], ex::thm2_printed,
            "Theorem 2 as printed, with s2(l, n-l) through Eq. 10 and (1-q)^{-(l-m)}"),
        case!("THM2-CORRECTED", MustPass, [R::index("n", 0, 6)], ex::thm2_corrected,
            "Theorem 2 rebuilt from Eq. 12 and Eq. 17",
            note = "s2(l, n-l) read as C2(l, n-l) = S2(n, l), and (1-q)^{-(l-m)} replaced by (q-1)^m (1-q)^{-l} as in Eq. 17"),
        case!("EQ18-BRIDGE", MustPass, [R::index("n", 0, 8), R::index("k", 0, 8)], ex::eq18_bridge,
            "Eq. 18 against Eq. 10: C2(n,k) = S2(n+k, n)"),
        case!("EQ18-INVERSE", MustPass, [R::index("n", 0, 8)], ex::eq18_inverse,
            "Display after Eq. 18: binom(n,k) = sum C(n,j) (q-1)^{j-k} s2(k, j-k)",
            note = "s2 in the Carlitz convention of Eq. 18"),
        case!("EQ19", MustPass, [R::index("n", 0, 6)], ex::eq19,
            "Eq. 19: q^{nt} through q-falling factorials and through s1"),
        case!("EQ20", MustPass, [R::index("n", 0, 8)], ex::eq20,
            "Eq. 20: integral of q^{nt} as a binomial sum of beta_m"),
        case!("EQ21", MustPass, [R::index("n", 0, 8)], ex::eq21,
            "Eq. 21: C(n,m) = sum (q-1)^{k-m} binom(n,k) s1(k,m), with exact cancellation"),
        case!("EQ22-VS-PRODUCT", MustPass, [R::index("n", 0, 8)], ex::eq22_vs_product,
            "Eq. 22: q^{C(n,2)} binom(x,n) [n]! = sum s1(n,k) [x]^k at integer x"),
        case!("EQ23-PRINTED", AuditOnly, [R::index("n", 1, 8)], ex::eq23_printed,
            "Eq. 23 as printed: 1/[n+1] = q^{-1}/[n]! sum (-1)^{n-k} s1(n,k) beta_k",
            note = "range starts at n = 1, reading the stated domain as positive integers"),
        case!("EQ23-CORRECTED", MustPass, [R::index("n", 0, 10)], ex::eq23_corrected,
            "Eq. 22 integrated with corrected Eq. 13: sum s1(n,k) beta_k = (-1)^n [n]!/[n+1]"),
        case!("EQ24-VS-PRODUCT", MustPass, [R::index("n", 0, 8)], ex::eq24_vs_product,
            "Eq. 24: closed form of s1(n,j) equals the product expansion"),
        case!("THM3", MustPass, [R::index("n", 0, 8)], ex::thm3,
            "Theorem 3: closed-form s1 reproduces q^{C(n,2)} [x]_{n,q} at integer x"),
        case!("EQ25-INTEGRAL", MustPass,
            [R::fixed("p", 3, 3), R::index("n", 0, 3), R::fixed("k", 1, 2), R::fixed("x", 0, 1), R::fixed("N", 1, 3)],
            int::eq25_integral,
            "Eq. 25: multivariate Riemann sums converge to the Eq. 26 closed form"),
        case!("EQ25-FUBINI", MustPass,
            [R::fixed("p", 3, 3), R::fixed("k", 1, 3), R::fixed("i", 0, 2), R::fixed("N", 1, 3)],
            int::fubini,
            "Eq. 25 integrand: direct k-fold sums equal products of one-variable sums"),
        case!("EQ26-THM4-EQUIV", MustPass,
            [R::index("k", 1, 8), R::index("i", 0, 8), R::index("n", 0, 6), R::fixed("x", 0, 2)],
            ex::eq26_thm4,
            "Eq. 26 and Theorem 4: product and binomial forms of beta^{(k)}"),
        case!("EQ27-INTEGRAL", MustPass,
            [R::fixed("p", 3, 3), R::index("n", 0, 3), R::fixed("k", 1, 2), R::fixed("x", 0, 1), R::fixed("N", 1, 3)],
            int::eq27_integral,
            "Eq. 27: reciprocals of multivariate Riemann sums converge to the Eq. 28 closed form"),
        case!("EQ28-EQ30-EQUIV", MustPass,
            [R::index("n", 0, 8), R::index("k", 1, 8), R::fixed("x", 0, 2)],
            ex::eq28_eq30,
            "Eq. 28 and Eq. 30 (Theorem 5): two forms of beta^{(-k)}"),
        case!("EQ29", MustPass, [R::index("n", 0, 8), R::index("k", 0, 8)], ex::eq29,
            "Eq. 29: C(k,j)/(C(j+n,n) n!) = C(k+n,k-j)/(C(k+n,n) n!)"),
        case!("EQ31", MustPass, [R::index("k", 1, 8)], ex::eq31,
            "Eq. 31: beta^{(-k)}_0(0) = [k]!/k!, the reciprocal of the k-fold integral"),
        case!("S2-K0", MustPass, [R::index("k", 0, 8)], ex::s2_k0,
            "Display after Eq. 31: s2(k,0) = k!/[k]! beta^{(-k)}_0(0) = 1"),
        case!("BETA-EXAMPLE", MustPass, [], ex::beta_example,
            "Display after Eq. 31: beta^{(2)}_1(0) = -2(q+2)/([2][3])"),
        case!("S2-BETA-REL", MustPass, [R::index("n", 1, 6), R::index("k", 0, 6)], ex::s2_beta_rel,
            "Relation from Eq. 18 and Eq. 30: s2(n,k) = C(k+n,n) n!/[n]! beta^{(-n)}_k(0)",
            note = "superscript read as (-n)"),
        case!("S2-BETA-PRINTED-SUPERSCRIPT", AuditOnly, [R::index("n", 1, 6), R::index("k", 0, 6)],
            ex::s2_beta_printed,
            "The same relation with the printed superscript (-k)"),
        case!("S2-BETA-INTEGRAL-PRINTED", AuditOnly, [R::index("n", 1, 6), R::index("k", 0, 6)],
            ex::s2_beta_integral_printed,
            "Integral form of the relation with the printed sign (-1)^k"),
        case!("S2-BETA-INTEGRAL-CORRECTED", MustPass, [R::index("n", 1, 6), R::index("k", 0, 6)],
            ex::s2_beta_integral_corrected,
            "Integral form of the relation with sign (-1)^i",
            note = "sign (-1)^k replaced by (-1)^i, as in Eq. 27"),
        case!("MOMENT-SUM", MustPass, [R::index("m", 0, 6), R::index("k", 1, 6)], ex::moment_sum,
            "Moment-sum display: sum C(m,i) (q-1)^i beta^{(k)}_i = C(m+k,k)/binom(m+k,k) k!/[k]!"),
        case!("FINAL-S1-PRODUCT", MustPass, [R::index("n", 0, 8)], ex::final_s1_product,
            "Final display of the third section with n factors [x] - [k], k = 0..n-1"),
        case!("FINAL-S1-PRODUCT-PRINTED", AuditOnly, [R::index("n", 0, 8)], ex::final_s1_printed,
            "Final display of the third section with the printed product over k = 0..n"),
        case!("EQ33-CORRECTED-FINITE", MustPass, [R::index("n", 0, 8)], ex::eq33_corrected_finite,
            "Eq. 33: prod (a + b q^{i-1}) = sum binom(n,k) q^{C(k,2)} a^{n-k} b^k at five sample pairs"),
        case!("EQ33-PRINTED-FINITE", AuditOnly, [R::index("n", 0, 8)], ex::eq33_printed_finite,
            "Eq. 33 as printed, with q^{n-k} in place of a^{n-k}"),
        case!("EQ33-SERIES", MustPass, [R::index("n", 1, 3), R::fixed("j", 1, 2), R::fixed("D", 20, 20)],
            ex::eq33_series,
            "Second formula of Eq. 33 with b = +-q^j, against the inverse product mod q^D"),
        case!("EQ34-EQ35-EQUIV", MustPass, [R::index("k", 0, 4), R::index("n", 1, 4), R::fixed("x", 0, 2)],
            ex::eq34_eq35,
            "Eq. 34 and Eq. 35: the finite q-binomial expansion of the product"),
        case!("PROP6", MustPass, [R::index("k", 0, 2), R::index("n", 1, 2), R::fixed("x", 0, 1), R::fixed("D", 16, 16)],
            ex::prop6,
            "Proposition 6: series form of E^{(n)}_k(x) mod q^D"),
        case!("EULER-CLOSED-VS-INTEGRAL", MustPass,
            [R::fixed("p", 3, 3), R::index("n", 1, 2), R::index("k", 0, 2), R::fixed("x", 0, 1), R::fixed("N", 1, 3)],
            int::euler_closed_vs_integral,
            "Eq. 32: fermionic Riemann sums, direct and factorized, converge to the closed form"),
        case!("FERMIONIC-NORMALIZATION", MustPass, [R::fixed("p", 3, 5), R::fixed("N", 1, 6)],
            int::fermionic_normalization,
            "The fermionic Riemann sum of 1 is exactly 1 at every level"),
        case!("STIRLING-LIMITS", MustPass, [R::index("n", 0, 8)], ex::stirling_limits,
            "q -> 1 limits of S2 and s1 are the classical Stirling numbers"),
    ]
}
