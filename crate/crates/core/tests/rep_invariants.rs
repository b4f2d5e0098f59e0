use num::{BigRational, One, Zero};
use otsym::recursion::{ch_ot_truncated, natural_cap, MnCache, RecursionOptions};
use otsym::rep::{
    ch_c, ch_cyclic_triv, ch_d, ch_r, ch_regular, ch_w, inverse_power_of_one_minus_q, poincare_product,
};
use otsym::{Partition, QSeries, SymFunc};

fn full_cache(n: usize) -> MnCache {
    let mut cache = MnCache::new();
    cache.extend_to(n, RecursionOptions::default()).unwrap();
    cache
}

#[test]
fn d_times_w_reconstructs_c() {
    for n in 2..=10 {
        let top = n - 1;
        let d = ch_d(n, natural_cap(n)).unwrap().extend(top);
        let cw = d.kronecker(&ch_w(n, top).unwrap()).unwrap();
        assert!(cw.same_as(&ch_c(n, top).unwrap()), "n={n}");
    }
}

#[test]
fn restriction_of_d_is_c() {
    for n in 2..=9 {
        let cap = natural_cap(n);
        let res = ch_d(n, cap).unwrap().restrict().unwrap();
        assert!(res.same_as(&ch_c(n - 1, cap).unwrap()), "n={n}");
    }
}

#[test]
fn ungraded_forms() {
    for n in 2..=10 {
        let d = ch_d(n, natural_cap(n)).unwrap().specialize_q1();
        assert!(d.same_as(&ch_cyclic_triv(n).unwrap()), "D n={n}");
        let c = ch_c(n, n - 1).unwrap().specialize_q1();
        assert!(c.same_as(&ch_regular(n).unwrap()), "C n={n}");
    }
}

#[test]
fn graded_dimensions() {
    for n in 1..=10 {
        let dim_c = ch_c(n, n - 1).unwrap().graded_dimension();
        assert_eq!(dim_c, poincare_product(n - 1, n - 1), "C n={n}");
        let dim_r = ch_r(n, n).unwrap().graded_dimension();
        assert_eq!(dim_r, inverse_power_of_one_minus_q(n - 1, n), "R n={n}");
    }
}

#[test]
fn configuration_space_is_connected() {
    for n in 1..=10 {
        let h0 = SymFunc::schur(Partition::row(n), n - 1)
            .hall_inner(&ch_c(n, n - 1).unwrap())
            .unwrap();
        assert_eq!(h0.coeff(0), BigRational::one(), "n={n}");
    }
}

#[test]
fn m_has_the_expected_shape() {
    let cache = full_cache(10);
    for n in 2..=10 {
        let m = cache.get(n).unwrap();
        let dim = m.graded_dimension();
        assert_eq!(dim, poincare_product(n - 2, n - 2), "n={n}");
        assert_eq!(dim.degree(), Some(n - 2), "n={n}");
        let bottom: Vec<_> = m
            .terms()
            .filter(|(_, c)| !c.coeff(0).is_zero())
            .map(|(p, c)| (p.clone(), c.coeff(0)))
            .collect();
        assert_eq!(bottom, vec![(Partition::row(n), BigRational::one())], "n={n}");
    }
}

#[test]
fn smaller_caps_agree_with_the_natural_cap() {
    let cache = full_cache(8);
    for n in 3..=9 {
        let full = ch_ot_truncated(&cache, n, natural_cap(n), RecursionOptions::default()).unwrap();
        for cap in 0..natural_cap(n) {
            let small = ch_ot_truncated(&cache, n, cap, RecursionOptions::default()).unwrap();
            assert!(small.same_as(&full.truncate(cap)), "n={n} cap={cap}");
            let m = otsym::recursion::divide_by_r(&small, n).unwrap();
            if n <= 8 {
                assert!(m.same_as(&cache.get(n).unwrap().truncate(cap)), "M n={n} cap={cap}");
            }
        }
    }
}

#[test]
fn ot_is_r_times_m_on_dimensions() {
    let cache = full_cache(9);
    for n in 2..=9 {
        let cap = natural_cap(n);
        let ot = ch_ot_truncated(&cache, n, cap, RecursionOptions::default()).unwrap();
        let rhs: QSeries = ch_r(n, cap)
            .unwrap()
            .graded_dimension()
            .try_mul(&cache.get(n).unwrap().graded_dimension())
            .unwrap();
        assert_eq!(ot.graded_dimension(), rhs, "n={n}");
    }
}

#[test]
fn d_values_are_stable_across_caps() {
    for n in 2..=8 {
        let exact = ch_d(n, natural_cap(n)).unwrap();
        let wide = ch_d(n, n + 1).unwrap();
        assert!(wide.same_as(&exact.extend(n + 1)), "n={n}");
    }
}
