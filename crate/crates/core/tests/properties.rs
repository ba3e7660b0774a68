use proptest::prelude::*;

use qgr::cartan::parse_type;
use qgr::chartab::{string_decompose, CharTable};
use qgr::classical::{dominant_weights_up_to, Basis, Classical, ClassicalGraded};
use qgr::expr::parse_ax;
use qgr::laurent::v_binomial;
use qgr::quiverdim::{d_gamma_eta, d_lambda_alpha, e_dim, e_dim_via_d, kappa_pm};
use qgr::series::SeriesMatrix;
use qgr::suites::run_suite;
use qgr::{AXElem, Exec, Laurent, Lattice, Root, Weight, XElem, YElem};

const TYPES: [&str; 4] = ["A1", "A2", "A3", "D4"];

fn lat(t: &str) -> Lattice {
    Lattice::new(parse_type(t).unwrap()).unwrap()
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..5).prop_map(Laurent::from_terms)
}

fn coords(rank: usize, kmax: i64, cmin: i64) -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((1..=rank, -kmax..=kmax, cmin..=3i64), 0..4)
}

fn xelem(rank: usize) -> impl Strategy<Value = XElem> {
    coords(rank, 8, -3).prop_map(XElem::from_terms)
}

fn yelem_pos(rank: usize) -> impl Strategy<Value = YElem> {
    coords(rank, 6, 0).prop_map(YElem::from_terms)
}

fn ax(rank: usize) -> impl Strategy<Value = AXElem> {
    prop::collection::vec((coords(rank, 4, -2).prop_map(XElem::from_terms), laurent()), 0..3).prop_map(AXElem::from_terms)
}

/// A type name with elements of its lattice.
fn typed<T: std::fmt::Debug>(f: impl Fn(usize) -> BoxedStrategy<T> + Clone + 'static) -> impl Strategy<Value = (&'static str, T)> {
    prop::sample::select(TYPES.to_vec()).prop_flat_map(move |t| {
        let r = parse_type(t).unwrap().rank();
        (Just(t), f(r))
    })
}

/// Dominant `A1` element with at most six factors, exponents in `[-6, 6]`.
fn a1_dominant() -> impl Strategy<Value = XElem> {
    prop::collection::vec(-6i64..=6, 1..=6).prop_map(|ks| XElem::from_terms(ks.into_iter().map(|k| (1, k, 1))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(&(&a - &a), &Laurent::zero());
    }

    #[test]
    fn laurent_round_trip(a in laurent()) {
        prop_assert_eq!(Laurent::parse(&a.render('v'), 'v').unwrap(), a);
    }

    #[test]
    fn v_binomial_symmetric(m in 0u32..10, p in 0i64..10) {
        let b = v_binomial(m, p);
        prop_assert!(b.is_palindromic());
        prop_assert_eq!(b.clone(), v_binomial(m, m as i64 - p));
        if p >= 1 && p <= m as i64 {
            // [m p] = v^{-p}[m-1 p] + v^{m-p}[m-1 p-1]
            let rhs = &v_binomial(m - 1, p).shift(-p) + &v_binomial(m - 1, p - 1).shift(m as i64 - p);
            prop_assert_eq!(b, rhs);
        }
    }

    #[test]
    fn literal_round_trips((t, (x, y)) in typed(|r| (xelem(r), coords(r, 8, -3).prop_map(YElem::from_terms)).boxed())) {
        let r = parse_type(t).unwrap().rank();
        prop_assert_eq!(XElem::parse(&x.render(), r).unwrap(), x.clone());
        prop_assert_eq!(YElem::parse(&y.render(), r).unwrap(), y);
        if r == 1 {
            prop_assert_eq!(XElem::parse(&x.render_short(), 1).unwrap(), x);
        }
    }

    #[test]
    fn ax_round_trip((t, a) in typed(|r| ax(r).boxed())) {
        let l = lat(t);
        prop_assert_eq!(parse_ax(&a.render(), &l, None).unwrap(), a.clone());
        if l.rank() == 1 {
            prop_assert_eq!(parse_ax(&a.render_short(), &l, None).unwrap(), a);
        }
    }

    #[test]
    fn omega_solves_back((t, eta) in typed(|r| coords(r, 8, -3).prop_map(YElem::from_terms).boxed())) {
        let l = lat(t);
        prop_assert_eq!(l.solve_omega(&l.omega(&eta)).unwrap(), eta);
    }

    #[test]
    fn cocycle_and_bracket((t, (a, b, c)) in typed(|r| (xelem(r), xelem(r), xelem(r)).boxed())) {
        let l = lat(t);
        let e = |x: &XElem, y: &XElem| l.epsilon(x, y).unwrap();
        prop_assert_eq!(e(&a.add(&b), &c) + e(&a, &b), e(&a, &b.add(&c)) + e(&b, &c));
        prop_assert_eq!(l.bracket(&a, &b).unwrap(), -l.bracket(&b, &a).unwrap());
        prop_assert_eq!(e(&a.shift(2), &b.shift(2)), e(&a, &b));
    }

    #[test]
    fn ax_algebra_laws((t, (x, y, z)) in typed(|r| (ax(r), ax(r), ax(r)).boxed())) {
        let l = lat(t);
        let m = |p: &AXElem, q: &AXElem| p.mul(&l, q).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        prop_assert_eq!(m(&x, &y).bar(), m(&y.bar(), &x.bar()));
        prop_assert_eq!(m(&x, &y.add(&z)), m(&x, &y).add(&m(&x, &z)));
        prop_assert_eq!(m(&x, &AXElem::one()), x);
    }

    #[test]
    fn quiver_identities((t, (g1, g2, d1, d2, e1, e2)) in typed(|r| {
        (xelem(r), xelem(r), yelem_pos(r), yelem_pos(r), yelem_pos(r), yelem_pos(r)).boxed()
    })) {
        let l = lat(t);
        let (e1, e2) = (e1.add(&d1), e2.add(&d2));
        let (kp, km) = kappa_pm(&l, &g1, &g2, &e1, &e2);
        let d = |g: &XElem, e: &YElem| d_gamma_eta(&l, g, e);
        prop_assert_eq!(kp + km, d(&g1.add(&g2), &e1.add(&e2)) - d(&g1, &e1) - d(&g2, &e2));
        prop_assert_eq!(kappa_pm(&l, &g2, &g1, &e2, &e1), (km, kp));
        let (h1, h2) = (l.sub_xy(&g1, &d1), l.sub_xy(&g2, &d2));
        let (dp, dm) = kappa_pm(&l, &g1, &g2, &d1, &d2);
        prop_assert_eq!(l.epsilon(&g1, &g2).unwrap() - l.epsilon(&h1, &h2).unwrap(), dp);
        let (sp, sm) = kappa_pm(&l, &h1, &h2, &e1.sub(&d1), &e2.sub(&d2));
        prop_assert_eq!((kp - sp, km - sm), (dp, dm));
    }

    #[test]
    fn incidence_numbers_agree((t, (g, e)) in typed(|r| (xelem(r), yelem_pos(r)).boxed()), node in 1usize..=4, shift in -6i64..=6) {
        let l = lat(t);
        let i = (node - 1) % l.rank() + 1;
        prop_assert_eq!(e_dim(&l, &g, &e, i, shift).unwrap(), e_dim_via_d(&l, &g, &e, i, shift).unwrap());
    }

    #[test]
    fn d_lambda_alpha_is_even(t in prop::sample::select(TYPES.to_vec()), lam in prop::collection::vec(0i64..5, 4), alpha in prop::collection::vec(0i64..5, 4)) {
        let c = parse_type(t).unwrap();
        let r = c.rank();
        let d = d_lambda_alpha(&c, &Weight(lam[..r].to_vec()), &Root(alpha[..r].to_vec()));
        prop_assert_eq!(d.rem_euclid(2), 0);
    }

    #[test]
    fn standard_characters_are_normalised(g in a1_dominant()) {
        let t = CharTable::builtin(lat("A1"));
        let l = t.lattice();
        let w = t.standard_char(&g).unwrap();
        prop_assert!(w.has_nonneg_coeffs());
        prop_assert!(w.coeff(&g).is_one());
        for (h, _) in w.terms() {
            if h != &g {
                let eta = l.solve_omega(&g.sub(h)).unwrap();
                prop_assert!(eta.is_nonneg() && !eta.is_zero());
            }
        }
        let s = t.simple_char(&g).unwrap();
        prop_assert_eq!(s.bar(), s.clone());
        prop_assert!(s.coeff(&g).is_one());
    }

    #[test]
    fn string_characters_have_k_plus_one_terms(n in -6i64..=6, k in 1i64..=6) {
        let t = CharTable::builtin(lat("A1"));
        let g = XElem::from_terms((0..k).map(|j| (1, n - 2 * j, 1)));
        prop_assert_eq!(string_decompose(&g, 1).unwrap().len(), 1);
        let at1 = t.simple_char(&g).unwrap().at_v1();
        prop_assert_eq!(at1.len() as i64, k + 1);
        prop_assert!(at1.values().all(|c| *c == 1.into()));
    }

    #[test]
    fn dominant_conjugate_is_dominant(t in prop::sample::select(vec!["A2", "A3", "D4", "E6"]), w in prop::collection::vec(-4i64..=4, 6), i in 1usize..=6) {
        let c = parse_type(t).unwrap();
        let w = Weight(w[..c.rank()].to_vec());
        let d = c.dominant_conjugate(&w);
        prop_assert!(d.is_dominant());
        let i = (i - 1) % c.rank() + 1;
        prop_assert_eq!(c.dominant_conjugate(&c.reflect_weight(i, &w)), d);
    }

    #[test]
    fn chi_m_round_trip(t in prop::sample::select(vec!["A2", "A3", "D4"]), picks in prop::collection::vec((0usize..100, laurent()), 1..4)) {
        let cl = Classical::new(parse_type(t).unwrap());
        let pool = dominant_weights_up_to(cl.cartan().rank(), 3);
        let x = ClassicalGraded::from_terms(Basis::Irreducible, picks.into_iter().map(|(k, c)| (pool[k % pool.len()].clone(), c)));
        let m = cl.convert(&x, Basis::Orbit).unwrap();
        prop_assert_eq!(cl.convert(&m, Basis::Irreducible).unwrap(), x.clone());
        let w = cl.convert(&x, Basis::Weight).unwrap();
        prop_assert_eq!(cl.expand_in_chi(&w).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn neumann_inverse_is_inverse(n in 1usize..=3, entries in prop::collection::vec(prop::collection::vec((-4i64..=-1, -2i64..=2), 0..3), 9)) {
        let t = 12;
        let rows: Vec<Vec<Laurent>> = (0..n).map(|i| (0..n).map(|j| Laurent::from_terms(entries[i * 3 + j].clone())).collect()).collect();
        let x = SeriesMatrix::from_laurent(&rows);
        let inv = SeriesMatrix::neumann_inverse(&x, t).unwrap();
        let prod = inv.mul(&SeriesMatrix::identity(n).add(&x));
        for i in 0..n {
            for j in 0..n {
                for e in -t..=0 {
                    let c = prod.get(i, j).coeff(e);
                    prop_assert!(c.is_ok(), "coefficient at q^{} not certified", e);
                    prop_assert_eq!(c.unwrap(), i64::from(i == j && e == 0).into());
                }
            }
        }
    }

    #[test]
    fn suite_reports_are_reproducible(seed in any::<u64>()) {
        let a = run_suite("kappa-ranks", 20, seed, Exec::Sequential).unwrap();
        let b = run_suite("kappa-ranks", 20, seed, Exec::Parallel).unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert!(a.passed());
    }

    #[test]
    fn table_text_round_trip(ks in prop::collection::vec(-6i64..=6, 1..4)) {
        let t = CharTable::builtin(lat("A1"));
        let g = XElem::from_terms(ks.into_iter().map(|k| (1, k, 1)));
        t.simple_char(&g).unwrap();
        let text = t.to_text();
        let u = CharTable::new(lat("A1"));
        u.load_text(&text).unwrap();
        prop_assert_eq!(u.to_text(), text);
    }
}
