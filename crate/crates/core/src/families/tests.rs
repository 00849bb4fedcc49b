use super::*;
use crate::motzkin::{PathWeights, path_weight_sum};
use crate::scalar::rel_diff;
use crate::series::PowerSeries;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(256)
}

fn fam(id: FamilyId) -> FamilySpec {
    make_family(id, &Params::new()).unwrap()
}

fn with(id: FamilyId, kv: &[(&str, Q)]) -> FamilySpec {
    let p: Params = kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    make_family(id, &p).unwrap()
}

fn exact_ids() -> impl Iterator<Item = FamilyId> {
    FamilyId::ALL.into_iter().filter(|id| *id != FamilyId::MeixnerPollaczekMoments)
}

/// Evaluate an exact series at a rational point as a float.
fn eval_series(s: &PowerSeries<Q>, t: &Q, c: &PrecisionContext) -> BigFloat {
    c.rational(&s.eval(t))
}

#[test]
fn spec_examples() {
    assert_eq!(with(FamilyId::Ultraspherical, &[("nu", Q::one())]).lambda(1).unwrap(), rat(1, 4));
    let legendre = with(FamilyId::Jacobi, &[("alpha", Q::zero()), ("beta", Q::zero())]);
    assert_eq!(legendre.lambda(1).unwrap(), rat(1, 3));
    let asc = with(FamilyId::AlSalamCarlitz, &[("a", rat(1, 3)), ("q", rat(1, 2))]);
    assert_eq!(asc.lambda(2).unwrap(), rat(-1, 8));

    let c = ctx();
    let half = c.rational(&rat(1, 2));
    let h = fam(FamilyId::Hermite).q_function(0, &half, &c).unwrap().value;
    let expect = c.rational(&rat(1, 16)).exp();
    assert!(rel_diff(&h, &expect).exponent() < -250);
    let l = with(FamilyId::Laguerre, &[("alpha", Q::zero())]).q_function(0, &half, &c).unwrap().value;
    assert!(rel_diff(&l, &c.int(2)).exponent() < -250);

    let hm = with(FamilyId::HermiteMoments, &[("x", Q::one())]);
    for i in 0..5 {
        assert_eq!(hm.tableau_closed_form(i, i).unwrap(), Q::one());
    }
    assert_eq!(hm.tableau_closed_form(0, 2).unwrap(), Q::from(2));
    let lm = with(FamilyId::LaguerreMoments, &[("alpha", Q::zero()), ("x", Q::one())]);
    assert_eq!(lm.tableau_closed_form(0, 1).unwrap(), Q::zero());
}

#[test]
fn invalid_parameters_are_rejected() {
    let bad = |id: FamilyId, kv: &[(&str, Q)]| {
        let p: Params = kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        matches!(make_family(id, &p), Err(Error::InvalidParams(_)))
    };
    assert!(bad(FamilyId::Ultraspherical, &[("nu", rat(-1, 2))]));
    assert!(bad(FamilyId::Jacobi, &[("alpha", Q::from(-1))]));
    assert!(bad(FamilyId::LittleQJacobi, &[("q", Q::one())]));
    assert!(bad(FamilyId::AlSalamCarlitz, &[("q", Q::zero())]));
    assert!(bad(FamilyId::Affine, &[("a", Q::zero())]));
    assert!(bad(FamilyId::GegenbauerMoments, &[("x", Q::one())]));
    assert!(bad(FamilyId::MeixnerMoments, &[("x", Q::from(2))]));
    assert!(bad(FamilyId::Hermite, &[("nu", Q::one())]));
    assert!("nope".parse::<FamilyId>().is_err());
}

#[test]
fn catalog_lists_every_family() {
    let cat = catalog();
    assert_eq!(cat.len(), FamilyId::ALL.len());
    for e in &cat {
        assert_eq!(e.id.name().parse::<FamilyId>().unwrap(), e.id);
    }
    let asc = cat.iter().find(|e| e.id == FamilyId::AlSalamCarlitz).unwrap();
    assert_eq!(asc.translation, "q_translation");
    assert!(asc.functions.contains(&"q_tilde_function"));
}

#[test]
fn series_coefficients_match_the_tableau() {
    for id in exact_ids() {
        let f = fam(id);
        let tab = f.tableau(10).unwrap();
        let norm = f.normalization();
        for j in 0..=4 {
            let s = f.q_series(j, 10).unwrap();
            for n in 0..=10 {
                assert_eq!(&s.coeff(n) * &norm.at(n), tab.get(j, n), "{id} Q_{j} coefficient {n}");
            }
            if f.has_tilde() {
                let q = f.q().unwrap();
                let st = f.q_tilde_series(j, 10).unwrap();
                for n in 0..=10 {
                    assert_eq!(&st.coeff(n) * &norm.at(n) / q_tri(q, n), tab.get(j, n), "{id} tilde Q_{j} at {n}");
                }
            }
        }
    }
}

#[test]
fn series_agree_on_non_default_parameters() {
    let cases = [
        with(FamilyId::Ultraspherical, &[("nu", rat(-1, 4))]),
        with(FamilyId::Jacobi, &[("alpha", rat(-1, 2)), ("beta", rat(-1, 2))]),
        with(FamilyId::MeixnerPollaczek, &[("lambda", rat(3, 2)), ("cot_phi", rat(-2, 3))]),
        with(FamilyId::BigQJacobi, &[("a", rat(1, 2)), ("b", rat(-1, 3)), ("c", rat(-2, 5)), ("q", rat(2, 3))]),
        with(FamilyId::AskeyWilsonSlice, &[("a", rat(-1, 2)), ("q", rat(1, 3))]),
        with(FamilyId::QUltraspherical, &[("beta", rat(-1, 5)), ("q", rat(3, 4))]),
    ];
    for f in cases {
        let tab = f.tableau(8).unwrap();
        let norm = f.normalization();
        for j in 0..=3 {
            let s = f.q_series(j, 8).unwrap();
            for n in 0..=8 {
                assert_eq!(&s.coeff(n) * &norm.at(n), tab.get(j, n), "{} Q_{j} at {n}", f.id());
            }
        }
    }
}

#[test]
fn closed_form_tableaux_match() {
    for id in [FamilyId::HermiteMoments, FamilyId::LaguerreMoments, FamilyId::MeixnerMoments, FamilyId::GegenbauerMoments] {
        let f = fam(id);
        let tab = f.tableau(8).unwrap();
        for n in 0..=8 {
            for i in 0..=n {
                assert_eq!(f.tableau_closed_form(i, n).unwrap(), tab.get(i, n), "{id} H_{i},{n}");
            }
        }
    }
    assert!(matches!(fam(FamilyId::Hermite).tableau_closed_form(0, 1), Err(Error::Unsupported(_))));
}

#[test]
fn moments_family_coefficients_match_printed_recurrences() {
    // λ_n printed for the Laguerre-as-moments family, after the weight ratio
    let (alpha, x) = (rat(1, 2), rat(1, 2));
    let f = with(FamilyId::LaguerreMoments, &[("alpha", alpha.clone()), ("x", x.clone())]);
    for n in 1..8usize {
        let nq = Q::from(n as i64);
        let lam = &nq * &(&alpha + &nq - Q::one()) * -(&x * &x)
            / ((&alpha + &(&nq * &Q::from(2)) - Q::from(2))
                * (&alpha + &(&nq * &Q::from(2)) - Q::one())
                * (&alpha + &(&nq * &Q::from(2)) - Q::one())
                * (&alpha + &(&nq * &Q::from(2))));
        assert_eq!(f.lambda(n).unwrap(), lam);
    }
    let h = with(FamilyId::HermiteMoments, &[("x", rat(2, 3))]);
    for n in 0..6 {
        assert_eq!(h.b(n).unwrap(), rat(4, 3));
        if n > 0 {
            assert_eq!(h.lambda(n).unwrap(), Q::from(-2 * n as i64));
        }
    }
}

#[test]
fn motzkin_paths_reproduce_family_tableaux() {
    for id in [FamilyId::Jacobi, FamilyId::BigQJacobi, FamilyId::GegenbauerMoments] {
        let f = fam(id);
        let jf = f.jfraction(8).unwrap();
        let tab = f.tableau(7).unwrap();
        let w = PathWeights::from_jfraction(&jf);
        for n in 0..=7 {
            for i in 0..=n {
                assert_eq!(path_weight_sum(&w, 0, i, n).unwrap(), tab.get(i, n));
            }
        }
    }
}

#[test]
fn numeric_q_functions_match_series() {
    let c = ctx();
    let t = rat(1, 10);
    let tf = c.rational(&t);
    for id in exact_ids() {
        let f = fam(id);
        for j in 0..=3 {
            let s = f.q_series(j, 60).unwrap();
            let exact = eval_series(&s, &t, &c);
            let v = f.q_function(j, &tf, &c).unwrap();
            let err = rel_diff(&v.value, &exact);
            assert!(err.exponent() < -100, "{id} Q_{j}: {err}");
            if f.has_tilde() {
                let st = f.q_tilde_series(j, 60).unwrap();
                let v = f.q_tilde_function(j, &tf, &c).unwrap();
                let err = rel_diff(&v.value, &eval_series(&st, &t, &c));
                assert!(err.exponent() < -100, "{id} tilde Q_{j}: {err}");
            }
        }
    }
}

#[test]
fn q_functions_vanish_to_order_j() {
    // leading behaviour t^j / norm_j, by differencing at small t
    let c = ctx();
    let t = c.rational(&rat(1, 1 << 20));
    for id in exact_ids() {
        let f = fam(id);
        let norm = f.normalization();
        for j in 0..=3 {
            let v = f.q_function(j, &t, &c).unwrap().value;
            let lead = &t.powi(j as i64).unwrap() / &c.rational(&norm.at(j));
            let r = (&v / &lead).to_f64();
            assert!((r - 1.0).abs() < 1e-4, "{id} Q_{j}: ratio {r}");
        }
        assert_eq!(f.q_function(2, &BigFloat::zero(), &c).unwrap().value.to_f64(), 0.0);
        assert_eq!(f.q_function(0, &BigFloat::zero(), &c).unwrap().value.to_f64(), 1.0);
    }
}

#[test]
fn representation_equivalences() {
    let c = ctx();
    let points = [rat(1, 7), rat(3, 10), rat(-1, 5), rat(1, 20), rat(2, 9)];
    let jac = fam(FamilyId::Jacobi);
    let little = fam(FamilyId::LittleQJacobi);
    let big = fam(FamilyId::BigQJacobi);
    for p in &points {
        let t = c.rational(p);
        for j in 0..4 {
            let a = jac.q_function(j, &t, &c).unwrap().value;
            let b = jac.q_function_alt(j, &t, &c).unwrap().value;
            assert!(rel_diff(&a, &b).exponent() < -100, "jacobi j={j} t={p}");
            let a = little.q_function(j, &t, &c).unwrap().value;
            let b = little.q_function_alt(j, &t, &c).unwrap().value;
            assert!(rel_diff(&a, &b).exponent() < -100, "little j={j} t={p}");
            let a = big.q_tilde_function(j, &t, &c).unwrap().value;
            let b = big.q_tilde_function_alt(j, &t, &c).unwrap().value;
            assert!(rel_diff(&a, &b).exponent() < -100, "big tilde j={j} t={p}");
        }
    }
    for f in [&jac, &little] {
        for j in 0..4 {
            assert_eq!(f.q_series(j, 10).unwrap(), f.q_series_alt(j, 10).unwrap());
        }
    }
}

#[test]
fn classical_families_have_no_tilde() {
    let c = ctx();
    let f = fam(FamilyId::Hermite);
    assert!(matches!(f.q_tilde_function(0, &c.int(1), &c), Err(Error::UnsupportedTilde(_))));
    assert!(matches!(f.q_tilde_series(0, 4), Err(Error::UnsupportedTilde(_))));
}

#[test]
fn affine_combinator() {
    let base = with(FamilyId::Laguerre, &[("alpha", rat(1, 2))]);
    let (a, b) = (rat(3, 2), rat(-2, 3));
    let f = affine_of(base.clone(), a.clone(), b.clone()).unwrap();
    let mu = base.moments(10).unwrap();
    let mu_bar = f.moments(10).unwrap();
    for n in 0..=10 {
        let mut s = Q::zero();
        for k in 0..=n {
            s += &(Q::binomial(n as u64, k as u64) * (-&b).powu(n - k) * &mu[k]);
        }
        assert_eq!(mu_bar[n], s / a.powu(n), "moment {n}");
        assert_eq!(f.b(n).unwrap(), (base.b(n).unwrap() - &b) / &a);
        if n > 0 {
            assert_eq!(f.lambda(n).unwrap(), base.lambda(n).unwrap() / (&a * &a));
        }
    }
    let tab = f.tableau(8).unwrap();
    for j in 0..4 {
        let s = f.q_series(j, 8).unwrap();
        for n in 0..=8 {
            assert_eq!(&s.coeff(n) * &Q::factorial(n as u64), tab.get(j, n));
        }
    }
    assert!(affine_of(fam(FamilyId::LittleQJacobi), Q::one(), Q::zero()).is_err());
}

#[test]
fn derangement_moments_and_weight() {
    let (alpha, x) = (rat(1, 2), rat(1, 3));
    let f = with(FamilyId::Derangement, &[("alpha", alpha.clone()), ("x", x.clone())]);
    let mu = f.moments(8).unwrap();
    for n in 0..=8usize {
        let mut s = Q::zero();
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { Q::one() } else { Q::from(-1) };
            s += &(sign
                * Q::binomial(n as u64, k as u64)
                * x.powu(k)
                * crate::scalar::pochhammer(&(&alpha + &Q::one()), k));
        }
        assert_eq!(mu[n], s);
        assert_eq!(f.weight(n).unwrap(), f.lambda_product(n).unwrap());
    }
}

#[test]
fn moments_weights_are_lambda_products() {
    for id in [FamilyId::HermiteMoments, FamilyId::LaguerreMoments, FamilyId::MeixnerMoments, FamilyId::GegenbauerMoments] {
        let f = fam(id);
        for n in 0..8 {
            assert_eq!(f.weight(n).unwrap(), f.lambda_product(n).unwrap(), "{id} weight {n}");
        }
    }
}

#[test]
fn lambda_readings_agree_with_moment_inversion() {
    // λ_n recovered from the Q_0 series moments confirms the squared middle
    // factor of the q-Jacobi recurrences.
    for id in [FamilyId::LittleQJacobi, FamilyId::BigQJacobi, FamilyId::AskeyWilsonSlice] {
        let f = fam(id);
        let norm = f.normalization();
        let s = f.q_series(0, 13).unwrap();
        let mu: Vec<Q> = (0..=13).map(|n| s.coeff(n) * norm.at(n)).collect();
        let jf = crate::jfraction::jfraction_from_moments(&mu, 6).unwrap();
        for n in 1..=6 {
            assert_eq!(jf.lambda_at(n).unwrap(), &f.lambda(n).unwrap(), "{id} λ_{n}");
        }
        for n in 0..=5 {
            assert_eq!(jf.b_at(n).unwrap(), &f.b(n).unwrap(), "{id} b_{n}");
        }
    }
}

#[test]
fn mp_moments_has_no_exact_path() {
    let f = fam(FamilyId::MeixnerPollaczekMoments);
    assert!(!f.is_exact());
    assert!(matches!(f.jfraction(3), Err(Error::Unsupported(_))));
}
