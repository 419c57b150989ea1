use proptest::prelude::*;
use reye_core::double_cover::{fiber_type, random_line_pair, same_ruling, FiberType};
use reye_core::matrix::QMat;
use reye_core::projective::{
    plucker_pairing, plucker_relation, random_line, random_point, rat_line_from_points,
    rat_lines_meet, wedge, QuadricForm, RandomConfig, RatPoint,
};
use reye_core::reye::{rat_restriction_matrix, restriction_matrix, sample_reye_lines};
use reye_core::scalar::{c, proj_distance, q, rationalize, C64, Q};
use reye_core::schubert::{porteous_reye, SchubertClass};
use reye_core::web::{pencil_quartic_exact, pencil_quartic_mats, xi_fiber, Web, WebFile};
use reye_core::{Exec, Rng};
use num_traits::Zero;

fn cfg() -> RandomConfig {
    RandomConfig::default()
}

fn web(seed: u64) -> Web {
    Web::random_unchecked(&mut Rng::new(seed), cfg(), Some(seed))
}

fn cvec(rng: &mut Rng) -> [C64; 4] {
    [0; 4].map(|_| rng.complex())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_lines_satisfy_plucker_relation(seed in any::<u64>()) {
        let l = random_line(&mut Rng::new(seed), cfg());
        prop_assert!(plucker_relation(l.plucker()).is_zero());
    }

    #[test]
    fn float_lines_satisfy_plucker_relation(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let (a, b) = (cvec(&mut rng), cvec(&mut rng));
        let p = wedge(&a, &b);
        let scale: f64 = p.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!(plucker_relation(&p).norm() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn meeting_lines_have_zero_pairing(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let p = random_point(&mut rng, cfg());
        let a = random_point(&mut rng, cfg());
        let b = random_point(&mut rng, cfg());
        if let (Ok(l1), Ok(l2)) = (rat_line_from_points(&p, &a), rat_line_from_points(&p, &b)) {
            prop_assert!(plucker_pairing(l1.plucker(), l2.plucker()).is_zero());
            prop_assert!(rat_lines_meet(&l1, &l2));
        }
    }

    #[test]
    fn projective_distance_ignores_scale(seed in any::<u64>(), re in -5.0f64..5.0, im in -5.0f64..5.0) {
        prop_assume!(re.abs() + im.abs() > 1e-3);
        let mut rng = Rng::new(seed);
        let (a, b) = (cvec(&mut rng), cvec(&mut rng));
        let s = c(re, im);
        let sa = a.map(|z| z * s);
        prop_assert!(proj_distance(&a, &sa) < 1e-12);
        prop_assert!((proj_distance(&a, &b) - proj_distance(&sa, &b)).abs() < 1e-12);
        prop_assert!((proj_distance(&a, &b) - proj_distance(&b, &a)).abs() < 1e-12);
    }

    #[test]
    fn rationalize_recovers_small_fractions(n in -1000i64..1000, d in 1i64..1000) {
        let x = n as f64 / d as f64;
        let r = rationalize(x, 1000).expect("finite");
        prop_assert_eq!(r, Q::new(n.into(), d.into()));
    }

    #[test]
    fn restriction_rank_independent_of_spanning_points(seed in 0u64..10_000) {
        // Reparametrising the line acts on each row of the restriction
        // matrix by an invertible 3x3 map, so the rank cannot change.
        let w = web(seed);
        let mut rng = Rng::new(seed ^ 0xabc);
        let l = random_line(&mut rng, cfg());
        let (a, b) = l.span();
        let ab: Vec<Q> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y * q(3)).collect();
        let ab = RatPoint::new([ab[0].clone(), ab[1].clone(), ab[2].clone(), ab[3].clone()]).unwrap();
        let l2 = rat_line_from_points(&ab, a).unwrap();
        let r1: QMat = rat_restriction_matrix(&w, &l);
        let r2: QMat = rat_restriction_matrix(&w, &l2);
        prop_assert_eq!(r1.rank(), r2.rank());
        let f1 = restriction_matrix(&w, &l.to_complex()).svd().relative();
        let f2 = restriction_matrix(&w, &l2.to_complex()).svd().relative();
        prop_assert_eq!(f1[2] < 1e-8, f2[2] < 1e-8);
    }

    #[test]
    fn web_file_round_trips(seed in any::<u64>()) {
        let w = web(seed);
        let text = serde_json::to_string(&w.to_file()).unwrap();
        let file: WebFile = serde_json::from_str(&text).unwrap();
        let back = Web::from_file(&file).unwrap();
        prop_assert_eq!(back.basis(), w.basis());
        prop_assert_eq!(back.seed(), Some(seed));
    }

    #[test]
    fn float_pencil_quartic_matches_exact(seed in 0u64..10_000) {
        let w = web(seed);
        let mut rng = Rng::new(seed ^ 0x5eed);
        let a = [0; 4].map(|_| rng.rational_in(5));
        let b = [0; 4].map(|_| rng.rational_in(5));
        let exact = pencil_quartic_exact(&w, &a, &b).unwrap();
        let ma = w.exact_matrix_at(&a).to_complex();
        let mb = w.exact_matrix_at(&b).to_complex();
        let float = pencil_quartic_mats(ma, mb).unwrap();
        let scale = float.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for (k, f) in float.iter().enumerate() {
            let e = exact.coeffs().get(k).map(reye_core::scalar::q_to_f64).unwrap_or(0.0);
            prop_assert!((f - c(e, 0.0)).norm() <= 1e-9 * scale, "k={} float={} exact={}", k, f, e);
        }
    }

    #[test]
    fn schubert_multiplication_is_commutative(a in prop::array::uniform6(-20i64..20), b in prop::array::uniform6(-20i64..20)) {
        let (x, y) = (SchubertClass(a), SchubertClass(b));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn steinerian_correspondence_is_symmetric(seed in 1u64..500) {
        // x and y play symmetric roles: the partner of y is x again.
        let w = web(seed);
        let samples = sample_reye_lines(&w, seed, 2, Exec::Sequential).unwrap();
        for s in &samples {
            let back = xi_fiber(&w, &s.y, 1e-6).unwrap().expect("partner lies on the Steinerian");
            prop_assert!(back.y.distance(&s.x) < 1e-6, "distance {}", back.y.distance(&s.x));
            prop_assert!(s.reye.line.contains(s.x.coords(), 1e-8));
            prop_assert!(s.reye.line.contains(s.y.coords(), 1e-8));
        }
    }

    #[test]
    fn lines_through_a_point_lie_in_opposite_rulings(seed in 1u64..500) {
        let w = web(seed);
        let mut rng = Rng::new(seed);
        let z = w.member(&cvec(&mut rng)).unwrap();
        prop_assert_eq!(fiber_type(&w, &z.z).unwrap(), FiberType::TwoRulings);
        let quad = QuadricForm::new(z.matrix().clone()).unwrap();
        let (_, first) = random_line_pair(&quad, &mut rng).unwrap();
        let (_, second) = random_line_pair(&quad, &mut rng).unwrap();
        prop_assert!(!same_ruling(&quad, &first[0], &first[1]).unwrap());
        let a = same_ruling(&quad, &first[0], &second[0]).unwrap();
        let b = same_ruling(&quad, &first[0], &second[1]).unwrap();
        prop_assert!(a != b);
    }
}

#[test]
fn reye_class_has_order_seven_class_three() {
    let cls = porteous_reye();
    assert_eq!(cls.order, 7);
    assert_eq!(cls.class_number, 3);
    assert_eq!(cls.degree, 10);
}
