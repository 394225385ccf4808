use braidlab::braid::{theta, PureBraid};
use braidlab::freelie::LieElement;
use braidlab::homology::{e1_report, homology, lie_degree_complex};
use braidlab::kohno::gr_theta;
use braidlab::simplicial::{
    boundary_from, check_boundary_certificate, instance_ap, instance_fs1, moore_normalize,
    SimplicialGroupSpec,
};
use braidlab::word::{gr_leading_term, Alphabet, FreeWord};
use braidlab::Budget;
use num_bigint::BigInt;
use proptest::prelude::*;

fn word(n: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=n, prop::bool::ANY), 0..10).prop_map(move |v| {
        FreeWord::reduce(
            Alphabet::new('y', n),
            v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 })),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Linking numbers are additive, so they are the exponent sums against the
    // degree-one image of each generator.
    #[test]
    fn linking_matches_degree_one_image((n, w) in (1usize..=4).prop_flat_map(|n| (Just(n), word(n)))) {
        let lk = theta(n, &w).unwrap().linking_matrix().unwrap();
        let sums = w.exponent_sums();
        let y = Alphabet::new('y', n);
        for j in 2..=n + 1 {
            for i in 1..j {
                let mut expect = BigInt::from(0);
                for (q, e) in sums.iter().enumerate() {
                    let img = gr_theta(n, &LieElement::generator(y, q + 1).unwrap()).unwrap();
                    expect += img.component(j).coefficient(&[i as u16]) * BigInt::from(*e);
                }
                prop_assert_eq!(BigInt::from(lk[i - 1][j - 1]), expect);
            }
        }
    }

    // theta commutes with the faces, so it carries Moore boundary certificates
    // in F[S^1] to certificates in AP.
    #[test]
    fn theta_carries_boundary_certificates(w in word(3)) {
        let (fs1, ap) = (instance_fs1(), instance_ap());
        let (z, d) = boundary_from(&fs1, 2, &w).unwrap();
        prop_assert!(check_boundary_certificate(&fs1, 2, &z, &d).unwrap());
        let (tz, td) = (theta(3, &z).unwrap(), theta(2, &d).unwrap());
        prop_assert!(check_boundary_certificate(&ap, 2, &tz, &td).unwrap());
    }

    #[test]
    fn normalization_is_idempotent(w in word(4)) {
        let fs1 = instance_fs1();
        let x = moore_normalize(&fs1, 4, &w).unwrap();
        prop_assert_eq!(moore_normalize(&fs1, 4, &x).unwrap(), x);
    }
}

#[test]
fn commutator_leading_term_matches_lie_bracket() {
    let y = Alphabet::new('y', 3);
    let w = FreeWord::parse("[[y1,y2],y3]", y).unwrap();
    let lie = LieElement::parse("[[y1,y2],y3]", y).unwrap();
    assert_eq!(gr_leading_term(&w).unwrap(), lie);
    assert!(theta(3, &w)
        .unwrap()
        .equals(
            &theta(
                3,
                &FreeWord::parse("y1 y2 y1^-1 y2^-1 y3 y2 y1 y2^-1 y1^-1 y3^-1", y).unwrap()
            )
            .unwrap()
        )
        .unwrap());
}

#[test]
fn ap_level_one_cycle_is_the_generator() {
    let ap = instance_ap();
    let a12 = PureBraid::a_generator(1, 2, 2).unwrap();
    assert_eq!(ap.generators(1), vec![a12.clone()]);
    assert!(a12.is_brunnian());
}

#[test]
fn homology_report_is_consistent_with_complexes() {
    let budget = Budget::default();
    let report = e1_report(3, 4, &budget).unwrap();
    for m in 1..=3 {
        let c = lie_degree_complex(m, 5, &budget).unwrap();
        for t in 1..=4 {
            let cell = report.cell(m, t).unwrap();
            assert_eq!(cell.group(), homology(&c, t).unwrap());
            assert_eq!(cell.basis_size, c.rank(t));
        }
    }
}
