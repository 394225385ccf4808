use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::braid::theta;
use crate::homology::IntMatrix;
use crate::word::FreeWord;
use crate::Budget;

fn b(i: usize, j: usize, n: usize) -> KohnoElement {
    KohnoElement::generator(i, j, n).unwrap()
}

fn parse(s: &str, n: usize) -> KohnoElement {
    KohnoElement::parse(s, n).unwrap()
}

#[test]
fn generators_and_printing() {
    assert_eq!(b(1, 2, 3).to_string(), "B(1,2)");
    assert_eq!(b(2, 3, 3).to_string(), "B(2,3)");
    assert_eq!(KohnoElement::zero(3).to_string(), "0");
    assert_eq!(KohnoElement::generator_sym(3, 1, 3).unwrap(), b(1, 3, 3));
    assert!(KohnoElement::generator(2, 2, 3).is_err());
    assert!(KohnoElement::generator(1, 4, 3).is_err());
    assert!(KohnoElement::generator(0, 2, 3).is_err());
}

#[test]
fn bracket_examples() {
    assert!(b(1, 2, 4).bracket(&b(3, 4, 4)).unwrap().is_zero());
    let s = &b(1, 3, 3) + &b(2, 3, 3);
    assert!(b(1, 2, 3).bracket(&s).unwrap().is_zero());
    assert_eq!(
        b(1, 2, 3).bracket(&b(1, 3, 3)).unwrap().to_string(),
        "[B(1,3),B(2,3)]"
    );
    assert_eq!(
        b(1, 3, 3).bracket(&b(1, 2, 3)).unwrap().to_string(),
        "-[B(1,3),B(2,3)]"
    );
    assert_eq!(
        b(1, 3, 3).bracket(&b(2, 3, 3)).unwrap().to_string(),
        "[B(1,3),B(2,3)]"
    );
    assert!(b(1, 2, 3).bracket(&b(1, 2, 4)).is_err());
}

#[test]
fn parse_round_trip() {
    let x = parse("2*[B(1,3),B(2,3)] - B(1,2) + [B(1,2),B(1,3)]", 3);
    assert_eq!(x.to_string(), "-B(1,2)+3*[B(1,3),B(2,3)]");
    assert_eq!(parse(&x.to_string(), 3), x);
    assert!(KohnoElement::parse("B(3,2)", 3).is_err());
    assert!(KohnoElement::parse("B(1,2", 3).is_err());
}

#[test]
fn ranks() {
    assert_eq!(kohno_rank(3, 1), 3);
    assert_eq!(kohno_rank(3, 2), 1);
    assert_eq!(kohno_rank(3, 3), 2);
    assert_eq!(kohno_rank(4, 1), 6);
    assert_eq!(kohno_rank(4, 2), 4);
    assert_eq!(kohno_rank(2, 2), 0);
    assert_eq!(basis_labels(3, 2), vec!["[B(1,3),B(2,3)]"]);
}

#[test]
fn relations_vanish() {
    assert!(relations_check(2).unwrap().is_empty());
    for n in 3..=5 {
        let w = relations_check(n).unwrap();
        assert!(!w.is_empty());
        for r in &w {
            assert!(r.holds(), "{} -> {}", r.instance.describe(), r.residue);
        }
    }
    // one disjoint pair at n = 4: (12|34), (13|24), (14|23)
    assert_eq!(
        relation_instances(4)
            .iter()
            .filter(|r| r.family == 1)
            .count(),
        3
    );
}

#[test]
fn oracle_matches_normal_form() {
    let budget = Budget::oracle();
    for (n, m, rank) in [(3, 1, 3), (3, 2, 1), (3, 3, 2), (4, 2, 4), (4, 3, 10)] {
        let r = presentation_oracle(n, m, &budget).unwrap();
        assert_eq!(r.oracle_rank, rank, "n={n} m={m}");
        assert!(r.agrees(), "{r:?}");
    }
    assert!(presentation_oracle(6, 2, &budget).is_err());
}

#[test]
fn oracle_bracket_congruence() {
    let o = PresentationOracle::new(4, 3, &Budget::oracle()).unwrap();
    let gens: Vec<_> = (2..=4)
        .flat_map(|j| (1..j).map(move |i| b(i, j, 4)))
        .collect();
    for x in &gens {
        for y in &gens {
            assert!(o.check_bracket(x, y).unwrap(), "[{x},{y}]");
            let xy = x.bracket(y).unwrap();
            for z in &gens {
                assert!(o.check_bracket(&xy, z).unwrap(), "[[{x},{y}],{z}]");
            }
        }
    }
}

#[test]
fn theta_degree_one() {
    let y = Alphabet::new('y', 3);
    let g = |q: usize| gr_theta(3, &LieElement::generator(y, q).unwrap()).unwrap();
    assert_eq!(g(1).to_string(), "B(1,4)+B(2,4)+B(3,4)");
    assert_eq!(g(2).to_string(), "B(1,3)+B(2,3)+B(1,4)+B(2,4)");
    assert_eq!(g(3).to_string(), "B(1,2)+B(1,3)+B(1,4)");
    assert_eq!(g(2), parse("B(1,3)+B(1,4)+B(2,3)+B(2,4)", 4));
    assert!(theta_generator_image(3, 4).is_err());
}

// Degree-1 image agrees with the linking numbers of the braid-level map.
#[test]
fn theta_linking() {
    for n in 1..=4 {
        let y = Alphabet::new('y', n);
        for q in 1..=n {
            let img = gr_theta(n, &LieElement::generator(y, q).unwrap()).unwrap();
            let lk = theta(n, &FreeWord::generator(y, q).unwrap())
                .unwrap()
                .linking_matrix()
                .unwrap();
            for j in 2..=n + 1 {
                for i in 1..j {
                    let c = img.component(j).coefficient(&[i as Letter]);
                    assert_eq!(c, BigInt::from(lk[i - 1][j - 1]), "n={n} q={q} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn theta_matrices() {
    let budget = Budget::default();
    let t = gr_theta_matrix(1, 1, &budget).unwrap();
    assert_eq!(t.matrix, IntMatrix::from_i64(&[vec![1]]));
    let t = gr_theta_matrix(2, 1, &budget).unwrap();
    assert_eq!((t.matrix.rows(), t.matrix.cols(), t.rank), (2, 3, 2));
    assert_eq!(t.column_labels, ["B(1,2)", "B(1,3)", "B(2,3)"]);
    assert_eq!(t.row_labels, ["y1", "y2"]);
    for (n, m) in [(2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        let t = gr_theta_matrix(n, m, &budget).unwrap();
        assert!(
            t.injective(),
            "n={n} m={m} rank {} of {}",
            t.rank,
            t.witt_rank
        );
    }
    assert_eq!(gr_theta_matrix(3, 2, &budget).unwrap().rank, 3);
    assert!(gr_theta_matrix(3, 6, &budget).is_err());
    let json = serde_json::to_value(gr_theta_matrix(2, 1, &budget).unwrap()).unwrap();
    assert_eq!(json["elementary_divisors"], serde_json::json!([1, 1]));
}

#[test]
fn delta_example() {
    let r = delta_example_check().unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(
        r.summary(),
        "PASS (coefficients -1, 2; independence rank 3)"
    );
    assert!(r.saturation.iter().all(|d| d > &BigInt::from(0)));
}

#[test]
fn derivation_rep_default() {
    for n in 2..=3 {
        let rep = derivation_rep(n, None).unwrap();
        for m in 1..=3 {
            let r = rep.injectivity(m).unwrap();
            assert!(r.full_rank(), "{r:?}");
        }
    }
    let r = derivation_rep(2, None).unwrap().injectivity(1).unwrap();
    assert_eq!((r.rank, r.witt_rank), (2, 2));
    // gr(P_2) is abelian, so ad(x_1) is all there is and it kills x_1
    assert_eq!(
        derivation_rep(1, None)
            .unwrap()
            .injectivity(1)
            .unwrap()
            .rank,
        0
    );
    assert!(derivation_rep(4, None).is_ok());
}

#[test]
fn derivation_rep_kills_center() {
    for n in 1..=4 {
        let rep = derivation_rep(n, None).unwrap();
        let mut z = KohnoElement::zero(n + 1);
        for j in 2..=n + 1 {
            for i in 1..j {
                z = &z + &b(i, j, n + 1);
            }
        }
        assert!(rep.evaluate(&z).unwrap().is_zero(), "n={n}");
        assert!(!rep.evaluate(&b(1, 2, n + 1)).unwrap().is_zero() || n == 1);
    }
}

#[test]
fn derivation_rep_zero_and_bad() {
    let zero = DerivationRep::new(2, DerivationRep::zero_assignment(2)).unwrap();
    assert_eq!(zero.injectivity(1).unwrap().rank, 0);

    let mut bad = DerivationRep::default_assignment(3);
    let x = free_alphabet(3);
    bad.insert(
        (1, 2),
        DerivationTable::inner(&LieElement::generator(x, 3).unwrap()),
    );
    assert!(matches!(
        DerivationRep::new(3, bad),
        Err(Error::RelationViolated(_))
    ));

    let mut short = DerivationRep::default_assignment(2);
    short.remove(&(1, 3));
    assert!(DerivationRep::new(2, short).is_err());
}

// Ad(z)(x_k) = [z, B_{k,n+1}] read in the top component.
#[test]
fn derivation_rep_is_adjoint() {
    let n = 3;
    let rep = derivation_rep(n, None).unwrap();
    let x = free_alphabet(n);
    let ident: Vec<_> = (1..=n)
        .map(|k| LieElement::generator(x, k).unwrap())
        .collect();
    let gens: Vec<_> = (2..=n + 1)
        .flat_map(|j| (1..j).map(move |i| b(i, j, n + 1)))
        .collect();
    let mut samples = gens.clone();
    for u in &gens {
        for v in &gens {
            samples.push(u.bracket(v).unwrap());
        }
    }
    for z in &samples {
        let d = rep.evaluate(z).unwrap();
        for k in 1..=n {
            let top = z.bracket(&b(k, n + 1, n + 1)).unwrap();
            let lhs = top.component(n + 1).map_generators(x, &ident).unwrap();
            assert_eq!(&lhs, d.image(k).unwrap(), "z={z} k={k}");
        }
    }
}

fn element(n: usize) -> impl Strategy<Value = KohnoElement> {
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    let k = pairs.len();
    let terms = prop::collection::vec((0..k, -2i64..=2), 1..4);
    let brackets = prop::collection::vec((0..k, 0..k), 0..3);
    (terms, brackets).prop_map(move |(ts, bs)| {
        let gen = |x: usize| b(pairs[x].0, pairs[x].1, n);
        let mut out = KohnoElement::zero(n);
        for (x, c) in ts {
            out.add_assign_scaled(&gen(x), &BigInt::from(c));
        }
        for (x, y) in bs {
            out.add_assign_scaled(&gen(x).bracket(&gen(y)).unwrap(), &BigInt::from(1));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_a_lie_bracket(x in element(4), y in element(4), z in element(4)) {
        let xy = x.bracket(&y).unwrap();
        prop_assert_eq!(&xy, &-&y.bracket(&x).unwrap());
        prop_assert!(x.bracket(&x).unwrap().is_zero());
        let j = &(&xy.bracket(&z).unwrap() + &y.bracket(&z).unwrap().bracket(&x).unwrap())
            + &z.bracket(&x).unwrap().bracket(&y).unwrap();
        prop_assert!(j.is_zero(), "jacobiator {}", j);
    }

    #[test]
    fn bracket_is_bilinear(x in element(4), y in element(4), z in element(4)) {
        let l = (&x + &y).bracket(&z).unwrap();
        let r = &x.bracket(&z).unwrap() + &y.bracket(&z).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn gr_theta_is_a_homomorphism(p in (1u16..=3, 1u16..=3), q in (1u16..=3, 1u16..=3)) {
        let y = Alphabet::new('y', 3);
        let gen = |k: u16| LieElement::generator(y, k as usize).unwrap();
        let u = gen(p.0).bracket(&gen(p.1)).unwrap().try_add(&gen(q.0)).unwrap();
        let v = gen(q.1).try_add(&gen(p.0).bracket(&gen(q.0)).unwrap()).unwrap();
        let l = gr_theta(3, &u.bracket(&v).unwrap()).unwrap();
        let r = gr_theta(3, &u).unwrap().bracket(&gr_theta(3, &v).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}
