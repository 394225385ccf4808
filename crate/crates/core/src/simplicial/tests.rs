use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::braid::PureBraid;
use crate::word::FreeWord;

fn w(s: &str, t: usize) -> FreeWord {
    FreeWord::parse(s, fs1_alphabet(t)).unwrap()
}

fn images(h: &crate::word::GroupHom) -> Vec<String> {
    h.images().iter().map(|w| w.to_string()).collect()
}

#[test]
fn face_examples() {
    assert_eq!(images(&face_fs1(2, 0).unwrap()), ["y1", "1"]);
    assert_eq!(images(&face_fs1(2, 1).unwrap()), ["y1", "y1"]);
    assert_eq!(images(&face_fs1(2, 2).unwrap()), ["1", "y1"]);
    assert_eq!(images(&face_fs1(1, 0).unwrap()), ["1"]);
    assert_eq!(images(&face_fs1(1, 1).unwrap()), ["1"]);
    for n in 2..=6 {
        assert_eq!(
            face_fs1(n, n).unwrap().image(n).unwrap(),
            &w(&format!("y{}", n - 1), n - 1).clone()
        );
    }
    assert!(face_fs1(2, 3).is_err());
    assert!(face_fs1(0, 0).is_err());
}

#[test]
fn degeneracy_examples() {
    assert_eq!(images(&degeneracy_fs1(1, 0).unwrap()), ["y1"]);
    assert_eq!(images(&degeneracy_fs1(1, 1).unwrap()), ["y2"]);
    assert_eq!(degeneracy_fs1(2, 2).unwrap().image(2).unwrap(), &w("y3", 3));
    assert_eq!(degeneracy_fs1(2, 0).unwrap().image(1).unwrap(), &w("y1", 3));
    assert_eq!(images(&degeneracy_fs1(0, 0).unwrap()), Vec::<String>::new());
    assert!(degeneracy_fs1(2, 3).is_err());
}

#[test]
fn instance_levels() {
    let (fs1, ap) = (instance_fs1(), instance_ap());
    assert_eq!(fs1.group_rank(3), 3);
    assert_eq!(fs1.generators(3).len(), 3);
    assert_eq!(ap.group_rank(0), 1);
    assert!(ap.generators(0).is_empty());
    assert_eq!(ap.identity(2).strands(), 3);
    assert_eq!(ap.generators(2).len(), 3);
    assert!(ap.face(0, 0, &ap.identity(0)).is_err());
    assert!(ap.face(2, 3, &ap.identity(2)).is_err());
    assert!(matches!(
        fs1.face(2, 0, &w("y1", 3)),
        Err(Error::LevelMismatch { .. })
    ));
}

// Brute-force model: a simplex `<0^a 1^b>` as a bit vector, faces delete and
// degeneracies duplicate coordinates.
fn simplex_op(t: usize, q: usize, op: char, k: usize) -> Option<usize> {
    let mut bits: Vec<u8> = (0..=t).map(|c| u8::from(c + q > t)).collect();
    match op {
        'd' => {
            bits.remove(k);
        }
        _ => bits.insert(k, bits[k]),
    }
    let ones = bits.iter().filter(|&&b| b == 1).count();
    (ones > 0 && ones < bits.len()).then_some(ones)
}

#[test]
fn face_tables_match_coordinate_model() {
    for t in 1..=7 {
        for i in 0..=t {
            let h = face_fs1(t, i).unwrap();
            for q in 1..=t {
                let want = simplex_op(t, q, 'd', i)
                    .map_or(FreeWord::identity(fs1_alphabet(t - 1)), |p| {
                        FreeWord::generator(fs1_alphabet(t - 1), p).unwrap()
                    });
                assert_eq!(h.image(q).unwrap(), &want, "d{i} y{q} at {t}");
            }
        }
        for j in 0..=t {
            let h = degeneracy_fs1(t, j).unwrap();
            for q in 1..=t {
                let p = simplex_op(t, q, 's', j).unwrap();
                assert_eq!(
                    h.image(q).unwrap(),
                    &FreeWord::generator(fs1_alphabet(t + 1), p).unwrap()
                );
            }
        }
    }
}

#[test]
fn identities_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = verify_simplicial_identities(&instance_fs1(), 5, 100, &mut rng);
    assert!(r.passed(), "{:?}", r.failures.first());
    assert_eq!(r.counts.len(), 5);
    let r = verify_simplicial_identities(&instance_ap(), 3, 20, &mut rng);
    assert!(r.passed(), "{:?}", r.failures.first());
    assert!(r.checked() > 100);
}

// A deliberately wrong face table is caught with a witness.
#[derive(Clone, Copy)]
struct Broken;

impl SimplicialGroupSpec for Broken {
    type Element = FreeWord;
    fn name(&self) -> &'static str {
        "broken"
    }
    fn group_rank(&self, t: usize) -> usize {
        t
    }
    fn level_of(&self, e: &FreeWord) -> usize {
        e.alphabet().rank
    }
    fn identity(&self, t: usize) -> FreeWord {
        FreeWord::identity(fs1_alphabet(t))
    }
    fn generators(&self, t: usize) -> Vec<FreeWord> {
        instance_fs1().generators(t)
    }
    fn face(&self, t: usize, i: usize, e: &FreeWord) -> Result<FreeWord> {
        instance_fs1().face(t, t - i, e)
    }
    fn degeneracy(&self, t: usize, j: usize, e: &FreeWord) -> Result<FreeWord> {
        instance_fs1().degeneracy(t, j, e)
    }
    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
        a.multiply(b)
    }
    fn inverse(&self, a: &FreeWord) -> FreeWord {
        a.invert()
    }
    fn is_trivial(&self, e: &FreeWord) -> bool {
        e.is_identity()
    }
    fn face_kernel_generators(&self, t: usize, i: usize) -> Vec<FreeWord> {
        instance_fs1().face_kernel_generators(t, i)
    }
    fn random_element<R: rand::Rng + ?Sized>(&self, t: usize, len: usize, rng: &mut R) -> FreeWord {
        instance_fs1().random_element(t, len, rng)
    }
}

#[test]
fn broken_instance_reports_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = verify_simplicial_identities(&Broken, 3, 0, &mut rng);
    assert!(!r.passed());
    let f = &r.failures[0];
    assert!(f.identity.starts_with('d') || f.identity.starts_with('s'));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["instance"], "broken");
}

#[test]
fn identity_instances_count() {
    // (t choose 2) + (t+1)(t+2)/2 + (t+1)(t+2)
    for t in 0..6 {
        let dd = if t >= 2 { t * (t + 1) / 2 } else { 0 };
        assert_eq!(Identity::instances(t).len(), dd + 3 * (t + 1) * (t + 2) / 2);
    }
    assert_eq!(
        Identity::FaceDegen { i: 3, j: 1 }.to_string(),
        "d3 s1 = s1 d2"
    );
}

#[test]
fn moore_cycles() {
    let fs1 = instance_fs1();
    let c = MooreElement::new(&fs1, 2, w("[y1,y2^-1]", 2)).unwrap();
    assert!(is_moore_cycle(&fs1, &c));
    assert!(!is_moore_cycle(
        &fs1,
        &MooreElement::new(&fs1, 2, w("y1", 2)).unwrap()
    ));
    assert!(is_moore_cycle(
        &fs1,
        &MooreElement::new(&fs1, 0, fs1.identity(0)).unwrap()
    ));
    assert!(MooreElement::new(&fs1, 3, w("y1", 2)).is_err());

    let ap = instance_ap();
    let a = PureBraid::parse("[A(1,2),A(1,3)]", Some(3)).unwrap();
    let e = MooreElement::new(&ap, 2, a.clone()).unwrap();
    assert!(is_moore_cycle(&ap, &e));
    assert_eq!(is_moore_cycle(&ap, &e), a.is_brunnian());
    let g = MooreElement::new(&ap, 2, PureBraid::a_generator(1, 3, 3).unwrap()).unwrap();
    assert!(!is_moore_cycle(&ap, &g));
}

#[test]
fn boundary_certificates() {
    let (fs1, ap) = (instance_fs1(), instance_ap());
    assert!(check_boundary_certificate(&fs1, 2, &fs1.identity(3), &fs1.identity(2)).unwrap());
    assert!(check_boundary_certificate(&ap, 2, &ap.identity(3), &ap.identity(2)).unwrap());
    assert!(check_boundary_certificate(&fs1, 2, &fs1.identity(2), &fs1.identity(2)).is_err());

    // s_0 of a Brunnian braid has d_1 s_0 = id, so it is no certificate
    let b = PureBraid::parse("[A(1,2),A(1,3)]", Some(3)).unwrap();
    let z = ap.degeneracy(2, 0, &b).unwrap();
    assert!(!check_boundary_certificate(&ap, 2, &z, &b).unwrap());

    let x = w("[y1,y3^-1]", 3);
    let (z, wd) = boundary_from(&fs1, 2, &x).unwrap();
    assert!(check_boundary_certificate(&fs1, 2, &z, &wd).unwrap());
    assert!(is_moore_cycle(
        &fs1,
        &MooreElement::new(&fs1, 2, wd.clone()).unwrap()
    ));
    let other = fs1.multiply(&wd, &w("y1", 2)).unwrap();
    assert!(!check_boundary_certificate(&fs1, 2, &z, &other).unwrap());
}

#[test]
fn seeds_and_random_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 2..=3 {
        let seeds = seed_cycles(&instance_fs1(), t).unwrap();
        assert!(!seeds.is_empty(), "level {t}");
        for c in random_moore_cycles(&instance_fs1(), t, 20, 3, &mut rng).unwrap() {
            assert!(theta(t, c.element()).unwrap().is_brunnian(), "{c}");
        }
    }
    for t in 1..=4 {
        assert!(
            !seed_cycles(&instance_fs1(), t).unwrap().is_empty(),
            "fs1 level {t}"
        );
    }
    for t in 1..=2 {
        for c in seed_cycles(&instance_ap(), t).unwrap() {
            assert!(c.is_brunnian());
        }
    }
}

#[test]
fn theta_is_simplicial() {
    let r = theta_simplicial_check(3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.squares_checked, 2 * (2 + 6 + 12));
    assert!(theta_at(0, &FreeWord::identity(fs1_alphabet(0)))
        .unwrap()
        .is_trivial());
    assert!(instance_ap()
        .face(2, 0, &theta(2, &w("y2", 2)).unwrap())
        .unwrap()
        .is_trivial());
}

#[test]
fn projections_onto_p2() {
    for n in 1..=4 {
        let r = projection_check(n).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    // (n+1)!/2 sequences of faces down to level 1
    assert_eq!(projection_check(3).unwrap().composites, 4 * 3);
    assert_eq!(projection_check(4).unwrap().composites, 5 * 4 * 3);
}

use crate::braid::theta;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degenerate_faces(t in 1usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fs1 = instance_fs1();
        let x = fs1.random_element(t, 8, &mut rng);
        for i in 0..=t {
            let s = fs1.degeneracy(t, i, &x).unwrap();
            prop_assert_eq!(&fs1.face(t + 1, i, &s).unwrap(), &x);
            prop_assert_eq!(&fs1.face(t + 1, i + 1, &s).unwrap(), &x);
        }
    }

    #[test]
    fn faces_are_homomorphisms(t in 1usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fs1 = instance_fs1();
        let (a, b) = (fs1.random_element(t, 6, &mut rng), fs1.random_element(t, 6, &mut rng));
        let ab = fs1.multiply(&a, &b).unwrap();
        for i in 0..=t {
            let l = fs1.face(t, i, &ab).unwrap();
            let r = fs1.multiply(&fs1.face(t, i, &a).unwrap(), &fs1.face(t, i, &b).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn normalization_kills_positive_faces(t in 1usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fs1 = instance_fs1();
        let x = fs1.random_element(t, 6, &mut rng);
        let z = moore_normalize(&fs1, t, &x).unwrap();
        for i in 1..=t {
            prop_assert!(fs1.face(t, i, &z).unwrap().is_identity());
        }
    }

    #[test]
    fn theta_maps_cycles_to_brunnian(t in 2usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_moore_cycles(&instance_fs1(), t, 1, 2, &mut rng).unwrap().remove(0);
        prop_assert!(theta(t, c.element()).unwrap().is_brunnian());
    }
}
