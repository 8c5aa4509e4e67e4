//! Property tests over randomized inputs.

use proptest::prelude::*;

use ybx::census;
use ybx::document::SolutionDocument;
use ybx::fixtures;
use ybx::garside::{DivisorLattice, Word};
use ybx::perm::Permutation;
use ybx::solution::SolutionTable;

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |(), mut rng| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Permutation::new(images, "phi", 0).unwrap()
    })
}

/// An arbitrary bijection of X × X presented as a table; usually not a
/// solution of anything.
fn arb_pair_bijection(n: usize) -> impl Strategy<Value = SolutionTable> {
    arb_permutation(n * n).prop_map(move |p| {
        SolutionTable::from_fn(n, |x, y| {
            let img = p.apply(x * n + y);
            (img / n, img % n)
        })
        .unwrap()
    })
}

fn relabel(s: &SolutionTable, phi: &Permutation) -> SolutionTable {
    let inv = phi.inverse();
    SolutionTable::from_fn(s.n(), |x, y| {
        let (u, v) = s.s(inv.apply(x), inv.apply(y));
        (phi.apply(u), phi.apply(v))
    })
    .unwrap()
}

/// One of the n ≤ 3 census classes.
fn arb_small_solution() -> impl Strategy<Value = SolutionTable> {
    let mut classes = Vec::new();
    for n in 1..=3 {
        classes.extend(census::enumerate_solutions(n, true).unwrap().classes);
    }
    proptest::sample::select(classes)
}

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..n, 0..=max_len).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The QYBE for R = α∘S is equivalent to the braid relation for S on
    /// every bijective table, solution or not.
    #[test]
    fn qybe_equals_braided_always(table in arb_pair_bijection(3)) {
        let rep = table.check_qybe();
        prop_assert_eq!(rep.qybe, table.is_braided());
        prop_assert_eq!(rep.qybe && rep.unitary, table.is_symmetric());
    }

    /// Involutivity matches the unitary condition whenever the braid
    /// relation holds.
    #[test]
    fn unitary_matches_involutivity_on_braided(table in arb_pair_bijection(2)) {
        let rep = table.check_qybe();
        if rep.qybe {
            prop_assert_eq!(rep.unitary, table.is_involutive());
        }
    }

    /// Canonical forms are relabeling-invariant and idempotent; the
    /// isomorphism search always finds a witness to the original.
    #[test]
    fn canonical_form_invariance(s in arb_small_solution(), phi in arb_permutation(3)) {
        if phi.len() == s.n() {
            let relabeled = relabel(&s, &phi);
            let c1 = census::canonical_form(&s).unwrap();
            let c2 = census::canonical_form(&relabeled).unwrap();
            prop_assert_eq!(&c1, &c2);
            prop_assert_eq!(census::canonical_form(&c1).unwrap(), c1.clone());
            prop_assert!(s.isomorphic_to(&c1).is_some());
        }
    }

    /// A solution is recovered exactly from its presentation, after any
    /// relabeling.
    #[test]
    fn presentation_roundtrip_after_relabeling(s in arb_small_solution(), phi in arb_permutation(3)) {
        if phi.len() == s.n() {
            let relabeled = relabel(&s, &phi);
            let back = relabeled.presentation().unwrap().to_solution().unwrap();
            prop_assert_eq!(back, relabeled);
        }
    }

    /// Documents round-trip through JSON.
    #[test]
    fn document_roundtrip(s in arb_small_solution()) {
        let doc = SolutionDocument::from_table(&s);
        let loaded = SolutionDocument::from_json(&doc.to_json()).unwrap().load().unwrap();
        prop_assert_eq!(loaded, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Word equality by double reversing is decided by identity of greedy
    /// normal forms, and lcm words from reversing have the predicted
    /// lengths.
    #[test]
    fn words_equal_iff_normal_forms_match(u in arb_word(5, 6), v in arb_word(5, 6)) {
        let lat = DivisorLattice::build(&fixtures::two_orbit_five()).unwrap();
        let cs = lat.complement_system();
        let eq = cs.words_equal(&u, &v).unwrap();
        let nf_eq = lat.normal_form(&u).unwrap() == lat.normal_form(&v).unwrap();
        prop_assert_eq!(eq, nf_eq);
        // u·(u\v) and v·(v\u) represent the same element of equal length
        let (uc, vc) = cs.reverse_right(&u, &v).unwrap();
        prop_assert_eq!(u.len() + uc.len(), v.len() + vc.len());
        prop_assert!(cs.words_equal(&u.concat(&uc), &v.concat(&vc)).unwrap());
    }

    /// The head left-divides the word and absorbs every simple divisor.
    #[test]
    fn head_is_a_divisor_bound(u in arb_word(4, 6)) {
        let lat = DivisorLattice::build(&fixtures::delta_pure_four()).unwrap();
        let head = lat.head(&u).unwrap();
        let cs = lat.complement_system();
        prop_assert!(cs.left_divides_word(lat.simple(head).word(), &u).unwrap());
        for a in 0..4 {
            let divides = cs.left_divides_word(&Word::atom(a), &u).unwrap();
            prop_assert_eq!(divides, lat.left_divides(ybx::mask::bit(a), head));
        }
    }
}
