use proptest::prelude::*;

use crystab::crystal::{
    evacuation, is_anti_yamanouchi, is_yamanouchi, k_fold_eps, k_fold_phi, plactic_equivalent,
    rotate_complement, tensor_rule, Crystal, CrystalElement,
};
use crystab::plactic::{
    insertion_tableau, knuth_equivalent, knuth_moves, product, rectify, ProductMethod,
};
use crystab::shapes::{conjugate, enumerate_partitions, pi_rotate, Monoid, Partition, SkewShape};
use crystab::tableaux::{Tableau, Word};
use crystab::{QPoly, WidePoly};

fn word_of(v: &[usize]) -> Word {
    Word::from_codes(&v.iter().map(|&x| x as i32).collect::<Vec<_>>()).unwrap()
}

fn arb_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Word)> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1..=n, 0..=max_len).prop_map(move |v| (n, word_of(&v)))
    })
}

fn arb_tableau(max_n: usize, max_len: usize) -> impl Strategy<Value = Tableau> {
    arb_word(max_n, max_len).prop_map(|(n, w)| insertion_tableau(&w, n).unwrap())
}

fn arb_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (Tableau, Tableau)> {
    (2..=max_n).prop_flat_map(move |n| {
        let w = prop::collection::vec(1..=n, 0..=max_len);
        (w.clone(), w).prop_map(move |(a, b)| {
            (
                insertion_tableau(&word_of(&a), n).unwrap(),
                insertion_tableau(&word_of(&b), n).unwrap(),
            )
        })
    })
}

fn arb_partition(max_n: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_part, n).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    })
}

fn partition_count(k: usize, parts: usize, max: usize) -> usize {
    if k == 0 {
        return 1;
    }
    if parts == 0 || max == 0 {
        return 0;
    }
    (1..=max.min(k))
        .map(|first| partition_count(k - first, parts - 1, first))
        .sum()
}

proptest! {
    #[test]
    fn raise_and_lower_invert((n, w) in arb_word(5, 12)) {
        let x = CrystalElement::word(w, n).unwrap();
        for i in 1..n {
            let (e, f) = x.eps_phi(i).unwrap();
            prop_assert_eq!(f as i64, x.weight().pairing(i) + e as i64);
            if let Some(u) = x.raise(i) {
                prop_assert_eq!(u.lower(i).unwrap(), x.clone());
                prop_assert_eq!(u.eps_phi(i).unwrap(), (e - 1, f + 1));
            }
            if let Some(d) = x.lower(i) {
                prop_assert_eq!(d.raise(i).unwrap(), x.clone());
            }
        }
    }

    #[test]
    fn tensor_rule_matches_signature((n, w) in arb_word(4, 10), cut in 0usize..=10) {
        let letters = w.letters().to_vec();
        let cut = cut.min(letters.len());
        let x = CrystalElement::word(Word::new(letters[..cut].to_vec()), n).unwrap();
        let y = CrystalElement::word(Word::new(letters[cut..].to_vec()), n).unwrap();
        let xy = x.tensor(&y).unwrap();
        for i in 1..n {
            let two = tensor_rule(x.eps_phi(i).unwrap(), y.eps_phi(i).unwrap());
            prop_assert_eq!(xy.eps_phi(i).unwrap(), two);
            let stats: Vec<(usize, usize)> = letters
                .iter()
                .map(|&l| CrystalElement::word(Word::new(vec![l]), n).unwrap().eps_phi(i).unwrap())
                .collect();
            let (phi, at) = k_fold_phi(&stats);
            let (eps, from) = k_fold_eps(&stats);
            prop_assert_eq!((eps, phi), two);
            let flat = CrystalElement::word(Word::new(letters.clone()), n).unwrap();
            if let Some(j) = at {
                let moved = flat.lower(i).unwrap().flat();
                let diff: Vec<usize> = (0..letters.len()).filter(|&k| moved.letters()[k] != letters[k]).collect();
                prop_assert_eq!(diff, vec![j]);
            }
            if let Some(j) = from {
                let moved = flat.raise(i).unwrap().flat();
                let diff: Vec<usize> = (0..letters.len()).filter(|&k| moved.letters()[k] != letters[k]).collect();
                prop_assert_eq!(diff, vec![j]);
            }
        }
    }

    #[test]
    fn highest_is_yamanouchi((n, w) in arb_word(4, 10)) {
        let x = CrystalElement::word(w.clone(), n).unwrap();
        prop_assert_eq!(x.is_highest(), is_yamanouchi(w.letters(), n));
        prop_assert_eq!(x.is_lowest(), is_anti_yamanouchi(w.letters(), n));
    }

    #[test]
    fn knuth_moves_preserve_insertion((n, w) in arb_word(4, 10), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..40)) {
        let p = insertion_tableau(&w, n).unwrap();
        let mut cur = w;
        for pick in picks {
            let moves = knuth_moves(&cur);
            if moves.is_empty() {
                break;
            }
            cur = moves[pick.index(moves.len())].clone();
            prop_assert_eq!(insertion_tableau(&cur, n).unwrap(), p.clone());
        }
    }

    #[test]
    fn plactic_matches_knuth((n, w) in arb_word(3, 7), other in prop::collection::vec(1usize..=3, 0..=7)) {
        let other: Vec<usize> = other.into_iter().map(|v| v.min(n)).collect();
        let v = word_of(&other);
        let x = CrystalElement::word(w.clone(), n).unwrap();
        let y = CrystalElement::word(v.clone(), n).unwrap();
        if w.len() == v.len() {
            prop_assert_eq!(plactic_equivalent(&x, &y), knuth_equivalent(&w, &v));
        }
        for m in knuth_moves(&w) {
            prop_assert!(plactic_equivalent(&x, &CrystalElement::word(m, n).unwrap()));
        }
    }

    #[test]
    fn products_agree((t1, t2) in arb_pair(4, 6)) {
        let a = product(&t1, &t2, ProductMethod::ConcatWord).unwrap();
        prop_assert_eq!(product(&t1, &t2, ProductMethod::Insert).unwrap(), a.clone());
        prop_assert_eq!(product(&t1, &t2, ProductMethod::StarRect).unwrap(), a.clone());
        prop_assert!(knuth_equivalent(&a.row_word(), &t1.row_word().concat(&t2.row_word())));
    }

    #[test]
    fn evacuation_is_an_involution(t in arb_tableau(4, 8)) {
        let s = evacuation(&t).unwrap();
        prop_assert_eq!(s.shape(), t.shape());
        prop_assert_eq!(evacuation(&s).unwrap(), t.clone());
        let r = rotate_complement(&t).unwrap();
        prop_assert_eq!(rectify(&r).unwrap(), s);
        prop_assert_eq!(rectify(&r).unwrap(), insertion_tableau(&r.row_word(), t.rank()).unwrap());
        let n = t.rank();
        for i in 1..n {
            let (e, f) = t.eps_phi(i).unwrap();
            prop_assert_eq!(r.eps_phi(n - i).unwrap(), (f, e));
        }
    }

    #[test]
    fn shape_involutions(lam in arb_partition(5, 5)) {
        let twice = conjugate(&conjugate(&lam));
        prop_assert_eq!(twice.with_ambient(lam.ambient()).unwrap(), lam.clone());
        let rot = pi_rotate(&lam);
        let back = rot.rotate();
        prop_assert_eq!(&back, &SkewShape::straight(lam.clone()));
        prop_assert_eq!(back.rotate(), rot);
    }

    #[test]
    fn partition_enumeration_counts(k in 0usize..=8, n in 1usize..=4) {
        let parts = enumerate_partitions(k, n, Monoid::All, None);
        prop_assert!(parts.windows(2).all(|w| w[0] != w[1]));
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), parts.len());
        prop_assert_eq!(parts.len(), partition_count(k, n, k));
    }

    #[test]
    fn poly_text_round_trip(coeffs in prop::collection::vec(-4i64..=4, 0..8), other in prop::collection::vec(-4i64..=4, 0..8)) {
        let a = QPoly::from_coeffs(coeffs);
        let b = QPoly::from_coeffs(other);
        prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a.clone());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).eval_one(), a.eval_one() + b.eval_one());
        let wide: WidePoly = a.convert().unwrap();
        prop_assert_eq!(wide.to_string(), a.to_string());
    }

    #[test]
    fn json_round_trip(t in arb_tableau(4, 8), coeffs in prop::collection::vec(0i64..=3, 0..6)) {
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t.clone());
        let shape = t.shape().straight_partition().unwrap().clone();
        let json = serde_json::to_string(&shape).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), shape);
        let poly = QPoly::from_coeffs(coeffs);
        let json = serde_json::to_string(&poly).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPoly>(&json).unwrap(), poly);
    }
}
