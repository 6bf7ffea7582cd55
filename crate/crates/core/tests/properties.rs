mod common;

use common::oracle::{self, Lattice};
use modseries::text::{parse_module, parse_series, render_module, render_series};
use modseries::{
    composition_series, hom_space, intertwines, is_isomorphic, is_simple, quotient, schreier_refine, FieldSpec, Mat,
    ModuleRep, NormalSeries, Ordinal, SearchConfig, SubspaceBasis,
};
use proptest::prelude::*;

type Gens = Vec<Vec<Vec<u32>>>;

fn raw_module() -> impl Strategy<Value = (u32, usize, Gens)> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=4, 0usize..=2).prop_flat_map(|(p, d, k)| {
        let mat = prop::collection::vec(prop::collection::vec(0..p, d), d);
        (Just(p), Just(d), prop::collection::vec(mat, k))
    })
}

fn build(p: u32, d: usize, gens: &[Vec<Vec<u32>>]) -> ModuleRep {
    let raw: Vec<Vec<Vec<u64>>> =
        gens.iter().map(|g| g.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect()).collect();
    ModuleRep::from_raw(p as u64, d, &raw).unwrap()
}

/// A module together with a few vectors of its carrier.
fn module_and_vectors(n: usize) -> impl Strategy<Value = (u32, usize, Gens, Vec<Vec<u32>>)> {
    raw_module().prop_flat_map(move |(p, d, g)| {
        let vs = prop::collection::vec(prop::collection::vec(0..p, d), 0..=n);
        (Just(p), Just(d), Just(g), vs)
    })
}

fn set_of(l: &Lattice, s: &SubspaceBasis) -> oracle::ElemSet {
    l.set_of_rows(s.rows())
}

fn plain_matrix() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (prop_oneof![Just(2u32), Just(3u32), Just(5u32)], 1usize..=4, 1usize..=5)
        .prop_flat_map(|(p, r, c)| (Just(p), prop::collection::vec(prop::collection::vec(0..p, c), r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_preserves_row_space((p, rows) in plain_matrix()) {
        let f = FieldSpec::new(p as u64).unwrap();
        let m = Mat::from_rows(f, &rows).unwrap();
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(&pivots, &pivots2);
        prop_assert_eq!(m.rank(), pivots.len());
        let l = Lattice::new(p, rows[0].len(), &[]);
        prop_assert_eq!(l.set_of_rows(&rows), l.set_of_rows(&r.row_vecs()));
    }

    #[test]
    fn kernel_is_exact((p, rows) in plain_matrix()) {
        let f = FieldSpec::new(p as u64).unwrap();
        let m = Mat::from_rows(f, &rows).unwrap();
        let k = m.kernel_basis();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.rows() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn canonical_basis_ignores_presentation((p, d, _g, vs) in module_and_vectors(4), shift in 1u32..5) {
        let f = FieldSpec::new(p as u64).unwrap();
        let a = SubspaceBasis::from_vectors(f, d, &vs).unwrap();
        // reversed, rescaled, and with pairwise sums mixed in
        let mut other: Vec<Vec<u32>> = vs.iter().rev().map(|v| v.iter().map(|&x| x * (shift % p).max(1) % p).collect()).collect();
        for w in vs.windows(2) {
            other.push(w[0].iter().zip(&w[1]).map(|(x, y)| (x + y) % p).collect());
        }
        let b = SubspaceBasis::from_vectors(f, d, &other).unwrap();
        prop_assert_eq!(&a, &b);
    }

    #[test]
    fn lattice_operations_match_element_sets((p, d, _g, vs) in module_and_vectors(6), split in 0usize..7) {
        let f = FieldSpec::new(p as u64).unwrap();
        let split = split.min(vs.len());
        let (x, y) = vs.split_at(split);
        let a = SubspaceBasis::from_vectors(f, d, x).unwrap();
        let b = SubspaceBasis::from_vectors(f, d, y).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert_eq!(&sum, &b.sum(&a).unwrap());
        prop_assert_eq!(&meet, &b.intersect(&a).unwrap());

        let l = Lattice::new(p, d, &[]);
        let (sa, sb) = (set_of(&l, &a), set_of(&l, &b));
        prop_assert_eq!(set_of(&l, &meet), oracle::intersect(&sa, &sb));
        prop_assert_eq!(set_of(&l, &sum), l.set_of_rows(&vs));
    }

    #[test]
    fn lattice_operations_associate((p, d, _g, vs) in module_and_vectors(6)) {
        let f = FieldSpec::new(p as u64).unwrap();
        let parts: Vec<SubspaceBasis> =
            vs.chunks(2).map(|c| SubspaceBasis::from_vectors(f, d, c).unwrap()).collect();
        if parts.len() == 3 {
            let (a, b, c) = (&parts[0], &parts[1], &parts[2]);
            prop_assert_eq!(a.sum(b).unwrap().sum(c).unwrap(), a.sum(&b.sum(c).unwrap()).unwrap());
            prop_assert_eq!(
                a.intersect(b).unwrap().intersect(c).unwrap(),
                a.intersect(&b.intersect(c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn spin_is_the_smallest_submodule_containing_the_seeds((p, d, g, vs) in module_and_vectors(2)) {
        let rep = build(p, d, &g);
        let l = Lattice::new(p, d, &g);
        let spun = rep.spin(&vs).unwrap();
        let seeds: Vec<usize> = vs.iter().map(|v| l.index(v)).collect();
        let expected = l.span(&seeds, true);
        prop_assert_eq!(set_of(&l, spun.basis()), expected.clone());
        // minimality: every oracle submodule holding the seeds holds the spin
        for s in l.submodules() {
            if seeds.iter().all(|&i| Lattice::has(&s, i)) {
                prop_assert!(oracle::is_subset(&expected, &s));
            }
        }
    }

    #[test]
    fn submodule_predicate_matches_stability((p, d, g, vs) in module_and_vectors(3)) {
        let rep = build(p, d, &g);
        let f = rep.field();
        let s = SubspaceBasis::from_vectors(f, d, &vs).unwrap();
        let l = Lattice::new(p, d, &g);
        prop_assert_eq!(rep.is_submodule(&s).unwrap(), l.is_stable(&set_of(&l, &s)));
    }

    #[test]
    fn simplicity_matches_lattice_size((p, d, g) in raw_module()) {
        let rep = build(p, d, &g);
        let l = Lattice::new(p, d, &g);
        let expected = l.submodules().len() == 2;
        prop_assert_eq!(is_simple(&rep, &SearchConfig::default()).unwrap(), expected);
    }

    #[test]
    fn quotient_dimension_and_projection((p, d, g, vs) in module_and_vectors(2)) {
        let rep = build(p, d, &g);
        let w = rep.spin(&vs).unwrap();
        let q = quotient(&rep, &w).unwrap();
        prop_assert_eq!(q.dim(), d - w.dim());
        prop_assert!(q.verify());
        prop_assert!(intertwines(q.projection(), &rep, q.quotient()));
    }

    #[test]
    fn conjugates_are_isomorphic_both_ways((p, d, g) in raw_module(), seed in any::<u64>()) {
        let rep = build(p, d, &g);
        let f = rep.field();
        let c = random_invertible(f, d, seed);
        let other = rep.conjugate(&c).unwrap();
        let cfg = SearchConfig::default();
        let there = is_isomorphic(&rep, &other, &cfg).unwrap();
        let back = is_isomorphic(&other, &rep, &cfg).unwrap();
        prop_assert!(there.as_ref().is_some_and(|w| w.verify(&rep, &other)));
        prop_assert!(back.as_ref().is_some_and(|w| w.verify(&other, &rep)));
    }

    #[test]
    fn hom_space_counts_every_intertwiner((p, d, g) in raw_module()) {
        // brute force over all d×d matrices is only feasible for tiny carriers
        prop_assume!((p as usize).pow((d * d) as u32) <= 512);
        let rep = build(p, d, &g);
        let f = rep.field();
        let dim = hom_space(&rep, &rep).unwrap().len();
        let total = (p as u64).pow((d * d) as u32);
        let found = (0..total)
            .filter(|&i| {
                let t = Mat::from_flat(f, d, d, f.vector_from_index(i, d * d)).unwrap();
                intertwines(&t, &rep, &rep)
            })
            .count() as u64;
        prop_assert_eq!(found, (p as u64).pow(dim as u32));
    }

    #[test]
    fn module_text_round_trips((p, d, g) in raw_module()) {
        let rep = build(p, d, &g);
        prop_assert_eq!(parse_module(&render_module(&rep)).unwrap(), rep);
    }

    #[test]
    fn series_text_round_trips((p, d, g) in raw_module()) {
        let rep = build(p, d, &g);
        let s = composition_series(&rep, &SearchConfig::default()).unwrap();
        let back = parse_series(&render_series(&s), &rep).unwrap();
        prop_assert_eq!(back.terms(), s.terms());
        prop_assert_eq!(back.labels(), s.labels());
    }

    #[test]
    fn schreier_refinement_is_deterministic((p, d, g, vs) in module_and_vectors(2)) {
        let rep = build(p, d, &g);
        let cfg = SearchConfig::default();
        let comp = composition_series(&rep, &cfg).unwrap();
        let coarse = {
            let mid = rep.spin(&vs).unwrap();
            let mut terms = vec![rep.zero_submodule()];
            if !mid.is_zero() && !mid.is_full() {
                terms.push(mid);
            }
            terms.push(rep.full_submodule());
            NormalSeries::from_submodules(rep.clone(), &terms).unwrap()
        };
        let a = schreier_refine(&comp, &coarse).unwrap();
        let b = schreier_refine(&comp, &coarse).unwrap();
        prop_assert_eq!(a.left.terms(), b.left.terms());
        prop_assert_eq!(a.right.terms(), b.right.terms());
        prop_assert_eq!(&a.pairing, &b.pairing);
        prop_assert_eq!(a.left.len(), a.right.len());
    }
}

fn random_invertible(f: FieldSpec, d: usize, seed: u64) -> Mat {
    // simple LCG stream; retried until invertible
    let mut state = seed | 1;
    loop {
        let data: Vec<u32> = (0..d * d)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % f.modulus() as u64) as u32
            })
            .collect();
        let m = Mat::from_flat(f, d, d, data).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

// ---- ordinals ----

fn ordinal(depth: u32) -> BoxedStrategy<Ordinal> {
    if depth == 0 {
        return (0u64..10).prop_map(Ordinal::nat).boxed();
    }
    prop::collection::vec((ordinal(depth - 1), 1u64..10), 0..4)
        .prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            let mut merged: Vec<(Ordinal, u64)> = Vec::new();
            for (e, c) in terms {
                match merged.last_mut() {
                    Some(last) if last.0 == e => last.1 += c,
                    _ => merged.push((e, c)),
                }
            }
            Ordinal::from_terms(merged).unwrap()
        })
        .boxed()
}

/// Every ordinal `< ω^3` with coefficients `≤ 2`, in increasing order.
fn small_ordinals() -> Vec<Ordinal> {
    let mut out = Vec::new();
    for a in 0..3u64 {
        for b in 0..3u64 {
            for c in 0..3u64 {
                for n in 0..3u64 {
                    let terms: Vec<(Ordinal, u64)> = [(3, a), (2, b), (1, c), (0, n)]
                        .into_iter()
                        .filter(|&(_, k)| k > 0)
                        .map(|(e, k)| (Ordinal::nat(e), k))
                        .collect();
                    out.push(Ordinal::from_terms(terms).unwrap());
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ordinal_order_is_total_and_transitive(a in ordinal(2), b in ordinal(2), c in ordinal(2)) {
        let lt = a < b;
        let gt = a > b;
        let eq = a == b;
        prop_assert_eq!([lt, gt, eq].iter().filter(|&&x| x).count(), 1);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn ordinal_addition_associates(a in ordinal(2), b in ordinal(2), c in ordinal(2)) {
        prop_assert_eq!((&a + &b) + c.clone(), a.clone() + (&b + &c));
    }

    #[test]
    fn addition_is_monotone_in_the_right_argument(a in ordinal(2), b in ordinal(2), c in ordinal(2)) {
        if b < c {
            prop_assert!(&a + &b < &a + &c);
        }
        prop_assert!(&a + &b >= b);
    }

    #[test]
    fn ordinal_text_round_trips(a in ordinal(3)) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn cardinality_is_finite_exactly_below_omega(a in ordinal(2)) {
        prop_assert_eq!(a.as_nat().is_some(), a < Ordinal::omega());
    }

    #[test]
    fn successor_classification(a in ordinal(2)) {
        let s = a.successor();
        prop_assert!(s.is_successor());
        prop_assert_eq!(s.predecessor(), Some(a.clone()));
        prop_assert!(!(a.is_successor() && a.is_limit()));
        prop_assert_eq!(a.is_zero() || a.is_successor() || a.is_limit(), true);
    }
}

#[test]
fn nothing_lies_between_an_ordinal_and_its_successor() {
    let all = small_ordinals();
    for a in &all {
        let s = a.successor();
        assert!(a < &s);
        assert!(all.iter().all(|x| !(a < x && x < &s)), "gap above {a}");
    }
}

#[test]
fn small_ordinals_are_listed_in_increasing_order() {
    // the enumeration is lexicographic in (ω², ω, 1)-coefficients, which is the ordinal order
    let all = small_ordinals();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn limits_are_exactly_the_unions_of_their_predecessors() {
    // among small ordinals, α is a limit iff it is nonzero and has no predecessor in the list
    let all = small_ordinals();
    for a in &all {
        let has_pred = all.iter().any(|x| &x.successor() == a);
        assert_eq!(a.is_limit(), !a.is_zero() && !has_pred, "{a}");
    }
}
