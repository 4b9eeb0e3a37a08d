mod common;

use std::collections::BTreeSet;

use nilorbits::complexify::{complexify_orbit, fibre, image};
use nilorbits::diagrams::{enumerate_signed_fillings, row_sign_counts};
use nilorbits::orbit_index::{enumerate_orbits, validate_orbit};
use nilorbits::partitions::{dominates, enumerate_partitions, transpose};
use nilorbits::{AlgebraSpec, Partition, Signature, SimpleAlgebra};

fn members_up_to(n: usize) -> Vec<SimpleAlgebra> {
    let mut out = common::real_members(n);
    out.extend((2..=n).map(SimpleAlgebra::SlComplex));
    out.extend((3..=n).map(SimpleAlgebra::SoComplex));
    out
}

#[test]
fn partitions_match_recursion() {
    for n in 0..=14 {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(ours, common::partitions(n), "n={n}");
    }
}

#[test]
fn transpose_and_dominance_match_reference() {
    for n in 1..=9 {
        let all = enumerate_partitions(n);
        for a in &all {
            assert_eq!(transpose(a).parts(), common::conjugate(a.parts()).as_slice());
            for b in &all {
                assert_eq!(dominates(a, b).unwrap(), common::prefix_dominates(a.parts(), b.parts()), "{a} vs {b}");
            }
        }
    }
}

#[test]
fn signed_fillings_match_sign_vectors() {
    for n in 1..=9 {
        for lam in enumerate_partitions(n) {
            for p in 0..=n {
                let q = n - p;
                let ours: BTreeSet<Vec<String>> = enumerate_signed_fillings(&lam, Signature::new(p, q))
                    .iter()
                    .map(|d| {
                        let mut rows = d.row_strings();
                        common::sort_rows(&mut rows);
                        rows
                    })
                    .collect();
                assert_eq!(ours, common::fillings(lam.parts(), p, q), "{lam} ({p},{q})");
            }
        }
    }
}

#[test]
fn row_sign_counts_add_up() {
    let lam = Partition::new(vec![4, 3, 3, 1]).unwrap();
    for d in enumerate_signed_fillings(&lam, Signature::new(6, 5)) {
        let counts = row_sign_counts(&d);
        assert_eq!(counts.iter().map(|c| c.0).sum::<usize>(), 6);
        assert_eq!(counts.iter().map(|c| c.1).sum::<usize>(), 5);
    }
}

#[test]
fn index_sets_match_brute_force() {
    for member in members_up_to(9) {
        let g = AlgebraSpec::simple(member);
        let list = enumerate_orbits(&g).unwrap();
        let ours: BTreeSet<common::Raw> = list.iter().map(|o| common::raw_of(o.as_simple().unwrap())).collect();
        assert_eq!(ours.len(), list.len(), "{member}: repeated indices");
        assert_eq!(ours, common::orbits(member), "{member}");
        assert!(list.iter().all(|o| validate_orbit(&g, o)), "{member}");
    }
}

#[test]
fn complexification_matches_brute_force() {
    for member in common::real_members(7) {
        let g = AlgebraSpec::simple(member);
        for o in enumerate_orbits(&g).unwrap() {
            let raw = common::raw_of(o.as_simple().unwrap());
            let img = complexify_orbit(&g, &o).unwrap();
            assert_eq!(common::raw_of(img.as_simple().unwrap()), common::complexify(member, &raw), "{member} {o:?}");
        }
        let ours: BTreeSet<common::Raw> =
            image(&g).unwrap().iter().map(|o| common::raw_of(o.as_simple().unwrap())).collect();
        assert_eq!(ours, common::image(member), "{member}");
    }
}

#[test]
fn fibres_are_antichains_over_one_partition() {
    for member in common::real_members(5) {
        let g = AlgebraSpec::simple(member);
        for theta in image(&g).unwrap() {
            let lam = theta.as_simple().unwrap().underlying_partition().clone();
            let f = fibre(&g, &theta).unwrap();
            assert!(!f.is_empty());
            assert!(f.iter().all(|o| o.as_simple().unwrap().underlying_partition() == &lam));
        }
    }
}

#[test]
fn sl2_fibre_over_principal_orbit() {
    let g: AlgebraSpec = "sl(2,R)".parse().unwrap();
    let theta = serde_json::from_str(r#"{"partition":[2],"decoration":null}"#).unwrap();
    let f = fibre(&g, &theta).unwrap();
    let tags: Vec<_> = f.iter().map(|o| o.as_simple().unwrap().decoration.tag()).collect();
    assert_eq!(tags, vec![Some("+"), Some("-")]);
}
