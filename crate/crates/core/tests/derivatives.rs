use orbitcalc_core::derivative::{
    b_k, b_k_orbit_set, b_k_orbit_set_expanded, comb_part_leq, composition_support, max_depth,
    whittaker_support,
};
use orbitcalc_core::oracle::{jordan_type, matrix_of_support};
use orbitcalc_core::partition::enumerate_partitions;
use orbitcalc_core::{Cap, GroupKind, Orbit, OrbitSet, Partition};

fn all(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, Cap::DEFAULT).unwrap()
}

#[test]
fn comb_part_equivalence() {
    for n in 0..=12 {
        for lambda in all(n) {
            for k in 1..=n {
                let b = b_k(&lambda, k);
                for mu in all(n - k) {
                    let lhs = comb_part_leq(&mu, k, &lambda).unwrap();
                    let rhs = k <= lambda.largest()
                        && b.as_ref().is_some_and(|b| mu.dominance_leq(b).unwrap());
                    assert_eq!(lhs, rhs, "μ={mu} k={k} λ={lambda}");
                }
            }
        }
    }
}

#[test]
fn b_k_is_the_maximum_below() {
    for n in 1..=10 {
        for lambda in all(n) {
            for k in 1..=n {
                let below: Vec<Partition> = all(n - k)
                    .into_iter()
                    .filter(|mu| mu.insert_part(k).dominance_leq(&lambda).unwrap())
                    .collect();
                let maxima: Vec<&Partition> = below
                    .iter()
                    .filter(|a| {
                        below
                            .iter()
                            .all(|b| *a == b || !a.dominance_leq(b).unwrap())
                    })
                    .collect();
                match b_k(&lambda, k) {
                    None => assert!(below.is_empty(), "{lambda} k={k}"),
                    Some(b) => assert_eq!(maxima, vec![&b], "{lambda} k={k}"),
                }
            }
        }
    }
}

#[test]
fn b_k_removes_a_cell_from_the_first_columns() {
    for n in 1..=12 {
        for lambda in all(n) {
            for k in 1..=lambda.largest() {
                let mut cols = lambda.transpose().parts().to_vec();
                for c in cols.iter_mut().take(k as usize) {
                    *c -= 1;
                }
                let expected = Partition::from_unsorted(cols);
                let b = b_k(&lambda, k).unwrap();
                assert_eq!(b.transpose(), expected, "{lambda} k={k}");
                assert_eq!(b.weight(), n - k);
            }
        }
    }
}

#[test]
fn orbit_set_derivative_matches_closure_expansion() {
    for n in 1..=8 {
        let g = GroupKind::type_a(n);
        let ps = all(n);
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i..] {
                let set = OrbitSet::new(g, [a, b].map(|p| Orbit::new(g, p.clone(), None).unwrap()))
                    .unwrap();
                for k in 1..=n + 1 {
                    let fast = b_k_orbit_set(&set, k).unwrap();
                    let slow = b_k_orbit_set_expanded(&set, k, Cap::DEFAULT).unwrap();
                    assert_eq!(fast, slow, "{set} k={k}");
                    assert_eq!(fast.is_empty(), k > max_depth(&set));
                }
            }
        }
    }
}

#[test]
fn empty_derivative_iff_k_exceeds_depth() {
    for n in 1..=10 {
        let g = GroupKind::type_a(n);
        for lambda in all(n) {
            let set = OrbitSet::new(g, [Orbit::new(g, lambda.clone(), None).unwrap()]).unwrap();
            for k in 1..=n + 1 {
                assert_eq!(
                    b_k_orbit_set(&set, k).unwrap().is_empty(),
                    k > max_depth(&set)
                );
            }
        }
    }
}

#[test]
fn appended_part_has_the_jordan_type_of_the_inserted_part() {
    for n in 1..=10 {
        for k in 1..=n {
            for mu in all(n - k) {
                let mut alpha = mu.parts().to_vec();
                alpha.push(k);
                let m = matrix_of_support(&composition_support(&alpha).unwrap());
                assert_eq!(jordan_type(&m).unwrap(), mu.insert_part(k));
            }
        }
    }
}

#[test]
fn literal_tail_sums_would_give_the_wrong_orbit() {
    // tail sums λ_k + ... + λ_l for (2,1) give {3}, leaving the whole
    // superdiagonal supported: the principal orbit (3), not (2,1)
    let lambda: Partition = "2,1".parse().unwrap();
    let head = whittaker_support(&lambda).unwrap();
    assert_eq!(head.breaks(), vec![2]);
    assert_eq!(jordan_type(&matrix_of_support(&head)).unwrap(), lambda);
}
