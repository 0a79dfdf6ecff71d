use orthoposet::{Poset, Subset};
use proptest::prelude::*;

/// A bounded poset on `n` elements: bottom 0, top n-1, and random covers
/// going up in index order in between.
fn bounded_poset() -> impl Strategy<Value = Poset> {
    (3usize..11).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), (n - 2) * (n - 2)).prop_map(move |edges| {
            let inner = n - 2;
            let mut covers = Vec::new();
            for i in 1..=inner {
                covers.push((0, i));
                covers.push((i, n - 1));
                for j in i + 1..=inner {
                    if edges[(i - 1) * inner + (j - 1)] {
                        covers.push((i, j));
                    }
                }
            }
            Poset::from_covers(n, 0, n - 1, &covers).unwrap()
        })
    })
}

fn subset(p: &Poset, mask: u16) -> Subset {
    Subset::from_indices(p.len(), p.elements().filter(|&x| mask >> x & 1 == 1))
}

proptest! {
    #[test]
    fn cones_form_a_galois_connection(p in bounded_poset(), a in any::<u16>(), b in any::<u16>()) {
        let (a, b) = (subset(&p, a), subset(&p, b));
        let ua = p.upper_cone(&a);
        prop_assert!(a.is_subset(&p.lower_cone(&ua)));
        prop_assert!(a.is_subset(&p.upper_cone(&p.lower_cone(&a))));
        prop_assert_eq!(p.upper_cone(&p.lower_cone(&ua)), ua.clone());
        let ab = a.union(&b);
        prop_assert!(p.upper_cone(&ab).is_subset(&ua));
        prop_assert_eq!(p.upper_cone(&ab), ua.intersection(&p.upper_cone(&b)));
    }

    #[test]
    fn cones_are_closed_in_the_right_direction(p in bounded_poset(), a in any::<u16>()) {
        let a = subset(&p, a);
        let l = p.lower_cone(&a);
        for x in l.iter() {
            prop_assert!(p.down_set(x).is_subset(&l));
        }
        let m = p.min_elements(&p.upper_cone(&a));
        prop_assert!(m.is_subset(&p.upper_cone(&a)));
    }

    #[test]
    fn joins_are_least_upper_bounds(p in bounded_poset(), x in 0usize..16, y in 0usize..16) {
        let (x, y) = (x % p.len(), y % p.len());
        if let Some(j) = p.join(x, y) {
            prop_assert!(p.leq(x, j) && p.leq(y, j));
            for u in p.upper_of(&[x, y]).iter() {
                prop_assert!(p.leq(j, u));
            }
        }
        if let Some(m) = p.meet(x, y) {
            for l in p.lower_of(&[x, y]).iter() {
                prop_assert!(p.leq(l, m));
            }
        }
        prop_assert!(p.join(x, p.top()) == Some(p.top()));
        prop_assert!(p.meet(x, p.bottom()) == Some(p.bottom()));
    }

    #[test]
    fn distributivity_forms_agree(p in bounded_poset()) {
        let r = p.check_distributivity_variants();
        prop_assert!(r.parts.iter().all(|part| part.verdict == r.verdict));
        prop_assert!(r.warnings.is_empty());
    }
}
