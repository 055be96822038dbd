use kummer_core::group::{build_group, GroupName, StabilizerKind};

#[test]
fn class_equation_holds() {
    for name in GroupName::ALL {
        let g = build_group(name);
        let classes = g.conjugacy_classes();
        let total: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(total, g.order(), "{name}");
        for c in &classes {
            assert_eq!(g.order() % c.len(), 0, "{name}");
        }
        // the center is the union of singleton classes
        let singletons = classes.iter().filter(|c| c.len() == 1).count();
        assert_eq!(singletons, g.center().order(), "{name}");
    }
}

#[test]
fn fixed_cosets_of_identity_is_the_index() {
    for name in GroupName::ALL {
        let g = build_group(name);
        for h in g.all_subgroups() {
            assert_eq!(g.fixed_cosets(g.identity(), &h).unwrap(), g.order() / h.order());
        }
    }
}

#[test]
fn fixed_cosets_is_a_class_function() {
    for name in GroupName::ALL {
        let g = build_group(name);
        let subgroups = g.all_subgroups();
        for class in g.conjugacy_classes() {
            for h in &subgroups {
                let first = g.fixed_cosets(class[0], h).unwrap();
                for &x in &class[1..] {
                    assert_eq!(g.fixed_cosets(x, h).unwrap(), first, "{name}");
                }
            }
        }
    }
}

#[test]
fn burnside_count_for_transitive_action() {
    for name in GroupName::ALL {
        let g = build_group(name);
        for h in g.all_subgroups() {
            let total: usize = (0..g.order()).map(|x| g.fixed_cosets(x, &h).unwrap()).sum();
            assert_eq!(total, g.order(), "{name} |H|={}", h.order());
        }
    }
}

/// Independent count: a subgroup is of a stabilizer kind by order + cyclicity +
/// a direct structural check, without going through `stabilizer_kind`.
#[test]
fn stabilizer_classes_cover_every_listed_subgroup() {
    for name in GroupName::ALL {
        let g = build_group(name);
        let classes = g.stabilizer_classes().unwrap();
        let covered: usize = classes.iter().map(|c| c.class_size).sum();
        let listed = g
            .all_subgroups()
            .into_iter()
            .filter(|h| {
                let cyclic = g.subgroup_is_cyclic(h);
                let n = h.order();
                (cyclic && [2, 3, 4, 6].contains(&n)) || (!cyclic && [8, 12, 24].contains(&n))
            })
            .count();
        assert_eq!(covered, listed, "{name}");
        for c in &classes {
            assert_eq!(c.index_m * c.subgroup.order(), g.order());
            assert_eq!(c.kind.order(), c.subgroup.order());
            assert_eq!(c.sing_type.stabilizer_kind(), c.kind);
            assert!(g.subgroup(c.subgroup.elements()).is_ok());
        }
    }
}

#[test]
fn stabilizer_tables() {
    use StabilizerKind::*;
    let table = |name| {
        build_group(name)
            .stabilizer_classes()
            .unwrap()
            .into_iter()
            .map(|c| (c.kind, c.index_m, c.class_size))
            .collect::<Vec<_>>()
    };
    assert_eq!(table(GroupName::Z2), vec![(Z2, 1, 1)]);
    assert_eq!(table(GroupName::Z3), vec![(Z3, 1, 1)]);
    assert_eq!(table(GroupName::Z4), vec![(Z2, 2, 1), (Z4, 1, 1)]);
    assert_eq!(table(GroupName::Z6), vec![(Z2, 3, 1), (Z3, 2, 1), (Z6, 1, 1)]);
    assert_eq!(table(GroupName::Q8), vec![(Z2, 4, 1), (Z4, 2, 1), (Z4, 2, 1), (Z4, 2, 1), (Q8, 1, 1)]);
    assert_eq!(
        table(GroupName::Q12),
        vec![(Z2, 6, 1), (Z3, 4, 1), (Z4, 3, 3), (Z6, 2, 1), (Q12, 1, 1)]
    );
    assert_eq!(
        table(GroupName::T24),
        vec![(Z2, 12, 1), (Z3, 8, 4), (Z4, 6, 3), (Z6, 4, 4), (Q8, 3, 1), (T24, 1, 1)]
    );
}

#[test]
fn element_order_census() {
    let census = |name| {
        let g = build_group(name);
        let mut counts = [0usize; 7];
        for x in 0..g.order() {
            let k = g.element_order(x);
            counts[[1, 2, 3, 4, 6, 8, 12].iter().position(|&o| o == k).unwrap()] += 1;
        }
        counts
    };
    // orders            1  2  3  4  6  8  12
    assert_eq!(census(GroupName::Q8), [1, 1, 0, 6, 0, 0, 0]);
    assert_eq!(census(GroupName::Q12), [1, 1, 2, 6, 2, 0, 0]);
    assert_eq!(census(GroupName::T24), [1, 1, 8, 6, 8, 0, 0]);
}
