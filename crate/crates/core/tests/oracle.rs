use nilp2_core::formmodule::{module_from_symbol, FormModule, Symbol};
use nilp2_core::orbitoracle::{
    census_compare, conjugacy_probe, enumerate_nilpotents, orbit_partition, orthogonal_group,
    Generators, GroupKind, Oracle, OracleConfig,
};
use nilp2_core::{FieldSpec, QuadSpace, SpaceKind};

fn gf2() -> FieldSpec {
    FieldSpec::gf2()
}

fn cfg() -> OracleConfig {
    OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    }
}

#[test]
fn orbit_counts_over_f2() {
    let cases = [
        (SpaceKind::Odd, 3, GroupKind::O, 2),
        (SpaceKind::Odd, 5, GroupKind::O, 5),
        (SpaceKind::Odd, 7, GroupKind::O, 10),
        (SpaceKind::Plus, 4, GroupKind::O, 3),
        (SpaceKind::Minus, 4, GroupKind::O, 2),
        (SpaceKind::Plus, 6, GroupKind::O, 5),
        (SpaceKind::Minus, 6, GroupKind::O, 5),
        (SpaceKind::Plus, 4, GroupKind::SO, 4),
    ];
    for (kind, dim, group, expected) in cases {
        let space = QuadSpace::standard(kind, dim, gf2()).unwrap();
        let census = orbit_partition(&space, group, &cfg()).unwrap();
        assert_eq!(census.orbit_count(), expected, "{kind} {dim} {group}");
        let report = census_compare(&census);
        assert!(
            report.pass(),
            "{kind} {dim} {group}: {:?}",
            report.mismatches
        );
        for o in &census.orbits {
            assert!(space.in_lie_algebra(&o.representative));
            assert!(nilp2_core::quadspace::is_nilpotent(&o.representative));
        }
    }
}

#[test]
fn so_splitting_in_dimension_six() {
    for kind in [SpaceKind::Plus, SpaceKind::Minus] {
        let oracle = Oracle::standard(kind, 6, gf2(), cfg()).unwrap();
        let census = oracle.census(GroupKind::SO).unwrap();
        let report = census_compare(&census);
        assert!(report.pass(), "{kind}: {:?}", report.mismatches);
        for o in &census.orbits {
            assert_eq!(
                o.so_split,
                kind == SpaceKind::Plus && o.symbol.all_half(),
                "{}",
                o.symbol
            );
        }
    }
}

#[test]
fn odd_seven_split_symbol() {
    let oracle = Oracle::standard(SpaceKind::Odd, 7, gf2(), cfg()).unwrap();
    let census = oracle.census(GroupKind::O).unwrap();
    let groups = census.by_symbol();
    let (_, sizes) = groups
        .iter()
        .find(|(s, _)| s.to_string() == "(3)_2^2(1)_1")
        .unwrap();
    assert_eq!(sizes.len(), 2);
}

#[test]
fn nilpotent_enumeration() {
    let o3 = QuadSpace::standard(SpaceKind::Odd, 3, gf2()).unwrap();
    let all = enumerate_nilpotents(&o3, &OracleConfig::default()).unwrap();
    assert_eq!(all.len(), 4);
    assert!(all[0].is_zero());
    let plus4 = QuadSpace::standard(SpaceKind::Plus, 4, gf2()).unwrap();
    let census = orbit_partition(&plus4, GroupKind::O, &OracleConfig::default()).unwrap();
    let n = enumerate_nilpotents(&plus4, &OracleConfig::default())
        .unwrap()
        .len() as u64;
    assert_eq!(census.orbits.iter().map(|o| o.size).sum::<u64>(), n);
}

#[test]
fn orbit_sizes_divide_group_order() {
    for (kind, dim) in [
        (SpaceKind::Odd, 3),
        (SpaceKind::Plus, 4),
        (SpaceKind::Minus, 4),
        (SpaceKind::Plus, 2),
    ] {
        let space = QuadSpace::standard(kind, dim, gf2()).unwrap();
        let order = orthogonal_group(&space).len() as u64;
        let census = orbit_partition(&space, GroupKind::O, &OracleConfig::default()).unwrap();
        for o in &census.orbits {
            assert_eq!(
                order % o.size,
                0,
                "{kind} {dim}: {} does not divide {order}",
                o.size
            );
        }
    }
}

#[test]
fn q4_small_spaces() {
    let f = FieldSpec::standard(2).unwrap();
    for (kind, dim, group) in [
        (SpaceKind::Odd, 3, GroupKind::O),
        (SpaceKind::Plus, 4, GroupKind::O),
        (SpaceKind::Minus, 4, GroupKind::O),
        (SpaceKind::Plus, 4, GroupKind::SO),
        (SpaceKind::Odd, 5, GroupKind::O),
    ] {
        let space = QuadSpace::standard(kind, dim, f).unwrap();
        let census = orbit_partition(&space, group, &cfg()).unwrap();
        let report = census_compare(&census);
        assert!(
            report.pass(),
            "q=4 {kind} {dim} {group}: {:?}",
            report.mismatches
        );
    }
}

#[test]
fn dim5_transvections_match_full_group() {
    let oracle = Oracle::standard(SpaceKind::Odd, 5, gf2(), cfg()).unwrap();
    let a = oracle.labels_with(Generators::Transvections);
    let b = oracle.labels_with(Generators::FullGroup);
    assert_eq!(a, b);
}

#[test]
fn symbols_constant_on_orbits() {
    for (kind, dim) in [
        (SpaceKind::Odd, 3),
        (SpaceKind::Plus, 4),
        (SpaceKind::Minus, 4),
        (SpaceKind::Odd, 5),
    ] {
        let oracle = Oracle::standard(kind, dim, gf2(), cfg()).unwrap();
        let labels = oracle.labels();
        for (i, &l) in labels.o.iter().enumerate() {
            assert_eq!(
                oracle.symbol_of(i).unwrap(),
                oracle.symbol_of(l as usize).unwrap()
            );
        }
    }
    // sampled for larger spaces: every 1 + (size / 100)-th member
    for (kind, dim) in [
        (SpaceKind::Plus, 6),
        (SpaceKind::Minus, 6),
        (SpaceKind::Odd, 7),
    ] {
        let oracle = Oracle::standard(kind, dim, gf2(), cfg()).unwrap();
        let labels = oracle.labels();
        let mut members: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (i, &l) in labels.o.iter().enumerate() {
            members.entry(l).or_default().push(i);
        }
        for (rep, m) in members {
            let want = oracle.symbol_of(rep as usize).unwrap();
            let step = 1 + m.len() / 100;
            for &i in m.iter().step_by(step) {
                assert_eq!(oracle.symbol_of(i).unwrap(), want);
            }
        }
    }
}

fn standard_variant(
    symbol: &str,
    field: FieldSpec,
    mask: &[bool],
) -> (SpaceKind, nilp2_core::Matrix) {
    let s: Symbol = symbol.parse().unwrap();
    module_from_symbol(&s, field, mask)
        .unwrap()
        .to_standard()
        .unwrap()
}

#[test]
fn variant_modules_are_not_conjugate() {
    let (kind, x) = standard_variant("(3)_2^2(1)_1", gf2(), &[false]);
    let (_, y) = standard_variant("(3)_2^2(1)_1", gf2(), &[true]);
    assert_eq!(kind, SpaceKind::Odd);
    let space = QuadSpace::standard(kind, 7, gf2()).unwrap();
    assert!(conjugacy_probe(&space, &x, &x, GroupKind::O, &cfg()).unwrap());
    assert!(!conjugacy_probe(&space, &x, &y, GroupKind::O, &cfg()).unwrap());
    let zero = nilp2_core::Matrix::zeros(gf2(), 7, 7);
    assert!(!conjugacy_probe(&space, &zero, &x, GroupKind::O, &cfg()).unwrap());
}

/// Every F_q-class predicted for a symbol is hit by exactly one mask.
#[test]
fn variants_cover_all_orbits() {
    let f = gf2();
    for (kind, dim) in [
        (SpaceKind::Odd, 3),
        (SpaceKind::Odd, 5),
        (SpaceKind::Plus, 4),
        (SpaceKind::Minus, 4),
        (SpaceKind::Plus, 6),
        (SpaceKind::Minus, 6),
        (SpaceKind::Odd, 7),
    ] {
        let oracle = Oracle::standard(kind, dim, f, cfg()).unwrap();
        let labels = oracle.labels();
        let census = oracle.census_from_labels(GroupKind::O, &labels).unwrap();
        let mut hit: std::collections::BTreeMap<u32, usize> = Default::default();
        for s in
            nilp2_core::formmodule::enumerate_symbols(dim as u32, kind == SpaceKind::Odd).unwrap()
        {
            let n = s.toggle_positions(!s.is_defective()).len();
            for bits in 0..1u32 << n {
                let mask: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
                let module: FormModule = module_from_symbol(&s, f, &mask).unwrap();
                let (k, t) = module.to_standard().unwrap();
                if k != kind {
                    continue;
                }
                let i = oracle
                    .index_of(&t)
                    .expect("variant is a nilpotent of the standard space");
                *hit.entry(labels.o[i]).or_default() += 1;
            }
        }
        assert_eq!(
            hit.len(),
            census.orbit_count(),
            "{kind} {dim}: variants miss an orbit"
        );
        assert!(
            hit.values().all(|&c| c == 1),
            "{kind} {dim}: two variants share an orbit"
        );
    }
}
