//! Cross-module properties of the graph families: closed forms against
//! homology, sequence shapes, partitions and vertex covers.

use edgeideal::formulas::{is_stci_cycle, pd_bicyclic_vertex, pd_cycle, pd_dumbbell, pd_formula, pd_line};
use edgeideal::graphs::{build, edge_ideal, induced_subgraph, min_vertex_cover_size, FamilySpec, Graph};
use edgeideal::homcomplex::projective_dimension;
use edgeideal::polyalg::PrimeField;
use edgeideal::sequences::{cycle_partition, family_sequence, sv_check};
use proptest::prelude::*;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn pd_hom(spec: &FamilySpec) -> usize {
    projective_dimension(&build(spec).unwrap(), gf(2)).unwrap()
}

#[test]
fn closed_forms_match_homology() {
    for n in 3..=12 {
        assert_eq!(pd_cycle(n).unwrap().value, pd_hom(&FamilySpec::Cycle(n)), "C_{n}");
    }
    for n in 2..=10 {
        assert_eq!(pd_line(n).unwrap().value, pd_hom(&FamilySpec::Line(n)), "L_{n}");
    }
    for m in 3..=6 {
        for n in 3..=6 {
            if m + n - 1 <= 11 {
                let s = FamilySpec::BicyclicVertex { m, n };
                assert_eq!(pd_bicyclic_vertex(m, n).unwrap().value, pd_hom(&s), "{s}");
            }
        }
    }
    for m in 3..=5 {
        for n in 3..=5 {
            for k in 0..=3 {
                if m + n + k <= 11 {
                    let s = FamilySpec::Dumbbell { m, k, n };
                    assert_eq!(pd_dumbbell(m, k, n).unwrap().value, pd_hom(&s), "{s}");
                }
            }
        }
    }
}

#[test]
fn dumbbell_branch_with_one_cycle_two_mod_three() {
    // |V| ≡ 1 with exactly one of m, n ≡ 2 falls to the (2|V|+1)/3 branch
    for (m, k, n) in [(5, 2, 3), (3, 2, 5), (5, 5, 3), (4, 4, 5), (5, 1, 4)] {
        let s = FamilySpec::Dumbbell { m, k, n };
        let v = m + n + k;
        assert_eq!(v % 3, 1);
        assert_eq!(pd_dumbbell(m, k, n).unwrap().value, (2 * v + 1) / 3);
        assert_eq!(pd_hom(&s), (2 * v + 1) / 3, "{s}");
    }
}

#[test]
fn stci_cycles_and_heights() {
    for n in 3..=12 {
        let g = build(&FamilySpec::Cycle(n)).unwrap();
        assert_eq!(min_vertex_cover_size(&g).unwrap(), n.div_ceil(2));
        assert_eq!(is_stci_cycle(n).unwrap(), n == 3 || n == 5, "n = {n}");
    }
}

#[test]
fn cycle_partitions_for_residues_zero_and_one() {
    for n in 3..=30 {
        if n % 3 != 2 {
            let p = cycle_partition(n).unwrap();
            let r = sv_check(&p);
            assert!(r.ok, "n = {n}: {:?}", r.violations);
        }
    }
}

fn assert_sequence_shape(spec: &FamilySpec) {
    let g = build(spec).unwrap();
    let seq = family_sequence(spec, gf(32003)).unwrap();
    assert_eq!(seq.len(), pd_formula(spec).unwrap().value, "{spec}");
    assert_eq!(seq.claimed_length(), seq.len());
    let edges = edge_ideal(&g);
    let mut seen = vec![false; edges.len()];
    for f in seq.polys() {
        for t in f.terms() {
            assert_eq!(t.coeff, 1, "{spec}");
            let i = edges.iter().position(|e| *e == t.mono);
            assert!(i.is_some(), "{spec}: term {} is not an edge", t.mono.render(g.labels()));
            seen[i.unwrap()] = true;
        }
    }
    // every edge occurs in some generator
    assert!(seen.iter().all(|&s| s), "{spec}");
}

#[test]
fn sequences_have_formula_length_and_edge_terms() {
    for n in 3..=32 {
        assert_sequence_shape(&FamilySpec::Cycle(n));
    }
    for m in 3..=14 {
        for n in 3..=14 {
            assert_sequence_shape(&FamilySpec::BicyclicVertex { m, n });
            for k in 0..=12 {
                if m + n + k <= 32 {
                    assert_sequence_shape(&FamilySpec::Dumbbell { m, k, n });
                }
            }
        }
    }
}

fn labels(g: &Graph) -> Vec<&str> {
    g.labels().iter().map(String::as_str).collect()
}

fn arb_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (3usize..12).prop_map(FamilySpec::Cycle),
        (1usize..12).prop_map(FamilySpec::Line),
        (3usize..8, 3usize..8).prop_map(|(m, n)| FamilySpec::BicyclicVertex { m, n }),
        (3usize..7, 0usize..6, 3usize..7).prop_map(|(m, k, n)| FamilySpec::Dumbbell { m, k, n }),
    ]
}

proptest! {
    #[test]
    fn spec_text_round_trips(a in arb_spec(), b in arb_spec()) {
        prop_assert_eq!(a.to_string().parse::<FamilySpec>().unwrap(), a.clone());
        let u = FamilySpec::Union(Box::new(a), Box::new(b));
        prop_assert_eq!(u.to_string().parse::<FamilySpec>().unwrap(), u);
    }

    #[test]
    fn family_sizes(spec in arb_spec()) {
        let g = build(&spec).unwrap();
        prop_assert_eq!(g.vertex_count(), spec.vertex_count());
        let edges = match spec {
            FamilySpec::Cycle(n) => n,
            FamilySpec::Line(n) => n - 1,
            FamilySpec::BicyclicVertex { m, n } => m + n,
            FamilySpec::Dumbbell { m, k, n } => m + n + k + 1,
            FamilySpec::Union(..) => unreachable!(),
        };
        prop_assert_eq!(g.edge_count(), edges);
    }

    #[test]
    fn induced_subgraphs_compose(spec in arb_spec(), outer in any::<u32>(), inner in any::<u32>()) {
        let g = build(&spec).unwrap();
        let all = labels(&g);
        let pick = |mask: u32, from: &[&str]| -> Vec<String> {
            from.iter().enumerate().filter(|(i, _)| mask >> (i % 32) & 1 == 1).map(|(_, s)| s.to_string()).collect()
        };
        let w1 = pick(outer, &all);
        let w1r: Vec<&str> = w1.iter().map(String::as_str).collect();
        let h = induced_subgraph(&g, &w1r).unwrap();
        let w2 = pick(inner, &w1r);
        let w2r: Vec<&str> = w2.iter().map(String::as_str).collect();
        prop_assert_eq!(induced_subgraph(&h, &w2r).unwrap(), induced_subgraph(&g, &w2r).unwrap());
    }

    #[test]
    fn vertex_cover_is_minimal(spec in arb_spec()) {
        let g = build(&spec).unwrap();
        prop_assume!(g.vertex_count() <= 14);
        let c = min_vertex_cover_size(&g).unwrap();
        let n = g.vertex_count();
        let covers = |s: u32| g.edges().iter().all(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1);
        prop_assert!((0u32..1 << n).any(|s| s.count_ones() as usize == c && covers(s)));
        prop_assert!(!(0u32..1 << n).any(|s| (s.count_ones() as usize) < c && covers(s)));
    }
}
