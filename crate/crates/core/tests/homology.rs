//! Homology and Betti numbers checked against an independent route: the
//! independence-complex form of the Betti numbers,
//!
//! β_{i,d} = Σ_{|W| = d} dim H̃_{d-i-1}(Ind(G[W])),
//!
//! evaluated with its own face enumeration and a dense rank routine.

use std::collections::BTreeMap;

use edgeideal::graphs::{build, disjoint_union, induced_subgraph_mask, FamilySpec, Graph};
use edgeideal::homcomplex::{
    betti_table, epsilon_complex, projective_dimension, reduced_homology_dims, HomologyProfile,
    SimplicialComplex,
};
use edgeideal::polyalg::PrimeField;
use proptest::prelude::*;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn graph(s: &str) -> Graph {
    build(&s.parse::<FamilySpec>().unwrap()).unwrap()
}

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut it = bits.iter();
    for a in 0..n {
        for b in a + 1..n {
            if *it.next().unwrap_or(&false) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(labels, edges).unwrap()
}

fn dense_rank(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let inv = |a: i64| {
        let (mut r, mut b, mut e) = (1i64, a.rem_euclid(p), p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c].rem_euclid(p) != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let f = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = (*x * f).rem_euclid(p);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let m = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - m * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology of the complex whose faces are `faces` (closed under
/// subsets, containing the empty face), by dense ranks.
fn oracle_homology(faces: &[u32], p: i64) -> BTreeMap<i32, usize> {
    let mut by_size: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &f in faces {
        by_size.entry(f.count_ones()).or_default().push(f);
    }
    let rank_of = |j: u32| -> usize {
        let (Some(cols), Some(rows)) = (by_size.get(&j), by_size.get(&(j.wrapping_sub(1)))) else {
            return 0;
        };
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            let mut sign = 1;
            for v in 0..32 {
                if face >> v & 1 == 1 {
                    let r = rows.iter().position(|&x| x == face & !(1 << v)).unwrap();
                    m[r][c] = sign;
                    sign = -sign;
                }
            }
        }
        dense_rank(m, p)
    };
    let mut out = BTreeMap::new();
    for (&j, list) in &by_size {
        let dim = list.len() - rank_of(j) - rank_of(j + 1);
        if dim > 0 {
            out.insert(j as i32 - 1, dim);
        }
    }
    out
}

fn oracle_betti(g: &Graph, p: i64) -> BTreeMap<(usize, usize), usize> {
    let n = g.vertex_count();
    let edge_masks: Vec<u32> = g.edges().iter().map(|&(a, b)| 1 << a | 1 << b).collect();
    let mut table = BTreeMap::new();
    for w in 1u32..(1 << n) {
        // independent subsets of W
        let faces: Vec<u32> = (0..(1u32 << n))
            .filter(|&f| f & !w == 0 && edge_masks.iter().all(|&e| f & e != e))
            .collect();
        let d = w.count_ones() as i32;
        for (deg, dim) in oracle_homology(&faces, p) {
            let i = d - deg - 1;
            if i >= 1 {
                *table.entry((i as usize, d as usize)).or_default() += dim;
            }
        }
    }
    table
}

fn table_map(g: &Graph, p: u64) -> BTreeMap<(usize, usize), usize> {
    betti_table(g, gf(p)).unwrap().iter().collect()
}

#[test]
fn family_betti_tables_match_the_independence_complex_route() {
    for s in [
        "cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7", "line:2", "line:4", "line:6",
        "bicyclic:3,3", "bicyclic:3,4", "dumbbell:3,0,3", "dumbbell:3,1,3", "union:cycle:4+line:2",
    ] {
        let g = graph(s);
        for p in [2, 3] {
            assert_eq!(table_map(&g, p), oracle_betti(&g, p as i64), "{s} over GF({p})");
        }
    }
}

#[test]
fn cycle_degree_n_betti_numbers() {
    for n in 3..=10usize {
        let t = betti_table(&graph(&format!("cycle:{n}")), gf(2)).unwrap();
        let top: Vec<((usize, usize), usize)> = t.iter().filter(|&((_, d), _)| d == n).collect();
        let want = match n % 3 {
            0 => vec![((2 * n / 3, n), 2)],
            1 => vec![(((2 * n + 1) / 3, n), 1)],
            _ => vec![(((2 * n - 1) / 3, n), 1)],
        };
        assert_eq!(top, want, "C_{n}");
    }
}

#[test]
fn line_degree_n_betti_numbers() {
    for n in 2..=10usize {
        let t = betti_table(&graph(&format!("line:{n}")), gf(3)).unwrap();
        let top: Vec<((usize, usize), usize)> = t.iter().filter(|&((_, d), _)| d == n).collect();
        let want = match n % 3 {
            0 => vec![((2 * n / 3, n), 1)],
            1 => vec![],
            _ => vec![(((2 * n - 1) / 3, n), 1)],
        };
        assert_eq!(top, want, "L_{n}");
    }
}

#[test]
fn characteristic_independence_on_small_families() {
    let mut specs = Vec::new();
    for n in 3..=10 {
        specs.push(format!("cycle:{n}"));
        specs.push(format!("line:{n}"));
    }
    for m in 3..=6 {
        for n in m..=6 {
            if m + n - 1 <= 10 {
                specs.push(format!("bicyclic:{m},{n}"));
            }
            for k in 0..=4 {
                if m + n + k <= 10 {
                    specs.push(format!("dumbbell:{m},{k},{n}"));
                }
            }
        }
    }
    for s in specs {
        let g = graph(&s);
        let t2 = betti_table(&g, gf(2)).unwrap();
        assert_eq!(t2, betti_table(&g, gf(3)).unwrap(), "{s}");
        assert_eq!(t2, betti_table(&g, gf(32003)).unwrap(), "{s}");
        assert_eq!(t2.get(1, 2), g.edge_count(), "{s}");
    }
}

#[test]
fn disjoint_union_shifts() {
    let edge = graph("line:2");
    let base = reduced_homology_dims(&epsilon_complex(&edge).unwrap(), gf(2));
    assert_eq!(base, HomologyProfile::from_dims([(-1, 1)]));
    for (n, shift) in [(4, 3), (5, 3), (7, 5), (8, 5)] {
        let g = disjoint_union(&graph(&format!("cycle:{n}")), &edge);
        for p in [2, 3] {
            let h = reduced_homology_dims(&epsilon_complex(&g).unwrap(), gf(p));
            assert_eq!(h, base.shifted(shift), "C_{n} with an edge");
        }
    }
    for (n, shift) in [(3, Some(2)), (4, None), (5, Some(3)), (6, Some(4)), (7, None)] {
        let g = disjoint_union(&graph(&format!("line:{n}")), &edge);
        let h = reduced_homology_dims(&epsilon_complex(&g).unwrap(), gf(2));
        match shift {
            Some(s) => assert_eq!(h, base.shifted(s), "L_{n} with an edge"),
            None => assert!(h.is_zero(), "L_{n} with an edge"),
        }
    }
}

#[test]
fn cycle_projective_dimension_sweep() {
    let want = [2, 3, 3, 4, 5, 5, 6, 7, 7, 8];
    for (n, &pd) in (3..=12).zip(&want) {
        for p in [2, 3, 32003] {
            assert_eq!(projective_dimension(&graph(&format!("cycle:{n}")), gf(p)).unwrap(), pd);
        }
    }
}

/// Pendant edge {u, v} with deg v = 1 and some neighbour of u carrying its
/// own pendant vertex (other than u).
fn has_blocking_pendant(g: &Graph) -> bool {
    let deg = |x: usize| g.degree(x);
    (0..g.vertex_count()).any(|v| {
        deg(v) == 1 && {
            let u = g.neighbors(v)[0];
            g.neighbors(u)
                .into_iter()
                .any(|w| g.neighbors(w).into_iter().any(|x| x != u && deg(x) == 1))
        }
    })
}

fn euler_from_faces(c: &SimplicialComplex) -> i64 {
    c.reduced_euler_characteristic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_graphs_match_the_oracle(n in 2usize..7, bits in prop::collection::vec(any::<bool>(), 21)) {
        let g = random_graph(n, &bits);
        prop_assume!(g.edge_count() > 0);
        prop_assert_eq!(table_map(&g, 2), oracle_betti(&g, 2));
        prop_assert_eq!(table_map(&g, 3), oracle_betti(&g, 3));
    }

    #[test]
    fn euler_characteristic_matches_face_counts(
        n in 1usize..8,
        facets in prop::collection::vec(any::<u32>(), 0..6),
        p in prop::sample::select(vec![2u64, 3, 5, 32003]),
    ) {
        let mask = (1u32 << n) - 1;
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        let c = SimplicialComplex::new(labels, facets.into_iter().map(|f| f & mask)).unwrap();
        let h = reduced_homology_dims(&c, gf(p));
        prop_assert_eq!(h.euler_characteristic(), euler_from_faces(&c));
    }

    #[test]
    fn blocked_pendant_has_no_homology(n in 3usize..9, bits in prop::collection::vec(any::<bool>(), 36)) {
        let g = random_graph(n, &bits);
        prop_assume!(g.edge_count() > 0);
        if has_blocking_pendant(&g) {
            prop_assert!(reduced_homology_dims(&epsilon_complex(&g).unwrap(), gf(2)).is_zero());
        }
    }

    #[test]
    fn pendant_removal_shifts_homology(n in 3usize..9, bits in prop::collection::vec(any::<bool>(), 36)) {
        let g = random_graph(n, &bits);
        prop_assume!(!has_blocking_pendant(&g));
        let pendant = (0..n).find(|&v| g.degree(v) == 1);
        prop_assume!(pendant.is_some());
        let u = g.neighbors(pendant.unwrap())[0];
        let closed: u64 = g.neighbors(u).iter().fold(1u64 << u, |m, &w| m | 1 << w);
        let rest = induced_subgraph_mask(&g, ((1u64 << n) - 1) & !closed);
        prop_assume!(rest.edge_count() > 0);
        let t = g.degree(u) as i32;
        let lhs = reduced_homology_dims(&epsilon_complex(&g).unwrap(), gf(3));
        let rhs = reduced_homology_dims(&epsilon_complex(&rest).unwrap(), gf(3)).shifted(t);
        prop_assert_eq!(lhs, rhs);
    }
}
