use matchplex_core::bits::SmallSet;
use matchplex_core::canon::{canonical_form, canonical_graph, DEFAULT_CAP};
use matchplex_core::complex::Complex;
use matchplex_core::graph::{Graph, Matching};
use matchplex_core::homology::{betti_reduced, boundary_matrix, FieldPrime};
use matchplex_core::{graph6, manifold};
use proptest::prelude::*;

const PRIMES: [FieldPrime; 2] = [FieldPrime::TWO, FieldPrime::THREE];

/// Graphs on 2..=8 vertices with at most 12 edges.
fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            (
                Just(n),
                proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(12)),
            )
        })
        .prop_map(|(n, edges)| Graph::new(n, &edges).unwrap())
}

fn matching_complex(g: &Graph) -> Complex {
    Complex::matching_complex(g).unwrap()
}

/// Edge subsets that are matchings, by brute force.
fn brute_matchings(g: &Graph) -> Vec<u64> {
    let m = g.edge_count();
    (0u64..1 << m)
        .filter(|&mask| {
            let mut used = 0u64;
            (0..m).filter(|i| mask >> i & 1 == 1).all(|i| {
                let (u, v) = g.edge(i);
                let b = (1u64 << u) | (1u64 << v);
                let ok = used & b == 0;
                used |= b;
                ok
            })
        })
        .collect()
}

fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = (1..p).find(|&x| x * m[rank][c] % p == 1).unwrap();
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers from a list of all faces (including the empty
/// one), by dense elimination with the alternating-sign boundary.
fn dense_betti(faces: &[u64], p: i64) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let by_size: Vec<Vec<u64>> = (0..=top)
        .map(|s| {
            let mut v: Vec<u64> = faces
                .iter()
                .copied()
                .filter(|f| f.count_ones() as usize == s)
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, &f) in cols.iter().enumerate() {
            let verts: Vec<u32> = (0..64).filter(|i| f >> i & 1 == 1).collect();
            for (pos, &v) in verts.iter().enumerate() {
                let r = rows.binary_search(&(f & !(1u64 << v))).unwrap();
                m[r][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        rank[s] = rank_mod_p(m, p);
    }
    (0..=top)
        .map(|s| by_size[s].len() - rank[s] - rank[s + 1])
        .collect()
}

fn all_faces(facets: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &f in facets {
        let mut sub = f;
        loop {
            out.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matchings_agree_with_brute_force(g in graph_strategy()) {
        let brute = brute_matchings(&g);
        let listed = g.enumerate_matchings().unwrap();
        prop_assert_eq!(listed.len(), brute.len());
        let c = matching_complex(&g);
        let faces: u64 = c.f_vector().unwrap().0.iter().sum();
        prop_assert_eq!(faces as usize, brute.len());
    }

    #[test]
    fn matching_complex_is_flag(g in graph_strategy()) {
        prop_assert!(matching_complex(&g).is_flag());
    }

    #[test]
    fn link_is_matching_complex_of_avoiding_subgraph(g in graph_strategy(), pick in any::<prop::sample::Index>()) {
        let matchings = g.enumerate_matchings().unwrap();
        let m: Matching = matchings[pick.index(matchings.len())];
        let c = matching_complex(&g);
        let link = c.link(m.edges()).unwrap();
        let avoid = g.subgraph_avoiding(m).unwrap();
        let mut back = vec![0i64; avoid.graph.edge_count()];
        for (old, new) in avoid.edge_map.iter().enumerate() {
            if let Some(new) = new {
                back[*new] = old as i64;
            }
        }
        let mut expected: Vec<Vec<i64>> = matching_complex(&avoid.graph)
            .facets()
            .iter()
            .map(|f| {
                let mut v: Vec<i64> = f.iter().map(|i| back[i]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        expected.sort();
        prop_assert_eq!(link.labeled_facets(), expected);
    }

    #[test]
    fn disjoint_union_gives_join(a in graph_strategy(), b in graph_strategy()) {
        prop_assume!(a.edge_count() + b.edge_count() <= 16);
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]);
        let joined = matching_complex(&a).join(&matching_complex(&b)).unwrap();
        prop_assert_eq!(matching_complex(&u).labeled_facets(), joined.labeled_facets());
    }

    #[test]
    fn euler_poincare(g in graph_strategy()) {
        let c = matching_complex(&g);
        let chi = c.euler_characteristic().unwrap();
        for p in PRIMES {
            prop_assert_eq!(betti_reduced(&c, p).unwrap().alternating_sum(), chi - 1);
        }
    }

    #[test]
    fn homology_matches_dense_oracle(g in graph_strategy()) {
        let c = matching_complex(&g);
        let faces = brute_matchings(&g);
        for p in PRIMES {
            let b = betti_reduced(&c, p).unwrap();
            prop_assert_eq!(&b.betti, &dense_betti(&faces, p.get() as i64));
        }
    }

    #[test]
    fn random_complexes_match_dense_oracle(
        facets in proptest::collection::vec(1u64..256, 1..8),
    ) {
        let idx: Vec<SmallSet> = facets.iter().map(|&b| SmallSet::from_bits(b)).collect();
        let c = Complex::from_index_facets((0..8).collect(), idx).unwrap();
        let faces = all_faces(&facets);
        for p in PRIMES {
            prop_assert_eq!(betti_reduced(&c, p).unwrap().betti, dense_betti(&faces, p.get() as i64));
        }
    }

    #[test]
    fn boundary_of_boundary_vanishes(g in graph_strategy()) {
        let c = matching_complex(&g);
        let d = c.dimension().unwrap();
        for p in PRIMES {
            for k in 1..=d {
                let upper = boundary_matrix(&c, k, p).unwrap();
                let lower = boundary_matrix(&c, k - 1, p).unwrap().to_dense();
                let up = upper.to_dense();
                for i in 0..lower.len() {
                    for j in 0..upper.cols() {
                        let s: u64 = (0..upper.rows)
                            .map(|r| lower[i][r] as u64 * up[r][j] as u64)
                            .sum();
                        prop_assert_eq!(s % p.get() as u64, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn equimatchable_iff_pure(g in graph_strategy()) {
        prop_assert_eq!(g.is_equimatchable().unwrap(), matching_complex(&g).is_pure());
    }

    #[test]
    fn no_induced_six_path_and_small_diameter(g in graph_strategy()) {
        let c = matching_complex(&g);
        prop_assert!(!c.has_induced_path6());
        if c.is_connected().unwrap() {
            if let Some(d) = c.diameter().unwrap() {
                prop_assert!(d <= 4);
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let cg = canonical_graph(&g, DEFAULT_CAP).unwrap();
        prop_assert_eq!(canonical_form(&cg).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn closed_manifold_boundary_is_empty_face(g in graph_strategy()) {
        let c = matching_complex(&g);
        let v = manifold::check_manifold(&c, FieldPrime::TWO);
        if v.status == manifold::ManifoldStatus::ClosedManifold {
            let boundary = v.boundary.unwrap();
            prop_assert_eq!(boundary.facets(), &[SmallSet::EMPTY][..]);
        }
    }
}
