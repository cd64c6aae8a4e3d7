use nilrigid::catalog::Catalog;
use nilrigid::cohomology::{d1_matrix, d2_matrix, dj_matrix, h2_knil, orbit_dim};
use nilrigid::lie::{change_basis, derived_series, is_lie, lower_central_series, n_k, sn_k};
use nilrigid::linalg::{kernel_basis, rank, streaming_rank};
use nilrigid::{ExactMatrix, Scalar, StructureConstants};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_exact(m: &[Vec<i64>]) -> ExactMatrix {
    ExactMatrix::from_dense(m.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()).unwrap()
}

/// Largest nonvanishing minor, by cofactor expansion over `i128`.
fn minor_rank(m: &[Vec<i64>]) -> usize {
    fn det(m: &[Vec<i128>]) -> i128 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let sub: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&sub)
            })
            .sum()
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            }))
            .collect()
    }
    let (nr, nc) = (m.len(), m[0].len());
    for k in (1..=nr.min(nc)).rev() {
        for rs in subsets(nr, k) {
            for cs in subsets(nc, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                if det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

const PRINTED: [&str; 8] = ["f4+R", "g_{5,3}", "g_{5,6}", "12346_E", "g_{137B}", "g_{247K}", "g_{147D}", "g_{137A_1}"];

/// A printed algebra in a random upper unitriangular basis.
fn printed_in_random_basis(which: usize, seed: &[i64]) -> StructureConstants {
    let mu = Catalog::builtin().algebra(PRINTED[which % PRINTED.len()]).unwrap();
    change_basis(&mu, &basis(mu.dim(), seed)).unwrap()
}

fn basis(n: usize, seed: &[i64]) -> ExactMatrix {
    let mut it = seed.iter().cycle();
    let mut p = vec![vec![Scalar::zero(); n]; n];
    for (i, row) in p.iter_mut().enumerate() {
        row[i] = Scalar::one();
        for x in row.iter_mut().skip(i + 1) {
            *x = Scalar::from_int(*it.next().unwrap());
        }
    }
    ExactMatrix::from_dense(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_minor_oracle(m in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(rank(&to_exact(&m)).rank, minor_rank(&m));
    }

    #[test]
    fn rank_of_transpose(m in (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| matrix(r, c))) {
        let a = to_exact(&m);
        prop_assert_eq!(rank(&a).rank, rank(&a.transpose()).rank);
    }

    #[test]
    fn streaming_rank_agrees(m in (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| matrix(r, c))) {
        let a = to_exact(&m);
        let doubled = a.rows().iter().chain(a.rows()).cloned();
        prop_assert_eq!(streaming_rank(doubled, a.ncols()).unwrap(), rank(&a).rank);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let a = to_exact(&m);
        let ker = kernel_basis(&a);
        prop_assert_eq!(ker.len() + rank(&a).rank, a.ncols());
        for v in ker {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn nk_zero_implies_snk_zero(which in 0usize..4, seed in prop::collection::vec(-2i64..=2, 12), k in 2usize..=4) {
        let mu = printed_in_random_basis(which, &seed);
        prop_assert!(is_lie(&mu));
        if n_k(&mu, k).is_zero() {
            prop_assert!(sn_k(&mu, k).is_zero());
        }
    }

    #[test]
    fn derived_inside_lower_central(which in 0usize..8, seed in prop::collection::vec(-2i64..=2, 12)) {
        let mu = printed_in_random_basis(which, &seed);
        let lcs = lower_central_series(&mu).unwrap();
        for (i, d) in derived_series(&mu).unwrap().iter().enumerate() {
            let idx = ((1usize << i) - 1).min(lcs.len() - 1);
            prop_assert!(d.is_contained_in(&lcs[idx]));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn change_basis_round_trip(seed in prop::collection::vec(-2i64..=2, 10)) {
        let mu = Catalog::builtin().algebra("g_{5,3}").unwrap();
        let nu = printed_in_random_basis(1, &seed);
        prop_assert!(is_lie(&nu));
        prop_assert_eq!(orbit_dim(&nu), orbit_dim(&mu));
        prop_assert_eq!(h2_knil(&nu, 3).unwrap().h, 2);
        let p = basis(5, &seed);
        prop_assert!(change_basis(&nu, &p.inverse().unwrap()).unwrap().table_eq(&mu));
    }
}

#[test]
fn complex_identities_on_printed_algebras() {
    let cat = Catalog::builtin();
    for r in cat.records().iter().filter(|r| r.params.is_empty()) {
        let mu = cat.algebra(&r.name).unwrap();
        let (d1, d2, dj) = (d1_matrix(&mu), d2_matrix(&mu), dj_matrix(&mu));
        assert!(d2.mul(&d1).unwrap().is_zero(), "{}", r.name);
        let neg: Vec<Vec<Scalar>> = d2.to_dense().iter().map(|row| row.iter().map(|x| -x).collect()).collect();
        assert_eq!(dj.to_dense(), neg, "{}", r.name);
    }
}
