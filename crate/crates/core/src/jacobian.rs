//! The Jacobian of a finite graph through the Smith normal form of the
//! reduced Laplacian, and spanning-tree counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FiniteGraph, VertexId};

/// `Jac(G)` as a product of cyclic groups `Z/d_1 x ... x Z/d_k` with
/// `d_1 | d_2 | ... | d_k` and every `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianStructure {
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
}

/// The vertex whose row and column are deleted from the Laplacian: the one
/// with the lexicographically smallest name.
pub fn deleted_vertex(g: &FiniteGraph) -> VertexId {
    g.vertices()
        .min_by(|a, b| g.vertex_name(*a).cmp(g.vertex_name(*b)))
        .expect("graphs have at least one vertex")
}

/// The Laplacian with the row and column of [`deleted_vertex`] removed.
pub fn reduced_laplacian(g: &FiniteGraph) -> Vec<Vec<BigInt>> {
    let skip = deleted_vertex(g).0;
    g.laplacian()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|(j, _)| *j != skip)
                .map(|(_, x)| BigInt::from(x))
                .collect()
        })
        .collect()
}

/// Diagonal of the Smith normal form of a square integer matrix, as
/// nonnegative integers in divisibility order.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let n = a.len();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // pivot: smallest nonzero absolute value in the trailing block
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                diag.extend(std::iter::repeat_n(BigInt::zero(), n - t));
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..n {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    diag
}

pub fn jacobian_structure(g: &FiniteGraph) -> JacobianStructure {
    let invariant_factors: Vec<BigInt> = smith_diagonal(reduced_laplacian(g))
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    let order = invariant_factors.iter().product();
    JacobianStructure {
        invariant_factors,
        order,
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Calls `visit` with the edge set of every spanning tree, as membership
/// flags indexed by edge, in a fixed order.
pub fn for_each_spanning_tree(g: &FiniteGraph, mut visit: impl FnMut(&[bool])) {
    let n = g.num_vertices();
    let m = g.num_edges();
    let mut chosen = vec![false; m];
    let comp: Vec<usize> = (0..n).collect();
    walk(g, 0, &mut chosen, comp, 0, &mut visit);

    fn walk(
        g: &FiniteGraph,
        e: usize,
        chosen: &mut Vec<bool>,
        comp: Vec<usize>,
        picked: usize,
        visit: &mut impl FnMut(&[bool]),
    ) {
        let n = g.num_vertices();
        if picked + 1 == n {
            visit(chosen);
            return;
        }
        if e == g.num_edges() || picked + (g.num_edges() - e) + 1 < n {
            return;
        }
        let (a, b) = g.ends(EdgeId(e));
        let (ca, cb) = (comp[a.0], comp[b.0]);
        if ca != cb {
            let merged: Vec<usize> = comp.iter().map(|&c| if c == cb { ca } else { c }).collect();
            chosen[e] = true;
            walk(g, e + 1, chosen, merged, picked + 1, visit);
            chosen[e] = false;
        }
        walk(g, e + 1, chosen, comp, picked, visit);
    }
}

/// Spanning trees as sorted edge lists.
pub fn spanning_trees(g: &FiniteGraph) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, |t| {
        out.push(
            t.iter()
                .enumerate()
                .filter(|(_, &x)| x)
                .map(|(e, _)| EdgeId(e))
                .collect(),
        );
    });
    out
}

/// Spanning-tree count from the Matrix-Tree determinant and from explicit
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCount {
    pub determinant: BigInt,
    pub enumerated: BigInt,
}

/// Both counts; disagreement is reported as a consistency error.
pub fn spanning_tree_count(g: &FiniteGraph) -> Result<TreeCount> {
    let det = determinant(reduced_laplacian(g)).abs();
    let mut count = 0u64;
    for_each_spanning_tree(g, |_| count += 1);
    let enumerated = BigInt::from(count);
    if det != enumerated {
        return Err(Error::Consistency(format!(
            "Matrix-Tree determinant {det} differs from the enumerated count {enumerated}"
        )));
    }
    Ok(TreeCount {
        determinant: det,
        enumerated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_form_of_small_matrices() {
        let a = vec![ints(&[2, 4, 4]), ints(&[-6, 6, 12]), ints(&[10, -4, -16])];
        assert_eq!(smith_diagonal(a), ints(&[2, 6, 12]));
        let b = vec![ints(&[2, 0]), ints(&[0, 3])];
        assert_eq!(smith_diagonal(b), ints(&[1, 6]));
        let c = vec![ints(&[0, 0]), ints(&[0, 5])];
        assert_eq!(smith_diagonal(c), ints(&[5, 0]));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = vec![ints(&[2, -1, 0]), ints(&[-1, 2, -1]), ints(&[0, -1, 2])];
        assert_eq!(determinant(a), BigInt::from(4));
        let swap = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(determinant(swap), BigInt::from(-1));
    }

    #[test]
    fn known_jacobians() {
        let tree = jacobian_structure(&families::path(5));
        assert!(tree.invariant_factors.is_empty());
        assert_eq!(tree.order, BigInt::one());

        let k4 = jacobian_structure(&families::complete(4));
        assert_eq!(k4.invariant_factors, ints(&[4, 4]));

        assert_eq!(
            jacobian_structure(&families::petersen()).order,
            BigInt::from(2000)
        );
        assert_eq!(
            jacobian_structure(&families::cycle(5)).invariant_factors,
            ints(&[5])
        );
    }

    #[test]
    fn tree_counts_agree() {
        for (g, expected) in [
            (families::cycle(2), 2),
            (families::complete(4), 16),
            (families::complete_bipartite(3, 3), 81),
            (families::petersen(), 2000),
        ] {
            let c = spanning_tree_count(&g).unwrap();
            assert_eq!(c.enumerated, BigInt::from(expected));
        }
    }
}
