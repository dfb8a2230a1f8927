//! Integral homology of the surface through the dual graph.
//!
//! A spanning tree of the dual graph leaves exactly 2g + n − 1 edges out;
//! signed traversal counts of those edges are coordinates on H_1. The basis
//! a_1, b_1, …, a_g, b_g, Δ_1, …, Δ_{n−1} is unimodular in them.

use std::collections::VecDeque;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::surface_core::triangulation::{tri_of, Triangulation};

type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyModel {
    /// column of each non-tree edge, `usize::MAX` for tree edges
    column: Vec<usize>,
    /// rows: basis curves in cotree coordinates
    basis: Vec<Vec<i64>>,
    /// inverse of `basis`
    inverse: Vec<Vec<i64>>,
    genus: usize,
    rank: usize,
}

/// Exact inverse of a square integer matrix, or `None` if it is singular or
/// the inverse is not integral.
pub fn integer_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i128)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != Q::from_integer(0))?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Q::from_integer(0) {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = a[i][n + j];
            if !x.is_integer() {
                return None;
            }
            out[i][j] = x.to_integer() as i64;
        }
    }
    Some(out)
}

impl HomologyModel {
    pub fn new(tri: &Triangulation) -> Result<Self> {
        let nt = tri.num_triangles();
        let mut in_tree = vec![false; tri.num_edges()];
        let mut seen = vec![false; nt];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(t) = queue.pop_front() {
            for i in 0..3 {
                let h = 3 * t + i;
                let u = tri_of(tri.glue(h));
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    in_tree[tri.edge_of(h) as usize] = true;
                    queue.push_back(u);
                }
            }
        }
        let mut column = vec![usize::MAX; tri.num_edges()];
        let mut k = 0;
        for (e, &t) in in_tree.iter().enumerate() {
            if !t {
                column[e] = k;
                k += 1;
            }
        }
        let basis_curves = tri.homology_basis();
        if basis_curves.len() != k {
            return Err(Error::Construction("cotree rank differs from first Betti number".into()));
        }
        let mut model = HomologyModel { column, basis: Vec::new(), inverse: Vec::new(), genus: tri.gsb().len(), rank: k };
        model.basis = basis_curves.iter().map(|c| model.cotree(tri, c.word())).collect();
        model.inverse = integer_inverse(&model.basis)
            .ok_or_else(|| Error::Construction("homology basis is not unimodular".into()))?;
        Ok(model)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Signed traversal counts of the non-tree edges.
    pub fn cotree(&self, tri: &Triangulation, word: &[u32]) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &h in word {
            let e = tri.edge_of(h);
            let c = self.column[e as usize];
            if c != usize::MAX {
                v[c] += if tri.edge_halves(e)[0] == h { 1 } else { -1 };
            }
        }
        v
    }

    /// Coordinates of a closed walk in the basis a_1, b_1, …, Δ_{n−1}.
    pub fn coordinates(&self, tri: &Triangulation, word: &[u32]) -> Vec<i64> {
        let v = self.cotree(tri, word);
        let n = v.len();
        (0..n).map(|j| (0..n).map(|i| v[i] * self.inverse[i][j]).sum()).collect()
    }

    /// The cotree cochain `c` with `cotree(β_k) · c = rhs_k` for the basis
    /// curves β_k.
    pub fn solve(&self, rhs: &[i64]) -> Vec<i64> {
        let n = rhs.len();
        (0..n).map(|i| (0..n).map(|j| self.inverse[i][j] * rhs[j]).sum()).collect()
    }

    /// ⟨x, y⟩ from coordinates: the Δ's pair trivially.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        (0..self.genus).map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]).sum()
    }

    /// Is the symplectic part of the class zero (separating curves)?
    pub fn symplectic_part_zero(&self, x: &[i64]) -> bool {
        x[..2 * self.genus].iter().all(|&v| v == 0)
    }

    /// gcd of the symplectic coordinates (1 for nonseparating simple curves).
    pub fn symplectic_gcd(&self, x: &[i64]) -> i64 {
        x[..2 * self.genus].iter().fold(0i64, |g, &v| g.gcd(&v))
    }
}
