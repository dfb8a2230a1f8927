use serde::{Deserialize, Serialize};

use super::triangulation::{tri_of, Triangulation};

/// A closed path in the dual ribbon graph, stored as the cyclic sequence of
/// half-edges through which it leaves successive triangles.
///
/// The stored rotation is the lexicographically least one, so equality of
/// `OrientedCurve`s is equality of cyclic words. Reduced words of simple
/// curves are their normal representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientedCurve {
    word: Vec<u32>,
}

pub(crate) fn least_rotation(w: &[u32]) -> usize {
    // Booth's algorithm
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let mut f = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = w[j % n];
        let mut i = f[j - k - 1];
        while i != usize::MAX && sj != w[(k + i + 1) % n] {
            if sj < w[(k + i + 1) % n] {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && sj != w[(k + i.wrapping_add(1)) % n] {
            if sj < w[k % n] {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else {
            f[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

impl OrientedCurve {
    /// Wraps a cyclic word, rotating it into canonical position. The word is
    /// assumed composable and cyclically reduced.
    pub fn from_word(mut word: Vec<u32>) -> Self {
        let r = least_rotation(&word);
        word.rotate_left(r);
        OrientedCurve { word }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn reversed(&self, tri: &Triangulation) -> OrientedCurve {
        OrientedCurve::from_word(reverse_word(tri, &self.word))
    }

    /// Canonical representative of the unoriented curve.
    pub fn unoriented(&self, tri: &Triangulation) -> OrientedCurve {
        let r = self.reversed(tri);
        if r.word < self.word {
            r
        } else {
            self.clone()
        }
    }

    /// Edge multiplicities of the word.
    pub fn weights(&self, tri: &Triangulation) -> Vec<u32> {
        let mut w = vec![0u32; tri.num_edges()];
        for &h in &self.word {
            w[tri.edge_of(h) as usize] += 1;
        }
        w
    }
}

pub fn reverse_word(tri: &Triangulation, w: &[u32]) -> Vec<u32> {
    w.iter().rev().map(|&h| tri.glue(h)).collect()
}

/// Is `w` a closed walk (each exit leaves the triangle the previous step entered)?
pub fn is_closed_walk(tri: &Triangulation, w: &[u32]) -> bool {
    let n = w.len();
    (0..n).all(|i| tri_of(tri.glue(w[i])) == tri_of(w[(i + 1) % n]))
}

/// Free cyclic reduction: cancels every exit that immediately re-crosses the
/// edge it came through.
pub fn reduce_cyclic(tri: &Triangulation, w: &[u32]) -> Vec<u32> {
    let mut st: Vec<u32> = Vec::with_capacity(w.len());
    for &h in w {
        if let Some(&top) = st.last() {
            if tri.glue(top) == h {
                st.pop();
                continue;
            }
        }
        st.push(h);
    }
    let mut lo = 0;
    let mut hi = st.len();
    while hi - lo >= 2 && tri.glue(st[hi - 1]) == st[lo] {
        lo += 1;
        hi -= 1;
    }
    st[lo..hi].to_vec()
}

/// `k`-th power of a closed walk (negative powers reverse it).
pub fn power_word(tri: &Triangulation, w: &[u32], k: i64) -> Vec<u32> {
    let base: Vec<u32> = if k < 0 { reverse_word(tri, w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_least(w: &[u32]) -> Vec<u32> {
        (0..w.len().max(1))
            .map(|r| {
                let mut v = w.to_vec();
                if !v.is_empty() {
                    v.rotate_left(r);
                }
                v
            })
            .min()
            .unwrap()
    }

    #[test]
    fn booth_matches_naive() {
        let cases: Vec<Vec<u32>> = vec![
            vec![],
            vec![3],
            vec![1, 1, 1],
            vec![2, 1, 2, 1, 1],
            vec![5, 3, 5, 3, 1, 5, 3, 5, 3, 1],
            vec![0, 2, 0, 1, 0, 2],
            vec![9, 8, 7, 6, 5, 4, 3, 2],
        ];
        for c in cases {
            let mut v = c.clone();
            let r = least_rotation(&v);
            if !v.is_empty() {
                v.rotate_left(r);
            }
            assert_eq!(v, naive_least(&c), "{c:?}");
        }
    }
}
