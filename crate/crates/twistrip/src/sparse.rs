//! Minimal CSR sparse matrix: assembly by triplets, matvec, symmetry
//! checks. Sized for five-point stencils plus dense end-column blocks.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Csr {
    pub n: usize,
    pub indptr: Vec<usize>,
    pub indices: Vec<usize>,
    pub data: Vec<f64>,
}

impl Csr {
    /// Build from (row, col, value) triplets; duplicates are summed,
    /// exact zeros kept (bitwise-reproducible structure).
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut counts = vec![0usize; n + 1];
        let mut sorted: Vec<(usize, usize, f64)> = triplets.to_vec();
        sorted.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        // merge duplicates
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(sorted.len());
        for t in sorted {
            if let Some(last) = merged.last_mut() {
                if last.0 == t.0 && last.1 == t.1 {
                    last.2 += t.2;
                    continue;
                }
            }
            merged.push(t);
        }
        for &(r, _, _) in &merged {
            counts[r + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let indices = merged.iter().map(|t| t.1).collect();
        let data = merged.iter().map(|t| t.2).collect();
        Csr { n, indptr: counts, indices, data }
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    pub fn row(&self, i: usize) -> (&[usize], &[f64]) {
        let (a, b) = (self.indptr[i], self.indptr[i + 1]);
        (&self.indices[a..b], &self.data[a..b])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (cols, vals) = self.row(i);
        match cols.binary_search(&j) {
            Ok(p) => vals[p],
            Err(_) => 0.0,
        }
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            let mut s = 0.0;
            for (&j, &v) in cols.iter().zip(vals) {
                s += v * x[j];
            }
            y[i] = s;
        }
    }

    pub fn matvec_alloc(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        self.matvec(x, &mut y);
        y
    }

    /// Largest |A[i][j] - A[j][i]|; 0.0 for exactly symmetric matrices.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                worst = worst.max((v - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Half bandwidth: max over entries of |i - j|.
    pub fn bandwidth(&self) -> usize {
        let mut bw = 0usize;
        for i in 0..self.n {
            let (cols, _) = self.row(i);
            for &j in cols {
                bw = bw.max(i.abs_diff(j));
            }
        }
        bw
    }

    /// A + shift * I on the diagonal (every row must hold its diagonal).
    pub fn shifted(&self, shift: f64) -> Result<Csr> {
        let mut out = self.clone();
        for i in 0..out.n {
            let (a, b) = (out.indptr[i], out.indptr[i + 1]);
            let pos = out.indices[a..b]
                .binary_search(&i)
                .map_err(|_| Error::numerics(format!("row {i} has no stored diagonal")))?;
            out.data[a + pos] += shift;
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.n]; self.n];
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                m[i][j] += v;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_matvec() {
        let a = Csr::from_triplets(3, &[(0, 0, 1.0), (0, 0, 1.0), (1, 2, 3.0), (2, 1, 3.0), (1, 1, 5.0), (2, 2, 1.0)]);
        assert_eq!(a.get(0, 0), 2.0);
        assert_eq!(a.nnz(), 5);
        let y = a.matvec_alloc(&[1.0, 2.0, 3.0]);
        assert_eq!(y, vec![2.0, 19.0, 9.0]);
        assert_eq!(a.asymmetry(), 0.0);
        assert_eq!(a.bandwidth(), 1);
    }

    #[test]
    fn shifted_diag() {
        let a = Csr::from_triplets(2, &[(0, 0, 1.0), (1, 1, 2.0)]);
        let b = a.shifted(-0.5).unwrap();
        assert_eq!(b.get(0, 0), 0.5);
        assert_eq!(b.get(1, 1), 1.5);
        let c = Csr::from_triplets(2, &[(0, 1, 1.0), (1, 0, 1.0)]);
        assert!(c.shifted(1.0).is_err());
    }
}
