use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Sparse integer matrix stored by columns; entries in each column are
/// sorted by row and never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn from_columns(rows: usize, mut columns: Vec<Vec<(usize, i64)>>) -> Self {
        for col in &mut columns {
            col.sort_unstable_by_key(|&(r, _)| r);
            // merge duplicates, drop zeros
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                assert!(r < rows, "row {r} out of range {rows}");
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            *col = merged;
        }
        IntMatrix { rows, columns }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix { rows: n, columns: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    /// Row-major dense input.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut columns = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[j].push((i, v));
                }
            }
        }
        IntMatrix { rows: r, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        let col = &self.columns[j];
        match col.binary_search_by_key(&i, |&(r, _)| r) {
            Ok(p) => col[p].1,
            Err(_) => 0,
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                columns[i].push((j, v));
            }
        }
        IntMatrix { rows: self.cols(), columns }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn scaled(&self, s: i64) -> IntMatrix {
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&(i, v)| (i, v * s)).collect())
            .collect();
        IntMatrix::from_columns(self.rows, columns)
    }

    fn check_same_shape(&self, other: &IntMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.iter().chain(b.iter()).copied().collect())
            .collect();
        Ok(IntMatrix::from_columns(self.rows, columns))
    }

    pub fn minus(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.plus(&other.scaled(-1))
    }

    /// `self − λ·I`.
    pub fn shifted(&self, lambda: i64) -> IntMatrix {
        assert!(self.is_square());
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(j, c)| c.iter().copied().chain(std::iter::once((j, -lambda))).collect())
            .collect();
        IntMatrix::from_columns(self.rows, columns)
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let mut columns = Vec::with_capacity(other.cols());
        for col in &other.columns {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    let e = acc.entry(i).or_insert(0);
                    *e = a
                        .checked_mul(b)
                        .and_then(|p| e.checked_add(p))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
            }
            columns.push(acc.into_iter().collect());
        }
        Ok(IntMatrix::from_columns(self.rows, columns))
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        self.submatrix(idx, idx)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        let columns = cols
            .iter()
            .map(|&j| {
                self.columns[j]
                    .iter()
                    .filter_map(|&(i, v)| pos.get(&i).map(|&p| (p, v)))
                    .collect()
            })
            .collect();
        IntMatrix::from_columns(rows.len(), columns)
    }

    /// Connected components of the bipartite row/column incidence graph.
    /// Each component is `(rows, cols)`, both sorted; columns without any
    /// entry appear as components with no rows, empty rows are omitted.
    pub fn bipartite_components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rows + self.cols();
        let mut uf = UnionFind::new(n);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, _) in col {
                uf.union(i, self.rows + j);
            }
        }
        let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for j in 0..self.cols() {
            let root = uf.find(self.rows + j);
            groups.entry(root).or_default().1.push(j);
        }
        for i in 0..self.rows {
            let root = uf.find(i);
            if let Some(g) = groups.get_mut(&root) {
                g.0.push(i);
            }
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|(_, c)| c[0]);
        out
    }

    /// Connected components of a square matrix's symmetric sparsity graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        assert!(self.is_square());
        let mut uf = UnionFind::new(self.rows);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, _) in col {
                uf.union(i, j);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.rows {
            groups.entry(uf.find(i)).or_default().push(i);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
