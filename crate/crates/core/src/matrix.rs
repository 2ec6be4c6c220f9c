//! Dense 0/1 matrices: total unimodularity, the row hypergraph and text I/O.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A dense matrix with entries in `{0,1}` and at least one row and column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TuMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Size caps for [`TuMatrix::is_totally_unimodular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuBudget {
    /// All square submatrices are checked when `min(m,n)` is at most this.
    pub exhaustive_cap: usize,
    /// Otherwise the row-signing criterion runs over the smaller dimension up
    /// to this many lines.
    pub signing_cap: usize,
}

impl Default for TuBudget {
    fn default() -> Self {
        TuBudget {
            exhaustive_cap: 8,
            signing_cap: 14,
        }
    }
}

impl TuMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid(
                "matrix needs at least one row and one column",
            ));
        }
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "expected {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|&x| x > 1) {
            return Err(Error::invalid("entries must be 0 or 1"));
        }
        Ok(TuMatrix { rows, cols, data })
    }

    /// Builds from row slices. Panics on ragged or non-binary input.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        TuMatrix::new(rows.len(), cols, data).expect("invalid matrix literal")
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0u8; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        TuMatrix::new(n, n, data).expect("identity needs n >= 1")
    }

    /// The exceptional 5×5 building block whose row hypergraph minimizes to
    /// `{{1,4,5},{1,2,5},{2,3,5},{3,4,5}}`.
    pub fn a0() -> Self {
        TuMatrix::from_rows(&[
            &[1, 0, 0, 1, 1],
            &[1, 1, 0, 0, 1],
            &[0, 1, 1, 0, 1],
            &[0, 0, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> TuMatrix {
        let mut data = vec![0u8; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        TuMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Incidence matrix of `h` restricted to its universe: one row per edge.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        let cols = h.universe();
        let mut data = Vec::with_capacity(h.m() * cols);
        for e in h.edges() {
            data.extend((0..cols).map(|v| e.contains(v) as u8));
        }
        TuMatrix::new(h.m(), cols, data)
    }

    /// `H[A]`: columns are vertices, each row is the characteristic vector of
    /// an edge. Edges are not minimized.
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        if self.cols > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "{} columns exceed the supported {MAX_VERTICES} vertices",
                self.cols
            )));
        }
        let edges = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| self.get(r, c) == 1)
                    .collect::<VertexSet>()
            })
            .collect();
        Hypergraph::new(self.cols, edges)
    }

    /// True iff every square submatrix has determinant in `{-1,0,1}`.
    pub fn is_totally_unimodular(&self, budget: TuBudget) -> Result<bool> {
        let small = self.rows.min(self.cols);
        if small <= budget.exhaustive_cap {
            return Ok(self.all_minors_unit());
        }
        if small <= budget.signing_cap {
            let lines = if self.rows <= self.cols {
                self.clone()
            } else {
                self.transpose()
            };
            return Ok(lines.rows_admit_signings());
        }
        Err(Error::BudgetExceeded {
            what: "total unimodularity check",
            limit: budget.signing_cap as u64,
        })
    }

    fn all_minors_unit(&self) -> bool {
        let small = self.rows.min(self.cols);
        let mut scratch = Vec::new();
        for k in 1..=small {
            let mut ok = true;
            for_each_combination(self.rows, k, |rs| {
                for_each_combination(self.cols, k, |cs| {
                    scratch.clear();
                    for &r in rs {
                        scratch.extend(cs.iter().map(|&c| self.get(r, c) as i64));
                    }
                    if bareiss_determinant(&mut scratch, k).abs() > 1 {
                        ok = false;
                    }
                    ok
                });
                ok
            });
            if !ok {
                return false;
            }
        }
        true
    }

    /// Ghouila-Houri: every subset of rows splits into two parts whose column
    /// sums differ by at most one.
    fn rows_admit_signings(&self) -> bool {
        let m = self.rows;
        let n = self.cols;
        let mut sums = vec![0i32; n];
        (1u64..1u64 << m).all(|subset| {
            let rows: Vec<usize> = (0..m).filter(|&r| subset >> r & 1 == 1).collect();
            // the first row's sign is fixed by symmetry
            let free = rows.len() - 1;
            (0u64..1u64 << free).any(|signs| {
                sums.iter_mut().for_each(|s| *s = 0);
                for (i, &r) in rows.iter().enumerate() {
                    let neg = i > 0 && signs >> (i - 1) & 1 == 1;
                    for (c, s) in sums.iter_mut().enumerate() {
                        let x = self.get(r, c) as i32;
                        *s += if neg { -x } else { x };
                    }
                }
                sums.iter().all(|s| s.abs() <= 1)
            })
        })
    }

    /// Text format: `p tm <m> <n>` then `m` lines of `n` characters from `{0,1}`.
    pub fn parse(text: &str) -> Result<TuMatrix> {
        let mut header: Option<(usize, usize)> = None;
        let mut data = Vec::new();
        let mut seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(i) => raw[..i].trim(),
                None => raw.trim(),
            };
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let toks: Vec<&str> = line.split_whitespace().collect();
                    if toks.len() != 4 || toks[0] != "p" || toks[1] != "tm" {
                        return Err(Error::parse(line_no, "expected header `p tm <m> <n>`"));
                    }
                    let m: usize = toks[2].parse().map_err(|_| {
                        Error::parse(line_no, format!("`{}` is not a count", toks[2]))
                    })?;
                    let n: usize = toks[3].parse().map_err(|_| {
                        Error::parse(line_no, format!("`{}` is not a count", toks[3]))
                    })?;
                    if m == 0 || n == 0 {
                        return Err(Error::parse(line_no, "matrix dimensions must be positive"));
                    }
                    header = Some((m, n));
                }
                Some((m, n)) => {
                    if seen == m {
                        return Err(Error::parse(
                            line_no,
                            format!("more than the declared {m} rows"),
                        ));
                    }
                    let row: String = line.split_whitespace().collect();
                    if row.len() != n {
                        return Err(Error::parse(
                            line_no,
                            format!("expected {n} entries, found {}", row.len()),
                        ));
                    }
                    for ch in row.chars() {
                        match ch {
                            '0' => data.push(0),
                            '1' => data.push(1),
                            other => {
                                return Err(Error::parse(
                                    line_no,
                                    format!("entry `{other}` is not 0 or 1"),
                                ))
                            }
                        }
                    }
                    seen += 1;
                }
            }
        }
        let (m, n) = header.ok_or_else(|| Error::parse(0, "missing header `p tm <m> <n>`"))?;
        if seen != m {
            return Err(Error::parse(0, format!("declared {m} rows, found {seen}")));
        }
        TuMatrix::new(m, n, data)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p tm {} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            out.extend(self.row(r).iter().map(|&x| if x == 1 { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for TuMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns false.
fn for_each_combination<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Fraction-free Gaussian elimination; `a` is a row-major `k×k` block and is
/// overwritten.
fn bareiss_determinant(a: &mut [i64], k: usize) -> i64 {
    let mut sign = 1i64;
    let mut prev = 1i64;
    for p in 0..k {
        if a[p * k + p] == 0 {
            match (p + 1..k).find(|&r| a[r * k + p] != 0) {
                Some(r) => {
                    for c in 0..k {
                        a.swap(p * k + c, r * k + c);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = a[p * k + p];
        for r in p + 1..k {
            for c in p + 1..k {
                a[r * k + c] = (a[r * k + c] * pivot - a[r * k + p] * a[p * k + c]) / prev;
            }
        }
        prev = pivot;
    }
    sign * a[(k - 1) * k + (k - 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset;

    fn odd_cycle() -> TuMatrix {
        TuMatrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn determinants() {
        let mut a = vec![1, 1, 0, 0, 1, 1, 1, 0, 1];
        assert_eq!(bareiss_determinant(&mut a, 3).abs(), 2);
        let mut b = vec![0, 1, 1, 0];
        assert_eq!(bareiss_determinant(&mut b, 2), -1);
        let mut c = vec![1, 2, 2, 4];
        assert_eq!(bareiss_determinant(&mut c, 2), 0);
        let mut d = vec![2, 0, 1, 1, 3, 2, 1, 1, 2];
        assert_eq!(bareiss_determinant(&mut d, 3), 6);
    }

    #[test]
    fn combinations_enumerated() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }

    #[test]
    fn tu_examples() {
        let b = TuBudget::default();
        assert!(TuMatrix::a0().is_totally_unimodular(b).unwrap());
        assert!(TuMatrix::identity(3).is_totally_unimodular(b).unwrap());
        assert!(!odd_cycle().is_totally_unimodular(b).unwrap());
    }

    #[test]
    fn signing_criterion_agrees_with_minors() {
        let forced = TuBudget {
            exhaustive_cap: 0,
            signing_cap: 14,
        };
        assert!(TuMatrix::a0().is_totally_unimodular(forced).unwrap());
        assert!(!odd_cycle().is_totally_unimodular(forced).unwrap());
        assert!(TuMatrix::identity(4).is_totally_unimodular(forced).unwrap());
        let none = TuBudget {
            exhaustive_cap: 0,
            signing_cap: 0,
        };
        assert!(TuMatrix::a0().is_totally_unimodular(none).is_err());
    }

    #[test]
    fn row_hypergraph() {
        assert_eq!(
            TuMatrix::identity(2).hypergraph().unwrap().edges(),
            &[vset![0], vset![1]]
        );
        let h = TuMatrix::a0().hypergraph().unwrap();
        assert_eq!(h.m(), 5);
        assert_eq!(h.edges()[4], vset![0, 1, 2, 3, 4]);
        assert_eq!(h.edges()[0], vset![0, 3, 4]);
        let ones = TuMatrix::from_rows(&[&[1, 1, 1]]);
        assert_eq!(ones.hypergraph().unwrap().edges(), &[vset![0, 1, 2]]);
    }

    #[test]
    fn text_round_trip() {
        let a = TuMatrix::parse("# a0\np tm 2 3\n101\n0 1 1\n").unwrap();
        assert_eq!(a, TuMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(TuMatrix::parse(&a.to_text()).unwrap(), a);
        assert!(TuMatrix::parse("p tm 1 2\n12\n").is_err());
        assert!(TuMatrix::parse("p tm 2 2\n11\n").is_err());
        assert!(TuMatrix::parse("p tm 0 2\n").is_err());
    }

    #[test]
    fn transpose_round_trip() {
        let a = TuMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let t = a.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert_eq!(t.get(2, 1), 1);
        assert_eq!(t.transpose(), a);
    }
}
