//! Network matrices: recognition with a checkable tree witness, and random
//! generation of network instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::TuMatrix;

/// A directed tree whose arcs index the rows of a matrix, together with one
/// directed path per column. Arc `i` realizes row `row_to_arc`-preimage `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRepresentation {
    pub node_count: usize,
    /// `(tail, head)` per arc.
    pub arcs: Vec<(usize, usize)>,
    pub row_to_arc: Vec<usize>,
    /// Arc indices of each column's path, in travel order; empty for a zero column.
    pub col_to_path: Vec<Vec<usize>>,
}

impl TreeRepresentation {
    /// Rebuilds the matrix described by the witness.
    pub fn expand(&self) -> Result<TuMatrix> {
        let rows = self.row_to_arc.len();
        let cols = self.col_to_path.len();
        let mut arc_to_row = vec![usize::MAX; self.arcs.len()];
        for (r, &a) in self.row_to_arc.iter().enumerate() {
            if a >= self.arcs.len() || arc_to_row[a] != usize::MAX {
                return Err(Error::invalid("row_to_arc is not a bijection"));
            }
            arc_to_row[a] = r;
        }
        let mut data = vec![0u8; rows * cols];
        for (c, path) in self.col_to_path.iter().enumerate() {
            for &a in path {
                let r = *arc_to_row
                    .get(a)
                    .ok_or_else(|| Error::invalid("path uses unknown arc"))?;
                data[r * cols + c] = 1;
            }
        }
        TuMatrix::new(rows, cols, data)
    }

    /// True iff the arcs form a tree, every path is a directed walk along
    /// distinct arcs, and the expansion equals `a`.
    pub fn validates(&self, a: &TuMatrix) -> bool {
        if self.arcs.len() != a.rows() || self.node_count != self.arcs.len() + 1 {
            return false;
        }
        if self
            .arcs
            .iter()
            .any(|&(t, h)| t >= self.node_count || h >= self.node_count || t == h)
        {
            return false;
        }
        // n-1 arcs and connected means tree
        let mut parent: Vec<usize> = (0..self.node_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(t, h) in &self.arcs {
            let (rt, rh) = (find(&mut parent, t), find(&mut parent, h));
            if rt == rh {
                return false;
            }
            parent[rt] = rh;
        }
        for path in &self.col_to_path {
            let mut used = vec![false; self.arcs.len()];
            for w in path.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a >= self.arcs.len() || b >= self.arcs.len() || self.arcs[a].1 != self.arcs[b].0
                {
                    return false;
                }
            }
            for &arc in path {
                if arc >= self.arcs.len() || std::mem::replace(&mut used[arc], true) {
                    return false;
                }
            }
        }
        matches!(self.expand(), Ok(ref b) if b == a)
    }
}

/// Caps for [`recognize_network`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NetworkBudget {
    pub max_rows: usize,
    pub max_steps: u64,
}

impl Default for NetworkBudget {
    fn default() -> Self {
        NetworkBudget {
            max_rows: 12,
            max_steps: 2_000_000,
        }
    }
}

/// Searches for a tree representation of `a` with rows as arcs.
///
/// The tree is grown breadth-first from the tail of row 0's arc. When a node
/// is processed it receives all of its remaining incident arcs at once, after
/// which it is closed. Placed arcs of every column must always form a single
/// directed path, and an incomplete column must still have an open endpoint.
pub fn recognize_network(
    a: &TuMatrix,
    budget: NetworkBudget,
) -> Result<Option<TreeRepresentation>> {
    if a.rows() > budget.max_rows {
        return Err(Error::BudgetExceeded {
            what: "network recognition rows",
            limit: budget.max_rows as u64,
        });
    }
    let mut search = Search::new(a, budget.max_steps);
    if !search.process(0)? {
        return Ok(None);
    }
    let rep = search.witness();
    if !rep.validates(a) {
        return Err(Error::structural("network witness failed validation"));
    }
    Ok(Some(rep))
}

/// Recognizes `a` or, failing that, its transpose. The flag tells which.
pub fn recognize_network_or_transpose(
    a: &TuMatrix,
    budget: NetworkBudget,
) -> Result<Option<(bool, TreeRepresentation)>> {
    let direct = if a.rows() <= budget.max_rows {
        recognize_network(a, budget)?
    } else {
        None
    };
    if let Some(rep) = direct {
        return Ok(Some((false, rep)));
    }
    let t = a.transpose();
    if t.rows() > budget.max_rows {
        if a.rows() > budget.max_rows {
            return Err(Error::BudgetExceeded {
                what: "network recognition rows",
                limit: budget.max_rows as u64,
            });
        }
        return Ok(None);
    }
    Ok(recognize_network(&t, budget)?.map(|rep| (true, rep)))
}

struct Search<'a> {
    a: &'a TuMatrix,
    cols_of_row: Vec<Vec<usize>>,
    rows_of_col: Vec<Vec<usize>>,
    placed: Vec<Option<(usize, usize)>>,
    node_count: usize,
    closed: Vec<bool>,
    steps: u64,
    max_steps: u64,
}

impl<'a> Search<'a> {
    fn new(a: &'a TuMatrix, max_steps: u64) -> Self {
        let cols_of_row = (0..a.rows())
            .map(|r| (0..a.cols()).filter(|&c| a.get(r, c) == 1).collect())
            .collect();
        let rows_of_col = (0..a.cols())
            .map(|c| (0..a.rows()).filter(|&r| a.get(r, c) == 1).collect())
            .collect();
        Search {
            a,
            cols_of_row,
            rows_of_col,
            placed: vec![None; a.rows()],
            node_count: 1,
            closed: vec![false; a.rows() + 1],
            steps: 0,
            max_steps,
        }
    }

    fn process(&mut self, u: usize) -> Result<bool> {
        if u == self.node_count {
            return Ok(self.placed.iter().all(Option::is_some));
        }
        self.attach(u, 0)
    }

    /// Decides rows `r..` at node `u`, then closes `u` and moves on.
    fn attach(&mut self, u: usize, r: usize) -> Result<bool> {
        if r == self.a.rows() {
            self.closed[u] = true;
            let ok = self.all_columns_extendable() && self.process(u + 1)?;
            if !ok {
                self.closed[u] = false;
            }
            return Ok(ok);
        }
        if self.placed[r].is_some() {
            return self.attach(u, r + 1);
        }
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::BudgetExceeded {
                what: "network recognition steps",
                limit: self.max_steps,
            });
        }
        let root_first = u == 0 && r == 0;
        let orientations: &[bool] = if self.cols_of_row[r].is_empty() || root_first {
            &[true]
        } else {
            &[true, false]
        };
        for &outward in orientations {
            let v = self.node_count;
            self.placed[r] = Some(if outward { (u, v) } else { (v, u) });
            self.node_count += 1;
            if self.columns_consistent(r) && self.attach(u, r + 1)? {
                return Ok(true);
            }
            self.node_count -= 1;
            self.placed[r] = None;
        }
        if root_first {
            return Ok(false);
        }
        self.attach(u, r + 1)
    }

    fn columns_consistent(&self, r: usize) -> bool {
        self.cols_of_row[r]
            .iter()
            .all(|&c| self.column_state(c).is_some())
    }

    fn all_columns_extendable(&self) -> bool {
        (0..self.a.cols()).all(|c| self.column_state(c).is_some())
    }

    /// `Some(())` when column `c`'s placed arcs form one directed path that
    /// can still grow if the column is incomplete.
    fn column_state(&self, c: usize) -> Option<()> {
        let rows = &self.rows_of_col[c];
        let arcs: Vec<(usize, usize)> = rows.iter().filter_map(|&r| self.placed[r]).collect();
        if arcs.is_empty() {
            return Some(());
        }
        let mut indeg = vec![0u8; self.node_count];
        let mut outdeg = vec![0u8; self.node_count];
        let mut nodes = 0usize;
        for &(t, h) in &arcs {
            for x in [t, h] {
                if indeg[x] == 0 && outdeg[x] == 0 {
                    nodes += 1;
                }
            }
            outdeg[t] += 1;
            indeg[h] += 1;
            if outdeg[t] > 1 || indeg[h] > 1 {
                return None;
            }
        }
        if nodes != arcs.len() + 1 {
            return None;
        }
        if arcs.len() < rows.len() {
            let start = arcs.iter().map(|a| a.0).find(|&x| indeg[x] == 0)?;
            let end = arcs.iter().map(|a| a.1).find(|&x| outdeg[x] == 0)?;
            if self.closed[start] && self.closed[end] {
                return None;
            }
        }
        Some(())
    }

    fn witness(&self) -> TreeRepresentation {
        let arcs: Vec<(usize, usize)> = self
            .placed
            .iter()
            .map(|p| p.expect("all rows placed"))
            .collect();
        let col_to_path = self
            .rows_of_col
            .iter()
            .map(|rows| {
                let mut path: Vec<usize> = Vec::with_capacity(rows.len());
                let heads: Vec<usize> = rows.iter().map(|&r| arcs[r].1).collect();
                let mut cur = rows.iter().copied().find(|&r| !heads.contains(&arcs[r].0));
                while let Some(r) = cur {
                    path.push(r);
                    cur = rows.iter().copied().find(|&s| arcs[s].0 == arcs[r].1);
                }
                path
            })
            .collect();
        TreeRepresentation {
            node_count: self.node_count,
            arcs,
            row_to_arc: (0..self.a.rows()).collect(),
            col_to_path,
        }
    }
}

/// Builds a network matrix from a random directed tree on `tree_size` nodes
/// and `path_count` random nonempty directed paths. Rows are the
/// `tree_size - 1` arcs, columns are the paths.
pub fn generate_network_instance(
    seed: u64,
    tree_size: usize,
    path_count: usize,
) -> Result<TuMatrix> {
    if tree_size < 2 {
        return Err(Error::invalid("tree needs at least two nodes"));
    }
    if path_count == 0 {
        return Err(Error::invalid("need at least one path"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(tree_size - 1);
    for child in 1..tree_size {
        let parent = rng.gen_range(0..child);
        arcs.push(if rng.gen_bool(0.5) {
            (parent, child)
        } else {
            (child, parent)
        });
    }
    let paths = directed_paths(tree_size, &arcs);
    let rows = arcs.len();
    let mut data = vec![0u8; rows * path_count];
    for c in 0..path_count {
        let path = &paths[rng.gen_range(0..paths.len())];
        for &a in path {
            data[a * path_count + c] = 1;
        }
    }
    TuMatrix::new(rows, path_count, data)
}

/// Arc sets of all nonempty directed paths in a directed tree.
fn directed_paths(nodes: usize, arcs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out_arcs = vec![Vec::new(); nodes];
    for (i, &(t, _)) in arcs.iter().enumerate() {
        out_arcs[t].push(i);
    }
    let mut paths = Vec::new();
    for start in 0..nodes {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, Vec::new())];
        while let Some((node, path)) = stack.pop() {
            for &a in &out_arcs[node] {
                let mut next = path.clone();
                next.push(a);
                paths.push(next.clone());
                stack.push((arcs[a].1, next));
            }
        }
    }
    paths
}
