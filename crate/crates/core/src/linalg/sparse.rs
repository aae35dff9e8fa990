use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rat;

pub type SparseVec = BTreeMap<usize, Rat>;

/// Sparse matrix over Q stored as row -> (col -> entry). Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<usize, BTreeMap<usize, Rat>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
            row_labels: (0..rows).map(|i| format!("r{i}")).collect(),
            col_labels: (0..cols).map(|j| format!("c{j}")).collect(),
        }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rat>]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = SparseMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Attach basis labels. Labels must be unique within each axis.
    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> SparseMatrix {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        debug_assert!(unique(&row_labels) && unique(&col_labels), "duplicate matrix labels");
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of bounds");
        let row = self.entries.entry(r).or_default();
        if v.is_zero() {
            row.remove(&c);
            if row.is_empty() {
                self.entries.remove(&r);
            }
        } else {
            row.insert(c, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        self.entries.get(&r).and_then(|row| row.get(&c)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.values().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn row(&self, r: usize) -> Option<&BTreeMap<usize, Rat>> {
        self.entries.get(&r)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().flat_map(|(r, row)| row.iter().map(move |(c, v)| (*r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.set(c, r, v.clone());
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = SparseMatrix::zeros(self.rows, rhs.cols);
        for (r, row) in &self.entries {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, a) in row {
                if let Some(rrow) = rhs.entries.get(k) {
                    for (c, b) in rrow {
                        *acc.entry(*c).or_insert_with(Rat::zero) += a * b;
                    }
                }
            }
            for (c, v) in acc {
                out.set(*r, c, v);
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (r, row) in &self.entries {
            let mut acc = Rat::zero();
            for (c, a) in row {
                if let Some(x) = v.get(c) {
                    acc += a * x;
                }
            }
            if !acc.is_zero() {
                out.insert(*r, acc);
            }
        }
        out
    }

    /// Conjugate by permutations: entry (r, c) moves to (row_perm[r], col_perm[c]).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.set(row_perm[r], col_perm[c], v.clone());
        }
        out
    }

    /// Rank over Q by fraction-free elimination on integer rows.
    ///
    /// Each row is scaled to a primitive integer vector; eliminations use
    /// cross-multiplication followed by removal of the row content, so no
    /// fractions appear and coefficients stay bounded by the content gcd.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
        for row in self.entries.values() {
            let mut v = primitive_integer_row(row);
            loop {
                let Some((&lead, lead_val)) = v.iter().next() else { break };
                let Some(p) = pivots.get(&lead) else {
                    pivots.insert(lead, v);
                    break;
                };
                let a = lead_val.clone();
                let b = p[&lead].clone();
                let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (c, x) in &v {
                    next.insert(*c, x * &b);
                }
                for (c, y) in p {
                    let e = next.entry(*c).or_insert_with(BigInt::zero);
                    *e -= y * &a;
                }
                next.retain(|_, x| !x.is_zero());
                v = make_primitive(next);
            }
        }
        pivots.len()
    }

    /// A Q-basis of the kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rref = Rref::of_rows(self.entries.values().cloned());
        let pivot_cols: Vec<usize> = rref.rows.keys().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if rref.rows.contains_key(&free) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(free, Rat::one());
            for &pc in &pivot_cols {
                let row = &rref.rows[&pc];
                if let Some(x) = row.get(&free) {
                    v.insert(pc, -x.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduced row echelon form of a list of vectors as (pivot, row) pairs
/// sorted by pivot; each row has a 1 at its pivot and 0 at the other pivots.
pub fn row_reduce(rows: Vec<SparseVec>) -> Vec<(usize, SparseVec)> {
    Rref::of_rows(rows).rows.into_iter().collect()
}

fn unique(labels: &[String]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    labels.iter().all(|l| seen.insert(l))
}

fn primitive_integer_row(row: &BTreeMap<usize, Rat>) -> BTreeMap<usize, BigInt> {
    let mut lcm = BigInt::one();
    for v in row.values() {
        lcm = lcm.lcm(v.denom());
    }
    let ints = row.iter().map(|(c, v)| (*c, (v * Rat::from_integer(lcm.clone())).to_integer())).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: BTreeMap<usize, BigInt>) -> BTreeMap<usize, BigInt> {
    let mut g = BigInt::zero();
    for x in v.values() {
        g = g.gcd(x);
        if g.is_one() {
            return v;
        }
    }
    if g.is_zero() || g.is_one() {
        return v;
    }
    for x in v.values_mut() {
        *x /= &g;
    }
    v
}

/// Reduced row echelon form keyed by pivot column; pivot entries are 1.
struct Rref {
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    fn of_rows<I: IntoIterator<Item = SparseVec>>(rows: I) -> Rref {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for row in rows {
            let mut v = row;
            reduce_against(&mut v, &out);
            if let Some((&lead, lv)) = v.iter().next() {
                let inv = lv.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                // back-substitute into existing rows
                for other in out.values_mut() {
                    if let Some(c) = other.get(&lead).cloned() {
                        axpy(other, &v, &-c);
                    }
                }
                out.insert(lead, v);
            }
        }
        Rref { rows: out }
    }
}

fn axpy(y: &mut SparseVec, x: &SparseVec, a: &Rat) {
    for (c, v) in x {
        let e = y.entry(*c).or_insert_with(Rat::zero);
        *e += v * a;
        if e.is_zero() {
            y.remove(c);
        }
    }
}

fn reduce_against(v: &mut SparseVec, pivots: &BTreeMap<usize, SparseVec>) {
    loop {
        let mut changed = false;
        let keys: Vec<usize> = v.keys().copied().collect();
        for k in keys {
            if let (Some(p), Some(c)) = (pivots.get(&k), v.get(&k).cloned()) {
                axpy(v, p, &-c);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
}

/// Incremental solver for membership in the span of a list of vectors,
/// tracking each reduced vector as a combination of the inputs.
#[derive(Clone, Debug, Default)]
pub struct VectorSolver {
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    count: usize,
}

impl VectorSolver {
    pub fn new() -> VectorSolver {
        VectorSolver::default()
    }

    /// Add the next input vector; returns true when it was independent.
    pub fn push(&mut self, v: &SparseVec) -> bool {
        let idx = self.count;
        self.count += 1;
        let mut combo = SparseVec::new();
        combo.insert(idx, Rat::one());
        let (res, combo) = self.reduce_tracked(v.clone(), combo);
        match res.iter().next().map(|(k, x)| (*k, x.clone())) {
            None => false,
            Some((lead, lv)) => {
                let inv = lv.recip();
                let res: SparseVec = res.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                let combo: SparseVec = combo.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                self.pivots.insert(lead, (res, combo));
                true
            }
        }
    }

    fn reduce_tracked(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        loop {
            let hit = v.keys().find(|k| self.pivots.contains_key(k)).copied();
            let Some(k) = hit else { break };
            let c = v[&k].clone();
            let (pv, pc) = &self.pivots[&k];
            axpy(&mut v, pv, &-c.clone());
            axpy(&mut combo, pc, &-c);
        }
        (v, combo)
    }

    /// Express `v` as a combination of the pushed inputs, if it lies in their span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (res, combo) = self.reduce_tracked(v.clone(), SparseVec::new());
        if res.is_empty() {
            Some(combo.into_iter().map(|(k, x)| (k, -x)).collect())
        } else {
            None
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(SparseMatrix::identity(2).rank(), 2);
        assert_eq!(SparseMatrix::zeros(3, 3).rank(), 0);
        assert!(SparseMatrix::identity(2).kernel_basis().is_empty());
        assert_eq!(SparseMatrix::zeros(3, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn heisenberg_ce_degree_one() {
        // d: Λ¹h₃* → Λ²h₃*, columns e1*, e2*, e3*, rows e1*∧e2*, e1*∧e3*, e2*∧e3*.
        // Only e3* is hit: d(e3*) = -e1*∧e2* (any nonzero multiple).
        let m = dense(&[&[0, 0, -1], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let m = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 4 - m.rank());
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn fractional_entries() {
        let mut m = SparseMatrix::zeros(2, 2);
        m.set(0, 0, ratio(1, 2));
        m.set(0, 1, ratio(1, 3));
        m.set(1, 0, ratio(3, 2));
        m.set(1, 1, rat(1));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solver_tracks_combinations() {
        let mut s = VectorSolver::new();
        let a: SparseVec = [(0, rat(1)), (1, rat(1))].into_iter().collect();
        let b: SparseVec = [(1, rat(2))].into_iter().collect();
        assert!(s.push(&a));
        assert!(s.push(&b));
        let target: SparseVec = [(0, rat(3)), (1, rat(7))].into_iter().collect();
        let x = s.solve(&target).unwrap();
        assert_eq!(x[&0], rat(3));
        assert_eq!(x[&1], ratio(2, 1));
        let c: SparseVec = [(2, rat(1))].into_iter().collect();
        assert!(s.solve(&c).is_none());
    }
}
