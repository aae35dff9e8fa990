use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{Deg, DegRange, GradedSpace, Lin, TruncProfile};
use crate::linalg::{rat, Rat, SparseVec, VectorSolver};

/// A basis element of the free graded Lie algebra: the standard bracketing
/// of a Lyndon word, or `[P_w, P_w]` for an odd Lyndon word `w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieWord {
    pub word: Vec<usize>,
    pub squared: bool,
}

impl LieWord {
    pub fn letter(i: usize) -> LieWord {
        LieWord { word: vec![i], squared: false }
    }

    pub fn weight(&self) -> usize {
        self.word.len() * if self.squared { 2 } else { 1 }
    }

    pub fn deg(&self, letter_degs: &[Deg]) -> Deg {
        let d: i32 = self.word.iter().map(|&i| letter_degs[i].0).sum();
        Deg(if self.squared { 2 * d } else { d })
    }

    pub fn display(&self, names: &[String]) -> String {
        let inner = bracketing(&self.word, names);
        if self.squared {
            format!("[{inner},{inner}]")
        } else {
            inner
        }
    }
}

fn bracketing(w: &[usize], names: &[String]) -> String {
    if w.len() == 1 {
        return names[w[0]].clone();
    }
    let (u, v) = standard_factorization(w);
    format!("[{},{}]", bracketing(u, names), bracketing(v, names))
}

fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix.
fn standard_factorization(w: &[usize]) -> (&[usize], &[usize]) {
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("word of length ≥ 2");
    (&w[..i], &w[i..])
}

/// All Lyndon words over `k` letters of length at most `n`, in lexicographic order.
pub fn lyndon_words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<i64> = vec![-1];
    while let Some(last) = w.last_mut() {
        *last += 1;
        out.push(w.iter().map(|&x| x as usize).collect());
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(k as i64 - 1)) {
            w.pop();
        }
    }
    out
}

type Tensor = Lin<Vec<usize>>;

fn tensor_mul(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.add_term(w, ca * cb);
        }
    }
    out
}

fn commutator(a: &Tensor, da: Deg, b: &Tensor, db: Deg) -> Tensor {
    let mut out = tensor_mul(a, b);
    let ba = tensor_mul(b, a);
    if da.is_odd() && db.is_odd() {
        out.add_assign(&ba);
    } else {
        out.sub_assign(&ba);
    }
    out
}

/// The free graded Lie algebra on a finite alphabet, truncated at a maximal weight.
///
/// Elements are realized as primitive elements of the tensor algebra, and the
/// bracket is the graded commutator rewritten into the Lyndon basis.
#[derive(Clone, Debug)]
pub struct FreeLie {
    letters: GradedSpace,
    weight_max: usize,
    basis: Vec<LieWord>,
    index: BTreeMap<LieWord, usize>,
    tensors: Vec<Tensor>,
    by_weight: BTreeMap<usize, WeightBlock>,
}

#[derive(Clone, Debug, Default)]
struct WeightBlock {
    words: BTreeMap<Vec<usize>, usize>,
    solver: VectorSolver,
    members: Vec<usize>,
}

impl WeightBlock {
    fn to_vec(&mut self, t: &Tensor) -> SparseVec {
        let mut v = SparseVec::new();
        for (w, c) in t.iter() {
            let n = self.words.len();
            let i = *self.words.entry(w.clone()).or_insert(n);
            v.insert(i, c.clone());
        }
        v
    }

    fn lookup(&self, t: &Tensor) -> Option<SparseVec> {
        let mut v = SparseVec::new();
        for (w, c) in t.iter() {
            v.insert(*self.words.get(w)?, c.clone());
        }
        Some(v)
    }
}

impl FreeLie {
    pub fn new(letters: GradedSpace, weight_max: usize) -> FreeLie {
        let degs = letters.degs();
        let mut basis = Vec::new();
        let mut tensors: BTreeMap<Vec<usize>, Tensor> = BTreeMap::new();
        let mut words = lyndon_words(letters.len(), weight_max);
        words.sort_by_key(|w| w.len());
        for w in &words {
            let t = if w.len() == 1 {
                Tensor::basis(w.clone())
            } else {
                let (u, v) = standard_factorization(w);
                let du = Deg(u.iter().map(|&i| degs[i].0).sum());
                let dv = Deg(v.iter().map(|&i| degs[i].0).sum());
                commutator(&tensors[u], du, &tensors[v], dv)
            };
            tensors.insert(w.clone(), t);
            basis.push(LieWord { word: w.clone(), squared: false });
            let lw = LieWord { word: w.clone(), squared: true };
            if lw.word.len() * 2 <= weight_max {
                let d = LieWord { word: w.clone(), squared: false }.deg(&degs);
                if d.is_odd() {
                    basis.push(lw);
                }
            }
        }
        basis.sort_by(|a, b| (a.weight(), a).cmp(&(b.weight(), b)));
        let mut lie = FreeLie {
            letters,
            weight_max,
            index: BTreeMap::new(),
            tensors: Vec::with_capacity(basis.len()),
            by_weight: BTreeMap::new(),
            basis: Vec::new(),
        };
        for b in basis {
            let t = if b.squared {
                let p = &tensors[&b.word];
                tensor_mul(p, p).scaled(&rat(2))
            } else {
                tensors[&b.word].clone()
            };
            let i = lie.basis.len();
            let block = lie.by_weight.entry(b.weight()).or_default();
            let v = block.to_vec(&t);
            assert!(block.solver.push(&v), "Lyndon basis element {b:?} is dependent");
            block.members.push(i);
            lie.index.insert(b.clone(), i);
            lie.basis.push(b);
            lie.tensors.push(t);
        }
        lie
    }

    pub fn letters(&self) -> &GradedSpace {
        &self.letters
    }

    pub fn weight_max(&self) -> usize {
        self.weight_max
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LieWord] {
        &self.basis
    }

    pub fn index_of(&self, w: &LieWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn letter_index(&self, letter: usize) -> usize {
        self.index[&LieWord::letter(letter)]
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.basis[i].deg(&self.letters.degs())
    }

    pub fn weight(&self, i: usize) -> usize {
        self.basis[i].weight()
    }

    pub fn name(&self, i: usize) -> String {
        self.basis[i].display(&self.letters.names())
    }

    /// Graded Lie algebra with the basis elements as generators.
    pub fn as_space(&self) -> GradedSpace {
        let degs = self.letters.degs();
        let names = self.letters.names();
        GradedSpace::new(self.basis.iter().map(|b| (b.display(&names), b.deg(&degs))))
            .expect("bracketings are distinct")
    }

    /// Rewrite a tensor-algebra primitive of a single weight into the basis.
    fn decompose(&self, t: &Tensor, weight: usize) -> Lin<usize> {
        if t.is_zero() {
            return Lin::zero();
        }
        let block = &self.by_weight[&weight];
        let v = block.lookup(t).expect("bracket lies outside the free Lie algebra");
        let x = block.solver.solve(&v).expect("bracket lies outside the free Lie algebra");
        Lin::from_terms(x.into_iter().map(|(k, c)| (block.members[k], c)))
    }

    /// Bracket of two basis elements, truncated above the maximal weight.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Lin<usize> {
        let w = self.weight(i) + self.weight(j);
        if w > self.weight_max {
            return Lin::zero();
        }
        let t = commutator(&self.tensors[i], self.deg(i), &self.tensors[j], self.deg(j));
        self.decompose(&t, w)
    }

    pub fn bracket(&self, x: &Lin<usize>, y: &Lin<usize>) -> Lin<usize> {
        let mut out = Lin::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c: Rat = a * b;
                out.add_scaled(&self.bracket_basis(*i, *j), &c);
            }
        }
        out
    }

    /// Image of a tensor word of letters under iterated left-normed bracketing
    /// `[a1,[a2,[…,an]]]`.
    pub fn right_normed(&self, letters: &[usize]) -> Lin<usize> {
        let mut acc = Lin::basis(self.letter_index(*letters.last().expect("nonempty")));
        for &l in letters[..letters.len() - 1].iter().rev() {
            acc = self.bracket(&Lin::basis(self.letter_index(l)), &acc);
        }
        acc
    }

    /// Indices `(i, j)` with basis element `k` equal to `[b_i, b_j]`, or `None` for a letter.
    pub fn factors(&self, k: usize) -> Option<(usize, usize)> {
        let b = &self.basis[k];
        if b.squared {
            let p = self.index[&LieWord { word: b.word.clone(), squared: false }];
            return Some((p, p));
        }
        if b.word.len() == 1 {
            return None;
        }
        let (u, v) = standard_factorization(&b.word);
        let i = self.index[&LieWord { word: u.to_vec(), squared: false }];
        let j = self.index[&LieWord { word: v.to_vec(), squared: false }];
        Some((i, j))
    }

    /// Degrees where the weight truncation loses nothing.
    pub fn complete_range(&self) -> DegRange {
        let degs = self.letters.degs();
        let exhausted = match degs.as_slice() {
            [] => true,
            [d] => self.weight_max >= if d.is_odd() { 2 } else { 1 },
            _ => false,
        };
        if exhausted {
            DegRange::ALL
        } else {
            super::tail_free_range(&degs, self.weight_max)
        }
    }

    pub fn format(&self, x: &Lin<usize>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| if c.is_one() { self.name(*i) } else { format!("({c}) {}", self.name(*i)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Lyndon-bracketed basis of the free graded Lie algebra, restricted to the window.
pub fn lyndon_basis(space: &GradedSpace, trunc: &TruncProfile) -> Vec<(LieWord, Deg)> {
    let lie = FreeLie::new(space.clone(), trunc.weight_max);
    let degs = space.degs();
    lie.basis
        .iter()
        .map(|b| (b.clone(), b.deg(&degs)))
        .filter(|(_, d)| trunc.in_window(*d))
        .collect()
}

/// Graded bracket in the Lyndon basis.
pub fn lie_bracket(lie: &FreeLie, x: &Lin<usize>, y: &Lin<usize>) -> Lin<usize> {
    lie.bracket(x, y)
}

/// Dimensions per (weight, degree) predicted by the graded PBW theorem.
pub fn witt_dims(degs: &[Deg], weight_max: usize) -> BTreeMap<(usize, i32), usize> {
    type Series = BTreeMap<(usize, i32), i128>;
    fn mul(a: &Series, b: &Series, wmax: usize) -> Series {
        let mut out = Series::new();
        for (&(wa, da), ca) in a {
            for (&(wb, db), cb) in b {
                if wa + wb <= wmax {
                    *out.entry((wa + wb, da + db)).or_insert(0) += ca * cb;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
    let one: Series = [((0, 0), 1)].into_iter().collect();
    // tensor algebra: geometric series in the letters
    let letters: Series = degs.iter().fold(Series::new(), |mut s, d| {
        *s.entry((1, d.0)).or_insert(0) += 1;
        s
    });
    let mut tensor = one.clone();
    let mut power = one.clone();
    for _ in 0..weight_max {
        power = mul(&power, &letters, weight_max);
        for (k, c) in &power {
            *tensor.entry(*k).or_insert(0) += c;
        }
    }
    let mut dims = BTreeMap::new();
    let mut sym = one.clone();
    for n in 1..=weight_max {
        let mut new_here = Vec::new();
        for (&(w, d), &c) in &tensor {
            if w != n {
                continue;
            }
            let have = sym.get(&(w, d)).copied().unwrap_or(0);
            let m = c - have;
            assert!(m >= 0, "negative PBW dimension");
            if m > 0 {
                dims.insert((w, d), m as usize);
                new_here.push((w, d, m));
            }
        }
        for (w, d, m) in new_here {
            let mut factor = Series::new();
            let mut k = 0usize;
            let mut binom: i128 = 1;
            while w * k <= weight_max {
                if binom != 0 {
                    factor.insert((w * k, d * k as i32), binom);
                }
                // next coefficient of (1+x)^m or (1-x)^{-m}
                binom = if d.rem_euclid(2) == 1 {
                    binom * (m - k as i128) / (k as i128 + 1)
                } else {
                    binom * (m + k as i128) / (k as i128 + 1)
                };
                k += 1;
            }
            sym = mul(&sym, &factor, weight_max);
        }
    }
    dims
}
