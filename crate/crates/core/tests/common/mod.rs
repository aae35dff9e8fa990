//! Independent checks used by the integration tests: axioms recomputed from
//! structure constants with explicit signs, and closed-form Lie dimensions.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use fnspace::graded::{Deg, Poly};
use fnspace::linalg::{rat, Rat};
use fnspace::models::{Model, Object};
use fnspace::structures::{DglaTable, FiniteCdga, FreeCdga, LinftyAlg, Vector};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("models")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    v.sort();
    v
}

pub fn load(file: &str) -> Model {
    let src = std::fs::read_to_string(corpus_dir().join(file)).unwrap();
    Model::parse(&src).unwrap()
}

fn sign(odd: bool) -> Rat {
    if odd {
        rat(-1)
    } else {
        rat(1)
    }
}

fn odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

// ---------------------------------------------------------------------------
// graded polynomials

type Mono = Vec<usize>;
type GPoly = BTreeMap<Mono, Rat>;

fn add(p: &mut GPoly, m: Mono, c: Rat) {
    let e = p.entry(m).or_insert_with(|| rat(0));
    *e += c;
}

fn clean(p: GPoly) -> GPoly {
    p.into_iter().filter(|(_, c)| *c != rat(0)).collect()
}

/// Sort a word of letters, tracking the Koszul sign of every transposition.
fn normal(mut w: Vec<usize>, degs: &[i32]) -> Option<(Mono, Rat)> {
    let mut s = rat(1);
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            if odd(degs[w[j - 1]]) && odd(degs[w[j]]) {
                s = -s;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    for pair in w.windows(2) {
        if pair[0] == pair[1] && odd(degs[pair[0]]) {
            return None;
        }
    }
    Some((w, s))
}

fn pmul(a: &GPoly, b: &GPoly, degs: &[i32]) -> GPoly {
    let mut out = GPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let w: Vec<usize> = ma.iter().chain(mb.iter()).copied().collect();
            if let Some((m, s)) = normal(w, degs) {
                add(&mut out, m, ca * cb * s);
            }
        }
    }
    clean(out)
}

fn mono_deg(m: &Mono, degs: &[i32]) -> i32 {
    m.iter().map(|&i| degs[i]).sum()
}

/// Apply the odd derivation given on generators to a polynomial.
fn derive(p: &GPoly, images: &[GPoly], degs: &[i32]) -> GPoly {
    let mut out = GPoly::new();
    for (m, c) in p {
        let mut before = 0;
        for (i, &x) in m.iter().enumerate() {
            let left: GPoly = [(m[..i].to_vec(), rat(1))].into_iter().collect();
            let right: GPoly = [(m[i + 1..].to_vec(), rat(1))].into_iter().collect();
            let term = pmul(&pmul(&left, &images[x], degs), &right, degs);
            let s = sign(odd(before));
            for (mm, cc) in term {
                add(&mut out, mm, cc * c * &s);
            }
            before += degs[x];
        }
    }
    clean(out)
}

fn from_poly(p: &Poly) -> GPoly {
    p.iter().map(|(w, c)| (w.letters().to_vec(), c.clone())).collect()
}

/// `Q² = 0` on generators for a degree −1 derivation of a free graded algebra.
pub fn square_zero(q: &[Poly], degs: &[Deg]) -> Result<(), String> {
    let degs: Vec<i32> = degs.iter().map(|d| d.0).collect();
    let images: Vec<GPoly> = q.iter().map(from_poly).collect();
    for (k, img) in images.iter().enumerate() {
        for (m, _) in img {
            if mono_deg(m, &degs) != degs[k] - 1 {
                return Err(format!("Q(gen {k}) is not of degree {}", degs[k] - 1));
            }
            if m.is_empty() {
                return Err(format!("Q(gen {k}) has a constant term"));
            }
        }
        let sq = derive(img, &images, &degs);
        if !sq.is_empty() {
            return Err(format!("Q² of generator {k} is {sq:?}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// dgla tables

fn br(t: &DglaTable, x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&t.bracket_of(*a, *b), &(ca * cb));
        }
    }
    out
}

fn dv(t: &DglaTable, x: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (a, c) in x.iter() {
        out.add_scaled(&t.diff[*a], c);
    }
    out
}

/// Degrees, antisymmetry, `d² = 0`, Leibniz and graded Jacobi on basis elements.
pub fn dgla_axioms(t: &DglaTable) -> Result<(), String> {
    let n = t.space.len();
    let deg = |i: usize| t.space.deg(i).0;
    let e = Vector::basis;
    for a in 0..n {
        if t.diff[a].keys().any(|&k| deg(k) != deg(a) - 1) {
            return Err(format!("d({a}) has the wrong degree"));
        }
        if !dv(t, &t.diff[a]).is_zero() {
            return Err(format!("d² ≠ 0 on {a}"));
        }
        for b in 0..n {
            let ab = t.bracket_of(a, b);
            if ab.keys().any(|&k| deg(k) != deg(a) + deg(b)) {
                return Err(format!("[{a},{b}] has the wrong degree"));
            }
            let mut anti = t.bracket_of(b, a).scaled(&sign(odd(deg(a)) && odd(deg(b))));
            anti.add_assign(&ab);
            if !anti.is_zero() {
                return Err(format!("antisymmetry fails on ({a},{b})"));
            }
            let mut lb = dv(t, &ab);
            lb.sub_assign(&br(t, &t.diff[a], &e(b)));
            lb.sub_assign(&br(t, &e(a), &t.diff[b]).scaled(&sign(odd(deg(a)))));
            if !lb.is_zero() {
                return Err(format!("Leibniz fails on ({a},{b})"));
            }
            for c in 0..n {
                let mut j = br(t, &e(a), &br(t, &e(b), &e(c))).scaled(&sign(odd(deg(a) * deg(c))));
                j.add_assign(&br(t, &e(b), &br(t, &e(c), &e(a))).scaled(&sign(odd(deg(b) * deg(a)))));
                j.add_assign(&br(t, &e(c), &br(t, &e(a), &e(b))).scaled(&sign(odd(deg(c) * deg(b)))));
                if !j.is_zero() {
                    return Err(format!("Jacobi fails on ({a},{b},{c})"));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// finite cdgas

/// Degrees, graded commutativity, associativity, unit, `d² = 0` and Leibniz.
pub fn cdga_axioms(a: &FiniteCdga) -> Result<(), String> {
    let n = a.dim();
    let deg = |i: usize| a.deg(i).0;
    let e = Vector::basis;
    let m = |x: &Vector, y: &Vector| a.mul(x, y);
    let d = |x: &Vector| a.d(x);
    for i in 0..n {
        if d(&e(i)).keys().any(|&k| deg(k) != deg(i) - 1) {
            return Err(format!("d({i}) has the wrong degree"));
        }
        if !d(&d(&e(i))).is_zero() {
            return Err(format!("d² ≠ 0 on {i}"));
        }
        if let Some(u) = a.unit() {
            if m(&e(u), &e(i)) != e(i) || m(&e(i), &e(u)) != e(i) {
                return Err("unit law fails".into());
            }
        }
        for j in 0..n {
            let ij = m(&e(i), &e(j));
            if ij.keys().any(|&k| deg(k) != deg(i) + deg(j)) {
                return Err(format!("{i}·{j} has the wrong degree"));
            }
            if ij != m(&e(j), &e(i)).scaled(&sign(odd(deg(i)) && odd(deg(j)))) {
                return Err(format!("commutativity fails on ({i},{j})"));
            }
            let mut l = d(&ij);
            l.sub_assign(&m(&d(&e(i)), &e(j)));
            l.sub_assign(&m(&e(i), &d(&e(j))).scaled(&sign(odd(deg(i)))));
            if !l.is_zero() {
                return Err(format!("Leibniz fails on ({i},{j})"));
            }
            for k in 0..n {
                if m(&ij, &e(k)) != m(&e(i), &m(&e(j), &e(k))) {
                    return Err(format!("associativity fails on ({i},{j},{k})"));
                }
            }
        }
    }
    Ok(())
}

pub fn free_cdga_axioms(c: &FreeCdga) -> Result<(), String> {
    square_zero(&c.d, &c.degs())
}

/// Dispatch on the object kind; dglas are checked through their tables.
pub fn axioms(o: &Object) -> Result<(), String> {
    match o {
        Object::Linfty(l) => match l.to_dgla() {
            Some(t) => {
                dgla_axioms(&t)?;
                square_zero(l.q(), &l.sdegs())
            }
            None => square_zero(l.q(), &l.sdegs()),
        },
        Object::FreeCdga(c) => free_cdga_axioms(c),
        Object::FiniteCdga(a) => cdga_axioms(a),
    }
}

pub fn linfty_axioms(l: &LinftyAlg) -> Result<(), String> {
    axioms(&Object::Linfty(l.clone()))
}

// ---------------------------------------------------------------------------
// free Lie dimensions

fn mobius(n: usize) -> i64 {
    let (mut n, mut k, mut primes) = (n, 2, 0);
    while k * k <= n {
        if n % k == 0 {
            n /= k;
            if n % k == 0 {
                return 0;
            }
            primes += 1;
        }
        k += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Dimension of the weight-`n` part of the free Lie algebra on `k` even letters.
pub fn witt_even(k: usize, n: usize) -> usize {
    let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) * (k as i64).pow((n / d) as u32)).sum();
    (s / n as i64) as usize
}

/// Dimension of the weight-`n` part of the free Lie superalgebra on `k` odd letters.
pub fn witt_odd(k: usize, n: usize) -> usize {
    let s: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| {
            let sg = if (n + n / d) % 2 == 0 { 1 } else { -1 };
            mobius(d) * sg * (k as i64).pow((n / d) as u32)
        })
        .sum();
    (s / n as i64) as usize
}

/// Rewrite one term's sign in an expression: `"a - 2 b"` with index 1 becomes `"a + 2 b"`.
pub fn flip_term(expr: &str, index: usize) -> Option<String> {
    let terms = fnspace::models::parse_terms(expr, "mutation").ok()?;
    if index >= terms.len() {
        return None;
    }
    let mut out = String::new();
    for (i, (c, factors)) in terms.iter().enumerate() {
        let c = if i == index { -c.clone() } else { c.clone() };
        let neg = c < rat(0);
        let abs = if neg { -c } else { c };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mono: Vec<String> =
            factors.iter().map(|(n, k)| if *k == 1 { n.clone() } else { format!("{n}^{k}") }).collect();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs == rat(1) {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&format!("{abs} {}", mono.join("*")));
        }
    }
    Some(out)
}

/// Every declaration obtained by flipping the sign of one term of one structure expression.
pub fn single_sign_mutations(o: &fnspace::models::ObjectSpec) -> Vec<(String, fnspace::models::ObjectSpec)> {
    let mut out = Vec::new();
    let fields: [(&str, fn(&mut fnspace::models::ObjectSpec) -> &mut BTreeMap<String, String>); 4] = [
        ("differential", |o| &mut o.differential),
        ("bracket", |o| &mut o.bracket),
        ("product", |o| &mut o.product),
        ("q", |o| &mut o.q),
    ];
    for (field, get) in fields {
        let keys: Vec<(String, String)> = get(&mut o.clone()).iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for (key, expr) in keys {
            let mut i = 0;
            while let Some(flipped) = flip_term(&expr, i) {
                let mut m = o.clone();
                get(&mut m).insert(key.clone(), flipped);
                out.push((format!("{}.{field}.{key}#{i}", o.name), m));
                i += 1;
            }
        }
    }
    out
}
