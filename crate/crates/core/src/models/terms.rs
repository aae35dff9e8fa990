use crate::graded::{sym_normalize_names, GradedSpace, Poly};
use crate::linalg::{parse_rat, rat, Rat};
use crate::structures::Vector;
use crate::{Error, Result};

/// A parsed monomial term: coefficient and factors with exponents.
pub type Term = (Rat, Vec<(String, usize)>);

fn split_terms(src: &str, location: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut cur = String::new();
    let mut leading = true;
    for ch in src.chars() {
        if ch == '+' || ch == '-' {
            let t = cur.trim();
            if !t.is_empty() {
                out.push((neg, t.to_string()));
            } else if !leading {
                return Err(Error::parse(location, format!("repeated sign in `{src}`")));
            }
            neg = ch == '-';
            leading = false;
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

fn parse_factor(f: &str, location: &str) -> Result<(String, usize)> {
    let f = f.trim();
    let (name, pow) = match f.split_once('^') {
        Some((n, p)) => {
            let p: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::parse(location, format!("bad exponent in `{f}`")))?;
            (n.trim(), p)
        }
        None => (f, 1),
    };
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::parse(location, format!("bad factor `{f}`")));
    }
    Ok((name.to_string(), pow))
}

/// Parse `"-1/2 w + 3 x*y^2 - z"` into terms. `"0"` is the empty sum.
pub fn parse_terms(src: &str, location: &str) -> Result<Vec<Term>> {
    let src = src.trim();
    if src.is_empty() {
        return Err(Error::parse(location, "empty expression"));
    }
    let mut out = Vec::new();
    for (neg, t) in split_terms(src, location)? {
        if t.is_empty() {
            return Err(Error::parse(location, format!("dangling sign in `{src}`")));
        }
        let (coef, mono) = if let Some(c) = parse_rat(&t) {
            (c, "")
        } else if let Some((head, rest)) = t.split_once(char::is_whitespace) {
            match parse_rat(head) {
                Some(c) => (c, rest.trim()),
                None => return Err(Error::parse(location, format!("bad term `{t}`"))),
            }
        } else if let Some((head, rest)) = t.split_once('*').filter(|(h, _)| parse_rat(h).is_some()) {
            (parse_rat(head).expect("checked"), rest.trim())
        } else {
            (rat(1), t.as_str())
        };
        let coef = if neg { -coef } else { coef };
        let factors = if mono.is_empty() {
            Vec::new()
        } else {
            mono.split('*').map(|f| parse_factor(f, location)).collect::<Result<Vec<_>>>()?
        };
        if factors.is_empty() && coef == rat(0) && out.is_empty() {
            continue;
        }
        out.push((coef, factors));
    }
    Ok(out)
}

fn located(e: Error, location: &str) -> Error {
    match e {
        Error::UnknownGenerator(n) => Error::parse(location, format!("unknown name `{n}`")),
        other => other,
    }
}

/// A polynomial in the generators of `space`; constants are rejected unless `allow_constant`.
pub fn parse_poly(src: &str, space: &GradedSpace, location: &str, allow_constant: bool) -> Result<Poly> {
    let mut p = Poly::zero();
    for (c, factors) in parse_terms(src, location)? {
        let mut letters: Vec<&str> = Vec::new();
        for (n, k) in &factors {
            for _ in 0..*k {
                letters.push(n);
            }
        }
        if letters.is_empty() && !allow_constant {
            if c == rat(0) {
                continue;
            }
            return Err(Error::parse(location, "constant term"));
        }
        if let Some((w, s)) = sym_normalize_names(&letters, space).map_err(|e| located(e, location))? {
            p.add_term(w, c * rat(s as i64));
        }
    }
    Ok(p)
}

/// A linear combination of basis elements of `space`. A bare scalar means a multiple of `1` when present.
pub fn parse_linear(src: &str, space: &GradedSpace, location: &str) -> Result<Vector> {
    let mut v = Vector::zero();
    for (c, factors) in parse_terms(src, location)? {
        match factors.as_slice() {
            [] if c == rat(0) => {}
            [] if space.index("1").is_ok() => v.add_term(space.index("1").expect("checked"), c),
            [(n, 1)] => v.add_term(space.index(n).map_err(|e| located(e, location))?, c),
            _ => return Err(Error::parse(location, format!("expected a linear combination, got `{src}`"))),
        }
    }
    Ok(v)
}

/// `"name:deg"`.
pub fn parse_generator(src: &str, location: &str) -> Result<(String, i32)> {
    let Some((name, deg)) = src.split_once(':') else {
        return Err(Error::parse(location, format!("generator `{src}` has no degree (expected name:degree)")));
    };
    let name = name.trim();
    if name.is_empty() || name.contains(['+', '-', '*', '^', ',', ' ']) {
        return Err(Error::parse(location, format!("bad generator name `{name}`")));
    }
    let deg: i32 = deg.trim().parse().map_err(|_| Error::parse(location, format!("bad degree `{deg}`")))?;
    Ok((name.to_string(), deg))
}
