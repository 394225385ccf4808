//! Lyndon words, standard factorizations and the Witt dimension formula.

use std::fmt::Write;

use crate::word::Letter;

/// True when `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

/// Split point of the standard factorization `w = u v`, where `v` is the
/// longest proper suffix of `w` that is itself Lyndon. `None` for letters.
pub fn standard_split(w: &[Letter]) -> Option<usize> {
    (1..w.len()).find(|&k| is_lyndon(&w[k..]))
}

/// All Lyndon words of length exactly `m` over letters `1..=r`, in
/// lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(r: usize, m: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    if r == 0 || m == 0 {
        return out;
    }
    let r = r as Letter;
    let mut w: Vec<Letter> = vec![1];
    loop {
        if w.len() == m {
            out.push(w.clone());
        }
        // Extend periodically to length m, then increment the last letter.
        let n = w.len();
        while w.len() < m {
            let c = w[w.len() - n];
            w.push(c);
        }
        while matches!(w.last(), Some(&c) if c == r) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out
}

/// Rank of the degree-`m` part of the free Lie algebra on `r` generators:
/// `(1/m) Σ_{d | m} μ(d) r^{m/d}`.
pub fn witt_rank(r: usize, m: usize) -> u64 {
    assert!(m >= 1, "degree must be positive");
    let r = r as i128;
    let mut total: i128 = 0;
    for d in 1..=m {
        if m.is_multiple_of(d) {
            total += mobius(d) as i128 * r.pow((m / d) as u32);
        }
    }
    (total / m as i128) as u64
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Standard bracketing of a Lyndon word, with `name` rendering letters.
pub fn bracketing(w: &[Letter], name: &dyn Fn(Letter) -> String) -> String {
    let mut s = String::new();
    write_bracketing(&mut s, w, name);
    s
}

fn write_bracketing(s: &mut String, w: &[Letter], name: &dyn Fn(Letter) -> String) {
    match standard_split(w) {
        None => {
            let _ = write!(s, "{}", name(w[0]));
        }
        Some(k) => {
            s.push('[');
            write_bracketing(s, &w[..k], name);
            s.push(',');
            write_bracketing(s, &w[k..], name);
            s.push(']');
        }
    }
}

/// Ordered list of bracketed Lyndon words, the basis of degree `m` over
/// `y1..yr`.
pub fn lyndon_basis(r: usize, m: usize) -> Vec<String> {
    let name = |l: Letter| format!("y{l}");
    lyndon_words(r, m)
        .iter()
        .map(|w| bracketing(w, &name))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: enumerate all words and keep those below every rotation.
    fn brute_lyndon(r: usize, m: usize) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        let total = r.pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let mut w = vec![0 as Letter; m];
            for k in (0..m).rev() {
                w[k] = (c % r) as Letter + 1;
                c /= r;
            }
            let primitive_min = (1..m).all(|k| {
                let rot: Vec<Letter> = w[k..].iter().chain(&w[..k]).copied().collect();
                w < rot
            });
            if primitive_min {
                out.push(w);
            }
        }
        out
    }

    #[test]
    fn basis_examples() {
        assert_eq!(lyndon_basis(2, 1), vec!["y1", "y2"]);
        assert_eq!(lyndon_basis(2, 2), vec!["[y1,y2]"]);
        assert_eq!(lyndon_basis(2, 3), vec!["[y1,[y1,y2]]", "[[y1,y2],y2]"]);
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_rank(2, 2), 1);
        assert_eq!(witt_rank(2, 3), 2);
        assert_eq!(witt_rank(3, 2), 3);
        assert_eq!(witt_rank(1, 1), 1);
        assert_eq!(witt_rank(1, 4), 0);
    }

    #[test]
    fn generation_matches_rotation_definition_and_witt() {
        for r in 1usize..=5 {
            for m in 1..=8 {
                if r.pow(m as u32) > 400_000 {
                    continue;
                }
                let words = lyndon_words(r, m);
                assert_eq!(words, brute_lyndon(r, m), "r={r} m={m}");
                assert_eq!(words.len() as u64, witt_rank(r, m), "r={r} m={m}");
                assert!(words.iter().all(|w| is_lyndon(w)));
            }
        }
        // Counting alone for the largest cases.
        assert_eq!(lyndon_words(5, 8).len() as u64, witt_rank(5, 8));
    }

    #[test]
    fn standard_factorization_parts_are_lyndon() {
        for w in lyndon_words(3, 6) {
            let k = standard_split(&w).unwrap();
            assert!(is_lyndon(&w[..k]) && is_lyndon(&w[k..]));
            assert!(w[..k] < w[k..]);
        }
    }
}
