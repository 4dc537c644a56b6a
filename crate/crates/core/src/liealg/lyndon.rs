//! Lyndon words and the graded basis of the free Lie algebra.
//!
//! Lyndon words over the generator alphabet (ordered by index), with the
//! right standard factorization giving each word its bracketing; expanding
//! the bracketings into the tensor algebra realizes the basis concretely as
//! Lie polynomials.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::ncpoly::{word_degree, GeneratorTable, NcPoly, Word};

/// One basis element of the free Lie algebra: the Lyndon word, its weighted
/// degree, and the expansion of its standard bracketing in the tensor
/// algebra.
#[derive(Debug, Clone)]
pub struct LyndonElement {
    pub word: Word,
    pub degree: u32,
    pub poly: NcPoly,
}

/// True if `w` is strictly smaller than each of its proper suffixes
/// (lexicographically on letter indices).
fn is_lyndon(w: &[u32]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| w[..] < w[i..])
}

/// All Lyndon words over `k` letters with length at most `max_len`, in
/// lexicographic order (Duval's generation).
fn lyndon_words(k: usize, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<u32> = vec![0];
    loop {
        out.push(w.clone());
        // extend periodically to full length, then increment from the back
        let base = w.clone();
        while w.len() < max_len {
            w.push(base[w.len() % base.len()]);
        }
        while let Some(&last) = w.last() {
            if last as usize == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        if w.is_empty() {
            return out;
        }
        *w.last_mut().unwrap() += 1;
    }
}

/// Expansion of the standard bracketing of a Lyndon word as a Lie
/// polynomial, memoized across recursive factorizations.
fn bracketing_poly(
    w: &[u32],
    gens: &Arc<GeneratorTable>,
    memo: &mut HashMap<Vec<u32>, NcPoly>,
) -> NcPoly {
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let poly = if w.len() == 1 {
        NcPoly::generator(gens, w[0] as usize).expect("valid index")
    } else {
        // right standard factorization: the lexicographically least proper
        // suffix is the right factor
        let split = (1..w.len())
            .min_by(|&a, &b| w[a..].cmp(&w[b..]))
            .expect("length >= 2");
        let left = bracketing_poly(&w[..split], gens, memo);
        let right = bracketing_poly(&w[split..], gens, memo);
        NcPoly::commutator(&left, &right).expect("same table")
    };
    memo.insert(w.to_vec(), poly.clone());
    poly
}

/// The graded basis of the free Lie algebra on the given alphabet, up to
/// weighted degree `cap`, sorted by (degree, word).
pub fn lyndon_basis(gens: &Arc<GeneratorTable>, cap: u32) -> Result<Vec<LyndonElement>> {
    let min_weight = (0..gens.len()).map(|g| gens.weight(g)).min().unwrap_or(1);
    let max_len = (cap / min_weight.max(1)) as usize;
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for letters in lyndon_words(gens.len(), max_len) {
        debug_assert!(is_lyndon(&letters));
        let word = Word::new(letters.clone());
        let degree = word_degree(&word, gens)?;
        if degree > cap {
            continue;
        }
        let poly = bracketing_poly(&letters, gens, &mut memo);
        out.push(LyndonElement { word, degree, poly });
    }
    out.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.word.cmp(&b.word)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(names: &[&str]) -> Arc<GeneratorTable> {
        Arc::new(GeneratorTable::unit_weights(names).unwrap())
    }

    /// Necklace-count oracle for the free Lie algebra on k unit-degree
    /// generators: dim_d = (1/d) sum_{e | d} mu(d/e) k^e.
    fn witt(k: u64, d: u64) -> u64 {
        fn mobius(mut n: u64) -> i64 {
            let mut m = 1i64;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    n /= p;
                    if n % p == 0 {
                        return 0;
                    }
                    m = -m;
                }
                p += 1;
            }
            if n > 1 {
                m = -m;
            }
            m
        }
        let mut total = 0i64;
        for e in 1..=d {
            if d % e == 0 {
                total += mobius(d / e) * (k as i64).pow(e as u32);
            }
        }
        (total / d as i64) as u64
    }

    #[test]
    fn two_generator_dimensions() {
        let g = table(&["x", "y"]);
        let basis = lyndon_basis(&g, 8).unwrap();
        for d in 1..=8u32 {
            let count = basis.iter().filter(|e| e.degree == d).count() as u64;
            assert_eq!(count, witt(2, d as u64), "degree {d}");
        }
        // the classical start: 2, 1, 2, 3
        let counts: Vec<usize> =
            (1..=4).map(|d| basis.iter().filter(|e| e.degree == d).count()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3]);
    }

    #[test]
    fn one_generator_is_abelian() {
        let g = table(&["x"]);
        let basis = lyndon_basis(&g, 5).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].degree, 1);
    }

    #[test]
    fn three_generators_degree_two() {
        let g = table(&["x", "y", "z"]);
        let basis = lyndon_basis(&g, 2).unwrap();
        let deg2 = basis.iter().filter(|e| e.degree == 2).count();
        assert_eq!(deg2, 3);
    }

    #[test]
    fn bracketings_expand_correctly() {
        let g = table(&["x", "y"]);
        let basis = lyndon_basis(&g, 3).unwrap();
        // degree 3 over x < y: xxy -> [x,[x,y]], xyy -> [[x,y],y]
        let xxy = basis.iter().find(|e| e.word.letters() == [0, 0, 1]).unwrap();
        let x = NcPoly::generator(&g, 0).unwrap();
        let y = NcPoly::generator(&g, 1).unwrap();
        let xy = NcPoly::commutator(&x, &y).unwrap();
        assert_eq!(xxy.poly, NcPoly::commutator(&x, &xy).unwrap());
        let xyy = basis.iter().find(|e| e.word.letters() == [0, 1, 1]).unwrap();
        assert_eq!(xyy.poly, NcPoly::commutator(&xy, &y).unwrap());
    }

    #[test]
    fn weighted_generators() {
        let g = Arc::new(
            GeneratorTable::new(vec!["x".into(), "z".into()], vec![1, 2], None).unwrap(),
        );
        let basis = lyndon_basis(&g, 3).unwrap();
        // degree 1: x; degree 2: z; degree 3: xz (= [x,z])
        let degs: Vec<u32> = basis.iter().map(|e| e.degree).collect();
        assert_eq!(degs, vec![1, 2, 3]);
    }
}
