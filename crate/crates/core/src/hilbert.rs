//! Hilbert functions and series.
//!
//! Normal words of a certified rewrite system are counted per degree with a
//! finite automaton on the obstruction words (no word listing), closed-form
//! series are expanded by exact long division, and product forms
//! `prod 1/(1-t^{n_i})` are recognized by greedy factor peeling. Everything
//! is integer-exact; a [`HilbertFunction`] carries the degree cap it is
//! certified to.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::bettienum::BettiType;
use crate::diamond::RewriteSystem;
use crate::error::{Error, Result};
use crate::ncpoly::{GeneratorTable, Word};

/// Dense integer polynomial in one variable; index = degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^d`
    pub fn term(d: u32, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[d as usize] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() as u32 - 1)
        }
    }

    pub fn coeff(&self, d: u32) -> BigInt {
        self.coeffs.get(d as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by `1 - t^n`; `None` when the division leaves a
    /// remainder.
    pub fn div_exact_one_minus_tn(&self, n: u32) -> Option<IntPoly> {
        // q = p / (1 - t^n)  <=>  q_j = p_j + q_{j-n}, with the tail of q
        // vanishing beyond deg p - n.
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = n as usize;
        let deg = self.coeffs.len() - 1;
        if deg < n {
            return None;
        }
        let mut q = vec![BigInt::zero(); deg - n + 1];
        for j in 0..=deg {
            let mut v = self.coeffs[j].clone();
            if j >= n {
                v += q[j - n].clone();
            }
            if j + n <= deg {
                q[j] = v;
            } else if !v.is_zero() {
                return None;
            }
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// `prod_i (1 - t^{n_i})`
    pub fn product_form(factors: &[u32]) -> IntPoly {
        let mut p = IntPoly::one();
        for &n in factors {
            p = p.mul(&IntPoly::one().sub(&IntPoly::term(n, 1)));
        }
        p
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if d == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if d == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{d}")?;
                }
            }
        }
        Ok(())
    }
}

/// Sparse integer polynomial in two variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly2 {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2::default()
    }

    pub fn one() -> Self {
        IntPoly2::term(0, 0, 1)
    }

    pub fn term(a: u32, b: u32, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert((a, b), BigInt::from(c));
        }
        IntPoly2 { coeffs }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, key: (u32, u32), v: BigInt) {
        if v.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn sub(&self, other: &IntPoly2) -> IntPoly2 {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.insert(k, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &IntPoly2) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                out.insert((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// `prod_i (1 - t^{a_i} u^{b_i})`
    pub fn product_form(factors: &[(u32, u32)]) -> IntPoly2 {
        let mut p = IntPoly2::one();
        for &(a, b) in factors {
            p = p.mul(&IntPoly2::one().sub(&IntPoly2::term(a, b, 1)));
        }
        p
    }
}

/// Truncated coefficient table of a graded dimension count (or any integer
/// power series); `cap` is the last certified degree. Genuine Hilbert
/// functions of connected algebras start at 1 and stay non-negative, which
/// [`HilbertFunction::is_connected_nonnegative`] checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    coeffs: Vec<BigInt>,
    cap: u32,
}

impl HilbertFunction {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        let cap = coeffs.len() as u32 - 1;
        HilbertFunction { coeffs, cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn coeff(&self, d: u32) -> BigInt {
        self.coeffs.get(d as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_connected_nonnegative(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one())
            && self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Bigraded counts up to a total-degree cap; missing entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedHilbert {
    coeffs: BTreeMap<(u32, u32), BigInt>,
    cap: u32,
}

impl BigradedHilbert {
    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    /// Collapses to the total-degree table.
    pub fn totalize(&self) -> HilbertFunction {
        let mut coeffs = vec![BigInt::zero(); self.cap as usize + 1];
        for (&(a, b), c) in &self.coeffs {
            coeffs[(a + b) as usize] += c;
        }
        HilbertFunction::from_coeffs(coeffs)
    }
}

/// Quotient of integer polynomials, expandable as a power series because the
/// denominator has constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    num: IntPoly,
    den: IntPoly,
}

impl RationalSeries {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if !den.coeff(0).is_one() {
            return Err(Error::Input(
                "series denominator must have constant term 1".into(),
            ));
        }
        Ok(RationalSeries { num, den })
    }

    /// `1 / prod_i (1 - t^{n_i})`
    pub fn inverse_product_form(factors: &[u32]) -> Self {
        RationalSeries::new(IntPoly::one(), IntPoly::product_form(factors)).unwrap()
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Truncated expansion by exact long division.
    pub fn expand(&self, cap: u32) -> HilbertFunction {
        let mut h = vec![BigInt::zero(); cap as usize + 1];
        for d in 0..=cap as usize {
            let mut v = self.num.coeff(d as u32);
            for k in 1..=d {
                let dk = self.den.coeff(k as u32);
                if !dk.is_zero() {
                    v -= dk * &h[d - k];
                }
            }
            h[d] = v; // den constant term is 1
        }
        HilbertFunction::from_coeffs(h)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Two-variable analogue of [`RationalSeries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSeries {
    num: IntPoly2,
    den: IntPoly2,
}

impl BigradedSeries {
    pub fn new(num: IntPoly2, den: IntPoly2) -> Result<Self> {
        if !den.coeff(0, 0).is_one() {
            return Err(Error::Input(
                "series denominator must have constant term 1".into(),
            ));
        }
        Ok(BigradedSeries { num, den })
    }

    pub fn inverse_product_form(factors: &[(u32, u32)]) -> Self {
        BigradedSeries::new(IntPoly2::one(), IntPoly2::product_form(factors)).unwrap()
    }

    /// Expansion to total degree `cap`.
    pub fn expand(&self, cap: u32) -> BigradedHilbert {
        let mut h: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for total in 0..=cap {
            for a in 0..=total {
                let b = total - a;
                let mut v = self.num.coeff(a, b);
                for (&(ka, kb), dc) in self.den.terms() {
                    if (ka, kb) == (0, 0) || ka > a || kb > b {
                        continue;
                    }
                    if let Some(prev) = h.get(&(a - ka, b - kb)) {
                        v -= dc * prev;
                    }
                }
                if !v.is_zero() {
                    h.insert((a, b), v);
                }
            }
        }
        BigradedHilbert { coeffs: h, cap }
    }
}

/// Deterministic automaton on the obstruction words (the rule leads): a
/// state per proper prefix that avoids every obstruction, with an implicit
/// dead state. Built with the Aho-Corasick goto/failure construction.
pub struct ObstructionAutomaton {
    /// next[state][letter]; `usize::MAX` is the dead state.
    next: Vec<Vec<usize>>,
}

pub const DEAD: usize = usize::MAX;

impl ObstructionAutomaton {
    pub fn build(leads: &[Word], n_letters: usize) -> Self {
        // Trie over the leads.
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; n_letters]];
        let mut terminal = vec![false];
        for lead in leads {
            let mut s = 0;
            for &g in lead.letters() {
                let g = g as usize;
                s = match children[s][g] {
                    Some(t) => t,
                    None => {
                        children.push(vec![None; n_letters]);
                        terminal.push(false);
                        let t = children.len() - 1;
                        children[s][g] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }
        // Failure links by BFS; a state whose failure chain hits a terminal
        // is itself terminal (its path contains an obstruction as suffix).
        let n = children.len();
        let mut fail = vec![0usize; n];
        let mut queue = std::collections::VecDeque::new();
        for g in 0..n_letters {
            if let Some(t) = children[0][g] {
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            if terminal[fail[s]] {
                terminal[s] = true;
            }
            for g in 0..n_letters {
                if let Some(t) = children[s][g] {
                    // walk the failure chain of s for letter g
                    let mut f = fail[s];
                    loop {
                        if let Some(u) = children[f][g] {
                            if u != t {
                                fail[t] = u;
                            }
                            break;
                        }
                        if f == 0 {
                            fail[t] = 0;
                            break;
                        }
                        f = fail[f];
                    }
                    queue.push_back(t);
                }
            }
        }
        // Full transition table; entering a terminal state is death.
        let mut next = vec![vec![DEAD; n_letters]; n];
        for s in 0..n {
            if terminal[s] {
                continue;
            }
            for g in 0..n_letters {
                let mut f = s;
                let t = loop {
                    if let Some(u) = children[f][g] {
                        break u;
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = fail[f];
                };
                next[s][g] = if terminal[t] { DEAD } else { t };
            }
        }
        ObstructionAutomaton { next }
    }

    pub fn states(&self) -> usize {
        self.next.len()
    }

    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.next[state][letter]
    }
}

/// Counts normal words per degree by dynamic programming over the
/// obstruction automaton; certified to `cap`.
pub fn normal_word_count(s: &RewriteSystem, cap: u32) -> Result<HilbertFunction> {
    if cap > s.degree_cap() {
        return Err(Error::CapExceeded { needed: cap, certified: s.degree_cap() });
    }
    let gens = s.gens();
    let aut = ObstructionAutomaton::build(&s.leads(), gens.len());
    let n = aut.states();
    // counts[d][state]
    let mut counts: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; cap as usize + 1];
    counts[0][0] = BigInt::one();
    let mut table = vec![BigInt::zero(); cap as usize + 1];
    for d in 0..=cap as usize {
        let mut total = BigInt::zero();
        for state in 0..n {
            total += &counts[d][state];
        }
        table[d] = total;
        for state in 0..n {
            if counts[d][state].is_zero() {
                continue;
            }
            for g in 0..gens.len() {
                let d2 = d + gens.weight(g) as usize;
                if d2 > cap as usize {
                    continue;
                }
                let t = aut.step(state, g);
                if t != DEAD {
                    let v = counts[d][state].clone();
                    counts[d2][t] += v;
                }
            }
        }
    }
    Ok(HilbertFunction::from_coeffs(table))
}

/// Bigraded variant of [`normal_word_count`]; requires a bigraded table.
pub fn normal_word_count_bigraded(s: &RewriteSystem, cap: u32) -> Result<BigradedHilbert> {
    if cap > s.degree_cap() {
        return Err(Error::CapExceeded { needed: cap, certified: s.degree_cap() });
    }
    let gens = s.gens();
    if !gens.is_bigraded() {
        return Err(Error::Input("generator table carries no bidegrees".into()));
    }
    let aut = ObstructionAutomaton::build(&s.leads(), gens.len());
    let n = aut.states();
    let mut counts: BTreeMap<(u32, u32), Vec<BigInt>> = BTreeMap::new();
    counts.insert((0, 0), {
        let mut v = vec![BigInt::zero(); n];
        v[0] = BigInt::one();
        v
    });
    let mut table: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for total in 0..=cap {
        for a in 0..=total {
            let b = total - a;
            let Some(row) = counts.get(&(a, b)).cloned() else { continue };
            let sum: BigInt = row.iter().sum();
            if !sum.is_zero() {
                table.insert((a, b), sum);
            }
            for g in 0..gens.len() {
                let (wa, wb) = gens.bidegree(g).unwrap();
                if a + wa + b + wb > cap {
                    continue;
                }
                for state in 0..n {
                    if row[state].is_zero() {
                        continue;
                    }
                    let t = aut.step(state, g);
                    if t != DEAD {
                        let slot = counts
                            .entry((a + wa, b + wb))
                            .or_insert_with(|| vec![BigInt::zero(); n]);
                        slot[t] += &row[state];
                    }
                }
            }
        }
    }
    Ok(BigradedHilbert { coeffs: table, cap })
}

/// All normal words of the given degree, in lexicographic order of their
/// letters. Used to give each degree slice of a quotient a concrete basis.
pub fn normal_words(s: &RewriteSystem, degree: u32) -> Result<Vec<Word>> {
    if degree > s.degree_cap() {
        return Err(Error::CapExceeded { needed: degree, certified: s.degree_cap() });
    }
    let gens = s.gens();
    let aut = ObstructionAutomaton::build(&s.leads(), gens.len());
    let mut out = Vec::new();
    let mut letters: Vec<u32> = Vec::new();
    fn dfs(
        aut: &ObstructionAutomaton,
        gens: &GeneratorTable,
        state: usize,
        remaining: u32,
        letters: &mut Vec<u32>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word::new(letters.clone()));
            return;
        }
        for g in 0..gens.len() {
            let w = gens.weight(g);
            if w > remaining {
                continue;
            }
            let t = aut.step(state, g);
            if t == DEAD {
                continue;
            }
            letters.push(g as u32);
            dfs(aut, gens, t, remaining - w, letters, out);
            letters.pop();
        }
    }
    dfs(&aut, gens, 0, degree, &mut letters, &mut out);
    Ok(out)
}

/// Tries to write `h` as `prod_i 1/(1 - t^{n_i})` within the cap.
///
/// The inverse series is peeled greedily: its lowest positive-degree term
/// `-m * t^n` forces exactly m factors `(1 - t^n)`. Returns the sorted factor
/// degrees on success; `None` when a positive coefficient shows up, a forced
/// factor exceeds cap/2 (only that far is the identity certified), or the
/// peeled series fails to reach 1.
pub fn recognize_product_form(h: &HilbertFunction) -> Option<Vec<u32>> {
    if !h.coeff(0).is_one() {
        return None;
    }
    let cap = h.cap() as usize;
    // f = 1/h truncated
    let mut f = vec![BigInt::zero(); cap + 1];
    f[0] = BigInt::one();
    for d in 1..=cap {
        let mut v = BigInt::zero();
        for k in 1..=d {
            v -= h.coeff(k as u32) * &f[d - k];
        }
        f[d] = v;
    }
    let mut factors = Vec::new();
    loop {
        let lowest = (1..=cap).find(|&d| !f[d].is_zero());
        let Some(n) = lowest else {
            factors.sort_unstable();
            return Some(factors);
        };
        if n > cap / 2 {
            return None;
        }
        if f[n].is_positive() {
            return None;
        }
        // multiplicity of the forced factor; anything astronomical is noise
        let m: u64 = (-f[n].clone()).try_into().ok().filter(|&m| m <= 10_000)?;
        for _ in 0..m {
            // divide by (1 - t^n): g_j = f_j + g_{j-n}
            for j in n..=cap {
                let add = f[j - n].clone();
                f[j] += add;
            }
            factors.push(n as u32);
        }
    }
}

/// Multiplicity of the root t = 1, by repeated exact division by (1 - t).
pub fn gk_pole_order(q: &IntPoly) -> u32 {
    let mut q = q.clone();
    let mut m = 0;
    while !q.is_zero() && q.eval_at_one().is_zero() {
        q = q.div_exact_one_minus_tn(1).expect("q(1) = 0 makes 1-t an exact divisor");
        m += 1;
    }
    m
}

/// Alternating sum `sum_p (-1)^p sum_a t^a` over the shift lists of a free
/// complex; the inverse of the resolved module's Hilbert series when the
/// complex is a resolution.
pub fn euler_polynomial(shifts: &[Vec<u32>]) -> IntPoly {
    let mut q = IntPoly::zero();
    for (p, step) in shifts.iter().enumerate() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        for &a in step {
            q = q.add(&IntPoly::term(a, sign));
        }
    }
    q
}

/// `1/q(t)` for the length-five resolution shape of the given numerical
/// type: q = 1 - 2t + sum t^{a_i} - sum t^{l-a_i} + 2t^{l-1} - t^l.
pub fn series_from_resolution_type(b: &BettiType) -> RationalSeries {
    RationalSeries::new(IntPoly::one(), euler_polynomial(&b.resolution_shifts())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{parse_poly, MonomialOrder};
    use crate::testsupport::{extremal_system, extremal_system_bigraded};
    use proptest::prelude::*;

    /// Independent series oracle: multiply out the truncated geometric
    /// series for each factor by schoolbook convolution.
    fn product_expansion_oracle(factors: &[u32], cap: usize) -> Vec<BigInt> {
        let mut h = vec![BigInt::zero(); cap + 1];
        h[0] = BigInt::one();
        for &n in factors {
            let mut next = vec![BigInt::zero(); cap + 1];
            for d in 0..=cap {
                let mut v = BigInt::zero();
                let mut k = 0;
                while k <= d {
                    v += &h[d - k];
                    k += n as usize;
                }
                next[d] = v;
            }
            h = next;
        }
        h
    }

    #[test]
    fn expand_binomial() {
        let s = RationalSeries::inverse_product_form(&[1, 1]);
        let h = s.expand(4);
        assert_eq!(
            h.coeffs().to_vec(),
            [1, 2, 3, 4, 5].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn expand_extremal_closed_form() {
        let s = RationalSeries::inverse_product_form(&[1, 1, 2, 3, 5]);
        let h = s.expand(5);
        assert_eq!(h.coeffs().to_vec(), [1, 2, 4, 7, 11, 17].map(BigInt::from).to_vec());
        // against the independent convolution oracle, further out
        let h15 = s.expand(15);
        assert_eq!(h15.coeffs().to_vec(), product_expansion_oracle(&[1, 1, 2, 3, 5], 15));
    }

    #[test]
    fn normal_word_counts_extremal() {
        let s = extremal_system(15);
        let h = normal_word_count(&s, 15).unwrap();
        let closed = RationalSeries::inverse_product_form(&[1, 1, 2, 3, 5]).expand(15);
        assert_eq!(h, closed);
        assert!(h.is_connected_nonnegative());

        // the standard-form oracle: tuples with n_y + 3 n_B + 5 n_C + 2 n_A + n_x = d
        for d in 0..=15u32 {
            let mut count = 0u64;
            for ny in 0..=d {
                for nb in 0..=(d / 3) {
                    for nc in 0..=(d / 5) {
                        for na in 0..=(d / 2) {
                            let partial = ny + 3 * nb + 5 * nc + 2 * na;
                            if partial <= d {
                                count += 1; // n_x fixed by the remainder
                            }
                        }
                    }
                }
            }
            assert_eq!(h.coeff(d), BigInt::from(count), "degree {d}");
        }
    }

    #[test]
    fn normal_word_count_respects_cap() {
        let s = extremal_system(10);
        assert!(normal_word_count(&s, 11).is_err());
    }

    #[test]
    fn commutative_plane_counts() {
        let g = std::sync::Arc::new(
            crate::ncpoly::GeneratorTable::unit_weights(&["x", "y"]).unwrap(),
        );
        let order = MonomialOrder::deglex(&g);
        let rel = parse_poly("x*y - y*x", &g).unwrap();
        let s = RewriteSystem::complete(&[rel], &order, 12).unwrap();
        let h = normal_word_count(&s, 12).unwrap();
        for d in 0..=12u32 {
            assert_eq!(h.coeff(d), BigInt::from(d + 1));
        }
    }

    #[test]
    fn bigraded_counts_match_closed_form() {
        let s = extremal_system_bigraded(12);
        let counts = normal_word_count_bigraded(&s, 12).unwrap();
        let closed = BigradedSeries::inverse_product_form(&[
            (1, 0),
            (0, 1),
            (1, 1),
            (1, 2),
            (2, 3),
        ])
        .expand(12);
        assert_eq!(counts, closed);
    }

    #[test]
    fn normal_words_enumeration() {
        let s = extremal_system(8);
        let h = normal_word_count(&s, 8).unwrap();
        for d in 0..=8u32 {
            let words = normal_words(&s, d).unwrap();
            assert_eq!(BigInt::from(words.len()), h.coeff(d), "degree {d}");
            // lexicographic and duplicate-free
            for pair in words.windows(2) {
                assert!(pair[0].letters() < pair[1].letters());
            }
        }
    }

    #[test]
    fn recognizes_extremal_product_form() {
        let h = RationalSeries::inverse_product_form(&[1, 1, 2, 3, 5]).expand(30);
        assert_eq!(recognize_product_form(&h), Some(vec![1, 1, 2, 3, 5]));
    }

    #[test]
    fn recognizes_plane_and_rejects_free() {
        let h = RationalSeries::inverse_product_form(&[1, 1]).expand(20);
        assert_eq!(recognize_product_form(&h), Some(vec![1, 1]));
        // free algebra on two generators: 1, 2, 4, 8, ...
        let free = RationalSeries::new(
            IntPoly::one(),
            IntPoly::from_i64(&[1, -2]),
        )
        .unwrap()
        .expand(20);
        assert_eq!(recognize_product_form(&free), None);
    }

    #[test]
    fn pole_orders() {
        assert_eq!(gk_pole_order(&IntPoly::product_form(&[1, 1])), 2);
        assert_eq!(gk_pole_order(&IntPoly::from_i64(&[1, -2])), 0);
        let b = BettiType::new(vec![3, 4, 7], 12).unwrap();
        assert_eq!(gk_pole_order(series_from_resolution_type(&b).den()), 5);
    }

    #[test]
    fn resolution_type_series() {
        let b = BettiType::new(vec![4, 4, 4], 10).unwrap();
        let q = series_from_resolution_type(&b).den().clone();
        let expected = IntPoly::from_i64(&[1, -2, 0, 0, 3, 0, -3, 0, 0, 2, -1]);
        assert_eq!(q, expected);

        // (3,4,7) at l = 12 reproduces the extremal algebra's series
        let b = BettiType::new(vec![3, 4, 7], 12).unwrap();
        let via_type = series_from_resolution_type(&b).expand(20);
        let closed = RationalSeries::inverse_product_form(&[1, 1, 2, 3, 5]).expand(20);
        assert_eq!(via_type, closed);

        // the two-generator, global dimension 2 analogue
        let q2 = euler_polynomial(&[vec![0], vec![1, 1], vec![2]]);
        assert_eq!(q2, IntPoly::from_i64(&[1, -2, 1]));
        let h = RationalSeries::new(IntPoly::one(), q2).unwrap().expand(6);
        assert_eq!(h, RationalSeries::inverse_product_form(&[1, 1]).expand(6));
    }

    proptest! {
        // expanding a product form and recognizing it recovers the multiset
        #[test]
        fn product_form_round_trip(mut ns in prop::collection::vec(1u32..6, 1..5)) {
            ns.sort_unstable();
            let cap = 4 * ns.iter().copied().max().unwrap().max(5);
            let h = RationalSeries::inverse_product_form(&ns).expand(cap);
            prop_assert_eq!(recognize_product_form(&h), Some(ns));
        }
    }
}
