//! Words and noncommutative polynomials over a weighted generator alphabet.
//!
//! A [`Word`] is a finite sequence of generator indices into a
//! [`GeneratorTable`]; an [`NcPoly`] is a finite linear combination of words
//! with exact rational coefficients. Monomial comparison is pluggable through
//! [`MonomialOrder`], which provides the degree-compatible multiplicative
//! total orders needed by the rewriting engine, plus the partial dominance
//! order used to cross-check leading-term choices on two-letter alphabets.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

mod parse;

pub use parse::parse_poly;

/// The alphabet: distinct generator names with positive integer weights and
/// optionally a bidegree per generator (whose components sum to the weight).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTable {
    names: Vec<String>,
    weights: Vec<u32>,
    bidegrees: Option<Vec<(u32, u32)>>,
}

impl GeneratorTable {
    pub fn new(
        names: Vec<String>,
        weights: Vec<u32>,
        bidegrees: Option<Vec<(u32, u32)>>,
    ) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::Structural(
                "generator names and weights must have equal length".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || !name.chars().next().unwrap().is_alphabetic() {
                return Err(Error::Structural(format!(
                    "generator name {name:?} must start with a letter"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::Structural(format!("duplicate generator name {name:?}")));
            }
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Structural("generator weights must be >= 1".into()));
        }
        if let Some(ref bi) = bidegrees {
            if bi.len() != names.len() {
                return Err(Error::Structural(
                    "bidegree list must cover every generator".into(),
                ));
            }
            for (i, &(a, b)) in bi.iter().enumerate() {
                if a + b != weights[i] {
                    return Err(Error::Structural(format!(
                        "generator {}: bidegree ({a},{b}) does not sum to weight {}",
                        names[i], weights[i]
                    )));
                }
            }
        }
        Ok(GeneratorTable { names, weights, bidegrees })
    }

    /// Table of generators all sitting in degree one.
    pub fn unit_weights(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()], None)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn bidegree(&self, i: usize) -> Option<(u32, u32)> {
        self.bidegrees.as_ref().map(|b| b[i])
    }

    pub fn is_bigraded(&self) -> bool {
        self.bidegrees.is_some()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial of the free algebra: a sequence of generator indices.
///
/// The derived ordering is length-first, then lexicographic on indices; it is
/// used only as a canonical storage key, never as the mathematical monomial
/// order (see [`MonomialOrder`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn single(g: usize) -> Self {
        Word { letters: vec![g as u32] }
    }

    pub fn from_indices(letters: &[usize]) -> Self {
        Word { letters: letters.iter().map(|&g| g as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> usize {
        self.letters[i] as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word { letters: self.letters[range].to_vec() }
    }

    /// True if `factor` occurs at position `pos`.
    pub fn matches_at(&self, factor: &Word, pos: usize) -> bool {
        pos + factor.len() <= self.len()
            && self.letters[pos..pos + factor.len()] == factor.letters[..]
    }

    /// Leftmost position at which `factor` occurs, if any.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        (0..=self.len() - factor.len()).find(|&p| self.matches_at(factor, p))
    }

    pub fn is_valid(&self, gens: &GeneratorTable) -> bool {
        self.letters.iter().all(|&g| (g as usize) < gens.len())
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorTable) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

/// Renders a word in the `x^2*y` text grammar; the empty word prints as `1`.
pub struct WordDisplay<'a> {
    word: &'a Word,
    gens: &'a GeneratorTable,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.word.len() {
            let g = self.word.letter(i);
            let mut run = 1;
            while i + run < self.word.len() && self.word.letter(i + run) == g {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{}", self.gens.name(g))?;
            } else {
                write!(f, "{}^{}", self.gens.name(g), run)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Weighted degree of a word: the sum of its letters' weights.
pub fn word_degree(w: &Word, gens: &GeneratorTable) -> Result<u32> {
    let mut d = 0u32;
    for &g in w.letters() {
        let g = g as usize;
        if g >= gens.len() {
            return Err(Error::Structural(format!("generator index {g} out of range")));
        }
        d += gens.weight(g);
    }
    Ok(d)
}

/// Bidegree of a word, when the table carries bidegrees.
pub fn word_bidegree(w: &Word, gens: &GeneratorTable) -> Result<Option<(u32, u32)>> {
    if !gens.is_bigraded() {
        word_degree(w, gens)?;
        return Ok(None);
    }
    let mut d = (0u32, 0u32);
    for &g in w.letters() {
        let g = g as usize;
        if g >= gens.len() {
            return Err(Error::Structural(format!("generator index {g} out of range")));
        }
        let (a, b) = gens.bidegree(g).unwrap();
        d.0 += a;
        d.1 += b;
    }
    Ok(Some(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    DegLex,
    DegRevLex,
    /// Alias of [`OrderKind::DegLex`]; comparisons always use the weighted
    /// degree from the generator table, so the two kinds coincide. Kept as a
    /// distinct name so presentation files can state the intent.
    WeightedDegLex,
}

/// A degree-compatible multiplicative total order on words.
///
/// `precedence` lists generator indices from highest to lowest. Degrees are
/// always the weighted degrees of the ambient table, so every kind satisfies
/// the descending chain condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<u32>,
    rank: Vec<u32>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<u32>, n_gens: usize) -> Result<Self> {
        if precedence.len() != n_gens {
            return Err(Error::UnsupportedOrder(format!(
                "precedence lists {} generators, table has {}",
                precedence.len(),
                n_gens
            )));
        }
        let mut rank = vec![u32::MAX; n_gens];
        for (r, &g) in precedence.iter().enumerate() {
            if g as usize >= n_gens || rank[g as usize] != u32::MAX {
                return Err(Error::UnsupportedOrder(
                    "precedence must be a permutation of the generators".into(),
                ));
            }
            rank[g as usize] = r as u32;
        }
        Ok(MonomialOrder { kind, precedence, rank })
    }

    /// Degree-lexicographic order with the table's own generator order as
    /// precedence (first generator highest).
    pub fn deglex(gens: &GeneratorTable) -> Self {
        MonomialOrder::new(OrderKind::DegLex, (0..gens.len() as u32).collect(), gens.len())
            .unwrap()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[u32] {
        &self.precedence
    }

    /// Total-order comparison of two words over the same table.
    ///
    /// Degree decides first. On equal degree, `DegLex` compares precedence
    /// ranks left to right and `DegRevLex` compares from the right; in both
    /// cases equal-degree words can never be proper prefixes (or suffixes) of
    /// one another because weights are positive, so the scan always reaches a
    /// deciding position. Multiplicativity `B < B' => ABC < AB'C` follows for
    /// the same reason.
    pub fn compare(&self, gens: &GeneratorTable, a: &Word, b: &Word) -> Ordering {
        let da = word_degree(a, gens).expect("word valid over table");
        let db = word_degree(b, gens).expect("word valid over table");
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.kind {
            OrderKind::DegLex | OrderKind::WeightedDegLex => {
                for (&x, &y) in a.letters().iter().zip(b.letters()) {
                    match self.rank[x as usize].cmp(&self.rank[y as usize]) {
                        // smaller rank = higher precedence = greater word
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                debug_assert_eq!(a.len(), b.len());
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                for (&x, &y) in a.letters().iter().rev().zip(b.letters().iter().rev()) {
                    match self.rank[x as usize].cmp(&self.rank[y as usize]) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                debug_assert_eq!(a.len(), b.len());
                Ordering::Equal
            }
        }
    }
}

/// Outcome of the partial dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// The partial order on two-letter words: degree first; on equal degree,
/// `m1 <= m2` iff the prefix counts of the *second* generator in `m1`
/// dominate those of `m2` at every position.
pub fn dominance_compare(gens: &GeneratorTable, m1: &Word, m2: &Word) -> Result<Dominance> {
    if gens.len() != 2 {
        return Err(Error::UnsupportedOrder(format!(
            "dominance order is defined on two-generator alphabets, got {}",
            gens.len()
        )));
    }
    let d1 = word_degree(m1, gens)?;
    let d2 = word_degree(m2, gens)?;
    match d1.cmp(&d2) {
        Ordering::Less => return Ok(Dominance::Less),
        Ordering::Greater => return Ok(Dominance::Greater),
        Ordering::Equal => {}
    }
    if m1.len() != m2.len() {
        return Ok(Dominance::Incomparable);
    }
    if m1 == m2 {
        return Ok(Dominance::Equal);
    }
    let (mut le, mut ge) = (true, true);
    let (mut c1, mut c2) = (0u32, 0u32);
    for i in 0..m1.len() {
        c1 += (m1.letter(i) == 1) as u32;
        c2 += (m2.letter(i) == 1) as u32;
        if c1 < c2 {
            le = false;
        }
        if c1 > c2 {
            ge = false;
        }
    }
    Ok(match (le, ge) {
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (false, false) => Dominance::Incomparable,
        (true, true) => unreachable!("distinct words with identical prefix counts"),
    })
}

/// A noncommutative polynomial with exact rational coefficients.
///
/// Terms are stored sorted by the canonical word order with no zero
/// coefficients, so equality is equality of term collections. Leading terms
/// with respect to a [`MonomialOrder`] are computed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    gens: Arc<GeneratorTable>,
    terms: Vec<(Word, BigRational)>,
}

impl NcPoly {
    pub fn zero(gens: &Arc<GeneratorTable>) -> Self {
        NcPoly { gens: Arc::clone(gens), terms: Vec::new() }
    }

    pub fn monomial(gens: &Arc<GeneratorTable>, word: Word, coeff: BigRational) -> Result<Self> {
        if !word.is_valid(gens) {
            return Err(Error::Structural("word contains an invalid generator index".into()));
        }
        let terms = if coeff.is_zero() { Vec::new() } else { vec![(word, coeff)] };
        Ok(NcPoly { gens: Arc::clone(gens), terms })
    }

    /// The generator `g` as a polynomial.
    pub fn generator(gens: &Arc<GeneratorTable>, g: usize) -> Result<Self> {
        Self::monomial(gens, Word::single(g), BigRational::one())
    }

    pub fn from_terms(
        gens: &Arc<GeneratorTable>,
        terms: Vec<(Word, BigRational)>,
    ) -> Result<Self> {
        let mut p = NcPoly::zero(gens);
        for (w, c) in terms {
            if !w.is_valid(gens) {
                return Err(Error::Structural("word contains an invalid generator index".into()));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn gens(&self) -> &Arc<GeneratorTable> {
        &self.gens
    }

    pub fn terms(&self) -> &[(Word, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        match self.terms.binary_search_by(|(tw, _)| tw.cmp(w)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(tw, _)| tw.cmp(&w)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (w, c)),
        }
    }

    fn check_same_table(&self, other: &NcPoly) -> Result<()> {
        if self.gens != other.gens {
            return Err(Error::Structural(
                "polynomials over different generator tables".into(),
            ));
        }
        Ok(())
    }

    /// `self + c * other`, with zero terms pruned.
    pub fn combine(&self, other: &NcPoly, c: &BigRational) -> Result<NcPoly> {
        self.check_same_table(other)?;
        let mut out = self.clone();
        for (w, oc) in &other.terms {
            out.add_term(w.clone(), oc * c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.combine(other, &BigRational::one())
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.combine(other, &-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero(&self.gens);
        }
        NcPoly {
            gens: Arc::clone(&self.gens),
            terms: self.terms.iter().map(|(w, tc)| (w.clone(), tc * c)).collect(),
        }
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-BigRational::one())
    }

    /// Product by bilinear extension of word concatenation.
    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check_same_table(other)?;
        let mut out = NcPoly::zero(&self.gens);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `a*b - b*a`.
    pub fn commutator(a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        a.mul(b)?.sub(&b.mul(a)?)
    }

    /// The maximal term under `order`, if the polynomial is nonzero.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Word, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(&self.gens, a, b))
            .map(|(w, c)| (w, c))
    }

    /// The common degree of all terms: `Ok(None)` for the zero polynomial,
    /// an error if terms have distinct degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut deg = None;
        for (w, _) in &self.terms {
            let d = word_degree(w, &self.gens)?;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::Input(format!(
                        "inhomogeneous polynomial: terms of degree {d0} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Like [`NcPoly::homogeneous_degree`] but for the bidegree, when the
    /// table is bigraded.
    pub fn homogeneous_bidegree(&self) -> Result<Option<(u32, u32)>> {
        if !self.gens.is_bigraded() {
            return Ok(None);
        }
        let mut deg = None;
        for (w, _) in &self.terms {
            let d = word_bidegree(w, &self.gens)?.unwrap();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::Input(format!(
                        "inhomogeneous polynomial: terms of bidegree {d0:?} and {d:?}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Largest term degree; 0 for the zero polynomial.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(w, _)| word_degree(w, &self.gens).expect("word valid over table"))
            .max()
            .unwrap_or(0)
    }

    /// The degree-0 part (coefficient of the empty word).
    pub fn constant_coeff(&self) -> BigRational {
        self.coeff(&Word::empty())
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Print by descending weighted degree, ties in index-lexicographic
        // order, so leading terms of the usual orders come out in front.
        let mut terms: Vec<&(Word, BigRational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da = word_degree(a, &self.gens).expect("stored words are valid");
            let db = word_degree(b, &self.gens).expect("stored words are valid");
            db.cmp(&da).then_with(|| a.letters().cmp(b.letters()))
        });
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || w.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
                if !w.is_empty() {
                    write!(f, "*")?;
                }
            }
            if !w.is_empty() {
                write!(f, "{}", w.display(&self.gens))?;
            }
        }
        Ok(())
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.denom() == &BigInt::one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
