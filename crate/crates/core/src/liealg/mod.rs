//! Graded Lie algebras with exact structure constants: construction from
//! presentations via Lyndon bases, Jacobi verification, enveloping-algebra
//! presentations, the alternating wedge-bracket form, Chevalley-Eilenberg
//! complexes, and graded Betti numbers of the ground field through Lie
//! homology.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::RationalSeries;
use crate::linalg::rational_rank;
use crate::ncpoly::{GeneratorTable, NcPoly};

mod catalog;
mod ce;
mod lyndon;
mod present;

pub use catalog::*;
pub use ce::{ce_complex, Side};
pub use lyndon::{lyndon_basis, LyndonElement};
pub use present::{lie_from_presentation, BracketTerm, LieExpr};

/// Sparse vector over the basis of a Lie algebra.
pub type LieVec = Vec<(usize, BigRational)>;

fn lievec_add(acc: &mut BTreeMap<usize, BigRational>, v: &LieVec, scale: &BigRational) {
    for (k, c) in v {
        let e = acc.entry(*k).or_insert_with(BigRational::zero);
        *e += c * scale;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn lievec_from(acc: BTreeMap<usize, BigRational>) -> LieVec {
    acc.into_iter().collect()
}

/// A finite-dimensional graded Lie algebra given by a degree-sorted basis
/// and structure constants, stored for index pairs i < j only (antisymmetry
/// fills in the rest, and [b, b] = 0).
///
/// Construction validates the shape; the grading and Jacobi identities are
/// checked separately by [`GradedLieAlgebra::check_jacobi`] so deliberately
/// broken tables can be built and examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    names: Vec<String>,
    degrees: Vec<u32>,
    brackets: BTreeMap<(usize, usize), LieVec>,
}

/// A failed structural check, with the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieDefect {
    /// `[b_i, b_j]` leaves the degree-(d_i + d_j) component.
    Grading { i: usize, j: usize },
    /// The Jacobi sum on the basis triple (i, j, k) is nonzero.
    Jacobi { i: usize, j: usize, k: usize },
}

impl std::fmt::Display for LieDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieDefect::Grading { i, j } => {
                write!(f, "bracket ({i}, {j}) violates the grading")
            }
            LieDefect::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails on the triple ({i}, {j}, {k})")
            }
        }
    }
}

impl GradedLieAlgebra {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<u32>,
        brackets: BTreeMap<(usize, usize), LieVec>,
    ) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::Structural("names and degrees must have equal length".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::Structural(format!("bad or duplicate basis name {n:?}")));
            }
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::Structural("basis degrees must be positive".into()));
        }
        let dim = names.len();
        for (&(i, j), v) in &brackets {
            if i >= j || j >= dim {
                return Err(Error::Structural(format!(
                    "bracket key ({i}, {j}) must satisfy i < j < dim"
                )));
            }
            if v.iter().any(|(k, _)| *k >= dim) || v.iter().any(|(_, c)| c.is_zero()) {
                return Err(Error::Structural(
                    "bracket values must be nonzero coefficients on valid indices".into(),
                ));
            }
        }
        let mut brackets = brackets;
        brackets.retain(|_, v| !v.is_empty());
        Ok(GradedLieAlgebra { names, degrees, brackets })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// h(1), h(2), ..., h(top): dimensions of the graded pieces.
    pub fn hilbert_function(&self) -> Vec<u32> {
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        let mut h = vec![0u32; top as usize];
        for &d in &self.degrees {
            h[d as usize - 1] += 1;
        }
        h
    }

    /// `[b_i, b_j]` for arbitrary index order.
    pub fn bracket(&self, i: usize, j: usize) -> LieVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    /// Bracket of two sparse vectors.
    pub fn bracket_vec(&self, a: &LieVec, b: &LieVec) -> LieVec {
        let mut acc = BTreeMap::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let v = self.bracket(*i, *j);
                lievec_add(&mut acc, &v, &(ca * cb));
            }
        }
        lievec_from(acc)
    }

    /// Verifies the grading of every stored bracket and the Jacobi identity
    /// on every basis triple, reporting the first defect found.
    pub fn check_jacobi(&self) -> std::result::Result<(), LieDefect> {
        for (&(i, j), v) in &self.brackets {
            let d = self.degrees[i] + self.degrees[j];
            if v.iter().any(|(k, _)| self.degrees[*k] != d) {
                return Err(LieDefect::Grading { i, j });
            }
        }
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    // [[i,j],k] + [[j,k],i] + [[k,i],j]
                    let mut acc = BTreeMap::new();
                    let one = BigRational::one();
                    lievec_add(
                        &mut acc,
                        &self.bracket_vec(&self.bracket(i, j), &unit(k)),
                        &one,
                    );
                    lievec_add(
                        &mut acc,
                        &self.bracket_vec(&self.bracket(j, k), &unit(i)),
                        &one,
                    );
                    lievec_add(
                        &mut acc,
                        &self.bracket_vec(&self.bracket(k, i), &unit(j)),
                        &one,
                    );
                    if !acc.is_empty() {
                        return Err(LieDefect::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Hilbert series of the enveloping algebra:
    /// `prod_i 1/(1 - t^i)^{h(i)}`.
    pub fn pbw_series(&self) -> RationalSeries {
        RationalSeries::inverse_product_form(&self.degrees)
    }

    /// Degree of the top exterior power: `sum_i i * h(i)`, the largest
    /// possible shift in a minimal resolution over the enveloping algebra.
    pub fn socle_twist(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// One weighted generator per basis element, with the commutator
    /// relations `b_i b_j - b_j b_i - [b_i, b_j]` for i < j.
    pub fn enveloping_presentation(&self) -> Result<(Arc<GeneratorTable>, Vec<NcPoly>)> {
        let table = self.enveloping_table()?;
        let mut rels = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let bi = NcPoly::generator(&table, i)?;
                let bj = NcPoly::generator(&table, j)?;
                let mut rel = NcPoly::commutator(&bi, &bj)?;
                for (k, c) in self.bracket(i, j) {
                    rel = rel.combine(&NcPoly::generator(&table, k)?, &-c)?;
                }
                rels.push(rel);
            }
        }
        Ok((table, rels))
    }

    pub(crate) fn enveloping_table(&self) -> Result<Arc<GeneratorTable>> {
        Ok(Arc::new(GeneratorTable::new(self.names.clone(), self.degrees.clone(), None)?))
    }
}

fn unit(i: usize) -> LieVec {
    vec![(i, BigRational::one())]
}

/// Element of an exterior power: a combination of strictly increasing basis
/// index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeElement {
    grade: usize,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl WedgeElement {
    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.terms.iter()
    }
}

/// The alternating form `sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ x_1 ^ ...
/// (omitting x_i, x_j) ... ^ x_n` in the (n-1)-st exterior power. Its
/// vanishing makes the two Chevalley-Eilenberg complexes dual; positive
/// grading forces it to vanish.
pub fn delta_form(g: &GradedLieAlgebra) -> WedgeElement {
    let n = g.dim();
    let mut terms: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
    let mut add = |tuple: Vec<usize>, c: BigRational| {
        if c.is_zero() {
            return;
        }
        *terms.entry(tuple).or_insert_with(BigRational::zero) += c;
    };
    for i in 0..n {
        for j in i + 1..n {
            let sign_ij = if (i + j) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            for (k, c) in g.bracket(i, j) {
                // wedging with the complement of {i, j} kills everything
                // except k = i or k = j
                if k == i {
                    let tuple: Vec<usize> = (0..n).filter(|&t| t != j).collect();
                    let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                    add(tuple, &sign_ij * &c * sign);
                } else if k == j {
                    let tuple: Vec<usize> = (0..n).filter(|&t| t != i).collect();
                    let sign =
                        if (j + 1) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                    add(tuple, &sign_ij * &c * sign);
                }
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    WedgeElement { grade: n.saturating_sub(1), terms }
}

/// Graded Betti numbers b(p, j) of the ground field over the enveloping
/// algebra, recorded sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    dim: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn lie_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self, p: usize, j: u32) -> u64 {
        self.entries.get(&(p, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, u32), &u64)> {
        self.entries.iter()
    }

    /// The degree-j shifts at homological step p, with multiplicity.
    pub fn shifts_at(&self, p: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for (&(q, j), &m) in &self.entries {
            if q == p {
                for _ in 0..m {
                    out.push(j);
                }
            }
        }
        out
    }

    /// Alternating sum `sum_p (-1)^p sum_j b(p,j) t^j`.
    pub fn euler_polynomial(&self) -> crate::hilbert::IntPoly {
        let mut shifts: Vec<Vec<u32>> = vec![Vec::new(); self.dim + 1];
        for (&(p, j), &m) in &self.entries {
            for _ in 0..m {
                shifts[p].push(j);
            }
        }
        crate::hilbert::euler_polynomial(&shifts)
    }
}

/// Strictly increasing index tuples of size p over 0..n, in lexicographic
/// order.
pub(crate) fn tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, p, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, p, 0, &mut cur, &mut out);
    out
}

/// Position k would take when prepended to a sorted tuple not containing
/// it, and the resulting tuple; `None` when k already occurs.
pub(crate) fn insert_sorted(tuple: &[usize], k: usize) -> Option<(usize, Vec<usize>)> {
    if tuple.contains(&k) {
        return None;
    }
    let pos = tuple.iter().take_while(|&&t| t < k).count();
    let mut out = Vec::with_capacity(tuple.len() + 1);
    out.extend_from_slice(&tuple[..pos]);
    out.push(k);
    out.extend_from_slice(&tuple[pos..]);
    Some((pos, out))
}

/// The bracket-only differential of the exterior algebra complex, restricted
/// to internal degree j: a matrix from grade-p tuples of degree j to
/// grade-(p-1) tuples of degree j, as rows of rationals.
fn wedge_differential_slice(
    g: &GradedLieAlgebra,
    p: usize,
    j: u32,
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<Vec<BigRational>>) {
    let deg = |t: &[usize]| -> u32 { t.iter().map(|&i| g.degree(i)).sum() };
    let cols: Vec<Vec<usize>> = tuples(g.dim(), p).into_iter().filter(|t| deg(t) == j).collect();
    let rows: Vec<Vec<usize>> =
        tuples(g.dim(), p - 1).into_iter().filter(|t| deg(t) == j).collect();
    let row_index: BTreeMap<&[usize], usize> =
        rows.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut m = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
    for (ci, t) in cols.iter().enumerate() {
        for l in 0..p {
            for mm in l + 1..p {
                // (-1)^{l+m} with 1-based positions = (-1)^{l+mm} 0-based
                let sign_lm = if (l + mm) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(q, _)| q != l && q != mm).map(|(_, &v)| v).collect();
                for (k, c) in g.bracket(t[l], t[mm]) {
                    if let Some((pos, tuple)) = insert_sorted(&rest, k) {
                        if let Some(&ri) = row_index.get(tuple.as_slice()) {
                            let sign = if pos % 2 == 0 { sign_lm } else { -sign_lm };
                            m[ri][ci] += c * BigRational::from_integer(sign.into());
                        }
                    }
                }
            }
        }
    }
    (rows, cols, m)
}

/// Rank of the wedge-bracket differential from grade p to grade p-1 in
/// internal degree j. This is the scalar block of the corresponding
/// Chevalley-Eilenberg differential, whose rank decides how many adjacent
/// free terms cancel in the minimal resolution.
pub fn wedge_bracket_rank(g: &GradedLieAlgebra, p: usize, j: u32) -> usize {
    if p == 0 || p > g.dim() {
        return 0;
    }
    let (_, _, m) = wedge_differential_slice(g, p, j);
    rational_rank(&m)
}

/// Graded Betti numbers of the ground field over the enveloping algebra,
/// as the bigraded homology of the exterior algebra with the bracket
/// differential.
pub fn lie_betti(g: &GradedLieAlgebra) -> BettiTable {
    let n = g.dim();
    let deg = |t: &[usize]| -> u32 { t.iter().map(|&i| g.degree(i)).sum() };
    // slice dimensions
    let mut dims: BTreeMap<(usize, u32), i64> = BTreeMap::new();
    for p in 0..=n {
        for t in tuples(n, p) {
            *dims.entry((p, deg(&t))).or_insert(0) += 1;
        }
    }
    // subtract ranks of incoming and outgoing differentials
    let mut entries = BTreeMap::new();
    for (&(p, j), &d) in &dims {
        let out_rank = if p >= 1 { wedge_bracket_rank(g, p, j) as i64 } else { 0 };
        let in_rank = if p + 1 <= n { wedge_bracket_rank(g, p + 1, j) as i64 } else { 0 };
        let b = d - out_rank - in_rank;
        debug_assert!(b >= 0, "negative homology; the bracket tables are inconsistent");
        if b > 0 {
            entries.insert((p, j), b as u64);
        }
    }
    BettiTable { dim: n, entries }
}

#[cfg(test)]
mod tests;
