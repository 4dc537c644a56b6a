//! Quotients of free Lie algebras by homogeneous ideals, computed degree by
//! degree inside the tensor algebra.
//!
//! Relators are linear combinations of bracket monomials. The ideal they
//! generate is closed under bracketing with generators (left-normed
//! closure spans the whole ideal), each graded piece is echelonized in
//! Lyndon coordinates with lowest-index pivoting, and the surviving Lyndon
//! elements become the quotient basis, so the output is deterministic.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{GeneratorTable, NcPoly, Word};

use super::lyndon::{lyndon_basis, LyndonElement};
use super::GradedLieAlgebra;

/// A bracket monomial over the generators, e.g. `[x,[x,y]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketTerm {
    Gen(usize),
    Bracket(Box<BracketTerm>, Box<BracketTerm>),
}

impl BracketTerm {
    pub fn gen(i: usize) -> Self {
        BracketTerm::Gen(i)
    }

    pub fn of(a: BracketTerm, b: BracketTerm) -> Self {
        BracketTerm::Bracket(Box::new(a), Box::new(b))
    }

    pub fn degree(&self, gens: &GeneratorTable) -> u32 {
        match self {
            BracketTerm::Gen(i) => gens.weight(*i),
            BracketTerm::Bracket(a, b) => a.degree(gens) + b.degree(gens),
        }
    }

    pub fn to_poly(&self, gens: &Arc<GeneratorTable>) -> Result<NcPoly> {
        match self {
            BracketTerm::Gen(i) => NcPoly::generator(gens, *i),
            BracketTerm::Bracket(a, b) => {
                NcPoly::commutator(&a.to_poly(gens)?, &b.to_poly(gens)?)
            }
        }
    }
}

/// A relator: a rational combination of bracket monomials, homogeneous in
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieExpr {
    terms: Vec<(BigRational, BracketTerm)>,
}

impl LieExpr {
    pub fn new(terms: Vec<(BigRational, BracketTerm)>) -> Self {
        LieExpr { terms }
    }

    pub fn single(t: BracketTerm) -> Self {
        LieExpr { terms: vec![(BigRational::one(), t)] }
    }

    /// Difference of two bracket monomials, e.g. `[x,y] - [z,w]`.
    pub fn difference(a: BracketTerm, b: BracketTerm) -> Self {
        LieExpr { terms: vec![(BigRational::one(), a), (-BigRational::one(), b)] }
    }

    /// The common degree of all bracket terms; errors when mixed.
    pub fn degree(&self, gens: &GeneratorTable) -> Result<u32> {
        let mut deg = None;
        for (_, t) in &self.terms {
            let d = t.degree(gens);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::Input(format!(
                        "inhomogeneous relator: bracket terms of degree {d0} and {d}"
                    )))
                }
                _ => {}
            }
        }
        deg.ok_or_else(|| Error::Input("empty relator".into()))
    }

    pub fn to_poly(&self, gens: &Arc<GeneratorTable>) -> Result<NcPoly> {
        let mut p = NcPoly::zero(gens);
        for (c, t) in &self.terms {
            p = p.combine(&t.to_poly(gens)?, c)?;
        }
        Ok(p)
    }
}

/// Linear span of the Lyndon polynomials of one degree, Gauss-Jordan
/// reduced with coordinate tracking, so arbitrary Lie polynomials of that
/// degree can be rewritten in Lyndon coordinates.
struct LyndonSpan {
    /// (reduced polynomial, its pivot word, coordinates in the Lyndon basis)
    rows: Vec<(NcPoly, Word, Vec<BigRational>)>,
    size: usize,
}

impl LyndonSpan {
    fn new(elements: &[&LyndonElement]) -> Self {
        let size = elements.len();
        let mut span = LyndonSpan { rows: Vec::with_capacity(size), size };
        for (i, e) in elements.iter().enumerate() {
            let mut coords = vec![BigRational::zero(); size];
            coords[i] = BigRational::one();
            let (mut p, mut coords) = span.partial_reduce(e.poly.clone(), coords);
            // Lyndon polynomials are independent, so a pivot always remains
            let pivot = p
                .terms()
                .last()
                .map(|(w, _)| w.clone())
                .expect("Lyndon expansions are linearly independent");
            let pc = p.coeff(&pivot);
            let inv = BigRational::one() / pc;
            p = p.scale(&inv);
            for c in coords.iter_mut() {
                *c *= &inv;
            }
            // eliminate the new pivot from the old rows
            for (q, _, qc) in span.rows.iter_mut() {
                let c = q.coeff(&pivot);
                if !c.is_zero() {
                    *q = q.combine(&p, &-c.clone()).expect("same table");
                    for (a, b) in qc.iter_mut().zip(&coords) {
                        *a -= &c * b;
                    }
                }
            }
            span.rows.push((p, pivot, coords));
        }
        span
    }

    fn partial_reduce(
        &self,
        mut p: NcPoly,
        mut coords: Vec<BigRational>,
    ) -> (NcPoly, Vec<BigRational>) {
        for (q, pivot, qc) in &self.rows {
            let c = p.coeff(pivot);
            if !c.is_zero() {
                p = p.combine(q, &-c.clone()).expect("same table");
                for (a, b) in coords.iter_mut().zip(qc) {
                    *a -= &c * b;
                }
            }
        }
        (p, coords)
    }

    /// Lyndon coordinates of a Lie polynomial; `None` when the polynomial
    /// leaves the span (it is not a Lie element of this degree).
    fn coordinates(&self, p: &NcPoly) -> Option<Vec<BigRational>> {
        let mut residual = p.clone();
        let mut acc = vec![BigRational::zero(); self.size];
        for (q, pivot, qc) in &self.rows {
            let c = residual.coeff(pivot);
            if !c.is_zero() {
                residual = residual.combine(q, &-c.clone()).expect("same table");
                for (a, b) in acc.iter_mut().zip(qc) {
                    *a += &c * b;
                }
            }
        }
        residual.is_zero().then_some(acc)
    }
}

/// Echelonized graded piece of the ideal, in Lyndon coordinates.
struct IdealSlice {
    /// rows with pivot column first nonzero, normalized to 1, Gauss-Jordan
    /// reduced against each other
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl IdealSlice {
    fn empty(_width: usize) -> Self {
        IdealSlice { rows: Vec::new(), pivots: Vec::new() }
    }

    fn insert(&mut self, mut v: Vec<BigRational>) {
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else { return };
        let inv = BigRational::one() / v[pivot].clone();
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if !c.is_zero() {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a -= &c * b;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
    }

    fn reduce(&self, v: &mut [BigRational]) {
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let c = v[pivot].clone();
            if !c.is_zero() {
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &c * b;
                }
            }
        }
    }
}

/// Quotient of the free Lie algebra on `gens` by the Lie ideal the relators
/// generate, together with everything in degrees >= `truncate` when given.
///
/// The cap bounds the computed range: the quotient must provably vanish
/// above its top degree within the cap (a window of max generator weight
/// suffices for algebras generated by `gens`), otherwise the cap is
/// reported as too small.
pub fn lie_from_presentation(
    gens: &Arc<GeneratorTable>,
    relators: &[LieExpr],
    truncate: Option<u32>,
    cap: u32,
) -> Result<GradedLieAlgebra> {
    if gens.is_empty() {
        return Err(Error::Input("a Lie presentation needs at least one generator".into()));
    }
    let max_weight = (0..gens.len()).map(|g| gens.weight(g)).max().unwrap();
    // relator polynomials grouped by degree
    let mut relator_polys: BTreeMap<u32, Vec<NcPoly>> = BTreeMap::new();
    for r in relators {
        let d = r.degree(gens)?;
        if d > cap {
            return Err(Error::CapExceeded { needed: d, certified: cap });
        }
        let p = r.to_poly(gens)?;
        if !p.is_zero() {
            relator_polys.entry(d).or_default().push(p);
        }
    }

    let basis = lyndon_basis(gens, cap)?;
    let by_degree: BTreeMap<u32, Vec<&LyndonElement>> = {
        let mut m: BTreeMap<u32, Vec<&LyndonElement>> = BTreeMap::new();
        for e in &basis {
            m.entry(e.degree).or_default().push(e);
        }
        m
    };

    // per-degree data
    let mut spans: BTreeMap<u32, LyndonSpan> = BTreeMap::new();
    let mut slices: BTreeMap<u32, IdealSlice> = BTreeMap::new();
    // ideal basis elements as polynomials, for bracketing upward
    let mut ideal_polys: BTreeMap<u32, Vec<NcPoly>> = BTreeMap::new();
    // surviving (quotient) Lyndon elements per degree
    let mut survivors: BTreeMap<u32, Vec<&LyndonElement>> = BTreeMap::new();

    for d in 1..=cap {
        let elements = by_degree.get(&d).cloned().unwrap_or_default();
        let width = elements.len();
        let span = LyndonSpan::new(&elements);
        let mut slice = IdealSlice::empty(width);
        let mut polys_here: Vec<NcPoly> = Vec::new();

        let truncated = truncate.is_some_and(|t| d >= t);
        if truncated {
            // the whole degree lies in the ideal
            for e in &elements {
                polys_here.push(e.poly.clone());
            }
        } else {
            if let Some(rs) = relator_polys.get(&d) {
                polys_here.extend(rs.iter().cloned());
            }
            // close under bracketing with the generators
            for g in 0..gens.len() {
                let w = gens.weight(g);
                if w >= d {
                    continue;
                }
                if let Some(lower) = ideal_polys.get(&(d - w)) {
                    let gp = NcPoly::generator(gens, g)?;
                    for v in lower {
                        let b = NcPoly::commutator(&gp, v)?;
                        if !b.is_zero() {
                            polys_here.push(b);
                        }
                    }
                }
            }
        }

        let mut kept: Vec<NcPoly> = Vec::new();
        for p in polys_here {
            let coords = span.coordinates(&p).ok_or_else(|| {
                Error::Structural("relator expansion left the free Lie algebra".into())
            })?;
            let mut v = coords.clone();
            slice.reduce(&mut v);
            if v.iter().any(|c| !c.is_zero()) {
                slice.insert(coords);
                kept.push(p);
            }
        }

        let pivot_set: Vec<bool> = {
            let mut s = vec![false; width];
            for &p in &slice.pivots {
                s[p] = true;
            }
            s
        };
        let surv: Vec<&LyndonElement> = elements
            .iter()
            .enumerate()
            .filter(|&(i, _)| !pivot_set[i])
            .map(|(_, e)| *e)
            .collect();
        survivors.insert(d, surv);
        ideal_polys.insert(d, kept);
        spans.insert(d, span);
        slices.insert(d, slice);
    }

    // Top degree of the quotient. Vanishing on the window of the next
    // max_weight degrees certifies vanishing everywhere above (the quotient
    // is generated by the alphabet), so the cap must reach that far.
    let top = survivors
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(&d, _)| d)
        .max()
        .unwrap_or(0);
    if top + max_weight > cap {
        return Err(Error::CapExceeded { needed: top + max_weight, certified: cap });
    }

    // assemble the quotient
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut chosen: Vec<&LyndonElement> = Vec::new();
    // position of each surviving Lyndon index within the quotient basis
    let mut position: BTreeMap<u32, BTreeMap<usize, usize>> = BTreeMap::new();
    for (&d, surv) in &survivors {
        let elements = by_degree.get(&d).cloned().unwrap_or_default();
        let mut pos_here = BTreeMap::new();
        for e in surv {
            let lyndon_index = elements
                .iter()
                .position(|x| x.word == e.word)
                .expect("survivor comes from this degree");
            pos_here.insert(lyndon_index, chosen.len());
            let name: String =
                e.word.letters().iter().map(|&g| gens.name(g as usize)).collect();
            names.push(name);
            degrees.push(d);
            chosen.push(e);
        }
        position.insert(d, pos_here);
    }

    // structure constants: reduce each commutator modulo the ideal slice
    let mut brackets: BTreeMap<(usize, usize), super::LieVec> = BTreeMap::new();
    for i in 0..chosen.len() {
        for j in i + 1..chosen.len() {
            let d = degrees[i] + degrees[j];
            if d > top {
                continue; // certified zero
            }
            let comm = NcPoly::commutator(&chosen[i].poly, &chosen[j].poly)?;
            if comm.is_zero() {
                continue;
            }
            let span = &spans[&d];
            let slice = &slices[&d];
            let mut coords = span
                .coordinates(&comm)
                .ok_or_else(|| Error::Structural("bracket left the free Lie algebra".into()))?;
            slice.reduce(&mut coords);
            let pos_here = &position[&d];
            let mut v: super::LieVec = Vec::new();
            for (li, c) in coords.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let &q = pos_here
                    .get(&li)
                    .expect("reduced coordinates live on surviving columns");
                v.push((q, c));
            }
            if !v.is_empty() {
                brackets.insert((i, j), v);
            }
        }
    }

    GradedLieAlgebra::new(names, degrees, brackets)
}
