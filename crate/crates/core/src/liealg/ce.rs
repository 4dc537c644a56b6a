//! Chevalley-Eilenberg complexes over the enveloping presentation.
//!
//! Terms have rank binom(dim g, p) with shifts the total degrees of the
//! wedge basis tuples. Matrices follow the checker's convention (entries
//! multiply module coordinates from the left, composites multiply entries
//! left to right), which matches the right-module complex as written; the
//! left complex is transported through the canonical anti-automorphism
//! x -> -x of the enveloping algebra, which preserves the defining ideal
//! and so preserves vanishing of the composites.

use num::rational::BigRational;
use num::One;

use crate::complexcheck::{FreeComplex, Shift};
use crate::error::Result;
use crate::ncpoly::{NcPoly, Word};

use super::{insert_sorted, tuples, GradedLieAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The Chevalley-Eilenberg resolution of the ground field as a
/// [`FreeComplex`] over the enveloping presentation of `g` (compatible with
/// the table from [`GradedLieAlgebra::enveloping_presentation`]).
pub fn ce_complex(g: &GradedLieAlgebra, side: Side) -> Result<FreeComplex> {
    let table = g.enveloping_table()?;
    let n = g.dim();
    let tuple_degree =
        |t: &[usize]| -> u32 { t.iter().map(|&i| g.degree(i)).sum() };

    let mut modules: Vec<Vec<Shift>> = Vec::with_capacity(n + 1);
    let mut tuple_lists: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let ts = tuples(n, p);
        modules.push(ts.iter().map(|t| Shift::graded(tuple_degree(t))).collect());
        tuple_lists.push(ts);
    }

    let mut maps = Vec::with_capacity(n);
    for p in 1..=n {
        let rows = &tuple_lists[p - 1];
        let cols = &tuple_lists[p];
        let row_index: std::collections::BTreeMap<&[usize], usize> =
            rows.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut map = vec![vec![NcPoly::zero(&table); cols.len()]; rows.len()];
        for (ci, t) in cols.iter().enumerate() {
            // single-letter terms: drop one slot, multiply by its generator
            for l in 0..p {
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(q, _)| q != l).map(|(_, &v)| v).collect();
                let ri = row_index[rest.as_slice()];
                let negative = match side {
                    // (-1)^{p-l} with 1-based l: negative iff p - l0 is even
                    Side::Right => (p - l) % 2 == 0,
                    // (-1)^{l+1} with 1-based l, negated by the antipode:
                    // (-1)^{l0+1}
                    Side::Left => l % 2 == 0,
                };
                let c = if negative { -BigRational::one() } else { BigRational::one() };
                let gen = NcPoly::monomial(&table, Word::single(t[l]), c)?;
                map[ri][ci] = map[ri][ci].add(&gen)?;
            }
            // bracket terms: contract two slots into the bracket value
            for l in 0..p {
                for m in l + 1..p {
                    let sign_lm = (l + m) % 2 == 0; // (-1)^{l+m}, 1-based
                    let rest: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|&(q, _)| q != l && q != m)
                        .map(|(_, &v)| v)
                        .collect();
                    for (k, c) in g.bracket(t[l], t[m]) {
                        let Some((pos, tuple)) = insert_sorted(&rest, k) else { continue };
                        let ri = row_index[tuple.as_slice()];
                        let positive = match side {
                            // the wedge value is appended at the end
                            Side::Right => sign_lm == ((rest.len() - pos) % 2 == 0),
                            // the wedge value is prepended
                            Side::Left => sign_lm == (pos % 2 == 0),
                        };
                        let coeff = if positive { c } else { -c };
                        let scalar = NcPoly::monomial(&table, Word::empty(), coeff)?;
                        map[ri][ci] = map[ri][ci].add(&scalar)?;
                    }
                }
            }
        }
        maps.push(map);
    }
    FreeComplex::new(&table, modules, maps)
}
