//! Ready-made graded Lie algebras: the abelian ones, the Heisenberg
//! algebra, the five-dimensional algebras generated in degree one (one per
//! Hilbert function, plus the second algebra with Hilbert function 4,1 whose
//! enveloping algebra has different Betti numbers), the two four-dimensional
//! two-step realizations, and the chain algebras achieving the largest
//! possible socle twist.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::One;

use crate::ncpoly::GeneratorTable;

use super::present::{lie_from_presentation, BracketTerm, LieExpr};
use super::GradedLieAlgebra;

fn unit_table(names: &[&str]) -> Arc<GeneratorTable> {
    Arc::new(GeneratorTable::unit_weights(names).unwrap())
}

fn gen(i: usize) -> BracketTerm {
    BracketTerm::gen(i)
}

fn br(a: BracketTerm, b: BracketTerm) -> BracketTerm {
    BracketTerm::of(a, b)
}

/// The abelian Lie algebra on d degree-one generators.
pub fn abelian(d: usize) -> GradedLieAlgebra {
    let classic = ["x", "y", "z", "w", "t"];
    let names: Vec<String> = if d <= classic.len() {
        classic[..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("x{i}")).collect()
    };
    GradedLieAlgebra::new(names, vec![1; d], BTreeMap::new()).unwrap()
}

/// x, y, z with [x, y] = z in degree two.
pub fn heisenberg() -> GradedLieAlgebra {
    let mut brackets = BTreeMap::new();
    brackets.insert((0, 1), vec![(2, BigRational::one())]);
    GradedLieAlgebra::new(
        vec!["x".into(), "y".into(), "z".into()],
        vec![1, 1, 2],
        brackets,
    )
    .unwrap()
}

/// Three generators and one two-step bracket: basis x, y, z, [x,y];
/// Hilbert function 3, 1.
pub fn dim4_h31() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y", "z"]);
    let (x, y, z) = (0, 1, 2);
    let relators = vec![
        LieExpr::single(br(gen(z), gen(x))),
        LieExpr::single(br(gen(z), gen(y))),
        LieExpr::single(br(gen(x), br(gen(x), gen(y)))),
        LieExpr::single(br(gen(y), br(gen(x), gen(y)))),
    ];
    lie_from_presentation(&g, &relators, None, 4).unwrap()
}

/// Two generators up to degree three: basis x, y, [x,y], [x,[x,y]];
/// Hilbert function 2, 1, 1.
pub fn dim4_h211() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y"]);
    let (x, y) = (0, 1);
    let relators = vec![
        LieExpr::single(br(gen(x), br(gen(x), br(gen(x), gen(y))))),
        LieExpr::single(br(br(gen(x), gen(y)), gen(y))),
    ];
    lie_from_presentation(&g, &relators, None, 5).unwrap()
}

/// Hilbert function 5: the five-dimensional abelian algebra.
pub fn dim5_h5() -> GradedLieAlgebra {
    abelian(5)
}

/// Hilbert function 4, 1 with two central generators: only [x, y] is
/// nonzero. The degree-three slice of its wedge-bracket differential has
/// rank two.
pub fn dim5_h41() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y", "z", "w"]);
    let (x, y, z, w) = (0, 1, 2, 3);
    let relators = vec![
        LieExpr::single(br(gen(z), gen(x))),
        LieExpr::single(br(gen(z), gen(y))),
        LieExpr::single(br(gen(z), gen(w))),
        LieExpr::single(br(gen(w), gen(x))),
        LieExpr::single(br(gen(w), gen(y))),
    ];
    lie_from_presentation(&g, &relators, Some(3), 3).unwrap()
}

/// Hilbert function 4, 1 with a nondegenerate bracket form:
/// [x,y] = [z,w], all other pairs zero. Every cubic bracket already
/// vanishes as a consequence, and the degree-three differential slice has
/// rank four.
pub fn dim5_h41_nondegenerate() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y", "z", "w"]);
    let (x, y, z, w) = (0, 1, 2, 3);
    let relators = vec![
        LieExpr::difference(br(gen(x), gen(y)), br(gen(z), gen(w))),
        LieExpr::single(br(gen(x), gen(z))),
        LieExpr::single(br(gen(x), gen(w))),
        LieExpr::single(br(gen(y), gen(z))),
        LieExpr::single(br(gen(y), gen(w))),
    ];
    lie_from_presentation(&g, &relators, None, 3).unwrap()
}

/// Hilbert function 3, 2: basis x, y, z, [x,y], [x,z].
pub fn dim5_h32() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y", "z"]);
    let (y, z) = (1, 2);
    let relators = vec![LieExpr::single(br(gen(y), gen(z)))];
    lie_from_presentation(&g, &relators, Some(3), 3).unwrap()
}

/// Hilbert function 3, 1, 1: basis x, y, z, [x,y], [[x,y],y].
pub fn dim5_h311() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y", "z"]);
    let (x, y, z) = (0, 1, 2);
    let relators = vec![
        LieExpr::single(br(gen(z), gen(x))),
        LieExpr::single(br(gen(z), gen(y))),
        LieExpr::single(br(gen(x), br(gen(x), gen(y)))),
    ];
    lie_from_presentation(&g, &relators, Some(4), 4).unwrap()
}

/// Hilbert function 2, 1, 2: the free algebra on two generators cut at
/// degree four.
pub fn dim5_h212() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y"]);
    lie_from_presentation(&g, &[], Some(4), 4).unwrap()
}

/// Hilbert function 2, 1, 1, 1: basis x, y, [x,y], [[x,y],y],
/// [[[x,y],y],y].
pub fn dim5_h2111() -> GradedLieAlgebra {
    let g = unit_table(&["x", "y"]);
    let (x, y) = (0, 1);
    let relators = vec![LieExpr::single(br(gen(x), br(gen(x), gen(y))))];
    lie_from_presentation(&g, &relators, Some(5), 5).unwrap()
}

/// The d-dimensional chain algebra: basis y and L_1..L_{d-1} with
/// [L_i, y] = L_{i+1}, realizing the largest socle twist 1 + d(d-1)/2
/// among enveloping algebras.
pub fn chain(d: usize) -> GradedLieAlgebra {
    assert!(d >= 2, "the chain algebra needs dimension at least 2");
    let mut names = vec!["y".to_string()];
    let mut degrees = vec![1u32];
    for i in 1..d {
        names.push(format!("L{i}"));
        degrees.push(i as u32);
    }
    let mut brackets = BTreeMap::new();
    // basis index of L_i is i; [y, L_i] = -L_{i+1}
    for i in 1..d - 1 {
        brackets.insert((0, i), vec![(i + 1, -BigRational::one())]);
    }
    GradedLieAlgebra::new(names, degrees, brackets).unwrap()
}

/// The catalog of five-dimensional graded Lie algebras generated in degree
/// one, keyed by a short label.
pub fn dim5_catalog() -> Vec<(&'static str, GradedLieAlgebra)> {
    vec![
        ("h5", dim5_h5()),
        ("h41", dim5_h41()),
        ("h41-nondegenerate", dim5_h41_nondegenerate()),
        ("h32", dim5_h32()),
        ("h311", dim5_h311()),
        ("h212", dim5_h212()),
        ("h2111", dim5_h2111()),
    ]
}
