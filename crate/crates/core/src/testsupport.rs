//! Fixtures shared by the unit tests of several modules.

use std::sync::Arc;

use crate::complexcheck::{FreeComplex, Shift};
use crate::diamond::RewriteSystem;
use crate::ncpoly::{parse_poly, GeneratorTable, MonomialOrder, NcPoly};

/// Two degree-one generators x > y, bigraded so x = (1,0), y = (0,1).
pub fn xy_bigraded() -> Arc<GeneratorTable> {
    Arc::new(
        GeneratorTable::new(
            vec!["x".into(), "y".into()],
            vec![1, 1],
            Some(vec![(1, 0), (0, 1)]),
        )
        .unwrap(),
    )
}

/// The three commutator relations of the extremal two-generator algebra:
/// [x^2,y], [x,y^3], [x,yRy] with R = yxyx + xy^2x + xyxy.
pub fn extremal_relations(g: &Arc<GeneratorTable>) -> Vec<NcPoly> {
    let x = parse_poly("x", g).unwrap();
    let y = parse_poly("y", g).unwrap();
    let r = parse_poly("y*x*y*x + x*y^2*x + x*y*x*y", g).unwrap();
    let yry = y.mul(&r).unwrap().mul(&y).unwrap();
    vec![
        NcPoly::commutator(&parse_poly("x^2", g).unwrap(), &y).unwrap(),
        NcPoly::commutator(&x, &parse_poly("y^3", g).unwrap()).unwrap(),
        NcPoly::commutator(&x, &yry).unwrap(),
    ]
}

/// Completed rewrite system of the extremal algebra over plain unit weights.
pub fn extremal_system(cap: u32) -> RewriteSystem {
    let g = Arc::new(GeneratorTable::unit_weights(&["x", "y"]).unwrap());
    let order = MonomialOrder::deglex(&g);
    RewriteSystem::complete(&extremal_relations(&g), &order, cap).unwrap()
}

/// Same system over the bigraded table.
pub fn extremal_system_bigraded(cap: u32) -> RewriteSystem {
    let g = xy_bigraded();
    let order = MonomialOrder::deglex(&g);
    RewriteSystem::complete(&extremal_relations(&g), &order, cap).unwrap()
}

/// The length-five resolution of the residue field over the extremal
/// algebra, with its five explicit differentials.
pub fn extremal_complex(bigraded: bool) -> FreeComplex {
    let g = if bigraded {
        xy_bigraded()
    } else {
        Arc::new(GeneratorTable::unit_weights(&["x", "y"]).unwrap())
    };
    let modules = if bigraded {
        vec![
            vec![Shift::bigraded(0, 0)],
            vec![Shift::bigraded(1, 0), Shift::bigraded(0, 1)],
            vec![Shift::bigraded(2, 1), Shift::bigraded(1, 3), Shift::bigraded(3, 4)],
            vec![Shift::bigraded(2, 3), Shift::bigraded(4, 4), Shift::bigraded(3, 6)],
            vec![Shift::bigraded(4, 7), Shift::bigraded(5, 6)],
            vec![Shift::bigraded(5, 7)],
        ]
    } else {
        vec![
            vec![Shift::graded(0)],
            vec![Shift::graded(1), Shift::graded(1)],
            vec![Shift::graded(3), Shift::graded(4), Shift::graded(7)],
            vec![Shift::graded(5), Shift::graded(8), Shift::graded(9)],
            vec![Shift::graded(11), Shift::graded(11)],
            vec![Shift::graded(12)],
        ]
    };
    let p = |src: &str| parse_poly(src, &g).unwrap();
    let y_r_y = "y^2*x*y*x*y + y*x*y^2*x*y + y*x*y*x*y^2";
    let r_y_x = "y*x*y*x*y*x + x*y^2*x*y*x + x*y*x*y^2*x";
    let r_y = "y*x*y*x*y + x*y^2*x*y + x*y*x*y^2";
    let y_r = "y^2*x*y*x + y*x*y^2*x + y*x*y*x*y";
    let x_y_r = "x*y^2*x*y*x + x*y*x*y^2*x + x*y*x*y*x*y";
    let maps = vec![
        vec![vec![p("x"), p("y")]],
        vec![
            vec![p("x*y"), p("y^3"), p(y_r_y)],
            vec![p("-x^2"), p("-y^2*x"), p(r_y_x).neg()],
        ],
        vec![
            vec![p("y^2"), p(r_y), p("0")],
            vec![p("-x"), p("0"), p(y_r).neg()],
            vec![p("0"), p("-x"), p("y^2")],
        ],
        vec![
            vec![p(y_r_y).neg(), p(x_y_r)],
            vec![p("y^3"), p("-x*y^2")],
            vec![p("y*x"), p("-x^2")],
        ],
        vec![vec![p("x")], vec![p("y")]],
    ];
    FreeComplex::new(&g, modules, maps).unwrap()
}
