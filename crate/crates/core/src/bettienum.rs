//! Numerical classification of minimal-resolution shapes for connected
//! graded algebras of global dimension five on two degree-one generators.
//!
//! A [`BettiType`] is the datum (n, a_1 <= ... <= a_n, l) of a length-five
//! resolution whose middle steps sit in degrees a_i and l - a_i. The checks
//! encode the necessary conditions a regular algebra of GK-dimension >= 4
//! imposes on that datum, and [`enumerate`] scans a finite region for every
//! survivor.

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hilbert::{gk_pole_order, series_from_resolution_type};

/// The numerical shape (n, a, l) of a length-five resolution with two
/// degree-one generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BettiType {
    a: Vec<u32>,
    l: u32,
}

impl BettiType {
    pub fn new(a: Vec<u32>, l: u32) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::Input("a relation-degree list is required".into()));
        }
        if a[0] < 2 || a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Input(
                "relation degrees must be nondecreasing and at least 2".into(),
            ));
        }
        if l < 5 {
            return Err(Error::Input("the top twist of a length-five resolution is at least 5".into()));
        }
        Ok(BettiType { a, l })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Shift lists of the resolution the type describes, step by step:
    /// 0; 1,1; a_i; l - a_i; l-1, l-1; l. Step three mirrors step two by
    /// construction.
    pub fn resolution_shifts(&self) -> Vec<Vec<u32>> {
        let mirrored: Vec<u32> = self.a.iter().rev().map(|&ai| self.l - ai).collect();
        vec![
            vec![0],
            vec![1, 1],
            self.a.clone(),
            mirrored,
            vec![self.l - 1, self.l - 1],
            vec![self.l],
        ]
    }

    /// Whether realizing algebras are known for this shape.
    pub fn existence(&self) -> Existence {
        if self.n() <= 3 {
            Existence::Realized
        } else {
            Existence::Open
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existence {
    Realized,
    Open,
}

impl std::fmt::Display for Existence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Existence::Realized => write!(f, "realized"),
            Existence::Open => write!(f, "open"),
        }
    }
}

/// GK-dimension >= 2 forces the linear identity 2 sum a_i = (n-1) l + 4.
pub fn check_linear(b: &BettiType) -> bool {
    let sum: i64 = b.a().iter().map(|&x| x as i64).sum();
    2 * sum == (b.n() as i64 - 1) * b.l() as i64 + 4
}

/// GK-dimension >= 4 forces the cubic identity
/// 4 sum a_i^3 - 6 l sum a_i^2 + l^3 (n-1) + 12 l - 8 = 0.
pub fn check_cubic(b: &BettiType) -> bool {
    let l = b.l() as i64;
    let s3: i64 = b.a().iter().map(|&x| (x as i64).pow(3)).sum();
    let s2: i64 = b.a().iter().map(|&x| (x as i64).pow(2)).sum();
    4 * s3 - 6 * l * s2 + l.pow(3) * (b.n() as i64 - 1) + 12 * l - 8 == 0
}

/// For a domain: a_{i+1} + a_{n+1-i} < l for i = 1..n-1 (which implies the
/// weaker a_i + a_{n+1-i} < l).
pub fn check_gaps(b: &BettiType) -> bool {
    let a = b.a();
    let n = b.n();
    (1..n).all(|i| a[i] + a[n - i] < b.l())
}

/// The expansion of 1/q must be non-negative out to `cap` and the pole of
/// 1/q at t = 1 must have order exactly five.
pub fn check_positivity(b: &BettiType, cap: u32) -> bool {
    let series = series_from_resolution_type(b);
    if gk_pole_order(series.den()) != 5 {
        return false;
    }
    let h = series.expand(cap);
    h.coeffs().iter().all(|c| !c.is_negative())
}

/// Exhaustive scan over n <= n_max, l <= l_max, nondecreasing a-vectors with
/// 2 <= a_i <= l-2, keeping exactly the types that pass all four checks.
/// Results come out ordered by (n, l, a).
pub fn enumerate(n_max: usize, l_max: u32, cap: u32) -> Vec<BettiType> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for l in 5..=l_max {
            // the linear identity pins the coordinate sum
            let rhs = (n as i64 - 1) * l as i64 + 4;
            if rhs % 2 != 0 {
                continue;
            }
            let target = rhs / 2;
            let mut a = Vec::with_capacity(n);
            scan(n, l, target, 2, &mut a, &mut out, cap);
        }
    }
    out
}

fn scan(
    n: usize,
    l: u32,
    remaining: i64,
    min: u32,
    a: &mut Vec<u32>,
    out: &mut Vec<BettiType>,
    cap: u32,
) {
    let slots = (n - a.len()) as i64;
    if slots == 0 {
        if remaining == 0 {
            let b = BettiType::new(a.clone(), l).expect("scan stays in range");
            if check_linear(&b) && check_cubic(&b) && check_gaps(&b) && check_positivity(&b, cap)
            {
                out.push(b);
            }
        }
        return;
    }
    let hi = l.saturating_sub(2);
    if hi < min {
        return;
    }
    // prune by the reachable sum window
    if remaining < slots * min as i64 || remaining > slots * hi as i64 {
        return;
    }
    for v in min..=hi {
        a.push(v);
        scan(n, l, remaining - v as i64, v, a, out, cap);
        a.pop();
    }
}

/// Groups types by exact equality of their q polynomials (equivalently, of
/// the 1/q expansions). Groups keep the order of first appearance.
pub struct SeriesGroup {
    pub q: crate::hilbert::IntPoly,
    pub members: Vec<BettiType>,
}

pub fn group_by_series(types: &[BettiType]) -> Vec<SeriesGroup> {
    let mut groups: Vec<SeriesGroup> = Vec::new();
    for t in types {
        let q = series_from_resolution_type(t).den().clone();
        match groups.iter_mut().find(|g| g.q == q) {
            Some(g) => g.members.push(t.clone()),
            None => groups.push(SeriesGroup { q, members: vec![t.clone()] }),
        }
    }
    groups
}

/// Value of the k-th derivative of q at t = 1, exactly.
pub fn derivative_at_one(q: &crate::hilbert::IntPoly, k: u32) -> BigInt {
    let mut total = BigInt::zero();
    for (d, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() || (d as u32) < k {
            continue;
        }
        // falling factorial d (d-1) ... (d-k+1)
        let mut f = BigInt::from(1);
        for i in 0..k {
            f *= BigInt::from(d as u32 - i);
        }
        total += c * f;
    }
    total
}
