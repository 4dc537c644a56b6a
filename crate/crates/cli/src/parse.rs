//! Parsers for the three line-oriented input formats, with line- and
//! column-precise diagnostics, plus the emitters that make parsing
//! round-trip.
//!
//! Algebra presentation: `gens x:1 y:1` (or `x:1,0` with bidegrees), an
//! optional `order deglex x>y`, one `rel <polynomial>` per relation, and
//! `cap <D>`. Lie presentation: `liegens x y`, `bracketrel <expression>`
//! lines using `[a,b]` nesting (linear combinations allowed), optional
//! `truncate <degree>`, `cap <D>`. Complex: `modules <count>`, one
//! `shifts ...` line per module, then `map <p> rows <r> cols <c>` headers
//! followed by `entry <i> <j> <polynomial>` lines; omitted entries are
//! zero. `#` starts a comment everywhere.

use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::One;

use ncalg::complexcheck::{FreeComplex, Shift};
use ncalg::liealg::{BracketTerm, LieExpr};
use ncalg::ncpoly::{parse_poly, GeneratorTable, MonomialOrder, NcPoly, OrderKind};
use ncalg::Error as CoreError;

/// A diagnostic pinned to a line and column (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiag {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseDiag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

fn diag(line: usize, col: usize, msg: impl Into<String>) -> ParseDiag {
    ParseDiag { line, col, msg: msg.into() }
}

/// Lifts a core error raised while parsing a fragment that starts at
/// `col0` of `line`.
fn lift(line: usize, col0: usize, e: CoreError) -> ParseDiag {
    match e {
        CoreError::Parse { pos, msg } => diag(line, col0 + pos, msg),
        other => diag(line, col0, other.to_string()),
    }
}

/// Non-comment content of each line, keyed to its 1-based number.
fn content_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| {
            let text = match l.find('#') {
                Some(p) => &l[..p],
                None => l,
            };
            (i + 1, text.trim_end())
        })
        .filter(|(_, l)| !l.trim().is_empty())
        .collect()
}

/// Column (1-based) where `word` starts inside `line`.
fn col_of(line: &str, word: &str) -> usize {
    line.find(word).map(|p| p + 1).unwrap_or(1)
}

#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub gens: Arc<GeneratorTable>,
    pub order: MonomialOrder,
    pub relations: Vec<NcPoly>,
    pub cap: Option<u32>,
}

pub fn parse_algebra_str(src: &str) -> Result<AlgebraSpec, ParseDiag> {
    let mut gens: Option<Arc<GeneratorTable>> = None;
    let mut order_spec: Option<(usize, String)> = None;
    let mut rel_specs: Vec<(usize, usize, String)> = Vec::new();
    let mut cap: Option<u32> = None;

    for (ln, line) in content_lines(src) {
        let mut parts = line.split_whitespace();
        let keyword = parts.next().unwrap();
        let rest = line[line.find(keyword).unwrap() + keyword.len()..].trim_start();
        let rest_col = col_of(line, rest.split_whitespace().next().unwrap_or(""));
        match keyword {
            "gens" => {
                if gens.is_some() {
                    return Err(diag(ln, 1, "duplicate gens section"));
                }
                gens = Some(Arc::new(parse_gens(ln, rest)?));
            }
            "order" => {
                if order_spec.is_some() {
                    return Err(diag(ln, 1, "duplicate order section"));
                }
                order_spec = Some((ln, rest.to_string()));
            }
            "rel" => rel_specs.push((ln, rest_col, rest.to_string())),
            "cap" => {
                if cap.is_some() {
                    return Err(diag(ln, 1, "duplicate cap section"));
                }
                cap = Some(
                    rest.parse::<u32>()
                        .map_err(|_| diag(ln, rest_col, "cap must be a non-negative integer"))?,
                );
            }
            other => return Err(diag(ln, 1, format!("unknown keyword {other:?}"))),
        }
    }

    let gens = gens.ok_or_else(|| diag(1, 1, "missing gens section"))?;
    let order = match order_spec {
        Some((ln, spec)) => parse_order(ln, &spec, &gens)?,
        None => MonomialOrder::deglex(&gens),
    };
    let mut relations = Vec::new();
    for (ln, col, src) in rel_specs {
        let p = parse_poly(&src, &gens).map_err(|e| lift(ln, col, e))?;
        // surface inhomogeneity here, naming the offending relation
        p.homogeneous_degree().map_err(|e| lift(ln, col, e))?;
        p.homogeneous_bidegree().map_err(|e| lift(ln, col, e))?;
        relations.push(p);
    }
    Ok(AlgebraSpec { gens, order, relations, cap })
}

fn parse_gens(ln: usize, rest: &str) -> Result<GeneratorTable, ParseDiag> {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    let mut bidegrees: Vec<Option<(u32, u32)>> = Vec::new();
    for tok in rest.split_whitespace() {
        let col = col_of(rest, tok);
        let (name, spec) = match tok.split_once(':') {
            Some(p) => p,
            None => (tok, "1"),
        };
        names.push(name.to_string());
        match spec.split_once(',') {
            Some((a, b)) => {
                let a: u32 =
                    a.parse().map_err(|_| diag(ln, col, "bad bidegree component"))?;
                let b: u32 =
                    b.parse().map_err(|_| diag(ln, col, "bad bidegree component"))?;
                weights.push(a + b);
                bidegrees.push(Some((a, b)));
            }
            None => {
                let w: u32 = spec
                    .parse()
                    .map_err(|_| diag(ln, col, format!("bad weight {spec:?}")))?;
                weights.push(w);
                bidegrees.push(None);
            }
        }
    }
    if names.is_empty() {
        return Err(diag(ln, 1, "gens section lists no generators"));
    }
    let bi = if bidegrees.iter().all(|b| b.is_some()) {
        Some(bidegrees.into_iter().map(|b| b.unwrap()).collect())
    } else if bidegrees.iter().all(|b| b.is_none()) {
        None
    } else {
        return Err(diag(ln, 1, "either all generators carry bidegrees or none do"));
    };
    GeneratorTable::new(names, weights, bi).map_err(|e| lift(ln, 1, e))
}

fn parse_order(
    ln: usize,
    spec: &str,
    gens: &Arc<GeneratorTable>,
) -> Result<MonomialOrder, ParseDiag> {
    let mut parts = spec.split_whitespace();
    let kind = match parts.next() {
        Some("deglex") => OrderKind::DegLex,
        Some("degrevlex") => OrderKind::DegRevLex,
        Some("weighted-deglex") => OrderKind::WeightedDegLex,
        other => {
            return Err(diag(
                ln,
                col_of(spec, other.unwrap_or("")),
                "order kind must be deglex, degrevlex or weighted-deglex",
            ))
        }
    };
    let prec_src = parts.collect::<Vec<_>>().join(" ");
    let mut precedence = Vec::new();
    for name in prec_src.split('>') {
        let name = name.trim();
        let g = gens
            .index_of(name)
            .ok_or_else(|| diag(ln, col_of(spec, name), format!("unknown generator {name:?}")))?;
        precedence.push(g as u32);
    }
    MonomialOrder::new(kind, precedence, gens.len()).map_err(|e| lift(ln, 1, e))
}

/// Parses an order given on the command line, e.g. `deglex x>y`.
pub fn parse_order_flag(
    src: &str,
    gens: &Arc<GeneratorTable>,
) -> Result<MonomialOrder, ParseDiag> {
    parse_order(1, src, gens)
}

pub fn emit_algebra(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    out.push_str("gens");
    for i in 0..spec.gens.len() {
        match spec.gens.bidegree(i) {
            Some((a, b)) => out.push_str(&format!(" {}:{a},{b}", spec.gens.name(i))),
            None => out.push_str(&format!(" {}:{}", spec.gens.name(i), spec.gens.weight(i))),
        }
    }
    out.push('\n');
    let kind = match spec.order.kind() {
        OrderKind::DegLex => "deglex",
        OrderKind::DegRevLex => "degrevlex",
        OrderKind::WeightedDegLex => "weighted-deglex",
    };
    let prec: Vec<&str> =
        spec.order.precedence().iter().map(|&g| spec.gens.name(g as usize)).collect();
    out.push_str(&format!("order {kind} {}\n", prec.join(">")));
    for r in &spec.relations {
        out.push_str(&format!("rel {r}\n"));
    }
    if let Some(cap) = spec.cap {
        out.push_str(&format!("cap {cap}\n"));
    }
    out
}

#[derive(Debug, Clone)]
pub struct LieSpec {
    pub gens: Arc<GeneratorTable>,
    pub relators: Vec<LieExpr>,
    pub truncate: Option<u32>,
    pub cap: Option<u32>,
}

pub fn parse_lie_str(src: &str) -> Result<LieSpec, ParseDiag> {
    let mut gens: Option<Arc<GeneratorTable>> = None;
    let mut relator_specs: Vec<(usize, usize, String)> = Vec::new();
    let mut truncate = None;
    let mut cap = None;
    for (ln, line) in content_lines(src) {
        let mut parts = line.split_whitespace();
        let keyword = parts.next().unwrap();
        let rest = line[line.find(keyword).unwrap() + keyword.len()..].trim_start();
        let rest_col = col_of(line, rest.split_whitespace().next().unwrap_or(""));
        match keyword {
            "liegens" => {
                if gens.is_some() {
                    return Err(diag(ln, 1, "duplicate liegens section"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(diag(ln, 1, "liegens lists no generators"));
                }
                gens = Some(Arc::new(
                    GeneratorTable::unit_weights(&names).map_err(|e| lift(ln, 1, e))?,
                ));
            }
            "bracketrel" => relator_specs.push((ln, rest_col, rest.to_string())),
            "truncate" => {
                truncate = Some(
                    rest.parse::<u32>()
                        .map_err(|_| diag(ln, rest_col, "truncate must be an integer"))?,
                );
            }
            "cap" => {
                cap = Some(
                    rest.parse::<u32>()
                        .map_err(|_| diag(ln, rest_col, "cap must be an integer"))?,
                );
            }
            other => return Err(diag(ln, 1, format!("unknown keyword {other:?}"))),
        }
    }
    let gens = gens.ok_or_else(|| diag(1, 1, "missing liegens section"))?;
    let mut relators = Vec::new();
    for (ln, col, src) in relator_specs {
        relators.push(parse_bracket_expr(&src, &gens).map_err(|e| lift(ln, col, e))?);
    }
    Ok(LieSpec { gens, relators, truncate, cap })
}

/// `[a,b]`-nested bracket expressions with optional rational coefficients
/// and `+`/`-` between terms.
pub fn parse_bracket_expr(
    src: &str,
    gens: &Arc<GeneratorTable>,
) -> Result<LieExpr, CoreError> {
    let bytes = src.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<(BigRational, BracketTerm)> = Vec::new();

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && (bytes[*pos] == b' ' || bytes[*pos] == b'\t') {
            *pos += 1;
        }
    }

    fn parse_operand(
        src: &str,
        bytes: &[u8],
        pos: &mut usize,
        gens: &Arc<GeneratorTable>,
    ) -> Result<BracketTerm, CoreError> {
        skip_ws(bytes, pos);
        if *pos >= bytes.len() {
            return Err(CoreError::Parse { pos: *pos, msg: "expected a bracket or name".into() });
        }
        if bytes[*pos] == b'[' {
            *pos += 1;
            let a = parse_operand(src, bytes, pos, gens)?;
            skip_ws(bytes, pos);
            if *pos >= bytes.len() || bytes[*pos] != b',' {
                return Err(CoreError::Parse { pos: *pos, msg: "expected ','".into() });
            }
            *pos += 1;
            let b = parse_operand(src, bytes, pos, gens)?;
            skip_ws(bytes, pos);
            if *pos >= bytes.len() || bytes[*pos] != b']' {
                return Err(CoreError::Parse { pos: *pos, msg: "expected ']'".into() });
            }
            *pos += 1;
            Ok(BracketTerm::of(a, b))
        } else {
            let start = *pos;
            while *pos < bytes.len()
                && ((bytes[*pos] as char).is_alphanumeric() || bytes[*pos] == b'_')
            {
                *pos += 1;
            }
            if start == *pos {
                return Err(CoreError::Parse {
                    pos: start,
                    msg: "expected a bracket or name".into(),
                });
            }
            let name = &src[start..*pos];
            let g = gens.index_of(name).ok_or_else(|| CoreError::Parse {
                pos: start,
                msg: format!("unknown generator {name:?}"),
            })?;
            Ok(BracketTerm::gen(g))
        }
    }

    loop {
        skip_ws(bytes, &mut pos);
        let mut sign = BigRational::one();
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(bytes, &mut pos);
        } else if !terms.is_empty() {
            if pos >= bytes.len() {
                break;
            }
            return Err(CoreError::Parse { pos, msg: "expected + or - between terms".into() });
        }
        // optional rational coefficient followed by '*'
        let mut coeff = sign;
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut numer: num::BigInt = src[start..pos].parse().unwrap();
            let mut denom = num::BigInt::one();
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let dstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                denom = src[dstart..pos]
                    .parse()
                    .map_err(|_| CoreError::Parse { pos: dstart, msg: "bad denominator".into() })?;
            }
            if denom == num::BigInt::from(0) {
                return Err(CoreError::Parse { pos: start, msg: "zero denominator".into() });
            }
            numer *= coeff.numer();
            coeff = BigRational::new(numer, denom * coeff.denom());
            skip_ws(bytes, &mut pos);
            if pos >= bytes.len() || bytes[pos] != b'*' {
                return Err(CoreError::Parse { pos, msg: "expected '*' after coefficient".into() });
            }
            pos += 1;
        }
        let term = parse_operand(src, bytes, &mut pos, gens)?;
        terms.push((coeff, term));
        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() {
            break;
        }
    }
    if terms.is_empty() {
        return Err(CoreError::Parse { pos: 0, msg: "empty bracket expression".into() });
    }
    Ok(LieExpr::new(terms))
}

pub fn parse_complex_str(
    src: &str,
    gens: &Arc<GeneratorTable>,
) -> Result<FreeComplex, ParseDiag> {
    let lines = content_lines(src);
    let mut it = lines.into_iter().peekable();

    let (ln, first) = it
        .next()
        .ok_or_else(|| diag(1, 1, "empty complex file"))?;
    let count: usize = first
        .trim()
        .strip_prefix("modules")
        .map(|r| r.trim())
        .ok_or_else(|| diag(ln, 1, "expected 'modules <count>'"))?
        .parse()
        .map_err(|_| diag(ln, 1, "bad module count"))?;

    let mut modules: Vec<Vec<Shift>> = Vec::with_capacity(count);
    for _ in 0..count {
        let (ln, line) = it
            .next()
            .ok_or_else(|| diag(0, 1, "missing shifts line"))?;
        let rest = line
            .trim()
            .strip_prefix("shifts")
            .ok_or_else(|| diag(ln, 1, "expected a 'shifts' line"))?;
        let mut shifts = Vec::new();
        for tok in rest.split_whitespace() {
            let col = col_of(line, tok);
            let shift = match tok.split_once(',') {
                Some((a, b)) => {
                    let a: u32 = a.parse().map_err(|_| diag(ln, col, "bad shift"))?;
                    let b: u32 = b.parse().map_err(|_| diag(ln, col, "bad shift"))?;
                    Shift::bigraded(a, b)
                }
                None => Shift::graded(
                    tok.parse().map_err(|_| diag(ln, col, "bad shift"))?,
                ),
            };
            shifts.push(shift);
        }
        modules.push(shifts);
    }

    let mut maps: Vec<Vec<Vec<NcPoly>>> = Vec::new();
    while let Some((ln, line)) = it.next() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 6 || toks[0] != "map" || toks[2] != "rows" || toks[4] != "cols" {
            return Err(diag(ln, 1, "expected 'map <p> rows <r> cols <c>'"));
        }
        let p: usize = toks[1].parse().map_err(|_| diag(ln, 1, "bad map index"))?;
        if p != maps.len() + 1 {
            return Err(diag(ln, 1, format!("expected map {}, found map {p}", maps.len() + 1)));
        }
        let rows: usize = toks[3].parse().map_err(|_| diag(ln, 1, "bad row count"))?;
        let cols: usize = toks[5].parse().map_err(|_| diag(ln, 1, "bad column count"))?;
        let mut matrix = vec![vec![NcPoly::zero(gens); cols]; rows];
        while it.peek().is_some_and(|(_, l)| l.trim_start().starts_with("entry")) {
            let (eln, eline) = it.next().unwrap();
            let mut ps = eline.split_whitespace();
            ps.next(); // entry
            let i: usize = ps
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| diag(eln, 1, "bad entry row"))?;
            let j: usize = ps
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| diag(eln, 1, "bad entry column"))?;
            if i >= rows || j >= cols {
                return Err(diag(eln, 1, format!("entry ({i}, {j}) outside {rows} x {cols}")));
            }
            let poly_src = ps.collect::<Vec<_>>().join(" ");
            let col0 = col_of(eline, poly_src.split_whitespace().next().unwrap_or(""));
            matrix[i][j] = parse_poly(&poly_src, gens).map_err(|e| lift(eln, col0, e))?;
        }
        maps.push(matrix);
    }

    FreeComplex::new(gens, modules, maps).map_err(|e| lift(1, 1, e))
}

pub fn emit_complex(c: &FreeComplex) -> String {
    let mut out = String::new();
    out.push_str(&format!("modules {}\n", c.modules().len()));
    for m in c.modules() {
        out.push_str("shifts");
        for s in m {
            match s.bidegree {
                Some((a, b)) => out.push_str(&format!(" {a},{b}")),
                None => out.push_str(&format!(" {}", s.degree)),
            }
        }
        out.push('\n');
    }
    for (pm, map) in c.maps().iter().enumerate() {
        let rows = map.len();
        let cols = map.first().map(|r| r.len()).unwrap_or(0);
        out.push_str(&format!("map {} rows {rows} cols {cols}\n", pm + 1));
        for (i, row) in map.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    out.push_str(&format!("entry {i} {j} {e}\n"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALG: &str = "\
# two generators
gens x:1 y:1
order deglex x>y
rel x*y - y*x
cap 6
";

    #[test]
    fn algebra_round_trip() {
        let spec = parse_algebra_str(ALG).unwrap();
        assert_eq!(spec.gens.len(), 2);
        assert_eq!(spec.relations.len(), 1);
        assert_eq!(spec.cap, Some(6));
        let emitted = emit_algebra(&spec);
        let again = parse_algebra_str(&emitted).unwrap();
        assert_eq!(again.gens, spec.gens);
        assert_eq!(again.order, spec.order);
        assert_eq!(again.relations, spec.relations);
        assert_eq!(again.cap, spec.cap);
    }

    #[test]
    fn inhomogeneous_relation_is_diagnosed() {
        let src = "gens x:1 y:1\nrel x + y^2\ncap 4\n";
        let err = parse_algebra_str(src).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.msg.contains("inhomogeneous"), "{err}");
    }

    #[test]
    fn unknown_generator_is_located() {
        let src = "gens x:1 y:1\nrel x*q\n";
        let err = parse_algebra_str(src).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.col, 7);
    }

    #[test]
    fn duplicate_sections_rejected() {
        let src = "gens x:1\ngens y:1\n";
        assert!(parse_algebra_str(src).unwrap_err().msg.contains("duplicate"));
        let src = "gens x:1\ncap 3\ncap 4\n";
        assert!(parse_algebra_str(src).unwrap_err().msg.contains("duplicate"));
    }

    #[test]
    fn empty_relation_list_is_a_free_algebra() {
        let spec = parse_algebra_str("gens x:1 y:1\ncap 5\n").unwrap();
        assert!(spec.relations.is_empty());
    }

    #[test]
    fn bigraded_gens() {
        let spec = parse_algebra_str("gens x:1,0 y:0,1\ncap 5\n").unwrap();
        assert!(spec.gens.is_bigraded());
        assert_eq!(spec.gens.bidegree(1), Some((0, 1)));
    }

    #[test]
    fn lie_files() {
        let src = "liegens x y\nbracketrel [x,[x,y]]\ntruncate 5\ncap 6\n";
        let spec = parse_lie_str(src).unwrap();
        assert_eq!(spec.gens.len(), 2);
        assert_eq!(spec.relators.len(), 1);
        assert_eq!(spec.truncate, Some(5));

        let src = "liegens x y z w\nbracketrel [x,y] - [z,w]\ncap 4\n";
        let spec = parse_lie_str(src).unwrap();
        assert_eq!(spec.relators.len(), 1);

        let err = parse_lie_str("liegens x y\nbracketrel [x,q]\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.msg.contains("unknown generator"));
    }

    #[test]
    fn complex_round_trip() {
        let gens = Arc::new(GeneratorTable::unit_weights(&["x", "y"]).unwrap());
        let src = "\
modules 3
shifts 0
shifts 1 1
shifts 2
map 1 rows 1 cols 2
entry 0 0 x
entry 0 1 y
map 2 rows 2 cols 1
entry 0 0 y
entry 1 0 -x
";
        let c = parse_complex_str(src, &gens).unwrap();
        assert_eq!(c.modules().len(), 3);
        let emitted = emit_complex(&c);
        let again = parse_complex_str(&emitted, &gens).unwrap();
        assert_eq!(again.modules(), c.modules());
        assert_eq!(again.maps(), c.maps());
    }
}
