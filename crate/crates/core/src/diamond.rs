//! Reduction systems on the free algebra and their completion.
//!
//! A [`Rule`] rewrites its lead word to a polynomial of strictly smaller
//! monomials. [`RewriteSystem::complete`] runs the Buchberger-style loop on
//! overlap and inclusion ambiguities, adding the normal form of each
//! unresolvable S-difference as a new rule until every ambiguity with
//! witness inside the degree cap resolves. The resulting system certifies
//! unique normal forms, ideal membership and normal-word counts up to the
//! cap, and every construction here is deterministic so that certificates
//! are reproducible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{word_degree, GeneratorTable, MonomialOrder, NcPoly, Word};

/// A reduction pair: the lead word rewrites to the tail polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    lead: Word,
    tail: NcPoly,
}

impl Rule {
    pub fn new(lead: Word, tail: NcPoly, order: &MonomialOrder) -> Result<Self> {
        if !lead.is_valid(tail.gens()) || lead.is_empty() {
            return Err(Error::Structural("rule lead must be a nonempty valid word".into()));
        }
        for (w, _) in tail.terms() {
            if order.compare(tail.gens(), w, &lead) != std::cmp::Ordering::Less {
                return Err(Error::Structural(format!(
                    "tail monomial {} is not below the lead {}",
                    w.display(tail.gens()),
                    lead.display(tail.gens())
                )));
            }
        }
        Ok(Rule { lead, tail })
    }

    pub fn lead(&self) -> &Word {
        &self.lead
    }

    pub fn tail(&self) -> &NcPoly {
        &self.tail
    }

    /// The rule as the polynomial `lead - tail`.
    pub fn as_poly(&self) -> NcPoly {
        NcPoly::monomial(self.tail.gens(), self.lead.clone(), BigRational::one())
            .expect("lead validated")
            .sub(&self.tail)
            .expect("same table")
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lead.display(self.tail.gens()), self.tail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A word admitting two reductions.
///
/// For an overlap, `left.lead = A·B` and `right.lead = B·C` with all three
/// parts nonempty, the witness is `A·B·C` and `offset = |A|`. For an
/// inclusion, `right.lead` occurs inside `left.lead` at `offset` and the
/// witness is `left.lead` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub left: usize,
    pub right: usize,
    pub witness: Word,
    pub offset: usize,
}

/// A reduction system together with its confluence certificate: every
/// ambiguity whose witness has degree at most `degree_cap` resolves.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    gens: Arc<GeneratorTable>,
    order: MonomialOrder,
    rules: Vec<Rule>,
    degree_cap: u32,
    ambiguities_checked: usize,
}

/// Finds the redex the deterministic strategy picks inside one word:
/// leftmost occurrence of any lead, lowest rule index on ties.
fn find_redex(w: &Word, rules: &[Rule]) -> Option<(usize, usize)> {
    for pos in 0..w.len() {
        for (ri, rule) in rules.iter().enumerate() {
            if w.matches_at(&rule.lead, pos) {
                return Some((pos, ri));
            }
        }
    }
    None
}

/// One reduction step at a fixed term and redex: replaces
/// `c·(A·lead·C)` by `c·(A·tail·C)`.
fn substitute(
    p: &NcPoly,
    word: &Word,
    coeff: &BigRational,
    pos: usize,
    rule: &Rule,
) -> NcPoly {
    let gens = p.gens();
    let prefix = word.slice(0..pos);
    let suffix = word.slice(pos + rule.lead.len()..word.len());
    let mut delta = vec![(word.clone(), -coeff.clone())];
    for (tw, tc) in rule.tail.terms() {
        delta.push((prefix.concat(tw).concat(&suffix), coeff * tc));
    }
    p.add(&NcPoly::from_terms(gens, delta).expect("valid words")).expect("same table")
}

/// Full reduction with the deterministic strategy: highest reducible
/// monomial first, leftmost occurrence, lowest rule index. Terminates
/// because every step replaces a monomial by strictly smaller ones.
fn reduce_full(p: &NcPoly, rules: &[Rule], order: &MonomialOrder) -> NcPoly {
    let gens = Arc::clone(p.gens());
    let mut p = p.clone();
    loop {
        let mut best: Option<(Word, BigRational, usize, usize)> = None;
        for (w, c) in p.terms() {
            if let Some((pos, ri)) = find_redex(w, rules) {
                let better = match &best {
                    None => true,
                    Some((bw, ..)) => order.compare(&gens, w, bw) == std::cmp::Ordering::Greater,
                };
                if better {
                    best = Some((w.clone(), c.clone(), pos, ri));
                }
            }
        }
        match best {
            None => return p,
            Some((w, c, pos, ri)) => p = substitute(&p, &w, &c, pos, &rules[ri]),
        }
    }
}

/// Orients a nonzero polynomial into a monic rule: the maximal monomial
/// becomes the lead, the rest is divided by its coefficient.
fn orient(p: &NcPoly, order: &MonomialOrder) -> Result<Rule> {
    let (lead, c) = p
        .leading(order)
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or_else(|| Error::Input("cannot orient the zero polynomial".into()))?;
    let scaled = p.scale(&(-BigRational::one() / c));
    let tail = scaled
        .add(&NcPoly::monomial(p.gens(), lead.clone(), BigRational::one())?)
        .expect("same table");
    Rule::new(lead, tail, order)
}

/// All overlap and inclusion ambiguities with witness degree at most `cap`,
/// in deterministic order: witness degree, then witness, then structure.
pub fn find_ambiguities(rules: &[Rule], gens: &GeneratorTable, cap: u32) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        for (j, rj) in rules.iter().enumerate() {
            // Overlaps: a proper nonempty suffix of lead_i equals a proper
            // nonempty prefix of lead_j.
            for a_len in 1..ri.lead.len() {
                let b_len = ri.lead.len() - a_len;
                if rj.lead.len() <= b_len {
                    continue;
                }
                let b = ri.lead.slice(a_len..ri.lead.len());
                if rj.lead.matches_at(&b, 0) {
                    let witness = ri.lead.concat(&rj.lead.slice(b_len..rj.lead.len()));
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        left: i,
                        right: j,
                        witness,
                        offset: a_len,
                    });
                }
            }
            // Inclusions: lead_j a proper factor of lead_i.
            if i != j && rj.lead.len() < ri.lead.len() {
                for offset in 0..=ri.lead.len() - rj.lead.len() {
                    if ri.lead.matches_at(&rj.lead, offset) {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            left: i,
                            right: j,
                            witness: ri.lead.clone(),
                            offset,
                        });
                    }
                }
            }
        }
    }
    out.retain(|a| word_degree(&a.witness, gens).expect("valid") <= cap);
    out.sort_by(|a, b| {
        let da = word_degree(&a.witness, gens).expect("valid");
        let db = word_degree(&b.witness, gens).expect("valid");
        da.cmp(&db)
            .then_with(|| a.witness.cmp(&b.witness))
            .then_with(|| a.kind.cmp(&b.kind))
            .then_with(|| (a.left, a.right, a.offset).cmp(&(b.left, b.right, b.offset)))
    });
    out
}

/// The difference of the two one-step reductions of an ambiguity's witness.
fn s_difference(amb: &Ambiguity, rules: &[Rule]) -> NcPoly {
    let rl = &rules[amb.left];
    let rr = &rules[amb.right];
    let gens = rl.tail.gens();
    match amb.kind {
        AmbiguityKind::Overlap => {
            // witness = A·B·C, lead_l = A·B, lead_r = B·C
            let c_word = amb.witness.slice(rl.lead.len()..amb.witness.len());
            let a_word = amb.witness.slice(0..amb.offset);
            let via_left = rl
                .tail
                .mul(&NcPoly::monomial(gens, c_word, BigRational::one()).unwrap())
                .expect("same table");
            let via_right = NcPoly::monomial(gens, a_word, BigRational::one())
                .unwrap()
                .mul(&rr.tail)
                .expect("same table");
            via_left.sub(&via_right).expect("same table")
        }
        AmbiguityKind::Inclusion => {
            // lead_l = A·lead_r·C
            let a_word = amb.witness.slice(0..amb.offset);
            let c_word = amb.witness.slice(amb.offset + rr.lead.len()..amb.witness.len());
            let via_right = NcPoly::monomial(gens, a_word, BigRational::one())
                .unwrap()
                .mul(&rr.tail)
                .expect("same table")
                .mul(&NcPoly::monomial(gens, c_word, BigRational::one()).unwrap())
                .expect("same table");
            rl.tail.sub(&via_right).expect("same table")
        }
    }
}

/// Reduces every rule against the others until none changes: leads become
/// minimal and tails irreducible. Rules end up sorted by their leads.
fn interreduce(rules: &mut Vec<Rule>, order: &MonomialOrder, gens: &GeneratorTable) {
    loop {
        let mut changed = false;
        'scan: for i in 0..rules.len() {
            let p = rules[i].as_poly();
            let others: Vec<Rule> =
                rules.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, r)| r.clone()).collect();
            let nf = reduce_full(&p, &others, order);
            if nf != p {
                rules.remove(i);
                if !nf.is_zero() {
                    rules.push(orient(&nf, order).expect("nonzero"));
                }
                changed = true;
                break 'scan;
            }
        }
        if !changed {
            break;
        }
    }
    rules.sort_by(|a, b| order.compare(gens, &a.lead, &b.lead));
}

impl RewriteSystem {
    /// Completion: orients the relations and saturates ambiguities up to the
    /// cap. Relations must be nonzero and homogeneous (in bidegree too when
    /// the table is bigraded) with degree at most the cap.
    ///
    /// Deterministic: ambiguities are processed in [`find_ambiguities`]
    /// order and the rule set is interreduced after every addition, so
    /// permuting the input relations yields the same system.
    pub fn complete(
        relations: &[NcPoly],
        order: &MonomialOrder,
        cap: u32,
    ) -> Result<RewriteSystem> {
        let gens = match relations.first() {
            Some(r) => Arc::clone(r.gens()),
            None => {
                return Err(Error::Input(
                    "complete needs at least the generator table; pass a free-algebra system \
                     via RewriteSystem::free instead"
                        .into(),
                ))
            }
        };
        for (k, r) in relations.iter().enumerate() {
            if r.gens() != &gens {
                return Err(Error::Structural("relations over different generator tables".into()));
            }
            if r.is_zero() {
                return Err(Error::Input(format!("relation {} is zero", k + 1)));
            }
            let d = r.homogeneous_degree()?.unwrap();
            r.homogeneous_bidegree()?;
            if d > cap {
                return Err(Error::CapExceeded { needed: d, certified: cap });
            }
        }

        let mut rules: Vec<Rule> = Vec::new();
        for r in relations {
            rules.push(orient(r, order)?);
        }
        // Saturation loop. The lead-word ideal below the cap grows strictly
        // with every added rule, so this terminates.
        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(guard < 100_000, "completion failed to terminate");
            interreduce(&mut rules, order, &gens);
            let ambs = find_ambiguities(&rules, &gens, cap);
            let mut residual = None;
            for amb in &ambs {
                let nf = reduce_full(&s_difference(amb, &rules), &rules, order);
                if !nf.is_zero() {
                    residual = Some(nf);
                    break;
                }
            }
            match residual {
                Some(nf) => rules.push(orient(&nf, order)?),
                None => {
                    return Ok(RewriteSystem {
                        gens,
                        order: order.clone(),
                        rules,
                        degree_cap: cap,
                        ambiguities_checked: ambs.len(),
                    })
                }
            }
        }
    }

    /// The free algebra: no rules, trivially confluent.
    pub fn free(gens: &Arc<GeneratorTable>, order: MonomialOrder, cap: u32) -> RewriteSystem {
        RewriteSystem {
            gens: Arc::clone(gens),
            order,
            rules: Vec::new(),
            degree_cap: cap,
            ambiguities_checked: 0,
        }
    }

    /// Wraps an explicit rule list, verifying the interreduction invariants
    /// and certifying confluence up to the cap.
    pub fn from_rules(
        gens: &Arc<GeneratorTable>,
        order: MonomialOrder,
        rules: Vec<Rule>,
        cap: u32,
    ) -> Result<RewriteSystem> {
        for (i, r) in rules.iter().enumerate() {
            if r.tail.gens() != gens {
                return Err(Error::Structural("rule over a different generator table".into()));
            }
            if word_degree(&r.lead, gens)? > cap {
                return Err(Error::CapExceeded {
                    needed: word_degree(&r.lead, gens)?,
                    certified: cap,
                });
            }
            for (j, other) in rules.iter().enumerate() {
                if i != j && r.lead.find_factor(&other.lead).is_some() {
                    return Err(Error::Structural(format!(
                        "rule leads not interreduced: {} contains {}",
                        r.lead.display(gens),
                        other.lead.display(gens)
                    )));
                }
            }
            let others: Vec<Rule> =
                rules.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect();
            if reduce_full(&r.tail, &others, &order) != r.tail {
                return Err(Error::Structural(format!(
                    "tail of rule {} is reducible by the other rules",
                    i + 1
                )));
            }
        }
        let ambs = find_ambiguities(&rules, gens, cap);
        for amb in &ambs {
            let nf = reduce_full(&s_difference(amb, &rules), &rules, &order);
            if !nf.is_zero() {
                return Err(Error::NotConfluent {
                    witness: amb.witness.display(gens).to_string(),
                });
            }
        }
        Ok(RewriteSystem {
            gens: Arc::clone(gens),
            order,
            rules,
            degree_cap: cap,
            ambiguities_checked: ambs.len(),
        })
    }

    pub fn gens(&self) -> &Arc<GeneratorTable> {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn leads(&self) -> Vec<Word> {
        self.rules.iter().map(|r| r.lead.clone()).collect()
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    /// Number of ambiguities checked (all resolved) up to the cap.
    pub fn ambiguities_checked(&self) -> usize {
        self.ambiguities_checked
    }

    fn check_in_cap(&self, p: &NcPoly) -> Result<()> {
        if p.gens() != &self.gens {
            return Err(Error::Structural("polynomial over a different generator table".into()));
        }
        let d = p.max_degree();
        if d > self.degree_cap {
            return Err(Error::CapExceeded { needed: d, certified: self.degree_cap });
        }
        Ok(())
    }

    /// The unique irreducible representative of `p` modulo the ideal, for
    /// polynomials inside the cap.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        self.check_in_cap(p)?;
        Ok(reduce_full(p, &self.rules, &self.order))
    }

    /// `true` iff `p` lies in the two-sided ideal of the relations.
    pub fn ideal_member(&self, p: &NcPoly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Normal form of a single word through a cache. On a certified system
    /// the result equals [`RewriteSystem::normal_form`] of the word whatever
    /// order the worklist pops in; the cache makes repeated slice-matrix
    /// assembly cheap.
    pub fn word_normal_form_cached(&self, w: &Word, cache: &mut NfCache) -> Result<NcPoly> {
        let d = word_degree(w, &self.gens)?;
        if d > self.degree_cap {
            return Err(Error::CapExceeded { needed: d, certified: self.degree_cap });
        }
        Ok(self.nf_word(w, cache))
    }

    fn nf_word(&self, w: &Word, cache: &mut NfCache) -> NcPoly {
        if let Some(hit) = cache.map.get(w) {
            return hit.clone();
        }
        let mut irreducible = NcPoly::zero(&self.gens);
        let mut pending: BTreeMap<Word, BigRational> = BTreeMap::new();
        pending.insert(w.clone(), BigRational::one());
        while let Some((word, coeff)) = pending.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            if let Some(hit) = cache.map.get(&word) {
                irreducible = irreducible.combine(hit, &coeff).expect("same table");
                continue;
            }
            match find_redex(&word, &self.rules) {
                None => {
                    irreducible = irreducible
                        .add(&NcPoly::monomial(&self.gens, word, coeff).unwrap())
                        .expect("same table");
                }
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let prefix = word.slice(0..pos);
                    let suffix = word.slice(pos + rule.lead.len()..word.len());
                    for (tw, tc) in rule.tail.terms() {
                        let nw = prefix.concat(tw).concat(&suffix);
                        let entry = pending.entry(nw).or_insert_with(BigRational::zero);
                        *entry += &coeff * tc;
                    }
                }
            }
        }
        cache.map.insert(w.clone(), irreducible.clone());
        irreducible
    }

    /// Cached normal form of a full polynomial.
    pub fn normal_form_cached(&self, p: &NcPoly, cache: &mut NfCache) -> Result<NcPoly> {
        self.check_in_cap(p)?;
        let mut out = NcPoly::zero(&self.gens);
        for (w, c) in p.terms() {
            let nf = self.nf_word(w, cache);
            out = out.combine(&nf, c).expect("same table");
        }
        Ok(out)
    }
}

/// Memo table for [`RewriteSystem::word_normal_form_cached`]; use one cache
/// per system.
#[derive(Default)]
pub struct NfCache {
    map: HashMap<Word, NcPoly>,
}

impl NfCache {
    pub fn new() -> Self {
        NfCache::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_poly;

    fn xy() -> Arc<GeneratorTable> {
        Arc::new(GeneratorTable::unit_weights(&["x", "y"]).unwrap())
    }

    use crate::testsupport::{extremal_relations, extremal_system};

    fn poly(s: &str, g: &Arc<GeneratorTable>) -> NcPoly {
        parse_poly(s, g).unwrap()
    }

    #[test]
    fn single_rule_normal_form() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        let rule = Rule::new(
            Word::from_indices(&[0, 0, 1]),
            poly("y*x^2", &g),
            &order,
        )
        .unwrap();
        let s = RewriteSystem::from_rules(&g, order, vec![rule], 10).unwrap();
        let nf = s.normal_form(&poly("x^2*y", &g)).unwrap();
        assert_eq!(nf, poly("y*x^2", &g));
        assert!(s.normal_form(&NcPoly::zero(&g)).unwrap().is_zero());
    }

    #[test]
    fn cap_exceeded_reported() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        let s = RewriteSystem::free(&g, order, 3);
        let p = poly("x^4", &g);
        assert_eq!(
            s.normal_form(&p),
            Err(Error::CapExceeded { needed: 4, certified: 3 })
        );
        assert!(s.ideal_member(&p).is_err());
    }

    #[test]
    fn ambiguities_of_the_extremal_leads() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        let zero = NcPoly::zero(&g);
        let w1 = Rule::new(Word::from_indices(&[0, 0, 1]), zero.clone(), &order).unwrap();
        let w2 = Rule::new(Word::from_indices(&[0, 1, 1, 1]), zero.clone(), &order).unwrap();
        // W1 = x^2y, W2 = xy^3 overlap on the witness x^2y^3
        let ambs = find_ambiguities(&[w1.clone(), w2.clone()], &g, 20);
        let expected = Word::from_indices(&[0, 0, 1, 1, 1]);
        assert!(ambs.iter().any(|a| a.witness == expected));

        // W3 = xyxyxy^2, W2 = xy^3 overlap on xyxyxy^3
        let w3 =
            Rule::new(Word::from_indices(&[0, 1, 0, 1, 0, 1, 1]), zero.clone(), &order).unwrap();
        let ambs = find_ambiguities(&[w3, w2], &g, 20);
        let expected = Word::from_indices(&[0, 1, 0, 1, 0, 1, 1, 1]);
        assert!(ambs.iter().any(|a| a.witness == expected));

        // x^2y has no self-overlap
        let ambs = find_ambiguities(&[w1], &g, 20);
        assert!(ambs.is_empty());
    }

    #[test]
    fn extremal_completion_has_four_rules() {
        let s = extremal_system(15);
        let g = s.gens().clone();
        let mut leads: Vec<String> =
            s.leads().iter().map(|w| w.display(&g).to_string()).collect();
        leads.sort();
        let mut expected = vec!["x^2*y", "x*y^3", "x*y*x*y*x*y^2", "x*y*x*y^2*x*y^2"];
        expected.sort_unstable();
        assert_eq!(leads, expected);
        assert!(s.ambiguities_checked() > 0);
    }

    #[test]
    fn extremal_normal_forms() {
        let s = extremal_system(15);
        let g = s.gens().clone();
        // x^2y^3 reduces to y^3x^2
        let nf = s.normal_form(&poly("x^2*y^3", &g)).unwrap();
        assert_eq!(nf, poly("y^3*x^2", &g));
        // x^2y - yx^2 is a relation
        assert!(s.ideal_member(&poly("x^2*y - y*x^2", &g)).unwrap());
        // a single generator is not in the ideal
        assert!(!s.ideal_member(&poly("x", &g)).unwrap());
        // [x,yRy]·y + y·[x,yRy] = -y^2xyR + Ryxy^2 is in the ideal
        let rel3 = extremal_relations(&g).pop().unwrap();
        let y = poly("y", &g);
        let sum = rel3.mul(&y).unwrap().add(&y.mul(&rel3).unwrap()).unwrap();
        assert!(s.ideal_member(&sum).unwrap());
    }

    #[test]
    fn commutative_plane() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        let rel = poly("x*y - y*x", &g);
        let s = RewriteSystem::complete(&[rel], &order, 10).unwrap();
        assert_eq!(s.rules().len(), 1);
        // the ideal contains all commutators
        assert!(s.ideal_member(&poly("x^2*y^2 - y^2*x^2", &g)).unwrap());
    }

    #[test]
    fn heisenberg_enveloping_normal_words() {
        // x, y of weight 1 and z of weight 2 with relations xy-yx-z, xz-zx, yz-zy
        let g = Arc::new(
            GeneratorTable::new(
                vec!["x".into(), "y".into(), "z".into()],
                vec![1, 1, 2],
                None,
            )
            .unwrap(),
        );
        let order = MonomialOrder::deglex(&g);
        let rels = vec![
            poly("x*y - y*x - z", &g),
            poly("x*z - z*x", &g),
            poly("y*z - z*y", &g),
        ];
        let s = RewriteSystem::complete(&rels, &order, 10).unwrap();
        assert_eq!(s.rules().len(), 3);
        // normal words are z^a y^b x^c: xyz in any scrambled order reduces to
        // a combination of such words
        let nf = s.normal_form(&poly("x*y*z", &g)).unwrap();
        for (w, _) in nf.terms() {
            let ls = w.letters();
            assert!(ls.windows(2).all(|p| p[0] >= p[1]), "not sorted: {}", w.display(&g));
        }
    }

    #[test]
    fn inhomogeneous_and_zero_relations_rejected() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        assert!(matches!(
            RewriteSystem::complete(&[poly("x + y^2", &g)], &order, 10),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            RewriteSystem::complete(&[NcPoly::zero(&g)], &order, 10),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn cached_and_plain_normal_forms_agree() {
        let s = extremal_system(12);
        let g = s.gens().clone();
        let mut cache = NfCache::new();
        for src in ["x^2*y^3*x", "x*y*x*y*x*y^2*y^2", "y*x^2*y*x^2*y^3"] {
            let p = poly(src, &g);
            let plain = s.normal_form(&p).unwrap();
            let cached = s.normal_form_cached(&p, &mut cache).unwrap();
            assert_eq!(plain, cached, "mismatch on {src}");
        }
    }

    #[test]
    fn completion_invariant_under_permutation() {
        let g = xy();
        let order = MonomialOrder::deglex(&g);
        let rels = extremal_relations(&g);
        let reference = RewriteSystem::complete(&rels, &order, 12).unwrap();
        let mut perm = rels;
        perm.rotate_left(1);
        perm.swap(0, 1);
        let permuted = RewriteSystem::complete(&perm, &order, 12).unwrap();
        assert_eq!(reference.rules(), permuted.rules());
    }
}
