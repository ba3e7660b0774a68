//! Expansion in the basis of simple characters by leading-term elimination,
//! the positivity check for products, and the probe for the three
//! conditions conjectured to be equivalent for a product `b_γ ⊗ b_{γ′}`.

use std::collections::BTreeMap;

use crate::axring::AXElem;
use crate::chartab::CharTable;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::lattice::XElem;

pub const DEFAULT_MAX_ITER: usize = 10_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BExpansion {
    pub terms: BTreeMap<XElem, Laurent>,
    pub residual: AXElem,
}

impl BExpansion {
    pub fn is_complete(&self) -> bool {
        self.residual.is_zero()
    }

    /// `γ'' : coeff` lines in key order.
    pub fn render(&self, short: bool) -> String {
        let mut out = String::new();
        for (g, c) in &self.terms {
            let key = if short { g.render_short() } else { g.render() };
            out.push_str(&format!("{key} : {c}\n"));
        }
        out
    }
}

/// Selection key for the next dominant term: height of `γ(1)`, then total
/// q-degree, then the key itself; the largest wins.
fn rank_key(t: &CharTable, g: &XElem) -> (i64, i64) {
    let c = t.cartan();
    (c.scaled_height(&g.spec_q1(c.rank())), g.total_degree())
}

pub fn expand_in_simples(t: &CharTable, x: &AXElem, max_iter: usize) -> Result<BExpansion> {
    let mut residual = x.clone();
    let mut terms: BTreeMap<XElem, Laurent> = BTreeMap::new();
    let mut iter = 0usize;
    while !residual.is_zero() {
        if iter == max_iter {
            return Err(Error::IterationCap(max_iter));
        }
        iter += 1;
        let (g, c) = residual
            .terms()
            .filter(|(g, _)| g.is_dominant())
            .max_by(|(a, _), (b, _)| rank_key(t, a).cmp(&rank_key(t, b)).then_with(|| a.cmp(b)))
            .map(|(g, c)| (g.clone(), c.clone()))
            .ok_or_else(|| Error::NotInSpan(residual.render()))?;
        let s = t.simple_char(&g)?;
        residual = residual.sub(&s.scale(&c));
        let slot = terms.entry(g.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            terms.remove(&g);
        }
    }
    Ok(BExpansion { terms, residual })
}

/// `Σ coeff · gch V(γ'')`.
pub fn reconstruct(t: &CharTable, e: &BExpansion) -> Result<AXElem> {
    let mut acc = AXElem::zero();
    for (g, c) in &e.terms {
        acc = acc.add(&t.simple_char(g)?.scale(c));
    }
    Ok(acc)
}

/// `Ok(())` if every coefficient lies in `N[v, v^{-1}]`, otherwise the offending keys.
pub fn positivity_check(e: &BExpansion) -> std::result::Result<(), Vec<XElem>> {
    let bad: Vec<XElem> = e.terms.iter().filter(|(_, c)| !c.has_nonneg_coeffs()).map(|(g, _)| g.clone()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    /// `b_γ b_{γ′}` is a single basis element times a power of `v`.
    pub single: bool,
    /// `b_γ b_{γ′}` and `b_{γ′} b_γ` agree up to one power of `v`.
    pub commute: bool,
    /// `b_γ b_{γ′} = v^{⟨γ,γ′⟩} b_{γ+γ′}`.
    pub exact: bool,
    pub forward: BExpansion,
    pub backward: BExpansion,
}

impl ProbeReport {
    /// The three conditions agree.
    pub fn coherent(&self) -> bool {
        self.single == self.commute && self.commute == self.exact
    }
}

fn is_v_power(c: &Laurent) -> bool {
    c.as_monomial().is_some_and(|(_, k)| *k == num_bigint::BigInt::from(1))
}

fn agree_up_to_v_power(a: &BExpansion, b: &BExpansion) -> bool {
    if a.terms.len() != b.terms.len() || a.terms.keys().ne(b.terms.keys()) {
        return false;
    }
    let Some((g, ca)) = a.terms.iter().next() else {
        return true;
    };
    let cb = &b.terms[g];
    let (Some(ea), Some(eb)) = (ca.min_exp(), cb.min_exp()) else {
        return false;
    };
    let k = ea - eb;
    a.terms.iter().all(|(g, c)| *c == b.terms[g].shift(k))
}

pub fn conjecture_probe(t: &CharTable, g: &XElem, h: &XElem, max_iter: usize) -> Result<ProbeReport> {
    let lat = t.lattice();
    let bg = t.simple_char(g)?;
    let bh = t.simple_char(h)?;
    let forward = expand_in_simples(t, &bg.mul(lat, &bh)?, max_iter)?;
    let backward = expand_in_simples(t, &bh.mul(lat, &bg)?, max_iter)?;
    let single = forward.terms.len() == 1 && forward.terms.values().all(is_v_power);
    let commute = agree_up_to_v_power(&forward, &backward);
    let sum = g.add(h);
    let exact = forward.terms.len() == 1 && forward.terms.get(&sum) == Some(&Laurent::monomial(lat.bracket(g, h)?, 1));
    Ok(ProbeReport { single, commute, exact, forward, backward })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type;
    use crate::lattice::Lattice;

    fn a1() -> CharTable {
        CharTable::builtin(Lattice::new(parse_type("A1").unwrap()).unwrap())
    }

    fn x1(s: &str) -> XElem {
        XElem::parse(s, 1).unwrap()
    }

    #[test]
    fn standard_is_unitriangular() {
        let t = a1();
        let e = expand_in_simples(&t, &t.standard_char(&x1("q^2+q^0")).unwrap(), DEFAULT_MAX_ITER).unwrap();
        let want = BTreeMap::from([(x1("q^2+q^0"), Laurent::one()), (XElem::zero(), Laurent::monomial(1, 1))]);
        assert_eq!(e.terms, want);
        assert!(e.is_complete());
    }

    #[test]
    fn simple_expands_to_itself() {
        let t = a1();
        let g = x1("2q^0+q^2+q^-4");
        let e = expand_in_simples(&t, &t.simple_char(&g).unwrap(), DEFAULT_MAX_ITER).unwrap();
        assert_eq!(e.terms, BTreeMap::from([(g, Laurent::one())]));
    }

    #[test]
    fn product_of_fundamentals() {
        let t = a1();
        let p = t.simple_char(&x1("q^2")).unwrap().mul(t.lattice(), &t.simple_char(&x1("q^0")).unwrap()).unwrap();
        let e = expand_in_simples(&t, &p, DEFAULT_MAX_ITER).unwrap();
        let want = BTreeMap::from([(x1("q^2+q^0"), Laurent::monomial(-1, 1)), (XElem::zero(), Laurent::one())]);
        assert_eq!(e.terms, want);
        assert!(positivity_check(&e).is_ok());
        assert_eq!(reconstruct(&t, &e).unwrap(), p);
    }

    #[test]
    fn positivity_flags_negative_terms() {
        let mut e = BExpansion::default();
        assert!(positivity_check(&e).is_ok());
        e.terms.insert(x1("q^0"), Laurent::from_terms([(1, 1), (0, -1)]));
        assert_eq!(positivity_check(&e), Err(vec![x1("q^0")]));
    }

    #[test]
    fn probe_examples() {
        let t = a1();
        let r = conjecture_probe(&t, &x1("q^0"), &x1("q^0"), DEFAULT_MAX_ITER).unwrap();
        assert!(r.single && r.commute && r.exact);
        let r = conjecture_probe(&t, &x1("q^2"), &x1("q^0"), DEFAULT_MAX_ITER).unwrap();
        assert!(!r.single && !r.exact && !r.commute);
        assert!(r.coherent());
        let r = conjecture_probe(&t, &x1("q^2+q^0"), &XElem::zero(), DEFAULT_MAX_ITER).unwrap();
        assert!(r.single && r.commute && r.exact);
    }

    #[test]
    fn iteration_cap_and_span_errors() {
        let t = a1();
        let w = t.standard_char(&x1("q^2+q^0")).unwrap();
        assert_eq!(expand_in_simples(&t, &w, 1), Err(Error::IterationCap(1)));
        let not_in_span = AXElem::monomial(x1("-q^2"), Laurent::one());
        assert!(matches!(expand_in_simples(&t, &not_in_span, 10), Err(Error::NotInSpan(_))));
    }
}
