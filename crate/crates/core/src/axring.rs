//! The twisted group algebra `A_X` over `Z[v, v^{-1}]` with
//! `e^γ · e^{γ′} = v^{⟨γ,γ′⟩} e^{γ+γ′}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::lattice::{Lattice, XElem};
use crate::laurent::Laurent;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AXElem {
    terms: BTreeMap<XElem, Laurent>,
}

impl AXElem {
    pub fn zero() -> Self {
        AXElem::default()
    }

    /// `e^0`.
    pub fn one() -> Self {
        AXElem::monomial(XElem::zero(), Laurent::one())
    }

    pub fn monomial(gamma: XElem, coeff: Laurent) -> Self {
        let mut out = AXElem::zero();
        out.add_term(gamma, &coeff);
        out
    }

    /// `c · e^0`.
    pub fn scalar(c: Laurent) -> Self {
        AXElem::monomial(XElem::zero(), c)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (XElem, Laurent)>) -> Self {
        let mut out = AXElem::zero();
        for (g, c) in it {
            out.add_term(g, &c);
        }
        out
    }

    pub fn add_term(&mut self, gamma: XElem, coeff: &Laurent) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(gamma) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by key.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XElem, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, gamma: &XElem) -> Laurent {
        self.terms.get(gamma).cloned().unwrap_or_default()
    }

    /// `Some(c)` if the element is `c · e^0`.
    pub fn as_scalar(&self) -> Option<Laurent> {
        match self.terms.len() {
            0 => Some(Laurent::zero()),
            1 => self.terms.get(&XElem::zero()).cloned(),
            _ => None,
        }
    }

    /// Terms `(γ, c)` with `γ ∈ X⁺`.
    pub fn dominant_terms(&self) -> Vec<(XElem, Laurent)> {
        self.terms.iter().filter(|(g, _)| g.is_dominant()).map(|(g, c)| (g.clone(), c.clone())).collect()
    }

    pub fn add(&self, o: &AXElem) -> AXElem {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &AXElem) -> AXElem {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> AXElem {
        AXElem { terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    /// Multiplication by a scalar in `Z[v, v^{-1}]`.
    pub fn scale(&self, s: &Laurent) -> AXElem {
        if s.is_zero() {
            return AXElem::zero();
        }
        AXElem { terms: self.terms.iter().map(|(g, c)| (g.clone(), c * s)).collect() }
    }

    /// Multiplication by `v^k`.
    pub fn shift_v(&self, k: i64) -> AXElem {
        AXElem { terms: self.terms.iter().map(|(g, c)| (g.clone(), c.shift(k))).collect() }
    }

    /// Twisted product.
    pub fn mul(&self, lat: &Lattice, o: &AXElem) -> Result<AXElem> {
        let mut out = AXElem::zero();
        for (g, c) in &self.terms {
            for (h, d) in &o.terms {
                let t = lat.bracket(g, h)?;
                out.add_term(g.add(h), &(c * d).shift(t));
            }
        }
        Ok(out)
    }

    /// Coefficient-wise `v ↦ v^{-1}`.
    pub fn bar(&self) -> AXElem {
        AXElem { terms: self.terms.iter().map(|(g, c)| (g.clone(), c.bar())).collect() }
    }

    /// Raises every q-exponent of every key by `m`.
    pub fn shift_spectral(&self, m: i64) -> AXElem {
        AXElem { terms: self.terms.iter().map(|(g, c)| (g.shift(m), c.clone())).collect() }
    }

    /// Specialization `v = 1` of every coefficient.
    pub fn at_v1(&self) -> BTreeMap<XElem, num_bigint::BigInt> {
        self.terms
            .iter()
            .map(|(g, c)| (g.clone(), c.eval_one()))
            .filter(|(_, c)| *c != num_bigint::BigInt::from(0))
            .collect()
    }

    /// All coefficients in `N[v, v^{-1}]`.
    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.has_nonneg_coeffs())
    }

    /// Canonical literal: `(c)*e[x{...}] + ...`, terms sorted by key.
    pub fn render(&self) -> String {
        self.render_with(|g| g.render())
    }

    /// Rank-1 rendering with the `e[q^2+q^0]` shorthand.
    pub fn render_short(&self) -> String {
        self.render_with(|g| if g.is_zero() { String::new() } else { g.render_short() })
    }

    fn render_with(&self, key: impl Fn(&XElem) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("({})*e[{}]", c, key(g))).collect();
        parts.join(" + ")
    }
}

impl fmt::Display for AXElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
