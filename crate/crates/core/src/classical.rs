//! Classical characters: weight multiplicities, the irreducible (`χ`) and
//! orbit-sum (`m`) bases, tensor product multiplicities, and the v-graded
//! restriction `e^γ ↦ v^{ε_γ} e^{γ(1)}` from `A_X`.
//!
//! Inner products use the symmetrizer: `(α_i, ω_j) = d_i δ_{ij}`, so folded
//! (non-simply-laced) data are handled by the same code.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::axring::AXElem;
use crate::cartan::{CartanDatum, Root, Weight};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::lattice::Lattice;

/// Multiplicities of the dominant weights of `V(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    pub lambda: Weight,
    pub mult: BTreeMap<Weight, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Formal exponentials `e^μ`.
    Weight,
    /// Orbit sums `m_μ`, `μ` dominant.
    Orbit,
    /// Irreducible characters `χ_μ`, `μ` dominant.
    Irreducible,
}

/// Finitely supported `P → Z[v, v^{-1}]` in one of the three bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalGraded {
    pub basis: Basis,
    pub terms: BTreeMap<Weight, Laurent>,
}

impl ClassicalGraded {
    pub fn zero(basis: Basis) -> Self {
        ClassicalGraded { basis, terms: BTreeMap::new() }
    }

    pub fn from_terms(basis: Basis, it: impl IntoIterator<Item = (Weight, Laurent)>) -> Self {
        let mut out = ClassicalGraded::zero(basis);
        for (w, c) in it {
            out.add_term(w, &c);
        }
        out
    }

    pub fn add_term(&mut self, w: Weight, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.has_nonneg_coeffs())
    }

    /// Specialization `v = 1`.
    pub fn at_v1(&self) -> BTreeMap<Weight, BigInt> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval_one())).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// One `μ : coeff` line per term.
    pub fn render(&self) -> String {
        let tag = match self.basis {
            Basis::Weight => "e",
            Basis::Orbit => "m",
            Basis::Irreducible => "chi",
        };
        let mut out = String::new();
        for (w, c) in &self.terms {
            out.push_str(&format!("{tag}{w} : {c}\n"));
        }
        out
    }
}

/// A Cartan datum with its positive roots and a write-once cache of
/// multiplicity tables.
#[derive(Debug)]
pub struct Classical {
    cartan: CartanDatum,
    roots: Vec<Root>,
    /// Positive roots as weights, aligned with `roots`.
    root_weights: Vec<Weight>,
    cache: RwLock<HashMap<Weight, Arc<MultTable>>>,
}

impl Classical {
    pub fn new(cartan: CartanDatum) -> Classical {
        let roots = cartan.positive_roots();
        let root_weights = roots.iter().map(|r| cartan.root_to_weight(r)).collect();
        Classical { cartan, roots, root_weights, cache: RwLock::new(HashMap::new()) }
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    fn rank(&self) -> usize {
        self.cartan.rank()
    }

    fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        if lambda.0.len() != self.rank() || !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_dominant(lambda)?;
        let lr = lambda.add(&self.rho());
        let (mut num, mut den) = (BigInt::one(), BigInt::one());
        for a in &self.roots {
            num *= self.cartan.root_weight_form(a, &lr);
            den *= self.cartan.root_weight_form(a, &self.rho());
        }
        Ok(num / den)
    }

    /// Dominant weights `μ` with `λ − μ ∈ Q⁺`, each with `λ − μ` in root coordinates.
    fn dominant_below(&self, lambda: &Weight) -> Vec<(Weight, Root)> {
        let mut seen: BTreeMap<Weight, Root> = BTreeMap::new();
        seen.insert(lambda.clone(), Root::zero(self.rank()));
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(mu) = queue.pop_front() {
            let depth = seen[&mu].clone();
            for (a, aw) in self.roots.iter().zip(&self.root_weights) {
                let nu = mu.sub(aw);
                if nu.is_dominant() && !seen.contains_key(&nu) {
                    seen.insert(nu.clone(), depth.add(a));
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<(Weight, Root)> = seen.into_iter().collect();
        out.sort_by(|x, y| x.1.height().cmp(&y.1.height()).then_with(|| y.0.cmp(&x.0)));
        out
    }

    /// Freudenthal's recursion on dominant weights.
    pub fn freudenthal(&self, lambda: &Weight) -> Result<Arc<MultTable>> {
        self.check_dominant(lambda)?;
        if let Some(t) = self.cache.read().expect("cache poisoned").get(lambda) {
            return Ok(t.clone());
        }
        let rho2 = self.rho().scale(2);
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        for (mu, beta) in self.dominant_below(lambda) {
            if beta.is_zero() {
                mult.insert(mu, 1);
                continue;
            }
            let denom = i128::from(self.cartan.root_weight_form(&beta, &lambda.add(&mu).add(&rho2)));
            let mut acc: i128 = 0;
            for (a, aw) in self.roots.iter().zip(&self.root_weights) {
                let mut k = 1i64;
                loop {
                    let rest = beta.sub(&a.scale(k));
                    if !rest.is_positive() {
                        break;
                    }
                    let nu = mu.add(&aw.scale(k));
                    let m = mult.get(&self.cartan.dominant_conjugate(&nu)).copied().unwrap_or(0);
                    if m != 0 {
                        acc += i128::from(self.cartan.root_weight_form(a, &nu)) * i128::from(m);
                    }
                    k += 1;
                }
            }
            let m = 2 * acc / denom;
            if 2 * acc % denom != 0 || m < 0 {
                return Err(Error::InvariantViolation(format!("non-integral multiplicity at {mu}")));
            }
            if m > 0 {
                mult.insert(mu, u64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))?);
            }
        }
        let table = Arc::new(MultTable { lambda: lambda.clone(), mult });
        self.cache.write().expect("cache poisoned").entry(lambda.clone()).or_insert_with(|| table.clone());
        Ok(table)
    }

    /// Size of the Weyl orbit of a dominant weight.
    pub fn orbit_size(&self, mu: &Weight) -> u128 {
        self.cartan.orbit_size(mu)
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::from([mu.clone()]);
        let mut queue = VecDeque::from([mu.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let r = self.cartan.reflect_weight(i, &w);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `Σ_μ mult(μ) · |W μ|`.
    pub fn dimension_from_table(&self, t: &MultTable) -> BigInt {
        t.mult.iter().map(|(mu, m)| BigInt::from(*m) * BigInt::from(self.orbit_size(mu))).sum()
    }

    /// Full character of `V(λ)` in the weight basis.
    pub fn character(&self, lambda: &Weight) -> Result<ClassicalGraded> {
        let t = self.freudenthal(lambda)?;
        let mut out = ClassicalGraded::zero(Basis::Weight);
        for (mu, m) in &t.mult {
            for w in self.orbit(mu) {
                out.add_term(w, &Laurent::from(*m as i64));
            }
        }
        Ok(out)
    }

    /// Converts between bases. Weight-basis input must be Weyl invariant
    /// when converting away from it.
    pub fn convert(&self, x: &ClassicalGraded, target: Basis) -> Result<ClassicalGraded> {
        if x.basis == target {
            return Ok(x.clone());
        }
        match (x.basis, target) {
            (Basis::Irreducible, Basis::Orbit) => {
                let mut out = ClassicalGraded::zero(Basis::Orbit);
                for (lambda, c) in &x.terms {
                    for (mu, m) in &self.freudenthal(lambda)?.mult {
                        out.add_term(mu.clone(), &c.scale(&BigInt::from(*m)));
                    }
                }
                Ok(out)
            }
            (Basis::Orbit, Basis::Irreducible) => {
                let mut residual = x.clone();
                let mut out = ClassicalGraded::zero(Basis::Irreducible);
                while let Some((mu, c)) = self.top_term(&residual) {
                    for (nu, m) in &self.freudenthal(&mu)?.mult {
                        residual.add_term(nu.clone(), &-c.scale(&BigInt::from(*m)));
                    }
                    out.add_term(mu, &c);
                }
                Ok(out)
            }
            (Basis::Orbit, Basis::Weight) => {
                let mut out = ClassicalGraded::zero(Basis::Weight);
                for (mu, c) in &x.terms {
                    for w in self.orbit(mu) {
                        out.add_term(w, c);
                    }
                }
                Ok(out)
            }
            (Basis::Weight, Basis::Orbit) => {
                self.check_invariant(x)?;
                Ok(ClassicalGraded::from_terms(
                    Basis::Orbit,
                    x.terms.iter().filter(|(w, _)| w.is_dominant()).map(|(w, c)| (w.clone(), c.clone())),
                ))
            }
            (Basis::Irreducible, Basis::Weight) => {
                self.convert(&self.convert(x, Basis::Orbit)?, Basis::Weight)
            }
            (Basis::Weight, Basis::Irreducible) => {
                self.convert(&self.convert(x, Basis::Orbit)?, Basis::Irreducible)
            }
            _ => unreachable!("equal bases handled above"),
        }
    }

    fn check_invariant(&self, x: &ClassicalGraded) -> Result<()> {
        for (w, c) in &x.terms {
            if x.coeff(&self.cartan.dominant_conjugate(w)) != *c {
                return Err(Error::NonInvariant(format!("coefficient at {w} differs from its dominant conjugate")));
            }
        }
        Ok(())
    }

    /// Dominant key of largest height (ties: largest key).
    fn top_term(&self, x: &ClassicalGraded) -> Option<(Weight, Laurent)> {
        x.terms
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .max_by(|(a, _), (b, _)| {
                let (ha, hb) = (self.cartan.scaled_height(a), self.cartan.scaled_height(b));
                ha.cmp(&hb).then_with(|| a.cmp(b))
            })
            .map(|(w, c)| (w.clone(), c.clone()))
    }

    /// `χ`-expansion of a v-graded weight-basis element by subtracting full
    /// irreducible characters at maximal dominant terms.
    pub fn expand_in_chi(&self, x: &ClassicalGraded) -> Result<ClassicalGraded> {
        match x.basis {
            Basis::Irreducible => return Ok(x.clone()),
            Basis::Orbit => return self.convert(x, Basis::Irreducible),
            Basis::Weight => {}
        }
        let mut plain = ClassicalGraded::zero(Basis::Weight);
        for (w, c) in x.at_v1() {
            plain.add_term(w, &Laurent::monomial(0, c));
        }
        self.check_invariant(&plain)?;
        let mut residual = x.clone();
        let mut out = ClassicalGraded::zero(Basis::Irreducible);
        while !residual.is_zero() {
            let (mu, c) = self
                .top_term(&residual)
                .ok_or_else(|| Error::NonInvariant("residual has no dominant term".into()))?;
            let ch = self.character(&mu)?;
            for (w, m) in &ch.terms {
                residual.add_term(w.clone(), &-(&c * m));
            }
            out.add_term(mu, &c);
        }
        Ok(out)
    }

    /// `dim Hom(V(μ), V(λ′) ⊗ V(λ″))` for all `μ`, from the dominant part of
    /// the character product followed by elimination.
    pub fn tensor_mult(&self, l1: &Weight, l2: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let c1 = self.character(l1)?;
        let t2 = self.freudenthal(l2)?;
        let mut dominant = ClassicalGraded::zero(Basis::Orbit);
        for (mu, m) in &t2.mult {
            for w2 in self.orbit(mu) {
                for (w1, c) in &c1.terms {
                    let s = w1.add(&w2);
                    if s.is_dominant() {
                        dominant.add_term(s, &c.scale(&BigInt::from(*m)));
                    }
                }
            }
        }
        let chi = self.convert(&dominant, Basis::Irreducible)?;
        let mut out = BTreeMap::new();
        for (mu, c) in chi.terms {
            let n = c
                .as_monomial()
                .filter(|(e, _)| *e == 0)
                .and_then(|(_, n)| u64::try_from(n.clone()).ok())
                .ok_or_else(|| Error::InvariantViolation(format!("negative tensor multiplicity at {mu}")))?;
            out.insert(mu, n);
        }
        Ok(out)
    }

    /// Transition row `b_λ = Σ_μ dim V(λ)_μ c_μ` of a (possibly folded) datum.
    pub fn folded_transition(&self, lambda: &Weight) -> Result<Arc<MultTable>> {
        self.freudenthal(lambda)
    }
}

/// `e^γ ↦ v^{ε_γ} e^{γ(1)}`, extended linearly.
pub fn restrict_ax(lat: &Lattice, x: &AXElem) -> Result<ClassicalGraded> {
    let mut out = ClassicalGraded::zero(Basis::Weight);
    for (g, c) in x.terms() {
        out.add_term(g.spec_q1(lat.rank()), &c.shift(lat.epsilon_gamma(g)?));
    }
    Ok(out)
}

/// `v^{ε_γ}` restriction followed by `χ`-expansion.
pub fn restrict_to_chi(lat: &Lattice, cl: &Classical, x: &AXElem) -> Result<ClassicalGraded> {
    cl.expand_in_chi(&restrict_ax(lat, x)?)
}

/// Every `λ ∈ P⁺` with coordinate sum at most `max_level`.
pub fn dominant_weights_up_to(rank: usize, max_level: i64) -> Vec<Weight> {
    let mut out = vec![Weight(vec![])];
    for _ in 0..rank {
        let mut next = Vec::new();
        for w in &out {
            let used: i64 = w.0.iter().sum();
            for k in 0..=(max_level - used) {
                let mut v = w.0.clone();
                v.push(k);
                next.push(Weight(v));
            }
        }
        out = next;
    }
    out
}

/// An element of the `χ` basis from its terms.
pub fn chi(basis_terms: &[(Weight, Laurent)]) -> ClassicalGraded {
    ClassicalGraded::from_terms(Basis::Irreducible, basis_terms.iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{parse_orbits, parse_type};
    use crate::chartab::CharTable;
    use crate::lattice::XElem;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn freudenthal_examples() {
        let a1 = Classical::new(parse_type("A1").unwrap());
        assert_eq!(a1.freudenthal(&w(&[2])).unwrap().mult, BTreeMap::from([(w(&[2]), 1), (w(&[0]), 1)]));
        let a2 = Classical::new(parse_type("A2").unwrap());
        assert_eq!(a2.freudenthal(&w(&[1, 1])).unwrap().mult, BTreeMap::from([(w(&[1, 1]), 1), (w(&[0, 0]), 2)]));
        assert_eq!(a2.freudenthal(&w(&[0, 0])).unwrap().mult, BTreeMap::from([(w(&[0, 0]), 1)]));
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = Classical::new(parse_type("A1").unwrap());
        assert_eq!(a1.weyl_dim(&w(&[2])).unwrap(), BigInt::from(3));
        let d4 = Classical::new(parse_type("D4").unwrap());
        assert_eq!(d4.weyl_dim(&w(&[0, 0, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(d4.weyl_dim(&w(&[0, 1, 0, 0])).unwrap(), BigInt::from(28));
        let g2 = Classical::new(parse_type("D4").unwrap().fold(&parse_orbits("1,3,4|2").unwrap()).unwrap());
        let dims: BTreeSet<BigInt> = [w(&[1, 0]), w(&[0, 1])].iter().map(|l| g2.weyl_dim(l).unwrap()).collect();
        assert_eq!(dims, BTreeSet::from([BigInt::from(7), BigInt::from(14)]));
    }

    #[test]
    fn folded_tables() {
        let b2 = Classical::new(parse_type("A3").unwrap().fold(&parse_orbits("1,3|2").unwrap()).unwrap());
        let t = b2.folded_transition(&w(&[1, 0])).unwrap();
        assert_eq!(b2.dimension_from_table(&t), b2.weyl_dim(&w(&[1, 0])).unwrap());
        let g2 = Classical::new(parse_type("D4").unwrap().fold(&parse_orbits("1,3,4|2").unwrap()).unwrap());
        let adjoint = [w(&[1, 0]), w(&[0, 1])].into_iter().find(|l| g2.weyl_dim(l).unwrap() == BigInt::from(14)).unwrap();
        let t = g2.folded_transition(&adjoint).unwrap();
        assert_eq!(t.mult[&w(&[0, 0])], 2);
        assert_eq!(g2.folded_transition(&w(&[0, 0])).unwrap().mult, BTreeMap::from([(w(&[0, 0]), 1)]));
    }

    #[test]
    fn chi_m_round_trip() {
        let a1 = Classical::new(parse_type("A1").unwrap());
        let x = chi(&[(w(&[2]), Laurent::one())]);
        let m = a1.convert(&x, Basis::Orbit).unwrap();
        assert_eq!(m.terms, BTreeMap::from([(w(&[2]), Laurent::one()), (w(&[0]), Laurent::one())]));
        assert_eq!(a1.convert(&m, Basis::Irreducible).unwrap(), x);
        let m2 = ClassicalGraded::from_terms(Basis::Orbit, [(w(&[2]), Laurent::one())]);
        let back = a1.convert(&m2, Basis::Irreducible).unwrap();
        assert_eq!(back.terms, BTreeMap::from([(w(&[2]), Laurent::one()), (w(&[0]), Laurent::from(-1))]));
        let zero = chi(&[(w(&[0]), Laurent::one())]);
        assert_eq!(a1.convert(&zero, Basis::Orbit).unwrap().terms, BTreeMap::from([(w(&[0]), Laurent::one())]));
    }

    #[test]
    fn tensor_examples() {
        let a1 = Classical::new(parse_type("A1").unwrap());
        assert_eq!(a1.tensor_mult(&w(&[1]), &w(&[1])).unwrap(), BTreeMap::from([(w(&[2]), 1), (w(&[0]), 1)]));
        let a2 = Classical::new(parse_type("A2").unwrap());
        assert_eq!(
            a2.tensor_mult(&w(&[1, 0]), &w(&[0, 1])).unwrap(),
            BTreeMap::from([(w(&[1, 1]), 1), (w(&[0, 0]), 1)])
        );
        assert_eq!(a2.tensor_mult(&w(&[2, 1]), &w(&[0, 0])).unwrap(), BTreeMap::from([(w(&[2, 1]), 1)]));
    }

    #[test]
    fn restriction_examples() {
        let lat = Lattice::new(parse_type("A1").unwrap()).unwrap();
        let t = CharTable::builtin(lat.clone());
        let cl = Classical::new(parse_type("A1").unwrap());
        let v0 = t.simple_char(&XElem::monomial(1, 0, 1)).unwrap();
        let r = restrict_ax(&lat, &v0).unwrap();
        assert_eq!(r.terms, BTreeMap::from([(w(&[1]), Laurent::one()), (w(&[-1]), Laurent::one())]));
        assert_eq!(cl.expand_in_chi(&r).unwrap(), chi(&[(w(&[1]), Laurent::one())]));
        let v00 = t.simple_char(&XElem::monomial(1, 0, 2)).unwrap();
        let r = restrict_ax(&lat, &v00).unwrap();
        assert_eq!(r.coeff(&w(&[0])), Laurent::from_terms([(0, 1), (-2, 1)]));
        assert_eq!(
            cl.expand_in_chi(&r).unwrap(),
            chi(&[(w(&[2]), Laurent::one()), (w(&[0]), Laurent::monomial(-2, 1))])
        );
        assert!(restrict_ax(&lat, &AXElem::zero()).unwrap().is_zero());
    }

    #[test]
    fn non_invariant_input_rejected() {
        let cl = Classical::new(parse_type("A1").unwrap());
        let x = ClassicalGraded::from_terms(Basis::Weight, [(w(&[1]), Laurent::one())]);
        assert!(matches!(cl.expand_in_chi(&x), Err(Error::NonInvariant(_))));
    }

    #[test]
    fn dominant_weight_enumeration() {
        assert_eq!(dominant_weights_up_to(2, 1), vec![w(&[0, 0]), w(&[0, 1]), w(&[1, 0])]);
        assert_eq!(dominant_weights_up_to(3, 6).len(), 84);
    }
}
