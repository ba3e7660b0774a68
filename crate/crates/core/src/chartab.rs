//! Tables of graded characters: fundamental modules `V(q^n ω_i)`, standard
//! modules `W(γ)` as twisted ordered products, and simple modules `V(γ)`.
//!
//! For `A1` everything is available in closed form. Other types read their
//! fundamental (and optionally simple) characters from table files; missing
//! fundamentals are generated from a stored one by spectral shift, which is
//! assumed, not proved, to be valid beyond `A1`.
//!
//! File format, one entry per line, `#` starts a comment:
//!
//! ```text
//! fund A2 1 0 := (1)*e[x{1:0:1}] + (1)*e[x{1:2:-1, 2:1:1}] + (1)*e[x{2:3:-1}]
//! simple A1 x{1:0:1, 1:2:1} := (1)*e[x{1:0:1, 1:2:1}] + ...
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::RwLock;

use crate::axring::AXElem;
use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::expr::parse_ax;
use crate::laurent::Laurent;
use crate::lattice::{Lattice, XElem, YElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    File,
    Computed,
}

type Entries<K> = RwLock<BTreeMap<K, (AXElem, Provenance)>>;

#[derive(Debug)]
pub struct CharTable {
    lat: Lattice,
    fund: Entries<(usize, i64)>,
    simples: Entries<XElem>,
}

/// Spectral parameters preloaded into the builtin `A1` table.
pub const BUILTIN_A1_RANGE: std::ops::RangeInclusive<i64> = -8..=8;

impl CharTable {
    pub fn new(lat: Lattice) -> CharTable {
        CharTable { lat, fund: RwLock::new(BTreeMap::new()), simples: RwLock::new(BTreeMap::new()) }
    }

    /// For `A1`, preloads the closed-form fundamentals; otherwise empty.
    pub fn builtin(lat: Lattice) -> CharTable {
        let t = CharTable::new(lat);
        if t.is_a1() {
            let mut f = t.fund.write().expect("table poisoned");
            for n in BUILTIN_A1_RANGE {
                f.insert((1, n), (sl2_fundamental(n), Provenance::Builtin));
            }
        }
        t
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lat
    }

    pub fn cartan(&self) -> &CartanDatum {
        self.lat.cartan()
    }

    pub fn type_name(&self) -> &str {
        self.cartan().name()
    }

    pub fn is_a1(&self) -> bool {
        self.lat.rank() == 1
    }

    /// `gch V(q^n ω_1)` for `A1`.
    pub fn sl2_fundamental(&self, n: i64) -> Result<AXElem> {
        if !self.is_a1() {
            return Err(Error::WrongType { expected: "A1".into(), got: self.type_name().into() });
        }
        Ok(sl2_fundamental(n))
    }

    /// `gch V(q^n ω_i)`, from the table, the `A1` closed form, or by shifting
    /// a stored fundamental at the same node.
    pub fn fundamental(&self, i: usize, n: i64) -> Result<AXElem> {
        if let Some((x, _)) = self.fund.read().expect("table poisoned").get(&(i, n)) {
            return Ok(x.clone());
        }
        let made = if self.is_a1() && i == 1 {
            sl2_fundamental(n)
        } else {
            let f = self.fund.read().expect("table poisoned");
            let nearest = f.range((i, i64::MIN)..=(i, i64::MAX)).min_by_key(|((_, n0), _)| (n0 - n).abs());
            match nearest {
                Some(((_, n0), (x, _))) => x.shift_spectral(n - n0),
                None => return Err(Error::MissingFundamental { node: i, shift: n }),
            }
        };
        self.fund.write().expect("table poisoned").entry((i, n)).or_insert((made.clone(), Provenance::Computed));
        Ok(made)
    }

    pub fn insert_fundamental(&self, i: usize, n: i64, x: AXElem, prov: Provenance) -> Result<()> {
        if i == 0 || i > self.lat.rank() {
            return Err(Error::MissingFundamental { node: i, shift: n });
        }
        self.validate(&XElem::monomial(i, n, 1), &x)?;
        self.fund.write().expect("table poisoned").insert((i, n), (x, prov));
        Ok(())
    }

    pub fn insert_simple(&self, gamma: XElem, x: AXElem, prov: Provenance) -> Result<()> {
        self.validate(&gamma, &x)?;
        self.simples.write().expect("table poisoned").insert(gamma, (x, prov));
        Ok(())
    }

    pub fn provenance_fund(&self, i: usize, n: i64) -> Option<Provenance> {
        self.fund.read().expect("table poisoned").get(&(i, n)).map(|e| e.1)
    }

    pub fn provenance_simple(&self, gamma: &XElem) -> Option<Provenance> {
        self.simples.read().expect("table poisoned").get(gamma).map(|e| e.1)
    }

    /// `γ` as an ordered list of fundamental monomials: exponents descending,
    /// ties by node ascending.
    pub fn factors(&self, gamma: &XElem) -> Result<Vec<XElem>> {
        if !gamma.is_dominant() {
            return Err(Error::NotDominant(gamma.render()));
        }
        let mut parts: Vec<(i64, usize)> = Vec::new();
        for (i, k, c) in gamma.terms() {
            for _ in 0..c {
                parts.push((k, i));
            }
        }
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(parts.into_iter().map(|(k, i)| XElem::monomial(i, k, 1)).collect())
    }

    /// `gch W(γ) = v^{-Σ_{k<l}⟨γ_k,γ_l⟩} gch V(γ_1) ⋯ gch V(γ_ℓ)`.
    pub fn standard_char(&self, gamma: &XElem) -> Result<AXElem> {
        let parts = self.factors(gamma)?;
        let mut acc = AXElem::one();
        let mut prefix = XElem::zero();
        let mut twist = 0i64;
        for p in &parts {
            let (i, n, _) = p.terms().next().expect("monomial");
            acc = acc.mul(&self.lat, &self.fundamental(i, n)?)?;
            twist += self.lat.bracket(&prefix, p)?;
            prefix = prefix.add(p);
        }
        Ok(acc.shift_v(-twist))
    }

    /// `gch V(γ)`: cached; computed by the string rule for `A1`, otherwise
    /// read from the table.
    pub fn simple_char(&self, gamma: &XElem) -> Result<AXElem> {
        if let Some((x, _)) = self.simples.read().expect("table poisoned").get(gamma) {
            return Ok(x.clone());
        }
        if !gamma.is_dominant() {
            return Err(Error::NotDominant(gamma.render()));
        }
        if !self.is_a1() {
            return Err(Error::MissingSimple(gamma.render()));
        }
        let strings = string_decompose(gamma, 1)?;
        let mut acc = AXElem::one();
        let mut prefix = XElem::zero();
        let mut twist = 0i64;
        for s in &strings {
            let sx = string_elem(s);
            acc = acc.mul(&self.lat, &string_char(s))?;
            twist += self.lat.bracket(&prefix, &sx)?;
            prefix = prefix.add(&sx);
        }
        let out = acc.shift_v(-twist);
        self.simples
            .write()
            .expect("table poisoned")
            .entry(gamma.clone())
            .or_insert((out.clone(), Provenance::Computed));
        Ok(out)
    }

    /// `Λ(γ) = {η ∈ Y⁺ : W(γ)_{γ−η} ≠ 0}` and `Λ⁺(γ) = {η ∈ Λ(γ) : γ ⪰ η}`.
    pub fn lambda_sets(&self, gamma: &XElem) -> Result<(BTreeSet<YElem>, BTreeSet<YElem>)> {
        let w = self.standard_char(gamma)?;
        let mut all = BTreeSet::new();
        let mut plus = BTreeSet::new();
        for (g, _) in w.terms() {
            let eta = self.lat.solve_omega(&gamma.sub(g))?;
            if !eta.is_nonneg() {
                return Err(Error::InvariantViolation(format!("support element {} is not below γ", g.render())));
            }
            if g.is_dominant() {
                plus.insert(eta.clone());
            }
            all.insert(eta);
        }
        Ok((all, plus))
    }

    /// Checks the character invariants: coefficient 1 at `e^γ`, all other
    /// keys `γ − Ω(η)` with `η ∈ Y⁺∖{0}`, coefficients in `N[v, v^{-1}]`.
    pub fn validate(&self, gamma: &XElem, x: &AXElem) -> Result<()> {
        check_character(&self.lat, gamma, x)
    }

    /// Canonical text form: fundamentals by `(i, n)`, then simples by key.
    pub fn to_text(&self) -> String {
        let name = self.type_name().to_string();
        let mut out = String::new();
        for ((i, n), (x, _)) in self.fund.read().expect("table poisoned").iter() {
            out.push_str(&format!("fund {name} {i} {n} := {}\n", x.render()));
        }
        for (g, (x, _)) in self.simples.read().expect("table poisoned").iter() {
            out.push_str(&format!("simple {name} {} := {}\n", g.render(), x.render()));
        }
        out
    }

    /// Loads entries from text into this table; every entry is validated.
    pub fn load_text(&self, text: &str) -> Result<()> {
        let mut offset = 0usize;
        for (lineno, raw) in text.split_inclusive('\n').enumerate() {
            let start = offset;
            offset += raw.len();
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::parse(start, format!("line {}: {msg}", lineno + 1));
            let (head, body) = line.split_once(":=").ok_or_else(|| at("missing ':='".into()))?;
            let words: Vec<&str> = head.split_whitespace().collect();
            let ty = *words.get(1).ok_or_else(|| at("missing type".into()))?;
            if ty != self.type_name() {
                return Err(Error::WrongType { expected: self.type_name().into(), got: ty.into() });
            }
            let x = parse_ax(body, &self.lat, None).map_err(|e| at(e.to_string()))?;
            let invalid = |e: Error| Error::InvariantViolation(format!("line {}: {e}", lineno + 1));
            match words[0] {
                "fund" if words.len() == 4 => {
                    let i: usize = words[2].parse().map_err(|_| at("bad node".into()))?;
                    let n: i64 = words[3].parse().map_err(|_| at("bad spectral parameter".into()))?;
                    self.insert_fundamental(i, n, x, Provenance::File).map_err(invalid)?;
                }
                "simple" => {
                    let key = head[head.find(ty).expect("type present") + ty.len()..].trim();
                    let g = XElem::parse(key, self.lat.rank()).map_err(|e| at(e.to_string()))?;
                    self.insert_simple(g, x, Provenance::File).map_err(invalid)?;
                }
                other => return Err(at(format!("unknown entry kind {other:?}"))),
            }
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(&self, path: &Path) -> Result<()> {
        self.load_text(&std::fs::read_to_string(path)?)
    }
}

pub(crate) fn check_character(lat: &Lattice, gamma: &XElem, x: &AXElem) -> Result<()> {
    let bad = |msg: String| Err(Error::InvariantViolation(format!("character of {}: {msg}", gamma.render())));
    if !x.coeff(gamma).is_one() {
        return bad("top coefficient is not 1".into());
    }
    for (g, c) in x.terms() {
        if !c.has_nonneg_coeffs() {
            return bad(format!("negative coefficient {c} at {}", g.render()));
        }
        if g == gamma {
            continue;
        }
        match lat.solve_omega(&gamma.sub(g)) {
            Ok(eta) if eta.is_nonneg() && !eta.is_zero() => {}
            _ => return bad(format!("{} is not γ − Ω(η) with η ∈ Y⁺∖0", g.render())),
        }
    }
    Ok(())
}

/// `gch V(q^n) = e^{q^n} + e^{-q^{n+2}}` in type `A1`.
pub fn sl2_fundamental(n: i64) -> AXElem {
    AXElem::from_terms([(XElem::monomial(1, n, 1), Laurent::one()), (XElem::monomial(1, n + 2, -1), Laurent::one())])
}

/// Greedy maximal q-strings of a dominant `A1` element: each string is a
/// descending run `n, n−2, …`, strings sorted by top exponent descending.
pub fn string_decompose(gamma: &XElem, rank: usize) -> Result<Vec<Vec<i64>>> {
    if rank != 1 {
        return Err(Error::WrongType { expected: "A1".into(), got: format!("rank {rank}") });
    }
    if !gamma.is_dominant() {
        return Err(Error::NotDominant(gamma.render()));
    }
    let mut left: BTreeMap<i64, i64> = gamma.terms().map(|(_, k, c)| (k, c)).collect();
    let mut out = Vec::new();
    while let Some((&top, _)) = left.iter().next_back() {
        let mut s = Vec::new();
        let mut m = top;
        while let Some(c) = left.get_mut(&m) {
            s.push(m);
            *c -= 1;
            if *c == 0 {
                left.remove(&m);
            }
            m -= 2;
        }
        out.push(s);
    }
    Ok(out)
}

fn string_elem(s: &[i64]) -> XElem {
    XElem::from_terms(s.iter().map(|&m| (1, m, 1)))
}

/// Character of the simple module of one `A1` string: `Σ_{i=0}^{k} e^{ν_i}`,
/// `ν_i` replacing the `i` largest `q^m` by `−q^{m+2}`.
pub fn string_char(s: &[i64]) -> AXElem {
    let mut out = AXElem::zero();
    for i in 0..=s.len() {
        let key = XElem::from_terms(
            s.iter().enumerate().map(|(p, &m)| if p < i { (1, m + 2, -1) } else { (1, m, 1) }),
        );
        out.add_term(key, &Laurent::one());
    }
    out
}
