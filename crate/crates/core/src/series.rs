//! Truncated formal series in `q^{-1}` with explicit exactness bookkeeping.
//!
//! A [`TruncSeries`] stores finitely many coefficients together with a
//! `floor`: every coefficient at an exponent `≥ floor` is exact, everything
//! below it has been dropped. A finite (polynomial) series has no floor.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::Laurent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    terms: BTreeMap<i64, BigInt>,
    floor: Option<i64>,
}

impl TruncSeries {
    pub fn zero() -> Self {
        TruncSeries { terms: BTreeMap::new(), floor: None }
    }

    pub fn one() -> Self {
        TruncSeries::from_laurent(&Laurent::one())
    }

    /// An exact (finite) series.
    pub fn from_laurent(p: &Laurent) -> Self {
        TruncSeries { terms: p.terms().map(|(e, c)| (e, c.clone())).collect(), floor: None }
    }

    /// A series that is exact only for exponents `≥ floor`; lower terms are dropped.
    pub fn truncated(p: &Laurent, floor: i64) -> Self {
        TruncSeries {
            terms: p.terms().filter(|(e, _)| *e >= floor).map(|(e, c)| (e, c.clone())).collect(),
            floor: Some(floor),
        }
    }

    /// Lowest exponent at which coefficients are still exact.
    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    /// Truncation order `T`, i.e. exactness down to `q^{-T}`.
    pub fn trunc_order(&self) -> Option<i64> {
        self.floor.map(|f| -f)
    }

    pub fn is_exact_at(&self, exp: i64) -> bool {
        self.floor.is_none_or(|f| exp >= f)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero_known(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact coefficient at `exp`, or an error if it lies below the floor.
    pub fn coeff(&self, exp: i64) -> Result<BigInt> {
        match self.floor {
            Some(f) if exp < f => Err(Error::ShallowTruncation { needed: exp, floor: f }),
            _ => Ok(self.terms.get(&exp).cloned().unwrap_or_default()),
        }
    }

    /// The known part as a Laurent polynomial.
    pub fn known_part(&self) -> Laurent {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() || !self.is_exact_at(exp) {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    fn combine_floor(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Raises the floor to `floor` (drops lower terms).
    pub fn truncate(&mut self, floor: i64) {
        let f = Self::combine_floor(self.floor, Some(floor)).expect("some");
        self.floor = Some(f);
        self.terms = self.terms.split_off(&f);
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        let mut out = TruncSeries {
            terms: BTreeMap::new(),
            floor: Self::combine_floor(self.floor, rhs.floor),
        };
        for (e, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), floor: self.floor }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        self.add(&rhs.neg())
    }

    pub fn shift(&self, k: i64) -> TruncSeries {
        TruncSeries {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            floor: self.floor.map(|f| f + k),
        }
    }

    pub fn scale(&self, s: &BigInt) -> TruncSeries {
        if s.is_zero() {
            return TruncSeries { terms: BTreeMap::new(), floor: self.floor };
        }
        TruncSeries { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(), floor: self.floor }
    }

    /// Product. A coefficient of the result is exact when no dropped term of
    /// either factor can reach it.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let floor_from = |lhs: &TruncSeries, other: &TruncSeries| -> Option<i64> {
            let f = lhs.floor?;
            // an empty known part still has unknown tail terms; it can reach anything
            // below f + max(other)
            Some(match other.max_exp() {
                Some(m) => f + m,
                None => i64::MIN / 4,
            })
        };
        let floor = Self::combine_floor(floor_from(self, rhs), floor_from(rhs, self));
        let mut out = TruncSeries { terms: BTreeMap::new(), floor };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Constant term, certified exact.
    pub fn const_term(&self) -> Result<BigInt> {
        self.coeff(0)
    }
}

/// Square matrix of truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    n: usize,
    entries: Vec<TruncSeries>,
}

impl SeriesMatrix {
    pub fn zeros(n: usize) -> Self {
        SeriesMatrix { n, entries: vec![TruncSeries::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = TruncSeries::one();
        }
        m
    }

    pub fn from_laurent(rows: &[Vec<Laurent>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, p) in row.iter().enumerate() {
                m.entries[i * n + j] = TruncSeries::from_laurent(p);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &TruncSeries {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: TruncSeries) {
        self.entries[i * self.n + j] = s;
    }

    pub fn mul(&self, rhs: &SeriesMatrix) -> SeriesMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = TruncSeries::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if a.is_zero_known() && a.floor.is_none() || b.is_zero_known() && b.floor.is_none() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, rhs: &SeriesMatrix) -> SeriesMatrix {
        SeriesMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn truncate(&mut self, floor: i64) {
        for e in &mut self.entries {
            e.truncate(floor);
        }
    }

    /// Largest exponent present in any entry.
    pub fn max_exp(&self) -> Option<i64> {
        self.entries.iter().filter_map(|e| e.max_exp()).max()
    }

    /// `(I + X)^{-1} = Σ_k (-X)^k`, exact down to `q^{-t}`.
    ///
    /// Every entry of `X` must have only strictly negative exponents, so each
    /// power lowers degrees by at least one and `t + 1` terms suffice.
    pub fn neumann_inverse(x: &SeriesMatrix, t: i64) -> Result<SeriesMatrix> {
        if x.max_exp().is_some_and(|m| m >= 0) {
            return Err(Error::NonConvergent);
        }
        let n = x.n;
        let floor = -t;
        let mut minus_x = SeriesMatrix {
            n,
            entries: x.entries.iter().map(|e| e.neg()).collect(),
        };
        minus_x.truncate(floor);
        let mut result = SeriesMatrix::identity(n);
        result.truncate(floor);
        let mut power = SeriesMatrix::identity(n);
        power.truncate(floor);
        for _ in 0..t.max(0) {
            power = power.mul(&minus_x);
            power.truncate(floor);
            if power.entries.iter().all(|e| e.is_zero_known()) {
                break;
            }
            result = result.add(&power);
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverse() {
        // (1 + q^-2)^{-1} = Σ (-1)^k q^{-2k}; independent check via the closed form
        let x = SeriesMatrix::from_laurent(&[vec![Laurent::monomial(-2, 1)]]);
        let inv = SeriesMatrix::neumann_inverse(&x, 12).unwrap();
        let s = inv.get(0, 0);
        for e in -12..=0 {
            let expected = if e % 2 == 0 { if (e / 2) % 2 == 0 { 1 } else { -1 } } else { 0 };
            assert_eq!(s.coeff(e).unwrap(), BigInt::from(expected), "exponent {e}");
        }
        assert!(s.coeff(-13).is_err());
    }

    #[test]
    fn zero_inverts_to_identity() {
        let inv = SeriesMatrix::neumann_inverse(&SeriesMatrix::zeros(3), 5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1 } else { 0 };
                assert_eq!(inv.get(i, j).coeff(0).unwrap(), BigInt::from(expected));
                assert_eq!(inv.get(i, j).coeff(-5).unwrap(), BigInt::from(0));
            }
        }
    }

    #[test]
    fn rejects_nonconvergent() {
        let x = SeriesMatrix::from_laurent(&[vec![Laurent::monomial(0, 1)]]);
        assert_eq!(SeriesMatrix::neumann_inverse(&x, 4), Err(Error::NonConvergent));
    }

    #[test]
    fn const_term_examples() {
        let s = TruncSeries::from_laurent(&Laurent::from_terms([(0, 1), (-2, 1), (1, -1)]));
        assert_eq!(s.const_term().unwrap(), BigInt::from(1));
        let s = TruncSeries::from_laurent(&Laurent::monomial(-1, 1));
        assert_eq!(s.const_term().unwrap(), BigInt::from(0));
        let a = TruncSeries::from_laurent(&Laurent::monomial(-1, 1));
        let b = TruncSeries::from_laurent(&Laurent::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(a.mul(&b).const_term().unwrap(), BigInt::from(1));
    }

    #[test]
    fn shallow_truncation_is_reported() {
        let s = TruncSeries::truncated(&Laurent::monomial(3, 1), 2);
        assert!(matches!(s.const_term(), Err(Error::ShallowTruncation { needed: 0, floor: 2 })));
    }

    #[test]
    fn product_floor_tracks_unknown_tail() {
        // (q^{-1} + O(q^{-5})) * q^2 is exact down to q^{-2}
        let a = TruncSeries::truncated(&Laurent::monomial(-1, 1), -4);
        let b = TruncSeries::from_laurent(&Laurent::monomial(2, 1));
        let p = a.mul(&b);
        assert_eq!(p.floor(), Some(-2));
        assert_eq!(p.coeff(1).unwrap(), BigInt::from(1));
    }
}
