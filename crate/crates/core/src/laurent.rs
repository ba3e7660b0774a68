//! Sparse Laurent polynomials in one variable with unbounded integer
//! coefficients. The same type carries polynomials in `q` and in `v`; the
//! variable name only matters when rendering or parsing.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::literal::Cursor;

/// Canonical form: no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Laurent::zero();
        for (e, c) in it {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single term `c·x^e`, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// `x ↦ x^{-1}`.
    pub fn bar(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Fixed by the bar involution.
    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Renders in canonical form with the given variable name, e.g. `3v^2+1-v^-3`.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parses the canonical grammar (whitespace tolerated).
    pub fn parse(text: &str, var: char) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let p = Self::parse_in(&mut cur, var)?;
        cur.finish()?;
        Ok(p)
    }

    pub(crate) fn parse_in(cur: &mut Cursor<'_>, var: char) -> Result<Self> {
        let var = var as u8;
        let mut out = Laurent::zero();
        let mut first = true;
        loop {
            let sign: i64 = if cur.eat(b'-') {
                -1
            } else if cur.eat(b'+') || first {
                1
            } else {
                break;
            };
            first = false;
            let coeff = if cur.peek_digit() { Some(cur.uint()?) } else { None };
            if coeff.is_some() {
                cur.eat(b'*');
            }
            let exp = if cur.eat(var) {
                if cur.eat(b'^') {
                    cur.int()?
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(cur.error("expected a coefficient or the variable"));
            };
            let c = BigInt::from(coeff.unwrap_or(1)) * sign;
            out.add_term(exp, c);
            if cur.at_end() {
                break;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('v'))
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::monomial(0, c)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

/// Symmetric quantum integer `[n] = (v^n - v^-n)/(v - v^-1)`, for `n ≥ 0`.
pub fn quantum_int(n: u32) -> Laurent {
    let n = i64::from(n);
    Laurent::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// Symmetric Gaussian binomial `[m p]` in `v`; zero outside `0 ≤ p ≤ m`.
///
/// Uses the Pascal-type recursion `[m p] = v^{p}[m-1 p] + v^{p-m}[m-1 p-1]`.
pub fn v_binomial(m: u32, p: i64) -> Laurent {
    let m_i = i64::from(m);
    if p < 0 || p > m_i {
        return Laurent::zero();
    }
    // row[k] holds [r k] for the current r
    let mut row: Vec<Laurent> = vec![Laurent::one()];
    for r in 1..=m_i {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=r {
            let mut entry = Laurent::zero();
            if k < r {
                entry += &row[k as usize].shift(k);
            }
            if k >= 1 {
                entry += &row[(k - 1) as usize].shift(k - r);
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(p as usize)
}
