//! Dimension combinatorics of graded quiver varieties: `d_{λα}`, `d_{γη}`,
//! the ranks `κ^±`, and the incidence numbers `d_{η′η}`, `e_{η′η}`.
//!
//! Every quantity is a constant term of a finite pairing, so no series are
//! involved. Notation: `(q^s η̄ | x)_0 = Σ_{i,k} η_{ik} x_{i,k−s}`.

use std::fmt;

use crate::cartan::{CartanDatum, Root, Weight};
use crate::error::{Error, Result};
use crate::lattice::{pair_bar_const, Lattice, XElem, YElem};

/// `(q^s η̄ | x)_0`.
fn pair_shift(eta: &YElem, s: i64, x: &XElem) -> i64 {
    pair_bar_const(eta, &x.shift(s))
}

/// `d_{λα} = (α | 2λ − α)`.
pub fn d_lambda_alpha(c: &CartanDatum, lambda: &Weight, alpha: &Root) -> i64 {
    let w = lambda.scale(2).sub(&c.root_to_weight(alpha));
    alpha.0.iter().zip(&w.0).map(|(a, b)| a * b).sum()
}

/// `d_{γη} = (η̄ | [2]γ − Ω(qη))_0`.
pub fn d_gamma_eta(lat: &Lattice, gamma: &XElem, eta: &YElem) -> i64 {
    let two_gamma = gamma.shift(1).add(&gamma.shift(-1));
    pair_bar_const(eta, &two_gamma.sub(&lat.omega(&eta.shift(1))))
}

fn kappa_plus(lat: &Lattice, g1: &XElem, g2: &XElem, e1: &YElem, e2: &YElem) -> i64 {
    pair_shift(e1, 0, &g2.shift(-1)) + pair_shift(e2, 0, &g1.shift(1)) - pair_shift(e2, 0, &lat.omega(e1).shift(1))
}

/// `(κ^+_{η′η″}, κ^-_{η′η″})` with
/// `κ^+ = (η̄′|q^{-1}γ″)_0 + (η̄″|qγ′)_0 − (η̄″|qΩ(η′))_0` and
/// `κ^-_{η′η″}(γ′,γ″) = κ^+_{η″η′}(γ″,γ′)`.
pub fn kappa_pm(lat: &Lattice, g1: &XElem, g2: &XElem, e1: &YElem, e2: &YElem) -> (i64, i64) {
    (kappa_plus(lat, g1, g2, e1, e2), kappa_plus(lat, g2, g1, e2, e1))
}

/// `(κ^+_η, κ^-_η) = (d_{λα}/2, d_{λα}/2 − d_{γη})`.
pub fn kappa_eta(lat: &Lattice, lambda: &Weight, alpha: &Root, gamma: &XElem, eta: &YElem) -> Result<(i64, i64)> {
    let d = d_lambda_alpha(lat.cartan(), lambda, alpha);
    if d % 2 != 0 {
        return Err(Error::OddDimension(d));
    }
    Ok((d / 2, d / 2 - d_gamma_eta(lat, gamma, eta)))
}

fn step(lat: &Lattice, eta: &YElem, i: usize, t: i64) -> Result<YElem> {
    if i == 0 || i > lat.rank() {
        return Err(Error::Precondition(format!("node {i} outside 1..={}", lat.rank())));
    }
    Ok(eta.add(&YElem::monomial(i, t, 1)))
}

/// `d_{η′η}` solved from
/// `d_{γη} + d_{γη′} − d_{η′η} = (qη̄ + q^{-1}η̄′ | γ)_0 − (qη̄ | Ω(η′))_0`.
pub fn c_dim_pair(lat: &Lattice, gamma: &XElem, eta: &YElem, eta1: &YElem) -> Result<i64> {
    if eta == eta1 {
        return Err(Error::Precondition("η′ must differ from η".into()));
    }
    let rhs = pair_shift(eta, 1, gamma) + pair_shift(eta1, -1, gamma) - pair_shift(eta, 1, &lat.omega(eta1));
    Ok(d_gamma_eta(lat, gamma, eta) + d_gamma_eta(lat, gamma, eta1) - rhs)
}

/// `d_{η′η}` for `η′ = η + q^t α_i`.
pub fn c_dim(lat: &Lattice, gamma: &XElem, eta: &YElem, i: usize, t: i64) -> Result<i64> {
    c_dim_pair(lat, gamma, eta, &step(lat, eta, i, t)?)
}

/// `e_{η′η} = 1 + (α_i | q^{-t}(q^{-1} − q)(γ − η′))_0` for `η′ = η + q^t α_i`.
pub fn e_dim(lat: &Lattice, gamma: &XElem, eta: &YElem, i: usize, t: i64) -> Result<i64> {
    let x = lat.sub_xy(gamma, &step(lat, eta, i, t)?);
    Ok(1 + x.coeff(i, t + 1) - x.coeff(i, t - 1))
}

/// `e_{η′η}` through `d_{γη} + d_{γη′} − 2 d_{η′η}`.
pub fn e_dim_via_d(lat: &Lattice, gamma: &XElem, eta: &YElem, i: usize, t: i64) -> Result<i64> {
    let eta1 = step(lat, eta, i, t)?;
    Ok(d_gamma_eta(lat, gamma, eta) + d_gamma_eta(lat, gamma, &eta1) - 2 * c_dim_pair(lat, gamma, eta, &eta1)?)
}

/// A computed dimension together with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub name: String,
    pub value: i64,
    pub inputs: Vec<(String, String)>,
}

impl DimReport {
    pub fn new(name: &str, value: i64, inputs: &[(&str, String)]) -> DimReport {
        DimReport {
            name: name.to_string(),
            value,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} = {}  [{}]", self.name, self.value, args.join(", "))
    }
}
