//! Cartan data of finite type, the lattices `P` and `Q`, and folding by
//! diagram automorphisms.
//!
//! Nodes are labelled `1..=rank` following Bourbaki. Internally node `i` is
//! stored at index `i - 1`; every public constructor and renderer uses the
//! 1-based labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    name: String,
    a: Vec<Vec<i64>>,
    sym: Vec<i64>,
    simply_laced: bool,
    adj: Vec<Vec<i64>>,
    det: i64,
}

/// Weight in the basis of fundamental weights `ω_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// Element of the root lattice in the basis of simple roots `α_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut w = vec![0; rank];
        w[node - 1] = 1;
        Weight(w)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Sum of the coordinates.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Comma-separated coordinates, as accepted by [`Weight::parse`].
    pub fn render(&self) -> String {
        self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Parses `1,0,2` (optionally wrapped in brackets or parentheses).
    pub fn parse(text: &str, rank: usize) -> Result<Weight> {
        let t = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let mut out = Vec::with_capacity(rank);
        let mut offset = 0;
        for part in t.split(',') {
            let v = part.trim().parse::<i64>().map_err(|_| Error::parse(offset, "expected an integer coordinate"))?;
            out.push(v);
            offset += part.len() + 1;
        }
        if out.len() != rank {
            return Err(Error::parse(0, format!("expected {rank} coordinates, got {}", out.len())));
        }
        Ok(Weight(out))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render())
    }
}

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, node: usize) -> Self {
        let mut r = vec![0; rank];
        r[node - 1] = 1;
        Root(r)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn chain_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// Standard Cartan matrix of a simply-laced finite type, Bourbaki numbering.
pub fn build_cartan(family: Family, rank: usize) -> Result<CartanDatum> {
    let bad = || Error::InvalidCartanType { family: format!("{family:?}"), rank };
    let edges: Vec<(usize, usize)> = match family {
        Family::A if rank >= 1 => chain_edges(rank),
        Family::D if rank >= 4 => {
            let mut e = chain_edges(rank - 1);
            e.push((rank - 2, rank));
            e
        }
        Family::E if (6..=8).contains(&rank) => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
            e.extend((5..rank).map(|i| (i, i + 1)));
            e
        }
        _ => return Err(bad()),
    };
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    let mut c = CartanDatum::new(a)?;
    c.name = format!("{family:?}{rank}");
    Ok(c)
}

/// Parses a type literal such as `A2`, `D4`, `E6`.
pub fn parse_type(text: &str) -> Result<CartanDatum> {
    let t = text.trim();
    let mut chars = t.chars();
    let family = match chars.next() {
        Some('A') | Some('a') => Family::A,
        Some('D') | Some('d') => Family::D,
        Some('E') | Some('e') => Family::E,
        _ => return Err(Error::parse(0, format!("unknown Cartan family in {t:?}"))),
    };
    let rank = chars.as_str().parse::<usize>().map_err(|_| Error::parse(1, "expected a rank"))?;
    build_cartan(family, rank)
}

/// Parses an orbit partition such as `1,3|2`.
pub fn parse_orbits(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for block in text.split('|') {
        let mut orbit = Vec::new();
        for node in block.split(',') {
            let n = node
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(offset, format!("bad node label {node:?}")))?;
            orbit.push(n);
            offset += node.len() + 1;
        }
        out.push(orbit);
    }
    Ok(out)
}

impl CartanDatum {
    /// Validates and wraps a generalized Cartan matrix; only finite types are accepted.
    #[allow(clippy::needless_range_loop)]
    pub fn new(a: Vec<Vec<i64>>) -> Result<CartanDatum> {
        let n = a.len();
        if n == 0 || a.iter().any(|r| r.len() != n) {
            return Err(Error::NotFiniteType("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::NotFiniteType(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(Error::NotFiniteType(format!("bad off-diagonal pair ({}, {})", i + 1, j + 1)));
                }
            }
        }
        let sym = symmetrizer(&a)?;
        let b: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| sym[i] * a[i][j]).collect()).collect();
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
            if determinant(&minor) <= 0 {
                return Err(Error::NotFiniteType("symmetrized matrix is not positive definite".into()));
            }
        }
        let simply_laced = (0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i] && (i == j || a[i][j] >= -1)));
        let adj = adjugate(&a);
        let det = determinant(&a);
        Ok(CartanDatum { name: "custom".into(), a, sym, simply_laced, adj, det })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Node labels `1..=rank`.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.rank()
    }

    /// Entry `a_{ij}` by 1-based labels.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Symmetrizer `d_i` with `(α_i, α_i) = 2 d_i`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub(crate) fn require_simply_laced(&self) -> Result<()> {
        if self.simply_laced {
            Ok(())
        } else {
            Err(Error::NotSimplyLaced)
        }
    }

    /// 0-based neighbour indices of a 0-based node index.
    pub(crate) fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.a[i][j] != 0)
    }

    /// `α_i ↦ Σ_j a_{ji} ω_j`, extended linearly.
    pub fn root_to_weight(&self, alpha: &Root) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|j| (0..n).map(|i| self.a[j][i] * alpha.0[i]).sum()).collect())
    }

    /// `β ≥ α` in the root order.
    pub fn geq(&self, beta: &Root, alpha: &Root) -> bool {
        beta.sub(alpha).is_positive()
    }

    /// `λ ≥ α`, i.e. `λ - α ∈ P⁺`.
    pub fn geq_pp(&self, lambda: &Weight, alpha: &Root) -> bool {
        lambda.sub(&self.root_to_weight(alpha)).is_dominant()
    }

    /// `(x, y)` for roots, normalized by `(α_i, α_j) = d_i a_{ij}`.
    pub fn root_form(&self, x: &Root, y: &Root) -> i64 {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| x.0[i] * self.sym[i] * self.a[i][j] * y.0[j]).sum::<i64>()).sum()
    }

    /// `(α, λ)` with `(α_i, ω_j) = d_i δ_{ij}`.
    pub fn root_weight_form(&self, alpha: &Root, lambda: &Weight) -> i64 {
        (0..self.rank()).map(|i| alpha.0[i] * self.sym[i] * lambda.0[i]).sum()
    }

    /// Weight expressed in root coordinates, scaled by `det(A)`; returns `(coords, det)`.
    pub fn weight_to_scaled_root(&self, lambda: &Weight) -> (Vec<i64>, i64) {
        let n = self.rank();
        ((0..n).map(|i| (0..n).map(|j| self.adj[i][j] * lambda.0[j]).sum()).collect(), self.det)
    }

    /// Height of a weight in root coordinates, scaled by `det(A) > 0`.
    pub fn scaled_height(&self, lambda: &Weight) -> i64 {
        self.weight_to_scaled_root(lambda).0.iter().sum()
    }

    /// `(λ, μ)` on weights, scaled by `det(A)`.
    pub fn scaled_weight_form(&self, lambda: &Weight, mu: &Weight) -> i64 {
        let (c, _) = self.weight_to_scaled_root(lambda);
        (0..self.rank()).map(|i| c[i] * self.sym[i] * mu.0[i]).sum()
    }

    /// Simple reflection `s_i` (1-based) on a weight.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let k = w.0[i - 1];
        let mut out = w.clone();
        for j in 0..self.rank() {
            out.0[j] -= k * self.a[j][i - 1];
        }
        out
    }

    /// Dominant representative of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.0.iter().position(|&x| x < 0) {
            cur = self.reflect_weight(i + 1, &cur);
        }
        cur
    }

    /// Positive roots by closure of the simple roots under simple reflections,
    /// sorted by height then coordinates.
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 1..=n {
            let r = Root::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            let w = self.root_to_weight(&beta);
            for j in 0..n {
                let mut img = beta.clone();
                img.0[j] -= w.0[j];
                if img.is_positive() && !img.is_zero() && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut out: Vec<Root> = seen.into_iter().collect();
        out.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));
        out
    }

    /// Order of the Weyl group, from the exponents read off the root heights.
    pub fn weyl_group_order(&self) -> u128 {
        weyl_order_from_roots(&self.positive_roots())
    }

    /// Order of the parabolic subgroup generated by `s_i` for the given 1-based nodes.
    pub fn parabolic_order(&self, nodes: &[usize]) -> u128 {
        if nodes.is_empty() {
            return 1;
        }
        let sub: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| self.entry(i, j)).collect()).collect();
        let datum = CartanDatum::new(sub).expect("principal submatrix of a finite type is finite");
        datum.weyl_group_order()
    }

    /// Size of the Weyl orbit of a dominant weight.
    pub fn orbit_size(&self, mu: &Weight) -> u128 {
        let stab: Vec<usize> = (1..=self.rank()).filter(|&i| mu.0[i - 1] == 0).collect();
        self.weyl_group_order() / self.parabolic_order(&stab)
    }

    /// Folds along a partition of the nodes into automorphism orbits:
    /// `ā_{I J} = Σ_{i∈I} a_{ij}` for any `j ∈ J`.
    pub fn fold(&self, orbits: &[Vec<usize>]) -> Result<CartanDatum> {
        self.require_simply_laced()?;
        let n = self.rank();
        let mut owner = vec![usize::MAX; n];
        for (k, orbit) in orbits.iter().enumerate() {
            if orbit.is_empty() {
                return Err(Error::InvalidFolding("empty orbit".into()));
            }
            for &i in orbit {
                if i == 0 || i > n {
                    return Err(Error::InvalidFolding(format!("node {i} out of range")));
                }
                if owner[i - 1] != usize::MAX {
                    return Err(Error::InvalidFolding(format!("node {i} listed twice")));
                }
                owner[i - 1] = k;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidFolding(format!("node {} not covered", i + 1)));
        }
        if orbits.iter().all(|o| o.len() == 1) {
            let mut same = CartanDatum::new(
                orbits.iter().map(|oi| orbits.iter().map(|oj| self.entry(oi[0], oj[0])).collect()).collect(),
            )?;
            same.name = self.name.clone();
            return Ok(same);
        }
        for orbit in orbits {
            for &i in orbit {
                for &j in orbit {
                    if i != j && self.entry(i, j) != 0 {
                        return Err(Error::InvalidFolding(format!("nodes {i} and {j} of one orbit are adjacent")));
                    }
                }
            }
        }
        let m = orbits.len();
        let mut folded = vec![vec![0i64; m]; m];
        for (x, oi) in orbits.iter().enumerate() {
            for (y, oj) in orbits.iter().enumerate() {
                let sums: BTreeSet<i64> = oj.iter().map(|&j| oi.iter().map(|&i| self.entry(i, j)).sum()).collect();
                if sums.len() != 1 {
                    return Err(Error::InvalidFolding(format!(
                        "entry ({}, {}) depends on the representative",
                        x + 1,
                        y + 1
                    )));
                }
                folded[x][y] = *sums.iter().next().expect("nonempty");
            }
        }
        let mut out = CartanDatum::new(folded).map_err(|e| Error::InvalidFolding(e.to_string()))?;
        out.simply_laced = false;
        out.name = format!("{}/{}", self.name, render_orbits(orbits));
        Ok(out)
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn render_orbits(orbits: &[Vec<usize>]) -> String {
    orbits
        .iter()
        .map(|o| o.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    // d_j / d_i = a_ij / a_ji along edges; kept as reduced fractions (num, den)
    let n = a.len();
    let mut frac: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if frac[start].is_some() {
            continue;
        }
        frac[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = frac[i].expect("visited");
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let (np, nq) = (p * a[i][j], q * a[j][i]);
                let g = np.gcd(&nq);
                let cand = (np / g * nq.signum(), (nq / g).abs());
                match frac[j] {
                    None => {
                        frac[j] = Some(cand);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != cand => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    let fr: Vec<(i64, i64)> = frac.into_iter().map(|f| f.expect("all visited")).collect();
    let l = fr.iter().fold(1i64, |acc, (_, q)| acc.lcm(q));
    let ints: Vec<i64> = fr.iter().map(|(p, q)| p * (l / q)).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

/// Exact determinant by fraction-free Bareiss elimination.
pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant fits in i64")
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * determinant(&minor);
        }
    }
    adj
}

fn weyl_order_from_roots(roots: &[Root]) -> u128 {
    let max_h = roots.iter().map(|r| r.height()).max().unwrap_or(0);
    let count = |h: i64| roots.iter().filter(|r| r.height() == h).count() as i64;
    let mut order: u128 = 1;
    for h in 1..=max_h {
        let mult = count(h) - count(h + 1);
        for _ in 0..mult {
            order *= (h + 1) as u128;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_types() {
        assert_eq!(build_cartan(Family::A, 1).unwrap().matrix(), &[vec![2]]);
        assert_eq!(build_cartan(Family::A, 2).unwrap().matrix(), &[vec![2, -1], vec![-1, 2]]);
        let d4 = build_cartan(Family::D, 4).unwrap();
        for j in [1, 3, 4] {
            assert_eq!(d4.entry(2, j), -1);
        }
        assert_eq!(d4.entry(1, 3), 0);
        assert!(d4.is_simply_laced());
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_cartan(Family::D, 3).is_err());
        assert!(build_cartan(Family::E, 9).is_err());
        assert!(build_cartan(Family::A, 0).is_err());
        assert!(parse_type("F4").is_err());
        // affine A1
        assert!(CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn root_embedding() {
        let a1 = parse_type("A1").unwrap();
        assert_eq!(a1.root_to_weight(&Root(vec![1])), Weight(vec![2]));
        let a2 = parse_type("A2").unwrap();
        assert_eq!(a2.root_to_weight(&Root(vec![1, 0])), Weight(vec![2, -1]));
        assert_eq!(a2.root_to_weight(&Root::zero(2)), Weight::zero(2));
    }

    #[test]
    fn orders() {
        let a1 = parse_type("A1").unwrap();
        assert!(a1.geq(&Root(vec![1]), &Root(vec![0])));
        assert!(!a1.geq_pp(&Weight(vec![1]), &Root(vec![1])));
        assert!(a1.geq_pp(&Weight(vec![2]), &Root(vec![1])));
    }

    #[test]
    fn folding_examples() {
        let a3 = parse_type("A3").unwrap();
        let b2 = a3.fold(&parse_orbits("1,3|2").unwrap()).unwrap();
        assert_eq!(b2.matrix(), &[vec![2, -2], vec![-1, 2]]);
        assert!(!b2.is_simply_laced());
        assert_eq!(b2.positive_roots().len(), 4);
        let d4 = parse_type("D4").unwrap();
        let g2 = d4.fold(&parse_orbits("1,3,4|2").unwrap()).unwrap();
        assert_eq!(g2.matrix(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.positive_roots().len(), 6);
        let same = a3.fold(&parse_orbits("1|2|3").unwrap()).unwrap();
        assert_eq!(same.matrix(), a3.matrix());
        assert!(same.is_simply_laced());
    }

    #[test]
    fn folding_rejects_incompatible_partitions() {
        let a3 = parse_type("A3").unwrap();
        assert!(a3.fold(&parse_orbits("1,2|3").unwrap()).is_err());
        assert!(a3.fold(&parse_orbits("1|3").unwrap()).is_err());
        let a4 = parse_type("A4").unwrap();
        // {1,3} is not an automorphism orbit of A4
        assert!(a4.fold(&parse_orbits("1,3|2|4").unwrap()).is_err());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(parse_type("A1").unwrap().positive_roots(), vec![Root(vec![1])]);
        assert_eq!(
            parse_type("A2").unwrap().positive_roots(),
            vec![Root(vec![0, 1]), Root(vec![1, 0]), Root(vec![1, 1])]
        );
        for n in 1..=6 {
            assert_eq!(build_cartan(Family::A, n).unwrap().positive_roots().len(), n * (n + 1) / 2);
        }
        assert_eq!(parse_type("D4").unwrap().positive_roots().len(), 12);
        assert_eq!(parse_type("E6").unwrap().positive_roots().len(), 36);
        assert_eq!(parse_type("E8").unwrap().positive_roots().len(), 120);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(parse_type("A3").unwrap().weyl_group_order(), 24);
        assert_eq!(parse_type("D4").unwrap().weyl_group_order(), 192);
        assert_eq!(parse_type("E6").unwrap().weyl_group_order(), 51840);
        assert_eq!(parse_type("E8").unwrap().weyl_group_order(), 696_729_600);
        let g2 = parse_type("D4").unwrap().fold(&parse_orbits("1,3,4|2").unwrap()).unwrap();
        assert_eq!(g2.weyl_group_order(), 12);
    }

    #[test]
    fn symmetrized_matrices_are_positive_definite() {
        for t in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let c = parse_type(t).unwrap();
            assert!(c.symmetrizer().iter().all(|&d| d == 1));
        }
        let b2 = parse_type("A3").unwrap().fold(&parse_orbits("1,3|2").unwrap()).unwrap();
        assert_eq!(b2.symmetrizer(), &[1, 2]);
    }
}
