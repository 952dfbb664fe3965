use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Result, Root, RootSet, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// Cartan type: a family letter and a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(Error::InvalidSpec(format!(
                "rank {rank} is out of range for family {}",
                family.letter()
            )))
        }
    }

    /// Every valid type with rank at most `max_rank`, in the order
    /// A, B, C, D, E, F, G and increasing rank.
    pub fn all_up_to(max_rank: usize) -> Vec<RootSystemSpec> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        families
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |n| RootSystemSpec::new(f, n).ok()))
            .collect()
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidSpec("empty type".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("cannot parse rank in `{s}`")))?;
        RootSystemSpec::new(family, rank)
    }
}

impl Serialize for RootSystemSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Dynkin diagram (0-based edges) and integer length weights.
///
/// Squared lengths are `2·weight / max_weight`, so long roots have squared
/// length 2. Numbering: chains for A/B/C/F/G with the double (triple) bond at
/// the end, D_n with α_{n-2} as branching node, and E_n with the branch hanging
/// off α₃ (E6), α₄ (E7) or α₅ (E8).
fn diagram(spec: RootSystemSpec) -> (Vec<(usize, usize)>, Vec<i64>) {
    let n = spec.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match spec.family {
        Family::A => (chain(n), vec![1; n]),
        Family::B => {
            let mut w = vec![2; n];
            w[n - 1] = 1;
            (chain(n), w)
        }
        Family::C => {
            let mut w = vec![1; n];
            w[n - 1] = 2;
            (chain(n), w)
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        Family::E => {
            let mut e = chain(n - 1);
            let branch = match n {
                6 => 2,
                7 => 3,
                _ => 4,
            };
            e.push((branch, n - 1));
            (e, vec![1; n])
        }
        Family::F => (chain(4), vec![1, 1, 2, 2]),
        Family::G => (chain(2), vec![1, 3]),
    }
}

/// A finite reduced root system with its positive roots in canonical order.
///
/// Immutable after construction. Simple roots are addressed by 0-based index
/// (`0` is α₁); positive roots by their index in
/// [`positive_roots`](Self::positive_roots).
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    /// `a_ij = <α_i, α_j∨>`
    cartan: Vec<Vec<i32>>,
    /// `max_weight · (α_i, α_j)`
    gram: Vec<Vec<i64>>,
    weight: Vec<i64>,
    max_weight: i64,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    theta: usize,
    theta_breve: Option<usize>,
    theta_tilde: Option<usize>,
    long: Vec<bool>,
    rho: Vec<i32>,
    /// `<α_j, θ∨>` per simple root.
    theta_simple: Vec<i32>,
    add_simple: Vec<Vec<Option<usize>>>,
    sums: Vec<Option<usize>>,
}

impl RootSystem {
    pub fn parse(s: &str) -> Result<Self> {
        Self::build(s.parse()?)
    }

    pub fn build(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let n = spec.rank;
        let (edges, weight) = diagram(spec);
        let max_weight = *weight.iter().max().unwrap();
        let mut neighbors = vec![Vec::new(); n];
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = 2 * weight[i];
        }
        for &(i, j) in &edges {
            let g = -weight[i].max(weight[j]);
            gram[i][j] = g;
            gram[j][i] = g;
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| (2 * gram[i][j] / gram[j][j]) as i32).collect())
            .collect();

        let positive = close_under_strings(n, &cartan);
        let index: HashMap<Root, usize> = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, r)| (r, k))
            .collect();
        let top_height = positive.last().unwrap().height();
        if positive.iter().filter(|r| r.height() == top_height).count() != 1 {
            return Err(Error::Internal("highest root is not unique".into()));
        }
        let theta = positive.len() - 1;

        let mut rs = RootSystem {
            spec,
            edges,
            neighbors,
            cartan,
            gram,
            weight,
            max_weight,
            positive,
            index,
            theta,
            theta_breve: None,
            theta_tilde: None,
            long: Vec::new(),
            rho: Vec::new(),
            theta_simple: Vec::new(),
            add_simple: Vec::new(),
            sums: Vec::new(),
        };

        rs.theta_simple = (0..n).map(|j| rs.pairing(&rs.simple(j), rs.theta())).collect();
        rs.long = rs
            .positive
            .iter()
            .map(|r| rs.gram_dot(r.coeffs(), r.coeffs()) == 2 * rs.max_weight)
            .collect();
        rs.rho = rs
            .positive
            .iter()
            .map(|r| rs.coroot_coeffs(r).iter().sum())
            .collect();
        rs.add_simple = (0..rs.positive.len())
            .map(|k| {
                (0..n)
                    .map(|i| rs.index_of(&(&rs.positive[k] + &Root::simple(n, i))))
                    .collect()
            })
            .collect();
        let size = rs.positive.len();
        let mut sums = vec![None; size * size];
        for a in 0..size {
            for b in 0..size {
                sums[a * size + b] = rs.index_of(&(&rs.positive[a] + &rs.positive[b]));
            }
        }
        rs.sums = sums;

        if spec.family != Family::A {
            let theta_root = rs.theta();
            let breve = Root::new(theta_root.coeffs().iter().map(|c| c / 2).collect());
            let tilde = theta_root - &breve;
            let (Some(b), Some(t)) = (rs.index_of(&breve), rs.index_of(&tilde)) else {
                return Err(Error::Internal(format!(
                    "{spec}: halves of the highest root are not roots"
                )));
            };
            rs.theta_breve = Some(b);
            rs.theta_tilde = Some(t);
        }
        Ok(rs)
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Dynkin edges as 0-based `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].contains(&j)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.positive[k]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn require_index(&self, r: &Root) -> Result<usize> {
        self.index_of(r).ok_or_else(|| Error::RootNotInSystem(r.clone()))
    }

    pub fn simple(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn simple_index(&self, i: usize) -> usize {
        self.index[&self.simple(i)]
    }

    /// `±` a root of Δ.
    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&-r)
    }

    pub fn theta(&self) -> &Root {
        &self.positive[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn is_long(&self, k: usize) -> bool {
        self.long[k]
    }

    pub fn is_long_root(&self, r: &Root) -> bool {
        self.gram_dot(r.coeffs(), r.coeffs()) == 2 * self.max_weight
    }

    pub fn simple_is_long(&self, i: usize) -> bool {
        self.weight[i] == self.max_weight
    }

    /// 0-based indices of the long simple roots, `Π_l`.
    pub fn long_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.simple_is_long(i)).collect()
    }

    pub fn short_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.simple_is_long(i)).collect()
    }

    /// `(ρ, μ∨)` for the positive root with index `k`.
    pub fn rho_pairing(&self, k: usize) -> i32 {
        self.rho[k]
    }

    pub fn rho_pairing_table(&self) -> &[i32] {
        &self.rho
    }

    /// `h* = (ρ, θ∨) + 1`.
    pub fn dual_coxeter(&self) -> usize {
        (self.rho[self.theta] + 1) as usize
    }

    /// Index of `μ + α_i` if that is a positive root.
    pub fn add_simple(&self, k: usize, i: usize) -> Option<usize> {
        self.add_simple[k][i]
    }

    /// Index of `μ_a + μ_b` if that is a positive root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.positive.len() + b]
    }

    /// `max_weight · (x, y)`, an integer for lattice vectors.
    pub(crate) fn gram_dot(&self, x: &[i32], y: &[i32]) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] as i64 * self.gram[i][j] * y[j] as i64;
            }
        }
        s
    }

    /// Exact inner product `(x, y)` evaluated in the scalar type `T`.
    pub fn inner_product<T: Scalar>(&self, x: &Root, y: &Root) -> T {
        T::from_ratio(self.gram_dot(x.coeffs(), y.coeffs()), self.max_weight)
    }

    /// Squared length of the simple root `α_i`.
    pub fn norm2<T: Scalar>(&self, i: usize) -> T {
        T::from_ratio(2 * self.weight[i], self.max_weight)
    }

    /// `<x, μ∨> = 2(x, μ)/(μ, μ)`; integral whenever `μ` is a root.
    pub fn pairing(&self, x: &Root, mu: &Root) -> i32 {
        let num = 2 * self.gram_dot(x.coeffs(), mu.coeffs());
        let den = self.gram_dot(mu.coeffs(), mu.coeffs());
        debug_assert_eq!(num % den, 0, "non-integral pairing {x} with {mu}");
        (num / den) as i32
    }

    /// `(x, θ)`, which equals `<x, θ∨>` since `(θ, θ) = 2`.
    pub fn theta_pairing(&self, x: &Root) -> i32 {
        x.coeffs().iter().zip(&self.theta_simple).map(|(a, b)| a * b).sum()
    }

    /// Coefficients of `μ∨` over the simple coroots.
    pub fn coroot_coeffs(&self, mu: &Root) -> Vec<i32> {
        let half_norm = self.gram_dot(mu.coeffs(), mu.coeffs()) / 2;
        mu.coeffs()
            .iter()
            .zip(&self.weight)
            .map(|(&c, &w)| {
                let v = c as i64 * w;
                debug_assert_eq!(v % half_norm, 0);
                (v / half_norm) as i32
            })
            .collect()
    }

    /// `μ∨ = 2μ/(μ, μ)` as coefficients over the simple coroots.
    pub fn coroot<T: Scalar>(&self, mu: &Root) -> Vec<T> {
        let half_norm = self.gram_dot(mu.coeffs(), mu.coeffs()) / 2;
        mu.coeffs()
            .iter()
            .zip(&self.weight)
            .map(|(&c, &w)| T::from_ratio(c as i64 * w, half_norm))
            .collect()
    }

    /// Simple reflection `s_i(x) = x − <x, α_i∨> α_i`.
    pub fn reflect(&self, i: usize, x: &Root) -> Root {
        let p: i32 = (0..self.rank()).map(|j| x.coeff(j) * self.cartan[j][i]).sum();
        let mut c = x.coeffs().to_vec();
        c[i] -= p;
        Root::new(c)
    }

    /// The order `μ ≼ ν`.
    pub fn is_leq(&self, mu: &Root, nu: &Root) -> bool {
        mu.le_coeffwise(nu)
    }

    pub fn is_leq_idx(&self, a: usize, b: usize) -> bool {
        self.positive[a].le_coeffwise(&self.positive[b])
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.is_leq_idx(a, b) || self.is_leq_idx(b, a)
    }

    /// Lower covers of `ν` in the Hasse diagram: `ν − α_i ∈ Δ⁺`.
    pub fn covers(&self, nu: &Root) -> Result<Vec<Root>> {
        let k = self.require_index(nu)?;
        Ok(self.lower_covers(k).into_iter().map(|j| self.positive[j].clone()).collect())
    }

    /// Lower covers by index, ascending.
    pub fn lower_covers(&self, k: usize) -> Vec<usize> {
        let nu = &self.positive[k];
        let mut v: Vec<usize> = (0..self.rank())
            .filter_map(|i| self.index_of(&(nu - &self.simple(i))))
            .collect();
        v.sort_unstable();
        v
    }

    /// Upper covers by index, ascending.
    pub fn upper_covers(&self, k: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.add_simple[k].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Meet in `(Δ⁺, ≼)`: the coefficientwise minimum, defined when supports
    /// intersect.
    pub fn meet(&self, mu: &Root, nu: &Root) -> Result<Root> {
        self.require_index(mu)?;
        self.require_index(nu)?;
        let disjoint = mu
            .coeffs()
            .iter()
            .zip(nu.coeffs())
            .all(|(&a, &b)| a == 0 || b == 0);
        if disjoint {
            return Err(Error::MeetUndefined(mu.clone(), nu.clone()));
        }
        let m = mu.zip_with(nu, i32::min);
        if self.index_of(&m).is_none() {
            return Err(Error::Internal(format!("meet of {mu} and {nu} is not a root")));
        }
        Ok(m)
    }

    /// Join in `(Δ⁺, ≼)`: the least common upper bound.
    ///
    /// Coincides with the coefficientwise maximum when the supports meet.
    pub fn join(&self, mu: &Root, nu: &Root) -> Result<Root> {
        self.require_index(mu)?;
        self.require_index(nu)?;
        let bounds: Vec<&Root> = self
            .positive
            .iter()
            .filter(|r| mu.le_coeffwise(r) && nu.le_coeffwise(r))
            .collect();
        let least = bounds
            .iter()
            .find(|b| bounds.iter().all(|c| b.le_coeffwise(c)))
            .ok_or_else(|| Error::Internal(format!("join of {mu} and {nu} does not exist")))?;
        Ok((*least).clone())
    }

    /// `θ̆ = Σ ⌊{θ:α}/2⌋ α`; absent in type A where it vanishes.
    pub fn theta_breve(&self) -> Option<&Root> {
        self.theta_breve.map(|k| &self.positive[k])
    }

    pub fn theta_breve_index(&self) -> Option<usize> {
        self.theta_breve
    }

    /// `θ̃ = θ − θ̆`; absent in type A.
    pub fn theta_tilde(&self) -> Option<&Root> {
        self.theta_tilde.map(|k| &self.positive[k])
    }

    pub fn theta_tilde_index(&self) -> Option<usize> {
        self.theta_tilde
    }

    /// The Heisenberg set `{γ ∈ Δ⁺ : (γ, θ) > 0}`.
    pub fn heisenberg_set(&self) -> RootSet {
        RootSet::from_indices(
            self.num_positive(),
            (0..self.num_positive()).filter(|&k| self.theta_pairing(&self.positive[k]) > 0),
        )
    }

    /// Odd simple roots: `{θ : α}` odd.
    pub fn odd_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.theta().coeff(i) % 2 != 0).collect()
    }

    /// Sum of the simple roots in `set`, `|M|`.
    pub fn sum_of_simple(&self, set: &[usize]) -> Root {
        let mut c = vec![0; self.rank()];
        for &i in set {
            c[i] += 1;
        }
        Root::new(c)
    }

    /// Whether `set` induces a connected subdiagram.
    pub fn is_connected(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return true;
        };
        let mut seen = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if set.contains(&w) && !seen.contains(&w) {
                    seen.push(w);
                    queue.push_back(w);
                }
            }
        }
        seen.len() == set.len()
    }
}

/// Closure of the simple roots under root strings.
fn close_under_strings(n: usize, cartan: &[Vec<i32>]) -> Vec<Root> {
    let mut all: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut layer: Vec<Root> = all.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let simple = Root::simple(n, i);
                if *beta == simple {
                    continue;
                }
                let mut p = 0;
                let mut down = beta - &simple;
                while all.contains(&down) {
                    p += 1;
                    down = &down - &simple;
                }
                let pair: i32 = (0..n).map(|j| beta.coeff(j) * cartan[j][i]).sum();
                if p - pair > 0 {
                    next.insert(beta + &simple);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    all.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn classical_counts() {
        for n in 1..=8 {
            assert_eq!(rs(&format!("A{n}")).num_positive(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(rs(&format!("B{n}")).num_positive(), n * n);
            assert_eq!(rs(&format!("C{n}")).num_positive(), n * n);
        }
        for n in 4..=8 {
            assert_eq!(rs(&format!("D{n}")).num_positive(), n * (n - 1));
        }
        assert_eq!(rs("E6").num_positive(), 36);
        assert_eq!(rs("E7").num_positive(), 63);
        assert_eq!(rs("E8").num_positive(), 120);
        assert_eq!(rs("F4").num_positive(), 24);
        assert_eq!(rs("G2").num_positive(), 6);
    }

    #[test]
    fn rank_bounds_rejected() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3"] {
            assert!(matches!(RootSystem::parse(bad), Err(Error::InvalidSpec(_))), "{bad}");
        }
        assert!(matches!(RootSystem::parse("H3"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A2").theta(), &Root::from([1, 1]));
        assert_eq!(rs("E6").theta(), &Root::from([1, 2, 3, 2, 1, 2]));
        assert_eq!(rs("E7").theta(), &Root::from([1, 2, 3, 4, 3, 2, 2]));
        assert_eq!(rs("E8").theta(), &Root::from([2, 3, 4, 5, 6, 4, 2, 3]));
        assert_eq!(rs("F4").theta(), &Root::from([2, 4, 3, 2]));
        assert_eq!(rs("G2").theta(), &Root::from([3, 2]));
        assert_eq!(rs("D4").theta(), &Root::from([1, 2, 1, 1]));
        assert_eq!(rs("B3").theta(), &Root::from([1, 2, 2]));
        assert_eq!(rs("C3").theta(), &Root::from([2, 2, 1]));
    }

    #[test]
    fn long_simple_roots() {
        assert_eq!(rs("G2").long_simple(), vec![1]);
        assert_eq!(rs("F4").long_simple(), vec![2, 3]);
        assert_eq!(rs("B4").long_simple(), vec![0, 1, 2]);
        assert_eq!(rs("C4").long_simple(), vec![3]);
        assert_eq!(rs("E7").long_simple().len(), 7);
    }

    #[test]
    fn inner_products() {
        let a2 = rs("A2");
        let ip: Rational = a2.inner_product(&a2.simple(0), &a2.simple(1));
        assert_eq!(ip, Rational::from_integer(-1));
        let b3 = rs("B3");
        let ip: Rational = b3.inner_product(&b3.simple(2), &b3.simple(2));
        assert_eq!(ip, Rational::from_integer(1));
        let g2 = rs("G2");
        let n: Rational = g2.norm2(0);
        assert_eq!(n, Rational::new(2, 3));
        let f: f64 = g2.inner_product(g2.theta(), g2.theta());
        assert!((f - 2.0).abs() < 1e-12);
        for s in ["A3", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(s);
            let t: Rational = r.inner_product(r.theta(), r.theta());
            assert_eq!(t, Rational::from_integer(2), "{s}");
        }
    }

    #[test]
    fn coroots() {
        let a2 = rs("A2");
        assert_eq!(a2.coroot_coeffs(a2.theta()), vec![1, 1]);
        assert_eq!(a2.rho_pairing(a2.theta_index()), 2);
        let b3 = rs("B3");
        let e1 = Root::from([1, 1, 1]);
        assert!(!b3.is_long_root(&e1));
        assert_eq!(b3.coroot_coeffs(&e1), vec![2, 2, 1]);
        let k = b3.index_of(&e1).unwrap();
        assert_eq!(b3.rho_pairing(k), 5);
        let cr: Vec<Rational> = b3.coroot(&e1);
        assert_eq!(cr.iter().sum::<Rational>(), Rational::from_integer(5));
    }

    #[test]
    fn rho_pairing_is_one_on_simple_roots() {
        for spec in RootSystemSpec::all_up_to(8) {
            let r = RootSystem::build(spec).unwrap();
            for i in 0..r.rank() {
                assert_eq!(r.rho_pairing(r.simple_index(i)), 1);
            }
        }
    }

    #[test]
    fn long_simple_roots_connected() {
        for spec in RootSystemSpec::all_up_to(8) {
            let r = RootSystem::build(spec).unwrap();
            assert!(r.is_connected(&r.long_simple()), "{spec}");
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expect = [("A2", 3), ("E6", 12), ("E7", 18), ("E8", 30), ("F4", 9), ("G2", 4), ("D4", 6), ("B3", 5), ("C3", 4)];
        for (s, h) in expect {
            assert_eq!(rs(s).dual_coxeter(), h, "{s}");
        }
    }

    #[test]
    fn covers_and_order() {
        let a2 = rs("A2");
        assert_eq!(a2.covers(a2.theta()).unwrap(), vec![a2.simple(1), a2.simple(0)]);
        assert!(a2.covers(&a2.simple(0)).unwrap().is_empty());
        let e6 = rs("E6");
        assert!(e6.is_leq(&Root::from([1, 1, 1, 0, 0, 1]), e6.theta()));
        let d4 = rs("D4");
        // ε1−ε3 = α1+α2 and ε2+ε3 = α2+α3+α4
        assert!(!d4.is_leq(&Root::from([1, 1, 0, 0]), &Root::from([0, 1, 1, 1])));
        assert!(!d4.is_leq(&Root::from([0, 1, 1, 1]), &Root::from([1, 1, 0, 0])));
    }

    #[test]
    fn meets_and_joins() {
        let e6 = rs("E6");
        let a = Root::from([1, 1, 1, 1, 1, 1]);
        let b = Root::from([0, 1, 2, 1, 0, 1]);
        assert_eq!(e6.meet(&a, &b).unwrap(), Root::from([0, 1, 1, 1, 0, 1]));
        assert_eq!(e6.join(&a, &b).unwrap(), Root::from([1, 1, 2, 1, 1, 1]));
        assert_eq!(e6.meet(&a, &a).unwrap(), a);
        assert_eq!(e6.join(&a, &a).unwrap(), a);
        let a2 = rs("A2");
        assert!(matches!(a2.meet(&a2.simple(0), &a2.simple(1)), Err(Error::MeetUndefined(..))));
        assert_eq!(a2.join(&a2.simple(0), &a2.simple(1)).unwrap(), Root::from([1, 1]));
    }

    #[test]
    fn theta_halves() {
        assert!(rs("A5").theta_breve().is_none());
        let d4 = rs("D4");
        assert_eq!(d4.theta_breve().unwrap(), &Root::from([0, 1, 0, 0]));
        assert_eq!(d4.theta_tilde().unwrap(), &Root::from([1, 1, 1, 1]));
        let b3 = rs("B3");
        assert_eq!(b3.theta_breve().unwrap(), &Root::from([0, 1, 1]));
        assert_eq!(b3.theta_tilde().unwrap(), &Root::from([1, 1, 1]));
    }

    #[test]
    fn heisenberg_sizes() {
        for spec in RootSystemSpec::all_up_to(8) {
            let r = RootSystem::build(spec).unwrap();
            assert_eq!(r.heisenberg_set().len(), 2 * r.dual_coxeter() - 3, "{spec}");
        }
    }
}
