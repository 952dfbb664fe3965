//! Real affine roots `γ + kδ` and words in the affine simple reflections.
//!
//! Affine roots carry no `λ` component: it never enters the action of the
//! affine Weyl group on real roots. Generator `0` is `s₀ = s_{α₀}` with
//! `α₀ = δ − θ`; generator `i ≥ 1` is the finite simple reflection of `α_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, Root, RootIdeal, RootSet, RootSystem};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRoot {
    pub level: i32,
    pub finite: Root,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i32) -> Self {
        AffineRoot { level, finite }
    }

    /// `kδ − γ`.
    pub fn delta_minus(k: i32, gamma: &Root) -> Self {
        AffineRoot::new(-gamma, k)
    }

    /// The affine simple root for generator `i` (`0` is `α₀ = δ − θ`).
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        if i == 0 {
            AffineRoot::delta_minus(1, rs.theta())
        } else {
            AffineRoot::new(rs.simple(i - 1), 0)
        }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.level < 0 || (self.level == 0 && self.finite.is_negative())
    }

    /// Generator index if this is an element of `Π̂`.
    pub fn simple_generator(&self, rs: &RootSystem) -> Option<usize> {
        match self.level {
            0 => self.finite.simple_index().map(|i| i + 1),
            1 if &self.finite == &-rs.theta() => Some(0),
            _ => None,
        }
    }

    fn add_scaled(&self, k: i32, other: &AffineRoot) -> AffineRoot {
        AffineRoot::new(
            self.finite.zip_with(&other.finite, |a, b| a + k * b),
            self.level + k * other.level,
        )
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot::new(-&self.finite, -self.level)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            0 => write!(f, "{}", self.finite),
            1 => write!(f, "{}+δ", self.finite),
            -1 => write!(f, "{}-δ", self.finite),
            k if k > 0 => write!(f, "{}+{k}δ", self.finite),
            k => write!(f, "{}-{}δ", self.finite, -k),
        }
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word `s_{i₁} s_{i₂} ⋯ s_{i_k}` in the generators; the rightmost letter
/// acts first.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AffineWord(Vec<usize>);

impl AffineWord {
    pub fn identity() -> Self {
        AffineWord(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        AffineWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> AffineWord {
        AffineWord(self.0.iter().rev().copied().collect())
    }

    /// `s_i · self`.
    pub fn prepend(&self, i: usize) -> AffineWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        AffineWord(v)
    }

    /// `self · other`.
    pub fn then(&self, other: &AffineWord) -> AffineWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AffineWord(v)
    }

    /// Whether only finite generators occur.
    pub fn is_finite(&self) -> bool {
        !self.0.contains(&0)
    }
}

impl fmt::Display for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for AffineWord {
    fn from(v: Vec<usize>) -> Self {
        AffineWord(v)
    }
}

/// `<α_j, α_i∨>` for affine generators `j, i ∈ {0, …, n}`.
pub fn affine_cartan(rs: &RootSystem, j: usize, i: usize) -> i32 {
    match (j, i) {
        (0, 0) => 2,
        (0, i) => -rs.pairing(rs.theta(), &rs.simple(i - 1)),
        (j, 0) => -rs.theta_pairing(&rs.simple(j - 1)),
        (j, i) => rs.cartan()[j - 1][i - 1],
    }
}

/// Simple affine reflection `s_i(x) = x − <x, α_i∨> α_i`.
pub fn affine_reflect(rs: &RootSystem, i: usize, x: &AffineRoot) -> AffineRoot {
    if i == 0 {
        let p = rs.theta_pairing(&x.finite);
        AffineRoot::new(&x.finite - &rs.theta().scale(p), x.level + p)
    } else {
        AffineRoot::new(rs.reflect(i - 1, &x.finite), x.level)
    }
}

pub fn apply(rs: &RootSystem, w: &AffineWord, x: &AffineRoot) -> AffineRoot {
    w.0.iter()
        .rev()
        .fold(x.clone(), |acc, &i| affine_reflect(rs, i, &acc))
}

/// Apply a finite word to a finite root.
pub fn apply_finite(rs: &RootSystem, w: &AffineWord, x: &Root) -> Root {
    apply(rs, w, &AffineRoot::new(x.clone(), 0)).finite
}

/// Positive affine roots of level at most `level_bound`, in canonical order.
pub fn positive_affine_roots(rs: &RootSystem, level_bound: i32) -> Vec<AffineRoot> {
    let mut out: Vec<AffineRoot> = rs
        .positive_roots()
        .iter()
        .map(|r| AffineRoot::new(r.clone(), 0))
        .collect();
    for k in 1..=level_bound {
        for r in rs.positive_roots() {
            out.push(AffineRoot::new(-r, k));
        }
        for r in rs.positive_roots() {
            out.push(AffineRoot::new(r.clone(), k));
        }
    }
    out.sort();
    out
}

/// `𝒩(w)` restricted to levels `≤ level_bound`: positive roots sent to
/// negative ones.
pub fn inversion_set(rs: &RootSystem, w: &AffineWord, level_bound: i32) -> Vec<AffineRoot> {
    positive_affine_roots(rs, level_bound)
        .into_iter()
        .filter(|x| apply(rs, w, x).is_negative())
        .collect()
}

/// A group element, recorded by its images of `α₀, …, α_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineElement {
    images: Vec<AffineRoot>,
}

impl AffineElement {
    pub fn of(rs: &RootSystem, w: &AffineWord) -> Self {
        AffineElement {
            images: (0..=rs.rank())
                .map(|i| apply(rs, w, &AffineRoot::simple(rs, i)))
                .collect(),
        }
    }

    /// A reduced word for the element, found by stripping right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> AffineWord {
        let n = rs.rank();
        let cartan: Vec<Vec<i32>> = (0..=n)
            .map(|j| (0..=n).map(|i| affine_cartan(rs, j, i)).collect())
            .collect();
        let mut images = self.images.clone();
        let mut stripped = Vec::new();
        while let Some(i) = images.iter().position(|x| x.is_negative()) {
            let wi = images[i].clone();
            for (j, img) in images.iter_mut().enumerate() {
                if cartan[j][i] != 0 {
                    *img = img.add_scaled(-cartan[j][i], &wi);
                }
            }
            stripped.push(i);
        }
        stripped.reverse();
        AffineWord(stripped)
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.reduced_word(rs).len()
    }
}

/// Coxeter length `ℓ(w)`.
pub fn length(rs: &RootSystem, w: &AffineWord) -> usize {
    AffineElement::of(rs, w).length(rs)
}

pub fn is_reduced(rs: &RootSystem, w: &AffineWord) -> bool {
    length(rs, w) == w.len()
}

/// Equality of group elements: same action on `α₀, …, α_n` and on `2δ − θ`.
pub fn same_element(rs: &RootSystem, u: &AffineWord, v: &AffineWord) -> bool {
    let probe = AffineRoot::delta_minus(2, rs.theta());
    AffineElement::of(rs, u) == AffineElement::of(rs, v)
        && apply(rs, u, &probe) == apply(rs, v, &probe)
}

/// Minuscule element `ŵ_I` of an abelian ideal, grown root by root along
/// decreasing canonical order.
pub fn minuscule_of(rs: &RootSystem, ideal: &RootIdeal) -> Result<AffineWord> {
    let mut order = ideal.members().to_vec();
    order.reverse();
    minuscule_along(rs, ideal, &order)
}

/// As [`minuscule_of`] but adding roots in the given order, which must list
/// the ideal so that every prefix is itself an ideal.
pub fn minuscule_along(rs: &RootSystem, ideal: &RootIdeal, order: &[usize]) -> Result<AffineWord> {
    if !ideal.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut prefix = RootSet::empty(rs.num_positive());
    let mut w = AffineWord::identity();
    for &k in order {
        if !ideal.contains(k) || prefix.contains(k) {
            return Err(Error::InvalidSpec("order does not list the ideal".into()));
        }
        if rs.upper_covers(k).iter().any(|&u| !prefix.contains(u)) {
            return Err(Error::InvalidSpec("order is not a linear extension".into()));
        }
        let beta = apply(rs, &w, &AffineRoot::delta_minus(1, rs.root(k)));
        let Some(g) = beta.simple_generator(rs) else {
            return Err(Error::Internal(format!(
                "minuscule growth step produced {beta}, not an affine simple root"
            )));
        };
        w = w.prepend(g);
        prefix.insert(k);
    }
    if prefix.len() != ideal.len() {
        return Err(Error::InvalidSpec("order does not list the ideal".into()));
    }
    Ok(w)
}

/// `I^k`, where `I¹ = I` and `I^k = (I^{k−1} + I) ∩ Δ⁺`.
pub fn ideal_power(rs: &RootSystem, ideal: &RootIdeal, k: usize) -> RootSet {
    let n = rs.num_positive();
    if k == 0 {
        return RootSet::empty(n);
    }
    let mut cur = ideal.members().clone();
    for _ in 1..k {
        let mut next = RootSet::empty(n);
        for a in cur.iter() {
            for b in ideal.members().iter() {
                if let Some(s) = rs.sum_index(a, b) {
                    next.insert(s);
                }
            }
        }
        cur = next;
    }
    cur
}

/// The target inversion set `⊔_{k≥1} (kδ − I^k)` and its maximal level.
pub fn canonical_inversions(rs: &RootSystem, ideal: &RootIdeal) -> (Vec<AffineRoot>, i32) {
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let p = ideal_power(rs, ideal, k);
        if p.is_empty() {
            break;
        }
        out.extend(p.iter().map(|g| AffineRoot::delta_minus(k as i32, rs.root(g))));
        k += 1;
    }
    out.sort();
    (out, (k as i32 - 1).max(1))
}

/// Canonical element `ŵ_I` of an arbitrary ideal: the element whose inversion
/// set is `⊔_{k≥1} (kδ − I^k)`.
pub fn canonical_of(rs: &RootSystem, ideal: &RootIdeal) -> Result<AffineWord> {
    let (target, bound) = canonical_inversions(rs, ideal);
    let mut rest = target.clone();
    let mut collected = Vec::new();
    while !rest.is_empty() {
        let Some(pos) = rest.iter().position(|x| x.simple_generator(rs).is_some()) else {
            return Err(Error::Internal("target set has no simple root".into()));
        };
        let s = rest.swap_remove(pos);
        let i = s.simple_generator(rs).unwrap();
        for x in rest.iter_mut() {
            *x = affine_reflect(rs, i, x);
            if !x.is_positive() {
                return Err(Error::Internal("target set is not an inversion set".into()));
            }
        }
        collected.push(i);
    }
    collected.reverse();
    let w = AffineWord(collected);
    if length(rs, &w) != target.len() || inversion_set(rs, &w, bound) != target {
        return Err(Error::Internal("canonical element does not realize its target".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals;

    fn a2() -> RootSystem {
        RootSystem::parse("A2").unwrap()
    }

    #[test]
    fn s0_examples() {
        let rs = a2();
        let a0 = AffineRoot::simple(&rs, 0);
        assert_eq!(affine_reflect(&rs, 0, &a0), a0.neg());
        let x = AffineRoot::delta_minus(1, &rs.simple(0));
        assert_eq!(affine_reflect(&rs, 0, &x), AffineRoot::new(rs.simple(1), 0));
        for s in ["A3", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let rs = RootSystem::parse(s).unwrap();
            let p = AffineRoot::delta_minus(2, rs.theta());
            assert_eq!(affine_reflect(&rs, 0, &p), AffineRoot::new(rs.theta().clone(), 0));
        }
    }

    #[test]
    fn word_action() {
        let rs = a2();
        let w = AffineWord::new(vec![2, 0]);
        let p = AffineRoot::delta_minus(2, rs.theta());
        assert_eq!(apply(&rs, &w, &p), AffineRoot::new(rs.simple(0), 0));
        let u = AffineWord::new(vec![1, 0, 2]);
        let x = AffineRoot::new(Root::from([1, 0]), 3);
        assert_eq!(apply(&rs, &u.then(&w), &x), apply(&rs, &u, &apply(&rs, &w, &x)));
        assert_eq!(apply(&rs, &u.then(&u.inverse()), &x), x);
    }

    #[test]
    fn inversion_sets() {
        let rs = a2();
        assert!(inversion_set(&rs, &AffineWord::identity(), 2).is_empty());
        assert_eq!(
            inversion_set(&rs, &AffineWord::new(vec![0]), 2),
            vec![AffineRoot::delta_minus(1, rs.theta())]
        );
    }

    #[test]
    fn lengths_match_inversion_counts() {
        let rs = RootSystem::parse("B2").unwrap();
        let words = [vec![], vec![0], vec![1, 0], vec![0, 1, 0], vec![1, 2, 1, 2], vec![0, 0], vec![2, 1, 0, 2]];
        for w in words {
            let w = AffineWord::new(w);
            assert_eq!(length(&rs, &w), inversion_set(&rs, &w, 6).len(), "{w}");
        }
    }

    #[test]
    fn minuscule_small() {
        let rs = a2();
        let top = ideals::up_closure(&rs, &[rs.theta().clone()]).unwrap();
        assert_eq!(minuscule_of(&rs, &top).unwrap(), AffineWord::new(vec![0]));
        let i = ideals::up_closure(&rs, &[rs.simple(0)]).unwrap();
        let w = minuscule_of(&rs, &i).unwrap();
        assert_eq!(w, AffineWord::new(vec![2, 0]));
        assert_eq!(
            inversion_set(&rs, &w, 1),
            vec![
                AffineRoot::delta_minus(1, rs.theta()),
                AffineRoot::delta_minus(1, &rs.simple(0)),
            ]
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
        );
        let all = ideals::up_closure(&rs, &[rs.simple(0), rs.simple(1)]).unwrap();
        assert_eq!(minuscule_of(&rs, &all), Err(Error::NotAbelian));
    }

    #[test]
    fn canonical_small() {
        let rs = a2();
        let all = ideals::up_closure(&rs, &[rs.simple(0), rs.simple(1)]).unwrap();
        assert_eq!(ideal_power(&rs, &all, 2).to_vec(), vec![rs.theta_index()]);
        assert!(ideal_power(&rs, &all, 3).is_empty());
        let w = canonical_of(&rs, &all).unwrap();
        assert_eq!(length(&rs, &w), 4);
        let i = ideals::up_closure(&rs, &[rs.simple(0)]).unwrap();
        let c = canonical_of(&rs, &i).unwrap();
        assert!(same_element(&rs, &c, &minuscule_of(&rs, &i).unwrap()));
    }
}
