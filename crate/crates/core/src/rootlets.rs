//! The rootlet map `τ(I) = ŵ_I(2δ − θ)`, its fibers, the shortest elements
//! `w_μ` with `w_μ(θ) = μ`, and the class map `kl`.

use std::collections::{HashMap, VecDeque};

use crate::affine::{self, AffineRoot};
use crate::ideals::{self, AbelianIdeal};
use crate::{AffineWord, Error, Result, Root, RootIdeal, RootSet, RootSystem};

/// Shortest finite words `w_μ` for every long positive root, found by one
/// breadth-first search from `θ` along reflections that lower `(ρ, ·∨)` by 1.
fn shortest_words(rs: &RootSystem) -> HashMap<usize, AffineWord> {
    let mut words = HashMap::new();
    let theta = rs.theta_index();
    words.insert(theta, AffineWord::identity());
    let mut queue = VecDeque::from([theta]);
    while let Some(k) = queue.pop_front() {
        let w = words[&k].clone();
        for i in 0..rs.rank() {
            let next = rs.reflect(i, rs.root(k));
            let Some(j) = rs.index_of(&next) else { continue };
            if rs.rho_pairing(j) + 1 != rs.rho_pairing(k) || words.contains_key(&j) {
                continue;
            }
            words.insert(j, w.prepend(i + 1));
            queue.push_back(j);
        }
    }
    words
}

fn require_long(rs: &RootSystem, mu: &Root) -> Result<usize> {
    match rs.index_of(mu) {
        Some(k) if rs.is_long(k) => Ok(k),
        _ => Err(Error::NotLongRoot(mu.clone())),
    }
}

/// `w_μ`: the unique shortest element of `W` with `w_μ(θ) = μ`, as a word in
/// finite generators.
pub fn shortest_taking_theta_to(rs: &RootSystem, mu: &Root) -> Result<AffineWord> {
    let k = require_long(rs, mu)?;
    let words = shortest_words(rs);
    let w = words
        .get(&k)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("no descending path from θ to {mu}")))?;
    check_shortest(rs, k, &w)?;
    Ok(w)
}

fn check_shortest(rs: &RootSystem, k: usize, w: &AffineWord) -> Result<()> {
    let expected = (rs.rho_pairing(rs.theta_index()) - rs.rho_pairing(k)) as usize;
    if &affine::apply_finite(rs, w, rs.theta()) != rs.root(k) || affine::length(rs, w) != expected {
        return Err(Error::Internal(format!("w_μ for {} is not shortest", rs.root(k))));
    }
    Ok(())
}

/// `τ(I)` computed from a minuscule word.
pub fn rootlet_of_word(rs: &RootSystem, w: &AffineWord) -> Result<Root> {
    let x = affine::apply(rs, w, &AffineRoot::delta_minus(2, rs.theta()));
    if x.level != 0 || !rs.is_long_root(&x.finite) || !x.finite.is_positive() {
        return Err(Error::Internal(format!("rootlet {x} is not a long positive root")));
    }
    Ok(x.finite)
}

/// `τ(I) = ŵ_I(2δ − θ)` for a nonempty abelian ideal.
pub fn rootlet(rs: &RootSystem, ideal: &RootIdeal) -> Result<Root> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    rootlet_of_word(rs, &affine::minuscule_of(rs, ideal)?)
}

/// The ideal `{γ : δ − γ ∈ 𝒩(w)}` of level-one inversions of `w`.
fn level_one_ideal(rs: &RootSystem, w: &AffineWord) -> Result<RootIdeal> {
    let mut set = RootSet::empty(rs.num_positive());
    for x in affine::inversion_set(rs, w, 1) {
        if x.level != 1 || !x.finite.is_negative() {
            return Err(Error::Internal(format!("unexpected inversion {x} of {w}")));
        }
        set.insert(rs.require_index(&-&x.finite)?);
    }
    if !ideals::is_upset(rs, &set) {
        return Err(Error::Internal("inversions do not form an ideal".into()));
    }
    Ok(RootIdeal::from_upset(rs, set))
}

fn i_min_from_word(rs: &RootSystem, k: usize, w_mu: &AffineWord) -> Result<RootIdeal> {
    let ideal = level_one_ideal(rs, &w_mu.then(&AffineWord::new(vec![0])))?;
    let expected = (rs.rho_pairing(rs.theta_index()) - rs.rho_pairing(k) + 1) as usize;
    if ideal.len() != expected || !ideal.members().is_subset(&rs.heisenberg_set()) {
        return Err(Error::Internal(format!("I(μ)_min for {} has wrong shape", rs.root(k))));
    }
    Ok(ideal)
}

/// `I(μ)_min`, read off from `𝒩(w_μ s₀)`.
pub fn i_min(rs: &RootSystem, mu: &Root) -> Result<RootIdeal> {
    let w = shortest_taking_theta_to(rs, mu)?;
    i_min_from_word(rs, rs.index_of(mu).unwrap(), &w)
}

/// `I(μ)_max`, the inclusion-maximum of the fiber `τ⁻¹(μ)`.
pub fn i_max(rs: &RootSystem, mu: &Root) -> Result<RootIdeal> {
    require_long(rs, mu)?;
    let index = RootletIndex::build(rs)?;
    Ok(index.entry(rs, mu)?.i_max.clone())
}

/// Generator index of `kl(γ)` computed from a given abelian ideal with
/// `γ ∈ min(I)` and its minuscule word.
pub fn class_via(rs: &RootSystem, w: &AffineWord, gamma: &Root) -> Result<usize> {
    let x = affine::apply(rs, w, &AffineRoot::new(gamma.clone(), -1));
    x.simple_generator(rs)
        .ok_or_else(|| Error::Internal(format!("class of {gamma} evaluates to {x}")))
}

/// `kl(γ)` as a generator index (`0` is `α₀`, `i ≥ 1` is `α_i`), witnessed by
/// the ideal generated by `γ`.
pub fn class_of(rs: &RootSystem, gamma: &Root) -> Result<usize> {
    let k = rs.require_index(gamma)?;
    let ideal = ideals::up_closure_idx(rs, [k]);
    if !ideal.is_abelian() {
        return Err(Error::NotCommutative(gamma.clone()));
    }
    class_via(rs, &affine::minuscule_of(rs, &ideal)?, gamma)
}

/// One long root `μ` with its fiber and extreme ideals.
#[derive(Clone, Debug)]
pub struct RootletEntry {
    pub mu: usize,
    pub w_mu: AffineWord,
    pub i_min: RootIdeal,
    pub i_max: RootIdeal,
    /// Positions in [`RootletIndex::abelian`].
    pub fiber: Vec<usize>,
}

/// All abelian ideals grouped by rootlet.
#[derive(Clone, Debug)]
pub struct RootletIndex {
    abelian: Vec<AbelianIdeal>,
    entries: Vec<RootletEntry>,
    by_mu: HashMap<usize, usize>,
}

impl RootletIndex {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        Self::from_abelian(rs, ideals::enumerate_abelian_ideals(rs)?)
    }

    pub fn from_abelian(rs: &RootSystem, abelian: Vec<AbelianIdeal>) -> Result<Self> {
        let mut fibers: HashMap<usize, Vec<usize>> = HashMap::new();
        for (pos, a) in abelian.iter().enumerate() {
            if a.ideal.is_empty() {
                continue;
            }
            let mu = rs.require_index(&rootlet_of_word(rs, &a.word)?)?;
            fibers.entry(mu).or_default().push(pos);
        }
        let words = shortest_words(rs);
        let mut entries = Vec::new();
        for mu in (0..rs.num_positive()).filter(|&k| rs.is_long(k)) {
            let fiber = fibers.remove(&mu).unwrap_or_default();
            if fiber.is_empty() {
                return Err(Error::Internal(format!("empty fiber over {}", rs.root(mu))));
            }
            let w_mu = words
                .get(&mu)
                .cloned()
                .ok_or_else(|| Error::Internal(format!("no w_μ for {}", rs.root(mu))))?;
            check_shortest(rs, mu, &w_mu)?;
            let i_min = i_min_from_word(rs, mu, &w_mu)?;
            let members: Vec<&RootIdeal> = fiber.iter().map(|&p| &abelian[p].ideal).collect();
            if !members.iter().any(|i| **i == i_min) || !members.iter().all(|i| i_min.is_subset(i)) {
                return Err(Error::Internal(format!(
                    "I(μ)_min is not the fiber minimum over {}",
                    rs.root(mu)
                )));
            }
            let i_max = members
                .iter()
                .find(|top| members.iter().all(|i| i.is_subset(top)))
                .map(|i| (*i).clone())
                .ok_or_else(|| Error::Internal(format!("fiber over {} has no maximum", rs.root(mu))))?;
            entries.push(RootletEntry { mu, w_mu, i_min, i_max, fiber });
        }
        if !fibers.is_empty() {
            return Err(Error::Internal("rootlet outside the long roots".into()));
        }
        let by_mu = entries.iter().enumerate().map(|(p, e)| (e.mu, p)).collect();
        Ok(RootletIndex { abelian, entries, by_mu })
    }

    pub fn abelian(&self) -> &[AbelianIdeal] {
        &self.abelian
    }

    /// Entries in canonical order of `μ`.
    pub fn entries(&self) -> &[RootletEntry] {
        &self.entries
    }

    pub fn entry_by_index(&self, mu: usize) -> Option<&RootletEntry> {
        self.by_mu.get(&mu).map(|&p| &self.entries[p])
    }

    pub fn entry(&self, rs: &RootSystem, mu: &Root) -> Result<&RootletEntry> {
        let k = require_long(rs, mu)?;
        self.entry_by_index(k).ok_or_else(|| Error::NotLongRoot(mu.clone()))
    }

    /// Entry for the simple root `α_i` (0-based), which must be long.
    pub fn simple_entry(&self, rs: &RootSystem, i: usize) -> Result<&RootletEntry> {
        self.entry_by_index(rs.simple_index(i))
            .ok_or(Error::NotLong(i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootSystemSpec;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn rootlet_examples() {
        let a2 = rs("A2");
        let top = ideals::up_closure(&a2, &[a2.theta().clone()]).unwrap();
        assert_eq!(rootlet(&a2, &top).unwrap(), *a2.theta());
        let i = ideals::up_closure(&a2, &[a2.simple(0)]).unwrap();
        assert_eq!(rootlet(&a2, &i).unwrap(), a2.simple(0));
        assert_eq!(rootlet(&a2, &RootIdeal::empty(&a2)), Err(Error::EmptyIdeal));
        let e6 = rs("E6");
        let m = i_min(&e6, &e6.simple(5)).unwrap();
        assert_eq!(rootlet(&e6, &m).unwrap(), e6.simple(5));
    }

    #[test]
    fn shortest_words_examples() {
        let a2 = rs("A2");
        assert!(shortest_taking_theta_to(&a2, a2.theta()).unwrap().is_empty());
        assert_eq!(shortest_taking_theta_to(&a2, &a2.simple(0)).unwrap(), AffineWord::new(vec![2]));
        let e6 = rs("E6");
        let mu = Root::from([1, 1, 0, 0, 0, 0]);
        assert_eq!(shortest_taking_theta_to(&e6, &mu).unwrap().len(), e6.dual_coxeter() - 3);
        let b3 = rs("B3");
        assert!(matches!(
            shortest_taking_theta_to(&b3, &Root::from([1, 1, 1])),
            Err(Error::NotLongRoot(_))
        ));
    }

    #[test]
    fn inverse_inversions_of_w_mu() {
        // 𝒩(w_μ⁻¹) = {γ ∈ Δ⁺ : <γ, μ∨> = −1}
        for s in ["A4", "B4", "C4", "D5", "E6", "F4", "G2"] {
            let r = rs(s);
            for mu in (0..r.num_positive()).filter(|&k| r.is_long(k)) {
                let w = shortest_taking_theta_to(&r, r.root(mu)).unwrap().inverse();
                let inv: Vec<usize> = (0..r.num_positive())
                    .filter(|&g| affine::apply_finite(&r, &w, r.root(g)).is_negative())
                    .collect();
                let expect: Vec<usize> = (0..r.num_positive())
                    .filter(|&g| r.pairing(r.root(g), r.root(mu)) == -1)
                    .collect();
                assert_eq!(inv, expect, "{s} {}", r.root(mu));
            }
        }
    }

    #[test]
    fn i_min_examples() {
        let a3 = rs("A3");
        let t = i_min(&a3, a3.theta()).unwrap();
        assert_eq!(t.roots(&a3), vec![a3.theta().clone()]);
        let e6 = rs("E6");
        let m = i_min(&e6, &e6.simple(2)).unwrap();
        assert_eq!(
            m.min_roots(&e6),
            vec![
                Root::from([0, 1, 2, 1, 1, 1]),
                Root::from([1, 1, 1, 1, 1, 1]),
                Root::from([1, 1, 2, 1, 0, 1]),
            ]
        );
        let d4 = rs("D4");
        for i in 0..4 {
            assert_eq!(i_min(&d4, &d4.simple(i)).unwrap().len(), d4.dual_coxeter() - 1);
        }
    }

    #[test]
    fn classes() {
        let a2 = rs("A2");
        assert_eq!(class_of(&a2, a2.theta()).unwrap(), 0);
        assert_eq!(class_of(&a2, &a2.simple(0)).unwrap(), 2);
        let e6 = rs("E6");
        assert_eq!(class_of(&e6, e6.theta_tilde().unwrap()).unwrap(), 3);
        let d4 = rs("D4");
        assert!(matches!(class_of(&d4, &d4.simple(1)), Err(Error::NotCommutative(_))));
    }

    #[test]
    fn fibers_partition_nonempty_abelian_ideals() {
        for spec in RootSystemSpec::all_up_to(5) {
            let r = RootSystem::build(spec).unwrap();
            let idx = RootletIndex::build(&r).unwrap();
            let total: usize = idx.entries().iter().map(|e| e.fiber.len()).sum();
            assert_eq!(total + 1, idx.abelian().len(), "{spec}");
            let h = r.heisenberg_set();
            for e in idx.entries() {
                for &p in &e.fiber {
                    let i = &idx.abelian()[p].ideal;
                    assert_eq!(&i.members().intersection(&h), e.i_min.members(), "{spec}");
                }
            }
        }
    }
}
