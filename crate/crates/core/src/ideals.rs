//! Ideals (up-sets) of the root poset, abelianness, and their enumeration.

use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::affine::{self, AffineRoot};
use crate::{AffineWord, Error, Result, Root, RootSet, RootSystem};

/// An up-closed subset of `Δ⁺` with its minimal elements and abelian flag.
///
/// Equality and hashing use the member set only.
#[derive(Clone, Debug)]
pub struct RootIdeal {
    members: RootSet,
    min: Vec<usize>,
    abelian: bool,
}

impl PartialEq for RootIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for RootIdeal {}

impl Hash for RootIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl RootIdeal {
    pub fn empty(rs: &RootSystem) -> Self {
        RootIdeal {
            members: RootSet::empty(rs.num_positive()),
            min: Vec::new(),
            abelian: true,
        }
    }

    /// Wraps a set already known to be up-closed.
    pub fn from_upset(rs: &RootSystem, members: RootSet) -> Self {
        debug_assert!(is_upset(rs, &members));
        let min = members
            .iter()
            .filter(|&k| rs.lower_covers(k).iter().all(|&j| !members.contains(j)))
            .collect();
        let abelian = is_abelian_set(rs, &members);
        RootIdeal { members, min, abelian }
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.members.iter().map(|k| rs.root(k).clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.contains(k)
    }

    pub fn contains_root(&self, rs: &RootSystem, r: &Root) -> bool {
        rs.index_of(r).is_some_and(|k| self.contains(k))
    }

    pub fn is_subset(&self, other: &RootIdeal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Minimal elements, ascending in canonical order.
    pub fn min_elements(&self) -> &[usize] {
        &self.min
    }

    pub fn min_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.min.iter().map(|&k| rs.root(k).clone()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Maximal elements of `Δ⁺ ∖ I`, ascending in canonical order.
    pub fn max_complement(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive())
            .filter(|&k| !self.contains(k) && rs.upper_covers(k).iter().all(|&u| self.contains(u)))
            .collect()
    }

    pub fn max_complement_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.max_complement(rs).into_iter().map(|k| rs.root(k).clone()).collect()
    }

    /// `I ∪ {γ}` for `γ ∈ max(Δ⁺ ∖ I)`.
    pub fn extend(&self, rs: &RootSystem, k: usize) -> RootIdeal {
        let mut m = self.members.clone();
        m.insert(k);
        RootIdeal::from_upset(rs, m)
    }

    pub fn canonical_cmp(&self, other: &RootIdeal) -> std::cmp::Ordering {
        self.members.canonical_cmp(&other.members)
    }
}

pub fn is_upset(rs: &RootSystem, set: &RootSet) -> bool {
    set.iter().all(|k| rs.upper_covers(k).iter().all(|&u| set.contains(u)))
}

fn is_abelian_set(rs: &RootSystem, set: &RootSet) -> bool {
    let v = set.to_vec();
    v.iter()
        .enumerate()
        .all(|(p, &a)| v[p..].iter().all(|&b| rs.sum_index(a, b).is_none()))
}

pub fn up_closure_idx(rs: &RootSystem, gens: impl IntoIterator<Item = usize>) -> RootIdeal {
    let mut set = RootSet::empty(rs.num_positive());
    let mut queue: VecDeque<usize> = gens.into_iter().collect();
    while let Some(k) = queue.pop_front() {
        if set.contains(k) {
            continue;
        }
        set.insert(k);
        queue.extend(rs.upper_covers(k));
    }
    RootIdeal::from_upset(rs, set)
}

/// Smallest ideal containing `gens`.
pub fn up_closure(rs: &RootSystem, gens: &[Root]) -> Result<RootIdeal> {
    let idx = gens
        .iter()
        .map(|g| rs.require_index(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(up_closure_idx(rs, idx))
}

/// Unordered pairs `{a, b}` of members with `μ_a + μ_b = θ`, as `a < b`.
pub fn summable_pairs(rs: &RootSystem, ideal: &RootIdeal) -> Vec<(usize, usize)> {
    let theta = rs.theta_index();
    let v = ideal.members().to_vec();
    let mut out = Vec::new();
    for (p, &a) in v.iter().enumerate() {
        for &b in &v[p + 1..] {
            if rs.sum_index(a, b) == Some(theta) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether `γ` generates an abelian ideal.
pub fn is_commutative(rs: &RootSystem, k: usize) -> bool {
    up_closure_idx(rs, [k]).is_abelian()
}

/// `Δ⁺_com`, which is itself an ideal.
pub fn commutative_roots(rs: &RootSystem) -> Result<RootIdeal> {
    let set = RootSet::from_indices(
        rs.num_positive(),
        (0..rs.num_positive()).filter(|&k| is_commutative(rs, k)),
    );
    if !is_upset(rs, &set) {
        return Err(Error::Internal("commutative roots do not form an ideal".into()));
    }
    Ok(RootIdeal::from_upset(rs, set))
}

/// `Δ⁺_nc`, ascending in canonical order.
pub fn noncommutative_roots(rs: &RootSystem) -> Vec<usize> {
    (0..rs.num_positive()).filter(|&k| !is_commutative(rs, k)).collect()
}

/// An abelian ideal together with its minuscule element `ŵ_I`.
#[derive(Clone, Debug)]
pub struct AbelianIdeal {
    pub ideal: RootIdeal,
    pub word: AffineWord,
}

/// All abelian ideals, each exactly once, sorted by cardinality and then by
/// member list.
///
/// Grows ideals one root of `max(Δ⁺ ∖ I)` at a time; the minuscule word is
/// carried along as `ŵ_{I∪{γ}} = s_β ŵ_I` with `β = ŵ_I(δ − γ) ∈ Π̂`.
pub fn enumerate_abelian_ideals(rs: &RootSystem) -> Result<Vec<AbelianIdeal>> {
    let mut seen: HashSet<RootSet> = HashSet::new();
    let start = AbelianIdeal {
        ideal: RootIdeal::empty(rs),
        word: AffineWord::identity(),
    };
    seen.insert(start.ideal.members().clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for g in cur.ideal.max_complement(rs) {
            if cur.ideal.members().iter().any(|m| rs.sum_index(m, g).is_some()) {
                continue;
            }
            let mut members = cur.ideal.members().clone();
            members.insert(g);
            if !seen.insert(members.clone()) {
                continue;
            }
            let beta = affine::apply(rs, &cur.word, &AffineRoot::delta_minus(1, rs.root(g)));
            let Some(letter) = beta.simple_generator(rs) else {
                return Err(Error::Internal(format!("growth root {beta} is not affine simple")));
            };
            queue.push_back(AbelianIdeal {
                ideal: RootIdeal::from_upset(rs, members),
                word: cur.word.prepend(letter),
            });
        }
        out.push(cur);
    }
    out.sort_by(|a, b| a.ideal.canonical_cmp(&b.ideal));
    Ok(out)
}

/// Limits for [`enumerate_ideals`].
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_rank: usize,
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rank: 8,
            max_nodes: 2_000_000,
        }
    }
}

/// All ideals, generated from their antichains of minimal elements by a
/// depth-first walk over the canonical root order. Sorted like
/// [`enumerate_abelian_ideals`].
pub fn enumerate_ideals(rs: &RootSystem, budget: Budget) -> Result<Vec<RootIdeal>> {
    if rs.rank() > budget.max_rank {
        return Err(Error::BudgetExceeded(format!(
            "rank {} exceeds the configured maximum {}",
            rs.rank(),
            budget.max_rank
        )));
    }
    let n = rs.num_positive();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0usize;
    antichain_dfs(rs, 0, &mut chosen, &mut out, &mut nodes, budget.max_nodes)?;
    debug_assert!(out.iter().all(|i: &RootIdeal| i.members().len() <= n));
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

fn antichain_dfs(
    rs: &RootSystem,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<RootIdeal>,
    nodes: &mut usize,
    limit: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > limit {
        return Err(Error::BudgetExceeded(format!("more than {limit} antichains")));
    }
    out.push(up_closure_idx(rs, chosen.iter().copied()));
    for k in from..rs.num_positive() {
        if chosen.iter().all(|&c| !rs.comparable(c, k)) {
            chosen.push(k);
            antichain_dfs(rs, k + 1, chosen, out, nodes, limit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// A uniformly shuffled linear extension of the reverse order on `I`: every
/// prefix is an ideal.
pub fn random_extension<R: Rng>(rs: &RootSystem, ideal: &RootIdeal, rng: &mut R) -> Vec<usize> {
    let mut placed = RootSet::empty(rs.num_positive());
    let mut out = Vec::with_capacity(ideal.len());
    while out.len() < ideal.len() {
        let mut ready: Vec<usize> = ideal
            .members()
            .iter()
            .filter(|&k| {
                !placed.contains(k) && rs.upper_covers(k).iter().all(|&u| placed.contains(u))
            })
            .collect();
        ready.shuffle(rng);
        let k = ready[0];
        placed.insert(k);
        out.push(k);
    }
    out
}
