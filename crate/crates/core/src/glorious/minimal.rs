use serde::Serialize;

use super::{glorious_pairs, semi_glorious};
use crate::affine;
use crate::ideals::{enumerate_ideals, summable_pairs, up_closure_idx, Budget};
use crate::rootlets::{i_min, shortest_taking_theta_to};
use crate::{AffineRoot, AffineWord, Error, Result, Root, RootIdeal, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PairKind {
    Glorious,
    SemiGlorious,
}

/// A minimal non-abelian ideal together with the edge that produces it.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalNonAbelian {
    #[serde(skip)]
    pub ideal: RootIdeal,
    pub members: Vec<Root>,
    /// `(α, α′)`, 0-based, `α` long.
    pub edge: (usize, usize),
    pub kind: PairKind,
    /// The unique pair in the ideal summing to `θ`.
    pub pair: (Root, Root),
    /// `ŵ_J = s_{α′} s_α w_α s₀`.
    pub word: AffineWord,
}

fn expected_inversions(rs: &RootSystem, ideal: &RootIdeal) -> Vec<AffineRoot> {
    let mut v: Vec<AffineRoot> = ideal
        .members()
        .iter()
        .map(|k| AffineRoot::delta_minus(1, rs.root(k)))
        .collect();
    v.push(AffineRoot::delta_minus(2, rs.theta()));
    v.sort();
    v
}

fn build(rs: &RootSystem, a: usize, b: usize, gens: &[usize], kind: PairKind) -> Result<MinimalNonAbelian> {
    let fail = |what: &str| {
        Error::Internal(format!("minimal non-abelian ideal for ({}, {}): {what}", a + 1, b + 1))
    };
    let ideal = up_closure_idx(rs, gens.iter().copied());
    let hstar = rs.dual_coxeter();
    if ideal.len() != hstar || !ideal.members().is_subset(&rs.heisenberg_set()) {
        return Err(fail("size or Heisenberg containment is wrong"));
    }
    let pairs = summable_pairs(rs, &ideal);
    let &[(p, q)] = pairs.as_slice() else {
        return Err(fail("summable pair is not unique"));
    };
    let wa = shortest_taking_theta_to(rs, &rs.simple(a))?;
    let mut letters = vec![b + 1, a + 1];
    letters.extend_from_slice(wa.letters());
    letters.push(0);
    let word = AffineWord::new(letters);
    if affine::length(rs, &word) != hstar + 1
        || affine::inversion_set(rs, &word, 2) != expected_inversions(rs, &ideal)
    {
        return Err(fail("ŵ_J has the wrong inversion set"));
    }
    if kind == PairKind::Glorious {
        let wb = shortest_taking_theta_to(rs, &rs.simple(b))?;
        let mut alt = vec![a + 1, b + 1];
        alt.extend_from_slice(wb.letters());
        alt.push(0);
        if !affine::same_element(rs, &word, &AffineWord::new(alt)) {
            return Err(fail("the two expressions for ŵ_J disagree"));
        }
    } else {
        let ia = i_min(rs, &rs.simple(a))?;
        if ideal.len() != ia.len() + 1 || !ia.is_subset(&ideal) {
            return Err(fail("J ∖ {θ̆} is not I(α)_min"));
        }
    }
    if !affine::same_element(rs, &affine::canonical_of(rs, &ideal)?, &word) {
        return Err(fail("ŵ_J differs from the canonical element"));
    }
    Ok(MinimalNonAbelian {
        members: ideal.roots(rs),
        ideal,
        edge: (a, b),
        kind,
        pair: (rs.root(p).clone(), rs.root(q).clone()),
        word,
    })
}

/// The minimal non-abelian ideals, one per edge incident to a long simple
/// root, sorted by edge.
pub fn minimal_nonabelian(rs: &RootSystem) -> Result<Vec<MinimalNonAbelian>> {
    let mut out = Vec::new();
    for p in glorious_pairs(rs)? {
        let gens = [rs.require_index(&p.eta)?, rs.require_index(&p.eta_prime)?];
        out.push(build(rs, p.edge.0, p.edge.1, &gens, PairKind::Glorious)?);
    }
    if !rs.family().is_simply_laced() {
        let s = semi_glorious(rs)?;
        let gens = [rs.require_index(&s.eta_prime)?];
        out.push(build(rs, s.edge.0, s.edge.1, &gens, PairKind::SemiGlorious)?);
    }
    out.sort_by_key(|m| (m.edge.0.min(m.edge.1), m.edge.0.max(m.edge.1)));
    let incident = rs
        .edges()
        .iter()
        .filter(|&&(x, y)| rs.simple_is_long(x) || rs.simple_is_long(y))
        .count();
    if out.len() != incident {
        return Err(Error::Internal(format!(
            "{} minimal non-abelian ideals but {incident} edges meet a long simple root",
            out.len()
        )));
    }
    Ok(out)
}

/// `ŵ_J` for a minimal non-abelian ideal `J`.
pub fn canonical_min_nonabelian(rs: &RootSystem, ideal: &RootIdeal) -> Result<AffineWord> {
    minimal_nonabelian(rs)?
        .into_iter()
        .find(|m| &m.ideal == ideal)
        .map(|m| m.word)
        .ok_or(Error::NotMinimalNonAbelian)
}

/// Minimal non-abelian ideals by exhaustive enumeration: non-abelian ideals
/// all of whose one-element-smaller sub-ideals are abelian. Canonical order.
pub fn minimal_nonabelian_by_search(rs: &RootSystem, budget: Budget) -> Result<Vec<RootIdeal>> {
    let all = enumerate_ideals(rs, budget)?;
    Ok(all
        .into_iter()
        .filter(|j| {
            !j.is_abelian()
                && j.min_elements().iter().all(|&m| {
                    let mut rest = j.members().clone();
                    rest.remove(m);
                    RootIdeal::from_upset(rs, rest).is_abelian()
                })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_search() {
        for spec in crate::RootSystemSpec::all_up_to(5) {
            let rs = RootSystem::build(spec).unwrap();
            let mut got: Vec<RootIdeal> =
                minimal_nonabelian(&rs).unwrap().into_iter().map(|m| m.ideal).collect();
            got.sort_by(|a, b| a.canonical_cmp(b));
            let want = minimal_nonabelian_by_search(&rs, Budget::default()).unwrap();
            assert_eq!(got, want, "{spec}");
        }
    }

    #[test]
    fn words() {
        let e6 = RootSystem::parse("E6").unwrap();
        let m = minimal_nonabelian(&e6).unwrap();
        assert_eq!(m.len(), 5);
        assert!(m.iter().all(|x| x.word.len() == 13));
        assert_eq!(canonical_min_nonabelian(&e6, &m[2].ideal).unwrap(), m[2].word);
        let theta = up_closure_idx(&e6, [e6.theta_index()]);
        assert_eq!(canonical_min_nonabelian(&e6, &theta), Err(Error::NotMinimalNonAbelian));
    }
}
