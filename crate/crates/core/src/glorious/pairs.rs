use serde::Serialize;

use super::eta_of;
use crate::rootlets::{class_of, i_min, RootletIndex};
use crate::{Error, Result, Root, RootSystem};

/// A glorious pair with its Dynkin edge.
///
/// `edge = (α, α′)` is stored with `α < α′` (0-based); `eta` is the member
/// with `η ∈ min(I(α)_min)`, and the classes are `kl(η) = α′`, `kl(η′) = α`
/// as generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GloriousPair {
    pub edge: (usize, usize),
    pub eta: Root,
    pub eta_prime: Root,
    pub classes: (usize, usize),
}

fn check_edge(rs: &RootSystem, a: usize, b: usize) -> Result<()> {
    if a >= rs.rank() || b >= rs.rank() || !rs.are_adjacent(a, b) {
        return Err(Error::NotAdjacent(a + 1, b + 1));
    }
    for i in [a, b] {
        if !rs.simple_is_long(i) {
            return Err(Error::NotLong(i + 1));
        }
    }
    Ok(())
}

/// The glorious pair of the edge between the adjacent long simple roots
/// `α_a`, `α_b`: `η = w_α⁻¹(α + α′)`, `η′ = w_{α′}⁻¹(α + α′)`.
///
/// Also confirms the alternative description
/// `I(α)_min ∖ I(α + α′)_min = {η}`.
pub fn pair_from_edge(rs: &RootSystem, a: usize, b: usize) -> Result<GloriousPair> {
    check_edge(rs, a, b)?;
    let (a, b) = (a.min(b), a.max(b));
    let eta = eta_of(rs, a, b)?;
    let eta_prime = eta_of(rs, b, a)?;
    let fail = |what: &str| Error::Internal(format!("edge ({}, {}): {what}", a + 1, b + 1));
    if &(&eta + &eta_prime) != rs.theta() {
        return Err(fail("roots do not sum to θ"));
    }
    let (ke, kp) = (rs.require_index(&eta)?, rs.require_index(&eta_prime)?);
    if rs.comparable(ke, kp) {
        return Err(fail("roots are comparable"));
    }
    let classes = (class_of(rs, &eta)?, class_of(rs, &eta_prime)?);
    if classes != (b + 1, a + 1) {
        return Err(fail("classes do not match the edge"));
    }
    let ia = i_min(rs, &rs.simple(a))?;
    let ib = i_min(rs, &rs.simple(b))?;
    if !ia.min_elements().contains(&ke) || !ib.min_elements().contains(&kp) {
        return Err(fail("η is not minimal in I(α)_min"));
    }
    let iab = i_min(rs, &(&rs.simple(a) + &rs.simple(b)))?;
    if ia.members().difference(iab.members()).to_vec() != vec![ke]
        || ib.members().difference(iab.members()).to_vec() != vec![kp]
    {
        return Err(fail("I(α)_min ∖ I(α+α′)_min is not {η}"));
    }
    Ok(GloriousPair { edge: (a, b), eta, eta_prime, classes })
}

/// The long simple root `α` with `η ∈ min(I(α)_min)`; unique when `η` lies
/// in a glorious pair.
fn owner(rs: &RootSystem, eta: usize) -> Result<usize> {
    let mut found = Vec::new();
    for a in rs.long_simple() {
        if i_min(rs, &rs.simple(a))?.min_elements().contains(&eta) {
            found.push(a);
        }
    }
    match found.as_slice() {
        [a] => Ok(*a),
        _ => Err(Error::Internal(format!(
            "{} is minimal in {} ideals I(α)_min",
            rs.root(eta),
            found.len()
        ))),
    }
}

fn require_glorious(rs: &RootSystem, x: &Root, y: &Root) -> Result<(usize, usize)> {
    let not = || Error::NotGlorious(x.clone(), y.clone());
    let kx = rs.index_of(x).ok_or_else(not)?;
    let ky = rs.index_of(y).ok_or_else(not)?;
    if &(x + y) != rs.theta() || rs.comparable(kx, ky) {
        return Err(not());
    }
    Ok((kx, ky))
}

/// The ordered edge `(α, α′)` of a glorious pair: `η ∈ min(I(α)_min)` and
/// `kl(η) = α′` (0-based).
pub fn edge_from_pair(rs: &RootSystem, eta: &Root, eta_prime: &Root) -> Result<(usize, usize)> {
    let (ke, kp) = require_glorious(rs, eta, eta_prime)?;
    let a = owner(rs, ke)?;
    let b = owner(rs, kp)?;
    let ce = class_of(rs, eta)?;
    let cp = class_of(rs, eta_prime)?;
    if ce != b + 1 || cp != a + 1 || !rs.are_adjacent(a, b) {
        return Err(Error::Internal(format!(
            "pair {eta}, {eta_prime} does not determine an edge"
        )));
    }
    Ok((a, b))
}

/// Normalises an unordered glorious pair into a [`GloriousPair`].
pub fn classify_pair(rs: &RootSystem, x: &Root, y: &Root) -> Result<GloriousPair> {
    let (a, b) = edge_from_pair(rs, x, y)?;
    let (edge, eta, eta_prime) = if a < b {
        ((a, b), x.clone(), y.clone())
    } else {
        ((b, a), y.clone(), x.clone())
    };
    Ok(GloriousPair {
        edge,
        eta,
        eta_prime,
        classes: (edge.1 + 1, edge.0 + 1),
    })
}

/// All glorious pairs by exhaustive scan, ordered by `η` in the canonical
/// root order.
pub fn glorious_pairs(rs: &RootSystem) -> Result<Vec<GloriousPair>> {
    let theta = rs.theta_index();
    let mut out = Vec::new();
    for a in 0..rs.num_positive() {
        for b in a + 1..rs.num_positive() {
            if rs.sum_index(a, b) == Some(theta) && !rs.comparable(a, b) {
                out.push(classify_pair(rs, rs.root(a), rs.root(b))?);
            }
        }
    }
    out.sort_by(|p, q| p.eta.cmp(&q.eta));
    Ok(out)
}

/// Every long simple `α` with `η ∈ min(I(α)_min)` and
/// `η′ ∈ max(Δ⁺ ∖ I(α)_max)`, for the ordered pair `(η, η′)`.
pub fn owners_of_ordered_pair(
    rs: &RootSystem,
    index: &RootletIndex,
    eta: &Root,
    eta_prime: &Root,
) -> Result<Vec<usize>> {
    let (ke, kp) = require_glorious(rs, eta, eta_prime)?;
    let mut out = Vec::new();
    for a in rs.long_simple() {
        let e = index.simple_entry(rs, a)?;
        if e.i_min.min_elements().contains(&ke) && e.i_max.max_complement(rs).contains(&kp) {
            out.push(a);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epsilon;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn counts() {
        for s in ["C3", "C5", "G2"] {
            assert!(glorious_pairs(&rs(s)).unwrap().is_empty());
        }
        assert_eq!(glorious_pairs(&rs("D4")).unwrap().len(), 3);
        assert_eq!(glorious_pairs(&rs("E6")).unwrap().len(), 5);
    }

    #[test]
    fn d4_pairs() {
        let d4 = rs("D4");
        let e = |s| epsilon::root(&d4, s).unwrap();
        let mut got: Vec<(Root, Root)> = glorious_pairs(&d4)
            .unwrap()
            .into_iter()
            .map(|p| (p.eta, p.eta_prime))
            .collect();
        got.sort();
        let mut want = vec![(e("e1-e3"), e("e2+e3")), (e("e1+e4"), e("e2-e4")), (e("e1-e4"), e("e2+e4"))];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn from_edges() {
        let a2 = rs("A2");
        let p = pair_from_edge(&a2, 0, 1).unwrap();
        assert_eq!((p.eta, p.eta_prime), (a2.simple(0), a2.simple(1)));
        let b4 = rs("B4");
        let p = pair_from_edge(&b4, 1, 2).unwrap();
        assert_eq!(epsilon::show(&b4, &p.eta).unwrap(), "e1-e4");
        assert_eq!(epsilon::show(&b4, &p.eta_prime).unwrap(), "e2+e4");
        let e7 = rs("E7");
        let p = pair_from_edge(&e7, 3, 6).unwrap();
        assert_eq!(p.eta, Root::from([1, 1, 1, 2, 2, 1, 1]));
        assert_eq!(p.eta_prime, Root::from([0, 1, 2, 2, 1, 1, 1]));
        assert_eq!(pair_from_edge(&e7, 0, 2), Err(Error::NotAdjacent(1, 3)));
        assert_eq!(pair_from_edge(&b4, 2, 3), Err(Error::NotLong(4)));
    }

    #[test]
    fn to_edges() {
        let a2 = rs("A2");
        assert_eq!(edge_from_pair(&a2, &a2.simple(0), &a2.simple(1)).unwrap(), (0, 1));
        let e6 = rs("E6");
        let x = Root::from([1, 1, 1, 0, 0, 1]);
        let y = Root::from([0, 1, 2, 2, 1, 1]);
        assert_eq!(edge_from_pair(&e6, &x, &y).unwrap(), (0, 1));
        let d5 = rs("D5");
        let x = epsilon::root(&d5, "e1+e5").unwrap();
        let y = epsilon::root(&d5, "e2-e5").unwrap();
        assert_eq!(edge_from_pair(&d5, &x, &y).unwrap(), (2, 3));
        assert!(matches!(
            edge_from_pair(&e6, e6.theta_breve().unwrap(), e6.theta_tilde().unwrap()),
            Err(Error::NotGlorious(..))
        ));
    }
}
