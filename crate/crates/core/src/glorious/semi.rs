use serde::Serialize;

use super::eta_of;
use crate::ideals::{is_commutative, up_closure_idx};
use crate::rootlets::{class_of, i_min};
use crate::{Error, Result, Root, RootSystem};

/// The pair carried by the edge joining a long simple root `α` and a short
/// simple root `α′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiGloriousPair {
    /// `(α, α′)`, 0-based, `α` long.
    pub edge: (usize, usize),
    /// `w_α⁻¹(α + α′)`, equal to `θ̃`.
    pub eta: Root,
    /// `θ − η`, equal to `θ̆`.
    pub eta_prime: Root,
    /// `η − η′`, a simple root.
    pub simple_diff: Root,
}

pub fn semi_glorious(rs: &RootSystem) -> Result<SemiGloriousPair> {
    if rs.family().is_simply_laced() {
        return Err(Error::SimplyLaced);
    }
    let mixed: Vec<(usize, usize)> = rs
        .edges()
        .iter()
        .map(|&(a, b)| if rs.simple_is_long(a) { (a, b) } else { (b, a) })
        .filter(|&(a, b)| rs.simple_is_long(a) && !rs.simple_is_long(b))
        .collect();
    let &[(a, b)] = mixed.as_slice() else {
        return Err(Error::Internal(format!("{} mixed edges", mixed.len())));
    };
    let fail = |what: &str| Error::Internal(format!("semi-glorious pair: {what}"));
    let eta = eta_of(rs, a, b)?;
    let eta_prime = rs.theta() - &eta;
    let ke = rs.require_index(&eta)?;
    let kp = rs.require_index(&eta_prime)?;
    if Some(ke) != rs.theta_tilde_index() || Some(kp) != rs.theta_breve_index() {
        return Err(fail("pair is not (θ̃, θ̆)"));
    }
    if rs.is_long(ke) || !is_commutative(rs, ke) || !rs.heisenberg_set().contains(ke) {
        return Err(fail("η is not a short commutative root in the Heisenberg set"));
    }
    if is_commutative(rs, kp) {
        return Err(fail("η′ is commutative"));
    }
    let ia = i_min(rs, &rs.simple(a))?;
    if !ia.min_elements().contains(&ke) {
        return Err(fail("η is not minimal in I(α)_min"));
    }
    let mut above = up_closure_idx(rs, [kp]).members().clone();
    above.remove(kp);
    if &above != ia.members() {
        return Err(fail("strict up-set of η′ differs from I(α)_min"));
    }
    let simple_diff = &eta - &eta_prime;
    if simple_diff.simple_index().is_none() {
        return Err(fail("η − η′ is not simple"));
    }
    if class_of(rs, &eta)? != b + 1 {
        return Err(fail("class of η is not α′"));
    }
    Ok(SemiGloriousPair { edge: (a, b), eta, eta_prime, simple_diff })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epsilon;

    #[test]
    fn classical_rows() {
        let b4 = RootSystem::parse("B4").unwrap();
        let p = semi_glorious(&b4).unwrap();
        assert_eq!(p.edge, (2, 3));
        assert_eq!(epsilon::show(&b4, &p.eta).unwrap(), "e1");
        assert_eq!(epsilon::show(&b4, &p.eta_prime).unwrap(), "e2");
        assert_eq!(p.simple_diff, b4.simple(0));
        let c4 = RootSystem::parse("C4").unwrap();
        let p = semi_glorious(&c4).unwrap();
        assert_eq!(p.edge, (3, 2));
        assert_eq!(epsilon::show(&c4, &p.eta).unwrap(), "e1+e4");
        assert_eq!(p.simple_diff, c4.simple(3));
    }

    #[test]
    fn exceptional_rows() {
        let f4 = RootSystem::parse("F4").unwrap();
        let p = semi_glorious(&f4).unwrap();
        assert_eq!((p.eta, p.eta_prime), (Root::from([1, 2, 2, 1]), Root::from([1, 2, 1, 1])));
        let g2 = RootSystem::parse("G2").unwrap();
        let p = semi_glorious(&g2).unwrap();
        assert_eq!((p.eta, p.eta_prime), (Root::from([2, 1]), Root::from([1, 1])));
        assert_eq!(
            semi_glorious(&RootSystem::parse("D4").unwrap()),
            Err(Error::SimplyLaced)
        );
    }
}
