use serde::Serialize;

use super::{eta_of, w_inv};
use crate::{Error, Result, Root, RootSystem};

/// The transition root of two incident edges `(α_i, α_j)`, `(α_j, α_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transition {
    /// `(i, j, k)`, 0-based, `j` the shared node.
    pub triple: (usize, usize, usize),
    /// 0-based index of the simple root `γ`.
    pub gamma: usize,
}

fn path_error(path: &[usize]) -> Error {
    Error::NotAPath(path.iter().map(|i| i + 1).collect())
}

fn require_path(rs: &RootSystem, path: &[usize]) -> Result<()> {
    let n = rs.rank();
    let distinct = path
        .iter()
        .enumerate()
        .all(|(p, a)| !path[p + 1..].contains(a));
    if !distinct
        || path.iter().any(|&i| i >= n)
        || path.windows(2).any(|w| !rs.are_adjacent(w[0], w[1]))
    {
        return Err(path_error(path));
    }
    Ok(())
}

fn require_long(rs: &RootSystem, path: &[usize]) -> Result<()> {
    match path.iter().find(|&&i| !rs.simple_is_long(i)) {
        Some(&i) => Err(Error::NotLong(i + 1)),
        None => Ok(()),
    }
}

/// `γ = w_{ijk}⁻¹(α_j)` for consecutive long simple roots, where `w_{ijk}`
/// takes `θ` to `α_i + α_j + α_k`.
///
/// Checks that `γ` is a long simple root orthogonal to `θ` and that the pairs
/// of the two edges are related by `η_jk = η_ij + γ`, `η_kj = η_ji − γ`.
pub fn transition_root(rs: &RootSystem, i: usize, j: usize, k: usize) -> Result<Root> {
    require_path(rs, &[i, j, k])?;
    require_long(rs, &[i, j, k])?;
    let mu = &(&rs.simple(i) + &rs.simple(j)) + &rs.simple(k);
    let gamma = w_inv(rs, &mu, &rs.simple(j))?;
    let fail = |what: &str| {
        Error::Internal(format!("transition for ({}, {}, {}): {what}", i + 1, j + 1, k + 1))
    };
    match gamma.simple_index() {
        Some(g) if rs.simple_is_long(g) => {}
        _ => return Err(fail("γ is not a long simple root")),
    }
    if rs.theta_pairing(&gamma) != 0 {
        return Err(fail("γ is not orthogonal to θ"));
    }
    let (eij, eji) = (eta_of(rs, i, j)?, eta_of(rs, j, i)?);
    let (ejk, ekj) = (eta_of(rs, j, k)?, eta_of(rs, k, j)?);
    if ejk != &eij + &gamma || ekj != &eji - &gamma {
        return Err(fail("shift identity fails"));
    }
    Ok(gamma)
}

/// Every path `α_i – α_j – α_k` of long simple roots with `i < k`, ordered by
/// `(j, i, k)`.
pub fn incident_triples(rs: &RootSystem) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for j in rs.long_simple() {
        let nb: Vec<usize> = rs
            .neighbors(j)
            .iter()
            .copied()
            .filter(|&x| rs.simple_is_long(x))
            .collect();
        for (p, &i) in nb.iter().enumerate() {
            for &k in &nb[p + 1..] {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Transition roots along a path of `m ≥ 3` long simple roots.
///
/// In simply laced types consecutive transition roots are adjacent, all of
/// them are distinct, and on every 4-window `η_kl − η_ij = γ_j + γ_k` is a
/// positive root; these are checked there and only there.
pub fn transition_chain(rs: &RootSystem, chain: &[usize]) -> Result<Vec<Root>> {
    if chain.len() < 3 {
        return Err(path_error(chain));
    }
    require_path(rs, chain)?;
    require_long(rs, chain)?;
    let gammas = chain
        .windows(3)
        .map(|w| transition_root(rs, w[0], w[1], w[2]))
        .collect::<Result<Vec<_>>>()?;
    if rs.family().is_simply_laced() {
        let idx: Vec<usize> = gammas.iter().map(|g| g.simple_index().unwrap()).collect();
        let distinct = idx.iter().enumerate().all(|(p, a)| !idx[p + 1..].contains(a));
        if !distinct || idx.windows(2).any(|w| !rs.are_adjacent(w[0], w[1])) {
            return Err(Error::Internal("transition roots do not form a chain".into()));
        }
        for (p, w) in chain.windows(4).enumerate() {
            let (i, j, k, l) = (w[0], w[1], w[2], w[3]);
            let sum = &gammas[p] + &gammas[p + 1];
            let lhs = &eta_of(rs, k, l)? - &eta_of(rs, i, j)?;
            let rhs = &eta_of(rs, j, i)? - &eta_of(rs, l, k)?;
            if lhs != sum || rhs != sum || rs.index_of(&sum).is_none() {
                return Err(Error::Internal("four-chain identity fails".into()));
            }
        }
    }
    Ok(gammas)
}

/// Maximal paths in the subdiagram of long simple roots, each listed once
/// starting from its smaller endpoint.
pub fn long_paths(rs: &RootSystem) -> Vec<Vec<usize>> {
    let long = rs.long_simple();
    let deg = |v: usize| rs.neighbors(v).iter().filter(|&&x| rs.simple_is_long(x)).count();
    let leaves: Vec<usize> = long.iter().copied().filter(|&v| deg(v) <= 1).collect();
    let mut out = Vec::new();
    for (p, &s) in leaves.iter().enumerate() {
        for &t in &leaves[p + 1..] {
            if let Some(path) = tree_path(rs, s, t) {
                out.push(path);
            }
        }
    }
    out
}

/// The unique path between two long simple roots through long ones.
fn tree_path(rs: &RootSystem, s: usize, t: usize) -> Option<Vec<usize>> {
    fn go(rs: &RootSystem, v: usize, t: usize, path: &mut Vec<usize>) -> bool {
        path.push(v);
        if v == t {
            return true;
        }
        for &w in rs.neighbors(v) {
            if rs.simple_is_long(w) && !path.contains(&w) && go(rs, w, t, path) {
                return true;
            }
        }
        path.pop();
        false
    }
    let mut path = Vec::new();
    go(rs, s, t, &mut path).then_some(path)
}

/// The transition root `γ = η_jk − η_ij` for consecutive `α_i, α_j ∈ Π_l`,
/// `α_k ∈ Π_s`, where `η_jk` is the commutative member of the semi-glorious
/// pair. Exists only in types B (rank ≥ 3) and F.
///
/// Checks that `γ` is a short simple root orthogonal to `θ` and that it
/// equals `w⁻¹(α_j + α_k)` for `w` the shortest element taking `θ` to
/// `α_i + α_j + 2α_k`.
pub fn mixed_transition(rs: &RootSystem) -> Result<Option<(Transition, Root)>> {
    if rs.family().is_simply_laced() {
        return Err(Error::SimplyLaced);
    }
    let Some((j, k)) = rs
        .edges()
        .iter()
        .map(|&(a, b)| if rs.simple_is_long(a) { (a, b) } else { (b, a) })
        .find(|&(a, b)| rs.simple_is_long(a) && !rs.simple_is_long(b))
    else {
        return Err(Error::Internal("no mixed edge".into()));
    };
    let Some(&i) = rs
        .neighbors(j)
        .iter()
        .find(|&&x| x != k && rs.simple_is_long(x))
    else {
        return Ok(None);
    };
    let gamma = &eta_of(rs, j, k)? - &eta_of(rs, i, j)?;
    let mu = &(&rs.simple(i) + &rs.simple(j)) + &rs.simple(k).scale(2);
    let alt = w_inv(rs, &mu, &(&rs.simple(j) + &rs.simple(k)))?;
    let g = match gamma.simple_index() {
        Some(g) if !rs.simple_is_long(g) && rs.theta_pairing(&gamma) == 0 && alt == gamma => g,
        _ => return Err(Error::Internal(format!("mixed transition {gamma} is malformed"))),
    };
    Ok(Some((Transition { triple: (i, j, k), gamma: g }, gamma)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn e6_and_e8_examples() {
        let e6 = rs("E6");
        assert_eq!(transition_root(&e6, 0, 1, 2).unwrap(), e6.simple(3));
        let e8 = rs("E8");
        assert_eq!(transition_root(&e8, 3, 4, 5).unwrap(), e8.simple(3));
    }

    #[test]
    fn d4_shift() {
        let d4 = rs("D4");
        let g = transition_root(&d4, 0, 1, 2).unwrap();
        assert_eq!(eta_of(&d4, 1, 2).unwrap(), &eta_of(&d4, 0, 1).unwrap() + &g);
    }

    #[test]
    fn bad_paths() {
        let e6 = rs("E6");
        assert_eq!(transition_root(&e6, 0, 2, 3), Err(Error::NotAPath(vec![1, 3, 4])));
        assert_eq!(transition_root(&e6, 0, 1, 0), Err(Error::NotAPath(vec![1, 2, 1])));
        let b4 = rs("B4");
        assert_eq!(transition_root(&b4, 1, 2, 3), Err(Error::NotLong(4)));
        assert!(matches!(transition_chain(&e6, &[0, 1]), Err(Error::NotAPath(_))));
    }

    #[test]
    fn e7_four_chain() {
        let e7 = rs("E7");
        let g = transition_chain(&e7, &[0, 1, 2, 3]).unwrap();
        assert_eq!(g, vec![e7.simple(6), e7.simple(3)]);
    }

    #[test]
    fn mixed() {
        let (t, g) = mixed_transition(&rs("B4")).unwrap().unwrap();
        assert_eq!(t.triple, (1, 2, 3));
        assert!(g.simple_index().is_some());
        assert!(mixed_transition(&rs("F4")).unwrap().is_some());
        assert!(mixed_transition(&rs("C4")).unwrap().is_none());
        assert!(mixed_transition(&rs("G2")).unwrap().is_none());
        assert_eq!(mixed_transition(&rs("E6")), Err(Error::SimplyLaced));
    }

    #[test]
    fn maximal_long_paths() {
        assert_eq!(long_paths(&rs("E6")).len(), 3);
        assert_eq!(long_paths(&rs("A5")), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(long_paths(&rs("B4")), vec![vec![0, 1, 2]]);
    }
}
