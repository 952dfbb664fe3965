use serde::Serialize;

use super::w_inv;
use crate::{Error, Family, Result, Root, RootSystem};

/// The branch node `ᾱ` of a D or E diagram together with its three tails.
///
/// Tails are numbered so that `T1 ∋ α1`, `T2 ∋ α_{n−1}`, `T3 ∋ α_n`. Each
/// tail lists its nodes starting from `ν_i`, the neighbour of `ᾱ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailDecomposition {
    pub branch: usize,
    pub tails: [Vec<usize>; 3],
    pub nu: [usize; 3],
    /// `β_i = w_{|Π|}⁻¹(|T_i| + ᾱ)`, as 0-based simple indices.
    pub odd: [usize; 3],
}

impl TailDecomposition {
    pub fn odd_roots(&self, rs: &RootSystem) -> [Root; 3] {
        self.odd.map(|b| rs.simple(b))
    }
}

pub fn tail_decomposition(rs: &RootSystem) -> Result<TailDecomposition> {
    if !matches!(rs.family(), Family::D | Family::E) {
        return Err(Error::NotDEType);
    }
    let n = rs.rank();
    let fail = |what: String| Error::Internal(format!("tail decomposition: {what}"));
    let all: Vec<usize> = (0..n).collect();
    let full = rs.sum_of_simple(&all);
    let candidates: Vec<usize> = (0..n)
        .filter(|&i| rs.is_root(&(&full + &rs.simple(i))))
        .collect();
    let &[branch] = candidates.as_slice() else {
        return Err(fail(format!("{} candidates for the branch node", candidates.len())));
    };
    let breve = rs.theta_breve().ok_or_else(|| fail("no θ̆".into()))?;
    if w_inv(rs, &full, &rs.simple(branch))? != -breve {
        return Err(fail("w_{|Π|}⁻¹(ᾱ) ≠ −θ̆".into()));
    }
    if rs.neighbors(branch).len() != 3 {
        return Err(fail("branch node does not have degree 3".into()));
    }

    let mut tails: Vec<Vec<usize>> = rs
        .neighbors(branch)
        .iter()
        .map(|&nu| {
            let mut chain = vec![nu];
            let mut prev = branch;
            let mut cur = nu;
            while let Some(&next) = rs.neighbors(cur).iter().find(|&&x| x != prev) {
                chain.push(next);
                prev = cur;
                cur = next;
            }
            chain
        })
        .collect();
    let slot = |t: &Vec<usize>| {
        if t.contains(&0) {
            0
        } else if t.contains(&(n - 2)) {
            1
        } else {
            2
        }
    };
    tails.sort_by_key(slot);
    if (0..3).any(|s| slot(&tails[s]) != s) {
        return Err(fail("tails do not separate α1, α_{n−1}, α_n".into()));
    }

    let mut beta = [0; 3];
    let odd = rs.odd_simple();
    for (s, t) in tails.iter().enumerate() {
        let mut hat = t.clone();
        hat.push(branch);
        let b = w_inv(rs, &full, &rs.sum_of_simple(&hat))?;
        let Some(g) = b.simple_index().filter(|g| odd.contains(g)) else {
            return Err(fail(format!("β{} = {b} is not an odd simple root", s + 1)));
        };
        beta[s] = g;
        if w_inv(rs, &full, &rs.sum_of_simple(t))? != breve + &b {
            return Err(fail(format!("w_{{|Π|}}⁻¹(|T{}|) ≠ θ̆ + β", s + 1)));
        }
        if w_inv(rs, &rs.simple(branch), &rs.simple(t[0]))? != &(-breve) - &b {
            return Err(fail(format!("w_ᾱ⁻¹(ν{}) ≠ −θ̆ − β", s + 1)));
        }
    }
    let mut sorted = beta.to_vec();
    sorted.sort_unstable();
    if sorted != odd {
        return Err(fail("the β_i are not exactly the odd simple roots".into()));
    }
    let nu = [tails[0][0], tails[1][0], tails[2][0]];
    let tails: [Vec<usize>; 3] = tails.try_into().expect("three tails");
    Ok(TailDecomposition { branch, tails, nu, odd: beta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn td(s: &str) -> TailDecomposition {
        tail_decomposition(&RootSystem::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn branch_nodes() {
        assert_eq!(td("D4").branch, 1);
        assert_eq!(td("D7").branch, 4);
        assert_eq!(td("E6").branch, 2);
        assert_eq!(td("E8").branch, 4);
    }

    #[test]
    fn betas() {
        assert_eq!(td("D6").odd, [0, 4, 5]);
        assert_eq!(td("E6").odd, [0, 4, 2]);
        assert_eq!(td("E7").odd, [0, 4, 2]);
        assert_eq!(td("E8").odd, [1, 7, 3]);
    }

    #[test]
    fn wrong_type() {
        for s in ["A3", "B3", "F4"] {
            let rs = RootSystem::parse(s).unwrap();
            assert_eq!(tail_decomposition(&rs), Err(Error::NotDEType));
        }
    }
}
