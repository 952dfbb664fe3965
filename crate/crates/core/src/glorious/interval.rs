use std::collections::VecDeque;

use serde::Serialize;

use super::{
    classify_pair, mixed_transition, pair_from_edge, semi_glorious, tail_decomposition,
    transition_root, w_inv,
};
use crate::rootlets::class_of;
use crate::{Error, Family, Result, Root, RootSystem};

/// One of the three glorious pairs inside `[θ̆, θ̃]` in types D and E.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralPair {
    /// `(ᾱ, ν_i)`, 0-based.
    pub edge: (usize, usize),
    pub beta: usize,
    /// `θ̆ + β_i`.
    pub low: Root,
    /// `θ̃ − β_i`.
    pub high: Root,
}

/// The interval `[θ̆, θ̃]` of the root poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub bottom: Root,
    pub top: Root,
    /// Members in canonical order.
    pub members: Vec<Root>,
    /// Covering relations `(lower, upper)` as positions in `members`.
    pub covers: Vec<(usize, usize)>,
    /// Empty outside types D and E.
    pub central: Vec<CentralPair>,
    /// Class (generator index) of every commutative member.
    pub classes: Vec<(Root, usize)>,
}

pub fn interval(rs: &RootSystem) -> Result<Interval> {
    if rs.family() == Family::A {
        return Err(Error::TypeA);
    }
    let (kb, kt) = match (rs.theta_breve_index(), rs.theta_tilde_index()) {
        (Some(b), Some(t)) => (b, t),
        _ => return Err(Error::Internal("θ̆ or θ̃ missing".into())),
    };
    let bottom = rs.root(kb).clone();
    let top = rs.root(kt).clone();
    let idx: Vec<usize> = (0..rs.num_positive())
        .filter(|&k| rs.is_leq_idx(kb, k) && rs.is_leq_idx(k, kt))
        .collect();
    let members: Vec<Root> = idx.iter().map(|&k| rs.root(k).clone()).collect();
    let mut covers = Vec::new();
    for (p, &k) in idx.iter().enumerate() {
        for up in rs.upper_covers(k) {
            if let Some(q) = idx.iter().position(|&x| x == up) {
                covers.push((p, q));
            }
        }
    }
    let fail = |what: &str| Error::Internal(format!("interval [θ̆, θ̃]: {what}"));
    let odd = rs.sum_of_simple(&rs.odd_simple());
    if &top - &bottom != odd {
        return Err(fail("θ̃ − θ̆ is not the sum of the odd simple roots"));
    }

    let mut central = Vec::new();
    let mut classes = Vec::new();
    if matches!(rs.family(), Family::D | Family::E) {
        let td = tail_decomposition(rs)?;
        let beta = td.odd_roots(rs);
        let vertex = |mask: usize| {
            (0..3)
                .filter(|s| mask >> s & 1 == 1)
                .fold(bottom.clone(), |acc, s| &acc + &beta[s])
        };
        let mut cube: Vec<Root> = (0..8).map(vertex).collect();
        cube.sort();
        let mut sorted = members.clone();
        sorted.sort();
        if cube != sorted {
            return Err(fail("members do not form the cube θ̆ + Σβ"));
        }
        let single_step = covers.iter().all(|&(p, q)| {
            (&members[q] - &members[p]).simple_index().is_some_and(|g| td.odd.contains(&g))
        });
        if covers.len() != 12 || !single_step {
            return Err(fail("covering relations are not those of a cube"));
        }
        let ab = td.branch;
        for s in 0..3 {
            let nu = td.nu[s];
            let low = &bottom + &beta[s];
            let high = &top - &beta[s];
            let pair = classify_pair(rs, &low, &high)?;
            if pair.edge != (ab.min(nu), ab.max(nu)) {
                return Err(fail("central pair sits on the wrong edge"));
            }
            let sum = &rs.simple(ab) + &rs.simple(nu);
            if w_inv(rs, &rs.simple(ab), &sum)? != high || w_inv(rs, &rs.simple(nu), &sum)? != low {
                return Err(fail("central pair is not produced by w_ᾱ and w_ν"));
            }
            if rs.meet(&low, &high)? != bottom || rs.join(&low, &high)? != top {
                return Err(fail("central pair has the wrong meet or join"));
            }
            let (j, k) = (td.nu[(s + 1) % 3], td.nu[(s + 2) % 3]);
            if transition_root(rs, j.min(k), ab, j.max(k))? != beta[s] {
                return Err(fail("β_i is not the transition root of the other two central edges"));
            }
            if class_of(rs, &low)? != ab + 1 || class_of(rs, &high)? != nu + 1 {
                return Err(fail("classes of central pair are wrong"));
            }
            central.push(CentralPair { edge: (ab, nu), beta: td.odd[s], low, high });
        }
        if class_of(rs, &top)? != ab + 1 {
            return Err(fail("class of θ̃ is not ᾱ"));
        }
        for m in &members[1..] {
            classes.push((m.clone(), class_of(rs, m)?));
        }
    } else {
        let semi = semi_glorious(rs)?;
        if members.len() != 2 || (semi.eta.clone(), semi.eta_prime.clone()) != (top.clone(), bottom.clone()) {
            return Err(fail("interval is not the semi-glorious pair"));
        }
        classes.push((top.clone(), class_of(rs, &top)?));
    }
    Ok(Interval { bottom, top, members, covers, central, classes })
}

/// Position of a glorious pair relative to the branch node (types D, E) or to
/// the semi-glorious edge (types B, F).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetDistance {
    pub edge: (usize, usize),
    pub d: usize,
    /// `E_0, …, E_d`.
    pub path: Vec<(usize, usize)>,
    /// Transition roots of consecutive edges of `path`.
    pub gammas: Vec<Root>,
    pub meet: Root,
    pub join: Root,
}

fn norm(e: (usize, usize)) -> (usize, usize) {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Meet and join of the glorious pair on edge `(a, b)`, computed
/// coefficientwise and checked against the sum of transition roots along the
/// path to the nearest anchor edge.
pub fn meet_distance(rs: &RootSystem, a: usize, b: usize) -> Result<MeetDistance> {
    if rs.family() == Family::A {
        return Err(Error::TypeA);
    }
    let edge = norm((a, b));
    let pair = pair_from_edge(rs, a, b).map_err(|e| match e {
        Error::NotAdjacent(..) | Error::NotLong(_) => Error::NotGloriousEdge(a + 1, b + 1),
        other => other,
    })?;
    let meet = rs.meet(&pair.eta, &pair.eta_prime)?;
    let join = rs.join(&pair.eta, &pair.eta_prime)?;
    let fail = |what: &str| {
        Error::Internal(format!("edge ({}, {}): {what}", edge.0 + 1, edge.1 + 1))
    };
    if &(&meet + &join) != rs.theta() {
        return Err(fail("meet + join ≠ θ"));
    }

    let simply_laced = rs.family().is_simply_laced();
    let mut nodes: Vec<(usize, usize)> = rs
        .edges()
        .iter()
        .map(|&e| norm(e))
        .filter(|&(x, y)| rs.simple_is_long(x) && rs.simple_is_long(y))
        .collect();
    let anchor: Vec<(usize, usize)> = if simply_laced {
        let ab = tail_decomposition(rs)?.branch;
        nodes.iter().copied().filter(|&(x, y)| x == ab || y == ab).collect()
    } else {
        let mixed: Vec<(usize, usize)> = rs
            .edges()
            .iter()
            .map(|&e| norm(e))
            .filter(|&(x, y)| rs.simple_is_long(x) != rs.simple_is_long(y))
            .collect();
        nodes.extend(&mixed);
        mixed
    };

    let start = nodes.iter().position(|&e| e == edge).ok_or_else(|| fail("edge missing"))?;
    let shares = |e: (usize, usize), f: (usize, usize)| {
        e != f && (e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1)
    };
    let mut prev = vec![usize::MAX; nodes.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    let mut target = None;
    while let Some(u) = queue.pop_front() {
        if anchor.contains(&nodes[u]) {
            target = Some(u);
            break;
        }
        for v in 0..nodes.len() {
            if prev[v] == usize::MAX && shares(nodes[u], nodes[v]) {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut at = target.ok_or_else(|| fail("no anchor edge reachable"))?;
    let mut path = vec![nodes[at]];
    while at != start {
        at = prev[at];
        path.push(nodes[at]);
    }
    path.reverse();

    let mut gammas = Vec::new();
    for w in path.windows(2) {
        let (e, f) = (w[0], w[1]);
        let j = if e.0 == f.0 || e.0 == f.1 { e.0 } else { e.1 };
        let i = if e.0 == j { e.1 } else { e.0 };
        let k = if f.0 == j { f.1 } else { f.0 };
        let g = if rs.simple_is_long(k) {
            transition_root(rs, i, j, k)?
        } else {
            match mixed_transition(rs)? {
                Some((t, g)) if t.triple == (i, j, k) => g,
                _ => return Err(fail("mixed transition does not match the path")),
            }
        };
        gammas.push(g);
    }
    let d = gammas.len();
    let sum = gammas
        .iter()
        .fold(Root::zero(rs.rank()), |acc, g| &acc + g);
    let breve = rs.theta_breve().ok_or_else(|| fail("θ̆ missing"))?;
    let tilde = rs.theta_tilde().ok_or_else(|| fail("θ̃ missing"))?;
    if meet != breve - &sum || join != tilde + &sum {
        return Err(fail("meet or join differs from the transition-root sum"));
    }
    let ok = if simply_laced {
        meet.height() == breve.height() - d as i32
    } else {
        join.height() == tilde.height() + d as i32
    };
    if !ok {
        return Err(fail("height shift differs from the distance"));
    }
    Ok(MeetDistance { edge, d, path, gammas, meet, join })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn cube_and_chain() {
        for s in ["D4", "D6", "E6", "E7", "E8"] {
            let iv = interval(&rs(s)).unwrap();
            assert_eq!(iv.members.len(), 8, "{s}");
            assert_eq!(iv.central.len(), 3);
            assert_eq!(iv.classes.len(), 7);
        }
        for s in ["B3", "C4", "F4", "G2"] {
            let iv = interval(&rs(s)).unwrap();
            assert_eq!(iv.members.len(), 2, "{s}");
            assert_eq!(iv.covers, vec![(0, 1)]);
        }
        assert_eq!(interval(&rs("A4")), Err(Error::TypeA));
    }

    #[test]
    fn e6_distances() {
        let e6 = rs("E6");
        assert_eq!(meet_distance(&e6, 0, 1).unwrap().d, 1);
        assert_eq!(meet_distance(&e6, 1, 2).unwrap().d, 0);
        let m = meet_distance(&e6, 0, 1).unwrap();
        assert_eq!(m.meet, Root::from([0, 1, 1, 0, 0, 1]));
    }

    #[test]
    fn b_and_f_distances() {
        let b5 = rs("B5");
        let m = meet_distance(&b5, 0, 1).unwrap();
        assert_eq!(m.d, 3);
        assert_eq!(m.join.height(), b5.theta_tilde().unwrap().height() + 3);
        let f4 = rs("F4");
        assert_eq!(meet_distance(&f4, 2, 3).unwrap().d, 1);
    }

    #[test]
    fn errors() {
        assert_eq!(meet_distance(&rs("A3"), 0, 1), Err(Error::TypeA));
        assert_eq!(meet_distance(&rs("C4"), 2, 3), Err(Error::NotGloriousEdge(3, 4)));
        assert_eq!(meet_distance(&rs("E6"), 0, 2), Err(Error::NotGloriousEdge(1, 3)));
    }
}
