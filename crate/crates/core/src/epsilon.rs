//! Dictionaries between simple-root coefficients and the ε-basis of the
//! classical types B, C and D.
//!
//! Simple roots are `α_i = ε_i − ε_{i+1}` for `i < n` and
//! `α_n = ε_n` (B), `2ε_n` (C), `ε_{n−1} + ε_n` (D).

use crate::{Family, Root, RootSystem};

/// ε-coordinates of a lattice vector, or `None` outside types B, C, D.
pub fn to_epsilon(rs: &RootSystem, r: &Root) -> Option<Vec<i32>> {
    let n = rs.rank();
    let a = r.coeffs();
    let prev = |k: usize| if k == 0 { 0 } else { a[k - 1] };
    match rs.family() {
        Family::B => Some((0..n).map(|k| a[k] - prev(k)).collect()),
        Family::C => Some(
            (0..n)
                .map(|k| if k + 1 < n { a[k] - prev(k) } else { 2 * a[k] - prev(k) })
                .collect(),
        ),
        Family::D => {
            let mut c: Vec<i32> = (0..n - 2).map(|k| a[k] - prev(k)).collect();
            c.push(a[n - 2] - a[n - 3] + a[n - 1]);
            c.push(a[n - 1] - a[n - 2]);
            Some(c)
        }
        _ => None,
    }
}

/// Inverse of [`to_epsilon`]; `None` if the vector is not in the root lattice.
pub fn from_epsilon(rs: &RootSystem, c: &[i32]) -> Option<Root> {
    let n = rs.rank();
    if c.len() != n {
        return None;
    }
    let prefix = |j: usize| c[..=j].iter().sum::<i32>();
    let a = match rs.family() {
        Family::B => (0..n).map(prefix).collect(),
        Family::C => {
            let total = prefix(n - 1);
            if total % 2 != 0 {
                return None;
            }
            let mut a: Vec<i32> = (0..n - 1).map(prefix).collect();
            a.push(total / 2);
            a
        }
        Family::D => {
            let s = prefix(n - 2);
            if (s + c[n - 1]) % 2 != 0 {
                return None;
            }
            let mut a: Vec<i32> = (0..n - 2).map(prefix).collect();
            a.push((s - c[n - 1]) / 2);
            a.push((s + c[n - 1]) / 2);
            a
        }
        _ => return None,
    };
    Some(Root::new(a))
}

/// Renders ε-coordinates as a signed sum such as `e1-e3` or `2e1`.
pub fn format(c: &[i32]) -> String {
    let mut out = String::new();
    for (k, &v) in c.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if v < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if v.abs() != 1 {
            out.push_str(&v.abs().to_string());
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the output of [`format`] back into coordinates of length `n`.
pub fn parse(s: &str, n: usize) -> Option<Vec<i32>> {
    let mut c = vec![0; n];
    let s = s.trim();
    if s == "0" {
        return Some(c);
    }
    let mut rest = s;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ if rest.len() == s.len() => (1, rest),
            _ => return None,
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        let (mult, idx) = term.split_once('e')?;
        let mult: i32 = if mult.is_empty() { 1 } else { mult.parse().ok()? };
        let idx: usize = idx.parse().ok()?;
        if idx == 0 || idx > n {
            return None;
        }
        c[idx - 1] += sign * mult;
        rest = &body[end..];
    }
    Some(c)
}

/// Convenience: the root written in ε-notation, e.g. `root(rs, "e1-e3")`.
pub fn root(rs: &RootSystem, s: &str) -> Option<Root> {
    from_epsilon(rs, &parse(s, rs.rank())?)
}

/// ε-notation of a root of a B/C/D system.
pub fn show(rs: &RootSystem, r: &Root) -> Option<String> {
    to_epsilon(rs, r).map(|c| format(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dictionaries_round_trip_on_all_roots() {
        for s in ["B2", "B5", "C2", "C5", "D4", "D7"] {
            let rs = RootSystem::parse(s).unwrap();
            for r in rs.positive_roots() {
                let c = to_epsilon(&rs, r).unwrap();
                assert_eq!(from_epsilon(&rs, &c).as_ref(), Some(r), "{s} {r}");
                assert_eq!(parse(&format(&c), rs.rank()), Some(c));
            }
        }
    }

    #[test]
    fn classical_shapes() {
        let b3 = RootSystem::parse("B3").unwrap();
        assert_eq!(root(&b3, "e1").unwrap(), Root::from([1, 1, 1]));
        assert_eq!(root(&b3, "e2").unwrap(), Root::from([0, 1, 1]));
        assert_eq!(show(&b3, b3.theta()).unwrap(), "e1+e2");
        let c3 = RootSystem::parse("C3").unwrap();
        assert_eq!(show(&c3, c3.theta()).unwrap(), "2e1");
        let d4 = RootSystem::parse("D4").unwrap();
        assert_eq!(root(&d4, "e1-e3").unwrap(), Root::from([1, 1, 0, 0]));
        assert_eq!(root(&d4, "e2+e3").unwrap(), Root::from([0, 1, 1, 1]));
        assert_eq!(show(&d4, d4.theta()).unwrap(), "e1+e2");
        assert!(root(&RootSystem::parse("E6").unwrap(), "e1").is_none());
    }

    #[test]
    fn positive_roots_have_classical_shape() {
        // every positive root is ε_i ± ε_j (i < j), plus ε_i in B and 2ε_i in C
        for s in ["B4", "C4", "D5"] {
            let rs = RootSystem::parse(s).unwrap();
            for r in rs.positive_roots() {
                let c = to_epsilon(&rs, r).unwrap();
                let nz: Vec<i32> = c.iter().copied().filter(|&v| v != 0).collect();
                let first = c.iter().position(|&v| v != 0).unwrap();
                assert!(c[first] > 0);
                assert!(matches!(nz.as_slice(), [1] | [2] | [1, 1] | [1, -1]), "{s} {r}");
            }
        }
    }
}
