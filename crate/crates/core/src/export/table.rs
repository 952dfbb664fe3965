//! Aligned plain-text tables. Columns are separated by two spaces and padded
//! to the widest cell; trailing blanks are trimmed.
//!
//! Roots are written in ε-notation for B, C, D, in positional digits for F
//! and G, and as coefficient tuples for A and E. Columns that always hold a
//! simple root use `a1`, `a2`, ….

use crate::glorious::{
    glorious_pairs, incident_triples, interval, minimal_nonabelian, semi_glorious,
    tail_decomposition, transition_root,
};
use crate::rootlets::RootletIndex;
use crate::{epsilon, Error, Family, Result, Root, RootIdeal, RootSystem};

pub fn show_root(rs: &RootSystem, r: &Root) -> String {
    match rs.family() {
        Family::B | Family::C | Family::D => epsilon::show(rs, r).unwrap_or_else(|| r.to_string()),
        Family::F | Family::G => r.positional(),
        Family::A | Family::E => r.to_string(),
    }
}

pub fn show_simple(i: usize) -> String {
    format!("a{}", i + 1)
}

fn show_roots(rs: &RootSystem, roots: &[Root]) -> String {
    if roots.is_empty() {
        return "-".into();
    }
    roots.iter().map(|r| show_root(rs, r)).collect::<Vec<_>>().join("; ")
}

fn show_simple_root(r: &Root) -> String {
    r.simple_index().map(show_simple).unwrap_or_else(|| r.to_string())
}

/// Lays out `header` and `rows` as an aligned table.
pub fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate().take(cols) {
            width[c] = width[c].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if c + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', width[c] - cell.chars().count()));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn info_table(rs: &RootSystem) -> String {
    let theta = rs.theta().clone();
    let opt = |r: Option<&Root>| r.map(|r| show_root(rs, r)).unwrap_or_else(|| "-".into());
    let simple_list = |v: Vec<usize>| v.into_iter().map(show_simple).collect::<Vec<_>>().join(" ");
    let rows = vec![
        vec!["type".into(), rs.spec().to_string()],
        vec!["rank".into(), rs.rank().to_string()],
        vec!["positive roots".into(), rs.num_positive().to_string()],
        vec!["theta".into(), show_root(rs, &theta)],
        vec!["theta breve".into(), opt(rs.theta_breve())],
        vec!["theta tilde".into(), opt(rs.theta_tilde())],
        vec!["dual Coxeter number".into(), rs.dual_coxeter().to_string()],
        vec!["Heisenberg size".into(), rs.heisenberg_set().len().to_string()],
        vec!["long simple".into(), simple_list(rs.long_simple())],
        vec!["short simple".into(), simple_list(rs.short_simple())],
    ];
    render(&["key", "value"], &rows)
}

pub fn roots_table(rs: &RootSystem) -> String {
    let rows: Vec<Vec<String>> = (0..rs.num_positive())
        .map(|k| {
            let r = rs.root(k);
            vec![
                (k + 1).to_string(),
                r.to_string(),
                show_root(rs, r),
                r.height().to_string(),
                if rs.is_long(k) { "long" } else { "short" }.into(),
            ]
        })
        .collect();
    render(&["k", "coeffs", "root", "height", "length"], &rows)
}

/// One row per ideal: size, abelian flag, minimal elements.
pub fn ideals_table(rs: &RootSystem, ideals: &[RootIdeal]) -> String {
    let rows: Vec<Vec<String>> = ideals
        .iter()
        .map(|i| {
            vec![
                i.len().to_string(),
                if i.is_abelian() { "yes" } else { "no" }.into(),
                show_roots(rs, &i.min_roots(rs)),
            ]
        })
        .collect();
    render(&["size", "abelian", "min"], &rows)
}

pub fn abelian_table(rs: &RootSystem, index: &RootletIndex) -> String {
    let rows: Vec<Vec<String>> = index
        .abelian()
        .iter()
        .map(|a| {
            vec![
                a.ideal.len().to_string(),
                show_roots(rs, &a.ideal.min_roots(rs)),
                a.word.to_string(),
            ]
        })
        .collect();
    render(&["size", "min", "word"], &rows)
}

pub fn rootlets_table(rs: &RootSystem, index: &RootletIndex) -> String {
    let rows: Vec<Vec<String>> = index
        .entries()
        .iter()
        .map(|e| {
            vec![
                show_root(rs, rs.root(e.mu)),
                if e.w_mu.is_empty() { "1".into() } else { e.w_mu.to_string() },
                e.i_min.len().to_string(),
                e.i_max.len().to_string(),
                e.fiber.len().to_string(),
            ]
        })
        .collect();
    render(&["mu", "w_mu", "i_min", "i_max", "fiber"], &rows)
}

/// Glorious quadruples `(α, α′, η, η′)` ordered by edge.
pub fn glorious_table(rs: &RootSystem) -> Result<String> {
    let mut pairs = glorious_pairs(rs)?;
    pairs.sort_by_key(|p| p.edge);
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|p| {
            vec![
                show_simple(p.edge.0),
                show_simple(p.edge.1),
                show_root(rs, &p.eta),
                show_root(rs, &p.eta_prime),
            ]
        })
        .collect();
    Ok(render(&["a", "a'", "eta", "eta'"], &rows))
}

/// For each long simple `α`: `min(I(α)_min)` in canonical order and
/// `max(Δ⁺ ∖ I(α)_max)` listed as `θ − η` for each `η` of the first column.
pub fn min_max_table(rs: &RootSystem, index: &RootletIndex) -> Result<String> {
    let mut rows = Vec::new();
    for a in rs.long_simple() {
        let e = index.simple_entry(rs, a)?;
        let mins = e.i_min.min_roots(rs);
        let maxs: Vec<Root> = mins.iter().map(|m| rs.theta() - m).collect();
        let mut got = e.i_max.max_complement_roots(rs);
        let mut want = maxs.clone();
        got.sort();
        want.sort();
        if got != want {
            return Err(Error::Internal(format!(
                "max(Δ⁺ ∖ I(α{})_max) is not θ − min(I(α{})_min)",
                a + 1,
                a + 1
            )));
        }
        rows.push(vec![show_simple(a), show_roots(rs, &mins), show_roots(rs, &maxs)]);
    }
    Ok(render(&["a", "min", "max"], &rows))
}

/// Transition roots of every long triple, ordered by middle node.
pub fn transitions_table(rs: &RootSystem) -> Result<String> {
    let mut rows = Vec::new();
    for (i, j, k) in incident_triples(rs) {
        let g = transition_root(rs, i, j, k)?;
        rows.push(vec![
            (i + 1).to_string(),
            (j + 1).to_string(),
            (k + 1).to_string(),
            show_simple_root(&g),
        ]);
    }
    Ok(render(&["i", "j", "k", "gamma"], &rows))
}

pub fn tails_table(systems: &[RootSystem]) -> Result<String> {
    let mut rows = Vec::new();
    for rs in systems {
        let t = tail_decomposition(rs)?;
        let mut row = vec![rs.spec().to_string()];
        row.extend(t.odd.iter().map(|&b| show_simple(b)));
        row.push(show_simple(t.branch));
        rows.push(row);
    }
    Ok(render(&["type", "beta1", "beta2", "beta3", "abar"], &rows))
}

pub fn semi_table(systems: &[RootSystem]) -> Result<String> {
    let mut rows = Vec::new();
    for rs in systems {
        let s = semi_glorious(rs)?;
        rows.push(vec![
            rs.spec().to_string(),
            show_simple(s.edge.0),
            show_simple(s.edge.1),
            show_root(rs, &s.eta),
            show_root(rs, &s.eta_prime),
            show_simple_root(&s.simple_diff),
        ]);
    }
    Ok(render(&["type", "a", "a'", "eta", "eta'", "eta-eta'"], &rows))
}

/// Members of `[θ̆, θ̃]` with their classes (`-` for `θ̆`, which is not
/// commutative).
pub fn interval_table(rs: &RootSystem) -> Result<String> {
    let iv = interval(rs)?;
    let rows: Vec<Vec<String>> = iv
        .members
        .iter()
        .map(|m| {
            let class = iv
                .classes
                .iter()
                .find(|(r, _)| r == m)
                .map(|&(_, c)| if c == 0 { "a0".into() } else { show_simple(c - 1) })
                .unwrap_or_else(|| "-".into());
            vec![show_root(rs, m), m.height().to_string(), class]
        })
        .collect();
    Ok(render(&["root", "height", "class"], &rows))
}

pub fn minimal_table(rs: &RootSystem) -> Result<String> {
    let rows: Vec<Vec<String>> = minimal_nonabelian(rs)?
        .iter()
        .map(|m| {
            vec![
                show_simple(m.edge.0),
                show_simple(m.edge.1),
                m.ideal.len().to_string(),
                format!("{}; {}", show_root(rs, &m.pair.0), show_root(rs, &m.pair.1)),
                m.word.to_string(),
            ]
        })
        .collect();
    Ok(render(&["a", "a'", "size", "pair", "word"], &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let t = render(&["a", "bb"], &[vec!["xyz".into(), "1".into()], vec!["q".into(), "".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\nq\n");
    }

    #[test]
    fn d4_glorious() {
        let d4 = RootSystem::parse("D4").unwrap();
        assert_eq!(
            glorious_table(&d4).unwrap(),
            "a   a'  eta    eta'\na1  a2  e1-e3  e2+e3\na2  a3  e1+e4  e2-e4\na2  a4  e1-e4  e2+e4\n"
        );
    }
}
