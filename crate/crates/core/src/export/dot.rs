use std::fmt::Write;

use crate::{RootSet, RootSystem};

/// The Hasse diagram of `Δ⁺` as a DOT digraph with edges pointing upward.
///
/// Nodes are emitted in canonical root order and labelled by coefficient
/// vectors; members of `highlight` are filled.
pub fn export_hasse_dot(rs: &RootSystem, highlight: Option<&RootSet>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", rs.spec()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for k in 0..rs.num_positive() {
        let lit = highlight.is_some_and(|h| h.contains(k));
        let style = if lit { ", style=filled, fillcolor=\"#e8b04a\"" } else { "" };
        writeln!(out, "  r{k} [label=\"{}\"{style}];", rs.root(k)).unwrap();
    }
    for k in 0..rs.num_positive() {
        for up in rs.upper_covers(k) {
            writeln!(out, "  r{k} -> r{up};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glorious::interval;
    use crate::rootlets::i_min;

    fn count(s: &str, pat: &str) -> usize {
        s.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let d = export_hasse_dot(&rs, None);
        assert_eq!(count(&d, "[label="), 3);
        assert_eq!(count(&d, " -> "), 2);
    }

    #[test]
    fn highlights() {
        let d4 = RootSystem::parse("D4").unwrap();
        let iv = interval(&d4).unwrap();
        let set = RootSet::from_indices(
            d4.num_positive(),
            iv.members.iter().map(|r| d4.index_of(r).unwrap()),
        );
        let d = export_hasse_dot(&d4, Some(&set));
        assert_eq!(count(&d, "style=filled"), 8);

        let e6 = RootSystem::parse("E6").unwrap();
        let ideal = i_min(&e6, &e6.simple(5)).unwrap();
        let d = export_hasse_dot(&e6, Some(ideal.members()));
        assert_eq!(count(&d, "style=filled"), e6.dual_coxeter() - 1);
    }
}
