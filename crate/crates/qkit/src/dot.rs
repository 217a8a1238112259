//! DOT rendering: Hasse diagrams (covering edges only) and evaluation
//! squares for reflected transitions.

use crate::closure::ClosureSpace;
use crate::error::Result;
use crate::functors::property_reflection;
use crate::ortho::Ortholattice;
use crate::poset::FinitePoset;
use crate::transitions::PossibleTransition;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of a poset, edges pointing upward.
pub fn poset_dot(p: &FinitePoset, graph_name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {graph_name} {{\n"));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for i in 0..p.n() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(p.name(i))));
    }
    for (i, j) in p.covers() {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the closed-set lattice of a space.
pub fn space_dot(s: &ClosureSpace) -> Result<String> {
    let lattice = s.closed_set_lattice()?;
    Ok(poset_dot(lattice.poset(), "closed_sets"))
}

/// Hasse diagram with dashed edges joining orthocomplement pairs.
pub fn ortho_dot(ol: &Ortholattice) -> String {
    let p = ol.lattice().poset();
    let mut out = poset_dot(p, "ortholattice");
    out.truncate(out.len() - 2); // reopen before the closing brace
    for i in 0..p.n() {
        let j = ol.ortho(i);
        if i < j {
            out.push_str(&format!(
                "  n{i} -> n{j} [dir=none, style=dashed, constraint=false];\n"
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// The evaluation square of an image-compatible transition: powersets on
/// top, image lattices below, with the reflected map closing the square.
pub fn square_dot(f: &PossibleTransition) -> Result<String> {
    property_reflection(f)?; // must exist for the square to commute
    let mut out = String::new();
    out.push_str("digraph square {\n  rankdir=TB;\n  node [shape=box];\n");
    out.push_str("  p1 [label=\"P(Sigma1)\"];\n");
    out.push_str("  p2 [label=\"P(Sigma2)\"];\n");
    out.push_str("  im1 [label=\"im1\"];\n");
    out.push_str("  im2 [label=\"im2\"];\n");
    out.push_str("  p1 -> p2 [label=\"f\"];\n");
    out.push_str("  p1 -> im1 [label=\"value1\"];\n");
    out.push_str("  p2 -> im2 [label=\"value2\"];\n");
    out.push_str("  im1 -> im2 [label=\"f_pr\"];\n");
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::diamond_poset;

    #[test]
    fn diamond_has_four_nodes_and_four_edges() {
        let dot = poset_dot(&diamond_poset(2), "m2");
        assert_eq!(dot.matches("label=").count(), 4);
        assert_eq!(dot.matches(" -> ").count(), 4);
    }

    #[test]
    fn single_element_has_no_edges() {
        let p = FinitePoset::new(vec!["a".into()], &[]).unwrap();
        let dot = poset_dot(&p, "point");
        assert_eq!(dot.matches(" -> ").count(), 0);
        assert_eq!(dot.matches("label=").count(), 1);
    }

    #[test]
    fn square_has_four_nodes_and_four_edges() {
        let r = crate::resolution::tests::two_state_chain();
        let f = PossibleTransition::identity(&r);
        let dot = square_dot(&f).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert_eq!(dot.matches("label=\"").count(), 8); // 4 nodes + 4 edge labels
    }
}
