use std::fmt::Write;

use super::Crystal;

/// DOT digraph with an edge `x -> f_i x` labelled `i`. Nodes are named by
/// their `Display` form and emitted in sorted order.
pub fn to_dot<C: Crystal + std::fmt::Display>(elements: &[C]) -> String {
    let mut sorted = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out = String::from("digraph crystal {\n");
    for x in &sorted {
        writeln!(out, "  \"{x}\";").unwrap();
    }
    for x in &sorted {
        for i in 1..x.rank() {
            if let Some(y) = x.f(i) {
                writeln!(out, "  \"{x}\" -> \"{y}\" [label=\"{i}\"];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::enumerate_b;
    use crate::tableau::Partition;

    #[test]
    fn single_box_path() {
        let b = enumerate_b(&Partition::new(vec![1]).unwrap(), 3).unwrap();
        let dot = to_dot(&b);
        assert!(dot.contains("\"1\" -> \"2\" [label=\"1\"];"));
        assert!(dot.contains("\"2\" -> \"3\" [label=\"2\"];"));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
