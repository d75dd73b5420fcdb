//! DOT export of Hasse diagrams: covers drawn bottom-to-top, one rank per
//! layer when the poset is graded.

use edgewise::poset::Poset;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(name: &str, p: &Poset) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", quote(name)));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext];\n");
    for label in p.labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for &(a, b) in p.covers() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(p.label(a)),
            quote(p.label(b))
        ));
    }
    if let Some(ranks) = p.rank_function() {
        let top = ranks.iter().copied().max().unwrap_or(0);
        for level in 0..=top {
            let members: Vec<String> = (0..p.len())
                .filter(|&i| ranks[i] == level)
                .map(|i| quote(p.label(i)))
                .collect();
            if !members.is_empty() {
                out.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
            }
        }
    }
    out.push_str("}\n");
    out
}
