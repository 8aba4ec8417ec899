//! DOT rendering of a poset's covering graph, ranked by filtration value
//! when one is available.

use reeb_forest_core::poset::Poset;

pub fn write_dot(poset: &Poset, f: Option<&[f64]>) -> String {
    let mut out = String::from("digraph covering {\n  rankdir=BT;\n");
    for x in 0..poset.len() {
        let name = poset.label(x).map(str::to_string).unwrap_or_else(|| format!("n{x}"));
        let label = match f {
            Some(f) => format!("{name}\\nf={}", f[x]),
            None => name,
        };
        out.push_str(&format!("  v{x} [label=\"{}\"];\n", label.replace('"', "'")));
    }
    for (x, y) in poset.covering_graph() {
        out.push_str(&format!("  v{x} -> v{y};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_the_vee() {
        let vee = Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap();
        let dot = write_dot(&vee, Some(&[0.0, 2.0, 1.0]));
        assert!(dot.contains("v0 -> v1;"));
        assert!(dot.contains("v2 -> v1;"));
        assert!(dot.contains("f=2"));
    }
}
