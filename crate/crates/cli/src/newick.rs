//! Newick serialization of the output tree. Branch lengths are the
//! filtration gaps f(child) - f(parent); the root carries length 0.

use reeb_forest_core::ReebTree;

/// Characters with structural meaning in Newick are replaced by '_'.
fn sanitize(label: &str) -> String {
    label
        .chars()
        .map(|c| match c {
            '(' | ')' | ',' | ':' | ';' | '[' | ']' | '\'' | '"' => '_',
            c if c.is_whitespace() => '_',
            c => c,
        })
        .collect()
}

pub fn write_newick(tree: &ReebTree) -> String {
    let mut out = String::new();
    emit(tree, tree.root(), &mut out);
    out.push_str(":0;");
    out
}

fn emit(tree: &ReebTree, node: usize, out: &mut String) {
    let children = tree.children(node);
    if !children.is_empty() {
        out.push('(');
        for (i, &c) in children.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            emit(tree, c, out);
            out.push(':');
            out.push_str(&format!("{}", tree.f(c) - tree.f(node)));
        }
        out.push(')');
    }
    let label = tree
        .poset()
        .label(node)
        .map(sanitize)
        .unwrap_or_else(|| format!("n{node}"));
    out.push_str(&label);
}

/// A parsed Newick node; used to verify round trips.
#[derive(Debug)]
pub struct NewickNode {
    pub label: String,
    pub branch: f64,
    pub children: Vec<NewickNode>,
}

impl NewickNode {
    /// Leaf-to-leaf and node-to-node path lengths keyed by label.
    pub fn path_lengths(&self) -> Vec<(String, String, f64)> {
        // collect (label, depth) pairs and the tree structure flat
        let mut nodes: Vec<(String, f64, Option<usize>)> = Vec::new();
        flatten(self, None, 0.0, &mut nodes);
        let mut out = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                // distance through the lowest common ancestor
                let mut ai: Vec<usize> = ancestors(&nodes, i);
                let mut aj: Vec<usize> = ancestors(&nodes, j);
                ai.reverse();
                aj.reverse();
                let mut k = 0;
                while k < ai.len() && k < aj.len() && ai[k] == aj[k] {
                    k += 1;
                }
                let lca = ai[k - 1];
                let d = nodes[i].1 + nodes[j].1 - 2.0 * nodes[lca].1;
                out.push((nodes[i].0.clone(), nodes[j].0.clone(), d));
            }
        }
        out
    }
}

fn flatten(
    node: &NewickNode,
    parent: Option<usize>,
    depth: f64,
    nodes: &mut Vec<(String, f64, Option<usize>)>,
) {
    let depth = depth + node.branch;
    let idx = nodes.len();
    nodes.push((node.label.clone(), depth, parent));
    for c in &node.children {
        flatten(c, Some(idx), depth, nodes);
    }
}

fn ancestors(nodes: &[(String, f64, Option<usize>)], mut i: usize) -> Vec<usize> {
    let mut out = vec![i];
    while let Some(p) = nodes[i].2 {
        out.push(p);
        i = p;
    }
    out
}

/// Minimal Newick parser, sufficient for round-trip checks of our own output.
pub fn parse_newick(text: &str) -> Result<NewickNode, String> {
    let text = text.trim();
    let text = text
        .strip_suffix(';')
        .ok_or_else(|| "missing trailing semicolon".to_string())?;
    let bytes = text.as_bytes();
    let mut pos = 0;
    let node = parse_node(bytes, &mut pos)?;
    if pos != bytes.len() {
        return Err(format!("trailing input at byte {pos}"));
    }
    Ok(node)
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<NewickNode, String> {
    let mut children = Vec::new();
    if bytes.get(*pos) == Some(&b'(') {
        *pos += 1;
        loop {
            children.push(parse_node(bytes, pos)?);
            match bytes.get(*pos) {
                Some(&b',') => *pos += 1,
                Some(&b')') => {
                    *pos += 1;
                    break;
                }
                other => return Err(format!("expected ',' or ')' at byte {pos:?}, got {other:?}")),
            }
        }
    }
    let start = *pos;
    while *pos < bytes.len() && !b"(),:;".contains(&bytes[*pos]) {
        *pos += 1;
    }
    let label = std::str::from_utf8(&bytes[start..*pos])
        .map_err(|e| e.to_string())?
        .to_string();
    let mut branch = 0.0;
    if bytes.get(*pos) == Some(&b':') {
        *pos += 1;
        let start = *pos;
        while *pos < bytes.len() && !b"(),;".contains(&bytes[*pos]) {
            *pos += 1;
        }
        branch = std::str::from_utf8(&bytes[start..*pos])
            .map_err(|e| e.to_string())?
            .parse::<f64>()
            .map_err(|e| format!("bad branch length: {e}"))?;
    }
    Ok(NewickNode {
        label,
        branch,
        children,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_what_we_print() {
        let node = parse_newick("((a:1,b:2)c:0.5,d:3)root:0;").unwrap();
        assert_eq!(node.label, "root");
        assert_eq!(node.children.len(), 2);
        assert_eq!(node.children[0].children[1].label, "b");
        assert_eq!(node.children[0].children[1].branch, 2.0);
    }

    #[test]
    fn sanitizer_strips_structure() {
        assert_eq!(sanitize("a(b):c,d;e f"), "a_b__c_d_e_f");
    }
}
