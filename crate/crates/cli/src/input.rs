//! Graph arguments: a file (`.g6` or `.edges`) or a named graph.

use std::path::Path;

use clap::ValueEnum;
use rainbow_core::graph::{
    gen_complete, gen_cycle, gen_double_c4, gen_glued_paths, gen_path, gen_star, parse_edge_list, parse_graph6,
};
use rainbow_core::{Error, Graph};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

/// Loads a graph from `arg`.
///
/// Existing paths are read as files; the format comes from `--format` or the
/// extension (`.g6`, `.edges`). Anything else is parsed as a name: `P<n>`,
/// `C<n>`, `K<n>`, `S<n>`, `E<n>` (edgeless), `double_c4`, `glued:<m>,<p2>` or
/// `g6:<string>`.
pub fn load_graph(arg: &str, format: Option<Format>) -> Result<Graph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{arg}: {e}")))?;
        let format = match format {
            Some(f) => f,
            None => match path.extension().and_then(|e| e.to_str()) {
                Some("g6") => Format::Graph6,
                Some("edges") => Format::Edges,
                _ => {
                    return Err(CliError::Usage(format!("{arg}: unknown extension; pass --format graph6|edges")));
                }
            },
        };
        let parsed = match format {
            Format::Graph6 => parse_graph6(&text),
            Format::Edges => parse_edge_list(&text),
        };
        return parsed.map_err(CliError::Core);
    }
    named_graph(arg)
}

fn named_graph(name: &str) -> Result<Graph, CliError> {
    let unknown = || CliError::Usage(format!("`{name}` is neither a file nor a known graph name"));
    if let Some(body) = name.strip_prefix("g6:") {
        return parse_graph6(body).map_err(CliError::Core);
    }
    if name == "double_c4" {
        return Ok(gen_double_c4());
    }
    if let Some(args) = name.strip_prefix("glued:") {
        let (m, p2) = args.split_once(',').ok_or_else(unknown)?;
        let m = m.trim().parse().map_err(|_| unknown())?;
        let p2 = p2.trim().parse().map_err(|_| unknown())?;
        return gen_glued_paths(m, p2).map_err(CliError::Core);
    }
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let g: Result<Graph, Error> = match kind {
        'P' => gen_path(n),
        'C' => gen_cycle(n),
        'K' => gen_complete(n),
        'S' => gen_star(n),
        'E' => Ok(Graph::empty(n)),
        _ => return Err(unknown()),
    };
    g.map_err(CliError::Core)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(load_graph("P4", None).unwrap(), gen_path(4).unwrap());
        assert_eq!(load_graph("S4", None).unwrap().n(), 4);
        assert_eq!(load_graph("glued:1,1", None).unwrap().n(), 7);
        assert_eq!(load_graph("g6:Cl", None).unwrap(), gen_cycle(4).unwrap());
        assert!(matches!(load_graph("Q4", None), Err(CliError::Usage(_))));
        assert!(matches!(load_graph("C2", None), Err(CliError::Core(Error::TooSmall { .. }))));
    }
}
