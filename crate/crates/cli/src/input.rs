//! Graph sources shared by the subcommands.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use sp_extremal::construct::{g5_family, h_catalog, parse_catalog, theta};
use sp_extremal::graph::{decode_graph6, Graph};

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// A graph6 string; may be repeated.
    #[arg(long = "g6", value_name = "STRING")]
    pub g6: Vec<String>,
    /// A file with one graph6 string per line.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// A built-in graph: theta:K,S | g5:S | h:I (1 to 8).
    #[arg(long, value_name = "SPEC")]
    pub construct: Option<String>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Vec<Graph>> {
        if let Some(spec) = &self.construct {
            return Ok(vec![construct(spec)?]);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            return parse_catalog(&text)
                .with_context(|| format!("bad graph6 in {}", path.display()));
        }
        self.g6
            .iter()
            .map(|s| decode_graph6(s).with_context(|| format!("bad graph6 {s:?}")))
            .collect()
    }
}

fn numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .with_context(|| format!("not a number: {x:?}"))
        })
        .collect()
}

/// Parses `theta:K,S`, `g5:S` or `h:I`.
pub fn construct(spec: &str) -> Result<Graph> {
    let (kind, args) = spec
        .split_once(':')
        .with_context(|| format!("bad spec {spec:?}"))?;
    let args = numbers(args)?;
    Ok(match (kind, args.as_slice()) {
        ("theta", &[k, s]) => theta(k, s)?,
        ("g5", &[s]) => g5_family(s)?,
        ("h", &[i]) if (1..=8).contains(&i) => h_catalog()[i - 1].clone(),
        _ => bail!("bad spec {spec:?}; expected theta:K,S, g5:S or h:1..8"),
    })
}

/// Parses a comma-separated vertex list.
pub fn vertex_list(s: &str) -> Result<Vec<usize>> {
    numbers(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_specs() {
        assert_eq!(construct("theta:3,3").unwrap(), theta(3, 3).unwrap());
        assert_eq!(construct("g5:4").unwrap(), g5_family(4).unwrap());
        assert_eq!(construct("h:8").unwrap(), h_catalog()[7]);
        for bad in ["h:0", "h:9", "theta:3", "theta:1,3", "g5:x", "cube:3", "g5"] {
            assert!(construct(bad).is_err(), "{bad}");
        }
    }
}
