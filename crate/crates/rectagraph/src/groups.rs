//! Group arguments: named coordinate groups and generator files.

use std::path::{Path, PathBuf};

use rectagraph_core::perm::{AffineGroup, NamedGroup, PermGroup, Permutation};
use rectagraph_core::rect::VertexGroup;

use crate::error::{Error, Result};
use crate::family::{parse_error, BuiltGraph, Inputs};
use crate::formats::parse_generators;

/// Parses `S7`, `A7`, `M11`, `M12`, `M23`, `M24` or `PGammaL28`.
pub fn parse_named_group(name: &str) -> Result<NamedGroup> {
    let bad = || {
        Error::usage(format!(
            "unknown group `{name}`; expected Sn, An, M11, M12, M23, M24 or PGammaL28"
        ))
    };
    Ok(match name {
        "M11" => NamedGroup::M11,
        "M12" => NamedGroup::M12,
        "M23" => NamedGroup::M23,
        "M24" => NamedGroup::M24,
        "PGammaL28" | "PGammaL(2,8)" => NamedGroup::PGammaL28,
        _ => {
            let (family, degree) = name.split_at(1.min(name.len()));
            let n: usize = degree.parse().map_err(|_| bad())?;
            match family {
                "S" => NamedGroup::Symmetric(n),
                "A" => NamedGroup::Alternating(n),
                _ => return Err(bad()),
            }
        }
    })
}

/// How the group acting on a graph is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Generators permuting the vertices.
    VertexFile(PathBuf),
    /// Translations of a coset graph with a named group on coordinates.
    AffineNamed(String),
    /// Translations of a coset graph with coordinate generators from a file.
    AffineFile(PathBuf),
}

impl GroupSpec {
    pub fn build(&self, target: &BuiltGraph, inputs: &mut Inputs) -> Result<VertexGroup> {
        match self {
            GroupSpec::VertexFile(path) => {
                let (degree, gens) = read_generators(path, inputs)?;
                Ok(VertexGroup::Explicit(PermGroup::new(degree, &gens)?))
            }
            GroupSpec::AffineNamed(name) => {
                let gens = parse_named_group(name)?.generators()?;
                affine(target, &gens)
            }
            GroupSpec::AffineFile(path) => {
                let (_, gens) = read_generators(path, inputs)?;
                affine(target, &gens)
            }
        }
    }
}

fn read_generators(path: &Path, inputs: &mut Inputs) -> Result<(usize, Vec<Permutation>)> {
    let text = inputs.read(path)?;
    parse_generators(&text).map_err(|e| parse_error(path, e))
}

fn affine(target: &BuiltGraph, gens: &[Permutation]) -> Result<VertexGroup> {
    let origin = target.origin.as_ref().ok_or_else(|| {
        Error::usage(
            "an affine group needs a coset graph (or half of an even one) built from a code",
        )
    })?;
    Ok(VertexGroup::Affine(AffineGroup::new(
        &origin.code,
        gens,
        origin.even,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse_named_group("S7").unwrap(), NamedGroup::Symmetric(7));
        assert_eq!(
            parse_named_group("A12").unwrap(),
            NamedGroup::Alternating(12)
        );
        assert_eq!(parse_named_group("M24").unwrap(), NamedGroup::M24);
        assert!(parse_named_group("X3").is_err());
        assert!(parse_named_group("S").is_err());
        assert!(parse_named_group("").is_err());
    }
}
