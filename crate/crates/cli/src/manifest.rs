//! Benchmark manifests (TOML).
//!
//! ```toml
//! algorithms = ["dp", "fptas:0.1", "fptas:0.75"]
//! instances = ["eil101_n100_uncorr_01.ttp"]   # relative to the manifest
//!
//! [[generate]]
//! family = "b-s-corr"
//! m = 100
//! capacity_class = 6
//! seed = 7
//! range = "large"              # optional, default "small"
//! assignment = "sorted:1"      # optional, default "round-robin"
//! ```

use std::path::{Path, PathBuf};

use pwt_core::io::parse_instance;
use pwt_core::io::{generate, GeneratorSpec, ValueRange};
use pwt_core::Instance;
use serde::Deserialize;

use crate::error::CliError;
use crate::record::Algo;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub algorithms: Vec<String>,
    #[serde(default)]
    pub instances: Vec<PathBuf>,
    #[serde(default)]
    pub generate: Vec<GeneratedEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratedEntry {
    pub family: String,
    pub m: usize,
    pub capacity_class: u32,
    pub seed: u64,
    pub range: Option<String>,
    pub assignment: Option<String>,
    pub nodes: Option<usize>,
    pub v_min: Option<f64>,
    pub v_max: Option<f64>,
    pub rent: Option<f64>,
}

pub fn parse_range(s: &str) -> Result<ValueRange, String> {
    match s {
        "small" => Ok(ValueRange::SMALL),
        "large" => Ok(ValueRange::LARGE),
        other => Err(format!("range must be `small` or `large`, got `{other}`")),
    }
}

impl GeneratedEntry {
    pub fn spec(&self) -> Result<GeneratorSpec, String> {
        let base = GeneratorSpec::new(self.family.parse()?, self.m, self.capacity_class, self.seed);
        Ok(GeneratorSpec {
            range: self
                .range
                .as_deref()
                .map(parse_range)
                .transpose()?
                .unwrap_or(base.range),
            assignment: match &self.assignment {
                Some(a) => a.parse()?,
                None => base.assignment,
            },
            nodes: self.nodes.unwrap_or(base.nodes),
            v_min: self.v_min.unwrap_or(base.v_min),
            v_max: self.v_max.unwrap_or(base.v_max),
            rent: self.rent.or(base.rent),
            ..base
        })
    }
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("manifest: {e}")))
    }

    pub fn load(path: &Path) -> Result<(Self, PathBuf), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((Manifest::parse(&text)?, base))
    }

    /// The algorithm grid, `dp` alone when none is listed.
    pub fn algorithms(&self) -> Result<Vec<Algo>, CliError> {
        if self.algorithms.is_empty() {
            return Ok(vec![Algo::Dp]);
        }
        self.algorithms
            .iter()
            .map(|a| {
                a.parse()
                    .map_err(|e: CliError| CliError::Input(format!("manifest: {e}")))
            })
            .collect()
    }

    /// File instances in listed order, then generated ones.
    pub fn instances(&self, base: &Path) -> Result<Vec<Instance>, CliError> {
        let mut out = Vec::with_capacity(self.instances.len() + self.generate.len());
        for rel in &self.instances {
            let path = base.join(rel);
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            let instance = parse_instance(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            out.push(instance);
        }
        for (k, entry) in self.generate.iter().enumerate() {
            let spec = entry
                .spec()
                .map_err(|e| CliError::Input(format!("manifest generate #{}: {e}", k + 1)))?;
            out.push(generate(&spec)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pwt_core::io::{Assignment, Family};

    #[test]
    fn empty_manifest() {
        let manifest = Manifest::parse("").unwrap();
        assert_eq!(manifest.algorithms().unwrap(), vec![Algo::Dp]);
        assert!(manifest.instances(Path::new(".")).unwrap().is_empty());
    }

    #[test]
    fn generated_entry_defaults() {
        let manifest = Manifest::parse(
            "algorithms = [\"fptas:0.5\", \"brute\"]\n\
             [[generate]]\nfamily = \"m-s-corr\"\nm = 5\ncapacity_class = 3\nseed = 9\n\
             range = \"large\"\nassignment = \"sorted:2\"\n",
        )
        .unwrap();
        assert_eq!(
            manifest.algorithms().unwrap(),
            vec![Algo::Fptas(0.5), Algo::Brute]
        );
        let spec = manifest.generate[0].spec().unwrap();
        assert_eq!(spec.family, Family::MultipleStronglyCorrelated);
        assert_eq!(spec.range, ValueRange::LARGE);
        assert_eq!(spec.assignment, Assignment::ProfitSorted { per_city: 2 });
        assert_eq!(spec.nodes, 101);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Manifest::parse("algorithm = [\"dp\"]").is_err());
        let bad = Manifest::parse("algorithms = [\"greedy\"]").unwrap();
        assert!(bad.algorithms().is_err());
    }
}
