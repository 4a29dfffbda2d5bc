//! JSON file formats: one structure per file, and fuzzy or crisp subsets in
//! separate files that name the structure they belong to.

use std::fs;
use std::path::Path;

use ghr_core::crisp::CrispSubset;
use ghr_core::fuzzy::FuzzySubset;
use ghr_core::{GammaHemiring, RawTables, UnitRational};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{path}: {source}")]
    Content { path: String, source: ghr_core::Error },
    #[error("{path}: refers to structure {found:?}, expected {expected:?}")]
    WrongStructure { path: String, expected: String, found: String },
    #[error("{path}: neither a fuzzy subset (\"grades\") nor a crisp subset (\"members\")")]
    UnknownKind { path: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub s_size: usize,
    pub g_size: usize,
    pub s_add: Vec<Vec<usize>>,
    pub g_add: Vec<Vec<usize>>,
    /// Indexed `[a][gamma][b]`.
    pub product: Vec<Vec<Vec<usize>>>,
}

impl From<StructureFile> for RawTables {
    fn from(f: StructureFile) -> Self {
        RawTables {
            name: f.name,
            s_size: f.s_size,
            g_size: f.g_size,
            s_add: f.s_add,
            g_add: f.g_add,
            product: f.product,
        }
    }
}

impl From<RawTables> for StructureFile {
    fn from(r: RawTables) -> Self {
        StructureFile {
            name: r.name,
            s_size: r.s_size,
            g_size: r.g_size,
            s_add: r.s_add,
            g_add: r.g_add,
            product: r.product,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyFile {
    pub hemiring: String,
    /// Exact fractions such as `"1"`, `"1/2"`, `"0"`, in carrier order.
    pub grades: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetFile {
    pub hemiring: String,
    pub members: Vec<usize>,
}

impl FuzzyFile {
    pub fn from_subset(hemiring: &str, mu: &FuzzySubset) -> Self {
        FuzzyFile { hemiring: hemiring.to_string(), grades: mu.grades().iter().map(ToString::to_string).collect() }
    }

    pub fn to_subset(&self) -> ghr_core::Result<FuzzySubset> {
        Ok(FuzzySubset::from_grades(
            self.grades.iter().map(|g| g.parse::<UnitRational>()).collect::<ghr_core::Result<_>>()?,
        ))
    }
}

impl SubsetFile {
    pub fn from_subset(hemiring: &str, a: &CrispSubset) -> Self {
        SubsetFile { hemiring: hemiring.to_string(), members: a.members().map(|e| e.0).collect() }
    }

    pub fn to_subset(&self, size: usize) -> ghr_core::Result<CrispSubset> {
        CrispSubset::from_members(size, self.members.iter().copied())
    }
}

/// A subset file of either kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubsetLike {
    Fuzzy(FuzzyFile),
    Crisp(SubsetFile),
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, FileError> {
    serde_json::from_str(text).map_err(|source| FileError::Json { path: path.display().to_string(), source })
}

pub fn read_structure_file(path: &Path) -> Result<StructureFile, FileError> {
    parse(path, &read(path)?)
}

/// Reads and builds a structure; `validate` off keeps only the shape checks.
pub fn load_structure(path: &Path, validate: bool) -> Result<GammaHemiring, FileError> {
    let raw: RawTables = read_structure_file(path)?.into();
    let built = if validate { GammaHemiring::new(raw) } else { GammaHemiring::new_unchecked(raw) };
    built.map_err(|source| FileError::Content { path: path.display().to_string(), source })
}

pub fn read_subset_like(path: &Path) -> Result<SubsetLike, FileError> {
    let text = read(path)?;
    let value: serde_json::Value = parse(path, &text)?;
    let kind = |k: &str| value.get(k).is_some();
    if kind("grades") {
        Ok(SubsetLike::Fuzzy(parse(path, &text)?))
    } else if kind("members") {
        Ok(SubsetLike::Crisp(parse(path, &text)?))
    } else {
        Err(FileError::UnknownKind { path: path.display().to_string() })
    }
}

/// A subset file for `h`, as a fuzzy subset (crisp files become characteristic functions).
pub fn load_fuzzy(path: &Path, h: &GammaHemiring) -> Result<FuzzySubset, FileError> {
    let content = |source| FileError::Content { path: path.display().to_string(), source };
    let (name, mu) = match read_subset_like(path)? {
        SubsetLike::Fuzzy(f) => (f.hemiring.clone(), f.to_subset().map_err(content)?),
        SubsetLike::Crisp(c) => {
            (c.hemiring.clone(), FuzzySubset::characteristic(&c.to_subset(h.s_size()).map_err(content)?))
        }
    };
    check_name(path, h, &name)?;
    mu.check_carrier(h).map_err(content)?;
    Ok(mu)
}

pub fn check_name(path: &Path, h: &GammaHemiring, found: &str) -> Result<(), FileError> {
    if found != h.name() {
        return Err(FileError::WrongStructure {
            path: path.display().to_string(),
            expected: h.name().to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file types always serialize")
}
