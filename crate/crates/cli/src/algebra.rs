//! Algebra selectors: built-in fixtures by name, or a structure-constant
//! table loaded from a JSON file.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use hlcy_core::liealg::{fixtures, Combo, LieTable, MultTable};
use hlcy_core::rational;
use hlcy_core::{AssocPresentation, LiePresentation};

/// A resolved algebra: Lie, associative, or both views of a fixture.
#[derive(Clone)]
pub enum Algebra {
    Lie(LiePresentation),
    Assoc(AssocPresentation),
}

impl Algebra {
    pub fn lie(&self) -> Option<LiePresentation> {
        match self {
            Algebra::Lie(l) => Some(l.clone()),
            Algebra::Assoc(_) => None,
        }
    }

    pub fn assoc(&self) -> Option<AssocPresentation> {
        match self {
            Algebra::Assoc(a) => Some(a.clone()),
            Algebra::Lie(_) => None,
        }
    }

    /// The Lie structure used by the Leibniz/exterior complexes: either the
    /// Lie presentation itself or the commutator of the associative one.
    pub fn lie_like(&self) -> hlcy_core::LieLike {
        match self {
            Algebra::Lie(l) => hlcy_core::LieLike::Lie(l.clone()),
            Algebra::Assoc(a) => hlcy_core::LieLike::Commutator(a.clone()),
        }
    }
}

/// One sparse table entry: (i, j, [(k, "p/q"), …]).
type FileEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Deserialize)]
struct TableFile {
    basis: Vec<String>,
    #[serde(default)]
    brackets: Option<Vec<FileEntry>>,
    #[serde(default)]
    products: Option<Vec<FileEntry>>,
    #[serde(default)]
    unit: Option<usize>,
}

fn dense_table(n: usize, entries: &[FileEntry]) -> Result<Vec<Vec<Combo>>, String> {
    let mut out = vec![vec![Vec::new(); n]; n];
    for (i, j, combo) in entries {
        if *i >= n || *j >= n {
            return Err(format!(
                "table entry ({i}, {j}) out of range for a basis of {n}"
            ));
        }
        let mut parsed: Combo = Vec::with_capacity(combo.len());
        for (k, c) in combo {
            if *k >= n {
                return Err(format!(
                    "coefficient index {k} out of range in entry ({i}, {j})"
                ));
            }
            let r = rational::parse(c)
                .ok_or_else(|| format!("bad rational `{c}` in entry ({i}, {j})"))?;
            parsed.push((*k as i32, r));
        }
        out[*i][*j] = parsed;
    }
    Ok(out)
}

fn load_table_file(path: &Path) -> Result<Algebra, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: TableFile =
        serde_json::from_str(&text).map_err(|e| format!("bad JSON in {}: {e}", path.display()))?;
    let n = file.basis.len();
    match (&file.brackets, &file.products) {
        (Some(brackets), None) => {
            let table = dense_table(n, brackets)?;
            let lie = LieTable::new(file.basis, table).map_err(|e| e.to_string())?;
            Ok(Algebra::Lie(LiePresentation::Table(lie)))
        }
        (None, Some(products)) => {
            let unit = file.unit.ok_or("a `products` table needs a `unit` index")?;
            let table = dense_table(n, products)?;
            let alg = MultTable::new(file.basis, unit, table).map_err(|e| e.to_string())?;
            Ok(Algebra::Assoc(AssocPresentation::Table(alg)))
        }
        (Some(_), Some(_)) => {
            Err("a table file must have `brackets` or `products`, not both".into())
        }
        (None, None) => Err("a table file needs a `brackets` or `products` key".into()),
    }
}

/// Resolves a selector: a built-in name, or a path to a JSON table.
pub fn resolve(selector: &str) -> Result<Algebra, String> {
    if let Some(lie) = fixtures::lie_by_name(selector) {
        return Ok(Algebra::Lie(lie));
    }
    if let Some(alg) = fixtures::assoc_by_name(selector) {
        return Ok(Algebra::Assoc(alg));
    }
    let path = Path::new(selector);
    if path.exists() {
        return load_table_file(path);
    }
    Err(format!(
        "unknown algebra `{selector}` (expected witt, sl2, solvable2, abelian2, u-witt, dual-numbers, poly3, or a JSON table path)"
    ))
}
