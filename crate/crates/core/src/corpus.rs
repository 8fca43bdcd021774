//! Built-in grids, each certified by checks in the test suite, and the loader
//! for user-supplied grid pairs.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::grid::GridDiagram;

/// Directory holding a user-transcribed Legendrian pair as `l1.grid` and
/// `l2.grid`.
pub const USER_PAIR_ENV: &str = "GRIDHFK_USER_PAIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub grid: GridDiagram,
    pub provenance: String,
}

impl CorpusEntry {
    fn new(name: &str, grid: GridDiagram, provenance: &str) -> Self {
        assert!(!provenance.is_empty());
        CorpusEntry {
            name: name.to_string(),
            grid,
            provenance: provenance.to_string(),
        }
    }
}

/// `O` on the diagonal and the X of column `i` in row `i + k` (mod n).
pub fn shift_grid(n: usize, k: usize) -> Result<GridDiagram> {
    let o: Vec<usize> = (0..n).collect();
    let x: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
    GridDiagram::new(o, x)
}

pub fn unknot() -> GridDiagram {
    GridDiagram::from_sigma(&[1, 2], &[2, 1]).expect("valid")
}

pub fn trefoil() -> GridDiagram {
    shift_grid(5, 2).expect("valid")
}

pub fn figure_eight() -> GridDiagram {
    GridDiagram::from_sigma(&[1, 6, 4, 5, 2, 3], &[5, 2, 1, 3, 4, 6]).expect("valid")
}

pub fn builtin() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new("unknot", unknot(), "2x2 grid, O on the diagonal"),
        CorpusEntry::new(
            "trefoil",
            trefoil(),
            "shift grid n=5, k=2; Alexander polynomial T^-1 + 1 + T mod 2, hat rank 3",
        ),
        CorpusEntry::new(
            "shift-7-2",
            shift_grid(7, 2).expect("valid"),
            "shift grid n=7, k=2",
        ),
        CorpusEntry::new(
            "figure-eight",
            figure_eight(),
            "found by random search over 6x6 grids; Alexander polynomial T^-1 + 1 + T mod 2, hat rank 5",
        ),
    ]
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    builtin().into_iter().find(|e| e.name == name)
}

pub fn load_grid(path: &Path) -> Result<GridDiagram> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    GridDiagram::parse(&text)
}

/// Loads `l1.grid` and `l2.grid` from `dir`.
pub fn load_user_pair(dir: &Path) -> Result<[CorpusEntry; 2]> {
    let load = |name: &str| -> Result<CorpusEntry> {
        let path = dir.join(format!("{name}.grid"));
        Ok(CorpusEntry::new(
            name,
            load_grid(&path)?,
            &format!("user-transcribed, {}", path.display()),
        ))
    };
    Ok([load("l1")?, load("l2")?])
}

/// The user pair named by [`USER_PAIR_ENV`], if the variable is set.
pub fn user_pair_from_env() -> Option<Result<[CorpusEntry; 2]>> {
    let dir = std::env::var_os(USER_PAIR_ENV)?;
    Some(load_user_pair(&PathBuf::from(dir)))
}
