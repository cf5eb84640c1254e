//! Solving a directory of games in parallel.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::pgsolver::parse_pgsolver;
use super::IoError;
use crate::game::ParityGame;
use crate::solvers::SolverConfig;

/// File extensions picked up from a suite directory.
pub const SUITE_EXTENSIONS: [&str; 3] = ["pg", "gm", "pgsolver"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub game: String,
    pub vertices: usize,
    pub w_even: usize,
    pub recursive_calls: u64,
    pub loop_iterations: u64,
    pub peak_live_variables: Option<usize>,
    pub wall_ms: f64,
}

impl BenchRecord {
    /// The record without its timing, for determinism checks.
    pub fn untimed(&self) -> BenchRecord {
        BenchRecord {
            wall_ms: 0.0,
            ..self.clone()
        }
    }
}

/// Suite files in `dir`, sorted by name.
pub fn suite_files(dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    files.retain(|p| {
        p.is_file()
            && p.extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| SUITE_EXTENSIONS.contains(&e))
    });
    files.sort();
    Ok(files)
}

/// Solves each game independently; records keep the input order.
pub fn bench_games(
    games: &[(String, ParityGame)],
    config: &SolverConfig,
) -> Result<Vec<BenchRecord>, IoError> {
    config.check()?;
    games
        .par_iter()
        .map(|(name, game)| {
            let start = Instant::now();
            let report = config.run(game)?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            Ok(BenchRecord {
                game: name.clone(),
                vertices: game.vertex_count(),
                w_even: report.w_even.len(),
                recursive_calls: report.stats.recursive_calls,
                loop_iterations: report.stats.loop_iterations,
                peak_live_variables: report.symbolic.map(|c| c.peak_live_variables),
                wall_ms,
            })
        })
        .collect()
}

pub fn bench_suite(dir: &Path, config: &SolverConfig) -> Result<Vec<BenchRecord>, IoError> {
    let games = suite_files(dir)?
        .into_iter()
        .map(|path| {
            let text = fs::read_to_string(&path)?;
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok((name, parse_pgsolver(&text)?))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    bench_games(&games, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate::{generate, GeneratorSpec};
    use crate::io::pgsolver::write_pgsolver;
    use crate::io::write_atomic;
    use crate::solvers::{PruningRule, TreeChoice};
    use crate::symbolic::Layout;

    #[test]
    fn suite_runs_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        for seed in 0..6 {
            let g = generate(&GeneratorSpec::random(8, 4, (1, 3), seed)).unwrap();
            write_atomic(
                &dir.path().join(format!("g{seed}.pg")),
                write_pgsolver(&g).as_bytes(),
            )
            .unwrap();
        }
        fs::write(dir.path().join("notes.txt"), "not a game").unwrap();
        let config = SolverConfig {
            symbolic: Some(Layout::Succinct),
            ..SolverConfig::universal(TreeChoice::Succinct, PruningRule::EmptySet)
        };
        let first = bench_suite(dir.path(), &config).unwrap();
        let second = bench_suite(dir.path(), &config).unwrap();
        assert_eq!(first.len(), 6);
        assert_eq!(first[0].game, "g0.pg");
        assert!(first.iter().all(|r| r.peak_live_variables.is_some()));
        let untimed = |rs: &[BenchRecord]| rs.iter().map(BenchRecord::untimed).collect::<Vec<_>>();
        assert_eq!(untimed(&first), untimed(&second));
    }

    #[test]
    fn malformed_games_fail_the_suite() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("bad.pg"), "parity 0;\n0 0 0;\n").unwrap();
        assert!(bench_suite(dir.path(), &SolverConfig::default()).is_err());
    }
}
