//! Deterministic game generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::IoError;
use crate::game::{ParityGame, Player, Priority};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorSpec {
    /// Uniform priorities in `0..=d`, uniform owners, out-degrees uniform in
    /// `min_out..=max_out` (capped at `n`) with distinct successors.
    Random {
        n: usize,
        d: Priority,
        min_out: usize,
        max_out: usize,
        seed: u64,
    },
    /// A directed ring `v -> v+1` with priorities `v mod (d+1)` and
    /// alternating owners.
    Cycle { n: usize, d: Priority },
    /// Two rails `a_i`, `b_i`: each vertex moves along its rail or across the
    /// rung, rails wrap around. `a_i` is Even with priority 2, `b_i` is Odd
    /// with priority 1.
    Ladder { levels: usize },
}

impl GeneratorSpec {
    pub fn random(n: usize, d: Priority, out_degree: (usize, usize), seed: u64) -> Self {
        GeneratorSpec::Random {
            n,
            d,
            min_out: out_degree.0,
            max_out: out_degree.1,
            seed,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<ParityGame, IoError> {
    match *spec {
        GeneratorSpec::Random {
            n,
            d,
            min_out,
            max_out,
            seed,
        } => {
            if n == 0 {
                return Err(IoError::InvalidSpec("random games need n >= 1".into()));
            }
            if min_out == 0 || min_out > max_out {
                return Err(IoError::InvalidSpec(format!(
                    "bad out-degree range {min_out}..={max_out}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut owners = Vec::with_capacity(n);
            let mut priorities = Vec::with_capacity(n);
            let mut successors = Vec::with_capacity(n);
            for _ in 0..n {
                owners.push(if rng.random_bool(0.5) {
                    Player::Even
                } else {
                    Player::Odd
                });
                priorities.push(rng.random_range(0..=d));
                let k = rng.random_range(min_out..=max_out).min(n);
                let mut succ = sample(&mut rng, n, k).into_vec();
                succ.sort_unstable();
                successors.push(succ);
            }
            Ok(ParityGame::new(owners, priorities, successors)?)
        }
        GeneratorSpec::Cycle { n, d } => {
            if n == 0 {
                return Err(IoError::InvalidSpec("cycles need n >= 1".into()));
            }
            let owners = (0..n)
                .map(|v| {
                    if v % 2 == 0 {
                        Player::Even
                    } else {
                        Player::Odd
                    }
                })
                .collect();
            let priorities = (0..n).map(|v| (v % (d as usize + 1)) as Priority).collect();
            let successors = (0..n).map(|v| vec![(v + 1) % n]).collect();
            Ok(ParityGame::new(owners, priorities, successors)?)
        }
        GeneratorSpec::Ladder { levels } => {
            if levels == 0 {
                return Err(IoError::InvalidSpec(
                    "ladders need at least one level".into(),
                ));
            }
            let n = 2 * levels;
            let mut owners = Vec::with_capacity(n);
            let mut priorities = Vec::with_capacity(n);
            let mut successors = Vec::with_capacity(n);
            for v in 0..n {
                let level = v / 2;
                let next = (level + 1) % levels;
                let rail = v % 2;
                owners.push(if rail == 0 { Player::Even } else { Player::Odd });
                priorities.push(if rail == 0 { 2 } else { 1 });
                let mut succ = vec![2 * next + rail, 2 * level + 1 - rail];
                succ.sort_unstable();
                succ.dedup();
                successors.push(succ);
            }
            Ok(ParityGame::new(owners, priorities, successors)?)
        }
    }
}
