//! Write a small suite of generated games to disk and benchmark two solver
//! configurations on it.

use univ_parity::io::bench::bench_suite;
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::io::pgsolver::write_pgsolver;
use univ_parity::io::write_atomic;
use univ_parity::solvers::{PruningRule, SolverConfig, TreeChoice};
use univ_parity::symbolic::Layout;

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let specs = [
        ("random", GeneratorSpec::random(40, 8, (1, 4), 1)),
        ("cycle", GeneratorSpec::Cycle { n: 30, d: 6 }),
        ("ladder", GeneratorSpec::Ladder { levels: 10 }),
    ];
    for (name, spec) in &specs {
        let game = generate(spec).expect("valid spec");
        write_atomic(
            &dir.path().join(format!("{name}.pg")),
            write_pgsolver(&game).as_bytes(),
        )
        .expect("writable");
    }

    let symbolic = SolverConfig {
        symbolic: Some(Layout::Succinct),
        ..SolverConfig::universal(TreeChoice::Succinct, PruningRule::EmptySet)
    };
    for config in [SolverConfig::default(), symbolic] {
        println!("{config}");
        for r in bench_suite(dir.path(), &config).expect("suite runs") {
            println!(
                "  {:<10} n={:<3} w_even={:<3} calls={:<6} {:.2} ms",
                r.game, r.vertices, r.w_even, r.recursive_calls, r.wall_ms
            );
        }
    }
}
