//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use univ_parity::attractor::attract;
use univ_parity::decomposition::{
    decomposition_tree, dominion_from_decomposition, enumerate_decompositions, validate,
};
use univ_parity::game::{
    verify_dominion_strategy, ParityGame, Player, Strategy, Subgame, VertexSet,
};
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::solvers::{
    brute_force_oracle, entry_degree, mcnaughton_zielonka, mcnaughton_zielonka_enhanced,
    mcnaughton_zielonka_with, separation_probe, tree_heights, universal_solve,
    universal_solve_with, PruningRule, SolveOptions, SolveReport,
};
use univ_parity::symbolic::{
    per_call_op_budget, per_frame_budget, succinct_budget, sym_universal_solve, Layout,
    SuccinctPartitionStack, SymbolicStore, PER_FRAME_OFFSET, SUCCINCT_OFFSET,
};
use univ_parity::trees::{
    count_small_trees, enumerate_small_trees, OrderedTree, TreeCursor, TreeFamily,
};

type Outcome = Result<String, String>;

fn random_game(rng: &mut ChaCha8Rng, max_n: usize, max_d: u32) -> ParityGame {
    let n = rng.random_range(1..=max_n);
    let d = rng.random_range(0..=max_d);
    let seed = rng.random();
    generate(&GeneratorSpec::random(n, d, (1, 3), seed)).expect("valid spec")
}

fn random_tree(rng: &mut ChaCha8Rng, height: usize, width: usize) -> OrderedTree {
    if height == 0 {
        return OrderedTree::leaf();
    }
    let k = rng.random_range(0..=width);
    OrderedTree::node(
        (0..k)
            .map(|_| random_tree(rng, height - 1, width))
            .collect(),
    )
}

fn random_subset(rng: &mut ChaCha8Rng, of: &VertexSet) -> VertexSet {
    VertexSet::from_vertices(of.universe(), of.iter().filter(|_| rng.random_bool(0.4)))
}

fn cursor(family: TreeFamily) -> TreeCursor {
    family.cursor().expect("valid family")
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn same_winner(got: &SolveReport, expected: &SolveReport, what: &str) -> Result<(), String> {
    ensure(
        got.w_even == expected.w_even && got.w_odd == expected.w_odd,
        || {
            format!(
                "{what}: w_even {:?}, expected {:?}",
                got.w_even, expected.w_even
            )
        },
    )
}

/// Complement of `player`'s attractor to a random set: a trap for `player`.
fn random_trap(rng: &mut ChaCha8Rng, sub: &Subgame<'_>, player: Player) -> VertexSet {
    let seed = random_subset(rng, sub.vertices());
    let attractor = attract(sub, &seed, player).expect("subset").attractor;
    sub.vertices().difference(&attractor)
}

fn oracle_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut runs = 0usize;
    for i in 0..1000 {
        let g = random_game(rng, 8, 4);
        let expected = brute_force_oracle(&g).map_err(|e| e.to_string())?;
        let n = g.vertex_count();
        let mut check = |r: SolveReport, what: String| -> Result<(), String> {
            runs += 1;
            ensure(r.is_partition_of(&g), || {
                format!("game {i} {what}: not a partition")
            })?;
            same_winner(&r, &expected, &format!("game {i} {what}"))
        };
        for player in [Player::Even, Player::Odd] {
            check(mcnaughton_zielonka(&g, player), format!("mz {player}"))?;
            check(
                mcnaughton_zielonka_enhanced(&g, player),
                format!("mz-enhanced {player}"),
            )?;
            let (he, ho) = tree_heights(&g, player);
            let families = [
                (
                    "C",
                    TreeFamily::Complete { n, h: he },
                    TreeFamily::Complete { n, h: ho },
                ),
                (
                    "P",
                    TreeFamily::Parys { n, h: he },
                    TreeFamily::Parys { n, h: ho },
                ),
                (
                    "S",
                    TreeFamily::Succinct { n, h: he },
                    TreeFamily::Succinct { n, h: ho },
                ),
            ];
            for (name, te, to) in families {
                let (te, to) = (cursor(te), cursor(to));
                for rule in [PruningRule::None, PruningRule::EmptySet] {
                    let r =
                        universal_solve(&g, player, &te, &to, rule).map_err(|e| e.to_string())?;
                    check(r, format!("universal {name} {rule:?} {player}"))?;
                }
                if name == "S" {
                    for layout in [Layout::PerFrame, Layout::Succinct] {
                        let r =
                            sym_universal_solve(&g, player, &te, &to, PruningRule::None, layout)
                                .map_err(|e| e.to_string())?;
                        check(r, format!("symbolic {layout:?} {player}"))?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "1000 games, {runs} solver runs agree with the oracle"
    ))
}

fn decomposition_validity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    for i in 0..1000 {
        let g = random_game(rng, 8, 4);
        let n = g.vertex_count() as u128;
        let full = g.full_subgame();
        for view in [Player::Even, Player::Odd] {
            let r = mcnaughton_zielonka_enhanced(&g, view);
            for player in [Player::Even, Player::Odd] {
                let dec = r.decomposition(player).ok_or("missing decomposition")?;
                let region = r.winning(player);
                let sub = full.restrict(region).map_err(|e| e.to_string())?;
                validate(&sub, dec).map_err(|e| format!("game {i}: {e}"))?;
                let sigma =
                    dominion_from_decomposition(&full, region, dec).map_err(|e| e.to_string())?;
                let wins =
                    verify_dominion_strategy(&full, region, &sigma).map_err(|e| e.to_string())?;
                ensure(wins, || format!("game {i}: {player} strategy loses"))?;
                ensure(dec.degree >= i64::from(g.max_priority()), || {
                    format!("game {i}: degree {} below the top priority", dec.degree)
                })?;
                let h = (dec.degree as usize).div_ceil(2);
                let tree = decomposition_tree(dec);
                ensure(tree.is_small(n, h), || {
                    format!("game {i}: tree {tree:?} is not ({n},{h})-small")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} decompositions valid, winning and small"))
}

/// Embedding by trying every increasing choice of children.
fn embeds_by_search(big: &OrderedTree, small: &OrderedTree) -> bool {
    fn go(big: &[OrderedTree], small: &[OrderedTree]) -> bool {
        match small.split_first() {
            None => true,
            Some((first, rest)) => {
                (0..big.len()).any(|j| embeds_by_search(&big[j], first) && go(&big[j + 1..], rest))
            }
        }
    }
    go(big.children(), small.children())
}

fn universality(_: &mut ChaCha8Rng) -> Outcome {
    let mut pairs = 0u64;
    for n in 1..=5usize {
        for h in 0..=3usize {
            let small = enumerate_small_trees(n, h);
            ensure(small.len() as u128 == count_small_trees(n, h), || {
                format!(
                    "({n},{h}): enumerated {} trees, counted {}",
                    small.len(),
                    count_small_trees(n, h)
                )
            })?;
            for family in [
                TreeFamily::Complete { n, h },
                TreeFamily::Parys { n, h },
                TreeFamily::Succinct { n, h },
            ] {
                let big = family.materialize().map_err(|e| e.to_string())?;
                for t in &small {
                    ensure(big.embeds(t) && embeds_by_search(&big, t), || {
                        format!("{family:?} does not embed {t:?}")
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} (family, small tree) pairs embed"))
}

fn recursion_tree_law(rng: &mut ChaCha8Rng) -> Outcome {
    for i in 0..300 {
        let g = random_game(rng, 6, 5);
        let he = rng.random_range(0..=3);
        let te = random_tree(rng, he, 3);
        let ho = rng.random_range(0..=3);
        let to = random_tree(rng, ho, 3);
        let (ce, co) = (
            cursor(TreeFamily::explicit(te.clone())),
            cursor(TreeFamily::explicit(to.clone())),
        );
        for (player, expected) in [
            (Player::Even, to.interleave(&te)),
            (Player::Odd, te.interleave(&to)),
        ] {
            let r = universal_solve(&g, player, &ce, &co, PruningRule::None)
                .map_err(|e| e.to_string())?;
            let got = r.stats.recursion_tree.ok_or("no recursion tree")?;
            ensure(got == expected, || {
                format!("pair {i} {player}: {got:?} != {expected:?}")
            })?;
            ensure(
                u128::from(r.stats.recursive_calls) == expected.node_count(),
                || format!("pair {i}: call count"),
            )?;
        }
        let (a, b) = (to.interleave(&te), te.interleave(&to));
        for (x, y, z) in [(&to, &te, &a), (&te, &to, &b)] {
            ensure(z.height() <= x.height() + y.height(), || {
                format!("pair {i}: height bound")
            })?;
            ensure(z.leaves() <= x.leaves() * y.leaves(), || {
                format!("pair {i}: leaf bound")
            })?;
        }
    }
    Ok("300 tree pairs, both entry players".into())
}

fn zielonka_coincidence(rng: &mut ChaCha8Rng) -> Outcome {
    let traced = |rule| SolveOptions {
        rule,
        record_tree: false,
        record_trace: true,
    };
    let mut iterations = 0;
    for i in 0..500 {
        let g = random_game(rng, 8, 4);
        for player in [Player::Even, Player::Odd] {
            let n = g.vertex_count().max(2);
            let (he, ho) = tree_heights(&g, player);
            let te = cursor(TreeFamily::Complete { n, h: he });
            let to = cursor(TreeFamily::Complete { n, h: ho });
            let mz = mcnaughton_zielonka_with(&g, player, &traced(PruningRule::None));
            let univ = universal_solve_with(&g, player, &te, &to, &traced(PruningRule::EmptySet))
                .map_err(|e| e.to_string())?;
            ensure(univ.trace == mz.trace, || {
                format!("game {i} {player}: traces differ")
            })?;
            iterations += mz.trace.as_ref().map_or(0, Vec::len);
        }
    }
    Ok(format!("500 games, {iterations} loop iterations replayed"))
}

fn decomposition_trees_suffice(rng: &mut ChaCha8Rng) -> Outcome {
    for i in 0..500 {
        let g = random_game(rng, 8, 4);
        let expected = brute_force_oracle(&g).map_err(|e| e.to_string())?;
        for player in [Player::Even, Player::Odd] {
            let r = mcnaughton_zielonka_enhanced(&g, player);
            let te = cursor(TreeFamily::explicit(decomposition_tree(
                r.even_decomposition.as_ref().unwrap(),
            )));
            let to = cursor(TreeFamily::explicit(decomposition_tree(
                r.odd_decomposition.as_ref().unwrap(),
            )));
            let u = universal_solve(&g, player, &te, &to, PruningRule::None)
                .map_err(|e| e.to_string())?;
            same_winner(&u, &expected, &format!("game {i} {player}"))?;
        }
    }
    Ok("500 games, both entry players".into())
}

/// Trees of every decomposition of `G ∩ D` for each trap `D` for the
/// opponent, i.e. the dominia of `player` with their decomposition trees.
fn dominia(
    game: &ParityGame,
    player: Player,
    degree: i64,
) -> Result<Vec<(VertexSet, Vec<OrderedTree>)>, String> {
    let full = game.full_subgame();
    let n = game.vertex_count();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let d = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1));
        if !full
            .is_trap(&d, player.opponent())
            .map_err(|e| e.to_string())?
        {
            continue;
        }
        let sub = full.restrict(&d).map_err(|e| e.to_string())?;
        let trees: Vec<OrderedTree> = enumerate_decompositions(&sub, player, degree)
            .map_err(|e| e.to_string())?
            .into_keys()
            .collect();
        if !trees.is_empty() {
            out.push((d, trees));
        }
    }
    Ok(out)
}

fn embedded<'a>(
    dominia: &'a [(VertexSet, Vec<OrderedTree>)],
    tree: &'a OrderedTree,
) -> impl Iterator<Item = &'a VertexSet> + 'a {
    dominia
        .iter()
        .filter(move |(_, trees)| trees.iter().any(|t| tree.embeds(t)))
        .map(|(d, _)| d)
}

fn embeddable_and_separation(rng: &mut ChaCha8Rng) -> Outcome {
    // every trap of a decomposed region has a decomposition the original
    // tree embeds
    let mut pairs = 0;
    while pairs < 400 {
        let g = random_game(rng, 6, 3);
        let full = g.full_subgame();
        let r = mcnaughton_zielonka_enhanced(&g, Player::Even);
        for player in [Player::Even, Player::Odd] {
            let region = full
                .restrict(r.winning(player))
                .map_err(|e| e.to_string())?;
            let dec = r.decomposition(player).unwrap();
            let tree = decomposition_tree(dec);
            for _ in 0..3 {
                let t = random_trap(rng, &region, player);
                let inner = region.restrict(&t).map_err(|e| e.to_string())?;
                let found = enumerate_decompositions(&inner, player, dec.degree)
                    .map_err(|e| e.to_string())?;
                ensure(found.keys().any(|k| tree.embeds(k)), || {
                    format!(
                        "{player} trap {t:?} of {:?}: no embeddable decomposition",
                        r.winning(player)
                    )
                })?;
                pairs += 1;
            }
        }
    }

    // each prefix of the top-level loop separates the dominia the trees embed
    let mut games = 0;
    let mut probes = 0;
    let mut nontrivial = 0;
    while games < 200 {
        let g = random_game(rng, 6, 3);
        games += 1;
        for player in [Player::Even, Player::Odd] {
            let d = entry_degree(&g, player);
            let (he, ho) = tree_heights(&g, player);
            let te = random_tree(rng, he, 3);
            let to = random_tree(rng, ho, 3);
            let (mine, theirs, own_tree, their_tree) = match player {
                Player::Even => (Player::Even, Player::Odd, &te, &to),
                Player::Odd => (Player::Odd, Player::Even, &to, &te),
            };
            let own = dominia(&g, mine, d)?;
            let other = dominia(&g, theirs, d + 1)?;
            let probe = separation_probe(
                &g,
                player,
                &cursor(TreeFamily::explicit(te.clone())),
                &cursor(TreeFamily::explicit(to.clone())),
            )
            .map_err(|e| e.to_string())?;
            for (i, kept) in &probe {
                probes += 1;
                for dom in embedded(&own, own_tree) {
                    ensure(dom.is_subset(kept), || {
                        format!(
                            "{player} dominion {dom:?} not inside G_{} = {kept:?}",
                            i + 1
                        )
                    })?;
                }
                let prefix = their_tree.prefix(*i);
                for dom in embedded(&other, &prefix) {
                    if !dom.is_empty() {
                        nontrivial += 1;
                    }
                    ensure(dom.is_disjoint(kept), || {
                        format!("{theirs} dominion {dom:?} meets G_{} = {kept:?}", i + 1)
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{pairs} (game, trap) pairs; {games} games, {probes} loop prefixes, {nontrivial} non-empty separated dominia"
    ))
}

fn symbolic_budgets(rng: &mut ChaCha8Rng) -> Outcome {
    let mut worst = BTreeMap::new();
    for d in [4u32, 8, 16] {
        for i in 0..60 {
            let n = rng.random_range(2..=8);
            let g = generate(&GeneratorSpec::random(n, d, (1, 3), rng.random()))
                .map_err(|e| e.to_string())?;
            let (he, ho) = tree_heights(&g, Player::Even);
            let total = he + ho;
            let te = cursor(TreeFamily::Succinct { n, h: he });
            let to = cursor(TreeFamily::Succinct { n, h: ho });
            // the unpruned recursion tree at d = 16 has over a million leaves
            let rules: &[PruningRule] = if d < 16 || i < 12 {
                &[PruningRule::None, PruningRule::EmptySet]
            } else {
                &[PruningRule::EmptySet]
            };
            for &rule in rules {
                let mut peaks = [0usize; 2];
                for (k, layout) in [Layout::PerFrame, Layout::Succinct].into_iter().enumerate() {
                    let r = sym_universal_solve(&g, Player::Even, &te, &to, rule, layout)
                        .map_err(|e| e.to_string())?;
                    let c = r.symbolic.ok_or("no counters")?;
                    let budget = match layout {
                        Layout::PerFrame => per_frame_budget(total),
                        Layout::Succinct => succinct_budget(total),
                    };
                    ensure(c.peak_live_variables <= budget, || {
                        format!(
                            "d={d} game {i} {layout:?}: {} live variables > {budget}",
                            c.peak_live_variables
                        )
                    })?;
                    let outside = c.set_ops - c.attractor_set_ops;
                    let per_call = per_call_op_budget(layout, total);
                    ensure(outside <= per_call * r.stats.recursive_calls, || {
                        format!(
                            "d={d} game {i} {layout:?}: {outside} set ops over {} calls",
                            r.stats.recursive_calls
                        )
                    })?;
                    peaks[k] = c.peak_live_variables;
                    let entry = worst.entry((d, k)).or_insert(0);
                    *entry = (*entry).max(c.peak_live_variables);
                }
                ensure(peaks[1] <= peaks[0], || {
                    format!("d={d} game {i}: succinct {peaks:?}")
                })?;
            }
        }
    }

    // the bit-sliced partition against an explicit stack of parts
    let n = 12;
    let g = generate(&GeneratorSpec::random(n, 2, (1, 2), 0)).map_err(|e| e.to_string())?;
    let mut events = 0;
    for slots in [2usize, 4, 8, 16, 32] {
        let mut store = SymbolicStore::new(&g);
        let stack = SuccinctPartitionStack::new(&mut store, slots, slots - 1);
        let mut shadow = vec![VertexSet::empty(n); slots];
        shadow[slots - 1] = g.vertices();
        let mut top = slots - 1;
        for _ in 0..3000 {
            let i = if rng.random_bool(0.3) {
                rng.random_range(top..slots)
            } else {
                top
            };
            let chosen = random_subset(rng, &shadow[i]);
            let b = store.constant(chosen.clone());
            if i == top && top >= 1 && rng.random_bool(0.5) {
                stack.update_push(&mut store, i, &b);
                shadow[i - 1] = shadow[i].difference(&chosen);
                shadow[i] = chosen;
                top -= 1;
            } else if i + 1 < slots {
                stack.update_replace(&mut store, i, &b);
                shadow[i + 1].union_with(&chosen);
                shadow[i].difference_with(&chosen);
                if i == top && shadow[i].is_empty() {
                    top += 1;
                }
            } else {
                store.free(b);
                continue;
            }
            store.free(b);
            events += 1;
            let parts = stack.parts(&store);
            ensure(parts == shadow, || {
                format!("{slots} parts diverge after {events} updates")
            })?;
            for (j, part) in shadow.iter().enumerate() {
                let read = stack.read(&mut store, j);
                ensure(store.get(&read) == part, || {
                    format!("part {j} reads back wrong")
                })?;
                store.free(read);
            }
        }
    }
    ensure(events >= 10_000, || format!("only {events} update events"))?;

    let peaks: Vec<String> = worst
        .iter()
        .map(|((d, k), p)| {
            format!(
                "d={d} {}={p}",
                if *k == 0 { "per-frame" } else { "succinct" }
            )
        })
        .collect();
    Ok(format!(
        "peaks within d+{PER_FRAME_OFFSET} / ceil(lg d)+{SUCCINCT_OFFSET} ({}); {events} partition updates match",
        peaks.join(", ")
    ))
}

fn trap_propositions(rng: &mut ChaCha8Rng) -> Outcome {
    let trials = 10_000;
    for i in 0..trials {
        let g = random_game(rng, 10, 5);
        let full = g.full_subgame();
        let all = g.vertices();

        // an opponent attractor never enters a trap it does not start in
        let t = random_trap(rng, &full, Player::Odd);
        let b = random_subset(rng, &all.difference(&t));
        let a = attract(&full, &b, Player::Odd).unwrap().attractor;
        ensure(t.is_disjoint(&a), || {
            format!("trial {i}: attractor enters trap")
        })?;

        // traps for Odd stay traps inside traps for Even
        let r = random_trap(rng, &full, Player::Even);
        let t = random_trap(rng, &full, Player::Odd);
        let inside = full.restrict(&r).unwrap();
        let meet = t.intersection(&r);
        ensure(inside.is_trap(&meet, Player::Odd).unwrap(), || {
            format!("trial {i}: T ∩ R not a trap")
        })?;

        // ... and so do Even dominia
        let w = mcnaughton_zielonka_enhanced(&g, Player::Even);
        let sigma =
            dominion_from_decomposition(&full, &w.w_even, w.even_decomposition.as_ref().unwrap())
                .map_err(|e| e.to_string())?;
        let dom = w.w_even.intersection(&r);
        let restricted = Strategy::from_edges(
            Player::Even,
            sigma
                .edges
                .iter()
                .copied()
                .filter(|&(x, y)| dom.contains(x) && dom.contains(y)),
        );
        ensure(
            verify_dominion_strategy(&inside, &dom, &restricted).unwrap_or(false),
            || format!("trial {i}: W ∩ R is not an Even dominion of G ∩ R"),
        )?;

        // the part of a trap outside a restricted attractor is a trap outside
        // the full attractor
        let t = random_trap(rng, &full, Player::Even);
        let b = random_subset(rng, &all);
        let a = attract(&full, &b, Player::Even).unwrap().attractor;
        let in_t = full.restrict(&t).unwrap();
        let a2 = attract(&in_t, &b.intersection(&t), Player::Even)
            .unwrap()
            .attractor;
        let rest = full.restrict(&all.difference(&a)).unwrap();
        let kept = t.difference(&a2);
        ensure(rest.is_trap(&kept, Player::Even).unwrap_or(false), || {
            format!("trial {i}: T ∖ A' is not a trap for Even in G ∖ A")
        })?;
    }
    Ok(format!(
        "{trials} trials of each of the three propositions, no counterexample"
    ))
}

struct Criterion {
    number: u8,
    name: &'static str,
    limit: Duration,
    run: fn(&mut ChaCha8Rng) -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            number: 1,
            name: "oracle equivalence",
            limit: Duration::from_secs(60),
            run: oracle_suite,
        },
        Criterion {
            number: 2,
            name: "decomposition validity",
            limit: Duration::from_secs(30),
            run: decomposition_validity,
        },
        Criterion {
            number: 3,
            name: "universality",
            limit: Duration::from_secs(30),
            run: universality,
        },
        Criterion {
            number: 4,
            name: "recursion tree law",
            limit: Duration::from_secs(30),
            run: recursion_tree_law,
        },
        Criterion {
            number: 5,
            name: "Zielonka coincidence",
            limit: Duration::from_secs(30),
            run: zielonka_coincidence,
        },
        Criterion {
            number: 6,
            name: "decomposition trees suffice",
            limit: Duration::from_secs(30),
            run: decomposition_trees_suffice,
        },
        Criterion {
            number: 7,
            name: "embeddable decompositions and separation",
            limit: Duration::from_secs(300),
            run: embeddable_and_separation,
        },
        Criterion {
            number: 8,
            name: "symbolic budgets",
            limit: Duration::from_secs(60),
            run: symbolic_budgets,
        },
        Criterion {
            number: 9,
            name: "trap propositions",
            limit: Duration::from_secs(60),
            run: trap_propositions,
        },
    ];
    let mut failed = 0;
    for c in criteria {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(c.number));
        let start = Instant::now();
        let outcome = (c.run)(&mut rng);
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= c.limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:.1?}, limit {:?}", c.limit))
            }
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS {} ({:.2?}): {detail}",
                c.number, c.name, elapsed
            ),
            Err(reason) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {} ({:.2?}): {reason}",
                    c.number, c.name, elapsed
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
