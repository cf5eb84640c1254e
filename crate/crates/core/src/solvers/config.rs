use std::fmt;
use std::sync::Arc;

use super::{
    mcnaughton_zielonka, mcnaughton_zielonka_enhanced, tree_heights, universal_solve, PruningRule,
    SolveError, SolveReport,
};
use crate::game::{ParityGame, Player};
use crate::symbolic::{sym_universal_solve, Layout};
use crate::trees::{OrderedTree, TreeCursor, TreeFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    Zielonka,
    ZielonkaEnhanced,
    Universal,
}

/// Tree family for the universal algorithm, sized per game: arity (or leaf
/// bound) `n = |V|` and heights from [`tree_heights`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeChoice {
    Complete,
    Parys,
    Succinct,
    /// The same fixed tree on both sides.
    Explicit(Arc<OrderedTree>),
}

/// A fully specified solver run from Even's point of view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub solver: SolverKind,
    pub tree: TreeChoice,
    pub rule: PruningRule,
    pub symbolic: Option<Layout>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            solver: SolverKind::Zielonka,
            tree: TreeChoice::Succinct,
            rule: PruningRule::None,
            symbolic: None,
        }
    }
}

impl SolverConfig {
    pub fn universal(tree: TreeChoice, rule: PruningRule) -> Self {
        SolverConfig {
            solver: SolverKind::Universal,
            tree,
            rule,
            symbolic: None,
        }
    }

    pub fn check(&self) -> Result<(), SolveError> {
        if self.solver != SolverKind::Universal {
            if self.symbolic.is_some() {
                return Err(SolveError::Config(
                    "symbolic execution needs the universal solver".into(),
                ));
            }
            if self.rule != PruningRule::None {
                return Err(SolveError::Config(
                    "pruning rules need the universal solver".into(),
                ));
            }
        }
        if self.rule == PruningRule::ParysBlocks && self.tree != TreeChoice::Parys {
            return Err(SolveError::Config(
                "the parys-blocks rule needs Parys trees".into(),
            ));
        }
        Ok(())
    }

    pub fn cursors(&self, game: &ParityGame) -> Result<(TreeCursor, TreeCursor), SolveError> {
        let n = game.vertex_count();
        let (he, ho) = tree_heights(game, Player::Even);
        let family = |h| match &self.tree {
            TreeChoice::Complete => TreeFamily::Complete { n: n.max(1), h },
            TreeChoice::Parys => TreeFamily::Parys { n, h },
            TreeChoice::Succinct => TreeFamily::Succinct { n, h },
            TreeChoice::Explicit(t) => TreeFamily::Explicit(Arc::clone(t)),
        };
        Ok((family(he).cursor()?, family(ho).cursor()?))
    }

    pub fn run(&self, game: &ParityGame) -> Result<SolveReport, SolveError> {
        self.check()?;
        match self.solver {
            SolverKind::Zielonka => Ok(mcnaughton_zielonka(game, Player::Even)),
            SolverKind::ZielonkaEnhanced => Ok(mcnaughton_zielonka_enhanced(game, Player::Even)),
            SolverKind::Universal => {
                let (te, to) = self.cursors(game)?;
                match self.symbolic {
                    None => universal_solve(game, Player::Even, &te, &to, self.rule),
                    Some(layout) => {
                        sym_universal_solve(game, Player::Even, &te, &to, self.rule, layout)
                    }
                }
            }
        }
    }
}

impl fmt::Display for SolverConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.solver {
            SolverKind::Zielonka => return f.write_str("mz"),
            SolverKind::ZielonkaEnhanced => return f.write_str("mz-enhanced"),
            SolverKind::Universal => f.write_str("universal")?,
        }
        let tree = match &self.tree {
            TreeChoice::Complete => "complete",
            TreeChoice::Parys => "parys",
            TreeChoice::Succinct => "succinct",
            TreeChoice::Explicit(_) => "explicit",
        };
        let rule = match self.rule {
            PruningRule::None => "none",
            PruningRule::EmptySet => "empty-set",
            PruningRule::ParysBlocks => "parys-blocks",
        };
        write!(f, "/{tree}/{rule}")?;
        match self.symbolic {
            None => Ok(()),
            Some(Layout::PerFrame) => f.write_str("/per-frame"),
            Some(Layout::Succinct) => f.write_str("/succinct"),
        }
    }
}
