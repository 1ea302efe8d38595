use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HittingError {
    #[error("the collection of sets is empty")]
    EmptyCollection,
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("set {index} has {size} elements, more than k1 = {k1}")]
    SetTooLarge { index: usize, size: usize, k1: usize },
    #[error("set {set} mentions element {element} outside the universe")]
    UnknownElement { set: usize, element: usize },
    #[error("the move budget k2 must be at least 1")]
    ZeroBudget,
}

/// Players alternately pick unchosen elements of `B`; whoever makes the
/// move after which every set of `C` holds a chosen element wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingGameInstance {
    universe: Vec<String>,
    sets: Vec<Vec<usize>>,
    k1: usize,
    k2: usize,
}

impl HittingGameInstance {
    /// `sets` index into `universe`.
    pub fn new(universe: Vec<String>, sets: Vec<Vec<usize>>, k1: usize, k2: usize) -> Result<Self, HittingError> {
        if sets.is_empty() {
            return Err(HittingError::EmptyCollection);
        }
        if k2 == 0 {
            return Err(HittingError::ZeroBudget);
        }
        let mut sets = sets;
        for (index, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(HittingError::EmptySet(index));
            }
            if set.len() > k1 {
                return Err(HittingError::SetTooLarge {
                    index,
                    size: set.len(),
                    k1,
                });
            }
            if let Some(&element) = set.iter().find(|&&e| e >= universe.len()) {
                return Err(HittingError::UnknownElement { set: index, element });
            }
        }
        Ok(HittingGameInstance { universe, sets, k1, k2 })
    }

    /// One set per line, elements separated by whitespace. A line starting
    /// with `B:` adds elements to the universe without forming a set; `#`
    /// starts a comment line.
    pub fn parse(text: &str, k1: usize, k2: usize) -> Result<Self, HittingError> {
        let mut universe: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |name: &str| {
            *index.entry(name.to_string()).or_insert_with(|| {
                universe.push(name.to_string());
                universe.len() - 1
            })
        };
        let mut sets = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(extra) = line.strip_prefix("B:") {
                extra.split_whitespace().for_each(|e| {
                    intern(e);
                });
                continue;
            }
            sets.push(line.split_whitespace().map(&mut intern).collect());
        }
        HittingGameInstance::new(universe, sets, k1, k2)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingOutcome {
    pub player_one_wins: bool,
    /// A first move that keeps the win, as an index into the universe.
    pub winning_move: Option<usize>,
    pub nodes: usize,
}

struct Game<'a> {
    inst: &'a HittingGameInstance,
    chosen: Vec<bool>,
    nodes: usize,
}

impl Game<'_> {
    fn all_hit(&self) -> bool {
        self.inst.sets.iter().all(|s| s.iter().any(|&e| self.chosen[e]))
    }

    /// Elements of unhit sets, plus at most one element outside all of them:
    /// such dead moves are interchangeable.
    fn moves(&self) -> Vec<usize> {
        let mut live = vec![false; self.inst.universe.len()];
        for set in &self.inst.sets {
            if !set.iter().any(|&e| self.chosen[e]) {
                for &e in set {
                    live[e] = true;
                }
            }
        }
        let mut moves: Vec<usize> = (0..live.len()).filter(|&e| live[e]).collect();
        if let Some(dead) = (0..live.len()).find(|&e| !live[e] && !self.chosen[e]) {
            moves.push(dead);
        }
        moves
    }

    /// Whether Player I wins from here with `made` moves already played.
    fn first_player_wins(&mut self, made: usize) -> (bool, Option<usize>) {
        self.nodes += 1;
        if made == self.inst.k2 {
            return (false, None);
        }
        let player_one_moves = made.is_multiple_of(2);
        for e in self.moves() {
            self.chosen[e] = true;
            let win = if self.all_hit() {
                player_one_moves
            } else {
                self.first_player_wins(made + 1).0
            };
            self.chosen[e] = false;
            if win == player_one_moves {
                return (win, Some(e));
            }
        }
        // no move reached the mover's goal
        (!player_one_moves, None)
    }
}

pub fn solve_hitting_game(inst: &HittingGameInstance) -> HittingOutcome {
    let mut game = Game {
        inst,
        chosen: vec![false; inst.universe.len()],
        nodes: 0,
    };
    let (wins, first) = game.first_player_wins(0);
    HittingOutcome {
        player_one_wins: wins,
        winning_move: if wins { first } else { None },
        nodes: game.nodes,
    }
}

/// Whether Player I can force a win within `k2` moves in total.
pub fn player_one_wins(inst: &HittingGameInstance) -> bool {
    solve_hitting_game(inst).player_one_wins
}
