//! Connect-four on a `rows` x `cols` board. Columns are numbered from 1 in
//! the rule text. The existential player moves first.
//!
//! A full board counts against whoever is to move: the existential player
//! has no move left and fails, while every universal move is skipped.

use std::collections::HashMap;

use crate::builtins::{int_arg, Host, Mark, Registry};
use crate::error::EvalError;
use crate::parser::parse_program;
use crate::program::Program;
use crate::term::{Constraint, Term, Value};

pub fn source(cols: usize) -> String {
    format!(
        "\
if_top @ ifRule(top, _) <=> true.
if_bot @ ifRule(bot, N) <=> coin(N), cfe(isWon(N)).
u_top @ cfu(top) <=> true.
u_bot @ cfu(bot) <=> forall It in [1..{cols}] | ifRule(isFull(It), It).
e_top @ cfe(top) <=> false.
e_bot @ cfe(bot) <=> exists It in [1..{cols}] | coin(It), cfu(isWon(It)).
"
    )
}

pub fn program(cols: usize) -> Program {
    parse_program(&source(cols)).expect("connect-four model parses")
}

/// The game is not won yet and the existential player is to move.
pub fn goal() -> Vec<Constraint> {
    vec![Constraint::user("cfe", vec![Term::sym("bot")])]
}

/// Board dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connect4 {
    pub rows: usize,
    pub cols: usize,
}

/// Column-major board; 0 is empty, 1 and 2 are the players' coins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connect4Host {
    game: Connect4,
    cells: Vec<u8>,
    heights: Vec<usize>,
    moves: Vec<usize>,
}

const DIRECTIONS: [(isize, isize); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];

impl Connect4Host {
    pub fn new(game: Connect4) -> Self {
        Connect4Host {
            game,
            cells: vec![0; game.rows * game.cols],
            heights: vec![0; game.cols],
            moves: Vec::new(),
        }
    }

    pub fn game(&self) -> Connect4 {
        self.game
    }

    /// Columns played so far, 0-based.
    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    pub fn cell(&self, col: usize, row: usize) -> u8 {
        self.cells[col * self.game.rows + row]
    }

    fn column(&self, one_based: i64) -> Result<usize, EvalError> {
        if one_based < 1 || one_based as usize > self.game.cols {
            return Err(EvalError::Host(format!("column {one_based} outside 1..{}", self.game.cols)));
        }
        Ok(one_based as usize - 1)
    }

    pub fn is_full(&self, col: usize) -> bool {
        self.heights[col] == self.game.rows
    }

    /// Drop a coin for the player whose turn it is.
    pub fn drop_coin(&mut self, col: usize) -> bool {
        if self.is_full(col) {
            return false;
        }
        let player = (self.moves.len() % 2) as u8 + 1;
        self.cells[col * self.game.rows + self.heights[col]] = player;
        self.heights[col] += 1;
        self.moves.push(col);
        true
    }

    fn undo_last(&mut self) {
        let col = self.moves.pop().expect("a move to undo");
        self.heights[col] -= 1;
        self.cells[col * self.game.rows + self.heights[col]] = 0;
    }

    /// Whether the top coin of `col` lies on a line of four of its colour.
    pub fn is_won(&self, col: usize) -> bool {
        let h = self.heights[col];
        if h == 0 {
            return false;
        }
        let (c0, r0) = (col as isize, h as isize - 1);
        let player = self.cell(col, h - 1);
        let owned = |c: isize, r: isize| {
            c >= 0
                && r >= 0
                && (c as usize) < self.game.cols
                && (r as usize) < self.game.rows
                && self.cell(c as usize, r as usize) == player
        };
        DIRECTIONS.iter().any(|&(dc, dr)| {
            let run = |sign: isize| (1..4).take_while(|&k| owned(c0 + sign * k * dc, r0 + sign * k * dr)).count();
            1 + run(1) + run(-1) >= 4
        })
    }

    pub fn registry() -> Registry<Connect4Host> {
        let mut r = Registry::new();
        r.register_effect("coin", 1, |h: &mut Connect4Host, a| {
            let col = h.column(int_arg(a, 0)?)?;
            Ok(h.drop_coin(col))
        })
        .expect("fresh registry");
        r.register_pure("isFull", 1, |h: &Connect4Host, a| {
            Ok(Value::truth(h.is_full(h.column(int_arg(a, 0)?)?)))
        })
        .expect("fresh registry");
        r.register_pure("isWon", 1, |h: &Connect4Host, a| {
            Ok(Value::truth(h.is_won(h.column(int_arg(a, 0)?)?)))
        })
        .expect("fresh registry");
        r
    }
}

impl Host for Connect4Host {
    fn checkpoint(&mut self) -> Mark {
        self.moves.len()
    }

    fn rollback(&mut self, mark: Mark) {
        while self.moves.len() > mark {
            self.undo_last();
        }
    }

    fn digest(&self) -> Vec<u8> {
        self.cells.clone()
    }
}

/// Largest board the oracle accepts.
pub const ORACLE_MAX_CELLS: usize = 20;

/// Exhaustive game value from the empty board, with the draw convention of
/// the rule model. `None` when the board is too large.
pub fn oracle(game: Connect4) -> Option<bool> {
    if game.rows * game.cols > ORACLE_MAX_CELLS {
        return None;
    }
    let mut board = Board {
        rows: game.rows,
        cols: game.cols,
        grid: vec![vec![0; game.rows]; game.cols],
    };
    Some(board.first_player_wins(true, &mut HashMap::new()))
}

/// Independent board used by the oracle only.
struct Board {
    rows: usize,
    cols: usize,
    grid: Vec<Vec<u8>>,
}

impl Board {
    fn four_from(&self, c: usize, r: usize) -> bool {
        let who = self.grid[c][r];
        let at = |c: i32, r: i32| {
            (0..self.cols as i32).contains(&c) && (0..self.rows as i32).contains(&r) && self.grid[c as usize][r as usize] == who
        };
        for (dc, dr) in [(0, 1), (1, 0), (1, 1), (1, -1)] {
            for start in -3..=0 {
                if (start..start + 4).all(|k| at(c as i32 + k * dc, r as i32 + k * dr)) {
                    return true;
                }
            }
        }
        false
    }

    /// `first` is true when the existential player is to move.
    fn first_player_wins(&mut self, first: bool, memo: &mut HashMap<(Vec<Vec<u8>>, bool), bool>) -> bool {
        let key = (self.grid.clone(), first);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let me = if first { 1 } else { 2 };
        let mut any_move = false;
        let mut result = !first;
        for c in 0..self.cols {
            let Some(r) = self.grid[c].iter().position(|&x| x == 0) else {
                continue;
            };
            any_move = true;
            self.grid[c][r] = me;
            let outcome = if self.four_from(c, r) {
                first
            } else {
                self.first_player_wins(!first, memo)
            };
            self.grid[c][r] = 0;
            if outcome == first {
                result = first;
                break;
            }
        }
        // No move: the existential player loses, the universal one is out
        // of objections.
        let v = if any_move { result } else { !first };
        memo.insert(key, v);
        v
    }
}
