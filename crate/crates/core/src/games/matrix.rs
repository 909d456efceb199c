//! The matrix game. The existential player halves the rows (0 keeps the
//! top half), the universal player halves the columns (0 keeps the left
//! half). After `depth` moves the remaining cell decides: 1 means the
//! existential player wins.

use std::fmt;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builtins::{int_arg, Host, Mark, Registry};
use crate::error::EvalError;
use crate::parser::parse_program;
use crate::program::Program;
use crate::term::{Constraint, Term, Value};

/// `u0` closes odd-depth games, whose last move belongs to the universal
/// player.
pub const SOURCE: &str = "\
e0 @ mge(0) <=> leaf() = 1.
u0 @ mgu(0) <=> leaf() = 1.
e @ mge(D) <=> exists It in [0..1] | updateCornerE(It), mgu(D-1).
u @ mgu(D) <=> forall It in [0..1] | updateCornerU(It), mge(D-1).
";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("depth {depth} needs a {rows}x{cols} matrix, got {got_rows}x{got_cols}")]
    Shape {
        depth: u32,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
}

/// A 0/1 matrix with 2^ceil(d/2) rows and 2^floor(d/2) columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    depth: u32,
    cells: Vec<Vec<bool>>,
}

pub fn shape(depth: u32) -> (usize, usize) {
    (1 << depth.div_ceil(2), 1 << (depth / 2))
}

impl Matrix {
    pub fn new(depth: u32, cells: Vec<Vec<bool>>) -> Result<Self, MatrixError> {
        let (rows, cols) = shape(depth);
        let got_cols = cells.first().map_or(0, Vec::len);
        if cells.len() != rows || cells.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Shape {
                depth,
                rows,
                cols,
                got_rows: cells.len(),
                got_cols,
            });
        }
        Ok(Matrix { depth, cells })
    }

    pub fn filled(depth: u32, value: bool) -> Self {
        let (rows, cols) = shape(depth);
        Matrix {
            depth,
            cells: vec![vec![value; cols]; rows],
        }
    }

    /// Each cell is 1 with probability `density`; equal seeds give equal
    /// matrices.
    pub fn random(depth: u32, seed: u64, density: f64) -> Self {
        let (rows, cols) = shape(depth);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let density = density.clamp(0.0, 1.0);
        Matrix {
            depth,
            cells: (0..rows)
                .map(|_| (0..cols).map(|_| rng.random_bool(density)).collect())
                .collect(),
        }
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells[0].len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row][col]
    }

    pub fn complement(&self) -> Self {
        Matrix {
            depth: self.depth,
            cells: self.cells.iter().map(|r| r.iter().map(|c| !c).collect()).collect(),
        }
    }

    /// Parse the text format: the depth on the first line, then one line of
    /// `0`/`1` characters per row.
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(MatrixError::Format {
            line: 1,
            message: "missing depth".into(),
        })?;
        let depth: u32 = first.trim().parse().map_err(|_| MatrixError::Format {
            line: 1,
            message: format!("bad depth {:?}", first.trim()),
        })?;
        if depth > 30 {
            return Err(MatrixError::Format {
                line: 1,
                message: format!("depth {depth} is too large"),
            });
        }
        let mut cells = Vec::new();
        for (i, line) in lines {
            let row = line
                .trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(MatrixError::Format {
                        line: i + 1,
                        message: format!("unexpected {other:?}"),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cells.push(row);
        }
        Matrix::new(depth, cells)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.depth)?;
        for row in &self.cells {
            let line: String = row.iter().map(|&c| if c { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Corners of the remaining sub-matrix, half-open: rows `top..bottom`,
/// columns `left..right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Window {
    top: usize,
    left: usize,
    bottom: usize,
    right: usize,
}

#[derive(Debug, Clone)]
pub struct MatrixHost {
    matrix: Arc<Matrix>,
    window: Window,
    undo: Vec<Window>,
}

impl MatrixHost {
    pub fn new(matrix: Arc<Matrix>) -> Self {
        let window = Window {
            top: 0,
            left: 0,
            bottom: matrix.rows(),
            right: matrix.cols(),
        };
        MatrixHost {
            matrix,
            window,
            undo: Vec::new(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Upper-left and lower-right (inclusive) corners.
    pub fn corners(&self) -> ((usize, usize), (usize, usize)) {
        let w = self.window;
        ((w.top, w.left), (w.bottom - 1, w.right - 1))
    }

    fn cut(&mut self, half: i64, rows: bool) -> Result<bool, EvalError> {
        if !(0..=1).contains(&half) {
            return Err(EvalError::Host(format!("half must be 0 or 1, got {half}")));
        }
        let mut w = self.window;
        let (lo, hi) = if rows {
            (&mut w.top, &mut w.bottom)
        } else {
            (&mut w.left, &mut w.right)
        };
        if *hi - *lo < 2 {
            return Ok(false);
        }
        let mid = (*lo + *hi) / 2;
        if half == 0 {
            *hi = mid;
        } else {
            *lo = mid;
        }
        self.undo.push(self.window);
        self.window = w;
        Ok(true)
    }

    pub fn registry() -> Registry<MatrixHost> {
        let mut r = Registry::new();
        r.register_effect("updateCornerE", 1, |h: &mut MatrixHost, a| h.cut(int_arg(a, 0)?, true))
            .expect("fresh registry");
        r.register_effect("updateCornerU", 1, |h: &mut MatrixHost, a| h.cut(int_arg(a, 0)?, false))
            .expect("fresh registry");
        r.register_pure("leaf", 0, |h: &MatrixHost, _| {
            let w = h.window;
            Ok(Value::Int(h.matrix.get(w.top, w.left) as i64))
        })
        .expect("fresh registry");
        r
    }
}

impl Host for MatrixHost {
    fn checkpoint(&mut self) -> Mark {
        self.undo.len()
    }

    fn rollback(&mut self, mark: Mark) {
        while self.undo.len() > mark {
            self.window = self.undo.pop().expect("non-empty undo log");
        }
    }

    fn digest(&self) -> Vec<u8> {
        let w = self.window;
        [w.top, w.left, w.bottom, w.right]
            .iter()
            .flat_map(|v| (*v as u64).to_le_bytes())
            .collect()
    }
}

pub fn program() -> Program {
    parse_program(SOURCE).expect("matrix model parses")
}

pub fn goal(depth: u32) -> Vec<Constraint> {
    vec![Constraint::user("mge", vec![Term::int(depth as i64)])]
}

/// Exhaustive game value of the whole matrix.
pub fn oracle(m: &Matrix) -> bool {
    fn value(m: &Matrix, rows: (usize, usize), cols: (usize, usize), rows_to_move: bool, left: u32) -> bool {
        if left == 0 {
            return m.get(rows.0, cols.0);
        }
        if rows_to_move {
            let mid = (rows.0 + rows.1) / 2;
            value(m, (rows.0, mid), cols, false, left - 1) || value(m, (mid, rows.1), cols, false, left - 1)
        } else {
            let mid = (cols.0 + cols.1) / 2;
            value(m, rows, (cols.0, mid), true, left - 1) && value(m, rows, (mid, cols.1), true, left - 1)
        }
    }
    value(m, (0, m.rows()), (0, m.cols()), true, m.depth)
}
