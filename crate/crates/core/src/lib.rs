//! Quantified constraint handling rules.
//!
//! A committed-choice multi-headed rule engine extended with existential
//! and universal rules whose bodies range over integer intervals. The
//! quantifiers are produced while solving, so the alternation of moves in
//! a game model is built on demand rather than declared up front.
//!
//! ```
//! use qchr::{parse_goal, parse_program, solve_plain, SolveOptions};
//!
//! let program = parse_program(
//!     "l @ nimfibo(R) ==> nimfiboe(R-1, R).
//!      e @ nimfiboe(N, R) <=> exists It in [1..min(N, R)] | nimfibou(2*It, R-It).
//!      u @ nimfibou(N, R) <=> forall It in [1..min(N, R)] | nimfiboe(2*It, R-It).",
//! )?;
//! let goal = parse_goal("nimfibo(4)")?;
//! let result = solve_plain(&program, &goal, &SolveOptions::default())?;
//! assert!(result.valid);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod builtins;
pub mod engine;
pub mod eq;
pub mod error;
pub mod eval;
pub mod games;
pub mod parser;
pub mod program;
pub mod report;
pub mod store;
pub mod term;

pub use builtins::{Host, NoHost, Registry};
pub use engine::{solve, solve_plain, Session, SolveOptions, SolveResult, Stats};
pub use error::{EvalError, ParseError, SolveError};
pub use parser::{parse_goal, parse_program};
pub use program::{Program, Rule};
pub use report::RunReport;
pub use term::{Atom, Constraint, Term, Value};
