//! Exact rational linear algebra and polyhedral computation.

pub mod cone;
pub mod ilp;
pub mod linalg;
pub mod lp;

pub use cone::{format_form, parse_form, Cone, ConeInfo, Form};
pub use ilp::min_sum_integer_point;
pub use linalg::{qi, solve_linear, Solution, Q};
pub use lp::{Lp, LpOutcome, Rel};
