//! Real algebraic numbers: Sturm isolation, exact sign determination and
//! certified Pisot verification.

mod algebraic;
mod pisot;
mod sturm;

pub use algebraic::{isolate_root_above_1, PowerTable, RealAlgebraic};
pub use pisot::{pisot_verify, MAX_PRECISION_BITS};
pub use sturm::{sign_variations, sturm_chain, sturm_count};
