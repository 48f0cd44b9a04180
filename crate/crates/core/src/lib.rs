//! Flex profiles of smooth plane curves and the degrees of their PGL(3)
//! orbit closures, computed exactly.
//!
//! The predegree of an orbit closure is available three ways: closed-form
//! formulas in [`orbitformulas`], the blow-up by blow-up summation, and the
//! symbolic intersection computation in [`chowcalc`] that rederives every
//! correction term. [`flexlab`] supplies the flex data those formulas need
//! straight from a curve equation.

pub mod chowcalc;
pub mod exactpoly;
pub mod flexlab;
pub mod orbitformulas;
pub mod pgl2;
pub mod polyparse;
