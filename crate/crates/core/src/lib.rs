//! Enumeration and bijections for four families of combinatorial objects
//! counted by the odd-indexed Fibonacci numbers 1, 2, 5, 13, 34, 89, ...
//! (OEIS A001519, satisfying `a(n) = 3 a(n-1) - a(n-2)`):
//!
//! * permutations avoiding 321 and 4123 <-> Dyck paths of height at most 3,
//! * permutations avoiding 321 and the vincular pattern `21-4-3` <-> block
//!   fountains of coins,
//! * permutations avoiding 321 and 3412 <-> noncrossing, nonnesting set
//!   partitions,
//! * permutations avoiding 231 and 3124 <-> directed column-convex
//!   polyominoes counted by area.
//!
//! Every correspondence is implemented as an explicit forward/inverse pair
//! of maps ([`biject`]), each source family has its own validated encoding
//! and exhaustive enumerator, and the positional statistics of the classes
//! (position of the entry 1, or of the entry n) are available both as
//! triangle recurrences and as truncated expansions of rational generating
//! functions ([`series`]).
//!
//! All values are immutable and all operations are pure functions; results
//! of the enumerators are returned in a documented deterministic order.

pub mod biject;
pub mod dyck;
pub mod fixtures;
pub mod fountain;
pub mod partition;
pub mod perm;
pub mod polyomino;
pub mod series;
