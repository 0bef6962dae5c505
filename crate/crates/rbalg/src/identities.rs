//! Identity checkers.
