//! Graded connected Hopf algebras.
