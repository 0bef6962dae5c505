//! Truncated power series over a Rota-Baxter model.
