use serde::{Deserialize, Serialize};

/// Computational bounds shared by every bounded operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Largest `n` for which full character tables are built.
    pub max_table_n: u32,
    /// Largest group order the brute-force adjacency oracle will materialize.
    pub max_oracle_group_order: u64,
    /// Largest `n` for which partitions are enumerated to find p-cores.
    pub max_core_enum_n: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_table_n: 14,
            max_oracle_group_order: 720,
            max_core_enum_n: 70,
        }
    }
}

/// The brute-force conjugacy oracle materializes the whole of S_n.
pub const MAX_ORACLE_DEGREE: u32 = 8;
