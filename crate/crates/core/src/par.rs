//! Data-parallel helpers with a sequential fallback when the `parallel`
//! feature is off.

use serde::{Deserialize, Serialize};

/// How independent work items are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// Rayon work stealing; identical to `Sequential` without the `parallel`
    /// feature.
    #[default]
    Parallel,
}

/// First `Some` in index order, as if the items were visited sequentially.
pub(crate) fn find_map_first<R, G>(items: usize, exec: Execution, f: G) -> Option<R>
where
    R: Send,
    G: Fn(usize) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..items).into_par_iter().find_map_first(f)
        }
        _ => (0..items).find_map(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_match_is_in_index_order() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let hit = find_map_first(1000, exec, |i| (i % 97 == 96).then_some(i));
            assert_eq!(hit, Some(96));
        }
    }
}
