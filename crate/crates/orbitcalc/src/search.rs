//! Parallel driver for the related-union search.

use orbitcalc_core::pl::{RelatedUnion, RelatedUnionSearch};
use orbitcalc_core::{Cap, GroupKind};
use rayon::prelude::*;

use crate::CliError;

/// Same output as `orbitcalc_core::pl::find_related_unions` for any thread
/// count; `threads == 0` uses rayon's default.
pub fn find_related_unions(
    group: GroupKind,
    cap: Cap,
    threads: usize,
) -> Result<Vec<RelatedUnion>, CliError> {
    let search = RelatedUnionSearch::new(group, cap)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut found: Vec<RelatedUnion> = pool.install(|| {
        (0..search.len())
            .into_par_iter()
            .flat_map_iter(|top| search.search_top(top))
            .collect()
    });
    search.canonical_order(&mut found);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_change_the_result() {
        for g in [
            GroupKind::orthogonal(11),
            GroupKind::symplectic(10).unwrap(),
        ] {
            let seq = orbitcalc_core::pl::find_related_unions(g, Cap::DEFAULT).unwrap();
            for threads in [1, 2, 4] {
                assert_eq!(find_related_unions(g, Cap::DEFAULT, threads).unwrap(), seq);
            }
        }
    }
}
