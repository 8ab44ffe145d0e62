/// Global size caps. Everything downstream of category ingestion is an
/// exponential search, so every operation that enumerates takes a `&Budget`
/// and fails with `Error::Budget` instead of running away.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Budget {
    /// Hard cap on morphisms of an ingested or generated category.
    pub max_morphisms: usize,
    /// Cap on morphisms of derived categories (comma, algebra, opposite).
    pub max_derived_morphisms: usize,
    /// Cap on tuples scanned while computing products and limits.
    pub max_product: u64,
    /// Cap on the size of an enumerated function set |Y|^|X|.
    pub max_hom_set: u64,
    /// Cap on nodes visited by a natural-family search.
    pub max_search_nodes: u64,
    /// Cap on subsets tried by the generically-idempotent search.
    pub max_subsets: u64,
    /// Cap on functors enumerated by exhaustive functor searches.
    pub max_functors: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_morphisms: 64,
            max_derived_morphisms: 4096,
            max_product: 1_000_000,
            max_hom_set: 1_000_000,
            max_search_nodes: 5_000_000,
            max_subsets: 4096,
            max_functors: 200_000,
        }
    }
}

impl Budget {
    /// Apply overrides from `CODENSE_MAX_*` environment variables.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        let read = |key: &str| -> Option<u64> {
            std::env::var(key).ok().and_then(|v| v.parse().ok())
        };
        if let Some(v) = read("CODENSE_MAX_MORPHISMS") {
            b.max_morphisms = v as usize;
        }
        if let Some(v) = read("CODENSE_MAX_DERIVED_MORPHISMS") {
            b.max_derived_morphisms = v as usize;
        }
        if let Some(v) = read("CODENSE_MAX_PRODUCT") {
            b.max_product = v;
        }
        if let Some(v) = read("CODENSE_MAX_HOM_SET") {
            b.max_hom_set = v;
        }
        if let Some(v) = read("CODENSE_MAX_SEARCH_NODES") {
            b.max_search_nodes = v;
        }
        if let Some(v) = read("CODENSE_MAX_SUBSETS") {
            b.max_subsets = v;
        }
        if let Some(v) = read("CODENSE_MAX_FUNCTORS") {
            b.max_functors = v;
        }
        b
    }
}

/// Counts nodes of a single search and trips the budget once exhausted.
#[derive(Debug)]
pub struct SearchMeter {
    visited: u64,
    cap: u64,
    context: &'static str,
}

impl SearchMeter {
    pub fn new(budget: &Budget, context: &'static str) -> Self {
        SearchMeter {
            visited: 0,
            cap: budget.max_search_nodes,
            context,
        }
    }

    pub fn tick(&mut self) -> crate::error::Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            Err(crate::error::Error::budget(self.context, self.visited, self.cap))
        } else {
            Ok(())
        }
    }
}
