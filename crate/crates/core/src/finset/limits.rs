use super::{Diagram, FinFunction, FinSetObject, SetOb};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// All functions X -> Y in lexicographic order of their image tables.
/// Returns the reified set (tokens are image lists) together with the
/// functions themselves, position-aligned.
pub fn hom_set(x: &SetOb, y: &SetOb, budget: &Budget) -> Result<(SetOb, Vec<FinFunction>)> {
    let count = (y.len() as u64).checked_pow(x.len() as u32);
    match count {
        Some(c) if c <= budget.max_hom_set => {}
        _ => {
            return Err(Error::budget(
                "hom_set",
                count.unwrap_or(u64::MAX),
                budget.max_hom_set,
            ))
        }
    }
    let mut functions = Vec::new();
    if x.is_empty() {
        functions.push(FinFunction::new(x.clone(), y.clone(), Vec::new())?);
    } else if !y.is_empty() {
        let mut table = vec![0usize; x.len()];
        loop {
            functions.push(FinFunction::new(x.clone(), y.clone(), table.clone())?);
            // lexicographic odometer, last position fastest
            let mut i = x.len();
            loop {
                if i == 0 {
                    let tokens = functions.iter().map(|f| f.token()).collect();
                    let set = FinSetObject::new(tokens)?;
                    return Ok((set, functions));
                }
                i -= 1;
                table[i] += 1;
                if table[i] < y.len() {
                    break;
                }
                table[i] = 0;
            }
        }
    }
    let tokens = functions.iter().map(|f| f.token()).collect();
    let set = FinSetObject::new(tokens)?;
    Ok((set, functions))
}

#[derive(Debug, Clone)]
pub struct LimitResult {
    pub object: SetOb,
    /// One projection per shape object, position-aligned with the shape.
    pub projections: Vec<FinFunction>,
    /// Element i of the limit is the tuple tuples[i], indexed by shape object.
    pub tuples: Vec<Vec<usize>>,
}

/// Limit of a finite-set diagram: the subset of the product of all D(a)
/// whose tuples commute with every D(f). Tuples are enumerated in
/// lexicographic order; the empty shape yields the singleton "()" tuple.
pub fn limit(d: &Diagram, budget: &Budget) -> Result<LimitResult> {
    let shape = &d.shape;
    let n = shape.object_count();
    let mut product: u64 = 1;
    for s in &d.at {
        product = product.saturating_mul(s.len() as u64);
    }
    if product > budget.max_product {
        return Err(Error::budget("limit", product, budget.max_product));
    }

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    if n == 0 {
        tuples.push(Vec::new());
    } else if d.at.iter().all(|s| !s.is_empty()) {
        let mut tuple = vec![0usize; n];
        'outer: loop {
            let compatible = shape.morphism_indices().all(|m| {
                d.act[m].apply(tuple[shape.dom(m)]) == tuple[shape.cod(m)]
            });
            if compatible {
                tuples.push(tuple.clone());
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < d.at[i].len() {
                    break;
                }
                tuple[i] = 0;
            }
        }
    }

    let tokens: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .enumerate()
                .map(|(o, &e)| d.at[o].token(e))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let object = FinSetObject::new(tokens)?;
    let projections = (0..n)
        .map(|o| {
            FinFunction::new(
                object.clone(),
                d.at[o].clone(),
                tuples.iter().map(|t| t[o]).collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LimitResult {
        object,
        projections,
        tuples,
    })
}

#[derive(Debug, Clone)]
pub struct ColimitResult {
    pub object: SetOb,
    /// One injection per shape object, position-aligned with the shape.
    pub injections: Vec<FinFunction>,
}

/// Colimit of a finite-set diagram: the disjoint union of all D(a) quotiented
/// by the equivalence generated by x ~ D(f)(x). Classes are named by their
/// least (object, element) representative.
pub fn colimit(d: &Diagram, budget: &Budget) -> Result<ColimitResult> {
    let shape = &d.shape;
    let n = shape.object_count();
    let mut offsets = vec![0usize; n + 1];
    for o in 0..n {
        offsets[o + 1] = offsets[o] + d.at[o].len();
    }
    let total = offsets[n];
    if total as u64 > budget.max_product {
        return Err(Error::budget("colimit", total as u64, budget.max_product));
    }

    let mut uf = UnionFind::new(total);
    for m in shape.morphism_indices() {
        let (a, a2) = (shape.dom(m), shape.cod(m));
        for x in 0..d.at[a].len() {
            uf.union(offsets[a] + x, offsets[a2] + d.act[m].apply(x));
        }
    }

    // union keeps the smaller root, so each root is the least member of its
    // class; (object, element) order is the flattened index order
    let roots: Vec<usize> = (0..total).map(|i| uf.find(i)).collect();
    let reps: Vec<usize> = (0..total).filter(|&i| roots[i] == i).collect();
    let rep_index: std::collections::HashMap<usize, usize> = reps
        .iter()
        .enumerate()
        .map(|(ci, &r)| (r, ci))
        .collect();
    let class_rep: Vec<usize> = roots.iter().map(|r| rep_index[r]).collect();

    let tokens: Vec<String> = reps
        .iter()
        .map(|&r| {
            let o = (0..n).find(|&o| offsets[o] <= r && r < offsets[o + 1]).unwrap();
            format!("{}:{}", shape.object_name(o), d.at[o].token(r - offsets[o]))
        })
        .collect();
    let object = FinSetObject::new(tokens)?;
    let injections = (0..n)
        .map(|o| {
            FinFunction::new(
                d.at[o].clone(),
                object.clone(),
                (0..d.at[o].len())
                    .map(|x| class_rep[offsets[o] + x])
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColimitResult { object, injections })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // elect the smaller root so representatives are canonical
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}
