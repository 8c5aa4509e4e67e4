//! The solution-document JSON schema (all indices 1-based):
//!
//! ```json
//! {"kind":"table","n":2,"S":[[[1,1],[2,1]],[[1,2],[2,2]]]}
//! {"kind":"permutations","sigma":[[2,1],[1,2]],"tau":[[2,1],[1,2]]}
//! {"kind":"relations","n":2,"relations":[[[1,2],[2,1]]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solution::{RelationSet, SolutionTable};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SolutionDocument {
    Table {
        n: usize,
        #[serde(rename = "S")]
        s: Vec<Vec<[usize; 2]>>,
    },
    Permutations {
        sigma: Vec<Vec<usize>>,
        tau: Vec<Vec<usize>>,
    },
    Relations {
        n: usize,
        relations: Vec<[[usize; 2]; 2]>,
    },
}

impl SolutionDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    /// Validate and build the solution table.
    pub fn load(&self) -> Result<SolutionTable> {
        match self {
            SolutionDocument::Table { n, s } => load_table(*n, s),
            SolutionDocument::Permutations { sigma, tau } => load_permutations(sigma, tau),
            SolutionDocument::Relations { n, relations } => load_relations(*n, relations),
        }
    }

    /// Document of kind `table` for an existing solution.
    pub fn from_table(t: &SolutionTable) -> Self {
        let n = t.n();
        let s = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (u, v) = t.s(x, y);
                        [u + 1, v + 1]
                    })
                    .collect()
            })
            .collect();
        SolutionDocument::Table { n, s }
    }
}

fn check_index(i: usize, n: usize, what: &str) -> Result<usize> {
    if i == 0 || i > n {
        return Err(Error::Document(format!(
            "{what}: index {i} out of range 1..={n}"
        )));
    }
    Ok(i - 1)
}

fn load_table(n: usize, rows: &[Vec<[usize; 2]>]) -> Result<SolutionTable> {
    if n == 0 {
        return Err(Error::Document("n must be positive".into()));
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Document(format!("S must be an {n}x{n} array of pairs")));
    }
    let mut cells = vec![(0usize, 0usize); n * n];
    for (x, row) in rows.iter().enumerate() {
        for (y, &[u, v]) in row.iter().enumerate() {
            cells[x * n + y] = (
                check_index(u, n, "table entry")?,
                check_index(v, n, "table entry")?,
            );
        }
    }
    SolutionTable::from_fn(n, |x, y| cells[x * n + y])
}

fn load_permutations(sigma: &[Vec<usize>], tau: &[Vec<usize>]) -> Result<SolutionTable> {
    let n = sigma.len();
    if n == 0 {
        return Err(Error::Document("sigma must be non-empty".into()));
    }
    if tau.len() != n {
        return Err(Error::Document(format!(
            "expected {n} tau permutations, got {}",
            tau.len()
        )));
    }
    let parse = |rows: &[Vec<usize>], role: &'static str| -> Result<Vec<Permutation>> {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    return Err(Error::NotAPermutation { role, index: i + 1, n });
                }
                let images = row
                    .iter()
                    .map(|&v| check_index(v, n, role))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|_| Error::NotAPermutation { role, index: i + 1, n })?;
                Permutation::new(images, role, i + 1)
            })
            .collect()
    };
    let sigma = parse(sigma, "sigma")?;
    let tau = parse(tau, "tau")?;
    SolutionTable::from_fn(n, |x, y| (sigma[x].apply(y), tau[y].apply(x)))
}

fn load_relations(n: usize, relations: &[[[usize; 2]; 2]]) -> Result<SolutionTable> {
    if n == 0 {
        return Err(Error::Document("n must be positive".into()));
    }
    let mut rels = Vec::with_capacity(relations.len());
    for &[[a, b], [c, d]] in relations {
        rels.push((
            (
                check_index(a, n, "relation")?,
                check_index(b, n, "relation")?,
            ),
            (
                check_index(c, n, "relation")?,
                check_index(d, n, "relation")?,
            ),
        ));
    }
    RelationSet::new(n, rels)?.to_solution()
}
