//! Full submodule lattice of a representation, by breadth-first one-generator
//! extensions with canonical-form deduplication.
//!
//! Completeness: any strict inclusion of submodules U in V admits a
//! one-generator extension of U inside V, so closing from 0 under all
//! single-vector extensions reaches every submodule.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::module::{submodule_generated, Representation, Submodule};
use std::collections::HashMap;

impl std::fmt::Debug for SubmoduleLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubmoduleLattice with {} nodes", self.nodes.len())
    }
}

pub struct SubmoduleLattice {
    parent: Representation,
    /// Canonical submodules, sorted by (total dim, canonical order).
    nodes: Vec<Submodule>,
    /// leq[i] holds j iff nodes[i] <= nodes[j] (as a bitset over words).
    leq: Vec<Vec<u64>>,
    /// Lazily computed indecomposability flags.
    flags: std::cell::RefCell<Vec<Option<bool>>>,
}

impl SubmoduleLattice {
    pub fn parent(&self) -> &Representation {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &Submodule {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn index_of(&self, sub: &Submodule) -> Option<usize> {
        self.nodes.iter().position(|n| n == sub)
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn full_index(&self) -> usize {
        self.nodes.len() - 1
    }

    /// True iff `nodes[i]` is contained in `nodes[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn proper_subnodes(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != j && self.le(i, j))
    }

    /// Cover pairs (i, j): proper containments with no node strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.le(i, j) {
                    continue;
                }
                let direct = !(0..n)
                    .any(|k| k != i && k != j && self.le(i, k) && self.le(k, j));
                if direct {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Enumerate the full submodule lattice; errors out with the partial count
/// when more than `caps.max_submodules` nodes appear.
pub fn all_submodules(m: &Representation, caps: &Caps) -> Result<SubmoduleLattice> {
    let field = m.field();
    let p = field.p();
    let zero = Submodule::zero(m);
    let mut nodes: Vec<Submodule> = vec![zero];
    let mut seen: HashMap<Vec<crate::subspace::Subspace>, usize> = HashMap::new();
    seen.insert(nodes[0].spaces().to_vec(), 0);
    let mut queue: Vec<usize> = vec![0];
    while let Some(idx) = queue.pop() {
        let u = nodes[idx].clone();
        for v in 0..m.dims().len() {
            let (proj, lift) = u.space(v).quotient_data();
            let q = proj.rows();
            if q == 0 {
                continue;
            }
            // Nonzero vectors of the quotient up to scalar: first nonzero
            // coordinate normalized to 1.
            let mut coords = vec![0u64; q];
            loop {
                let mut i = 0;
                while i < q {
                    coords[i] += 1;
                    if coords[i] < p {
                        break;
                    }
                    coords[i] = 0;
                    i += 1;
                }
                if i == q {
                    break;
                }
                match coords.iter().find(|&&c| c != 0) {
                    Some(&1) => {}
                    _ => continue,
                }
                let vec = lift.apply(&coords);
                let gen = submodule_generated(m, &[(v, vec)]);
                let extended = u.sum(&gen);
                if seen.contains_key(extended.spaces()) {
                    continue;
                }
                if nodes.len() >= caps.max_submodules {
                    return Err(Error::LatticeCapExceeded {
                        cap: caps.max_submodules,
                        found: nodes.len(),
                    });
                }
                seen.insert(extended.spaces().to_vec(), nodes.len());
                queue.push(nodes.len());
                nodes.push(extended);
            }
        }
    }
    // Sort by total dimension (a linear extension of inclusion), keeping the
    // canonical form as a deterministic tiebreak.
    fn sort_key(u: &Submodule) -> (usize, Vec<usize>, Vec<Vec<u64>>) {
        let rows = u
            .spaces()
            .iter()
            .flat_map(|s| (0..s.dim()).map(|r| s.basis().row(r).to_vec()))
            .collect();
        (u.total_dim(), u.dim_vector(), rows)
    }
    nodes.sort_by_key(sort_key);
    let n = nodes.len();
    let words = n.div_ceil(64);
    let mut leq = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in 0..n {
            if nodes[j].contains(&nodes[i]) {
                leq[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    Ok(SubmoduleLattice {
        parent: m.clone(),
        nodes,
        leq,
        flags: std::cell::RefCell::new(vec![None; n]),
    })
}

impl SubmoduleLattice {
    /// Whether node `i` is indecomposable (nonzero and certified); cached.
    pub fn is_indecomposable(&self, i: usize, caps: &Caps) -> Result<bool> {
        if let Some(flag) = self.flags.borrow()[i] {
            return Ok(flag);
        }
        let node = &self.nodes[i];
        let flag = if node.is_zero() {
            false
        } else {
            let (rep, _) = node.to_representation();
            crate::decomp::decompose(&rep, caps)?.is_indecomposable()
        };
        self.flags.borrow_mut()[i] = Some(flag);
        Ok(flag)
    }

    /// Indices of the indecomposable nodes.
    pub fn indecomposable_nodes(&self, caps: &Caps) -> Result<Vec<usize>> {
        (0..self.len())
            .filter_map(|i| match self.is_indecomposable(i, caps) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }
}
