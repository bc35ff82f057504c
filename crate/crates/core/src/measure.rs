//! Weighted Gabriel-Roiter measures.
//!
//! A measure value is a finite strictly increasing sequence of positive
//! rationals ordered by: `I < J` iff the minimum of the symmetric difference
//! lies in `J`. On sorted sequences this reads: at the first position where
//! they differ, the sequence holding the *smaller* entry wins, and a proper
//! prefix loses to its extension.
//!
//! The measure of a module is the maximum over all chains of indecomposable
//! submodules of the chain's weighted-length sequence. The defining supremum
//! is computed by a recursion over the submodule lattice: the best chain
//! ending at an indecomposable node extends the best chain ending at one of
//! its proper indecomposable subnodes. This is valid because appending a
//! strictly larger element preserves the order (tested as an invariant).

use crate::config::Caps;
use crate::error::Result;
use crate::lattice::{all_submodules, SubmoduleLattice};
use crate::module::{LengthFunction, Representation, Submodule};
use crate::rational::Rational;
use std::cmp::Ordering;
use std::fmt;

/// A finite strictly increasing sequence of positive rationals; the empty
/// sequence is the measure of the zero module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MeasureValue {
    entries: Vec<Rational>,
}

impl MeasureValue {
    pub fn empty() -> Self {
        MeasureValue { entries: vec![] }
    }

    pub fn new(entries: Vec<Rational>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0] < w[1]),
            "measure entries must strictly increase"
        );
        assert!(
            entries.iter().all(|e| e.is_positive()),
            "measure entries must be positive"
        );
        MeasureValue { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&n| Rational::from_int(n)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// The sequence extended by a strictly larger entry.
    pub fn appended(&self, r: Rational) -> Self {
        if let Some(last) = self.entries.last() {
            assert!(*last < r, "appended entry must exceed the maximum");
        }
        let mut entries = self.entries.clone();
        entries.push(r);
        MeasureValue { entries }
    }

    /// Serialized form: entries as "num/den" strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(|r| r.to_string()).collect()
    }
}

impl PartialOrd for MeasureValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MeasureValue {
    fn cmp(&self, other: &Self) -> Ordering {
        measure_order(self, other)
    }
}

/// The total order: on the first differing entry the smaller one wins;
/// otherwise the longer sequence wins.
pub fn measure_order(a: &MeasureValue, b: &MeasureValue) -> Ordering {
    for (x, y) in a.entries.iter().zip(&b.entries) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // min of the symmetric difference is the smaller of (x, y); the
            // side containing it is the larger measure.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    a.entries.len().cmp(&b.entries.len())
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.entries
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A chain of indecomposable submodules realizing a measure.
#[derive(Clone, Debug)]
pub struct MeasureWitness {
    pub chain: Vec<Submodule>,
    pub lengths: Vec<Rational>,
}

impl MeasureWitness {
    pub fn empty() -> Self {
        MeasureWitness {
            chain: vec![],
            lengths: vec![],
        }
    }
}

/// The measure of the lattice's parent module, with a witness chain,
/// computed by the memoized recursion over indecomposable nodes.
pub fn gr_measure_on_lattice(
    lattice: &SubmoduleLattice,
    lambda: &LengthFunction,
    caps: &Caps,
) -> Result<(MeasureValue, MeasureWitness)> {
    let ind = lattice.indecomposable_nodes(caps)?;
    // Nodes are sorted by total dimension, so ascending index order is a
    // valid topological order for the chain recursion.
    let mut end: Vec<MeasureValue> = Vec::with_capacity(ind.len());
    let mut prev: Vec<Option<usize>> = Vec::with_capacity(ind.len());
    for (pos, &j) in ind.iter().enumerate() {
        let mut best: Option<(usize, &MeasureValue)> = None;
        for (qpos, &i) in ind[..pos].iter().enumerate() {
            if lattice.le(i, j) && best.is_none_or(|(_, m)| end[qpos] > *m) {
                best = Some((qpos, &end[qpos]));
            }
        }
        let lj = lambda.of_sub(lattice.node(j));
        match best {
            Some((qpos, m)) => {
                end.push(m.clone().appended(lj));
                prev.push(Some(qpos));
            }
            None => {
                end.push(MeasureValue::empty().appended(lj));
                prev.push(None);
            }
        }
    }
    let Some(best_pos) = (0..ind.len()).max_by(|&a, &b| end[a].cmp(&end[b])) else {
        return Ok((MeasureValue::empty(), MeasureWitness::empty()));
    };
    let mut chain_positions = vec![best_pos];
    while let Some(q) = prev[*chain_positions.last().unwrap()] {
        chain_positions.push(q);
    }
    chain_positions.reverse();
    let chain: Vec<Submodule> = chain_positions
        .iter()
        .map(|&pos| lattice.node(ind[pos]).clone())
        .collect();
    let lengths: Vec<Rational> = chain.iter().map(|u| lambda.of_sub(u)).collect();
    let value = end[best_pos].clone();
    debug_assert_eq!(&lengths[..], value.entries());
    Ok((value, MeasureWitness { chain, lengths }))
}

/// Measure of a module (builds the submodule lattice internally).
pub fn gr_measure(
    m: &Representation,
    lambda: &LengthFunction,
    caps: &Caps,
) -> Result<(MeasureValue, MeasureWitness)> {
    if m.is_zero() {
        return Ok((MeasureValue::empty(), MeasureWitness::empty()));
    }
    let lattice = all_submodules(m, caps)?;
    gr_measure_on_lattice(&lattice, lambda, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::{quotient, submodule_generated};
    use crate::quiver::{projective, simple};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn order_examples() {
        let empty = MeasureValue::empty();
        let one = MeasureValue::from_ints(&[1]);
        assert!(empty < one);
        // {1,3} < {1,2,4}: min of the symmetric difference is 2.
        assert!(MeasureValue::from_ints(&[1, 3]) < MeasureValue::from_ints(&[1, 2, 4]));
        // {1,2,4} < {1,2,3}: min of the symmetric difference is 3.
        assert!(MeasureValue::from_ints(&[1, 2, 4]) < MeasureValue::from_ints(&[1, 2, 3]));
        // prefix loses
        assert!(MeasureValue::from_ints(&[1, 2]) > MeasureValue::from_ints(&[1]));
        // smaller start wins
        assert!(MeasureValue::from_ints(&[2]) < MeasureValue::from_ints(&[1]));
    }

    #[test]
    fn measure_of_p1_with_unit_weights() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[1, 1]).unwrap();
        let (mu, witness) = gr_measure(&p1, &lambda, &caps()).unwrap();
        assert_eq!(mu, MeasureValue::from_ints(&[1, 2, 4]));
        assert_eq!(witness.chain.len(), 3);
        assert!(witness.chain.last().unwrap().is_full());
    }

    #[test]
    fn measure_of_p1_with_weights_one_two() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[1, 2]).unwrap();
        let (mu, _) = gr_measure(&p1, &lambda, &caps()).unwrap();
        assert_eq!(mu, MeasureValue::from_ints(&[1, 2, 5]));
    }

    #[test]
    fn measures_of_the_smaller_chain_members() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[1, 2]).unwrap();
        // X2 = P1 / span{a.a}, the (2,1) module.
        let u = submodule_generated(&p1, &[(0, vec![0, 0, 1])]);
        let (x2, _) = quotient(&p1, &u);
        let (mu2, _) = gr_measure(&x2, &lambda, &caps()).unwrap();
        assert_eq!(mu2, MeasureValue::from_ints(&[1, 4]));
        // X3 = uniserial with dims (1,1).
        let rad = crate::module::radical(&x2);
        let soc_line = submodule_generated(&x2, &[(0, rad.space(0).basis().row(0).to_vec())]);
        let (x3, _) = quotient(&x2, &soc_line);
        assert_eq!(x3.dims(), &[1, 1]);
        let (mu3, _) = gr_measure(&x3, &lambda, &caps()).unwrap();
        assert_eq!(mu3, MeasureValue::from_ints(&[2, 3]));
    }

    #[test]
    fn zero_and_simple_measures() {
        let alg = fixtures::lambda1(2).unwrap();
        let lambda = LengthFunction::from_ints(&[3, 1]).unwrap();
        let zero = Representation::zero_module(alg.clone());
        assert!(gr_measure(&zero, &lambda, &caps()).unwrap().0.is_empty());
        let l1 = simple(&alg, 0).unwrap();
        let (mu, w) = gr_measure(&l1, &lambda, &caps()).unwrap();
        assert_eq!(mu, MeasureValue::from_ints(&[3]));
        assert_eq!(w.chain.len(), 1);
    }

    #[test]
    fn witness_lengths_match_measure_entries() {
        let alg = fixtures::lambda2(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[1, 1]).unwrap();
        let (mu, w) = gr_measure(&p1, &lambda, &caps()).unwrap();
        assert_eq!(w.lengths.len(), mu.len());
        for (r, e) in w.lengths.iter().zip(mu.entries()) {
            assert_eq!(r, e);
        }
        // chain is strictly increasing
        for pair in w.chain.windows(2) {
            assert!(pair[1].contains(&pair[0]));
            assert!(pair[1].total_dim() > pair[0].total_dim());
        }
    }
}
