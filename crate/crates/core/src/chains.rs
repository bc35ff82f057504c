//! Rejects, traces, and the three chain constructions (weighted
//! Gabriel-Roiter, Iyama, ADR), together with the verifier for left complete
//! total (pre)rejective chains of subcategories.
//!
//! Chains are recorded through the modules `X_1, ..., X_ell` and the set
//! `Phi` of isomorphism classes of indecomposable summands of their sum, with
//! a level per class: the largest `i` with the class a summand of `X_i`. The
//! subcategory at level `i` is the additive closure of the classes of level
//! `>= i`.

use crate::config::Caps;
use crate::decomp::{decompose, is_isomorphic, local_radical};
use crate::error::{Error, Result};
use crate::lattice::all_submodules;
use crate::measure::{gr_measure, MeasureValue};
use crate::module::{
    direct_sum, hom_basis, loewy_length, quotient, same_algebra, LengthFunction,
    Morphism, Representation, Submodule,
};
use crate::quiver::{regular, BoundQuiverAlgebra};
use crate::subspace::Subspace;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Traces and rejects.
// ---------------------------------------------------------------------------

/// The largest submodule of `m` generated by the given modules: the sum of
/// the images of all maps from them into `m`.
pub fn trace(generators: &[Representation], m: &Representation) -> Result<Submodule> {
    let mut acc = Submodule::zero(m);
    for t in generators {
        if !same_algebra(t.algebra(), m.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        for f in hom_basis(t, m)? {
            acc = acc.sum(&f.image());
        }
    }
    Ok(acc)
}

/// The categorial reject of `m` in a finite set of modules: the intersection
/// of the kernels of all maps from `m` into them. Returns the reject, the
/// factor module and the canonical projection.
///
/// The quotient is the largest factor of `m` cogenerated by `theta`; when it
/// lies in `Add(theta)` the projection is the (unique-up-to-iso) epic left
/// approximation into that subcategory.
pub fn reject_theta(
    m: &Representation,
    theta: &[Representation],
) -> Result<(Submodule, Representation, Morphism)> {
    let mut u = Submodule::full(m);
    for t in theta {
        if !same_algebra(t.algebra(), m.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        for f in hom_basis(m, t)? {
            u = u.intersect(&f.kernel());
        }
    }
    let (q, pi) = quotient(m, &u);
    Ok((u, q, pi))
}

/// The reject below a measure bound: the smallest submodule `U` with
/// `mu(M/U) < bound`. Scans the whole submodule lattice for members of the
/// family `F = { V : mu(M/V) < bound }`, intersects them all, and verifies
/// the intersection still lies in `F` (it must: `M/(V n W)` embeds into
/// `M/V + M/W`, so `F` is closed under intersections).
pub fn reject_below(
    m: &Representation,
    bound: &MeasureValue,
    lambda: &LengthFunction,
    caps: &Caps,
) -> Result<(Submodule, Representation)> {
    if m.is_zero() {
        return Ok((Submodule::zero(m), m.clone()));
    }
    if bound.is_empty() {
        return Err(Error::InvalidInput(
            "reject bound must be nonempty for a nonzero module".into(),
        ));
    }
    let lattice = all_submodules(m, caps)?;
    let mut members: Vec<usize> = Vec::new();
    for i in 0..lattice.len() {
        let v = lattice.node(i);
        let (q, _) = quotient(m, v);
        let (mu, _) = gr_measure(&q, lambda, caps)?;
        if mu < *bound {
            members.push(i);
        }
    }
    // The full module is always a member (mu(0) is the empty measure).
    assert!(!members.is_empty());
    let mut u = lattice.node(members[0]).clone();
    for &i in &members[1..] {
        u = u.intersect(lattice.node(i));
    }
    let (q, _) = quotient(m, &u);
    let (mu, _) = gr_measure(&q, lambda, caps)?;
    if mu >= *bound {
        return Err(Error::CrossCheckMismatch(
            "reject family is not closed under intersection".into(),
        ));
    }
    for &i in &members {
        debug_assert!(lattice.node(i).contains(&u));
    }
    Ok((u, q))
}

// ---------------------------------------------------------------------------
// Chains.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    Gr,
    Iyama,
    Adr,
}

impl std::fmt::Display for ChainKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainKind::Gr => write!(f, "gr"),
            ChainKind::Iyama => write!(f, "iyama"),
            ChainKind::Adr => write!(f, "adr"),
        }
    }
}

pub struct ChainStep {
    pub module: Representation,
    pub measure: Option<MeasureValue>,
}

pub struct PhiClass {
    pub representative: Representation,
    /// 1-based level: the largest `i` with the class a summand of `X_i`.
    pub level: usize,
    /// Total multiplicity in the sum of all steps.
    pub multiplicity: usize,
    pub measure: Option<MeasureValue>,
}

pub struct RejectiveChain {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub kind: ChainKind,
    pub lambda: Option<LengthFunction>,
    pub steps: Vec<ChainStep>,
    pub phi: Vec<PhiClass>,
}

impl RejectiveChain {
    pub fn ell(&self) -> usize {
        self.steps.len()
    }

    /// Indecomposable classes of the level-`i` subcategory (1-based).
    pub fn classes_at_level(&self, i: usize) -> Vec<&PhiClass> {
        self.phi.iter().filter(|c| c.level >= i).collect()
    }

    /// The level lists consumed by `verify_chain`.
    pub fn subcategory_levels(&self) -> Vec<Vec<Representation>> {
        (1..=self.ell())
            .map(|i| {
                self.phi
                    .iter()
                    .filter(|c| c.level >= i)
                    .map(|c| c.representative.clone())
                    .collect()
            })
            .collect()
    }
}

/// Incremental iso-class registry with measure memoization.
struct ClassRegistry {
    entries: Vec<ClassEntry>,
}

struct ClassEntry {
    rep: Representation,
    measure: Option<MeasureValue>,
    /// count of copies per chain step (index 0 = X_1).
    counts: Vec<usize>,
}

impl ClassRegistry {
    fn new() -> Self {
        ClassRegistry {
            entries: Vec::new(),
        }
    }

    fn classify(
        &mut self,
        part: &Representation,
        caps: &Caps,
    ) -> Result<usize> {
        for (idx, entry) in self.entries.iter().enumerate() {
            if entry.rep.dims() == part.dims()
                && is_isomorphic(&entry.rep, part, caps)?.is_some()
            {
                return Ok(idx);
            }
        }
        self.entries.push(ClassEntry {
            rep: part.clone(),
            measure: None,
            counts: Vec::new(),
        });
        Ok(self.entries.len() - 1)
    }

    fn measure_of(
        &mut self,
        idx: usize,
        lambda: &LengthFunction,
        caps: &Caps,
    ) -> Result<MeasureValue> {
        if let Some(mu) = &self.entries[idx].measure {
            return Ok(mu.clone());
        }
        let (mu, _) = gr_measure(&self.entries[idx].rep.clone(), lambda, caps)?;
        self.entries[idx].measure = Some(mu.clone());
        Ok(mu)
    }

    fn record(&mut self, idx: usize, step: usize) {
        let counts = &mut self.entries[idx].counts;
        if counts.len() <= step {
            counts.resize(step + 1, 0);
        }
        counts[step] += 1;
    }
}

/// The weighted Gabriel-Roiter chain: `X_1 = X`, and `X_{i+1}` is the
/// largest factor of `X_i` with measure strictly below `mu(X_i)`. Rejects
/// preserve finite direct sums, so the step is computed summandwise.
pub fn gr_chain(
    x: &Representation,
    lambda: &LengthFunction,
    caps: &Caps,
) -> Result<RejectiveChain> {
    if x.is_zero() {
        return Err(Error::InvalidInput("chain needs a nonzero start".into()));
    }
    if lambda.weights().len() != x.dims().len() {
        return Err(Error::DimensionMismatch(
            "one weight per vertex required".into(),
        ));
    }
    let mut registry = ClassRegistry::new();
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut current = x.clone();
    while !current.is_zero() {
        let step_idx = steps.len();
        let dec = decompose(&current, caps)?;
        let mut part_classes = Vec::with_capacity(dec.summands.len());
        for s in &dec.summands {
            let cls = registry.classify(&s.module, caps)?;
            registry.record(cls, step_idx);
            part_classes.push(cls);
        }
        let mut mu_step: Option<MeasureValue> = None;
        for &cls in &part_classes {
            let mu = registry.measure_of(cls, lambda, caps)?;
            if mu_step.as_ref().is_none_or(|m| mu > *m) {
                mu_step = Some(mu);
            }
        }
        let mu_step = mu_step.expect("nonzero module has summands");
        if let Some(prev) = steps.last() {
            let prev_mu = prev.measure.as_ref().unwrap();
            assert!(
                mu_step < *prev_mu,
                "chain measures must strictly decrease"
            );
        }
        steps.push(ChainStep {
            module: current.clone(),
            measure: Some(mu_step.clone()),
        });
        let mut next_parts: Vec<Representation> = Vec::new();
        for (s, &cls) in dec.summands.iter().zip(&part_classes) {
            let mu = registry.measure_of(cls, lambda, caps)?;
            if mu < mu_step {
                // The zero submodule is already in the reject family.
                next_parts.push(s.module.clone());
            } else {
                let (_, q) = reject_below(&s.module, &mu_step, lambda, caps)?;
                if !q.is_zero() {
                    next_parts.push(q);
                }
            }
        }
        let next = if next_parts.is_empty() {
            Representation::zero_module(x.algebra().clone())
        } else {
            direct_sum(&next_parts)?.module
        };
        assert!(
            next.total_dim() < current.total_dim(),
            "each chain step is a proper quotient"
        );
        current = next;
    }
    // Levels: by measure matching, cross-checked against membership.
    let step_measures: Vec<&MeasureValue> =
        steps.iter().map(|s| s.measure.as_ref().unwrap()).collect();
    let mut phi = Vec::new();
    for entry in &mut registry.entries {
        let mu = entry.measure.clone().expect("classified parts were measured");
        let matches: Vec<usize> = step_measures
            .iter()
            .enumerate()
            .filter(|(_, m)| ***m == mu)
            .map(|(i, _)| i + 1)
            .collect();
        if matches.len() != 1 {
            return Err(Error::CrossCheckMismatch(format!(
                "class with measure {mu} matches steps {matches:?}, expected exactly one"
            )));
        }
        let level = matches[0];
        let membership_level = entry
            .counts
            .iter()
            .rposition(|&c| c > 0)
            .map(|i| i + 1)
            .expect("every class occurs somewhere");
        if membership_level != level {
            return Err(Error::CrossCheckMismatch(format!(
                "measure level {level} disagrees with membership level {membership_level}"
            )));
        }
        phi.push(PhiClass {
            representative: entry.rep.clone(),
            level,
            multiplicity: entry.counts.iter().sum(),
            measure: Some(mu),
        });
    }
    phi.sort_by_key(|c| c.level);
    Ok(RejectiveChain {
        algebra: x.algebra().clone(),
        kind: ChainKind::Gr,
        lambda: Some(lambda.clone()),
        steps,
        phi,
    })
}

/// Iyama's chain of submodules: `X_{i+1}` is the sum of the images of the
/// radical endomorphisms of `X_i`, assembled blockwise from the
/// decomposition of `X_i`.
pub fn iyama_chain(x: &Representation, caps: &Caps) -> Result<RejectiveChain> {
    if x.is_zero() {
        return Err(Error::InvalidInput("chain needs a nonzero start".into()));
    }
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut current = x.clone();
    while !current.is_zero() {
        steps.push(ChainStep {
            module: current.clone(),
            measure: None,
        });
        let spanning = radical_endomorphism_spanning_set(&current, caps)?;
        let mut next_sub = Submodule::zero(&current);
        for f in &spanning {
            next_sub = next_sub.sum(&f.image());
        }
        assert!(
            next_sub.total_dim() < current.total_dim(),
            "the radical trace is a proper submodule"
        );
        let (next, _) = next_sub.to_representation();
        current = next;
    }
    let phi = membership_phi(&steps, caps)?;
    Ok(RejectiveChain {
        algebra: x.algebra().clone(),
        kind: ChainKind::Iyama,
        lambda: None,
        steps,
        phi,
    })
}

/// A spanning set of `Rad(M, M)`: all homs between non-isomorphic
/// indecomposable summand copies, plus radical endomorphisms transported
/// along fixed isomorphisms between isomorphic copies.
fn radical_endomorphism_spanning_set(
    m: &Representation,
    caps: &Caps,
) -> Result<Vec<Morphism>> {
    let dec = decompose(m, caps)?;
    let k = dec.summands.len();
    // class id and a fixed iso representative -> member per summand
    let mut class_of = vec![usize::MAX; k];
    let mut iso_from_rep: Vec<Option<Morphism>> = (0..k).map(|_| None).collect();
    for (cidx, group) in dec.groups.iter().enumerate() {
        for &member in &group.members {
            class_of[member] = cidx;
            let rep_mod = &dec.summands[group.representative].module;
            let iso = if member == group.representative {
                Morphism::identity(rep_mod)
            } else {
                is_isomorphic(rep_mod, &dec.summands[member].module, caps)?
                    .expect("grouped summands are isomorphic")
            };
            iso_from_rep[member] = Some(iso);
        }
    }
    let mut local_rads: Vec<Vec<Morphism>> = Vec::with_capacity(dec.groups.len());
    for group in &dec.groups {
        let rep_mod = &dec.summands[group.representative].module;
        let (rad, _) = local_radical(rep_mod, caps)?;
        local_rads.push(rad);
    }
    let mut spanning = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let si = &dec.summands[i];
            let sj = &dec.summands[j];
            if class_of[i] != class_of[j] {
                for h in hom_basis(&si.module, &sj.module)? {
                    spanning.push(sj.embedding.compose(&h).compose(&si.projection));
                }
            } else {
                let c = class_of[i];
                let iso_i = iso_from_rep[i].as_ref().unwrap();
                let iso_j = iso_from_rep[j].as_ref().unwrap();
                let back_i = iso_i.inverse()?;
                for r in &local_rads[c] {
                    // part_i -> rep -> (radical) rep -> part_j
                    let map = iso_j.compose(r).compose(&back_i);
                    spanning.push(sj.embedding.compose(&map).compose(&si.projection));
                }
            }
        }
    }
    Ok(spanning)
}

/// The ADR chain: `X_i` is the sum of the radical quotients
/// `Lambda/rad^j(Lambda)` for `j <= LL - i + 1`, of length LL = the Loewy
/// length of the algebra.
pub fn adr_chain(alg: &Arc<BoundQuiverAlgebra>, caps: &Caps) -> Result<RejectiveChain> {
    let reg = regular(alg)?;
    let ll = loewy_length(&reg);
    assert!(ll >= 1);
    // rad^j as submodules of the regular module.
    let mut rad_powers: Vec<Submodule> = vec![Submodule::full(&reg)];
    for _ in 0..ll {
        let prev = rad_powers.last().unwrap();
        rad_powers.push(radical_of_submodule(&reg, prev));
    }
    // Lambda / rad^j for j = 1..=LL
    let layer_quotients: Vec<Representation> = (1..=ll)
        .map(|j| quotient(&reg, &rad_powers[j]).0)
        .collect();
    let mut steps = Vec::with_capacity(ll);
    for i in 1..=ll {
        let parts: Vec<Representation> = (1..=(ll - i + 1))
            .map(|j| layer_quotients[j - 1].clone())
            .collect();
        steps.push(ChainStep {
            module: direct_sum(&parts)?.module,
            measure: None,
        });
    }
    let phi = membership_phi(&steps, caps)?;
    Ok(RejectiveChain {
        algebra: alg.clone(),
        kind: ChainKind::Adr,
        lambda: None,
        steps,
        phi,
    })
}

/// rad(U) inside the parent: the sum of the arrow images of `U`.
fn radical_of_submodule(parent: &Representation, u: &Submodule) -> Submodule {
    let mut spaces: Vec<Subspace> = parent
        .dims()
        .iter()
        .map(|&d| Subspace::zero(d, parent.field()))
        .collect();
    for (i, arrow) in parent.algebra().quiver().arrows().iter().enumerate() {
        let image = u.space(arrow.from).image_under(parent.arrow_matrix(i));
        spaces[arrow.to] = spaces[arrow.to].sum(&image).expect("same ambient");
    }
    Submodule::new(parent.clone(), spaces).expect("radical of a submodule is a submodule")
}

/// Phi with levels from membership (the largest step index where a class
/// appears as a summand).
fn membership_phi(steps: &[ChainStep], caps: &Caps) -> Result<Vec<PhiClass>> {
    let mut registry = ClassRegistry::new();
    for (step_idx, step) in steps.iter().enumerate() {
        let dec = decompose(&step.module, caps)?;
        for s in &dec.summands {
            let cls = registry.classify(&s.module, caps)?;
            registry.record(cls, step_idx);
        }
    }
    let mut phi: Vec<PhiClass> = registry
        .entries
        .iter()
        .map(|e| PhiClass {
            representative: e.rep.clone(),
            level: e.counts.iter().rposition(|&c| c > 0).unwrap() + 1,
            multiplicity: e.counts.iter().sum(),
            measure: None,
        })
        .collect();
    phi.sort_by_key(|c| c.level);
    Ok(phi)
}

// ---------------------------------------------------------------------------
// Chain verification.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct LevelVerdict {
    pub level: usize,
    pub left_rejective: bool,
    pub prerejective: bool,
    pub rejective: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ChainVerdict {
    pub levels: Vec<LevelVerdict>,
    pub left_rejective: bool,
    pub prerejective: bool,
    pub rejective: bool,
}

fn morphism_to_vec(f: &Morphism) -> Vec<u64> {
    let mut out = Vec::new();
    for b in f.blocks() {
        for i in 0..b.rows() {
            out.extend_from_slice(b.row(i));
        }
    }
    out
}

fn hom_vec_len(y: &Representation, z: &Representation) -> usize {
    y.dims()
        .iter()
        .zip(z.dims())
        .map(|(&a, &b)| a * b)
        .sum()
}

/// Verify the chain-of-subcategories conditions for levels given as lists of
/// indecomposable representatives: `levels[0]` describes the largest
/// subcategory, and each later list must be contained in the previous one up
/// to isomorphism.
pub fn verify_chain(
    levels: &[Vec<Representation>],
    caps: &Caps,
) -> Result<ChainVerdict> {
    if levels.is_empty() || levels[0].is_empty() {
        return Err(Error::InvalidInput("empty chain".into()));
    }
    let ell = levels.len();
    // identify every class with its position in the level-1 list
    let classes: Vec<Representation> = levels[0].clone();
    let find_class = |m: &Representation, caps: &Caps| -> Result<Option<usize>> {
        for (i, c) in classes.iter().enumerate() {
            if c.dims() == m.dims() && is_isomorphic(c, m, caps)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    };
    let mut level_of = vec![1usize; classes.len()];
    for (li, list) in levels.iter().enumerate().skip(1) {
        for m in list {
            let Some(idx) = find_class(m, caps)? else {
                return Err(Error::InvalidInput(
                    "levels are not nested up to isomorphism".into(),
                ));
            };
            if level_of[idx] != li {
                return Err(Error::InvalidInput(
                    "levels must be nested contiguously".into(),
                ));
            }
            level_of[idx] = li + 1;
        }
    }
    // The indecomposability of the inputs is assumed; duplicates per level
    // are tolerated (they describe the same subcategory).
    let members_at = |i: usize| -> Vec<usize> {
        (0..classes.len()).filter(|&c| level_of[c] >= i).collect()
    };
    let mut verdicts = Vec::with_capacity(ell);
    for i in 1..=ell {
        let theta_i: Vec<Representation> =
            members_at(i).iter().map(|&c| classes[c].clone()).collect();
        let theta_next: Vec<Representation> = members_at(i + 1)
            .iter()
            .map(|&c| classes[c].clone())
            .collect();
        let mut failures = Vec::new();
        // (i) left rejectivity of C_i in C_1 through the canonical reject
        // quotient: it must be epic (it is a quotient map), decompose into
        // C_i, and be universal.
        let mut left_rejective = true;
        for y in &classes {
            let (_, y_prime, pi) = reject_theta(y, &theta_i)?;
            if !pi.is_epi() {
                left_rejective = false;
                failures.push(format!(
                    "approximation of dims {:?} is not epic",
                    y.dims()
                ));
                continue;
            }
            // target decomposes into members of C_i
            if !y_prime.is_zero() {
                let dec = decompose(&y_prime, caps)?;
                for s in &dec.summands {
                    let found = {
                        let mut ok = false;
                        for t in &theta_i {
                            if t.dims() == s.module.dims()
                                && is_isomorphic(t, &s.module, caps)?.is_some()
                            {
                                ok = true;
                                break;
                            }
                        }
                        ok
                    };
                    if !found {
                        left_rejective = false;
                        failures.push(format!(
                            "reject quotient of dims {:?} has a summand of dims {:?} outside level {i}",
                            y.dims(),
                            s.module.dims()
                        ));
                    }
                }
            }
            // universality: Hom(Y', M) -> Hom(Y, M) surjective for M in C_i
            for t in &theta_i {
                let composed: Vec<Vec<u64>> = hom_basis(&y_prime, t)?
                    .iter()
                    .map(|h| morphism_to_vec(&h.compose(&pi)))
                    .collect();
                let dim_target = hom_basis(y, t)?.len();
                let span = Subspace::from_vectors(
                    &composed,
                    hom_vec_len(y, t),
                    y.field(),
                );
                if span.dim() != dim_target {
                    left_rejective = false;
                    failures.push(format!(
                        "approximation of dims {:?} is not universal against dims {:?}",
                        y.dims(),
                        t.dims()
                    ));
                }
            }
        }
        // Factorization spaces through C_{i+1}.
        let factor_space = |y: &Representation, z: &Representation| -> Result<Subspace> {
            let mut vectors: Vec<Vec<u64>> = Vec::new();
            for t in &theta_next {
                let y_to_t = hom_basis(y, t)?;
                let t_to_z = hom_basis(t, z)?;
                for g in &y_to_t {
                    for h in &t_to_z {
                        vectors.push(morphism_to_vec(&h.compose(g)));
                    }
                }
            }
            Ok(Subspace::from_vectors(
                &vectors,
                hom_vec_len(y, z),
                y.field(),
            ))
        };
        let mut prerejective = true;
        let member_idx = members_at(i);
        for &ci in &member_idx {
            for &cj in &member_idx {
                if ci == cj {
                    continue;
                }
                let (y, z) = (&classes[ci], &classes[cj]);
                let full_dim = hom_basis(y, z)?.len();
                let f = factor_space(y, z)?;
                if f.dim() != full_dim {
                    prerejective = false;
                    failures.push(format!(
                        "a map {:?} -> {:?} does not factor through level {}",
                        y.dims(),
                        z.dims(),
                        i + 1
                    ));
                }
            }
        }
        // Rejectivity additionally requires radical endomorphisms to factor.
        let mut rejective = prerejective;
        for &ci in &member_idx {
            let y = &classes[ci];
            let (rad, _) = local_radical(y, caps)?;
            if rad.is_empty() {
                continue;
            }
            let f = factor_space(y, y)?;
            for r in &rad {
                if !f.contains_vector(&morphism_to_vec(r)) {
                    rejective = false;
                    failures.push(format!(
                        "a radical endomorphism of dims {:?} does not factor through level {}",
                        y.dims(),
                        i + 1
                    ));
                    break;
                }
            }
        }
        verdicts.push(LevelVerdict {
            level: i,
            left_rejective,
            prerejective,
            rejective: rejective && left_rejective,
            failures,
        });
    }
    Ok(ChainVerdict {
        left_rejective: verdicts.iter().all(|v| v.left_rejective),
        prerejective: verdicts.iter().all(|v| v.prerejective && v.left_rejective),
        rejective: verdicts.iter().all(|v| v.rejective),
        levels: verdicts,
    })
}

/// Verify a chain of submodules (right-handed data) by dualizing to the
/// opposite algebra and running the left-handed verifier there.
pub fn verify_chain_dualized(chain: &RejectiveChain, caps: &Caps) -> Result<ChainVerdict> {
    let op = chain.algebra.opposite()?;
    let levels: Vec<Vec<Representation>> = (1..=chain.ell())
        .map(|i| {
            chain
                .phi
                .iter()
                .filter(|c| c.level >= i)
                .map(|c| c.representative.dual(op.clone()))
                .collect()
        })
        .collect();
    verify_chain(&levels, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::submodule_generated;
    use crate::quiver::{projective, simple};

    fn caps() -> Caps {
        Caps::default()
    }

    fn ones(n: usize) -> LengthFunction {
        LengthFunction::ones(n)
    }

    #[test]
    fn trace_examples() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        assert!(trace(std::slice::from_ref(&p1), &p1).unwrap().is_full());
        let l2 = simple(&alg, 1).unwrap();
        let tr = trace(&[l2], &p1).unwrap();
        assert_eq!(tr.dim_vector(), vec![0, 1]); // span{b}
        assert!(trace(&[], &p1).unwrap().is_zero());
    }

    #[test]
    fn reject_below_on_p1_unit_weights() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let bound = MeasureValue::from_ints(&[1, 2, 4]);
        let (u, q) = reject_below(&p1, &bound, &ones(2), &caps()).unwrap();
        assert_eq!(u.dim_vector(), vec![1, 0]); // span{a.a}
        assert_eq!(q.dims(), &[2, 1]);
    }

    #[test]
    fn reject_below_everything_when_bound_is_minimal() {
        // X3 = uniserial (1,1) over lambda1 with weights (1,2): bound {2,3}
        // rejects the whole module.
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[1, 2]).unwrap();
        let u = submodule_generated(&p1, &[(0, vec![0, 1, 0])]);
        let (x3, _) = quotient(&p1, &u);
        assert_eq!(x3.dims(), &[1, 1]);
        let bound = MeasureValue::from_ints(&[2, 3]);
        let (r, q) = reject_below(&x3, &bound, &lambda, &caps()).unwrap();
        assert!(r.is_full());
        assert!(q.is_zero());
    }

    #[test]
    fn reject_below_trivial_when_bound_exceeds_measure() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        // mu(L1) = {1} < {1,2}
        let bound = MeasureValue::from_ints(&[1, 2]);
        let (u, q) = reject_below(&l1, &bound, &ones(2), &caps()).unwrap();
        assert!(u.is_zero());
        assert!(q == l1);
    }

    #[test]
    fn gr_chain_of_p1_unit_weights() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let chain = gr_chain(&p1, &ones(2), &caps()).unwrap();
        assert_eq!(chain.ell(), 3);
        let dims: Vec<Vec<usize>> = chain.steps.iter().map(|s| s.module.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![3, 1], vec![2, 1], vec![1, 0]]);
        let measures: Vec<MeasureValue> = chain
            .steps
            .iter()
            .map(|s| s.measure.clone().unwrap())
            .collect();
        assert_eq!(measures[0], MeasureValue::from_ints(&[1, 2, 4]));
        assert_eq!(measures[1], MeasureValue::from_ints(&[1, 3]));
        assert_eq!(measures[2], MeasureValue::from_ints(&[1]));
        assert_eq!(chain.phi.len(), 3);
        let levels: Vec<usize> = chain.phi.iter().map(|c| c.level).collect();
        assert_eq!(levels, vec![1, 2, 3]);
    }

    #[test]
    fn gr_chain_of_p1_weights_two_one() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::from_ints(&[2, 1]).unwrap();
        let chain = gr_chain(&p1, &lambda, &caps()).unwrap();
        assert_eq!(chain.ell(), 4);
        let dims: Vec<Vec<usize>> = chain.steps.iter().map(|s| s.module.dims().to_vec()).collect();
        assert_eq!(
            dims,
            vec![vec![3, 1], vec![3, 0], vec![2, 0], vec![1, 0]]
        );
    }

    #[test]
    fn iyama_chain_of_simple_and_double_simple() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let chain = iyama_chain(&l1, &caps()).unwrap();
        assert_eq!(chain.ell(), 1);
        let m = direct_sum(&[l1.clone(), l1]).unwrap().module;
        let chain = iyama_chain(&m, &caps()).unwrap();
        assert_eq!(chain.ell(), 1);
    }

    #[test]
    fn iyama_chain_of_p1() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let chain = iyama_chain(&p1, &caps()).unwrap();
        assert_eq!(chain.ell(), 3);
        let dims: Vec<Vec<usize>> = chain.steps.iter().map(|s| s.module.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![3, 1], vec![2, 0], vec![1, 0]]);
    }

    #[test]
    fn adr_chain_lengths() {
        let semi = fixtures::semisimple2(2).unwrap();
        assert_eq!(adr_chain(&semi, &caps()).unwrap().ell(), 1);
        let l1 = fixtures::lambda1(2).unwrap();
        assert_eq!(adr_chain(&l1, &caps()).unwrap().ell(), 3);
        let kron = fixtures::kronecker(2).unwrap();
        assert_eq!(adr_chain(&kron, &caps()).unwrap().ell(), 2);
    }

    #[test]
    fn gr_chain_verifies_rejective() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let chain = gr_chain(&p1, &ones(2), &caps()).unwrap();
        let verdict = verify_chain(&chain.subcategory_levels(), &caps()).unwrap();
        assert!(verdict.rejective, "{:?}", verdict);
    }

    #[test]
    fn kronecker_regular_chain_is_prerejective_but_not_rejective() {
        let alg = fixtures::kronecker(2).unwrap();
        let r = fixtures::kronecker_regular(&alg).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let levels = vec![vec![r, l1.clone()], vec![l1]];
        let verdict = verify_chain(&levels, &caps()).unwrap();
        assert!(verdict.prerejective, "{:?}", verdict);
        assert!(!verdict.rejective);
    }

    #[test]
    fn single_level_simple_chain_is_rejective() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let verdict = verify_chain(&[vec![l1]], &caps()).unwrap();
        assert!(verdict.rejective);
    }

    #[test]
    fn iyama_chain_verifies_after_dualizing() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let chain = iyama_chain(&p1, &caps()).unwrap();
        let verdict = verify_chain_dualized(&chain, &caps()).unwrap();
        assert!(verdict.rejective, "{:?}", verdict);
    }

    #[test]
    fn adr_chain_verifies_rejective() {
        let alg = fixtures::lambda1(2).unwrap();
        let chain = adr_chain(&alg, &caps()).unwrap();
        let verdict = verify_chain(&chain.subcategory_levels(), &caps()).unwrap();
        assert!(verdict.rejective, "{:?}", verdict);
    }
}
