//! The Krull-Schmidt layer: indecomposable decomposition, isomorphism
//! testing, certified-local endomorphism rings and radicals of endomorphism
//! algebras.
//!
//! Everything here works on a neutral "graded linear system" (spaces indexed
//! by slots plus a list of maps between slots). A quiver representation is
//! the case slots = vertices, maps = arrows; a module over a
//! structure-constant algebra is the case of a single slot with one map per
//! algebra generator. This keeps one implementation of the search machinery
//! for both.
//!
//! Certification contract: "indecomposable" is only ever declared after an
//! exhaustive sweep of the endomorphism algebra proves every element is
//! nilpotent or invertible (hence End is local). Randomized searches are
//! seeded and can only *find* witnesses (splittings, isomorphisms), never
//! certify their absence; when exhaustion is impossible under the caps the
//! caller gets `SearchCapExceeded`.

use crate::config::{Caps, SplitMix64};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::module::{hom_basis, same_algebra, Morphism, Representation, Submodule};
use crate::subspace::Subspace;

// ---------------------------------------------------------------------------
// Graded linear systems.
// ---------------------------------------------------------------------------

/// Spaces indexed by slots, with maps between them. Two systems are
/// "parallel" when their map lists share the (from, to) pattern, which is
/// what hom spaces are defined against.
#[derive(Clone, Debug)]
pub(crate) struct LinSystem {
    pub field: PrimeField,
    pub dims: Vec<usize>,
    pub maps: Vec<(usize, usize, Matrix)>,
}

/// A hom between parallel systems: one matrix per slot.
pub(crate) type GradedMap = Vec<Matrix>;

impl LinSystem {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn from_representation(m: &Representation) -> Self {
        let maps = m
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| (a.from, a.to, m.arrow_matrix(i).clone()))
            .collect();
        LinSystem {
            field: m.field(),
            dims: m.dims().to_vec(),
            maps,
        }
    }

    /// Basis of the space of graded maps `self -> other` commuting with all
    /// system maps.
    pub fn hom(&self, other: &LinSystem) -> Vec<GradedMap> {
        assert_eq!(self.maps.len(), other.maps.len(), "parallel systems");
        let field = self.field;
        let ns = self.dims.len();
        let mut offsets = vec![0usize; ns + 1];
        for v in 0..ns {
            offsets[v + 1] = offsets[v] + other.dims[v] * self.dims[v];
        }
        let unknowns = offsets[ns];
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (k, (s, t, ma)) in self.maps.iter().enumerate() {
            let (os, ot, na) = {
                let (s2, t2, na) = &other.maps[k];
                assert_eq!((s2, t2), (s, t), "parallel systems");
                (*s2, *t2, na)
            };
            for i in 0..other.dims[ot] {
                for j in 0..self.dims[*s] {
                    let mut row = vec![0u64; unknowns];
                    for kk in 0..self.dims[*t] {
                        let idx = offsets[*t] + i * self.dims[*t] + kk;
                        row[idx] = field.add(row[idx], ma.get(kk, j));
                    }
                    for l in 0..other.dims[os] {
                        let idx = offsets[os] + l * self.dims[*s] + j;
                        row[idx] = field.sub(row[idx], na.get(i, l));
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = Matrix::from_row_vectors(&rows, unknowns, field).kernel_matrix();
        (0..kernel.rows())
            .map(|r| {
                let flat = kernel.row(r);
                (0..ns)
                    .map(|v| {
                        let mut b = Matrix::zeros(other.dims[v], self.dims[v], field);
                        for i in 0..other.dims[v] {
                            for j in 0..self.dims[v] {
                                b.set(i, j, flat[offsets[v] + i * self.dims[v] + j]);
                            }
                        }
                        b
                    })
                    .collect()
            })
            .collect()
    }

    pub fn endos(&self) -> Vec<GradedMap> {
        self.hom(self)
    }

    /// Restrict the system to an invariant graded subspace, returning the
    /// subsystem in its own coordinates plus the per-slot embedding matrices
    /// (columns = subspace basis vectors).
    pub fn restrict(&self, spaces: &[Subspace]) -> (LinSystem, Vec<Matrix>) {
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let maps = self
            .maps
            .iter()
            .map(|(s, t, m)| {
                let mut out = Matrix::zeros(dims[*t], dims[*s], self.field);
                for (col, v) in spaces[*s].basis_vectors().enumerate() {
                    let img = m.apply(v);
                    let coords = spaces[*t]
                        .coords_of(&img)
                        .expect("subspace must be invariant");
                    for (row, &c) in coords.iter().enumerate() {
                        out.set(row, col, c);
                    }
                }
                (*s, *t, out)
            })
            .collect();
        let embeds = spaces.iter().map(|s| s.embedding_matrix()).collect();
        (
            LinSystem {
                field: self.field,
                dims,
                maps,
            },
            embeds,
        )
    }
}

fn graded_identity(sys: &LinSystem) -> GradedMap {
    sys.dims
        .iter()
        .map(|&d| Matrix::identity(d, sys.field))
        .collect()
}

fn graded_add(f: &GradedMap, g: &GradedMap) -> GradedMap {
    f.iter().zip(g).map(|(a, b)| a.add(b)).collect()
}

fn graded_scale(f: &GradedMap, c: u64) -> GradedMap {
    f.iter().map(|a| a.scale(c)).collect()
}

fn graded_combine(basis: &[GradedMap], coeffs: &[u64], sys: &LinSystem) -> GradedMap {
    let mut acc: GradedMap = sys
        .dims
        .iter()
        .map(|&d| Matrix::zeros(d, d, sys.field))
        .collect();
    for (f, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = graded_add(&acc, &graded_scale(f, c));
        }
    }
    acc
}

/// Rank of a graded map (sum of slot ranks).
fn graded_rank(f: &GradedMap) -> usize {
    f.iter().map(|m| m.rank()).sum()
}

fn graded_is_invertible(f: &GradedMap) -> bool {
    f.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
}

/// `f` raised to a power >= total dimension, where rank has stabilized.
fn fitting_power(f: &GradedMap, total: usize) -> GradedMap {
    let mut g = f.clone();
    let mut e = 1usize;
    while e < total.max(1) {
        g = g.iter().map(|m| m.mul(m)).collect();
        e *= 2;
    }
    g
}

// ---------------------------------------------------------------------------
// Fitting splits and certified decomposition.
// ---------------------------------------------------------------------------

/// The graded kernel and image of `g` (per-slot subspaces).
fn graded_kernel_image(g: &GradedMap) -> (Vec<Subspace>, Vec<Subspace>) {
    let kernels = g
        .iter()
        .map(|m| Subspace::from_spanning(&m.kernel_matrix()))
        .collect();
    let images = g
        .iter()
        .map(|m| Subspace::from_spanning(&m.transpose()))
        .collect();
    (kernels, images)
}

/// Fitting lemma on one endomorphism: with `g = f^(2^ceil(log2 dim))`,
/// `ker g` and `im g` decompose the system unless `f` is nilpotent or
/// invertible.
fn fitting_subspaces(sys: &LinSystem, f: &GradedMap) -> Option<(Vec<Subspace>, Vec<Subspace>)> {
    let total = sys.total_dim();
    let g = fitting_power(f, total);
    let r = graded_rank(&g);
    if r == 0 || r == total {
        return None;
    }
    let (kernels, images) = graded_kernel_image(&g);
    debug_assert_eq!(
        kernels.iter().map(|s| s.dim()).sum::<usize>() + r,
        total,
        "fitting dimensions must add up"
    );
    Some((kernels, images))
}

/// One indecomposable summand of a decomposition, in its own coordinates,
/// with the embedding into the original.
struct SysPart {
    system: LinSystem,
    embed: Vec<Matrix>,
}

/// Split a system into indecomposables with certified local endomorphism
/// rings. See the module doc for the certification contract.
fn decompose_system(sys: &LinSystem, caps: &Caps, rng: &mut SplitMix64) -> Result<Vec<SysPart>> {
    if sys.total_dim() == 0 {
        return Ok(Vec::new());
    }
    let endos = sys.endos();
    let e = endos.len();
    assert!(e >= 1);
    if e == 1 {
        // End(M) = k: indecomposable.
        return Ok(vec![SysPart {
            system: sys.clone(),
            embed: graded_identity(sys),
        }]);
    }
    let p = sys.field.p();
    let split = find_split(sys, &endos, caps, rng)?;
    let Some((kernels, images)) = split else {
        // Exhaustive sweep proved every endomorphism nilpotent or invertible.
        return Ok(vec![SysPart {
            system: sys.clone(),
            embed: graded_identity(sys),
        }]);
    };
    let _ = p;
    let (ksys, kemb) = sys.restrict(&kernels);
    let (isys, iemb) = sys.restrict(&images);
    let mut parts = Vec::new();
    for (sub, emb) in [(ksys, kemb), (isys, iemb)] {
        for part in decompose_system(&sub, caps, rng)? {
            let embed = emb
                .iter()
                .zip(&part.embed)
                .map(|(outer, inner)| outer.mul(inner))
                .collect();
            parts.push(SysPart {
                system: part.system,
                embed,
            });
        }
    }
    Ok(parts)
}

/// Search for a splitting endomorphism. `Ok(None)` certifies there is none
/// (endomorphism ring is local); `Err(SearchCapExceeded)` when the sweep is
/// too large and the randomized phases found nothing.
fn find_split(
    sys: &LinSystem,
    endos: &[GradedMap],
    caps: &Caps,
    rng: &mut SplitMix64,
) -> Result<Option<(Vec<Subspace>, Vec<Subspace>)>> {
    let p = sys.field.p();
    let e = endos.len();
    let space: u128 = (p as u128)
        .checked_pow(e as u32)
        .unwrap_or(u128::MAX);
    if space <= caps.max_enum_field_power {
        // Deterministic exhaustive sweep; certifies locality on failure.
        let mut coeffs = vec![0u64; e];
        loop {
            // odometer increment
            let mut i = 0;
            while i < e {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == e {
                return Ok(None);
            }
            let f = graded_combine(endos, &coeffs, sys);
            if let Some(split) = fitting_subspaces(sys, &f) {
                return Ok(Some(split));
            }
        }
    }
    // Cheap deterministic phases: basis elements with scalar shifts, then
    // pairwise sums with shifts.
    let id = graded_identity(sys);
    for f in endos {
        for c in 0..p {
            let shifted = graded_add(f, &graded_scale(&id, c));
            if let Some(split) = fitting_subspaces(sys, &shifted) {
                return Ok(Some(split));
            }
        }
    }
    for i in 0..e {
        for j in (i + 1)..e {
            let sum = graded_add(&endos[i], &endos[j]);
            for c in 0..p {
                let shifted = graded_add(&sum, &graded_scale(&id, c));
                if let Some(split) = fitting_subspaces(sys, &shifted) {
                    return Ok(Some(split));
                }
            }
        }
    }
    // Seeded random combinations.
    for _ in 0..caps.random_trials {
        let coeffs: Vec<u64> = (0..e).map(|_| rng.below(p)).collect();
        let f = graded_combine(endos, &coeffs, sys);
        if let Some(split) = fitting_subspaces(sys, &f) {
            return Ok(Some(split));
        }
    }
    Err(Error::SearchCapExceeded {
        context: "indecomposability certification",
        needed: space,
        cap: caps.max_enum_field_power,
    })
}

/// Isomorphism search between parallel systems. `Ok(Some(_))` carries a
/// witness; `Ok(None)` is definitive (exhaustive sweep or a structural
/// obstruction); `Err` when neither is affordable.
fn system_iso(
    a: &LinSystem,
    b: &LinSystem,
    caps: &Caps,
    rng: &mut SplitMix64,
) -> Result<Option<GradedMap>> {
    if a.dims != b.dims {
        return Ok(None);
    }
    if a.total_dim() == 0 {
        return Ok(Some(Vec::new()));
    }
    let homs = a.hom(b);
    if homs.is_empty() {
        return Ok(None);
    }
    // Dimension fingerprints: an isomorphism identifies all four spaces.
    let e_a = a.endos().len();
    let e_b = b.endos().len();
    let h_ab = homs.len();
    let h_ba = b.hom(a).len();
    if e_a != e_b || h_ab != e_a || h_ba != e_a {
        return Ok(None);
    }
    let p = a.field.p();
    let h = homs.len();
    let space: u128 = (p as u128).checked_pow(h as u32).unwrap_or(u128::MAX);
    if space <= caps.max_hom_enum {
        let mut coeffs = vec![0u64; h];
        loop {
            let mut i = 0;
            while i < h {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == h {
                return Ok(None);
            }
            let f = graded_combine(&homs, &coeffs, a);
            if graded_is_invertible(&f) {
                return Ok(Some(f));
            }
        }
    }
    for _ in 0..caps.random_trials {
        let coeffs: Vec<u64> = (0..h).map(|_| rng.below(p)).collect();
        let f = graded_combine(&homs, &coeffs, a);
        if graded_is_invertible(&f) {
            return Ok(Some(f));
        }
    }
    Err(Error::SearchCapExceeded {
        context: "isomorphism search",
        needed: space,
        cap: caps.max_hom_enum,
    })
}

/// Exhaustive local-radical computation: the singular elements of the
/// endomorphism algebra, certified to form a subspace.
///
/// Returns the radical as coefficient vectors in the given endo basis plus
/// the dimension of the division-ring quotient.
fn system_local_radical(
    sys: &LinSystem,
    endos: &[GradedMap],
    caps: &Caps,
) -> Result<(Vec<Vec<u64>>, usize)> {
    let p = sys.field.p();
    let e = endos.len();
    let space: u128 = (p as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    if space > caps.max_enum_field_power {
        return Err(Error::SearchCapExceeded {
            context: "endomorphism enumeration",
            needed: space,
            cap: caps.max_enum_field_power,
        });
    }
    let mut singular: Vec<Vec<u64>> = Vec::new();
    let mut coeffs = vec![0u64; e];
    singular.push(coeffs.clone()); // zero map
    loop {
        let mut i = 0;
        while i < e {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == e {
            break;
        }
        let f = graded_combine(endos, &coeffs, sys);
        if !graded_is_invertible(&f) {
            singular.push(coeffs.clone());
        }
    }
    // For a local ring the singular set is a subspace: its span must have
    // exactly as many points as the set itself.
    let span = Matrix::from_row_vectors(&singular, e, sys.field).rref();
    let s = span.rank;
    let span_points = (p as u128).pow(s as u32);
    if span_points != singular.len() as u128 {
        return Err(Error::NotLocal(format!(
            "singular endomorphisms are not closed under addition \
             ({} of them, span has {} points)",
            singular.len(),
            span_points
        )));
    }
    let rad: Vec<Vec<u64>> = (0..s).map(|r| span.matrix.row(r).to_vec()).collect();
    Ok((rad, e - s))
}

// ---------------------------------------------------------------------------
// Public API on representations.
// ---------------------------------------------------------------------------

/// One summand of a decomposition.
pub struct Summand {
    pub module: Representation,
    pub embedding: Morphism,
    pub projection: Morphism,
}

/// Summands grouped into isomorphism classes.
pub struct IsoGroup {
    /// Index into `summands` of the chosen representative.
    pub representative: usize,
    pub members: Vec<usize>,
}

pub struct Decomposition {
    pub original: Representation,
    pub summands: Vec<Summand>,
    pub groups: Vec<IsoGroup>,
}

impl Decomposition {
    pub fn multiplicity_of(&self, group: usize) -> usize {
        self.groups[group].members.len()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }
}

/// Fitting split along one endomorphism: `(ker f^k, im f^k)` when both are
/// nonzero, `None` when `f` is nilpotent or invertible.
pub fn fitting_split(m: &Representation, f: &Morphism) -> Option<(Submodule, Submodule)> {
    assert!(f.source() == m && f.target() == m, "not an endomorphism");
    let sys = LinSystem::from_representation(m);
    let graded: GradedMap = f.blocks().to_vec();
    let (kernels, images) = fitting_subspaces(&sys, &graded)?;
    let k = Submodule::new(m.clone(), kernels).expect("fitting kernel is a submodule");
    let i = Submodule::new(m.clone(), images).expect("fitting image is a submodule");
    Some((k, i))
}

/// Decompose into indecomposables (certified) and group them by isomorphism.
pub fn decompose(m: &Representation, caps: &Caps) -> Result<Decomposition> {
    let mut rng = SplitMix64::new(caps.seed);
    let sys = LinSystem::from_representation(m);
    let parts = decompose_system(&sys, caps, &mut rng)?;
    // Assemble embeddings as morphisms; projections come from inverting the
    // per-vertex total change of basis.
    let field = m.field();
    let nv = m.dims().len();
    let mut summands = Vec::with_capacity(parts.len());
    // change of basis per vertex: columns = concatenated part embeddings
    let mut basis_cols: Vec<Vec<Vec<u64>>> = vec![Vec::new(); nv];
    for part in &parts {
        for v in 0..nv {
            for j in 0..part.embed[v].cols() {
                let col: Vec<u64> = (0..part.embed[v].rows())
                    .map(|i| part.embed[v].get(i, j))
                    .collect();
                basis_cols[v].push(col);
            }
        }
    }
    let inverses: Vec<Matrix> = (0..nv)
        .map(|v| {
            let d = m.dims()[v];
            let mut change = Matrix::zeros(d, d, field);
            for (j, col) in basis_cols[v].iter().enumerate() {
                for i in 0..d {
                    change.set(i, j, col[i]);
                }
            }
            // invert
            let mut inv = Matrix::zeros(d, d, field);
            for j in 0..d {
                let mut e = vec![0u64; d];
                e[j] = 1;
                let sol = change
                    .solve(&e)
                    .unwrap()
                    .expect("decomposition basis is invertible");
                for i in 0..d {
                    inv.set(i, j, sol[i]);
                }
            }
            inv
        })
        .collect();
    let mut offset = vec![0usize; nv];
    for part in parts {
        let dims = part.system.dims.clone();
        let arrows = part
            .system
            .maps
            .iter()
            .map(|(_, _, mat)| mat.clone())
            .collect();
        let module = Representation::new(m.algebra().clone(), dims.clone(), arrows)?;
        let embedding = Morphism::new(module.clone(), m.clone(), part.embed.clone())?;
        // projection rows = the matching rows of the inverse change of basis
        let proj_blocks: Vec<Matrix> = (0..nv)
            .map(|v| {
                let mut b = Matrix::zeros(dims[v], m.dims()[v], field);
                for i in 0..dims[v] {
                    for j in 0..m.dims()[v] {
                        b.set(i, j, inverses[v].get(offset[v] + i, j));
                    }
                }
                b
            })
            .collect();
        for v in 0..nv {
            offset[v] += dims[v];
        }
        let projection = Morphism::new(m.clone(), module.clone(), proj_blocks)?;
        debug_assert!(projection
            .compose(&embedding)
            .blocks()
            .iter()
            .zip(Morphism::identity(&module).blocks())
            .all(|(a, b)| a == b));
        summands.push(Summand {
            module,
            embedding,
            projection,
        });
    }
    // Group by isomorphism.
    let mut groups: Vec<IsoGroup> = Vec::new();
    for idx in 0..summands.len() {
        let mut placed = false;
        for g in groups.iter_mut() {
            let rep = &summands[g.representative].module;
            if is_isomorphic(rep, &summands[idx].module, caps)?.is_some() {
                g.members.push(idx);
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push(IsoGroup {
                representative: idx,
                members: vec![idx],
            });
        }
    }
    Ok(Decomposition {
        original: m.clone(),
        summands,
        groups,
    })
}

/// Isomorphism test with witness. `Ok(None)` is definitive.
pub fn is_isomorphic(
    m: &Representation,
    n: &Representation,
    caps: &Caps,
) -> Result<Option<Morphism>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let mut rng = SplitMix64::new(caps.seed ^ 0x15a_15a);
    let a = LinSystem::from_representation(m);
    let b = LinSystem::from_representation(n);
    match system_iso(&a, &b, caps, &mut rng)? {
        Some(blocks) => Ok(Some(Morphism::new(m.clone(), n.clone(), blocks)?)),
        None => Ok(None),
    }
}

/// The radical of `End(M)` for indecomposable `M`: the set of singular
/// endomorphisms, certified to be a subspace (hence `M` local). Returns the
/// radical basis and the `F_p`-dimension of the division-ring quotient.
pub fn local_radical(m: &Representation, caps: &Caps) -> Result<(Vec<Morphism>, usize)> {
    let sys = LinSystem::from_representation(m);
    let endos = hom_basis(m, m)?;
    let graded: Vec<GradedMap> = endos.iter().map(|f| f.blocks().to_vec()).collect();
    let (rad_coeffs, division_dim) = system_local_radical(&sys, &graded, caps)?;
    let rad = rad_coeffs
        .iter()
        .map(|coeffs| {
            let mut acc = Morphism::zero(m, m);
            for (f, &c) in endos.iter().zip(coeffs) {
                if c != 0 {
                    acc = acc.add(&f.scale(c));
                }
            }
            acc
        })
        .collect();
    Ok((rad, division_dim))
}

// ---------------------------------------------------------------------------
// Structure-constant algebras and their radicals.
// ---------------------------------------------------------------------------

/// A finite-dimensional algebra given by structure constants.
#[derive(Clone)]
pub struct FDAlgebra {
    pub field: PrimeField,
    pub dim: usize,
    /// table[i][j] = coefficients of basis_i * basis_j.
    pub table: Vec<Vec<Vec<u64>>>,
    /// Coordinates of the identity.
    pub one: Vec<u64>,
}

impl FDAlgebra {
    pub fn new(
        field: PrimeField,
        table: Vec<Vec<Vec<u64>>>,
        one: Vec<u64>,
    ) -> Result<Self> {
        let dim = table.len();
        if one.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("structure-constant table".into()));
        }
        let alg = FDAlgebra {
            field,
            dim,
            table,
            one,
        };
        alg.spot_check()?;
        Ok(alg)
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = self.field.mul(a, b);
                for (k, &t) in self.table[i][j].iter().enumerate() {
                    out[k] = self.field.add(out[k], self.field.mul(c, t));
                }
            }
        }
        out
    }

    fn spot_check(&self) -> Result<()> {
        // identity law on all basis elements
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(Error::CrossCheckMismatch("algebra identity law".into()));
            }
        }
        // associativity on a deterministic sample of basis triples
        let limit = 4096usize;
        let mut count = 0usize;
        'outer: for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let (mut ea, mut eb, mut ec) =
                        (vec![0u64; self.dim], vec![0u64; self.dim], vec![0u64; self.dim]);
                    ea[a] = 1;
                    eb[b] = 1;
                    ec[c] = 1;
                    let left = self.mul(&self.mul(&ea, &eb), &ec);
                    let right = self.mul(&ea, &self.mul(&eb, &ec));
                    if left != right {
                        return Err(Error::CrossCheckMismatch(format!(
                            "associativity fails at basis triple ({a},{b},{c})"
                        )));
                    }
                    count += 1;
                    if count >= limit {
                        break 'outer;
                    }
                }
            }
        }
        Ok(())
    }
}

/// How the basis of an endomorphism algebra is organized into hom blocks
/// between summands.
pub struct BlockStructure {
    /// Per basis element: (target summand, source summand).
    pub block_of: Vec<(usize, usize)>,
    pub summand_count: usize,
    /// Iso-class id per summand; equal ids mean isomorphic summands.
    pub class_of: Vec<usize>,
    /// Per summand: coordinates of its identity element.
    pub summand_identity: Vec<Vec<u64>>,
}

/// The Jacobson radical of a blockwise endomorphism algebra: full hom blocks
/// between non-isomorphic summands plus the singular part of the blocks
/// between isomorphic ones. Verified nilpotent, and the quotient is verified
/// semisimple through the singular-set subspace check.
pub fn algebra_radical(
    a: &FDAlgebra,
    blocks: &BlockStructure,
    caps: &Caps,
) -> Result<Vec<Vec<u64>>> {
    let p = a.field.p();
    let mut rad_vectors: Vec<Vec<u64>> = Vec::new();
    for i in 0..blocks.summand_count {
        for j in 0..blocks.summand_count {
            let members: Vec<usize> = (0..a.dim)
                .filter(|&k| blocks.block_of[k] == (j, i))
                .collect();
            if members.is_empty() {
                continue;
            }
            if blocks.class_of[i] != blocks.class_of[j] {
                // Non-isomorphic summands: the whole block is radical.
                for &k in &members {
                    let mut v = vec![0u64; a.dim];
                    v[k] = 1;
                    rad_vectors.push(v);
                }
                continue;
            }
            // Isomorphic summands: collect the singular elements of the
            // block. f : Y_i -> Y_j is invertible iff g*f = e_i is solvable
            // with g in the (i, j) block.
            let back: Vec<usize> = (0..a.dim)
                .filter(|&k| blocks.block_of[k] == (i, j))
                .collect();
            let d = members.len() as u32;
            let space = (p as u128).checked_pow(d).unwrap_or(u128::MAX);
            if space > caps.max_enum_field_power {
                return Err(Error::SearchCapExceeded {
                    context: "blockwise radical enumeration",
                    needed: space,
                    cap: caps.max_enum_field_power,
                });
            }
            let e_i = &blocks.summand_identity[i];
            let mut singular: Vec<Vec<u64>> = vec![vec![0u64; members.len()]];
            let mut coeffs = vec![0u64; members.len()];
            loop {
                let mut idx = 0;
                while idx < coeffs.len() {
                    coeffs[idx] += 1;
                    if coeffs[idx] < p {
                        break;
                    }
                    coeffs[idx] = 0;
                    idx += 1;
                }
                if idx == coeffs.len() {
                    break;
                }
                let mut f = vec![0u64; a.dim];
                for (&k, &c) in members.iter().zip(&coeffs) {
                    f[k] = c;
                }
                // solve sum_g x_g (g * f) = e_i over the back block
                let mut cols: Vec<Vec<u64>> = Vec::with_capacity(back.len());
                for &g in &back {
                    let mut eg = vec![0u64; a.dim];
                    eg[g] = 1;
                    cols.push(a.mul(&eg, &f));
                }
                let mut system = Matrix::zeros(a.dim, back.len(), a.field);
                for (cidx, col) in cols.iter().enumerate() {
                    for r in 0..a.dim {
                        system.set(r, cidx, col[r]);
                    }
                }
                if system.solve(e_i)?.is_none() {
                    singular.push(coeffs.clone());
                }
            }
            let span = Matrix::from_row_vectors(&singular, members.len(), a.field).rref();
            let span_points = (p as u128).pow(span.rank as u32);
            if span_points != singular.len() as u128 {
                return Err(Error::NotLocal(format!(
                    "hom block ({j},{i}) has a non-linear singular set"
                )));
            }
            for r in 0..span.rank {
                let mut v = vec![0u64; a.dim];
                for (&k, &c) in members.iter().zip(span.matrix.row(r)) {
                    if c != 0 {
                        v[k] = c;
                    }
                }
                rad_vectors.push(v);
            }
        }
    }
    // Canonicalize and verify nilpotency: some power of the ideal vanishes.
    let rad = Subspace::from_vectors(&rad_vectors, a.dim, a.field);
    let rad_basis: Vec<Vec<u64>> = rad.basis_vectors().map(|v| v.to_vec()).collect();
    let mut power: Vec<Vec<u64>> = rad_basis.clone();
    for _ in 0..=a.dim {
        if power.is_empty() {
            break;
        }
        let mut next: Vec<Vec<u64>> = Vec::new();
        for x in &power {
            for y in &rad_basis {
                next.push(a.mul(x, y));
            }
        }
        let next_space = Subspace::from_vectors(&next, a.dim, a.field);
        power = next_space.basis_vectors().map(|v| v.to_vec()).collect();
    }
    if !power.is_empty() {
        return Err(Error::CrossCheckMismatch(
            "blockwise radical is not nilpotent".into(),
        ));
    }
    Ok(rad_basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::direct_sum;
    use crate::quiver::{projective, regular, simple};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn fitting_on_identity_and_zero_gives_no_split() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        assert!(fitting_split(&p1, &Morphism::identity(&p1)).is_none());
        assert!(fitting_split(&p1, &Morphism::zero(&p1, &p1)).is_none());
    }

    #[test]
    fn fitting_on_an_idempotent_splits_the_sum() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let l2 = simple(&alg, 1).unwrap();
        let ds = direct_sum(&[l1.clone(), l2.clone()]).unwrap();
        let m = ds.module.clone();
        let e = ds.injections[0].compose(&ds.projections[0]);
        let (ker, im) = fitting_split(&m, &e).unwrap();
        assert_eq!(ker.dim_vector(), vec![0, 1]); // L2
        assert_eq!(im.dim_vector(), vec![1, 0]); // L1
    }

    #[test]
    fn regular_module_decomposes_into_vertex_projectives() {
        let alg = fixtures::lambda1(2).unwrap();
        let reg = regular(&alg).unwrap();
        let dec = decompose(&reg, &caps()).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert_eq!(dec.groups.len(), 2);
        let mut dims: Vec<Vec<usize>> = dec
            .summands
            .iter()
            .map(|s| s.module.dims().to_vec())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![3, 1]]);
    }

    #[test]
    fn double_module_has_one_class_of_multiplicity_two() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let m = direct_sum(&[p1.clone(), p1.clone()]).unwrap().module;
        let dec = decompose(&m, &caps()).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert_eq!(dec.groups.len(), 1);
        assert_eq!(dec.multiplicity_of(0), 2);
    }

    #[test]
    fn injective_q2_over_lambda2_is_indecomposable() {
        let alg = fixtures::lambda2(2).unwrap();
        let q2 = crate::quiver::injective(&alg, 1).unwrap();
        assert_eq!(q2.dims(), &[2, 1]);
        let dec = decompose(&q2, &caps()).unwrap();
        assert!(dec.is_indecomposable());
    }

    #[test]
    fn reassembly_witnesses_compose_to_identity() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let l2 = simple(&alg, 1).unwrap();
        let m = direct_sum(&[p1, l2]).unwrap().module;
        let dec = decompose(&m, &caps()).unwrap();
        // sum over parts of embed . proj = identity on m
        let mut acc = Morphism::zero(&m, &m);
        for s in &dec.summands {
            acc = acc.add(&s.embedding.compose(&s.projection));
            let round = s.projection.compose(&s.embedding);
            assert!(round.is_iso());
        }
        assert!(acc
            .blocks()
            .iter()
            .zip(Morphism::identity(&m).blocks())
            .all(|(a, b)| a == b));
    }

    #[test]
    fn iso_test_finds_identity_and_rejects_different_simples() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        assert!(is_isomorphic(&p1, &p1, &caps()).unwrap().is_some());
        let l1 = simple(&alg, 0).unwrap();
        let l2 = simple(&alg, 1).unwrap();
        assert!(is_isomorphic(&l1, &l2, &caps()).unwrap().is_none());
    }

    #[test]
    fn quotient_by_the_socle_line_matches_an_explicit_presentation() {
        // P1 modulo the span of the longest path is the module with top at
        // vertex 1 over two simples: present it by explicit matrices and
        // compare up to isomorphism.
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let u = crate::module::submodule_generated(&p1, &[(0, vec![0, 0, 1])]);
        let (x2, _) = crate::module::quotient(&p1, &u);
        let f = alg.field();
        let explicit = Representation::new(
            alg.clone(),
            vec![2, 1],
            vec![
                crate::matrix::Matrix::from_rows(&[vec![0, 0], vec![1, 0]], f),
                crate::matrix::Matrix::from_rows(&[vec![1, 0]], f),
            ],
        )
        .unwrap();
        let iso = is_isomorphic(&x2, &explicit, &caps()).unwrap().unwrap();
        assert!(iso.is_iso());
    }

    #[test]
    fn iso_witness_is_invertible_morphism() {
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        // same module presented through a decomposition summand
        let m = direct_sum(std::slice::from_ref(&p1)).unwrap().module;
        let w = is_isomorphic(&p1, &m, &caps()).unwrap().unwrap();
        assert!(w.is_iso());
        let back = w.inverse().unwrap();
        assert!(back.compose(&w).is_iso());
    }

    #[test]
    fn local_radical_of_simple_is_zero() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let (rad, division) = local_radical(&l1, &caps()).unwrap();
        assert!(rad.is_empty());
        assert_eq!(division, 1);
    }

    #[test]
    fn local_radical_of_p1_is_two_dimensional() {
        // End(P1) = k[a]/a^3; the singular elements are span{a, a^2},
        // enumerated over F_2.
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let endos = hom_basis(&p1, &p1).unwrap();
        assert_eq!(endos.len(), 3);
        let (rad, division) = local_radical(&p1, &caps()).unwrap();
        assert_eq!(rad.len(), 2);
        assert_eq!(division, 1);
        // every radical element is nilpotent
        for f in &rad {
            let third = f.compose(f).compose(f);
            assert!(third.is_zero());
        }
    }

    #[test]
    fn local_radical_rejects_decomposable_modules() {
        let alg = fixtures::lambda1(2).unwrap();
        let l1 = simple(&alg, 0).unwrap();
        let l2 = simple(&alg, 1).unwrap();
        let m = direct_sum(&[l1, l2]).unwrap().module;
        assert!(matches!(
            local_radical(&m, &caps()),
            Err(Error::NotLocal(_))
        ));
    }

    #[test]
    fn local_radical_of_x2_has_codimension_one() {
        // X2 = P1 / soc chunk: quotient of P1 by span{a.a}; dim End = 2.
        let alg = fixtures::lambda1(2).unwrap();
        let p1 = projective(&alg, 0).unwrap();
        let u = crate::module::submodule_generated(&p1, &[(0, vec![0, 0, 1])]);
        let (x2, _) = crate::module::quotient(&p1, &u);
        let e = hom_basis(&x2, &x2).unwrap().len();
        let (rad, division) = local_radical(&x2, &caps()).unwrap();
        assert_eq!(rad.len(), e - 1);
        assert_eq!(division, 1);
    }
}
