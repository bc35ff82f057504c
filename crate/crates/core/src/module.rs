//! Finite-dimensional modules over a bound quiver algebra, presented as
//! quiver representations: one space per vertex, one matrix per arrow.
//!
//! Submodules are per-vertex subspace families closed under the arrow maps;
//! the idempotent action makes every submodule vertex-graded, so submodule
//! computations reduce to graded linear algebra.
//!
//! Morphism composition is pinned as `(g.compose(f))(x) = g(f(x))`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::quiver::BoundQuiverAlgebra;
use crate::rational::Rational;
use crate::subspace::Subspace;
use std::sync::Arc;

pub fn same_algebra(a: &Arc<BoundQuiverAlgebra>, b: &Arc<BoundQuiverAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a.spec() == b.spec()
}

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

impl Representation {
    /// Build a representation, checking shapes and that every relation of
    /// the algebra evaluates to zero.
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        arrows: Vec<Matrix>,
    ) -> Result<Self> {
        let quiver = algebra.quiver();
        if dims.len() != quiver.vertex_count() || arrows.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(
                "wrong number of vertex dimensions or arrow matrices".into(),
            ));
        }
        for (m, arrow) in arrows.iter().zip(quiver.arrows()) {
            if m.rows() != dims[arrow.to] || m.cols() != dims[arrow.from] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` must be {}x{}, got {}x{}",
                    arrow.name,
                    dims[arrow.to],
                    dims[arrow.from],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::DimensionMismatch("field mismatch".into()));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            arrows,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    fn check_relations(&self) -> Result<()> {
        let field = self.field();
        for rel in &self.algebra.spec().relations {
            // All terms are parallel; evaluate each path and sum.
            let (src, tgt) = {
                let path = &rel[0].1;
                let arrows = self.algebra.quiver().arrows();
                (arrows[path[0]].from, arrows[*path.last().unwrap()].to)
            };
            let mut acc = Matrix::zeros(self.dims[tgt], self.dims[src], field);
            for (coeff, path) in rel {
                let ev = self.eval_path(path);
                acc = acc.add(&ev.scale(field.reduce_i64(*coeff)));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidInput(
                    "matrices do not satisfy the algebra relations".into(),
                ));
            }
        }
        Ok(())
    }

    /// Evaluate a path (arrows in order of application) as a matrix.
    pub fn eval_path(&self, path: &[usize]) -> Matrix {
        assert!(!path.is_empty());
        let mut acc = self.arrows[path[0]].clone();
        for &a in &path[1..] {
            acc = self.arrows[a].mul(&acc);
        }
        acc
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, i: usize) -> &Matrix {
        &self.arrows[i]
    }

    pub fn arrow_matrices(&self) -> &[Matrix] {
        &self.arrows
    }

    pub fn zero_module(algebra: Arc<BoundQuiverAlgebra>) -> Self {
        let nv = algebra.quiver().vertex_count();
        let arrows = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0, algebra.field()))
            .collect();
        Representation {
            algebra,
            dims: vec![0; nv],
            arrows,
        }
    }

    /// The linear dual as a module over the opposite algebra.
    pub fn dual(&self, opposite: Arc<BoundQuiverAlgebra>) -> Representation {
        debug_assert_eq!(
            opposite.quiver().arrows().len(),
            self.arrows.len(),
            "opposite algebra must come from this algebra"
        );
        let arrows = self.arrows.iter().map(|m| m.transpose()).collect();
        Representation::new(opposite, self.dims.clone(), arrows)
            .expect("dualizing preserves the (reversed) relations")
    }

    /// Offsets of the vertex blocks inside the stacked coordinate space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off.push(acc);
        off
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.dims == other.dims
            && self.arrows == other.arrows
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation dims {:?}", self.dims)
    }
}

#[derive(Clone)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, blocks: Vec<Matrix>) -> Result<Self> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if blocks.len() != source.dims().len() {
            return Err(Error::DimensionMismatch("one block per vertex".into()));
        }
        for (v, m) in blocks.iter().enumerate() {
            if m.rows() != target.dims()[v] || m.cols() != source.dims()[v] {
                return Err(Error::DimensionMismatch(format!(
                    "block at vertex {v} must be {}x{}",
                    target.dims()[v],
                    source.dims()[v]
                )));
            }
        }
        let f = Morphism {
            source,
            target,
            blocks,
        };
        if !f.commutes() {
            return Err(Error::InvalidInput(
                "blocks do not commute with the arrow action".into(),
            ));
        }
        Ok(f)
    }

    fn commutes(&self) -> bool {
        let arrows = self.source.algebra().quiver().arrows();
        arrows.iter().enumerate().all(|(i, arrow)| {
            let lhs = self.blocks[arrow.to].mul(self.source.arrow_matrix(i));
            let rhs = self.target.arrow_matrix(i).mul(&self.blocks[arrow.from]);
            lhs == rhs
        })
    }

    pub fn identity(m: &Representation) -> Self {
        let blocks = m
            .dims()
            .iter()
            .map(|&d| Matrix::identity(d, m.field()))
            .collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            blocks,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Matrix::zeros(t, s, source.field()))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// `self` after `other`: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert_eq!(other.target.dims(), self.source.dims(), "composition shape");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(g, f)| g.mul(f))
            .collect();
        Morphism {
            source: other.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, c: u64) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_epi(&self) -> bool {
        self.blocks
            .iter()
            .zip(self.target.dims())
            .all(|(b, &d)| b.rank() == d)
    }

    pub fn is_mono(&self) -> bool {
        self.blocks
            .iter()
            .zip(self.source.dims())
            .all(|(b, &d)| b.rank() == d)
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_epi()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Morphism> {
        if !self.is_iso() {
            return Err(Error::InvalidInput("not an isomorphism".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let n = b.rows();
                let mut inv = Matrix::zeros(n, n, b.field());
                for j in 0..n {
                    let mut e = vec![0u64; n];
                    e[j] = 1;
                    let col = b.solve(&e).unwrap().expect("invertible block");
                    for i in 0..n {
                        inv.set(i, j, col[i]);
                    }
                }
                inv
            })
            .collect();
        Ok(Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks,
        })
    }

    pub fn kernel(&self) -> Submodule {
        let spaces = self
            .blocks
            .iter()
            .map(|b| Subspace::from_spanning(&b.kernel_matrix()))
            .collect();
        Submodule::new(self.source.clone(), spaces).expect("kernels are submodules")
    }

    pub fn image(&self) -> Submodule {
        let spaces = self
            .blocks
            .iter()
            .map(|b| Subspace::from_spanning(&b.transpose()))
            .collect();
        Submodule::new(self.target.clone(), spaces).expect("images are submodules")
    }

    /// Dual morphism over the opposite algebra (contravariant).
    pub fn dual(&self, opposite: Arc<BoundQuiverAlgebra>) -> Morphism {
        Morphism {
            source: self.target.dual(opposite.clone()),
            target: self.source.dual(opposite),
            blocks: self.blocks.iter().map(|b| b.transpose()).collect(),
        }
    }
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Morphism {:?} -> {:?}",
            self.source.dims(),
            self.target.dims()
        )
    }
}

/// A vertex-graded submodule in canonical per-vertex RREF form.
#[derive(Clone)]
pub struct Submodule {
    parent: Representation,
    spaces: Vec<Subspace>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.spaces == other.spaces
    }
}

impl Eq for Submodule {}

impl std::hash::Hash for Submodule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spaces.hash(state);
    }
}

impl Submodule {
    pub fn new(parent: Representation, spaces: Vec<Subspace>) -> Result<Self> {
        if spaces.len() != parent.dims().len() {
            return Err(Error::DimensionMismatch("one subspace per vertex".into()));
        }
        for (v, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != parent.dims()[v] {
                return Err(Error::AmbientMismatch {
                    left: s.ambient_dim(),
                    right: parent.dims()[v],
                });
            }
        }
        let sub = Submodule { parent, spaces };
        if !sub.is_arrow_closed() {
            return Err(Error::NotSubmodule);
        }
        Ok(sub)
    }

    fn is_arrow_closed(&self) -> bool {
        let arrows = self.parent.algebra().quiver().arrows();
        arrows.iter().enumerate().all(|(i, arrow)| {
            let image = self.spaces[arrow.from].image_under(self.parent.arrow_matrix(i));
            self.spaces[arrow.to].contains(&image)
        })
    }

    pub fn zero(parent: &Representation) -> Self {
        let spaces = parent
            .dims()
            .iter()
            .map(|&d| Subspace::zero(d, parent.field()))
            .collect();
        Submodule {
            parent: parent.clone(),
            spaces,
        }
    }

    pub fn full(parent: &Representation) -> Self {
        let spaces = parent
            .dims()
            .iter()
            .map(|&d| Subspace::full(d, parent.field()))
            .collect();
        Submodule {
            parent: parent.clone(),
            spaces,
        }
    }

    pub fn parent(&self) -> &Representation {
        &self.parent
    }

    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim_vector() == self.parent.dims()
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains(b))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let spaces = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| a.sum(b).expect("same ambient"))
            .collect();
        Submodule {
            parent: self.parent.clone(),
            spaces,
        }
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        let spaces = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| a.intersect(b).expect("same ambient"))
            .collect();
        Submodule {
            parent: self.parent.clone(),
            spaces,
        }
    }

    /// Realize the submodule as a representation in its own right, together
    /// with the inclusion morphism.
    pub fn to_representation(&self) -> (Representation, Morphism) {
        let field = self.parent.field();
        let arrows = self
            .parent
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, arrow)| {
                let src = &self.spaces[arrow.from];
                let tgt = &self.spaces[arrow.to];
                let mut m = Matrix::zeros(tgt.dim(), src.dim(), field);
                for (col, v) in src.basis_vectors().enumerate() {
                    let img = self.parent.arrow_matrix(i).apply(v);
                    let coords = tgt
                        .coords_of(&img)
                        .expect("submodule is closed under arrows");
                    for (row, &c) in coords.iter().enumerate() {
                        m.set(row, col, c);
                    }
                }
                m
            })
            .collect();
        let rep = Representation::new(
            self.parent.algebra().clone(),
            self.dim_vector(),
            arrows,
        )
        .expect("restriction satisfies the relations");
        let blocks = self.spaces.iter().map(|s| s.embedding_matrix()).collect();
        let incl = Morphism {
            source: rep.clone(),
            target: self.parent.clone(),
            blocks,
        };
        debug_assert!(incl.commutes());
        (rep, incl)
    }
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule dims {:?}", self.dim_vector())
    }
}

/// A positive rational weight per vertex; the weighted length of `M` is
/// `sum_v w_v * dim M_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthFunction {
    weights: Vec<Rational>,
}

impl LengthFunction {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidInput(
                "length function weights must be positive".into(),
            ));
        }
        Ok(LengthFunction { weights })
    }

    pub fn ones(n: usize) -> Self {
        LengthFunction {
            weights: vec![Rational::from_int(1); n],
        }
    }

    pub fn from_ints(ws: &[i64]) -> Result<Self> {
        Self::new(ws.iter().map(|&w| Rational::from_int(w)).collect())
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn of(&self, m: &Representation) -> Rational {
        self.of_dims(m.dims())
    }

    pub fn of_dims(&self, dims: &[usize]) -> Rational {
        assert_eq!(dims.len(), self.weights.len());
        dims.iter()
            .zip(&self.weights)
            .fold(Rational::zero(), |acc, (&d, w)| {
                acc.add(w.mul_int(d as i64))
            })
    }

    pub fn of_sub(&self, u: &Submodule) -> Rational {
        self.of_dims(&u.dim_vector())
    }
}

/// Weighted length of a module.
pub fn weighted_length(m: &Representation, lambda: &LengthFunction) -> Rational {
    lambda.of(m)
}

/// A basis of `Hom(M, N)`: solutions of the commuting conditions.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let nv = m.dims().len();
    // Unknowns: blocks F_v (n.dims[v] x m.dims[v]), flattened row-major.
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let (s, t) = (arrow.from, arrow.to);
        let ma = m.arrow_matrix(ai);
        let na = n.arrow_matrix(ai);
        // F_t * M_a - N_a * F_s = 0, entrywise (i, j).
        for i in 0..n.dims()[t] {
            for j in 0..m.dims()[s] {
                let mut row = vec![0u64; unknowns];
                for k in 0..m.dims()[t] {
                    let idx = offsets[t] + i * m.dims()[t] + k;
                    row[idx] = field.add(row[idx], ma.get(k, j));
                }
                for l in 0..n.dims()[s] {
                    let idx = offsets[s] + l * m.dims()[s] + j;
                    row[idx] = field.sub(row[idx], na.get(i, l));
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_row_vectors(&rows, unknowns, field);
    let kernel = system.kernel_matrix();
    let mut basis = Vec::with_capacity(kernel.rows());
    for r in 0..kernel.rows() {
        let flat = kernel.row(r);
        let blocks = (0..nv)
            .map(|v| {
                let mut b = Matrix::zeros(n.dims()[v], m.dims()[v], field);
                for i in 0..n.dims()[v] {
                    for j in 0..m.dims()[v] {
                        b.set(i, j, flat[offsets[v] + i * m.dims()[v] + j]);
                    }
                }
                b
            })
            .collect();
        let f = Morphism {
            source: m.clone(),
            target: n.clone(),
            blocks,
        };
        debug_assert!(f.commutes());
        basis.push(f);
    }
    Ok(basis)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// A direct sum with its canonical injections and projections.
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(parts: &[Representation]) -> Result<DirectSum> {
    let first = parts.first().ok_or_else(|| {
        Error::InvalidInput("direct sum needs at least one part; use zero_module".into())
    })?;
    let algebra = first.algebra().clone();
    if !parts.iter().all(|p| same_algebra(p.algebra(), &algebra)) {
        return Err(Error::AlgebraMismatch);
    }
    let field = first.field();
    let nv = first.dims().len();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dims()[v]).sum())
        .collect();
    let arrows = (0..first.arrow_matrices().len())
        .map(|i| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| p.arrow_matrix(i)).collect();
            Matrix::block_diag(&blocks, field)
        })
        .collect();
    let module = Representation::new(algebra, dims.clone(), arrows)?;
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for (k, part) in parts.iter().enumerate() {
        let mut inj_blocks = Vec::with_capacity(nv);
        let mut proj_blocks = Vec::with_capacity(nv);
        for v in 0..nv {
            let before: usize = parts[..k].iter().map(|p| p.dims()[v]).sum();
            let mut inj = Matrix::zeros(dims[v], part.dims()[v], field);
            let mut proj = Matrix::zeros(part.dims()[v], dims[v], field);
            for j in 0..part.dims()[v] {
                inj.set(before + j, j, 1);
                proj.set(j, before + j, 1);
            }
            inj_blocks.push(inj);
            proj_blocks.push(proj);
        }
        injections.push(Morphism {
            source: part.clone(),
            target: module.clone(),
            blocks: inj_blocks,
        });
        projections.push(Morphism {
            source: module.clone(),
            target: part.clone(),
            blocks: proj_blocks,
        });
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// The quotient `M/U` with its projection morphism.
pub fn quotient(m: &Representation, u: &Submodule) -> (Representation, Morphism) {
    assert!(u.parent() == m, "submodule of a different module");
    let _field = m.field();
    let data: Vec<(Matrix, Matrix)> = u.spaces().iter().map(|s| s.quotient_data()).collect();
    let dims: Vec<usize> = data.iter().map(|(p, _)| p.rows()).collect();
    let arrows = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, arrow)| {
            let (proj_t, _) = &data[arrow.to];
            let (_, lift_s) = &data[arrow.from];
            proj_t.mul(m.arrow_matrix(i)).mul(lift_s)
        })
        .collect();
    let q = Representation::new(m.algebra().clone(), dims, arrows)
        .expect("quotient satisfies the relations");
    let projection = Morphism {
        source: m.clone(),
        target: q.clone(),
        blocks: data.into_iter().map(|(p, _)| p).collect(),
    };
    debug_assert!(projection.commutes());
    debug_assert!(projection.is_epi());
    (q, projection)
}

/// The smallest submodule containing the given vertex-tagged vectors:
/// close under all arrow maps to a fixed point.
pub fn submodule_generated(m: &Representation, vectors: &[(usize, Vec<u64>)]) -> Submodule {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![Vec::new(); m.dims().len()];
    for (v, vec) in vectors {
        assert_eq!(vec.len(), m.dims()[*v]);
        spaces[*v].push(vec.clone());
    }
    let mut current: Vec<Subspace> = spaces
        .iter()
        .enumerate()
        .map(|(v, vs)| Subspace::from_vectors(vs, m.dims()[v], m.field()))
        .collect();
    loop {
        let mut changed = false;
        for (i, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
            let image = current[arrow.from].image_under(m.arrow_matrix(i));
            let merged = current[arrow.to].sum(&image).expect("same ambient");
            if merged.dim() != current[arrow.to].dim() {
                current[arrow.to] = merged;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Submodule::new(m.clone(), current).expect("closure is arrow-closed")
}

/// The radical: the submodule generated by the images of all arrow maps.
pub fn radical(m: &Representation) -> Submodule {
    let field = m.field();
    let nv = m.dims().len();
    let mut gens: Vec<Vec<Vec<u64>>> = vec![Vec::new(); nv];
    for (i, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let mat = m.arrow_matrix(i);
        for col in 0..mat.cols() {
            let mut e = vec![0u64; mat.cols()];
            e[col] = 1;
            gens[arrow.to].push(mat.apply(&e));
        }
    }
    let spaces = gens
        .into_iter()
        .enumerate()
        .map(|(v, vs)| Subspace::from_vectors(&vs, m.dims()[v], field))
        .collect();
    Submodule::new(m.clone(), spaces).expect("arrow images are arrow-closed")
}

/// The socle: the largest submodule on which every arrow acts as zero.
pub fn socle(m: &Representation) -> Submodule {
    let nv = m.dims().len();
    let mut spaces: Vec<Subspace> = (0..nv)
        .map(|v| Subspace::full(m.dims()[v], m.field()))
        .collect();
    for (i, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let ker = Subspace::from_spanning(&m.arrow_matrix(i).kernel_matrix());
        spaces[arrow.from] = spaces[arrow.from].intersect(&ker).expect("same ambient");
    }
    Submodule::new(m.clone(), spaces).expect("socle is arrow-closed")
}

/// `M / rad M` with the projection.
pub fn top(m: &Representation) -> (Representation, Morphism) {
    quotient(m, &radical(m))
}

/// Number of radical iterations needed to reach zero.
pub fn loewy_length(m: &Representation) -> usize {
    let mut current = m.clone();
    let mut steps = 0;
    while !current.is_zero() {
        let rad = radical(&current);
        let (next, _) = rad.to_representation();
        current = next;
        steps += 1;
        assert!(steps <= m.total_dim() + 1, "radical iteration must terminate");
    }
    steps
}
