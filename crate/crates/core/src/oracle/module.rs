//! Concrete modules given by generator matrices: induced modules built as
//! quotients of the regular representation, the modules `M_I`, and
//! composition factors by peeling one-dimensional submodules.

use std::collections::VecDeque;

use num::{One, Zero};

use super::algebra::{Algebra, AlgebraElement, AlgebraParams, Op};
use super::linalg::{Echelon, QMatrix};
use super::relations::{relations, RelationFailure};
use crate::composition::{multinomial, Composition};
use crate::error::{Error, Result};
use crate::linear::{q, Q};
use crate::rep::Character;
use crate::ribbon::{leq, ColorWord};

/// Action matrices of `T_1..T_{n-1}` and `ξ_1..ξ_n` on `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitModule {
    params: AlgebraParams,
    dim: usize,
    t: Vec<QMatrix>,
    xi: Vec<QMatrix>,
}

impl ExplicitModule {
    pub fn new(params: AlgebraParams, t: Vec<QMatrix>, xi: Vec<QMatrix>) -> Result<Self> {
        let n = params.n();
        if t.len() != n.saturating_sub(1) || xi.len() != n {
            return Err(Error::Oracle(format!(
                "need {} T matrices and {n} xi matrices",
                n.saturating_sub(1)
            )));
        }
        let dim = xi.first().map(|m| m.rows()).unwrap_or(0);
        if t.iter().chain(&xi).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Oracle("action matrices must be square of one size".into()));
        }
        Ok(ExplicitModule { params, dim, t, xi })
    }

    /// The one-dimensional module of a character.
    pub fn from_character(params: AlgebraParams, ch: &Character) -> Result<Self> {
        if ch.size() != params.n() || ch.xi.iter().any(|&k| k > params.r()) {
            return Err(Error::Oracle(format!("character {ch} does not fit n = {}, r = {}", params.n(), params.r())));
        }
        let t = ch.t.iter().map(|&v| QMatrix::scalar(1, &q(v as i64))).collect();
        let xi = ch.xi.iter().map(|&k| QMatrix::scalar(1, params.u(k))).collect();
        Self::new(params, t, xi)
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self, i: usize) -> &QMatrix {
        &self.t[i - 1]
    }

    pub fn xi(&self, j: usize) -> &QMatrix {
        &self.xi[j - 1]
    }

    /// `P_k(ξ_j)` as a matrix.
    pub fn lagrange(&self, k: u32, j: usize) -> QMatrix {
        let uk = self.params.u(k);
        let mut acc = QMatrix::identity(self.dim);
        for l in 1..=self.params.r() {
            if l == k {
                continue;
            }
            let ul = self.params.u(l);
            let factor = self.xi(j).sub(&QMatrix::scalar(self.dim, ul)).scale(&(uk - ul).recip());
            acc = acc.mul(&factor);
        }
        acc
    }

    fn op_matrix(&self, op: Op) -> QMatrix {
        match op {
            Op::T(i) => self.t(i).clone(),
            Op::Xi(j) => self.xi(j).clone(),
            Op::Lagrange { k, j } => self.lagrange(k, j),
        }
    }

    /// All eight relation families as matrix identities.
    pub fn check_relations(&self) -> Vec<RelationFailure> {
        let mut failures = Vec::new();
        let d = self.dim;
        for j in 1..=self.params.n() {
            let mut acc = QMatrix::identity(d);
            for u in self.params.us() {
                acc = acc.mul(&self.xi(j).sub(&QMatrix::scalar(d, u)));
            }
            if !acc.is_zero() {
                failures.push(RelationFailure {
                    family: 4,
                    relation: format!("prod_l (xi{j} - u_l)"),
                    on: format!("module of dimension {d}"),
                    residual: format!("{acc:?}"),
                });
            }
        }
        for r in relations(self.params.n(), self.params.us()) {
            let mut acc = QMatrix::zeros(d, d);
            for (c, word) in &r.terms {
                let m = word
                    .iter()
                    .fold(QMatrix::identity(d), |m, &op| m.mul(&self.op_matrix(op)));
                acc = acc.combine(&m, c);
            }
            if !acc.is_zero() {
                failures.push(RelationFailure {
                    family: r.family,
                    relation: r.name,
                    on: format!("module of dimension {d}"),
                    residual: format!("{acc:?}"),
                });
            }
        }
        failures
    }

    /// The quotient by the line spanned by `v`, which must span a submodule.
    fn quotient_by_line(&self, v: &[Q]) -> ExplicitModule {
        let p = v.iter().position(|x| !x.is_zero()).expect("non-zero vector");
        let keep: Vec<usize> = (0..self.dim).filter(|&k| k != p).collect();
        let project = |m: &QMatrix| -> QMatrix {
            let mut out = QMatrix::zeros(keep.len(), keep.len());
            for (b, &k) in keep.iter().enumerate() {
                let col = m.column(k);
                let f = &col[p] / &v[p];
                for (a, &i) in keep.iter().enumerate() {
                    out[(a, b)] = &col[i] - &f * &v[i];
                }
            }
            out
        };
        ExplicitModule {
            params: self.params.clone(),
            dim: keep.len(),
            t: self.t.iter().map(project).collect(),
            xi: self.xi.iter().map(project).collect(),
        }
    }

    /// Joint eigenspaces: every character `χ` with a non-zero space
    /// `{x : g x = χ(g) x for all generators g}`, together with a basis of it.
    pub fn joint_eigenspaces(&self) -> Vec<(Character, Vec<Vec<Q>>)> {
        let n = self.params.n();
        let mut out = Vec::new();
        let start: Vec<Vec<Q>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Q::zero(); self.dim];
                e[i] = Q::one();
                e
            })
            .collect();
        let mut xi = Vec::with_capacity(n);
        let mut t = Vec::with_capacity(n);
        self.search(start, &mut xi, &mut t, &mut out);
        out
    }

    /// Restricts the subspace spanned by `basis` to `ker(g - λ)`.
    fn restrict(&self, basis: &[Vec<Q>], g: &QMatrix, lambda: &Q) -> Vec<Vec<Q>> {
        if basis.is_empty() {
            return Vec::new();
        }
        let shifted = g.sub(&QMatrix::scalar(self.dim, lambda));
        let images: Vec<Vec<Q>> = basis.iter().map(|b| shifted.mul_vec(b)).collect();
        let m = QMatrix::from_columns(self.dim, &images);
        m.kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Q::zero(); self.dim];
                for (c, b) in coeffs.iter().zip(basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        if !y.is_zero() {
                            *x += c * y;
                        }
                    }
                }
                v
            })
            .collect()
    }

    fn search(
        &self,
        space: Vec<Vec<Q>>,
        xi: &mut Vec<u32>,
        t: &mut Vec<i8>,
        out: &mut Vec<(Character, Vec<Vec<Q>>)>,
    ) {
        let n = self.params.n();
        if space.is_empty() {
            return;
        }
        if xi.len() < n {
            let j = xi.len() + 1;
            for k in 1..=self.params.r() {
                let sub = self.restrict(&space, self.xi(j), self.params.u(k));
                xi.push(k);
                self.search(sub, xi, t, out);
                xi.pop();
            }
            return;
        }
        if t.len() + 1 < n {
            let i = t.len() + 1;
            for v in [0i8, -1] {
                let sub = self.restrict(&space, self.t(i), &q(v as i64));
                t.push(v);
                self.search(sub, xi, t, out);
                t.pop();
            }
            return;
        }
        out.push((Character { xi: xi.clone(), t: t.clone() }, space));
    }

    /// Composition factors, found by repeatedly splitting off a one-dimensional
    /// submodule. Sorted. Fails if a non-zero module has no joint eigenvector.
    pub fn composition_factors(&self) -> Result<Vec<Character>> {
        let mut factors = Vec::with_capacity(self.dim);
        let mut current = self.clone();
        while current.dim > 0 {
            let spaces = current.joint_eigenspaces();
            let (ch, basis) = spaces.into_iter().next().ok_or_else(|| {
                Error::Oracle(format!(
                    "no one-dimensional submodule in a module of dimension {}",
                    current.dim
                ))
            })?;
            factors.push(ch);
            current = current.quotient_by_line(&basis[0]);
        }
        factors.sort();
        Ok(factors)
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, generators: &[Vec<Q>]) -> Echelon {
        let mut ech = Echelon::new(self.dim);
        let mut queue: VecDeque<Vec<Q>> = VecDeque::new();
        for g in generators {
            if let Some(v) = ech.insert(g.clone()) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for m in self.t.iter().chain(&self.xi) {
                if let Some(w) = ech.insert(m.mul_vec(&v)) {
                    queue.push_back(w);
                }
            }
        }
        ech
    }

    /// Sum of all one-dimensional submodules.
    pub fn socle(&self) -> Echelon {
        let mut ech = Echelon::new(self.dim);
        for (_, basis) in self.joint_eigenspaces() {
            for v in basis {
                ech.insert(v);
            }
        }
        ech
    }
}

/// One generator of the left ideal: `g - value`.
#[derive(Clone, Debug)]
enum IdealGenerator {
    T(usize, Q),
    Xi(usize, Q),
}

/// `A / A·{g - χ(g)}` for the given generators, as an explicit module.
///
/// `ξ_j` acts diagonally on the blocks `L_c A`, so the ideal splits along them
/// and each block keeps its own echelon form in `Q^{n!}`.
struct IdealQuotient<'a> {
    alg: &'a Algebra,
    blocks: Vec<Echelon>,
}

impl<'a> IdealQuotient<'a> {
    fn build(alg: &'a Algebra, generators: &[IdealGenerator]) -> Self {
        let np = alg.permutations().len();
        let mut q = IdealQuotient {
            alg,
            blocks: (0..alg.num_words()).map(|_| Echelon::new(np)).collect(),
        };
        let mut queue: VecDeque<(usize, Vec<Q>)> = VecDeque::new();
        for g in generators {
            let element = match g {
                IdealGenerator::T(i, value) => {
                    let mut e = alg.t_generator(*i);
                    e.add_scaled(&alg.one(), &-value.clone());
                    e
                }
                IdealGenerator::Xi(j, value) => {
                    let mut e = alg.left_mult_xi(*j, &alg.one());
                    e.add_scaled(&alg.one(), &-value.clone());
                    e
                }
            };
            q.absorb(&element, &mut queue);
        }
        while let Some((w, v)) = queue.pop_front() {
            let x = q.element(w, &v);
            for i in 1..alg.n() {
                let y = alg.left_mult_t(i, &x);
                q.absorb(&y, &mut queue);
            }
        }
        q
    }

    fn element(&self, word: usize, v: &[Q]) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_term((word, p), c.clone());
            }
        }
        e
    }

    fn split(&self, x: &AlgebraElement) -> Vec<(usize, Vec<Q>)> {
        let np = self.alg.permutations().len();
        let mut out: Vec<(usize, Vec<Q>)> = Vec::new();
        for (&(w, p), c) in x.iter() {
            match out.last_mut() {
                Some((lw, v)) if *lw == w => v[p] = c.clone(),
                _ => {
                    let mut v = vec![Q::zero(); np];
                    v[p] = c.clone();
                    out.push((w, v));
                }
            }
        }
        out
    }

    fn absorb(&mut self, x: &AlgebraElement, queue: &mut VecDeque<(usize, Vec<Q>)>) {
        for (w, v) in self.split(x) {
            if let Some(row) = self.blocks[w].insert(v) {
                queue.push_back((w, row));
            }
        }
    }

    /// Quotient basis: `(word, permutation)` pairs at non-pivot columns.
    fn basis(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(w, e)| e.non_pivots().into_iter().map(move |p| (w, p)))
            .collect()
    }

    /// Coordinates of the class of `x` on [`IdealQuotient::basis`].
    fn coordinates(&self, x: &AlgebraElement, basis: &[(usize, usize)]) -> Vec<Q> {
        let mut reduced: Vec<Option<Vec<Q>>> = vec![None; self.blocks.len()];
        for (w, v) in self.split(x) {
            reduced[w] = Some(self.blocks[w].reduce(v));
        }
        basis
            .iter()
            .map(|&(w, p)| reduced[w].as_ref().map(|v| v[p].clone()).unwrap_or_else(Q::zero))
            .collect()
    }

    fn module(&self) -> Result<ExplicitModule> {
        let basis = self.basis();
        let d = basis.len();
        let alg = self.alg;
        let action = |f: &dyn Fn(&AlgebraElement) -> AlgebraElement| -> QMatrix {
            let cols: Vec<Vec<Q>> = basis
                .iter()
                .map(|&(w, p)| self.coordinates(&f(&alg.basis(w, p)), &basis))
                .collect();
            QMatrix::from_columns(d, &cols)
        };
        let t = (1..alg.n()).map(|i| action(&|x| alg.left_mult_t(i, x))).collect();
        let xi = (1..=alg.n()).map(|j| action(&|x| alg.left_mult_xi(j, x))).collect();
        ExplicitModule::new(alg.params().clone(), t, xi)
    }
}

/// The module induced from the product of one-dimensional characters of
/// `AKS_{m_1} ⊗ AKS_{m_2} ⊗ ...`, realized as a quotient of the left
/// regular representation.
pub fn build_induced_module(alg: &Algebra, factors: &[Character]) -> Result<ExplicitModule> {
    let n = alg.n();
    let sizes: Vec<usize> = factors.iter().map(|c| c.size()).collect();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::Oracle(format!("factor sizes {sizes:?} do not add up to n = {n}")));
    }
    let params = alg.params();
    let mut gens = Vec::new();
    let mut offset = 0;
    for ch in factors {
        if ch.xi.iter().any(|&k| k == 0 || k > params.r()) {
            return Err(Error::Oracle(format!("character {ch} uses a color above r = {}", params.r())));
        }
        for (a, &k) in ch.xi.iter().enumerate() {
            gens.push(IdealGenerator::Xi(offset + a + 1, params.u(k).clone()));
        }
        for (a, &v) in ch.t.iter().enumerate() {
            gens.push(IdealGenerator::T(offset + a + 1, q(v as i64)));
        }
        offset += ch.size();
    }
    let m = IdealQuotient::build(alg, &gens).module()?;
    let expected = multinomial(&sizes) as usize;
    if m.dim() != expected {
        return Err(Error::Oracle(format!(
            "induced module has dimension {}, expected {expected}",
            m.dim()
        )));
    }
    Ok(m)
}

/// `T_i`-eigenvalue of the simple `H_n(0)`-module `S_I`: `-1` on descents.
fn hecke_character(shape: &Composition) -> Vec<i8> {
    shape.steps().iter().map(|&d| if d { -1 } else { 0 }).collect()
}

/// `M_I` on the basis `e_c = L_c ⊗ η_I`, `c` running over color words in
/// lexicographic order:
/// `T_i e_c = χ_i e_{c s_i} + {-e_c if c_i < c_{i+1}; 0 if equal; e_{c s_i} if c_i > c_{i+1}}`.
pub fn build_m_i(shape: &Composition, alg: &Algebra) -> Result<ExplicitModule> {
    let n = alg.n();
    if shape.size() != n {
        return Err(Error::Oracle(format!("shape {shape} is not a composition of {n}")));
    }
    let chi = hecke_character(shape);
    let d = alg.num_words();
    let mut t = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = QMatrix::zeros(d, d);
        for c in 0..d {
            let cs = alg.word_index(&alg.word(c).swapped(i)).expect("same length");
            m[(cs, c)] += q(chi[i - 1] as i64);
            match alg.color(c, i).cmp(&alg.color(c, i + 1)) {
                std::cmp::Ordering::Less => m[(c, c)] -= Q::one(),
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => m[(cs, c)] += Q::one(),
            }
        }
        t.push(m);
    }
    let xi = (1..=n)
        .map(|j| {
            let diag: Vec<Q> = (0..d).map(|c| alg.params().u(alg.color(c, j)).clone()).collect();
            QMatrix::diagonal(&diag)
        })
        .collect();
    ExplicitModule::new(alg.params().clone(), t, xi)
}

/// `M_I` as `A / A·{T_i - χ_i}`, expressed on the classes of `B_{c,id}`, and
/// compared with [`build_m_i`]. Returns a description of the first mismatch.
pub fn cross_check_m_i(shape: &Composition, alg: &Algebra) -> Result<Option<String>> {
    let chi = hecke_character(shape);
    let gens: Vec<IdealGenerator> = chi
        .iter()
        .enumerate()
        .map(|(a, &v)| IdealGenerator::T(a + 1, q(v as i64)))
        .collect();
    let quotient = IdealQuotient::build(alg, &gens);
    let module = quotient.module()?;
    let d = alg.num_words();
    if module.dim() != d {
        return Ok(Some(format!("quotient has dimension {}, expected {d}", module.dim())));
    }
    let basis = quotient.basis();
    let cols: Vec<Vec<Q>> = (0..d)
        .map(|c| quotient.coordinates(&alg.basis(c, alg.identity()), &basis))
        .collect();
    let change = QMatrix::from_columns(d, &cols);
    let Some(inv) = change.inverse() else {
        return Ok(Some("classes of B_{c,id} are not a basis of the quotient".into()));
    };
    let lemma = build_m_i(shape, alg)?;
    for i in 1..alg.n() {
        if inv.mul(&module.t(i).mul(&change)) != *lemma.t(i) {
            return Ok(Some(format!("T{i} differs from the displayed action")));
        }
    }
    for j in 1..=alg.n() {
        if inv.mul(&module.xi(j).mul(&change)) != *lemma.xi(j) {
            return Ok(Some(format!("xi{j} differs from the displayed action")));
        }
    }
    Ok(None)
}

fn unit_vector(d: usize, i: usize) -> Vec<Q> {
    let mut e = vec![Q::zero(); d];
    e[i] = Q::one();
    e
}

/// `M_{c,I} ⊆ M_{c',I}` iff `c ≤_I c'`, for all pairs of color words.
/// Returns the first pair violating the equivalence.
pub fn check_order_lemma(shape: &Composition, alg: &Algebra) -> Result<Option<(ColorWord, ColorWord)>> {
    let m = build_m_i(shape, alg)?;
    let d = alg.num_words();
    for upper in 0..d {
        let sub = m.generated_submodule(&[unit_vector(d, upper)]);
        for lower in 0..d {
            let contained = sub.contains(&unit_vector(d, lower));
            let ordered = leq(shape, &alg.word(lower), &alg.word(upper));
            if contained != ordered {
                return Ok(Some((alg.word(lower), alg.word(upper))));
            }
        }
    }
    Ok(None)
}

/// The socle of `M_I` is spanned by the `e_c` with `[I, c]` a cycloribbon.
pub fn check_socle(shape: &Composition, alg: &Algebra) -> Result<Option<String>> {
    let m = build_m_i(shape, alg)?;
    let d = alg.num_words();
    let socle = m.socle();
    let mut expected = Echelon::new(d);
    for c in 0..d {
        let ribbon = crate::ribbon::ColoredRibbon::new(shape.clone(), alg.word(c))?;
        if ribbon.is_cycloribbon() {
            expected.insert(unit_vector(d, c));
        }
    }
    if socle.rank() != expected.rank() {
        return Ok(Some(format!(
            "socle has dimension {}, cycloribbon span has {}",
            socle.rank(),
            expected.rank()
        )));
    }
    if let Some(v) = socle.basis().iter().find(|v| !expected.contains(v)) {
        return Ok(Some(format!("socle vector {v:?} leaves the cycloribbon span")));
    }
    Ok(None)
}

/// All characters `ξ_j ↦ u_k`, `T_i ↦ 0 or -1` satisfying every relation.
pub fn one_dim_characters(params: &AlgebraParams) -> Vec<Character> {
    let n = params.n();
    let mut out = Vec::new();
    for word in ColorWord::all(n, params.r()) {
        for mask in 0u64..(1u64 << n.saturating_sub(1)) {
            let t: Vec<i8> = (0..n.saturating_sub(1)).map(|i| if mask >> i & 1 == 1 { -1 } else { 0 }).collect();
            let ch = Character { xi: word.as_slice().to_vec(), t };
            let module = ExplicitModule::from_character(params.clone(), &ch).expect("fits params");
            if module.check_relations().is_empty() {
                out.push(ch);
            }
        }
    }
    out.sort();
    out
}
