//! Cyclic Galois ring extensions of a finite field `F_q` with `q = 1 (mod p)`.
//!
//! Algebras are given by structure constants over a fixed basis and the
//! generator of `C_p` acts by an `F_q`-linear matrix. Everything reduces to
//! exact linear algebra: eigenspaces come from the group-algebra
//! idempotents `e_chi = p^{-1} sum_k chi(g^{-k}) g^k`, the Galois property is
//! the bijectivity of `h: S (x) S -> Maps(C_p, S)`, and `Har(F_q, C_p)` is
//! read off from primitive elements through `F_q^* / F_q^{*p}`.

pub mod linalg;

use crate::arith::{Fq, PrimeCtx, UnitModP};
use crate::error::{Error, Result};
use linalg::{
    column_space, identity, mat_add, mat_pow, mat_scale, mat_vec, rank, solve_in_span, zeros,
    Matrix,
};

/// Largest `q^dim` for which `F_q`-points are found by exhaustive search.
pub const POINT_SEARCH_LIMIT: u64 = 2_000_000;

/// A commutative, associative, unital `F_q`-algebra given by structure
/// constants: `mul[i][j]` holds the coordinates of `e_i * e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqAlgebra {
    field: Fq,
    dim: usize,
    mul: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl FqAlgebra {
    pub fn new(field: Fq, mul: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Result<Self> {
        let dim = mul.len();
        if dim == 0 {
            return Err(Error::invalid("algebra of dimension 0"));
        }
        let shape_ok = mul
            .iter()
            .all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim))
            && one.len() == dim;
        if !shape_ok {
            return Err(Error::invalid(
                "structure constants are not dim x dim x dim",
            ));
        }
        let in_range = mul
            .iter()
            .flatten()
            .flatten()
            .chain(&one)
            .all(|&c| c < field.q());
        if !in_range {
            return Err(Error::invalid(format!(
                "entries must lie in [0, {})",
                field.q()
            )));
        }
        let alg = FqAlgebra {
            field,
            dim,
            mul,
            one,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Builds from structure constants alone, solving for the unit.
    pub fn from_table(field: Fq, mul: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let dim = mul.len();
        // unknown c with sum_i c_i mul[i][j] = e_j for all j: dim^2 equations
        let basis: Vec<Vec<u64>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .flat_map(|j| mul[i].get(j).cloned().unwrap_or_else(|| vec![0; dim]))
                    .collect()
            })
            .collect();
        let target: Vec<u64> = (0..dim)
            .flat_map(|j| (0..dim).map(move |k| u64::from(j == k)))
            .collect();
        let one = solve_in_span(&field, &basis, &target)
            .ok_or_else(|| Error::invalid("structure constants admit no unit"))?;
        FqAlgebra::new(field, mul, one)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                if self.mul[i][j] != self.mul[j][i] {
                    return Err(Error::invalid(format!("e{i} e{j} != e{j} e{i}")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.multiply(&self.mul[i][j], &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &self.mul[j][k]);
                    if left != right {
                        return Err(Error::invalid(format!(
                            "(e{i} e{j}) e{k} != e{i} (e{j} e{k})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            if self.multiply(&self.one, &self.basis_vector(i)) != self.basis_vector(i) {
                return Err(Error::invalid("declared unit does not act as identity"));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<u64>>] {
        &self.mul
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn scalar(&self, c: u64) -> Vec<u64> {
        linalg::vec_scale(&self.field, c, &self.one)
    }

    /// `Some(c)` when `a = c * 1`.
    pub fn as_scalar(&self, a: &[u64]) -> Option<u64> {
        solve_in_span(&self.field, std::slice::from_ref(&self.one), a).map(|x| x[0])
    }

    pub fn multiply(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for (k, &m) in self.mul[i][j].iter().enumerate() {
                    out[k] = f.add(out[k], f.mul(c, m));
                }
            }
        }
        out
    }

    pub fn power(&self, a: &[u64], k: u64) -> Vec<u64> {
        (0..k).fold(self.one.clone(), |acc, _| self.multiply(&acc, a))
    }

    /// Matrix of `x -> a x`.
    pub fn mult_matrix(&self, a: &[u64]) -> Matrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.multiply(a, &self.basis_vector(j)))
            .collect();
        linalg::transpose(&cols)
    }

    pub fn is_invertible(&self, a: &[u64]) -> bool {
        rank(&self.field, &self.mult_matrix(a)) == self.dim
    }

    /// `self (x) other` with basis `e_i (x) f_j` at index `i * other.dim + j`.
    pub fn tensor(&self, other: &FqAlgebra) -> Result<FqAlgebra> {
        if self.field != other.field {
            return Err(Error::ContextMismatch(
                "tensoring over different fields".into(),
            ));
        }
        let f = &self.field;
        let (n, m) = (self.dim, other.dim);
        let mul: Vec<Vec<Vec<u64>>> = (0..n * m)
            .map(|a| {
                (0..n * m)
                    .map(|b| kron(f, &self.mul[a / m][b / m], &other.mul[a % m][b % m]))
                    .collect()
            })
            .collect();
        // tensor products of valid algebras are valid; skip the O(n^6) recheck
        Ok(FqAlgebra {
            field: f.clone(),
            dim: n * m,
            mul,
            one: kron(f, &self.one, &other.one),
        })
    }

    /// Algebra homomorphisms `S -> F_q`, as coordinate functionals, or `None`
    /// when `q^dim` exceeds [`POINT_SEARCH_LIMIT`].
    pub fn fq_points(&self) -> Option<Vec<Vec<u64>>> {
        let q = self.field.q();
        let total = q.checked_pow(self.dim as u32)?;
        if total > POINT_SEARCH_LIMIT {
            return None;
        }
        let f = &self.field;
        let eval = |phi: &[u64], v: &[u64]| {
            phi.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        };
        let mut points = Vec::new();
        for code in 0..total {
            let mut n = code;
            let phi: Vec<u64> = (0..self.dim)
                .map(|_| {
                    let d = n % q;
                    n /= q;
                    d
                })
                .collect();
            if eval(&phi, &self.one) != 1 {
                continue;
            }
            let is_hom = (0..self.dim).all(|i| {
                (i..self.dim).all(|j| eval(&phi, &self.mul[i][j]) == f.mul(phi[i], phi[j]))
            });
            if is_hom {
                points.push(phi);
            }
        }
        Some(points)
    }

    /// Whether every nonzero element is invertible; `None` when too large to decide exhaustively.
    pub fn is_field(&self) -> Option<bool> {
        let q = self.field.q();
        let total = q.checked_pow(self.dim as u32)?;
        if total > POINT_SEARCH_LIMIT {
            return None;
        }
        Some((1..total).all(|code| {
            let mut n = code;
            let a: Vec<u64> = (0..self.dim)
                .map(|_| {
                    let d = n % q;
                    n /= q;
                    d
                })
                .collect();
            self.is_invertible(&a)
        }))
    }
}

fn kron(f: &Fq, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| f.mul(x, y)))
        .collect()
}

/// The action of the generator of `C_p`: `gen` has `gen(e_j)` in column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAction {
    gen: Matrix,
    p: u64,
}

impl GAction {
    /// Checks `gen^p = 1`, multiplicativity on basis pairs and `gen(1) = 1`.
    pub fn new(algebra: &FqAlgebra, gen: Matrix, p: u64) -> Result<Self> {
        let n = algebra.dim;
        let f = &algebra.field;
        if gen.len() != n || gen.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("generator matrix has the wrong shape"));
        }
        if gen.iter().flatten().any(|&c| c >= f.q()) {
            return Err(Error::invalid("generator entries out of range"));
        }
        if mat_pow(f, &gen, p) != identity(n) {
            return Err(Error::invalid(format!(
                "generator does not have order dividing {p}"
            )));
        }
        let apply = |v: &[u64]| mat_vec(f, &gen, v);
        if apply(&algebra.one) != algebra.one {
            return Err(Error::invalid("generator does not fix the unit"));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = apply(&algebra.mul[i][j]);
                let rhs = algebra.multiply(
                    &apply(&algebra.basis_vector(i)),
                    &apply(&algebra.basis_vector(j)),
                );
                if lhs != rhs {
                    return Err(Error::invalid(format!(
                        "generator is not multiplicative on e{i} e{j}"
                    )));
                }
            }
        }
        Ok(GAction { gen, p })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.gen
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Matrix of `gen^k`.
    pub fn power(&self, f: &Fq, k: u64) -> Matrix {
        mat_pow(f, &self.gen, k % self.p)
    }

    pub fn is_identity(&self) -> bool {
        self.gen == identity(self.gen.len())
    }
}

/// An algebra with its `C_p`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicExtension {
    pub algebra: FqAlgebra,
    pub action: GAction,
}

impl CyclicExtension {
    pub fn new(algebra: FqAlgebra, gen: Matrix, p: u64) -> Result<Self> {
        let action = GAction::new(&algebra, gen, p)?;
        Ok(CyclicExtension { algebra, action })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn apply(&self, k: u64, v: &[u64]) -> Vec<u64> {
        let f = &self.algebra.field;
        mat_vec(f, &self.action.power(f, k), v)
    }
}

/// The character with `chi(gen) = zeta^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    e: u64,
    p: u64,
}

impl Character {
    pub fn new(e: u64, p: u64) -> Self {
        Character { e: e % p, p }
    }

    pub fn trivial(p: u64) -> Self {
        Character { e: 0, p }
    }

    pub fn exponent(self) -> u64 {
        self.e
    }

    pub fn is_trivial(self) -> bool {
        self.e == 0
    }

    pub fn all(p: u64) -> impl Iterator<Item = Character> {
        (0..p).map(move |e| Character { e, p })
    }
}

/// A `(C_p, chi)`-primitive element `alpha` and the unit `u = alpha^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitive {
    pub alpha: Vec<u64>,
    pub u: u64,
}

/// Fixed `(p, F_q, zeta)` in which all extensions live.
#[derive(Clone, Debug)]
pub struct Sandbox {
    p: u64,
    field: Fq,
    zeta: u64,
}

impl Sandbox {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Sandbox::from_ctx(&PrimeCtx::with_field(p, q)?)
    }

    pub fn from_ctx(ctx: &PrimeCtx) -> Result<Self> {
        let field = ctx
            .field()
            .cloned()
            .ok_or_else(|| Error::invalid("context has no finite field"))?;
        Ok(Sandbox {
            p: ctx.p(),
            zeta: ctx.zeta().expect("field contexts carry zeta"),
            field,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn zeta(&self) -> u64 {
        self.zeta
    }

    /// The character `chi(gen) = zeta`.
    pub fn chi(&self) -> Character {
        Character::new(1, self.p)
    }

    pub fn character_value(&self, chi: Character) -> u64 {
        self.field.pow(self.zeta, chi.e)
    }

    /// `g^0, ..., g^{p-1}` for the smallest generator `g`: a transversal of `F_q^* / F_q^{*p}`.
    pub fn transversal(&self) -> Vec<u64> {
        let g = self.field.generator();
        (0..self.p).map(|i| self.field.pow(g, i)).collect()
    }

    /// `F_q[T]/(T^p - u)` with `gen(T) = chi(gen) T`.
    pub fn kummer_extension(&self, u: u64, chi: Character) -> Result<CyclicExtension> {
        if u == 0 || !self.field.contains(u) {
            return Err(Error::invalid(format!(
                "u = {u} is not a unit of F_{}",
                self.field.q()
            )));
        }
        if chi.is_trivial() {
            return Err(Error::invalid(
                "Kummer extensions need a nontrivial character",
            ));
        }
        self.truncated_power_algebra(u, chi)
    }

    /// `F_q[T]/(T^p)` with `gen(T) = chi(gen) T`; never Galois.
    pub fn nilpotent_extension(&self, chi: Character) -> Result<CyclicExtension> {
        self.truncated_power_algebra(0, chi)
    }

    fn truncated_power_algebra(&self, u: u64, chi: Character) -> Result<CyclicExtension> {
        let p = self.p as usize;
        let f = &self.field;
        let mut mul = vec![vec![vec![0; p]; p]; p];
        for i in 0..p {
            for j in 0..p {
                if i + j < p {
                    mul[i][j][i + j] = 1;
                } else {
                    mul[i][j][i + j - p] = u;
                }
            }
        }
        let mut one = vec![0; p];
        one[0] = 1;
        let algebra = FqAlgebra::new(f.clone(), mul, one)?;
        let c = self.character_value(chi);
        let mut gen = zeros(p, p);
        for (i, row) in gen.iter_mut().enumerate() {
            row[i] = f.pow(c, i as u64);
        }
        CyclicExtension::new(algebra, gen, self.p)
    }

    /// `F_q^p` with coordinatewise product and the cyclic shift `e_i -> e_{i+1}`.
    pub fn trivial_extension(&self) -> CyclicExtension {
        let p = self.p as usize;
        let mut mul = vec![vec![vec![0; p]; p]; p];
        for (i, row) in mul.iter_mut().enumerate() {
            row[i][i] = 1;
        }
        let algebra = FqAlgebra::new(self.field.clone(), mul, vec![1; p])
            .expect("F_q^p is a commutative algebra");
        let mut gen = zeros(p, p);
        for j in 0..p {
            gen[(j + 1) % p][j] = 1;
        }
        CyclicExtension::new(algebra, gen, self.p).expect("the shift is an automorphism")
    }

    /// `e_chi = p^{-1} sum_k chi(gen)^{-k} gen^k`.
    pub fn idempotent(&self, ext: &CyclicExtension, chi: Character) -> Matrix {
        let f = &self.field;
        let n = ext.dim();
        let c_inv = f
            .inv(self.character_value(chi))
            .expect("roots of unity are units");
        let mut acc = zeros(n, n);
        for k in 0..self.p {
            let term = mat_scale(f, f.pow(c_inv, k), &ext.action.power(f, k));
            acc = mat_add(f, &acc, &term);
        }
        let p_inv = f
            .inv(f.from_int(self.p as i64))
            .expect("p is invertible in F_q");
        mat_scale(f, p_inv, &acc)
    }

    /// Basis of `S^chi = { a : gen(a) = chi(gen) a }`, each vector with leading coordinate 1.
    pub fn eigenspace(&self, ext: &CyclicExtension, chi: Character) -> Vec<Vec<u64>> {
        column_space(&self.field, &self.idempotent(ext, chi))
    }

    /// Galois test through the map `h(s (x) t)(g^k) = s g^k(t)`.
    ///
    /// Fails with an error when the action is not faithful; returns `false`
    /// when the invariants are larger than `F_q`, when `dim != p`, or when
    /// `h` is not bijective.
    pub fn is_galois(&self, ext: &CyclicExtension) -> Result<bool> {
        self.check_compatible(ext)?;
        if ext.action.is_identity() {
            return Err(Error::invalid("the C_p-action is not faithful"));
        }
        let fixed = self.eigenspace(ext, Character::trivial(self.p));
        if fixed.len() != 1 {
            return Ok(false);
        }
        let n = ext.dim();
        if n as u64 != self.p {
            return Ok(false);
        }
        Ok(rank(&self.field, &self.h_matrix(ext)) == n * n)
    }

    /// Matrix of `h: S (x) S -> Maps(C_p, S)`; rows `(k, l)`, columns `(i, j)`.
    pub fn h_matrix(&self, ext: &CyclicExtension) -> Matrix {
        let n = ext.dim();
        let alg = &ext.algebra;
        let p = self.p as usize;
        let mut h = zeros(p * n, n * n);
        for k in 0..p {
            let gk = ext.action.power(&self.field, k as u64);
            for j in 0..n {
                let image = mat_vec(&self.field, &gk, &alg.basis_vector(j));
                for i in 0..n {
                    let value = alg.multiply(&alg.basis_vector(i), &image);
                    for (l, &c) in value.iter().enumerate() {
                        h[k * n + l][i * n + j] = c;
                    }
                }
            }
        }
        h
    }

    /// Third Galois criterion on split algebras (`S = F_q^p` as algebras):
    /// every nontrivial `g` moves some element modulo every maximal ideal.
    /// `None` when `S` is not split or too large to search.
    pub fn condition_three_on_split(&self, ext: &CyclicExtension) -> Option<bool> {
        let points = ext.algebra.fq_points()?;
        if points.len() != ext.dim() {
            return None;
        }
        let f = &self.field;
        Some((1..self.p).all(|k| {
            let gk = ext.action.power(f, k);
            points.iter().all(|phi| {
                // phi o g^k as a functional: phi applied to each column of g^k
                (0..ext.dim()).any(|j| {
                    let col: Vec<u64> = gk.iter().map(|row| row[j]).collect();
                    let moved = phi
                        .iter()
                        .zip(&col)
                        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                    moved != phi[j]
                })
            })
        }))
    }

    /// An invertible element of `S^chi` with `alpha^p` in `F_q^*` whose powers
    /// `1, ..., alpha^{p-1}` form a basis.
    pub fn primitive_element(&self, ext: &CyclicExtension, chi: Character) -> Option<Primitive> {
        if chi.is_trivial() {
            return None;
        }
        let basis = self.eigenspace(ext, chi);
        let alg = &ext.algebra;
        let q = self.field.q();
        let d = basis.len() as u32;
        let combos = q.checked_pow(d)?;
        let candidates = basis
            .iter()
            .cloned()
            .chain((1..combos.min(POINT_SEARCH_LIMIT)).map(|code| {
                let mut n = code;
                let mut v = vec![0; alg.dim];
                for b in &basis {
                    let c = n % q;
                    n /= q;
                    v = linalg::vec_add(&self.field, &v, &linalg::vec_scale(&self.field, c, b));
                }
                v
            }));
        for alpha in candidates {
            if !alg.is_invertible(&alpha) {
                continue;
            }
            let u = alg.as_scalar(&alg.power(&alpha, self.p))?;
            let powers: Vec<Vec<u64>> = (0..self.p).map(|k| alg.power(&alpha, k)).collect();
            if powers.len() != alg.dim || rank(&self.field, &powers) != alg.dim {
                return None;
            }
            return Some(Primitive { alpha, u });
        }
        None
    }

    /// Product `S1 . S2 = sum_chi S1^chi (x) S2^chi` inside `S1 (x) S2`.
    pub fn harrison_product(
        &self,
        a: &CyclicExtension,
        b: &CyclicExtension,
    ) -> Result<CyclicExtension> {
        self.check_compatible(a)?;
        self.check_compatible(b)?;
        let f = &self.field;
        let big = a.algebra.tensor(&b.algebra)?;
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut weights: Vec<u64> = Vec::new();
        for chi in Character::all(self.p) {
            let left = self.eigenspace(a, chi);
            let right = self.eigenspace(b, chi);
            for x in &left {
                for y in &right {
                    basis.push(kron(f, x, y));
                    weights.push(self.character_value(chi));
                }
            }
        }
        let m = basis.len();
        let coords = |v: &[u64]| -> Result<Vec<u64>> {
            solve_in_span(f, &basis, v)
                .ok_or_else(|| Error::invalid("eigenspace tensors are not closed under product"))
        };
        let mut mul = vec![vec![vec![0; m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                mul[i][j] = coords(&big.multiply(&basis[i], &basis[j]))?;
            }
        }
        let one = coords(big.one())?;
        let algebra = FqAlgebra::new(f.clone(), mul, one)?;
        let mut gen = zeros(m, m);
        for (i, &w) in weights.iter().enumerate() {
            gen[i][i] = w;
        }
        CyclicExtension::new(algebra, gen, self.p)
    }

    /// `(S1, C_p)` and `(S2, C_p)` are `C_p`-isomorphic iff the units
    /// `alpha_i^p` of their primitive elements agree modulo `p`-th powers.
    pub fn equivariantly_isomorphic(
        &self,
        a: &CyclicExtension,
        b: &CyclicExtension,
        chi: Character,
    ) -> Result<bool> {
        let ua = self.kummer_unit(a, chi)?;
        let ub = self.kummer_unit(b, chi)?;
        let ratio = self.field.mul(ua, self.field.inv(ub)?);
        Ok(self.field.is_nth_power(ratio, self.p))
    }

    /// The unit `u` with `S = <u>`, defined up to `p`-th powers.
    pub fn kummer_unit(&self, ext: &CyclicExtension, chi: Character) -> Result<u64> {
        if !self.is_galois(ext)? {
            return Err(Error::invalid("extension is not Galois"));
        }
        self.primitive_element(ext, chi)
            .map(|prim| prim.u)
            .ok_or_else(|| Error::invalid("Galois extension without a primitive element"))
    }

    /// Index `i` in `[0, p)` with `S = <g^i>` for the transversal of [`Sandbox::transversal`].
    pub fn harrison_class(&self, ext: &CyclicExtension, chi: Character) -> Result<u64> {
        let u = self.kummer_unit(ext, chi)?;
        let f = &self.field;
        self.transversal()
            .iter()
            .position(|&t| f.is_nth_power(f.mul(u, f.inv(t).expect("unit")), self.p))
            .map(|i| i as u64)
            .ok_or_else(|| Error::invalid("unit outside every coset"))
    }

    /// Same algebra with the generator acting as `gen^tau`.
    pub fn twist(&self, ext: &CyclicExtension, tau: UnitModP) -> CyclicExtension {
        CyclicExtension {
            algebra: ext.algebra.clone(),
            action: GAction {
                gen: ext.action.power(&self.field, tau.value()),
                p: ext.action.p,
            },
        }
    }

    fn check_compatible(&self, ext: &CyclicExtension) -> Result<()> {
        if ext.algebra.field != self.field || ext.action.p != self.p {
            return Err(Error::ContextMismatch(format!(
                "extension over F_{} of degree {} in a sandbox over F_{} of degree {}",
                ext.algebra.field.q(),
                ext.action.p,
                self.field.q(),
                self.p
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(p: u64, q: u64) -> Sandbox {
        Sandbox::new(p, q).unwrap()
    }

    #[test]
    fn kummer_examples() {
        let s = lab(2, 3);
        let chi = s.chi();
        assert_eq!(s.character_value(chi), 2);
        let f9 = s.kummer_extension(2, chi).unwrap();
        assert_eq!(f9.algebra.is_field(), Some(true));
        assert!(s.is_galois(&f9).unwrap());
        let split = s.kummer_extension(1, chi).unwrap();
        assert_eq!(split.algebra.is_field(), Some(false));
        assert_eq!(split.algebra.fq_points().unwrap().len(), 2);
        assert!(s.is_galois(&split).unwrap());

        let s = lab(3, 7);
        let ext = s.kummer_extension(3, Character::new(1, 3)).unwrap();
        assert_eq!(ext.algebra.is_field(), Some(true));
        assert!(s.is_galois(&ext).unwrap());
        assert!(s.kummer_extension(0, s.chi()).is_err());
        assert!(s.kummer_extension(3, Character::trivial(3)).is_err());
    }

    #[test]
    fn trivial_extension_examples() {
        let s = lab(3, 7);
        let t = s.trivial_extension();
        assert_eq!(t.dim(), 3);
        assert!(s.is_galois(&t).unwrap());
        assert_eq!(s.eigenspace(&t, Character::trivial(3)), vec![vec![1, 1, 1]]);
        assert_eq!(s.condition_three_on_split(&t), Some(true));
    }

    #[test]
    fn eigenspaces_of_kummer_extension() {
        let s = lab(3, 7);
        let ext = s.kummer_extension(3, s.chi()).unwrap();
        for chi in Character::all(3) {
            let basis = s.eigenspace(&ext, chi);
            assert_eq!(
                basis,
                vec![ext.algebra.basis_vector(chi.exponent() as usize)]
            );
        }
    }

    #[test]
    fn nilpotent_algebra_is_not_galois() {
        let s = lab(2, 3);
        let nil = s.nilpotent_extension(s.chi()).unwrap();
        assert!(!s.is_galois(&nil).unwrap());
        assert_eq!(rank(s.field(), &s.h_matrix(&nil)), 3);
        assert!(s.primitive_element(&nil, s.chi()).is_none());
        assert_eq!(s.condition_three_on_split(&nil), None);
    }

    #[test]
    fn unfaithful_action_is_rejected() {
        let s = lab(2, 3);
        let nil = s.nilpotent_extension(Character::trivial(2)).unwrap();
        assert!(s.is_galois(&nil).is_err());
    }

    #[test]
    fn primitive_element_examples() {
        let s = lab(3, 7);
        let ext = s.kummer_extension(3, s.chi()).unwrap();
        let prim = s.primitive_element(&ext, s.chi()).unwrap();
        assert_eq!(prim.alpha, vec![0, 1, 0]);
        assert_eq!(prim.u, 3);

        let s = lab(2, 3);
        let t = s.trivial_extension();
        let prim = s.primitive_element(&t, s.chi()).unwrap();
        assert_eq!(prim.alpha, vec![1, 2]);
        assert_eq!(prim.u, 1);

        let f9 = s.kummer_extension(2, s.chi()).unwrap();
        assert_eq!(s.primitive_element(&f9, s.chi()).unwrap().u, 2);
    }

    #[test]
    fn products_and_isomorphisms() {
        let s = lab(2, 3);
        let chi = s.chi();
        let a = s.kummer_extension(2, chi).unwrap();
        let one = s.kummer_extension(1, chi).unwrap();
        let t = s.trivial_extension();
        let aa = s.harrison_product(&a, &a).unwrap();
        assert!(s.is_galois(&aa).unwrap());
        assert!(s.equivariantly_isomorphic(&aa, &one, chi).unwrap());
        assert!(s.equivariantly_isomorphic(&aa, &t, chi).unwrap());
        assert!(s
            .equivariantly_isomorphic(&s.harrison_product(&a, &t).unwrap(), &a, chi)
            .unwrap());
        assert!(!s.equivariantly_isomorphic(&a, &one, chi).unwrap());
        assert!(s
            .equivariantly_isomorphic(&a, &s.kummer_extension(2, chi).unwrap(), chi)
            .unwrap());

        let s = lab(3, 7);
        let chi = s.chi();
        let x = s.kummer_extension(3, chi).unwrap();
        let y = s.kummer_extension(s.field().mul(3, 6), chi).unwrap();
        assert!(s.equivariantly_isomorphic(&x, &y, chi).unwrap());
    }

    #[test]
    fn twist_examples() {
        let s = lab(3, 7);
        let chi = s.chi();
        let x = s.kummer_extension(3, chi).unwrap();
        assert_eq!(s.twist(&x, UnitModP::one(3)), x);
        let tau = UnitModP::new(2, 3).unwrap();
        let twisted = s.twist(&x, tau);
        let squared = s.kummer_extension(s.field().mul(3, 3), chi).unwrap();
        assert!(s.equivariantly_isomorphic(&twisted, &squared, chi).unwrap());
        assert_eq!(s.twist(&twisted, tau.inv()), x);
    }

    #[test]
    fn from_table_recovers_unit() {
        let s = lab(2, 5);
        let ext = s.kummer_extension(2, s.chi()).unwrap();
        let rebuilt = FqAlgebra::from_table(
            s.field().clone(),
            ext.algebra.structure_constants().to_vec(),
        )
        .unwrap();
        assert_eq!(rebuilt.one(), ext.algebra.one());
    }

    #[test]
    fn rejects_non_associative_tables() {
        let f = Fq::new(3).unwrap();
        // e1 e1 = e0 + e1 breaks nothing; e1 e1 = 1 with wrong unit does
        let mul = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
        assert!(FqAlgebra::new(f.clone(), mul.clone(), vec![1, 0]).is_ok());
        assert!(FqAlgebra::new(f, mul, vec![0, 1]).is_err());
    }
}
