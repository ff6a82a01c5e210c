//! Equivariant objects of the orbit category, the functor `S`, its adjunctions,
//! and the classified indecomposables `S_λX` and `S_ρX`.

use std::fmt;

use num_traits::One;

use crate::lincat::{CatMorphism, LinCat, LinError};
use crate::poset::{band_cocycle, band_rotation, CoveringElement, Group, GroupSpec};
use crate::rational::Q;
use crate::report::Report;
use crate::ring::{root_of_unity, CycScalar, RingElement, DEFAULT_TRUNCATION};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("stabilizer is not abelian")]
    NonAbelian,
    #[error("character or representation is not defined on the stabilizer")]
    WrongDomain,
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("object is not singular for this action")]
    NotSingular,
    #[error("not an endomorphism")]
    NotEndomorphism,
    #[error("root order {0} does not contain the needed roots of unity")]
    MissingRoots(u32),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// `(X, ξ)` with `ξ[γ]: γX → X`.
#[derive(Clone, PartialEq, Eq)]
pub struct EquivariantObject<E> {
    pub underlying: Vec<E>,
    pub xi: Vec<CatMorphism<E>>,
}

impl<E: fmt::Debug> fmt::Debug for EquivariantObject<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Equivariant({:?})", self.underlying)
    }
}

/// A homomorphism from a subgroup `H` into the roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub elements: Vec<usize>,
    pub values: Vec<CycScalar>,
}

impl Character {
    pub fn value(&self, g: usize) -> Option<&CycScalar> {
        self.elements.iter().position(|&h| h == g).map(|i| &self.values[i])
    }
}

/// A matrix representation of a subgroup `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepSpec {
    pub elements: Vec<usize>,
    pub matrices: Vec<Vec<Vec<CycScalar>>>,
}

impl IrrepSpec {
    pub fn degree(&self) -> usize {
        self.matrices.first().map_or(0, Vec::len)
    }

    pub fn matrix(&self, g: usize) -> Option<&Vec<Vec<CycScalar>>> {
        self.elements.iter().position(|&h| h == g).map(|i| &self.matrices[i])
    }
}

fn mat_mul(a: &[Vec<CycScalar>], b: &[Vec<CycScalar>]) -> Vec<Vec<CycScalar>> {
    let m = a.first().and_then(|r| r.first()).map_or(1, CycScalar::root_order);
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(CycScalar::zero(m), |acc, (x, r)| &acc + &(x * &r[j])))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomRank<E> {
    Zero,
    RankOne(CatMorphism<E>),
}

/// The linearized category together with a finite group acting on its carrier.
#[derive(Clone)]
pub struct OrbitCat<E> {
    pub cat: LinCat<E>,
    pub spec: GroupSpec<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> OrbitCat<E> {
    pub fn new(cat: LinCat<E>, spec: GroupSpec<E>) -> OrbitCat<E> {
        OrbitCat { cat, spec }
    }

    pub fn order(&self) -> usize {
        self.spec.group.order()
    }

    pub fn act_obj(&self, g: usize, obj: &[E]) -> Vec<E> {
        obj.iter().map(|x| self.spec.apply(g, x)).collect()
    }

    pub fn act_mor(&self, g: usize, f: &CatMorphism<E>) -> CatMorphism<E> {
        CatMorphism { dom: self.act_obj(g, &f.dom), cod: self.act_obj(g, &f.cod), entries: f.entries.clone() }
    }

    pub fn effective_stabilizer(&self, x: &E) -> Vec<usize> {
        self.spec.group.elements().filter(|&g| self.cat.equivalent(&self.spec.apply(g, x), x)).collect()
    }

    /// Left cosets `σ_i H` with least-index representatives, in increasing order.
    pub fn coset_reps(&self, h: &[usize]) -> Vec<usize> {
        let g = &self.spec.group;
        let mut reps: Vec<usize> = Vec::new();
        for a in g.elements() {
            if !reps.iter().any(|&s| h.contains(&g.mul(g.inv(s), a))) {
                reps.push(a);
            }
        }
        reps
    }

    /// `(j, η)` with `γ σ_i = σ_j η`.
    fn coset_move(&self, reps: &[usize], h: &[usize], gamma: usize, i: usize) -> (usize, usize) {
        let g = &self.spec.group;
        let a = g.mul(gamma, reps[i]);
        reps.iter()
            .enumerate()
            .find_map(|(j, &s)| {
                let eta = g.mul(g.inv(s), a);
                h.contains(&eta).then_some((j, eta))
            })
            .expect("cosets cover the group")
    }

    pub fn compose(&self, f: &CatMorphism<E>, g: &CatMorphism<E>) -> CatMorphism<E> {
        self.cat.compose(f, g).unwrap_or_else(|e| panic!("{e}"))
    }

    /// The axiom `ξ_{αβ} = ξ_α ∘ αξ_β` for all pairs, and invertibility of each `ξ_γ`.
    pub fn verify_equivariance(&self, obj: &EquivariantObject<E>) -> Report {
        let g = &self.spec.group;
        let mut checked = 0;
        for a in g.elements() {
            checked += 1;
            if obj.xi[a].dom != self.act_obj(a, &obj.underlying) || obj.xi[a].cod != obj.underlying {
                return Report::fail(checked, format!("xi[{a}] has the wrong shape"));
            }
            if !self.cat.is_isomorphism(&obj.xi[a]) {
                return Report::fail(checked, format!("xi[{a}] is not invertible"));
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                checked += 1;
                let rhs = self.compose(&obj.xi[a], &self.act_mor(a, &obj.xi[b]));
                if obj.xi[g.mul(a, b)] != rhs {
                    return Report::fail(checked, format!("cocycle axiom fails at ({a}, {b})"));
                }
            }
        }
        Report::pass(checked)
    }

    /// `η_γ ∘ γf = f ∘ ξ_γ` for every `γ`.
    pub fn is_equivariant_morphism(
        &self,
        f: &CatMorphism<E>,
        src: &EquivariantObject<E>,
        dst: &EquivariantObject<E>,
    ) -> bool {
        self.spec.group.elements().all(|g| {
            self.compose(&dst.xi[g], &self.act_mor(g, f)) == self.compose(f, &src.xi[g])
        })
    }

    /// `ξ_γ^{-1} = γ ξ_{γ^{-1}}`.
    pub fn xi_inverse(&self, obj: &EquivariantObject<E>, g: usize) -> CatMorphism<E> {
        self.act_mor(g, &obj.xi[self.spec.group.inv(g)])
    }

    /// `SX = ⊕_γ γX` with `ξ_β` the permutation sending the `γ` block to the `βγ` block.
    pub fn build_s(&self, x: &[E]) -> EquivariantObject<E> {
        let g = &self.spec.group;
        let k = x.len();
        let underlying: Vec<E> = g.elements().flat_map(|c| self.act_obj(c, x)).collect();
        let xi = g
            .elements()
            .map(|b| {
                let dom = self.act_obj(b, &underlying);
                let mut f = self.cat.zero(&dom, &underlying);
                for c in g.elements() {
                    let t = g.mul(b, c);
                    for i in 0..k {
                        f.entries[t * k + i][c * k + i] = self.cat.int(1);
                    }
                }
                f
            })
            .collect();
        EquivariantObject { underlying, xi }
    }

    fn check_stabilizer(&self, x: &E, elements: &[usize]) -> Result<Vec<usize>, OrbitError> {
        let h = self.effective_stabilizer(x);
        let mut a = elements.to_vec();
        a.sort_unstable();
        if a != h {
            return Err(OrbitError::WrongDomain);
        }
        Ok(h)
    }

    pub fn build_s_lambda(&self, x: &E, lambda: &Character) -> Result<EquivariantObject<E>, OrbitError> {
        let h = self.check_stabilizer(x, &lambda.elements)?;
        if !self.spec.group.is_abelian_on(&h) {
            return Err(OrbitError::NonAbelian);
        }
        let g = &self.spec.group;
        for &a in &h {
            for &b in &h {
                let lhs = lambda.value(g.mul(a, b)).unwrap();
                if *lhs != lambda.value(a).unwrap() * lambda.value(b).unwrap() {
                    return Err(OrbitError::NotHomomorphism(format!("character at ({a}, {b})")));
                }
            }
        }
        let blocks: Vec<Vec<Vec<CycScalar>>> = lambda.values.iter().map(|v| vec![vec![v.clone()]]).collect();
        Ok(self.monomial_object(x, &h, &blocks))
    }

    pub fn build_s_rho(&self, x: &E, rho: &IrrepSpec) -> Result<EquivariantObject<E>, OrbitError> {
        let h = self.check_stabilizer(x, &rho.elements)?;
        let g = &self.spec.group;
        for &a in &h {
            for &b in &h {
                let lhs = rho.matrix(g.mul(a, b)).unwrap();
                if *lhs != mat_mul(rho.matrix(a).unwrap(), rho.matrix(b).unwrap()) {
                    return Err(OrbitError::NotHomomorphism(format!("representation at ({a}, {b})")));
                }
            }
        }
        Ok(self.monomial_object(x, &h, &rho.matrices))
    }

    /// `⊕_i (σ_i X)^d` with `(j, i)` block `ρ(η)` whenever `γσ_i = σ_j η`.
    fn monomial_object(&self, x: &E, h: &[usize], blocks: &[Vec<Vec<CycScalar>>]) -> EquivariantObject<E> {
        let sorted_h: Vec<usize> = h.to_vec();
        let d = blocks[0].len();
        let reps = self.coset_reps(&sorted_h);
        let underlying: Vec<E> =
            reps.iter().flat_map(|&s| std::iter::repeat(self.spec.apply(s, x)).take(d)).collect();
        let block_of = |eta: usize| {
            let pos = sorted_h.iter().position(|&e| e == eta).unwrap();
            &blocks[pos]
        };
        let xi = self
            .spec
            .group
            .elements()
            .map(|gamma| {
                let dom = self.act_obj(gamma, &underlying);
                let mut f = self.cat.zero(&dom, &underlying);
                for i in 0..reps.len() {
                    let (j, eta) = self.coset_move(&reps, &sorted_h, gamma, i);
                    let b = block_of(eta);
                    for r in 0..d {
                        for c in 0..d {
                            f.entries[j * d + r][i * d + c] = self.cat.scalar(b[r][c].clone());
                        }
                    }
                }
                f
            })
            .collect();
        EquivariantObject { underlying, xi }
    }

    pub fn direct_sum(&self, a: &EquivariantObject<E>, b: &EquivariantObject<E>) -> EquivariantObject<E> {
        let underlying = a.underlying.iter().chain(&b.underlying).cloned().collect();
        let xi = a.xi.iter().zip(&b.xi).map(|(x, y)| self.cat.direct_sum(x, y)).collect();
        EquivariantObject { underlying, xi }
    }

    /// `SX → (Y, η)` adjoint to `f: X → Y`: the `γ` block is `η_γ ∘ γf`.
    pub fn adjoint_in(&self, f: &CatMorphism<E>, target: &EquivariantObject<E>) -> Result<CatMorphism<E>, OrbitError> {
        if f.cod != target.underlying {
            return Err(LinError::Mismatch("adjoint_in target".into()).into());
        }
        let g = &self.spec.group;
        let dom: Vec<E> = g.elements().flat_map(|c| self.act_obj(c, &f.dom)).collect();
        let mut out = self.cat.zero(&dom, &f.cod);
        let k = f.dom.len();
        for c in g.elements() {
            let block = self.compose(&target.xi[c], &self.act_mor(c, f));
            for (i, row) in block.entries.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out.entries[i][c * k + j] = v.clone();
                }
            }
        }
        Ok(out)
    }

    /// `(Y, η) → SX` adjoint to `f: Y → X`: the `γ` block is `γf ∘ η_γ^{-1}`.
    pub fn adjoint_out(&self, f: &CatMorphism<E>, source: &EquivariantObject<E>) -> Result<CatMorphism<E>, OrbitError> {
        if f.dom != source.underlying {
            return Err(LinError::Mismatch("adjoint_out source".into()).into());
        }
        let g = &self.spec.group;
        let cod: Vec<E> = g.elements().flat_map(|c| self.act_obj(c, &f.cod)).collect();
        let mut out = self.cat.zero(&f.dom, &cod);
        let k = f.cod.len();
        for c in g.elements() {
            let block = self.compose(&self.act_mor(c, f), &self.xi_inverse(source, c));
            for (i, row) in block.entries.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out.entries[c * k + i][j] = v.clone();
                }
            }
        }
        Ok(out)
    }

    /// Inverse of [`OrbitCat::adjoint_in`]: the block on the identity summand.
    pub fn restrict_in(&self, g: &CatMorphism<E>, x: &[E]) -> CatMorphism<E> {
        let e = self.spec.group.identity();
        let k = x.len();
        let entries = g.entries.iter().map(|r| r[e * k..(e + 1) * k].to_vec()).collect();
        CatMorphism { dom: x.to_vec(), cod: g.cod.clone(), entries }
    }

    /// Inverse of [`OrbitCat::adjoint_out`].
    pub fn restrict_out(&self, g: &CatMorphism<E>, x: &[E]) -> CatMorphism<E> {
        let e = self.spec.group.identity();
        let k = x.len();
        let entries = g.entries[e * k..(e + 1) * k].to_vec();
        CatMorphism { dom: g.dom.clone(), cod: x.to_vec(), entries }
    }

    /// The equivariant map `SX → SY` whose `αX → βY` entry is `s[β⁻¹α]`.
    pub fn assemble_s(&self, x: &E, y: &E, s: &[RingElement]) -> CatMorphism<E> {
        let g = &self.spec.group;
        let dom: Vec<E> = g.elements().map(|a| self.spec.apply(a, x)).collect();
        let cod: Vec<E> = g.elements().map(|b| self.spec.apply(b, y)).collect();
        let entries = g.elements().map(|b| g.elements().map(|a| s[g.mul(g.inv(b), a)].clone()).collect()).collect();
        CatMorphism { dom, cod, entries }
    }

    /// Components `[γ][α]` of `r ∘ s: SX → SZ`, summing `r_{γ⁻¹β} s_{β⁻¹α} u^{c(αX, βY, γZ)}` over `β`.
    pub fn compose_s(&self, x: &E, y: &E, z: &E, s: &[RingElement], r: &[RingElement]) -> Vec<Vec<RingElement>> {
        let g = &self.spec.group;
        g.elements()
            .map(|c| {
                g.elements()
                    .map(|a| {
                        let (ax, cz) = (self.spec.apply(a, x), self.spec.apply(c, z));
                        g.elements().fold(self.cat.int(0), |acc, b| {
                            let by = self.spec.apply(b, y);
                            let t = &r[g.mul(g.inv(c), b)] * &s[g.mul(g.inv(b), a)];
                            &acc + &t.shift(self.cat.c(&ax, &by, &cz) as usize)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// All characters of the subgroup `h`, found by trying every assignment of `|H|`-th roots of unity.
    pub fn characters(&self, h: &[usize]) -> Result<Vec<Character>, OrbitError> {
        let n = h.len() as u32;
        let m = self.cat.root_order();
        if m % n != 0 {
            return Err(OrbitError::MissingRoots(m));
        }
        let g = &self.spec.group;
        let pos = |a: usize| h.iter().position(|&e| e == a).unwrap();
        let mut out = Vec::new();
        let total = (n as usize).pow(n);
        for code in 0..total {
            let mut exps = Vec::with_capacity(h.len());
            let mut c = code;
            for _ in 0..h.len() {
                exps.push((c % n as usize) as u32);
                c /= n as usize;
            }
            let ok = h.iter().all(|&a| {
                h.iter().all(|&b| exps[pos(g.mul(a, b))] == (exps[pos(a)] + exps[pos(b)]) % n)
            });
            if ok {
                let values = exps.iter().map(|&k| root_of_unity(m, k * (m / n))).collect();
                out.push(Character { elements: h.to_vec(), values });
            }
        }
        Ok(out)
    }

    /// `SX ≅ ⊕_λ S_λX` for singular `X` with abelian stabilizer; the isomorphism stacks
    /// the adjoints of the inclusions `X → S_λX`.
    pub fn decompose_sx(&self, x: &E) -> Result<(Vec<(Character, EquivariantObject<E>)>, CatMorphism<E>), OrbitError> {
        let h = self.effective_stabilizer(x);
        if !self.spec.group.is_abelian_on(&h) {
            return Err(OrbitError::NonAbelian);
        }
        let mut parts = Vec::new();
        let mut rows: Vec<CatMorphism<E>> = Vec::new();
        for lambda in self.characters(&h)? {
            let obj = self.build_s_lambda(x, &lambda)?;
            let mut incl = self.cat.zero(&[x.clone()], &obj.underlying);
            incl.entries[0][0] = self.cat.int(1);
            rows.push(self.adjoint_in(&incl, &obj)?);
            parts.push((lambda, obj));
        }
        let dom = rows[0].dom.clone();
        let cod: Vec<E> = rows.iter().flat_map(|r| r.cod.clone()).collect();
        let entries = rows.into_iter().flat_map(|r| r.entries).collect();
        Ok((parts, CatMorphism { dom, cod, entries }))
    }

    /// Unit test for endomorphisms of `S_λX` or `S_ρX`: the residue of the `(1,1)` entry.
    pub fn is_unit_endo(&self, f: &CatMorphism<E>) -> Result<bool, OrbitError> {
        if f.dom != f.cod || f.dom.is_empty() {
            return Err(OrbitError::NotEndomorphism);
        }
        Ok(!f.entries[0][0].residue().is_zero())
    }

    /// Hom between singular objects `(X, λ_x)` and `(Y, λ_y)`: the basic morphism times `a`
    /// is equivariant iff `a·d_γ = 0` for every `γ`.
    pub fn hom_between_characters(
        &self,
        x: &E,
        lx: &Character,
        y: &E,
        ly: &Character,
    ) -> Result<HomRank<E>, OrbitError> {
        let all: Vec<usize> = self.spec.group.elements().collect();
        for (e, l) in [(x, lx), (y, ly)] {
            if self.effective_stabilizer(e) != all {
                return Err(OrbitError::NotSingular);
            }
            if l.elements != all {
                return Err(OrbitError::WrongDomain);
            }
        }
        for g in self.spec.group.elements() {
            let (gx, gy) = (self.spec.apply(g, x), self.spec.apply(g, y));
            let a = self.cat.scalar(ly.value(g).unwrap().clone()).shift(self.cat.c(&gx, &gy, y) as usize);
            let b = self.cat.scalar(lx.value(g).unwrap().clone()).shift(self.cat.c(&gx, x, y) as usize);
            if a != b {
                return Ok(HomRank::Zero);
            }
        }
        Ok(HomRank::RankOne(self.cat.basic(x, y)?))
    }

    /// Average of `η_γ ∘ γf ∘ ξ_γ^{-1}` over the group: an equivariant morphism.
    pub fn reynolds(&self, f: &CatMorphism<E>, src: &EquivariantObject<E>, dst: &EquivariantObject<E>) -> CatMorphism<E> {
        let n = self.order() as i64;
        let inv_n = self.cat.scalar(CycScalar::from_q(self.cat.root_order(), crate::rational::q(1, n)));
        let mut acc = self.cat.zero(&f.dom, &f.cod);
        for g in self.spec.group.elements() {
            let t = self.compose(&dst.xi[g], &self.compose(&self.act_mor(g, f), &self.xi_inverse(src, g)));
            acc = self.cat.add(&acc, &t).expect("same shape");
        }
        self.cat.scale(&acc, &inv_n)
    }
}

/// The half-turn splitting `SX ≅ (X, ζ) ⊕ (ψX, −ζ)` for `X = M(a, a)` in the band of width `band`,
/// checked through the explicit matrix `F = [[1, ζ], [−ζ, 1]]`: `F` is invertible with
/// inverse `½[[1, −ζ], [ζ, 1]]`, and `F` intertwines the swap on `SX` with `diag(ζ, −ζ)`.
pub fn half_turn_splitting(a: Q, band: Q) -> Report {
    let cat = LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, 2);
    let oc = OrbitCat::new(cat, band_rotation(2, Q::one()));
    let x = CoveringElement::diagonal(a, band).canonical();
    let sx = oc.build_s(&[x]);
    let obj = sx.underlying.clone();
    let c = &oc.cat;
    let int = |v: i64| c.int(v);
    let half = c.scalar(CycScalar::from_q(2, Q::new(1, 2)));
    let f = c.from_entries(&obj, &obj, vec![vec![int(1), int(1)], vec![int(-1), int(1)]]).expect("2x2");
    let f_inv = c
        .from_entries(&obj, &obj, vec![vec![half.clone(), -&half], vec![half.clone(), half.clone()]])
        .expect("2x2");
    let mut checked = 1;
    if !c.is_isomorphism(&f) {
        return Report::fail(checked, "F is not invertible");
    }
    checked += 1;
    let id = c.identity(&obj);
    if oc.compose(&f, &f_inv) != id || oc.compose(&f_inv, &f) != id {
        return Report::fail(checked, "the stated inverse is wrong");
    }
    let twisted = |e: i64| {
        let mut t = EquivariantObject { underlying: vec![obj[0].clone()], xi: Vec::new() };
        for g in oc.spec.group.elements() {
            let dom = oc.act_obj(g, &t.underlying);
            let v = if g == 0 { 1 } else { e };
            t.xi.push(c.from_entries(&dom, &t.underlying, vec![vec![int(v)]]).expect("1x1"));
        }
        t
    };
    let plus = twisted(1);
    let psi_x = oc.act_obj(1, &[obj[0].clone()]);
    let minus = {
        let mut t = twisted(-1);
        t.underlying = psi_x.clone();
        for (g, xi) in t.xi.iter_mut().enumerate() {
            xi.dom = oc.act_obj(g, &psi_x);
            xi.cod = psi_x.clone();
        }
        t
    };
    let target = oc.direct_sum(&plus, &minus);
    for part in [&sx, &plus, &minus] {
        checked += 1;
        let r = oc.verify_equivariance(part);
        if !r.passed {
            return Report::fail(checked, format!("not equivariant: {:?}", r.failure));
        }
    }
    checked += 1;
    if target.underlying != obj {
        return Report::fail(checked, "target objects differ from SX");
    }
    checked += 1;
    if !oc.is_equivariant_morphism(&f, &sx, &target) {
        return Report::fail(checked, "F does not intertwine the swap with diag(ζ, −ζ)");
    }
    Report::pass(checked)
}

/// The 2-dimensional irreducible representation of `S₃` over ℚ, `r ↦ [[0, −1], [1, −1]]`,
/// `s ↦ [[0, 1], [1, 0]]`, extended over the multiplication table of `g`.
pub fn s3_standard_irrep(g: &Group, root: u32) -> IrrepSpec {
    let m = |rows: [[i64; 2]; 2]| -> Vec<Vec<CycScalar>> {
        rows.iter().map(|r| r.iter().map(|&v| CycScalar::from_int(root, v)).collect()).collect()
    };
    let r = g.elements().find(|&a| a != g.identity() && g.mul(a, g.mul(a, a)) == g.identity()).expect("3-cycle");
    let s = g.elements().find(|&a| a != g.identity() && g.mul(a, a) == g.identity()).expect("transposition");
    let gens = [(r, m([[0, -1], [1, -1]])), (s, m([[0, 1], [1, 0]]))];
    let mut mats: Vec<Option<Vec<Vec<CycScalar>>>> = vec![None; g.order()];
    mats[g.identity()] = Some(m([[1, 0], [0, 1]]));
    let mut frontier = vec![g.identity()];
    while let Some(a) = frontier.pop() {
        for (t, mt) in &gens {
            let b = g.mul(a, *t);
            if mats[b].is_none() {
                mats[b] = Some(mat_mul(mats[a].as_ref().expect("visited"), mt));
                frontier.push(b);
            }
        }
    }
    IrrepSpec { elements: g.elements().collect(), matrices: mats.into_iter().map(|x| x.expect("generated")).collect() }
}
