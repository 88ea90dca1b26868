//! Total acyclicity, Gorenstein projective certification, complete
//! resolutions, and stable Hom spaces.
//!
//! Membership uses the totally-reflexive criterion: Ext-vanishing against the
//! ring along a certified resolution cycle, the same over the opposite for the
//! transposed side, and the reflexivity isomorphism. A Yes answer carries a
//! complete resolution assembled from the two cycles, checkable on its own.

use crate::algebra::{Path, PathAlgebra};
use crate::certified::Certified;
use crate::complex::{periodic_resolution, min_proj_resolution, BoundedComplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{
    express_in_hom_basis, factor_through_inclusion, hom_basis, image, is_projective, kernel,
    lift_through_surjection, projective, projective_component_paths, projective_cover,
    Representation, ModuleMap,
};
use std::sync::Arc;

/// A bounded window standing for a complex unbounded on either side: a
/// periodic tail repeats the window edge verbatim, a `None` tail is zero.
#[derive(Clone)]
pub struct TwoSidedComplex {
    pub window: BoundedComplex,
    pub left_period: Option<usize>,
    pub right_period: Option<usize>,
}

impl TwoSidedComplex {
    pub fn validate(&self) {
        self.window.validate();
        if let Some(pi) = self.left_period {
            assert!(pi >= 1, "left period must be positive");
            let a = self.window.term_at(self.window.lo);
            let b = self.window.term_at(self.window.lo + pi as i64);
            assert!(a.dims == b.dims && a.maps == b.maps, "left seam terms must repeat verbatim");
        }
        if let Some(pi) = self.right_period {
            assert!(pi >= 1, "right period must be positive");
            let a = self.window.term_at(self.window.hi());
            let b = self.window.term_at(self.window.hi() - pi as i64);
            assert!(a.dims == b.dims && a.maps == b.maps, "right seam terms must repeat verbatim");
        }
    }

    pub fn term(&self, i: i64) -> Representation {
        let mut j = i;
        if let Some(pi) = self.left_period {
            while j < self.window.lo {
                j += pi as i64;
            }
        }
        if let Some(pi) = self.right_period {
            while j > self.window.hi() {
                j -= pi as i64;
            }
        }
        self.window.term_at(j)
    }

    pub fn diff(&self, i: i64) -> ModuleMap {
        let mut j = i;
        if j < self.window.lo {
            match self.left_period {
                Some(pi) => {
                    let pi = pi as i64;
                    while j < self.window.lo {
                        j += pi;
                    }
                }
                None => return ModuleMap::zero(&self.term(i), &self.term(i + 1)),
            }
        }
        if j > self.window.hi() - 1 {
            match self.right_period {
                Some(pi) => {
                    let pi = pi as i64;
                    while j > self.window.hi() - 1 {
                        j -= pi;
                    }
                }
                None => return ModuleMap::zero(&self.term(i), &self.term(i + 1)),
            }
        }
        assert!(j >= self.window.lo, "window shorter than the tail period");
        self.window.diff_at(j)
    }

    /// The window extended l degrees left and r degrees right.
    pub fn unfold(&self, l: usize, r: usize) -> BoundedComplex {
        let lo = self.window.lo - l as i64;
        let hi = self.window.hi() + r as i64;
        let terms: Vec<Representation> = (lo..=hi).map(|i| self.term(i)).collect();
        let diffs: Vec<ModuleMap> = (lo..hi).map(|i| self.diff(i)).collect();
        BoundedComplex { algebra: self.window.algebra.clone(), lo, terms, diffs }
    }
}

/// Hom(M, ring) with its right structure over the arrow-reversed algebra;
/// component at vertex j is Hom(M, e_j Lambda), with the chosen bases kept.
pub struct RingDual {
    pub rep: Representation,
    pub bases: Vec<Vec<ModuleMap>>,
}

/// Left multiplication by the arrow k: i -> j, as a module map P_j -> P_i.
pub(crate) fn left_mult_map(
    a: &Arc<PathAlgebra>,
    k: usize,
    pj: &Representation,
    pi: &Representation,
) -> ModuleMap {
    let ar = &a.quiver.arrows[k];
    let (i, j) = (ar.src, ar.tgt);
    let pj_paths = projective_component_paths(a, j);
    let pi_paths = projective_component_paths(a, i);
    let mut blocks = Vec::new();
    for v in 0..a.num_vertices() {
        let mut b = Matrix::zero(pi.dims[v], pj.dims[v], a.p);
        for (col, q) in pj_paths[v].iter().enumerate() {
            let step = Path { source: i, target: j, arrows: vec![k] };
            let prod = step.then(q);
            for (bi, c) in a.normal_form(&prod) {
                let path = &a.basis[bi];
                let row = pi_paths[v]
                    .iter()
                    .position(|r| r == path)
                    .expect("left multiple stays in the component");
                b.set(row, col, c);
            }
        }
        blocks.push(b);
    }
    ModuleMap { source: pj.clone(), target: pi.clone(), blocks }
}

pub fn ring_dual_rep(m: &Representation, other: &Arc<PathAlgebra>) -> RingDual {
    let a = &m.algebra;
    let nv = a.num_vertices();
    let projs: Vec<Representation> = (0..nv).map(|j| projective(a, j)).collect();
    let bases: Vec<Vec<ModuleMap>> = (0..nv).map(|j| hom_basis(m, &projs[j])).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut maps = Vec::new();
    for (k, oar) in other.quiver.arrows.iter().enumerate() {
        let j = oar.src;
        let i = oar.tgt;
        let lm = left_mult_map(a, k, &projs[j], &projs[i]);
        let mut mat = Matrix::zero(dims[i], dims[j], a.p);
        for (col, f) in bases[j].iter().enumerate() {
            let comp = lm.compose(f);
            let coords = express_in_hom_basis(&bases[i], &comp)
                .expect("composition with left multiplication stays in the hom space");
            for (r, v) in coords.iter().enumerate() {
                mat.set(r, col, *v);
            }
        }
        maps.push(mat);
    }
    let rep = Representation::new(other, dims, maps);
    RingDual { rep, bases }
}

/// Dual of g: M -> N, as N* -> M* over the other algebra.
pub fn ring_dual_map(g: &ModuleMap, dn: &RingDual, dm: &RingDual) -> ModuleMap {
    let p = g.source.algebra.p;
    let nv = dn.rep.dims.len();
    let mut blocks = Vec::new();
    for j in 0..nv {
        let mut b = Matrix::zero(dm.rep.dims[j], dn.rep.dims[j], p);
        for (col, f) in dn.bases[j].iter().enumerate() {
            let comp = f.compose(g);
            let coords = express_in_hom_basis(&dm.bases[j], &comp)
                .expect("precomposition stays in the hom space");
            for (r, v) in coords.iter().enumerate() {
                b.set(r, col, *v);
            }
        }
        blocks.push(b);
    }
    ModuleMap { source: dn.rep.clone(), target: dm.rep.clone(), blocks }
}

/// Termwise Hom(-, ring) of a complex: degree i of the result is the dual of
/// degree -i of the input.
pub fn ring_dual_complex(c: &BoundedComplex, other: &Arc<PathAlgebra>) -> BoundedComplex {
    if c.terms.is_empty() {
        return BoundedComplex::zero_complex(other);
    }
    let lo = -c.hi();
    let hi = -c.lo;
    let duals: Vec<RingDual> = (lo..=hi).map(|i| ring_dual_rep(&c.term_at(-i), other)).collect();
    let mut diffs = Vec::new();
    for i in lo..hi {
        let k = (i - lo) as usize;
        let d = c.diff_at(-i - 1);
        diffs.push(ring_dual_map(&d, &duals[k], &duals[k + 1]));
    }
    let terms = duals.into_iter().map(|d| d.rep).collect();
    BoundedComplex::new(other, lo, terms, diffs)
}

/// The natural map M -> M**; an isomorphism exactly when M is reflexive.
pub fn evaluation_map(m: &Representation, op: &Arc<PathAlgebra>) -> (ModuleMap, RingDual, RingDual) {
    let a = m.algebra.clone();
    let star = ring_dual_rep(m, op);
    let dstar = ring_dual_rep(&star.rep, &a);
    let nv = a.num_vertices();
    let op_projs: Vec<Representation> = (0..nv).map(|i| projective(op, i)).collect();
    let lam_projs_paths: Vec<Vec<Vec<Path>>> =
        (0..nv).map(|j| projective_component_paths(&a, j)).collect();
    let mut blocks = Vec::new();
    for i in 0..nv {
        let op_comp = projective_component_paths(op, i);
        let mut blk = Matrix::zero(dstar.rep.dims[i], m.dims[i], a.p);
        for t in 0..m.dims[i] {
            let mut ev_blocks = Vec::new();
            for j in 0..nv {
                let mut bm = Matrix::zero(op_projs[i].dims[j], star.rep.dims[j], a.p);
                for (col, f) in star.bases[j].iter().enumerate() {
                    let val = f.blocks[i].col(t);
                    for (r, &c) in val.iter().enumerate() {
                        if c != 0 {
                            let lam_path = &lam_projs_paths[j][i][r];
                            let op_path = lam_path.reversed();
                            let row = op_comp[j]
                                .iter()
                                .position(|q| q == &op_path)
                                .expect("reversed path is an opposite basis path");
                            bm.set(row, col, c);
                        }
                    }
                }
                ev_blocks.push(bm);
            }
            let phi = ModuleMap {
                source: star.rep.clone(),
                target: op_projs[i].clone(),
                blocks: ev_blocks,
            };
            let coords = express_in_hom_basis(&dstar.bases[i], &phi)
                .expect("evaluation lands in the double dual");
            for (r, v) in coords.iter().enumerate() {
                blk.set(r, t, *v);
            }
        }
        blocks.push(blk);
    }
    let ev = ModuleMap { source: m.clone(), target: dstar.rep.clone(), blocks };
    (ev, star, dstar)
}

/// Exactness of the complex and of its ring dual, each checked on the window
/// extended by one period per side; periodicity makes the check conclusive.
pub fn is_totally_acyclic(x: &TwoSidedComplex) -> Result<Certified<(), String>> {
    x.validate();
    if x.window.is_zero_complex() {
        return Ok(Certified::Yes(()));
    }
    for i in x.window.lo..=x.window.hi() {
        let t = x.window.term_at(i);
        if !t.is_zero() && !is_projective(&t) {
            return Err(Error::NonProjectiveTerm { degree: i as isize });
        }
    }
    let l = x.left_period.unwrap_or(1);
    let r = x.right_period.unwrap_or(1);
    let unf = x.unfold(l, r);
    let lo_check = unf.lo + if x.left_period.is_some() { 1 } else { 0 };
    let hi_check = unf.hi() - if x.right_period.is_some() { 1 } else { 0 };
    for i in lo_check..=hi_check {
        let h = crate::complex::homology(&unf, i);
        if !h.is_zero() {
            return Ok(Certified::No(format!(
                "homology of dimension {} in degree {}",
                h.total_dim(),
                i
            )));
        }
    }
    let op = Arc::new(x.window.algebra.opposite());
    let dualc = ring_dual_complex(&unf, &op);
    let dlo = dualc.lo + if x.right_period.is_some() { 1 } else { 0 };
    let dhi = dualc.hi() - if x.left_period.is_some() { 1 } else { 0 };
    for i in dlo..=dhi {
        let h = crate::complex::homology(&dualc, i);
        if !h.is_zero() {
            return Ok(Certified::No(format!(
                "ring dual has homology of dimension {} in degree {}",
                h.total_dim(),
                i
            )));
        }
    }
    Ok(Certified::Yes(()))
}

/// An acyclic two-sided complex of projectives with its 0-boundaries
/// identified with a module.
pub struct CompleteResolution {
    pub complex: TwoSidedComplex,
    pub b0: Representation,
    /// b0 -> the certified module.
    pub b0_iso: ModuleMap,
}

fn projective_complete_resolution(m: &Representation) -> CompleteResolution {
    if m.is_zero() {
        let window = BoundedComplex::zero_complex(&m.algebra);
        let b0 = Representation::zero(&m.algebra);
        let b0_iso = ModuleMap::zero(&b0, m);
        return CompleteResolution {
            complex: TwoSidedComplex { window, left_period: None, right_period: None },
            b0,
            b0_iso,
        };
    }
    let id = ModuleMap::identity(m);
    let window = BoundedComplex::new(
        &m.algebra,
        -1,
        vec![m.clone(), m.clone()],
        vec![id.clone()],
    );
    let (b0, b0_inc) = image(&id);
    let b0_iso = factor_through_inclusion(&b0_inc, &id)
        .expect("the boundaries of the identity are the module")
        .inverse()
        .expect("identity boundaries identify with the module");
    CompleteResolution {
        complex: TwoSidedComplex { window, left_period: None, right_period: None },
        b0,
        b0_iso,
    }
}

/// Gorenstein projectivity with certificates in both directions.
pub fn is_gorenstein_projective(
    m: &Representation,
    bound: usize,
    seed: u64,
) -> Certified<CompleteResolution, String> {
    if m.is_zero() || is_projective(m) {
        return Certified::Yes(projective_complete_resolution(m));
    }
    let res = min_proj_resolution(m, bound, seed);
    let cyc = match &res.finiteness {
        Certified::Yes(k) => {
            return Certified::No(format!(
                "projective dimension {} is finite but the module is not projective",
                k
            ));
        }
        Certified::Undetermined { bound_used, .. } => {
            return Certified::Undetermined {
                bound_used: *bound_used,
                reason: "resolution reached the bound without a cycle".to_string(),
            };
        }
        Certified::No(c) => c.clone(),
    };
    let algebra = m.algebra.clone();
    let op = Arc::new(algebra.opposite());
    let n1 = cyc.lag + cyc.period;
    let left_tail = periodic_resolution(&res);
    let left_unf = left_tail.unfold(cyc.period + 1);
    let left_dual = ring_dual_complex(&left_unf, &op);
    for i in 1..=(n1 as i64) {
        let h = crate::complex::homology(&left_dual, i);
        if !h.is_zero() {
            return Certified::No(format!(
                "Ext^{} against the ring has dimension {} along the certified cycle",
                i,
                h.total_dim()
            ));
        }
    }
    let (ev, star, dstar) = evaluation_map(m, &op);
    if !ev.is_iso() {
        return Certified::No("the reflexivity map into the double dual is not an isomorphism".to_string());
    }
    let res2 = min_proj_resolution(&star.rep, bound, seed);
    let (right_window, right_full, right_period) = match &res2.finiteness {
        Certified::Undetermined { bound_used, .. } => {
            return Certified::Undetermined {
                bound_used: *bound_used,
                reason: "transposed-side resolution reached the bound without a cycle".to_string(),
            };
        }
        Certified::Yes(_) => {
            let upto = res2.steps.len().saturating_sub(1);
            let w = res2.complex_upto(upto);
            (w.clone(), w, None)
        }
        Certified::No(c2) => {
            let t2 = periodic_resolution(&res2);
            (t2.window.clone(), t2.unfold(c2.period + 1), Some(c2.period))
        }
    };
    let right_dual_full = ring_dual_complex(&right_full, &algebra);
    let ext_hi = right_dual_full.hi() - if right_period.is_some() { 1 } else { 0 };
    for i in 1..=ext_hi {
        let h = crate::complex::homology(&right_dual_full, i);
        if !h.is_zero() {
            return Certified::No(format!(
                "Ext^{} of the transpose side against the ring has dimension {}",
                i,
                h.total_dim()
            ));
        }
    }
    // Assemble the complete resolution.
    let rightc = ring_dual_complex(&right_window, &algebra);
    let q0 = right_window.term_at(0);
    let dq0 = ring_dual_rep(&q0, &algebra);
    let cover0_op = &res2.steps[0].cover;
    let co_embed = ring_dual_map(cover0_op, &dstar, &dq0);
    let embed = co_embed.compose(&ev);
    let seam = embed.compose(&res.steps[0].cover);
    let leftc = left_tail.window.shift(1);
    let mut terms = leftc.terms.clone();
    terms.extend(rightc.terms.clone());
    let mut diffs = leftc.diffs.clone();
    diffs.push(seam.clone());
    diffs.extend(rightc.diffs.clone());
    let window = BoundedComplex::new(&algebra, leftc.lo, terms, diffs);
    let complex = TwoSidedComplex {
        window,
        left_period: Some(cyc.period),
        right_period,
    };
    complex.validate();
    let (b0, b0_inc) = image(&seam);
    let phi = factor_through_inclusion(&b0_inc, &embed)
        .expect("the embedding lands in the 0-boundaries");
    assert!(phi.is_iso(), "module must identify with the 0-boundaries");
    let b0_iso = phi.inverse().expect("iso inverts");
    Certified::Yes(CompleteResolution { complex, b0, b0_iso })
}

/// Hom(M, N) modulo maps factoring through a projective; every such map
/// factors through the projective cover of N.
pub struct StableHom {
    pub dim: usize,
    pub basis: Vec<ModuleMap>,
    pub full_dim: usize,
    pub full: Vec<ModuleMap>,
    pub span: Matrix,
    pub sel: Vec<usize>,
}

pub fn stable_hom(m: &Representation, n: &Representation) -> StableHom {
    let p = m.algebra.p;
    let full = hom_basis(m, n);
    if full.is_empty() {
        return StableHom {
            dim: 0,
            basis: Vec::new(),
            full_dim: 0,
            full,
            span: Matrix::zero(0, 0, p),
            sel: Vec::new(),
        };
    }
    let cover = projective_cover(n);
    let through = hom_basis(m, &cover.source);
    let mut span = Matrix::zero(full.len(), 0, p);
    for g in &through {
        let comp = cover.compose(g);
        let coords = express_in_hom_basis(&full, &comp).expect("factored map is a hom");
        let mut col = Matrix::zero(full.len(), 1, p);
        for (i, &v) in coords.iter().enumerate() {
            col.set(i, 0, v);
        }
        span = span.hstack(&col);
    }
    let span = span.image_basis();
    let mut basis = Vec::new();
    let mut sel = Vec::new();
    let mut acc = span.clone();
    for (i, f) in full.iter().enumerate() {
        let mut e = Matrix::zero(full.len(), 1, p);
        e.set(i, 0, 1);
        let test = acc.hstack(&e);
        if test.rank() > acc.rank() {
            acc = test;
            basis.push(f.clone());
            sel.push(i);
        }
    }
    StableHom { dim: full.len() - span.cols, basis, full_dim: full.len(), full, span, sel }
}

impl StableHom {
    /// Coordinates of the stable class of f in the chosen basis.
    pub fn express(&self, f: &ModuleMap) -> Option<Vec<u64>> {
        if self.full.is_empty() {
            return if f.is_zero() { Some(Vec::new()) } else { None };
        }
        let p = f.source.algebra.p;
        let c = express_in_hom_basis(&self.full, f)?;
        let mut a = self.span.clone();
        for &i in &self.sel {
            let mut e = Matrix::zero(self.full.len(), 1, p);
            e.set(i, 0, 1);
            a = a.hstack(&e);
        }
        let mut rhs = Matrix::zero(self.full.len(), 1, p);
        for (i, &v) in c.iter().enumerate() {
            rhs.set(i, 0, v);
        }
        let y = a.solve_right(&rhs)?.col(0);
        Some(y[self.span.cols..].to_vec())
    }
}

/// The syzygy of a map between modules, along the canonical minimal covers.
pub fn syzygy_map(f: &ModuleMap) -> ModuleMap {
    let cm = projective_cover(&f.source);
    let cn = projective_cover(&f.target);
    let lifted = lift_through_surjection(&f.compose(&cm), &cn)
        .expect("maps from projectives lift through surjections");
    let (_, im) = kernel(&cm);
    let (_, inn) = kernel(&cn);
    factor_through_inclusion(&inn, &lifted.compose(&im))
        .expect("the lifted map restricts to the kernels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::hom_k_dim;
    use crate::module::{direct_sum, cokernel, is_isomorphic, random_module, simple, syzygy_module};
    use crate::testutil::{triangle, zigzag, zigzag_mod};

    #[test]
    fn ring_dual_of_projectives_are_opposite_projectives() {
        let a = zigzag(3, 2);
        let op = Arc::new(a.opposite());
        for i in 0..2 {
            let d = ring_dual_rep(&projective(&a, i), &op);
            d.rep.validate();
            assert!(is_isomorphic(&d.rep, &projective(&op, i), 5).is_yes());
        }
    }

    #[test]
    fn evaluation_is_an_iso_on_projectives_and_syzygies() {
        let a = zigzag(3, 2);
        let op = Arc::new(a.opposite());
        let (ev, _, _) = evaluation_map(&projective(&a, 1), &op);
        ev.validate();
        assert!(ev.is_iso());
        // 2/1 = the second syzygy of S_2 is reflexive here.
        let (om1, _, _) = syzygy_module(&simple(&a, 1));
        let (om2, _, _) = syzygy_module(&om1);
        assert_eq!(om2.total_dim(), 2);
        let (ev2, _, _) = evaluation_map(&om2, &op);
        ev2.validate();
        assert!(ev2.is_iso());
    }

    #[test]
    fn ext_against_ring_matches_hom_k_route() {
        let a = zigzag(3, 2);
        let op = Arc::new(a.opposite());
        let s2 = simple(&a, 1);
        let res = min_proj_resolution(&s2, 16, 3);
        let unf = periodic_resolution(&res).unfold(3);
        let dual = ring_dual_complex(&unf, &op);
        let reg = BoundedComplex::stalk(crate::module::regular(&a), 0);
        for i in 1..=3i64 {
            let via_dual = crate::complex::homology(&dual, i).total_dim();
            let via_hom_k = hom_k_dim(&unf, &reg, i);
            assert_eq!(via_dual, via_hom_k, "Ext^{} routes disagree", i);
        }
        // Pinned values: Ext^1(S_1, ring) = 1 here; over the triangle algebra
        // Ext^1(S_3, ring) = 0 but Ext^2(S_3, ring) = 1.
        let s1 = simple(&a, 0);
        let r1 = min_proj_resolution(&s1, 16, 3);
        let c1 = r1.complex_upto(1);
        assert_eq!(hom_k_dim(&c1, &reg, 1), 1);
        let t = triangle(false, 2);
        let s3 = simple(&t, 2);
        let rt = min_proj_resolution(&s3, 16, 3);
        let ct = periodic_resolution(&rt).unfold(3);
        let regt = BoundedComplex::stalk(crate::module::regular(&t), 0);
        assert_eq!(hom_k_dim(&ct, &regt, 1), 0);
        assert_eq!(hom_k_dim(&ct, &regt, 2), 1);
    }

    #[test]
    fn gp_membership_over_the_extended_triangle() {
        let g = triangle(true, 2);
        // S_2 and 1/3 are the nonprojective Gorenstein projectives.
        let s2 = simple(&g, 1);
        assert!(is_gorenstein_projective(&s2, 32, 3).is_yes());
        let f = &hom_basis(&projective(&g, 1), &projective(&g, 0))[0];
        let (one_three, _) = cokernel(f);
        assert_eq!(one_three.dims, vec![1, 0, 1]);
        assert!(is_gorenstein_projective(&one_three, 32, 3).is_yes());
        // The other simples are not.
        assert!(is_gorenstein_projective(&simple(&g, 0), 32, 3).is_no());
        assert!(is_gorenstein_projective(&simple(&g, 2), 32, 3).is_no());
        for i in 0..3 {
            assert!(is_gorenstein_projective(&projective(&g, i), 32, 3).is_yes());
        }
    }

    #[test]
    fn gp_membership_over_the_plain_triangle_is_empty() {
        let t = triangle(false, 2);
        for m in [simple(&t, 0), simple(&t, 1), simple(&t, 2)] {
            let v = is_gorenstein_projective(&m, 32, 3);
            assert!(v.is_no(), "expected No, got {}", v.verdict());
        }
        // 2/1 = rad P_3 is obstructed by Ext^1 against the ring.
        let (rad, _) = crate::module::radical(&projective(&t, 2));
        match is_gorenstein_projective(&rad, 32, 3) {
            Certified::No(reason) => assert!(reason.contains("Ext^1")),
            other => panic!("expected No, got {}", other.verdict()),
        }
    }

    #[test]
    fn complete_resolution_of_the_zigzag_gp_module() {
        let a = zigzag(3, 2);
        let (om1, _, _) = syzygy_module(&simple(&a, 1));
        let (m, _, _) = syzygy_module(&om1);
        let cert = match is_gorenstein_projective(&m, 32, 3) {
            Certified::Yes(c) => c,
            other => panic!("expected Yes, got {}", other.verdict()),
        };
        cert.b0_iso.validate();
        assert!(cert.b0_iso.is_iso());
        assert!(is_isomorphic(&cert.b0, &m, 5).is_yes());
        let tac = is_totally_acyclic(&cert.complex).unwrap();
        assert!(tac.is_yes(), "complete resolution must be totally acyclic");
        // Ext-vanishing recomputed independently through the Hom complex.
        let res = min_proj_resolution(&m, 32, 3);
        let c = periodic_resolution(&res).unfold(5);
        let reg = BoundedComplex::stalk(crate::module::regular(&a), 0);
        for i in 1..=4i64 {
            assert_eq!(hom_k_dim(&c, &reg, i), 0, "Ext^{} must vanish", i);
        }
    }

    #[test]
    fn truncations_and_zero_complexes() {
        let a = zigzag(3, 2);
        let z = TwoSidedComplex {
            window: BoundedComplex::zero_complex(&a),
            left_period: None,
            right_period: None,
        };
        assert!(is_totally_acyclic(&z).unwrap().is_yes());
        let res = min_proj_resolution(&simple(&a, 0), 8, 3);
        let x = TwoSidedComplex {
            window: res.complex_upto(1),
            left_period: None,
            right_period: None,
        };
        match is_totally_acyclic(&x).unwrap() {
            Certified::No(reason) => assert!(reason.contains("degree 0")),
            other => panic!("expected No, got {}", other.verdict()),
        }
    }

    #[test]
    fn non_projective_terms_are_rejected() {
        let a = zigzag(3, 2);
        let x = TwoSidedComplex {
            window: BoundedComplex::stalk(simple(&a, 0), 0),
            left_period: None,
            right_period: None,
        };
        match is_totally_acyclic(&x) {
            Err(Error::NonProjectiveTerm { degree: 0 }) => {}
            _ => panic!("expected NonProjectiveTerm"),
        }
    }

    #[test]
    fn stable_hom_vanishes_on_projectives_and_detects_nonprojectives() {
        let q = zigzag_mod(3, 2);
        let p1 = projective(&q, 0);
        let (m, _) = cokernel(&crate::module::radical_power(&projective(&q, 1), 2).1);
        assert_eq!(m.total_dim(), 2);
        assert_eq!(stable_hom(&p1, &m).dim, 0);
        assert_eq!(stable_hom(&m, &p1).dim, 0);
        let st = stable_hom(&m, &m);
        assert_eq!(st.dim, 1);
        // Additive in direct sums.
        let sum = direct_sum(&[m.clone(), p1.clone()]).0;
        assert_eq!(stable_hom(&sum, &m).dim, st.dim);
    }

    #[test]
    fn syzygy_preserves_stable_hom_dimensions_over_the_self_injective_quotient() {
        let q = zigzag_mod(3, 2);
        let (m, _) = crate::module::cokernel(&crate::module::radical_power(&projective(&q, 1), 2).1);
        let s1 = simple(&q, 0);
        for (x, y) in [(m.clone(), m.clone()), (s1.clone(), m.clone()), (m.clone(), s1.clone())] {
            let (ox, _, _) = syzygy_module(&x);
            let (oy, _, _) = syzygy_module(&y);
            assert_eq!(
                stable_hom(&x, &y).dim,
                stable_hom(&ox, &oy).dim,
                "syzygy must preserve stable homs"
            );
        }
    }

    #[test]
    fn everything_is_gp_over_the_self_injective_quotient() {
        let q = zigzag_mod(2, 2);
        for i in 0..2 {
            assert!(is_gorenstein_projective(&simple(&q, i), 32, 3).is_yes());
        }
        for seed in 0..4 {
            let m = random_module(&q, seed, 2);
            let v = is_gorenstein_projective(&m, 64, 3);
            assert!(v.is_yes(), "random module seed {} got {}", seed, v.verdict());
        }
    }

    #[test]
    fn syzygy_map_respects_the_canonical_covers() {
        let a = zigzag(3, 2);
        let m = cokernel(&crate::module::radical_power(&projective(&a, 1), 2).1).0;
        let n = simple(&a, 1);
        let homs = hom_basis(&m, &n);
        assert!(!homs.is_empty());
        for f in homs {
            let of = syzygy_map(&f);
            of.validate();
            assert_eq!(of.source.dims, syzygy_module(&m).0.dims);
            assert_eq!(of.target.dims, syzygy_module(&n).0.dims);
        }
    }
}
