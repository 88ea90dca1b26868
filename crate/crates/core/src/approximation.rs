//! Right approximations by additive families, Gorenstein projective
//! approximations through the resolution pipeline, truncated Bousfield towers
//! in both directions, and the dual Mittag-Leffler stabilization check.

use std::sync::Arc;

use crate::algebra::PathAlgebra;
use crate::certified::Certified;
use crate::complex::{
    cone, hom_complex, hom_k_dim, homotopy_between, min_proj_resolution, periodic_resolution,
    syzygy, BoundedComplex, ChainMap, HomComplex,
};
use crate::error::{Error, Result};
use crate::gorenstein::{is_gorenstein_projective, CompleteResolution};
use crate::linalg::Matrix;
use crate::module::{
    cokernel, direct_sum, express_in_hom_basis, factor_through_projection, hom_basis, is_projective,
    projective, ModuleMap, Representation,
};
use crate::singularity::{gp_indecomposables, is_perfect};

/// Inclusive shift range used to finitize products of shifted generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftWindow {
    pub lo: i64,
    pub hi: i64,
}

impl ShiftWindow {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= 0 && hi >= 0, "window must contain shift 0");
        ShiftWindow { lo, hi }
    }
}

/// Default shift window for tower and approximation routines.
pub const DEFAULT_WINDOW: ShiftWindow = ShiftWindow { lo: -6, hi: 6 };

/// Default tower depth.
pub const DEFAULT_DEPTH: usize = 12;

/// A right approximation of a module by a finite sum from an additive family.
pub struct AddApproximation {
    /// Chosen summands as pairs (family index, map into the module).
    pub parts: Vec<(usize, ModuleMap)>,
    pub source: Representation,
    pub map: ModuleMap,
}

impl AddApproximation {
    /// A right inverse of the approximation map, when one exists.
    pub fn splitting(&self) -> Option<ModuleMap> {
        let m = &self.map.target;
        let hs = hom_basis(m, &self.source);
        let candidates: Vec<ModuleMap> = hs.iter().map(|h| self.map.compose(h)).collect();
        let coords = express_in_hom_basis(&candidates, &ModuleMap::identity(m))?;
        let mut s = ModuleMap::zero(m, &self.source);
        for (h, &c) in hs.iter().zip(&coords) {
            if c != 0 {
                s = s.add(&h.scale(c));
            }
        }
        Some(s)
    }
}

fn assemble(
    m: &Representation,
    parts: Vec<(usize, ModuleMap)>,
    family: &[Representation],
) -> AddApproximation {
    if parts.is_empty() {
        let source = Representation::zero(&m.algebra);
        let map = ModuleMap::zero(&source, m);
        return AddApproximation { parts, source, map };
    }
    let reps: Vec<Representation> = parts.iter().map(|(j, _)| family[*j].clone()).collect();
    let (source, _, projs) = direct_sum(&reps);
    let mut map = ModuleMap::zero(&source, m);
    for ((_, f), pr) in parts.iter().zip(&projs) {
        map = map.add(&f.compose(pr));
    }
    AddApproximation { parts, source, map }
}

/// Whether every map from a family member into m factors through the parts.
pub fn is_right_approximation(
    m: &Representation,
    parts: &[(usize, ModuleMap)],
    family: &[Representation],
) -> bool {
    for g in family {
        let mut candidates = Vec::new();
        for (a, f) in parts {
            for h in hom_basis(g, &family[*a]) {
                candidates.push(f.compose(&h));
            }
        }
        for phi in hom_basis(g, m) {
            if express_in_hom_basis(&candidates, &phi).is_none() {
                return false;
            }
        }
    }
    true
}

/// The right approximation of m collecting every hom-basis map from the family.
pub fn right_add_approximation(m: &Representation, family: &[Representation]) -> AddApproximation {
    let mut parts = Vec::new();
    for (j, g) in family.iter().enumerate() {
        for phi in hom_basis(g, m) {
            parts.push((j, phi));
        }
    }
    assemble(m, parts, family)
}

/// Greedily prune summands while the approximation property survives.
pub fn minimized_right_add_approximation(
    m: &Representation,
    family: &[Representation],
) -> AddApproximation {
    let full = right_add_approximation(m, family);
    let mut keep = full.parts;
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if is_right_approximation(m, &trial, family) {
            keep = trial;
        } else {
            i += 1;
        }
    }
    assemble(m, keep, family)
}

/// Whether f factors as g composed with some map into the source of g.
pub fn factors_through(f: &ModuleMap, g: &ModuleMap) -> bool {
    let candidates: Vec<ModuleMap> =
        hom_basis(&f.source, &g.source).iter().map(|h| g.compose(h)).collect();
    express_in_hom_basis(&candidates, f).is_some()
}

/// Indecomposable projectives followed by the nonprojective Gorenstein
/// projective indecomposables, with complete resolutions for the latter.
pub fn gorenstein_projective_family(
    algebra: &Arc<PathAlgebra>,
    bound: usize,
    seed: u64,
) -> Result<(Vec<Representation>, Vec<CompleteResolution>)> {
    let mut family: Vec<Representation> =
        (0..algebra.num_vertices()).map(|i| projective(algebra, i)).collect();
    let mut resolutions = Vec::new();
    let gps = gp_indecomposables(algebra, bound, seed)
        .map_err(|e| Error::NotEnumerable(e.to_string()))?;
    for (g, cr) in gps {
        family.push(g);
        resolutions.push(cr);
    }
    Ok((family, resolutions))
}

/// A Gorenstein projective approximation computed two ways: spanning maps
/// from the enumerated family, and the resolution pipeline through boundaries
/// of shifted complete resolutions.
pub struct GpApproximation {
    pub family: Vec<Representation>,
    pub fast: AddApproximation,
    pub pipeline_source: Representation,
    pub pipeline_map: ModuleMap,
}

pub fn gp_approximation(
    m: &Representation,
    bound: usize,
    window: ShiftWindow,
    seed: u64,
) -> Result<GpApproximation> {
    let algebra = m.algebra.clone();
    let (family, resolutions) = gorenstein_projective_family(&algebra, bound, seed)?;
    let fast = minimized_right_add_approximation(m, &family);
    if m.is_zero() {
        let source = Representation::zero(&algebra);
        let map = ModuleMap::zero(&source, m);
        return Ok(GpApproximation { family, fast, pipeline_source: source, pipeline_map: map });
    }

    let res = min_proj_resolution(m, bound, seed);
    let w = match &res.finiteness {
        Certified::Yes(_) => res.complex_upto(res.steps.len()),
        Certified::No(cycle) => {
            let extra = cycle.lag + cycle.period + 4;
            periodic_resolution(&res).unfold(extra)
        }
        Certified::Undetermined { bound_used, .. } => {
            let dims = res.syzygies.iter().map(|s| s.total_dim()).collect();
            return Err(Error::NonStabilizing { bound: *bound_used, dims });
        }
    };

    let mut parts: Vec<(BoundedComplex, ChainMap)> = Vec::new();
    for cr in &resolutions {
        for s in window.lo..=window.hi {
            let glo = w.lo + s;
            let ghi = 1 + s;
            let terms: Vec<Representation> = (glo..=ghi).map(|i| cr.complex.term(i)).collect();
            let diffs: Vec<ModuleMap> = (glo..ghi).map(|i| cr.complex.diff(i)).collect();
            let gen = BoundedComplex::new(&algebra, glo, terms, diffs).shift(s);
            for f in hom_complex(&gen, &w).h_basis(0) {
                parts.push((gen.clone(), f));
            }
        }
    }
    let sd = syzygy(&w);
    parts.push((sd.cover.clone(), sd.counit.clone()));

    let (t, alpha) = bundle_from(&w, &parts);
    let (_, pi) = cokernel(&t.diff_at(-1));
    let through = res.steps[0].cover.compose(&alpha.get(0));
    let a = factor_through_projection(&pi, &through)
        .expect("the bundled map sends boundaries into boundaries");
    let source = pi.target.clone();

    let mut block_total = 0;
    for (c, _) in &parts {
        let (blk, _) = cokernel(&c.diff_at(-1));
        block_total += blk.total_dim();
        assert!(
            is_gorenstein_projective(&blk, bound, seed).is_yes(),
            "pipeline source must be Gorenstein projective"
        );
    }
    assert!(block_total == source.total_dim(), "blocks must exhaust the pipeline source");
    assert!(factors_through(&a, &fast.map), "the family absorbs the pipeline map");
    if !factors_through(&fast.map, &a) {
        return Err(Error::WindowTooSmall {
            lo: window.lo,
            hi: window.hi,
            reason: "pipeline approximation misses maps hit by the family".into(),
        });
    }
    Ok(GpApproximation { family, fast, pipeline_source: source, pipeline_map: a })
}

fn bundle_sums(
    parts: &[(BoundedComplex, ChainMap)],
    lo: i64,
    hi: i64,
) -> Vec<(Representation, Vec<ModuleMap>, Vec<ModuleMap>)> {
    (lo..=hi)
        .map(|i| direct_sum(&parts.iter().map(|(c, _)| c.term_at(i)).collect::<Vec<_>>()))
        .collect()
}

fn bundle_complex(
    algebra: &Arc<PathAlgebra>,
    parts: &[(BoundedComplex, ChainMap)],
    sums: &[(Representation, Vec<ModuleMap>, Vec<ModuleMap>)],
    lo: i64,
) -> BoundedComplex {
    let terms: Vec<Representation> = sums.iter().map(|(s, _, _)| s.clone()).collect();
    let mut diffs = Vec::new();
    for k in 0..sums.len() - 1 {
        let i = lo + k as i64;
        let mut d = ModuleMap::zero(&sums[k].0, &sums[k + 1].0);
        for (a, (c, _)) in parts.iter().enumerate() {
            d = d.add(&sums[k + 1].1[a].compose(&c.diff_at(i)).compose(&sums[k].2[a]));
        }
        diffs.push(d);
    }
    BoundedComplex::new(algebra, lo, terms, diffs)
}

/// Sum the part complexes and bundle their maps into one map to the target.
fn bundle_from(
    target: &BoundedComplex,
    parts: &[(BoundedComplex, ChainMap)],
) -> (BoundedComplex, ChainMap) {
    let algebra = target.algebra.clone();
    if parts.is_empty() {
        let z = BoundedComplex::zero_complex(&algebra);
        let f = ChainMap::zero(&z, target);
        return (z, f);
    }
    let lo = parts.iter().map(|(c, _)| c.lo).min().unwrap();
    let hi = parts.iter().map(|(c, _)| c.hi()).max().unwrap();
    let sums = bundle_sums(parts, lo, hi);
    let t = bundle_complex(&algebra, parts, &sums, lo);
    let maps: Vec<ModuleMap> = (lo..=hi)
        .map(|i| {
            let k = (i - lo) as usize;
            let mut f = ModuleMap::zero(&sums[k].0, &target.term_at(i));
            for (a, (_, g)) in parts.iter().enumerate() {
                f = f.add(&g.get(i).compose(&sums[k].2[a]));
            }
            f
        })
        .collect();
    let map = ChainMap::new(t.clone(), target.clone(), lo, maps);
    (t, map)
}

/// Sum the part complexes and bundle their maps into one map from the source.
fn bundle_into(
    source: &BoundedComplex,
    parts: &[(BoundedComplex, ChainMap)],
) -> (BoundedComplex, ChainMap) {
    let algebra = source.algebra.clone();
    if parts.is_empty() {
        let z = BoundedComplex::zero_complex(&algebra);
        let f = ChainMap::zero(source, &z);
        return (z, f);
    }
    let lo = parts.iter().map(|(c, _)| c.lo).min().unwrap();
    let hi = parts.iter().map(|(c, _)| c.hi()).max().unwrap();
    let sums = bundle_sums(parts, lo, hi);
    let x = bundle_complex(&algebra, parts, &sums, lo);
    let maps: Vec<ModuleMap> = (lo..=hi)
        .map(|i| {
            let k = (i - lo) as usize;
            let mut f = ModuleMap::zero(&source.term_at(i), &sums[k].0);
            for (a, (_, g)) in parts.iter().enumerate() {
                f = f.add(&sums[k].1[a].compose(&g.get(i)));
            }
            f
        })
        .collect();
    let map = ChainMap::new(source.clone(), x.clone(), lo, maps);
    (x, map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Colim,
    Lim,
}

/// One Hom-dimension record: generator index, shift, dim Hom_K at that shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub generator: usize,
    pub shift: i64,
    pub dim: usize,
}

/// One approximation step of a truncated tower.
pub struct TowerStage {
    pub residual: BoundedComplex,
    pub ledger: Vec<LedgerEntry>,
    pub bundle: BoundedComplex,
    pub approximation: ChainMap,
    pub connecting: ChainMap,
}

/// A truncated Bousfield tower with its final residual.
pub struct Tower {
    pub direction: Direction,
    pub stages: Vec<TowerStage>,
    pub residual: BoundedComplex,
    pub final_ledger: Vec<LedgerEntry>,
    pub stabilized: bool,
    pub depth: usize,
}

impl Tower {
    /// Matrices induced on degree-zero Hom classes by the connecting maps,
    /// against one generator at one shift.
    pub fn hom_chain(&self, x: &BoundedComplex, shift: i64) -> Vec<Matrix> {
        let xs = x.shift(shift);
        let p = xs.algebra.p;
        let mut residuals: Vec<&BoundedComplex> =
            self.stages.iter().map(|s| &s.residual).collect();
        residuals.push(&self.residual);
        let mut out = Vec::new();
        for (i, stage) in self.stages.iter().enumerate() {
            let m = match self.direction {
                Direction::Lim => {
                    let hc = hom_complex(residuals[i + 1], &xs);
                    let basis = hom_complex(residuals[i], &xs).h_basis(0);
                    let mut m = Matrix::zero(hc.h_dim(0), basis.len(), p);
                    for (j, b) in basis.iter().enumerate() {
                        let c = class_in_h_basis(&hc, &b.compose(&stage.connecting))
                            .expect("composite lies in the level span");
                        for (r, &v) in c.iter().enumerate() {
                            m.set(r, j, v);
                        }
                    }
                    m
                }
                Direction::Colim => {
                    let hc = hom_complex(&xs, residuals[i + 1]);
                    let basis = hom_complex(&xs, residuals[i]).h_basis(0);
                    let mut m = Matrix::zero(hc.h_dim(0), basis.len(), p);
                    for (j, b) in basis.iter().enumerate() {
                        let c = class_in_h_basis(&hc, &stage.connecting.compose(b))
                            .expect("composite lies in the level span");
                        for (r, &v) in c.iter().enumerate() {
                            m.set(r, j, v);
                        }
                    }
                    m
                }
            };
            out.push(m);
        }
        out
    }
}

/// Coordinates of the homotopy class of f in the degree-zero classes basis.
fn class_in_h_basis(hc: &HomComplex, f: &ChainMap) -> Option<Vec<u64>> {
    let reps = hc.h_basis_coords(0);
    if reps.is_empty() {
        return Some(Vec::new());
    }
    let parts: Vec<(i64, ModuleMap)> =
        (f.source.lo..=f.source.hi()).map(|i| (i, f.get(i))).collect();
    let level = hc.express(0, &parts)?;
    let p = hc.source.algebra.p;
    let dim = level.len();
    let k = (0 - hc.lo_n) as usize;
    let boundaries =
        if k > 0 { hc.diffs[k - 1].image_basis() } else { Matrix::zero(dim, 0, p) };
    let mut m = Matrix::zero(dim, reps.len() + boundaries.cols, p);
    for (j, r) in reps.iter().enumerate() {
        for (i, &v) in r.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    for j in 0..boundaries.cols {
        for i in 0..dim {
            m.set(i, reps.len() + j, boundaries.get(i, j));
        }
    }
    let mut rhs = Matrix::zero(dim, 1, p);
    for (i, &v) in level.iter().enumerate() {
        rhs.set(i, 0, v);
    }
    let sol = m.solve_right(&rhs)?;
    Some((0..reps.len()).map(|j| sol.get(j, 0)).collect())
}

/// A section of a quasi-isomorphism up to homotopy: s with pi . s ~ id.
fn homotopy_section(pi: &ChainMap) -> Option<ChainMap> {
    let basis = hom_complex(&pi.target, &pi.source).h_basis(0);
    let htt = hom_complex(&pi.target, &pi.target);
    let id_coords = class_in_h_basis(&htt, &ChainMap::identity(&pi.target))?;
    if id_coords.iter().all(|&c| c == 0) {
        return Some(ChainMap::zero(&pi.target, &pi.source));
    }
    let p = pi.source.algebra.p;
    let cols: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| class_in_h_basis(&htt, &pi.compose(b)))
        .collect::<Option<Vec<_>>>()?;
    let mut m = Matrix::zero(id_coords.len(), cols.len(), p);
    for (j, c) in cols.iter().enumerate() {
        for (i, &v) in c.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    let mut rhs = Matrix::zero(id_coords.len(), 1, p);
    for (i, &v) in id_coords.iter().enumerate() {
        rhs.set(i, 0, v);
    }
    let sol = m.solve_right(&rhs)?;
    let mut s = ChainMap::zero(&pi.target, &pi.source);
    for (j, b) in basis.iter().enumerate() {
        let c = sol.get(j, 0);
        if c != 0 {
            s = s.add(&b.scale(c));
        }
    }
    Some(s)
}

/// Replace a projective-termed residual by its minimal model, carrying a map
/// out of the residual along.
fn minimal_model(
    raw: BoundedComplex,
    connecting: ChainMap,
    bound: usize,
    seed: u64,
) -> (BoundedComplex, ChainMap) {
    if !raw.terms.iter().all(is_projective) {
        return (raw, connecting);
    }
    match is_perfect(&raw, bound, seed) {
        Certified::Yes(w) => {
            let c = connecting.compose(&w.quasi_iso);
            (w.complex, c)
        }
        _ => (raw, connecting),
    }
}

/// As minimal_model, but carrying a map into the residual along.
fn minimal_model_into(
    raw: BoundedComplex,
    connecting: ChainMap,
    bound: usize,
    seed: u64,
) -> (BoundedComplex, ChainMap) {
    if !raw.terms.iter().all(is_projective) {
        return (raw, connecting);
    }
    match is_perfect(&raw, bound, seed) {
        Certified::Yes(w) => match homotopy_section(&w.quasi_iso) {
            Some(s) => {
                let c = s.compose(&connecting);
                (w.complex, c)
            }
            None => (raw, connecting),
        },
        _ => (raw, connecting),
    }
}

/// Iterated left approximations by the nonnegative window shifts of the
/// generators, taking fibers: T_{i+1} -> T_i -> X_i -> T_{i+1}[1].
pub fn dual_bousfield_tower(
    t: &BoundedComplex,
    generators: &[BoundedComplex],
    depth: usize,
    window: ShiftWindow,
    bound: usize,
    seed: u64,
) -> Result<Tower> {
    assert!(!generators.is_empty(), "tower needs at least one generator");
    let mut stages: Vec<TowerStage> = Vec::new();
    let mut current = t.clone();
    loop {
        let mut ledger = Vec::new();
        let mut parts: Vec<(BoundedComplex, ChainMap)> = Vec::new();
        for (j, x) in generators.iter().enumerate() {
            let smax = x.hi() - current.lo;
            for s in window.hi + 1..=smax {
                if hom_k_dim(&current, &x.shift(s), 0) != 0 {
                    return Err(Error::WindowTooSmall {
                        lo: window.lo,
                        hi: window.hi,
                        reason: format!("generator {j} still admits maps at shift {s}"),
                    });
                }
            }
            for s in 0..=window.hi {
                let xs = x.shift(s);
                let basis = hom_complex(&current, &xs).h_basis(0);
                ledger.push(LedgerEntry { generator: j, shift: s, dim: basis.len() });
                for f in basis {
                    parts.push((xs.clone(), f));
                }
            }
        }
        if parts.is_empty() || stages.len() == depth {
            let stabilized = parts.is_empty();
            return Ok(Tower {
                direction: Direction::Lim,
                stages,
                residual: current,
                final_ledger: ledger,
                stabilized,
                depth,
            });
        }
        let (bundle, approximation) = bundle_into(&current, &parts);
        let cd = cone(&approximation);
        let raw = cd.cone.shift(-1);
        let raw_maps: Vec<ModuleMap> =
            (raw.lo..=raw.hi()).map(|i| cd.to_shifted_source.get(i - 1)).collect();
        let raw_connecting = ChainMap::new(raw.clone(), current.clone(), raw.lo, raw_maps);
        let (next, connecting) = minimal_model(raw, raw_connecting, bound, seed);
        for (xs, f) in &parts {
            let composite = f.compose(&connecting);
            assert!(
                homotopy_between(&composite, &ChainMap::zero(&next, xs)).is_some(),
                "stage composite must vanish up to homotopy"
            );
        }
        stages.push(TowerStage {
            residual: current,
            ledger,
            bundle,
            approximation,
            connecting: connecting.clone(),
        });
        current = next;
    }
}

/// Iterated right approximations by the nonpositive window shifts of the
/// generators, taking cones: X_i -> T_i -> T_{i+1} -> X_i[1].
pub fn bousfield_tower(
    t: &BoundedComplex,
    generators: &[BoundedComplex],
    depth: usize,
    window: ShiftWindow,
    bound: usize,
    seed: u64,
) -> Result<Tower> {
    assert!(!generators.is_empty(), "tower needs at least one generator");
    let mut stages: Vec<TowerStage> = Vec::new();
    let mut current = t.clone();
    loop {
        let mut ledger = Vec::new();
        let mut parts: Vec<(BoundedComplex, ChainMap)> = Vec::new();
        for (j, x) in generators.iter().enumerate() {
            let smin = x.lo - current.hi();
            for s in smin..window.lo {
                if hom_k_dim(&x.shift(s), &current, 0) != 0 {
                    return Err(Error::WindowTooSmall {
                        lo: window.lo,
                        hi: window.hi,
                        reason: format!("generator {j} still admits maps at shift {s}"),
                    });
                }
            }
            for s in window.lo..=0 {
                let xs = x.shift(s);
                let basis = hom_complex(&xs, &current).h_basis(0);
                ledger.push(LedgerEntry { generator: j, shift: s, dim: basis.len() });
                for f in basis {
                    parts.push((xs.clone(), f));
                }
            }
        }
        if parts.is_empty() || stages.len() == depth {
            let stabilized = parts.is_empty();
            return Ok(Tower {
                direction: Direction::Colim,
                stages,
                residual: current,
                final_ledger: ledger,
                stabilized,
                depth,
            });
        }
        let (bundle, approximation) = bundle_from(&current, &parts);
        let cd = cone(&approximation);
        let (next, connecting) = minimal_model_into(cd.cone, cd.from_target, bound, seed);
        for (xs, f) in &parts {
            let composite = connecting.compose(f);
            assert!(
                homotopy_between(&composite, &ChainMap::zero(xs, &next)).is_some(),
                "stage composite must vanish up to homotopy"
            );
        }
        stages.push(TowerStage {
            residual: current,
            ledger,
            bundle,
            approximation,
            connecting: connecting.clone(),
        });
        current = next;
    }
}

/// Kernel filtrations of a composable matrix sequence: for each starting
/// position, the first index from which the kernels of the iterated
/// composites stay constant, or None when still growing at the end.
pub struct DualMlReport {
    pub stabilization: Vec<Option<usize>>,
}

impl DualMlReport {
    pub fn passes(&self) -> bool {
        self.stabilization.iter().all(|s| s.is_some())
    }
}

pub fn dual_ml_check(seq: &[Matrix]) -> Result<DualMlReport> {
    for k in 0..seq.len().saturating_sub(1) {
        if seq[k + 1].cols != seq[k].rows {
            return Err(Error::MismatchedChain { at: k });
        }
    }
    let mut stabilization = Vec::new();
    for i in 0..seq.len() {
        let mut kdims = vec![0usize];
        let mut comp = Matrix::identity(seq[i].cols, seq[i].p);
        for f in &seq[i..] {
            comp = f.mul(&comp);
            kdims.push(comp.cols - comp.rank());
        }
        let last = *kdims.last().unwrap();
        let mut t = kdims.len() - 1;
        while t > 0 && kdims[t - 1] == last {
            t -= 1;
        }
        let certified = t < kdims.len() - 1 || last == seq[i].cols;
        stabilization.push(if certified { Some(t) } else { None });
    }
    Ok(DualMlReport { stabilization })
}
