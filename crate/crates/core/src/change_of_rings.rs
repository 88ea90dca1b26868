//! Algebra morphisms and the functors they induce: restriction, tensoring
//! up, homming up, perfectness certificates for the associated bimodules,
//! and checkers for the hypotheses and conclusions that transfer Gorenstein
//! projectives and singularity classes along the morphism.

use crate::algebra::{envelope, Path, PathAlgebra, Quiver};
use crate::certified::Certified;
use crate::complex::{
    hom_complex, homology, min_proj_resolution, pdim, periodic_resolution, BoundedComplex,
    ResolutionCycle,
};
use crate::error::{Error, Result};
use crate::gorenstein::{is_gorenstein_projective, left_mult_map};
use crate::linalg::{quotient_by_subspace, Matrix};
use crate::module::{
    cokernel, decompose, direct_sum, express_in_hom_basis, factor_through_projection, hom_basis,
    is_projective, kernel, lift_through_surjection, projective, projective_component_paths,
    radical, regular, simple, syzygy_module, ModuleMap, Representation,
};
use crate::singularity::{
    dsg_hom, dsg_indecomposables, dsg_object, is_perfect, DsgObject, PerfectCycle, PerfectWitness,
};
use std::sync::Arc;

/// Degrees checked when certifying that torsion vanishes.
pub const TOR_WINDOW: usize = 8;

/// An algebra morphism sending each source vertex to a sum of target
/// idempotents and each source arrow to a compatible target element.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub source: Arc<PathAlgebra>,
    pub target: Arc<PathAlgebra>,
    /// Per source vertex, the target vertices whose idempotents sum to its image.
    pub vertex_images: Vec<Vec<usize>>,
    /// Per source arrow, its image as a combination of target paths.
    pub arrow_images: Vec<Vec<(u64, Path)>>,
}

fn path_in_quiver(q: &Quiver, path: &Path) -> bool {
    let mut at = path.source;
    if at >= q.vertices.len() {
        return false;
    }
    for &k in &path.arrows {
        if k >= q.arrows.len() || q.arrows[k].src != at {
            return false;
        }
        at = q.arrows[k].tgt;
    }
    at == path.target
}

impl AlgebraMorphism {
    /// Validate the images and check every source relation maps to zero.
    pub fn new(
        source: Arc<PathAlgebra>,
        target: Arc<PathAlgebra>,
        vertex_images: Vec<Vec<usize>>,
        arrow_images: Vec<Vec<(u64, Path)>>,
    ) -> Result<AlgebraMorphism> {
        if source.p != target.p {
            return Err(Error::MalformedMorphism("characteristics differ".into()));
        }
        if vertex_images.len() != source.num_vertices() {
            return Err(Error::MalformedMorphism(
                "one vertex image list per source vertex is required".into(),
            ));
        }
        if arrow_images.len() != source.quiver.arrows.len() {
            return Err(Error::MalformedMorphism(
                "one arrow image per source arrow is required".into(),
            ));
        }
        let mut seen = vec![false; target.num_vertices()];
        for us in &vertex_images {
            for &u in us {
                if u >= target.num_vertices() {
                    return Err(Error::MalformedMorphism("vertex image out of range".into()));
                }
                if seen[u] {
                    return Err(Error::MalformedMorphism(format!(
                        "target vertex {} lies in two vertex images",
                        target.quiver.vertices[u]
                    )));
                }
                seen[u] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::MalformedMorphism(
                "vertex images do not cover the target vertices".into(),
            ));
        }
        for (k, terms) in arrow_images.iter().enumerate() {
            let ar = &source.quiver.arrows[k];
            for (c, path) in terms {
                if c % target.p == 0 {
                    return Err(Error::MalformedMorphism(format!(
                        "image of arrow {} has a zero coefficient",
                        ar.name
                    )));
                }
                if !path_in_quiver(&target.quiver, path) {
                    return Err(Error::MalformedMorphism(format!(
                        "image of arrow {} is not a target path",
                        ar.name
                    )));
                }
                if !vertex_images[ar.src].contains(&path.source)
                    || !vertex_images[ar.tgt].contains(&path.target)
                {
                    return Err(Error::MalformedMorphism(format!(
                        "image of arrow {} does not respect the endpoint idempotents",
                        ar.name
                    )));
                }
            }
        }
        let f = AlgebraMorphism { source, target, vertex_images, arrow_images };
        for (ri, rel) in f.source.relations.iter().enumerate() {
            let mut acc = vec![0u64; f.target.dim()];
            for (c, path) in &rel.terms {
                let img = f.apply_to_path(path);
                for (slot, v) in acc.iter_mut().zip(img) {
                    *slot = (*slot + c * v) % f.target.p;
                }
            }
            if acc.iter().any(|&v| v != 0) {
                return Err(Error::MalformedMorphism(format!(
                    "source relation {} does not map to zero",
                    ri
                )));
            }
        }
        Ok(f)
    }

    /// The identity morphism of an algebra.
    pub fn identity(a: &Arc<PathAlgebra>) -> AlgebraMorphism {
        let vertex_images = (0..a.num_vertices()).map(|i| vec![i]).collect();
        let arrow_images = a
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(k, ar)| vec![(1, Path { source: ar.src, target: ar.tgt, arrows: vec![k] })])
            .collect();
        AlgebraMorphism { source: a.clone(), target: a.clone(), vertex_images, arrow_images }
    }

    /// Match vertices and arrows of the source to target ones by name.
    pub fn by_names(
        source: &Arc<PathAlgebra>,
        target: &Arc<PathAlgebra>,
    ) -> Result<AlgebraMorphism> {
        let mut vertex_images = Vec::new();
        for name in &source.quiver.vertices {
            let u = target.quiver.vertex_index(name).ok_or_else(|| {
                Error::MalformedMorphism(format!("target has no vertex named {}", name))
            })?;
            vertex_images.push(vec![u]);
        }
        let mut arrow_images = Vec::new();
        for ar in &source.quiver.arrows {
            let k = target.quiver.arrow_index(&ar.name).ok_or_else(|| {
                Error::MalformedMorphism(format!("target has no arrow named {}", ar.name))
            })?;
            let tar = &target.quiver.arrows[k];
            arrow_images.push(vec![(1, Path { source: tar.src, target: tar.tgt, arrows: vec![k] })]);
        }
        AlgebraMorphism::new(source.clone(), target.clone(), vertex_images, arrow_images)
    }

    /// For each target vertex, the source vertex whose image contains it.
    pub fn owner(&self) -> Vec<usize> {
        let mut own = vec![usize::MAX; self.target.num_vertices()];
        for (i, us) in self.vertex_images.iter().enumerate() {
            for &u in us {
                own[u] = i;
            }
        }
        own
    }

    /// The image of the idempotent at a source vertex, as a dense element.
    pub fn vertex_elem(&self, i: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.target.dim()];
        for &u in &self.vertex_images[i] {
            out[self.target.idempotents[u]] = 1;
        }
        out
    }

    /// The image of a source arrow, as a dense element.
    pub fn arrow_elem(&self, k: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.target.dim()];
        for (c, path) in &self.arrow_images[k] {
            for (bi, cc) in self.target.normal_form(path) {
                out[bi] = (out[bi] + c * cc) % self.target.p;
            }
        }
        out
    }

    /// The image of a source path, as a dense element.
    pub fn apply_to_path(&self, path: &Path) -> Vec<u64> {
        let mut out = self.vertex_elem(path.source);
        for &k in &path.arrows {
            out = self.target.mul_elems(&out, &self.arrow_elem(k));
        }
        out
    }

    /// The induced morphism between the opposite algebras.
    pub fn opposite(&self) -> AlgebraMorphism {
        AlgebraMorphism {
            source: Arc::new(self.source.opposite()),
            target: Arc::new(self.target.opposite()),
            vertex_images: self.vertex_images.clone(),
            arrow_images: self
                .arrow_images
                .iter()
                .map(|terms| terms.iter().map(|(c, p)| (*c, p.reversed())).collect())
                .collect(),
        }
    }
}

fn component_part(a: &PathAlgebra, elem: &[u64], i: usize, j: usize) -> Vec<(usize, u64)> {
    a.component(i, j).iter().filter(|&&bi| elem[bi] != 0).map(|&bi| (bi, elem[bi])).collect()
}

/// A target module viewed as a source module along the morphism.
pub fn restrict(f: &AlgebraMorphism, n: &Representation) -> Representation {
    assert!(
        n.algebra.name == f.target.name && n.algebra.dim() == f.target.dim(),
        "module must live over the morphism target"
    );
    let s = &f.source;
    let dims: Vec<usize> =
        f.vertex_images.iter().map(|us| us.iter().map(|&u| n.dims[u]).sum()).collect();
    let mut maps = Vec::new();
    for (k, ar) in s.quiver.arrows.iter().enumerate() {
        let elem = f.arrow_elem(k);
        let mut m = Matrix::zero(dims[ar.tgt], dims[ar.src], s.p);
        let mut roff = 0;
        for &w in &f.vertex_images[ar.tgt] {
            let mut coff = 0;
            for &v in &f.vertex_images[ar.src] {
                let part = component_part(&f.target, &elem, v, w);
                if !part.is_empty() {
                    m.set_block(roff, coff, &n.act_elem(&part, v, w));
                }
                coff += n.dims[v];
            }
            roff += n.dims[w];
        }
        maps.push(m);
    }
    Representation::new(s, dims, maps)
}

/// The restriction of a map between target modules.
pub fn restrict_map(f: &AlgebraMorphism, g: &ModuleMap) -> ModuleMap {
    let src = restrict(f, &g.source);
    let tgt = restrict(f, &g.target);
    let mut blocks = Vec::new();
    for i in 0..f.source.num_vertices() {
        let mut b = Matrix::zero(tgt.dims[i], src.dims[i], f.source.p);
        let mut off = 0;
        let mut coff = 0;
        for &u in &f.vertex_images[i] {
            b.set_block(off, coff, &g.blocks[u]);
            off += g.target.dims[u];
            coff += g.source.dims[u];
        }
        blocks.push(b);
    }
    ModuleMap { source: src, target: tgt, blocks }
}

struct ProjSum {
    rep: Representation,
    verts: Vec<usize>,
    /// Start row of each summand inside each vertex component.
    offsets: Vec<Vec<usize>>,
    /// Row of each summand's generator inside its own vertex component.
    gen_pos: Vec<usize>,
}

fn trivial_position(a: &Arc<PathAlgebra>, v: usize) -> usize {
    projective_component_paths(a, v)[v]
        .iter()
        .position(|q| q.is_trivial())
        .expect("projective has its generator")
}

fn proj_sum(a: &Arc<PathAlgebra>, verts: &[usize]) -> ProjSum {
    if verts.is_empty() {
        return ProjSum {
            rep: Representation::zero(a),
            verts: Vec::new(),
            offsets: Vec::new(),
            gen_pos: Vec::new(),
        };
    }
    let parts: Vec<Representation> = verts.iter().map(|&v| projective(a, v)).collect();
    let (rep, _, _) = direct_sum(&parts);
    let nv = a.num_vertices();
    let mut offsets = Vec::new();
    let mut cursor = vec![0usize; nv];
    for part in &parts {
        offsets.push(cursor.clone());
        for w in 0..nv {
            cursor[w] += part.dims[w];
        }
    }
    let gen_pos =
        verts.iter().zip(&offsets).map(|(&v, off)| off[v] + trivial_position(a, v)).collect();
    ProjSum { rep, verts: verts.to_vec(), offsets, gen_pos }
}

/// Extend chosen generator images to the map from the projective sum.
fn extend_generators(ps: &ProjSum, target: &Representation, images: &[Vec<u64>]) -> ModuleMap {
    let a = target.algebra.clone();
    let nv = a.num_vertices();
    let mut blocks: Vec<Matrix> =
        (0..nv).map(|w| Matrix::zero(target.dims[w], ps.rep.dims[w], a.p)).collect();
    for (k, &v) in ps.verts.iter().enumerate() {
        assert!(images[k].len() == target.dims[v], "generator image has the wrong length");
        let mut gen = Matrix::zero(target.dims[v], 1, a.p);
        for (r, &c) in images[k].iter().enumerate() {
            gen.set(r, 0, c);
        }
        let comps = projective_component_paths(&a, v);
        for (w, paths) in comps.iter().enumerate() {
            for (idx, q) in paths.iter().enumerate() {
                let img = target.act_path(q).mul(&gen);
                for r in 0..target.dims[w] {
                    blocks[w].set(r, ps.offsets[k][w] + idx, img.get(r, 0));
                }
            }
        }
    }
    ModuleMap { source: ps.rep.clone(), target: target.clone(), blocks }
}

fn top_data(m: &Representation) -> (Vec<usize>, Vec<Vec<u64>>) {
    let (_, rad_inc) = radical(m);
    let mut verts = Vec::new();
    let mut gens = Vec::new();
    for v in 0..m.algebra.num_vertices() {
        let qd = quotient_by_subspace(&rad_inc.blocks[v].image_basis());
        for j in 0..qd.section.cols {
            verts.push(v);
            gens.push(qd.section.col(j));
        }
    }
    (verts, gens)
}

struct PresentationData {
    p0: ProjSum,
    cover: ModuleMap,
    p1: ProjSum,
    d: ModuleMap,
}

fn presentation(m: &Representation) -> PresentationData {
    let (verts0, gens0) = top_data(m);
    let p0 = proj_sum(&m.algebra, &verts0);
    let cover = extend_generators(&p0, m, &gens0);
    assert!(cover.is_surjective(), "generators must cover the module");
    let (omega, inc) = kernel(&cover);
    let (verts1, gens1) = top_data(&omega);
    let p1 = proj_sum(&m.algebra, &verts1);
    let cover1 = extend_generators(&p1, &omega, &gens1);
    assert!(cover1.is_surjective(), "generators must cover the kernel");
    let d = inc.compose(&cover1);
    PresentationData { p0, cover, p1, d }
}

fn tensor_verts(f: &AlgebraMorphism, verts: &[usize]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut flat_verts = Vec::new();
    let mut owners = Vec::new();
    for (k, &i) in verts.iter().enumerate() {
        for &u in &f.vertex_images[i] {
            flat_verts.push(u);
            owners.push((k, u));
        }
    }
    (flat_verts, owners)
}

/// The induced map between tensored projective sums.
fn tensor_proj_map(
    f: &AlgebraMorphism,
    g: &ModuleMap,
    pa: &ProjSum,
    pb: &ProjSum,
    qa: &ProjSum,
    fa: &[(usize, usize)],
    qb: &ProjSum,
    fb: &[(usize, usize)],
) -> ModuleMap {
    let s = &f.source;
    let t = &f.target;
    let spaths: Vec<Vec<Vec<Path>>> =
        (0..s.num_vertices()).map(|v| projective_component_paths(s, v)).collect();
    let mut images: Vec<Vec<u64>> = Vec::new();
    for &(k, u) in fa {
        let j = pa.verts[k];
        let col = g.blocks[j].col(pa.gen_pos[k]);
        let mut img = vec![0u64; qb.rep.dims[u]];
        for (l, &vl) in pb.verts.iter().enumerate() {
            for (idx, qpath) in spaths[vl][j].iter().enumerate() {
                let c = col[pb.offsets[l][j] + idx];
                if c == 0 {
                    continue;
                }
                let gamma = f.apply_to_path(qpath);
                for (fbi, &(lb, ub)) in fb.iter().enumerate() {
                    if lb != l {
                        continue;
                    }
                    for (pos, &bi) in t.component(ub, u).iter().enumerate() {
                        if gamma[bi] == 0 {
                            continue;
                        }
                        let slot = &mut img[qb.offsets[fbi][u] + pos];
                        *slot = (*slot + c * gamma[bi]) % t.p;
                    }
                }
            }
        }
        images.push(img);
    }
    extend_generators(qa, &qb.rep, &images)
}

/// A tensored module together with the projection from its covering sum.
pub struct TensorData {
    pub module: Representation,
    pub proj: ModuleMap,
    pres: PresentationData,
    q0: ProjSum,
    flat0: Vec<(usize, usize)>,
}

/// Tensor a source module up along the morphism, keeping the presentation.
pub fn tensor_up_data(f: &AlgebraMorphism, m: &Representation) -> TensorData {
    let pres = presentation(m);
    let (fl0, flat0) = tensor_verts(f, &pres.p0.verts);
    let q0 = proj_sum(&f.target, &fl0);
    let (fl1, flat1) = tensor_verts(f, &pres.p1.verts);
    let q1 = proj_sum(&f.target, &fl1);
    let dhat = tensor_proj_map(f, &pres.d, &pres.p1, &pres.p0, &q1, &flat1, &q0, &flat0);
    let (module, proj) = cokernel(&dhat);
    TensorData { module, proj, pres, q0, flat0 }
}

/// Tensor a source module up along the morphism.
pub fn tensor_up(f: &AlgebraMorphism, m: &Representation) -> Representation {
    tensor_up_data(f, m).module
}

fn tensor_map_between(
    f: &AlgebraMorphism,
    g: &ModuleMap,
    da: &TensorData,
    db: &TensorData,
) -> ModuleMap {
    let lifted = lift_through_surjection(&g.compose(&da.pres.cover), &db.pres.cover)
        .expect("maps lift through projective covers");
    let ghat =
        tensor_proj_map(f, &lifted, &da.pres.p0, &db.pres.p0, &da.q0, &da.flat0, &db.q0, &db.flat0);
    factor_through_projection(&da.proj, &db.proj.compose(&ghat))
        .expect("tensored maps descend to the cokernel")
}

/// The tensored map between tensored modules.
pub fn tensor_up_map(f: &AlgebraMorphism, g: &ModuleMap) -> ModuleMap {
    let da = tensor_up_data(f, &g.source);
    let db = tensor_up_data(f, &g.target);
    tensor_map_between(f, g, &da, &db)
}

/// The unit of the adjunction, from a module to its tensored restriction.
pub fn unit_map(f: &AlgebraMorphism, m: &Representation) -> ModuleMap {
    let data = tensor_up_data(f, m);
    let rq0 = restrict(f, &data.q0.rep);
    let mut images = Vec::new();
    for (k, &i) in data.pres.p0.verts.iter().enumerate() {
        let mut img = vec![0u64; rq0.dims[i]];
        let mut off = 0;
        for &u in &f.vertex_images[i] {
            let fbi = data
                .flat0
                .iter()
                .position(|&(kk, uu)| kk == k && uu == u)
                .expect("tensored summand present");
            img[off + data.q0.gen_pos[fbi]] = 1;
            off += data.q0.rep.dims[u];
        }
        images.push(img);
    }
    let eta0 = extend_generators(&data.pres.p0, &rq0, &images);
    let rproj = restrict_map(f, &data.proj);
    factor_through_projection(&data.pres.cover, &rproj.compose(&eta0))
        .expect("the unit descends along the cover")
}

/// A hommed-up module with the hom bases realizing its coordinates.
pub struct HomUpData {
    pub module: Representation,
    pub bases: Vec<Vec<ModuleMap>>,
}

/// Assemble a right module over `gamma` whose component at a vertex is the
/// hom space from the indexed slice into `m`; `lmults[k]` must be the left
/// multiplication `slices[tgt] -> slices[src]` for the k-th gamma arrow.
fn module_from_hom_slices(
    gamma: &Arc<PathAlgebra>,
    slices: &[Representation],
    lmults: &[ModuleMap],
    m: &Representation,
) -> (Representation, Vec<Vec<ModuleMap>>) {
    let bases: Vec<Vec<ModuleMap>> = slices.iter().map(|s| hom_basis(s, m)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut maps = Vec::new();
    for (k, ar) in gamma.quiver.arrows.iter().enumerate() {
        let mut mat = Matrix::zero(dims[ar.tgt], dims[ar.src], gamma.p);
        for (col, phi) in bases[ar.src].iter().enumerate() {
            let composed = phi.compose(&lmults[k]);
            let coords = express_in_hom_basis(&bases[ar.tgt], &composed)
                .expect("precomposition stays in the hom space");
            for (row, &c) in coords.iter().enumerate() {
                if c != 0 {
                    mat.set(row, col, c);
                }
            }
        }
        maps.push(mat);
    }
    (Representation::new(gamma, dims, maps), bases)
}

/// Hom a source module up along the morphism, keeping the hom bases.
pub fn hom_up_data(f: &AlgebraMorphism, m: &Representation) -> HomUpData {
    let t = &f.target;
    let projs: Vec<Representation> = (0..t.num_vertices()).map(|w| projective(t, w)).collect();
    let slices: Vec<Representation> = projs.iter().map(|p| restrict(f, p)).collect();
    let lmults: Vec<ModuleMap> = t
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(k, ar)| restrict_map(f, &left_mult_map(t, k, &projs[ar.tgt], &projs[ar.src])))
        .collect();
    let (module, bases) = module_from_hom_slices(t, &slices, &lmults, m);
    HomUpData { module, bases }
}

/// Hom a source module up along the morphism.
pub fn hom_up(f: &AlgebraMorphism, m: &Representation) -> Representation {
    hom_up_data(f, m).module
}

/// The hommed-up map between hommed-up modules.
pub fn hom_up_map(f: &AlgebraMorphism, g: &ModuleMap) -> ModuleMap {
    let da = hom_up_data(f, &g.source);
    let db = hom_up_data(f, &g.target);
    let mut blocks = Vec::new();
    for w in 0..f.target.num_vertices() {
        let mut b = Matrix::zero(db.module.dims[w], da.module.dims[w], f.target.p);
        for (col, phi) in da.bases[w].iter().enumerate() {
            let coords = express_in_hom_basis(&db.bases[w], &g.compose(phi))
                .expect("postcomposition stays in the hom space");
            for (row, &c) in coords.iter().enumerate() {
                if c != 0 {
                    b.set(row, col, c);
                }
            }
        }
        blocks.push(b);
    }
    ModuleMap { source: da.module, target: db.module, blocks }
}

struct EnvIndex {
    nva: usize,
    nvb: usize,
    base: usize,
}

impl EnvIndex {
    fn new(a: &PathAlgebra, b: &PathAlgebra) -> EnvIndex {
        EnvIndex {
            nva: a.num_vertices(),
            nvb: b.num_vertices(),
            base: a.quiver.arrows.len() * b.num_vertices(),
        }
    }

    fn vid(&self, i: usize, j: usize) -> usize {
        i * self.nvb + j
    }

    fn a_arrow(&self, ai: usize, j: usize) -> usize {
        ai * self.nvb + j
    }

    fn b_arrow(&self, bi: usize, i: usize) -> usize {
        self.base + bi * self.nva + i
    }
}

fn unit_elem(dim: usize, bi: usize) -> Vec<u64> {
    let mut e = vec![0u64; dim];
    e[bi] = 1;
    e
}

/// A bimodule over an envelope, with the carrier basis behind each component.
pub struct BimoduleData {
    pub rep: Representation,
    /// Per envelope vertex, the carrier basis indices spanning that component.
    pub coords: Vec<Vec<usize>>,
}

/// The carrier of two morphisms with a common target, as a module over the
/// envelope of their sources; the first source acts on the left.
pub fn bimodule(
    fl: &AlgebraMorphism,
    fr: &AlgebraMorphism,
    env: &Arc<PathAlgebra>,
) -> BimoduleData {
    assert!(
        fl.target.name == fr.target.name && fl.target.dim() == fr.target.dim(),
        "the two morphisms must share a carrier"
    );
    let c = &fl.target;
    let ix = EnvIndex::new(&fl.source, &fr.source);
    assert!(
        env.num_vertices() == ix.nva * ix.nvb
            && env.quiver.arrows.len()
                == fl.source.quiver.arrows.len() * ix.nvb + fr.source.quiver.arrows.len() * ix.nva,
        "envelope does not match the morphism pair"
    );
    let lown = fl.owner();
    let rown = fr.owner();
    let mut coords: Vec<Vec<usize>> = vec![Vec::new(); env.num_vertices()];
    for (bi, path) in c.basis.iter().enumerate() {
        coords[ix.vid(lown[path.source], rown[path.target])].push(bi);
    }
    let dims: Vec<usize> = coords.iter().map(|v| v.len()).collect();
    let mut maps = vec![Matrix::zero(0, 0, c.p); env.quiver.arrows.len()];
    for ai in 0..fl.source.quiver.arrows.len() {
        let aar = &fl.source.quiver.arrows[ai];
        let elem = fl.arrow_elem(ai);
        for j in 0..ix.nvb {
            let src_env = ix.vid(aar.tgt, j);
            let tgt_env = ix.vid(aar.src, j);
            let mut mat = Matrix::zero(dims[tgt_env], dims[src_env], c.p);
            for (col, &qbi) in coords[src_env].iter().enumerate() {
                let prod = c.mul_elems(&elem, &unit_elem(c.dim(), qbi));
                for (row, &rbi) in coords[tgt_env].iter().enumerate() {
                    if prod[rbi] != 0 {
                        mat.set(row, col, prod[rbi]);
                    }
                }
            }
            maps[ix.a_arrow(ai, j)] = mat;
        }
    }
    for bi in 0..fr.source.quiver.arrows.len() {
        let bar = &fr.source.quiver.arrows[bi];
        let elem = fr.arrow_elem(bi);
        for i in 0..ix.nva {
            let src_env = ix.vid(i, bar.src);
            let tgt_env = ix.vid(i, bar.tgt);
            let mut mat = Matrix::zero(dims[tgt_env], dims[src_env], c.p);
            for (col, &qbi) in coords[src_env].iter().enumerate() {
                let prod = c.mul_elems(&unit_elem(c.dim(), qbi), &elem);
                for (row, &rbi) in coords[tgt_env].iter().enumerate() {
                    if prod[rbi] != 0 {
                        mat.set(row, col, prod[rbi]);
                    }
                }
            }
            maps[ix.b_arrow(bi, i)] = mat;
        }
    }
    BimoduleData { rep: Representation::new(env, dims, maps), coords }
}

/// The bimodule map induced on carriers by applying the morphism pathwise.
pub fn bimodule_morphism_map(
    f: &AlgebraMorphism,
    lam: &BimoduleData,
    gam: &BimoduleData,
) -> ModuleMap {
    let nv = lam.rep.algebra.num_vertices();
    let p = lam.rep.algebra.p;
    let mut blocks = Vec::new();
    for ve in 0..nv {
        let mut b = Matrix::zero(gam.rep.dims[ve], lam.rep.dims[ve], p);
        for (col, &qbi) in lam.coords[ve].iter().enumerate() {
            let img = f.apply_to_path(&f.source.basis[qbi]);
            for (row, &rbi) in gam.coords[ve].iter().enumerate() {
                if img[rbi] != 0 {
                    b.set(row, col, img[rbi]);
                }
            }
        }
        blocks.push(b);
    }
    let out = ModuleMap { source: lam.rep.clone(), target: gam.rep.clone(), blocks };
    out.validate();
    out
}

/// Whether the two-term bimodule complex built on the morphism is perfect
/// over the envelope of the source with itself.
pub fn cone_f_perfect(
    f: &AlgebraMorphism,
    bound: usize,
    seed: u64,
) -> Certified<PerfectWitness, PerfectCycle> {
    let lam = &f.source;
    let env = Arc::new(envelope(lam, lam));
    let idm = AlgebraMorphism::identity(lam);
    let lbim = bimodule(&idm, &idm, &env);
    let gbim = bimodule(f, f, &env);
    let fmap = bimodule_morphism_map(f, &lbim, &gbim);
    let x = BoundedComplex::new(&env, -1, vec![lbim.rep.clone(), gbim.rep.clone()], vec![fmap]);
    is_perfect(&x, bound, seed)
}

fn right_leg(
    env: &Arc<PathAlgebra>,
    aside: &Arc<PathAlgebra>,
    bside: &Arc<PathAlgebra>,
) -> AlgebraMorphism {
    let ix = EnvIndex::new(aside, bside);
    let vertex_images = (0..ix.nvb).map(|j| (0..ix.nva).map(|i| ix.vid(i, j)).collect()).collect();
    let arrow_images = bside
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(bi, ar)| {
            (0..ix.nva)
                .map(|i| {
                    (
                        1u64,
                        Path {
                            source: ix.vid(i, ar.src),
                            target: ix.vid(i, ar.tgt),
                            arrows: vec![ix.b_arrow(bi, i)],
                        },
                    )
                })
                .collect()
        })
        .collect();
    AlgebraMorphism::new(bside.clone(), env.clone(), vertex_images, arrow_images)
        .expect("the right leg of an envelope is a morphism")
}

fn bimodule_slice(
    x: &Representation,
    ix: &EnvIndex,
    bside: &Arc<PathAlgebra>,
    w: usize,
) -> Representation {
    let dims: Vec<usize> = (0..ix.nvb).map(|j| x.dims[ix.vid(w, j)]).collect();
    let maps: Vec<Matrix> =
        (0..bside.quiver.arrows.len()).map(|bi| x.maps[ix.b_arrow(bi, w)].clone()).collect();
    Representation::new(bside, dims, maps)
}

fn slice_map(g: &ModuleMap, ix: &EnvIndex, bside: &Arc<PathAlgebra>, w: usize) -> ModuleMap {
    ModuleMap {
        source: bimodule_slice(&g.source, ix, bside, w),
        target: bimodule_slice(&g.target, ix, bside, w),
        blocks: (0..ix.nvb).map(|j| g.blocks[ix.vid(w, j)].clone()).collect(),
    }
}

fn slice_left_mult(
    x: &Representation,
    ix: &EnvIndex,
    aside: &Arc<PathAlgebra>,
    bside: &Arc<PathAlgebra>,
    ci: usize,
) -> ModuleMap {
    let ar = &aside.quiver.arrows[ci];
    ModuleMap {
        source: bimodule_slice(x, ix, bside, ar.tgt),
        target: bimodule_slice(x, ix, bside, ar.src),
        blocks: (0..ix.nvb).map(|j| x.maps[ix.a_arrow(ci, j)].clone()).collect(),
    }
}

/// The dual of the regular target bimodule over the source, as a complex of
/// target modules, with the perfectness verdict over the target.
pub struct RhomOutcome {
    pub pdim_right: Certified<usize, ResolutionCycle>,
    pub complex: Option<BoundedComplex>,
    pub perfect: Certified<PerfectWitness, PerfectCycle>,
}

/// Resolve the target as a bimodule, dualize into the source, and test
/// perfectness of the resulting complex over the target.
pub fn rhom_gamma_lambda(f: &AlgebraMorphism, bound: usize, seed: u64) -> Result<RhomOutcome> {
    let gam = &f.target;
    let lam = &f.source;
    let pdim_right = pdim(&restrict(f, &regular(gam)), bound, seed);
    let d = match &pdim_right {
        Certified::Yes(d) => *d,
        _ => {
            return Ok(RhomOutcome {
                pdim_right,
                complex: None,
                perfect: Certified::Undetermined {
                    bound_used: bound,
                    reason: "the restricted regular module has no certified finite projective dimension"
                        .into(),
                },
            })
        }
    };
    let env = Arc::new(envelope(gam, lam));
    let ix = EnvIndex::new(gam, lam);
    let b0 = bimodule(&AlgebraMorphism::identity(gam), f, &env);
    let mut zs = vec![b0.rep];
    let mut steps: Vec<(ModuleMap, ModuleMap)> = Vec::new();
    for _ in 0..d {
        let (z, inc, cover) = syzygy_module(zs.last().expect("nonempty"));
        steps.push((cover, inc));
        zs.push(z);
    }
    let rl = right_leg(&env, gam, lam);
    if !is_projective(&restrict(&rl, &zs[d])) {
        return Err(Error::BimoduleSyzygyNotLambdaProjective { step: d });
    }
    let mut cterms = vec![zs[d].clone()];
    let mut cdiffs: Vec<ModuleMap> = Vec::new();
    if d > 0 {
        cdiffs.push(steps[d - 1].1.clone());
        for t in (1..d).rev() {
            cterms.push(steps[t].0.source.clone());
            cdiffs.push(steps[t - 1].1.compose(&steps[t].0));
        }
        cterms.push(steps[0].0.source.clone());
    }
    let lreg = regular(lam);
    let duals: Vec<(Representation, Vec<Vec<ModuleMap>>)> = cterms
        .iter()
        .map(|x| {
            let slices: Vec<Representation> =
                (0..ix.nva).map(|w| bimodule_slice(x, &ix, lam, w)).collect();
            let lmults: Vec<ModuleMap> = (0..gam.quiver.arrows.len())
                .map(|ci| slice_left_mult(x, &ix, gam, lam, ci))
                .collect();
            module_from_hom_slices(gam, &slices, &lmults, &lreg)
        })
        .collect();
    let mut dterms = Vec::new();
    let mut ddiffs = Vec::new();
    for s in 0..=d {
        dterms.push(duals[d - s].0.clone());
        if s < d {
            let xd = &cdiffs[d - s - 1];
            let from = &duals[d - s];
            let to = &duals[d - s - 1];
            let mut blocks = Vec::new();
            for w in 0..ix.nva {
                let sm = slice_map(xd, &ix, lam, w);
                let mut b = Matrix::zero(to.0.dims[w], from.0.dims[w], gam.p);
                for (col, phi) in from.1[w].iter().enumerate() {
                    let coords = express_in_hom_basis(&to.1[w], &phi.compose(&sm))
                        .expect("the dual map stays in the hom space");
                    for (row, &c) in coords.iter().enumerate() {
                        if c != 0 {
                            b.set(row, col, c);
                        }
                    }
                }
                blocks.push(b);
            }
            ddiffs.push(ModuleMap { source: from.0.clone(), target: to.0.clone(), blocks });
        }
    }
    let dcx = BoundedComplex::new(gam, 0, dterms, ddiffs);
    let perfect = is_perfect(&dcx, bound, seed);
    Ok(RhomOutcome { pdim_right, complex: Some(dcx), perfect })
}

/// Extension dimensions between two modules through the named window, when
/// the resolution of the first is certified within the bound.
pub fn ext_dims(
    m: &Representation,
    n: &Representation,
    window: usize,
    bound: usize,
    seed: u64,
) -> Option<Vec<usize>> {
    let res = min_proj_resolution(m, bound, seed);
    let px = match &res.finiteness {
        Certified::Yes(_) => res.complex_upto(res.steps.len()),
        Certified::No(cyc) => {
            periodic_resolution(&res).unfold((window + 1).saturating_sub(cyc.lag + cyc.period))
        }
        Certified::Undetermined { .. } => return None,
    };
    let hc = hom_complex(&px, &BoundedComplex::stalk(n.clone(), 0));
    Some((0..=window).map(|i| hc.h_dim(i as i64)).collect())
}

/// Torsion dimensions of a source module against the tensored target, in
/// degrees one through the window.
pub fn tor_dims(
    f: &AlgebraMorphism,
    m: &Representation,
    window: usize,
    bound: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    let res = min_proj_resolution(m, bound, seed);
    let px = match &res.finiteness {
        Certified::Yes(_) => res.complex_upto(res.steps.len()),
        Certified::No(cyc) => {
            periodic_resolution(&res).unfold((window + 1).saturating_sub(cyc.lag + cyc.period))
        }
        Certified::Undetermined { .. } => {
            return Err(Error::NonStabilizing {
                bound,
                dims: res.syzygies.iter().map(|z| z.total_dim()).collect(),
            })
        }
    };
    let datas: Vec<TensorData> = px.terms.iter().map(|t| tensor_up_data(f, t)).collect();
    let mut tdiffs = Vec::new();
    for i in 0..px.terms.len().saturating_sub(1) {
        tdiffs.push(tensor_map_between(f, &px.diffs[i], &datas[i], &datas[i + 1]));
    }
    let tx = BoundedComplex::new(
        &f.target,
        px.lo,
        datas.into_iter().map(|d| d.module).collect(),
        tdiffs,
    );
    Ok((1..=window).map(|n| homology(&tx, -(n as i64)).total_dim()).collect())
}

/// Extension dimension tables between the target simples, upstairs and
/// after restriction.
pub struct EpiEntry {
    pub from: String,
    pub to: String,
    pub upstairs: Vec<usize>,
    pub downstairs: Vec<usize>,
}

/// The evidence window and the per-pair extension tables.
pub struct EpiEvidence {
    pub window: usize,
    pub entries: Vec<EpiEntry>,
}

/// Compare extension dimensions between target simples before and after
/// restriction, through the window.
pub fn homological_epi_evidence(
    f: &AlgebraMorphism,
    window: usize,
    bound: usize,
    seed: u64,
) -> Certified<EpiEvidence, String> {
    let t = &f.target;
    let nv = t.num_vertices();
    let simples: Vec<Representation> = (0..nv).map(|u| simple(t, u)).collect();
    let restricted: Vec<Representation> = simples.iter().map(|s| restrict(f, s)).collect();
    let mut entries = Vec::new();
    for u in 0..nv {
        for v in 0..nv {
            let up = ext_dims(&simples[u], &simples[v], window, bound, seed);
            let down = ext_dims(&restricted[u], &restricted[v], window, bound, seed);
            let (Some(up), Some(down)) = (up, down) else {
                return Certified::Undetermined {
                    bound_used: bound,
                    reason: format!(
                        "resolution bound reached comparing vertices {} and {}",
                        t.quiver.vertices[u], t.quiver.vertices[v]
                    ),
                };
            };
            if up != down {
                return Certified::No(format!(
                    "restriction changes the extension dimensions between the simples at {} and {}: {:?} against {:?}",
                    t.quiver.vertices[u], t.quiver.vertices[v], up, down
                ));
            }
            entries.push(EpiEntry {
                from: t.quiver.vertices[u].clone(),
                to: t.quiver.vertices[v].clone(),
                upstairs: up,
                downstairs: down,
            });
        }
    }
    Certified::Yes(EpiEvidence { window, entries })
}

/// The certified hypotheses attached to a morphism.
pub struct HypothesisReport {
    pub pdim_right: Certified<usize, ResolutionCycle>,
    pub pdim_left: Certified<usize, ResolutionCycle>,
    pub rhom_perfect: Certified<PerfectWitness, PerfectCycle>,
    pub rhom_complex: Option<BoundedComplex>,
    pub cone_perfect_bimodule: Certified<PerfectWitness, PerfectCycle>,
    pub homological_epi: Certified<EpiEvidence, String>,
}

/// Certify the transfer hypotheses for a morphism: finite projective
/// dimension of the target over the source on both sides, perfectness of
/// the dualized target and of the cone bimodule, and the homological
/// epimorphism comparison.
pub fn check_hypotheses(
    f: &AlgebraMorphism,
    bound: usize,
    window: usize,
    seed: u64,
) -> Result<HypothesisReport> {
    let rh = rhom_gamma_lambda(f, bound, seed)?;
    let fop = f.opposite();
    let pdim_left = pdim(&restrict(&fop, &regular(&fop.target)), bound, seed);
    let cone = cone_f_perfect(f, bound, seed);
    let epi = homological_epi_evidence(f, window, bound, seed);
    Ok(HypothesisReport {
        pdim_right: rh.pdim_right,
        pdim_left,
        rhom_perfect: rh.perfect,
        rhom_complex: rh.complex,
        cone_perfect_bimodule: cone,
        homological_epi: epi,
    })
}

/// One tensored Gorenstein projective with its vanishing torsion window.
pub struct TensorEvidence {
    pub source_dims: Vec<usize>,
    pub image_dims: Vec<usize>,
    pub tor: Vec<usize>,
}

/// One restricted Gorenstein projective with its singularity class kind.
pub struct RestrictEvidence {
    pub source_dims: Vec<usize>,
    pub restricted_dims: Vec<usize>,
    pub projective_class: bool,
}

/// One pair of singularity classes with matching morphism dimensions.
pub struct PairEvidence {
    pub left_dims: Vec<usize>,
    pub right_dims: Vec<usize>,
    pub downstairs: usize,
    pub upstairs: usize,
}

/// The certified conclusions attached to a morphism.
pub struct ConclusionReport {
    pub tensor_gproj: Certified<Vec<TensorEvidence>, String>,
    pub restrict_gproj: Certified<Vec<RestrictEvidence>, String>,
    pub fully_faithful: Certified<Vec<PairEvidence>, String>,
    pub kernel_objects: Vec<Representation>,
}

fn tensor_preserves_gproj(
    f: &AlgebraMorphism,
    objs: &[DsgObject],
    bound: usize,
    seed: u64,
) -> Result<Certified<Vec<TensorEvidence>, String>> {
    let mut ev = Vec::new();
    for obj in objs {
        let m = &obj.representative;
        match is_gorenstein_projective(m, bound, seed) {
            Certified::Yes(_) => {}
            Certified::No(_) => continue,
            Certified::Undetermined { bound_used, reason } => {
                return Ok(Certified::Undetermined { bound_used, reason })
            }
        }
        let t = tensor_up(f, m);
        match is_gorenstein_projective(&t, bound, seed) {
            Certified::Yes(_) => {}
            Certified::No(why) => {
                return Ok(Certified::No(format!(
                    "the tensored module with dimensions {} is not Gorenstein projective: {}",
                    t.dims_string(),
                    why
                )))
            }
            Certified::Undetermined { bound_used, reason } => {
                return Ok(Certified::Undetermined { bound_used, reason })
            }
        }
        let tor = tor_dims(f, m, TOR_WINDOW, bound, seed)?;
        if tor.iter().any(|&dm| dm != 0) {
            return Ok(Certified::No(format!(
                "torsion does not vanish on the module with dimensions {}: {:?}",
                m.dims_string(),
                tor
            )));
        }
        ev.push(TensorEvidence { source_dims: m.dims.clone(), image_dims: t.dims.clone(), tor });
    }
    Ok(Certified::Yes(ev))
}

fn restriction_lands_in_gproj_classes(
    f: &AlgebraMorphism,
    objs: &[DsgObject],
    bound: usize,
    seed: u64,
) -> Result<Certified<Vec<RestrictEvidence>, String>> {
    let mut ev = Vec::new();
    for obj in objs {
        let m = &obj.representative;
        match is_gorenstein_projective(m, bound, seed) {
            Certified::Yes(_) => {}
            Certified::No(_) => continue,
            Certified::Undetermined { bound_used, reason } => {
                return Ok(Certified::Undetermined { bound_used, reason })
            }
        }
        let r = restrict(f, m);
        let cls = dsg_object(&r, bound, seed)?;
        if cls.is_zero() {
            ev.push(RestrictEvidence {
                source_dims: m.dims.clone(),
                restricted_dims: r.dims.clone(),
                projective_class: true,
            });
            continue;
        }
        let lag = cls.cycle().expect("nonzero class carries a cycle").lag;
        let member = cls.resolution.syzygies[lag].clone();
        for part in &decompose(&member, seed).summands {
            if is_projective(part) {
                continue;
            }
            match is_gorenstein_projective(part, bound, seed) {
                Certified::Yes(_) => {}
                Certified::No(why) => {
                    return Ok(Certified::No(format!(
                        "the restricted class of the module with dimensions {} contains a summand that is not Gorenstein projective: {}",
                        m.dims_string(),
                        why
                    )))
                }
                Certified::Undetermined { bound_used, reason } => {
                    return Ok(Certified::Undetermined { bound_used, reason })
                }
            }
        }
        ev.push(RestrictEvidence {
            source_dims: m.dims.clone(),
            restricted_dims: r.dims.clone(),
            projective_class: false,
        });
    }
    Ok(Certified::Yes(ev))
}

fn tensor_fully_faithful(
    f: &AlgebraMorphism,
    objs: &[DsgObject],
    bound: usize,
    seed: u64,
) -> Result<Certified<Vec<PairEvidence>, String>> {
    let mut images = Vec::new();
    for obj in objs {
        images.push(dsg_object(&tensor_up(f, &obj.representative), bound, seed)?);
    }
    let mut ev = Vec::new();
    for (i, a) in objs.iter().enumerate() {
        for (j, b) in objs.iter().enumerate() {
            let down = dsg_hom(a, b)?.dim;
            let up = dsg_hom(&images[i], &images[j])?.dim;
            if down != up {
                return Ok(Certified::No(format!(
                    "morphism spaces differ for the pair with dimensions {} and {}: {} downstairs against {} upstairs",
                    a.representative.dims_string(),
                    b.representative.dims_string(),
                    down,
                    up
                )));
            }
            ev.push(PairEvidence {
                left_dims: a.representative.dims.clone(),
                right_dims: b.representative.dims.clone(),
                downstairs: down,
                upstairs: up,
            });
        }
    }
    Ok(Certified::Yes(ev))
}

/// Verify the conclusions the hypotheses entitle: the tensored functor
/// preserves Gorenstein projectives with vanishing torsion, restriction
/// lands in classes of Gorenstein projectives, the induced singularity
/// functor is fully faithful on classes, and its kernel members are listed.
pub fn verify_conclusions(
    f: &AlgebraMorphism,
    report: &HypothesisReport,
    bound: usize,
    seed: u64,
) -> Result<ConclusionReport> {
    let lam_objs = dsg_indecomposables(&f.source, &[], bound, seed)?;
    let gam_objs = dsg_indecomposables(&f.target, &[], bound, seed)?;
    let pdims_ok = report.pdim_right.is_yes() && report.pdim_left.is_yes();

    let tensor_gproj = if pdims_ok {
        tensor_preserves_gproj(f, &lam_objs, bound, seed)?
    } else {
        Certified::Undetermined {
            bound_used: bound,
            reason: "finite projective dimension over the source is not certified on both sides"
                .into(),
        }
    };

    let restrict_gproj = if pdims_ok {
        restriction_lands_in_gproj_classes(f, &gam_objs, bound, seed)?
    } else {
        Certified::Undetermined {
            bound_used: bound,
            reason: "finite projective dimension over the source is not certified on both sides"
                .into(),
        }
    };

    let fully_faithful = if report.cone_perfect_bimodule.is_yes() {
        tensor_fully_faithful(f, &lam_objs, bound, seed)?
    } else {
        Certified::Undetermined {
            bound_used: bound,
            reason: "the cone is not certified perfect as a bimodule".into(),
        }
    };

    let mut kernel_objects = Vec::new();
    for obj in &gam_objs {
        let r = restrict(f, &obj.representative);
        match pdim(&r, bound, seed) {
            Certified::Yes(_) => kernel_objects.push(obj.representative.clone()),
            Certified::No(_) => {}
            Certified::Undetermined { .. } => {
                return Err(Error::NonStabilizing { bound, dims: r.dims.clone() })
            }
        }
    }

    Ok(ConclusionReport { tensor_gproj, restrict_gproj, fully_faithful, kernel_objects })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{hom_dim, is_isomorphic, quotient, radical_power, random_module};
    use crate::testutil::{triangle_extension, zigzag, zigzag_mod, zigzag_quotient};

    fn rad_quotient(m: &Representation, k: usize) -> Representation {
        let (_, inc) = radical_power(m, k);
        quotient(m, &inc).0
    }

    #[test]
    fn morphism_validation_rejects_bad_data() {
        let z2 = zigzag(2, 2);
        let z3 = zigzag(3, 2);
        let zm = zigzag_mod(3, 2);
        assert!(matches!(
            AlgebraMorphism::by_names(&z2, &z3),
            Err(Error::MalformedMorphism(_))
        ));
        assert!(matches!(
            AlgebraMorphism::new(
                z3.clone(),
                zm.clone(),
                vec![vec![0], vec![0]],
                vec![Vec::new(), Vec::new()],
            ),
            Err(Error::MalformedMorphism(_))
        ));
        assert!(matches!(
            AlgebraMorphism::new(
                z3.clone(),
                zm.clone(),
                vec![vec![0], vec![1]],
                vec![
                    vec![(1, Path::trivial(0))],
                    vec![(1, Path { source: 0, target: 1, arrows: vec![1] })],
                ],
            ),
            Err(Error::MalformedMorphism(_))
        ));
        assert!(AlgebraMorphism::by_names(&z3, &zm).is_ok());
    }

    #[test]
    fn identity_morphism_induces_identity_functors() {
        let a = zigzag(3, 2);
        let f = AlgebraMorphism::identity(&a);
        let m = rad_quotient(&projective(&a, 1), 2);
        let r = restrict(&f, &m);
        assert_eq!(r.dims, m.dims);
        assert_eq!(r.maps, m.maps);
        assert!(is_isomorphic(&tensor_up(&f, &m), &m, 5).is_yes());
        assert!(is_isomorphic(&hom_up(&f, &m), &m, 5).is_yes());
        assert!(unit_map(&f, &m).is_iso());
    }

    #[test]
    fn restriction_preserves_dimensions_and_simples() {
        let f = zigzag_quotient(3, 2);
        let gam = f.target.clone();
        let lam = f.source.clone();
        for m in [projective(&gam, 0), projective(&gam, 1), simple(&gam, 0), simple(&gam, 1)] {
            assert_eq!(restrict(&f, &m).total_dim(), m.total_dim());
        }
        assert!(is_isomorphic(&restrict(&f, &simple(&gam, 0)), &simple(&lam, 0), 5).is_yes());
        assert!(is_isomorphic(&restrict(&f, &simple(&gam, 1)), &simple(&lam, 1), 5).is_yes());
        let fe = triangle_extension(2);
        assert_eq!(restrict(&fe, &projective(&fe.target, 0)).dims, vec![1, 1, 1]);
        assert_eq!(restrict(&fe, &simple(&fe.target, 0)).dims, vec![1, 0, 0]);
    }

    #[test]
    fn tensoring_matches_hand_built_modules() {
        let f = zigzag_quotient(3, 2);
        let (lam, gam) = (f.source.clone(), f.target.clone());
        for i in 0..2 {
            assert!(is_isomorphic(&tensor_up(&f, &projective(&lam, i)), &projective(&gam, i), 5)
                .is_yes());
        }
        assert!(is_isomorphic(&tensor_up(&f, &simple(&lam, 0)), &simple(&gam, 0), 5).is_yes());
        let m21 = rad_quotient(&projective(&lam, 1), 2);
        let m21g = rad_quotient(&projective(&gam, 1), 2);
        assert!(is_isomorphic(&tensor_up(&f, &m21), &m21g, 5).is_yes());

        let fe = triangle_extension(2);
        let (laml, gaml) = (fe.source.clone(), fe.target.clone());
        for i in 0..3 {
            assert!(is_isomorphic(&tensor_up(&fe, &projective(&laml, i)), &projective(&gaml, i), 5)
                .is_yes());
        }
        let mut x_act = Matrix::zero(1, 1, 2);
        x_act.set(0, 0, 1);
        let expected = Representation::new(
            &gaml,
            vec![1, 1, 0],
            vec![
                Matrix::zero(1, 1, 2),
                Matrix::zero(1, 0, 2),
                Matrix::zero(0, 1, 2),
                x_act,
            ],
        );
        let ts1 = tensor_up(&fe, &simple(&laml, 0));
        assert_eq!(ts1.dims, vec![1, 1, 0]);
        assert!(is_isomorphic(&ts1, &expected, 5).is_yes());
    }

    #[test]
    fn unit_kernels_and_cokernels_match() {
        let f = zigzag_quotient(3, 2);
        let lam = f.source.clone();
        let u1 = unit_map(&f, &projective(&lam, 0));
        assert_eq!(kernel(&u1).0.dims, vec![1, 0]);
        assert!(u1.is_surjective());
        assert!(unit_map(&f, &projective(&lam, 1)).is_iso());
        assert!(unit_map(&f, &simple(&lam, 0)).is_iso());

        let fe = triangle_extension(2);
        let us = unit_map(&fe, &simple(&fe.source, 0));
        assert!(us.is_injective());
        assert_eq!(cokernel(&us).0.dims, vec![0, 1, 0]);
    }

    #[test]
    fn adjunction_dimensions_agree() {
        for f in [zigzag_quotient(3, 2), triangle_extension(3)] {
            let lam = f.source.clone();
            let gam = f.target.clone();
            let mut lmods = vec![projective(&lam, 0), simple(&lam, 0), simple(&lam, 1)];
            let mut gmods = vec![projective(&gam, 0), simple(&gam, 0), simple(&gam, 1)];
            for s in 0..3 {
                lmods.push(random_module(&lam, 100 + s, 6));
                gmods.push(random_module(&gam, 200 + s, 6));
            }
            for m in &lmods {
                let tm = tensor_up(&f, m);
                let hm = hom_up(&f, m);
                for n in &gmods {
                    let rn = restrict(&f, n);
                    assert_eq!(hom_dim(&tm, n), hom_dim(m, &rn));
                    assert_eq!(hom_dim(n, &hm), hom_dim(&rn, m));
                }
            }
        }
    }

    #[test]
    fn functors_respect_composition_and_identity() {
        let f = zigzag_quotient(3, 2);
        let (lam, gam) = (f.source.clone(), f.target.clone());
        let g = hom_basis(&projective(&lam, 1), &projective(&lam, 0))[0].clone();
        let h = hom_basis(&projective(&lam, 0), &simple(&lam, 0))[0].clone();
        let hg = h.compose(&g);
        assert_eq!(
            tensor_up_map(&f, &hg).blocks,
            tensor_up_map(&f, &h).compose(&tensor_up_map(&f, &g)).blocks
        );
        assert_eq!(
            hom_up_map(&f, &hg).blocks,
            hom_up_map(&f, &h).compose(&hom_up_map(&f, &g)).blocks
        );
        let gb = hom_basis(&projective(&gam, 1), &projective(&gam, 0))[0].clone();
        let hb = hom_basis(&projective(&gam, 0), &simple(&gam, 0))[0].clone();
        assert_eq!(
            restrict_map(&f, &hb.compose(&gb)).blocks,
            restrict_map(&f, &hb).compose(&restrict_map(&f, &gb)).blocks
        );
        let m21 = rad_quotient(&projective(&lam, 1), 2);
        assert_eq!(
            tensor_up_map(&f, &ModuleMap::identity(&m21)).blocks,
            ModuleMap::identity(&tensor_up(&f, &m21)).blocks
        );
    }

    #[test]
    fn regular_dual_over_the_identity_is_perfect() {
        let a = zigzag(3, 2);
        let f = AlgebraMorphism::identity(&a);
        let out = rhom_gamma_lambda(&f, 64, 5).unwrap();
        assert!(matches!(out.pdim_right, Certified::Yes(0)));
        let cx = out.complex.unwrap();
        assert_eq!(crate::complex::homology_dims(&cx), vec![(0, 13)]);
        assert!(is_isomorphic(&homology(&cx, 0), &regular(&a), 5).is_yes());
        assert!(out.perfect.is_yes());
    }

    #[test]
    fn quotient_morphism_dual_homology() {
        let f = zigzag_quotient(3, 2);
        let gam = f.target.clone();
        let out = rhom_gamma_lambda(&f, 64, 5).unwrap();
        assert!(matches!(out.pdim_right, Certified::Yes(2)));
        let cx = out.complex.unwrap();
        assert_eq!(crate::complex::homology_dims(&cx), vec![(0, 12), (1, 1), (2, 1)]);
        let p2bar = projective(&gam, 1);
        let expected0 = direct_sum(&[p2bar.clone(), p2bar]).0;
        assert!(is_isomorphic(&homology(&cx, 0), &expected0, 5).is_yes());
        assert!(is_isomorphic(&homology(&cx, 1), &simple(&gam, 0), 5).is_yes());
        assert!(is_isomorphic(&homology(&cx, 2), &simple(&gam, 0), 5).is_yes());
        match &out.perfect {
            Certified::Yes(w) => {
                assert_eq!(w.complex.lo, 0);
                let dims: Vec<Vec<usize>> =
                    w.complex.terms.iter().map(|t| t.dims.clone()).collect();
                assert_eq!(dims, vec![vec![6, 6], vec![3, 3], vec![3, 3]]);
            }
            other => panic!("expected a perfectness witness, got {}", other.verdict()),
        }

        let res = min_proj_resolution(&restrict(&f, &regular(&gam)), 64, 5);
        assert!(matches!(res.finiteness, Certified::Yes(2)));
        let px = res.complex_upto(res.steps.len());
        let hc = hom_complex(&px, &BoundedComplex::stalk(regular(&f.source), 0));
        assert_eq!((0..=2).map(|i| hc.h_dim(i)).collect::<Vec<_>>(), vec![12, 1, 1]);
    }

    #[test]
    fn extension_morphism_dual_homology() {
        let f = triangle_extension(2);
        let gam = f.target.clone();
        let out = rhom_gamma_lambda(&f, 64, 5).unwrap();
        assert!(matches!(out.pdim_right, Certified::Yes(1)));
        let cx = out.complex.unwrap();
        assert_eq!(crate::complex::homology_dims(&cx), vec![(0, 8), (1, 1)]);
        assert_eq!(homology(&cx, 0).dims, vec![3, 2, 3]);
        assert!(is_isomorphic(&homology(&cx, 1), &simple(&gam, 0), 5).is_yes());
        assert!(matches!(out.perfect, Certified::No(_)));
    }

    #[test]
    fn cone_perfectness_certificates() {
        let a = zigzag(3, 2);
        assert!(cone_f_perfect(&AlgebraMorphism::identity(&a), 64, 5).is_yes());
        assert!(cone_f_perfect(&zigzag_quotient(3, 2), 64, 5).is_yes());
        assert!(cone_f_perfect(&triangle_extension(2), 64, 5).is_yes());
    }

    #[test]
    fn epi_evidence_accepts_the_identity() {
        let idm = AlgebraMorphism::identity(&zigzag(3, 2));
        assert!(homological_epi_evidence(&idm, 4, 64, 5).is_yes());
    }

    #[test]
    fn hypothesis_reports_for_both_morphisms() {
        let f = zigzag_quotient(3, 2);
        let rep = check_hypotheses(&f, 64, 6, 7).unwrap();
        assert!(matches!(rep.pdim_right, Certified::Yes(2)));
        assert!(matches!(rep.pdim_left, Certified::Yes(2)));
        assert!(rep.rhom_perfect.is_yes());
        assert!(rep.cone_perfect_bimodule.is_yes());
        assert!(matches!(rep.homological_epi, Certified::No(_)));

        let fe = triangle_extension(2);
        let repe = check_hypotheses(&fe, 64, 6, 7).unwrap();
        assert!(matches!(repe.pdim_right, Certified::Yes(1)));
        assert!(matches!(repe.pdim_left, Certified::Yes(1)));
        assert!(matches!(repe.rhom_perfect, Certified::No(_)));
        assert!(repe.cone_perfect_bimodule.is_yes());
        assert!(matches!(repe.homological_epi, Certified::No(_)));
    }

    #[test]
    fn conclusions_for_the_quotient_morphism() {
        let f = zigzag_quotient(3, 2);
        let rep = check_hypotheses(&f, 64, 6, 7).unwrap();
        let conc = verify_conclusions(&f, &rep, 64, 7).unwrap();

        let Certified::Yes(tens) = &conc.tensor_gproj else {
            panic!("tensor side must certify")
        };
        assert_eq!(tens.len(), 2);
        for e in tens {
            assert_eq!(e.source_dims, e.image_dims);
            assert!(e.tor.iter().all(|&d| d == 0));
        }

        let Certified::Yes(rest) = &conc.restrict_gproj else {
            panic!("restriction side must certify")
        };
        let mut tagged: Vec<(Vec<usize>, bool)> =
            rest.iter().map(|e| (e.source_dims.clone(), e.projective_class)).collect();
        tagged.sort();
        assert_eq!(
            tagged,
            vec![
                (vec![0, 1], false),
                (vec![1, 0], true),
                (vec![2, 3], true),
                (vec![3, 2], false),
            ]
        );

        let Certified::Yes(pairs) = &conc.fully_faithful else {
            panic!("the induced functor must certify")
        };
        assert_eq!(pairs.len(), 4);
        for e in pairs {
            assert_eq!(e.downstairs, 1);
            assert_eq!(e.upstairs, 1);
        }

        let mut ker: Vec<Vec<usize>> = conc.kernel_objects.iter().map(|r| r.dims.clone()).collect();
        ker.sort();
        assert_eq!(ker, vec![vec![1, 0], vec![2, 3]]);
    }

    #[test]
    fn conclusions_for_the_extension_morphism() {
        let f = triangle_extension(2);
        let rep = check_hypotheses(&f, 64, 6, 11).unwrap();
        let conc = verify_conclusions(&f, &rep, 64, 11).unwrap();

        let Certified::Yes(tens) = &conc.tensor_gproj else {
            panic!("tensor side must certify")
        };
        assert!(tens.is_empty());

        let Certified::Yes(rest) = &conc.restrict_gproj else {
            panic!("restriction side must certify")
        };
        let mut tagged: Vec<(Vec<usize>, bool)> =
            rest.iter().map(|e| (e.source_dims.clone(), e.projective_class)).collect();
        tagged.sort();
        assert_eq!(tagged, vec![(vec![0, 1, 0], true), (vec![1, 0, 1], true)]);

        let Certified::Yes(pairs) = &conc.fully_faithful else {
            panic!("the induced functor must certify")
        };
        assert_eq!(pairs.len(), 4);
        for e in pairs {
            let expected = if e.left_dims == e.right_dims { 1 } else { 0 };
            assert_eq!(e.downstairs, expected);
            assert_eq!(e.upstairs, expected);
        }

        let mut ker: Vec<Vec<usize>> = conc.kernel_objects.iter().map(|r| r.dims.clone()).collect();
        ker.sort();
        assert_eq!(ker, vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn torsion_vanishes_exactly_on_the_expected_modules() {
        let f = zigzag_quotient(3, 2);
        let lam = f.source.clone();
        let m21 = rad_quotient(&projective(&lam, 1), 2);
        assert_eq!(tor_dims(&f, &m21, 8, 64, 3).unwrap(), vec![0; 8]);
        assert_eq!(tor_dims(&f, &simple(&lam, 1), 2, 64, 3).unwrap(), vec![0, 1]);
    }

    #[test]
    fn torsion_window_over_the_extension_is_clean() {
        let f = triangle_extension(2);
        let lam = f.source.clone();
        assert_eq!(tor_dims(&f, &simple(&lam, 0), 3, 64, 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(tor_dims(&f, &regular(&lam), 3, 64, 3).unwrap(), vec![0, 0, 0]);
    }
}
