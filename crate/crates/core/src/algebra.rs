//! Path algebras kQ/I over a prime field, with basis extraction by length.
//!
//! Paths compose left to right: for p: i ~> j and q: j ~> k the product pq
//! means "p then q" and runs i ~> k. A relation is a linear combination of
//! parallel paths of one common length >= 2, so the ideal is graded by path
//! length and the basis can be computed degreewise by row reduction.

use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path in the quiver; `arrows` is empty for the trivial path at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation self-then-other; endpoints must match.
    pub fn then(&self, other: &Path) -> Path {
        assert!(self.target == other.source, "paths not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path { source: self.source, target: other.target, arrows }
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>().join(".")
        }
    }
}

/// Linear combination of parallel paths of one common length.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(u64, Path)>,
}

impl Relation {
    pub fn monomial(p: Path) -> Self {
        Relation { terms: vec![(1, p)] }
    }
}

/// Finite-dimensional quotient of a path algebra by an admissible graded ideal.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub p: u64,
    pub max_len: usize,
    /// Surviving reduced paths, sorted by (length, arrow sequence).
    pub basis: Vec<Path>,
    index: BTreeMap<Path, usize>,
    /// Normal forms of all enumerated paths as combinations of basis paths.
    nf: BTreeMap<Path, Vec<(usize, u64)>>,
    /// mult[i][j] = normal form of basis[i] . basis[j] (empty when not composable or zero).
    mult: Vec<Vec<Vec<(usize, u64)>>>,
    /// Basis indices of the trivial paths.
    pub idempotents: Vec<usize>,
    /// component[(i, j)] = basis indices of paths i ~> j.
    component: BTreeMap<(usize, usize), Vec<usize>>,
}

impl PathAlgebra {
    pub fn build(
        name: &str,
        quiver: Quiver,
        relations: Vec<Relation>,
        p: u64,
        max_len: usize,
    ) -> Result<PathAlgebra> {
        let f = Fp::new(p);
        for (ri, r) in relations.iter().enumerate() {
            if r.terms.is_empty() {
                return Err(Error::MalformedRelation(format!("relation {} is empty", ri)));
            }
            let (_, p0) = &r.terms[0];
            for (c, path) in &r.terms {
                if *c % p == 0 {
                    return Err(Error::MalformedRelation(format!(
                        "relation {} has a zero coefficient",
                        ri
                    )));
                }
                if path.len() < 2 {
                    return Err(Error::MalformedRelation(format!(
                        "relation {} involves a path of length {}",
                        ri,
                        path.len()
                    )));
                }
                if path.source != p0.source || path.target != p0.target || path.len() != p0.len() {
                    return Err(Error::MalformedRelation(format!(
                        "relation {} mixes non-parallel or non-homogeneous paths",
                        ri
                    )));
                }
                for &a in &path.arrows {
                    if a >= quiver.arrows.len() {
                        return Err(Error::MalformedRelation(format!(
                            "relation {} uses unknown arrow index {}",
                            ri, a
                        )));
                    }
                }
                let mut cur = path.source;
                for &a in &path.arrows {
                    if quiver.arrows[a].src != cur {
                        return Err(Error::MalformedRelation(format!(
                            "relation {} contains a non-composable word",
                            ri
                        )));
                    }
                    cur = quiver.arrows[a].tgt;
                }
                if cur != path.target {
                    return Err(Error::MalformedRelation(format!(
                        "relation {} has a wrong target",
                        ri
                    )));
                }
            }
        }

        // Degreewise elimination over candidate columns: the one-arrow
        // extensions of the previous degree's survivors. Relations are
        // homogeneous in length, so cosets are graded, and every prefix of a
        // surviving path survives; the candidates therefore span each degree.
        // Columns are sorted descending so that rref pivots land on
        // lexicographically larger paths and the smallest representative of
        // each coset survives.
        let nv = quiver.vertices.len();
        let arrow_path = |ai: usize| Path {
            source: quiver.arrows[ai].src,
            target: quiver.arrows[ai].tgt,
            arrows: vec![ai],
        };
        let mut survivors_by_len: Vec<Vec<Path>> = Vec::with_capacity(max_len + 1);
        survivors_by_len.push((0..nv).map(Path::trivial).collect());
        let mut nfb: BTreeMap<Path, Vec<(Path, u64)>> = BTreeMap::new();
        for l in 1..=max_len {
            let mut cols: Vec<Path> = Vec::new();
            for n in &survivors_by_len[l - 1] {
                for ai in 0..quiver.arrows.len() {
                    if quiver.arrows[ai].src == n.target {
                        cols.push(n.then(&arrow_path(ai)));
                    }
                }
            }
            cols.sort_by(|a, b| b.arrows.cmp(&a.arrows));
            if cols.is_empty() {
                survivors_by_len.push(Vec::new());
                continue;
            }
            let col_of: BTreeMap<&Path, usize> =
                cols.iter().enumerate().map(|(i, q)| (q, i)).collect();
            // u.then(rest) as a combination of candidates, reducing every
            // proper prefix through the lower degrees.
            let to_candidates = |nfb: &BTreeMap<Path, Vec<(Path, u64)>>,
                                 u: &Path,
                                 rest: &[usize]|
             -> BTreeMap<Path, u64> {
                let mut cur: BTreeMap<Path, u64> = BTreeMap::new();
                cur.insert(u.clone(), 1);
                for (pos, &ai) in rest.iter().enumerate() {
                    let last = pos + 1 == rest.len();
                    let mut next: BTreeMap<Path, u64> = BTreeMap::new();
                    for (q, c) in &cur {
                        let cand = q.then(&arrow_path(ai));
                        if last {
                            let e = next.entry(cand).or_insert(0);
                            *e = f.add(*e, *c);
                        } else {
                            for (s, cs) in nfb.get(&cand).map(|v| v.as_slice()).unwrap_or(&[]) {
                                let e = next.entry(s.clone()).or_insert(0);
                                *e = f.add(*e, f.mul(*c, *cs));
                            }
                        }
                    }
                    next.retain(|_, c| *c != 0);
                    cur = next;
                }
                cur
            };
            let mut rows: Vec<Vec<u64>> = Vec::new();
            for r in &relations {
                let d = r.terms[0].1.len();
                if d > l {
                    continue;
                }
                for u in survivors_by_len.iter().take(l - d + 1).flatten() {
                    if u.target != r.terms[0].1.source {
                        continue;
                    }
                    let vl = l - d - u.len();
                    for v in &survivors_by_len[vl] {
                        if v.source != r.terms[0].1.target {
                            continue;
                        }
                        let mut row = vec![0u64; cols.len()];
                        for (c, mid) in &r.terms {
                            let rest: Vec<usize> =
                                mid.arrows.iter().chain(v.arrows.iter()).copied().collect();
                            for (cand, cc) in to_candidates(&nfb, u, &rest) {
                                let j = col_of[&cand];
                                row[j] = f.add(row[j], f.mul(*c % p, cc));
                            }
                        }
                        if row.iter().any(|&x| x != 0) {
                            rows.push(row);
                        }
                    }
                }
            }
            if rows.is_empty() {
                for cand in &cols {
                    nfb.insert(cand.clone(), vec![(cand.clone(), 1)]);
                }
                let mut surv = cols.clone();
                surv.sort_by(|a, b| a.arrows.cmp(&b.arrows));
                survivors_by_len.push(surv);
                continue;
            }
            let m = Matrix::from_rows(&rows, p);
            let (r, pivots) = m.rref();
            let pivot_set: Vec<bool> = {
                let mut v = vec![false; cols.len()];
                for &pc in &pivots {
                    v[pc] = true;
                }
                v
            };
            for (row_i, &pc) in pivots.iter().enumerate() {
                let mut expr = Vec::new();
                for (j, col_path) in cols.iter().enumerate() {
                    if j != pc && r.get(row_i, j) != 0 {
                        expr.push((col_path.clone(), f.neg(r.get(row_i, j))));
                    }
                }
                nfb.insert(cols[pc].clone(), expr);
            }
            let mut surv: Vec<Path> = Vec::new();
            for (j, col_path) in cols.iter().enumerate() {
                if !pivot_set[j] {
                    nfb.insert(col_path.clone(), vec![(col_path.clone(), 1)]);
                    surv.push(col_path.clone());
                }
            }
            surv.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            survivors_by_len.push(surv);
        }

        if !survivors_by_len[max_len].is_empty() {
            return Err(Error::NotAdmissibleAtBound {
                length: max_len,
                surviving: survivors_by_len[max_len].iter().map(|q| q.display(&quiver)).collect(),
            });
        }

        let mut basis = Vec::new();
        for surv in &survivors_by_len {
            basis.extend(surv.iter().cloned());
        }
        let index: BTreeMap<Path, usize> =
            basis.iter().enumerate().map(|(i, q)| (q.clone(), i)).collect();
        let mut nf: BTreeMap<Path, Vec<(usize, u64)>> = BTreeMap::new();
        for v in 0..nv {
            let t = Path::trivial(v);
            nf.insert(t.clone(), vec![(index[&t], 1)]);
        }
        for (path, expr) in nfb {
            let conv: Vec<(usize, u64)> = expr.into_iter().map(|(q, c)| (index[&q], c)).collect();
            nf.insert(path, conv);
        }

        // Products grow one arrow at a time: the prefix of a basis path is a
        // shorter basis path, so its column is already filled.
        let dim = basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for j in 0..dim {
            if basis[j].is_trivial() {
                for i in 0..dim {
                    if basis[i].target == basis[j].source {
                        mult[i][j] = vec![(i, 1)];
                    }
                }
                continue;
            }
            let mut prefix = basis[j].clone();
            let last = prefix.arrows.pop().expect("nontrivial path has a last arrow");
            prefix.target = quiver.arrows[last].src;
            let jp = index[&prefix];
            let step = arrow_path(last);
            for i in 0..dim {
                if basis[i].target != basis[j].source || basis[i].len() + basis[j].len() > max_len
                {
                    continue;
                }
                let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
                for &(s, c) in &mult[i][jp] {
                    let cand = basis[s].then(&step);
                    for &(t, ct) in nf.get(&cand).map(|v| v.as_slice()).unwrap_or(&[]) {
                        let e = acc.entry(t).or_insert(0);
                        *e = f.add(*e, f.mul(c, ct));
                    }
                }
                mult[i][j] = acc.into_iter().filter(|&(_, c)| c != 0).collect();
            }
        }

        let idempotents: Vec<usize> = (0..nv).map(|v| index[&Path::trivial(v)]).collect();
        let mut component: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (bi, b) in basis.iter().enumerate() {
            component.entry((b.source, b.target)).or_default().push(bi);
        }

        Ok(PathAlgebra {
            name: name.to_string(),
            quiver,
            relations,
            p,
            max_len,
            basis,
            index,
            nf,
            mult,
            idempotents,
            component,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.index.get(path).copied()
    }

    /// Normal form of an arbitrary path (zero when it leaves the bound).
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, u64)> {
        if path.len() > self.max_len || path.source >= self.num_vertices() {
            return Vec::new();
        }
        let f = Fp { p: self.p };
        let mut at = path.source;
        let mut cur: BTreeMap<usize, u64> = BTreeMap::new();
        cur.insert(self.idempotents[at], 1);
        for &ai in &path.arrows {
            if ai >= self.quiver.arrows.len() || self.quiver.arrows[ai].src != at {
                return Vec::new();
            }
            let step = Path {
                source: self.quiver.arrows[ai].src,
                target: self.quiver.arrows[ai].tgt,
                arrows: vec![ai],
            };
            at = step.target;
            let mut next: BTreeMap<usize, u64> = BTreeMap::new();
            for (&bi, &c) in &cur {
                let cand = self.basis[bi].then(&step);
                for &(s, cs) in self.nf.get(&cand).map(|v| v.as_slice()).unwrap_or(&[]) {
                    let e = next.entry(s).or_insert(0);
                    *e = f.add(*e, f.mul(c, cs));
                }
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        if at != path.target {
            return Vec::new();
        }
        cur.into_iter().collect()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.mult[i][j]
    }

    /// Basis indices of paths i ~> j.
    pub fn component(&self, i: usize, j: usize) -> &[usize] {
        static EMPTY: Vec<usize> = Vec::new();
        self.component.get(&(i, j)).unwrap_or(&EMPTY)
    }

    /// Dense product of two elements given as coefficient vectors over the basis.
    pub fn mul_elems(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = Fp { p: self.p };
        let mut out = vec![0u64; self.dim()];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let c = f.mul(ca, cb);
                for &(k, ck) in &self.mult[i][j] {
                    out[k] = f.add(out[k], f.mul(c, ck));
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<u64> {
        let mut e = vec![0u64; self.dim()];
        for &i in &self.idempotents {
            e[i] = 1;
        }
        e
    }

    /// Exhaustive associativity check over basis triples.
    pub fn check_associativity(&self) -> bool {
        let f = Fp { p: self.p };
        let dim = self.dim();
        for x in 0..dim {
            for y in 0..dim {
                let xy = &self.mult[x][y];
                if xy.is_empty() && self.basis[x].target != self.basis[y].source {
                    continue;
                }
                for z in 0..dim {
                    let mut lhs = vec![0u64; dim];
                    for &(k, c) in xy {
                        for &(m, cm) in &self.mult[k][z] {
                            lhs[m] = f.add(lhs[m], f.mul(c, cm));
                        }
                    }
                    let mut rhs = vec![0u64; dim];
                    for &(k, c) in &self.mult[y][z] {
                        for &(m, cm) in &self.mult[x][k] {
                            rhs[m] = f.add(rhs[m], f.mul(c, cm));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Opposite algebra: arrows reversed, relation words reversed.
    pub fn opposite(&self) -> PathAlgebra {
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow { name: toggle_op(&a.name), src: a.tgt, tgt: a.src })
            .collect();
        let quiver = Quiver { vertices: self.quiver.vertices.clone(), arrows };
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (*c, p.reversed())).collect(),
            })
            .collect();
        PathAlgebra::build(&format!("{}^op", self.name), quiver, relations, self.p, self.max_len)
            .expect("opposite of an admissible algebra is admissible")
    }

    pub fn max_basis_len(&self) -> usize {
        self.basis.iter().map(|p| p.len()).max().unwrap_or(0)
    }
}

fn toggle_op(name: &str) -> String {
    match name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", name),
    }
}

/// Enveloping algebra A^op (x) B as a product-quiver path algebra.
/// Right modules over it are (A, B)-bimodules. The vertex (i, j) has index
/// i * |B-vertices| + j.
pub fn envelope(a: &PathAlgebra, b: &PathAlgebra) -> PathAlgebra {
    assert!(a.p == b.p, "modulus mismatch in envelope");
    let aop = a.opposite();
    let nb = b.num_vertices();
    let vid = |i: usize, j: usize| i * nb + j;

    let mut vertices = Vec::new();
    for i in 0..aop.num_vertices() {
        for j in 0..nb {
            vertices.push(format!("{}|{}", aop.quiver.vertices[i], b.quiver.vertices[j]));
        }
    }
    // A^op-side arrows first, then B-side arrows.
    let mut arrows = Vec::new();
    for ar in &aop.quiver.arrows {
        for j in 0..nb {
            arrows.push(Arrow {
                name: format!("{}|{}", ar.name, b.quiver.vertices[j]),
                src: vid(ar.src, j),
                tgt: vid(ar.tgt, j),
            });
        }
    }
    let b_arrow_base = arrows.len();
    for br in &b.quiver.arrows {
        for i in 0..aop.num_vertices() {
            arrows.push(Arrow {
                name: format!("{}|{}", aop.quiver.vertices[i], br.name),
                src: vid(i, br.src),
                tgt: vid(i, br.tgt),
            });
        }
    }
    let quiver = Quiver { vertices, arrows };

    let a_arrow = |ai: usize, j: usize| ai * nb + j;
    let b_arrow = |bi: usize, i: usize| b_arrow_base + bi * aop.num_vertices() + i;

    let mut relations = Vec::new();
    for r in &aop.relations {
        for j in 0..nb {
            relations.push(Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        (
                            *c,
                            Path {
                                source: vid(p.source, j),
                                target: vid(p.target, j),
                                arrows: p.arrows.iter().map(|&ai| a_arrow(ai, j)).collect(),
                            },
                        )
                    })
                    .collect(),
            });
        }
    }
    for r in &b.relations {
        for i in 0..aop.num_vertices() {
            relations.push(Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        (
                            *c,
                            Path {
                                source: vid(i, p.source),
                                target: vid(i, p.target),
                                arrows: p.arrows.iter().map(|&bi| b_arrow(bi, i)).collect(),
                            },
                        )
                    })
                    .collect(),
            });
        }
    }
    // Commuting squares: (alpha at s_B) then (beta at alpha-target) equals
    // (beta at alpha-source) then (alpha at t_B).
    for (ai, ar) in aop.quiver.arrows.iter().enumerate() {
        for (bi, br) in b.quiver.arrows.iter().enumerate() {
            let src = vid(ar.src, br.src);
            let tgt = vid(ar.tgt, br.tgt);
            let p1 = Path { source: src, target: tgt, arrows: vec![a_arrow(ai, br.src), b_arrow(bi, ar.tgt)] };
            let p2 = Path { source: src, target: tgt, arrows: vec![b_arrow(bi, ar.src), a_arrow(ai, br.tgt)] };
            relations.push(Relation { terms: vec![(1, p1), (a.p - 1, p2)] });
        }
    }

    let max_len = a.max_basis_len() + b.max_basis_len() + 1;
    let env = PathAlgebra::build(
        &format!("{}^op(x){}", a.name, b.name),
        quiver,
        relations,
        a.p,
        max_len,
    )
    .expect("envelope of admissible algebras is admissible");
    assert!(
        env.dim() == a.dim() * b.dim(),
        "envelope dimension {} differs from {} * {}",
        env.dim(),
        a.dim(),
        b.dim()
    );
    env
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(q: &Quiver, names: &[&str]) -> Path {
        let arrows: Vec<usize> = names.iter().map(|n| q.arrow_index(n).unwrap()).collect();
        let src = q.arrows[arrows[0]].src;
        let tgt = q.arrows[*arrows.last().unwrap()].tgt;
        Path { source: src, target: tgt, arrows }
    }

    /// Two-vertex quiver a: 2 -> 1, b: 1 -> 2 with relation (ab)^n.
    fn zigzag(n: usize, p: u64) -> PathAlgebra {
        let quiver = Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 1, tgt: 0 },
                Arrow { name: "b".into(), src: 0, tgt: 1 },
            ],
        };
        let mut arrows = Vec::new();
        for _ in 0..n {
            arrows.push(0);
            arrows.push(1);
        }
        let rel = Relation::monomial(Path { source: 1, target: 1, arrows });
        PathAlgebra::build("zigzag", quiver, vec![rel], p, 2 * n + 2).unwrap()
    }

    /// Brute-force basis for a monomial ideal: words avoiding forbidden subwords.
    fn monomial_basis_count(q: &Quiver, forbidden: &[Vec<usize>], max_len: usize) -> usize {
        let mut count = q.vertices.len();
        let mut frontier: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for path in &frontier {
                for (ai, ar) in q.arrows.iter().enumerate() {
                    if ar.src != path.target {
                        continue;
                    }
                    let mut w = path.arrows.clone();
                    w.push(ai);
                    let has_forbidden = forbidden.iter().any(|f| {
                        w.len() >= f.len() && w.windows(f.len()).any(|win| win == f.as_slice())
                    });
                    if !has_forbidden {
                        next.push(Path { source: path.source, target: q.arrows[ai].tgt, arrows: w });
                    }
                }
            }
            count += next.len();
            frontier = next;
        }
        count
    }

    #[test]
    fn zigzag_dimension_matches_monomial_oracle() {
        for n in [2usize, 3] {
            for p in [2u64, 3] {
                let alg = zigzag(n, p);
                let mut word = Vec::new();
                for _ in 0..n {
                    word.push(0);
                    word.push(1);
                }
                let oracle = monomial_basis_count(&alg.quiver, &[word], 2 * n + 2);
                assert_eq!(alg.dim(), oracle);
                assert_eq!(alg.dim(), 4 * n + 1);
            }
        }
    }

    #[test]
    fn zigzag_n3_has_expected_reduced_basis() {
        let alg = zigzag(3, 2);
        assert_eq!(alg.dim(), 13);
        let q = &alg.quiver;
        // Longest survivors: bababa lives, ababab is the relation.
        assert!(alg.basis_index(&word(q, &["b", "a", "b", "a", "b", "a"])).is_some());
        assert!(alg.basis_index(&word(q, &["a", "b", "a", "b", "a", "b"])).is_none());
        assert!(alg
            .normal_form(&word(q, &["a", "b", "a", "b", "a", "b"]))
            .is_empty());
    }

    #[test]
    fn multiplication_is_associative_and_unital() {
        let alg = zigzag(2, 3);
        assert!(alg.check_associativity());
        let e = alg.unit();
        for i in 0..alg.dim() {
            let mut x = vec![0u64; alg.dim()];
            x[i] = 1;
            assert_eq!(alg.mul_elems(&e, &x), x);
            assert_eq!(alg.mul_elems(&x, &e), x);
        }
    }

    #[test]
    fn non_admissible_ideal_is_rejected() {
        let quiver = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        };
        let err = PathAlgebra::build("loop", quiver, vec![], 2, 4).unwrap_err();
        match err {
            Error::NotAdmissibleAtBound { length, .. } => assert_eq!(length, 4),
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn truncated_loop_algebra() {
        let quiver = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        };
        let rel = Relation::monomial(Path { source: 0, target: 0, arrows: vec![0, 0] });
        let alg = PathAlgebra::build("dual_numbers", quiver, vec![rel], 2, 3).unwrap();
        assert_eq!(alg.dim(), 2);
        let x = alg.basis_index(&Path { source: 0, target: 0, arrows: vec![0] }).unwrap();
        assert!(alg.mul_basis(x, x).is_empty());
    }

    #[test]
    fn opposite_is_involutive_on_structure() {
        let alg = zigzag(2, 2);
        let op = alg.opposite();
        assert_eq!(op.dim(), alg.dim());
        let opop = op.opposite();
        assert_eq!(opop.basis, alg.basis);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                assert_eq!(opop.mul_basis(i, j), alg.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn opposite_multiplication_reverses() {
        let alg = zigzag(2, 3);
        let op = alg.opposite();
        // Basis paths correspond under word reversal.
        for (i, path) in alg.basis.iter().enumerate() {
            let rev = path.reversed();
            let oi = op.basis_index(&rev).expect("reversed basis path survives");
            for (j, path2) in alg.basis.iter().enumerate() {
                let oj = op.basis_index(&path2.reversed()).unwrap();
                let forward = alg.mul_basis(i, j);
                let backward = op.mul_basis(oj, oi);
                let fwd_paths: Vec<Path> =
                    forward.iter().map(|&(k, _)| alg.basis[k].reversed()).collect();
                let bwd_paths: Vec<Path> =
                    backward.iter().map(|&(k, _)| op.basis[k].clone()).collect();
                assert_eq!(fwd_paths, bwd_paths);
            }
        }
    }

    #[test]
    fn envelope_dimension_and_associativity() {
        let a = zigzag(2, 2);
        let env = envelope(&a, &a);
        assert_eq!(env.dim(), a.dim() * a.dim());
        assert!(env.check_associativity());
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let quiver = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        };
        let bad = Relation {
            terms: vec![
                (1, Path { source: 0, target: 0, arrows: vec![0, 0] }),
                (1, Path { source: 0, target: 0, arrows: vec![0, 0, 0] }),
            ],
        };
        assert!(matches!(
            PathAlgebra::build("bad", quiver, vec![bad], 2, 4),
            Err(Error::MalformedRelation(_))
        ));
    }
}
