//! Text formats for algebras, morphisms, and module literals.
//!
//! Files are line oriented and `#` starts a comment. Polynomials are terms
//! separated by `+` or `-`, each term `w` or `c*w` with the word a
//! `.`-joined sequence of arrow names; `e_v` denotes the idempotent at
//! vertex v where idempotents are allowed. Canonical dumps round-trip.

use crate::algebra::{Arrow, Path, PathAlgebra, Quiver, Relation};
use crate::change_of_rings::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::Representation;
use std::sync::Arc;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn content_lines(text: &str) -> Vec<(usize, Vec<String>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<String> = body.split_whitespace().map(|s| s.to_string()).collect();
            if toks.is_empty() {
                None
            } else {
                Some((i + 1, toks))
            }
        })
        .collect()
}

fn valid_name(line: usize, name: &str) -> Result<()> {
    if name.starts_with("e_") {
        return Err(err(line, format!("name {} collides with idempotent notation", name)));
    }
    if name.contains(['.', '*', ';']) || name == "->" || name == "0" {
        return Err(err(line, format!("name {} uses a reserved character", name)));
    }
    Ok(())
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("{} must be a number, got {}", what, tok)))
}

/// One term of a sign-separated polynomial, with the word still unresolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTerm {
    pub neg: bool,
    pub coeff: u64,
    pub word: String,
}

fn parse_poly(line: usize, toks: &[String]) -> Result<Vec<PolyTerm>> {
    if toks.len() == 1 && toks[0] == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut neg = false;
    let mut expect_term = true;
    for tok in toks {
        if expect_term {
            let (coeff, word) = match tok.split_once('*') {
                Some((c, w)) => {
                    let c = c
                        .parse::<u64>()
                        .map_err(|_| err(line, format!("bad coefficient in term {}", tok)))?;
                    (c, w.to_string())
                }
                None => (1, tok.clone()),
            };
            if word.is_empty() {
                return Err(err(line, format!("term {} has no word", tok)));
            }
            terms.push(PolyTerm { neg, coeff, word });
            expect_term = false;
        } else {
            neg = match tok.as_str() {
                "+" => false,
                "-" => true,
                _ => return Err(err(line, format!("expected + or - before {}", tok))),
            };
            expect_term = true;
        }
    }
    if expect_term {
        return Err(err(line, "polynomial ends with a dangling sign"));
    }
    Ok(terms)
}

fn term_coeff(line: usize, t: &PolyTerm, p: u64) -> Result<u64> {
    let c = t.coeff % p;
    if c == 0 {
        return Err(err(line, format!("coefficient {} vanishes mod {}", t.coeff, p)));
    }
    Ok(if t.neg { p - c } else { c })
}

fn resolve_word(line: usize, q: &Quiver, word: &str, idempotents: bool) -> Result<Path> {
    if let Some(v) = word.strip_prefix("e_") {
        if !idempotents {
            return Err(err(line, format!("idempotent {} is not allowed here", word)));
        }
        let i = q
            .vertex_index(v)
            .ok_or_else(|| err(line, format!("unknown vertex {} in idempotent", v)))?;
        return Ok(Path::trivial(i));
    }
    let mut arrows = Vec::new();
    for part in word.split('.') {
        let k = q
            .arrow_index(part)
            .ok_or_else(|| err(line, format!("unknown arrow {} in word {}", part, word)))?;
        arrows.push(k);
    }
    let source = q.arrows[arrows[0]].src;
    let mut cur = source;
    for &k in &arrows {
        if q.arrows[k].src != cur {
            return Err(err(line, format!("word {} does not compose", word)));
        }
        cur = q.arrows[k].tgt;
    }
    Ok(Path { source, target: cur, arrows })
}

/// Parse an algebra file; the prime comes from the caller, not the file.
pub fn parse_algebra(text: &str, p: u64) -> Result<PathAlgebra> {
    let mut name: Option<String> = None;
    let mut maxlen: Option<usize> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0].as_str() {
            "algebra" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: algebra NAME"));
                }
                if name.is_some() {
                    return Err(err(line, "duplicate algebra line"));
                }
                valid_name(line, &toks[1])?;
                name = Some(toks[1].clone());
            }
            "maxlen" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: maxlen N"));
                }
                if maxlen.is_some() {
                    return Err(err(line, "duplicate maxlen line"));
                }
                maxlen = Some(parse_usize(line, &toks[1], "maxlen")?);
            }
            "vertex" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: vertex NAME"));
                }
                valid_name(line, &toks[1])?;
                if vertices.contains(&toks[1]) {
                    return Err(err(line, format!("duplicate vertex {}", toks[1])));
                }
                vertices.push(toks[1].clone());
            }
            "arrow" => {
                if toks.len() != 4 {
                    return Err(err(line, "expected: arrow NAME SRC TGT"));
                }
                valid_name(line, &toks[1])?;
                if arrows.iter().any(|a| a.name == toks[1]) {
                    return Err(err(line, format!("duplicate arrow {}", toks[1])));
                }
                let src = vertices
                    .iter()
                    .position(|v| *v == toks[2])
                    .ok_or_else(|| err(line, format!("unknown vertex {}", toks[2])))?;
                let tgt = vertices
                    .iter()
                    .position(|v| *v == toks[3])
                    .ok_or_else(|| err(line, format!("unknown vertex {}", toks[3])))?;
                arrows.push(Arrow { name: toks[1].clone(), src, tgt });
            }
            "relation" => {
                let q = Quiver { vertices: vertices.clone(), arrows: arrows.clone() };
                let poly = parse_poly(line, &toks[1..])?;
                if poly.is_empty() {
                    return Err(err(line, "relation has no terms"));
                }
                let mut terms = Vec::new();
                for t in &poly {
                    let c = term_coeff(line, t, p)?;
                    let path = resolve_word(line, &q, &t.word, false)?;
                    terms.push((c, path));
                }
                relations.push(Relation { terms });
            }
            other => return Err(err(line, format!("unknown keyword {}", other))),
        }
    }
    let name = name.ok_or_else(|| err(1, "missing algebra line"))?;
    let maxlen = maxlen.ok_or_else(|| err(1, "missing maxlen line"))?;
    if vertices.is_empty() {
        return Err(err(1, "an algebra needs at least one vertex"));
    }
    let quiver = Quiver { vertices, arrows };
    PathAlgebra::build(&name, quiver, relations, p, maxlen)
}

fn dump_poly(q: &Quiver, terms: &[(u64, Path)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(c, path)| {
            let word = if path.is_trivial() {
                format!("e_{}", q.vertices[path.source])
            } else {
                path.arrows.iter().map(|&k| q.arrows[k].name.clone()).collect::<Vec<_>>().join(".")
            };
            if *c == 1 {
                word
            } else {
                format!("{}*{}", c, word)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Canonical algebra dump; parses back to an equal algebra at the same prime.
pub fn dump_algebra(a: &PathAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", a.name));
    out.push_str(&format!("maxlen {}\n", a.max_len));
    for v in &a.quiver.vertices {
        out.push_str(&format!("vertex {}\n", v));
    }
    for ar in &a.quiver.arrows {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            ar.name, a.quiver.vertices[ar.src], a.quiver.vertices[ar.tgt]
        ));
    }
    for r in &a.relations {
        out.push_str(&format!("relation {}\n", dump_poly(&a.quiver, &r.terms)));
    }
    out
}

/// The quiver in dot format with deterministic ordering.
pub fn dump_quiver_dot(a: &PathAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", a.name));
    out.push_str("  rankdir=LR;\n");
    for v in &a.quiver.vertices {
        out.push_str(&format!("  \"{}\";\n", v));
    }
    for ar in &a.quiver.arrows {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            a.quiver.vertices[ar.src], a.quiver.vertices[ar.tgt], ar.name
        ));
    }
    out.push_str("}\n");
    out
}

/// A morphism file before the two algebras it names are loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismFile {
    pub name: String,
    pub source: String,
    pub target: String,
    pub header: usize,
    pub vertex_images: Vec<(usize, String, Vec<String>)>,
    pub arrow_images: Vec<(usize, String, Vec<PolyTerm>)>,
}

pub fn parse_morphism(text: &str) -> Result<MorphismFile> {
    let mut name: Option<(usize, String)> = None;
    let mut source: Option<String> = None;
    let mut target: Option<String> = None;
    let mut vertex_images: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut arrow_images: Vec<(usize, String, Vec<PolyTerm>)> = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0].as_str() {
            "morphism" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: morphism NAME"));
                }
                if name.is_some() {
                    return Err(err(line, "duplicate morphism line"));
                }
                name = Some((line, toks[1].clone()));
            }
            "source" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: source FILE"));
                }
                if source.is_some() {
                    return Err(err(line, "duplicate source line"));
                }
                source = Some(toks[1].clone());
            }
            "target" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: target FILE"));
                }
                if target.is_some() {
                    return Err(err(line, "duplicate target line"));
                }
                target = Some(toks[1].clone());
            }
            "vertex" => {
                if toks.len() < 3 || toks[2] != "->" {
                    return Err(err(line, "expected: vertex V -> U..."));
                }
                if vertex_images.iter().any(|(_, v, _)| *v == toks[1]) {
                    return Err(err(line, format!("duplicate image for vertex {}", toks[1])));
                }
                vertex_images.push((line, toks[1].clone(), toks[3..].to_vec()));
            }
            "arrow" => {
                if toks.len() < 4 || toks[2] != "->" {
                    return Err(err(line, "expected: arrow A -> POLY"));
                }
                if arrow_images.iter().any(|(_, a, _)| *a == toks[1]) {
                    return Err(err(line, format!("duplicate image for arrow {}", toks[1])));
                }
                arrow_images.push((line, toks[1].clone(), parse_poly(line, &toks[3..])?));
            }
            other => return Err(err(line, format!("unknown keyword {}", other))),
        }
    }
    let (header, name) = name.ok_or_else(|| err(1, "missing morphism line"))?;
    let source = source.ok_or_else(|| err(header, "missing source line"))?;
    let target = target.ok_or_else(|| err(header, "missing target line"))?;
    Ok(MorphismFile { name, source, target, header, vertex_images, arrow_images })
}

/// Bind a parsed morphism file to its two loaded algebras.
pub fn resolve_morphism(
    mf: &MorphismFile,
    source: &Arc<PathAlgebra>,
    target: &Arc<PathAlgebra>,
) -> Result<AlgebraMorphism> {
    let nv = source.num_vertices();
    let na = source.quiver.arrows.len();
    let mut vimg: Vec<Option<Vec<usize>>> = vec![None; nv];
    for (line, v, us) in &mf.vertex_images {
        let i = source
            .quiver
            .vertex_index(v)
            .ok_or_else(|| err(*line, format!("unknown source vertex {}", v)))?;
        let mut img = Vec::new();
        for u in us {
            let j = target
                .quiver
                .vertex_index(u)
                .ok_or_else(|| err(*line, format!("unknown target vertex {}", u)))?;
            img.push(j);
        }
        vimg[i] = Some(img);
    }
    let mut aimg: Vec<Option<Vec<(u64, Path)>>> = vec![None; na];
    for (line, a, poly) in &mf.arrow_images {
        let k = source
            .quiver
            .arrow_index(a)
            .ok_or_else(|| err(*line, format!("unknown source arrow {}", a)))?;
        let mut terms = Vec::new();
        for t in poly {
            let c = term_coeff(*line, t, target.p)?;
            let path = resolve_word(*line, &target.quiver, &t.word, true)?;
            terms.push((c, path));
        }
        aimg[k] = Some(terms);
    }
    let mut vertex_images = Vec::new();
    for (i, img) in vimg.into_iter().enumerate() {
        vertex_images.push(img.ok_or_else(|| {
            err(mf.header, format!("no image for vertex {}", source.quiver.vertices[i]))
        })?);
    }
    let mut arrow_images = Vec::new();
    for (k, img) in aimg.into_iter().enumerate() {
        arrow_images.push(img.ok_or_else(|| {
            err(mf.header, format!("no image for arrow {}", source.quiver.arrows[k].name))
        })?);
    }
    AlgebraMorphism::new(source.clone(), target.clone(), vertex_images, arrow_images)
}

fn dump_terms(terms: &[PolyTerm]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(if t.neg { " - " } else { " + " });
        } else if t.neg {
            out.push_str("- ");
        }
        if t.coeff == 1 {
            out.push_str(&t.word);
        } else {
            out.push_str(&format!("{}*{}", t.coeff, t.word));
        }
    }
    out
}

/// Canonical morphism dump; parses back to an equal file.
pub fn dump_morphism(mf: &MorphismFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("morphism {}\n", mf.name));
    out.push_str(&format!("source {}\n", mf.source));
    out.push_str(&format!("target {}\n", mf.target));
    for (_, v, us) in &mf.vertex_images {
        out.push_str(&format!("vertex {} -> {}\n", v, us.join(" ")));
    }
    for (_, a, poly) in &mf.arrow_images {
        out.push_str(&format!("arrow {} -> {}\n", a, dump_terms(poly)));
    }
    out
}

/// A module literal before its algebra is loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFile {
    pub name: String,
    pub over: String,
    pub header: usize,
    pub dims: Vec<(usize, String, usize)>,
    pub maps: Vec<(usize, String, Vec<Vec<u64>>)>,
}

pub fn parse_module(text: &str) -> Result<ModuleFile> {
    let mut name: Option<(usize, String)> = None;
    let mut over: Option<String> = None;
    let mut dims: Vec<(usize, String, usize)> = Vec::new();
    let mut maps: Vec<(usize, String, Vec<Vec<u64>>)> = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0].as_str() {
            "module" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: module NAME"));
                }
                if name.is_some() {
                    return Err(err(line, "duplicate module line"));
                }
                name = Some((line, toks[1].clone()));
            }
            "over" => {
                if toks.len() != 2 {
                    return Err(err(line, "expected: over FILE"));
                }
                if over.is_some() {
                    return Err(err(line, "duplicate over line"));
                }
                over = Some(toks[1].clone());
            }
            "dim" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected: dim V N"));
                }
                if dims.iter().any(|(_, v, _)| *v == toks[1]) {
                    return Err(err(line, format!("duplicate dim for vertex {}", toks[1])));
                }
                let n = parse_usize(line, &toks[2], "dimension")?;
                dims.push((line, toks[1].clone(), n));
            }
            "map" => {
                if toks.len() < 3 {
                    return Err(err(line, "expected: map A ENTRIES"));
                }
                if maps.iter().any(|(_, a, _)| *a == toks[1]) {
                    return Err(err(line, format!("duplicate map for arrow {}", toks[1])));
                }
                let mut rows: Vec<Vec<u64>> = vec![Vec::new()];
                for tok in &toks[2..] {
                    if tok == ";" {
                        rows.push(Vec::new());
                    } else {
                        let v = tok
                            .parse::<u64>()
                            .map_err(|_| err(line, format!("bad matrix entry {}", tok)))?;
                        rows.last_mut().unwrap().push(v);
                    }
                }
                if rows.iter().any(|r| r.len() != rows[0].len()) {
                    return Err(err(line, "ragged matrix rows"));
                }
                if rows[0].is_empty() {
                    return Err(err(line, "empty matrix row"));
                }
                maps.push((line, toks[1].clone(), rows));
            }
            other => return Err(err(line, format!("unknown keyword {}", other))),
        }
    }
    let (header, name) = name.ok_or_else(|| err(1, "missing module line"))?;
    let over = over.ok_or_else(|| err(header, "missing over line"))?;
    Ok(ModuleFile { name, over, header, dims, maps })
}

/// Bind a parsed module literal to its loaded algebra. Unmentioned vertices
/// get dimension 0 and unmentioned arrows act by zero.
pub fn resolve_module(mf: &ModuleFile, algebra: &Arc<PathAlgebra>) -> Result<Representation> {
    let nv = algebra.num_vertices();
    let mut dims = vec![0usize; nv];
    for (line, v, n) in &mf.dims {
        let i = algebra
            .quiver
            .vertex_index(v)
            .ok_or_else(|| err(*line, format!("unknown vertex {}", v)))?;
        dims[i] = *n;
    }
    let mut maps: Vec<Matrix> = algebra
        .quiver
        .arrows
        .iter()
        .map(|ar| Matrix::zero(dims[ar.tgt], dims[ar.src], algebra.p))
        .collect();
    for (line, a, rows) in &mf.maps {
        let k = algebra
            .quiver
            .arrow_index(a)
            .ok_or_else(|| err(*line, format!("unknown arrow {}", a)))?;
        let ar = &algebra.quiver.arrows[k];
        if rows.len() != dims[ar.tgt] || rows[0].len() != dims[ar.src] {
            return Err(err(
                *line,
                format!(
                    "map for arrow {} must be {} x {}, got {} x {}",
                    a,
                    dims[ar.tgt],
                    dims[ar.src],
                    rows.len(),
                    rows[0].len()
                ),
            ));
        }
        maps[k] = Matrix::from_rows(rows, algebra.p);
    }
    Ok(Representation::new(algebra, dims, maps))
}

/// Canonical module dump; zero dimensions and zero matrices are omitted.
pub fn dump_module(m: &Representation, name: &str, over: &str) -> String {
    let q = &m.algebra.quiver;
    let mut out = String::new();
    out.push_str(&format!("module {}\n", name));
    out.push_str(&format!("over {}\n", over));
    for (i, v) in q.vertices.iter().enumerate() {
        if m.dims[i] != 0 {
            out.push_str(&format!("dim {} {}\n", v, m.dims[i]));
        }
    }
    for (k, ar) in q.arrows.iter().enumerate() {
        let mat = &m.maps[k];
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows)
            .map(|i| {
                (0..mat.cols).map(|j| mat.get(i, j).to_string()).collect::<Vec<_>>().join(" ")
            })
            .collect();
        out.push_str(&format!("map {} {}\n", ar.name, rows.join(" ; ")));
    }
    out
}
