//! Small algebras shared by unit tests.

use crate::algebra::{Arrow, Path, PathAlgebra, Quiver, Relation};
use crate::change_of_rings::AlgebraMorphism;
use std::sync::Arc;

/// Two-vertex zigzag a: 2 -> 1, b: 1 -> 2 with relation (ab)^n.
pub fn zigzag(n: usize, p: u64) -> Arc<PathAlgebra> {
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
    Arc::new(PathAlgebra::build("zigzag", quiver, vec![rel], p, 2 * n + 2).unwrap())
}

/// The quotient of the zigzag by its socle ideal: relations (ab)^n and (ba)^n.
pub fn zigzag_mod(n: usize, p: u64) -> Arc<PathAlgebra> {
    let quiver = Quiver {
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![
            Arrow { name: "a".into(), src: 1, tgt: 0 },
            Arrow { name: "b".into(), src: 0, tgt: 1 },
        ],
    };
    let mut ab = Vec::new();
    let mut ba = Vec::new();
    for _ in 0..n {
        ab.push(0);
        ab.push(1);
        ba.push(1);
        ba.push(0);
    }
    let rels = vec![
        Relation::monomial(Path { source: 1, target: 1, arrows: ab }),
        Relation::monomial(Path { source: 0, target: 0, arrows: ba }),
    ];
    Arc::new(PathAlgebra::build("zigzag_mod", quiver, rels, p, 2 * n + 2).unwrap())
}

/// Three-vertex Nakayama-like algebra a: 2 -> 1, b: 3 -> 2, c: 1 -> 3 with
/// relations cb and bac; optionally a fourth arrow x: 1 -> 2 with ax and xa.
pub fn triangle(with_x: bool, p: u64) -> Arc<PathAlgebra> {
    let mut arrows = vec![
        Arrow { name: "a".into(), src: 1, tgt: 0 },
        Arrow { name: "b".into(), src: 2, tgt: 1 },
        Arrow { name: "c".into(), src: 0, tgt: 2 },
    ];
    if with_x {
        arrows.push(Arrow { name: "x".into(), src: 0, tgt: 1 });
    }
    let quiver = Quiver { vertices: vec!["1".into(), "2".into(), "3".into()], arrows };
    let mut rels = vec![
        Relation::monomial(Path { source: 0, target: 1, arrows: vec![2, 1] }),
        Relation::monomial(Path { source: 2, target: 2, arrows: vec![1, 0, 2] }),
    ];
    if with_x {
        rels.push(Relation::monomial(Path { source: 1, target: 1, arrows: vec![0, 3] }));
        rels.push(Relation::monomial(Path { source: 0, target: 0, arrows: vec![3, 0] }));
    }
    let name = if with_x { "triangle_ext" } else { "triangle" };
    Arc::new(PathAlgebra::build(name, quiver, rels, p, 6).unwrap())
}

/// The quotient morphism from the zigzag onto its socle quotient.
pub fn zigzag_quotient(n: usize, p: u64) -> AlgebraMorphism {
    AlgebraMorphism::by_names(&zigzag(n, p), &zigzag_mod(n, p))
        .expect("the zigzag maps onto its quotient")
}

/// The inclusion of the triangle algebra into its one-arrow extension.
pub fn triangle_extension(p: u64) -> AlgebraMorphism {
    AlgebraMorphism::by_names(&triangle(false, p), &triangle(true, p))
        .expect("the triangle embeds in its extension")
}

/// k[x]/x^2, one vertex, one loop.
pub fn dual_numbers(p: u64) -> Arc<PathAlgebra> {
    let quiver = Quiver {
        vertices: vec!["1".into()],
        arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
    };
    let rel = Relation::monomial(Path { source: 0, target: 0, arrows: vec![0, 0] });
    Arc::new(PathAlgebra::build("dual_numbers", quiver, vec![rel], p, 3).unwrap())
}
