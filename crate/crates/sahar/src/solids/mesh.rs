//! Combinatorial polyhedron meshes: labeled vertices, an edge list,
//! and face cycles. No coordinates are stored; the Euler characteristic
//! v − e + f needs none.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SolidError;

/// A polyhedron as pure incidence data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMesh", into = "RawMesh")]
pub struct PolyhedronMesh {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawMesh {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

impl From<PolyhedronMesh> for RawMesh {
    fn from(m: PolyhedronMesh) -> Self {
        RawMesh {
            vertices: m.vertices,
            edges: m.edges,
            faces: m.faces,
        }
    }
}

impl TryFrom<RawMesh> for PolyhedronMesh {
    type Error = SolidError;
    fn try_from(raw: RawMesh) -> Result<Self, SolidError> {
        PolyhedronMesh::new(raw.vertices, raw.edges, raw.faces)
    }
}

impl PolyhedronMesh {
    /// Validates incidence: indices in bounds, edges distinct and
    /// loop-free, faces are cycles of length ≥ 3 whose every side is a
    /// listed edge.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        faces: Vec<Vec<usize>>,
    ) -> Result<Self, SolidError> {
        let invalid = |detail: String| SolidError::MeshInvalid { detail };
        if vertices.is_empty() || edges.is_empty() || faces.is_empty() {
            return Err(invalid("vertices, edges, and faces must all be nonempty".into()));
        }
        let v = vertices.len();
        let mut seen = HashSet::new();
        for &(a, b) in &edges {
            if a >= v || b >= v {
                return Err(invalid(format!("edge ({a}, {b}) references a missing vertex")));
            }
            if a == b {
                return Err(invalid(format!("edge ({a}, {b}) is a loop")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(invalid(format!("edge ({a}, {b}) listed twice")));
            }
        }
        for (i, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(invalid(format!("face {i} has fewer than 3 vertices")));
            }
            let mut face_verts = HashSet::new();
            for &p in face {
                if p >= v {
                    return Err(invalid(format!("face {i} references a missing vertex")));
                }
                if !face_verts.insert(p) {
                    return Err(invalid(format!("face {i} repeats a vertex")));
                }
            }
            for k in 0..face.len() {
                let a = face[k];
                let b = face[(k + 1) % face.len()];
                if !seen.contains(&(a.min(b), a.max(b))) {
                    return Err(invalid(format!(
                        "face {i} uses side ({a}, {b}) which is not an edge"
                    )));
                }
            }
        }
        Ok(PolyhedronMesh {
            vertices,
            edges,
            faces,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.faces.len())
    }
}

/// v − e + f for a mesh; 2 for anything sphere-like.
pub fn euler_characteristic(m: &PolyhedronMesh) -> i64 {
    let (v, e, f) = m.counts();
    euler_from_counts(v, e, f)
}

/// v − e + f from bare counts, for tallies quoted without a mesh.
pub fn euler_from_counts(v: usize, e: usize, f: usize) -> i64 {
    v as i64 - e as i64 + f as i64
}

/// The five regular convex polyhedra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron,
        PlatonicSolid::Icosahedron,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlatonicSolid {
    type Err = SolidError;
    fn from_str(s: &str) -> Result<Self, SolidError> {
        match s {
            "tetrahedron" => Ok(PlatonicSolid::Tetrahedron),
            "cube" | "hexahedron" => Ok(PlatonicSolid::Cube),
            "octahedron" => Ok(PlatonicSolid::Octahedron),
            "dodecahedron" => Ok(PlatonicSolid::Dodecahedron),
            "icosahedron" => Ok(PlatonicSolid::Icosahedron),
            other => Err(SolidError::UnknownSolid {
                name: other.to_string(),
            }),
        }
    }
}

/// Builds the combinatorial mesh of a Platonic solid.
pub fn platonic(which: PlatonicSolid) -> PolyhedronMesh {
    let mesh = match which {
        PlatonicSolid::Tetrahedron => tetrahedron(),
        PlatonicSolid::Cube => cube(),
        PlatonicSolid::Octahedron => octahedron(),
        PlatonicSolid::Dodecahedron => dodecahedron(),
        PlatonicSolid::Icosahedron => icosahedron(),
    };
    mesh.expect("builtin meshes are valid")
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn tetrahedron() -> Result<PolyhedronMesh, SolidError> {
    PolyhedronMesh::new(
        labels("v", 4),
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
}

fn cube() -> Result<PolyhedronMesh, SolidError> {
    // Bottom ring 0..4, top ring 4..8 with i above i-4.
    PolyhedronMesh::new(
        labels("v", 8),
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
        vec![
            vec![0, 1, 2, 3],
            vec![4, 5, 6, 7],
            vec![0, 1, 5, 4],
            vec![1, 2, 6, 5],
            vec![2, 3, 7, 6],
            vec![3, 0, 4, 7],
        ],
    )
}

fn octahedron() -> Result<PolyhedronMesh, SolidError> {
    // 0 apex, 1..5 equator, 5 antapex.
    let mut edges = vec![(1, 2), (2, 3), (3, 4), (4, 1)];
    let mut faces = Vec::new();
    for i in 1..=4 {
        edges.push((0, i));
        edges.push((5, i));
        let j = if i == 4 { 1 } else { i + 1 };
        faces.push(vec![0, i, j]);
        faces.push(vec![5, i, j]);
    }
    PolyhedronMesh::new(labels("v", 6), edges, faces)
}

fn icosahedron() -> Result<PolyhedronMesh, SolidError> {
    // Apex 0, upper ring u_i = 1+i, lower ring l_i = 6+i, antapex 11.
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut vertices = vec!["apex".to_string()];
    vertices.extend(labels("u", 5));
    vertices.extend(labels("l", 5));
    vertices.push("antapex".to_string());

    let mut edges = Vec::new();
    let mut faces = Vec::new();
    for i in 0..5 {
        edges.push((0, u(i)));
        edges.push((u(i), u(i + 1)));
        edges.push((u(i), l(i)));
        edges.push((u(i), l(i + 1)));
        edges.push((l(i), l(i + 1)));
        edges.push((11, l(i)));
        faces.push(vec![0, u(i), u(i + 1)]);
        faces.push(vec![u(i), u(i + 1), l(i + 1)]);
        faces.push(vec![l(i), l(i + 1), u(i)]);
        faces.push(vec![11, l(i), l(i + 1)]);
    }
    PolyhedronMesh::new(vertices, edges, faces)
}

fn dodecahedron() -> Result<PolyhedronMesh, SolidError> {
    // Top pentagon t_i = i, upper belt u_i = 5+i, lower belt l_i = 10+i,
    // bottom pentagon b_i = 15+i. Each vertex has degree 3.
    let t = |i: usize| i % 5;
    let u = |i: usize| 5 + i % 5;
    let l = |i: usize| 10 + i % 5;
    let b = |i: usize| 15 + i % 5;
    let mut vertices = labels("t", 5);
    vertices.extend(labels("u", 5));
    vertices.extend(labels("l", 5));
    vertices.extend(labels("b", 5));

    let mut edges = Vec::new();
    let mut faces = vec![vec![0, 1, 2, 3, 4], vec![15, 16, 17, 18, 19]];
    for i in 0..5 {
        edges.push((t(i), t(i + 1)));
        edges.push((t(i), u(i)));
        edges.push((u(i), l(i)));
        edges.push((u(i), l(i + 1)));
        edges.push((l(i), b(i)));
        edges.push((b(i), b(i + 1)));
        faces.push(vec![t(i), t(i + 1), u(i + 1), l(i + 1), u(i)]);
        faces.push(vec![b(i), b(i + 1), l(i + 1), u(i), l(i)]);
    }
    PolyhedronMesh::new(vertices, edges, faces)
}
