//! Polyhedral maps as flag systems.
//!
//! A flag is an incident (vertex, edge, face) triple; the three adjacency
//! involutions r0, r1, r2 replace the vertex, edge, or face of a flag by the
//! unique other choice. Maps are built from face lists (cyclic vertex lists),
//! with canonical prism, antiprism, and Platonic constructors whose flag
//! numbering is reproducible: flags are indexed by sorting their label
//! triples lexicographically, edges by sorting their endpoint pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Perm;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("face {face} has only {size} vertices; every face needs at least 3")]
    FaceTooSmall { face: usize, size: usize },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertex { face: usize, vertex: usize },
    #[error("edge {{{a}, {b}}} lies on {count} face(s); every edge must lie on exactly 2")]
    EdgeFaceCount { a: usize, b: usize, count: usize },
    #[error("vertex {vertex} has degree {degree}; its vertex figure is degenerate")]
    VertexFigureDegenerate { vertex: usize, degree: usize },
    #[error("the faces around vertex {vertex} do not form a single cycle")]
    VertexFigureSplit { vertex: usize },
    #[error("the flag graph is disconnected")]
    Disconnected,
    #[error("polygon count must be at least 3, got {n}")]
    TooFewSides { n: usize },
    #[error("operation requires a canonical {expected} flag system")]
    NotCanonical { expected: &'static str },
}

/// A map given by its faces as cyclic vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceListMap {
    pub faces: Vec<Vec<usize>>,
}

impl FaceListMap {
    pub fn new(faces: Vec<Vec<usize>>) -> FaceListMap {
        FaceListMap { faces }
    }
}

/// The (vertex, edge, face) label of a flag.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagLabel {
    pub vertex: usize,
    pub edge: usize,
    pub face: usize,
}

/// Vertex, edge, and face counts.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub v: usize,
    pub e: usize,
    pub f: usize,
}

/// Where a flag system came from; canonical operations (rotation, flag-type
/// classification) are only defined for the prism/antiprism constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    Prism(usize),
    Antiprism(usize),
    Platonic(PlatonicSolid),
    FaceList,
    Cover,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Prism,
    Antiprism,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Prism => write!(f, "prism"),
            Family::Antiprism => write!(f, "antiprism"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
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
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        };
        write!(f, "{name}")
    }
}

impl FromStr for PlatonicSolid {
    type Err = String;

    fn from_str(s: &str) -> Result<PlatonicSolid, String> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(PlatonicSolid::Tetrahedron),
            "cube" => Ok(PlatonicSolid::Cube),
            "octahedron" => Ok(PlatonicSolid::Octahedron),
            "dodecahedron" => Ok(PlatonicSolid::Dodecahedron),
            "icosahedron" => Ok(PlatonicSolid::Icosahedron),
            other => Err(format!("unknown platonic solid {other:?}")),
        }
    }
}

/// Combinatorics kept for maps built from face lists, used by the canonical
/// operations.
#[derive(Clone, Debug)]
struct MapGeometry {
    faces: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_faces: Vec<[usize; 2]>,
}

/// A map as a set of flags with three fixed-point-free involutions.
#[derive(Clone, Debug)]
pub struct FlagSystem {
    r: [Perm; 3],
    labels: Vec<FlagLabel>,
    v_count: usize,
    e_count: usize,
    f_count: usize,
    kind: MapKind,
    geometry: Option<MapGeometry>,
}

impl FlagSystem {
    /// Wraps raw involutions and labels without checking the polytope
    /// axioms; use [`FlagSystem::validate`] to audit the result.
    pub fn from_parts(r: [Perm; 3], labels: Vec<FlagLabel>, kind: MapKind) -> FlagSystem {
        assert_eq!(r[0].degree(), labels.len());
        assert_eq!(r[1].degree(), labels.len());
        assert_eq!(r[2].degree(), labels.len());
        let v_count = labels.iter().map(|l| l.vertex + 1).max().unwrap_or(0);
        let e_count = labels.iter().map(|l| l.edge + 1).max().unwrap_or(0);
        let f_count = labels.iter().map(|l| l.face + 1).max().unwrap_or(0);
        FlagSystem {
            r,
            labels,
            v_count,
            e_count,
            f_count,
            kind,
            geometry: None,
        }
    }

    /// Builds the flag system of a face list and checks the polytope axioms
    /// at the flag level; degenerate inputs are rejected, not repaired.
    pub fn from_face_list(map: &FaceListMap) -> Result<FlagSystem, MapError> {
        let fs = Self::assemble(&map.faces, MapKind::FaceList)?;
        fs.check_polyhedral()?;
        Ok(fs)
    }

    /// The n-gonal prism with its canonical labeling: bottom vertices
    /// `0..n`, top vertices `n..2n` (vertex `n+i` above vertex `i`), faces
    /// ordered bottom, top, then square `i` on bottom edge `{i, i+1}`.
    pub fn prism(n: usize) -> Result<FlagSystem, MapError> {
        if n < 3 {
            return Err(MapError::TooFewSides { n });
        }
        let mut faces: Vec<Vec<usize>> = vec![(0..n).collect(), (n..2 * n).collect()];
        for i in 0..n {
            let j = (i + 1) % n;
            faces.push(vec![i, j, n + j, n + i]);
        }
        let fs = Self::assemble(&faces, MapKind::Prism(n))?;
        fs.check_polyhedral()?;
        Ok(fs)
    }

    /// The n-gonal antiprism with its canonical labeling: bottom vertices
    /// `0..n`, top vertices `n..2n` (vertex `n+i` adjacent to `i` and
    /// `i+1`), faces ordered bottom, top, then alternating up/down triangles.
    pub fn antiprism(n: usize) -> Result<FlagSystem, MapError> {
        if n < 3 {
            return Err(MapError::TooFewSides { n });
        }
        let mut faces: Vec<Vec<usize>> = vec![(0..n).collect(), (n..2 * n).collect()];
        for i in 0..n {
            let j = (i + 1) % n;
            faces.push(vec![i, j, n + i]);
            faces.push(vec![n + i, n + j, j]);
        }
        let fs = Self::assemble(&faces, MapKind::Antiprism(n))?;
        fs.check_polyhedral()?;
        Ok(fs)
    }

    pub fn platonic(solid: PlatonicSolid) -> FlagSystem {
        let faces: Vec<Vec<usize>> = match solid {
            PlatonicSolid::Tetrahedron => {
                vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]]
            }
            PlatonicSolid::Cube => {
                let mut faces: Vec<Vec<usize>> = vec![(0..4).collect(), (4..8).collect()];
                for i in 0..4 {
                    let j = (i + 1) % 4;
                    faces.push(vec![i, j, 4 + j, 4 + i]);
                }
                faces
            }
            PlatonicSolid::Octahedron => {
                let mut faces: Vec<Vec<usize>> = vec![(0..3).collect(), (3..6).collect()];
                for i in 0..3 {
                    let j = (i + 1) % 3;
                    faces.push(vec![i, j, 3 + i]);
                    faces.push(vec![3 + i, 3 + j, j]);
                }
                faces
            }
            PlatonicSolid::Icosahedron => Self::icosahedron_faces(),
            PlatonicSolid::Dodecahedron => {
                // dual of the icosahedron: one pentagon per icosahedron
                // vertex, listing the faces around it in cyclic order
                let icosa = Self::assemble(&Self::icosahedron_faces(), MapKind::FaceList)
                    .expect("icosahedron face list is valid");
                icosa.dual_face_list()
            }
        };
        let fs =
            Self::assemble(&faces, MapKind::Platonic(solid)).expect("platonic face list is valid");
        fs.check_polyhedral()
            .expect("platonic solids satisfy the axioms");
        fs
    }

    fn icosahedron_faces() -> Vec<Vec<usize>> {
        vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 5, 1],
            vec![1, 6, 2],
            vec![2, 7, 3],
            vec![3, 8, 4],
            vec![4, 9, 5],
            vec![5, 10, 1],
            vec![2, 6, 7],
            vec![3, 7, 8],
            vec![4, 8, 9],
            vec![5, 9, 10],
            vec![1, 10, 6],
            vec![6, 11, 7],
            vec![7, 11, 8],
            vec![8, 11, 9],
            vec![9, 11, 10],
            vec![10, 11, 6],
        ]
    }

    /// Faces of the dual map: for each vertex, the faces around it in the
    /// cyclic order given by alternating r2/r1 steps.
    fn dual_face_list(&self) -> Vec<Vec<usize>> {
        let mut dual_faces = Vec::with_capacity(self.v_count);
        for v in 0..self.v_count {
            let start = (0..self.flag_count())
                .find(|&i| self.labels[i].vertex == v)
                .expect("every vertex carries a flag");
            let mut cycle = Vec::new();
            let mut flag = start;
            loop {
                cycle.push(self.labels[flag].face);
                flag = self.r[1].apply(self.r[2].apply(flag));
                if flag == start {
                    break;
                }
            }
            dual_faces.push(cycle);
        }
        dual_faces
    }

    fn assemble(faces: &[Vec<usize>], kind: MapKind) -> Result<FlagSystem, MapError> {
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(MapError::FaceTooSmall {
                    face: fi,
                    size: face.len(),
                });
            }
            let mut sorted = face.clone();
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(MapError::RepeatedVertex {
                        face: fi,
                        vertex: pair[0],
                    });
                }
            }
        }

        // edges keyed by sorted endpoint pair; BTreeMap order gives the
        // lexicographic edge indexing
        let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            for j in 0..face.len() {
                let u = face[j];
                let v = face[(j + 1) % face.len()];
                let key = (u.min(v), u.max(v));
                edge_map.entry(key).or_default().push(fi);
            }
        }
        for (&(a, b), fs) in &edge_map {
            if fs.len() != 2 {
                return Err(MapError::EdgeFaceCount {
                    a,
                    b,
                    count: fs.len(),
                });
            }
        }
        let edges: Vec<(usize, usize)> = edge_map.keys().copied().collect();
        let edge_index: BTreeMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let edge_faces: Vec<[usize; 2]> = edge_map.values().map(|f| [f[0], f[1]]).collect();

        let mut labels: Vec<FlagLabel> = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            for j in 0..face.len() {
                let u = face[j];
                let v = face[(j + 1) % face.len()];
                let e = edge_index[&(u.min(v), u.max(v))];
                labels.push(FlagLabel {
                    vertex: u,
                    edge: e,
                    face: fi,
                });
                labels.push(FlagLabel {
                    vertex: v,
                    edge: e,
                    face: fi,
                });
            }
        }
        labels.sort_unstable();
        let flag_index: BTreeMap<FlagLabel, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

        // the two edges through each (face, vertex) incidence, for r1
        let mut corner_edges: BTreeMap<(usize, usize), [usize; 2]> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            let len = face.len();
            for j in 0..len {
                let v = face[j];
                let prev = face[(j + len - 1) % len];
                let next = face[(j + 1) % len];
                let e_prev = edge_index[&(v.min(prev), v.max(prev))];
                let e_next = edge_index[&(v.min(next), v.max(next))];
                corner_edges.insert((fi, v), [e_prev, e_next]);
            }
        }

        let n = labels.len();
        let mut r0 = vec![0usize; n];
        let mut r1 = vec![0usize; n];
        let mut r2 = vec![0usize; n];
        for (i, l) in labels.iter().enumerate() {
            let (a, b) = edges[l.edge];
            let other_vertex = if l.vertex == a { b } else { a };
            r0[i] = flag_index[&FlagLabel {
                vertex: other_vertex,
                ..*l
            }];

            let [e1, e2] = corner_edges[&(l.face, l.vertex)];
            let other_edge = if l.edge == e1 { e2 } else { e1 };
            r1[i] = flag_index[&FlagLabel {
                edge: other_edge,
                ..*l
            }];

            let [f1, f2] = edge_faces[l.edge];
            let other_face = if l.face == f1 { f2 } else { f1 };
            r2[i] = flag_index[&FlagLabel {
                face: other_face,
                ..*l
            }];
        }

        let v_count = faces.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        Ok(FlagSystem {
            r: [
                Perm::from_images(r0),
                Perm::from_images(r1),
                Perm::from_images(r2),
            ],
            labels,
            v_count,
            e_count: edges.len(),
            f_count: faces.len(),
            kind,
            geometry: Some(MapGeometry {
                faces: faces.to_vec(),
                edges,
                edge_faces,
            }),
        })
    }

    /// Rejects maps that assemble but are not genuine polyhedra: degenerate
    /// or split vertex figures, and disconnected flag graphs.
    fn check_polyhedral(&self) -> Result<(), MapError> {
        let mut degree = vec![0usize; self.v_count];
        let geometry = self.geometry.as_ref().expect("assembled from a face list");
        for &(a, b) in &geometry.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        for (v, &d) in degree.iter().enumerate() {
            if d < 3 {
                return Err(MapError::VertexFigureDegenerate {
                    vertex: v,
                    degree: d,
                });
            }
        }
        for v in 0..self.v_count {
            if !self.cell_is_single_cycle(|l| l.vertex == v, [1, 2]) {
                return Err(MapError::VertexFigureSplit { vertex: v });
            }
        }
        if !self.is_transitive() {
            return Err(MapError::Disconnected);
        }
        Ok(())
    }

    pub fn flag_count(&self) -> usize {
        self.labels.len()
    }

    /// The three adjacency involutions r0, r1, r2.
    pub fn generators(&self) -> &[Perm; 3] {
        &self.r
    }

    pub fn adjacency(&self, i: usize) -> &Perm {
        &self.r[i]
    }

    pub fn label(&self, flag: usize) -> FlagLabel {
        self.labels[flag]
    }

    pub fn labels(&self) -> &[FlagLabel] {
        &self.labels
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    /// Index of the flag carrying this label, if present.
    pub fn flag_index(&self, label: FlagLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Index of the edge with the given endpoints (face-list maps only).
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let geometry = self.geometry.as_ref()?;
        let key = (u.min(v), u.max(v));
        geometry.edges.binary_search(&key).ok()
    }

    /// Number of edges on a face (a face of size s carries 2s flags).
    pub fn face_size(&self, face: usize) -> usize {
        self.labels.iter().filter(|l| l.face == face).count() / 2
    }

    /// Number of edges through a vertex.
    pub fn vertex_degree(&self, vertex: usize) -> usize {
        self.labels.iter().filter(|l| l.vertex == vertex).count() / 2
    }

    pub fn f_vector(&self) -> FVector {
        FVector {
            v: self.v_count,
            e: self.e_count,
            f: self.f_count,
        }
    }

    /// v − e + f of the map itself.
    pub fn euler_characteristic(&self) -> i64 {
        self.v_count as i64 - self.e_count as i64 + self.f_count as i64
    }

    /// Applies a word to the flags, letters left-to-right.
    pub fn evaluate(&self, word: &Word) -> Perm {
        word.evaluate_in(&self.r)
    }

    fn is_transitive(&self) -> bool {
        if self.flag_count() == 0 {
            return false;
        }
        let mut seen = vec![false; self.flag_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(f) = stack.pop() {
            for r in &self.r {
                let g = r.apply(f);
                if !seen[g] {
                    seen[g] = true;
                    reached += 1;
                    stack.push(g);
                }
            }
        }
        reached == self.flag_count()
    }

    /// Checks that the flags selected by `pred` form one orbit under the two
    /// listed adjacencies.
    fn cell_is_single_cycle(&self, pred: impl Fn(&FlagLabel) -> bool, gens: [usize; 2]) -> bool {
        let members: Vec<usize> = (0..self.flag_count())
            .filter(|&i| pred(&self.labels[i]))
            .collect();
        let Some(&start) = members.first() else {
            return false;
        };
        let mut seen = vec![false; self.flag_count()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut orbit = vec![start];
        while let Some(f) = stack.pop() {
            for &g in &gens {
                let h = self.r[g].apply(f);
                if !seen[h] {
                    seen[h] = true;
                    orbit.push(h);
                    stack.push(h);
                }
            }
        }
        orbit.len() == members.len() && members.iter().all(|&m| seen[m])
    }

    /// Audits the flag-level invariants, reporting pass/fail per check.
    pub fn validate(&self) -> ValidationReport {
        let inv_fpf =
            |p: &Perm| p.compose(p).is_identity() && (0..p.degree()).all(|i| p.apply(i) != i);
        let r0r2 = self.r[0].compose(&self.r[2]);
        ValidationReport {
            involutions_fixed_point_free: [
                inv_fpf(&self.r[0]),
                inv_fpf(&self.r[1]),
                inv_fpf(&self.r[2]),
            ],
            r0r2_order_two: r0r2.compose(&r0r2).is_identity(),
            r0r2_fixed_point_free: (0..self.flag_count()).all(|i| r0r2.apply(i) != i),
            transitive: self.is_transitive(),
            vertex_figures_single_cycle: (0..self.v_count)
                .all(|v| self.cell_is_single_cycle(|l| l.vertex == v, [1, 2])),
            faces_single_cycle: (0..self.f_count)
                .all(|f| self.cell_is_single_cycle(|l| l.face == f, [0, 1])),
        }
    }

    fn canonical_n(&self, family: Family) -> Result<usize, MapError> {
        match (family, &self.kind) {
            (Family::Prism, MapKind::Prism(n)) => Ok(*n),
            (Family::Antiprism, MapKind::Antiprism(n)) => Ok(*n),
            (Family::Prism, _) => Err(MapError::NotCanonical { expected: "prism" }),
            (Family::Antiprism, _) => Err(MapError::NotCanonical {
                expected: "antiprism",
            }),
        }
    }

    /// Classifies the flags of a canonical prism or antiprism into the types
    /// used by the stabilizer constructions.
    pub fn classify_flags(&self, family: Family) -> Result<FlagTypeClassification, MapError> {
        let n = self.canonical_n(family)?;
        let geometry = self
            .geometry
            .as_ref()
            .expect("canonical maps keep geometry");
        let ring_edge = |e: usize| {
            let [f1, f2] = geometry.edge_faces[e];
            f1 < 2 || f2 < 2
        };
        let classes = self
            .labels
            .iter()
            .map(|l| match family {
                Family::Prism => {
                    if l.face < 2 {
                        FlagClass::C
                    } else if ring_edge(l.edge) {
                        FlagClass::A
                    } else {
                        FlagClass::B
                    }
                }
                Family::Antiprism => {
                    if l.face < 2 {
                        FlagClass::D
                    } else if ring_edge(l.edge) {
                        FlagClass::A
                    } else {
                        // triangle apex: the vertex on the opposite ring
                        // from the triangle's two base vertices
                        let face = &geometry.faces[l.face];
                        let bottom = face.iter().filter(|&&v| v < n).count();
                        let apex_on_bottom = bottom == 1;
                        let v_on_bottom = l.vertex < n;
                        if v_on_bottom == apex_on_bottom {
                            FlagClass::C
                        } else {
                            FlagClass::B
                        }
                    }
                }
            })
            .collect();
        Ok(FlagTypeClassification { classes })
    }

    /// The canonical base flag: the lexicographically least type-A label.
    pub fn base_flag(&self, family: Family) -> Result<usize, MapError> {
        let classification = self.classify_flags(family)?;
        Ok(classification
            .classes
            .iter()
            .position(|&c| c == FlagClass::A)
            .expect("every prism and antiprism has type-A flags"))
    }

    /// The flag permutation induced by rotating the prism or antiprism `k`
    /// steps about its axis (bottom vertex i to i+k mod n).
    pub fn rotation(&self, k: i64) -> Result<Perm, MapError> {
        let family = match &self.kind {
            MapKind::Prism(_) => Family::Prism,
            MapKind::Antiprism(_) => Family::Antiprism,
            _ => {
                return Err(MapError::NotCanonical {
                    expected: "prism or antiprism",
                })
            }
        };
        let n = self.canonical_n(family)?;
        let geometry = self
            .geometry
            .as_ref()
            .expect("canonical maps keep geometry");
        let shift = k.rem_euclid(n as i64) as usize;
        let vmap = |v: usize| {
            if v < n {
                (v + shift) % n
            } else {
                n + (v - n + shift) % n
            }
        };
        let edge_index: BTreeMap<(usize, usize), usize> = geometry
            .edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let face_index: BTreeMap<Vec<usize>, usize> = geometry
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let mut key = f.clone();
                key.sort_unstable();
                (key, i)
            })
            .collect();
        let flag_index: BTreeMap<FlagLabel, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        let images = self
            .labels
            .iter()
            .map(|l| {
                let (a, b) = geometry.edges[l.edge];
                let (ia, ib) = (vmap(a), vmap(b));
                let edge = edge_index[&(ia.min(ib), ia.max(ib))];
                let mut fkey: Vec<usize> =
                    geometry.faces[l.face].iter().map(|&v| vmap(v)).collect();
                fkey.sort_unstable();
                let face = face_index[&fkey];
                flag_index[&FlagLabel {
                    vertex: vmap(l.vertex),
                    edge,
                    face,
                }]
            })
            .collect();
        Ok(Perm::from_images(images))
    }
}

/// Pass/fail audit of the flag-level polytope invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub involutions_fixed_point_free: [bool; 3],
    pub r0r2_order_two: bool,
    pub r0r2_fixed_point_free: bool,
    pub transitive: bool,
    pub vertex_figures_single_cycle: bool,
    pub faces_single_cycle: bool,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.involutions_fixed_point_free.iter().all(|&b| b)
            && self.r0r2_order_two
            && self.r0r2_fixed_point_free
            && self.transitive
            && self.vertex_figures_single_cycle
            && self.faces_single_cycle
    }
}

/// Flag types of the prism (A, B, C) and antiprism (A, B, C, D) families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlagClass {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTypeClassification {
    pub classes: Vec<FlagClass>,
}

impl FlagTypeClassification {
    pub fn class_of(&self, flag: usize) -> FlagClass {
        self.classes[flag]
    }

    pub fn count(&self, class: FlagClass) -> usize {
        self.classes.iter().filter(|&&c| c == class).count()
    }

    pub fn flags_of(&self, class: FlagClass) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == class)
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_counts() {
        let fs = FlagSystem::platonic(PlatonicSolid::Tetrahedron);
        assert_eq!(fs.flag_count(), 24);
        assert_eq!(fs.f_vector(), FVector { v: 4, e: 6, f: 4 });
        assert!(fs.validate().all_pass());
    }

    #[test]
    fn platonic_f_vectors_and_flags() {
        let expected = [
            (PlatonicSolid::Tetrahedron, (4, 6, 4)),
            (PlatonicSolid::Cube, (8, 12, 6)),
            (PlatonicSolid::Octahedron, (6, 12, 8)),
            (PlatonicSolid::Dodecahedron, (20, 30, 12)),
            (PlatonicSolid::Icosahedron, (12, 30, 20)),
        ];
        for (solid, (v, e, f)) in expected {
            let fs = FlagSystem::platonic(solid);
            assert_eq!(fs.f_vector(), FVector { v, e, f }, "{solid}");
            assert_eq!(fs.flag_count(), 4 * e, "{solid}: four flags per edge");
            assert!(fs.validate().all_pass(), "{solid}");
            assert_eq!(fs.euler_characteristic(), 2, "{solid}");
        }
    }

    #[test]
    fn prism_counts() {
        let fs = FlagSystem::prism(5).unwrap();
        assert_eq!(fs.flag_count(), 60);
        assert_eq!(fs.f_vector(), FVector { v: 10, e: 15, f: 7 });
        assert!(fs.validate().all_pass());
    }

    #[test]
    fn prism_four_is_the_cube() {
        let fs = FlagSystem::prism(4).unwrap();
        assert_eq!(fs.f_vector(), FVector { v: 8, e: 12, f: 6 });
    }

    #[test]
    fn antiprism_counts() {
        let three = FlagSystem::antiprism(3).unwrap();
        assert_eq!(three.f_vector(), FVector { v: 6, e: 12, f: 8 });
        let four = FlagSystem::antiprism(4).unwrap();
        assert_eq!(four.flag_count(), 64);
        assert_eq!(four.f_vector(), FVector { v: 8, e: 16, f: 10 });
        assert!(four.validate().all_pass());
    }

    #[test]
    fn flags_per_cell_counts() {
        let fs = FlagSystem::antiprism(5).unwrap();
        // each face of size s carries 2s flags, each vertex of degree d carries 2d
        for face in 0..fs.f_count {
            let count = fs.labels.iter().filter(|l| l.face == face).count();
            let size = fs.geometry.as_ref().unwrap().faces[face].len();
            assert_eq!(count, 2 * size);
        }
        for v in 0..fs.v_count {
            let count = fs.labels.iter().filter(|l| l.vertex == v).count();
            assert_eq!(count, 2 * 4, "antiprism vertices have degree 4");
        }
    }

    #[test]
    fn constructors_reject_small_n() {
        assert_eq!(
            FlagSystem::prism(2).unwrap_err(),
            MapError::TooFewSides { n: 2 }
        );
        assert_eq!(
            FlagSystem::antiprism(1).unwrap_err(),
            MapError::TooFewSides { n: 1 }
        );
    }

    #[test]
    fn adjacency_changes_exactly_one_label_rank() {
        let fs = FlagSystem::prism(6).unwrap();
        for flag in 0..fs.flag_count() {
            let l = fs.label(flag);
            for i in 0..3 {
                let m = fs.label(fs.adjacency(i).apply(flag));
                assert_eq!(l.vertex == m.vertex, i != 0);
                assert_eq!(l.edge == m.edge, i != 1);
                assert_eq!(l.face == m.face, i != 2);
            }
        }
    }

    #[test]
    fn glued_triangles_are_rejected() {
        let map = FaceListMap::new(vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert!(matches!(
            FlagSystem::from_face_list(&map),
            Err(MapError::VertexFigureDegenerate { .. })
        ));
    }

    #[test]
    fn edge_on_three_faces_is_rejected() {
        let map = FaceListMap::new(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 1, 4],
            vec![2, 3, 4],
        ]);
        assert!(matches!(
            FlagSystem::from_face_list(&map),
            Err(MapError::EdgeFaceCount {
                a: 0,
                b: 1,
                count: 3
            })
        ));
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let map = FaceListMap::new(vec![vec![0, 1, 0, 2], vec![0, 1, 2]]);
        assert!(matches!(
            FlagSystem::from_face_list(&map),
            Err(MapError::RepeatedVertex { .. })
        ));
    }

    #[test]
    fn validate_flags_broken_involution() {
        let fs = FlagSystem::prism(3).unwrap();
        let broken = FlagSystem::from_parts(
            [
                Perm::identity(fs.flag_count()),
                fs.adjacency(1).clone(),
                fs.adjacency(2).clone(),
            ],
            fs.labels.clone(),
            MapKind::FaceList,
        );
        let report = broken.validate();
        assert!(!report.involutions_fixed_point_free[0]);
        assert!(report.involutions_fixed_point_free[1]);
    }

    #[test]
    fn validate_flags_disconnected_union() {
        // two disjoint tetrahedra: valid cells, but the flag graph splits
        let t = FlagSystem::platonic(PlatonicSolid::Tetrahedron);
        let n = t.flag_count();
        let double = |p: &Perm| {
            let mut images = Vec::with_capacity(2 * n);
            images.extend((0..n).map(|i| p.apply(i)));
            images.extend((0..n).map(|i| n + p.apply(i)));
            Perm::from_images(images)
        };
        let mut labels = t.labels.clone();
        labels.extend(t.labels.iter().map(|l| FlagLabel {
            vertex: l.vertex + 4,
            edge: l.edge + 6,
            face: l.face + 4,
        }));
        let union = FlagSystem::from_parts(
            [
                double(t.adjacency(0)),
                double(t.adjacency(1)),
                double(t.adjacency(2)),
            ],
            labels,
            MapKind::FaceList,
        );
        let report = union.validate();
        assert!(!report.transitive);
        assert!(report.involutions_fixed_point_free.iter().all(|&b| b));
        assert!(report.vertex_figures_single_cycle);
    }

    #[test]
    fn prism_flag_classes_are_balanced() {
        let fs = FlagSystem::prism(5).unwrap();
        let classes = fs.classify_flags(Family::Prism).unwrap();
        assert_eq!(classes.count(FlagClass::A), 20);
        assert_eq!(classes.count(FlagClass::B), 20);
        assert_eq!(classes.count(FlagClass::C), 20);
        assert_eq!(classes.count(FlagClass::D), 0);
    }

    #[test]
    fn antiprism_flag_classes_are_balanced() {
        let fs = FlagSystem::antiprism(4).unwrap();
        let classes = fs.classify_flags(Family::Antiprism).unwrap();
        for class in [FlagClass::A, FlagClass::B, FlagClass::C, FlagClass::D] {
            assert_eq!(classes.count(class), 16, "{class:?}");
        }
    }

    #[test]
    fn antiprism_classes_match_adjacency_definitions() {
        // B is 1-adjacent to A, C is 2-adjacent to B, D is 2-adjacent to A
        let fs = FlagSystem::antiprism(5).unwrap();
        let cls = fs.classify_flags(Family::Antiprism).unwrap();
        for flag in 0..fs.flag_count() {
            if cls.class_of(flag) == FlagClass::A {
                assert_eq!(cls.class_of(fs.adjacency(1).apply(flag)), FlagClass::B);
                assert_eq!(cls.class_of(fs.adjacency(2).apply(flag)), FlagClass::D);
            }
            if cls.class_of(flag) == FlagClass::B {
                assert_eq!(cls.class_of(fs.adjacency(2).apply(flag)), FlagClass::C);
            }
        }
    }

    #[test]
    fn classify_requires_canonical_construction() {
        let fs = FlagSystem::platonic(PlatonicSolid::Cube);
        assert!(fs.classify_flags(Family::Prism).is_err());
    }

    #[test]
    fn rotation_has_order_n_and_no_fixed_flags() {
        for fs in [
            FlagSystem::prism(5).unwrap(),
            FlagSystem::antiprism(4).unwrap(),
        ] {
            let n = match fs.kind() {
                MapKind::Prism(n) | MapKind::Antiprism(n) => *n,
                _ => unreachable!(),
            };
            let step = fs.rotation(1).unwrap();
            assert!(!step.is_identity());
            assert_eq!(step.order(), n as u64);
            let mut acc = Perm::identity(fs.flag_count());
            for _ in 0..n {
                acc = acc.compose(&step);
            }
            assert!(acc.is_identity());
            assert!((0..fs.flag_count()).all(|i| step.apply(i) != i));
            assert_eq!(
                fs.rotation(n as i64).unwrap(),
                Perm::identity(fs.flag_count())
            );
            assert_eq!(fs.rotation(-1).unwrap(), step.inverse());
        }
    }

    #[test]
    fn rotation_preserves_flag_classes() {
        let fs = FlagSystem::prism(6).unwrap();
        let cls = fs.classify_flags(Family::Prism).unwrap();
        for k in 0..6 {
            let rot = fs.rotation(k).unwrap();
            for flag in 0..fs.flag_count() {
                assert_eq!(cls.class_of(flag), cls.class_of(rot.apply(flag)));
            }
        }
    }

    #[test]
    fn base_flag_is_least_type_a_label() {
        let fs = FlagSystem::prism(5).unwrap();
        let base = fs.base_flag(Family::Prism).unwrap();
        let l = fs.label(base);
        // vertex 0, bottom edge {0,1}, the square on that edge
        assert_eq!(l.vertex, 0);
        let geometry = fs.geometry.as_ref().unwrap();
        assert_eq!(geometry.edges[l.edge], (0, 1));
        assert!(l.face >= 2, "base flag lies on a square");
        let cls = fs.classify_flags(Family::Prism).unwrap();
        assert_eq!(cls.class_of(base), FlagClass::A);
        assert!(cls.flags_of(FlagClass::A).iter().all(|&f| f >= base));
    }

    #[test]
    fn face_list_round_trip_matches_prism() {
        // the prism face list in a rotated order still yields an isomorphic
        // edge-labeled flag graph
        let fs = FlagSystem::prism(4).unwrap();
        let mut faces = fs.geometry.as_ref().unwrap().faces.clone();
        faces.rotate_left(3);
        let other = FlagSystem::from_face_list(&FaceListMap::new(faces)).unwrap();
        assert_eq!(other.f_vector(), fs.f_vector());
        assert!(flag_systems_isomorphic(&fs, &other));
    }

    /// Edge-labeled graph isomorphism by BFS propagation from a candidate
    /// image of flag 0; used as a test oracle only.
    fn flag_systems_isomorphic(x: &FlagSystem, y: &FlagSystem) -> bool {
        if x.flag_count() != y.flag_count() {
            return false;
        }
        let n = x.flag_count();
        'candidates: for start in 0..n {
            let mut map = vec![usize::MAX; n];
            map[0] = start;
            let mut queue = std::collections::VecDeque::from([0usize]);
            while let Some(f) = queue.pop_front() {
                for i in 0..3 {
                    let fx = x.adjacency(i).apply(f);
                    let fy = y.adjacency(i).apply(map[f]);
                    if map[fx] == usize::MAX {
                        map[fx] = fy;
                        queue.push_back(fx);
                    } else if map[fx] != fy {
                        continue 'candidates;
                    }
                }
            }
            let mut image = map.clone();
            image.sort_unstable();
            if image.windows(2).all(|w| w[0] < w[1]) {
                return true;
            }
        }
        false
    }
}
