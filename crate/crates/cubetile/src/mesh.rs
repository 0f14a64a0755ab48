//! Tetrahedral meshes of topological cubes.
//!
//! A mesh is a finite tetrahedral complex together with a labeling of its
//! boundary triangles by six patch names, three opposite pairs. Validation
//! checks the conditions that make the labeled complex a topological cube:
//! the boundary is a triangulated sphere, each patch is a nonempty
//! edge-connected union of triangles, and opposite patches share no vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index, stable for the lifetime of a mesh.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    /// The index as a `usize`, for slice addressing.
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(i: u32) -> Self {
        VertexId(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the six boundary patches; `Bi` and `BiBar` are opposites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BoundaryLabel {
    B1,
    B1Bar,
    B2,
    B2Bar,
    B3,
    B3Bar,
}

impl BoundaryLabel {
    pub const ALL: [BoundaryLabel; 6] = [
        BoundaryLabel::B1,
        BoundaryLabel::B1Bar,
        BoundaryLabel::B2,
        BoundaryLabel::B2Bar,
        BoundaryLabel::B3,
        BoundaryLabel::B3Bar,
    ];

    /// The patch facing this one.
    pub fn opposite(self) -> BoundaryLabel {
        match self {
            BoundaryLabel::B1 => BoundaryLabel::B1Bar,
            BoundaryLabel::B1Bar => BoundaryLabel::B1,
            BoundaryLabel::B2 => BoundaryLabel::B2Bar,
            BoundaryLabel::B2Bar => BoundaryLabel::B2,
            BoundaryLabel::B3 => BoundaryLabel::B3Bar,
            BoundaryLabel::B3Bar => BoundaryLabel::B3,
        }
    }

    /// Position in [`BoundaryLabel::ALL`].
    pub fn index(self) -> usize {
        match self {
            BoundaryLabel::B1 => 0,
            BoundaryLabel::B1Bar => 1,
            BoundaryLabel::B2 => 2,
            BoundaryLabel::B2Bar => 3,
            BoundaryLabel::B3 => 4,
            BoundaryLabel::B3Bar => 5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryLabel::B1 => "B1",
            BoundaryLabel::B1Bar => "B1bar",
            BoundaryLabel::B2 => "B2",
            BoundaryLabel::B2Bar => "B2bar",
            BoundaryLabel::B3 => "B3",
            BoundaryLabel::B3Bar => "B3bar",
        }
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundaryLabel {
    type Err = MeshError;

    fn from_str(s: &str) -> Result<Self, MeshError> {
        match s {
            "B1" => Ok(BoundaryLabel::B1),
            "B1bar" => Ok(BoundaryLabel::B1Bar),
            "B2" => Ok(BoundaryLabel::B2),
            "B2bar" => Ok(BoundaryLabel::B2Bar),
            "B3" => Ok(BoundaryLabel::B3),
            "B3bar" => Ok(BoundaryLabel::B3Bar),
            other => Err(MeshError::UnknownLabel(other.to_string())),
        }
    }
}

/// Canonical (sorted) key for an unordered vertex triple.
pub fn tri_key(a: u32, b: u32, c: u32) -> [u32; 3] {
    let mut k = [a, b, c];
    k.sort_unstable();
    k
}

/// Errors raised while loading a mesh document or constructing a mesh.
#[derive(Debug, Error)]
pub enum MeshError {
    #[error("malformed mesh document: {0}")]
    Parse(String),
    #[error("tetrahedron {tet} references vertex {vertex}, but the mesh has {vertex_count} vertices")]
    TetVertexOutOfRange {
        tet: usize,
        vertex: u32,
        vertex_count: usize,
    },
    #[error("boundary triangle {tri:?} references vertex {vertex}, but the mesh has {vertex_count} vertices")]
    TriVertexOutOfRange {
        tri: [u32; 3],
        vertex: u32,
        vertex_count: usize,
    },
    #[error("boundary triangle {0:?} has a repeated vertex")]
    DegenerateTriangle([u32; 3]),
    #[error("boundary triangle {0:?} is listed more than once")]
    DuplicateBoundaryTriangle([u32; 3]),
    #[error("unknown boundary label \"{0}\"")]
    UnknownLabel(String),
    #[error("weights array has {got} entries for {expected} vertices")]
    WeightsLength { got: usize, expected: usize },
    #[error("coords array has {got} entries for {expected} vertices")]
    CoordsLength { got: usize, expected: usize },
}

/// A tetrahedral complex with labeled boundary triangles.
///
/// `weights` carries the optional per-vertex positive weights of the weighted
/// problem; `coords` is display metadata for OBJ export and is never read by
/// any algorithm.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub vertex_count: usize,
    pub tets: Vec<[VertexId; 4]>,
    pub boundary: BTreeMap<[u32; 3], BoundaryLabel>,
    pub weights: Option<Vec<f64>>,
    pub coords: Option<Vec<[f64; 3]>>,
}

/// On-disk form of a mesh document.
#[derive(Serialize, Deserialize)]
struct MeshFile {
    vertices: usize,
    tetrahedra: Vec<[u32; 4]>,
    boundary: Vec<BoundaryRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<[f64; 3]>>,
}

#[derive(Serialize, Deserialize)]
struct BoundaryRecord {
    tri: [u32; 3],
    label: String,
}

impl Triangulation {
    /// Builds a mesh from raw parts without validating; call
    /// [`Triangulation::validate`] afterwards.
    pub fn new(
        vertex_count: usize,
        tets: Vec<[u32; 4]>,
        boundary: Vec<([u32; 3], BoundaryLabel)>,
    ) -> Self {
        Triangulation {
            vertex_count,
            tets: tets
                .into_iter()
                .map(|t| t.map(VertexId))
                .collect(),
            boundary: boundary
                .into_iter()
                .map(|(t, l)| (tri_key(t[0], t[1], t[2]), l))
                .collect(),
            weights: None,
            coords: None,
        }
    }

    pub fn with_weights(mut self, weights: Vec<f64>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn with_coords(mut self, coords: Vec<[f64; 3]>) -> Self {
        self.coords = Some(coords);
        self
    }

    /// Parses the documented mesh format.
    pub fn from_json(text: &str) -> Result<Self, MeshError> {
        let file: MeshFile =
            serde_json::from_str(text).map_err(|e| MeshError::Parse(e.to_string()))?;
        let n = file.vertices;
        for (i, tet) in file.tetrahedra.iter().enumerate() {
            for &v in tet {
                if v as usize >= n {
                    return Err(MeshError::TetVertexOutOfRange {
                        tet: i,
                        vertex: v,
                        vertex_count: n,
                    });
                }
            }
        }
        let mut boundary = BTreeMap::new();
        for rec in &file.boundary {
            let [a, b, c] = rec.tri;
            if a == b || b == c || a == c {
                return Err(MeshError::DegenerateTriangle(rec.tri));
            }
            for &v in &rec.tri {
                if v as usize >= n {
                    return Err(MeshError::TriVertexOutOfRange {
                        tri: rec.tri,
                        vertex: v,
                        vertex_count: n,
                    });
                }
            }
            let label = BoundaryLabel::from_str(&rec.label)?;
            if boundary.insert(tri_key(a, b, c), label).is_some() {
                return Err(MeshError::DuplicateBoundaryTriangle(tri_key(a, b, c)));
            }
        }
        if let Some(w) = &file.weights {
            if w.len() != n {
                return Err(MeshError::WeightsLength {
                    got: w.len(),
                    expected: n,
                });
            }
        }
        if let Some(c) = &file.coords {
            if c.len() != n {
                return Err(MeshError::CoordsLength {
                    got: c.len(),
                    expected: n,
                });
            }
        }
        Ok(Triangulation {
            vertex_count: n,
            tets: file
                .tetrahedra
                .into_iter()
                .map(|t| t.map(VertexId))
                .collect(),
            boundary,
            weights: file.weights,
            coords: file.coords,
        })
    }

    /// Serializes to the documented mesh format. Output is deterministic:
    /// boundary records are sorted by triangle key.
    pub fn to_json(&self) -> String {
        let file = MeshFile {
            vertices: self.vertex_count,
            tetrahedra: self.tets.iter().map(|t| t.map(|v| v.0)).collect(),
            boundary: self
                .boundary
                .iter()
                .map(|(tri, label)| BoundaryRecord {
                    tri: *tri,
                    label: label.as_str().to_string(),
                })
                .collect(),
            weights: self.weights.clone(),
            coords: self.coords.clone(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("mesh serialization cannot fail");
        s.push('\n');
        s
    }

    /// All four triangular faces of tetrahedron `t`, as canonical keys.
    fn tet_faces(tet: &[VertexId; 4]) -> [[u32; 3]; 4] {
        let [a, b, c, d] = tet.map(|v| v.0);
        [
            tri_key(a, b, c),
            tri_key(a, b, d),
            tri_key(a, c, d),
            tri_key(b, c, d),
        ]
    }

    /// Faces keyed by canonical triple, with the list of incident tetrahedra.
    fn face_incidence(&self) -> BTreeMap<[u32; 3], Vec<usize>> {
        let mut faces: BTreeMap<[u32; 3], Vec<usize>> = BTreeMap::new();
        for (i, tet) in self.tets.iter().enumerate() {
            for key in Self::tet_faces(tet) {
                faces.entry(key).or_default().push(i);
            }
        }
        faces
    }

    /// Runs every structural and labeling check and reports each outcome.
    ///
    /// Ball-ness of the complex is approximated by checkable conditions
    /// (sphere boundary, connected complex, face multiplicity, edge links);
    /// the report names exactly the checks performed.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { checks: Vec::new() };

        // Index sanity first: all later checks assume in-range vertices.
        let mut structural_ok = true;
        {
            let mut witness = None;
            if self.vertex_count == 0 {
                witness = Some("mesh has no vertices".to_string());
            }
            if witness.is_none() && self.tets.is_empty() {
                witness = Some("mesh has no tetrahedra".to_string());
            }
            if witness.is_none() {
                'scan: for (i, tet) in self.tets.iter().enumerate() {
                    for &v in tet {
                        if v.idx() >= self.vertex_count {
                            witness = Some(format!(
                                "tetrahedron {i} references out-of-range vertex {v}"
                            ));
                            break 'scan;
                        }
                    }
                    let mut s = tet.map(|v| v.0);
                    s.sort_unstable();
                    if s.windows(2).any(|w| w[0] == w[1]) {
                        witness = Some(format!("tetrahedron {i} repeats a vertex: {s:?}"));
                        break 'scan;
                    }
                }
            }
            if witness.is_none() {
                let mut seen = BTreeSet::new();
                for tet in &self.tets {
                    let mut s = tet.map(|v| v.0);
                    s.sort_unstable();
                    if !seen.insert(s) {
                        witness = Some(format!("tetrahedron {s:?} appears twice"));
                        break;
                    }
                }
            }
            if witness.is_none() {
                for tri in self.boundary.keys() {
                    if tri.iter().any(|&v| v as usize >= self.vertex_count) {
                        witness = Some(format!("boundary triangle {tri:?} is out of range"));
                        break;
                    }
                }
            }
            structural_ok = witness.is_none();
            report.push("tetrahedra-well-formed", structural_ok, witness);
        }
        if !structural_ok {
            // Remaining checks would index out of range; stop here.
            return report;
        }

        let faces = self.face_incidence();

        // Every face in at most 2 tetrahedra.
        {
            let bad = faces.iter().find(|(_, tets)| tets.len() > 2);
            report.push(
                "face-multiplicity",
                bad.is_none(),
                bad.map(|(tri, tets)| format!("face {tri:?} lies in {} tetrahedra", tets.len())),
            );
        }

        // Labeled triangles are exactly the once-shared faces.
        {
            let mut witness = None;
            for (tri, tets) in &faces {
                let labeled = self.boundary.contains_key(tri);
                if tets.len() == 1 && !labeled {
                    witness = Some(format!("boundary face {tri:?} carries no label"));
                    break;
                }
                if tets.len() == 2 && labeled {
                    witness = Some(format!("interior face {tri:?} carries a label"));
                    break;
                }
            }
            if witness.is_none() {
                if let Some(tri) = self.boundary.keys().find(|tri| !faces.contains_key(*tri)) {
                    witness = Some(format!("labeled triangle {tri:?} is not a face of any tetrahedron"));
                }
            }
            report.push("boundary-labeled", witness.is_none(), witness);
        }

        // Tetrahedra form one face-connected piece.
        {
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.tets.len()];
            for tets in faces.values() {
                if let [s, t] = tets[..] {
                    adj[s].push(t);
                    adj[t].push(s);
                }
            }
            let mut seen = vec![false; self.tets.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(t) = stack.pop() {
                for &u in &adj[t] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            let missing = seen.iter().position(|&s| !s);
            report.push(
                "complex-connected",
                missing.is_none(),
                missing.map(|t| format!("tetrahedron {t} is not face-connected to tetrahedron 0")),
            );
        }

        // Around each edge, the incident tetrahedra form a single fan: a
        // closed cycle (interior edge) or a path with two boundary faces.
        {
            let mut edge_tets: BTreeMap<[u32; 2], Vec<usize>> = BTreeMap::new();
            for (i, tet) in self.tets.iter().enumerate() {
                let vs = tet.map(|v| v.0);
                for a in 0..4 {
                    for b in (a + 1)..4 {
                        let mut e = [vs[a], vs[b]];
                        e.sort_unstable();
                        edge_tets.entry(e).or_default().push(i);
                    }
                }
            }
            let mut witness = None;
            'edges: for (e, tets) in &edge_tets {
                // Faces containing this edge, with multiplicity among `tets`.
                let mut face_count: BTreeMap<[u32; 3], usize> = BTreeMap::new();
                for &t in tets {
                    let vs = self.tets[t].map(|v| v.0);
                    for &w in &vs {
                        if w != e[0] && w != e[1] {
                            *face_count.entry(tri_key(e[0], e[1], w)).or_default() += 1;
                        }
                    }
                }
                let rim = face_count.values().filter(|&&c| c == 1).count();
                if rim != 0 && rim != 2 {
                    witness = Some(format!("edge {e:?} has {rim} boundary faces around it"));
                    break;
                }
                // Fan connectivity: walk tets of the edge via shared faces.
                let mut local: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (face, &c) in &face_count {
                    if c == 2 {
                        let pair: Vec<usize> = tets
                            .iter()
                            .copied()
                            .filter(|&t| Self::tet_faces(&self.tets[t]).contains(face))
                            .collect();
                        if let [s, t] = pair[..] {
                            local.entry(s).or_default().push(t);
                            local.entry(t).or_default().push(s);
                        }
                    }
                }
                let mut seen = BTreeSet::new();
                let mut stack = vec![tets[0]];
                seen.insert(tets[0]);
                while let Some(t) = stack.pop() {
                    for &u in local.get(&t).map(|v| v.as_slice()).unwrap_or(&[]) {
                        if seen.insert(u) {
                            stack.push(u);
                        }
                    }
                }
                for &t in tets {
                    if !seen.contains(&t) {
                        witness = Some(format!("edge {e:?} has a disconnected tetrahedron fan"));
                        break 'edges;
                    }
                }
            }
            report.push("edge-links", witness.is_none(), witness);
        }

        // Boundary triangles form a sphere: closed, connected, Euler 2.
        {
            let tris: Vec<[u32; 3]> = self.boundary.keys().copied().collect();
            let mut witness = None;
            let mut edge_count: BTreeMap<[u32; 2], Vec<usize>> = BTreeMap::new();
            for (i, tri) in tris.iter().enumerate() {
                for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                    let mut e = [tri[a], tri[b]];
                    e.sort_unstable();
                    edge_count.entry(e).or_default().push(i);
                }
            }
            for (e, owners) in &edge_count {
                if owners.len() != 2 {
                    witness = Some(format!(
                        "boundary edge {e:?} lies in {} boundary triangles",
                        owners.len()
                    ));
                    break;
                }
            }
            if witness.is_none() && !tris.is_empty() {
                let mut adj: Vec<Vec<usize>> = vec![Vec::new(); tris.len()];
                for owners in edge_count.values() {
                    if let [s, t] = owners[..] {
                        adj[s].push(t);
                        adj[t].push(s);
                    }
                }
                let mut seen = vec![false; tris.len()];
                let mut stack = vec![0usize];
                seen[0] = true;
                while let Some(t) = stack.pop() {
                    for &u in &adj[t] {
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
                if let Some(t) = seen.iter().position(|&s| !s) {
                    witness = Some(format!("boundary triangle {:?} is disconnected", tris[t]));
                }
            }
            if witness.is_none() {
                let verts: BTreeSet<u32> = tris.iter().flatten().copied().collect();
                let euler = verts.len() as i64 - edge_count.len() as i64 + tris.len() as i64;
                if euler != 2 {
                    witness = Some(format!("boundary Euler characteristic is {euler}, not 2"));
                }
            }
            report.push("boundary-sphere", witness.is_none(), witness);
        }

        // Each label nonempty.
        {
            let missing = BoundaryLabel::ALL
                .iter()
                .find(|l| !self.boundary.values().any(|x| x == *l));
            report.push(
                "labels-nonempty",
                missing.is_none(),
                missing.map(|l| format!("label {l} has no triangles")),
            );
        }

        // Each label's triangles form one edge-connected patch.
        {
            let mut witness = None;
            for label in BoundaryLabel::ALL {
                let tris: Vec<[u32; 3]> = self
                    .boundary
                    .iter()
                    .filter(|(_, l)| **l == label)
                    .map(|(t, _)| *t)
                    .collect();
                if tris.is_empty() {
                    continue; // Reported by labels-nonempty.
                }
                let shared_edge = |a: &[u32; 3], b: &[u32; 3]| {
                    a.iter().filter(|v| b.contains(v)).count() == 2
                };
                let mut seen = vec![false; tris.len()];
                let mut stack = vec![0usize];
                seen[0] = true;
                while let Some(i) = stack.pop() {
                    for j in 0..tris.len() {
                        if !seen[j] && shared_edge(&tris[i], &tris[j]) {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
                if let Some(j) = seen.iter().position(|&s| !s) {
                    witness = Some(format!(
                        "label {label}: triangle {:?} shares no edge with the component of {:?}",
                        tris[j], tris[0]
                    ));
                    break;
                }
            }
            report.push("labels-edge-connected", witness.is_none(), witness);
        }

        // Opposite labels share no vertex.
        {
            let mut witness = None;
            for label in [BoundaryLabel::B1, BoundaryLabel::B2, BoundaryLabel::B3] {
                let verts = |l: BoundaryLabel| -> BTreeSet<u32> {
                    self.boundary
                        .iter()
                        .filter(|(_, x)| **x == l)
                        .flat_map(|(t, _)| t.iter().copied())
                        .collect()
                };
                let a = verts(label);
                let b = verts(label.opposite());
                if let Some(v) = a.intersection(&b).next() {
                    let tri_of = |l: BoundaryLabel| {
                        self.boundary
                            .iter()
                            .find(|(t, x)| **x == l && t.contains(v))
                            .map(|(t, _)| *t)
                            .unwrap()
                    };
                    witness = Some(format!(
                        "vertex {v} lies in both {label} (triangle {:?}) and {} (triangle {:?})",
                        tri_of(label),
                        label.opposite(),
                        tri_of(label.opposite()),
                    ));
                    break;
                }
            }
            report.push("opposite-labels-disjoint", witness.is_none(), witness);
        }

        // Optional arrays sized and sane.
        if let Some(w) = &self.weights {
            let mut witness = None;
            if w.len() != self.vertex_count {
                witness = Some(format!(
                    "weights has {} entries for {} vertices",
                    w.len(),
                    self.vertex_count
                ));
            } else if let Some((i, bad)) =
                w.iter().enumerate().find(|(_, x)| !(x.is_finite() && **x > 0.0))
            {
                witness = Some(format!("weight of vertex {i} is {bad}, not a positive real"));
            }
            report.push("weights-positive", witness.is_none(), witness);
        }
        if let Some(c) = &self.coords {
            let ok = c.len() == self.vertex_count;
            report.push(
                "coords-length",
                ok,
                (!ok).then(|| {
                    format!("coords has {} entries for {} vertices", c.len(), self.vertex_count)
                }),
            );
        }

        report
    }

    /// Builds the 1-skeleton graph with per-label boundary vertex sets.
    ///
    /// Edges are the deduplicated tetrahedron edges. A vertex belongs to a
    /// patch's set when it is incident to a triangle carrying that label.
    pub fn skeleton(&self) -> Graph {
        let mut adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); self.vertex_count];
        for tet in &self.tets {
            for a in 0..4 {
                for b in (a + 1)..4 {
                    adj[tet[a].idx()].insert(tet[b]);
                    adj[tet[b].idx()].insert(tet[a]);
                }
            }
        }
        let mut boundary_sets: [BTreeSet<VertexId>; 6] = Default::default();
        for (tri, label) in &self.boundary {
            for &v in tri {
                boundary_sets[label.index()].insert(VertexId(v));
            }
        }
        Graph {
            n: self.vertex_count,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
            boundary_sets,
        }
    }
}

/// Outcome of a single validation check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Human-readable evidence for a failure.
    pub witness: Option<String>,
}

/// Results of [`Triangulation::validate`], one entry per check.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name, pass, witness });
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match (&check.pass, &check.witness) {
                (true, _) => writeln!(f, "PASS {}", check.name)?,
                (false, Some(w)) => writeln!(f, "FAIL {} ({w})", check.name)?,
                (false, None) => writeln!(f, "FAIL {}", check.name)?,
            }
        }
        Ok(())
    }
}

/// Immutable 1-skeleton of a triangulation.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    boundary_sets: [BTreeSet<VertexId>; 6],
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.idx()]
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.idx()].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Vertices incident to a triangle labeled `label`.
    pub fn boundary_set(&self, label: BoundaryLabel) -> &BTreeSet<VertexId> {
        &self.boundary_sets[label.index()]
    }

    /// True when `v` lies on some labeled boundary triangle.
    pub fn on_boundary(&self, v: VertexId) -> bool {
        self.boundary_sets.iter().any(|s| s.contains(&v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u.idx()] {
                    seen[u.idx()] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cube6_counts_and_validity() {
        let t = fixtures::cube6();
        assert_eq!(t.vertex_count, 8);
        assert_eq!(t.tets.len(), 6);
        assert_eq!(t.boundary.len(), 12);
        let report = t.validate();
        assert!(report.is_valid(), "unexpected failures: {report}");
    }

    #[test]
    fn cube6_skeleton_edges_and_patches() {
        let g = fixtures::cube6().skeleton();
        // 12 cube edges, 6 face diagonals, 1 main diagonal.
        assert_eq!(g.edge_count(), 19);
        assert!(g.is_connected());
        let b1: Vec<u32> = g
            .boundary_set(BoundaryLabel::B1)
            .iter()
            .map(|v| v.0)
            .collect();
        assert_eq!(b1, vec![0, 1, 2, 3]);
        for label in [BoundaryLabel::B1, BoundaryLabel::B2, BoundaryLabel::B3] {
            assert_eq!(g.boundary_set(label).len(), 4);
            assert!(g
                .boundary_set(label)
                .is_disjoint(g.boundary_set(label.opposite())));
        }
    }

    #[test]
    fn single_tet_skeleton_is_complete() {
        let t = Triangulation::new(
            4,
            vec![[0, 1, 2, 3]],
            vec![
                ([0, 1, 2], BoundaryLabel::B1),
                ([0, 1, 3], BoundaryLabel::B2),
                ([0, 2, 3], BoundaryLabel::B3),
                ([1, 2, 3], BoundaryLabel::B1Bar),
            ],
        );
        let g = t.skeleton();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn relabeled_bottom_triangle_fails_disjointness() {
        let mut t = fixtures::cube6();
        // Move one bottom triangle to the opposite patch.
        let key = tri_key(0, 1, 2);
        assert_eq!(t.boundary.get(&key), Some(&BoundaryLabel::B1));
        t.boundary.insert(key, BoundaryLabel::B1Bar);
        let report = t.validate();
        assert!(!report.is_valid());
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"opposite-labels-disjoint"), "failed: {failed:?}");
        let check = report
            .checks
            .iter()
            .find(|c| c.name == "opposite-labels-disjoint")
            .unwrap();
        // Witness names the offending triangle.
        assert!(check.witness.as_deref().unwrap().contains("[0, 1, 2]"));
    }

    #[test]
    fn two_glued_tets_cannot_separate_opposites() {
        // Five vertices, six boundary triangles, one label each: some
        // opposite pair must share a vertex by pigeonhole.
        let t = Triangulation::new(
            5,
            vec![[0, 1, 2, 3], [1, 2, 3, 4]],
            vec![
                ([0, 1, 2], BoundaryLabel::B1),
                ([0, 1, 3], BoundaryLabel::B2),
                ([0, 2, 3], BoundaryLabel::B3),
                ([1, 2, 4], BoundaryLabel::B1Bar),
                ([1, 3, 4], BoundaryLabel::B2Bar),
                ([2, 3, 4], BoundaryLabel::B3Bar),
            ],
        );
        let report = t.validate();
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"opposite-labels-disjoint"), "failed: {failed:?}");
    }

    #[test]
    fn json_round_trip_is_identity() {
        let t = fixtures::cube6();
        let text = t.to_json();
        let back = Triangulation::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.vertex_count, t.vertex_count);
        assert_eq!(back.tets, t.tets);
        assert_eq!(back.boundary, t.boundary);
    }

    #[test]
    fn load_rejects_out_of_range_vertex() {
        let mut t = fixtures::cube6();
        t.tets[0] = [VertexId(0), VertexId(1), VertexId(2), VertexId(99)];
        let text = t.to_json();
        match Triangulation::from_json(&text) {
            Err(MeshError::TetVertexOutOfRange { vertex: 99, .. }) => {}
            other => panic!("expected out-of-range error, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_unknown_label() {
        let text = fixtures::cube6().to_json().replace("\"B1\"", "\"B4\"");
        match Triangulation::from_json(&text) {
            Err(MeshError::UnknownLabel(l)) => assert_eq!(l, "B4"),
            other => panic!("expected label error, got {other:?}"),
        }
    }

    #[test]
    fn validate_reports_unlabeled_boundary_face() {
        let mut t = fixtures::cube6();
        t.boundary.remove(&tri_key(0, 1, 2));
        let report = t.validate();
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"boundary-labeled"), "failed: {failed:?}");
    }
}
