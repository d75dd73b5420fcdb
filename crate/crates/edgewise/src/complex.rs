//! Simplicial complexes given by their inclusion-maximal faces.
//!
//! Complexes store facets only; faces of a fixed dimension are enumerated
//! on demand. Order complexes at desk scale have few facets but
//! exponentially many faces, so this is the representation everything else
//! works against. The empty complex is `{∅}`; the void complex (no faces at
//! all) never arises from an order complex and is rejected on input.

use std::collections::BTreeSet;
use std::fmt;

use crate::poset::{bits, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    VoidComplex,
    TooManyVertices(usize),
    FaceNotInComplex(Vec<String>),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::VoidComplex => write!(f, "the void complex is not accepted"),
            ComplexError::TooManyVertices(n) => {
                write!(f, "complex has {n} vertices, maximum is 64")
            }
            ComplexError::FaceNotInComplex(face) => {
                write!(f, "face {face:?} is not in the complex")
            }
        }
    }
}

impl std::error::Error for ComplexError {}

/// A finite simplicial complex on at most 64 named vertices.
#[derive(Clone)]
pub struct SimplicialComplex {
    /// Vertex names; every vertex occurs in some facet.
    vertices: Vec<String>,
    /// Inclusion-maximal faces as bitmasks over `vertices`, sorted.
    /// The empty complex is represented as the single facet 0.
    facets: Vec<u64>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facet_labels())
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facet_label_sets() == other.facet_label_sets()
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Build from faces given as label sets. Non-maximal faces are pruned;
    /// at least one face must be supplied (possibly the empty face).
    pub fn from_faces<S: AsRef<str>>(faces: &[Vec<S>]) -> Result<Self, ComplexError> {
        if faces.is_empty() {
            return Err(ComplexError::VoidComplex);
        }
        let mut names: BTreeSet<String> = BTreeSet::new();
        for face in faces {
            for v in face {
                names.insert(v.as_ref().to_owned());
            }
        }
        let vertices: Vec<String> = names.into_iter().collect();
        if vertices.len() > 64 {
            return Err(ComplexError::TooManyVertices(vertices.len()));
        }
        let pos = |name: &str| vertices.iter().position(|v| v == name).unwrap();
        let masks: Vec<u64> = faces
            .iter()
            .map(|face| face.iter().fold(0u64, |m, v| m | (1 << pos(v.as_ref()))))
            .collect();
        Ok(Self::from_masks(vertices, masks))
    }

    /// Build from facet masks over a vertex list. Prunes non-maximal faces
    /// and drops vertices that no longer occur, remapping the masks.
    pub(crate) fn from_masks(vertices: Vec<String>, faces: Vec<u64>) -> Self {
        assert!(!faces.is_empty(), "internal construction of a void complex");
        let mut facets: Vec<u64> = Vec::new();
        let mut sorted = faces;
        // Scanning largest-first makes the maximality filter a single pass.
        sorted.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for face in sorted {
            if !facets.iter().any(|&f| f & face == face) {
                facets.push(face);
            }
        }
        let used: u64 = facets.iter().fold(0, |m, &f| m | f);
        let kept: Vec<usize> = bits(used).collect();
        let mut remap = vec![0usize; vertices.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let new_vertices: Vec<String> = kept.iter().map(|&i| vertices[i].clone()).collect();
        let mut new_facets: Vec<u64> = facets
            .iter()
            .map(|&f| bits(f).fold(0u64, |m, v| m | (1 << remap[v])))
            .collect();
        new_facets.sort_unstable();
        SimplicialComplex {
            vertices: new_vertices,
            facets: new_facets,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|&f| bits(f).map(|v| self.vertices[v].as_str()).collect())
            .collect()
    }

    fn facet_label_sets(&self) -> BTreeSet<BTreeSet<&str>> {
        self.facets
            .iter()
            .map(|&f| bits(f).map(|v| self.vertices[v].as_str()).collect())
            .collect()
    }

    /// All faces as label sets, sorted by (size, vertex order).
    pub fn face_label_sets(&self) -> Vec<Vec<String>> {
        self.all_faces()
            .into_iter()
            .map(|m| bits(m).map(|v| self.vertices[v].clone()).collect())
            .collect()
    }

    pub fn dim(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
            .unwrap()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .all(|f| f.count_ones() == self.facets[0].count_ones())
    }

    /// A vertex contained in every facet, if one exists.
    pub fn cone_apex(&self) -> Option<usize> {
        let common = self.facets.iter().fold(u64::MAX, |m, &f| m & f);
        bits(common).next()
    }

    pub fn cone_apex_label(&self) -> Option<&str> {
        self.cone_apex().map(|v| self.vertices[v].as_str())
    }

    /// Resolve a face given by labels to a mask, if all labels are vertices.
    pub fn face_mask<S: AsRef<str>>(&self, face: &[S]) -> Option<u64> {
        let mut m = 0u64;
        for v in face {
            let i = self.vertices.iter().position(|w| w == v.as_ref())?;
            m |= 1 << i;
        }
        Some(m)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    pub fn contains_face<S: AsRef<str>>(&self, face: &[S]) -> bool {
        self.face_mask(face).is_some_and(|m| self.contains_mask(m))
    }

    fn require_face<S: AsRef<str>>(&self, face: &[S]) -> Result<u64, ComplexError> {
        let not_in = || {
            ComplexError::FaceNotInComplex(
                face.iter().map(|v| v.as_ref().to_owned()).collect(),
            )
        };
        let mask = self.face_mask(face).ok_or_else(not_in)?;
        if !self.contains_mask(mask) {
            return Err(not_in());
        }
        Ok(mask)
    }

    /// The link of a face: all G ∖ F with F ⊆ G in the complex.
    pub fn link<S: AsRef<str>>(&self, face: &[S]) -> Result<SimplicialComplex, ComplexError> {
        let mask = self.require_face(face)?;
        Ok(self.link_of_mask(mask))
    }

    pub(crate) fn link_of_mask(&self, mask: u64) -> SimplicialComplex {
        let faces: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & mask == mask)
            .map(|&f| f & !mask)
            .collect();
        SimplicialComplex::from_masks(self.vertices.clone(), faces)
    }

    /// The open star of a face, as an explicit list of faces (label sets);
    /// the open star is not a subcomplex.
    pub fn open_star<S: AsRef<str>>(&self, face: &[S]) -> Result<Vec<Vec<String>>, ComplexError> {
        let mask = self.require_face(face)?;
        let mut star: BTreeSet<u64> = BTreeSet::new();
        for &f in &self.facets {
            if f & mask == mask {
                for sub in submasks(f & !mask) {
                    star.insert(sub | mask);
                }
            }
        }
        Ok(star
            .into_iter()
            .map(|m| bits(m).map(|v| self.vertices[v].clone()).collect())
            .collect())
    }

    /// The contrastar of a face: all faces not containing it.
    pub fn contrastar<S: AsRef<str>>(&self, face: &[S]) -> Result<SimplicialComplex, ComplexError> {
        let mask = self
            .face_mask(face)
            .ok_or_else(|| {
                ComplexError::FaceNotInComplex(
                    face.iter().map(|v| v.as_ref().to_owned()).collect(),
                )
            })?;
        Ok(self.contrastar_of_mask(mask))
    }

    pub(crate) fn contrastar_of_mask(&self, mask: u64) -> SimplicialComplex {
        if mask == 0 {
            // Every face contains the empty face; collapse the void result
            // to {∅}.
            return SimplicialComplex::from_masks(self.vertices.clone(), vec![0]);
        }
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f & mask != mask {
                faces.push(f);
            } else {
                for v in bits(mask) {
                    faces.push(f & !(1 << v));
                }
            }
        }
        if faces.is_empty() {
            faces.push(0);
        }
        SimplicialComplex::from_masks(self.vertices.clone(), faces)
    }

    /// The induced subcomplex of faces disjoint from `drop`; unknown names
    /// are ignored.
    pub fn delete_vertices<S: AsRef<str>>(&self, drop: &[S]) -> SimplicialComplex {
        let mut mask = 0u64;
        for name in drop {
            if let Some(i) = self.vertices.iter().position(|v| v == name.as_ref()) {
                mask |= 1 << i;
            }
        }
        let faces: Vec<u64> = self.facets.iter().map(|&f| f & !mask).collect();
        SimplicialComplex::from_masks(self.vertices.clone(), faces)
    }

    /// All faces, including the empty face, sorted by (size, mask).
    pub(crate) fn all_faces(&self) -> Vec<u64> {
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for &f in &self.facets {
            for sub in submasks(f) {
                set.insert(sub);
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_unstable_by_key(|m| (m.count_ones(), *m));
        faces
    }

    /// The faces of one dimension, sorted by mask.
    pub(crate) fn faces_of_dim(&self, d: i32) -> Vec<u64> {
        let want = (d + 1) as u32;
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for &f in &self.facets {
            if f.count_ones() >= want {
                collect_subsets_of_size(f, want, &mut set);
            }
        }
        set.into_iter().collect()
    }

    pub fn face_count(&self) -> usize {
        self.all_faces().len()
    }

    /// Numbers of faces per dimension, from -1 (the empty face) up.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2) as usize];
        for face in self.all_faces() {
            counts[face.count_ones() as usize] += 1;
        }
        counts
    }
}

/// All submasks of `mask`, including 0 and `mask` itself.
fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1usize << mask.count_ones().min(30));
    let mut sub = mask;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out
}

fn collect_subsets_of_size(mask: u64, size: u32, out: &mut BTreeSet<u64>) {
    fn rec(remaining: &[usize], size: u32, acc: u64, out: &mut BTreeSet<u64>) {
        if size == 0 {
            out.insert(acc);
            return;
        }
        if (remaining.len() as u32) < size {
            return;
        }
        rec(&remaining[1..], size - 1, acc | (1 << remaining[0]), out);
        rec(&remaining[1..], size, acc, out);
    }
    let elems: Vec<usize> = bits(mask).collect();
    rec(&elems, size, 0, out);
}

/// The order complex of a poset: the complex whose faces are the chains,
/// whose facets are the inclusion-maximal chains.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let n = p.len();
    if n == 0 {
        return SimplicialComplex::from_masks(Vec::new(), vec![0]);
    }
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in p.covers() {
        succs[a].push(b);
    }
    let mut facets = Vec::new();
    let mut stack: Vec<(usize, u64)> = bits(p.minimal_mask()).map(|i| (i, 1 << i)).collect();
    while let Some((v, chain)) = stack.pop() {
        if succs[v].is_empty() {
            facets.push(chain);
        } else {
            for &w in &succs[v] {
                stack.push((w, chain | (1 << w)));
            }
        }
    }
    SimplicialComplex::from_masks(p.labels().to_vec(), facets)
}
