//! Recognition of cluster-tilted quivers of types A and D and their shape
//! decomposition into a central core with attached triangle quivers.

use crate::error::{Error, RejectReason};
use crate::presentation::Quiver;
use std::collections::{BTreeMap, BTreeSet};

/// Shape of a recognized quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape {
    TypeA,
    D1,
    D2,
    D3,
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::TypeA => write!(f, "TypeA"),
            Shape::D1 => write!(f, "D1"),
            Shape::D2 => write!(f, "D2"),
            Shape::D3 => write!(f, "D3"),
        }
    }
}

/// An attached triangle piece: its star vertex and all its vertices
/// (star included), as vertex ids of the parent quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePart {
    pub star: usize,
    pub members: BTreeSet<usize>,
}

impl TrianglePart {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// A type-A quiver with one connecting vertex marked.
#[derive(Debug, Clone)]
pub struct ATriangle {
    pub quiver: Quiver,
    pub marked: usize,
}

/// One successful D-shape decomposition.
///
/// `cycle` lists the central (alpha) vertices. For D2 and D3 the spikes are
/// aligned with the central arrows: `spikes[i]` is the triangle attached to
/// the arrow `cycle[i] => cycle[i+1]` (its star w carries the return arrows
/// cycle[i+1] -> w -> cycle[i]). For D1 `cycle` is the phi-pair and
/// `spikes[0]` is the triangle whose star points into both central vertices,
/// `spikes[1]` the one receiving arrows from both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCandidate {
    pub shape: Shape,
    pub cycle: Vec<usize>,
    pub spikes: Vec<Option<TrianglePart>>,
}

/// Classification result; all successful candidates are retained.
#[derive(Debug, Clone)]
pub struct ShapeDecomposition {
    pub shape: Shape,
    /// Connecting vertices (TypeA only).
    pub connecting: Vec<usize>,
    /// D-shape candidates (empty for TypeA).
    pub candidates: Vec<DCandidate>,
}

fn basic_violation(q: &Quiver) -> Option<RejectReason> {
    if q.n() == 0 {
        return Some(RejectReason::Empty);
    }
    for (&(i, j), &m) in q.arrows() {
        if i == j {
            return Some(RejectReason::Loop { vertex: i });
        }
        if m > 1 {
            return Some(RejectReason::MultipleArrows { a: i, b: j });
        }
        if q.has(j, i) && i < j {
            return Some(RejectReason::TwoCycle { a: i, b: j });
        }
    }
    if !q.is_connected() {
        return Some(RejectReason::Disconnected);
    }
    None
}

fn type_a_violation(q: &Quiver) -> Option<RejectReason> {
    let cycles = q.chordless_cycles();
    let mut tri: Vec<BTreeSet<usize>> = Vec::new();
    for c in &cycles {
        let oriented = q.oriented_cycle_order(c).is_some();
        if c.len() != 3 || !oriented {
            return Some(RejectReason::BadCycle { len: c.len(), oriented });
        }
        tri.push(c.clone());
    }
    for v in 0..q.n() {
        let nb = q.neighbours(v);
        if nb.len() > 4 {
            return Some(RejectReason::TooManyNeighbours { vertex: v, count: nb.len() });
        }
        let mycyc: Vec<&BTreeSet<usize>> = tri.iter().filter(|c| c.contains(&v)).collect();
        let adj: Vec<(usize, usize)> = q
            .arrows()
            .keys()
            .copied()
            .filter(|&(i, j)| i == v || j == v)
            .collect();
        let on_cycle = adj
            .iter()
            .filter(|&&(i, j)| tri.iter().any(|c| c.contains(&i) && c.contains(&j)))
            .count();
        if nb.len() == 4 && (mycyc.len() != 2 || on_cycle != 4) {
            return Some(RejectReason::FourNeighbourViolation { vertex: v });
        }
        if nb.len() == 3 && (mycyc.len() != 1 || on_cycle != 2) {
            return Some(RejectReason::ThreeNeighbourViolation { vertex: v });
        }
    }
    None
}

/// The four conditions on quivers of type-A cluster-tilted algebras.
/// Assumes a connected quiver without loops, 2-cycles or multiple arrows.
pub fn is_type_a_quiver(q: &Quiver) -> bool {
    q.n() > 0 && basic_violation(q).is_none() && type_a_violation(q).is_none()
}

/// Vertices with at most two adjacent arrows, lying on a 3-cycle whenever
/// they have two.
pub fn connecting_vertices(q: &Quiver) -> Vec<usize> {
    let cycles = q.chordless_cycles();
    (0..q.n())
        .filter(|&v| {
            let adj = q.adjacent_arrows(v);
            match adj {
                0 | 1 => true,
                2 => cycles.iter().any(|c| c.contains(&v)),
                _ => false,
            }
        })
        .collect()
}

/// Components of the quiver after deleting the given arrows.
fn components_without(
    q: &Quiver,
    removed: &BTreeSet<(usize, usize)>,
) -> (BTreeMap<usize, usize>, Vec<BTreeSet<usize>>) {
    let n = q.n();
    let mut adj = vec![BTreeSet::new(); n];
    for &(i, j) in q.arrows().keys() {
        if !removed.contains(&(i, j)) {
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    let mut comp_of = BTreeMap::new();
    let mut comps = Vec::new();
    for v in 0..n {
        if comp_of.contains_key(&v) {
            continue;
        }
        let id = comps.len();
        let mut cc = BTreeSet::new();
        let mut stack = vec![v];
        cc.insert(v);
        comp_of.insert(v, id);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if cc.insert(w) {
                    comp_of.insert(w, id);
                    stack.push(w);
                }
            }
        }
        comps.push(cc);
    }
    (comp_of, comps)
}

/// Induced subquiver on a vertex set, restricted to non-removed arrows;
/// returns the subquiver and the sorted vertex list (sub index -> parent).
fn subquiver_without(
    q: &Quiver,
    verts: &BTreeSet<usize>,
    removed: &BTreeSet<(usize, usize)>,
) -> (Quiver, Vec<usize>) {
    let vl: Vec<usize> = verts.iter().copied().collect();
    let remap: BTreeMap<usize, usize> = vl.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let arrows: BTreeMap<(usize, usize), u32> = q
        .arrows()
        .iter()
        .filter(|(&(i, j), _)| {
            verts.contains(&i) && verts.contains(&j) && !removed.contains(&(i, j))
        })
        .map(|(&(i, j), &m)| ((remap[&i], remap[&j]), m))
        .collect();
    let labels = vl.iter().map(|&v| q.label(v).to_string()).collect();
    (Quiver::new(labels, arrows).expect("induced subquiver is well formed"), vl)
}

/// Validate the peeling of attached triangles at the given stars after
/// removing the core arrows. Returns one part per star slot.
fn try_peel(
    q: &Quiver,
    plain: &[usize],
    stars: &[Option<usize>],
    core_arrows: &BTreeSet<(usize, usize)>,
) -> Option<Vec<Option<TrianglePart>>> {
    let (comp_of, comps) = components_without(q, core_arrows);
    let core: BTreeSet<usize> = plain
        .iter()
        .copied()
        .chain(stars.iter().flatten().copied())
        .collect();
    // Central vertices other than stars must be isolated in the remainder.
    for &p in plain {
        if q.arrows()
            .keys()
            .any(|&(i, j)| (i == p || j == p) && !core_arrows.contains(&(i, j)))
        {
            return None;
        }
    }
    let mut parts = Vec::with_capacity(stars.len());
    let mut covered: BTreeSet<usize> = plain.iter().copied().collect();
    for &s in stars {
        let Some(s) = s else {
            parts.push(None);
            continue;
        };
        let cc = &comps[comp_of[&s]];
        if cc.iter().any(|v| core.contains(v) && *v != s) {
            return None;
        }
        if cc.len() > 1 {
            let (sub, vl) = subquiver_without(q, cc, core_arrows);
            if !is_type_a_quiver(&sub) {
                return None;
            }
            let si = vl.iter().position(|&v| v == s).unwrap();
            if !connecting_vertices(&sub).contains(&si) {
                return None;
            }
        }
        covered.extend(cc.iter().copied());
        parts.push(Some(TrianglePart { star: s, members: cc.clone() }));
    }
    if covered.len() != q.n() {
        return None;
    }
    Some(parts)
}

fn d1_candidates(q: &Quiver, out: &mut Vec<DCandidate>) {
    let n = q.n();
    for b in 0..n {
        for c in (b + 1)..n {
            // Both stars present: s1 -> b, s1 -> c, b -> s2, c -> s2, s2 -> s1.
            for s1 in 0..n {
                for s2 in 0..n {
                    if [s1, s2, b, c].iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    let need = [(s1, b), (s1, c), (b, s2), (c, s2), (s2, s1)];
                    if need.iter().all(|&(i, j)| q.has(i, j)) {
                        let core: BTreeSet<_> = need.into_iter().collect();
                        if let Some(parts) =
                            try_peel(q, &[b, c], &[Some(s1), Some(s2)], &core)
                        {
                            out.push(DCandidate {
                                shape: Shape::D1,
                                cycle: vec![b, c],
                                spikes: parts,
                            });
                        }
                    }
                }
            }
            // Receiving star absent.
            for s1 in 0..n {
                if s1 == b || s1 == c {
                    continue;
                }
                let need = [(s1, b), (s1, c)];
                if need.iter().all(|&(i, j)| q.has(i, j)) {
                    let core: BTreeSet<_> = need.into_iter().collect();
                    if let Some(parts) = try_peel(q, &[b, c], &[Some(s1), None], &core) {
                        out.push(DCandidate {
                            shape: Shape::D1,
                            cycle: vec![b, c],
                            spikes: parts,
                        });
                    }
                }
            }
            // Pointing star absent.
            for s2 in 0..n {
                if s2 == b || s2 == c {
                    continue;
                }
                let need = [(b, s2), (c, s2)];
                if need.iter().all(|&(i, j)| q.has(i, j)) {
                    let core: BTreeSet<_> = need.into_iter().collect();
                    if let Some(parts) = try_peel(q, &[b, c], &[None, Some(s2)], &core) {
                        out.push(DCandidate {
                            shape: Shape::D1,
                            cycle: vec![b, c],
                            spikes: parts,
                        });
                    }
                }
            }
        }
    }
}

fn d2_candidates(q: &Quiver, out: &mut Vec<DCandidate>) {
    let n = q.n();
    for p1 in 0..n {
        for p2 in (p1 + 1)..n {
            // Full core: s1 -> p1 -> s2 -> p2 -> s1 (oriented 4-cycle).
            for s1 in 0..n {
                for s2 in 0..n {
                    if [p1, p2, s1, s2].iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    let need = [(s1, p1), (p1, s2), (s2, p2), (p2, s1)];
                    if need.iter().all(|&(i, j)| q.has(i, j)) {
                        let core: BTreeSet<_> = need.into_iter().collect();
                        if let Some(parts) =
                            try_peel(q, &[p1, p2], &[Some(s1), Some(s2)], &core)
                        {
                            // The spike on the arrow p1 => p2 is s1 (return
                            // arrows p2 -> s1 -> p1), the one on p2 => p1 is s2.
                            out.push(DCandidate {
                                shape: Shape::D2,
                                cycle: vec![p1, p2],
                                spikes: parts,
                            });
                        }
                    }
                }
            }
        }
    }
    // Degenerate core: a1 -> s -> a2 with one star absent.
    for a1 in 0..n {
        for a2 in 0..n {
            if a1 == a2 {
                continue;
            }
            for s in 0..n {
                if s == a1 || s == a2 {
                    continue;
                }
                let need = [(a1, s), (s, a2)];
                if need.iter().all(|&(i, j)| q.has(i, j)) {
                    let core: BTreeSet<_> = need.into_iter().collect();
                    // The star s spikes the arrow a2 => a1.
                    if let Some(parts) = try_peel(q, &[a1, a2], &[None, Some(s)], &core) {
                        out.push(DCandidate {
                            shape: Shape::D2,
                            cycle: vec![a1, a2],
                            spikes: parts,
                        });
                    }
                }
            }
        }
    }
}

fn d3_candidates(q: &Quiver, out: &mut Vec<DCandidate>) {
    let n = q.n();
    for c_len in 3..=n {
        for cyc in q.oriented_cycles(c_len) {
            let cyc_arrows: Vec<(usize, usize)> = (0..c_len)
                .map(|i| (cyc[i], cyc[(i + 1) % c_len]))
                .collect();
            let mut stars: Vec<Option<usize>> = Vec::with_capacity(c_len);
            let mut core: BTreeSet<(usize, usize)> = cyc_arrows.iter().copied().collect();
            let mut ok = true;
            for &(u, v) in &cyc_arrows {
                let cand: Vec<usize> = (0..n)
                    .filter(|w| !cyc.contains(w) && q.has(v, *w) && q.has(*w, u))
                    .collect();
                match cand.len() {
                    0 => stars.push(None),
                    1 => {
                        let w = cand[0];
                        stars.push(Some(w));
                        core.insert((v, w));
                        core.insert((w, u));
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let present: Vec<usize> = stars.iter().flatten().copied().collect();
            let distinct: BTreeSet<usize> = present.iter().copied().collect();
            if distinct.len() != present.len() {
                continue;
            }
            if let Some(parts) = try_peel(q, &cyc, &stars, &core) {
                out.push(DCandidate { shape: Shape::D3, cycle: cyc.clone(), spikes: parts });
            }
        }
    }
}

/// Classify a quiver per the type-A conditions and the three D shapes.
/// TypeA takes precedence; all successful D candidates are retained.
pub fn classify(q: &Quiver) -> Result<ShapeDecomposition, Error> {
    if let Some(reason) = basic_violation(q) {
        return Err(Error::NotClusterTilted(reason));
    }
    if type_a_violation(q).is_none() {
        return Ok(ShapeDecomposition {
            shape: Shape::TypeA,
            connecting: connecting_vertices(q),
            candidates: Vec::new(),
        });
    }
    let mut candidates = Vec::new();
    d1_candidates(q, &mut candidates);
    d2_candidates(q, &mut candidates);
    d3_candidates(q, &mut candidates);
    if let Some(first) = candidates.first() {
        return Ok(ShapeDecomposition {
            shape: first.shape,
            connecting: Vec::new(),
            candidates,
        });
    }
    Err(Error::NotClusterTilted(
        type_a_violation(q).unwrap_or(RejectReason::NoShapeMatch),
    ))
}

/// Extract the attached triangle as a standalone marked quiver, together
/// with the sub-to-parent vertex list.
pub fn atriangle_of(q: &Quiver, part: &TrianglePart, core_arrows: &BTreeSet<(usize, usize)>) -> (ATriangle, Vec<usize>) {
    let (sub, vl) = subquiver_without(q, &part.members, core_arrows);
    let marked = vl.iter().position(|&v| v == part.star).unwrap();
    (ATriangle { quiver: sub, marked }, vl)
}

/// The core arrows of a candidate (central plus star return arrows).
pub fn core_arrows(cand: &DCandidate) -> BTreeSet<(usize, usize)> {
    let mut core = BTreeSet::new();
    let c = cand.cycle.len();
    match cand.shape {
        Shape::D1 => {
            let (b, cc) = (cand.cycle[0], cand.cycle[1]);
            if let Some(p) = &cand.spikes[0] {
                core.insert((p.star, b));
                core.insert((p.star, cc));
            }
            if let Some(p) = &cand.spikes[1] {
                core.insert((b, p.star));
                core.insert((cc, p.star));
            }
            if let (Some(p1), Some(p2)) = (&cand.spikes[0], &cand.spikes[1]) {
                core.insert((p2.star, p1.star));
            }
        }
        Shape::D2 | Shape::D3 => {
            for i in 0..c {
                let (u, v) = (cand.cycle[i], cand.cycle[(i + 1) % c]);
                if let Some(p) = &cand.spikes[i] {
                    core.insert((v, p.star));
                    core.insert((p.star, u));
                } else {
                    core.insert((u, v));
                }
            }
        }
        Shape::TypeA => {}
    }
    core
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::from_arrows(n, arrows).unwrap()
    }

    fn reject(arrows: &[(usize, usize)], n: usize) -> RejectReason {
        match classify(&q(n, arrows)) {
            Err(Error::NotClusterTilted(r)) => r,
            other => panic!("expected a rejection, got {other:?}"),
        }
    }

    #[test]
    fn five_vertex_type_a_example() {
        let dec =
            classify(&q(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)])).unwrap();
        assert_eq!(dec.shape, Shape::TypeA);
        assert_eq!(dec.connecting, vec![0, 3, 4]);
        assert!(dec.candidates.is_empty());
    }

    #[test]
    fn oriented_four_cycle_candidates() {
        let dec = classify(&q(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).unwrap();
        assert_ne!(dec.shape, Shape::TypeA);
        let shapes: Vec<Shape> = dec.candidates.iter().map(|c| c.shape).collect();
        assert!(shapes.contains(&Shape::D2));
        assert!(shapes.contains(&Shape::D3));
    }

    #[test]
    fn shape_one_core() {
        let dec = classify(&q(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)])).unwrap();
        assert!(dec.candidates.iter().any(|c| c.shape == Shape::D1));
    }

    #[test]
    fn curated_rejections() {
        assert_eq!(reject(&[], 0), RejectReason::Empty);
        assert_eq!(reject(&[(0, 0)], 1), RejectReason::Loop { vertex: 0 });
        assert_eq!(reject(&[(0, 1), (1, 0)], 2), RejectReason::TwoCycle { a: 0, b: 1 });
        assert_eq!(
            reject(&[(0, 1), (0, 1)], 2),
            RejectReason::MultipleArrows { a: 0, b: 1 }
        );
        assert_eq!(reject(&[(0, 1), (2, 3)], 4), RejectReason::Disconnected);
        assert_eq!(
            reject(&[(0, 1), (2, 1), (2, 0)], 3),
            RejectReason::BadCycle { len: 3, oriented: false }
        );
        assert_eq!(
            reject(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], 6),
            RejectReason::TooManyNeighbours { vertex: 0, count: 5 }
        );
    }

    #[test]
    fn connecting_vertices_of_an_oriented_path() {
        let dec = classify(&q(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(dec.shape, Shape::TypeA);
        assert_eq!(dec.connecting, vec![0, 2]);
    }
}
