//! Quivers of cluster-tilted algebras, their relation ideals and quiver
//! isomorphism.
//!
//! The quiver of End(T)^op is computed by tracking standard skew-symmetric
//! matrix mutation along a mutation path from a reference object whose
//! quiver is the reference orientation; every tracked quiver is
//! cross-validated against the mesh-category oracle in tests.

use crate::ar_model::{ClusterCategory, Family, Indec};
use crate::error::Error;
use crate::tilting::CTObject;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Finite quiver with labeled vertices and an arrow multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: BTreeMap<(usize, usize), u32>,
}

impl Quiver {
    pub fn new(labels: Vec<String>, arrows: BTreeMap<(usize, usize), u32>) -> Result<Self, Error> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::BadQuiver(format!("duplicate vertex label {l:?}")));
            }
        }
        for (&(i, j), &m) in &arrows {
            if i >= n || j >= n {
                return Err(Error::BadQuiver(format!("arrow ({i},{j}) out of range")));
            }
            if m == 0 {
                return Err(Error::BadQuiver(format!("arrow ({i},{j}) with multiplicity 0")));
            }
        }
        Ok(Quiver { labels, arrows })
    }

    /// Quiver with vertices 0..n and unlabeled default names.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for &(i, j) in arrows {
            *map.entry((i, j)).or_insert(0) += 1;
        }
        Quiver::new((0..n).map(|i| i.to_string()).collect(), map)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arrows(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.arrows
    }

    pub fn arrow_count(&self) -> u32 {
        self.arrows.values().sum()
    }

    pub fn count(&self, i: usize, j: usize) -> u32 {
        self.arrows.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.count(i, j) > 0
    }

    pub fn out(&self, v: usize) -> Vec<usize> {
        self.arrows
            .keys()
            .filter(|&&(i, _)| i == v)
            .map(|&(_, j)| j)
            .collect()
    }

    pub fn inn(&self, v: usize) -> Vec<usize> {
        self.arrows
            .keys()
            .filter(|&&(_, j)| j == v)
            .map(|&(i, _)| i)
            .collect()
    }

    pub fn neighbours(&self, v: usize) -> BTreeSet<usize> {
        self.out(v).into_iter().chain(self.inn(v)).collect()
    }

    /// Number of arrows adjacent to v, with multiplicity.
    pub fn adjacent_arrows(&self, v: usize) -> u32 {
        self.arrows
            .iter()
            .filter(|(&(i, j), _)| i == v || j == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Chordless cycles of the underlying graph, as vertex sets of size >= 3.
    pub(crate) fn chordless_cycles(&self) -> Vec<BTreeSet<usize>> {
        let n = self.n();
        let mut adj = vec![BTreeSet::new(); n];
        for &(i, j) in self.arrows.keys() {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        let mut cycles: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        // Enumerate simple cycles (start = minimum vertex), then filter to
        // chordless ones: induced edge count equals cycle length and every
        // member has induced degree 2.
        fn dfs(
            adj: &[BTreeSet<usize>],
            path: &mut Vec<usize>,
            cycles: &mut BTreeSet<BTreeSet<usize>>,
        ) {
            let start = path[0];
            let last = *path.last().unwrap();
            for &nxt in &adj[last] {
                if nxt == start && path.len() >= 3 {
                    cycles.insert(path.iter().copied().collect());
                } else if nxt > start && !path.contains(&nxt) {
                    path.push(nxt);
                    dfs(adj, path, cycles);
                    path.pop();
                }
            }
        }
        for v in 0..n {
            dfs(&adj, &mut vec![v], &mut cycles);
        }
        cycles
            .into_iter()
            .filter(|c| {
                let mut deg: BTreeMap<usize, usize> = c.iter().map(|&v| (v, 0)).collect();
                let mut edges = 0;
                for &(i, j) in self.arrows.keys() {
                    if c.contains(&i) && c.contains(&j) {
                        edges += 1;
                        *deg.get_mut(&i).unwrap() += 1;
                        *deg.get_mut(&j).unwrap() += 1;
                    }
                }
                edges == c.len() && deg.values().all(|&d| d == 2)
            })
            .collect()
    }

    /// If the chordless cycle on this vertex set is oriented, a cyclic order.
    pub(crate) fn oriented_cycle_order(&self, cyc: &BTreeSet<usize>) -> Option<Vec<usize>> {
        let start = *cyc.iter().next()?;
        let mut order = vec![start];
        let mut cur = start;
        while order.len() < cyc.len() {
            let nxts: Vec<usize> = self
                .out(cur)
                .into_iter()
                .filter(|w| cyc.contains(w) && !order.contains(w))
                .collect();
            if nxts.len() != 1 {
                return None;
            }
            cur = nxts[0];
            order.push(cur);
        }
        if self.has(*order.last().unwrap(), start) {
            Some(order)
        } else {
            None
        }
    }

    /// Simple oriented cycles of the given length, canonicalized by rotation.
    pub(crate) fn oriented_cycles(&self, length: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        fn dfs(
            q: &Quiver,
            length: usize,
            path: &mut Vec<usize>,
            out: &mut BTreeSet<Vec<usize>>,
        ) {
            let cur = *path.last().unwrap();
            for nxt in q.out(cur) {
                if nxt == path[0] && path.len() == length {
                    let m = *path.iter().min().unwrap();
                    let i = path.iter().position(|&v| v == m).unwrap();
                    let mut rot = path[i..].to_vec();
                    rot.extend_from_slice(&path[..i]);
                    out.insert(rot);
                } else if nxt > path[0] && path.len() < length && !path.contains(&nxt) {
                    path.push(nxt);
                    dfs(q, length, path, out);
                    path.pop();
                }
            }
        }
        for v in 0..self.n() {
            dfs(self, length, &mut vec![v], &mut out);
        }
        out.into_iter().collect()
    }

    /// Relabel vertices by a permutation: vertex v becomes perm[v].
    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        let mut labels = vec![String::new(); self.n()];
        for (v, l) in self.labels.iter().enumerate() {
            labels[perm[v]] = l.clone();
        }
        let arrows = self
            .arrows
            .iter()
            .map(|(&(i, j), &m)| ((perm[i], perm[j]), m))
            .collect();
        Quiver { labels, arrows }
    }
}

/// Quiver plus relation ideal generators per the shortest-path procedure.
/// Commutativity relations are scalar-free unordered path pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    /// Each path is a vertex sequence a -> ... -> b opposite an arrow b -> a.
    pub zero_relations: Vec<Vec<usize>>,
    pub commutativity_relations: Vec<(Vec<usize>, Vec<usize>)>,
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let path = |p: &[usize]| {
            p.iter()
                .map(|&v| self.quiver.label(v).to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        };
        writeln!(f, "vertices: {}", self.quiver.n())?;
        writeln!(f, "arrows:")?;
        for (&(i, j), &m) in self.quiver.arrows() {
            for _ in 0..m {
                writeln!(f, "  {} -> {}", self.quiver.label(i), self.quiver.label(j))?;
            }
        }
        writeln!(f, "zero relations:")?;
        for p in &self.zero_relations {
            writeln!(f, "  {}", path(p))?;
        }
        writeln!(f, "commutativity relations:")?;
        for (p, q) in &self.commutativity_relations {
            writeln!(f, "  {} = {}", path(p), path(q))?;
        }
        Ok(())
    }
}

fn bmat_from_arrows(arrows: &BTreeMap<(usize, usize), u32>, r: usize) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0i64; r]; r];
    for (&(i, j), &m) in arrows {
        b[i][j] += m as i64;
        b[j][i] -= m as i64;
    }
    b
}

fn bmat_mutate(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let r = b.len();
    let mut nb = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i == k || j == k {
                nb[i][j] = -b[i][j];
            } else {
                nb[i][j] = b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2;
            }
        }
    }
    nb
}

fn bmat_arrows(b: &[Vec<i64>]) -> BTreeMap<(usize, usize), u32> {
    let mut out = BTreeMap::new();
    for (i, row) in b.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v > 0 {
                out.insert((i, j), v as u32);
            }
        }
    }
    out
}

/// Reference cluster-tilting object: the summands in orbit 0, one per row.
pub fn reference_seed(cat: &ClusterCategory) -> Vec<Indec> {
    (1..=cat.rank())
        .map(|r| cat.canon(crate::ar_model::Cover::new(0, r)))
        .collect()
}

/// Quiver of the reference seed: the reference orientation (linear for A,
/// fork toward the branch vertex for D), with vertex i = seed summand i.
fn seed_arrows(cat: &ClusterCategory) -> BTreeMap<(usize, usize), u32> {
    let n = cat.rank() as usize;
    let mut arrows = BTreeMap::new();
    match cat.family() {
        Family::A => {
            for i in 0..n - 1 {
                arrows.insert((i, i + 1), 1);
            }
        }
        Family::D => {
            for i in 0..n - 3 {
                arrows.insert((i, i + 1), 1);
            }
            arrows.insert((n - 3, n - 2), 1);
            arrows.insert((n - 3, n - 1), 1);
        }
    }
    arrows
}

fn complements_by_index(cat: &ClusterCategory, almost: &[usize]) -> Vec<usize> {
    let m = cat.indecs().len();
    (0..m)
        .filter(|&i| {
            !almost.contains(&i)
                && cat.ext_by_index(i, i) == 0
                && almost
                    .iter()
                    .all(|&j| cat.ext_by_index(i, j) == 0 && cat.ext_by_index(j, i) == 0)
        })
        .collect()
}

type AtlasEntry = (Vec<usize>, Vec<Vec<i64>>);

/// Mutation-tracked quivers of every cluster-tilting object, computed by a
/// single BFS over the exchange graph from the reference seed.
pub struct MutationAtlas {
    map: HashMap<Vec<usize>, AtlasEntry>,
}

impl MutationAtlas {
    pub fn build(cat: &ClusterCategory) -> Result<Self, Error> {
        let mut map = HashMap::new();
        bfs(cat, None, &mut map)?;
        Ok(MutationAtlas { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// All recorded objects, in canonical order.
    pub fn objects(&self, cat: &ClusterCategory) -> Vec<Vec<Indec>> {
        let mut out: Vec<Vec<Indec>> = self
            .map
            .keys()
            .map(|k| k.iter().map(|&i| cat.indecs()[i]).collect())
            .collect();
        out.sort();
        out
    }

    /// Quiver of the object with the given summand set, vertices in sorted
    /// summand order, or None if the set is not cluster-tilting.
    pub fn quiver_for(&self, cat: &ClusterCategory, summands: &[Indec]) -> Option<Quiver> {
        let mut key: Vec<usize> = summands.iter().map(|s| cat.index_of(*s).unwrap()).collect();
        key.sort_unstable();
        let (order, bmat) = self.map.get(&key)?;
        Some(entry_quiver(cat, order, bmat))
    }
}

fn entry_quiver(cat: &ClusterCategory, order: &[usize], bmat: &[Vec<i64>]) -> Quiver {
    // Permute mutation order to canonical sorted-summand order.
    let r = order.len();
    let mut pos: Vec<usize> = (0..r).collect();
    pos.sort_by_key(|&p| order[p]);
    // pos[v] = mutation position of the v-th smallest summand
    let mut perm = vec![0usize; r];
    for (v, &p) in pos.iter().enumerate() {
        perm[p] = v;
    }
    let labels: Vec<String> = pos
        .iter()
        .map(|&p| cat.indecs()[order[p]].to_string())
        .collect();
    let arrows = bmat_arrows(bmat)
        .into_iter()
        .map(|((i, j), m)| ((perm[i], perm[j]), m))
        .collect();
    Quiver::new(labels, arrows).expect("atlas quiver is well formed")
}

fn bfs(
    cat: &ClusterCategory,
    target: Option<&Vec<usize>>,
    map: &mut HashMap<Vec<usize>, AtlasEntry>,
) -> Result<Option<AtlasEntry>, Error> {
    let seed: Vec<usize> = reference_seed(cat)
        .iter()
        .map(|s| cat.index_of(*s).unwrap())
        .collect();
    let b0 = bmat_from_arrows(&seed_arrows(cat), seed.len());
    let mut key = seed.clone();
    key.sort_unstable();
    if Some(&key) == target {
        return Ok(Some((seed, b0)));
    }
    map.insert(key, (seed.clone(), b0));
    let mut queue = VecDeque::new();
    queue.push_back(seed);
    while let Some(cur) = queue.pop_front() {
        let mut cur_key = cur.clone();
        cur_key.sort_unstable();
        let bmat = map[&cur_key].1.clone();
        for k in 0..cur.len() {
            let almost: Vec<usize> = cur
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != k)
                .map(|(_, &x)| x)
                .collect();
            let comps = complements_by_index(cat, &almost);
            if comps.len() != 2 {
                return Err(Error::integrity(format!(
                    "expected exactly 2 complements, found {}",
                    comps.len()
                )));
            }
            let new = if comps[0] != cur[k] { comps[0] } else { comps[1] };
            let mut nxt = cur.clone();
            nxt[k] = new;
            let mut nxt_key = nxt.clone();
            nxt_key.sort_unstable();
            if !map.contains_key(&nxt_key) {
                let entry = (nxt.clone(), bmat_mutate(&bmat, k));
                if Some(&nxt_key) == target {
                    return Ok(Some(entry));
                }
                map.insert(nxt_key, entry);
                queue.push_back(nxt);
            }
        }
    }
    Ok(None)
}

/// Quiver of End(T)^op via mutation tracking from the reference seed.
pub fn ct_quiver(cat: &ClusterCategory, t: &CTObject) -> Result<Quiver, Error> {
    let mut key: Vec<usize> = t
        .summands()
        .iter()
        .map(|s| cat.index_of(*s).ok_or(Error::NotMember(*s)))
        .collect::<Result<_, _>>()?;
    key.sort_unstable();
    let mut map = HashMap::new();
    match bfs(cat, Some(&key), &mut map)? {
        Some((order, bmat)) => Ok(entry_quiver(cat, &order, &bmat)),
        None => Err(Error::integrity(
            "mutation BFS did not reach the target object (exchange graph not connected?)",
        )),
    }
}

/// All paths from a to b (for an arrow b -> a) with no cyclic proper subpath
/// whose induced cycle subquiver carries no extra arrows.
pub fn shortest_paths(q: &Quiver, arrow: (usize, usize)) -> Vec<Vec<usize>> {
    let (b, a) = arrow;
    let mut out = Vec::new();
    let mut path = vec![a];
    fn dfs(q: &Quiver, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == b {
            out.push(path.clone());
            return;
        }
        for nxt in q.out(cur) {
            if !path.contains(&nxt) {
                path.push(nxt);
                dfs(q, b, path, out);
                path.pop();
            }
        }
    }
    dfs(q, b, &mut path, &mut out);
    // Keep only paths whose induced cycle (path plus the arrow b -> a) is
    // full: no arrows between path vertices other than the cycle arrows.
    out.retain(|p| {
        let set: BTreeSet<usize> = p.iter().copied().collect();
        let induced: u32 = q
            .arrows()
            .iter()
            .filter(|(&(i, j), _)| set.contains(&i) && set.contains(&j))
            .map(|(_, &m)| m)
            .sum();
        induced == p.len() as u32
    });
    out.sort();
    out
}

/// Relation ideal generators: a zero-relation per single shortest return
/// path, a commutativity pair per double; more than two is rejected.
pub fn relations(q: &Quiver) -> Result<Presentation, Error> {
    let mut zero = Vec::new();
    let mut comm = Vec::new();
    for (&(b, a), _) in q.arrows() {
        let mut paths = shortest_paths(q, (b, a));
        match paths.len() {
            0 => {}
            1 => zero.push(paths.pop().unwrap()),
            2 => {
                let s = paths.pop().unwrap();
                let r = paths.pop().unwrap();
                let interior_r: BTreeSet<usize> = r[1..r.len() - 1].iter().copied().collect();
                let interior_s: BTreeSet<usize> = s[1..s.len() - 1].iter().copied().collect();
                if !interior_r.is_disjoint(&interior_s) {
                    return Err(Error::BadPresentation(format!(
                        "the two shortest paths for arrow {b} -> {a} are not disjoint"
                    )));
                }
                let union: BTreeSet<usize> =
                    r.iter().chain(s.iter()).copied().collect();
                let cycle_arrows: BTreeSet<(usize, usize)> = r
                    .windows(2)
                    .chain(s.windows(2))
                    .map(|w| (w[0], w[1]))
                    .chain(std::iter::once((b, a)))
                    .collect();
                for &(i, j) in q.arrows().keys() {
                    if union.contains(&i) && union.contains(&j) && !cycle_arrows.contains(&(i, j)) {
                        return Err(Error::BadPresentation(format!(
                            "the two shortest paths for arrow {b} -> {a} are not disconnected"
                        )));
                    }
                }
                comm.push((r, s));
            }
            k => {
                return Err(Error::BadPresentation(format!(
                    "arrow {b} -> {a} has {k} shortest return paths (at most 2 allowed)"
                )))
            }
        }
    }
    Ok(Presentation {
        quiver: q.clone(),
        zero_relations: zero,
        commutativity_relations: comm,
    })
}

fn refine_classes(q: &Quiver) -> Vec<u64> {
    // 1-WL style refinement on the directed multigraph.
    let n = q.n();
    let mut color: Vec<u64> = (0..n)
        .map(|v| {
            let o: u32 = q.out(v).iter().map(|&w| q.count(v, w)).sum();
            let i: u32 = q.inn(v).iter().map(|&w| q.count(w, v)).sum();
            (o as u64) << 8 | i as u64
        })
        .collect();
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<(u64, u32, bool)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(u64, u32, bool)> = q
                    .out(v)
                    .into_iter()
                    .map(|w| (color[w], q.count(v, w), true))
                    .chain(q.inn(v).into_iter().map(|w| (color[w], q.count(w, v), false)))
                    .collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u64> = sig
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap() as u64)
            .collect();
        if next == color {
            break;
        }
        color = next;
    }
    color
}

/// Arrow-preserving vertex bijection from q1 to q2, if one exists.
/// Deterministic: vertices assigned in class-refined order.
pub fn quiver_iso(q1: &Quiver, q2: &Quiver) -> Option<Vec<usize>> {
    let n = q1.n();
    if n != q2.n() || q1.arrow_count() != q2.arrow_count() {
        return None;
    }
    let c1 = refine_classes(q1);
    let c2 = refine_classes(q2);
    let mut h1: BTreeMap<u64, usize> = BTreeMap::new();
    let mut h2 = BTreeMap::new();
    for v in 0..n {
        *h1.entry(c1[v]).or_insert(0) += 1;
        *h2.entry(c2[v]).or_insert(0) += 1;
    }
    if h1 != h2 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (h1[&c1[v]], c1[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(q1: &Quiver, q2: &Quiver, map: &[usize], v: usize) -> bool {
        for u in 0..map.len() {
            if map[u] == usize::MAX || u == v {
                continue;
            }
            if q1.count(v, u) != q2.count(map[v], map[u])
                || q1.count(u, v) != q2.count(map[u], map[v])
            {
                return false;
            }
        }
        q1.count(v, v) == q2.count(map[v], map[v])
    }
    fn bt(
        q1: &Quiver,
        q2: &Quiver,
        c1: &[u64],
        c2: &[u64],
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..q2.n() {
            if used[w] || c2[w] != c1[v] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if consistent(q1, q2, map, v) && bt(q1, q2, c1, c2, order, pos + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    if bt(q1, q2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_model::{CategorySpec, ClusterCategory, Cover, Family};
    use crate::tilting::{enumerate_ct, CTObject};

    fn build(family: Family, rank: u32) -> ClusterCategory {
        ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn atlas_reaches_every_object() {
        let cat = build(Family::A, 4);
        let atlas = MutationAtlas::build(&cat).unwrap();
        assert_eq!(atlas.len(), 42);
        assert_eq!(atlas.objects(&cat).len(), enumerate_ct(&cat).len());
        for t in enumerate_ct(&cat) {
            assert!(atlas.quiver_for(&cat, t.summands()).is_some());
        }
    }

    #[test]
    fn central_triangle_quiver_is_an_oriented_three_cycle() {
        let cat = build(Family::A, 3);
        let t: Vec<Indec> =
            [0, 2, 4].iter().map(|&x| cat.canon(Cover::new(x, 1))).collect();
        let t = CTObject::new(&cat, t).unwrap();
        let q = ct_quiver(&cat, &t).unwrap();
        assert_eq!(q.n(), 3);
        assert_eq!(q.arrow_count(), 3);
        assert_eq!(q.oriented_cycles(3).len(), 1);
        let pres = relations(&q).unwrap();
        assert_eq!(pres.zero_relations.len(), 3);
        assert!(pres.commutativity_relations.is_empty());
    }

    #[test]
    fn shortest_return_paths() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(shortest_paths(&q, (0, 1)), vec![vec![1, 2, 0]]);
        let path = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(shortest_paths(&path, (0, 1)).is_empty());
        let square =
            Quiver::from_arrows(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        assert_eq!(shortest_paths(&square, (3, 0)), vec![vec![0, 1, 3], vec![0, 2, 3]]);
    }

    #[test]
    fn three_return_paths_are_rejected() {
        let q = Quiver::from_arrows(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 0)],
        )
        .unwrap();
        assert!(matches!(relations(&q), Err(Error::BadPresentation(_))));
    }

    #[test]
    fn presentation_display_is_deterministic() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = relations(&q).unwrap().to_string();
        assert_eq!(
            text,
            "vertices: 3\narrows:\n  0 -> 1\n  1 -> 2\n  2 -> 0\nzero relations:\n  1 -> 2 -> 0\n  2 -> 0 -> 1\n  0 -> 1 -> 2\ncommutativity relations:\n"
        );
    }

    #[test]
    fn quiver_iso_positive_and_negative() {
        let q = Quiver::from_arrows(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        let perm = vec![2, 0, 3, 1];
        let p = q.permuted(&perm);
        let iso = quiver_iso(&q, &p).expect("permuted quivers are isomorphic");
        for (&(i, j), &m) in q.arrows() {
            assert_eq!(p.count(iso[i], iso[j]), m);
        }
        let source = Quiver::from_arrows(3, &[(0, 1), (2, 1)]).unwrap();
        let path = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(quiver_iso(&source, &path).is_none());
    }

    #[test]
    fn ct_quiver_labels_are_summand_coordinates() {
        let cat = build(Family::D, 4);
        let t = CTObject::new(&cat, reference_seed(&cat)).unwrap();
        let q = ct_quiver(&cat, &t).unwrap();
        let labels: Vec<String> = t.summands().iter().map(|s| s.to_string()).collect();
        assert_eq!(q.labels(), labels.as_slice());
    }
}
