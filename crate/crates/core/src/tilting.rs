//! Cluster-tilting objects: enumeration, mutation, subfactor categories and
//! the lifting bijection.

use crate::ar_model::{CategorySpec, ClusterCategory, Family, Indec};
use crate::error::Error;
use crate::presentation::{quiver_iso, Quiver};
use std::collections::{BTreeMap, HashMap};

/// A set of rank-many pairwise Ext-orthogonal indecomposables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CTObject {
    summands: Vec<Indec>,
}

impl CTObject {
    /// Validated constructor; the summand list is sorted canonically.
    pub fn new(cat: &ClusterCategory, mut summands: Vec<Indec>) -> Result<Self, Error> {
        summands.sort();
        summands.dedup();
        if summands.len() != cat.rank() as usize {
            return Err(Error::NotClusterTilting {
                reason: format!(
                    "{} distinct summands, rank {} required",
                    summands.len(),
                    cat.rank()
                ),
            });
        }
        for &x in &summands {
            if cat.index_of(x).is_none() {
                return Err(Error::NotMember(x));
            }
        }
        for (i, &x) in summands.iter().enumerate() {
            for &y in &summands[i..] {
                if cat.ext_dim(x, y) != 0 {
                    return Err(Error::NotClusterTilting {
                        reason: format!("ext({x}, {y}) = {} != 0", cat.ext_dim(x, y)),
                    });
                }
            }
        }
        Ok(CTObject { summands })
    }

    pub(crate) fn from_sorted_unchecked(summands: Vec<Indec>) -> Self {
        CTObject { summands }
    }

    pub fn summands(&self) -> &[Indec] {
        &self.summands
    }

    pub fn contains(&self, x: Indec) -> bool {
        self.summands.binary_search(&x).is_ok()
    }
}

impl std::fmt::Display for CTObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Whether S is cluster-tilting: rigid with exactly rank summands. The
/// independent maximality computation must agree (asserted).
pub fn is_cluster_tilting(cat: &ClusterCategory, s: &[Indec]) -> bool {
    let mut sorted = s.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != s.len() || s.iter().any(|&x| cat.index_of(x).is_none()) {
        return false;
    }
    let rigid = sorted
        .iter()
        .enumerate()
        .all(|(i, &x)| sorted[i..].iter().all(|&y| cat.ext_dim(x, y) == 0));
    let by_count = rigid && sorted.len() == cat.rank() as usize;
    if rigid {
        let maximal = cat.indecs().iter().all(|&z| {
            sorted.contains(&z)
                || sorted
                    .iter()
                    .any(|&x| cat.ext_dim(z, x) != 0 || cat.ext_dim(x, z) != 0)
                || cat.ext_dim(z, z) != 0
        });
        let by_maximality = rigid && maximal;
        assert_eq!(
            by_count, by_maximality,
            "rigid set of size rank must coincide with maximal rigid"
        );
    }
    by_count
}

/// All cluster-tilting objects, each once, ordered lexicographically on
/// sorted summand coordinates.
pub fn enumerate_ct(cat: &ClusterCategory) -> Vec<CTObject> {
    let objs = cat.indecs();
    let m = objs.len();
    let rank = cat.rank() as usize;
    let mut res = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(rank);
    fn bt(
        cat: &ClusterCategory,
        m: usize,
        rank: usize,
        start: usize,
        cur: &mut Vec<usize>,
        res: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == rank {
            res.push(cur.clone());
            return;
        }
        if m - start < rank - cur.len() {
            return;
        }
        for i in start..m {
            if cat.ext_by_index(i, i) == 0
                && cur
                    .iter()
                    .all(|&j| cat.ext_by_index(i, j) == 0 && cat.ext_by_index(j, i) == 0)
            {
                cur.push(i);
                bt(cat, m, rank, i + 1, cur, res);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    bt(cat, m, rank, 0, &mut cur, &mut raw);
    for idxs in raw {
        res.push(CTObject::from_sorted_unchecked(
            idxs.into_iter().map(|i| objs[i]).collect(),
        ));
    }
    res
}

/// The exactly-two indecomposables completing a rigid set of rank-1
/// summands to a cluster-tilting object.
pub fn complements(cat: &ClusterCategory, almost: &[Indec]) -> Result<(Indec, Indec), Error> {
    if almost.len() + 1 != cat.rank() as usize {
        return Err(Error::NotClusterTilting {
            reason: format!(
                "almost-complete object needs {} summands, got {}",
                cat.rank() - 1,
                almost.len()
            ),
        });
    }
    let found: Vec<Indec> = cat
        .indecs()
        .iter()
        .copied()
        .filter(|&z| {
            !almost.contains(&z)
                && cat.ext_dim(z, z) == 0
                && almost
                    .iter()
                    .all(|&x| cat.ext_dim(z, x) == 0 && cat.ext_dim(x, z) == 0)
        })
        .collect();
    if found.len() != 2 {
        return Err(Error::integrity(format!(
            "expected exactly 2 complements, found {}",
            found.len()
        )));
    }
    Ok((found[0], found[1]))
}

/// Exchange summand k of T for the unique other complement.
pub fn mutate(cat: &ClusterCategory, t: &CTObject, k: usize) -> Result<CTObject, Error> {
    let old = t.summands()[k];
    let almost: Vec<Indec> = t
        .summands()
        .iter()
        .copied()
        .filter(|&x| x != old)
        .collect();
    let (a, b) = complements(cat, &almost)?;
    let new = if a != old { a } else { b };
    let mut summands = almost;
    summands.push(new);
    summands.sort();
    Ok(CTObject::from_sorted_unchecked(summands))
}

/// The subfactor category M^perp/(M), identified as a product of smaller
/// cluster categories with an explicit object bijection.
pub struct SubfactorModel {
    pivot: Indec,
    quotient_spec: Vec<CategorySpec>,
    factors: Vec<ClusterCategory>,
    object_map: BTreeMap<Indec, (usize, Indec)>,
    inverse: BTreeMap<(usize, Indec), Indec>,
}

impl SubfactorModel {
    pub fn pivot(&self) -> Indec {
        self.pivot
    }

    pub fn quotient_spec(&self) -> &[CategorySpec] {
        &self.quotient_spec
    }

    pub fn factor(&self, i: usize) -> &ClusterCategory {
        &self.factors[i]
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn object_map(&self) -> &BTreeMap<Indec, (usize, Indec)> {
        &self.object_map
    }

    pub fn map(&self, x: Indec) -> Option<(usize, Indec)> {
        self.object_map.get(&x).copied()
    }

    pub fn unmap(&self, factor: usize, y: Indec) -> Option<Indec> {
        self.inverse.get(&(factor, y)).copied()
    }

    /// All cluster-tilting objects of the product category, as lists of
    /// (factor index, summand) pairs.
    pub fn enumerate_quotient_ct(&self) -> Vec<Vec<(usize, Indec)>> {
        let per_factor: Vec<Vec<CTObject>> =
            self.factors.iter().map(enumerate_ct).collect();
        let mut out: Vec<Vec<(usize, Indec)>> = vec![Vec::new()];
        for (fi, cts) in per_factor.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * cts.len());
            for partial in &out {
                for ct in cts {
                    let mut item = partial.clone();
                    item.extend(ct.summands().iter().map(|&s| (fi, s)));
                    next.push(item);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

fn ext_graph(dims: &[Vec<u32>]) -> Quiver {
    let n = dims.len();
    let mut arrows = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && dims[i][j] > 0 {
                arrows.insert((i, j), dims[i][j]);
            }
        }
    }
    Quiver::new((0..n).map(|i| i.to_string()).collect(), arrows)
        .expect("ext graph is well formed")
}

fn candidate_specs(size: usize) -> Vec<CategorySpec> {
    let mut out = Vec::new();
    for m in 1..=64u32 {
        if (m as usize) * (m as usize + 3) / 2 == size {
            out.push(CategorySpec { family: Family::A, rank: m });
        }
        if m >= 4 && (m as usize) * (m as usize) == size {
            out.push(CategorySpec { family: Family::D, rank: m });
        }
    }
    out
}

/// Identify M^perp/(M) as a product of cluster categories, with an
/// ext-pattern-preserving object bijection found by graph isomorphism.
pub fn subfactor(cat: &ClusterCategory, m: Indec) -> Result<SubfactorModel, Error> {
    if cat.index_of(m).is_none() {
        return Err(Error::NotMember(m));
    }
    let perp: Vec<Indec> = cat
        .indecs()
        .iter()
        .copied()
        .filter(|&x| x != m && cat.ext_dim(x, m) == 0)
        .collect();
    // Components of the ext graph on the perpendicular category.
    let mut comp_of: HashMap<Indec, usize> = HashMap::new();
    let mut comps: Vec<Vec<Indec>> = Vec::new();
    for &x in &perp {
        if comp_of.contains_key(&x) {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![x];
        let mut cc = vec![x];
        comp_of.insert(x, id);
        while let Some(u) = stack.pop() {
            for &v in &perp {
                if !comp_of.contains_key(&v) && cat.ext_dim(u, v) > 0 {
                    comp_of.insert(v, id);
                    cc.push(v);
                    stack.push(v);
                }
            }
        }
        cc.sort();
        comps.push(cc);
    }
    // Identify each component against candidate categories by count
    // fingerprint, then full ext-pattern isomorphism.
    let mut identified: Vec<(CategorySpec, ClusterCategory, Vec<Indec>, Vec<usize>)> = Vec::new();
    for cc in comps {
        let dims: Vec<Vec<u32>> = cc
            .iter()
            .map(|&x| cc.iter().map(|&y| cat.ext_dim(x, y)).collect())
            .collect();
        let g = ext_graph(&dims);
        let mut found = None;
        for spec in candidate_specs(cc.len()) {
            let cand = ClusterCategory::build(spec)?;
            let cdims: Vec<Vec<u32>> = cand
                .indecs()
                .iter()
                .map(|&x| cand.indecs().iter().map(|&y| cand.ext_dim(x, y)).collect())
                .collect();
            if let Some(iso) = quiver_iso(&g, &ext_graph(&cdims)) {
                found = Some((spec, cand, iso));
                break;
            }
        }
        let Some((spec, cand, iso)) = found else {
            return Err(Error::integrity(format!(
                "no candidate category matches a perp component of size {} for pivot {m}",
                cc.len()
            )));
        };
        identified.push((spec, cand, cc, iso));
    }
    identified.sort_by_key(|(spec, _, cc, _)| (*spec, cc.first().copied()));
    let rank_sum: u32 = identified.iter().map(|(s, _, _, _)| s.rank).sum();
    if rank_sum + 1 != cat.rank() {
        return Err(Error::integrity(format!(
            "quotient ranks sum to {rank_sum}, expected {}",
            cat.rank() - 1
        )));
    }
    let mut object_map = BTreeMap::new();
    let mut inverse = BTreeMap::new();
    let mut quotient_spec = Vec::new();
    let mut factors = Vec::new();
    for (fi, (spec, cand, cc, iso)) in identified.into_iter().enumerate() {
        for (pos, &x) in cc.iter().enumerate() {
            let y = cand.indecs()[iso[pos]];
            object_map.insert(x, (fi, y));
            inverse.insert((fi, y), x);
        }
        quotient_spec.push(spec);
        factors.push(cand);
    }
    Ok(SubfactorModel { pivot: m, quotient_spec, factors, object_map, inverse })
}

/// Lift a cluster-tilting object of the quotient back to the host by
/// adjoining the pivot; part of the bijection onto {T : pivot in T}.
pub fn lift_ct(
    cat: &ClusterCategory,
    sub: &SubfactorModel,
    t_sub: &[(usize, Indec)],
) -> Result<CTObject, Error> {
    let mut summands = vec![sub.pivot()];
    for &(fi, y) in t_sub {
        let x = sub.unmap(fi, y).ok_or_else(|| {
            Error::integrity(format!("({fi}, {y}) is not in the image of the object map"))
        })?;
        summands.push(x);
    }
    summands.sort();
    if !is_cluster_tilting(cat, &summands) {
        return Err(Error::integrity(format!(
            "lifted set is not cluster-tilting for pivot {}",
            sub.pivot()
        )));
    }
    Ok(CTObject::from_sorted_unchecked(summands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_model::{Cover, Family};
    use std::collections::BTreeSet;
    use crate::presentation::reference_seed;

    fn build(family: Family, rank: u32) -> ClusterCategory {
        ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn enumeration_counts_frozen() {
        for (family, rank, count) in [
            (Family::A, 2, 5),
            (Family::A, 3, 14),
            (Family::A, 4, 42),
            (Family::D, 4, 50),
            (Family::D, 5, 182),
        ] {
            let cat = build(family, rank);
            assert_eq!(enumerate_ct(&cat).len(), count, "{family}_{rank}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_validated() {
        let cat = build(Family::A, 4);
        let objects = enumerate_ct(&cat);
        for w in objects.windows(2) {
            assert!(w[0].summands() < w[1].summands());
        }
        for t in &objects {
            assert!(is_cluster_tilting(&cat, t.summands()));
        }
    }

    #[test]
    fn ct_object_rejections() {
        let cat = build(Family::A, 3);
        let seed = reference_seed(&cat);
        match CTObject::new(&cat, seed[..2].to_vec()) {
            Err(Error::NotClusterTilting { reason }) => assert!(reason.contains("rank 3")),
            other => panic!("expected a summand-count rejection, got {other:?}"),
        }
        match CTObject::new(&cat, vec![seed[0], seed[1], Indec::new(0, 9)]) {
            Err(Error::NotMember(x)) => assert_eq!(x, Indec::new(0, 9)),
            other => panic!("expected a membership rejection, got {other:?}"),
        }
        let x = cat.canon(Cover::new(0, 1));
        let y = cat.tau(x, 1);
        let pair = format!("ext({}, {})", y.min(x), y.max(x));
        match CTObject::new(&cat, vec![x, y, seed[1]]) {
            Err(Error::NotClusterTilting { reason }) => {
                assert!(reason.contains(&pair), "{reason}")
            }
            other => panic!("expected a rigidity rejection, got {other:?}"),
        }
    }

    #[test]
    fn complements_and_mutation() {
        let cat = build(Family::D, 4);
        let t = CTObject::new(&cat, reference_seed(&cat)).unwrap();
        for k in 0..4 {
            let mut almost = t.summands().to_vec();
            let removed = almost.remove(k);
            let (c1, c2) = complements(&cat, &almost).unwrap();
            assert!(c1 < c2);
            assert!(removed == c1 || removed == c2);
            let m = mutate(&cat, &t, k).unwrap();
            assert_ne!(m, t);
            let back = mutate(&cat, &m, m.summands().iter().position(|&s| !t.contains(s)).unwrap())
                .unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn subfactor_a6_pivot_splits_into_a2_and_a3() {
        let cat = build(Family::A, 6);
        let pivot = cat.canon(Cover::new(0, 3));
        let sub = subfactor(&cat, pivot).unwrap();
        let specs: Vec<(Family, u32)> =
            sub.quotient_spec().iter().map(|s| (s.family, s.rank)).collect();
        assert_eq!(specs, vec![(Family::A, 2), (Family::A, 3)]);
        assert_eq!(sub.object_map().len(), 2 * (2 + 3) / 2 + 3 * (3 + 3) / 2);
    }

    #[test]
    fn subfactor_d5_alpha_pivot_is_a4() {
        let cat = build(Family::D, 5);
        let pivot = cat.canon(Cover::new(0, 4));
        assert!(cat.is_alpha(pivot));
        let sub = subfactor(&cat, pivot).unwrap();
        let specs: Vec<(Family, u32)> =
            sub.quotient_spec().iter().map(|s| (s.family, s.rank)).collect();
        assert_eq!(specs, vec![(Family::A, 4)]);
    }

    #[test]
    fn lift_is_a_bijection_onto_objects_containing_the_pivot() {
        let cat = build(Family::A, 5);
        let pivot = cat.canon(Cover::new(1, 2));
        let sub = subfactor(&cat, pivot).unwrap();
        let lifted: BTreeSet<CTObject> = sub
            .enumerate_quotient_ct()
            .iter()
            .map(|t| lift_ct(&cat, &sub, t).unwrap())
            .collect();
        let direct: BTreeSet<CTObject> =
            enumerate_ct(&cat).into_iter().filter(|t| t.contains(pivot)).collect();
        assert_eq!(lifted, direct);
    }
}
