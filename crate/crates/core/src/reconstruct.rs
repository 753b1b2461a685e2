//! Explicit cluster-tilting objects realizing a classified quiver, with
//! round-trip validation.

use crate::ar_model::{
    CategorySpec, ClusterCategory, Cover, Family, Indec, TriangleRegion,
};
use crate::classify::{classify, is_type_a_quiver, ATriangle, DCandidate, Shape, ShapeDecomposition};
use crate::error::{Error, RejectReason};
use crate::homext::GabrielOracle;
use crate::presentation::{ct_quiver, quiver_iso, Quiver};
use crate::tilting::CTObject;
use std::collections::{BTreeMap, BTreeSet};

/// Recursive placement of a type-A quiver into the wedge with apex
/// (x0, m): the marked vertex goes to the apex, a single adjacent arrow
/// selects the left or right sub-wedge, and a 3-cycle at the marked vertex
/// splits the remainder into flush-left and flush-right sub-wedges.
fn place_a(
    cat: &ClusterCategory,
    q: &Quiver,
    verts: &BTreeSet<usize>,
    marked: usize,
    x0: i64,
    m: u32,
    out: &mut BTreeMap<usize, Indec>,
) -> Result<(), Error> {
    if verts.len() != m as usize || !verts.contains(&marked) {
        return Err(Error::BadQuiver("triangle placement size mismatch".into()));
    }
    out.insert(marked, cat.canon(Cover::new(x0, m)));
    if m == 1 {
        return Ok(());
    }
    let arr: Vec<(usize, usize)> = q
        .arrows()
        .keys()
        .copied()
        .filter(|&(i, j)| verts.contains(&i) && verts.contains(&j))
        .collect();
    let adj: Vec<(usize, usize)> = arr
        .iter()
        .copied()
        .filter(|&(i, j)| i == marked || j == marked)
        .collect();
    let mut rest = verts.clone();
    rest.remove(&marked);
    match adj.len() {
        1 => {
            let (i, j) = adj[0];
            let (w, nx) = if j == marked { (i, x0) } else { (j, x0 + 1) };
            place_a(cat, q, &rest, w, nx, m - 1, out)
        }
        2 => {
            let outs: Vec<usize> =
                adj.iter().filter(|&&(i, _)| i == marked).map(|&(_, j)| j).collect();
            let ins: Vec<usize> =
                adj.iter().filter(|&&(_, j)| j == marked).map(|&(i, _)| i).collect();
            if outs.len() != 1 || ins.len() != 1 {
                return Err(Error::BadQuiver(
                    "marked vertex with two arrows must lie on a 3-cycle".into(),
                ));
            }
            let (p, qv) = (outs[0], ins[0]);
            if !arr.contains(&(p, qv)) {
                return Err(Error::BadQuiver(
                    "3-cycle at the marked vertex is missing its residual arrow".into(),
                ));
            }
            let comp = |start: usize| -> BTreeSet<usize> {
                let mut seen = BTreeSet::from([start]);
                let mut stack = vec![start];
                while let Some(u) = stack.pop() {
                    for &(i, j) in &arr {
                        if (i, j) == (p, qv) || i == marked || j == marked {
                            continue;
                        }
                        for (a, b) in [(i, j), (j, i)] {
                            if a == u && rest.contains(&b) && seen.insert(b) {
                                stack.push(b);
                            }
                        }
                    }
                }
                seen
            };
            let comp_p = comp(p);
            let comp_q = comp(qv);
            if !comp_p.is_disjoint(&comp_q)
                || comp_p.union(&comp_q).count() != rest.len()
            {
                return Err(Error::BadQuiver(
                    "3-cycle split does not partition the remaining vertices".into(),
                ));
            }
            let a = comp_q.len() as u32;
            let b = comp_p.len() as u32;
            place_a(cat, q, &comp_q, qv, x0, a, out)?;
            place_a(cat, q, &comp_p, p, x0 + m as i64 - b as i64, b, out)
        }
        _ => Err(Error::BadQuiver(format!(
            "marked vertex has {} adjacent arrows within its triangle",
            adj.len()
        ))),
    }
}

/// Realize a type-A quiver with a marked connecting vertex as a maximal
/// rigid set inside the target wedge region; the region's corner object is
/// always among the output.
pub fn reconstruct_a(
    cat: &ClusterCategory,
    t: &ATriangle,
    target: &TriangleRegion,
) -> Result<BTreeSet<Indec>, Error> {
    if t.quiver.n() != target.order() as usize {
        return Err(Error::BadQuiver(format!(
            "triangle quiver has {} vertices but the region has order {}",
            t.quiver.n(),
            target.order()
        )));
    }
    if target.order() == 0 {
        return Ok(BTreeSet::new());
    }
    if !is_type_a_quiver(&t.quiver) {
        return Err(Error::BadQuiver("triangle quiver is not of type A".into()));
    }
    if !crate::classify::connecting_vertices(&t.quiver).contains(&t.marked) {
        return Err(Error::BadQuiver("marked vertex is not connecting".into()));
    }
    let apex = target.apex().expect("nonempty region has an apex");
    let verts: BTreeSet<usize> = (0..t.quiver.n()).collect();
    let mut out = BTreeMap::new();
    place_a(cat, &t.quiver, &verts, t.marked, apex.x, target.order(), &mut out)?;
    Ok(out.into_values().collect())
}

/// A successful reconstruction: the realizing object plus bookkeeping on
/// which shape candidate and placement branch produced it.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub spec: CategorySpec,
    pub object: CTObject,
    /// placement[v] is the summand realizing quiver vertex v.
    pub placement: Vec<Indec>,
    pub shape: Shape,
    pub candidate_index: usize,
    pub branch: usize,
    /// Whether the oracle quiver of the placement equals the input exactly
    /// (vertexwise), as opposed to only up to isomorphism.
    pub exact: bool,
}

fn finish_branch(
    cat: &ClusterCategory,
    gab: &GabrielOracle,
    q: &Quiver,
    place: &BTreeMap<usize, Indec>,
) -> Option<(CTObject, Vec<Indec>, bool)> {
    let n = q.n();
    if place.len() != n {
        return None;
    }
    let placement: Vec<Indec> = (0..n).map(|v| place[&v]).collect();
    let distinct: BTreeSet<Indec> = placement.iter().copied().collect();
    if distinct.len() != n {
        return None;
    }
    let object = CTObject::new(cat, placement.clone()).ok()?;
    let gq = gab.quiver(&placement).ok()?;
    if gq.arrows() == q.arrows() {
        Some((object, placement, true))
    } else if quiver_iso(&gq, q).is_some() {
        Some((object, placement, false))
    } else {
        None
    }
}

fn alpha_rows(cat: &ClusterCategory) -> (u32, u32) {
    let n = cat.rank();
    (n - 1, n)
}

fn d1_branches(
    cat: &ClusterCategory,
    q: &Quiver,
    cand: &DCandidate,
) -> Vec<Result<BTreeMap<usize, Indec>, Error>> {
    let n = cat.rank();
    let (lo, _) = alpha_rows(cat);
    let n1 = cand.spikes[0].as_ref().map_or(0, |p| p.order()) as u32;
    let n2 = cand.spikes[1].as_ref().map_or(0, |p| p.order()) as u32;
    if n1 + n2 + 2 != n {
        return Vec::new();
    }
    let a = cat.canon(Cover::new(0, lo));
    let phi_a = cat.phi(a).expect("alpha-object");
    let mut branches = Vec::new();
    for &(vb, vc) in &[(cand.cycle[0], cand.cycle[1]), (cand.cycle[1], cand.cycle[0])] {
        let mut place = BTreeMap::from([(vb, a), (vc, phi_a)]);
        let build = (|| -> Result<(), Error> {
            if let Some(part) = &cand.spikes[0] {
                place_a(cat, q, &part.members, part.star, 0, n1, &mut place)?;
            }
            if let Some(part) = &cand.spikes[1] {
                place_a(
                    cat,
                    q,
                    &part.members,
                    part.star,
                    n as i64 - 1 - n2 as i64,
                    n2,
                    &mut place,
                )?;
            }
            Ok(())
        })();
        branches.push(build.map(|()| place));
    }
    branches
}

fn cycle_branches(
    cat: &ClusterCategory,
    q: &Quiver,
    cand: &DCandidate,
) -> Vec<Result<BTreeMap<usize, Indec>, Error>> {
    let n = cat.rank();
    let (lo, hi) = alpha_rows(cat);
    let c = cand.cycle.len();
    let sizes: Vec<u32> = cand
        .spikes
        .iter()
        .map(|sp| sp.as_ref().map_or(0, |p| p.order()) as u32)
        .collect();
    if sizes.iter().map(|&s| s as u64 + 1).sum::<u64>() != n as u64 {
        return Vec::new();
    }
    // Tine row assignment for each central vertex; the first is fixed at the
    // lower alpha row, the rest are branch choices. The alternating
    // assignment (toggle after each odd-length step) is tried first.
    let mut assigns: Vec<Vec<u32>> = Vec::new();
    let mut alt = vec![lo];
    for i in 0..c - 1 {
        let prev = alt[i];
        alt.push(if (sizes[i] + 1) % 2 == 1 {
            if prev == lo { hi } else { lo }
        } else {
            prev
        });
    }
    assigns.push(alt.clone());
    for mask in 0u32..(1 << (c - 1)) {
        let mut rows = vec![lo];
        for i in 0..c - 1 {
            rows.push(if mask >> i & 1 == 1 { hi } else { lo });
        }
        if rows != alt {
            assigns.push(rows);
        }
    }
    let mut branches = Vec::new();
    for rows in assigns {
        let mut place = BTreeMap::new();
        let mut x = 0i64;
        let build = (|| -> Result<(), Error> {
            for (i, &u) in cand.cycle.iter().enumerate() {
                place.insert(u, cat.canon(Cover::new(x, rows[i])));
                if let Some(part) = &cand.spikes[i] {
                    place_a(cat, q, &part.members, part.star, x, sizes[i], &mut place)?;
                }
                x += sizes[i] as i64 + 1;
            }
            Ok(())
        })();
        branches.push(build.map(|()| place));
    }
    branches
}

/// Reconstruct inside a prebuilt category, reusing its oracle. The shape
/// decomposition must come from `classify` on the same quiver.
pub fn reconstruct_in(
    cat: &ClusterCategory,
    gab: &GabrielOracle,
    q: &Quiver,
    dec: &ShapeDecomposition,
) -> Result<Reconstruction, Error> {
    let spec = cat.spec();
    let mut fallback: Option<Reconstruction> = None;
    if dec.shape == Shape::TypeA {
        for (branch, &marked) in dec.connecting.iter().enumerate() {
            let verts: BTreeSet<usize> = (0..q.n()).collect();
            let mut place = BTreeMap::new();
            if place_a(cat, q, &verts, marked, 0, q.n() as u32, &mut place).is_err() {
                continue;
            }
            if let Some((object, placement, exact)) = finish_branch(cat, gab, q, &place) {
                let rec = Reconstruction {
                    spec,
                    object,
                    placement,
                    shape: Shape::TypeA,
                    candidate_index: 0,
                    branch,
                    exact,
                };
                if exact {
                    return Ok(rec);
                }
                fallback.get_or_insert(rec);
            }
        }
    } else {
        for (ci, cand) in dec.candidates.iter().enumerate() {
            let branches = match cand.shape {
                Shape::D1 => d1_branches(cat, q, cand),
                Shape::D2 | Shape::D3 => cycle_branches(cat, q, cand),
                Shape::TypeA => Vec::new(),
            };
            for (bi, built) in branches.into_iter().enumerate() {
                let Ok(place) = built else { continue };
                if let Some((object, placement, exact)) = finish_branch(cat, gab, q, &place) {
                    let rec = Reconstruction {
                        spec,
                        object,
                        placement,
                        shape: cand.shape,
                        candidate_index: ci,
                        branch: bi,
                        exact,
                    };
                    if exact {
                        return Ok(rec);
                    }
                    fallback.get_or_insert(rec);
                }
            }
        }
    }
    fallback.ok_or_else(|| {
        Error::integrity(format!(
            "no reconstruction branch realizes the classified quiver in {spec}"
        ))
    })
}

fn spec_for(dec: &ShapeDecomposition, n: usize) -> Result<CategorySpec, Error> {
    match dec.shape {
        Shape::TypeA => CategorySpec::new(Family::A, n as u32),
        _ => CategorySpec::new(Family::D, n as u32)
            .map_err(|_| Error::NotClusterTilted(RejectReason::NoShapeMatch)),
    }
}

/// Classify a quiver and produce an explicit cluster-tilting object whose
/// quiver is isomorphic to it.
pub fn reconstruct(q: &Quiver) -> Result<Reconstruction, Error> {
    let dec = classify(q)?;
    let spec = spec_for(&dec, q.n())?;
    let cat = ClusterCategory::build(spec)?;
    let gab = GabrielOracle::new(&cat);
    reconstruct_in(&cat, &gab, q, &dec)
}

/// Stage-by-stage outcome of classify, reconstruct, quiver recomputation
/// and isomorphism checking.
#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub shape: Option<Shape>,
    pub candidate_count: usize,
    pub classify_error: Option<Error>,
    pub reconstruction: Option<Reconstruction>,
    pub reconstruct_error: Option<Error>,
    /// Vertex bijection from the recomputed quiver onto the input.
    pub iso: Option<Vec<usize>>,
    pub ok: bool,
}

impl std::fmt::Display for RoundtripReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (&self.shape, &self.classify_error) {
            (Some(s), _) => writeln!(f, "classify: {s} ({} candidates)", self.candidate_count)?,
            (None, Some(e)) => writeln!(f, "classify: rejected ({e})")?,
            _ => writeln!(f, "classify: not run")?,
        }
        match (&self.reconstruction, &self.reconstruct_error) {
            (Some(r), _) => {
                writeln!(
                    f,
                    "reconstruct: {} in {} (candidate {}, branch {}, {})",
                    r.object,
                    r.spec,
                    r.candidate_index,
                    r.branch,
                    if r.exact { "exact" } else { "up to isomorphism" }
                )?;
            }
            (None, Some(e)) => writeln!(f, "reconstruct: failed ({e})")?,
            _ => writeln!(f, "reconstruct: not run")?,
        }
        match &self.iso {
            Some(m) => writeln!(
                f,
                "round trip: quiver isomorphism [{}]",
                m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
            )?,
            None => writeln!(f, "round trip: no isomorphism")?,
        }
        writeln!(f, "result: {}", if self.ok { "pass" } else { "fail" })
    }
}

/// Run classify, reconstruct, recompute the quiver by mutation tracking and
/// check isomorphism with the input; failures become report content.
pub fn verify_roundtrip(q: &Quiver) -> RoundtripReport {
    let mut report = RoundtripReport {
        shape: None,
        candidate_count: 0,
        classify_error: None,
        reconstruction: None,
        reconstruct_error: None,
        iso: None,
        ok: false,
    };
    let dec = match classify(q) {
        Ok(d) => d,
        Err(e) => {
            report.classify_error = Some(e);
            return report;
        }
    };
    report.shape = Some(dec.shape);
    report.candidate_count = dec.candidates.len().max(1);
    let stages = (|| -> Result<(Reconstruction, Option<Vec<usize>>), Error> {
        let spec = spec_for(&dec, q.n())?;
        let cat = ClusterCategory::build(spec)?;
        let gab = GabrielOracle::new(&cat);
        let rec = reconstruct_in(&cat, &gab, q, &dec)?;
        let tracked = ct_quiver(&cat, &rec.object)?;
        Ok((rec, quiver_iso(&tracked, q)))
    })();
    match stages {
        Ok((rec, iso)) => {
            report.reconstruction = Some(rec);
            report.ok = iso.is_some();
            report.iso = iso;
        }
        Err(e) => report.reconstruct_error = Some(e),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_model::Cover;
    use crate::classify::ATriangle;

    fn build(family: Family, rank: u32) -> ClusterCategory {
        ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
    }

    fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::from_arrows(n, arrows).unwrap()
    }

    #[test]
    fn empty_and_single_wedges() {
        let cat = build(Family::A, 3);
        let empty = ATriangle { quiver: q(0, &[]), marked: 0 };
        let placed = reconstruct_a(&cat, &empty, &TriangleRegion::empty()).unwrap();
        assert!(placed.is_empty());
        let apex = Cover::new(0, 1);
        let single = ATriangle { quiver: q(1, &[]), marked: 0 };
        let placed = reconstruct_a(&cat, &single, &cat.region_at(apex)).unwrap();
        assert_eq!(placed.into_iter().collect::<Vec<_>>(), vec![cat.canon(apex)]);
    }

    #[test]
    fn three_cycle_fills_the_full_wedge() {
        let cat = build(Family::A, 3);
        let t = ATriangle { quiver: q(3, &[(0, 1), (1, 2), (2, 0)]), marked: 0 };
        let region = cat.region_at(Cover::new(0, 3));
        let placed = reconstruct_a(&cat, &t, &region).unwrap();
        let expect: Vec<Indec> = placed.iter().copied().collect();
        for x in expect {
            assert!(region.members(&cat).contains(&x));
        }
        assert_eq!(placed.len(), 3);
    }

    #[test]
    fn oriented_three_cycle_reconstructs_in_a3() {
        let rec = reconstruct(&q(3, &[(0, 1), (1, 2), (2, 0)])).unwrap();
        assert_eq!((rec.spec.family, rec.spec.rank), (Family::A, 3));
        let cat = build(Family::A, 3);
        let central: Vec<Indec> =
            [0, 2, 4].iter().map(|&x| cat.canon(Cover::new(x, 1))).collect();
        let mut expected = central;
        expected.sort();
        assert_eq!(rec.object.summands(), expected.as_slice());
    }

    #[test]
    fn oriented_four_cycle_reconstructs_in_d4() {
        let rec = reconstruct(&q(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).unwrap();
        assert_eq!((rec.spec.family, rec.spec.rank), (Family::D, 4));
        let coords: Vec<String> =
            rec.object.summands().iter().map(|s| s.to_string()).collect();
        assert_eq!(coords, vec!["(0,1)", "(0,3)", "(2,1)", "(2,3)"]);
        assert!(rec.exact);
    }

    #[test]
    fn roundtrip_report_on_good_and_bad_input() {
        let good = verify_roundtrip(&q(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(good.ok);
        assert!(good.iso.is_some());
        let bad = verify_roundtrip(&q(2, &[(0, 1), (1, 0)]));
        assert!(!bad.ok);
        assert!(bad.classify_error.is_some());
    }

    #[test]
    fn order_mismatch_is_a_bad_quiver() {
        let cat = build(Family::A, 3);
        let t = ATriangle { quiver: q(2, &[(0, 1)]), marked: 0 };
        let region = cat.region_at(Cover::new(0, 3));
        assert!(matches!(
            reconstruct_a(&cat, &t, &region),
            Err(Error::BadQuiver(_))
        ));
    }
}
