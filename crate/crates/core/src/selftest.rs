//! Acceptance suite shared by the CLI `selftest` command and the
//! integration tests: exact counts, oracle agreement, relation structure,
//! exhaustive lemma checks, reconstruction round trips and classifier
//! robustness.

use crate::ar_model::{CategorySpec, ClusterCategory, Cover, Family, Indec};
use crate::classify::{classify, connecting_vertices, Shape};
use crate::error::{Error, RejectReason};
use crate::homext::{DiagonalOracle, GabrielOracle};
use crate::presentation::{relations, shortest_paths, MutationAtlas, Quiver};
use crate::reconstruct::reconstruct_in;
use crate::tilting::{enumerate_ct, lift_ct, subfactor, CTObject};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::time::Instant;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

/// Full suite report; `Display` prints one line per criterion.
#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub outcomes: Vec<CriterionOutcome>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

impl std::fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for o in &self.outcomes {
            writeln!(
                f,
                "{}: {} ({}) [{:.2}s]",
                o.name,
                if o.passed { "PASS" } else { "FAIL" },
                o.detail,
                o.seconds
            )?;
        }
        Ok(())
    }
}

struct RankData {
    cat: ClusterCategory,
    objects: Vec<CTObject>,
    quivers: Vec<Quiver>,
}

fn prepare(spec: CategorySpec) -> Result<RankData, Error> {
    let cat = ClusterCategory::build(spec)?;
    let objects = enumerate_ct(&cat);
    let atlas = MutationAtlas::build(&cat)?;
    if atlas.len() != objects.len() {
        return Err(Error::integrity(format!(
            "atlas size {} differs from enumeration size {} for {spec}",
            atlas.len(),
            objects.len()
        )));
    }
    let quivers = objects
        .iter()
        .map(|t| {
            atlas
                .quiver_for(&cat, t.summands())
                .ok_or_else(|| Error::integrity(format!("object {t} missing from atlas")))
        })
        .collect::<Result<_, _>>()?;
    Ok(RankData { cat, objects, quivers })
}

fn catalan(n: u64) -> u64 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c as u64
}

fn binom(n: u64, k: u64) -> u128 {
    let mut b: u128 = 1;
    for i in 0..k {
        b = b * (n - i) as u128 / (i + 1) as u128;
    }
    b
}

/// Number of clusters in type D_n: (3n-2)/n * C(2n-2, n-1).
fn d_cluster_count(n: u64) -> u64 {
    ((3 * n - 2) as u128 * binom(2 * n - 2, n - 1) / n as u128) as u64
}

fn crit_counts(ranks: &[RankData]) -> Result<String, String> {
    let mut lines = Vec::new();
    for rd in ranks {
        let spec = rd.cat.spec();
        let n = spec.rank as u64;
        let expected_indec = spec.expected_indec_count();
        if rd.cat.indecs().len() != expected_indec {
            return Err(format!(
                "{spec}: {} indecomposables, expected {expected_indec}",
                rd.cat.indecs().len()
            ));
        }
        let expected_ct = match spec.family {
            Family::A => catalan(n + 1),
            Family::D => d_cluster_count(n),
        } as usize;
        if rd.objects.len() != expected_ct {
            return Err(format!(
                "{spec}: {} cluster-tilting objects, expected {expected_ct}",
                rd.objects.len()
            ));
        }
        lines.push(format!("{spec}={}", rd.objects.len()));
    }
    let frozen = [
        (Family::A, 2, 5),
        (Family::A, 3, 14),
        (Family::A, 4, 42),
        (Family::D, 4, 50),
        (Family::D, 5, 182),
        (Family::D, 6, 672),
    ];
    for (fam, n, count) in frozen {
        if let Some(rd) = ranks.iter().find(|rd| {
            rd.cat.spec().family == fam && rd.cat.spec().rank == n
        }) {
            if rd.objects.len() != count {
                return Err(format!("{}_{n}: frozen count {count} violated", fam));
            }
        }
    }
    Ok(format!("ct counts {}", lines.join(" ")))
}

fn crit_oracles(ranks: &[RankData]) -> Result<String, String> {
    let mut pair_total = 0usize;
    for rd in ranks {
        if rd.cat.family() == Family::A {
            let oracle = DiagonalOracle::new(&rd.cat).map_err(|e| e.to_string())?;
            for &x in rd.cat.indecs() {
                for &y in rd.cat.indecs() {
                    if oracle.ext_dim(x, y) != rd.cat.ext_dim(x, y) {
                        return Err(format!(
                            "{}: diagonal oracle disagrees at ({x}, {y})",
                            rd.cat.spec()
                        ));
                    }
                    pair_total += 1;
                }
            }
        }
    }
    let mut quiver_total = 0usize;
    for rd in ranks {
        let gab = GabrielOracle::new(&rd.cat);
        let bad: Vec<String> = rd
            .objects
            .par_iter()
            .zip(rd.quivers.par_iter())
            .filter_map(|(t, q)| {
                let gq = gab.quiver(t.summands()).ok()?;
                if gq.arrows() == q.arrows() {
                    None
                } else {
                    Some(format!("{}: {t}", rd.cat.spec()))
                }
            })
            .collect();
        if let Some(first) = bad.first() {
            return Err(format!("gabriel oracle disagrees with mutation tracking at {first}"));
        }
        quiver_total += rd.objects.len();
    }
    Ok(format!(
        "diagonal oracle on {pair_total} pairs, gabriel oracle on {quiver_total} quivers"
    ))
}

fn golden_case(
    n: usize,
    arrows: &[(usize, usize)],
    golden: &str,
    name: &str,
) -> Result<(), String> {
    let q = Quiver::from_arrows(n, arrows).map_err(|e| e.to_string())?;
    let pres = relations(&q).map_err(|e| format!("{name}: {e}"))?;
    let got = pres.to_string();
    if got != golden {
        return Err(format!("{name}: relations output differs from golden file:\n{got}"));
    }
    Ok(())
}

fn crit_relations(ranks: &[RankData]) -> Result<String, String> {
    let mut arrow_total = 0usize;
    for rd in ranks {
        for q in &rd.quivers {
            for &(b, a) in q.arrows().keys() {
                let paths = shortest_paths(q, (b, a));
                if paths.len() > 2 {
                    return Err(format!(
                        "{}: arrow {b} -> {a} has {} shortest return paths",
                        rd.cat.spec(),
                        paths.len()
                    ));
                }
                arrow_total += 1;
            }
            relations(q).map_err(|e| format!("{}: {e}", rd.cat.spec()))?;
        }
    }
    golden_case(
        3,
        &[(0, 1), (1, 2), (2, 0)],
        include_str!("golden/three_cycle.txt"),
        "three-cycle",
    )?;
    golden_case(
        4,
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 0)],
        include_str!("golden/shape1_d4.txt"),
        "shape-1 D_4",
    )?;
    golden_case(
        4,
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
        include_str!("golden/oriented_4cycle.txt"),
        "oriented 4-cycle",
    )?;
    Ok(format!("{arrow_total} arrows checked, 3 golden files matched"))
}

fn alpha_summands(cat: &ClusterCategory, t: &CTObject) -> Vec<Indec> {
    t.summands().iter().copied().filter(|&x| cat.is_alpha(x)).collect()
}

fn check_outer_orbit(rd: &RankData) -> Result<(), String> {
    for t in &rd.objects {
        let outer = t.summands().iter().filter(|s| s.row == 1).count();
        if outer < 2 {
            return Err(format!(
                "{}: {t} has {outer} outermost-orbit summands",
                rd.cat.spec()
            ));
        }
    }
    Ok(())
}

fn check_connecting(rd: &RankData) -> Result<(), String> {
    for (t, q) in rd.objects.iter().zip(&rd.quivers) {
        let conn: BTreeSet<usize> = connecting_vertices(q).into_iter().collect();
        for (v, s) in t.summands().iter().enumerate() {
            if (s.row == 1) != conn.contains(&v) {
                return Err(format!(
                    "{}: {t} vertex {v} ({s}) breaks connecting <=> outermost",
                    rd.cat.spec()
                ));
            }
        }
    }
    Ok(())
}

fn check_linear_wedge(rd: &RankData) -> Result<(), String> {
    let cat = &rd.cat;
    let n = cat.rank();
    for t in &rd.objects {
        let found = (0..cat.fundamental_period()).any(|x0| {
            let members = cat.region_at(Cover::new(x0, n)).members(cat);
            t.summands().iter().all(|s| members.contains(s))
        });
        if !found {
            return Err(format!("{}: {t} fits in no full wedge", cat.spec()));
        }
    }
    Ok(())
}

fn check_pivot_bijection(rd: &RankData) -> Result<usize, String> {
    let cat = &rd.cat;
    let mut pivots = 0;
    for &m in cat.indecs() {
        if cat.ext_dim(m, m) != 0 {
            continue;
        }
        let sub = subfactor(cat, m).map_err(|e| format!("{}: pivot {m}: {e}", cat.spec()))?;
        let quotient = sub.enumerate_quotient_ct();
        let mut lifted = BTreeSet::new();
        for t_sub in &quotient {
            let t = lift_ct(cat, &sub, t_sub)
                .map_err(|e| format!("{}: pivot {m}: {e}", cat.spec()))?;
            if !t.contains(m) || !lifted.insert(t) {
                return Err(format!("{}: pivot {m}: lifting is not injective", cat.spec()));
            }
        }
        let containing: BTreeSet<CTObject> = rd
            .objects
            .iter()
            .filter(|t| t.contains(m))
            .cloned()
            .collect();
        if lifted != containing {
            return Err(format!(
                "{}: pivot {m}: lifted {} objects, {} contain the pivot",
                cat.spec(),
                lifted.len(),
                containing.len()
            ));
        }
        pivots += 1;
    }
    Ok(pivots)
}

fn check_a6_example(ranks: &[RankData]) -> Result<(), String> {
    let Some(rd) = ranks
        .iter()
        .find(|rd| rd.cat.spec() == CategorySpec { family: Family::A, rank: 6 })
    else {
        return Ok(());
    };
    let pivot = rd.cat.canon(Cover::new(0, 3));
    let sub = subfactor(&rd.cat, pivot).map_err(|e| e.to_string())?;
    let expected = [
        CategorySpec { family: Family::A, rank: 2 },
        CategorySpec { family: Family::A, rank: 3 },
    ];
    if sub.quotient_spec() != expected {
        return Err(format!(
            "A_6 pivot {pivot}: quotient {:?}, expected A_2 x A_3",
            sub.quotient_spec()
        ));
    }
    Ok(())
}

fn check_triangle_homs(rd: &RankData) -> Result<usize, String> {
    let cat = &rd.cat;
    let alphas: Vec<Indec> = cat
        .indecs()
        .iter()
        .copied()
        .filter(|&x| cat.is_alpha(x))
        .collect();
    let mut pairs = 0;
    for &a1 in &alphas {
        for &a2 in &alphas {
            if a2 == a1 || Ok(a2) == cat.phi(a1) {
                continue;
            }
            let Ok((d1, d2)) = cat.triangle_intersection(a1, a2) else {
                continue;
            };
            for x in d1.members(cat) {
                if cat.hom_dim(a1, x) != 0 {
                    return Err(format!(
                        "{}: hom({a1}, {x}) != 0 inside the first triangle of ({a1}, {a2})",
                        cat.spec()
                    ));
                }
            }
            for x in d2.members(cat) {
                if cat.hom_dim(x, a1) != 0 {
                    return Err(format!(
                        "{}: hom({x}, {a1}) != 0 inside the second triangle of ({a1}, {a2})",
                        cat.spec()
                    ));
                }
            }
            pairs += 1;
        }
    }
    if pairs == 0 {
        return Err(format!("{}: no alpha pairs tested", cat.spec()));
    }
    Ok(pairs)
}

fn check_shape_census(rd: &RankData) -> Result<(), String> {
    let cat = &rd.cat;
    let n = cat.rank();
    for (t, q) in rd.objects.iter().zip(&rd.quivers) {
        let alphas = alpha_summands(cat, t);
        if alphas.len() < 2 {
            return Err(format!("{}: {t} has {} alpha-summands", cat.spec(), alphas.len()));
        }
        let dec = classify(q).map_err(|e| format!("{}: {t}: {e}", cat.spec()))?;
        if dec.shape == Shape::TypeA {
            return Err(format!("{}: {t} classified as TypeA", cat.spec()));
        }
        let shapes: BTreeSet<Shape> = dec.candidates.iter().map(|c| c.shape).collect();
        let paired = alphas.len() == 2 && cat.phi(alphas[0]) == Ok(alphas[1]);
        let wanted = if paired {
            Shape::D1
        } else if alphas.len() == 2 {
            Shape::D2
        } else {
            Shape::D3
        };
        if !shapes.contains(&wanted) {
            return Err(format!(
                "{}: {t} with {} alpha-summands (paired: {paired}) lacks a {wanted} candidate",
                cat.spec(),
                alphas.len()
            ));
        }
        if !paired && alphas.len() == 2 {
            // Spacing law: A_1 in {tau^{n1+1} A_2, tau^{n1+1} phi A_2}
            // with n1 the order of a D2 candidate's first attached triangle.
            let (a1, a2) = (alphas[0], alphas[1]);
            let phi_a2 = cat.phi(a2).map_err(|e| e.to_string())?;
            let spacing_ok = dec
                .candidates
                .iter()
                .filter(|c| c.shape == Shape::D2)
                .any(|c| {
                    let mut sizes: Vec<i64> = c
                        .spikes
                        .iter()
                        .map(|sp| sp.as_ref().map_or(0, |p| p.order() as i64))
                        .collect();
                    sizes.sort_unstable();
                    sizes.iter().any(|&s| {
                        let k = s + 1;
                        k < n as i64
                            && (cat.tau(a2, k) == a1
                                || cat.tau(phi_a2, k) == a1
                                || cat.tau(a1, k) == a2
                                || cat.tau(cat.phi(a1).unwrap(), k) == a2)
                    })
                });
            if !spacing_ok {
                return Err(format!(
                    "{}: {t} violates the shape-2 alpha spacing law",
                    cat.spec()
                ));
            }
        }
    }
    Ok(())
}

fn crit_lemmas(ranks: &[RankData]) -> Result<String, String> {
    let mut pivots = 0;
    let mut alpha_pairs = 0;
    for rd in ranks {
        match rd.cat.family() {
            Family::A => {
                if rd.cat.rank() >= 2 {
                    check_outer_orbit(rd)?;
                    check_connecting(rd)?;
                }
                if rd.cat.rank() <= 6 {
                    check_linear_wedge(rd)?;
                    if rd.cat.rank() >= 2 {
                        pivots += check_pivot_bijection(rd)?;
                    }
                }
            }
            Family::D => {
                pivots += check_pivot_bijection(rd)?;
                alpha_pairs += check_triangle_homs(rd)?;
                check_shape_census(rd)?;
            }
        }
    }
    check_a6_example(ranks)?;
    Ok(format!(
        "{pivots} pivot bijections, {alpha_pairs} alpha-pair triangle splits, shape census exhaustive"
    ))
}

fn crit_roundtrip(ranks: &[RankData]) -> Result<String, String> {
    let mut total = 0usize;
    let mut exact = 0usize;
    for rd in ranks {
        let gab = GabrielOracle::new(&rd.cat);
        let results: Vec<Result<bool, String>> = rd
            .objects
            .par_iter()
            .zip(rd.quivers.par_iter())
            .map(|(t, q)| {
                let dec =
                    classify(q).map_err(|e| format!("{}: {t}: {e}", rd.cat.spec()))?;
                let rec = reconstruct_in(&rd.cat, &gab, q, &dec)
                    .map_err(|e| format!("{}: {t}: {e}", rd.cat.spec()))?;
                Ok(rec.exact)
            })
            .collect();
        for r in results {
            total += 1;
            if r? {
                exact += 1;
            }
        }
    }
    Ok(format!("{total} round trips, {exact} vertex-exact"))
}

fn crit_robustness() -> Result<String, String> {
    use RejectReason as R;
    let cases: Vec<(&str, usize, Vec<(usize, usize)>, R)> = vec![
        ("empty", 0, vec![], R::Empty),
        ("loop", 1, vec![(0, 0)], R::Loop { vertex: 0 }),
        ("two-cycle", 2, vec![(0, 1), (1, 0)], R::TwoCycle { a: 0, b: 1 }),
        ("double-arrow", 2, vec![(0, 1), (0, 1)], R::MultipleArrows { a: 0, b: 1 }),
        ("disconnected", 4, vec![(0, 1), (2, 3)], R::Disconnected),
        (
            "non-oriented-3-cycle",
            3,
            vec![(0, 1), (0, 2), (1, 2)],
            R::BadCycle { len: 3, oriented: false },
        ),
        (
            "non-oriented-4-cycle",
            4,
            vec![(0, 1), (2, 1), (2, 3), (0, 3)],
            R::BadCycle { len: 4, oriented: false },
        ),
        (
            "non-oriented-5-cycle",
            5,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            R::BadCycle { len: 5, oriented: false },
        ),
        (
            "five-neighbours",
            6,
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
            R::TooManyNeighbours { vertex: 0, count: 5 },
        ),
        (
            "three-arm-tree",
            7,
            vec![(0, 1), (1, 2), (0, 3), (3, 4), (5, 6), (6, 0)],
            R::ThreeNeighbourViolation { vertex: 0 },
        ),
        (
            "four-leaf-star",
            5,
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            R::FourNeighbourViolation { vertex: 0 },
        ),
        (
            "triangle-pair-bad-orientation",
            5,
            vec![(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (3, 4)],
            R::BadCycle { len: 3, oriented: false },
        ),
    ];
    let total = cases.len();
    for (name, n, arrows, expected) in cases {
        let q = Quiver::from_arrows(n, &arrows).map_err(|e| format!("{name}: {e}"))?;
        match classify(&q) {
            Ok(dec) => {
                return Err(format!("{name}: accepted as {:?}", dec.shape));
            }
            Err(Error::NotClusterTilted(reason)) => {
                if reason != expected {
                    return Err(format!(
                        "{name}: rejected as {reason}, expected {expected}"
                    ));
                }
            }
            Err(e) => return Err(format!("{name}: unexpected error {e}")),
        }
    }
    Ok(format!("{total} curated quivers rejected with the expected condition"))
}

/// Run the acceptance suite at the given maximum ranks (defaults 8 and 6).
pub fn run(max_rank_a: u32, max_rank_d: u32) -> Result<SelftestReport, Error> {
    let mut specs = Vec::new();
    for n in 1..=max_rank_a {
        specs.push(CategorySpec::new(Family::A, n)?);
    }
    for n in 4..=max_rank_d {
        specs.push(CategorySpec::new(Family::D, n)?);
    }
    let ranks: Vec<RankData> =
        specs.into_iter().map(prepare).collect::<Result<_, _>>()?;
    let criteria: Vec<(&'static str, Box<dyn Fn() -> Result<String, String>>)> = vec![
        ("1-counts", Box::new(|| crit_counts(&ranks))),
        ("2-oracle-agreement", Box::new(|| crit_oracles(&ranks))),
        ("3-relations", Box::new(|| crit_relations(&ranks))),
        ("4-lemma-suite", Box::new(|| crit_lemmas(&ranks))),
        ("5-round-trip", Box::new(|| crit_roundtrip(&ranks))),
        ("6-robustness", Box::new(|| crit_robustness())),
    ];
    let mut outcomes = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        outcomes.push(CriterionOutcome {
            name,
            passed,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(SelftestReport { outcomes })
}
