//! Hom/Ext dimension computations and independent cross-validation oracles.
//!
//! The primary path is the knitting recursion baked into the category tables
//! at build time. Two independent oracles exist purely for validation: a
//! polygon-diagonal model for family A and a mesh-category linear-algebra
//! computation of Gabriel quivers.

use crate::ar_model::{ClusterCategory, Cover, Family, Indec};
use crate::error::Error;
use crate::presentation::Quiver;
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Hom dimension in the orbit category (knitting path).
pub fn hom_dim(cat: &ClusterCategory, x: Indec, y: Indec) -> u32 {
    cat.hom_dim(x, y)
}

/// Ext^1 dimension; equals Hom(X, tau Y).
pub fn ext_dim(cat: &ClusterCategory, x: Indec, y: Indec) -> u32 {
    cat.ext_dim(x, y)
}

/// Bijection between indecomposables of a type-A category and diagonals of
/// an (n+3)-gon, with the interior-crossing predicate. Test oracle only.
pub struct DiagonalOracle {
    ngon: i64,
    to_diag: HashMap<Indec, (i64, i64)>,
}

impl DiagonalOracle {
    pub fn new(cat: &ClusterCategory) -> Result<Self, Error> {
        if cat.family() != Family::A {
            return Err(Error::WrongFamily { expected: Family::A, found: cat.family() });
        }
        let ngon = cat.rank() as i64 + 3;
        let mut to_diag = HashMap::new();
        let mut seen = BTreeMap::new();
        for &v in cat.indecs() {
            // The interval module starting in orbit x with r composition
            // factors corresponds to the diagonal {x, x+r+1} of the polygon.
            let a = v.orbit.rem_euclid(ngon);
            let b = (v.orbit + v.row as i64 + 1).rem_euclid(ngon);
            let d = (a.min(b), a.max(b));
            to_diag.insert(v, d);
            if let Some(prev) = seen.insert(d, v) {
                return Err(Error::integrity(format!(
                    "diagonal map not injective: {prev} and {v} both map to {d:?}"
                )));
            }
        }
        Ok(DiagonalOracle { ngon, to_diag })
    }

    pub fn ngon(&self) -> i64 {
        self.ngon
    }

    pub fn diagonal(&self, x: Indec) -> Option<(i64, i64)> {
        self.to_diag.get(&x).copied()
    }

    /// Whether two diagonals cross in the interior of the polygon.
    pub fn crossing(&self, d1: (i64, i64), d2: (i64, i64)) -> bool {
        let n = self.ngon;
        let between = |p: i64, q: i64, r: i64| {
            (r - p).rem_euclid(n) < (q - p).rem_euclid(n) && r != p && r != q
        };
        let (a, b) = d1;
        let (c, d) = d2;
        (between(a, b, c) != between(a, b, d)) && (between(c, d, a) != between(c, d, b))
    }

    /// Predicted ext dimension: 1 on crossing, else 0.
    pub fn ext_dim(&self, x: Indec, y: Indec) -> u32 {
        let dx = self.to_diag[&x];
        let dy = self.to_diag[&y];
        u32::from(self.crossing(dx, dy))
    }
}

type R = Rational64;

/// Solve sum_i c_i * cols[i] = target over the rationals.
fn solve(cols: &[Vec<R>], target: &[R]) -> Option<Vec<R>> {
    if cols.is_empty() {
        return if target.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let rows = cols[0].len();
    let n = cols.len();
    let mut m: Vec<Vec<R>> = (0..rows)
        .map(|i| {
            let mut row: Vec<R> = cols.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows).find(|&rr| !m[rr][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let pv = m[r][c];
        for v in m[r].iter_mut() {
            *v /= pv;
        }
        for rr in 0..rows {
            if rr != r && !m[rr][c].is_zero() {
                let f = m[rr][c];
                for k in 0..=n {
                    let sub = f * m[r][k];
                    m[rr][k] -= sub;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    for row in m.iter().skip(r) {
        if !row[n].is_zero() {
            return None;
        }
    }
    let mut sol = vec![R::zero(); n];
    for (i, &c) in piv.iter().enumerate() {
        sol[c] = m[i][n];
    }
    Some(sol)
}

fn rank_of(vectors: &[Vec<R>]) -> usize {
    let mut basis: Vec<Vec<R>> = Vec::new();
    for v in vectors {
        if solve(&basis, v).is_none() {
            basis.push(v.clone());
        }
    }
    basis.len()
}

fn unit(n: usize, i: usize) -> Vec<R> {
    let mut v = vec![R::zero(); n];
    v[i] = R::one();
    v
}

/// Mesh-category functor Hom(a, -): dimensions, arrow matrices and one path
/// representative per basis vector, on a window of the universal cover.
struct MeshHammock {
    dim: HashMap<Cover, usize>,
    /// arrow[(u, v)][t] = image in V_v of the t-th basis vector of V_u.
    arrow: HashMap<(Cover, Cover), Vec<Vec<R>>>,
    /// rep[(v, t)] = a path of cover arrows realizing basis vector t of V_v.
    rep: HashMap<(Cover, usize), Vec<(Cover, Cover)>>,
    base: Cover,
}

impl MeshHammock {
    fn new(cat: &ClusterCategory, a: Indec) -> Self {
        let base = cat.lift(a);
        let w = cat.window();
        let mut h = MeshHammock {
            dim: HashMap::new(),
            arrow: HashMap::new(),
            rep: HashMap::new(),
            base,
        };
        for x in base.x..=base.x + w {
            for r in 1..=cat.rank() {
                let z = Cover::new(x, r);
                if z == base {
                    h.dim.insert(z, 1);
                    h.rep.insert((z, 0), Vec::new());
                    continue;
                }
                let preds: Vec<Cover> = cat
                    .preds(z)
                    .into_iter()
                    .filter(|m| h.dim.get(m).copied().unwrap_or(0) > 0)
                    .collect();
                let wtot: usize = preds.iter().map(|m| h.dim[m]).sum();
                if wtot == 0 {
                    continue;
                }
                let tz = Cover::new(x - 1, r);
                let tdim = h.dim.get(&tz).copied().unwrap_or(0);
                // Columns of the mesh map V_tz -> (+) V_m, stacked over preds.
                let mut imcols: Vec<Vec<R>> = Vec::with_capacity(tdim);
                for t in 0..tdim {
                    let mut col = Vec::with_capacity(wtot);
                    for m in &preds {
                        match h.arrow.get(&(tz, *m)) {
                            Some(mat) => col.extend(mat[t].iter().copied()),
                            None => col.extend(std::iter::repeat(R::zero()).take(h.dim[m])),
                        }
                    }
                    imcols.push(col);
                }
                // Quotient basis: standard basis vectors of W independent of
                // the image; they carry path representatives.
                let mut span = imcols.clone();
                let mut chosen = Vec::new();
                for i in 0..wtot {
                    let e = unit(wtot, i);
                    if solve(&span, &e).is_none() {
                        span.push(e);
                        chosen.push(i);
                    }
                }
                let d = chosen.len();
                if d == 0 {
                    continue;
                }
                h.dim.insert(z, d);
                let mut windex = Vec::with_capacity(wtot);
                for m in &preds {
                    for t in 0..h.dim[m] {
                        windex.push((*m, t));
                    }
                }
                for (qi, &i) in chosen.iter().enumerate() {
                    let (m, t) = windex[i];
                    let mut p = h.rep[&(m, t)].clone();
                    p.push((m, z));
                    h.rep.insert((z, qi), p);
                }
                // Projection W -> V_z in the chosen coordinates, giving the
                // arrow matrices m -> z.
                let allcols: Vec<Vec<R>> = imcols
                    .iter()
                    .cloned()
                    .chain(chosen.iter().map(|&i| unit(wtot, i)))
                    .collect();
                let nim = imcols.len();
                let mut off = 0;
                for m in &preds {
                    let dm = h.dim[m];
                    let mut cols = Vec::with_capacity(dm);
                    for t in 0..dm {
                        let e = unit(wtot, off + t);
                        let sol = solve(&allcols, &e)
                            .expect("projection solve must succeed in mesh quotient");
                        cols.push(sol[nim..].to_vec());
                    }
                    h.arrow.insert((*m, z), cols);
                    off += dm;
                }
            }
        }
        h
    }

    fn dim(&self, v: Cover) -> usize {
        self.dim.get(&v).copied().unwrap_or(0)
    }

    /// Apply a path of cover arrows to a vector at its start vertex.
    fn apply_path(&self, start: Cover, vec: &[R], path: &[(Cover, Cover)]) -> (Cover, Vec<R>) {
        let mut cur = start;
        let mut v = vec.to_vec();
        for &(u, w) in path {
            debug_assert_eq!(u, cur);
            let dw = self.dim(w);
            match self.arrow.get(&(u, w)) {
                Some(mat) if dw > 0 => {
                    let mut nv = vec![R::zero(); dw];
                    for (t, col) in mat.iter().enumerate() {
                        if t < v.len() && !v[t].is_zero() {
                            for (i, item) in nv.iter_mut().enumerate() {
                                *item += col[i] * v[t];
                            }
                        }
                    }
                    v = nv;
                }
                _ => {
                    v = vec![R::zero(); dw];
                }
            }
            cur = w;
        }
        (cur, v)
    }
}

/// Gabriel quiver of End(T)^op by explicit exact linear algebra in the mesh
/// category; independent of the mutation-tracking path of `presentation`.
pub struct GabrielOracle<'c> {
    cat: &'c ClusterCategory,
    hammocks: HashMap<Indec, MeshHammock>,
}

impl<'c> GabrielOracle<'c> {
    /// Precompute hammocks for every indecomposable of the category.
    pub fn new(cat: &'c ClusterCategory) -> Self {
        let hammocks = cat
            .indecs()
            .iter()
            .map(|&a| (a, MeshHammock::new(cat, a)))
            .collect();
        GabrielOracle { cat, hammocks }
    }

    /// All cover lifts of y in [lo, hi] together with the deck power taking
    /// the canonical lift of y to them.
    fn lifts_with_power(&self, y: Indec, lo: i64, hi: i64) -> Vec<(Cover, i64)> {
        let cat = self.cat;
        let c = cat.fundamental_period();
        let mut out = Vec::new();
        for branch in 0..2i64 {
            let base = cat.deck(cat.lift(y), branch);
            let k0 = (lo - base.x).div_euclid(c);
            for k in (k0 - 1)..=(k0 + (hi - lo).div_euclid(c) + 2) {
                let xx = base.x + k * c;
                if lo <= xx && xx <= hi {
                    // F^2 = tau^{-c}, so k extra domain shifts are 2k decks.
                    out.push((Cover::new(xx, base.row), branch + 2 * k));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Arrow counts of the Gabriel quiver, with vertex i labeled by
    /// summands[i]. Summands must form a rigid set (typically a CT object).
    pub fn quiver(&self, summands: &[Indec]) -> Result<Quiver, Error> {
        let cat = self.cat;
        let r = summands.len();
        let w = cat.window();
        let hams: Vec<&MeshHammock> = summands
            .iter()
            .map(|s| {
                self.hammocks
                    .get(s)
                    .ok_or_else(|| Error::NotMember(*s))
            })
            .collect::<Result<_, _>>()?;
        // Basis positions of Hom(T_i, T_j): (lift of T_j, basis index).
        let mut lifts: Vec<Vec<Vec<(Cover, i64, usize)>>> = vec![vec![Vec::new(); r]; r];
        for i in 0..r {
            let x0 = summands[i].orbit;
            for j in 0..r {
                for (l, kk) in self.lifts_with_power(summands[j], x0, x0 + w) {
                    for t in 0..hams[i].dim(l) {
                        lifts[i][j].push((l, kk, t));
                    }
                }
            }
        }
        let rad_basis = |i: usize, j: usize| -> Vec<(Cover, i64, usize)> {
            lifts[i][j]
                .iter()
                .copied()
                .filter(|&(l, _, t)| {
                    !(i == j && l == hams[i].base && t == 0)
                })
                .collect()
        };
        let mut arrows = BTreeMap::new();
        for i in 0..r {
            for j in 0..r {
                let rb = rad_basis(i, j);
                let dim_rad = rb.len();
                if dim_rad == 0 {
                    continue;
                }
                // rad^2 spanned by composites through every summand.
                let positions: HashMap<(Cover, usize), usize> = lifts[i][j]
                    .iter()
                    .enumerate()
                    .map(|(idx, &(l, _, t))| ((l, t), idx))
                    .collect();
                let mut comps: Vec<Vec<R>> = Vec::new();
                for k in 0..r {
                    for &(b, kk, s) in &rad_basis(i, k) {
                        for &(cvert, _, t) in &rad_basis(k, j) {
                            let p = &hams[k].rep[&(cvert, t)];
                            if p.is_empty() {
                                continue;
                            }
                            let p2: Vec<(Cover, Cover)> = p
                                .iter()
                                .map(|&(u, v)| (cat.deck(u, kk), cat.deck(v, kk)))
                                .collect();
                            let mut vec0 = vec![R::zero(); hams[i].dim(b)];
                            vec0[s] = R::one();
                            let (end, out) = hams[i].apply_path(b, &vec0, &p2);
                            if out.iter().any(|v| !v.is_zero()) {
                                let mut coords = vec![R::zero(); lifts[i][j].len()];
                                for (t2, val) in out.iter().enumerate() {
                                    if let Some(&pos) = positions.get(&(end, t2)) {
                                        coords[pos] = *val;
                                    }
                                }
                                comps.push(coords);
                            }
                        }
                    }
                }
                let sel: Vec<usize> = rb
                    .iter()
                    .map(|&(l, _, t)| positions[&(l, t)])
                    .collect();
                let comps_sel: Vec<Vec<R>> = comps
                    .iter()
                    .map(|v| sel.iter().map(|&idx| v[idx]).collect())
                    .collect();
                let dim_rad2 = rank_of(&comps_sel);
                let cnt = dim_rad - dim_rad2;
                if cnt > 0 {
                    arrows.insert((i, j), cnt as u32);
                }
            }
        }
        Quiver::new(summands.iter().map(|s| s.to_string()).collect(), arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_model::{CategorySpec, Cover};
    use crate::presentation::reference_seed;

    fn build(family: Family, rank: u32) -> ClusterCategory {
        ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn a2_tables_frozen() {
        let cat = build(Family::A, 2);
        let mut hom = 0;
        let mut ext = 0;
        for &x in cat.indecs() {
            for &y in cat.indecs() {
                hom += cat.hom_dim(x, y);
                ext += cat.ext_dim(x, y);
            }
        }
        assert_eq!((hom, ext), (10, 10));
    }

    #[test]
    fn identity_and_symmetry() {
        for cat in [build(Family::A, 5), build(Family::D, 4)] {
            for &x in cat.indecs() {
                assert_eq!(cat.hom_dim(x, x), 1);
                for &y in cat.indecs() {
                    assert_eq!(cat.ext_dim(x, y), cat.ext_dim(y, x));
                    assert_eq!(cat.ext_dim(x, y), cat.hom_dim(x, cat.tau(y, 1)));
                }
            }
        }
    }

    #[test]
    fn diagonal_oracle_matches_knitting() {
        for n in 1..=6 {
            let cat = build(Family::A, n);
            let oracle = DiagonalOracle::new(&cat).unwrap();
            assert_eq!(oracle.ngon(), n as i64 + 3);
            for &x in cat.indecs() {
                for &y in cat.indecs() {
                    assert_eq!(oracle.ext_dim(x, y), cat.ext_dim(x, y), "({x}, {y}) in A_{n}");
                }
            }
        }
    }

    #[test]
    fn diagonal_oracle_rejects_family_d() {
        assert!(DiagonalOracle::new(&build(Family::D, 4)).is_err());
    }

    #[test]
    fn gabriel_quiver_of_reference_seed_is_reference_orientation() {
        let a4 = build(Family::A, 4);
        let gab = GabrielOracle::new(&a4);
        let q = gab.quiver(&reference_seed(&a4)).unwrap();
        let expected: Vec<((usize, usize), u32)> =
            vec![((0, 1), 1), ((1, 2), 1), ((2, 3), 1)];
        assert_eq!(q.arrows().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), expected);
        let d5 = build(Family::D, 5);
        let gab = GabrielOracle::new(&d5);
        let q = gab.quiver(&reference_seed(&d5)).unwrap();
        let expected: Vec<((usize, usize), u32)> =
            vec![((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((2, 4), 1)];
        assert_eq!(q.arrows().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), expected);
    }

    #[test]
    fn gabriel_quiver_of_central_triangle() {
        let a3 = build(Family::A, 3);
        let gab = GabrielOracle::new(&a3);
        let t: Vec<_> = [0, 2, 4]
            .iter()
            .map(|&x| a3.canon(Cover::new(x, 1)))
            .collect();
        let q = gab.quiver(&t).unwrap();
        assert_eq!(q.arrow_count(), 3);
        for v in 0..3 {
            assert_eq!(q.out(v).len(), 1);
            assert_eq!(q.inn(v).len(), 1);
        }
    }
}
