//! Quotient translation quiver model of the cluster category.
//!
//! The universal cover is the translation quiver ZQ with vertices `(x, row)`.
//! For family A the rows form a linear chain; for family D the rows
//! `1..rank-2` form a chain and the two top rows (the alpha rows) attach to
//! row `rank-2`. The cluster category is the quotient by the deck
//! transformation `F`, and every indecomposable is stored as its canonical
//! fundamental-domain representative.

use crate::error::Error;
use std::collections::{BTreeSet, HashMap};

/// Dynkin family of the underlying hereditary algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
        }
    }
}

/// Family plus rank (the number of isoclasses of simple modules).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategorySpec {
    pub family: Family,
    pub rank: u32,
}

impl CategorySpec {
    /// Validated constructor: A requires rank >= 1, D requires rank >= 4.
    pub fn new(family: Family, rank: u32) -> Result<Self, Error> {
        match family {
            Family::A if rank >= 1 => Ok(CategorySpec { family, rank }),
            Family::A => Err(Error::InvalidSpec {
                family,
                rank,
                msg: "family A requires rank >= 1".into(),
            }),
            Family::D if rank >= 4 => Ok(CategorySpec { family, rank }),
            Family::D => Err(Error::InvalidSpec {
                family,
                rank,
                msg: "family D requires rank >= 4 (use normalize for ranks 2 and 3)".into(),
            }),
        }
    }

    /// Normalize degenerate D ranks: D_2 becomes A_1 x A_1 and D_3 becomes
    /// A_3. Returns the list of specs plus a note when normalization applied.
    pub fn normalize(family: Family, rank: u32) -> Result<(Vec<CategorySpec>, Option<String>), Error> {
        match (family, rank) {
            (Family::D, 2) => Ok((
                vec![
                    CategorySpec::new(Family::A, 1)?,
                    CategorySpec::new(Family::A, 1)?,
                ],
                Some("D_2 normalized to A_1 x A_1".into()),
            )),
            (Family::D, 3) => Ok((
                vec![CategorySpec::new(Family::A, 3)?],
                Some("D_3 normalized to A_3".into()),
            )),
            _ => Ok((vec![CategorySpec::new(family, rank)?], None)),
        }
    }

    /// Expected indecomposable count: n(n+3)/2 for A_n and n^2 for D_n.
    pub fn expected_indec_count(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            Family::A => n * (n + 3) / 2,
            Family::D => n * n,
        }
    }
}

impl std::fmt::Display for CategorySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

/// Canonical coordinate of an indecomposable: tau-orbit position and row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indec {
    pub orbit: i64,
    pub row: u32,
}

impl Indec {
    pub fn new(orbit: i64, row: u32) -> Self {
        Indec { orbit, row }
    }
}

impl std::fmt::Display for Indec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.orbit, self.row)
    }
}

/// Vertex of the universal cover ZQ (not reduced modulo F).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover {
    pub x: i64,
    pub row: u32,
}

impl Cover {
    pub fn new(x: i64, row: u32) -> Self {
        Cover { x, row }
    }
}

/// Wedge-shaped region of the AR-quiver equivalent to mod of a linear A_m
/// quiver, stored as apex plus order; members are derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleRegion {
    order: u32,
    apex: Option<Cover>,
}

impl TriangleRegion {
    pub fn empty() -> Self {
        TriangleRegion { order: 0, apex: None }
    }

    pub(crate) fn from_apex(apex: Cover) -> Self {
        TriangleRegion { order: apex.row, apex: Some(apex) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn apex(&self) -> Option<Cover> {
        self.apex
    }

    /// The corner object of the region, if nonempty.
    pub fn top(&self, cat: &ClusterCategory) -> Option<Indec> {
        self.apex.map(|a| cat.canon(a))
    }

    /// All member objects; size is order(order+1)/2.
    pub fn members(&self, cat: &ClusterCategory) -> BTreeSet<Indec> {
        let mut out = BTreeSet::new();
        if let Some(apex) = self.apex {
            let m = self.order as i64;
            for i in 0..m {
                for r in 1..=(m - i) {
                    out.insert(cat.canon(Cover::new(apex.x + i, r as u32)));
                }
            }
        }
        out
    }

    /// Cover coordinates of the members, relative to the stored apex lift.
    pub fn cover_members(&self) -> Vec<Cover> {
        let mut out = Vec::new();
        if let Some(apex) = self.apex {
            let m = self.order as i64;
            for i in 0..m {
                for r in 1..=(m - i) {
                    out.push(Cover::new(apex.x + i, r as u32));
                }
            }
        }
        out
    }
}

/// The full combinatorial model: indecomposables, tau, AR arrows and the
/// Hom/Ext dimension tables.
pub struct ClusterCategory {
    spec: CategorySpec,
    /// F^2 = tau^{-period}; also the x-span of the fundamental domain.
    deck_tau_power: i64,
    /// Whether the deck transformation swaps the two alpha rows (family D).
    d_swap: bool,
    indecs: Vec<Indec>,
    index: HashMap<Indec, usize>,
    arrows: Vec<(Indec, Indec)>,
    hom: Vec<Vec<u32>>,
    ext: Vec<Vec<u32>>,
}

impl ClusterCategory {
    /// Build the full model for a validated spec.
    pub fn build(spec: CategorySpec) -> Result<Self, Error> {
        let n = spec.rank;
        let deck_tau_power = match spec.family {
            Family::A => n as i64 + 3,
            Family::D => 2 * n as i64,
        };
        // In family D the deck transformation swaps the two alpha rows
        // exactly when the rank is odd; validated against 2-CY symmetry and
        // cluster-tilting counts, and re-checked after table fill below.
        let d_swap = spec.family == Family::D && n % 2 == 1;
        let mut cat = ClusterCategory {
            spec,
            deck_tau_power,
            d_swap,
            indecs: Vec::new(),
            index: HashMap::new(),
            arrows: Vec::new(),
            hom: Vec::new(),
            ext: Vec::new(),
        };
        let mut set = BTreeSet::new();
        for x in 0..2 * deck_tau_power {
            for r in 1..=n {
                set.insert(cat.canon(Cover::new(x, r)));
            }
        }
        cat.indecs = set.into_iter().collect();
        if cat.indecs.len() != spec.expected_indec_count() {
            return Err(Error::integrity(format!(
                "indec count {} differs from expected {} for {}",
                cat.indecs.len(),
                spec.expected_indec_count(),
                spec
            )));
        }
        cat.index = cat
            .indecs
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        cat.arrows = cat.compute_arrows();
        cat.fill_tables()?;
        cat.check_two_cy()?;
        Ok(cat)
    }

    pub fn spec(&self) -> CategorySpec {
        self.spec
    }

    pub fn rank(&self) -> u32 {
        self.spec.rank
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn indecs(&self) -> &[Indec] {
        &self.indecs
    }

    pub fn index_of(&self, x: Indec) -> Option<usize> {
        self.index.get(&x).copied()
    }

    /// Irreducible-map arrows of the AR-quiver of the quotient.
    pub fn ar_arrows(&self) -> &[(Indec, Indec)] {
        &self.arrows
    }

    /// x-period of the fundamental domain (F^2 = tau^{-p} with this p).
    pub fn fundamental_period(&self) -> i64 {
        self.deck_tau_power
    }

    fn sigma(&self, r: u32) -> u32 {
        let n = self.spec.rank;
        match self.spec.family {
            Family::A => n + 1 - r,
            Family::D => {
                if self.d_swap && r >= n - 1 {
                    2 * n - 1 - r
                } else {
                    r
                }
            }
        }
    }

    fn dshift(&self, r: u32) -> i64 {
        match self.spec.family {
            Family::A => r as i64 + 1,
            Family::D => self.spec.rank as i64,
        }
    }

    /// k-th power of the deck transformation F on the cover.
    pub fn deck(&self, v: Cover, k: i64) -> Cover {
        let mut v = v;
        if k >= 0 {
            for _ in 0..k {
                v = Cover::new(v.x + self.dshift(v.row), self.sigma(v.row));
            }
        } else {
            for _ in 0..-k {
                let r0 = self.sigma(v.row);
                v = Cover::new(v.x - self.dshift(r0), r0);
            }
        }
        v
    }

    /// Canonical fundamental-domain representative of a cover vertex.
    pub fn canon(&self, v: Cover) -> Indec {
        let c = self.deck_tau_power;
        let a = (v.row, v.x.rem_euclid(c));
        let f = self.deck(v, 1);
        let b = (f.row, f.x.rem_euclid(c));
        let (row, x) = a.min(b);
        Indec::new(x, row)
    }

    /// Canonical cover lift of an indecomposable.
    pub fn lift(&self, x: Indec) -> Cover {
        Cover::new(x.orbit, x.row)
    }

    /// k-fold AR-translate.
    pub fn tau(&self, x: Indec, k: i64) -> Indec {
        self.canon(Cover::new(x.orbit - k, x.row))
    }

    /// Period of X under tau (computed by iteration, never assumed).
    pub fn tau_period(&self, x: Indec) -> u32 {
        let mut y = self.tau(x, 1);
        let mut p = 1;
        while y != x {
            y = self.tau(y, 1);
            p += 1;
        }
        p
    }

    /// Whether X sits in one of the two top rows of a family-D category.
    pub fn is_alpha(&self, x: Indec) -> bool {
        self.spec.family == Family::D && x.row >= self.spec.rank - 1
    }

    /// The unique other alpha-object in the same mesh middle term.
    pub fn phi(&self, a: Indec) -> Result<Indec, Error> {
        if self.spec.family != Family::D {
            return Err(Error::WrongFamily { expected: Family::D, found: self.spec.family });
        }
        if !self.is_alpha(a) {
            return Err(Error::NotAlpha(a));
        }
        let n = self.spec.rank;
        Ok(self.canon(Cover::new(a.orbit, 2 * n - 1 - a.row)))
    }

    /// Cover vertices with an arrow into v.
    pub(crate) fn preds(&self, v: Cover) -> Vec<Cover> {
        let n = self.spec.rank;
        let (x, r) = (v.x, v.row);
        let mut out = Vec::with_capacity(3);
        match self.spec.family {
            Family::A => {
                if r > 1 {
                    out.push(Cover::new(x, r - 1));
                }
                if r + 1 <= n {
                    out.push(Cover::new(x - 1, r + 1));
                }
            }
            Family::D => {
                if r <= n - 3 {
                    if r > 1 {
                        out.push(Cover::new(x, r - 1));
                    }
                    out.push(Cover::new(x - 1, r + 1));
                } else if r == n - 2 {
                    if n >= 4 && n - 3 >= 1 {
                        out.push(Cover::new(x, n - 3));
                    }
                    out.push(Cover::new(x - 1, n - 1));
                    out.push(Cover::new(x - 1, n));
                } else {
                    out.push(Cover::new(x, n - 2));
                }
            }
        }
        out
    }

    /// Cover vertices receiving an arrow from v.
    pub(crate) fn succs(&self, v: Cover) -> Vec<Cover> {
        let n = self.spec.rank;
        let (x, r) = (v.x, v.row);
        let mut out = Vec::with_capacity(3);
        match self.spec.family {
            Family::A => {
                if r + 1 <= n {
                    out.push(Cover::new(x, r + 1));
                }
                if r > 1 {
                    out.push(Cover::new(x + 1, r - 1));
                }
            }
            Family::D => {
                if r <= n - 3 {
                    if r + 1 <= n - 2 {
                        out.push(Cover::new(x, r + 1));
                    } else {
                        out.push(Cover::new(x, n - 1));
                        out.push(Cover::new(x, n));
                    }
                    if r > 1 {
                        out.push(Cover::new(x + 1, r - 1));
                    }
                } else if r == n - 2 {
                    out.push(Cover::new(x, n - 1));
                    out.push(Cover::new(x, n));
                    if r > 1 {
                        out.push(Cover::new(x + 1, r - 1));
                    }
                } else {
                    out.push(Cover::new(x + 1, n - 2));
                }
            }
        }
        out
    }

    fn compute_arrows(&self) -> Vec<(Indec, Indec)> {
        let mut set = BTreeSet::new();
        for &v in &self.indecs {
            let lift = self.lift(v);
            for s in self.succs(lift) {
                set.insert((v, self.canon(s)));
            }
        }
        set.into_iter().collect()
    }

    /// Knitting window: wide enough for all hammocks at this rank.
    pub(crate) fn window(&self) -> i64 {
        6 * self.spec.rank as i64 + 12
    }

    /// Hammock of Hom_D(X, -) on the cover, starting at the canonical lift of
    /// X. Asserts vanishing at the window boundary rather than truncating.
    pub(crate) fn hammock(&self, x: Indec) -> Result<HashMap<Cover, u32>, Error> {
        let start = self.lift(x);
        let w = self.window();
        let mut h: HashMap<Cover, u32> = HashMap::new();
        for cx in start.x..=start.x + w {
            for r in 1..=self.spec.rank {
                let z = Cover::new(cx, r);
                if z == start {
                    h.insert(z, 1);
                    continue;
                }
                let mut s: i64 = self
                    .preds(z)
                    .iter()
                    .map(|m| *h.get(m).unwrap_or(&0) as i64)
                    .sum();
                s -= *h.get(&Cover::new(cx - 1, r)).unwrap_or(&0) as i64;
                if s > 0 {
                    h.insert(z, s as u32);
                }
            }
        }
        for cx in (start.x + w - 1)..=(start.x + w) {
            for r in 1..=self.spec.rank {
                if h.get(&Cover::new(cx, r)).copied().unwrap_or(0) != 0 {
                    return Err(Error::integrity(format!(
                        "hammock window overflow for {x} in {}",
                        self.spec
                    )));
                }
            }
        }
        Ok(h)
    }

    /// All cover lifts of Y with x-coordinate in [lo, hi].
    pub(crate) fn cover_lifts(&self, y: Indec, lo: i64, hi: i64) -> Vec<Cover> {
        let mut out = BTreeSet::new();
        let c = self.deck_tau_power;
        for branch in 0..2 {
            let base = if branch == 0 {
                self.lift(y)
            } else {
                self.deck(self.lift(y), 1)
            };
            let k0 = (lo - base.x).div_euclid(c);
            for k in (k0 - 1)..=(k0 + (hi - lo).div_euclid(c) + 2) {
                let xx = base.x + k * c;
                if lo <= xx && xx <= hi {
                    out.insert(Cover::new(xx, base.row));
                }
            }
        }
        out.into_iter().collect()
    }

    fn fill_tables(&mut self) -> Result<(), Error> {
        let m = self.indecs.len();
        let w = self.window();
        let mut hom = vec![vec![0u32; m]; m];
        for i in 0..m {
            let x = self.indecs[i];
            let h = self.hammock(x)?;
            let lo = x.orbit;
            for j in 0..m {
                let y = self.indecs[j];
                hom[i][j] = self
                    .cover_lifts(y, lo, lo + w)
                    .iter()
                    .map(|l| h.get(l).copied().unwrap_or(0))
                    .sum();
            }
        }
        let mut ext = vec![vec![0u32; m]; m];
        for i in 0..m {
            for j in 0..m {
                let ty = self.tau(self.indecs[j], 1);
                ext[i][j] = hom[i][self.index[&ty]];
            }
        }
        self.hom = hom;
        self.ext = ext;
        Ok(())
    }

    fn check_two_cy(&self) -> Result<(), Error> {
        let m = self.indecs.len();
        for i in 0..m {
            if self.hom[i][i] != 1 {
                return Err(Error::integrity(format!(
                    "endomorphism dimension of {} is {}, expected 1",
                    self.indecs[i], self.hom[i][i]
                )));
            }
            for j in 0..m {
                if self.ext[i][j] != self.ext[j][i] {
                    return Err(Error::integrity(format!(
                        "ext table not symmetric at ({}, {})",
                        self.indecs[i], self.indecs[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Hom dimension in the orbit category.
    pub fn hom_dim(&self, x: Indec, y: Indec) -> u32 {
        self.hom[self.index[&x]][self.index[&y]]
    }

    /// Ext^1 dimension; equals hom_dim(X, tau Y).
    pub fn ext_dim(&self, x: Indec, y: Indec) -> u32 {
        self.ext[self.index[&x]][self.index[&y]]
    }

    pub(crate) fn ext_by_index(&self, i: usize, j: usize) -> u32 {
        self.ext[i][j]
    }

    /// The wedge region with the given apex object.
    pub fn triangle_region(&self, top: Indec) -> Result<TriangleRegion, Error> {
        if self.index_of(top).is_none() {
            return Err(Error::NotMember(top));
        }
        if self.spec.family == Family::D && top.row > self.spec.rank - 2 {
            return Err(Error::InvalidApex { top, row: top.row });
        }
        Ok(TriangleRegion::from_apex(self.lift(top)))
    }

    pub(crate) fn region_at(&self, apex: Cover) -> TriangleRegion {
        if apex.row == 0 {
            TriangleRegion::empty()
        } else {
            TriangleRegion::from_apex(apex)
        }
    }

    /// The regions B(A), B_*(A) and _*B(A) around an alpha-object.
    #[allow(clippy::type_complexity)]
    pub fn b_regions(
        &self,
        a: Indec,
    ) -> Result<(BTreeSet<Indec>, BTreeSet<Indec>, BTreeSet<Indec>), Error> {
        let phi_a = self.phi(a)?;
        let mut b = BTreeSet::new();
        let mut b_star = BTreeSet::new();
        let mut star_b = BTreeSet::new();
        for &x in &self.indecs {
            if self.is_alpha(x) || self.ext_dim(x, a) != 0 || self.ext_dim(x, phi_a) != 0 {
                continue;
            }
            b.insert(x);
            if self.hom_dim(x, a) == 0 {
                b_star.insert(x);
            }
            if self.hom_dim(a, x) == 0 {
                star_b.insert(x);
            }
        }
        Ok((b, b_star, star_b))
    }

    /// For alpha-objects with A1 in {tau^k A2, tau^k phi A2}, the two
    /// disjoint triangles of orders k-1 and rank-k-1 forming B(A1) n B(A2).
    pub fn triangle_intersection(
        &self,
        a1: Indec,
        a2: Indec,
    ) -> Result<(TriangleRegion, TriangleRegion), Error> {
        let n = self.spec.rank;
        let phi_a1 = self.phi(a1)?;
        self.phi(a2)?;
        let mut found = None;
        for k in 1..n as i64 {
            if self.tau(a2, k) == a1 || self.tau(self.phi(a2)?, k) == a1 {
                found = Some(k);
                break;
            }
        }
        let Some(k) = found else {
            return Err(Error::NotTauRelated { a1, a2 });
        };
        // A2 = tau^{-k} A1 up to phi; the triangle below A1 has order k-1 and
        // the triangle below A2 has order n-k-1.
        let d1 = self.region_at(Cover::new(a1.orbit, (k - 1) as u32));
        let d2 = self.region_at(Cover::new(a1.orbit + k, n - 1 - k as u32));
        // Integrity: the two wedges partition B(A1) n B(A2).
        let (b1, _, _) = self.b_regions(a1)?;
        let (b2, _, _) = self.b_regions(a2)?;
        let inter: BTreeSet<Indec> = b1.intersection(&b2).copied().collect();
        let m1 = d1.members(self);
        let m2 = d2.members(self);
        if !m1.is_disjoint(&m2)
            || m1.union(&m2).copied().collect::<BTreeSet<_>>() != inter
        {
            return Err(Error::integrity(format!(
                "triangle intersection of {a1}, {a2} (phi {phi_a1}) does not split B-regions"
            )));
        }
        Ok((d1, d2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(family: Family, rank: u32) -> ClusterCategory {
        ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(CategorySpec::new(Family::A, 0).is_err());
        assert!(CategorySpec::new(Family::D, 3).is_err());
        assert!(CategorySpec::new(Family::A, 1).is_ok());
        assert!(CategorySpec::new(Family::D, 4).is_ok());
    }

    #[test]
    fn degenerate_d_ranks_normalize() {
        let (specs, note) = CategorySpec::normalize(Family::D, 2).unwrap();
        assert_eq!(specs, vec![
            CategorySpec { family: Family::A, rank: 1 },
            CategorySpec { family: Family::A, rank: 1 },
        ]);
        assert!(note.is_some());
        let (specs, note) = CategorySpec::normalize(Family::D, 3).unwrap();
        assert_eq!(specs, vec![CategorySpec { family: Family::A, rank: 3 }]);
        assert!(note.is_some());
        let (specs, note) = CategorySpec::normalize(Family::A, 5).unwrap();
        assert_eq!(specs.len(), 1);
        assert!(note.is_none());
    }

    #[test]
    fn indec_counts() {
        for n in 1..=8 {
            assert_eq!(build(Family::A, n).indecs().len(), (n * (n + 3) / 2) as usize);
        }
        for n in 4..=6 {
            assert_eq!(build(Family::D, n).indecs().len(), (n * n) as usize);
        }
    }

    #[test]
    fn canonical_representatives_are_stable() {
        for cat in [build(Family::A, 5), build(Family::D, 5)] {
            for &x in cat.indecs() {
                assert_eq!(cat.canon(cat.lift(x)), x);
                assert_eq!(cat.canon(cat.deck(cat.lift(x), 1)), x);
                assert_eq!(cat.canon(cat.deck(cat.lift(x), -1)), x);
            }
        }
    }

    #[test]
    fn deck_squared_is_inverse_translate() {
        for cat in [build(Family::A, 4), build(Family::D, 5), build(Family::D, 6)] {
            let c = cat.fundamental_period();
            for &x in cat.indecs() {
                let v = cat.lift(x);
                assert_eq!(cat.deck(v, 2), Cover::new(v.x + c, v.row));
            }
        }
    }

    #[test]
    fn tau_periods() {
        let a3 = build(Family::A, 3);
        assert_eq!(a3.tau_period(a3.canon(Cover::new(0, 1))), 6);
        assert_eq!(a3.tau_period(a3.canon(Cover::new(0, 2))), 3);
        let d4 = build(Family::D, 4);
        assert_eq!(d4.tau_period(d4.canon(Cover::new(0, 1))), 4);
        let d5 = build(Family::D, 5);
        assert_eq!(d5.tau_period(d5.canon(Cover::new(0, 4))), 10);
    }

    #[test]
    fn tau_round_trips() {
        let cat = build(Family::D, 5);
        for &x in cat.indecs() {
            for k in -7..=7 {
                assert_eq!(cat.tau(cat.tau(x, k), -k), x);
            }
        }
    }

    #[test]
    fn phi_is_a_fixed_point_free_involution_on_alphas() {
        for cat in [build(Family::D, 4), build(Family::D, 5)] {
            for &x in cat.indecs() {
                if cat.is_alpha(x) {
                    let y = cat.phi(x).unwrap();
                    assert_ne!(x, y);
                    assert_eq!(cat.phi(y).unwrap(), x);
                } else {
                    assert_eq!(cat.phi(x), Err(Error::NotAlpha(x)));
                }
            }
        }
        let a = build(Family::A, 3);
        assert!(matches!(
            a.phi(a.canon(Cover::new(0, 1))),
            Err(Error::WrongFamily { .. })
        ));
    }

    #[test]
    fn triangle_region_shapes() {
        let d5 = build(Family::D, 5);
        let bad = d5.canon(Cover::new(0, 4));
        assert!(matches!(d5.triangle_region(bad), Err(Error::InvalidApex { .. })));
        let ok = d5.canon(Cover::new(0, 3));
        let region = d5.triangle_region(ok).unwrap();
        assert_eq!(region.order(), 3);
        assert_eq!(region.members(&d5).len(), 6);
        assert_eq!(region.top(&d5), Some(ok));
        assert_eq!(TriangleRegion::empty().members(&d5).len(), 0);
    }

    #[test]
    fn b_region_sizes_d4() {
        let d4 = build(Family::D, 4);
        let a = d4.canon(Cover::new(0, 3));
        let (b, b_star, star_b) = d4.b_regions(a).unwrap();
        assert_eq!((b.len(), b_star.len(), star_b.len()), (5, 3, 3));
        assert!(b_star.is_subset(&b) && star_b.is_subset(&b));
    }

    #[test]
    fn triangle_intersection_orders_d5() {
        let d5 = build(Family::D, 5);
        let a1 = d5.canon(Cover::new(0, 4));
        for k in 1..5i64 {
            let a2 = d5.tau(a1, -k);
            let (t1, t2) = d5.triangle_intersection(a1, a2).unwrap();
            assert_eq!(t1.order() as i64, k - 1);
            assert_eq!(t2.order() as i64, 4 - k);
        }
        assert!(matches!(
            d5.triangle_intersection(a1, a1),
            Err(Error::NotTauRelated { .. })
        ));
    }
}
