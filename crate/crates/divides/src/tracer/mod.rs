//! Exact tracing of the divide curve inside a staircase region.
//!
//! The ambient curve system is the grid of all slope-±1 lines through even
//! lattice points. Each unit cell of the plane carries exactly one segment of
//! that grid: the cell diagonal joining its two even corners. The divide of a
//! region is the union of the diagonals of its cells, so tracing reduces to a
//! deterministic walk on even lattice points:
//!
//! * degree 1 — an arc terminal (even convex corner of the region);
//! * degree 2 — a boundary reflection, continue along the other diagonal;
//! * degree 4 — a transversal double point, pass straight through;
//! * degree 3 — an even concave corner; the curve is not generic there.

pub mod intersect;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::region::{LatticePoint, Region, StairType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("concave corner at even point {0} pinches the curve; translate the region first")]
    NonGenericConcavePoint(LatticePoint),
}

/// One immersed component of a divide.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Component {
    pub closed: bool,
    /// Even lattice points in traversal order: terminals, reflections and
    /// crossings. Consecutive points differ by a diagonal unit step. Closed
    /// components list the starting point once; the final segment back to it
    /// is implied.
    pub vertices: Vec<LatticePoint>,
}

impl Component {
    /// Number of diagonal segments traversed.
    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }
}

/// A traced divide: its immersed components and the crossing set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Divide {
    /// Open arcs first (ordered by starting terminal), then closed loops
    /// (ordered by starting vertex).
    pub components: Vec<Component>,
    /// Points where two branches cross transversally — exactly the even
    /// lattice points interior to the region.
    pub double_points: BTreeSet<LatticePoint>,
}

impl Divide {
    /// `(arcs, circles)` — counts of open and closed components.
    pub fn component_profile(&self) -> (usize, usize) {
        let arcs = self.components.iter().filter(|c| !c.closed).count();
        (arcs, self.components.len() - arcs)
    }

    pub fn double_point_count(&self) -> usize {
        self.double_points.len()
    }

    /// Is the divide a single open arc? Exactly then its link is a knot.
    pub fn is_single_arc(&self) -> bool {
        self.component_profile() == (1, 0)
    }

    /// Component count of the associated link: an arc lifts to one circle of
    /// tangent directions, a closed component to two (one per orientation).
    pub fn link_component_count(&self) -> usize {
        let (arcs, circles) = self.component_profile();
        arcs + 2 * circles
    }
}

/// Trace the divide of a region. The region must already be generic: every
/// concave corner at an odd point (see [`Region::normalize_parity`]).
pub fn trace(region: &Region) -> Result<Divide, TraceError> {
    if let Some(&p) = region.concave_points().iter().find(|p| p.is_even()) {
        return Err(TraceError::NonGenericConcavePoint(p));
    }
    trace_cells(&region.cells().into_iter().collect())
}

/// The four diagonal directions in seed-preference order.
const DIRS: [(i64, i64); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];

/// The unit cell traversed when leaving `p` in direction `d`.
fn cell_from(p: LatticePoint, d: (i64, i64)) -> (i64, i64) {
    (p.x + (d.0 - 1) / 2, p.y + (d.1 - 1) / 2)
}

/// Endpoints of the diagonal of cell `(i, j)` — its two even corners.
fn diagonal(i: i64, j: i64) -> (LatticePoint, LatticePoint) {
    if (i + j).rem_euclid(2) == 0 {
        (LatticePoint::new(i, j), LatticePoint::new(i + 1, j + 1))
    } else {
        (LatticePoint::new(i + 1, j), LatticePoint::new(i, j + 1))
    }
}

/// Trace the diagonals of an arbitrary finite cell set. Region tracing, the
/// mirror tests and future generalized inputs all funnel through here.
pub(crate) fn trace_cells(cells: &BTreeSet<(i64, i64)>) -> Result<Divide, TraceError> {
    let mut degree: BTreeMap<LatticePoint, u8> = BTreeMap::new();
    for &(i, j) in cells {
        let (p, q) = diagonal(i, j);
        *degree.entry(p).or_insert(0) += 1;
        *degree.entry(q).or_insert(0) += 1;
    }
    if let Some((&p, _)) = degree.iter().find(|&(_, &d)| d == 3) {
        return Err(TraceError::NonGenericConcavePoint(p));
    }

    let mut unused = cells.clone();
    let mut components = Vec::new();
    let mut double_points = BTreeSet::new();

    // arcs, from each terminal in lattice order
    let terminals: Vec<LatticePoint> = degree
        .iter()
        .filter(|&(_, &d)| d == 1)
        .map(|(&p, _)| p)
        .collect();
    for &t in &terminals {
        if let Some(d) = DIRS.into_iter().find(|&d| unused.contains(&cell_from(t, d))) {
            components.push(walk(t, d, cells, &degree, &mut unused, &mut double_points));
        }
    }

    // circles, from the smallest vertex still carrying an unused diagonal
    while !unused.is_empty() {
        let seed = unused
            .iter()
            .map(|&(i, j)| {
                let (p, q) = diagonal(i, j);
                p.min(q)
            })
            .min()
            .unwrap();
        let d = DIRS
            .into_iter()
            .find(|&d| unused.contains(&cell_from(seed, d)))
            .expect("seed vertex has an unused diagonal");
        components.push(walk(seed, d, cells, &degree, &mut unused, &mut double_points));
    }

    Ok(Divide { components, double_points })
}

/// Follow the curve from `start` leaving in direction `d`, consuming each
/// diagonal, until a terminal is reached or the loop closes.
fn walk(
    start: LatticePoint,
    mut d: (i64, i64),
    cells: &BTreeSet<(i64, i64)>,
    degree: &BTreeMap<LatticePoint, u8>,
    unused: &mut BTreeSet<(i64, i64)>,
    double_points: &mut BTreeSet<LatticePoint>,
) -> Component {
    let mut vertices = vec![start];
    let mut p = start;
    loop {
        let consumed = unused.remove(&cell_from(p, d));
        debug_assert!(consumed, "walk re-entered a consumed diagonal");
        p = LatticePoint::new(p.x + d.0, p.y + d.1);
        vertices.push(p);
        match degree[&p] {
            1 => return Component { closed: false, vertices },
            2 => {
                // reflection: the arrival edge lies in direction -d; leave
                // via the vertex's other diagonal
                d = DIRS
                    .into_iter()
                    .find(|&e| e != (-d.0, -d.1) && cells.contains(&cell_from(p, e)))
                    .expect("degree-2 vertex has a second diagonal");
            }
            4 => {
                // transversal crossing: stay on the straight branch
                double_points.insert(p);
            }
            deg => unreachable!("degree {deg} vertex survived the pre-scan"),
        }
        if !unused.contains(&cell_from(p, d)) {
            // the forward diagonal was consumed first: the loop has closed
            let back_at_start = vertices.pop();
            debug_assert_eq!(back_at_start, Some(start));
            return Component { closed: true, vertices };
        }
    }
}

/// One census line: a staircase and its traced component profile, or `None`
/// when the concave corners have mixed parity so no translation is generic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusRow {
    pub stair: StairType,
    pub profile: Option<(usize, usize)>,
}

/// Trace every staircase within the bounds and record its component profile.
pub fn component_census(max_n: usize, max_dim: i64) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    crate::region::for_each_stair(max_n, max_dim, |s| {
        let profile = Region::new(s.clone()).normalize_parity().ok().map(|r| {
            trace(&r)
                .expect("parity-normalized regions trace cleanly")
                .component_profile()
        });
        rows.push(CensusRow { stair: s.clone(), profile });
    });
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::for_each_stair;

    fn stair(entries: &[(i64, i64)]) -> StairType {
        StairType::new(entries.to_vec()).unwrap()
    }

    fn traced(entries: &[(i64, i64)]) -> Divide {
        let region = Region::new(stair(entries)).normalize_parity().unwrap();
        trace(&region).unwrap()
    }

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    /// Independent re-derivation of the component profile: the successor map
    /// on directed diagonals (with terminals bouncing) is a permutation whose
    /// orbit count equals arcs + 2·circles. No consumption set, no seeding
    /// order — structurally unrelated to `walk`.
    fn orbit_profile(cells: &BTreeSet<(i64, i64)>) -> (usize, usize, usize) {
        let mut degree: BTreeMap<LatticePoint, u8> = BTreeMap::new();
        for &(i, j) in cells {
            let (p, q) = diagonal(i, j);
            *degree.entry(p).or_insert(0) += 1;
            *degree.entry(q).or_insert(0) += 1;
        }
        let step = |p: LatticePoint, d: (i64, i64)| -> (LatticePoint, (i64, i64)) {
            let q = pt(p.x + d.0, p.y + d.1);
            match degree[&q] {
                1 => (q, (-d.0, -d.1)),
                2 => {
                    let e = DIRS
                        .into_iter()
                        .find(|&e| e != (-d.0, -d.1) && cells.contains(&cell_from(q, e)))
                        .unwrap();
                    (q, e)
                }
                4 => (q, d),
                _ => panic!("non-generic cell set"),
            }
        };
        let mut all: BTreeSet<(LatticePoint, (i64, i64))> = BTreeSet::new();
        for &(i, j) in cells {
            let (p, q) = diagonal(i, j);
            all.insert((p, (q.x - p.x, q.y - p.y)));
            all.insert((q, (p.x - q.x, p.y - q.y)));
        }
        let mut seen = BTreeSet::new();
        let mut orbits = 0;
        for &(p0, d0) in &all {
            if seen.contains(&(p0, d0)) {
                continue;
            }
            orbits += 1;
            let (mut p, mut d) = (p0, d0);
            loop {
                seen.insert((p, d));
                let next = step(p, d);
                if next == (p0, d0) {
                    break;
                }
                (p, d) = next;
            }
        }
        let terminals = degree.values().filter(|&&d| d == 1).count();
        let arcs = terminals / 2;
        let circles = (orbits - arcs) / 2;
        let dp = degree.values().filter(|&&d| d == 4).count();
        (arcs, circles, dp)
    }

    #[test]
    fn frozen_walk_of_the_smallest_negative_staircase() {
        // [(2,3),(4,1)] is already generic; a single arc crossing itself once
        let d = traced(&[(2, 3), (4, 1)]);
        assert_eq!(d.components.len(), 1);
        let arc = &d.components[0];
        assert!(!arc.closed);
        assert_eq!(
            arc.vertices,
            [
                pt(0, 0),
                pt(1, 1),
                pt(2, 2),
                pt(1, 3),
                pt(0, 2),
                pt(1, 1),
                pt(2, 0),
                pt(3, 1),
                pt(4, 0),
            ]
        );
        assert_eq!(d.double_points.iter().copied().collect::<Vec<_>>(), [pt(1, 1)]);
    }

    #[test]
    fn frozen_walk_of_the_smallest_positive_staircase() {
        // [(1,3),(2,1)] normalizes to offset (1,0); an embedded arc
        let d = traced(&[(1, 3), (2, 1)]);
        assert_eq!(d.component_profile(), (1, 0));
        assert_eq!(d.double_point_count(), 0);
        assert_eq!(
            d.components[0].vertices,
            [pt(1, 3), pt(2, 2), pt(1, 1), pt(2, 0), pt(3, 1)]
        );
    }

    #[test]
    fn unnormalized_region_is_rejected() {
        let r = Region::new(stair(&[(1, 3), (2, 1)]));
        assert_eq!(
            trace(&r),
            Err(TraceError::NonGenericConcavePoint(pt(1, 1)))
        );
    }

    #[test]
    fn rectangle_profiles() {
        assert_eq!(traced(&[(3, 7)]).component_profile(), (1, 0));
        assert_eq!(traced(&[(3, 7)]).double_point_count(), 6);
        assert_eq!(traced(&[(2, 4)]).component_profile(), (2, 0));
        assert_eq!(traced(&[(1, 1)]).component_profile(), (1, 0));
        // 3×3: one long diagonal arc plus one closed loop around it
        let d = traced(&[(3, 3)]);
        assert_eq!(d.component_profile(), (1, 1));
        assert_eq!(d.link_component_count(), 3);
        assert_eq!(d.double_point_count(), 2);
    }

    #[test]
    fn staircase_double_point_counts() {
        assert_eq!(traced(&[(1, 7), (3, 5), (4, 3), (6, 2)]).double_point_count(), 6);
        let d = traced(&[(10, 9), (11, 7), (13, 6)]);
        assert_eq!(d.double_point_count(), 44);
        assert!(d.is_single_arc());
    }

    #[test]
    fn rectangle_laws_small_sweep() {
        let gcd = |mut a: i64, mut b: i64| {
            while b != 0 {
                (a, b) = (b, a.rem_euclid(b));
            }
            a
        };
        for a in 1..=12 {
            for b in 1..=12 {
                let d = traced(&[(a, b)]);
                assert_eq!(d.link_component_count() as i64, gcd(a, b), "B({a},{b})");
                if gcd(a, b) == 1 {
                    assert_eq!(
                        d.double_point_count() as i64,
                        (a - 1) * (b - 1) / 2,
                        "B({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn every_double_point_is_traversed_twice() {
        for entries in [
            vec![(2, 3), (4, 1)],
            vec![(5, 7)],
            vec![(3, 3)],
            vec![(10, 9), (11, 7), (13, 6)],
        ] {
            let d = traced(&entries);
            for p in &d.double_points {
                let passes: usize = d
                    .components
                    .iter()
                    .map(|c| c.vertices.iter().filter(|v| *v == p).count())
                    .sum();
                assert_eq!(passes, 2, "{p} in {entries:?}");
            }
        }
    }

    #[test]
    fn edges_partition_the_cells() {
        for entries in [vec![(2, 3), (4, 1)], vec![(4, 4)], vec![(2, 5), (4, 3)]] {
            let region = Region::new(stair(&entries)).normalize_parity().unwrap();
            let d = trace(&region).unwrap();
            let total: usize = d.components.iter().map(Component::edge_count).sum();
            assert_eq!(total as i64, region.stair.area_closed_form());
        }
    }

    #[test]
    fn trace_commutes_with_even_translation() {
        let r = Region::new(stair(&[(2, 3), (4, 1)]));
        let base = trace(&r).unwrap();
        let moved = trace(&r.translated((2, -4))).unwrap();
        assert_eq!(moved.components.len(), base.components.len());
        for (m, b) in moved.components.iter().zip(&base.components) {
            assert_eq!(m.closed, b.closed);
            let shifted: Vec<LatticePoint> =
                b.vertices.iter().map(|p| pt(p.x + 2, p.y - 4)).collect();
            assert_eq!(m.vertices, shifted);
        }
        let shifted_dp: BTreeSet<LatticePoint> =
            base.double_points.iter().map(|p| pt(p.x + 2, p.y - 4)).collect();
        assert_eq!(moved.double_points, shifted_dp);
    }

    #[test]
    fn mirror_image_preserves_all_counts() {
        for entries in [vec![(2, 3), (4, 1)], vec![(3, 7)], vec![(10, 9), (11, 7), (13, 6)]] {
            let region = Region::new(stair(&entries)).normalize_parity().unwrap();
            let cells: BTreeSet<(i64, i64)> = region.cells().into_iter().collect();
            let mirrored: BTreeSet<(i64, i64)> =
                cells.iter().map(|&(i, j)| (-1 - i, j)).collect();
            let d = trace_cells(&cells).unwrap();
            let m = trace_cells(&mirrored).unwrap();
            assert_eq!(m.component_profile(), d.component_profile());
            assert_eq!(m.double_point_count(), d.double_point_count());
        }
    }

    #[test]
    fn orbit_oracle_agrees_on_all_small_staircases() {
        let mut checked = 0;
        for_each_stair(3, 8, |s| {
            let Ok(region) = Region::new(s.clone()).normalize_parity() else {
                return;
            };
            let cells: BTreeSet<(i64, i64)> = region.cells().into_iter().collect();
            let d = trace_cells(&cells).unwrap();
            let (arcs, circles, dp) = orbit_profile(&cells);
            assert_eq!(d.component_profile(), (arcs, circles), "{s}");
            assert_eq!(d.double_point_count(), dp, "{s}");
            checked += 1;
        });
        assert!(checked > 1000, "oracle sweep covered {checked} staircases");
    }

    #[test]
    fn double_points_are_the_even_interior_points() {
        let region = Region::new(stair(&[(10, 9), (11, 7), (13, 6)]));
        let d = trace(&region).unwrap();
        let mut expected = BTreeSet::new();
        for x in 0..=region.stair.width() {
            for y in 0..=region.stair.height() {
                let p = pt(x, y);
                let interior = DIRS
                    .into_iter()
                    .all(|dir| region.contains_cell(x + (dir.0 - 1) / 2, y + (dir.1 - 1) / 2));
                if interior && p.is_even() {
                    expected.insert(p);
                }
            }
        }
        assert_eq!(d.double_points, expected);
    }

    #[test]
    fn census_rows() {
        let rows = component_census(1, 3);
        assert_eq!(rows.len(), 9);
        assert!(rows
            .iter()
            .any(|r| r.stair == stair(&[(2, 3)]) && r.profile == Some((1, 0))));

        let rows = component_census(2, 6);
        assert_eq!(rows.len(), 261); // C(6,1)² + C(6,2)²
        assert!(rows
            .iter()
            .any(|r| r.stair == stair(&[(2, 5), (4, 3)]) && r.profile == Some((1, 0))));

        // mixed concave parity: no translation is generic, profile withheld
        let rows = component_census(3, 4);
        assert!(rows
            .iter()
            .any(|r| r.stair == stair(&[(1, 4), (2, 3), (3, 1)]) && r.profile.is_none()));
    }

    #[test]
    fn divide_json_round_trip() {
        let d = traced(&[(2, 3), (4, 1)]);
        let text = serde_json::to_string(&d).unwrap();
        let back: Divide = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        assert!(text.contains(r#""closed":false"#));
    }
}
