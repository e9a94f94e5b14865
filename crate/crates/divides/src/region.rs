//! Staircase lattice regions.
//!
//! A staircase is a finite union of axis-aligned rectangles anchored at the
//! origin, `∪ [0,a_i] × [0,b_i]`, written as entries `(a_i, b_i)` with the
//! `a_i` strictly increasing and the `b_i` strictly decreasing. Together with
//! an integer translation this is the planar input from which divide curves
//! are traced.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A point (or translation vector) of the integer lattice.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// A lattice point is even when the coordinate sum is even. The curves
    /// traced in [`crate::tracer`] pass through even points only.
    pub fn is_even(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint { x, y }
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Validation errors for staircase data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("staircase needs at least one entry")]
    EmptySequence,
    #[error("entry {index} is not positive")]
    NonPositiveEntry { index: usize },
    #[error("monotonicity violated at entry {index}: widths must increase, heights decrease")]
    MonotonicityViolation { index: usize },
    #[error("concave corners have mixed parity; no translation makes the curve generic")]
    MixedConcaveParity,
}

/// The staircase shape `∪_i [0, a_i] × [0, b_i]`.
///
/// Entries are `(a_i, b_i)` with `0 < a_1 < … < a_n` and `b_1 > … > b_n > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct StairType {
    entries: Vec<(i64, i64)>,
}

impl StairType {
    pub fn new(entries: Vec<(i64, i64)>) -> Result<Self, RegionError> {
        if entries.is_empty() {
            return Err(RegionError::EmptySequence);
        }
        for (i, &(a, b)) in entries.iter().enumerate() {
            if a <= 0 || b <= 0 {
                return Err(RegionError::NonPositiveEntry { index: i + 1 });
            }
            if i > 0 {
                let (pa, pb) = entries[i - 1];
                if a <= pa || b >= pb {
                    return Err(RegionError::MonotonicityViolation { index: i + 1 });
                }
            }
        }
        Ok(StairType { entries })
    }

    pub fn entries(&self) -> &[(i64, i64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid staircase always has at least one entry
    }

    /// Total width `a_n` — also the length of the bottom edge.
    pub fn width(&self) -> i64 {
        self.entries.last().unwrap().0
    }

    /// Total height `b_1` — also the length of the left edge.
    pub fn height(&self) -> i64 {
        self.entries[0].1
    }

    pub fn edge_length(&self, edge: Edge) -> i64 {
        match edge {
            Edge::Bottom => self.width(),
            Edge::Left => self.height(),
        }
    }

    /// Area by the telescoping closed form
    /// `sum a_i b_i - sum_{i<n} a_i b_{i+1}`.
    pub fn area_closed_form(&self) -> i64 {
        let direct: i64 = self.entries.iter().map(|&(a, b)| a * b).sum();
        let overlap: i64 = self
            .entries
            .windows(2)
            .map(|w| w[0].0 * w[1].1)
            .sum();
        direct - overlap
    }

    /// The inner staircase corners `(a_i, b_{i+1})`, in order. Empty for a
    /// plain rectangle.
    pub fn concave_points(&self) -> Vec<LatticePoint> {
        self.entries
            .windows(2)
            .map(|w| LatticePoint::new(w[0].0, w[1].1))
            .collect()
    }

    /// Glue a full square onto the named edge and re-anchor at the origin.
    ///
    /// Bottom: square of side `a_n` below, so every height grows by `a_n`.
    /// Left: square of side `b_1` to the left, so every width grows by `b_1`.
    /// Either way the area grows by the squared edge length and the entry
    /// count is preserved.
    pub fn add_square(&self, edge: Edge) -> StairType {
        let entries = match edge {
            Edge::Bottom => {
                let side = self.width();
                self.entries.iter().map(|&(a, b)| (a, b + side)).collect()
            }
            Edge::Left => {
                let side = self.height();
                self.entries.iter().map(|&(a, b)| (a + side, b)).collect()
            }
        };
        StairType::new(entries).expect("square addition preserves staircase monotonicity")
    }

    /// Exchange the roles of the axes: the transposed staircase describes the
    /// same region reflected across the diagonal.
    pub fn transpose(&self) -> StairType {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|&(a, b)| (b, a))
            .collect();
        StairType::new(entries).expect("transpose preserves staircase monotonicity")
    }

    /// Column heights left to right: column `i` (cells `[i, i+1] × …`) holds
    /// `heights[i]` unit cells. Non-increasing by construction.
    pub fn column_heights(&self) -> Vec<i64> {
        let mut heights = Vec::with_capacity(self.width() as usize);
        let mut k = 0;
        for i in 0..self.width() {
            while self.entries[k].0 <= i {
                k += 1;
            }
            heights.push(self.entries[k].1);
        }
        heights
    }
}

impl fmt::Display for StairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (a, b)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for StairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<(i64, i64)>> for StairType {
    type Error = RegionError;
    fn try_from(entries: Vec<(i64, i64)>) -> Result<Self, Self::Error> {
        StairType::new(entries)
    }
}

impl From<StairType> for Vec<(i64, i64)> {
    fn from(s: StairType) -> Self {
        s.entries
    }
}

/// The two edges a square can be glued onto.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Bottom,
    Left,
}

/// A staircase placed in the plane: the shape translated by `offset`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RegionFile", into = "RegionFile")]
pub struct Region {
    pub stair: StairType,
    pub offset: (i64, i64),
}

impl Region {
    pub fn new(stair: StairType) -> Self {
        Region { stair, offset: (0, 0) }
    }

    pub fn with_offset(stair: StairType, offset: (i64, i64)) -> Self {
        Region { stair, offset }
    }

    pub fn translated(&self, v: (i64, i64)) -> Region {
        Region {
            stair: self.stair.clone(),
            offset: (self.offset.0 + v.0, self.offset.1 + v.1),
        }
    }

    /// Concave corners in absolute coordinates.
    pub fn concave_points(&self) -> Vec<LatticePoint> {
        self.stair
            .concave_points()
            .into_iter()
            .map(|p| LatticePoint::new(p.x + self.offset.0, p.y + self.offset.1))
            .collect()
    }

    /// Translate by `(1, 0)` if needed so every concave corner sits at an odd
    /// lattice point; a concave corner at an even point would pinch the traced
    /// curve. Idempotent, and the applied shift is only ever `(0,0)` or
    /// `(1,0)`. Fails when the concave corners disagree in parity, since no
    /// translation fixes that.
    pub fn normalize_parity(&self) -> Result<Region, RegionError> {
        let concave = self.concave_points();
        let Some(first) = concave.first() else {
            return Ok(self.clone()); // rectangles have nothing to fix
        };
        if concave.iter().any(|p| p.is_even() != first.is_even()) {
            return Err(RegionError::MixedConcaveParity);
        }
        if first.is_even() {
            Ok(self.translated((1, 0)))
        } else {
            Ok(self.clone())
        }
    }

    /// Does the unit cell `[cx, cx+1] × [cy, cy+1]` (absolute coordinates)
    /// lie inside the region?
    pub fn contains_cell(&self, cx: i64, cy: i64) -> bool {
        let (x, y) = (cx - self.offset.0, cy - self.offset.1);
        if x < 0 || y < 0 {
            return false;
        }
        self.stair.entries().iter().any(|&(a, b)| x < a && y < b)
    }

    /// All unit cells of the region, in column-major order.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.stair.area_closed_form() as usize);
        for (i, h) in self.stair.column_heights().into_iter().enumerate() {
            let cx = self.offset.0 + i as i64;
            for cy in self.offset.1..self.offset.1 + h {
                out.push((cx, cy));
            }
        }
        out
    }

    /// Area by brute enumeration: walk the bounding box and count unit cells
    /// whose membership test passes. Cross-checks the closed form.
    pub fn area_cell_count(&self) -> i64 {
        let mut count = 0;
        for cx in self.offset.0..self.offset.0 + self.stair.width() {
            for cy in self.offset.1..self.offset.1 + self.stair.height() {
                if self.contains_cell(cx, cy) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Boundary polygon, counter-clockwise from the origin corner.
    pub fn boundary_polygon(&self) -> Vec<LatticePoint> {
        let (dx, dy) = self.offset;
        let e = self.stair.entries();
        let mut pts = vec![LatticePoint::new(dx, dy), LatticePoint::new(dx + e[e.len() - 1].0, dy)];
        for i in (0..e.len()).rev() {
            let (a, b) = e[i];
            pts.push(LatticePoint::new(dx + a, dy + b));
            let next_a = if i == 0 { 0 } else { e[i - 1].0 };
            pts.push(LatticePoint::new(dx + next_a, dy + b));
        }
        pts
    }
}

/// On-disk JSON form: `{"stairs": [[a,b], …], "offset": [dx,dy]}` with the
/// offset defaulting to the origin.
#[derive(Serialize, Deserialize)]
pub struct RegionFile {
    pub stairs: Vec<(i64, i64)>,
    #[serde(default)]
    pub offset: (i64, i64),
}

impl TryFrom<RegionFile> for Region {
    type Error = RegionError;
    fn try_from(f: RegionFile) -> Result<Self, Self::Error> {
        Ok(Region {
            stair: StairType::new(f.stairs)?,
            offset: f.offset,
        })
    }
}

impl From<Region> for RegionFile {
    fn from(r: Region) -> Self {
        RegionFile {
            stairs: r.stair.entries.clone(),
            offset: r.offset,
        }
    }
}

/// Visit every staircase with at most `max_n` entries and widths/heights
/// bounded by `max_dim`; the visitor sees each one exactly once.
pub fn for_each_stair(max_n: usize, max_dim: i64, mut f: impl FnMut(&StairType)) {
    fn visit(
        n: usize,
        max_dim: i64,
        a: &mut Vec<i64>,
        b: &mut Vec<i64>,
        f: &mut dyn FnMut(&StairType),
    ) {
        if a.len() == n {
            // pair the ascending widths with descending heights
            let entries: Vec<(i64, i64)> =
                a.iter().zip(b.iter().rev()).map(|(&x, &y)| (x, y)).collect();
            let stair = StairType::new(entries).expect("enumeration yields valid staircases");
            f(&stair);
            return;
        }
        // leave headroom for the remaining strictly increasing picks
        let slack = (n - a.len() - 1) as i64;
        for v in a.last().copied().unwrap_or(0) + 1..=max_dim - slack {
            a.push(v);
            for w in b.last().copied().unwrap_or(0) + 1..=max_dim - slack {
                b.push(w);
                visit(n, max_dim, a, b, f);
                b.pop();
            }
            a.pop();
        }
    }

    let mut a = Vec::new();
    let mut b = Vec::new();
    for n in 1..=max_n {
        visit(n, max_dim, &mut a, &mut b, &mut f);
    }
}

/// Collected form of [`for_each_stair`].
pub fn enumerate_stairs(max_n: usize, max_dim: i64) -> Vec<StairType> {
    let mut out = Vec::new();
    for_each_stair(max_n, max_dim, |s| out.push(s.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stair(entries: &[(i64, i64)]) -> StairType {
        StairType::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn accepts_valid_staircases() {
        assert_eq!(stair(&[(1, 7), (3, 5), (4, 3), (6, 2)]).len(), 4);
        assert_eq!(stair(&[(2, 3)]).width(), 2);
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert_eq!(StairType::new(vec![]), Err(RegionError::EmptySequence));
        assert_eq!(
            StairType::new(vec![(0, 3)]),
            Err(RegionError::NonPositiveEntry { index: 1 })
        );
        assert_eq!(
            StairType::new(vec![(2, -1)]),
            Err(RegionError::NonPositiveEntry { index: 1 })
        );
        assert_eq!(
            StairType::new(vec![(3, 5), (1, 7)]),
            Err(RegionError::MonotonicityViolation { index: 2 })
        );
        assert_eq!(
            StairType::new(vec![(1, 5), (3, 5)]),
            Err(RegionError::MonotonicityViolation { index: 2 })
        );
    }

    #[test]
    fn closed_form_area_matches_known_values() {
        assert_eq!(stair(&[(1, 7), (3, 5), (4, 3), (6, 2)]).area_closed_form(), 24);
        assert_eq!(stair(&[(2, 3)]).area_closed_form(), 6);
        assert_eq!(stair(&[(2, 3), (4, 1)]).area_closed_form(), 8);
    }

    #[test]
    fn cell_count_matches_known_values() {
        let r = Region::new(stair(&[(10, 9), (11, 7), (13, 6)]));
        assert_eq!(r.area_cell_count(), 109);
        assert_eq!(r.stair.area_closed_form(), 109);
        // translation does not change the count
        assert_eq!(r.translated((-3, 5)).area_cell_count(), 109);
    }

    #[test]
    fn concave_points_sit_between_steps() {
        let s = stair(&[(1, 7), (3, 5), (4, 3), (6, 2)]);
        let pts: Vec<(i64, i64)> = s.concave_points().into_iter().map(Into::into).collect();
        assert_eq!(pts, vec![(1, 5), (3, 3), (4, 2)]);
        assert!(stair(&[(2, 3)]).concave_points().is_empty());
    }

    #[test]
    fn parity_normalization() {
        // concave corner (1,5) is even, so the region shifts right by one
        let r = Region::new(stair(&[(1, 7), (3, 5), (4, 3), (6, 2)]));
        let n = r.normalize_parity().unwrap();
        assert_eq!(n.offset, (1, 0));
        // already generic: concave corner (2,3) is odd
        let r = Region::new(stair(&[(2, 5), (4, 3)]));
        assert_eq!(r.normalize_parity().unwrap().offset, (0, 0));
        // rectangles never move
        let r = Region::new(stair(&[(5, 4)]));
        assert_eq!(r.normalize_parity().unwrap().offset, (0, 0));
        // idempotent
        let n2 = n.normalize_parity().unwrap();
        assert_eq!(n, n2);
    }

    #[test]
    fn mixed_parity_is_rejected() {
        // concave corners (1,3) even and (2,1) odd
        let r = Region::new(stair(&[(1, 4), (2, 3), (3, 1)]));
        assert_eq!(r.normalize_parity(), Err(RegionError::MixedConcaveParity));
    }

    #[test]
    fn add_square_examples() {
        let p1 = stair(&[(1, 3), (2, 1)]);
        let below = p1.add_square(Edge::Bottom);
        assert_eq!(below, stair(&[(1, 5), (2, 3)]));
        let left = below.add_square(Edge::Left);
        assert_eq!(left, stair(&[(6, 5), (7, 3)]));
        assert_eq!(left.area_closed_form(), 33);

        let other = p1.add_square(Edge::Left).add_square(Edge::Bottom);
        assert_eq!(other, stair(&[(4, 8), (5, 6)]));
        assert_eq!(other.area_closed_form(), 38);
    }

    #[test]
    fn edge_lengths_follow_the_glued_square() {
        let s = stair(&[(1, 3), (2, 1)]);
        assert_eq!(s.edge_length(Edge::Bottom), 2);
        assert_eq!(s.edge_length(Edge::Left), 3);
        // gluing below turns the left edge into bottom + left
        assert_eq!(s.add_square(Edge::Bottom).edge_length(Edge::Left), 5);
        assert_eq!(s.add_square(Edge::Left).edge_length(Edge::Bottom), 5);
    }

    #[test]
    fn transpose_reverses_and_swaps() {
        let s = stair(&[(2, 5), (4, 3)]);
        assert_eq!(s.transpose(), stair(&[(3, 4), (5, 2)]));
        assert_eq!(s.transpose().transpose(), s);
        assert_eq!(s.transpose().area_closed_form(), s.area_closed_form());
    }

    #[test]
    fn column_heights_step_down() {
        assert_eq!(
            stair(&[(1, 7), (3, 5), (4, 3), (6, 2)]).column_heights(),
            vec![7, 5, 5, 3, 2, 2]
        );
    }

    #[test]
    fn region_json_round_trip() {
        let r = Region::with_offset(stair(&[(2, 3), (4, 1)]), (1, 0));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"stairs":[[2,3],[4,1]],"offset":[1,0]}"#);
        let back: Region = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        // offset may be omitted
        let short: Region = serde_json::from_str(r#"{"stairs":[[2,3]]}"#).unwrap();
        assert_eq!(short.offset, (0, 0));
        // invalid staircases are rejected at parse time
        assert!(serde_json::from_str::<Region>(r#"{"stairs":[[3,5],[1,7]]}"#).is_err());
    }

    #[test]
    fn enumeration_count_matches_binomials() {
        // choosing n widths and n heights independently from 1..=d
        let choose = |d: i64, n: i64| -> usize {
            let mut num = 1i64;
            let mut den = 1i64;
            for i in 0..n {
                num *= d - i;
                den *= i + 1;
            }
            (num / den) as usize
        };
        let count = enumerate_stairs(2, 6).len();
        assert_eq!(count, choose(6, 1).pow(2) + choose(6, 2).pow(2));
        let all = enumerate_stairs(3, 5);
        let expected: usize = (1..=3).map(|n| choose(5, n).pow(2)).sum();
        assert_eq!(all.len(), expected);
        // spot-check membership and uniqueness
        assert!(all.iter().any(|s| s == &stair(&[(2, 5), (4, 3)])));
        let mut dedup = all.clone();
        dedup.sort_by_key(|s| format!("{s}"));
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    proptest! {
        #[test]
        fn closed_form_agrees_with_cell_count(s in arb_stair(), dx in -3i64..4, dy in -3i64..4) {
            let r = Region::with_offset(s, (dx, dy));
            prop_assert_eq!(r.stair.area_closed_form(), r.area_cell_count());
        }

        #[test]
        fn add_square_grows_area_by_edge_squared(s in arb_stair(), left in any::<bool>()) {
            let edge = if left { Edge::Left } else { Edge::Bottom };
            let side = s.edge_length(edge);
            let bigger = s.add_square(edge);
            prop_assert_eq!(bigger.len(), s.len());
            prop_assert_eq!(bigger.area_closed_form(), s.area_closed_form() + side * side);
        }

        #[test]
        fn normalization_is_idempotent(s in arb_stair()) {
            if let Ok(n) = Region::new(s).normalize_parity() {
                prop_assert!((0..=1).contains(&n.offset.0));
                prop_assert_eq!(n.normalize_parity().unwrap(), n);
            }
        }
    }

    prop_compose! {
        fn arb_stair()(n in 1usize..4)(
            a in proptest::collection::btree_set(1i64..12, n),
            b in proptest::collection::btree_set(1i64..12, n),
        ) -> StairType {
            let widths: Vec<i64> = a.into_iter().collect();
            let mut heights: Vec<i64> = b.into_iter().collect();
            heights.reverse();
            StairType::new(widths.into_iter().zip(heights).collect()).unwrap()
        }
    }
}
