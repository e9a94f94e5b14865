//! Transversal intersection counting for a divide plus straight segments.
//!
//! Auxiliary segments carry rational endpoints so they can thread between
//! lattice points; every incidence test is an exact orientation predicate,
//! so tangency and triple-point detection are decidable, not numeric.

use std::collections::BTreeMap;

use num_rational::Ratio;
use thiserror::Error;

use super::Divide;
use crate::region::LatticePoint;

pub type Coord = Ratio<i64>;
pub type RatPoint = (Coord, Coord);

/// Which of the three named segments of the multi-divide constructions a
/// segment plays; `Ell` is the blow-down line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AuxLabel {
    Ell,
    A,
    B,
}

/// A straight segment with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AuxSegment {
    pub label: AuxLabel,
    pub from: RatPoint,
    pub to: RatPoint,
}

impl AuxSegment {
    pub fn new(label: AuxLabel, from: RatPoint, to: RatPoint) -> Self {
        AuxSegment { label, from, to }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> AuxSegment {
        let shift = |p: RatPoint| (p.0 + Ratio::from_integer(dx), p.1 + Ratio::from_integer(dy));
        AuxSegment {
            label: self.label,
            from: shift(self.from),
            to: shift(self.to),
        }
    }
}

/// A traced divide together with straight auxiliary segments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiDivide {
    pub primary: Divide,
    pub aux_segments: Vec<AuxSegment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectError {
    #[error("tangential contact at ({0}, {1}); intersections must be transversal", .at.0, .at.1)]
    TangentialIntersection { at: RatPoint },
    #[error("three branches meet at ({0}, {1})", .at.0, .at.1)]
    TriplePoint { at: RatPoint },
}

/// Intersection matrix of the multi-divide's curves, ordered as primary
/// components followed by auxiliary segments. Off-diagonal entries count
/// transversal intersection points between the two curves; the diagonal is
/// filled with the caller's framing integers (surgery data, not geometry).
pub fn intersection_matrix(
    md: &MultiDivide,
    framings: &[i64],
) -> Result<Vec<Vec<i64>>, IntersectError> {
    let m = md.primary.components.len();
    let n = m + md.aux_segments.len();
    assert_eq!(framings.len(), n, "one framing per curve");

    let mut matrix = vec![vec![0i64; n]; n];
    for (i, &f) in framings.iter().enumerate() {
        matrix[i][i] = f;
    }

    // crossings between two primary components: double points traversed by
    // both (a double point carries exactly two passages in total)
    for p in &md.primary.double_points {
        let through: Vec<usize> = md
            .primary
            .components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.vertices.iter().filter(move |v| *v == p).map(move |_| i))
            .collect();
        if let [i, j] = through[..] {
            if i != j {
                matrix[i][j] += 1;
                matrix[j][i] += 1;
            }
        }
    }

    // every detected point with the pair of curve indices; more than one
    // crossing event at the same point means three local branches
    let mut seen: BTreeMap<RatPoint, (usize, usize)> = BTreeMap::new();
    let mut record = |at: RatPoint, i: usize, j: usize| -> Result<(), IntersectError> {
        if seen.insert(at, (i, j)).is_some() {
            return Err(IntersectError::TriplePoint { at });
        }
        Ok(())
    };

    for (k, seg) in md.aux_segments.iter().enumerate() {
        // primary components against this segment
        for (i, comp) in md.primary.components.iter().enumerate() {
            for (u, v) in polyline_edges(comp.closed, &comp.vertices) {
                if let Some(at) = crossing(to_rat(u), to_rat(v), seg.from, seg.to)? {
                    matrix[i][m + k] += 1;
                    matrix[m + k][i] += 1;
                    record(at, i, m + k)?;
                }
            }
        }
        // earlier segments against this one
        for (k2, other) in md.aux_segments.iter().enumerate().take(k) {
            if let Some(at) = crossing(other.from, other.to, seg.from, seg.to)? {
                matrix[m + k2][m + k] += 1;
                matrix[m + k][m + k2] += 1;
                record(at, m + k2, m + k)?;
            }
        }
    }

    Ok(matrix)
}

fn to_rat(p: LatticePoint) -> RatPoint {
    (Ratio::from_integer(p.x), Ratio::from_integer(p.y))
}

/// Consecutive vertex pairs of a component, including the closing segment.
fn polyline_edges(
    closed: bool,
    vertices: &[LatticePoint],
) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
    let wrap = closed
        .then(|| (*vertices.last().unwrap(), vertices[0]))
        .into_iter();
    vertices.windows(2).map(|w| (w[0], w[1])).chain(wrap)
}

fn orient(a: RatPoint, b: RatPoint, c: RatPoint) -> i8 {
    let cross = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    match cross.cmp(&Ratio::from_integer(0)) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

fn within_box(a: RatPoint, b: RatPoint, p: RatPoint) -> bool {
    let (lo0, hi0) = if a.0 <= b.0 { (a.0, b.0) } else { (b.0, a.0) };
    let (lo1, hi1) = if a.1 <= b.1 { (a.1, b.1) } else { (b.1, a.1) };
    lo0 <= p.0 && p.0 <= hi0 && lo1 <= p.1 && p.1 <= hi1
}

/// Exact crossing test for closed segments `pq` and `rs`: `Some(point)` for a
/// proper transversal crossing, `None` for disjoint segments, and an error
/// for any degenerate contact (endpoint touch or collinear overlap).
fn crossing(
    p: RatPoint,
    q: RatPoint,
    r: RatPoint,
    s: RatPoint,
) -> Result<Option<RatPoint>, IntersectError> {
    let d1 = orient(r, s, p);
    let d2 = orient(r, s, q);
    let d3 = orient(p, q, r);
    let d4 = orient(p, q, s);

    if d1 * d2 < 0 && d3 * d4 < 0 {
        // proper crossing: solve p + t(q − p) on the line rs
        let num = (r.0 - p.0) * (s.1 - r.1) - (r.1 - p.1) * (s.0 - r.0);
        let den = (q.0 - p.0) * (s.1 - r.1) - (q.1 - p.1) * (s.0 - r.0);
        let t = num / den;
        return Ok(Some((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1))));
    }

    for (d, touch, ea, eb) in [(d1, p, r, s), (d2, q, r, s), (d3, r, p, q), (d4, s, p, q)] {
        if d == 0 && within_box(ea, eb, touch) {
            return Err(IntersectError::TangentialIntersection { at: touch });
        }
    }
    Ok(None)
}
