//! Staircase curve families, the sporadic-knot data tables, and the
//! verifiers tying areas, double points, and surgery coefficients together.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::region::{Edge, Region, StairType};
use crate::tracer::intersect::{intersection_matrix, AuxLabel, AuxSegment, MultiDivide};
use crate::tracer::trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SporadicType {
    IX,
    X,
}

impl fmt::Display for SporadicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SporadicType::IX => "IX",
            SporadicType::X => "X",
        })
    }
}

/// Lens-space surgery data attached to a sporadic knot: the (integer)
/// surgery coefficient `p`, the second lens-space parameter `q`, and the
/// Seifert genus of the knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SporadicData {
    pub p: i64,
    pub q: i64,
    pub genus: i64,
}

/// Torus-knot parameters, canonicalized to `0 < a <= b`. Divides do not
/// distinguish a knot from its mirror, so the flag records whether the
/// original pair mixed signs without affecting identity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusParams {
    pub a: i64,
    pub b: i64,
    pub mirror: bool,
}

impl TorusParams {
    pub fn new(a: i64, b: i64) -> Self {
        let mirror = (a < 0) != (b < 0);
        let (a, b) = (a.abs(), b.abs());
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        TorusParams { a, b, mirror }
    }
}

/// What a family's divide is expected to present as a knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotDescriptor {
    Torus(TorusParams),
    Cable {
        companion: TorusParams,
        m: i64,
        r: i64,
    },
    SporadicIX(i64),
    SporadicX(i64),
}

impl fmt::Display for KnotDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KnotDescriptor::Torus(t) => write!(f, "T({},{})", t.a, t.b),
            KnotDescriptor::Cable { companion, m, r } => {
                write!(f, "C(T({},{}); {m},{r})", companion.a, companion.b)
            }
            KnotDescriptor::SporadicIX(j) => write!(f, "k_IX({j})"),
            KnotDescriptor::SporadicX(j) => write!(f, "k_X({j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("coefficient identity failed for type {family} at j = {j}: residue {residue}")]
    FormulaViolation {
        family: SporadicType,
        j: i64,
        residue: i64,
    },
    #[error("aux placement for parameter {j} failed: {detail}")]
    PlacementFailure { j: i64, detail: String },
    #[error("cannot parse family spec {input:?}: {reason}")]
    ParseError { input: String, reason: String },
}

fn require_valid_j(j: i64) -> Result<(), FamilyError> {
    if j == 0 || j == -1 {
        return Err(FamilyError::InvalidParameter(format!(
            "family parameter j = {j} must lie outside {{0, -1}}"
        )));
    }
    Ok(())
}

/// The P staircase family. For j > 0 the staircase is built inductively:
/// the first entry of P(j) is (1, 2j+1) and entry i > 1 is the reversed
/// entry j+2−i of P(j−1) plus (1, 1). For j < −1 it is the explicit
/// staircase [(2i, −2j+1−2i)] for i = 1..−j.
pub fn stair_p(j: i64) -> Result<StairType, FamilyError> {
    require_valid_j(j)?;
    let entries: Vec<(i64, i64)> = if j > 0 {
        let mut prev: Vec<(i64, i64)> = vec![(1, 3), (2, 1)];
        for k in 2..=j {
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push((1, 2 * k + 1));
            for i in 2..=prev.len() as i64 + 1 {
                let (a, b) = prev[(prev.len() as i64 + 1 - i) as usize];
                next.push((b + 1, a + 1));
            }
            prev = next;
        }
        prev
    } else {
        (1..=-j).map(|i| (2 * i, -2 * j + 1 - 2 * i)).collect()
    };
    Ok(StairType::new(entries).expect("the P staircases are strictly monotone"))
}

/// P with a square glued along the bottom edge.
pub fn stair_pm(j: i64) -> Result<StairType, FamilyError> {
    Ok(stair_p(j)?.add_square(Edge::Bottom))
}

/// P with squares glued bottom-first, then left.
pub fn stair_pix(j: i64) -> Result<StairType, FamilyError> {
    Ok(stair_pm(j)?.add_square(Edge::Left))
}

/// P with squares glued left-first, then bottom.
pub fn stair_px(j: i64) -> Result<StairType, FamilyError> {
    Ok(stair_p(j)?.add_square(Edge::Left).add_square(Edge::Bottom))
}

/// The staircase [(2i, 2n+1−2i)] for i = 1..n−1, whose divide presents the
/// torus knot T(n, 2n−1).
pub fn stair_couture(n: i64) -> Result<StairType, FamilyError> {
    if n <= 1 {
        return Err(FamilyError::InvalidParameter(format!(
            "staircase order n = {n} must exceed 1"
        )));
    }
    let entries = (1..n).map(|i| (2 * i, 2 * n + 1 - 2 * i)).collect();
    Ok(StairType::new(entries).expect("the staircase entries are strictly monotone"))
}

/// The a×b rectangle as a parity-normalized region; its divide presents the
/// torus link T(a, b).
pub fn billiard(a: i64, b: i64) -> Result<Region, FamilyError> {
    if a < 1 || b < 1 {
        return Err(FamilyError::InvalidParameter(format!(
            "rectangle sides ({a}, {b}) must be positive"
        )));
    }
    let stair = StairType::new(vec![(a, b)]).expect("a rectangle is a valid staircase");
    Ok(Region::new(stair)
        .normalize_parity()
        .expect("a rectangle has no concave corners"))
}

/// Closed-form surgery data for the two sporadic families.
pub fn sporadic_data(family: SporadicType, j: i64) -> Result<SporadicData, FamilyError> {
    require_valid_j(j)?;
    let data = match family {
        SporadicType::IX => SporadicData {
            p: 22 * j * j + 9 * j + 1,
            q: -(11 * j + 2) * (11 * j + 2),
            genus: if j > 0 { 11 * j * j } else { 11 * j * j + 9 * j + 2 },
        },
        SporadicType::X => SporadicData {
            p: 22 * j * j + 13 * j + 2,
            q: -(11 * j + 3) * (11 * j + 3),
            genus: if j > 0 {
                11 * j * j + 2 * j
            } else {
                11 * j * j + 11 * j + 3
            },
        },
    };
    Ok(data)
}

/// Checks the identity tying a sporadic region to its surgery coefficient:
/// area minus concave-corner count minus p must be 0 or 1. Returns the
/// residue; any other value is reported as an error since it would mean the
/// tables and the staircase generators disagree.
pub fn verify_coefficient_formula(family: SporadicType, j: i64) -> Result<i64, FamilyError> {
    let stair = match family {
        SporadicType::IX => stair_pix(j)?,
        SporadicType::X => stair_px(j)?,
    };
    let residue =
        stair.area_closed_form() - stair.concave_points().len() as i64 - sporadic_data(family, j)?.p;
    if residue == 0 || residue == 1 {
        Ok(residue)
    } else {
        Err(FamilyError::FormulaViolation {
            family,
            j,
            residue,
        })
    }
}

/// A parsed family selector, e.g. `P:3`, `B:3,7`, or `C:6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    P(i64),
    Pm(i64),
    Pix(i64),
    Px(i64),
    Billiard(i64, i64),
    Couture(i64),
}

impl FamilySpec {
    /// The parity-normalized region of the family member.
    pub fn region(&self) -> Result<Region, FamilyError> {
        let stair = match *self {
            FamilySpec::P(j) => stair_p(j)?,
            FamilySpec::Pm(j) => stair_pm(j)?,
            FamilySpec::Pix(j) => stair_pix(j)?,
            FamilySpec::Px(j) => stair_px(j)?,
            FamilySpec::Couture(n) => stair_couture(n)?,
            FamilySpec::Billiard(a, b) => return billiard(a, b),
        };
        Ok(Region::new(stair)
            .normalize_parity()
            .expect("family staircases have uniform concave parity"))
    }

    /// The knot or link the family member's divide presents.
    pub fn expected_knot(&self) -> Result<KnotDescriptor, FamilyError> {
        match *self {
            FamilySpec::P(j) => {
                require_valid_j(j)?;
                Ok(KnotDescriptor::Torus(TorusParams::new(j, 2 * j + 1)))
            }
            FamilySpec::Pm(j) => {
                require_valid_j(j)?;
                let (m, r) = if j > 0 { (j, 6 * j + 1) } else { (-j, -6 * j - 1) };
                Ok(KnotDescriptor::Cable {
                    companion: TorusParams::new(2, 3),
                    m,
                    r,
                })
            }
            FamilySpec::Pix(j) => {
                require_valid_j(j)?;
                Ok(KnotDescriptor::SporadicIX(j))
            }
            FamilySpec::Px(j) => {
                require_valid_j(j)?;
                Ok(KnotDescriptor::SporadicX(j))
            }
            FamilySpec::Billiard(a, b) => {
                if a < 1 || b < 1 {
                    return Err(FamilyError::InvalidParameter(format!(
                        "rectangle sides ({a}, {b}) must be positive"
                    )));
                }
                Ok(KnotDescriptor::Torus(TorusParams::new(a, b)))
            }
            FamilySpec::Couture(n) => {
                if n <= 1 {
                    return Err(FamilyError::InvalidParameter(format!(
                        "staircase order n = {n} must exceed 1"
                    )));
                }
                Ok(KnotDescriptor::Torus(TorusParams::new(n, 2 * n - 1)))
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::P(j) => write!(f, "P:{j}"),
            FamilySpec::Pm(j) => write!(f, "Pm:{j}"),
            FamilySpec::Pix(j) => write!(f, "PIX:{j}"),
            FamilySpec::Px(j) => write!(f, "PX:{j}"),
            FamilySpec::Billiard(a, b) => write!(f, "B:{a},{b}"),
            FamilySpec::Couture(n) => write!(f, "C:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| FamilyError::ParseError {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| parse_err("expected NAME:PARAMS"))?;
        let params: Vec<i64> = rest
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| parse_err("parameters must be integers"))?;
        match (name, params.as_slice()) {
            ("P", &[j]) => Ok(FamilySpec::P(j)),
            ("Pm", &[j]) => Ok(FamilySpec::Pm(j)),
            ("PIX", &[j]) => Ok(FamilySpec::Pix(j)),
            ("PX", &[j]) => Ok(FamilySpec::Px(j)),
            ("B", &[a, b]) => Ok(FamilySpec::Billiard(a, b)),
            ("C", &[n]) => Ok(FamilySpec::Couture(n)),
            ("P" | "Pm" | "PIX" | "PX" | "C", _) => parse_fail(s, "expected one parameter"),
            ("B", _) => parse_fail(s, "expected two parameters"),
            _ => parse_fail(s, "unknown family name"),
        }
    }
}

fn parse_fail(input: &str, reason: &str) -> Result<FamilySpec, FamilyError> {
    Err(FamilyError::ParseError {
        input: input.to_owned(),
        reason: reason.to_owned(),
    })
}

/// Framing integers for the multi-divide of parameter j: the self-linking
/// j(j+1) of the primary curve, −1 for the blow-down line, and the pair
/// (−2, −3) or (−3, −2) depending on the sporadic type.
pub fn cj_framings(family: SporadicType, j: i64) -> [i64; 4] {
    let (alpha, beta) = match family {
        SporadicType::IX => (-2, -3),
        SporadicType::X => (-3, -2),
    };
    [j * (j + 1), -1, alpha, beta]
}

/// Off-diagonal intersection targets of the multi-divide, in the order
/// (c·ℓ, c·a, c·b, ℓ·a, ℓ·b, a·b).
fn cj_counts(j: i64) -> [i64; 6] {
    if j > 0 {
        [j, j, j + 1, 1, 1, 1]
    } else {
        [-j, -j, -j - 1, 1, 1, 1]
    }
}

/// The three straight segments of the multi-divide, in coordinates relative
/// to the origin-anchored region. The segments ride the lattice structure:
/// band segments cross one full row or column of cells, and slope ±1
/// segments cross exactly one diagonal family, so the counts are forced.
/// The ℓ placement (for j > 0) and the b placement (for j < −1) switch on
/// the parity of j.
fn cj_segments(j: i64) -> Vec<AuxSegment> {
    let m = if j > 0 { j } else { -j - 1 };
    let q = |n: i64, d: i64| Ratio::new(n, d);
    let w = Ratio::from_integer;
    let odd = j.rem_euclid(2) == 1;
    // Parity normalization shifts the region right by one when m is odd,
    // which swaps the two diagonal families, so the slope ±1 placements are
    // keyed to that shift: the falling lines below ride x + y = m + 1/2 and
    // are cut short of the low column's cell, the rising ones sit on the
    // diagonal family passing through column 0.
    if j > 0 {
        let ell = if odd {
            // falling segment through the m cells on the anti-diagonal sum m
            AuxSegment::new(AuxLabel::Ell, (q(-1, 4), w(m) + q(3, 4)), (w(m) - q(1, 8), q(5, 8)))
        } else {
            // rising segment y − x = 3/2 through the m cells just above the main diagonal
            AuxSegment::new(AuxLabel::Ell, (q(-3, 2), w(0)), (w(m) - q(1, 4), w(m) + q(5, 4)))
        };
        vec![
            ell,
            // vertical through column 0, stopping short of the top cell's diagonal
            AuxSegment::new(AuxLabel::A, (q(7, 16), q(-1, 2)), (q(7, 16), w(m) + q(1, 4))),
            // bottom band, sweeping the full bottom row of m + 1 cells
            AuxSegment::new(AuxLabel::B, (q(-5, 4), q(11, 16)), (w(m) + q(3, 2), q(13, 16))),
        ]
    } else {
        let b = if odd {
            // falling segment through the m cells on the anti-diagonal sum m
            AuxSegment::new(AuxLabel::B, (q(-5, 8), w(m) + q(9, 8)), (w(m) - q(1, 4), q(3, 4)))
        } else {
            // rising segment y − x = 1/2 through the m cells on the main diagonal
            AuxSegment::new(AuxLabel::B, (q(-3, 4), q(-1, 4)), (w(m) - q(1, 8), w(m) + q(3, 8)))
        };
        vec![
            // bottom band as above: m + 1 crossings
            AuxSegment::new(AuxLabel::Ell, (q(-5, 4), q(11, 16)), (w(m) + q(3, 2), q(13, 16))),
            // vertical through the whole of column 0
            AuxSegment::new(AuxLabel::A, (q(7, 16), q(-1, 2)), (q(7, 16), w(m) + q(7, 8))),
            b,
        ]
    }
}

/// Builds the multi-divide of parameter j: the traced staircase curve of
/// [(m, m+1), (m+1, 1)]-type (m = j for j > 0, m = −j−1 for j < −1) plus the
/// segments ℓ, a, b. The construction is validated on the spot: the
/// pairwise intersection counts must equal `cj_counts(j)`.
pub fn build_multidivide_cj(j: i64) -> Result<MultiDivide, FamilyError> {
    require_valid_j(j)?;
    let m = if j > 0 { j } else { -j - 1 };
    let stair = StairType::new(vec![(m, m + 1), (m + 1, 1)])
        .expect("the primary staircase is strictly monotone");
    let region = Region::new(stair)
        .normalize_parity()
        .expect("a two-step staircase has one concave corner");
    let primary = trace(&region).expect("normalized regions trace");
    debug_assert!(primary.is_single_arc());
    let (dx, dy) = region.offset;
    let aux_segments = cj_segments(j)
        .into_iter()
        .map(|s| s.translated(dx, dy))
        .collect();
    let md = MultiDivide {
        primary,
        aux_segments,
    };

    let matrix = intersection_matrix(&md, &[0; 4]).map_err(|e| FamilyError::PlacementFailure {
        j,
        detail: e.to_string(),
    })?;
    let found = [
        matrix[0][1], matrix[0][2], matrix[0][3], matrix[1][2], matrix[1][3], matrix[2][3],
    ];
    let expected = cj_counts(j);
    if found != expected {
        return Err(FamilyError::PlacementFailure {
            j,
            detail: format!("expected counts {expected:?}, found {found:?}"),
        });
    }
    Ok(md)
}
