//! Braid words from single-arc divides and their Alexander polynomials.
//!
//! The sweep emits positive band letters only, so every extracted word is
//! strongly quasi-positive; the Alexander polynomial is computed from the
//! reduced Burau representation with exact integer Laurent arithmetic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::tracer::Divide;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Pos,
    Neg,
}

/// A letter of a braid word: a positive band generator joining strands
/// i < j, or a standard Artin generator with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidLetter {
    Band(usize, usize),
    Artin(usize, Sign),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<BraidLetter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("divide is not a single open arc")]
    NotAnArc,
    #[error("unsupported divide geometry: {0}")]
    UnsupportedGeometry(String),
    #[error("braid closure is not a knot")]
    NotAKnotClosure,
    #[error("parameters ({a}, {b}) are not coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error("letter {letter:?} is out of range for {strands} strands")]
    InvalidLetter { strands: usize, letter: String },
    #[error("cannot parse braid word {input:?}: {reason}")]
    ParseError { input: String, reason: String },
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::InvalidLetter {
                strands,
                letter: "a braid needs at least one strand".to_owned(),
            });
        }
        for letter in &letters {
            let ok = match *letter {
                BraidLetter::Band(i, j) => 1 <= i && i < j && j <= strands,
                BraidLetter::Artin(k, _) => 1 <= k && k < strands,
            };
            if !ok {
                return Err(BraidError::InvalidLetter {
                    strands,
                    letter: format!("{letter:?}"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The underlying permutation of the closure: each band or Artin letter
    /// acts as the transposition of the strands it joins.
    pub fn permutation(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.strands).collect();
        for letter in &self.letters {
            let (i, j) = match *letter {
                BraidLetter::Band(i, j) => (i, j),
                BraidLetter::Artin(k, _) => (k, k + 1),
            };
            p.swap(i - 1, j - 1);
        }
        p
    }

    /// True when the closure is a knot (the permutation is one cycle).
    pub fn is_knot_closure(&self) -> bool {
        let p = self.permutation();
        let mut seen = vec![false; p.len()];
        let mut cursor = 0usize;
        for _ in 0..p.len() {
            if seen[cursor] {
                return false;
            }
            seen[cursor] = true;
            cursor = p[cursor];
        }
        true
    }

    pub fn is_band_word(&self) -> bool {
        self.letters
            .iter()
            .all(|l| matches!(l, BraidLetter::Band(_, _)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={};", self.strands)?;
        for letter in &self.letters {
            match *letter {
                BraidLetter::Band(i, j) => write!(f, " b({i},{j})")?,
                BraidLetter::Artin(k, Sign::Pos) => write!(f, " a({k})")?,
                BraidLetter::Artin(k, Sign::Neg) => write!(f, " A({k})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| BraidError::ParseError {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let body = s.trim();
        let body = body
            .strip_prefix("s=")
            .ok_or_else(|| parse_err("expected leading \"s=N;\""))?;
        let (count, rest) = body
            .split_once(';')
            .ok_or_else(|| parse_err("expected ';' after the strand count"))?;
        let strands: usize = count
            .trim()
            .parse()
            .map_err(|_| parse_err("strand count must be a positive integer"))?;
        let mut letters = Vec::new();
        for token in rest.split_whitespace() {
            letters.push(parse_letter(token).ok_or_else(|| {
                parse_err(&format!("unrecognized letter {token:?}"))
            })?);
        }
        BraidWord::new(strands, letters)
    }
}

fn parse_letter(token: &str) -> Option<BraidLetter> {
    if let Some(inner) = token.strip_prefix("b(").and_then(|t| t.strip_suffix(')')) {
        let (i, j) = inner.split_once(',')?;
        return Some(BraidLetter::Band(
            i.trim().parse().ok()?,
            j.trim().parse().ok()?,
        ));
    }
    if let Some(inner) = token.strip_prefix("a(").and_then(|t| t.strip_suffix(')')) {
        return Some(BraidLetter::Artin(inner.trim().parse().ok()?, Sign::Pos));
    }
    if let Some(inner) = token.strip_prefix("A(").and_then(|t| t.strip_suffix(')')) {
        return Some(BraidLetter::Artin(inner.trim().parse().ok()?, Sign::Neg));
    }
    None
}

/// Extracts a positive band word from a single-arc divide by sweeping the
/// region's columns left to right: a column of height h contributes the
/// block b(1,2) b(2,3) ... b(h−1,h). The word is checked against the two
/// structural contracts before it is returned: the letter/strand relation
/// c − s + 1 = 2·d(P), and knottedness of the closure.
pub fn divide_to_braid(d: &Divide) -> Result<BraidWord, BraidError> {
    if d.component_profile() != (1, 0) {
        return Err(BraidError::NotAnArc);
    }
    let arc = &d.components[0];
    let mut cells: BTreeSet<(i64, i64)> = BTreeSet::new();
    for w in arc.vertices.windows(2) {
        cells.insert((w[0].x.min(w[1].x), w[0].y.min(w[1].y)));
    }
    let heights = column_profile(&cells)?;
    let strands = heights[0] as usize;
    let mut letters = Vec::new();
    for &h in &heights {
        for k in 1..h as usize {
            letters.push(BraidLetter::Band(k, k + 1));
        }
    }
    let word = BraidWord::new(strands, letters).expect("sweep letters are within range");

    let c = word.letters.len() as i64;
    let s = word.strands as i64;
    if c - s + 1 != 2 * d.double_point_count() as i64 {
        return Err(BraidError::UnsupportedGeometry(format!(
            "sweep emitted {c} letters on {s} strands, inconsistent with {} double points",
            d.double_point_count()
        )));
    }
    if !word.is_knot_closure() {
        return Err(BraidError::UnsupportedGeometry(
            "sweep word does not close to a knot".to_owned(),
        ));
    }
    Ok(word)
}

/// Bottom-aligned contiguous column heights of the swept cells, required to
/// be non-increasing left to right.
fn column_profile(cells: &BTreeSet<(i64, i64)>) -> Result<Vec<i64>, BraidError> {
    let unsupported =
        |detail: String| -> BraidError { BraidError::UnsupportedGeometry(detail) };
    let y0 = cells.iter().map(|c| c.1).min().expect("an arc covers a cell");
    let x_min = cells.iter().map(|c| c.0).min().unwrap();
    let x_max = cells.iter().map(|c| c.0).max().unwrap();
    let mut heights = Vec::with_capacity((x_max - x_min + 1) as usize);
    for x in x_min..=x_max {
        let ys: Vec<i64> = cells
            .iter()
            .filter(|c| c.0 == x)
            .map(|c| c.1)
            .collect();
        let h = ys.len() as i64;
        if h == 0 || ys[0] != y0 || ys != (y0..y0 + h).collect::<Vec<_>>() {
            return Err(unsupported(format!(
                "column {x} is not a bottom-aligned contiguous stack"
            )));
        }
        heights.push(h);
    }
    if heights.windows(2).any(|w| w[0] < w[1]) {
        return Err(unsupported(
            "column heights increase left to right".to_owned(),
        ));
    }
    Ok(heights)
}

/// Expands each band letter into its Artin conjugate word
/// (σ_{j−1} ⋯ σ_{i+1}) σ_i (σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹); Artin letters pass
/// through unchanged. The closure link is unaffected.
pub fn band_to_artin(w: &BraidWord) -> BraidWord {
    let mut letters = Vec::new();
    for letter in &w.letters {
        match *letter {
            BraidLetter::Artin(k, sign) => letters.push(BraidLetter::Artin(k, sign)),
            BraidLetter::Band(i, j) => {
                for k in (i + 1..j).rev() {
                    letters.push(BraidLetter::Artin(k, Sign::Pos));
                }
                letters.push(BraidLetter::Artin(i, Sign::Pos));
                for k in i + 1..j {
                    letters.push(BraidLetter::Artin(k, Sign::Neg));
                }
            }
        }
    }
    BraidWord {
        strands: w.strands,
        letters,
    }
}

/// Normalized Alexander polynomial of the closure of `w`, which must be a
/// knot. Computed as det(ρ(w) − I) over the reduced Burau representation,
/// divided by 1 + t + ... + t^{s−1}, all in exact arithmetic.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly, BraidError> {
    if !w.is_knot_closure() {
        return Err(BraidError::NotAKnotClosure);
    }
    let s = w.strands;
    if s == 1 {
        return Ok(LaurentPoly::one());
    }
    let n = s - 1;

    // accumulate the word's reduced Burau matrix column by column
    let mut cols: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            let mut col = vec![LaurentPoly::zero(); n];
            col[i] = LaurentPoly::one();
            col
        })
        .collect();
    for letter in &band_to_artin(w).letters {
        let BraidLetter::Artin(k, sign) = *letter else {
            unreachable!("band letters were expanded");
        };
        apply_artin(&mut cols, n, k, sign);
    }

    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].clone() - LaurentPoly::one();
    }
    let det = determinant(m);
    let strand_quotient = LaurentPoly::from_coeffs(&vec![1i64; s]);
    let poly = det
        .exact_div(&strand_quotient)
        .expect("the Burau determinant of a knot closure divides the strand quotient");
    Ok(poly.normalized())
}

/// Right-multiplies the accumulated matrix by the reduced Burau image of
/// σ_k^{±1}; only columns k−2, k−1, k (0-indexed) change.
fn apply_artin(cols: &mut [Vec<LaurentPoly>], n: usize, k: usize, sign: Sign) {
    let kappa = k - 1;
    let old = cols[kappa].clone();
    let scaled = |poly: &LaurentPoly, c: i64, e: i64| poly.clone() * LaurentPoly::monomial(c, e);
    match sign {
        Sign::Pos => {
            if kappa >= 1 {
                for (entry, o) in cols[kappa - 1].iter_mut().zip(&old) {
                    *entry = entry.clone() + scaled(o, 1, 1);
                }
            }
            if kappa + 1 < n {
                for (entry, o) in cols[kappa + 1].iter_mut().zip(&old) {
                    *entry = entry.clone() + o.clone();
                }
            }
            for (entry, o) in cols[kappa].iter_mut().zip(&old) {
                *entry = scaled(o, -1, 1);
            }
        }
        Sign::Neg => {
            if kappa >= 1 {
                for (entry, o) in cols[kappa - 1].iter_mut().zip(&old) {
                    *entry = entry.clone() + o.clone();
                }
            }
            if kappa + 1 < n {
                for (entry, o) in cols[kappa + 1].iter_mut().zip(&old) {
                    *entry = entry.clone() + scaled(o, 1, -1);
                }
            }
            for (entry, o) in cols[kappa].iter_mut().zip(&old) {
                *entry = scaled(o, -1, -1);
            }
        }
    }
}

/// Fraction-free determinant (Bareiss); every interior division is exact
/// over the Laurent ring.
fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, pivot_row);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Closed form for the torus knot T(a, b):
/// (t^{ab} − 1)(t − 1) / ((t^a − 1)(t^b − 1)), in normal form.
pub fn alexander_torus(a: i64, b: i64) -> Result<LaurentPoly, BraidError> {
    assert!(a >= 1 && b >= 1, "torus parameters must be positive");
    if a.gcd(&b) != 1 {
        return Err(BraidError::NotCoprime { a, b });
    }
    let numerator = LaurentPoly::power_diff(a * b, 0) * LaurentPoly::power_diff(1, 0);
    let poly = numerator
        .exact_div(&LaurentPoly::power_diff(a, 0))
        .and_then(|p| p.exact_div(&LaurentPoly::power_diff(b, 0)))
        .expect("the coprime torus quotient divides exactly");
    Ok(poly.normalized())
}

/// Closed form for the (m, r)-cable of the trefoil:
/// Δ_{T(2,3)}(t^m) · Δ_{T(m,r)}(t), in normal form.
pub fn alexander_cable_trefoil(m: i64, r: i64) -> Result<LaurentPoly, BraidError> {
    assert!(m >= 1 && r >= 1, "cable parameters must be positive");
    if m.gcd(&r) != 1 {
        return Err(BraidError::NotCoprime { a: m, b: r });
    }
    let companion = alexander_torus(2, 3)?.subst_power(m);
    let pattern = alexander_torus(m, r)?;
    Ok((companion * pattern).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{billiard, stair_couture, stair_p, FamilySpec};
    use crate::region::Region;
    use crate::tracer::trace;

    fn poly(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    fn word(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    fn braid_of(region: &Region) -> BraidWord {
        divide_to_braid(&trace(region).unwrap()).unwrap()
    }

    fn family_braid(spec: FamilySpec) -> BraidWord {
        braid_of(&spec.region().unwrap())
    }

    #[test]
    fn band_expansion_examples() {
        let w = band_to_artin(&word("s=2; b(1,2)"));
        assert_eq!(w.letters, vec![BraidLetter::Artin(1, Sign::Pos)]);
        let w = band_to_artin(&word("s=3; b(1,3)"));
        assert_eq!(
            w.letters,
            vec![
                BraidLetter::Artin(2, Sign::Pos),
                BraidLetter::Artin(1, Sign::Pos),
                BraidLetter::Artin(2, Sign::Neg),
            ]
        );
    }

    #[test]
    fn band_expansion_preserves_the_permutation() {
        for text in ["s=5; b(2,5) b(1,3) b(4,5)", "s=4; b(1,4) a(2) b(2,3)"] {
            let w = word(text);
            assert_eq!(w.permutation(), band_to_artin(&w).permutation());
        }
    }

    #[test]
    fn trefoil_from_artin_letters() {
        assert_eq!(alexander(&word("s=2; a(1) a(1) a(1)")).unwrap(), poly("1 - t + t^2"));
    }

    #[test]
    fn unknot_words() {
        assert_eq!(alexander(&word("s=1;")).unwrap(), LaurentPoly::one());
        assert_eq!(alexander(&word("s=3; a(1) a(2)")).unwrap(), LaurentPoly::one());
        // a generator times its inverse cancels
        assert_eq!(alexander(&word("s=2; a(1) A(1) a(1)")).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn link_closures_are_rejected() {
        assert_eq!(alexander(&word("s=2;")), Err(BraidError::NotAKnotClosure));
        assert_eq!(
            alexander(&word("s=3; a(1) a(1)")),
            Err(BraidError::NotAKnotClosure)
        );
    }

    #[test]
    fn rectangle_sweeps() {
        let w = braid_of(&billiard(2, 3).unwrap());
        assert_eq!(w.strands, 3);
        assert!(w.is_band_word());
        assert_eq!(w.letters.len() as i64 - w.strands as i64 + 1, 2);
        assert_eq!(alexander(&w).unwrap(), poly("1 - t + t^2"));

        let w = braid_of(&billiard(1, 1).unwrap());
        assert_eq!((w.strands, w.letters.len()), (1, 0));
        assert_eq!(alexander(&w).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn torus_links_are_not_arcs() {
        let divide = trace(&billiard(2, 4).unwrap()).unwrap();
        assert_eq!(divide_to_braid(&divide), Err(BraidError::NotAnArc));
    }

    #[test]
    fn staircase_sweep_counts() {
        let w = family_braid(FamilySpec::P(2));
        assert_eq!(w.letters.len() as i64 - w.strands as i64 + 1, 4);
        assert_eq!(alexander(&w).unwrap(), alexander_torus(2, 5).unwrap());
    }

    #[test]
    fn staircase_sweeps_match_the_torus_oracle() {
        for (spec, a, b) in [
            (FamilySpec::P(3), 3, 7),
            (FamilySpec::P(-3), 3, 5),
            (FamilySpec::Couture(4), 4, 7),
        ] {
            let w = family_braid(spec);
            assert_eq!(
                alexander(&w).unwrap(),
                alexander_torus(a, b).unwrap(),
                "{spec} should close to T({a},{b})"
            );
        }
        assert_eq!(
            alexander(&braid_of(&billiard(3, 7).unwrap())).unwrap(),
            alexander_torus(3, 7).unwrap()
        );
    }

    #[test]
    fn cable_sweeps_match_the_cable_oracle() {
        let w = family_braid(FamilySpec::Pm(-2));
        assert_eq!(alexander(&w).unwrap(), alexander_cable_trefoil(2, 11).unwrap());
        let w = family_braid(FamilySpec::Pm(2));
        assert_eq!(alexander(&w).unwrap(), alexander_cable_trefoil(2, 13).unwrap());
    }

    #[test]
    fn transposed_regions_present_the_same_knot() {
        let stair = stair_p(2).unwrap();
        let direct = braid_of(&Region::new(stair.clone()).normalize_parity().unwrap());
        let flipped = braid_of(&Region::new(stair.transpose()).normalize_parity().unwrap());
        assert_eq!(alexander(&direct).unwrap(), alexander(&flipped).unwrap());
    }

    #[test]
    fn alexander_degree_doubles_the_double_points() {
        for region in [
            billiard(2, 5).unwrap(),
            billiard(3, 4).unwrap(),
            FamilySpec::P(-2).region().unwrap(),
            FamilySpec::Pm(1).region().unwrap(),
            Region::new(stair_couture(3).unwrap()).normalize_parity().unwrap(),
        ] {
            let divide = trace(&region).unwrap();
            let delta = alexander(&divide_to_braid(&divide).unwrap()).unwrap();
            assert_eq!(delta.span(), Some(2 * divide.double_point_count() as i64));
            assert!(delta.is_palindromic());
            assert_eq!(delta.eval_one().magnitude().to_string(), "1");
        }
    }

    #[test]
    fn torus_oracle_closed_forms() {
        assert_eq!(alexander_torus(2, 3).unwrap(), poly("1 - t + t^2"));
        assert_eq!(alexander_torus(1, 9).unwrap(), LaurentPoly::one());
        let t37 = alexander_torus(3, 7).unwrap();
        assert_eq!(t37.span(), Some(12));
        assert_eq!(t37.eval_one().to_string(), "1");
        assert_eq!(
            alexander_torus(2, 4),
            Err(BraidError::NotCoprime { a: 2, b: 4 })
        );
    }

    #[test]
    fn cable_oracle_closed_forms() {
        assert_eq!(alexander_cable_trefoil(1, 7).unwrap(), poly("1 - t + t^2"));
        let c = alexander_cable_trefoil(2, 11).unwrap();
        assert_eq!(c.span(), Some(14));
        assert_eq!(c.eval_one().magnitude().to_string(), "1");
        assert!(c.is_palindromic());
        assert_eq!(
            alexander_cable_trefoil(2, 6),
            Err(BraidError::NotCoprime { a: 2, b: 6 })
        );
    }

    #[test]
    fn word_text_round_trips() {
        for text in ["s=4; b(1,3) b(2,4)", "s=3; a(1) A(2)", "s=1;"] {
            assert_eq!(word(text).to_string(), text);
        }
        assert!(matches!(
            "s=0;".parse::<BraidWord>(),
            Err(BraidError::InvalidLetter { .. })
        ));
        assert!(matches!(
            "s=2; b(2,1)".parse::<BraidWord>(),
            Err(BraidError::InvalidLetter { .. })
        ));
        assert!(matches!(
            "s=2; c(1)".parse::<BraidWord>(),
            Err(BraidError::ParseError { .. })
        ));
        assert!(matches!(
            "2; a(1)".parse::<BraidWord>(),
            Err(BraidError::ParseError { .. })
        ));
    }
}
