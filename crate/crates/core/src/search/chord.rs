//! Backward-chord search over `DP(n, 2r)` for large total distance at
//! radius `r`.
//!
//! A chord set is valid when the digraph has doubled radius exactly `2r`.
//! For `n >= 2r + 1` the independent blow-up set has at least two vertices,
//! and every distance is then independent of its size, so the total
//! distance is an exact quadratic in `n`. It is recovered from BFS at three
//! orders.
//!
//! Two monotonicity facts drive the branch and bound. Adding a chord never
//! lengthens a path, so once the doubled radius falls below `2r` no superset
//! is valid. Each chord strictly shortens its own pair, so a proper superset
//! has a strictly smaller polynomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::canon::{canon_dense, CanonicalCertificate};
use super::dense::Dense;
use crate::constructions::DP;
use crate::Error;

/// Radius range the search accepts.
pub const CHORD_RADII: core::ops::RangeInclusive<usize> = 2..=7;

/// `a2 n^2 + a1 n + a0`, ordered by leading coefficient first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WienerPolynomial {
    pub a2: i128,
    pub a1: i128,
    pub a0: i128,
}

impl WienerPolynomial {
    pub fn eval(&self, n: i128) -> i128 {
        (self.a2 * n + self.a1) * n + self.a0
    }

    /// The quadratic through `(n0, y0)`, `(n0 + 1, y1)`, `(n0 + 2, y2)`.
    pub fn interpolate(n0: i128, y: [i128; 3]) -> Result<Self, Error> {
        let second = y[2] - 2 * y[1] + y[0];
        if second % 2 != 0 {
            return Err(Error::NotDivisible {
                numerator: second,
                denominator: 2,
            });
        }
        let a2 = second / 2;
        let a1 = (y[1] - y[0]) - a2 * (2 * n0 + 1);
        let a0 = y[0] - a2 * n0 * n0 - a1 * n0;
        Ok(WienerPolynomial { a2, a1, a0 })
    }
}

impl fmt::Display for WienerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n^2", self.a2)?;
        for (c, tail) in [(self.a1, "n"), (self.a0, "")] {
            let sign = if c < 0 { '-' } else { '+' };
            write!(f, " {sign} {}{tail}", c.unsigned_abs())?;
        }
        Ok(())
    }
}

/// One optimal chord set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordSearchResult {
    pub r: usize,
    /// 1-based `(i, j)` for the chord `u_i -> u_j`, sorted.
    pub chords: Vec<(usize, usize)>,
    pub polynomial: WienerPolynomial,
    /// Position in the ranking by polynomial. Every reported set is tied at
    /// the top, so this is always 1.
    pub rank: usize,
    /// Whether the set contains `u_{2r-1} -> u_r`.
    pub contains_closing_arc: bool,
    /// Sets for `r >= 5` are only conjectured to be extremal.
    pub conjectured: bool,
    /// Certificate of the digraph at `n = 2r + 1`.
    pub certificate: CanonicalCertificate,
}

/// Full outcome: the best polynomial for every chord count up to the
/// selected one, and the optimal sets at the selected count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordSearch {
    pub r: usize,
    /// `best_by_k[k]` is the best polynomial over valid sets of `k` chords,
    /// or `None` if there is no valid set of that size.
    pub best_by_k: Vec<Option<WienerPolynomial>>,
    /// First `k` whose best is not beaten by `k + 1` chords.
    pub selected_k: usize,
    pub results: Vec<ChordSearchResult>,
}

struct Level {
    /// Strict lower threshold inherited from the previous count, if any.
    floor: Option<WienerPolynomial>,
    best: Option<WienerPolynomial>,
    sets: Vec<Vec<usize>>,
}

impl Level {
    fn bar(&self) -> Option<WienerPolynomial> {
        self.best.or(self.floor)
    }
}

struct Searcher {
    r: usize,
    candidates: Vec<(usize, usize)>,
    /// `DP(n, 2r)` at the three interpolation orders.
    bases: [Dense; 3],
}

impl Searcher {
    fn new(r: usize) -> Result<Self, Error> {
        let mut candidates = Vec::new();
        for i in 2..2 * r {
            for j in 1..i {
                candidates.push((i, j));
            }
        }
        let n0 = 2 * r + 1;
        let mut bases = [Dense::new(1, true); 3];
        for (t, b) in bases.iter_mut().enumerate() {
            *b = Dense::from_topology(&DP(n0 + t, 2 * r)?)?;
        }
        Ok(Searcher {
            r,
            candidates,
            bases,
        })
    }

    fn apply(&self, set: &[usize]) -> [Dense; 3] {
        let mut ds = self.bases;
        for d in ds.iter_mut() {
            for &c in set {
                let (i, j) = self.candidates[c];
                d.add_arc(i - 1, j - 1);
            }
        }
        ds
    }

    fn polynomial(&self, ds: &[Dense; 3]) -> WienerPolynomial {
        let mut y = [0i128; 3];
        for (t, d) in ds.iter().enumerate() {
            y[t] = i128::from(d.digraph_wiener().expect("DP is strongly connected"));
        }
        WienerPolynomial::interpolate(2 * self.r as i128 + 1, y)
            .expect("the total distance is quadratic in n")
    }

    fn doubled_radius(d: &Dense) -> u32 {
        d.doubled_radius().expect("DP is strongly connected")
    }

    fn best_of_size(&self, k: usize, floor: Option<WienerPolynomial>) -> Level {
        let mut level = Level {
            floor,
            best: None,
            sets: Vec::new(),
        };
        let mut set = Vec::with_capacity(k);
        self.extend(k, 0, &mut set, &mut level);
        level
    }

    fn extend(&self, k: usize, from: usize, set: &mut Vec<usize>, level: &mut Level) {
        let target = 2 * self.r as u32;
        if set.len() == k {
            let ds = self.apply(set);
            if ds.iter().any(|d| Self::doubled_radius(d) != target) {
                return;
            }
            let p = self.polynomial(&ds);
            if let Some(f) = level.floor {
                if p <= f {
                    return;
                }
            }
            match level.best.map(|b| p.cmp(&b)) {
                None | Some(Ordering::Greater) => {
                    level.best = Some(p);
                    level.sets.clear();
                    level.sets.push(set.clone());
                }
                Some(Ordering::Equal) => level.sets.push(set.clone()),
                Some(Ordering::Less) => {}
            }
            return;
        }
        let need = k - set.len();
        for c in from..self.candidates.len() {
            if self.candidates.len() - c < need {
                break;
            }
            set.push(c);
            let ds = self.apply(set);
            let alive = Self::doubled_radius(&ds[0]) >= target;
            let promising =
                set.len() == k || level.bar().is_none_or(|bar| self.polynomial(&ds) > bar);
            if alive && promising {
                self.extend(k, c + 1, set, level);
            }
            set.pop();
        }
    }
}

/// Runs the search for `2 <= r <= 7`: for `k = 0, 1, ...` find the best
/// valid sets of `k` chords and stop at the first `k` that `k + 1` chords do
/// not strictly improve on. Optimal sets are reported once per isomorphism
/// class of the resulting digraph, keeping the lexicographically smallest
/// set.
pub fn chord_augmentation_search(r: usize) -> Result<ChordSearch, Error> {
    if !CHORD_RADII.contains(&r) {
        return Err(Error::Domain("chord search needs 2 <= r <= 7"));
    }
    let s = Searcher::new(r)?;
    let max_k = s.candidates.len();
    let mut best_by_k = Vec::new();
    let mut current = s.best_of_size(0, None);
    let mut k = 0;
    loop {
        best_by_k.push(current.best);
        if k == max_k {
            break;
        }
        match current.best {
            None => {
                k += 1;
                current = s.best_of_size(k, None);
            }
            Some(b) => {
                let next = s.best_of_size(k + 1, Some(b));
                if next.best.is_none() {
                    break;
                }
                k += 1;
                current = next;
            }
        }
    }
    let Some(poly) = current.best else {
        return Err(Error::Domain("no chord set reaches the radius"));
    };
    let mut classes: BTreeMap<CanonicalCertificate, Vec<(usize, usize)>> = BTreeMap::new();
    for set in &current.sets {
        let d = s.apply(set)[0];
        let cert = canon_dense(&d).certificate(&d);
        let mut chords: Vec<(usize, usize)> = set.iter().map(|&c| s.candidates[c]).collect();
        chords.sort_unstable();
        classes
            .entry(cert)
            .and_modify(|old| {
                if chords < *old {
                    *old = chords.clone();
                }
            })
            .or_insert(chords);
    }
    let mut results: Vec<ChordSearchResult> = classes
        .into_iter()
        .map(|(certificate, chords)| ChordSearchResult {
            r,
            contains_closing_arc: chords.contains(&(2 * r - 1, r)),
            chords,
            polynomial: poly,
            rank: 1,
            conjectured: r >= 5,
            certificate,
        })
        .collect();
    results.sort_by(|a, b| a.chords.cmp(&b.chords));
    Ok(ChordSearch {
        r,
        best_by_k,
        selected_k: k,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chord_augmented, max_rad_chord_sets};
    use crate::metrics::wiener_digraph;

    fn sorted(sets: &[&[(usize, usize)]]) -> Vec<Vec<(usize, usize)>> {
        let mut out: Vec<Vec<(usize, usize)>> = sets
            .iter()
            .map(|s| {
                let mut v = s.to_vec();
                v.sort_unstable();
                v
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn interpolation() {
        let p = WienerPolynomial {
            a2: 3,
            a1: -7,
            a0: 11,
        };
        let y = [p.eval(5), p.eval(6), p.eval(7)];
        assert_eq!(WienerPolynomial::interpolate(5, y).unwrap(), p);
        assert_eq!(alloc::format!("{p}"), "3n^2 - 7n + 11");
    }

    #[test]
    fn small_radii_match_fixtures() {
        for r in 2..=4 {
            let out = chord_augmentation_search(r).unwrap();
            let found: Vec<_> = out.results.iter().map(|x| x.chords.clone()).collect();
            assert_eq!(found, sorted(max_rad_chord_sets(r)), "r={r}");
            for res in &out.results {
                assert!(!res.conjectured);
                for n in [2 * r + 5, 3 * r + 7] {
                    let d = chord_augmented(n, r, &res.chords).unwrap();
                    let w = wiener_digraph(&d).finite().unwrap();
                    assert_eq!(i128::from(w), res.polynomial.eval(n as i128));
                }
            }
        }
        let r2 = chord_augmentation_search(2).unwrap();
        assert_eq!(r2.results.len(), 1);
        assert_eq!(r2.selected_k, 1);
        assert!(!r2.results[0].contains_closing_arc);
    }

    #[test]
    fn out_of_range() {
        assert!(chord_augmentation_search(1).is_err());
        assert!(chord_augmentation_search(8).is_err());
    }
}
