//! Closed forms for the extremal values, evaluated in exact integer
//! arithmetic.
//!
//! Radii that may be half-integers are passed doubled (`doubled_r = 2r`).
//! Every division is checked to be exact; a remainder is reported as
//! [`Error::NotDivisible`] rather than truncated.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

fn int(x: u64) -> i128 {
    i128::from(x)
}

fn add(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn exact_div(numerator: i128, denominator: i128) -> Result<i128, Error> {
    if numerator % denominator != 0 {
        return Err(Error::NotDivisible {
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

/// Binomial coefficient `C(n, 2)`.
pub fn choose2(n: u64) -> Result<i128, Error> {
    let n = int(n);
    exact_div(mul(n, n - 1)?, 2)
}

fn choose3(n: u64) -> Result<i128, Error> {
    if n < 3 {
        return Ok(0);
    }
    let n = int(n);
    exact_div(mul(mul(n, n - 1)?, n - 2)?, 6)
}

fn require(cond: bool, msg: &'static str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg))
    }
}

/// Total distance of `G_{n,r,s}`: `C(n,2) + (r-1)^2 n - r(r-1)^2`.
pub fn eq1_wiener(n: u64, r: u64) -> Result<i128, Error> {
    require(r >= 3, "eq1 needs r >= 3")?;
    require(n >= 2 * r, "eq1 needs n >= 2r")?;
    let (ni, ri) = (int(n), int(r));
    let a = mul(ri - 1, ri - 1)?;
    sub(add(choose2(n)?, mul(a, ni)?)?, mul(ri, a)?)
}

/// Total distance of `D_{n,r,s}`: `2C(n,2) + (r-1)^2 n - 4C(r,3)`.
pub fn eq2_wiener(n: u64, r: u64) -> Result<i128, Error> {
    require(r >= 3, "eq2 needs r >= 3")?;
    require(n >= 2 * r, "eq2 needs n >= 2r")?;
    let (ni, ri) = (int(n), int(r));
    let a = mul(ri - 1, ri - 1)?;
    sub(
        add(mul(2, choose2(n)?)?, mul(a, ni)?)?,
        mul(4, choose3(r)?)?,
    )
}

/// Maximum number of edges of a graph of order `n` and radius `r`.
pub fn vizing_max_size(n: u64, r: u64) -> Result<i128, Error> {
    match r {
        0 => Err(Error::Domain("radius must be positive")),
        1 => {
            require(n >= 2, "radius 1 needs n >= 2")?;
            choose2(n)
        }
        2 => {
            require(n >= 4, "radius 2 needs n >= 4")?;
            let n = int(n);
            Ok(mul(n, n - 2)? / 2)
        }
        _ => {
            require(n >= 2 * r, "radius r >= 3 needs n >= 2r")?;
            let (ni, ri) = (int(n), int(r));
            let d = ni - 2 * ri;
            exact_div(sub(add(mul(d, d)?, mul(5, ni)?)?, mul(6, ri)?)?, 2)
        }
    }
}

/// Maximum number of arcs of a digraph of order `n` and out-radius `r`:
/// `(n-r+1)^2 + (r-3)`.
pub fn digraph_max_arcs(n: u64, r: u64) -> Result<i128, Error> {
    require(r >= 3, "digraph arc bound needs r >= 3")?;
    require(n >= 2 * r, "digraph arc bound needs n >= 2r")?;
    let (ni, ri) = (int(n), int(r));
    let d = ni - ri + 1;
    add(mul(d, d)?, ri - 3)
}

/// Minimum total distance of a digraph of order `n` and radius
/// `doubled_r / 2` for radius 1, 3/2 and 2.
pub fn min_digraph_wiener_small_r(n: u64, doubled_r: u64) -> Result<i128, Error> {
    match doubled_r {
        2 => {
            require(n >= 2, "radius 1 needs n >= 2")?;
            mul(2, choose2(n)?)
        }
        3 => {
            require(n >= 3, "radius 3/2 needs n >= 3")?;
            add(mul(2, choose2(n)?)?, int(n.div_ceil(2)))
        }
        4 => {
            require(n >= 3, "radius 2 needs n >= 3")?;
            mul(int(n), int(n))
        }
        _ => Err(Error::Domain("doubled radius must be 2, 3 or 4")),
    }
}

/// `2C(n,2) + floor((r - 1/2)^2) n` with `r = doubled_r / 2`.
///
/// This is the leading part of the minimum only; the constructions sit a
/// bounded distance away from it in either direction.
pub fn min_rad_lower_bound(n: u64, doubled_r: u64) -> Result<i128, Error> {
    require(doubled_r >= 5, "needs r >= 5/2")?;
    require(2 * n > doubled_r + 4, "needs n > r + 2")?;
    let d = int(doubled_r) - 1;
    add(mul(2, choose2(n)?)?, mul(mul(d, d)? / 4, int(n))?)
}

/// `2rn^2 - 4r^2 n + 2r(2r-1) + r^3 - r^2`.
pub fn maxrad_construction_lower(n: u64, r: u64) -> Result<i128, Error> {
    require(r >= 1, "needs r >= 1")?;
    require(n > 2 * r, "needs n >= 2r + 1")?;
    let (n, r) = (int(n), int(r));
    let mut v = mul(mul(2 * r, n)?, n)?;
    v = sub(v, mul(mul(4 * r, r)?, n)?)?;
    v = add(v, mul(2 * r, 2 * r - 1)?)?;
    add(v, mul(mul(r, r)?, r - 1)?)
}

/// The unique split `n = q r + k` with `2 <= k <= r + 1`.
pub fn residue_split(n: u64, r: u64) -> Result<(u64, u64), Error> {
    require(r >= 2, "needs r >= 2")?;
    require(n >= r + 2, "needs n >= r + 2")?;
    let k = (n - 2) % r + 2;
    Ok(((n - k) / r, k))
}

/// Total distance of the large out-radius family:
/// `sum_{p<q} sum_{i=1..r} (n-pr)(n-pr-i) + k * k(k-1)/2` for `n = qr + k`.
pub fn maxradplus_construction_wiener(n: u64, r: u64) -> Result<i128, Error> {
    let (q, k) = residue_split(n, r)?;
    let (ni, ri) = (int(n), int(r));
    let mut total: i128 = 0;
    for p in 0..int(q) {
        let m = ni - p * ri;
        // sum over i of m(m - i) = r m^2 - m r(r+1)/2
        let block = sub(mul(ri, mul(m, m)?)?, mul(m, ri * (ri + 1) / 2)?)?;
        total = add(total, block)?;
    }
    let k = int(k);
    add(total, mul(k, k * (k - 1) / 2)?)
}

/// `(n^3 - n) / 3`, the largest total distance at out-radius 1.
pub fn radplus1_max_wiener(n: u64) -> Result<i128, Error> {
    require(n >= 1, "needs n >= 1")?;
    let n = int(n);
    exact_div(sub(mul(mul(n, n)?, n)?, n)?, 3)
}

/// Formula names accepted by [`evaluate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    Eq1,
    Eq2,
    Vizing,
    DigraphMaxArcs,
    MinDigraphSmall,
    MinRadBound,
    MaxRadLower,
    MaxRadPlus,
    RadPlus1Max,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::Eq1,
        FormulaId::Eq2,
        FormulaId::Vizing,
        FormulaId::DigraphMaxArcs,
        FormulaId::MinDigraphSmall,
        FormulaId::MinRadBound,
        FormulaId::MaxRadLower,
        FormulaId::MaxRadPlus,
        FormulaId::RadPlus1Max,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Eq1 => "eq1",
            FormulaId::Eq2 => "eq2",
            FormulaId::Vizing => "vizing",
            FormulaId::DigraphMaxArcs => "digraph-max-arcs",
            FormulaId::MinDigraphSmall => "min-digraph-small",
            FormulaId::MinRadBound => "min-rad-bound",
            FormulaId::MaxRadLower => "maxrad-lower",
            FormulaId::MaxRadPlus => "maxradplus",
            FormulaId::RadPlus1Max => "radplus1-max",
        }
    }

    /// Names of the parameters, in the order [`evaluate`] expects them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            FormulaId::MinDigraphSmall | FormulaId::MinRadBound => &["n", "doubled_r"],
            FormulaId::RadPlus1Max => &["n"],
            _ => &["n", "r"],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or(Error::Domain("unknown formula name"))
    }
}

/// An evaluated formula together with its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub id: FormulaId,
    pub params: Vec<u64>,
    pub value: i128,
}

pub fn evaluate(id: FormulaId, params: &[u64]) -> Result<FormulaResult, Error> {
    if params.len() != id.params().len() {
        return Err(Error::Domain("wrong number of formula parameters"));
    }
    let a = params[0];
    let b = params.get(1).copied().unwrap_or(0);
    let value = match id {
        FormulaId::Eq1 => eq1_wiener(a, b),
        FormulaId::Eq2 => eq2_wiener(a, b),
        FormulaId::Vizing => vizing_max_size(a, b),
        FormulaId::DigraphMaxArcs => digraph_max_arcs(a, b),
        FormulaId::MinDigraphSmall => min_digraph_wiener_small_r(a, b),
        FormulaId::MinRadBound => min_rad_lower_bound(a, b),
        FormulaId::MaxRadLower => maxrad_construction_lower(a, b),
        FormulaId::MaxRadPlus => maxradplus_construction_wiener(a, b),
        FormulaId::RadPlus1Max => radplus1_max_wiener(a),
    }?;
    Ok(FormulaResult {
        id,
        params: params.to_vec(),
        value,
    })
}
