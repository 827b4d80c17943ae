//! Root-system constants for the simple types A through G.
//!
//! Weights are written in the fundamental-weight basis. The Cartan matrix is
//! stored so that column `j` holds the coordinates of the simple root
//! `alpha_j` in that basis, i.e. `cartan[i][j] = <alpha_j, alpha_i^vee>`.
//!
//! Node numbering:
//!
//! | family | numbering                                                        |
//! |--------|------------------------------------------------------------------|
//! | A_r    | chain 1 - 2 - ... - r                                            |
//! | B_r    | chain, `alpha_r` short, double edge between r-1 and r            |
//! | C_r    | chain, `alpha_r` long, double edge between r-1 and r             |
//! | D_r    | chain 1 - ... - (r-1), `alpha_r` attached to `alpha_{r-2}`       |
//! | E_6,7,8| Bourbaki: 1 - 3 - 4 - 5 - 6 (- 7 - 8), `alpha_2` attached to 4    |
//! | F_4    | Bourbaki: `alpha_1, alpha_2` long, double edge 2 => 3            |
//! | G_2    | Bourbaki: `alpha_1` short, `alpha_2` long                        |
//!
//! With this numbering the highest root `alpha_0 = sum n_i alpha_i` is
//! attached in the extended diagram to node 1 for C, E7 and F4, to node 2 for
//! B, D (rank >= 4) and E6, and to node 8 for E8.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn has_two_root_lengths(self) -> bool {
        matches!(self, Family::B | Family::C | Family::F | Family::G)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(format!("unknown root system family `{other}`")),
        }
    }
}

/// Integer weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `coeff * varpi_index` (1-based index).
    pub fn fundamental(rank: usize, index: usize, coeff: i64) -> Self {
        let mut w = vec![0; rank];
        w[index - 1] = coeff;
        Weight(w)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// 1-based coefficient access.
    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Reverses the coefficient order (the diagram automorphism of A_r).
    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    pub fn checked_sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn checked_add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err("empty weight".into());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad coefficient `{t}`: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

/// Characteristic of the ground field: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u64 {
    fn from(p: Characteristic) -> u64 {
        p.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `true` iff `0 <= a_i <= p - 1` for all i (all `a_i >= 0` when p = 0).
pub fn is_restricted(w: &Weight, p: Characteristic) -> bool {
    match p.get() {
        0 => w.is_dominant(),
        p => w.coeffs().iter().all(|&a| a >= 0 && (a as u64) < p),
    }
}

#[derive(Debug)]
struct InverseCartan {
    /// `det * cartan^{-1}`, integral.
    adjugate: Vec<Vec<i64>>,
    det: i64,
}

#[derive(Debug)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    inverse: OnceLock<InverseCartan>,
    positive_roots: OnceLock<Vec<Vec<i64>>>,
}

impl Clone for RootDatum {
    fn clone(&self) -> Self {
        RootDatum {
            family: self.family,
            rank: self.rank,
            cartan: self.cartan.clone(),
            highest_root: self.highest_root.clone(),
            inverse: OnceLock::new(),
            positive_roots: OnceLock::new(),
        }
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank { family, rank });
        }
        let cartan = build_cartan(family, rank);
        let highest_root = build_highest_root(family, rank);
        Ok(RootDatum {
            family,
            rank,
            cartan,
            highest_root,
            inverse: OnceLock::new(),
            positive_roots: OnceLock::new(),
        })
    }

    pub fn type_a(rank: usize) -> Result<Self> {
        RootDatum::new(Family::A, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Coefficients `n_i` of the highest root in the simple-root basis.
    pub fn highest_root_coeffs(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(())
    }

    /// Simple root `alpha_i` (1-based) in the fundamental-weight basis.
    pub fn simple_root_as_weight(&self, i: usize) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(Weight((0..self.rank).map(|row| self.cartan[row][i - 1]).collect()))
    }

    /// `sum k_j alpha_j` in the fundamental-weight basis.
    pub fn root_combination(&self, k: &[i64]) -> Weight {
        assert_eq!(k.len(), self.rank);
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(k).map(|(c, kj)| c * kj).sum())
                .collect(),
        )
    }

    /// Exact determinant of the Cartan matrix.
    pub fn cartan_determinant(&self) -> i64 {
        self.inverse_cartan().det
    }

    fn inverse_cartan(&self) -> &InverseCartan {
        self.inverse.get_or_init(|| invert(&self.cartan))
    }

    /// Solves `sum k_j alpha_j = w` over the rationals. Returns `None` unless
    /// every `k_j` is an integer.
    pub fn root_coordinates(&self, w: &Weight) -> Option<Vec<i64>> {
        let inv = self.inverse_cartan();
        let mut k = Vec::with_capacity(self.rank);
        for row in &inv.adjugate {
            let num: i128 = row
                .iter()
                .zip(w.coeffs())
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum();
            if num % inv.det as i128 != 0 {
                return None;
            }
            k.push((num / inv.det as i128) as i64);
        }
        Some(k)
    }

    /// Rational root coordinates `cartan^{-1} w`, as numerators over
    /// `cartan_determinant()`.
    pub fn root_coordinates_scaled(&self, w: &Weight) -> Vec<i128> {
        let inv = self.inverse_cartan();
        inv.adjugate
            .iter()
            .map(|row| {
                row.iter()
                    .zip(w.coeffs())
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum()
            })
            .collect()
    }

    /// Edge multiplicity (0, 1, 2 or 3) between nodes `i` and `j` (0-based).
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else {
            self.cartan[i][j] * self.cartan[j][i]
        }
    }

    /// The unique node attached to `-alpha_0` in the extended diagram, when
    /// there is exactly one (every non-A type except D3). 1-based.
    pub fn extended_node(&self) -> Option<usize> {
        let alpha0 = self.root_combination(&self.highest_root);
        let nz: Vec<usize> = alpha0
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect();
        match nz.as_slice() {
            [j] if self.family != Family::A => Some(*j),
            _ => None,
        }
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        self.positive_roots.get_or_init(|| build_positive_roots(&self.cartan))
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> BigUint {
        weyl_group_order(self.family, self.rank)
    }
}

/// |W| for an irreducible root system.
pub fn weyl_group_order(family: Family, rank: usize) -> BigUint {
    let fact = |n: usize| -> BigUint { (1..=n as u64).map(BigUint::from).product() };
    match family {
        Family::A => fact(rank + 1),
        Family::B | Family::C => (BigUint::one() << rank) * fact(rank),
        Family::D => (BigUint::one() << (rank - 1)) * fact(rank),
        Family::E => match rank {
            6 => BigUint::from(51_840u64),
            7 => BigUint::from(2_903_040u64),
            _ => BigUint::from(696_729_600u64),
        },
        Family::F => BigUint::from(1152u64),
        Family::G => BigUint::from(12u64),
    }
}

fn build_cartan(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..rank {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            link(rank - 2, rank);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..rank {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    // long/short asymmetry: coefficient of varpi_s in a long root alpha_l.
    match family {
        Family::B => c[rank - 1][rank - 2] = -2,
        Family::C => c[rank - 2][rank - 1] = -2,
        Family::F => c[2][1] = -2,
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn build_highest_root(family: Family, rank: usize) -> Vec<i64> {
    match family {
        Family::A => vec![1; rank],
        Family::B => {
            let mut v = vec![2; rank];
            v[0] = 1;
            v
        }
        Family::C => {
            let mut v = vec![2; rank];
            v[rank - 1] = 1;
            v
        }
        Family::D => {
            // alpha_1 + alpha_{r-1} + alpha_r + 2 (alpha_2 + ... + alpha_{r-2})
            let mut v = vec![2; rank];
            v[0] = 1;
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            v
        }
        Family::E => match rank {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Family::F => vec![2, 3, 4, 2],
        Family::G => vec![3, 2],
    }
}

fn invert(cartan: &[Vec<i64>]) -> InverseCartan {
    let n = cartan.len();
    let mut a: Vec<Vec<BigRational>> = cartan
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for x in a[col].iter_mut() {
            *x /= &pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    assert!(det.is_integer());
    let det_i = det.to_integer();
    let adjugate = a
        .into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    let v = x * BigRational::from_integer(det_i.clone());
                    assert!(v.is_integer());
                    v.to_integer().to_i64().expect("adjugate entry fits in i64")
                })
                .collect()
        })
        .collect();
    let det = det_i.to_i64().expect("determinant fits in i64");
    debug_assert!(!det.is_negative());
    InverseCartan { adjugate, det }
}

fn build_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for r in &layer {
        seen.insert(r.clone());
    }
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] >= 0 && seen.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        layer = next;
    }
    all
}

/// Connected components of the subdiagram induced on `nodes` (0-based).
pub(crate) fn components(datum: &RootDatum, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<usize> = HashSet::new();
    let mut out = Vec::new();
    for &start in nodes {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in nodes {
                if datum.bond(u, v) > 0 && seen.insert(u) {
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn simple_roots_type_a() {
        let a2 = RootDatum::type_a(2).unwrap();
        assert_eq!(a2.simple_root_as_weight(1).unwrap(), w(&[2, -1]));
        let a3 = RootDatum::type_a(3).unwrap();
        assert_eq!(a3.simple_root_as_weight(2).unwrap(), w(&[-1, 2, -1]));
        let a1 = RootDatum::type_a(1).unwrap();
        assert_eq!(a1.simple_root_as_weight(1).unwrap(), w(&[2]));
        assert!(matches!(
            a3.simple_root_as_weight(4),
            Err(Error::IndexOutOfRange { index: 4, rank: 3 })
        ));
        assert!(a3.simple_root_as_weight(0).is_err());
    }

    #[test]
    fn highest_roots_match_listings() {
        let e8 = RootDatum::new(Family::E, 8).unwrap();
        assert_eq!(e8.highest_root_coeffs(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = RootDatum::new(Family::F, 4).unwrap();
        assert_eq!(f4.highest_root_coeffs(), &[2, 3, 4, 2]);
        let a4 = RootDatum::type_a(4).unwrap();
        assert_eq!(a4.highest_root_coeffs(), &[1, 1, 1, 1]);
        let c5 = RootDatum::new(Family::C, 5).unwrap();
        assert_eq!(c5.highest_root_coeffs(), &[2, 2, 2, 2, 1]);
        let b5 = RootDatum::new(Family::B, 5).unwrap();
        assert_eq!(b5.highest_root_coeffs(), &[1, 2, 2, 2, 2]);
        let d6 = RootDatum::new(Family::D, 6).unwrap();
        assert_eq!(d6.highest_root_coeffs(), &[1, 2, 2, 2, 1, 1]);
        let e6 = RootDatum::new(Family::E, 6).unwrap();
        assert_eq!(e6.highest_root_coeffs(), &[1, 2, 2, 3, 2, 1]);
        let e7 = RootDatum::new(Family::E, 7).unwrap();
        assert_eq!(e7.highest_root_coeffs(), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn highest_root_is_the_top_positive_root() {
        for (f, r) in all_small_types() {
            let d = RootDatum::new(f, r).unwrap();
            let roots = d.positive_roots();
            assert_eq!(roots.last().unwrap().as_slice(), d.highest_root_coeffs(), "{f}{r}");
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = |f: Family, r: usize| -> usize {
            match f {
                Family::A => r * (r + 1) / 2,
                Family::B | Family::C => r * r,
                Family::D => r * (r - 1),
                Family::E => [36, 63, 120][r - 6],
                Family::F => 24,
                Family::G => 6,
            }
        };
        for (f, r) in all_small_types() {
            let d = RootDatum::new(f, r).unwrap();
            assert_eq!(d.positive_roots().len(), expected(f, r), "{f}{r}");
        }
    }

    #[test]
    fn determinant_is_lattice_index() {
        for (f, r) in all_small_types() {
            let d = RootDatum::new(f, r).unwrap();
            let expected = match f {
                Family::A => r as i64 + 1,
                Family::B | Family::C => 2,
                Family::D => 4,
                Family::E => [3, 2, 1][r - 6],
                Family::F | Family::G => 1,
            };
            assert_eq!(d.cartan_determinant(), expected, "{f}{r}");
        }
    }

    #[test]
    fn cartan_shape() {
        for (f, r) in all_small_types() {
            let d = RootDatum::new(f, r).unwrap();
            for i in 0..r {
                assert_eq!(d.cartan()[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!((-3..=0).contains(&d.cartan()[i][j]));
                        assert_eq!(d.cartan()[i][j] == 0, d.cartan()[j][i] == 0);
                    }
                }
            }
            assert!(d.highest_root_coeffs().iter().all(|&n| n >= 1));
        }
    }

    #[test]
    fn extended_node_has_coefficient_two() {
        let cases = [
            (Family::C, 4, 1),
            (Family::C, 2, 1),
            (Family::B, 3, 2),
            (Family::B, 2, 2),
            (Family::D, 4, 2),
            (Family::D, 7, 2),
            (Family::E, 6, 2),
            (Family::E, 7, 1),
            (Family::E, 8, 8),
            (Family::F, 4, 1),
        ];
        for (f, r, j) in cases {
            let d = RootDatum::new(f, r).unwrap();
            assert_eq!(d.extended_node(), Some(j), "{f}{r}");
            assert_eq!(d.highest_root_coeffs()[j - 1], 2, "{f}{r}");
        }
        assert_eq!(RootDatum::type_a(4).unwrap().extended_node(), None);
        assert_eq!(RootDatum::new(Family::D, 3).unwrap().extended_node(), None);
    }

    #[test]
    fn rank_constraints() {
        assert!(RootDatum::new(Family::B, 1).is_err());
        assert!(RootDatum::new(Family::C, 1).is_err());
        assert!(RootDatum::new(Family::D, 2).is_err());
        assert!(RootDatum::new(Family::E, 5).is_err());
        assert!(RootDatum::new(Family::E, 9).is_err());
        assert!(RootDatum::new(Family::F, 3).is_err());
        assert!(RootDatum::new(Family::G, 3).is_err());
        assert!(RootDatum::new(Family::A, 0).is_err());
    }

    #[test]
    fn restricted() {
        let p3 = Characteristic::new(3).unwrap();
        assert!(is_restricted(&w(&[1, 0, 2]), p3));
        assert!(!is_restricted(&w(&[3, 0]), p3));
        assert!(is_restricted(&w(&[0, 0, 0]), Characteristic::new(2).unwrap()));
        assert!(is_restricted(&w(&[7, 100]), Characteristic::ZERO));
        assert!(!is_restricted(&w(&[-1, 0]), Characteristic::ZERO));
        assert!(Characteristic::new(4).is_err());
        assert!(Characteristic::new(1).is_err());
    }

    #[test]
    fn root_coordinates_roundtrip() {
        let d = RootDatum::new(Family::E, 7).unwrap();
        let k = vec![3, 0, 1, 4, 2, 2, 5];
        let wt = d.root_combination(&k);
        assert_eq!(d.root_coordinates(&wt), Some(k));
        // varpi_7 is not in the root lattice of E7
        assert_eq!(d.root_coordinates(&Weight::fundamental(7, 7, 1)), None);
    }

    #[test]
    fn weyl_orders_match_formulas() {
        assert_eq!(weyl_group_order(Family::A, 4), BigUint::from(120u32));
        assert_eq!(weyl_group_order(Family::B, 3), BigUint::from(48u32));
        assert_eq!(weyl_group_order(Family::D, 4), BigUint::from(192u32));
        // E6 = 2^7 3^4 5, E7 = 2^10 3^4 5 7, E8 = 2^14 3^5 5^2 7
        assert_eq!(weyl_group_order(Family::E, 6), BigUint::from(128u64 * 81 * 5));
        assert_eq!(
            weyl_group_order(Family::E, 7),
            BigUint::from(1024u64 * 81 * 5 * 7)
        );
        assert_eq!(
            weyl_group_order(Family::E, 8),
            BigUint::from(16384u64 * 243 * 25 * 7)
        );
        assert_eq!(weyl_group_order(Family::F, 4), BigUint::from(1152u32));
    }

    pub(crate) fn all_small_types() -> Vec<(Family, usize)> {
        let mut v = Vec::new();
        for r in 1..=7 {
            v.push((Family::A, r));
        }
        for r in 2..=6 {
            v.push((Family::B, r));
            v.push((Family::C, r));
        }
        for r in 3..=7 {
            v.push((Family::D, r));
        }
        v.extend([
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ]);
        v
    }
}
