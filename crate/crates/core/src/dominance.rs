//! Dominance order on weights, Weyl orbit sizes and the saturated set of
//! dominant weights below a given one.
//!
//! `lambda ⪰ mu` is read reflexively throughout: `lambda - mu` is a
//! non-negative integer combination of simple roots, all coefficients zero
//! allowed.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{components, weyl_group_order, Family, RootDatum, Weight};

/// Certificate that `source ⪰ target`: `source - target = sum k_i alpha_i`
/// with every `k_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessChain {
    pub source: Weight,
    pub target: Weight,
    pub root_coeffs: Vec<i64>,
}

impl WitnessChain {
    pub fn trivial(w: &Weight) -> Self {
        WitnessChain {
            source: w.clone(),
            target: w.clone(),
            root_coeffs: vec![0; w.rank()],
        }
    }

    /// Builds the chain `source - sum k_i alpha_i`.
    pub fn from_coeffs(datum: &RootDatum, source: &Weight, k: Vec<i64>) -> Self {
        let target = source.checked_sub(&datum.root_combination(&k));
        WitnessChain {
            source: source.clone(),
            target,
            root_coeffs: k,
        }
    }

    /// Recomputes `source - sum k_i alpha_i` and checks it against `target`.
    pub fn verify(&self, datum: &RootDatum) -> bool {
        self.source.rank() == datum.rank()
            && self.target.rank() == datum.rank()
            && self.root_coeffs.len() == datum.rank()
            && self.root_coeffs.iter().all(|&k| k >= 0)
            && self.source.checked_sub(&datum.root_combination(&self.root_coeffs)) == self.target
    }

    /// Appends a chain starting where this one ends.
    pub fn then(&self, next: &WitnessChain) -> WitnessChain {
        assert_eq!(self.target, next.source, "chains do not compose");
        WitnessChain {
            source: self.source.clone(),
            target: next.target.clone(),
            root_coeffs: self
                .root_coeffs
                .iter()
                .zip(&next.root_coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Mirror image under the A_r diagram automorphism `i -> r + 1 - i`.
    pub fn reversed(&self) -> WitnessChain {
        WitnessChain {
            source: self.source.reversed(),
            target: self.target.reversed(),
            root_coeffs: self.root_coeffs.iter().rev().copied().collect(),
        }
    }

    pub fn height(&self) -> i64 {
        self.root_coeffs.iter().sum()
    }
}

fn require_dominant(w: &Weight) -> Result<()> {
    if w.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(w.coeffs().to_vec()))
    }
}

pub(crate) fn require_type_a(datum: &RootDatum, w: &Weight) -> Result<()> {
    if datum.family() != Family::A {
        return Err(Error::NotTypeA(datum.family()));
    }
    datum.check_weight(w)
}

/// `min(i, r + 1 - i)` for a 1-based node of A_r.
pub fn bracket_weight(rank: usize, i: usize) -> i64 {
    i.min(rank + 1 - i) as i64
}

/// `[lambda] = sum min(i, r + 1 - i) a_i` for type A.
pub fn bracket(datum: &RootDatum, w: &Weight) -> Result<i64> {
    require_type_a(datum, w)?;
    require_dominant(w)?;
    Ok(bracket_unchecked(w))
}

pub(crate) fn bracket_unchecked(w: &Weight) -> i64 {
    let r = w.rank();
    w.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &a)| bracket_weight(r, i + 1) * a)
        .sum()
}

/// Returns a chain iff `lambda ⪰ mu`.
pub fn dominance_witness(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Option<WitnessChain> {
    datum.check_weight(lambda).ok()?;
    datum.check_weight(mu).ok()?;
    let k = datum.root_coordinates(&lambda.checked_sub(mu))?;
    if k.iter().any(|&x| x < 0) {
        return None;
    }
    Some(WitnessChain {
        source: lambda.clone(),
        target: mu.clone(),
        root_coeffs: k,
    })
}

/// `lambda ⪰ mu`, or `lambda ≻ mu` with `lambda != mu` when `strict` is set.
pub fn dominates(datum: &RootDatum, lambda: &Weight, mu: &Weight, strict: bool) -> bool {
    dominance_witness(datum, lambda, mu).is_some() && !(strict && lambda == mu)
}

/// Weyl group order of one connected component of a subdiagram, identified
/// by its shape.
fn component_order(datum: &RootDatum, comp: &[usize]) -> BigUint {
    let k = comp.len();
    let fact = |n: usize| -> BigUint { (1..=n as u64).map(BigUint::from).product() };
    if k == 1 {
        return BigUint::from(2u32);
    }
    let mut degree = vec![0usize; k];
    let mut max_bond = 0;
    let mut double_edge = None;
    for a in 0..k {
        for b in a + 1..k {
            let m = datum.bond(comp[a], comp[b]);
            if m > 0 {
                degree[a] += 1;
                degree[b] += 1;
                max_bond = max_bond.max(m);
                if m == 2 {
                    double_edge = Some((a, b));
                }
            }
        }
    }
    match max_bond {
        3 => weyl_group_order(Family::G, 2),
        2 => {
            let (a, b) = double_edge.expect("double edge recorded");
            if k == 4 && degree[a] == 2 && degree[b] == 2 {
                weyl_group_order(Family::F, 4)
            } else {
                weyl_group_order(Family::B, k)
            }
        }
        _ => {
            let Some(branch) = degree.iter().position(|&d| d == 3) else {
                return fact(k + 1);
            };
            // arm lengths from the branch node
            let mut arms = Vec::new();
            for start in 0..k {
                if datum.bond(comp[branch], comp[start]) == 0 || start == branch {
                    continue;
                }
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next = (0..k).find(|&x| {
                        x != prev && x != cur && datum.bond(comp[cur], comp[x]) > 0
                    });
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => weyl_group_order(Family::D, k),
                [1, 2, 2] => weyl_group_order(Family::E, 6),
                [1, 2, 3] => weyl_group_order(Family::E, 7),
                [1, 2, 4] => weyl_group_order(Family::E, 8),
                other => unreachable!("no such subdiagram of a Dynkin diagram: arms {other:?}"),
            }
        }
    }
}

/// Order of the stabilizer of a dominant weight: the parabolic subgroup on
/// the nodes with zero coefficient.
pub fn weyl_stabilizer_order(datum: &RootDatum, w: &Weight) -> Result<BigUint> {
    datum.check_weight(w)?;
    require_dominant(w)?;
    let zeros: Vec<usize> = w
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a == 0)
        .map(|(i, _)| i)
        .collect();
    Ok(components(datum, &zeros)
        .iter()
        .map(|c| component_order(datum, c))
        .fold(BigUint::one(), |acc, o| acc * o))
}

/// Length of the W-orbit of a dominant weight.
pub fn orbit_length(datum: &RootDatum, w: &Weight) -> Result<BigUint> {
    let stab = weyl_stabilizer_order(datum, w)?;
    Ok(datum.weyl_group_order() / stab)
}

/// All coefficients strictly positive.
pub fn is_good(w: &Weight) -> bool {
    w.coeffs().iter().all(|&a| a > 0)
}

/// Every dominant `mu ⪯ lambda`, each with its witness.
///
/// Explores dominant weights by subtracting positive roots; any dominant
/// `mu ⪯ lambda` is reachable this way because covering relations in the
/// dominance order of dominant weights are positive roots. Ordered by
/// height of `lambda - mu`, then by coefficients descending. Fails with
/// [`Error::CapExceeded`] once more than `cap` weights are found.
pub fn saturated_dominant_set(
    datum: &RootDatum,
    lambda: &Weight,
    cap: usize,
) -> Result<Vec<WitnessChain>> {
    datum.check_weight(lambda)?;
    require_dominant(lambda)?;
    if cap == 0 {
        return Err(Error::Domain("cap must be positive".into()));
    }
    let roots: Vec<(Vec<i64>, Weight)> = datum
        .positive_roots()
        .iter()
        .map(|b| (b.clone(), datum.root_combination(b)))
        .collect();
    let mut found: HashMap<Weight, Vec<i64>> = HashMap::new();
    found.insert(lambda.clone(), vec![0; datum.rank()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let k = found[&mu].clone();
        for (coords, as_weight) in &roots {
            let nu = mu.checked_sub(as_weight);
            if !nu.is_dominant() || found.contains_key(&nu) {
                continue;
            }
            let knu: Vec<i64> = k.iter().zip(coords).map(|(a, b)| a + b).collect();
            found.insert(nu.clone(), knu);
            if found.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
            queue.push_back(nu);
        }
    }
    let mut out: Vec<WitnessChain> = found
        .into_iter()
        .map(|(target, root_coeffs)| WitnessChain {
            source: lambda.clone(),
            target,
            root_coeffs,
        })
        .collect();
    out.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.target.cmp(&a.target))
    });
    Ok(out)
}
