//! Weyl-group operations on weights: simple reflections, dominant
//! representatives, the ρ-shifted dominantization with sign used by
//! alternating-sum character formulas, duality via the opposition
//! involution, and orbit generation.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

/// Outcome of moving `λ + ρ` to the dominant chamber: either the shifted
/// weight lies on a wall (the alternating sum drops the term), or it is
/// regular and lands on `weight + ρ` with the sign of the Weyl element used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DominantResult {
    Singular,
    Regular { weight: Weight, sign: i64 },
}

/// Applies the simple reflection `s_j` in place: `λ_i -= λ_j·cartan[j][i]`.
pub(crate) fn reflect_raw(cartan: &[Vec<i64>], labels: &mut [i64], j: usize) {
    let lj = labels[j];
    if lj == 0 {
        return;
    }
    for (i, l) in labels.iter_mut().enumerate() {
        *l -= lj * cartan[j][i];
    }
}

/// Moves a label vector to the dominant chamber in place, reflecting at the
/// lowest negative label until none remains. Returns the reflection count.
pub(crate) fn dominantize_raw(cartan: &[Vec<i64>], labels: &mut [i64]) -> usize {
    let mut count = 0;
    'scan: loop {
        for j in 0..labels.len() {
            if labels[j] < 0 {
                reflect_raw(cartan, labels, j);
                count += 1;
                continue 'scan;
            }
        }
        return count;
    }
}

/// ρ-shifted dominantization of a label vector in place. The input is
/// `λ + ρ`; on a regular orbit the vector ends strictly dominant and the
/// return value is the sign `(-1)^{#reflections}`, on a singular orbit the
/// return value is `None`.
pub(crate) fn to_dominant_shifted_raw(cartan: &[Vec<i64>], delta: &mut [i64]) -> Option<i64> {
    let mut sign = 1i64;
    'scan: loop {
        for j in 0..delta.len() {
            if delta[j] < 0 {
                reflect_raw(cartan, delta, j);
                sign = -sign;
                continue 'scan;
            }
        }
        if delta.iter().any(|&d| d == 0) {
            return None;
        }
        return Some(sign);
    }
}

impl RootSystem {
    /// The simple reflection `s_j` applied to a weight.
    pub fn reflect(&self, w: &Weight, j: usize) -> Result<Weight> {
        self.check_weight(w)?;
        if j >= self.rank() {
            return Err(Error::IndexOutOfRange { index: j, rank: self.rank() });
        }
        let mut labels = w.labels().to_vec();
        reflect_raw(self.cartan(), &mut labels, j);
        self.weight(&labels)
    }

    /// The dominant representative of the Weyl orbit of a weight.
    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        let mut labels = w.labels().to_vec();
        dominantize_raw(self.cartan(), &mut labels);
        self.weight(&labels)
    }

    /// ρ-shifted dominantization: writes `w + ρ` as `σ(v + ρ)` with `v`
    /// dominant and returns `v` with `sign(σ)`, or `Singular` when `w + ρ`
    /// lies on a chamber wall.
    pub fn to_dominant_shifted(&self, w: &Weight) -> Result<DominantResult> {
        self.check_weight(w)?;
        let mut delta: Vec<i64> = w.labels().iter().map(|l| l + 1).collect();
        Ok(match to_dominant_shifted_raw(self.cartan(), &mut delta) {
            None => DominantResult::Singular,
            Some(sign) => {
                for d in &mut delta {
                    *d -= 1;
                }
                DominantResult::Regular { weight: self.weight(&delta)?, sign }
            }
        })
    }

    /// The highest weight `μ̄ = -w₀(μ)` of the dual of the irreducible with
    /// dominant highest weight `μ`.
    pub fn dual(&self, mu: &Weight) -> Result<Weight> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let perm = self.opposition_perm();
        let mut labels = vec![0i64; self.rank()];
        for (i, &l) in mu.labels().iter().enumerate() {
            labels[perm[i]] = l;
        }
        self.weight(&labels)
    }

    /// Whether the irreducible with dominant highest weight `μ` is
    /// self-dual.
    pub fn is_self_dual(&self, mu: &Weight) -> Result<bool> {
        Ok(&self.dual(mu)? == mu)
    }

    /// The full Weyl orbit of a weight. Fails with `SizeCapExceeded` when
    /// the orbit grows past `cap` elements.
    pub fn weyl_orbit(&self, w: &Weight, cap: u128) -> Result<Vec<Weight>> {
        self.check_weight(w)?;
        let raw = self.weyl_orbit_raw(w.labels(), cap)?;
        raw.into_iter().map(|labels| self.weight(&labels)).collect()
    }

    pub(crate) fn weyl_orbit_raw(&self, labels: &[i64], cap: u128) -> Result<Vec<Vec<i64>>> {
        let cartan = self.cartan();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut start = labels.to_vec();
        dominantize_raw(cartan, &mut start);
        seen.insert(start.clone());
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for j in 0..self.rank() {
                if v[j] == 0 {
                    continue;
                }
                let mut r = v.clone();
                reflect_raw(cartan, &mut r, j);
                if seen.contains(&r) {
                    continue;
                }
                if seen.len() as u128 + 1 > cap {
                    return Err(Error::SizeCapExceeded { size: seen.len() as u128 + 1, cap });
                }
                seen.insert(r.clone());
                queue.push(r);
            }
        }
        Ok(seen.into_iter().collect())
    }
}
