//! The twin-class reduction rule and its threshold.
//!
//! The threshold ψ(m, r) = 2^(6r · 2^(m(2r²+r+1)) · (r+1)^(32r²+8r)) is far too
//! large to materialise, so it is handled through its base-two logarithm.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, Vertex};

/// How a twin class is judged too large.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiThreshold {
    /// Compare against ψ(m, r) itself.
    ExactLog2,
    /// Compare against a small explicit threshold (for testing the rule).
    Override(u64),
}

/// Exponent `m(2r² + r + 1)`; `2` to this power bounds the number of distinct
/// signatures of bipartitions with middle sets of size at most `2r`.
pub fn signature_count_log2(m: u64, r: u64) -> u64 {
    m * (2 * r * r + r + 1)
}

/// Exponent `32r² + 8r` of the `(r + 1)` factor.
pub fn chain_factor_exponent(r: u64) -> u64 {
    32 * r * r + 8 * r
}

fn check_params(m: u64, r: u64) -> Result<()> {
    if m < 1 || r < 1 {
        return Err(Error::Domain(format!("m and r must be at least 1 (got m={m}, r={r})")));
    }
    Ok(())
}

fn psi_log2_unchecked(m: u64, r: u64) -> BigUint {
    let exp = u32::try_from(signature_count_log2(m, r)).expect("exponent fits in u32");
    let chain = u32::try_from(chain_factor_exponent(r)).expect("exponent fits in u32");
    BigUint::from(6 * r) * (BigUint::one() << exp) * BigUint::from(r + 1).pow(chain)
}

/// `log2 ψ(m, r) = 6r · 2^(m(2r²+r+1)) · (r+1)^(32r²+8r)`.
pub fn psi_log2(m: u64, r: u64) -> Result<BigUint> {
    check_params(m, r)?;
    Ok(psi_log2_unchecked(m, r))
}

/// `log2` of the kernel size bound `2^m · ψ(m, r)`.
pub fn kernel_vertex_bound_log2(m: u64, r: u64) -> Result<BigUint> {
    Ok(psi_log2(m, r)? + BigUint::from(m))
}

/// One application of the rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub vertex: Vertex,
    pub class_id: usize,
    pub class_size_before: usize,
}

/// Whether a twin class of `size` vertices exceeds the threshold.
fn oversized(size: usize, m: usize, r: u64, threshold: PsiThreshold) -> bool {
    match threshold {
        PsiThreshold::Override(t) => size as u64 > t,
        PsiThreshold::ExactLog2 => {
            // size > 2^L; sizes fit in 64 bits, so any L >= 64 wins outright
            let l = psi_log2_unchecked(m as u64, r.max(1));
            match l.to_u32() {
                Some(l) if l < 64 => size as u64 > 1u64 << l,
                _ => false,
            }
        }
    }
}

/// Applies the reduction exhaustively: while some twin class is larger than
/// the threshold, removes the smallest vertex of the first such class.
pub fn rule1_apply(h: &Hypergraph, r: u64, threshold: PsiThreshold) -> (Hypergraph, Vec<Removal>) {
    let mut cur = h.clone();
    let mut log = Vec::new();
    loop {
        let twins = cur.twin_partition();
        let hit = twins.classes().iter().enumerate().find(|(_, c)| oversized(c.len(), cur.m(), r, threshold));
        let Some((class_id, class)) = hit else {
            return (cur, log);
        };
        let vertex = class[0].clone();
        log.push(Removal { vertex: vertex.clone(), class_id, class_size_before: class.len() });
        cur = cur.remove_vertices(&[vertex]).expect("vertex exists");
    }
}
