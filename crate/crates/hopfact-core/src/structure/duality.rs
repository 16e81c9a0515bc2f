//! The anti-isomorphism K ↦ (H//K)* between the normal Hopf subalgebra
//! lattices of H and H*, checked as exact subspace identities.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::report::Report;
use crate::subobjects::{one_sided_product, quotient_dual_embed, SubHopf};

use super::lattice::enumerate_normal_lattice;

/// Verify, for every lattice element and every pair:
/// the map K ↦ (H//K)* is a containment-reversing bijection onto the lattice
/// of H*, satisfies (H//(LK))* = (H//L)* ∩ (H//K)* and
/// (H//(L∩K))* = (H//L)*·(H//K)*, and is undone by K ↦ (H*//K)*.
pub fn verify_lattice_duality(h: &Arc<HopfAlgebra>) -> Result<Report> {
    if !h.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let mut report = Report::new("lattice duality");
    let lat = enumerate_normal_lattice(h)?;
    let dual = Arc::new(h.dual());
    let dual_lat = enumerate_normal_lattice(&dual)?;

    let images: Vec<_> = lat
        .elements
        .iter()
        .map(|k| quotient_dual_embed(h, k))
        .collect::<Result<Vec<_>>>()?;

    // Bijection onto the dual lattice.
    let mut bijection = lat.len() == dual_lat.len();
    let mut detail = format!("|L(H)| = {}, |L(H*)| = {}", lat.len(), dual_lat.len());
    if bijection {
        for (i, img) in images.iter().enumerate() {
            if dual_lat.index_of(img).is_none() {
                bijection = false;
                detail = format!("image of element {i} is not a dual lattice element");
                break;
            }
        }
        let mut seen: Vec<usize> = images
            .iter()
            .filter_map(|img| dual_lat.index_of(img))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != lat.len() {
            bijection = false;
            detail = "the map is not injective onto the dual lattice".into();
        }
    }
    report.record("K ↦ (H//K)* is a bijection onto L(H*)", bijection, detail);

    // Containment reversal.
    let mut reversal = true;
    let mut detail = String::new();
    'rev: for i in 0..lat.len() {
        for j in 0..lat.len() {
            // K_i ⊆ K_j must flip to (H//K_j)* ⊆ (H//K_i)*.
            if lat.leq[i][j] != images[i].contains(&images[j]) {
                reversal = false;
                detail = format!("containment not reversed at pair ({i}, {j})");
                break 'rev;
            }
        }
    }
    report.record("containment is reversed", reversal, detail);

    // (H//(LK))* = (H//L)* ∩ (H//K)* for every pair.
    let mut eq_join = true;
    let mut detail = String::new();
    'join: for i in 0..lat.len() {
        for j in 0..lat.len() {
            let lhs = &images[lat.join[i][j]];
            let rhs = images[i].intersect(&images[j]);
            if *lhs != rhs {
                eq_join = false;
                detail = format!("join identity fails at pair ({i}, {j})");
                break 'join;
            }
        }
    }
    report.record("(H//(LK))* = (H//L)* ∩ (H//K)*", eq_join, detail);

    // (H//(L∩K))* = (H//L)*·(H//K)* for every pair.
    let mut eq_meet = true;
    let mut detail = String::new();
    'meet: for i in 0..lat.len() {
        for j in 0..lat.len() {
            let lhs = &images[lat.meet[i][j]];
            let rhs = one_sided_product(&dual, &images[i], &images[j]);
            if *lhs != rhs {
                eq_meet = false;
                detail = format!("meet identity fails at pair ({i}, {j})");
                break 'meet;
            }
        }
    }
    report.record("(H//(L∩K))* = (H//L)*·(H//K)*", eq_meet, detail);

    // The inverse map K ↦ (H*//K)* recovers the original: the double dual is
    // identified with H coordinate-wise.
    let mut inverse = true;
    let mut detail = String::new();
    for (i, img) in images.iter().enumerate() {
        let img_sub = SubHopf::new(&dual, img.clone())?;
        let back = quotient_dual_embed(&dual, &img_sub)?;
        if back != *lat.elements[i].space() {
            inverse = false;
            detail = format!("inverse fails at element {i}");
            break;
        }
    }
    report.record("K ↦ (H*//K)* inverts the map", inverse, detail);

    Ok(report)
}
