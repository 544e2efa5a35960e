//! Ergotropy of states diagonal in the energy eigenbasis.
//!
//! For a diagonal state the optimal cyclic unitary is a permutation: sort
//! the populations in descending order against the ascending energies. The
//! signed ergotropy `w_erg = Σ E_n (p'_n - p_n)` is then non-positive, and
//! `|w_erg|` is the extractable work.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};
use crate::spectrum::Spectrum;
use crate::state::OccupationDist;
use crate::tolerance::Tolerances;

/// Which population ordering a four-level distribution realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingTag {
    /// `p1' >= p3' > p2 > p4` after a z-z measurement.
    R1,
    /// `p2 > p1' >= p3' > p4` after a z-z measurement.
    R2,
    Passive,
    OtherActive,
}

impl OrderingTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderingTag::R1 => "R1",
            OrderingTag::R2 => "R2",
            OrderingTag::Passive => "PASSIVE",
            OrderingTag::OtherActive => "OTHER_ACTIVE",
        }
    }
}

/// Classification of a distribution against the spectrum ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderingClass {
    pub tag: OrderingTag,
    /// `permutation[k]` is the input index whose population lands at sorted
    /// position `k`; identity for passive states.
    pub permutation: Vec<usize>,
    /// Index pairs whose populations are equal within the tie tolerance.
    pub ties: Vec<(usize, usize)>,
}

impl OrderingClass {
    fn passive(dim: usize, ties: Vec<(usize, usize)>) -> Self {
        Self {
            tag: OrderingTag::Passive,
            permutation: (0..dim).collect(),
            ties,
        }
    }
}

/// Result of the ergotropy stroke.
#[derive(Clone, Debug)]
pub struct ErgotropyExtraction<T> {
    /// Signed work `Σ E_n (p'_n - p_n) <= 0`; exactly zero for passive input.
    pub w_erg: T,
    /// The passive arrangement of the input populations.
    pub passive: OccupationDist<T>,
    pub ordering: OrderingClass,
}

/// Whether any population inversion exists across non-degenerate levels.
pub fn is_active<T: Real>(p: &OccupationDist<T>, spectrum: &Spectrum<T>) -> Result<bool> {
    is_active_with(p, spectrum, &Tolerances::default())
}

pub fn is_active_with<T: Real>(
    p: &OccupationDist<T>,
    spectrum: &Spectrum<T>,
    tol: &Tolerances<T>,
) -> Result<bool> {
    check_dims(p, spectrum)?;
    let probs = p.probs();
    let energies = spectrum.energies();
    for m in 0..probs.len() {
        for n in (m + 1)..probs.len() {
            let level_gap = energies[n] - energies[m];
            if level_gap <= tol.degeneracy {
                continue;
            }
            if probs[m] < probs[n] - tol.tie {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Extracts ergotropy: sorts populations descending against ascending
/// energies and accounts the energy released.
pub fn ergotropy_extract<T: Real>(
    p: &OccupationDist<T>,
    spectrum: &Spectrum<T>,
) -> Result<ErgotropyExtraction<T>> {
    ergotropy_extract_with(p, spectrum, &Tolerances::default())
}

pub fn ergotropy_extract_with<T: Real>(
    p: &OccupationDist<T>,
    spectrum: &Spectrum<T>,
    tol: &Tolerances<T>,
) -> Result<ErgotropyExtraction<T>> {
    check_dims(p, spectrum)?;
    let dim = p.len();
    let ties = tie_pairs(p.probs(), tol.tie);

    if !is_active_with(p, spectrum, tol)? {
        return Ok(ErgotropyExtraction {
            w_erg: T::zero(),
            passive: p.clone(),
            ordering: OrderingClass::passive(dim, ties),
        });
    }

    // Stable descending sort; ties keep their input order so the permutation
    // is deterministic and intra-tie swaps never appear.
    let mut permutation: Vec<usize> = (0..dim).collect();
    permutation.sort_by(|&a, &b| p.probs()[b].partial_cmp(&p.probs()[a]).unwrap());

    let passive_probs: Vec<T> = permutation.iter().map(|&k| p.probs()[k]).collect();
    let mut w_erg = T::zero();
    for (n, &e) in spectrum.energies().iter().enumerate() {
        w_erg += e * (passive_probs[n] - p.probs()[n]);
    }

    let tag = active_four_level_tag(p.probs(), tol.tie);
    Ok(ErgotropyExtraction {
        w_erg,
        passive: OccupationDist::with_tolerances(passive_probs, tol)?,
        ordering: OrderingClass {
            tag,
            permutation,
            ties,
        },
    })
}

/// Classifies a z-z post-measurement distribution against its input.
///
/// Errors with [`Error::InconsistentInput`] unless `p_pm` has the z-z shape:
/// middle levels untouched and the outer pair redistributed.
pub fn classify_zz<T: Real>(
    p_pm: &OccupationDist<T>,
    p: &OccupationDist<T>,
) -> Result<OrderingClass> {
    classify_zz_with(p_pm, p, &Tolerances::default())
}

pub fn classify_zz_with<T: Real>(
    p_pm: &OccupationDist<T>,
    p: &OccupationDist<T>,
    tol: &Tolerances<T>,
) -> Result<OrderingClass> {
    if p_pm.len() != 4 || p.len() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: p_pm.len().max(p.len()),
        });
    }
    let qm = p_pm.probs();
    let q = p.probs();
    let shape_ok = (qm[1] - q[1]).abs() <= tol.tie
        && (qm[3] - q[3]).abs() <= tol.tie
        && ((qm[0] + qm[2]) - (q[0] + q[2])).abs() <= tol.tie;
    if !shape_ok {
        return Err(Error::InconsistentInput);
    }
    let ties = tie_pairs(qm, tol.tie);
    if qm[2] > q[1] + tol.tie {
        Ok(OrderingClass {
            tag: OrderingTag::R1,
            permutation: vec![0, 2, 1, 3],
            ties,
        })
    } else if q[1] > qm[0] + tol.tie {
        Ok(OrderingClass {
            tag: OrderingTag::R2,
            permutation: vec![1, 0, 2, 3],
            ties,
        })
    } else {
        Ok(OrderingClass::passive(4, ties))
    }
}

/// The strength window in which a z-z measurement yields the R1 ordering.
///
/// The condition `4c0²(1 - 2c0²) > χ` bounds `c0²` between the roots of a
/// quadratic; returns the window as `(c0_lo, c0_hi)`, or `None` when
/// `χ >= 1/2` and no strength realizes R1.
pub fn r1_c0_interval<T: Real>(b2: T, j: T, beta: T) -> Option<(T, T)> {
    let chi = crate::analytics::chi(b2, j, beta);
    let half = T::one() / real::<T>(2.0);
    if !(chi < half) {
        return None;
    }
    let root = (T::one() - real::<T>(2.0) * chi).sqrt();
    let quarter = T::one() / real::<T>(4.0);
    let lo_sq = (T::one() - root) * quarter;
    let hi_sq = (T::one() + root) * quarter;
    Some((lo_sq.sqrt(), hi_sq.sqrt()))
}

/// Tags an active four-level distribution by its value pattern.
///
/// The comparisons are tie-tolerant so that, at the projective strength,
/// rounding of the exactly-tied outer pair cannot flip the tag. Any other
/// dimension reports [`OrderingTag::OtherActive`].
fn active_four_level_tag<T: Real>(q: &[T], tie: T) -> OrderingTag {
    if q.len() != 4 {
        return OrderingTag::OtherActive;
    }
    let outer_ordered = q[0] >= q[2] - tie;
    if outer_ordered && q[2] > q[1] + tie && q[1] > q[3] + tie {
        OrderingTag::R1
    } else if outer_ordered && q[1] > q[0] + tie && q[2] > q[3] + tie {
        OrderingTag::R2
    } else {
        OrderingTag::OtherActive
    }
}

fn tie_pairs<T: Real>(probs: &[T], tie_tol: T) -> Vec<(usize, usize)> {
    let mut ties = Vec::new();
    for i in 0..probs.len() {
        for j in (i + 1)..probs.len() {
            if (probs[i] - probs[j]).abs() <= tie_tol {
                ties.push((i, j));
            }
        }
    }
    ties
}

fn check_dims<T: Real>(p: &OccupationDist<T>, spectrum: &Spectrum<T>) -> Result<()> {
    if p.len() != spectrum.dim() {
        return Err(Error::DimensionMismatch {
            expected: spectrum.dim(),
            found: p.len(),
        });
    }
    Ok(())
}
