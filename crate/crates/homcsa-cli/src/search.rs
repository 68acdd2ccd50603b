//! Candidate enumeration and sampling over finite coefficient sets.
//!
//! A candidate is a flat digit string over the coefficient set. For the
//! algebra targets the layout is the n³ product entries (in the same order
//! the product tensor stores them) followed by the n² twist entries
//! (row-major); the bialgebra target appends n³ dual-product entries.
//! Exhaustive mode walks all digit strings in lexicographic order (first
//! entry most significant, set order as given); random mode draws digits
//! from a seeded ChaCha stream, so equal configurations reproduce equal
//! output byte-for-byte regardless of worker count.

use homcsa::{BilinearTensor, HomAlgebra, LinearMap, PairedAlgebras, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::formats::{AlgebraDoc, BialgebraDoc, Doc};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    HomCsa,
    HomLie,
    Bialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub dim: usize,
    pub set: Vec<Scalar>,
    pub mode: SearchMode,
    pub target: SearchTarget,
    pub budget: u64,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("the coefficient set is empty")]
    EmptySet,
    #[error("the coefficient set has {0} entries, more than the supported 256")]
    SetTooLarge(usize),
    #[error("exhaustive search over {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

/// One passing candidate. `index` is the candidate's position in the
/// enumeration (lexicographic rank in exhaustive mode, draw number in
/// random mode), which fixes the emission order.
#[derive(Clone, Debug)]
pub struct Found {
    pub index: u64,
    pub primal: HomAlgebra,
    pub dual_mul: Option<BilinearTensor>,
}

impl SearchConfig {
    /// Number of digits in one candidate.
    pub fn candidate_len(&self) -> usize {
        let n = self.dim;
        let algebra = n * n * n + n * n;
        match self.target {
            SearchTarget::Bialgebra => algebra + n * n * n,
            _ => algebra,
        }
    }
}

fn decode(config: &SearchConfig, digits: &[u8]) -> Found {
    let n = config.dim;
    let pick = |d: &u8| config.set[*d as usize].clone();
    let mul_entries: Vec<Scalar> = digits[..n * n * n].iter().map(pick).collect();
    let alpha_entries: Vec<Scalar> = digits[n * n * n..n * n * n + n * n].iter().map(pick).collect();
    let mul = BilinearTensor::new(n, n, n, mul_entries).expect("layout fixed");
    let alpha = LinearMap::new(n, n, alpha_entries).expect("layout fixed");
    let primal = HomAlgebra::new(mul, alpha).expect("layout fixed");
    let dual_mul = match config.target {
        SearchTarget::Bialgebra => {
            let entries: Vec<Scalar> = digits[n * n * n + n * n..].iter().map(pick).collect();
            Some(BilinearTensor::new(n, n, n, entries).expect("layout fixed"))
        }
        _ => None,
    };
    Found {
        index: 0,
        primal,
        dual_mul,
    }
}

fn passes(found: &Found, target: SearchTarget) -> bool {
    match target {
        SearchTarget::HomCsa => found.primal.check_center_symmetric().passed(),
        SearchTarget::HomLie => found.primal.check_hom_jacobi().passed(),
        SearchTarget::Bialgebra => {
            // Same verdict as check_bialgebra, gated cheapest-first.
            if !found.primal.check_center_symmetric().passed() {
                return false;
            }
            let dual = found.dual_mul.clone().expect("bialgebra candidates carry one");
            let paired =
                PairedAlgebras::new(found.primal.clone(), dual).expect("layout fixed");
            paired.dual().check_center_symmetric().passed()
                && paired
                    .check_cocycle(homcsa::CocycleSide::Gamma)
                    .passed()
                && paired.check_cocycle(homcsa::CocycleSide::Beta).passed()
        }
    }
}

/// Runs the search and returns the passers ordered by candidate index.
pub fn run_search(config: &SearchConfig) -> Result<Vec<Found>, SearchError> {
    let base = config.set.len();
    if base == 0 {
        return Err(SearchError::EmptySet);
    }
    if base > 256 {
        return Err(SearchError::SetTooLarge(base));
    }
    let len = config.candidate_len();

    let mut found = match config.mode {
        SearchMode::Exhaustive => {
            let candidates = (base as u128)
                .checked_pow(len as u32)
                .unwrap_or(u128::MAX);
            if candidates > config.budget as u128 {
                return Err(SearchError::BudgetExceeded {
                    candidates,
                    budget: config.budget,
                });
            }
            let total = candidates as u64;
            // Per-digit strides: digit t of candidate k is (k / base^(len-1-t)) % base.
            let strides: Vec<u64> = (0..len)
                .map(|t| (base as u64).pow((len - 1 - t) as u32))
                .collect();
            (0..total)
                .into_par_iter()
                .filter_map(|k| {
                    let digits: Vec<u8> = strides
                        .iter()
                        .map(|s| ((k / s) % base as u64) as u8)
                        .collect();
                    let mut candidate = decode(config, &digits);
                    candidate.index = k;
                    passes(&candidate, config.target).then_some(candidate)
                })
                .collect::<Vec<_>>()
        }
        SearchMode::Random { samples, seed } => {
            // One sequential stream of draws keeps the candidate list
            // independent of how the checks are scheduled.
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let drawn: Vec<Vec<u8>> = (0..samples)
                .map(|_| (0..len).map(|_| rng.random_range(0..base) as u8).collect())
                .collect();
            drawn
                .par_iter()
                .enumerate()
                .filter_map(|(s, digits)| {
                    let mut candidate = decode(config, digits);
                    candidate.index = s as u64;
                    passes(&candidate, config.target).then_some(candidate)
                })
                .collect::<Vec<_>>()
        }
    };
    found.sort_by_key(|f| f.index);
    Ok(found)
}

/// Converts a passer to its document form (an algebra file, or a bialgebra
/// file when the candidate carries a dual product).
pub fn found_to_doc(found: &Found) -> Doc {
    match &found.dual_mul {
        None => Doc::Algebra(AlgebraDoc::from_algebra(None, &found.primal)),
        Some(dual) => {
            let paired = PairedAlgebras::new(found.primal.clone(), dual.clone())
                .expect("shapes fixed");
            Doc::Bialgebra(BialgebraDoc::from_paired(None, &paired))
        }
    }
}
