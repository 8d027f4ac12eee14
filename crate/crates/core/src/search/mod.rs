//! Exhaustive search for rational solutions of `cos a + cos b + cos c + cos d = 0`
//! over the licensed denominator grids, followed by exact confirmation,
//! realizability and family subtraction.

mod length;
mod profile;
mod triples;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::RationalAngle;
use crate::families::{builtin_families, member_of, FamilySpec, MembershipRule, Params};
use crate::geometry::{
    abcd_to_pqrs, edge_lengths, is_realizable, volume, EdgeLengths, PythagoreanQuadruple, RawQuadruple,
    VolumeCoefficient,
};

pub use length::{conway_jones_items, length_four_skip_justified, rational_length, ConwayJonesItem};
pub use profile::{Den, DenominatorProfile, ProfileRule, L0, L1, L2, L3};
pub use triples::{search_triples, reduce_to_acute, TripleSearch};

/// Default prefilter threshold on `|S|`.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub tolerance: f64,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    pub profile: DenominatorProfile,
    pub membership: MembershipRule,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            tolerance: DEFAULT_TOLERANCE,
            workers: 0,
            profile: DenominatorProfile::per_length(),
            membership: MembershipRule::PrintedCurve,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicSolution {
    pub quadruple: PythagoreanQuadruple,
    pub lengths: EdgeLengths,
    pub volume: VolumeCoefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyHit {
    pub quadruple: PythagoreanQuadruple,
    pub family: u8,
    pub params: Params,
}

/// Sizes of the realizable set under weaker canonicalizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitAccounting {
    pub canonical: usize,
    pub r_eq_s: usize,
    pub p_eq_q: usize,
    pub both_equal: usize,
    /// Counting `(p, q, r, s)` and `(p, q, s, r)` separately.
    pub without_rs_swap: usize,
    pub without_pq_swap: usize,
    pub without_either_swap: usize,
}

impl OrbitAccounting {
    pub fn of(quads: &[PythagoreanQuadruple]) -> Self {
        let n = quads.len();
        let rs = quads.iter().filter(|q| q.r == q.s).count();
        let pq = quads.iter().filter(|q| q.p == q.q).count();
        let both = quads.iter().filter(|q| q.r == q.s && q.p == q.q).count();
        OrbitAccounting {
            canonical: n,
            r_eq_s: rs,
            p_eq_q: pq,
            both_equal: both,
            without_rs_swap: 2 * n - rs,
            without_pq_swap: 2 * n - pq,
            without_either_swap: 4 * n - 2 * rs - 2 * pq + both,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u128,
    pub workers: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub profile: DenominatorProfile,
    pub candidate_count: usize,
    pub prefilter_passes: usize,
    /// Exact zeros of the cosine sum.
    pub raw_solution_count: usize,
    /// Histogram of rational lengths of the zeros, indexed 0 (none) to 4.
    pub rational_lengths: [usize; 5],
    pub degenerate_count: usize,
    pub realizable_count: usize,
    pub orbit: OrbitAccounting,
    pub family_members: Vec<FamilyHit>,
    pub sporadic_after_family_filter: Vec<SporadicSolution>,
    pub timing: Timing,
}

/// Equality ignores `timing`.
impl PartialEq for SearchReport {
    fn eq(&self, o: &Self) -> bool {
        self.profile == o.profile
            && self.candidate_count == o.candidate_count
            && self.prefilter_passes == o.prefilter_passes
            && self.raw_solution_count == o.raw_solution_count
            && self.rational_lengths == o.rational_lengths
            && self.degenerate_count == o.degenerate_count
            && self.realizable_count == o.realizable_count
            && self.orbit == o.orbit
            && self.family_members == o.family_members
            && self.sporadic_after_family_filter == o.sporadic_after_family_filter
    }
}

/// Sorted distinct `k/d` for the given denominators, restricted to a range.
fn grid(dens: &[i64], lo: i64, hi: i64, include_lo: bool) -> Vec<RationalAngle> {
    let mut set = BTreeSet::new();
    for &d in dens {
        for k in lo * d..=hi * d {
            let x = RationalAngle::new(k, d);
            let above = if include_lo { x >= RationalAngle::integer(lo) } else { x > RationalAngle::integer(lo) };
            if above && x < RationalAngle::integer(hi) {
                set.insert(x);
            }
        }
    }
    set.into_iter().collect()
}

/// The three axes: `a ∈ (0, 2)`, `b ∈ [0, 1)`, `c, d ∈ (0, 1)`.
pub fn axes(profile: &DenominatorProfile) -> (Vec<RationalAngle>, Vec<RationalAngle>, Vec<RationalAngle>) {
    let dens = profile.grid_denominators();
    (grid(&dens, 0, 2, false), grid(&dens, 0, 1, true), grid(&dens, 0, 1, false))
}

/// Candidates with a fixed first angle: `b < a` and `a + b < 2` keep `p, q`
/// inside `(0, 1)`; `c ≥ d` is the `r ↔ s` canonicalization.
pub fn candidates_for_a(profile: &DenominatorProfile, a: RationalAngle) -> Vec<RawQuadruple> {
    let (_, bs, cs) = axes(profile);
    let mut out = Vec::new();
    for &b in bs.iter().take_while(|&&b| b < a) {
        if b + a >= RationalAngle::integer(2) {
            continue;
        }
        for (i, &c) in cs.iter().enumerate() {
            for &d in &cs[..=i] {
                let dens = [a.search_den(), b.search_den(), c.search_den(), d.search_den()];
                if profile.admits(dens) {
                    out.push(RawQuadruple { a, b, c, d });
                }
            }
        }
    }
    out
}

/// All candidates in grid order; duplicate-free since each tuple is canonical.
pub fn enumerate_candidates(profile: &DenominatorProfile) -> impl Iterator<Item = RawQuadruple> + '_ {
    let (a_axis, _, _) = axes(profile);
    a_axis.into_iter().flat_map(move |a| candidates_for_a(profile, a))
}

/// `cos a + cos b + cos c + cos d` in double precision.
pub fn float_sum(x: &RawQuadruple) -> f64 {
    x.angles().iter().map(|a| a.to_f64().cos()).sum()
}

pub fn passes_prefilter(x: &RawQuadruple, tolerance: f64) -> bool {
    float_sum(x).abs() < tolerance
}

/// Float prefilter, then the exact cyclotomic zero test.
pub fn confirm_zero(x: &RawQuadruple, cfg: &SearchConfig) -> bool {
    passes_prefilter(x, cfg.tolerance) && x.cosine_sum().is_zero()
}

struct Partial {
    candidates: usize,
    passes: usize,
    zeros: Vec<RawQuadruple>,
}

fn scan_a(cfg: &SearchConfig, a: RationalAngle) -> Partial {
    let cands = candidates_for_a(&cfg.profile, a);
    let mut passes = 0;
    let mut zeros = Vec::new();
    for x in &cands {
        if passes_prefilter(x, cfg.tolerance) {
            passes += 1;
            if x.cosine_sum().is_zero() {
                zeros.push(*x);
            }
        }
    }
    Partial { candidates: cands.len(), passes, zeros }
}

fn run_pipeline(cfg: &SearchConfig, families: &[FamilySpec]) -> SearchReport {
    let (a_axis, _, _) = axes(&cfg.profile);
    let parts: Vec<Partial> = a_axis.par_iter().map(|&a| scan_a(cfg, a)).collect();
    let candidate_count = parts.iter().map(|p| p.candidates).sum();
    let prefilter_passes = parts.iter().map(|p| p.passes).sum();
    let mut zeros: Vec<RawQuadruple> = parts.into_iter().flat_map(|p| p.zeros).collect();
    zeros.sort();

    let mut rational_lengths = [0usize; 5];
    for z in &zeros {
        rational_lengths[rational_length(z).map_or(0, usize::from)] += 1;
    }

    let quads: BTreeSet<PythagoreanQuadruple> = zeros.iter().filter_map(abcd_to_pqrs).collect();
    let quads: Vec<PythagoreanQuadruple> = quads.into_iter().collect();
    let certs: Vec<_> = quads.par_iter().map(is_realizable).collect();
    let realizable: Vec<PythagoreanQuadruple> =
        quads.iter().zip(&certs).filter(|(_, c)| c.realizable()).map(|(q, _)| *q).collect();
    let degenerate_count = certs.iter().filter(|c| c.g3_sign == 0 || c.g4_sign == 0).count();

    let mut family_members = Vec::new();
    let mut sporadic = Vec::new();
    for q in &realizable {
        let hit = families.iter().find_map(|f| member_of(q, f, cfg.membership).map(|p| (f.id, p)));
        match hit {
            Some((family, params)) => family_members.push(FamilyHit { quadruple: *q, family, params }),
            None => sporadic.push(SporadicSolution {
                quadruple: *q,
                lengths: edge_lengths(q).expect("realizable solution has lengths"),
                volume: volume(q).expect("realizable solution has a volume"),
            }),
        }
    }

    SearchReport {
        profile: cfg.profile,
        candidate_count,
        prefilter_passes,
        raw_solution_count: zeros.len(),
        rational_lengths,
        degenerate_count,
        realizable_count: realizable.len(),
        orbit: OrbitAccounting::of(&realizable),
        family_members,
        sporadic_after_family_filter: sporadic,
        timing: Timing::default(),
    }
}

/// Full pipeline: enumerate, confirm zeros, convert, decide realizability,
/// subtract family members. The output does not depend on `cfg.workers`.
pub fn run_sporadic_search(cfg: &SearchConfig) -> SearchReport {
    let start = Instant::now();
    let families = builtin_families();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().expect("thread pool");
    let mut report = pool.install(|| run_pipeline(cfg, &families));
    report.timing = Timing { elapsed_ms: start.elapsed().as_millis(), workers: pool.current_num_threads() };
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(v: [(i64, i64); 4]) -> RawQuadruple {
        RawQuadruple::from_pairs(v).unwrap()
    }

    #[test]
    fn confirm_zero_examples() {
        let cfg = SearchConfig::default();
        assert!(confirm_zero(&raw([(3, 5), (1, 5), (2, 3), (1, 2)]), &cfg));
        assert!(!confirm_zero(&raw([(1, 3), (1, 3), (1, 3), (1, 3)]), &cfg));
        assert!(confirm_zero(&raw([(1, 5), (3, 5), (2, 3), (1, 2)]), &cfg));
    }

    #[test]
    fn grids_exclude_endpoints() {
        let (a, b, c) = axes(&DenominatorProfile::l0_only());
        assert_eq!(a.len(), 7);
        assert_eq!(b.len(), 4);
        assert_eq!(c.len(), 3);
        assert!(b[0].is_zero());
        assert!(c.iter().all(|x| x.in_open_unit()));
    }

    #[test]
    fn orbit_accounting_counts() {
        let q = |v| PythagoreanQuadruple::from_pairs(v).unwrap();
        let quads = [q([(1, 2), (1, 2), (1, 2), (1, 2)]), q([(2, 3), (1, 3), (3, 5), (1, 5)])];
        let o = OrbitAccounting::of(&quads);
        assert_eq!((o.without_rs_swap, o.without_pq_swap, o.without_either_swap), (3, 3, 5));
    }
}
