//! Certified positivity of the Gram minors over a family's parameter domain.
//!
//! One parameter: exact Taylor jets at both endpoints fix the first
//! non-vanishing order `k` of each minor; an interval enclosure of the `k`-th
//! Taylor coefficient over a short strip then certifies the sign on the strip
//! (Lagrange remainder, lower coefficients vanish exactly). The remaining
//! middle segment is covered by bisection with interval cosines.
//!
//! Two parameters: every family has one of `p, q` fixed at `π/2` and
//! `r + s ≡ π`, so `G₃ = sin(πA)·sin(πB)` for affine `A, B` and `G₄ = G₃²`.
//! Both identities are checked exactly on a sample grid; the domain polygon is
//! then cut along the lines `A = k`, `B = k` and each open cell has constant
//! sign, decided exactly at its centroid.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{FamilyError, FamilySpec, Params, Poly2};
use crate::exact::{CyclotomicNumber, RationalAngle, SignedInterval};
use crate::geometry::{gram_layout, gram_matrix_of};
use crate::ring::{inv_factorial, leading_minor, Jet, Ring};

type Q = Ratio<i64>;

/// Interval precision for the middle cells and strips.
pub const CELL_BITS: u32 = 128;
/// Bisection depth limit for middle cells.
pub const MAX_DEPTH: u32 = 24;
/// Highest Taylor order inspected at an endpoint.
pub const MAX_JET_ORDER: usize = 8;
/// Initial strip width at an endpoint (units of π); halved on failure.
pub const INITIAL_STRIP: (i64, i64) = (1, 48);
const MIN_STRIP_LOG2: u32 = 30;

/// Middle cell with enclosures of both minors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalCell {
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub lo: Q,
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub hi: Q,
    pub depth: u32,
    pub g3: SignedInterval,
    pub g4: SignedInterval,
}

/// Behaviour of one minor at one endpoint, looking into the domain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub t: Q,
    pub minor: u8,
    /// Exact sign of the minor at the endpoint itself.
    pub value_sign: i8,
    /// First Taylor order with a non-zero coefficient (radian variable).
    pub jet_order: usize,
    pub jet_sign: i8,
    /// Strip `[t, t ± width]` on which the sign is certified.
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub strip_width: Q,
    /// Enclosure of the `jet_order`-th Taylor coefficient over the strip.
    pub strip_bound: SignedInterval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonCell {
    pub vertices: Vec<Params>,
    pub centroid: Params,
    pub g3_sign: i8,
    pub g4_sign: i8,
}

/// Part of the printed domain where the family is not realizable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tightening {
    pub excluded: Vec<Params>,
    /// Exact witness inside the excluded part.
    pub witness: Params,
    pub g3_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainCertificate {
    pub family: u8,
    pub max_depth: u32,
    pub cells: Vec<IntervalCell>,
    pub boundary: Vec<BoundaryPoint>,
    pub polygons: Vec<PolygonCell>,
    pub tightenings: Vec<Tightening>,
    pub failures: Vec<String>,
}

impl DomainCertificate {
    fn new(family: u8) -> Self {
        DomainCertificate {
            family,
            max_depth: 0,
            cells: Vec::new(),
            boundary: Vec::new(),
            polygons: Vec::new(),
            tightenings: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Every interior point is certified, except parts listed as tightenings.
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }

    /// Endpoints at which some minor vanishes exactly.
    pub fn boundary_zeros(&self) -> Vec<(Q, u8)> {
        self.boundary.iter().filter(|b| b.value_sign == 0).map(|b| (b.t, b.minor)).collect()
    }
}

fn big(q: Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Affine forms map the open domain into `(0, 1)`: checked at the vertices.
fn check_angle_ranges(f: &FamilySpec, cert: &mut DomainCertificate) {
    let verts = f.domain.vertices();
    for (k, form) in f.angles.iter().enumerate() {
        let vals: Vec<Q> = verts.iter().map(|v| form.eval(v.t, v.u)).collect();
        let in_closed = vals.iter().all(|x| *x >= Q::zero() && *x <= Q::one());
        let stuck = vals.iter().all(|x| x.is_zero()) || vals.iter().all(|x| x.is_one());
        if !in_closed || stuck {
            cert.failures.push(format!("angle {k} leaves (0, π) inside the domain"));
        }
    }
}

/// Jet of `cos(π(a + dir·β·τ/π))` in the radian variable `τ`:
/// coefficient `j` is `(dir·β)^j / j! · cos(π(a + j/2))`.
fn exact_cos_jet(a: Q, slope: Q, order: usize) -> Jet<CyclotomicNumber> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pow = BigRational::one();
    for j in 0..=order {
        let c = CyclotomicNumber::cos_pi(RationalAngle::from_ratio(a + Q::new(j as i64, 2)));
        coeffs.push(c.scale(&(&pow * inv_factorial(j))));
        pow *= big(slope);
    }
    Jet::new(coeffs)
}

/// Same jet with the base point ranging over `[a_lo, a_hi]`.
fn interval_cos_jet(a_lo: Q, a_hi: Q, slope: Q, order: usize) -> Jet<SignedInterval> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pow = BigRational::one();
    for j in 0..=order {
        let shift = Q::new(j as i64, 2);
        let c = SignedInterval::cos_pi_range(&big(a_lo + shift), &big(a_hi + shift), CELL_BITS);
        coeffs.push(c.mul_rational(&(&pow * inv_factorial(j))));
        pow *= big(slope);
    }
    Jet::new(coeffs)
}

fn minor_jets<T: Ring>(cos: [Jet<T>; 4], one: Jet<T>) -> [Jet<T>; 2] {
    let [cp, cq, cr, cs] = cos;
    let g = gram_layout(one, cp, cq, cr, cs);
    [leading_minor(&g, 3), leading_minor(&g, 4)]
}

/// Range of an affine one-parameter form over `[lo, hi]`.
fn form_range(form: &Poly2, lo: Q, hi: Q) -> (Q, Q) {
    let (a, b) = (form.eval(lo, Q::zero()), form.eval(hi, Q::zero()));
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn one_param(f: &FamilySpec, lo: Q, hi: Q, cert: &mut DomainCertificate) {
    let mut inner = (lo, hi);
    for (end, dir) in [(lo, Q::one()), (hi, -Q::one())] {
        let exact: [Jet<CyclotomicNumber>; 4] =
            f.angles.map(|form| exact_cos_jet(form.eval(end, Q::zero()), dir * form.t, MAX_JET_ORDER));
        let one = Jet::constant(CyclotomicNumber::one(), MAX_JET_ORDER);
        let jets = minor_jets(exact, one);
        let mut orders = [(0usize, 0i8); 2];
        for (m, jet) in jets.iter().enumerate() {
            let found = jet.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero());
            match found {
                Some((k, c)) => orders[m] = (k, c.sign().expect("Gram minors are real")),
                None => {
                    cert.failures.push(format!("minor G{} vanishes to order {MAX_JET_ORDER} at t = {end}", m + 3));
                    return;
                }
            }
        }
        let value_signs = [jets[0].coeffs[0].sign().unwrap(), jets[1].coeffs[0].sign().unwrap()];
        if orders.iter().any(|&(_, s)| s < 0) {
            cert.failures.push(format!("a minor is negative next to t = {end}"));
            return;
        }
        // shrink the strip until every minor's k-th coefficient is certified positive on it
        let mut width = Q::new(INITIAL_STRIP.0, INITIAL_STRIP.1);
        let mut bounds = None;
        for _ in 0..MIN_STRIP_LOG2 {
            let (s_lo, s_hi) = if dir.is_positive() { (end, end + width) } else { (end - width, end) };
            let cos: [Jet<SignedInterval>; 4] = f.angles.map(|form| {
                let (a, b) = form_range(&form, s_lo, s_hi);
                interval_cos_jet(a, b, dir * form.t, MAX_JET_ORDER)
            });
            let one = Jet::constant(SignedInterval::one(CELL_BITS), MAX_JET_ORDER);
            let mj = minor_jets(cos, one);
            let b = [mj[0].coeffs[orders[0].0].clone(), mj[1].coeffs[orders[1].0].clone()];
            if b.iter().all(SignedInterval::is_positive) {
                bounds = Some(b);
                break;
            }
            width /= 2;
        }
        let Some(bounds) = bounds else {
            cert.failures.push(format!("no certified strip at t = {end}"));
            return;
        };
        for (m, bound) in bounds.into_iter().enumerate() {
            cert.boundary.push(BoundaryPoint {
                t: end,
                minor: m as u8 + 3,
                value_sign: value_signs[m],
                jet_order: orders[m].0,
                jet_sign: orders[m].1,
                strip_width: width,
                strip_bound: bound,
            });
        }
        if dir.is_positive() {
            inner.0 = end + width;
        } else {
            inner.1 = end - width;
        }
    }
    if inner.0 < inner.1 {
        bisect(f, inner.0, inner.1, 0, cert);
    }
}

fn cell_minors(f: &FamilySpec, lo: Q, hi: Q) -> [SignedInterval; 2] {
    let cos = f.angles.map(|form| {
        let (a, b) = form_range(&form, lo, hi);
        SignedInterval::cos_pi_range(&big(a), &big(b), CELL_BITS)
    });
    let [cp, cq, cr, cs] = cos;
    let g = gram_layout(SignedInterval::one(CELL_BITS), cp, cq, cr, cs);
    [leading_minor(&g, 3), leading_minor(&g, 4)]
}

fn bisect(f: &FamilySpec, lo: Q, hi: Q, depth: u32, cert: &mut DomainCertificate) {
    let [g3, g4] = cell_minors(f, lo, hi);
    if g3.is_positive() && g4.is_positive() {
        cert.max_depth = cert.max_depth.max(depth);
        cert.cells.push(IntervalCell { lo, hi, depth, g3, g4 });
        return;
    }
    if depth >= MAX_DEPTH {
        cert.failures.push(format!("cell [{lo}, {hi}] not certified at depth {depth}"));
        cert.cells.push(IntervalCell { lo, hi, depth, g3, g4 });
        return;
    }
    let mid = (lo + hi) / 2;
    bisect(f, lo, mid, depth + 1, cert);
    bisect(f, mid, hi, depth + 1, cert);
}

/// Affine `A`, `B` with `G₃ = sin(πA)·sin(πB)`, or why the structure is absent.
fn product_structure(f: &FamilySpec) -> Result<(Poly2, Poly2), String> {
    let half = Poly2::constant(Q::new(1, 2));
    let [p, q, r, s] = f.angles;
    let other = if p == half {
        q
    } else if q == half {
        p
    } else {
        return Err("neither p nor q is fixed at π/2".into());
    };
    if r + s != Poly2::constant(Q::one()) {
        return Err("r + s is not identically π".into());
    }
    // G₃ = 1 − cos²o − cos²r = sin²o − sin²(r − ½)
    Ok((other - r + half, other + r - half))
}

/// Laurent-degree argument as in identity verification: `G₄ − G₃²` has
/// degree at most `6·max(2|β|)` per variable.
fn check_product_identities(f: &FamilySpec, a: &Poly2, b: &Poly2) -> Result<(), String> {
    let max_slope = f.angles.iter().chain([a, b]).map(|x| x.t.abs().max(x.u.abs())).max().unwrap_or_default();
    let per_cos = (max_slope * 2).to_integer();
    let need = 2 * (6 * per_cos) as usize + 1;
    let n = need.max(super::identity::MIN_SAMPLES);
    assert!(n < 48, "sample points would repeat modulo 4");
    for i in 0..n {
        for j in 0..n {
            let (t, u) = (Q::new(i as i64, 12), Q::new(j as i64, 12));
            let [w, x, y, z] = f.angles.map(|form| RationalAngle::from_ratio(form.eval(t, u)));
            let g = gram_matrix_of(w, x, y, z);
            let g3 = g.minor(3);
            let sa = CyclotomicNumber::sin_pi(RationalAngle::from_ratio(a.eval(t, u)));
            let sb = CyclotomicNumber::sin_pi(RationalAngle::from_ratio(b.eval(t, u)));
            if g3 != sa * sb {
                return Err(format!("G3 is not sin·sin at t = {t}, u = {u}"));
            }
            if g.det() != g3.square() {
                return Err(format!("G4 is not G3² at t = {t}, u = {u}"));
            }
        }
    }
    Ok(())
}

/// Clips a convex polygon to `form ≥ k` (`keep_above`) or `form ≤ k`.
fn clip(poly: &[Params], form: &Poly2, k: Q, keep_above: bool) -> Vec<Params> {
    let side = |p: &Params| {
        let v = form.eval(p.t, p.u) - k;
        if keep_above {
            v
        } else {
            -v
        }
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (cur, nxt) = (poly[i], poly[(i + 1) % poly.len()]);
        let (sc, sn) = (side(&cur), side(&nxt));
        if sc >= Q::zero() {
            out.push(cur);
        }
        if (sc > Q::zero() && sn < Q::zero()) || (sc < Q::zero() && sn > Q::zero()) {
            let lambda = sc / (sc - sn);
            out.push(Params::tu(cur.t + lambda * (nxt.t - cur.t), cur.u + lambda * (nxt.u - cur.u)));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn twice_area(poly: &[Params]) -> Q {
    let mut a = Q::zero();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        a += p.t * q.u - q.t * p.u;
    }
    a
}

/// Cuts every cell along the integer level lines of `form`.
fn split_along(cells: Vec<Vec<Params>>, form: &Poly2) -> Vec<Vec<Params>> {
    let mut out = Vec::new();
    for cell in cells {
        let vals: Vec<Q> = cell.iter().map(|p| form.eval(p.t, p.u)).collect();
        let lo = vals.iter().min().copied().unwrap_or_default();
        let hi = vals.iter().max().copied().unwrap_or_default();
        let mut rest = cell;
        let mut k = lo.floor() + Q::one();
        while k < hi {
            out.push(clip(&rest, form, k, false));
            rest = clip(&rest, form, k, true);
            k += Q::one();
        }
        out.push(rest);
    }
    out.retain(|c| c.len() >= 3 && !twice_area(c).is_zero());
    out
}

fn two_param(f: &FamilySpec, cert: &mut DomainCertificate) {
    let (a, b) = match product_structure(f) {
        Ok(ab) => ab,
        Err(e) => {
            cert.failures.push(e);
            return;
        }
    };
    if let Err(e) = check_product_identities(f, &a, &b) {
        cert.failures.push(e);
        return;
    }
    let cells = split_along(split_along(vec![f.domain.vertices()], &a), &b);
    for cell in cells {
        let n = Q::from_integer(cell.len() as i64);
        let centroid = Params::tu(cell.iter().map(|p| p.t).sum::<Q>() / n, cell.iter().map(|p| p.u).sum::<Q>() / n);
        let [w, x, y, z] = f.angles_at(centroid);
        let g = gram_matrix_of(w, x, y, z);
        let g3 = g.minor(3).sign().expect("real minor");
        let g4 = g.det().sign().expect("real minor");
        if g3 > 0 && g4 > 0 {
            cert.polygons.push(PolygonCell { vertices: cell, centroid, g3_sign: g3, g4_sign: g4 });
        } else {
            cert.tightenings.push(Tightening { excluded: cell, witness: centroid, g3_sign: g3 });
        }
    }
    if cert.polygons.is_empty() {
        cert.failures.push("no realizable cell".into());
    }
}

/// Certifies positivity of `G₃`, `G₄` on the open domain, recording
/// endpoint behaviour and any non-realizable parts of the printed domain.
pub fn verify_domain(f: &FamilySpec) -> Result<DomainCertificate, FamilyError> {
    let mut cert = DomainCertificate::new(f.id);
    check_angle_ranges(f, &mut cert);
    match f.domain {
        super::FamilyDomain::Interval { lo, hi } => one_param(f, lo, hi, &mut cert),
        _ => two_param(f, &mut cert),
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin_families;

    #[test]
    fn family_1_is_certified() {
        let cert = verify_domain(&builtin_families()[0]).unwrap();
        assert!(cert.certified(), "{:?}", cert.failures);
        assert_eq!(cert.boundary.len(), 4);
        // the middle cells and strips tile [0, 1/6]
        let mut spans: Vec<(Q, Q)> = cert.cells.iter().map(|c| (c.lo, c.hi)).collect();
        spans.sort();
        let first_strip = cert.boundary[0].strip_width;
        let last_strip = cert.boundary[3].strip_width;
        assert_eq!(spans.first().unwrap().0, first_strip);
        assert_eq!(spans.last().unwrap().1, Q::new(1, 6) - last_strip);
        assert!(spans.windows(2).all(|w| w[0].1 == w[1].0));
    }

    #[test]
    fn family_35_tightening_witness() {
        let cert = verify_domain(&builtin_families()[34]).unwrap();
        assert!(cert.certified(), "{:?}", cert.failures);
        assert_eq!(cert.tightenings.len(), 1);
        let w = cert.tightenings[0].witness;
        // excluded part is t + u > 1
        assert!(w.t + w.u > Q::one());
        assert_eq!(cert.tightenings[0].g3_sign, -1);
        assert!(cert.polygons.iter().all(|c| c.centroid.t + c.centroid.u < Q::one()));
    }

    #[test]
    fn clipping_a_square() {
        let sq = vec![
            Params::tu(Q::zero(), Q::zero()),
            Params::tu(Q::from_integer(2), Q::zero()),
            Params::tu(Q::from_integer(2), Q::from_integer(2)),
            Params::tu(Q::zero(), Q::from_integer(2)),
        ];
        let cells = split_along(vec![sq], &Poly2::param_t());
        assert_eq!(cells.len(), 2);
        assert!(cells.iter().all(|c| twice_area(c) == Q::from_integer(4)));
    }

    #[test]
    fn product_structure_matches_family_35() {
        // G₃ = cos²u − cos²t = sin(π(t − u))·sin(π(1 − t − u))
        let (a, b) = product_structure(&builtin_families()[34]).unwrap();
        assert_eq!(a, Poly2::affine(Q::zero(), Q::one(), -Q::one()));
        assert_eq!(b, Poly2::affine(Q::one(), -Q::one(), -Q::one()));
    }
}
