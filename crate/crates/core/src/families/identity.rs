//! Exact verification that a family solves the quadruple equation identically.
//!
//! With `z = e^{iπt/2}` each `cos(π(α + βt + γu))` is a Laurent monomial pair of
//! degree `2|β|` in `z` (and `2|γ|` in `w = e^{iπu/2}`), so the residual is a
//! Laurent polynomial of degree at most `D` in each variable. Clearing
//! denominators gives a polynomial of degree `2D`, which vanishes identically
//! once it vanishes on a grid with more than `2D` distinct values per axis.
//! Sample points `k/12` are distinct modulo 4, hence give distinct `z`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{FamilyError, FamilySpec, Params, Poly2};
use crate::exact::angle::format_ratio;
use crate::exact::RationalAngle;
use crate::geometry::residual_of;

type Q = Ratio<i64>;

/// Floor on samples per axis, well above the largest degree bound that occurs.
pub const MIN_SAMPLES: usize = 33;
const SAMPLE_DEN: i64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub family: u8,
    /// Laurent degree bounds in `z` and `w`.
    pub degree_t: i64,
    pub degree_u: i64,
    pub samples_t: usize,
    pub samples_u: usize,
    /// Volume polynomial equals the angle formula as a polynomial.
    pub volume_matches: bool,
}

fn twice(x: Q, family: u8) -> Result<i64, FamilyError> {
    let d = x * 2;
    if !d.is_integer() {
        return Err(FamilyError::Unsupported { family, reason: format!("parameter slope {x} is not a half-integer") });
    }
    Ok(d.to_integer().abs())
}

/// Laurent degree bounds `(D_t, D_u)` of the residual.
fn degree_bounds(f: &FamilySpec) -> Result<(i64, i64), FamilyError> {
    let mut dt = [0i64; 4];
    let mut du = [0i64; 4];
    for (k, form) in f.angles.iter().enumerate() {
        dt[k] = twice(form.t, f.id)?;
        du[k] = twice(form.u, f.id)?;
    }
    let bound = |d: [i64; 4]| (d[0] + d[1]).max(d[2]).max(d[3]);
    Ok((bound(dt), bound(du)))
}

/// `½(r(2 − r)/2 + p² + q² + s(2 − s)/2 − 1)` as a polynomial in the parameters.
pub fn derived_volume(f: &FamilySpec) -> Poly2 {
    let [p, q, r, s] = f.angles;
    let two = Poly2::constant(Q::from_integer(2));
    let half = Q::new(1, 2);
    let side = |x: Poly2| x.mul_affine(&(two - x)).scale(half);
    (side(r) + p.mul_affine(&p) + q.mul_affine(&q) + side(s) - Poly2::constant(Q::from_integer(1))).scale(half)
}

pub fn verify_identity(f: &FamilySpec) -> Result<IdentityReport, FamilyError> {
    let (dt, du) = degree_bounds(f)?;
    let samples_t = MIN_SAMPLES.max(2 * dt as usize + 2);
    let samples_u = if f.dimension() == 2 { MIN_SAMPLES.max(2 * du as usize + 2) } else { 1 };
    assert!(samples_t.max(samples_u) < 4 * SAMPLE_DEN as usize, "sample points would repeat modulo 4");
    if f.dimension() == 1 && du != 0 {
        return Err(FamilyError::Unsupported { family: f.id, reason: "one-parameter family uses u".into() });
    }
    for i in 0..samples_t {
        for j in 0..samples_u {
            let p = Params::tu(Q::new(i as i64, SAMPLE_DEN), Q::new(j as i64, SAMPLE_DEN));
            let [a, b, c, d] = f.angles.map(|x| RationalAngle::from_ratio(x.eval(p.t, p.u)));
            if !residual_of(a, b, c, d).is_zero() {
                return Err(FamilyError::IdentityFails { family: f.id, t: format_ratio(&p.t), u: format_ratio(&p.u) });
            }
        }
    }
    let derived = derived_volume(f);
    if derived != f.volume {
        return Err(FamilyError::VolumeMismatch {
            family: f.id,
            table: f.volume.to_text(2),
            derived: derived.to_text(2),
        });
    }
    Ok(IdentityReport { family: f.id, degree_t: dt, degree_u: du, samples_t, samples_u, volume_matches: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin_families;
    use num_traits::Zero;

    #[test]
    fn family_11_identity_and_degree() {
        let f = &builtin_families()[10];
        let r = verify_identity(f).unwrap();
        // t/2 in both p and q
        assert_eq!(r.degree_t, 2);
        assert_eq!(r.samples_t, MIN_SAMPLES);
        assert!(r.volume_matches);
    }

    #[test]
    fn corrupted_family_is_rejected() {
        let mut f = builtin_families()[10].clone();
        f.angles[2].c += Q::new(1, 12);
        assert!(matches!(verify_identity(&f), Err(FamilyError::IdentityFails { family: 11, .. })));
        let mut g = builtin_families()[10].clone();
        g.volume.c += Q::new(1, 144);
        assert!(matches!(verify_identity(&g), Err(FamilyError::VolumeMismatch { family: 11, .. })));
    }

    #[test]
    fn derived_volume_of_family_4() {
        // family 4 has volume πt/3: no constant and no quadratic term
        let v = derived_volume(&builtin_families()[3]);
        assert!(v.c.is_zero() && v.tt.is_zero());
        assert_eq!(v.t, Q::new(1, 3));
    }
}
